mod common;

use common::{max_abs_diff, rng};
use skewinfo::random::{random_channel, random_density};
use skewinfo::{
    amplitude_damping_channel, bit_flip_channel, gisin_state, pad_kraus, phase_flip_channel, rotation, unitary_channel, Channel, Matrix,
    State,
};
use std::f64::consts::{FRAC_PI_8, TAU};

#[test]
fn gisin_grid_is_positive() {
    for i in 0..20 {
        for j in 0..20 {
            let lambda = i as f64 / 19.0;
            let theta = TAU * j as f64 / 19.0;
            let rho = gisin_state(lambda, theta).unwrap();
            assert!(rho.min_eigenvalue() >= -1e-12, "λ={lambda} θ={theta}");
            assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn padding_preserves_channel_action() {
    let mut rng = rng(21);
    let channels: Vec<Channel> = vec![
        bit_flip_channel(0.7).unwrap(),
        phase_flip_channel(0.7).unwrap(),
        unitary_channel(rotation(FRAC_PI_8)).unwrap(),
        amplitude_damping_channel(0.25).unwrap(),
        random_channel(&mut rng, 2, 3),
    ];
    let padded = pad_kraus(&channels).unwrap();
    assert!(padded.iter().all(|c| c.kraus_count() == 3));
    for _ in 0..50 {
        let rho: State = random_density(&mut rng, 2);
        for (c, p) in channels.iter().zip(&padded) {
            let before = c.apply(rho.matrix()).unwrap();
            let after = p.apply(rho.matrix()).unwrap();
            assert!(max_abs_diff(&before, &after) <= 1e-10);
        }
    }
}

#[test]
fn channels_preserve_trace() {
    let mut rng = rng(22);
    for _ in 0..20 {
        let rho: State = random_density(&mut rng, 3);
        let ch = random_channel(&mut rng, 3, 4);
        let out: Matrix = ch.apply(rho.matrix()).unwrap();
        assert!((out.trace().re - 1.0).abs() < 1e-12);
        assert!(State::new(out).is_ok());
    }
}
