#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use skewinfo::random::random_density_with_rank;
use skewinfo::{gisin_state, sld_metric, wy_metric, wyd_metric, Matrix, Metric, State, WydParameter};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn wyd(alpha: f64) -> Metric {
    wyd_metric(WydParameter::new(alpha).unwrap())
}

/// The metrics exercised by property tests.
pub fn metrics() -> Vec<Metric> {
    vec![wy_metric(), wyd(0.3), wyd(1.0 / 3.0), sld_metric()]
}

/// Random state of random rank, or a Gisin state on every fourth draw when `d = 4`.
pub fn any_state(rng: &mut StdRng, d: usize) -> State {
    if d == 4 && rng.random_range(0..4) == 0 {
        return gisin_state(rng.random_range(0.0..=1.0), rng.random_range(0.0..std::f64::consts::TAU)).unwrap();
    }
    let rank = rng.random_range(1..=d);
    random_density_with_rank(rng, d, rank)
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

pub fn max_abs_diff(a: &Matrix, b: &Matrix) -> f64 {
    a.entries().iter().zip(b.entries()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn alpha(a: f64) -> WydParameter<f64> {
    WydParameter::new(a).unwrap()
}
