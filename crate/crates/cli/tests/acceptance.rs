//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::f64::consts::{PI, TAU};
use std::process::Command;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use skewinfo::random::{random_channel, random_density, random_density_with_rank, random_hermitian, random_vector};
use skewinfo::{
    channel_bounds, channel_bounds_with, enumerate_assignments, gisin_state, lifted_pauli, norm_inequality_check, observable_bounds, pauli,
    skew_information, sld_metric, wy_metric, wyd_metric, wyd_skew_information_direct, Channel, DampingForm, Matrix, Metric, Obs, Pauli,
    Search, Side, State, WydParameter, C64, DEFAULT_SEARCH_BUDGET,
};
use skewinfo_cli::sweep::{circle_state, example3_channels, example4_channels};

struct Outcome {
    pass: bool,
    detail: String,
}

type Check = fn() -> Outcome;

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn wyd(a: f64) -> Metric {
    wyd_metric(WydParameter::new(a).unwrap())
}

fn registered_metrics() -> Vec<Metric> {
    vec![wy_metric(), sld_metric(), wyd(0.3), wyd(1.0 / 3.0), wyd(0.5), wyd(0.8)]
}

fn random_state(rng: &mut StdRng, d: usize) -> State {
    let rank = rng.random_range(1..=d);
    random_density_with_rank(rng, d, rank)
}

fn random_observables(rng: &mut StdRng, d: usize, n: usize) -> Vec<Obs> {
    (0..n).map(|_| Obs::new(random_hermitian(rng, d)).unwrap()).collect()
}

fn paulis() -> Vec<Obs> {
    [Pauli::X, Pauli::Y, Pauli::Z].into_iter().map(pauli).collect()
}

fn grid(start: f64, stop: f64, count: usize) -> Vec<f64> {
    (0..count).map(|k| if k + 1 == count { stop } else { start + (stop - start) * k as f64 / (count - 1) as f64 }).collect()
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(1001);
    let mut worst = 0.0f64;
    let cases = 600;
    for case in 0..cases {
        let d = [2, 3, 4][case % 3];
        let rho = if d == 4 && case % 2 == 0 {
            gisin_state(rng.random_range(0.0..=1.0), rng.random_range(0.0..TAU)).unwrap()
        } else {
            random_state(&mut rng, d)
        };
        let x: Matrix = random_hermitian(&mut rng, d);
        let a = rng.random_range(0.01..0.99);
        let spectral = skew_information(&wyd(a), &rho, &x).unwrap();
        let direct = wyd_skew_information_direct(WydParameter::new(a).unwrap(), &rho, &x).unwrap();
        worst = worst.max((spectral - direct).abs() / spectral.abs().max(direct.abs()).max(1.0));
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(worst <= 1e-10 && secs < 10.0, format!("{cases} triples, max relative gap {worst:.1e}, {secs:.2} s"))
}

fn saturation() -> Outcome {
    let mut rng = StdRng::seed_from_u64(1002);
    let metrics = registered_metrics();
    let mut worst = 0.0f64;
    for case in 0..200 {
        let d = rng.random_range(2..=4);
        let rho = random_state(&mut rng, d);
        let obs = random_observables(&mut rng, d, 2);
        let r = observable_bounds(&metrics[case % metrics.len()], &rho, &obs).unwrap();
        worst = worst.max((r.sum - r.lb3).abs()).max((r.sum - r.lb4).abs());
    }
    outcome(worst <= 1e-10, format!("200 pairs over {} metrics, max |sum - lb3|, |sum - lb4| = {worst:.1e}", metrics.len()))
}

fn validity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(1003);
    let metrics = registered_metrics();
    let mut worst_obs = f64::NEG_INFINITY;
    for case in 0..600 {
        let d = [2, 3, 4][case % 3];
        let rho = random_state(&mut rng, d);
        let n = rng.random_range(2..=5);
        let obs = random_observables(&mut rng, d, n);
        let r = observable_bounds(&metrics[case % metrics.len()], &rho, &obs).unwrap();
        for b in [r.lb1, Some(r.lb2), Some(r.lb3), Some(r.lb4)].into_iter().flatten() {
            worst_obs = worst_obs.max(b - r.sum);
        }
    }
    let mut worst_ch = f64::NEG_INFINITY;
    for case in 0..600 {
        let big_n = rng.random_range(2..=3);
        let n = rng.random_range(1..=3);
        let rho: State = random_density(&mut rng, 2);
        let chans: Vec<Channel> = (0..big_n).map(|_| random_channel(&mut rng, 2, n)).collect();
        let r = channel_bounds(&metrics[case % metrics.len()], &rho, &chans).unwrap();
        for b in [r.clb1.as_ref(), Some(&r.clb2), Some(&r.clb3), Some(&r.clb4)].into_iter().flatten() {
            worst_ch = worst_ch.max(b.value - r.sum);
        }
    }
    outcome(
        worst_obs <= 1e-9 && worst_ch <= 1e-9,
        format!("600 observable and 600 channel cases, max bound - sum = {worst_obs:.1e} / {worst_ch:.1e}"),
    )
}

fn dominance() -> Outcome {
    let obs = paulis();
    let mut worst_grid = f64::INFINITY;
    for theta in grid(0.0, PI, 50) {
        let rho = circle_state(theta).unwrap();
        for a in grid(0.01, 0.99, 50) {
            let r = observable_bounds(&wyd(a), &rho, &obs).unwrap();
            worst_grid = worst_grid.min(r.lb4 - r.lb2);
        }
    }
    let mut rng = StdRng::seed_from_u64(1004);
    let metrics = registered_metrics();
    let mut worst_random = f64::INFINITY;
    for case in 0..1000 {
        let d = rng.random_range(2..=4);
        let rho = random_state(&mut rng, d);
        let n = rng.random_range(2..=5);
        let obs = random_observables(&mut rng, d, n);
        let r = observable_bounds(&metrics[case % metrics.len()], &rho, &obs).unwrap();
        worst_random = worst_random.min(r.lb4 - r.lb2);
    }
    outcome(
        worst_grid >= -1e-9 && worst_random >= -1e-9,
        format!("min lb4 - lb2: {worst_grid:.3e} on the 50x50 grid, {worst_random:.3e} on 1000 random cases"),
    )
}

fn gisin_ordering() -> Outcome {
    let obs: Vec<Obs> = [Pauli::X, Pauli::Y, Pauli::Z].into_iter().map(|p| lifted_pauli(p, Side::Right)).collect();
    let m = wyd(1.0 / 3.0);
    let (mut d31, mut d42) = (f64::INFINITY, f64::INFINITY);
    for lambda in grid(0.0, 1.0, 20) {
        for theta in grid(0.0, TAU, 20) {
            let r = observable_bounds(&m, &gisin_state(lambda, theta).unwrap(), &obs).unwrap();
            d31 = d31.min(r.lb3 - r.lb1.unwrap());
            d42 = d42.min(r.lb4 - r.lb2);
        }
    }
    outcome(d31 >= -1e-9 && d42 >= -1e-9, format!("min lb3 - lb1 = {d31:.3e}, min lb4 - lb2 = {d42:.3e}"))
}

fn channel_claims() -> Outcome {
    let m = wyd(1.0 / 3.0);
    let ex3 = example3_channels(0.7, DampingForm::Standard).unwrap();
    let ex4 = example4_channels(0.7).unwrap();
    let mut worst = f64::INFINITY;
    let (mut ours, mut prior) = (0, 0);
    for theta in grid(0.0, PI, 100) {
        let rho = circle_state(theta).unwrap();
        let r = channel_bounds(&m, &rho, &ex3).unwrap();
        worst = worst.min(r.clb4.value - r.clb2.value);
        let r = channel_bounds(&m, &rho, &ex4).unwrap();
        let gap = r.clb3.value.max(r.clb4.value) - r.clb1.unwrap().value.max(r.clb2.value);
        if gap > 0.0 {
            ours += 1;
        } else if gap < 0.0 {
            prior += 1;
        }
    }
    outcome(
        worst >= -1e-9 && ours > 0 && prior > 0,
        format!("min clb4 - clb2 = {worst:.3e}; crossover: ours ahead at {ours}, prior ahead at {prior} of 100 points"),
    )
}

fn norm_inequalities() -> Outcome {
    let mut rng = StdRng::seed_from_u64(1007);
    let mut failures = 0;
    let mut worst_chain = f64::INFINITY;
    for _ in 0..1000 {
        let n = rng.random_range(2..=6);
        let d = rng.random_range(1..=8);
        let vs: Vec<Vec<C64>> = (0..n).map(|_| random_vector(&mut rng, d)).collect();
        let r = norm_inequality_check(&vs).unwrap();
        let tol = 1e-9 * r.lhs.max(1.0);
        if r.lhs < r.plus_root_bound - tol || r.lhs < r.minus_root_bound - tol {
            failures += 1;
        }
        worst_chain = worst_chain.min(r.minus_root_bound - r.total_norm_bound);
    }
    outcome(failures == 0 && worst_chain >= -1e-9, format!("1000 families, {failures} violations, min chain gap {worst_chain:.3e}"))
}

fn special_cases() -> Outcome {
    let mut rng = StdRng::seed_from_u64(1008);
    let mut worst = 0.0f64;
    let mut commuting = 0.0f64;
    for _ in 0..200 {
        let d = rng.random_range(2..=4);
        let rho = random_state(&mut rng, d);
        let x: Matrix = random_hermitian(&mut rng, d);
        let a = skew_information(&wyd(0.5), &rho, &x).unwrap();
        let b = skew_information(&wy_metric(), &rho, &x).unwrap();
        worst = worst.max((a - b).abs());
        let f = rho.spectral().map_eigenvalues(|l| l * l - 2.0 * l);
        for m in registered_metrics() {
            commuting = commuting.max(skew_information(&m, &rho, &f).unwrap().abs());
        }
    }
    outcome(worst <= 1e-10 && commuting <= 1e-12, format!("max |wyd(1/2) - wy| = {worst:.1e}, max commuting value = {commuting:.1e}"))
}

fn enumeration() -> Outcome {
    let found: BTreeSet<String> = enumerate_assignments(3, 2).unwrap().iter().map(|a| a.to_string()).collect();
    let expected: BTreeSet<String> =
        ["{(1),(1),(1)}", "{(1),(12),(12)}", "{(1),(1),(12)}", "{(1),(12),(1)}"].into_iter().map(String::from).collect();
    let m = wyd(1.0 / 3.0);
    let chans = example3_channels(0.7, DampingForm::Standard).unwrap();
    let mut worst = 0.0f64;
    for theta in grid(0.0, PI, 100) {
        let rho = circle_state(theta).unwrap();
        let reduced = channel_bounds(&m, &rho, &chans).unwrap();
        let full = channel_bounds_with(&m, &rho, &chans, Search::Exhaustive, DEFAULT_SEARCH_BUDGET).unwrap();
        for (a, b) in [
            (reduced.clb1.unwrap().value, full.clb1.unwrap().value),
            (reduced.clb2.value, full.clb2.value),
            (reduced.clb3.value, full.clb3.value),
            (reduced.clb4.value, full.clb4.value),
        ] {
            worst = worst.max((a - b).abs());
        }
    }
    outcome(
        found == expected && worst <= 1e-12,
        format!("{} reduced cases {:?}; max reduced vs 8-case gap {worst:.1e}", found.len(), found),
    )
}

fn cli_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_skewinfo");
    let run = |extra: &[&str]| Command::new(bin).arg("example1").args(extra).output().expect("binary runs");
    let first = run(&[]);
    let second = run(&[]);
    let identical = first.status.success() && !first.stdout.is_empty() && first.stdout == second.stdout;
    let faulty = run(&["--inject-fault"]);
    let code = faulty.status.code();
    outcome(
        identical && code == Some(4),
        format!("{} bytes, identical = {identical}; fault injection exit code {code:?}", first.stdout.len()),
    )
}

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("spectral and direct-trace routes agree", oracle_equivalence),
        ("two observables saturate lb3 and lb4", saturation),
        ("bounds never exceed the sums", validity),
        ("lb4 dominates lb2", dominance),
        ("Gisin grid: lb3 >= lb1 and lb4 >= lb2", gisin_ordering),
        ("channel examples: clb4 >= clb2 and crossover", channel_claims),
        ("vector norm inequalities", norm_inequalities),
        ("wyd(1/2) = wy and commuting inputs vanish", special_cases),
        ("three channels, two Kraus operators: 4 cases", enumeration),
        ("CLI determinism and self-check", cli_determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let r = check();
        if !r.pass {
            failed += 1;
        }
        println!("criterion {:>2} {} {name}: {}", k + 1, if r.pass { "PASS" } else { "FAIL" }, r.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
