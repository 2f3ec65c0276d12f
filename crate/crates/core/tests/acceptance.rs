//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! status if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use linwave::algebra::{rational, Rational, SymScalar};
use linwave::heisenberg::{reduce_to_second_order, spin_orbit_decompose, Coupling, Monomial, OperatorPolynomial};
use linwave::identities::{
    check_commutation_identity, check_factorization, reduce_spin1_to_7, run_all, CheckReport,
};
use linwave::spectrum::{analytic_spectrum, compare_spectra, fd_radial_solve, FdConfig, Window};
use linwave::spin_models::{build_model, Spin};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn failures(reports: &[CheckReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| {
            let at = r.witness.as_ref().map(|w| w.location.clone()).unwrap_or_default();
            format!("{} (spin {}) at {at}", r.check_name, r.spin)
        })
        .collect()
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    let mut failed = Vec::new();
    for spin in Spin::ALL {
        let reports = run_all(&build_model(spin)).map_err(|e| e.to_string())?;
        count += reports.len();
        failed.extend(failures(&reports));
    }
    let elapsed = start.elapsed();
    ensure(failed.is_empty(), || failed.join("; "))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("{count} exact checks over three spins in {elapsed:.2?}"))
}

fn factorization() -> Outcome {
    let reports: Vec<CheckReport> = Spin::ALL.iter().map(|&s| check_factorization(&build_model(s))).collect();
    let failed = failures(&reports);
    ensure(failed.is_empty(), || failed.join("; "))?;
    Ok("(A'E − B·p + C')(AE + B·p + C)S(p) = (2mE − p²)S(p) for 1/2, 1, 3/2".into())
}

fn decomposition(model: &linwave::SpinModel) -> Result<(Rational, Rational), String> {
    let h = reduce_to_second_order(model, Coupling::Standard).map_err(|e| e.to_string())?;
    let d = spin_orbit_decompose(&h, model).map_err(|e| e.to_string())?;
    ensure(d.kinetic_ok && d.potential_ok, || format!("spin {}: kinetic or potential term wrong", model.spin))?;
    Ok((d.c, d.kappa))
}

fn oscillator_reduction() -> Outcome {
    let expected = [(Spin::Half, (-3, 2), (2, 1)), (Spin::One, (-3, 2), (1, 1)), (Spin::ThreeHalves, (-3, 2), (2, 3))];
    let mut kappas = Vec::new();
    for (spin, c, k) in expected {
        let (got_c, got_k) = decomposition(&build_model(spin))?;
        let (want_c, want_k) = (rational::frac(c.0, c.1), rational::frac(k.0, k.1));
        ensure(got_c == want_c && got_k == want_k, || {
            format!("spin {spin}: (c, κ) = ({got_c}, {got_k}), expected ({want_c}, {want_k})")
        })?;
        kappas.push(got_k);
    }
    let ratios = [&kappas[1] / &kappas[0], &kappas[2] / &kappas[0]];
    ensure(ratios == [rational::frac(1, 2), rational::frac(1, 3)], || format!("κ ratios {ratios:?}"))?;
    Ok("(c, κ) = (−3/2, 2), (−3/2, 1), (−3/2, 2/3); κ ratios 1 : 1/2 : 1/3".into())
}

fn free_hamiltonian(n: usize) -> OperatorPolynomial {
    let inv_two_m = SymScalar::frac(1, 2) * SymScalar::symbols(-1, 0, 0);
    let mut out = OperatorPolynomial::zero(n, n);
    for i in 0..3 {
        let mut mono = Monomial::ONE;
        mono.p[i] = 2;
        out = &out + &OperatorPolynomial::scalar(mono, inv_two_m.clone(), n);
    }
    out
}

fn free_particle() -> Outcome {
    for spin in Spin::ALL {
        let model = build_model(spin);
        let h = reduce_to_second_order(&model, Coupling::Free).map_err(|e| e.to_string())?;
        ensure(h == free_hamiltonian(model.physical_dim()), || format!("spin {spin}: H ≠ p²/2m"))?;
    }
    Ok("ω = 0 gives p²/2m·1 for all spins".into())
}

fn seven_components() -> Outcome {
    let full = build_model(Spin::One);
    let (reduced, report) = reduce_spin1_to_7(&full).map_err(|e| e.to_string())?;
    ensure(report.passed, || failures(std::slice::from_ref(&report)).join("; "))?;
    ensure(reduced.total_dim() == 7, || format!("reduced dimension {}", reduced.total_dim()))?;
    let seven = decomposition(&reduced)?;
    let nine = decomposition(&full)?;
    ensure(seven == nine, || format!("7-component (c, κ) = {seven:?}, 9-component {nine:?}"))?;
    Ok(format!("7-component system reproduces (c, κ) = ({}, {})", seven.0, seven.1))
}

fn commutation_constant() -> Outcome {
    let mut parts = Vec::new();
    for (spin, g_squared) in [(Spin::One, SymScalar::hbar().powi(2)), (Spin::ThreeHalves, SymScalar::frac(9, 4) * SymScalar::hbar().powi(2))] {
        let (report, constant) = check_commutation_identity(&build_model(spin)).map_err(|e| e.to_string())?;
        ensure(report.passed, || failures(std::slice::from_ref(&report)).join("; "))?;
        ensure(constant.computed == g_squared && constant.expected == g_squared, || {
            format!("spin {spin}: computed {}, expected {g_squared}", constant.computed)
        })?;
        ensure(constant.hbar_exponent == Some(2), || format!("spin {spin}: ħ exponent {:?}", constant.hbar_exponent))?;
        parts.push(format!("spin {spin}: {}", constant.computed));
    }
    Ok(format!("{} (ħ exponent 2)", parts.join(", ")))
}

fn spectrum_cross_check() -> Outcome {
    let start = Instant::now();
    let cfg = FdConfig { radius: 12.0, points: 4000, count: 4 };
    let window = Window::Shell { max_quanta: 6, l_max: 6 };
    let mut worst: f64 = 0.0;
    let mut total = 0;
    for spin in Spin::ALL {
        let (_, kappa) = decomposition(&build_model(spin))?;
        let cmp = compare_spectra(spin, &kappa, &window, &cfg).map_err(|e| e.to_string())?;
        ensure(cmp.max_abs_dev < 5e-4, || format!("spin {spin}: max deviation {:.3e}", cmp.max_abs_dev))?;
        worst = worst.max(cmp.max_abs_dev);
        total += cmp.levels.len();
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;

    let ground = |points: usize| -> Result<f64, String> {
        let cfg = FdConfig { radius: 12.0, points, count: 1 };
        let e = fd_radial_solve(0, 0.0, &cfg).map_err(|e| e.to_string())?;
        Ok((e[0] - 1.5).abs())
    };
    let ratio = ground(4000)? / ground(8000)?;
    ensure((3.5..=4.5).contains(&ratio), || format!("convergence ratio {ratio:.3}"))?;
    Ok(format!("{total} levels, max deviation {worst:.2e} ħω in {elapsed:.2?}; dev(N)/dev(2N) = {ratio:.3}"))
}

fn degeneracy_spot_checks() -> Outcome {
    // (spin, n_r, l, 2j, expected E)
    let cases = [(Spin::Half, 0, 0, 1, 0.0), (Spin::Half, 0, 1, 3, 0.0), (Spin::One, 0, 1, 4, 0.0), (Spin::Half, 0, 1, 1, 3.0)];
    let cfg = FdConfig { radius: 12.0, points: 4000, count: 1 };
    for (spin, n_r, l, twice_j, expected) in cases {
        let (_, kappa) = decomposition(&build_model(spin))?;
        let lambda = common::ls_oracle(twice_j, l, &common::angular_momentum(spin.twice()));
        let brute = f64::from(2 * n_r + l) - rational::to_f64(&kappa) * lambda;
        ensure((brute - expected).abs() < 1e-9, || format!("spin {spin} ({n_r},{l},{twice_j}/2): oracle E = {brute}"))?;
        let exact = analytic_spectrum(spin, &kappa, &rational::int(6), 6)
            .into_iter()
            .find(|lv| lv.n_r == n_r && lv.l == l && lv.twice_j == twice_j)
            .ok_or_else(|| format!("spin {spin} ({n_r},{l},{twice_j}/2) missing from analytic spectrum"))?;
        ensure(rational::to_f64(&exact.energy) == expected, || format!("analytic E = {}", exact.energy))?;
        let numeric = fd_radial_solve(l, -1.5 - rational::to_f64(&kappa) * lambda, &cfg).map_err(|e| e.to_string())?[0];
        ensure((numeric - expected).abs() < 5e-4, || format!("finite-difference E = {numeric}"))?;
    }
    Ok("spin 1/2 (0,0,1/2), (0,1,3/2) at 0; spin 1 (0,1,2) at 0; spin 1/2 (0,1,1/2) at 3ħω".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("exact identity suite", identity_suite),
        ("factorization", factorization),
        ("oscillator reduction", oscillator_reduction),
        ("free-particle recovery", free_particle),
        ("spin-1 seven-component reduction", seven_components),
        ("commutation-identity constant", commutation_constant),
        ("spectrum cross-check", spectrum_cross_check),
        ("degeneracy spot checks", degeneracy_spot_checks),
    ];
    let mut failed = 0;
    for (k, (name, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
