mod common;

use common::{angular_momentum, evaluate, ls_oracle};
use linwave::spectrum::{allowed_twice_j, ls_eigenvalue};
use linwave::spin_models::{build_spin_matrices, Spin};
use linwave::algebra::rational;

#[test]
fn ls_formula_matches_brute_force_diagonalization() {
    for spin in Spin::ALL {
        let s = angular_momentum(spin.twice());
        for l in 0..=6 {
            for twice_j in allowed_twice_j(l, spin.twice()) {
                let exact = rational::to_f64(&ls_eigenvalue(twice_j, l, spin.twice()).unwrap());
                let numeric = ls_oracle(twice_j, l, &s);
                assert!((exact - numeric).abs() < 1e-9, "spin {spin}, l={l}, 2j={twice_j}: {exact} vs {numeric}");
            }
        }
    }
}

#[test]
fn model_spin_matrices_match_ladder_construction_spectrally() {
    // the model's bases may differ from |m⟩, but L·s spectra must agree
    for spin in Spin::ALL {
        let model = build_spin_matrices(spin);
        let s = [evaluate(&model[0]), evaluate(&model[1]), evaluate(&model[2])];
        let ladder = angular_momentum(spin.twice());
        for l in 0..=3 {
            let a = common::ls_spectrum(l, &s);
            let b = common::ls_spectrum(l, &ladder);
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < 1e-9, "spin {spin}, l={l}");
            }
        }
    }
}

#[test]
fn ls_oracle_known_values() {
    let half = angular_momentum(1);
    let one = angular_momentum(2);
    assert!((ls_oracle(3, 1, &half) - 0.5).abs() < 1e-12);
    assert!((ls_oracle(0, 1, &one) + 2.0).abs() < 1e-12);
    assert!((ls_oracle(1, 1, &half) + 1.0).abs() < 1e-12);
}

#[test]
fn public_types_are_thread_safe() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<linwave::SpinModel>();
    assert_send_sync::<linwave::algebra::SymMatrix>();
    assert_send_sync::<linwave::heisenberg::OperatorPolynomial>();
    assert_send_sync::<linwave::identities::CheckReport>();
    assert_send_sync::<linwave::spectrum::SpectrumComparison>();
    assert_send_sync::<linwave::Error>();
}
