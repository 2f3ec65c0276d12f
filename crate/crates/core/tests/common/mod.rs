//! Floating-point oracles shared by the integration tests.
#![allow(dead_code)]

use linwave::algebra::SymMatrix;
use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

/// Angular momentum matrices (ħ = 1) in the |m⟩ basis, m descending,
/// from the ladder formula.
pub fn angular_momentum(twice_j: u32) -> [DMatrix<Complex64>; 3] {
    let dim = twice_j as usize + 1;
    let j = f64::from(twice_j) / 2.0;
    let m_of = |k: usize| j - k as f64;
    let mut raise = DMatrix::<Complex64>::zeros(dim, dim);
    for k in 1..dim {
        let m = m_of(k);
        raise[(k - 1, k)] = Complex64::new((j * (j + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
    }
    let lower = raise.adjoint();
    let x = (&raise + &lower).map(|z| z * 0.5);
    let y = (&raise - &lower).map(|z| z * Complex64::new(0.0, -0.5));
    let z = DMatrix::from_fn(dim, dim, |r, c| if r == c { Complex64::new(m_of(r), 0.0) } else { Complex64::new(0.0, 0.0) });
    [x, y, z]
}

/// Numerical value of an exact matrix at m = ω = ħ = 1.
pub fn evaluate(m: &SymMatrix) -> DMatrix<Complex64> {
    DMatrix::from_fn(m.rows(), m.cols(), |r, c| m[(r, c)].to_complex(1.0, 1.0, 1.0).unwrap())
}

fn kron(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    DMatrix::from_fn(ar * br, ac * bc, |r, c| a[(r / br, c / bc)] * b[(r % br, c % bc)])
}

/// Sorted eigenvalues of Σᵢ Lᵢ⊗sᵢ for orbital `l` and the given spin matrices.
pub fn ls_spectrum(l: u32, spin: &[DMatrix<Complex64>; 3]) -> Vec<f64> {
    let orbital = angular_momentum(2 * l);
    let dim = orbital[0].nrows() * spin[0].nrows();
    let mut total = DMatrix::<Complex64>::zeros(dim, dim);
    for i in 0..3 {
        total += kron(&orbital[i], &spin[i]);
    }
    let mut vals: Vec<f64> = SymmetricEigen::new(total).eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}

/// Groups sorted eigenvalues into (value, multiplicity) clusters.
pub fn clusters(vals: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &v in vals {
        match out.last_mut() {
            Some((c, n)) if (v - *c).abs() < tol => *n += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

/// λ(j, l, s) read off the brute-force spectrum: the cluster of
/// multiplicity 2j+1, matched in the ordering of j (L·s grows with j).
pub fn ls_oracle(twice_j: u32, l: u32, spin: &[DMatrix<Complex64>; 3]) -> f64 {
    let twice_s = spin[0].nrows() as u32 - 1;
    let allowed: Vec<u32> = ((2 * l).abs_diff(twice_s)..=2 * l + twice_s).step_by(2).collect();
    let groups = clusters(&ls_spectrum(l, spin), 1e-9);
    assert_eq!(groups.len(), allowed.len(), "one eigenvalue per allowed j");
    let idx = allowed.iter().position(|&t| t == twice_j).expect("allowed j");
    let (value, mult) = groups[idx];
    assert_eq!(mult, twice_j as usize + 1);
    value
}
