//! Lowest eigenvalues of a real symmetric tridiagonal matrix by Sturm-sequence
//! bisection.

use crate::error::{Error, Result};

/// Number of eigenvalues strictly below `x`.
///
/// Counts negative pivots of the LDLᵀ factorization of `T − x`.
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for (k, d) in diag.iter().enumerate() {
        let coupling = if k == 0 { 0.0 } else { off[k - 1] * off[k - 1] / q };
        q = d - x - coupling;
        if q == 0.0 {
            // perturb an exact zero pivot; keeps the count well defined
            q = -f64::EPSILON * (d.abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the whole spectrum.
pub fn gershgorin_bounds(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (k, d) in diag.iter().enumerate() {
        let left = if k > 0 { off[k - 1].abs() } else { 0.0 };
        let right = off.get(k).map_or(0.0, |v| v.abs());
        lo = lo.min(d - left - right);
        hi = hi.max(d + left + right);
    }
    (lo, hi)
}

/// The `count` smallest eigenvalues in ascending order.
pub fn lowest_eigenvalues(diag: &[f64], off: &[f64], count: usize) -> Result<Vec<f64>> {
    let n = diag.len();
    if off.len() + 1 != n {
        return Err(Error::Bisection(format!("{n} diagonal entries but {} off-diagonal", off.len())));
    }
    if count > n {
        return Err(Error::Bisection(format!("{count} eigenvalues requested from a {n}x{n} matrix")));
    }
    let (lo, hi) = gershgorin_bounds(diag, off);
    let span = (hi - lo).max(1.0);
    let (lo, hi) = (lo - 1e-3 * span, hi + 1e-3 * span);
    if sturm_count(diag, off, lo) != 0 || sturm_count(diag, off, hi) != n {
        return Err(Error::Bisection("Gershgorin interval does not bracket the spectrum".into()));
    }
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        // λ_k is the smallest x with sturm_count(x) > k
        let mut a = out.last().copied().unwrap_or(lo).max(lo);
        let mut b = hi;
        if sturm_count(diag, off, a) > k {
            a = lo;
        }
        let mut iterations = 0;
        while b - a > 4.0 * f64::EPSILON * a.abs().max(b.abs()).max(1.0) {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(diag, off, mid) > k {
                b = mid;
            } else {
                a = mid;
            }
            iterations += 1;
            if iterations > 200 {
                return Err(Error::Bisection(format!("eigenvalue {k} did not converge")));
            }
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_laplacian() {
        // tridiag(-1, 2, -1): λ_k = 2 − 2cos(kπ/(n+1))
        let n = 50;
        let diag = vec![2.0; n];
        let off = vec![-1.0; n - 1];
        let vals = lowest_eigenvalues(&diag, &off, 5).unwrap();
        for (k, v) in vals.iter().enumerate() {
            let exact = 2.0 - 2.0 * (((k + 1) as f64) * std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!((v - exact).abs() < 1e-12, "k={k}: {v} vs {exact}");
        }
    }

    #[test]
    fn diagonal_matrix() {
        let diag = [3.0, -1.0, 2.0];
        let off = [0.0, 0.0];
        assert_eq!(sturm_count(&diag, &off, 0.0), 1);
        let vals = lowest_eigenvalues(&diag, &off, 3).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 2.0).abs() < 1e-14);
        assert!((vals[2] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn degenerate_pair() {
        let vals = lowest_eigenvalues(&[1.0, 1.0], &[0.0], 2).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-14 && (vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(lowest_eigenvalues(&[1.0, 2.0], &[], 1), Err(Error::Bisection(_))));
        assert!(matches!(lowest_eigenvalues(&[1.0], &[], 2), Err(Error::Bisection(_))));
        assert!(lowest_eigenvalues(&[f64::NAN, 1.0], &[0.0], 1).is_err());
    }
}
