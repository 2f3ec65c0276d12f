//! Normal-ordered polynomials in x₁..x₃, p₁..p₃ (and a commuting energy
//! symbol E) with matrix coefficients.
//!
//! A monomial stands for `E^e x₁^a₁ x₂^a₂ x₃^a₃ p₁^b₁ p₂^b₂ p₃^b₃`, all
//! positions to the left of all momenta. Products are brought back to this
//! form with `[x_i, p_j] = iħδ_ij`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{rational, ExtScalar, SymMatrix, SymScalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub x: [u32; 3],
    pub p: [u32; 3],
    pub energy: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: [0; 3], p: [0; 3], energy: 0 };

    pub fn position(i: usize) -> Self {
        let mut m = Self::ONE;
        m.x[i] = 1;
        m
    }

    pub fn momentum(i: usize) -> Self {
        let mut m = Self::ONE;
        m.p[i] = 1;
        m
    }

    pub fn energy() -> Self {
        Monomial { energy: 1, ..Self::ONE }
    }

    pub fn new(x: [u32; 3], p: [u32; 3]) -> Self {
        Monomial { x, p, energy: 0 }
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn p_degree(&self) -> u32 {
        self.p.iter().sum()
    }

    /// Total degree in x and p (E excluded).
    pub fn degree(&self) -> u32 {
        self.x_degree() + self.p_degree()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |name: String, pow: u32| match pow {
            0 => {}
            1 => parts.push(name),
            _ => parts.push(format!("{name}^{pow}")),
        };
        push("E".into(), self.energy);
        for i in 0..3 {
            push(format!("x{}", i + 1), self.x[i]);
        }
        for i in 0..3 {
            push(format!("p{}", i + 1), self.p[i]);
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, t| acc * i64::from(n - t) / i64::from(t + 1))
}

fn factorial(k: u32) -> i64 {
    (1..=i64::from(k)).product()
}

/// `(-iħ)^k` as a scalar.
fn minus_i_hbar_pow(k: u32) -> SymScalar {
    let phase = match k % 4 {
        0 => ExtScalar::one(),
        1 => -ExtScalar::i(),
        2 => ExtScalar::from_int(-1),
        _ => ExtScalar::i(),
    };
    SymScalar::monomial([0, 0, k as i32], phase)
}

/// Normal-ordered expansion of the product `lhs · rhs`.
///
/// Per mode, `p^b x^c = Σ_k k! C(b,k) C(c,k) (-iħ)^k x^(c-k) p^(b-k)`;
/// distinct modes commute, so the full expansion is the product over modes.
pub fn monomial_product(lhs: &Monomial, rhs: &Monomial) -> Vec<(SymScalar, Monomial)> {
    let mut out = vec![(
        0u32,
        1i64,
        Monomial {
            x: [0; 3],
            p: [0; 3],
            energy: lhs.energy + rhs.energy,
        },
    )];
    for i in 0..3 {
        let (b, c) = (lhs.p[i], rhs.x[i]);
        let mut next = Vec::with_capacity(out.len() * (b.min(c) as usize + 1));
        for (contractions, weight, mono) in &out {
            for k in 0..=b.min(c) {
                let mut m = *mono;
                m.x[i] = lhs.x[i] + c - k;
                m.p[i] = b - k + rhs.p[i];
                let w = factorial(k) * binomial(b, k) * binomial(c, k);
                next.push((contractions + k, weight * w, m));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(k, w, m)| (minus_i_hbar_pow(k).scale(&rational::int(w)), m))
        .collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct OperatorPolynomial {
    rows: usize,
    cols: usize,
    terms: BTreeMap<Monomial, SymMatrix>,
}

impl OperatorPolynomial {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, terms: BTreeMap::new() }
    }

    pub fn term(mono: Monomial, coeff: SymMatrix) -> Self {
        let mut out = Self::zero(coeff.rows(), coeff.cols());
        out.add_term(mono, coeff);
        out
    }

    pub fn constant(coeff: SymMatrix) -> Self {
        Self::term(Monomial::ONE, coeff)
    }

    pub fn position(i: usize, coeff: SymMatrix) -> Self {
        Self::term(Monomial::position(i), coeff)
    }

    pub fn momentum(i: usize, coeff: SymMatrix) -> Self {
        Self::term(Monomial::momentum(i), coeff)
    }

    /// `s · mono · 1_n`.
    pub fn scalar(mono: Monomial, s: SymScalar, n: usize) -> Self {
        Self::term(mono, SymMatrix::identity(n).scale(&s))
    }

    /// Σ_i mats[i] · p_i.
    pub fn dot_momentum(mats: &[SymMatrix; 3]) -> Self {
        let mut out = Self::zero(mats[0].rows(), mats[0].cols());
        for (i, m) in mats.iter().enumerate() {
            out.add_term(Monomial::momentum(i), m.clone());
        }
        out
    }

    /// Σ_i mats[i] · x_i.
    pub fn dot_position(mats: &[SymMatrix; 3]) -> Self {
        let mut out = Self::zero(mats[0].rows(), mats[0].cols());
        for (i, m) in mats.iter().enumerate() {
            out.add_term(Monomial::position(i), m.clone());
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &SymMatrix)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> SymMatrix {
        self.terms.get(mono).cloned().unwrap_or_else(|| SymMatrix::zeros(self.rows, self.cols))
    }

    fn add_term(&mut self, mono: Monomial, coeff: SymMatrix) {
        assert_eq!(coeff.shape(), self.shape(), "coefficient shape");
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(c) => {
                *c = &*c + &coeff;
                if c.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, coeff);
            }
        }
    }

    pub fn try_mul(&self, rhs: &OperatorPolynomial) -> Result<OperatorPolynomial> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "operator product",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Self::zero(self.rows, rhs.cols);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let coeff = ca.try_mul(cb)?;
                if coeff.is_zero() {
                    continue;
                }
                for (s, mono) in monomial_product(ma, mb) {
                    out.add_term(mono, coeff.scale(&s));
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &OperatorPolynomial) -> Result<OperatorPolynomial> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch { op: "operator sum", left: self.shape(), right: rhs.shape() });
        }
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &SymScalar) -> OperatorPolynomial {
        let mut out = Self::zero(self.rows, self.cols);
        for (m, c) in &self.terms {
            out.add_term(*m, c.scale(s));
        }
        out
    }

    /// `M · self`, with `M` a constant matrix.
    pub fn left_mul(&self, m: &SymMatrix) -> OperatorPolynomial {
        let mut out = Self::zero(m.rows(), self.cols);
        for (mono, c) in &self.terms {
            out.add_term(*mono, m * c);
        }
        out
    }

    /// `self · M`, with `M` a constant matrix.
    pub fn right_mul(&self, m: &SymMatrix) -> OperatorPolynomial {
        let mut out = Self::zero(self.rows, m.cols());
        for (mono, c) in &self.terms {
            out.add_term(*mono, c * m);
        }
        out
    }

    pub fn map_coefficients(&self, rows: usize, cols: usize, f: impl Fn(&SymMatrix) -> SymMatrix) -> OperatorPolynomial {
        let mut out = Self::zero(rows, cols);
        for (mono, c) in &self.terms {
            out.add_term(*mono, f(c));
        }
        out
    }

    pub fn block(&self, row0: usize, rows: usize, col0: usize, cols: usize) -> OperatorPolynomial {
        self.map_coefficients(rows, cols, |c| c.block(row0, rows, col0, cols))
    }

    pub fn remove_rows_cols(&self, rows: &[usize], cols: &[usize]) -> OperatorPolynomial {
        let r = self.rows - rows.iter().filter(|&&k| k < self.rows).count();
        let c = self.cols - cols.iter().filter(|&&k| k < self.cols).count();
        self.map_coefficients(r, c, |m| m.remove_rows_cols(rows, cols))
    }

    /// Hermitian adjoint: `(M x^a p^b)† = M† p^b x^a`, re-normal-ordered.
    pub fn adjoint(&self) -> OperatorPolynomial {
        let mut out = Self::zero(self.cols, self.rows);
        for (mono, c) in &self.terms {
            let coeff = c.conj_transpose();
            let p_first = Monomial { x: [0; 3], p: mono.p, energy: mono.energy };
            let x_last = Monomial { x: mono.x, p: [0; 3], energy: 0 };
            for (s, m) in monomial_product(&p_first, &x_last) {
                out.add_term(m, coeff.scale(&s));
            }
        }
        out
    }

    pub fn max_p_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::p_degree).max().unwrap_or(0)
    }
}

impl fmt::Display for OperatorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (m, c) in &self.terms {
            writeln!(f, "{m}:")?;
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OperatorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "OperatorPolynomial {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl Mul<&OperatorPolynomial> for &OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn mul(self, rhs: &OperatorPolynomial) -> OperatorPolynomial {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add<&OperatorPolynomial> for &OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn add(self, rhs: &OperatorPolynomial) -> OperatorPolynomial {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn neg(self) -> OperatorPolynomial {
        self.scale(&SymScalar::int(-1))
    }
}

impl Sub<&OperatorPolynomial> for &OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn sub(self, rhs: &OperatorPolynomial) -> OperatorPolynomial {
        self + &(-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin_models::pauli_matrices;
    use proptest::prelude::*;

    fn scalar_x(i: usize) -> OperatorPolynomial {
        OperatorPolynomial::position(i, SymMatrix::identity(1))
    }

    fn scalar_p(i: usize) -> OperatorPolynomial {
        OperatorPolynomial::momentum(i, SymMatrix::identity(1))
    }

    fn scalar_const(s: SymScalar) -> OperatorPolynomial {
        OperatorPolynomial::constant(SymMatrix::identity(1).scale(&s))
    }

    #[test]
    fn p_times_x_reorders() {
        let lhs = &scalar_p(0) * &scalar_x(0);
        let expected = &(&scalar_x(0) * &scalar_p(0)) + &scalar_const(-SymScalar::hbar().times_i());
        assert_eq!(lhs, expected);
        assert_eq!((&scalar_x(0) * &scalar_p(0)).terms().count(), 1);
    }

    #[test]
    fn distinct_modes_commute() {
        let xp = &scalar_x(0) * &scalar_p(1);
        assert_eq!(xp, OperatorPolynomial::term(Monomial::new([1, 0, 0], [0, 1, 0]), SymMatrix::identity(1)));
        assert_eq!(&scalar_p(1) * &scalar_x(0), xp);
    }

    #[test]
    fn canonical_commutators() {
        for i in 0..3 {
            for j in 0..3 {
                let comm = &(&scalar_x(i) * &scalar_p(j)) - &(&scalar_p(j) * &scalar_x(i));
                let expected = if i == j {
                    scalar_const(SymScalar::hbar().times_i())
                } else {
                    OperatorPolynomial::zero(1, 1)
                };
                assert_eq!(comm, expected, "[x{}, p{}]", i + 1, j + 1);
            }
        }
    }

    #[test]
    fn p_squared_x_squared() {
        // p² x² = x² p² - 4iħ x p - 2ħ²
        let p2 = &scalar_p(0) * &scalar_p(0);
        let x2 = &scalar_x(0) * &scalar_x(0);
        let lhs = &p2 * &x2;
        let expected = &(&(&x2 * &p2) + &(&scalar_x(0) * &scalar_p(0)).scale(&SymScalar::hbar().times_i().scale(&rational::int(-4))))
            + &scalar_const(SymScalar::hbar().powi(2).scale(&rational::int(-2)));
        assert_eq!(lhs, expected);
    }

    #[test]
    fn pauli_dot_p_squares_to_p2() {
        let sp = OperatorPolynomial::dot_momentum(&pauli_matrices());
        let square = &sp * &sp;
        let mut expected = OperatorPolynomial::zero(2, 2);
        for i in 0..3 {
            let mut m = Monomial::ONE;
            m.p[i] = 2;
            expected = &expected + &OperatorPolynomial::term(m, SymMatrix::identity(2));
        }
        assert_eq!(square, expected);
    }

    #[test]
    fn dimension_mismatch() {
        let a = OperatorPolynomial::constant(SymMatrix::identity(2));
        let b = OperatorPolynomial::constant(SymMatrix::identity(3));
        assert!(matches!(a.try_mul(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn adjoint_of_xp() {
        // (x p)† = p x = x p - iħ
        let xp = &scalar_x(0) * &scalar_p(0);
        let expected = &xp + &scalar_const(-SymScalar::hbar().times_i());
        assert_eq!(xp.adjoint(), expected);
    }

    fn arb_poly() -> impl Strategy<Value = OperatorPolynomial> {
        let term = ([0u32..2, 0..2, 0..2], [0u32..2, 0..2, 0..2], -2i64..=2, any::<bool>());
        proptest::collection::vec(term, 1..4).prop_map(|terms| {
            let mut out = OperatorPolynomial::zero(2, 2);
            for (k, (x, p, c, imag)) in terms.into_iter().enumerate() {
                let base = pauli_matrices()[k % 3].clone();
                let s = if imag { SymScalar::int(c).times_i() } else { SymScalar::int(c) };
                out = &out + &OperatorPolynomial::term(Monomial::new(x, p), base.scale(&s));
            }
            out
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn normal_ordering_is_associative(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&f * &(&g * &h), &(&f * &g) * &h);
        }

        #[test]
        fn adjoint_reverses_products(f in arb_poly(), g in arb_poly()) {
            prop_assert_eq!((&f * &g).adjoint(), &g.adjoint() * &f.adjoint());
            prop_assert_eq!(f.adjoint().adjoint(), f.clone());
        }
    }
}
