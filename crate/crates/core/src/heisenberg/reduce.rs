//! Oscillator coupling of the first-order systems and elimination of the
//! auxiliary components.

use serde::Serialize;

use super::poly::{Monomial, OperatorPolynomial};
use crate::algebra::{levi_civita, rational, Rational, SymMatrix, SymScalar};
use crate::error::{Error, Result};
use crate::spin_models::SpinModel;

/// How the momentum is coupled to the coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coupling {
    /// `p → p − imωηr`.
    Standard,
    /// `p → p + imωηr`; swaps the roles of `p₊` and `p₋`.
    Reversed,
    /// `ω = 0`, the free system.
    Free,
}

impl Coupling {
    /// Sign `σ` in `p → p + σ·imωηr`, or `None` for the free system.
    fn sign(self) -> Option<i64> {
        match self {
            Coupling::Standard => Some(-1),
            Coupling::Reversed => Some(1),
            Coupling::Free => None,
        }
    }
}

fn m_omega_i() -> SymScalar {
    SymScalar::symbols(1, 1, 0).times_i()
}

fn inv_two_m() -> SymScalar {
    SymScalar::frac(1, 2) * SymScalar::symbols(-1, 0, 0)
}

/// `A·E + B·(p − imωηr) + C` (or the variant selected by `coupling`).
pub fn oscillator_substitute(model: &SpinModel, coupling: Coupling) -> Result<OperatorPolynomial> {
    let d = model.total_dim();
    let mut op = OperatorPolynomial::term(Monomial::energy(), model.a.clone());
    op = &op + &OperatorPolynomial::constant(model.c.clone());
    op = &op + &OperatorPolynomial::dot_momentum(&model.b);
    if let Some(sign) = coupling.sign() {
        let factor = m_omega_i().scale(&rational::int(sign));
        for (i, b) in model.b.iter().enumerate() {
            let b_eta = b * &model.eta;
            //   B_i η = −η B_i  sends p₊ to the upper block row and p₋ below
            if b_eta != -&(&model.eta * b) {
                return Err(Error::BlockStructure(format!("B{} does not anticommute with η", i + 1)));
            }
            op = &op + &OperatorPolynomial::position(i, b_eta.scale(&factor));
        }
    }
    debug_assert_eq!(op.shape(), (d, d));
    Ok(op)
}

/// Eliminates every component below the physical block.
///
/// With the first-order operator split as `[[W11, W12], [W21, W22]]`, the
/// lower rows read `W21 φ + 2m ψ' = 0` and the upper `E φ + W12 ψ' = 0`,
/// so `E φ = (1/2m) W12 W21 φ`.
pub fn reduce_to_second_order(model: &SpinModel, coupling: Coupling) -> Result<OperatorPolynomial> {
    let n = model.physical_dim();
    let d = model.total_dim();
    let rest = d - n;
    let w = oscillator_substitute(model, coupling)?;

    let w11 = w.block(0, n, 0, n);
    if w11 != OperatorPolynomial::term(Monomial::energy(), SymMatrix::identity(n)) {
        return Err(Error::BlockStructure("physical block is not E·1".into()));
    }
    let w22 = w.block(n, rest, n, rest);
    let two_m = SymScalar::int(2) * SymScalar::m();
    if w22 != OperatorPolynomial::constant(SymMatrix::identity(rest).scale(&two_m)) {
        return Err(Error::BlockStructure("auxiliary block is not 2m·1".into()));
    }
    let w12 = w.block(0, n, n, rest);
    let w21 = w.block(n, rest, 0, n);
    if w12.terms().chain(w21.terms()).any(|(m, _)| m.energy > 0) {
        return Err(Error::BlockStructure("off-diagonal blocks depend on E".into()));
    }
    Ok(w12.try_mul(&w21)?.scale(&inv_two_m()))
}

/// `(1/2m) g⁻² [(aux·p₊)(aux†·p₋) + (s·p₊)(s·p₋)]`, written down directly
/// rather than by elimination.
pub fn closed_form_second_order(model: &SpinModel, coupling: Coupling) -> OperatorPolynomial {
    let n = model.physical_dim();
    let shifted = |mats: &[SymMatrix; 3], sign: i64| {
        let mut op = OperatorPolynomial::dot_momentum(mats);
        if let Some(s) = coupling.sign() {
            // p₊ = p + imωr appears on the left for the standard coupling
            let factor = m_omega_i().scale(&rational::int(-s * sign));
            op = &op + &OperatorPolynomial::dot_position(mats).scale(&factor);
        }
        op
    };
    let s = &model.spin_matrices;
    let mut sum = &shifted(s, 1) * &shifted(s, -1);
    if let Some(aux) = &model.aux_matrices {
        let aux_adj = aux.clone().map(|m| m.conj_transpose());
        sum = &sum + &(&shifted(aux, 1) * &shifted(&aux_adj, -1));
    }
    let g_inv2 = &model.inv_norm_factor * &model.inv_norm_factor;
    let out = sum.scale(&(&g_inv2 * &inv_two_m()));
    debug_assert_eq!(out.shape(), (n, n));
    out
}

/// `L·s = Σ_k ε_kij x_i p_j s_k`.
pub fn l_dot_s(spin_matrices: &[SymMatrix; 3]) -> OperatorPolynomial {
    let n = spin_matrices[0].rows();
    let mut out = OperatorPolynomial::zero(n, n);
    for (k, s) in spin_matrices.iter().enumerate() {
        for i in 0..3 {
            for j in 0..3 {
                let e = levi_civita(k, i, j);
                if e != 0 {
                    let x = OperatorPolynomial::position(i, s.scale(&SymScalar::int(e)));
                    let p = OperatorPolynomial::momentum(j, SymMatrix::identity(n));
                    out = &out + &(&x * &p);
                }
            }
        }
    }
    out
}

/// `H = p²/2m + ½mω²r² + c·ħω − κ(ω/ħ) L·s`, matched exactly.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpinOrbitForm {
    pub kinetic_ok: bool,
    pub potential_ok: bool,
    #[serde(serialize_with = "serialize_sym")]
    pub constant: SymScalar,
    #[serde(serialize_with = "serialize_rational")]
    pub c: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub kappa: Rational,
}

fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational::to_short_string(r))
}

fn serialize_sym<S: serde::Serializer>(v: &SymScalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn squares(n: usize, coords: bool, coeff: &SymScalar) -> OperatorPolynomial {
    let mut out = OperatorPolynomial::zero(n, n);
    for i in 0..3 {
        let mut m = Monomial::ONE;
        if coords {
            m.x[i] = 2;
        } else {
            m.p[i] = 2;
        }
        out = &out + &OperatorPolynomial::scalar(m, coeff.clone(), n);
    }
    out
}

pub fn spin_orbit_decompose(h: &OperatorPolynomial, model: &SpinModel) -> Result<SpinOrbitForm> {
    let n = model.physical_dim();
    if h.shape() != (n, n) {
        return Err(Error::DimensionMismatch { op: "spin-orbit decomposition", left: h.shape(), right: (n, n) });
    }
    let kinetic = squares(n, false, &inv_two_m());
    let potential = squares(n, true, &(SymScalar::frac(1, 2) * SymScalar::symbols(1, 2, 0)));
    let matches_part = |part: &OperatorPolynomial| part.terms().all(|(m, c)| h.coefficient(m) == *c);
    let kinetic_ok = matches_part(&kinetic);
    let potential_ok = matches_part(&potential);

    let constant = h
        .coefficient(&Monomial::ONE)
        .as_scalar_identity()
        .ok_or_else(|| Error::NonzeroRemainder("constant term is not proportional to 1".into()))?;
    let hbar_omega = SymScalar::symbols(0, 1, 1);
    let c = constant
        .rational_ratio(&hbar_omega)
        .ok_or_else(|| Error::NonzeroRemainder(format!("constant term {constant} is not a rational multiple of ħω")))?;

    let omega_over_hbar = SymScalar::symbols(0, 1, -1);
    let coupling_ref = model.spin_matrices[2].scale(&-&omega_over_hbar);
    let x1p2 = h.coefficient(&Monomial::new([1, 0, 0], [0, 1, 0]));
    let kappa = x1p2
        .rational_ratio(&coupling_ref)
        .ok_or_else(|| Error::NonzeroRemainder("x1 p2 coefficient is not a rational multiple of (ω/ħ)s3".into()))?;

    let ls = l_dot_s(&model.spin_matrices);
    let model_h = &(&(&kinetic + &potential) + &OperatorPolynomial::scalar(Monomial::ONE, hbar_omega.scale(&c), n))
        - &ls.scale(&omega_over_hbar.scale(&kappa));
    let remainder = h - &model_h;
    if let Some((m, coeff)) = remainder.terms().next() {
        return Err(Error::NonzeroRemainder(format!("monomial {m} leaves\n{coeff}")));
    }
    Ok(SpinOrbitForm { kinetic_ok, potential_ok, constant, c, kappa })
}
