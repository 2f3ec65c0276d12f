//! Laurent polynomials in the physical symbols m, ω and ħ.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;

use super::ext::ExtScalar;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Exponents of (m, ω, ħ).
pub type Exponents = [i32; 3];

pub const SYMBOLS: [&str; 3] = ["m", "ω", "ħ"];

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymScalar {
    terms: BTreeMap<Exponents, ExtScalar>,
}

impl SymScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExtScalar::one())
    }

    pub fn constant(c: ExtScalar) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    pub fn rational(r: Rational) -> Self {
        Self::constant(ExtScalar::from_rational(r))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(ExtScalar::from_int(n))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::constant(ExtScalar::frac(num, den))
    }

    pub fn i() -> Self {
        Self::constant(ExtScalar::i())
    }

    pub fn monomial(exp: Exponents, coeff: ExtScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// `m^a ω^b ħ^c` with unit coefficient.
    pub fn symbols(m: i32, omega: i32, hbar: i32) -> Self {
        Self::monomial([m, omega, hbar], ExtScalar::one())
    }

    pub fn m() -> Self {
        Self::symbols(1, 0, 0)
    }

    pub fn omega() -> Self {
        Self::symbols(0, 1, 0)
    }

    pub fn hbar() -> Self {
        Self::symbols(0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &ExtScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &Exponents) -> ExtScalar {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn single_term(&self) -> Option<(&Exponents, &ExtScalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c.scale(r));
        }
        out
    }

    pub fn times_i(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c.times_i())).collect(),
        }
    }

    pub fn powi(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    fn add_term(&mut self, exp: Exponents, coeff: ExtScalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                *c += &coeff;
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    /// Finds `r` in Q with `self = r * other`, if such `r` exists.
    pub fn rational_ratio(&self, other: &SymScalar) -> Option<Rational> {
        let r = match other.terms.iter().next() {
            None => return self.is_zero().then(|| rational::int(0)),
            Some((e, c)) => self.coefficient(e).rational_ratio(c)?,
        };
        (other.scale(&r) == *self).then_some(r)
    }

    pub fn to_complex(&self, m: f64, omega: f64, hbar: f64) -> Result<Complex64> {
        let values = [m, omega, hbar];
        let mut total = Complex64::new(0.0, 0.0);
        for (exp, c) in &self.terms {
            let mut factor = 1.0;
            for ((&e, &v), name) in exp.iter().zip(&values).zip(SYMBOLS) {
                if e < 0 && v == 0.0 {
                    return Err(Error::ZeroSubstitution(name));
                }
                factor *= v.powi(e);
            }
            total += c.to_complex() * factor;
        }
        Ok(total)
    }
}

impl From<ExtScalar> for SymScalar {
    fn from(c: ExtScalar) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&SymScalar> for SymScalar {
    fn add_assign(&mut self, rhs: &SymScalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&SymScalar> for SymScalar {
    fn sub_assign(&mut self, rhs: &SymScalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&SymScalar> for &SymScalar {
    type Output = SymScalar;
    fn add(self, rhs: &SymScalar) -> SymScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&SymScalar> for &SymScalar {
    type Output = SymScalar;
    fn sub(self, rhs: &SymScalar) -> SymScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&SymScalar> for &SymScalar {
    type Output = SymScalar;
    fn mul(self, rhs: &SymScalar) -> SymScalar {
        let mut out = SymScalar::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.add_term(exp, ca * cb);
            }
        }
        out
    }
}

impl Neg for &SymScalar {
    type Output = SymScalar;
    fn neg(self) -> SymScalar {
        SymScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for SymScalar {
    type Output = SymScalar;
    fn neg(self) -> SymScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<SymScalar> for SymScalar {
            type Output = SymScalar;
            fn $method(self, rhs: SymScalar) -> SymScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&SymScalar> for SymScalar {
            type Output = SymScalar;
            fn $method(self, rhs: &SymScalar) -> SymScalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<SymScalar> for &SymScalar {
            type Output = SymScalar;
            fn $method(self, rhs: SymScalar) -> SymScalar {
                self.$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

fn write_symbols(f: &mut fmt::Formatter<'_>, exp: &Exponents) -> fmt::Result {
    for (&e, name) in exp.iter().zip(SYMBOLS) {
        match e {
            0 => {}
            1 => write!(f, "{name}")?,
            _ => write!(f, "{name}^{e}")?,
        }
    }
    Ok(())
}

impl fmt::Display for SymScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (exp, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let is_constant = exp.iter().all(|&e| e == 0);
            if is_constant {
                write!(f, "{c}")?;
            } else if *c == ExtScalar::one() {
                write_symbols(f, exp)?;
            } else {
                write!(f, "({c})")?;
                write_symbols(f, exp)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymScalar({self})")
    }
}
