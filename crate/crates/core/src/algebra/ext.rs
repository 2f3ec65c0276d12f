//! Exact complex numbers over the real field Q(√2, √3).
//!
//! A value is stored as eight rationals: real and imaginary parts, each
//! expanded in the basis (1, √2, √3, √6). Since that basis is linearly
//! independent over Q, equality and zero tests are coefficient-wise.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::rational::{self, Rational};

/// Basis labels, indexed so that the index bits record which of √2 (bit 0)
/// and √3 (bit 1) divide the element.
const BASIS: [&str; 4] = ["", "√2", "√3", "√6"];

/// `e_a * e_b = BASIS_FACTOR[a & b] * e_(a ^ b)`.
const BASIS_FACTOR: [i64; 4] = [1, 2, 3, 6];

type Coeffs = [Rational; 4];

fn zero_coeffs() -> Coeffs {
    [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()]
}

fn coeffs_is_zero(c: &Coeffs) -> bool {
    c.iter().all(Zero::is_zero)
}

fn mul_coeffs_into(out: &mut Coeffs, a: &Coeffs, b: &Coeffs, sign: i64) {
    for (ia, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (ib, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            let factor = rational::int(sign * BASIS_FACTOR[ia & ib]);
            out[ia ^ ib] += ca * cb * factor;
        }
    }
}

fn coeffs_to_f64(c: &Coeffs) -> f64 {
    let basis = [1.0, 2f64.sqrt(), 3f64.sqrt(), 6f64.sqrt()];
    c.iter()
        .zip(basis)
        .filter(|(r, _)| !r.is_zero())
        .map(|(r, b)| rational::to_f64(r) * b)
        .sum()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtScalar {
    re: Coeffs,
    im: Coeffs,
}

impl ExtScalar {
    pub fn new(re: [Rational; 4], im: [Rational; 4]) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self { re: zero_coeffs(), im: zero_coeffs() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn i() -> Self {
        let mut v = Self::zero();
        v.im[0] = Rational::one();
        v
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut v = Self::zero();
        v.re[0] = r;
        v
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rational::int(n))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rational(rational::frac(num, den))
    }

    /// `r * sqrt(radicand)` for radicand in {1, 2, 3, 6}.
    pub fn surd(r: Rational, radicand: u32) -> Self {
        let idx = match radicand {
            1 => 0,
            2 => 1,
            3 => 2,
            6 => 3,
            _ => panic!("radicand {radicand} is outside Q(√2, √3)"),
        };
        let mut v = Self::zero();
        v.re[idx] = r;
        v
    }

    pub fn sqrt2() -> Self {
        Self::surd(Rational::one(), 2)
    }

    pub fn sqrt3() -> Self {
        Self::surd(Rational::one(), 3)
    }

    pub fn sqrt6() -> Self {
        Self::surd(Rational::one(), 6)
    }

    pub fn re_coeffs(&self) -> &[Rational; 4] {
        &self.re
    }

    pub fn im_coeffs(&self) -> &[Rational; 4] {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        coeffs_is_zero(&self.re) && coeffs_is_zero(&self.im)
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: self.im.clone().map(|c| -c) }
    }

    pub fn times_i(&self) -> Self {
        Self { re: self.im.clone().map(|c| -c), im: self.re.clone() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            re: self.re.clone().map(|c| c * r),
            im: self.im.clone().map(|c| c * r),
        }
    }

    /// The value as a plain rational, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        let surds_vanish = self.re[1..].iter().all(Zero::is_zero);
        (surds_vanish && coeffs_is_zero(&self.im)).then(|| self.re[0].clone())
    }

    /// Finds `r` in Q with `self = r * other`, if such `r` exists.
    pub fn rational_ratio(&self, other: &ExtScalar) -> Option<Rational> {
        let pivot = other
            .re
            .iter()
            .zip(&self.re)
            .chain(other.im.iter().zip(&self.im))
            .find(|(o, _)| !o.is_zero());
        let r = match pivot {
            Some((o, s)) => s / o,
            None => return self.is_zero().then(Rational::zero),
        };
        (other.scale(&r) == *self).then_some(r)
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(coeffs_to_f64(&self.re), coeffs_to_f64(&self.im))
    }
}

impl Default for ExtScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for ExtScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for ExtScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add<&ExtScalar> for &ExtScalar {
    type Output = ExtScalar;
    fn add(self, rhs: &ExtScalar) -> ExtScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&ExtScalar> for ExtScalar {
    fn add_assign(&mut self, rhs: &ExtScalar) {
        for (a, b) in self.re.iter_mut().zip(&rhs.re) {
            *a += b;
        }
        for (a, b) in self.im.iter_mut().zip(&rhs.im) {
            *a += b;
        }
    }
}

impl Sub<&ExtScalar> for &ExtScalar {
    type Output = ExtScalar;
    fn sub(self, rhs: &ExtScalar) -> ExtScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&ExtScalar> for ExtScalar {
    fn sub_assign(&mut self, rhs: &ExtScalar) {
        for (a, b) in self.re.iter_mut().zip(&rhs.re) {
            *a -= b;
        }
        for (a, b) in self.im.iter_mut().zip(&rhs.im) {
            *a -= b;
        }
    }
}

impl Mul<&ExtScalar> for &ExtScalar {
    type Output = ExtScalar;
    fn mul(self, rhs: &ExtScalar) -> ExtScalar {
        let mut re = zero_coeffs();
        let mut im = zero_coeffs();
        mul_coeffs_into(&mut re, &self.re, &rhs.re, 1);
        mul_coeffs_into(&mut re, &self.im, &rhs.im, -1);
        mul_coeffs_into(&mut im, &self.re, &rhs.im, 1);
        mul_coeffs_into(&mut im, &self.im, &rhs.re, 1);
        ExtScalar { re, im }
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar {
            re: self.re.clone().map(|c| -c),
            im: self.im.clone().map(|c| -c),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<ExtScalar> for ExtScalar {
            type Output = ExtScalar;
            fn $method(self, rhs: ExtScalar) -> ExtScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&ExtScalar> for ExtScalar {
            type Output = ExtScalar;
            fn $method(self, rhs: &ExtScalar) -> ExtScalar {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        -&self
    }
}

fn write_part(f: &mut fmt::Formatter<'_>, c: &Coeffs, unit: &str, first: &mut bool) -> fmt::Result {
    for (r, basis) in c.iter().zip(BASIS) {
        if r.is_zero() {
            continue;
        }
        let sign = if r.is_negative() { "-" } else { "+" };
        if *first {
            if r.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        *first = false;
        let mag = r.abs();
        let sym = format!("{unit}{basis}");
        if sym.is_empty() {
            write!(f, "{}", rational::to_short_string(&mag))?;
        } else if mag.is_one() {
            write!(f, "{sym}")?;
        } else {
            write!(f, "{}{sym}", rational::to_short_string(&mag))?;
        }
    }
    Ok(())
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write_part(f, &self.re, "", &mut first)?;
        write_part(f, &self.im, "i", &mut first)?;
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtScalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn surd_products() {
        assert_eq!(ExtScalar::sqrt2() * ExtScalar::sqrt3(), ExtScalar::sqrt6());
        assert_eq!(ExtScalar::sqrt2() * ExtScalar::sqrt6(), ExtScalar::surd(rational::int(2), 3));
        assert_eq!(ExtScalar::sqrt3() * ExtScalar::sqrt6(), ExtScalar::surd(rational::int(3), 2));
        assert_eq!(ExtScalar::sqrt6() * ExtScalar::sqrt6(), ExtScalar::from_int(6));
    }

    #[test]
    fn conjugate_pair() {
        let a = ExtScalar::one() + ExtScalar::i();
        let b = ExtScalar::one() - ExtScalar::i();
        assert_eq!(a * b, ExtScalar::from_int(2));
    }

    #[test]
    fn half_sqrt6_squared() {
        let h = ExtScalar::surd(rational::frac(1, 2), 6);
        assert_eq!(&h * &h, ExtScalar::frac(3, 2));
    }

    #[test]
    fn float_value() {
        let h = ExtScalar::surd(rational::frac(1, 2), 6);
        assert!((h.to_complex().re - 1.224_744_871_391_589).abs() < 1e-15);
        assert_eq!(ExtScalar::zero().to_complex(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn ratio_detection() {
        let a = ExtScalar::surd(rational::frac(3, 2), 6).times_i();
        let b = ExtScalar::sqrt6().times_i();
        assert_eq!(a.rational_ratio(&b), Some(rational::frac(3, 2)));
        assert_eq!(ExtScalar::sqrt2().rational_ratio(&ExtScalar::sqrt3()), None);
        assert_eq!(ExtScalar::zero().rational_ratio(&ExtScalar::zero()), Some(Rational::zero()));
        assert_eq!(ExtScalar::one().rational_ratio(&ExtScalar::zero()), None);
    }

    #[test]
    fn display() {
        let v = ExtScalar::surd(rational::frac(-1, 2), 6) + ExtScalar::i();
        assert_eq!(v.to_string(), "-1/2√6 + i");
        assert_eq!(ExtScalar::zero().to_string(), "0");
    }

    pub(crate) fn arb_ext() -> impl Strategy<Value = ExtScalar> {
        let coeff = (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rational::frac(n, d));
        proptest::array::uniform8(coeff).prop_map(|c| {
            let [a, b, c0, d, e, f, g, h] = c;
            ExtScalar::new([a, b, c0, d], [e, f, g, h])
        })
    }

    proptest! {
        #[test]
        fn mul_associative(a in arb_ext(), b in arb_ext(), c in arb_ext()) {
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn mul_distributes(a in arb_ext(), b in arb_ext(), c in arb_ext()) {
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        }

        #[test]
        fn conj_is_multiplicative(a in arb_ext(), b in arb_ext()) {
            prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
        }

        #[test]
        fn zero_iff_coefficients_vanish(a in arb_ext()) {
            let all_zero = a.re_coeffs().iter().chain(a.im_coeffs()).all(Zero::is_zero);
            prop_assert_eq!(a.is_zero(), all_zero);
            prop_assert_eq!((&a - &a).is_zero(), true);
        }
    }
}
