//! Arbitrary-precision real and complex scalars.
//!
//! Reals are MPFR floats with an explicit bit precision. [`BigComplex`] is a
//! plain pair of them; only the handful of operations needed by the modular
//! evaluation code are provided.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::Constant;
use rug::{Float, Integer};

pub type BigReal = Float;
pub type ExactInt = Integer;

pub fn pi(prec: u32) -> BigReal {
    Float::with_val(prec, Constant::Pi)
}

/// Parses a decimal literal such as `"4.30e23"` at the given precision.
pub fn decimal(prec: u32, literal: &str) -> BigReal {
    let parsed = Float::parse(literal).unwrap_or_else(|e| panic!("bad literal {literal}: {e}"));
    Float::with_val(prec, parsed)
}

/// Converts an integer to a float without rounding.
pub fn exact_float(value: &Integer, min_prec: u32) -> BigReal {
    let bits = value.significant_bits().max(min_prec);
    Float::with_val(bits, value)
}

/// Formats with 30 significant decimal digits.
pub fn fmt_real(x: &BigReal) -> String {
    x.to_string_radix(10, Some(30))
}

/// `l(n) = π·sqrt(24n - 1)/6`.
pub fn ell(prec: u32, n: f64) -> BigReal {
    let d = Float::with_val(prec, 24.0 * n - 1.0);
    d.sqrt() * pi(prec) / 6u32
}

#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        BigComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        BigComplex::new(Float::new(prec), Float::new(prec))
    }

    pub fn one(prec: u32) -> Self {
        BigComplex::new(Float::with_val(prec, 1), Float::new(prec))
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        BigComplex::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn scale(&self, k: &BigReal) -> Self {
        BigComplex::new(Float::with_val(self.prec(), &self.re * k), Float::with_val(self.prec(), &self.im * k))
    }

    pub fn scale_int(&self, k: i64) -> Self {
        BigComplex::new(self.re.clone() * k, self.im.clone() * k)
    }

    pub fn norm_sqr(&self) -> BigReal {
        let re2 = Float::with_val(self.prec(), self.re.square_ref());
        re2 + Float::with_val(self.prec(), self.im.square_ref())
    }

    pub fn abs(&self) -> BigReal {
        self.norm_sqr().sqrt()
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        BigComplex::new(Float::with_val(self.prec(), &self.re / &n), -Float::with_val(self.prec(), &self.im / &n))
    }

    pub fn div(&self, other: &BigComplex) -> Self {
        self * &other.recip()
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// `exp(2πi·z)`.
    pub fn e(&self) -> Self {
        let prec = self.prec();
        let two_pi = pi(prec) * 2u32;
        let modulus = (-Float::with_val(prec, &two_pi * &self.im)).exp();
        let angle = Float::with_val(prec, &two_pi * &self.re);
        let (s, c) = angle.sin_cos(Float::new(prec));
        BigComplex::new(c * &modulus, s * modulus)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        write!(f, "{} {} {}i", fmt_real(&self.re), sign, fmt_real(&Float::with_val(self.im.prec(), self.im.abs_ref())))
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        let p = self.prec();
        BigComplex::new(Float::with_val(p, &self.re + &rhs.re), Float::with_val(p, &self.im + &rhs.im))
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        let p = self.prec();
        BigComplex::new(Float::with_val(p, &self.re - &rhs.re), Float::with_val(p, &self.im - &rhs.im))
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        let p = self.prec();
        let ac = Float::with_val(p, &self.re * &rhs.re);
        let bd = Float::with_val(p, &self.im * &rhs.im);
        let ad = Float::with_val(p, &self.re * &rhs.im);
        let bc = Float::with_val(p, &self.im * &rhs.re);
        BigComplex::new(ac - bd, ad + bc)
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-self.re, -self.im)
    }
}

impl Add for BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: BigComplex) -> BigComplex {
        &self + &rhs
    }
}

impl Sub for BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: BigComplex) -> BigComplex {
        &self - &rhs
    }
}

impl Mul for BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: BigComplex) -> BigComplex {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_of_integer_is_one() {
        let z = BigComplex::from_f64(128, 3.0, 0.0);
        let w = z.e();
        assert!((w.re.to_f64() - 1.0).abs() < 1e-30);
        assert!(w.im.to_f64().abs() < 1e-30);
    }

    #[test]
    fn e_of_imaginary_decays() {
        let w = BigComplex::from_f64(128, 0.0, 1.0).e();
        let expect = (-2.0 * std::f64::consts::PI).exp();
        assert!((w.re.to_f64() - expect).abs() < 1e-15);
    }

    #[test]
    fn complex_division_inverts_multiplication() {
        let a = BigComplex::from_f64(200, 1.5, -2.25);
        let b = BigComplex::from_f64(200, -0.5, 3.0);
        let back = (&a * &b).div(&b);
        let diff = (&back - &a).abs();
        assert!(diff < 1e-55);
    }

    #[test]
    fn decimal_literal_parses_exactly_enough() {
        let x = decimal(256, "4.30e23");
        assert_eq!(x.to_integer().unwrap(), Integer::from(430_000_000_000_000_000_000_000u128));
    }
}
