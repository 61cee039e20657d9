use rug::Integer;

use crate::error::{Error, Result};

/// A truncated Laurent series in `q` with exact integer coefficients.
///
/// `coeffs[k]` is the coefficient of `q^(offset + k)`; the series is known
/// through `q^order` with `order = offset + coeffs.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSeries {
    offset: i64,
    coeffs: Vec<Integer>,
}

impl IntSeries {
    pub fn new(offset: i64, coeffs: Vec<Integer>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        IntSeries { offset, coeffs }
    }

    pub fn zero(offset: i64, order: i64) -> Self {
        assert!(order >= offset);
        IntSeries::new(offset, vec![Integer::new(); (order - offset + 1) as usize])
    }

    pub fn one(order: i64) -> Self {
        let mut s = IntSeries::zero(0, order);
        s.coeffs[0] = Integer::from(1);
        s
    }

    pub fn from_i64(offset: i64, coeffs: &[i64]) -> Self {
        IntSeries::new(offset, coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn order(&self) -> i64 {
        self.offset + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    /// Coefficient of `q^exponent`; zero below the offset.
    ///
    /// Panics when `exponent` lies beyond the truncation order.
    pub fn coeff(&self, exponent: i64) -> Integer {
        assert!(exponent <= self.order(), "q^{exponent} is beyond the truncation order {}", self.order());
        if exponent < self.offset {
            Integer::new()
        } else {
            self.coeffs[(exponent - self.offset) as usize].clone()
        }
    }

    pub fn truncate(&self, order: i64) -> Self {
        assert!(order >= self.offset && order <= self.order());
        IntSeries::new(self.offset, self.coeffs[..=(order - self.offset) as usize].to_vec())
    }

    fn combine(&self, other: &Self, f: impl Fn(&mut Integer, &Integer)) -> Self {
        let offset = self.offset.min(other.offset);
        let order = self.order().min(other.order());
        let mut out = IntSeries::zero(offset, order);
        for e in offset..=order {
            let slot = &mut out.coeffs[(e - offset) as usize];
            if e >= self.offset {
                *slot += &self.coeffs[(e - self.offset) as usize];
            }
            if e >= other.offset {
                f(slot, &other.coeffs[(e - other.offset) as usize]);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| *a += b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| *a -= b)
    }

    pub fn scale(&self, k: &Integer) -> Self {
        IntSeries::new(self.offset, self.coeffs.iter().map(|c| Integer::from(c * k)).collect())
    }

    /// Truncated product; the result is known as far as both factors allow.
    pub fn mul(&self, other: &Self) -> Self {
        let offset = self.offset + other.offset;
        let order = (self.order() + other.offset).min(other.order() + self.offset);
        let mut out = IntSeries::zero(offset, order);
        let len = out.coeffs.len();
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len.saturating_sub(i)) {
                if *b != 0 {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Multiplicative inverse of a power series with constant term ±1.
    pub fn inverse(&self) -> Result<Self> {
        if self.offset != 0 || (self.coeffs[0] != 1 && self.coeffs[0] != -1) {
            return Err(Error::NotAUnit(format!("q^{} * {}", self.offset, self.coeffs[0])));
        }
        let c0 = self.coeffs[0].clone();
        let n = self.coeffs.len();
        let mut inv = vec![Integer::new(); n];
        inv[0] = c0.clone();
        for k in 1..n {
            let mut acc = Integer::new();
            for j in 1..=k {
                if self.coeffs[j] != 0 {
                    acc += &self.coeffs[j] * &inv[k - j];
                }
            }
            // c0 = ±1 is its own inverse
            inv[k] = -(acc * &c0);
        }
        Ok(IntSeries::new(0, inv))
    }

    /// Multiplies by `q^k`, keeping the same number of known coefficients
    /// relative to the new truncation order `order + k`.
    pub fn shift(&self, k: i64) -> Self {
        IntSeries::new(self.offset + k, self.coeffs.clone())
    }

    /// Substitutes `q -> q^k` for `k >= 1`, truncated at `order`.
    pub fn dilate(&self, k: i64, order: i64) -> Self {
        assert!(k >= 1 && self.offset >= 0);
        assert!(order <= k * self.order() + k - 1, "dilation would leave unknown coefficients");
        let mut out = IntSeries::zero(0, order);
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = k * (self.offset + i as i64);
            if e > order {
                break;
            }
            out.coeffs[e as usize] = c.clone();
        }
        out
    }

    /// Divides by `1 + sign * q^k` (k >= 1) in place via the linear recurrence
    /// `c[e] = a[e] - sign * c[e - k]`.
    pub fn div_binomial(&mut self, k: usize, sign: i32) {
        assert!(k >= 1);
        for e in k..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(e);
            if sign > 0 {
                hi[0] -= &lo[e - k];
            } else {
                hi[0] += &lo[e - k];
            }
        }
    }

    /// Exact division of every coefficient by `d`.
    pub fn div_exact(&self, d: i64) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_divisible(&Integer::from(d)) {
                return Err(Error::InexactDivision { exponent: self.offset + i as i64, divisor: d });
            }
            out.push(Integer::from(c / d));
        }
        Ok(IntSeries::new(self.offset, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_of_one_minus_q_is_geometric() {
        let s = IntSeries::from_i64(0, &[1, -1, 0, 0, 0, 0]);
        let inv = s.inverse().unwrap();
        assert_eq!(inv, IntSeries::from_i64(0, &[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn inverse_rejects_non_unit() {
        let s = IntSeries::from_i64(0, &[2, 1, 0]);
        assert!(matches!(s.inverse(), Err(Error::NotAUnit(_))));
        let shifted = IntSeries::from_i64(1, &[1, 1]);
        assert!(shifted.inverse().is_err());
    }

    #[test]
    fn negative_unit_inverts() {
        let s = IntSeries::from_i64(0, &[-1, 1, 0, 0]);
        let inv = s.inverse().unwrap();
        assert_eq!(s.mul(&inv), IntSeries::one(3));
    }

    #[test]
    fn div_binomial_matches_inverse() {
        let mut a = IntSeries::from_i64(0, &[1, 2, 3, 4, 5, 6, 7, 8]);
        let expect = a.mul(&IntSeries::from_i64(0, &[1, 0, 0, 1, 0, 0, 0, 0]).inverse().unwrap());
        a.div_binomial(3, 1);
        assert_eq!(a, expect);
    }

    #[test]
    fn div_exact_reports_offending_exponent() {
        let s = IntSeries::from_i64(-1, &[40, 80, 41]);
        match s.div_exact(40) {
            Err(Error::InexactDivision { exponent, divisor }) => {
                assert_eq!((exponent, divisor), (1, 40));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn laurent_product_tracks_offsets() {
        let a = IntSeries::from_i64(-1, &[1, 2, 3]);
        let b = IntSeries::from_i64(0, &[1, 1, 1]);
        let p = a.mul(&b);
        assert_eq!(p.offset(), -1);
        assert_eq!(p.order(), 1);
        assert_eq!(p.coeff(-1), 1);
        assert_eq!(p.coeff(0), 3);
        assert_eq!(p.coeff(1), 6);
    }

    proptest! {
        #[test]
        fn unit_series_times_inverse_is_one(tail in proptest::collection::vec(-50i64..50, 1..25), neg in any::<bool>()) {
            let mut c = vec![if neg { -1 } else { 1 }];
            c.extend(tail);
            let s = IntSeries::from_i64(0, &c);
            let inv = s.inverse().unwrap();
            prop_assert_eq!(s.mul(&inv), IntSeries::one(s.order()));
        }

        #[test]
        fn product_is_commutative(a in proptest::collection::vec(-9i64..9, 1..12), b in proptest::collection::vec(-9i64..9, 1..12)) {
            let x = IntSeries::from_i64(0, &a);
            let y = IntSeries::from_i64(-1, &b);
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }
    }
}
