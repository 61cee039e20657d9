//! Exact integer q-series: partition numbers, mock theta coefficients, even
//! and odd rank counts, and the q-expansion of the level-6 form `F`.

mod enumerate;
mod series;

use rug::ops::Pow;
use rug::Integer;

pub use enumerate::{
    for_each_partition, partition_count_brute, rank, rank_count_brute, rank_count_brute_with_cap, rank_distribution,
    DEFAULT_ENUMERATION_CAP,
};
pub use series::IntSeries;

use crate::error::{Error, Result};

/// `p(0..=n_max)` from Euler's pentagonal-number recurrence.
pub fn partition_counts(n_max: usize) -> Vec<Integer> {
    let mut p = vec![Integer::new(); n_max + 1];
    p[0] = Integer::from(1);
    for n in 1..=n_max {
        let mut acc = Integer::new();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let plus = k % 2 == 1;
            if plus {
                acc += &p[n - g1];
            } else {
                acc -= &p[n - g1];
            }
            if g2 <= n {
                if plus {
                    acc += &p[n - g2];
                } else {
                    acc -= &p[n - g2];
                }
            }
        }
        p[n] = acc;
    }
    p
}

/// Coefficients of `f(q) = Σ_{m≥0} q^{m²} / (-q;q)_m²` through `q^n_max`.
///
/// Index 0 holds the constant term 1 of that sum; `α(n)` for `n ≥ 1` sits at
/// index `n`.
pub fn mock_theta_coeffs(n_max: usize) -> Vec<Integer> {
    let order = n_max as i64;
    let mut total = IntSeries::one(order);
    // term_m = q^{m²}/(-q;q)_m², updated from term_{m-1} by q^{2m-1}/(1+q^m)²
    let mut term = IntSeries::one(order);
    let mut m = 1usize;
    while m * m <= n_max {
        let mut coeffs = vec![Integer::new(); n_max + 1];
        let shift = 2 * m - 1;
        for (e, c) in term.coeffs().iter().enumerate().take(n_max + 1 - shift) {
            coeffs[e + shift] = c.clone();
        }
        term = IntSeries::new(0, coeffs);
        term.div_binomial(m, 1);
        term.div_binomial(m, 1);
        total = total.add(&term);
        m += 1;
    }
    total.into_coeffs()
}

/// Exact `p(n)`, `α(n)` and `N(r,2;n)` for `0 ≤ n ≤ n_max`.
#[derive(Clone, Debug)]
pub struct RankTable {
    pub n_max: usize,
    pub p: Vec<Integer>,
    pub alpha: Vec<Integer>,
    pub n0: Vec<Integer>,
    pub n1: Vec<Integer>,
}

impl RankTable {
    /// `N(r,2;n)`.
    pub fn rank_count(&self, r: u32, n: usize) -> &Integer {
        match r {
            0 => &self.n0[n],
            1 => &self.n1[n],
            _ => panic!("rank residue {r} is not 0 or 1"),
        }
    }

    pub fn rank_counts(&self, r: u32) -> &[Integer] {
        match r {
            0 => &self.n0,
            1 => &self.n1,
            _ => panic!("rank residue {r} is not 0 or 1"),
        }
    }
}

/// Builds the rank table; `N(r,2;n) = (p(n) + (-1)^r α(n)) / 2`.
///
/// Index 0 holds the values for the empty partition (rank 0).
pub fn rank_counts(n_max: usize) -> Result<RankTable> {
    let p = partition_counts(n_max);
    let alpha = mock_theta_coeffs(n_max);
    let mut n0 = Vec::with_capacity(n_max + 1);
    let mut n1 = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let even = Integer::from(&p[n] + &alpha[n]);
        let odd = Integer::from(&p[n] - &alpha[n]);
        if even.is_odd() {
            return Err(Error::RankParity { n, sign: '+' });
        }
        if odd.is_odd() {
            return Err(Error::RankParity { n, sign: '-' });
        }
        n0.push(even >> 1);
        n1.push(odd >> 1);
    }
    Ok(RankTable { n_max, p, alpha, n0, n1 })
}

/// `σ₃(k) = Σ_{d | k} d³`.
pub fn sigma3(k: u64) -> Integer {
    assert!(k >= 1, "sigma3 is defined for k >= 1");
    let mut total = Integer::new();
    let mut d = 1u64;
    while d * d <= k {
        if k % d == 0 {
            total += Integer::from(d).pow(3);
            let e = k / d;
            if e != d {
                total += Integer::from(e).pow(3);
            }
        }
        d += 1;
    }
    total
}

/// `σ₃(1..=k_max)` by a divisor sieve; index 0 is unused and zero.
pub fn sigma3_table(k_max: usize) -> Vec<u64> {
    let mut s = vec![0u64; k_max + 1];
    for d in 1..=k_max {
        let cube = (d as u64).pow(3);
        for m in (d..=k_max).step_by(d) {
            s[m] += cube;
        }
    }
    s
}

/// `E₄(q) = 1 + 240 Σ σ₃(k) q^k` through `q^order`.
fn eisenstein_e4(order: i64) -> IntSeries {
    let sig = sigma3_table(order.max(0) as usize);
    let mut c: Vec<Integer> = sig.iter().map(|&s| Integer::from(s) * 240u32).collect();
    c[0] = Integer::from(1);
    IntSeries::new(0, c)
}

/// `Π_{k≥1} (1 - q^k)` through `q^order`, from the pentagonal-number theorem.
pub fn euler_product(order: i64) -> IntSeries {
    let mut c = vec![Integer::new(); order as usize + 1];
    c[0] = Integer::from(1);
    for k in 1i64.. {
        let g1 = k * (3 * k - 1) / 2;
        if g1 > order {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        c[g1 as usize] += sign;
        let g2 = k * (3 * k + 1) / 2;
        if g2 <= order {
            c[g2 as usize] += sign;
        }
    }
    IntSeries::new(0, c)
}

/// Exact q-expansion of
/// `F = -(1/40)(E₄(z) + 4E₄(2z) - 9E₄(3z) - 36E₄(6z)) / (η(z)η(2z)η(3z)η(6z))²`
/// with coefficients `c_F(-1..=n_max)`.
pub fn f_weakly_holomorphic_coeffs(n_max: usize) -> Result<IntSeries> {
    // (η(z)η(2z)η(3z)η(6z))² = q · P(q)², so F = -(1/40) q^{-1} num / P².
    let order = n_max as i64 + 1;
    let e4 = eisenstein_e4(order);
    let num = e4
        .add(&e4.dilate(2, order).scale(&Integer::from(4)))
        .sub(&e4.dilate(3, order).scale(&Integer::from(9)))
        .sub(&e4.dilate(6, order).scale(&Integer::from(36)));
    let euler = euler_product(order);
    let mut prod = IntSeries::one(order);
    for k in [1, 2, 3, 6] {
        prod = prod.mul(&euler.dilate(k, order));
    }
    let den = prod.mul(&prod);
    let quotient = num.mul(&den.inverse()?).scale(&Integer::from(-1));
    quotient.div_exact(40).map(|s| s.shift(-1))
}
