//! Kloosterman sums, the `I₁` Bessel function, and the exact-formula series
//! for the Fourier coefficients of `F`.

use rayon::prelude::*;
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::exact_series::f_weakly_holomorphic_coeffs;
use crate::numeric::{exact_float, pi, BigReal};
use crate::verifier::{BoundReport, Cell, ClaimKind, Table};

/// Divisors of 6 with their Atkin–Lehner signs `β(ℓ)`.
pub const LEVELS: [(u32, i32); 4] = [(1, 1), (2, 1), (3, -1), (6, -1)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KloostermanParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

fn mod_inverse(d: i64, c: i64) -> Option<i64> {
    let (mut r0, mut r1) = (c, d.rem_euclid(c));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(c))
}

/// Histogram of `(a d̄ + b d) mod c` over units `d mod c`.
fn residue_counts(p: &KloostermanParams) -> Vec<u64> {
    let c = p.c;
    let mut counts = vec![0u64; c as usize];
    if c == 1 {
        counts[0] = 1;
        return counts;
    }
    for d in 1..c {
        if let Some(inv) = mod_inverse(d, c) {
            let k = (p.a.rem_euclid(c) as i128 * inv as i128 + p.b.rem_euclid(c) as i128 * d as i128) % c as i128;
            counts[k as usize] += 1;
        }
    }
    counts
}

/// `S(a,b;c) = Σ_{d mod c, (d,c)=1} e((a d̄ + b d)/c)`.
///
/// The sum is real; the imaginary part is evaluated and must vanish to
/// `2^{-precision/2}`.
pub fn kloosterman_sum(p: KloostermanParams, precision: u32) -> Result<BigReal> {
    if p.c < 1 {
        return Err(Error::Domain(format!("Kloosterman modulus {} must be positive", p.c)));
    }
    let prec = precision + 16;
    let counts = residue_counts(&p);
    let two_pi_over_c = pi(prec) * 2u32 / p.c;
    let mut re = Float::new(prec);
    let mut im = Float::new(prec);
    for (k, &n) in counts.iter().enumerate() {
        if n == 0 {
            continue;
        }
        let (s, c) = Float::with_val(prec, &two_pi_over_c * k as u32).sin_cos(Float::new(prec));
        re += c * n;
        im += s * n;
    }
    let tol = Float::with_val(prec, Float::i_exp(1, -(precision as i32) / 2));
    if im.clone().abs() > tol {
        return Err(Error::KloostermanImaginary { a: p.a, b: p.b, c: p.c, imag: im.to_string() });
    }
    Ok(Float::with_val(precision, re))
}

/// Real part of `S(a,b;c)` using only `k ≤ c/2`; the residue histogram of a
/// Kloosterman sum is symmetric under `k ↦ -k`, which is asserted.
fn kloosterman_real(p: &KloostermanParams, prec: u32) -> Float {
    let counts = residue_counts(p);
    let c = p.c as usize;
    let two_pi_over_c = pi(prec) * 2u32 / p.c;
    let mut re = Float::new(prec);
    for k in 0..=c / 2 {
        let mut n = counts[k];
        if k != 0 && 2 * k != c {
            debug_assert_eq!(counts[k], counts[c - k]);
            n += counts[c - k];
        }
        if n != 0 {
            re += Float::with_val(prec, &two_pi_over_c * k as u32).cos() * n;
        }
    }
    re
}

/// `I₁(x) = Σ_{k≥0} (x/2)^{2k+1} / (k!(k+1)!)` for `x ≥ 0`.
pub fn bessel_i1(x: &BigReal, precision: u32) -> BigReal {
    assert!(*x >= 0, "bessel_i1 is evaluated for x >= 0");
    let prec = precision + 16;
    let half = Float::with_val(prec, x / 2u32);
    if half == 0 {
        return Float::new(precision);
    }
    let sq = Float::with_val(prec, half.square_ref());
    let mut term = half.clone();
    let mut sum = half;
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32)));
    for k in 1u32.. {
        term *= &sq;
        term /= k * (k + 1);
        sum += &term;
        if Float::with_val(prec, &term / &sum) < eps {
            break;
        }
    }
    Float::with_val(precision, sum)
}

/// Whether `c` contributes to the `ℓ` inner sum: `c ≡ 0 (mod 6/ℓ)`, `(c, ℓ) = 1`.
pub fn admissible(c: i64, ell: u32) -> bool {
    let ell = ell as i64;
    c % (6 / ell) == 0 && crate::quadforms::gcd(c, ell) == 1
}

/// Truncated exact-formula series for `a(n)`.
#[derive(Clone, Debug)]
pub struct CoefficientSeriesState {
    pub n: u64,
    pub c_max: u64,
    /// Signed, weighted inner sums for `ℓ = 1, 2, 3, 6` (each already
    /// multiplied by `2π β(ℓ) / (√n √ℓ)`).
    pub partial: [BigReal; 4],
    pub total: BigReal,
    /// Running total after each `c = 1..=c_max`.
    pub trajectory: Vec<f64>,
}

fn series_term(n: u64, c: i64, ell: u32, prec: u32) -> Float {
    let ell_bar = if c == 1 { 0 } else { mod_inverse(ell as i64, c).expect("ℓ is a unit mod c") };
    let p = KloostermanParams { a: -ell_bar, b: n as i64, c };
    let s = kloosterman_real(&p, prec);
    let root_n = Float::with_val(prec, n).sqrt();
    let root_l = Float::with_val(prec, ell).sqrt();
    let arg = pi(prec) * 4u32 * &root_n / (Float::with_val(prec, &root_l * c));
    s * bessel_i1(&arg, prec) / c
}

/// `a(n) ≈ (2π/√n) Σ_{ℓ|6} (β(ℓ)/√ℓ) Σ_{c ≤ c_max} c^{-1} S(-ℓ̄,n;c) I₁(4π√n/(c√ℓ))`.
pub fn a_coefficient_series(n: u64, c_max: u64, precision: u32) -> Result<CoefficientSeriesState> {
    if n < 1 || c_max < 6 {
        return Err(Error::Domain(format!("series needs n >= 1 and c_max >= 6, got n = {n}, c_max = {c_max}")));
    }
    let prec = precision.max(53);
    // per c, the four ℓ contributions (zero when inadmissible)
    let rows: Vec<[Float; 4]> = (1..=c_max as i64)
        .into_par_iter()
        .map(|c| {
            LEVELS.map(|(ell, _)| {
                if admissible(c, ell) {
                    series_term(n, c, ell, prec)
                } else {
                    Float::new(prec)
                }
            })
        })
        .collect();
    let root_n = Float::with_val(prec, n).sqrt();
    let weights: [Float; 4] = LEVELS.map(|(ell, beta)| {
        let w = pi(prec) * 2u32 / &root_n / Float::with_val(prec, ell).sqrt();
        if beta < 0 {
            -w
        } else {
            w
        }
    });
    let mut raw: [Float; 4] = std::array::from_fn(|_| Float::new(prec));
    let mut trajectory = Vec::with_capacity(rows.len());
    let mut running = Float::new(prec);
    for row in &rows {
        for i in 0..4 {
            raw[i] += &row[i];
            running += Float::with_val(prec, &row[i] * &weights[i]);
        }
        trajectory.push(running.to_f64());
    }
    let partial: [Float; 4] = std::array::from_fn(|i| Float::with_val(prec, &raw[i] * &weights[i]));
    let mut total = Float::new(prec);
    for p in &partial {
        total += p;
    }
    Ok(CoefficientSeriesState { n, c_max, partial, total, trajectory })
}

/// Plateau acceptance for a slowly converging series.
#[derive(Clone, Debug)]
pub struct Plateau {
    pub value: f64,
    /// `max - min` of the running total over the trailing window.
    pub oscillation: f64,
    pub window_start: u64,
    pub accepted: bool,
}

/// Accepts when the running total varies by at most `rel_tol · |final|`
/// over the trailing `window_frac` of the `c` range.
pub fn detect_plateau(state: &CoefficientSeriesState, window_frac: f64, rel_tol: f64) -> Plateau {
    let len = state.trajectory.len();
    let start = ((1.0 - window_frac) * len as f64).floor() as usize;
    let window = &state.trajectory[start.min(len - 1)..];
    let (lo, hi) = window.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let value = *state.trajectory.last().expect("nonempty trajectory");
    let oscillation = hi - lo;
    Plateau { value, oscillation, window_start: start as u64 + 1, accepted: oscillation <= rel_tol * value.abs() }
}

/// Möbius function on `0..=n` (index 0 unused).
pub fn mobius_table(n: usize) -> Vec<i8> {
    let mut mu = vec![1i8; n + 1];
    let mut composite = vec![false; n + 1];
    if n >= 1 {
        mu[0] = 0;
    }
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        for m in (p..=n).step_by(p) {
            if m > p {
                composite[m] = true;
            }
            mu[m] = -mu[m];
        }
        let sq = p * p;
        for m in (sq..=n).step_by(sq) {
            mu[m] = 0;
        }
    }
    mu
}

#[derive(Clone, Debug)]
pub struct B0Series {
    pub c_max: u64,
    /// `Σ_{c ≤ c_max, admissible} μ(c)/c²` for `ℓ = 1, 2, 3, 6`.
    pub sub_sums: [BigReal; 4],
    pub total: BigReal,
    /// Upper bound on `|b_F(0) - total|` from the omitted `c > c_max`.
    pub tail_bound: BigReal,
}

/// `b_F(0) = 4π² Σ_{ℓ|6} (β(ℓ)/ℓ) Σ_c μ(c)/c²`, truncated at `c_max`,
/// using `S(-ℓ̄, 0; c) = μ(c)`.
pub fn b0_series(c_max: u64, precision: u32) -> Result<B0Series> {
    if c_max < 6 {
        return Err(Error::Domain(format!("c_max = {c_max} is below 6")));
    }
    let prec = precision.max(64);
    let mu = mobius_table(c_max as usize);
    let mut sub_sums: [Float; 4] = std::array::from_fn(|_| Float::new(prec));
    for (i, &(ell, _)) in LEVELS.iter().enumerate() {
        for c in 1..=c_max as i64 {
            if admissible(c, ell) && mu[c as usize] != 0 {
                let term = Float::with_val(prec, c * c).recip();
                if mu[c as usize] > 0 {
                    sub_sums[i] += term;
                } else {
                    sub_sums[i] -= term;
                }
            }
        }
    }
    let four_pi_sq = Float::with_val(prec, pi(prec).square_ref()) * 4u32;
    let mut total = Float::new(prec);
    let mut tail_weight = Float::new(prec);
    for (i, &(ell, beta)) in LEVELS.iter().enumerate() {
        let w = Float::with_val(prec, &sub_sums[i] / ell);
        if beta < 0 {
            total -= w;
        } else {
            total += w;
        }
        tail_weight += Float::with_val(prec, ell).recip();
    }
    total *= &four_pi_sq;
    // Σ_{c > C} 1/c² < 1/C for each ℓ
    let tail_bound = four_pi_sq * tail_weight / c_max;
    Ok(B0Series { c_max, sub_sums, total, tail_bound })
}

/// The closed forms `(1/ζ(2)) · {1/24, -1/6, -3/8, 3/2}` of the four sub-sums.
pub fn b0_sub_sum_limits(prec: u32) -> [BigReal; 4] {
    let zeta2 = Float::with_val(prec, Constant::Pi).square() / 6u32;
    [(1, 24), (-1, 6), (-3, 8), (3, 2)].map(|(num, den)| Float::with_val(prec, num) / den / &zeta2)
}

/// `C = 8√6 π^{3/2} + 16π² ζ(3/2)²`.
pub fn coefficient_bound_constant(prec: u32) -> BigReal {
    let p = pi(prec);
    let first = Float::with_val(prec, 6).sqrt() * 8u32 * Float::with_val(prec, (&p).pow(1.5f64));
    let zeta = Float::with_val(prec, 1.5).zeta();
    let second = Float::with_val(prec, p.square_ref()) * 16u32 * zeta.square();
    first + second
}

/// Checks `|c_F(n)| ≤ C e^{4π√n}` for `1 ≤ n ≤ n_max` using exact coefficients.
pub fn coefficient_bound_check(n_max: u64) -> Result<BoundReport> {
    let prec = 256;
    let coeffs = f_weakly_holomorphic_coeffs(n_max as usize)?;
    let c = coefficient_bound_constant(prec);
    let mut report = BoundReport::new(
        "lemma32",
        "|c_F(n)| <= C exp(4 pi sqrt n)",
        ClaimKind::Strict,
        Table::new(&["n", "coefficient", "bound", "ratio", "margin"]),
    )
    .with_range(format!("1..={n_max}"));
    for n in 1..=n_max {
        let coeff: Integer = coeffs.coeff(n as i64);
        let arg = pi(prec) * 4u32 * Float::with_val(prec, n).sqrt();
        let bound = Float::with_val(prec, &c * arg.exp());
        let abs = exact_float(&Integer::from(coeff.abs_ref()), prec);
        let ratio = Float::with_val(prec, &abs / &bound);
        let margin = Float::with_val(prec, &bound - &abs);
        report.record(
            vec![n as i64],
            margin.clone(),
            vec![Cell::Int(n as i64), Cell::Big(coeff), Cell::Real(bound), Cell::Real(ratio), Cell::Real(margin)],
        );
    }
    Ok(report)
}
