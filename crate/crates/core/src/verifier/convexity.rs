//! Strict log-convexity `N(r,2;a)N(r,2;b) > N(r,2;a+b)`: the exact sweep,
//! and the analytic frontier `C_a` that reduces it to finitely many pairs.

use rayon::prelude::*;
use rug::{Float, Integer};

use super::report::{BoundReport, Cell, ClaimKind, Table};
use crate::error::{Error, Result};
use crate::exact_series::{rank_counts, RankTable};
use crate::numeric::{pi, BigReal};

pub const CONVEXITY_PREC: u32 = 256;

/// Smallest `a, b` for which the convexity claim is made, by rank residue.
pub fn convexity_threshold(r: u32) -> u64 {
    if r == 0 {
        11
    } else {
        12
    }
}

/// `l(x) = π sqrt(24x - 1)/6` for real `x`.
fn ell_real(x: &Float) -> Float {
    let prec = x.prec();
    let d = Float::with_val(prec, x * 24u32) - 1u32;
    d.sqrt() * pi(prec) / 6u32
}

/// `M(x) = (√3/(24x-1))(1 - 1/l(x))` for real `x`.
fn m_real(x: &Float) -> Float {
    let prec = x.prec();
    let d = Float::with_val(prec, x * 24u32) - 1u32;
    let one_minus = Float::with_val(prec, 1u32) - ell_real(x).recip();
    Float::with_val(prec, 3u32).sqrt() / d * one_minus
}

/// `T_a(C) = l(a) + l(Ca) - l(a + Ca)`.
pub fn t_a(a: u32, c: &BigReal) -> BigReal {
    let prec = c.prec();
    let a_f = Float::with_val(prec, a);
    let ca = Float::with_val(prec, c * a);
    let sum = Float::with_val(prec, &a_f + &ca);
    ell_real(&a_f) + ell_real(&ca) - ell_real(&sum)
}

/// `S_a(C) = (1 + 1/sqrt(a+Ca)) / ((1 - 1/√a)(1 - 1/sqrt(Ca)))`.
pub fn s_a(a: u32, c: &BigReal) -> BigReal {
    let prec = c.prec();
    let a_f = Float::with_val(prec, a);
    let ca = Float::with_val(prec, c * a);
    let sum = Float::with_val(prec, &a_f + &ca);
    let num = Float::with_val(prec, 1u32) + sum.sqrt().recip();
    let d1 = Float::with_val(prec, 1u32) - a_f.sqrt().recip();
    let d2 = Float::with_val(prec, 1u32) - ca.sqrt().recip();
    num / (d1 * d2)
}

/// `T_a(C) - log S_a(C) + log M(a)`.
pub fn frontier_gap(a: u32, c: &BigReal) -> BigReal {
    let prec = c.prec();
    t_a(a, c) - s_a(a, c).ln() + m_real(&Float::with_val(prec, a)).ln()
}

/// `(T_a(1), log S_a(1) - log M(a))`; the sufficient condition is `lhs > rhs`.
pub fn convexity_analytic(a: u32) -> (BigReal, BigReal) {
    let prec = CONVEXITY_PREC;
    let one = Float::with_val(prec, 1u32);
    let lhs = t_a(a, &one);
    let rhs = s_a(a, &one).ln() - m_real(&Float::with_val(prec, a)).ln();
    (lhs, rhs)
}

#[derive(Clone, Debug)]
pub struct ConvexityFrontier {
    pub a: u32,
    pub c_a: BigReal,
    /// Largest integer `b` with `b/a ≤ C_a`.
    pub max_b: u64,
}

impl ConvexityFrontier {
    /// `C_a` cut (not rounded) to two decimals, e.g. `"2.20"`.
    pub fn c_a_truncated(&self) -> String {
        let hundredths = Float::with_val(self.c_a.prec(), &self.c_a * 100u32).floor();
        let h = hundredths.to_integer().expect("finite").to_u64().expect("small");
        format!("{}.{:02}", h / 100, h % 100)
    }
}

pub const BISECTION_TOLERANCE: f64 = 1e-9;

/// Solves `T_a(C) = log S_a(C) - log M(a)` for `C ∈ [1, 16]` by bisection.
pub fn find_ca(a: u32) -> Result<ConvexityFrontier> {
    let prec = CONVEXITY_PREC;
    let mut lo = Float::with_val(prec, 1u32);
    let mut hi = Float::with_val(prec, 16u32);
    if !(frontier_gap(a, &lo) < 0 && frontier_gap(a, &hi) > 0) {
        return Err(Error::NoSignChange(a));
    }
    while Float::with_val(prec, &hi - &lo) > BISECTION_TOLERANCE {
        let mid = Float::with_val(prec, &lo + &hi) / 2u32;
        if frontier_gap(a, &mid) < 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let c_a = Float::with_val(prec, &lo + &hi) / 2u32;
    // b/a ≤ C_a; the bracket is far narrower than the gap to any b/a
    let max_b = Float::with_val(prec, &c_a * a).floor().to_integer().expect("finite").to_u64().expect("small");
    Ok(ConvexityFrontier { a, c_a, max_b })
}

/// `C_a` for every `a` in `11..=17`.
pub fn frontier_table() -> Result<Vec<ConvexityFrontier>> {
    (11..=17).map(find_ca).collect()
}

/// `T_a(1) > log S_a(1) - log M(a)` at every integer in `a_min..=a_int_max`,
/// then on `grid_points` log-spaced `a` up to `a_grid_max`.
pub fn verify_final_inequality(a_min: u32, a_int_max: u32, a_grid_max: u32, grid_points: usize) -> BoundReport {
    let mut report = BoundReport::new(
        "final-ineq",
        "T_a(1) > log S_a(1) - log M(a)",
        ClaimKind::Strict,
        Table::new(&["a", "T_a(1)", "rhs", "margin"]),
    )
    .with_range(format!("all a in {a_min}..={a_int_max}"));
    let mut points: Vec<u32> = (a_min..=a_int_max).collect();
    if a_grid_max > a_int_max && grid_points > 1 {
        let lo = (a_int_max as f64).ln();
        let hi = (a_grid_max as f64).ln();
        for k in 1..grid_points {
            let a = (lo + (hi - lo) * k as f64 / (grid_points - 1) as f64).exp().round() as u32;
            if a > *points.last().expect("nonempty") {
                points.push(a);
            }
        }
        let extra = points.len() - (a_int_max - a_min + 1) as usize;
        report.range = format!("{}; {extra} sampled points up to {a_grid_max}", report.range);
        report.note(format!("sampled beyond {a_int_max}: {extra} log-spaced points up to {a_grid_max}"));
    }
    let rows: Vec<_> = points
        .par_iter()
        .map(|&a| {
            let (lhs, rhs) = convexity_analytic(a);
            let margin = Float::with_val(CONVEXITY_PREC, &lhs - &rhs);
            (a, margin.clone(), vec![Cell::Int(a as i64), Cell::Real(lhs), Cell::Real(rhs), Cell::Real(margin)])
        })
        .collect();
    for (a, margin, row) in rows {
        report.record(vec![a as i64], margin, row);
    }
    report
}

/// `T_a` strictly increasing and `S_a` strictly decreasing on the grid
/// `C = 1, 1 + step, …, c_max` for each `a` in `11..=17`.
pub fn verify_monotonicity(c_max: f64, step: f64) -> BoundReport {
    let mut report = BoundReport::new(
        "monotonicity",
        "T_a increasing and S_a decreasing in C",
        ClaimKind::Strict,
        Table::new(&["a", "k", "dT", "dS", "margin"]),
    )
    .with_range(format!("a in 11..=17, C in [1, {c_max}] step {step}"));
    let prec = CONVEXITY_PREC;
    let steps = ((c_max - 1.0) / step).round() as u64;
    for a in 11..=17u32 {
        let at = |k: u64| Float::with_val(prec, 1u32) + Float::with_val(prec, step) * k;
        let mut prev_t = t_a(a, &at(0));
        let mut prev_s = s_a(a, &at(0));
        for k in 1..=steps {
            let c = at(k);
            let t = t_a(a, &c);
            let s = s_a(a, &c);
            let dt = Float::with_val(prec, &t - &prev_t);
            let ds = Float::with_val(prec, &prev_s - &s);
            let margin = if dt < ds { dt.clone() } else { ds.clone() };
            report.observe(vec![a as i64, k as i64], margin.clone());
            if k % 20 == 0 {
                report.table.push(vec![Cell::Int(a as i64), Cell::Int(k as i64), Cell::Real(dt), Cell::Real(ds), Cell::Real(margin)]);
            }
            prev_t = t;
            prev_s = s;
        }
    }
    report
}

/// Exact convexity sweep and the sub-threshold failures.
#[derive(Clone, Debug)]
pub struct ConvexityReport {
    /// One row per `(r, a+b)`, holding the pair with the smallest margin;
    /// `checked` counts pairs.
    pub report: BoundReport,
    /// `(r, a, b)`, `a ≤ b`, with `a` below the threshold and the inequality failing.
    pub sub_threshold_failures: Vec<(u32, u64, u64)>,
}

/// `N(r,2;a)N(r,2;b) > N(r,2;a+b)` for `a, b ≥ 11` (r = 0) / `≥ 12` (r = 1), `a + b ≤ max_sum`.
pub fn convexity_exact(max_sum: u64) -> Result<ConvexityReport> {
    Ok(convexity_exact_with(&rank_counts(max_sum as usize)?, max_sum))
}

pub fn convexity_exact_with(table: &RankTable, max_sum: u64) -> ConvexityReport {
    let mut report = BoundReport::new(
        "convexity",
        "N(r,2;a) N(r,2;b) > N(r,2;a+b)",
        ClaimKind::Strict,
        Table::new(&["r", "sum", "a", "b", "margin"]),
    )
    .with_range(format!("r=0: a,b >= 11; r=1: a,b >= 12; a+b <= {max_sum}"));
    let mut failures = Vec::new();
    for r in 0..=1u32 {
        let counts = table.rank_counts(r);
        let thr = convexity_threshold(r);
        let per_sum: Vec<_> = (2..=max_sum)
            .into_par_iter()
            .map(|s| {
                let mut worst: Option<(u64, Integer)> = None;
                let mut below = Vec::new();
                let mut fails = Vec::new();
                let mut pairs = 0u64;
                for a in 1..=s / 2 {
                    let b = s - a;
                    let margin = Integer::from(&counts[a as usize] * &counts[b as usize]) - &counts[s as usize];
                    if a >= thr {
                        pairs += 1;
                        if margin <= 0 {
                            fails.push(a);
                        }
                        if worst.as_ref().is_none_or(|(_, w)| margin < *w) {
                            worst = Some((a, margin));
                        }
                    } else if margin <= 0 {
                        below.push((r, a, b));
                    }
                }
                (s, worst, fails, below, pairs)
            })
            .collect();
        for (s, worst, fails, below, pairs) in per_sum {
            failures.extend(below);
            if let Some((a, margin)) = worst {
                for fa in fails.into_iter().filter(|&fa| fa != a) {
                    report.failures.push(vec![r as i64, fa as i64, (s - fa) as i64]);
                }
                report.record_exact(
                    vec![r as i64, a as i64, (s - a) as i64],
                    &margin,
                    vec![Cell::Int(r as i64), Cell::Int(s as i64), Cell::Int(a as i64), Cell::Int((s - a) as i64), Cell::Big(margin.clone())],
                );
                report.checked += pairs - 1;
            }
        }
    }
    ConvexityReport { report, sub_threshold_failures: failures }
}
