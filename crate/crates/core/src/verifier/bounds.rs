//! Effective bounds for `α(n)`, `p(n)` and the even/odd rank counts.

use rayon::prelude::*;
use rug::{Float, Integer};

use super::report::{BoundReport, Cell, ClaimKind, Table};
use crate::error::Result;
use crate::exact_series::{rank_counts, RankTable};
use crate::heegner::{error_term, main_term};
use crate::numeric::{decimal, ell, exact_float, BigReal};

/// Working precision for comparisons at `n`: enough for `e^{l(n)}` plus 192 guard bits.
pub fn prec_for(n: u64) -> u32 {
    let l = std::f64::consts::PI * ((24 * n - 1) as f64).sqrt() / 6.0;
    (l * std::f64::consts::LOG2_E).ceil() as u32 + 192
}

/// `M(n) = (√3/(24n-1))(1 - 1/l(n))`.
pub fn m_coefficient(n: u64, prec: u32) -> BigReal {
    let l = ell(prec, n as f64);
    let one_minus = Float::with_val(prec, 1u32) - l.recip();
    Float::with_val(prec, 3u32).sqrt() / (24 * n - 1) * one_minus
}

fn exp_ell(n: u64, prec: u32, num: u32, den: u32) -> BigReal {
    (ell(prec, n as f64) * num / den).exp()
}

fn ranges_ok(lo: u64, hi: u64) -> String {
    format!("{lo}..={hi}")
}

/// `|α(n) - main(n)| < (4.30×10²³) 2^{q(n)} |D_n|² e^{l(n)/3}` for `1 ≤ n ≤ n_max`.
pub fn verify_theorem_main(n_max: u64) -> Result<BoundReport> {
    verify_theorem_main_with(&rank_counts(n_max as usize)?, n_max)
}

pub fn verify_theorem_main_with(table: &RankTable, n_max: u64) -> Result<BoundReport> {
    let mut report = BoundReport::new(
        "theorem-main",
        "|alpha(n) - (-1)^(n+1) sqrt6/sqrt(24n-1) e^(l/2)| < 4.30e23 2^q(n) |D_n|^2 e^(l/3)",
        ClaimKind::Strict,
        Table::new(&["n", "alpha", "main", "E", "bound", "margin"]),
    )
    .with_range(ranges_ok(1, n_max));
    let rows: Vec<(u64, Float, Vec<Cell>)> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let prec = prec_for(n);
            let alpha = &table.alpha[n as usize];
            let main = main_term(n, prec);
            let e = Float::with_val(prec, alpha - &main);
            let bound = error_term(n, prec);
            let margin = &bound - e.clone().abs();
            let row = vec![
                Cell::Int(n as i64),
                Cell::Big(alpha.clone()),
                Cell::Real(main),
                Cell::Real(e),
                Cell::Real(bound),
                Cell::Real(margin.clone()),
            ];
            (n, margin, row)
        })
        .collect();
    for (n, margin, row) in rows {
        report.record(vec![n as i64], margin, row);
    }
    Ok(report)
}

/// Main term `(2√3/(24n-1))(1 - 1/l(n)) e^{l(n)}` of `p(n)`.
pub fn partition_main_term(n: u64, prec: u32) -> BigReal {
    m_coefficient(n, prec) * 2u32 * exp_ell(n, prec, 1, 1)
}

/// `|p(n) - main_p(n)| ≤ 1313 e^{l(n)/2}` for `1 ≤ n ≤ n_max`.
pub fn verify_partition_error(n_max: u64) -> Result<BoundReport> {
    verify_partition_error_with(&rank_counts(n_max as usize)?, n_max)
}

pub fn verify_partition_error_with(table: &RankTable, n_max: u64) -> Result<BoundReport> {
    let mut report = BoundReport::new(
        "partition-error",
        "|p(n) - 2sqrt3/(24n-1) (1 - 1/l) e^l| <= 1313 e^(l/2)",
        ClaimKind::Strict,
        Table::new(&["n", "p", "main", "E_p", "bound", "margin"]),
    )
    .with_range(ranges_ok(1, n_max));
    let rows: Vec<_> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let prec = prec_for(n);
            let p = &table.p[n as usize];
            let main = partition_main_term(n, prec);
            let e = Float::with_val(prec, p - &main);
            let bound = exp_ell(n, prec, 1, 2) * 1313u32;
            let margin = &bound - e.clone().abs();
            let row = vec![
                Cell::Int(n as i64),
                Cell::Big(p.clone()),
                Cell::Real(main),
                Cell::Real(e),
                Cell::Real(bound),
                Cell::Real(margin.clone()),
            ];
            (n, margin, row)
        })
        .collect();
    for (n, margin, row) in rows {
        report.record(vec![n as i64], margin, row);
    }
    Ok(report)
}

/// Crude lower bound `p(n) > (√3/(12n))(1 - 1/√n) e^{l(n)}` for `4 ≤ n ≤ n_max`.
pub fn verify_partition_lower_bound(table: &RankTable, n_max: u64) -> BoundReport {
    let mut report = BoundReport::new(
        "partition-lower",
        "p(n) > sqrt3/(12n) (1 - 1/sqrt n) e^l",
        ClaimKind::Strict,
        Table::new(&["n", "p", "lower", "margin"]),
    )
    .with_range(ranges_ok(4, n_max));
    for n in 4..=n_max {
        let prec = prec_for(n);
        let root_n = Float::with_val(prec, n).sqrt();
        let factor = Float::with_val(prec, 1u32) - root_n.recip();
        let lower = Float::with_val(prec, 3u32).sqrt() / (12 * n) * factor * exp_ell(n, prec, 1, 1);
        let margin = Float::with_val(prec, &table.p[n as usize] - &lower);
        report.record(
            vec![n as i64],
            margin.clone(),
            vec![Cell::Int(n as i64), Cell::Big(table.p[n as usize].clone()), Cell::Real(lower), Cell::Real(margin)],
        );
    }
    report
}

/// `R_r(n) = N(r,2;n) - M(n) e^{l(n)}` for `r = 0, 1`.
pub fn rank_remainders(table: &RankTable, n: u64, prec: u32) -> (BigReal, BigReal) {
    let main = m_coefficient(n, prec) * exp_ell(n, prec, 1, 1);
    let r0 = Float::with_val(prec, &table.n0[n as usize] - &main);
    let r1 = Float::with_val(prec, &table.n1[n as usize] - &main);
    (r0, r1)
}

/// Both rank-count corollaries for `4 ≤ n ≤ n_max`:
/// `|N(r,2;n) - M(n)e^{l(n)}| ≤ 8.17×10³⁰ e^{l(n)/2}` for each `r`, and
/// `|α(n)/(2p(n))| ≤ 1.89×10³² e^{-l(n)/3}`.
pub fn verify_corollaries(n_max: u64) -> Result<Vec<BoundReport>> {
    let table = rank_counts(n_max as usize)?;
    Ok(verify_corollaries_with(&table, n_max))
}

pub fn verify_corollaries_with(table: &RankTable, n_max: u64) -> Vec<BoundReport> {
    let mut remainder = BoundReport::new(
        "rank-remainder",
        "|N(r,2;n) - M(n) e^l| <= 8.17e30 e^(l/2), r = 0, 1",
        ClaimKind::Strict,
        Table::new(&["n", "R0", "R1", "bound", "margin"]),
    )
    .with_range(ranges_ok(4, n_max));
    let mut ratio = BoundReport::new(
        "rank-ratio",
        "|N(r,2;n)/p(n) - 1/2| = |alpha(n)/(2p(n))| <= 1.89e32 e^(-l/3)",
        ClaimKind::Strict,
        Table::new(&["n", "R2", "bound", "margin"]),
    )
    .with_range(ranges_ok(4, n_max));
    let rows: Vec<_> = (4..=n_max)
        .into_par_iter()
        .map(|n| {
            let prec = prec_for(n);
            let (r0, r1) = rank_remainders(table, n, prec);
            let bound = decimal(prec, "8.17e30") * exp_ell(n, prec, 1, 2);
            let worst = if r0.clone().abs() > r1.clone().abs() { r0.clone().abs() } else { r1.clone().abs() };
            let margin = Float::with_val(prec, &bound - &worst);
            let rem_row = vec![
                Cell::Int(n as i64),
                Cell::Real(r0),
                Cell::Real(r1),
                Cell::Real(bound),
                Cell::Real(margin.clone()),
            ];
            let alpha = exact_float(&table.alpha[n as usize], prec);
            let p2 = exact_float(&Integer::from(&table.p[n as usize] * 2u32), prec);
            let r2 = Float::with_val(prec, &alpha / &p2);
            let bound2 = decimal(prec, "1.89e32") / exp_ell(n, prec, 1, 3);
            let margin2 = &bound2 - r2.clone().abs();
            let ratio_row = vec![Cell::Int(n as i64), Cell::Real(r2), Cell::Real(bound2), Cell::Real(margin2.clone())];
            (n, margin, rem_row, margin2, ratio_row)
        })
        .collect();
    for (n, margin, rem_row, margin2, ratio_row) in rows {
        remainder.record(vec![n as i64], margin, rem_row);
        ratio.record(vec![n as i64], margin2, ratio_row);
    }
    vec![remainder, ratio]
}

/// Exact identities behind the corollaries:
/// `2N(0,2;n) - p(n) = α(n)`, `N(0,2;n) + N(1,2;n) = p(n)`. Returns the failing `n`.
pub fn rank_identity_failures(table: &RankTable) -> Vec<usize> {
    (0..=table.n_max)
        .filter(|&n| {
            let twice = Integer::from(&table.n0[n] * 2u32) - &table.p[n];
            let sum = Integer::from(&table.n0[n] + &table.n1[n]);
            twice != table.alpha[n] || sum != table.p[n]
        })
        .collect()
}

/// `M(n)(1 - 1/√n)e^{l(n)} < N(r,2;n) < M(n)(1 + 1/√n)e^{l(n)}`,
/// for `r = 0` on `8..=n_max` and `r = 1` on `7..=n_max`.
pub fn verify_sandwich(n_max: u64) -> Result<BoundReport> {
    verify_sandwich_with(&rank_counts(n_max as usize)?, n_max)
}

/// Lower and upper sandwich margins for `N(r,2;n)`.
pub fn sandwich_margins(table: &RankTable, r: u32, n: u64) -> (BigReal, BigReal) {
    let prec = prec_for(n);
    let center = m_coefficient(n, prec) * exp_ell(n, prec, 1, 1);
    let half_width = Float::with_val(prec, &center / Float::with_val(prec, n).sqrt());
    let count = table.rank_count(r, n as usize);
    let lower = Float::with_val(prec, count - &center) + &half_width;
    let upper = half_width - Float::with_val(prec, count - &center);
    (lower, upper)
}

pub fn verify_sandwich_with(table: &RankTable, n_max: u64) -> Result<BoundReport> {
    let mut report = BoundReport::new(
        "sandwich",
        "M(n)(1 - 1/sqrt n) e^l < N(r,2;n) < M(n)(1 + 1/sqrt n) e^l",
        ClaimKind::Strict,
        Table::new(&["r", "n", "N", "lower_margin", "upper_margin", "margin"]),
    )
    .with_range(format!("r=0: 8..={n_max}, r=1: 7..={n_max}"));
    for r in 0..=1u32 {
        let start = if r == 0 { 8 } else { 7 };
        let rows: Vec<_> = (start..=n_max)
            .into_par_iter()
            .map(|n| {
                let (lo, hi) = sandwich_margins(table, r, n);
                let margin = if lo < hi { lo.clone() } else { hi.clone() };
                let row = vec![
                    Cell::Int(r as i64),
                    Cell::Int(n as i64),
                    Cell::Big(table.rank_count(r, n as usize).clone()),
                    Cell::Real(lo),
                    Cell::Real(hi),
                    Cell::Real(margin.clone()),
                ];
                (n, margin, row)
            })
            .collect();
        for (n, margin, row) in rows {
            report.record(vec![r as i64, n as i64], margin, row);
        }
    }
    for (r, n) in sandwich_sub_threshold_failures(table) {
        report.note(format!("below threshold: r={r} fails at n={n}"));
    }
    Ok(report)
}

/// `(r, n)` with `1 ≤ n` below the stated threshold where the sandwich fails.
pub fn sandwich_sub_threshold_failures(table: &RankTable) -> Vec<(u32, u64)> {
    let mut out = Vec::new();
    for r in 0..=1u32 {
        let start = if r == 0 { 8 } else { 7 };
        for n in 1..start.min(table.n_max as u64 + 1) {
            let (lo, hi) = sandwich_margins(table, r, n);
            if lo <= 0 || hi <= 0 {
                out.push((r, n));
            }
        }
    }
    out
}

/// `(M(n)/√n) e^{l(n)/2} - 8.17×10³⁰`; positive where the analytic condition holds.
pub fn sandwich_condition_margin(n: u64) -> BigReal {
    let prec = prec_for(n);
    let lhs = m_coefficient(n, prec) / Float::with_val(prec, n).sqrt() * exp_ell(n, prec, 1, 2);
    lhs - decimal(prec, "8.17e30")
}

/// Boundary scan of the analytic condition over `1..=scan_max`.
#[derive(Clone, Debug)]
pub struct ThresholdScan {
    /// Smallest `n` from which the condition holds for every scanned `n`.
    pub threshold: Option<u64>,
    pub margin_before: Option<BigReal>,
    pub margin_at: Option<BigReal>,
}

pub fn sandwich_threshold(scan_max: u64) -> ThresholdScan {
    let holds: Vec<bool> = (1..=scan_max).into_par_iter().map(|n| sandwich_condition_margin(n) > 0).collect();
    let mut threshold = None;
    for n in (1..=scan_max).rev() {
        if holds[n as usize - 1] {
            threshold = Some(n);
        } else {
            break;
        }
    }
    ThresholdScan {
        threshold,
        margin_before: threshold.filter(|&t| t > 1).map(|t| sandwich_condition_margin(t - 1)),
        margin_at: threshold.map(sandwich_condition_margin),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_bound_small_range() {
        let r = verify_theorem_main(50).unwrap();
        assert!(r.pass(), "{r}");
        // n = 1: E(1) = 1 - 1.7919... and the bound exceeds 10²⁵
        let e1 = match &r.table.rows[0][3] {
            Cell::Real(v) => v.to_f64(),
            _ => unreachable!(),
        };
        assert!((e1 + 0.7919).abs() < 1e-3);
        let b1 = match &r.table.rows[0][4] {
            Cell::Real(v) => v.to_f64(),
            _ => unreachable!(),
        };
        assert!(b1 > 1e25);
    }

    #[test]
    fn partition_bounds() {
        let t = rank_counts(300).unwrap();
        assert!(verify_partition_error_with(&t, 300).unwrap().pass());
        assert!(verify_partition_lower_bound(&t, 300).pass());
    }

    #[test]
    fn remainders_split_into_partition_error_and_alpha() {
        let t = rank_counts(100).unwrap();
        for n in [4u64, 17, 64, 100] {
            let prec = prec_for(n);
            let (r0, r1) = rank_remainders(&t, n, prec);
            let diff = Float::with_val(prec, &r0 - &r1);
            assert_eq!(diff, t.alpha[n as usize]);
            let sum = Float::with_val(prec, &r0 + &r1);
            let ep = Float::with_val(prec, &t.p[n as usize] - partition_main_term(n, prec));
            assert!(Float::with_val(prec, &sum - &ep).abs() < 1e-30);
        }
        assert!(rank_identity_failures(&t).is_empty());
    }

    #[test]
    fn corollaries_small_range() {
        for r in verify_corollaries(200).unwrap() {
            assert!(r.pass(), "{r}");
        }
    }

    #[test]
    fn sandwich_start_points() {
        let t = rank_counts(60).unwrap();
        let (lo, hi) = sandwich_margins(&t, 0, 8);
        assert!(lo > 0 && hi > 0);
        // N(1,2;7) = 4 sits below M(7)(1 - 1/√7)e^{l(7)} ≈ 4.77
        let (lo, hi) = sandwich_margins(&t, 1, 7);
        assert!(lo < 0 && hi > 0);
        let (lo, hi) = sandwich_margins(&t, 1, 8);
        assert!(lo > 0 && hi > 0);
        let report = verify_sandwich_with(&t, 60).unwrap();
        assert_eq!(report.failures, vec![vec![1, 7]]);
        let below = sandwich_sub_threshold_failures(&t);
        assert_eq!(below, vec![(0, 2), (0, 3), (0, 4), (0, 6), (0, 7), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6)]);
    }

    #[test]
    fn analytic_condition_boundary() {
        assert!(sandwich_condition_margin(4542) < 0);
        assert!(sandwich_condition_margin(4543) > 0);
    }
}
