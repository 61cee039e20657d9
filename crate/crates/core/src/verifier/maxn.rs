//! `maxN(r,2;n)`: the largest product `Π N(r,2;λ_j)` over partitions `λ` of `n`.

use std::collections::{BTreeMap, BTreeSet};

use rug::Integer;

use super::report::{BoundReport, Cell, ClaimKind, Table};
use crate::exact_series::{for_each_partition, partition_counts, RankTable};

/// Largest `n` for which full maximizer sets are materialized.
pub const SET_LIMIT: u64 = 40;

/// A partition, parts nonincreasing.
pub type Partition = Vec<u32>;

/// `(1,3)` style, parts ascending.
pub fn fmt_partition(parts: &[u32]) -> String {
    let s: Vec<String> = parts.iter().rev().map(|p| p.to_string()).collect();
    format!("({})", s.join(","))
}

pub fn fmt_partition_set(set: &[Partition]) -> String {
    set.iter().map(|p| fmt_partition(p)).collect::<Vec<_>>().join(", ")
}

/// `N(r,2;λ) = Π_j N(r,2;λ_j)`.
pub fn product_value(table: &RankTable, r: u32, parts: &[u32]) -> Integer {
    let counts = table.rank_counts(r);
    parts.iter().fold(Integer::from(1), |acc, &p| acc * &counts[p as usize])
}

#[derive(Clone, Debug, PartialEq)]
pub struct MaxNResult {
    pub r: u32,
    pub n: u64,
    pub value: Integer,
    /// All maximizers, sorted; present for `n ≤ SET_LIMIT`.
    pub maximizers: Option<Vec<Partition>>,
    pub maximizer_count: Integer,
    /// The maximizer whose parts, read in ascending order, are lexicographically least.
    pub canonical: Partition,
}

struct Dp {
    r: u32,
    n_max: usize,
    best: Vec<Integer>,
    /// `good[m][i]`: `N(i)·best(m-i) = best(m)`, for `1 ≤ i ≤ m`.
    good: Vec<Vec<bool>>,
}

impl Dp {
    fn new(table: &RankTable, r: u32, n_max: usize) -> Self {
        assert!(n_max <= table.n_max, "rank table too short");
        let counts = table.rank_counts(r);
        let mut best = vec![Integer::from(1)];
        let mut good = vec![Vec::new()];
        for m in 1..=n_max {
            let cand: Vec<Integer> = (1..=m).map(|i| Integer::from(&counts[i] * &best[m - i])).collect();
            let top = cand.iter().max().expect("m >= 1").clone();
            let mut row = vec![false; m + 1];
            for (i, c) in cand.iter().enumerate() {
                row[i + 1] = *c == top;
            }
            best.push(top);
            good.push(row);
        }
        Dp { r, n_max, best, good }
    }

    /// Maximizers of `m` with every part ≤ `cap`, for `best(m) > 0`.
    fn sets(&self, m: usize, cap: usize, memo: &mut BTreeMap<(usize, usize), Vec<Partition>>) -> Vec<Partition> {
        if m == 0 {
            return vec![Vec::new()];
        }
        if let Some(v) = memo.get(&(m, cap)) {
            return v.clone();
        }
        let mut out = Vec::new();
        for i in (1..=cap.min(m)).rev() {
            if !self.good[m][i] {
                continue;
            }
            for rest in self.sets(m - i, i, memo) {
                let mut p = vec![i as u32];
                p.extend(rest);
                out.push(p);
            }
        }
        memo.insert((m, cap), out.clone());
        out
    }

    /// Number of maximizers of `m` with parts ≤ `k`, for `best(m) > 0`.
    fn count_table(&self) -> Vec<Vec<Integer>> {
        let n = self.n_max;
        let mut cnt = vec![vec![Integer::new(); n + 1]; n + 1];
        for k in 0..=n {
            cnt[0][k] = Integer::from(1);
        }
        for m in 1..=n {
            for k in 1..=n {
                let mut c = cnt[m][k - 1].clone();
                if k <= m && self.good[m][k] && self.best[m] != 0 {
                    c += &cnt[m - k][k];
                }
                cnt[m][k] = c;
            }
        }
        cnt
    }

    /// `feasible[m][lo]`: a maximizer of `m` exists with every part ≥ `lo`.
    fn feasible_table(&self) -> Vec<Vec<bool>> {
        let n = self.n_max;
        let mut f = vec![vec![false; n + 2]; n + 1];
        for lo in 0..=n + 1 {
            f[0][lo] = true;
        }
        for m in 1..=n {
            for lo in (1..=m).rev() {
                f[m][lo] = (self.good[m][lo] && f[m - lo][lo]) || f[m][lo + 1];
            }
        }
        f
    }

    fn canonical(&self, n: usize, feasible: &[Vec<bool>]) -> Partition {
        let mut ascending = Vec::new();
        let (mut m, mut lo) = (n, 1usize);
        while m > 0 {
            let i = (lo..=m).find(|&i| self.good[m][i] && feasible[m - i][i]).expect("a maximizer exists");
            ascending.push(i as u32);
            m -= i;
            lo = i;
        }
        ascending.reverse();
        ascending
    }
}

/// `maxN(r,2;n)` for `1 ≤ n ≤ n_max` from `best(n) = max_i N(r,2;i)·best(n-i)`.
pub fn maxn_dp(table: &RankTable, r: u32, n_max: u64) -> Vec<MaxNResult> {
    let dp = Dp::new(table, r, n_max as usize);
    let cnt = dp.count_table();
    let feasible = dp.feasible_table();
    let p = partition_counts(n_max as usize);
    let mut memo = BTreeMap::new();
    (1..=n_max as usize)
        .map(|n| {
            let zero = dp.best[n] == 0;
            let maximizers = (n as u64 <= SET_LIMIT).then(|| {
                if zero {
                    let mut all = Vec::new();
                    for_each_partition(n, |parts| all.push(parts.to_vec()));
                    all.sort();
                    all
                } else {
                    let mut v = dp.sets(n, n, &mut memo);
                    v.sort();
                    v
                }
            });
            let maximizer_count = if zero { p[n].clone() } else { cnt[n][n].clone() };
            MaxNResult {
                r: dp.r,
                n: n as u64,
                value: dp.best[n].clone(),
                maximizers,
                maximizer_count,
                canonical: dp.canonical(n, &feasible),
            }
        })
        .collect()
}

/// Exhaustive oracle: `(maxN, sorted maximizers)` by enumerating all partitions of `n`.
pub fn maxn_brute(table: &RankTable, r: u32, n: usize) -> (Integer, Vec<Partition>) {
    let mut best = Integer::from(-1);
    let mut set = Vec::new();
    for_each_partition(n, |parts| {
        let v = product_value(table, r, parts);
        if v > best {
            best = v;
            set.clear();
            set.push(parts.to_vec());
        } else if v == best {
            set.push(parts.to_vec());
        }
    });
    set.sort();
    (best, set)
}

/// All partitions reachable from `start` by `(2,2) → (4)` and `(2,2,2) → (6)`.
pub fn substitution_closure(start: &[u32]) -> Vec<Partition> {
    let mut seen: BTreeSet<Partition> = BTreeSet::new();
    let mut stack = vec![start.to_vec()];
    while let Some(p) = stack.pop() {
        if !seen.insert(p.clone()) {
            continue;
        }
        let twos = p.iter().filter(|&&x| x == 2).count();
        for (take, into) in [(2usize, 4u32), (3, 6)] {
            if twos >= take {
                let mut q: Partition = Vec::with_capacity(p.len());
                let mut removed = 0;
                for &x in &p {
                    if x == 2 && removed < take {
                        removed += 1;
                    } else {
                        q.push(x);
                    }
                }
                q.push(into);
                q.sort_unstable_by(|a, b| b.cmp(a));
                stack.push(q);
            }
        }
    }
    seen.into_iter().collect()
}

/// Number of partitions of `k` into parts from `{1,2,3}`.
pub fn partitions_into_1_2_3(k: u64) -> Integer {
    let k = k as usize;
    let mut ways = vec![Integer::new(); k + 1];
    ways[0] = Integer::from(1);
    for part in 1..=3usize {
        for m in part..=k {
            let prev = ways[m - part].clone();
            ways[m] += prev;
        }
    }
    ways[k].clone()
}

/// Closed-form `maxN` and its canonical maximizer, where the closed form applies.
pub fn closed_form(r: u32, n: u64) -> Option<(Integer, Partition)> {
    let pow = |base: u32, e: u64| Integer::from(Integer::u_pow_u(base, e as u32));
    match r {
        0 if n >= 5 => {
            let (value, tail) = match n % 3 {
                0 => (pow(3, n / 3), None),
                1 => (pow(3, (n - 7) / 3) * 11u32, Some(7)),
                _ => (pow(3, (n - 5) / 3) * 5u32, Some(5)),
            };
            let threes = ((n - tail.unwrap_or(0)) / 3) as usize;
            let mut parts: Partition = tail.into_iter().map(|t| t as u32).collect();
            parts.extend(std::iter::repeat_n(3, threes));
            Some((value, parts))
        }
        1 if n >= 8 => {
            let (value, tail) = if n % 2 == 0 { (pow(2, n / 2), None) } else { (pow(2, (n - 9) / 2) * 12u32, Some(9)) };
            let twos = ((n - tail.unwrap_or(0)) / 2) as usize;
            let mut parts: Partition = tail.into_iter().map(|t| t as u32).collect();
            parts.extend(std::iter::repeat_n(2, twos));
            Some((value, parts))
        }
        _ => None,
    }
}

/// Closed forms for `r = 0` (n ≥ 5, unique maximizer) and `r = 1` (n ≥ 8, maximizers
/// are exactly the substitution closure) up to `n_max`.
pub fn verify_maxn(table: &RankTable, n_max: u64) -> BoundReport {
    let mut report = BoundReport::new(
        "maxn",
        "maxN closed forms, uniqueness (r=0) and substitution classes (r=1)",
        ClaimKind::Equality,
        Table::new(&["r", "n", "value", "closed_form", "count", "canonical", "ok"]),
    )
    .with_range(format!("r=0: 5..={n_max}, r=1: 8..={n_max}"));
    for r in 0..=1u32 {
        for res in maxn_dp(table, r, n_max) {
            let Some((value, canonical)) = closed_form(r, res.n) else { continue };
            let mut ok = res.value == value && res.canonical == canonical;
            if r == 0 {
                ok &= res.maximizer_count == 1;
            } else {
                let twos = canonical.iter().filter(|&&x| x == 2).count() as u64;
                ok &= res.maximizer_count == partitions_into_1_2_3(twos);
                if let Some(set) = &res.maximizers {
                    ok &= *set == substitution_closure(&canonical);
                }
            }
            let margin = Integer::from(!ok as u32);
            report.record_exact(
                vec![r as i64, res.n as i64],
                &margin,
                vec![
                    Cell::Int(r as i64),
                    Cell::Int(res.n as i64),
                    Cell::Big(res.value.clone()),
                    Cell::Big(value),
                    Cell::Big(res.maximizer_count.clone()),
                    Cell::Text(fmt_partition(&res.canonical)),
                    Cell::Bool(ok),
                ],
            );
        }
    }
    report
}

/// Rows `n, maxN(0,2;n), maximizers, maxN(1,2;n), maximizers` for `1 ≤ n ≤ n_max`.
pub fn maxn_table(table: &RankTable, n_max: u64) -> Table {
    let mut out = Table::new(&["n", "maxN0", "lambda0", "maxN1", "lambda1"]);
    let r0 = maxn_dp(table, 0, n_max);
    let r1 = maxn_dp(table, 1, n_max);
    let show = |m: &MaxNResult| match &m.maximizers {
        Some(set) => fmt_partition_set(set),
        None => fmt_partition(&m.canonical),
    };
    for (a, b) in r0.iter().zip(&r1) {
        out.push(vec![
            Cell::Int(a.n as i64),
            Cell::Big(a.value.clone()),
            Cell::Text(show(a)),
            Cell::Big(b.value.clone()),
            Cell::Text(show(b)),
        ]);
    }
    out
}

/// One substitution `from → to` at rank residue `r`.
#[derive(Clone, Debug)]
pub struct Substitution {
    pub r: u32,
    pub from: Partition,
    /// `None` stands for "the best representation of `Σ from`".
    pub to: Option<Partition>,
}

impl Substitution {
    fn new(r: u32, from: &[u32], to: &[u32]) -> Self {
        let mut f = from.to_vec();
        let mut t = to.to_vec();
        f.sort_unstable_by(|a, b| b.cmp(a));
        t.sort_unstable_by(|a, b| b.cmp(a));
        Substitution { r, from: f, to: Some(t) }
    }

    fn to_best(r: u32, from: &[u32]) -> Self {
        let mut f = from.to_vec();
        f.sort_unstable_by(|a, b| b.cmp(a));
        Substitution { r, from: f, to: None }
    }

    fn label(&self) -> String {
        let to = match &self.to {
            Some(t) => fmt_partition(t),
            None => format!("best({})", self.from.iter().sum::<u32>()),
        };
        format!("{} -> {}", fmt_partition(&self.from), to)
    }
}

fn twos(k: usize) -> Vec<u32> {
    vec![2; k]
}

/// Substitutions that strictly increase `N(r,2;·)`.
pub fn strict_substitutions() -> Vec<Substitution> {
    let mut v = vec![
        Substitution::new(0, &[1, 1, 1], &[3]),
        Substitution::new(0, &[2], &[1, 1]),
        Substitution::new(0, &[4], &[1, 3]),
        Substitution::new(0, &[5, 5], &[3, 7]),
        Substitution::new(0, &[6], &[3, 3]),
        Substitution::new(0, &[7, 7], &[3, 3, 3, 5]),
        Substitution::new(0, &[8], &[3, 5]),
        Substitution::new(0, &[9], &[3, 3, 3]),
        Substitution::new(1, &[1, 1, 1, 1], &[4]),
        Substitution::new(1, &[3, 3], &twos(3)),
        Substitution::new(1, &[5, 5], &twos(5)),
        Substitution::new(1, &[7, 7], &twos(7)),
        Substitution::new(1, &[8], &twos(4)),
        Substitution::new(1, &[9, 9], &twos(9)),
        // parts equal to 1 next to the repeating part
        Substitution::new(0, &[1, 3, 3], &[7]),
        Substitution::new(0, &[1, 1, 3], &[5]),
        Substitution::new(1, &[1, 2, 2], &[5]),
        Substitution::new(1, &[1, 1], &[2]),
        Substitution::new(1, &[1, 1, 1, 2], &[5]),
    ];
    // a single 3, 5 or 7 beside another admissible part, r = 1
    for a in [1u32, 2, 3, 5, 7, 9] {
        for b in [3u32, 5, 7] {
            if a < b || (a > b && ![3, 5, 7].contains(&a)) {
                if (a, b) != (2, 5) {
                    v.push(Substitution::to_best(1, &[a, b]));
                }
            }
        }
    }
    // two distinct non-repeating parts
    for (a, b) in [(1u32, 5u32), (1, 7), (5, 7)] {
        v.push(Substitution::to_best(0, &[a, b]));
    }
    v.push(Substitution::to_best(1, &[1, 9]));
    v
}

/// Substitutions that leave `N(1,2;·)` unchanged.
pub fn equality_substitutions() -> Vec<Substitution> {
    vec![
        Substitution::new(1, &[4], &[2, 2]),
        Substitution::new(1, &[6], &[2, 2, 2]),
        Substitution::new(1, &[2, 5], &[7]),
    ]
}

fn audit(table: &RankTable, best: &[Vec<Integer>; 2], subs: &[Substitution], id: &str, kind: ClaimKind) -> BoundReport {
    let mut report = BoundReport::new(
        id,
        "N(r,2;to) - N(r,2;from)",
        kind,
        Table::new(&["r", "substitution", "from_value", "to_value", "margin"]),
    )
    .with_range(format!("{} listed substitutions", subs.len()));
    for (k, s) in subs.iter().enumerate() {
        let from = product_value(table, s.r, &s.from);
        let to = match &s.to {
            Some(t) => product_value(table, s.r, t),
            None => best[s.r as usize][s.from.iter().sum::<u32>() as usize].clone(),
        };
        let margin = Integer::from(&to - &from);
        report.record_exact(
            vec![s.r as i64, k as i64],
            &margin,
            vec![Cell::Int(s.r as i64), Cell::Text(s.label()), Cell::Big(from), Cell::Big(to), Cell::Big(margin.clone())],
        );
    }
    report
}

/// Every listed substitution, the large-part halving rule for `24 ≤ i ≤ large_max`,
/// and the representation check for `10 ≤ i ≤ 23`.
pub fn substitution_audit(table: &RankTable, large_max: u64) -> Vec<BoundReport> {
    let reach = 23usize;
    let best: [Vec<Integer>; 2] = [0u32, 1].map(|r| {
        let mut v = vec![Integer::from(1)];
        v.extend(maxn_dp(table, r, reach as u64).into_iter().map(|m| m.value));
        v
    });
    let strict = audit(table, &best, &strict_substitutions(), "substitutions-strict", ClaimKind::Strict);
    let equal = audit(table, &best, &equality_substitutions(), "substitutions-equal", ClaimKind::Equality);

    let mut halving = BoundReport::new(
        "large-part",
        "N(r,2;floor(i/2)) N(r,2;ceil(i/2)) > N(r,2;i)",
        ClaimKind::Strict,
        Table::new(&["r", "i", "split", "whole", "margin"]),
    )
    .with_range(format!("24..={large_max}"));
    for r in 0..=1u32 {
        let c = table.rank_counts(r);
        for i in 24..=large_max as usize {
            let split = Integer::from(&c[i / 2] * &c[i.div_ceil(2)]);
            let margin = Integer::from(&split - &c[i]);
            halving.record_exact(
                vec![r as i64, i as i64],
                &margin,
                vec![Cell::Int(r as i64), Cell::Int(i as i64), Cell::Big(split), Cell::Big(c[i].clone()), Cell::Big(margin.clone())],
            );
        }
    }

    let mut rep = BoundReport::new(
        "representation",
        "N(r,2;canonical(i)) >= N(r,2;i)",
        ClaimKind::AtLeast,
        Table::new(&["r", "i", "canonical", "value", "part", "margin"]),
    )
    .with_range("10..=23");
    for r in 0..=1u32 {
        for m in maxn_dp(table, r, 23).into_iter().filter(|m| m.n >= 10) {
            let single = table.rank_count(r, m.n as usize).clone();
            let value = product_value(table, r, &m.canonical);
            let margin = Integer::from(&value - &single);
            rep.record_exact(
                vec![r as i64, m.n as i64],
                &margin,
                vec![
                    Cell::Int(r as i64),
                    Cell::Int(m.n as i64),
                    Cell::Text(fmt_partition(&m.canonical)),
                    Cell::Big(value),
                    Cell::Big(single),
                    Cell::Big(margin.clone()),
                ],
            );
        }
    }
    vec![strict, equal, halving, rep]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_series::rank_counts;

    fn table() -> RankTable {
        rank_counts(60).unwrap()
    }

    #[test]
    fn small_rows() {
        let t = table();
        let r0 = maxn_dp(&t, 0, 12);
        assert_eq!(r0[9].value, 33);
        assert_eq!(r0[9].maximizers.as_ref().unwrap(), &vec![vec![7, 3]]);
        assert_eq!(r0[11].value, 81);
        let r1 = maxn_dp(&t, 1, 13);
        assert_eq!(r1[5].value, 8);
        assert_eq!(r1[5].maximizers.as_ref().unwrap(), &vec![vec![2, 2, 2], vec![4, 2], vec![6]]);
        assert_eq!(r1[2].value, 0);
        assert_eq!(r1[2].maximizers.as_ref().unwrap().len(), 3);
        assert_eq!(r1[12].value, 48);
        assert_eq!(r1[12].canonical, vec![9, 2, 2]);
    }

    #[test]
    fn dp_matches_brute_force() {
        let t = table();
        for r in 0..=1 {
            for m in maxn_dp(&t, r, 30) {
                let (v, set) = maxn_brute(&t, r, m.n as usize);
                assert_eq!(m.value, v, "r={r} n={}", m.n);
                assert_eq!(m.maximizers.as_ref().unwrap(), &set, "r={r} n={}", m.n);
                assert_eq!(m.maximizer_count, set.len() as u64);
            }
        }
    }

    #[test]
    fn closure_sizes() {
        assert_eq!(substitution_closure(&[2, 2, 2]).len(), 3);
        for k in 0..12u64 {
            let c = substitution_closure(&vec![2; k as usize]);
            assert_eq!(partitions_into_1_2_3(k), c.len() as u64);
        }
    }

    #[test]
    fn closed_forms_hold() {
        assert!(verify_maxn(&table(), 60).pass());
        assert_eq!(closed_form(0, 5), Some((Integer::from(5), vec![5])));
        assert_eq!(closed_form(1, 13).unwrap().0, 48);
        assert!(closed_form(0, 4).is_none());
    }

    #[test]
    fn audit_passes() {
        let t = rank_counts(500).unwrap();
        for r in substitution_audit(&t, 500) {
            assert!(r.pass(), "{r}");
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_partition(&[3, 1]), "(1,3)");
        assert_eq!(fmt_partition_set(&[vec![4], vec![2, 2]]), "(4), (2,2)");
    }
}
