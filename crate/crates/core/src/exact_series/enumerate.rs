//! Exhaustive partition enumeration, used as an oracle for the series layer.

use rug::Integer;

use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_CAP: usize = 60;

/// Calls `visit` once per partition of `n`, parts in nonincreasing order.
pub fn for_each_partition(n: usize, mut visit: impl FnMut(&[u32])) {
    let mut parts = Vec::with_capacity(n);
    walk(n as u32, n as u32, &mut parts, &mut visit);
}

fn walk(remaining: u32, max_part: u32, parts: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if remaining == 0 {
        visit(parts);
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        parts.push(part);
        walk(remaining - part, part, parts, visit);
        parts.pop();
    }
}

/// Rank of a partition given in nonincreasing order: largest part minus
/// number of parts. The empty partition has rank 0.
pub fn rank(parts: &[u32]) -> i64 {
    match parts.first() {
        Some(&largest) => largest as i64 - parts.len() as i64,
        None => 0,
    }
}

/// Counts of partitions of `n` by rank residue modulo `t`; entry `r` holds
/// `N(r, t; n)`.
pub fn rank_distribution(t: u32, n: usize, cap: usize) -> Result<Vec<Integer>> {
    assert!(t >= 1);
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    let mut counts = vec![0u64; t as usize];
    for_each_partition(n, |p| {
        counts[rank(p).rem_euclid(t as i64) as usize] += 1;
    });
    Ok(counts.into_iter().map(Integer::from).collect())
}

/// `N(r, t; n)` by exhaustive enumeration, refusing `n` above `cap`.
pub fn rank_count_brute_with_cap(r: u32, t: u32, n: usize, cap: usize) -> Result<Integer> {
    if t < 2 || r >= t {
        return Err(Error::Domain(format!("rank residue {r} mod {t} is out of range")));
    }
    let dist = rank_distribution(t, n, cap)?;
    Ok(dist[r as usize].clone())
}

pub fn rank_count_brute(r: u32, t: u32, n: usize) -> Result<Integer> {
    rank_count_brute_with_cap(r, t, n, DEFAULT_ENUMERATION_CAP)
}

pub fn partition_count_brute(n: usize, cap: usize) -> Result<Integer> {
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    let mut count = 0u64;
    for_each_partition(n, |_| count += 1);
    Ok(Integer::from(count))
}
