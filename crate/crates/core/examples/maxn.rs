//! Maximal products of rank counts over partitions of n.
//!
//!     cargo run --release --example maxn -- 23

use mocktheta::exact_series::rank_counts;
use mocktheta::verifier::{closed_form, fmt_partition, fmt_partition_set, maxn_dp, substitution_closure, verify_maxn};

fn main() -> mocktheta::Result<()> {
    let n_max: u64 = std::env::args().nth(1).map(|a| a.parse().expect("n_max")).unwrap_or(23);
    let table = rank_counts(n_max.max(40) as usize)?;

    for r in 0..=1 {
        println!("r = {r}");
        for m in maxn_dp(&table, r, n_max) {
            let set = m.maximizers.as_deref().map(fmt_partition_set).unwrap_or_else(|| fmt_partition(&m.canonical));
            let closed = closed_form(r, m.n).map(|(v, _)| v.to_string()).unwrap_or_default();
            println!("  {:>3} {:>12} {:>12}  {}", m.n, m.value, closed, set);
        }
    }

    // odd r=1 maximizers are everything reachable from (2,...,2,9)
    let closure = substitution_closure(&[9, 2, 2, 2, 2]);
    println!("closure of (2,2,2,2,9): {}", fmt_partition_set(&closure));

    println!("{}", verify_maxn(&table, n_max.max(40)));
    Ok(())
}
