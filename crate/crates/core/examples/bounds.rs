//! Effective bounds on alpha(n), p(n) and the rank counts.
//!
//!     cargo run --release --example bounds -- 2000

use mocktheta::exact_series::rank_counts;
use mocktheta::verifier::{
    sandwich_threshold, verify_corollaries_with, verify_partition_error_with, verify_sandwich_with,
    verify_theorem_main_with,
};

fn main() -> mocktheta::Result<()> {
    let n_max: u64 = std::env::args().nth(1).map(|a| a.parse().expect("n_max")).unwrap_or(1000);
    let table = rank_counts(n_max as usize)?;

    let mut reports = vec![verify_theorem_main_with(&table, n_max)?, verify_partition_error_with(&table, n_max)?];
    reports.extend(verify_corollaries_with(&table, n_max));
    reports.push(verify_sandwich_with(&table, n_max)?);
    for r in &reports {
        println!("{r}");
        for note in &r.notes {
            println!("    {note}");
        }
    }

    let scan = sandwich_threshold(5000);
    println!("analytic condition first holds at n = {:?}", scan.threshold);
    Ok(())
}
