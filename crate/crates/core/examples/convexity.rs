//! The frontier C_a and the exact convexity sweep.
//!
//!     cargo run --release --example convexity -- 1000

use mocktheta::verifier::{convexity_exact, frontier_table, verify_final_inequality};

fn main() -> mocktheta::Result<()> {
    let max_sum: u64 = std::env::args().nth(1).map(|a| a.parse().expect("max_sum")).unwrap_or(500);

    println!(" a   C_a     max b");
    for f in frontier_table()? {
        println!("{:>2}   {}   {}", f.a, f.c_a_truncated(), f.max_b);
    }

    let c = convexity_exact(max_sum)?;
    println!("{}", c.report);
    println!("{} failing pairs below the threshold, e.g. {:?}", c.sub_threshold_failures.len(), c.sub_threshold_failures.first());

    println!("{}", verify_final_inequality(18, 2000, 100_000, 50));
    Ok(())
}
