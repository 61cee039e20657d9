//! Kloosterman sums, the constant term b0 and the slowly converging series for a(n).
//!
//!     cargo run --release --example kloosterman -- 4000

use mocktheta::kloosterman::{
    a_coefficient_series, b0_series, b0_sub_sum_limits, detect_plateau, kloosterman_sum, mobius_table, KloostermanParams,
};
use mocktheta::numeric::fmt_real;

fn main() -> mocktheta::Result<()> {
    let c_max: u64 = std::env::args().nth(1).map(|a| a.parse().expect("c_max")).unwrap_or(2000);

    // S(-1, 0; c) is the Möbius function
    let mu = mobius_table(12);
    for c in 1..=12 {
        let s = kloosterman_sum(KloostermanParams { a: -1, b: 0, c }, 64)?;
        println!("S(-1,0;{c:>2}) = {:>3}   mu = {:>2}", s.to_f64().round() as i64, mu[c as usize]);
    }

    let b0 = b0_series(10_000, 128)?;
    let limits = b0_sub_sum_limits(128);
    for (i, ell) in [1, 2, 3, 6].iter().enumerate() {
        println!("l={ell}: {:.6}  (limit {:.6})", b0.sub_sums[i].to_f64(), limits[i].to_f64());
    }
    println!("b0 ~ {}  tail < {:.2e}", fmt_real(&b0.total), b0.tail_bound.to_f64());

    for (n, target) in [(1u64, -83.0), (2, -296.0)] {
        let s = a_coefficient_series(n, c_max, 128)?;
        let p = detect_plateau(&s, 0.25, 0.1);
        println!(
            "a({n}) ~ {:.3} (target {target}), oscillation {:.3} over c >= {}, accepted = {}",
            p.value, p.oscillation, p.window_start, p.accepted
        );
    }
    Ok(())
}
