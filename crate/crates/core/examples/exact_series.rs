//! Partition numbers, alpha(n), rank counts and the coefficients of F.
//!
//!     cargo run --release --example exact_series -- 30

use mocktheta::exact_series::{f_weakly_holomorphic_coeffs, rank_count_brute, rank_counts};

fn main() -> mocktheta::Result<()> {
    let n_max: usize = std::env::args().nth(1).map(|a| a.parse().expect("n_max")).unwrap_or(20);
    let t = rank_counts(n_max)?;
    println!("{:>4} {:>12} {:>8} {:>12} {:>12}", "n", "p(n)", "alpha", "N(0,2;n)", "N(1,2;n)");
    for n in 1..=n_max {
        println!("{:>4} {:>12} {:>8} {:>12} {:>12}", n, t.p[n], t.alpha[n], t.n0[n], t.n1[n]);
    }

    // enumeration agrees for small n
    let small = n_max.min(25);
    assert_eq!(rank_count_brute(0, 2, small)?, t.n0[small]);

    let f = f_weakly_holomorphic_coeffs(6)?;
    let shown: Vec<String> = (-1..=6).map(|e| format!("{}q^{e}", f.coeff(e))).collect();
    println!("F = {} + ...", shown.join(" + "));
    Ok(())
}
