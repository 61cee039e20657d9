//! alpha(n) from the Heegner trace, checked against the exact q-series.
//!
//!     cargo run --release --example trace_formula -- 24 100 200

use mocktheta::exact_series::mock_theta_coeffs;
use mocktheta::heegner::{trace_s, PrecisionPolicy};
use mocktheta::numeric::fmt_real;

fn main() -> mocktheta::Result<()> {
    let ns: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("n")).collect();
    let ns = if ns.is_empty() { vec![1, 2, 24] } else { ns };
    let exact = mock_theta_coeffs(*ns.iter().max().unwrap() as usize);
    for n in ns {
        let start = std::time::Instant::now();
        let policy = PrecisionPolicy::for_n(n);
        let t = trace_s(n, &policy)?;
        println!(
            "n={n:<5} bits={:<4} classes={:<4} trace={:<12} exact={:<12} residual={} ({:.2?})",
            t.working_bits,
            t.per_class_terms.len(),
            t.alpha_int,
            exact[n as usize],
            fmt_real(&t.residual),
            start.elapsed()
        );
        for term in t.per_class_terms.iter().take(4) {
            println!("    u={} eps={:+} {} -> {} shift {}", term.u, term.epsilon, term.form, term.assignment.cusp, term.assignment.shift);
        }
    }
    Ok(())
}
