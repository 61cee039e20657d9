//! Reduced forms of discriminant 1-24n, their genus signs and cusp cosets.
//!
//!     cargo run --example quadforms -- 24

use mocktheta::heegner::discriminant;
use mocktheta::quadforms::{
    assign_coset, class_number, heegner_point, reduced_primitive_forms, small_leading_forms, square_divisors_with_sign,
};

fn main() -> mocktheta::Result<()> {
    let n: u64 = std::env::args().nth(1).map(|a| a.parse().expect("n")).unwrap_or(24);
    let d = discriminant(n);
    println!("D = {d}, h(D) = {}", class_number(d)?);

    for (u, eps) in square_divisors_with_sign(d)? {
        let forms = reduced_primitive_forms(d / (u * u))?;
        println!("u = {u}  eps = {eps:+}  {} classes", forms.len());
        for q in forms {
            let g = assign_coset(&q)?;
            let tau = heegner_point(&q, 64)?;
            println!(
                "    {q:<16} cusp {:<3} shift {:<2} zeta6^{}  tau = {:.6} + {:.6}i",
                g.cusp,
                g.shift,
                g.zeta6_exponent(),
                tau.re.to_f64(),
                tau.im.to_f64()
            );
        }
    }

    println!("forms with a <= 12:");
    for q in small_leading_forms(n, 12) {
        print!(" {q}");
    }
    println!();
    Ok(())
}
