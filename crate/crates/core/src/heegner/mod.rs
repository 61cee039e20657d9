//! High-precision evaluation of `η`, `E₄` and the level-6 form `F` on the
//! upper half-plane, and the Heegner-point trace that recovers `α(n)`.

mod policy;

use rayon::prelude::*;
use rug::{Float, Integer};

pub use policy::{
    truncation_for, working_bits_for, PrecisionPolicy, MAX_NOME, MIN_IMAG, RESIDUAL_TOLERANCE,
};

use crate::error::{Error, Result};
use crate::exact_series::sigma3_table;
use crate::numeric::{decimal, ell, BigComplex, BigReal};
use crate::quadforms::{
    assign_coset, heegner_point, reduced_primitive_forms, square_divisors_with_sign, CosetAssignment, QForm,
};

fn check_imag(tau: &BigComplex) -> Result<()> {
    if tau.im < MIN_IMAG {
        return Err(Error::ImaginaryPartTooSmall(tau.im.to_f64()));
    }
    Ok(())
}

/// `Π_{m≥1}(1 - x^m)` by the pentagonal-number theorem.
fn euler_product_at(x: &BigComplex, policy: &PrecisionPolicy) -> BigComplex {
    let prec = policy.working_bits;
    let cutoff = Float::with_val(prec, Float::i_exp(1, -(prec as i32) - 16));
    let mut sum = BigComplex::one(prec);
    let mut x_k = BigComplex::one(prec);
    // x^{k(3k-1)/2}, starting from k = 1
    let mut lower = x.clone();
    for k in 1..=policy.eta_terms {
        x_k = &x_k * x;
        let upper = &lower * &x_k;
        let pair = &lower + &upper;
        sum = if k % 2 == 1 { &sum - &pair } else { &sum + &pair };
        if lower.abs() < cutoff {
            break;
        }
        // next lower exponent is upper + 2k + 1
        lower = &(&upper * &x_k) * &(&x_k * x);
    }
    sum
}

/// `1 + 240 Σ_{k=1}^{terms} σ₃(k) x^k` by Horner's rule.
fn e4_series(x: &BigComplex, terms: usize, sigma3: &[u64], prec: u32) -> BigComplex {
    let mut acc = BigComplex::zero(prec);
    for k in (1..=terms).rev() {
        acc.re += Float::with_val(prec, sigma3[k]) * 240u32;
        acc = &acc * x;
    }
    acc.re += 1u32;
    acc
}

/// Dedekind `η(τ) = e(τ/24) Π(1 - q^m)`.
pub fn eta(tau: &BigComplex, policy: &PrecisionPolicy) -> Result<BigComplex> {
    check_imag(tau)?;
    let tau = with_prec(tau, policy.working_bits);
    let q = tau.e();
    let prefix = tau.scale(&Float::with_val(policy.working_bits, 24).recip()).e();
    Ok(&prefix * &euler_product_at(&q, policy))
}

/// Eisenstein series `E₄(τ)`.
pub fn e4(tau: &BigComplex, policy: &PrecisionPolicy) -> Result<BigComplex> {
    check_imag(tau)?;
    let tau = with_prec(tau, policy.working_bits);
    let sig = sigma3_table(policy.e4_terms);
    Ok(e4_series(&tau.e(), policy.e4_terms, &sig, policy.working_bits))
}

fn with_prec(z: &BigComplex, prec: u32) -> BigComplex {
    BigComplex::new(Float::with_val(prec, &z.re), Float::with_val(prec, &z.im))
}

/// `F(τ) = -(1/40)(E₄(τ) + 4E₄(2τ) - 9E₄(3τ) - 36E₄(6τ)) / (η(τ)η(2τ)η(3τ)η(6τ))²`.
pub fn f_eval(tau: &BigComplex, policy: &PrecisionPolicy) -> Result<BigComplex> {
    check_imag(tau)?;
    let prec = policy.working_bits;
    let q = with_prec(tau, prec).e();
    Ok(f_from_nome(&q, policy))
}

fn f_from_nome(q: &BigComplex, policy: &PrecisionPolicy) -> BigComplex {
    let prec = policy.working_bits;
    let q2 = q.square();
    let q3 = &q2 * q;
    let q6 = q3.square();
    let k = policy.e4_terms;
    let sig = sigma3_table(k);
    let num = e4_series(q, k, &sig, prec)
        + e4_series(&q2, k / 2 + 1, &sig, prec).scale_int(4)
        - e4_series(&q3, k / 3 + 1, &sig, prec).scale_int(9)
        - e4_series(&q6, k / 6 + 1, &sig, prec).scale_int(36);
    // (η(τ)η(2τ)η(3τ)η(6τ))² = q · (Π over the four nomes)²
    let prod = [q, &q2, &q3, &q6]
        .into_iter()
        .map(|x| euler_product_at(x, policy))
        .reduce(|a, b| &a * &b)
        .expect("four factors");
    let den = (&prod.square() * q).scale_int(-40);
    num.div(&den)
}

/// `F(γ_Q τ_Q)` for a reduced form, via `F(γτ) = ± F((τ + shift')/width)`.
pub fn f_at_class(form: &QForm, assignment: &CosetAssignment, policy: &PrecisionPolicy) -> Result<BigComplex> {
    let z = transformed_point(form, assignment, policy.working_bits)?;
    let value = f_eval(&z, policy)?;
    let (sign, _) = assignment.transform();
    Ok(if sign < 0 { -value } else { value })
}

/// `(τ_Q + shift')/width`; its imaginary part is at least `√3/12`.
pub fn transformed_point(form: &QForm, assignment: &CosetAssignment, prec: u32) -> Result<BigComplex> {
    let (_, shift) = assignment.transform();
    let h = assignment.width as i64;
    let tau = heegner_point(form, prec)?;
    let re = Float::with_val(prec, -form.b + 2 * form.a * shift) / (2 * form.a * h);
    let im = tau.im / h;
    Ok(BigComplex::new(re, im))
}

/// One ε-weighted summand of the trace.
#[derive(Clone, Debug)]
pub struct ClassTerm {
    pub u: i64,
    pub epsilon: i32,
    pub form: QForm,
    pub assignment: CosetAssignment,
    /// `ε(u) · F(γ_Q τ_Q)`.
    pub value: BigComplex,
}

#[derive(Clone, Debug)]
pub struct TraceResult {
    pub n: u64,
    pub working_bits: u32,
    pub s: BigComplex,
    pub per_class_terms: Vec<ClassTerm>,
    pub alpha_real: BigReal,
    pub alpha_int: Integer,
    pub residual: BigReal,
}

impl TraceResult {
    /// Residual below `tolerance`, and at least 32 fractional bits left in
    /// the working precision (otherwise the residual says nothing).
    pub fn certified(&self, tolerance: &BigReal) -> bool {
        let int_bits = self.alpha_real.get_exp().unwrap_or(0).max(0) as i64;
        self.residual < *tolerance && int_bits + 32 <= self.working_bits as i64
    }
}

/// Discriminant `D_n = 1 - 24n`.
pub fn discriminant(n: u64) -> i64 {
    1 - 24 * n as i64
}

/// The trace without the residual check.
pub fn trace_s_uncertified(n: u64, policy: &PrecisionPolicy) -> Result<TraceResult> {
    if n == 0 {
        return Err(Error::Domain("trace is defined for n >= 1".into()));
    }
    let d = discriminant(n);
    let prec = policy.working_bits;
    let mut classes = Vec::new();
    for (u, epsilon) in square_divisors_with_sign(d)? {
        for form in reduced_primitive_forms(d / (u * u))? {
            classes.push((u, epsilon, form));
        }
    }
    let per_class_terms = classes
        .into_par_iter()
        .map(|(u, epsilon, form)| {
            let assignment = assign_coset(&form)?;
            let v = f_at_class(&form, &assignment, policy)?;
            let value = if epsilon < 0 { -v } else { v };
            Ok(ClassTerm { u, epsilon, form, assignment, value })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut s = BigComplex::zero(prec);
    for t in &per_class_terms {
        s = &s + &t.value;
    }
    let root = Float::with_val(prec, -d).sqrt();
    let alpha_real = -Float::with_val(prec, &s.im / &root);
    let alpha_int = alpha_real.to_integer().expect("finite trace");
    let residual = Float::with_val(prec, &alpha_real - &alpha_int).abs();
    Ok(TraceResult { n, working_bits: prec, s, per_class_terms, alpha_real, alpha_int, residual })
}

/// `α(n) = -Im(S(n))/sqrt|D_n|` with certified rounding.
pub fn trace_s(n: u64, policy: &PrecisionPolicy) -> Result<TraceResult> {
    let result = trace_s_uncertified(n, policy)?;
    if !result.certified(&policy.residual_tol) {
        return Err(Error::Certification {
            n,
            rounded: result.alpha_int.to_string(),
            residual: crate::numeric::fmt_real(&result.residual),
            tolerance: crate::numeric::fmt_real(&policy.residual_tol),
        });
    }
    Ok(result)
}

/// Convenience: `α(n)` from the trace at the default policy.
pub fn alpha_via_trace(n: u64) -> Result<Integer> {
    trace_s(n, &PrecisionPolicy::for_n(n)).map(|t| t.alpha_int)
}

/// `(-1)^{n+1} (√6/√(24n-1)) e^{l(n)/2}`.
pub fn main_term(n: u64, prec: u32) -> BigReal {
    let abs_d = Float::with_val(prec, 24 * n - 1);
    let half_ell = ell(prec, n as f64) / 2u32;
    let value = Float::with_val(prec, 6).sqrt() / abs_d.sqrt() * half_ell.exp();
    if n % 2 == 1 {
        value
    } else {
        -value
    }
}

/// `q(n) = log|D_n| / |log log|D_n| - 1.1714|`.
pub fn q_exponent(n: u64, prec: u32) -> BigReal {
    let log_d = Float::with_val(prec, 24 * n - 1).ln();
    let denom = Float::with_val(prec, log_d.ln_ref()) - decimal(prec, "1.1714");
    log_d / denom.abs()
}

/// `(4.30 × 10²³) 2^{q(n)} |D_n|² e^{l(n)/3}`.
pub fn error_term(n: u64, prec: u32) -> BigReal {
    let abs_d = Float::with_val(prec, 24 * n - 1);
    let two_q = Float::with_val(prec, q_exponent(n, prec).exp2_ref());
    let third = ell(prec, n as f64) / 3u32;
    decimal(prec, "4.30e23") * two_q * abs_d.square() * third.exp()
}
