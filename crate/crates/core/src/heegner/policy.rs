use rug::Float;

use crate::numeric::BigReal;

/// Largest `|q|` at which the evaluator is ever asked to sum a q-series:
/// `exp(-π√3/6)`, reached at `Im τ = √3/12`.
pub const MAX_NOME: f64 = 0.403_774_2;

/// Smallest admissible `Im τ`, with slack for rounding.
pub const MIN_IMAG: f64 = 0.144_337_567_297_406_4 - 1e-6;

/// Default certification tolerance for the rounded trace.
pub const RESIDUAL_TOLERANCE: f64 = 1e-6;

/// Working precision and truncation lengths for evaluating the trace at `n`.
#[derive(Clone, Debug)]
pub struct PrecisionPolicy {
    pub n: u64,
    pub working_bits: u32,
    /// Number of pentagonal index pairs `k ≥ 1` kept in `Π(1 - q^m)`.
    pub eta_terms: usize,
    /// Highest power of `q` kept in the `E₄` series.
    pub e4_terms: usize,
    pub residual_tol: BigReal,
}

/// `⌈(π√|D_n|/6)·log₂e⌉ + ⌈2·log₂(24n+2)⌉ + 96`.
pub fn working_bits_for(n: u64) -> u32 {
    let abs_d = (24 * n - 1) as f64;
    let ell = std::f64::consts::PI * abs_d.sqrt() / 6.0;
    let main = (ell * std::f64::consts::LOG2_E).ceil() as u32;
    let count = (2.0 * ((24 * n + 2) as f64).log2()).ceil() as u32;
    main + count + 96
}

/// log₂ of an upper bound for `Σ_{k>K} 240 σ₃(k) x^k`, using `σ₃(k) ≤ ζ(3) k³`.
fn e4_tail_log2(k: usize, x: f64) -> f64 {
    let k1 = (k + 1) as f64;
    let ratio = x * ((k1 + 1.0) / k1).powi(3);
    if ratio >= 1.0 {
        return f64::INFINITY;
    }
    (240.0f64 * 1.202_057).log2() + 3.0 * k1.log2() + k1 * x.log2() - (1.0 - ratio).log2()
}

/// log₂ of `Σ_{e>E} x^e = x^{E+1}/(1-x)`.
fn geometric_tail_log2(e: usize, x: f64) -> f64 {
    (e + 1) as f64 * x.log2() - (1.0 - x).log2()
}

/// Truncation lengths keeping both series tails below `2^-bits` at `|q| ≤ MAX_NOME`.
pub fn truncation_for(bits: u32) -> (usize, usize) {
    let target = -(bits as f64) - 8.0;
    let mut e4 = 8;
    while e4_tail_log2(e4, MAX_NOME) > target {
        e4 += 1;
    }
    let mut last_exp = 1usize;
    while geometric_tail_log2(last_exp, MAX_NOME) > target {
        last_exp += 1;
    }
    // keep every pentagonal pair whose smaller exponent is at most last_exp
    let mut k = 0usize;
    while (k + 1) * (3 * (k + 1) - 1) / 2 <= last_exp {
        k += 1;
    }
    (k + 1, e4)
}

impl PrecisionPolicy {
    pub fn for_n(n: u64) -> Self {
        Self::with_bits(n, working_bits_for(n))
    }

    pub fn with_bits(n: u64, bits: u32) -> Self {
        let (eta_terms, e4_terms) = truncation_for(bits);
        PrecisionPolicy {
            n,
            working_bits: bits,
            eta_terms,
            e4_terms,
            residual_tol: Float::with_val(64, RESIDUAL_TOLERANCE),
        }
    }

    /// Same `n`, twice the bits.
    pub fn doubled(&self) -> Self {
        Self::with_bits(self.n, self.working_bits * 2)
    }
}
