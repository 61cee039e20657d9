//! Command-line front end. Every subcommand produces one table, written as
//! CSV or JSON lines; claim summaries go to stderr.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rug::Float;

use crate::error::Error;
use crate::exact_series::{f_weakly_holomorphic_coeffs, partition_counts, rank_counts};
use crate::heegner::{trace_s, trace_s_uncertified, PrecisionPolicy};
use crate::kloosterman::{a_coefficient_series, b0_series, b0_sub_sum_limits, coefficient_bound_check, detect_plateau};
use crate::numeric::fmt_real;
use crate::quadforms::{assign_coset, small_leading_forms};
use crate::verifier::{
    convexity_exact, frontier_table, maxn_dp, maxn_table, sandwich_threshold, substitution_audit, verify_corollaries,
    verify_final_inequality, verify_maxn, verify_partition_error, verify_partition_lower_bound, verify_sandwich,
    verify_theorem_main, fmt_partition, fmt_partition_set, BoundReport, Cell, Table,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mocktheta", version, about = "Mock theta coefficients, partition ranks and bound verification")]
pub struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true, env = "MOCKTHETA_THREADS")]
    pub threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write records here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Working precision in bits (at least 64).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(64..))]
    pub precision: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    Trace,
    Both,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Range {
    /// First n.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Last n (defaults to --n).
    #[arg(long)]
    pub to: Option<u64>,
}

impl Range {
    fn bounds(&self) -> Result<(u64, u64), String> {
        let hi = self.to.unwrap_or(self.n);
        if hi < self.n {
            return Err(format!("empty range {}..={hi}", self.n));
        }
        Ok((self.n, hi))
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// α(n) from the exact series, the trace, or both.
    /// Columns: n, exact, trace, residual, bits, agree.
    Alpha {
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Columns: n, p, alpha, N0, N1.
    Rank {
        #[arg(long, default_value_t = 100)]
        n_max: u64,
    },
    /// Columns: n, p.
    Pn {
        #[arg(long, default_value_t = 100)]
        n_max: u64,
    },
    /// Coefficients c_F(n) of F from q^-1. Columns: n, c.
    Fcoeffs {
        #[arg(long, default_value_t = 20)]
        n_max: u64,
    },
    /// Truncated Kloosterman-Bessel series for a(n).
    /// Columns: n, c_max, l1, l2, l3, l6, total, oscillation, plateau.
    AcoeffSeries {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(u64).range(6..))]
        c_max: u64,
    },
    /// Constant term from the Möbius sums. Columns: term, value, reference, difference.
    B0 {
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(6..))]
        c_max: u64,
    },
    /// Per-class terms of the trace.
    /// Columns: u, epsilon, a, b, c, cusp, shift, zeta6, re, im.
    TraceDetail {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    #[command(subcommand)]
    Verify(Verify),
    #[command(subcommand)]
    Tables(Tables),
    /// C_a for 11 ≤ a ≤ 17 at full precision. Columns: a, c_a, max_b.
    Frontier,
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Columns: n, alpha, main, E, bound, margin.
    Theorem {
        #[arg(long, default_value_t = 2000)]
        n_max: u64,
    },
    /// Partition error bound and the crude lower bound.
    Partition {
        #[arg(long, default_value_t = 2000)]
        n_max: u64,
        #[arg(long)]
        claim: Option<String>,
    },
    /// Rank remainder and rank ratio bounds.
    Corollaries {
        #[arg(long, default_value_t = 2000)]
        n_max: u64,
        #[arg(long)]
        claim: Option<String>,
    },
    /// Two-sided bound on N(r,2;n) plus the threshold scan.
    Sandwich {
        #[arg(long, default_value_t = 4600)]
        n_max: u64,
        #[arg(long, default_value_t = 5000)]
        scan_max: u64,
    },
    /// Columns: r, sum, a, b, margin.
    Convexity {
        #[arg(long, default_value_t = 2000)]
        max_sum: u64,
    },
    /// Columns: a, T_a(1), rhs, margin.
    FinalIneq {
        #[arg(long, default_value_t = 18)]
        a_min: u32,
        #[arg(long, default_value_t = 5000)]
        a_max: u32,
        /// Also sample log-spaced a up to this value.
        #[arg(long)]
        grid_max: Option<u32>,
        #[arg(long, default_value_t = 200)]
        grid_points: usize,
    },
    /// Columns: r, n, value, closed_form, count, canonical, ok.
    Maxn {
        #[arg(long, default_value_t = 1000)]
        n_max: u64,
    },
    /// Substitution rules, the large-part reduction and the 1-2-3 representation.
    Substitutions {
        #[arg(long, default_value_t = 200)]
        large_max: u64,
        #[arg(long)]
        claim: Option<String>,
    },
    /// Columns: n, coefficient, bound, ratio, margin.
    Lemma32 {
        #[arg(long, default_value_t = 500)]
        n_max: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum Tables {
    /// Reduced forms of discriminant 1-24n with a ≤ 12.
    /// Columns: a, b, c, cusp, shift, zeta6.
    Table2 {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Columns: a, c_a, max_b.
    Table3,
    /// Columns: n, maxN0, lambda0, maxN1, lambda1.
    Table4 {
        #[arg(long, default_value_t = 23)]
        n_max: u64,
    },
    /// One residue of the table above. Columns: n, maxN, lambda.
    Maxn {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=1))]
        r: u32,
        #[arg(long, default_value_t = 23)]
        n_max: u64,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

/// What a subcommand hands back: records plus claim reports.
struct Outcome {
    table: Table,
    reports: Vec<BoundReport>,
    notes: Vec<String>,
    ok: bool,
}

impl Outcome {
    fn table(table: Table) -> Self {
        Outcome { table, reports: Vec::new(), notes: Vec::new(), ok: true }
    }

    fn reports(mut reports: Vec<BoundReport>, claim: Option<&str>) -> Result<Self, Failure> {
        let ok = reports.iter().all(BoundReport::pass);
        let table = match (claim, reports.len()) {
            (None, 1) => reports[0].table.clone(),
            (None, _) => summary_table(&reports),
            (Some(id), _) => match reports.iter_mut().find(|r| r.claim_id == id) {
                Some(r) => std::mem::take(&mut r.table),
                None => {
                    let ids: Vec<_> = reports.iter().map(|r| r.claim_id.as_str()).collect();
                    return Err(Failure::Usage(format!("unknown claim {id}; expected one of {}", ids.join(", "))));
                }
            },
        };
        Ok(Outcome { table, reports, notes: Vec::new(), ok })
    }
}

fn summary_table(reports: &[BoundReport]) -> Table {
    let mut t = Table::new(&["claim", "range", "pass", "checked", "failures", "worst_margin", "worst_location"]);
    for r in reports {
        let loc: Vec<String> = r.worst_location.iter().map(|v| v.to_string()).collect();
        t.push(vec![
            Cell::from(r.claim_id.as_str()),
            Cell::from(r.range.as_str()),
            Cell::Bool(r.pass()),
            Cell::Int(r.checked as i64),
            Cell::Int(r.failures.len() as i64),
            Cell::from(r.worst_margin.as_ref().map(fmt_real).unwrap_or_default()),
            Cell::from(loc.join(" ")),
        ]);
    }
    t
}

/// Parses `argv` (program name first), runs one subcommand and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INTERNAL;
        }
    };
    match pool.install(|| execute(&cli)) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, Failure> {
    let outcome = dispatch(cli)?;
    let sink: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    write_table(&outcome.table, cli.format, sink)?;
    for r in &outcome.reports {
        eprintln!("{}", r.summary_line());
        for n in &r.notes {
            eprintln!("  note: {n}");
        }
    }
    for n in &outcome.notes {
        eprintln!("{n}");
    }
    Ok(if outcome.ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

/// CSV with a header row, or one JSON object per row.
pub fn write_table(table: &Table, format: Format, sink: impl Write) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(sink);
            w.write_record(&table.columns)?;
            for row in &table.rows {
                w.write_record(row.iter().map(Cell::render))?;
            }
            w.flush()
        }
        Format::Json => {
            let mut sink = io::BufWriter::new(sink);
            for row in &table.rows {
                let obj: serde_json::Map<String, serde_json::Value> =
                    table.columns.iter().cloned().zip(row.iter().map(Cell::to_json)).collect();
                serde_json::to_writer(&mut sink, &obj)?;
                sink.write_all(b"\n")?;
            }
            sink.flush()
        }
    }
}

fn policy(cli: &Cli, n: u64) -> PrecisionPolicy {
    match cli.precision {
        Some(bits) => PrecisionPolicy::with_bits(n, bits),
        None => PrecisionPolicy::for_n(n),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let prec = cli.precision.unwrap_or(128);
    match &cli.command {
        Command::Alpha { range, method } => alpha(cli, *range, *method),
        Command::Rank { n_max } => {
            let t = rank_counts(*n_max as usize)?;
            let mut out = Table::new(&["n", "p", "alpha", "N0", "N1"]);
            for n in 0..=*n_max as usize {
                out.push(vec![
                    Cell::Int(n as i64),
                    Cell::from(&t.p[n]),
                    Cell::from(&t.alpha[n]),
                    Cell::from(&t.n0[n]),
                    Cell::from(&t.n1[n]),
                ]);
            }
            Ok(Outcome::table(out))
        }
        Command::Pn { n_max } => {
            let mut out = Table::new(&["n", "p"]);
            for (n, p) in partition_counts(*n_max as usize).into_iter().enumerate() {
                out.push(vec![Cell::Int(n as i64), Cell::Big(p)]);
            }
            Ok(Outcome::table(out))
        }
        Command::Fcoeffs { n_max } => {
            let f = f_weakly_holomorphic_coeffs(*n_max as usize)?;
            let mut out = Table::new(&["n", "c"]);
            for n in -1..=*n_max as i64 {
                out.push(vec![Cell::Int(n), Cell::Big(f.coeff(n))]);
            }
            Ok(Outcome::table(out))
        }
        Command::AcoeffSeries { n, c_max } => {
            let s = a_coefficient_series(*n, *c_max, prec)?;
            let plateau = detect_plateau(&s, 0.25, 0.1);
            let mut out = Table::new(&["n", "c_max", "l1", "l2", "l3", "l6", "total", "oscillation", "plateau"]);
            let mut row = vec![Cell::Int(*n as i64), Cell::Int(*c_max as i64)];
            row.extend(s.partial.iter().cloned().map(Cell::Real));
            row.push(Cell::Real(s.total.clone()));
            row.push(Cell::Real(Float::with_val(53, plateau.oscillation)));
            row.push(Cell::Bool(plateau.accepted));
            out.push(row);
            Ok(Outcome::table(out))
        }
        Command::B0 { c_max } => {
            let b = b0_series(*c_max, prec)?;
            let limits = b0_sub_sum_limits(b.total.prec());
            let mut out = Table::new(&["term", "value", "reference", "difference"]);
            for (i, ell) in [1, 2, 3, 6].iter().enumerate() {
                let diff = Float::with_val(b.total.prec(), &b.sub_sums[i] - &limits[i]);
                out.push(vec![
                    Cell::from(format!("l={ell}")),
                    Cell::Real(b.sub_sums[i].clone()),
                    Cell::Real(limits[i].clone()),
                    Cell::Real(diff),
                ]);
            }
            let four = Float::with_val(b.total.prec(), -4);
            let diff = Float::with_val(b.total.prec(), &b.total - &four);
            out.push(vec![Cell::from("total"), Cell::Real(b.total.clone()), Cell::Real(four), Cell::Real(diff)]);
            let mut o = Outcome::table(out);
            o.notes.push(format!("tail bound {}", fmt_real(&b.tail_bound)));
            Ok(o)
        }
        Command::TraceDetail { n } => {
            let t = trace_s_uncertified(*n, &policy(cli, *n))?;
            let mut out = Table::new(&["u", "epsilon", "a", "b", "c", "cusp", "shift", "zeta6", "re", "im"]);
            for term in &t.per_class_terms {
                out.push(vec![
                    Cell::Int(term.u),
                    Cell::Int(term.epsilon as i64),
                    Cell::Int(term.form.a),
                    Cell::Int(term.form.b),
                    Cell::Int(term.form.c),
                    Cell::from(term.assignment.cusp.label()),
                    Cell::Int(term.assignment.shift),
                    Cell::Int(term.assignment.zeta6_exponent()),
                    Cell::Real(term.value.re.clone()),
                    Cell::Real(term.value.im.clone()),
                ]);
            }
            let mut o = Outcome::table(out);
            o.notes.push(format!(
                "n={} bits={} alpha={} alpha_real={} residual={}",
                t.n,
                t.working_bits,
                t.alpha_int,
                fmt_real(&t.alpha_real),
                fmt_real(&t.residual)
            ));
            Ok(o)
        }
        Command::Verify(v) => verify(v),
        Command::Tables(t) => tables(t),
        Command::Frontier => {
            let mut out = Table::new(&["a", "c_a", "max_b"]);
            for f in frontier_table()? {
                out.push(vec![Cell::Int(f.a as i64), Cell::Real(f.c_a.clone()), Cell::Int(f.max_b as i64)]);
            }
            Ok(Outcome::table(out))
        }
    }
}

fn alpha(cli: &Cli, range: Range, method: Method) -> Result<Outcome, Failure> {
    let (lo, hi) = range.bounds().map_err(Failure::Usage)?;
    let exact = match method {
        Method::Trace => None,
        _ => Some(rank_counts(hi as usize)?.alpha),
    };
    let mut out = Table::new(&["n", "exact", "trace", "residual", "bits", "agree"]);
    let mut ok = true;
    for n in lo..=hi {
        let e = exact.as_ref().map(|a| a[n as usize].clone());
        let mut row = vec![Cell::Int(n as i64), e.clone().map(Cell::Big).unwrap_or_else(|| Cell::from(""))];
        if method == Method::Exact {
            row.extend([Cell::from(""), Cell::from(""), Cell::from(""), Cell::from("")]);
        } else {
            let t = trace_s(n, &policy(cli, n))?;
            let agree = e.as_ref().is_none_or(|e| *e == t.alpha_int);
            ok &= agree;
            row.extend([
                Cell::Big(t.alpha_int),
                Cell::Real(t.residual),
                Cell::Int(t.working_bits as i64),
                Cell::Bool(agree),
            ]);
        }
        out.push(row);
    }
    Ok(Outcome { table: out, reports: Vec::new(), notes: Vec::new(), ok })
}

fn verify(v: &Verify) -> Result<Outcome, Failure> {
    match v {
        Verify::Theorem { n_max } => Outcome::reports(vec![verify_theorem_main(*n_max)?], None),
        Verify::Partition { n_max, claim } => {
            let error = verify_partition_error(*n_max)?;
            let table = rank_counts(*n_max as usize)?;
            let lower = verify_partition_lower_bound(&table, *n_max);
            Outcome::reports(vec![error, lower], claim.as_deref())
        }
        Verify::Corollaries { n_max, claim } => Outcome::reports(verify_corollaries(*n_max)?, claim.as_deref()),
        Verify::Sandwich { n_max, scan_max } => {
            let mut o = Outcome::reports(vec![verify_sandwich(*n_max)?], None)?;
            let scan = sandwich_threshold(*scan_max);
            let show = |m: &Option<_>| m.as_ref().map(fmt_real).unwrap_or_else(|| "-".into());
            o.notes.push(format!(
                "threshold scan to {scan_max}: first n = {} (margin before {}, at {})",
                scan.threshold.map(|t| t.to_string()).unwrap_or_else(|| "none".into()),
                show(&scan.margin_before),
                show(&scan.margin_at)
            ));
            Ok(o)
        }
        Verify::Convexity { max_sum } => {
            let c = convexity_exact(*max_sum)?;
            let mut o = Outcome::reports(vec![c.report], None)?;
            for (r, a, b) in c.sub_threshold_failures {
                o.notes.push(format!("below threshold: r={r} a={a} b={b}"));
            }
            Ok(o)
        }
        Verify::FinalIneq { a_min, a_max, grid_max, grid_points } => {
            let grid_max = grid_max.unwrap_or(*a_max);
            let points = if grid_max > *a_max { *grid_points } else { 0 };
            Outcome::reports(vec![verify_final_inequality(*a_min, *a_max, grid_max, points)], None)
        }
        Verify::Maxn { n_max } => {
            let table = rank_counts(*n_max as usize)?;
            Outcome::reports(vec![verify_maxn(&table, *n_max)], None)
        }
        Verify::Substitutions { large_max, claim } => {
            let table = rank_counts((*large_max as usize).max(40))?;
            Outcome::reports(substitution_audit(&table, *large_max), claim.as_deref())
        }
        Verify::Lemma32 { n_max } => Outcome::reports(vec![coefficient_bound_check(*n_max)?], None),
    }
}

fn tables(t: &Tables) -> Result<Outcome, Failure> {
    match t {
        Tables::Table2 { n } => {
            let mut out = Table::new(&["a", "b", "c", "cusp", "shift", "zeta6"]);
            for q in small_leading_forms(*n, 12) {
                let g = assign_coset(&q)?;
                out.push(vec![
                    Cell::Int(q.a),
                    Cell::Int(q.b),
                    Cell::Int(q.c),
                    Cell::from(g.cusp.label()),
                    Cell::Int(g.shift),
                    Cell::Int(g.zeta6_exponent()),
                ]);
            }
            Ok(Outcome::table(out))
        }
        Tables::Table3 => {
            let mut out = Table::new(&["a", "c_a", "max_b"]);
            for f in frontier_table()? {
                out.push(vec![Cell::Int(f.a as i64), Cell::from(f.c_a_truncated()), Cell::Int(f.max_b as i64)]);
            }
            Ok(Outcome::table(out))
        }
        Tables::Table4 { n_max } => {
            let table = rank_counts(*n_max as usize)?;
            Ok(Outcome::table(maxn_table(&table, *n_max)))
        }
        Tables::Maxn { r, n_max } => {
            let table = rank_counts(*n_max as usize)?;
            let mut out = Table::new(&["n", "maxN", "lambda"]);
            for m in maxn_dp(&table, *r, *n_max) {
                let lambda = match &m.maximizers {
                    Some(set) => fmt_partition_set(set),
                    None => fmt_partition(&m.canonical),
                };
                out.push(vec![Cell::Int(m.n as i64), Cell::Big(m.value), Cell::from(lambda)]);
            }
            Ok(Outcome::table(out))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let dir = std::env::temp_dir().join(format!("mocktheta-cli-{}-{}", std::process::id(), args.join("_")));
        let path = dir.with_extension("out");
        let mut argv = vec!["mocktheta"];
        argv.extend_from_slice(args);
        let p = path.to_str().unwrap().to_string();
        argv.extend(["--output", &p]);
        let code = run(argv);
        let text = std::fs::read_to_string(&path).unwrap_or_default();
        let _ = std::fs::remove_file(&path);
        (code, text)
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["mocktheta", "alpha"]), EXIT_USAGE);
        assert_eq!(run(["mocktheta", "pn", "--bogus"]), EXIT_USAGE);
        assert_eq!(run(["mocktheta", "alpha", "--n", "3", "--precision", "32"]), EXIT_USAGE);
        assert_eq!(run(["mocktheta", "alpha", "--n", "5", "--to", "3"]), EXIT_USAGE);
    }

    #[test]
    fn help_exits_0() {
        assert_eq!(run(["mocktheta", "verify", "theorem", "--help"]), EXIT_OK);
    }

    #[test]
    fn alpha_both_as_json() {
        let (code, text) = run_capture(&["alpha", "--n", "24", "--method", "both", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(v["exact"], "-53");
        assert_eq!(v["trace"], "-53");
        assert_eq!(v["agree"], true);
    }

    #[test]
    fn pn_csv() {
        let (code, text) = run_capture(&["pn", "--n-max", "5"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(text, "n,p\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n");
    }

    #[test]
    fn low_precision_trace_fails_certification() {
        let (code, _) = run_capture(&["alpha", "--n", "2000", "--method", "trace", "--precision", "64"]);
        assert_eq!(code, EXIT_INTERNAL);
    }

    #[test]
    fn table4_r1_column() {
        let (code, text) = run_capture(&["tables", "maxn", "--r", "1", "--n-max", "8"]);
        assert_eq!(code, EXIT_OK);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n,maxN,lambda");
        assert!(lines[3].starts_with("3,0,") && lines[3].contains("(1,1,1)"));
        assert!(lines[8].starts_with("8,16,"));
    }

    #[test]
    fn output_is_reproducible() {
        let a = run_capture(&["verify", "lemma32", "--n-max", "40"]);
        let b = run_capture(&["verify", "lemma32", "--n-max", "40", "--threads", "1"]);
        assert_eq!(a, b);
        assert_eq!(a.0, EXIT_OK);
    }
}
