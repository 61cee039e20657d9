use std::fmt;

use rug::{Float, Integer};

use crate::numeric::{exact_float, fmt_real, BigReal};

/// One output value. Integers stay exact; reals print at 30 significant digits.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Big(Integer),
    Real(BigReal),
    Text(String),
    Bool(bool),
}

impl Cell {
    pub fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Big(v) => v.to_string(),
            Cell::Real(v) => fmt_real(v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    /// JSON value; big integers and reals become strings.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Cell::Int(v) => serde_json::Value::from(*v),
            Cell::Bool(b) => serde_json::Value::from(*b),
            other => serde_json::Value::from(other.render()),
        }
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<Integer> for Cell {
    fn from(v: Integer) -> Self {
        Cell::Big(v)
    }
}

impl From<&Integer> for Cell {
    fn from(v: &Integer) -> Self {
        Cell::Big(v.clone())
    }
}

impl From<BigReal> for Cell {
    fn from(v: BigReal) -> Self {
        Cell::Real(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

/// Column-named rows, in key order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }
}

/// How a margin decides a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    /// margin > 0
    Strict,
    /// margin ≥ 0
    AtLeast,
    /// margin = 0
    Equality,
}

impl ClaimKind {
    fn holds(self, margin: &Float) -> bool {
        match self {
            ClaimKind::Strict => *margin > 0,
            ClaimKind::AtLeast => *margin >= 0,
            ClaimKind::Equality => margin.is_zero(),
        }
    }
}

/// Outcome of checking one claim over a finite range.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub claim_id: String,
    pub statement: String,
    pub kind: ClaimKind,
    /// Human-readable description of the checked range, e.g. `1..=2000`.
    pub range: String,
    /// Smallest margin seen (for equality claims, the one farthest from 0).
    pub worst_margin: Option<BigReal>,
    pub worst_location: Vec<i64>,
    pub checked: u64,
    /// Locations where the claim failed.
    pub failures: Vec<Vec<i64>>,
    pub table: Table,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn new(claim_id: &str, statement: &str, kind: ClaimKind, table: Table) -> Self {
        BoundReport {
            claim_id: claim_id.to_string(),
            statement: statement.to_string(),
            kind,
            range: String::new(),
            worst_margin: None,
            worst_location: Vec::new(),
            checked: 0,
            failures: Vec::new(),
            table,
            notes: Vec::new(),
        }
    }

    pub fn with_range(mut self, range: impl Into<String>) -> Self {
        self.range = range.into();
        self
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn worse(&self, margin: &Float) -> bool {
        match &self.worst_margin {
            None => true,
            Some(w) => match self.kind {
                ClaimKind::Equality => Float::with_val(64, margin.abs_ref()) > Float::with_val(64, w.abs_ref()),
                _ => margin < w,
            },
        }
    }

    /// Records one checked location without a table row.
    pub fn observe(&mut self, location: Vec<i64>, margin: BigReal) {
        self.checked += 1;
        if !self.kind.holds(&margin) {
            self.failures.push(location.clone());
        }
        if self.worse(&margin) {
            self.worst_margin = Some(margin);
            self.worst_location = location;
        }
    }

    pub fn record(&mut self, location: Vec<i64>, margin: BigReal, row: Vec<Cell>) {
        self.observe(location, margin);
        self.table.push(row);
    }

    /// Exact integer margin.
    pub fn record_exact(&mut self, location: Vec<i64>, margin: &Integer, row: Vec<Cell>) {
        self.record(location, exact_float(margin, 64), row);
    }

    pub fn observe_exact(&mut self, location: Vec<i64>, margin: &Integer) {
        self.observe(location, exact_float(margin, 64));
    }

    /// A claim holds on its range when every location satisfied it.
    pub fn pass(&self) -> bool {
        self.checked > 0 && self.failures.is_empty()
    }

    pub fn summary_line(&self) -> String {
        let margin = self.worst_margin.as_ref().map(fmt_real).unwrap_or_else(|| "-".into());
        let loc: Vec<String> = self.worst_location.iter().map(|v| v.to_string()).collect();
        format!(
            "{} [{}] {} checked={} failures={} worst_margin={} at ({})",
            if self.pass() { "PASS" } else { "FAIL" },
            self.claim_id,
            self.range,
            self.checked,
            self.failures.len(),
            margin,
            loc.join(",")
        )
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.summary_line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;

    #[test]
    fn strict_claims_need_positive_margins() {
        let mut r = BoundReport::new("t", "x > 0", ClaimKind::Strict, Table::new(&["n"]));
        assert!(!r.pass());
        r.record_exact(vec![1], &Integer::from(3), vec![Cell::Int(1)]);
        r.record_exact(vec![2], &Integer::from(1), vec![Cell::Int(2)]);
        assert!(r.pass());
        assert_eq!(r.worst_location, vec![2]);
        r.observe_exact(vec![3], &Integer::new());
        assert!(!r.pass());
        assert_eq!(r.failures, vec![vec![3]]);
    }

    #[test]
    fn equality_claims_track_distance_from_zero() {
        let mut r = BoundReport::new("t", "x = 0", ClaimKind::Equality, Table::default());
        r.observe_exact(vec![1], &Integer::new());
        assert!(r.pass());
        r.observe_exact(vec![2], &Integer::from(-5));
        r.observe_exact(vec![3], &Integer::from(2));
        assert!(!r.pass());
        assert_eq!(r.worst_location, vec![2]);
    }

    #[test]
    fn cells_render() {
        assert_eq!(Cell::from(Integer::from(10).pow(30)).to_json(), serde_json::json!("1000000000000000000000000000000"));
        assert_eq!(Cell::Int(-3).to_json(), serde_json::json!(-3));
        assert_eq!(Cell::from("x").render(), "x");
    }
}
