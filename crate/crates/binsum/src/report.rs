//! Evaluation records and convergence tables with deterministic CSV/JSON
//! rendering.
//!
//! All numbers are serialized as decimal strings (binary floats would lose
//! the high-precision values); byte output is a pure function of the table
//! contents and the requested digit count.

use num_rational::BigRational;

use crate::bignum::BigReal;
use crate::Error;

/// One evaluation record: order, value, and whatever exactness information
/// the formula's proof provides at that order.
#[derive(Clone, Debug)]
pub struct PartialResult {
    /// Transform order `m` (or outer truncation index).
    pub order: u64,
    /// The partial value at working precision.
    pub value: BigReal,
    /// Exact rational value, when the whole evaluation is rational.
    pub exact_value: Option<BigRational>,
    /// Exact residual `r` with `value + r` reconstructing the identity.
    pub exact_residual: Option<BigRational>,
    /// Proven error bound, when the proof supplies one at this order.
    pub proven_bound: Option<BigReal>,
    /// `reference − value` at working precision.
    pub reference_error: Option<BigReal>,
}

impl PartialResult {
    pub fn abs_error(&self) -> Option<BigReal> {
        self.reference_error.as_ref().map(|e| e.abs())
    }
}

/// Ordered sequence of partial results against a reference value.
#[derive(Clone, Debug)]
pub struct ConvergenceTable {
    pub formula: String,
    pub parameter: Option<String>,
    pub reference: BigReal,
    rows: Vec<PartialResult>,
}

/// Coarse behaviour of `|reference − value|` across the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trend {
    Shrinking,
    Growing,
    Flat,
    Unknown,
}

impl Trend {
    pub fn as_str(&self) -> &'static str {
        match self {
            Trend::Shrinking => "shrinking",
            Trend::Growing => "growing",
            Trend::Flat => "flat",
            Trend::Unknown => "unknown",
        }
    }
}

impl ConvergenceTable {
    pub fn new(formula: impl Into<String>, parameter: Option<String>, reference: BigReal) -> Self {
        Self {
            formula: formula.into(),
            parameter,
            reference,
            rows: Vec::new(),
        }
    }

    /// Rows must arrive in strictly increasing order of `order`.
    pub fn push(&mut self, row: PartialResult) -> Result<(), Error> {
        if let Some(last) = self.rows.last() {
            if row.order <= last.order {
                return Err(Error::RowOrder {
                    prev: last.order,
                    got: row.order,
                });
            }
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn rows(&self) -> &[PartialResult] {
        &self.rows
    }

    /// Compares the first and last absolute errors.
    pub fn trend(&self) -> Trend {
        let err = |r: &PartialResult| r.abs_error();
        match (
            self.rows.first().and_then(err),
            self.rows.last().and_then(err),
        ) {
            (Some(first), Some(last)) if self.rows.len() >= 2 => {
                if last < first {
                    Trend::Shrinking
                } else if last > first {
                    Trend::Growing
                } else {
                    Trend::Flat
                }
            }
            _ => Trend::Unknown,
        }
    }

    /// CSV with header `m,value,abs_error,bound`; absent bounds render as an
    /// empty field.
    pub fn to_csv(&self, digits: usize) -> String {
        let mut out = String::from("m,value,abs_error,bound\n");
        for r in &self.rows {
            let err = r
                .abs_error()
                .map(|e| e.to_decimal(digits))
                .unwrap_or_default();
            let bound = r
                .proven_bound
                .as_ref()
                .map(|b| b.to_decimal(digits))
                .unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.order,
                r.value.to_decimal(digits),
                err,
                bound
            ));
        }
        out
    }

    /// JSON object with the row array and a coarse trend report. Values are
    /// decimal strings; absent bounds are `null`.
    pub fn to_json(&self, digits: usize) -> String {
        let mut out = String::from("{");
        out.push_str(&format!("\"formula\":\"{}\",", self.formula));
        match &self.parameter {
            Some(p) => out.push_str(&format!("\"parameter\":\"{p}\",")),
            None => out.push_str("\"parameter\":null,"),
        }
        out.push_str(&format!(
            "\"reference\":\"{}\",",
            self.reference.to_decimal(digits)
        ));
        out.push_str("\"rows\":[");
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let err = r
                .abs_error()
                .map(|e| format!("\"{}\"", e.to_decimal(digits)))
                .unwrap_or_else(|| "null".into());
            let bound = r
                .proven_bound
                .as_ref()
                .map(|b| format!("\"{}\"", b.to_decimal(digits)))
                .unwrap_or_else(|| "null".into());
            out.push_str(&format!(
                "{{\"m\":{},\"value\":\"{}\",\"abs_error\":{},\"bound\":{}}}",
                r.order,
                r.value.to_decimal(digits),
                err,
                bound
            ));
        }
        out.push_str(&format!("],\"trend\":\"{}\"}}", self.trend().as_str()));
        out.push('\n');
        out
    }
}
