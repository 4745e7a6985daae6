//! JSON and CSV rendering of spectrum tables and verification results.
//!
//! Floats are written as strings in signed scientific notation with 15
//! significant digits so that reports are stable under diff. Eigenvalues
//! smaller in magnitude than [`ZERO_SNAP`] are written as zero, so that
//! rounding noise on zero modes does not flip signs between runs.

use std::io::Write;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::bondboson::{SpectrumRow, SpectrumTable};
use crate::lattice::Momentum;

/// Eigenvalue magnitudes below this are rendered as exact zeros.
pub const ZERO_SNAP: f64 = 1e-12;

pub fn fmt_float(x: f64) -> String {
    // -0.0 would otherwise print with a minus sign
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:+.14e}")
}

pub fn fmt_eigenvalue(x: f64) -> String {
    fmt_float(if x.abs() < ZERO_SNAP { 0.0 } else { x })
}

pub fn float_value(x: f64) -> Value {
    Value::String(fmt_float(x))
}

fn floats(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| Value::String(fmt_eigenvalue(x))).collect())
}

pub fn momentum_value(k: Momentum) -> Value {
    Value::String(k.to_string())
}

fn momenta_object(row: &SpectrumRow) -> Value {
    let mut m = Map::new();
    for (name, k) in &row.momenta {
        m.insert((*name).to_string(), momentum_value(*k));
    }
    Value::Object(m)
}

/// `{config, blocks: [...], verdict}`.
pub fn spectrum_json(config: Value, table: &SpectrumTable) -> Value {
    let blocks: Vec<Value> = table
        .rows
        .iter()
        .map(|r| {
            json!({
                "momenta": momenta_object(r),
                "numeric": floats(&r.numeric),
                "closed_form": floats(&r.closed_form),
                "fermion_pairs": floats(&r.fermion_pairs),
                "max_discrepancy": float_value(r.max_discrepancy),
            })
        })
        .collect();
    json!({
        "config": config,
        "blocks": blocks,
        "verdict": {
            "pass": table.passes(),
            "tolerance": float_value(table.tolerance),
            "max_discrepancy": float_value(table.max_discrepancy),
            "flagged_blocks": table.flagged,
            "fermion_energies_on_spectrum": table.fermion_energies_on_spectrum,
            "band_discrepancy": float_value(table.band_discrepancy),
        },
    })
}

/// One row per `(block, eigenvalue rank)`.
pub fn write_spectrum_csv<W: Write>(out: W, table: &SpectrumTable) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let Some(first) = table.rows.first() else {
        return w.flush().map_err(Into::into);
    };
    let mut header = vec!["block".to_string()];
    header.extend(first.momenta.iter().map(|(n, _)| n.to_string()));
    header.extend(["rank", "numeric", "closed_form", "fermion_pair", "max_discrepancy"].map(String::from));
    w.write_record(&header)?;
    for (b, row) in table.rows.iter().enumerate() {
        for rank in 0..row.numeric.len() {
            let mut rec = vec![b.to_string()];
            rec.extend(row.momenta.iter().map(|(_, k)| k.to_string()));
            rec.push(rank.to_string());
            rec.push(fmt_eigenvalue(row.numeric[rank]));
            rec.push(fmt_eigenvalue(row.closed_form[rank]));
            rec.push(fmt_eigenvalue(row.fermion_pairs[rank]));
            rec.push(fmt_float(row.max_discrepancy));
            w.write_record(&rec)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// One named residual compared against a tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    pub fn at_most(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            value,
            tolerance,
            pass: value <= tolerance,
        }
    }

    /// A boolean condition, recorded with value 0 (holds) or 1 (fails).
    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        Self {
            name: name.into(),
            value: if ok { 0.0 } else { 1.0 },
            tolerance: 0.0,
            pass: ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
    /// Suite-specific tables, already rendered.
    pub details: Value,
}

impl VerifyReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self, config: Value) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "value": float_value(c.value),
                    "tolerance": float_value(c.tolerance),
                    "pass": c.pass,
                })
            })
            .collect();
        json!({
            "config": config,
            "suite": self.suite,
            "checks": checks,
            "details": self.details,
            "verdict": { "pass": self.passes() },
        })
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["suite", "check", "value", "tolerance", "pass"])?;
        for c in &self.checks {
            w.write_record([
                self.suite.as_str(),
                c.name.as_str(),
                &fmt_float(c.value),
                &fmt_float(c.tolerance),
                if c.pass { "true" } else { "false" },
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Pretty JSON with a trailing newline.
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("string keys only");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bondboson::ssh_correspondence_report;
    use crate::lattice::ChainSpec;

    #[test]
    fn float_format() {
        assert_eq!(fmt_float(4.0), "+4.00000000000000e0");
        assert_eq!(fmt_float(-0.0), "+0.00000000000000e0");
        assert_eq!(fmt_float(3e-17), "+3.00000000000000e-17");
        assert_eq!(fmt_eigenvalue(-3e-17), "+0.00000000000000e0");
        assert_eq!(fmt_float(-1.25e-3), "-1.25000000000000e-3");
    }

    #[test]
    fn csv_has_one_row_per_eigenvalue() {
        let t = ssh_correspondence_report(&ChainSpec::new(6, 1.0, 0.1).unwrap(), 1e-10).unwrap();
        let mut buf = Vec::new();
        write_spectrum_csv(&mut buf, &t).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1 + 9 * 4);
        assert!(text.starts_with("block,q,k,rank,numeric"));
    }

    #[test]
    fn json_shape() {
        let t = ssh_correspondence_report(&ChainSpec::new(4, 1.0, 0.1).unwrap(), 1e-10).unwrap();
        let v = spectrum_json(json!({}), &t);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["config", "blocks", "verdict"]);
        assert_eq!(v["blocks"].as_array().unwrap().len(), 4);
        assert_eq!(v["blocks"][3]["momenta"]["q"], "pi");
    }
}
