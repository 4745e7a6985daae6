#![allow(dead_code)]

use std::path::PathBuf;

use serde_json::Value;

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Compares `actual` with the golden file, rewriting the file instead when
/// `BONDBOSON_BLESS` is set. Numbers and numeric strings are compared with
/// an absolute tolerance; everything else must match exactly.
pub fn check_golden(name: &str, actual: &Value, tol: f64) -> Result<(), String> {
    let path = golden_path(name);
    if std::env::var_os("BONDBOSON_BLESS").is_some() {
        let text = serde_json::to_string_pretty(actual).unwrap() + "\n";
        std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(());
    }
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let expected: Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    json_close(&expected, actual, tol, "$")
}

fn as_number(v: &Value) -> Option<f64> {
    match v {
        Value::Number(n) => n.as_f64(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

pub fn json_close(expected: &Value, actual: &Value, tol: f64, at: &str) -> Result<(), String> {
    match (expected, actual) {
        (Value::Object(a), Value::Object(b)) => {
            let ka: Vec<_> = a.keys().collect();
            let kb: Vec<_> = b.keys().collect();
            if ka != kb {
                return Err(format!("{at}: keys {ka:?} != {kb:?}"));
            }
            for (k, va) in a {
                json_close(va, &b[k], tol, &format!("{at}.{k}"))?;
            }
            Ok(())
        }
        (Value::Array(a), Value::Array(b)) => {
            if a.len() != b.len() {
                return Err(format!("{at}: length {} != {}", a.len(), b.len()));
            }
            for (i, (va, vb)) in a.iter().zip(b).enumerate() {
                json_close(va, vb, tol, &format!("{at}[{i}]"))?;
            }
            Ok(())
        }
        _ if expected == actual => Ok(()),
        _ => match (as_number(expected), as_number(actual)) {
            (Some(x), Some(y)) if (x - y).abs() <= tol => Ok(()),
            _ => Err(format!("{at}: expected {expected}, got {actual}")),
        },
    }
}
