//! CSV helpers: observation streams and fixed-precision number formatting.
//!
//! A stream file is a `#`-prefixed metadata line holding one JSON value,
//! a header `x1,…,xk`, and one row per observation. Values are written with
//! Rust's shortest round-trip representation so a reload is exact.

use std::io::{Read, Write};

use serde_json::Value;

use crate::error::{Error, Result};

/// Formats `x` with 9 significant digits, without exponent for moderate
/// magnitudes. Output is stable across platforms.
pub fn fmt_sig(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "NaN".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if x == 0.0 {
        return "0".into();
    }
    // `{:.8e}` rounds correctly to 9 significant digits; only the decimal
    // point has to move.
    let sci = format!("{:.8e}", x);
    let (mant, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..=14).contains(&exp) {
        return sci;
    }
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let mut s = String::with_capacity(24);
    if neg {
        s.push('-');
    }
    if exp < 0 {
        s.push_str("0.");
        for _ in 0..(-exp - 1) {
            s.push('0');
        }
        s.push_str(&digits);
    } else {
        let split = exp as usize + 1;
        if split >= digits.len() {
            s.push_str(&digits);
            for _ in digits.len()..split {
                s.push('0');
            }
        } else {
            s.push_str(&digits[..split]);
            s.push('.');
            s.push_str(&digits[split..]);
        }
    }
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// A stream read back from CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct StreamFile {
    pub metadata: Option<Value>,
    pub rows: Vec<Vec<f64>>,
}

impl StreamFile {
    pub fn dim(&self) -> Option<usize> {
        self.rows.first().map(Vec::len)
    }
}

pub fn write_stream_csv<W: Write>(mut out: W, metadata: &Value, rows: &[Vec<f64>]) -> Result<()> {
    let k = rows.first().map_or(0, Vec::len);
    writeln!(out, "# {}", serde_json::to_string(metadata).map_err(|e| Error::invalid("metadata", e.to_string()))?)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record((1..=k).map(|i| format!("x{i}")))?;
    for r in rows {
        if r.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                actual: r.len(),
            });
        }
        w.write_record(r.iter().map(|v| v.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a stream written by [`write_stream_csv`]. The metadata line is
/// optional; every data row must have the header's width.
pub fn read_stream_csv<R: Read>(mut input: R) -> Result<StreamFile> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    let (metadata, body) = match text.strip_prefix('#') {
        Some(rest) => {
            let (meta, body) = rest.split_once('\n').unwrap_or((rest, ""));
            let v = serde_json::from_str(meta.trim())
                .map_err(|e| Error::invalid("metadata", e.to_string()))?;
            (Some(v), body)
        }
        None => (None, text.as_str()),
    };
    let mut r = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(body.as_bytes());
    let k = r.headers()?.len();
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        if rec.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                actual: rec.len(),
            });
        }
        let row = rec
            .iter()
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|e| Error::invalid("stream", format!("bad number {f:?}: {e}")))
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    Ok(StreamFile { metadata, rows })
}
