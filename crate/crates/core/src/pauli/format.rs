//! The `.pauli` text format.
//!
//! Line 1 is `n <qubit count>`; each following non-comment line is
//! `<index-string> <coefficient>` with the index written as n digits over
//! `{0,1,2,3}`. `#` starts a comment, omitted indices are zero, and the
//! writer emits indices in lexicographic order with 12-significant-digit
//! coefficients so output is byte-stable.

use std::path::Path;

use super::{MultiIndex, PauliDecomposition};
use crate::error::{Error, Result};
use crate::render::format_f64;

/// Serialize to the `.pauli` text form.
pub fn to_pauli_string(d: &PauliDecomposition) -> String {
    let mut out = format!("n {}\n", d.n());
    for (idx, c) in d.terms() {
        out.push_str(&format!("{} {}\n", idx, format_f64(c)));
    }
    out
}

/// Parse the `.pauli` text form.
pub fn from_pauli_str(text: &str) -> Result<PauliDecomposition> {
    let mut n: Option<usize> = None;
    let mut terms: Vec<(MultiIndex, f64)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.split_once('#') {
            Some((head, _)) => head,
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let first = fields.next().expect("nonempty line has a field");
        if n.is_none() {
            if first != "n" {
                return Err(Error::Parse(format!(
                    "line {}: expected header 'n <qubits>', got '{line}'",
                    lineno + 1
                )));
            }
            let count: usize = fields
                .next()
                .ok_or_else(|| Error::Parse("header 'n' is missing the qubit count".into()))?
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: invalid qubit count", lineno + 1)))?;
            if fields.next().is_some() {
                return Err(Error::Parse(format!("line {}: trailing fields after header", lineno + 1)));
            }
            n = Some(count);
            continue;
        }
        let qubits = n.expect("header parsed");
        let idx = MultiIndex::parse(first)?;
        if idx.len() != qubits {
            return Err(Error::Parse(format!(
                "line {}: index '{first}' has {} digits, expected {qubits}",
                lineno + 1,
                idx.len()
            )));
        }
        let value: f64 = fields
            .next()
            .ok_or_else(|| Error::Parse(format!("line {}: missing coefficient", lineno + 1)))?
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: invalid coefficient", lineno + 1)))?;
        if fields.next().is_some() {
            return Err(Error::Parse(format!("line {}: trailing fields", lineno + 1)));
        }
        if terms.iter().any(|(existing, _)| existing == &idx) {
            return Err(Error::Parse(format!("line {}: duplicate index '{first}'", lineno + 1)));
        }
        terms.push((idx, value));
    }
    let n = n.ok_or_else(|| Error::Parse("missing 'n <qubits>' header".into()))?;
    PauliDecomposition::from_terms(n, terms)
}

pub fn read_pauli_file<P: AsRef<Path>>(path: P) -> Result<PauliDecomposition> {
    let text = std::fs::read_to_string(path)?;
    from_pauli_str(&text)
}

pub fn write_pauli_file<P: AsRef<Path>>(path: P, d: &PauliDecomposition) -> Result<()> {
    std::fs::write(path, to_pauli_string(d))?;
    Ok(())
}
