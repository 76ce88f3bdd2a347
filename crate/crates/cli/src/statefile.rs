//! The DM4 state-file format: a literal `DM4` header line followed by 16
//! whitespace-separated complex entries in row-major order, each written as
//! two decimal numbers `re im`. Lines starting with `#` are comments.

use std::io::{self, Write};
use std::path::Path;

use qbell_core::{Complex64, ComplexMatrix4, DensityMatrix};

/// What went wrong while reading a DM4 document (before validation).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("missing DM4 header line")]
    MissingHeader,
    #[error("first line must be the literal token DM4, found {0:?}")]
    BadHeader(String),
    #[error("entry {index}: {token:?} is not a decimal number")]
    BadNumber { index: usize, token: String },
    #[error("expected 32 numbers (16 complex entries), found {0}")]
    WrongCount(usize),
}

/// Parse the raw matrix out of a DM4 document. Validation is a separate
/// step so callers can distinguish parse errors from physics errors.
pub fn parse_dm4(text: &str) -> Result<ComplexMatrix4, ParseError> {
    let mut lines = text
        .lines()
        .filter(|line| !line.trim_start().starts_with('#'))
        .filter(|line| !line.trim().is_empty());

    let header = lines.next().ok_or(ParseError::MissingHeader)?;
    if header.trim() != "DM4" {
        return Err(ParseError::BadHeader(header.trim().to_string()));
    }

    let mut numbers = Vec::with_capacity(32);
    for line in lines {
        for token in line.split_whitespace() {
            let value: f64 = token.parse().map_err(|_| ParseError::BadNumber {
                index: numbers.len(),
                token: token.to_string(),
            })?;
            numbers.push(value);
        }
    }
    if numbers.len() != 32 {
        return Err(ParseError::WrongCount(numbers.len()));
    }

    Ok(ComplexMatrix4::from_fn(|i, j| {
        let k = 2 * (i * 4 + j);
        Complex64::new(numbers[k], numbers[k + 1])
    }))
}

/// Read and parse a DM4 file; I/O errors are reported separately from
/// syntax errors.
pub fn read_dm4(path: &Path) -> io::Result<Result<ComplexMatrix4, ParseError>> {
    Ok(parse_dm4(&std::fs::read_to_string(path)?))
}

/// Serialise a state as DM4 with full round-trip precision, one matrix row
/// per line.
pub fn write_dm4<W: Write>(w: &mut W, rho: &DensityMatrix) -> io::Result<()> {
    writeln!(w, "DM4")?;
    writeln!(w, "# 4x4 density matrix, row-major, entries as `re im` pairs")?;
    for i in 0..4 {
        let row: Vec<String> = (0..4)
            .map(|j| {
                let z = rho.matrix()[(i, j)];
                format!("{:.16e} {:.16e}", z.re, z.im)
            })
            .collect();
        writeln!(w, "{}", row.join("  "))?;
    }
    Ok(())
}
