use crate::error::{Error, Result};
use crate::gf2::{Codeword, LinearCode};

/// Parse metadata for a code file: the declared dimension and the true rank
/// after canonicalization (they differ when generator rows are dependent).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseInfo {
    pub declared_k: usize,
    pub true_rank: usize,
}

/// Parses the text code format: optional '#' comment lines, a header line
/// "n k", then k rows of exactly n characters from {0,1}.
pub fn parse_code_file(text: &str) -> Result<(LinearCode, ParseInfo)> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing header line \"n k\"".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
    let k: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
    if parts.next().is_some() {
        return Err(Error::Parse(format!("trailing tokens in header {header:?}")));
    }
    if n == 0 || n > super::codeword::MAX_LEN {
        return Err(Error::Parse(format!("length {n} out of range")));
    }
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {k} generator rows")))?;
        if line.len() != n {
            return Err(Error::Parse(format!(
                "row {line:?} has length {}, expected {n}",
                line.len()
            )));
        }
        rows.push(Codeword::from_bits(line)?);
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing non-comment lines after generators".into()));
    }
    let code = LinearCode::from_generators(n, rows)?;
    Ok((
        code.clone(),
        ParseInfo {
            declared_k: k,
            true_rank: code.dim(),
        },
    ))
}

/// Serializes a code in the same format (canonical basis rows).
pub fn format_code_file(code: &LinearCode, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out.push_str(&format!("{} {}\n", code.len(), code.dim()));
    for b in code.basis() {
        out.push_str(&b.to_string());
        out.push('\n');
    }
    out
}
