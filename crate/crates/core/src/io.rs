//! JSON code files: `{"ambient_dim": l, "lines": [[a, b, c, multiplicity], ...]}`.
//!
//! Triples must already be canonical (`a < b < c`, `c = a XOR b`). Writing
//! is deterministic: lines in canonical order, one per text line.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Deserialize;

use crate::code::AdditiveLineCode;
use crate::error::{Error, Result};
use crate::geometry::{Line, MAX_DIM};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CodeFile {
    ambient_dim: u32,
    lines: Vec<[u64; 4]>,
}

pub fn code_to_json(code: &AdditiveLineCode) -> String {
    let mut out = format!("{{\n  \"ambient_dim\": {},\n  \"lines\": [\n", code.dim());
    let last = code.lines().len() - 1;
    for (i, (line, m)) in code.lines().iter().enumerate() {
        let [a, b, c] = line.masks();
        write!(out, "    [{a}, {b}, {c}, {m}]").unwrap();
        out.push_str(if i == last { "\n" } else { ",\n" });
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn code_from_json(text: &str) -> Result<AdditiveLineCode> {
    let file: CodeFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let l = file.ambient_dim;
    if !(2..=MAX_DIM).contains(&l) {
        return Err(Error::Format(format!(
            "ambient_dim: {l} is outside 2..={MAX_DIM}"
        )));
    }
    let mut lines = Vec::with_capacity(file.lines.len());
    for (i, &[a, b, c, m]) in file.lines.iter().enumerate() {
        let field = |msg: String| Error::Format(format!("lines[{i}]: {msg}"));
        let narrow = |x: u64| u32::try_from(x).map_err(|_| field(format!("{x} is too large")));
        let (a, b, c, m) = (narrow(a)?, narrow(b)?, narrow(c)?, narrow(m)?);
        let line = Line::from_triple(a, b, c).map_err(|e| field(e.to_string()))?;
        if line.min_dim() > l {
            return Err(field(format!("point {c} lies outside PG({}, 2)", l - 1)));
        }
        if m == 0 {
            return Err(field("multiplicity must be positive".into()));
        }
        lines.push((line, m));
    }
    AdditiveLineCode::new(l, lines).map_err(|e| Error::Format(e.to_string()))
}

pub fn save_code(code: &AdditiveLineCode, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, code_to_json(code))
        .map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

pub fn load_code(path: impl AsRef<Path>) -> Result<AdditiveLineCode> {
    let path = path.as_ref();
    let text =
        fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    code_from_json(&text).map_err(|e| match e {
        Error::Format(msg) => Error::Format(format!("{}: {msg}", path.display())),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::three_cover_code;

    #[test]
    fn round_trip_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("code.json");
        let code = three_cover_code(5).unwrap();
        save_code(&code, &path).unwrap();
        assert_eq!(load_code(&path).unwrap(), code);
    }

    #[test]
    fn format_is_stable() {
        let code = AdditiveLineCode::new(
            3,
            [
                (Line::from_triple(1, 2, 3).unwrap(), 2),
                (Line::from_triple(1, 4, 5).unwrap(), 1),
            ],
        )
        .unwrap();
        assert_eq!(
            code_to_json(&code),
            "{\n  \"ambient_dim\": 3,\n  \"lines\": [\n    [1, 2, 3, 2],\n    [1, 4, 5, 1]\n  ]\n}\n"
        );
    }

    fn err(text: &str) -> String {
        match code_from_json(text) {
            Err(Error::Format(m)) => m,
            other => panic!("expected format error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_files() {
        assert!(err(r#"{"ambient_dim": 3, "lines": [[1, 2, 4, 1]]}"#).starts_with("lines[0]"));
        assert!(
            err(r#"{"ambient_dim": 3, "lines": [[1, 2, 3, 1], [1, 4, 5, 0]]}"#)
                .contains("lines[1]: multiplicity")
        );
        assert!(err(r#"{"ambient_dim": 3, "lines": [[1, 8, 9, 1]]}"#).contains("outside"));
        assert!(err(r#"{"ambient_dim": 3, "lines": []}"#).contains("at least one"));
        assert!(err(r#"{"ambient_dim": 1, "lines": [[1, 2, 3, 1]]}"#).starts_with("ambient_dim"));
        assert!(err(r#"{"ambient_dim": 3, "lines": [[1, 2, 3]]}"#).contains("line 1"));
        assert!(
            err("{\"ambient_dim\": 3,\n \"lines\": [[1, 2, 3, 1]], \"x\": 1}").contains("line 2")
        );
    }
}
