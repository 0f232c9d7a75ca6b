//! JSON matrix files: `{"dim": n, "data": [[re, im], ...], "meta": {...}}`,
//! row-major.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use ybgate_core::{Complex64, Matrix};

use crate::error::CliError;

/// Serialized form of a [`Matrix`] plus string metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub dim: usize,
    pub data: Vec<[f64; 2]>,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &Matrix, meta: BTreeMap<String, String>) -> Self {
        MatrixDocument {
            dim: m.dim(),
            data: m.entries().iter().map(|z| [z.re, z.im]).collect(),
            meta,
        }
    }

    /// Validates shape and finiteness.
    pub fn to_matrix(&self) -> Result<Matrix, CliError> {
        let entries: Vec<Complex64> = self
            .data
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        Ok(Matrix::from_entries(self.dim, &entries)?)
    }

    /// Pretty JSON with one `[re, im]` pair per line.
    pub fn to_json(&self) -> String {
        let mut s = format!("{{\n  \"dim\": {},\n  \"data\": [", self.dim);
        for (k, pair) in self.data.iter().enumerate() {
            let sep = if k == 0 { "\n" } else { ",\n" };
            s.push_str(&format!(
                "{sep}    [{}, {}]",
                json(&pair[0]),
                json(&pair[1])
            ));
        }
        s.push_str(if self.data.is_empty() {
            "],\n  \"meta\": {"
        } else {
            "\n  ],\n  \"meta\": {"
        });
        for (k, (key, value)) in self.meta.iter().enumerate() {
            let sep = if k == 0 { "\n" } else { ",\n" };
            s.push_str(&format!("{sep}    {}: {}", json(key), json(value)));
        }
        s.push_str(if self.meta.is_empty() {
            "}\n}\n"
        } else {
            "\n  }\n}\n"
        });
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("plain value serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use ybgate_core::eightvertex::{build_b_phi, Sign};

    #[test]
    fn round_trip_is_bit_exact() {
        let m = build_b_phi(Sign::Plus, 0.123456789);
        let doc = MatrixDocument::from_matrix(&m, BTreeMap::new());
        let back = MatrixDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        let m2 = back.to_matrix().unwrap();
        for (a, b) in m.entries().iter().zip(m2.entries()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }

    #[test]
    fn awkward_floats_survive() {
        let vals = [
            -0.0,
            5e-324,
            f64::MAX,
            -f64::MIN_POSITIVE,
            0.1 + 0.2,
            1.0 / 3.0,
            1e22,
            123456789.0,
        ];
        let entries: Vec<Complex64> = vals.iter().map(|&v| Complex64::new(v, -v)).collect();
        let doc = MatrixDocument {
            dim: 2,
            data: entries[..4].iter().map(|z| [z.re, z.im]).collect(),
            meta: BTreeMap::from([("note".to_owned(), "quote \" and \\".to_owned())]),
        };
        let back = MatrixDocument::from_json(&doc.to_json()).unwrap();
        for (a, b) in doc.data.iter().zip(&back.data) {
            assert_eq!(a[0].to_bits(), b[0].to_bits());
            assert_eq!(a[1].to_bits(), b[1].to_bits());
        }
        assert_eq!(back.meta, doc.meta);
        let doc = MatrixDocument {
            dim: 2,
            data: entries[4..].iter().map(|z| [z.re, z.im]).collect(),
            meta: BTreeMap::new(),
        };
        assert_eq!(MatrixDocument::from_json(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn rejects_bad_shapes() {
        let short = r#"{"dim": 4, "data": [[1.0, 0.0]], "meta": {}}"#;
        assert!(MatrixDocument::from_json(short)
            .unwrap()
            .to_matrix()
            .is_err());
        let odd = r#"{"dim": 3, "data": [], "meta": {}}"#;
        assert!(MatrixDocument::from_json(odd).unwrap().to_matrix().is_err());
        assert!(MatrixDocument::from_json("{\"dim\": 2").is_err());
        assert!(MatrixDocument::from_json(r#"{"dim": 2, "data": [[1.0]]}"#).is_err());
    }
}
