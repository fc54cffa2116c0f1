//! Complex files: a JSON format carrying optional exact coordinates, and a plain facet list.
//!
//! JSON:
//! `{"name": str, "dim": int, "vertices": [{"id": str, "coords": ["p/q", …] | null}], "facets": [[id, …]]}`
//!
//! Text: one facet per line, whitespace-separated labels; `#` starts a comment.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::scalar::{format_rational, parse_rational};
use crate::simplicial::{label_cmp, Complex, ComplexError, Face};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

fn field(field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Field { field: field.into(), message: message.into() }
}

/// A vertex id may be written as a string or an integer.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
enum Id {
    Str(String),
    Int(i64),
}

impl Id {
    fn label(&self) -> String {
        match self {
            Id::Str(s) => s.clone(),
            Id::Int(i) => i.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct VertexEntry {
    id: Id,
    #[serde(default)]
    coords: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct ComplexFile {
    name: String,
    dim: isize,
    vertices: Vec<VertexEntry>,
    facets: Vec<Vec<Id>>,
}

pub fn parse_json(text: &str) -> Result<Complex, ParseError> {
    let file: ComplexFile = serde_json::from_str(text)?;
    let labels: Vec<String> = file.vertices.iter().map(|v| v.id.label()).collect();
    let position: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    if position.len() != labels.len() {
        let mut seen = std::collections::HashSet::new();
        let dup = labels.iter().find(|l| !seen.insert(l.as_str())).expect("a duplicate exists");
        return Err(field("vertices", format!("duplicate vertex id `{dup}`")));
    }
    let mut facets = Vec::with_capacity(file.facets.len());
    for (i, f) in file.facets.iter().enumerate() {
        let mut raw = Vec::with_capacity(f.len());
        for id in f {
            let l = id.label();
            let v = position
                .get(l.as_str())
                .ok_or_else(|| field(format!("facets[{i}]"), format!("unknown vertex `{l}`")))?;
            raw.push(*v);
        }
        facets.push(raw);
    }
    let mut complex = Complex::new(file.name.clone(), labels.clone(), facets)?;
    if complex.dim() != file.dim {
        return Err(field("dim", format!("declared {} but the facets have dimension {}", file.dim, complex.dim())));
    }
    let given = file.vertices.iter().filter(|v| v.coords.is_some()).count();
    if given > 0 {
        if given != file.vertices.len() {
            let missing = file.vertices.iter().find(|v| v.coords.is_none()).expect("some are missing");
            return Err(field(
                format!("vertices[{}].coords", missing.id.label()),
                "mixed coordinates: either every vertex has coordinates or none does",
            ));
        }
        let mut coords: Vec<Vec<BigRational>> = Vec::with_capacity(given);
        for v in &file.vertices {
            let raw = v.coords.as_ref().expect("checked above");
            let parsed = raw
                .iter()
                .enumerate()
                .map(|(j, s)| {
                    parse_rational(s).map_err(|e| field(format!("vertices[{}].coords[{j}]", v.id.label()), format!("{e}: `{s}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            coords.push(parsed);
        }
        complex = complex.with_coords(coords)?;
    }
    Ok(complex)
}

fn to_file(c: &Complex) -> ComplexFile {
    let vertices = (0..c.universe_len())
        .map(|v| VertexEntry {
            id: Id::Str(c.label(v).to_string()),
            coords: c.coords().map(|cs| cs[v].iter().map(format_rational).collect()),
        })
        .collect();
    let facets = c
        .facets()
        .iter()
        .map(|f| f.vertices().iter().map(|&v| Id::Str(c.label(v).to_string())).collect())
        .collect();
    ComplexFile { name: c.name().to_string(), dim: c.dim(), vertices, facets }
}

/// Pretty JSON in canonical order (universe order for vertices, sorted facets).
pub fn to_json(c: &Complex) -> String {
    serde_json::to_string_pretty(&to_file(c)).expect("complex files always serialize")
}

/// Compact canonical JSON, the input of [`content_hash`].
pub fn to_canonical_json(c: &Complex) -> String {
    serde_json::to_string(&to_file(c)).expect("complex files always serialize")
}

/// Hex SHA-256 of the canonical JSON.
pub fn content_hash(c: &Complex) -> String {
    hex::encode(Sha256::digest(to_canonical_json(c).as_bytes()))
}

pub fn parse_text(name: &str, text: &str) -> Result<Complex, ParseError> {
    let mut labels: Vec<String> = Vec::new();
    let mut facets: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut raw = Vec::new();
        for tok in content.split_whitespace() {
            let v = match labels.iter().position(|l| l == tok) {
                Some(v) => v,
                None => {
                    labels.push(tok.to_string());
                    labels.len() - 1
                }
            };
            if raw.contains(&v) {
                return Err(ParseError::Line { line: line_no, message: format!("vertex `{tok}` repeated") });
            }
            raw.push(v);
        }
        facets.push((line_no, raw));
    }
    let face_names = |f: &Face| {
        format!("{{{}}}", f.vertices().iter().map(|&v| labels[v].as_str()).collect::<Vec<_>>().join(","))
    };
    let faces: Vec<(usize, Face)> = facets.iter().map(|(l, r)| (*l, Face::new(r.clone()))).collect();
    for (i, (la, a)) in faces.iter().enumerate() {
        for (lb, b) in &faces[..i] {
            if a == b {
                return Err(ParseError::Line {
                    line: *la,
                    message: format!("duplicate facet {} (first on line {lb})", face_names(a)),
                });
            }
            if a.is_subset(b) || b.is_subset(a) {
                let (small, big, lbig) = if a.is_subset(b) { (a, b, lb) } else { (b, a, la) };
                return Err(ParseError::Line {
                    line: *la,
                    message: format!(
                        "facet {} is contained in facet {} (line {lbig})",
                        face_names(small),
                        face_names(big)
                    ),
                });
            }
        }
    }
    // canonical universe: natural label order, independent of facet order
    let mut order: Vec<usize> = (0..labels.len()).collect();
    order.sort_by(|&a, &b| label_cmp(&labels[a], &labels[b]));
    let mut rank = vec![0; labels.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let sorted: Vec<String> = order.iter().map(|&v| labels[v].clone()).collect();
    let facets = facets.into_iter().map(|(_, r)| r.into_iter().map(|v| rank[v]).collect()).collect();
    Ok(Complex::new(name, sorted, facets)?)
}

pub fn to_text(c: &Complex) -> String {
    let mut out = String::new();
    for f in c.facets() {
        let names: Vec<&str> = f.vertices().iter().map(|&v| c.label(v)).collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}

/// Parses either format: JSON when the first non-blank character is `{`.
pub fn parse_complex(name: &str, text: &str) -> Result<Complex, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(name, text)
    }
}

pub fn load_complex(path: &Path) -> Result<Complex, ParseError> {
    let text = fs::read_to_string(path)
        .map_err(|source| ParseError::Io { path: path.display().to_string(), source })?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("complex");
    parse_complex(stem, &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TETRA: &str = "1 2 3\n1 2 4\n1 3 4\n2 3 4\n";

    #[test]
    fn text_round_trip() {
        let c = parse_text("tetra", TETRA).unwrap();
        assert_eq!(c.facets().len(), 4);
        assert_eq!(parse_text("tetra", &to_text(&c)).unwrap(), c);
    }

    #[test]
    fn text_errors_name_lines() {
        let err = parse_text("x", "1 2 3\n# comment\n1 2\n").unwrap_err().to_string();
        assert!(err.contains("line 3") && err.contains("contained"), "{err}");
        let err = parse_text("x", "1 2\n2 1\n").unwrap_err().to_string();
        assert!(err.contains("line 2") && err.contains("duplicate"), "{err}");
    }

    #[test]
    fn json_with_rational_coordinates() {
        let text = r#"{"name": "seg", "dim": 1,
            "vertices": [{"id": "a", "coords": ["1/2", "0"]}, {"id": "b", "coords": ["0", "-3/4"]}],
            "facets": [["a", "b"]]}"#;
        let c = parse_json(text).unwrap();
        let coords = c.coords().unwrap();
        assert_eq!(format_rational(&coords[0][0]), "1/2");
        assert_eq!(format_rational(&coords[1][1]), "-3/4");
        assert_eq!(parse_json(&to_json(&c)).unwrap(), c);
    }

    #[test]
    fn json_errors_are_named() {
        let bad = |s: &str| parse_json(s).unwrap_err().to_string();
        let e = bad(r#"{"name":"x","dim":1,"vertices":[{"id":"a","coords":["1/0"]},{"id":"b","coords":["1"]}],"facets":[["a","b"]]}"#);
        assert!(e.contains("vertices[a].coords[0]") && e.contains("zero denominator"), "{e}");
        let e = bad(r#"{"name":"x","dim":1,"vertices":[{"id":"a","coords":["1"]},{"id":"b","coords":["1","2"]}],"facets":[["a","b"]]}"#);
        assert!(e.contains("ragged"), "{e}");
        let e = bad(r#"{"name":"x","dim":1,"vertices":[{"id":"a","coords":["1"]},{"id":"b","coords":null}],"facets":[["a","b"]]}"#);
        assert!(e.contains("mixed"), "{e}");
        let e = bad(r#"{"name":"x","dim":2,"vertices":[{"id":"a"},{"id":"b"}],"facets":[["a","b"]]}"#);
        assert!(e.contains("dim"), "{e}");
        let e = bad(r#"{"name":"x","dim":1,"vertices":[{"id":"a"}],"facets":[["a","z"]]}"#);
        assert!(e.contains("unknown vertex `z`"), "{e}");
        let e = bad(r#"{"name":"x","dim":1,"vertices":[{"id":"a","coords":["x"]},{"id":"b","coords":["1"]}],"facets":[["a","b"]]}"#);
        assert!(e.contains("bad rational"), "{e}");
    }

    #[test]
    fn integer_ids_are_accepted() {
        let c = parse_json(r#"{"name":"e","dim":1,"vertices":[{"id":1},{"id":2}],"facets":[[1,2]]}"#).unwrap();
        assert_eq!(c.label(0), "1");
    }

    #[test]
    fn hash_is_stable_under_reserialization() {
        let c = parse_text("tetra", TETRA).unwrap();
        let again = parse_json(&to_json(&c)).unwrap();
        assert_eq!(content_hash(&c), content_hash(&again));
        assert_eq!(content_hash(&c).len(), 64);
    }
}
