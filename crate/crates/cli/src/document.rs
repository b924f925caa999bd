//! The on-disk clutter formats: a line-oriented text format and a
//! structured JSON alternative, converting to and from core clutters.

use serde::{Deserialize, Serialize};

use crate::error::CliError;
use clutterkit::Clutter;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClutterDocument {
    #[serde(default)]
    pub name: String,
    /// Empty means "infer from edges in order of first appearance".
    #[serde(default)]
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

fn validate(doc: &mut ClutterDocument, lines: &[usize]) -> Result<(), CliError> {
    for (i, v) in doc.vertices.iter().enumerate() {
        if doc.vertices[..i].contains(v) {
            return Err(CliError::Parse {
                line: 0,
                msg: format!("duplicate vertex label '{v}'"),
            });
        }
    }
    let explicit = !doc.vertices.is_empty();
    for (k, e) in doc.edges.iter().enumerate() {
        let line = lines.get(k).copied().unwrap_or(0);
        if e.is_empty() {
            return Err(CliError::Parse { line, msg: "empty edge".into() });
        }
        for (i, v) in e.iter().enumerate() {
            if e[..i].contains(v) {
                return Err(CliError::Parse {
                    line,
                    msg: format!("repeated vertex '{v}' in edge"),
                });
            }
            if explicit && !doc.vertices.contains(v) {
                return Err(CliError::Parse {
                    line,
                    msg: format!("unknown vertex label '{v}'"),
                });
            }
        }
    }
    if !explicit {
        for e in &doc.edges {
            for v in e {
                if !doc.vertices.contains(v) {
                    doc.vertices.push(v.clone());
                }
            }
        }
    }
    Ok(())
}

pub fn parse_text(input: &str) -> Result<ClutterDocument, CliError> {
    let mut doc = ClutterDocument { name: String::new(), vertices: Vec::new(), edges: Vec::new() };
    let mut edge_lines = Vec::new();
    let mut saw_vertices = false;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        if let Some(rest) = s.strip_prefix("name:") {
            doc.name = rest.trim().to_string();
        } else if let Some(rest) = s.strip_prefix("vertices:") {
            if saw_vertices {
                return Err(CliError::Parse { line, msg: "second 'vertices:' line".into() });
            }
            saw_vertices = true;
            doc.vertices = rest.split_whitespace().map(String::from).collect();
            if doc.vertices.is_empty() {
                return Err(CliError::Parse { line, msg: "empty vertex list".into() });
            }
        } else if let Some(rest) = s.strip_prefix("edge:") {
            doc.edges.push(rest.split_whitespace().map(String::from).collect());
            edge_lines.push(line);
        } else {
            return Err(CliError::Parse {
                line,
                msg: format!("expected 'name:', 'vertices:' or 'edge:', got '{s}'"),
            });
        }
    }
    validate(&mut doc, &edge_lines)?;
    Ok(doc)
}

pub fn serialize_text(doc: &ClutterDocument) -> String {
    let mut out = String::new();
    if !doc.name.is_empty() {
        out.push_str(&format!("name: {}\n", doc.name));
    }
    out.push_str(&format!("vertices: {}\n", doc.vertices.join(" ")));
    for e in &doc.edges {
        out.push_str(&format!("edge: {}\n", e.join(" ")));
    }
    out
}

pub fn parse_data(input: &str) -> Result<ClutterDocument, CliError> {
    let mut doc: ClutterDocument = serde_json::from_str(input)
        .map_err(|e| CliError::Parse { line: e.line(), msg: e.to_string() })?;
    validate(&mut doc, &[])?;
    Ok(doc)
}

pub fn serialize_data(doc: &ClutterDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}

/// Build the core clutter; labels stay on the document side, indexed by
/// vertex position.
pub fn to_clutter(doc: &ClutterDocument) -> Result<Clutter, CliError> {
    let index = |v: &String| doc.vertices.iter().position(|w| w == v).expect("validated label");
    let edges: Vec<Vec<usize>> = doc
        .edges
        .iter()
        .map(|e| e.iter().map(index).collect())
        .collect();
    if doc.vertices.is_empty() {
        return Err(CliError::Parse { line: 0, msg: "document has no vertices".into() });
    }
    Clutter::new(doc.vertices.len(), &edges).map_err(CliError::Core)
}
