use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CombinatError, PolytopeGraph};

/// One record of a catalog document. Vertex indices are 0-based.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub class_label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub k: usize,
    pub edges: Vec<[usize; 2]>,
    pub facets: Vec<[usize; 3]>,
    pub expected_degree_sequence: Vec<usize>,
}

impl CatalogEntry {
    pub fn into_graph(self) -> Result<PolytopeGraph, CombinatError> {
        let edges = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = PolytopeGraph::new(self.class_label.clone(), self.k, edges, self.facets)?;
        let degrees = g.degree_sequence();
        if degrees != self.expected_degree_sequence {
            return Err(CombinatError::InvariantViolation {
                label: self.class_label,
                message: format!(
                    "degree sequence {degrees:?} does not match checksum {:?}",
                    self.expected_degree_sequence
                ),
            });
        }
        Ok(g.with_name(self.name))
    }
}

/// Parses and validates a catalog document (a JSON array of entries).
pub fn load_catalog(source: &str) -> Result<Vec<PolytopeGraph>, CombinatError> {
    let entries: Vec<CatalogEntry> =
        serde_json::from_str(source).map_err(|e| CombinatError::MalformedCatalog {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
    if entries.is_empty() {
        return Err(CombinatError::MalformedCatalog {
            line: 1,
            column: 1,
            message: "catalog has no entries".into(),
        });
    }
    entries.into_iter().map(CatalogEntry::into_graph).collect()
}

pub fn load_catalog_file(path: impl AsRef<Path>) -> Result<Vec<PolytopeGraph>, CombinatError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CombinatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_catalog(&text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinCatalog {
    /// Tetrahedron, triangular bipyramid, and the two simplicial types with 6 vertices.
    Warmup,
    K7,
    K8,
}

impl BuiltinCatalog {
    pub fn source(self) -> &'static str {
        match self {
            BuiltinCatalog::Warmup => include_str!("../../catalogs/warmup.catalog"),
            BuiltinCatalog::K7 => include_str!("../../catalogs/k7.catalog"),
            BuiltinCatalog::K8 => include_str!("../../catalogs/k8.catalog"),
        }
    }

    pub fn file_name(self) -> &'static str {
        match self {
            BuiltinCatalog::Warmup => "warmup.catalog",
            BuiltinCatalog::K7 => "k7.catalog",
            BuiltinCatalog::K8 => "k8.catalog",
        }
    }
}

pub fn builtin_catalog(which: BuiltinCatalog) -> Vec<PolytopeGraph> {
    load_catalog(which.source()).expect("shipped catalogs are valid")
}
