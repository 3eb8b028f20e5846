//! Combinatorial types of simplicial polytopes, their isosceles edge
//! colorings, and the rules that discard colorings no inscribed polytope
//! with congruent facets can have.

mod automorphism;
mod catalog;
mod coloring;
mod graph;
mod rules;

pub use automorphism::{automorphisms, orbit_representatives, permute_coloring};
pub use catalog::{builtin_catalog, load_catalog, load_catalog_file, BuiltinCatalog, CatalogEntry};
pub use coloring::{
    enumerate_colorings, find_colored_two_paths, two_path_census, Color, EdgeColoring,
    TwoPathCensus,
};
pub use graph::PolytopeGraph;
pub use rules::{
    check_defect_a, check_defect_b, check_defect_c, check_property_l, classify_coloring,
    deduce_antipodal_pairs, prune, verify_witness, EliminationVerdict, Rule,
};

#[derive(Debug, thiserror::Error)]
pub enum CombinatError {
    #[error("malformed catalog at line {line}, column {column}: {message}")]
    MalformedCatalog { line: usize, column: usize, message: String },
    #[error("catalog entry {label}: {message}")]
    InvariantViolation { label: String, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
