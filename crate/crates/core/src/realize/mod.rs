//! Geometry for the colorings that survive pruning: solved parametric
//! families, refutations of the impossible ones, and a stochastic maximizer
//! of hull area on the sphere.

mod classes;
mod optimize;
mod poly;
mod theorem;

pub use classes::{
    class10_equation, class10_points, class12_equation, class14i_points, class14iii_equation,
    class14iii_labelled, class14iii_points, class8_points, class8_residual, realize_bipyramid,
    realize_class10, realize_class14i, realize_class14iii, refute_class12, refute_class14ii,
    refute_class8, refute_snub_disphenoid, snub_cubic, Class12Refutation, Class14iiRefutation,
    Class8Refutation, ClassRealization, SnubRefutation,
};
pub use optimize::{
    objective, optimize_sphere, probe_fixed_structure, OptimizeResult, OptimizerConfig,
    StructureProbe,
};
pub use poly::{find_root, Polynomial};
pub use theorem::{verify_theorem, Candidate, CandidateStatus, ClassOutcome, TheoremReport};

use crate::geom::GeomError;

#[derive(Debug, thiserror::Error)]
pub enum RealizeError {
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("root iteration stalled at {value} with residual {residual}")]
    NoConvergence { value: f64, residual: f64 },
    #[error("invalid optimizer config: {0}")]
    InvalidConfig(String),
    #[error("{0} is not a bipyramid graph")]
    NotABipyramid(String),
    #[error("verification supports k = 7 or 8, got {0}")]
    UnsupportedK(usize),
    #[error("no realized candidate for k = {0}")]
    NoCandidate(usize),
    #[error(transparent)]
    Geom(#[from] GeomError),
}
