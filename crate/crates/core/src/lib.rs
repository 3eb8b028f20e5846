//! Surface-area maximization for polytopes with congruent triangular facets
//! inscribed in the unit sphere.
//!
//! * [`geom`]: hulls, areas, facet shapes, closed forms.
//! * [`combinat`]: simplicial polytope graphs, isosceles edge colorings and
//!   the pruning rules that discard impossible colorings.
//! * [`realize`]: parametric realizations of the surviving classes, root
//!   finding, and a seeded stochastic maximizer on the sphere.

pub mod combinat;
pub mod geom;
pub mod realize;

pub use combinat::CombinatError;
pub use geom::GeomError;
pub use realize::RealizeError;
