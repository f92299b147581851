//! Cut lattices, cut cones and normality of the cut semigroup of a graph.
//!
//! The cut vectors of a graph `G`, homogenised with a trailing 1, generate
//! a semigroup. This crate answers membership questions for the lattice,
//! the cone and the semigroup they span, searches for holes (lattice and
//! cone points outside the semigroup), classifies graphs by sufficient
//! conditions for normality, and implements the constructive lifts behind
//! closure under edge deletion and small clique sums.

pub mod budget;
pub mod cli;
pub mod cutlattice;
pub mod graph;
pub mod lifting;
pub mod lp;
pub mod minors;
pub mod named;
pub mod normality;
mod scan;

pub use budget::{Budget, BudgetExceeded};
pub use cutlattice::{
    cut_generators, cut_vector, facet_inequalities, in_cone, in_lattice, ConeOracle, CutBasis,
    CutVector, FacetSystem, HomPoint, LatticeOracle,
};
pub use graph::{clique_sum, CliqueSumSpec, Graph, GraphError, VertexSet};
pub use lifting::{gamma_bounds, lift_deletion, merge_clique_sum, GammaBounds, SharedPattern};
pub use minors::{find_minor, minor_profile, MinorProfile, MinorWitness};
pub use named::{make_named, parse_named, Named};
pub use normality::{
    classify_normality, decompose, find_hole, hilbert_check, verify_normality, HilbertVerdict,
    Hole, NormalityVerdict, Status, VerifyMode,
};
