//! Recognition of closed graphs through proper interval orderings.
//!
//! A graph on `1..=n` is *closed* under its labeling when any two edges
//! sharing their smaller endpoint have adjacent larger endpoints, and any
//! two edges sharing their larger endpoint have adjacent smaller endpoints.
//! Closed graphs are exactly the proper interval graphs, so a LexBFS-based
//! recognizer finds a closed labeling in linear time. The crate also builds
//! the matching interval model and facet decomposition, and carries two
//! exhaustive oracles (all labelings, and the quadratic Gröbner basis test
//! for the binomial edge ideal) for cross-checking at small sizes.

pub mod clique_complex;
pub mod closedness;
pub mod error;
pub mod generate;
pub mod graph;
pub mod groebner;
pub mod interval;
pub mod recognition;

pub use clique_complex::{
    consecutive_ones, facets_of_closed, incidence_matrix, Facet, FacetList, IncidenceMatrix,
};
pub use closedness::{
    brute_force_closed, find_induced_claw, is_closed_labeling, Claw, ClosednessViolation,
    ViolationKind,
};
pub use error::{Error, ParseError, Result};
pub use generate::{generate, GraphKind};
pub use graph::{apply_labeling, parse_edge_list, Graph, LabeledGraph, VertexOrdering};
pub use groebner::{
    edge_binomials, is_quadratic_groebner, reduce, s_polynomial, Binomial, GroebnerVerdict,
    Monomial, TermOrder,
};
pub use interval::{
    build_representation, compute_b, intersection_graph, is_proper, BFunction, IntervalRep,
};
pub use recognition::{
    lexbfs, lexbfs_plus, ordering_to_closed_labeling, recognize_proper_interval, umbrella_check,
    RecognitionResult, UmbrellaViolation,
};
