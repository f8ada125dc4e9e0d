//! Exact-arithmetic toolkit for the minimal free resolution of a cointerval
//! edge ideal quotient.
//!
//! Given intervals on the line, the complement of their intersection graph is
//! a cointerval graph `G`. The quotient of the polynomial ring by the edge
//! ideal of `G` has an explicit minimal free multigraded resolution whose
//! basis symbols are the cells `[sigma|tau]`. This crate builds that
//! resolution, the closed-form contracting homotopy coming from an acyclic
//! matching on the based complex, and the induced associative, graded-
//! commutative product, together with exhaustive verification oracles
//! (exactness via exact integer rank, an independent subset-complex Betti
//! oracle, the homotopy identities, and the full product axiom suite) that
//! run over all small graphs.
//!
//! Everything is computed over the integers; rank computations are
//! fraction-free. No floating point anywhere.

pub mod basis;
pub mod chain;
pub mod error;
pub mod graph;
pub mod homotopy;
pub mod linalg;
pub mod monomial;
pub mod oracles;
pub mod product;
pub mod resolution;

pub use basis::BasisElement;
pub use chain::{Chain, Term};
pub use error::Error;
pub use graph::{recognize_cointerval, CointervalGraph, IntervalRep, RECOGNITION_BOUND};
pub use homotopy::{
    classify_vertex, contracting_homotopy, homotopy_sets, prec_compare, prec_minimal_edge,
    strand_morse_acyclicity, HomotopySets, MatchClass, Rule, Vertex,
};
pub use monomial::Monomial;
pub use oracles::{
    enumerate_test_graphs, taylor_betti_oracle, verify_betti, verify_d_squared, verify_dga,
    verify_exactness, verify_family, verify_homotopy, CheckResult, VerificationReport,
};
pub use product::{
    degree1_product_closed_form, multiplication_table, star, star_chains, Multiplier,
    ProductTable,
};
pub use resolution::{
    all_bases, augmentation, betti_table, differential, differential_chain, enumerate_basis,
    is_minimal, partial_boundary, partial_boundary_chain, render_basis_table, strand_complex,
    BettiTable, ResolutionExport, SignConvention, StrandComplex,
};
