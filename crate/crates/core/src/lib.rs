//! Exact computation of the co-adjoint graph polynomial and its matching,
//! chromatic and adjoint siblings.
//!
//! All four satisfy `f(G) = f(G - e) - f(G ∘ e)` with `f` of the edgeless
//! graph on `n` vertices equal to `x^n`; they differ only in how the merged
//! vertex of `G ∘ e` is attached (see [`MergeRule`]). The co-adjoint
//! polynomial is also `2^{-n} Z_G(2x, -2)` and
//! `(-1)^{n-k} x^k T(G; 1 - x, -1)`, and the crate computes those routes
//! independently so they can be compared.

pub mod analysis;
pub mod canon;
pub mod checks;
pub mod cli;
pub mod error;
pub mod family;
pub mod graph;
pub mod oracles;
pub mod poly;
pub mod series;
pub mod tutte;

pub use canon::{CanonKey, MultiKey};
pub use error::{Error, Result};
pub use family::{b_of, exp_type_check, f_b_construct, family_poly, BFunction, FamilyEngine, FamilyKind};
pub use graph::{
    build_named, canonical_key, components_of_subset, emit_graph6, enumerate_labeled_graphs, parse_graph6, Edge,
    MergeRule, MultiGraph, NamedGraph, SimpleGraph,
};
pub use poly::{BiPoly, IntPoly, RatPoly};
pub use tutte::{specialize_chromatic, specialize_coadjoint, tutte_dc, tutte_subset, TuttePoly};
