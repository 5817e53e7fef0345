//! Exact face numbers of cyclic polytopes.
//!
//! The h-vector of `C(v,d)` is known in closed form, and the f-vector follows
//! from it either by the binomial transform or by a Pascal-type triangle whose
//! diagonal is seeded with the h-vector. This crate computes both routes with
//! arbitrary-precision integers, checks the results against an independent
//! face count based on Gale's evenness condition, and analyzes the shape of
//! the resulting sequences (dips, log-concavity, unimodality).
//!
//! ```
//! use cyclic_faces::{build_triangle, f_vector_direct, PolytopeParams};
//!
//! let params = PolytopeParams::new(6, 4).unwrap();
//! let direct = f_vector_direct(params);
//! assert_eq!(direct.to_string(), "1 6 15 18 9 1");
//! assert_eq!(build_triangle(params).f_vector(), direct);
//! ```

pub mod cyclic;
pub mod error;
pub mod exactcomb;
pub mod oracle;
pub mod shape;
pub mod sweep;

pub use cyclic::{
    build_triangle, f_entry_direct, f_vector_direct, f_vector_from_triangle, f_vector_streaming,
    h_vector, triangle_entry_direct, ExtendedFSequence, FanTriangle, HVector, PolytopeParams,
};
pub use error::{Error, Result};
pub use exactcomb::{binom, pascal_row, Count};
pub use oracle::{
    enumerate_facets, is_gale_facet, oracle_f_vector, FacetList, VertexSet, DEFAULT_ORACLE_CAP,
};
pub use shape::{
    analyze_shape, audit_dip_propagation, find_dips, is_log_concave, is_unimodal, lemma_check,
    pascal_extend, DipAudit, PositiveSequence, ShapeReport, Unimodality,
};
