//! Formal Drinfeld-module machinery over F_q[T] (rank 2 concrete,
//! general rank symbolic): coefficient recursions, Goss polynomials,
//! reciprocal polynomials, the level parameter relation, and the
//! two-route discriminant expansion.

pub mod carlitz;
pub mod goss;
pub mod relations;
pub mod routes;
pub mod spoly;

pub use carlitz::{carlitz_action, carlitz_d, carlitz_exp_coeffs, lattice_eisenstein_values, FF};
pub use goss::{gamma, gamma_symbolic, goss_polys, GossPolyTable};
pub use relations::{
    exp_to_module_elem, exp_to_special_eisenstein, module_to_exp_elem,
    special_eisenstein_to_exp, symbolic_exp_coeffs,
};
pub use routes::{
    compare_routes, delta_product_series, delta_via_eisenstein_series,
    eisenstein_series, t_level_relation, Route, RouteVerdict, TExpansion,
};
pub use spoly::{s_poly, s_poly_level, symbolic_s_poly, SymbolicSPoly};

// The Bezout-exponent certificate lives with the order bookkeeping.
pub use crate::boundary::orders::canonical_delta_exponents;
