//! Executable ordinal combinatorics: two ordinal notation systems built over
//! presented base orders, a finite-window engine for good-pair and
//! Ramsey-style searches on quasi-orders, and a decision procedure for
//! embeddability between countable linear orders given as finite sums of
//! simple atoms.
//!
//! The crate is organized around five term families:
//!
//! * [`base`] — presented base orders and descent schemes;
//! * [`omega`] — exponent-sequence terms over a base order, compared
//!   lexicographically;
//! * [`theta`] — a collapsing-function term system with a total comparison;
//! * [`bqo`] — stabilizing arrays, limit values, and the good-pair and
//!   homogeneous-set searches, including the three-colour extraction;
//! * [`fraisse`] — the order-term algebra with its embeddability decision.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything is safe to use from multiple threads without
//! coordination. Searches scan candidates in a fixed lexicographic order and
//! return least witnesses; fixed seeds make the randomized generators in
//! [`gen`] reproducible.

pub mod base;
pub mod bqo;
pub mod fraisse;
pub mod gen;
pub mod omega;
pub mod text;
pub mod theta;

pub use base::{base_compare, base_descent, BaseError, BaseOrder, DescentScheme, Element};
pub use bqo::{
    cofinite_homogeneous_search, find_stable_root, good_pair_search, three_antichain_good_pair,
    verify_homogeneous, ArrayError, FinSet, QuasiOrder, StabilizingArray,
};
pub use fraisse::{
    all_terms_up_to, embeds, finite_suborder_check, fraisse_pair, Atom, OrderTerm, OrderTermError,
};
pub use omega::{
    omega_compare, omega_descend_lift, omega_enumerate, omega_lift, omega_terms_up_to,
    omega_validate, OmegaError, OmegaTerm,
};
pub use text::{
    parse_base_order, parse_element, parse_omega_term, parse_order_term, parse_theta_term,
    ParseError,
};
pub use theta::{
    theta_coefficients, theta_compare, theta_descend_search, theta_lift, theta_terms_up_to,
    theta_validate, CoefficientSet, ThetaError, ThetaTerm,
};
