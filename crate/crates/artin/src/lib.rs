//! Exact computation in Artin monoids.
//!
//! The crate builds, from a Coxeter graph, the chain of structures needed
//! to work with the associated Artin monoid symbolically and exactly:
//!
//! * [`graph`] — Coxeter graphs, a JSON interchange format, and the
//!   classification of spherical (finite) type;
//! * [`roots`] — positive root systems of small-type graphs as integer
//!   vectors, with depth-indexed lazy enumeration;
//! * [`coxeter`] — the Coxeter group word problem, inversion sets, the
//!   weak order, and longest elements of spherical parabolics;
//! * [`monoid`] — Artin monoid words: braid-closure equality,
//!   left-divisibility, least common multiples, `Δ_T`, and the head map
//!   `L`;
//! * [`laurent`] / [`rep`] — the generalized Lawrence–Krammer
//!   representation on finitely supported vectors over exact bivariate
//!   Laurent polynomials, with its defining `T(s, β)` recursion and the
//!   inverse action;
//! * [`closed`] — closed subsets of positive roots, the word action
//!   `g ∗ A`, and a decoding procedure that is a complete invariant for
//!   monoid equality;
//! * [`fold`] — folding arbitrary graphs into small type with no
//!   triangle, with the generator-multiplying morphism and its
//!   respects-lcm certification.
//!
//! Every computation is exact: integer vectors, arbitrary-precision
//! coefficients, and polynomial identities checked term by term. The
//! `examples/` directory demonstrates each capability; the `artin` binary
//! exposes the same operations for batch use.

pub mod closed;
pub mod coxeter;
pub mod fold;
pub mod graph;
pub mod laurent;
pub mod monoid;
pub mod rep;
pub mod report;
pub mod roots;
pub mod samples;
pub mod util;

pub mod cli;

pub use graph::{CoxeterGraph, Label};
pub use laurent::LaurentPoly;
pub use monoid::MonoidWord;
pub use rep::{RepContext, SparseVector};
pub use roots::{Root, RootSystem};
