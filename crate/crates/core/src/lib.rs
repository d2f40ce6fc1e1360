//! Exact-arithmetic toolkit for periodic gradings of simple Lie algebras.
//!
//! A finite-order automorphism `θ` of a simple Lie algebra `g` induces a
//! grading `g = ⊕_{i∈Z_m} g_i` by `ζ^i`-eigenspaces. Conjugacy classes of
//! such automorphisms are encoded by nonnegative integer labels on the
//! (twisted) affine Dynkin diagram — Kac coordinates. This crate classifies
//! those labels and computes the numerical invariants attached to each
//! class: graded dimensions, the `k_i`/`l_i` counting sequences, the
//! N-regular / S-regular / locally-free flags, the degrees of the basic
//! invariants of the θ-group, and the exponents and coexponents of the
//! little Weyl group.
//!
//! Two independent brute-force oracles back every combinatorial formula:
//!
//! * [`chevalley`] — an explicit Lie algebra model with integer structure
//!   constants and automorphism matrices over cyclotomic fields, giving
//!   eigenspaces, centralizers, sl2-triples and section bases exactly;
//! * [`weyl`] — finite Weyl groups enumerated as integer matrix groups,
//!   used to verify the regular-element eigenspace theory exhaustively at
//!   small rank.
//!
//! No floating point is used anywhere: scalars are rationals or elements
//! of `Q(ζ_m)` represented modulo the cyclotomic polynomial.

pub mod cyclotomic;
pub mod error;
pub mod kacdiag;
pub mod linalg;
pub mod numerology;
pub(crate) mod par;
pub mod profile;
pub mod rootsys;
pub mod suites;
pub mod weyl;

pub mod chevalley;

pub use error::{Error, Result};
