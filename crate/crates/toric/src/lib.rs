//! Exact lattice-polyhedral analysis of affine monoid algebras.
//!
//! An affine monoid `M ⊆ Z^n` determines the monomial algebra `k[M]`.  This
//! crate decides, with arbitrary-precision integer arithmetic throughout,
//! whether `k[M]` is normal and whether it satisfies Serre's condition (R1),
//! computes the Hilbert basis of the saturation `M̄ = ZM ∩ R≥0M`, the interior
//! ideals `W_R` and `W̄_R` spanned by monomials with exponents in the relative
//! interior of the cone, and the structural cross-checks relating them
//! (facet-localization tests, quotient codimension, endomorphism monoids).
//!
//! The building blocks are organized bottom-up:
//!
//! * [`exactlin`] — big-integer matrices, Hermite/Smith normal forms,
//!   sublattices of `Z^n` and their quotients.
//! * [`cone`] — rational polyhedral cones from generators: facets with
//!   support forms primitive with respect to a lattice, extreme rays,
//!   lineality, positive gradings.
//! * [`monoid`] — the [`monoid::AffineMonoid`] value with its exact
//!   membership oracle and graded enumeration.
//! * [`normalization`] — Hilbert basis computation, normality, module
//!   generators of the saturation, and the saturated interior ideal.
//! * [`ideals`] — graded monomial ideals over `M` and `M̄`, colon monoids,
//!   and the per-facet quotient codimension check.
//! * [`serre`] — the (R1) decision procedures, the bounded (S2) probe, and
//!   full report assembly.
//! * [`oracle`] — independent brute-force reference implementations used by
//!   the differential test harness.
//! * [`differential`] — seeded random monoid generation and the
//!   implementation-vs-oracle cross-check runner.

pub mod cone;
pub mod differential;
mod error;
pub mod exactlin;
pub mod ideals;
pub mod io;
pub mod monoid;
pub mod normalization;
pub mod oracle;
pub mod serre;

pub use error::ToricError;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, ToricError>;
