//! Arbitrary-precision integer linear algebra: Hermite and Smith normal
//! forms, sublattices of `Z^n` with canonical bases, quotient structures,
//! saturation, and primitive functionals.
//!
//! All operations are pure functions of immutable inputs.

mod lattice;
mod matrix;
pub mod solve;
pub mod vector;

pub use lattice::{kernel_lattice, quotient, Lattice, QuotientImage, QuotientStructure};
pub use matrix::IntMatrix;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::{Result, ToricError};

/// Normalize a rational functional to the integer functional `σ` with
/// `σ(G) = Z`, expressed in the coordinates of the basis of `G`.
///
/// The result is the unique positive multiple of `φ` whose values on a basis
/// of `G` are coprime integers.  Errors when `φ` vanishes on all of `G`.
pub fn primitive_form(phi: &[BigRational], g: &Lattice) -> Result<Vec<BigInt>> {
    if phi.len() != g.ambient_rank() {
        return Err(ToricError::DimensionMismatch {
            expected: g.ambient_rank(),
            got: phi.len(),
        });
    }
    let values: Vec<BigRational> = g
        .basis_rows()
        .map(|row| {
            row.iter()
                .zip(phi)
                .map(|(x, p)| p * BigRational::from_integer(x.clone()))
                .sum()
        })
        .collect();
    if values.iter().all(Zero::is_zero) {
        return Err(ToricError::FunctionalVanishes);
    }
    let denom_lcm = values
        .iter()
        .fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&denom_lcm / v.denom()))
        .collect();
    let g0 = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x))
        .abs();
    Ok(ints.iter().map(|x| x / &g0).collect())
}
