//! Small helpers for `Vec<BigInt>` vectors in lattice coordinates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn vec_from_i64(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn vec_to_i64(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|x| i64::try_from(x).ok()).collect()
}

pub fn vec_is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn vec_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(a: &[BigInt], k: &BigInt) -> Vec<BigInt> {
    a.iter().map(|x| x * k).collect()
}

pub fn vec_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Gcd of all entries, nonnegative; zero only for the zero vector.
pub fn vec_gcd(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Divide by the gcd of the entries.  The zero vector is returned unchanged.
pub fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let g = vec_gcd(v);
    if g.is_zero() || g.abs().is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}
