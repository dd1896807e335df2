//! Incremental double description over exact integers.
//!
//! Computes the extreme rays and the lineality space of a cone given by
//! homogeneous inequalities `{ y : <c_i, y> >= 0 }`.  Rays are kept as
//! primitive integer vectors together with the set of already-processed
//! constraints they satisfy with equality; adjacency of a positive/negative
//! pair is decided combinatorially from those zero sets.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactlin::vector::{primitive_part, vec_dot, vec_is_zero};
use crate::exactlin::{kernel_lattice, IntMatrix, Lattice};

#[derive(Clone, Debug)]
struct Ray {
    v: Vec<BigInt>,
    zeros: u64,
}

/// Rays and lineality of `{ y in R^dim : <c, y> >= 0 for all constraints }`.
#[derive(Clone, Debug)]
pub struct DdOutput {
    /// Primitive extreme rays modulo the lineality space, sorted.
    pub rays: Vec<Vec<BigInt>>,
    /// Saturated lattice spanning the lineality space.
    pub lineality: Lattice,
}

pub fn dual_rays(dim: usize, constraints: &[Vec<BigInt>]) -> DdOutput {
    let active: Vec<&Vec<BigInt>> = constraints.iter().filter(|c| !vec_is_zero(c)).collect();
    assert!(active.len() <= 64, "too many constraints for the bitmask");

    let mut lin: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (ci, c) in active.iter().enumerate() {
        let bit = 1u64 << ci;
        if let Some(j) = lin.iter().position(|w| !vec_dot(c, w).is_zero()) {
            // The constraint cuts the lineality space: split off a pivot
            // vector, flatten everything else onto the hyperplane, and keep
            // the feasible half of the pivot as a new ray.
            let mut v_star = lin.remove(j);
            let mut q = vec_dot(c, &v_star);
            if q.is_negative() {
                v_star = v_star.iter().map(|x| -x).collect();
                q = -q;
            }
            for w in lin.iter_mut() {
                let a = vec_dot(c, w);
                if !a.is_zero() {
                    *w = primitive_part(&combine(&q, w, &a, &v_star));
                }
            }
            for r in rays.iter_mut() {
                let a = vec_dot(c, &r.v);
                if !a.is_zero() {
                    r.v = primitive_part(&combine(&q, &r.v, &a, &v_star));
                }
                r.zeros |= bit;
            }
            // v_star satisfied every earlier constraint with equality.
            rays.push(Ray {
                v: primitive_part(&v_star),
                zeros: bit - 1,
            });
        } else {
            let vals: Vec<BigInt> = rays.iter().map(|r| vec_dot(c, &r.v)).collect();
            let mut next: Vec<Ray> = Vec::new();
            for (r, val) in rays.iter().zip(&vals) {
                if !val.is_negative() {
                    let mut kept = r.clone();
                    if val.is_zero() {
                        kept.zeros |= bit;
                    }
                    next.push(kept);
                }
            }
            for (pi, pv) in vals.iter().enumerate() {
                if !pv.is_positive() {
                    continue;
                }
                for (ni, nv) in vals.iter().enumerate() {
                    if !nv.is_negative() {
                        continue;
                    }
                    let common = rays[pi].zeros & rays[ni].zeros;
                    let adjacent = !rays.iter().enumerate().any(|(k, other)| {
                        k != pi && k != ni && common & other.zeros == common
                    });
                    if adjacent {
                        // Positive combination vanishing on c.
                        let comb = combine(pv, &rays[ni].v, nv, &rays[pi].v);
                        next.push(Ray {
                            v: primitive_part(&comb),
                            zeros: common | bit,
                        });
                    }
                }
            }
            rays = next;
        }
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    let constraint_matrix = IntMatrix::from_rows(
        dim,
        active.iter().map(|c| (*c).clone()).collect::<Vec<_>>(),
    );
    DdOutput {
        rays: out,
        lineality: kernel_lattice(&constraint_matrix),
    }
}

/// `q·a - s·b`, the scaled combination used by both update rules.
fn combine(q: &BigInt, a: &[BigInt], s: &BigInt, b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| q * x - s * y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::vector::vec_from_i64;

    fn run(dim: usize, cs: &[&[i64]]) -> DdOutput {
        dual_rays(dim, &cs.iter().map(|c| vec_from_i64(c)).collect::<Vec<_>>())
    }

    #[test]
    fn quadrant() {
        let out = run(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(out.rays, vec![vec_from_i64(&[0, 1]), vec_from_i64(&[1, 0])]);
        assert_eq!(out.lineality.rank(), 0);
    }

    #[test]
    fn halfplane_has_lineality() {
        let out = run(2, &[&[0, 1]]);
        assert_eq!(out.lineality.rank(), 1);
        assert_eq!(out.rays.len(), 1);
        // The single ray points into the open half.
        assert!(vec_dot(&vec_from_i64(&[0, 1]), &out.rays[0]) > BigInt::zero());
    }

    #[test]
    fn whole_space_and_origin() {
        let out = run(3, &[]);
        assert_eq!(out.lineality.rank(), 3);
        assert!(out.rays.is_empty());

        let out = run(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert!(out.rays.is_empty());
        assert_eq!(out.lineality.rank(), 0);
    }

    #[test]
    fn square_cone_in_three_dims() {
        // y >= 0, z >= 0, x >= y, x >= z: cone over a square, four rays.
        let out = run(3, &[&[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[1, 0, -1]]);
        assert_eq!(out.rays.len(), 4);
        assert_eq!(out.lineality.rank(), 0);
        for r in &out.rays {
            for c in [[0i64, 1, 0], [0, 0, 1], [1, -1, 0], [1, 0, -1]] {
                assert!(vec_dot(&vec_from_i64(&c), r) >= BigInt::zero());
            }
        }
    }

    #[test]
    fn redundant_constraints_change_nothing() {
        let plain = run(2, &[&[1, 0], &[0, 1]]);
        let padded = run(2, &[&[1, 0], &[0, 1], &[1, 1], &[2, 1]]);
        assert_eq!(plain.rays, padded.rays);
    }
}
