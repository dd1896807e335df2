//! Rational polyhedral cones `C = R_{>=0} M` from integer generators.
//!
//! The cone of an affine monoid is always full-dimensional in the
//! coordinates of its own lattice `G = ZM`, so all facet computations happen
//! there: support forms are integer functionals in `G`-basis coordinates and
//! are primitive with respect to `G` by construction (coprime coordinates).
//! Facets are enumerated by running the double description method on the
//! dual cone; extreme rays are identified by exact membership of each
//! generator in the cone of the remaining ones.

mod dd;

pub use dd::{dual_rays, DdOutput};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exactlin::solve::solve_rows;
use crate::exactlin::vector::{primitive_part, vec_dot, vec_is_zero, vec_neg};
use crate::exactlin::{kernel_lattice, IntMatrix, Lattice};
use crate::{Result, ToricError};

/// A facet of the cone together with its support form.
///
/// `sigma` vanishes exactly on the facet, is nonnegative on the cone, and
/// takes the value 1 somewhere on `G` (primitivity with respect to `G`).
#[derive(Clone, Debug)]
pub struct SupportForm {
    pub facet_id: usize,
    /// Integer functional in `G`-basis coordinates with coprime entries.
    pub sigma: Vec<BigInt>,
    /// Indices of the generators lying on the facet.
    pub facet_generators: Vec<usize>,
}

/// A strictly positive grading for the cone, or the group flag when the
/// cone is a full linear space and no such grading exists.
#[derive(Clone, Debug)]
pub struct Grading {
    /// Integer functional in `G`-basis coordinates; zero in the group case.
    pub lambda: Vec<BigInt>,
    /// Set when the cone has no facets, i.e. the monoid is a group.
    pub is_group: bool,
}

#[derive(Clone, Debug)]
pub struct RationalCone {
    ambient_rank: usize,
    dim: usize,
    lattice: Lattice,
    generators: Vec<Vec<BigInt>>,
    gen_coords: Vec<Vec<BigInt>>,
    extreme_rays: Vec<Vec<BigInt>>,
    facets: Vec<SupportForm>,
    /// `{v in Z^n : v in span(C), sigma_F(v) = 0 for all F}`.
    lineality: Lattice,
    /// The same space intersected with `G` instead of `Z^n`.
    lineality_in_lattice: Lattice,
}

/// Build the cone spanned by `gens`, with support forms normalized primitive
/// with respect to `g`.  All generators must lie in `g`.
pub fn cone_from_generators(gens: &[Vec<BigInt>], g: &Lattice) -> Result<RationalCone> {
    let n = g.ambient_rank();
    let mut gen_coords = Vec::with_capacity(gens.len());
    for v in gens {
        match g.coordinates(v)? {
            Some(c) => gen_coords.push(c),
            None => {
                return Err(ToricError::Internal(
                    "cone generator outside the reference lattice".into(),
                ))
            }
        }
    }
    let d = g.rank();

    // Facet normals are the extreme rays of the dual cone; since the cone is
    // full-dimensional in G-coordinates, the dual is pointed.
    let dual = dual_rays(d, &gen_coords);
    debug_assert_eq!(dual.lineality.rank(), 0);
    let mut sigmas = dual.rays;
    sigmas.sort();
    let facets: Vec<SupportForm> = sigmas
        .into_iter()
        .enumerate()
        .map(|(facet_id, sigma)| {
            let facet_generators = gen_coords
                .iter()
                .enumerate()
                .filter(|(_, x)| vec_dot(&sigma, x).is_zero())
                .map(|(i, _)| i)
                .collect();
            SupportForm {
                facet_id,
                sigma,
                facet_generators,
            }
        })
        .collect();
    for f in &facets {
        debug_assert!(gen_coords.iter().all(|x| !vec_dot(&f.sigma, x).is_negative()));
    }

    // Lineality: common kernel of the support forms inside the span.
    let sigma_matrix = IntMatrix::from_rows(d, facets.iter().map(|f| f.sigma.clone()).collect());
    let lin_coords = kernel_lattice(&sigma_matrix);
    let lin_rows: Vec<Vec<BigInt>> = lin_coords
        .basis_rows()
        .map(|x| g.basis().left_mul_vec(x))
        .collect();
    let lineality_in_lattice = Lattice::from_rows(n, lin_rows.clone());
    let lineality = Lattice::from_rows(n, lin_rows).saturate();

    let mut cone = RationalCone {
        ambient_rank: n,
        dim: d,
        lattice: g.clone(),
        generators: gens.to_vec(),
        gen_coords,
        extreme_rays: Vec::new(),
        facets,
        lineality,
        lineality_in_lattice,
    };
    cone.extreme_rays = cone.compute_extreme_rays();
    Ok(cone)
}

/// Exact membership of `v` in the cone generated by `subset`, all in the
/// same coordinates: dualize and test the sign conditions.
fn cone_member(dim: usize, subset: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let dual = dual_rays(dim, subset);
    dual.lineality.basis_rows().all(|l| vec_dot(l, v).is_zero())
        && dual.rays.iter().all(|r| !vec_dot(r, v).is_negative())
}

impl RationalCone {
    /// A generator spans an extreme ray exactly when it is not in the cone
    /// of the generators on the other rays.  Generators are first grouped
    /// into rays modulo lineality (mutual domination), since several
    /// generators on one ray would otherwise absorb each other.
    fn compute_extreme_rays(&self) -> Vec<Vec<BigInt>> {
        let lin_basis: Vec<Vec<BigInt>> = {
            let sigma_matrix = IntMatrix::from_rows(
                self.dim,
                self.facets.iter().map(|f| f.sigma.clone()).collect(),
            );
            kernel_lattice(&sigma_matrix)
                .basis_rows()
                .map(|r| r.to_vec())
                .collect()
        };
        let in_lineality =
            |x: &[BigInt]| self.facets.iter().all(|f| vec_dot(&f.sigma, x).is_zero());
        let same_ray = |a: &[BigInt], b: &[BigInt]| {
            let mut base_a: Vec<Vec<BigInt>> = vec![a.to_vec()];
            base_a.extend(lin_basis.iter().cloned());
            base_a.extend(lin_basis.iter().map(|l| vec_neg(l)));
            if !cone_member(self.dim, &base_a, b) {
                return false;
            }
            let mut base_b: Vec<Vec<BigInt>> = vec![b.to_vec()];
            base_b.extend(lin_basis.iter().cloned());
            base_b.extend(lin_basis.iter().map(|l| vec_neg(l)));
            cone_member(self.dim, &base_b, a)
        };

        let mut candidates: Vec<usize> = (0..self.gen_coords.len())
            .filter(|&i| !vec_is_zero(&self.gen_coords[i]) && !in_lineality(&self.gen_coords[i]))
            .collect();
        candidates.sort_by(|&a, &b| {
            self.ray_sort_key(&self.gen_coords[a])
                .cmp(&self.ray_sort_key(&self.gen_coords[b]))
        });
        // Ray classes: indices of generators spanning the same ray mod
        // lineality, keyed by their first member in canonical order.
        let mut classes: Vec<Vec<usize>> = Vec::new();
        'next: for &i in &candidates {
            for class in classes.iter_mut() {
                if same_ray(&self.gen_coords[class[0]], &self.gen_coords[i]) {
                    class.push(i);
                    continue 'next;
                }
            }
            classes.push(vec![i]);
        }
        let mut kept: Vec<Vec<BigInt>> = Vec::new();
        for class in &classes {
            let others: Vec<Vec<BigInt>> = (0..self.gen_coords.len())
                .filter(|j| !class.contains(j))
                .map(|j| self.gen_coords[j].clone())
                .collect();
            if !cone_member(self.dim, &others, &self.gen_coords[class[0]]) {
                // Canonically smallest primitive representative of the class.
                let rep = class
                    .iter()
                    .map(|&j| primitive_part(&self.gen_coords[j]))
                    .min_by(|a, b| self.ray_sort_key(a).cmp(&self.ray_sort_key(b)))
                    .expect("class is nonempty");
                kept.push(rep);
            }
        }
        kept.sort_by(|a, b| self.ray_sort_key(a).cmp(&self.ray_sort_key(b)));
        kept.into_iter()
            .map(|x| self.lattice.basis().left_mul_vec(&x))
            .collect()
    }

    fn ray_sort_key(&self, x: &[BigInt]) -> (BigInt, Vec<BigInt>) {
        let lam: BigInt = self.facets.iter().map(|f| vec_dot(&f.sigma, x)).sum();
        (lam, x.to_vec())
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Dimension of the linear span (equals the rank of `G`).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    /// `G`-coordinates of the generators, parallel to `generators()`.
    pub fn generator_coords(&self) -> &[Vec<BigInt>] {
        &self.gen_coords
    }

    /// Extreme rays modulo lineality, primitive in `G`, in ambient
    /// coordinates.
    pub fn extreme_rays(&self) -> &[Vec<BigInt>] {
        &self.extreme_rays
    }

    pub fn facets(&self) -> &[SupportForm] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn lineality(&self) -> &Lattice {
        &self.lineality
    }

    /// `G ∩ lineality`, the unit lattice of the saturation.
    pub fn lineality_in_lattice(&self) -> &Lattice {
        &self.lineality_in_lattice
    }

    /// The lineality space as a saturated lattice in `G`-coordinates.
    pub fn lineality_coords(&self) -> Lattice {
        let sigma_matrix =
            IntMatrix::from_rows(self.dim, self.facets.iter().map(|f| f.sigma.clone()).collect());
        kernel_lattice(&sigma_matrix)
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.rank() == 0
    }

    /// Value of a support form on a point given in `G`-coordinates.
    pub fn sigma_value(&self, facet: usize, coords: &[BigInt]) -> BigInt {
        vec_dot(&self.facets[facet].sigma, coords)
    }

    /// All support form values on a point in `G`-coordinates.
    pub fn sigma_values(&self, coords: &[BigInt]) -> Vec<BigInt> {
        self.facets
            .iter()
            .map(|f| vec_dot(&f.sigma, coords))
            .collect()
    }

    /// Whether a `G`-point (given in coordinates) lies in the cone.
    pub fn contains_coords(&self, coords: &[BigInt]) -> bool {
        self.facets
            .iter()
            .all(|f| !vec_dot(&f.sigma, coords).is_negative())
    }

    /// Whether a `G`-point lies in the relative interior.
    pub fn relint_contains_coords(&self, coords: &[BigInt]) -> bool {
        self.facets
            .iter()
            .all(|f| vec_dot(&f.sigma, coords).is_positive())
    }

    /// Rational coordinates of an ambient vector in the `G`-basis, when the
    /// vector lies in the linear span of the cone.
    pub fn span_coordinates(&self, v: &[BigInt]) -> Result<Option<Vec<BigRational>>> {
        if v.len() != self.ambient_rank {
            return Err(ToricError::DimensionMismatch {
                expected: self.ambient_rank,
                got: v.len(),
            });
        }
        if self.dim == 0 {
            return Ok(vec_is_zero(v).then_some(Vec::new()));
        }
        Ok(solve_rows(self.lattice.basis(), v))
    }

    /// Membership of an arbitrary ambient vector in the closed cone.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        let Some(coords) = self.span_coordinates(v)? else {
            return Ok(false);
        };
        Ok(self.facets.iter().all(|f| {
            let val: BigRational = f
                .sigma
                .iter()
                .zip(&coords)
                .map(|(s, c)| c * BigRational::from_integer(s.clone()))
                .sum();
            !val.is_negative()
        }))
    }

    /// Membership of an arbitrary ambient vector in the relative interior:
    /// inside the span and strictly positive on every support form.
    pub fn relint_contains(&self, v: &[BigInt]) -> Result<bool> {
        let Some(coords) = self.span_coordinates(v)? else {
            return Ok(false);
        };
        Ok(self.facets.iter().all(|f| {
            let val: BigRational = f
                .sigma
                .iter()
                .zip(&coords)
                .map(|(s, c)| c * BigRational::from_integer(s.clone()))
                .sum();
            val.is_positive()
        }))
    }

    /// A strictly positive grading: the sum of the support forms, rescaled
    /// to be primitive on `span(C) ∩ Z^n`.  Positive on `C \ lineality`,
    /// zero on the lineality.
    pub fn positive_grading(&self) -> Grading {
        if self.facets.is_empty() {
            return Grading {
                lambda: vec![BigInt::zero(); self.dim],
                is_group: true,
            };
        }
        let mut lambda = vec![BigInt::zero(); self.dim];
        for f in &self.facets {
            for (l, s) in lambda.iter_mut().zip(&f.sigma) {
                *l += s;
            }
        }
        // Values on a basis of the saturated span lattice fix the scale.
        let sat = self.lattice.saturate();
        let values: Vec<BigRational> = sat
            .basis_rows()
            .map(|row| {
                let c = solve_rows(self.lattice.basis(), row)
                    .expect("saturation basis lies in the span");
                lambda
                    .iter()
                    .zip(&c)
                    .map(|(l, ci)| ci * BigRational::from_integer(l.clone()))
                    .sum()
            })
            .collect();
        let denom_lcm = values
            .iter()
            .fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()));
        let gcd = values
            .iter()
            .map(|v| v.numer() * (&denom_lcm / v.denom()))
            .fold(BigInt::zero(), |acc, x| acc.gcd(&x));
        let scale = BigRational::new(denom_lcm, gcd);
        let lambda = lambda
            .iter()
            .map(|l| {
                let v = &scale * BigRational::from_integer(l.clone());
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect();
        Grading {
            lambda,
            is_group: false,
        }
    }

    /// Regenerate extreme rays and lineality from the facet inequalities
    /// alone (double description round trip), in `G`-coordinates.
    pub fn rays_from_facets(&self) -> DdOutput {
        dual_rays(
            self.dim,
            &self
                .facets
                .iter()
                .map(|f| f.sigma.clone())
                .collect::<Vec<_>>(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::vector::vec_from_i64;

    fn mk(gens: &[&[i64]]) -> RationalCone {
        let rows: Vec<Vec<BigInt>> = gens.iter().map(|v| vec_from_i64(v)).collect();
        let g = Lattice::from_rows(gens[0].len(), rows.clone());
        cone_from_generators(&rows, &g).unwrap()
    }

    #[test]
    fn parity_quadrant() {
        // Generators of the coordinate quadrant inside the even-parity lattice.
        let c = mk(&[&[2, 0], &[0, 2], &[1, 3], &[3, 1]]);
        assert_eq!(c.dim(), 2);
        assert_eq!(c.facet_count(), 2);
        assert!(c.is_pointed());
        let mut rays = c.extreme_rays().to_vec();
        rays.sort();
        assert_eq!(rays, vec![vec_from_i64(&[0, 2]), vec_from_i64(&[2, 0])]);
        // Support forms take value 1 on G: sigma evaluated on (1,3) or (3,1).
        for f in c.facets() {
            let vals: Vec<BigInt> = c
                .generator_coords()
                .iter()
                .map(|x| vec_dot(&f.sigma, x))
                .collect();
            assert!(vals.iter().any(|v| *v == BigInt::from(1)), "{vals:?}");
        }
    }

    #[test]
    fn upper_halfplane() {
        let c = mk(&[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(c.dim(), 2);
        assert_eq!(c.facet_count(), 1);
        assert_eq!(c.lineality().rank(), 1);
        assert!(c.lineality().contains(&vec_from_i64(&[1, 0])).unwrap());
        assert_eq!(c.extreme_rays().len(), 1);
        // relint: lineality direction is irrelevant.
        assert!(c.relint_contains(&vec_from_i64(&[-5, 1])).unwrap());
        assert!(!c.relint_contains(&vec_from_i64(&[3, 0])).unwrap());
    }

    #[test]
    fn single_ray() {
        let c = mk(&[&[1]]);
        assert_eq!(c.dim(), 1);
        assert_eq!(c.facet_count(), 1);
        assert_eq!(c.facets()[0].sigma, vec_from_i64(&[1]));
    }

    #[test]
    fn relint_examples() {
        let c = mk(&[&[1, 0], &[0, 1]]);
        assert!(c.relint_contains(&vec_from_i64(&[1, 1])).unwrap());
        assert!(!c.relint_contains(&vec_from_i64(&[2, 0])).unwrap());
        assert!(c.contains(&vec_from_i64(&[2, 0])).unwrap());
        assert!(!c.contains(&vec_from_i64(&[-1, 0])).unwrap());
    }

    #[test]
    fn positive_gradings() {
        let c = mk(&[&[1, 0], &[0, 1]]);
        assert_eq!(c.positive_grading().lambda, vec_from_i64(&[1, 1]));

        let c = mk(&[&[1, -1], &[1, 1]]);
        assert_eq!(c.positive_grading().lambda, vec_from_i64(&[1, 0]));

        let c = mk(&[&[1, 0], &[-1, 0], &[0, 1]]);
        let g = c.positive_grading();
        assert!(!g.is_group);
        // One facet, sigma = y; in G = Z^2 coordinates that is (0,1).
        assert_eq!(g.lambda, vec_from_i64(&[0, 1]));

        let c = mk(&[&[1], &[-1]]);
        let g = c.positive_grading();
        assert!(g.is_group);
    }

    #[test]
    fn double_description_round_trip() {
        for gens in [
            vec![vec![2i64, 0], vec![0, 2], vec![1, 3], vec![3, 1]],
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]],
            vec![vec![1, 0], vec![-1, 0], vec![0, 1]],
        ] {
            let rows: Vec<&[i64]> = gens.iter().map(|v| v.as_slice()).collect();
            let c = mk(&rows);
            let round = c.rays_from_facets();
            let mut expected: Vec<Vec<BigInt>> = c
                .extreme_rays()
                .iter()
                .map(|r| {
                    c.lattice()
                        .coordinates(r)
                        .unwrap()
                        .expect("ray must lie in G")
                })
                .collect();
            let mut got = round.rays.clone();
            if c.lineality().rank() == 0 {
                expected.sort();
                got.sort();
                assert_eq!(expected, got);
            } else {
                // Modulo lineality: compare canonical residues.
                let lin = round.lineality;
                let canon = |v: &Vec<BigInt>| primitive_part(&lin.reduce(v));
                let mut e: Vec<_> = expected.iter().map(canon).collect();
                let mut r: Vec<_> = got.iter().map(canon).collect();
                e.sort();
                r.sort();
                assert_eq!(e, r);
            }
        }
    }
}
