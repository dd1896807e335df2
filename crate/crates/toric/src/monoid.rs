//! The affine monoid value `M` and its exact membership oracle.
//!
//! `build` caches everything downstream code needs: the group of differences
//! `G = ZM`, the cone with its support forms, the unit group, a strictly
//! positive grading, and the minimal generators modulo units.
//!
//! The unit group deserves a remark.  Generators lying in the lineality
//! space of the cone span a subgroup `U(M)` which is exactly the set of
//! invertible monoid elements (an element of `M` on a face of the cone can
//! only use generators from that face, and a monoid whose cone is a linear
//! space is a group).  `U(M)` can be a proper finite-index sublattice of
//! `G ∩ lineality`; the latter is the unit group of the saturation, not of
//! `M`, and the two are kept separate throughout.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::cone::{cone_from_generators, Grading, RationalCone};
use crate::exactlin::vector::{primitive_part, vec_dot, vec_from_i64, vec_is_zero};
use crate::exactlin::{IntMatrix, Lattice};
use crate::ideals::MonoidIdeal;
use crate::normalization::HilbertBasis;
use crate::{Result, ToricError};

/// Search data for one generator: ambient vector, `G`-coordinates, grading
/// value and support-form values.
#[derive(Clone, Debug)]
pub(crate) struct SearchGen {
    pub ambient: Vec<BigInt>,
    pub coords: Vec<BigInt>,
    pub lambda: BigInt,
    pub sigma: Vec<BigInt>,
}

/// Certificate for a positive membership decision.
///
/// `v = Σ multiplicity · generator + unit_part`, where the unit part is an
/// invertible element of `M` certified by its unit-lattice coordinates.
#[derive(Clone, Debug)]
pub struct MembershipCertificate {
    /// Pairs of (minimal generator, multiplicity).
    pub multipliers: Vec<(Vec<BigInt>, BigInt)>,
    pub unit_part: Vec<BigInt>,
}

/// Change of coordinates between `G` and the pointed quotient `G/(G∩lin)`.
///
/// The saturated unit lattice splits off unimodularly, so the quotient is a
/// free lattice `Z^k`; `lift` is an exact section of `project` and
/// `lift(project(x))` is the canonical representative of `x` modulo
/// `G ∩ lineality`.
#[derive(Clone, Debug)]
pub(crate) struct PointedChart {
    pub k: usize,
    proj: IntMatrix,
    section: IntMatrix,
    /// Support forms transported to the quotient, one per facet.
    pub sigma_bar: Vec<Vec<BigInt>>,
    pub lambda_bar: Vec<BigInt>,
    /// Extreme rays of the projected cone, primitive in `Z^k`, sorted.
    pub rays: Vec<Vec<BigInt>>,
}

impl PointedChart {
    fn new(cone: &RationalCone, grading: &Grading) -> Result<PointedChart> {
        let d = cone.dim();
        let lin = cone.lineality_coords();
        let l = lin.rank();
        let k = d - l;
        let (s, _, v) = lin.basis().snf();
        for i in 0..l {
            if !num_traits::One::is_one(s.at(i, i)) {
                return Err(ToricError::Internal(
                    "saturated lattice with nontrivial elementary divisor".into(),
                ));
            }
        }
        let v_inv = v
            .inverse_unimodular()
            .ok_or_else(|| ToricError::Internal("SNF transform not unimodular".into()))?;
        let proj = IntMatrix::from_rows(
            k,
            (0..d)
                .map(|i| (l..d).map(|j| v.at(i, j).clone()).collect())
                .collect(),
        );
        let section = IntMatrix::from_rows(d, (l..d).map(|i| v_inv.row_vec(i)).collect());
        let sigma_bar = cone
            .facets()
            .iter()
            .map(|f| (0..k).map(|j| vec_dot(&f.sigma, section.row(j))).collect())
            .collect();
        let lambda_bar = (0..k)
            .map(|j| vec_dot(&grading.lambda, section.row(j)))
            .collect();
        let mut chart = PointedChart {
            k,
            proj,
            section,
            sigma_bar,
            lambda_bar,
            rays: Vec::new(),
        };
        let mut rays: Vec<Vec<BigInt>> = Vec::new();
        for r in cone.extreme_rays() {
            let coords = cone
                .lattice()
                .coordinates(r)?
                .ok_or_else(|| ToricError::Internal("extreme ray outside G".into()))?;
            rays.push(primitive_part(&chart.project(&coords)));
        }
        rays.sort_by(|a, b| {
            let la = vec_dot(&chart.lambda_bar, a);
            let lb = vec_dot(&chart.lambda_bar, b);
            (la, a).cmp(&(lb, b))
        });
        rays.dedup();
        chart.rays = rays;
        Ok(chart)
    }

    pub fn project(&self, coords: &[BigInt]) -> Vec<BigInt> {
        self.proj.left_mul_vec(coords)
    }

    pub fn lift(&self, q: &[BigInt]) -> Vec<BigInt> {
        self.section.left_mul_vec(q)
    }

    pub fn lambda_bar_of(&self, q: &[BigInt]) -> BigInt {
        vec_dot(&self.lambda_bar, q)
    }

    /// All `sigma_bar` values nonnegative: in the projected cone.
    pub fn in_cone(&self, q: &[BigInt]) -> bool {
        self.sigma_bar.iter().all(|s| !vec_dot(s, q).is_negative())
    }

    /// All `sigma_bar` values strictly positive.
    pub fn in_relint(&self, q: &[BigInt]) -> bool {
        self.sigma_bar.iter().all(|s| vec_dot(s, q).is_positive())
    }
}

pub struct AffineMonoid {
    ambient_rank: usize,
    generators: Vec<Vec<BigInt>>,
    group: Lattice,
    cone: RationalCone,
    /// Unit group `U(M)`, ambient coordinates.
    units: Lattice,
    /// `U(M)` in `G`-coordinates, used by the search engine.
    units_coords: Lattice,
    /// `G ∩ lineality`: the unit group of the saturation.
    sat_units: Lattice,
    rank: usize,
    grading: Grading,
    minimal_generators: Vec<Vec<BigInt>>,
    nonunit_mingens: Vec<SearchGen>,
    pub(crate) chart: PointedChart,
    // Caches owned here, filled by the normalization / ideals modules.
    pub(crate) hb_cache: OnceLock<HilbertBasis>,
    pub(crate) sat_module_cache: OnceLock<Vec<Vec<BigInt>>>,
    pub(crate) wbar_cache: OnceLock<MonoidIdeal>,
}

impl AffineMonoid {
    /// Build the monoid from a nonempty list of equal-length generators.
    pub fn build(gens: Vec<Vec<BigInt>>) -> Result<AffineMonoid> {
        if gens.is_empty() {
            return Err(ToricError::EmptyGenerators);
        }
        let n = gens[0].len();
        for g in &gens {
            if g.len() != n {
                return Err(ToricError::DimensionMismatch {
                    expected: n,
                    got: g.len(),
                });
            }
        }
        let group = Lattice::from_rows(n, gens.clone());
        let cone = cone_from_generators(&gens, &group)?;
        let rank = group.rank();
        let grading = cone.positive_grading();

        let mut unit_rows = Vec::new();
        let mut unit_coord_rows = Vec::new();
        for (g, x) in gens.iter().zip(cone.generator_coords()) {
            if cone.sigma_values(x).iter().all(Zero::is_zero) {
                unit_rows.push(g.clone());
                unit_coord_rows.push(x.clone());
            }
        }
        let units = Lattice::from_rows(n, unit_rows);
        let units_coords = Lattice::from_rows(rank, unit_coord_rows);
        let sat_units = cone.lineality_in_lattice().clone();
        let chart = PointedChart::new(&cone, &grading)?;

        let mut m = AffineMonoid {
            ambient_rank: n,
            generators: gens,
            group,
            cone,
            units,
            units_coords,
            sat_units,
            rank,
            grading,
            minimal_generators: Vec::new(),
            nonunit_mingens: Vec::new(),
            chart,
            hb_cache: OnceLock::new(),
            sat_module_cache: OnceLock::new(),
            wbar_cache: OnceLock::new(),
        };
        let (mins, search) = m.compute_minimal_generators()?;
        m.minimal_generators = mins;
        m.nonunit_mingens = search;
        Ok(m)
    }

    /// Convenience constructor from machine integers (tests, corpus).
    pub fn from_i64(gens: &[&[i64]]) -> Result<AffineMonoid> {
        AffineMonoid::build(gens.iter().map(|g| vec_from_i64(g)).collect())
    }

    /// Irredundant generating set modulo units: a generator is dropped
    /// exactly when it lies in the monoid generated by the others plus the
    /// units.  Representatives are canonical modulo `U(M)`, sorted in the
    /// canonical element order (grading value, then lexicographic).
    fn compute_minimal_generators(&self) -> Result<(Vec<Vec<BigInt>>, Vec<SearchGen>)> {
        let mut canon: Vec<SearchGen> = Vec::new();
        let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
        for g in &self.generators {
            let reduced = self.units.reduce(g);
            if vec_is_zero(&reduced) {
                continue; // identity or unit
            }
            if !seen.insert(reduced.clone()) {
                continue;
            }
            canon.push(self.search_gen(&reduced)?);
        }
        canon.sort_by(|a, b| (&a.lambda, &a.ambient).cmp(&(&b.lambda, &b.ambient)));
        let mut kept = Vec::new();
        for i in 0..canon.len() {
            let others: Vec<SearchGen> = canon
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, s)| s.clone())
                .collect();
            if self.solve_membership(&others, &canon[i].coords).is_none() {
                kept.push(canon[i].clone());
            }
        }
        Ok((kept.iter().map(|s| s.ambient.clone()).collect(), kept))
    }

    pub(crate) fn search_gen(&self, ambient: &[BigInt]) -> Result<SearchGen> {
        let coords = self
            .group
            .coordinates(ambient)?
            .ok_or_else(|| ToricError::Internal("element outside G".into()))?;
        Ok(SearchGen {
            ambient: ambient.to_vec(),
            lambda: self.lambda_of_coords(&coords),
            sigma: self.cone.sigma_values(&coords),
            coords,
        })
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn group(&self) -> &Lattice {
        &self.group
    }

    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }

    /// The unit group `U(M)` of the monoid itself.
    pub fn units(&self) -> &Lattice {
        &self.units
    }

    /// `G ∩ lineality`, the unit group of the saturation `M̄`.
    pub fn saturation_units(&self) -> &Lattice {
        &self.sat_units
    }

    /// Rank of `G = ZM`; the Krull dimension of `k[M]`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn is_positive(&self) -> bool {
        self.units.rank() == 0
    }

    pub fn minimal_generators(&self) -> &[Vec<BigInt>] {
        &self.minimal_generators
    }

    pub(crate) fn nonunit_mingens(&self) -> &[SearchGen] {
        &self.nonunit_mingens
    }

    pub fn lambda_of_coords(&self, coords: &[BigInt]) -> BigInt {
        vec_dot(&self.grading.lambda, coords)
    }

    /// Grading value of an ambient element of `G`.
    pub fn lambda_of(&self, v: &[BigInt]) -> Result<BigInt> {
        let coords = self
            .group
            .coordinates(v)?
            .ok_or_else(|| ToricError::Internal("lambda_of called outside G".into()))?;
        Ok(self.lambda_of_coords(&coords))
    }

    /// Canonical representative modulo the unit group `U(M)`.
    pub fn canon_mod_units(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.units.reduce(v)
    }

    /// Ambient vector of a point given in pointed-quotient coordinates.
    pub(crate) fn lift_from_chart(&self, q: &[BigInt]) -> Vec<BigInt> {
        self.group.basis().left_mul_vec(&self.chart.lift(q))
    }

    /// Exact membership with certificate.
    ///
    /// Depth-first search over multiplicities of the nonunit minimal
    /// generators, pruned by the facet inequalities and the grading budget;
    /// a residual lying in the unit lattice is absorbed, since units and
    /// their inverses are monoid elements.
    pub fn contains(&self, v: &[BigInt]) -> Result<Option<MembershipCertificate>> {
        if v.len() != self.ambient_rank {
            return Err(ToricError::DimensionMismatch {
                expected: self.ambient_rank,
                got: v.len(),
            });
        }
        let Some(coords) = self.group.coordinates(v)? else {
            return Ok(None);
        };
        Ok(self.membership_from_coords(&coords))
    }

    /// Membership decision for a point already in `G`-coordinates.
    pub(crate) fn contains_coords(&self, coords: &[BigInt]) -> bool {
        self.membership_from_coords(coords).is_some()
    }

    fn membership_from_coords(&self, coords: &[BigInt]) -> Option<MembershipCertificate> {
        let mults = self.solve_membership(&self.nonunit_mingens, coords)?;
        Some(self.certificate_from_multiplicities(coords, &mults))
    }

    fn certificate_from_multiplicities(
        &self,
        coords: &[BigInt],
        mults: &[BigInt],
    ) -> MembershipCertificate {
        let mut used = coords.to_vec();
        let mut multipliers = Vec::new();
        for (gen, t) in self.nonunit_mingens.iter().zip(mults) {
            if !t.is_zero() {
                for (u, x) in used.iter_mut().zip(&gen.coords) {
                    *u -= t * x;
                }
                multipliers.push((gen.ambient.clone(), t.clone()));
            }
        }
        MembershipCertificate {
            multipliers,
            unit_part: self.group.basis().left_mul_vec(&used),
        }
    }

    /// Core bounded search: multiplicities over `gens` expressing `target`
    /// modulo the unit lattice, or `None`.
    pub(crate) fn solve_membership(
        &self,
        gens: &[SearchGen],
        target: &[BigInt],
    ) -> Option<Vec<BigInt>> {
        // Decreasing grading value; ties broken lexicographically.
        let mut order: Vec<usize> = (0..gens.len()).collect();
        order.sort_by(|&a, &b| (&gens[b].lambda, &gens[a].coords).cmp(&(&gens[a].lambda, &gens[b].coords)));
        let mut memo: HashSet<(usize, Vec<BigInt>)> = HashSet::new();
        let mut mults = vec![BigInt::zero(); gens.len()];
        self.search_rec(gens, &order, 0, target.to_vec(), &mut memo, &mut mults)
            .then_some(mults)
    }

    fn search_rec(
        &self,
        gens: &[SearchGen],
        order: &[usize],
        pos: usize,
        rem: Vec<BigInt>,
        memo: &mut HashSet<(usize, Vec<BigInt>)>,
        mults: &mut [BigInt],
    ) -> bool {
        if !self.cone.contains_coords(&rem) {
            return false;
        }
        if pos == order.len() {
            return self
                .units_coords
                .contains(&rem)
                .expect("coordinate ranks agree");
        }
        if memo.contains(&(pos, rem.clone())) {
            return false;
        }
        let gen = &gens[order[pos]];
        // Multiplicity cap from the grading and every positive support value.
        let mut tmax = self.lambda_of_coords(&rem).div_floor(&gen.lambda);
        for (f, s) in gen.sigma.iter().enumerate() {
            if s.is_positive() {
                tmax = tmax.min(self.cone.sigma_value(f, &rem).div_floor(s));
            }
        }
        let mut t = tmax;
        while !t.is_negative() {
            let next: Vec<BigInt> = rem
                .iter()
                .zip(&gen.coords)
                .map(|(r, x)| r - &t * x)
                .collect();
            if self.search_rec(gens, order, pos + 1, next, memo, mults) {
                mults[order[pos]] = t;
                return true;
            }
            t -= 1;
        }
        memo.insert((pos, rem));
        false
    }

    /// All monoid elements (modulo units) of grading value at most `bound`,
    /// each with a certificate, in canonical order.
    pub fn enumerate_up_to(
        &self,
        bound: &BigInt,
    ) -> Result<Vec<(Vec<BigInt>, MembershipCertificate)>> {
        if bound.is_negative() {
            return Err(ToricError::NegativeBound);
        }
        let zero = vec![BigInt::zero(); self.rank];
        let mut found: HashMap<Vec<BigInt>, Vec<BigInt>> = HashMap::new();
        let mut mults = vec![BigInt::zero(); self.nonunit_mingens.len()];
        self.enumerate_rec(0, zero, bound.clone(), &mut mults, &mut found);
        let mut out: Vec<(Vec<BigInt>, MembershipCertificate)> = found
            .into_iter()
            .map(|(coords, mults)| {
                let ambient = self.group.basis().left_mul_vec(&coords);
                (ambient, self.certificate_from_multiplicities(&coords, &mults))
            })
            .collect();
        out.sort_by(|(a, _), (b, _)| {
            let la = self.lambda_of(a).expect("enumerated element in G");
            let lb = self.lambda_of(b).expect("enumerated element in G");
            (la, a).cmp(&(lb, b))
        });
        Ok(out)
    }

    fn enumerate_rec(
        &self,
        idx: usize,
        sum: Vec<BigInt>,
        budget: BigInt,
        mults: &mut Vec<BigInt>,
        found: &mut HashMap<Vec<BigInt>, Vec<BigInt>>,
    ) {
        if idx == self.nonunit_mingens.len() {
            let canon = self.units_coords.reduce(&sum);
            found.entry(canon).or_insert_with(|| mults.clone());
            return;
        }
        let gen = &self.nonunit_mingens[idx];
        let tmax = budget.div_floor(&gen.lambda);
        let mut t = BigInt::zero();
        while t <= tmax {
            let next: Vec<BigInt> = sum
                .iter()
                .zip(&gen.coords)
                .map(|(s, x)| s + &t * x)
                .collect();
            mults[idx] = t.clone();
            self.enumerate_rec(idx + 1, next, &budget - &t * &gen.lambda, mults, found);
            t += 1;
        }
        mults[idx] = BigInt::zero();
    }

    /// The lattice `Z(M ∩ F)` spanned by the generators on a facet, in
    /// `G`-coordinates.
    pub(crate) fn facet_lattice_coords(&self, facet: usize) -> Lattice {
        let rows: Vec<Vec<BigInt>> = self
            .cone
            .generator_coords()
            .iter()
            .filter(|x| self.cone.sigma_value(facet, x).is_zero())
            .cloned()
            .collect();
        Lattice::from_rows(self.rank, rows)
    }

    /// Decide `v ∈ M + Z(M ∩ F)` for the facet `F` (the exponent monoid of
    /// the homogeneous localization at the facet prime).
    ///
    /// Generators off the facet have `σ_F >= 1`, so the search over their
    /// multiplicities is bounded by `σ_F(v)`; everything on the facet,
    /// units included, is absorbed by the lattice `Z(M ∩ F)`.
    pub(crate) fn in_facet_localization(&self, facet: usize, coords: &[BigInt]) -> bool {
        let budget = self.cone.sigma_value(facet, coords);
        if budget.is_negative() {
            return false;
        }
        let facet_lattice = self.facet_lattice_coords(facet);
        let off: Vec<&SearchGen> = self
            .nonunit_mingens
            .iter()
            .filter(|g| g.sigma[facet].is_positive())
            .collect();
        let mut memo: HashSet<(usize, Vec<BigInt>)> = HashSet::new();
        self.facet_rec(&off, facet, &facet_lattice, 0, coords.to_vec(), budget, &mut memo)
    }

    fn facet_rec(
        &self,
        off: &[&SearchGen],
        facet: usize,
        facet_lattice: &Lattice,
        idx: usize,
        rem: Vec<BigInt>,
        budget: BigInt,
        memo: &mut HashSet<(usize, Vec<BigInt>)>,
    ) -> bool {
        if idx == off.len() {
            return budget.is_zero()
                && facet_lattice.contains(&rem).expect("coordinate ranks agree");
        }
        if memo.contains(&(idx, rem.clone())) {
            return false;
        }
        let g = off[idx];
        let tmax = budget.div_floor(&g.sigma[facet]);
        let mut t = BigInt::zero();
        while t <= tmax {
            let next: Vec<BigInt> = rem
                .iter()
                .zip(&g.coords)
                .map(|(r, x)| r - &t * x)
                .collect();
            let next_budget = &budget - &t * &g.sigma[facet];
            if self.facet_rec(off, facet, facet_lattice, idx + 1, next, next_budget, memo) {
                return true;
            }
            t += 1;
        }
        memo.insert((idx, rem));
        false
    }

    /// Verify a membership certificate against a target vector.
    pub fn certificate_is_valid(&self, v: &[BigInt], cert: &MembershipCertificate) -> bool {
        let mut sum = vec![BigInt::zero(); self.ambient_rank];
        for (g, t) in &cert.multipliers {
            for (s, x) in sum.iter_mut().zip(g) {
                *s += t * x;
            }
        }
        for (s, u) in sum.iter_mut().zip(&cert.unit_part) {
            *s += u;
        }
        sum == v
            && cert.multipliers.iter().all(|(_, t)| !t.is_negative())
            && self.units.contains(&cert.unit_part).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1() -> AffineMonoid {
        AffineMonoid::from_i64(&[&[2, 0], &[0, 2], &[1, 3], &[3, 1]]).unwrap()
    }

    #[test]
    fn build_example1() {
        let m = example1();
        assert_eq!(m.rank(), 2);
        assert!(m.is_positive());
        // G = {(a,b) : a+b even}
        assert!(m.group().contains(&vec_from_i64(&[1, 1])).unwrap());
        assert!(!m.group().contains(&vec_from_i64(&[1, 0])).unwrap());
        assert_eq!(m.minimal_generators().len(), 4);
    }

    #[test]
    fn build_numerical_semigroup() {
        let m = AffineMonoid::from_i64(&[&[2], &[3]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert!(m.is_positive());
        assert_eq!(m.group(), &Lattice::full(1));
    }

    #[test]
    fn build_with_units() {
        let m = AffineMonoid::from_i64(&[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.units().rank(), 1);
        assert!(m.units().contains(&vec_from_i64(&[1, 0])).unwrap());
        assert_eq!(m.minimal_generators(), &[vec_from_i64(&[0, 1])]);
    }

    #[test]
    fn membership_example1() {
        let m = example1();
        assert!(m.contains(&vec_from_i64(&[1, 1])).unwrap().is_none());
        let cert = m.contains(&vec_from_i64(&[2, 4])).unwrap().unwrap();
        assert!(m.certificate_is_valid(&vec_from_i64(&[2, 4]), &cert));
        // (3,3) = (1,3) + (2,0)
        assert!(m.contains(&vec_from_i64(&[3, 3])).unwrap().is_some());
        // Not in G at all:
        assert!(m.contains(&vec_from_i64(&[1, 0])).unwrap().is_none());
    }

    #[test]
    fn membership_numerical() {
        let m = AffineMonoid::from_i64(&[&[2], &[3]]).unwrap();
        assert!(m.contains(&vec_from_i64(&[1])).unwrap().is_none());
        for k in [0i64, 2, 3, 4, 5, 6, 7, 11] {
            assert!(m.contains(&vec_from_i64(&[k])).unwrap().is_some(), "{k}");
        }
    }

    #[test]
    fn membership_with_units_absorbs_unit_lattice() {
        let m = AffineMonoid::from_i64(&[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        let cert = m.contains(&vec_from_i64(&[-7, 2])).unwrap().unwrap();
        assert!(m.certificate_is_valid(&vec_from_i64(&[-7, 2]), &cert));
        assert!(m.contains(&vec_from_i64(&[3, -1])).unwrap().is_none());
    }

    #[test]
    fn finite_index_units_are_not_absorbed() {
        // Generators (4,0), (-4,0) span the unit group 4Z x 0, while
        // G ∩ lineality is 2Z x 0; the element (2,0) is not in M.
        let m = AffineMonoid::from_i64(&[&[4, 0], &[-4, 0], &[1, 1], &[-1, 1]]).unwrap();
        assert_eq!(m.units().rank(), 1);
        assert!(m.units().contains(&vec_from_i64(&[4, 0])).unwrap());
        assert!(!m.units().contains(&vec_from_i64(&[2, 0])).unwrap());
        assert!(m
            .saturation_units()
            .contains(&vec_from_i64(&[2, 0]))
            .unwrap());
        assert!(m.contains(&vec_from_i64(&[2, 0])).unwrap().is_none());
        assert!(m.contains(&vec_from_i64(&[-4, 0])).unwrap().is_some());
    }

    #[test]
    fn enumerate_quadrant() {
        let m = AffineMonoid::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        let elems = m.enumerate_up_to(&BigInt::from(2)).unwrap();
        let got: Vec<Vec<BigInt>> = elems.iter().map(|(v, _)| v.clone()).collect();
        let expected: Vec<Vec<BigInt>> = [[0, 0], [0, 1], [1, 0], [0, 2], [1, 1], [2, 0]]
            .iter()
            .map(|v| vec_from_i64(v))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumerate_example1() {
        let m = example1();
        let elems = m.enumerate_up_to(&BigInt::from(4)).unwrap();
        let got: HashSet<Vec<BigInt>> = elems.iter().map(|(v, _)| v.clone()).collect();
        let expected: HashSet<Vec<BigInt>> = [
            [0i64, 0],
            [2, 0],
            [0, 2],
            [1, 3],
            [3, 1],
            [2, 2],
            [4, 0],
            [0, 4],
        ]
        .iter()
        .map(|v| vec_from_i64(v))
        .collect();
        assert_eq!(got, expected);
        for (v, cert) in &elems {
            assert!(m.certificate_is_valid(v, cert));
        }
    }

    #[test]
    fn enumerate_numerical() {
        let m = AffineMonoid::from_i64(&[&[2], &[3]]).unwrap();
        let elems = m.enumerate_up_to(&BigInt::from(4)).unwrap();
        let got: Vec<Vec<BigInt>> = elems.iter().map(|(v, _)| v.clone()).collect();
        assert_eq!(
            got,
            vec![
                vec_from_i64(&[0]),
                vec_from_i64(&[2]),
                vec_from_i64(&[3]),
                vec_from_i64(&[4]),
            ]
        );
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let m = AffineMonoid::from_i64(&[&[2, 0], &[0, 2], &[1, 3], &[3, 1], &[2, 2]]).unwrap();
        assert_eq!(m.minimal_generators().len(), 4);
        assert!(!m.minimal_generators().contains(&vec_from_i64(&[2, 2])));

        let m = AffineMonoid::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(m.minimal_generators().len(), 2);

        let m = AffineMonoid::from_i64(&[&[2], &[3], &[5]]).unwrap();
        assert_eq!(
            m.minimal_generators(),
            &[vec_from_i64(&[2]), vec_from_i64(&[3])]
        );
    }

    #[test]
    fn sum_closure_on_pairs() {
        let m = example1();
        let elems = m.enumerate_up_to(&BigInt::from(6)).unwrap();
        for (a, _) in elems.iter().take(10) {
            for (b, _) in elems.iter().take(10) {
                let s: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                assert!(m.contains(&s).unwrap().is_some());
            }
        }
    }

    #[test]
    fn zero_monoid() {
        let m = AffineMonoid::from_i64(&[&[0, 0]]).unwrap();
        assert_eq!(m.rank(), 0);
        assert!(m.contains(&vec_from_i64(&[0, 0])).unwrap().is_some());
        assert!(m.contains(&vec_from_i64(&[1, 0])).unwrap().is_none());
        assert!(m.minimal_generators().is_empty());
    }

    #[test]
    fn group_monoid_is_its_group() {
        let m = AffineMonoid::from_i64(&[&[1], &[-1]]).unwrap();
        assert!(m.grading().is_group);
        assert!(m.contains(&vec_from_i64(&[-5])).unwrap().is_some());
        let elems = m.enumerate_up_to(&BigInt::from(3)).unwrap();
        assert_eq!(elems.len(), 1); // only the unit coset
    }

    #[test]
    fn rebuilding_from_minimal_generators_preserves_everything() {
        let m = AffineMonoid::from_i64(&[&[2, 0], &[0, 2], &[1, 3], &[3, 1], &[2, 2]]).unwrap();
        let m2 = AffineMonoid::build(m.minimal_generators().to_vec()).unwrap();
        assert_eq!(m.group(), m2.group());
        assert_eq!(m.cone().facet_count(), m2.cone().facet_count());
        let a = m.enumerate_up_to(&BigInt::from(6)).unwrap();
        let b = m2.enumerate_up_to(&BigInt::from(6)).unwrap();
        let av: Vec<_> = a.iter().map(|(v, _)| v.clone()).collect();
        let bv: Vec<_> = b.iter().map(|(v, _)| v.clone()).collect();
        assert_eq!(av, bv);
    }
}
