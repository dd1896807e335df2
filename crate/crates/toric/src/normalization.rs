//! The saturation `M̄ = ZM ∩ R≥0M`: Hilbert basis, normality test, module
//! generators of `M̄` over `M`, and the saturated interior ideal.
//!
//! All saturation computations run in the pointed quotient
//! `G/(G ∩ lineality) ≅ Z^k`, where the cone is full-dimensional and
//! pointed.  The Hilbert basis algorithm is the classical one: place a
//! triangulation on the extreme rays, enumerate the lattice points of each
//! half-open fundamental parallelepiped through the finite quotient group
//! (Smith form), pool them with the rays and reduce the pool to the
//! irreducible elements in one ascending pass.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exactlin::solve::solve_columns;
use crate::exactlin::vector::{vec_dot, vec_is_zero, vec_sub};
use crate::exactlin::{kernel_lattice, quotient, IntMatrix, Lattice};
use crate::ideals::{IdealBase, MonoidIdeal};
use crate::monoid::AffineMonoid;
use crate::{Result, ToricError};

/// The unique minimal generating set of the saturation, modulo its units.
#[derive(Clone, Debug)]
pub struct HilbertBasis {
    /// Irreducible elements of `M̄` modulo units, canonical lifts, sorted.
    pub elements: Vec<Vec<BigInt>>,
    /// Unit group of `M̄`, i.e. `G ∩ lineality`.
    pub unit_basis: Lattice,
}

/// Verdict of the normality test, with a witness in `M̄ \ M` on failure.
#[derive(Clone, Debug)]
pub struct NormalityVerdict {
    pub normal: bool,
    pub witness: Option<Vec<BigInt>>,
}

/// Placing triangulation of the rays (sequential insertion in input order).
///
/// Returns index sets of full-dimensional simplicial subcones covering the
/// cone spanned by the rays.
fn triangulate(k: usize, rays: &[Vec<BigInt>]) -> Vec<Vec<usize>> {
    assert!(k >= 1);
    if k == 1 {
        assert_eq!(rays.len(), 1, "pointed one-dimensional cone has one ray");
        return vec![vec![0]];
    }
    // Greedy initial simplex: the first k linearly independent rays.
    let mut init: Vec<usize> = Vec::new();
    for (i, _) in rays.iter().enumerate() {
        let mut rows: Vec<Vec<BigInt>> = init.iter().map(|&j| rays[j].clone()).collect();
        rows.push(rays[i].clone());
        if IntMatrix::from_rows(k, rows).rank() == init.len() + 1 {
            init.push(i);
            if init.len() == k {
                break;
            }
        }
    }
    assert_eq!(init.len(), k, "rays do not span the space");
    let mut simplices = vec![init.clone()];
    let init_set: HashSet<usize> = init.into_iter().collect();

    for i in 0..rays.len() {
        if init_set.contains(&i) {
            continue;
        }
        // Boundary (k-1)-faces of the current triangulation, with the apex
        // ray of the unique simplex containing each.
        let mut face_map: std::collections::BTreeMap<Vec<usize>, Vec<usize>> =
            std::collections::BTreeMap::new();
        for s in &simplices {
            for omit in 0..k {
                let mut face: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != omit)
                    .map(|(_, &r)| r)
                    .collect();
                face.sort_unstable();
                face_map.entry(face).or_default().push(s[omit]);
            }
        }
        let mut fresh = Vec::new();
        for (face, apexes) in &face_map {
            if apexes.len() != 1 {
                continue; // interior wall
            }
            let rows: Vec<Vec<BigInt>> = face.iter().map(|&j| rays[j].clone()).collect();
            let ker = kernel_lattice(&IntMatrix::from_rows(k, rows));
            assert_eq!(ker.rank(), 1, "boundary face must span a hyperplane");
            let mut h = ker.basis().row_vec(0);
            let apex_val = vec_dot(&h, &rays[apexes[0]]);
            assert!(!apex_val.is_zero());
            if apex_val.is_negative() {
                h = h.iter().map(|x| -x).collect();
            }
            // h points inward; the new ray sees the face when strictly outside.
            if vec_dot(&h, &rays[i]).is_negative() {
                let mut s = face.clone();
                s.push(i);
                s.sort_unstable();
                fresh.push(s);
            }
        }
        simplices.extend(fresh);
    }
    simplices
}

/// Lattice points of the fundamental parallelepiped of a simplicial cone.
///
/// With `shifted = false` the box is `{Σ t_i r_i : 0 <= t_i < 1}`, with
/// `shifted = true` it is `{Σ t_i r_i : 0 < t_i <= 1}`.  Enumeration goes
/// through the quotient group `Z^k / Z{rows}`, whose order is `|det|`.
fn parallelepiped_points(k: usize, rows: &[Vec<BigInt>], shifted: bool) -> Vec<Vec<BigInt>> {
    let r = IntMatrix::from_rows(k, rows.to_vec());
    let (s, _, v) = r.snf();
    let diag: Vec<BigInt> = (0..k).map(|i| s.at(i, i).clone()).collect();
    assert!(
        diag.iter().all(|d| d.is_positive()),
        "simplex rays must be independent"
    );
    let v_inv = v
        .inverse_unimodular()
        .expect("SNF transform must be unimodular");
    let rt = r.transpose();
    let mut points = Vec::new();
    let mut z = vec![BigInt::zero(); k];
    loop {
        let x = v_inv.left_mul_vec(&z);
        let t = solve_columns(&rt, &x).expect("full-rank solve");
        let mut point = x.clone();
        for (i, ti) in t.iter().enumerate() {
            let offset: BigInt = if shifted {
                ti.ceil().to_integer() - 1
            } else {
                ti.floor().to_integer()
            };
            if !offset.is_zero() {
                for (p, rij) in point.iter_mut().zip(&rows[i]) {
                    *p -= &offset * rij;
                }
            }
        }
        debug_assert!({
            let tt = solve_columns(&rt, &point).unwrap();
            tt.iter().all(|c| {
                if shifted {
                    c.is_positive() && *c <= BigRational::from_integer(BigInt::from(1))
                } else {
                    !c.is_negative() && *c < BigRational::from_integer(BigInt::from(1))
                }
            })
        });
        points.push(point);
        // Odometer over the residue tuples.
        let mut i = 0;
        loop {
            if i == k {
                return points;
            }
            z[i] += 1;
            if z[i] < diag[i] {
                break;
            }
            z[i] = BigInt::zero();
            i += 1;
        }
    }
}

fn lift_to_ambient(m: &AffineMonoid, q: &[BigInt]) -> Vec<BigInt> {
    m.lift_from_chart(q)
}

fn canonical_sort(m: &AffineMonoid, items: &mut [Vec<BigInt>]) {
    items.sort_by(|a, b| {
        let la = m.lambda_of(a).expect("element of G");
        let lb = m.lambda_of(b).expect("element of G");
        (la, a).cmp(&(lb, b))
    });
}

fn compute_hilbert_basis(m: &AffineMonoid) -> HilbertBasis {
    let unit_basis = m.saturation_units().clone();
    let k = m.chart.k;
    if k == 0 {
        return HilbertBasis {
            elements: Vec::new(),
            unit_basis,
        };
    }
    let rays = &m.chart.rays;
    let simplices = triangulate(k, rays);
    let mut pool: HashSet<Vec<BigInt>> = HashSet::new();
    for s in &simplices {
        let rows: Vec<Vec<BigInt>> = s.iter().map(|&j| rays[j].clone()).collect();
        for p in parallelepiped_points(k, &rows, false) {
            if !vec_is_zero(&p) {
                pool.insert(p);
            }
        }
    }
    for r in rays {
        pool.insert(r.clone());
    }
    let mut pool: Vec<Vec<BigInt>> = pool.into_iter().collect();
    pool.sort_by(|a, b| {
        (m.chart.lambda_bar_of(a), a).cmp(&(m.chart.lambda_bar_of(b), b))
    });
    // Ascending reduction: a reducible element is always witnessed by a
    // strictly smaller candidate, so one pass suffices.
    let mut kept: Vec<Vec<BigInt>> = Vec::new();
    for h in pool {
        let reducible = kept.iter().any(|h2| m.chart.in_cone(&vec_sub(&h, h2)));
        if !reducible {
            kept.push(h);
        }
    }
    debug_assert!(kept.iter().all(|h| kept
        .iter()
        .filter(|h2| *h2 != h)
        .all(|h2| !m.chart.in_cone(&vec_sub(h, h2)))));
    let mut elements: Vec<Vec<BigInt>> = kept.iter().map(|q| lift_to_ambient(m, q)).collect();
    canonical_sort(m, &mut elements);
    HilbertBasis {
        elements,
        unit_basis,
    }
}

/// The Hilbert basis of `M̄ = G ∩ C`, cached on the monoid.
pub fn hilbert_basis(m: &AffineMonoid) -> &HilbertBasis {
    m.hb_cache.get_or_init(|| compute_hilbert_basis(m))
}

/// Normality of `M`: every Hilbert basis element of `M̄` must lie in `M`,
/// and the unit group of `M̄` must already be the unit group of `M`.
pub fn is_normal(m: &AffineMonoid) -> Result<NormalityVerdict> {
    let hb = hilbert_basis(m);
    for h in &hb.elements {
        if m.contains(h)?.is_none() {
            return Ok(NormalityVerdict {
                normal: false,
                witness: Some(h.clone()),
            });
        }
    }
    for row in hb.unit_basis.basis_rows() {
        if !m.units().contains(row)? {
            return Ok(NormalityVerdict {
                normal: false,
                witness: Some(row.to_vec()),
            });
        }
    }
    Ok(NormalityVerdict {
        normal: true,
        witness: None,
    })
}

/// Smallest positive multiple of each chart ray that is the projection of a
/// monoid generator.  Every extreme ray of the cone carries at least one
/// generator, so this is total.
fn ray_generator_multiples(m: &AffineMonoid) -> Result<Vec<BigInt>> {
    let rays = &m.chart.rays;
    let mut mults: Vec<Option<BigInt>> = vec![None; rays.len()];
    for x in m.cone().generator_coords() {
        let p = m.chart.project(x);
        if vec_is_zero(&p) {
            continue;
        }
        for (j, r) in rays.iter().enumerate() {
            let idx = r
                .iter()
                .position(|c| !c.is_zero())
                .expect("primitive ray is nonzero");
            if r[idx].is_zero() {
                continue;
            }
            let (c, rem) = num_integer::Integer::div_rem(&p[idx], &r[idx]);
            if !rem.is_zero() || !c.is_positive() {
                continue;
            }
            let scaled: Vec<BigInt> = r.iter().map(|v| v * &c).collect();
            if scaled == p && mults[j].as_ref().is_none_or(|old| &c < old) {
                mults[j] = Some(c);
            }
        }
    }
    mults
        .into_iter()
        .map(|o| o.ok_or_else(|| ToricError::Internal("extreme ray without generator".into())))
        .collect()
}

fn compute_saturation_module_generators(m: &AffineMonoid) -> Result<Vec<Vec<BigInt>>> {
    let k = m.chart.k;
    let zero = vec![BigInt::zero(); m.ambient_rank()];
    // Candidates in quotient coordinates.
    let mut quotient_cands: HashSet<Vec<BigInt>> = HashSet::new();
    if k == 0 {
        quotient_cands.insert(Vec::new());
    } else {
        let rays = &m.chart.rays;
        let ray_mults = ray_generator_multiples(m)?;
        let simplices = triangulate(k, rays);
        for s in &simplices {
            let rows: Vec<Vec<BigInt>> = s.iter().map(|&j| rays[j].clone()).collect();
            let box_points = parallelepiped_points(k, &rows, false);
            // Odometer over ray multiples below the generator multiple.
            let caps: Vec<BigInt> = s.iter().map(|&j| ray_mults[j].clone()).collect();
            let mut tuple = vec![BigInt::zero(); s.len()];
            loop {
                for p in &box_points {
                    let mut cand = p.clone();
                    for (ti, row) in tuple.iter().zip(&rows) {
                        if !ti.is_zero() {
                            for (c, r) in cand.iter_mut().zip(row) {
                                *c += ti * r;
                            }
                        }
                    }
                    quotient_cands.insert(cand);
                }
                let mut i = 0;
                loop {
                    if i == s.len() {
                        break;
                    }
                    tuple[i] += 1;
                    if tuple[i] < caps[i] {
                        break;
                    }
                    tuple[i] = BigInt::zero();
                    i += 1;
                }
                if i == s.len() {
                    break;
                }
            }
        }
    }
    // Expand across the torsion of (G ∩ lineality) / U(M), then keep
    // canonical representatives modulo U(M).
    let torsion_reps = if m.units() == m.saturation_units() {
        vec![zero.clone()]
    } else {
        quotient(m.saturation_units(), m.units())?.torsion_representatives()
    };
    let mut cands: HashSet<Vec<BigInt>> = HashSet::new();
    for q in &quotient_cands {
        let amb = lift_to_ambient(m, q);
        for w in &torsion_reps {
            let shifted: Vec<BigInt> = amb.iter().zip(w).map(|(a, b)| a + b).collect();
            cands.insert(m.canon_mod_units(&shifted));
        }
    }
    // Keep exactly the elements of M̄ that stay outside M̄ after removing any
    // single nonunit minimal generator; those are the minimal module
    // generators of M̄ over M.
    let mut kept = Vec::new();
    for cand in cands {
        let coords = m
            .group()
            .coordinates(&cand)?
            .ok_or_else(|| ToricError::Internal("candidate outside G".into()))?;
        debug_assert!(m.cone().contains_coords(&coords));
        let reducible = m.nonunit_mingens().iter().any(|g| {
            let diff = vec_sub(&coords, &g.coords);
            m.cone().contains_coords(&diff)
        });
        if !reducible {
            kept.push(cand);
        }
    }
    canonical_sort(m, &mut kept);
    Ok(kept)
}

/// Minimal `T ⊆ M̄` with `M̄ = ∪_{t∈T} (t + M)`, canonical modulo `U(M)`.
///
/// Exact: candidates come from the fundamental parallelepipeds shifted by
/// ray-generator multiples, which provably cover every module generator, and
/// each candidate is tested by one-generator descent.
pub fn saturation_module_generators(m: &AffineMonoid) -> Result<&[Vec<BigInt>]> {
    if let Some(t) = m.sat_module_cache.get() {
        return Ok(t);
    }
    let t = compute_saturation_module_generators(m)?;
    Ok(m.sat_module_cache.get_or_init(|| t))
}

fn compute_saturated_interior_ideal(m: &AffineMonoid) -> Result<MonoidIdeal> {
    if m.rank() == 0 {
        return Err(ToricError::ZeroDimensional);
    }
    let k = m.chart.k;
    if k == 0 {
        // Laurent case: no facets, the relative interior is the whole span.
        return Ok(MonoidIdeal::new(
            IdealBase::Saturation,
            vec![vec![BigInt::zero(); m.ambient_rank()]],
            true,
        ));
    }
    let rays = &m.chart.rays;
    let simplices = triangulate(k, rays);
    let mut cands: HashSet<Vec<BigInt>> = HashSet::new();
    for s in &simplices {
        let rows: Vec<Vec<BigInt>> = s.iter().map(|&j| rays[j].clone()).collect();
        for p in parallelepiped_points(k, &rows, true) {
            debug_assert!(m.chart.in_relint(&p));
            if m.chart.in_relint(&p) {
                cands.insert(p);
            }
        }
    }
    let mut cands: Vec<Vec<BigInt>> = cands.into_iter().collect();
    cands.sort_by(|a, b| (m.chart.lambda_bar_of(a), a).cmp(&(m.chart.lambda_bar_of(b), b)));
    let hb_q: Vec<Vec<BigInt>> = hilbert_basis(m)
        .elements
        .iter()
        .map(|h| {
            let coords = m.group().coordinates(h).unwrap().expect("HB element in G");
            m.chart.project(&coords)
        })
        .collect();
    // g is a generator of the M̄-module unless g - h stays interior for some
    // Hilbert basis element h.
    let mut kept: Vec<Vec<BigInt>> = Vec::new();
    for g in cands {
        let reducible = hb_q.iter().any(|h| m.chart.in_relint(&vec_sub(&g, h)));
        if !reducible {
            kept.push(g);
        }
    }
    let mut generators: Vec<Vec<BigInt>> = kept.iter().map(|q| lift_to_ambient(m, q)).collect();
    canonical_sort(m, &mut generators);
    Ok(MonoidIdeal::new(IdealBase::Saturation, generators, true))
}

/// The saturated interior ideal `W̄_R`: minimal generators over `M̄` of
/// `{g ∈ M̄ : g ∈ relint(C)}`.
pub fn saturated_interior_ideal(m: &AffineMonoid) -> Result<&MonoidIdeal> {
    if let Some(w) = m.wbar_cache.get() {
        return Ok(w);
    }
    let w = compute_saturated_interior_ideal(m)?;
    Ok(m.wbar_cache.get_or_init(|| w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::vector::vec_from_i64;

    fn example1() -> AffineMonoid {
        AffineMonoid::from_i64(&[&[2, 0], &[0, 2], &[1, 3], &[3, 1]]).unwrap()
    }

    fn example2() -> AffineMonoid {
        AffineMonoid::from_i64(&[&[0, 1], &[2, 0], &[3, 0], &[1, 1]]).unwrap()
    }

    fn vv(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| vec_from_i64(r)).collect()
    }

    #[test]
    fn hilbert_basis_example1() {
        let m = example1();
        let hb = hilbert_basis(&m);
        assert_eq!(hb.elements, vv(&[&[0, 2], &[1, 1], &[2, 0]]));
    }

    #[test]
    fn hilbert_basis_numerical() {
        let m = AffineMonoid::from_i64(&[&[2], &[3]]).unwrap();
        let hb = hilbert_basis(&m);
        assert_eq!(hb.elements, vv(&[&[1]]));
    }

    #[test]
    fn hilbert_basis_cusp() {
        let m = AffineMonoid::from_i64(&[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]).unwrap();
        let hb = hilbert_basis(&m);
        assert_eq!(
            hb.elements,
            vv(&[&[0, 3], &[1, 2], &[2, 1], &[3, 0]])
        );
    }

    #[test]
    fn normality_verdicts() {
        let m = example1();
        let v = is_normal(&m).unwrap();
        assert!(!v.normal);
        assert_eq!(v.witness, Some(vec_from_i64(&[1, 1])));

        let m = example2();
        let v = is_normal(&m).unwrap();
        assert!(!v.normal);
        assert_eq!(v.witness, Some(vec_from_i64(&[1, 0])));

        let m = AffineMonoid::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(is_normal(&m).unwrap().normal);
    }

    #[test]
    fn normality_detects_unit_defect() {
        // Units of M are 4Z x 0 but G ∩ lineality is 2Z x 0.
        let m = AffineMonoid::from_i64(&[&[4, 0], &[-4, 0], &[1, 1], &[-1, 1]]).unwrap();
        let v = is_normal(&m).unwrap();
        assert!(!v.normal);
        let w = v.witness.unwrap();
        assert!(m.saturation_units().contains(&w).unwrap());
        assert!(m.contains(&w).unwrap().is_none());
    }

    #[test]
    fn saturation_generators_example1() {
        let m = example1();
        let t = saturation_module_generators(&m).unwrap();
        assert_eq!(t, vv(&[&[0, 0], &[1, 1]]).as_slice());
    }

    #[test]
    fn saturation_generators_example2() {
        let m = example2();
        let t = saturation_module_generators(&m).unwrap();
        assert_eq!(t, vv(&[&[0, 0], &[1, 0]]).as_slice());
    }

    #[test]
    fn saturation_generators_normal_monoid() {
        let m = AffineMonoid::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        let t = saturation_module_generators(&m).unwrap();
        assert_eq!(t, vv(&[&[0, 0]]).as_slice());
    }

    #[test]
    fn saturation_generators_numerical() {
        let m = AffineMonoid::from_i64(&[&[3], &[4], &[5]]).unwrap();
        let t = saturation_module_generators(&m).unwrap();
        assert_eq!(t, vv(&[&[0], &[1], &[2]]).as_slice());
    }

    #[test]
    fn saturation_generators_cover(){
        // Every enumerated element of M̄ up to level 6 lies in some t + M.
        for gens in [
            vec![vec![2i64, 0], vec![0, 2], vec![1, 3], vec![3, 1]],
            vec![vec![0, 1], vec![2, 0], vec![3, 0], vec![1, 1]],
            vec![vec![2], vec![3]],
        ] {
            let rows: Vec<&[i64]> = gens.iter().map(|v| v.as_slice()).collect();
            let m = AffineMonoid::from_i64(&rows).unwrap();
            let t = saturation_module_generators(&m).unwrap().to_vec();
            let pts = crate::oracle::saturation_points_up_to(&m, &BigInt::from(6)).unwrap();
            for p in &pts {
                let covered = t.iter().any(|ti| {
                    let diff = vec_sub(p, ti);
                    m.contains(&diff).map(|c| c.is_some()).unwrap_or(false)
                });
                assert!(covered, "{p:?} not covered");
            }
            for ti in &t[1..] {
                assert!(m.contains(ti).unwrap().is_none(), "{ti:?} should be a gap");
            }
        }
    }

    #[test]
    fn wbar_example1() {
        let m = example1();
        let w = saturated_interior_ideal(&m).unwrap();
        assert_eq!(w.generators(), vv(&[&[1, 1]]).as_slice());
    }

    #[test]
    fn wbar_quadrant_and_numerical() {
        let m = AffineMonoid::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        let w = saturated_interior_ideal(&m).unwrap();
        assert_eq!(w.generators(), vv(&[&[1, 1]]).as_slice());

        let m = AffineMonoid::from_i64(&[&[2], &[3]]).unwrap();
        let w = saturated_interior_ideal(&m).unwrap();
        assert_eq!(w.generators(), vv(&[&[1]]).as_slice());
    }

    #[test]
    fn wbar_zero_dimensional_errors() {
        let m = AffineMonoid::from_i64(&[&[0, 0]]).unwrap();
        assert!(saturated_interior_ideal(&m).is_err());
    }

    #[test]
    fn triangulation_of_square_cone() {
        // Cone over a square: rays e1, e1+e2, e1+e3, e1+e2+e3.
        let rays = vec![
            vec_from_i64(&[1, 0, 0]),
            vec_from_i64(&[1, 1, 0]),
            vec_from_i64(&[1, 0, 1]),
            vec_from_i64(&[1, 1, 1]),
        ];
        let t = triangulate(3, &rays);
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn parallelepiped_counts_match_determinant() {
        let rows = vec![vec_from_i64(&[0, 1]), vec_from_i64(&[2, -1])];
        let pts = parallelepiped_points(2, &rows, false);
        assert_eq!(pts.len(), 2);
        let pts = parallelepiped_points(2, &rows, true);
        assert_eq!(pts.len(), 2);
        assert!(pts.iter().all(|p| !vec_is_zero(p)));
    }
}
