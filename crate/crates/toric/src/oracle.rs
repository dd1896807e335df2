//! Independent brute-force reference implementations.
//!
//! These are the oracles the differential harness compares the production
//! algorithms against, so they deliberately avoid those code paths:
//! saturation points come from a bounding-box scan of the graded slice
//! (bounds from the vertices of the homogenized polytope), monoid points
//! from a closure walk over the generators, and irreducibility or
//! minimality from the direct pairwise definitions.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::cone::dual_rays;
use crate::exactlin::vector::{vec_add, vec_is_zero, vec_sub};
use crate::monoid::AffineMonoid;
use crate::{Result, ToricError};

/// Lattice points of `{y in Z^k : sigma_bar(y) >= 0, lambda_bar(y) <= bound}`
/// in the pointed quotient, i.e. the elements of `M̄` modulo its units with
/// grading value at most `bound`.
///
/// Returns `None` when the bounding box exceeds `cap` points.  Points are
/// sorted by (grading value, lexicographic).
pub fn graded_slice_points(
    m: &AffineMonoid,
    bound: &BigInt,
    cap: Option<usize>,
) -> Result<Option<Vec<Vec<BigInt>>>> {
    if bound.is_negative() {
        return Err(ToricError::NegativeBound);
    }
    let k = m.chart.k;
    if k == 0 {
        return Ok(Some(vec![Vec::new()]));
    }
    // Homogenize: rays of {(y,s) : sigma(y) >= 0, bound*s - lambda(y) >= 0,
    // s >= 0} with s > 0 are exactly the polytope's vertices.
    let mut constraints: Vec<Vec<BigInt>> = Vec::new();
    for s in &m.chart.sigma_bar {
        let mut c = s.clone();
        c.push(BigInt::zero());
        constraints.push(c);
    }
    let mut lam: Vec<BigInt> = m.chart.lambda_bar.iter().map(|x| -x).collect();
    lam.push(bound.clone());
    constraints.push(lam);
    let mut last = vec![BigInt::zero(); k];
    last.push(BigInt::from(1));
    constraints.push(last);
    let dual = dual_rays(k + 1, &constraints);
    if dual.lineality.rank() != 0 {
        return Err(ToricError::Internal(
            "graded slice must be a polytope (grading not positive?)".into(),
        ));
    }
    let mut lo = vec![BigInt::zero(); k];
    let mut hi = vec![BigInt::zero(); k];
    for ray in &dual.rays {
        let s = &ray[k];
        if !s.is_positive() {
            return Err(ToricError::Internal(
                "graded slice has a recession direction".into(),
            ));
        }
        for j in 0..k {
            // floor/ceil of ray[j] / s
            let f = ray[j].div_floor(s);
            let c = -(-&ray[j]).div_floor(s);
            if f < lo[j] {
                lo[j] = f;
            }
            if c > hi[j] {
                hi[j] = c;
            }
        }
    }
    let mut volume: usize = 1;
    for j in 0..k {
        let width = &hi[j] - &lo[j] + 1;
        let w = usize::try_from(&width).unwrap_or(usize::MAX);
        volume = volume.saturating_mul(w);
    }
    if let Some(cap) = cap {
        if volume > cap {
            return Ok(None);
        }
    }
    let mut points = Vec::new();
    let mut y = lo.clone();
    loop {
        if m.chart.in_cone(&y) && m.chart.lambda_bar_of(&y) <= *bound {
            points.push(y.clone());
        }
        let mut j = 0;
        loop {
            if j == k {
                points.sort_by(|a, b| {
                    (m.chart.lambda_bar_of(a), a).cmp(&(m.chart.lambda_bar_of(b), b))
                });
                return Ok(Some(points));
            }
            y[j] += 1;
            if y[j] <= hi[j] {
                break;
            }
            y[j] = lo[j].clone();
            j += 1;
        }
    }
}

fn lift(m: &AffineMonoid, q: &[BigInt]) -> Vec<BigInt> {
    m.lift_from_chart(q)
}

fn canonical_sort(m: &AffineMonoid, items: &mut [Vec<BigInt>]) {
    items.sort_by(|a, b| {
        let la = m.lambda_of(a).expect("element of G");
        let lb = m.lambda_of(b).expect("element of G");
        (la, a).cmp(&(lb, b))
    });
}

/// Elements of `M̄` modulo units up to the grading bound, as canonical
/// ambient lifts.
pub fn saturation_points_up_to(m: &AffineMonoid, bound: &BigInt) -> Result<Vec<Vec<BigInt>>> {
    let pts = graded_slice_points(m, bound, None)?
        .expect("uncapped enumeration always returns points");
    let mut out: Vec<Vec<BigInt>> = pts.iter().map(|q| lift(m, q)).collect();
    canonical_sort(m, &mut out);
    Ok(out)
}

/// Elements of `M` modulo `U(M)` up to the grading bound, computed by a
/// closure walk from zero over the minimal generators.
pub fn monoid_points_up_to(m: &AffineMonoid, bound: &BigInt) -> Result<Vec<Vec<BigInt>>> {
    if bound.is_negative() {
        return Err(ToricError::NegativeBound);
    }
    let zero = vec![BigInt::zero(); m.ambient_rank()];
    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    let mut queue: VecDeque<Vec<BigInt>> = VecDeque::new();
    seen.insert(m.canon_mod_units(&zero));
    queue.push_back(m.canon_mod_units(&zero));
    while let Some(v) = queue.pop_front() {
        for g in m.minimal_generators() {
            let w = m.canon_mod_units(&vec_add(&v, g));
            if seen.contains(&w) {
                continue;
            }
            if m.lambda_of(&w)? > *bound {
                continue;
            }
            seen.insert(w.clone());
            queue.push_back(w);
        }
    }
    let mut out: Vec<Vec<BigInt>> = seen.into_iter().collect();
    canonical_sort(m, &mut out);
    Ok(out)
}

/// Brute-force irreducible elements of `M̄` up to the bound: nonzero
/// elements that are not the sum of two nonzero enumerated elements.
pub fn brute_force_hilbert(m: &AffineMonoid, bound: &BigInt) -> Result<Vec<Vec<BigInt>>> {
    let pts = graded_slice_points(m, bound, None)?
        .expect("uncapped enumeration always returns points");
    let set: HashSet<Vec<BigInt>> = pts.iter().cloned().collect();
    let mut irreducible = Vec::new();
    for h in &pts {
        if vec_is_zero(h) {
            continue;
        }
        let mut splits = false;
        for p in &pts {
            if vec_is_zero(p) || p == h {
                continue;
            }
            let q = vec_sub(h, p);
            if !vec_is_zero(&q) && set.contains(&q) {
                splits = true;
                break;
            }
        }
        if !splits {
            irreducible.push(lift(m, h));
        }
    }
    canonical_sort(m, &mut irreducible);
    Ok(irreducible)
}

/// Brute-force minimal generators of the interior set `M ∩ relint(C)` up to
/// the bound: interior monoid points not reachable from a smaller interior
/// point by adding a monoid element.
pub fn brute_force_interior_generators(
    m: &AffineMonoid,
    bound: &BigInt,
) -> Result<Vec<Vec<BigInt>>> {
    let mpts = monoid_points_up_to(m, bound)?;
    let mset: HashSet<Vec<BigInt>> = mpts.iter().cloned().collect();
    let mut interior: Vec<Vec<BigInt>> = Vec::new();
    for v in &mpts {
        let coords = m
            .group()
            .coordinates(v)?
            .ok_or_else(|| ToricError::Internal("monoid point outside G".into()))?;
        if m.cone().relint_contains_coords(&coords) {
            interior.push(v.clone());
        }
    }
    let iset: HashSet<Vec<BigInt>> = interior.iter().cloned().collect();
    let mut minimal = Vec::new();
    for w in &interior {
        let mut reducible = false;
        for w2 in &iset {
            if w2 == w {
                continue;
            }
            let diff = m.canon_mod_units(&vec_sub(w, w2));
            if mset.contains(&diff) {
                reducible = true;
                break;
            }
        }
        if !reducible {
            minimal.push(w.clone());
        }
    }
    canonical_sort(m, &mut minimal);
    Ok(minimal)
}

/// Test helper: the support-form values of an ambient element of `G`.
pub fn sigma_profile(m: &AffineMonoid, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    Ok(m.group().coordinates(v)?.map(|c| m.cone().sigma_values(&c)))
}

/// Convexity fact used throughout: interior plus cone stays interior.
pub fn relint_sum_stays_interior(m: &AffineMonoid, a: &[BigInt], b: &[BigInt]) -> Result<bool> {
    let (Some(ca), Some(cb)) = (m.group().coordinates(a)?, m.group().coordinates(b)?) else {
        return Ok(false);
    };
    if !m.cone().relint_contains_coords(&ca) || !m.cone().contains_coords(&cb) {
        return Ok(false);
    }
    let sum: Vec<BigInt> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
    Ok(m.cone().relint_contains_coords(&sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::vector::vec_from_i64;

    #[test]
    fn slice_points_quadrant() {
        let m = AffineMonoid::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        let pts = graded_slice_points(&m, &BigInt::from(2), None)
            .unwrap()
            .unwrap();
        assert_eq!(pts.len(), 6);
    }

    #[test]
    fn slice_points_respect_cap() {
        let m = AffineMonoid::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(graded_slice_points(&m, &BigInt::from(100), Some(10))
            .unwrap()
            .is_none());
    }

    #[test]
    fn saturation_points_parity() {
        let m = AffineMonoid::from_i64(&[&[2, 0], &[0, 2], &[1, 3], &[3, 1]]).unwrap();
        let pts = saturation_points_up_to(&m, &BigInt::from(2)).unwrap();
        // Parity-even points of the quadrant with x+y <= 2.
        assert_eq!(
            pts,
            vec![
                vec_from_i64(&[0, 0]),
                vec_from_i64(&[0, 2]),
                vec_from_i64(&[1, 1]),
                vec_from_i64(&[2, 0]),
            ]
        );
    }

    #[test]
    fn monoid_points_skip_gaps() {
        let m = AffineMonoid::from_i64(&[&[2], &[3]]).unwrap();
        let pts = monoid_points_up_to(&m, &BigInt::from(5)).unwrap();
        assert_eq!(
            pts,
            vec![
                vec_from_i64(&[0]),
                vec_from_i64(&[2]),
                vec_from_i64(&[3]),
                vec_from_i64(&[4]),
                vec_from_i64(&[5]),
            ]
        );
    }

    #[test]
    fn brute_hilbert_matches_known() {
        let m = AffineMonoid::from_i64(&[&[2, 0], &[0, 2], &[1, 3], &[3, 1]]).unwrap();
        let hb = brute_force_hilbert(&m, &BigInt::from(6)).unwrap();
        assert_eq!(
            hb,
            vec![
                vec_from_i64(&[0, 2]),
                vec_from_i64(&[1, 1]),
                vec_from_i64(&[2, 0]),
            ]
        );
    }

    #[test]
    fn brute_interior_matches_known() {
        let m = AffineMonoid::from_i64(&[&[0, 1], &[2, 0], &[3, 0], &[1, 1]]).unwrap();
        let w = brute_force_interior_generators(&m, &BigInt::from(6)).unwrap();
        assert_eq!(w, vec![vec_from_i64(&[1, 1]), vec_from_i64(&[2, 1])]);
    }

    #[test]
    fn convexity_spot_checks() {
        let m = AffineMonoid::from_i64(&[&[2, 0], &[0, 2], &[1, 3], &[3, 1]]).unwrap();
        assert!(relint_sum_stays_interior(
            &m,
            &vec_from_i64(&[1, 1]),
            &vec_from_i64(&[2, 0])
        )
        .unwrap());
        assert!(!relint_sum_stays_interior(
            &m,
            &vec_from_i64(&[2, 0]),
            &vec_from_i64(&[0, 2])
        )
        .unwrap());
    }
}
