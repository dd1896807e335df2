//! Decision procedures for Serre's (R1) and normality, the bounded (S2)
//! probe, and assembly of the full analysis report.
//!
//! (R1) is decided twice, by two independent facet-local criteria, and the
//! two verdicts are compared facet by facet; a disagreement is an internal
//! error, never a mathematical outcome.
//!
//! * Criterion A tests that the saturation collapses into the facet
//!   localization: every Hilbert basis element of `M̄` (and every unit of
//!   `M̄`) must lie in `M + Z(M∩F)`.
//! * Criterion B is the lattice-combinatorial form: `Z(M∩F)` must be
//!   saturated in `G ∩ lin(F)` and some generator must take the value 1 on
//!   the primitive support form.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::exactlin::vector::{vec_neg, vec_to_i64};
use crate::ideals::{
    endomorphism_monoid, interior_ideal, quotient_codim_check, r_module_generators,
};
use crate::monoid::AffineMonoid;
use crate::normalization::{
    hilbert_basis, is_normal, saturated_interior_ideal, saturation_module_generators,
};
use crate::oracle::graded_slice_points;
use crate::{Result, ToricError};

/// Per-facet evidence from both (R1) criteria.
#[derive(Clone, Debug)]
pub struct FacetEvidence {
    pub facet_id: usize,
    pub sigma: Vec<BigInt>,
    pub criterion_a: bool,
    /// Element of the test set failing criterion A, if any.
    pub a_witness: Option<Vec<BigInt>>,
    pub criterion_b: bool,
    pub b_lattice_saturated: bool,
    pub b_has_sigma_one: bool,
}

#[derive(Clone, Debug)]
pub struct R1Verdict {
    pub value: bool,
    pub facets: Vec<FacetEvidence>,
}

/// Criterion A per facet: `true` iff every Hilbert basis element of `M̄` and
/// every unit of `M̄` lies in `M + Z(M∩F)`.
pub fn r1_criterion_a(m: &AffineMonoid) -> Result<Vec<(bool, Option<Vec<BigInt>>)>> {
    let hb = hilbert_basis(m);
    let mut test_set: Vec<Vec<BigInt>> = hb.elements.clone();
    for u in hb.unit_basis.basis_rows() {
        test_set.push(u.to_vec());
        test_set.push(vec_neg(u));
    }
    let mut out = Vec::with_capacity(m.cone().facet_count());
    for f in 0..m.cone().facet_count() {
        let mut verdict = (true, None);
        for h in &test_set {
            let coords = m
                .group()
                .coordinates(h)?
                .ok_or_else(|| ToricError::Internal("test element outside G".into()))?;
            if !m.in_facet_localization(f, &coords) {
                verdict = (false, Some(h.clone()));
                break;
            }
        }
        out.push(verdict);
    }
    Ok(out)
}

/// Criterion B per facet: `(verdict, lattice_saturated, has_sigma_one)`.
pub fn r1_criterion_b(m: &AffineMonoid) -> Result<Vec<(bool, bool, bool)>> {
    let mut out = Vec::with_capacity(m.cone().facet_count());
    for f in 0..m.cone().facet_count() {
        let facet_lattice = m.facet_lattice_coords(f);
        let saturated = facet_lattice == facet_lattice.saturate();
        let has_one = m
            .cone()
            .generator_coords()
            .iter()
            .any(|x| m.cone().sigma_value(f, x) == BigInt::from(1));
        out.push((saturated && has_one, saturated, has_one));
    }
    Ok(out)
}

/// Run both criteria, assert facet-wise agreement, and return the shared
/// verdict with the combined evidence.
pub fn check_r1(m: &AffineMonoid) -> Result<R1Verdict> {
    let a = r1_criterion_a(m)?;
    let b = r1_criterion_b(m)?;
    let mut facets = Vec::with_capacity(a.len());
    for (f, ((va, wa), (vb, sat, one))) in a.into_iter().zip(b).enumerate() {
        if va != vb {
            return Err(ToricError::Internal(format!(
                "R1 criteria disagree on facet {f}: A={va}, B={vb}"
            )));
        }
        facets.push(FacetEvidence {
            facet_id: f,
            sigma: m.cone().facets()[f].sigma.clone(),
            criterion_a: va,
            a_witness: wa,
            criterion_b: vb,
            b_lattice_saturated: sat,
            b_has_sigma_one: one,
        });
    }
    Ok(R1Verdict {
        value: facets.iter().all(|f| f.criterion_a),
        facets,
    })
}

/// Outcome of the bounded (S2) probe.  `refuted` is definitive; otherwise
/// the condition merely remained plausible up to the bound.
#[derive(Clone, Debug)]
pub struct S2Outcome {
    pub refuted: bool,
    pub witness: Option<Vec<BigInt>>,
    pub bound: BigInt,
}

/// Default probe depth: enough to reach every module generator of the
/// saturation shifted by one more minimal generator.
fn default_s2_bound(m: &AffineMonoid) -> Result<BigInt> {
    let t = saturation_module_generators(m)?;
    let t_max = t
        .iter()
        .map(|v| m.lambda_of(v).expect("T element in G"))
        .max()
        .unwrap_or_else(BigInt::zero);
    let gen_max = m
        .nonunit_mingens()
        .iter()
        .map(|g| g.lambda.clone())
        .max()
        .unwrap_or_else(BigInt::zero);
    let b = t_max + gen_max;
    Ok(if b.is_zero() { BigInt::from(1) } else { b })
}

const S2_POINT_CAP: usize = 50_000;

/// Search for an element of `M̄ \ M` lying in every facet localization
/// `M + Z(M∩F)`; such an element violates the standard combinatorial (S2)
/// criterion.  The probe never certifies (S2), it only refutes or reports
/// `plausible` together with the bound actually scanned.
pub fn s2_probe(m: &AffineMonoid, bound: Option<&BigInt>) -> Result<S2Outcome> {
    let mut b = match bound {
        Some(b) => b.clone(),
        None => default_s2_bound(m)?,
    };
    if b < BigInt::from(1) {
        b = BigInt::from(1);
    }
    // Shrink until the graded slice is enumerable; the achieved bound is
    // reported so the verdict stays honest.
    let one = BigInt::from(1);
    let points = loop {
        match graded_slice_points(m, &b, Some(S2_POINT_CAP))? {
            Some(p) => break p,
            None => {
                if b == one {
                    break Vec::new();
                }
                b = &b >> 1;
            }
        }
    };
    // Expand the quotient points across the torsion of (G∩lin)/U(M) and
    // keep elements of M̄ \ M.
    let torsion_reps = if m.units() == m.saturation_units() {
        vec![vec![BigInt::zero(); m.ambient_rank()]]
    } else {
        crate::exactlin::quotient(m.saturation_units(), m.units())?.torsion_representatives()
    };
    let mut gaps: Vec<Vec<BigInt>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for p in &points {
        let amb = m.lift_from_chart(p);
        for w in &torsion_reps {
            let shifted: Vec<BigInt> = amb.iter().zip(w).map(|(a, b)| a + b).collect();
            let canon = m.canon_mod_units(&shifted);
            if seen.insert(canon.clone()) && m.contains(&canon)?.is_none() {
                gaps.push(canon);
            }
        }
    }
    gaps.sort_by(|x, y| {
        let lx = m.lambda_of(x).expect("gap in G");
        let ly = m.lambda_of(y).expect("gap in G");
        (lx, x).cmp(&(ly, y))
    });
    for gap in gaps {
        let coords = m
            .group()
            .coordinates(&gap)?
            .ok_or_else(|| ToricError::Internal("gap outside G".into()))?;
        let everywhere = (0..m.cone().facet_count())
            .all(|f| m.in_facet_localization(f, &coords));
        if everywhere {
            return Ok(S2Outcome {
                refuted: true,
                witness: Some(gap),
                bound: b,
            });
        }
    }
    Ok(S2Outcome {
        refuted: false,
        witness: None,
        bound: b,
    })
}

/// Options for `analyze`.
#[derive(Clone, Debug, Default)]
pub struct AnalysisOptions {
    pub name: String,
    /// Overrides the default (S2) probe bound.
    pub s2_bound: Option<i64>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerdictReport {
    pub value: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FacetReport {
    pub facet_id: usize,
    pub sigma: Vec<i64>,
    pub generators_on_facet: Vec<usize>,
    pub criterion_a: bool,
    pub criterion_b: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct R1Report {
    pub value: bool,
    pub exact: bool,
    pub facets: Vec<FacetReport>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct S2Report {
    /// `"refuted"` or `"plausible"`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
    pub bound: i64,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IdealReport {
    pub generators: Vec<Vec<i64>>,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WBarReport {
    pub generators_over_saturation: Vec<Vec<i64>>,
    pub generators_over_monoid: Vec<Vec<i64>>,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CodimReport {
    pub value: bool,
    pub per_facet: Vec<bool>,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EndoReport {
    pub value: bool,
    pub t_inside: Vec<Vec<i64>>,
    pub t_outside: Vec<Vec<i64>>,
    pub exact: bool,
}

/// Wall-clock phase timings; excluded from the JSON serialization so that
/// report output stays byte-identical across runs.
#[derive(Clone, Debug, Default)]
pub struct Timings {
    pub total_ms: u128,
    pub normalization_ms: u128,
    pub r1_ms: u128,
    pub ideals_ms: u128,
    pub s2_ms: u128,
}

/// Structured verdicts with witnesses and exactness flags.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub name: String,
    pub ambient_rank: usize,
    pub rank: usize,
    pub unit_rank: usize,
    pub facet_count: usize,
    pub generator_count: usize,
    pub minimal_generators: Vec<Vec<i64>>,
    pub hilbert_basis: Vec<Vec<i64>>,
    pub saturation_module_generators: Vec<Vec<i64>>,
    pub normal: VerdictReport,
    pub r1: R1Report,
    pub s2_bounded: S2Report,
    pub w_ideal: IdealReport,
    pub w_bar: WBarReport,
    pub codim_check: CodimReport,
    pub endo_check: EndoReport,
    #[serde(skip)]
    pub timings: Timings,
}

fn ints(v: &[BigInt]) -> Result<Vec<i64>> {
    vec_to_i64(v).ok_or_else(|| ToricError::Internal("report coordinate exceeds i64".into()))
}

fn int_rows(vs: &[Vec<BigInt>]) -> Result<Vec<Vec<i64>>> {
    vs.iter().map(|v| ints(v)).collect()
}

/// Run the full pipeline and assemble the report, cross-checking the report
/// invariants (`normal ⟹ r1`, `normal ⟹ s2 not refuted`, criteria
/// agreement inside `check_r1`).
pub fn analyze(m: &AffineMonoid, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let t0 = Instant::now();
    let normal = is_normal(m)?;
    let hb = hilbert_basis(m);
    let t_gens = saturation_module_generators(m)?.to_vec();
    let t_norm = t0.elapsed().as_millis();

    let t1 = Instant::now();
    let r1 = check_r1(m)?;
    let t_r1 = t1.elapsed().as_millis();

    let t2 = Instant::now();
    let w = interior_ideal(m)?;
    let wbar = saturated_interior_ideal(m)?;
    let wbar_over_r = r_module_generators(m, wbar)?;
    let codim = quotient_codim_check(m, &w, &wbar_over_r)?;
    let endo = endomorphism_monoid(m, &wbar_over_r)?;
    let t_ideals = t2.elapsed().as_millis();

    let t3 = Instant::now();
    let s2 = s2_probe(m, opts.s2_bound.map(BigInt::from).as_ref())?;
    let t_s2 = t3.elapsed().as_millis();

    if normal.normal && !r1.value {
        return Err(ToricError::Internal(
            "invariant violated: normal monoid failed R1".into(),
        ));
    }
    if normal.normal && s2.refuted {
        return Err(ToricError::Internal(
            "invariant violated: normal monoid refuted S2".into(),
        ));
    }

    let report = AnalysisReport {
        schema_version: 1,
        name: opts.name.clone(),
        ambient_rank: m.ambient_rank(),
        rank: m.rank(),
        unit_rank: m.units().rank(),
        facet_count: m.cone().facet_count(),
        generator_count: m.generators().len(),
        minimal_generators: int_rows(m.minimal_generators())?,
        hilbert_basis: int_rows(&hb.elements)?,
        saturation_module_generators: int_rows(&t_gens)?,
        normal: VerdictReport {
            value: normal.normal,
            witness: normal.witness.as_deref().map(ints).transpose()?,
            exact: true,
        },
        r1: R1Report {
            value: r1.value,
            exact: true,
            facets: r1
                .facets
                .iter()
                .map(|f| {
                    Ok(FacetReport {
                        facet_id: f.facet_id,
                        sigma: ints(&f.sigma)?,
                        generators_on_facet: m.cone().facets()[f.facet_id]
                            .facet_generators
                            .clone(),
                        criterion_a: f.criterion_a,
                        criterion_b: f.criterion_b,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        },
        s2_bounded: S2Report {
            status: if s2.refuted { "refuted" } else { "plausible" }.into(),
            witness: s2.witness.as_deref().map(ints).transpose()?,
            bound: i64::try_from(&s2.bound)
                .map_err(|_| ToricError::Internal("s2 bound exceeds i64".into()))?,
            exact: s2.refuted,
        },
        w_ideal: IdealReport {
            generators: int_rows(w.generators())?,
            exact: true,
        },
        w_bar: WBarReport {
            generators_over_saturation: int_rows(wbar.generators())?,
            generators_over_monoid: int_rows(wbar_over_r.generators())?,
            exact: true,
        },
        codim_check: CodimReport {
            value: codim.all_facets,
            per_facet: codim.per_facet.clone(),
            exact: true,
        },
        endo_check: EndoReport {
            value: endo.equals_saturation,
            t_inside: int_rows(&endo.t_inside)?,
            t_outside: int_rows(&endo.t_outside)?,
            exact: true,
        },
        timings: Timings {
            total_ms: t0.elapsed().as_millis(),
            normalization_ms: t_norm,
            r1_ms: t_r1,
            ideals_ms: t_ideals,
            s2_ms: t_s2,
        },
    };
    Ok(report)
}

fn fmt_vec(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

fn fmt_rows(vs: &[Vec<i64>]) -> String {
    if vs.is_empty() {
        return "-".into();
    }
    vs.iter()
        .map(|v| fmt_vec(v))
        .collect::<Vec<_>>()
        .join(" ")
}

impl AnalysisReport {
    /// Human-readable rendering used by the CLI text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push(&mut out, format!("monoid {}", self.name));
        push(
            &mut out,
            format!(
                "  ambient rank {}, rank {}, unit rank {}, {} facet(s), {} generator(s)",
                self.ambient_rank,
                self.rank,
                self.unit_rank,
                self.facet_count,
                self.generator_count
            ),
        );
        push(
            &mut out,
            format!("  minimal generators: {}", fmt_rows(&self.minimal_generators)),
        );
        push(
            &mut out,
            format!("  hilbert basis of saturation: {}", fmt_rows(&self.hilbert_basis)),
        );
        push(
            &mut out,
            format!(
                "  saturation module generators: {}",
                fmt_rows(&self.saturation_module_generators)
            ),
        );
        let witness = |w: &Option<Vec<i64>>| match w {
            Some(v) => format!(" (witness {})", fmt_vec(v)),
            None => String::new(),
        };
        push(
            &mut out,
            format!("  normal: {}{}", self.normal.value, witness(&self.normal.witness)),
        );
        push(
            &mut out,
            format!(
                "  r1: {} [criteria A and B agree on {} facet(s)]",
                self.r1.value,
                self.r1.facets.len()
            ),
        );
        push(
            &mut out,
            format!(
                "  s2: {}{} [bound {}]",
                self.s2_bounded.status,
                witness(&self.s2_bounded.witness),
                self.s2_bounded.bound
            ),
        );
        push(
            &mut out,
            format!("  W generators: {}", fmt_rows(&self.w_ideal.generators)),
        );
        push(
            &mut out,
            format!(
                "  W-bar generators over saturation: {}",
                fmt_rows(&self.w_bar.generators_over_saturation)
            ),
        );
        push(
            &mut out,
            format!(
                "  W-bar generators over monoid: {}",
                fmt_rows(&self.w_bar.generators_over_monoid)
            ),
        );
        push(
            &mut out,
            format!(
                "  codim check (W inside W-bar): {} per-facet {:?}",
                self.codim_check.value, self.codim_check.per_facet
            ),
        );
        push(
            &mut out,
            format!(
                "  endomorphism monoid equals saturation: {}",
                self.endo_check.value
            ),
        );
        push(
            &mut out,
            format!(
                "  timings: total {} ms (normalization {}, r1 {}, ideals {}, s2 {})",
                self.timings.total_ms,
                self.timings.normalization_ms,
                self.timings.r1_ms,
                self.timings.ideals_ms,
                self.timings.s2_ms
            ),
        );
        out
    }
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

    #[test]
    fn r1_example1() {
        let m = example1();
        let r1 = check_r1(&m).unwrap();
        assert!(r1.value);
        assert_eq!(r1.facets.len(), 2);
    }

    #[test]
    fn r1_example2() {
        let m = example2();
        assert!(check_r1(&m).unwrap().value);
    }

    #[test]
    fn r1_numerical_fails() {
        let m = AffineMonoid::from_i64(&[&[2], &[3]]).unwrap();
        let r1 = check_r1(&m).unwrap();
        assert!(!r1.value);
        assert!(!r1.facets[0].b_has_sigma_one);
        assert!(r1.facets[0].b_lattice_saturated);
    }

    #[test]
    fn r1_halfplane() {
        let m = AffineMonoid::from_i64(&[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert!(check_r1(&m).unwrap().value);
    }

    #[test]
    fn r1_group_is_vacuous() {
        let m = AffineMonoid::from_i64(&[&[1], &[-1]]).unwrap();
        let r1 = check_r1(&m).unwrap();
        assert!(r1.value);
        assert!(r1.facets.is_empty());
    }

    #[test]
    fn r1_unit_defect_fails_consistently() {
        let m = AffineMonoid::from_i64(&[&[4, 0], &[-4, 0], &[1, 1], &[-1, 1]]).unwrap();
        let r1 = check_r1(&m).unwrap();
        assert!(!r1.value);
    }

    #[test]
    fn s2_probe_examples() {
        let m = example1();
        let s2 = s2_probe(&m, None).unwrap();
        assert!(s2.refuted);
        assert_eq!(s2.witness, Some(vec_from_i64(&[1, 1])));

        let m = example2();
        let s2 = s2_probe(&m, None).unwrap();
        assert!(s2.refuted);
        assert_eq!(s2.witness, Some(vec_from_i64(&[1, 0])));

        let m = AffineMonoid::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(!s2_probe(&m, None).unwrap().refuted);
    }

    #[test]
    fn s2_never_refutes_dimension_one() {
        for gens in [vec![2i64, 3], vec![3, 4, 5], vec![2, 7]] {
            let rows: Vec<&[i64]> = gens.chunks(1).collect();
            let m = AffineMonoid::from_i64(&rows).unwrap();
            assert!(!s2_probe(&m, None).unwrap().refuted, "{gens:?}");
        }
    }

    #[test]
    fn analyze_example1() {
        let m = example1();
        let r = analyze(
            &m,
            &AnalysisOptions {
                name: "example1".into(),
                s2_bound: None,
            },
        )
        .unwrap();
        assert!(!r.normal.value);
        assert_eq!(r.normal.witness, Some(vec![1, 1]));
        assert!(r.r1.value);
        assert_eq!(r.s2_bounded.status, "refuted");
        assert_eq!(r.w_ideal.generators, vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(
            r.w_bar.generators_over_monoid,
            vec![vec![1, 1], vec![2, 2]]
        );
        assert!(r.codim_check.value);
        assert!(r.endo_check.value);
    }

    #[test]
    fn analyze_is_deterministic() {
        let opts = AnalysisOptions {
            name: "example2".into(),
            s2_bound: None,
        };
        let m = example2();
        let a = serde_json::to_string(&analyze(&m, &opts).unwrap()).unwrap();
        let m = example2();
        let b = serde_json::to_string(&analyze(&m, &opts).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
