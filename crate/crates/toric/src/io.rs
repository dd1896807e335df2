//! Ingestion of monoid description files.
//!
//! The only input format is JSON:
//! `{"name": ..., "ambient_rank": n, "generators": [[...], ...]}` with an
//! optional `schema_version` (must be 1), plus optional corpus fields
//! `expected` and `provenance`.  Unknown fields are rejected.

use num_bigint::BigInt;
use serde::Deserialize;

use crate::exactlin::vector::vec_from_i64;
use crate::monoid::AffineMonoid;
use crate::{Result, ToricError};

/// Partial expectations attached to a corpus entry; every present field must
/// match the analysis output exactly.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedBlock {
    pub normal: Option<bool>,
    pub normal_witness: Option<Vec<i64>>,
    pub r1: Option<bool>,
    /// `"refuted"` or `"plausible"`.
    pub s2_status: Option<String>,
    pub s2_witness: Option<Vec<i64>>,
    pub hilbert_basis: Option<Vec<Vec<i64>>>,
    pub saturation_module_generators: Option<Vec<Vec<i64>>>,
    pub w_generators: Option<Vec<Vec<i64>>>,
    pub w_bar_over_saturation: Option<Vec<Vec<i64>>>,
    pub w_bar_over_monoid: Option<Vec<Vec<i64>>>,
    pub codim_check: Option<bool>,
    pub endo_check: Option<bool>,
}

/// A monoid description file, optionally carrying corpus expectations.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidFile {
    #[serde(default)]
    pub schema_version: Option<u32>,
    pub name: String,
    pub ambient_rank: usize,
    pub generators: Vec<Vec<i64>>,
    #[serde(default)]
    pub expected: Option<ExpectedBlock>,
    #[serde(default)]
    pub provenance: Option<String>,
}

/// Parse and strictly validate a monoid description.
pub fn parse_monoid_file(text: &str) -> Result<MonoidFile> {
    let file: MonoidFile =
        serde_json::from_str(text).map_err(|e| ToricError::InvalidInput(e.to_string()))?;
    if let Some(v) = file.schema_version {
        if v != 1 {
            return Err(ToricError::InvalidInput(format!(
                "unsupported schema_version {v}"
            )));
        }
    }
    if file.generators.is_empty() {
        return Err(ToricError::InvalidInput(
            "generator list must be nonempty".into(),
        ));
    }
    for g in &file.generators {
        if g.len() != file.ambient_rank {
            return Err(ToricError::InvalidInput(format!(
                "generator {:?} does not match ambient_rank {}",
                g, file.ambient_rank
            )));
        }
    }
    Ok(file)
}

/// Build the monoid described by a parsed file.
pub fn monoid_from_file(file: &MonoidFile) -> Result<AffineMonoid> {
    let gens: Vec<Vec<BigInt>> = file.generators.iter().map(|g| vec_from_i64(g)).collect();
    AffineMonoid::build(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_file() {
        let f = parse_monoid_file(
            r#"{"name": "nn2", "ambient_rank": 2, "generators": [[1,0],[0,1]]}"#,
        )
        .unwrap();
        assert_eq!(f.name, "nn2");
        let m = monoid_from_file(&f).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rejects_unknown_fields_and_bad_shapes() {
        assert!(parse_monoid_file(
            r#"{"name": "x", "ambient_rank": 2, "generators": [[1,0]], "extra": 1}"#
        )
        .is_err());
        assert!(parse_monoid_file(
            r#"{"name": "x", "ambient_rank": 2, "generators": [[1,0,0]]}"#
        )
        .is_err());
        assert!(parse_monoid_file(
            r#"{"name": "x", "ambient_rank": 2, "generators": []}"#
        )
        .is_err());
        assert!(parse_monoid_file(
            r#"{"schema_version": 2, "name": "x", "ambient_rank": 1, "generators": [[1]]}"#
        )
        .is_err());
    }

    #[test]
    fn parses_expected_block() {
        let f = parse_monoid_file(
            r#"{
                "schema_version": 1,
                "name": "example",
                "ambient_rank": 1,
                "generators": [[2],[3]],
                "expected": {"normal": false, "r1": false},
                "provenance": "derived"
            }"#,
        )
        .unwrap();
        let e = f.expected.unwrap();
        assert_eq!(e.normal, Some(false));
        assert_eq!(e.r1, Some(false));
    }
}
