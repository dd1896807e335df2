//! Sublattices of `Z^n` in canonical Hermite form, quotients, saturation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::vector::vec_is_zero;
use crate::{Result, ToricError};

/// A sublattice of `Z^n`, stored as the canonical row-style Hermite basis.
///
/// Canonicality makes lattice equality plain structural equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    ambient_rank: usize,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl Lattice {
    /// Lattice spanned by the given rows (not necessarily independent).
    pub fn from_rows(ambient_rank: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let (h, _) = IntMatrix::from_rows(ambient_rank, rows).hnf();
        let kept: Vec<Vec<BigInt>> = h
            .row_iter()
            .filter(|r| !vec_is_zero(r))
            .map(|r| r.to_vec())
            .collect();
        let basis = IntMatrix::from_rows(ambient_rank, kept);
        let pivots = (0..basis.rows())
            .map(|i| {
                (0..ambient_rank)
                    .find(|&j| !basis.at(i, j).is_zero())
                    .expect("zero basis row")
            })
            .collect();
        Lattice {
            ambient_rank,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient_rank: usize) -> Self {
        Lattice::from_rows(ambient_rank, Vec::new())
    }

    pub fn full(ambient_rank: usize) -> Self {
        let id = IntMatrix::identity(ambient_rank);
        Lattice::from_rows(ambient_rank, id.row_iter().map(|r| r.to_vec()).collect())
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.basis.row_iter()
    }

    fn check_dim(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.ambient_rank {
            return Err(ToricError::DimensionMismatch {
                expected: self.ambient_rank,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Membership with certificate: the integer coordinates of `v` in the
    /// stored basis, if they exist.
    ///
    /// Back-substitution against the echelon basis: every row below a pivot
    /// has a zero in the pivot column, so each coordinate is forced.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        self.check_dim(v)?;
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (i, &p) in self.pivots.iter().enumerate() {
            let pivot = self.basis.at(i, p);
            let (q, r) = rem[p].div_rem(pivot);
            if !r.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                for j in 0..self.ambient_rank {
                    let x = &rem[j] - &q * self.basis.at(i, j);
                    rem[j] = x;
                }
            }
            coords.push(q);
        }
        Ok(vec_is_zero(&rem).then_some(coords))
    }

    /// Membership without the certificate.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Canonical coset representative of `v` modulo this lattice.
    ///
    /// Reduces the entry at each pivot column into `[0, pivot)`; the result
    /// is constant on cosets, so it doubles as a coset key.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut rem = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let q = rem[p].div_floor(self.basis.at(i, p));
            if !q.is_zero() {
                for j in 0..self.ambient_rank {
                    let x = &rem[j] - &q * self.basis.at(i, j);
                    rem[j] = x;
                }
            }
        }
        rem
    }

    /// Saturation `(Q ⊗ L) ∩ Z^n`.
    ///
    /// From `S = U·B·V` the row span of `B` maps under `V` onto the span of
    /// the diagonal rows; dropping the elementary divisors leaves the first
    /// `rank` rows of `V^{-1}` as a basis of the saturation.
    pub fn saturate(&self) -> Lattice {
        let r = self.rank();
        if r == 0 {
            return self.clone();
        }
        let (_, _, v) = self.basis.snf();
        let v_inv = v
            .inverse_unimodular()
            .expect("SNF transformation must be unimodular");
        let rows = (0..r).map(|i| v_inv.row_vec(i)).collect();
        Lattice::from_rows(self.ambient_rank, rows)
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> Result<bool> {
        for row in self.basis_rows() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Right kernel `{x : A·x = 0}` of an integer matrix, as a saturated lattice.
pub fn kernel_lattice(a: &IntMatrix) -> Lattice {
    let (s, _, v) = a.snf();
    let n = a.cols();
    let r = (0..a.rows().min(n))
        .take_while(|&i| !s.at(i, i).is_zero())
        .count();
    // Columns r.. of V span the kernel; saturated since V is unimodular.
    let rows = (r..n)
        .map(|j| (0..n).map(|i| v.at(i, j).clone()).collect())
        .collect();
    Lattice::from_rows(n, rows)
}

/// The quotient `G / L` of a lattice by a sublattice, with a computable
/// projection whose kernel is exactly `L`.
#[derive(Clone, Debug)]
pub struct QuotientStructure {
    source: Lattice,
    kernel: Lattice,
    /// Full SNF diagonal of the coordinate matrix of `L` in `G` (length = rank L).
    diag: Vec<BigInt>,
    /// Elementary divisors with the trivial ones dropped.
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
    v: IntMatrix,
    v_inv: IntMatrix,
}

/// Image of a source-lattice element in the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientImage {
    /// Residues modulo the elementary divisors (one per kernel basis vector).
    pub torsion: Vec<BigInt>,
    /// Coordinates in the free part.
    pub free: Vec<BigInt>,
}

impl QuotientImage {
    pub fn is_zero(&self) -> bool {
        self.torsion.iter().all(Zero::is_zero) && self.free.iter().all(Zero::is_zero)
    }
}

/// Build the quotient structure for `L ⊆ G`; errors if `L` is not contained.
pub fn quotient(g: &Lattice, l: &Lattice) -> Result<QuotientStructure> {
    if g.ambient_rank() != l.ambient_rank() {
        return Err(ToricError::DimensionMismatch {
            expected: g.ambient_rank(),
            got: l.ambient_rank(),
        });
    }
    let d = g.rank();
    let mut coord_rows = Vec::with_capacity(l.rank());
    for row in l.basis_rows() {
        match g.coordinates(row)? {
            Some(c) => coord_rows.push(c),
            None => {
                return Err(ToricError::NotSublattice {
                    row: row
                        .iter()
                        .map(|x| i64::try_from(x).unwrap_or(i64::MAX))
                        .collect(),
                })
            }
        }
    }
    let c = IntMatrix::from_rows(d, coord_rows);
    let (s, _, v) = c.snf();
    let r = l.rank();
    let diag: Vec<BigInt> = (0..r).map(|i| s.at(i, i).clone()).collect();
    debug_assert!(diag.iter().all(|x| x.is_positive()));
    let invariant_factors = diag.iter().filter(|x| !x.is_one()).cloned().collect();
    let v_inv = v
        .inverse_unimodular()
        .expect("SNF transformation must be unimodular");
    Ok(QuotientStructure {
        source: g.clone(),
        kernel: l.clone(),
        diag,
        invariant_factors,
        free_rank: d - r,
        v,
        v_inv,
    })
}

impl QuotientStructure {
    pub fn source(&self) -> &Lattice {
        &self.source
    }

    pub fn kernel(&self) -> &Lattice {
        &self.kernel
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Project a source element; `None` when `v` is not in the source lattice.
    pub fn project(&self, w: &[BigInt]) -> Result<Option<QuotientImage>> {
        let Some(x) = self.source.coordinates(w)? else {
            return Ok(None);
        };
        let y = self.v.left_mul_vec(&x);
        let r = self.diag.len();
        let torsion = (0..r).map(|i| y[i].mod_floor(&self.diag[i])).collect();
        let free = y[r..].to_vec();
        Ok(Some(QuotientImage { torsion, free }))
    }

    /// `projection(g) = 0` exactly when `g` is in the kernel sublattice.
    pub fn maps_to_zero(&self, w: &[BigInt]) -> Result<bool> {
        Ok(self.project(w)?.is_some_and(|p| p.is_zero()))
    }

    /// Ambient representatives of the full torsion subgroup, free part zero.
    ///
    /// The count is the product of the elementary divisors; callers use this
    /// only for small quotients.
    pub fn torsion_representatives(&self) -> Vec<Vec<BigInt>> {
        let r = self.diag.len();
        let d = self.source.rank();
        let mut reps = Vec::new();
        let mut tuple = vec![BigInt::zero(); r];
        loop {
            let mut y = tuple.clone();
            y.resize(d, BigInt::zero());
            let x = self.v_inv.left_mul_vec(&y);
            // Back to ambient coordinates through the source basis.
            reps.push(self.source.basis().left_mul_vec(&x));
            // Odometer over the residue tuples.
            let mut k = 0;
            loop {
                if k == r {
                    return reps;
                }
                tuple[k] += 1;
                if tuple[k] < self.diag[k] {
                    break;
                }
                tuple[k] = BigInt::zero();
                k += 1;
            }
        }
    }
}
