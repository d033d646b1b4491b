//! Exact dense-semantics linear algebra over Q(i).
//!
//! Rank, kernel and subspace arithmetic (span, sum, intersection,
//! containment, quotient dimension). Rows are stored sparsely because the
//! evaluation and spanning matrices downstream are mostly structured zeros,
//! but the contract is that of an ordinary dense matrix over Q(i).
//!
//! Elimination is fraction-free: rows are scaled to Gaussian-integer form,
//! combined by cross-multiplication, and kept primitive by dividing out the
//! Z[i]-content; the only rational division happens once at the end when a
//! reduced row-echelon basis is normalized to pivot 1. Pivoting is
//! deterministic: first nonzero column, ties broken by the smallest integer
//! norm and then by original row order, so identical inputs give
//! bit-identical results on every platform.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::exactnum::{BigRat, GaussRat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("containment violation: {context}")]
    ContainmentViolation { context: String },
}

/// Sparse row: strictly increasing column indices with nonzero entries.
pub type SparseVec = Vec<(u32, GaussRat)>;

// ---------------------------------------------------------------------------
// Gaussian integers (internal elimination domain)
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn zero() -> Self {
        GaussInt {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn one() -> Self {
        GaussInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn neg(&self) -> Self {
        GaussInt {
            re: -&self.re,
            im: -&self.im,
        }
    }

    fn conj(&self) -> Self {
        GaussInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    fn mul(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    fn sub(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }

    /// Quotient rounded to a nearest Gaussian integer (Euclidean division).
    fn div_round(&self, rhs: &GaussInt) -> GaussInt {
        let n = rhs.norm();
        let prod = self.mul(&rhs.conj());
        GaussInt {
            re: round_div(&prod.re, &n),
            im: round_div(&prod.im, &n),
        }
    }

    fn rem_euclid(&self, rhs: &GaussInt) -> GaussInt {
        let q = self.div_round(rhs);
        self.sub(&q.mul(rhs))
    }

    /// Exact division; the caller guarantees divisibility.
    fn div_exact(&self, rhs: &GaussInt) -> GaussInt {
        let n = rhs.norm();
        let prod = self.mul(&rhs.conj());
        debug_assert!((&prod.re % &n).is_zero() && (&prod.im % &n).is_zero());
        GaussInt {
            re: &prod.re / &n,
            im: &prod.im / &n,
        }
    }

    fn to_rat(&self) -> GaussRat {
        GaussRat::new(
            BigRat::from_bigint(self.re.clone()),
            BigRat::from_bigint(self.im.clone()),
        )
    }
}

impl fmt::Debug for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rat())
    }
}

/// round(x / d) for d > 0, half away from the floor.
fn round_div(x: &BigInt, d: &BigInt) -> BigInt {
    (x * 2i32 + d).div_floor(&(d * 2i32))
}

fn gauss_gcd(a: &GaussInt, b: &GaussInt) -> GaussInt {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = a.rem_euclid(&b);
        a = b;
        b = r;
    }
    a
}

type IntRow = Vec<(u32, GaussInt)>;

/// Divide out the Z[i]-content so that entries stay small. The row spans
/// the same line either way.
fn content_reduce(row: &mut IntRow) {
    if row.is_empty() {
        return;
    }
    let mut g = row[0].1.clone();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = gauss_gcd(&g, v);
    }
    if g.is_one() || g.is_zero() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v = v.div_exact(&g);
    }
}

/// a*row - b*pivot, merged by column; the caller picks a, b so the pivot
/// column cancels.
fn row_combine(a: &GaussInt, row: &IntRow, b: &GaussInt, pivot: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let mut i = 0;
    let mut j = 0;
    while i < row.len() || j < pivot.len() {
        let next = match (row.get(i), pivot.get(j)) {
            (Some(&(ci, _)), Some(&(cj, _))) => {
                if ci < cj {
                    let v = a.mul(&row[i].1);
                    i += 1;
                    (ci, v)
                } else if cj < ci {
                    let v = b.mul(&pivot[j].1).neg();
                    j += 1;
                    (cj, v)
                } else {
                    let v = a.mul(&row[i].1).sub(&b.mul(&pivot[j].1));
                    i += 1;
                    j += 1;
                    (ci, v)
                }
            }
            (Some(&(ci, _)), None) => {
                let v = a.mul(&row[i].1);
                i += 1;
                (ci, v)
            }
            (None, Some(&(cj, _))) => {
                let v = b.mul(&pivot[j].1).neg();
                j += 1;
                (cj, v)
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    out
}

/// Eliminate from `row` every occurrence of the given echelon rows' leading
/// columns, sweeping left to right. Echelon rows must be sorted by leading
/// column; combinations only introduce entries to the right, so one sweep
/// suffices.
fn reduce_row(mut row: IntRow, ech: &[IntRow]) -> IntRow {
    let leads: Vec<u32> = ech.iter().map(|r| r[0].0).collect();
    let mut k = 0;
    let mut steps = 0usize;
    while k < row.len() {
        let col = row[k].0;
        match leads.binary_search(&col) {
            Err(_) => k += 1,
            Ok(idx) => {
                let piv = &ech[idx];
                row = row_combine(&piv[0].1, &row, &row[k].1, piv);
                steps += 1;
                if steps % 8 == 0 {
                    content_reduce(&mut row);
                }
                // entries before `col` are untouched; continue from k
            }
        }
    }
    content_reduce(&mut row);
    row
}

/// Forward elimination to row echelon form. Returns primitive integer rows
/// sorted by strictly increasing leading column.
fn forward_echelon(rows: Vec<IntRow>) -> Vec<IntRow> {
    // Bucket active rows by leading column.
    let mut buckets: std::collections::BTreeMap<u32, Vec<(usize, IntRow)>> =
        std::collections::BTreeMap::new();
    for (orig, mut row) in rows.into_iter().enumerate() {
        content_reduce(&mut row);
        if let Some(&(lead, _)) = row.first() {
            buckets.entry(lead).or_default().push((orig, row));
        }
    }
    let mut ech: Vec<IntRow> = Vec::new();
    while let Some((&col, _)) = buckets.iter().next() {
        let group = buckets.remove(&col).unwrap();
        // Pivot: smallest integer norm of the leading entry, ties by
        // original row order.
        let pivot_idx = group
            .iter()
            .enumerate()
            .min_by(|(_, (oa, ra)), (_, (ob, rb))| {
                ra[0].1.norm().cmp(&rb[0].1.norm()).then(oa.cmp(ob))
            })
            .map(|(i, _)| i)
            .unwrap();
        let mut group = group;
        let (_, prow) = group.swap_remove(pivot_idx);
        let updated: Vec<(usize, IntRow)> = group
            .into_par_iter()
            .map(|(orig, row)| {
                let mut next = row_combine(&prow[0].1, &row, &row[0].1, &prow);
                content_reduce(&mut next);
                (orig, next)
            })
            .collect();
        for (orig, row) in updated {
            if let Some(&(lead, _)) = row.first() {
                buckets.entry(lead).or_default().push((orig, row));
            }
        }
        ech.push(prow);
    }
    ech
}

/// Full reduced row echelon form over the integers: echelon rows with every
/// later pivot column eliminated, each row primitive.
fn rref_int(rows: Vec<IntRow>) -> Vec<IntRow> {
    let ech = forward_echelon(rows);
    if ech.len() <= 1 {
        return ech;
    }
    // Each row only needs the rows after it; reductions are independent.
    let reduced: Vec<IntRow> = ech
        .par_iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            let below = &ech[i + 1..];
            if !below.is_empty() {
                r = reduce_row(r, below);
            }
            r
        })
        .collect();
    reduced
}

fn int_to_rat_row(row: &IntRow) -> SparseVec {
    let lead = row[0].1.to_rat();
    let inv = lead.invert().expect("leading entry is nonzero");
    row.iter().map(|(c, v)| (*c, &v.to_rat() * &inv)).collect()
}

/// Clear denominators: the row times the lcm of all denominators, primitive.
fn rat_to_int_row(row: &SparseVec) -> IntRow {
    let mut lcm = BigInt::one();
    for (_, v) in row {
        lcm = lcm.lcm(v.re.denom());
        lcm = lcm.lcm(v.im.denom());
    }
    let mut out: IntRow = row
        .iter()
        .map(|(c, v)| {
            let re = v.re.numer() * (&lcm / v.re.denom());
            let im = v.im.numer() * (&lcm / v.im.denom());
            (*c, GaussInt { re, im })
        })
        .filter(|(_, v)| !v.is_zero())
        .collect();
    content_reduce(&mut out);
    out
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Matrix over Q(i) with dense semantics and sparse row storage.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMat {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl ExactMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMat {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i as u32, GaussRat::one())]).collect();
        ExactMat {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Self {
        let n_rows = rows.len();
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c as u32, v))
                    .collect()
            })
            .collect();
        ExactMat {
            rows: n_rows,
            cols,
            data,
        }
    }

    /// Rows as (column, value) lists with strictly increasing columns.
    pub fn from_sparse_rows(data: Vec<SparseVec>, cols: usize) -> Self {
        for row in &data {
            debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0), "unsorted row");
            debug_assert!(row.iter().all(|(c, v)| (*c as usize) < cols && !v.is_zero()));
        }
        ExactMat {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn sparse_rows(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn entry(&self, r: usize, c: usize) -> GaussRat {
        match self.data[r].binary_search_by_key(&(c as u32), |&(col, _)| col) {
            Ok(i) => self.data[r][i].1.clone(),
            Err(_) => GaussRat::zero(),
        }
    }

    pub fn dense_rows(&self) -> Vec<Vec<GaussRat>> {
        self.data
            .iter()
            .map(|row| {
                let mut out = vec![GaussRat::zero(); self.cols];
                for (c, v) in row {
                    out[*c as usize] = v.clone();
                }
                out
            })
            .collect()
    }

    pub fn transpose(&self) -> ExactMat {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c as usize].push((r as u32, v.clone()));
            }
        }
        ExactMat {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    fn int_rows(&self) -> Vec<IntRow> {
        self.data.par_iter().map(rat_to_int_row).collect()
    }
}

impl fmt::Debug for ExactMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMat {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(12) {
            let dense: Vec<String> = (0..self.cols.min(16))
                .map(|c| self.entry(r, c).to_string())
                .collect();
            writeln!(f, "  [{}]", dense.join(", "))?;
        }
        Ok(())
    }
}

/// Exact rank via fraction-free elimination.
pub fn rank(m: &ExactMat) -> usize {
    forward_echelon(m.int_rows()).len()
}

/// Right kernel `{ v : m v = 0 }` as a canonical subspace of Q(i)^cols.
pub fn kernel_basis(m: &ExactMat) -> Subspace {
    let rref = rref_int(m.int_rows());
    let pivots: Vec<u32> = rref.iter().map(|r| r[0].0).collect();
    let rat_rows: Vec<SparseVec> = rref.iter().map(int_to_rat_row).collect();
    let mut kernel_rows: Vec<SparseVec> = Vec::with_capacity(m.cols - pivots.len());
    let mut piv_iter = 0;
    for col in 0..m.cols as u32 {
        if piv_iter < pivots.len() && pivots[piv_iter] == col {
            piv_iter += 1;
            continue;
        }
        // Free column: unit there, minus the rref column above each pivot.
        let mut v: SparseVec = Vec::new();
        for (i, row) in rat_rows.iter().enumerate() {
            if let Ok(idx) = row.binary_search_by_key(&col, |&(c, _)| c) {
                v.push((pivots[i], -&row[idx].1));
            }
        }
        v.push((col, GaussRat::one()));
        v.sort_by_key(|&(c, _)| c);
        kernel_rows.push(v);
    }
    Subspace::span_sparse(kernel_rows, m.cols)
}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

/// Subspace of Q(i)^ambient in canonical reduced row-echelon form.
///
/// Two spans of the same subspace produce identical basis matrices, so
/// `==` is value equality of subspaces.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    pivots: Vec<u32>,
    rows: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            pivots: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            pivots: (0..ambient_dim as u32).collect(),
            rows: (0..ambient_dim)
                .map(|i| vec![(i as u32, GaussRat::one())])
                .collect(),
        }
    }

    pub fn span_sparse(vectors: Vec<SparseVec>, ambient_dim: usize) -> Self {
        let int_rows: Vec<IntRow> = vectors.par_iter().map(rat_to_int_row).collect();
        Subspace::from_int_rows(int_rows, ambient_dim)
    }

    pub fn span(vectors: &[Vec<GaussRat>], ambient_dim: usize) -> Self {
        let sparse = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.len(), ambient_dim);
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, x)| (c as u32, x.clone()))
                    .collect()
            })
            .collect();
        Subspace::span_sparse(sparse, ambient_dim)
    }

    fn from_int_rows(rows: Vec<IntRow>, ambient_dim: usize) -> Self {
        let rref = rref_int(rows);
        let pivots = rref.iter().map(|r| r[0].0).collect();
        let rows = rref.iter().map(int_to_rat_row).collect();
        Subspace {
            ambient_dim,
            pivots,
            rows,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// The canonical basis as a matrix, rows = dim.
    pub fn basis(&self) -> ExactMat {
        ExactMat::from_sparse_rows(self.rows.clone(), self.ambient_dim)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinAlgError::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_ambient(other)?;
        let mut rows: Vec<IntRow> = self.rows.iter().map(rat_to_int_row).collect();
        rows.extend(other.rows.iter().map(rat_to_int_row));
        Ok(Subspace::from_int_rows(rows, self.ambient_dim))
    }

    /// Intersection via the Zassenhaus double-block trick: echelonize
    /// rows [a | a] and [b | 0]; rows with zero left half have right
    /// halves spanning the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_ambient(other)?;
        let n = self.ambient_dim as u32;
        let mut rows: Vec<IntRow> = Vec::with_capacity(self.dim() + other.dim());
        for row in &self.rows {
            let int = rat_to_int_row(row);
            let mut doubled = int.clone();
            doubled.extend(int.iter().map(|(c, v)| (c + n, v.clone())));
            rows.push(doubled);
        }
        for row in &other.rows {
            rows.push(rat_to_int_row(row));
        }
        let ech = forward_echelon(rows);
        let right: Vec<IntRow> = ech
            .into_iter()
            .filter(|r| r[0].0 >= n)
            .map(|r| r.into_iter().map(|(c, v)| (c - n, v)).collect())
            .collect();
        Ok(Subspace::from_int_rows(right, self.ambient_dim))
    }

    /// Remainder of `v` (up to a nonzero scalar) after eliminating this
    /// subspace's pivot columns. Empty exactly when `v` lies in the subspace.
    pub fn reduce_vector(&self, v: &SparseVec) -> SparseVec {
        let int = rat_to_int_row(v);
        let int_basis: Vec<IntRow> = self.rows.iter().map(rat_to_int_row).collect();
        let rem = reduce_row(int, &int_basis);
        rem.iter().map(|(c, x)| (*c, x.to_rat())).collect()
    }

    pub fn contains_vector(&self, v: &SparseVec) -> bool {
        self.reduce_vector(v).is_empty()
    }

    /// Does `self` contain `other`?
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinAlgError> {
        self.check_ambient(other)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        // Pivot columns of the larger space must cover the smaller's.
        if !other
            .pivots
            .iter()
            .all(|p| self.pivots.binary_search(p).is_ok())
        {
            return Ok(false);
        }
        let int_basis: Vec<IntRow> = self.rows.iter().map(rat_to_int_row).collect();
        Ok(other
            .rows
            .par_iter()
            .all(|row| reduce_row(rat_to_int_row(row), &int_basis).is_empty()))
    }

    /// dim(self) - dim(other), requiring other ⊆ self. The guard is the
    /// point: every quotient reported upstream has been containment-checked.
    pub fn quotient_dim(&self, other: &Subspace) -> Result<usize, LinAlgError> {
        if !self.contains(other)? {
            return Err(LinAlgError::ContainmentViolation {
                context: format!(
                    "denominator (dim {}) is not contained in numerator (dim {})",
                    other.dim(),
                    self.dim()
                ),
            });
        }
        Ok(self.dim() - other.dim())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}, pivots {:?})",
            self.dim(),
            self.ambient_dim,
            self.pivots
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn gi(re: i64, im: i64) -> GaussRat {
        GaussRat::from_parts(re, im)
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank(&ExactMat::identity(3)), 3);
        assert_eq!(rank(&ExactMat::zeros(4, 5)), 0);
        // second row is i times the first
        let m = ExactMat::from_rows(vec![
            vec![q(1), gi(0, 1)],
            vec![gi(0, 1), q(-1)],
        ]);
        assert_eq!(rank(&m), 1);
        let wide = ExactMat::from_rows(vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(7)]]);
        assert_eq!(rank(&wide), 2);
        assert_eq!(rank(&wide.transpose()), 2);
    }

    #[test]
    fn kernel_examples() {
        let id = ExactMat::identity(3);
        assert_eq!(kernel_basis(&id).dim(), 0);
        let m = ExactMat::from_rows(vec![vec![q(1), q(1)]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis_rows()[0], vec![(0, q(1)), (1, q(-1))]);
        // kernel vectors annihilate the matrix
        let m2 = ExactMat::from_rows(vec![
            vec![q(1), q(2), q(3), q(0)],
            vec![q(0), q(1), q(4), q(-1)],
        ]);
        let k2 = kernel_basis(&m2);
        assert_eq!(k2.dim(), 2);
        for row in k2.basis_rows() {
            for mrow in m2.sparse_rows() {
                let mut acc = GaussRat::zero();
                for (c, v) in mrow {
                    if let Ok(i) = row.binary_search_by_key(c, |&(cc, _)| cc) {
                        acc = &acc + &(v * &row[i].1);
                    }
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn subspace_algebra() {
        let a = Subspace::span(
            &[vec![q(1), q(0)], vec![q(0), q(1)]],
            2,
        );
        let b = Subspace::span(&[vec![q(1), q(1)]], 2);
        assert_eq!(a.dim(), 2);
        assert_eq!(b.dim(), 1);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert_eq!(a.intersect(&b).unwrap(), b);
        assert!(a.contains(&b).unwrap());
        assert!(!b.contains(&a).unwrap());
        assert_eq!(a.quotient_dim(&b).unwrap(), 1);
        assert_eq!(a.quotient_dim(&a).unwrap(), 0);
        assert!(matches!(
            b.quotient_dim(&a),
            Err(LinAlgError::ContainmentViolation { .. })
        ));
    }

    #[test]
    fn canonical_echelon_form() {
        // Two different spanning sets of the same plane in Q(i)^3.
        let s1 = Subspace::span(
            &[vec![q(2), q(4), q(0)], vec![q(1), q(3), gi(0, 1)]],
            3,
        );
        let s2 = Subspace::span(
            &[
                vec![q(3), q(7), gi(0, 1)],
                vec![q(1), q(1), gi(0, -1)],
                vec![q(4), q(8), q(0)],
            ],
            3,
        );
        assert_eq!(s1, s2);
        assert_eq!(s1.basis_rows(), s2.basis_rows());
        // pivot entries are exactly 1 and appear in no other basis row
        for (i, row) in s1.basis_rows().iter().enumerate() {
            assert_eq!(row[0].0, s1.pivots()[i]);
            assert!(row[0].1.is_one());
            for (j, other) in s1.basis_rows().iter().enumerate() {
                if i != j {
                    assert!(other
                        .binary_search_by_key(&s1.pivots()[i], |&(c, _)| c)
                        .is_err());
                }
            }
        }
    }

    #[test]
    fn grassmann_small() {
        let a = Subspace::span(&[vec![q(1), q(0), q(2)], vec![q(0), q(1), q(1)]], 3);
        let b = Subspace::span(&[vec![q(1), q(1), q(3)], vec![q(1), q(-1), q(5)]], 3);
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        assert_eq!(a.dim() + b.dim(), sum.dim() + meet.dim());
        assert!(a.contains(&meet).unwrap() && b.contains(&meet).unwrap());
        assert!(sum.contains(&a).unwrap() && sum.contains(&b).unwrap());
    }

    #[test]
    fn fraction_free_handles_rationals() {
        let m = ExactMat::from_rows(vec![
            vec![GaussRat::new(BigRat::ratio(1, 2), BigRat::ratio(1, 3)), q(1)],
            vec![q(3), GaussRat::new(BigRat::ratio(-2, 7), BigRat::zero())],
        ]);
        assert_eq!(rank(&m), 2);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 0);
    }
}
