//! Exact linear algebra over a [`FieldCtx`]: sparse maps, echelon forms,
//! kernels and images, quotient sections, and spectra from known roots.

mod echelon;
mod sparse;

pub use echelon::{rref, rref_from_right, Echelon};
pub use sparse::{Accumulator, SparseVec};

use crate::scalars::{FieldCtx, Scalar, ScalarError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("the candidate roots do not annihilate the operator")]
    NotAnnihilated,
    #[error("eigenspace dimensions sum to {found}, expected {expected}")]
    IncompleteSpectrum { found: usize, expected: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A linear map `k^cols -> k^rows`, stored column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    rows: usize,
    cols: usize,
    ctx: FieldCtx,
    columns: Vec<SparseVec>,
}

impl LinMap {
    pub fn zero(rows: usize, cols: usize, ctx: &FieldCtx) -> Self {
        LinMap { rows, cols, ctx: ctx.clone(), columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize, ctx: &FieldCtx) -> Self {
        LinMap { rows: n, cols: n, ctx: ctx.clone(), columns: (0..n).map(|i| SparseVec::unit(i, ctx)).collect() }
    }

    pub fn from_columns(rows: usize, ctx: &FieldCtx, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns.iter().all(|c| c.last().is_none_or(|(i, _)| *i < rows)));
        LinMap { rows, cols: columns.len(), ctx: ctx.clone(), columns }
    }

    /// Builds from a dense row-major array.
    pub fn from_rows(ctx: &FieldCtx, data: &[Vec<Scalar>]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        let columns = (0..cols)
            .map(|j| SparseVec::from_entries((0..rows).map(|i| (i, data[i][j].clone()))))
            .collect();
        LinMap { rows, cols, ctx: ctx.clone(), columns }
    }

    pub fn from_fn(rows: usize, cols: usize, ctx: &FieldCtx, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let columns = (0..cols).map(|j| SparseVec::from_entries((0..rows).map(|i| (i, f(i, j))))).collect();
        LinMap { rows, cols, ctx: ctx.clone(), columns }
    }

    /// Builds the map whose `j`-th column is `f(e_j)`.
    pub fn from_action(rows: usize, cols: usize, ctx: &FieldCtx, f: impl Fn(usize) -> SparseVec) -> Self {
        LinMap { rows, cols, ctx: ctx.clone(), columns: (0..cols).map(f).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.columns[j].get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.columns.iter().enumerate().all(|(j, c)| c.nnz() == 1 && c.first().is_some_and(|(i, x)| *i == j && x.is_one()))
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (j, c) in v.iter() {
            acc.add_vec(&self.columns[j], c);
        }
        acc.finish()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch(format!(
                "compose {}x{} after {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let columns = other.columns.iter().map(|c| self.apply(c)).collect();
        Ok(LinMap { rows: self.rows, cols: other.cols, ctx: self.ctx.clone(), columns })
    }

    fn same_shape(&self, other: &LinMap) -> Result<(), LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
        self.same_shape(other)?;
        let columns = self.columns.iter().zip(&other.columns).map(|(a, b)| a.add(b)).collect();
        Ok(LinMap { columns, ..self.clone_shape() })
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
        self.same_shape(other)?;
        let columns = self.columns.iter().zip(&other.columns).map(|(a, b)| a.sub(b)).collect();
        Ok(LinMap { columns, ..self.clone_shape() })
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        LinMap { columns: self.columns.iter().map(|v| v.scale(c)).collect(), ..self.clone_shape() }
    }

    fn clone_shape(&self) -> LinMap {
        LinMap { rows: self.rows, cols: self.cols, ctx: self.ctx.clone(), columns: Vec::new() }
    }

    /// Kronecker product; index `(i, j)` of the product space is `i * dim2 + j`.
    pub fn tensor(&self, other: &LinMap) -> LinMap {
        let mut columns = Vec::with_capacity(self.cols * other.cols);
        for a in &self.columns {
            for b in &other.columns {
                let mut acc = Vec::with_capacity(a.nnz() * b.nnz());
                for (i, x) in a.iter() {
                    for (k, y) in b.iter() {
                        acc.push((i * other.rows + k, x * y));
                    }
                }
                columns.push(SparseVec::from_entries(acc));
            }
        }
        LinMap { rows: self.rows * other.rows, cols: self.cols * other.cols, ctx: self.ctx.clone(), columns }
    }

    pub fn transpose(&self) -> LinMap {
        LinMap { rows: self.cols, cols: self.rows, ctx: self.ctx.clone(), columns: self.row_vectors() }
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for (i, x) in c.iter() {
                rows[i].push((j, x.clone()));
            }
        }
        rows.into_iter().map(SparseVec::from_entries).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![self.ctx.zero(); self.cols]; self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for (i, x) in c.iter() {
                out[i][j] = x.clone();
            }
        }
        out
    }

    pub fn echelon(&self) -> Echelon {
        rref(self.row_vectors(), self.cols)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn kernel(&self) -> Subspace {
        let e = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        let mut vecs = Vec::new();
        for f in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut entries = vec![(f, self.ctx.one())];
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                if let Some(c) = row.get(f) {
                    entries.push((p, -c));
                }
            }
            vecs.push(SparseVec::from_entries(entries));
        }
        Subspace::span(self.cols, vecs)
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, self.columns.clone())
    }

    /// Inverse of a square map by Gauss-Jordan on `[A | I]`.
    pub fn inverse(&self) -> Result<LinMap, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::ShapeMismatch(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug: Vec<SparseVec> = self
            .row_vectors()
            .into_iter()
            .enumerate()
            .map(|(i, r)| r.add(&SparseVec::unit(n + i, &self.ctx)))
            .collect();
        let e = rref(aug, 2 * n);
        if e.rank() < n || e.pivots[n - 1] != n - 1 {
            return Err(LinalgError::NotInvertible);
        }
        let rows: Vec<SparseVec> =
            e.rows.iter().map(|r| SparseVec::from_entries(r.iter().filter(|(j, _)| *j >= n).map(|(j, c)| (j - n, c.clone())))).collect();
        // The rows of the inverse, read as columns, form its transpose.
        Ok(LinMap::from_columns(n, &self.ctx, rows).transpose())
    }

    /// Some `x` with `self x = b`, or `None` when `b` is not in the image.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let aug: Vec<SparseVec> = self
            .row_vectors()
            .into_iter()
            .enumerate()
            .map(|(i, r)| match b.get(i) {
                Some(c) => r.add(&SparseVec::single(self.cols, c.clone())),
                None => r,
            })
            .collect();
        let e = rref(aug, self.cols + 1);
        if e.pivots.last() == Some(&self.cols) {
            return None;
        }
        let entries = e
            .rows
            .iter()
            .zip(&e.pivots)
            .filter_map(|(r, &p)| r.get(self.cols).map(|c| (p, c.clone())));
        Some(SparseVec::from_entries(entries))
    }

    /// Restriction to the columns in `cols` followed by the rows in `rows`.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> LinMap {
        let mut pos = vec![None; self.rows];
        for (k, &i) in rows.iter().enumerate() {
            pos[i] = Some(k);
        }
        let columns = cols
            .iter()
            .map(|&j| SparseVec::from_entries(self.columns[j].iter().filter_map(|(i, c)| pos[i].map(|k| (k, c.clone())))))
            .collect();
        LinMap { rows: rows.len(), cols: cols.len(), ctx: self.ctx.clone(), columns }
    }

    /// `self^k` for square maps.
    pub fn power(&self, k: u32) -> Result<LinMap, LinalgError> {
        let mut acc = LinMap::identity(self.rows, &self.ctx);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// `self - c * id`.
    pub fn shifted(&self, c: &Scalar) -> Result<LinMap, LinalgError> {
        self.sub(&LinMap::identity(self.rows, &self.ctx).scale(c))
    }
}

/// A subspace of `k^ambient` held by its canonical reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    echelon: Echelon,
}

impl Subspace {
    pub fn span(ambient: usize, vecs: Vec<SparseVec>) -> Self {
        Subspace { ambient, echelon: rref(vecs, ambient) }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::span(ambient, Vec::new())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.echelon.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.echelon.pivots
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.echelon.reduce(v).is_zero()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }

    /// Quotient by this subspace with the lexicographically smallest
    /// surviving basis labels as section.
    pub fn section_mod(&self, ctx: &FieldCtx) -> Quotient {
        Quotient::modulo(self, ctx)
    }
}

/// The quotient `k^ambient / K` presented by a monomial section.
///
/// `survivors` are the ambient basis indices whose images form the quotient
/// basis (the lexicographically smallest independent set); `projector` sends
/// an ambient vector to its quotient coordinates and `section` includes the
/// quotient back on the survivors, so `projector ∘ section = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    survivors: Vec<usize>,
    projector: LinMap,
    section: LinMap,
}

impl Quotient {
    /// Quotient by `k`, computed from its right-pivoted echelon form: the
    /// pivots (largest index of each relation) are eliminated.
    pub fn modulo(k: &Subspace, ctx: &FieldCtx) -> Quotient {
        let n = k.ambient;
        let e = rref_from_right(k.basis().to_vec(), n);
        let mut relation_at = vec![None; n];
        for (r, &p) in e.rows.iter().zip(&e.pivots) {
            relation_at[p] = Some(r);
        }
        let survivors: Vec<usize> = (0..n).filter(|&i| relation_at[i].is_none()).collect();
        let mut pos = vec![usize::MAX; n];
        for (k, &s) in survivors.iter().enumerate() {
            pos[s] = k;
        }
        let columns = (0..n)
            .map(|i| match relation_at[i] {
                None => SparseVec::unit(pos[i], ctx),
                Some(r) => SparseVec::from_entries(r.iter().filter(|(j, _)| *j != i).map(|(j, c)| (pos[j], -c))),
            })
            .collect();
        let projector = LinMap::from_columns(survivors.len(), ctx, columns);
        Self::assemble(survivors, projector, ctx)
    }

    /// Quotient of the domain of `m` by `ker m`: survivors are the pivot
    /// columns of `m` and the projector is its reduced echelon form.
    pub fn from_map(m: &LinMap) -> Quotient {
        let e = m.echelon();
        let ctx = m.ctx().clone();
        let r = e.rank();
        let mut columns: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m.cols()];
        for (i, row) in e.rows.iter().enumerate() {
            for (j, c) in row.iter() {
                columns[j].push((i, c.clone()));
            }
        }
        let columns = columns.into_iter().map(SparseVec::from_entries).collect();
        let projector = LinMap::from_columns(r, &ctx, columns);
        Self::assemble(e.pivots.clone(), projector, &ctx)
    }

    fn assemble(survivors: Vec<usize>, projector: LinMap, ctx: &FieldCtx) -> Quotient {
        let n = projector.cols();
        let section = LinMap::from_columns(n, ctx, survivors.iter().map(|&s| SparseVec::unit(s, ctx)).collect());
        Quotient { survivors, projector, section }
    }

    pub fn dim(&self) -> usize {
        self.survivors.len()
    }

    pub fn survivors(&self) -> &[usize] {
        &self.survivors
    }

    pub fn projector(&self) -> &LinMap {
        &self.projector
    }

    pub fn section(&self) -> &LinMap {
        &self.section
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        self.projector.apply(v)
    }

    pub fn lift(&self, v: &SparseVec) -> SparseVec {
        self.section.apply(v)
    }
}

/// Verifies that `prod_i (f - r_i)` vanishes and returns the eigenspace
/// dimensions `dim ker(f - r_i)` in the order of `roots`.
pub fn annihilator_spectrum(f: &LinMap, roots: &[Scalar]) -> Result<Vec<usize>, LinalgError> {
    let n = f.rows();
    let mut prod = LinMap::identity(n, f.ctx());
    for r in roots {
        prod = f.shifted(r)?.compose(&prod)?;
    }
    if !prod.is_zero() {
        return Err(LinalgError::NotAnnihilated);
    }
    let mults: Vec<usize> = roots.iter().map(|r| f.shifted(r).map(|g| g.kernel().dim())).collect::<Result<_, _>>()?;
    let found: usize = mults.iter().sum();
    if found != n {
        return Err(LinalgError::IncompleteSpectrum { found, expected: n });
    }
    Ok(mults)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> FieldCtx {
        FieldCtx::Rational
    }

    fn m(rows: &[&[i64]]) -> LinMap {
        let k = ctx();
        LinMap::from_rows(&k, &rows.iter().map(|r| r.iter().map(|&x| k.int(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        assert_eq!(LinMap::zero(2, 3, &ctx()).kernel().dim(), 3);
    }

    #[test]
    fn antisymmetric_line() {
        // id - flip on k^2 ⊗ k^2.
        let flip = LinMap::from_action(4, 4, &ctx(), |j| SparseVec::unit((j % 2) * 2 + j / 2, &ctx()));
        let a = LinMap::identity(4, &ctx()).sub(&flip).unwrap();
        assert_eq!(a.image().dim(), 1);
        assert_eq!(a.rank() + a.kernel().dim(), 4);
    }

    #[test]
    fn inverse_and_solve() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.compose(&inv).unwrap().is_identity());
        let b = SparseVec::from_dense(&[ctx().int(3), ctx().int(2)]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.apply(&x), b);
        assert_eq!(m(&[&[1, 1], &[1, 1]]).inverse(), Err(LinalgError::NotInvertible));
        assert!(m(&[&[1, 1], &[1, 1]]).solve(&SparseVec::unit(0, &ctx())).is_none());
    }

    #[test]
    fn tensor_matches_composition() {
        let f = m(&[&[1, 2], &[3, 4]]);
        let g = m(&[&[0, 1], &[5, -1]]);
        let id = LinMap::identity(2, &ctx());
        let lhs = f.tensor(&id).compose(&id.tensor(&g)).unwrap();
        assert_eq!(lhs, f.tensor(&g));
    }

    #[test]
    fn quotient_keeps_smallest_labels() {
        // Relation e0 + e1 - e2 = 0 and e1 = e3 in k^4.
        let k = ctx();
        let rels = vec![
            SparseVec::from_dense(&[k.one(), k.one(), k.int(-1), k.zero()]),
            SparseVec::from_dense(&[k.zero(), k.one(), k.zero(), k.int(-1)]),
        ];
        let q = Subspace::span(4, rels.clone()).section_mod(&k);
        assert_eq!(q.survivors(), &[0, 1]);
        assert!(q.projector().compose(q.section()).unwrap().is_identity());
        for r in &rels {
            assert!(q.project(r).is_zero());
        }
        // The same quotient from a map with that kernel.
        let map = m(&[&[1, 0, 1, 0], &[0, 1, 1, 1]]);
        let q2 = Quotient::from_map(&map);
        assert_eq!(q2.survivors(), q.survivors());
        assert_eq!(q2.projector(), q.projector());
    }

    #[test]
    fn zero_subspace_section_is_identity() {
        let q = Subspace::zero(3).section_mod(&ctx());
        assert!(q.section().is_identity());
    }

    #[test]
    fn spectrum_of_diagonal() {
        let k = ctx();
        let f = m(&[&[0, 0, 0], &[0, 6, 0], &[0, 0, 12]]);
        assert_eq!(annihilator_spectrum(&f, &[k.int(0), k.int(6), k.int(12)]).unwrap(), vec![1, 1, 1]);
        assert_eq!(annihilator_spectrum(&f, &[k.int(0), k.int(6)]), Err(LinalgError::NotAnnihilated));
    }
}
