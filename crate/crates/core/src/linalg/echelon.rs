//! Exact Gauss-Jordan elimination on sparse rows. Pivots are always taken in
//! column order; no column pivoting is done because index order is meaningful
//! (it is the lexicographic order of tensor-power basis labels).

use super::sparse::SparseVec;

/// Reduced row echelon form: every row has a leading 1 at its pivot, pivots
/// are strictly increasing, and each pivot column is zero in the other rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the rows; returns the remainder, which is zero
    /// exactly when `v` lies in the row space.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = r.get(p).cloned() {
                r = r.add_scaled(row, &-c);
            }
        }
        r
    }
}

/// Row-reduces the given rows.
pub fn rref(rows: impl IntoIterator<Item = SparseVec>, ncols: usize) -> Echelon {
    // Forward pass: each stored row has entries only at or after its pivot.
    let mut basis: Vec<(usize, SparseVec)> = Vec::new();
    let mut slot: Vec<Option<usize>> = vec![None; ncols];
    for row in rows {
        let mut r = row;
        while let Some((p, c)) = r.first().cloned() {
            match slot[p] {
                Some(k) => r = r.add_scaled(&basis[k].1, &-c),
                None => {
                    let inv = c.inv().expect("nonzero pivot");
                    slot[p] = Some(basis.len());
                    basis.push((p, r.scale(&inv)));
                    break;
                }
            }
        }
    }
    basis.sort_by_key(|(p, _)| *p);
    // Backward pass: clear every pivot column above its pivot.
    let n = basis.len();
    for i in (0..n).rev() {
        let (p, row) = basis[i].clone();
        for (_, above) in &mut basis[..i] {
            if let Some(c) = above.get(p).cloned() {
                *above = above.add_scaled(&row, &-c);
            }
        }
    }
    let pivots = basis.iter().map(|(p, _)| *p).collect();
    Echelon { ncols, rows: basis.into_iter().map(|(_, r)| r).collect(), pivots }
}

/// Row-reduces with pivots chosen from the right: the pivot of each row is
/// its largest nonzero index.
pub fn rref_from_right(rows: impl IntoIterator<Item = SparseVec>, ncols: usize) -> Echelon {
    let flip = |i: usize| ncols - 1 - i;
    let e = rref(rows.into_iter().map(|r| r.map_indices(flip)), ncols);
    let mut rows: Vec<SparseVec> = e.rows.iter().map(|r| r.map_indices(flip)).collect();
    let mut pivots: Vec<usize> = e.pivots.iter().map(|&p| flip(p)).collect();
    rows.reverse();
    pivots.reverse();
    Echelon { ncols, rows, pivots }
}
