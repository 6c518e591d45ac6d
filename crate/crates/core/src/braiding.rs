//! Braided vector spaces and the operator combinatorics on tensor powers:
//! lifts `Ψ_i`, braided integers, binomials and factorials (plain and primed),
//! the factorisation identity, and super cable crossings.
//!
//! Tensor powers use row-major index tuples: the basis vector
//! `e_{i_1} ⊗ ... ⊗ e_{i_n}` has flat index `i_1 d^(n-1) + ... + i_n`, so flat
//! order is lexicographic order of labels. Slots are numbered from 1 and
//! `Ψ_i` acts on slots `i, i+1`.
//!
//! Operators are applied to vectors by their defining recursions rather than
//! materialised as matrices; `*_map` builders produce matrices and memoize them.

use crate::linalg::{Accumulator, LinMap, LinalgError, SparseVec};
use crate::scalars::{FieldCtx, Scalar};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("braiding is not invertible")]
    NotInvertible,
    #[error("psi and its claimed inverse do not compose to the identity")]
    BadInverse,
    #[error("braid relation Ψ1Ψ2Ψ1 = Ψ2Ψ1Ψ2 fails")]
    BraidRelation,
    #[error("slot index {i} out of range for tensor power {n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("braiding must be a square map on V⊗V of size {expected}, got {rows}x{cols}")]
    BadShape { expected: usize, rows: usize, cols: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Selects `Ψ` or `-Ψ` in the recursions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(self, c: &Scalar) -> Scalar {
        match self {
            Sign::Plus => c.clone(),
            Sign::Minus => -c,
        }
    }

    /// `±1` in the given field.
    pub fn unit(self, ctx: &FieldCtx) -> Scalar {
        match self {
            Sign::Plus => ctx.one(),
            Sign::Minus => -ctx.one(),
        }
    }
}

/// A crossing map `A ⊗ B -> B ⊗ A`, tabulated by input pair.
#[derive(Clone, Debug)]
pub struct Crossing {
    left: usize,
    right: usize,
    table: Vec<Vec<(usize, usize, Scalar)>>,
}

impl Crossing {
    /// From a matrix with columns indexed by `a * right + b` and rows by
    /// `b' * left + a'`.
    pub fn from_map(left: usize, right: usize, m: &LinMap) -> Crossing {
        let table = (0..left * right)
            .map(|j| m.column(j).iter().map(|(i, c)| (i / left, i % left, c.clone())).collect())
            .collect();
        Crossing { left, right, table }
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    /// Applies the crossing at slots `k, k+1` (0-based) of a tensor product
    /// with slot dimensions `dims`, where `dims[k] = left`, `dims[k+1] = right`.
    pub fn apply_at(&self, v: &SparseVec, dims: &[usize], k: usize, sign: Sign) -> SparseVec {
        debug_assert_eq!(dims[k], self.left);
        debug_assert_eq!(dims[k + 1], self.right);
        let s: usize = dims[k + 2..].iter().product();
        let block = self.left * self.right * s;
        let mut acc = Accumulator::new();
        for (idx, c) in v.iter() {
            let hi = idx / block;
            let rem = idx % block;
            let a = rem / (self.right * s);
            let b = (rem / s) % self.right;
            let lo = rem % s;
            for (b2, a2, x) in &self.table[a * self.right + b] {
                let out = hi * block + b2 * self.left * s + a2 * s + lo;
                acc.add(out, &sign.apply(&(c * x)));
            }
        }
        acc.finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum OpKind {
    Integer,
    IntegerPrimed,
    Binomial,
    BinomialPrimed,
    Factorial,
    FactorialPrimed,
}

/// Operator kind, tensor degree, binomial index, sign.
type OpKey = (OpKind, usize, usize, Sign);

/// A finite-dimensional space with an invertible braiding on `V ⊗ V`.
#[derive(Clone, Debug)]
pub struct BraidedSpace {
    labels: Vec<String>,
    ctx: FieldCtx,
    psi: LinMap,
    psi_inv: LinMap,
    cross: Arc<Crossing>,
    cross_inv: Arc<Crossing>,
    cache: Arc<Mutex<HashMap<OpKey, Arc<LinMap>>>>,
}

impl BraidedSpace {
    /// Builds the space, inverting `psi` and checking the braid relation.
    pub fn new(labels: Vec<String>, psi: LinMap) -> Result<Self, BraidError> {
        let inv = psi.inverse().map_err(|e| match e {
            LinalgError::NotInvertible => BraidError::NotInvertible,
            other => BraidError::Linalg(other),
        })?;
        Self::with_inverse(labels, psi, inv)
    }

    pub fn with_inverse(labels: Vec<String>, psi: LinMap, psi_inv: LinMap) -> Result<Self, BraidError> {
        let d = labels.len();
        for m in [&psi, &psi_inv] {
            if m.rows() != d * d || m.cols() != d * d {
                return Err(BraidError::BadShape { expected: d * d, rows: m.rows(), cols: m.cols() });
            }
        }
        if !psi.compose(&psi_inv)?.is_identity() {
            return Err(BraidError::BadInverse);
        }
        let ctx = psi.ctx().clone();
        let space = BraidedSpace {
            cross: Arc::new(Crossing::from_map(d, d, &psi)),
            cross_inv: Arc::new(Crossing::from_map(d, d, &psi_inv)),
            labels,
            ctx,
            psi,
            psi_inv,
            cache: Arc::new(Mutex::new(HashMap::new())),
        };
        if !space.braid_relation_holds() {
            return Err(BraidError::BraidRelation);
        }
        Ok(space)
    }

    /// Builds `Ψ` from a function giving `Ψ(e_a ⊗ e_b)` as `(c, d, coeff)` terms.
    pub fn from_rule(
        labels: Vec<String>,
        ctx: &FieldCtx,
        rule: impl Fn(usize, usize) -> Vec<(usize, usize, Scalar)>,
    ) -> Result<Self, BraidError> {
        let d = labels.len();
        let psi = LinMap::from_action(d * d, d * d, ctx, |j| {
            SparseVec::from_entries(rule(j / d, j % d).into_iter().map(|(x, y, c)| (x * d + y, c)))
        });
        Self::new(labels, psi)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn psi(&self) -> &LinMap {
        &self.psi
    }

    pub fn psi_inv(&self) -> &LinMap {
        &self.psi_inv
    }

    pub fn crossing(&self) -> &Crossing {
        &self.cross
    }

    pub fn crossing_inv(&self) -> &Crossing {
        &self.cross_inv
    }

    /// The same space with braiding `c Ψ` for an invertible scalar `c`.
    pub fn rescaled(&self, c: &Scalar) -> Result<Self, BraidError> {
        let inv = c.inv().map_err(|_| BraidError::NotInvertible)?;
        Self::with_inverse(self.labels.clone(), self.psi.scale(c), self.psi_inv.scale(&inv))
    }

    /// `dim V^{⊗n}`.
    pub fn power_dim(&self, n: usize) -> usize {
        self.dim().pow(n as u32)
    }

    /// Label tuple of a flat index in `V^{⊗n}`.
    pub fn digits(&self, idx: usize, n: usize) -> Vec<usize> {
        let d = self.dim();
        let mut out = vec![0; n];
        let mut x = idx;
        for k in (0..n).rev() {
            out[k] = x % d;
            x /= d;
        }
        out
    }

    pub fn index_of(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &x| acc * self.dim() + x)
    }

    /// Concatenated label of a tensor-power basis vector, e.g. `"uv"`.
    pub fn word_label(&self, idx: usize, n: usize) -> String {
        self.digits(idx, n).iter().map(|&i| self.labels[i].as_str()).collect::<Vec<_>>().join("")
    }

    fn braid_relation_holds(&self) -> bool {
        let n = 3;
        (0..self.power_dim(n)).all(|j| {
            let v = SparseVec::unit(j, &self.ctx);
            let a = self.lift_apply(&self.lift_apply(&self.lift_apply(&v, n, 1, Sign::Plus), n, 2, Sign::Plus), n, 1, Sign::Plus);
            let b = self.lift_apply(&self.lift_apply(&self.lift_apply(&v, n, 2, Sign::Plus), n, 1, Sign::Plus), n, 2, Sign::Plus);
            a == b
        })
    }

    /// `±Ψ_i` on `V^{⊗n}` applied to `v` (`1 <= i < n`).
    pub fn lift_apply(&self, v: &SparseVec, n: usize, i: usize, sign: Sign) -> SparseVec {
        let dims = vec![self.dim(); n];
        self.cross.apply_at(v, &dims, i - 1, sign)
    }

    /// `±Ψ_i^{-1}` on `V^{⊗n}`.
    pub fn lift_inv_apply(&self, v: &SparseVec, n: usize, i: usize, sign: Sign) -> SparseVec {
        let dims = vec![self.dim(); n];
        self.cross_inv.apply_at(v, &dims, i - 1, sign)
    }

    /// `Ψ_i` as a matrix on `V^{⊗n}`.
    pub fn lift(&self, i: usize, n: usize) -> Result<LinMap, BraidError> {
        if i == 0 || i >= n {
            return Err(BraidError::IndexOutOfRange { i, n });
        }
        let dim = self.power_dim(n);
        Ok(LinMap::from_action(dim, dim, &self.ctx, |j| self.lift_apply(&SparseVec::unit(j, &self.ctx), n, i, Sign::Plus)))
    }

    /// Braided integer `[len; ±Ψ] = id + Ψ_1 + Ψ_1Ψ_2 + ... + Ψ_1...Ψ_{len-1}`
    /// acting on slots `off+1 ..= off+len` of `V^{⊗n}`.
    pub fn integer_apply(&self, v: &SparseVec, n: usize, off: usize, len: usize, sign: Sign) -> SparseVec {
        // Horner form: v + Ψ_1(v + Ψ_2(v + ... (v + Ψ_{len-1} v))).
        let mut acc = v.clone();
        for i in (1..len).rev() {
            acc = v.add(&self.lift_apply(&acc, n, off + i, sign));
        }
        acc
    }

    /// Primed integer `[len; ±Ψ]' = id + Ψ_{len-1} + Ψ_{len-2}Ψ_{len-1} + ... + Ψ_1...Ψ_{len-1}`.
    pub fn integer_primed_apply(&self, v: &SparseVec, n: usize, off: usize, len: usize, sign: Sign) -> SparseVec {
        let mut sum = v.clone();
        let mut term = v.clone();
        for i in (1..len).rev() {
            term = self.lift_apply(&term, n, off + i, sign);
            sum = sum.add(&term);
        }
        sum
    }

    /// Braided factorial `[len, ±Ψ]! = (id ⊗ [len-1, ±Ψ]!) [len; ±Ψ]`.
    pub fn factorial_apply(&self, v: &SparseVec, n: usize, off: usize, len: usize, sign: Sign) -> SparseVec {
        let mut w = v.clone();
        for k in 0..len.saturating_sub(1) {
            w = self.integer_apply(&w, n, off + k, len - k, sign);
        }
        w
    }

    /// Primed factorial `[len]'! = [len]' ([len-1]' ⊗ id) ... ([2]' ⊗ id)`.
    pub fn factorial_primed_apply(&self, v: &SparseVec, n: usize, off: usize, len: usize, sign: Sign) -> SparseVec {
        let mut w = v.clone();
        for k in 2..=len {
            w = self.integer_primed_apply(&w, n, off, k, sign);
        }
        w
    }

    /// Braided binomial `[len r; ±Ψ]` on slots `off+1 ..= off+len`, by the recursion
    /// `Ψ_r ... Ψ_{len-1} ([len-1 r-1] ⊗ id) + [len-1 r] ⊗ id`.
    pub fn binomial_apply(&self, v: &SparseVec, n: usize, off: usize, len: usize, r: usize, sign: Sign) -> SparseVec {
        if r == 0 || r >= len {
            return v.clone();
        }
        let mut first = self.binomial_apply(v, n, off, len - 1, r - 1, sign);
        for i in (r..len).rev() {
            first = self.lift_apply(&first, n, off + i, sign);
        }
        first.add(&self.binomial_apply(v, n, off, len - 1, r, sign))
    }

    /// Primed binomial `[len r; ±Ψ]' = (id ⊗ [len-1 r]') Ψ_1 ... Ψ_r + id ⊗ [len-1 r-1]'`,
    /// the unprimed recursion with its diagram rotated by π.
    pub fn binomial_primed_apply(&self, v: &SparseVec, n: usize, off: usize, len: usize, r: usize, sign: Sign) -> SparseVec {
        if r == 0 || r >= len {
            return v.clone();
        }
        let mut first = v.clone();
        for i in (1..=r).rev() {
            first = self.lift_apply(&first, n, off + i, sign);
        }
        let first = self.binomial_primed_apply(&first, n, off + 1, len - 1, r, sign);
        first.add(&self.binomial_primed_apply(v, n, off + 1, len - 1, r - 1, sign))
    }

    /// `([r]! ⊗ [len-r]!)` on slots `off+1 ..= off+len`.
    pub fn split_factorial_apply(&self, v: &SparseVec, n: usize, off: usize, len: usize, r: usize, sign: Sign) -> SparseVec {
        let w = self.factorial_apply(v, n, off, r, sign);
        self.factorial_apply(&w, n, off + r, len - r, sign)
    }

    fn cached(&self, key: OpKey, build: impl FnOnce() -> LinMap) -> Arc<LinMap> {
        if let Some(m) = self.cache.lock().expect("operator cache").get(&key) {
            return m.clone();
        }
        let m = Arc::new(build());
        self.cache.lock().expect("operator cache").insert(key, m.clone());
        m
    }

    fn op_map(&self, kind: OpKind, n: usize, r: usize, sign: Sign) -> Arc<LinMap> {
        self.cached((kind, n, r, sign), || {
            let dim = self.power_dim(n);
            LinMap::from_action(dim, dim, &self.ctx, |j| {
                let v = SparseVec::unit(j, &self.ctx);
                match kind {
                    OpKind::Integer => self.integer_apply(&v, n, 0, n, sign),
                    OpKind::IntegerPrimed => self.integer_primed_apply(&v, n, 0, n, sign),
                    OpKind::Binomial => self.binomial_apply(&v, n, 0, n, r, sign),
                    OpKind::BinomialPrimed => self.binomial_primed_apply(&v, n, 0, n, r, sign),
                    OpKind::Factorial => self.factorial_apply(&v, n, 0, n, sign),
                    OpKind::FactorialPrimed => self.factorial_primed_apply(&v, n, 0, n, sign),
                }
            })
        })
    }

    pub fn braided_integer(&self, n: usize, sign: Sign) -> Arc<LinMap> {
        self.op_map(OpKind::Integer, n, 1, sign)
    }

    pub fn braided_integer_primed(&self, n: usize, sign: Sign) -> Arc<LinMap> {
        self.op_map(OpKind::IntegerPrimed, n, 1, sign)
    }

    pub fn braided_binomial(&self, n: usize, r: usize, sign: Sign) -> Arc<LinMap> {
        self.op_map(OpKind::Binomial, n, r, sign)
    }

    pub fn braided_binomial_primed(&self, n: usize, r: usize, sign: Sign) -> Arc<LinMap> {
        self.op_map(OpKind::BinomialPrimed, n, r, sign)
    }

    pub fn braided_factorial(&self, n: usize, sign: Sign) -> Arc<LinMap> {
        self.op_map(OpKind::Factorial, n, 0, sign)
    }

    pub fn braided_factorial_primed(&self, n: usize, sign: Sign) -> Arc<LinMap> {
        self.op_map(OpKind::FactorialPrimed, n, 0, sign)
    }

    /// Checks `([r]! ⊗ [n-r]!) [n r] = [n]!` and `[n r]' ([r]! ⊗ [n-r]!) = [n]!`
    /// column by column.
    pub fn verify_factorisation(&self, n: usize, r: usize, sign: Sign) -> bool {
        (0..self.power_dim(n)).all(|j| {
            let v = SparseVec::unit(j, &self.ctx);
            let full = self.factorial_apply(&v, n, 0, n, sign);
            self.factorisation_column(&v, &full, n, r, sign)
        })
    }

    fn factorisation_column(&self, v: &SparseVec, full: &SparseVec, n: usize, r: usize, sign: Sign) -> bool {
        let lhs = self.split_factorial_apply(&self.binomial_apply(v, n, 0, n, r, sign), n, 0, n, r, sign);
        if &lhs != full {
            return false;
        }
        let primed = self.binomial_primed_apply(&self.split_factorial_apply(v, n, 0, n, r, sign), n, 0, n, r, sign);
        &primed == full
    }

    /// Runs [`Self::verify_factorisation`] for every `0 <= r <= n`, also
    /// checking that the primed factorial equals the factorial. Shares the
    /// factorial column and the binomial table across all `r`.
    pub fn verify_factorisation_all(&self, n: usize, sign: Sign) -> bool {
        (0..self.power_dim(n)).all(|j| {
            let v = SparseVec::unit(j, &self.ctx);
            let full = self.factorial_apply(&v, n, 0, n, sign);
            if self.factorial_primed_apply(&v, n, 0, n, sign) != full {
                return false;
            }
            let binoms = self.binomials_apply(&v, n, sign);
            (0..=n).all(|r| {
                self.split_factorial_apply(&binoms[r], n, 0, n, r, sign) == full && {
                    let split = self.split_factorial_apply(&v, n, 0, n, r, sign);
                    self.binomial_primed_apply(&split, n, 0, n, r, sign) == full
                }
            })
        })
    }

    /// `[n r; ±Ψ] v` for every `0 <= r <= n`, by Pascal's recursion on a table.
    fn binomials_apply(&self, v: &SparseVec, n: usize, sign: Sign) -> Vec<SparseVec> {
        let mut row = vec![v.clone(); 2.min(n + 1)];
        for len in 2..=n {
            let mut next = Vec::with_capacity(len + 1);
            next.push(v.clone());
            for r in 1..len {
                let mut first = row[r - 1].clone();
                for i in (r..len).rev() {
                    first = self.lift_apply(&first, n, i, sign);
                }
                next.push(first.add(&row[r]));
            }
            next.push(v.clone());
            row = next;
        }
        row
    }

    /// Functoriality: `Ψ_1...Ψ_{n-1} ([n-1 r] ⊗ id) = (id ⊗ [n-1 r]) Ψ_1...Ψ_{n-1}`.
    pub fn verify_functoriality(&self, n: usize, r: usize, sign: Sign) -> bool {
        (0..self.power_dim(n)).all(|j| {
            let v = SparseVec::unit(j, &self.ctx);
            let mut lhs = self.binomial_apply(&v, n, 0, n - 1, r, sign);
            let mut rhs = v;
            for i in (1..n).rev() {
                lhs = self.lift_apply(&lhs, n, i, Sign::Plus);
                rhs = self.lift_apply(&rhs, n, i, Sign::Plus);
            }
            lhs == self.binomial_apply(&rhs, n, 1, n - 1, r, sign)
        })
    }

    /// `(-1)^{pq}` times the cable crossing `V^{⊗p} ⊗ V^{⊗q} -> V^{⊗q} ⊗ V^{⊗p}`.
    pub fn super_lift(&self, p: usize, q: usize) -> LinMap {
        cable_map(&self.cross, p, q, true, &self.ctx)
    }

    /// Inverse of [`Self::super_lift`].
    pub fn super_lift_inv(&self, p: usize, q: usize) -> LinMap {
        cable_inverse_map(&self.cross_inv, p, q, true, &self.ctx)
    }
}

/// Cable crossing of `A^{⊗p} ⊗ B^{⊗q}` to `B^{⊗q} ⊗ A^{⊗p}` built from the
/// elementary crossing `A ⊗ B -> B ⊗ A`: first `b_1` moves left past
/// `a_p, ..., a_1`, then `b_2`, and so on. With `super_sign` the result is
/// multiplied by `(-1)^{pq}`.
pub fn cable_apply(cr: &Crossing, v: &SparseVec, p: usize, q: usize, super_sign: bool) -> SparseVec {
    let (a, b) = (cr.left(), cr.right());
    let mut dims: Vec<usize> = std::iter::repeat_n(a, p).chain(std::iter::repeat_n(b, q)).collect();
    let mut w = v.clone();
    for j in 0..q {
        // b_{j+1} sits at slot p + j and moves to slot j.
        for k in (j..p + j).rev() {
            w = cr.apply_at(&w, &dims, k, Sign::Plus);
            dims.swap(k, k + 1);
        }
    }
    if super_sign && (p * q) % 2 == 1 {
        w = w.neg();
    }
    w
}

/// Inverse cable crossing `B^{⊗q} ⊗ A^{⊗p} -> A^{⊗p} ⊗ B^{⊗q}` from the
/// inverse elementary crossing `B ⊗ A -> A ⊗ B` (undoing [`cable_apply`] step
/// by step in reverse).
pub fn cable_inverse_apply(cr_inv: &Crossing, v: &SparseVec, p: usize, q: usize, super_sign: bool) -> SparseVec {
    let (b, a) = (cr_inv.left(), cr_inv.right());
    let mut dims: Vec<usize> = std::iter::repeat_n(b, q).chain(std::iter::repeat_n(a, p)).collect();
    let mut w = v.clone();
    for j in (0..q).rev() {
        for k in j..p + j {
            w = cr_inv.apply_at(&w, &dims, k, Sign::Plus);
            dims.swap(k, k + 1);
        }
    }
    if super_sign && (p * q) % 2 == 1 {
        w = w.neg();
    }
    w
}

fn cable_map(cr: &Crossing, p: usize, q: usize, super_sign: bool, ctx: &FieldCtx) -> LinMap {
    let dim = cr.left().pow(p as u32) * cr.right().pow(q as u32);
    LinMap::from_action(dim, dim, ctx, |j| cable_apply(cr, &SparseVec::unit(j, ctx), p, q, super_sign))
}

fn cable_inverse_map(cr_inv: &Crossing, p: usize, q: usize, super_sign: bool, ctx: &FieldCtx) -> LinMap {
    let dim = cr_inv.left().pow(q as u32) * cr_inv.right().pow(p as u32);
    LinMap::from_action(dim, dim, ctx, |j| cable_inverse_apply(cr_inv, &SparseVec::unit(j, ctx), p, q, super_sign))
}

/// A word in the lifts `Ψ_i^{±1}` on `V^{⊗n}`, applied right to left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    n: usize,
    letters: Vec<(usize, bool)>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<(usize, bool)>) -> Result<Self, BraidError> {
        if let Some(&(i, _)) = letters.iter().find(|(i, _)| *i == 0 || *i >= n) {
            return Err(BraidError::IndexOutOfRange { i, n });
        }
        Ok(BraidWord { n, letters })
    }

    pub fn apply(&self, b: &BraidedSpace, v: &SparseVec) -> SparseVec {
        self.letters.iter().rev().fold(v.clone(), |w, &(i, inverse)| {
            if inverse {
                b.lift_inv_apply(&w, self.n, i, Sign::Plus)
            } else {
                b.lift_apply(&w, self.n, i, Sign::Plus)
            }
        })
    }

    pub fn to_map(&self, b: &BraidedSpace) -> LinMap {
        let dim = b.power_dim(self.n);
        LinMap::from_action(dim, dim, b.ctx(), |j| self.apply(b, &SparseVec::unit(j, b.ctx())))
    }
}

/// The flip `e_a ⊗ e_b -> e_b ⊗ e_a` on a space with the given labels.
pub fn flip(labels: Vec<String>, ctx: &FieldCtx) -> Result<BraidedSpace, BraidError> {
    let one = ctx.one();
    BraidedSpace::from_rule(labels, ctx, |a, b| vec![(b, a, one.clone())])
}

/// Labels `x0, x1, ...`.
pub fn default_labels(d: usize) -> Vec<String> {
    (0..d).map(|i| format!("x{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(q: &Scalar) -> BraidedSpace {
        let ctx = q.ctx();
        let q = q.clone();
        BraidedSpace::from_rule(vec!["x".into()], &ctx, move |_, _| vec![(0, 0, q.clone())]).unwrap()
    }

    #[test]
    fn flip_lift_is_flip() {
        let k = FieldCtx::Rational;
        let b = flip(default_labels(2), &k).unwrap();
        assert_eq!(&b.lift(1, 2).unwrap(), b.psi());
        assert!(b.lift(2, 2).is_err());
    }

    #[test]
    fn one_dimensional_q_integers() {
        let k = FieldCtx::RatFun;
        let b = line(&k.q().unwrap());
        let binom = b.braided_binomial(2, 1, Sign::Plus);
        assert_eq!(binom.get(0, 0), k.q_int(2).unwrap());
        let fact = b.braided_factorial(3, Sign::Plus);
        assert_eq!(fact.get(0, 0), &k.q_int(2).unwrap() * &k.q_int(3).unwrap());
    }

    #[test]
    fn primed_binomial_is_q_binomial() {
        let k = FieldCtx::RatFun;
        let q = k.q().unwrap();
        let b = line(&q);
        let one = k.one();
        assert_eq!(b.braided_binomial_primed(2, 1, Sign::Plus).get(0, 0), &one + &q);
        // [4 2]_q = 1 + q + 2q² + q³ + q⁴
        let q2 = &q * &q;
        let want = &(&(&one + &q) + &(&q2 + &q2)) + &(&(&q2 * &q) + &(&q2 * &q2));
        assert_eq!(b.braided_binomial_primed(4, 2, Sign::Plus).get(0, 0), want);
        for n in 2..=4 {
            assert!(b.verify_factorisation_all(n, Sign::Minus));
        }
    }

    #[test]
    fn antisymmetrizer_has_rank_one() {
        let k = FieldCtx::Rational;
        let b = flip(default_labels(2), &k).unwrap();
        let f = b.braided_factorial(2, Sign::Minus);
        assert_eq!(f.rank(), 1);
        assert_eq!(*f, LinMap::identity(4, &k).sub(b.psi()).unwrap());
    }

    #[test]
    fn primed_integer_of_flip() {
        let k = FieldCtx::Rational;
        let b = flip(default_labels(2), &k).unwrap();
        let p1 = b.lift(1, 3).unwrap();
        let p2 = b.lift(2, 3).unwrap();
        let expect = LinMap::identity(8, &k).add(&p2).unwrap().add(&p1.compose(&p2).unwrap()).unwrap();
        assert_eq!(*b.braided_integer_primed(3, Sign::Plus), expect);
        assert_eq!(*b.braided_integer_primed(2, Sign::Plus), *b.braided_integer(2, Sign::Plus));
    }

    #[test]
    fn disjoint_lifts_commute() {
        let k = FieldCtx::RatFun;
        let q = k.q().unwrap();
        let b = BraidedSpace::from_rule(default_labels(2), &k, |a, c| vec![(c, a, if a == c { q.clone() } else { k.one() })])
            .unwrap();
        let l1 = b.lift(1, 4).unwrap();
        let l3 = b.lift(3, 4).unwrap();
        assert_eq!(l1.compose(&l3).unwrap(), l3.compose(&l1).unwrap());
    }

    #[test]
    fn super_lift_inverts() {
        let k = FieldCtx::RatFun;
        let q = k.q().unwrap();
        let b = BraidedSpace::from_rule(default_labels(2), &k, |a, c| vec![(c, a, if a == c { q.clone() } else { k.one() })])
            .unwrap();
        for (p, r) in [(0, 2), (1, 1), (2, 1), (1, 2), (2, 2)] {
            let f = b.super_lift(p, r);
            let g = b.super_lift_inv(p, r);
            assert!(g.compose(&f).unwrap().is_identity(), "p={p} q={r}");
        }
        assert_eq!(b.super_lift(1, 1), b.psi().scale(&-k.one()));
        assert!(b.super_lift(0, 2).is_identity());
    }

    #[test]
    fn non_braid_map_is_rejected() {
        let k = FieldCtx::Rational;
        // An invertible map on V⊗V that is not a braiding.
        let psi = LinMap::from_fn(4, 4, &k, |i, j| if i == j || (i == 0 && j == 1) { k.one() } else { k.zero() });
        let psi = psi.compose(&flip(default_labels(2), &k).unwrap().psi().clone()).unwrap();
        let res = BraidedSpace::new(default_labels(2), psi);
        assert!(matches!(res, Err(BraidError::BraidRelation)));
    }
}
