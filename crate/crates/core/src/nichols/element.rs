use crate::linalg::SparseVec;
use crate::scalars::{FieldCtx, Scalar};
use std::collections::BTreeMap;

/// A finitely supported element of a graded algebra: one coordinate vector
/// per degree, in that degree's monomial basis. Zero components are dropped,
/// so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    ctx: FieldCtx,
    parts: BTreeMap<usize, SparseVec>,
}

impl GradedElement {
    pub fn zero(ctx: &FieldCtx) -> Self {
        GradedElement { ctx: ctx.clone(), parts: BTreeMap::new() }
    }

    pub fn scalar(c: Scalar) -> Self {
        let ctx = c.ctx();
        Self::homogeneous(&ctx, 0, SparseVec::single(0, c))
    }

    pub fn one(ctx: &FieldCtx) -> Self {
        Self::scalar(ctx.one())
    }

    pub fn homogeneous(ctx: &FieldCtx, m: usize, v: SparseVec) -> Self {
        let mut parts = BTreeMap::new();
        if !v.is_zero() {
            parts.insert(m, v);
        }
        GradedElement { ctx: ctx.clone(), parts }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> impl Iterator<Item = (usize, &SparseVec)> + '_ {
        self.parts.iter().map(|(m, v)| (*m, v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.parts.keys().copied().collect()
    }

    /// Degree-`m` component (zero vector if absent).
    pub fn component(&self, m: usize) -> SparseVec {
        self.parts.get(&m).cloned().unwrap_or_default()
    }

    /// The single degree of a nonzero homogeneous element.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match self.parts.len() {
            1 => self.parts.keys().next().copied(),
            _ => None,
        }
    }

    /// Coefficient of basis element `k` in degree `m`.
    pub fn coeff(&self, m: usize, k: usize) -> Scalar {
        self.parts.get(&m).and_then(|v| v.get(k).cloned()).unwrap_or_else(|| self.ctx.zero())
    }

    pub fn add(&self, other: &GradedElement) -> GradedElement {
        let mut parts = self.parts.clone();
        for (m, v) in &other.parts {
            let sum = parts.get(m).map_or_else(|| v.clone(), |w| w.add(v));
            if sum.is_zero() {
                parts.remove(m);
            } else {
                parts.insert(*m, sum);
            }
        }
        GradedElement { ctx: self.ctx.clone(), parts }
    }

    pub fn sub(&self, other: &GradedElement) -> GradedElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GradedElement {
        self.map_parts(|_, v| Some(v.neg()))
    }

    pub fn scale(&self, c: &Scalar) -> GradedElement {
        self.map_parts(|_, v| Some(v.scale(c)))
    }

    /// Applies `f` degreewise; `None` or zero results are dropped.
    pub fn map_parts(&self, f: impl Fn(usize, &SparseVec) -> Option<SparseVec>) -> GradedElement {
        let parts = self
            .parts
            .iter()
            .filter_map(|(m, v)| f(*m, v).filter(|w| !w.is_zero()).map(|w| (*m, w)))
            .collect();
        GradedElement { ctx: self.ctx.clone(), parts }
    }

    /// Applies a degree-changing map `m -> (m', f(v))` and sums the results.
    pub fn map_degrees(&self, f: impl Fn(usize, &SparseVec) -> Option<(usize, SparseVec)>) -> GradedElement {
        self.parts.iter().filter_map(|(m, v)| f(*m, v)).fold(Self::zero(&self.ctx), |acc, (m, w)| {
            acc.add(&GradedElement::homogeneous(&self.ctx, m, w))
        })
    }
}
