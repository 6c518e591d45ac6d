//! Graded quotients `B±(V) = TV / ⊕_m ker[m, ±Ψ]!` with their product,
//! braided coproduct and antipode.
//!
//! Degree `m` is presented as a quotient of `V^{⊗m}` whose basis is the set of
//! lexicographically smallest surviving monomials. Since
//! `[m]! = (id ⊗ [m-1]!)[m]` and `ker [m-1]! = ker P_{m-1}`, the relations in
//! degree `m` are the kernel of `(id ⊗ P_{m-1}) [m; ±Ψ]`, which is small.

mod duality;
mod element;

pub use duality::{Duality, ExpElement};
pub use element::GradedElement;

use crate::braiding::{BraidError, BraidedSpace, Sign};
use crate::linalg::{Accumulator, LinMap, LinalgError, Quotient, SparseVec, Subspace};
use crate::scalars::{FieldCtx, Scalar};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NicholsError {
    #[error("degree {degree} exceeds the construction cap {cap}")]
    CapExceeded { degree: usize, cap: usize },
    #[error("exterior algebra has no top degree within {cap} degrees")]
    TopNotReached { cap: usize },
    #[error("no one-dimensional top degree")]
    NoTopForm,
    #[error("pairing in degree {0} is degenerate")]
    DegenerateGram(usize),
    #[error("dual and primal generators differ in number: {dual} vs {primal}")]
    DualShape { dual: usize, primal: usize },
    #[error("unknown generator label `{0}`")]
    UnknownLabel(String),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The quotient algebra `B±(V)` up to its top degree (or a degree cap).
#[derive(Clone, Debug)]
pub struct NicholsAlgebra {
    space: BraidedSpace,
    sign: Sign,
    cap: usize,
    degrees: Vec<Quotient>,
    top: Option<usize>,
    antipode: Vec<LinMap>,
}

impl NicholsAlgebra {
    /// Builds all degrees up to `max_degree`. For `Sign::Minus` the top degree
    /// must be reached within the cap.
    pub fn build(space: BraidedSpace, sign: Sign, max_degree: usize) -> Result<Self, NicholsError> {
        let ctx = space.ctx().clone();
        let d = space.dim();
        let mut degrees = vec![
            Quotient::from_map(&LinMap::identity(1, &ctx)),
            Quotient::from_map(&LinMap::identity(d, &ctx)),
        ];
        let mut top = if d == 0 { Some(0) } else { None };
        let mut m = 2;
        while top.is_none() && m <= max_degree {
            let prev = &degrees[m - 1];
            let rows = d * prev.dim();
            let tail = space.power_dim(m - 1);
            let map = LinMap::from_action(rows, space.power_dim(m), &ctx, |j| {
                let w = space.integer_apply(&SparseVec::unit(j, &ctx), m, 0, m, sign);
                let mut acc = Accumulator::new();
                for (t, c) in w.iter() {
                    let head = t / tail;
                    for (k, x) in prev.projector().column(t % tail).iter() {
                        acc.add(head * prev.dim() + k, &(c * x));
                    }
                }
                acc.finish()
            });
            let q = Quotient::from_map(&map);
            if q.dim() == 0 {
                top = Some(m - 1);
            } else {
                degrees.push(q);
                m += 1;
            }
        }
        if top.is_none() && sign == Sign::Minus {
            return Err(NicholsError::TopNotReached { cap: max_degree });
        }
        degrees.truncate(max_degree.max(top.unwrap_or(0)) + 1);
        let mut alg = NicholsAlgebra { space, sign, cap: max_degree, degrees, top, antipode: Vec::new() };
        alg.antipode = alg.compute_antipode();
        Ok(alg)
    }

    pub fn space(&self) -> &BraidedSpace {
        &self.space
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.space.ctx()
    }

    /// Highest degree that is stored.
    pub fn built_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.top
    }

    /// `dim Λ^m`; zero above the top degree.
    pub fn dim(&self, m: usize) -> usize {
        self.degrees.get(m).map_or(0, Quotient::dim)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(Quotient::dim).collect()
    }

    /// Stored quotient data for degree `m`.
    pub fn degree(&self, m: usize) -> Option<&Quotient> {
        self.degrees.get(m)
    }

    fn check_degree(&self, m: usize) -> Result<(), NicholsError> {
        if m < self.degrees.len() || self.top.is_some_and(|t| m > t) {
            Ok(())
        } else {
            Err(NicholsError::CapExceeded { degree: m, cap: self.cap })
        }
    }

    /// Whether degree `m` is known (stored, or known to vanish).
    pub fn has_degree(&self, m: usize) -> bool {
        self.check_degree(m).is_ok()
    }

    /// Tensor-power index of each basis monomial of degree `m`.
    pub fn survivors(&self, m: usize) -> &[usize] {
        self.degrees.get(m).map_or(&[], |q| q.survivors())
    }

    pub fn basis_label(&self, m: usize, k: usize) -> String {
        if m == 0 {
            return "1".into();
        }
        self.space.word_label(self.survivors(m)[k], m)
    }

    pub fn basis_labels(&self, m: usize) -> Vec<String> {
        (0..self.dim(m)).map(|k| self.basis_label(m, k)).collect()
    }

    /// Projects a tensor in `V^{⊗m}` to degree-`m` coordinates.
    pub fn project(&self, m: usize, t: &SparseVec) -> Result<SparseVec, NicholsError> {
        self.check_degree(m)?;
        Ok(self.degrees.get(m).map_or_else(SparseVec::new, |q| q.project(t)))
    }

    /// Section representative in `V^{⊗m}` of degree-`m` coordinates.
    pub fn lift(&self, m: usize, v: &SparseVec) -> SparseVec {
        self.degrees.get(m).map_or_else(SparseVec::new, |q| q.lift(v))
    }

    /// Kernel of the projector in degree `m` (the relations).
    pub fn relations(&self, m: usize) -> Subspace {
        match self.degrees.get(m) {
            Some(q) => q.projector().kernel(),
            None if self.top.is_some_and(|t| m > t) => {
                let n = self.space.power_dim(m);
                Subspace::span(n, (0..n).map(|i| SparseVec::unit(i, self.ctx())).collect())
            }
            None => Subspace::span(self.space.power_dim(m), Vec::new()),
        }
    }

    /// Image of the monomial `e_{i_1} ... e_{i_m}` as a homogeneous element.
    pub fn monomial(&self, word: &[usize]) -> Result<GradedElement, NicholsError> {
        let m = word.len();
        let t = SparseVec::unit(self.space.index_of(word), self.ctx());
        Ok(GradedElement::homogeneous(self.ctx(), m, self.project(m, &t)?))
    }

    /// Monomial by generator labels.
    pub fn word(&self, labels: &[&str]) -> Result<GradedElement, NicholsError> {
        let idx = labels
            .iter()
            .map(|l| self.space.labels().iter().position(|x| x == l).ok_or_else(|| NicholsError::UnknownLabel(l.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        self.monomial(&idx)
    }

    pub fn generator(&self, i: usize) -> GradedElement {
        GradedElement::homogeneous(self.ctx(), 1, SparseVec::unit(i, self.ctx()))
    }

    pub fn basis_element(&self, m: usize, k: usize) -> GradedElement {
        GradedElement::homogeneous(self.ctx(), m, SparseVec::unit(k, self.ctx()))
    }

    /// Product of basis monomials `b_i` (degree `r`) and `b_j` (degree `s`).
    pub fn mul_basis(&self, r: usize, i: usize, s: usize, j: usize) -> Result<SparseVec, NicholsError> {
        self.check_degree(r + s)?;
        match self.degrees.get(r + s) {
            None => Ok(SparseVec::new()),
            Some(q) => {
                let idx = self.survivors(r)[i] * self.space.power_dim(s) + self.survivors(s)[j];
                Ok(q.projector().column(idx).clone())
            }
        }
    }

    /// Product of homogeneous coordinate vectors.
    pub fn mul_homog(&self, r: usize, a: &SparseVec, s: usize, b: &SparseVec) -> Result<SparseVec, NicholsError> {
        self.check_degree(r + s)?;
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_vec(&self.mul_basis(r, i, s, j)?, &(x * y));
            }
        }
        Ok(acc.finish())
    }

    /// Matrix of multiplication `Λ^r ⊗ Λ^s -> Λ^{r+s}` (columns `i dim_s + j`).
    pub fn mul_map(&self, r: usize, s: usize) -> Result<LinMap, NicholsError> {
        self.check_degree(r + s)?;
        let ds = self.dim(s);
        let cols = (0..self.dim(r) * ds).map(|c| self.mul_basis(r, c / ds, s, c % ds)).collect::<Result<Vec<_>, _>>()?;
        Ok(LinMap::from_columns(self.dim(r + s), self.ctx(), cols))
    }

    pub fn product(&self, x: &GradedElement, y: &GradedElement) -> Result<GradedElement, NicholsError> {
        let mut out = GradedElement::zero(self.ctx());
        for (r, a) in x.parts() {
            for (s, b) in y.parts() {
                out = out.add(&GradedElement::homogeneous(self.ctx(), r + s, self.mul_homog(r, a, s, b)?));
            }
        }
        Ok(out)
    }

    /// `Δ_{r, m-r}` of a degree-`m` coordinate vector, as coordinates in
    /// `Λ^r ⊗ Λ^{m-r}` with index `i dim_{m-r} + j`.
    pub fn coproduct_homog(&self, m: usize, v: &SparseVec, r: usize) -> Result<SparseVec, NicholsError> {
        assert!(r <= m, "coproduct split {r} exceeds degree {m}");
        self.check_degree(m)?;
        let t = self.lift(m, v);
        let w = self.space.binomial_apply(&t, m, 0, m, r, self.sign);
        let tail = self.space.power_dim(m - r);
        let ds = self.dim(m - r);
        let (qa, qb) = (&self.degrees[r], &self.degrees[m - r]);
        let mut acc = Accumulator::new();
        for (idx, c) in w.iter() {
            let left = qa.projector().column(idx / tail);
            if left.is_zero() {
                continue;
            }
            let right = qb.projector().column(idx % tail);
            for (i, x) in left.iter() {
                for (j, y) in right.iter() {
                    acc.add(i * ds + j, &(&(c * x) * y));
                }
            }
        }
        Ok(acc.finish())
    }

    /// Matrix of `Δ_{r, m-r}`.
    pub fn coproduct_map(&self, m: usize, r: usize) -> Result<LinMap, NicholsError> {
        let cols = (0..self.dim(m))
            .map(|k| self.coproduct_homog(m, &SparseVec::unit(k, self.ctx()), r))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LinMap::from_columns(self.dim(r) * self.dim(m - r), self.ctx(), cols))
    }

    /// `·(f ⊗ id) Δ_{r,m-r}` applied to `v`, where `f` acts on the left leg.
    fn contract_left(&self, m: usize, v: &SparseVec, r: usize, f: &LinMap) -> Result<SparseVec, NicholsError> {
        let delta = self.coproduct_homog(m, v, r)?;
        let ds = self.dim(m - r);
        let mut acc = Accumulator::new();
        for (idx, c) in delta.iter() {
            let (i, j) = (idx / ds, idx % ds);
            for (k, x) in f.column(i).iter() {
                acc.add_vec(&self.mul_basis(r, k, m - r, j)?, &(c * x));
            }
        }
        Ok(acc.finish())
    }

    fn compute_antipode(&self) -> Vec<LinMap> {
        let ctx = self.ctx().clone();
        let mut maps: Vec<LinMap> = Vec::new();
        for m in 0..self.degrees.len() {
            let n = self.dim(m);
            let map = match m {
                0 => LinMap::identity(1, &ctx),
                _ => {
                    let cols = (0..n)
                        .map(|k| {
                            let v = SparseVec::unit(k, &ctx);
                            let mut s = v.neg();
                            for (r, lower) in maps.iter().enumerate().take(m).skip(1) {
                                let t = self.contract_left(m, &v, r, lower).expect("degrees below built cap");
                                s = s.sub(&t);
                            }
                            s
                        })
                        .collect();
                    LinMap::from_columns(n, &ctx, cols)
                }
            };
            maps.push(map);
        }
        maps
    }

    /// Matrix of the braided antipode on degree `m`.
    pub fn antipode_map(&self, m: usize) -> LinMap {
        self.antipode.get(m).cloned().unwrap_or_else(|| LinMap::zero(0, 0, self.ctx()))
    }

    pub fn antipode(&self, x: &GradedElement) -> GradedElement {
        x.map_parts(|m, v| self.antipode.get(m).map(|s| s.apply(v)))
    }

    /// `·(S ⊗ id)Δ` on a degree-`m` vector; should equal `ε`.
    pub fn antipode_axiom(&self, m: usize, v: &SparseVec) -> Result<SparseVec, NicholsError> {
        let mut acc = Accumulator::new();
        for r in 0..=m {
            acc.add_vec(&self.contract_left(m, v, r, &self.antipode[r])?, &self.ctx().one());
        }
        Ok(acc.finish())
    }

    /// Checks `·(S ⊗ id)Δ = ηε` on every basis element.
    pub fn verify_antipode_axiom(&self) -> Result<bool, NicholsError> {
        let ctx = self.ctx();
        for m in 0..self.degrees.len() {
            for k in 0..self.dim(m) {
                let out = self.antipode_axiom(m, &SparseVec::unit(k, ctx))?;
                let expect = if m == 0 { SparseVec::unit(0, ctx) } else { SparseVec::new() };
                if out != expect {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The degree-`m` coordinates of the top-degree monomial picked by the
    /// unique top survivor.
    pub fn top_basis(&self) -> Result<(usize, SparseVec), NicholsError> {
        match self.top {
            Some(n) if self.dim(n) == 1 => Ok((n, SparseVec::unit(0, self.ctx()))),
            _ => Err(NicholsError::NoTopForm),
        }
    }

    /// Renders an element with basis labels, e.g. `e_ue_v - 2 e_we_u`.
    pub fn format(&self, x: &GradedElement) -> String {
        let mut terms = Vec::new();
        for (m, v) in x.parts() {
            for (k, c) in v.iter() {
                terms.push(format_term(c, &self.basis_label(m, k)));
            }
        }
        join_terms(terms)
    }
}

pub(crate) fn format_term(c: &Scalar, label: &str) -> (bool, String) {
    let neg = c.is_negative_constant();
    let mag = if neg { -c } else { c.clone() };
    let body = if mag.is_one() {
        label.to_string()
    } else if label == "1" {
        format!("{mag}")
    } else {
        let s = mag.to_string();
        if s.contains(' ') { format!("({s}) {label}") } else { format!("{s} {label}") }
    };
    (neg, body)
}

pub(crate) fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{default_labels, flip};

    #[test]
    fn classical_exterior_algebra() {
        let k = FieldCtx::Rational;
        let alg = NicholsAlgebra::build(flip(default_labels(3), &k).unwrap(), Sign::Minus, 6).unwrap();
        assert_eq!(alg.dims(), vec![1, 3, 3, 1]);
        assert_eq!(alg.top_degree(), Some(3));
        let x = alg.monomial(&[1, 0]).unwrap();
        assert_eq!(x, alg.monomial(&[0, 1]).unwrap().scale(&-k.one()));
        assert!(alg.verify_antipode_axiom().unwrap());
        // Reversal signs cancel against the super signs, leaving S = (-1)^m.
        assert_eq!(alg.antipode_map(2), LinMap::identity(3, &k));
        assert_eq!(alg.antipode_map(3), LinMap::identity(1, &k).scale(&-k.one()));
    }

    #[test]
    fn everything_vanishes_above_the_top() {
        let k = FieldCtx::Rational;
        let alg = NicholsAlgebra::build(flip(default_labels(2), &k).unwrap(), Sign::Minus, 6).unwrap();
        assert_eq!(alg.relations(3).dim(), 8);
        assert_eq!(alg.relations(2).dim(), 3);
    }

    #[test]
    fn symmetric_algebra_to_cap() {
        let k = FieldCtx::Rational;
        let alg = NicholsAlgebra::build(flip(default_labels(2), &k).unwrap(), Sign::Plus, 4).unwrap();
        assert_eq!(alg.dims(), vec![1, 2, 3, 4, 5]);
        assert_eq!(alg.top_degree(), None);
        assert!(matches!(alg.mul_basis(3, 0, 2, 0), Err(NicholsError::CapExceeded { .. })));
    }

    #[test]
    fn generators_are_primitive() {
        let k = FieldCtx::Rational;
        let alg = NicholsAlgebra::build(flip(default_labels(2), &k).unwrap(), Sign::Minus, 4).unwrap();
        let e = SparseVec::unit(1, &k);
        assert_eq!(alg.coproduct_homog(1, &e, 0).unwrap(), e);
        assert_eq!(alg.coproduct_homog(1, &e, 1).unwrap(), e);
    }

    #[test]
    fn formatting() {
        let k = FieldCtx::Rational;
        let alg = NicholsAlgebra::build(flip(vec!["x".into(), "y".into()], &k).unwrap(), Sign::Minus, 4).unwrap();
        let x = alg.word(&["y", "x"]).unwrap().add(&alg.generator(0).scale(&k.int(2)));
        assert_eq!(alg.format(&x), "2 x - xy");
    }
}
