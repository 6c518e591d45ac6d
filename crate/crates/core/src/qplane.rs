//! Differential calculus on braided planes: `Ω(B) = B ⊗ Λ` for `B = B₊(V)`
//! and `Λ = B₋(V)`, with `d` read off from the braided coproduct, the
//! 2-dimensional quantum plane, its fermionic partner as a Fourier instance,
//! and the anyonic line.

use crate::braiding::{cable_apply, BraidedSpace, Sign};
use crate::fourier::{FourierCtx, FourierError};
use crate::linalg::{Accumulator, LinMap, SparseVec};
use crate::nichols::{Duality, NicholsAlgebra, NicholsError};
use crate::scalars::{FieldCtx, Scalar, ScalarError};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneError {
    #[error("braided plane relation failed: {0}")]
    RelationFailure(String),
    #[error(transparent)]
    Nichols(#[from] NicholsError),
    #[error(transparent)]
    Fourier(#[from] FourierError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

impl From<crate::braiding::BraidError> for PlaneError {
    fn from(e: crate::braiding::BraidError) -> Self {
        PlaneError::Nichols(e.into())
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// The plane braiding `Ψ(x⊗x) = q²x⊗x, Ψ(x⊗y) = q y⊗x,
/// Ψ(y⊗x) = q x⊗y + (q²-1) y⊗x, Ψ(y⊗y) = q²y⊗y`, times `scale`.
pub fn plane_braiding(ctx: &FieldCtx, names: &[&str], scale: &Scalar) -> Result<BraidedSpace, PlaneError> {
    let q = ctx.q()?;
    let q2 = &q * &q;
    let one = ctx.one();
    let c = |x: &Scalar| x * scale;
    let rule = |a: usize, b: usize| match (a, b) {
        (0, 0) => vec![(0, 0, c(&q2))],
        (0, 1) => vec![(1, 0, c(&q))],
        (1, 0) => vec![(0, 1, c(&q)), (1, 0, c(&(&q2 - &one)))],
        _ => vec![(1, 1, c(&q2))],
    };
    Ok(BraidedSpace::from_rule(labels(names), ctx, rule)?)
}

/// Homogeneous pieces of `Ω = B ⊗ Λ`, keyed by `(deg_B, deg_Λ)` with
/// coordinates indexed `i dim Λ^p + j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PlaneForm {
    parts: BTreeMap<(usize, usize), SparseVec>,
}

impl PlaneForm {
    pub fn homogeneous(r: usize, p: usize, v: SparseVec) -> Self {
        let mut parts = BTreeMap::new();
        if !v.is_zero() {
            parts.insert((r, p), v);
        }
        PlaneForm { parts }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn component(&self, r: usize, p: usize) -> SparseVec {
        self.parts.get(&(r, p)).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &PlaneForm) -> PlaneForm {
        let mut parts = self.parts.clone();
        for (k, v) in &other.parts {
            let s = parts.get(k).map_or_else(|| v.clone(), |w| w.add(v));
            if s.is_zero() {
                parts.remove(k);
            } else {
                parts.insert(*k, s);
            }
        }
        PlaneForm { parts }
    }

    pub fn scale(&self, c: &Scalar) -> PlaneForm {
        PlaneForm {
            parts: self.parts.iter().map(|(k, v)| (*k, v.scale(c))).filter(|(_, v)| !v.is_zero()).collect(),
        }
    }
}

/// `Ω(B₊(V)) = B₊(V) ⊗ B₋(V)` with the braided tensor product relations
/// `(1 ⊗ v)(w ⊗ 1) = Ψ(v ⊗ w)`.
#[derive(Clone, Debug)]
pub struct PlaneCalculus {
    coords: NicholsAlgebra,
    forms: NicholsAlgebra,
    cross: BraidedSpace,
}

impl PlaneCalculus {
    /// `coords` uses `psi_plus` (sign +); the forms use `forms_space` (sign −);
    /// forms pass coordinates via `psi_plus`.
    pub fn new(psi_plus: BraidedSpace, forms_space: BraidedSpace, cap: usize) -> Result<Self, PlaneError> {
        let coords = NicholsAlgebra::build(psi_plus.clone(), Sign::Plus, cap)?;
        let forms = NicholsAlgebra::build(forms_space, Sign::Minus, cap)?;
        Ok(PlaneCalculus { coords, forms, cross: psi_plus })
    }

    /// The quantum plane `yx = qxy` with fermionic forms `Ψ₋ = q^{-2}Ψ₊`.
    pub fn quantum_plane(ctx: &FieldCtx, cap: usize) -> Result<Self, PlaneError> {
        let plus = plane_braiding(ctx, &["x", "y"], &ctx.one())?;
        let minus = plane_braiding(ctx, &["dx", "dy"], &ctx.q_pow(-2)?)?;
        Self::new(plus, minus, cap)
    }

    pub fn coords(&self) -> &NicholsAlgebra {
        &self.coords
    }

    pub fn forms(&self) -> &NicholsAlgebra {
        &self.forms
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.coords.ctx()
    }

    /// `b ⊗ 1` for coordinates `v` of degree `r`.
    pub fn function(&self, r: usize, v: SparseVec) -> PlaneForm {
        PlaneForm::homogeneous(r, 0, v)
    }

    /// `1 ⊗ ω` for ω of form degree `p`.
    pub fn form(&self, p: usize, v: SparseVec) -> PlaneForm {
        PlaneForm::homogeneous(0, p, v)
    }

    /// `Ψ(ω ⊗ b)` for form degree `p`, coordinate degree `r`, as `B^r ⊗ Λ^p`.
    fn exchange(&self, p: usize, j: usize, r: usize, k: usize) -> Result<SparseVec, PlaneError> {
        let d = self.cross.dim();
        let t = self.forms.survivors(p)[j] * d.pow(r as u32) + self.coords.survivors(r)[k];
        let w = cable_apply(self.cross.crossing(), &SparseVec::unit(t, self.ctx()), p, r, false);
        let tail = d.pow(p as u32);
        let dp = self.forms.dim(p);
        let mut acc = Accumulator::new();
        for (idx, c) in w.iter() {
            let left = self.coords.project(r, &SparseVec::unit(idx / tail, self.ctx()))?;
            let right = self.forms.project(p, &SparseVec::unit(idx % tail, self.ctx()))?;
            for (a, x) in left.iter() {
                for (b, y) in right.iter() {
                    acc.add(a * dp + b, &(&(c * x) * y));
                }
            }
        }
        Ok(acc.finish())
    }

    /// Product in Ω: `(b ⊗ ω)(b' ⊗ ω') = b Ψ(ω ⊗ b') ω'`.
    pub fn mul(&self, x: &PlaneForm, y: &PlaneForm) -> Result<PlaneForm, PlaneError> {
        let mut out = PlaneForm::default();
        for (&(r1, p1), u) in &x.parts {
            for (&(r2, p2), v) in &y.parts {
                let (dp1, dp2) = (self.forms.dim(p1), self.forms.dim(p2));
                let dp = self.forms.dim(p1 + p2);
                let mut acc = Accumulator::new();
                for (i1, c1) in u.iter() {
                    let (b1, w1) = (i1 / dp1, i1 % dp1);
                    for (i2, c2) in v.iter() {
                        let (b2, w2) = (i2 / dp2, i2 % dp2);
                        let c = c1 * c2;
                        for (e, x) in self.exchange(p1, w1, r2, b2)?.iter() {
                            let (bm, wm) = (e / dp1, e % dp1);
                            let bb = self.coords.mul_basis(r1, b1, r2, bm)?;
                            let ww = self.forms.mul_basis(p1, wm, p2, w2)?;
                            let cx = &c * x;
                            for (a, y1) in bb.iter() {
                                for (b, y2) in ww.iter() {
                                    acc.add(a * dp + b, &(&(&cx * y1) * y2));
                                }
                            }
                        }
                    }
                }
                out = out.add(&PlaneForm::homogeneous(r1 + r2, p1 + p2, acc.finish()));
            }
        }
        Ok(out)
    }

    /// `∂^i` on coordinate degree `m`: `Δ_{m-1,1} b = Σ_i ∂^i b ⊗ e_i`.
    /// Returns one matrix `B^m -> B^{m-1}` per generator.
    pub fn partials(&self, m: usize) -> Result<Vec<LinMap>, PlaneError> {
        let d = self.cross.dim();
        let ctx = self.ctx().clone();
        if m == 0 {
            return Ok(vec![LinMap::zero(0, 1, &ctx); d]);
        }
        let delta = self.coords.coproduct_map(m, m - 1)?;
        Ok((0..d)
            .map(|i| {
                LinMap::from_action(self.coords.dim(m - 1), self.coords.dim(m), &ctx, |col| {
                    SparseVec::from_entries(
                        delta.column(col).iter().filter(|(idx, _)| idx % d == i).map(|(idx, c)| (idx / d, c.clone())),
                    )
                })
            })
            .collect())
    }

    /// `d(b ⊗ ω) = Σ_i ∂^i b ⊗ e_i ω`.
    pub fn d(&self, x: &PlaneForm) -> Result<PlaneForm, PlaneError> {
        let mut out = PlaneForm::default();
        for (&(r, p), v) in &x.parts {
            if r == 0 {
                continue;
            }
            let parts = self.partials(r)?;
            let dp = self.forms.dim(p);
            let dq = self.forms.dim(p + 1);
            let mut acc = Accumulator::new();
            for (idx, c) in v.iter() {
                let (b, w) = (idx / dp, idx % dp);
                for (i, di) in parts.iter().enumerate() {
                    let form = self.forms.mul_basis(1, i, p, w)?;
                    for (b2, x) in di.column(b).iter() {
                        for (w2, y) in form.iter() {
                            acc.add(b2 * dq + w2, &(&(c * x) * y));
                        }
                    }
                }
            }
            out = out.add(&PlaneForm::homogeneous(r - 1, p + 1, acc.finish()));
        }
        Ok(out)
    }

    /// `d` on a tensor in `V^{⊗n}` before passing to the quotient:
    /// `(η_{n-1} ⊗ η_1)[n n-1; Ψ]`, landing in `B^{n-1} ⊗ Λ^1`.
    pub fn d_tensor(&self, n: usize, t: &SparseVec) -> Result<SparseVec, PlaneError> {
        let w = self.cross.binomial_apply(t, n, 0, n, n - 1, Sign::Plus);
        let d = self.cross.dim();
        let mut acc = Accumulator::new();
        for (idx, c) in w.iter() {
            for (a, x) in self.coords.project(n - 1, &SparseVec::unit(idx / d, self.ctx()))?.iter() {
                acc.add(a * d + idx % d, &(c * x));
            }
        }
        Ok(acc.finish())
    }

    /// Coordinate-degree-`r` basis element `b_k` as a form.
    pub fn coord(&self, r: usize, k: usize) -> PlaneForm {
        PlaneForm::homogeneous(r, 0, SparseVec::unit(k, self.ctx()))
    }

    /// Index of the monomial `x^m y^n` in the coordinate basis of degree `m+n`.
    pub fn monomial_index(&self, m: usize, n: usize) -> Result<(usize, Scalar), PlaneError> {
        let word: Vec<usize> = std::iter::repeat_n(0, m).chain(std::iter::repeat_n(1, n)).collect();
        let v = self.coords.monomial(&word)?.component(m + n);
        match v.entries() {
            [(k, c)] => Ok((*k, c.clone())),
            _ => Err(PlaneError::RelationFailure(format!("x^{m}y^{n} is not a basis monomial"))),
        }
    }

    /// Quadratic relations of the forms equal the annihilator of the
    /// coordinate relations under the componentwise pairing on `V ⊗ V`.
    pub fn koszul_dual_relations_hold(&self) -> bool {
        let n = self.cross.power_dim(2);
        let r = self.coords.relations(2);
        let perp = LinMap::from_columns(n, self.ctx(), r.basis().to_vec()).transpose().kernel();
        let k = self.forms.relations(2);
        k.is_subspace_of(&perp) && perp.is_subspace_of(&k)
    }
}

/// The fermionic plane `B₋(V)` for `Ψ₋ = q^{-2}Ψ₊` on generators `e_1, e_2`,
/// dually paired with `B₋(V*)` on `f^1, f^2`, as a Fourier instance with
/// `Vol = e_1e_2`, `Vol* = f^1f^2`.
pub fn fermionic_plane(ctx: &FieldCtx) -> Result<FourierCtx, PlaneError> {
    let space = plane_braiding(ctx, &["e_1", "e_2"], &ctx.q_pow(-2)?)?;
    let alg = Arc::new(NicholsAlgebra::build(space, Sign::Minus, 4)?);
    let duality = Duality::canonical(alg, labels(&["f^1", "f^2"]))?;
    let vol = duality.primal().word(&["e_1", "e_2"])?;
    let vol_star = duality.dual().word(&["f^1", "f^2"])?;
    Ok(FourierCtx::new(duality, Some(&vol), Some(&vol_star))?)
}

/// The anyonic line `k[x]/(x^{n+1})` with `Ψ(x⊗x) = q x⊗x`, `q` a primitive
/// `(n+1)`-th root of unity, dual `k[y]/(y^{n+1})`.
pub fn anyonic_line(n: u32) -> Result<FourierCtx, PlaneError> {
    let ctx = FieldCtx::cyclotomic(n + 1)?;
    let q = ctx.q()?;
    let space = BraidedSpace::from_rule(labels(&["x"]), &ctx, |_, _| vec![(0, 0, q.clone())])?;
    let alg = Arc::new(NicholsAlgebra::build(space, Sign::Plus, n as usize + 1)?);
    let duality = Duality::canonical(alg, labels(&["y"]))?;
    Ok(FourierCtx::new(duality, None, None)?)
}
