//! Metrics on `Λ¹`, the Hodge star `♯ = g∘F`, interior products, the
//! codifferential `δ = (S♯)^{-1} d (S♯)`, the Hodge Laplacian and cohomology.
//!
//! With a metric the dual algebra is identified with `Λ` itself, so `♯` is
//! the Fourier transform computed against the metric pairing.

use crate::braiding::BraidedSpace;
use crate::fourier::{FourierCtx, FourierError};
use crate::linalg::{Accumulator, LinMap, LinalgError, SparseVec};
use crate::nichols::{Duality, GradedElement, NicholsAlgebra, NicholsError};
use crate::report::Check;
use crate::scalars::{FieldCtx, Scalar};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("metric pairing must be an invertible {dim}x{dim} matrix")]
    BadMetric { dim: usize },
    #[error("Hodge star is not invertible in degree {0}")]
    NotInvertible(usize),
    #[error("no differential installed")]
    NoDifferential,
    #[error("d∘d does not vanish on degree {0}")]
    NotAComplex(usize),
    #[error("differential has the wrong shape on degree {0}")]
    BadDifferential(usize),
    #[error(transparent)]
    Fourier(#[from] FourierError),
    #[error(transparent)]
    Nichols(#[from] NicholsError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn parity(ctx: &FieldCtx, m: usize) -> Scalar {
    if m.is_multiple_of(2) {
        ctx.one()
    } else {
        -ctx.one()
    }
}

/// A metric `g = Σ g^{ij} e_i ⊗ e_j` with inverse pairing `(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    low: LinMap,
    up: LinMap,
}

impl Metric {
    /// From the pairing matrix `low[i][j] = (e_i, e_j)`.
    pub fn from_pairing(low: LinMap) -> Result<Self, HodgeError> {
        let dim = low.rows();
        if low.cols() != dim {
            return Err(HodgeError::BadMetric { dim });
        }
        let up = low.inverse().map_err(|_| HodgeError::BadMetric { dim })?;
        Ok(Metric { low, up })
    }

    /// From the tensor coefficients `up[i][j] = g^{ij}`.
    pub fn from_tensor(up: LinMap) -> Result<Self, HodgeError> {
        let dim = up.rows();
        let low = up.inverse().map_err(|_| HodgeError::BadMetric { dim })?;
        Ok(Metric { low, up })
    }

    pub fn dim(&self) -> usize {
        self.low.rows()
    }

    /// `(e_i, e_j)`.
    pub fn pairing(&self, i: usize, j: usize) -> Scalar {
        self.low.get(i, j)
    }

    pub fn pairing_matrix(&self) -> &LinMap {
        &self.low
    }

    /// `(x, y)` for coordinate vectors in `Λ¹`.
    pub fn pair(&self, x: &SparseVec, y: &SparseVec) -> Scalar {
        x.dot(&self.low.apply(y), self.low.ctx())
    }

    /// `g` as a vector in `V ⊗ V`.
    pub fn tensor(&self) -> SparseVec {
        let d = self.dim();
        SparseVec::from_entries((0..d * d).map(|t| (t, self.up.get(t / d, t % d))))
    }

    /// `Σ_j g^{ij} (e_j, e_k) = δ_{ik}`.
    pub fn contraction_is_identity(&self) -> bool {
        self.up.compose(&self.low).map(|m| m.is_identity()).unwrap_or(false)
    }

    /// `Ψ(g) = g`.
    pub fn is_quantum_symmetric(&self, space: &BraidedSpace) -> bool {
        let g = self.tensor();
        space.psi().apply(&g) == g
    }

    /// `∧(g) = 0` in `Λ²`.
    pub fn wedge_vanishes(&self, alg: &NicholsAlgebra) -> Result<bool, HodgeError> {
        Ok(alg.project(2, &self.tensor())?.is_zero())
    }
}

/// A finite cochain complex with an invertible `S♯` exchanging degrees `m`
/// and `n - m`, enough for `δ`, `□` and cohomology.
#[derive(Clone, Debug)]
pub struct HodgeComplex {
    ctx: FieldCtx,
    dims: Vec<usize>,
    d: Vec<LinMap>,
    s_sharp: Vec<LinMap>,
    s_sharp_inv: Vec<LinMap>,
}

impl HodgeComplex {
    /// `d[m]: Ω^m -> Ω^{m+1}` for `m < n` and `s_sharp[m]: Ω^m -> Ω^{n-m}`.
    pub fn new(ctx: &FieldCtx, d: Vec<LinMap>, s_sharp: Vec<LinMap>) -> Result<Self, HodgeError> {
        let n = s_sharp.len().saturating_sub(1);
        let dims: Vec<usize> = s_sharp.iter().map(LinMap::cols).collect();
        if d.len() != n {
            return Err(HodgeError::BadDifferential(d.len()));
        }
        for (m, dm) in d.iter().enumerate() {
            if dm.cols() != dims[m] || dm.rows() != dims[m + 1] {
                return Err(HodgeError::BadDifferential(m));
            }
        }
        let s_sharp_inv = s_sharp
            .iter()
            .enumerate()
            .map(|(m, s)| s.inverse().map_err(|_| HodgeError::NotInvertible(m)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HodgeComplex { ctx: ctx.clone(), dims, d, s_sharp, s_sharp_inv })
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, m: usize) -> usize {
        self.dims.get(m).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `d` on degree `m`; the zero map out of the top degree.
    pub fn d_map(&self, m: usize) -> LinMap {
        self.d.get(m).cloned().unwrap_or_else(|| LinMap::zero(self.dim(m + 1), self.dim(m), &self.ctx))
    }

    pub fn s_sharp_map(&self, m: usize) -> &LinMap {
        &self.s_sharp[m]
    }

    /// Inverse of `S♯` on degree `m`, a map `Ω^{n-m} -> Ω^m`.
    pub fn s_sharp_inv_map(&self, m: usize) -> &LinMap {
        &self.s_sharp_inv[m]
    }

    /// `δ = (S♯)^{-1} d (S♯)`, a map `Ω^m -> Ω^{m-1}`.
    pub fn codifferential_map(&self, m: usize) -> LinMap {
        let n = self.top();
        if m == 0 {
            return LinMap::zero(0, self.dim(0), &self.ctx);
        }
        let inner = self.d_map(n - m).compose(&self.s_sharp[m]).expect("shapes");
        self.s_sharp_inv[m - 1].compose(&inner).expect("shapes")
    }

    /// `□ = dδ + δd` on degree `m`.
    pub fn laplacian_map(&self, m: usize) -> LinMap {
        let dd = if m < self.top() {
            self.codifferential_map(m + 1).compose(&self.d_map(m)).expect("shapes")
        } else {
            LinMap::zero(self.dim(m), self.dim(m), &self.ctx)
        };
        if m == 0 {
            return dd;
        }
        self.d_map(m - 1).compose(&self.codifferential_map(m)).expect("shapes").add(&dd).expect("shapes")
    }

    fn apply(&self, x: &GradedElement, shift: impl Fn(usize) -> Option<(usize, LinMap)>) -> GradedElement {
        x.map_degrees(|m, v| shift(m).map(|(k, f)| (k, f.apply(v))))
    }

    pub fn d(&self, x: &GradedElement) -> GradedElement {
        self.apply(x, |m| (m < self.top()).then(|| (m + 1, self.d_map(m))))
    }

    pub fn codifferential(&self, x: &GradedElement) -> GradedElement {
        self.apply(x, |m| (m > 0).then(|| (m - 1, self.codifferential_map(m))))
    }

    pub fn laplacian(&self, x: &GradedElement) -> GradedElement {
        self.apply(x, |m| Some((m, self.laplacian_map(m))))
    }

    pub fn betti_numbers(&self) -> Result<Vec<usize>, HodgeError> {
        betti_numbers(&self.dims, &self.d)
    }
}

/// `dim ker d_m - rank d_{m-1}` for every degree.
pub fn betti_numbers(dims: &[usize], d: &[LinMap]) -> Result<Vec<usize>, HodgeError> {
    for m in 1..d.len() {
        if !d[m].compose(&d[m - 1])?.is_zero() {
            return Err(HodgeError::NotAComplex(m - 1));
        }
    }
    let ranks: Vec<usize> = d.iter().map(LinMap::rank).collect();
    Ok(dims
        .iter()
        .enumerate()
        .map(|(m, &n)| {
            let out = ranks.get(m).copied().unwrap_or(0);
            let inc = if m == 0 { 0 } else { ranks.get(m - 1).copied().unwrap_or(0) };
            n - out - inc
        })
        .collect())
}

/// Graded-commutator differential `d ω = θω - (-1)^m ωθ` on `Λ`, one map per
/// degree below the top.
pub fn inner_differential(alg: &NicholsAlgebra, theta: &SparseVec) -> Result<Vec<LinMap>, HodgeError> {
    let n = alg.top_degree().ok_or(NicholsError::NoTopForm)?;
    let ctx = alg.ctx();
    (0..n)
        .map(|m| {
            let cols = (0..alg.dim(m))
                .map(|k| {
                    let w = SparseVec::unit(k, ctx);
                    let left = alg.mul_homog(1, theta, m, &w)?;
                    let right = alg.mul_homog(m, &w, 1, theta)?;
                    Ok(left.add_scaled(&right, &-parity(ctx, m)))
                })
                .collect::<Result<Vec<_>, NicholsError>>()?;
            Ok(LinMap::from_columns(alg.dim(m + 1), ctx, cols))
        })
        .collect()
}

/// Operations shared by `Λ` and by the full exterior algebra `Ω` once a
/// product, a left interior product and a Hodge complex are available.
pub trait FormAlgebra {
    fn complex(&self) -> Result<&HodgeComplex, HodgeError>;

    fn form_ctx(&self) -> &FieldCtx;

    fn mul(&self, a: &GradedElement, b: &GradedElement) -> Result<GradedElement, HodgeError>;

    /// `η ⊢ ω` for a 1-form `η`.
    fn interior(&self, eta: &GradedElement, omega: &GradedElement) -> Result<GradedElement, HodgeError>;

    fn d(&self, x: &GradedElement) -> Result<GradedElement, HodgeError> {
        Ok(self.complex()?.d(x))
    }

    fn codifferential(&self, x: &GradedElement) -> Result<GradedElement, HodgeError> {
        Ok(self.complex()?.codifferential(x))
    }

    fn laplacian(&self, x: &GradedElement) -> Result<GradedElement, HodgeError> {
        Ok(self.complex()?.laplacian(x))
    }

    /// `L_δ(ω, η) = δ(ωη) - (δω)η - (-1)^{|ω|} ω δη`.
    fn leibnizator(&self, omega: &GradedElement, eta: &GradedElement) -> Result<GradedElement, HodgeError> {
        let mut out = GradedElement::zero(self.form_ctx());
        for m in omega.degrees() {
            let w = GradedElement::homogeneous(self.form_ctx(), m, omega.component(m));
            let a = self.codifferential(&self.mul(&w, eta)?)?;
            let b = self.mul(&self.codifferential(&w)?, eta)?;
            let c = self.mul(&w, &self.codifferential(eta)?)?.scale(&parity(self.form_ctx(), m));
            out = out.add(&a.sub(&b).sub(&c));
        }
        Ok(out)
    }

    /// `ℒ_η ω = η ⊢ dω + d(η ⊢ ω)`.
    fn lie_derivative(&self, eta: &GradedElement, omega: &GradedElement) -> Result<GradedElement, HodgeError> {
        let a = self.interior(eta, &self.d(omega)?)?;
        let b = self.d(&self.interior(eta, omega)?)?;
        Ok(a.add(&b))
    }
}

/// The Hodge star and its companions on `Λ = B₋(Λ¹)` with a metric.
#[derive(Clone, Debug)]
pub struct HodgeCtx {
    fourier: FourierCtx,
    metric: Metric,
    sharp: Vec<LinMap>,
    sharp_star: Vec<LinMap>,
    complex: Option<HodgeComplex>,
}

impl HodgeCtx {
    /// `vol` normalises the integral; `None` takes the top basis monomial.
    pub fn new(alg: Arc<NicholsAlgebra>, metric: Metric, vol: Option<&GradedElement>) -> Result<Self, HodgeError> {
        if metric.dim() != alg.space().dim() {
            return Err(HodgeError::BadMetric { dim: alg.space().dim() });
        }
        let duality = Duality::metric(alg, metric.pairing_matrix())?;
        let fourier = FourierCtx::new(duality, vol, vol)?;
        let n = fourier.top();
        let sharp: Vec<LinMap> = (0..=n).map(|m| fourier.fourier_map(m)).collect();
        for (m, s) in sharp.iter().enumerate() {
            if s.rows() != s.cols() || s.rank() != s.rows() {
                return Err(HodgeError::NotInvertible(m));
            }
        }
        // Integration against Ψ^{-1}exp without super signs.
        let sharp_star = (0..=n).map(|m| fourier.fourier_star_plain_map(m)).collect();
        Ok(HodgeCtx { fourier, metric, sharp, sharp_star, complex: None })
    }

    /// Installs `d` on `Λ`, one map per degree below the top.
    pub fn with_differential(mut self, d: Vec<LinMap>) -> Result<Self, HodgeError> {
        let s_sharp = (0..=self.top()).map(|m| self.s_sharp_map(m)).collect();
        self.complex = Some(HodgeComplex::new(self.algebra().ctx(), d, s_sharp)?);
        Ok(self)
    }

    /// Installs the inner differential `[θ, ·}`.
    pub fn with_inner_differential(self, theta: &SparseVec) -> Result<Self, HodgeError> {
        let d = inner_differential(self.algebra(), theta)?;
        self.with_differential(d)
    }

    pub fn algebra(&self) -> &Arc<NicholsAlgebra> {
        self.fourier.primal()
    }

    pub fn fourier(&self) -> &FourierCtx {
        &self.fourier
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.algebra().ctx()
    }

    pub fn top(&self) -> usize {
        self.fourier.top()
    }

    pub fn mu(&self) -> &Scalar {
        self.fourier.mu()
    }

    /// `♯: Λ^m -> Λ^{n-m}`.
    pub fn hodge_map(&self, m: usize) -> &LinMap {
        &self.sharp[m]
    }

    /// `♯★: Λ^m -> Λ^{n-m}`.
    pub fn hodge_star_star_map(&self, m: usize) -> &LinMap {
        &self.sharp_star[m]
    }

    pub fn hodge(&self, x: &GradedElement) -> GradedElement {
        x.map_degrees(|m, v| self.sharp.get(m).map(|s| (self.top() - m, s.apply(v))))
    }

    pub fn hodge_star_star(&self, x: &GradedElement) -> GradedElement {
        x.map_degrees(|m, v| self.sharp_star.get(m).map(|s| (self.top() - m, s.apply(v))))
    }

    pub fn antipode_map(&self, m: usize) -> LinMap {
        self.algebra().antipode_map(m)
    }

    /// `S♯: Λ^m -> Λ^{n-m}`.
    pub fn s_sharp_map(&self, m: usize) -> LinMap {
        self.antipode_map(self.top() - m).compose(&self.sharp[m]).expect("shapes")
    }

    /// `η ⊢ ω = (η, ω₍₁₎) ω₍₂₎` with `Δ_{1,m-1}`.
    pub fn interior_left(&self, eta: &SparseVec, omega: &GradedElement) -> Result<GradedElement, HodgeError> {
        let alg = self.algebra();
        let weights = self.metric.pairing_matrix().transpose().apply(eta);
        let mut out = GradedElement::zero(self.ctx());
        for (m, v) in omega.parts() {
            if m == 0 {
                continue;
            }
            let delta = alg.coproduct_homog(m, v, 1)?;
            let ds = alg.dim(m - 1);
            let mut acc = Accumulator::new();
            for (idx, c) in delta.iter() {
                if let Some(w) = weights.get(idx / ds) {
                    acc.add(idx % ds, &(c * w));
                }
            }
            out = out.add(&GradedElement::homogeneous(self.ctx(), m - 1, acc.finish()));
        }
        Ok(out)
    }

    /// `ω ⊣ η = ω₍₁₎ (ω₍₂₎, η)` with `Δ_{m-1,1}`.
    pub fn interior_right(&self, omega: &GradedElement, eta: &SparseVec) -> Result<GradedElement, HodgeError> {
        let alg = self.algebra();
        let weights = self.metric.pairing_matrix().apply(eta);
        let d = alg.space().dim();
        let mut out = GradedElement::zero(self.ctx());
        for (m, v) in omega.parts() {
            if m == 0 {
                continue;
            }
            let delta = alg.coproduct_homog(m, v, m - 1)?;
            let mut acc = Accumulator::new();
            for (idx, c) in delta.iter() {
                if let Some(w) = weights.get(idx % d) {
                    acc.add(idx / d, &(c * w));
                }
            }
            out = out.add(&GradedElement::homogeneous(self.ctx(), m - 1, acc.finish()));
        }
        Ok(out)
    }

    /// Both interior-product identities `S♯(η⊢ω) = η(S♯ω)` and
    /// `♯(ωη) = (♯ω)⊣η` on every pair of basis elements, one check per degree.
    pub fn verify_interior_identities(&self) -> Result<Vec<Check>, HodgeError> {
        let alg = self.algebra().clone();
        let (ctx, n, d) = (self.ctx().clone(), self.top(), alg.space().dim());
        let mut checks = Vec::new();
        for m in 0..=n {
            let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
            for a in 0..d {
                let eta = SparseVec::unit(a, &ctx);
                for k in 0..alg.dim(m) {
                    let w = alg.basis_element(m, k);
                    let inner = self.interior_left(&eta, &w)?;
                    let l = self.s_sharp_el(&inner);
                    let r = alg.product(&alg.generator(a), &self.s_sharp_el(&w))?;
                    lhs.push(l.component(n + 1 - m));
                    rhs.push(r.component(n + 1 - m));
                }
            }
            checks.push(Check::compare(format!("left_interior_deg{m}"), &rhs, &lhs));
        }
        for m in 0..=n {
            let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
            for a in 0..d {
                let eta = SparseVec::unit(a, &ctx);
                for k in 0..alg.dim(m) {
                    let w = alg.basis_element(m, k);
                    let l = self.hodge(&alg.product(&w, &alg.generator(a))?);
                    let r = self.interior_right(&self.hodge(&w), &eta)?;
                    let deg = (n - m).saturating_sub(1);
                    lhs.push(l.component(deg));
                    rhs.push(r.component(deg));
                }
            }
            checks.push(Check::compare(format!("right_interior_deg{m}"), &rhs, &lhs));
        }
        Ok(checks)
    }

    fn s_sharp_el(&self, x: &GradedElement) -> GradedElement {
        x.map_degrees(|m, v| (m <= self.top()).then(|| (self.top() - m, self.s_sharp_map(m).apply(v))))
    }

    /// The structural identities around `♯`: graded commutation with `S`,
    /// outer-degree behaviour and `♯★ = μ(-1)^D S ♯^{-1}`.
    pub fn verify_star_identities(&self) -> Result<Vec<Check>, HodgeError> {
        let (ctx, n) = (self.ctx().clone(), self.top());
        let mu = self.mu().clone();
        let alg = self.algebra();
        let mut checks = Vec::new();
        for m in 0..=n {
            let lhs = self.sharp[m].compose(&alg.antipode_map(m))?;
            let rhs = alg.antipode_map(n - m).compose(&self.sharp[m])?.scale(&parity(&ctx, n));
            checks.push(Check::compare(format!("sharp_antipode_deg{m}"), &rhs, &lhs));
            let inv = self.sharp[m].inverse()?;
            // ♯★ on degree n-m equals μ(-1)^{n-m} S ♯^{-1}.
            let expect = alg.antipode_map(m).compose(&inv)?.scale(&(&mu * &parity(&ctx, n - m)));
            checks.push(Check::compare(format!("sharp_star_formula_deg{}", n - m), &expect, &self.sharp_star[n - m]));
        }
        for m in outer_degrees(n) {
            let sq = self.sharp[n - m].compose(&self.sharp[m])?;
            checks.push(Check::compare(format!("sharp_squared_deg{m}"), &LinMap::identity(sq.rows(), &ctx).scale(&mu), &sq));
            checks.push(Check::compare(format!("sharp_star_outer_deg{m}"), &self.sharp[m], &self.sharp_star[m]));
            let sign = LinMap::identity(alg.dim(m), &ctx).scale(&parity(&ctx, m));
            checks.push(Check::compare(format!("antipode_outer_deg{m}"), &sign, &alg.antipode_map(m)));
        }
        Ok(checks)
    }
}

/// Degrees `0, 1, n-1, n` without repeats.
pub fn outer_degrees(n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = [0, 1, n.saturating_sub(1), n].into_iter().filter(|&m| m <= n).collect();
    v.sort_unstable();
    v.dedup();
    v
}

impl FormAlgebra for HodgeCtx {
    fn complex(&self) -> Result<&HodgeComplex, HodgeError> {
        self.complex.as_ref().ok_or(HodgeError::NoDifferential)
    }

    fn form_ctx(&self) -> &FieldCtx {
        self.ctx()
    }

    fn mul(&self, a: &GradedElement, b: &GradedElement) -> Result<GradedElement, HodgeError> {
        Ok(self.algebra().product(a, b)?)
    }

    fn interior(&self, eta: &GradedElement, omega: &GradedElement) -> Result<GradedElement, HodgeError> {
        self.interior_left(&eta.component(1), omega)
    }
}
