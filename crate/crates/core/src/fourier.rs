//! The braided Fourier transform `F: B -> B*` and its adjoint `F★: B* -> B`
//! on a finite-dimensional `B±(V)` with a one-dimensional top degree.
//!
//! `F(x) = (∫ ⊗ id)((x · exp⁽¹⁾) ⊗ exp⁽²⁾)`: multiply into the first leg of the
//! exponential and integrate. `F★` does the same on the dual side against
//! `Ψ_sup^{-1} exp`. Both are assembled as matrices per degree.

use crate::linalg::{LinMap, SparseVec};
use crate::nichols::{Duality, ExpElement, GradedElement, NicholsAlgebra, NicholsError};
use crate::report::Check;
use crate::scalars::{Scalar, ScalarError};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FourierError {
    #[error("no one-dimensional top degree")]
    NoTopForm,
    #[error("volume form must be a nonzero top-degree element")]
    BadVolume,
    #[error("the constant (∫ ⊗ ∫*) exp vanishes")]
    ZeroMu,
    #[error(transparent)]
    Nichols(#[from] NicholsError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Debug)]
pub struct FourierCtx {
    duality: Duality,
    exp: ExpElement,
    top: usize,
    vol: Scalar,
    vol_star: Scalar,
    inv_exp_super: Vec<LinMap>,
    inv_exp_plain: Vec<LinMap>,
    mu: Scalar,
}

fn top_coefficient(alg: &NicholsAlgebra, top: usize, x: Option<&GradedElement>) -> Result<Scalar, FourierError> {
    match x {
        None => Ok(alg.ctx().one()),
        Some(v) if v.homogeneous_degree() == Some(top) => Ok(v.coeff(top, 0)),
        Some(_) => Err(FourierError::BadVolume),
    }
}

impl FourierCtx {
    /// `vol` and `vol_star` fix the integrals by `∫ Vol = 1`, `∫* Vol* = 1`;
    /// `None` takes the top basis monomial.
    pub fn new(duality: Duality, vol: Option<&GradedElement>, vol_star: Option<&GradedElement>) -> Result<Self, FourierError> {
        let (p, d) = (duality.primal().clone(), duality.dual().clone());
        let top = match (p.top_degree(), d.top_degree()) {
            (Some(a), Some(b)) if a == b && p.dim(a) == 1 && d.dim(a) == 1 => a,
            _ => return Err(FourierError::NoTopForm),
        };
        let vol = top_coefficient(&p, top, vol)?;
        let vol_star = top_coefficient(&d, top, vol_star)?;
        let exp = duality.exp()?;
        let inv_exp_super = duality.inverse_braided_exp(&exp, duality.super_sign());
        let inv_exp_plain = duality.inverse_braided_exp(&exp, false);
        let c = exp.block(top).expect("top block").get(0, 0);
        let mu = c.try_div(&(&vol * &vol_star))?;
        if mu.is_zero() {
            return Err(FourierError::ZeroMu);
        }
        Ok(FourierCtx { duality, exp, top, vol, vol_star, inv_exp_super, inv_exp_plain, mu })
    }

    pub fn duality(&self) -> &Duality {
        &self.duality
    }

    pub fn primal(&self) -> &Arc<NicholsAlgebra> {
        self.duality.primal()
    }

    pub fn dual(&self) -> &Arc<NicholsAlgebra> {
        self.duality.dual()
    }

    pub fn exp(&self) -> &ExpElement {
        &self.exp
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// `μ = (∫ ⊗ ∫*) exp`.
    pub fn mu(&self) -> &Scalar {
        &self.mu
    }

    /// Blocks of `Ψ_sup^{-1} exp` (rows dual, columns primal).
    pub fn inverse_braided_exp(&self) -> &[LinMap] {
        &self.inv_exp_super
    }

    pub fn integral(&self, x: &GradedElement) -> Scalar {
        x.coeff(self.top, 0).try_div(&self.vol).expect("nonzero volume")
    }

    pub fn integral_star(&self, c: &GradedElement) -> Scalar {
        c.coeff(self.top, 0).try_div(&self.vol_star).expect("nonzero volume")
    }

    /// `Int[I][j] = ∫(b_j · b_I)` for `b_j` of degree `m`, `b_I` of degree `top - m`.
    fn integration_matrix(&self, alg: &NicholsAlgebra, m: usize, vol: &Scalar) -> LinMap {
        let k = self.top - m;
        let inv = vol.inv().expect("nonzero volume");
        LinMap::from_fn(alg.dim(k), alg.dim(m), alg.ctx(), |i, j| {
            let prod = alg.mul_basis(m, j, k, i).expect("degrees within top");
            prod.get(0).map_or_else(|| alg.ctx().zero(), |c| c * &inv)
        })
    }

    /// `F` on degree `m`, a map `Λ^m -> Λ*^{top-m}`.
    pub fn fourier_map(&self, m: usize) -> LinMap {
        let k = self.top - m;
        let int = self.integration_matrix(self.primal(), m, &self.vol);
        let c = self.exp.block(k).expect("exp block");
        c.transpose().compose(&int).expect("shapes")
    }

    fn star_map(&self, m: usize, blocks: &[LinMap]) -> LinMap {
        let k = self.top - m;
        let int = self.integration_matrix(self.dual(), m, &self.vol_star);
        blocks[k].transpose().compose(&int).expect("shapes")
    }

    /// `F★` on dual degree `m`, a map `Λ*^m -> Λ^{top-m}`.
    pub fn fourier_star_map(&self, m: usize) -> LinMap {
        self.star_map(m, &self.inv_exp_super)
    }

    /// `F★` computed against the inverse braiding without super signs.
    pub fn fourier_star_plain_map(&self, m: usize) -> LinMap {
        self.star_map(m, &self.inv_exp_plain)
    }

    fn apply_graded(&self, x: &GradedElement, f: impl Fn(usize) -> LinMap) -> GradedElement {
        x.map_degrees(|m, v| (m <= self.top).then(|| (self.top - m, f(m).apply(v))))
    }

    pub fn fourier(&self, x: &GradedElement) -> GradedElement {
        self.apply_graded(x, |m| self.fourier_map(m))
    }

    pub fn fourier_star(&self, c: &GradedElement) -> GradedElement {
        self.apply_graded(c, |m| self.fourier_star_map(m))
    }

    /// Checks `F★ F = μ S` on every degree.
    pub fn verify_star_after_fourier(&self) -> Vec<Check> {
        (0..=self.top)
            .map(|m| {
                let lhs = self.fourier_star_map(self.top - m).compose(&self.fourier_map(m)).expect("shapes");
                let rhs = self.primal().antipode_map(m).scale(&self.mu);
                Check::compare(format!("fstar_f_deg{m}"), &rhs, &lhs)
            })
            .collect()
    }

    /// Checks `F F★ = c(m) μ S*` on every dual degree `m`, for an
    /// instance-specific degree correction `c`.
    pub fn verify_fourier_after_star(&self, correction: impl Fn(usize) -> Scalar) -> Vec<Check> {
        (0..=self.top)
            .map(|m| {
                let lhs = self.fourier_map(self.top - m).compose(&self.fourier_star_map(m)).expect("shapes");
                let rhs = self.dual().antipode_map(m).scale(&(&correction(m) * &self.mu));
                Check::compare(format!("f_fstar_deg{m}"), &rhs, &lhs)
            })
            .collect()
    }

    /// Every `F_m` is invertible.
    pub fn fourier_is_bijective(&self) -> bool {
        (0..=self.top).all(|m| {
            let f = self.fourier_map(m);
            f.rows() == f.cols() && f.rank() == f.rows()
        })
    }

    /// Coevaluation property: `(<c, ·> ⊗ id) exp = c` for every dual basis `c`,
    /// evaluated through tensor representatives rather than the stored Gram.
    pub fn verify_coevaluation(&self) -> bool {
        let (p, d) = (self.primal(), self.dual());
        (0..=self.top).all(|m| {
            let c = self.exp.block(m).expect("exp block");
            (0..d.dim(m)).all(|l| {
                let dual_tensor = d.lift(m, &SparseVec::unit(l, p.ctx()));
                // (<b*_L, ·> ⊗ id) exp = Σ_{I,K} <b*_L, b_I> C_{IK} b*_K.
                let pair_row: Vec<Scalar> = (0..p.dim(m))
                    .map(|i| self.duality.pair_representatives(m, &dual_tensor, &p.lift(m, &SparseVec::unit(i, p.ctx()))))
                    .collect();
                let out = SparseVec::from_entries((0..d.dim(m)).map(|k| {
                    let mut acc = p.ctx().zero();
                    for (i, x) in pair_row.iter().enumerate() {
                        acc += &(x * &c.get(i, k));
                    }
                    (k, acc)
                }));
                out == SparseVec::unit(l, p.ctx())
            })
        })
    }
}
