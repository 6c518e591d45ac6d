//! Duality pairing between `B±(V*)` and `B±(V)`, the braided exponential
//! (coevaluation) element, and its transport by the inverse braiding.
//!
//! Tensors pair by nested evaluation after the braided factorial:
//! `<f_1 ⊗ ... ⊗ f_m, w> = Σ prod_k f_k(w_{m+1-k})` with `w = [m, ±Ψ]! v`.
//! With a metric installed the dual side is identified with `B±(V)` itself
//! and `f_k(w)` becomes the inverse metric `(e_j, e_k)`.

use super::{NicholsAlgebra, NicholsError};
use crate::braiding::{cable_inverse_apply, BraidedSpace, Crossing};
use crate::linalg::{Accumulator, LinMap, LinalgError, SparseVec};
use crate::scalars::Scalar;
use std::sync::Arc;

use super::GradedElement;

/// A pairing `B* ⊗ B -> k` together with the mixed braiding `V* ⊗ V -> V ⊗ V*`.
#[derive(Clone, Debug)]
pub struct Duality {
    primal: Arc<NicholsAlgebra>,
    dual: Arc<NicholsAlgebra>,
    elem: Vec<Vec<Scalar>>,
    cross_inv: Crossing,
    super_sign: bool,
    metric: bool,
    grams: Vec<LinMap>,
}

impl Duality {
    /// Metric identification: the dual side is `primal` itself and
    /// generators pair by `g_low[i][j] = (e_i, e_j)`.
    pub fn metric(primal: Arc<NicholsAlgebra>, g_low: &LinMap) -> Result<Self, NicholsError> {
        let d = primal.space().dim();
        if g_low.rows() != d || g_low.cols() != d {
            return Err(NicholsError::DualShape { dual: g_low.rows(), primal: d });
        }
        let elem = g_low.to_dense();
        let cross_inv = primal.space().crossing_inv().clone();
        Self::assemble(primal.clone(), primal, elem, cross_inv, true)
    }

    /// The canonical dual `B±(V*)` on dual generators `labels`, with braiding
    /// `Ψ*(f^a ⊗ f^b) = Σ Ψ^{ba}_{kl} f^l ⊗ f^k` adjoint to `Ψ` under nested
    /// evaluation.
    pub fn canonical(primal: Arc<NicholsAlgebra>, labels: Vec<String>) -> Result<Self, NicholsError> {
        let space = primal.space();
        let d = space.dim();
        if labels.len() != d {
            return Err(NicholsError::DualShape { dual: labels.len(), primal: d });
        }
        let ctx = space.ctx().clone();
        let psi = space.psi();
        let psi_star = LinMap::from_fn(d * d, d * d, &ctx, |row, col| {
            let (l, k) = (row / d, row % d);
            let (a, b) = (col / d, col % d);
            psi.get(b * d + a, k * d + l)
        });
        let dual_space = BraidedSpace::new(labels, psi_star)?;
        let dual = NicholsAlgebra::build(dual_space, primal.sign(), primal.built_degree() + 1)?;
        // Ψ(f^l ⊗ e_k) = Σ (Ψ^{-1})^{la}_{kb} e_a ⊗ f^b, forced by naturality of ev.
        let inv = space.psi_inv();
        let mixed = LinMap::from_fn(d * d, d * d, &ctx, |row, col| {
            let (a, b) = (row / d, row % d);
            let (l, k) = (col / d, col % d);
            inv.get(l * d + a, k * d + b)
        });
        let mixed_inv = mixed.inverse().map_err(|_| NicholsError::Linalg(LinalgError::NotInvertible))?;
        let cross_inv = Crossing::from_map(d, d, &mixed_inv);
        let elem = (0..d).map(|j| (0..d).map(|k| if j == k { ctx.one() } else { ctx.zero() }).collect()).collect();
        Self::assemble(primal, Arc::new(dual), elem, cross_inv, false)
    }

    fn assemble(
        primal: Arc<NicholsAlgebra>,
        dual: Arc<NicholsAlgebra>,
        elem: Vec<Vec<Scalar>>,
        cross_inv: Crossing,
        metric: bool,
    ) -> Result<Self, NicholsError> {
        let super_sign = primal.sign() == crate::braiding::Sign::Minus;
        let mut out = Duality { primal, dual, elem, cross_inv, super_sign, metric, grams: Vec::new() };
        let top = out.primal.built_degree().min(out.dual.built_degree());
        out.grams = (0..=top).map(|m| out.compute_gram(m)).collect();
        Ok(out)
    }

    pub fn primal(&self) -> &Arc<NicholsAlgebra> {
        &self.primal
    }

    pub fn dual(&self) -> &Arc<NicholsAlgebra> {
        &self.dual
    }

    pub fn is_metric(&self) -> bool {
        self.metric
    }

    /// Whether crossings carry the super sign `(-1)^{pq}`.
    pub fn super_sign(&self) -> bool {
        self.super_sign
    }

    /// Nested pairing of the dual tensor basis vector with flat index
    /// `dual_idx` against a tensor `w` in `V^{⊗m}`.
    fn pair_tensor(&self, m: usize, dual_idx: usize, w: &SparseVec) -> Scalar {
        let ctx = self.primal.ctx();
        let f = self.dual.space().digits(dual_idx, m);
        let mut acc = ctx.zero();
        for (t, c) in w.iter() {
            let v = self.primal.space().digits(t, m);
            let mut term = c.clone();
            for k in 0..m {
                term = &term * &self.elem[f[k]][v[m - 1 - k]];
                if term.is_zero() {
                    break;
                }
            }
            acc += &term;
        }
        acc
    }

    fn compute_gram(&self, m: usize) -> LinMap {
        let ctx = self.primal.ctx().clone();
        let sp = self.primal.space();
        let dual_surv = self.dual.survivors(m).to_vec();
        let cols = self
            .primal
            .survivors(m)
            .iter()
            .map(|&s| {
                let w = sp.factorial_apply(&SparseVec::unit(s, &ctx), m, 0, m, self.primal.sign());
                SparseVec::from_entries(dual_surv.iter().enumerate().map(|(k, &f)| (k, self.pair_tensor(m, f, &w))))
            })
            .collect();
        LinMap::from_columns(dual_surv.len(), &ctx, cols)
    }

    /// Gram matrix `<b*_K, b_I>` of degree `m` (rows dual, columns primal).
    pub fn gram(&self, m: usize) -> Option<&LinMap> {
        self.grams.get(m)
    }

    /// Pairing of tensor representatives, without passing through the
    /// quotient bases; used to test well-definedness.
    pub fn pair_representatives(&self, m: usize, dual_tensor: &SparseVec, tensor: &SparseVec) -> Scalar {
        let w = self.primal.space().factorial_apply(tensor, m, 0, m, self.primal.sign());
        let mut acc = self.primal.ctx().zero();
        for (f, c) in dual_tensor.iter() {
            acc += &(c * &self.pair_tensor(m, f, &w));
        }
        acc
    }

    /// `<x*, y>`, summed over matching degrees.
    pub fn pairing(&self, x_dual: &GradedElement, y: &GradedElement) -> Scalar {
        let ctx = self.primal.ctx();
        let mut acc = ctx.zero();
        for (m, a) in x_dual.parts() {
            if let Some(g) = self.grams.get(m) {
                acc += &a.dot(&g.apply(&y.component(m)), ctx);
            }
        }
        acc
    }

    /// `exp = Σ_m Σ b_I (Gram_m^{-1})_{IK} ⊗ b*_K`.
    pub fn exp(&self) -> Result<ExpElement, NicholsError> {
        let blocks = self
            .grams
            .iter()
            .enumerate()
            .map(|(m, g)| g.inverse().map_err(|_| NicholsError::DegenerateGram(m)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExpElement { blocks })
    }

    /// Blocks `D_m` of `Ψ^{-1} exp = Σ b*_K D_{KI} ⊗ b_I`, the inverse cable
    /// crossing applied blockwise, with or without the super sign.
    pub fn inverse_braided_exp(&self, exp: &ExpElement, super_sign: bool) -> Vec<LinMap> {
        let ctx = self.primal.ctx().clone();
        exp.blocks
            .iter()
            .enumerate()
            .map(|(m, c)| {
                let (np, nd) = (self.primal.dim(m), self.dual.dim(m));
                let dual_pow = self.dual.space().power_dim(m);
                let prim_pow = self.primal.space().power_dim(m);
                let (qd, qp) = (&self.dual.degrees[m], &self.primal.degrees[m]);
                let mut cols: Vec<Accumulator> = (0..np).map(|_| Accumulator::new()).collect();
                // C is stored column-wise by the dual index K.
                for k in 0..nd {
                    for (i, x) in c.column(k).iter() {
                        let t = self.primal.survivors(m)[i] * dual_pow + self.dual.survivors(m)[k];
                        let w = cable_inverse_apply(&self.cross_inv, &SparseVec::unit(t, &ctx), m, m, super_sign);
                        for (idx, y) in w.iter() {
                            let left = qd.projector().column(idx / prim_pow);
                            if left.is_zero() {
                                continue;
                            }
                            let xy = x * y;
                            for (b, v) in qp.projector().column(idx % prim_pow).iter() {
                                let xyv = &xy * v;
                                for (a, u) in left.iter() {
                                    cols[b].add(a, &(&xyv * u));
                                }
                            }
                        }
                    }
                }
                LinMap::from_columns(nd, &ctx, cols.into_iter().map(Accumulator::finish).collect())
            })
            .collect()
    }
}

/// The coevaluation element, one block per degree: `(C_m)_{IK}` is the
/// coefficient of `b_I ⊗ b*_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpElement {
    blocks: Vec<LinMap>,
}

impl ExpElement {
    pub fn block(&self, m: usize) -> Option<&LinMap> {
        self.blocks.get(m)
    }

    pub fn blocks(&self) -> &[LinMap] {
        &self.blocks
    }
}
