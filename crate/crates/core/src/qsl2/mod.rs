//! The R-matrix route to the 4D calculus on `k_q[SL₂]`: the crossed module on
//! `M_n`, its braiding, the exterior algebra with metric and Hodge star, the
//! matrix braided-Lie algebra and the monomial partial derivatives.

mod blie;
mod calculus;
mod coords;
mod partials;

pub use blie::{BLieAlgebra, Letter, RescaledBasis, WordEvaluator};
pub use calculus::{FormModule, RCalculus, Sl2Calculus};
pub use coords::{Sl2Coords, Sl2Mono, Sl2Word};
pub use partials::{MonoPoly, Monomial3, MonomialCalculus, Partial};

use crate::braiding::BraidError;
use crate::hodge::HodgeError;
use crate::linalg::{LinMap, LinalgError};
use crate::nichols::NicholsError;
use crate::scalars::{FieldCtx, Scalar, ScalarError};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QslError {
    #[error("R-matrix is not invertible")]
    NotInvertible,
    #[error("R-matrix does not satisfy the quantum Yang-Baxter equation")]
    BraidRelationFailure,
    #[error("R-matrix has no second inverse")]
    NoSecondInverse,
    #[error("relation mismatch: {0}")]
    RelationMismatch(String),
    #[error("monomial window {0} is too small")]
    WindowTooSmall(usize),
    #[error("malformed R-matrix: {0}")]
    BadInput(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Nichols(#[from] NicholsError),
    #[error(transparent)]
    Hodge(#[from] HodgeError),
}

/// An `n²×n²` R-matrix with entries `R^i_j^k_l = ℛ(t^i_j ⊗ t^k_l)`, its
/// inverse and the second inverse `R̃ = ((R^{t₂})^{-1})^{t₂}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    n: usize,
    ctx: FieldCtx,
    r: Vec<Scalar>,
    r_inv: Vec<Scalar>,
    r_tilde: Vec<Scalar>,
}

impl RMatrix {
    /// From entries `f(i, j, k, l) = R^i_j^k_l`; checks invertibility and the
    /// Yang-Baxter equation.
    pub fn new(ctx: &FieldCtx, n: usize, f: impl Fn(usize, usize, usize, usize) -> Scalar) -> Result<Self, QslError> {
        let mut r = Vec::with_capacity(n.pow(4));
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        r.push(f(i, j, k, l));
                    }
                }
            }
        }
        let mut out = RMatrix { n, ctx: ctx.clone(), r, r_inv: Vec::new(), r_tilde: Vec::new() };
        let inv = out.operator().inverse().map_err(|_| QslError::NotInvertible)?;
        out.r_inv = out.entries_from_operator(&inv);
        let t2 = out.partial_transpose(&out.operator());
        let t2_inv = t2.inverse().map_err(|_| QslError::NoSecondInverse)?;
        out.r_tilde = out.entries_from_operator(&out.partial_transpose(&t2_inv));
        if !out.satisfies_ybe() {
            return Err(QslError::BraidRelationFailure);
        }
        Ok(out)
    }

    /// The standard `SL₂` R-matrix: `R^1_1^1_1 = R^2_2^2_2 = q`,
    /// `R^1_1^2_2 = R^2_2^1_1 = 1`, `R^1_2^2_1 = q - q⁻¹`.
    pub fn standard_sl2(ctx: &FieldCtx) -> Result<Self, QslError> {
        let q = ctx.q()?;
        let qi = ctx.q_pow(-1)?;
        Self::new(ctx, 2, |i, j, k, l| match (i, j, k, l) {
            (0, 0, 0, 0) | (1, 1, 1, 1) => q.clone(),
            (0, 0, 1, 1) | (1, 1, 0, 0) => ctx.one(),
            (0, 1, 1, 0) => &q - &qi,
            _ => ctx.zero(),
        })
    }

    /// From a JSON `n²×n²` matrix with rows `(i,k)` and columns `(j,l)`.
    pub fn from_json(ctx: &FieldCtx, v: &Value) -> Result<Self, QslError> {
        let rows = v.as_array().ok_or_else(|| QslError::BadInput("expected an array of rows".into()))?;
        let n = (rows.len() as f64).sqrt().round() as usize;
        if n * n != rows.len() || n == 0 {
            return Err(QslError::BadInput(format!("{} rows is not a square number", rows.len())));
        }
        let mut m = vec![vec![ctx.zero(); n * n]; n * n];
        for (a, row) in rows.iter().enumerate() {
            let row = row.as_array().filter(|r| r.len() == n * n).ok_or_else(|| QslError::BadInput(format!("row {a} has the wrong length")))?;
            for (b, x) in row.iter().enumerate() {
                m[a][b] = ctx.parse_json(x)?;
            }
        }
        Self::new(ctx, n, |i, j, k, l| m[i * n + k][j * n + l].clone())
    }

    /// `cR`, with `R⁻¹` and `R̃` rescaled by `c⁻¹`. For `SL₂` the
    /// coquasitriangular structure on `k_q[SL₂]` is `q^{-1/2}` times the
    /// standard matrix.
    pub fn scaled(&self, c: &Scalar) -> Result<Self, QslError> {
        let ci = c.inv()?;
        Ok(RMatrix {
            n: self.n,
            ctx: self.ctx.clone(),
            r: self.r.iter().map(|x| x * c).collect(),
            r_inv: self.r_inv.iter().map(|x| x * &ci).collect(),
            r_tilde: self.r_tilde.iter().map(|x| x * &ci).collect(),
        })
    }

    /// The standard matrix times `q^{-1/2}`.
    pub fn normalized_sl2(ctx: &FieldCtx) -> Result<Self, QslError> {
        Self::standard_sl2(ctx)?.scaled(&ctx.s_pow(-1)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    fn at(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        ((i * self.n + j) * self.n + k) * self.n + l
    }

    /// `R^i_j^k_l`.
    pub fn r(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.r[self.at(i, j, k, l)]
    }

    /// `(R⁻¹)^i_j^k_l = ℛ(St^i_j ⊗ t^k_l)`.
    pub fn r_inv(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.r_inv[self.at(i, j, k, l)]
    }

    /// `R̃^i_j^k_l = ℛ(t^i_j ⊗ St^k_l)`.
    pub fn r_tilde(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.r_tilde[self.at(i, j, k, l)]
    }

    /// `R` as an operator on `V⊗V`: `e_j⊗e_l ↦ Σ R^i_j^k_l e_i⊗e_k`.
    pub fn operator(&self) -> LinMap {
        let n = self.n;
        LinMap::from_fn(n * n, n * n, &self.ctx, |row, col| self.r(row / n, col / n, row % n, col % n).clone())
    }

    fn entries_from_operator(&self, m: &LinMap) -> Vec<Scalar> {
        let n = self.n;
        let mut out = Vec::with_capacity(n.pow(4));
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        out.push(m.get(i * n + k, j * n + l));
                    }
                }
            }
        }
        out
    }

    /// Transpose in the second tensor factor.
    fn partial_transpose(&self, m: &LinMap) -> LinMap {
        let n = self.n;
        LinMap::from_fn(n * n, n * n, &self.ctx, |row, col| m.get((row / n) * n + col % n, (col / n) * n + row % n))
    }

    /// `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` on `V⊗V⊗V`.
    pub fn satisfies_ybe(&self) -> bool {
        let n = self.n;
        let id = LinMap::identity(n, &self.ctx);
        let r = self.operator();
        let r12 = r.tensor(&id);
        let r23 = id.tensor(&r);
        let p23 = id.tensor(&LinMap::from_fn(n * n, n * n, &self.ctx, |row, col| {
            if row == (col % n) * n + col / n {
                self.ctx.one()
            } else {
                self.ctx.zero()
            }
        }));
        let r13 = p23.compose(&r12).and_then(|x| x.compose(&p23)).expect("shapes");
        let lhs = r12.compose(&r13).and_then(|x| x.compose(&r23)).expect("shapes");
        let rhs = r23.compose(&r13).and_then(|x| x.compose(&r12)).expect("shapes");
        lhs == rhs
    }

    /// `Σ R^i_m^n_l R̃^m_j^k_n = δ^i_j δ^k_l` and the mirror identity with the
    /// factors exchanged.
    pub fn second_inverse_holds(&self) -> bool {
        let n = self.n;
        let ctx = &self.ctx;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let (mut a, mut b) = (ctx.zero(), ctx.zero());
                        for m in 0..n {
                            for p in 0..n {
                                a += &(self.r(i, m, p, l) * self.r_tilde(m, j, k, p));
                                b += &(self.r_tilde(i, m, p, l) * self.r(m, j, k, p));
                            }
                        }
                        let expect = if i == j && k == l { ctx.one() } else { ctx.zero() };
                        if a != expect || b != expect {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_r_matrix() {
        let ctx = FieldCtx::RatFun;
        let r = RMatrix::standard_sl2(&ctx).unwrap();
        assert!(r.satisfies_ybe());
        assert!(r.second_inverse_holds());
        let q = ctx.q().unwrap();
        assert_eq!(r.r_inv(0, 0, 0, 0), &q.inv().unwrap());
        assert_eq!(r.r_inv(0, 1, 1, 0), &-(&q - &q.inv().unwrap()));
        let n = RMatrix::normalized_sl2(&ctx).unwrap();
        assert!(n.satisfies_ybe() && n.second_inverse_holds());
        assert_eq!(n.r(0, 0, 0, 0), &ctx.s_pow(1).unwrap());
    }

    #[test]
    fn rejects_non_ybe() {
        let ctx = FieldCtx::Rational;
        let err = RMatrix::new(&ctx, 2, |i, j, k, l| match (i, j, k, l) {
            (0, 0, 0, 0) => ctx.int(2),
            (1, 1, 1, 1) | (0, 0, 1, 1) | (1, 1, 0, 0) => ctx.one(),
            (0, 1, 1, 0) | (1, 0, 0, 1) => ctx.int(3),
            _ => ctx.zero(),
        })
        .unwrap_err();
        assert!(matches!(err, QslError::BraidRelationFailure | QslError::NotInvertible), "{err:?}");
    }

    #[test]
    fn json_round_trip() {
        let ctx = FieldCtx::Rational;
        let v = serde_json::json!([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        let r = RMatrix::from_json(&ctx, &v).unwrap();
        assert!(r.r(0, 0, 1, 1).is_one() && r.r_tilde(0, 0, 1, 1).is_one());
        // The flip has no second inverse.
        let flip = serde_json::json!([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]);
        assert_eq!(RMatrix::from_json(&ctx, &flip).unwrap_err(), QslError::NoSecondInverse);
        assert!(RMatrix::from_json(&ctx, &serde_json::json!([[1, 0], [0, 1], [1, 1]])).is_err());
    }
}
