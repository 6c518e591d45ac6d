//! The matrix braided-Lie algebra `L = span{t^i_j}` of a coquasitriangular
//! Hopf algebra with R-matrix, its braidings, braided Killing form and the
//! quadratic relations of the enveloping algebra `U(L)`.

use super::{QslError, RMatrix};
use crate::linalg::{Accumulator, LinMap, SparseVec, Subspace};
use crate::scalars::{FieldCtx, Scalar};
use std::collections::HashMap;
use std::sync::Mutex;

/// A letter of a word in `A`: `t^i_j` or `S t^i_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    T(usize, usize),
    St(usize, usize),
}

type Word = Vec<Letter>;

/// Evaluates `ℛ` on products of matrix generators and their antipodes, using
/// `ℛ(t⊗t) = R`, `ℛ(t⊗St) = R̃`, `ℛ(St⊗t) = R⁻¹`, `ℛ(St⊗St) = R` and
/// multiplicativity `ℛ(ab⊗c) = ℛ(a⊗c₁)ℛ(b⊗c₂)`, `ℛ(a⊗bc) = ℛ(a₁⊗c)ℛ(a₂⊗b)`.
#[derive(Debug)]
pub struct WordEvaluator {
    rmat: RMatrix,
    // S²t = U t U⁻¹
    u: Vec<Scalar>,
    u_inv: Vec<Scalar>,
    memo: Mutex<HashMap<(Word, Word), Scalar>>,
}

impl WordEvaluator {
    pub fn new(rmat: RMatrix) -> Result<Self, QslError> {
        let n = rmat.n();
        let ctx = rmat.ctx().clone();
        // U^i_j = Σ_m R̃^m_j^i_m
        let u = LinMap::from_fn(n, n, &ctx, |i, j| {
            let mut x = ctx.zero();
            for m in 0..n {
                x += rmat.r_tilde(m, j, i, m);
            }
            x
        });
        let u_inv = u.inverse()?;
        let flat = |m: &LinMap| (0..n * n).map(|k| m.get(k / n, k % n)).collect();
        Ok(WordEvaluator { u: flat(&u), u_inv: flat(&u_inv), rmat, memo: Mutex::new(HashMap::new()) })
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.rmat.ctx()
    }

    fn n(&self) -> usize {
        self.rmat.n()
    }

    fn letter_pair(&self, x: Letter, y: Letter) -> Scalar {
        match (x, y) {
            (Letter::T(i, j), Letter::T(k, l)) | (Letter::St(i, j), Letter::St(k, l)) => self.rmat.r(i, j, k, l).clone(),
            (Letter::T(i, j), Letter::St(k, l)) => self.rmat.r_tilde(i, j, k, l).clone(),
            (Letter::St(i, j), Letter::T(k, l)) => self.rmat.r_inv(i, j, k, l).clone(),
        }
    }

    fn counit(&self, w: &[Letter]) -> Scalar {
        let ok = w.iter().all(|l| match *l {
            Letter::T(i, j) | Letter::St(i, j) => i == j,
        });
        if ok {
            self.ctx().one()
        } else {
            self.ctx().zero()
        }
    }

    /// `Δw = Σ w₁ ⊗ w₂` with `Δt^i_j = t^i_m⊗t^m_j`, `ΔSt^i_j = St^m_j⊗St^i_m`.
    pub fn coproduct(&self, w: &[Letter]) -> Vec<(Word, Word)> {
        let n = self.n();
        let mut out = vec![(Vec::new(), Vec::new())];
        for l in w {
            let mut next = Vec::with_capacity(out.len() * n);
            for (a, b) in &out {
                for m in 0..n {
                    let (x, y) = match *l {
                        Letter::T(i, j) => (Letter::T(i, m), Letter::T(m, j)),
                        Letter::St(i, j) => (Letter::St(m, j), Letter::St(i, m)),
                    };
                    let (mut a2, mut b2) = (a.clone(), b.clone());
                    a2.push(x);
                    b2.push(y);
                    next.push((a2, b2));
                }
            }
            out = next;
        }
        out
    }

    /// `S w` as a combination of words; `S(St) = U t U⁻¹`.
    pub fn antipode(&self, w: &[Letter]) -> Vec<(Scalar, Word)> {
        let n = self.n();
        let mut out = vec![(self.ctx().one(), Vec::new())];
        for l in w.iter().rev() {
            let images: Vec<(Scalar, Letter)> = match *l {
                Letter::T(i, j) => vec![(self.ctx().one(), Letter::St(i, j))],
                Letter::St(i, j) => {
                    let mut v = Vec::new();
                    for a in 0..n {
                        for b in 0..n {
                            let c = &self.u[i * n + a] * &self.u_inv[b * n + j];
                            if !c.is_zero() {
                                v.push((c, Letter::T(a, b)));
                            }
                        }
                    }
                    v
                }
            };
            let mut next = Vec::new();
            for (c, word) in &out {
                for (d, x) in &images {
                    let mut w2 = word.clone();
                    w2.push(*x);
                    next.push((c * d, w2));
                }
            }
            out = next;
        }
        out
    }

    /// `ℛ(x ⊗ y)` for words `x`, `y`.
    pub fn pair(&self, x: &[Letter], y: &[Letter]) -> Scalar {
        if x.is_empty() {
            return self.counit(y);
        }
        if y.is_empty() {
            return self.counit(x);
        }
        if x.len() == 1 && y.len() == 1 {
            return self.letter_pair(x[0], y[0]);
        }
        let key = (x.to_vec(), y.to_vec());
        if let Some(v) = self.memo.lock().expect("memo lock").get(&key) {
            return v.clone();
        }
        let mut acc = self.ctx().zero();
        if x.len() >= 2 {
            for (y1, y2) in self.coproduct(y) {
                let a = self.pair(&x[..1], &y1);
                if a.is_zero() {
                    continue;
                }
                acc += &(&a * &self.pair(&x[1..], &y2));
            }
        } else {
            for (x1, x2) in self.coproduct(x) {
                let a = self.pair(&x1, &y[1..]);
                if a.is_zero() {
                    continue;
                }
                acc += &(&a * &self.pair(&x2, &y[..1]));
            }
        }
        self.memo.lock().expect("memo lock").insert(key, acc.clone());
        acc
    }

    /// Quantum Killing form `𝒬(x⊗y) = ℛ(y₁⊗x₁)ℛ(x₂⊗y₂)`.
    pub fn quantum_killing(&self, x: &[Letter], y: &[Letter]) -> Scalar {
        let mut acc = self.ctx().zero();
        for (x1, x2) in self.coproduct(x) {
            for (y1, y2) in self.coproduct(y) {
                let a = self.pair(&y1, &x1);
                if !a.is_zero() {
                    acc += &(&a * &self.pair(&x2, &y2));
                }
            }
        }
        acc
    }

    /// `u(w) = ℛ(w₂ ⊗ S w₁)`.
    pub fn drinfeld_u(&self, w: &[Letter]) -> Scalar {
        let mut acc = self.ctx().zero();
        for (w1, w2) in self.coproduct(w) {
            for (c, s) in self.antipode(&w1) {
                acc += &(&c * &self.pair(&w2, &s));
            }
        }
        acc
    }
}

/// The braided-Lie algebra on `L = span{t^i_j}` (index `i·n + j`).
#[derive(Debug)]
pub struct BLieAlgebra {
    rmat: RMatrix,
    bracket: LinMap,
    braiding: LinMap,
    psi_tilde: LinMap,
    words: WordEvaluator,
}

impl BLieAlgebra {
    pub fn new(rmat: RMatrix) -> Result<Self, QslError> {
        let bracket = Self::bracket_tensor(&rmat);
        let braiding = Self::braiding_tensor(&rmat, false);
        let psi_tilde = Self::braiding_tensor(&rmat, true);
        let words = WordEvaluator::new(rmat.clone())?;
        Ok(BLieAlgebra { rmat, bracket, braiding, psi_tilde, words })
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.rmat.ctx()
    }

    pub fn dim(&self) -> usize {
        self.rmat.n() * self.rmat.n()
    }

    pub fn words(&self) -> &WordEvaluator {
        &self.words
    }

    /// `[t^i_j, t^k_l] = t^{k₂}_{k₃} R⁻¹^{k₁}_{k₂}^i_{i₁} R^{k₃}_{k₄}^{i₁}_{i₂}
    /// R^{i₂}_{i₃}^{k₄}_l R̃^{i₃}_j^k_{k₁}`.
    fn bracket_tensor(r: &RMatrix) -> LinMap {
        let n = r.n();
        let d = n * n;
        LinMap::from_action(d, d * d, r.ctx(), |col| {
            let (i, j, k, l) = (col / (n * d), (col / d) % n, (col / n) % n, col % n);
            let mut acc = Accumulator::new();
            for k1 in 0..n {
                for i3 in 0..n {
                    let x4 = r.r_tilde(i3, j, k, k1);
                    if x4.is_zero() {
                        continue;
                    }
                    for k2 in 0..n {
                        for i1 in 0..n {
                            let x1 = r.r_inv(k1, k2, i, i1);
                            if x1.is_zero() {
                                continue;
                            }
                            let x14 = x1 * x4;
                            for k3 in 0..n {
                                for k4 in 0..n {
                                    for i2 in 0..n {
                                        let x2 = r.r(k3, k4, i1, i2);
                                        let x3 = r.r(i2, i3, k4, l);
                                        if !x2.is_zero() && !x3.is_zero() {
                                            acc.add(k2 * n + k3, &(&x14 * &(x2 * x3)));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            acc.finish()
        })
    }

    /// The categorical braiding `Ψ` or, with `tilde`, the associated `Ψ̃`:
    /// `t^i_j⊗t^k_l ↦ t^{k₂}_{k₃}⊗t^{i₂}_{i₃} X^{..} R^{i₃}_{i₄}^{k₄}_l R̃^{i₄}_j^k_{k₁}`
    /// with `X = R^i_{i₁}^{k₁}_{k₂} R⁻¹^{i₁}_{i₂}^{k₃}_{k₄}` for `Ψ` and
    /// `X = R⁻¹^{k₁}_{k₂}^i_{i₁} R^{k₃}_{k₄}^{i₁}_{i₂}` for `Ψ̃`.
    fn braiding_tensor(r: &RMatrix, tilde: bool) -> LinMap {
        let n = r.n();
        let d = n * n;
        LinMap::from_action(d * d, d * d, r.ctx(), |col| {
            let (i, j, k, l) = (col / (n * d), (col / d) % n, (col / n) % n, col % n);
            let mut acc = Accumulator::new();
            for k1 in 0..n {
                for i4 in 0..n {
                    let x4 = r.r_tilde(i4, j, k, k1);
                    if x4.is_zero() {
                        continue;
                    }
                    for i3 in 0..n {
                        for k4 in 0..n {
                            let x3 = r.r(i3, i4, k4, l);
                            if x3.is_zero() {
                                continue;
                            }
                            let x34 = x3 * x4;
                            for i1 in 0..n {
                                for k2 in 0..n {
                                    let x1 = if tilde { r.r_inv(k1, k2, i, i1) } else { r.r(i, i1, k1, k2) };
                                    if x1.is_zero() {
                                        continue;
                                    }
                                    for i2 in 0..n {
                                        for k3 in 0..n {
                                            let x2 = if tilde { r.r(k3, k4, i1, i2) } else { r.r_inv(i1, i2, k3, k4) };
                                            if !x2.is_zero() {
                                                acc.add((k2 * n + k3) * d + i2 * n + i3, &(&x34 * &(x1 * x2)));
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            acc.finish()
        })
    }

    /// `L⊗L -> L`.
    pub fn bracket_map(&self) -> &LinMap {
        &self.bracket
    }

    pub fn braiding(&self) -> &LinMap {
        &self.braiding
    }

    pub fn psi_tilde(&self) -> &LinMap {
        &self.psi_tilde
    }

    fn pair_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let d = self.dim();
        let mut acc = Accumulator::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc.add(i * d + j, &(a * b));
            }
        }
        acc.finish()
    }

    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.bracket.apply(&self.pair_vec(x, y))
    }

    /// `Δt^i_j = t^i_m ⊗ t^m_j` as a map `L -> L⊗L`.
    pub fn coproduct_map(&self) -> LinMap {
        let n = self.rmat.n();
        let d = n * n;
        LinMap::from_action(d * d, d, self.ctx(), |col| {
            let (i, j) = (col / n, col % n);
            SparseVec::from_entries((0..n).map(|m| ((i * n + m) * d + m * n + j, self.ctx().one())))
        })
    }

    /// `ΨΨ̃ = (id⊗[,])(Δ⊗id)` on `L⊗L`.
    pub fn verify_l2(&self) -> bool {
        let id = LinMap::identity(self.dim(), self.ctx());
        let lhs = self.braiding.compose(&self.psi_tilde).expect("shapes");
        let rhs = id.tensor(&self.bracket).compose(&self.coproduct_map().tensor(&id)).expect("shapes");
        lhs == rhs
    }

    /// Braid relation for `Ψ` and for `Ψ̃`.
    pub fn braidings_satisfy_braid_relation(&self) -> bool {
        let id = LinMap::identity(self.dim(), self.ctx());
        [&self.braiding, &self.psi_tilde].iter().all(|p| {
            let a = p.tensor(&id);
            let b = id.tensor(p);
            let l = a.compose(&b).and_then(|x| x.compose(&a)).expect("shapes");
            let r = b.compose(&a).and_then(|x| x.compose(&b)).expect("shapes");
            l == r
        })
    }

    /// `K(t^i_j, t^k_l)` from
    /// `K(x,y) = Σ_e u(e_{(1̄)(1)}) 𝒬(x, e_{(1̄)(2)}) 𝒬(y, e_{(1̄)(3)}) ⟨f, e_{(0̄)}⟩`
    /// with the adjoint coaction `t^a_b ↦ t^k_l ⊗ S t^a_k t^l_b`.
    pub fn killing_matrix(&self) -> LinMap {
        let n = self.rmat.n();
        let d = n * n;
        let w = &self.words;
        // Triples (w₁, w₂, w₃) of Δ²(S t^a_a t^b_b) summed over (a, b).
        let mut triples = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let e = vec![Letter::St(a, a), Letter::T(b, b)];
                for (x1, rest) in w.coproduct(&e) {
                    for (x2, x3) in w.coproduct(&rest) {
                        triples.push((x1.clone(), x2, x3));
                    }
                }
            }
        }
        let us: Vec<Scalar> = triples.iter().map(|(x1, _, _)| w.drinfeld_u(x1)).collect();
        LinMap::from_fn(d, d, self.ctx(), |p, r| {
            let x = [Letter::T(p / n, p % n)];
            let y = [Letter::T(r / n, r % n)];
            let mut acc = self.ctx().zero();
            for ((_, x2, x3), u) in triples.iter().zip(&us) {
                if u.is_zero() {
                    continue;
                }
                let a = w.quantum_killing(&x, x2);
                if a.is_zero() {
                    continue;
                }
                acc += &(&(u * &a) * &w.quantum_killing(&y, x3));
            }
            acc
        })
    }

    pub fn killing(&self, x: &SparseVec, y: &SparseVec) -> Scalar {
        let k = self.killing_matrix();
        let mut acc = self.ctx().zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc += &(&(a * b) * &k.get(i, j));
            }
        }
        acc
    }

    /// Quadratic relations of `U(L)`: the image of `id - Ψ̃` in `L⊗L`, with
    /// `x⊗y` read as the product `x•y`.
    pub fn enveloping_relations(&self) -> Subspace {
        let id = LinMap::identity(self.dim() * self.dim(), self.ctx());
        id.sub(&self.psi_tilde).expect("shapes").image()
    }

    /// The same relations from `R₂₁ t₁ R t₂ = t₂ R₂₁ t₁ R`.
    pub fn reflection_relations(&self) -> Subspace {
        let n = self.rmat.n();
        let d = n * n;
        let r = &self.rmat;
        let r21 = |i: usize, j: usize, k: usize, l: usize| r.r(k, l, i, j);
        let mut rels = Vec::new();
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    for l in 0..n {
                        let mut acc = Accumulator::new();
                        for a in 0..n {
                            for b in 0..n {
                                for c in 0..n {
                                    for f in 0..n {
                                        // (R₂₁)^{ik}_{ab} R^{cb}_{jf} t^a_c • t^f_l
                                        let x = r21(i, a, k, b) * r.r(c, j, b, f);
                                        acc.add((a * n + c) * d + f * n + l, &x);
                                        // t^k_b • t^c_e (R₂₁)^{ib}_{cd'} R^{ed'}_{jl}
                                        let (bb, cc, dd, ee) = (a, b, c, f);
                                        let y = r21(i, cc, bb, dd) * r.r(ee, j, dd, l);
                                        acc.add((k * n + bb) * d + cc * n + ee, &-y);
                                    }
                                }
                            }
                        }
                        rels.push(acc.finish());
                    }
                }
            }
        }
        Subspace::span(d * d, rels)
    }
}

/// The rescaled generators `t = q⁻¹α + qδ`, `z = λ⁻¹(δ - α)`, `x₊ = λ⁻¹β`,
/// `x₋ = λ⁻¹γ` of the 4D braided-Lie algebra, with `α, β, γ, δ = t^1_1, t^1_2,
/// t^2_1, t^2_2`.
#[derive(Clone, Debug)]
pub struct RescaledBasis {
    pub t: SparseVec,
    pub z: SparseVec,
    pub x_plus: SparseVec,
    pub x_minus: SparseVec,
}

impl RescaledBasis {
    pub fn new(ctx: &FieldCtx) -> Result<Self, QslError> {
        let li = ctx.lambda()?.inv()?;
        Ok(RescaledBasis {
            t: SparseVec::from_entries([(0, ctx.q_pow(-1)?), (3, ctx.q()?)]),
            z: SparseVec::from_entries([(0, -&li), (3, li.clone())]),
            x_plus: SparseVec::single(1, li.clone()),
            x_minus: SparseVec::single(2, li),
        })
    }

    pub fn named(&self) -> [(&'static str, &SparseVec); 4] {
        [("t", &self.t), ("z", &self.z), ("x+", &self.x_plus), ("x-", &self.x_minus)]
    }

    /// Coordinates of an element of `L` in the rescaled basis.
    pub fn coordinates(&self, v: &SparseVec, ctx: &FieldCtx) -> Result<SparseVec, QslError> {
        let cols: Vec<SparseVec> = self.named().iter().map(|(_, x)| (*x).clone()).collect();
        let m = LinMap::from_columns(4, ctx, cols);
        Ok(m.inverse()?.apply(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_antipode_is_conjugation() {
        let ctx = FieldCtx::RatFun;
        let w = WordEvaluator::new(RMatrix::standard_sl2(&ctx).unwrap()).unwrap();
        // S²b = q²b, S²c = q⁻²c
        let sb = w.antipode(&[Letter::St(0, 1)]);
        assert_eq!(sb, vec![(ctx.q_pow(2).unwrap(), vec![Letter::T(0, 1)])]);
        let sc = w.antipode(&[Letter::St(1, 0)]);
        assert_eq!(sc, vec![(ctx.q_pow(-2).unwrap(), vec![Letter::T(1, 0)])]);
    }

    #[test]
    fn pairing_is_multiplicative_against_inverse() {
        // ℛ(t St ⊗ x) = ℛ(t⊗x₁)ℛ(St⊗x₂) sums to ε for the contracted word
        let ctx = FieldCtx::RatFun;
        let w = WordEvaluator::new(RMatrix::standard_sl2(&ctx).unwrap()).unwrap();
        for k in 0..2 {
            for l in 0..2 {
                for i in 0..2 {
                    for j in 0..2 {
                        let mut acc = ctx.zero();
                        for m in 0..2 {
                            acc += &w.pair(&[Letter::T(i, m), Letter::St(m, j)], &[Letter::T(k, l)]);
                        }
                        let expect = if i == j && k == l { ctx.one() } else { ctx.zero() };
                        assert_eq!(acc, expect);
                    }
                }
            }
        }
    }
}
