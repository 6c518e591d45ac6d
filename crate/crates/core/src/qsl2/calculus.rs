//! The bicovariant calculus with `Λ¹ = M_n(k)` built from an R-matrix, and the
//! 4D calculus on `k_q[SL₂]` with its metric, Hodge star and module structure.

use super::coords::{Sl2Coords, Sl2Word};
use super::{QslError, RMatrix};
use crate::braiding::{BraidedSpace, Sign};
use crate::hodge::{HodgeCtx, Metric};
use crate::linalg::{Accumulator, LinMap, SparseVec};
use crate::nichols::{GradedElement, NicholsAlgebra};
use crate::scalars::FieldCtx;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Right crossed module `Λ¹ = span{E_α^β}` (index `α·n + β`) with
/// `Δ_R E_α^β = E_m^n ⊗ t^m_α S t^β_n` and
/// `E_α^β ◁ t^a_b = E_m^n R^m_α^a_c R^c_b^β_n`.
#[derive(Clone, Debug)]
pub struct RCalculus {
    rmat: RMatrix,
    space: BraidedSpace,
    action: Vec<LinMap>,
    action_antipode: Vec<LinMap>,
}

impl RCalculus {
    pub fn new(rmat: RMatrix) -> Result<Self, QslError> {
        let n = rmat.n();
        let d = n * n;
        let ctx = rmat.ctx().clone();
        let action: Vec<LinMap> = (0..d)
            .map(|ab| {
                let (a, b) = (ab / n, ab % n);
                LinMap::from_action(d, d, &ctx, |col| {
                    let (al, be) = (col / n, col % n);
                    let mut acc = Accumulator::new();
                    for m in 0..n {
                        for c in 0..n {
                            let x = rmat.r(m, al, a, c);
                            if x.is_zero() {
                                continue;
                            }
                            for nn in 0..n {
                                acc.add(m * n + nn, &(x * rmat.r(c, b, be, nn)));
                            }
                        }
                    }
                    acc.finish()
                })
            })
            .collect();
        // Σ_c ρ(St^c_b) ρ(t^a_c) = δ^a_b: the block matrix with blocks
        // (c, a) = ρ(t^a_c) has inverse with blocks (b, c) = ρ(St^c_b).
        let big = LinMap::from_action(n * d, n * d, &ctx, |col| {
            let (a, j) = (col / d, col % d);
            let mut acc = Accumulator::new();
            for c in 0..n {
                for (i, x) in action[a * n + c].column(j).iter() {
                    acc.add(c * d + i, x);
                }
            }
            acc.finish()
        });
        let inv = big.inverse()?;
        let action_antipode = (0..d)
            .map(|cb| {
                let (c, b) = (cb / n, cb % n);
                let rows: Vec<usize> = (b * d..(b + 1) * d).collect();
                let cols: Vec<usize> = (c * d..(c + 1) * d).collect();
                inv.submatrix(&rows, &cols)
            })
            .collect();
        let psi = Self::expanded_braiding(&rmat);
        let labels = if n == 2 {
            ["e_a", "e_b", "e_c", "e_d"].map(String::from).to_vec()
        } else {
            (0..d).map(|i| format!("E{}{}", i / n + 1, i % n + 1)).collect()
        };
        let space = BraidedSpace::new(labels, psi)?;
        Ok(RCalculus { rmat, space, action, action_antipode })
    }

    /// `Ψ̃(E_α^β⊗E_γ^δ) = E_{j₂}^{j₃}⊗E_{k₂}^{k₃} R̃^{k₂}_{k₁}^{j₄}_{j₃}
    /// R^{k₁}_α^{j₂}_{j₁} R^{j₁}_γ^β_{k₄} R⁻¹^δ_{j₄}^{k₄}_{k₃}`.
    fn expanded_braiding(r: &RMatrix) -> LinMap {
        let n = r.n();
        let d = n * n;
        LinMap::from_action(d * d, d * d, r.ctx(), |col| {
            let (al, be, ga, de) = (col / (n * d), (col / d) % n, (col / n) % n, col % n);
            let mut acc = Accumulator::new();
            for j2 in 0..n {
                for j1 in 0..n {
                    for k1 in 0..n {
                        let x1 = r.r(k1, al, j2, j1);
                        if x1.is_zero() {
                            continue;
                        }
                        for k4 in 0..n {
                            let x2 = r.r(j1, ga, be, k4);
                            if x2.is_zero() {
                                continue;
                            }
                            let x12 = x1 * x2;
                            for j4 in 0..n {
                                for k3 in 0..n {
                                    let x3 = r.r_inv(de, j4, k4, k3);
                                    if x3.is_zero() {
                                        continue;
                                    }
                                    let x123 = &x12 * x3;
                                    for j3 in 0..n {
                                        for k2 in 0..n {
                                            let x4 = r.r_tilde(k2, k1, j4, j3);
                                            if !x4.is_zero() {
                                                acc.add((j2 * n + j3) * d + k2 * n + k3, &(&x123 * x4));
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

    pub fn rmatrix(&self) -> &RMatrix {
        &self.rmat
    }

    pub fn n(&self) -> usize {
        self.rmat.n()
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.rmat.ctx()
    }

    pub fn space(&self) -> &BraidedSpace {
        &self.space
    }

    /// `ρ(t^a_b)`: coordinates of `x ◁ t^a_b` from those of `x`.
    pub fn action(&self, a: usize, b: usize) -> &LinMap {
        &self.action[a * self.n() + b]
    }

    /// `ρ(S t^a_b)`.
    pub fn antipode_action(&self, a: usize, b: usize) -> &LinMap {
        &self.action_antipode[a * self.n() + b]
    }

    /// The crossed-module braiding `Ψ(x⊗y) = y₀ ⊗ x◁y₁` computed from the
    /// action and coaction separately.
    pub fn crossed_module_braiding(&self) -> LinMap {
        let n = self.n();
        let d = n * n;
        LinMap::from_action(d * d, d * d, self.ctx(), |col| {
            let (x, y) = (col / d, col % d);
            let (ga, de) = (y / n, y % n);
            let mut acc = Accumulator::new();
            for m in 0..n {
                for nn in 0..n {
                    let v = self.antipode_action(de, nn).apply(self.action(m, ga).column(x));
                    for (i, c) in v.iter() {
                        acc.add((m * n + nn) * d + i, c);
                    }
                }
            }
            acc.finish()
        })
    }

    /// `θ = Σ_α E_α^α`.
    pub fn theta(&self) -> SparseVec {
        let n = self.n();
        SparseVec::from_entries((0..n).map(|a| (a * n + a, self.ctx().one())))
    }

    /// `ρ(t^c_b)` on `(Λ¹)^{⊗m}` via the coproduct `Δt^c_b = t^c_x ⊗ t^x_b`.
    pub fn tensor_action(&self, m: usize, c: usize, b: usize) -> LinMap {
        let n = self.n();
        if m == 0 {
            let id = LinMap::identity(1, self.ctx());
            return if c == b { id } else { LinMap::zero(1, 1, self.ctx()) };
        }
        if m == 1 {
            return self.action(c, b).clone();
        }
        let mut out: Option<LinMap> = None;
        for x in 0..n {
            let t = self.action(c, x).tensor(&self.tensor_action(m - 1, x, b));
            out = Some(match out {
                None => t,
                Some(o) => o.add(&t).expect("shapes"),
            });
        }
        out.expect("n > 0")
    }
}

/// `Σ_I f_I e_I` in `A ⊗ (Λ¹)^{⊗m}` with coefficients on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormModule {
    pub degree: usize,
    pub coeffs: BTreeMap<usize, Sl2Word>,
}

impl FormModule {
    pub fn zero(degree: usize) -> Self {
        FormModule { degree, coeffs: BTreeMap::new() }
    }

    fn add_at(&mut self, i: usize, w: Sl2Word) {
        let e = self.coeffs.entry(i).or_default();
        *e = e.add(&w);
        if e.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn add(&self, other: &FormModule) -> FormModule {
        let mut out = self.clone();
        for (i, w) in &other.coeffs {
            out.add_at(*i, w.clone());
        }
        out
    }

    pub fn sub(&self, other: &FormModule) -> FormModule {
        let mut out = self.clone();
        for (i, w) in &other.coeffs {
            out.add_at(*i, w.neg());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Sl2Word {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }
}

/// The 4D calculus on `k_q[SL₂]` from the standard R-matrix, with the
/// bi-invariant central metric and `Vol = e_ae_be_ce_d`.
#[derive(Clone, Debug)]
pub struct Sl2Calculus {
    calc: RCalculus,
    coords: Sl2Coords,
    hodge: HodgeCtx,
    vol: GradedElement,
}

impl Sl2Calculus {
    pub fn new(ctx: &FieldCtx) -> Result<Self, QslError> {
        Self::from_rmatrix(RMatrix::normalized_sl2(ctx)?)
    }

    pub fn from_rmatrix(rmat: RMatrix) -> Result<Self, QslError> {
        if rmat.n() != 2 {
            return Err(QslError::BadInput(format!("SL2 needs a 4x4 R-matrix, got n = {}", rmat.n())));
        }
        let ctx = rmat.ctx().clone();
        let coords = Sl2Coords::new(&ctx)?;
        let calc = RCalculus::new(rmat)?;
        let alg = NicholsAlgebra::build(calc.space().clone(), Sign::Minus, 5)?;
        let vol = alg.word(&["e_a", "e_b", "e_c", "e_d"])?;
        let metric = Metric::from_tensor(Self::metric_tensor(&ctx)?)?;
        let theta = calc.theta();
        let hodge = HodgeCtx::new(Arc::new(alg), metric, Some(&vol))?.with_inner_differential(&theta)?;
        Ok(Sl2Calculus { calc, coords, hodge, vol })
    }

    /// `g = e_c⊗e_b + q² e_b⊗e_c + (q³/(2)_q)(e_z⊗e_z - θ⊗θ)` as the matrix
    /// `g^{ij}` in the basis `e_a, e_b, e_c, e_d`.
    pub fn metric_tensor(ctx: &FieldCtx) -> Result<LinMap, QslError> {
        let f = ctx.q_pow(3)?.try_div(&ctx.sym_int(2)?)?;
        let ez = [ctx.q_pow(-2)?, ctx.zero(), ctx.zero(), -ctx.one()];
        let th = [ctx.one(), ctx.zero(), ctx.zero(), ctx.one()];
        let q2 = ctx.q_pow(2)?;
        Ok(LinMap::from_fn(4, 4, ctx, |i, j| {
            let mut x = &(&ez[i] * &ez[j]) - &(&th[i] * &th[j]);
            x = &x * &f;
            if (i, j) == (2, 1) {
                x += &ctx.one();
            }
            if (i, j) == (1, 2) {
                x += &q2;
            }
            x
        }))
    }

    pub fn calculus(&self) -> &RCalculus {
        &self.calc
    }

    pub fn coords(&self) -> &Sl2Coords {
        &self.coords
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.calc.ctx()
    }

    pub fn forms(&self) -> &Arc<NicholsAlgebra> {
        self.hodge.algebra()
    }

    pub fn hodge(&self) -> &HodgeCtx {
        &self.hodge
    }

    pub fn metric(&self) -> &Metric {
        self.hodge.metric()
    }

    pub fn volume(&self) -> &GradedElement {
        &self.vol
    }

    /// A 1-form by letter: `a, b, c, d`, `z = q⁻²e_a - e_d` or `t = θ`.
    pub fn one_form(&self, letter: char) -> SparseVec {
        let ctx = self.ctx();
        let qm2 = ctx.q_pow(-2).expect("field has q");
        let entries = match letter {
            'a' => vec![(0, ctx.one())],
            'b' => vec![(1, ctx.one())],
            'c' => vec![(2, ctx.one())],
            'd' => vec![(3, ctx.one())],
            'z' => vec![(0, qm2), (3, -ctx.one())],
            't' => vec![(0, ctx.one()), (3, ctx.one())],
            _ => panic!("unknown 1-form letter `{letter}`"),
        };
        SparseVec::from_entries(entries)
    }

    /// Product in `Λ` of the 1-forms named by `letters` (see [`Self::one_form`]).
    pub fn form(&self, letters: &str) -> GradedElement {
        let alg = self.forms();
        letters.chars().fold(GradedElement::one(self.ctx()), |acc, l| {
            let x = GradedElement::homogeneous(self.ctx(), 1, self.one_form(l));
            alg.product(&acc, &x).expect("degree within the algebra")
        })
    }

    /// Tensor product of 1-forms by letter in `(Λ¹)^{⊗m}`.
    pub fn tensor(&self, letters: &str) -> SparseVec {
        letters.chars().fold(SparseVec::unit(0, self.ctx()), |acc, l| {
            let v = self.one_form(l);
            let mut out = Accumulator::new();
            for (i, x) in acc.iter() {
                for (j, y) in v.iter() {
                    out.add(i * 4 + j, &(x * y));
                }
            }
            out.finish()
        })
    }

    /// A constant-coefficient element of `A ⊗ (Λ¹)^{⊗m}`.
    pub fn constant(&self, degree: usize, v: &SparseVec) -> FormModule {
        let mut out = FormModule::zero(degree);
        for (i, c) in v.iter() {
            out.add_at(i, self.coords.scalar(c.clone()));
        }
        out
    }

    pub fn left_mul(&self, f: &Sl2Word, x: &FormModule) -> FormModule {
        let mut out = FormModule::zero(x.degree);
        for (i, w) in &x.coeffs {
            out.add_at(*i, self.coords.mul(f, w));
        }
        out
    }

    /// `x · t^a_b` via `e_I t^a_b = Σ_c t^a_c (e_I ◁ t^c_b)`.
    pub fn right_mul_generator(&self, x: &FormModule, a: usize, b: usize) -> FormModule {
        let mut out = FormModule::zero(x.degree);
        for c in 0..2 {
            let act = self.calc.tensor_action(x.degree, c, b);
            let t = self.coords.generator(a, c);
            for (i, w) in &x.coeffs {
                let wt = self.coords.mul(w, &t);
                for (j, s) in act.column(*i).iter() {
                    out.add_at(j, wt.scale(s));
                }
            }
        }
        out
    }

    pub fn right_mul(&self, x: &FormModule, f: &Sl2Word) -> FormModule {
        let mut out = FormModule::zero(x.degree);
        for (m, c) in f.terms() {
            let mut acc = x.clone();
            for (g, e) in [((0, 0), m.a), ((0, 1), m.b), ((1, 0), m.c), ((1, 1), m.d)] {
                for _ in 0..e {
                    acc = self.right_mul_generator(&acc, g.0, g.1);
                }
            }
            for (i, w) in acc.coeffs {
                out.add_at(i, w.scale(c));
            }
        }
        out
    }

    /// `df = θf - fθ` as a left-module 1-form.
    pub fn d_function(&self, f: &Sl2Word) -> FormModule {
        let theta = self.constant(1, &self.calc.theta());
        self.right_mul(&theta, f).sub(&self.left_mul(f, &theta))
    }

    /// Coordinates in `Λ^m` for each coefficient monomial of `x`.
    pub fn project(&self, x: &FormModule) -> Result<BTreeMap<super::Sl2Mono, SparseVec>, QslError> {
        let mut by_mono: BTreeMap<super::Sl2Mono, Accumulator> = BTreeMap::new();
        for (i, w) in &x.coeffs {
            for (m, c) in w.terms() {
                by_mono.entry(*m).or_default().add(*i, c);
            }
        }
        let mut out = BTreeMap::new();
        for (m, acc) in by_mono {
            let v = self.forms().project(x.degree, &acc.finish())?;
            if !v.is_zero() {
                out.insert(m, v);
            }
        }
        Ok(out)
    }

    /// `Δ_R` on `(Λ¹)^{⊗m}`: `e_I ↦ Σ_J e_J ⊗ c_{JI}` with `c_{JI} ∈ A`.
    pub fn coaction(&self, degree: usize, v: &SparseVec) -> FormModule {
        let one = |al: usize, be: usize, m: usize, n: usize| {
            self.coords.mul(&self.coords.generator(m, al), &self.coords.antipode_generator(be, n))
        };
        let mut cur: BTreeMap<usize, Sl2Word> = BTreeMap::new();
        cur.insert(0, self.coords.one());
        let mut out = FormModule::zero(degree);
        for (idx, c) in v.iter() {
            let mut digits = Vec::with_capacity(degree);
            let mut r = idx;
            for _ in 0..degree {
                digits.push(r % 4);
                r /= 4;
            }
            digits.reverse();
            let mut terms = cur.clone();
            for &e in &digits {
                let (al, be) = (e / 2, e % 2);
                let mut next = BTreeMap::new();
                for (j, w) in &terms {
                    for m in 0..2 {
                        for n in 0..2 {
                            let x = self.coords.mul(w, &one(al, be, m, n));
                            if !x.is_zero() {
                                let e: &mut Sl2Word = next.entry(j * 4 + m * 2 + n).or_default();
                                *e = e.add(&x);
                            }
                        }
                    }
                }
                terms = next;
            }
            for (j, w) in terms {
                out.add_at(j, w.scale(c));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braiding_from_crossed_module_matches_expansion() {
        let r = RMatrix::standard_sl2(&FieldCtx::RatFun).unwrap();
        let c = RCalculus::new(r).unwrap();
        assert_eq!(&c.crossed_module_braiding(), c.space().psi());
        let theta = c.theta();
        for i in 0..4 {
            let mut xt = Accumulator::new();
            let mut tx = Accumulator::new();
            for (j, v) in theta.iter() {
                xt.add(i * 4 + j, v);
                tx.add(j * 4 + i, v);
            }
            assert_eq!(c.space().psi().apply(&xt.finish()), tx.finish());
        }
    }

    #[test]
    fn exterior_algebra_dimensions() {
        let s = Sl2Calculus::new(&FieldCtx::RatFun).unwrap();
        assert_eq!(s.forms().dims(), vec![1, 4, 6, 4, 1]);
    }
}
