//! Partial derivatives of the 4D calculus on monomials `c^k b^n d^m`.
//!
//! The exterior derivative of a monomial has an `e_c` term with `d^{m-1}`, so
//! the operators act on the localisation with `d^{-1}` adjoined: `m` is any
//! integer while `k, n ≥ 0`. Terms with a negative power of `c` or `b` vanish.

use super::QslError;
use crate::linalg::{LinMap, SparseVec};
use crate::scalars::{FieldCtx, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Exponents of `c^k b^n d^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial3 {
    pub k: i32,
    pub n: i32,
    pub m: i32,
}

impl Monomial3 {
    pub fn new(k: i32, n: i32, m: i32) -> Self {
        Monomial3 { k, n, m }
    }

    pub fn degree(&self) -> i32 {
        self.k + self.n + self.m
    }
}

impl fmt::Display for Monomial3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c^{} b^{} d^{}", self.k, self.n, self.m)
    }
}

/// A finite combination of monomials `c^k b^n d^m`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MonoPoly {
    terms: BTreeMap<Monomial3, Scalar>,
}

impl MonoPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(x: Monomial3, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(x, c);
        p
    }

    /// Adds `c·x`, dropping it when `x` has a negative power of `c` or `b`.
    pub fn add_term(&mut self, x: Monomial3, c: Scalar) {
        if c.is_zero() || x.k < 0 || x.n < 0 {
            return;
        }
        match self.terms.get_mut(&x) {
            Some(y) => {
                *y += &c;
                if y.is_zero() {
                    self.terms.remove(&x);
                }
            }
            None => {
                self.terms.insert(x, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial3, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &Monomial3) -> Option<&Scalar> {
        self.terms.get(x)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &MonoPoly) -> MonoPoly {
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(*x, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MonoPoly) -> MonoPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MonoPoly {
        MonoPoly { terms: self.terms.iter().map(|(x, c)| (*x, -c)).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> MonoPoly {
        let mut out = MonoPoly::zero();
        for (x, c) in &self.terms {
            out.add_term(*x, c * s);
        }
        out
    }
}

impl fmt::Display for MonoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (x, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){x}")?;
        }
        Ok(())
    }
}

/// Which partial derivative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Partial {
    /// Coefficient of `e_a` in `df`.
    A,
    B,
    C,
    D,
    /// `∂^z = (∂^a - ∂^d)/(1 + q⁻²)`.
    Z,
    /// `∂^0 = (∂^a + q⁻²∂^d)/(1 + q⁻²)`, the `θ` component.
    Zero,
}

/// The monomial partials with `df = Σ_i (∂^i f) e_i` on a window of
/// monomials of total degree at most `N`.
#[derive(Clone, Debug)]
pub struct MonomialCalculus {
    ctx: FieldCtx,
    window: usize,
    q: Scalar,
    q_inv: Scalar,
    lambda: Scalar,
    norm: Scalar,
}

impl MonomialCalculus {
    pub fn new(ctx: &FieldCtx, window: usize) -> Result<Self, QslError> {
        if window < 2 {
            return Err(QslError::WindowTooSmall(window));
        }
        // half-integer q-numbers need s
        ctx.s_pow(1)?;
        let q = ctx.q()?;
        let norm = (&ctx.one() + &ctx.q_pow(-2)?).inv()?;
        Ok(MonomialCalculus { ctx: ctx.clone(), window, q_inv: q.inv()?, q, lambda: ctx.lambda()?, norm })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Monomials with `k, n, m ≥ 0` and `k + n + m ≤ bound`.
    pub fn monomials(bound: usize) -> Vec<Monomial3> {
        let b = bound as i32;
        let mut out = Vec::new();
        for k in 0..=b {
            for n in 0..=b - k {
                for m in 0..=b - k - n {
                    out.push(Monomial3::new(k, n, m));
                }
            }
        }
        out
    }

    fn qp(&self, e: i32) -> Scalar {
        if e >= 0 {
            self.q.pow(e as i64).expect("q is nonzero")
        } else {
            self.q_inv.pow(-e as i64).expect("q is nonzero")
        }
    }

    fn qint(&self, n: i32) -> Scalar {
        self.ctx.sym_int(n as i64).expect("field has q")
    }

    /// Coefficients of `e_a, e_b, e_c, e_d` in `d(c^k b^n d^m)`.
    pub fn d_monomial(&self, x: Monomial3) -> [MonoPoly; 4] {
        let Monomial3 { k, n, m } = x;
        let l = &self.lambda;
        let one = self.ctx.one();
        let mut ea = MonoPoly::zero();
        let l2q = &(l * l) * &self.q;
        ea.add_term(x, &l2q * &(&self.qint(k + 1) * &self.qint(m + n)));
        ea.add_term(
            Monomial3::new(k - 1, n - 1, m),
            &l2q * &(&self.qp(-m) * &(&self.qint(n) * &self.qint(k))),
        );
        ea.add_term(x, &self.qp(k - m - n) - &one);
        let eb = MonoPoly::monomial(Monomial3::new(k - 1, n, m + 1), l * &(&self.qp(n) * &self.qint(k)));
        let mut ec = MonoPoly::zero();
        let lq = l * &self.qp(-k);
        ec.add_term(Monomial3::new(k + 1, n, m - 1), &lq * &(&self.qp(m - 1) * &self.qint(m + n)));
        ec.add_term(Monomial3::new(k, n - 1, m - 1), &lq * &self.qint(n));
        let ed = MonoPoly::monomial(x, &self.qp(m + n - k) - &one);
        [ea, eb, ec, ed]
    }

    fn apply_basic(&self, i: usize, f: &MonoPoly) -> MonoPoly {
        let mut out = MonoPoly::zero();
        for (x, c) in f.terms() {
            out = out.add(&self.d_monomial(*x)[i].scale(c));
        }
        out
    }

    pub fn partial(&self, p: Partial, f: &MonoPoly) -> MonoPoly {
        match p {
            Partial::A => self.apply_basic(0, f),
            Partial::B => self.apply_basic(1, f),
            Partial::C => self.apply_basic(2, f),
            Partial::D => self.apply_basic(3, f),
            Partial::Z => self.apply_basic(0, f).sub(&self.apply_basic(3, f)).scale(&self.norm),
            Partial::Zero => {
                let qm2 = self.qp(-2);
                self.apply_basic(0, f).add(&self.apply_basic(3, f).scale(&qm2)).scale(&self.norm)
            }
        }
    }

    /// `Δ_q(c^k b^n d^m) = q^{-m}(k)_q(n)_q c^{k-1}b^{n-1}d^m
    /// + ((k+n+m)/2)_q ((k+n+m)/2 + 1)_q c^k b^n d^m`.
    pub fn laplace_beltrami(&self, f: &MonoPoly) -> MonoPoly {
        let mut out = MonoPoly::zero();
        for (x, c) in f.terms() {
            let Monomial3 { k, n, m } = *x;
            let lower = &self.qp(-m) * &(&self.qint(k) * &self.qint(n));
            out.add_term(Monomial3::new(k - 1, n - 1, m), c * &lower);
            let s = x.degree() as i64;
            let diag = &self.ctx.sym_half(s).expect("field has s") * &self.ctx.sym_half(s + 2).expect("field has s");
            out.add_term(*x, c * &diag);
        }
        out
    }

    /// `∂^b∂^c + q⁻²∂^c∂^b + q⁻³(2)_q(∂^z∂^z - ∂^0∂^0)` on `f`.
    pub fn metric_laplacian(&self, f: &MonoPoly) -> MonoPoly {
        let p = |x: Partial, g: &MonoPoly| self.partial(x, g);
        let bc = p(Partial::B, &p(Partial::C, f));
        let cb = p(Partial::C, &p(Partial::B, f)).scale(&self.qp(-2));
        let zz = p(Partial::Z, &p(Partial::Z, f));
        let oo = p(Partial::Zero, &p(Partial::Zero, f));
        let w = &self.qp(-3) * &self.qint(2);
        bc.add(&cb).add(&zz.sub(&oo).scale(&w))
    }

    /// `2q⁻¹λ²`.
    pub fn laplacian_factor(&self) -> Scalar {
        &(&self.ctx.int(2) * &self.q_inv) * &(&self.lambda * &self.lambda)
    }

    /// `q²λ²/(2)_q`.
    pub fn partial0_factor(&self) -> Scalar {
        let x = &(&self.q * &self.q) * &(&self.lambda * &self.lambda);
        x.try_div(&self.qint(2)).expect("(2)_q is nonzero")
    }

    fn interior(&self) -> Vec<Monomial3> {
        Self::monomials(self.window - 2)
    }

    /// The metric Laplacian equals `2q⁻¹λ²Δ_q` on every monomial of degree at
    /// most `N - 2`.
    pub fn verify_laplacian0(&self) -> Result<bool, QslError> {
        if self.window < 4 {
            return Err(QslError::WindowTooSmall(self.window));
        }
        let f = self.laplacian_factor();
        Ok(self.interior().into_iter().all(|x| {
            let p = MonoPoly::monomial(x, self.ctx.one());
            self.metric_laplacian(&p) == self.laplace_beltrami(&p).scale(&f)
        }))
    }

    /// `∂^0 = (q²λ²/(2)_q) Δ_q` on the window interior.
    pub fn verify_partial0(&self) -> bool {
        let f = self.partial0_factor();
        self.interior().into_iter().all(|x| {
            let p = MonoPoly::monomial(x, self.ctx.one());
            self.partial(Partial::Zero, &p) == self.laplace_beltrami(&p).scale(&f)
        })
    }

    /// `Δ_q` as a matrix on the window (it preserves `k, n, m ≥ 0`).
    pub fn laplace_beltrami_matrix(&self) -> LinMap {
        let basis = Self::monomials(self.window);
        let index: BTreeMap<Monomial3, usize> = basis.iter().enumerate().map(|(i, x)| (*x, i)).collect();
        LinMap::from_action(basis.len(), basis.len(), &self.ctx, |j| {
            let img = self.laplace_beltrami(&MonoPoly::monomial(basis[j], self.ctx.one()));
            SparseVec::from_entries(img.terms().map(|(x, c)| (index[x], c.clone())))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn calc(n: usize) -> MonomialCalculus {
        MonomialCalculus::new(&FieldCtx::RatFun, n).unwrap()
    }

    #[test]
    fn window_guard() {
        assert_eq!(MonomialCalculus::new(&FieldCtx::RatFun, 1).unwrap_err(), QslError::WindowTooSmall(1));
        assert_eq!(calc(3).verify_laplacian0().unwrap_err(), QslError::WindowTooSmall(3));
    }

    #[test]
    fn laplace_beltrami_small_values() {
        let c = calc(4);
        let ctx = FieldCtx::RatFun;
        let one = MonoPoly::monomial(Monomial3::new(0, 0, 0), ctx.one());
        assert!(c.laplace_beltrami(&one).is_zero());
        // Δ_q(cb) = 1 + (2)_q cb
        let cb = Monomial3::new(1, 1, 0);
        let got = c.laplace_beltrami(&MonoPoly::monomial(cb, ctx.one()));
        let mut want = MonoPoly::monomial(Monomial3::new(0, 0, 0), ctx.one());
        want.add_term(cb, ctx.sym_int(2).unwrap());
        assert_eq!(got, want);
    }

    #[test]
    fn laplacian_on_c() {
        let c = calc(4);
        let ctx = FieldCtx::RatFun;
        let x = Monomial3::new(1, 0, 0);
        let lhs = c.metric_laplacian(&MonoPoly::monomial(x, ctx.one()));
        let want = &c.laplacian_factor() * &(&ctx.sym_half(1).unwrap() * &ctx.sym_half(3).unwrap());
        assert_eq!(lhs, MonoPoly::monomial(x, want));
    }

    #[test]
    fn window_identity() {
        let c = calc(6);
        assert!(c.verify_laplacian0().unwrap());
        assert!(c.verify_partial0());
    }
}
