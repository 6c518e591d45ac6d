//! Normal-ordered arithmetic in `k_q[SL₂]`.
//!
//! Relations: `ba = qab`, `ca = qac`, `db = qbd`, `dc = qcd`, `bc = cb`,
//! `da = 1 + q bc` and `ad = 1 + q⁻¹bc`. Every element is a combination of
//! `a^i b^j c^k` and `b^j c^k d^l`, stored as `a^i b^j c^k d^l` with `i·l = 0`.

use crate::scalars::{FieldCtx, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Exponents of a normal-ordered monomial `a^i b^j c^k d^l`, `i·l = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Sl2Mono {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Sl2Mono {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Option<Self> {
        (a == 0 || d == 0).then_some(Sl2Mono { a, b, c, d })
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }
}

impl fmt::Display for Sl2Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        for (name, e) in [("a", self.a), ("b", self.b), ("c", self.c), ("d", self.d)] {
            match e {
                0 => {}
                1 => write!(f, "{name}")?,
                _ => write!(f, "{name}^{e}")?,
            }
        }
        Ok(())
    }
}

/// An element of `k_q[SL₂]` in normal order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Sl2Word {
    terms: BTreeMap<Sl2Mono, Scalar>,
}

impl Sl2Word {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Sl2Mono, c: Scalar) -> Self {
        let mut w = Self::zero();
        w.add_term(m, &c);
        w
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Sl2Mono, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Sl2Mono) -> Option<&Scalar> {
        self.terms.get(m)
    }

    fn add_term(&mut self, m: Sl2Mono, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Sl2Word) -> Sl2Word {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Sl2Word) -> Sl2Word {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Sl2Word {
        Sl2Word { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Sl2Word {
        let mut out = Sl2Word::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &(c * s));
        }
        out
    }
}

impl fmt::Display for Sl2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){m}")?;
        }
        Ok(())
    }
}

/// Multiplication in `k_q[SL₂]` over a field containing `q`.
#[derive(Clone, Debug)]
pub struct Sl2Coords {
    ctx: FieldCtx,
    q: Scalar,
    q_inv: Scalar,
}

impl Sl2Coords {
    pub fn new(ctx: &FieldCtx) -> Result<Self, crate::scalars::ScalarError> {
        let q = ctx.q()?;
        let q_inv = q.inv()?;
        Ok(Sl2Coords { ctx: ctx.clone(), q, q_inv })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    fn qp(&self, k: i64) -> Scalar {
        if k >= 0 {
            self.q.pow(k).expect("q is nonzero")
        } else {
            self.q_inv.pow(-k).expect("q is nonzero")
        }
    }

    pub fn one(&self) -> Sl2Word {
        Sl2Word::monomial(Sl2Mono::default(), self.ctx.one())
    }

    pub fn scalar(&self, c: Scalar) -> Sl2Word {
        Sl2Word::monomial(Sl2Mono::default(), c)
    }

    /// The matrix generator `t^i_j`: `a, b, c, d` for `(0,0), (0,1), (1,0), (1,1)`.
    pub fn generator(&self, i: usize, j: usize) -> Sl2Word {
        let m = match (i, j) {
            (0, 0) => Sl2Mono { a: 1, ..Default::default() },
            (0, 1) => Sl2Mono { b: 1, ..Default::default() },
            (1, 0) => Sl2Mono { c: 1, ..Default::default() },
            _ => Sl2Mono { d: 1, ..Default::default() },
        };
        Sl2Word::monomial(m, self.ctx.one())
    }

    /// `S t^i_j`: `S a = d`, `S b = -q b`, `S c = -q⁻¹ c`, `S d = a`.
    pub fn antipode_generator(&self, i: usize, j: usize) -> Sl2Word {
        match (i, j) {
            (0, 0) => self.generator(1, 1),
            (0, 1) => self.generator(0, 1).scale(&-&self.q),
            (1, 0) => self.generator(1, 0).scale(&-&self.q_inv),
            _ => self.generator(0, 0),
        }
    }

    /// `c^k b^n d^m` in normal order (`= b^n c^k d^m`).
    pub fn cbd(&self, k: u32, n: u32, m: u32) -> Sl2Word {
        Sl2Word::monomial(Sl2Mono { a: 0, b: n, c: k, d: m }, self.ctx.one())
    }

    /// `x·g` for a monomial `x` and a generator `g ∈ {a,b,c,d}` (0..4).
    fn mono_times_gen(&self, x: Sl2Mono, g: usize, c: &Scalar, out: &mut Sl2Word) {
        let Sl2Mono { a, b, c: cc, d } = x;
        match g {
            0 => {
                if d == 0 {
                    // b^j a = q^j a b^j, c^k a = q^k a c^k
                    out.add_term(Sl2Mono { a: a + 1, ..x }, &(c * &self.qp((b + cc) as i64)));
                } else {
                    // d^l a = d^{l-1}(1 + q bc) and d^{l-1} bc = q^{2(l-1)} bc d^{l-1}
                    out.add_term(Sl2Mono { d: d - 1, ..x }, c);
                    let k = 1 + 2 * (d as i64 - 1);
                    out.add_term(Sl2Mono { b: b + 1, c: cc + 1, d: d - 1, ..x }, &(c * &self.qp(k)));
                }
            }
            1 => out.add_term(Sl2Mono { b: b + 1, ..x }, &(c * &self.qp(d as i64))),
            2 => out.add_term(Sl2Mono { c: cc + 1, ..x }, &(c * &self.qp(d as i64))),
            _ => {
                if a == 0 {
                    out.add_term(Sl2Mono { d: d + 1, ..x }, c);
                } else {
                    // a^i b^j c^k d = q^{-(j+k)} a^{i-1}(ad) b^j c^k, ad = 1 + q⁻¹bc
                    let s = c * &self.qp(-((b + cc) as i64));
                    out.add_term(Sl2Mono { a: a - 1, ..x }, &s);
                    out.add_term(Sl2Mono { a: a - 1, b: b + 1, c: cc + 1, ..x }, &(&s * &self.q_inv));
                }
            }
        }
    }

    fn times_gen(&self, x: &Sl2Word, g: usize) -> Sl2Word {
        let mut out = Sl2Word::zero();
        for (m, c) in &x.terms {
            self.mono_times_gen(*m, g, c, &mut out);
        }
        out
    }

    pub fn mul(&self, x: &Sl2Word, y: &Sl2Word) -> Sl2Word {
        let mut out = Sl2Word::zero();
        for (m, c) in &y.terms {
            let mut acc = x.scale(c);
            for (g, e) in [(0, m.a), (1, m.b), (2, m.c), (3, m.d)] {
                for _ in 0..e {
                    acc = self.times_gen(&acc, g);
                }
            }
            out = out.add(&acc);
        }
        out
    }

    pub fn product(&self, factors: &[&Sl2Word]) -> Sl2Word {
        factors.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// `Σ_n t^i_n t^n_j - δ` style matrix products for `n×n` matrices of words.
    pub fn matmul(&self, x: &[Vec<Sl2Word>], y: &[Vec<Sl2Word>]) -> Vec<Vec<Sl2Word>> {
        let cols = y.first().map_or(0, Vec::len);
        x.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| row.iter().enumerate().fold(Sl2Word::zero(), |acc, (k, a)| acc.add(&self.mul(a, &y[k][j]))))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Sl2Coords {
        Sl2Coords::new(&FieldCtx::RatFun).unwrap()
    }

    #[test]
    fn defining_relations() {
        let r = ring();
        let (a, b, c, d) = (r.generator(0, 0), r.generator(0, 1), r.generator(1, 0), r.generator(1, 1));
        let q = r.q.clone();
        assert_eq!(r.mul(&b, &a), r.mul(&a, &b).scale(&q));
        assert_eq!(r.mul(&c, &a), r.mul(&a, &c).scale(&q));
        assert_eq!(r.mul(&d, &b), r.mul(&b, &d).scale(&q));
        assert_eq!(r.mul(&d, &c), r.mul(&c, &d).scale(&q));
        assert_eq!(r.mul(&b, &c), r.mul(&c, &b));
        let det = r.mul(&a, &d).sub(&r.mul(&b, &c).scale(&r.q_inv));
        assert_eq!(det, r.one());
        let comm = r.mul(&a, &d).sub(&r.mul(&d, &a));
        assert_eq!(comm, r.mul(&b, &c).scale(&(&r.q_inv - &q)));
    }

    #[test]
    fn associative_on_small_words() {
        let r = ring();
        let gens: Vec<Sl2Word> = (0..4).map(|g| r.generator(g / 2, g % 2)).collect();
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    let xy = r.mul(x, y);
                    let yz = r.mul(y, z);
                    assert_eq!(r.mul(&xy, z), r.mul(x, &yz));
                    let w = r.mul(&xy, &r.mul(z, &xy));
                    assert_eq!(r.mul(&r.mul(&w, x), y), r.mul(&w, &xy));
                }
            }
        }
    }

    #[test]
    fn antipode_inverts_t() {
        let r = ring();
        let t: Vec<Vec<Sl2Word>> = (0..2).map(|i| (0..2).map(|j| r.generator(i, j)).collect()).collect();
        let st: Vec<Vec<Sl2Word>> = (0..2).map(|i| (0..2).map(|j| r.antipode_generator(i, j)).collect()).collect();
        for p in [r.matmul(&t, &st), r.matmul(&st, &t)] {
            for (i, row) in p.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    assert_eq!(*x, if i == j { r.one() } else { Sl2Word::zero() });
                }
            }
        }
    }
}
