//! The field Q[q]/(Phi_n(q)) for a cyclotomic polynomial Phi_n.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

use super::poly::{self, IntPoly};

/// A cyclotomic modulus `Phi_n`, monic with integer coefficients.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct CycModulus {
    index: u32,
    phi: IntPoly,
}

impl CycModulus {
    /// Builds `Phi_n` by dividing `q^n - 1` by `Phi_d` for every proper divisor `d`.
    pub fn new(index: u32) -> Option<Arc<Self>> {
        if index < 2 {
            return None;
        }
        Some(Arc::new(CycModulus { index, phi: cyclotomic_poly(index) }))
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn poly(&self) -> &[BigInt] {
        &self.phi
    }
}

fn cyclotomic_poly(n: u32) -> IntPoly {
    let mut p: IntPoly = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly::div_exact(&p, &cyclotomic_poly(d)).expect("Phi_d divides q^n - 1");
        }
    }
    p
}

/// An element of Q[q]/(Phi_n), stored as its reduced coefficient vector of
/// length `deg Phi_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    modulus: Arc<CycModulus>,
    coeffs: Vec<BigRational>,
}

fn rtrim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn rmul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    rtrim(&mut out);
    out
}

fn rsub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (o, c) in out.iter_mut().zip(b) {
        *o -= c;
    }
    rtrim(&mut out);
    out
}

/// Quotient and remainder of `a` by nonzero `b` over Q.
fn rdivrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    rtrim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = &r[dr] / lb;
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &c * bc;
        }
        q[dr - db] = c;
        rtrim(&mut r);
    }
    rtrim(&mut q);
    (q, r)
}

impl Cyclotomic {
    fn from_poly(modulus: &Arc<CycModulus>, p: Vec<BigRational>) -> Self {
        let m: Vec<BigRational> = modulus.phi.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let (_, mut r) = rdivrem(&p, &m);
        r.resize(modulus.degree(), BigRational::zero());
        Cyclotomic { modulus: modulus.clone(), coeffs: r }
    }

    pub fn from_coeffs(modulus: &Arc<CycModulus>, coeffs: Vec<BigRational>) -> Self {
        Self::from_poly(modulus, coeffs)
    }

    pub fn constant(modulus: &Arc<CycModulus>, c: BigRational) -> Self {
        Self::from_poly(modulus, vec![c])
    }

    /// `q^k` for any integer `k` (q has finite order, so negative powers wrap).
    pub fn q_pow(modulus: &Arc<CycModulus>, k: i64) -> Self {
        let n = modulus.index as i64;
        let e = k.rem_euclid(n) as usize;
        let mut p = vec![BigRational::zero(); e + 1];
        p[e] = BigRational::one();
        Self::from_poly(modulus, p)
    }

    pub fn modulus(&self) -> &Arc<CycModulus> {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.first().is_some_and(|c| c.is_one()) && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Cyclotomic { modulus: self.modulus.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Cyclotomic { modulus: self.modulus.clone(), coeffs }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { modulus: self.modulus.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_poly(&self.modulus, rmul(&self.coeffs, &other.coeffs))
    }

    /// Inverse by the extended Euclidean algorithm against `Phi_n`.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let m: Vec<BigRational> = self.modulus.phi.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let mut a = self.coeffs.clone();
        rtrim(&mut a);
        // Invariant: r0 = s0 * a (mod m), r1 = s1 * a (mod m).
        let (mut r0, mut r1) = (m, a);
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = rdivrem(&r0, &r1);
            let s = rsub(&s0, &rmul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r1 is a nonzero constant because Phi_n is irreducible.
        let c = r1.first()?.clone();
        let inv: Vec<BigRational> = s1.iter().map(|x| x / &c).collect();
        Some(Self::from_poly(&self.modulus, inv))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        let b = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_poly(3), b(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), b(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), b(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), b(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cube_root_of_unity() {
        let m = CycModulus::new(3).unwrap();
        let q = Cyclotomic::q_pow(&m, 1);
        let q2 = q.mul(&q);
        assert!(q.mul(&q2).is_one());
        let one = Cyclotomic::constant(&m, BigRational::one());
        assert!(one.add(&q).add(&q2).is_zero());
        assert_eq!(q.inv().unwrap(), q2);
    }

    #[test]
    fn inverse_of_nonunit_looking_element() {
        let m = CycModulus::new(5).unwrap();
        let x = Cyclotomic::q_pow(&m, 1).add(&Cyclotomic::constant(&m, BigRational::from_integer(2.into())));
        assert!(x.mul(&x.inv().unwrap()).is_one());
    }
}
