//! Dense integer polynomials stored low-degree first.
//!
//! These helpers back the rational-function field. Every function returns
//! trimmed vectors (no trailing zero coefficients); the zero polynomial is the
//! empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntPoly = Vec<BigInt>;

pub fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn is_one(p: &[BigInt]) -> bool {
    p.len() == 1 && p[0].is_one()
}

/// Number of vanishing low-order coefficients (the s-adic valuation).
pub fn valuation(p: &[BigInt]) -> usize {
    p.iter().take_while(|c| c.is_zero()).count()
}

pub fn shift_up(p: &[BigInt], k: usize) -> IntPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend(p.iter().cloned());
    out
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out: IntPoly = long.to_vec();
    for (o, c) in out.iter_mut().zip(short) {
        *o += c;
    }
    trim(&mut out);
    out
}

pub fn neg(a: &[BigInt]) -> IntPoly {
    a.iter().map(|c| -c).collect()
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn div_scalar(a: &[BigInt], c: &BigInt) -> IntPoly {
    a.iter().map(|x| x / c).collect()
}

/// Non-negative gcd of all coefficients.
pub fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub fn primitive(a: &[BigInt]) -> IntPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = content(a);
    if a.last().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    div_scalar(a, &c)
}

/// Pseudo-remainder of `a` by `b` (b nonzero).
pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut r: IntPoly = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Greatest common divisor in Z[s], primitive with positive leading coefficient.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    x
}

/// Exact quotient `a / b` when `b` divides `a` in Z[s]; `None` otherwise.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: IntPoly = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let (quo, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &quo * bc;
        }
        q[off] = quo;
        trim(&mut r);
    }
    if !r.is_empty() {
        return None;
    }
    trim(&mut q);
    Some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        let mut v: IntPoly = cs.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut v);
        v
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (s+1)(s-2) and (s+1)(s+3)
        let a = mul(&p(&[1, 1]), &p(&[-2, 1]));
        let b = mul(&p(&[1, 1]), &p(&[3, 1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(gcd(&p(&[2, 4]), &p(&[3])), p(&[1]));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = mul(&p(&[1, 0, -1]), &p(&[2, 3]));
        assert_eq!(div_exact(&a, &p(&[2, 3])), Some(p(&[1, 0, -1])));
        assert_eq!(div_exact(&p(&[1, 1]), &p(&[0, 2])), None);
    }

    #[test]
    fn pseudo_remainder_vanishes_on_multiples() {
        let a = mul(&p(&[5, -1, 2]), &p(&[1, 7]));
        assert!(pseudo_rem(&a, &p(&[1, 7])).is_empty());
    }
}
