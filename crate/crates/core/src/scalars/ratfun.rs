//! Rational functions in one variable `s` over Q, kept in a canonical form.
//!
//! A value is stored as `s^shift * num(s) / den(s)` with integer polynomials
//! satisfying:
//! - `num(0) != 0` and `den(0) != 0` (all powers of `s` live in `shift`),
//! - `gcd(num, den) = 1` and the coefficients of `num` and `den` are jointly
//!   coprime,
//! - the leading coefficient of `den` is positive.
//!
//! The form is unique, so derived equality and hashing are structural.
//! Laurent polynomials (`den = 1`) take a fast path that never calls gcd.

use super::poly::{self, IntPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    shift: i64,
    num: IntPoly,
    den: IntPoly,
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun { shift: 0, num: Vec::new(), den: vec![BigInt::one()] }
    }

    pub fn one() -> Self {
        Self::from_int(BigInt::one())
    }

    pub fn from_int(c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun { shift: 0, num: vec![c], den: vec![BigInt::one()] }
    }

    /// `c / d` as a constant.
    pub fn from_ratio(c: BigInt, d: BigInt) -> Self {
        Self::normalize(0, vec![c], vec![d])
    }

    /// `s^k`.
    pub fn monomial(k: i64) -> Self {
        RatFun { shift: k, num: vec![BigInt::one()], den: vec![BigInt::one()] }
    }

    /// Laurent polynomial `sum_i coeffs[i] s^(low + i)`.
    pub fn laurent(low: i64, coeffs: &[i64]) -> Self {
        let num: IntPoly = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::normalize(low, num, vec![BigInt::one()])
    }

    /// Builds `s^shift * num / den` from arbitrary integer polynomials.
    pub fn from_parts(shift: i64, num: IntPoly, den: IntPoly) -> Option<Self> {
        let mut den = den;
        poly::trim(&mut den);
        if den.is_empty() {
            return None;
        }
        let mut num = num;
        poly::trim(&mut num);
        Some(Self::normalize(shift, num, den))
    }

    fn normalize(mut shift: i64, mut num: IntPoly, mut den: IntPoly) -> Self {
        poly::trim(&mut num);
        poly::trim(&mut den);
        if num.is_empty() {
            return Self::zero();
        }
        let vn = poly::valuation(&num);
        if vn > 0 {
            num.drain(..vn);
            shift += vn as i64;
        }
        let vd = poly::valuation(&den);
        if vd > 0 {
            den.drain(..vd);
            shift -= vd as i64;
        }
        if den.len() > 1 {
            let g = poly::gcd(&num, &den);
            if g.len() > 1 {
                num = poly::div_exact(&num, &g).expect("gcd divides numerator");
                den = poly::div_exact(&den, &g).expect("gcd divides denominator");
            }
        }
        let c = poly::content(&num).gcd(&poly::content(&den));
        let c = if den.last().is_some_and(|l| l.is_negative()) { -c } else { c };
        if !c.is_one() {
            num = poly::div_scalar(&num, &c);
            den = poly::div_scalar(&den, &c);
        }
        RatFun { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && poly::is_one(&self.num) && poly::is_one(&self.den)
    }

    pub fn is_laurent(&self) -> bool {
        poly::is_one(&self.den)
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.den
    }

    fn aligned_sum(a: &RatFun, a_num: IntPoly, b: &RatFun, b_num: IntPoly) -> (i64, IntPoly) {
        let low = a.shift.min(b.shift);
        let x = poly::shift_up(&a_num, (a.shift - low) as usize);
        let y = poly::shift_up(&b_num, (b.shift - low) as usize);
        (low, poly::add(&x, &y))
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let (low, num) = Self::aligned_sum(self, self.num.clone(), other, other.num.clone());
            if self.is_laurent() {
                return Self::normalize_laurent(low, num);
            }
            return Self::normalize(low, num, self.den.clone());
        }
        let x = poly::mul(&self.num, &other.den);
        let y = poly::mul(&other.num, &self.den);
        let (low, num) = Self::aligned_sum(self, x, other, y);
        Self::normalize(low, num, poly::mul(&self.den, &other.den))
    }

    fn normalize_laurent(mut shift: i64, mut num: IntPoly) -> RatFun {
        poly::trim(&mut num);
        if num.is_empty() {
            return Self::zero();
        }
        let v = poly::valuation(&num);
        if v > 0 {
            num.drain(..v);
            shift += v as i64;
        }
        RatFun { shift, num, den: vec![BigInt::one()] }
    }

    pub fn neg(&self) -> RatFun {
        RatFun { shift: self.shift, num: poly::neg(&self.num), den: self.den.clone() }
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let shift = self.shift + other.shift;
        if self.is_laurent() && other.is_laurent() {
            // Constant terms are nonzero, so their product is too.
            return RatFun { shift, num: poly::mul(&self.num, &other.num), den: vec![BigInt::one()] };
        }
        Self::normalize(shift, poly::mul(&self.num, &other.num), poly::mul(&self.den, &other.den))
    }

    pub fn inv(&self) -> Option<RatFun> {
        if self.is_zero() {
            return None;
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.last().is_some_and(|l| l.is_negative()) {
            num = poly::neg(&num);
            den = poly::neg(&den);
        }
        Some(RatFun { shift: -self.shift, num, den })
    }

    /// Whether every exponent of `s` that occurs is even, so the value is a
    /// rational function of `q = s^2`.
    pub fn is_even(&self) -> bool {
        let even = |p: &[BigInt]| p.iter().enumerate().all(|(i, c)| i % 2 == 0 || c.is_zero());
        self.shift % 2 == 0 && even(&self.num) && even(&self.den)
    }

    /// Numerator and denominator as plain polynomials in `s`, absorbing the shift.
    pub fn to_polys(&self) -> (IntPoly, IntPoly) {
        if self.shift >= 0 {
            (poly::shift_up(&self.num, self.shift as usize), self.den.clone())
        } else {
            (self.num.clone(), poly::shift_up(&self.den, (-self.shift) as usize))
        }
    }
}

fn write_laurent(f: &mut fmt::Formatter<'_>, low: i64, coeffs: &[BigInt], var: &str, step: i64) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let e = (low + i as i64) / step;
        let (neg, mag) = (c.is_negative(), c.abs());
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        let mono = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{mag}*{mono}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (var, step) = if self.is_even() { ("q", 2) } else { ("s", 1) };
        let (low, num) = (self.shift, &self.num);
        if self.is_laurent() {
            return write_laurent(f, low, num, var, step);
        }
        let many = num.iter().filter(|c| !c.is_zero()).count() > 1;
        if many {
            write!(f, "(")?;
        }
        write_laurent(f, low, num, var, step)?;
        if many {
            write!(f, ")")?;
        }
        write!(f, "/(")?;
        write_laurent(f, 0, &self.den, var, step)?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> RatFun {
        RatFun::monomial(2 * k)
    }

    #[test]
    fn lambda_times_q() {
        let lambda = RatFun::one().sub(&q(-2));
        let lhs = lambda.mul(&q(1));
        let rhs = q(1).sub(&q(-1));
        assert_eq!(lhs, rhs);
        assert_eq!(rhs.to_string(), "q - q^-1");
    }

    #[test]
    fn division_cancels_common_factors() {
        // (q^2 - 1) / (q - 1) = q + 1
        let a = q(2).sub(&RatFun::one());
        let b = q(1).sub(&RatFun::one());
        let c = a.mul(&b.inv().unwrap());
        assert_eq!(c, q(1).add(&RatFun::one()));
        assert!(c.is_laurent());
    }

    #[test]
    fn canonical_sign_and_content() {
        let a = RatFun::from_parts(0, vec![BigInt::from(2)], vec![BigInt::from(-4), BigInt::from(-6)]).unwrap();
        assert_eq!(a.denominator(), &[BigInt::from(2), BigInt::from(3)]);
        assert_eq!(a.numerator(), &[BigInt::from(-1)]);
    }

    #[test]
    fn odd_powers_display_in_s() {
        let a = RatFun::monomial(3).add(&RatFun::monomial(-1));
        assert_eq!(a.to_string(), "s^3 + s^-1");
    }
}
