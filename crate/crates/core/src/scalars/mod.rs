//! Exact coefficient fields.
//!
//! Three fields are supported: the rationals, rational functions Q(s) with
//! `q = s^2` (so half-integer powers of `q` exist), and cyclotomic quotients
//! Q[q]/(Phi_n) for examples at roots of unity. Every [`Scalar`] belongs to
//! exactly one field and arithmetic between different fields is an error.
//!
//! The arithmetic operators (`+`, `-`, `*`) panic on a field mismatch; use the
//! `try_*` methods when the operands come from untrusted input.

mod cyclotomic;
mod poly;
mod ratfun;

pub use cyclotomic::{CycModulus, Cyclotomic};
pub use ratfun::RatFun;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("{op} is not available over {field}")]
    UnsupportedField { op: &'static str, field: String },
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

/// The field a computation runs over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldCtx {
    Rational,
    RatFun,
    Cyclotomic(Arc<CycModulus>),
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldCtx::Rational => write!(f, "rational"),
            FieldCtx::RatFun => write!(f, "ratfun"),
            FieldCtx::Cyclotomic(m) => write!(f, "cyclotomic:{}", m.index()),
        }
    }
}

impl std::str::FromStr for FieldCtx {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rational" => Ok(FieldCtx::Rational),
            "ratfun" => Ok(FieldCtx::RatFun),
            _ => {
                let n = s
                    .strip_prefix("cyclotomic:")
                    .and_then(|n| n.parse::<u32>().ok())
                    .ok_or_else(|| ScalarError::Parse(format!("unknown field '{s}'")))?;
                FieldCtx::cyclotomic(n)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    RatFun(RatFun),
    Cyclotomic(Cyclotomic),
}

impl FieldCtx {
    pub fn cyclotomic(n: u32) -> Result<Self, ScalarError> {
        CycModulus::new(n)
            .map(FieldCtx::Cyclotomic)
            .ok_or_else(|| ScalarError::Parse(format!("cyclotomic index {n} must be at least 2")))
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(&self, n: i64, d: i64) -> Scalar {
        self.rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn rational(&self, r: BigRational) -> Scalar {
        match self {
            FieldCtx::Rational => Scalar::Rational(r),
            FieldCtx::RatFun => Scalar::RatFun(RatFun::from_ratio(r.numer().clone(), r.denom().clone())),
            FieldCtx::Cyclotomic(m) => Scalar::Cyclotomic(Cyclotomic::constant(m, r)),
        }
    }

    fn unsupported(&self, op: &'static str) -> ScalarError {
        ScalarError::UnsupportedField { op, field: self.to_string() }
    }

    /// `q^k`.
    pub fn q_pow(&self, k: i64) -> Result<Scalar, ScalarError> {
        match self {
            FieldCtx::Rational => Err(self.unsupported("q")),
            FieldCtx::RatFun => Ok(Scalar::RatFun(RatFun::monomial(2 * k))),
            FieldCtx::Cyclotomic(m) => Ok(Scalar::Cyclotomic(Cyclotomic::q_pow(m, k))),
        }
    }

    pub fn q(&self) -> Result<Scalar, ScalarError> {
        self.q_pow(1)
    }

    /// `s^k` where `s^2 = q`; only the rational-function field has `s`.
    pub fn s_pow(&self, k: i64) -> Result<Scalar, ScalarError> {
        match self {
            FieldCtx::RatFun => Ok(Scalar::RatFun(RatFun::monomial(k))),
            _ => Err(self.unsupported("s = q^(1/2)")),
        }
    }

    /// Laurent polynomial in `q`: `sum_i coeffs[i] q^(low + i)`.
    pub fn q_laurent(&self, low: i64, coeffs: &[i64]) -> Result<Scalar, ScalarError> {
        let mut acc = self.zero();
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                acc += &(&self.int(c) * &self.q_pow(low + i as i64)?);
            }
        }
        Ok(acc)
    }

    /// `lambda = 1 - q^-2`.
    pub fn lambda(&self) -> Result<Scalar, ScalarError> {
        Ok(&self.one() - &self.q_pow(-2)?)
    }

    /// Symmetric q-integer `(n)_q = (q^n - q^-n)/(q - q^-1)`.
    pub fn sym_int(&self, n: i64) -> Result<Scalar, ScalarError> {
        let num = &self.q_pow(n)? - &self.q_pow(-n)?;
        num.try_div(&(&self.q()? - &self.q_pow(-1)?))
    }

    /// Symmetric q-integer at a half-integer argument, `(k/2)_q`, via `s`.
    pub fn sym_half(&self, k: i64) -> Result<Scalar, ScalarError> {
        if k % 2 == 0 {
            return self.sym_int(k / 2);
        }
        let num = &self.s_pow(k)? - &self.s_pow(-k)?;
        num.try_div(&(&self.q()? - &self.q_pow(-1)?))
    }

    /// `[n, x] = 1 + x + ... + x^(n-1)` for an arbitrary base `x`.
    pub fn q_int_base(&self, n: u32, x: &Scalar) -> Scalar {
        let mut acc = self.zero();
        let mut p = self.one();
        for _ in 0..n {
            acc += &p;
            p = &p * x;
        }
        acc
    }

    /// `[n, q] = (1 - q^n)/(1 - q)`.
    pub fn q_int(&self, n: u32) -> Result<Scalar, ScalarError> {
        Ok(self.q_int_base(n, &self.q()?))
    }

    /// `[n, q]! = [1,q][2,q]...[n,q]`.
    pub fn q_factorial(&self, n: u32) -> Result<Scalar, ScalarError> {
        let mut acc = self.one();
        for k in 1..=n {
            acc = &acc * &self.q_int(k)?;
        }
        Ok(acc)
    }

    /// Parses a scalar from the JSON schema (see [`Scalar::to_json`]).
    pub fn parse_json(&self, v: &Value) -> Result<Scalar, ScalarError> {
        let bad = || ScalarError::Parse(v.to_string());
        match (self, v) {
            (_, Value::String(s)) => self.parse_rational(s).map(|r| self.rational(r)),
            (_, Value::Number(n)) => {
                let k = n.as_i64().ok_or_else(bad)?;
                Ok(self.int(k))
            }
            (FieldCtx::RatFun, Value::Object(o)) => {
                let num = json_int_list(o.get("num").ok_or_else(bad)?)?;
                let den = json_int_list(o.get("den").ok_or_else(bad)?)?;
                RatFun::from_parts(0, num, den).map(Scalar::RatFun).ok_or(ScalarError::DivisionByZero)
            }
            (FieldCtx::Cyclotomic(m), Value::Object(o)) => {
                let idx = o.get("mod_index").and_then(Value::as_u64).ok_or_else(bad)?;
                if idx != m.index() as u64 {
                    return Err(ScalarError::FieldMismatch(format!("cyclotomic:{idx}"), self.to_string()));
                }
                let coeffs = o
                    .get("coeffs")
                    .and_then(Value::as_array)
                    .ok_or_else(bad)?
                    .iter()
                    .map(|c| match c {
                        Value::String(s) => self.parse_rational(s),
                        Value::Number(n) => n.as_i64().map(|k| BigRational::from_integer(k.into())).ok_or_else(bad),
                        _ => Err(bad()),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Scalar::Cyclotomic(Cyclotomic::from_coeffs(m, coeffs)))
            }
            _ => Err(bad()),
        }
    }

    fn parse_rational(&self, s: &str) -> Result<BigRational, ScalarError> {
        let bad = || ScalarError::Parse(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

fn json_int_list(v: &Value) -> Result<Vec<BigInt>, ScalarError> {
    let bad = || ScalarError::Parse(v.to_string());
    v.as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|c| match c {
            Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(bad),
            Value::String(s) => s.parse::<BigInt>().map_err(|_| bad()),
            _ => Err(bad()),
        })
        .collect()
}

fn int_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(k) => json!(k),
        None => json!(c.to_string()),
    }
}

impl Scalar {
    pub fn ctx(&self) -> FieldCtx {
        match self {
            Scalar::Rational(_) => FieldCtx::Rational,
            Scalar::RatFun(_) => FieldCtx::RatFun,
            Scalar::Cyclotomic(c) => FieldCtx::Cyclotomic(c.modulus().clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::RatFun(r) => r.is_zero(),
            Scalar::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::RatFun(r) => r.is_one(),
            Scalar::Cyclotomic(c) => c.is_one(),
        }
    }

    fn mismatch(&self, other: &Scalar) -> ScalarError {
        ScalarError::FieldMismatch(self.ctx().to_string(), other.ctx().to_string())
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::RatFun(a), Scalar::RatFun(b)) => Ok(Scalar::RatFun(a.add(b))),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) if a.modulus() == b.modulus() => {
                Ok(Scalar::Cyclotomic(a.add(b)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a - b)),
            (Scalar::RatFun(a), Scalar::RatFun(b)) => Ok(Scalar::RatFun(a.sub(b))),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) if a.modulus() == b.modulus() => {
                Ok(Scalar::Cyclotomic(a.sub(b)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::RatFun(a), Scalar::RatFun(b)) => Ok(Scalar::RatFun(a.mul(b))),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) if a.modulus() == b.modulus() => {
                Ok(Scalar::Cyclotomic(a.mul(b)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        let inv = other.inv()?;
        self.try_mul(&inv)
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(a) if !a.is_zero() => Ok(Scalar::Rational(a.recip())),
            Scalar::RatFun(a) => a.inv().map(Scalar::RatFun).ok_or(ScalarError::DivisionByZero),
            Scalar::Cyclotomic(a) => a.inv().map(Scalar::Cyclotomic).ok_or(ScalarError::DivisionByZero),
            _ => Err(ScalarError::DivisionByZero),
        }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> Result<Scalar, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.ctx().one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Serializes into the JSON schema: rationals as `"p/q"` strings,
    /// rational functions as `{"num": [...], "den": [...]}` in powers of `s`,
    /// cyclotomic elements as `{"mod_index": n, "coeffs": [...]}`.
    pub fn to_json(&self) -> Value {
        match self {
            Scalar::Rational(r) => json!(rational_string(r)),
            Scalar::RatFun(f) => {
                let (num, den) = f.to_polys();
                json!({
                    "num": num.iter().map(int_json).collect::<Vec<_>>(),
                    "den": den.iter().map(int_json).collect::<Vec<_>>(),
                })
            }
            Scalar::Cyclotomic(c) => json!({
                "mod_index": c.modulus().index(),
                "coeffs": c.coeffs().iter().map(rational_string).collect::<Vec<_>>(),
            }),
        }
    }

    /// Rational value when the scalar is a constant of its field.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::RatFun(f) => {
                if f.is_zero() {
                    return Some(BigRational::zero());
                }
                (f.shift() == 0 && f.numerator().len() == 1 && f.denominator().len() == 1)
                    .then(|| BigRational::new(f.numerator()[0].clone(), f.denominator()[0].clone()))
            }
            Scalar::Cyclotomic(c) => {
                c.coeffs()[1..].iter().all(|x| x.is_zero()).then(|| c.coeffs()[0].clone())
            }
        }
    }

    pub fn is_negative_constant(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_negative())
    }
}

fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::RatFun(r) => write!(f, "{r}"),
            Scalar::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$try(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::RatFun(r) => Scalar::RatFun(r.neg()),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(c.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum() {
        let k = FieldCtx::Rational;
        assert_eq!(&k.ratio(1, 2) + &k.ratio(1, 3), k.ratio(5, 6));
    }

    #[test]
    fn lambda_times_q_is_q_minus_inverse() {
        let k = FieldCtx::RatFun;
        let lhs = &k.lambda().unwrap() * &k.q().unwrap();
        let rhs = &k.s_pow(2).unwrap() - &k.s_pow(-2).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cube_root_identities() {
        let k = FieldCtx::cyclotomic(3).unwrap();
        let q = k.q().unwrap();
        assert_eq!(&q * &k.q_pow(2).unwrap(), k.one());
        assert!((&(&k.one() + &q) + &k.q_pow(2).unwrap()).is_zero());
    }

    #[test]
    fn named_symbols() {
        let k = FieldCtx::RatFun;
        assert_eq!(k.sym_int(2).unwrap(), &k.q().unwrap() + &k.q_pow(-1).unwrap());
        assert_eq!(k.q_int(3).unwrap(), k.q_laurent(0, &[1, 1, 1]).unwrap());
        assert_eq!(k.lambda().unwrap(), k.q_laurent(-2, &[-1, 0, 1]).unwrap());
        // (3/2)_q = (s^4 + s^2 + 1)/(s^3 + s).
        let half = k.sym_half(3).unwrap();
        let num = k.q_laurent(0, &[1, 1, 1]).unwrap();
        let den = &k.s_pow(3).unwrap() + &k.s_pow(1).unwrap();
        assert_eq!(half, num.try_div(&den).unwrap());
    }

    #[test]
    fn q_symbols_need_q() {
        assert!(matches!(FieldCtx::Rational.lambda(), Err(ScalarError::UnsupportedField { .. })));
    }

    #[test]
    fn mixing_fields_is_an_error() {
        let a = FieldCtx::Rational.one();
        let b = FieldCtx::RatFun.one();
        assert!(matches!(a.try_add(&b), Err(ScalarError::FieldMismatch(..))));
        let c3 = FieldCtx::cyclotomic(3).unwrap().one();
        let c5 = FieldCtx::cyclotomic(5).unwrap().one();
        assert!(c3.try_mul(&c5).is_err());
    }

    #[test]
    fn division_by_zero() {
        for k in [FieldCtx::Rational, FieldCtx::RatFun, FieldCtx::cyclotomic(4).unwrap()] {
            assert_eq!(k.one().try_div(&k.zero()), Err(ScalarError::DivisionByZero));
        }
    }

    #[test]
    fn json_roundtrip() {
        let k = FieldCtx::RatFun;
        let x = k.lambda().unwrap().try_div(&k.sym_int(2).unwrap()).unwrap();
        assert_eq!(k.parse_json(&x.to_json()).unwrap(), x);
        let c = FieldCtx::cyclotomic(3).unwrap();
        let y = &c.q().unwrap() + &c.ratio(1, 2);
        assert_eq!(c.parse_json(&y.to_json()).unwrap(), y);
        assert_eq!(FieldCtx::Rational.int(-3).to_json(), json!("-3/1"));
    }

    #[test]
    fn field_names_parse() {
        assert_eq!("cyclotomic:3".parse::<FieldCtx>().unwrap(), FieldCtx::cyclotomic(3).unwrap());
        assert!("cyclotomic:x".parse::<FieldCtx>().is_err());
    }
}
