//! Exact scalars: rationals, cyclotomic fields `Q(ζ_n)` and rational functions `Q(q)`.
//!
//! Every computation runs over a single [`FieldTag`]. Rationals coerce into any
//! field; no other mixing is allowed. The arithmetic operators on [`Scalar`]
//! panic on a field mismatch or division by zero, while the `try_*` methods
//! report those as [`ScalarError`]. Loaders coerce all input to one field up
//! front, so the operators are safe inside the library.

mod cyclotomic;
mod parse;
mod poly;
mod ratfun;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use cyclotomic::{cyclotomic_poly, euler_phi, Cyclotomic};
pub use parse::parse_scalar;
pub use poly::Poly;
pub use ratfun::RatFun;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldTag, FieldTag),
    #[error("parse error at column {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown field tag {0:?}")]
    UnknownField(String),
}

/// Which exact field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rational,
    Cyclotomic(u32),
    RationalFunction,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "rational"),
            FieldTag::Cyclotomic(n) => write!(f, "cyclotomic({n})"),
            FieldTag::RationalFunction => write!(f, "rational_function"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t {
            "rational" => return Ok(FieldTag::Rational),
            "rational_function" => return Ok(FieldTag::RationalFunction),
            _ => {}
        }
        t.strip_prefix("cyclotomic(")
            .and_then(|rest| rest.strip_suffix(')'))
            .and_then(|n| n.trim().parse::<u32>().ok())
            .filter(|&n| n >= 1)
            .map(FieldTag::Cyclotomic)
            .ok_or_else(|| ScalarError::UnknownField(s.to_string()))
    }
}

/// An element of one of the three exact fields.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(Rational),
    Cyclotomic(Cyclotomic),
    RatFun(RatFun),
}

impl Scalar {
    pub fn zero(field: FieldTag) -> Scalar {
        Scalar::from_rational(field, Rational::zero())
    }

    pub fn one(field: FieldTag) -> Scalar {
        Scalar::from_rational(field, Rational::one())
    }

    pub fn from_int(field: FieldTag, n: i64) -> Scalar {
        Scalar::from_rational(field, Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(field: FieldTag, num: i64, den: i64) -> Scalar {
        Scalar::from_rational(
            field,
            Rational::new(BigInt::from(num), BigInt::from(den)),
        )
    }

    pub fn from_rational(field: FieldTag, r: Rational) -> Scalar {
        match field {
            FieldTag::Rational => Scalar::Rational(r),
            FieldTag::Cyclotomic(n) => Scalar::Cyclotomic(Cyclotomic::from_rational(n, r)),
            FieldTag::RationalFunction => Scalar::RatFun(RatFun::from_rational(r)),
        }
    }

    /// `ζ_n` in `Q(ζ_n)`.
    pub fn zeta(order: u32) -> Scalar {
        Scalar::Cyclotomic(Cyclotomic::zeta(order))
    }

    /// `q^k` in `Q(q)`.
    pub fn q_pow(k: i64) -> Scalar {
        Scalar::RatFun(RatFun::q_pow(k))
    }

    pub fn field(&self) -> FieldTag {
        match self {
            Scalar::Rational(_) => FieldTag::Rational,
            Scalar::Cyclotomic(c) => FieldTag::Cyclotomic(c.order()),
            Scalar::RatFun(_) => FieldTag::RationalFunction,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Cyclotomic(c) => c.is_zero(),
            Scalar::RatFun(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// The value as a rational number, if it lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Cyclotomic(c) => c.as_rational(),
            Scalar::RatFun(f) => f.as_rational(),
        }
    }

    /// The value as a machine integer, if it is one.
    pub fn as_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        self.as_rational()
            .filter(|r| r.is_integer())
            .and_then(|r| r.to_integer().to_i64())
    }

    /// Moves the value into `field`. Only rationals may change field.
    pub fn coerce(&self, field: FieldTag) -> Result<Scalar, ScalarError> {
        let own = self.field();
        if own == field {
            return Ok(self.clone());
        }
        match self {
            Scalar::Rational(r) => Ok(Scalar::from_rational(field, r.clone())),
            _ => Err(ScalarError::FieldMismatch(own, field)),
        }
    }

    fn common_field(&self, other: &Scalar) -> Result<FieldTag, ScalarError> {
        let (a, b) = (self.field(), other.field());
        match (a, b) {
            _ if a == b => Ok(a),
            (FieldTag::Rational, _) => Ok(b),
            (_, FieldTag::Rational) => Ok(a),
            _ => Err(ScalarError::FieldMismatch(a, b)),
        }
    }

    fn align(&self, other: &Scalar) -> Result<(Scalar, Scalar), ScalarError> {
        let f = self.common_field(other)?;
        Ok((self.coerce(f)?, other.coerce(f)?))
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, other) {
            return Ok(Scalar::Rational(a + b));
        }
        Ok(match self.align(other)? {
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.add(&b)),
            (Scalar::RatFun(a), Scalar::RatFun(b)) => Scalar::RatFun(a.add(&b)),
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => unreachable!("aligned scalars share a field"),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => return Ok(Scalar::Rational(a * b)),
            (Scalar::Rational(a), Scalar::Cyclotomic(c))
            | (Scalar::Cyclotomic(c), Scalar::Rational(a)) => {
                return Ok(Scalar::Cyclotomic(c.scale(a)))
            }
            (Scalar::Rational(a), Scalar::RatFun(f)) | (Scalar::RatFun(f), Scalar::Rational(a)) => {
                return Ok(Scalar::RatFun(f.scale(a)))
            }
            _ => {}
        }
        Ok(match self.align(other)? {
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.mul(&b)),
            (Scalar::RatFun(a), Scalar::RatFun(b)) => Scalar::RatFun(a.mul(&b)),
            _ => unreachable!("aligned scalars share a field"),
        })
    }

    pub fn try_inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(r) if r.is_zero() => Err(ScalarError::DivisionByZero),
            Scalar::Rational(r) => Ok(Scalar::Rational(r.recip())),
            Scalar::Cyclotomic(c) => c
                .inv()
                .map(Scalar::Cyclotomic)
                .ok_or(ScalarError::DivisionByZero),
            Scalar::RatFun(f) => f.inv().map(Scalar::RatFun).ok_or(ScalarError::DivisionByZero),
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.common_field(other)?;
        self.try_mul(&other.try_inv()?)
    }

    /// Exact equality, with rationals promoted. Scalars from incompatible fields are unequal.
    pub fn try_eq(&self, other: &Scalar) -> Result<bool, ScalarError> {
        let (a, b) = self.align(other)?;
        Ok(match (&a, &b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => x == y,
            (Scalar::Cyclotomic(x), Scalar::Cyclotomic(y)) => x == y,
            (Scalar::RatFun(x), Scalar::RatFun(y)) => x == y,
            _ => false,
        })
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(c.neg()),
            Scalar::RatFun(f) => Scalar::RatFun(f.neg()),
        }
    }

    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { self.try_inv()? } else { self.clone() };
        let mut acc = Scalar::one(self.field());
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&b)?;
            }
            k >>= 1;
            if k > 0 {
                b = b.try_mul(&b)?;
            }
        }
        Ok(acc)
    }

    /// Deterministic text that parses back to the same value under the scalar grammar.
    pub fn to_canonical_string(&self) -> String {
        match self {
            Scalar::Rational(r) => r.to_string(),
            Scalar::Cyclotomic(c) => c.canonical_string(),
            Scalar::RatFun(f) => f.canonical_string(),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.try_eq(other).unwrap_or(false)
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.$try(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("scalar {}: {e}", stringify!($method)),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);
scalar_binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

/// Sum of an iterator of scalars in `field`.
pub fn sum<'a>(field: FieldTag, items: impl IntoIterator<Item = &'a Scalar>) -> Scalar {
    items
        .into_iter()
        .fold(Scalar::zero(field), |acc, x| &acc + x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(FieldTag::Rational, n, d)
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&rat(1, 2) + &rat(1, 3), rat(5, 6));
        assert_eq!(rat(4, -2).to_canonical_string(), "-2");
    }

    #[test]
    fn i_squared() {
        let i = Scalar::zeta(4);
        assert_eq!(&i * &i, Scalar::from_int(FieldTag::Cyclotomic(4), -1));
        assert_eq!(i.to_canonical_string(), "z");
    }

    #[test]
    fn ratfun_division_cancels() {
        let q = Scalar::q_pow(1);
        let one = Scalar::one(FieldTag::RationalFunction);
        let a = &(&q * &q) - &one;
        let b = &q - &one;
        assert_eq!(&a / &b, &q + &one);
        assert_eq!((&q + &one).to_canonical_string(), "q + 1");
    }

    #[test]
    fn mismatch_and_zero_division() {
        let i = Scalar::zeta(4);
        let w = Scalar::zeta(3);
        assert!(matches!(i.try_add(&w), Err(ScalarError::FieldMismatch(..))));
        assert!(matches!(
            i.try_add(&Scalar::q_pow(1)),
            Err(ScalarError::FieldMismatch(..))
        ));
        assert_eq!(rat(1, 1).try_div(&rat(0, 1)), Err(ScalarError::DivisionByZero));
        // rationals promote
        assert_eq!(&i + &rat(1, 1), Scalar::zeta(4) + Scalar::from_int(FieldTag::Cyclotomic(4), 1));
    }

    #[test]
    fn field_tag_round_trip() {
        for t in [FieldTag::Rational, FieldTag::Cyclotomic(12), FieldTag::RationalFunction] {
            assert_eq!(t.to_string().parse::<FieldTag>().unwrap(), t);
        }
        assert!("cyclotomic(0)".parse::<FieldTag>().is_err());
        assert!("reals".parse::<FieldTag>().is_err());
    }
}
