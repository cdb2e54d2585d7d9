//! Arbitrary-precision rational scalars and the exact-ring contract shared by
//! every coefficient type in this crate.
//!
//! All arithmetic is exact: values are fractions of big integers kept in
//! canonical form (gcd(|p|, q) = 1, q >= 1, zero stored as 0/1). There is no
//! floating point anywhere in the crate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors produced by scalar construction and exponentiation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero cannot be raised to a negative power")]
    NegativePowerOfZero,
    #[error("malformed rational literal `{0}`")]
    ParseRational(String),
}

/// Commutative ring with exact equality, used as the coefficient bound for
/// truncated power series.
///
/// `inverse` reports the multiplicative inverse when the element is a unit of
/// the ring and `None` otherwise; callers that require division check the
/// option instead of assuming a field.
pub trait ExactRing: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    /// Embeds a rational scalar into the ring.
    fn from_rational(r: &Rational) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
}

/// Exact rational number in canonical reduced form.
///
/// The denominator is always positive and the fraction fully reduced; two
/// values are equal exactly when their canonical forms coincide, so `==` is
/// bit-exact mathematical equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom` in canonical form. Fails on a zero denominator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, ExactError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Builds the integer `n/1`.
    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// Shorthand for small literals; panics on q = 0.
    pub fn of(p: i64, q: i64) -> Self {
        Rational::new(p, q).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.denom().is_one()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Integer exponentiation. Negative exponents invert; `0^e` with `e < 0`
    /// is a domain error, and `x^0 = 1` including `0^0`.
    pub fn pow(&self, exp: i64) -> Result<Self, ExactError> {
        if exp == 0 {
            return Ok(Rational::one());
        }
        if self.is_zero() && exp < 0 {
            return Err(ExactError::NegativePowerOfZero);
        }
        let mag = exp.unsigned_abs() as u32;
        let p = self.0.pow(mag as i32);
        Ok(Rational(if exp < 0 { p.recip() } else { p }))
    }
}

impl ExactRing for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-self.0.clone())
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }

        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0.clone())
    }
}

impl fmt::Display for Rational {
    /// Canonical text form: `p/q`, or just `p` when the value is an integer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    /// Parses `p` or `p/q` with an optional leading minus sign.
    fn from_str(s: &str) -> Result<Self, ExactError> {
        let t = s.trim();
        let bad = || ExactError::ParseRational(s.to_string());
        let (numer, denom) = match t.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (t, None),
        };
        let n: BigInt = numer.parse().map_err(|_| bad())?;
        let d: BigInt = match denom {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// `n!` as a rational scalar.
pub fn factorial_rational(n: usize) -> Rational {
    Rational::integer(factorial(n))
}

/// Binomial coefficient C(n, k) for integer n, k as a rational scalar.
pub fn binomial_integer(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den).expect("positive denominator")
}
