//! Truncated formal power series in `t` over an exact coefficient ring.
//!
//! A series of order `N` stores the coefficients of `t^0 .. t^N` and nothing
//! else; operations combine series of equal order and never invent
//! information above the truncation point. Sequence values follow the
//! exponential-generating-function convention: the n-th value of a family is
//! `n! * coeff(n)` of its generating series.

use crate::poly::{MultiPoly, Symbol};
use crate::rational::{factorial_rational, ExactRing, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("constant term is not a unit of the coefficient ring")]
    NonUnitConstant,
}

/// Raises a ring element to a nonnegative power by repeated multiplication.
pub fn ring_pow<R: ExactRing>(base: &R, e: u32) -> R {
    let mut acc = R::one();
    for _ in 0..e {
        acc = acc.mul(base);
    }
    acc
}

/// Power series truncated at a fixed order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<R: ExactRing> {
    coeffs: Vec<R>,
}

impl<R: ExactRing> TruncatedSeries<R> {
    /// Builds a series from the coefficients of `t^0 .. t^N`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant term"
        );
        TruncatedSeries { coeffs }
    }

    /// Builds a series of order `order` with `f(n)` as the n-th coefficient.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| R::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { R::one() } else { R::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n`. Panics above the truncation order.
    pub fn coeff(&self, n: usize) -> &R {
        assert!(
            n <= self.order(),
            "coefficient {n} requested beyond truncation order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    /// `n! * coeff(n)`: the n-th sequence value of an exponential
    /// generating function.
    pub fn coeff_as_sequence(&self, n: usize) -> R {
        self.coeff(n).mul(&R::from_rational(&factorial_rational(n)))
    }

    fn check_order(&self, rhs: &Self) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "series orders must match exactly"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_order(rhs);
        Self::from_fn(self.order(), |n| self.coeffs[n].add(&rhs.coeffs[n]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_order(rhs);
        Self::from_fn(self.order(), |n| self.coeffs[n].sub(&rhs.coeffs[n]))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order(), |n| self.coeffs[n].neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_fn(self.order(), |n| self.coeffs[n].mul(c))
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_order(rhs);
        let order = self.order();
        let mut coeffs = vec![R::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].mul(&rhs.coeffs[j]);
                coeffs[i + j] = coeffs[i + j].add(&prod);
            }
        }
        TruncatedSeries { coeffs }
    }

    /// k-th power by repeated multiplication; `pow(0)` is the series 1.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; requires the constant term to be a unit.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0_inv = self.coeffs[0]
            .inverse()
            .ok_or(SeriesError::NonUnitConstant)?;
        let order = self.order();
        let mut out = vec![R::zero(); order + 1];
        out[0] = c0_inv.clone();
        for n in 1..=order {
            let mut acc = R::zero();
            for i in 1..=n {
                acc = acc.add(&self.coeffs[i].mul(&out[n - i]));
            }
            out[n] = acc.mul(&c0_inv).neg();
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Substitution `t -> c*t`.
    pub fn rescale(&self, c: &R) -> Self {
        Self::from_fn(self.order(), |n| self.coeffs[n].mul(&ring_pow(c, n as u32)))
    }

    /// Multiplication by `t^m` at fixed order; the top `m` coefficients fall
    /// off the truncation.
    pub fn shift_up(&self, m: usize) -> Self {
        Self::from_fn(self.order(), |n| {
            if n < m {
                R::zero()
            } else {
                self.coeffs[n - m].clone()
            }
        })
    }

    /// Maps every coefficient through `f`, preserving the order.
    pub fn map<S: ExactRing>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `log(1 + t)`: coefficients 0, 1, -1/2, 1/3, ...
    pub fn log1p(order: usize) -> Self {
        Self::from_fn(order, |n| {
            if n == 0 {
                R::zero()
            } else {
                let c = Rational::new(if n % 2 == 0 { -1 } else { 1 }, n as i64).unwrap();
                R::from_rational(&c)
            }
        })
    }

    /// `log(1 + t) / t`: coefficients (-1)^n / (n + 1).
    pub fn log1p_over_t(order: usize) -> Self {
        Self::from_fn(order, |n| {
            let c = Rational::new(if n % 2 == 0 { 1 } else { -1 }, n as i64 + 1).unwrap();
            R::from_rational(&c)
        })
    }

    /// `exp(c*t) - 1` for a ring element `c`.
    pub fn expm1(c: &R, order: usize) -> Self {
        let mut out = Self::exp(c, order);
        out.coeffs[0] = R::zero();
        out
    }

    /// `exp(c*t)` for a ring element `c`: coefficients `c^n / n!`.
    pub fn exp(c: &R, order: usize) -> Self {
        Self::from_fn(order, |n| {
            let inv_fact = factorial_rational(n)
                .inverse()
                .expect("factorial is nonzero");
            ring_pow(c, n as u32).mul(&R::from_rational(&inv_fact))
        })
    }

    /// `(exp(t) - 1) / t`: coefficients 1 / (n + 1)!.
    pub fn expm1_over_t(order: usize) -> Self {
        Self::from_fn(order, |n| {
            let inv = factorial_rational(n + 1)
                .inverse()
                .expect("factorial is nonzero");
            R::from_rational(&inv)
        })
    }
}

impl TruncatedSeries<MultiPoly> {
    /// `(1 + t)^u` for a polynomial exponent: coefficient of `t^i` is the
    /// generalized binomial `C(u, i)`.
    pub fn binomial_pow(exponent: &MultiPoly, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(MultiPoly::one());
        for i in 1..=order {
            let step = exponent
                .sub(&MultiPoly::integer(i as i64 - 1))
                .scale(&Rational::new(1, i as i64).unwrap());
            let next = coeffs[i - 1].mul(&step);
            coeffs.push(next);
        }
        TruncatedSeries { coeffs }
    }

    /// `((1 + t)^u - 1) / (u t)` for a polynomial exponent `u`: coefficient
    /// of `t^i` is `C(u, i+1)/u`, the exact polynomial
    /// `(u-1)(u-2)···(u-i) / (i+1)!`.
    ///
    /// The constant term is 1, so the series is invertible; this is how
    /// `(1+t)^λ - 1` denominators are divided out without ever forming a
    /// non-unit series.
    pub fn binomial_shifted(exponent: &MultiPoly, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(MultiPoly::one());
        for i in 1..=order {
            let step = exponent
                .sub(&MultiPoly::integer(i as i64))
                .scale(&Rational::new(1, i as i64 + 1).unwrap());
            let next = coeffs[i - 1].mul(&step);
            coeffs.push(next);
        }
        TruncatedSeries { coeffs }
    }

    /// Binds symbols in every coefficient.
    pub fn eval(&self, bindings: &[(Symbol, Rational)]) -> Self {
        self.map(|c| c.eval(bindings))
    }
}
