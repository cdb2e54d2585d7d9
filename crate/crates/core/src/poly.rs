//! Sparse multivariate polynomials over exact rationals.
//!
//! The symbol alphabet is fixed to {x, λ, ξ, z}: `x` is the polynomial
//! argument, `λ` and `ξ` are family parameters, and `z` is a spare symbol for
//! substitution identities. Terms are keyed by exponent vectors; zero
//! coefficients are never stored, so structural equality is mathematical
//! equality. Display and iteration follow one canonical order: descending
//! total degree, ties broken lexicographically on the exponent vector.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::rational::{factorial_rational, ExactRing, Rational};

/// Polynomial symbols, in canonical exponent-vector order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    X,
    Lambda,
    Xi,
    Z,
}

impl Symbol {
    pub const ALL: [Symbol; 4] = [Symbol::X, Symbol::Lambda, Symbol::Xi, Symbol::Z];

    pub fn index(self) -> usize {
        match self {
            Symbol::X => 0,
            Symbol::Lambda => 1,
            Symbol::Xi => 2,
            Symbol::Z => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::X => "x",
            Symbol::Lambda => "λ",
            Symbol::Xi => "ξ",
            Symbol::Z => "z",
        }
    }

    /// Accepts both the Unicode names and ASCII aliases (`lambda`, `xi`).
    pub fn from_name(name: &str) -> Option<Symbol> {
        match name {
            "x" => Some(Symbol::X),
            "λ" | "lambda" => Some(Symbol::Lambda),
            "ξ" | "xi" => Some(Symbol::Xi),
            "z" => Some(Symbol::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector of one term, ordered by total degree then lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.total_degree(), self.0).cmp(&(other.total_degree(), other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("homogenization requires a polynomial in x only")]
    NotUnivariateInX,
    #[error("degree {degree} exceeds homogenization order {order}")]
    DegreeExceedsOrder { degree: u32, order: u32 },
    #[error("polynomial is not divisible by {0}^{1}")]
    NotDivisible(Symbol, u32),
    #[error("malformed polynomial literal `{literal}`: {reason}")]
    Parse { literal: String, reason: String },
}

/// Sparse multivariate polynomial with `Rational` coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn integer(n: i64) -> Self {
        MultiPoly::constant(Rational::integer(n))
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut exps = [0u32; 4];
        exps[s.index()] = 1;
        MultiPoly::term(Rational::one(), exps)
    }

    /// Single term `coef * x^e0 λ^e1 ξ^e2 z^e3`.
    pub fn term(coef: Rational, exps: [u32; 4]) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial(exps), coef);
        p
    }

    fn add_term(&mut self, mono: Monomial, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coef);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: [u32; 4]) -> Rational {
        self.terms
            .get(&Monomial(exps))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The value of a constant polynomial; `None` when any symbol occurs.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (mono, coef) = self.terms.iter().next().unwrap();
                mono.is_empty().then(|| coef.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, s: Symbol) -> u32 {
        self.terms.keys().map(|m| m.0[s.index()]).max().unwrap_or(0)
    }

    pub fn uses_symbol(&self, s: Symbol) -> bool {
        self.degree_in(s) > 0
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = MultiPoly::zero();
        for (mono, coef) in &self.terms {
            out.add_term(*mono, coef.mul(c));
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Binds some symbols to rational values, leaving the rest in place.
    pub fn eval(&self, bindings: &[(Symbol, Rational)]) -> Self {
        let mut out = MultiPoly::zero();
        'terms: for (mono, coef) in &self.terms {
            let mut exps = mono.0;
            let mut c = coef.clone();
            for (s, v) in bindings {
                let e = exps[s.index()];
                if e > 0 {
                    exps[s.index()] = 0;
                    if v.is_zero() {
                        continue 'terms;
                    }
                    c = c.mul(&v.pow(e as i64).expect("positive exponent"));
                }
            }
            out.add_term(Monomial(exps), c);
        }
        out
    }

    /// Substitutes a polynomial for every occurrence of one symbol.
    pub fn subst(&self, s: Symbol, replacement: &MultiPoly) -> Self {
        let max_e = self.degree_in(s);
        let mut powers = Vec::with_capacity(max_e as usize + 1);
        powers.push(MultiPoly::one());
        for _ in 0..max_e {
            let next = powers.last().unwrap().mul(replacement);
            powers.push(next);
        }
        let mut out = MultiPoly::zero();
        for (mono, coef) in &self.terms {
            let e = mono.0[s.index()];
            let mut rest = mono.0;
            rest[s.index()] = 0;
            let base = MultiPoly::term(coef.clone(), rest);
            out = out.add(&base.mul(&powers[e as usize]));
        }
        out
    }

    /// Homogenizes a polynomial in `x` to joint degree `m` using `λ`:
    /// each term `c·x^j` becomes `c·x^j·λ^(m-j)`, i.e. `λ^m · p(x/λ)`.
    pub fn homogenize(&self, m: u32) -> Result<Self, PolyError> {
        let deg = self.total_degree();
        if self
            .terms
            .keys()
            .any(|mono| mono.0[1] != 0 || mono.0[2] != 0 || mono.0[3] != 0)
        {
            return Err(PolyError::NotUnivariateInX);
        }
        if deg > m {
            return Err(PolyError::DegreeExceedsOrder {
                degree: deg,
                order: m,
            });
        }
        let mut out = MultiPoly::zero();
        for (mono, coef) in &self.terms {
            let j = mono.0[0];
            out.add_term(Monomial([j, m - j, 0, 0]), coef.clone());
        }
        Ok(out)
    }

    /// Exact division by `s^e`; fails unless every term carries the factor.
    pub fn divide_exact(&self, s: Symbol, e: u32) -> Result<Self, PolyError> {
        let mut out = MultiPoly::zero();
        for (mono, coef) in &self.terms {
            if mono.0[s.index()] < e {
                return Err(PolyError::NotDivisible(s, e));
            }
            let mut exps = mono.0;
            exps[s.index()] -= e;
            out.add_term(Monomial(exps), coef.clone());
        }
        Ok(out)
    }
}

impl ExactRing for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }

    fn one() -> Self {
        MultiPoly::one()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (mono, coef) in &rhs.terms {
            out.add_term(*mono, coef.clone());
        }
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut exps = ma.0;
                for (i, e) in exps.iter_mut().enumerate() {
                    *e += mb.0[i];
                }
                out.add_term(Monomial(exps), ca.mul(cb));
            }
        }
        out
    }

    fn neg(&self) -> Self {
        let mut out = MultiPoly::zero();
        for (mono, coef) in &self.terms {
            out.add_term(*mono, ExactRing::neg(coef));
        }
        out
    }

    /// Units are exactly the nonzero constants.
    fn inverse(&self) -> Option<Self> {
        let c = self.constant_value()?;
        ExactRing::inverse(&c).map(MultiPoly::constant)
    }

    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }

    fn from_rational(r: &Rational) -> Self {
        MultiPoly::constant(r.clone())
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $ring_method:ident) => {
        impl std::ops::$trait for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                ExactRing::$ring_method(self, rhs)
            }
        }
    };
}

poly_binop!(Add, add, add);
poly_binop!(Sub, sub, sub);
poly_binop!(Mul, mul, mul);

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        ExactRing::neg(self)
    }
}

/// `u(u-1)(u-2)···(u-n+1)` for a polynomial argument; the empty product is 1.
pub fn falling_factorial(u: &MultiPoly, n: usize) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for j in 0..n {
        let factor = u.sub(&MultiPoly::integer(j as i64));
        acc = acc.mul(&factor);
    }
    acc
}

/// Generalized binomial coefficient `C(u, n)` for a polynomial argument.
pub fn binomial_poly(u: &MultiPoly, n: usize) -> MultiPoly {
    let inv = ExactRing::inverse(&factorial_rational(n)).expect("factorial is nonzero");
    falling_factorial(u, n).scale(&inv)
}

/// `C(s, n)` for a single symbol argument.
pub fn binomial_symbol(s: Symbol, n: usize) -> MultiPoly {
    binomial_poly(&MultiPoly::symbol(s), n)
}

impl fmt::Display for MultiPoly {
    /// Canonical text form, e.g. `x^2 - x*λ - x + λ^2/6 + λ/2`.
    ///
    /// Terms are emitted in descending canonical order. Each term prints an
    /// integer coefficient (suppressed when ±1 next to symbols), `*`-joined
    /// symbol powers, and a trailing `/denominator` when the coefficient is
    /// not an integer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (mono, coef)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if coef.is_negative() {
                    f.write_str("-")?;
                }
            } else if coef.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let abs = coef.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.numer().is_one() || mono.is_empty() {
                factors.push(abs.numer().to_string());
            }
            for s in Symbol::ALL {
                let e = mono.0[s.index()];
                if e == 1 {
                    factors.push(s.name().to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", s.name(), e));
                }
            }
            f.write_str(&factors.join("*"))?;
            if !abs.is_integer() {
                write!(f, "/{}", abs.denom())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for MultiPoly {
    type Err = PolyError;

    /// Parses the canonical display grammar: terms joined by `+`/`-`, each a
    /// `*`-separated product of integers and symbol powers with optional
    /// integer divisors, e.g. `-x^3 + 3*x^2/2 + x/2 - 1/2`.
    fn from_str(s: &str) -> Result<Self, PolyError> {
        Parser::new(s).parse()
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            chars: src.chars().peekable(),
        }
    }

    fn fail(&self, reason: impl Into<String>) -> PolyError {
        PolyError::Parse {
            literal: self.src.to_string(),
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn read_uint(&mut self) -> Result<Rational, PolyError> {
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.chars.next().unwrap());
        }
        if digits.is_empty() {
            return Err(self.fail("expected an integer"));
        }
        digits
            .parse::<Rational>()
            .map_err(|e| self.fail(e.to_string()))
    }

    fn read_ident(&mut self) -> String {
        let mut ident = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_alphabetic()) {
            ident.push(self.chars.next().unwrap());
        }
        ident
    }

    fn parse(&mut self) -> Result<MultiPoly, PolyError> {
        let mut poly = MultiPoly::zero();
        self.skip_ws();
        if self.chars.peek().is_none() {
            return Err(self.fail("empty input"));
        }
        let mut sign = match self.chars.peek() {
            Some('-') => {
                self.chars.next();
                true
            }
            Some('+') => {
                self.chars.next();
                false
            }
            _ => false,
        };
        loop {
            let term = self.parse_term(sign)?;
            poly = poly.add(&term);
            self.skip_ws();
            match self.chars.next() {
                None => return Ok(poly),
                Some('+') => sign = false,
                Some('-') => sign = true,
                Some(c) => return Err(self.fail(format!("unexpected `{c}`"))),
            }
        }
    }

    fn parse_term(&mut self, negated: bool) -> Result<MultiPoly, PolyError> {
        let mut coef = if negated {
            ExactRing::neg(&Rational::one())
        } else {
            Rational::one()
        };
        let mut exps = [0u32; 4];
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coef = coef.mul(&self.read_uint()?);
                }
                Some(c) if c.is_alphabetic() => {
                    let ident = self.read_ident();
                    let sym = Symbol::from_name(&ident)
                        .ok_or_else(|| self.fail(format!("unknown symbol `{ident}`")))?;
                    let mut e = 1u32;
                    if matches!(self.chars.peek(), Some('^')) {
                        self.chars.next();
                        let p = self.read_uint()?;
                        if !p.is_integer() {
                            return Err(self.fail("exponent must be an integer"));
                        }
                        e = p
                            .numer()
                            .try_into()
                            .map_err(|_| self.fail("exponent out of range"))?;
                    }
                    exps[sym.index()] += e;
                }
                _ => return Err(self.fail("expected a factor")),
            }
            // Trailing `/d` divisors attach to the term; `*` demands another
            // factor; anything else ends the term.
            loop {
                self.skip_ws();
                match self.chars.peek() {
                    Some('*') => {
                        self.chars.next();
                        break;
                    }
                    Some('/') => {
                        self.chars.next();
                        self.skip_ws();
                        let d = self.read_uint()?;
                        if d.is_zero() {
                            return Err(self.fail("division by zero"));
                        }
                        coef = coef.mul(&ExactRing::inverse(&d).unwrap());
                    }
                    _ => return Ok(MultiPoly::term(coef, exps)),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn product_of_linears() {
        let x = MultiPoly::symbol(Symbol::X);
        let got = x.mul(&x.sub(&MultiPoly::one()));
        assert_eq!(got, p("x^2 - x"));
    }

    #[test]
    fn canonical_order_drops_cancelled_terms() {
        let a = p("x^2 + x*λ");
        let b = p("-x*λ + 1");
        let sum = a.add(&b);
        assert_eq!(sum.to_string(), "x^2 + 1");
        assert_eq!(sum.terms().count(), 2);
    }

    #[test]
    fn display_orders_by_total_degree_then_lex() {
        // All degree-2 monomials in x, λ precede the degree-1 tail.
        let q = p("λ/2 + λ^2/6 - x - x*λ + x^2");
        assert_eq!(q.to_string(), "x^2 - x*λ + λ^2/6 - x + λ/2");
    }

    #[test]
    fn eval_binds_some_symbols() {
        let entry = p("x - λ/2");
        let at1 = entry.eval(&[(Symbol::Lambda, Rational::one())]);
        assert_eq!(at1, p("x - 1/2"));
        let daehee = p("x^2 - 3*x + 11/6");
        let value = daehee.eval(&[(Symbol::X, Rational::zero())]);
        assert_eq!(value.constant_value().unwrap(), Rational::of(11, 6));
    }

    #[test]
    fn eval_of_product_commutes_with_product_of_evals() {
        let a = p("x^2 - x*ξ + z");
        let b = p("λ*x + 2");
        let bind = [
            (Symbol::X, Rational::of(3, 2)),
            (Symbol::Xi, Rational::of(-1, 3)),
        ];
        assert_eq!(a.mul(&b).eval(&bind), a.eval(&bind).mul(&b.eval(&bind)));
    }

    #[test]
    fn subst_replaces_symbol_by_polynomial() {
        let q = p("x^2 - x");
        let shifted = q.subst(Symbol::X, &p("z + 1"));
        assert_eq!(shifted, p("z^2 + z"));
        let renamed = p("x^2 + 2*x").subst(Symbol::X, &MultiPoly::symbol(Symbol::Z));
        assert_eq!(renamed, p("z^2 + 2*z"));
    }

    #[test]
    fn binomial_of_lambda_two_and_three() {
        assert_eq!(binomial_symbol(Symbol::Lambda, 2), p("λ^2/2 - λ/2"));
        // Frozen from the hand expansion of λ(λ-1)(λ-2)/6.
        assert_eq!(binomial_symbol(Symbol::Lambda, 3), p("λ^3/6 - λ^2/2 + λ/3"));
        // Independent route: build the same product one factor at a time.
        let l = MultiPoly::symbol(Symbol::Lambda);
        let product = l
            .mul(&l.sub(&MultiPoly::integer(1)))
            .mul(&l.sub(&MultiPoly::integer(2)));
        assert_eq!(
            binomial_symbol(Symbol::Lambda, 3),
            product.scale(&Rational::of(1, 6))
        );
    }

    #[test]
    fn binomial_at_integer_argument_matches_integer_binomials() {
        use crate::rational::binomial_integer;
        for m in 0..=12i64 {
            for n in 0..=12usize {
                let val = binomial_symbol(Symbol::Lambda, n)
                    .eval(&[(Symbol::Lambda, Rational::integer(m))]);
                assert_eq!(
                    val.constant_value().unwrap(),
                    binomial_integer(m as usize, n),
                    "C({m},{n})"
                );
            }
        }
    }

    #[test]
    fn falling_factorial_expansion() {
        let x = MultiPoly::symbol(Symbol::X);
        assert_eq!(falling_factorial(&x, 0), MultiPoly::one());
        assert_eq!(falling_factorial(&x, 4), p("x^4 - 6*x^3 + 11*x^2 - 6*x"));
    }

    #[test]
    fn homogenize_matches_lambda_scaling() {
        // λ^2 · p(x/λ) for p = x^2 - x + 1/6.
        let b2 = p("x^2 - x + 1/6");
        assert_eq!(b2.homogenize(2).unwrap(), p("x^2 - x*λ + λ^2/6"));
        // A constant picks up the full λ power.
        assert_eq!(MultiPoly::one().homogenize(3).unwrap(), p("λ^3"));
        // Setting λ := 1 recovers the original.
        let h = b2.homogenize(5).unwrap();
        assert_eq!(h.eval(&[(Symbol::Lambda, Rational::one())]), b2);
    }

    #[test]
    fn homogenize_rejects_bad_inputs() {
        assert_eq!(
            p("x^3").homogenize(2),
            Err(PolyError::DegreeExceedsOrder {
                degree: 3,
                order: 2
            })
        );
        assert_eq!(p("x*λ").homogenize(4), Err(PolyError::NotUnivariateInX));
    }

    #[test]
    fn exact_division_by_symbol_power() {
        let twisted = p("x^2*ξ^2 - x*ξ^2");
        assert_eq!(twisted.divide_exact(Symbol::Xi, 2).unwrap(), p("x^2 - x"));
        assert_eq!(
            p("x*ξ + 1").divide_exact(Symbol::Xi, 1),
            Err(PolyError::NotDivisible(Symbol::Xi, 1))
        );
    }

    #[test]
    fn ring_inverse_exists_only_for_nonzero_constants() {
        assert_eq!(
            ExactRing::inverse(&MultiPoly::constant(Rational::of(2, 3))),
            Some(MultiPoly::constant(Rational::of(3, 2)))
        );
        assert_eq!(ExactRing::inverse(&MultiPoly::symbol(Symbol::X)), None);
        assert_eq!(ExactRing::inverse(&MultiPoly::zero()), None);
    }

    #[test]
    fn parse_round_trips_canonical_forms() {
        for s in [
            "0",
            "1",
            "-45/4",
            "x - λ/2",
            "x^2 - x*λ - x + λ^2/6 + λ/2",
            "-x^3 + 3*x^2/2 + x/2 - 1/2",
            "11*x/6",
            "2*λ^2 - 3*x*λ + 3*λ/2 + x^2 - x",
            "x*ξ - λ*ξ/2",
        ] {
            let q: MultiPoly = s.parse().unwrap();
            let rendered = q.to_string();
            assert_eq!(rendered.parse::<MultiPoly>().unwrap(), q, "from `{s}`");
        }
        // ASCII aliases are accepted on input.
        assert_eq!(p("lambda^2/6"), p("λ^2/6"));
        assert_eq!(p("xi*x"), p("x*ξ"));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for s in ["", "x +", "x^", "y + 1", "1/0", "x ^ 1/2", "3**x"] {
            assert!(s.parse::<MultiPoly>().is_err(), "`{s}` should fail");
        }
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(
            (-20i64..=20, 1i64..=6, prop::array::uniform4(0u32..=2u32)),
            0..5,
        )
        .prop_map(|terms| {
            let mut acc = MultiPoly::zero();
            for (num, den, exps) in terms {
                acc = acc.add(&MultiPoly::term(Rational::of(num, den), exps));
            }
            acc
        })
    }

    fn arb_binding() -> impl Strategy<Value = Vec<(Symbol, Rational)>> {
        prop::array::uniform4((-6i64..=6, 1i64..=4)).prop_map(|vals| {
            Symbol::ALL
                .iter()
                .zip(vals)
                .map(|(s, (n, d))| (*s, Rational::of(n, d)))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn mul_commutes_and_eval_is_a_homomorphism(
            a in arb_poly(),
            b in arb_poly(),
            bind in arb_binding()
        ) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            let lhs = a.mul(&b).eval(&bind).constant_value().unwrap();
            let rhs = a.eval(&bind).constant_value().unwrap()
                .mul(&b.eval(&bind).constant_value().unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn display_parse_round_trip(a in arb_poly()) {
            let rendered = a.to_string();
            prop_assert_eq!(rendered.parse::<MultiPoly>().unwrap(), a);
        }
    }
}
