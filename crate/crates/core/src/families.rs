//! The sequence families: higher-order Bernoulli, first- and second-kind
//! Daehee, Nörlund, λ-Daehee, and twisted λ-Daehee numbers and polynomials,
//! plus a twisted Bernoulli kernel.
//!
//! Every family can be built two ways: by extracting coefficients from its
//! generating function ([`table_series`]) and by a structurally different
//! Stirling/Pascal matrix route ([`table_stirling`]). The verification
//! suites insist the two agree entry for entry, so neither route is ever
//! trusted alone.

use thiserror::Error;

use crate::matrix::{mat_apply, MatrixKind, SequenceTable, TriMatrix};
use crate::poly::{binomial_symbol, MultiPoly, Symbol};
use crate::rational::{binomial_integer, factorial_rational, ExactRing, Rational};
use crate::series::TruncatedSeries;
use crate::stirling::stirling_first;

type PSeries = TruncatedSeries<MultiPoly>;
type QSeries = TruncatedSeries<Rational>;

/// The supported families, in the order the command line lists them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Bernoulli,
    Daehee1,
    Daehee2,
    Norlund,
    LambdaDaehee1,
    LambdaDaehee2,
    TwistedDaehee1,
    TwistedDaehee2,
    TwistedBernoulli,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Bernoulli,
        Family::Daehee1,
        Family::Daehee2,
        Family::Norlund,
        Family::LambdaDaehee1,
        Family::LambdaDaehee2,
        Family::TwistedDaehee1,
        Family::TwistedDaehee2,
        Family::TwistedBernoulli,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::Daehee1 => "daehee1",
            Family::Daehee2 => "daehee2",
            Family::Norlund => "norlund",
            Family::LambdaDaehee1 => "lambda-daehee1",
            Family::LambdaDaehee2 => "lambda-daehee2",
            Family::TwistedDaehee1 => "twisted-daehee1",
            Family::TwistedDaehee2 => "twisted-daehee2",
            Family::TwistedBernoulli => "twisted-bernoulli",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name() == name)
    }

    /// Whether the family's kernel involves the deformation parameter λ.
    pub fn uses_lambda(&self) -> bool {
        matches!(
            self,
            Family::LambdaDaehee1
                | Family::LambdaDaehee2
                | Family::TwistedDaehee1
                | Family::TwistedDaehee2
        )
    }

    /// Whether the family's kernel involves the twist parameter ξ.
    pub fn uses_xi(&self) -> bool {
        matches!(
            self,
            Family::TwistedDaehee1 | Family::TwistedDaehee2 | Family::TwistedBernoulli
        )
    }
}

/// How a parameter enters a table: left as a symbol or pinned to a rational.
#[derive(Clone, Debug, PartialEq)]
pub enum Binding {
    Symbolic,
    Value(Rational),
}

impl Binding {
    pub fn zero() -> Binding {
        Binding::Value(Rational::integer(0))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Binding::Value(v) if v.is_zero())
    }

    pub fn to_poly(&self, sym: Symbol) -> MultiPoly {
        match self {
            Binding::Symbolic => MultiPoly::symbol(sym),
            Binding::Value(v) => MultiPoly::constant(v.clone()),
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum FamilyError {
    #[error("family `{0}` takes a λ parameter; none was supplied")]
    MissingLambda(&'static str),
    #[error("family `{0}` takes a ξ parameter; none was supplied")]
    MissingXi(&'static str),
    #[error("family `{0}` does not take a λ parameter")]
    UnexpectedLambda(&'static str),
    #[error("family `{0}` does not take a ξ parameter")]
    UnexpectedXi(&'static str),
    #[error("family `{0}` is a numbers-only family; x must stay 0")]
    NumbersOnly(&'static str),
    #[error("the twisted Bernoulli kernel needs ξ bound to a rational value")]
    XiMustBeBound,
    #[error("ξ^λ = 1 leaves the twisted Bernoulli kernel with a zero constant term")]
    XiNotInvertible,
    #[error("ξ = 0 makes the ξ^(-n) twist factors undefined")]
    ZeroTwist,
}

/// A fully specified table request: which family, how many columns, and how
/// each parameter is bound. `x = 0` selects the number triangle; a symbolic
/// or nonzero `x` selects polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub k_max: usize,
    pub x: Binding,
    pub lambda: Option<Binding>,
    pub xi: Option<Binding>,
}

impl FamilySpec {
    /// Number triangle: `x = 0`, any deformation parameters left symbolic.
    /// (The twisted Bernoulli family still needs `with_xi` afterwards.)
    pub fn numbers(family: Family, k_max: usize) -> FamilySpec {
        FamilySpec {
            family,
            k_max,
            x: Binding::zero(),
            lambda: family.uses_lambda().then_some(Binding::Symbolic),
            xi: family.uses_xi().then_some(Binding::Symbolic),
        }
    }

    /// Polynomial table with every parameter symbolic.
    pub fn symbolic(family: Family, k_max: usize) -> FamilySpec {
        FamilySpec {
            x: Binding::Symbolic,
            ..FamilySpec::numbers(family, k_max)
        }
    }

    pub fn with_x(mut self, x: Binding) -> FamilySpec {
        self.x = x;
        self
    }

    pub fn with_lambda(mut self, lambda: Binding) -> FamilySpec {
        self.lambda = Some(lambda);
        self
    }

    pub fn with_xi(mut self, xi: Binding) -> FamilySpec {
        self.xi = Some(xi);
        self
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let name = self.family.name();
        if self.family.uses_lambda() && self.lambda.is_none() {
            return Err(FamilyError::MissingLambda(name));
        }
        if !self.family.uses_lambda() && self.lambda.is_some() {
            return Err(FamilyError::UnexpectedLambda(name));
        }
        if self.family.uses_xi() && self.xi.is_none() {
            return Err(FamilyError::MissingXi(name));
        }
        if !self.family.uses_xi() && self.xi.is_some() {
            return Err(FamilyError::UnexpectedXi(name));
        }
        if self.family == Family::Norlund && !self.x.is_zero() {
            return Err(FamilyError::NumbersOnly(name));
        }
        if self.family == Family::TwistedBernoulli {
            match self.xi.as_ref().expect("checked above") {
                Binding::Symbolic => return Err(FamilyError::XiMustBeBound),
                Binding::Value(v) if *v == Rational::integer(1) => {
                    return Err(FamilyError::XiNotInvertible)
                }
                Binding::Value(_) => {}
            }
        }
        Ok(())
    }

    fn lambda_poly(&self) -> MultiPoly {
        self.lambda
            .as_ref()
            .expect("validated λ binding")
            .to_poly(Symbol::Lambda)
    }

    fn xi_poly(&self) -> MultiPoly {
        self.xi
            .as_ref()
            .expect("validated ξ binding")
            .to_poly(Symbol::Xi)
    }
}

/// Column-by-column coefficient extraction: column `k` reads off the series
/// `kernel^k * arg`, optionally rescaled by a twist (`t -> ξt`), as either
/// `n!`-scaled (exponential) or plain (ordinary) coefficients.
fn build_columns(
    kernel: &PSeries,
    arg: PSeries,
    n_max: usize,
    k_max: usize,
    exponential: bool,
    twist: Option<&MultiPoly>,
) -> Vec<Vec<MultiPoly>> {
    let mut cols: Vec<Vec<MultiPoly>> = Vec::with_capacity(k_max + 1);
    let mut acc = arg;
    for k in 0..=k_max {
        if k > 0 {
            acc = acc.mul(kernel);
        }
        let series = match twist {
            Some(xi) => acc.rescale(xi),
            None => acc.clone(),
        };
        cols.push(
            (0..=n_max)
                .map(|n| {
                    if exponential {
                        series.coeff_as_sequence(n)
                    } else {
                        series.coeff(n).clone()
                    }
                })
                .collect(),
        );
    }
    (0..=n_max)
        .map(|n| (0..=k_max).map(|k| cols[k][n].clone()).collect())
        .collect()
}

/// `λ log(1+t) / ((1+t)^λ - 1)` as a unit power series; the λ factors cancel
/// exactly, so a symbolic λ never needs a symbolic inverse.
fn lambda_kernel(lam: &MultiPoly, order: usize) -> PSeries {
    let shifted_inv = PSeries::binomial_shifted(lam, order)
        .inverse()
        .expect("constant term is 1");
    PSeries::log1p_over_t(order).mul(&shifted_inv)
}

fn bernoulli_kernel(order: usize) -> PSeries {
    PSeries::expm1_over_t(order)
        .inverse()
        .expect("constant term is 1")
}

/// The series route: each entry read straight off the family's generating
/// function, truncated at `order` (default `n_max + k_max + 2`).
pub fn table_series(spec: &FamilySpec, n_max: usize) -> Result<SequenceTable, FamilyError> {
    table_series_with_order(spec, n_max, n_max + spec.k_max + 2)
}

pub fn table_series_with_order(
    spec: &FamilySpec,
    n_max: usize,
    order: usize,
) -> Result<SequenceTable, FamilyError> {
    spec.validate()?;
    assert!(order >= n_max, "truncation order must reach n_max");
    let k_max = spec.k_max;
    let x_poly = spec.x.to_poly(Symbol::X);
    let entries = match spec.family {
        Family::Bernoulli => build_columns(
            &bernoulli_kernel(order),
            PSeries::exp(&x_poly, order),
            n_max,
            k_max,
            true,
            None,
        ),
        Family::Daehee1 => build_columns(
            &PSeries::log1p_over_t(order),
            PSeries::binomial_pow(&x_poly, order),
            n_max,
            k_max,
            true,
            None,
        ),
        Family::Daehee2 => {
            let minus_one = MultiPoly::integer(-1);
            let one_minus_t = PSeries::from_fn(order, |n| match n {
                0 => MultiPoly::one(),
                1 => MultiPoly::integer(-1),
                _ => MultiPoly::zero(),
            });
            let kernel = one_minus_t.mul(&PSeries::log1p_over_t(order).rescale(&minus_one));
            let arg = PSeries::binomial_pow(&x_poly, order).rescale(&minus_one);
            build_columns(&kernel, arg, n_max, k_max, true, None)
        }
        Family::Norlund => build_columns(
            &PSeries::log1p_over_t(order),
            PSeries::one(order),
            n_max,
            k_max,
            false,
            None,
        ),
        Family::LambdaDaehee1 => build_columns(
            &lambda_kernel(&spec.lambda_poly(), order),
            PSeries::binomial_pow(&x_poly, order),
            n_max,
            k_max,
            true,
            None,
        ),
        Family::LambdaDaehee2 => {
            let lam = spec.lambda_poly();
            let kernel = lambda_kernel(&lam, order).mul(&PSeries::binomial_pow(&lam, order));
            build_columns(
                &kernel,
                PSeries::binomial_pow(&x_poly, order),
                n_max,
                k_max,
                true,
                None,
            )
        }
        Family::TwistedDaehee1 => build_columns(
            &lambda_kernel(&spec.lambda_poly(), order),
            PSeries::binomial_pow(&x_poly, order),
            n_max,
            k_max,
            true,
            Some(&spec.xi_poly()),
        ),
        Family::TwistedDaehee2 => {
            let lam = spec.lambda_poly();
            let kernel = lambda_kernel(&lam, order).mul(&PSeries::binomial_pow(&lam, order));
            build_columns(
                &kernel,
                PSeries::binomial_pow(&x_poly, order),
                n_max,
                k_max,
                true,
                Some(&spec.xi_poly()),
            )
        }
        Family::TwistedBernoulli => {
            let kernel = twisted_bernoulli_kernel(&spec.xi_poly(), order)?;
            build_columns(
                &kernel,
                PSeries::exp(&x_poly, order),
                n_max,
                k_max,
                true,
                None,
            )
        }
    };
    Ok(SequenceTable::new(spec.family.name(), entries))
}

/// `t / (ξ e^t - 1)` for a bound ξ; the constant term `ξ - 1` must be a unit.
fn twisted_bernoulli_kernel(xi: &MultiPoly, order: usize) -> Result<PSeries, FamilyError> {
    let denom = PSeries::exp(&MultiPoly::one(), order)
        .map(|c| c.mul(xi))
        .sub(&PSeries::one(order));
    Ok(denom
        .inverse()
        .map_err(|_| FamilyError::XiNotInvertible)?
        .shift_up(1))
}

/// The matrix route: the same tables rebuilt through Stirling, Pascal, and
/// diagonal-power matrices (or, for Nörlund, a first-kind closed form)
/// without re-reading the family's own generating function.
pub fn table_stirling(spec: &FamilySpec, n_max: usize) -> Result<SequenceTable, FamilyError> {
    spec.validate()?;
    let k_max = spec.k_max;
    let order = n_max + k_max + 2;
    let table = match spec.family {
        Family::Bernoulli => {
            // B_n^(k)(x) = Σ_m S₂(n,m) D_m^(k)(x)
            let d = table_series(
                &FamilySpec::numbers(Family::Daehee1, k_max).with_x(spec.x.clone()),
                n_max,
            )?;
            mat_apply(&TriMatrix::build(&MatrixKind::StirlingSecond, n_max), &d)
        }
        Family::Daehee1 => {
            // D_n^(k)(x) = Σ_m s₁(n,m) B_m^(k)(x)
            let b = table_series(
                &FamilySpec::numbers(Family::Bernoulli, k_max).with_x(spec.x.clone()),
                n_max,
            )?;
            mat_apply(&TriMatrix::build(&MatrixKind::StirlingFirst, n_max), &b)
        }
        Family::Daehee2 => {
            // D̂_n^(k)(x) = Σ_m |s₁(n,m)| B_m^(k)(-x)
            let neg_x = spec.x.to_poly(Symbol::X).neg();
            let b_neg = bernoulli_table_with_arg(&neg_x, k_max, n_max, order);
            mat_apply(
                &TriMatrix::build(&MatrixKind::StirlingFirstSignless, n_max),
                &b_neg,
            )
        }
        Family::Norlund => {
            let entries = (0..=n_max)
                .map(|n| {
                    let inv_fact =
                        ExactRing::inverse(&factorial_rational(n)).expect("factorial is nonzero");
                    (0..=k_max)
                        .map(|k| {
                            MultiPoly::constant(ExactRing::mul(
                                &daehee_numbers_closed(n, k),
                                &inv_fact,
                            ))
                        })
                        .collect()
                })
                .collect();
            SequenceTable::new(spec.family.name(), entries)
        }
        Family::LambdaDaehee1 => {
            // D_{n,λ}^(k)(x) = Σ_m s₁(n,m) · λ-homogenized B_m^(k)
            let x_sym = MultiPoly::symbol(Symbol::X);
            let b = bernoulli_table_with_arg(&x_sym, k_max, n_max, order);
            let hom = b.map(|n, _, e| e.homogenize(n as u32).expect("degree fits the row"));
            let out = mat_apply(&TriMatrix::build(&MatrixKind::StirlingFirst, n_max), &hom);
            bind_after_matrix(out, spec)
        }
        Family::LambdaDaehee2 => {
            // D̂_{n,λ}^(k)(x) = Σ_m s₁(n,m) (-1)^m · λ-homogenized B_m^(k)(-x)
            let neg_x = MultiPoly::symbol(Symbol::X).neg();
            let b_neg = bernoulli_table_with_arg(&neg_x, k_max, n_max, order);
            let hom = b_neg.map(|n, _, e| {
                let h = e.homogenize(n as u32).expect("degree fits the row");
                if n % 2 == 0 {
                    h
                } else {
                    h.neg()
                }
            });
            let out = mat_apply(&TriMatrix::build(&MatrixKind::StirlingFirst, n_max), &hom);
            bind_after_matrix(out, spec)
        }
        Family::TwistedDaehee1 | Family::TwistedDaehee2 => {
            let base_family = if spec.family == Family::TwistedDaehee1 {
                Family::LambdaDaehee1
            } else {
                Family::LambdaDaehee2
            };
            let base = table_stirling(
                &FamilySpec {
                    family: base_family,
                    k_max,
                    x: spec.x.clone(),
                    lambda: spec.lambda.clone(),
                    xi: None,
                },
                n_max,
            )?;
            mat_apply(
                &TriMatrix::build(&MatrixKind::DiagPow(spec.xi_poly()), n_max),
                &base,
            )
        }
        Family::TwistedBernoulli => {
            // Rebuild higher orders from the order-one column by binomial
            // convolution (the EGF product rule applied entrywise), then take
            // the Pascal image for the argument shift.
            let base = table_series(
                &FamilySpec::numbers(Family::TwistedBernoulli, 1)
                    .with_xi(spec.xi.clone().expect("validated ξ binding")),
                n_max,
            )?;
            let col1: Vec<MultiPoly> = (0..=n_max).map(|n| base.entry(n, 1).clone()).collect();
            let mut cols: Vec<Vec<MultiPoly>> =
                vec![(0..=n_max).map(|n| base.entry(n, 0).clone()).collect()];
            if k_max >= 1 {
                cols.push(col1.clone());
            }
            for _ in 2..=k_max {
                let prev = cols.last().expect("at least two columns");
                let next = (0..=n_max)
                    .map(|n| {
                        let mut acc = MultiPoly::zero();
                        for j in 0..=n {
                            let term = col1[j].mul(&prev[n - j]).scale(&binomial_integer(n, j));
                            acc = acc.add(&term);
                        }
                        acc
                    })
                    .collect();
                cols.push(next);
            }
            let entries = (0..=n_max)
                .map(|n| (0..=k_max).map(|k| cols[k][n].clone()).collect())
                .collect();
            let numbers = SequenceTable::new(spec.family.name(), entries);
            mat_apply(
                &TriMatrix::build(&MatrixKind::Pascal(spec.x.to_poly(Symbol::X)), n_max),
                &numbers,
            )
        }
    };
    Ok(table.relabel(spec.family.name()))
}

/// Bernoulli polynomial table with an arbitrary polynomial argument in the
/// exponential factor (used with `±x` by the matrix routes).
fn bernoulli_table_with_arg(
    arg: &MultiPoly,
    k_max: usize,
    n_max: usize,
    order: usize,
) -> SequenceTable {
    SequenceTable::new(
        "bernoulli",
        build_columns(
            &bernoulli_kernel(order),
            PSeries::exp(arg, order),
            n_max,
            k_max,
            true,
            None,
        ),
    )
}

/// The λ-route tables are assembled with symbolic x and λ (homogenization
/// needs the symbols); pin them afterwards if the `FamilySpec` bound them.
fn bind_after_matrix(table: SequenceTable, spec: &FamilySpec) -> SequenceTable {
    let mut bindings = Vec::new();
    if let Binding::Value(v) = &spec.x {
        bindings.push((Symbol::X, v.clone()));
    }
    if let Some(Binding::Value(v)) = &spec.lambda {
        bindings.push((Symbol::Lambda, v.clone()));
    }
    if bindings.is_empty() {
        table
    } else {
        table.eval(&bindings)
    }
}

/// First-kind Daehee numbers in closed form: `s₁(n+k, k) / C(n+k, k)`.
pub fn daehee_numbers_closed(n: usize, k: usize) -> Rational {
    let inv = ExactRing::inverse(&binomial_integer(n + k, k)).expect("binomial is nonzero");
    ExactRing::mul(&stirling_first(n + k, k), &inv)
}

/// The same numbers by brute-force enumeration:
/// `n! (-1)^n Σ 1/(l₁···l_k)` over compositions `l₁+⋯+l_k = n+k`, parts ≥ 1.
pub fn daehee_numbers_composition(n: usize, k: usize) -> Rational {
    fn walk(target: usize, parts: usize, product: Rational, acc: &mut Rational) {
        if parts == 0 {
            if target == 0 {
                *acc = acc.add(&product);
            }
            return;
        }
        for l in 1..=target.saturating_sub(parts - 1) {
            let next = ExactRing::mul(
                &product,
                &Rational::new(1, l as i64).expect("part is positive"),
            );
            walk(target - l, parts - 1, next, acc);
        }
    }
    let mut acc = Rational::integer(0);
    walk(n + k, k, Rational::integer(1), &mut acc);
    let signed = if n.is_multiple_of(2) { acc } else { acc.neg() };
    ExactRing::mul(&signed, &factorial_rational(n))
}

/// Nörlund number `b_n^(-k)`: the ordinary `t^n` coefficient of
/// `(log(1+t)/t)^k`.
pub fn norlund_b(n: usize, k: usize) -> Rational {
    QSeries::log1p_over_t(n).pow(k).coeff(n).clone()
}

/// `D_m^(k)(z) = m! Σ_{n=0}^{m} C(z, m-n) b_n^(-k)` as a polynomial in `z`.
pub fn daehee_poly_via_norlund(m: usize, k: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for n in 0..=m {
        let term = binomial_symbol(Symbol::Z, m - n).scale(&norlund_b(n, k));
        acc = acc.add(&term);
    }
    acc.scale(&factorial_rational(m))
}

/// λ-Daehee polynomials realized as a series composition: substitute
/// `h = (1+t)^λ - 1` into the first-kind Daehee column series
/// `Σ_n D_n^(k)(x) hⁿ/n!` and read off `m!` times the `t^m` coefficient.
/// The substitution also rescales the argument, so the result is the
/// λ-Daehee polynomial of order k evaluated at `λ·x`.
pub fn lambda_daehee_composition(m: usize, k: usize, x: &Binding) -> MultiPoly {
    let order = m;
    let x_poly = x.to_poly(Symbol::X);
    let f = PSeries::log1p_over_t(order)
        .pow(k)
        .mul(&PSeries::binomial_pow(&x_poly, order));
    let h =
        PSeries::binomial_pow(&MultiPoly::symbol(Symbol::Lambda), order).sub(&PSeries::one(order));
    // h has no constant term, so hⁿ starts at tⁿ and the sum below is finite.
    let mut acc = PSeries::zero(order);
    let mut h_pow = PSeries::one(order);
    for n in 0..=order {
        acc = acc.add(&h_pow.scale(f.coeff(n)));
        if n < order {
            h_pow = h_pow.mul(&h);
        }
    }
    acc.coeff_as_sequence(m)
}

/// Twisted Bernoulli values `m! [t^m] (λt / (ξ^λ e^(λt) - 1))^k e^(xt)` for
/// `m = 0..=n_max`. Requires `ξ^λ ≠ 1`; the integer λ scales the twist.
pub fn twisted_bernoulli_eval(
    k: usize,
    xi: &Rational,
    lambda: u32,
    x: &Rational,
    n_max: usize,
) -> Result<Vec<Rational>, FamilyError> {
    let order = n_max;
    let xi_pow = xi.pow(lambda as i64).expect("non-negative power");
    if xi_pow == Rational::integer(1) {
        return Err(FamilyError::XiNotInvertible);
    }
    let lam = Rational::integer(lambda as i64);
    let denom = QSeries::exp(&lam, order)
        .scale(&xi_pow)
        .sub(&QSeries::one(order));
    let lam_k = lam.pow(k as i64).expect("non-negative power");
    let series = denom
        .inverse()
        .expect("constant term ξ^λ - 1 is nonzero")
        .pow(k)
        .shift_up(k)
        .scale(&lam_k)
        .mul(&QSeries::exp(x, order));
    Ok((0..=n_max).map(|m| series.coeff_as_sequence(m)).collect())
}

/// Bernoulli number triangle via the series route.
pub fn bernoulli_numbers(k_max: usize, n_max: usize) -> SequenceTable {
    table_series(&FamilySpec::numbers(Family::Bernoulli, k_max), n_max)
        .expect("spec is always valid")
}

/// Bernoulli polynomial table as the Pascal image of the number triangle:
/// `B_n^(k)(x) = Σ_j C(n,j) B_j^(k) x^(n-j)`.
pub fn bernoulli_polynomials(k_max: usize, n_max: usize) -> SequenceTable {
    let numbers = bernoulli_numbers(k_max, n_max);
    mat_apply(
        &TriMatrix::build(&MatrixKind::Pascal(MultiPoly::symbol(Symbol::X)), n_max),
        &numbers,
    )
}
