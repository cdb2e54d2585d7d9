//! Identity checkers backing the `verify` suites.
//!
//! Each checker replays one structural identity over a stated range and
//! reports how many instances it compared, how many failed, and a first
//! witness when something went wrong. A report with zero instances is never
//! considered passing — an identity that checked nothing proved nothing.

use crate::families::{
    daehee_numbers_closed, daehee_numbers_composition, daehee_poly_via_norlund,
    lambda_daehee_composition, norlund_b, table_series, twisted_bernoulli_eval, Binding, Family,
    FamilyError, FamilySpec,
};
use crate::matrix::{mat_apply, MatrixKind, SequenceTable, TriMatrix};
use crate::poly::{MultiPoly, Symbol};
use crate::rational::{factorial_rational, ExactRing, Rational};
use crate::series::TruncatedSeries;
use crate::stirling::stirling_second;

type QSeries = TruncatedSeries<Rational>;

/// Outcome of one verification suite.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub id: String,
    pub instances: usize,
    pub failures: usize,
    pub witness: Option<String>,
}

impl VerificationReport {
    pub fn new(id: impl Into<String>) -> VerificationReport {
        VerificationReport {
            id: id.into(),
            instances: 0,
            failures: 0,
            witness: None,
        }
    }

    /// Records one compared instance; on the first failure the witness string
    /// is captured.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(describe());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.instances > 0 && self.failures == 0
    }

    /// Folds another report's counts into this one, keeping the earliest
    /// witness. Useful for aggregating several sub-suites under one id.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.instances += other.instances;
        self.failures += other.failures;
        if self.witness.is_none() {
            self.witness = other.witness;
        }
    }
}

fn compare_tables(
    report: &mut VerificationReport,
    what: &str,
    lhs: &SequenceTable,
    rhs: &SequenceTable,
) {
    assert_eq!(lhs.n_max(), rhs.n_max(), "comparing unlike table heights");
    assert_eq!(lhs.k_max(), rhs.k_max(), "comparing unlike table widths");
    for n in 0..=lhs.n_max() {
        for k in 0..=lhs.k_max() {
            report.check(lhs.entry(n, k) == rhs.entry(n, k), || {
                format!(
                    "{what} at (n,k) = ({n},{k}): {} ≠ {}",
                    lhs.entry(n, k),
                    rhs.entry(n, k)
                )
            });
        }
    }
}

/// Row-wise λ-homogenized Bernoulli table. First kind: entry (m,k) is
/// `λ^m B_m^(k)(x/λ)`; second kind: `(-λ)^m B_m^(k)(-x/λ)`. Both are genuine
/// polynomials in (x, λ) because `B_m^(k)` has degree m.
fn lambda_hom_bernoulli(k_max: usize, n_max: usize, second_kind: bool) -> SequenceTable {
    let b = table_series(&FamilySpec::symbolic(Family::Bernoulli, k_max), n_max)
        .expect("bernoulli spec is valid");
    let minus_x = MultiPoly::symbol(Symbol::X).neg();
    b.map(|n, _, e| {
        let arg_flipped;
        let poly = if second_kind {
            arg_flipped = e.subst(Symbol::X, &minus_x);
            &arg_flipped
        } else {
            e
        };
        let hom = poly.homogenize(n as u32).expect("degree ≤ row index");
        if second_kind && n % 2 == 1 {
            hom.neg()
        } else {
            hom
        }
    })
}

/// Stirling matrix pairs multiply to the identity in both orders.
pub fn stirling_inverse_check(n_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("stirling-inverse");
    let s1 = TriMatrix::build(&MatrixKind::StirlingFirst, n_max);
    let s2 = TriMatrix::build(&MatrixKind::StirlingSecond, n_max);
    let signless = TriMatrix::build(&MatrixKind::StirlingFirstSignless, n_max);
    let signed2 = TriMatrix::build(&MatrixKind::StirlingSecondSigned, n_max);
    let products = [
        ("S₂·S₁", s2.mul(&s1)),
        ("S₁·S₂", s1.mul(&s2)),
        ("S̃₂·𝔰₁", signed2.mul(&signless)),
        ("𝔰₁·S̃₂", signless.mul(&signed2)),
    ];
    for (what, product) in &products {
        for i in 0..=n_max {
            for j in 0..=i {
                let expected = if i == j {
                    MultiPoly::one()
                } else {
                    MultiPoly::zero()
                };
                report.check(product.entry(i, j) == expected, || {
                    format!("{what} at ({i},{j}): {} ≠ {expected}", product.entry(i, j))
                });
            }
        }
    }
    report
}

/// Closed form, composition sum, and series extraction of the first-kind
/// Daehee numbers agree three ways.
pub fn daehee_threeway_check(n_max: usize, k_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("daehee-threeway");
    let series = table_series(&FamilySpec::numbers(Family::Daehee1, k_max), n_max)
        .expect("daehee spec is valid");
    for n in 0..=n_max {
        for k in 0..=k_max {
            let closed = daehee_numbers_closed(n, k);
            let composed = daehee_numbers_composition(n, k);
            report.check(closed == composed, || {
                format!("closed vs composition at ({n},{k}): {closed} ≠ {composed}")
            });
            let from_series = series.entry(n, k);
            report.check(*from_series == MultiPoly::constant(closed.clone()), || {
                format!("closed vs series at ({n},{k}): {closed} ≠ {from_series}")
            });
        }
    }
    report
}

/// Stirling transforms between the Daehee and Bernoulli tables, both kinds
/// and both directions, for numbers and for symbolic polynomials, plus the
/// Pascal shift for Bernoulli polynomials.
pub fn stirling_transforms_check(
    n_first: usize,
    n_second: usize,
    k_max: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new("stirling-transforms");
    let s1 = TriMatrix::build(&MatrixKind::StirlingFirst, n_first);
    let s2 = TriMatrix::build(&MatrixKind::StirlingSecond, n_first);
    let signless = TriMatrix::build(&MatrixKind::StirlingFirstSignless, n_second);
    let signed2 = TriMatrix::build(&MatrixKind::StirlingSecondSigned, n_second);
    for x in [Binding::zero(), Binding::Symbolic] {
        let d = table_series(
            &FamilySpec::numbers(Family::Daehee1, k_max).with_x(x.clone()),
            n_first,
        )
        .expect("valid spec");
        let b = table_series(
            &FamilySpec::numbers(Family::Bernoulli, k_max).with_x(x.clone()),
            n_first,
        )
        .expect("valid spec");
        compare_tables(&mut report, "B = S₂·D", &mat_apply(&s2, &d), &b);
        compare_tables(&mut report, "D = S₁·B", &mat_apply(&s1, &b), &d);

        let d_hat = table_series(
            &FamilySpec::numbers(Family::Daehee2, k_max).with_x(x.clone()),
            n_second,
        )
        .expect("valid spec");
        let b_neg = table_series(
            &FamilySpec::numbers(Family::Bernoulli, k_max).with_x(x.clone()),
            n_second,
        )
        .expect("valid spec")
        .map(|_, _, e| e.subst(Symbol::X, &MultiPoly::symbol(Symbol::X).neg()));
        compare_tables(
            &mut report,
            "D̂ = 𝔰₁·B(-x)",
            &mat_apply(&signless, &b_neg),
            &d_hat,
        );
        compare_tables(
            &mut report,
            "B(-x) = S̃₂·D̂",
            &mat_apply(&signed2, &d_hat),
            &b_neg,
        );
    }
    // Pascal shift: the polynomial table is the Pascal image of the numbers.
    let b_poly =
        table_series(&FamilySpec::symbolic(Family::Bernoulli, k_max), n_first).expect("valid spec");
    let pascal = crate::families::bernoulli_polynomials(k_max, n_first);
    compare_tables(&mut report, "B(x) = P(x)·B", &pascal, &b_poly);
    report
}

/// Nörlund bridge: `D_m^(k) = m!·b_m^(-k)` and the Daehee polynomial identity
/// in z built from Nörlund numbers.
pub fn norlund_check(
    m_scaling: usize,
    k_scaling: usize,
    m_poly: usize,
    k_poly: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new("norlund");
    for m in 0..=m_scaling {
        for k in 0..=k_scaling {
            let scaled = ExactRing::mul(&norlund_b(m, k), &factorial_rational(m));
            let closed = daehee_numbers_closed(m, k);
            report.check(scaled == closed, || {
                format!("m!·b_m = D_m at ({m},{k}): {scaled} ≠ {closed}")
            });
        }
    }
    let d_poly =
        table_series(&FamilySpec::symbolic(Family::Daehee1, k_poly), m_poly).expect("valid spec");
    let z = MultiPoly::symbol(Symbol::Z);
    for m in 0..=m_poly {
        for k in 0..=k_poly {
            let via = daehee_poly_via_norlund(m, k);
            let direct = d_poly.entry(m, k).subst(Symbol::X, &z);
            report.check(via == direct, || {
                format!("Nörlund polynomial identity at ({m},{k}): {via} ≠ {direct}")
            });
        }
    }
    report
}

/// `(e^t - 1)^m` has l-th sequence value `m!·S₂(l,m)`: the bridge between the
/// exponential kernel and the second-kind Stirling triangle.
pub fn genfun_stirling_check(m_max: usize, l_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("genfun-stirling");
    let one = Rational::integer(1);
    for m in 0..=m_max {
        let series = QSeries::expm1(&one, l_max).pow(m);
        let m_fact = factorial_rational(m);
        for l in 0..=l_max {
            let lhs = series.coeff_as_sequence(l);
            let rhs = ExactRing::mul(&m_fact, &stirling_second(l, m));
            report.check(lhs == rhs, || {
                format!("(e^t-1)^{m} value at l = {l}: {lhs} ≠ {rhs}")
            });
        }
    }
    report
}

/// The λ-family matrix identities, both kinds and both directions, as
/// symbolic equalities in (x, λ), plus the λ := 1 reductions.
pub fn lambda_pair_check(n_max: usize, k_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("lambda-pair");
    let s1 = TriMatrix::build(&MatrixKind::StirlingFirst, n_max);
    let s2 = TriMatrix::build(&MatrixKind::StirlingSecond, n_max);
    let lam1 = table_series(&FamilySpec::symbolic(Family::LambdaDaehee1, k_max), n_max)
        .expect("valid spec");
    let lam2 = table_series(&FamilySpec::symbolic(Family::LambdaDaehee2, k_max), n_max)
        .expect("valid spec");
    let hom1 = lambda_hom_bernoulli(k_max, n_max, false);
    let hom2 = lambda_hom_bernoulli(k_max, n_max, true);
    compare_tables(&mut report, "D_λ = S₁·ΛB", &mat_apply(&s1, &hom1), &lam1);
    compare_tables(&mut report, "ΛB = S₂·D_λ", &mat_apply(&s2, &lam1), &hom1);
    compare_tables(&mut report, "D̂_λ = S₁·Λ₁B", &mat_apply(&s1, &hom2), &lam2);
    compare_tables(&mut report, "Λ₁B = S₂·D̂_λ", &mat_apply(&s2, &lam2), &hom2);

    // λ := 1 reductions: first kind collapses to the plain Daehee table, the
    // second kind to the plain table with its argument shifted by the order.
    let one = [(Symbol::Lambda, Rational::integer(1))];
    let d1 =
        table_series(&FamilySpec::symbolic(Family::Daehee1, k_max), n_max).expect("valid spec");
    compare_tables(&mut report, "D_λ at λ=1", &lam1.eval(&one), &d1);
    let shifted = d1.map(|_, k, e| {
        let xk = MultiPoly::symbol(Symbol::X).add(&MultiPoly::integer(k as i64));
        e.subst(Symbol::X, &xk)
    });
    compare_tables(&mut report, "D̂_λ at λ=1", &lam2.eval(&one), &shifted);
    report
}

/// The composition realization agrees with the direct λ-table at argument λx.
pub fn lambda_composition_check(m_max: usize, k_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("lambda-composition");
    let lam1 = table_series(&FamilySpec::symbolic(Family::LambdaDaehee1, k_max), m_max)
        .expect("valid spec");
    for x in [Binding::Symbolic, Binding::zero()] {
        let scaled = MultiPoly::symbol(Symbol::Lambda).mul(&x.to_poly(Symbol::X));
        for m in 0..=m_max {
            for k in 0..=k_max {
                let composed = lambda_daehee_composition(m, k, &x);
                let direct = lam1.entry(m, k).subst(Symbol::X, &scaled);
                report.check(composed == direct, || {
                    format!("composition at ({m},{k}), x {x:?}: {composed} ≠ {direct}")
                });
            }
        }
    }
    report
}

/// Reflection: `B_n^(k)(k - x) = (-1)^n B_n^(k)(x)` as polynomials.
pub fn reflection_check(n_max: usize, k_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("reflection");
    let b =
        table_series(&FamilySpec::symbolic(Family::Bernoulli, k_max), n_max).expect("valid spec");
    for n in 0..=n_max {
        for k in 0..=k_max {
            let k_minus_x = MultiPoly::integer(k as i64).sub(&MultiPoly::symbol(Symbol::X));
            let lhs = b.entry(n, k).subst(Symbol::X, &k_minus_x);
            let rhs = if n % 2 == 0 {
                b.entry(n, k).clone()
            } else {
                b.entry(n, k).neg()
            };
            report.check(lhs == rhs, || {
                format!("reflection at ({n},{k}): {lhs} ≠ {rhs}")
            });
        }
    }
    report
}

/// Twist scaling `D_{n,ξ} = ξ^n·D_{n,λ}` (both kinds, symbolically), its
/// x = 0 and λ = 1 specializations, and the four twisted matrix forms
/// (direct Ξ·S₁ factorizations and their S₂·Ξ⁻¹ inversions).
pub fn twisted_scaling_check(n_max: usize, k_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("twisted-scaling");
    let xi = MultiPoly::symbol(Symbol::Xi);
    let tw1 = table_series(&FamilySpec::symbolic(Family::TwistedDaehee1, k_max), n_max)
        .expect("valid spec");
    let tw2 = table_series(&FamilySpec::symbolic(Family::TwistedDaehee2, k_max), n_max)
        .expect("valid spec");
    let lam1 = table_series(&FamilySpec::symbolic(Family::LambdaDaehee1, k_max), n_max)
        .expect("valid spec");
    let lam2 = table_series(&FamilySpec::symbolic(Family::LambdaDaehee2, k_max), n_max)
        .expect("valid spec");

    let scale_rows =
        |t: &SequenceTable| t.map(|n, _, e| e.mul(&crate::series::ring_pow(&xi, n as u32)));
    compare_tables(&mut report, "D_ξ = Ξ·D_λ", &scale_rows(&lam1), &tw1);
    compare_tables(&mut report, "D̂_ξ = Ξ·D̂_λ", &scale_rows(&lam2), &tw2);

    // Specializations: numbers (x = 0) and the λ = 1 plain-family scaling.
    let at_zero = [(Symbol::X, Rational::integer(0))];
    compare_tables(
        &mut report,
        "numbers D_ξ = Ξ·D_λ",
        &scale_rows(&lam1.eval(&at_zero)),
        &tw1.eval(&at_zero),
    );
    let at_one = [(Symbol::Lambda, Rational::integer(1))];
    let d1 =
        table_series(&FamilySpec::symbolic(Family::Daehee1, k_max), n_max).expect("valid spec");
    compare_tables(
        &mut report,
        "D_ξ at λ=1 = Ξ·D",
        &scale_rows(&d1),
        &tw1.eval(&at_one),
    );

    // Direct matrix forms: D_ξ = Ξ·S₁·ΛB and D̂_ξ = Ξ·S₁·Λ₁B.
    let s1 = TriMatrix::build(&MatrixKind::StirlingFirst, n_max);
    let s2 = TriMatrix::build(&MatrixKind::StirlingSecond, n_max);
    let xi_s1 = TriMatrix::build(&MatrixKind::DiagPow(xi.clone()), n_max).mul(&s1);
    let hom1 = lambda_hom_bernoulli(k_max, n_max, false);
    let hom2 = lambda_hom_bernoulli(k_max, n_max, true);
    compare_tables(
        &mut report,
        "D_ξ = Ξ·S₁·ΛB",
        &mat_apply(&xi_s1, &hom1),
        &tw1,
    );
    compare_tables(
        &mut report,
        "D̂_ξ = Ξ·S₁·Λ₁B",
        &mat_apply(&xi_s1, &hom2),
        &tw2,
    );

    // Inverted forms, kept polynomial by dividing each row by its exact ξ^n
    // factor: S₂·Ξ⁻¹·D_ξ = ΛB and S₂·Ξ⁻¹·D̂_ξ = Λ₁B.
    for (what, twisted, hom) in [
        ("S₂·Ξ⁻¹·D_ξ = ΛB", &tw1, &hom1),
        ("S₂·Ξ⁻¹·D̂_ξ = Λ₁B", &tw2, &hom2),
    ] {
        let mut divisible = true;
        let mut rows = Vec::with_capacity(twisted.n_max() + 1);
        for n in 0..=twisted.n_max() {
            let mut row = Vec::with_capacity(twisted.k_max() + 1);
            for k in 0..=twisted.k_max() {
                match twisted.entry(n, k).divide_exact(Symbol::Xi, n as u32) {
                    Ok(q) => row.push(q),
                    Err(_) => {
                        divisible = false;
                        report.check(false, || {
                            format!("{what}: row {n} column {k} lacks the ξ^{n} factor")
                        });
                        row.push(MultiPoly::zero());
                    }
                }
            }
            rows.push(row);
        }
        if divisible {
            let untwisted = SequenceTable::new(twisted.label(), rows);
            compare_tables(&mut report, what, &mat_apply(&s2, &untwisted), hom);
        }
    }
    report
}

/// The corrected first-kind transform, checked symbolically in
/// (x, λ, ξ): `λ^m B_m^(k)(x/λ) = Σ_n D_{n,ξ}^(k)(x|λ)·ξ^(-n)·S₂(m,n)`.
pub fn corrected_first_kind_check(m_max: usize, k_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("corrected-first-kind");
    let tw1 = table_series(&FamilySpec::symbolic(Family::TwistedDaehee1, k_max), m_max)
        .expect("valid spec");
    let hom = lambda_hom_bernoulli(k_max, m_max, false);
    corrected_sum_check(&mut report, &tw1, &hom, m_max, k_max);
    report
}

/// The corrected second-kind transform: `λ^m B_m^(k)(k + x/λ)` equals the
/// same ξ-cancelled Stirling sum over the second-kind twisted table.
pub fn corrected_second_kind_check(m_max: usize, k_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("corrected-second-kind");
    let tw2 = table_series(&FamilySpec::symbolic(Family::TwistedDaehee2, k_max), m_max)
        .expect("valid spec");
    let b =
        table_series(&FamilySpec::symbolic(Family::Bernoulli, k_max), m_max).expect("valid spec");
    let lhs = b.map(|m, k, e| {
        let shifted_arg = MultiPoly::symbol(Symbol::X).add(&MultiPoly::integer(k as i64));
        e.subst(Symbol::X, &shifted_arg)
            .homogenize(m as u32)
            .expect("degree ≤ row index")
    });
    corrected_sum_check(&mut report, &tw2, &lhs, m_max, k_max);
    report
}

/// Shared body of the corrected transforms: entrywise Stirling sums over the
/// twisted table with each row's ξ-power divided out exactly.
fn corrected_sum_check(
    report: &mut VerificationReport,
    twisted: &SequenceTable,
    lhs: &SequenceTable,
    m_max: usize,
    k_max: usize,
) {
    for k in 0..=k_max {
        for m in 0..=m_max {
            let mut rhs = MultiPoly::zero();
            let mut divisible = true;
            for n in 0..=m {
                match twisted.entry(n, k).divide_exact(Symbol::Xi, n as u32) {
                    Ok(q) => rhs = rhs.add(&q.scale(&stirling_second(m, n))),
                    Err(_) => {
                        divisible = false;
                        report.check(false, || {
                            format!("row {n} column {k} lacks the ξ^{n} factor")
                        });
                    }
                }
            }
            if divisible {
                report.check(*lhs.entry(m, k) == rhs, || {
                    format!(
                        "corrected sum at (m,k) = ({m},{k}): {} ≠ {rhs}",
                        lhs.entry(m, k)
                    )
                });
            }
        }
    }
}

/// A concrete evaluation point for the contradiction demonstrations.
#[derive(Clone, Debug)]
pub struct DemoPoint {
    pub xi: Rational,
    pub lambda: u32,
    pub x: i64,
    pub k: usize,
    pub m_max: usize,
}

impl Default for DemoPoint {
    fn default() -> DemoPoint {
        DemoPoint {
            xi: Rational::integer(2),
            lambda: 1,
            x: 1,
            k: 1,
            m_max: 4,
        }
    }
}

/// Demonstrates the documented contradiction in the quoted original claims:
/// sweeps m at a bound point, exhibits the first m where the original
/// relation fails, and confirms the corrected relation at every swept m.
/// When `ξ^λ = 1` the original's kernel is singular, so only the corrected
/// side is testable and the report says so.
///
/// The report passes when the contradiction is exhibited (or unreachable)
/// and the corrected identity holds throughout; it fails if the original
/// relation survives the whole sweep or the corrected one breaks.
pub fn contradiction_demo(
    second_kind: bool,
    point: &DemoPoint,
) -> Result<VerificationReport, FamilyError> {
    let id = if second_kind {
        "twist-demo-second-kind"
    } else {
        "twist-demo-first-kind"
    };
    let mut report = VerificationReport::new(id);
    if point.xi.is_zero() {
        return Err(FamilyError::ZeroTwist);
    }
    let family = if second_kind {
        Family::TwistedDaehee2
    } else {
        Family::TwistedDaehee1
    };
    let lam = Rational::integer(point.lambda as i64);
    let x = Rational::integer(point.x);
    let twisted = table_series(
        &FamilySpec::numbers(family, point.k)
            .with_x(Binding::Value(x.clone()))
            .with_lambda(Binding::Value(lam.clone()))
            .with_xi(Binding::Value(point.xi.clone())),
        point.m_max,
    )?;
    let twisted_at = |n: usize| {
        twisted
            .entry(n, point.k)
            .constant_value()
            .expect("fully bound table entry")
    };

    // Corrected relation at the bound point, for every swept m.
    let bindings = [(Symbol::X, x.clone()), (Symbol::Lambda, lam.clone())];
    let shift = if second_kind { point.k } else { 0 };
    let b = table_series(
        &FamilySpec::symbolic(Family::Bernoulli, point.k),
        point.m_max,
    )
    .expect("valid spec");
    let mut corrected = Vec::with_capacity(point.m_max + 1);
    for m in 0..=point.m_max {
        let shifted_arg = MultiPoly::symbol(Symbol::X).add(&MultiPoly::integer(shift as i64));
        let lhs = b
            .entry(m, point.k)
            .subst(Symbol::X, &shifted_arg)
            .homogenize(m as u32)
            .expect("degree ≤ row index")
            .eval(&bindings)
            .constant_value()
            .expect("fully bound");
        let mut rhs = Rational::integer(0);
        for n in 0..=m {
            let factor = point.xi.pow(-(n as i64)).expect("ξ ≠ 0");
            let term = ExactRing::mul(
                &ExactRing::mul(&twisted_at(n), &factor),
                &stirling_second(m, n),
            );
            rhs = ExactRing::add(&rhs, &term);
        }
        report.check(lhs == rhs, || {
            format!("corrected relation at m = {m}: {lhs} ≠ {rhs}")
        });
        corrected.push(lhs);
    }

    // Original claim, where its twisted-Bernoulli side exists at all.
    let xi_pow = point.xi.pow(point.lambda as i64).expect("ξ ≠ 0");
    if xi_pow == Rational::integer(1) {
        report.witness = Some(
            "ξ^λ = 1: the original claim's kernel is singular here, so only the corrected \
             relation is testable — it holds"
                .to_string(),
        );
        return Ok(report);
    }
    let exponent_shift = point.x
        + if second_kind {
            (point.lambda as i64) * (point.k as i64)
        } else {
            0
        };
    let bernoulli_arg = Rational::integer(exponent_shift);
    let original_lhs = twisted_bernoulli_eval(
        point.k,
        &point.xi,
        point.lambda,
        &bernoulli_arg,
        point.m_max,
    )?;
    let mut counterexample = None;
    for m in 0..=point.m_max {
        let mut rhs = Rational::integer(0);
        for n in 0..=m {
            let factor = point.xi.pow(-(n as i64 + exponent_shift)).expect("ξ ≠ 0");
            let term = ExactRing::mul(
                &ExactRing::mul(&twisted_at(n), &factor),
                &stirling_second(m, n),
            );
            rhs = ExactRing::add(&rhs, &term);
        }
        if original_lhs[m] != rhs && counterexample.is_none() {
            counterexample = Some(format!(
                "original claim fails at m = {m} (ξ = {}, λ = {}, x = {}, k = {}): \
                 lhs {} ≠ rhs {}; corrected value {} matches on both sides",
                point.xi, point.lambda, point.x, point.k, original_lhs[m], rhs, corrected[m]
            ));
        }
    }
    report.check(counterexample.is_some(), || {
        format!(
            "no counterexample to the original claim up to m = {}; the documented \
             contradiction did not materialize",
            point.m_max
        )
    });
    if report.failures == 0 {
        report.witness = counterexample;
    }
    Ok(report)
}

/// Bundles every suite at its acceptance-grade default range.
pub fn default_suite_reports() -> Vec<VerificationReport> {
    let demo1 = contradiction_demo(false, &DemoPoint::default()).expect("default point is valid");
    let demo2 = contradiction_demo(true, &DemoPoint::default()).expect("default point is valid");
    vec![
        stirling_inverse_check(25),
        daehee_threeway_check(8, 4),
        stirling_transforms_check(15, 10, 6),
        norlund_check(12, 5, 8, 4),
        genfun_stirling_check(8, 15),
        lambda_pair_check(8, 4),
        lambda_composition_check(6, 4),
        reflection_check(10, 5),
        twisted_scaling_check(8, 4),
        corrected_first_kind_check(6, 4),
        corrected_second_kind_check(6, 4),
        demo1,
        demo2,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_passes(report: &VerificationReport, at_least: usize) {
        assert!(
            report.ok(),
            "suite {} failed ({} of {} instances): {:?}",
            report.id,
            report.failures,
            report.instances,
            report.witness
        );
        assert!(
            report.instances >= at_least,
            "suite {} covered only {} instances",
            report.id,
            report.instances
        );
    }

    #[test]
    fn stirling_inverse_small() {
        assert_passes(&stirling_inverse_check(10), 4 * 66);
    }

    #[test]
    fn daehee_threeway_small() {
        assert_passes(&daehee_threeway_check(6, 3), 2 * 7 * 4);
    }

    #[test]
    fn stirling_transforms_small() {
        assert_passes(&stirling_transforms_check(6, 5, 3), 100);
    }

    #[test]
    fn norlund_small() {
        assert_passes(&norlund_check(8, 3, 5, 3), 36 + 24);
    }

    #[test]
    fn genfun_stirling_small() {
        assert_passes(&genfun_stirling_check(5, 8), 54);
    }

    #[test]
    fn lambda_pair_small() {
        assert_passes(&lambda_pair_check(5, 3), 6 * 24);
    }

    #[test]
    fn lambda_composition_small() {
        assert_passes(&lambda_composition_check(4, 3), 2 * 20);
    }

    #[test]
    fn reflection_small() {
        assert_passes(&reflection_check(8, 4), 45);
    }

    #[test]
    fn twisted_scaling_small() {
        // Eight full-table comparisons over a 6×4 table.
        assert_passes(&twisted_scaling_check(5, 3), 8 * 24);
    }

    #[test]
    fn corrected_transforms_small() {
        assert_passes(&corrected_first_kind_check(5, 3), 24);
        assert_passes(&corrected_second_kind_check(5, 3), 24);
    }

    // Hand-checked demo witnesses at (ξ, λ, x, k) = (2, 1, 1, 1). The quoted
    // claim's left side is the sequence built from (λt/(ξ^λ·e^(λt) - 1))^k,
    // whose value at m = 0 is 0 whenever ξ^λ ≠ 1 (the denominator does not
    // vanish at t = 0), while its right side at m = 0 is the nonzero
    // D₀·ξ^(-shift). The corrected relation uses the plain Bernoulli table
    // (value 1 at m = 0) and balances.
    #[test]
    fn demo_exhibits_first_kind_contradiction_at_default_point() {
        let report = contradiction_demo(false, &DemoPoint::default()).unwrap();
        assert!(report.ok(), "demo failed: {:?}", report.witness);
        let witness = report.witness.expect("demo carries a witness");
        assert_eq!(
            witness,
            "original claim fails at m = 0 (ξ = 2, λ = 1, x = 1, k = 1): \
             lhs 0 ≠ rhs 1/2; corrected value 1 matches on both sides"
        );
    }

    #[test]
    fn demo_exhibits_second_kind_contradiction_at_default_point() {
        let report = contradiction_demo(true, &DemoPoint::default()).unwrap();
        assert!(report.ok(), "demo failed: {:?}", report.witness);
        let witness = report.witness.expect("demo carries a witness");
        assert_eq!(
            witness,
            "original claim fails at m = 0 (ξ = 2, λ = 1, x = 1, k = 1): \
             lhs 0 ≠ rhs 1/4; corrected value 1 matches on both sides"
        );
    }

    #[test]
    fn demo_with_unit_twist_power_checks_corrected_side_only() {
        let point = DemoPoint {
            xi: Rational::integer(-1),
            lambda: 2,
            ..DemoPoint::default()
        };
        let report = contradiction_demo(false, &point).unwrap();
        assert!(report.ok());
        assert!(report.witness.unwrap().contains("ξ^λ = 1"));
    }

    #[test]
    fn demo_rejects_zero_twist() {
        let point = DemoPoint {
            xi: Rational::integer(0),
            ..DemoPoint::default()
        };
        assert_eq!(
            contradiction_demo(false, &point).unwrap_err(),
            FamilyError::ZeroTwist
        );
    }

    #[test]
    fn reports_with_no_instances_do_not_pass() {
        let report = VerificationReport::new("empty");
        assert!(!report.ok());
        let mut failing = VerificationReport::new("failing");
        failing.check(true, || unreachable!());
        failing.check(false, || "first witness".to_string());
        failing.check(false, || unreachable!("only the first witness is kept"));
        assert!(!failing.ok());
        assert_eq!(failing.instances, 3);
        assert_eq!(failing.failures, 2);
        assert_eq!(failing.witness.as_deref(), Some("first witness"));
    }

    #[test]
    fn absorb_merges_counts_and_keeps_first_witness() {
        let mut a = VerificationReport::new("a");
        a.check(true, || unreachable!());
        let mut b = VerificationReport::new("b");
        b.check(false, || "later witness".to_string());
        a.absorb(b);
        assert_eq!(a.instances, 2);
        assert_eq!(a.failures, 1);
        assert_eq!(a.witness.as_deref(), Some("later witness"));
    }
}
