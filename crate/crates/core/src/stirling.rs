//! Stirling numbers of both kinds by memoized recurrence.
//!
//! These triangles are computed purely from the two-term recurrences, with no
//! power series involved, so they serve as the independent cross-check for
//! every series-route computation in the crate. The memo tables are global
//! and guarded by a mutex; all entries are exact big integers.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Signed Stirling numbers of the first kind:
/// `s1(n+1, k) = s1(n, k-1) - n * s1(n, k)`, `s1(0, 0) = 1`.
fn first_kind_table() -> &'static Mutex<Vec<Vec<BigInt>>> {
    static TABLE: OnceLock<Mutex<Vec<Vec<BigInt>>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![vec![BigInt::one()]]))
}

/// Stirling numbers of the second kind:
/// `s2(n+1, k) = s2(n, k-1) + k * s2(n, k)`, `s2(0, 0) = 1`.
fn second_kind_table() -> &'static Mutex<Vec<Vec<BigInt>>> {
    static TABLE: OnceLock<Mutex<Vec<Vec<BigInt>>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![vec![BigInt::one()]]))
}

fn lookup(
    table: &Mutex<Vec<Vec<BigInt>>>,
    n: usize,
    k: usize,
    step: impl Fn(&[BigInt], usize, usize) -> BigInt,
) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut rows = table.lock().expect("memo poisoned");
    while rows.len() <= n {
        let m = rows.len();
        let prev = rows[m - 1].clone();
        let row: Vec<BigInt> = (0..=m)
            .map(|j| {
                if j == 0 {
                    BigInt::zero()
                } else {
                    step(&prev, m, j)
                }
            })
            .collect();
        rows.push(row);
    }
    rows[n][k].clone()
}

/// Signed Stirling number of the first kind `s1(n, k)`.
pub fn stirling_first(n: usize, k: usize) -> Rational {
    let v = lookup(first_kind_table(), n, k, |prev, m, j| {
        let mut v = prev[j - 1].clone();
        if j < m {
            v -= BigInt::from(m - 1) * &prev[j];
        }
        v
    });
    Rational::integer(v)
}

/// Stirling number of the second kind `s2(n, k)`.
pub fn stirling_second(n: usize, k: usize) -> Rational {
    let v = lookup(second_kind_table(), n, k, |prev, m, j| {
        let mut v = prev[j - 1].clone();
        if j < m {
            v += BigInt::from(j) * &prev[j];
        }
        v
    });
    Rational::integer(v)
}

/// Signless Stirling number of the first kind `|s1(n, k)| = (-1)^(n-k) s1(n, k)`.
pub fn stirling_first_signless(n: usize, k: usize) -> Rational {
    let s = stirling_first(n, k);
    if (n - k.min(n)) % 2 == 1 {
        -s
    } else {
        s
    }
}

/// Sign-decorated second kind `(-1)^(n-k) s2(n, k)`, the inverse partner of
/// the signless first-kind triangle.
pub fn stirling_second_signed(n: usize, k: usize) -> Rational {
    let s = stirling_second(n, k);
    if (n - k.min(n)) % 2 == 1 {
        -s
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{falling_factorial, MultiPoly, Symbol};
    use crate::rational::{ExactRing, Rational};
    use crate::series::TruncatedSeries;

    fn int(v: i64) -> Rational {
        Rational::integer(v)
    }

    #[test]
    fn first_kind_triangle_small_rows() {
        let expect: [&[i64]; 5] = [
            &[1],
            &[0, 1],
            &[0, -1, 1],
            &[0, 2, -3, 1],
            &[0, -6, 11, -6, 1],
        ];
        for (n, row) in expect.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(stirling_first(n, k), int(*v), "s1({n},{k})");
            }
        }
        assert_eq!(stirling_first(2, 5), Rational::zero());
    }

    #[test]
    fn second_kind_triangle_small_rows() {
        let expect: [&[i64]; 5] = [&[1], &[0, 1], &[0, 1, 1], &[0, 1, 3, 1], &[0, 1, 7, 6, 1]];
        for (n, row) in expect.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(stirling_second(n, k), int(*v), "s2({n},{k})");
            }
        }
    }

    #[test]
    fn first_kind_matches_falling_factorial_expansion() {
        // Brute-force oracle: expand x(x-1)...(x-n+1) and read coefficients.
        let x = MultiPoly::symbol(Symbol::X);
        for n in 0..=12usize {
            let product = falling_factorial(&x, n);
            for k in 0..=n {
                let mut exps = [0u32; 4];
                exps[0] = k as u32;
                assert_eq!(product.coeff(exps), stirling_first(n, k), "s1({n},{k})");
            }
        }
    }

    #[test]
    fn second_kind_matches_partition_count() {
        // Brute-force oracle: count set partitions of {0..n-1} into k blocks by
        // enumerating labeled assignments and dividing by k!.
        fn partitions(n: usize, k: usize) -> u64 {
            if k == 0 {
                return u64::from(n == 0);
            }
            let mut surjective = 0u64;
            for code in 0..(k as u64).pow(n as u32) {
                let mut used = vec![false; k];
                let mut c = code;
                for _ in 0..n {
                    used[(c % k as u64) as usize] = true;
                    c /= k as u64;
                }
                if used.iter().all(|&u| u) {
                    surjective += 1;
                }
            }
            let fact: u64 = (1..=k as u64).product();
            surjective / fact
        }
        for n in 0..=7usize {
            for k in 0..=n {
                assert_eq!(
                    stirling_second(n, k),
                    int(partitions(n, k) as i64),
                    "s2({n},{k})"
                );
            }
        }
        assert_eq!(stirling_second(4, 2), int(7));
    }

    #[test]
    fn power_basis_reconstructions() {
        // Falling factorial in terms of powers, and powers in terms of
        // falling factorials, both via the triangles.
        let x = MultiPoly::symbol(Symbol::X);
        for n in 0..=12usize {
            let mut from_first = MultiPoly::zero();
            let mut from_second = MultiPoly::zero();
            for k in 0..=n {
                let mut xk = [0u32; 4];
                xk[0] = k as u32;
                from_first = from_first.add(&MultiPoly::term(stirling_first(n, k), xk));
                from_second =
                    from_second.add(&falling_factorial(&x, k).scale(&stirling_second(n, k)));
            }
            assert_eq!(from_first, falling_factorial(&x, n), "degree {n} expansion");
            let mut xn = [0u32; 4];
            xn[0] = n as u32;
            assert_eq!(from_second, MultiPoly::term(Rational::one(), xn));
        }
    }

    #[test]
    fn sign_decorations() {
        assert_eq!(stirling_first_signless(3, 1), int(2));
        assert_eq!(stirling_first_signless(3, 2), int(3));
        assert_eq!(stirling_second_signed(3, 1), int(1));
        assert_eq!(stirling_second_signed(3, 2), int(-3));
        for n in 0..=20usize {
            for k in 0..=n {
                let signless = stirling_first_signless(n, k);
                assert!(!signless.is_negative(), "|s1({n},{k})| >= 0");
                let sign = if (n - k) % 2 == 1 { -int(1) } else { int(1) };
                assert_eq!(
                    stirling_first(n, k),
                    ExactRing::mul(&sign, &signless),
                    "sign of s1({n},{k})"
                );
            }
        }
    }

    #[test]
    fn expm1_powers_expand_in_second_kind_numbers() {
        // (e^t - 1)^m has l-th coefficient m! * s2(l, m) / l!.
        let order = 15usize;
        for m in 0..=8usize {
            let f = TruncatedSeries::<Rational>::expm1(&Rational::one(), order).pow(m);
            for l in 0..=order {
                let expected = ExactRing::mul(
                    &crate::rational::factorial_rational(m),
                    &stirling_second(l, m),
                );
                assert_eq!(f.coeff_as_sequence(l), expected, "m={m}, l={l}");
            }
        }
    }
}
