//! Lower-triangular exact matrices and rectangular sequence tables.
//!
//! The matrix side carries the Stirling, Pascal and diagonal-power transforms;
//! the table side holds one number/polynomial family laid out as rows n = 0..
//! and columns k = 0... Applying a matrix to a table is the workhorse of every
//! transform identity in the crate.

use std::fmt;

use crate::poly::{MultiPoly, Symbol};
use crate::rational::{binomial_integer, ExactRing, Rational};
use crate::series::ring_pow;
use crate::stirling::{
    stirling_first, stirling_first_signless, stirling_second, stirling_second_signed,
};

/// The triangular matrix families used by the transform identities.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixKind {
    /// Signed Stirling numbers of the first kind.
    StirlingFirst,
    /// Stirling numbers of the second kind.
    StirlingSecond,
    /// Signless first kind.
    StirlingFirstSignless,
    /// `(-1)^(i-j)` times the second kind.
    StirlingSecondSigned,
    /// Pascal matrix with entries `C(i, j) * base^(i-j)`.
    Pascal(MultiPoly),
    /// Diagonal matrix with entries `base^i`.
    DiagPow(MultiPoly),
}

/// Dense lower-triangular matrix of exact polynomial entries; row `i` stores
/// columns `0..=i`.
#[derive(Clone, PartialEq)]
pub struct TriMatrix {
    rows: Vec<Vec<MultiPoly>>,
}

impl TriMatrix {
    /// Builds the `(n+1) x (n+1)` matrix of the given kind.
    pub fn build(kind: &MatrixKind, n: usize) -> TriMatrix {
        let entry = |i: usize, j: usize| -> MultiPoly {
            match kind {
                MatrixKind::StirlingFirst => MultiPoly::constant(stirling_first(i, j)),
                MatrixKind::StirlingSecond => MultiPoly::constant(stirling_second(i, j)),
                MatrixKind::StirlingFirstSignless => {
                    MultiPoly::constant(stirling_first_signless(i, j))
                }
                MatrixKind::StirlingSecondSigned => {
                    MultiPoly::constant(stirling_second_signed(i, j))
                }
                MatrixKind::Pascal(base) => {
                    ring_pow(base, (i - j) as u32).scale(&binomial_integer(i, j))
                }
                MatrixKind::DiagPow(base) => {
                    if i == j {
                        ring_pow(base, i as u32)
                    } else {
                        MultiPoly::zero()
                    }
                }
            }
        };
        TriMatrix {
            rows: (0..=n)
                .map(|i| (0..=i).map(|j| entry(i, j)).collect())
                .collect(),
        }
    }

    pub fn identity(dim: usize) -> TriMatrix {
        assert!(dim > 0, "matrix dimension must be positive");
        TriMatrix {
            rows: (0..dim)
                .map(|i| {
                    (0..=i)
                        .map(|j| {
                            if i == j {
                                MultiPoly::one()
                            } else {
                                MultiPoly::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Entry `(i, j)`; zero above the diagonal.
    pub fn entry(&self, i: usize, j: usize) -> MultiPoly {
        assert!(i < self.dim() && j < self.dim(), "index out of range");
        if j > i {
            MultiPoly::zero()
        } else {
            self.rows[i][j].clone()
        }
    }

    pub fn row(&self, i: usize) -> &[MultiPoly] {
        &self.rows[i]
    }

    /// Triangular matrix product.
    pub fn mul(&self, rhs: &TriMatrix) -> TriMatrix {
        assert_eq!(self.dim(), rhs.dim(), "matrix dimensions must match");
        let rows = (0..self.dim())
            .map(|i| {
                (0..=i)
                    .map(|j| {
                        let mut acc = MultiPoly::zero();
                        for m in j..=i {
                            acc = acc.add(&self.rows[i][m].mul(&rhs.rows[m][j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        TriMatrix { rows }
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, e)| {
                if i == j {
                    *e == MultiPoly::one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Binds symbols in every entry.
    pub fn eval(&self, bindings: &[(Symbol, Rational)]) -> TriMatrix {
        TriMatrix {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|e| e.eval(bindings)).collect())
                .collect(),
        }
    }
}

impl fmt::Debug for TriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Rectangular grid of family values: rows are n = 0..=n_max, columns are the
/// family order k = 0..=k_max.
#[derive(Clone, PartialEq)]
pub struct SequenceTable {
    label: String,
    entries: Vec<Vec<MultiPoly>>,
}

impl SequenceTable {
    pub fn new(label: impl Into<String>, entries: Vec<Vec<MultiPoly>>) -> SequenceTable {
        assert!(!entries.is_empty(), "table needs at least one row");
        let width = entries[0].len();
        assert!(width > 0, "table needs at least one column");
        assert!(
            entries.iter().all(|r| r.len() == width),
            "table rows must have equal length"
        );
        SequenceTable {
            label: label.into(),
            entries,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn n_max(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn k_max(&self) -> usize {
        self.entries[0].len() - 1
    }

    pub fn entry(&self, n: usize, k: usize) -> &MultiPoly {
        &self.entries[n][k]
    }

    pub fn rows(&self) -> &[Vec<MultiPoly>] {
        &self.entries
    }

    /// Maps every entry, preserving shape and label.
    pub fn map(&self, f: impl Fn(usize, usize, &MultiPoly) -> MultiPoly) -> SequenceTable {
        SequenceTable {
            label: self.label.clone(),
            entries: self
                .entries
                .iter()
                .enumerate()
                .map(|(n, row)| row.iter().enumerate().map(|(k, e)| f(n, k, e)).collect())
                .collect(),
        }
    }

    /// Binds symbols in every entry.
    pub fn eval(&self, bindings: &[(Symbol, Rational)]) -> SequenceTable {
        self.map(|_, _, e| e.eval(bindings))
    }

    pub fn relabel(mut self, label: impl Into<String>) -> SequenceTable {
        self.label = label.into();
        self
    }
}

impl fmt::Debug for SequenceTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "table `{}`:", self.label)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Applies a triangular matrix to every column of a table:
/// `out[n][k] = sum_m A[n][m] * T[m][k]`.
pub fn mat_apply(a: &TriMatrix, t: &SequenceTable) -> SequenceTable {
    assert_eq!(
        a.dim(),
        t.n_max() + 1,
        "matrix dimension must equal the table row count"
    );
    t.map(|n, k, _| {
        let mut acc = MultiPoly::zero();
        for m in 0..=n {
            acc = acc.add(&a.row(n)[m].mul(t.entry(m, k)));
        }
        acc
    })
}
