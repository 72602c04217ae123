//! The skew form `Λ` on a slice, compatibility with `B̃`, and `Λ` mutation.
//!
//! A pair `(Λ, B̃)` is compatible when `B̃ᵀΛ` vanishes outside the entries
//! `(k, row(k))` of the exchangeable vertices and has a nonzero diagonal
//! `d_k` there. On the slices built here the diagonal is constantly `-2`;
//! the checker reports the signed values and accepts any constant nonzero
//! diagonal, whatever its sign.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::quiver::{ExchangeMatrix, QuiverSlice};

/// `Λ_{uw} = F_ij(s - r)` for `u = (i,r)`, `w = (j,s)` over all slice vertices.
pub fn build_lambda(cartan: &CartanData, slice: &QuiverSlice) -> IntMatrix {
    let vs = slice.vertices();
    let span = match (vs.first(), vs.last()) {
        (Some(a), Some(b)) => (a.level - b.level).unsigned_abs() as usize,
        _ => 0,
    };
    let tables = cartan.tables(span.max(1));
    let mut out = IntMatrix::zeros(vs.len(), vs.len());
    for (a, u) in vs.iter().enumerate() {
        for (b, w) in vs.iter().enumerate() {
            out[(a, b)] = tables.f_form(u.node - 1, w.node - 1, w.level - u.level);
        }
    }
    out
}

/// One offending entry of `B̃ᵀΛ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Exchangeable column of `B̃` (row of the product).
    pub column: usize,
    /// Vertex index (column of the product).
    pub vertex: usize,
    pub value: i64,
    pub expected: i64,
}

/// Outcome of a compatibility check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatReport {
    pub product: IntMatrix,
    /// `d_k` read off at `(k, row(k))`.
    pub diagonal: Vec<i64>,
    /// Off-diagonal nonzeros, and diagonal entries that are zero or differ
    /// from the most common diagonal value.
    pub violations: Vec<Violation>,
}

impl CompatReport {
    /// Whether the diagonal is a nonzero constant and nothing else is.
    pub fn is_compatible(&self) -> bool {
        self.violations.is_empty()
    }

    /// `Some(d)` when every `d_k` equals `d`.
    pub fn uniform_diagonal(&self) -> Option<i64> {
        let first = *self.diagonal.first()?;
        self.diagonal.iter().all(|&d| d == first).then_some(first)
    }

    /// The diagonal is negative, opposite to the positive convention.
    pub fn negative_sign(&self) -> bool {
        !self.diagonal.is_empty() && self.diagonal.iter().all(|&d| d < 0)
    }
}

impl fmt::Display for CompatReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_compatible() {
            write!(f, "compatible, diagonal {:?}", self.diagonal)?;
            if self.negative_sign() {
                f.write_str(" (negative sign)")?;
            }
            Ok(())
        } else {
            write!(f, "not compatible:")?;
            for v in &self.violations {
                write!(
                    f,
                    " (B^T L)[{},{}] = {} (expected {});",
                    v.column, v.vertex, v.value, v.expected
                )?;
            }
            Ok(())
        }
    }
}

/// Computes `B̃ᵀΛ` and compares it against a diagonal on the exchangeable
/// rows. Errors only on shape mismatch; incompatibility is in the report.
pub fn check_compatible(b: &ExchangeMatrix, lambda: &IntMatrix) -> Result<CompatReport> {
    if lambda.rows() != lambda.cols() || lambda.rows() != b.rows() {
        return Err(Error::ShapeMismatch(format!(
            "B is {}x{} but Lambda is {}x{}",
            b.rows(),
            b.cols(),
            lambda.rows(),
            lambda.cols()
        )));
    }
    let product = b.matrix().transpose().checked_mul(lambda)?;
    let diagonal: Vec<i64> = b
        .ex_rows()
        .iter()
        .enumerate()
        .map(|(k, &row)| product[(k, row)])
        .collect();
    let common = most_common(&diagonal);
    let mut violations = Vec::new();
    for (k, &row) in b.ex_rows().iter().enumerate() {
        for j in 0..product.cols() {
            let value = product[(k, j)];
            if j == row {
                if value == 0 || Some(value) != common {
                    violations.push(Violation {
                        column: k,
                        vertex: j,
                        value,
                        expected: common.filter(|&d| d != 0).unwrap_or(-2),
                    });
                }
            } else if value != 0 {
                violations.push(Violation {
                    column: k,
                    vertex: j,
                    value,
                    expected: 0,
                });
            }
        }
    }
    Ok(CompatReport {
        product,
        diagonal,
        violations,
    })
}

fn most_common(values: &[i64]) -> Option<i64> {
    let mut counts = std::collections::BTreeMap::new();
    for &x in values {
        *counts.entry(x).or_insert(0usize) += 1;
    }
    // Ties go to the smallest value, which keeps the choice deterministic.
    counts
        .into_iter()
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .map(|(x, _)| x)
}

/// Like [`check_compatible`] but turns an incompatible pair into an error.
pub fn require_compatible(b: &ExchangeMatrix, lambda: &IntMatrix) -> Result<CompatReport> {
    let report = check_compatible(b, lambda)?;
    if report.is_compatible() {
        Ok(report)
    } else {
        Err(Error::Incompatible(report.to_string()))
    }
}

/// `Λ' = E_kᵀ Λ E_k`, with `E_k` read from the unmutated `B̃`.
pub fn mutate_lambda(lambda: &IntMatrix, b: &ExchangeMatrix, k: usize) -> Result<IntMatrix> {
    if lambda.rows() != b.rows() || lambda.cols() != b.rows() {
        return Err(Error::ShapeMismatch("Lambda does not match B".into()));
    }
    let e = b.e_matrix(k)?;
    e.transpose().checked_mul(lambda)?.checked_mul(&e)
}

/// A slice together with its skew form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatiblePair {
    pub b_matrix: ExchangeMatrix,
    pub lambda: IntMatrix,
    pub diagonal: Vec<i64>,
}

impl CompatiblePair {
    pub fn from_slice(cartan: &CartanData, slice: &QuiverSlice) -> Result<Self> {
        let lambda = build_lambda(cartan, slice);
        let report = require_compatible(slice.b_matrix(), &lambda)?;
        Ok(Self {
            b_matrix: slice.b_matrix().clone(),
            lambda,
            diagonal: report.diagonal,
        })
    }

    /// Mutates both matrices in direction `k` and re-checks compatibility.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let lambda = mutate_lambda(&self.lambda, &self.b_matrix, k)?;
        let b_matrix = self.b_matrix.mutate(k)?;
        let report = require_compatible(&b_matrix, &lambda)?;
        Ok(Self {
            b_matrix,
            lambda,
            diagonal: report.diagonal,
        })
    }
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::quiver::{build_slice, build_slice_window, Window};

    fn cd(label: &str) -> CartanData {
        CartanData::from_label(label).unwrap()
    }

    #[test]
    fn sl2_lambda() {
        let a1 = cd("A1");
        let s = build_slice(&a1, 1).unwrap();
        let l = build_lambda(&a1, &s);
        // slice order is (1,2), (1,0), (1,-2); reversed it is the printed matrix
        let rev = l.select(&[2, 1, 0], &[2, 1, 0]);
        assert_eq!(
            rev.to_rows(),
            vec![vec![0, -1, 0], vec![1, 0, -1], vec![0, 1, 0]]
        );
        let report = check_compatible(s.b_matrix(), &l).unwrap();
        assert_eq!(report.diagonal, vec![-2]);
        assert!(report.is_compatible());
        assert!(report.negative_sign());
    }

    fn rows<const N: usize>(m: &[[i64; N]]) -> Vec<Vec<i64>> {
        m.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn d4_reference_matrices() {
        use crate::reference::{D4_B_TILDE, D4_LAMBDA, D4_PRODUCT, D4_WINDOW};
        let d4 = cd("D4");
        let w = Window::new(D4_WINDOW.0, D4_WINDOW.1).unwrap();
        let s = build_slice_window(&d4, w).unwrap();
        assert_eq!(s.b_matrix().matrix().to_rows(), rows(&D4_B_TILDE));
        let l = build_lambda(&d4, &s);
        assert_eq!(l.to_rows(), rows(&D4_LAMBDA));
        let report = check_compatible(s.b_matrix(), &l).unwrap();
        assert_eq!(report.product.to_rows(), rows(&D4_PRODUCT));
        assert_eq!(report.uniform_diagonal(), Some(-2));
    }

    #[test]
    fn d4_after_one_mutation() {
        let d4 = cd("D4");
        let s = build_slice_window(&d4, Window::new(-5, 2).unwrap()).unwrap();
        let pair = CompatiblePair::from_slice(&d4, &s).unwrap();
        let k = s.column_of(crate::quiver::Vertex::new(1, 0)).unwrap();
        let e = pair.b_matrix.e_matrix(k).unwrap();
        for i in 0..e.rows() {
            for j in 0..e.cols() {
                let expected = match (i == j, j == s.b_matrix().ex_rows()[k]) {
                    (true, true) => -1,
                    (true, false) => 1,
                    (false, true) => (-pair.b_matrix.get(i, k)).max(0),
                    (false, false) => 0,
                };
                assert_eq!(e[(i, j)], expected);
            }
        }
        let once = pair.mutate(k).unwrap();
        assert!(once.diagonal.iter().all(|&d| d == -2));
    }

    #[test]
    fn perturbation_is_named() {
        let d4 = cd("D4");
        let s = build_slice_window(&d4, Window::new(-5, 2).unwrap()).unwrap();
        let mut l = build_lambda(&d4, &s);
        l[(4, 9)] += 1;
        l[(9, 4)] -= 1;
        let report = check_compatible(s.b_matrix(), &l).unwrap();
        assert!(!report.is_compatible());
        assert!(report
            .violations
            .iter()
            .all(|v| v.vertex == 4 || v.vertex == 9));
        assert!(report.violations.iter().any(|v| v.vertex == 9));
        assert!(matches!(
            require_compatible(s.b_matrix(), &l),
            Err(Error::Incompatible(_))
        ));
    }

    #[test]
    fn lambda_mutation_is_involutive_and_compatible() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for label in ["A1", "A3", "D4"] {
            let c = cd(label);
            let s = build_slice(&c, 2).unwrap();
            let pair = CompatiblePair::from_slice(&c, &s).unwrap();
            for _ in 0..10 {
                let k = rng.gen_range(0..pair.b_matrix.cols());
                let once = pair.mutate(k).unwrap();
                assert!(once.lambda.is_skew_symmetric());
                assert_eq!(once.diagonal, pair.diagonal);
                let twice = once.mutate(k).unwrap();
                assert_eq!(twice, pair);
            }
        }
    }

    #[test]
    fn shape_mismatch() {
        let a1 = cd("A1");
        let s = build_slice(&a1, 1).unwrap();
        assert!(check_compatible(s.b_matrix(), &IntMatrix::zeros(2, 2)).is_err());
        assert!(mutate_lambda(&IntMatrix::zeros(2, 2), s.b_matrix(), 0).is_err());
    }
}
