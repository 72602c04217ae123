//! Finite slices of the infinite quiver and classical matrix mutation.
//!
//! The vertex set of the infinite quiver is the connected component of
//! `(1, 0)` in `I × Z`: a vertex `(i, r)` belongs to it when `r` has the
//! parity of the bipartite class of `i`. A slice keeps the levels of a window
//! `[r_min, r_max]`; the two lowest and the two highest levels are frozen.
//!
//! Vertices of a slice are ordered by decreasing level, then increasing node.
//! Exchange matrices have one row per slice vertex and one column per
//! exchangeable vertex, in that same order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A vertex `(i, r)` of the quiver. Ordered by level, then node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub node: usize,
    pub level: i64,
}

impl Vertex {
    pub const fn new(node: usize, level: i64) -> Self {
        Self { node, level }
    }

    pub fn in_component(&self, cartan: &CartanData) -> bool {
        self.node >= 1
            && self.node <= cartan.rank()
            && self.level.rem_euclid(2) as u8 == cartan.parity(self.node)
    }

    pub fn check(&self, cartan: &CartanData) -> Result<()> {
        cartan.check_node(self.node)?;
        if self.in_component(cartan) {
            Ok(())
        } else {
            Err(Error::VertexOutsideComponent(*self))
        }
    }

    /// Sort key for display: level descending, node ascending.
    pub fn reading_key(&self) -> (std::cmp::Reverse<i64>, usize) {
        (std::cmp::Reverse(self.level), self.node)
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.level, self.node).cmp(&(other.level, other.node))
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.node, self.level)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("vertex `{s}` must look like (i,r)")))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("vertex `{s}` must look like (i,r)")))?;
        let node = a
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad node in `{s}`")))?;
        let level = b
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad level in `{s}`")))?;
        Ok(Vertex { node, level })
    }
}

/// Parses `"(1,4);(1,2);(2,3)"`. Whitespace is ignored and an empty string
/// is the empty path.
pub fn parse_path(s: &str) -> Result<Vec<Vertex>> {
    s.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(str::parse)
        .collect()
}

/// An inclusive level window `[min, max]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub min: i64,
    pub max: i64,
}

impl Window {
    pub fn new(min: i64, max: i64) -> Result<Self> {
        if max - min < 3 {
            return Err(Error::InvalidWindow {
                min,
                max,
                reason: "need at least four levels (two frozen rows at each end)",
            });
        }
        Ok(Self { min, max })
    }

    /// The window of `Γ_N`: `-2N-1 ≤ r < 2N+1`.
    pub fn gamma(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidWindow {
                min: -1,
                max: 0,
                reason: "N must be positive",
            });
        }
        let n = i64::from(n);
        Self::new(-2 * n - 1, 2 * n)
    }

    pub fn is_frozen_level(&self, level: i64) -> bool {
        level <= self.min + 1 || level >= self.max - 1
    }

    pub fn contains(&self, level: i64) -> bool {
        (self.min..=self.max).contains(&level)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.min, self.max)
    }
}

impl FromStr for Window {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("window `{s}` must look like rmin:rmax")))?;
        let min = a
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad window start in `{s}`")))?;
        let max = b
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad window end in `{s}`")))?;
        Window::new(min, max)
    }
}

/// An `m × n` exchange matrix together with the row index of each column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExchangeMatrix {
    matrix: IntMatrix,
    ex_rows: Vec<usize>,
}

impl ExchangeMatrix {
    pub fn new(matrix: IntMatrix, ex_rows: Vec<usize>) -> Result<Self> {
        if ex_rows.len() != matrix.cols() {
            return Err(Error::ShapeMismatch(format!(
                "{} exchangeable rows for {} columns",
                ex_rows.len(),
                matrix.cols()
            )));
        }
        if ex_rows.iter().any(|&r| r >= matrix.rows()) {
            return Err(Error::ShapeMismatch("exchangeable row out of range".into()));
        }
        Ok(Self { matrix, ex_rows })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn ex_rows(&self) -> &[usize] {
        &self.ex_rows
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// Entry `b_{row, col}`.
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.matrix[(row, col)]
    }

    /// The square submatrix on exchangeable rows.
    pub fn principal_part(&self) -> IntMatrix {
        let cols: Vec<usize> = (0..self.cols()).collect();
        self.matrix.select(&self.ex_rows, &cols)
    }

    fn check_col(&self, k: usize) -> Result<usize> {
        if k < self.cols() {
            Ok(self.ex_rows[k])
        } else {
            Err(Error::NotExchangeable {
                index: k,
                columns: self.cols(),
            })
        }
    }

    /// Matrix mutation in the direction of column `k`:
    /// `b'_ij = -b_ij` if `i = k` or `j = k`, otherwise
    /// `b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2`.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let kr = self.check_col(k)?;
        let mut out = self.matrix.clone();
        for i in 0..self.rows() {
            let b_ik = self.matrix[(i, k)];
            for j in 0..self.cols() {
                if i == kr || j == k {
                    out[(i, j)] = -self.matrix[(i, j)];
                    continue;
                }
                let b_kj = self.matrix[(kr, j)];
                if b_ik == 0 || b_kj == 0 {
                    continue;
                }
                let delta = (b_ik.abs() * b_kj + b_ik * b_kj.abs()) / 2;
                out[(i, j)] = self.matrix[(i, j)]
                    .checked_add(delta)
                    .ok_or(Error::Overflow("matrix mutation"))?;
            }
        }
        Ok(Self {
            matrix: out,
            ex_rows: self.ex_rows.clone(),
        })
    }

    /// The `m × m` matrix `E_k`: identity except column `k`, which holds
    /// `-1` on the diagonal and `max(0, -b_ik)` elsewhere.
    pub fn e_matrix(&self, k: usize) -> Result<IntMatrix> {
        let kr = self.check_col(k)?;
        let mut e = IntMatrix::identity(self.rows());
        for i in 0..self.rows() {
            e[(i, kr)] = if i == kr {
                -1
            } else {
                (-self.matrix[(i, k)]).max(0)
            };
        }
        Ok(e)
    }

    /// The `n × n` matrix `F_k`: identity except row `k`, which holds `-1`
    /// on the diagonal and `max(0, b_kj)` elsewhere.
    pub fn f_matrix(&self, k: usize) -> Result<IntMatrix> {
        let kr = self.check_col(k)?;
        let mut f = IntMatrix::identity(self.cols());
        for j in 0..self.cols() {
            f[(k, j)] = if j == k {
                -1
            } else {
                self.matrix[(kr, j)].max(0)
            };
        }
        Ok(f)
    }

    /// Mutation through the factorization `E_k B̃ F_k`.
    pub fn mutate_factored(&self, k: usize) -> Result<Self> {
        let e = self.e_matrix(k)?;
        let f = self.f_matrix(k)?;
        let matrix = e.checked_mul(&self.matrix)?.checked_mul(&f)?;
        Ok(Self {
            matrix,
            ex_rows: self.ex_rows.clone(),
        })
    }
}

/// Free-function form of [`ExchangeMatrix::mutate`].
pub fn mutate_matrix(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix> {
    b.mutate(k)
}

/// A finite slice `Γ` restricted to a level window.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuiverSlice {
    label: String,
    window: Window,
    vertices: Vec<Vertex>,
    frozen: Vec<bool>,
    b_matrix: ExchangeMatrix,
}

impl QuiverSlice {
    pub fn new(cartan: &CartanData, window: Window) -> Result<Self> {
        let mut vertices = Vec::new();
        for level in (window.min..=window.max).rev() {
            for node in 1..=cartan.rank() {
                let v = Vertex::new(node, level);
                if v.in_component(cartan) {
                    vertices.push(v);
                }
            }
        }
        let frozen: Vec<bool> = vertices
            .iter()
            .map(|v| window.is_frozen_level(v.level))
            .collect();
        let ex_rows: Vec<usize> = (0..vertices.len()).filter(|&i| !frozen[i]).collect();

        let mut matrix = IntMatrix::zeros(vertices.len(), ex_rows.len());
        for (row, u) in vertices.iter().enumerate() {
            for (col, &ex) in ex_rows.iter().enumerate() {
                matrix[(row, col)] = arrow_count(cartan, *u, vertices[ex]);
            }
        }
        Ok(Self {
            label: cartan.label(),
            window,
            b_matrix: ExchangeMatrix::new(matrix, ex_rows)?,
            vertices,
            frozen,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn is_frozen(&self, index: usize) -> bool {
        self.frozen[index]
    }

    pub fn exchangeable(&self) -> Vec<Vertex> {
        self.b_matrix
            .ex_rows()
            .iter()
            .map(|&r| self.vertices[r])
            .collect()
    }

    pub fn b_matrix(&self) -> &ExchangeMatrix {
        &self.b_matrix
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        // vertices are sorted by (level desc, node asc)
        self.vertices
            .binary_search_by(|probe| probe.reading_key().cmp(&v.reading_key()))
            .ok()
    }

    /// Column index of an exchangeable vertex.
    pub fn column_of(&self, v: Vertex) -> Result<usize> {
        let row = self.index_of(v).ok_or(Error::VertexNotInSlice(v))?;
        if self.frozen[row] {
            return Err(Error::FrozenVertex(v));
        }
        Ok(self
            .b_matrix
            .ex_rows()
            .binary_search(&row)
            .expect("non-frozen rows are exchangeable"))
    }
}

/// `Γ_N`.
pub fn build_slice(cartan: &CartanData, n: u32) -> Result<QuiverSlice> {
    QuiverSlice::new(cartan, Window::gamma(n)?)
}

pub fn build_slice_window(cartan: &CartanData, window: Window) -> Result<QuiverSlice> {
    QuiverSlice::new(cartan, window)
}

/// Signed number of arrows `u → w` in the infinite quiver.
pub fn arrow_count(cartan: &CartanData, u: Vertex, w: Vertex) -> i64 {
    let (i, r) = (u.node, u.level);
    let (j, s) = (w.node, w.level);
    if i == j {
        if s == r + 2 {
            return 1;
        }
        if s == r - 2 {
            return -1;
        }
    } else if cartan.adjacent(i, j) {
        if s == r - 1 {
            return 1;
        }
        if s == r + 1 {
            return -1;
        }
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(label: &str) -> CartanData {
        CartanData::from_label(label).unwrap()
    }

    #[test]
    fn sl2_gamma_one() {
        let a1 = cd("A1");
        let s = build_slice(&a1, 1).unwrap();
        assert_eq!(
            s.vertices(),
            &[Vertex::new(1, 2), Vertex::new(1, 0), Vertex::new(1, -2)]
        );
        assert_eq!(s.exchangeable(), vec![Vertex::new(1, 0)]);
        // (1,-2) -> (1,0) -> (1,2)
        assert_eq!(
            s.b_matrix().matrix().to_rows(),
            vec![vec![-1], vec![0], vec![1]]
        );
    }

    #[test]
    fn slice_index_sets() {
        let a3 = cd("A3");
        let s = build_slice(&a3, 2).unwrap();
        for (idx, v) in s.vertices().iter().enumerate() {
            assert!((-5..5).contains(&v.level));
            assert!(v.in_component(&a3));
            let exchangeable = (-3..3).contains(&v.level);
            assert_eq!(!s.is_frozen(idx), exchangeable, "{v}");
            assert_eq!(s.index_of(*v), Some(idx));
        }
        assert!(s.b_matrix().principal_part().is_skew_symmetric());
    }

    #[test]
    fn interior_vertices_balanced_in_sl4() {
        // Brute force over the picture: an interior vertex has as many
        // incoming as outgoing arrows.
        let a3 = cd("A3");
        let s = build_slice(&a3, 1).unwrap();
        let interior = build_slice(&a3, 3).unwrap();
        for v in s.exchangeable() {
            let (mut inc, mut out) = (0, 0);
            for u in interior.vertices() {
                let b = arrow_count(&a3, *u, v);
                if b > 0 {
                    inc += b;
                } else {
                    out -= b;
                }
            }
            assert_eq!(inc, out, "{v}");
        }
    }

    #[test]
    fn mutation_involution_and_sl2_reversal() {
        let a1 = cd("A1");
        let s = build_slice(&a1, 1).unwrap();
        let b = s.b_matrix();
        let b1 = b.mutate(0).unwrap();
        assert_eq!(b1.matrix().to_rows(), vec![vec![1], vec![0], vec![-1]]);
        assert_eq!(&b1.mutate(0).unwrap(), b);
        assert_eq!(b.mutate_factored(0).unwrap(), b1);
    }

    #[test]
    fn frozen_direction_rejected() {
        let s = build_slice(&cd("A2"), 1).unwrap();
        let cols = s.b_matrix().cols();
        assert!(matches!(
            s.b_matrix().mutate(cols),
            Err(Error::NotExchangeable { .. })
        ));
        assert_eq!(
            s.column_of(Vertex::new(1, 2)),
            Err(Error::FrozenVertex(Vertex::new(1, 2)))
        );
        assert_eq!(
            s.column_of(Vertex::new(1, 40)),
            Err(Error::VertexNotInSlice(Vertex::new(1, 40)))
        );
    }

    #[test]
    fn e_matrix_isolated_column() {
        let b = ExchangeMatrix::new(
            IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0], vec![0, 2]]).unwrap(),
            vec![0, 1],
        )
        .unwrap();
        // column 0 has b_i0 = 0 except b_10 = -1
        let e = b.e_matrix(0).unwrap();
        assert_eq!(
            e.to_rows(),
            vec![vec![-1, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]
        );
        let f = b.f_matrix(0).unwrap();
        assert_eq!(f.to_rows(), vec![vec![-1, 1], vec![0, 1]]);
        let iso = ExchangeMatrix::new(IntMatrix::from_rows(&[vec![0], vec![0]]).unwrap(), vec![0])
            .unwrap();
        let mut expected = IntMatrix::identity(2);
        expected[(0, 0)] = -1;
        assert_eq!(iso.e_matrix(0).unwrap(), expected);
    }

    #[test]
    fn window_parsing() {
        assert_eq!(
            "-5:2".parse::<Window>().unwrap(),
            Window::new(-5, 2).unwrap()
        );
        assert!("3:4".parse::<Window>().is_err());
        assert!("x".parse::<Window>().is_err());
        assert_eq!(Window::gamma(2).unwrap(), Window { min: -5, max: 4 });
        assert!(Window::gamma(0).is_err());
    }

    #[test]
    fn path_parsing() {
        let p = parse_path("(1,4); (1,2);(2,-3)").unwrap();
        assert_eq!(
            p,
            vec![Vertex::new(1, 4), Vertex::new(1, 2), Vertex::new(2, -3)]
        );
        assert!(parse_path("").unwrap().is_empty());
        assert!(parse_path("(1,x)").is_err());
    }

    #[test]
    fn vertex_component_check() {
        let a2 = cd("A2");
        assert!(Vertex::new(1, 0).check(&a2).is_ok());
        assert!(Vertex::new(2, -1).check(&a2).is_ok());
        assert_eq!(
            Vertex::new(2, 0).check(&a2),
            Err(Error::VertexOutsideComponent(Vertex::new(2, 0)))
        );
        assert!(Vertex::new(3, 1).check(&a2).is_err());
    }
}
