//! Simply-laced Cartan data and the inverse quantum Cartan matrix.
//!
//! Nodes are numbered `1..=n` following Bourbaki:
//!
//! * `A_n`: the chain `1 - 2 - ... - n`.
//! * `D_n`: the chain `1 - 2 - ... - (n-2)` with both `n-1` and `n` attached
//!   to `n-2`. For `D_4` the trivalent node is `2`.
//! * `E_n` (`n = 6, 7, 8`): the chain `1 - 3 - 4 - 5 - ... - n` with `2`
//!   attached to `4`.
//!
//! The coefficients `C̃_ij(m)` of the inverse quantum Cartan matrix, expanded
//! as a power series in `z`, are produced by the integer recurrence
//!
//! ```text
//! C̃_ij(m+1) = -C̃_ij(m-1) + Σ_{k~j} C̃_ik(m),   C̃_ij(0) = 0,  C̃_ij(1) = δ_ij
//! ```
//!
//! and memoized per [`CartanData`]. The two skew forms built from them are
//! `N_ij(m) = C̃_ij(m+1) - C̃_ij(m-1)` (for the `Y` torus) and
//! `F_ij(m) = -Σ_{k≥1, 2k-1≤m} C̃_ij(m-2k+1)` (for the `z` torus), both
//! extended to negative arguments by antisymmetry.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DynkinType {
    A,
    D,
    E,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DynkinType::A => "A",
            DynkinType::D => "D",
            DynkinType::E => "E",
        };
        f.write_str(s)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(DynkinType::A),
            "D" | "d" => Ok(DynkinType::D),
            "E" | "e" => Ok(DynkinType::E),
            other => Err(Error::InvalidDynkin {
                label: other.to_string(),
                rank: 0,
                reason: "only simply-laced types A, D and E are supported",
            }),
        }
    }
}

/// Memoized coefficient tables. `ctilde[m]` and `f[m]` are row-major
/// `n × n` blocks; both vectors always have the same length.
#[derive(Debug, Clone)]
pub struct FormTables {
    rank: usize,
    ctilde: Vec<Vec<i64>>,
    f: Vec<Vec<i64>>,
}

impl FormTables {
    fn new(rank: usize) -> Self {
        let zero = vec![0; rank * rank];
        let mut one = vec![0; rank * rank];
        for i in 0..rank {
            one[i * rank + i] = 1;
        }
        Self {
            rank,
            ctilde: vec![zero.clone(), one],
            // F(0) = 0 and F(1) = -C̃(0) = 0.
            f: vec![zero.clone(), zero],
        }
    }

    fn len(&self) -> usize {
        self.ctilde.len()
    }

    fn extend_to(&mut self, max_degree: usize, adjacency: &[Vec<usize>]) {
        let n = self.rank;
        while self.ctilde.len() <= max_degree {
            let m = self.ctilde.len() - 1;
            let prev = &self.ctilde[m - 1];
            let cur = &self.ctilde[m];
            let mut next = vec![0i64; n * n];
            for i in 0..n {
                for j in 0..n {
                    let mut acc = -prev[i * n + j];
                    for &k in &adjacency[j] {
                        acc += cur[i * n + k];
                    }
                    next[i * n + j] = acc;
                }
            }
            self.ctilde.push(next);

            // F(m+1) = F(m-1) - C̃(m)
            let mut f_next = vec![0i64; n * n];
            for (idx, slot) in f_next.iter_mut().enumerate() {
                *slot = self.f[m - 1][idx] - self.ctilde[m][idx];
            }
            self.f.push(f_next);
        }
    }

    /// `C̃_ij(m)` for 0-based nodes; `m` must be below [`Self::max_degree`].
    #[inline]
    pub fn ctilde(&self, i: usize, j: usize, m: usize) -> i64 {
        self.ctilde[m][i * self.rank + j]
    }

    /// `F_ij(m)` for 0-based nodes and any sign of `m` within range.
    #[inline]
    pub fn f_form(&self, i: usize, j: usize, m: i64) -> i64 {
        if m >= 0 {
            self.f[m as usize][i * self.rank + j]
        } else {
            -self.f[(-m) as usize][i * self.rank + j]
        }
    }

    pub fn max_degree(&self) -> usize {
        self.ctilde.len() - 1
    }
}

/// Cartan data of a simply-laced simple Lie algebra, together with the
/// memoized inverse quantum Cartan coefficients.
///
/// The memo table is a pure cache: it only ever grows, and concurrent fills
/// compute identical values.
#[derive(Debug)]
pub struct CartanData {
    dynkin_type: DynkinType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    adjacency: Vec<Vec<usize>>,
    dual_coxeter: usize,
    parity: Vec<u8>,
    tables: RwLock<Arc<FormTables>>,
}

impl CartanData {
    pub fn new(dynkin_type: DynkinType, rank: usize) -> Result<Self> {
        let edges = dynkin_edges(dynkin_type, rank)?;
        let mut adjacency = vec![Vec::new(); rank];
        let mut cartan = vec![vec![0i64; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
            cartan[a][b] = -1;
            cartan[b][a] = -1;
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let dual_coxeter = match dynkin_type {
            DynkinType::A => rank + 1,
            DynkinType::D => 2 * rank - 2,
            DynkinType::E => match rank {
                6 => 12,
                7 => 18,
                _ => 30,
            },
        };
        let parity = bipartite_classes(&adjacency);
        let mut tables = FormTables::new(rank);
        tables.extend_to(4 * dual_coxeter + 8, &adjacency);
        Ok(Self {
            dynkin_type,
            rank,
            cartan,
            adjacency,
            dual_coxeter,
            parity,
            tables: RwLock::new(Arc::new(tables)),
        })
    }

    /// Parses labels such as `A3`, `D4`, `E6`.
    pub fn from_label(label: &str) -> Result<Self> {
        let label = label.trim();
        let (head, tail) = label.split_at(label.chars().next().map_or(0, |c| c.len_utf8()));
        let ty: DynkinType = head.parse()?;
        let rank: usize = tail.parse().map_err(|_| Error::InvalidDynkin {
            label: label.to_string(),
            rank: 0,
            reason: "rank must be a positive integer",
        })?;
        Self::new(ty, rank)
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.dynkin_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.dynkin_type, self.rank)
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn dual_coxeter(&self) -> usize {
        self.dual_coxeter
    }

    /// Neighbours of a 1-based node, 1-based and ascending.
    pub fn neighbors(&self, node: usize) -> Result<Vec<usize>> {
        let i = self.index(node)?;
        Ok(self.adjacency[i].iter().map(|k| k + 1).collect())
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b
            && a >= 1
            && b >= 1
            && a <= self.rank
            && b <= self.rank
            && self.cartan[a - 1][b - 1] == -1
    }

    /// Bipartite class of a node: its graph distance from node 1, mod 2.
    /// Nodes of class `p` occupy the levels `r ≡ p (mod 2)`.
    pub fn parity(&self, node: usize) -> u8 {
        self.parity[node - 1]
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        self.index(node).map(|_| ())
    }

    fn index(&self, node: usize) -> Result<usize> {
        if node == 0 || node > self.rank {
            Err(Error::NodeOutOfRange {
                node,
                rank: self.rank,
            })
        } else {
            Ok(node - 1)
        }
    }

    /// A snapshot of the memo tables covering at least `max_degree`.
    pub fn tables(&self, max_degree: usize) -> Arc<FormTables> {
        {
            let guard = self.tables.read().expect("cartan cache poisoned");
            if guard.max_degree() >= max_degree {
                return Arc::clone(&guard);
            }
        }
        let mut guard = self.tables.write().expect("cartan cache poisoned");
        if guard.max_degree() < max_degree {
            let mut grown = (**guard).clone();
            // Grow geometrically so repeated small requests stay cheap.
            grown.extend_to(max_degree.max(2 * grown.len()), &self.adjacency);
            *guard = Arc::new(grown);
        }
        Arc::clone(&guard)
    }

    /// Coefficient of `z^m` in `C̃_ij(z)`.
    pub fn ctilde(&self, i: usize, j: usize, m: usize) -> Result<i64> {
        let (i, j) = (self.index(i)?, self.index(j)?);
        Ok(self.tables(m).ctilde(i, j, m))
    }

    /// The series `C̃_ij(0), ..., C̃_ij(degree)`.
    pub fn ctilde_series(&self, i: usize, j: usize, degree: usize) -> Result<Vec<i64>> {
        let (i, j) = (self.index(i)?, self.index(j)?);
        let t = self.tables(degree);
        Ok((0..=degree).map(|m| t.ctilde(i, j, m)).collect())
    }

    /// `N_ij(m)`, the skew form of the `Y` torus.
    pub fn n_form(&self, i: usize, j: usize, m: i64) -> Result<i64> {
        let (i, j) = (self.index(i)?, self.index(j)?);
        if m == 0 {
            return Ok(0);
        }
        let a = m.unsigned_abs() as usize;
        let t = self.tables(a + 1);
        let value = t.ctilde(i, j, a + 1) - t.ctilde(i, j, a - 1);
        Ok(if m > 0 { value } else { -value })
    }

    /// `F_ij(m)`, the skew form of the `z` torus.
    pub fn f_form(&self, i: usize, j: usize, m: i64) -> Result<i64> {
        let (i, j) = (self.index(i)?, self.index(j)?);
        let t = self.tables(m.unsigned_abs() as usize);
        Ok(t.f_form(i, j, m))
    }
}

impl Clone for CartanData {
    fn clone(&self) -> Self {
        let tables = Arc::clone(&self.tables.read().expect("cartan cache poisoned"));
        Self {
            dynkin_type: self.dynkin_type,
            rank: self.rank,
            cartan: self.cartan.clone(),
            adjacency: self.adjacency.clone(),
            dual_coxeter: self.dual_coxeter,
            parity: self.parity.clone(),
            tables: RwLock::new(tables),
        }
    }
}

impl PartialEq for CartanData {
    fn eq(&self, other: &Self) -> bool {
        self.dynkin_type == other.dynkin_type && self.rank == other.rank
    }
}

impl Eq for CartanData {}

/// Convenience constructor: `build_cartan(DynkinType::D, 4)`.
pub fn build_cartan(dynkin_type: DynkinType, rank: usize) -> Result<CartanData> {
    CartanData::new(dynkin_type, rank)
}

fn dynkin_edges(ty: DynkinType, rank: usize) -> Result<Vec<(usize, usize)>> {
    let invalid = |reason| Error::InvalidDynkin {
        label: ty.to_string(),
        rank,
        reason,
    };
    // 0-based pairs
    match ty {
        DynkinType::A => {
            if rank == 0 {
                return Err(invalid("type A needs rank at least 1"));
            }
            Ok((0..rank.saturating_sub(1)).map(|i| (i, i + 1)).collect())
        }
        DynkinType::D => {
            if rank < 4 {
                return Err(invalid("type D needs rank at least 4"));
            }
            let mut e: Vec<_> = (0..rank - 2).map(|i| (i, i + 1)).collect();
            e.push((rank - 3, rank - 1));
            Ok(e)
        }
        DynkinType::E => {
            if !(6..=8).contains(&rank) {
                return Err(invalid("type E needs rank 6, 7 or 8"));
            }
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..rank - 1).map(|i| (i, i + 1)));
            Ok(e)
        }
    }
}

fn bipartite_classes(adjacency: &[Vec<usize>]) -> Vec<u8> {
    let n = adjacency.len();
    let mut class = vec![u8::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    class[0] = 0;
    queue.push_back(0);
    while let Some(i) = queue.pop_front() {
        for &k in &adjacency[i] {
            if class[k] == u8::MAX {
                class[k] = 1 - class[i];
                queue.push_back(k);
            }
        }
    }
    class
}
