//! Formal weight symbols `[ω]` and their group ring.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A weight `Σ a_i ω_i` with `a_i ∈ ½Z`, stored as the doubled integer
/// coordinates `2 a_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn from_doubled(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    /// `(num / 2) ω_node` for a 1-based node.
    pub fn fundamental_half(rank: usize, node: usize, num: i64) -> Self {
        let mut w = Self::zero(rank);
        w.0[node - 1] = num;
        w
    }

    pub fn doubled(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (idx, &d) in self.0.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let coeff = match (d % 2 == 0, d / 2) {
                (true, 1) => String::new(),
                (true, -1) => "-".to_string(),
                (true, h) => h.to_string(),
                (false, _) => format!("{d}/2"),
            };
            parts.push(format!("{coeff}w{}", idx + 1));
        }
        if parts.is_empty() {
            f.write_str("[0]")
        } else {
            write!(f, "[{}]", parts.join("+").replace("+-", "-"))
        }
    }
}

/// Finite integer combinations of weight symbols, multiplied by
/// `[ω][ω'] = [ω + ω']`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct WeightExpr(BTreeMap<Weight, i64>);

impl WeightExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn symbol(w: Weight) -> Self {
        Self::term(w, 1)
    }

    pub fn term(w: Weight, c: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.0.entry(w.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.0.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.0.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a.add(b), x * y);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (w, x) in self.terms() {
            out.add_term(w.clone(), x * c);
        }
        out
    }
}

impl fmt::Display for WeightExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Highest weights first.
        let parts: Vec<String> = self
            .0
            .iter()
            .rev()
            .map(|(w, &c)| {
                if c == 1 {
                    w.to_string()
                } else {
                    format!("{c}{w}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_ring_product() {
        let w1 = Weight::fundamental_half(2, 1, 2);
        let half = Weight::fundamental_half(2, 2, -1);
        let a = WeightExpr::symbol(w1.clone()).add(&WeightExpr::symbol(half.clone()));
        let sq = a.mul(&a);
        assert_eq!(sq.coeff(&w1.add(&half)), 2);
        assert_eq!(sq.coeff(&w1.add(&w1)), 1);
        assert_eq!(sq.len(), 3);
    }

    #[test]
    fn display() {
        assert_eq!(Weight::zero(1).to_string(), "[0]");
        assert_eq!(Weight::fundamental_half(1, 1, -2).to_string(), "[-w1]");
        assert_eq!(Weight::fundamental_half(2, 2, 3).to_string(), "[3/2w2]");
        assert_eq!(Weight::from_doubled(vec![4, -2]).to_string(), "[2w1-w2]");
    }
}
