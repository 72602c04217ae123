//! Commutative monomials and polynomials in the variables `Y_{i,q^s}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// `Π Y_{i,q^s}^{u}`, keyed by `(node, s)`; no zero exponents stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct YMonomial(BTreeMap<(usize, i64), i32>);

impl YMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `Y_{node, q^s}`.
    pub fn var(node: usize, s: i64) -> Self {
        Self::from_pairs([((node, s), 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = ((usize, i64), i32)>>(pairs: I) -> Self {
        let mut out = Self::one();
        for (key, e) in pairs {
            out.bump(key, e);
        }
        out
    }

    fn bump(&mut self, key: (usize, i64), e: i32) {
        if e == 0 {
            return;
        }
        let slot = self.0.entry(key).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.0.remove(&key);
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, node: usize, s: i64) -> i32 {
        self.0.get(&(node, s)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, i64), i32)> + '_ {
        self.0.iter().map(|(&k, &e)| (k, e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, e) in other.entries() {
            out.bump(k, e);
        }
        out
    }

    pub fn pow(&self, n: i32) -> Self {
        if n == 0 {
            return Self::one();
        }
        Self(self.0.iter().map(|(&k, &e)| (k, e * n)).collect())
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// No negative exponents at all.
    pub fn is_dominant(&self) -> bool {
        self.0.values().all(|&e| e > 0)
    }

    /// No negative exponents among the `Y_{node, ·}`.
    pub fn is_dominant_at(&self, node: usize) -> bool {
        self.0.iter().all(|(&(i, _), &e)| i != node || e > 0)
    }

    /// The factor made of the `Y_{node, ·}` only.
    pub fn part(&self, node: usize) -> Self {
        Self(
            self.0
                .iter()
                .filter(|(&(i, _), _)| i == node)
                .map(|(&k, &e)| (k, e))
                .collect(),
        )
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        // Reading order: q-exponent descending, node ascending.
        let mut entries: Vec<_> = self.entries().collect();
        entries.sort_by_key(|&((i, s), _)| (std::cmp::Reverse(s), i));
        let parts: Vec<String> = entries
            .iter()
            .map(|&((i, s), e)| format!("Y[{i},{s}]^{e}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Integer combinations of [`YMonomial`]s.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct YPoly(BTreeMap<YMonomial, i64>);

impl YPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: YMonomial) -> Self {
        let mut out = Self::zero();
        out.add_term(m, 1);
        out
    }

    pub fn add_term(&mut self, m: YMonomial, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.0.entry(m.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.0.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&YMonomial, i64)> {
        self.0.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &YMonomial) -> i64 {
        self.0.get(m).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                if c == 1 {
                    m.to_string()
                } else {
                    format!("{c} {m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
