//! Exponent vectors over quiver vertices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::quiver::Vertex;

/// A finitely supported map `Vertex → Z`, kept sorted by vertex with no
/// zero entries.
///
/// The ordering is the lexicographic group order: two vectors are compared
/// at the smallest vertex (by level, then node) where they differ, and the
/// larger exponent wins. It is compatible with addition, which is what exact
/// division relies on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ExpVector(Vec<(Vertex, i32)>);

impl ExpVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(v: Vertex) -> Self {
        Self(vec![(v, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (Vertex, i32)>>(pairs: I) -> Self {
        let mut entries: Vec<(Vertex, i32)> = pairs.into_iter().collect();
        entries.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(Vertex, i32)> = Vec::with_capacity(entries.len());
        for (v, e) in entries {
            match out.last_mut() {
                Some((w, acc)) if *w == v => *acc += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        Self(out)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[(Vertex, i32)] {
        &self.0
    }

    pub fn get(&self, v: Vertex) -> i32 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map_or(0, |idx| self.0[idx].1)
    }

    pub fn support(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    /// `(min level, max level)` of the support.
    pub fn level_span(&self) -> Option<(i64, i64)> {
        Some((self.0.first()?.0.level, self.0.last()?.0.level))
    }

    pub fn scaled(&self, k: i32) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    pub fn neg(&self) -> Self {
        self.scaled(-1)
    }

    fn merge(&self, other: &Self, sign: i32) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match take {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign * b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + sign * b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, -1)
    }

    /// Entries sorted by level descending, then node ascending.
    pub fn reading_order(&self) -> Vec<(Vertex, i32)> {
        let mut entries = self.0.clone();
        entries.sort_by_key(|(v, _)| v.reading_key());
        entries
    }
}

impl Ord for ExpVector {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(x), None) => return x.1.cmp(&0),
                (None, Some(y)) => return 0.cmp(&y.1),
                (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                    Ordering::Less => return x.1.cmp(&0),
                    Ordering::Greater => return 0.cmp(&y.1),
                    Ordering::Equal => {
                        if x.1 != y.1 {
                            return x.1.cmp(&y.1);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for ExpVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .reading_order()
            .iter()
            .map(|(v, e)| format!("z[{},{}]^{}", v.node, v.level, e))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(pairs: &[((usize, i64), i32)]) -> ExpVector {
        ExpVector::from_pairs(pairs.iter().map(|&((i, r), e)| (Vertex::new(i, r), e)))
    }

    fn arb_exp() -> impl Strategy<Value = ExpVector> {
        proptest::collection::vec(((1usize..3, -3i64..3), -2i32..3), 0..4).prop_map(|p| ev(&p))
    }

    #[test]
    fn normal_form() {
        let a = ev(&[((1, 2), 1), ((1, 0), -1), ((1, 2), -1)]);
        assert_eq!(a.entries(), &[(Vertex::new(1, 0), -1)]);
        assert_eq!(a.get(Vertex::new(1, 0)), -1);
        assert_eq!(a.get(Vertex::new(1, 2)), 0);
    }

    #[test]
    fn group_order() {
        let lo = ev(&[((1, -2), 1)]);
        let hi = ev(&[((1, 0), 1)]);
        // z_{1,-2} sits at a smaller vertex with a positive exponent.
        assert!(lo > hi);
        assert!(hi > ExpVector::zero());
        assert!(ExpVector::zero() > hi.neg());
    }

    #[test]
    fn display_reading_order() {
        let a = ev(&[((1, -2), 1), ((2, 3), 2), ((1, 0), -1)]);
        assert_eq!(a.to_string(), "z[2,3]^2 z[1,0]^-1 z[1,-2]^1");
        assert_eq!(ExpVector::zero().to_string(), "1");
    }

    proptest! {
        #[test]
        fn translation_invariance(a in arb_exp(), b in arb_exp(), c in arb_exp()) {
            prop_assert_eq!(a.cmp(&b), a.add(&c).cmp(&b.add(&c)));
            prop_assert_eq!(a.add(&b).sub(&b), a.clone());
            prop_assert_eq!(a.cmp(&b), b.neg().cmp(&a.neg()));
        }
    }
}
