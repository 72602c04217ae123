//! The classical Frenkel–Mukhin algorithm for fundamental `q`-characters.
//!
//! Starting from `Y_{i,q^{r+1}}`, every monomial that is `j`-dominant and not
//! yet fully explained by `j`-strings spawns the `U_q(sl2)` character of its
//! `Y_{j,·}` part, written with the full `A_{j,·}^{-1}` so the other nodes
//! move along. Monomials are processed by increasing number of `A^{-1}`
//! factors, which is well defined since the `A`'s are independent.

use std::collections::{BTreeMap, BTreeSet};

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::qtorus::{YMonomial, YPoly};
use crate::quiver::Vertex;

/// Upper bound on the number of distinct monomials before giving up.
pub const FM_MONOMIAL_BUDGET: usize = 50_000;

#[derive(Debug, Clone)]
struct Slot {
    depth: usize,
    total: i64,
    colored: Vec<i64>,
}

/// `A_{j,q^s}`; requires `(j, s) ∈ Î` so that both `Y` factors are in the
/// image of the embedding.
fn a_factor(cartan: &CartanData, j: usize, s: i64) -> Result<YMonomial> {
    Vertex::new(j, s).check(cartan)?;
    let mut pairs = vec![((j, s + 1), 1), ((j, s - 1), 1)];
    for k in cartan.neighbors(j)? {
        pairs.push(((k, s), -1));
    }
    Ok(YMonomial::from_pairs(pairs))
}

/// Splits a multiset of levels into `q`-strings `{s, s+2, …}` in general
/// position, taking longest strings from the bottom.
fn strings(mut levels: BTreeMap<i64, i32>) -> Vec<(i64, usize)> {
    let mut out = Vec::new();
    while let Some((&start, _)) = levels.iter().next() {
        let mut len = 0usize;
        let mut s = start;
        while let Some(count) = levels.get_mut(&s) {
            *count -= 1;
            if *count == 0 {
                levels.remove(&s);
            }
            len += 1;
            s += 2;
        }
        out.push((start, len));
    }
    out
}

/// `sl2` expansion of the `j`-part: lists of `A_{j,·}` levels to divide by.
fn sl2_expansion(m: &YMonomial, j: usize) -> Vec<Vec<i64>> {
    let levels: BTreeMap<i64, i32> = m.part(j).entries().map(|((_, s), e)| (s, e)).collect();
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for (start, len) in strings(levels) {
        let top = start + 2 * len as i64 - 1;
        let mut next = Vec::new();
        for prefix in &out {
            for l in 0..=len {
                let mut choice = prefix.clone();
                choice.extend((0..l as i64).map(|m| top - 2 * m));
                next.push(choice);
            }
        }
        out = next;
    }
    out
}

/// The `q`-character of `L(Y_{i,q^{r+1}})`.
pub fn classical_fm_qchar(cartan: &CartanData, i: usize, r: i64) -> Result<YPoly> {
    classical_fm_with_budget(cartan, i, r, FM_MONOMIAL_BUDGET)
}

pub fn classical_fm_with_budget(
    cartan: &CartanData,
    i: usize,
    r: i64,
    budget: usize,
) -> Result<YPoly> {
    Vertex::new(i, r).check(cartan)?;
    let rank = cartan.rank();
    let start = YMonomial::var(i, r + 1);
    let mut slots: BTreeMap<YMonomial, Slot> = BTreeMap::new();
    slots.insert(
        start.clone(),
        Slot {
            depth: 0,
            total: 1,
            colored: vec![0; rank],
        },
    );
    let mut queue: BTreeSet<(usize, YMonomial)> = BTreeSet::new();
    queue.insert((0, start));

    while let Some((depth, m)) = queue.pop_first() {
        for j in 1..=rank {
            let slot = &slots[&m];
            let missing = slot.total - slot.colored[j - 1];
            if missing <= 0 {
                continue;
            }
            if !m.is_dominant_at(j) {
                return Err(Error::FrenkelMukhin(format!(
                    "{m} is not {j}-dominant but only {} of {} copies are covered",
                    slot.colored[j - 1],
                    slot.total
                )));
            }
            for levels in sl2_expansion(&m, j) {
                let mut next = m.clone();
                for &s in &levels {
                    next = next.mul(&a_factor(cartan, j, s)?.inv());
                }
                let next_depth = depth + levels.len();
                let entry = slots.entry(next.clone()).or_insert_with(|| {
                    queue.insert((next_depth, next.clone()));
                    Slot {
                        depth: next_depth,
                        total: 0,
                        colored: vec![0; rank],
                    }
                });
                debug_assert_eq!(entry.depth, next_depth);
                entry.colored[j - 1] += missing;
                entry.total = entry.total.max(entry.colored[j - 1]);
            }
            if slots.len() > budget {
                return Err(Error::FrenkelMukhin(format!(
                    "more than {budget} monomials"
                )));
            }
        }
    }

    let mut out = YPoly::zero();
    for (m, slot) in slots {
        out.add_term(m, slot.total);
    }
    Ok(out)
}

/// Number of `A^{-1}` factors in `ratio`, when it is a product of
/// `A_{j,q^s}^{-1}` with `(j, s) ∈ Î`; `None` otherwise.
pub fn a_ladder_depth(cartan: &CartanData, ratio: &YMonomial) -> Option<usize> {
    let mut rest = ratio.clone();
    let mut depth = 0usize;
    // The highest Y factor can only come from the top of some A_{j,q^{L-1}}.
    while let Some(((j, top), e)) = rest.entries().max_by_key(|&((j, s), _)| (s, j)) {
        if e > 0 {
            return None;
        }
        let a = a_factor(cartan, j, top - 1).ok()?;
        rest = rest.mul(&a.pow(-e));
        depth += (-e) as usize;
    }
    Some(depth)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(label: &str) -> CartanData {
        CartanData::from_label(label).unwrap()
    }

    #[test]
    fn sl2_fundamental() {
        let q = classical_fm_qchar(&cd("A1"), 1, -2).unwrap();
        let mut expected = YPoly::zero();
        expected.add_term(YMonomial::var(1, -1), 1);
        expected.add_term(YMonomial::from_pairs([((1, 1), -1)]), 1);
        assert_eq!(q, expected);
    }

    #[test]
    fn sl3_fundamental() {
        let q = classical_fm_qchar(&cd("A2"), 1, 0).unwrap();
        let mut expected = YPoly::zero();
        expected.add_term(YMonomial::var(1, 1), 1);
        expected.add_term(YMonomial::from_pairs([((1, 3), -1), ((2, 2), 1)]), 1);
        expected.add_term(YMonomial::from_pairs([((2, 4), -1)]), 1);
        assert_eq!(q, expected);
    }

    #[test]
    fn dimensions() {
        // Type A: binomial(n+1, i). D4: 8 for the legs, 29 for the trivalent node.
        for (label, i, dim) in [
            ("A3", 2, 6),
            ("A4", 2, 10),
            ("A4", 3, 10),
            ("D4", 1, 8),
            ("D4", 3, 8),
            ("D4", 2, 29),
        ] {
            let c = cd(label);
            let r = i64::from(c.parity(i));
            let q = classical_fm_qchar(&c, i, r).unwrap();
            let total: i64 = q.terms().map(|(_, k)| k).sum();
            assert_eq!(total, dim, "{label} node {i}");
        }
    }

    #[test]
    fn type_a_is_multiplicity_free() {
        for label in ["A1", "A2", "A3", "A4", "A5"] {
            let c = cd(label);
            for i in 1..=c.rank() {
                let q = classical_fm_qchar(&c, i, i64::from(c.parity(i))).unwrap();
                assert!(q.terms().all(|(_, k)| k == 1));
            }
        }
    }

    #[test]
    fn budget_and_parity() {
        let c = cd("D4");
        assert!(matches!(
            classical_fm_with_budget(&c, 2, 1, 3),
            Err(Error::FrenkelMukhin(_))
        ));
        assert!(classical_fm_qchar(&c, 2, 0).is_err());
    }

    #[test]
    fn ladders() {
        let c = cd("A2");
        let q = classical_fm_qchar(&c, 1, 0).unwrap();
        let lead = YMonomial::var(1, 1);
        let mut depths: Vec<usize> = q
            .terms()
            .map(|(m, _)| a_ladder_depth(&c, &m.mul(&lead.inv())).unwrap())
            .collect();
        depths.sort_unstable();
        assert_eq!(depths, vec![0, 1, 2]);
        assert_eq!(a_ladder_depth(&c, &YMonomial::var(1, 1)), None);
        assert_eq!(a_ladder_depth(&c, &YMonomial::var(1, 3).inv()), None);
    }

    #[test]
    fn string_splitting() {
        let levels = BTreeMap::from([(0, 1), (2, 2), (4, 1), (8, 1)]);
        assert_eq!(strings(levels), vec![(0, 3), (2, 1), (8, 1)]);
    }
}
