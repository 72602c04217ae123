//! Elements of the quantum torus, written in the commutative-monomial basis.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::coeff::TCoeff;
use super::expvec::ExpVector;
use super::laurent::LaurentPoly;
use crate::quiver::Vertex;

/// `Σ_u P_u(v) z^u` where `z^u` is the commutative monomial. Only nonzero
/// coefficients are stored.
///
/// Everything that does not involve the product lives here; the product
/// needs the skew form and is provided by [`super::QuantumTorus`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct TorusElement(BTreeMap<ExpVector, TCoeff>);

impl TorusElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(ExpVector::zero())
    }

    pub fn monomial(u: ExpVector) -> Self {
        Self::term(u, TCoeff::one())
    }

    /// The generator `z_{i,r}`.
    pub fn var(v: Vertex) -> Self {
        Self::monomial(ExpVector::unit(v))
    }

    pub fn term(u: ExpVector, c: TCoeff) -> Self {
        let mut out = Self::zero();
        out.add_term(u, &c);
        out
    }

    pub fn add_term(&mut self, u: ExpVector, c: &TCoeff) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&u) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.0.remove(&u);
                }
            }
            None => {
                self.0.insert(u, c.clone());
            }
        }
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

    pub fn coeff(&self, u: &ExpVector) -> TCoeff {
        self.0.get(u).cloned().unwrap_or_default()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExpVector, &TCoeff)> {
        self.0.iter().rev()
    }

    pub fn leading(&self) -> Option<(&ExpVector, &TCoeff)> {
        self.0.iter().next_back()
    }

    pub fn trailing(&self) -> Option<(&ExpVector, &TCoeff)> {
        self.0.iter().next()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (u, c) in other.terms() {
            out.add_term(u.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|(u, c)| (u.clone(), -c)).collect())
    }

    /// Multiplication by a central scalar.
    pub fn scale(&self, c: &TCoeff) -> Self {
        let mut out = Self::zero();
        for (u, x) in self.terms() {
            out.add_term(u.clone(), &(x * c));
        }
        out
    }

    /// Multiplication by `v^k`.
    pub fn shift_v(&self, k: i32) -> Self {
        Self(
            self.0
                .iter()
                .map(|(u, c)| (u.clone(), c.shift(k)))
                .collect(),
        )
    }

    /// The bar involution: `v ↦ v⁻¹` on coefficients, commutative monomials
    /// fixed.
    pub fn bar(&self) -> Self {
        Self(self.0.iter().map(|(u, c)| (u.clone(), c.bar())).collect())
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.0.values().all(TCoeff::is_bar_invariant)
    }

    /// Every coefficient lies in `N[v^{±1}]`.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.0.values().all(TCoeff::is_nonnegative)
    }

    /// Every coefficient uses only even or only odd powers of `v`.
    pub fn has_pure_parity_coefficients(&self) -> bool {
        self.0.values().all(TCoeff::has_pure_parity)
    }

    /// Every coefficient is exactly `1`.
    pub fn is_multiplicity_free_flat(&self) -> bool {
        self.0.values().all(TCoeff::is_one)
    }

    /// Specialization `t^{1/2} = 1`.
    pub fn evaluate_t1(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (u, c) in self.terms() {
            out.add_term(u.clone(), c.eval_one());
        }
        out
    }

    /// Lifts a commutative polynomial with `t`-free coefficients.
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (u, c) in p.terms() {
            out.add_term(u.clone(), &TCoeff::monomial(c, 0));
        }
        out
    }

    /// `(min level, max level)` over all monomials.
    pub fn level_span(&self) -> Option<(i64, i64)> {
        self.0
            .keys()
            .filter_map(ExpVector::level_span)
            .reduce(|a, b| (a.0.min(b.0), a.1.max(b.1)))
    }

    /// Single rendered terms: one entry per `(monomial, power of v)`.
    pub fn flat_terms(&self) -> Vec<(i32, i64, &ExpVector)> {
        let mut out = Vec::new();
        for (u, c) in self.terms() {
            for (k, x) in c.terms() {
                out.push((k, x, u));
            }
        }
        out
    }
}

/// `t^{k/2}` prefix, then `z[i,r]^e` factors in reading order; terms are
/// joined by ` + `, leading monomial first.
impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .flat_terms()
            .into_iter()
            .map(|(k, c, u)| {
                let mut pieces = Vec::new();
                if c != 1 {
                    pieces.push(c.to_string());
                }
                if k != 0 {
                    pieces.push(format!("t^{{{k}/2}}"));
                }
                if !u.is_zero() || pieces.is_empty() {
                    pieces.push(u.to_string());
                }
                pieces.join(" ")
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: usize, r: i64) -> ExpVector {
        ExpVector::unit(Vertex::new(i, r))
    }

    #[test]
    fn rendering() {
        let mut a = TorusElement::term(z(1, -2).sub(&z(1, 0)), TCoeff::v_pow(-1));
        a.add_term(z(1, 2).sub(&z(1, 0)), &TCoeff::monomial(2, 0));
        a.add_term(ExpVector::zero(), &TCoeff::one());
        assert_eq!(
            a.to_string(),
            "t^{-1/2} z[1,0]^-1 z[1,-2]^1 + 1 + 2 z[1,2]^1 z[1,0]^-1"
        );
        assert_eq!(TorusElement::zero().to_string(), "0");
        assert_eq!(TorusElement::one().to_string(), "1");
    }

    #[test]
    fn bar_and_specialization() {
        let a = TorusElement::term(z(1, 0), TCoeff::from_terms([(1, 1), (-1, 1)]));
        assert!(a.is_bar_invariant());
        let b = TorusElement::term(z(1, 0), TCoeff::v_pow(1));
        assert_eq!(b.bar(), TorusElement::term(z(1, 0), TCoeff::v_pow(-1)));
        assert_eq!(a.evaluate_t1(), LaurentPoly::term(z(1, 0), 2));
        assert!(a.has_pure_parity_coefficients());
        assert!(!a.is_multiplicity_free_flat());
    }

    #[test]
    fn cancellation() {
        let a = TorusElement::var(Vertex::new(1, 0));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.add(&a).coeff(&z(1, 0)), TCoeff::monomial(2, 0));
    }
}
