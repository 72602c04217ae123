//! Commutative Laurent polynomials in the `z` variables.
//!
//! This is the `t = 1` world: the classical cluster engine works here, and
//! quantum results are compared against it after specialization.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::expvec::ExpVector;
use crate::error::{Error, Result};
use crate::quiver::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LaurentPoly(BTreeMap<ExpVector, i64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(ExpVector::zero())
    }

    pub fn monomial(u: ExpVector) -> Self {
        Self::term(u, 1)
    }

    pub fn var(v: Vertex) -> Self {
        Self::monomial(ExpVector::unit(v))
    }

    pub fn term(u: ExpVector, c: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(u, c);
        out
    }

    pub fn add_term(&mut self, u: ExpVector, c: i64) {
        if c == 0 {
            return;
        }
        match self.0.get_mut(&u) {
            Some(slot) => {
                *slot += c;
                if *slot == 0 {
                    self.0.remove(&u);
                }
            }
            None => {
                self.0.insert(u, c);
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

    pub fn coeff(&self, u: &ExpVector) -> i64 {
        self.0.get(u).copied().unwrap_or(0)
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExpVector, i64)> {
        self.0.iter().rev().map(|(u, &c)| (u, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (u, c) in other.terms() {
            out.add_term(u.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (u, x) in self.terms() {
            out.add_term(u.clone(), x * c);
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

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiplication by the monomial `z^u`.
    pub fn shift(&self, u: &ExpVector) -> Self {
        Self(self.0.iter().map(|(w, &c)| (w.add(u), c)).collect())
    }

    /// Exact quotient `self / d`; errors with the remainder when `d` does
    /// not divide.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (lead_exp, lead_c) = match d.0.iter().next_back() {
            Some((u, &c)) => (u.clone(), c),
            None => return Err(Error::DivisionByZero),
        };
        let floor = match (self.0.keys().next(), d.0.keys().next()) {
            (Some(a), Some(b)) => a.sub(b),
            _ => return Ok(Self::zero()),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let mut steps = 0usize;
        while let Some((u, &c)) = rem.0.iter().next_back() {
            let q_exp = u.sub(&lead_exp);
            steps += 1;
            if q_exp < floor || c % lead_c != 0 || steps > super::DIVISION_STEP_LIMIT {
                return Err(Error::InexactDivision {
                    remainder: rem.to_string(),
                });
            }
            let q = Self::term(q_exp, c / lead_c);
            rem = rem.sub(&d.mul(&q));
            quot = quot.add(&q);
        }
        Ok(quot)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(u, c)| match (c, u.is_zero()) {
                (1, _) => u.to_string(),
                (c, true) => c.to_string(),
                (c, false) => format!("{c} {u}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: usize, r: i64) -> LaurentPoly {
        LaurentPoly::var(Vertex::new(i, r))
    }

    #[test]
    fn baxter_exchange_divides() {
        let num = z(1, -2).add(&z(1, 2));
        let q = num.exact_div(&z(1, 0)).unwrap();
        assert_eq!(q.mul(&z(1, 0)), num);
        assert_eq!(q.len(), 2);
    }

    #[test]
    fn binomial_division() {
        let a = z(1, 0).add(&z(2, 1));
        let b = z(1, 0).sub(&z(2, 1).scale(2)).add(&LaurentPoly::one());
        let prod = a.mul(&b).mul(&a);
        assert_eq!(prod.exact_div(&a).unwrap(), a.mul(&b));
        assert_eq!(a.pow(2).exact_div(&a).unwrap(), a);
    }

    #[test]
    fn inexact_reports_remainder() {
        let a = z(1, 0).add(&LaurentPoly::one());
        let err = LaurentPoly::one().add(&z(1, 0).scale(2)).exact_div(&a);
        assert!(matches!(err, Err(Error::InexactDivision { .. })));
        assert_eq!(
            a.exact_div(&LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }
}
