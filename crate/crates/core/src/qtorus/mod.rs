//! The quantum torus generated by the `z_{i,r}`, `(i,r) ∈ Î`.
//!
//! The generators `t`-commute as `z_{i,r} ∗ z_{j,s} = t^{F_ij(s-r)} z_{j,s} ∗ z_{i,r}`.
//! With the skew form `Λ((i,r),(j,s)) = F_ij(s-r)` extended bilinearly to
//! exponent vectors, the commutative monomials multiply by
//!
//! ```text
//! z^e ∗ z^f = v^{Λ(e,f)} z^{e+f},     v = t^{1/2}.
//! ```
//!
//! Elements are stored in the commutative-monomial basis, so the bar
//! involution only conjugates coefficients. The `Y` variables embed through
//! `J(Y_{i,q^s}) = z_{i,s-1} z_{i,s+1}^{-1}`.

mod coeff;
mod element;
mod expvec;
mod laurent;
mod weight;
mod ymono;

use std::sync::Arc;

pub use coeff::TCoeff;
pub use element::TorusElement;
pub use expvec::ExpVector;
pub use laurent::LaurentPoly;
pub use weight::{Weight, WeightExpr};
pub use ymono::{YMonomial, YPoly};

use crate::cartan::{CartanData, FormTables};
use crate::error::{Error, Result};
use crate::quiver::Vertex;

/// Upper bound on reduction steps in exact division. Exact quotients finish
/// after one step per quotient term; hitting the bound means the division
/// does not terminate.
pub(crate) const DIVISION_STEP_LIMIT: usize = 200_000;

/// Product and skew-form context for one Cartan datum.
#[derive(Debug, Clone)]
pub struct QuantumTorus {
    cartan: Arc<CartanData>,
}

impl QuantumTorus {
    pub fn new(cartan: Arc<CartanData>) -> Self {
        Self { cartan }
    }

    pub fn cartan(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    fn tables_for_span(&self, span: i64) -> Arc<FormTables> {
        self.cartan.tables(span.max(1) as usize)
    }

    fn lambda_with(tables: &FormTables, e: &ExpVector, f: &ExpVector) -> i64 {
        let mut acc = 0i64;
        for &(a, x) in e.entries() {
            for &(b, y) in f.entries() {
                let value = tables.f_form(a.node - 1, b.node - 1, b.level - a.level);
                if value != 0 {
                    acc += i64::from(x) * i64::from(y) * value;
                }
            }
        }
        acc
    }

    /// `Λ(e, f)`.
    pub fn lambda_of(&self, e: &ExpVector, f: &ExpVector) -> i64 {
        let span = match (e.level_span(), f.level_span()) {
            (Some(a), Some(b)) => a.1.max(b.1) - a.0.min(b.0),
            _ => return 0,
        };
        Self::lambda_with(&self.tables_for_span(span), e, f)
    }

    /// `Λ` on basis vectors: `Λ((i,r),(j,s)) = F_ij(s - r)`.
    pub fn lambda_vertices(&self, a: Vertex, b: Vertex) -> i64 {
        self.lambda_of(&ExpVector::unit(a), &ExpVector::unit(b))
    }

    /// The `∗` product.
    pub fn multiply(&self, a: &TorusElement, b: &TorusElement) -> TorusElement {
        let span = match (a.level_span(), b.level_span()) {
            (Some(x), Some(y)) => x.1.max(y.1) - x.0.min(y.0),
            _ if a.is_zero() || b.is_zero() => return TorusElement::zero(),
            _ => 0,
        };
        let tables = self.tables_for_span(span);
        let mut out = TorusElement::zero();
        for (e, x) in a.terms() {
            for (f, y) in b.terms() {
                let k = Self::lambda_with(&tables, e, f);
                out.add_term(e.add(f), &(x * y).shift(k as i32));
            }
        }
        out
    }

    /// `a ∗ a ∗ ... ∗ a` (`n` factors, `n ≥ 0`).
    pub fn power(&self, a: &TorusElement, n: u32) -> TorusElement {
        let mut out = TorusElement::one();
        let mut base = a.clone();
        let mut n = n;
        // Powers of a single element commute, so square-and-multiply is fine.
        while n > 0 {
            if n & 1 == 1 {
                out = self.multiply(&out, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.multiply(&base, &base);
            }
        }
        out
    }

    /// `a ∗ b - b ∗ a`.
    pub fn commutator(&self, a: &TorusElement, b: &TorusElement) -> TorusElement {
        self.multiply(a, b).sub(&self.multiply(b, a))
    }

    /// `a ∗ b == v^k · b ∗ a`.
    pub fn v_commutes(&self, a: &TorusElement, b: &TorusElement, k: i32) -> bool {
        self.multiply(a, b) == self.multiply(b, a).shift_v(k)
    }

    /// The unique `x` with `d ∗ x = a`.
    ///
    /// Works by repeatedly cancelling the leading term of the remainder
    /// against the leading term of `d`. The monomial order is compatible
    /// with the product, so a quotient exists exactly when the remainder
    /// reaches zero before a candidate falls below `min(a) - min(d)`.
    pub fn exact_left_divide(&self, a: &TorusElement, d: &TorusElement) -> Result<TorusElement> {
        let (lead_exp, lead_c) = match d.leading() {
            Some((u, c)) => (u.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let floor = match (a.trailing(), d.trailing()) {
            (Some((x, _)), Some((y, _))) => x.sub(y),
            _ => return Ok(TorusElement::zero()),
        };
        let span = match (a.level_span(), d.level_span()) {
            (Some(x), Some(y)) => {
                // Quotient monomials live within the combined span.
                x.1.max(y.1) - x.0.min(y.0)
            }
            _ => 0,
        };
        let tables = self.tables_for_span(2 * span);
        let mut rem = a.clone();
        let mut quot = TorusElement::zero();
        let mut steps = 0usize;
        while let Some((u, c)) = rem.leading() {
            steps += 1;
            let q_exp = u.sub(&lead_exp);
            if q_exp < floor || steps > DIVISION_STEP_LIMIT {
                return Err(inexact(&rem));
            }
            let twist = Self::lambda_with(&tables, &lead_exp, &q_exp);
            let q_c = c
                .exact_div(&lead_c)
                .map_err(|_| inexact(&rem))?
                .shift(-(twist as i32));
            let q = TorusElement::term(q_exp, q_c);
            rem = rem.sub(&self.multiply(d, &q));
            quot = quot.add(&q);
        }
        Ok(quot)
    }

    /// `J` on a commutative `Y` monomial: `Y_{i,q^s} ↦ z_{i,s-1} z_{i,s+1}^{-1}`.
    pub fn embed_y(&self, m: &YMonomial) -> Result<TorusElement> {
        Ok(TorusElement::monomial(self.embed_y_exponent(m)?))
    }

    fn embed_y_exponent(&self, m: &YMonomial) -> Result<ExpVector> {
        let mut pairs = Vec::new();
        for ((i, s), e) in m.entries() {
            let low = Vertex::new(i, s - 1);
            low.check(&self.cartan)?;
            pairs.push((low, e));
            pairs.push((Vertex::new(i, s + 1), -e));
        }
        Ok(ExpVector::from_pairs(pairs))
    }

    /// `J` on a polynomial in the `Y` variables (coefficients are `t`-free).
    pub fn embed_y_poly(&self, p: &YPoly) -> Result<TorusElement> {
        let mut out = TorusElement::zero();
        for (m, c) in p.terms() {
            out.add_term(self.embed_y_exponent(m)?, &TCoeff::monomial(c, 0));
        }
        Ok(out)
    }

    /// Inverse of `J` on monomials, when the exponent vector is in its image.
    pub fn pull_back_y(&self, u: &ExpVector) -> Option<YMonomial> {
        // Along a column, w(i,r) = y(i,r+1) - y(i,r-1), so the Y exponents
        // are running sums from the bottom and must close up at the top.
        let mut pairs = Vec::new();
        for node in 1..=self.cartan.rank() {
            let column: Vec<(i64, i32)> = u
                .entries()
                .iter()
                .filter(|(v, _)| v.node == node)
                .map(|&(v, e)| (v.level, e))
                .collect();
            let (Some(&(low, _)), Some(&(high, _))) = (column.first(), column.last()) else {
                continue;
            };
            if column
                .iter()
                .any(|&(r, _)| !Vertex::new(node, r).in_component(&self.cartan))
            {
                return None;
            }
            let mut acc = 0i32;
            let mut level = low;
            while level <= high {
                acc += u.get(Vertex::new(node, level));
                if acc != 0 {
                    pairs.push(((node, level + 1), acc));
                }
                level += 2;
            }
            if acc != 0 {
                return None;
            }
        }
        Some(YMonomial::from_pairs(pairs))
    }

    /// Exponents of `A_{i,r} = Y_{i,q^{r+1}} Y_{i,q^{r-1}} Π_{j~i} Y_{j,q^r}^{-1}`.
    pub fn a_monomial(&self, i: usize, r: i64) -> Result<YMonomial> {
        a_monomial(&self.cartan, i, r)
    }

    /// The weight character `χ(z^u) = [Σ -u_{i,r} r/2 ω_i]`, `χ(v) = 1`.
    pub fn weight_character(&self, a: &TorusElement) -> WeightExpr {
        let rank = self.cartan.rank();
        let mut out = WeightExpr::zero();
        for (u, c) in a.terms() {
            out.add_term(monomial_weight(rank, u), c.eval_one());
        }
        out
    }
}

/// `χ` of a single commutative monomial.
pub fn monomial_weight(rank: usize, u: &ExpVector) -> Weight {
    let mut doubled = vec![0i64; rank];
    for &(v, e) in u.entries() {
        doubled[v.node - 1] -= i64::from(e) * v.level;
    }
    Weight::from_doubled(doubled)
}

/// Exponents of `A_{i,r}`; requires `(i, r-1) ∈ Î`.
pub fn a_monomial(cartan: &CartanData, i: usize, r: i64) -> Result<YMonomial> {
    Vertex::new(i, r - 1).check(cartan)?;
    let mut pairs = vec![((i, r + 1), 1), ((i, r - 1), 1)];
    for j in cartan.neighbors(i)? {
        pairs.push(((j, r), -1));
    }
    Ok(YMonomial::from_pairs(pairs))
}

fn inexact(rem: &TorusElement) -> Error {
    Error::InexactDivision {
        remainder: rem.to_string(),
    }
}

#[cfg(test)]
mod tests;
