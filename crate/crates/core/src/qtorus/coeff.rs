//! Laurent polynomials in `v = t^{1/2}` with integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Σ_k c_k v^k`, stored densely from the lowest nonzero power.
///
/// The zero polynomial has `low == 0` and no coefficients; otherwise the
/// first and last stored coefficients are nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct TCoeff {
    low: i32,
    coeffs: Vec<i64>,
}

impl TCoeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · v^k`.
    pub fn monomial(c: i64, k: i32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Self {
                low: k,
                coeffs: vec![c],
            }
        }
    }

    /// `v^k`.
    pub fn v_pow(k: i32) -> Self {
        Self::monomial(1, k)
    }

    /// Builds from `(power, coefficient)` pairs; repeated powers add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out += &Self::monomial(c, k);
        }
        out
    }

    fn from_raw(low: i32, coeffs: Vec<i64>) -> Self {
        let mut out = Self { low, coeffs };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    /// Lowest power with a nonzero coefficient.
    pub fn min_power(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest power with a nonzero coefficient.
    pub fn max_power(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, k: i32) -> i64 {
        let idx = k - self.low;
        if idx < 0 {
            return 0;
        }
        self.coeffs.get(idx as usize).copied().unwrap_or(0)
    }

    /// Nonzero `(power, coefficient)` pairs in increasing power.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(idx, &c)| (self.low + idx as i32, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// `Some((c, k))` if this is the single term `c v^k`.
    pub fn as_monomial(&self) -> Option<(i64, i32)> {
        (self.coeffs.len() == 1).then(|| (self.coeffs[0], self.low))
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_raw(self.low, self.coeffs.iter().map(|&x| x * c).collect())
    }

    /// `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let high = self.max_power().unwrap();
        Self {
            low: -high,
            coeffs: self.coeffs.iter().rev().copied().collect(),
        }
    }

    /// `v = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `v = -1`.
    pub fn eval_minus_one(&self) -> i64 {
        self.terms()
            .map(|(k, c)| if k.rem_euclid(2) == 0 { c } else { -c })
            .sum()
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Supported on powers of a single parity (vacuously true for zero).
    pub fn has_pure_parity(&self) -> bool {
        let mut parities = self.terms().map(|(k, _)| k.rem_euclid(2));
        match parities.next() {
            None => true,
            Some(p) => parities.all(|q| q == p),
        }
    }

    /// Exact quotient `self / d` in `Z[v, v⁻¹]`.
    pub fn exact_div(&self, d: &TCoeff) -> Result<TCoeff> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Long division from the top, on the dense coefficient vectors.
        let dn = d.coeffs.len();
        let lead = *d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dn {
            return Err(inexact(self));
        }
        let qlen = rem.len() - dn + 1;
        let mut q = vec![0i64; qlen];
        for qi in (0..qlen).rev() {
            let top = rem[qi + dn - 1];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return Err(inexact(self));
            }
            let factor = top / lead;
            q[qi] = factor;
            for (di, &dc) in d.coeffs.iter().enumerate() {
                rem[qi + di] -= factor * dc;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(inexact(self));
        }
        Ok(Self::from_raw(self.low - d.low, q))
    }
}

fn inexact(p: &TCoeff) -> Error {
    Error::InexactDivision {
        remainder: p.to_string(),
    }
}

impl Add<&TCoeff> for &TCoeff {
    type Output = TCoeff;

    fn add(self, rhs: &TCoeff) -> TCoeff {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.max_power().unwrap().max(rhs.max_power().unwrap());
        let mut coeffs = vec![0i64; (high - low + 1) as usize];
        for (k, c) in self.terms().chain(rhs.terms()) {
            coeffs[(k - low) as usize] += c;
        }
        TCoeff::from_raw(low, coeffs)
    }
}

impl AddAssign<&TCoeff> for TCoeff {
    fn add_assign(&mut self, rhs: &TCoeff) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let rhs_high = rhs.max_power().unwrap();
        if rhs.low < self.low {
            let pad = (self.low - rhs.low) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(0, pad));
            self.low = rhs.low;
        }
        let need = (rhs_high - self.low + 1) as usize;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, 0);
        }
        let off = (rhs.low - self.low) as usize;
        for (idx, &c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[off + idx] += c;
        }
        self.normalize();
    }
}

impl Sub<&TCoeff> for &TCoeff {
    type Output = TCoeff;

    fn sub(self, rhs: &TCoeff) -> TCoeff {
        self + &(-rhs)
    }
}

impl Neg for &TCoeff {
    type Output = TCoeff;

    fn neg(self) -> TCoeff {
        TCoeff {
            low: self.low,
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

impl Mul<&TCoeff> for &TCoeff {
    type Output = TCoeff;

    fn mul(self, rhs: &TCoeff) -> TCoeff {
        if self.is_zero() || rhs.is_zero() {
            return TCoeff::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, &x) in self.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (b, &y) in rhs.coeffs.iter().enumerate() {
                coeffs[a + b] += x * y;
            }
        }
        TCoeff::from_raw(self.low + rhs.low, coeffs)
    }
}

/// Renders as a sum of `c*v^k` terms, e.g. `v^-1 + 2 + v`.
impl fmt::Display for TCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (mag, k) {
                (m, 0) => write!(f, "{m}")?,
                (1, 1) => f.write_str("v")?,
                (1, k) => write!(f, "v^{k}")?,
                (m, 1) => write!(f, "{m}*v")?,
                (m, k) => write!(f, "{m}*v^{k}")?,
            }
        }
        Ok(())
    }
}
