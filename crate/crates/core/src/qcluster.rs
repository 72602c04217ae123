//! Quantum seeds and the two-term quantum exchange relation.
//!
//! Cluster variables are kept as elements of the initial quantum torus. For
//! a mutation at `k` with column `b_{·k}` of the current exchange matrix put
//!
//! ```text
//! c+ = Σ_{b_ik > 0} b_ik e_i,        c- = Σ_{b_ik < 0} -b_ik e_i,
//! M(c) = v^{-Σ_{a<b} c_a c_b Λ(a,b)} X_{a_1}^{c_1} ∗ X_{a_2}^{c_2} ∗ ...,
//! S = v^{Λ(e_k, c+)} M(c+) + v^{Λ(e_k, c-)} M(c-),
//! ```
//!
//! with `Λ` the skew form of the current cluster. The new variable is the
//! unique `X'_k` with `X_k ∗ X'_k = S`, found by exact division. Every new
//! variable is checked for bar invariance before the seed is returned.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::cartan::CartanData;
use crate::compat::{build_lambda, mutate_lambda, require_compatible};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::qtorus::{ExpVector, LaurentPoly, QuantumTorus, TCoeff, TorusElement};
use crate::quiver::{ExchangeMatrix, QuiverSlice, Vertex, Window};

/// A quantum seed over a fixed slice. Cheap to clone: variables are shared.
#[derive(Debug, Clone)]
pub struct QuantumSeed {
    torus: QuantumTorus,
    slice: Arc<QuiverSlice>,
    vars: Vec<Arc<TorusElement>>,
    lambda: IntMatrix,
    b_matrix: ExchangeMatrix,
    history: Vec<Vertex>,
}

impl QuantumSeed {
    /// The seed `X_{(i,r)} = z_{i,r}` with `Λ` from the skew form.
    pub fn initial(cartan: Arc<CartanData>, slice: QuiverSlice) -> Result<Self> {
        let lambda = build_lambda(&cartan, &slice);
        require_compatible(slice.b_matrix(), &lambda)?;
        let vars = slice
            .vertices()
            .iter()
            .map(|&v| Arc::new(TorusElement::var(v)))
            .collect();
        Ok(Self {
            torus: QuantumTorus::new(cartan),
            b_matrix: slice.b_matrix().clone(),
            slice: Arc::new(slice),
            vars,
            lambda,
            history: Vec::new(),
        })
    }

    pub fn torus(&self) -> &QuantumTorus {
        &self.torus
    }

    pub fn slice(&self) -> &QuiverSlice {
        &self.slice
    }

    pub fn lambda(&self) -> &IntMatrix {
        &self.lambda
    }

    pub fn b_matrix(&self) -> &ExchangeMatrix {
        &self.b_matrix
    }

    pub fn history(&self) -> &[Vertex] {
        &self.history
    }

    /// Current variables, in slice order.
    pub fn vars(&self) -> impl Iterator<Item = (Vertex, &TorusElement)> {
        self.slice
            .vertices()
            .iter()
            .copied()
            .zip(self.vars.iter().map(|x| x.as_ref()))
    }

    pub fn var(&self, v: Vertex) -> Result<&TorusElement> {
        let idx = self.slice.index_of(v).ok_or(Error::VertexNotInSlice(v))?;
        Ok(&self.vars[idx])
    }

    /// `M(c)` for a nonnegative exponent vector over slice indices.
    fn normalized_monomial(&self, c: &[(usize, u32)]) -> TorusElement {
        let mut twist = 0i64;
        for (p, &(a, ca)) in c.iter().enumerate() {
            for &(b, cb) in &c[p + 1..] {
                twist += i64::from(ca) * i64::from(cb) * self.lambda[(a, b)];
            }
        }
        let mut out = TorusElement::one();
        for &(a, ca) in c {
            let factor = self.torus.power(&self.vars[a], ca);
            out = self.torus.multiply(&out, &factor);
        }
        out.shift_v(-(twist as i32))
    }

    /// The exchange numerator `S` for column `k`.
    pub fn exchange_numerator(&self, k: usize) -> Result<TorusElement> {
        let kr = *self
            .b_matrix
            .ex_rows()
            .get(k)
            .ok_or(Error::NotExchangeable {
                index: k,
                columns: self.b_matrix.cols(),
            })?;
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for i in 0..self.b_matrix.rows() {
            let b = self.b_matrix.get(i, k);
            if b > 0 {
                plus.push((i, b as u32));
            } else if b < 0 {
                minus.push((i, (-b) as u32));
            }
        }
        let gamma = |c: &[(usize, u32)]| -> i64 {
            c.iter()
                .map(|&(a, ca)| i64::from(ca) * self.lambda[(kr, a)])
                .sum()
        };
        let left = self.normalized_monomial(&plus).shift_v(gamma(&plus) as i32);
        let right = self
            .normalized_monomial(&minus)
            .shift_v(gamma(&minus) as i32);
        Ok(left.add(&right))
    }

    /// Quantum mutation at an exchangeable vertex.
    pub fn mutate(&self, v: Vertex) -> Result<Self> {
        let k = self.slice.column_of(v)?;
        let kr = self.b_matrix.ex_rows()[k];
        let numerator = self.exchange_numerator(k)?;
        let new_var = self
            .torus
            .exact_left_divide(&numerator, &self.vars[kr])
            .map_err(|e| match e {
                Error::InexactDivision { remainder } => Error::Invariant(format!(
                    "exchange numerator at {v} is not divisible by the current variable; remainder {remainder}"
                )),
                other => other,
            })?;
        if !new_var.is_bar_invariant() {
            return Err(Error::Invariant(format!(
                "mutated variable at {v} is not bar-invariant: {new_var}"
            )));
        }
        let lambda = mutate_lambda(&self.lambda, &self.b_matrix, k)?;
        let b_matrix = self.b_matrix.mutate(k)?;
        let mut vars = self.vars.clone();
        vars[kr] = Arc::new(new_var);
        let mut history = self.history.clone();
        history.push(v);
        Ok(Self {
            torus: self.torus.clone(),
            slice: Arc::clone(&self.slice),
            vars,
            lambda,
            b_matrix,
            history,
        })
    }

    /// Mutates along `path`, left to right.
    pub fn mutate_along(&self, path: &[Vertex]) -> Result<Self> {
        path.iter()
            .try_fold(self.clone(), |seed, &v| seed.mutate(v))
    }

    /// Checks `X_u ∗ X_w = t^{Λ(u,w)} X_w ∗ X_u` for every pair of current
    /// variables touched by `filter`; returns the first failing pair.
    pub fn check_commutation_where<F>(&self, filter: F) -> std::result::Result<(), (Vertex, Vertex)>
    where
        F: Fn(usize) -> bool,
    {
        let vs = self.slice.vertices();
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                if !filter(a) && !filter(b) {
                    continue;
                }
                let k = 2 * self.lambda[(a, b)];
                if !self
                    .torus
                    .v_commutes(&self.vars[a], &self.vars[b], k as i32)
                {
                    return Err((vs[a], vs[b]));
                }
            }
        }
        Ok(())
    }

    /// [`Self::check_commutation_where`] over all pairs.
    pub fn check_commutation(&self) -> std::result::Result<(), (Vertex, Vertex)> {
        self.check_commutation_where(|_| true)
    }

    /// Every variable has coefficients in `N[v^{±1}]` supported on a single
    /// parity of powers; returns the first offending vertex.
    pub fn check_positivity(&self) -> std::result::Result<(), Vertex> {
        for (v, x) in self.vars() {
            if !x.has_nonnegative_coefficients() || !x.has_pure_parity_coefficients() {
                return Err(v);
            }
        }
        Ok(())
    }

    /// Every variable is bar-invariant; returns the first offending vertex.
    pub fn check_bar_invariance(&self) -> std::result::Result<(), Vertex> {
        for (v, x) in self.vars() {
            if !x.is_bar_invariant() {
                return Err(v);
            }
        }
        Ok(())
    }

    /// All variables at `t = 1`.
    pub fn specialize(&self) -> Vec<(Vertex, LaurentPoly)> {
        self.vars().map(|(v, x)| (v, x.evaluate_t1())).collect()
    }
}

/// Free-function form of [`QuantumSeed::initial`].
pub fn initial_seed(cartan: Arc<CartanData>, slice: QuiverSlice) -> Result<QuantumSeed> {
    QuantumSeed::initial(cartan, slice)
}

/// A classical (`t = 1`) seed: commutative Laurent polynomials and `B̃`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalSeed {
    slice: Arc<QuiverSlice>,
    vars: Vec<LaurentPoly>,
    b_matrix: ExchangeMatrix,
}

impl ClassicalSeed {
    pub fn initial(slice: QuiverSlice) -> Self {
        let vars = slice
            .vertices()
            .iter()
            .map(|&v| LaurentPoly::var(v))
            .collect();
        Self {
            b_matrix: slice.b_matrix().clone(),
            slice: Arc::new(slice),
            vars,
        }
    }

    pub fn var(&self, v: Vertex) -> Result<&LaurentPoly> {
        let idx = self.slice.index_of(v).ok_or(Error::VertexNotInSlice(v))?;
        Ok(&self.vars[idx])
    }

    pub fn vars(&self) -> impl Iterator<Item = (Vertex, &LaurentPoly)> {
        self.slice.vertices().iter().copied().zip(self.vars.iter())
    }

    pub fn b_matrix(&self) -> &ExchangeMatrix {
        &self.b_matrix
    }

    /// `x_k x'_k = Π x_i^{[b_ik]+} + Π x_i^{[-b_ik]+}`.
    pub fn mutate(&self, v: Vertex) -> Result<Self> {
        let k = self.slice.column_of(v)?;
        let kr = self.b_matrix.ex_rows()[k];
        let mut plus = LaurentPoly::one();
        let mut minus = LaurentPoly::one();
        for i in 0..self.b_matrix.rows() {
            let b = self.b_matrix.get(i, k);
            if b > 0 {
                plus = plus.mul(&self.vars[i].pow(b as u32));
            } else if b < 0 {
                minus = minus.mul(&self.vars[i].pow((-b) as u32));
            }
        }
        let new_var = plus.add(&minus).exact_div(&self.vars[kr])?;
        let mut vars = self.vars.clone();
        vars[kr] = new_var;
        Ok(Self {
            slice: Arc::clone(&self.slice),
            vars,
            b_matrix: self.b_matrix.mutate(k)?,
        })
    }

    pub fn mutate_along(&self, path: &[Vertex]) -> Result<Self> {
        path.iter()
            .try_fold(self.clone(), |seed, &v| seed.mutate(v))
    }
}

/// Classical variables after mutating along `path` from the initial seed.
pub fn classical_mutate_along(
    slice: &QuiverSlice,
    path: &[Vertex],
) -> Result<Vec<(Vertex, LaurentPoly)>> {
    let seed = ClassicalSeed::initial(slice.clone()).mutate_along(path)?;
    Ok(seed.vars().map(|(v, p)| (v, p.clone())).collect())
}

/// Key of a cached seed: Cartan label, window and mutation path.
type CacheKey = (String, Window, Vec<Vertex>);

/// Memoizes seeds by path so that shared prefixes are mutated once.
///
/// Entries are immutable once stored; concurrent callers may compute the same
/// seed twice but always store identical values.
#[derive(Debug, Default)]
pub struct SeedCache {
    seeds: Mutex<HashMap<CacheKey, QuantumSeed>>,
}

impl SeedCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.seeds.lock().expect("seed cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The seed reached from `initial` (which must have an empty history)
    /// along `path`, reusing the longest cached prefix.
    pub fn mutate_along(&self, initial: &QuantumSeed, path: &[Vertex]) -> Result<QuantumSeed> {
        if !initial.history().is_empty() {
            return Err(Error::Invariant("cache roots must be initial seeds".into()));
        }
        let label = initial.torus().cartan().label();
        let window = initial.slice().window();
        let key = |len: usize| (label.clone(), window, path[..len].to_vec());

        let (mut seed, start) = {
            let seeds = self.seeds.lock().expect("seed cache poisoned");
            (0..=path.len())
                .rev()
                .find_map(|len| seeds.get(&key(len)).map(|s| (s.clone(), len)))
                .unwrap_or_else(|| (initial.clone(), 0))
        };
        for (len, &v) in path.iter().enumerate().skip(start) {
            seed = seed.mutate(v)?;
            self.seeds
                .lock()
                .expect("seed cache poisoned")
                .insert(key(len + 1), seed.clone());
        }
        Ok(seed)
    }
}

/// Whether `p` has every coefficient equal to `1`.
pub fn is_flat(p: &TorusElement) -> bool {
    p.is_multiplicity_free_flat()
}

/// `comm(z^u)` as a torus element with coefficient `c v^k`.
pub fn scaled_monomial(u: ExpVector, c: i64, k: i32) -> TorusElement {
    TorusElement::term(u, TCoeff::monomial(c, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::build_slice;

    fn setup(label: &str, window: (i64, i64)) -> QuantumSeed {
        let c = Arc::new(CartanData::from_label(label).unwrap());
        let slice = QuiverSlice::new(&c, Window::new(window.0, window.1).unwrap()).unwrap();
        QuantumSeed::initial(c, slice).unwrap()
    }

    fn zv(i: usize, r: i64) -> ExpVector {
        ExpVector::unit(Vertex::new(i, r))
    }

    #[test]
    fn sl2_single_mutation() {
        let seed = setup("A1", (-3, 2));
        let mutated = seed.mutate(Vertex::new(1, 0)).unwrap();
        let x = mutated.var(Vertex::new(1, 0)).unwrap();
        let expected = TorusElement::monomial(zv(1, -2).sub(&zv(1, 0)))
            .add(&TorusElement::monomial(zv(1, 2).sub(&zv(1, 0))));
        assert_eq!(x, &expected);
        assert_eq!(mutated.history(), &[Vertex::new(1, 0)]);
        assert!(mutated.check_commutation().is_ok());
    }

    #[test]
    fn mutation_is_involutive() {
        let seed = setup("A2", (-1, 6));
        for v in seed.slice().exchangeable() {
            let back = seed.mutate(v).unwrap().mutate(v).unwrap();
            assert_eq!(back.var(v).unwrap(), seed.var(v).unwrap());
            assert_eq!(back.lambda(), seed.lambda());
            assert_eq!(back.b_matrix(), seed.b_matrix());
        }
    }

    #[test]
    fn frozen_and_foreign_vertices_rejected() {
        let seed = setup("A1", (-3, 2));
        assert_eq!(
            seed.mutate(Vertex::new(1, 2)).unwrap_err(),
            Error::FrozenVertex(Vertex::new(1, 2))
        );
        assert!(seed.mutate(Vertex::new(1, 8)).is_err());
    }

    #[test]
    fn path_and_reverse_return_home() {
        let seed = setup("A2", (-1, 6));
        let path = [Vertex::new(1, 4), Vertex::new(1, 2), Vertex::new(2, 3)];
        let there = seed.mutate_along(&path).unwrap();
        let mut back: Vec<Vertex> = path.to_vec();
        back.reverse();
        let home = there.mutate_along(&back).unwrap();
        for ((_, a), (_, b)) in home.vars().zip(seed.vars()) {
            assert_eq!(a, b);
        }
        assert_eq!(seed.mutate_along(&[]).unwrap().history(), &[] as &[Vertex]);
    }

    #[test]
    fn quantum_specializes_to_classical() {
        let seed = setup("A3", (-1, 8));
        let path = [
            Vertex::new(1, 4),
            Vertex::new(2, 3),
            Vertex::new(3, 4),
            Vertex::new(1, 2),
            Vertex::new(2, 5),
        ];
        let quantum = seed.mutate_along(&path).unwrap();
        let classical = classical_mutate_along(seed.slice(), &path).unwrap();
        assert_eq!(quantum.specialize(), classical);
        assert!(quantum.check_positivity().is_ok());
        assert!(quantum.check_commutation().is_ok());
    }

    #[test]
    fn cache_reuses_prefixes() {
        let seed = setup("A2", (-1, 6));
        let cache = SeedCache::new();
        let path = [Vertex::new(1, 4), Vertex::new(1, 2), Vertex::new(2, 3)];
        let full = cache.mutate_along(&seed, &path).unwrap();
        assert_eq!(cache.len(), 3);
        let again = cache.mutate_along(&seed, &path[..2]).unwrap();
        assert_eq!(cache.len(), 3);
        assert_eq!(again.history(), &path[..2]);
        let direct = seed.mutate_along(&path).unwrap();
        assert_eq!(
            full.var(Vertex::new(2, 3)).unwrap(),
            direct.var(Vertex::new(2, 3)).unwrap()
        );
    }

    #[test]
    fn gamma_slices_build_seeds() {
        let c = Arc::new(CartanData::from_label("D4").unwrap());
        let slice = build_slice(&c, 1).unwrap();
        let seed = QuantumSeed::initial(Arc::clone(&c), slice).unwrap();
        assert_eq!(seed.vars().count(), 12);
    }
}
