//! Fundamental `(q,t)`-characters as quantum cluster variables, the
//! classical oracle, prefundamental characters and the `sl2` identities.

mod checks;
mod fm;
mod sequence;

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use checks::{
    baxter_check, drinfeld_double_check, oracle_check, thinness_flatten_check, BaxterReport,
    BaxterVariant, DrinfeldReport, Verdict,
};
pub use fm::{a_ladder_depth, classical_fm_qchar, classical_fm_with_budget, FM_MONOMIAL_BUDGET};
pub use sequence::{mutation_sequence, MutationSequenceSpec};

use crate::cartan::{CartanData, DynkinType};
use crate::error::{Error, Result};
use crate::qcluster::QuantumSeed;
use crate::qtorus::{QuantumTorus, TorusElement, Weight, WeightExpr, YPoly};
use crate::quiver::{QuiverSlice, Vertex, Window};

/// `χ̃_{i,r}`: the variable at `(i, r + 2h')` after mutating along `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QtCharacter {
    pub origin: Vertex,
    pub value: TorusElement,
    pub vertex_read: Vertex,
    pub window: Window,
}

impl QtCharacter {
    /// Preimage under `J`, when every coefficient is free of `t`.
    pub fn y_preimage(&self, torus: &QuantumTorus) -> Result<YPoly> {
        let mut out = YPoly::zero();
        for (u, c) in self.value.terms() {
            let Some((x, 0)) = c.as_monomial() else {
                return Err(Error::Unsupported(format!(
                    "coefficient {c} of {u} depends on t"
                )));
            };
            let m = torus.pull_back_y(u).ok_or_else(|| {
                Error::Invariant(format!("{u} is not in the image of the Y embedding"))
            })?;
            out.add_term(m, x);
        }
        Ok(out)
    }
}

pub fn default_window(cartan: &CartanData, i: usize, r: i64) -> Result<Window> {
    Ok(mutation_sequence(cartan, i, r)?.default_window())
}

/// Computes `χ̃_{i,r}` in `window` (default: the smallest admissible one).
pub fn fundamental_qt_character(
    cartan: &Arc<CartanData>,
    i: usize,
    r: i64,
    window: Option<Window>,
) -> Result<QtCharacter> {
    let spec = mutation_sequence(cartan, i, r)?;
    let window = window.unwrap_or_else(|| spec.default_window());
    spec.check_window(window)?;
    let slice = QuiverSlice::new(cartan, window)?;
    let seed = QuantumSeed::initial(Arc::clone(cartan), slice)?.mutate_along(&spec.sequence)?;
    let vertex_read = spec.target();
    Ok(QtCharacter {
        origin: spec.origin,
        value: seed.var(vertex_read)?.clone(),
        vertex_read,
        window,
    })
}

/// Several characters at once, in input order; fans out over threads when
/// `parallel` is set.
pub fn fundamental_qt_characters(
    cartan: &Arc<CartanData>,
    origins: &[(usize, i64)],
    parallel: bool,
) -> Vec<Result<QtCharacter>> {
    let one = |&(i, r): &(usize, i64)| fundamental_qt_character(cartan, i, r, None);
    if parallel {
        origins.par_iter().map(one).collect()
    } else {
        origins.iter().map(one).collect()
    }
}

/// `[L⁺_{i,q^r}]_t = [Ψ_{i,q^r}] ⊗ χ_i` with `[Ψ_{i,q^r}] = z_{i,r} [r/2 ω_i]`
/// and `χ` cut off after `depth + 1` terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefundamentalCharacter {
    pub monomial: TorusElement,
    pub weight: Weight,
    pub chi: WeightExpr,
    pub depth: usize,
}

/// `z_{i,r}` and `[r/2 ω_i]`; available in every type.
pub fn prefundamental_monomial(
    cartan: &CartanData,
    i: usize,
    r: i64,
) -> Result<(TorusElement, Weight)> {
    let v = Vertex::new(i, r);
    v.check(cartan)?;
    Ok((
        TorusElement::var(v),
        Weight::fundamental_half(cartan.rank(), i, r),
    ))
}

/// Only `A1` has a known `χ`: `Σ_{k ≥ 0} [-2k ω_1]`.
pub fn prefundamental_qt_character(
    cartan: &CartanData,
    i: usize,
    r: i64,
    depth: usize,
) -> Result<PrefundamentalCharacter> {
    let (monomial, weight) = prefundamental_monomial(cartan, i, r)?;
    if cartan.dynkin_type() != DynkinType::A || cartan.rank() != 1 {
        return Err(Error::Unsupported(format!(
            "the normalized character of a prefundamental module is only available for A1, not {}",
            cartan.label()
        )));
    }
    let mut chi = WeightExpr::zero();
    for k in 0..=depth as i64 {
        chi.add_term(Weight::fundamental_half(1, 1, -4 * k), 1);
    }
    Ok(PrefundamentalCharacter {
        monomial,
        weight,
        chi,
        depth,
    })
}
