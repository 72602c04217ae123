//! The mutation sequence producing a fundamental `(q,t)`-character.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::quiver::{Vertex, Window};

/// The sequence `S = S_{h'} ⋯ S_2 (i, r + 2h')` for an origin `(i, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationSequenceSpec {
    pub origin: Vertex,
    /// `⌈h∨ / 2⌉`.
    pub h_prime: usize,
    /// `i` first, then the nodes of its parity class, then the others.
    pub column_order: Vec<usize>,
    pub sequence: Vec<Vertex>,
}

impl MutationSequenceSpec {
    /// Where the character is read off: `(i, r + 2h')`.
    pub fn target(&self) -> Vertex {
        Vertex::new(
            self.origin.node,
            self.origin.level + 2 * self.h_prime as i64,
        )
    }

    /// Smallest window in which every vertex of the sequence is exchangeable.
    pub fn default_window(&self) -> Window {
        let r = self.origin.level;
        Window {
            min: r - 1,
            max: r + 2 * self.h_prime as i64 + 2,
        }
    }

    /// Rejects windows that freeze or omit a vertex of the sequence.
    pub fn check_window(&self, window: Window) -> Result<()> {
        for &v in &self.sequence {
            if !window.contains(v.level) || window.is_frozen_level(v.level) {
                return Err(Error::WindowTooSmall {
                    min: window.min,
                    max: window.max,
                    needed: v,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for MutationSequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sequence.iter().map(Vertex::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn mutation_sequence(cartan: &CartanData, i: usize, r: i64) -> Result<MutationSequenceSpec> {
    let origin = Vertex::new(i, r);
    origin.check(cartan)?;
    let h_prime = cartan.dual_coxeter().div_ceil(2);
    let own = cartan.parity(i);
    let mut column_order = vec![i];
    column_order.extend((1..=cartan.rank()).filter(|&j| j != i && cartan.parity(j) == own));
    column_order.extend((1..=cartan.rank()).filter(|&j| cartan.parity(j) != own));

    let top = r + 2 * h_prime as i64;
    let mut sequence = Vec::new();
    for k in (2..=h_prime).rev() {
        for &j in &column_order {
            let eps = i64::from(cartan.parity(j) != own);
            sequence.extend((0..k as i64).map(|m| Vertex::new(j, top - eps - 2 * m)));
        }
    }
    sequence.push(Vertex::new(i, top));
    Ok(MutationSequenceSpec {
        origin,
        h_prime,
        column_order,
        sequence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{A2_SEQUENCE, D4_SEQUENCE};

    fn verts(list: &[(usize, i64)]) -> Vec<Vertex> {
        list.iter().map(|&(i, r)| Vertex::new(i, r)).collect()
    }

    #[test]
    fn printed_sequences() {
        let a2 = CartanData::from_label("A2").unwrap();
        let s = mutation_sequence(&a2, 1, 0).unwrap();
        assert_eq!(s.sequence, verts(&A2_SEQUENCE));
        assert_eq!(s.to_string(), "(1,4) (1,2) (2,3) (2,1) (1,4)");
        let d4 = CartanData::from_label("D4").unwrap();
        let s = mutation_sequence(&d4, 1, 0).unwrap();
        assert_eq!(s.column_order, vec![1, 3, 4, 2]);
        assert_eq!(s.sequence, verts(&D4_SEQUENCE));
    }

    #[test]
    fn sl2_is_one_step() {
        let a1 = CartanData::from_label("A1").unwrap();
        for r in [-4, -2, 0, 6] {
            let s = mutation_sequence(&a1, 1, r).unwrap();
            assert_eq!(s.sequence, vec![Vertex::new(1, r + 2)]);
            assert_eq!(s.target(), Vertex::new(1, r + 2));
        }
        assert!(mutation_sequence(&a1, 1, 1).is_err());
        assert!(mutation_sequence(&a1, 2, 0).is_err());
    }

    #[test]
    fn windows() {
        let a2 = CartanData::from_label("A2").unwrap();
        let s = mutation_sequence(&a2, 1, 0).unwrap();
        let w = s.default_window();
        assert_eq!((w.min, w.max), (-1, 6));
        assert!(s.check_window(w).is_ok());
        assert!(matches!(
            s.check_window(Window::new(0, 6).unwrap()),
            Err(Error::WindowTooSmall { .. })
        ));
        assert!(s.check_window(Window::new(-1, 5).unwrap()).is_err());
        for label in ["A3", "A4", "D5", "E6", "E7"] {
            let c = CartanData::from_label(label).unwrap();
            for i in 1..=c.rank() {
                let r = i64::from(c.parity(i));
                let s = mutation_sequence(&c, i, r).unwrap();
                assert!(s.check_window(s.default_window()).is_ok());
            }
        }
    }
}
