//! Stable JSON encodings shared by the command line and the tests.
//!
//! Every top-level document carries `"schema": 1`. Torus elements are
//! encoded as
//!
//! ```text
//! {"schema":1,"terms":[{"t_num":k,"coeff":c,"exp":[[i,r,e],…]},…]}
//! ```
//!
//! with `k` the exponent of `v = t^{1/2}`, terms leading monomial first and
//! factors by level descending, then node ascending.

use serde_json::{json, Map, Value};

use crate::matrix::IntMatrix;
use crate::qtorus::{LaurentPoly, TorusElement, YPoly};
use crate::quiver::Vertex;
use crate::repchar::Verdict;

pub const SCHEMA: u32 = 1;

/// The `terms` array of a torus element.
pub fn torus_terms(a: &TorusElement) -> Value {
    Value::Array(
        a.flat_terms()
            .into_iter()
            .map(|(k, c, u)| {
                let exp: Vec<Value> = u
                    .reading_order()
                    .into_iter()
                    .map(|(v, e)| json!([v.node, v.level, e]))
                    .collect();
                json!({"t_num": k, "coeff": c, "exp": exp})
            })
            .collect(),
    )
}

/// `t = 1` polynomials use the same layout with `t_num = 0`.
pub fn laurent_terms(p: &LaurentPoly) -> Value {
    torus_terms(&TorusElement::from_laurent(p))
}

pub fn y_terms(p: &YPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| {
                let exp: Vec<Value> = m.entries().map(|((i, s), e)| json!([i, s, e])).collect();
                json!({"coeff": c, "y": exp})
            })
            .collect(),
    )
}

pub fn matrix(m: &IntMatrix) -> Value {
    json!(m.to_rows())
}

pub fn vertex(v: Vertex) -> Value {
    json!([v.node, v.level])
}

pub fn verdict(v: &Verdict) -> Value {
    json!({"name": v.name, "status": v.status(), "detail": v.detail})
}

/// Wraps fields into a schema-tagged document.
pub fn document(fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), json!(SCHEMA));
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}

/// A schema-tagged torus element.
pub fn torus_document(a: &TorusElement) -> Value {
    document(vec![("terms", torus_terms(a))])
}

/// Compact, single-line rendering with a trailing newline.
pub fn to_line(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtorus::{ExpVector, TCoeff};

    #[test]
    fn torus_json_layout() {
        let u = ExpVector::from_pairs([(Vertex::new(1, -2), 1), (Vertex::new(1, 0), -1)]);
        let a = TorusElement::term(u, TCoeff::from_terms([(-1, 1), (1, 2)]));
        assert_eq!(
            torus_document(&a).to_string(),
            r#"{"schema":1,"terms":[{"coeff":1,"exp":[[1,0,-1],[1,-2,1]],"t_num":-1},{"coeff":2,"exp":[[1,0,-1],[1,-2,1]],"t_num":1}]}"#
        );
        assert_eq!(
            torus_document(&TorusElement::zero()).to_string(),
            r#"{"schema":1,"terms":[]}"#
        );
    }

    #[test]
    fn documents_are_deterministic() {
        let d = document(vec![("b", json!(1)), ("a", json!([1, 2]))]);
        assert_eq!(to_line(&d), to_line(&d.clone()));
        assert_eq!(d["schema"], json!(1));
    }
}
