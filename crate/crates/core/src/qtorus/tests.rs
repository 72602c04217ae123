use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::cartan::CartanData;

fn torus(label: &str) -> QuantumTorus {
    QuantumTorus::new(Arc::new(CartanData::from_label(label).unwrap()))
}

fn zv(i: usize, r: i64) -> ExpVector {
    ExpVector::unit(Vertex::new(i, r))
}

fn z(i: usize, r: i64) -> TorusElement {
    TorusElement::var(Vertex::new(i, r))
}

/// Random elements of the A2 torus with at most `terms` monomials over a
/// small window.
fn arb_element(terms: usize) -> impl Strategy<Value = TorusElement> {
    let vertex = prop_oneof![
        (-2i64..3).prop_map(|k| Vertex::new(1, 2 * k)),
        (-2i64..2).prop_map(|k| Vertex::new(2, 2 * k + 1)),
    ];
    let monomial =
        proptest::collection::vec((vertex, -2i32..3), 0..3).prop_map(ExpVector::from_pairs);
    let coeff = proptest::collection::vec((-2i32..3, -2i64..3), 1..3).prop_map(TCoeff::from_terms);
    proptest::collection::vec((monomial, coeff), 0..=terms).prop_map(|pairs| {
        let mut out = TorusElement::zero();
        for (u, c) in pairs {
            out.add_term(u, &c);
        }
        out
    })
}

#[test]
fn lambda_examples() {
    let a1 = torus("A1");
    assert_eq!(a1.lambda_vertices(Vertex::new(1, 0), Vertex::new(1, 2)), -1);
    assert_eq!(a1.lambda_vertices(Vertex::new(1, 2), Vertex::new(1, 0)), 1);
    assert_eq!(a1.lambda_of(&zv(1, 4), &zv(1, 4)), 0);
    let d4 = torus("D4");
    assert_eq!(d4.lambda_vertices(Vertex::new(1, 2), Vertex::new(2, -1)), 1);
}

#[test]
fn sl2_generators_t_commute() {
    let a1 = torus("A1");
    let p = a1.multiply(&z(1, 0), &z(1, 2));
    assert_eq!(
        p,
        TorusElement::term(zv(1, 0).add(&zv(1, 2)), TCoeff::v_pow(-1))
    );
    // z_{1,0} ∗ z_{1,2} = t^{-1} z_{1,2} ∗ z_{1,0}
    assert!(a1.v_commutes(&z(1, 0), &z(1, 2), -2));
    // f(m) = F_11(2m): f(1) = -1, f(2) = 0, f(3) = -1
    for m in 1..6i64 {
        let expected = ((-1i64).pow(m as u32) - 1) / 2;
        assert_eq!(
            a1.lambda_vertices(Vertex::new(1, 0), Vertex::new(1, 2 * m)),
            expected
        );
    }
}

#[test]
fn d4_monomial_product() {
    let d4 = torus("D4");
    let p = d4.multiply(&z(1, 2), &z(2, -1));
    assert_eq!(
        p,
        TorusElement::term(zv(1, 2).add(&zv(2, -1)), TCoeff::v_pow(1))
    );
}

#[test]
fn inverse_monomials() {
    let a2 = torus("A2");
    let u = zv(1, 0).add(&zv(2, 3).scaled(2)).sub(&zv(1, 4));
    let x = TorusElement::monomial(u.clone());
    let y = TorusElement::monomial(u.neg());
    assert_eq!(a2.multiply(&x, &y), TorusElement::one());
    assert_eq!(a2.multiply(&TorusElement::one(), &x), x);
}

#[test]
fn embedding_examples() {
    let a1 = torus("A1");
    let y = a1.embed_y(&YMonomial::var(1, -1)).unwrap();
    assert_eq!(y, TorusElement::monomial(zv(1, -2).sub(&zv(1, 0))));
    assert_eq!(a1.embed_y(&YMonomial::one()).unwrap(), TorusElement::one());
    assert!(matches!(
        a1.embed_y(&YMonomial::var(1, 0)),
        Err(Error::VertexOutsideComponent(_))
    ));
}

#[test]
fn embedding_commutation_in_sl2() {
    // J(Y_{1,q}) ∗ J(Y_{1,q^3}) = t^{N_11(2)} J(Y_{1,q^3}) ∗ J(Y_{1,q}), N_11(2) = -2.
    let a1 = torus("A1");
    let y1 = a1.embed_y(&YMonomial::var(1, 1)).unwrap();
    let y3 = a1.embed_y(&YMonomial::var(1, 3)).unwrap();
    let n = a1.cartan().n_form(1, 1, 2).unwrap();
    assert_eq!(n, -2);
    assert!(a1.v_commutes(&y1, &y3, 2 * n as i32));
    assert!(!a1.v_commutes(&y1, &y3, -2 * n as i32));
}

#[test]
fn embedding_matches_n_form_everywhere() {
    // Y_{i,q^{r+1}} ∗ Y_{j,q^{s+1}} = t^{N_ij(s-r)} Y_{j,q^{s+1}} ∗ Y_{i,q^{r+1}}
    for label in ["A1", "A3", "D4", "E6"] {
        let t = torus(label);
        let c = t.cartan().clone();
        for i in 1..=c.rank() {
            for j in 1..=c.rank() {
                let r = i64::from(c.parity(i));
                for gap in -12i64..=12 {
                    let s = r + gap;
                    if !Vertex::new(j, s).in_component(&c) {
                        continue;
                    }
                    let yi = t.embed_y(&YMonomial::var(i, r + 1)).unwrap();
                    let yj = t.embed_y(&YMonomial::var(j, s + 1)).unwrap();
                    let n = c.n_form(i, j, gap).unwrap();
                    assert!(
                        t.v_commutes(&yi, &yj, 2 * n as i32),
                        "{label} {i} {j} {gap}"
                    );
                }
            }
        }
    }
}

#[test]
fn f_telescopes_to_n() {
    for label in [
        "A1", "A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6", "E7", "E8", "A8", "D8",
    ] {
        let c = CartanData::from_label(label).unwrap();
        for i in 1..=c.rank() {
            for j in 1..=c.rank() {
                for m in 1..=40i64 {
                    let lhs = 2 * c.f_form(i, j, m).unwrap()
                        - c.f_form(i, j, m + 2).unwrap()
                        - c.f_form(i, j, m - 2).unwrap();
                    assert_eq!(lhs, c.n_form(i, j, m).unwrap(), "{label} ({i},{j}) m={m}");
                }
            }
        }
    }
}

#[test]
fn a_monomials() {
    let a1 = torus("A1");
    assert_eq!(
        a1.a_monomial(1, 1).unwrap(),
        YMonomial::from_pairs([((1, 2), 1), ((1, 0), 1)])
    );
    let a2 = torus("A2");
    assert_eq!(
        a2.a_monomial(1, 1).unwrap(),
        YMonomial::from_pairs([((1, 2), 1), ((1, 0), 1), ((2, 1), -1)])
    );
    assert!(a2.a_monomial(1, 0).is_err());
}

#[test]
fn pull_back_inverts_embedding() {
    let a2 = torus("A2");
    let m = YMonomial::from_pairs([((1, 1), 1), ((1, 3), -1), ((2, 2), 1)]);
    let image = a2.embed_y(&m).unwrap();
    let (u, _) = image.leading().unwrap();
    assert_eq!(a2.pull_back_y(u), Some(m));
    assert_eq!(a2.pull_back_y(&zv(1, 0)), None);
    assert_eq!(a2.pull_back_y(&ExpVector::zero()), Some(YMonomial::one()));
}

#[test]
fn weight_character_examples() {
    let a1 = torus("A1");
    let w = |num| Weight::fundamental_half(1, 1, num);
    assert_eq!(a1.weight_character(&z(1, 2)), WeightExpr::symbol(w(-2)));
    assert_eq!(
        a1.weight_character(&TorusElement::one()),
        WeightExpr::symbol(w(0))
    );
    let y = a1.embed_y(&YMonomial::var(1, -1)).unwrap();
    assert_eq!(a1.weight_character(&y), WeightExpr::symbol(w(2)));
    let two = TorusElement::term(zv(1, 2), TCoeff::from_terms([(1, 1), (-1, 1)]));
    assert_eq!(a1.weight_character(&two), WeightExpr::term(w(-2), 2));
}

#[test]
fn specialization_examples() {
    let right = TorusElement::term(zv(1, -2).sub(&zv(1, 0)), TCoeff::v_pow(-1)).add(
        &TorusElement::term(zv(1, 2).sub(&zv(1, 0)), TCoeff::v_pow(1)),
    );
    let expected = LaurentPoly::var(Vertex::new(1, -2))
        .add(&LaurentPoly::var(Vertex::new(1, 2)))
        .shift(&zv(1, 0).neg());
    assert_eq!(right.evaluate_t1(), expected);
    assert_eq!(TorusElement::one().evaluate_t1(), LaurentPoly::one());
}

#[test]
fn division_by_monomial_shifts() {
    let a2 = torus("A2");
    let a = z(1, 0).add(&z(2, 3));
    let d = z(1, 2);
    let x = a2.exact_left_divide(&a, &d).unwrap();
    assert_eq!(a2.multiply(&d, &x), a);
    assert_eq!(x.len(), 2);
}

#[test]
fn division_failures() {
    let a1 = torus("A1");
    let d = z(1, 0).add(&TorusElement::one());
    assert!(matches!(
        a1.exact_left_divide(&z(1, 2), &d),
        Err(Error::InexactDivision { .. })
    ));
    assert_eq!(
        a1.exact_left_divide(&d, &TorusElement::zero()),
        Err(Error::DivisionByZero)
    );
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn associative_and_unital(a in arb_element(5), b in arb_element(5), c in arb_element(5)) {
        let t = torus("A2");
        let left = t.multiply(&t.multiply(&a, &b), &c);
        let right = t.multiply(&a, &t.multiply(&b, &c));
        prop_assert_eq!(left, right);
        prop_assert_eq!(t.multiply(&TorusElement::one(), &a), a.clone());
        prop_assert_eq!(t.multiply(&a, &TorusElement::one()), a);
    }

    #[test]
    fn bar_is_an_anti_automorphism(a in arb_element(4), b in arb_element(4)) {
        let t = torus("A2");
        prop_assert_eq!(t.multiply(&a, &b).bar(), t.multiply(&b.bar(), &a.bar()));
        prop_assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn specialization_is_multiplicative(a in arb_element(4), b in arb_element(4)) {
        let t = torus("A2");
        prop_assert_eq!(
            t.multiply(&a, &b).evaluate_t1(),
            a.evaluate_t1().mul(&b.evaluate_t1())
        );
    }

    #[test]
    fn weight_character_is_multiplicative(a in arb_element(4), b in arb_element(4)) {
        let t = torus("A2");
        prop_assert_eq!(
            t.weight_character(&t.multiply(&a, &b)),
            t.weight_character(&a).mul(&t.weight_character(&b))
        );
    }

    #[test]
    fn division_round_trip(d in arb_element(3), x in arb_element(3)) {
        prop_assume!(!d.is_zero());
        let t = torus("A2");
        let a = t.multiply(&d, &x);
        prop_assert_eq!(t.exact_left_divide(&a, &d).unwrap(), x);
    }
}
