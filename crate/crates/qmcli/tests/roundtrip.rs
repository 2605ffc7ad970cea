//! Canonical serialization round-trips through the expression grammar.

use proptest::prelude::*;
use qmat::pbwcore::{Element, Monomial, Presentation};
use qmat::qcoeff::LaurentInt;
use qmat::qmatrix::{oqm_presentation, tensor_square};
use qmcli::expr::parse_element;
use std::sync::Arc;

fn arb_laurent() -> impl Strategy<Value = LaurentInt> {
    prop::collection::vec((-4i64..=4, -9i64..=9), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(LaurentInt::zero(), |acc, (c, e)| {
                acc.add(&LaurentInt::term(c.into(), e))
            })
    })
}

fn arb_element(num_gens: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec(
        (
            arb_laurent(),
            prop::collection::vec((0..num_gens, 1i64..=3), 0..4),
        ),
        0..5,
    )
    .prop_map(|terms| {
        let mut out = Element::zero();
        for (c, exps) in terms {
            out.add_term(&c, Monomial::from_exps(exps));
        }
        out
    })
}

fn check_round_trip(p: &Arc<Presentation>, x: &Element) {
    let text = p.element_text(x);
    let back = parse_element(p, &text).expect("canonical text parses");
    assert_eq!(&back, x, "round trip of `{}`", text);
}

proptest! {
    #[test]
    fn round_trip_quantum_matrices(x in arb_element(9)) {
        let p = oqm_presentation(3);
        check_round_trip(&p, &x);
    }

    #[test]
    fn round_trip_tensor_square(x in arb_element(8)) {
        let p = tensor_square(2);
        check_round_trip(&p, &x);
    }
}

#[test]
fn round_trip_localized_generators() {
    // negative exponents print and parse on invertible generators
    let step = qmat::strata::step_algebra_plus(2, &qmat::qmatrix::IndexSet::new(vec![1]).unwrap(), true)
        .unwrap();
    let p = step.pres.clone();
    let x = p
        .normal_form(&[(
            LaurentInt::q_hat(),
            vec![(step.gen(2, 1), 2), (step.gen(1, 1), -3)],
        )])
        .unwrap();
    let text = p.element_text(&x);
    assert_eq!(parse_element(&p, &text).unwrap(), x);
}
