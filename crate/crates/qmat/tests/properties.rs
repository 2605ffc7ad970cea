//! Property-based invariants: coefficient ring axioms, confluence and
//! homogeneity of the rewriting engine, the bialgebra laws on random
//! elements, and homomorphism validation across all stratum maps.

use proptest::prelude::*;
use qmat::pbwcore::{Element, GenId, Homogeneity, Monomial, Strategy};
use qmat::qcoeff::LaurentInt;
use qmat::qmatrix::{
    comultiply, index_subsets, oqm_presentation, quantum_minor, tau_images, tensor_square, xgen,
    MinorKey,
};
use qmat::strata::{beta_map, enumerate_rc};

fn arb_laurent() -> impl Strategy<Value = LaurentInt> {
    prop::collection::vec((-5i64..=5, -6i64..=6), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(LaurentInt::zero(), |acc, (c, e)| {
                acc.add(&LaurentInt::term(c.into(), e))
            })
    })
}

proptest! {
    #[test]
    fn coefficient_ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), LaurentInt::zero());
        prop_assert_eq!(a.mul(&LaurentInt::one()), a.clone());
    }

    #[test]
    fn coefficient_ring_is_a_domain(a in arb_laurent(), b in arb_laurent()) {
        prop_assert_eq!(a.mul(&b).is_zero(), a.is_zero() || b.is_zero());
    }

    #[test]
    fn normal_forms_are_strategy_independent(
        word in prop::collection::vec(0usize..9, 1..7)
    ) {
        let p = oqm_presentation(3);
        let terms = vec![(
            LaurentInt::one(),
            word.iter().map(|g| (*g as GenId, 1i64)).collect::<Vec<_>>(),
        )];
        let left = p.normal_form_with_strategy(&terms, Strategy::LeftmostDescent).unwrap();
        let right = p.normal_form_with_strategy(&terms, Strategy::RightmostDescent).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn normal_form_preserves_multidegree(
        word in prop::collection::vec(0usize..9, 1..7)
    ) {
        let p = oqm_presentation(3);
        let expected = word.iter().fold(
            qmat::pbwcore::DegreeVector::zero(p.grading_rank()),
            |acc, g| acc.add(&p.gen_info(*g).degree),
        );
        let terms = vec![(
            LaurentInt::one(),
            word.iter().map(|g| (*g as GenId, 1i64)).collect::<Vec<_>>(),
        )];
        let nf = p.normal_form(&terms).unwrap();
        match p.multidegree(&nf) {
            Homogeneity::Homogeneous(d) => prop_assert_eq!(d, expected),
            other => prop_assert!(false, "unexpected homogeneity {:?}", other),
        }
    }

    #[test]
    fn multiplication_adds_multidegrees(
        w1 in prop::collection::vec(0usize..9, 1..4),
        w2 in prop::collection::vec(0usize..9, 1..4),
    ) {
        let p = oqm_presentation(3);
        let to_elem = |w: &[usize]| {
            p.normal_form(&[(
                LaurentInt::one(),
                w.iter().map(|g| (*g as GenId, 1i64)).collect::<Vec<_>>(),
            )])
            .unwrap()
        };
        let a = to_elem(&w1);
        let b = to_elem(&w2);
        let da = p.multidegree(&a).homogeneous().unwrap();
        let db = p.multidegree(&b).homogeneous().unwrap();
        let dab = p.multidegree(&p.multiply(&a, &b)).homogeneous().unwrap();
        prop_assert_eq!(dab, da.add(&db));
    }

    #[test]
    fn comultiplication_is_an_algebra_map(
        w1 in prop::collection::vec(0usize..4, 0..4),
        w2 in prop::collection::vec(0usize..4, 0..4),
    ) {
        let n = 2;
        let p = oqm_presentation(n);
        let t = tensor_square(n);
        let to_elem = |w: &[usize]| {
            p.normal_form(&[(
                LaurentInt::one(),
                w.iter().map(|g| (*g as GenId, 1i64)).collect::<Vec<_>>(),
            )])
            .unwrap()
        };
        let x = to_elem(&w1);
        let y = to_elem(&w2);
        let lhs = comultiply(n, &p.multiply(&x, &y)).unwrap();
        let rhs = t.multiply(&comultiply(n, &x).unwrap(), &comultiply(n, &y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn transpose_images_validate_up_to_n3() {
    for n in 1..=3 {
        let p = oqm_presentation(n);
        p.validate_hom(&p, &tau_images(n))
            .expect("transpose preserves every defining relation");
    }
}

#[test]
fn stratum_map_images_validate_for_all_pairs_up_to_n3() {
    // beta_map runs relation validation on construction and fails loudly
    for n in 1..=3u32 {
        for t in 0..=n as usize {
            for pair in enumerate_rc(n, t) {
                beta_map(n, &pair).expect("images satisfy the defining relations");
            }
        }
    }
}

#[test]
fn minors_are_central_in_their_subalgebra_up_to_n3() {
    for n in 2..=3usize {
        let p = oqm_presentation(n);
        for l in 1..=n {
            for rows in index_subsets(n as u32, l) {
                for cols in index_subsets(n as u32, l) {
                    let minor =
                        quantum_minor(n, &MinorKey::new(rows.clone(), cols.clone()).unwrap());
                    for i in rows.iter() {
                        for j in cols.iter() {
                            let x = Element::monomial(Monomial::gen(xgen(n, i, j)));
                            assert!(
                                p.commutes(&minor, &x),
                                "minor [{}|{}] vs X[{},{}]",
                                rows,
                                cols,
                                i,
                                j
                            );
                        }
                    }
                }
            }
        }
    }
}
