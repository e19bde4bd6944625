use proptest::prelude::*;
use sextic_core::exactfield::{complex_conjugate, field_arith, named_constant, ArithOp};
use sextic_core::{CycloNum, Field, FieldError, ParamScalar};

fn cyclo() -> impl Strategy<Value = CycloNum> {
    (prop::array::uniform8(-5i64..=5), 1i64..=4).prop_map(|(c, d)| {
        CycloNum::from_int_coeffs(c).mul_ref(&CycloNum::from_ratio(1, d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(a.add_ref(&b), b.add_ref(&a));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert!(a.sub_ref(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul_ref(&a.try_inv().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation_is_a_ring_map(a in cyclo(), b in cyclo()) {
        prop_assert_eq!(a.mul_ref(&b).conj(), a.conj().mul_ref(&b.conj()));
        prop_assert_eq!(a.add_ref(&b).conj(), a.conj().add_ref(&b.conj()));
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn param_division_roundtrip(n in prop::collection::vec(-4i64..=4, 1..4), d in prop::collection::vec(-4i64..=4, 1..4)) {
        let poly = |c: &[i64]| c.iter().rev().fold(ParamScalar::zero(), |acc, &v| acc.mul_ref(&ParamScalar::t()).add_ref(&ParamScalar::from_int(v)));
        let (p, q) = (poly(&n), poly(&d));
        prop_assume!(!q.is_zero());
        prop_assert_eq!(p.try_div(&q).unwrap().mul_ref(&q), p);
    }
}

#[test]
fn reduction_and_named_constants() {
    let z4 = CycloNum::zeta(4);
    assert_eq!(field_arith(&z4, &z4, ArithOp::Mul).unwrap(), z4.sub_ref(&CycloNum::one()));
    let s2 = named_constant("sqrt2").unwrap();
    assert_eq!(s2.mul_ref(&s2), CycloNum::from_int(2));
    assert_eq!(named_constant("xi_1").unwrap().pow(2), CycloNum::i());
    assert_eq!(named_constant("eta").unwrap(), CycloNum::zeta(4));
    let s = named_constant("sqrt_neg3").unwrap();
    assert_eq!(s, CycloNum::i().mul_ref(&CycloNum::sqrt3()));
    assert_eq!(s.pow(2), CycloNum::from_int(-3));
    assert!(matches!(named_constant("sqrt5"), Err(FieldError::UnknownConstant(_))));
    assert_eq!(field_arith(&s2, &CycloNum::zero(), ArithOp::Div), Err(FieldError::DivisionByZero));
}

#[test]
fn nu_product() {
    // (−1+i)² / ((1−√3)(1+√3)) expanded by hand: −2i / −2
    let m = CycloNum::i().sub_ref(&CycloNum::one());
    let r3 = CycloNum::sqrt3();
    let oracle = m
        .mul_ref(&m)
        .try_div(&CycloNum::one().sub_ref(&r3).mul_ref(&CycloNum::one().add_ref(&r3)))
        .unwrap();
    assert_eq!(oracle, CycloNum::i());
    let p = CycloNum::nu1().mul_ref(&CycloNum::nu2());
    assert_eq!(p, oracle);
    assert_eq!(complex_conjugate(&CycloNum::nu1()).mul_ref(&complex_conjugate(&CycloNum::nu2())), oracle.neg_ref());
    assert_eq!(complex_conjugate(&CycloNum::i()), CycloNum::i().neg_ref());
    assert_eq!(complex_conjugate(&CycloNum::sqrt2()), CycloNum::sqrt2());
}
