use proptest::prelude::*;
use sextic_core::binforms::{ord_at, sl2_act, transvectant, FormError};
use sextic_core::{BinaryForm, CycloNum, Field, Mat2, ProjPoint};

type Form = BinaryForm<CycloNum>;

fn c(n: i64) -> CycloNum {
    CycloNum::from_int(n)
}

fn form(max_deg: usize) -> impl Strategy<Value = Form> {
    prop::collection::vec(-3i64..=3, 1..=max_deg + 1).prop_map(|v| Form::from_ints(&v))
}

/// Upper times lower unipotent, with one entry in Z[i].
fn sl2() -> impl Strategy<Value = Mat2<CycloNum>> {
    (-2i64..=2, -2i64..=2, -1i64..=1).prop_map(|(b, cc, k)| {
        let b = c(b).add_ref(&CycloNum::i().mul_ref(&c(k)));
        let u = Mat2::new(c(1), b, c(0), c(1));
        let l = Mat2::new(c(1), c(0), c(cc), c(1));
        u.mul(&l)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn transvectant_is_equivariant(f in form(5), h in form(5), a in sl2(), p in 0usize..=5) {
        prop_assume!(p <= f.degree().min(h.degree()));
        let lhs = transvectant(&sl2_act(&a, &f).unwrap(), &sl2_act(&a, &h).unwrap(), p).unwrap();
        let rhs = sl2_act(&a, &transvectant(&f, &h, p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_is_a_homomorphism(f in form(6), a in sl2(), b in sl2()) {
        let ab = a.mul(&b);
        prop_assert_eq!(sl2_act(&ab, &f).unwrap(), sl2_act(&a, &sl2_act(&b, &f).unwrap()).unwrap());
    }

    #[test]
    fn ord_is_additive(f in form(6), h in form(6), w in -2i64..=2, inf in any::<bool>()) {
        prop_assume!(!f.is_zero() && !h.is_zero());
        let p = if inf { ProjPoint::infinity() } else { ProjPoint::finite(c(w)) };
        prop_assert_eq!(ord_at(&f.mul(&h), &p).unwrap(), ord_at(&f, &p).unwrap() + ord_at(&h, &p).unwrap());
    }
}

#[test]
fn action_examples() {
    let xy = Form::from_ints(&[0, 1, 0]);
    let f = Form::from_ints(&[3, -1, 4, 1]);
    assert_eq!(sl2_act(&Mat2::identity(), &f).unwrap(), f);
    let t12 = Mat2::new(CycloNum::i(), c(0), c(0), CycloNum::i().neg_ref());
    assert_eq!(sl2_act(&t12, &xy).unwrap(), xy);
    // (A·u, A·v) = (u, v)·(A⁻¹)ᵀ on linear forms
    let a = Mat2::new(c(2), c(1), c(1), c(1));
    let ainv = a.inverse().unwrap();
    let (u, v) = (Form::x(), Form::y());
    let au = sl2_act(&a, &u).unwrap();
    let av = sl2_act(&a, &v).unwrap();
    assert_eq!(au, u.scale(&ainv.a).plus(&v.scale(&ainv.b)));
    assert_eq!(av, u.scale(&ainv.c).plus(&v.scale(&ainv.d)));
    assert!(matches!(sl2_act(&Mat2::diag(c(2), c(1)), &xy), Err(FormError::NotSL2(_))));
}

#[test]
fn transvectant_examples() {
    let f = Form::from_ints(&[0, 1, 0, 0, 0, -1, 0]);
    assert!(transvectant(&f, &f, 4).unwrap().is_zero());
    assert!(!transvectant(&f, &f, 6).unwrap().is_zero());
    let u6 = Form::from_ints(&[1, 0, 0, 0, 0, 0, 0]);
    assert!(transvectant(&u6, &u6, 2).unwrap().is_zero());
    let h = Form::from_ints(&[1, 2]);
    assert_eq!(transvectant(&f, &h, 0).unwrap(), f.mul(&h));
}

#[test]
fn ord_examples() {
    let x2y = Form::from_ints(&[0, 1, 0, 0]);
    assert_eq!(ord_at(&x2y, &ProjPoint::finite(c(0))).unwrap(), 2);
    assert_eq!(ord_at(&x2y, &ProjPoint::infinity()).unwrap(), 1);
    let alpha2 = Form::new(vec![CycloNum::from_ratio(1, 2), c(0), CycloNum::from_ratio(-1, 2)]);
    assert_eq!(ord_at(&alpha2, &ProjPoint::finite(c(1))).unwrap(), 1);
    assert_eq!(ord_at(&Form::zero(3), &ProjPoint::infinity()), Err(FormError::ZeroForm));
}
