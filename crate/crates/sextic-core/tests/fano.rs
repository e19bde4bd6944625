use sextic_core::binforms::transvectant;
use sextic_core::fano::*;
use sextic_core::invariants::{klein_covering, CoveringKind};
use sextic_core::lifts::{Divisor, FormMatrix};
use sextic_core::{BinaryForm, CycloNum, Field, Poly, ProjPoint};

type Form = BinaryForm<CycloNum>;

fn c(n: i64) -> CycloNum {
    CycloNum::from_int(n)
}

fn constant(a: i64, b: i64, cc: i64, d: i64) -> FormMatrix {
    let k = |v| Form::constant(c(v));
    FormMatrix { a: k(a), b: k(b), c: k(cc), d: k(d) }
}

fn point(v: &[i64]) -> SexticPoint {
    SexticPoint::new(core::array::from_fn(|i| c(v[i]))).unwrap()
}

#[test]
fn composition_with_constants() {
    let f = f1_compose(&constant(1, 0, 0, 1));
    let got: Vec<CycloNum> = f.iter().map(|h| h.coeff(0).clone()).collect();
    assert_eq!(got, [0, 1, 0, 0, 0, -1, 0].map(c));
    let (cc, d) = (3, -2);
    let f = f1_compose(&constant(5, 7, cc, d));
    assert_eq!(*f[0].coeff(0), c(-d.pow(5) * cc + d * cc.pow(5)));
    // a rank-one value lands on the rational normal curve of u⁶
    let f = f1_compose(&constant(1, 2, 3, 6));
    let s = SexticPoint::new(core::array::from_fn(|i| f[i].coeff(0).clone())).unwrap();
    assert_eq!(orbit_classify(&s), OrbitClass::OneDim);
}

#[test]
fn orbit_examples() {
    assert_eq!(orbit_classify(&point(&[1, 0, 0, 0, 0, 0, 0])), OrbitClass::OneDim);
    assert_eq!(orbit_classify(&point(&[0, 1, 0, 0, 0, 0, 0])), OrbitClass::Closed2Dim);
    assert_eq!(orbit_classify(&point(&[0, 1, 0, 0, 0, -1, 0])), OrbitClass::OpenOrbit);
    assert_eq!(orbit_classify(&point(&[1, 0, 0, 1, 0, 0, 1])), OrbitClass::OffV5);
    let f = point(&[0, 1, 0, 0, 0, -1, 0]).form();
    assert!(transvectant(&f, &f, 4).unwrap().is_zero());
    assert_eq!(q5_quadric(&point(&[0, 1, 0, 0, 0, -1, 0]).coeffs), CycloNum::from_ratio(1, 3));
}

#[test]
fn quadric_is_the_sixth_transvectant() {
    let samples = [[1, 2, 0, -1, 3, 1, 2], [0, 1, 1, 1, 0, 2, -3], [4, 0, -2, 1, 1, 0, 5]];
    let mut ratio = None;
    for s in samples {
        let cs: Vec<CycloNum> = s.iter().map(|&v| c(v)).collect();
        let f = Form::new(cs.clone());
        let t6 = transvectant(&f, &f, 6).unwrap().coeff(0).clone();
        let r = t6.try_div(&q5_quadric(&cs)).unwrap();
        assert_eq!(*ratio.get_or_insert(r.clone()), r);
    }
}

#[test]
fn descent_matches_substitution() {
    use sextic_core::lifts::find_family;
    use sextic_core::pipeline::{analyze, prepare};
    for (kind, deg, case) in [(CoveringKind::Cyclic(2), 2, "limit"), (CoveringKind::Cyclic(3), 4, "generic"), (CoveringKind::Dihedral(2), 5, "case1")] {
        let pf = prepare(find_family(kind, deg, case).unwrap()).unwrap();
        let r = analyze(&pf, Some(&c(2))).unwrap();
        let curve = &r.curve;
        assert!(curve.coords.iter().all(|p| p.degree().map_or(true, |d| d <= 6)));
        assert_eq!(curve.coords.len(), 7);
        // F(φ(p)) and f₁∘g(p) agree projectively away from ℱ
        let f7 = f1_compose(&r.forms);
        for w in [7, 11] {
            let p = ProjPoint::finite(CycloNum::from_ratio(w, 5));
            let z = phi_image(&pf.cov, &p);
            let up = SexticPoint::new(core::array::from_fn(|i| f7[i].eval_at(&p))).unwrap();
            assert_eq!(curve.eval(z.value().unwrap()).unwrap(), up, "{}", r.key);
        }
    }
}

#[test]
fn descent_rejects_non_invariant_forms() {
    let cov = klein_covering(CoveringKind::Cyclic(2)).unwrap();
    let mut f7: Vec<Form> = (0..7).map(|_| Form::monomial(12, 0, c(1))).collect();
    f7[3] = Form::monomial(12, 1, c(1));
    assert_eq!(descend(&f7, &cov, &Divisor::default()), Err(FanoError::NotInSpan(3)));
}

#[test]
fn closed_orbit_curve_lies_in_q5() {
    // (u + z v)⁵ v
    let coords: Vec<Poly<CycloNum>> = (0..=6)
        .map(|i| {
            if i == 0 {
                Poly::zero()
            } else {
                let b = [1, 5, 10, 10, 5, 1][i - 1];
                let mut v = vec![c(0); i];
                v[i - 1] = c(b);
                Poly::new(v)
            }
        })
        .collect();
    let curve = CurveP6 { coords, fixed_part: Divisor::default() };
    assert!(curve.fourth_transvectant_vanishes());
    assert_eq!(q5_intersection(&curve, &[]), Err(FanoError::CurveInsideQ5));
    assert_eq!(linear_fullness(&curve).0, 6);
}
