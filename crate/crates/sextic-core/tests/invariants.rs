use sextic_core::binforms::act_unchecked;
use sextic_core::groups::{build_group, GroupName};
use sextic_core::invariants::*;
use sextic_core::{BinaryForm, CycloNum, Field, ProjPoint};

type Form = BinaryForm<CycloNum>;

fn c(n: i64) -> CycloNum {
    CycloNum::from_int(n)
}

#[test]
fn syzygies_vanish() {
    for d in 2..=4 {
        let r = fundamental_invariants(GroupName::BinDihedral(d)).unwrap();
        assert!(r.syzygy_residual().is_zero(), "D{d}");
        let d = d as usize;
        let direct = alpha(d).pow(2).minus(&beta(d).pow(2)).plus(&gamma().pow(d as u32));
        assert!(direct.is_zero());
    }
    let t = fundamental_invariants(GroupName::BinTetra).unwrap();
    assert!(t.syzygy_residual().is_zero());
    let k = c(12).mul_ref(&CycloNum::sqrt3()).mul_ref(&CycloNum::i());
    assert!(phi().pow(3).plus(&omega().pow(2).scale(&k)).minus(&psi().pow(3)).is_zero());
    let o = fundamental_invariants(GroupName::BinOcta).unwrap();
    assert!(o.syzygy_residual().is_zero());
    let half = phi().pow(3).plus(&psi().pow(3)).scale(&CycloNum::from_ratio(1, 2));
    let rel = omega().pow(4).scale(&c(108)).plus(&half.pow(2)).minus(&phi().mul(&psi()).pow(3));
    assert!(rel.is_zero());
}

#[test]
fn registry_forms_are_relative_invariants() {
    for name in [GroupName::BinDihedral(2), GroupName::BinDihedral(3), GroupName::BinDihedral(4), GroupName::BinTetra, GroupName::BinOcta] {
        let g = build_group(name).unwrap();
        for e in fundamental_invariants(name).unwrap().entries {
            for a in &g.elements {
                let af = act_unchecked(a, &e.form);
                let k = e.form.coeffs().iter().position(|v| !v.is_zero()).unwrap();
                let lambda = af.coeff(k).try_div(e.form.coeff(k)).unwrap();
                assert_eq!(af, e.form.scale(&lambda), "{} {}", name.token(), e.name);
            }
        }
    }
}

#[test]
fn coverings() {
    let c3 = klein_covering(CoveringKind::Cyclic(3)).unwrap();
    assert_eq!(c3.nu, Form::from_ints(&[1, 0, 0, 0]));
    assert_eq!(c3.de, Form::from_ints(&[0, 0, 0, 1]));
    let d3 = klein_covering(CoveringKind::Dihedral(3)).unwrap();
    assert_eq!(d3.nu, alpha(3).pow(2).neg());
    assert_eq!(d3.de, gamma().pow(3));
    assert_eq!(klein_covering(CoveringKind::Octa).unwrap().degree, 24);
    assert_eq!(klein_covering(CoveringKind::Tetra).unwrap().degree, 12);
    for kind in [CoveringKind::Cyclic(2), CoveringKind::Cyclic(4), CoveringKind::Dihedral(2), CoveringKind::Dihedral(4), CoveringKind::Tetra, CoveringKind::Octa] {
        assert!(klein_covering(kind).unwrap().check_invariance(), "{}", kind.token());
    }
    assert!(klein_covering(CoveringKind::Cyclic(5)).is_err());
}

#[test]
fn pencil_classes() {
    let d2 = klein_covering(CoveringKind::Dihedral(2)).unwrap();
    assert_eq!(pencil_zero_class(&d2, &c(1), &c(0)).0, PencilZeros::NuLocus);
    assert_eq!(pencil_zero_class(&d2, &c(2), &c(-2)).0, PencilZeros::Iota1Squared);
    let (class, f) = pencil_zero_class(&d2, &c(1), &c(3));
    assert_eq!(class, PencilZeros::PrincipalOrbit);
    // −α₂² + 3γ² = −(x⁴ − 14x²y² + y⁴)/4 is squarefree of degree 4
    assert_eq!(f, Form::from_ints(&[-1, 0, 14, 0, -1]).scale(&CycloNum::from_ratio(1, 4)));
    assert_eq!(f.gcd(&f.d_dx()).degree(), 0);
}

#[test]
fn local_degrees_and_centers() {
    let c2 = klein_covering(CoveringKind::Cyclic(2)).unwrap();
    assert_eq!(mult_phi(&c2, &ProjPoint::finite(c(0))), 2);
    assert_eq!(mult_phi(&c2, &ProjPoint::finite(c(5))), 1);
    let s4 = klein_covering(CoveringKind::Octa).unwrap();
    assert_eq!(mult_phi(&s4, &ProjPoint::finite(c(0))), 4);
    assert_eq!(mult_phi(&s4, &ProjPoint::infinity()), 4);
    let s2 = CycloNum::sqrt2();
    let edge = ProjPoint::finite(c(1).sub_ref(&CycloNum::i()).try_div(&s2).unwrap());
    assert_eq!(center_classify(&edge), Center::Edge);
    assert_eq!(mult_phi(&s4, &edge), 2);
    assert_eq!(mult_phi(&s4, &ProjPoint::finite(c(2))), 1);
    assert_eq!(center_classify(&ProjPoint::finite(c(0))), Center::Vertex);
    assert_eq!(center_classify(&ProjPoint::finite(c(2))), Center::Generic);
    let face = centers().into_iter().find(|p| center_classify(p) == Center::Face).unwrap();
    assert_eq!(mult_phi(&s4, &face), 3);
    assert_eq!(branch_multiplicities(CoveringKind::Octa).unwrap(), [vec![4], vec![2], vec![3]]);
    assert_eq!(orbit(CoveringKind::Octa, &ProjPoint::finite(c(2))).len(), 24);
}
