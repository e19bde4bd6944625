use std::collections::BTreeMap;

use sextic_core::groups::{t_mat, GroupName, M2};
use sextic_core::invariants::*;
use sextic_core::lifts::*;
use sextic_core::{BinaryForm, CycloNum, Field, Mat2, ProjPoint};

type Form = BinaryForm<CycloNum>;

fn c(n: i64) -> CycloNum {
    CycloNum::from_int(n)
}

fn mat(rows: &[&[i64]]) -> Vec<Vec<CycloNum>> {
    rows.iter().map(|r| r.iter().map(|&v| c(v)).collect()).collect()
}

fn family(cov: CoveringKind, deg: usize, case: &str) -> (FamilySpec, Twist, IsotypicBlock) {
    let spec = find_family(cov, deg, case).unwrap();
    let tw = spec.twist().unwrap();
    let block = spec.block(&tw).unwrap();
    (spec, tw, block)
}

#[test]
fn derivative_and_euler_lines() {
    let tw = Twist::diagonal(GroupName::BinOcta).unwrap();
    let l = line_from_invariant_derivative(&tw, &omega()).unwrap();
    assert_eq!(l.degree(), 5);
    assert_eq!(character_of(&tw.group, &omega()), Some(l.irrep));
    let e = euler_line(&tw).unwrap();
    assert_eq!(e.irrep, 0);
    let scaled = line_scale(&tw, &omega().pow(2), &l).unwrap();
    assert_eq!(scaled.degree(), 17);
    assert_eq!(line_scale(&tw, &Form::one(), &l).unwrap(), l);
    assert!(matches!(line_from_invariant_derivative(&tw, &Form::from_ints(&[1, 1])), Err(LiftError::NotInvariant(_))));

    let q8 = Twist::diagonal(GroupName::BinDihedral(2)).unwrap();
    let g = line_from_invariant_derivative(&q8, &gamma()).unwrap();
    assert_eq!(g.pair(), (Form::x().neg(), Form::y()));
    for s in &q8.group.generators {
        assert!(q8.eigenvalue(*s, &g.p, &g.q).is_some());
    }
}

#[test]
fn mixed_blocks_are_not_equivariant() {
    let q8 = Twist::diagonal(GroupName::BinDihedral(2)).unwrap();
    let pairs = vec![(Form::x(), Form::y()), (Form::x().neg(), Form::y())];
    let g = FormMatrix::from_plane(&mat(&[&[1, 0], &[0, 1]]), &pairs);
    assert!(matches!(verify_eigen_relation(&q8, &g), Err(LiftError::NotEquivariant(_))));
    // a single line repeated in both rows carries its own character
    let one = vec![(Form::x().neg(), Form::y())];
    let g = FormMatrix::from_plane(&mat(&[&[1], &[2]]), &one);
    let lam = verify_eigen_relation(&q8, &g).unwrap();
    let line = InvariantLine::new(&q8, Form::x().neg(), Form::y()).unwrap();
    assert_eq!(lam, q8.group.expand(&line.character));
}

#[test]
fn block_oracles() {
    // C4 in degree 5: four monomial lines
    let (_, tw, block) = family(CoveringKind::Cyclic(4), 5, "generic");
    assert_eq!(block.k(), 4);
    let chk = check_block(&tw, &block).unwrap();
    assert!(chk.ok());
    assert_eq!(block_multiplicity(&tw, 5, block.irrep).unwrap(), 4);
    // quaternion block built from α₂², γ², α₂β₂
    let (_, tw, block) = family(CoveringKind::Dihedral(2), 5, "case1");
    assert_eq!(block.k(), 3);
    assert!(check_block(&tw, &block).unwrap().ok());
    let assembled = assemble_block(&tw, 5, block.irrep).unwrap();
    assert!(sextic_core::linalg::same_span(&assembled.vectors(), &block.vectors()));
}

#[test]
fn degree_27_blocks_have_common_factors() {
    let tw = Twist::diagonal(GroupName::BinOcta).unwrap();
    let mut seen = 0;
    for irrep in tw.group.linear_irreps() {
        if block_multiplicity(&tw, 27, irrep).unwrap() >= 2 {
            seen += 1;
            assert!(matches!(assemble_block(&tw, 27, irrep), Err(LiftError::CommonFactor { .. })));
        }
    }
    assert!(seen > 0);
}

#[test]
fn det_displays() {
    let (_, _, d2) = family(CoveringKind::Dihedral(2), 5, "case1");
    let abg = alpha(2).mul(&beta(2)).mul(&gamma()).scale(&c(2));
    let mut want = BTreeMap::new();
    want.insert((1, 2), Form::zero(10));
    want.insert((1, 3), abg.mul(&alpha(2).pow(2)));
    want.insert((2, 3), abg.mul(&gamma().pow(2)));
    assert_eq!(det_terms(&d2.pairs()), want);

    let (_, _, a4) = family(CoveringKind::Tetra, 13, "generic");
    let k = c(12).mul_ref(&CycloNum::sqrt_neg3()).try_inv().unwrap();
    let base = omega().mul(&phi()).mul(&psi()).scale(&c(4));
    let mut want = BTreeMap::new();
    want.insert((1, 2), Form::zero(26));
    want.insert((1, 3), base.mul(&psi().pow(3).minus(&phi().pow(3))).scale(&k));
    want.insert((2, 3), base.mul(&phi().pow(3)));
    assert_eq!(det_terms(&a4.pairs()), want);

    let (_, _, s4) = family(CoveringKind::Octa, 31, "generic");
    let pp = phi().mul(&psi());
    let e = phi().pow(3).plus(&psi().pow(3));
    let base = omega().pow(3).mul(&pp).mul(&e);
    let mut want = BTreeMap::new();
    want.insert((1, 2), base.mul(&omega().pow(4)).scale(&c(6)));
    want.insert((1, 3), base.mul(&pp.pow(3)).scale(&c(8)));
    want.insert((2, 3), base.mul(&pp.pow(3)).scale(&c(-4)));
    assert_eq!(det_terms(&s4.pairs()), want);
}

#[test]
fn lift_det_factors_against_registry() {
    let (_, _, d2) = family(CoveringKind::Dihedral(2), 5, "case1");
    let g = FormMatrix::from_plane(&mat(&[&[1, 0, 0], &[0, 0, 1]]), &d2.pairs());
    let f = lift_det(&g, &klein_covering(CoveringKind::Dihedral(2)).unwrap()).unwrap();
    assert_eq!(f.atoms, vec![("alpha".to_string(), 3), ("beta".to_string(), 1), ("gamma".to_string(), 1)]);
    assert_eq!(f.rest.degree(), 0);
}

#[test]
fn free_lines() {
    let z = CycloNum::zero;
    assert_eq!(free_line_membership(&Mat2::new(c(2), z(), c(3), z())), Some(FreeLine::L1));
    assert_eq!(free_line_membership(&Mat2::new(c(1), c(1), c(2), c(2))), Some(FreeLine::L3));
    assert_eq!(free_line_membership(&Mat2::new(c(1), c(2), c(3), c(4))), None);
    assert_eq!(free_line_membership(&Mat2::new(c(1), c(2), c(2), c(4))), None);
    // (3654) and (1325) as images of 1..6
    assert_eq!(free_line_permutation(&t_mat(1, 1)), Some([1, 2, 6, 3, 4, 5]));
    assert_eq!(free_line_permutation(&t_mat(3, 0)), Some([3, 5, 2, 4, 1, 6]));
    assert_eq!(free_line_permutation(&t_mat(2, 2)), Some([2, 1, 3, 6, 5, 4]));
}

#[test]
fn perp_vectors_and_planes() {
    let (spec, _, block) = family(CoveringKind::Cyclic(2), 3, "generic");
    let pairs = block.pairs();
    let v = Constraint::new(FreeLine::L4, At::T).vector(&pairs, Some(&c(2))).unwrap();
    let i = CycloNum::i();
    assert_eq!(v, vec![c(8).mul_ref(&i), c(-4), c(2).mul_ref(&i), c(-1)]);
    let m = select_plane(&spec.plane, &pairs, Some(&c(2))).unwrap();
    let w = Constraint::new(FreeLine::L3, At::Point(c(1))).vector(&pairs, None).unwrap();
    assert_eq!(w, mat(&[&[1, -1, 1, -1]])[0]);
    for row in &m {
        for cov in [&v, &w] {
            let dot = row.iter().zip(cov.iter()).fold(c(0), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)));
            assert!(dot.is_zero());
        }
    }
    let (lim, _, _) = family(CoveringKind::Cyclic(2), 3, "limit");
    assert_eq!(select_plane(&lim.plane, &pairs, None).unwrap(), mat(&[&[1, 0, -3, -2], &[0, 1, 2, 1]]));
    // one constraint on a 4-dimensional block leaves a 3-space
    assert!(matches!(perp_solve(4, &[w.clone()]), Err(LiftError::WrongCodimension { k: 4, constraints: 1, dim: 3 })));
    assert!(matches!(perp_solve(4, &[w.clone(), w]), Err(LiftError::WrongCodimension { .. })));
}

#[test]
fn divisors_of_small_families() {
    let (_, _, block) = family(CoveringKind::Cyclic(2), 2, "generic");
    // p₁₂ = p₂₃ = 1, p₁₃ = 0
    let g = FormMatrix::from_plane(&mat(&[&[1, 0, -1], &[0, 1, 0]]), &block.pairs());
    let pl = pluecker(&mat(&[&[1, 0, -1], &[0, 1, 0]]));
    assert_eq!(pl[&(1, 2)], pl[&(2, 3)]);
    let q = divisor_q(&g, &candidate_points(CoveringKind::Cyclic(2), None)).unwrap();
    let mut pts: Vec<ProjPoint<CycloNum>> = q.support().into_iter().cloned().collect();
    pts.sort_by_key(|p| p.to_string());
    assert_eq!(q.degree(), 4);
    for p in [ProjPoint::finite(c(0)), ProjPoint::infinity(), ProjPoint::finite(c(1)), ProjPoint::finite(c(-1))] {
        assert_eq!(q.ord(&p), 1);
    }
    let cov = klein_covering(CoveringKind::Cyclic(2)).unwrap();
    let f = divisor_f(&sextic_core::fano::f1_compose(&g), &candidate_points(CoveringKind::Cyclic(2), None), 2, 2).unwrap();
    assert_eq!(f.degree(), 0);
    assert_eq!(mult_phi(&cov, &ProjPoint::finite(c(0))), 2);
}

#[test]
fn psl2_search() {
    let (_, _, block) = family(CoveringKind::Dihedral(2), 5, "case1");
    let m = mat(&[&[1, 0, 2], &[0, 1, -1]]);
    let g1 = FormMatrix::from_plane(&m, &block.pairs());
    let b = t_mat(3, 1);
    let g2 = g1.transform(&Mat2::identity(), &b);
    let (a, found) = psl2_equivalent(&g1, &g2).unwrap();
    assert_eq!(g1.transform(&a, &found), g2);
    let sa: M2 = Mat2::new(c(2), c(1), c(1), c(1));
    let g3 = g1.transform(&sa, &Mat2::identity());
    let (a, found) = psl2_equivalent(&g1, &g3).unwrap();
    assert_eq!(g1.transform(&a, &found), g3);
    // the second block: (−xα₂², yα₂²), (−xγ², yγ²), (xα₂β₂, yα₂β₂), then y ↦ −y
    let (a2, g2f, ab) = (alpha(2).pow(2), gamma().pow(2), alpha(2).mul(&beta(2)));
    let (x, y) = (Form::x(), Form::y());
    let w2 = vec![
        (x.mul(&a2).neg(), y.mul(&a2)),
        (x.mul(&g2f).neg(), y.mul(&g2f)),
        (x.mul(&ab), y.mul(&ab)),
    ];
    let h = FormMatrix::from_plane(&m, &w2);
    let flip = |f: &Form| f.substitute(&x, &y.neg());
    let h = FormMatrix { a: flip(&h.a), b: flip(&h.b), c: flip(&h.c), d: flip(&h.d) };
    let (a, found) = psl2_equivalent(&g1, &h).unwrap();
    assert_eq!(g1.transform(&a, &found), h);
}

#[test]
fn odd_degrees_carry_no_linear_characters() {
    // binary dihedral groups of even index only; α₃, β₃ have degree 3
    for name in [GroupName::BinDihedral(2), GroupName::BinDihedral(4), GroupName::BinTetra, GroupName::BinOcta] {
        let g = sextic_core::groups::build_group(name).unwrap();
        for n in (1..=31).step_by(2) {
            let chi = sextic_core::groups::char_vn(&g, n);
            for k in g.linear_irreps() {
                assert_eq!(sextic_core::groups::multiplicity(&g, &chi, k).unwrap(), 0, "{} V{n} irrep {k}", name.token());
            }
        }
    }
}

#[test]
fn constructive_basis_matches_projection() {
    let names = [
        GroupName::Cyclic(4),
        GroupName::Cyclic(6),
        GroupName::Cyclic(8),
        GroupName::BinDihedral(2),
        GroupName::BinDihedral(3),
        GroupName::BinDihedral(4),
        GroupName::BinTetra,
        GroupName::BinOcta,
    ];
    for name in names {
        let tw = Twist::diagonal(name).unwrap();
        for n in 1..=13 {
            for k in tw.group.linear_irreps() {
                let ours: Vec<Vec<CycloNum>> = constructive_basis(name, n, k)
                    .unwrap()
                    .iter()
                    .map(|(p, q)| p.coeffs().iter().chain(q.coeffs()).cloned().collect())
                    .collect();
                let proj: Vec<Vec<CycloNum>> = projection_basis(&tw, n, k)
                    .iter()
                    .map(|(p, q)| p.coeffs().iter().chain(q.coeffs()).cloned().collect())
                    .collect();
                assert!(sextic_core::linalg::same_span(&ours, &proj), "{} n={n} irrep {k}", name.token());
            }
        }
    }
}
