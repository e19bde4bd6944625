use sextic_core::fano::{Clause, FamilyLabel};
use sextic_core::invariants::CoveringKind;
use sextic_core::lifts::{catalogue, find_family, Expected, LiftError};
use sextic_core::pipeline::*;
use sextic_core::{CycloNum, Field, ProjPoint};

fn c(n: i64) -> CycloNum {
    CycloNum::from_int(n)
}

fn run(kind: CoveringKind, deg: usize, case: &str, t: i64) -> FamilyReport {
    let pf = prepare(find_family(kind, deg, case).unwrap()).unwrap();
    analyze(&pf, Some(&c(t))).unwrap()
}

#[test]
fn accepted_degrees() {
    use SweepOutcome::*;
    let want: [&[(usize, SweepOutcome)]; 8] = [
        &[(2, Candidate), (3, Candidate)],
        &[(3, Candidate), (4, Candidate)],
        &[(4, RamificationCount), (5, Candidate), (6, CommonFactor)],
        &[(4, Parity), (5, Candidate), (6, Parity)],
        &[(6, CommonFactor), (7, Candidate), (8, RamificationCount), (9, RamificationCount)],
        &[(8, RamificationCount), (9, Candidate), (10, Parity), (11, Candidate), (12, RamificationCount)],
        &[
            (12, RamificationCount),
            (13, Candidate),
            (14, Parity),
            (15, Candidate),
            (16, Parity),
            (17, RamificationCount),
            (18, RamificationCount),
        ],
        &[
            (24, RamificationCount),
            (25, Candidate),
            (26, Parity),
            (27, CommonFactor),
            (28, Parity),
            (29, Candidate),
            (30, Parity),
            (31, Candidate),
            (32, RamificationCount),
            (33, RamificationCount),
            (34, RamificationCount),
            (35, RamificationCount),
            (36, RamificationCount),
        ],
    ];
    for (kind, want) in coverings().into_iter().zip(want) {
        assert_eq!(degree_sweep(kind).unwrap(), want, "{}", kind.token());
    }
}

#[test]
fn catalogue_degrees_match_the_sweep() {
    for kind in coverings() {
        let sweep = degree_sweep(kind).unwrap();
        for spec in catalogue().into_iter().filter(|s| s.covering == kind) {
            assert!(sweep.contains(&(spec.deg, SweepOutcome::Candidate)), "{}", spec.key());
        }
    }
}

#[test]
fn every_family_passes_at_a_sample() {
    let t = c(3);
    for spec in catalogue() {
        let key = spec.key();
        let expected = spec.expected;
        let pf = prepare(spec).unwrap();
        let r = analyze(&pf, Some(&t)).unwrap();
        assert!(r.passed(), "{key}: {:?}", r.failed_checks());
        match expected {
            Expected::RuledOut => assert_eq!(r.rank, 6, "{key}"),
            _ => assert_eq!(r.rank, 7, "{key}"),
        }
    }
}

#[test]
fn ruled_out_covector() {
    for t in [2, 3] {
        let r = run(CoveringKind::Cyclic(2), 3, "both-L3", t);
        let s = t + 1;
        let want = [-20 * s * s * s, 10 * s * s, -4 * s, 1, 0, 0, 0].map(c);
        assert_eq!(r.kernel.unwrap(), want);
    }
    assert_eq!(run(CoveringKind::Dihedral(4), 11, "L1", 2).rank, 6);
}

#[test]
fn divisors_quoted_for_families() {
    assert_eq!(run(CoveringKind::Dihedral(2), 5, "case1", 2).q_display, "(alpha) + (beta) + (gamma) + (fiber(t))");
    assert_eq!(run(CoveringKind::Octa, 25, "limit", 2).q_display, "5(Omega) + (PhiPsi) + (Edge)");
    let c4 = run(CoveringKind::Cyclic(4), 5, "generic", 2);
    // (0) + (∞) + φ⁻¹(1) with φ = x⁴
    assert_eq!(c4.f.degree(), 6);
    for w in [0, 1, -1] {
        assert_eq!(c4.f.ord(&ProjPoint::finite(c(w))), 1);
    }
    assert_eq!(c4.f.ord(&ProjPoint::finite(CycloNum::i())), 1);
    assert_eq!(c4.f.ord(&ProjPoint::infinity()), 1);
    for r in [run(CoveringKind::Cyclic(2), 2, "generic", 2), run(CoveringKind::Cyclic(3), 3, "generic", 2)] {
        assert_eq!(r.f.degree(), 0);
        assert_eq!(r.forms.degree(), r.key.split('/').nth(1).unwrap().parse::<usize>().unwrap());
    }
}

#[test]
fn q5_section_of_the_quadratic_family() {
    let r = run(CoveringKind::Cyclic(2), 2, "generic", 1);
    let (d, rest) = r.q5.unwrap();
    assert_eq!(rest, 0);
    for p in [ProjPoint::finite(c(0)), ProjPoint::finite(c(1)), ProjPoint::infinity()] {
        assert!(d.ord(&p) > 0, "{p}");
    }
}

#[test]
fn labels() {
    assert_eq!(run(CoveringKind::Cyclic(2), 2, "generic", 2).label, FamilyLabel::GenerallyRamified);
    assert_eq!(run(CoveringKind::Cyclic(2), 3, "generic", 2).label, FamilyLabel::ExceptionalTransversal);
    let r = run(CoveringKind::Octa, 31, "generic", 2);
    assert_eq!(r.label, FamilyLabel::ExceptionalTransversal);
    assert!(r.verdict.witness.is_none());
    let r = run(CoveringKind::Cyclic(2), 2, "limit", 2);
    assert!(matches!(r.verdict.witness, Some((_, Clause::CenterTangency))));
}

#[test]
fn routing() {
    let pf: Vec<PreparedFamily> = catalogue().into_iter().filter(|s| s.covering == CoveringKind::Cyclic(2)).map(|s| prepare(s).unwrap()).collect();
    let spec = find_family(CoveringKind::Cyclic(2), 3, "generic").unwrap();
    for t in [1, -1] {
        let f = resolve(&pf, &spec, &c(t)).unwrap();
        assert_eq!(f.spec.case, "limit");
        assert!(analyze(f, Some(&c(t))).unwrap().passed());
    }
    assert_eq!(resolve(&pf, &spec, &c(2)).unwrap().spec.case, "generic");
    assert!(matches!(resolve(&pf, &spec, &c(0)), Err(AnalysisError::Lift(LiftError::Degenerate(_)))));
    let spec2 = find_family(CoveringKind::Cyclic(2), 2, "generic").unwrap();
    assert_eq!(resolve(&pf, &spec2, &c(0)).unwrap().spec.case, "limit");
}

#[test]
fn parameter_count() {
    let fams = catalogue();
    let top = fams.iter().filter(|s| s.expected != Expected::RuledOut).map(|s| s.freedoms()).max().unwrap();
    assert_eq!(top, 2);
    let et = fams
        .iter()
        .filter(|s| s.expected == Expected::ExceptionalTransversal)
        .map(|s| s.freedoms())
        .max()
        .unwrap();
    assert_eq!(et, 1);
    assert!(fams.iter().filter(|s| s.expected == Expected::ExceptionalTransversal).all(|s| s.freedoms() <= 1));
    assert!(!CycloNum::zero().is_one());
}
