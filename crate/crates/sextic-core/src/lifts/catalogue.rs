//! The families of Galois lifts, one entry per (covering, degree, case).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{At, Constraint, FreeLine, IsotypicBlock, LiftError, PlaneRule, Twist};
use crate::exactfield::{CycloNum, Field};
use crate::groups::{t_mat, M2};
use crate::invariants::{alpha, beta, gamma, omega, phi, psi, CoveringKind, Form};

/// What the classification says about a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Expected {
    GenerallyRamified,
    ExceptionalTransversal,
    /// The curve sits in a hyperplane of P⁶.
    RuledOut,
}

impl Expected {
    pub fn token(&self) -> &'static str {
        match self {
            Expected::GenerallyRamified => "generally_ramified",
            Expected::ExceptionalTransversal => "exceptional_transversal",
            Expected::RuledOut => "ruled_out",
        }
    }
}

#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub covering: CoveringKind,
    pub deg: usize,
    pub case: &'static str,
    pub expected: Expected,
    /// φ₂ on the presentation generators of the binary group.
    pub twist_images: Vec<M2>,
    pub lines: Vec<(Form, Form)>,
    pub plane: PlaneRule,
    /// Expected D_ij in det g = Σ p_ij D_ij, when it is known in closed form.
    pub det_display: Vec<((usize, usize), Form)>,
    /// Values of t handled by another case (or rejected when `None`).
    pub routes: Vec<(CycloNum, Option<&'static str>)>,
}

impl FamilySpec {
    pub fn key(&self) -> String {
        format!("{}/{}/{}", self.covering.token(), self.deg, self.case)
    }

    pub fn twist(&self) -> Result<Twist, LiftError> {
        let name = self.covering.binary_group().map_err(|e| LiftError::BadTwist(e.to_string()))?;
        Twist::new(name, &self.twist_images)
    }

    pub fn block(&self, tw: &Twist) -> Result<IsotypicBlock, LiftError> {
        super::block_from_lines(tw, &self.lines)
    }

    /// Free parameters of the family: t, plus the direction left open in a
    /// pencil.
    pub fn freedoms(&self) -> usize {
        match &self.plane {
            PlaneRule::Pencil { at: At::T, .. } => 2,
            PlaneRule::Pencil { .. } => 1,
            rule if rule.uses_t() => 1,
            _ => 0,
        }
    }

    /// The case that handles parameter t.
    pub fn route(&self, t: &CycloNum) -> Result<Option<&'static str>, LiftError> {
        match self.routes.iter().find(|(v, _)| v == t) {
            None => Ok(None),
            Some((_, Some(case))) => Ok(Some(case)),
            Some((_, None)) => Err(LiftError::Degenerate(format!("t = {t} is excluded for {}", self.key()))),
        }
    }
}

fn c(k: i64) -> CycloNum {
    CycloNum::from_int(k)
}

fn x() -> Form {
    Form::x()
}

fn y() -> Form {
    Form::y()
}

fn mono(deg: usize, i: usize) -> Form {
    Form::monomial(deg, i, c(1))
}

fn zero(deg: usize) -> Form {
    Form::zero(deg)
}

/// (f·x, f·y).
fn euler(f: &Form) -> (Form, Form) {
    (f.mul(&x()), f.mul(&y()))
}

/// (−f·∂h/∂y, f·∂h/∂x).
fn grad(f: &Form, h: &Form) -> (Form, Form) {
    (f.mul(&h.d_dy()).neg(), f.mul(&h.d_dx()))
}

fn pt(v: CycloNum) -> At {
    At::Point(v)
}

fn on(line: FreeLine, at: At) -> Constraint {
    Constraint::new(line, at)
}

fn edge_sum() -> Form {
    phi().pow(3).plus(&psi().pow(3))
}

fn phipsi() -> Form {
    phi().mul(&psi())
}

/// All families, in report order.
pub fn catalogue() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    out.extend(cyclic2());
    out.extend(cyclic3());
    out.extend(cyclic4());
    out.extend(dihedral2());
    out.push(dihedral3());
    out.extend(dihedral4());
    out.extend(tetra());
    out.extend(octa());
    out
}

pub fn find_family(covering: CoveringKind, deg: usize, case: &str) -> Option<FamilySpec> {
    catalogue().into_iter().find(|f| f.covering == covering && f.deg == deg && f.case == case)
}

fn cyclic2() -> Vec<FamilySpec> {
    let cov = CoveringKind::Cyclic(2);
    let xi = CycloNum::xi(1);
    let lines2 = vec![
        (mono(2, 0), mono(2, 0).scale(&-xi.clone())),
        (mono(2, 1), mono(2, 1).scale(&xi)),
        (mono(2, 2), mono(2, 2).scale(&-xi.clone())),
    ];
    let k2 = (c(1) + CycloNum::i()) * CycloNum::sqrt2();
    let det2 = vec![((1, 2), mono(4, 1).scale(&k2)), ((1, 3), zero(4)), ((2, 3), mono(4, 3).scale(&-k2))];
    let lines3 = vec![(mono(3, 0), zero(3)), (zero(3), mono(3, 1)), (mono(3, 2), zero(3)), (zero(3), mono(3, 3))];
    let base = |deg, case, expected, images: Vec<M2>, lines: &Vec<(Form, Form)>, plane| FamilySpec {
        covering: cov,
        deg,
        case,
        expected,
        twist_images: images,
        lines: lines.clone(),
        plane,
        det_display: vec![],
        routes: vec![],
    };
    let mut d2 = base(
        2,
        "generic",
        Expected::GenerallyRamified,
        vec![t_mat(2, 1)],
        &lines2,
        PlaneRule::Pencil { pre: vec![], at: At::T },
    );
    d2.det_display = det2.clone();
    d2.routes = vec![(c(0), Some("limit"))];
    let mut d2l = base(
        2,
        "limit",
        Expected::GenerallyRamified,
        vec![t_mat(2, 1)],
        &lines2,
        PlaneRule::Fixed(vec![vec![c(1), c(0), c(0)], vec![c(0), c(1), c(1)]]),
    );
    d2l.det_display = det2;
    let mut d3 = base(
        3,
        "generic",
        Expected::ExceptionalTransversal,
        vec![t_mat(1, 2)],
        &lines3,
        PlaneRule::Perp(vec![on(FreeLine::L3, pt(c(1))), on(FreeLine::L4, At::T)]),
    );
    d3.routes = vec![(c(0), None), (c(1), Some("limit")), (c(-1), Some("limit"))];
    let mut both = base(
        3,
        "both-L3",
        Expected::RuledOut,
        vec![t_mat(1, 2)],
        &lines3,
        PlaneRule::Perp(vec![on(FreeLine::L3, pt(c(1))), on(FreeLine::L3, At::T)]),
    );
    both.routes = d3.routes.clone();
    let lim = base(
        3,
        "limit",
        Expected::RuledOut,
        vec![t_mat(1, 2)],
        &lines3,
        PlaneRule::Perp(vec![
            on(FreeLine::L3, pt(c(1))),
            Constraint::derivative(FreeLine::L3, pt(c(1)), 1),
        ]),
    );
    vec![d2, d2l, d3, both, lim]
}

fn cyclic3() -> Vec<FamilySpec> {
    let cov = CoveringKind::Cyclic(3);
    let (n1, n2) = (CycloNum::nu1(), CycloNum::nu2());
    let images = vec![t_mat(3, 1)];
    let lines3 = vec![
        (mono(3, 0), mono(3, 0).scale(&n2)),
        (mono(3, 2), mono(3, 2).scale(&n1)),
        (mono(3, 3), mono(3, 3).scale(&n2)),
    ];
    let k3 = (c(1) - CycloNum::i()) * CycloNum::sqrt3();
    let det3 = vec![((1, 2), mono(6, 2).scale(&k3)), ((1, 3), zero(6)), ((2, 3), mono(6, 5).scale(&-k3.clone()))];
    let lines4 = vec![
        (mono(4, 0), mono(4, 0).scale(&n1)),
        (mono(4, 1), mono(4, 1).scale(&n2)),
        (mono(4, 3), mono(4, 3).scale(&n1)),
        (mono(4, 4), mono(4, 4).scale(&n2)),
    ];
    let k4 = (c(-1) + CycloNum::i()) * CycloNum::sqrt3();
    let det4 = vec![
        ((1, 2), mono(8, 1).scale(&k4)),
        ((1, 3), zero(8)),
        ((1, 4), mono(8, 4).scale(&k4)),
        ((2, 3), mono(8, 4).scale(&-k4.clone())),
        ((2, 4), zero(8)),
        ((3, 4), mono(8, 7).scale(&k4)),
    ];
    let fam = |deg, case, expected, lines: &Vec<(Form, Form)>, plane, det: &Vec<((usize, usize), Form)>| FamilySpec {
        covering: cov,
        deg,
        case,
        expected,
        twist_images: images.clone(),
        lines: lines.clone(),
        plane,
        det_display: det.clone(),
        routes: vec![],
    };
    let mut g3 = fam(3, "generic", Expected::GenerallyRamified, &lines3, PlaneRule::Pencil { pre: vec![], at: At::T }, &det3);
    g3.routes = vec![(c(0), Some("limit"))];
    let l3 = fam(3, "limit", Expected::GenerallyRamified, &lines3, PlaneRule::Pencil { pre: vec![], at: pt(c(0)) }, &det3);
    let mut g4 = fam(
        4,
        "generic",
        Expected::ExceptionalTransversal,
        &lines4,
        PlaneRule::Perp(vec![on(FreeLine::L1, pt(c(1))), on(FreeLine::L1, At::T)]),
        &det4,
    );
    g4.routes = vec![(c(0), None), (c(1), Some("limit"))];
    let l4 = fam(
        4,
        "limit",
        Expected::ExceptionalTransversal,
        &lines4,
        PlaneRule::Perp(vec![on(FreeLine::L1, pt(c(1))), Constraint::derivative(FreeLine::L1, pt(c(1)), 1)]),
        &det4,
    );
    let mut alt = fam(
        4,
        "alt",
        Expected::ExceptionalTransversal,
        &lines4,
        PlaneRule::Perp(vec![on(FreeLine::L1, pt(c(1))), on(FreeLine::L2, At::T)]),
        &det4,
    );
    alt.routes = vec![(c(0), None)];
    vec![g3, l3, g4, l4, alt]
}

fn cyclic4() -> Vec<FamilySpec> {
    let lines = vec![(mono(5, 0), zero(5)), (zero(5), mono(5, 1)), (mono(5, 4), zero(5)), (zero(5), mono(5, 5))];
    let det = vec![
        ((1, 2), mono(10, 1)),
        ((1, 3), zero(10)),
        ((1, 4), mono(10, 5)),
        ((2, 3), mono(10, 5).neg()),
        ((2, 4), zero(10)),
        ((3, 4), mono(10, 9)),
    ];
    let pre = vec![on(FreeLine::L3, pt(c(1)))];
    let fam = |case, at| FamilySpec {
        covering: CoveringKind::Cyclic(4),
        deg: 5,
        case,
        expected: Expected::GenerallyRamified,
        twist_images: vec![t_mat(1, 1)],
        lines: lines.clone(),
        plane: PlaneRule::Pencil { pre: pre.clone(), at },
        det_display: det.clone(),
        routes: vec![],
    };
    let mut g = fam("generic", At::T);
    g.routes = vec![(c(0), Some("limit"))];
    vec![g, fam("limit", pt(c(0)))]
}

fn dihedral2() -> Vec<FamilySpec> {
    let (a, b, g) = (alpha(2), beta(2), gamma());
    let xi = CycloNum::xi(1);
    let lines1 = vec![euler(&a.pow(2)), euler(&g.pow(2)), (x().mul(&a).mul(&b).neg(), y().mul(&a).mul(&b))];
    let lines2: Vec<(Form, Form)> = lines1.iter().map(|(p, q)| (p.clone(), q.scale(&xi))).collect();
    let abg = a.mul(&b).mul(&g).scale(&c(2));
    let det1 = vec![((1, 2), zero(10)), ((1, 3), abg.mul(&a.pow(2))), ((2, 3), abg.mul(&g.pow(2)))];
    let det2: Vec<((usize, usize), Form)> = det1.iter().map(|(k, f)| (*k, f.scale(&xi))).collect();
    let id = vec![t_mat(1, 2), t_mat(2, 2)];
    let theta = vec![t_mat(1, 2), t_mat(2, 1)];
    let fam = |case, expected, images: &Vec<M2>, lines: &Vec<(Form, Form)>, plane, det: &Vec<((usize, usize), Form)>| {
        FamilySpec {
            covering: CoveringKind::Dihedral(2),
            deg: 5,
            case,
            expected,
            twist_images: images.clone(),
            lines: lines.clone(),
            plane,
            det_display: det.clone(),
            routes: vec![],
        }
    };
    let mut c1 = fam("case1", Expected::GenerallyRamified, &id, &lines1, PlaneRule::Pencil { pre: vec![], at: At::T }, &det1);
    c1.routes = vec![(c(0), Some("case1-limit"))];
    let c1l = fam("case1-limit", Expected::GenerallyRamified, &id, &lines1, PlaneRule::Pencil { pre: vec![], at: pt(c(0)) }, &det1);
    let mut c2 = fam(
        "case2",
        Expected::ExceptionalTransversal,
        &theta,
        &lines2,
        PlaneRule::Perp(vec![on(FreeLine::L3, At::T)]),
        &det2,
    );
    c2.routes = vec![(c(0), None), (c(1), None), (c(-1), None)];
    let mut l2 = fam("case2-L2", Expected::RuledOut, &theta, &lines2, PlaneRule::Perp(vec![on(FreeLine::L2, At::T)]), &det2);
    l2.routes = vec![(c(0), None)];
    vec![c1, c1l, c2, l2]
}

fn dihedral3() -> FamilySpec {
    let (a, b, g) = (alpha(3), beta(3), gamma());
    let (n1, n2) = (CycloNum::nu1(), CycloNum::nu2());
    let xinv = CycloNum::xi(1).try_inv().expect("nonzero");
    // (f·(ν₁/ξ₁·y + s·x), f·ν₁(ν₂/ξ₁·y + s·x))
    let line = |f: &Form, s: i64| {
        let l1 = Form::linear(c(s), n1.clone() * xinv.clone());
        let l2 = Form::linear(c(s), n2.clone() * xinv.clone()).scale(&n1);
        (f.mul(&l1), f.mul(&l2))
    };
    let ab = a.mul(&b);
    let lines = vec![line(&ab, 1), line(&g.pow(3), -1), line(&a.pow(2), -1)];
    let k = c(2) * (c(1) + CycloNum::i()) * CycloNum::sqrt6() * (CycloNum::sqrt3() - c(1)).try_inv().expect("nonzero");
    let head = ab.mul(&g).scale(&k);
    let det = vec![((1, 2), head.mul(&g.pow(3))), ((1, 3), head.mul(&a.pow(2))), ((2, 3), zero(14))];
    FamilySpec {
        covering: CoveringKind::Dihedral(3),
        deg: 7,
        case: "generic",
        expected: Expected::ExceptionalTransversal,
        twist_images: vec![t_mat(3, 1), t_mat(2, 1)],
        lines,
        plane: PlaneRule::Perp(vec![on(FreeLine::L1, At::T)]),
        det_display: det,
        routes: vec![(c(0), None)],
    }
}

fn dihedral4() -> Vec<FamilySpec> {
    let (a, b, g) = (alpha(4), beta(4), gamma());
    let id = vec![t_mat(1, 1), t_mat(2, 2)];
    let ag = a.mul(&g);
    let lines9 = vec![euler(&a.pow(2)), euler(&g.pow(4)), grad(&ag, &b)];
    let h9 = a.mul(&b).mul(&g).scale(&c(4));
    let det9 = vec![((1, 2), zero(18)), ((1, 3), h9.mul(&a.pow(2))), ((2, 3), h9.mul(&g.pow(4)))];
    let g3 = g.pow(3);
    let lines11 = vec![
        (x().mul(&a).mul(&g3).neg(), y().mul(&a).mul(&g3)),
        euler(&b.mul(&g3)),
        (a.mul(&b).mul(&a.d_dy()), a.mul(&b).mul(&a.d_dx())),
    ];
    let h11 = a.mul(&b).mul(&g3).scale(&c(2));
    let det11 = vec![
        ((1, 2), h11.mul(&g.pow(4)).neg()),
        ((1, 3), h11.mul(&a.pow(2)).scale(&c(-2))),
        ((2, 3), h11.mul(&a.pow(2).plus(&g.pow(4))).scale(&c(2))),
    ];
    let fam = |deg, case, expected, lines: &Vec<(Form, Form)>, plane, det: &Vec<((usize, usize), Form)>| FamilySpec {
        covering: CoveringKind::Dihedral(4),
        deg,
        case,
        expected,
        twist_images: id.clone(),
        lines: lines.clone(),
        plane,
        det_display: det.clone(),
        routes: vec![(c(0), None)],
    };
    vec![
        fam(9, "generic", Expected::GenerallyRamified, &lines9, PlaneRule::Pencil { pre: vec![], at: At::T }, &det9),
        fam(11, "generic", Expected::ExceptionalTransversal, &lines11, PlaneRule::Perp(vec![on(FreeLine::L3, At::T)]), &det11),
        fam(11, "L1", Expected::RuledOut, &lines11, PlaneRule::Perp(vec![on(FreeLine::L1, At::T)]), &det11),
    ]
}

fn tetra() -> Vec<FamilySpec> {
    let (o, f, p) = (omega(), phi(), psi());
    let id = vec![t_mat(4, 1), t_mat(1, 2)];
    let s = (c(12) * CycloNum::sqrt_neg3()).try_inv().expect("nonzero");
    let pencil = f.pow(3).scale(&-s.clone()).plus(&p.pow(3).scale(&s));
    let lines13 = vec![euler(&o.pow(2)), euler(&f.pow(3)), grad(&o.mul(&f), &p)];
    let h13 = o.mul(&f).mul(&p).scale(&c(4));
    let det13 = vec![((1, 2), zero(26)), ((1, 3), h13.mul(&pencil)), ((2, 3), h13.mul(&f.pow(3)))];
    let lines15 = vec![euler(&o.mul(&f.pow(2))), grad(&o.pow(2), &p), grad(&f.pow(3), &p)];
    let h15 = o.mul(&f.pow(2)).mul(&p).scale(&c(4));
    let det15 = vec![((1, 2), h15.mul(&pencil)), ((1, 3), h15.mul(&f.pow(3))), ((2, 3), zero(30))];
    let fam = |deg, lines: Vec<(Form, Form)>, plane, det| FamilySpec {
        covering: CoveringKind::Tetra,
        deg,
        case: "generic",
        expected: Expected::GenerallyRamified,
        twist_images: id.clone(),
        lines,
        plane,
        det_display: det,
        routes: vec![(c(0), None)],
    };
    vec![
        fam(13, lines13, PlaneRule::Pencil { pre: vec![], at: At::T }, det13),
        fam(15, lines15, PlaneRule::Perp(vec![on(FreeLine::L1, At::T)]), det15),
    ]
}

fn octa() -> Vec<FamilySpec> {
    let (o, e, fp) = (omega(), edge_sum(), phipsi());
    let id = vec![t_mat(1, 1), t_mat(3, 0)];
    let lines25 = vec![euler(&o.pow(4)), euler(&fp.pow(3)), grad(&e.mul(&fp), &o)];
    let h25 = o.mul(&fp).mul(&e).scale(&c(6));
    let det25 = vec![((1, 2), zero(50)), ((1, 3), h25.mul(&o.pow(4))), ((2, 3), h25.mul(&fp.pow(3)))];
    let lines29 = vec![euler(&e.mul(&fp.pow(2))), grad(&Form::one(), &o.pow(5)), grad(&fp.pow(3), &o)];
    let h29 = e.mul(&fp.pow(2)).mul(&o).scale(&c(6));
    let det29 = vec![((1, 2), h29.mul(&o.pow(4)).scale(&c(5))), ((1, 3), h29.mul(&fp.pow(3))), ((2, 3), zero(58))];
    let lines31 = vec![euler(&o.pow(3).mul(&e)), grad(&o.pow(3).mul(&fp), &o), grad(&fp.pow(3), &fp)];
    let h31 = o.pow(3).mul(&fp).mul(&e);
    let det31 = vec![
        ((1, 2), h31.mul(&o.pow(4)).scale(&c(6))),
        ((1, 3), h31.mul(&fp.pow(3)).scale(&c(8))),
        ((2, 3), h31.mul(&fp.pow(3)).scale(&c(-4))),
    ];
    let fam = |deg, case, expected, lines: &Vec<(Form, Form)>, plane, det: &Vec<((usize, usize), Form)>, routes| FamilySpec {
        covering: CoveringKind::Octa,
        deg,
        case,
        expected,
        twist_images: id.clone(),
        lines: lines.clone(),
        plane,
        det_display: det.clone(),
        routes,
    };
    let gr = Expected::GenerallyRamified;
    let et = Expected::ExceptionalTransversal;
    let lim = |case| vec![(c(0), Some(case))];
    vec![
        fam(25, "generic", gr, &lines25, PlaneRule::Pencil { pre: vec![], at: At::T }, &det25, lim("limit")),
        fam(25, "limit", gr, &lines25, PlaneRule::Pencil { pre: vec![], at: pt(c(0)) }, &det25, vec![]),
        fam(29, "generic", gr, &lines29, PlaneRule::Perp(vec![on(FreeLine::L2, At::T)]), &det29, lim("limit")),
        fam(
            29,
            "limit",
            gr,
            &lines29,
            PlaneRule::PerpLimit { constraints: vec![on(FreeLine::L2, At::T)], t0: c(0) },
            &det29,
            vec![],
        ),
        fam(31, "generic", et, &lines31, PlaneRule::Perp(vec![on(FreeLine::L1, At::T)]), &det31, lim("limit")),
        fam(
            31,
            "limit",
            et,
            &lines31,
            PlaneRule::PerpLimit { constraints: vec![on(FreeLine::L1, At::T)], t0: c(0) },
            &det31,
            vec![],
        ),
    ]
}
