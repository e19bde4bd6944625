//! The curve downstairs: f₁∘g, descent through the covering to a rational
//! curve in P⁶ = P(V₆), orbit tests by transvectants, the Q₅ section,
//! linear fullness and the generally ramified / exceptional transversal test.
//!
//! Sextics are written in the monomial basis u^{6−i}vⁱ throughout.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::binforms::{ord_at, transvectant, BinaryForm, ProjPoint};
use crate::exactfield::{CycloNum, Field, ParamScalar, Poly};
use crate::invariants::{center_classify, mult_phi, Center, Form, KleinCovering, Point};
use crate::lifts::{w_of, Divisor, FormMatrix};
use crate::linalg::{kernel, rank, solve, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FanoError {
    #[error("coordinate {0} is not in the span of Nu^j De^(6-j)")]
    NotInSpan(usize),
    #[error("coordinate {0} is not divisible by the fixed part")]
    NotDivisible(usize),
    #[error("the curve lies inside Q5")]
    CurveInsideQ5,
    #[error("zero curve")]
    ZeroCurve,
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Coefficients of u^{6−i}vⁱ in f(d·u − b·v, −c·u + a·v) for
/// f = uv(u⁴ − v⁴), each a form of degree 6·deg g.
pub fn f1_compose(g: &FormMatrix) -> [Form; 7] {
    let pows = |f: &Form| {
        let mut out = vec![Form::one()];
        for k in 1..=5 {
            let next = out[k - 1].mul(f);
            out.push(next);
        }
        out
    };
    let (nb, nc) = (g.b.neg(), g.c.neg());
    let (pa, pnb, pnc, pd) = (pows(&g.a), pows(&nb), pows(&nc), pows(&g.d));
    // L₁ = d·u − b·v, L₂ = −c·u + a·v
    let l1_5: Vec<Form> = (0..=5).map(|j| pd[5 - j].mul(&pnb[j]).scale(&CycloNum::from_int(binom(5, j)))).collect();
    let l2_5: Vec<Form> = (0..=5).map(|j| pnc[5 - j].mul(&pa[j]).scale(&CycloNum::from_int(binom(5, j)))).collect();
    let deg = 6 * g.degree();
    core::array::from_fn(|i| {
        let mut acc = Form::zero(deg);
        if i <= 5 {
            acc = acc.plus(&l1_5[i].mul(&nc)).minus(&l2_5[i].mul(&g.d));
        }
        if i >= 1 {
            acc = acc.plus(&l1_5[i - 1].mul(&g.a)).minus(&l2_5[i - 1].mul(&nb));
        }
        acc
    })
}

/// A point of P(V₆), normalized so that the first nonzero coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SexticPoint {
    pub coeffs: [CycloNum; 7],
}

impl SexticPoint {
    pub fn new(coeffs: [CycloNum; 7]) -> Option<Self> {
        let k = coeffs.iter().position(|c| !c.is_zero())?;
        let inv = coeffs[k].try_inv().ok()?;
        Some(SexticPoint { coeffs: coeffs.map(|c| c.mul_ref(&inv)) })
    }

    pub fn form(&self) -> Form {
        Form::new(self.coeffs.to_vec())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitClass {
    OffV5,
    OpenOrbit,
    Closed2Dim,
    OneDim,
}

impl OrbitClass {
    pub fn token(&self) -> &'static str {
        match self {
            OrbitClass::OffV5 => "off_V5",
            OrbitClass::OpenOrbit => "open_orbit",
            OrbitClass::Closed2Dim => "closed_2dim",
            OrbitClass::OneDim => "one_dim",
        }
    }
}

fn self_transvectant<F: Field>(f: &BinaryForm<F>, p: usize) -> BinaryForm<F> {
    transvectant(f, f, p).expect("degrees allow it")
}

pub fn orbit_classify(f: &SexticPoint) -> OrbitClass {
    let f = f.form();
    if !self_transvectant(&f, 4).is_zero() {
        OrbitClass::OffV5
    } else if self_transvectant(&f, 2).is_zero() {
        OrbitClass::OneDim
    } else if self_transvectant(&f, 6).is_zero() {
        OrbitClass::Closed2Dim
    } else {
        OrbitClass::OpenOrbit
    }
}

/// Σ (−1)ⁱ cᵢ c₆₋ᵢ / C(6, i), the quadric (f, f)₆ up to a constant.
pub fn q5_quadric<F: Field>(c: &[F]) -> F {
    (0..=6).fold(F::zero(), |acc, i| {
        let t = c[i].mul_ref(&c[6 - i]).mul_ref(&F::from_ratio(1, binom(6, i)));
        if i % 2 == 0 {
            acc.add_ref(&t)
        } else {
            acc.sub_ref(&t)
        }
    })
}

/// F: P¹ → P⁶ with coordinates cᵢ(z) of degree ≤ 6, z = φ.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveP6 {
    pub coords: Vec<Poly<CycloNum>>,
    pub fixed_part: Divisor,
}

impl CurveP6 {
    pub fn eval(&self, z: &CycloNum) -> Option<SexticPoint> {
        SexticPoint::new(core::array::from_fn(|i| self.coords[i].eval(z)))
    }

    /// The sextic in (u, v) with coefficients in Q(ζ₂₄)(z).
    pub fn as_form(&self) -> BinaryForm<ParamScalar> {
        BinaryForm::new(self.coords.iter().map(|c| ParamScalar::from_poly(c.clone())).collect())
    }

    /// Row i holds the coefficients of cᵢ in 1, z, …, z⁶.
    pub fn coefficient_matrix(&self) -> Matrix<CycloNum> {
        self.coords.iter().map(|c| (0..=6).map(|j| c.coeff(j)).collect()).collect()
    }

    /// (F, F)₄ as a form over Q(ζ₂₄)(z).
    pub fn fourth_transvectant_vanishes(&self) -> bool {
        self_transvectant(&self.as_form(), 4).is_zero()
    }

    pub fn q5_polynomial(&self) -> Poly<CycloNum> {
        let mut acc = Poly::zero();
        for i in 0..=6 {
            let t = self.coords[i].mul(&self.coords[6 - i]).scale(&CycloNum::from_ratio(1, binom(6, i)));
            acc = if i % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
        }
        acc
    }
}

/// Divide f₁∘g by the fixed-part form and write each quotient in the basis
/// Nu^j·De^{6−j} ↦ z^j.
pub fn descend(forms7: &[Form], cov: &KleinCovering, fixed: &Divisor) -> Result<CurveP6, FanoError> {
    let mut h = Form::one();
    for (p, k) in &fixed.points {
        h = h.mul(&Form::vanishing_at(p).pow(*k as u32));
    }
    let basis: Vec<Form> = (0..=6).map(|j| cov.nu.pow(j as u32).mul(&cov.de.pow(6 - j as u32))).collect();
    let dim = 6 * cov.degree + 1;
    let rows: Matrix<CycloNum> = (0..dim).map(|i| basis.iter().map(|b| b.coeff(i).clone()).collect()).collect();
    let mut coords = Vec::with_capacity(7);
    for (i, f) in forms7.iter().enumerate() {
        let q = f.div_exact(&h).ok_or(FanoError::NotDivisible(i))?;
        if q.degree() != 6 * cov.degree {
            return Err(FanoError::NotInSpan(i));
        }
        let s = solve(&rows, q.coeffs()).ok_or(FanoError::NotInSpan(i))?;
        coords.push(Poly::new(s));
    }
    if coords.iter().all(Poly::is_zero) {
        return Err(FanoError::ZeroCurve);
    }
    Ok(CurveP6 { coords, fixed_part: fixed.clone() })
}

/// Root divisor of the degree-12 Q₅ section on the z-line over the given
/// points, with the degree of what does not split.
pub fn q5_intersection(curve: &CurveP6, z_points: &[Point]) -> Result<(Divisor, usize), FanoError> {
    let q = curve.q5_polynomial();
    if q.is_zero() {
        return Err(FanoError::CurveInsideQ5);
    }
    let form = Form::new((0..=12).map(|j| q.coeff(12 - j)).collect());
    let (found, rest) = form.split_over(z_points).map_err(|_| FanoError::CurveInsideQ5)?;
    Ok((Divisor::new(found), rest.degree()))
}

/// Rank of the coordinate matrix; at rank 6 also the covector λ with
/// Σ λᵢ cᵢ(z) ≡ 0.
pub fn linear_fullness(curve: &CurveP6) -> (usize, Option<Vec<CycloNum>>) {
    let m = curve.coefficient_matrix();
    let r = rank(&m);
    if r != 6 {
        return (r, None);
    }
    let mt: Matrix<CycloNum> = (0..7).map(|j| (0..7).map(|i| m[i][j].clone()).collect()).collect();
    (r, kernel(&mt, 7).into_iter().next())
}

/// φ(p) on the z-line.
pub fn phi_image(cov: &KleinCovering, p: &Point) -> Point {
    ProjPoint::new(cov.nu.eval_at(p), cov.de.eval_at(p)).expect("Nu and De are coprime")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyLabel {
    GenerallyRamified,
    ExceptionalTransversal,
    NotSextic,
}

impl FamilyLabel {
    pub fn token(&self) -> &'static str {
        match self {
            FamilyLabel::GenerallyRamified => "generally_ramified",
            FamilyLabel::ExceptionalTransversal => "exceptional_transversal",
            FamilyLabel::NotSextic => "not_sextic",
        }
    }
}

/// Which part of the predicate fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// p ∈ supp 𝒬 ∖ supp ℱ with mult_p φ = 1.
    Unramified,
    /// p ∈ supp 𝒬 ∖ supp ℱ, ord_p 𝒬 ≥ 2 and w(p) an edge or face center.
    CenterTangency,
    /// 0 < ord_p ℱ < ord_p 𝒬.
    PartialFixed,
}

impl Clause {
    pub fn token(&self) -> &'static str {
        match self {
            Clause::Unramified => "mult_phi=1",
            Clause::CenterTangency => "edge_or_face_center",
            Clause::PartialFixed => "0<ord_F<ord_Q",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub label: FamilyLabel,
    pub witness: Option<(Point, Clause)>,
    pub detail: String,
}

pub fn family_classify(g: &FormMatrix, cov: &KleinCovering, q: &Divisor, f: &Divisor) -> Verdict {
    for (p, qk) in &q.points {
        let fk = f.ord(p);
        let hit = if fk == 0 {
            if mult_phi(cov, p) == 1 {
                Some(Clause::Unramified)
            } else if *qk >= 2 && leading_w(g, p).is_some_and(|w| matches!(center_classify(&w), Center::Edge | Center::Face)) {
                Some(Clause::CenterTangency)
            } else {
                None
            }
        } else if fk < *qk {
            Some(Clause::PartialFixed)
        } else {
            None
        };
        if let Some(cl) = hit {
            return Verdict {
                label: FamilyLabel::GenerallyRamified,
                witness: Some((p.clone(), cl)),
                detail: alloc::format!("p = {p}: {}", cl.token()),
            };
        }
    }
    Verdict { label: FamilyLabel::ExceptionalTransversal, witness: None, detail: String::from("no point satisfies either clause") }
}

/// g(p) after removing the common zero of the entries at p.
pub fn leading_value(g: &FormMatrix, p: &Point) -> crate::groups::M2 {
    let e = g.entries().iter().filter(|(_, f)| !f.is_zero()).map(|(_, f)| ord_at(f, p).expect("nonzero")).min().unwrap_or(0);
    if e == 0 {
        return g.eval_at(p);
    }
    let l = Form::vanishing_at(p).pow(e as u32);
    let cut = |f: &Form| f.div_exact(&l).unwrap_or_else(|| Form::zero(f.degree() - e));
    FormMatrix { a: cut(&g.a), b: cut(&g.b), c: cut(&g.c), d: cut(&g.d) }.eval_at(p)
}

/// w(p) of the rank-one value of g at p.
pub fn leading_w(g: &FormMatrix, p: &Point) -> Option<Point> {
    w_of(&leading_value(g, p))
}
