//! Galois lifts P¹ → P³: invariant lines in Vₙ ⊗ C², isotypic blocks, the
//! choice of a 2-plane, free lines and the divisors 𝒬 and ℱ.

mod catalogue;

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::binforms::{act_unchecked, ord_at, Mat2};
use crate::exactfield::{CycloNum, Field, ParamScalar, Poly};
use crate::groups::{
    build_group, multiplicity, projection_operator, ClassFunction, GroupError, GroupName, SubgroupTable, TwistedRep,
    M2,
};
use crate::invariants::{
    alpha, beta, character_of, edge_form, gamma, omega, orbit, phi, psi, relative_invariants, special_points,
    CoveringKind, Form, KleinCovering, Point,
};
use crate::linalg::{kernel, mat_mul, rank, rref, same_span, solve, Matrix};

pub use catalogue::{catalogue, find_family, Expected, FamilySpec};
pub use crate::invariants::mult_phi;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiftError {
    #[error("`{0}` is not a relative invariant")]
    NotInvariant(String),
    #[error("φ₂ is not a homomorphism: {0}")]
    BadTwist(String),
    #[error("multiplicity {multiplicity} of the block is below 2")]
    BlockTooSmall { multiplicity: usize },
    #[error("every vector of the block is divisible by a form of degree {degree}")]
    CommonFactor { degree: usize },
    #[error("eigen-relation fails at element {0}")]
    NotEquivariant(String),
    #[error("lines do not form an isotypic block: {0}")]
    BadBlock(String),
    #[error("det g vanishes identically")]
    IdenticallyZero,
    #[error("entry {0} of g is the zero form")]
    ZeroEntry(&'static str),
    #[error("a cofactor of degree {degree} does not split over the candidate points")]
    UnresolvedFactor { degree: usize },
    #[error("fixed divisor has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("{constraints} constraints on a block of rank {k} leave dimension {dim}, not 2")]
    WrongCodimension { k: usize, constraints: usize, dim: usize },
    #[error("degenerate parameter: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn element_label(g: &SubgroupTable, i: usize) -> String {
    match g.labels.get(i) {
        Some(l) if !l.is_empty() => l.clone(),
        _ => format!("#{i}"),
    }
}

/// Extend values on the presentation generators along the Cayley graph by
/// v(x·s) = v(x)·v(s). Returns the offending element if two paths disagree.
fn extend_along_generators<T: Clone + PartialEq>(
    g: &SubgroupTable,
    images: &[T],
    one: T,
    mul: impl Fn(&T, &T) -> T,
) -> Result<Vec<T>, usize> {
    let mut val: Vec<Option<T>> = vec![None; g.order()];
    let id = g.identity();
    val[id] = Some(one);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let vx = val[x].clone().expect("visited");
        for (s, img) in g.generators.iter().zip(images) {
            let y = g.mult[x][*s];
            let v = mul(&vx, img);
            match &val[y] {
                None => {
                    val[y] = Some(v);
                    queue.push_back(y);
                }
                Some(w) if *w != v => return Err(y),
                Some(_) => {}
            }
        }
    }
    val.into_iter().enumerate().map(|(i, v)| v.ok_or(i)).collect()
}

/// A pair (φ₁, φ₂): φ₁ is the inclusion of `group` in SU(2), φ₂ its image in
/// S₄*. The group acts on pairs by ρ(g)(p, q) = (A·p, A·q)·φ₂(g)ᵀ.
#[derive(Debug, Clone)]
pub struct Twist {
    pub group: SubgroupTable,
    pub right: Vec<M2>,
}

impl Twist {
    pub fn diagonal(name: GroupName) -> Result<Self, LiftError> {
        let group = build_group(name)?;
        let right = group.elements.clone();
        Ok(Twist { group, right })
    }

    /// φ₂ from the images of the presentation generators.
    pub fn new(name: GroupName, images: &[M2]) -> Result<Self, LiftError> {
        let group = build_group(name)?;
        if images.len() != group.generators.len() {
            return Err(LiftError::BadTwist(format!(
                "{} generator images for {} generators",
                images.len(),
                group.generators.len()
            )));
        }
        let right = extend_along_generators(&group, images, Mat2::identity(), |a, b| a.mul(b))
            .map_err(|e| LiftError::BadTwist(format!("relations fail at {}", element_label(&group, e))))?;
        Ok(Twist { group, right })
    }

    pub fn is_diagonal(&self) -> bool {
        self.right == self.group.elements
    }

    pub fn rep(&self, n: usize) -> TwistedRep {
        TwistedRep { n, left: self.group.elements.clone(), right: self.right.clone() }
    }

    pub fn act(&self, g: usize, p: &Form, q: &Form) -> (Form, Form) {
        let a = &self.group.elements[g];
        let b = &self.right[g];
        let ap = act_unchecked(a, p);
        let aq = act_unchecked(a, q);
        (ap.scale(&b.a).plus(&aq.scale(&b.b)), ap.scale(&b.c).plus(&aq.scale(&b.d)))
    }

    /// λ with ρ(g)(p, q) = λ·(p, q), if there is one.
    pub fn eigenvalue(&self, g: usize, p: &Form, q: &Form) -> Option<CycloNum> {
        let (ap, aq) = self.act(g, p, q);
        let lam = ratio(&ap, p).or_else(|| ratio(&aq, q))?;
        (ap == p.scale(&lam) && aq == q.scale(&lam)).then_some(lam)
    }

    /// λ on every element: computed on the generators, extended
    /// multiplicatively and checked for consistency.
    pub fn eigen_character(&self, p: &Form, q: &Form) -> Result<Vec<CycloNum>, LiftError> {
        let g = &self.group;
        let mut lams = Vec::with_capacity(g.generators.len());
        for &s in &g.generators {
            let lam = self.eigenvalue(s, p, q).ok_or_else(|| LiftError::NotEquivariant(element_label(g, s)))?;
            lams.push(lam);
        }
        extend_along_generators(g, &lams, CycloNum::one(), |a, b| a.mul_ref(b))
            .map_err(|e| LiftError::NotEquivariant(element_label(g, e)))
    }

    /// Index of the one-dimensional irrep carried by the line through (p, q).
    pub fn line_character(&self, p: &Form, q: &Form) -> Result<usize, LiftError> {
        let lam = self.eigen_character(p, q)?;
        let values: Vec<CycloNum> = self.group.classes.iter().map(|c| lam[c[0]].clone()).collect();
        self.group
            .linear_irreps()
            .into_iter()
            .find(|&k| self.group.char_table[k] == values)
            .ok_or_else(|| LiftError::NotEquivariant("not a class function".into()))
    }
}

/// λ with f = λ·g at the first nonzero coefficient of g.
fn ratio(f: &Form, g: &Form) -> Option<CycloNum> {
    let k = g.coeffs().iter().position(|v| !v.is_zero())?;
    f.coeff(k).try_div(g.coeff(k)).ok()
}

/// The vector p⊗e₁ + q⊗e₂ with its character.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantLine {
    pub p: Form,
    pub q: Form,
    pub irrep: usize,
    pub character: ClassFunction,
}

impl InvariantLine {
    pub fn new(tw: &Twist, p: Form, q: Form) -> Result<Self, LiftError> {
        if p.degree() != q.degree() {
            return Err(LiftError::BadBlock(format!("degrees {} and {}", p.degree(), q.degree())));
        }
        if p.is_zero() && q.is_zero() {
            return Err(LiftError::BadBlock("zero vector".into()));
        }
        let irrep = tw.line_character(&p, &q)?;
        Ok(InvariantLine { p, q, irrep, character: tw.group.irrep(irrep) })
    }

    pub fn degree(&self) -> usize {
        self.p.degree()
    }

    /// Coefficients of p, then of q.
    pub fn vector(&self) -> Vec<CycloNum> {
        pair_vector(&self.p, &self.q)
    }

    pub fn pair(&self) -> (Form, Form) {
        (self.p.clone(), self.q.clone())
    }
}

fn pair_vector(p: &Form, q: &Form) -> Vec<CycloNum> {
    p.coeffs().iter().chain(q.coeffs()).cloned().collect()
}

fn vector_pair(v: &[CycloNum], n: usize) -> (Form, Form) {
    (Form::new(v[..=n].to_vec()), Form::new(v[n + 1..].to_vec()))
}

/// (−∂f/∂y, ∂f/∂x).
pub fn line_from_invariant_derivative(tw: &Twist, f: &Form) -> Result<InvariantLine, LiftError> {
    if f.degree() == 0 || character_of(&tw.group, f).is_none() {
        return Err(LiftError::NotInvariant(f.to_string()));
    }
    InvariantLine::new(tw, f.d_dy().neg(), f.d_dx())
}

/// (x, y).
pub fn euler_line(tw: &Twist) -> Result<InvariantLine, LiftError> {
    InvariantLine::new(tw, Form::x(), Form::y())
}

/// (f·p, f·q).
pub fn line_scale(tw: &Twist, f: &Form, base: &InvariantLine) -> Result<InvariantLine, LiftError> {
    if character_of(&tw.group, f).is_none() {
        return Err(LiftError::NotInvariant(f.to_string()));
    }
    InvariantLine::new(tw, f.mul(&base.p), f.mul(&base.q))
}

/// k independent lines of Vₙ ⊗ C² sharing one character.
#[derive(Debug, Clone, PartialEq)]
pub struct IsotypicBlock {
    pub n: usize,
    pub irrep: usize,
    pub lines: Vec<InvariantLine>,
}

impl IsotypicBlock {
    pub fn k(&self) -> usize {
        self.lines.len()
    }
    pub fn pairs(&self) -> Vec<(Form, Form)> {
        self.lines.iter().map(InvariantLine::pair).collect()
    }
    pub fn vectors(&self) -> Matrix<CycloNum> {
        self.lines.iter().map(InvariantLine::vector).collect()
    }
}

pub fn block_from_lines(tw: &Twist, pairs: &[(Form, Form)]) -> Result<IsotypicBlock, LiftError> {
    let first = pairs.first().ok_or_else(|| LiftError::BadBlock("no lines".into()))?;
    let n = first.0.degree();
    let mut lines = Vec::with_capacity(pairs.len());
    for (p, q) in pairs {
        lines.push(InvariantLine::new(tw, p.clone(), q.clone())?);
    }
    let irrep = lines[0].irrep;
    if let Some(l) = lines.iter().find(|l| l.irrep != irrep || l.degree() != n) {
        return Err(LiftError::BadBlock(format!("line {} has another character or degree", l.p)));
    }
    let block = IsotypicBlock { n, irrep, lines };
    if rank(&block.vectors()) != block.k() {
        return Err(LiftError::BadBlock("lines are dependent".into()));
    }
    Ok(block)
}

/// Column space of the projection onto the χ-isotypic part of Vₙ ⊗ C².
pub fn projection_basis(tw: &Twist, n: usize, irrep: usize) -> Vec<(Form, Form)> {
    let p = projection_operator(&tw.group, &tw.rep(n), irrep);
    let cols: Matrix<CycloNum> = (0..p.len()).map(|j| p.iter().map(|row| row[j].clone()).collect()).collect();
    rref(&cols).0.iter().map(|v| vector_pair(v, n)).collect()
}

/// Lines (−∂h/∂y, ∂h/∂x) for relative invariants h of degree n+1 and
/// (f·x, f·y) for f of degree n−1, with character `irrep` under the diagonal
/// action; reduced to an independent set.
pub fn constructive_basis(group: GroupName, n: usize, irrep: usize) -> Result<Vec<(Form, Form)>, LiftError> {
    let bad = |e: crate::invariants::InvariantError| LiftError::BadBlock(e.to_string());
    let mut cands = Vec::new();
    for (h, k) in relative_invariants(group, n + 1).map_err(bad)? {
        if k == irrep {
            cands.push((h.d_dy().neg(), h.d_dx()));
        }
    }
    if n >= 1 {
        for (f, k) in relative_invariants(group, n - 1).map_err(bad)? {
            if k == irrep {
                cands.push((f.mul(&Form::x()), f.mul(&Form::y())));
            }
        }
    }
    Ok(independent_subset(cands))
}

fn independent_subset(cands: Vec<(Form, Form)>) -> Vec<(Form, Form)> {
    let mut kept: Vec<(Form, Form)> = Vec::new();
    let mut rows: Matrix<CycloNum> = Vec::new();
    for (p, q) in cands {
        rows.push(pair_vector(&p, &q));
        if rank(&rows) == rows.len() {
            kept.push((p, q));
        } else {
            rows.pop();
        }
    }
    kept
}

/// gcd of every component of every vector.
pub fn common_factor(pairs: &[(Form, Form)]) -> Form {
    let mut g = Form::zero(0);
    for (p, q) in pairs {
        g = g.gcd(p).gcd(q);
    }
    g
}

/// Multiplicity of the one-dimensional irrep in Vₙ ⊗ C² under the twist.
pub fn block_multiplicity(tw: &Twist, n: usize, irrep: usize) -> Result<usize, LiftError> {
    let chi = tw.rep(n).character(&tw.group);
    Ok(multiplicity(&tw.group, &chi, irrep)?)
}

/// The χ-isotypic block of Vₙ ⊗ C², built from relative invariants for the
/// diagonal twist and from the projection otherwise.
pub fn assemble_block(tw: &Twist, n: usize, irrep: usize) -> Result<IsotypicBlock, LiftError> {
    let m = block_multiplicity(tw, n, irrep)?;
    if m < 2 {
        return Err(LiftError::BlockTooSmall { multiplicity: m });
    }
    let pairs = if tw.is_diagonal() {
        constructive_basis(tw.group.name, n, irrep)?
    } else {
        projection_basis(tw, n, irrep)
    };
    let g = common_factor(&pairs);
    if g.degree() > 0 {
        return Err(LiftError::CommonFactor { degree: g.degree() });
    }
    block_from_lines(tw, &pairs)
}

/// Outcome of the checks a block must pass against the group data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCheck {
    pub multiplicity: usize,
    pub k: usize,
    pub matches_projection: bool,
    pub common_factor_degree: usize,
}

impl BlockCheck {
    pub fn ok(&self) -> bool {
        self.multiplicity == self.k && self.matches_projection && self.common_factor_degree == 0
    }
}

pub fn check_block(tw: &Twist, block: &IsotypicBlock) -> Result<BlockCheck, LiftError> {
    let multiplicity = block_multiplicity(tw, block.n, block.irrep)?;
    let image: Matrix<CycloNum> =
        projection_basis(tw, block.n, block.irrep).iter().map(|(p, q)| pair_vector(p, q)).collect();
    Ok(BlockCheck {
        multiplicity,
        k: block.k(),
        matches_projection: same_span(&image, &block.vectors()),
        common_factor_degree: common_factor(&block.pairs()).degree(),
    })
}

/// A 2×2 matrix of binary forms [[a, b], [c, d]].
#[derive(Debug, Clone, PartialEq)]
pub struct FormMatrix {
    pub a: Form,
    pub b: Form,
    pub c: Form,
    pub d: Form,
}

impl FormMatrix {
    /// Rows are M·lines.
    pub fn from_plane(m: &[Vec<CycloNum>], pairs: &[(Form, Form)]) -> Self {
        let n = pairs[0].0.degree();
        let row = |r: &[CycloNum]| {
            let mut p = Form::zero(n);
            let mut q = Form::zero(n);
            for (c, (lp, lq)) in r.iter().zip(pairs) {
                if !c.is_zero() {
                    p = p.plus(&lp.scale(c));
                    q = q.plus(&lq.scale(c));
                }
            }
            (p, q)
        };
        let (a, b) = row(&m[0]);
        let (c, d) = row(&m[1]);
        FormMatrix { a, b, c, d }
    }

    pub fn degree(&self) -> usize {
        self.a.degree()
    }

    pub fn entries(&self) -> [(&'static str, &Form); 4] {
        [("a", &self.a), ("b", &self.b), ("c", &self.c), ("d", &self.d)]
    }

    pub fn det(&self) -> Form {
        self.a.mul(&self.d).minus(&self.b.mul(&self.c))
    }

    pub fn eval_at(&self, p: &Point) -> M2 {
        Mat2::new(self.a.eval_at(p), self.b.eval_at(p), self.c.eval_at(p), self.d.eval_at(p))
    }

    /// A·g·Bᵀ with A acting on the coefficient rows.
    pub fn transform(&self, a: &M2, b: &M2) -> Self {
        let lin = |s: &CycloNum, f: &Form, t: &CycloNum, h: &Form| f.scale(s).plus(&h.scale(t));
        let r1 = (lin(&b.a, &self.a, &b.b, &self.b), lin(&b.c, &self.a, &b.d, &self.b));
        let r2 = (lin(&b.a, &self.c, &b.b, &self.d), lin(&b.c, &self.c, &b.d, &self.d));
        FormMatrix {
            a: lin(&a.a, &r1.0, &a.b, &r2.0),
            b: lin(&a.a, &r1.1, &a.b, &r2.1),
            c: lin(&a.c, &r1.0, &a.d, &r2.0),
            d: lin(&a.c, &r1.1, &a.d, &r2.1),
        }
    }
}

impl fmt::Display for FormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Plücker coordinates p_ij = a_i b_j − a_j b_i of a 2×k matrix, 1-based.
pub fn pluecker(m: &[Vec<CycloNum>]) -> BTreeMap<(usize, usize), CycloNum> {
    let k = m[0].len();
    let mut out = BTreeMap::new();
    for i in 0..k {
        for j in i + 1..k {
            let v = m[0][i].mul_ref(&m[1][j]).sub_ref(&m[0][j].mul_ref(&m[1][i]));
            out.insert((i + 1, j + 1), v);
        }
    }
    out
}

/// D_ij = P_i Q_j − P_j Q_i, so that det g = Σ p_ij D_ij.
pub fn det_terms(pairs: &[(Form, Form)]) -> BTreeMap<(usize, usize), Form> {
    let mut out = BTreeMap::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let d = pairs[i].0.mul(&pairs[j].1).minus(&pairs[j].0.mul(&pairs[i].1));
            out.insert((i + 1, j + 1), d);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaloisLift {
    pub block: IsotypicBlock,
    pub m: Matrix<CycloNum>,
    pub forms: FormMatrix,
    pub pluecker: BTreeMap<(usize, usize), CycloNum>,
}

impl GaloisLift {
    pub fn new(block: IsotypicBlock, m: Matrix<CycloNum>) -> Result<Self, LiftError> {
        if m.len() != 2 || m.iter().any(|r| r.len() != block.k()) || rank(&m) != 2 {
            return Err(LiftError::WrongCodimension { k: block.k(), constraints: 0, dim: rank(&m) });
        }
        let forms = FormMatrix::from_plane(&m, &block.pairs());
        if let Some((name, _)) = forms.entries().into_iter().find(|(_, f)| f.is_zero()) {
            return Err(LiftError::ZeroEntry(name));
        }
        if forms.det().is_zero() {
            return Err(LiftError::IdenticallyZero);
        }
        let pluecker = pluecker(&m);
        Ok(GaloisLift { block, m, forms, pluecker })
    }

    pub fn degree(&self) -> usize {
        self.block.n
    }
}

/// λ(t) with (φ₁(t)·g)·φ₂(t)ᵀ = λ(t)·g, on every element.
pub fn verify_eigen_relation(tw: &Twist, g: &FormMatrix) -> Result<Vec<CycloNum>, LiftError> {
    let grp = &tw.group;
    let mut lams = Vec::with_capacity(grp.generators.len());
    for &s in &grp.generators {
        let fail = || LiftError::NotEquivariant(element_label(grp, s));
        let l1 = tw.eigenvalue(s, &g.a, &g.b).ok_or_else(fail)?;
        let l2 = tw.eigenvalue(s, &g.c, &g.d).ok_or_else(fail)?;
        if l1 != l2 {
            return Err(fail());
        }
        lams.push(l1);
    }
    extend_along_generators(grp, &lams, CycloNum::one(), |a, b| a.mul_ref(b))
        .map_err(|e| LiftError::NotEquivariant(element_label(grp, e)))
}

/// Named invariant forms whose zero sets serve as divisor atoms.
#[derive(Debug, Clone)]
pub struct NamedAtom {
    pub name: String,
    pub form: Form,
}

pub fn registry_atoms(kind: CoveringKind) -> Vec<NamedAtom> {
    let at = |name: &str, form: Form| NamedAtom { name: name.to_string(), form };
    match kind {
        CoveringKind::Cyclic(_) => vec![at("x", Form::x()), at("y", Form::y())],
        CoveringKind::Dihedral(d) => {
            let d = d as usize;
            vec![at("alpha", alpha(d)), at("beta", beta(d)), at("gamma", gamma())]
        }
        CoveringKind::Tetra => vec![at("Omega", omega()), at("Phi", phi()), at("Psi", psi())],
        CoveringKind::Octa => vec![at("Omega", omega()), at("PhiPsi", phi().mul(&psi())), at("Edge", edge_form())],
    }
}

/// det g = c · Π atoms · R with R = Σ s_j Nu^j De^{m−j} when it lies in that span.
#[derive(Debug, Clone, PartialEq)]
pub struct DetFactorization {
    pub det: Form,
    pub atoms: Vec<(String, usize)>,
    pub rest: Form,
    pub pencil: Option<Vec<CycloNum>>,
}

pub fn lift_det(g: &FormMatrix, cov: &KleinCovering) -> Result<DetFactorization, LiftError> {
    let det = g.det();
    if det.is_zero() {
        return Err(LiftError::IdenticallyZero);
    }
    let mut rest = det.clone();
    let mut atoms = Vec::new();
    for a in registry_atoms(cov.kind) {
        let mut k = 0;
        while let Some(r) = rest.div_exact(&a.form) {
            rest = r;
            k += 1;
        }
        if k > 0 {
            atoms.push((a.name, k));
        }
    }
    let pencil = in_nu_de_span(&rest, cov);
    Ok(DetFactorization { det, atoms, rest, pencil })
}

/// Coordinates of f in the basis Nu^j·De^{m−j}, j = 0..m.
pub fn in_nu_de_span(f: &Form, cov: &KleinCovering) -> Option<Vec<CycloNum>> {
    if f.degree() % cov.degree != 0 {
        return None;
    }
    let m = f.degree() / cov.degree;
    let basis: Vec<Form> = (0..=m).map(|j| cov.nu.pow(j as u32).mul(&cov.de.pow((m - j) as u32))).collect();
    let rows: Matrix<CycloNum> =
        (0..=f.degree()).map(|i| basis.iter().map(|b| b.coeff(i).clone()).collect()).collect();
    solve(&rows, f.coeffs())
}

/// The six free lines of P³ = P(2×2 matrices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FreeLine {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
}

impl FreeLine {
    pub const ALL: [FreeLine; 6] = [FreeLine::L1, FreeLine::L2, FreeLine::L3, FreeLine::L4, FreeLine::L5, FreeLine::L6];

    pub fn index(&self) -> usize {
        *self as usize + 1
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i.checked_sub(1)?).copied()
    }

    pub fn token(&self) -> String {
        format!("L{}", self.index())
    }

    /// The w with column₂ = w·column₁ on the line (∞ for L2).
    pub fn w(&self) -> Point {
        match self {
            FreeLine::L1 => Point::finite(CycloNum::zero()),
            FreeLine::L2 => Point::infinity(),
            l => Point::finite(CycloNum::i().pow((l.index() - 3) as u32)),
        }
    }

    /// P·(w, −1)ᵀ = 0, or P·(1, 0)ᵀ = 0 on L2.
    pub fn contains(&self, p: &M2) -> bool {
        if *self == FreeLine::L2 {
            return p.a.is_zero() && p.c.is_zero();
        }
        let w = self.w().x;
        let m1 = -CycloNum::one();
        let (x, y) = p.apply((&w, &m1));
        x.is_zero() && y.is_zero()
    }

    /// [[1, w], [0, 0]], or [[0, 1], [0, 0]] on L2.
    pub fn representative(&self) -> M2 {
        let z = CycloNum::zero;
        match self {
            FreeLine::L2 => Mat2::new(z(), CycloNum::one(), z(), z()),
            l => Mat2::new(CycloNum::one(), l.w().x, z(), z()),
        }
    }
}

/// Which free line a nonzero rank-one matrix lies on.
pub fn free_line_membership(p: &M2) -> Option<FreeLine> {
    if !p.det().is_zero() {
        return None;
    }
    FreeLine::ALL.into_iter().find(|l| l.contains(p))
}

/// w with column₂ = w·column₁ for a rank-one matrix.
pub fn w_of(p: &M2) -> Option<Point> {
    if !p.det().is_zero() {
        return None;
    }
    Point::new(p.b.clone(), p.a.clone()).or_else(|_| Point::new(p.d.clone(), p.c.clone())).ok()
}

/// σ with L_i·Bᵀ = L_σ(i), as the images of 1..6.
pub fn free_line_permutation(b: &M2) -> Option<[usize; 6]> {
    let bt = b.transpose();
    let mut out = [0; 6];
    for l in FreeLine::ALL {
        out[l.index() - 1] = free_line_membership(&l.representative().mul(&bt))?.index();
    }
    Some(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum At {
    /// The family parameter.
    T,
    Point(CycloNum),
}

/// g⁽ʳ⁾(at) ∈ L: the linear condition on the rows of M, as a covector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub line: FreeLine,
    pub at: At,
    pub order: usize,
}

impl Constraint {
    pub fn new(line: FreeLine, at: At) -> Self {
        Constraint { line, at, order: 0 }
    }

    pub fn derivative(line: FreeLine, at: At, order: usize) -> Self {
        Constraint { line, at, order }
    }

    /// Covector entries as polynomials in the affine coordinate s of the point.
    pub fn polys(&self, pairs: &[(Form, Form)]) -> Vec<Poly<CycloNum>> {
        pairs
            .iter()
            .map(|(p, q)| {
                let mut v = match self.line {
                    FreeLine::L2 => p.dehomogenize(),
                    l => p.dehomogenize().scale(&l.w().x).sub(&q.dehomogenize()),
                };
                for _ in 0..self.order {
                    v = v.derivative();
                }
                v
            })
            .collect()
    }

    pub fn vector(&self, pairs: &[(Form, Form)], t: Option<&CycloNum>) -> Result<Vec<CycloNum>, LiftError> {
        let s = match (&self.at, t) {
            (At::Point(c), _) => c,
            (At::T, Some(t)) => t,
            (At::T, None) => return Err(LiftError::Degenerate("constraint needs t".into())),
        };
        Ok(self.polys(pairs).iter().map(|v| v.eval(s)).collect())
    }

    /// The covector with t kept symbolic.
    pub fn vector_param(&self, pairs: &[(Form, Form)]) -> Vec<ParamScalar> {
        self.polys(pairs)
            .into_iter()
            .map(|v| match &self.at {
                At::T => ParamScalar::from_poly(v),
                At::Point(c) => ParamScalar::from_cyclo(v.eval(c)),
            })
            .collect()
    }

    /// lim_{t→t₀} v(t)/(t − t₀)^m with m the least order among the entries.
    pub fn limit_vector(&self, pairs: &[(Form, Form)], t0: &CycloNum) -> Result<Vec<CycloNum>, LiftError> {
        let mut polys = self.polys(pairs);
        if polys.iter().all(Poly::is_zero) {
            return Err(LiftError::Degenerate("constraint vanishes identically".into()));
        }
        let mut fact = CycloNum::one();
        for m in 0.. {
            let v: Vec<CycloNum> = polys.iter().map(|p| p.eval(t0)).collect();
            if v.iter().any(|x| !x.is_zero()) {
                let inv = fact.try_inv().expect("nonzero factorial");
                return Ok(v.iter().map(|x| x.mul_ref(&inv)).collect());
            }
            polys = polys.iter().map(Poly::derivative).collect();
            fact = fact.mul_ref(&CycloNum::from_int(m + 1));
        }
        unreachable!()
    }
}

/// The 2-plane annihilated by the constraint covectors under Σ xᵢyᵢ, in
/// reduced row echelon form.
pub fn perp_solve<F: Field>(k: usize, constraints: &[Vec<F>]) -> Result<Matrix<F>, LiftError> {
    let ker = if constraints.is_empty() {
        (0..k).map(|i| (0..k).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect()
    } else {
        kernel(constraints, k)
    };
    if ker.len() != 2 {
        return Err(LiftError::WrongCodimension { k, constraints: constraints.len(), dim: ker.len() });
    }
    Ok(rref(&ker).0)
}

/// How a family picks its 2-plane inside the block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaneRule {
    Fixed(Vec<Vec<CycloNum>>),
    Perp(Vec<Constraint>),
    /// Constraints at t replaced by their normalized limits at t₀.
    PerpLimit { constraints: Vec<Constraint>, t0: CycloNum },
    /// After the `pre` constraints a 3-dimensional space remains; take a
    /// plane whose lift degenerates at `at`.
    Pencil { pre: Vec<Constraint>, at: At },
}

impl PlaneRule {
    pub fn uses_t(&self) -> bool {
        match self {
            PlaneRule::Fixed(_) | PlaneRule::PerpLimit { .. } => false,
            PlaneRule::Perp(cs) => cs.iter().any(|c| c.at == At::T),
            PlaneRule::Pencil { pre, at } => *at == At::T || pre.iter().any(|c| c.at == At::T),
        }
    }
}

/// Choices for the free direction e of a pencil plane, tried in order.
const PENCIL_DIRECTIONS: [[i64; 3]; 4] = [[1, 2, 3], [2, -1, 5], [3, 5, -2], [1, 1, 1]];

pub fn select_plane(rule: &PlaneRule, pairs: &[(Form, Form)], t: Option<&CycloNum>) -> Result<Matrix<CycloNum>, LiftError> {
    let k = pairs.len();
    match rule {
        PlaneRule::Fixed(m) => Ok(rref(m).0),
        PlaneRule::Perp(cs) => {
            let vs = cs.iter().map(|c| c.vector(pairs, t)).collect::<Result<Vec<_>, _>>()?;
            perp_solve(k, &vs)
        }
        PlaneRule::PerpLimit { constraints, t0 } => {
            let vs = constraints
                .iter()
                .map(|c| if c.at == At::T { c.limit_vector(pairs, t0) } else { c.vector(pairs, None) })
                .collect::<Result<Vec<_>, _>>()?;
            perp_solve(k, &vs)
        }
        PlaneRule::Pencil { pre, at } => {
            let (_, m) = pencil_planes(pre, at, pairs, t)?.into_iter().next().expect("nonempty");
            Ok(m)
        }
    }
}

/// Candidate pencil planes (direction index, M), in the order tried.
pub fn pencil_planes(
    pre: &[Constraint],
    at: &At,
    pairs: &[(Form, Form)],
    t: Option<&CycloNum>,
) -> Result<Vec<(usize, Matrix<CycloNum>)>, LiftError> {
    let k = pairs.len();
    let vs = pre.iter().map(|c| c.vector(pairs, t)).collect::<Result<Vec<_>, _>>()?;
    let base: Matrix<CycloNum> = if vs.is_empty() {
        (0..k).map(|i| (0..k).map(|j| CycloNum::from_int((i == j) as i64)).collect()).collect()
    } else {
        rref(&kernel(&vs, k)).0
    };
    if base.len() != 3 {
        return Err(LiftError::WrongCodimension { k, constraints: vs.len(), dim: base.len() });
    }
    let reduced: Vec<(Form, Form)> = base
        .iter()
        .map(|r| {
            let f = FormMatrix::from_plane(&[r.clone(), r.clone()], pairs);
            (f.a, f.b)
        })
        .collect();
    let d = det_terms(&reduced);
    let s = match at {
        At::T => t.ok_or_else(|| LiftError::Degenerate("pencil needs t".into()))?.clone(),
        At::Point(c) => c.clone(),
    };
    let h = pencil_normal(&d, &s)?;
    let mut out = Vec::new();
    for (idx, e) in PENCIL_DIRECTIONS.iter().enumerate() {
        let e: Vec<CycloNum> = e.iter().map(|&v| CycloNum::from_int(v)).collect();
        // Plücker vector p = h × e in the order (12, 13, 23)
        let p = [
            h[1].mul_ref(&e[2]).sub_ref(&h[2].mul_ref(&e[1])),
            h[2].mul_ref(&e[0]).sub_ref(&h[0].mul_ref(&e[2])),
            h[0].mul_ref(&e[1]).sub_ref(&h[1].mul_ref(&e[0])),
        ];
        let normal = vec![p[2].clone(), p[1].neg_ref(), p[0].clone()];
        if normal.iter().all(CycloNum::is_zero) {
            continue;
        }
        let m3 = perp_solve(3, &[normal])?;
        out.push((idx, rref(&mat_mul(&m3, &base)).0));
    }
    if out.is_empty() {
        return Err(LiftError::Degenerate("no pencil direction".into()));
    }
    Ok(out)
}

/// (h₁₂, h₁₃, h₂₃)(s) where h_ij = D_ij / G and G is the largest common
/// factor of the D_ij at s.
fn pencil_normal(d: &BTreeMap<(usize, usize), Form>, s: &CycloNum) -> Result<[CycloNum; 3], LiftError> {
    let keys = [(1, 2), (1, 3), (2, 3)];
    let pt = Point::finite(s.clone());
    let ords: Vec<Option<usize>> =
        keys.iter().map(|k| (!d[k].is_zero()).then(|| ord_at(&d[k], &pt).expect("nonzero"))).collect();
    let m = ords.iter().flatten().copied().min().ok_or(LiftError::IdenticallyZero)?;
    let mut out: [CycloNum; 3] = Default::default();
    for (i, k) in keys.iter().enumerate() {
        if ords[i].is_some() {
            let mut p = d[k].dehomogenize();
            for _ in 0..m {
                p = p.derivative();
            }
            out[i] = p.eval(s);
        }
    }
    Ok(out)
}

/// A divisor on P¹ as points with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Divisor {
    pub points: Vec<(Point, usize)>,
}

/// A support descriptor: a point or a named invariant form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Support {
    Point(Point),
    Named(String, usize),
}

impl Divisor {
    pub fn new(points: Vec<(Point, usize)>) -> Self {
        Divisor { points: points.into_iter().filter(|(_, k)| *k > 0).collect() }
    }

    pub fn degree(&self) -> usize {
        self.points.iter().map(|(_, k)| k).sum()
    }

    pub fn ord(&self, p: &Point) -> usize {
        self.points.iter().find(|(q, _)| q == p).map_or(0, |(_, k)| *k)
    }

    pub fn support(&self) -> Vec<&Point> {
        self.points.iter().map(|(p, _)| p).collect()
    }

    pub fn leq(&self, o: &Divisor) -> bool {
        self.points.iter().all(|(p, k)| o.ord(p) >= *k)
    }

    /// Greedy rewrite in named atoms (each taken with the least multiplicity
    /// over its roots), remaining points listed singly.
    pub fn describe(&self, atoms: &[(String, Vec<Point>)]) -> Vec<(Support, usize)> {
        let mut left: Vec<(Point, usize)> = self.points.clone();
        let mut out = Vec::new();
        for (name, roots) in atoms {
            if roots.is_empty() {
                continue;
            }
            let ord = |p: &Point, left: &[(Point, usize)]| left.iter().find(|(q, _)| q == p).map_or(0, |(_, k)| *k);
            let k = roots.iter().map(|r| ord(r, &left)).min().unwrap_or(0);
            if k == 0 {
                continue;
            }
            for (q, m) in left.iter_mut() {
                if roots.contains(q) {
                    *m -= k;
                }
            }
            left.retain(|(_, m)| *m > 0);
            out.push((Support::Named(name.clone(), roots.len()), k));
        }
        out.extend(left.into_iter().map(|(p, k)| (Support::Point(p), k)));
        out
    }

    pub fn display(&self, atoms: &[(String, Vec<Point>)]) -> String {
        let parts: Vec<String> = self
            .describe(atoms)
            .into_iter()
            .map(|(s, k)| {
                let body = match s {
                    Support::Point(p) => format!("({p})"),
                    Support::Named(n, _) => format!("({n})"),
                };
                if k == 1 {
                    body
                } else {
                    format!("{k}{body}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Atoms for describing divisors of a covering, with the fiber through t.
pub fn divisor_atoms(kind: CoveringKind, t: Option<&Point>) -> Vec<(String, Vec<Point>)> {
    let pts = special_points();
    let mut out: Vec<(String, Vec<Point>)> = registry_atoms(kind)
        .into_iter()
        .map(|a| {
            let roots = pts.iter().filter(|p| a.form.eval_at(p).is_zero()).cloned().collect();
            (a.name, roots)
        })
        .collect();
    if let Some(t) = t {
        out.push(("fiber(t)".to_string(), orbit(kind, t)));
    }
    out
}

/// Special points followed by the orbit of t.
pub fn candidate_points(kind: CoveringKind, t: Option<&Point>) -> Vec<Point> {
    let mut out = special_points();
    if let Some(t) = t {
        for p in orbit(kind, t) {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// Root divisor of det g over the candidate points.
pub fn divisor_q(g: &FormMatrix, candidates: &[Point]) -> Result<Divisor, LiftError> {
    let det = g.det();
    let (found, rest) = det.split_over(candidates).map_err(|_| LiftError::IdenticallyZero)?;
    if rest.degree() > 0 {
        return Err(LiftError::UnresolvedFactor { degree: rest.degree() });
    }
    Ok(Divisor::new(found))
}

/// ℱ = min over the seven coefficient forms of f₁∘g, whose degree must be
/// 6(deg g − deg φ).
pub fn divisor_f(f7: &[Form], candidates: &[Point], deg_g: usize, deg_phi: usize) -> Result<Divisor, LiftError> {
    let mut points = Vec::new();
    for p in candidates {
        let k = f7
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| ord_at(f, p).expect("nonzero"))
            .min()
            .ok_or(LiftError::IdenticallyZero)?;
        if k > 0 {
            points.push((p.clone(), k));
        }
    }
    let d = Divisor::new(points);
    let expected = 6 * deg_g.checked_sub(deg_phi).ok_or(LiftError::DegreeMismatch { expected: 0, found: d.degree() })?;
    if d.degree() != expected {
        return Err(LiftError::DegreeMismatch { expected, found: d.degree() });
    }
    Ok(d)
}

/// A with A·g₁·Bᵀ proportional to g₂, searching B over S₄*.
pub fn psl2_equivalent(g1: &FormMatrix, g2: &FormMatrix) -> Option<(M2, M2)> {
    if g1.degree() != g2.degree() {
        return None;
    }
    let s4 = build_group(GroupName::BinOcta).ok()?;
    for b in &s4.elements {
        let h = g1.transform(&Mat2::identity(), b);
        // rows of g₂ as combinations of the rows of h
        let cols: Vec<Vec<CycloNum>> = vec![pair_vector(&h.a, &h.b), pair_vector(&h.c, &h.d)];
        let rows: Matrix<CycloNum> = (0..cols[0].len()).map(|i| vec![cols[0][i].clone(), cols[1][i].clone()]).collect();
        let Some(r1) = solve(&rows, &pair_vector(&g2.a, &g2.b)) else { continue };
        let Some(r2) = solve(&rows, &pair_vector(&g2.c, &g2.d)) else { continue };
        let a = Mat2::new(r1[0].clone(), r1[1].clone(), r2[0].clone(), r2[1].clone());
        if !a.det().is_zero() {
            return Some((a, b.clone()));
        }
    }
    None
}
