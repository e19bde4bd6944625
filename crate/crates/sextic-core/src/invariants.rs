//! Fundamental invariants of the binary polyhedral groups, their syzygies,
//! the Klein coverings P¹ → P¹ and the 26 centers of the octahedron.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::binforms::{act_unchecked, ord_at, BinaryForm, ProjPoint};
use crate::exactfield::{CycloNum, Field};
use crate::groups::{build_group, GroupName, SubgroupTable};

pub type Form = BinaryForm<CycloNum>;
pub type Point = ProjPoint<CycloNum>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("`{0}` is not a relative invariant")]
    NotInvariant(String),
}

fn c(k: i64) -> CycloNum {
    CycloNum::from_int(k)
}

/// α_d = (x^d − y^d)/2.
pub fn alpha(d: usize) -> Form {
    let mut co = vec![CycloNum::zero(); d + 1];
    co[0] = CycloNum::from_ratio(1, 2);
    co[d] = CycloNum::from_ratio(-1, 2);
    Form::new(co)
}

/// β_d = (x^d + y^d)/2.
pub fn beta(d: usize) -> Form {
    let mut co = vec![CycloNum::zero(); d + 1];
    co[0] = CycloNum::from_ratio(1, 2);
    co[d] = CycloNum::from_ratio(1, 2);
    Form::new(co)
}

pub fn gamma() -> Form {
    Form::from_ints(&[0, 1, 0])
}

/// Φ = x⁴ − 2√3 i x²y² + y⁴.
pub fn phi() -> Form {
    let m = c(2) * CycloNum::sqrt_neg3();
    Form::new(vec![c(1), c(0), -m, c(0), c(1)])
}

/// Ψ = x⁴ + 2√3 i x²y² + y⁴.
pub fn psi() -> Form {
    let m = c(2) * CycloNum::sqrt_neg3();
    Form::new(vec![c(1), c(0), m, c(0), c(1)])
}

/// Ω = xy(x⁴ − y⁴).
pub fn omega() -> Form {
    Form::from_ints(&[0, 1, 0, 0, 0, -1, 0])
}

/// (Φ³ + Ψ³)/2.
pub fn edge_form() -> Form {
    phi().pow(3).plus(&psi().pow(3)).scale(&CycloNum::from_ratio(1, 2))
}

#[derive(Debug, Clone)]
pub struct RegistryEntry {
    pub name: String,
    pub form: Form,
    /// Index of the one-dimensional irrep acting on the form.
    pub character: usize,
}

/// Σ coeff · Π entry^power.
#[derive(Debug, Clone)]
pub struct Syzygy {
    pub terms: Vec<(CycloNum, Vec<(String, u32)>)>,
}

#[derive(Debug, Clone)]
pub struct InvariantRegistry {
    pub group: GroupName,
    /// ι₀, ι₁, ι₂ first, derived products after.
    pub entries: Vec<RegistryEntry>,
    pub syzygy: Syzygy,
}

impl InvariantRegistry {
    pub fn get(&self, name: &str) -> Option<&RegistryEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn form(&self, name: &str) -> &Form {
        &self.get(name).unwrap_or_else(|| panic!("no invariant `{name}`")).form
    }

    /// The syzygy evaluated on the stored forms.
    pub fn syzygy_residual(&self) -> Form {
        let mut acc: Option<Form> = None;
        for (k, mono) in &self.syzygy.terms {
            let mut t = Form::one();
            for (name, e) in mono {
                t = t.mul(&self.form(name).pow(*e));
            }
            let t = t.scale(k);
            acc = Some(match acc {
                None => t,
                Some(a) => a.plus(&t),
            });
        }
        acc.expect("nonempty syzygy")
    }

    /// ι₀, ι₁, ι₂ in the table's order.
    pub fn iota(&self, k: usize) -> &RegistryEntry {
        &self.entries[k]
    }
}

/// The one-dimensional irrep χ with A·f = χ(A)·f for every element A, if any.
pub fn character_of(g: &SubgroupTable, f: &Form) -> Option<usize> {
    let mut values = Vec::with_capacity(g.classes.len());
    for cl in &g.classes {
        let a = &g.elements[cl[0]];
        let af = act_unchecked(a, f);
        let k = f.coeffs().iter().position(|v| !v.is_zero())?;
        let lam = af.coeff(k).try_div(f.coeff(k)).ok()?;
        if af != f.scale(&lam) {
            return None;
        }
        values.push(lam);
    }
    g.linear_irreps().into_iter().find(|&k| g.char_table[k] == values)
}

fn entry(g: &SubgroupTable, name: &str, form: Form) -> Result<RegistryEntry, InvariantError> {
    let character = character_of(g, &form).ok_or_else(|| InvariantError::NotInvariant(name.to_string()))?;
    Ok(RegistryEntry { name: name.to_string(), form, character })
}

fn mono(parts: &[(&str, u32)]) -> Vec<(String, u32)> {
    parts.iter().map(|(n, e)| (n.to_string(), *e)).collect()
}

pub fn fundamental_invariants(group: GroupName) -> Result<InvariantRegistry, InvariantError> {
    let unknown = || InvariantError::UnknownGroup(group.token());
    let g = build_group(group).map_err(|_| unknown())?;
    let (entries, syzygy) = match group {
        GroupName::BinDihedral(d) => {
            let d = d as usize;
            let e = vec![entry(&g, "alpha", alpha(d))?, entry(&g, "beta", beta(d))?, entry(&g, "gamma", gamma())?];
            let s = Syzygy {
                terms: vec![
                    (c(1), mono(&[("alpha", 2)])),
                    (c(-1), mono(&[("beta", 2)])),
                    (c(1), mono(&[("gamma", d as u32)])),
                ],
            };
            (e, s)
        }
        GroupName::BinTetra => {
            let e = vec![entry(&g, "Phi", phi())?, entry(&g, "Omega", omega())?, entry(&g, "Psi", psi())?];
            let s = Syzygy {
                terms: vec![
                    (c(1), mono(&[("Phi", 3)])),
                    (c(12) * CycloNum::sqrt_neg3(), mono(&[("Omega", 2)])),
                    (c(-1), mono(&[("Psi", 3)])),
                ],
            };
            (e, s)
        }
        GroupName::BinOcta => {
            let e = vec![
                entry(&g, "Omega", omega())?,
                entry(&g, "Edge", edge_form())?,
                entry(&g, "PhiPsi", phi().mul(&psi()))?,
            ];
            let s = Syzygy {
                terms: vec![
                    (c(108), mono(&[("Omega", 4)])),
                    (c(1), mono(&[("Edge", 2)])),
                    (c(-1), mono(&[("PhiPsi", 3)])),
                ],
            };
            (e, s)
        }
        GroupName::Cyclic(_) => return Err(unknown()),
    };
    Ok(InvariantRegistry { group, entries, syzygy })
}

/// Relative invariants of degree n spanning every isotypic piece of V_n with a
/// one-dimensional character: monomials in the fundamental invariants (or in
/// x, y for cyclic groups), each with its character index.
pub fn relative_invariants(group: GroupName, n: usize) -> Result<Vec<(Form, usize)>, InvariantError> {
    let g = build_group(group).map_err(|_| InvariantError::UnknownGroup(group.token()))?;
    let gens: Vec<Form> = match group {
        GroupName::Cyclic(_) => vec![Form::x(), Form::y()],
        _ => fundamental_invariants(group)?.entries.into_iter().map(|e| e.form).collect(),
    };
    let mut out = Vec::new();
    let mut exps = vec![0usize; gens.len()];
    monomials(&gens, 0, n, &mut exps, &mut |f| {
        let k = character_of(&g, &f).expect("monomials in relative invariants are relative invariants");
        out.push((f, k));
    });
    Ok(out)
}

fn monomials(gens: &[Form], at: usize, left: usize, exps: &mut Vec<usize>, sink: &mut dyn FnMut(Form)) {
    if at == gens.len() {
        if left == 0 {
            let mut f = Form::one();
            for (g, &e) in gens.iter().zip(exps.iter()) {
                if e > 0 {
                    f = f.mul(&g.pow(e as u32));
                }
            }
            sink(f);
        }
        return;
    }
    let d = gens[at].degree();
    for e in 0..=left / d {
        exps[at] = e;
        monomials(gens, at + 1, left - e * d, exps, sink);
    }
    exps[at] = 0;
}

/// Galois coverings of P¹ by P¹ with rational deck group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoveringKind {
    Cyclic(u32),
    Dihedral(u32),
    Tetra,
    Octa,
}

impl CoveringKind {
    pub fn parse(s: &str) -> Result<Self, InvariantError> {
        let bad = || InvariantError::UnknownGroup(s.to_string());
        match s {
            "A4" => return Ok(CoveringKind::Tetra),
            "S4" => return Ok(CoveringKind::Octa),
            _ => {}
        }
        let (head, rest) = s.split_at(1.min(s.len()));
        let k: u32 = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
        let kind = match head {
            "C" => CoveringKind::Cyclic(k),
            "D" => CoveringKind::Dihedral(k),
            _ => return Err(bad()),
        };
        kind.binary_group().map_err(|_| bad())?;
        Ok(kind)
    }

    pub fn token(&self) -> String {
        match self {
            CoveringKind::Cyclic(n) => format!("C{n}"),
            CoveringKind::Dihedral(j) => format!("D{j}"),
            CoveringKind::Tetra => "A4".to_string(),
            CoveringKind::Octa => "S4".to_string(),
        }
    }

    /// The binary group acting upstairs.
    pub fn binary_group(&self) -> Result<GroupName, InvariantError> {
        let g = match *self {
            CoveringKind::Cyclic(n) if n > 0 && 24 % (2 * n) == 0 => GroupName::Cyclic(2 * n),
            CoveringKind::Dihedral(j) if (2..=4).contains(&j) => GroupName::BinDihedral(j),
            CoveringKind::Tetra => GroupName::BinTetra,
            CoveringKind::Octa => GroupName::BinOcta,
            _ => return Err(InvariantError::UnknownGroup(self.token())),
        };
        Ok(g)
    }

    /// Order of the projective deck group.
    pub fn degree(&self) -> usize {
        match *self {
            CoveringKind::Cyclic(n) => n as usize,
            CoveringKind::Dihedral(j) => 2 * j as usize,
            CoveringKind::Tetra => 12,
            CoveringKind::Octa => 24,
        }
    }
}

#[derive(Debug, Clone)]
pub struct KleinCovering {
    pub kind: CoveringKind,
    pub nu: Form,
    pub de: Form,
    pub degree: usize,
}

pub fn klein_covering(kind: CoveringKind) -> Result<KleinCovering, InvariantError> {
    kind.binary_group()?;
    let (nu, de) = match kind {
        CoveringKind::Cyclic(n) => {
            let n = n as usize;
            (Form::monomial(n, 0, c(1)), Form::monomial(n, n, c(1)))
        }
        CoveringKind::Dihedral(j) => (alpha(j as usize).pow(2).neg(), gamma().pow(j)),
        CoveringKind::Tetra => (phi().pow(3), psi().pow(3)),
        CoveringKind::Octa => (phi().mul(&psi()).pow(3), omega().pow(4).scale(&c(108))),
    };
    let degree = nu.degree();
    Ok(KleinCovering { kind, nu, de, degree })
}

impl KleinCovering {
    /// φ∘A = φ for every element of the binary group, checked as
    /// (A·Nu)·De = (A·De)·Nu.
    pub fn check_invariance(&self) -> bool {
        let g = match self.kind.binary_group().ok().and_then(|n| build_group(n).ok()) {
            Some(g) => g,
            None => return false,
        };
        g.elements.iter().all(|a| {
            act_unchecked(a, &self.nu).mul(&self.de) == act_unchecked(a, &self.de).mul(&self.nu)
        })
    }

    /// s₁·Nu + s₂·De.
    pub fn pencil(&self, s1: &CycloNum, s2: &CycloNum) -> Form {
        self.nu.scale(s1).plus(&self.de.scale(s2))
    }

    /// Nu(p)·De − De(p)·Nu, whose zeros form the fiber through p.
    pub fn fiber_form(&self, p: &Point) -> Form {
        self.pencil(&self.de.eval_at(p), &-self.nu.eval_at(p))
    }

    pub fn is_pole(&self, p: &Point) -> bool {
        self.de.eval_at(p).is_zero()
    }
}

/// Which locus the zeros of s₁Nu + s₂De make up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PencilZeros {
    NuLocus,
    DeLocus,
    Iota1Squared,
    PrincipalOrbit,
}

impl PencilZeros {
    pub fn token(&self) -> &'static str {
        match self {
            PencilZeros::NuLocus => "Nu-locus",
            PencilZeros::DeLocus => "De-locus",
            PencilZeros::Iota1Squared => "iota1^2-locus",
            PencilZeros::PrincipalOrbit => "principal-orbit",
        }
    }
}

/// Zeros of s₁Nu + s₂De. Panics on (0, 0).
pub fn pencil_zero_class(cov: &KleinCovering, s1: &CycloNum, s2: &CycloNum) -> (PencilZeros, Form) {
    assert!(!(s1.is_zero() && s2.is_zero()), "pencil parameter (0, 0)");
    let f = cov.pencil(s1, s2);
    let class = if s2.is_zero() {
        PencilZeros::NuLocus
    } else if s1.is_zero() {
        PencilZeros::DeLocus
    } else if (s1.clone() + s2.clone()).is_zero() && !matches!(cov.kind, CoveringKind::Cyclic(_)) {
        PencilZeros::Iota1Squared
    } else {
        PencilZeros::PrincipalOrbit
    };
    (class, f)
}

/// Local degree of φ at p.
pub fn mult_phi(cov: &KleinCovering, p: &Point) -> usize {
    if cov.is_pole(p) {
        return ord_at(&cov.de, p).expect("nonzero");
    }
    ord_at(&cov.fiber_form(p), p).expect("fiber form is nonzero")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Center {
    Vertex,
    Edge,
    Face,
    Generic,
}

impl Center {
    pub fn token(&self) -> &'static str {
        match self {
            Center::Vertex => "vertex",
            Center::Edge => "edge",
            Center::Face => "face",
            Center::Generic => "generic",
        }
    }
}

/// Vertex, edge or face center of the octahedron with vertices 0, ∞, ±1, ±i.
pub fn center_classify(w: &Point) -> Center {
    if omega().eval_at(w).is_zero() {
        Center::Vertex
    } else if edge_form().eval_at(w).is_zero() {
        Center::Edge
    } else if phi().mul(&psi()).eval_at(w).is_zero() {
        Center::Face
    } else {
        Center::Generic
    }
}

/// The three factors (w⁵ − w), (w⁸ + 14w⁴ + 1), (w¹² − 33w⁸ − 33w⁴ + 1) at a
/// finite point; at ∞ the leading coefficients.
pub fn center_factors(w: &Point) -> [CycloNum; 3] {
    // w⁵ − w homogenized in degree 6 so that ∞ is a root
    let fs = [
        Form::from_ints(&[0, 1, 0, 0, 0, -1, 0]),
        Form::from_ints(&[1, 0, 0, 0, 14, 0, 0, 0, 1]),
        Form::from_ints(&[1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1]),
    ];
    fs.map(|f| f.eval_at(w))
}

fn octa_orbit(seed: &Point) -> Vec<Point> {
    let g = build_group(GroupName::BinOcta).expect("octahedral group");
    let mut out: Vec<Point> = Vec::new();
    for a in &g.elements {
        let p = a.act_point(seed);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// The 6 vertices, 12 edge centers and 8 face centers.
pub fn centers() -> Vec<Point> {
    let s2 = CycloNum::sqrt2();
    let edge = Point::finite(s2.clone() - c(1));
    let face = Point::finite(CycloNum::xi(1) * (CycloNum::sqrt3() - c(1)) * s2.try_inv().expect("nonzero"));
    let mut out = octa_orbit(&Point::finite(CycloNum::zero()));
    out.extend(octa_orbit(&edge));
    out.extend(octa_orbit(&face));
    out
}

/// Every point where a registry atom of any group can vanish: the 26 centers,
/// the 24th roots of unity, 0 and ∞.
pub fn special_points() -> Vec<Point> {
    let mut out = centers();
    for j in 0..24 {
        let p = Point::finite(CycloNum::zeta(j));
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Roots of a form that splits over the special points, with multiplicities;
/// `None` if a cofactor of positive degree remains.
pub fn special_roots(f: &Form) -> Option<Vec<(Point, usize)>> {
    let (found, rest) = f.split_over(&special_points()).ok()?;
    (rest.degree() == 0).then_some(found)
}

/// Orbit of a point under the binary group of a covering.
pub fn orbit(kind: CoveringKind, p: &Point) -> Vec<Point> {
    let g = build_group(kind.binary_group().expect("valid covering")).expect("group");
    let mut out: Vec<Point> = Vec::new();
    for a in &g.elements {
        let q = a.act_point(p);
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

/// Branch data at the zeros of the three fundamental invariants: for each of
/// ι₀, ι₁, ι₂ the set of local degrees of φ there.
pub fn branch_multiplicities(kind: CoveringKind) -> Result<[Vec<usize>; 3], InvariantError> {
    let cov = klein_covering(kind)?;
    let forms: [Form; 3] = match kind {
        CoveringKind::Cyclic(_) => return Err(InvariantError::UnknownGroup(kind.token())),
        CoveringKind::Dihedral(d) => [alpha(d as usize), beta(d as usize), gamma()],
        CoveringKind::Tetra => [phi(), omega(), psi()],
        CoveringKind::Octa => [omega(), edge_form(), phi().mul(&psi())],
    };
    let mut out: [Vec<usize>; 3] = Default::default();
    for (k, f) in forms.iter().enumerate() {
        let roots = special_roots(f).ok_or_else(|| InvariantError::NotInvariant(format!("iota{k}")))?;
        let mut ms: Vec<usize> = roots.iter().map(|(p, _)| mult_phi(&cov, p)).collect();
        ms.sort_unstable();
        ms.dedup();
        out[k] = ms;
    }
    Ok(out)
}
