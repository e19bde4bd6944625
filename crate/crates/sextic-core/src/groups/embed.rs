use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{t_mat, GroupError, SubgroupTable, M2};
use crate::binforms::ProjPoint;
use crate::exactfield::{CycloNum, Field};

/// An injective homomorphism, stored as the image index of every source element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Embedding {
    pub images: Vec<usize>,
}

impl Embedding {
    pub fn image_matrices(&self, target: &SubgroupTable) -> Vec<M2> {
        self.images.iter().map(|&k| target.elements[k].clone()).collect()
    }
}

#[derive(Debug, Clone)]
pub struct EmbeddingClass {
    pub representative: Embedding,
    /// Number of embeddings in the class that pass the filter.
    pub size: usize,
    /// Number of distinct image subgroups met by the class.
    pub images: usize,
}

/// Restricts embeddings to those where the named source generator maps to an
/// element whose fixed points on P¹ are among 0, ∞, ±1, ±i.
pub fn free_line_filter(target: &SubgroupTable, e: &Embedding, source_element: usize) -> bool {
    let m = &target.elements[e.images[source_element]];
    fixed_points(m).iter().all(is_free_vertex)
}

fn is_free_vertex(p: &ProjPoint<CycloNum>) -> bool {
    match p.value() {
        None => true,
        Some(w) => {
            w.is_zero() || [CycloNum::one(), CycloNum::i(), -CycloNum::one(), -CycloNum::i()].contains(w)
        }
    }
}

/// Fixed points of the Möbius map of an SU(2) element other than ±Id.
pub fn fixed_points(m: &M2) -> Vec<ProjPoint<CycloNum>> {
    let j = super::eigen_exponent(m);
    let mut out = Vec::new();
    for l in [CycloNum::zeta(j), CycloNum::zeta(-j)] {
        let v = if !m.b.is_zero() {
            (m.b.clone(), l - m.a.clone())
        } else if !m.c.is_zero() {
            (l - m.d.clone(), m.c.clone())
        } else if m.a == l {
            (CycloNum::one(), CycloNum::zero())
        } else {
            (CycloNum::zero(), CycloNum::one())
        };
        let p = ProjPoint::new(v.0, v.1).expect("nonzero eigenvector");
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// All injective homomorphisms source → target.
pub fn all_embeddings(source: &SubgroupTable, target: &SubgroupTable) -> Vec<Embedding> {
    let gens = &source.generators;
    let n = source.order();
    let tn = target.order();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if let Some(e) = extend(source, target, &choice) {
            let distinct: BTreeSet<usize> = e.images.iter().copied().collect();
            if distinct.len() == n {
                out.push(e);
            }
        }
        // odometer over generator images
        let mut k = 0;
        loop {
            if k == choice.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < tn {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Extend generator images to a homomorphism along the right Cayley graph.
fn extend(source: &SubgroupTable, target: &SubgroupTable, gen_images: &[usize]) -> Option<Embedding> {
    let n = source.order();
    let mut img: Vec<Option<usize>> = vec![None; n];
    let e = source.identity();
    img[e] = Some(target.identity());
    let mut queue = vec![e];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let ix = img[x].expect("assigned");
        for (g, &h) in source.generators.iter().zip(gen_images) {
            let y = source.mult[x][*g];
            let iy = target.mult[ix][h];
            match img[y] {
                Some(v) if v != iy => return None,
                Some(_) => {}
                None => {
                    img[y] = Some(iy);
                    queue.push(y);
                }
            }
        }
    }
    Some(Embedding { images: img.into_iter().map(|v| v.expect("generated")).collect() })
}

/// Embeddings up to conjugation in the target. With `filter = Some(s)`, only
/// embeddings passing [`free_line_filter`] at source element `s` are kept and
/// classes without such members are dropped.
pub fn classify_embeddings(
    source: &SubgroupTable,
    target: &SubgroupTable,
    filter: Option<usize>,
) -> Vec<EmbeddingClass> {
    let all = all_embeddings(source, target);
    let keep = |e: &Embedding| filter.is_none_or(|s| free_line_filter(target, e, s));
    let mut assigned: BTreeSet<Embedding> = BTreeSet::new();
    let mut classes = Vec::new();
    for e in &all {
        if assigned.contains(e) {
            continue;
        }
        let mut orbit: BTreeSet<Embedding> = BTreeSet::new();
        for x in 0..target.order() {
            let xi = target.inverse(x);
            let images = e.images.iter().map(|&k| target.mult[target.mult[x][k]][xi]).collect();
            orbit.insert(Embedding { images });
        }
        let subgroups: BTreeSet<Vec<usize>> = orbit
            .iter()
            .map(|o| {
                let mut s = o.images.clone();
                s.sort_unstable();
                s
            })
            .collect();
        let members: Vec<&Embedding> = orbit.iter().filter(|o| keep(o)).collect();
        if let Some(rep) = members.iter().min_by_key(|o| source.generators.iter().map(|&g| o.images[g]).collect::<Vec<_>>()) {
            classes.push(EmbeddingClass { representative: (*rep).clone(), size: members.len(), images: subgroups.len() });
        }
        assigned.extend(orbit);
    }
    classes
}

/// An automorphism of Dic_n = ⟨x, y | x^{2n}, y² = xⁿ, yxy⁻¹ = x⁻¹⟩:
/// x ↦ x^a, y ↦ x^b y.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DicyclicAutomorphism {
    pub a: u32,
    pub b: u32,
}

#[derive(Debug, Clone)]
pub struct DicyclicReport {
    pub n: u32,
    pub automorphisms: Vec<DicyclicAutomorphism>,
    pub inner: Vec<DicyclicAutomorphism>,
    /// Cosets of the inner automorphisms.
    pub outer_classes: Vec<Vec<DicyclicAutomorphism>>,
    /// Whether every outer class squares into the inner group.
    pub outer_exponent_two: bool,
}

type DicEl = (u32, u8);

fn dic_mul(n: u32, p: DicEl, q: DicEl) -> DicEl {
    let m = 2 * n;
    match (p.1, q.1) {
        (0, 0) => ((p.0 + q.0) % m, 0),
        (0, _) => ((p.0 + q.0) % m, 1),
        (_, 0) => ((p.0 + m - q.0) % m, 1),
        _ => ((p.0 + m - q.0 + n) % m, 0),
    }
}

fn dic_apply(n: u32, f: DicyclicAutomorphism, p: DicEl) -> DicEl {
    let m = 2 * n;
    let k = (f.a * p.0) % m;
    if p.1 == 0 {
        (k, 0)
    } else {
        ((k + f.b) % m, 1)
    }
}

fn dic_compose(n: u32, f: DicyclicAutomorphism, g: DicyclicAutomorphism) -> DicyclicAutomorphism {
    let m = 2 * n;
    DicyclicAutomorphism { a: (f.a * g.a) % m, b: (f.a * g.b + f.b) % m }
}

/// Enumerate Aut(Dic_n) by brute force over the maps L(a, b), checking the
/// homomorphism and bijectivity conditions on the whole group.
pub fn dicyclic_automorphisms(n: u32) -> DicyclicReport {
    let m = 2 * n;
    let elems: Vec<DicEl> = (0..m).flat_map(|k| [(k, 0u8), (k, 1u8)]).collect();
    let mut autos = Vec::new();
    for a in 0..m {
        for b in 0..m {
            let f = DicyclicAutomorphism { a, b };
            let img: BTreeSet<DicEl> = elems.iter().map(|&p| dic_apply(n, f, p)).collect();
            if img.len() != elems.len() {
                continue;
            }
            let hom = elems.iter().all(|&p| {
                elems.iter().all(|&q| dic_apply(n, f, dic_mul(n, p, q)) == dic_mul(n, dic_apply(n, f, p), dic_apply(n, f, q)))
            });
            if hom {
                autos.push(f);
            }
        }
    }
    let inv = |p: DicEl| *elems.iter().find(|&&q| dic_mul(n, p, q) == (0, 0)).expect("inverse");
    let mut inner: BTreeSet<DicyclicAutomorphism> = BTreeSet::new();
    for &g in &elems {
        let gi = inv(g);
        let cx = dic_mul(n, dic_mul(n, g, (1, 0)), gi);
        let cy = dic_mul(n, dic_mul(n, g, (0, 1)), gi);
        debug_assert_eq!(cx.1, 0);
        inner.insert(DicyclicAutomorphism { a: cx.0, b: cy.0 });
    }
    let inner: Vec<_> = inner.into_iter().collect();
    let mut seen: BTreeSet<DicyclicAutomorphism> = BTreeSet::new();
    let mut outer = Vec::new();
    for &f in &autos {
        if seen.contains(&f) {
            continue;
        }
        let mut coset: Vec<_> = inner.iter().map(|&h| dic_compose(n, h, f)).collect();
        coset.sort();
        coset.dedup();
        seen.extend(coset.iter().copied());
        outer.push(coset);
    }
    let outer_exponent_two = outer.iter().all(|c| inner.contains(&dic_compose(n, c[0], c[0])));
    DicyclicReport { n, automorphisms: autos, inner, outer_classes: outer, outer_exponent_two }
}

/// A permutation of {1, 2, 3, 4}; `p[i]` is the image of `i + 1`, minus one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Perm(pub [u8; 4]);

impl Perm {
    pub fn identity() -> Self {
        Perm([0, 1, 2, 3])
    }

    /// Parse cycle notation such as `(1432)`, `(13)(24)` or `Id`.
    pub fn parse(s: &str) -> Option<Self> {
        let mut p = [0u8, 1, 2, 3];
        let s = s.trim();
        if s == "Id" {
            return Some(Perm(p));
        }
        for cyc in s.split(')') {
            let cyc = cyc.trim();
            if cyc.is_empty() {
                continue;
            }
            let body = cyc.strip_prefix('(')?;
            let pts: Vec<u8> = body
                .chars()
                .map(|c| c.to_digit(10).filter(|d| (1..=4).contains(d)).map(|d| d as u8 - 1))
                .collect::<Option<_>>()?;
            for (k, &a) in pts.iter().enumerate() {
                p[a as usize] = pts[(k + 1) % pts.len()];
            }
        }
        Some(Perm(p))
    }

    /// self after other: x ↦ self(other(x)).
    pub fn after(&self, other: &Perm) -> Perm {
        Perm(core::array::from_fn(|i| self.0[other.0[i] as usize]))
    }
}

/// The tabulated map T_{i,k} ↦ S₄, k = 0..3.
pub const J_TABLE: [[&str; 4]; 6] = [
    ["Id", "(1234)", "(13)(24)", "(1432)"],
    ["(14)(23)", "(24)", "(12)(34)", "(13)"],
    ["(2134)", "(124)", "(23)", "(143)"],
    ["(12)", "(243)", "(1423)", "(134)"],
    ["(2431)", "(234)", "(14)", "(132)"],
    ["(34)", "(142)", "(1324)", "(123)"],
];

#[derive(Debug, Clone)]
pub struct JReport {
    /// `true` when J(AB) = J(A)∘J(B) with functions composed right to left;
    /// `false` when the table is read left to right.
    pub right_to_left: bool,
    pub pairs_checked: usize,
}

fn j_of(m: &M2) -> Option<Perm> {
    for i in 1..=6u8 {
        for k in 0..4 {
            let t = t_mat(i, k);
            if t == *m || t.neg() == *m {
                return Perm::parse(J_TABLE[i as usize - 1][k as usize]);
            }
        }
    }
    None
}

/// Check that the tabulated J is a homomorphism S4*/±1 → S₄ with kernel ±1,
/// trying both composition conventions.
pub fn verify_isomorphism_j() -> Result<JReport, GroupError> {
    let els: Vec<(String, M2)> = (1..=6u8)
        .flat_map(|i| (0..4).map(move |k| (format!("T{i}{k}"), t_mat(i, k))))
        .collect();
    let mut first_failure: Option<(String, String)> = None;
    for right_to_left in [true, false] {
        let mut ok = true;
        let mut images = BTreeSet::new();
        for (na, a) in &els {
            let ja = j_of(a).ok_or_else(|| GroupError::TableMismatch(na.clone(), na.clone()))?;
            images.insert(ja.0);
            for (nb, b) in &els {
                let jb = j_of(b).expect("tabulated");
                let jab = j_of(&a.mul(b)).ok_or_else(|| GroupError::TableMismatch(na.clone(), nb.clone()))?;
                let comp = if right_to_left { ja.after(&jb) } else { jb.after(&ja) };
                if comp != jab {
                    ok = false;
                    if first_failure.is_none() {
                        first_failure = Some((na.clone(), nb.clone()));
                    }
                    break;
                }
            }
            if !ok {
                break;
            }
        }
        if ok && images.len() == 24 {
            return Ok(JReport { right_to_left, pairs_checked: els.len() * els.len() });
        }
    }
    let (a, b) = first_failure.unwrap_or_default();
    Err(GroupError::TableMismatch(a, b))
}
