//! Finite subgroups of SU(2): elements, classes, character tables, characters
//! of V_n, multiplicities, projections and embedding classification.

mod embed;
mod projection;
mod tables;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::binforms::Mat2;
use crate::exactfield::{CycloNum, Field};

pub use embed::{
    all_embeddings, classify_embeddings, dicyclic_automorphisms, free_line_filter, verify_isomorphism_j,
    DicyclicAutomorphism, DicyclicReport, Embedding, EmbeddingClass, JReport, Perm, J_TABLE,
};
pub use embed::fixed_points;
pub use projection::{projection_operator, TwistedRep};

pub type M2 = Mat2<CycloNum>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("class function is not a character: inner product {0} with irrep {1}")]
    NonIntegralMultiplicity(String, usize),
    #[error("isomorphism table mismatch at {0} * {1}")]
    TableMismatch(String, String),
    #[error("{0}")]
    Invalid(String),
}

/// T_{i,k} from the isotropy group of uv(u⁴ − v⁴), for i in 1..=6 and any k
/// (T_{i,k+4} = −T_{i,k}).
pub fn t_mat(i: u8, k: i64) -> M2 {
    let xi = CycloNum::xi(k);
    let xinv = CycloNum::xi(-k);
    let im = CycloNum::i();
    let s = CycloNum::sqrt2().try_inv().expect("nonzero");
    let m = match i {
        1 => return Mat2::diag(xi, xinv),
        2 => return Mat2::new(CycloNum::zero(), xi, -xinv, CycloNum::zero()),
        3 => Mat2::new(xinv.clone(), -xinv, xi.clone(), xi),
        4 => Mat2::new(im.clone() * xinv.clone(), -xinv, xi.clone(), -(im * xi)),
        5 => Mat2::new(-xinv.clone(), -xinv, xi.clone(), -xi),
        6 => Mat2::new(-(im.clone() * xinv.clone()), -xinv, xi.clone(), im * xi),
        _ => panic!("T_{{i,k}} is defined for i in 1..=6"),
    };
    m.scale(&s)
}

/// Which of the built groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupName {
    /// Cyclic of order n generated by diag(ζ^{24/n}, ζ^{−24/n}).
    Cyclic(u32),
    /// Binary dihedral of order 4d.
    BinDihedral(u32),
    BinTetra,
    BinOcta,
}

impl GroupName {
    pub fn parse(s: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::UnknownGroup(s.to_string());
        match s {
            "BinTetra" | "A4*" => return Ok(GroupName::BinTetra),
            "BinOcta" | "S4*" => return Ok(GroupName::BinOcta),
            "Q8" => return Ok(GroupName::BinDihedral(2)),
            "Dic12" => return Ok(GroupName::BinDihedral(3)),
            "Q16" => return Ok(GroupName::BinDihedral(4)),
            _ => {}
        }
        if let Some(n) = s.strip_prefix("BinDihedral_") {
            let d: u32 = n.parse().map_err(|_| bad())?;
            return if (2..=4).contains(&d) { Ok(GroupName::BinDihedral(d)) } else { Err(bad()) };
        }
        if let Some(n) = s.strip_prefix("C_").or_else(|| s.strip_prefix('C')) {
            let n: u32 = n.parse().map_err(|_| bad())?;
            return if n > 0 && 24 % n == 0 { Ok(GroupName::Cyclic(n)) } else { Err(bad()) };
        }
        Err(bad())
    }

    pub fn token(&self) -> String {
        match self {
            GroupName::Cyclic(n) => alloc::format!("C_{n}"),
            GroupName::BinDihedral(d) => alloc::format!("BinDihedral_{d}"),
            GroupName::BinTetra => "BinTetra".to_string(),
            GroupName::BinOcta => "BinOcta".to_string(),
        }
    }
}

/// A finite subgroup of SU(2) with its character table.
#[derive(Debug, Clone)]
pub struct SubgroupTable {
    pub name: GroupName,
    pub elements: Vec<M2>,
    /// mult[i][j] = index of elements[i]·elements[j].
    pub mult: Vec<Vec<usize>>,
    pub classes: Vec<Vec<usize>>,
    pub class_labels: Vec<String>,
    pub irrep_labels: Vec<String>,
    pub char_table: Vec<Vec<CycloNum>>,
    pub dims: Vec<usize>,
    /// Indices of the two (or one) presentation generators.
    pub generators: Vec<usize>,
    /// Element labels, when the group sits inside S4* (T_{i,k} names).
    pub labels: Vec<String>,
}

/// Values of a class function, indexed like `SubgroupTable::classes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<CycloNum>,
}

impl SubgroupTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, m: &M2) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }

    pub fn identity(&self) -> usize {
        self.index_of(&Mat2::identity()).expect("identity present")
    }

    pub fn inverse(&self, i: usize) -> usize {
        let e = self.identity();
        self.mult[i].iter().position(|&k| k == e).expect("inverse present")
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.classes.iter().position(|c| c.contains(&i)).expect("partition")
    }

    /// Class function values on every element.
    pub fn expand(&self, f: &ClassFunction) -> Vec<CycloNum> {
        (0..self.order()).map(|i| f.values[self.class_of(i)].clone()).collect()
    }

    pub fn irrep(&self, k: usize) -> ClassFunction {
        ClassFunction { values: self.char_table[k].clone() }
    }

    /// Indices of the one-dimensional irreps.
    pub fn linear_irreps(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&k| self.dims[k] == 1).collect()
    }

    /// (φ | ψ) = (1/|G|) Σ φ(g)·conj(ψ(g)).
    pub fn inner(&self, a: &ClassFunction, b: &ClassFunction) -> CycloNum {
        let mut acc = CycloNum::zero();
        for (c, members) in self.classes.iter().enumerate() {
            let w = CycloNum::from_int(members.len() as i64);
            acc = acc + w * a.values[c].clone() * b.values[c].conj();
        }
        acc.try_div(&CycloNum::from_int(self.order() as i64)).expect("nonzero order")
    }

    /// The class function of the natural action on column vectors of C² through `images`.
    pub fn trace_function(&self, images: &[M2]) -> ClassFunction {
        ClassFunction { values: self.classes.iter().map(|c| images[c[0]].trace()).collect() }
    }

    pub fn natural_character(&self) -> ClassFunction {
        self.trace_function(&self.elements)
    }

    pub fn product(&self, a: &ClassFunction, b: &ClassFunction) -> ClassFunction {
        ClassFunction { values: a.values.iter().zip(&b.values).map(|(x, y)| x.clone() * y.clone()).collect() }
    }

    /// Check closure, inverses, class partition and the table's orthonormality
    /// relations; returns a description of the first failure.
    pub fn verify(&self) -> Result<(), GroupError> {
        let n = self.order();
        let bad = |s: &str| Err(GroupError::Invalid(alloc::format!("{}: {s}", self.name.token())));
        for i in 0..n {
            for j in 0..n {
                if self.elements[i].mul(&self.elements[j]) != self.elements[self.mult[i][j]] {
                    return bad("multiplication table");
                }
            }
        }
        let mut seen = vec![false; n];
        for c in &self.classes {
            for &i in c {
                if seen[i] {
                    return bad("classes overlap");
                }
                seen[i] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("classes do not cover the group");
        }
        for c in &self.classes {
            let rep = c[0];
            let mut conj: Vec<usize> = (0..n).map(|g| self.mult[self.mult[g][rep]][self.inverse(g)]).collect();
            conj.sort_unstable();
            conj.dedup();
            let mut cc = c.clone();
            cc.sort_unstable();
            if conj != cc {
                return bad("class is not a conjugacy class");
            }
        }
        if self.char_table.len() != self.classes.len() || self.dims.len() != self.classes.len() {
            return bad("number of irreps differs from number of classes");
        }
        let dsum: usize = self.dims.iter().map(|d| d * d).sum();
        if dsum != n {
            return bad("sum of squared dimensions differs from the order");
        }
        for a in 0..self.char_table.len() {
            if self.char_table[a][0] != CycloNum::from_int(self.dims[a] as i64) {
                return bad("degree column");
            }
            for b in 0..self.char_table.len() {
                let ip = self.inner(&self.irrep(a), &self.irrep(b));
                let want = if a == b { CycloNum::one() } else { CycloNum::zero() };
                if ip != want {
                    return bad("row orthonormality");
                }
            }
        }
        // column orthogonality: Σ_χ χ(g) conj χ(h) = δ · |G|/|C|
        for c1 in 0..self.classes.len() {
            for c2 in 0..self.classes.len() {
                let mut s = CycloNum::zero();
                for row in &self.char_table {
                    s = s + row[c1].clone() * row[c2].conj();
                }
                let want = if c1 == c2 {
                    CycloNum::from_ratio(n as i64, self.classes[c1].len() as i64)
                } else {
                    CycloNum::zero()
                };
                if s != want {
                    return bad("column orthogonality");
                }
            }
        }
        Ok(())
    }
}

/// Close a set of generators under multiplication; BFS order from the identity.
pub(crate) fn closure(gens: &[M2]) -> Vec<M2> {
    let mut elems: Vec<M2> = vec![Mat2::identity()];
    let mut head = 0;
    while head < elems.len() {
        let e = elems[head].clone();
        for g in gens {
            let p = e.mul(g);
            if !elems.contains(&p) {
                elems.push(p);
            }
        }
        head += 1;
        assert!(elems.len() <= 48, "subgroup of SU(2) larger than expected");
    }
    elems
}

pub(crate) fn mult_table(elems: &[M2]) -> Vec<Vec<usize>> {
    elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| {
                    let p = a.mul(b);
                    elems.iter().position(|e| *e == p).expect("closed under products")
                })
                .collect()
        })
        .collect()
}

/// Conjugacy class of `rep`, sorted by element index.
pub(crate) fn conj_class(elems: &[M2], mult: &[Vec<usize>], rep: usize) -> Vec<usize> {
    let n = elems.len();
    let e = elems.iter().position(|m| *m == Mat2::identity()).expect("identity");
    let inv = |g: usize| mult[g].iter().position(|&k| k == e).expect("inverse");
    let mut c: Vec<usize> = (0..n).map(|g| mult[mult[g][rep]][inv(g)]).collect();
    c.sort_unstable();
    c.dedup();
    // keep the representative first
    c.retain(|&x| x != rep);
    c.insert(0, rep);
    c
}

pub fn build_group(name: GroupName) -> Result<SubgroupTable, GroupError> {
    tables::build(name)
}

/// Eigenvalue exponent j with λ = ζ₂₄^j for an SU(2) element of finite order.
pub fn eigen_exponent(m: &M2) -> i64 {
    let tr = m.trace();
    for j in 0..24 {
        let l = CycloNum::zeta(j);
        let s = l.clone() + CycloNum::zeta(-j);
        if s == tr {
            return j;
        }
    }
    panic!("element has no root-of-unity eigenvalues")
}

/// χ_{V_n}(A) = (λ^{n+1} − λ^{−n−1})/(λ − λ^{−1}), with the limit (n+1)λⁿ
/// when λ = λ⁻¹.
pub fn char_vn_element(m: &M2, n: usize) -> CycloNum {
    let j = eigen_exponent(m);
    let l = CycloNum::zeta(j);
    let li = CycloNum::zeta(-j);
    if l == li {
        return CycloNum::from_int(n as i64 + 1) * l.pow(n as u32);
    }
    let num = CycloNum::zeta(j * (n as i64 + 1)) - CycloNum::zeta(-j * (n as i64 + 1));
    num.try_div(&(l - li)).expect("distinct eigenvalues")
}

pub fn char_vn(g: &SubgroupTable, n: usize) -> ClassFunction {
    ClassFunction { values: g.classes.iter().map(|c| char_vn_element(&g.elements[c[0]], n)).collect() }
}

/// (φ | χ_irrep), which must be a nonnegative integer.
pub fn multiplicity(g: &SubgroupTable, phi: &ClassFunction, irrep: usize) -> Result<usize, GroupError> {
    let ip = g.inner(phi, &g.irrep(irrep));
    let err = || GroupError::NonIntegralMultiplicity(alloc::format!("{ip}"), irrep);
    let q = ip.as_rational().ok_or_else(err)?;
    if !q.is_integer() || q.is_negative() {
        return Err(err());
    }
    let v: BigInt = q.to_integer();
    if v.is_zero() {
        return Ok(0);
    }
    usize::try_from(v).map_err(|_| err())
}

/// Decompose a character into multiplicities of every irrep.
pub fn decompose(g: &SubgroupTable, phi: &ClassFunction) -> Result<Vec<usize>, GroupError> {
    (0..g.char_table.len()).map(|k| multiplicity(g, phi, k)).collect()
}
