use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{closure, conj_class, mult_table, t_mat, GroupError, GroupName, SubgroupTable, M2};
use crate::binforms::Mat2;
use crate::exactfield::CycloNum;

fn z(j: i64) -> CycloNum {
    CycloNum::zeta(j)
}

fn n(k: i64) -> CycloNum {
    CycloNum::from_int(k)
}

fn ints(v: &[i64]) -> Vec<CycloNum> {
    v.iter().map(|&k| n(k)).collect()
}

/// Name of an element of S4* as T_{i,k} with k in 0..8.
pub(crate) fn t_label(m: &M2) -> Option<String> {
    for i in 1..=6u8 {
        for k in 0..8 {
            if t_mat(i, k) == *m {
                return Some(format!("T{i}{k}"));
            }
        }
    }
    None
}

fn assemble(
    name: GroupName,
    gens: Vec<M2>,
    class_reps: Vec<M2>,
    class_labels: &[&str],
    irrep_labels: &[&str],
    table: Vec<Vec<CycloNum>>,
) -> SubgroupTable {
    let elements = closure(&gens);
    finish(name, elements, gens, class_reps, class_labels, irrep_labels, table)
}

fn finish(
    name: GroupName,
    elements: Vec<M2>,
    gens: Vec<M2>,
    class_reps: Vec<M2>,
    class_labels: &[&str],
    irrep_labels: &[&str],
    table: Vec<Vec<CycloNum>>,
) -> SubgroupTable {
    let mult = mult_table(&elements);
    let idx = |m: &M2| elements.iter().position(|e| e == m).expect("representative in group");
    let classes: Vec<Vec<usize>> = class_reps.iter().map(|r| conj_class(&elements, &mult, idx(r))).collect();
    let dims = table
        .iter()
        .map(|row| row[0].as_rational().and_then(|q| q.to_integer().try_into().ok()).expect("degree"))
        .collect();
    let labels = elements
        .iter()
        .enumerate()
        .map(|(k, m)| t_label(m).unwrap_or_else(|| format!("g{k}")))
        .collect();
    let generators = gens.iter().map(idx).collect();
    SubgroupTable {
        name,
        elements,
        mult,
        classes,
        class_labels: class_labels.iter().map(|s| s.to_string()).collect(),
        irrep_labels: irrep_labels.iter().map(|s| s.to_string()).collect(),
        char_table: table,
        dims,
        generators,
        labels,
    }
}

pub(super) fn build(name: GroupName) -> Result<SubgroupTable, GroupError> {
    let id = Mat2::identity();
    let mid = id.neg();
    let g = match name {
        GroupName::Cyclic(order) => {
            if order == 0 || 24 % order != 0 {
                return Err(GroupError::UnknownGroup(name.token()));
            }
            let s = 24 / order as i64;
            let r = Mat2::diag(z(s), z(-s));
            let elements: Vec<M2> = (0..order as i64).map(|k| Mat2::diag(z(s * k), z(-s * k))).collect();
            let cl: Vec<String> = (0..order).map(|k| format!("r^{k}")).collect();
            let il: Vec<String> = (0..order).map(|h| format!("chi{h}")).collect();
            let cl_ref: Vec<&str> = cl.iter().map(String::as_str).collect();
            let il_ref: Vec<&str> = il.iter().map(String::as_str).collect();
            let table = (0..order as i64).map(|h| (0..order as i64).map(|k| z(s * h * k)).collect()).collect();
            let gens = if order == 1 { Vec::from([id]) } else { Vec::from([r]) };
            finish(name, elements.clone(), gens, elements, &cl_ref, &il_ref, table)
        }
        GroupName::BinDihedral(2) => {
            let (a, b) = (t_mat(1, 2), t_mat(2, 2));
            assemble(
                name,
                Vec::from([a.clone(), b.clone()]),
                Vec::from([id, mid, a, b, t_mat(2, 0)]),
                &["Id", "-Id", "±T12", "±T22", "±T20"],
                &["psi1", "psi2", "psi3", "psi4", "psi5"],
                Vec::from([
                    ints(&[1, 1, 1, 1, 1]),
                    ints(&[1, 1, 1, -1, -1]),
                    ints(&[1, 1, -1, 1, -1]),
                    ints(&[1, 1, -1, -1, 1]),
                    ints(&[2, -2, 0, 0, 0]),
                ]),
            )
        }
        GroupName::BinDihedral(3) => {
            let a = Mat2::diag(z(4), z(-4));
            let b = t_mat(2, 2);
            let i = CycloNum::i();
            assemble(
                name,
                Vec::from([a.clone(), b.clone()]),
                Vec::from([id, mid, a.clone(), a.mul(&a), b.clone(), b.mul(&a)]),
                &["Id", "-Id", "{A,A5}", "{A2,A4}", "{B,BA2,BA4}", "{BA,BA3,BA5}"],
                &["psi1", "psi2", "psi3", "psi4", "psi5", "psi6"],
                Vec::from([
                    ints(&[1, 1, 1, 1, 1, 1]),
                    Vec::from([n(1), n(-1), n(-1), n(1), i.clone(), -i.clone()]),
                    ints(&[1, 1, 1, 1, -1, -1]),
                    Vec::from([n(1), n(-1), n(-1), n(1), -i.clone(), i]),
                    ints(&[2, 2, -1, -1, 0, 0]),
                    ints(&[2, -2, 1, -1, 0, 0]),
                ]),
            )
        }
        GroupName::BinDihedral(4) => {
            let (a, b) = (t_mat(1, 1), t_mat(2, 2));
            let r2 = CycloNum::sqrt2();
            assemble(
                name,
                Vec::from([a.clone(), b.clone()]),
                Vec::from([id, mid, a.clone(), t_mat(1, 2), t_mat(1, 3), b.clone(), b.mul(&a)]),
                &["Id", "-Id", "{T11,T17}", "{T12,T16}", "{T13,T15}", "{T22 T11^2k}", "{T22 T11^2k+1}"],
                &["psi1", "psi2", "psi3", "psi4", "psi5", "psi6", "psi7"],
                Vec::from([
                    ints(&[1, 1, 1, 1, 1, 1, 1]),
                    ints(&[1, 1, 1, 1, 1, -1, -1]),
                    ints(&[1, 1, -1, 1, -1, 1, -1]),
                    ints(&[1, 1, -1, 1, -1, -1, 1]),
                    ints(&[2, 2, 0, -2, 0, 0, 0]),
                    Vec::from([n(2), n(-2), r2.clone(), n(0), -r2.clone(), n(0), n(0)]),
                    Vec::from([n(2), n(-2), -r2.clone(), n(0), r2, n(0), n(0)]),
                ]),
            )
        }
        GroupName::BinTetra => {
            let (a, b) = (t_mat(4, 1), t_mat(1, 2));
            let (e2, e4) = (z(8), z(16));
            let row = |v: [CycloNum; 7]| Vec::from(v);
            assemble(
                name,
                Vec::from([a.clone(), b.clone()]),
                Vec::from([id, mid, b, t_mat(3, 1).neg(), a.neg(), t_mat(3, 1), a]),
                &["Id", "-Id", "{±T12,±T20,±T22}", "{-T31,T33,T51,-T53}", "{-T41,-T43,T61,T63}", "{T31,-T33,-T51,T53}", "{T41,T43,-T61,-T63}"],
                &["chi0", "chi1", "chi2", "chi3", "chi4", "chi5", "chi6"],
                Vec::from([
                    ints(&[1, 1, 1, 1, 1, 1, 1]),
                    row([n(1), n(1), n(1), e4.clone(), e2.clone(), e4.clone(), e2.clone()]),
                    row([n(1), n(1), n(1), e2.clone(), e4.clone(), e2.clone(), e4.clone()]),
                    ints(&[3, 3, -1, 0, 0, 0, 0]),
                    ints(&[2, -2, 0, -1, -1, 1, 1]),
                    row([n(2), n(-2), n(0), -e4.clone(), -e2.clone(), e4.clone(), e2.clone()]),
                    row([n(2), n(-2), n(0), -e2.clone(), -e4.clone(), e2, e4]),
                ]),
            )
        }
        GroupName::BinOcta => {
            let (a, b) = (t_mat(1, 1), t_mat(3, 0));
            let r2 = CycloNum::sqrt2();
            // listed as T_{i,k}, i-major, so indices follow the T naming
            let elements: Vec<M2> = (1..=6u8).flat_map(|i| (0..8).map(move |k| t_mat(i, k))).collect();
            debug_assert_eq!(closure(&[a.clone(), b.clone()]).len(), 48);
            finish(
                name,
                elements,
                Vec::from([a.clone(), b]),
                Vec::from([id, mid, t_mat(3, 1).neg(), t_mat(1, 2), t_mat(2, 1), t_mat(3, 1), a.clone(), a.neg()]),
                &["Id", "-Id", "{-T31}", "{T12}", "{T21}", "{T31}", "{T11}", "{-T11}"],
                &["chi1", "chi2", "chi3", "chi4", "chi5", "chi6", "chi7", "chi8"],
                Vec::from([
                    ints(&[1, 1, 1, 1, 1, 1, 1, 1]),
                    ints(&[1, 1, 1, 1, -1, 1, -1, -1]),
                    ints(&[2, 2, -1, 2, 0, -1, 0, 0]),
                    Vec::from([n(2), n(-2), n(-1), n(0), n(0), n(1), r2.clone(), -r2.clone()]),
                    Vec::from([n(2), n(-2), n(-1), n(0), n(0), n(1), -r2.clone(), r2]),
                    ints(&[3, 3, 0, -1, 1, 0, -1, -1]),
                    ints(&[3, 3, 0, -1, -1, 0, 1, 1]),
                    ints(&[4, -4, 1, 0, 0, -1, 0, 0]),
                ]),
            )
        }
        GroupName::BinDihedral(_) => return Err(GroupError::UnknownGroup(name.token())),
    };
    Ok(g)
}
