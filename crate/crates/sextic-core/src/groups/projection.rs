use alloc::vec::Vec;

use super::{char_vn_element, ClassFunction, SubgroupTable, M2};
use crate::binforms::{act_monomials, act_unchecked, BinaryForm};
use crate::exactfield::{CycloNum, Field};
use crate::linalg::Matrix;

/// The action of a group on pairs (p, q) of degree-n forms:
/// ρ(g)(p, q) = (A·p, A·q)·Bᵀ with A = left[g], B = right[g].
#[derive(Debug, Clone)]
pub struct TwistedRep {
    pub n: usize,
    pub left: Vec<M2>,
    pub right: Vec<M2>,
}

impl TwistedRep {
    /// φ₁ = inclusion, φ₂ given per element.
    pub fn new(g: &SubgroupTable, n: usize, right: Vec<M2>) -> Self {
        TwistedRep { n, left: g.elements.clone(), right }
    }

    pub fn dim(&self) -> usize {
        2 * (self.n + 1)
    }

    /// χ_{V_n}(A)·tr(B) on every class.
    pub fn character(&self, g: &SubgroupTable) -> ClassFunction {
        ClassFunction {
            values: g
                .classes
                .iter()
                .map(|c| char_vn_element(&self.left[c[0]], self.n) * self.right[c[0]].trace())
                .collect(),
        }
    }

    /// Apply ρ(g) to a pair of forms.
    pub fn act<F: Field>(&self, g: usize, p: &BinaryForm<F>, q: &BinaryForm<F>) -> (BinaryForm<F>, BinaryForm<F>) {
        let a = self.left[g].map(|c| F::from_cyclo(c.clone()));
        let b = self.right[g].map(|c| F::from_cyclo(c.clone()));
        let ap = act_unchecked(&a, p);
        let aq = act_unchecked(&a, q);
        (ap.scale(&b.a).plus(&aq.scale(&b.b)), ap.scale(&b.c).plus(&aq.scale(&b.d)))
    }

    /// Matrix of ρ(g) on the basis (x^{n−i}yⁱ, 0), then (0, x^{n−i}yⁱ).
    pub fn matrix(&self, g: usize) -> Matrix<CycloNum> {
        let n = self.n;
        let d = self.dim();
        let b = &self.right[g];
        let mut m = alloc::vec![alloc::vec![CycloNum::zero(); d]; d];
        for (j, img) in act_monomials(&self.left[g], n).into_iter().enumerate() {
            // (A·mono, 0)Bᵀ = (b.a, b.c)·A·mono and (0, A·mono)Bᵀ = (b.b, b.d)·A·mono
            for i in 0..=n {
                let v = img.coeff(i);
                if v.is_zero() {
                    continue;
                }
                m[i][j] = v.mul_ref(&b.a);
                m[n + 1 + i][j] = v.mul_ref(&b.c);
                m[i][n + 1 + j] = v.mul_ref(&b.b);
                m[n + 1 + i][n + 1 + j] = v.mul_ref(&b.d);
            }
        }
        m
    }
}

/// p_χ = (dim χ/|G|) Σ conj(χ(g)) ρ(g).
pub fn projection_operator(g: &SubgroupTable, rep: &TwistedRep, irrep: usize) -> Matrix<CycloNum> {
    let d = rep.dim();
    let chi = g.expand(&g.irrep(irrep));
    let mut acc = alloc::vec![alloc::vec![CycloNum::zero(); d]; d];
    for e in 0..g.order() {
        let w = chi[e].conj();
        if w.is_zero() {
            continue;
        }
        let m = rep.matrix(e);
        for i in 0..d {
            for j in 0..d {
                if !m[i][j].is_zero() {
                    acc[i][j] = acc[i][j].add_ref(&w.mul_ref(&m[i][j]));
                }
            }
        }
    }
    let s = CycloNum::from_ratio(g.dims[irrep] as i64, g.order() as i64);
    acc.into_iter().map(|row| row.into_iter().map(|x| x * s.clone()).collect()).collect()
}
