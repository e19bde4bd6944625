//! Binary forms, the SL₂ action, transvectants and vanishing orders on P¹.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::exactfield::{Field, FieldError, Poly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("matrix is not in SL2 (det = {0})")]
    NotSL2(alloc::string::String),
    #[error("transvectant order {p} out of range for degrees {m}, {n}")]
    BadOrder { p: usize, m: usize, n: usize },
    #[error("the zero form has no vanishing order")]
    ZeroForm,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("projective point with both coordinates zero")]
    ZeroPoint,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A homogeneous form of degree `n`; `coeffs[i]` multiplies x^{n−i}·y^i.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm<F> {
    coeffs: Vec<F>,
}

impl<F: Field> BinaryForm<F> {
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a form has at least one coefficient");
        BinaryForm { coeffs }
    }
    pub fn zero(degree: usize) -> Self {
        BinaryForm { coeffs: vec![F::zero(); degree + 1] }
    }
    pub fn constant(c: F) -> Self {
        BinaryForm { coeffs: vec![c] }
    }
    pub fn one() -> Self {
        Self::constant(F::one())
    }
    /// c·x^{n−i}·y^i.
    pub fn monomial(degree: usize, i: usize, c: F) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[i] = c;
        f
    }
    pub fn x() -> Self {
        Self::new(vec![F::one(), F::zero()])
    }
    pub fn y() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }
    /// a·x + b·y.
    pub fn linear(a: F, b: F) -> Self {
        Self::new(vec![a, b])
    }
    /// The linear form y_p·x − x_p·y vanishing at `p`.
    pub fn vanishing_at(p: &ProjPoint<F>) -> Self {
        Self::linear(p.y.clone(), p.x.neg_ref())
    }
    /// Build from integer coefficients.
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| F::from_int(v)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }
    pub fn coeff(&self, i: usize) -> &F {
        &self.coeffs[i]
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }

    pub fn add(&self, o: &Self) -> Result<Self, FormError> {
        if self.degree() != o.degree() {
            return Err(FormError::DegreeMismatch(self.degree(), o.degree()));
        }
        Ok(Self::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add_ref(b)).collect()))
    }
    pub fn sub(&self, o: &Self) -> Result<Self, FormError> {
        self.add(&o.neg())
    }
    /// Sum of same-degree forms; panics on mismatch (internal use).
    pub fn plus(&self, o: &Self) -> Self {
        self.add(o).expect("equal degrees")
    }
    pub fn minus(&self, o: &Self) -> Self {
        self.sub(o).expect("equal degrees")
    }
    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(F::neg_ref).collect())
    }
    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::new(out)
    }
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
    pub fn product<'a>(fs: impl IntoIterator<Item = &'a Self>) -> Self {
        fs.into_iter().fold(Self::one(), |acc, f| acc.mul(f))
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        // Σ c_i x^{n−i} y^i by Horner in the ratio where possible.
        let n = self.degree();
        let mut xp = vec![F::one(); n + 1];
        let mut yp = vec![F::one(); n + 1];
        for k in 1..=n {
            xp[k] = xp[k - 1].mul_ref(x);
            yp[k] = yp[k - 1].mul_ref(y);
        }
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(F::zero(), |acc, (i, c)| acc.add_ref(&c.mul_ref(&xp[n - i]).mul_ref(&yp[i])))
    }
    pub fn eval_at(&self, p: &ProjPoint<F>) -> F {
        self.eval(&p.x, &p.y)
    }

    pub fn d_dx(&self) -> Self {
        let n = self.degree();
        if n == 0 {
            return Self::zero(0);
        }
        Self::new((0..n).map(|i| self.coeffs[i].mul_ref(&F::from_int((n - i) as i64))).collect())
    }
    pub fn d_dy(&self) -> Self {
        let n = self.degree();
        if n == 0 {
            return Self::zero(0);
        }
        Self::new((0..n).map(|i| self.coeffs[i + 1].mul_ref(&F::from_int((i + 1) as i64))).collect())
    }
    /// ∂^{a+b} f / ∂x^a ∂y^b.
    pub fn partial(&self, a: usize, b: usize) -> Self {
        let mut f = self.clone();
        for _ in 0..a {
            f = f.d_dx();
        }
        for _ in 0..b {
            f = f.d_dy();
        }
        f
    }

    /// f(l1, l2) for linear forms l1, l2.
    pub fn substitute(&self, l1: &Self, l2: &Self) -> Self {
        let n = self.degree();
        let mut p1 = vec![Self::one()];
        let mut p2 = vec![Self::one()];
        for k in 1..=n {
            p1.push(p1[k - 1].mul(l1));
            p2.push(p2[k - 1].mul(l2));
        }
        let deg = n * l1.degree();
        let mut acc = Self::zero(deg);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.plus(&p1[n - i].mul(&p2[i]).scale(c));
        }
        acc
    }

    /// Exact quotient by `h`, if `h` divides `self`.
    pub fn div_exact(&self, h: &Self) -> Option<Self> {
        if h.is_zero() || h.degree() > self.degree() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.degree() - h.degree()));
        }
        let a = Poly::new(self.coeffs.clone());
        let b = Poly::new(h.coeffs.clone());
        let (q, r) = a.div_rem(&b).ok()?;
        if !r.is_zero() {
            return None;
        }
        let qd = self.degree() - h.degree();
        if q.degree().is_some_and(|d| d > qd) {
            return None;
        }
        let mut c = q.coeffs().to_vec();
        c.resize(qd + 1, F::zero());
        Some(Self::new(c))
    }

    /// f(t, 1) as a polynomial in t.
    pub fn dehomogenize(&self) -> Poly<F> {
        Poly::new(self.affine_x())
    }

    /// Greatest common divisor, normalized so that its last nonzero
    /// coefficient in f(x, 1) is 1.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let a = Poly::new(self.affine_x());
        let b = Poly::new(o.affine_x());
        // powers of y are invisible in f(x, 1)
        let ya = self.degree() - a.degree().unwrap_or(0);
        let yb = o.degree() - b.degree().unwrap_or(0);
        let g = a.gcd(&b);
        let e = g.degree().unwrap_or(0);
        let yk = ya.min(yb);
        let mut c = vec![F::zero(); yk];
        c.extend(g.coeffs().iter().rev().cloned());
        debug_assert_eq!(c.len(), e + yk + 1);
        Self::new(c)
    }

    /// Coefficients of f(x, 1) in ascending powers of x.
    fn affine_x(&self) -> Vec<F> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> BinaryForm<G> {
        BinaryForm::new(self.coeffs.iter().map(f).collect())
    }

    /// Split off the linear factors at the candidate points; returns the
    /// multiplicities found and the cofactor.
    pub fn split_over(&self, candidates: &[ProjPoint<F>]) -> Result<(Vec<(ProjPoint<F>, usize)>, Self), FormError> {
        if self.is_zero() {
            return Err(FormError::ZeroForm);
        }
        let mut rest = self.clone();
        let mut found = Vec::new();
        for p in candidates {
            let k = ord_at(&rest, p)?;
            if k > 0 {
                let l = Self::vanishing_at(p).pow(k as u32);
                rest = rest.div_exact(&l).expect("ord_at guarantees divisibility");
                found.push((p.clone(), k));
            }
        }
        Ok((found, rest))
    }
}

impl<F: Field> fmt::Display for BinaryForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            match n - i {
                0 => {}
                1 => write!(f, "*x")?,
                e => write!(f, "*x^{e}")?,
            }
            match i {
                0 => {}
                1 => write!(f, "*y")?,
                e => write!(f, "*y^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for BinaryForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm[deg {}: {self}]", self.degree())
    }
}

/// A 2×2 matrix [[a, b], [c, d]].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat2<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
}

impl<F: Field> Mat2<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Self {
        Mat2 { a, b, c, d }
    }
    pub fn identity() -> Self {
        Self::new(F::one(), F::zero(), F::zero(), F::one())
    }
    pub fn diag(a: F, d: F) -> Self {
        Self::new(a, F::zero(), F::zero(), d)
    }
    pub fn det(&self) -> F {
        self.a.mul_ref(&self.d).sub_ref(&self.b.mul_ref(&self.c))
    }
    pub fn is_sl2(&self) -> bool {
        self.det().is_one()
    }
    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.a.mul_ref(&o.a).add_ref(&self.b.mul_ref(&o.c)),
            self.a.mul_ref(&o.b).add_ref(&self.b.mul_ref(&o.d)),
            self.c.mul_ref(&o.a).add_ref(&self.d.mul_ref(&o.c)),
            self.c.mul_ref(&o.b).add_ref(&self.d.mul_ref(&o.d)),
        )
    }
    pub fn transpose(&self) -> Self {
        Self::new(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }
    pub fn neg(&self) -> Self {
        Self::new(self.a.neg_ref(), self.b.neg_ref(), self.c.neg_ref(), self.d.neg_ref())
    }
    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.a.mul_ref(s), self.b.mul_ref(s), self.c.mul_ref(s), self.d.mul_ref(s))
    }
    pub fn inverse(&self) -> Result<Self, FieldError> {
        let inv = self.det().try_inv()?;
        Ok(Self::new(
            self.d.mul_ref(&inv),
            self.b.neg_ref().mul_ref(&inv),
            self.c.neg_ref().mul_ref(&inv),
            self.a.mul_ref(&inv),
        ))
    }
    pub fn trace(&self) -> F {
        self.a.add_ref(&self.d)
    }
    /// M·(x, y)ᵀ.
    pub fn apply(&self, v: (&F, &F)) -> (F, F) {
        (
            self.a.mul_ref(v.0).add_ref(&self.b.mul_ref(v.1)),
            self.c.mul_ref(v.0).add_ref(&self.d.mul_ref(v.1)),
        )
    }
    /// Möbius image of a point.
    pub fn act_point(&self, p: &ProjPoint<F>) -> ProjPoint<F> {
        let (x, y) = self.apply((&p.x, &p.y));
        ProjPoint::new(x, y).expect("invertible matrix")
    }
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Mat2<G> {
        Mat2::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }
    /// Whether the two matrices agree up to a nonzero scalar.
    pub fn proportional(&self, o: &Self) -> bool {
        let p = [&self.a, &self.b, &self.c, &self.d];
        let q = [&o.a, &o.b, &o.c, &o.d];
        let Some(k) = (0..4).find(|&k| !p[k].is_zero()) else {
            return q.iter().all(|v| v.is_zero());
        };
        if q[k].is_zero() {
            return false;
        }
        (0..4).all(|j| p[j].mul_ref(q[k]) == q[j].mul_ref(p[k]))
    }
}

/// A point of P¹ normalized so that y = 1, or (1, 0) at infinity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint<F> {
    pub x: F,
    pub y: F,
}

impl<F: Field> ProjPoint<F> {
    pub fn new(x: F, y: F) -> Result<Self, FormError> {
        if y.is_zero() {
            if x.is_zero() {
                return Err(FormError::ZeroPoint);
            }
            return Ok(ProjPoint { x: F::one(), y: F::zero() });
        }
        let inv = y.try_inv()?;
        Ok(ProjPoint { x: x.mul_ref(&inv), y: F::one() })
    }
    /// The affine point [w : 1].
    pub fn finite(w: F) -> Self {
        ProjPoint { x: w, y: F::one() }
    }
    pub fn infinity() -> Self {
        ProjPoint { x: F::one(), y: F::zero() }
    }
    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }
    /// Affine coordinate x/y, `None` at infinity.
    pub fn value(&self) -> Option<&F> {
        if self.is_infinity() {
            None
        } else {
            Some(&self.x)
        }
    }
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> ProjPoint<G> {
        ProjPoint::new(f(&self.x), f(&self.y)).expect("nonzero point")
    }
}

impl<F: Field> fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.x)
        }
    }
}

/// (A·f)(x, y) = f(A⁻¹·(x, y)ᵀ).
pub fn sl2_act<F: Field>(a: &Mat2<F>, f: &BinaryForm<F>) -> Result<BinaryForm<F>, FormError> {
    if !a.is_sl2() {
        return Err(FormError::NotSL2(alloc::format!("{}", a.det())));
    }
    Ok(act_unchecked(a, f))
}

/// The same substitution for any invertible matrix, with A⁻¹ taken as the
/// adjugate (exact for det = 1).
pub fn act_unchecked<F: Field>(a: &Mat2<F>, f: &BinaryForm<F>) -> BinaryForm<F> {
    let l1 = BinaryForm::linear(a.d.clone(), a.b.neg_ref());
    let l2 = BinaryForm::linear(a.c.neg_ref(), a.a.clone());
    f.substitute(&l1, &l2)
}

/// A·(x^{n−i}yⁱ) for i = 0..=n, sharing the powers of the substituted
/// linear forms.
pub fn act_monomials<F: Field>(a: &Mat2<F>, n: usize) -> Vec<BinaryForm<F>> {
    let l1 = BinaryForm::linear(a.d.clone(), a.b.neg_ref());
    let l2 = BinaryForm::linear(a.c.neg_ref(), a.a.clone());
    let mut p1 = vec![BinaryForm::one()];
    let mut p2 = vec![BinaryForm::one()];
    for k in 1..=n {
        p1.push(p1[k - 1].mul(&l1));
        p2.push(p2[k - 1].mul(&l2));
    }
    (0..=n).map(|i| p1[n - i].mul(&p2[i])).collect()
}

fn factorial<F: Field>(n: usize) -> F {
    (1..=n).fold(F::one(), |acc, k| acc.mul_ref(&F::from_int(k as i64)))
}

fn binomial(n: usize, k: usize) -> i64 {
    let mut r: i64 = 1;
    for j in 0..k {
        r = r * (n - j) as i64 / (j + 1) as i64;
    }
    r
}

/// The p-th transvectant with the factorial normalization kept exactly.
pub fn transvectant<F: Field>(f: &BinaryForm<F>, h: &BinaryForm<F>, p: usize) -> Result<BinaryForm<F>, FormError> {
    let m = f.degree();
    let n = h.degree();
    if p > m || p > n {
        return Err(FormError::BadOrder { p, m, n });
    }
    let mut acc = BinaryForm::zero(m + n - 2 * p);
    for i in 0..=p {
        let term = f.partial(p - i, i).mul(&h.partial(i, p - i));
        let c = F::from_int(if i % 2 == 0 { 1 } else { -1 } * binomial(p, i));
        acc = acc.plus(&term.scale(&c));
    }
    let num = factorial::<F>(m - p).mul_ref(&factorial::<F>(n - p));
    let den = factorial::<F>(m).mul_ref(&factorial::<F>(n));
    Ok(acc.scale(&num.try_div(&den)?))
}

/// Multiplicity of the linear factor y_p·x − x_p·y in `f`.
pub fn ord_at<F: Field>(f: &BinaryForm<F>, p: &ProjPoint<F>) -> Result<usize, FormError> {
    if f.is_zero() {
        return Err(FormError::ZeroForm);
    }
    let c = f.coeffs();
    if p.is_infinity() {
        return Ok(c.iter().position(|v| !v.is_zero()).expect("nonzero form"));
    }
    let x0 = &p.x;
    let mut poly = f.affine_x();
    while poly.last().is_some_and(|v| v.is_zero()) {
        poly.pop();
    }
    let mut k = 0;
    if x0.is_zero() {
        return Ok(poly.iter().position(|v| !v.is_zero()).expect("nonzero form"));
    }
    loop {
        if poly.len() <= 1 {
            return Ok(k);
        }
        // synthetic division by (x − x0)
        let d = poly.len() - 1;
        let mut q = vec![F::zero(); d];
        let mut carry = F::zero();
        for j in (0..=d).rev() {
            let v = poly[j].add_ref(&carry.mul_ref(x0));
            if j == 0 {
                if !v.is_zero() {
                    return Ok(k);
                }
            } else {
                q[j - 1] = v.clone();
                carry = v;
            }
        }
        poly = q;
        k += 1;
    }
}

/// Dimension bookkeeping for V_m ⊗ V_n (m ≥ n).
pub fn clebsch_gordan_dims(m: usize, n: usize) -> (usize, Vec<usize>) {
    let (m, n) = if m >= n { (m, n) } else { (n, m) };
    ((m + 1) * (n + 1), (0..=n).map(|p| m + n - 2 * p + 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::CycloNum;

    type Bf = BinaryForm<CycloNum>;

    #[test]
    fn ord_at_monomials() {
        let f = Bf::from_ints(&[0, 1, 0, 0]); // x²y
        assert_eq!(ord_at(&f, &ProjPoint::finite(CycloNum::zero())).unwrap(), 2);
        assert_eq!(ord_at(&f, &ProjPoint::infinity()).unwrap(), 1);
        assert_eq!(ord_at(&Bf::zero(2), &ProjPoint::infinity()), Err(FormError::ZeroForm));
    }

    #[test]
    fn transvectant_zero_order_is_product() {
        let f = Bf::from_ints(&[1, 2, 3]);
        let h = Bf::from_ints(&[0, 1]);
        assert_eq!(transvectant(&f, &h, 0).unwrap(), f.mul(&h));
        assert!(matches!(transvectant(&f, &h, 2), Err(FormError::BadOrder { .. })));
    }

    #[test]
    fn div_exact_roundtrip() {
        let f = Bf::from_ints(&[1, 0, -1]);
        let g = Bf::from_ints(&[0, 1]);
        let p = f.mul(&g);
        assert_eq!(p.div_exact(&g).unwrap(), f);
        assert!(p.div_exact(&Bf::from_ints(&[1, 3])).is_none());
    }
}
