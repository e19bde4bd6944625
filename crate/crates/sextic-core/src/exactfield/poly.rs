use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use super::{Field, FieldError};

/// Dense univariate polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    c: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }
    pub fn constant(a: F) -> Self {
        Self::new(vec![a])
    }
    pub fn one() -> Self {
        Self::constant(F::one())
    }
    /// The monomial `t`.
    pub fn var() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }
    pub fn coeffs(&self) -> &[F] {
        &self.c
    }
    pub fn coeff(&self, k: usize) -> F {
        self.c.get(k).cloned().unwrap_or_else(F::zero)
    }
    pub fn lead(&self) -> Option<&F> {
        self.c.last()
    }
    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|k| self.coeff(k).add_ref(&o.coeff(k))).collect())
    }
    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|k| self.coeff(k).sub_ref(&o.coeff(k))).collect())
    }
    pub fn neg(&self) -> Self {
        Poly { c: self.c.iter().map(F::neg_ref).collect() }
    }
    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::new(out)
    }
    pub fn scale(&self, a: &F) -> Self {
        Self::new(self.c.iter().map(|x| x.mul_ref(a)).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul_ref(x).add_ref(a);
        }
        acc
    }

    /// Euclidean division; errors only on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), FieldError> {
        let dl = d.lead().ok_or(FieldError::DivisionByZero)?;
        let inv = dl.try_inv()?;
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = r[k + dd].mul_ref(&inv);
            if !coef.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[k + j] = r[k + j].sub_ref(&coef.mul_ref(b));
                }
            }
            q[k] = coef;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.try_inv().expect("nonzero lead");
                self.scale(&inv)
            }
        }
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a.mul_ref(&F::from_int(k as i64)))
                .collect(),
        )
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.c.iter().map(f).collect())
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({a})")?,
                1 => write!(f, "({a})*t")?,
                _ => write!(f, "({a})*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}
