//! Exact scalars: the cyclotomic field Q(ζ₂₄) and rational functions over it
//! in one parameter `t`.

mod cyclo;
mod param;
mod poly;

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::string::String;

pub use cyclo::CycloNum;
pub use num_rational::BigRational as Rational;
pub use param::ParamScalar;
pub use poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
}

/// Arithmetic shared by [`CycloNum`] and [`ParamScalar`].
pub trait Field:
    Clone
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn try_inv(&self) -> Result<Self, FieldError>;
    fn from_cyclo(c: CycloNum) -> Self;
    /// Complex conjugation; `t` is treated as real.
    fn conj(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn from_int(n: i64) -> Self {
        Self::from_cyclo(CycloNum::from_int(n))
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_cyclo(CycloNum::from_ratio(n, d))
    }
    fn try_div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self.mul_ref(&other.try_inv()?))
    }
    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// Binary op dispatcher for the `field_arith` entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn field_arith<F: Field>(a: &F, b: &F, op: ArithOp) -> Result<F, FieldError> {
    Ok(match op {
        ArithOp::Add => a.add_ref(b),
        ArithOp::Sub => a.sub_ref(b),
        ArithOp::Mul => a.mul_ref(b),
        ArithOp::Div => a.try_div(b)?,
    })
}

pub fn named_constant(name: &str) -> Result<CycloNum, FieldError> {
    CycloNum::named(name)
}

pub fn complex_conjugate(a: &CycloNum) -> CycloNum {
    a.conj()
}

macro_rules! forward_ops {
    ($t:ty) => {
        impl core::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                $crate::exactfield::Field::add_ref(&self, &o)
            }
        }
        impl core::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                $crate::exactfield::Field::sub_ref(&self, &o)
            }
        }
        impl core::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                $crate::exactfield::Field::mul_ref(&self, &o)
            }
        }
        impl core::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::exactfield::Field::neg_ref(&self)
            }
        }
        impl<'a> core::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                $crate::exactfield::Field::add_ref(self, o)
            }
        }
        impl<'a> core::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                $crate::exactfield::Field::sub_ref(self, o)
            }
        }
        impl<'a> core::ops::Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                $crate::exactfield::Field::mul_ref(self, o)
            }
        }
        impl<'a> core::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::exactfield::Field::neg_ref(self)
            }
        }
    };
}
pub(crate) use forward_ops;
