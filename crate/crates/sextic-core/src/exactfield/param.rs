use core::fmt;

use super::{forward_ops, CycloNum, Field, FieldError, Poly};

/// A rational function of one parameter `t` over Q(ζ₂₄), reduced with a
/// monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamScalar {
    num: Poly<CycloNum>,
    den: Poly<CycloNum>,
}

impl ParamScalar {
    pub fn new(num: Poly<CycloNum>, den: Poly<CycloNum>) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut n, _) = num.div_rem(&g)?;
        let (mut d, _) = den.div_rem(&g)?;
        let lead = d.lead().cloned().expect("nonzero");
        if !lead.is_one() {
            let inv = lead.try_inv()?;
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Ok(ParamScalar { num: n, den: d })
    }

    pub fn from_poly(p: Poly<CycloNum>) -> Self {
        ParamScalar { num: p, den: Poly::one() }
    }

    /// The parameter `t` itself.
    pub fn t() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn numer(&self) -> &Poly<CycloNum> {
        &self.num
    }
    pub fn denom(&self) -> &Poly<CycloNum> {
        &self.den
    }

    pub fn as_constant(&self) -> Option<CycloNum> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeff(0).mul_ref(&self.den.coeff(0).try_inv().ok()?))
        } else {
            None
        }
    }

    /// Specialize `t := value`.
    pub fn eval(&self, value: &CycloNum) -> Result<CycloNum, FieldError> {
        let d = self.den.eval(value);
        self.num.eval(value).try_div(&d)
    }
}

impl Field for ParamScalar {
    fn zero() -> Self {
        ParamScalar { num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        ParamScalar { num: Poly::one(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone()).expect("nonzero den");
        }
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
            .expect("nonzero den")
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero den")
    }
    fn neg_ref(&self) -> Self {
        ParamScalar { num: self.num.neg(), den: self.den.clone() }
    }
    fn try_inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }
    fn from_cyclo(c: CycloNum) -> Self {
        Self::from_poly(Poly::constant(c))
    }
    fn conj(&self) -> Self {
        Self::new(self.num.map(CycloNum::conj), self.den.map(CycloNum::conj))
            .expect("nonzero den")
    }
}

forward_ops!(ParamScalar);

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}]/[{}]", self.num, self.den)
        }
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamScalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_common_factors() {
        let t = ParamScalar::t();
        let one = ParamScalar::one();
        let a = (t.clone() * t.clone() - one.clone()).try_div(&(t.clone() - one.clone())).unwrap();
        assert_eq!(a, t + one);
        assert!(a.denom().is_constant());
    }

    #[test]
    fn evaluation() {
        let t = ParamScalar::t();
        let f = t.try_inv().unwrap() + ParamScalar::from_int(2);
        assert_eq!(f.eval(&CycloNum::from_int(4)).unwrap(), CycloNum::from_ratio(9, 4));
        assert_eq!(f.eval(&CycloNum::zero()), Err(FieldError::DivisionByZero));
    }
}
