use core::fmt;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{forward_ops, Field, FieldError};

/// An element of Q(ζ₂₄) in the power basis 1, ζ, …, ζ⁷ with ζ⁸ = ζ⁴ − 1.
///
/// Stored as integer numerators over one positive common denominator, kept in
/// lowest terms, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    num: [BigInt; 8],
    den: BigInt,
}

/// ζ^m for m in 0..24 as small integer vectors in the power basis.
fn zeta_power_table() -> [[i8; 8]; 24] {
    let mut t = [[0i8; 8]; 24];
    t[0][0] = 1;
    for m in 1..24 {
        let prev = t[m - 1];
        let mut next = [0i8; 8];
        for j in 0..7 {
            next[j + 1] = prev[j];
        }
        // ζ·ζ⁷ = ζ⁸ = ζ⁴ − 1
        next[4] += prev[7];
        next[0] -= prev[7];
        t[m] = next;
    }
    t
}

fn reduce15(c: &mut [BigInt; 15]) {
    for k in (8..15).rev() {
        if c[k].is_zero() {
            continue;
        }
        let v = core::mem::take(&mut c[k]);
        c[k - 4] += &v;
        c[k - 8] -= &v;
    }
}

impl CycloNum {
    fn from_parts(num: [BigInt; 8], den: BigInt) -> Self {
        let mut r = CycloNum { num, den };
        r.normalize();
        r
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for n in self.num.iter_mut() {
                *n = -core::mem::take(n);
            }
        }
        let mut g = self.den.clone();
        for n in self.num.iter() {
            if g.is_one() {
                return;
            }
            if !n.is_zero() {
                g = g.gcd(n);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for n in self.num.iter_mut() {
                *n /= &g;
            }
        }
    }

    pub fn from_int(n: i64) -> Self {
        let mut num: [BigInt; 8] = Default::default();
        num[0] = BigInt::from(n);
        CycloNum { num, den: BigInt::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        let mut num: [BigInt; 8] = Default::default();
        num[0] = BigInt::from(n);
        Self::from_parts(num, BigInt::from(d))
    }

    pub fn from_rational(q: &BigRational) -> Self {
        let mut num: [BigInt; 8] = Default::default();
        num[0] = q.numer().clone();
        Self::from_parts(num, q.denom().clone())
    }

    pub fn from_coeffs(c: &[BigRational; 8]) -> Self {
        let mut den = BigInt::one();
        for q in c {
            den = den.lcm(q.denom());
        }
        let num: [BigInt; 8] = core::array::from_fn(|j| c[j].numer() * (&den / c[j].denom()));
        Self::from_parts(num, den)
    }

    /// Small-integer power-basis coefficients.
    pub fn from_int_coeffs(c: [i64; 8]) -> Self {
        let num: [BigInt; 8] = core::array::from_fn(|j| BigInt::from(c[j]));
        CycloNum { num, den: BigInt::one() }
    }

    pub fn coeffs(&self) -> [BigRational; 8] {
        core::array::from_fn(|j| BigRational::new(self.num[j].clone(), self.den.clone()))
    }

    /// Rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    /// ζ₂₄^j for any integer j.
    pub fn zeta(j: i64) -> Self {
        let m = j.rem_euclid(24) as usize;
        let t = zeta_power_table();
        let v = t[m];
        Self::from_int_coeffs(core::array::from_fn(|k| v[k] as i64))
    }

    pub fn i() -> Self {
        Self::zeta(6)
    }
    /// e^{iπ/3} = ζ⁴.
    pub fn eta() -> Self {
        Self::zeta(4)
    }
    /// ξ_k = e^{2kπi/8} = ζ^{3k}.
    pub fn xi(k: i64) -> Self {
        Self::zeta(3 * k)
    }
    pub fn sqrt2() -> Self {
        Self::zeta(3) + Self::zeta(-3)
    }
    pub fn sqrt3() -> Self {
        Self::zeta(2) + Self::zeta(-2)
    }
    pub fn sqrt6() -> Self {
        Self::sqrt2() * Self::sqrt3()
    }
    /// √−3, fixed as i·√3.
    pub fn sqrt_neg3() -> Self {
        Self::i() * Self::sqrt3()
    }
    /// ν₁ = (−1+i)/(1−√3).
    pub fn nu1() -> Self {
        let num = Self::i() - Self::one();
        let den = Self::one() - Self::sqrt3();
        num.try_div(&den).expect("1 - sqrt3 is nonzero")
    }
    /// ν₂ = (−1+i)/(1+√3).
    pub fn nu2() -> Self {
        let num = Self::i() - Self::one();
        let den = Self::one() + Self::sqrt3();
        num.try_div(&den).expect("1 + sqrt3 is nonzero")
    }

    /// Look up a named constant: `i`, `sqrt2`, `sqrt3`, `sqrt6`, `sqrt_neg3`,
    /// `xi_k`, `eta`, `zeta24^j`, `nu1`, `nu2`.
    pub fn named(name: &str) -> Result<Self, FieldError> {
        let unknown = || FieldError::UnknownConstant(name.to_string());
        match name {
            "i" => return Ok(Self::i()),
            "sqrt2" => return Ok(Self::sqrt2()),
            "sqrt3" => return Ok(Self::sqrt3()),
            "sqrt6" => return Ok(Self::sqrt6()),
            "sqrt_neg3" => return Ok(Self::sqrt_neg3()),
            "eta" => return Ok(Self::eta()),
            "nu1" => return Ok(Self::nu1()),
            "nu2" => return Ok(Self::nu2()),
            _ => {}
        }
        if let Some(k) = name.strip_prefix("xi_") {
            let k: i64 = k.parse().map_err(|_| unknown())?;
            if (0..8).contains(&k) {
                return Ok(Self::xi(k));
            }
            return Err(unknown());
        }
        if let Some(j) = name.strip_prefix("zeta24^") {
            let j: i64 = j.parse().map_err(|_| unknown())?;
            return Ok(Self::zeta(j));
        }
        Err(unknown())
    }

    /// The automorphism ζ ↦ ζ^k for k prime to 24.
    pub fn galois(&self, k: i64) -> Self {
        let k = k.rem_euclid(24);
        assert!(k.gcd(&24) == 1, "ζ ↦ ζ^{k} is not an automorphism");
        let t = zeta_power_table();
        let mut out: [BigInt; 8] = Default::default();
        for j in 0..8 {
            if self.num[j].is_zero() {
                continue;
            }
            let img = t[((j as i64 * k) % 24) as usize];
            for (m, &c) in img.iter().enumerate() {
                if c != 0 {
                    out[m] += &self.num[j] * BigInt::from(c);
                }
            }
        }
        Self::from_parts(out, self.den.clone())
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> BigRational {
        let mut p = self.clone();
        for k in [5, 7, 11, 13, 17, 19, 23] {
            p = p.mul_ref(&self.galois(k));
        }
        p.as_rational().expect("norm lies in Q")
    }

    pub fn numerators(&self) -> &[BigInt; 8] {
        &self.num
    }
    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// `num/den` strings, one per power-basis coefficient.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(|q| q.to_string()).collect()
    }

    pub fn parse_strings(parts: &[&str]) -> Option<Self> {
        if parts.len() != 8 {
            return None;
        }
        let mut c: [BigRational; 8] = Default::default();
        for (j, s) in parts.iter().enumerate() {
            c[j] = s.trim().parse().ok()?;
        }
        Some(Self::from_coeffs(&c))
    }
}

impl Default for CycloNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl Field for CycloNum {
    fn zero() -> Self {
        CycloNum { num: Default::default(), den: BigInt::one() }
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }
    fn add_ref(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            let num = core::array::from_fn(|j| &self.num[j] + &o.num[j]);
            return Self::from_parts(num, self.den.clone());
        }
        let num = core::array::from_fn(|j| &self.num[j] * &o.den + &o.num[j] * &self.den);
        Self::from_parts(num, &self.den * &o.den)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.is_rational() {
            let num = core::array::from_fn(|j| &self.num[j] * &o.num[0]);
            return Self::from_parts(num, &self.den * &o.den);
        }
        if self.is_rational() {
            return o.mul_ref(self);
        }
        let mut c: [BigInt; 15] = Default::default();
        for i in 0..8 {
            if self.num[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if o.num[j].is_zero() {
                    continue;
                }
                c[i + j] += &self.num[i] * &o.num[j];
            }
        }
        reduce15(&mut c);
        let mut num: [BigInt; 8] = Default::default();
        for (j, v) in c.into_iter().take(8).enumerate() {
            num[j] = v;
        }
        Self::from_parts(num, &self.den * &o.den)
    }
    fn neg_ref(&self) -> Self {
        CycloNum { num: core::array::from_fn(|j| -&self.num[j]), den: self.den.clone() }
    }
    fn try_inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.is_rational() {
            let mut num: [BigInt; 8] = Default::default();
            num[0] = self.den.clone();
            return Ok(Self::from_parts(num, self.num[0].clone()));
        }
        let mut adj = Self::one();
        for k in [5, 7, 11, 13, 17, 19, 23] {
            adj = adj.mul_ref(&self.galois(k));
        }
        let n = self.mul_ref(&adj).as_rational().expect("norm lies in Q");
        let inv_n = Self::from_rational(&n.recip());
        Ok(adj.mul_ref(&inv_n))
    }
    fn from_cyclo(c: CycloNum) -> Self {
        c
    }
    fn conj(&self) -> Self {
        self.galois(23)
    }
}

forward_ops!(CycloNum);

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, q) in self.coeffs().iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let a = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match j {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if j == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{j}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomial_reduction() {
        let z4 = CycloNum::zeta(4);
        assert_eq!(z4.clone() * z4, CycloNum::zeta(4) - CycloNum::one());
        assert_eq!(CycloNum::zeta(12), -CycloNum::one());
        assert_eq!(CycloNum::zeta(24), CycloNum::one());
    }

    #[test]
    fn radicals_square_correctly() {
        assert_eq!(CycloNum::sqrt2().pow(2), CycloNum::from_int(2));
        assert_eq!(CycloNum::sqrt3().pow(2), CycloNum::from_int(3));
        assert_eq!(CycloNum::sqrt6().pow(2), CycloNum::from_int(6));
        assert_eq!(CycloNum::sqrt_neg3().pow(2), CycloNum::from_int(-3));
        assert_eq!(CycloNum::i().pow(2), CycloNum::from_int(-1));
    }

    #[test]
    fn conj_fixes_reals() {
        assert_eq!(CycloNum::sqrt2().conj(), CycloNum::sqrt2());
        assert_eq!(CycloNum::i().conj(), -CycloNum::i());
    }

    #[test]
    fn inverse_of_irrational() {
        let a = CycloNum::one() + CycloNum::zeta(1) * CycloNum::from_int(3);
        let b = a.try_inv().unwrap();
        assert_eq!(a * b, CycloNum::one());
        assert_eq!(CycloNum::zero().try_inv(), Err(FieldError::DivisionByZero));
    }
}
