//! Rational functions in one variable, `Q(q)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::laurent::{forward_owned, LaurentQ, Var};
use super::rational::QRational;
use crate::error::{Error, Result};

/// A reduced fraction `num / den` of Laurent polynomials.
///
/// Canonical form: `gcd(num, den) = 1`, `den` has lowest exponent 0 and
/// leading coefficient 1, zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentQ,
    den: LaurentQ,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentQ::zero(Var::Q), den: LaurentQ::one(Var::Q) }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentQ::one(Var::Q))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentQ::from_int(Var::Q, c))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(LaurentQ::q_pow(e))
    }

    pub fn from_laurent(p: LaurentQ) -> Self {
        RatFunc { num: p.with_var(Var::Q), den: LaurentQ::one(Var::Q) }
    }

    pub fn new(num: LaurentQ, den: LaurentQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num.with_var(Var::Q), den.with_var(Var::Q)))
    }

    fn reduce(num: LaurentQ, den: LaurentQ) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        Self::unit_normalize(num, den)
    }

    fn unit_normalize(num: LaurentQ, den: LaurentQ) -> Self {
        let (lc, s, den) = den.normalize_unit();
        let num = num.shift(-s).scale(&(QRational::one() / lc));
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &LaurentQ {
        &self.num
    }

    pub fn denom(&self) -> &LaurentQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(p)` when the value is a Laurent polynomial.
    pub fn as_laurent(&self) -> Option<&LaurentQ> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// `Some((c, e))` when the value is `c * q^e`.
    pub fn as_monomial(&self) -> Option<(QRational, i64)> {
        let p = self.as_laurent()?;
        if p.is_monomial() {
            let (e, c) = p.terms().next().unwrap();
            Some((c.clone(), e))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::unit_normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let k = n.unsigned_abs();
        RatFunc { num: base.num.pow(k), den: base.den.pow(k) }
    }

    pub fn scale(&self, c: &QRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        RatFunc { num: self.num.shift(k), den: self.den.clone() }
    }

    /// Substitute `q -> q^k` for `k != 0`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0);
        Self::reduce(self.num.substitute_power(k), self.den.substitute_power(k))
    }

    pub fn eval(&self, x: &QRational) -> Option<QRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let n = if self.num.num_terms() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        let d = if self.den.num_terms() > 1 { format!("({})", self.den) } else { self.den.to_string() };
        write!(f, "{n}/{d}")
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl From<LaurentQ> for RatFunc {
    fn from(p: LaurentQ) -> Self {
        Self::from_laurent(p)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::reduce(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.exact_div(&g1).unwrap();
        let d = rhs.den.exact_div(&g1).unwrap();
        let c = rhs.num.exact_div(&g2).unwrap();
        let b = self.den.exact_div(&g2).unwrap();
        RatFunc::unit_normalize(&a * &c, &b * &d)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

forward_owned!(RatFunc, Add add, Sub sub, Mul mul, Div div);

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lq(terms: &[(i64, i64)]) -> LaurentQ {
        LaurentQ::from_terms(Var::Q, terms.iter().copied())
    }

    #[test]
    fn reduces_common_factors() {
        // (q^2 - 1) / (q^2 + q) = (q - 1) / q
        let r = RatFunc::new(lq(&[(2, 1), (0, -1)]), lq(&[(2, 1), (1, 1)])).unwrap();
        assert_eq!(r, RatFunc::from_laurent(lq(&[(0, 1), (-1, -1)])));
    }

    #[test]
    fn field_operations() {
        let a = RatFunc::new(lq(&[(1, 1)]), lq(&[(1, 1), (0, 1)])).unwrap();
        let b = RatFunc::new(lq(&[(0, 3)]), lq(&[(2, 1), (0, -1)])).unwrap();
        let s = &a + &b;
        assert_eq!(&s - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!(&a * &a.inv().unwrap(), RatFunc::one());
    }

    #[test]
    fn display() {
        let r = RatFunc::new(lq(&[(0, 1)]), lq(&[(1, 1), (-1, 1)])).unwrap();
        assert_eq!(r.to_string(), "q/(1 + q^2)");
    }
}
