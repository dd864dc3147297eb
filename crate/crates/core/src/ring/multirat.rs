//! The field `K = Q(q, z_1, ..., z_N)` as fractions of multivariate Laurent polynomials.
//!
//! Variables are ordered `z_1 > ... > z_N > q`; a [`MultiPoly`] backing a
//! `MultiRat` of rank `N` has `N + 1` variables with `q` last.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::laurent::{forward_owned, LaurentQ};
use super::multipoly::{gcd, MultiPoly};
use super::ratfunc::RatFunc;
use super::rational::QRational;
use super::weight::WeightVec;
use crate::error::{Error, Result};

/// Canonical form: numerator and denominator coprime, denominator with all
/// lowest exponents zero and lexicographic leading coefficient 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiRat {
    num: MultiPoly,
    den: MultiPoly,
}

impl MultiRat {
    pub fn zero(rank: usize) -> Self {
        MultiRat { num: MultiPoly::zero(rank + 1), den: MultiPoly::one(rank + 1) }
    }

    pub fn one(rank: usize) -> Self {
        Self::from_poly(MultiPoly::one(rank + 1))
    }

    pub fn from_int(rank: usize, c: i64) -> Self {
        Self::from_poly(MultiPoly::constant(rank + 1, QRational::from_integer(c.into())))
    }

    pub fn constant(rank: usize, c: QRational) -> Self {
        Self::from_poly(MultiPoly::constant(rank + 1, c))
    }

    /// Monomial `c * z^zexp * q^qexp`.
    pub fn monomial(zexp: &[i64], qexp: i64, c: QRational) -> Self {
        let mut e = zexp.to_vec();
        e.push(qexp);
        Self::from_poly(MultiPoly::monomial(e, c))
    }

    /// The symbol `z_i` (1-based).
    pub fn z(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank, "z index out of range");
        Self::from_poly(MultiPoly::var(rank + 1, i - 1))
    }

    pub fn q_pow(rank: usize, e: i64) -> Self {
        let mut x = vec![0; rank + 1];
        x[rank] = e;
        Self::from_poly(MultiPoly::monomial(x, QRational::one()))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let n = p.nvars();
        MultiRat { num: p, den: MultiPoly::one(n) }
    }

    pub fn from_laurent_q(rank: usize, p: &LaurentQ) -> Self {
        Self::from_poly(laurent_to_poly(rank, p))
    }

    pub fn from_ratfunc(rank: usize, r: &RatFunc) -> Self {
        Self::reduce(laurent_to_poly(rank, r.numer()), laurent_to_poly(rank, r.denom()))
    }

    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.nvars() != den.nvars() {
            return Err(Error::Mismatch);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self::zero(den.nvars() - 1);
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            return Self::unit_normalize(num, den);
        }
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        Self::unit_normalize(num, den)
    }

    fn unit_normalize(num: MultiPoly, den: MultiPoly) -> Self {
        let (lc, m, den) = den.normalize_unit();
        let neg: Vec<i64> = m.iter().map(|x| -x).collect();
        let num = num.mul_monomial(&neg).scale(&(QRational::one() / lc));
        MultiRat { num, den }
    }

    pub fn rank(&self) -> usize {
        self.num.nvars() - 1
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
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
        MultiRat { num: base.num.pow(k), den: base.den.pow(k) }
    }

    pub fn scale(&self, c: &QRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank());
        }
        MultiRat { num: self.num.scale(c), den: self.den.clone() }
    }

    /// The automorphism `sigma_mu`: `z_i -> q^{(mu, eps_i)} z_i`, fixing `Q(q)`.
    pub fn sigma_shift(&self, mu: &WeightVec) -> Self {
        assert_eq!(mu.len(), self.rank(), "weight rank mismatch");
        if mu.is_zero() {
            return self.clone();
        }
        let num = sigma_poly(&self.num, mu);
        let den = sigma_poly(&self.den, mu);
        Self::unit_normalize(num, den)
    }

    /// Evaluation `z_i -> q^{(lambda, eps_i)}`.
    pub fn eval_at_weight(&self, lambda: &WeightVec) -> Result<RatFunc> {
        assert_eq!(lambda.len(), self.rank(), "weight rank mismatch");
        let den = eval_poly(&self.den, lambda);
        if den.is_zero() {
            return Err(Error::EvaluationPole(lambda.to_string()));
        }
        RatFunc::new(eval_poly(&self.num, lambda), den)
    }

    /// Naming `z1..zN, q`.
    pub fn var_names(rank: usize) -> Vec<String> {
        let mut names: Vec<String> = (1..=rank).map(|i| format!("z{i}")).collect();
        names.push("q".into());
        names
    }
}

fn laurent_to_poly(rank: usize, p: &LaurentQ) -> MultiPoly {
    let mut out = MultiPoly::zero(rank + 1);
    for (e, c) in p.terms() {
        let mut x = vec![0; rank + 1];
        x[rank] = e;
        out.add_term(x, c.clone());
    }
    out
}

fn sigma_poly(p: &MultiPoly, mu: &WeightVec) -> MultiPoly {
    let n = mu.len();
    p.map_terms(p.nvars(), |e, c| {
        let mut e2 = e.clone();
        let shift: i64 = (0..n).map(|i| mu[i] * e[i]).sum();
        e2[n] += shift;
        (e2, c.clone())
    })
}

pub(crate) fn eval_poly(p: &MultiPoly, lambda: &WeightVec) -> LaurentQ {
    let n = lambda.len();
    let mut out = LaurentQ::zero(super::laurent::Var::Q);
    for (e, c) in p.terms() {
        let x: i64 = (0..n).map(|i| lambda[i] * e[i]).sum::<i64>() + e[n];
        out.add_term(x, c.clone());
    }
    out
}

impl fmt::Display for MultiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = Self::var_names(self.rank());
        let n = self.num.format_with(&names);
        if self.den.is_one() {
            return write!(f, "{n}");
        }
        let d = self.den.format_with(&names);
        let n = if self.num.num_terms() > 1 { format!("({n})") } else { n };
        let d = if self.den.num_terms() > 1 { format!("({d})") } else { d };
        write!(f, "{n}/{d}")
    }
}

impl fmt::Debug for MultiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for MultiRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl Add for &MultiRat {
    type Output = MultiRat;
    fn add(self, rhs: &MultiRat) -> MultiRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return MultiRat::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return MultiRat::unit_normalize(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return MultiRat::unit_normalize(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        let b = self.den.exact_div(&g).unwrap();
        let d = rhs.den.exact_div(&g).unwrap();
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        MultiRat::reduce(num, &(&b * &d) * &g)
    }
}

impl Sub for &MultiRat {
    type Output = MultiRat;
    fn sub(self, rhs: &MultiRat) -> MultiRat {
        self + &(-rhs)
    }
}

impl Mul for &MultiRat {
    type Output = MultiRat;
    fn mul(self, rhs: &MultiRat) -> MultiRat {
        if self.is_zero() || rhs.is_zero() {
            return MultiRat::zero(self.rank());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return MultiRat::from_poly(&self.num * &rhs.num);
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let a = self.num.exact_div(&g1).unwrap();
        let d = rhs.den.exact_div(&g1).unwrap();
        let c = rhs.num.exact_div(&g2).unwrap();
        let b = self.den.exact_div(&g2).unwrap();
        MultiRat::unit_normalize(&a * &c, &b * &d)
    }
}

impl Div for &MultiRat {
    type Output = MultiRat;
    fn div(self, rhs: &MultiRat) -> MultiRat {
        self.checked_div(rhs).expect("division by zero in K")
    }
}

impl Neg for &MultiRat {
    type Output = MultiRat;
    fn neg(self) -> MultiRat {
        MultiRat { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for MultiRat {
    type Output = MultiRat;
    fn neg(self) -> MultiRat {
        -&self
    }
}

forward_owned!(MultiRat, Add add, Sub sub, Mul mul, Div div);

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: usize) -> MultiRat {
        MultiRat::z(2, i)
    }

    #[test]
    fn cancels_and_normalizes() {
        // (z1^2 - z2^2) / (z1 + z2) = z1 - z2
        let a = &(&z(1) * &z(1)) - &(&z(2) * &z(2));
        let b = &z(1) + &z(2);
        assert_eq!(&a / &b, &z(1) - &z(2));
        let c = &a / &a;
        assert!(c.is_one());
    }

    #[test]
    fn sigma_and_eval() {
        let f = &z(1) / &z(2);
        let mu = WeightVec::unit(2, 1);
        assert_eq!(f.sigma_shift(&mu), &MultiRat::q_pow(2, 1) * &f);
        let w = WeightVec::new(vec![3, 1]);
        assert_eq!(z(1).eval_at_weight(&w).unwrap(), RatFunc::q_pow(3));
        let pole = MultiRat::one(2) / (&z(1) - &z(2));
        assert!(matches!(pole.eval_at_weight(&WeightVec::new(vec![1, 1])), Err(Error::EvaluationPole(_))));
    }

    #[test]
    fn display_uses_symbol_names() {
        let f = &(&z(1) - &z(2)) / &MultiRat::q_pow(2, 1);
        assert_eq!(f.to_string(), "-z2*q^-1 + z1*q^-1");
    }
}
