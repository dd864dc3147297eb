//! Comparisons "up to a unit" in `Q(q)[z_1^{±1}, ..., z_N^{±1}]`.

use std::collections::BTreeMap;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::laurent::{LaurentQ, Var};
use super::multipoly::MultiPoly;
use super::multirat::MultiRat;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Decomposition `a / b = sign * q^q_exp * z^z_monomial * scalar`.
///
/// `scalar` has matching lowest exponents in numerator and denominator and a
/// positive lowest-order coefficient ratio, so `scalar == 1` exactly when the
/// `Q(q)` part is `±q^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitRatio {
    pub sign: i32,
    pub q_exp: i64,
    pub z_monomial: Vec<i64>,
    pub scalar: RatFunc,
}

impl UnitRatio {
    pub fn is_z_free(&self) -> bool {
        self.z_monomial.iter().all(|&e| e == 0)
    }

    pub fn is_signed_q_power(&self) -> bool {
        self.is_z_free() && self.scalar.is_one()
    }

    pub fn is_q_power(&self) -> bool {
        self.is_signed_q_power() && self.sign == 1
    }
}

/// How strictly two quantities must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Tolerance {
    /// `+q^m`
    Strict,
    /// `±q^m`
    #[default]
    Signed,
    /// any unit of `Q(q)[z^{±1}]`
    Unit,
}

impl Tolerance {
    pub fn accepts(self, u: &UnitRatio) -> bool {
        match self {
            Tolerance::Strict => u.is_q_power(),
            Tolerance::Signed => u.is_signed_q_power(),
            Tolerance::Unit => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Tolerance::Strict => "strict",
            Tolerance::Signed => "signed",
            Tolerance::Unit => "unit",
        }
    }
}

fn split_by_z(p: &MultiPoly) -> BTreeMap<Vec<i64>, LaurentQ> {
    let n = p.nvars() - 1;
    let mut out: BTreeMap<Vec<i64>, LaurentQ> = BTreeMap::new();
    for (e, c) in p.terms() {
        out.entry(e[..n].to_vec()).or_insert_with(|| LaurentQ::zero(Var::Q)).add_term(e[n], c.clone());
    }
    out
}

fn decompose_scalar(c: &RatFunc) -> (i32, i64, RatFunc) {
    let ln = c.numer().low_degree().unwrap_or(0);
    let ld = c.denom().low_degree().unwrap_or(0);
    let negative = c.numer().trailing_coeff().unwrap().is_negative();
    let sign = if negative { -1 } else { 1 };
    let scalar = c.shift(ld - ln);
    let scalar = if negative { -scalar } else { scalar };
    (sign, ln - ld, scalar)
}

/// Decompose `a / b` when it is a unit of `Q(q)[z^{±1}]`; `None` otherwise.
///
/// With `strict`, additionally require the `Q(q)` part to be `±q^m`.
pub fn unit_ratio(a: &MultiRat, b: &MultiRat, strict: bool) -> Result<Option<UnitRatio>> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if a.rank() != b.rank() {
        return Err(Error::Mismatch);
    }
    if a.is_zero() {
        return Ok(None);
    }
    // a/b = P/Q with P = a.num * b.den, Q = a.den * b.num
    let p = split_by_z(&(a.numer() * b.denom()));
    let q = split_by_z(&(a.denom() * b.numer()));
    if p.len() != q.len() {
        return Ok(None);
    }
    let (pz, ptop) = p.iter().next_back().unwrap();
    let (qz, qtop) = q.iter().next_back().unwrap();
    let shift: Vec<i64> = pz.iter().zip(qz).map(|(x, y)| x - y).collect();
    for ((pe, pc), (qe, qc)) in p.iter().zip(q.iter()) {
        if pe.iter().zip(qe).zip(&shift).any(|((x, y), s)| x - y != *s) {
            return Ok(None);
        }
        if (pc * qtop) != (ptop * qc) {
            return Ok(None);
        }
    }
    let c = RatFunc::new(ptop.clone(), qtop.clone())?;
    let (sign, q_exp, scalar) = decompose_scalar(&c);
    let u = UnitRatio { sign, q_exp, z_monomial: shift, scalar };
    if strict && !u.scalar.is_one() {
        return Ok(None);
    }
    Ok(Some(u))
}

/// Whether `a` and `b` agree within `tol`; two zeros agree, a zero and a nonzero do not.
pub fn agrees(a: &MultiRat, b: &MultiRat, tol: Tolerance) -> bool {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return true,
        (true, false) | (false, true) => return false,
        _ => {}
    }
    matches!(unit_ratio(a, b, false), Ok(Some(u)) if tol.accepts(&u))
}

/// `a / b` as a univariate unit check: `Some((sign, m))` when `a = sign * q^m * b`.
pub fn signed_q_ratio(a: &RatFunc, b: &RatFunc) -> Option<(i32, i64)> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let r = a.checked_div(b).ok()?;
    let (c, e) = r.as_monomial()?;
    if c.is_one() {
        Some((1, e))
    } else if (-c).is_one() {
        Some((-1, e))
    } else {
        None
    }
}

/// Univariate counterpart of [`agrees`].
pub fn agrees_q(a: &RatFunc, b: &RatFunc, tol: Tolerance) -> bool {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => true,
        (true, false) | (false, true) => false,
        _ => match tol {
            Tolerance::Strict => matches!(signed_q_ratio(a, b), Some((1, _))),
            Tolerance::Signed => signed_q_ratio(a, b).is_some(),
            Tolerance::Unit => true,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::rat;

    fn f() -> MultiRat {
        &(&MultiRat::z(2, 1) - &MultiRat::z(2, 2)) + &MultiRat::q_pow(2, 2)
    }

    #[test]
    fn monomial_multiple() {
        let a = &(&MultiRat::q_pow(2, 3) * &MultiRat::z(2, 1)) * &f();
        let u = unit_ratio(&a, &f(), true).unwrap().unwrap();
        assert_eq!((u.sign, u.q_exp, u.z_monomial.clone()), (1, 3, vec![1, 0]));
        assert!(u.scalar.is_one());
    }

    #[test]
    fn non_unit_ratio() {
        let a = &(&MultiRat::z(2, 1) - &MultiRat::z(2, 2)) * &f();
        assert_eq!(unit_ratio(&a, &f(), false).unwrap(), None);
    }

    #[test]
    fn signed_power() {
        let a = &MultiRat::q_pow(2, -1).scale(&rat(-1)) * &f();
        let u = unit_ratio(&a, &f(), true).unwrap().unwrap();
        assert_eq!((u.sign, u.q_exp), (-1, -1));
        assert!(u.is_signed_q_power() && !u.is_q_power());
    }

    #[test]
    fn general_scalar() {
        let s = MultiRat::from_laurent_q(2, &LaurentQ::from_terms(Var::Q, [(1, 3), (0, -6)]));
        let a = &s * &f();
        let u = unit_ratio(&a, &f(), false).unwrap().unwrap();
        assert!(!u.scalar.is_one());
        assert!(unit_ratio(&a, &f(), true).unwrap().is_none());
        assert!(agrees(&a, &f(), Tolerance::Unit));
        assert!(!agrees(&a, &f(), Tolerance::Signed));
    }
}
