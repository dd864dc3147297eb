//! Cyclotomic polynomials, quantum integers and cyclotomic valuations.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use super::laurent::{LaurentQ, Var};
use super::multirat::MultiRat;
use super::ratfunc::RatFunc;
use super::rational::QRational;
use crate::error::{Error, Result};

fn mobius(mut n: u64) -> i32 {
    let mut m = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            m = -m;
        }
        p += 1;
    }
    if n > 1 {
        m = -m;
    }
    m
}

fn totient(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// `q^e - 1`
fn q_pow_minus_one(e: u64) -> LaurentQ {
    LaurentQ::from_terms(Var::Q, [(e as i64, 1), (0, -1)])
}

/// The `d`-th cyclotomic polynomial in `q`.
pub fn cyclotomic(d: u64) -> LaurentQ {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut num = LaurentQ::one(Var::Q);
    let mut den = LaurentQ::one(Var::Q);
    for e in 1..=d {
        if !d.is_multiple_of(e) {
            continue;
        }
        match mobius(d / e) {
            1 => num = &num * &q_pow_minus_one(e),
            -1 => den = &den * &q_pow_minus_one(e),
            _ => {}
        }
    }
    num.exact_div(&den).expect("cyclotomic quotient is exact")
}

/// The quantum integer `[n] = (q^n - q^-n)/(q - q^-1)`.
pub fn q_int(n: i64) -> LaurentQ {
    let m = n.abs();
    let sign = if n < 0 { -1 } else { 1 };
    LaurentQ::from_terms(Var::Q, (0..m).map(|j| (m - 1 - 2 * j, sign)))
}

fn val_laurent(p: &LaurentQ, phi: &LaurentQ) -> i64 {
    let mut p = p.split_monomial().1;
    let mut v = 0;
    while let Some(r) = p.exact_div(phi) {
        p = r;
        v += 1;
    }
    v
}

/// Multiplicity of `phi_d` in the numerator minus that in the denominator.
pub fn val_cyclotomic(r: &RatFunc, d: u64) -> Result<i64> {
    if r.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let phi = cyclotomic(d);
    Ok(val_laurent(r.numer(), &phi) - val_laurent(r.denom(), &phi))
}

/// The product `prod_{s=1..k} (z_i q^{c+1-s} - z_i^-1 q^{s-1-c}) / (q^s - q^-s)` in `K`.
pub fn q_bracket_binom(rank: usize, i: usize, c: i64, k: u32) -> MultiRat {
    assert!(i >= 1 && i <= rank, "index out of range");
    let mut zi = vec![0; rank];
    zi[i - 1] = 1;
    let zinv: Vec<i64> = zi.iter().map(|x| -x).collect();
    let mut acc = MultiRat::one(rank);
    for s in 1..=k as i64 {
        let top = &MultiRat::monomial(&zi, c + 1 - s, QRational::one())
            - &MultiRat::monomial(&zinv, s - 1 - c, QRational::one());
        let bottom = MultiRat::from_laurent_q(rank, &LaurentQ::from_terms(Var::Q, [(s, 1), (-s, -1)]));
        acc = &acc * &(&top / &bottom);
    }
    acc
}

/// A value written as `c * q^m * prod [n]^{e_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QIntFactorization {
    pub scalar: QRational,
    pub q_exp: i64,
    /// `n -> e_n`, nonzero exponents only.
    pub factors: BTreeMap<i64, i64>,
}

impl QIntFactorization {
    pub fn is_pure(&self) -> bool {
        self.scalar.is_one() && self.q_exp == 0
    }

    /// The same factorization with the unit `c * q^m` dropped.
    pub fn without_unit(&self) -> Self {
        QIntFactorization { scalar: QRational::one(), q_exp: 0, factors: self.factors.clone() }
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let mut r = RatFunc::from_laurent(LaurentQ::monomial(Var::Q, self.scalar.clone(), self.q_exp));
        for (n, e) in &self.factors {
            r = &r * &RatFunc::from_laurent(q_int(*n)).pow(*e as i32);
        }
        r
    }
}

fn render_factors<'a>(it: impl Iterator<Item = (&'a i64, i64)>) -> (String, usize) {
    let mut out = String::new();
    let mut count = 0;
    for (n, e) in it {
        out.push_str(&format!("[{n}]"));
        count += 1;
        if e != 1 {
            out.push_str(&format!("^{e}"));
            count += 1;
        }
    }
    (out, count)
}

impl fmt::Display for QIntFactorization {
    /// `[2][7]/([5][9])`, with a leading `c*q^m*` when the unit is not 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, _) = render_factors(self.factors.iter().filter(|(_, e)| **e > 0).map(|(n, e)| (n, *e)));
        let (den, dcount) = render_factors(self.factors.iter().filter(|(_, e)| **e < 0).map(|(n, e)| (n, -*e)));
        let mut unit = String::new();
        if !self.is_pure() {
            let mono = LaurentQ::monomial(Var::Q, self.scalar.clone(), self.q_exp).to_string();
            unit = if num.is_empty() {
                mono
            } else if mono == "-1" {
                "-".into()
            } else {
                format!("{mono}*")
            };
        }
        let num = if num.is_empty() && unit.is_empty() { "1".to_string() } else { num };
        write!(f, "{unit}{num}")?;
        if !den.is_empty() {
            if dcount > 1 {
                write!(f, "/({den})")?;
            } else {
                write!(f, "/{den}")?;
            }
        }
        Ok(())
    }
}

fn cyclotomic_valuations(p: &LaurentQ, bound: u64) -> BTreeMap<u64, i64> {
    let mut out = BTreeMap::new();
    let deg = p.split_monomial().1.degree().unwrap_or(0) as u64;
    for d in 1..=bound {
        if totient(d) > deg {
            continue;
        }
        let v = val_laurent(p, &cyclotomic(d));
        if v != 0 {
            out.insert(d, v);
        }
    }
    out
}

/// Write a nonzero rational function as a unit times a product of quantum integers.
///
/// Returns `None` when no such expression exists.
pub fn factor_q_integers(r: &RatFunc) -> Option<QIntFactorization> {
    if r.is_zero() {
        return None;
    }
    let dn = r.numer().split_monomial().1.degree().unwrap_or(0) as u64;
    let dd = r.denom().split_monomial().1.degree().unwrap_or(0) as u64;
    let deg = dn.max(dd);
    // totient(d) >= sqrt(d / 2), so larger d cannot divide
    let bound = (2 * deg * deg).max(6);
    let mut vals = cyclotomic_valuations(r.numer(), bound);
    for (d, v) in cyclotomic_valuations(r.denom(), bound) {
        *vals.entry(d).or_insert(0) -= v;
    }
    vals.retain(|_, v| *v != 0);
    let mut factors = BTreeMap::new();
    while let Some((&d, &v)) = vals.iter().next_back() {
        if d <= 2 || d % 2 == 1 {
            return None;
        }
        let n = (d / 2) as i64;
        factors.insert(n, v);
        for e in 3..=d {
            if d % e == 0 {
                let slot = vals.entry(e).or_insert(0);
                *slot -= v;
                if *slot == 0 {
                    vals.remove(&e);
                }
            }
        }
    }
    let mut prod = RatFunc::one();
    for (n, e) in &factors {
        prod = &prod * &RatFunc::from_laurent(q_int(*n)).pow(*e as i32);
    }
    let unit = r.checked_div(&prod).ok()?;
    let (scalar, q_exp) = unit.as_monomial()?;
    Some(QIntFactorization { scalar, q_exp, factors })
}

/// Render a rational function through [`factor_q_integers`], falling back to raw form.
pub fn render_q_integers(r: &RatFunc) -> String {
    if r.is_zero() {
        return "0".into();
    }
    match factor_q_integers(r) {
        Some(f) => f.to_string(),
        None => r.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).to_string(), "-1 + q");
        assert_eq!(cyclotomic(4).to_string(), "1 + q^2");
        assert_eq!(cyclotomic(6).to_string(), "1 - q + q^2");
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(0).to_string(), "0");
        assert_eq!(q_int(2).to_string(), "q^-1 + q");
        assert_eq!(q_int(-3), -q_int(3));
    }

    #[test]
    fn valuations() {
        let two = RatFunc::from_laurent(q_int(2));
        assert_eq!(val_cyclotomic(&two, 4).unwrap(), 1);
        assert_eq!(val_cyclotomic(&two.inv().unwrap(), 4).unwrap(), -1);
        assert_eq!(val_cyclotomic(&RatFunc::from_laurent(q_int(3)), 4).unwrap(), 0);
        assert_eq!(val_cyclotomic(&RatFunc::zero(), 4), Err(Error::ZeroValuation));
    }

    #[test]
    fn renders_quotients_of_q_integers() {
        let f = |n| RatFunc::from_laurent(q_int(n));
        let r = &(&f(2) * &f(7)) / &(&f(5) * &f(9));
        assert_eq!(render_q_integers(&r), "[2][7]/([5][9])");
        assert_eq!(render_q_integers(&f(2).inv().unwrap()), "1/[2]");
        assert_eq!(render_q_integers(&(&f(6) / &f(2))), "[6]/[2]");
        assert_eq!(render_q_integers(&(-&(&f(2) * &f(2)).shift(3))), "-q^3*[2]^2");
        assert_eq!(render_q_integers(&RatFunc::one()), "1");
    }
}
