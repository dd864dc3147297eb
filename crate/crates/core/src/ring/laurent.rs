//! Laurent polynomials in a single variable over `Q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{parse_rational, QRational};

/// Name of the indeterminate of a [`LaurentQ`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    V,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::V => "v",
        }
    }
}

/// A Laurent polynomial `sum c_e x^e` with rational coefficients.
///
/// Zero coefficients are never stored, so the empty map is the zero
/// polynomial and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentQ {
    var: Var,
    coeffs: BTreeMap<i64, QRational>,
}

pub(crate) fn add_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Laurent exponent overflow")
}

impl LaurentQ {
    pub fn zero(var: Var) -> Self {
        LaurentQ { var, coeffs: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, QRational::one())
    }

    pub fn constant(var: Var, c: QRational) -> Self {
        Self::monomial(var, c, 0)
    }

    pub fn from_int(var: Var, c: i64) -> Self {
        Self::constant(var, QRational::from_integer(c.into()))
    }

    pub fn monomial(var: Var, c: QRational, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentQ { var, coeffs }
    }

    /// `x^exp`.
    pub fn x_pow(var: Var, exp: i64) -> Self {
        Self::monomial(var, QRational::one(), exp)
    }

    /// `q^exp` shortcut.
    pub fn q_pow(exp: i64) -> Self {
        Self::x_pow(Var::Q, exp)
    }

    /// Build from `(exponent, integer coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(var: Var, terms: I) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, QRational::from_integer(c.into()));
        }
        p
    }

    pub fn from_map(var: Var, coeffs: BTreeMap<i64, QRational>) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LaurentQ { var, coeffs }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&e| e == 0)
    }

    /// Single nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &QRational)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, exp: i64) -> QRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(QRational::zero)
    }

    pub fn add_term(&mut self, exp: i64, c: QRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(QRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Highest exponent; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent; `None` for zero.
    pub fn low_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&QRational> {
        self.coeffs.values().next_back()
    }

    pub fn trailing_coeff(&self) -> Option<&QRational> {
        self.coeffs.values().next()
    }

    pub fn scale(&self, c: &QRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        LaurentQ { var: self.var, coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentQ { var: self.var, coeffs: self.coeffs.iter().map(|(e, v)| (add_exp(*e, k), v.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute `x -> x^k` (`k` may be negative).
    pub fn substitute_power(&self, k: i64) -> Self {
        let mut out = Self::zero(self.var);
        for (e, c) in self.terms() {
            out.add_term(e.checked_mul(k).expect("Laurent exponent overflow"), c.clone());
        }
        out
    }

    /// Split `self = x^s * p` where `p` has lowest exponent 0.
    pub fn split_monomial(&self) -> (i64, LaurentQ) {
        match self.low_degree() {
            None => (0, self.clone()),
            Some(s) => (s, self.shift(-s)),
        }
    }

    fn assert_same_var(&self, other: &Self) {
        assert_eq!(self.var, other.var, "mixing Laurent polynomials in different variables");
    }

    /// Polynomial long division of ordinary polynomials (nonnegative exponents).
    fn poly_div_rem(a: &Self, b: &Self) -> (Self, Self) {
        let var = a.var;
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.leading_coeff().unwrap().clone();
        let mut quot = Self::zero(var);
        let mut rem = a.clone();
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            let c = rem.leading_coeff().unwrap() / &lb;
            let t = Self::monomial(var, c, dr - db);
            rem = &rem - &(&t * b);
            quot = &quot + &t;
        }
        (quot, rem)
    }

    /// Exact division in the Laurent ring, `None` when `other` does not divide `self`.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        self.assert_same_var(other);
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.var));
        }
        let (sa, a0) = self.split_monomial();
        let (sb, b0) = other.split_monomial();
        let (quot, rem) = Self::poly_div_rem(&a0, &b0);
        if rem.is_zero() {
            Some(quot.shift(sa - sb))
        } else {
            None
        }
    }

    /// Normalized gcd: lowest exponent 0 and leading coefficient 1.
    pub fn gcd(&self, other: &Self) -> Self {
        self.assert_same_var(other);
        let mut a = self.split_monomial().1;
        let mut b = other.split_monomial().1;
        while !b.is_zero() {
            let (_, r) = Self::poly_div_rem(&a, &b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lc = a.leading_coeff().unwrap().clone();
        a.scale(&(QRational::one() / lc))
    }

    /// Make lowest exponent 0 and leading coefficient 1; returns the removed unit `c * x^s`.
    pub fn normalize_unit(&self) -> (QRational, i64, LaurentQ) {
        let (s, p) = self.split_monomial();
        match p.leading_coeff() {
            None => (QRational::zero(), 0, p),
            Some(lc) => {
                let lc = lc.clone();
                let p = p.scale(&(QRational::one() / &lc));
                (lc, s, p)
            }
        }
    }

    /// Evaluate at a rational point (must be nonzero when negative exponents occur).
    pub fn eval(&self, x: &QRational) -> QRational {
        let mut acc = QRational::zero();
        for (e, c) in self.terms() {
            let xe = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                QRational::one() / num_traits::pow(x.clone(), (-e) as usize)
            };
            acc += c * xe;
        }
        acc
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Appends `coeff*monomial` to an output string in the canonical text form.
pub(crate) fn push_term(out: &mut String, first: bool, c: &QRational, monomial: &str) {
    let negative = c.is_negative();
    let abs = c.abs();
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    if monomial.is_empty() {
        out.push_str(&abs.to_string());
    } else if abs.is_one() {
        out.push_str(monomial);
    } else {
        out.push_str(&abs.to_string());
        out.push('*');
        out.push_str(monomial);
    }
}

pub(crate) fn power_string(name: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    }
}

impl fmt::Display for LaurentQ {
    /// Ascending exponents, e.g. `q^-1 + 2*q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            push_term(&mut out, i == 0, c, &power_string(self.var.name(), e));
        }
        write!(f, "{out}")
    }
}

impl Serialize for LaurentQ {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a LaurentQ);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.coeffs.len()))?;
                for (e, c) in &self.0.coeffs {
                    map.serialize_entry(&e.to_string(), &c.to_string())?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("var", self.var.name())?;
        map.serialize_entry("coeffs", &Coeffs(self))?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentQ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            var: String,
            coeffs: BTreeMap<String, String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let var = match raw.var.as_str() {
            "q" => Var::Q,
            "v" => Var::V,
            other => return Err(D::Error::custom(format!("unknown variable {other:?}"))),
        };
        let mut p = LaurentQ::zero(var);
        for (e, c) in raw.coeffs {
            let e: i64 = e.parse().map_err(D::Error::custom)?;
            let c = parse_rational(&c).ok_or_else(|| D::Error::custom(format!("bad rational {c:?}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl Add for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        self.assert_same_var(rhs);
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        self.assert_same_var(rhs);
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        self.assert_same_var(rhs);
        let mut out = LaurentQ::zero(self.var);
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(add_exp(ea, eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ { var: self.var, coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(LaurentQ, Add add, Sub sub, Mul mul);

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(terms: &[(i64, i64)]) -> LaurentQ {
        LaurentQ::from_terms(Var::Q, terms.iter().copied())
    }

    #[test]
    fn display_ascending() {
        assert_eq!(q(&[(3, 2), (-1, 1)]).to_string(), "q^-1 + 2*q^3");
        assert_eq!(q(&[(2, -1), (0, 1)]).to_string(), "1 - q^2");
        assert_eq!(q(&[]).to_string(), "0");
        assert_eq!(q(&[(1, -3)]).to_string(), "-3*q");
    }

    #[test]
    fn json_shape() {
        let p = q(&[(3, 2), (-1, 1)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"var":"q","coeffs":{"-1":"1","3":"2"}}"#);
        let back: LaurentQ = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn exact_division_and_gcd() {
        let a = q(&[(2, 1), (0, -1)]); // q^2 - 1
        let b = q(&[(1, 1), (0, 1)]); // q + 1
        assert_eq!(a.exact_div(&b).unwrap(), q(&[(1, 1), (0, -1)]));
        assert!(b.exact_div(&a).is_none());
        let g = a.shift(-5).gcd(&b.shift(3));
        assert_eq!(g, b);
    }

    #[test]
    fn zero_is_additive_identity() {
        let a = q(&[(2, 1), (-3, 4)]);
        assert!((&a - &a).is_zero());
        assert_eq!(&a + &LaurentQ::zero(Var::Q), a);
    }
}
