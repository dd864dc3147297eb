//! Sparse multivariate Laurent polynomials over `Q`.
//!
//! Terms are keyed by exponent vectors and kept in lexicographic order with
//! variable 0 most significant, so the last entry is the leading term.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::{add_exp, forward_owned, power_string, push_term};
use super::rational::QRational;

pub type Exponents = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, QRational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, QRational::one())
    }

    pub fn constant(nvars: usize, c: QRational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Exponents, c: QRational) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { nvars, terms }
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, QRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && {
            let (e, c) = self.terms.iter().next().unwrap();
            c.is_one() && e.iter().all(|&x| x == 0)
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &QRational)> + '_ {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Exponents, c: QRational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn leading_term(&self) -> Option<(&Exponents, &QRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&QRational> {
        self.terms.values().next_back()
    }

    pub fn scale(&self, c: &QRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, exps: &[i64]) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.iter().zip(exps).map(|(a, b)| add_exp(*a, *b)).collect(), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Componentwise minimum exponents (zero vector for the zero polynomial).
    pub fn min_exponents(&self) -> Exponents {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        let mut m = first.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    /// Split `self = x^m * p` with `p` an ordinary polynomial not divisible by any variable.
    pub fn split_monomial(&self) -> (Exponents, MultiPoly) {
        let m = self.min_exponents();
        let neg: Vec<i64> = m.iter().map(|x| -x).collect();
        (m, self.mul_monomial(&neg))
    }

    pub fn degree_in(&self, v: usize) -> i64 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    pub fn depends_on(&self, v: usize) -> bool {
        self.terms.keys().any(|e| e[v] != 0)
    }

    /// Coefficient of `x_v^k`, as a polynomial with `x_v` exponent zeroed.
    pub fn coeff_in(&self, v: usize, k: i64) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[v] == k {
                let mut e2 = e.clone();
                e2[v] = 0;
                out.terms.insert(e2, c.clone());
            }
        }
        out
    }

    /// All nonzero coefficients with respect to `x_v`.
    pub fn coeffs_in(&self, v: usize) -> BTreeMap<i64, MultiPoly> {
        let mut out: BTreeMap<i64, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[v] = 0;
            out.entry(e[v]).or_insert_with(|| Self::zero(self.nvars)).terms.insert(e2, c.clone());
        }
        out
    }

    pub fn map_terms<F: Fn(&Exponents, &QRational) -> (Exponents, QRational)>(&self, nvars: usize, f: F) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let (e2, c2) = f(e, c);
            out.add_term(e2, c2);
        }
        out
    }

    fn poly_exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (ld, lc) = d.leading_term()?;
        let ld = ld.clone();
        let lc_inv = QRational::one() / lc;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((lr, cr)) = rem.leading_term() {
            let mut qe = Vec::with_capacity(self.nvars);
            for (a, b) in lr.iter().zip(&ld) {
                if a < b {
                    return None;
                }
                qe.push(a - b);
            }
            let qc = cr * &lc_inv;
            let t = Self::monomial(qe, qc);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Exact division in the Laurent ring; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        if d.is_monomial() {
            let (e, c) = d.leading_term().unwrap();
            let neg: Vec<i64> = e.iter().map(|x| -x).collect();
            return Some(self.mul_monomial(&neg).scale(&(QRational::one() / c)));
        }
        let (ma, a0) = self.split_monomial();
        let (mb, b0) = d.split_monomial();
        let q0 = a0.poly_exact_div(&b0)?;
        let shift: Vec<i64> = ma.iter().zip(&mb).map(|(a, b)| a - b).collect();
        Some(q0.mul_monomial(&shift))
    }

    /// Shift to lowest exponents zero and divide by the leading coefficient.
    /// Returns `(c, m, p)` with `self = c * x^m * p`.
    pub fn normalize_unit(&self) -> (QRational, Exponents, MultiPoly) {
        let (m, p) = self.split_monomial();
        match p.leading_coeff() {
            None => (QRational::zero(), m, p),
            Some(lc) => {
                let lc = lc.clone();
                let p = p.scale(&(QRational::one() / &lc));
                (lc, m, p)
            }
        }
    }

    pub fn size(&self) -> usize {
        self.terms.len()
    }

    /// Render with the given variable names.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> =
                e.iter().enumerate().filter(|(_, x)| **x != 0).map(|(v, x)| power_string(&names[v], *x)).collect();
            push_term(&mut out, i == 0, c, &mono.join("*"));
        }
        out
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.format_with(&names))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| add_exp(*a, *b)).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

forward_owned!(MultiPoly, Add add, Sub sub, Mul mul);

// ---------------------------------------------------------------------------
// gcd

/// Normalized gcd in the Laurent ring `Q[x_1^{±1}, ...]`.
///
/// The result is an ordinary polynomial with all lowest exponents zero and
/// lexicographic leading coefficient 1 (monomial factors are units).
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let n = a.nvars.max(b.nvars);
    if a.is_zero() {
        return b.normalize_unit().2;
    }
    if b.is_zero() {
        return a.normalize_unit().2;
    }
    let a0 = a.split_monomial().1;
    let b0 = b.split_monomial().1;
    let g = poly_gcd(&a0, &b0);
    if g.is_zero() {
        MultiPoly::one(n)
    } else {
        g.normalize_unit().2
    }
}

fn monic(p: MultiPoly) -> MultiPoly {
    match p.leading_coeff() {
        Some(lc) => {
            let inv = QRational::one() / lc;
            p.scale(&inv)
        }
        None => p,
    }
}

fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let n = a.nvars;
    if a.is_zero() {
        return monic(b.clone());
    }
    if b.is_zero() {
        return monic(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(n);
    }
    if a.num_terms() <= b.num_terms() {
        if b.poly_exact_div(a).is_some() {
            return monic(a.clone());
        }
    } else if a.poly_exact_div(b).is_some() {
        return monic(b.clone());
    }
    let Some(v) = (0..n).find(|&v| a.depends_on(v) || b.depends_on(v)) else {
        return MultiPoly::one(n);
    };
    let da = a.degree_in(v);
    let db = b.degree_in(v);
    if da == 0 {
        return poly_gcd(a, &content_in(b, v));
    }
    if db == 0 {
        return poly_gcd(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.poly_exact_div(&ca).expect("content divides");
    let pb = b.poly_exact_div(&cb).expect("content divides");
    let c = poly_gcd(&ca, &cb);
    let g = subresultant_gcd(pa, pb, v);
    monic(&c * &g)
}

/// gcd of the coefficients with respect to `x_v`.
fn content_in(p: &MultiPoly, v: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(p.nvars);
    for (_, c) in p.coeffs_in(v) {
        g = poly_gcd(&g, &c);
        if g.is_constant() {
            return MultiPoly::one(p.nvars);
        }
    }
    g
}

fn primitive_part_in(p: &MultiPoly, v: usize) -> MultiPoly {
    let c = content_in(p, v);
    p.poly_exact_div(&c).expect("content divides")
}

fn lc_in(p: &MultiPoly, v: usize) -> MultiPoly {
    p.coeff_in(v, p.degree_in(v))
}

fn x_pow(nvars: usize, v: usize, k: i64) -> Exponents {
    let mut e = vec![0; nvars];
    e[v] = k;
    e
}

/// Pseudo-remainder of `a` by `b` with respect to `x_v`.
fn prem(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let db = b.degree_in(v);
    let lcb = lc_in(b, v);
    let mut r = a.clone();
    let mut e = a.degree_in(v) - db + 1;
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lcr = lc_in(&r, v);
        let t = (&lcr * b).mul_monomial(&x_pow(a.nvars, v, dr - db));
        r = &(&r * &lcb) - &t;
        e -= 1;
    }
    if e > 0 {
        r = &r * &lcb.pow(e as u32);
    }
    r
}

/// gcd of two polynomials primitive in `x_v`, by the subresultant PRS.
fn subresultant_gcd(a: MultiPoly, b: MultiPoly, v: usize) -> MultiPoly {
    let n = a.nvars;
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    let mut g = MultiPoly::one(n);
    let mut h = MultiPoly::one(n);
    loop {
        let d = a.degree_in(v) - b.degree_in(v);
        let r = prem(&a, &b, v);
        if r.is_zero() {
            return primitive_part_in(&b, v);
        }
        if r.degree_in(v) == 0 {
            return MultiPoly::one(n);
        }
        let denom = &g * &h.pow(d as u32);
        a = b;
        b = r.poly_exact_div(&denom).expect("subresultant division is exact");
        g = lc_in(&a, v);
        h = match d {
            0 => h,
            1 => g.clone(),
            _ => g.pow(d as u32).poly_exact_div(&h.pow((d - 1) as u32)).expect("subresultant h update is exact"),
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::rat;

    fn p(n: usize, terms: &[(&[i64], i64)]) -> MultiPoly {
        let mut out = MultiPoly::zero(n);
        for (e, c) in terms {
            out.add_term(e.to_vec(), rat(*c));
        }
        out
    }

    #[test]
    fn exact_division_laurent() {
        // (x y^-1 - x^-1 y) = x^-1 y^-1 (x^2 - y^2)
        let a = p(2, &[(&[1, -1], 1), (&[-1, 1], -1)]);
        let b = p(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let q = a.exact_div(&b).unwrap();
        assert_eq!(&q * &b, a);
        assert!(b.exact_div(&a).is_none());
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = p(3, &[(&[1, 0, 0], 1), (&[0, 1, 1], -2), (&[0, 0, 0], 3)]);
        let g = p(3, &[(&[0, 2, 0], 1), (&[1, 0, 1], 1)]);
        let h = p(3, &[(&[2, 0, 0], 1), (&[0, 0, 3], -1), (&[0, 1, 0], 1)]);
        let a = &f * &g;
        let b = &f * &h;
        let d = gcd(&a, &b);
        assert_eq!(d, monic(f.clone()));
        assert!(gcd(&g, &h).is_one());
    }

    #[test]
    fn gcd_ignores_monomial_units() {
        let f = p(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let a = f.mul_monomial(&[-3, 2]);
        let b = (&f * &f).mul_monomial(&[5, -1]);
        assert_eq!(gcd(&a, &b), f);
    }
}
