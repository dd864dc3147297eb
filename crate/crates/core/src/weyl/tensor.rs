//! Tensor powers `V^{(x) n}` of the standard module with exact `Q(q)` coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{q_int, RatFunc, WeightVec};
use crate::verma::Generator;

/// A `Q(q)`-combination of words `v_{w_1} (x) ... (x) v_{w_n}`, letters 1-based.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorVector {
    n: usize,
    rank: usize,
    terms: BTreeMap<Vec<u8>, RatFunc>,
}

impl TensorVector {
    pub fn zero(n: usize, rank: usize) -> Self {
        TensorVector { n, rank, terms: BTreeMap::new() }
    }

    pub fn basis(rank: usize, word: &[u8]) -> Result<Self> {
        if let Some(&bad) = word.iter().find(|&&k| k == 0 || k as usize > rank) {
            return Err(Error::IndexOutOfRange { index: bad as usize, max: rank });
        }
        let mut t = Self::zero(word.len(), rank);
        t.terms.insert(word.to_vec(), RatFunc::one());
        Ok(t)
    }

    /// `v_k` in `V`.
    pub fn v(rank: usize, k: usize) -> Result<Self> {
        Self::basis(rank, &[k as u8])
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &RatFunc)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[u8]) -> RatFunc {
        self.terms.get(word).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, word: Vec<u8>, c: RatFunc) {
        debug_assert_eq!(word.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, self.rank);
        }
        TensorVector { n: self.n, rank: self.rank, terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// `self (x) other`
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n + other.n, self.rank);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }

    /// The common weight of all terms, if homogeneous and nonzero.
    pub fn weight(&self) -> Option<WeightVec> {
        let mut wts = self.terms.keys().map(|w| word_weight(self.rank, w));
        let first = wts.next()?;
        wts.all(|w| w == first).then_some(first)
    }
}

pub fn word_weight(rank: usize, word: &[u8]) -> WeightVec {
    let mut c = vec![0i64; rank];
    for &k in word {
        c[k as usize - 1] += 1;
    }
    WeightVec::new(c)
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let word: Vec<String> = w.iter().map(|k| format!("v{k}")).collect();
            let word = word.join("(x)");
            let (neg, body) = if c.is_one() {
                (false, word)
            } else if (-c).is_one() {
                (true, word)
            } else if c.as_laurent().is_some_and(|p| p.num_terms() == 1) {
                let s = c.to_string();
                match s.strip_prefix('-') {
                    Some(rest) => (true, format!("{rest}*{word}")),
                    None => (false, format!("{s}*{word}")),
                }
            } else {
                (false, format!("({c})*{word}"))
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    word: &'a [u8],
    coeff: &'a RatFunc,
}

impl Serialize for TensorVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self.terms.iter().map(|(w, c)| TermJson { word: w, coeff: c }).collect();
        v.serialize(s)
    }
}

/// `q`-exponent of `L_i L_{i+1}^{-1}` on `v_k`.
fn k_exp(i: usize, k: u8) -> i64 {
    let k = k as usize;
    (k == i) as i64 - (k == i + 1) as i64
}

fn l_exp(g: Generator, k: u8) -> i64 {
    match g {
        Generator::L(i) => (k as usize == i) as i64,
        Generator::LInv(i) => -((k as usize == i) as i64),
        _ => unreachable!(),
    }
}

/// The generator on a single letter: `X_i v_{i+1} = v_i`, `Y_i v_i = v_{i+1}`.
fn single(g: Generator, k: u8) -> Option<(u8, i64)> {
    match g {
        Generator::X(i) => (k as usize == i + 1).then_some((i as u8, 0)),
        Generator::Y(i) => (k as usize == i).then_some((i as u8 + 1, 0)),
        Generator::L(_) | Generator::LInv(_) => Some((k, l_exp(g, k))),
    }
}

/// Action through the left-nested iterated coproduct.
///
/// `Y_i` at position `t` carries `L_i^{-1} L_{i+1}` on positions before `t`;
/// `X_i` at position `t` carries `L_i L_{i+1}^{-1}` on positions after `t`.
pub fn tensor_act(g: Generator, x: &TensorVector) -> Result<TensorVector> {
    g.check(x.rank)?;
    let mut out = TensorVector::zero(x.n, x.rank);
    for (w, c) in &x.terms {
        match g {
            Generator::L(_) | Generator::LInv(_) => {
                let e: i64 = w.iter().map(|&k| l_exp(g, k)).sum();
                out.add_term(w.clone(), c * &RatFunc::q_pow(e));
            }
            Generator::X(i) | Generator::Y(i) => {
                for t in 0..w.len() {
                    let Some((k, _)) = single(g, w[t]) else { continue };
                    let e: i64 = match g {
                        Generator::Y(_) => -w[..t].iter().map(|&l| k_exp(i, l)).sum::<i64>(),
                        _ => w[t + 1..].iter().map(|&l| k_exp(i, l)).sum(),
                    };
                    let mut nw = w.clone();
                    nw[t] = k;
                    out.add_term(nw, c * &RatFunc::q_pow(e));
                }
            }
        }
    }
    Ok(out)
}

/// Apply `g_1 g_2 ... g_m` (the last acts first).
pub fn tensor_act_all(gs: &[Generator], x: &TensorVector) -> Result<TensorVector> {
    let mut out = x.clone();
    for &g in gs.iter().rev() {
        out = tensor_act(g, &out)?;
    }
    Ok(out)
}

fn right_nested(g: Generator, w: &[u8]) -> Vec<(Vec<u8>, i64)> {
    let (&a, rest) = w.split_first().expect("nonempty word");
    if rest.is_empty() {
        return single(g, a).map(|(k, e)| (vec![k], e)).into_iter().collect();
    }
    let prepend = |k: u8, tail: &[u8]| {
        let mut v = vec![k];
        v.extend_from_slice(tail);
        v
    };
    let mut out = Vec::new();
    match g {
        // Delta(Y) = Y (x) 1 + L_i^{-1} L_{i+1} (x) Y
        Generator::Y(i) => {
            if let Some((k, _)) = single(g, a) {
                out.push((prepend(k, rest), 0));
            }
            for (tail, e) in right_nested(g, rest) {
                out.push((prepend(a, &tail), e - k_exp(i, a)));
            }
        }
        // Delta(X) = X (x) L_i L_{i+1}^{-1} + 1 (x) X
        Generator::X(i) => {
            if let Some((k, _)) = single(g, a) {
                out.push((prepend(k, rest), rest.iter().map(|&l| k_exp(i, l)).sum()));
            }
            for (tail, e) in right_nested(g, rest) {
                out.push((prepend(a, &tail), e));
            }
        }
        Generator::L(_) | Generator::LInv(_) => {
            for (tail, e) in right_nested(g, rest) {
                out.push((prepend(a, &tail), e + l_exp(g, a)));
            }
        }
    }
    out
}

/// Action through the right-nested coproduct `(id (x) Delta^{(n-1)}) Delta`.
pub fn tensor_act_right(g: Generator, x: &TensorVector) -> Result<TensorVector> {
    g.check(x.rank)?;
    let mut out = TensorVector::zero(x.n, x.rank);
    for (w, c) in &x.terms {
        if w.is_empty() {
            continue;
        }
        for (nw, e) in right_nested(g, w) {
            out.add_term(nw, c * &RatFunc::q_pow(e));
        }
    }
    Ok(out)
}

/// `(v_k, v_k) = q^{1-k}`, from `(v_{k+1}, v_{k+1}) = (Y_k v_k, v_{k+1}) = (v_k, L_k^{-1} L_{k+1} X_k v_{k+1})`.
pub fn standard_norm(k: u8) -> RatFunc {
    RatFunc::q_pow(1 - k as i64)
}

/// The product form on `V^{(x) n}`.
pub fn tensor_form(x: &TensorVector, y: &TensorVector) -> Result<RatFunc> {
    if x.n != y.n || x.rank != y.rank {
        return Err(Error::Mismatch);
    }
    let (small, big) = if x.terms.len() <= y.terms.len() { (x, y) } else { (y, x) };
    let mut acc = RatFunc::zero();
    for (w, c) in &small.terms {
        if let Some(d) = big.terms.get(w) {
            let e: i64 = w.iter().map(|&k| 1 - k as i64).sum();
            acc = &acc + &(&(c * d) * &RatFunc::q_pow(e));
        }
    }
    Ok(acc)
}

/// All words of length `n` over `1..=rank`.
pub fn all_words(n: usize, rank: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=rank as u8).map(move |k| {
                    let mut v = w.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

/// Check the defining relations of `U_q(gl_N)` on every basis word of `V^{(x) n}`;
/// returns the number of identities checked.
pub fn check_tensor_relations(n: usize, rank: usize) -> Result<usize> {
    let bracket2 = RatFunc::from_laurent(q_int(2));
    let qq = &RatFunc::q_pow(1) - &RatFunc::q_pow(-1);
    let mut checked = 0;
    let fail = |what: String| Err(Error::CheckFailed(what));
    for w in all_words(n, rank) {
        let x = TensorVector::basis(rank, &w)?;
        for i in 1..rank {
            for j in 1..rank {
                // X_i Y_j - Y_j X_i = delta_ij (K_i - K_i^{-1}) / (q - q^{-1})
                let lhs = tensor_act_all(&[Generator::X(i), Generator::Y(j)], &x)?
                    .sub(&tensor_act_all(&[Generator::Y(j), Generator::X(i)], &x)?);
                let rhs = if i == j {
                    let k = tensor_act_all(&[Generator::L(i), Generator::LInv(i + 1)], &x)?;
                    let kinv = tensor_act_all(&[Generator::LInv(i), Generator::L(i + 1)], &x)?;
                    k.sub(&kinv).scale(&qq.inv()?)
                } else {
                    TensorVector::zero(n, rank)
                };
                if lhs != rhs {
                    return fail(format!("[X{i},Y{j}] on {w:?}"));
                }
                checked += 1;
                for (a, b) in [(Generator::X(i), Generator::X(j)), (Generator::Y(i), Generator::Y(j))] {
                    let d = i.abs_diff(j);
                    if d == 1 {
                        let t1 = tensor_act_all(&[a, a, b], &x)?;
                        let t2 = tensor_act_all(&[a, b, a], &x)?.scale(&bracket2);
                        let t3 = tensor_act_all(&[b, a, a], &x)?;
                        if !t1.sub(&t2).add(&t3).is_zero() {
                            return fail(format!("Serre ({a:?},{b:?}) on {w:?}"));
                        }
                        checked += 1;
                    } else if d > 1 {
                        if tensor_act_all(&[a, b], &x)? != tensor_act_all(&[b, a], &x)? {
                            return fail(format!("commutation ({a:?},{b:?}) on {w:?}"));
                        }
                        checked += 1;
                    }
                }
            }
        }
        // L_j X_i L_j^{-1} = q^{(eps_j, alpha_i)} X_i and the Y counterpart
        for j in 1..=rank {
            for i in 1..rank {
                let e = (j == i) as i64 - (j == i + 1) as i64;
                for (g, s) in [(Generator::X(i), 1), (Generator::Y(i), -1)] {
                    let lhs = tensor_act_all(&[Generator::L(j), g, Generator::LInv(j)], &x)?;
                    let rhs = tensor_act(g, &x)?.scale(&RatFunc::q_pow(s * e));
                    if lhs != rhs {
                        return fail(format!("L{j} conjugation of {g:?} on {w:?}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}
