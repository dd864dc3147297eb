//! Universal Verma modules over `K = Q(q, z_1, ..., z_N)`.
//!
//! An element of the shifted module `^mu M~` is a `K`-combination of
//! lowering words `Y_{i_1} ... Y_{i_m} v_{mu+}`. Words are never rewritten
//! into a PBW basis; linear dependence is detected through the Shapovalov form.

pub mod closed;
pub mod gram;
pub mod jantzen;
pub mod pairing;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{MultiPoly, MultiRat, QRational, WeightVec};

pub use closed::{
    ev_jantzen_closed, eval_jantzen_s_closed, jantzen_s_closed, jantzen_s_closed_factors, jantzen_valuation,
    shapovalov_det_closed,
};
pub use gram::{gram_matrix, gram_matrix_on, kostant_p, words_of_multidegree, GramMatrix};
pub use jantzen::{jantzen_s_engine, lemma62_check, JantzenEngine, Lemma62Report};
pub use pairing::{pair_words, shapovalov_pair, Pairing};

/// `Y_{i_1} Y_{i_2} ... Y_{i_m}`, letters 1-based; `Y_{i_m}` acts first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YWord(pub Vec<usize>);

impl YWord {
    pub fn empty() -> Self {
        YWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Multidegree in simple-root coordinates (length `rank - 1`).
    pub fn multidegree(&self, rank: usize) -> Vec<u32> {
        let mut out = vec![0; rank.saturating_sub(1)];
        for &i in &self.0 {
            out[i - 1] += 1;
        }
        out
    }

    /// `nu = sum alpha_{i_t}` as a weight.
    pub fn nu(&self, rank: usize) -> WeightVec {
        root_weight(rank, &self.multidegree(rank))
    }

    pub fn prepend(&self, i: usize) -> Self {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(i);
        v.extend_from_slice(&self.0);
        YWord(v)
    }
}

impl fmt::Display for YWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self.0.iter().map(|i| format!("Y{i}")).collect();
        write!(f, "{}", s.join(""))
    }
}

impl fmt::Debug for YWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `sum c_i alpha_i` as a weight.
pub fn root_weight(rank: usize, coords: &[u32]) -> WeightVec {
    let mut w = vec![0i64; rank];
    for (i, &c) in coords.iter().enumerate() {
        w[i] += c as i64;
        w[i + 1] -= c as i64;
    }
    WeightVec::new(w)
}

/// A generator of `U_q(gl_N)`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    X(usize),
    Y(usize),
    L(usize),
    LInv(usize),
}

impl Generator {
    pub fn check(self, rank: usize) -> Result<()> {
        let (i, max) = match self {
            Generator::X(i) | Generator::Y(i) => (i, rank - 1),
            Generator::L(i) | Generator::LInv(i) => (i, rank),
        };
        if i == 0 || i > max {
            Err(Error::IndexOutOfRange { index: i, max })
        } else {
            Ok(())
        }
    }
}

/// `L_i` eigenvalue `q^{(wt, eps_i)} z_i` raised to `sign`.
pub(crate) fn l_eigen(rank: usize, wt: &WeightVec, i: usize, sign: i64) -> MultiRat {
    let mut z = vec![0; rank];
    z[i - 1] = sign;
    MultiRat::monomial(&z, sign * wt[i - 1], QRational::from_integer(1.into()))
}

/// `q^a z_i z_{i+1}^{-1} - q^{-a} z_i^{-1} z_{i+1}` with `a = wt_i - wt_{i+1}`,
/// the Cartan factor times `q - q^{-1}`.
pub(crate) fn cartan_scaled(rank: usize, wt: &WeightVec, i: usize) -> MultiPoly {
    let a = wt[i - 1] - wt[i];
    let mut plus = vec![0; rank + 1];
    plus[i - 1] = 1;
    plus[i] = -1;
    plus[rank] = a;
    let minus: Vec<i64> = plus.iter().map(|x| -x).collect();
    let mut p = MultiPoly::monomial(plus, QRational::from_integer(1.into()));
    p.add_term(minus, QRational::from_integer((-1).into()));
    p
}

/// `q - q^{-1}` in `K`.
pub(crate) fn q_minus_qinv(rank: usize) -> MultiRat {
    &MultiRat::q_pow(rank, 1) - &MultiRat::q_pow(rank, -1)
}

/// A `K`-linear combination of words applied to `v_{mu+}`.
#[derive(Clone, PartialEq, Eq)]
pub struct VermaElement {
    rank: usize,
    shift: WeightVec,
    terms: BTreeMap<YWord, MultiRat>,
}

impl VermaElement {
    pub fn zero(rank: usize, shift: WeightVec) -> Self {
        assert_eq!(shift.len(), rank, "shift rank mismatch");
        VermaElement { rank, shift, terms: BTreeMap::new() }
    }

    /// `v_{mu+}`
    pub fn highest(rank: usize, shift: WeightVec) -> Self {
        Self::word(rank, shift, YWord::empty())
    }

    pub fn word(rank: usize, shift: WeightVec, w: YWord) -> Self {
        let mut e = Self::zero(rank, shift);
        e.add_term(w, MultiRat::one(rank));
        e
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shift(&self) -> &WeightVec {
        &self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&YWord, &MultiRat)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &YWord) -> MultiRat {
        self.terms.get(w).cloned().unwrap_or_else(|| MultiRat::zero(self.rank))
    }

    pub fn add_term(&mut self, w: YWord, c: MultiRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                *old = &*old + &c;
                if old.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
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

    pub fn scale(&self, c: &MultiRat) -> Self {
        let mut out = Self::zero(self.rank, self.shift.clone());
        if c.is_zero() {
            return out;
        }
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// Weight `mu - nu(word)` of a word in this module.
    pub fn word_weight(&self, w: &YWord) -> WeightVec {
        &self.shift - &w.nu(self.rank)
    }

    /// Apply a generator.
    pub fn act(&self, g: Generator) -> Result<Self> {
        g.check(self.rank)?;
        let n = self.rank;
        let mut out = Self::zero(n, self.shift.clone());
        match g {
            Generator::Y(i) => {
                for (w, c) in &self.terms {
                    out.add_term(w.prepend(i), c.clone());
                }
            }
            Generator::L(i) | Generator::LInv(i) => {
                let sign = if matches!(g, Generator::L(_)) { 1 } else { -1 };
                for (w, c) in &self.terms {
                    out.add_term(w.clone(), c * &l_eigen(n, &self.word_weight(w), i, sign));
                }
            }
            Generator::X(i) => {
                let denom = q_minus_qinv(n);
                for (w, c) in &self.terms {
                    for (t, &letter) in w.0.iter().enumerate() {
                        if letter != i {
                            continue;
                        }
                        let suffix = YWord(w.0[t + 1..].to_vec());
                        let wt = &self.shift - &suffix.nu(n);
                        let cart = &MultiRat::from_poly(cartan_scaled(n, &wt, i)) / &denom;
                        let mut rest = w.0.clone();
                        rest.remove(t);
                        out.add_term(YWord(rest), c * &cart);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Apply a word `Y_{i_1} ... Y_{i_m}` (rightmost first).
    pub fn act_word(&self, w: &YWord) -> Self {
        let mut out = self.clone();
        for &i in w.0.iter().rev() {
            out = out.act(Generator::Y(i)).expect("word letters in range");
        }
        out
    }
}

impl fmt::Display for VermaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})*{w}*v")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for VermaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_on_single_letter() {
        let v = VermaElement::highest(2, WeightVec::zero(2));
        let y = v.act(Generator::Y(1)).unwrap();
        let x = y.act(Generator::X(1)).unwrap();
        let z1 = MultiRat::z(2, 1);
        let z2 = MultiRat::z(2, 2);
        let expected = &(&(&z1 / &z2) - &(&z2 / &z1)) / &q_minus_qinv(2);
        assert_eq!(x.coeff(&YWord::empty()), expected);
        let x2 = VermaElement::word(3, WeightVec::zero(3), YWord(vec![1])).act(Generator::X(2)).unwrap();
        assert!(x2.is_zero());
    }

    #[test]
    fn l_on_shifted_vector() {
        let v = VermaElement::highest(2, WeightVec::unit(2, 1));
        let l = v.act(Generator::L(1)).unwrap();
        assert_eq!(l.coeff(&YWord::empty()), &MultiRat::q_pow(2, 1) * &MultiRat::z(2, 1));
        assert!(v.act(Generator::X(2)).is_err());
    }
}
