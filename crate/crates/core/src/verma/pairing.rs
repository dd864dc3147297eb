//! The universal Shapovalov form, by peeling `Y`'s off the right argument.
//!
//! `(u, Y_j w v) = (L_j^{-1} L_{j+1} X_j u, w v)` and `(c v_{mu+}, v_{mu+}) = c`.
//! Word pairings are computed with every Cartan factor multiplied by
//! `q - q^{-1}`, so they stay polynomial; the true value of a pairing of
//! words of length `m` is the scaled value divided by `(q - q^{-1})^m`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use super::{cartan_scaled, q_minus_qinv, VermaElement, YWord};
use crate::error::{Error, Result};
use crate::ring::{MultiPoly, MultiRat, WeightVec};

/// One application of `L_j^{-1} L_{j+1} X_j`, scaled by `q - q^{-1}`.
fn omega_y(rank: usize, shift: &WeightVec, u: &BTreeMap<YWord, MultiPoly>, j: usize) -> BTreeMap<YWord, MultiPoly> {
    let mut out: BTreeMap<YWord, MultiPoly> = BTreeMap::new();
    for (w, c) in u {
        for (t, &letter) in w.0.iter().enumerate() {
            if letter != j {
                continue;
            }
            let suffix = YWord(w.0[t + 1..].to_vec());
            let wt = shift - &suffix.nu(rank);
            let mut rest = w.0.clone();
            rest.remove(t);
            let term = c * &cartan_scaled(rank, &wt, j);
            let entry = out.entry(YWord(rest)).or_insert_with(|| MultiPoly::zero(rank + 1));
            *entry = &*entry + &term;
        }
    }
    out.retain(|_, c| !c.is_zero());
    // all surviving words share one weight, so the L-factor is uniform
    if let Some(w) = out.keys().next() {
        let wt = shift - &w.nu(rank);
        let mut mono = vec![0; rank + 1];
        mono[j - 1] = -1;
        mono[j] = 1;
        mono[rank] = -(wt[j - 1] - wt[j]);
        for c in out.values_mut() {
            *c = c.mul_monomial(&mono);
        }
    }
    out
}

/// Scaled pairing of two words in `^mu M~`.
pub fn pair_words_scaled(rank: usize, shift: &WeightVec, a: &YWord, b: &YWord) -> MultiPoly {
    if a.len() != b.len() || a.multidegree(rank) != b.multidegree(rank) {
        return MultiPoly::zero(rank + 1);
    }
    let mut u = BTreeMap::new();
    u.insert(a.clone(), MultiPoly::one(rank + 1));
    for &j in &b.0 {
        u = omega_y(rank, shift, &u, j);
        if u.is_empty() {
            return MultiPoly::zero(rank + 1);
        }
    }
    u.remove(&YWord::empty()).unwrap_or_else(|| MultiPoly::zero(rank + 1))
}

/// `(a v_{mu+}, b v_{mu+})` for words `a`, `b`.
pub fn pair_words(rank: usize, shift: &WeightVec, a: &YWord, b: &YWord) -> MultiRat {
    let p = pair_words_scaled(rank, shift, a, b);
    if p.is_zero() {
        return MultiRat::zero(rank);
    }
    &MultiRat::from_poly(p) / &q_minus_qinv(rank).pow(a.len() as i32)
}

/// A memoizing word-pairing oracle for one shifted module.
pub struct Pairing {
    rank: usize,
    shift: WeightVec,
    cache: Mutex<HashMap<(YWord, YWord), MultiRat>>,
}

impl Pairing {
    pub fn new(rank: usize, shift: WeightVec) -> Self {
        Pairing { rank, shift, cache: Mutex::new(HashMap::new()) }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shift(&self) -> &WeightVec {
        &self.shift
    }

    pub fn words(&self, a: &YWord, b: &YWord) -> MultiRat {
        let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = pair_words(self.rank, &self.shift, a, b);
        self.cache.lock().unwrap().insert(key, v.clone());
        v
    }

    pub fn elements(&self, a: &VermaElement, b: &VermaElement) -> Result<MultiRat> {
        if a.rank() != self.rank || b.rank() != self.rank || a.shift() != &self.shift || b.shift() != &self.shift {
            return Err(Error::Mismatch);
        }
        let mut acc = MultiRat::zero(self.rank);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                if wa.len() != wb.len() {
                    continue;
                }
                let p = self.words(wa, wb);
                if !p.is_zero() {
                    acc = &acc + &(&(ca * cb) * &p);
                }
            }
        }
        Ok(acc)
    }
}

/// The universal Shapovalov form on `^mu M~`, bilinear over `K`.
pub fn shapovalov_pair(a: &VermaElement, b: &VermaElement) -> Result<MultiRat> {
    if a.rank() != b.rank() || a.shift() != b.shift() {
        return Err(Error::Mismatch);
    }
    Pairing::new(a.rank(), a.shift().clone()).elements(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[usize]) -> YWord {
        YWord(v.to_vec())
    }

    #[test]
    fn rank_two_examples() {
        let mu = WeightVec::zero(2);
        let v = VermaElement::highest(2, mu.clone());
        assert!(shapovalov_pair(&v, &v).unwrap().is_one());
        let y = VermaElement::word(2, mu.clone(), w(&[1]));
        assert!(shapovalov_pair(&y, &v).unwrap().is_zero());
        let z1 = MultiRat::z(2, 1);
        let z2 = MultiRat::z(2, 2);
        let expected = &(&(&z2 / &z1) * &(&(&z1 / &z2) - &(&z2 / &z1))) / &q_minus_qinv(2);
        assert_eq!(shapovalov_pair(&y, &y).unwrap(), expected);
    }

    #[test]
    fn symmetric_on_rank_three_words() {
        let mu = WeightVec::zero(3);
        let words = [w(&[1, 2]), w(&[2, 1])];
        for a in &words {
            for b in &words {
                assert_eq!(pair_words(3, &mu, a, b), pair_words(3, &mu, b, a));
            }
        }
    }
}
