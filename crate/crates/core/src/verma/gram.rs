//! Gram matrices of the Shapovalov form on weight spaces and the Kostant partition function.

use std::collections::HashMap;

use rayon::prelude::*;

use super::pairing::pair_words_scaled;
use super::{q_minus_qinv, YWord};
use crate::error::{Error, Result};
use crate::linalg;
use crate::ring::{MultiPoly, MultiRat, WeightVec};

/// Positive roots `eps_i - eps_j`, `i < j`, in simple-root coordinates.
fn positive_roots(rank: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            let mut c = vec![0; rank - 1];
            for x in c.iter_mut().take(j).skip(i) {
                *x = 1;
            }
            out.push(c);
        }
    }
    out
}

fn count_multisets(
    roots: &[Vec<u32>],
    idx: usize,
    rem: &mut Vec<u32>,
    memo: &mut HashMap<(usize, Vec<u32>), u64>,
) -> u64 {
    if rem.iter().all(|&x| x == 0) {
        return 1;
    }
    if idx == roots.len() {
        return 0;
    }
    if let Some(&v) = memo.get(&(idx, rem.clone())) {
        return v;
    }
    let root = &roots[idx];
    let mut total = count_multisets(roots, idx + 1, rem, memo);
    let mut taken = 0;
    while rem.iter().zip(root).all(|(r, c)| r >= c) {
        for (r, c) in rem.iter_mut().zip(root) {
            *r -= c;
        }
        taken += 1;
        total += count_multisets(roots, idx + 1, rem, memo);
    }
    for (r, c) in rem.iter_mut().zip(root) {
        *r += c * taken;
    }
    memo.insert((idx, rem.clone()), total);
    total
}

/// `p(gamma)`: number of multisets of positive roots summing to `-gamma`.
pub fn kostant_p(gamma: &WeightVec) -> u64 {
    let Some(coords) = gamma.neg_root_coords() else { return 0 };
    if coords.iter().any(|&c| c < 0) {
        return 0;
    }
    let mut rem: Vec<u32> = coords.iter().map(|&c| c as u32).collect();
    count_multisets(&positive_roots(gamma.len()), 0, &mut rem, &mut HashMap::new())
}

/// Kostant count for a multidegree `nu` in simple-root coordinates: `p(-nu)`.
pub fn kostant_p_nu(nu: &[u32]) -> u64 {
    let rank = nu.len() + 1;
    let mut rem = nu.to_vec();
    count_multisets(&positive_roots(rank), 0, &mut rem, &mut HashMap::new())
}

/// All distinct words of multidegree `nu`, lexicographically ordered.
pub fn words_of_multidegree(nu: &[u32]) -> Vec<YWord> {
    fn rec(counts: &mut Vec<u32>, cur: &mut Vec<usize>, out: &mut Vec<YWord>) {
        if counts.iter().all(|&c| c == 0) {
            out.push(YWord(cur.clone()));
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                cur.push(i + 1);
                rec(counts, cur, out);
                cur.pop();
                counts[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut nu.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// The Shapovalov form on the `mu - nu` weight space of `^mu M~`.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub rank: usize,
    pub shift: WeightVec,
    pub nu: Vec<u32>,
    pub words: Vec<YWord>,
    /// Entries times `(q - q^{-1})^{|nu|}`.
    pub scaled: Vec<Vec<MultiPoly>>,
    /// Indices into `words` of a maximal independent sublist.
    pub independent: Vec<usize>,
    /// Determinant on the independent sublist.
    pub det: MultiRat,
}

impl GramMatrix {
    pub fn height(&self) -> usize {
        self.nu.iter().sum::<u32>() as usize
    }

    pub fn entry(&self, i: usize, j: usize) -> MultiRat {
        let p = &self.scaled[i][j];
        if p.is_zero() {
            return MultiRat::zero(self.rank);
        }
        &MultiRat::from_poly(p.clone()) / &q_minus_qinv(self.rank).pow(self.height() as i32)
    }

    pub fn independent_words(&self) -> Vec<YWord> {
        self.independent.iter().map(|&i| self.words[i].clone()).collect()
    }

    /// Determinant on the independent sublist, scaled by `(q - q^{-1})^{|nu| |S|}`.
    pub fn det_scaled(&self) -> MultiPoly {
        if self.independent.is_empty() {
            return MultiPoly::one(self.rank + 1);
        }
        let sub: Vec<Vec<MultiPoly>> = self
            .independent
            .iter()
            .map(|&i| self.independent.iter().map(|&j| self.scaled[i][j].clone()).collect())
            .collect();
        linalg::det(sub)
    }
}

fn scaled_matrix(rank: usize, shift: &WeightVec, words: &[YWord]) -> Vec<Vec<MultiPoly>> {
    let n = words.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let vals: Vec<MultiPoly> =
        pairs.par_iter().map(|&(i, j)| pair_words_scaled(rank, shift, &words[i], &words[j])).collect();
    let mut m = vec![vec![MultiPoly::zero(rank + 1); n]; n];
    for ((i, j), v) in pairs.into_iter().zip(vals) {
        m[j][i] = v.clone();
        m[i][j] = v;
    }
    m
}

/// Gram matrix on a prescribed word list (all of multidegree `nu`).
pub fn gram_matrix_on(
    rank: usize,
    shift: &WeightVec,
    nu: &[u32],
    words: Vec<YWord>,
    independent: Option<Vec<usize>>,
) -> Result<GramMatrix> {
    if shift.len() != rank || nu.len() + 1 != rank {
        return Err(Error::Mismatch);
    }
    let scaled = scaled_matrix(rank, shift, &words);
    let independent = match independent {
        Some(s) => s,
        None => {
            if words.is_empty() {
                Vec::new()
            } else {
                linalg::reduce(scaled.clone()).pivots
            }
        }
    };
    let expected = kostant_p_nu(nu) as usize;
    if independent.len() != expected {
        return Err(Error::Engine(format!(
            "independent sublist has {} words, partition function gives {expected}",
            independent.len()
        )));
    }
    let mut g = GramMatrix {
        rank,
        shift: shift.clone(),
        nu: nu.to_vec(),
        words,
        scaled,
        independent,
        det: MultiRat::one(rank),
    };
    let d = g.det_scaled();
    let h = (g.height() * g.independent.len()) as i32;
    g.det = &MultiRat::from_poly(d) / &q_minus_qinv(rank).pow(h);
    Ok(g)
}

/// Gram matrix of all words of multidegree `nu` in `^mu M~`.
pub fn gram_matrix(rank: usize, shift: &WeightVec, nu: &[u32]) -> Result<GramMatrix> {
    gram_matrix_on(rank, shift, nu, words_of_multidegree(nu), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verma::pairing::pair_words;

    #[test]
    fn kostant_values() {
        assert_eq!(kostant_p(&WeightVec::zero(3)), 1);
        let a = &WeightVec::alpha(3, 1) + &WeightVec::alpha(3, 2);
        assert_eq!(kostant_p(&(-&a)), 2);
        assert_eq!(kostant_p(&WeightVec::alpha(2, 1)), 0);
        assert_eq!(kostant_p_nu(&[2, 1]), 2);
        assert_eq!(kostant_p_nu(&[1, 2, 1]), kostant_p(&(-&crate::verma::root_weight(4, &[1, 2, 1]))));
    }

    #[test]
    fn word_enumeration() {
        let w = words_of_multidegree(&[1, 1]);
        assert_eq!(w, vec![YWord(vec![1, 2]), YWord(vec![2, 1])]);
        assert_eq!(words_of_multidegree(&[2, 1]).len(), 3);
    }

    #[test]
    fn small_gram_matrices() {
        let g = gram_matrix(2, &WeightVec::zero(2), &[1]).unwrap();
        assert_eq!(g.det, pair_words(2, &WeightVec::zero(2), &YWord(vec![1]), &YWord(vec![1])));
        let g = gram_matrix(3, &WeightVec::zero(3), &[1, 1]).unwrap();
        assert_eq!(g.independent.len(), 2);
    }
}
