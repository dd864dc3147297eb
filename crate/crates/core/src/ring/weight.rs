//! Integral weights of `gl_N` in the basis `eps_1, ..., eps_N`.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct WeightVec(Vec<i64>);

impl WeightVec {
    pub fn new(coords: Vec<i64>) -> Self {
        WeightVec(coords)
    }

    pub fn zero(rank: usize) -> Self {
        WeightVec(vec![0; rank])
    }

    /// `eps_i`, 1-based.
    pub fn unit(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank, "eps index out of range");
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        WeightVec(v)
    }

    /// Simple root `alpha_i = eps_i - eps_{i+1}`.
    pub fn alpha(rank: usize, i: usize) -> Self {
        &Self::unit(rank, i) - &Self::unit(rank, i + 1)
    }

    /// `lambda` padded with zeros to length `rank`.
    pub fn from_parts(parts: &[u32], rank: usize) -> Self {
        assert!(parts.len() <= rank, "too many parts for rank");
        let mut v = vec![0; rank];
        for (i, p) in parts.iter().enumerate() {
            v[i] = *p as i64;
        }
        WeightVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dot(&self, other: &Self) -> i64 {
        assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        WeightVec(self.0.iter().map(|x| x * k).collect())
    }

    /// Coordinates of `-self` in the simple roots when `self` lies in the root
    /// lattice: `self = -sum c_i alpha_i`. `None` if the coordinate sum is not zero.
    pub fn neg_root_coords(&self) -> Option<Vec<i64>> {
        if self.0.iter().sum::<i64>() != 0 {
            return None;
        }
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        let mut acc = 0;
        for x in &self.0[..self.len().saturating_sub(1)] {
            acc += x;
            out.push(-acc);
        }
        Some(out)
    }
}

impl Index<usize> for WeightVec {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &WeightVec {
    type Output = WeightVec;
    fn add(self, rhs: &WeightVec) -> WeightVec {
        assert_eq!(self.len(), rhs.len(), "weight rank mismatch");
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVec {
    type Output = WeightVec;
    fn sub(self, rhs: &WeightVec) -> WeightVec {
        assert_eq!(self.len(), rhs.len(), "weight rank mismatch");
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        WeightVec(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_coordinates() {
        let a = &WeightVec::alpha(3, 1) + &WeightVec::alpha(3, 2);
        assert_eq!((-&a).neg_root_coords(), Some(vec![1, 1]));
        assert_eq!(WeightVec::unit(3, 1).neg_root_coords(), None);
    }
}
