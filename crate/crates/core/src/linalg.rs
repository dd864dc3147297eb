//! Fraction-free elimination over polynomial domains.
//!
//! Matrices over a field of fractions are first cleared of denominators row by
//! row; elimination then runs in the polynomial ring with exact divisions by
//! the previous pivot, so every intermediate entry is a minor of the input.

use crate::ring::multipoly::{gcd as mgcd, MultiPoly};
use crate::ring::{LaurentQ, MultiRat, RatFunc};

/// An integral domain with exact division.
pub trait Domain: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division known to be exact.
    fn exact_div(&self, other: &Self) -> Self;
    /// Pivoting heuristic: smaller is cheaper.
    fn size(&self) -> usize;
}

impl Domain for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.nvars())
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        MultiPoly::exact_div(self, other).expect("fraction-free division inexact")
    }
    fn size(&self) -> usize {
        self.num_terms()
    }
}

impl Domain for LaurentQ {
    fn zero_like(&self) -> Self {
        LaurentQ::zero(self.var())
    }
    fn one_like(&self) -> Self {
        LaurentQ::one(self.var())
    }
    fn is_zero(&self) -> bool {
        LaurentQ::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        LaurentQ::exact_div(self, other).expect("fraction-free division inexact")
    }
    fn size(&self) -> usize {
        match (self.low_degree(), self.degree()) {
            (Some(a), Some(b)) => (b - a) as usize + 1,
            _ => 0,
        }
    }
}

/// Result of fraction-free Gauss-Jordan elimination.
///
/// Row `i < rank` has the common pivot value `pivot` in column `pivots[i]`
/// and zeros in every other pivot column.
#[derive(Clone, Debug)]
pub struct Reduced<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
    /// Original row index of each reduced row.
    pub row_order: Vec<usize>,
    pub pivot: Option<T>,
    /// Parity of row swaps: `true` for odd.
    pub odd_swaps: bool,
}

impl<T: Domain> Reduced<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn reduce<T: Domain>(mut m: Vec<Vec<T>>) -> Reduced<T> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row_order: Vec<usize> = (0..nrows).collect();
    let mut odd_swaps = false;
    let mut prev: Option<T> = None;
    let mut k = 0;
    for c in 0..ncols {
        if k == nrows {
            break;
        }
        let best = (k..nrows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].size());
        let Some(p) = best else { continue };
        if p != k {
            m.swap(p, k);
            row_order.swap(p, k);
            odd_swaps = !odd_swaps;
        }
        let piv = m[k][c].clone();
        let pivot_row = m[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[c].clone();
            for j in 0..ncols {
                if j == c {
                    continue;
                }
                let mut v = piv.mul(&row[j]);
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v = v.sub(&factor.mul(&pivot_row[j]));
                }
                if let Some(d) = &prev {
                    if !v.is_zero() {
                        v = v.exact_div(d);
                    }
                }
                row[j] = v;
            }
            row[c] = piv.zero_like();
        }
        pivots.push(c);
        prev = Some(piv);
        k += 1;
    }
    Reduced { rows: m, pivots, row_order, pivot: prev, odd_swaps }
}

pub fn rank<T: Domain>(m: Vec<Vec<T>>) -> usize {
    reduce(m).rank()
}

/// Determinant of a square matrix.
pub fn det<T: Domain>(m: Vec<Vec<T>>) -> T {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        panic!("determinant of an empty matrix needs a ring context");
    }
    let one = m[0][0].one_like();
    let r = reduce(m);
    if r.rank() < n {
        return one.zero_like();
    }
    let d = r.pivot.unwrap();
    if r.odd_swaps {
        d.neg()
    } else {
        d
    }
}

/// A basis of the right kernel `{x : m x = 0}`, one vector per free column.
pub fn kernel<T: Domain>(m: Vec<Vec<T>>, ncols: usize, template: &T) -> Vec<Vec<T>> {
    if m.is_empty() {
        return (0..ncols)
            .map(|f| (0..ncols).map(|j| if j == f { template.one_like() } else { template.zero_like() }).collect())
            .collect();
    }
    let r = reduce(m);
    let d = r.pivot.clone().unwrap_or_else(|| template.one_like());
    let free: Vec<usize> = (0..ncols).filter(|c| !r.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![template.zero_like(); ncols];
            x[f] = d.clone();
            for (i, &pc) in r.pivots.iter().enumerate() {
                x[pc] = r.rows[i][f].neg();
            }
            x
        })
        .collect()
}

fn lcm_multi(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    let g = mgcd(a, b);
    (a * b).exact_div(&g).expect("gcd divides product")
}

/// Clear denominators of a row of `K`-entries; returns the row multiplier `L`.
pub fn clear_row_multi(row: &[MultiRat]) -> (MultiPoly, Vec<MultiPoly>) {
    let n = row[0].numer().nvars();
    let mut l = MultiPoly::one(n);
    for x in row {
        if !x.is_zero() {
            l = lcm_multi(&l, x.denom());
        }
    }
    let out = row
        .iter()
        .map(|x| if x.is_zero() { MultiPoly::zero(n) } else { x.numer() * &l.exact_div(x.denom()).unwrap() })
        .collect();
    (l, out)
}

pub fn clear_matrix_multi(m: &[Vec<MultiRat>]) -> (Vec<MultiPoly>, Vec<Vec<MultiPoly>>) {
    m.iter().map(|r| clear_row_multi(r)).unzip()
}

/// Clear denominators of a row of `Q(q)`-entries.
pub fn clear_row_q(row: &[RatFunc]) -> (LaurentQ, Vec<LaurentQ>) {
    let mut l = LaurentQ::one(crate::ring::Var::Q);
    for x in row {
        if !x.is_zero() {
            let g = l.gcd(x.denom());
            l = (&l * x.denom()).exact_div(&g).unwrap();
        }
    }
    let out = row
        .iter()
        .map(|x| {
            if x.is_zero() {
                LaurentQ::zero(crate::ring::Var::Q)
            } else {
                x.numer() * &l.exact_div(x.denom()).unwrap()
            }
        })
        .collect();
    (l, out)
}

/// Determinant over `K`.
pub fn det_multi(m: &[Vec<MultiRat>]) -> MultiRat {
    let rank = m[0][0].rank();
    let (mults, polys) = clear_matrix_multi(m);
    let d = MultiRat::from_poly(det(polys));
    let mut denom = MultiRat::one(rank);
    for l in mults {
        denom = &denom * &MultiRat::from_poly(l);
    }
    &d / &denom
}

/// Rank over `K`.
pub fn rank_multi(m: &[Vec<MultiRat>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    rank(clear_matrix_multi(m).1)
}

/// Kernel basis over `Q(q)`, entries as Laurent polynomials.
pub fn kernel_q(m: &[Vec<RatFunc>], ncols: usize) -> Vec<Vec<LaurentQ>> {
    let rows: Vec<Vec<LaurentQ>> = m.iter().map(|r| clear_row_q(r).1).collect();
    kernel(rows, ncols, &LaurentQ::zero(crate::ring::Var::Q))
}

/// Rank over `Q(q)`.
pub fn rank_q(m: &[Vec<RatFunc>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    rank(m.iter().map(|r| clear_row_q(r).1).collect())
}

/// Kernel basis over `K`, entries as polynomials.
pub fn kernel_multi(m: &[Vec<MultiRat>], ncols: usize, rank: usize) -> Vec<Vec<MultiPoly>> {
    let rows: Vec<Vec<MultiPoly>> = m.iter().map(|r| clear_row_multi(r).1).collect();
    kernel(rows, ncols, &MultiPoly::zero(rank + 1))
}
