//! Partitions, boxes, contents and colors.
//!
//! The content of the box in row `i`, column `j` is `j - i`. A box `b'` lies
//! *left* of `b` when `content(b') > content(b)`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxRef {
    pub row: u32,
    pub col: u32,
}

impl BoxRef {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "boxes are 1-indexed");
        BoxRef { row, col }
    }

    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// `content mod ell` in `0..ell`.
    pub fn color(self, ell: u32) -> u32 {
        assert!(ell >= 2, "ell must be at least 2");
        self.content().rem_euclid(ell as i64) as u32
    }
}

impl Serialize for BoxRef {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(s)
    }
}

impl fmt::Display for BoxRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Trailing zeros are dropped; the rest must be positive and weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `lambda_r`, zero past the last part (1-based).
    pub fn part(&self, r: usize) -> u32 {
        if r == 0 {
            return u32::MAX;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, b: BoxRef) -> bool {
        b.col <= self.part(b.row as usize)
    }

    pub fn boxes(&self) -> Vec<BoxRef> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push(BoxRef::new(i as u32 + 1, j));
            }
        }
        out
    }

    pub fn is_addable(&self, b: BoxRef) -> bool {
        let r = b.row as usize;
        b.col == self.part(r) + 1 && self.part(r - 1) > self.part(r)
    }

    pub fn is_removable(&self, b: BoxRef) -> bool {
        let r = b.row as usize;
        let len = self.part(r);
        len > 0 && b.col == len && self.part(r + 1) < len
    }

    /// Addable boxes, optionally of one color, by decreasing content.
    pub fn addable_boxes(&self, ell: u32, color: Option<u32>) -> Vec<BoxRef> {
        let mut out: Vec<BoxRef> = (1..=self.len() + 1)
            .filter(|&r| self.part(r - 1) > self.part(r))
            .map(|r| BoxRef::new(r as u32, self.part(r) + 1))
            .filter(|b| color.is_none_or(|c| b.color(ell) == c))
            .collect();
        out.sort_by_key(|b| std::cmp::Reverse(b.content()));
        out
    }

    /// Removable boxes, optionally of one color, by decreasing content.
    pub fn removable_boxes(&self, ell: u32, color: Option<u32>) -> Vec<BoxRef> {
        let mut out: Vec<BoxRef> = (1..=self.len())
            .filter(|&r| self.part(r + 1) < self.part(r))
            .map(|r| BoxRef::new(r as u32, self.part(r)))
            .filter(|b| color.is_none_or(|c| b.color(ell) == c))
            .collect();
        out.sort_by_key(|b| std::cmp::Reverse(b.content()));
        out
    }

    pub fn add_box(&self, b: BoxRef) -> Result<Partition> {
        if !self.is_addable(b) {
            return Err(Error::NotAddable { row: b.row, col: b.col });
        }
        let mut parts = self.parts.clone();
        let r = b.row as usize;
        if r > parts.len() {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn remove_box(&self, b: BoxRef) -> Result<Partition> {
        if !self.is_removable(b) {
            return Err(Error::Invalid(format!("box {b} is not removable from {self}")));
        }
        let mut parts = self.parts.clone();
        parts[b.row as usize - 1] -= 1;
        Partition::new(parts)
    }

    /// `lambda + eps_k`, if it is a partition.
    pub fn add_to_row(&self, k: usize) -> Option<Partition> {
        self.add_box(BoxRef::new(k as u32, self.part(k) + 1)).ok()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with `|lambda| <= max`, by size.
    pub fn all_up_to(max: u32) -> Vec<Partition> {
        (0..=max).flat_map(Self::all_of_size).collect()
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `"10,10,8"`; the empty string, `"0"` and `"-"` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Invalid(format!("bad part {p:?}"))))
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// Signed count of same-colored removable minus addable boxes of `lam`
/// on one side of `new_box`.
fn side_count(lam: &Partition, new_box: BoxRef, ell: u32, left: bool) -> Result<i64> {
    if !lam.is_addable(new_box) {
        return Err(Error::NotAddable { row: new_box.row, col: new_box.col });
    }
    let c = new_box.content();
    let color = Some(new_box.color(ell));
    let on_side = |b: &BoxRef| if left { b.content() > c } else { b.content() < c };
    let r = lam.removable_boxes(ell, color).iter().filter(|b| on_side(b)).count() as i64;
    let a = lam.addable_boxes(ell, color).iter().filter(|b| on_side(b)).count() as i64;
    Ok(r - a)
}

/// `N^l(mu / lam)` for `mu = lam + new_box`.
pub fn n_left(lam: &Partition, new_box: BoxRef, ell: u32) -> Result<i64> {
    side_count(lam, new_box, ell, true)
}

/// `N^r(mu / lam)` for `mu = lam + new_box`.
pub fn n_right(lam: &Partition, new_box: BoxRef, ell: u32) -> Result<i64> {
    side_count(lam, new_box, ell, false)
}

/// Rows `k <= n_rank` for which `lam + eps_k` is a partition.
pub fn addable_row_indices(lam: &Partition, n_rank: usize) -> Result<Vec<usize>> {
    if n_rank <= lam.len() {
        return Err(Error::RankTooSmall { rank: n_rank, parts: lam.len() });
    }
    Ok((1..=n_rank).filter(|&k| lam.part(k - 1) > lam.part(k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn contents_and_colors() {
        assert_eq!(BoxRef::new(8, 1).content(), -7);
        assert_eq!(BoxRef::new(8, 1).color(3), 2);
        assert_eq!(BoxRef::new(2, 10).content(), 8);
    }

    #[test]
    fn addable_and_removable() {
        assert_eq!(p("").addable_boxes(2, None), vec![BoxRef::new(1, 1)]);
        assert_eq!(p("1").addable_boxes(2, Some(1)), vec![BoxRef::new(1, 2), BoxRef::new(2, 1)]);
        assert!(p("1").removable_boxes(2, Some(1)).is_empty());
    }

    #[test]
    fn statistics() {
        assert_eq!(n_left(&p(""), BoxRef::new(1, 1), 2).unwrap(), 0);
        assert_eq!(n_left(&p("1"), BoxRef::new(2, 1), 2).unwrap(), -1);
        assert_eq!(n_left(&p("1"), BoxRef::new(1, 2), 2).unwrap(), 0);
        assert!(n_left(&p("1"), BoxRef::new(3, 1), 2).is_err());
    }

    #[test]
    fn addable_rows() {
        assert_eq!(addable_row_indices(&p(""), 3).unwrap(), vec![1]);
        assert_eq!(addable_row_indices(&p("1"), 3).unwrap(), vec![1, 2]);
        assert_eq!(addable_row_indices(&p("10,10,8,8,8,6,6,6,6,1,1"), 12).unwrap(), vec![1, 3, 6, 10, 12]);
        assert!(addable_row_indices(&p("2,1"), 2).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
