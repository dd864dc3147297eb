//! Closed forms: the Shapovalov determinant, the Jantzen numbers `s_k`, their
//! evaluations at partitions and the cyclotomic valuations of those.

use num_traits::One;

use super::gram::kostant_p;
use crate::error::{Error, Result};
use crate::partition::{n_left, Partition};
use crate::ring::{q_int, val_cyclotomic, MultiRat, QRational, RatFunc, WeightVec};

/// `z_i z_j^{-1} - q^e z_i^{-1} z_j`
fn binomial(rank: usize, i: usize, j: usize, e: i64) -> MultiRat {
    let mut plus = vec![0; rank];
    plus[i - 1] = 1;
    plus[j - 1] = -1;
    let minus: Vec<i64> = plus.iter().map(|x| -x).collect();
    &MultiRat::monomial(&plus, 0, QRational::one()) - &MultiRat::monomial(&minus, e, QRational::one())
}

/// `prod_{i<j, m>0} (z_i z_j^{-1} - q^{2m+2i-2j} z_i^{-1} z_j)^{p(eta + m eps_i - m eps_j)}`.
pub fn shapovalov_det_closed(eta: &WeightVec, rank: usize) -> MultiRat {
    assert_eq!(eta.len(), rank, "weight rank mismatch");
    let mut acc = MultiRat::one(rank);
    for i in 1..=rank {
        for j in i + 1..=rank {
            let root = &WeightVec::unit(rank, i) - &WeightVec::unit(rank, j);
            let mut m = 1i64;
            loop {
                let p = kostant_p(&(eta + &root.scale(m)));
                if p == 0 {
                    break;
                }
                let f = binomial(rank, i, j, 2 * m + 2 * i as i64 - 2 * j as i64);
                acc = &acc * &f.pow(p as i32);
                m += 1;
            }
        }
    }
    acc
}

/// The factors `(f_jk, sigma_{eps_j}(f_jk))`, `j < k`, of the closed form of `s_k`.
pub fn jantzen_s_closed_factors(k: usize, rank: usize) -> Vec<(MultiRat, MultiRat)> {
    assert!(k >= 1 && k <= rank, "row index out of range");
    (1..k)
        .map(|j| {
            let f = binomial(rank, j, k, 2 + 2 * j as i64 - 2 * k as i64);
            let s = f.sigma_shift(&WeightVec::unit(rank, j));
            (f, s)
        })
        .collect()
}

/// `s_k` up to `±q^m`: `prod_{j<k} f_jk / sigma_{eps_j}(f_jk)`.
pub fn jantzen_s_closed(k: usize, rank: usize) -> MultiRat {
    let mut acc = MultiRat::one(rank);
    for (f, s) in jantzen_s_closed_factors(k, rank) {
        acc = &acc * &(&f / &s);
    }
    acc
}

/// Evaluate the closed form of `s_k` at `lambda` factor by factor.
pub fn eval_jantzen_s_closed(k: usize, rank: usize, lambda: &WeightVec) -> Result<RatFunc> {
    let mut acc = RatFunc::one();
    for (f, s) in jantzen_s_closed_factors(k, rank) {
        let num = f.eval_at_weight(lambda)?;
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let den = s.eval_at_weight(lambda)?;
        acc = &acc * &num.checked_div(&den).map_err(|_| Error::EvaluationPole(lambda.to_string()))?;
    }
    Ok(acc)
}

/// `prod_{r in R(lam,<k)} [c(r) - c(b)] / prod_{a in A(lam,<k)} [c(a) - c(b)]`,
/// `b` the box added in row `k`; `None` when `lam + eps_k` is not a partition.
pub fn ev_jantzen_closed(lam: &Partition, k: usize) -> Option<RatFunc> {
    lam.add_to_row(k)?;
    let b = crate::partition::BoxRef::new(k as u32, lam.part(k) + 1);
    // colors are irrelevant here; ell = 2 only satisfies the argument check
    let above = |bx: &crate::partition::BoxRef| (bx.row as usize) < k;
    let mut acc = RatFunc::one();
    for r in lam.removable_boxes(2, None).iter().filter(|x| above(x)) {
        acc = &acc * &RatFunc::from_laurent(q_int(r.content() - b.content()));
    }
    for a in lam.addable_boxes(2, None).iter().filter(|x| above(x)) {
        acc = &acc / &RatFunc::from_laurent(q_int(a.content() - b.content()));
    }
    Some(acc)
}

/// `val_{phi_{2 ell}}` of [`ev_jantzen_closed`], checked against `N^l`.
pub fn jantzen_valuation(lam: &Partition, k: usize, ell: u32) -> Result<Option<i64>> {
    let Some(ev) = ev_jantzen_closed(lam, k) else { return Ok(None) };
    let val = val_cyclotomic(&ev, 2 * ell as u64)?;
    let b = crate::partition::BoxRef::new(k as u32, lam.part(k) + 1);
    let nl = n_left(lam, b, ell)?;
    if val != nl {
        return Err(Error::CheckFailed(format!(
            "valuation {val} of ev_lambda(s_{k}) differs from N^l = {nl} for lambda = ({lam})"
        )));
    }
    Ok(Some(val))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::render_q_integers;

    #[test]
    fn det_closed_rank_two() {
        let d = shapovalov_det_closed(&(-&WeightVec::alpha(2, 1)), 2);
        assert_eq!(d, binomial(2, 1, 2, 0));
        assert!(shapovalov_det_closed(&WeightVec::alpha(2, 1), 2).is_one());
    }

    #[test]
    fn s2_closed_form() {
        let s = jantzen_s_closed(2, 2);
        let z1 = MultiRat::z(2, 1);
        let z2 = MultiRat::z(2, 2);
        let q = MultiRat::q_pow(2, 1);
        let num = &(&z1 / &z2) - &(&z2 / &z1);
        let den = &(&(&q * &z1) / &z2) - &(&z2 / &(&q * &z1));
        assert_eq!(s, &num / &den);
        assert!(jantzen_s_closed(1, 3).is_one());
        let ev = s.eval_at_weight(&WeightVec::new(vec![1, 0])).unwrap();
        assert_eq!(render_q_integers(&ev), "1/[2]");
    }

    #[test]
    fn hook_ratios() {
        let lam: Partition = "10,10,8,8,8,6,6,6,6,1,1".parse().unwrap();
        assert_eq!(render_q_integers(&ev_jantzen_closed(&lam, 6).unwrap()), "[2][7]/([5][9])");
        assert!(ev_jantzen_closed(&Partition::empty(), 1).unwrap().is_one());
        assert_eq!(render_q_integers(&ev_jantzen_closed(&"1".parse().unwrap(), 2).unwrap()), "1/[2]");
        assert_eq!(ev_jantzen_closed(&"1,1".parse().unwrap(), 2), None);
        assert_eq!(jantzen_valuation(&"1".parse().unwrap(), 2, 2).unwrap(), Some(-1));
        assert_eq!(jantzen_valuation(&"1".parse().unwrap(), 1, 2).unwrap(), Some(0));
    }
}
