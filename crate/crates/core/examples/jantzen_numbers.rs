//! Jantzen numbers from singular vectors, their closed form, and evaluations.

use fockweyl::partition::Partition;
use fockweyl::ring::{agrees, render_q_integers, Tolerance, WeightVec};
use fockweyl::verma::{ev_jantzen_closed, jantzen_s_closed, jantzen_valuation, lemma62_check, JantzenEngine};

fn main() {
    let rank = 3;
    let mut engine = JantzenEngine::new(rank);
    for k in 1..=rank {
        let s = engine.s(k).unwrap();
        let closed = jantzen_s_closed(k, rank);
        println!("s_{k} = {s}");
        println!("  agrees with closed form up to +-q^m: {}", agrees(&s, &closed, Tolerance::Signed));
    }
    for k in 1..=rank {
        let r = lemma62_check(&WeightVec::unit(rank, k), rank).unwrap();
        println!("eta = eps{k}: lhs/rhs = {}q^{}", if r.sign == Some(-1) { "-" } else { "" }, r.q_exp.unwrap_or(0));
    }

    let lam: Partition = "10,10,8,8,8,6,6,6,6,1,1".parse().unwrap();
    let ev = ev_jantzen_closed(&lam, 6).unwrap();
    println!("ev_({lam})(s_6) = {}", render_q_integers(&ev));
    for ell in 2..=7 {
        println!("  val_phi_{} = {:?}", 2 * ell, jantzen_valuation(&lam, 6, ell).unwrap());
    }
}
