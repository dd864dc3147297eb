//! Brute force in tensor powers of V: Weyl module highest weight vectors,
//! the singular vectors of Delta(lambda) (x) V and the norms r_j.

use fockweyl::partition::Partition;
use fockweyl::ring::{render_q_integers, Tolerance};
use fockweyl::weyl::{highest_weight_vector, mu_singular_vectors, verify_theorem61};

fn main() {
    let lam: Partition = std::env::args().nth(1).unwrap_or_else(|| "2,1".into()).parse().expect("partition");
    let rank = lam.len() + 1;
    println!("w_({lam}) = {}", highest_weight_vector(&lam, rank).unwrap());
    for m in mu_singular_vectors(&lam, rank).unwrap() {
        println!("row {}: r = {}  ({} terms)", m.k, render_q_integers(&m.r), m.vector.terms().count());
    }
    for ell in [2, 3] {
        let r = verify_theorem61(&lam, ell, rank, Tolerance::Signed).unwrap();
        for b in &r.boxes {
            println!(
                "ell={ell} box ({},{}) color {}: val r = {}, Fock exponent {:?}",
                b.row, b.col, b.color, b.valuation, b.fock_exponent
            );
        }
        println!("ell={ell}: {}", if r.pass { "pass" } else { "FAIL" });
    }
}
