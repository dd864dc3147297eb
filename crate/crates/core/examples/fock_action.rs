//! Misra-Miwa operators on small partitions.
//!
//!     cargo run --example fock_action -- 3

use fockweyl::fock::{apply_e, apply_f, check_relations, FockVector};
use fockweyl::partition::Partition;

fn main() {
    let ell: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    println!("ell = {ell}");
    for lam in Partition::all_up_to(3) {
        let x = FockVector::basis(lam.clone());
        for i in 0..ell {
            let y = apply_f(i, &x, ell);
            if !y.is_zero() {
                println!("F_{i} |{lam}> = {y}");
            }
        }
    }

    // E undoes F up to the K-eigenvalue
    let x = FockVector::basis("2,1".parse().unwrap());
    println!("E_0 F_0 |2,1> = {}", apply_e(0, &apply_f(0, &x, ell), ell));

    let r = check_relations(ell, 5);
    println!("{} relations checked up to size 5: {}", r.relations_checked, if r.passed { "ok" } else { "FAILED" });
}
