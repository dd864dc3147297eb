//! Gram determinants of the universal Shapovalov form against the product formula.

use fockweyl::ring::{unit_ratio, WeightVec};
use fockweyl::verify::multidegrees;
use fockweyl::verma::{gram_matrix, root_weight, shapovalov_det_closed};

fn main() {
    for (rank, h) in [(2, 3), (3, 2)] {
        for nu in multidegrees(rank, h) {
            let g = gram_matrix(rank, &WeightVec::zero(rank), &nu).unwrap();
            let closed = shapovalov_det_closed(&(-&root_weight(rank, &nu)), rank);
            let u = unit_ratio(&g.det, &closed, false).unwrap().expect("ratio is a unit");
            println!("N={rank} nu={nu:?}: {} words, basis {:?}", g.words.len(), g.independent_words());
            println!("  closed form  {closed}");
            println!("  ratio        q^{} z^{:?} * ({})", u.q_exp, u.z_monomial, u.scalar);
        }
    }

    // shifting the module shifts the determinant
    let nu = [1, 1];
    let g = gram_matrix(3, &WeightVec::zero(3), &nu).unwrap();
    let mu = WeightVec::unit(3, 1);
    let shifted = fockweyl::verma::gram_matrix_on(3, &mu, &nu, g.words.clone(), Some(g.independent.clone())).unwrap();
    println!("sigma_eps1(det) == det of shifted module: {}", shifted.det == g.det.sigma_shift(&mu));
}
