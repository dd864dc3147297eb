use fockweyl::partition::{addable_row_indices, Partition};
use fockweyl::ring::{rat, RatFunc, WeightVec};
use fockweyl::verma::Generator;
use fockweyl::weyl::{mu_singular_vectors, tensor_act, tensor_act_right, TensorVector};
use proptest::prelude::*;

const RANK: usize = 3;

fn vector(n: usize) -> impl Strategy<Value = TensorVector> {
    let term = (proptest::collection::vec(1u8..=RANK as u8, n), -3i64..=3, -2i64..=2);
    proptest::collection::vec(term, 1..4).prop_map(move |terms| {
        let mut x = TensorVector::zero(n, RANK);
        for (w, c, e) in terms {
            let b = TensorVector::basis(RANK, &w).unwrap();
            x = x.add(&b.scale(&RatFunc::q_pow(e).scale(&rat(c))));
        }
        x
    })
}

fn generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        (1..RANK).prop_map(Generator::X),
        (1..RANK).prop_map(Generator::Y),
        (1..=RANK).prop_map(Generator::L),
        (1..=RANK).prop_map(Generator::LInv),
    ]
}

fn l_ratio(i: usize, inverse: bool, y: &TensorVector) -> TensorVector {
    let (a, b) =
        if inverse { (Generator::LInv(i), Generator::L(i + 1)) } else { (Generator::L(i), Generator::LInv(i + 1)) };
    tensor_act(a, &tensor_act(b, y).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nestings_agree(x in (1usize..=4).prop_flat_map(vector), g in generator()) {
        prop_assert_eq!(tensor_act(g, &x).unwrap(), tensor_act_right(g, &x).unwrap());
    }

    #[test]
    fn coproduct_splits(x in (1usize..=2).prop_flat_map(vector), y in (1usize..=2).prop_flat_map(vector), g in generator()) {
        let xy = x.tensor(&y);
        let got = tensor_act(g, &xy).unwrap();
        let expect = match g {
            Generator::L(_) | Generator::LInv(_) => tensor_act(g, &x).unwrap().tensor(&tensor_act(g, &y).unwrap()),
            Generator::X(i) => tensor_act(g, &x).unwrap().tensor(&l_ratio(i, false, &y))
                .add(&x.tensor(&tensor_act(g, &y).unwrap())),
            Generator::Y(i) => tensor_act(g, &x).unwrap().tensor(&y)
                .add(&l_ratio(i, true, &x).tensor(&tensor_act(g, &y).unwrap())),
        };
        prop_assert_eq!(got, expect);
    }

    #[test]
    fn singular_vectors_per_addable_row(parts in proptest::collection::vec(1u32..=2, 0..3)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lam = Partition::new(parts).unwrap();
        let rank = lam.len() + 1;
        let sing = mu_singular_vectors(&lam, rank).unwrap();
        let rows = addable_row_indices(&lam, rank).unwrap();
        prop_assert_eq!(sing.iter().map(|s| s.k).collect::<Vec<_>>(), rows.clone());
        prop_assert!(sing[0].r.is_one());
        for s in &sing {
            let mut coords: Vec<i64> = lam.parts().iter().map(|&p| p as i64).collect();
            coords.resize(rank, 0);
            coords[s.k - 1] += 1;
            prop_assert_eq!(s.vector.weight(), Some(WeightVec::new(coords)));
            for i in 1..rank {
                prop_assert!(tensor_act(Generator::X(i), &s.vector).unwrap().is_zero());
            }
        }
    }
}
