//! Contents, colors and the signed counts N^l, N^r of addable boxes.

use fockweyl::partition::{n_left, n_right, BoxRef, Partition};

fn main() {
    let lam: Partition =
        std::env::args().nth(1).unwrap_or_else(|| "7,6,6,5,5,3,3,1".into()).parse().expect("partition");
    let ell = 3;
    println!("({lam}) at ell = {ell}, {} boxes", lam.size());
    for r in 1..=lam.len() {
        let row: String =
            (1..=lam.part(r)).map(|c| BoxRef::new(r as u32, c).color(ell).to_string()).collect::<Vec<_>>().join(" ");
        println!("  {row}");
    }
    for b in lam.addable_boxes(ell, None) {
        println!(
            "addable {b}: content {:>2}, color {}, N^l = {:>2}, N^r = {:>2}",
            b.content(),
            b.color(ell),
            n_left(&lam, b, ell).unwrap(),
            n_right(&lam, b, ell).unwrap()
        );
    }
    for b in lam.removable_boxes(ell, None) {
        println!("removable {b}: color {}", b.color(ell));
    }
}
