//! Every verification family at small bounds, as a text report.

use fockweyl::verify::{run_families, Family, RunConfig};

fn main() {
    let config = RunConfig { ell: vec![2, 3], max_size: 3, ..RunConfig::default() };
    let report = run_families(&Family::ALL, &config).unwrap();
    print!("{}", report.to_text());
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
