//! How often does rounding a random point set to the integer grid keep its
//! order type?
//!
//! cargo run --release --example rounding -- 50 1/2 200 1

use otgrid::cli::parse_rational;
use otgrid::verify::{rounding_experiment, RoundingParams};
use otgrid::Rational;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, d: &str| args.get(i).cloned().unwrap_or_else(|| d.to_string());
    let n: usize = arg(0, "50").parse().expect("n");
    let trials: u64 = arg(2, "200").parse().expect("trials");
    let seed: u64 = arg(3, "1").parse().expect("seed");
    let eps = parse_rational(&arg(1, "1")).expect("epsilon");

    for e in [Rational::from_integer(0), eps / 2, eps] {
        let r = rounding_experiment(&RoundingParams::new(n, e, trials, seed)).expect("experiment");
        println!("epsilon={e:<5} extent={:<10} preserved={}/{}", r.extent, r.preserved, r.trials);
    }
}
