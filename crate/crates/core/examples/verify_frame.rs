//! Run the frame invariant suite for several n.
//!
//! cargo run --release --example verify_frame -- 32 64 128

use otgrid::construction::derive_params;
use otgrid::verify::verify_frame;

fn main() {
    let ns: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer n")).collect();
    let ns = if ns.is_empty() { vec![32, 64] } else { ns };
    for n in ns {
        let params = derive_params(n).unwrap_or_else(|e| panic!("n={n}: {e}"));
        let report = verify_frame(&params).expect("frame");
        println!("# n={n} p={} -> {}", params.p, if report.passed() { "pass" } else { "FAIL" });
        print!("{report}");
    }
}
