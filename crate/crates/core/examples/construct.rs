//! Build one point set and print it with its signature.
//!
//! cargo run --release --example construct -- 64 7

use otgrid::{compute_chirotope, Construction};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(64);
    let seed = args.next().unwrap_or(1);

    let c = Construction::new(n).unwrap_or_else(|e| panic!("n={n}: {e}"));
    let p = &c.params;
    println!("n={} log={} p={} alpha={} scale={} m={}", p.n, p.log_n, p.p, p.alpha, p.scale, p.m);
    println!("frame={} extras={} regions={}", p.frame_size(), p.extras(), p.region_count());

    let placement = c.random_placement(seed).expect("placement");
    let set = c.place_all(&placement).expect("replay");
    for (i, (q, key)) in set.points()[p.frame_size()..].iter().zip(placement.entries()).enumerate() {
        println!("{:>3} {q} {key}", p.frame_size() + i + 1);
    }
    let chi = compute_chirotope(&set).expect("general position");
    println!("signature={chi}");
}
