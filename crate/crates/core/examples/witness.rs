//! Move one free point to another region and find the triple that tells the
//! two order types apart.
//!
//! cargo run --release --example witness -- 64 3 5

use otgrid::verify::{find_frame_witness, find_order_type_witness};
use otgrid::{Construction, PlacementVector, RegionKey};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(64) as u64;
    let seed = args.next().unwrap_or(3) as u64;
    let entry = args.next().unwrap_or(5);

    let c = Construction::new(n).expect("construction");
    let (p, count) = (c.p(), c.params.region_count());
    let base = c.random_placement(seed).expect("placement");
    let a = c.place_all(&base).expect("replay");

    // try successive regions until the modified placement is realizable
    for shift in 1..count {
        let mut keys = base.0.clone();
        keys[entry] = RegionKey::from_flat((keys[entry].flat_index(p) + shift) % count, p);
        let Ok(b) = c.place_all(&PlacementVector(keys.clone())) else { continue };
        println!("entry {entry}: {} -> {}", base.0[entry], keys[entry]);
        println!("lexicographic {}", find_order_type_witness(&a, &b).unwrap());
        println!("frame pair    {}", find_frame_witness(p, &a, &b).unwrap());
        return;
    }
    println!("no alternative region is realizable");
}
