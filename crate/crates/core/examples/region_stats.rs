//! Region sizes, alive regions step by step, and the lines that kill grid
//! points.
//!
//! cargo run --release --example region_stats -- 64 1

use otgrid::construction::alive_lower_bound;
use otgrid::verify::{kill_stats, region_stats, RegionSummary};
use otgrid::Construction;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(64);
    let seed = args.next().unwrap_or(1);
    let c = Construction::new(n).expect("construction");

    let s = RegionSummary::compute(&c);
    println!("regions={} min={} max={} mean~{:.1} threshold={}", s.regions, s.min, s.max,
        *s.mean().numer() as f64 / *s.mean().denom() as f64, s.threshold);
    print!("{}", region_stats(&c));

    let placement = c.random_placement(seed).expect("placement");
    let mut state = c.start();
    let mut alive = vec![c.alive_count(state.placed())];
    for &key in placement.entries() {
        state.place(key).expect("alive region");
        alive.push(c.alive_count(state.placed()));
    }
    println!("alive per step: {alive:?}");
    println!("alive lower bound: {}", alive_lower_bound(&c.params));
    print!("{}", kill_stats(&c, state.placed()));
}
