//! Draw the frame and the region outlines.
//!
//! cargo run --release --example svg_figure -- 32 /tmp/frame.svg

use otgrid::Construction;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: u64 = args.first().map_or(32, |a| a.parse().expect("integer n"));
    let out = args.get(1).cloned().unwrap_or_else(|| format!("frame-{n}.svg"));
    let c = Construction::new(n).expect("construction");
    let doc = otgrid::svg::render(&c, true);
    std::fs::write(&out, &doc).expect("write svg");
    println!("{out}: {} bytes, {} markers, {} segments, {} regions", doc.len(),
        doc.matches("<circle").count(), doc.matches("<line").count(), doc.matches("<polygon").count());
}
