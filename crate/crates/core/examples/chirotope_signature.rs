//! Chirotopes of small point sets: packing, orientation lookup, first
//! difference, and the text signature round trip.

use otgrid::chirotope::triple_count;
use otgrid::{compute_chirotope, first_difference, Chirotope, LabeledPointSet, Point};

fn set(v: &[(i64, i64)]) -> LabeledPointSet {
    LabeledPointSet::new(v.iter().map(|&p| Point::from(p)).collect()).unwrap()
}

fn main() {
    let square = set(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
    let inner = set(&[(0, 0), (4, 0), (0, 4), (1, 1)]);
    let outer = set(&[(0, 0), (4, 0), (0, 4), (3, 3)]);

    for (name, s) in [("square", &square), ("inner", &inner), ("outer", &outer)] {
        let chi = compute_chirotope(s).unwrap();
        println!("{name:>6}: {chi}  ({} triples)", triple_count(s.len()));
    }

    let (a, b) = (compute_chirotope(&inner).unwrap(), compute_chirotope(&outer).unwrap());
    let t = first_difference(&a, &b).unwrap().expect("different order types");
    println!("first difference at {t:?}: {} vs {}", a.orientation(t.0, t.1, t.2).unwrap(), b.orientation(t.0, t.1, t.2).unwrap());
    // swapping two labels flips the sign
    println!("chi(3,2,4) = {}", a.orientation(3, 2, 4).unwrap());

    let parsed: Chirotope = a.to_string().parse().unwrap();
    assert_eq!(parsed, a);

    let collinear = set(&[(0, 0), (1, 1), (5, 2), (2, 2)]);
    println!("collinear set: {}", compute_chirotope(&collinear).unwrap_err());
}
