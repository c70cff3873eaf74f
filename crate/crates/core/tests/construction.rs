use std::collections::HashSet;

use otgrid::construction::{
    alive_lower_bound, build_qp, derive_params, find_prime, is_killed, iterate_region_points, locate,
    region_grid_count,
};
use otgrid::verify::{kill_stats, region_stats, verify_distinct, verify_frame, verify_point_set, verify_qp, Status};
use otgrid::{compute_chirotope, orient, Construction, ConstructionError, Orientation, Point, RegionKey};

fn brute_nondegenerate(q: &[Point]) -> bool {
    let n = q.len();
    (0..n).all(|i| (i + 1..n).all(|j| (j + 1..n).all(|k| orient(q[i], q[j], q[k]) != Orientation::Zero)))
}

#[test]
fn prime_window() {
    for n in [32u64, 33, 64, 100, 128, 256, 500, 1000, 1024] {
        let log = 63 - n.leading_zeros() as u64;
        let p = find_prime(n).unwrap();
        assert!(2 * log * p > n && log * p < n, "n={n} p={p}");
        // smallest prime in the window
        let smaller = (n / (2 * log) + 1..p).filter(|&c| 2 * log * c > n).any(|c| (2..c).all(|d| c % d != 0));
        assert!(!smaller, "n={n}");
    }
}

#[test]
fn qp_is_in_general_position() {
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
        let q = build_qp(p).unwrap();
        assert_eq!(q.len() as u64, p);
        assert!(brute_nondegenerate(&q), "p={p}");
        assert!(verify_qp(p).unwrap().passed());
    }
    assert_eq!(build_qp(9), Err(ConstructionError::NotPrime(9)));
}

#[test]
fn params_at_32() {
    let p = derive_params(32).unwrap();
    assert_eq!((p.p, p.alpha, p.scale, p.m), (5, 64, 10240, 2_228_224));
    assert_eq!(p.region_count(), 400);
    assert_eq!(alive_lower_bound(&p), 99);
}

#[test]
fn frame_suite_small() {
    for n in [32u64, 40, 64] {
        let r = verify_frame(&derive_params(n).unwrap()).unwrap();
        assert!(r.passed(), "n={n}\n{r}");
    }
}

/// Grid points sampled from each region are located back to a region that
/// contains them, and points between regions are not located.
#[test]
fn locate_round_trip() {
    let c = Construction::new(32).unwrap();
    for key in c.keys().step_by(13) {
        let r = c.region(key).unwrap();
        for q in iterate_region_points(&r).step_by(997).take(5) {
            let found = locate(&c.frame, q).expect("inside a region");
            assert!(c.region(found).unwrap().contains(q));
        }
    }
    assert_eq!(locate(&c.frame, Point::new(0, 0)), None);
}

#[test]
fn region_count_matches_scan() {
    let c = Construction::new(32).unwrap();
    let r = c.region(RegionKey::new(1, 2, 3, 1)).unwrap();
    let (x0, x1) = r.column_range();
    let ys: Vec<i128> = r.vertices.iter().flat_map(|v| [v.y.floor().to_integer(), v.y.ceil().to_integer()]).collect();
    let (y0, y1) = (*ys.iter().min().unwrap() as i64, *ys.iter().max().unwrap() as i64);
    let scan = (x0 - 2..=x1 + 2)
        .flat_map(|x| (y0 - 2..=y1 + 2).map(move |y| Point::new(x, y)))
        .filter(|&q| r.contains(q))
        .count() as u64;
    assert_eq!(scan, region_grid_count(&r));
}

#[test]
fn placements_are_valid_and_reproducible() {
    let c = Construction::new(32).unwrap();
    let mut sets = Vec::new();
    for seed in 1..=8 {
        let v = c.random_placement(seed).unwrap();
        assert_eq!(v, c.random_placement(seed).unwrap());
        let set = c.place_all(&v).unwrap();
        assert_eq!(set, c.place_all(&v).unwrap());
        let q = set.points();
        assert!(brute_nondegenerate(q));
        let frame = c.params.frame_size();
        for (i, (&pt, &key)) in q[frame..].iter().zip(v.entries()).enumerate() {
            assert!(c.region(key).unwrap().contains(pt));
            assert_eq!(is_killed(pt, &q[..frame + i]), None);
        }
        let (report, chi) = verify_point_set(&set);
        assert!(report.passed(), "{report}");
        assert_eq!(chi.unwrap(), compute_chirotope(&set).unwrap());
        sets.push(set);
    }
    assert!(verify_distinct(&sets).unwrap().passed());
}

#[test]
fn alive_count_never_increases() {
    let c = Construction::new(32).unwrap();
    let v = c.random_placement(11).unwrap();
    let mut state = c.start();
    let mut last = c.alive_count(state.placed());
    assert_eq!(last, c.params.region_count());
    for &key in v.entries() {
        state.place(key).unwrap();
        let now = c.alive_count(state.placed());
        assert!(now <= last);
        last = now;
    }
}

#[test]
fn dead_and_invalid_keys() {
    let c = Construction::new(32).unwrap();
    assert!(matches!(c.region(RegionKey::new(5, 0, 0, 0)), Err(ConstructionError::KeyOutOfRange(_))));
    assert!(matches!(c.region(RegionKey::new(0, 4, 0, 0)), Err(ConstructionError::KeyOutOfRange(_))));
    let too_short = otgrid::PlacementVector(vec![RegionKey::new(0, 0, 0, 0)]);
    assert!(matches!(c.place_all(&too_short), Err(ConstructionError::PlacementLength { .. })));
}

#[test]
fn stats_reports_at_32() {
    let c = Construction::new(32).unwrap();
    let r = region_stats(&c);
    assert!(r.passed(), "{r}");
    // below the asymptotic range the minimum is reported, not enforced
    assert_eq!(r.get("region_points_min").unwrap().status, Status::Report);
    let set = c.place_all(&c.random_placement(2).unwrap()).unwrap();
    let k = kill_stats(&c, set.points());
    assert!(k.passed(), "{k}");
}

#[test]
fn seeds_give_distinct_placements() {
    let c = Construction::new(32).unwrap();
    let seen: HashSet<_> = (1..=20).map(|s| c.random_placement(s).unwrap()).map(|v| v.0).collect();
    assert_eq!(seen.len(), 20);
}
