use rayon::prelude::*;

use super::frame::{build_frame, Frame};
use super::params::{derive_params, ConstructionParams};
use super::region::{all_keys, iterate_region_points, region_from_key, Region, RegionKey};
use super::ConstructionError;
use crate::chirotope::LabeledPointSet;
use crate::geom::{orient, Orientation, Point};
use crate::rng::SplitMix;

/// Maximum draws per step in [`Construction::random_placement`].
pub const MAX_RESAMPLES: usize = 1000;

/// The region choice for each of the `n - 4p` free points, in label order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlacementVector(pub Vec<RegionKey>);

impl PlacementVector {
    pub fn entries(&self) -> &[RegionKey] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// First pair `(i, j)`, 1-based and `i < j`, of `placed` collinear with `q`.
pub fn is_killed(q: Point, placed: &[Point]) -> Option<(usize, usize)> {
    for (i, &a) in placed.iter().enumerate() {
        for (j, &b) in placed.iter().enumerate().skip(i + 1) {
            if orient(a, b, q) == Orientation::Zero {
                return Some((i + 1, j + 1));
            }
        }
    }
    None
}

/// Lexicographically smallest grid point of `region` that can join `placed`
/// without creating a collinear triple. `None` means the region is dead.
pub fn find_alive_point(region: &Region, placed: &[Point]) -> Option<Point> {
    iterate_region_points(region).find(|q| !placed.contains(q) && is_killed(*q, placed).is_none())
}

/// Parameters and frame for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub params: ConstructionParams,
    pub frame: Frame,
}

impl Construction {
    pub fn new(n: u64) -> Result<Self, ConstructionError> {
        let params = derive_params(n)?;
        let frame = build_frame(&params)?;
        Ok(Construction { params, frame })
    }

    pub fn p(&self) -> usize {
        self.params.p as usize
    }

    pub fn region(&self, key: RegionKey) -> Result<Region, ConstructionError> {
        region_from_key(&self.frame, key)
    }

    pub fn keys(&self) -> impl Iterator<Item = RegionKey> {
        all_keys(&self.params)
    }

    /// All regions in flat-index order.
    pub fn regions(&self) -> Vec<Region> {
        let keys: Vec<RegionKey> = self.keys().collect();
        keys.par_iter().map(|&k| self.region(k).expect("catalog keys are valid")).collect()
    }

    pub fn start(&self) -> PlacementState<'_> {
        PlacementState { construction: self, placed: self.frame.points() }
    }

    /// Places one point per entry of `placement`, each at the smallest alive
    /// grid point of its region.
    pub fn place_all(&self, placement: &PlacementVector) -> Result<LabeledPointSet, ConstructionError> {
        let expected = self.params.extras();
        if placement.len() != expected {
            return Err(ConstructionError::PlacementLength { expected, got: placement.len() });
        }
        let mut state = self.start();
        for &key in placement.entries() {
            state.place(key)?;
        }
        Ok(state.into_point_set())
    }

    /// Draws `n - 4p` region keys from a SplitMix64 stream seeded with
    /// `seed` (`key = next % region_count`), redrawing when the region is
    /// dead at its step.
    pub fn random_placement(&self, seed: u64) -> Result<PlacementVector, ConstructionError> {
        let mut rng = SplitMix::new(seed);
        let count = self.params.region_count() as u64;
        let mut state = self.start();
        let mut keys = Vec::with_capacity(self.params.extras());
        for step in 0..self.params.extras() {
            let mut chosen = None;
            for _ in 0..MAX_RESAMPLES {
                let key = RegionKey::from_flat((rng.next_u64() % count) as usize, self.p());
                match state.place(key) {
                    Ok(_) => {
                        chosen = Some(key);
                        break;
                    }
                    Err(ConstructionError::RegionDead { .. }) => continue,
                    Err(e) => return Err(e),
                }
            }
            keys.push(chosen.ok_or(ConstructionError::ExhaustedResampling { step })?);
        }
        Ok(PlacementVector(keys))
    }

    /// Number of regions that still hold a grid point addable to `placed`.
    pub fn alive_count(&self, placed: &[Point]) -> usize {
        let keys: Vec<RegionKey> = self.keys().collect();
        keys.par_iter()
            .filter(|&&k| {
                let r = self.region(k).expect("catalog keys are valid");
                find_alive_point(&r, placed).is_some()
            })
            .count()
    }
}

/// Points placed so far: the frame followed by the extras in label order.
#[derive(Debug, Clone)]
pub struct PlacementState<'a> {
    construction: &'a Construction,
    placed: Vec<Point>,
}

impl PlacementState<'_> {
    pub fn placed(&self) -> &[Point] {
        &self.placed
    }

    /// Points placed so far, frame included.
    pub fn k(&self) -> usize {
        self.placed.len()
    }

    pub fn extras(&self) -> &[Point] {
        &self.placed[self.construction.params.frame_size()..]
    }

    /// Adds the smallest alive point of region `key`.
    pub fn place(&mut self, key: RegionKey) -> Result<Point, ConstructionError> {
        let step = self.k() - self.construction.params.frame_size();
        let region = self.construction.region(key)?;
        let q = find_alive_point(&region, &self.placed).ok_or(ConstructionError::RegionDead { step, key })?;
        self.placed.push(q);
        Ok(q)
    }

    pub fn into_point_set(self) -> LabeledPointSet {
        LabeledPointSet::new(self.placed).expect("alive points never repeat a placed point")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chirotope::compute_chirotope;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&p| Point::from(p)).collect()
    }

    #[test]
    fn killed_examples() {
        assert_eq!(is_killed(Point::new(1, 1), &pts(&[(0, 0), (2, 2)])), Some((1, 2)));
        assert_eq!(is_killed(Point::new(1, 2), &pts(&[(0, 0), (2, 2)])), None);
        assert_eq!(is_killed(Point::new(5, 5), &pts(&[(0, 0)])), None);
        assert_eq!(is_killed(Point::new(5, 5), &[]), None);
        assert_eq!(is_killed(Point::new(3, 0), &pts(&[(9, 9), (0, 0), (1, 0)])), Some((2, 3)));
    }

    #[test]
    fn alive_point_without_placed_is_minimum() {
        let c = Construction::new(32).unwrap();
        let r = c.region(RegionKey::new(1, 2, 3, 1)).unwrap();
        assert_eq!(find_alive_point(&r, &[]), iterate_region_points(&r).next());
    }

    #[test]
    fn dead_region() {
        let c = Construction::new(32).unwrap();
        let r = c.region(RegionKey::new(0, 0, 0, 0)).unwrap();
        // a horizontal line through every row of the region kills all of it
        let (x0, _) = r.column_range();
        let ys: Vec<i64> = iterate_region_points(&r).map(|q| q.y).collect();
        let (lo, hi) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
        let mut placed = Vec::new();
        for y in lo..=hi {
            placed.push(Point::new(x0 - 10, y));
            placed.push(Point::new(x0 - 20, y));
        }
        assert_eq!(find_alive_point(&r, &placed), None);
    }

    #[test]
    fn frame_only_alive_point_is_near_left_edge() {
        let c = Construction::new(64).unwrap();
        let r = c.region(RegionKey::new(0, 0, 0, 0)).unwrap();
        let q = find_alive_point(&r, c.frame.points().as_slice()).unwrap();
        let (x0, _) = r.column_range();
        let first_col = iterate_region_points(&r).next().unwrap().x;
        assert!(q.x <= first_col + 1, "{q} vs first column {first_col} (range start {x0})");
    }

    #[test]
    fn place_all_is_nondegenerate_n32() {
        let c = Construction::new(32).unwrap();
        let v = c.random_placement(7).unwrap();
        assert_eq!(v.len(), 12);
        let set = c.place_all(&v).unwrap();
        assert_eq!(set.len(), 32);
        assert!(compute_chirotope(&set).is_ok());
        assert!(set.points().iter().all(|&q| c.params.in_grid(q)));
    }

    #[test]
    fn wrong_length_is_rejected() {
        let c = Construction::new(32).unwrap();
        let v = PlacementVector(vec![RegionKey::new(0, 0, 0, 0)]);
        assert_eq!(c.place_all(&v), Err(ConstructionError::PlacementLength { expected: 12, got: 1 }));
    }

    #[test]
    fn random_placement_is_deterministic() {
        let c = Construction::new(64).unwrap();
        let a = c.random_placement(1).unwrap();
        assert_eq!(a, c.random_placement(1).unwrap());
        assert_ne!(a, c.random_placement(2).unwrap());
        assert!(a.entries().iter().all(|k| k.flat_index(7) < 1764));
    }

    #[test]
    fn same_region_twice_gives_distinct_points() {
        let c = Construction::new(32).unwrap();
        let key = RegionKey::new(2, 2, 2, 2);
        let v = PlacementVector(vec![key; 12]);
        let set = c.place_all(&v).unwrap();
        assert!(compute_chirotope(&set).is_ok());
    }
}
