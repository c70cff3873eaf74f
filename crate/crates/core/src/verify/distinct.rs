use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use super::{VerificationReport, VerifyError};
use crate::chirotope::{compute_chirotope, first_difference, Chirotope, ChirotopeError, LabeledPointSet};
use crate::construction::derive_params;
use crate::geom::{orient, Orientation};

/// A triple of labels with opposite orientations in two point sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub triple: (usize, usize, usize),
    pub a: Orientation,
    pub b: Orientation,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(f, "witness=({i},{j},{k}) a={} b={}", self.a, self.b)
    }
}

fn chirotope_of(index: usize, set: &LabeledPointSet) -> Result<Chirotope, VerifyError> {
    compute_chirotope(set).map_err(|e| match e {
        ChirotopeError::Degenerate(witness) => VerifyError::Degenerate { index, witness },
        other => VerifyError::Chirotope(other),
    })
}

/// Passes iff every pair of sets has a different chirotope. Sets are
/// numbered from 1 in the failure detail.
pub fn verify_distinct(sets: &[LabeledPointSet]) -> Result<VerificationReport, VerifyError> {
    if let Some(s) = sets.iter().find(|s| s.len() != sets[0].len()) {
        return Err(VerifyError::SizeMismatch(sets[0].len(), s.len()));
    }
    let chis = sets
        .par_iter()
        .enumerate()
        .map(|(i, s)| chirotope_of(i + 1, s))
        .collect::<Result<Vec<_>, _>>()?;
    let mut seen: HashMap<&[u8], usize> = HashMap::new();
    let mut clash = None;
    for (i, c) in chis.iter().enumerate() {
        if let Some(&j) = seen.get(c.bytes()) {
            clash.get_or_insert((j + 1, i + 1));
        } else {
            seen.insert(c.bytes(), i);
        }
    }
    let mut report = VerificationReport::new();
    let check = report.hard("distinct_signatures", clash.is_none(), seen.len(), sets.len());
    if let Some((i, j)) = clash {
        check.with_detail(format!("pair=({i},{j})"));
    }
    Ok(report)
}

/// Checks one point set: non-degenerate and, when `n` has construction
/// parameters, inside the grid with per-axis spread at most `3n^4`.
pub fn verify_point_set(set: &LabeledPointSet) -> (VerificationReport, Option<Chirotope>) {
    let mut report = VerificationReport::new();
    let chi = match compute_chirotope(set) {
        Ok(c) => {
            report.count("nondegenerate", 0);
            Some(c)
        }
        Err(ChirotopeError::Degenerate(w)) => {
            report.count("nondegenerate", 1).with_detail(format!("witness={w}"));
            None
        }
        Err(e) => {
            report.count("nondegenerate", 1).with_detail(format!("error=\"{e}\""));
            None
        }
    };
    if let Ok(params) = derive_params(set.len() as u64) {
        let outside = set.points().iter().filter(|&&q| !params.in_grid(q)).count();
        report.count("inside_grid", outside);
        let spread = |f: fn(&crate::geom::Point) -> i64| {
            let v: Vec<i64> = set.points().iter().map(f).collect();
            v.iter().max().unwrap() - v.iter().min().unwrap()
        };
        let s = spread(|q| q.x).max(spread(|q| q.y));
        report.hard("spread", s <= params.grid_side_bound, s, params.grid_side_bound);
    }
    (report, chi)
}

fn witness_at(ca: &Chirotope, cb: &Chirotope, (i, j, k): (usize, usize, usize)) -> Result<Witness, VerifyError> {
    Ok(Witness { triple: (i, j, k), a: ca.orientation(i, j, k)?, b: cb.orientation(i, j, k)? })
}

fn both_chirotopes(a: &LabeledPointSet, b: &LabeledPointSet) -> Result<(Chirotope, Chirotope), VerifyError> {
    if a.len() != b.len() {
        return Err(VerifyError::SizeMismatch(a.len(), b.len()));
    }
    Ok((chirotope_of(1, a)?, chirotope_of(2, b)?))
}

/// The lexicographically first triple on which `a` and `b` disagree.
pub fn find_order_type_witness(a: &LabeledPointSet, b: &LabeledPointSet) -> Result<Witness, VerifyError> {
    let (ca, cb) = both_chirotopes(a, b)?;
    let t = first_difference(&ca, &cb)?.ok_or(VerifyError::Identical)?;
    witness_at(&ca, &cb, t)
}

/// A disagreeing triple `(i, j, q)` with `i, j` both in `D u U` or both in
/// `L u R` and `q` a free point, for two outputs of the construction with
/// frame prime `p`. Free points are scanned in label order, then frame
/// pairs lexicographically. Falls back to the lexicographically first
/// difference when no such triple exists.
pub fn find_frame_witness(p: usize, a: &LabeledPointSet, b: &LabeledPointSet) -> Result<Witness, VerifyError> {
    let (ca, cb) = both_chirotopes(a, b)?;
    let n = a.len();
    let frame = 4 * p;
    let groups = [(1..=2 * p), (2 * p + 1..=frame)];
    for q in frame + 1..=n {
        for g in &groups {
            for i in g.clone() {
                for j in i + 1..=*g.end() {
                    let (sa, sb) = (orient(a.points()[i - 1], a.points()[j - 1], a.points()[q - 1]),
                                    orient(b.points()[i - 1], b.points()[j - 1], b.points()[q - 1]));
                    if sa != sb {
                        return witness_at(&ca, &cb, (i, j, q));
                    }
                }
            }
        }
    }
    let t = first_difference(&ca, &cb)?.ok_or(VerifyError::Identical)?;
    witness_at(&ca, &cb, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    fn set(v: &[(i64, i64)]) -> LabeledPointSet {
        LabeledPointSet::new(v.iter().map(|&p| Point::from(p)).collect()).unwrap()
    }

    #[test]
    fn hand_witness() {
        let a = set(&[(0, 0), (4, 0), (0, 4), (1, 1)]);
        let b = set(&[(0, 0), (4, 0), (0, 4), (3, 3)]);
        let w = find_order_type_witness(&a, &b).unwrap();
        assert_eq!(w, Witness { triple: (2, 3, 4), a: Orientation::Plus, b: Orientation::Minus });
        assert_eq!(w.to_string(), "witness=(2,3,4) a=+ b=-");
        assert_eq!(find_order_type_witness(&a, &a), Err(VerifyError::Identical));
        let c = set(&[(0, 0), (4, 0), (0, 4)]);
        assert_eq!(find_order_type_witness(&a, &c), Err(VerifyError::SizeMismatch(4, 3)));
    }

    #[test]
    fn distinct_sets() {
        let a = set(&[(0, 0), (4, 0), (0, 4), (1, 1)]);
        let b = set(&[(0, 0), (4, 0), (0, 4), (3, 3)]);
        let r = verify_distinct(&[a.clone(), a.clone()]).unwrap();
        assert!(!r.passed());
        assert_eq!(r.checks[0].detail.as_deref(), Some("pair=(1,2)"));
        assert!(verify_distinct(&[a.clone(), b]).unwrap().passed());
        assert!(verify_distinct(&[a]).unwrap().passed());
        let bad = set(&[(0, 0), (1, 1), (2, 2)]);
        let ok = set(&[(0, 0), (1, 0), (0, 1)]);
        assert!(matches!(verify_distinct(&[ok, bad]), Err(VerifyError::Degenerate { index: 2, .. })));
    }

    #[test]
    fn collinear_set_report() {
        let (r, chi) = verify_point_set(&set(&[(0, 0), (1, 1), (2, 2)]));
        assert!(!r.passed());
        assert!(chi.is_none());
        assert_eq!(r.checks[0].detail.as_deref(), Some("witness=(1,2,3)"));
    }
}
