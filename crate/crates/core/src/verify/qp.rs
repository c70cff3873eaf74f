use super::{VerificationReport, VerifyError};
use crate::construction::build_qp;
use crate::geom::{orient, Orientation, Point};

fn det3(a: Point, b: Point, c: Point) -> i128 {
    let (ax, ay) = (a.x as i128, a.y as i128);
    (b.x as i128 - ax) * (c.y as i128 - ay) - (b.y as i128 - ay) * (c.x as i128 - ax)
}

/// Checks `Q_p` two ways: every triple has a non-zero orientation, and the
/// Vandermonde product `(b-a)(c-a)(c-b)` is non-zero mod `p`. The integer
/// determinant must also agree with the Vandermonde product mod `p`.
pub fn verify_qp(p: u64) -> Result<VerificationReport, VerifyError> {
    let pts = build_qp(p)?;
    let pm = p as i128;
    let mut triples = 0usize;
    let mut geometric_zero = 0usize;
    let mut algebraic_zero = 0usize;
    let mut disagree = 0usize;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                triples += 1;
                let (a, b, c) = (pts[i], pts[j], pts[k]);
                let geo = orient(a, b, c);
                let (xa, xb, xc) = (a.x as i128, b.x as i128, c.x as i128);
                let vander = ((xb - xa) * (xc - xa) * (xc - xb)).rem_euclid(pm);
                if geo == Orientation::Zero {
                    geometric_zero += 1;
                }
                if vander == 0 {
                    algebraic_zero += 1;
                }
                let det_mod = det3(a, b, c).rem_euclid(pm);
                if (geo == Orientation::Zero) != (vander == 0) || det_mod != vander {
                    disagree += 1;
                }
            }
        }
    }
    let mut report = VerificationReport::new();
    let distinct_x = pts.windows(2).all(|w| w[0].x < w[1].x);
    report.hard("qp_size", pts.len() as u64 == p && distinct_x, pts.len(), p);
    report.report("qp_triples", triples, triples);
    report.count("qp_geometric_nondegenerate", geometric_zero);
    report.count("qp_vandermonde_nonzero", algebraic_zero);
    report.count("qp_oracles_agree", disagree);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let r = verify_qp(7).unwrap();
        assert!(r.passed());
        assert_eq!(r.get("qp_triples").unwrap().measured, 35usize.into());
        let r = verify_qp(2).unwrap();
        assert!(r.passed());
        assert_eq!(r.get("qp_triples").unwrap().measured, 0usize.into());
        assert!(matches!(verify_qp(15), Err(VerifyError::Construction(_))));
    }
}
