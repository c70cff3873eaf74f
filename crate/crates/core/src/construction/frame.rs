use super::params::{build_qp, ConstructionParams};
use super::ConstructionError;
use crate::chirotope::DegeneracyWitness;
use crate::geom::{orient, Orientation, Point};

/// The four stretched copies of `Q_p`: `D` below, `U` above, `L` left and
/// `R` right of the central square.
///
/// `D` and `U` are sorted by x, `L` and `R` by y. Labels follow the same
/// order: `D` is `1..=p`, `U` is `p+1..=2p`, `L` is `2p+1..=3p`, `R` is
/// `3p+1..=4p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub d: Vec<Point>,
    pub u: Vec<Point>,
    pub l: Vec<Point>,
    pub r: Vec<Point>,
}

/// Which copy of `Q_p` a frame label belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    D,
    U,
    L,
    R,
}

impl Frame {
    /// Frame points in label order.
    pub fn points(&self) -> Vec<Point> {
        self.d.iter().chain(&self.u).chain(&self.l).chain(&self.r).copied().collect()
    }

    pub fn p(&self) -> usize {
        self.d.len()
    }

    /// Side of 1-based label, `None` for labels past the frame.
    pub fn side_of(&self, label: usize) -> Option<Side> {
        let p = self.p();
        match label.checked_sub(1)? / p {
            0 => Some(Side::D),
            1 => Some(Side::U),
            2 => Some(Side::L),
            3 => Some(Side::R),
            _ => None,
        }
    }

    /// First collinear triple among the frame points, by brute force.
    pub fn degeneracy(&self) -> Option<DegeneracyWitness> {
        let pts = self.points();
        let n = pts.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if orient(pts[i], pts[j], pts[k]) == Orientation::Zero {
                        return Some(DegeneracyWitness { triple: (i + 1, j + 1, k + 1) });
                    }
                }
            }
        }
        None
    }
}

/// Places the four copies of `Q_p` and checks that no three frame points are
/// collinear.
pub fn build_frame(params: &ConstructionParams) -> Result<Frame, ConstructionError> {
    let frame = build_frame_unchecked(params)?;
    if let Some(w) = frame.degeneracy() {
        return Err(ConstructionError::FrameDegenerate(w));
    }
    Ok(frame)
}

pub(crate) fn build_frame_unchecked(params: &ConstructionParams) -> Result<Frame, ConstructionError> {
    let qp = build_qp(params.p)?;
    let base = params.central_lo();
    let p = params.p as i64;
    let s = params.scale;
    // qp is sorted by x, so every copy comes out sorted along its long axis
    let d = qp.iter().map(|q| Point::new(base + s * q.x, -p + q.y)).collect();
    let u = qp.iter().map(|q| Point::new(base + s * q.x, params.m + q.y)).collect();
    let l = qp.iter().map(|q| Point::new(-p + q.y, base + s * q.x)).collect();
    let r = qp.iter().map(|q| Point::new(params.m + q.y, base + s * q.x)).collect();
    Ok(Frame { d, u, l, r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::derive_params;

    #[test]
    fn frame_n64_examples() {
        let params = derive_params(64).unwrap();
        let f = build_frame(&params).unwrap();
        assert!(f.d.contains(&Point::new(573440, -6)));
        assert!(f.l.contains(&Point::new(-6, 573440)));
        for w in f.r.windows(2) {
            assert_eq!(w[1].y - w[0].y, 49152);
        }
        assert_eq!(f.points().len(), 28);
        assert_eq!(f.side_of(1), Some(Side::D));
        assert_eq!(f.side_of(14), Some(Side::U));
        assert_eq!(f.side_of(15), Some(Side::L));
        assert_eq!(f.side_of(28), Some(Side::R));
        assert_eq!(f.side_of(29), None);
        assert_eq!(f.side_of(0), None);
    }

    #[test]
    fn frame_is_nondegenerate_small_n() {
        for n in [32, 40, 64, 100, 128] {
            let params = derive_params(n).unwrap();
            assert!(build_frame(&params).is_ok(), "n={n}");
        }
    }
}
