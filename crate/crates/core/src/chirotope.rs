//! Labeled chirotopes: computation, bit-packed signatures, and comparison.
//!
//! A [`Chirotope`] stores one bit per sorted label triple `i < j < k`, in
//! lexicographic order, most significant bit first. Only non-degenerate
//! chirotopes are representable; a collinear triple surfaces as
//! [`ChirotopeError::Degenerate`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::geom::{orient, Orientation, Point};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChirotopeError {
    #[error("degenerate point set: labels {0} are collinear")]
    Degenerate(DegeneracyWitness),
    #[error("invalid label triple ({0}, {1}, {2}) for n={3}")]
    BadLabel(usize, usize, usize, usize),
    #[error("chirotope sizes differ: n={0} vs n={1}")]
    SizeMismatch(usize, usize),
    #[error("at least 3 points are required, got {0}")]
    TooFewPoints(usize),
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("malformed signature: {0}")]
    BadSignature(String),
}

/// A collinear triple of 1-based labels, `i < j < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegeneracyWitness {
    pub triple: (usize, usize, usize),
}

impl fmt::Display for DegeneracyWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(f, "({i},{j},{k})")
    }
}

/// Points labeled `1..=n` by position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledPointSet {
    points: Vec<Point>,
}

impl LabeledPointSet {
    /// Fails if two points coincide.
    pub fn new(points: Vec<Point>) -> Result<Self, ChirotopeError> {
        let mut sorted: Vec<(Point, usize)> = points.iter().copied().zip(1..).collect();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                let (a, b) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
                return Err(ChirotopeError::DuplicatePoint(a, b));
            }
        }
        Ok(LabeledPointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Point with 1-based label `label`.
    pub fn get(&self, label: usize) -> Option<Point> {
        label.checked_sub(1).and_then(|i| self.points.get(i)).copied()
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }
}

fn choose2(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

fn choose3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Number of sorted triples over `n` labels.
pub fn triple_count(n: usize) -> usize {
    choose3(n)
}

/// Lexicographic rank of the 0-based sorted triple `i < j < k`.
pub(crate) fn triple_rank(n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < j && j < k && k < n);
    choose3(n) - choose3(n - i) + choose2(n - 1 - i) - choose2(n - j) + (k - j - 1)
}

/// Inverse of [`triple_rank`].
pub(crate) fn triple_unrank(n: usize, mut rank: usize) -> (usize, usize, usize) {
    let mut i = 0;
    loop {
        let block = choose2(n - 1 - i);
        if rank < block {
            break;
        }
        rank -= block;
        i += 1;
    }
    let mut j = i + 1;
    loop {
        let block = n - 1 - j;
        if rank < block {
            break;
        }
        rank -= block;
        j += 1;
    }
    (i, j, j + 1 + rank)
}

/// Non-degenerate labeled chirotope packed into `ceil(C(n,3)/8)` bytes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chirotope {
    n: usize,
    bits: Vec<u8>,
}

impl Chirotope {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bits
    }

    /// Builds a chirotope directly from packed bytes.
    pub fn from_bytes(n: usize, bits: Vec<u8>) -> Result<Self, ChirotopeError> {
        let total = triple_count(n);
        if n < 3 {
            return Err(ChirotopeError::TooFewPoints(n));
        }
        if bits.len() != total.div_ceil(8) {
            return Err(ChirotopeError::BadSignature(format!(
                "expected {} bytes for n={n}, got {}",
                total.div_ceil(8),
                bits.len()
            )));
        }
        let pad = bits.len() * 8 - total;
        if pad > 0 && bits[bits.len() - 1] & ((1u8 << pad) - 1) != 0 {
            return Err(ChirotopeError::BadSignature("nonzero padding bits".into()));
        }
        Ok(Chirotope { n, bits })
    }

    fn bit(&self, rank: usize) -> bool {
        self.bits[rank / 8] & (0x80 >> (rank % 8)) != 0
    }

    /// Flips the stored sign of one sorted triple. Used to build mutated
    /// chirotopes in tests.
    pub fn flip(&mut self, i: usize, j: usize, k: usize) -> Result<(), ChirotopeError> {
        let (rank, _) = self.sorted_rank(i, j, k)?;
        self.bits[rank / 8] ^= 0x80 >> (rank % 8);
        Ok(())
    }

    fn sorted_rank(&self, i: usize, j: usize, k: usize) -> Result<(usize, bool), ChirotopeError> {
        let n = self.n;
        let bad = || ChirotopeError::BadLabel(i, j, k, n);
        if [i, j, k].iter().any(|&l| l == 0 || l > n) || i == j || j == k || i == k {
            return Err(bad());
        }
        let mut t = [i - 1, j - 1, k - 1];
        let mut odd = false;
        // three-element bubble sort tracking parity
        for (a, b) in [(0, 1), (1, 2), (0, 1)] {
            if t[a] > t[b] {
                t.swap(a, b);
                odd = !odd;
            }
        }
        Ok((triple_rank(n, t[0], t[1], t[2]), odd))
    }

    /// Orientation of labels `(i, j, k)` in any order.
    pub fn orientation(&self, i: usize, j: usize, k: usize) -> Result<Orientation, ChirotopeError> {
        let (rank, odd) = self.sorted_rank(i, j, k)?;
        let o = if self.bit(rank) { Orientation::Plus } else { Orientation::Minus };
        Ok(if odd { -o } else { o })
    }

    /// `n=<n>:<lowercase hex>` text form.
    pub fn signature_hex(&self) -> String {
        let mut s = format!("n={}:", self.n);
        for b in &self.bits {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

impl fmt::Display for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.signature_hex())
    }
}

impl FromStr for Chirotope {
    type Err = ChirotopeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |m: &str| ChirotopeError::BadSignature(m.to_string());
        let rest = s.trim().strip_prefix("n=").ok_or_else(|| bad("missing n= prefix"))?;
        let (n, hex) = rest.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let n: usize = n.parse().map_err(|_| bad("bad point count"))?;
        if hex.len() % 2 != 0 || !hex.bytes().all(|c| c.is_ascii_digit() || (b'a'..=b'f').contains(&c)) {
            return Err(bad("payload is not lowercase hex"));
        }
        let bits = (0..hex.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&hex[i..i + 2], 16).map_err(|_| bad("bad hex digit")))
            .collect::<Result<Vec<u8>, _>>()?;
        Chirotope::from_bytes(n, bits)
    }
}

/// Computes the labeled chirotope of `set`, failing on the first
/// lexicographic collinear triple.
pub fn compute_chirotope(set: &LabeledPointSet) -> Result<Chirotope, ChirotopeError> {
    let pts = set.points();
    let n = pts.len();
    if n < 3 {
        return Err(ChirotopeError::TooFewPoints(n));
    }
    let mut bits = vec![0u8; triple_count(n).div_ceil(8)];
    let mut rank = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                match orient(pts[i], pts[j], pts[k]) {
                    Orientation::Plus => bits[rank / 8] |= 0x80 >> (rank % 8),
                    Orientation::Minus => {}
                    Orientation::Zero => {
                        return Err(ChirotopeError::Degenerate(DegeneracyWitness {
                            triple: (i + 1, j + 1, k + 1),
                        }))
                    }
                }
                rank += 1;
            }
        }
    }
    Ok(Chirotope { n, bits })
}

/// Lexicographically first sorted triple (1-based) on which `a` and `b`
/// disagree.
pub fn first_difference(a: &Chirotope, b: &Chirotope) -> Result<Option<(usize, usize, usize)>, ChirotopeError> {
    if a.n != b.n {
        return Err(ChirotopeError::SizeMismatch(a.n, b.n));
    }
    let Some((byte, diff)) = a.bits.iter().zip(&b.bits).map(|(x, y)| x ^ y).enumerate().find(|(_, d)| *d != 0)
    else {
        return Ok(None);
    };
    let rank = byte * 8 + diff.leading_zeros() as usize;
    let (i, j, k) = triple_unrank(a.n, rank);
    Ok(Some((i + 1, j + 1, k + 1)))
}
