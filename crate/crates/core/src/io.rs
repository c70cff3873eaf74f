//! Text file formats: point sets, placement vectors, and signature lists.
//!
//! ```text
//! # otg-points v1
//! n=<n>
//! <x> <y>          (n lines, label i = i-th data line)
//! ```
//!
//! ```text
//! # otg-placement v1
//! n=<n> p=<p>
//! l=<l_index> r=<r_gap> d=<d_index> u=<u_gap>   (one line per entry)
//! ```

use thiserror::Error;

use crate::chirotope::{Chirotope, ChirotopeError, LabeledPointSet};
use crate::construction::{PlacementVector, RegionKey};
use crate::geom::Point;

pub const POINTS_HEADER: &str = "# otg-points v1";
pub const PLACEMENT_HEADER: &str = "# otg-placement v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Points(#[from] ChirotopeError),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, key: &str, line: usize) -> Result<T, FormatError> {
    tok.and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| syntax(line, format!("expected {key}=<value>")))
}

pub fn write_points(set: &LabeledPointSet) -> String {
    let mut s = format!("{POINTS_HEADER}\nn={}\n", set.len());
    for q in set.points() {
        s.push_str(&format!("{} {}\n", q.x, q.y));
    }
    s
}

pub fn read_points(text: &str) -> Result<LabeledPointSet, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, POINTS_HEADER)) => {}
        _ => return Err(syntax(1, format!("expected header '{POINTS_HEADER}'"))),
    }
    let (ln, nl) = lines.next().ok_or_else(|| syntax(2, "missing n= line"))?;
    let n: usize = field(Some(nl), "n", ln)?;
    let mut pts = Vec::with_capacity(n);
    for (ln, l) in lines {
        if pts.len() == n {
            if l.is_empty() {
                continue;
            }
            return Err(syntax(ln, "more points than declared"));
        }
        let (x, y) = l.split_once(' ').ok_or_else(|| syntax(ln, "expected '<x> <y>'"))?;
        let x: i64 = x.parse().map_err(|_| syntax(ln, "bad x coordinate"))?;
        let y: i64 = y.parse().map_err(|_| syntax(ln, "bad y coordinate"))?;
        pts.push(Point::new(x, y));
    }
    if pts.len() != n {
        return Err(syntax(n + 2, format!("declared {n} points, found {}", pts.len())));
    }
    Ok(LabeledPointSet::new(pts)?)
}

/// Placement file contents together with the `n` and `p` it was written for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacementFile {
    pub n: u64,
    pub p: u64,
    pub placement: PlacementVector,
}

pub fn write_placement(n: u64, p: u64, placement: &PlacementVector) -> String {
    let mut s = format!("{PLACEMENT_HEADER}\nn={n} p={p}\n");
    for k in placement.entries() {
        s.push_str(&format!("l={} r={} d={} u={}\n", k.l_index, k.r_gap, k.d_index, k.u_gap));
    }
    s
}

pub fn read_placement(text: &str) -> Result<PlacementFile, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, PLACEMENT_HEADER)) => {}
        _ => return Err(syntax(1, format!("expected header '{PLACEMENT_HEADER}'"))),
    }
    let (ln, head) = lines.next().ok_or_else(|| syntax(2, "missing n= p= line"))?;
    let mut toks = head.split(' ');
    let n = field(toks.next(), "n", ln)?;
    let p = field(toks.next(), "p", ln)?;
    let mut keys = Vec::new();
    for (ln, l) in lines.filter(|(_, l)| !l.is_empty()) {
        let mut t = l.split(' ');
        let key = RegionKey::new(
            field(t.next(), "l", ln)?,
            field(t.next(), "r", ln)?,
            field(t.next(), "d", ln)?,
            field(t.next(), "u", ln)?,
        );
        if t.next().is_some() {
            return Err(syntax(ln, "trailing fields"));
        }
        keys.push(key);
    }
    Ok(PlacementFile { n, p, placement: PlacementVector(keys) })
}

/// One signature per line.
pub fn read_signatures(text: &str) -> Result<Vec<Chirotope>, FormatError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| l.parse::<Chirotope>().map_err(|e| syntax(i + 1, e.to_string())))
        .collect()
}
