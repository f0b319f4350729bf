//! Integer partitions, Young-diagram corners and the staircase family `Y_n`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A matrix cell: row 1 is at the top, column 1 at the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive parts.
///
/// Trailing zeros are stripped on construction, so two partitions that
/// differ only in zero padding compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The staircase `(m, m-1, ..., 1)`.
    pub fn staircase(m: usize) -> Self {
        Partition {
            parts: (1..=m).rev().collect(),
        }
    }

    /// Positive parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (1-based); zero past the last positive part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros (or truncated) to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (1..=len).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Side of the Durfee square: the largest `i` with `part(i) >= i`.
    pub fn durfee_rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Corners `(i, part(i))` where `part(i) > part(i+1)`, top to bottom.
    pub fn corners(&self) -> CornerList {
        let cells = (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i, self.part(i)))
            .collect();
        CornerList(cells)
    }

    /// Rebuilds the partition whose corners are exactly `corners`.
    pub fn from_corners(corners: &[Cell]) -> Result<Self> {
        let ok = corners.iter().all(|c| c.row >= 1 && c.col >= 1)
            && corners
                .windows(2)
                .all(|w| w[0].row < w[1].row && w[0].col > w[1].col);
        if !ok {
            return Err(Error::PreconditionViolated(
                "corner rows must increase and columns decrease",
            ));
        }
        let mut parts = Vec::new();
        let mut row = 1;
        for c in corners {
            while row <= c.row {
                parts.push(c.col);
                row += 1;
            }
        }
        Ok(Partition { parts })
    }

    /// Whether the diagram fits inside the staircase `(n-1, ..., 1)`.
    pub fn fits_staircase(&self, n: usize) -> bool {
        self.parts.iter().enumerate().all(|(i, &p)| i + 1 + p <= n)
    }

    /// Diagram containment: `self_i >= other_i` for all `i`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| s >= o)
    }

    /// Cell-wise union of two diagrams.
    pub fn union(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (1..=len).map(|i| self.part(i).max(other.part(i))).collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[7,7,4]`; whitespace around parts is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(alloc::format!("expected [..], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(alloc::format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Corners of a Young diagram; rows strictly increase, columns strictly decrease.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CornerList(pub Vec<Cell>);

impl CornerList {
    pub fn cells(&self) -> &[Cell] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Cell> {
        self.0.iter()
    }
}

/// Every partition of `Y_n` exactly once, in lexicographic order of parts.
///
/// Internally the state is the zero-padded `(n-1)`-tuple; the successor
/// bumps the rightmost part that can grow and clears everything after it.
#[derive(Clone, Debug)]
pub struct StaircasePartitions {
    n: usize,
    current: Option<Vec<usize>>,
}

impl StaircasePartitions {
    pub fn new(n: usize) -> Self {
        let current = (n >= 1).then(|| vec![0; n - 1]);
        StaircasePartitions { n, current }
    }
}

impl Iterator for StaircasePartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let n = self.n;
        let mut succ = cur.clone();
        let mut i = succ.len();
        while i > 0 {
            let idx = i - 1;
            let cap_above = if idx == 0 { usize::MAX } else { succ[idx - 1] };
            let cap = cap_above.min(n - i);
            if succ[idx] < cap {
                succ[idx] += 1;
                succ[i..].iter_mut().for_each(|p| *p = 0);
                self.current = Some(succ);
                break;
            }
            i -= 1;
        }
        Some(Partition::new(cur).expect("staircase state stays weakly decreasing"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(
            part(&[7, 7, 4, 3, 3, 3, 1, 1, 1]).conjugate(),
            part(&[9, 6, 6, 3, 2, 2, 2])
        );
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part(&[1, 1, 1]).conjugate(), part(&[3]));
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(part(&[7, 7, 4, 3, 3, 3, 1, 1, 1]).durfee_rank(), 3);
        assert_eq!(Partition::empty().durfee_rank(), 0);
        assert_eq!(part(&[1]).durfee_rank(), 1);
        assert_eq!(part(&[2, 2]).durfee_rank(), 2);
    }

    #[test]
    fn corner_examples() {
        let c = part(&[7, 7, 4, 3, 3, 3, 1, 1, 1]).corners();
        assert_eq!(
            c.cells(),
            &[
                Cell::new(2, 7),
                Cell::new(3, 4),
                Cell::new(6, 3),
                Cell::new(9, 1)
            ]
        );
        assert!(Partition::empty().corners().is_empty());
        let n = 6;
        let st = Partition::staircase(n - 1).corners();
        let expect: Vec<_> = (1..n).map(|i| Cell::new(i, n - i)).collect();
        assert_eq!(st.cells(), &expect[..]);
    }

    #[test]
    fn corners_round_trip() {
        let lam = part(&[7, 7, 4, 3, 3, 3, 1, 1, 1]);
        assert_eq!(Partition::from_corners(lam.corners().cells()).unwrap(), lam);
        assert!(Partition::from_corners(&[Cell::new(2, 1), Cell::new(1, 3)]).is_err());
    }

    #[test]
    fn staircase_bounds() {
        assert!(part(&[7, 7, 4, 3, 3, 3, 1, 1, 1]).fits_staircase(10));
        assert!(!part(&[3, 1]).fits_staircase(3));
        assert!(part(&[2, 1]).fits_staircase(3));
        assert!(part(&[6, 5, 4]).contains(&part(&[6, 5, 4])));
        assert!(!part(&[6, 5]).contains(&part(&[6, 5, 4])));
        assert_eq!(part(&[3, 1]).union(&part(&[2, 1, 1])), part(&[3, 1, 1]));
    }

    #[test]
    fn text_form() {
        assert_eq!(part(&[7, 7, 4, 0, 0]).to_string(), "[7,7,4]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[7, 7,4]".parse::<Partition>().unwrap(), part(&[7, 7, 4]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("[1,2]".parse::<Partition>(), Err(Error::NotAPartition));
        assert!("7,7".parse::<Partition>().is_err());
    }

    #[test]
    fn staircase_family_sizes() {
        let catalan = [
            1usize, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012,
        ];
        for (n, &c) in catalan.iter().enumerate().skip(1) {
            let all: Vec<_> = StaircasePartitions::new(n).collect();
            assert_eq!(all.len(), c, "n={n}");
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert!(all.iter().all(|l| l.fits_staircase(n)));
        }
    }

    #[test]
    fn staircase_is_self_conjugate() {
        for n in 1..=8 {
            for lam in StaircasePartitions::new(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert!(lam.conjugate().fits_staircase(n));
            }
        }
    }
}
