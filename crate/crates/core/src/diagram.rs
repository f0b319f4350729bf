//! Rothe diagrams, Fulton ranks, essential sets and dominance.

use alloc::vec;
use alloc::vec::Vec;

use crate::perm::Permutation;
use crate::young::{Cell, Partition};

/// The cells left unshaded after shading south and east of every dot.
///
/// Matrix convention: row 1 at the top, and the dot of row `i` sits in
/// column `p(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    n: usize,
    grid: Vec<bool>,
    cells: Vec<Cell>,
}

impl Diagram {
    fn from_grid(n: usize, grid: Vec<bool>) -> Self {
        let cells = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| Cell::new(i, j)))
            .filter(|c| grid[(c.row - 1) * n + c.col - 1])
            .collect();
        Diagram { n, grid, cells }
    }

    /// Builds a diagram from an explicit cell set; cells outside the grid are dropped.
    pub fn from_cells(n: usize, cells: &[Cell]) -> Self {
        let mut grid = vec![false; n * n];
        for c in cells {
            if (1..=n).contains(&c.row) && (1..=n).contains(&c.col) {
                grid[(c.row - 1) * n + c.col - 1] = true;
            }
        }
        Diagram::from_grid(n, grid)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Membership; anything off the grid is outside.
    pub fn contains(&self, row: usize, col: usize) -> bool {
        (1..=self.n).contains(&row)
            && (1..=self.n).contains(&col)
            && self.grid[(row - 1) * self.n + col - 1]
    }

    pub fn row_len(&self, row: usize) -> usize {
        (1..=self.n).filter(|&j| self.contains(row, j)).count()
    }

    pub fn transpose(&self) -> Diagram {
        let n = self.n;
        let mut grid = vec![false; n * n];
        for c in &self.cells {
            grid[(c.col - 1) * n + c.row - 1] = true;
        }
        Diagram::from_grid(n, grid)
    }

    /// 4-connected components, each listed in row-major order; components
    /// are ordered by their first cell.
    pub fn components(&self) -> Vec<Vec<Cell>> {
        let n = self.n;
        let mut seen = vec![false; n * n];
        let mut out = Vec::new();
        for &start in &self.cells {
            let idx = (start.row - 1) * n + start.col - 1;
            if seen[idx] {
                continue;
            }
            seen[idx] = true;
            let mut comp = Vec::new();
            let mut stack = vec![start];
            while let Some(c) = stack.pop() {
                comp.push(c);
                let nbrs = [
                    (c.row.wrapping_sub(1), c.col),
                    (c.row + 1, c.col),
                    (c.row, c.col.wrapping_sub(1)),
                    (c.row, c.col + 1),
                ];
                for (r, k) in nbrs {
                    if self.contains(r, k) {
                        let j = (r - 1) * n + k - 1;
                        if !seen[j] {
                            seen[j] = true;
                            stack.push(Cell::new(r, k));
                        }
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// A diagram with the rank of every cell and its essential set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedDiagram {
    pub base: Diagram,
    /// Parallel to `base.cells()`.
    ranks: Vec<usize>,
    pub essential: Vec<Cell>,
}

impl RankedDiagram {
    /// Rank of a diagram cell, `None` off the diagram.
    pub fn rank(&self, row: usize, col: usize) -> Option<usize> {
        let at = self.base.cells.binary_search(&Cell::new(row, col)).ok()?;
        Some(self.ranks[at])
    }

    /// `(cell, rank)` pairs in row-major order.
    pub fn ranked_cells(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.base
            .cells
            .iter()
            .copied()
            .zip(self.ranks.iter().copied())
    }

    pub fn rank_sum(&self) -> usize {
        self.ranks.iter().sum()
    }
}

/// Result of the dominance test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dominance {
    /// The diagram is the Young diagram of this partition.
    Dominant(Partition),
    /// The first row-major cell outside the component of `(1,1)`.
    NotDominant { witness: Cell },
}

impl Dominance {
    pub fn partition(self) -> Option<Partition> {
        match self {
            Dominance::Dominant(l) => Some(l),
            Dominance::NotDominant { .. } => None,
        }
    }
}

pub fn build_diagram(p: &Permutation) -> Diagram {
    let n = p.len();
    let inv = p.inverse();
    let mut grid = vec![false; n * n];
    for i in 1..=n {
        for j in 1..p.at(i) {
            if inv.at(j) > i {
                grid[(i - 1) * n + j - 1] = true;
            }
        }
    }
    Diagram::from_grid(n, grid)
}

pub fn rank_diagram(p: &Permutation) -> RankedDiagram {
    let base = build_diagram(p);
    let n = p.len();
    // below[j] = number of dots in rows above the current one with column < j
    let mut below = vec![0usize; n + 2];
    let mut ranks = Vec::with_capacity(base.len());
    let mut cells = base.cells.iter().peekable();
    for i in 1..=n {
        while let Some(c) = cells.next_if(|c| c.row == i) {
            ranks.push(below[c.col]);
        }
        for b in &mut below[p.at(i) + 1..] {
            *b += 1;
        }
    }
    let essential = base
        .cells
        .iter()
        .copied()
        .filter(|c| !base.contains(c.row + 1, c.col) && !base.contains(c.row, c.col + 1))
        .collect();
    RankedDiagram {
        base,
        ranks,
        essential,
    }
}

/// Classifies `p` as dominant (diagram is a Young diagram at the top left)
/// or not. The identity is dominant with the empty partition.
pub fn dominant_partition(p: &Permutation) -> Dominance {
    let d = build_diagram(p);
    let n = p.len();
    let rows: Vec<usize> = (1..=n).map(|i| d.row_len(i)).collect();
    let justified = rows.windows(2).all(|w| w[0] >= w[1])
        && rows
            .iter()
            .enumerate()
            .all(|(i, &len)| (1..=len).all(|j| d.contains(i + 1, j)));
    if justified {
        return Dominance::Dominant(Partition::new(rows).expect("rows checked decreasing"));
    }
    let comps = d.components();
    let origin = comps
        .iter()
        .find(|c| c.first() == Some(&Cell::new(1, 1)))
        .map(Vec::as_slice)
        .unwrap_or(&[]);
    let witness = d
        .cells
        .iter()
        .copied()
        .find(|c| origin.binary_search(c).is_err())
        .unwrap_or(d.cells[0]);
    Dominance::NotDominant { witness }
}

/// Number of 132 occurrences, read off as the sum of ranks over the diagram.
pub fn count_132_by_rank(p: &Permutation) -> usize {
    rank_diagram(p).rank_sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(build_diagram(&perm("4 2 8 3 6 9 7 5 1 10")).len(), 18);
        assert!(build_diagram(&Permutation::identity(5)).is_empty());
        assert_eq!(build_diagram(&perm("1 3 2")).cells(), &[Cell::new(2, 2)]);
    }

    #[test]
    fn rank_examples() {
        let r = rank_diagram(&perm("4 2 8 3 6 9 7 5 1 10"));
        assert_eq!(r.rank(6, 7), Some(4));
        assert_eq!(r.rank(1, 4), None);
        let id = rank_diagram(&Permutation::identity(4));
        assert!(id.base.is_empty() && id.essential.is_empty());
    }

    #[test]
    fn dominance_examples() {
        let lam = Partition::new(alloc::vec![7, 7, 4, 3, 3, 3, 1, 1, 1]).unwrap();
        assert_eq!(
            dominant_partition(&perm("8 9 5 4 6 7 2 3 10 1")),
            Dominance::Dominant(lam)
        );
        assert_eq!(
            dominant_partition(&Permutation::identity(3)),
            Dominance::Dominant(Partition::empty())
        );
        assert_eq!(
            dominant_partition(&perm("1 3 2")),
            Dominance::NotDominant {
                witness: Cell::new(2, 2)
            }
        );
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_132_by_rank(&perm("4 2 8 3 6 9 7 5 1 10")), 20);
        assert_eq!(count_132_by_rank(&perm("8 9 5 4 6 7 2 3 10 1")), 0);
        assert_eq!(count_132_by_rank(&perm("1 3 2")), 1);
    }

    #[test]
    fn components_of_two_blocks() {
        let d = build_diagram(&perm("4 2 8 3 6 9 7 5 1 10"));
        let comps = d.components();
        assert!(comps.len() > 1);
        assert_eq!(comps.iter().map(Vec::len).sum::<usize>(), 18);
    }
}
