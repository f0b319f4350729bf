//! The corner bijection `Φ: S_n(321) → S_n(132)` and the reconstructions
//! it is built from.
//!
//! `Φ` is assembled from three independent arrows: excedances give corners,
//! corners give a partition in `Y_n`, and the partition gives the unique
//! 132-avoider with that diagram.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::dominant_partition;
use crate::error::{Error, Result};
use crate::pattern::{avoids_132, avoids_321};
use crate::perm::Permutation;
use crate::young::{Cell, CornerList, Partition};

/// Corners `(i, n + 1 - p(i))` over the excedances `i` of a 321-avoider.
pub fn excedance_corners(p: &Permutation) -> Result<CornerList> {
    if !avoids_321(p) {
        return Err(Error::Not321Avoiding);
    }
    let n = p.len();
    Ok(CornerList(
        p.excedances()
            .into_iter()
            .map(|i| Cell::new(i, n + 1 - p.at(i)))
            .collect(),
    ))
}

pub fn phi(p: &Permutation) -> Result<Permutation> {
    let corners = excedance_corners(p)?;
    let lam = Partition::from_corners(corners.cells())?;
    permutation_from_partition(&lam, p.len())
}

/// Reads the excedances back off the corners of the diagram of `s`; the
/// remaining positions take the remaining values in increasing order.
pub fn phi_inverse(s: &Permutation) -> Result<Permutation> {
    if !avoids_132(s) {
        return Err(Error::Not132Avoiding);
    }
    let n = s.len();
    let lam = dominant_partition(s)
        .partition()
        .expect("132-avoiders are dominant");
    let mut values = vec![0usize; n];
    let mut used = vec![false; n + 1];
    for c in lam.corners().iter() {
        let letter = n + 1 - c.col;
        values[c.row - 1] = letter;
        used[letter] = true;
    }
    let mut rest = (1..=n).filter(|&v| !used[v]);
    for slot in values.iter_mut().filter(|v| **v == 0) {
        *slot = rest.next().expect("one free value per free position");
    }
    Permutation::new(values)
}

/// The unique 132-avoider whose diagram is `lam`: row `i` has its dot in
/// the `(λ_i + 1)`-th smallest column not used above it.
pub fn permutation_from_partition(lam: &Partition, n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if !lam.fits_staircase(n) {
        return Err(Error::DoesNotFitStaircase);
    }
    let mut free: Vec<usize> = (1..=n).collect();
    let values = (1..=n).map(|i| free.remove(lam.part(i))).collect();
    Ok(Permutation::from_vec_unchecked(values))
}

/// Completes left-to-right minima `(position, value)` to a 132-avoider by
/// placing each remaining value `a`, smallest first, at the leftmost free
/// position to the right of `a - 1`.
pub fn fill_from_minima(minima: &[(usize, usize)], n: usize) -> Result<Permutation> {
    let Some(&(first_pos, _)) = minima.first() else {
        return Err(Error::MalformedMinima("no minima given"));
    };
    if first_pos != 1 {
        return Err(Error::MalformedMinima("position 1 must be a minimum"));
    }
    if minima.last().map(|m| m.1) != Some(1) {
        return Err(Error::MalformedMinima(
            "the last minimum must be the value 1",
        ));
    }
    if !minima
        .windows(2)
        .all(|w| w[0].0 < w[1].0 && w[0].1 > w[1].1)
    {
        return Err(Error::MalformedMinima(
            "positions must increase and values decrease",
        ));
    }
    if minima.iter().any(|&(pos, val)| pos > n || val > n) {
        return Err(Error::MalformedMinima("entry beyond n"));
    }
    let mut values = vec![0usize; n + 1];
    let mut pos_of = vec![0usize; n + 1];
    for &(pos, val) in minima {
        values[pos] = val;
        pos_of[val] = pos;
    }
    for a in 2..=n {
        if pos_of[a] != 0 {
            continue;
        }
        let slot = (pos_of[a - 1] + 1..=n)
            .find(|&q| values[q] == 0)
            .ok_or(Error::Unfillable)?;
        values[slot] = a;
        pos_of[a] = slot;
    }
    let p = Permutation::new(values.split_off(1))?;
    if p.ltr_minima() != minima {
        return Err(Error::Unfillable);
    }
    Ok(p)
}
