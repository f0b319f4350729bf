//! Diagram-side criteria for avoiding a second pattern inside `S_n(132)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::avoids_132;
use crate::diagram::dominant_partition;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::young::Partition;

/// The three pattern families that have a corner criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AvoidanceKind {
    /// `k (k-1) ... 1`
    Decreasing,
    /// `1 2 ... k`
    Increasing,
    /// `2 1 3 4 ... k`
    TwoOneThree,
}

impl AvoidanceKind {
    pub const ALL: [AvoidanceKind; 3] = [
        AvoidanceKind::Decreasing,
        AvoidanceKind::Increasing,
        AvoidanceKind::TwoOneThree,
    ];
}

/// The length-`k` pattern of the given family.
pub fn kind_pattern(kind: AvoidanceKind, k: usize) -> Result<Permutation> {
    if k < 2 {
        return Err(Error::BadK(k));
    }
    let values = match kind {
        AvoidanceKind::Decreasing => (1..=k).rev().collect(),
        AvoidanceKind::Increasing => (1..=k).collect(),
        AvoidanceKind::TwoOneThree => [2, 1].into_iter().chain(3..=k).collect(),
    };
    Ok(Permutation::from_vec_unchecked(values))
}

/// `s (s+1) ... k 1 2 ... (s-1)`; `s = 1` is the increasing pattern.
pub fn shifted_pattern(s: usize, k: usize) -> Result<Permutation> {
    if k < 1 {
        return Err(Error::BadK(k));
    }
    if s < 1 || s > k {
        return Err(Error::BadS(s));
    }
    Ok(Permutation::from_vec_unchecked(
        (s..=k).chain(1..s).collect(),
    ))
}

fn partition_of_132(p: &Permutation) -> Result<Partition> {
    if !avoids_132(p) {
        return Err(Error::Not132Avoiding);
    }
    Ok(dominant_partition(p)
        .partition()
        .expect("132-avoiders are dominant"))
}

/// Decides whether the 132-avoider `p` avoids the length-`k` pattern of
/// `kind`, looking only at the corners of its diagram.
pub fn diagram_avoidance_check(p: &Permutation, k: usize, kind: AvoidanceKind) -> Result<bool> {
    let lam = partition_of_132(p)?;
    if k < 3 {
        return Err(Error::BadK(k));
    }
    let n = p.len();
    Ok(match kind {
        AvoidanceKind::Decreasing => lam.corners().len() + 2 <= k,
        AvoidanceKind::Increasing => lam.contains(&Partition::staircase((n + 1).saturating_sub(k))),
        AvoidanceKind::TwoOneThree => lam.corners().iter().all(|c| c.row + c.col + k >= n + 3),
    })
}

/// The `a`, `b` and height sequences of a dominant partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbhProfile {
    pub lambda: Partition,
    /// `a_i = n - (i + λ_i)` over the positive parts.
    pub a: Vec<usize>,
    /// The same over `i = 1..n-1`, with `λ` padded by zeros.
    pub a_bar: Vec<usize>,
    /// `b_i = n - (i + λ'_i)` for `i = 1..λ_1`.
    pub b: Vec<usize>,
    /// `h_i`: longest strictly increasing subsequence of
    /// `b_{λ_i}, b_{λ_i - 1}, ..., b_1` that begins with `b_{λ_i}`.
    pub h: Vec<usize>,
}

pub(crate) fn abh_of_partition(lambda: &Partition, n: usize) -> AbhProfile {
    let conj = lambda.conjugate();
    let a_bar: Vec<usize> = (1..n).map(|i| n - i - lambda.part(i)).collect();
    let a = a_bar[..lambda.len()].to_vec();
    let b: Vec<usize> = (1..=conj.len()).map(|i| n - i - conj.part(i)).collect();
    let h = lambda
        .parts()
        .iter()
        .map(|&li| {
            let seq: Vec<usize> = b[..li].iter().rev().copied().collect();
            let mut best = alloc::vec![1usize; seq.len()];
            for x in (0..seq.len()).rev() {
                for y in x + 1..seq.len() {
                    if seq[y] > seq[x] {
                        best[x] = best[x].max(best[y] + 1);
                    }
                }
            }
            best[0]
        })
        .collect();
    AbhProfile {
        lambda: lambda.clone(),
        a,
        a_bar,
        b,
        h,
    }
}

pub fn abh_profile(p: &Permutation) -> Result<AbhProfile> {
    Ok(abh_of_partition(&partition_of_132(p)?, p.len()))
}

/// `l_s` of the 132-avoider with diagram `lambda`: `s - 1` plus the longest
/// strictly decreasing subsequence of `a` ending at an entry of height at
/// least `s - 1`.
pub(crate) fn ls_from_profile(prof: &AbhProfile, s: usize) -> usize {
    let a = &prof.a;
    let mut ending = alloc::vec![1usize; a.len()];
    let mut best = 0;
    for i in 0..a.len() {
        for j in 0..i {
            if a[j] > a[i] {
                ending[i] = ending[i].max(ending[j] + 1);
            }
        }
        if prof.h[i] + 1 >= s {
            best = best.max(ending[i]);
        }
    }
    s - 1 + best
}

pub(crate) fn ls_of_partition(lambda: &Partition, n: usize, s: usize) -> usize {
    ls_from_profile(&abh_of_partition(lambda, n), s)
}

/// Longest increasing subsequence of the 132-avoider with diagram `lambda`.
pub(crate) fn lis_of_partition(lambda: &Partition, n: usize) -> usize {
    (1..=n)
        .map(|i| n + 1 - i - lambda.part(i))
        .max()
        .unwrap_or(0)
}

/// `l_s` for `s = 2..n` and the partition `L = (l_2 - 1, l_3 - 2, ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedProfile {
    pub l_values: BTreeMap<usize, usize>,
    pub big_l: Partition,
}

impl ShiftedProfile {
    /// `l_s`, defaulting to `s - 1` outside the stored range.
    pub fn l(&self, s: usize) -> usize {
        self.l_values
            .get(&s)
            .copied()
            .unwrap_or(s.saturating_sub(1))
    }
}

pub fn shifted_profile(p: &Permutation) -> Result<ShiftedProfile> {
    let n = p.len();
    let prof = abh_profile(p)?;
    let l_values: BTreeMap<usize, usize> =
        (2..=n).map(|s| (s, ls_from_profile(&prof, s))).collect();
    let parts = l_values.iter().map(|(&s, &l)| l + 1 - s).collect();
    let big_l = Partition::new(parts).expect("l_s + 1 >= l_{s+1} keeps L a partition");
    Ok(ShiftedProfile { l_values, big_l })
}

/// Whether the 132-avoider `p` avoids `s (s+1) ... k 1 ... (s-1)`, decided
/// from `l_s` alone.
pub fn avoids_shifted_via_profile(p: &Permutation, s: usize, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::BadK(k));
    }
    if s < 2 || s > k {
        return Err(Error::BadS(s));
    }
    let prof = abh_profile(p)?;
    Ok(ls_from_profile(&prof, s) < k)
}
