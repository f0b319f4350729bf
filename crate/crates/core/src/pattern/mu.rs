//! Bijections on `Y_n` that carry avoidance classes onto one another.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cell::OnceCell;

use super::criteria::{lis_of_partition, ls_of_partition};
use crate::error::{Error, Result};
use crate::young::{Partition, StaircasePartitions};

fn check_fits(lam: &Partition, n: usize) -> Result<()> {
    if lam.fits_staircase(n) {
        Ok(())
    } else {
        Err(Error::DoesNotFitStaircase)
    }
}

/// Keeps only the corners of `lam` strictly outside the staircase
/// `(n+1-k, ..., 1)`, i.e. those with `i + j >= n + 3 - k`.
pub fn staircase_union_map(lam: &Partition, n: usize, k: usize) -> Result<Partition> {
    if k < 3 {
        return Err(Error::BadK(k));
    }
    check_fits(lam, n)?;
    if !lam.contains(&Partition::staircase((n + 1).saturating_sub(k))) {
        return Err(Error::PreconditionViolated(
            "partition must contain the staircase (n+1-k,...,1)",
        ));
    }
    let kept: Vec<_> = lam
        .corners()
        .iter()
        .copied()
        .filter(|c| c.row + c.col + k >= n + 3)
        .collect();
    Partition::from_corners(&kept)
}

/// Union with the staircase `(n+1-k, ..., 1)`.
pub fn staircase_union_inverse(lam: &Partition, n: usize, k: usize) -> Result<Partition> {
    if k < 3 {
        return Err(Error::BadK(k));
    }
    check_fits(lam, n)?;
    if lam.corners().iter().any(|c| c.row + c.col + k < n + 3) {
        return Err(Error::PreconditionViolated(
            "every corner must satisfy i+j >= n+3-k",
        ));
    }
    Ok(lam.union(&Partition::staircase((n + 1).saturating_sub(k))))
}

/// The shift-`s` map on `Y_n`, sending the diagram of a permutation with
/// longest increasing subsequence `l >= s - 1` to one with `l_s = l`.
///
/// Most partitions are handled by a direct rule. The few whose image under
/// that rule is not a partition are paired, in lexicographic order and per
/// value of `l`, with the targets the rule leaves uncovered; that pairing is
/// computed once per map on first use.
#[derive(Debug)]
pub struct MuMap {
    n: usize,
    s: usize,
    completion: OnceCell<Completion>,
}

#[derive(Debug, Default)]
struct Completion {
    forward: BTreeMap<Partition, Partition>,
    backward: BTreeMap<Partition, Partition>,
}

impl MuMap {
    pub fn new(n: usize, s: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadArgs("n must be positive"));
        }
        if s < 2 {
            return Err(Error::BadS(s));
        }
        Ok(MuMap {
            n,
            s,
            completion: OnceCell::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn map(&self, lam: &Partition) -> Result<Partition> {
        let (n, s) = (self.n, self.s);
        check_fits(lam, n)?;
        if s == 2 {
            return Ok(mu2(lam, n));
        }
        if lis_of_partition(lam, n) < s {
            return Ok(mu2(lam, n).conjugate());
        }
        match as_partition(&muhat(lam, n, s)) {
            Some(mu) => Ok(mu),
            None => self
                .completion()
                .forward
                .get(lam)
                .cloned()
                .ok_or(Error::PreconditionViolated(
                    "no completion target for this partition",
                )),
        }
    }

    pub fn inverse(&self, mu: &Partition) -> Result<Partition> {
        let (n, s) = (self.n, self.s);
        check_fits(mu, n)?;
        if s == 2 {
            return Ok(inv2(mu, n));
        }
        if ls_of_partition(mu, n, s) < s {
            return Ok(inv2(&mu.conjugate(), n));
        }
        if let Some(lam) = native_inverse(mu, n, s) {
            if lam.fits_staircase(n)
                && lis_of_partition(&lam, n) >= s
                && muhat(&lam, n, s) == mu.padded(n - 1)
            {
                return Ok(lam);
            }
        }
        self.completion()
            .backward
            .get(mu)
            .cloned()
            .ok_or(Error::PreconditionViolated(
                "no completion source for this partition",
            ))
    }

    fn completion(&self) -> &Completion {
        self.completion
            .get_or_init(|| build_completion(self.n, self.s))
    }
}

/// Convenience wrapper around [`MuMap::map`].
pub fn mu_map(lam: &Partition, n: usize, s: usize) -> Result<Partition> {
    MuMap::new(n, s)?.map(lam)
}

/// Convenience wrapper around [`MuMap::inverse`].
pub fn mu_map_inverse(mu: &Partition, n: usize, s: usize) -> Result<Partition> {
    MuMap::new(n, s)?.inverse(mu)
}

fn as_partition(m: &[usize]) -> Option<Partition> {
    Partition::new(m.to_vec()).ok()
}

/// The shift-2 rule: `λ_i + 1` where `λ_i + i < n`, zero otherwise, with
/// the zeros moved to the end.
fn mu2(lam: &Partition, n: usize) -> Partition {
    as_partition(&muhat(lam, n, 2)).expect("shift-2 rule always sorts to a partition")
}

/// Raw image of length `n - 1` before any completion, after the
/// interchange pass that moves entries `>= s-1` ahead of smaller ones.
fn muhat(lam: &Partition, n: usize, s: usize) -> Vec<usize> {
    let head = (n + 1).saturating_sub(s);
    let mut m: Vec<usize> = (1..n)
        .map(|i| {
            let li = lam.part(i);
            if i <= head {
                if li + i + s < n + 2 {
                    li + s - 1
                } else {
                    li + i + s - (n + 2)
                }
            } else {
                li
            }
        })
        .collect();
    let big = s - 1;
    let mut guard = n * n + 1;
    while let Some(i) = (0..m.len().saturating_sub(1)).find(|&i| m[i] < big && m[i + 1] >= big) {
        if m[i] > 0 {
            m[i + 1] += 1;
        }
        m.swap(i, i + 1);
        guard -= 1;
        assert!(guard > 0, "interchange pass failed to terminate");
    }
    m
}

/// Undoes the shift-2 rule.
fn inv2(mu: &Partition, n: usize) -> Partition {
    let mut lh: Vec<usize> = mu.parts().iter().map(|&x| x - 1).collect();
    let zeros = (n - 1).saturating_sub(mu.len());
    for _ in 0..zeros {
        let j = (1..=lh.len()).rev().find(|&j| lh[j - 1] + j + 1 >= n);
        match j {
            Some(j) => lh.insert(j, n - 1 - j),
            None => lh.insert(0, n - 1),
        }
    }
    Partition::new(lh).expect("reinserted parts keep the sequence decreasing")
}

/// Reconstructs the preimage of a partition produced by the direct rule,
/// undoing the interchange pass until the head reads as a partition.
fn native_inverse(mu: &Partition, n: usize, s: usize) -> Option<Partition> {
    let head_len = (n + 1).saturating_sub(s).min(n - 1);
    let padded = mu.padded(n - 1);
    let mut head: Vec<i64> = padded[..head_len].iter().map(|&x| x as i64).collect();
    let tail = &padded[head_len..];
    let (s_, n_) = (s as i64, n as i64);
    let lhat = |h: &[i64]| -> Vec<i64> {
        h.iter()
            .enumerate()
            .map(|(i, &x)| {
                if x >= s_ - 1 {
                    x + 1 - s_
                } else {
                    x - (i as i64 + 1) + n_ + 2 - s_
                }
            })
            .collect()
    };
    let mut guard = n * n + 1;
    loop {
        let lh = lhat(&head);
        match (0..lh.len().saturating_sub(1)).find(|&i| lh[i] < lh[i + 1]) {
            None => {
                let mut parts = Vec::with_capacity(n - 1);
                for v in lh {
                    parts.push(usize::try_from(v).ok()?);
                }
                parts.extend_from_slice(tail);
                return Partition::new(parts).ok();
            }
            Some(i) => {
                if head[i + 1] > 0 {
                    head[i] -= 1;
                }
                head.swap(i, i + 1);
            }
        }
        guard -= 1;
        if guard == 0 {
            return None;
        }
    }
}

fn build_completion(n: usize, s: usize) -> Completion {
    let mut natives = BTreeSet::new();
    let mut sources: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();
    for lam in StaircasePartitions::new(n) {
        let l = lis_of_partition(&lam, n);
        if l < s {
            continue;
        }
        match as_partition(&muhat(&lam, n, s)) {
            Some(mu) => {
                natives.insert(mu);
            }
            None => sources.entry(l).or_default().push(lam),
        }
    }
    let mut targets: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();
    for t in StaircasePartitions::new(n) {
        let l = ls_of_partition(&t, n, s);
        if l >= s && !natives.contains(&t) {
            targets.entry(l).or_default().push(t);
        }
    }
    let mut out = Completion::default();
    for (l, from) in sources {
        let to = targets.remove(&l).unwrap_or_default();
        for (a, b) in from.into_iter().zip(to) {
            out.backward.insert(b.clone(), a.clone());
            out.forward.insert(a, b);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn staircase_union_examples() {
        assert_eq!(
            staircase_union_map(&part(&[2, 1]), 4, 3).unwrap(),
            Partition::empty()
        );
        assert_eq!(
            staircase_union_map(&part(&[3, 1]), 4, 3).unwrap(),
            part(&[3])
        );
        assert_eq!(
            staircase_union_inverse(&part(&[3]), 4, 3).unwrap(),
            part(&[3, 1])
        );
        assert!(staircase_union_map(&part(&[1]), 4, 3).is_err());
        assert!(staircase_union_inverse(&part(&[1]), 4, 3).is_err());
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu_map(&part(&[1]), 3, 2).unwrap(), part(&[2, 1]));
        assert_eq!(mu_map(&part(&[2, 1]), 3, 2).unwrap(), Partition::empty());
        assert_eq!(mu_map(&Partition::empty(), 4, 3).unwrap(), part(&[2, 2]));
        assert_eq!(
            mu_map_inverse(&part(&[2, 2]), 4, 3).unwrap(),
            Partition::empty()
        );
        assert_eq!(mu_map(&part(&[3]), 3, 2), Err(Error::DoesNotFitStaircase));
        assert_eq!(mu_map(&part(&[1]), 3, 1), Err(Error::BadS(1)));
    }

    #[test]
    fn mu_is_a_bijection_with_inverse() {
        for n in 1..=8 {
            for s in 2..=5 {
                let map = MuMap::new(n, s).unwrap();
                let mut seen = BTreeSet::new();
                for lam in StaircasePartitions::new(n) {
                    let mu = map.map(&lam).unwrap();
                    assert!(mu.fits_staircase(n));
                    assert_eq!(map.inverse(&mu).unwrap(), lam, "n={n} s={s}");
                    assert!(seen.insert(mu));
                }
            }
        }
    }

    #[test]
    fn mu_transports_lis_to_ls() {
        for n in 1..=8 {
            for s in 2..=4 {
                for lam in StaircasePartitions::new(n) {
                    let l = lis_of_partition(&lam, n);
                    if l + 1 >= s {
                        let mu = mu_map(&lam, n, s).unwrap();
                        assert_eq!(ls_of_partition(&mu, n, s), l, "n={n} s={s} {lam}");
                    }
                }
            }
        }
    }
}
