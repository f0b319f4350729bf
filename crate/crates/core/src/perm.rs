//! Permutations in one-line notation and their classical statistics.
//!
//! Positions and values are 1-indexed everywhere in the public surface:
//! `p.at(i)` is the letter in position `i`, and descents, excedances and
//! minima are reported with 1-based positions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1..n}`, `n >= 1`, stored in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

/// Every statistic of a permutation that the diagram constructions read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermStats {
    pub descents: Vec<usize>,
    pub excedances: Vec<usize>,
    pub excedance_letters: Vec<usize>,
    /// `(position, value)` pairs, positions increasing.
    pub ltr_minima: Vec<(usize, usize)>,
    /// `(position, value)` pairs, positions increasing.
    pub rtl_maxima: Vec<(usize, usize)>,
    pub inversions: usize,
    pub code: Vec<usize>,
}

impl Permutation {
    /// Validates that `values` is a rearrangement of `1..=values.len()`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::OutOfRange { value: v as i64, n });
            }
            if seen[v] {
                return Err(Error::DuplicateValue(v));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have at least one letter");
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// `n n-1 ... 1`
    pub fn reversal(n: usize) -> Self {
        assert!(n >= 1, "permutations have at least one letter");
        Permutation {
            values: (1..=n).rev().collect(),
        }
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    /// Size `n`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    /// Lehmer code: `c[i] = #{j > i : p[j] < p[i]}`.
    pub fn code(&self) -> Vec<usize> {
        let v = &self.values;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&w| w < v[i]).count())
            .collect()
    }

    pub fn inversions(&self) -> usize {
        self.code().iter().sum()
    }

    pub fn descents(&self) -> Vec<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Descent bottoms `p[i+1]` for every descent `i`.
    pub fn descent_bottoms(&self) -> Vec<usize> {
        self.descents()
            .into_iter()
            .map(|i| self.at(i + 1))
            .collect()
    }

    pub fn excedances(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.at(i) > i).collect()
    }

    /// Number of positions with `p[i] = i + 1`.
    pub fn fixed_shifts(&self) -> usize {
        (1..self.len()).filter(|&i| self.at(i) == i + 1).count()
    }

    pub fn ltr_minima(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut min = usize::MAX;
        for (i, &v) in self.values.iter().enumerate() {
            if v < min {
                min = v;
                out.push((i + 1, v));
            }
        }
        out
    }

    pub fn rtl_maxima(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut max = 0;
        for (i, &v) in self.values.iter().enumerate().rev() {
            if v > max {
                max = v;
                out.push((i + 1, v));
            }
        }
        out.reverse();
        out
    }

    pub fn longest_increasing(&self) -> usize {
        longest_run_by(&self.values, |a, b| a < b)
    }

    pub fn longest_decreasing(&self) -> usize {
        longest_run_by(&self.values, |a, b| a > b)
    }

    pub fn statistics(&self) -> PermStats {
        let excedances = self.excedances();
        let excedance_letters = excedances.iter().map(|&i| self.at(i)).collect();
        let code = self.code();
        PermStats {
            descents: self.descents(),
            excedances,
            excedance_letters,
            ltr_minima: self.ltr_minima(),
            rtl_maxima: self.rtl_maxima(),
            inversions: code.iter().sum(),
            code,
        }
    }
}

/// Longest subsequence whose consecutive terms satisfy `ord`, O(n^2).
fn longest_run_by(v: &[usize], ord: impl Fn(usize, usize) -> bool) -> usize {
    let mut best = vec![1usize; v.len()];
    for i in 0..v.len() {
        for j in 0..i {
            if ord(v[j], v[i]) && best[j] + 1 > best[i] {
                best[i] = best[j] + 1;
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let n = tokens.len();
        let mut values = Vec::with_capacity(n);
        for tok in tokens {
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("not an integer: {tok:?}")))?;
            if v < 1 || v as u64 > n as u64 {
                return Err(Error::OutOfRange { value: v, n });
            }
            values.push(v as usize);
        }
        Permutation::new(values)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::new(values)
    }
}

/// All permutations of `{1..n}` in lexicographic order.
///
/// [`Permutations::with_first`] restricts the stream to one leading letter,
/// which splits `S_n` into `n` disjoint blocks for parallel sweeps.
#[derive(Clone, Debug)]
pub struct Permutations {
    current: Option<Vec<usize>>,
    fixed: usize,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            current: (n >= 1).then(|| (1..=n).collect()),
            fixed: 0,
        }
    }

    /// Permutations of `{1..n}` whose first letter is `first`.
    pub fn with_first(n: usize, first: usize) -> Self {
        if n == 0 || first == 0 || first > n {
            return Permutations {
                current: None,
                fixed: 1,
            };
        }
        let mut start = Vec::with_capacity(n);
        start.push(first);
        start.extend((1..=n).filter(|&v| v != first));
        Permutations {
            current: Some(start),
            fixed: 1,
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let mut succ = cur.clone();
        if next_lex(&mut succ[self.fixed..]) {
            self.current = Some(succ);
        }
        Some(Permutation { values: cur })
    }
}

/// Advances `v` to its lexicographic successor; false when `v` is the last one.
fn next_lex(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
