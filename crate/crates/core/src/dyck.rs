//! Dyck paths, their height statistics, and the two maps from pattern
//! classes onto them.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bijection::fill_from_minima;
use crate::error::{Error, Result};
use crate::pattern::{avoids_132, avoids_321};
use crate::perm::Permutation;
use crate::young::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// A nonempty balanced sequence of steps that never dips below the axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Height data of a path; `w[i-1]` is the height where step `i` starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Heights {
    pub w: Vec<usize>,
    pub sum_all: usize,
    pub sum_down: usize,
    /// Down-steps that land on the axis.
    pub returns: usize,
    /// Start height of step `n + 1`.
    pub rank_height: usize,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::Empty);
        }
        let mut h: i64 = 0;
        let mut below = None;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < 0 && below.is_none() {
                below = Some(i + 1);
            }
        }
        if h != 0 {
            return Err(Error::Unbalanced);
        }
        if let Some(step) = below {
            return Err(Error::BelowAxis { step });
        }
        Ok(DyckPath { steps })
    }

    /// `U^n D^n`
    pub fn pyramid(n: usize) -> Self {
        assert!(n >= 1, "paths have at least one up-step");
        let mut steps = alloc::vec![Step::Up; n];
        steps.resize(2 * n, Step::Down);
        DyckPath { steps }
    }

    /// `(UD)^n`
    pub fn zigzag(n: usize) -> Self {
        assert!(n >= 1, "paths have at least one up-step");
        DyckPath {
            steps: (0..2 * n)
                .map(|i| if i % 2 == 0 { Step::Up } else { Step::Down })
                .collect(),
        }
    }

    /// Half-length.
    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Maximal runs of equal steps, as `(step, length)`.
    pub fn runs(&self) -> Vec<(Step, usize)> {
        let mut out: Vec<(Step, usize)> = Vec::new();
        for &s in &self.steps {
            match out.last_mut() {
                Some((last, len)) if *last == s => *len += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    /// Run lengths paired as `(ups, downs)`, one pair per peak.
    fn blocks(&self) -> Vec<(usize, usize)> {
        self.runs().chunks(2).map(|c| (c[0].1, c[1].1)).collect()
    }

    pub fn heights(&self) -> Heights {
        let mut w = Vec::with_capacity(self.steps.len());
        let (mut h, mut sum_down, mut returns) = (0usize, 0usize, 0usize);
        for &s in &self.steps {
            w.push(h);
            match s {
                Step::Up => h += 1,
                Step::Down => {
                    sum_down += h;
                    h -= 1;
                    if h == 0 {
                        returns += 1;
                    }
                }
            }
        }
        let sum_all = w.iter().sum();
        let rank_height = w[self.n()];
        Heights {
            w,
            sum_all,
            sum_down,
            returns,
            rank_height,
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.steps.iter().map(|s| s.as_char()).collect();
        f.write_str(&s)
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                other => Err(Error::Parse(alloc::format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

fn push_run(steps: &mut Vec<Step>, step: Step, len: usize) {
    steps.extend(core::iter::repeat_n(step, len));
}

/// For excedances `i_1 < ... < i_e` with `a_k = p(i_k) - 1`, `b_k = i_k`,
/// and `a_0 = b_0 = 0`, `a_{e+1} = b_{e+1} = n`: the path
/// `U^{a_1-a_0} D^{b_1-b_0} ... U^{a_{e+1}-a_e} D^{b_{e+1}-b_e}`.
pub fn psi_bjs(p: &Permutation) -> Result<DyckPath> {
    if !avoids_321(p) {
        return Err(Error::Not321Avoiding);
    }
    let n = p.len();
    let exc = p.excedances();
    let a = core::iter::once(0)
        .chain(exc.iter().map(|&i| p.at(i) - 1))
        .chain([n]);
    let b = core::iter::once(0).chain(exc.iter().copied()).chain([n]);
    let pairs: Vec<(usize, usize)> = a.zip(b).collect();
    let mut steps = Vec::with_capacity(2 * n);
    for w in pairs.windows(2) {
        push_run(&mut steps, Step::Up, w[1].0 - w[0].0);
        push_run(&mut steps, Step::Down, w[1].1 - w[0].1);
    }
    DyckPath::new(steps)
}

pub fn psi_bjs_inverse(path: &DyckPath) -> Result<Permutation> {
    let n = path.n();
    let blocks = path.blocks();
    let mut values = alloc::vec![0usize; n];
    let mut used = alloc::vec![false; n + 1];
    let (mut a, mut b) = (0, 0);
    for &(ups, downs) in &blocks[..blocks.len() - 1] {
        a += ups;
        b += downs;
        values[b - 1] = a + 1;
        used[a + 1] = true;
    }
    let mut rest = (1..=n).filter(|&v| !used[v]);
    for slot in values.iter_mut().filter(|v| **v == 0) {
        *slot = rest.next().expect("one free value per free position");
    }
    Permutation::new(values)
}

/// For left-to-right minima `c_1 > ... > c_{e+1}` with `c_0 = n + 1`, and
/// `d_k` one more than the number of letters between consecutive minima:
/// the path `U^{c_0-c_1} D^{d_1} ... U^{c_e-c_{e+1}} D^{d_{e+1}}`.
pub fn psi_k(p: &Permutation) -> Result<DyckPath> {
    if !avoids_132(p) {
        return Err(Error::Not132Avoiding);
    }
    let n = p.len();
    let minima = p.ltr_minima();
    let mut steps = Vec::with_capacity(2 * n);
    let mut prev_val = n + 1;
    for (k, &(pos, val)) in minima.iter().enumerate() {
        let next_pos = minima.get(k + 1).map_or(n + 1, |m| m.0);
        push_run(&mut steps, Step::Up, prev_val - val);
        push_run(&mut steps, Step::Down, next_pos - pos);
        prev_val = val;
    }
    DyckPath::new(steps)
}

pub fn psi_k_inverse(path: &DyckPath) -> Result<Permutation> {
    let n = path.n();
    let mut minima = Vec::new();
    let (mut val, mut pos) = (n + 1, 1);
    for (ups, downs) in path.blocks() {
        val -= ups;
        minima.push((pos, val));
        pos += downs;
    }
    fill_from_minima(&minima, n)
}

/// `λ_i` is the number of up-steps after the `i`-th down-step.
pub fn path_partition(path: &DyckPath) -> Partition {
    let n = path.n();
    let mut ups_after = n;
    let mut parts = Vec::with_capacity(n);
    for &s in path.steps() {
        match s {
            Step::Up => ups_after -= 1,
            Step::Down => parts.push(ups_after),
        }
    }
    parts.truncate(n.saturating_sub(1));
    Partition::new(parts).expect("up-steps remaining only decrease along the path")
}

pub fn partition_path(lam: &Partition, n: usize) -> Result<DyckPath> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if !lam.fits_staircase(n) {
        return Err(Error::DoesNotFitStaircase);
    }
    let mut steps = Vec::with_capacity(2 * n);
    let mut ups = 0;
    for i in 1..=n {
        let target = n - lam.part(i);
        push_run(&mut steps, Step::Up, target - ups);
        ups = target;
        steps.push(Step::Down);
    }
    DyckPath::new(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    const EX: &str = "UUUDDUUUDUDDDUUDDDUD";

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn path_validation() {
        assert_eq!("UUDD".parse::<DyckPath>().unwrap().n(), 2);
        assert_eq!(
            "UDDU".parse::<DyckPath>(),
            Err(Error::BelowAxis { step: 3 })
        );
        assert_eq!("UUD".parse::<DyckPath>(), Err(Error::Unbalanced));
        assert_eq!("".parse::<DyckPath>(), Err(Error::Empty));
        assert!(matches!("UXD".parse::<DyckPath>(), Err(Error::Parse(_))));
        let ex: DyckPath = EX.parse().unwrap();
        assert_eq!(ex.n(), 10);
        assert_eq!(ex.to_string(), EX);
    }

    #[test]
    fn height_examples() {
        let h = EX.parse::<DyckPath>().unwrap().heights();
        assert_eq!(h.returns, 2);
        assert_eq!(h.w[10], 4);
        assert_eq!(h.rank_height, 4);
        for n in 1..=6 {
            assert_eq!(DyckPath::pyramid(n).heights().sum_all, n * n);
            let z = DyckPath::zigzag(n).heights();
            assert_eq!((z.returns, z.sum_all), (n, n));
        }
    }

    #[test]
    fn psi_examples() {
        let ex: DyckPath = EX.parse().unwrap();
        assert_eq!(psi_bjs(&perm("1 4 7 2 3 8 5 6 10 9")).unwrap(), ex);
        assert_eq!(psi_k(&perm("8 9 5 4 6 7 2 3 10 1")).unwrap(), ex);
        assert_eq!(psi_bjs_inverse(&ex).unwrap(), perm("1 4 7 2 3 8 5 6 10 9"));
        assert_eq!(psi_k_inverse(&ex).unwrap(), perm("8 9 5 4 6 7 2 3 10 1"));
        for n in 1..=7 {
            let id = Permutation::identity(n);
            assert_eq!(psi_bjs(&id).unwrap(), DyckPath::pyramid(n));
            assert_eq!(psi_k(&id).unwrap(), DyckPath::pyramid(n));
            let cyc = Permutation::new((2..=n).chain([1]).collect()).unwrap();
            assert_eq!(psi_bjs(&cyc).unwrap(), DyckPath::zigzag(n));
            assert_eq!(
                psi_k(&Permutation::reversal(n)).unwrap(),
                DyckPath::zigzag(n)
            );
        }
        assert_eq!(psi_k(&perm("1 3 2")), Err(Error::Not132Avoiding));
        assert_eq!(psi_bjs(&perm("3 2 1")), Err(Error::Not321Avoiding));
    }

    #[test]
    fn partition_examples() {
        let lam = Partition::new(alloc::vec![7, 7, 4, 3, 3, 3, 1, 1, 1]).unwrap();
        let ex: DyckPath = EX.parse().unwrap();
        assert_eq!(path_partition(&ex), lam);
        assert_eq!(partition_path(&lam, 10).unwrap(), ex);
        assert_eq!(path_partition(&DyckPath::pyramid(5)), Partition::empty());
        assert_eq!(
            path_partition(&DyckPath::zigzag(5)),
            Partition::staircase(4)
        );
        assert_eq!(partition_path(&lam, 9), Err(Error::DoesNotFitStaircase));
    }
}
