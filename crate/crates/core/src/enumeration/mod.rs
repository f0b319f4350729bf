//! Closed-form counts, statistic distributions, and the harness that checks
//! each counting identity against exhaustive enumeration.

mod identities;

pub use identities::{identities, verify_identities, Identity, IdentityOutcome, Report};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::diagram::dominant_partition;
use crate::dyck::{psi_bjs, psi_k};
use crate::error::{Error, Result};
use crate::pattern::{avoids_132, avoids_321, enumerate_avoiders_capped, DEFAULT_CAP};
use crate::perm::Permutation;

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `C_n = C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// `N(n, k) = C(n, k) C(n, k-1) / n`; zero outside `1 <= k <= n`.
pub fn narayana(n: usize, k: usize) -> BigUint {
    if n == 0 || k == 0 || k > n {
        return BigUint::zero();
    }
    binomial(n, k) * binomial(n, k - 1) / BigUint::from(n)
}

/// `b(n, k) = C(n+k, n) - C(n+k, n+1)` for `k <= n`.
pub fn ballot(n: usize, k: usize) -> Result<BigUint> {
    if k > n {
        return Err(Error::BadArgs("ballot numbers need k <= n"));
    }
    Ok(binomial(n + k, n) - binomial(n + k, n + 1))
}

/// Partitions in `Y_n` with Durfee rank `k`:
/// `((n + 1 - 2k) / (n + 1 - k) * C(n, k))^2`.
pub fn rank_count(n: usize, k: usize) -> Result<BigUint> {
    if 2 * k > n {
        return Err(Error::BadArgs("rank counts need k <= n/2"));
    }
    let num = BigUint::from(n + 1 - 2 * k) * binomial(n, k);
    let den = BigUint::from(n + 1 - k);
    let root = &num / &den;
    assert!((&root * &den) == num, "rank count root is not integral");
    Ok(&root * &root)
}

/// `q(n, k) = q(n-1, k-1) + q(n-1, k)` with `q(n, 0) = 1`, supported on
/// `0 <= k <= n/2`.
pub fn q_triangle(n: usize, k: usize) -> Result<BigUint> {
    if 2 * k > n {
        return Err(Error::BadArgs("q(n,k) needs k <= n/2"));
    }
    let mut row = alloc::vec![BigUint::one()];
    for m in 1..=n {
        let width = m / 2 + 1;
        let next = (0..width)
            .map(|j| match j {
                0 => BigUint::one(),
                _ => &row[j - 1] + row.get(j).cloned().unwrap_or_default(),
            })
            .collect();
        row = next;
    }
    Ok(row[k].clone())
}

/// The closed forms, addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    Catalan,
    Narayana,
    Ballot,
    RankCount,
    QTriangle,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 5] = [
        ClosedForm::Catalan,
        ClosedForm::Narayana,
        ClosedForm::Ballot,
        ClosedForm::RankCount,
        ClosedForm::QTriangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::Catalan => "catalan",
            ClosedForm::Narayana => "narayana",
            ClosedForm::Ballot => "ballot",
            ClosedForm::RankCount => "rank_count",
            ClosedForm::QTriangle => "q_triangle",
        }
    }

    /// Number of integer arguments.
    pub fn arity(self) -> usize {
        match self {
            ClosedForm::Catalan => 1,
            _ => 2,
        }
    }

    pub fn eval(self, args: &[usize]) -> Result<BigUint> {
        if args.len() != self.arity() {
            return Err(Error::BadArgs("wrong number of arguments"));
        }
        match self {
            ClosedForm::Catalan => Ok(catalan(args[0])),
            ClosedForm::Narayana => Ok(narayana(args[0], args[1])),
            ClosedForm::Ballot => ballot(args[0], args[1]),
            ClosedForm::RankCount => rank_count(args[0], args[1]),
            ClosedForm::QTriangle => q_triangle(args[0], args[1]),
        }
    }

    /// The natural row of values for size `n`, as `(k, value)`.
    pub fn row(self, n: usize) -> Vec<(usize, BigUint)> {
        let ks: Vec<usize> = match self {
            ClosedForm::Catalan => (n..=n).collect(),
            ClosedForm::Narayana => (1..=n).collect(),
            ClosedForm::Ballot => (0..=n).collect(),
            ClosedForm::RankCount | ClosedForm::QTriangle => (0..=n / 2).collect(),
        };
        ks.into_iter()
            .map(|k| {
                let args: &[usize] = if self.arity() == 1 { &[n] } else { &[n, k] };
                (k, self.eval(args).expect("row stays in range"))
            })
            .collect()
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClosedForm::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(alloc::format!("unknown formula {s:?}")))
    }
}

/// Statistic value to count.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StatisticTable {
    counts: BTreeMap<usize, u64>,
}

impl StatisticTable {
    pub fn new() -> Self {
        StatisticTable::default()
    }

    pub fn add(&mut self, value: usize) {
        *self.counts.entry(value).or_insert(0) += 1;
    }

    pub fn merge(mut self, other: StatisticTable) -> StatisticTable {
        for (v, c) in other.counts {
            *self.counts.entry(v).or_insert(0) += c;
        }
        self
    }

    pub fn get(&self, value: usize) -> u64 {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }

    pub fn from_counts(pairs: impl IntoIterator<Item = (usize, u64)>) -> Self {
        let counts = pairs.into_iter().filter(|&(_, c)| c > 0).collect();
        StatisticTable { counts }
    }
}

impl FromIterator<usize> for StatisticTable {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut t = StatisticTable::new();
        iter.into_iter().for_each(|v| t.add(v));
        t
    }
}

/// `{0:1,1:6,2:6,3:1}`
impl fmt::Display for StatisticTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}:{c}")?;
        }
        f.write_str("}")
    }
}

/// Permutation statistics that have a distribution identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    Des,
    Exc,
    /// Returns of the associated Dyck path (`Ψ_K` on 132-avoiders, `Ψ_BJS`
    /// on 321-avoiders).
    Returns,
    /// Durfee rank of the diagram of a 132-avoider.
    DurfeeRank,
    RtlMaxima,
    /// Number of `i` with `p(i) = i + 1`.
    FixedShift,
    /// Corners of the diagram of a 132-avoider.
    Corners,
    /// Corners `(i, j)` with `i + j = n` of the diagram of a 132-avoider.
    DiagonalCorners,
}

impl Statistic {
    pub const ALL: [Statistic; 8] = [
        Statistic::Des,
        Statistic::Exc,
        Statistic::Returns,
        Statistic::DurfeeRank,
        Statistic::RtlMaxima,
        Statistic::FixedShift,
        Statistic::Corners,
        Statistic::DiagonalCorners,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Des => "des",
            Statistic::Exc => "exc",
            Statistic::Returns => "returns",
            Statistic::DurfeeRank => "durfee_rank",
            Statistic::RtlMaxima => "rtl_maxima",
            Statistic::FixedShift => "fixed_shift",
            Statistic::Corners => "corners",
            Statistic::DiagonalCorners => "diagonal_corners",
        }
    }

    pub fn eval(self, p: &Permutation) -> Result<usize> {
        let n = p.len();
        let partition = || {
            if avoids_132(p) {
                Ok(dominant_partition(p)
                    .partition()
                    .expect("132-avoiders are dominant"))
            } else {
                Err(Error::Not132Avoiding)
            }
        };
        Ok(match self {
            Statistic::Des => p.descents().len(),
            Statistic::Exc => p.excedances().len(),
            Statistic::Returns => {
                let path = if avoids_132(p) {
                    psi_k(p)?
                } else if avoids_321(p) {
                    psi_bjs(p)?
                } else {
                    return Err(Error::PreconditionViolated(
                        "returns need a 132- or 321-avoider",
                    ));
                };
                path.heights().returns
            }
            Statistic::DurfeeRank => partition()?.durfee_rank(),
            Statistic::RtlMaxima => p.rtl_maxima().len(),
            Statistic::FixedShift => p.fixed_shifts(),
            Statistic::Corners => partition()?.corners().len(),
            Statistic::DiagonalCorners => partition()?
                .corners()
                .iter()
                .filter(|c| c.row + c.col == n)
                .count(),
        })
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Parse(alloc::format!("unknown statistic {s:?}")))
    }
}

/// Distribution of `stat` over the permutations of size `n` avoiding `patterns`.
pub fn distribution(n: usize, patterns: &[Permutation], stat: Statistic) -> Result<StatisticTable> {
    distribution_capped(n, patterns, stat, DEFAULT_CAP)
}

pub fn distribution_capped(
    n: usize,
    patterns: &[Permutation],
    stat: Statistic,
    cap: usize,
) -> Result<StatisticTable> {
    enumerate_avoiders_capped(n, patterns, cap)?
        .map(|p| stat.eval(&p))
        .collect()
}

/// Renders a row of big integers as `k:v` pairs without spaces.
pub(crate) fn render_row(row: &[(usize, BigUint)]) -> String {
    let table = StatisticTable::from_counts(
        row.iter()
            .map(|(k, v)| (*k, u64::try_from(v).expect("row entry fits in u64"))),
    );
    alloc::format!("{table}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(catalan(10), big(16796));
        assert_eq!(rank_count(10, 3).unwrap(), big(5625));
        assert_eq!(q_triangle(4, 2).unwrap(), big(2));
        assert_eq!(q_triangle(4, 2).unwrap(), catalan(2));
        assert_eq!(narayana(4, 2), big(6));
        assert_eq!(ballot(3, 3).unwrap(), big(5));
        assert!(rank_count(4, 3).is_err());
        assert!(ballot(2, 3).is_err());
        assert_eq!(catalan(40).to_string(), "2622127042276492108820");
    }

    #[test]
    fn catalan_recurrence() {
        let mut c = alloc::vec![BigUint::one()];
        for n in 1..=30 {
            let next = (0..n).map(|i| &c[i] * &c[n - 1 - i]).sum();
            c.push(next);
            assert_eq!(catalan(n), c[n]);
        }
    }

    #[test]
    fn rows_sum_to_catalan() {
        for n in 1..=14 {
            let nar: BigUint = ClosedForm::Narayana.row(n).into_iter().map(|x| x.1).sum();
            let rc: BigUint = ClosedForm::RankCount.row(n).into_iter().map(|x| x.1).sum();
            assert_eq!(nar, catalan(n));
            assert_eq!(rc, catalan(n));
            for k in 0..=n / 2 {
                let q = q_triangle(n, k).unwrap();
                assert_eq!(&q * &q, rank_count(n, k).unwrap());
            }
            assert_eq!(q_triangle(n, 0).unwrap(), BigUint::one());
            assert_eq!(q_triangle(n, n / 2).unwrap(), catalan(n.div_ceil(2)));
        }
    }

    #[test]
    fn distribution_examples() {
        let p132 = [Permutation::new(alloc::vec![1, 3, 2]).unwrap()];
        let des = distribution(4, &p132, Statistic::Des).unwrap();
        assert_eq!(des.to_string(), "{0:1,1:6,2:6,3:1}");
        let ret = distribution(4, &p132, Statistic::Returns).unwrap();
        assert_eq!(ret.to_string(), "{1:5,2:5,3:3,4:1}");
        for st in Statistic::ALL {
            assert_eq!(distribution(6, &p132, st).unwrap().total(), 132);
        }
        assert!(distribution(3, &[], Statistic::DurfeeRank).is_err());
    }

    #[test]
    fn names_parse() {
        for f in ClosedForm::ALL {
            assert_eq!(f.name().parse::<ClosedForm>().unwrap(), f);
        }
        for s in Statistic::ALL {
            assert_eq!(s.name().parse::<Statistic>().unwrap(), s);
        }
        assert!("fib".parse::<ClosedForm>().is_err());
    }
}
