//! Every counting identity and structural correspondence, each checked by
//! brute force for one size at a time.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use super::{ballot, catalan, narayana, render_row, ClosedForm, Statistic, StatisticTable};
use crate::bijection::{permutation_from_partition, phi, phi_inverse};
use crate::diagram::{build_diagram, count_132_by_rank, dominant_partition, rank_diagram};
use crate::dyck::{partition_path, path_partition, psi_bjs, psi_bjs_inverse, psi_k, psi_k_inverse};
use crate::pattern::{
    avoids_shifted_via_profile, contains, diagram_avoidance_check, enumerate_avoiders_capped,
    kind_pattern, occurrences, shifted_pattern, shifted_profile, AvoidanceKind, MuMap,
};
use crate::perm::{Permutation, Permutations};
use crate::young::{Cell, Partition, StaircasePartitions};

/// A named check, valid for `1 <= n <= max_n`.
#[derive(Clone, Copy)]
pub struct Identity {
    pub name: &'static str,
    pub max_n: usize,
    check: fn(usize) -> (String, String),
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("name", &self.name)
            .field("max_n", &self.max_n)
            .finish()
    }
}

impl Identity {
    pub fn run(&self, n: usize) -> IdentityOutcome {
        let (expected, got) = (self.check)(n);
        IdentityOutcome {
            name: self.name,
            n,
            expected,
            got,
        }
    }
}

/// One line of a report: expected and observed values, rendered without spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub n: usize,
    pub expected: String,
    pub got: String,
}

impl IdentityOutcome {
    pub fn passed(&self) -> bool {
        self.expected == self.got
    }
}

impl fmt::Display for IdentityOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IDENT {} n={} expected={} got={} {}",
            self.name,
            self.n,
            self.expected,
            self.got,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub outcomes: Vec<IdentityOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(IdentityOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(f, "{o}")?;
        }
        Ok(())
    }
}

/// Runs every identity for `n = 1..=min(n_max, max_n)`, in list order.
pub fn verify_identities(n_max: usize) -> Report {
    let outcomes = identities()
        .iter()
        .flat_map(|id| (1..=n_max.min(id.max_n)).map(move |n| id.run(n)))
        .collect();
    Report { outcomes }
}

fn p(s: &str) -> Permutation {
    s.parse().expect("literal pattern")
}

fn avoiders(n: usize, pats: &[Permutation]) -> Vec<Permutation> {
    enumerate_avoiders_capped(n, pats, usize::MAX)
        .expect("uncapped")
        .collect()
}

fn s132(n: usize) -> Vec<Permutation> {
    avoiders(n, &[p("1 3 2")])
}

fn s321(n: usize) -> Vec<Permutation> {
    avoiders(n, &[p("3 2 1")])
}

fn zero_failures(bad: usize) -> (String, String) {
    ("0".to_string(), bad.to_string())
}

fn count_bad<T>(items: impl IntoIterator<Item = T>, ok: impl Fn(&T) -> bool) -> usize {
    items.into_iter().filter(|x| !ok(x)).count()
}

fn table_of(items: &[Permutation], st: Statistic) -> StatisticTable {
    items
        .iter()
        .map(|q| st.eval(q).expect("statistic defined on class"))
        .collect()
}

fn row_table(row: impl IntoIterator<Item = (usize, BigUint)>) -> String {
    render_row(&row.into_iter().collect::<Vec<_>>())
}

fn partition_of(q: &Permutation) -> Partition {
    dominant_partition(q).partition().expect("132-avoider")
}

/// Largest `k` such that `q` contains `s (s+1) ... k 1 ... (s-1)`, else `s - 1`.
fn ls_brute(q: &Permutation, s: usize) -> usize {
    (s..=q.len())
        .rev()
        .find(|&k| contains(q, &shifted_pattern(s, k).expect("s <= k")))
        .unwrap_or(s - 1)
}

pub fn identities() -> &'static [Identity] {
    &IDENTITIES
}

static IDENTITIES: [Identity; 29] = [
    Identity {
        name: "catalan_132",
        max_n: 10,
        check: |n| (catalan(n).to_string(), s132(n).len().to_string()),
    },
    Identity {
        name: "catalan_321",
        max_n: 10,
        check: |n| (catalan(n).to_string(), s321(n).len().to_string()),
    },
    Identity {
        name: "narayana_sum",
        max_n: 12,
        check: |n| {
            let sum: BigUint = (1..=n).map(|k| narayana(n, k)).sum();
            (catalan(n).to_string(), sum.to_string())
        },
    },
    Identity {
        name: "rank_count_sum",
        max_n: 14,
        check: |n| {
            let sum: BigUint = ClosedForm::RankCount.row(n).into_iter().map(|x| x.1).sum();
            (catalan(n).to_string(), sum.to_string())
        },
    },
    Identity {
        name: "rank_count_durfee",
        max_n: 14,
        check: |n| {
            let got: StatisticTable = StaircasePartitions::new(n)
                .map(|l| l.durfee_rank())
                .collect();
            (render_row(&ClosedForm::RankCount.row(n)), got.to_string())
        },
    },
    Identity {
        name: "q_triangle_square",
        max_n: 14,
        check: |n| {
            let squares = ClosedForm::QTriangle
                .row(n)
                .into_iter()
                .map(|(k, q)| (k, &q * &q));
            (
                render_row(&ClosedForm::RankCount.row(n)),
                row_table(squares),
            )
        },
    },
    Identity {
        name: "des_narayana",
        max_n: 9,
        check: |n| {
            let expect = row_table((0..n).map(|d| (d, narayana(n, d + 1))));
            (expect, table_of(&s132(n), Statistic::Des).to_string())
        },
    },
    Identity {
        name: "returns_ballot",
        max_n: 9,
        check: |n| {
            let expect = row_table((1..=n).map(|k| (k, ballot(n - 1, n - k).expect("k >= 1"))));
            (expect, table_of(&s132(n), Statistic::Returns).to_string())
        },
    },
    Identity {
        name: "fixed_shift_ballot",
        max_n: 9,
        check: |n| {
            let expect = row_table((1..=n).map(|k| (k - 1, ballot(n - 1, n - k).expect("k >= 1"))));
            (
                expect,
                table_of(&s321(n), Statistic::FixedShift).to_string(),
            )
        },
    },
    Identity {
        name: "diagonal_corners_ballot",
        max_n: 10,
        check: |n| {
            let expect = row_table((1..=n).map(|k| (k - 1, ballot(n - 1, n - k).expect("k >= 1"))));
            let got: StatisticTable = StaircasePartitions::new(n)
                .map(|l| l.corners().iter().filter(|c| c.row + c.col == n).count())
                .collect();
            (expect, got.to_string())
        },
    },
    Identity {
        name: "corners_narayana",
        max_n: 10,
        check: |n| {
            let expect = row_table((0..n).map(|k| (k, narayana(n, k + 1))));
            let got: StatisticTable = StaircasePartitions::new(n)
                .map(|l| l.corners().len())
                .collect();
            (expect, got.to_string())
        },
    },
    Identity {
        name: "psi_bjs_equals_psi_k_phi",
        max_n: 8,
        check: |n| {
            zero_failures(count_bad(s321(n), |q| {
                psi_bjs(q).ok() == phi(q).and_then(|s| psi_k(&s)).ok()
            }))
        },
    },
    Identity {
        name: "phi_bijective",
        max_n: 8,
        check: |n| {
            let images: BTreeSet<Permutation> = s321(n)
                .iter()
                .map(|q| phi(q).expect("321-avoider"))
                .collect();
            let bad = images.iter().filter(|s| contains(s, &p("1 3 2"))).count();
            (
                alloc::format!("images:{},containing132:0", catalan(n)),
                alloc::format!("images:{},containing132:{bad}", images.len()),
            )
        },
    },
    Identity {
        name: "excedances_to_descents",
        max_n: 8,
        check: |n| {
            zero_failures(count_bad(s321(n), |q| {
                let s = phi(q).expect("321-avoider");
                let exc = q.excedances();
                let mut want = Vec::with_capacity(exc.len() + 1);
                if let Some(&i1) = exc.first() {
                    want.push((1, n + 2 - q.at(i1)));
                    for w in exc.windows(2) {
                        want.push((w[0] + 1, n + 2 - q.at(w[1])));
                    }
                }
                want.push((exc.last().map_or(1, |&ie| ie + 1), 1));
                s.descents() == exc && s.ltr_minima() == want
            }))
        },
    },
    Identity {
        name: "rank_sum_counts_132",
        max_n: 7,
        check: |n| {
            zero_failures(count_bad(Permutations::new(n), |q| {
                count_132_by_rank(q) as u64 == occurrences(q, &p("1 3 2"))
            }))
        },
    },
    Identity {
        name: "dominant_iff_132_avoiding",
        max_n: 8,
        check: |n| {
            zero_failures(count_bad(Permutations::new(n), |q| {
                let d = build_diagram(q);
                let comps = d.components();
                let one = comps.len() == 1 && comps[0].first() == Some(&Cell::new(1, 1));
                let avoids = !contains(q, &p("1 3 2"));
                let dominant = dominant_partition(q).partition().is_some();
                q.is_identity() || (avoids == one && avoids == dominant)
            }))
        },
    },
    Identity {
        name: "diagram_rows_and_essential",
        max_n: 8,
        check: |n| {
            zero_failures(count_bad(Permutations::new(n), |q| {
                let r = rank_diagram(q);
                let code = q.code();
                let des = q.descents();
                r.base.len() == q.inversions()
                    && (1..=n).all(|i| r.base.row_len(i) == code[i - 1])
                    && r.essential.iter().all(|c| des.contains(&c.row))
            }))
        },
    },
    Identity {
        name: "heights_132",
        max_n: 8,
        check: |n| {
            zero_failures(count_bad(s132(n), |q| {
                let h = psi_k(q).expect("132-avoider").heights();
                let inv = q.inversions();
                let lam = partition_of(q);
                h.sum_all + 2 * inv == n * n
                    && h.sum_down + inv == n * (n + 1) / 2
                    && h.rank_height + 2 * lam.durfee_rank() == n
                    && h.returns == q.rtl_maxima().len()
            }))
        },
    },
    Identity {
        name: "returns_fixed_shift_321",
        max_n: 8,
        check: |n| {
            zero_failures(count_bad(s321(n), |q| {
                psi_bjs(q).expect("321-avoider").heights().returns == 1 + q.fixed_shifts()
            }))
        },
    },
    Identity {
        name: "corner_criteria",
        max_n: 8,
        check: |n| {
            zero_failures(count_bad(s132(n), |q| {
                (3..=6).all(|k| {
                    AvoidanceKind::ALL.iter().all(|&kind| {
                        let brute = !contains(q, &kind_pattern(kind, k).expect("k >= 3"));
                        diagram_avoidance_check(q, k, kind) == Ok(brute)
                    })
                })
            }))
        },
    },
    Identity {
        name: "shifted_criterion",
        max_n: 8,
        check: |n| {
            zero_failures(count_bad(s132(n), |q| {
                (3..=6).all(|k| {
                    (2..=k).all(|s| {
                        let brute = !contains(q, &shifted_pattern(s, k).expect("s <= k"));
                        avoids_shifted_via_profile(q, s, k) == Ok(brute)
                    })
                })
            }))
        },
    },
    Identity {
        name: "shifted_profile_conjugates",
        max_n: 8,
        check: |n| {
            zero_failures(count_bad(s132(n), |q| {
                let lp = shifted_profile(q).expect("132-avoider");
                let li = shifted_profile(&q.inverse()).expect("inverse avoids 132");
                li.big_l == lp.big_l.conjugate() && (2..=n).all(|s| lp.l(s) == ls_brute(q, s))
            }))
        },
    },
    Identity {
        name: "monotone_lengths_132",
        max_n: 8,
        check: |n| {
            zero_failures(count_bad(s132(n), |q| {
                let lam = partition_of(q);
                let lis = (1..=n).map(|i| n + 1 - i - lam.part(i)).max().unwrap_or(0);
                q.longest_decreasing() == q.descents().len() + 1 && q.longest_increasing() == lis
            }))
        },
    },
    Identity {
        name: "decreasing_class_narayana",
        max_n: 8,
        check: |n| {
            let mut expect = Vec::new();
            let mut got = Vec::new();
            for k in 3..=6 {
                let formula: BigUint = (1..k).map(|i| narayana(n, i)).sum();
                let dec = kind_pattern(AvoidanceKind::Decreasing, k).expect("k >= 3");
                expect.push(alloc::format!("{k}:{formula}"));
                got.push(alloc::format!(
                    "{k}:{}",
                    avoiders(n, &[p("1 3 2"), dec]).len()
                ));
            }
            (expect.join(","), got.join(","))
        },
    },
    Identity {
        name: "increasing_class_equinumerous",
        max_n: 8,
        check: |n| {
            let mut expect = Vec::new();
            let mut got = Vec::new();
            for k in 3..=6 {
                let count = |q: Permutation| avoiders(n, &[p("1 3 2"), q]).len();
                let inc = count(kind_pattern(AvoidanceKind::Increasing, k).expect("k >= 3"));
                let mut others = alloc::vec![count(
                    kind_pattern(AvoidanceKind::TwoOneThree, k).expect("k >= 3")
                )];
                others.extend((2..=k).map(|s| count(shifted_pattern(s, k).expect("s <= k"))));
                expect.push(alloc::format!("{k}:{inc}"));
                got.push(match others.iter().all(|&c| c == inc) {
                    true => alloc::format!("{k}:{inc}"),
                    false => alloc::format!("{k}:mismatch{others:?}").replace(' ', ""),
                });
            }
            (expect.join(","), got.join(","))
        },
    },
    Identity {
        name: "mu_map_bijective",
        max_n: 9,
        check: |n| {
            let mut bad = 0;
            for s in 2..=4 {
                let map = MuMap::new(n, s).expect("s >= 2");
                let mut seen = BTreeSet::new();
                for lam in StaircasePartitions::new(n) {
                    match map.map(&lam) {
                        Ok(mu) => {
                            if map.inverse(&mu).as_ref() != Ok(&lam) || !seen.insert(mu) {
                                bad += 1;
                            }
                        }
                        Err(_) => bad += 1,
                    }
                }
            }
            zero_failures(bad)
        },
    },
    Identity {
        name: "mu_map_transports_l",
        max_n: 8,
        check: |n| {
            zero_failures(count_bad(StaircasePartitions::new(n), |lam| {
                let src = permutation_from_partition(lam, n).expect("fits");
                let l = src.longest_increasing();
                (2..=4).all(|s| {
                    if l + 1 < s {
                        return true;
                    }
                    let mu = MuMap::new(n, s).and_then(|m| m.map(lam));
                    let tgt = mu.and_then(|mu| permutation_from_partition(&mu, n));
                    tgt.map(|t| ls_brute(&t, s) == l).unwrap_or(false)
                })
            }))
        },
    },
    Identity {
        name: "round_trips_perm",
        max_n: 8,
        check: |n| {
            let bad321 = count_bad(s321(n), |q| {
                phi(q).and_then(|s| phi_inverse(&s)).as_ref() == Ok(q)
                    && psi_bjs(q).and_then(|d| psi_bjs_inverse(&d)).as_ref() == Ok(q)
            });
            let bad132 = count_bad(s132(n), |q| {
                psi_k(q).and_then(|d| psi_k_inverse(&d)).as_ref() == Ok(q)
                    && permutation_from_partition(&partition_of(q), n).as_ref() == Ok(q)
            });
            let bad_t = if n <= 7 {
                count_bad(Permutations::new(n), |q| {
                    build_diagram(&q.inverse()) == build_diagram(q).transpose()
                })
            } else {
                0
            };
            zero_failures(bad321 + bad132 + bad_t)
        },
    },
    Identity {
        name: "round_trips_partition",
        max_n: 10,
        check: |n| {
            zero_failures(count_bad(StaircasePartitions::new(n), |lam| {
                let path_ok =
                    partition_path(lam, n).map(|d| path_partition(&d)).as_ref() == Ok(lam);
                let perm_ok = n > 9
                    || permutation_from_partition(lam, n)
                        .map(|q| partition_of(&q))
                        .as_ref()
                        == Ok(lam);
                path_ok && perm_ok
            }))
        },
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let report = verify_identities(6);
        if let Some(o) = report.failures().next() {
            panic!("{o}");
        }
        let names: BTreeSet<_> = identities().iter().map(|i| i.name).collect();
        assert_eq!(names.len(), identities().len());
    }

    #[test]
    fn line_format() {
        let o = IdentityOutcome {
            name: "x",
            n: 3,
            expected: "5".into(),
            got: "5".into(),
        };
        assert_eq!(o.to_string(), "IDENT x n=3 expected=5 got=5 PASS");
        let f = IdentityOutcome {
            got: "4".into(),
            ..o
        };
        assert!(f.to_string().ends_with("FAIL"));
    }
}
