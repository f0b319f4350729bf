use permdiag_core::bijection::{permutation_from_partition, phi};
use permdiag_core::diagram::{build_diagram, dominant_partition, rank_diagram};
use permdiag_core::enumeration::verify_identities;
use permdiag_core::pattern::{
    avoids_132, avoids_321, enumerate_avoiders, staircase_union_inverse, staircase_union_map,
};
use permdiag_core::{Cell, Partition, Permutation, Permutations, StaircasePartitions};
use std::collections::BTreeSet;

fn class(n: usize, pat: &str) -> Vec<Permutation> {
    enumerate_avoiders(n, &[pat.parse().unwrap()])
        .unwrap()
        .collect()
}

#[test]
fn identity_suite_to_nine() {
    let report = verify_identities(9);
    let failures: Vec<String> = report.failures().map(|o| o.to_string()).collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn avoiders_of_321_split_into_two_increasing_words() {
    for n in 1..=8 {
        for p in class(n, "3 2 1") {
            let exc: BTreeSet<usize> = p.excedances().into_iter().collect();
            let (on, off): (Vec<_>, Vec<_>) = (1..=n).partition(|i| exc.contains(i));
            for word in [on, off] {
                assert!(word.windows(2).all(|w| p.at(w[0]) < p.at(w[1])), "{p}");
            }
        }
    }
}

#[test]
fn dominance_matches_one_component() {
    for n in 1..=8 {
        for p in Permutations::new(n) {
            let comps = build_diagram(&p).components();
            let one = comps.len() == 1 && comps[0][0] == Cell::new(1, 1);
            let dominant = dominant_partition(&p).partition().is_some();
            assert_eq!(dominant, avoids_132(&p), "{p}");
            if !p.is_identity() {
                assert_eq!(one, avoids_132(&p), "{p}");
            }
        }
    }
}

#[test]
fn essential_set_of_dominant_is_corner_set() {
    for n in 1..=8 {
        for p in class(n, "1 3 2") {
            let lam = dominant_partition(&p).partition().unwrap();
            assert_eq!(rank_diagram(&p).essential, lam.corners().cells(), "{p}");
        }
    }
}

#[test]
fn phi_is_a_bijection_onto_132_avoiders() {
    for n in 1..=8 {
        let images: BTreeSet<Permutation> =
            class(n, "3 2 1").iter().map(|p| phi(p).unwrap()).collect();
        let target: BTreeSet<Permutation> = class(n, "1 3 2").into_iter().collect();
        assert_eq!(images, target);
    }
}

#[test]
fn staircase_union_round_trips() {
    for n in 1..=9 {
        for k in 3..=n + 1 {
            let stair = Partition::staircase(n + 1 - k);
            for lam in StaircasePartitions::new(n) {
                if lam.contains(&stair) {
                    let small = staircase_union_map(&lam, n, k).unwrap();
                    assert!(small.corners().iter().all(|c| c.row + c.col + k >= n + 3));
                    assert_eq!(staircase_union_inverse(&small, n, k).unwrap(), lam);
                }
                if lam.corners().iter().all(|c| c.row + c.col + k >= n + 3) {
                    let big = staircase_union_inverse(&lam, n, k).unwrap();
                    assert_eq!(staircase_union_map(&big, n, k).unwrap(), lam);
                }
            }
        }
    }
}

#[test]
fn partitions_and_132_avoiders_correspond() {
    for n in 1..=9 {
        let from_y: BTreeSet<Permutation> = StaircasePartitions::new(n)
            .map(|l| permutation_from_partition(&l, n).unwrap())
            .collect();
        let direct: BTreeSet<Permutation> = Permutations::new(n).filter(avoids_132).collect();
        assert_eq!(from_y, direct);
        assert_eq!(
            Permutations::new(n).filter(avoids_321).count(),
            direct.len()
        );
    }
}
