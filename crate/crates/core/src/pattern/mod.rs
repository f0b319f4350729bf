//! Brute-force pattern containment, plus the diagram-side criteria that
//! replace it for 132-avoiding permutations.
//!
//! The engine here is deliberately naive: it extends partial occurrences one
//! letter at a time and keeps only those whose relative order still matches
//! the pattern. Everything else in the crate is tested against it.

mod criteria;
mod mu;

pub use criteria::{
    abh_profile, avoids_shifted_via_profile, diagram_avoidance_check, kind_pattern,
    shifted_pattern, shifted_profile, AbhProfile, AvoidanceKind, ShiftedProfile,
};
pub use mu::{mu_map, mu_map_inverse, staircase_union_inverse, staircase_union_map, MuMap};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Permutations};

/// Largest `n` that [`enumerate_avoiders`] accepts without an explicit cap.
pub const DEFAULT_CAP: usize = 11;

/// Number of subsequences of `p` order-isomorphic to `pattern`.
pub fn occurrences(p: &Permutation, pattern: &Permutation) -> u64 {
    let mut chosen = Vec::with_capacity(pattern.len());
    let mut count = 0u64;
    search(p.values(), pattern.values(), 0, &mut chosen, &mut |_| {
        count += 1;
        true
    });
    count
}

/// Whether `p` contains at least one occurrence of `pattern`.
pub fn contains(p: &Permutation, pattern: &Permutation) -> bool {
    let mut chosen = Vec::with_capacity(pattern.len());
    let mut found = false;
    search(p.values(), pattern.values(), 0, &mut chosen, &mut |_| {
        found = true;
        false
    });
    found
}

/// Whether `p` avoids every pattern in `patterns`.
pub fn avoids(p: &Permutation, patterns: &[Permutation]) -> bool {
    patterns.iter().all(|q| !contains(p, q))
}

/// All of `S_n` avoiding `patterns`, in lexicographic order.
///
/// Fails with [`Error::SizeTooLarge`] above [`DEFAULT_CAP`].
pub fn enumerate_avoiders(
    n: usize,
    patterns: &[Permutation],
) -> Result<impl Iterator<Item = Permutation> + '_> {
    enumerate_avoiders_capped(n, patterns, DEFAULT_CAP)
}

pub fn enumerate_avoiders_capped(
    n: usize,
    patterns: &[Permutation],
    cap: usize,
) -> Result<impl Iterator<Item = Permutation> + '_> {
    if n > cap {
        return Err(Error::SizeTooLarge { n, cap });
    }
    Ok(Permutations::new(n).filter(move |p| avoids(p, patterns)))
}

/// Depth-first extension of partial occurrences. `visit` receives each
/// complete occurrence (as positions, 0-based) and returns whether to keep
/// going; the return value reports whether the search ran to completion.
fn search(
    text: &[usize],
    pat: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let t = chosen.len();
    if t == pat.len() {
        return visit(chosen);
    }
    let need = pat.len() - t;
    // The next letter must sit strictly between these chosen values.
    let (mut lo, mut hi) = (0usize, usize::MAX);
    for (s, &pos) in chosen.iter().enumerate() {
        let v = text[pos];
        if pat[s] < pat[t] {
            lo = lo.max(v);
        } else {
            hi = hi.min(v);
        }
    }
    for idx in from..=text.len().saturating_sub(need) {
        let v = text[idx];
        if v > lo && v < hi {
            chosen.push(idx);
            let go_on = search(text, pat, idx + 1, chosen, visit);
            chosen.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

/// `p` avoids 132; the cheap check used as a precondition throughout.
pub fn avoids_132(p: &Permutation) -> bool {
    // Scanning right to left, keep the values that could still be the "3"
    // above some later "2"; a 132 exists iff some letter is smaller than
    // the best available "2".
    let v = p.values();
    let mut best_two = 0usize;
    let mut stack: Vec<usize> = Vec::new();
    for &x in v.iter().rev() {
        if x < best_two {
            return false;
        }
        while let Some(&top) = stack.last() {
            if top < x {
                best_two = best_two.max(top);
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(x);
    }
    true
}

/// `p` avoids 321: the letters that are not left-to-right maxima increase.
pub fn avoids_321(p: &Permutation) -> bool {
    let mut max = 0;
    let mut last_small = 0;
    for &x in p.values() {
        if x > max {
            max = x;
        } else if x < last_small {
            return false;
        } else {
            last_small = x;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn occurrence_examples() {
        let p = perm("4 2 8 3 6 9 7 5 1 10");
        assert_eq!(occurrences(&p, &perm("1 3 2")), 20);
        assert_eq!(occurrences(&p, &perm("2 1")), 18);
        assert_eq!(occurrences(&Permutation::identity(7), &perm("1 2 3")), 35);
        assert_eq!(occurrences(&perm("1 2"), &perm("1 2 3")), 0);
    }

    #[test]
    fn avoider_examples() {
        let p132 = [perm("1 3 2")];
        assert_eq!(enumerate_avoiders(4, &p132).unwrap().count(), 14);
        let two = [perm("1 3 2"), perm("4 3 2 1")];
        assert_eq!(enumerate_avoiders(5, &two).unwrap().count(), 31);
        assert!(avoids(&perm("8 9 5 4 6 7 2 3 10 1"), &p132));
        assert!(matches!(
            enumerate_avoiders(12, &p132),
            Err(Error::SizeTooLarge { n: 12, cap: 11 })
        ));
    }

    #[test]
    fn fast_checks_agree_with_engine() {
        let (q132, q321) = (perm("1 3 2"), perm("3 2 1"));
        for n in 1..=7 {
            for p in Permutations::new(n) {
                assert_eq!(avoids_132(&p), !contains(&p, &q132), "{p}");
                assert_eq!(avoids_321(&p), !contains(&p, &q321), "{p}");
            }
        }
    }
}
