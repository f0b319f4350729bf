//! Parallel driver for the identity suite.

use permdiag_core::enumeration::{identities, Report};
use rayon::prelude::*;

/// Same report as [`permdiag_core::enumeration::verify_identities`], with
/// every `(identity, n)` pair evaluated on the rayon pool. Line order is
/// the sequential order.
pub fn verify_parallel(n_max: usize) -> Report {
    let jobs: Vec<_> = identities()
        .iter()
        .flat_map(|id| (1..=n_max.min(id.max_n)).map(move |n| (id, n)))
        .collect();
    let outcomes = jobs.par_iter().map(|(id, n)| id.run(*n)).collect();
    Report { outcomes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use permdiag_core::enumeration::verify_identities;

    #[test]
    fn matches_sequential_order() {
        assert_eq!(verify_parallel(5), verify_identities(5));
    }
}
