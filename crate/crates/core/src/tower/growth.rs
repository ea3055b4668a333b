//! PBW monomial counting along the degree filtration.

use super::OreTower;
use crate::error::{Error, Result};

/// Counts and fitted growth degree of a filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthProfile {
    /// `counts[n]` = number of PBW monomials of weighted degree at most `n`.
    pub counts: Vec<u128>,
    pub degree: usize,
}

impl OreTower {
    /// PBW monomials over all generators (base and skew) with weighted degree `<= n`, for `n = 0..=max_n`.
    /// `weights` defaults to 1 for every generator.
    pub fn monomial_count(&self, max_n: usize, weights: Option<&[u32]>) -> Result<GrowthProfile> {
        if self.is_localized() {
            return Err(Error::LocalizedTowerUnsupported);
        }
        let ngens = self.nbase() + self.num_skew();
        let w: Vec<u32> = match weights {
            Some(w) if w.len() != ngens => {
                return Err(Error::invalid(format!(
                    "expected {ngens} weights, got {}",
                    w.len()
                )))
            }
            Some(w) if w.contains(&0) => return Err(Error::invalid("weights must be positive")),
            Some(w) => w.to_vec(),
            None => vec![1; ngens],
        };
        // exact[s] = number of exponent vectors of weighted degree exactly s
        let mut exact = vec![0u128; max_n + 1];
        exact[0] = 1;
        for &wi in &w {
            let wi = wi as usize;
            for s in wi..=max_n {
                exact[s] += exact[s - wi];
            }
        }
        let counts: Vec<u128> = exact
            .iter()
            .scan(0u128, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
        let degree = fitted_degree(&counts);
        Ok(GrowthProfile { counts, degree })
    }
}

/// Smallest `d` such that the `(d+1)`-th forward differences of `values` all vanish.
pub fn fitted_degree(values: &[u128]) -> usize {
    let mut diffs: Vec<i128> = values.iter().map(|&v| v as i128).collect();
    let mut d = 0;
    loop {
        let next: Vec<i128> = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        if next.iter().all(|&x| x == 0) {
            return d;
        }
        diffs = next;
        d += 1;
    }
}
