//! Brute-force enumeration by filtering.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::word::{is_primitive, PatternParam, Step, Word};

/// Largest number of ones `oracle_enumerate` accepts.
pub const DEFAULT_GUARD: usize = 12;

/// Longest primitive path `primitive_paths` will enumerate by default.
pub const PRIMITIVE_LEN_GUARD: usize = 18;

fn has_factor(steps: &[Step], factor: &[Step]) -> bool {
    steps.windows(factor.len()).any(|w| w == factor)
}

/// All words with `n` ones, at most `n` zeros and no `(10)^j 1` factor.
pub fn oracle_enumerate(p: PatternParam, n: usize) -> Result<BTreeSet<Word>> {
    oracle_enumerate_guarded(p, n, DEFAULT_GUARD)
}

pub fn oracle_enumerate_guarded(p: PatternParam, n: usize, guard: usize) -> Result<BTreeSet<Word>> {
    if n > guard {
        return Err(Error::GuardExceeded { what: "oracle size n", got: n, limit: guard });
    }
    let forbidden = p.forbidden();
    let mut out = BTreeSet::new();
    for len in n..=2 * n {
        for ones in (0..len).combinations(n) {
            let mut steps = vec![Step::Fall; len];
            for i in ones {
                steps[i] = Step::Rise;
            }
            if !has_factor(&steps, &forbidden) {
                out.insert(Word::from_steps(steps));
            }
        }
    }
    Ok(out)
}

/// Every primitive path of length at most `max_len`, by filtering all words.
pub fn primitive_paths(max_len: usize) -> Result<Vec<Word>> {
    if max_len > PRIMITIVE_LEN_GUARD {
        return Err(Error::GuardExceeded { what: "primitive path length", got: max_len, limit: PRIMITIVE_LEN_GUARD });
    }
    let mut out = Vec::new();
    for len in (2..=max_len).step_by(2) {
        for bits in 0u32..(1 << len) {
            let steps: Vec<Step> =
                (0..len).map(|i| if bits >> (len - 1 - i) & 1 == 1 { Step::Rise } else { Step::Fall }).collect();
            if is_primitive(&steps) {
                out.push(Word::from_steps(steps));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pj(j: usize) -> PatternParam {
        PatternParam::new(j).unwrap()
    }

    fn set(words: &[&str]) -> BTreeSet<Word> {
        words.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn small_sets() {
        assert_eq!(oracle_enumerate(pj(1), 0).unwrap(), set(&[""]));
        assert_eq!(oracle_enumerate(pj(3), 0).unwrap(), set(&[""]));
        assert_eq!(oracle_enumerate(pj(1), 1).unwrap(), set(&["1", "10", "01"]));
        assert_eq!(
            oracle_enumerate(pj(1), 2).unwrap(),
            set(&["11", "110", "011", "1100", "0110", "0011", "1001"])
        );
        assert_eq!(oracle_enumerate(pj(2), 1).unwrap().len(), 3);
    }

    #[test]
    fn guard() {
        assert!(oracle_enumerate(pj(1), 13).is_err());
        assert!(oracle_enumerate_guarded(pj(1), 3, 2).is_err());
        assert!(primitive_paths(20).is_err());
    }

    #[test]
    fn primitive_counts_are_catalan() {
        // primitive paths of length 2m are x D x̄ with D a Dyck path of length 2m - 2
        let by_len = |max| primitive_paths(max).unwrap().len();
        assert_eq!(by_len(2), 1);
        assert_eq!(by_len(4), 1 + 1);
        assert_eq!(by_len(8), 1 + 1 + 2 + 5);
        assert_eq!(by_len(12), 1 + 1 + 2 + 5 + 14 + 42);
    }
}
