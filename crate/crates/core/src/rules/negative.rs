//! Underground child of an axis word ending with `1 (01)^(j-1)`, `h = 1`.
//!
//! Such a word reads `mu 0 eta 1 (01)^(j-1)` with `eta` empty or strongly
//! negative. Appending the usual `0 1` would complete the forbidden factor,
//! so the underground child is rebuilt by moving a block of `j` peaks to the
//! left of the last negative excursion. When `mu` itself ends with a peak the
//! move would recreate the factor, and a longer suffix made of rigid blocks
//! is rewritten instead.

use serde::Serialize;

use super::{classify, SuffixClass};
use crate::error::{Error, Result};
use crate::word::{OrdinateProfile, PatternParam, Step, Word, FALL, RISE};

const PEAK: &[Step] = &[Step::Rise, Step::Fall];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NegSuffixVariant {
    /// `mu` does not end with a peak.
    Case1,
    /// `mu = mu' 1 0` and `eta` is nonempty.
    Case21,
    /// `mu = mu' 1 0`, `eta` empty and no block suffix: the `Case21` template
    /// with `eta = ε` is already admissible.
    Case22Unblocked,
    /// Block suffix, head does not end with a peak.
    Case221,
    /// Block suffix, head ends with a peak.
    Case222,
}

impl NegSuffixVariant {
    pub fn describe(self) -> &'static str {
        match self {
            NegSuffixVariant::Case1 => "head does not end with a peak",
            NegSuffixVariant::Case21 => "head ends with a peak, nonempty excursion",
            NegSuffixVariant::Case22Unblocked => "head ends with a peak, empty excursion, no block suffix",
            NegSuffixVariant::Case221 => "block suffix, head does not end with a peak",
            NegSuffixVariant::Case222 => "block suffix, head ends with a peak",
        }
    }
}

/// Parsed form of a word eligible for the rebuilt underground child.
///
/// `head` is `mu` (case 1), `mu'` (cases 2.1 and the unblocked one), `phi`
/// (2.2.1) or `phi'` (2.2.2). `inner` is `eta` or, in the block cases,
/// `lambda`. `blocks` holds `nu_1 .. nu_k` in the block cases and is empty
/// otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegSuffixDecomposition {
    pub variant: NegSuffixVariant,
    pub head: Word,
    pub inner: Word,
    pub blocks: Vec<Word>,
}

impl NegSuffixDecomposition {
    /// Rebuilds the word this decomposition was taken from.
    pub fn reassemble(&self, p: PatternParam) -> Word {
        let j = p.j();
        let blocks: Vec<Step> = self.blocks.iter().flat_map(|b| b.iter().copied()).collect();
        match self.variant {
            NegSuffixVariant::Case1 => {
                Word::concat(&[&self.head, FALL, &self.inner, RISE, &Word::valleys(j - 1)])
            }
            NegSuffixVariant::Case21 => {
                Word::concat(&[&self.head, PEAK, FALL, &self.inner, RISE, &Word::valleys(j - 1)])
            }
            NegSuffixVariant::Case22Unblocked => {
                Word::concat(&[&self.head, PEAK, &Word::valleys(j)])
            }
            NegSuffixVariant::Case221 => Word::concat(&[&self.head, &blocks]),
            NegSuffixVariant::Case222 => Word::concat(&[&self.head, PEAK, &blocks]),
        }
    }

    /// The underground child with one more `1`.
    pub fn underground(&self, p: PatternParam) -> Word {
        let j = p.j();
        let rho = Word::peaks(j);
        // (10)^j 0 1, the image of every block after the first
        let tail_block = Word::concat(&[&rho, FALL, RISE]);
        let tail: Vec<Step> = (1..self.blocks.len()).flat_map(|_| tail_block.iter().copied()).collect();
        match self.variant {
            NegSuffixVariant::Case1 => Word::concat(&[&self.head, &rho, FALL, &self.inner, RISE]),
            NegSuffixVariant::Case21 | NegSuffixVariant::Case22Unblocked => {
                Word::concat(&[&self.head, FALL, &self.inner, RISE, &rho, FALL, RISE])
            }
            NegSuffixVariant::Case221 => {
                Word::concat(&[&self.head, &rho, FALL, &self.inner, RISE, &tail])
            }
            NegSuffixVariant::Case222 => {
                Word::concat(&[&self.head, FALL, &self.inner, RISE, &rho, FALL, RISE, &tail])
            }
        }
    }
}

/// Parses `w` into the shape needed by [`underground_negsuffix`].
pub fn decompose_negative_suffix(w: &Word, p: PatternParam) -> Result<NegSuffixDecomposition> {
    let case = classify(w, p)?;
    if case.suffix_class != SuffixClass::NegSuffixSpecial {
        return Err(Error::CaseMismatch {
            expected: "negative suffix",
            word: w.to_string(),
            k: case.k,
            found: case.suffix_class,
        });
    }
    let j = p.j();
    // core = mu 0 eta 1, ending on the axis with a rise from -1
    let core = &w[..w.len() - 2 * (j - 1)];
    let prof = OrdinateProfile::of(core);
    let start = (0..core.len() - 1)
        .rev()
        .find(|&i| prof.at(i) == 0)
        .expect("a rise onto the axis follows a fall below it");
    let mu = Word::from_steps(core[..start].to_vec());
    let eta = Word::from_steps(core[start + 1..core.len() - 1].to_vec());

    if !mu.ends_with(PEAK) {
        return Ok(NegSuffixDecomposition { variant: NegSuffixVariant::Case1, head: mu, inner: eta, blocks: vec![] });
    }
    let mu_prime = Word::from_steps(mu[..mu.len() - 2].to_vec());
    if !eta.is_empty() {
        return Ok(NegSuffixDecomposition { variant: NegSuffixVariant::Case21, head: mu_prime, inner: eta, blocks: vec![] });
    }

    // w = mu' 1 0 (01)^j; peel nu_k = (01)^j, then as many (01)^j 1 0 as
    // possible, then nu_1 = 0 lambda 1 (01)^(j-1) 1 0.
    let last = Word::valleys(j);
    let middle = Word::concat(&[&last, PEAK]);
    let mut rest: &[Step] = &w[..w.len() - last.len()];
    let mut middles = 0;
    while rest.ends_with(&middle) {
        rest = &rest[..rest.len() - middle.len()];
        middles += 1;
    }

    let first_tail = Word::concat(&[RISE, &Word::valleys(j - 1), PEAK]);
    let mut blocks = Vec::new();
    let (head, lambda) = match split_first_block(rest, &first_tail) {
        Some((head_len, lambda)) => {
            blocks.push(Word::concat(&[FALL, &lambda, &first_tail]));
            blocks.extend(std::iter::repeat_n(middle.clone(), middles));
            (&rest[..head_len], lambda)
        }
        None if middles > 0 => {
            // the innermost middle block doubles as nu_1 with lambda = ε
            blocks.extend(std::iter::repeat_n(middle.clone(), middles));
            (rest, Word::empty())
        }
        None => {
            return Ok(NegSuffixDecomposition {
                variant: NegSuffixVariant::Case22Unblocked,
                head: mu_prime,
                inner: eta,
                blocks: vec![],
            })
        }
    };
    blocks.push(last);

    let (variant, head) = if head.ends_with(PEAK) {
        (NegSuffixVariant::Case222, &head[..head.len() - 2])
    } else {
        (NegSuffixVariant::Case221, head)
    };
    Ok(NegSuffixDecomposition { variant, head: Word::from_steps(head.to_vec()), inner: lambda, blocks })
}

/// If `s` ends with `0 lambda first_tail` (lambda empty or strongly
/// negative), returns the length of what precedes the `0` and `lambda`.
fn split_first_block(s: &[Step], first_tail: &[Step]) -> Option<(usize, Word)> {
    let body = s.strip_suffix(first_tail)?;
    let prof = OrdinateProfile::of(body);
    let level = prof.endpoint() + 1;
    // the last visit to `level` starts the fall into lambda
    let i = (0..body.len()).rev().find(|&i| prof.at(i) == level)?;
    debug_assert_eq!(body[i], Step::Fall);
    Some((i, Word::from_steps(body[i + 1..].to_vec())))
}

/// The underground child of an axis word ending with `1 (01)^(j-1)`, `h = 1`.
pub fn underground_negsuffix(w: &Word, p: PatternParam) -> Result<Word> {
    Ok(decompose_negative_suffix(w, p)?.underground(p))
}
