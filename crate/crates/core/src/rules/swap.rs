//! The underground child for `k >= 2` and the swap operation behind it.
//!
//! The child returning to the axis is `nu phi` with `phi` its rightmost
//! primitive suffix. Complementing `phi` gives the underground child unless
//! the complement contains the forbidden factor; then every occurrence is
//! removed by the swap below, which trades the block `(10)^j` of the
//! occurrence with a shorter peak run `(10)^m` found at the same height
//! further left.
//!
//! The swap is invertible: its output contains `0 0 (10)^j 0` exactly where a
//! block was moved, and the inverse moves the block back to the first point
//! on its right where the path climbs two steps in a row.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{
    complement, contains_forbidden, first_forbidden, occurrences, rightmost_primitive_start,
    OrdinateProfile, PatternParam, Step, Word,
};

/// Record of a swap applied while building an underground child.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapTrace {
    /// The complemented primitive suffix before swapping.
    pub input: Word,
    pub output: Word,
    /// Number of occurrences removed.
    pub swaps: usize,
}

fn is_peak_at(v: &[Step], i: usize) -> bool {
    v.get(i) == Some(&Step::Rise) && v.get(i + 1) == Some(&Step::Fall)
}

/// Applies the swap to every occurrence of the forbidden factor, leftmost
/// first, rescanning after each swap. Returns the word and the swap count.
pub fn phi_traced(v: &Word, p: PatternParam) -> Result<(Word, usize)> {
    let j = p.j();
    let mut cur = v.clone();
    let mut swaps = 0;
    while let Some(occ) = first_forbidden(&cur, p) {
        if swaps > v.len() {
            return Err(Error::NoSwapPoint { word: v.to_string() });
        }
        let prof = OrdinateProfile::of(&cur);
        let level = prof.at(occ);
        // rightmost point at the occurrence's height entered by two falls
        let anchor = (2..occ)
            .rev()
            .find(|&t| prof.at(t) == level && cur[t - 1] == Step::Fall && cur[t - 2] == Step::Fall)
            .ok_or_else(|| Error::NoSwapPoint { word: cur.to_string() })?;
        let mut m = 0;
        while anchor + 2 * m < occ && is_peak_at(&cur, anchor + 2 * m) {
            m += 1;
        }
        let after = anchor + 2 * m;
        if m >= j || after >= occ || cur[after] != Step::Fall {
            return Err(Error::NoSwapPoint { word: cur.to_string() });
        }
        cur = Word::concat(&[
            &cur[..anchor],
            &Word::peaks(j),
            &cur[after..occ],
            &Word::peaks(m),
            &cur[occ + 2 * j..],
        ]);
        swaps += 1;
    }
    Ok((cur, swaps))
}

pub fn phi(v: &Word, p: PatternParam) -> Result<Word> {
    phi_traced(v, p).map(|(w, _)| w)
}

/// Undoes [`phi`]: every `0 0 (10)^j 0` block is moved back, rightmost first.
pub fn phi_inverse(v: &Word, p: PatternParam) -> Result<Word> {
    let j = p.j();
    let marker = p.complement_marker();
    let mut cur = v.clone();
    let mut rounds = 0;
    while let Some(&occ) = occurrences(&cur, &marker).last() {
        if rounds > v.len() {
            return Err(Error::NoSwapPoint { word: v.to_string() });
        }
        rounds += 1;
        let start = occ + 2;
        let end = start + 2 * j;
        let prof = OrdinateProfile::of(&cur);
        let level = prof.at(end);
        // leftmost point at the block's height followed by two rises
        let anchor = (end + 1..cur.len().saturating_sub(1))
            .find(|&t| prof.at(t) == level && cur[t] == Step::Rise && cur[t + 1] == Step::Rise)
            .ok_or_else(|| Error::NoSwapPoint { word: cur.to_string() })?;
        let mut m = 0;
        while anchor >= end + 2 * (m + 1) && is_peak_at(&cur, anchor - 2 * (m + 1)) {
            m += 1;
        }
        let before = anchor - 2 * m;
        if m >= j || before <= end || cur[before - 1] != Step::Rise {
            return Err(Error::NoSwapPoint { word: cur.to_string() });
        }
        cur = Word::concat(&[
            &cur[..start],
            &Word::peaks(m),
            &cur[end..before],
            &Word::peaks(j),
            &cur[anchor..],
        ]);
    }
    Ok(cur)
}

/// Underground child built from the child `to_zero = nu phi` that returns to
/// the axis: `nu phi^c`, or `nu Phi(phi^c)` when `phi^c` is not admissible.
pub fn underground_kge2(to_zero: &Word, p: PatternParam) -> Result<(Word, Option<SwapTrace>)> {
    if to_zero.endpoint() != 0 {
        return Err(Error::NoPrimitiveSuffix);
    }
    let split = rightmost_primitive_start(to_zero).ok_or(Error::NoPrimitiveSuffix)?;
    let flipped = complement(&to_zero[split..]);
    if !contains_forbidden(&flipped, p) {
        return Ok((Word::concat(&[&to_zero[..split], &flipped]), None));
    }
    let (swapped, swaps) = phi_traced(&flipped, p)?;
    let word = Word::concat(&[&to_zero[..split], &swapped]);
    Ok((word, Some(SwapTrace { input: flipped, output: swapped, swaps })))
}
