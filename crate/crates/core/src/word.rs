//! Binary words viewed as lattice paths.
//!
//! A `1` is a rise step `(1, 1)` and a `0` is a fall step `(1, -1)`. Every
//! word is therefore also a path starting at the origin, and the structural
//! predicates here (primitive, positive, negative, underground) are stated in
//! terms of the heights the path visits.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single step of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// Bit `0`, step `(1, -1)`.
    Fall,
    /// Bit `1`, step `(1, 1)`.
    Rise,
}

impl Step {
    pub fn bit(self) -> char {
        match self {
            Step::Rise => '1',
            Step::Fall => '0',
        }
    }

    pub fn delta(self) -> i32 {
        match self {
            Step::Rise => 1,
            Step::Fall => -1,
        }
    }

    pub fn flip(self) -> Step {
        match self {
            Step::Rise => Step::Fall,
            Step::Fall => Step::Rise,
        }
    }
}

pub(crate) const RISE: &[Step] = &[Step::Rise];
pub(crate) const FALL: &[Step] = &[Step::Fall];

/// An immutable binary word / lattice path.
///
/// Ordering is lexicographic on steps with `0 < 1`, which coincides with the
/// ordering of the bit strings.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Step>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_steps(steps: Vec<Step>) -> Word {
        Word(steps)
    }

    /// Concatenates the given pieces into a new word.
    pub fn concat(parts: &[&[Step]]) -> Word {
        let len = parts.iter().map(|p| p.len()).sum();
        let mut steps = Vec::with_capacity(len);
        for part in parts {
            steps.extend_from_slice(part);
        }
        Word(steps)
    }

    /// `(10)^count`, a run of peaks.
    pub fn peaks(count: usize) -> Word {
        Word([Step::Rise, Step::Fall].repeat(count))
    }

    /// `(01)^count`, a run of valleys.
    pub fn valleys(count: usize) -> Word {
        Word([Step::Fall, Step::Rise].repeat(count))
    }

    pub fn rises(count: usize) -> Word {
        Word(vec![Step::Rise; count])
    }

    pub fn falls(count: usize) -> Word {
        Word(vec![Step::Fall; count])
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.0
    }

    /// Number of `1`s.
    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&s| s == Step::Rise).count()
    }

    /// Number of `0`s.
    pub fn zeros(&self) -> usize {
        self.0.len() - self.ones()
    }

    /// Whether `|w|_0 <= |w|_1`.
    pub fn is_balanced_or_rising(&self) -> bool {
        self.zeros() <= self.ones()
    }

    pub fn endpoint(&self) -> i32 {
        endpoint_ordinate(self)
    }

    pub fn profile(&self) -> OrdinateProfile {
        OrdinateProfile::of(self)
    }

    pub fn complement(&self) -> Word {
        complement(self)
    }

    /// Returns a copy of `self` with the suffix starting at `from` reflected
    /// across the horizontal line through its starting point.
    pub fn mirror_suffix(&self, from: usize) -> Word {
        let mut steps = self.0.clone();
        for s in &mut steps[from..] {
            *s = s.flip();
        }
        Word(steps)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// Renders the word in path notation, `x` for a rise and `X` for a fall.
    pub fn to_path_notation(&self) -> String {
        self.0
            .iter()
            .map(|s| match s {
                Step::Rise => 'x',
                Step::Fall => 'X',
            })
            .collect()
    }
}

impl Deref for Word {
    type Target = [Step];

    fn deref(&self) -> &[Step] {
        &self.0
    }
}

impl AsRef<[Step]> for Word {
    fn as_ref(&self) -> &[Step] {
        &self.0
    }
}

impl FromIterator<Step> for Word {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.bit())?;
        }
        Ok(())
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_word(s)
    }
}

/// Parses a string of `0`/`1` characters.
pub fn parse_word(text: &str) -> Result<Word> {
    text.chars()
        .enumerate()
        .map(|(position, c)| match c {
            '1' => Ok(Step::Rise),
            '0' => Ok(Step::Fall),
            found => Err(Error::Parse { position, found }),
        })
        .collect()
}

/// The forbidden factor `(10)^j 1` is fixed by `j >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PatternParam {
    j: usize,
}

impl PatternParam {
    pub fn new(j: usize) -> Result<PatternParam> {
        if j == 0 {
            return Err(Error::InvalidPattern);
        }
        Ok(PatternParam { j })
    }

    pub fn j(self) -> usize {
        self.j
    }

    /// `(10)^j 1`.
    pub fn forbidden(self) -> Word {
        Word::concat(&[&Word::peaks(self.j), RISE])
    }

    /// `(10)^j`, the forbidden factor without its final rise.
    pub fn rho(self) -> Word {
        Word::peaks(self.j)
    }

    /// `0 0 (10)^j 0`: a primitive avoider contains this exactly when its
    /// complement contains the forbidden factor.
    pub fn complement_marker(self) -> Word {
        Word::concat(&[&Word::falls(2), &Word::peaks(self.j), FALL])
    }

    pub fn forbidden_len(self) -> usize {
        2 * self.j + 1
    }
}

impl fmt::Display for PatternParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(10)^{}1", self.j)
    }
}

/// Heights visited by a path, including the starting height 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinateProfile {
    heights: Vec<i32>,
}

impl OrdinateProfile {
    pub fn of(steps: &[Step]) -> OrdinateProfile {
        let mut heights = Vec::with_capacity(steps.len() + 1);
        let mut h = 0;
        heights.push(h);
        for s in steps {
            h += s.delta();
            heights.push(h);
        }
        OrdinateProfile { heights }
    }

    /// `heights()[i]` is the height before step `i`; the last entry is the endpoint.
    pub fn heights(&self) -> &[i32] {
        &self.heights
    }

    pub fn at(&self, i: usize) -> i32 {
        self.heights[i]
    }

    pub fn endpoint(&self) -> i32 {
        *self.heights.last().unwrap()
    }

    pub fn min(&self) -> i32 {
        *self.heights.iter().min().unwrap()
    }

    pub fn max(&self) -> i32 {
        *self.heights.iter().max().unwrap()
    }
}

pub fn endpoint_ordinate(steps: &[Step]) -> i32 {
    steps.iter().map(|s| s.delta()).sum()
}

/// Whether `(10)^j 1` occurs anywhere in `steps`.
///
/// The factor is an alternating run that starts and ends with `1`, so it
/// occurs iff some alternating run reaches length `2j + 1` on a `1`.
pub fn contains_forbidden(steps: &[Step], p: PatternParam) -> bool {
    first_forbidden(steps, p).is_some()
}

/// Start index of the leftmost occurrence of `(10)^j 1`.
pub fn first_forbidden(steps: &[Step], p: PatternParam) -> Option<usize> {
    let need = p.forbidden_len();
    let mut run = 0usize;
    for (i, &s) in steps.iter().enumerate() {
        run = if i > 0 && steps[i - 1] != s { run + 1 } else { 1 };
        if s == Step::Rise && run >= need {
            return Some(i + 1 - need);
        }
    }
    None
}

/// All start indices of `factor` in `steps`, overlaps included (KMP).
pub fn occurrences(steps: &[Step], factor: &[Step]) -> Vec<usize> {
    let m = factor.len();
    if m == 0 || m > steps.len() {
        return Vec::new();
    }
    let mut lps = vec![0usize; m];
    let mut len = 0;
    for i in 1..m {
        while len > 0 && factor[i] != factor[len] {
            len = lps[len - 1];
        }
        if factor[i] == factor[len] {
            len += 1;
        }
        lps[i] = len;
    }
    let mut out = Vec::new();
    let mut q = 0;
    for (i, &s) in steps.iter().enumerate() {
        while q > 0 && s != factor[q] {
            q = lps[q - 1];
        }
        if s == factor[q] {
            q += 1;
        }
        if q == m {
            out.push(i + 1 - m);
            q = lps[q - 1];
        }
    }
    out
}

/// Starts and ends at its starting height, strictly above it in between.
pub fn is_primitive(steps: &[Step]) -> bool {
    if steps.is_empty() {
        return false;
    }
    let prof = OrdinateProfile::of(steps);
    let h = prof.heights();
    prof.endpoint() == 0 && h[1..h.len() - 1].iter().all(|&y| y >= 1)
}

/// Never goes below its starting height.
pub fn is_positive(steps: &[Step]) -> bool {
    OrdinateProfile::of(steps).min() >= 0
}

/// Returns to its starting height and never rises above it.
pub fn is_negative(steps: &[Step]) -> bool {
    let prof = OrdinateProfile::of(steps);
    prof.endpoint() == 0 && prof.max() <= 0
}

/// A nonempty negative path; it only differs from a negative one by where
/// it sits inside a larger path (one level below the axis).
pub fn is_strongly_negative(steps: &[Step]) -> bool {
    !steps.is_empty() && is_negative(steps)
}

/// Ends with a nonempty suffix that starts at the final height and never
/// rises above it.
pub fn is_underground(steps: &[Step]) -> bool {
    let prof = OrdinateProfile::of(steps);
    let h = prof.heights();
    let end = prof.endpoint();
    let mut top = end;
    for i in (0..steps.len()).rev() {
        top = top.max(h[i]);
        if top > end {
            return false;
        }
        if h[i] == end {
            return true;
        }
    }
    false
}

/// Whether `steps` is in the class: `|w|_0 <= |w|_1` and no forbidden factor.
pub fn is_admissible(steps: &[Step], p: PatternParam) -> bool {
    endpoint_ordinate(steps) >= 0 && !contains_forbidden(steps, p)
}

pub fn complement(steps: &[Step]) -> Word {
    steps.iter().map(|s| s.flip()).collect()
}

/// Splits `w = prefix · suffix` where `suffix` is the primitive factor that
/// starts where the path last leaves its final height going up.
pub fn rightmost_primitive_suffix(w: &Word) -> Result<(Word, Word)> {
    let split = rightmost_primitive_start(w).ok_or(Error::NoPrimitiveSuffix)?;
    Ok((w.slice(0..split), w.slice(split..w.len())))
}

pub(crate) fn rightmost_primitive_start(steps: &[Step]) -> Option<usize> {
    let prof = OrdinateProfile::of(steps);
    let end = prof.endpoint();
    let i = (0..steps.len()).rev().find(|&i| prof.at(i) == end)?;
    (steps[i] == Step::Rise).then_some(i)
}

/// Splits `w` at every visit to height 0 (the origin excluded). All pieces
/// but the last begin and end on the axis; the last may end higher.
pub fn factorize(w: &Word) -> Vec<Word> {
    let prof = w.profile();
    let mut pieces = Vec::new();
    let mut start = 0;
    for i in 1..=w.len() {
        if prof.at(i) == 0 {
            pieces.push(w.slice(start..i));
            start = i;
        }
    }
    if start < w.len() {
        pieces.push(w.slice(start..w.len()));
    }
    pieces
}

/// ASCII drawing of the path: `/` for a rise, `\` for a fall, one column per
/// step, highest band on top. The empty word renders as an empty string.
pub fn render_ascii(steps: &[Step]) -> String {
    if steps.is_empty() {
        return String::new();
    }
    let prof = OrdinateProfile::of(steps);
    // a rise from y sits in band y, a fall from y in band y - 1
    let band = |i: usize| match steps[i] {
        Step::Rise => prof.at(i),
        Step::Fall => prof.at(i) - 1,
    };
    let lo = (0..steps.len()).map(band).min().unwrap();
    let hi = (0..steps.len()).map(band).max().unwrap();
    let mut lines = Vec::new();
    for row in (lo..=hi).rev() {
        let line: String = (0..steps.len())
            .map(|i| match (band(i) == row, steps[i]) {
                (true, Step::Rise) => '/',
                (true, Step::Fall) => '\\',
                (false, _) => ' ',
            })
            .collect();
        lines.push(line.trim_end().to_string());
    }
    lines.join("\n")
}

/// Reads words one per line; an empty line is the empty word.
pub fn read_words(text: &str) -> Result<Vec<Word>> {
    text.lines().map(parse_word).collect()
}

/// Writes words one per line, LF terminated.
pub fn write_words<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> String {
    let mut out = String::new();
    for w in words {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn naive_contains(s: &str, j: usize) -> bool {
        s.contains(&format!("{}1", "10".repeat(j)))
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w(""), Word::empty());
        assert_eq!(w("10").steps(), &[Step::Rise, Step::Fall]);
        let fig = w("11011010010000101111");
        assert_eq!(fig.len(), 20);
        assert_eq!(fig.to_path_notation(), "xxXxxXxXXxXXXXxXxxxx");
        assert_eq!(fig.to_string(), "11011010010000101111");
    }

    #[test]
    fn parse_rejects_other_characters() {
        match parse_word("10a1") {
            Err(Error::Parse { position, found }) => {
                assert_eq!(position, 2);
                assert_eq!(found, 'a');
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_word(" 1").is_err());
    }

    #[test]
    fn endpoints() {
        assert_eq!(endpoint_ordinate(&w("")), 0);
        assert_eq!(endpoint_ordinate(&w("11")), 2);
        assert_eq!(endpoint_ordinate(&w("1100")), 0);
        assert_eq!(w("11011010010000101111").endpoint(), 2);
    }

    #[test]
    fn forbidden_examples() {
        let p1 = PatternParam::new(1).unwrap();
        let p2 = PatternParam::new(2).unwrap();
        let p4 = PatternParam::new(4).unwrap();
        assert!(contains_forbidden(&w("110101010"), p2));
        assert_eq!(first_forbidden(&w("110101010"), p2), Some(1));
        assert!(!contains_forbidden(&w(""), p1));
        assert!(contains_forbidden(&w("10101"), p2));
        assert!(!contains_forbidden(&w("11011010010000101111"), p4));
        assert_eq!(first_forbidden(&w("101"), p1), Some(0));
        assert_eq!(p2.forbidden(), w("10101"));
        assert_eq!(p2.complement_marker(), w("0010100"));
        assert!(PatternParam::new(0).is_err());
    }

    #[test]
    fn occurrence_examples() {
        assert_eq!(occurrences(&w("110101010"), &w("10101")), vec![1, 3]);
        assert!(occurrences(&w("0000"), &w("1")).is_empty());
        assert_eq!(occurrences(&w("111"), &w("1")), vec![0, 1, 2]);
        assert!(occurrences(&w("111"), &w("")).is_empty());
    }

    #[test]
    fn forbidden_agrees_with_naive_scan_exhaustively() {
        for len in 0..=14u32 {
            for bits in 0..(1u32 << len) {
                let s: String = (0..len)
                    .map(|i| if bits >> i & 1 == 1 { '1' } else { '0' })
                    .collect();
                let word = w(&s);
                for j in 1..=3 {
                    let p = PatternParam::new(j).unwrap();
                    assert_eq!(contains_forbidden(&word, p), naive_contains(&s, j), "{s} j={j}");
                    let naive_first = s.find(&format!("{}1", "10".repeat(j)));
                    assert_eq!(first_forbidden(&word, p), naive_first);
                }
            }
        }
    }

    #[test]
    fn primitive_and_friends() {
        assert!(is_primitive(&w("10")));
        assert!(is_primitive(&w("1100")));
        assert!(!is_primitive(&w("1010")));
        assert!(!is_primitive(&w("")));
        assert!(is_negative(&w("01")));
        assert!(is_underground(&w("01")));
        assert!(is_positive(&w("1100")));
        assert!(!is_underground(&w("1100")));
        assert!(is_underground(&w("1001")));
        assert!(!is_underground(&w("")));
        assert!(!is_underground(&w("1")));
        assert!(is_strongly_negative(&w("0011")));
        assert!(!is_strongly_negative(&w("")));
        assert!(!is_strongly_negative(&w("0110")));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&w("10")), w("01"));
        assert_eq!(complement(&w("")), w(""));
        assert_eq!(complement(&w("1100")), w("0011"));
        assert_eq!(w("110").mirror_suffix(1), w("101"));
    }

    #[test]
    fn rightmost_primitive_suffix_examples() {
        assert_eq!(rightmost_primitive_suffix(&w("1100")).unwrap(), (w(""), w("1100")));
        assert_eq!(rightmost_primitive_suffix(&w("101100")).unwrap(), (w("10"), w("1100")));
        assert_eq!(rightmost_primitive_suffix(&w("10")).unwrap(), (w(""), w("10")));
        assert!(rightmost_primitive_suffix(&w("1")).is_err());
        assert!(rightmost_primitive_suffix(&w("01")).is_err());
        assert!(rightmost_primitive_suffix(&w("")).is_err());
    }

    #[test]
    fn mirroring_the_last_primitive_block() {
        // x (x X)^(h-1) X mirrored is X (X x)^(h-1) x
        for h in 1..5 {
            let up = Word::concat(&[RISE, &Word::peaks(h - 1), FALL]);
            let (pre, suf) = rightmost_primitive_suffix(&up).unwrap();
            assert!(pre.is_empty());
            assert_eq!(suf.complement(), Word::concat(&[FALL, &Word::valleys(h - 1), RISE]));
        }
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(&w("")).is_empty());
        assert_eq!(factorize(&w("110001")), vec![w("1100"), w("01")]);
        assert_eq!(factorize(&w("111")), vec![w("111")]);
        assert_eq!(factorize(&w("1010011")), vec![w("10"), w("10"), w("01"), w("1")]);
    }

    #[test]
    fn ascii_rendering() {
        assert_eq!(render_ascii(&w("1100")), " /\\\n/  \\");
        assert_eq!(render_ascii(&w("10")), "/\\");
        assert_eq!(render_ascii(&w("01")), "\\/");
        assert_eq!(render_ascii(&w("")), "");
    }

    #[test]
    fn word_lines_round_trip() {
        let words = vec![w("10"), w(""), w("0011")];
        let text = write_words(&words);
        assert_eq!(text, "10\n\n0011\n");
        assert_eq!(read_words(&text).unwrap(), words);
    }
}
