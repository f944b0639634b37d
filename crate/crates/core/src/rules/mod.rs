//! Constructive rules of the generating tree.
//!
//! A word `w` with `n` ones and endpoint ordinate `k` produces, for every
//! `1 <= h <= j`, children with `n + h` ones: three when `k = 0`, one when
//! `k = 1` and `k + 2` when `k >= 2`. The shape of the children depends on
//! `k` and on whether `w` ends with `(10)^j` (rho suffix) or, at `k = 0`,
//! with the underground tail `1 (01)^(j-1)`.

mod negative;
mod swap;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{
    contains_forbidden, endpoint_ordinate, first_forbidden, is_underground,
    rightmost_primitive_start, PatternParam, Word, FALL, RISE,
};

pub use negative::{decompose_negative_suffix, underground_negsuffix, NegSuffixDecomposition, NegSuffixVariant};
pub use swap::{phi, phi_inverse, phi_traced, underground_kge2, SwapTrace};

/// Which suffix rule applies to a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuffixClass {
    Plain,
    /// Ends with `(10)^j`.
    RhoSuffix,
    /// Ends on the axis with `1 (01)^(j-1)` (necessarily underground).
    NegSuffixSpecial,
}

impl fmt::Display for SuffixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuffixClass::Plain => "plain",
            SuffixClass::RhoSuffix => "rho-suffix",
            SuffixClass::NegSuffixSpecial => "neg-suffix-special",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ExpansionCase {
    pub k: i32,
    pub suffix_class: SuffixClass,
    pub underground: bool,
}

/// How a child relates to its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// A positive child ending at the given ordinate.
    ToOrdinate(i32),
    /// The positive child returning to the axis.
    ToZero,
    /// The underground child.
    Underground,
}

impl Branch {
    /// Endpoint ordinate every child on this branch must have.
    pub fn label(self) -> i32 {
        match self {
            Branch::ToOrdinate(m) => m,
            Branch::ToZero | Branch::Underground => 0,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::ToOrdinate(m) => write!(f, "ordinate({m})"),
            Branch::ToZero => f.write_str("zero"),
            Branch::Underground => f.write_str("underground"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Child {
    pub word: Word,
    pub branch: Branch,
    /// Set when the underground child needed the swap operation.
    pub swap: Option<SwapTrace>,
}

impl Child {
    fn new(word: Word, branch: Branch) -> Child {
        Child { word, branch, swap: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub parent: Word,
    pub h: usize,
    pub case: ExpansionCase,
    pub children: Vec<Child>,
}

impl Expansion {
    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.children.iter().map(|c| &c.word)
    }
}

/// Number of children per `h` for a node labelled `k`.
pub fn arity(k: i32) -> usize {
    match k {
        0 => 3,
        1 => 1,
        k => k as usize + 2,
    }
}

/// Labels of the children of a node labelled `k`, in child order.
pub fn successor_labels(k: i32) -> Vec<i32> {
    match k {
        0 => vec![1, 0, 0],
        1 => vec![2],
        k => {
            let mut labels: Vec<i32> = std::iter::once(k + 1).chain((1..k).rev()).collect();
            labels.extend([0, 0]);
            labels
        }
    }
}

pub fn classify(w: &Word, p: PatternParam) -> Result<ExpansionCase> {
    let k = endpoint_ordinate(w);
    if k < 0 {
        return Err(Error::NotInClass { word: w.to_string() });
    }
    if let Some(index) = first_forbidden(w, p) {
        return Err(Error::ForbiddenFactor { word: w.to_string(), index });
    }
    let neg_tail = Word::concat(&[RISE, &Word::valleys(p.j() - 1)]);
    let suffix_class = if k == 0 && w.ends_with(&neg_tail) {
        SuffixClass::NegSuffixSpecial
    } else if w.ends_with(&p.rho()) {
        SuffixClass::RhoSuffix
    } else {
        SuffixClass::Plain
    };
    Ok(ExpansionCase { k, suffix_class, underground: is_underground(w) })
}

fn check_h(h: usize, p: PatternParam) -> Result<()> {
    if h == 0 || h > p.j() {
        return Err(Error::HOutOfRange { h, j: p.j() });
    }
    Ok(())
}

fn require(
    w: &Word,
    p: PatternParam,
    h: usize,
    expected: &'static str,
    ok: impl Fn(&ExpansionCase) -> bool,
) -> Result<ExpansionCase> {
    check_h(h, p)?;
    let case = classify(w, p)?;
    if !ok(&case) {
        return Err(Error::CaseMismatch {
            expected,
            word: w.to_string(),
            k: case.k,
            found: case.suffix_class,
        });
    }
    Ok(case)
}

/// The underground child on the axis: mirror the rightmost primitive suffix
/// of the child that returns to the axis.
fn mirrored(to_zero: &Word) -> Word {
    let start = rightmost_primitive_start(to_zero).expect("child returning to the axis ends with a peak block");
    to_zero.mirror_suffix(start)
}

fn plain_k0_children(w: &Word, h: usize) -> Vec<Child> {
    let up = Word::peaks(h - 1);
    let to_one = Word::concat(&[w, RISE, &up]);
    let to_zero = Word::concat(&[&to_one, FALL]);
    let under = mirrored(&to_zero);
    vec![
        Child::new(to_one, Branch::ToOrdinate(1)),
        Child::new(to_zero, Branch::ToZero),
        Child::new(under, Branch::Underground),
    ]
}

/// `k = 0`, no special suffix: `w 1 (10)^(h-1)`, `w 1 (10)^(h-1) 0`, `w 0 (01)^(h-1) 1`.
pub fn expand_plain_k0(w: &Word, h: usize, p: PatternParam) -> Result<Vec<Child>> {
    require(w, p, h, "plain k=0", |c| c.k == 0 && c.suffix_class == SuffixClass::Plain)?;
    Ok(plain_k0_children(w, h))
}

/// `k = 1`, no special suffix: `w 1 (10)^(h-1)`.
pub fn expand_plain_k1(w: &Word, h: usize, p: PatternParam) -> Result<Vec<Child>> {
    require(w, p, h, "plain k=1", |c| c.k == 1 && c.suffix_class == SuffixClass::Plain)?;
    Ok(vec![Child::new(Word::concat(&[w, RISE, &Word::peaks(h - 1)]), Branch::ToOrdinate(2))])
}

/// `k >= 2`, no special suffix: `k + 2` children.
pub fn expand_plain_kge2(w: &Word, h: usize, p: PatternParam) -> Result<Vec<Child>> {
    let case = require(w, p, h, "plain k>=2", |c| c.k >= 2 && c.suffix_class == SuffixClass::Plain)?;
    let k = case.k;
    let up = Word::peaks(h - 1);
    let mut children = vec![Child::new(Word::concat(&[w, RISE, &up]), Branch::ToOrdinate(k + 1))];
    for m in 2..=k {
        let child = Word::concat(&[w, RISE, &Word::falls(m as usize), &up]);
        children.push(Child::new(child, Branch::ToOrdinate(k + 1 - m)));
    }
    let to_zero = Word::concat(&[w, RISE, &Word::falls(k as usize), &up, FALL]);
    let under = underground_child(&to_zero, p)?;
    children.push(Child::new(to_zero, Branch::ToZero));
    children.push(under);
    Ok(children)
}

fn underground_child(to_zero: &Word, p: PatternParam) -> Result<Child> {
    let (word, swap) = underground_kge2(to_zero, p)?;
    Ok(Child { word, branch: Branch::Underground, swap })
}

/// Splits `w = w0 (10)^j` and returns `w0 (10)^(h-1) 1`, the common prefix of
/// every rho-suffix child.
fn rho_prefix(w: &Word, h: usize, p: PatternParam) -> Word {
    let w0 = &w[..w.len() - 2 * p.j()];
    Word::concat(&[w0, &Word::peaks(h - 1), RISE])
}

/// `k = 0`, suffix `(10)^j`: the rise goes in front of the suffix.
pub fn expand_rho_k0(w: &Word, h: usize, p: PatternParam) -> Result<Vec<Child>> {
    require(w, p, h, "rho-suffix k=0", |c| c.k == 0 && c.suffix_class == SuffixClass::RhoSuffix)?;
    let rho = p.rho();
    let to_one = Word::concat(&[&rho_prefix(w, h, p), &rho]);
    let to_zero = Word::concat(&[&to_one, FALL]);
    let under = mirrored(&to_zero);
    Ok(vec![
        Child::new(to_one, Branch::ToOrdinate(1)),
        Child::new(to_zero, Branch::ToZero),
        Child::new(under, Branch::Underground),
    ])
}

/// `k = 1`, suffix `(10)^j`.
pub fn expand_rho_k1(w: &Word, h: usize, p: PatternParam) -> Result<Vec<Child>> {
    require(w, p, h, "rho-suffix k=1", |c| c.k == 1 && c.suffix_class == SuffixClass::RhoSuffix)?;
    Ok(vec![Child::new(Word::concat(&[&rho_prefix(w, h, p), &p.rho()]), Branch::ToOrdinate(2))])
}

/// `k >= 2`, suffix `(10)^j`.
pub fn expand_rho_kge2(w: &Word, h: usize, p: PatternParam) -> Result<Vec<Child>> {
    let case = require(w, p, h, "rho-suffix k>=2", |c| c.k >= 2 && c.suffix_class == SuffixClass::RhoSuffix)?;
    let k = case.k;
    let prefix = rho_prefix(w, h, p);
    let rho = p.rho();
    let mut children = vec![Child::new(Word::concat(&[&prefix, &rho]), Branch::ToOrdinate(k + 1))];
    for m in 2..=k {
        let child = Word::concat(&[&prefix, &Word::falls(m as usize), &rho]);
        children.push(Child::new(child, Branch::ToOrdinate(k + 1 - m)));
    }
    let to_zero = Word::concat(&[&prefix, &Word::falls(k as usize), &rho, FALL]);
    let under = underground_child(&to_zero, p)?;
    children.push(Child::new(to_zero, Branch::ToZero));
    children.push(under);
    Ok(children)
}

/// `k = 0` word ending with `1 (01)^(j-1)`. For `h >= 2` the plain rules
/// apply unchanged; for `h = 1` the underground child is rebuilt.
pub fn expand_negsuffix(w: &Word, h: usize, p: PatternParam) -> Result<Vec<Child>> {
    require(w, p, h, "negative suffix", |c| c.suffix_class == SuffixClass::NegSuffixSpecial)?;
    let mut children = plain_k0_children(w, h);
    if h == 1 {
        children[2] = Child::new(underground_negsuffix(w, p)?, Branch::Underground);
    }
    Ok(children)
}

/// Applies the rule selected by `classify(w)` for one value of `h`.
pub fn expand(w: &Word, h: usize, p: PatternParam) -> Result<Expansion> {
    check_h(h, p)?;
    let case = classify(w, p)?;
    let children = match (case.suffix_class, case.k) {
        (SuffixClass::NegSuffixSpecial, _) => expand_negsuffix(w, h, p)?,
        (SuffixClass::RhoSuffix, 0) => expand_rho_k0(w, h, p)?,
        (SuffixClass::RhoSuffix, 1) => expand_rho_k1(w, h, p)?,
        (SuffixClass::RhoSuffix, _) => expand_rho_kge2(w, h, p)?,
        (SuffixClass::Plain, 0) => expand_plain_k0(w, h, p)?,
        (SuffixClass::Plain, 1) => expand_plain_k1(w, h, p)?,
        (SuffixClass::Plain, _) => expand_plain_kge2(w, h, p)?,
    };
    debug_assert!(children.iter().all(|c| !contains_forbidden(&c.word, p)));
    Ok(Expansion { parent: w.clone(), h, case, children })
}

/// Human-readable name of the rule family `expand` uses for `case`.
pub fn rule_family(case: &ExpansionCase) -> &'static str {
    match (case.suffix_class, case.k) {
        (SuffixClass::NegSuffixSpecial, _) => {
            "axis rules for h>=2; rebuilt underground child for h=1"
        }
        (SuffixClass::RhoSuffix, 0) => "rise inserted before (10)^j, axis case",
        (SuffixClass::RhoSuffix, 1) => "rise inserted before (10)^j, single child",
        (SuffixClass::RhoSuffix, _) => "rise inserted before (10)^j, k+2 children",
        (SuffixClass::Plain, 0) => "append, axis case",
        (SuffixClass::Plain, 1) => "append, single child",
        (SuffixClass::Plain, _) => "append, k+2 children",
    }
}
