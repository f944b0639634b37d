//! Comparisons between the generator, the rules and the brute-force oracle.
//!
//! Every check returns a report instead of failing fast, so that a mismatch
//! is printed with the offending words.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use super::brute::{oracle_enumerate_guarded, primitive_paths};
use crate::error::Result;
use crate::generator::{walk, ParentEdge};
use crate::rules::{arity, phi_inverse, phi_traced, successor_labels, Branch};
use crate::word::{complement, contains_forbidden, is_primitive, is_underground, PatternParam, Word};

/// Number of sample entries kept per discrepancy list.
pub const SAMPLE_CAP: usize = 50;

/// A discrepancy counter with a bounded, sorted sample.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Discrepancies {
    pub total: usize,
    pub sample: Vec<String>,
}

impl Discrepancies {
    fn push(&mut self, item: impl fmt::Display) {
        self.total += 1;
        if self.sample.len() < SAMPLE_CAP {
            self.sample.push(item.to_string());
        }
    }

    fn finish(mut self) -> Self {
        self.sample.sort();
        self
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, name: &str, d: &Discrepancies) -> fmt::Result {
    if d.is_empty() {
        return Ok(());
    }
    let shown: Vec<&str> = d.sample.iter().map(|s| if s.is_empty() { "ε" } else { s.as_str() }).collect();
    writeln!(f)?;
    write!(f, "  {name} ({}): {}", d.total, shown.join(" "))?;
    if d.total > d.sample.len() {
        write!(f, " ...")?;
    }
    Ok(())
}

/// Generator output against the oracle for one `(j, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub j: usize,
    pub n: usize,
    pub oracle_count: usize,
    pub generated_count: usize,
    pub missing: Discrepancies,
    pub extra: Discrepancies,
    pub duplicate: Discrepancies,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.duplicate.is_empty()
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "j={} n={}: oracle {}, generated {}, missing {}, extra {}, duplicate {}: {}",
            self.j,
            self.n,
            self.oracle_count,
            self.generated_count,
            self.missing.total,
            self.extra.total,
            self.duplicate.total,
            verdict(self.passed())
        )?;
        write_list(f, "missing", &self.missing)?;
        write_list(f, "extra", &self.extra)?;
        write_list(f, "duplicate", &self.duplicate)
    }
}

/// Compares the words generated with `n` ones with the oracle's set.
/// `guard` bounds `n` for the oracle.
pub fn check_equivalence(p: PatternParam, n: usize, guard: usize) -> Result<OracleReport> {
    let oracle = oracle_enumerate_guarded(p, n, guard)?;
    let mut seen: HashMap<Word, usize> = HashMap::new();
    let mut generated_count = 0;
    walk(p, n, |node, _| {
        if node.ones == n {
            generated_count += 1;
            *seen.entry(node.word.clone()).or_default() += 1;
        }
        Ok(())
    })?;
    let mut missing = Discrepancies::default();
    let mut extra = Discrepancies::default();
    let mut duplicate = Discrepancies::default();
    for w in &oracle {
        if !seen.contains_key(w) {
            missing.push(w);
        }
    }
    let mut generated: Vec<(&Word, &usize)> = seen.iter().collect();
    generated.sort();
    for (w, &times) in generated {
        if !oracle.contains(w) {
            extra.push(w);
        }
        if times > 1 {
            duplicate.push(w);
        }
    }
    Ok(OracleReport {
        j: p.j(),
        n,
        oracle_count: oracle.len(),
        generated_count,
        missing: missing.finish(),
        extra: extra.finish(),
        duplicate: duplicate.finish(),
    })
}

/// Structural properties of complementation and the swap over all primitive
/// paths up to a length.
///
/// * `complement_factor`: for an admissible primitive `mu`, `mu^c` contains
///   `(10)^j 1` exactly when `mu` contains `(01)^j 0`.
/// * `swap`: for every such `mu` whose complement is not admissible, the swap
///   of `mu^c` is admissible, its complement is not, and the inverse swap
///   recovers `mu^c`.
/// * `inverse`: for every non-admissible primitive `mu` with admissible `mu^c`,
///   the inverse swap yields the complement of an admissible primitive path
///   that the swap maps back to `mu^c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub j: usize,
    pub max_len: usize,
    pub primitives: usize,
    pub admissible_primitives: usize,
    pub complement_factor: Discrepancies,
    pub swap_inputs: usize,
    pub swap: Discrepancies,
    pub round_trips: usize,
    pub inverse_inputs: usize,
    pub inverse: Discrepancies,
}

impl PropositionReport {
    pub fn passed(&self) -> bool {
        self.complement_factor.is_empty() && self.swap.is_empty() && self.inverse.is_empty()
    }
}

impl fmt::Display for PropositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "j={} length<={}: {} admissible primitive paths, {} swaps, {} round trips, {} inverse cases: {}",
            self.j,
            self.max_len,
            self.admissible_primitives,
            self.swap_inputs,
            self.round_trips,
            self.inverse_inputs,
            verdict(self.passed())
        )?;
        write_list(f, "complement/factor mismatch", &self.complement_factor)?;
        write_list(f, "swap failure", &self.swap)?;
        write_list(f, "inverse failure", &self.inverse)
    }
}

pub fn check_propositions(p: PatternParam, max_len: usize) -> Result<PropositionReport> {
    let j = p.j();
    let marker = Word::concat(&[&Word::valleys(j), &Word::falls(1)]);
    let mut report = PropositionReport {
        j,
        max_len,
        primitives: 0,
        admissible_primitives: 0,
        complement_factor: Discrepancies::default(),
        swap_inputs: 0,
        swap: Discrepancies::default(),
        round_trips: 0,
        inverse_inputs: 0,
        inverse: Discrepancies::default(),
    };
    for mu in primitive_paths(max_len)? {
        report.primitives += 1;
        let flipped = mu.complement();
        let mu_ok = !contains_forbidden(&mu, p);
        let flipped_ok = !contains_forbidden(&flipped, p);
        if mu_ok {
            report.admissible_primitives += 1;
            let has_marker = mu.windows(marker.len()).any(|w| w == &marker[..]);
            if has_marker == flipped_ok {
                report.complement_factor.push(&mu);
            }
            if !flipped_ok {
                report.swap_inputs += 1;
                match phi_traced(&flipped, p) {
                    Ok((out, _)) => {
                        let good = !contains_forbidden(&out, p)
                            && contains_forbidden(&out.complement(), p)
                            && is_primitive(&out.complement());
                        if !good {
                            report.swap.push(format!("{mu}->{out}"));
                        }
                        match phi_inverse(&out, p) {
                            Ok(back) if back == flipped => report.round_trips += 1,
                            _ => report.swap.push(format!("{mu}:inverse")),
                        }
                    }
                    Err(_) => report.swap.push(&mu),
                }
            }
        } else if flipped_ok {
            report.inverse_inputs += 1;
            let good = phi_inverse(&flipped, p).ok().and_then(|back| {
                let eta = complement(&back);
                let ok = !contains_forbidden(&eta, p) && is_primitive(&eta);
                let forward = phi_traced(&back, p).ok().map(|(w, _)| w);
                (ok && forward.as_ref() == Some(&flipped)).then_some(())
            });
            if good.is_none() {
                report.inverse.push(&mu);
            }
        }
    }
    report.complement_factor = report.complement_factor.finish();
    report.swap = report.swap.finish();
    report.inverse = report.inverse.finish();
    Ok(report)
}

/// Every node of the tree has at most one parent edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub j: usize,
    pub n: usize,
    pub nodes: usize,
    /// Words reached from more than one `(parent, h, branch)`.
    pub collisions: Discrepancies,
}

impl UniquenessReport {
    pub fn passed(&self) -> bool {
        self.collisions.is_empty()
    }
}

impl fmt::Display for UniquenessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "j={} n<={}: {} nodes, {} with several parents: {}", self.j, self.n, self.nodes,
            self.collisions.total, verdict(self.passed()))?;
        write_list(f, "collisions", &self.collisions)
    }
}

fn describe_edge(e: &ParentEdge) -> String {
    let parent = if e.parent.is_empty() { "ε".to_string() } else { e.parent.to_string() };
    format!("{parent}/h={}/{}", e.h, e.branch)
}

pub fn check_parent_uniqueness(p: PatternParam, n: usize) -> Result<UniquenessReport> {
    let mut parents: BTreeMap<Word, Vec<String>> = BTreeMap::new();
    let mut nodes = 0;
    walk(p, n, |node, _| {
        nodes += 1;
        let edge = node.parent_edge.as_ref().map(describe_edge).unwrap_or_else(|| "root".into());
        parents.entry(node.word.clone()).or_default().push(edge);
        Ok(())
    })?;
    let mut collisions = Discrepancies::default();
    for (word, edges) in parents.iter().filter(|(_, e)| e.len() > 1) {
        collisions.push(format!("{word}<-{}", edges.join(",")));
    }
    Ok(UniquenessReport { j: p.j(), n, nodes, collisions: collisions.finish() })
}

/// Audit of every expansion performed while generating up to `n` ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleAudit {
    pub j: usize,
    pub n: usize,
    pub expansions: usize,
    pub children: usize,
    /// Child count differs from the arity of the parent's label.
    pub arity: Discrepancies,
    /// Child labels differ from the succession rule.
    pub labels: Discrepancies,
    /// A child with a number of ones other than parent + h.
    pub ones: Discrepancies,
    /// A child outside the class.
    pub closure: Discrepancies,
    /// An underground child that is not underground, or the reverse.
    pub underground: Discrepancies,
    pub swap_applications: usize,
    /// Most occurrences removed by a single swap application.
    pub max_swaps: usize,
    /// A swap whose output breaks the swap properties.
    pub swap: Discrepancies,
}

impl RuleAudit {
    pub fn passed(&self) -> bool {
        [&self.arity, &self.labels, &self.ones, &self.closure, &self.underground, &self.swap]
            .iter()
            .all(|d| d.is_empty())
    }
}

impl fmt::Display for RuleAudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "j={} n<={}: {} expansions, {} children, {} swaps (at most {} per child): {}",
            self.j,
            self.n,
            self.expansions,
            self.children,
            self.swap_applications,
            self.max_swaps,
            verdict(self.passed())
        )?;
        write_list(f, "arity", &self.arity)?;
        write_list(f, "labels", &self.labels)?;
        write_list(f, "ones", &self.ones)?;
        write_list(f, "closure", &self.closure)?;
        write_list(f, "underground", &self.underground)?;
        write_list(f, "swap", &self.swap)
    }
}

pub fn check_rules(p: PatternParam, n: usize) -> Result<RuleAudit> {
    let mut audit = RuleAudit {
        j: p.j(),
        n,
        expansions: 0,
        children: 0,
        arity: Discrepancies::default(),
        labels: Discrepancies::default(),
        ones: Discrepancies::default(),
        closure: Discrepancies::default(),
        underground: Discrepancies::default(),
        swap_applications: 0,
        max_swaps: 0,
        swap: Discrepancies::default(),
    };
    walk(p, n, |node, expansions| {
        if contains_forbidden(&node.word, p) || !node.word.is_balanced_or_rising() {
            audit.closure.push(&node.word);
        }
        for e in expansions {
            audit.expansions += 1;
            audit.children += e.children.len();
            let tag = || format!("{}/h={}", e.parent, e.h);
            if e.children.len() != arity(node.label) {
                audit.arity.push(tag());
            }
            let labels: Vec<i32> = e.children.iter().map(|c| c.word.endpoint()).collect();
            let branch_labels: Vec<i32> = e.children.iter().map(|c| c.branch.label()).collect();
            if labels != successor_labels(node.label) || branch_labels != labels {
                audit.labels.push(tag());
            }
            for c in &e.children {
                if c.word.ones() != node.ones + e.h {
                    audit.ones.push(&c.word);
                }
                if contains_forbidden(&c.word, p) || !c.word.is_balanced_or_rising() {
                    audit.closure.push(&c.word);
                }
                let claimed = c.branch == Branch::Underground;
                let actual = c.word.endpoint() == 0 && is_underground(&c.word);
                if claimed != actual {
                    audit.underground.push(&c.word);
                }
                if let Some(trace) = &c.swap {
                    audit.swap_applications += 1;
                    audit.max_swaps = audit.max_swaps.max(trace.swaps);
                    let good = !contains_forbidden(&trace.output, p)
                        && contains_forbidden(&trace.output.complement(), p)
                        && phi_inverse(&trace.output, p).ok().as_ref() == Some(&trace.input);
                    if !good {
                        audit.swap.push(&trace.input);
                    }
                }
            }
        }
        Ok(())
    })?;
    for d in [
        &mut audit.arity,
        &mut audit.labels,
        &mut audit.ones,
        &mut audit.closure,
        &mut audit.underground,
        &mut audit.swap,
    ] {
        *d = std::mem::take(d).finish();
    }
    Ok(audit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_GUARD;

    fn pj(j: usize) -> PatternParam {
        PatternParam::new(j).unwrap()
    }

    #[test]
    fn equivalence_small() {
        for j in 1..=3 {
            for n in 0..=5 {
                let r = check_equivalence(pj(j), n, DEFAULT_GUARD).unwrap();
                assert!(r.passed(), "{r}");
                assert_eq!(r.oracle_count, r.generated_count);
            }
        }
    }

    #[test]
    fn propositions_small() {
        let r = check_propositions(pj(1), 10).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.swap_inputs > 0);
        assert_eq!(r.swap_inputs, r.round_trips);
    }

    #[test]
    fn uniqueness_and_rules_small() {
        for j in 1..=3 {
            let u = check_parent_uniqueness(pj(j), 5).unwrap();
            assert!(u.passed(), "{u}");
            let a = check_rules(pj(j), 5).unwrap();
            assert!(a.passed(), "{a}");
        }
    }

    #[test]
    fn report_lists_offenders() {
        let mut d = Discrepancies::default();
        for i in (0..60).rev() {
            d.push(format!("{i:02}"));
        }
        let d = d.finish();
        assert_eq!(d.total, 60);
        assert_eq!(d.sample.len(), SAMPLE_CAP);
        assert!(d.sample.windows(2).all(|w| w[0] <= w[1]));
        let report = OracleReport {
            j: 1,
            n: 1,
            oracle_count: 3,
            generated_count: 2,
            missing: Discrepancies { total: 1, sample: vec!["01".into()] },
            extra: Discrepancies::default(),
            duplicate: Discrepancies::default(),
        };
        assert!(!report.passed());
        let text = report.to_string();
        assert!(text.contains("FAIL") && text.contains("missing (1): 01"), "{text}");
    }
}
