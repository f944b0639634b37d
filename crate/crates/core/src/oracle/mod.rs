//! Ground truth for the generator.
//!
//! [`brute`] enumerates the class by filtering every candidate word and only
//! depends on the word module. [`checks`] compares the generator and the
//! rules against it and against the structural properties of the swap.

pub mod brute;
pub mod checks;

pub use brute::{oracle_enumerate, oracle_enumerate_guarded, primitive_paths, DEFAULT_GUARD, PRIMITIVE_LEN_GUARD};
pub use checks::{
    check_equivalence, check_parent_uniqueness, check_propositions, check_rules, Discrepancies, OracleReport,
    PropositionReport, RuleAudit, UniquenessReport,
};
