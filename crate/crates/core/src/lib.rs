//! Exhaustive generation of binary words with no more `0`s than `1`s that
//! avoid the factor `(10)^j 1`.
//!
//! A word is read as a lattice path, `1` a rise and `0` a fall. The words
//! with `n` ones form level `n` of a generating tree: every word is obtained
//! from exactly one parent by inserting `h` ones, `1 <= h <= j`, according to
//! rules that depend on the final height `k` of the parent and on its suffix.
//!
//! * [`word`]: words, heights, factor search and path predicates.
//! * [`rules`]: classification of a word and its children for each `h`.
//! * [`generator`]: traversal of the tree, counting and export.
//! * [`oracle`]: brute-force enumeration and the checks built on it.
//! * [`cli`]: the `pavgen` command-line front end.

pub mod cli;
pub mod error;
pub mod generator;
pub mod oracle;
pub mod rules;
pub mod word;

pub use error::{Error, Result};
pub use generator::{count_by_ones, export_tree, generate_all, GenerationConfig, GenerationNode, Generator, Traversal, TreeFormat};
pub use rules::{classify, expand, phi, phi_inverse, Branch, Child, Expansion, ExpansionCase, SuffixClass};
pub use word::{contains_forbidden, parse_word, render_ascii, PatternParam, Step, Word};
