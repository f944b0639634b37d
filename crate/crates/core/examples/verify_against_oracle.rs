//! Runs every oracle check for one j up to n ones.
//!
//! cargo run --release --example verify_against_oracle -- [j] [n]

use pavgen::oracle::{check_equivalence, check_parent_uniqueness, check_propositions, check_rules, DEFAULT_GUARD};
use pavgen::PatternParam;

fn main() -> pavgen::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("numeric argument"));
    let j = args.next().unwrap_or(2);
    let n = args.next().unwrap_or(6);
    let p = PatternParam::new(j)?;
    for level in 0..=n {
        println!("{}", check_equivalence(p, level, DEFAULT_GUARD)?);
    }
    println!("{}", check_parent_uniqueness(p, n)?);
    println!("{}", check_rules(p, n)?);
    println!("{}", check_propositions(p, 14)?);
    Ok(())
}
