//! Classifies a word and prints its children for every h.
//!
//! cargo run --example classify_and_expand -- [word] [j]

use pavgen::rules::rule_family;
use pavgen::{classify, expand, parse_word, PatternParam};

fn main() -> pavgen::Result<()> {
    let mut args = std::env::args().skip(1);
    let word = parse_word(&args.next().unwrap_or_else(|| "1110".into()))?;
    let j = args.next().map_or(2, |a| a.parse().expect("numeric j"));
    let p = PatternParam::new(j)?;
    let case = classify(&word, p)?;
    println!("{word}: k={}, {}, underground={}", case.k, case.suffix_class, case.underground);
    println!("rule: {}", rule_family(&case));
    for h in 1..=j {
        let e = expand(&word, h, p)?;
        for c in &e.children {
            let swapped = if c.swap.is_some() { " (swap applied)" } else { "" };
            println!("  h={h} {:<10} {:>16}{swapped}", c.branch.to_string(), c.word.to_string());
        }
    }
    Ok(())
}
