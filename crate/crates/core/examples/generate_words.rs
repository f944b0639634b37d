//! Streams every admissible word with n ones.
//!
//! cargo run --example generate_words -- [j] [n]

use pavgen::{GenerationConfig, Generator, PatternParam};

fn main() -> pavgen::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("numeric argument"));
    let j = args.next().unwrap_or(2);
    let n = args.next().unwrap_or(3).max(1);
    let p = PatternParam::new(j)?;
    println!("words with {n} ones avoiding {}:", p.forbidden());
    for node in Generator::new(GenerationConfig::new(p, n)) {
        let node = node?;
        let edge = node.parent_edge.as_ref().expect("n > 0 has a parent");
        let parent = if edge.parent.is_empty() { "ε".to_string() } else { edge.parent.to_string() };
        println!("{:>12}  k={}  from {parent} with h={} ({})", node.word.to_string(), node.label, edge.h, edge.branch);
    }
    Ok(())
}
