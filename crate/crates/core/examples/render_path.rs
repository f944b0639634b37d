//! Draws words as lattice paths, with their heights and axis factors.
//!
//! cargo run --example render_path -- [word ...]

use pavgen::word::factorize;
use pavgen::{parse_word, render_ascii};

fn main() -> pavgen::Result<()> {
    let mut words: Vec<String> = std::env::args().skip(1).collect();
    if words.is_empty() {
        words = vec!["1100".into(), "1101001".into(), "0110011".into()];
    }
    for text in &words {
        let w = parse_word(text)?;
        let pieces: Vec<String> = factorize(&w).iter().map(|f| f.to_string()).collect();
        println!("{w}  ({})  heights {:?}", w.to_path_notation(), w.profile().heights());
        println!("factors: {}", pieces.join(" | "));
        println!("{}\n", render_ascii(&w));
    }
    Ok(())
}
