//! Prints the number of admissible words per number of ones for j = 1..3.
//!
//! cargo run --release --example count_sequence -- [n_max]

use pavgen::{count_by_ones, PatternParam};

fn main() -> pavgen::Result<()> {
    let n_max = std::env::args().nth(1).map_or(9, |a| a.parse().expect("numeric argument"));
    for j in 1..=3 {
        let counts = count_by_ones(PatternParam::new(j)?, n_max)?;
        let line: Vec<String> = counts.iter().map(u64::to_string).collect();
        println!("j={j}: {}", line.join(" "));
    }
    Ok(())
}
