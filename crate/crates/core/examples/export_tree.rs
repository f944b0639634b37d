//! Writes the first levels of the generating tree as Graphviz DOT.
//!
//! cargo run --example export_tree -- [j] [n] > tree.dot && dot -Tsvg tree.dot -o tree.svg

use pavgen::{export_tree, PatternParam, TreeFormat};

fn main() -> pavgen::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("numeric argument"));
    let j = args.next().unwrap_or(2);
    let n = args.next().unwrap_or(3);
    print!("{}", export_tree(PatternParam::new(j)?, n, TreeFormat::Dot)?);
    Ok(())
}
