//! Shows the swap that repairs a complemented primitive path and its inverse.
//!
//! cargo run --example swap_operation

use pavgen::rules::phi_traced;
use pavgen::word::contains_forbidden;
use pavgen::{phi_inverse, render_ascii, PatternParam, Word};

fn main() -> pavgen::Result<()> {
    for (j, text) in [(1, "11100100"), (3, "11011001010100")] {
        let p = PatternParam::new(j)?;
        let mu: Word = text.parse()?;
        let v = mu.complement();
        let (out, swaps) = phi_traced(&v, p)?;
        println!("j={j} primitive path {mu}");
        println!("{}", render_ascii(&mu));
        println!("complement {v} contains {}: {}", p.forbidden(), contains_forbidden(&v, p));
        println!("after {swaps} swap(s): {out} contains it: {}", contains_forbidden(&out, p));
        println!("{}", render_ascii(&out));
        println!("inverse gives back {}\n", phi_inverse(&out, p)?);
    }
    Ok(())
}
