//! Print the grade-wise constraint system of A^2 = -1.
//!
//! cargo run --example derive_constraints -- 3 0

use cliffroot::algebra::TextStyle;
use cliffroot::symbolic::{constraints_to_text, derive_constraints, system_to_json};
use cliffroot::Signature;

fn main() -> cliffroot::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (p, q) = match args.as_slice() {
        [p, q] => (*p, *q),
        _ => (3, 0),
    };
    let sig = Signature::new(p, q)?;
    let sys = derive_constraints(sig);
    println!("{sig}, cyclic names:");
    print!("{}", constraints_to_text(&sys, TextStyle::Cyclic));
    println!("\ncanonical names:");
    print!("{}", constraints_to_text(&sys, TextStyle::Canonical));
    let json = system_to_json(&sys);
    println!("\nJSON export, {} bytes:", json.len());
    println!("{}", json.lines().take(12).collect::<Vec<_>>().join("\n"));
    Ok(())
}
