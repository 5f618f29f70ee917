//! Parse, multiply and print multivectors.

use cliffroot::algebra::{format_mv, parse_mv, TextStyle};
use cliffroot::{Multivector, Signature};

fn main() -> cliffroot::Result<()> {
    let sig = Signature::new(3, 0)?;
    let a = parse_mv(sig, "1 + 2*e1 - e31")?;
    let b = parse_mv(sig, "e2 + 0.5*e123")?;
    let show = |m: &Multivector| format_mv(m, TextStyle::Cyclic);
    println!("a       = {}", show(&a));
    println!("b       = {}", show(&b));
    println!("a b     = {}", show(&(&a * &b)));
    println!("a ^ b   = {}", show(&a.outer_product(&b)?));
    println!("a _| b  = {}", show(&a.left_contraction(&b)?));
    println!("<a b>0  = {}", a.scalar_product(&b)?);
    println!("rev(a)  = {}", show(&a.reverse()));
    println!("inv(a)  = {}", show(&a.grade_involution()));
    println!("dual(b) = {}", show(&b.dual()));
    println!("canonical a = {}", format_mv(&a, TextStyle::Canonical));
    Ok(())
}
