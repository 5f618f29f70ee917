//! Rotor conjugation keeps roots roots, and exp(phi A) = cos phi + A sin phi.

use cliffroot::algebra::{format_mv, TextStyle};
use cliffroot::roots::{classify, sample, verify, RootCase};
use cliffroot::{BasisBlade, Multivector, Signature};

fn main() -> cliffroot::Result<()> {
    let sig = Signature::new(3, 1)?;
    let a = sample(RootCase::N4_Z_BP0_B0, sig, 3, 1.0)?;
    println!("A = {}", format_mv(&a, TextStyle::Cyclic));

    let mut bivector = Multivector::zero(sig);
    bivector.set(BasisBlade(0b0011), 0.4);
    bivector.set(BasisBlade(0b1001), -0.3);
    let r = bivector.exp_default()?;
    let r_inv = bivector.scale(-1.0).exp_default()?;
    // the e4 split is basis dependent, so the family can change under rotation
    let b = &(&r_inv * &a) * &r;
    println!("R^-1 A R = {}", format_mv(&b, TextStyle::Cyclic));
    println!("  residual {:e}, family {:?}", verify(&b, 1e-9).residual_norm, classify(&b, 1e-9)?.case());

    for phi in [0.3, 1.2, 2.5] {
        let lhs = a.scale(phi).exp_default()?;
        let rhs = Multivector::scalar(sig, f64::cos(phi)) + a.scale(f64::sin(phi));
        println!("phi = {phi}: |exp(phi A) - (cos + A sin)| = {:e}", (&lhs - &rhs).max_abs());
    }
    Ok(())
}
