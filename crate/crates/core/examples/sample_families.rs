//! Draw members of every root family that exists in a signature.

use cliffroot::algebra::{format_mv, TextStyle};
use cliffroot::roots::{sample_batch, verify, RootCase};
use cliffroot::Signature;

fn main() -> cliffroot::Result<()> {
    let sig = Signature::new(2, 2)?;
    for case in RootCase::of_dim(sig.n()).filter(|c| c.applies_to(sig)) {
        println!("{case}: {}", case.conditions());
        for (a, params) in sample_batch(case, sig, 42, 1.0, 2)? {
            let params: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v:.3}")).collect();
            println!("  [{}]", params.join(" "));
            println!("  A = {}", format_mv(&a, TextStyle::Cyclic));
            println!("  |A^2 + 1| = {:e}", verify(&a, 1e-9).residual_norm);
        }
    }
    Ok(())
}
