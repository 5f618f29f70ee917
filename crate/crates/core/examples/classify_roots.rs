//! Sample one root per n = 4 family and recover the family and its parameters.

use cliffroot::algebra::parse_mv;
use cliffroot::roots::{classify, sample, Classification, RootCase};
use cliffroot::Signature;

fn main() -> cliffroot::Result<()> {
    let sig = Signature::new(1, 3)?;
    for case in RootCase::of_dim(4).filter(|c| c.applies_to(sig)) {
        let a = sample(case, sig, 7, 1.0)?;
        match classify(&a, 1e-9)? {
            Classification::Case { case: found, params } => {
                let keys: Vec<&str> = params.iter().map(|(k, _)| k).collect();
                println!("{case:20} -> {found:20} recovered {keys:?}");
            }
            Classification::Unclassified => println!("{case:20} -> unclassified"),
        }
    }
    let not_root = parse_mv(sig, "e1 + e2")?;
    println!("e1 + e2: {}", classify(&not_root, 1e-9).unwrap_err());
    Ok(())
}
