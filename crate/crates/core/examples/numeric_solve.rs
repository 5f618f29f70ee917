//! Levenberg-Marquardt search from random starts.

use std::collections::BTreeMap;

use cliffroot::roots::{classify, random_starts, solve_multistart, SolveOptions};
use cliffroot::{Error, Signature};

fn main() -> cliffroot::Result<()> {
    for (p, q) in [(1, 0), (3, 0), (1, 3)] {
        let sig = Signature::new(p, q)?;
        let starts = random_starts(sig, 200, 1, 2.0);
        let mut families: BTreeMap<String, usize> = BTreeMap::new();
        let mut best = f64::INFINITY;
        for result in solve_multistart(sig, &starts, &SolveOptions::default()) {
            match result {
                Ok(sol) => {
                    best = best.min(sol.residual);
                    let name = classify(&sol.root, 1e-9)?.case().map_or("unclassified".into(), |c| c.to_string());
                    *families.entry(name).or_default() += 1;
                }
                Err(Error::NoConvergence { residual, .. }) => best = best.min(residual),
                Err(e) => return Err(e),
            }
        }
        let converged: usize = families.values().sum();
        println!("{sig}: {converged}/200 converged, best residual {best:e}, families {families:?}");
    }
    Ok(())
}
