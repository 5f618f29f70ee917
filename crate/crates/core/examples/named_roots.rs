//! Check a few well-known square roots of -1.

use cliffroot::algebra::parse_mv;
use cliffroot::roots::verify;
use cliffroot::Signature;

fn main() -> cliffroot::Result<()> {
    let cases = [
        ((0, 1), "e1"),
        ((2, 0), "e12"),
        ((3, 0), "e123"),
        ((2, 1), "e123"),
        ((3, 0), "0.6*e12 + 0.8*e31"),
        ((1, 1), "e1 + 1.4142135623730951*e2"),
        ((1, 0), "e1"),
    ];
    for ((p, q), text) in cases {
        let sig = Signature::new(p, q)?;
        let r = verify(&parse_mv(sig, text)?, 1e-9);
        let verdict = if r.is_root { "root" } else { "not a root" };
        println!("{sig:8} {text:32} {verdict:10} residual {:e}", r.residual_norm);
    }
    Ok(())
}
