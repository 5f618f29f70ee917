//! Scan regions where no root should exist.

use cliffroot::roots::{nonexistence_scan, slice_scan};
use cliffroot::Signature;

fn main() -> cliffroot::Result<()> {
    let cl10 = Signature::new(1, 0)?;
    let grid = nonexistence_scan(cl10, -2.0, 2.0, 101)?;
    println!(
        "{cl10} grid: {} points, min |A^2+1| = {}, analytic bound {:?}",
        grid.points, grid.min_residual, grid.analytic_bound
    );
    for sig in Signature::all_of_dim(2)? {
        let rep = slice_scan(sig, &[("alpha".into(), 0.5)], 100, 3, 2.0)?;
        println!("{sig} slice alpha = 0.5: min |A^2+1| = {:.4}", rep.min_residual);
    }
    let rep = slice_scan(Signature::new(0, 3)?, &[("alpha".into(), 0.0), ("beta".into(), 0.0)], 100, 3, 2.0)?;
    // contrast: this slice holds the family b + c with b ^ c = 0, e.g. A = e1
    println!("Cl(0,3) slice alpha = beta = 0: min |A^2+1| = {:e} (roots exist)", rep.min_residual);
    Ok(())
}
