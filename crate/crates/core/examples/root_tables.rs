//! Tables of root families for n = 1..4.

use cliffroot::cli::{table_rows, table_text};

fn main() -> cliffroot::Result<()> {
    for n in 1..=3 {
        println!("== n = {n} ==");
        print!("{}", table_text(&table_rows(n)?));
    }
    let rows = table_rows(4)?;
    println!("== n = 4: {} rows ==", rows.len());
    for row in rows.iter().filter(|r| r.signature.to_string() == "Cl(2,2)") {
        println!("{:20} {}", row.case, row.root_equation);
    }
    Ok(())
}
