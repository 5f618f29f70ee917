//! Drive the command-line front end in-process: sample as JSON, then classify from stdin.

use cliffroot::cli::run;

fn main() {
    let mut sampled = Vec::new();
    let code = run(
        ["cliffroot", "--format", "json", "sample", "--sig", "0,4", "--case", "N4_A0_APN0", "--count", "2"],
        &mut std::io::empty(),
        &mut sampled,
        &mut std::io::stderr(),
    );
    println!("sample exit {code}");
    let mut out = Vec::new();
    let code = run(
        ["cliffroot", "classify"],
        &mut sampled.as_slice(),
        &mut out,
        &mut std::io::stderr(),
    );
    println!("classify exit {code}");
    print!("{}", String::from_utf8_lossy(&out));
}
