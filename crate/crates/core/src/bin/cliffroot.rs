fn main() { std::process::exit(cliffroot::cli::run_from_env()); }
