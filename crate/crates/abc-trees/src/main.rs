use clap::Parser;

fn main() {
    let cfg = abc_trees::cli::RunConfig::parse();
    if let Err(e) = abc_trees::cli::run(cfg) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
