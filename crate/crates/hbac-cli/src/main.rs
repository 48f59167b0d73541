use clap::Parser;

fn main() {
    let cli = hbac_cli::Cli::parse();
    if let Err(err) = hbac_cli::execute(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.code);
    }
}
