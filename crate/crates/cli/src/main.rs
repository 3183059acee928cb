use clap::Parser;

use selfext_cli::{execute, Cli, EXIT_INPUT_ERROR};

fn main() {
    let cli = Cli::parse();
    let code = match execute(&cli, &mut std::io::stdout().lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT_ERROR
        }
    };
    std::process::exit(code);
}
