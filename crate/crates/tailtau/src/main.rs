use clap::Parser;

use tailtau::cli::{run, Cli};
use tailtau::config::merge_config_into_args;

fn main() {
    let raw: Vec<String> = std::env::args().collect();
    let args = match merge_config_into_args(raw) {
        Ok(args) => args,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    };
    let cli = Cli::parse_from(args);
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
