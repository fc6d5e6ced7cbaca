use clap::Parser;

use qcurv_cli::{execute, Cli, EXIT_USAGE};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors
            e.exit();
        }
    };
    match execute(&cli) {
        Ok((output, code)) => {
            print!("{output}");
            std::process::exit(code);
        }
        Err(usage) => {
            eprintln!("error: {usage}");
            std::process::exit(EXIT_USAGE);
        }
    }
}
