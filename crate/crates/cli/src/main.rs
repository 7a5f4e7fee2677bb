use clap::Parser;
use linesramsey_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if let Err(e) = run(cli, &mut lock) {
        eprintln!("linesramsey: {e}");
        std::process::exit(e.exit_code());
    }
}
