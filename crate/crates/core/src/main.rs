use clap::Parser;
use cnext::cli::{run, Cli, CliError};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => {}
        // a closed downstream pipe (`| head`) is not an error
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
