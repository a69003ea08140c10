use std::process::exit;

fn main() {
    exit(contagion::cli::run_command(std::env::args_os()));
}
