fn main() {
    let outcome = orecent_cli::run_command(std::env::args_os());
    std::process::exit(outcome.emit());
}
