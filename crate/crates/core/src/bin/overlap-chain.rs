use std::io;

fn main() {
    let code =
        overlap_chain::cli::run_cli(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
