use std::io::Write;

fn main() {
    let outcome = schubert_cli::run(std::env::args_os());
    // a closed pipe is not an error worth reporting
    let _ = writeln!(std::io::stdout(), "{}", outcome.stdout.trim_end());
    std::process::exit(outcome.code);
}
