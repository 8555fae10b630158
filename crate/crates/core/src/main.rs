use std::io::Write;

fn main() {
    let (code, text) = nchamil::cli::run(std::env::args_os());
    // a closed pipe is not an error worth reporting
    let _ = if code == 2 {
        writeln!(std::io::stderr(), "{text}")
    } else {
        writeln!(std::io::stdout(), "{text}")
    };
    std::process::exit(code);
}
