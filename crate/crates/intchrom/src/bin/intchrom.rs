use std::io::{IsTerminal, Read, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let wants_stdin = args.iter().skip(1).any(|a| a == "-");
    let mut input = String::new();
    let stdin = if wants_stdin && !std::io::stdin().is_terminal() {
        std::io::stdin()
            .read_to_string(&mut input)
            .ok()
            .map(|_| input.as_str())
    } else {
        None
    };
    let out = intchrom::cli::run_cli(args, stdin);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
