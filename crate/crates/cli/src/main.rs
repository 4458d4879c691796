use std::io::Write;

fn main() {
    let out = zahlen_cli::run(std::env::args_os());
    // ignore broken pipes when piped into head and friends
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
