use std::io::Write;

fn main() {
    let exit = heiscat_cli::run_args(std::env::args_os());
    print!("{}", exit.stdout);
    eprint!("{}", exit.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(exit.code);
}
