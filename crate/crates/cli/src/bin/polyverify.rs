use clap::Parser;
use polyeuler_cli::verify::{run, VerifyArgs};

fn main() {
    let args = VerifyArgs::parse();
    let code = run(
        &args,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
