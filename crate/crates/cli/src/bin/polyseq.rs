use clap::Parser;
use polyeuler_cli::seq::{run, SeqArgs};

fn main() {
    let args = SeqArgs::parse();
    let code = run(
        &args,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
