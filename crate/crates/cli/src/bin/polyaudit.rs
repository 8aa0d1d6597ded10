use clap::Parser;
use polyeuler_cli::audit::{run, AuditArgs};

fn main() {
    let args = AuditArgs::parse();
    let code = run(
        &args,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
