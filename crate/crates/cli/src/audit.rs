use std::io::Write;
use std::path::PathBuf;

use clap::Parser;
use polyeuler::audit::{run_all, AuditConfig, DEFAULT_SEED};

use crate::verify::verdict_line;
use crate::{resolve_order, EXIT_IDENTITY_FAILURE, EXIT_OK, EXIT_USAGE};

/// Run every registered identity check and emit a JSON report.
#[derive(Debug, Parser)]
#[command(name = "polyaudit", version)]
pub struct AuditArgs {
    /// Truncation order [default: $POLYEULER_ORDER or 10]
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Write the JSON report here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &AuditArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let order = match resolve_order(args.order) {
        Ok(order) => order,
        Err(message) => {
            let _ = writeln!(err, "polyaudit: {message}");
            return EXIT_USAGE;
        }
    };
    let config = AuditConfig {
        seed: args.seed,
        order,
    };
    let report = run_all(&config);
    let json = report.to_json() + "\n";

    // Summary lines go wherever the JSON does not.
    let summary: &mut dyn Write = match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                let _ = writeln!(err, "polyaudit: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
            out
        }
        None => {
            if out.write_all(json.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            err
        }
    };
    for case in &report.cases {
        let _ = writeln!(summary, "{}", verdict_line(case, &config));
    }
    let unexpected = report.unexpected_failures();
    let _ = writeln!(
        summary,
        "{} cases, {} unexpected failures (order={}, seed={})",
        report.cases.len(),
        unexpected.len(),
        config.order,
        config.seed
    );
    if unexpected.is_empty() {
        EXIT_OK
    } else {
        EXIT_IDENTITY_FAILURE
    }
}
