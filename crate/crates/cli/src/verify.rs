use std::io::Write;

use clap::Parser;
use polyeuler::audit::{run_identity, AuditConfig, CaseReport, DEFAULT_SEED};

use crate::{resolve_order, EXIT_IDENTITY_FAILURE, EXIT_OK, EXIT_USAGE};

/// Run one registered identity check.
#[derive(Debug, Parser)]
#[command(name = "polyverify", version)]
pub struct VerifyArgs {
    /// Identity id, e.g. thm2 or eq2-power-sum
    pub identity: String,
    /// Truncation order [default: $POLYEULER_ORDER or 10]
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Run only this variant (all variants otherwise)
    #[arg(long)]
    pub variant: Option<String>,
}

pub(crate) fn verdict_line(report: &CaseReport, config: &AuditConfig) -> String {
    let mut line = format!(
        "{}: {} (grid={}, order={}, seed={})",
        report.label(),
        report.verdict,
        report.grid_size,
        config.order,
        config.seed
    );
    if let Some(cx) = &report.counterexample {
        let params: Vec<String> = cx.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        line.push_str(&format!(
            " first counterexample: {} expected={} actual={}",
            params.join(" "),
            cx.expected,
            cx.actual
        ));
    }
    if report.verdict != polyeuler::audit::Verdict::Pass && !report.is_unexpected() {
        line.push_str(" [tolerated]");
    }
    line
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let order = match resolve_order(args.order) {
        Ok(order) => order,
        Err(message) => {
            let _ = writeln!(err, "polyverify: {message}");
            return EXIT_USAGE;
        }
    };
    let config = AuditConfig {
        seed: args.seed,
        order,
    };
    let reports = match run_identity(&args.identity, args.variant.as_deref(), &config) {
        Ok(reports) => reports,
        Err(e) => {
            let _ = writeln!(err, "polyverify: {e}");
            return EXIT_USAGE;
        }
    };
    for report in &reports {
        let _ = writeln!(out, "{}", verdict_line(report, &config));
    }
    if reports.iter().any(CaseReport::is_unexpected) {
        EXIT_IDENTITY_FAILURE
    } else {
        EXIT_OK
    }
}
