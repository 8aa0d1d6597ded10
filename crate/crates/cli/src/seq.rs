use std::io::Write;

use clap::{Parser, ValueEnum};
use polyeuler::classical::{bernoulli_numbers, euler_numbers, EulerConvention};
use polyeuler::multifamily::{
    multi_poly_bernoulli, multi_poly_euler, multi_poly_euler_xab, poly_euler_abc, LogParams,
};
use polyeuler::polyfamily::{lonesum_count, poly_bernoulli, poly_euler, poly_euler_sasaki};
use polyeuler::{KVector, Rational};
use serde_json::json;

use crate::{kvector_arg, rational_arg, resolve_order, EXIT_OK, EXIT_USAGE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Bernoulli,
    Euler,
    PolyBernoulli,
    PolyEuler,
    PolyEulerSasaki,
    MultiPolyBernoulli,
    MultiPolyEuler,
    PolyEulerAbc,
    Lonesum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// Print a number or polynomial family as exact rationals, indexed by n.
#[derive(Debug, Parser)]
#[command(name = "polyseq", version)]
pub struct SeqArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Highest index to print [default: $POLYEULER_ORDER or 10]
    #[arg(long)]
    pub n: Option<usize>,
    /// Single polylogarithm index
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    /// Comma-separated polylogarithm indices, e.g. 2,1,-1
    #[arg(long, value_parser = kvector_arg, allow_hyphen_values = true)]
    pub ks: Option<KVector>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub x: Option<Rational>,
    /// ln a
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,
    /// ln b
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub beta: Option<Rational>,
    /// ln c
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub gamma: Option<Rational>,
    /// genocchi (2/(e^t+1)) or secant (1/cosh t)
    #[arg(long, default_value = "genocchi")]
    pub convention: EulerConvention,
    #[arg(long)]
    pub rows: Option<usize>,
    #[arg(long)]
    pub cols: Option<usize>,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

fn require<T: Clone>(value: &Option<T>, flag: &str, family: Family) -> Result<T, String> {
    value
        .clone()
        .ok_or_else(|| format!("--{flag} is required for {}", family_name(family)))
}

fn family_name(family: Family) -> String {
    family
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn kvector(args: &SeqArgs) -> Result<KVector, String> {
    match (&args.ks, args.k) {
        (Some(ks), _) => Ok(ks.clone()),
        (None, Some(k)) => Ok(KVector::single(k)),
        (None, None) => Err(format!(
            "--ks (or --k) is required for {}",
            family_name(args.family)
        )),
    }
}

fn log_params(args: &SeqArgs) -> Result<Option<LogParams>, String> {
    match (&args.alpha, &args.beta) {
        (Some(a), Some(b)) => {
            let params = LogParams::new(a.clone(), b.clone());
            Ok(Some(match &args.gamma {
                Some(g) => params.with_gamma(g.clone()),
                None => params,
            }))
        }
        (None, None) if args.gamma.is_none() => Ok(None),
        _ => Err("--alpha and --beta must be given together (and --gamma needs both)".to_string()),
    }
}

fn compute(args: &SeqArgs, order: usize) -> Result<Vec<Rational>, String> {
    let family = args.family;
    let zero = Rational::from_integer(0.into());
    let x = args.x.clone().unwrap_or_else(|| zero.clone());
    Ok(match family {
        Family::Bernoulli => bernoulli_numbers(order),
        Family::Euler => euler_numbers(order, args.convention),
        Family::PolyBernoulli => poly_bernoulli(require(&args.k, "k", family)?, &x, order),
        Family::PolyEuler => poly_euler(require(&args.k, "k", family)?, &x, order),
        Family::PolyEulerSasaki => poly_euler_sasaki(require(&args.k, "k", family)?, order),
        Family::MultiPolyBernoulli => {
            multi_poly_bernoulli(&kvector(args)?, order).map_err(|e| e.to_string())?
        }
        Family::MultiPolyEuler => {
            let ks = kvector(args)?;
            match log_params(args)? {
                None => multi_poly_euler(&ks, &x, order),
                Some(params) if params.gamma.is_none() => {
                    multi_poly_euler_xab(&ks, &x, &params, order)
                }
                Some(params) => {
                    let [k] = ks.indices() else {
                        return Err(
                            "--gamma is only defined for a single index (use --ks with one entry)"
                                .into(),
                        );
                    };
                    poly_euler_abc(*k, &x, &params, order)
                }
            }
        }
        Family::PolyEulerAbc => {
            let k = require(&args.k, "k", family)?;
            let params = LogParams::new(
                require(&args.alpha, "alpha", family)?,
                require(&args.beta, "beta", family)?,
            )
            .with_gamma(require(&args.gamma, "gamma", family)?);
            poly_euler_abc(k, &x, &params, order)
        }
        Family::Lonesum => unreachable!("handled separately"),
    })
}

fn write_sequence(out: &mut dyn Write, values: &[Rational], format: Format) -> std::io::Result<()> {
    match format {
        Format::Plain => {
            for (n, v) in values.iter().enumerate() {
                writeln!(out, "{n}\t{v}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,value")?;
            for (n, v) in values.iter().enumerate() {
                writeln!(out, "{n},{v}")?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = values
                .iter()
                .enumerate()
                .map(|(n, v)| json!({ "n": n, "value": v.to_string() }))
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(rows))?;
        }
    }
    Ok(())
}

fn run_lonesum(args: &SeqArgs, out: &mut dyn Write) -> Result<(), String> {
    let rows = require(&args.rows, "rows", args.family)?;
    let cols = require(&args.cols, "cols", args.family)?;
    let count = lonesum_count(rows, cols).map_err(|e| e.to_string())?;
    let written = match args.format {
        Format::Plain => writeln!(out, "{count}"),
        Format::Csv => writeln!(out, "rows,cols,value\n{rows},{cols},{count}"),
        Format::Json => writeln!(
            out,
            "{}",
            json!({ "rows": rows, "cols": cols, "value": count.to_string() })
        ),
    };
    written.map_err(|e| e.to_string())
}

pub fn run(args: &SeqArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = if args.family == Family::Lonesum {
        run_lonesum(args, out)
    } else {
        resolve_order(args.n).and_then(|order| {
            let _ = writeln!(err, "polyseq: {} order={order}", family_name(args.family));
            let values = compute(args, order)?;
            write_sequence(out, &values, args.format).map_err(|e| e.to_string())
        })
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(message) => {
            let _ = writeln!(err, "polyseq: {message}");
            EXIT_USAGE
        }
    }
}
