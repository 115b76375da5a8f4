//! Command-line front end: example sweeps and one-shot custom reports.

pub mod args;
pub mod error;
pub mod grid;
pub mod input;
pub mod sweep;
pub mod table;

use std::io::Write;

use skewinfo::DampingForm;

pub use args::{Cli, Command, Format};
pub use error::{CliError, Result};
use sweep::{resolve_metric, Sweep};

fn emit(sweep: &Sweep, common: &args::Common) -> Result<()> {
    let text = match common.format {
        Format::Csv => sweep.table.to_csv(),
        Format::Json => sweep.table.to_json(),
    };
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|source| CliError::Io { path: "stdout".into(), source })?;
        }
    }
    if sweep.violations.is_empty() {
        return Ok(());
    }
    let mut msg = format!("{} row(s) violate the bound ordering", sweep.violations.len());
    for v in sweep.violations.iter().take(5) {
        msg.push_str("\n  ");
        msg.push_str(v);
    }
    Err(CliError::SelfCheck(msg))
}

/// Runs one subcommand; output is written even when the self-check fails.
pub fn run(cli: &Cli) -> Result<()> {
    let (common, sweep) = match &cli.command {
        Command::Example1(a) => {
            let c = &a.common;
            if a.alpha_grid.is_some() && (c.metric != "wyd" || c.alpha.is_some()) {
                return Err(CliError::Config("--alpha-grid needs --metric wyd without --alpha".into()));
            }
            let (m, alpha) = resolve_metric(&c.metric, c.alpha)?;
            (c, sweep::example1((&m, alpha), &a.theta_grid, a.alpha_grid.as_ref(), c.inject_fault)?)
        }
        Command::Example2(a) => {
            let c = &a.common;
            let (m, alpha) = resolve_metric(&c.metric, c.alpha)?;
            (c, sweep::example2((&m, alpha), &a.lambda_grid, &a.theta_grid, c.inject_fault)?)
        }
        Command::Example3(a) => {
            let c = &a.common;
            let (m, alpha) = resolve_metric(&c.metric, c.alpha)?;
            let form = if a.paper_literal_ad_kraus { DampingForm::Literal } else { DampingForm::Standard };
            (c, sweep::example3((&m, alpha), &a.theta_grid, a.p, form, c.inject_fault)?)
        }
        Command::Example4(a) => {
            let c = &a.common;
            let (m, alpha) = resolve_metric(&c.metric, c.alpha)?;
            (c, sweep::example4((&m, alpha), &a.theta_grid, a.p, c.inject_fault)?)
        }
        Command::Custom(a) => {
            let c = &a.common;
            let (m, alpha) = resolve_metric(&c.metric, c.alpha)?;
            let rho = input::load_state(&a.state)?;
            let sweep = match (&a.observables, &a.channels) {
                (Some(path), _) => {
                    let obs = input::load_observables(path, rho.dim())?;
                    sweep::custom_observables((&m, alpha), &rho, &obs, c.inject_fault)?
                }
                (None, Some(path)) => {
                    let chans = input::load_channels(path, rho.dim())?;
                    sweep::custom_channels((&m, alpha), &rho, &chans, c.inject_fault)?
                }
                (None, None) => return Err(CliError::Config("--observables or --channels is required".into())),
            };
            (c, sweep)
        }
    };
    emit(&sweep, common)
}
