mod args;
mod commands;
mod error;
mod expr;
mod report;
mod sweep;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, SchubertOp};
use error::CliError;

const EXIT_FAILED_CHECK: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Rendered output and whether every check in it passed.
struct Output {
    text: String,
    ok: bool,
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let format = cli.format;
    let single = |rep: report::Report| Output { ok: rep.all_pass(), text: rep.render(format) };
    Ok(match &cli.command {
        Command::Tevelev(p) => single(commands::tevelev(p.g, p.r, p.d)?),
        Command::Cps { g, d, k } => single(commands::cps(*g, *d, *k)?),
        Command::Ramified { grd, ram } => single(commands::ramified(grd.g, grd.r, grd.d, ram)?),
        Command::PullbackDegree { r, d, lambda } => single(commands::pullback(*r, *d, lambda)?),
        Command::Castelnuovo { r, s } => single(commands::castelnuovo_report(*r, *s)?),
        Command::Schubert { op: SchubertOp::Mul { shape, lhs, rhs } } => {
            single(commands::schubert_mul(shape, lhs, rhs)?)
        }
        Command::Schubert { op: SchubertOp::Integrate { shape, expr } } => {
            single(commands::schubert_integrate(shape, expr)?)
        }
        Command::Tableaux { grd, list, by_shape } => {
            single(commands::tableaux(grd.g, grd.r, grd.d, *list, *by_shape)?)
        }
        Command::Crosscheck { suite, caps } => {
            let rep = sweep::crosscheck(*suite, caps)?;
            Output { ok: rep.all_pass(), text: sweep::render_crosscheck(&rep, format) }
        }
        Command::Table { kind, g_range, d_range, r, k, caps } => {
            let g_range = expr::range("g-range", g_range)?;
            let d_range = expr::range("d-range", d_range)?;
            let t = sweep::table(*kind, g_range, d_range, *r, *k, sweep::Limits::from_caps(caps))?;
            Output { ok: true, text: t.render(format) }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED_CHECK)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}
