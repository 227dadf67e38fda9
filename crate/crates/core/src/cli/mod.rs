//! Command-line front end for the `qgames` binary.
//!
//! Exit codes: 0 success, 1 computation or IO error, 2 usage error.

mod format;
mod strategies;
pub mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::gamedef::{hawk_dove_game, parse_game_file, prisoners_dilemma_game, HawkDoveParams, StrategicGame};
use crate::mixedscan::{grid_scan, region_above, Surface};
use crate::qscheme::{extended_payoff_table, payoff_operators, InitialState, QuantumGameSpec, Scheme};
use crate::solvers::EquilibriumReport;

pub use format::{fmt_sig9, round_sig9};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qgames", version, about = "Classical and quantized two-player games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a classical or quantum payoff table.
    Table(CommonArgs),
    /// Sample the mixed-strategy payoff surface on a p,q lattice (CSV).
    Scan(CommonArgs),
    /// List lattice points where the payoff exceeds a threshold (CSV).
    Region(CommonArgs),
    /// Pure/mixed Nash, Pareto front and optionally ESS (JSON).
    Solve(CommonArgs),
    /// Recompute every published claim and report verdicts (JSON).
    Verify(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GameArg {
    Hd,
    Pd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Mw,
    Eisert,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StateArg {
    /// (|00>+i|11>)/sqrt2
    Mwi,
    /// (|00>+|11>)/sqrt2
    Bell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Ascii,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[arg(long, value_enum)]
    game: Option<GameArg>,
    /// Hawk-Dove resource value.
    #[arg(long, default_value_t = 50.0, allow_negative_numbers = true)]
    v: f64,
    /// Hawk-Dove injury cost.
    #[arg(long, default_value_t = 100.0, allow_negative_numbers = true)]
    i: f64,
    /// Hawk-Dove display cost.
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    d: f64,
    /// Quantization scheme; without it `table` prints the classical game.
    #[arg(long, value_enum)]
    scheme: Option<SchemeArg>,
    /// Initial state for the Marinatto-Weber scheme.
    #[arg(long, value_enum, default_value = "bell")]
    state: StateArg,
    /// Comma list of H, C, D, Q, R or u(theta,phi).
    #[arg(long)]
    strategies: Option<String>,
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u64).range(2..))]
    resolution: u64,
    #[arg(long, default_value_t = 15.0, allow_negative_numbers = true)]
    threshold: f64,
    #[arg(long, value_enum, default_value = "ascii")]
    format: FormatArg,
    /// Game JSON file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Include evolutionary-stability checks in `solve`.
    #[arg(long)]
    ess: bool,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownStrategy(_) | Error::ResolutionTooSmall(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type CmdResult = std::result::Result<String, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };

    let (args, result) = match &cli.command {
        Command::Table(a) => (a, cmd_table(a)),
        Command::Scan(a) => (a, cmd_scan(a)),
        Command::Region(a) => (a, cmd_region(a)),
        Command::Solve(a) => (a, cmd_solve(a)),
        Command::Verify(a) => (a, cmd_verify()),
    };

    let written = result.and_then(|body| {
        match &args.output {
            Some(path) => fs::write(path, body.as_bytes())?,
            None => stdout.write_all(body.as_bytes())?,
        }
        Ok(())
    });
    match written {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}\n\nFor more information, try '--help'.");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn params(a: &CommonArgs) -> HawkDoveParams {
    HawkDoveParams::new(a.v, a.i, a.d)
}

fn builtin_game(a: &CommonArgs, game: GameArg) -> StrategicGame {
    match game {
        GameArg::Hd => hawk_dove_game(params(a)),
        GameArg::Pd => prisoners_dilemma_game(),
    }
}

/// The game named by `--input` or `--game`; `None` when neither is given.
fn selected_game(a: &CommonArgs) -> std::result::Result<Option<StrategicGame>, Failure> {
    if a.input.is_some() && a.game.is_some() {
        return Err(Failure::Usage("--input and --game are mutually exclusive".into()));
    }
    if let Some(path) = &a.input {
        let text = fs::read_to_string(path).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
        let game = parse_game_file(&text).map_err(|e| match e {
            Error::GameFormat { path: field, message } => {
                Failure::Runtime(format!("{}: at {field}: {message}", path.display()))
            }
            other => Failure::Runtime(format!("{}: {other}", path.display())),
        })?;
        return Ok(Some(game));
    }
    Ok(a.game.map(|g| builtin_game(a, g)))
}

fn required_game(a: &CommonArgs) -> std::result::Result<StrategicGame, Failure> {
    selected_game(a)?.ok_or_else(|| Failure::Usage("a game is required: pass --game or --input".into()))
}

fn default_strategies(game: &StrategicGame) -> String {
    let mut labels: Vec<&str> = game.labels_a().iter().map(String::as_str).collect();
    labels.push("Q");
    labels.join(",")
}

fn render_table(game: &StrategicGame, fmt: FormatArg) -> String {
    match fmt {
        FormatArg::Ascii => format::ascii_table(game),
        FormatArg::Json => {
            let mut s = format::rounded(game).to_json();
            s.push('\n');
            s
        }
        FormatArg::Csv => format::csv_table(game),
    }
}

fn cmd_table(a: &CommonArgs) -> CmdResult {
    let game = required_game(a)?;
    if a.scheme.is_none() && a.strategies.is_none() {
        return Ok(render_table(&game, a.format));
    }
    let scheme = match a.scheme.unwrap_or(SchemeArg::Mw) {
        SchemeArg::Mw => Scheme::MarinattoWeber,
        SchemeArg::Eisert => Scheme::Eisert,
    };
    let initial = match a.state {
        StateArg::Mwi => InitialState::MwIPhase,
        StateArg::Bell => InitialState::BellPlus,
    };
    let list = a.strategies.clone().unwrap_or_else(|| default_strategies(&game));
    let strategies = strategies::resolve_list(&list, scheme)?;
    if strategies.is_empty() {
        return Err(Failure::Usage("--strategies is empty".into()));
    }
    let spec = QuantumGameSpec::new(scheme, initial, payoff_operators(&game)?);
    let table = extended_payoff_table(&spec, &strategies)?;
    Ok(render_table(&table, a.format))
}

fn surface(a: &CommonArgs) -> Surface {
    match a.game.unwrap_or(GameArg::Hd) {
        GameArg::Hd => Surface::HawkDove(params(a)),
        GameArg::Pd => Surface::PrisonersDilemma,
    }
}

fn resolution(a: &CommonArgs) -> usize {
    usize::try_from(a.resolution).unwrap_or(usize::MAX)
}

fn cmd_scan(a: &CommonArgs) -> CmdResult {
    let grid = grid_scan(surface(a), resolution(a))?;
    let mut buf = Vec::new();
    grid.write_csv(&mut buf)?;
    Ok(String::from_utf8(buf).expect("CSV is UTF-8"))
}

fn cmd_region(a: &CommonArgs) -> CmdResult {
    let region = region_above(surface(a), a.threshold, resolution(a))?;
    let mut buf = Vec::new();
    region.write_csv(&mut buf)?;
    Ok(String::from_utf8(buf).expect("CSV is UTF-8"))
}

fn cmd_solve(a: &CommonArgs) -> CmdResult {
    let game = required_game(a)?;
    let report = EquilibriumReport::analyze(&game, a.ess)?;
    let mut s = serde_json::to_string_pretty(&report).map_err(|e| Failure::Runtime(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn cmd_verify() -> CmdResult {
    let mut s = verify::verify()?.to_json();
    s.push('\n');
    Ok(s)
}
