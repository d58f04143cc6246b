//! Command-line front end. Parsing lives here so the binary stays a thin wrapper and tests can
//! drive [`run`] directly.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cellular::census;
use crate::engine::{betti_table, poincare_series, ring_presentation, BettiTable, RingPresentation};
use crate::error::EngineError;
use crate::json::to_canonical_string;
use crate::report::{BettiReport, CellsReport, RingReport, VerifyReport};
use crate::simplicial::{parse_complex, SimplicialComplex};
use crate::verify::{
    axioms_suite, default_truncation, diagonal_suite, hochster_suite, homotopy_suite, SuiteConfig, SuiteReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Ground sets larger than this need `--force` for `betti` and `ring`.
pub const LARGE_M: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "macring", version, about = "Integral cohomology of moment-angle complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bigraded groups H^{-i,2j}(Z_K)
    Betti(ComputeArgs),
    /// Additive generators and their products
    Ring(ComputeArgs),
    /// Run verification suites; exits 2 if any fails
    Verify(VerifyArgs),
    /// Cell census of Z_K
    Cells(CommonArgs),
}

#[derive(Args, Debug)]
pub struct CommonArgs {
    /// Complex as JSON: {"m": M, "facets": [[...], ...]}
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Allow ground sets with more than 20 vertices
    #[arg(long)]
    pub force: bool,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("suites").required(true).multiple(true))]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, group = "suites")]
    pub hochster: bool,
    #[arg(long, group = "suites")]
    pub homotopy: bool,
    #[arg(long, group = "suites")]
    pub diagonal: bool,
    #[arg(long, group = "suites")]
    pub axioms: bool,
    /// Total degree through which the homotopy identity is checked (default 2m+2)
    #[arg(long)]
    pub truncate: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Betti,
    Ring,
    Verify,
    Cells,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyFlags {
    pub hochster: bool,
    pub homotopy: bool,
    pub diagonal: bool,
    pub axioms: bool,
}

impl VerifyFlags {
    pub fn any(&self) -> bool {
        self.hochster || self.homotopy || self.diagonal || self.axioms
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    pub input: PathBuf,
    pub format: Format,
    pub verify: VerifyFlags,
    pub truncate: Option<usize>,
    pub force: bool,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let base = |command, common: CommonArgs| RunConfig {
            command,
            input: common.input,
            format: common.format,
            verify: VerifyFlags::default(),
            truncate: None,
            force: false,
        };
        match cli.command {
            Command::Betti(a) => RunConfig { force: a.force, ..base(CommandKind::Betti, a.common) },
            Command::Ring(a) => RunConfig { force: a.force, ..base(CommandKind::Ring, a.common) },
            Command::Cells(c) => base(CommandKind::Cells, c),
            Command::Verify(a) => RunConfig {
                verify: VerifyFlags {
                    hochster: a.hochster,
                    homotopy: a.homotopy,
                    diagonal: a.diagonal,
                    axioms: a.axioms,
                },
                truncate: a.truncate,
                ..base(CommandKind::Verify, a.common)
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutcome {
    fn ok(stdout: String) -> Self {
        RunOutcome { exit_code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn error(exit_code: i32, message: String) -> Self {
        RunOutcome { exit_code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// Parses `args` (including the program name) and runs. Help and version requests exit 0, every
/// other argument error exits 1.
pub fn run_from_args<I, T>(args: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.into()),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                RunOutcome { exit_code: EXIT_PARSE, stdout: String::new(), stderr: text }
            } else {
                RunOutcome::ok(text)
            }
        }
    }
}

pub fn run(config: &RunConfig) -> RunOutcome {
    if config.command == CommandKind::Verify && !config.verify.any() {
        return RunOutcome::error(
            EXIT_PARSE,
            "verify needs at least one of --hochster, --homotopy, --diagonal, --axioms".into(),
        );
    }
    let text = match std::fs::read_to_string(&config.input) {
        Ok(t) => t,
        Err(e) => return RunOutcome::error(EXIT_PARSE, format!("{}: {e}", config.input.display())),
    };
    let k = match parse_complex(&text) {
        Ok(k) => k,
        Err(e) => return RunOutcome::error(EXIT_PARSE, format!("{}: {e}", config.input.display())),
    };
    let heavy = matches!(config.command, CommandKind::Betti | CommandKind::Ring);
    if heavy && k.m() > LARGE_M && !config.force {
        return RunOutcome::error(
            EXIT_PARSE,
            format!("m = {} exceeds {LARGE_M}; the computation visits 2^m supports. Pass --force to proceed", k.m()),
        );
    }
    match config.command {
        CommandKind::Betti => internal(betti_table(&k)).map_or_else(|e| e, |t| emit_betti(&t, config.format)),
        CommandKind::Ring => internal(ring_presentation(&k)).map_or_else(|e| e, |r| emit_ring(&r, config.format)),
        CommandKind::Cells => emit_cells(&k, config.format),
        CommandKind::Verify => run_verify(&k, config),
    }
}

fn internal<T>(r: Result<T, EngineError>) -> Result<T, RunOutcome> {
    r.map_err(|e| RunOutcome::error(EXIT_INTERNAL, format!("internal inconsistency: {e}")))
}

fn json_out<T: serde::Serialize>(value: &T) -> RunOutcome {
    match to_canonical_string(value) {
        Ok(s) => RunOutcome::ok(s + "\n"),
        Err(e) => RunOutcome::error(EXIT_INTERNAL, format!("serialization failed: {e}")),
    }
}

fn emit_betti(table: &BettiTable, format: Format) -> RunOutcome {
    if format == Format::Json {
        return json_out(&BettiReport::from_table(table));
    }
    let mut s = String::new();
    writeln!(s, "m = {}", table.m).unwrap();
    writeln!(s, "{:>4} {:>4} {:>4}  group", "-i", "2j", "n").unwrap();
    let mut rows: Vec<_> = table.entries.iter().collect();
    rows.sort_by_key(|(b, _)| (b.total(), b.j));
    for (b, g) in rows {
        writeln!(s, "{:>4} {:>4} {:>4}  {g}", -(b.i as i64), b.j2(), b.total()).unwrap();
    }
    writeln!(s, "Poincare series: {}", poincare_series(table)).unwrap();
    RunOutcome::ok(s)
}

fn emit_ring(ring: &RingPresentation, format: Format) -> RunOutcome {
    if format == Format::Json {
        return json_out(&RingReport::from_presentation(ring));
    }
    let mut s = String::new();
    writeln!(s, "m = {}, {} additive generators", ring.m, ring.generators.len()).unwrap();
    for (id, g) in ring.generators.iter().enumerate() {
        let order = match &g.order {
            crate::linalg::Order::Infinite => "Z".to_string(),
            crate::linalg::Order::Finite(n) => format!("Z/{n}"),
        };
        writeln!(s, "  g{id:<3} {} deg {:<3} {order:<5} [{}]", g.bidegree, g.total_degree(), g.representative).unwrap();
    }
    writeln!(s, "nonzero products:").unwrap();
    for (&(a, b), coords) in &ring.products {
        let target = ring.generators_in(ring.generators[a].bidegree + ring.generators[b].bidegree);
        let terms: Vec<String> = target
            .iter()
            .zip(coords)
            .filter(|(_, c)| c.sign() != num_bigint::Sign::NoSign)
            .map(|(g, c)| format!("{c}*g{g}"))
            .collect();
        writeln!(s, "  g{a} * g{b} = {}", terms.join(" + ")).unwrap();
    }
    RunOutcome::ok(s)
}

fn emit_cells(k: &SimplicialComplex, format: Format) -> RunOutcome {
    let c = census(k);
    if format == Format::Json {
        return json_out(&CellsReport::new(k, &c));
    }
    let mut s = String::new();
    writeln!(s, "m = {}", k.m()).unwrap();
    writeln!(s, "{:>4} {:>8}", "dim", "cells").unwrap();
    for (d, n) in &c.counts {
        writeln!(s, "{d:>4} {n:>8}").unwrap();
    }
    writeln!(s, "Euler characteristic: {}", c.euler_characteristic).unwrap();
    RunOutcome::ok(s)
}

fn run_verify(k: &SimplicialComplex, config: &RunConfig) -> RunOutcome {
    let flags = config.verify;
    let cfg = SuiteConfig::default();
    let mut suites: Vec<SuiteReport> = Vec::new();
    if flags.hochster {
        suites.push(hochster_suite(k));
    }
    if flags.homotopy {
        suites.push(homotopy_suite(k, config.truncate.unwrap_or_else(|| default_truncation(k.m()))));
    }
    if flags.diagonal {
        suites.push(diagonal_suite(k, &cfg));
    }
    if flags.axioms {
        suites.push(axioms_suite(k, &cfg));
    }
    let report = VerifyReport::from_suites(&suites);
    let mut out = if config.format == Format::Json {
        json_out(&report)
    } else {
        let mut s = String::new();
        for suite in &suites {
            let status = if suite.pass { "PASS" } else { "FAIL" };
            writeln!(s, "{status} {:<9} {} checks  {}", suite.name, suite.checks, summary(suite)).unwrap();
            for f in &suite.failures {
                writeln!(s, "    {f}").unwrap();
            }
        }
        RunOutcome::ok(s)
    };
    if out.exit_code == EXIT_OK && !report.pass() {
        out.exit_code = EXIT_VERIFY;
        let failed: Vec<&str> = suites.iter().filter(|s| !s.pass).map(|s| s.name.as_str()).collect();
        out.stderr = format!("error: verification failed: {}\n", failed.join(", "));
    }
    out
}

fn summary(suite: &SuiteReport) -> String {
    match suite.name.as_str() {
        "homotopy" => format!("identity checked through degree {}", suite.detail["checked_through_degree"]),
        "hochster" => "engine and oracle compared in every bidegree".to_string(),
        "diagonal" => format!("{} product pairs", suite.detail["multiplicativity_pairs"]),
        _ => String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn argument_errors_exit_one() {
        assert_eq!(run_from_args(["macring"]).exit_code, EXIT_PARSE);
        assert_eq!(run_from_args(["macring", "verify", "x.json"]).exit_code, EXIT_PARSE);
        assert_eq!(run_from_args(["macring", "--help"]).exit_code, EXIT_OK);
    }
}
