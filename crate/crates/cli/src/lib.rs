//! Command-line front end: loads JSON inputs, runs computations and
//! verification suites and writes a JSON report.
//!
//! Exit codes: 0 when no record failed, 1 when some record failed, 2 for
//! unreadable or invalid input.

pub mod report;
pub mod suites;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use eqgc::category::nerve;
use eqgc::forms::{invariants, symplectic_normalize, BilinearForm};
use eqgc::homology::homology_through;
use eqgc::json::{detect_kind, parse_category, parse_form, parse_monoid, parse_simplicial_set, InputKind};
use eqgc::monoid::bar;

use report::{Record, Report, RunConfig, Status};
use suites::Suite;

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Parser)]
#[command(name = "eqgc", version, about = "Equivariant group completion checks on finite inputs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Highest homological or simplicial degree to check; each check has its
    /// own default.
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// Number of telescope stages to compute.
    #[arg(long, default_value_t = 4)]
    pub stage_budget: usize,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integral homology of a monoid's bar construction, a category's nerve or
    /// a simplicial set.
    Homology {
        input: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run a verification suite on the built-in corpus or on given inputs.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long = "input")]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Queries on a single bilinear form.
    Forms {
        #[arg(value_enum)]
        action: FormAction,
        input: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormAction {
    Invariants,
    Normalize,
    K0,
}

/// Budgets and seed shared by every check.
#[derive(Clone, Debug)]
pub struct Settings {
    pub max_degree: Option<usize>,
    pub stage_budget: usize,
    pub seed: u64,
}

pub struct Input {
    pub name: String,
    pub text: String,
}

#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn load(path: &Path) -> Result<Input, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let name = path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
    Ok(Input { name, text })
}

fn invalid(input: &Input, e: eqgc::Error) -> InputError {
    InputError(format!("{}: {e}", input.name))
}

fn config(command: String, inputs: &[PathBuf], common: &CommonArgs) -> RunConfig {
    RunConfig {
        command,
        inputs: inputs.iter().map(|p| p.display().to_string()).collect(),
        max_degree: common.max_degree,
        stage_budget: common.stage_budget,
        seed: common.seed,
        out: common.out.as_ref().map(|p| p.display().to_string()),
    }
}

/// Runs a parsed command. The report is only absent on input errors.
pub fn execute(cli: &Cli) -> Result<(Report, Option<PathBuf>), InputError> {
    let (cfg, records, out) = match &cli.command {
        Command::Homology { input, common } => {
            let records = vec![homology(&load(input)?, common.max_degree.unwrap_or(3))?];
            (config("homology".into(), std::slice::from_ref(input), common), records, &common.out)
        }
        Command::Verify { suite, inputs, common } => {
            if common.stage_budget == 0 {
                return Err(InputError("--stage-budget must be positive".into()));
            }
            let loaded = inputs.iter().map(|p| load(p)).collect::<Result<Vec<_>, _>>()?;
            suites::check_kinds(*suite, &loaded)?;
            let settings = Settings {
                max_degree: common.max_degree,
                stage_budget: common.stage_budget,
                seed: common.seed,
            };
            let records = suites::run(*suite, &loaded, &settings)?;
            (config(format!("verify {}", suite.name()), inputs, common), records, &common.out)
        }
        Command::Forms { action, input, common } => {
            let loaded = load(input)?;
            let f = parse_form(&loaded.text).map_err(|e| invalid(&loaded, e))?;
            let name = format!("{:?}", action).to_lowercase();
            let records = vec![form_query(*action, &loaded.name, &f)?];
            (config(format!("forms {name}"), std::slice::from_ref(input), common), records, &common.out)
        }
    };
    Ok((Report::new(cfg, records), out.clone()))
}

fn homology(input: &Input, degree: usize) -> Result<Record, InputError> {
    let kind = detect_kind(&input.text).map_err(|e| invalid(input, e))?;
    let set = match kind {
        InputKind::Monoid => bar(&parse_monoid(&input.text).map_err(|e| invalid(input, e))?, degree + 1).set,
        InputKind::Category => nerve(&parse_category(&input.text).map_err(|e| invalid(input, e))?.0, degree + 1).set,
        InputKind::SimplicialSet => parse_simplicial_set(&input.text).map_err(|e| invalid(input, e))?,
        InputKind::Form => return Err(InputError(format!("{}: homology needs a monoid, category or simplicial set", input.name))),
    };
    let groups = homology_through(&set, degree).map_err(|e| invalid(input, e))?;
    Ok(Record::new(
        format!("homology/{}", input.name),
        "plumbing",
        Status::Pass,
        json!({
            "degree": degree,
            "groups": groups.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "detail": groups,
        }),
    ))
}

fn form_query(action: FormAction, name: &str, f: &BilinearForm) -> Result<Record, InputError> {
    let key = format!("forms/{name}");
    Ok(match action {
        FormAction::Invariants => {
            let inv = invariants(f);
            let mut w = json!({ "invariants": inv });
            if !f.is_nondegenerate() {
                w["warning"] = json!("form is degenerate");
            }
            Record::new(key, "plumbing", Status::Pass, w)
        }
        FormAction::Normalize => {
            if f.epsilon != -1 {
                return Err(InputError(format!("{name}: normalize needs an alternating form (epsilon = -1)")));
            }
            match symplectic_normalize(f) {
                Ok(n) => Record::new(
                    key,
                    "every unimodular alternating form is congruent to J_n",
                    Status::Pass,
                    json!({ "n": n.n, "change_of_basis": n.change_of_basis }),
                ),
                Err(e) => Record::new(key, "plumbing", Status::Skipped, json!({ "reason": e.to_string() })),
            }
        }
        FormAction::K0 => suites::form_record(&key, f),
    })
}

/// Parses arguments, runs, writes the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
        Ok((report, out)) => {
            let text = report.to_json();
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return 2;
                    }
                }
                None => print!("{text}"),
            }
            i32::from(report.has_failure())
        }
    }
}
