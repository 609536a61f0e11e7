//! Hand-rolled argument parsing: subcommand, config path, and field
//! overrides.

use crate::CliError;
use std::path::PathBuf;
use vqpt_core::ansatz::EntanglerPattern;
use vqpt_core::config::{ExperimentConfig, TargetSpec};
use vqpt_core::swaptest::Shots;

pub fn usage() -> &'static str {
    "\
vqpt - reconstruct an unknown unitary process with a trainable circuit

USAGE:
  vqpt learn    --config <FILE> [OVERRIDES]
  vqpt sweep-dt --config <FILE> --dts <LIST> [OVERRIDES]
  vqpt validate --config <FILE> --theta <FILE> [--fresh-seed N] [OVERRIDES]
  vqpt help

SUBCOMMANDS:
  learn      Train against the configured target; writes result.json,
             loss_curves.csv, and theta_best.json into the output directory
  sweep-dt   Re-run the experiment for each evolution time in --dts;
             writes dt_sweep.csv (columns: dt,max_similarity,mean_similarity)
  validate   Re-score saved parameters on a freshly seeded validation set;
             prints accuracy and similarity as JSON on stdout

OVERRIDES (take precedence over the config file):
  --qubits N       register size (must match the target)
  --depth D        ansatz depth (number of entangling layers)
  --num-states N   training-set size
  --trials T       number of independently seeded trials
  --seed S         master seed
  --dt X           XXZ evolution time (XXZ targets only)
  --shots K        shot count per estimator, or the word 'exact'
  --max-epochs E   optimizer epoch cap
  --pattern P      entangler pattern: ladder | brick
  --progress K     progress line every K epochs on stderr (0 = off)
  --output DIR     output directory (default: config output_dir, else 'out')

ENVIRONMENT:
  VQPT_THREADS     cap on the parallel trial pool

EXIT CODES:
  0 success; 1 runtime failure; 2 usage or configuration error

CONFIG FILE (JSON):
  {
    \"target\": {\"xxz\": {\"n\": 2, \"j\": 1.0, \"delta\": 1.0, \"h\": 0.1, \"dt\": 0.01}},
    \"qubits\": 2, \"depth\": 2, \"num_states\": 4,
    \"trials\": 20, \"master_seed\": 1,
    \"optimizer\": {\"method\": \"adam\", \"learning_rate\": 0.01,
                  \"max_epochs\": 2000, \"loss_threshold\": 1e-6,
                  \"plateau_patience\": 200, \"gradient_mode\": \"exact\"},
    \"shots\": \"exact\", \"overlap_mode\": \"direct\",
    \"validation_size\": 4, \"pattern\": \"ladder\", \"output_dir\": \"out\"
  }
  A {\"rqc\": {\"n\": 4, \"depth\": 8, \"seed\": 5}} target swaps in a seeded
  random circuit. Omitted fields take the defaults shown by this help text."
}

/// Field overrides collected from the command line.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub qubits: Option<usize>,
    pub depth: Option<usize>,
    pub num_states: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub dt: Option<f64>,
    pub shots: Option<Shots>,
    pub max_epochs: Option<usize>,
    pub pattern: Option<EntanglerPattern>,
    pub progress: Option<usize>,
    pub output: Option<PathBuf>,
}

impl Overrides {
    /// Fold the overrides into a parsed config.
    pub fn apply(&self, config: &mut ExperimentConfig) -> Result<(), CliError> {
        if let Some(n) = self.qubits {
            config.qubits = n;
            match &mut config.target {
                TargetSpec::Xxz(p) => p.n = n,
                TargetSpec::Rqc(p) => p.n = n,
            }
        }
        if let Some(d) = self.depth {
            config.depth = d;
        }
        if let Some(n) = self.num_states {
            config.num_states = n;
        }
        if let Some(t) = self.trials {
            config.trials = t;
        }
        if let Some(s) = self.seed {
            config.master_seed = s;
        }
        if let Some(dt) = self.dt {
            match &mut config.target {
                TargetSpec::Xxz(p) => p.dt = dt,
                TargetSpec::Rqc(_) => {
                    return Err(CliError::Usage(
                        "--dt applies only to xxz targets".into(),
                    ))
                }
            }
        }
        if let Some(s) = self.shots {
            config.shots = s;
        }
        if let Some(e) = self.max_epochs {
            config.optimizer.max_epochs = e;
        }
        if let Some(p) = self.pattern {
            config.pattern = p;
        }
        if let Some(p) = self.progress {
            config.progress_every = p;
        }
        if let Some(o) = &self.output {
            config.output_dir = Some(o.display().to_string());
        }
        Ok(())
    }
}

#[derive(Debug)]
pub struct LearnArgs {
    pub config_path: PathBuf,
    pub overrides: Overrides,
}

#[derive(Debug)]
pub struct SweepDtArgs {
    pub config_path: PathBuf,
    pub dts: Vec<f64>,
    pub overrides: Overrides,
}

#[derive(Debug)]
pub struct ValidateArgs {
    pub config_path: PathBuf,
    pub theta_path: PathBuf,
    pub fresh_seed: Option<u64>,
    pub overrides: Overrides,
}

#[derive(Debug)]
pub enum Command {
    Learn(LearnArgs),
    SweepDt(SweepDtArgs),
    Validate(ValidateArgs),
    Help,
}

fn missing(flag: &str) -> CliError {
    CliError::Usage(format!("{flag} requires a value"))
}

fn parse_value<T: std::str::FromStr>(flag: &str, value: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid value '{value}' for {flag}")))
}

fn parse_shots(value: &str) -> Result<Shots, CliError> {
    if value == "exact" {
        return Ok(Shots::Exact);
    }
    let k: u64 = parse_value("--shots", value)?;
    if k == 0 {
        return Err(CliError::Usage("--shots must be ≥ 1 or 'exact'".into()));
    }
    Ok(Shots::Count(k))
}

fn parse_pattern(value: &str) -> Result<EntanglerPattern, CliError> {
    match value {
        "ladder" => Ok(EntanglerPattern::Ladder),
        "brick" => Ok(EntanglerPattern::Brick),
        other => Err(CliError::Usage(format!(
            "unknown pattern '{other}' (expected ladder or brick)"
        ))),
    }
}

/// Parse everything after the program name.
pub fn parse_args(argv: &[String]) -> Result<Command, CliError> {
    let mut it = argv.iter();
    let sub = match it.next() {
        None => return Ok(Command::Help),
        Some(s) => s.as_str(),
    };
    if matches!(sub, "help" | "--help" | "-h") {
        return Ok(Command::Help);
    }

    let mut config_path: Option<PathBuf> = None;
    let mut theta_path: Option<PathBuf> = None;
    let mut dts: Option<Vec<f64>> = None;
    let mut fresh_seed: Option<u64> = None;
    let mut overrides = Overrides::default();

    while let Some(flag) = it.next() {
        let mut value = || it.next().map(String::as_str).ok_or_else(|| missing(flag));
        match flag.as_str() {
            "--config" => config_path = Some(PathBuf::from(value()?)),
            "--theta" => theta_path = Some(PathBuf::from(value()?)),
            "--dts" => {
                let raw = value()?;
                let parsed: Result<Vec<f64>, _> =
                    raw.split(',').map(|s| parse_value("--dts", s.trim())).collect();
                dts = Some(parsed?);
            }
            "--fresh-seed" => fresh_seed = Some(parse_value(flag, value()?)?),
            "--qubits" => overrides.qubits = Some(parse_value(flag, value()?)?),
            "--depth" => overrides.depth = Some(parse_value(flag, value()?)?),
            "--num-states" => overrides.num_states = Some(parse_value(flag, value()?)?),
            "--trials" => overrides.trials = Some(parse_value(flag, value()?)?),
            "--seed" => overrides.seed = Some(parse_value(flag, value()?)?),
            "--dt" => overrides.dt = Some(parse_value(flag, value()?)?),
            "--shots" => overrides.shots = Some(parse_shots(value()?)?),
            "--max-epochs" => overrides.max_epochs = Some(parse_value(flag, value()?)?),
            "--pattern" => overrides.pattern = Some(parse_pattern(value()?)?),
            "--progress" => overrides.progress = Some(parse_value(flag, value()?)?),
            "--output" => overrides.output = Some(PathBuf::from(value()?)),
            other => {
                return Err(CliError::Usage(format!("unknown flag '{other}'")));
            }
        }
    }

    let config_path =
        config_path.ok_or_else(|| CliError::Usage("--config <FILE> is required".into()))?;

    match sub {
        "learn" => Ok(Command::Learn(LearnArgs { config_path, overrides })),
        "sweep-dt" => {
            let dts = dts.ok_or_else(|| CliError::Usage("--dts <LIST> is required".into()))?;
            if dts.is_empty() {
                return Err(CliError::Usage("--dts needs at least one value".into()));
            }
            Ok(Command::SweepDt(SweepDtArgs { config_path, dts, overrides }))
        }
        "validate" => {
            let theta_path =
                theta_path.ok_or_else(|| CliError::Usage("--theta <FILE> is required".into()))?;
            Ok(Command::Validate(ValidateArgs {
                config_path,
                theta_path,
                fresh_seed,
                overrides,
            }))
        }
        other => Err(CliError::Usage(format!("unknown subcommand '{other}'"))),
    }
}
