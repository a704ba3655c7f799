//! Command-line front end: `analyze`, `sweep`, and `verify` subcommands.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parameter error,
//! 3 I/O error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::contextuality::DEFAULT_EPSILON;
use crate::correlations::OptimizerConfig;
use crate::error::Error;
use crate::states::{CounterexampleParams, XStateParams};
use crate::sweep::{self, Family, ParamRange, StateParams, SweepSpec};
use crate::verify;

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAILED: i32 = 1;
const EXIT_PARAMETER: i32 = 2;
const EXIT_IO: i32 = 3;

#[derive(Parser)]
#[command(
    name = "qcorr",
    about = "Two-qubit correlation reports, parameter sweeps, and self-verification",
    version
)]
struct Cli {
    /// Write output to a file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Tolerance for calling the product-average gap zero (default 1e-9)
    #[arg(long, global = true, value_name = "REAL", allow_negative_numbers = true)]
    epsilon: Option<f64>,

    /// Measurement search grid as THETAxPHI, e.g. 64x128
    #[arg(long, global = true, value_name = "TxP")]
    grid: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Analyze one state and print a JSON report
    Analyze {
        #[command(subcommand)]
        family: AnalyzeFamily,
    },
    /// Sweep a parameter grid and emit one CSV row per valid cell
    Sweep {
        #[command(subcommand)]
        family: SweepFamily,
    },
    /// Run the self-verification battery
    Verify,
}

#[derive(Subcommand)]
enum AnalyzeFamily {
    /// Werner state (1-c)/4·I + c|Ψ⁻⟩⟨Ψ⁻|
    Werner {
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
    },
    /// Real X-state with diagonal (a,b,c,d) and coherences w (corner), z (inner)
    Xstate {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, allow_negative_numbers = true)]
        d: f64,
        #[arg(long, allow_negative_numbers = true)]
        w: f64,
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
    },
    /// Diagonal state diag(a,b,c,d)
    Classical {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, allow_negative_numbers = true)]
        d: f64,
    },
    /// Separable family diag(1/4+α, 1/4+β, 1/4-β, 1/4-α) with coherence z
    Counterexample {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
    },
}

impl AnalyzeFamily {
    fn params(&self) -> StateParams {
        match *self {
            AnalyzeFamily::Werner { c } => StateParams::Werner { c },
            AnalyzeFamily::Xstate { a, b, c, d, w, z } => {
                StateParams::XState(XStateParams { a, b, c, d, w, z })
            }
            AnalyzeFamily::Classical { a, b, c, d } => StateParams::Classical { a, b, c, d },
            AnalyzeFamily::Counterexample { alpha, beta, z } => {
                StateParams::Counterexample(CounterexampleParams { alpha, beta, z })
            }
        }
    }
}

/// Range flags for one sweep parameter: a compact `MIN:MAX:STEPS` spec (or a
/// single value), or separate -min/-max/-steps flags falling back to the
/// family default and the shared `--steps`.
#[derive(Clone, Debug, Default)]
struct RangeFlags {
    compact: Option<String>,
    min: Option<f64>,
    max: Option<f64>,
    steps: Option<usize>,
}

impl RangeFlags {
    fn resolve(
        &self,
        name: &str,
        default: ParamRange,
        shared_steps: Option<usize>,
    ) -> Result<ParamRange, Error> {
        if let Some(spec) = &self.compact {
            return parse_range_spec(name, spec);
        }
        let min = self.min.unwrap_or(default.min);
        let max = self.max.unwrap_or(default.max);
        let steps = self.steps.or(shared_steps).unwrap_or(default.steps);
        ParamRange::new(min, max, steps)
            .map_err(|e| Error::Parameter(format!("range for {name}: {e}")))
    }
}

fn parse_range_spec(name: &str, spec: &str) -> Result<ParamRange, Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = |what: &str| Error::Parameter(format!("range for {name}: {what} in '{spec}'"));
    match parts.as_slice() {
        [single] => {
            let v: f64 = single.parse().map_err(|_| bad("invalid number"))?;
            Ok(ParamRange::single(v))
        }
        [min, max, steps] => {
            let min: f64 = min.parse().map_err(|_| bad("invalid minimum"))?;
            let max: f64 = max.parse().map_err(|_| bad("invalid maximum"))?;
            let steps: usize = steps.parse().map_err(|_| bad("invalid step count"))?;
            ParamRange::new(min, max, steps)
                .map_err(|e| Error::Parameter(format!("range for {name}: {e}")))
        }
        _ => Err(bad("expected VALUE or MIN:MAX:STEPS")),
    }
}

macro_rules! range_args {
    ($struct_name:ident, $( ($field:ident, $min:ident, $max:ident, $steps:ident) ),+ ) => {
        #[derive(Args)]
        struct $struct_name {
            $(
                /// Compact range MIN:MAX:STEPS or a single value
                #[arg(long, allow_hyphen_values = true, value_name = "RANGE")]
                $field: Option<String>,
                #[arg(long, allow_negative_numbers = true, value_name = "REAL")]
                $min: Option<f64>,
                #[arg(long, allow_negative_numbers = true, value_name = "REAL")]
                $max: Option<f64>,
                #[arg(long, value_name = "N")]
                $steps: Option<usize>,
            )+
            /// Step count for parameters without an explicit one
            #[arg(long, value_name = "N")]
            steps: Option<usize>,
        }

        impl $struct_name {
            fn flags(&self) -> Vec<RangeFlags> {
                vec![
                    $(
                        RangeFlags {
                            compact: self.$field.clone(),
                            min: self.$min,
                            max: self.$max,
                            steps: self.$steps,
                        },
                    )+
                ]
            }
        }
    };
}

range_args!(WernerRanges, (c, c_min, c_max, c_steps));
range_args!(
    XstateRanges,
    (a, a_min, a_max, a_steps),
    (b, b_min, b_max, b_steps),
    (c, c_min, c_max, c_steps),
    (d, d_min, d_max, d_steps),
    (w, w_min, w_max, w_steps),
    (z, z_min, z_max, z_steps)
);
range_args!(
    ClassicalRanges,
    (a, a_min, a_max, a_steps),
    (b, b_min, b_max, b_steps),
    (c, c_min, c_max, c_steps),
    (d, d_min, d_max, d_steps)
);
range_args!(
    CounterexampleRanges,
    (alpha, alpha_min, alpha_max, alpha_steps),
    (beta, beta_min, beta_max, beta_steps),
    (z, z_min, z_max, z_steps)
);

#[derive(Subcommand)]
enum SweepFamily {
    /// Sweep the Werner parameter c (default -1/3..1 in 101 steps)
    Werner(WernerRanges),
    /// Sweep X-state populations and coherences
    Xstate(XstateRanges),
    /// Sweep diagonal populations (cells not summing to 1 are skipped)
    Classical(ClassicalRanges),
    /// Sweep the separable counterexample family (default 9x9x7 grid)
    Counterexample(CounterexampleRanges),
}

impl SweepFamily {
    fn spec(&self) -> Result<SweepSpec, Error> {
        let (family, flags, shared_steps) = match self {
            SweepFamily::Werner(r) => (Family::Werner, r.flags(), r.steps),
            SweepFamily::Xstate(r) => (Family::XState, r.flags(), r.steps),
            SweepFamily::Classical(r) => (Family::Classical, r.flags(), r.steps),
            SweepFamily::Counterexample(r) => (Family::Counterexample, r.flags(), r.steps),
        };
        let defaults = SweepSpec::default_for(family);
        let names = StateParams::names(family);
        let mut ranges = Vec::with_capacity(names.len());
        for ((flag, name), default) in flags.iter().zip(names).zip(&defaults.ranges) {
            ranges.push(flag.resolve(name, *default, shared_steps)?);
        }
        SweepSpec::new(family, ranges)
    }
}

fn parse_grid(spec: &str) -> Result<OptimizerConfig, Error> {
    let bad = || Error::Parameter(format!("grid '{spec}' is not of the form THETAxPHI, e.g. 64x128"));
    let (theta, phi) = spec.split_once(['x', 'X']).ok_or_else(bad)?;
    let theta_steps: usize = theta.parse().map_err(|_| bad())?;
    let phi_steps: usize = phi.parse().map_err(|_| bad())?;
    if theta_steps == 0 || phi_steps == 0 {
        return Err(bad());
    }
    Ok(OptimizerConfig {
        theta_steps,
        phi_steps,
        refine: true,
    })
}

fn write_output(out: Option<&Path>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
            stdout.flush()
        }
    }
}

/// Parse arguments from the environment and run; returns the process exit
/// code. Usage errors are reported by the parser itself (exit code 2).
pub fn run() -> i32 {
    let cli = Cli::parse();

    let epsilon = cli.epsilon.unwrap_or(DEFAULT_EPSILON);
    if epsilon.is_nan() || epsilon <= 0.0 {
        eprintln!("qcorr: parameter error: epsilon = {epsilon} must be positive");
        return EXIT_PARAMETER;
    }
    let optimizer = match cli.grid.as_deref().map(parse_grid) {
        None => OptimizerConfig::default(),
        Some(Ok(cfg)) => cfg,
        Some(Err(e)) => {
            eprintln!("qcorr: {e}");
            return EXIT_PARAMETER;
        }
    };

    match &cli.command {
        Command::Analyze { family } => {
            let record = match sweep::analyze(&family.params(), epsilon, &optimizer) {
                Ok(record) => record,
                Err(e) => {
                    eprintln!("qcorr: {e}");
                    return EXIT_PARAMETER;
                }
            };
            let mut text = record.to_json().to_string();
            text.push('\n');
            match write_output(cli.out.as_deref(), &text) {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    eprintln!("qcorr: cannot write output: {e}");
                    EXIT_IO
                }
            }
        }
        Command::Sweep { family } => {
            let spec = match family.spec() {
                Ok(spec) => SweepSpec {
                    epsilon,
                    optimizer,
                    ..spec
                },
                Err(e) => {
                    eprintln!("qcorr: {e}");
                    return EXIT_PARAMETER;
                }
            };
            let (csv, summary) = match sweep::run_sweep(&spec) {
                Ok(out) => out,
                Err(e) => {
                    eprintln!("qcorr: {e}");
                    return EXIT_PARAMETER;
                }
            };
            eprintln!("{summary}");
            match write_output(cli.out.as_deref(), &csv) {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    eprintln!("qcorr: cannot write output: {e}");
                    EXIT_IO
                }
            }
        }
        Command::Verify => {
            let mut text = String::new();
            let mut all_passed = true;
            for report in verify::run_all() {
                text.push_str(&report.line());
                text.push('\n');
                all_passed &= report.passed;
            }
            text.push_str(if all_passed {
                "verification passed\n"
            } else {
                "verification FAILED\n"
            });
            if let Err(e) = write_output(cli.out.as_deref(), &text) {
                eprintln!("qcorr: cannot write output: {e}");
                return EXIT_IO;
            }
            if all_passed {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
    }
}
