//! Single-state analysis records and deterministic parameter sweeps.
//!
//! CSV conventions: comma delimiter, `\n` line endings, header always
//! present, floats as the shortest decimal that round-trips at 12
//! significant digits. Rows are emitted in row-major order over the
//! parameter loops (outermost = first declared parameter); grid cells whose
//! parameters fall outside the family's validity region are skipped and
//! counted, never errors. Each grid value is canonicalized to its emitted
//! 12-digit decimal before any computation, so re-feeding a CSV row through
//! `analyze` reproduces every numeric column exactly.

use serde_json::{Map, Number, Value};

use crate::contextuality::{self, ContextualityVerdict};
use crate::correlations::{self, CorrelationReport, OptimizerConfig};
use crate::error::{Error, Result};
use crate::states::{self, CounterexampleParams, DensityMatrix, XStateParams};

/// Format a float as the shortest decimal string that round-trips at
/// 12 significant digits.
pub fn format_float(x: f64) -> String {
    debug_assert!(x.is_finite());
    if x == 0.0 {
        return "0".to_string();
    }
    let rounded = round12(x);
    let plain = format!("{rounded}");
    let scientific = format!("{rounded:e}");
    if scientific.len() < plain.len() {
        scientific
    } else {
        plain
    }
}

/// Round to 12 significant decimal digits.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Which state family a record or sweep refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Werner,
    XState,
    Classical,
    Counterexample,
}

/// Concrete parameter values for one state of a family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateParams {
    Werner { c: f64 },
    XState(XStateParams),
    Classical { a: f64, b: f64, c: f64, d: f64 },
    Counterexample(CounterexampleParams),
}

impl StateParams {
    pub fn family(&self) -> Family {
        match self {
            StateParams::Werner { .. } => Family::Werner,
            StateParams::XState(_) => Family::XState,
            StateParams::Classical { .. } => Family::Classical,
            StateParams::Counterexample(_) => Family::Counterexample,
        }
    }

    /// Construct and validate the density matrix.
    pub fn build(&self) -> Result<DensityMatrix> {
        match self {
            StateParams::Werner { c } => states::werner(*c),
            StateParams::XState(p) => states::x_state(p),
            StateParams::Classical { a, b, c, d } => states::classical(*a, *b, *c, *d),
            StateParams::Counterexample(p) => states::counterexample(p),
        }
    }

    /// Parameter column names, in declaration order.
    pub fn names(family: Family) -> &'static [&'static str] {
        match family {
            Family::Werner => &["c"],
            Family::XState => &["a", "b", "c", "d", "w", "z"],
            Family::Classical => &["a", "b", "c", "d"],
            Family::Counterexample => &["alpha", "beta", "z"],
        }
    }

    /// Parameter values matching [`Self::names`].
    pub fn values(&self) -> Vec<f64> {
        match self {
            StateParams::Werner { c } => vec![*c],
            StateParams::XState(p) => vec![p.a, p.b, p.c, p.d, p.w, p.z],
            StateParams::Classical { a, b, c, d } => vec![*a, *b, *c, *d],
            StateParams::Counterexample(p) => vec![p.alpha, p.beta, p.z],
        }
    }

    fn from_values(family: Family, v: &[f64]) -> Self {
        match family {
            Family::Werner => StateParams::Werner { c: v[0] },
            Family::XState => StateParams::XState(XStateParams {
                a: v[0],
                b: v[1],
                c: v[2],
                d: v[3],
                w: v[4],
                z: v[5],
            }),
            Family::Classical => StateParams::Classical {
                a: v[0],
                b: v[1],
                c: v[2],
                d: v[3],
            },
            Family::Counterexample => StateParams::Counterexample(CounterexampleParams {
                alpha: v[0],
                beta: v[1],
                z: v[2],
            }),
        }
    }
}

/// One analyzed grid cell: input parameters plus the full correlation
/// report and gap verdict.
#[derive(Debug, Clone, Copy)]
pub struct AnalysisRecord {
    pub params: StateParams,
    pub report: CorrelationReport,
    pub verdict: ContextualityVerdict,
    pub skipped: bool,
}

/// Analyze a single state of a family.
pub fn analyze(
    params: &StateParams,
    epsilon: f64,
    optimizer: &OptimizerConfig,
) -> Result<AnalysisRecord> {
    let rho = params.build()?;
    analyze_built(params, &rho, epsilon, optimizer)
}

fn analyze_built(
    params: &StateParams,
    rho: &DensityMatrix,
    epsilon: f64,
    optimizer: &OptimizerConfig,
) -> Result<AnalysisRecord> {
    let report = correlations::quantum_discord_with(rho, optimizer)?;
    let verdict = contextuality::classify(rho, epsilon)?;
    Ok(AnalysisRecord {
        params: *params,
        report,
        verdict,
        skipped: false,
    })
}

/// The metric columns shared by every family's CSV schema.
const METRIC_COLUMNS: &str = "entropy_total,mutual_information,classical_correlation,discord,\
concurrence,exp_xx,exp_yy,exp_xy,exp_yx,gap,consistent";

/// CSV header for a family. The Werner schema has no `skipped` column; the
/// other families append one (always `false` — invalid cells produce no row).
pub fn csv_header(family: Family) -> String {
    let params = StateParams::names(family).join(",");
    match family {
        Family::Werner => format!("{params},{METRIC_COLUMNS}"),
        _ => format!("{params},{METRIC_COLUMNS},skipped"),
    }
}

impl AnalysisRecord {
    fn metric_values(&self) -> [f64; 10] {
        [
            self.report.entropy_total,
            self.report.mutual_information,
            self.report.classical_correlation,
            self.report.discord,
            self.report.concurrence,
            self.verdict.exp_xx,
            self.verdict.exp_yy,
            self.verdict.exp_xy,
            self.verdict.exp_yx,
            self.verdict.gap,
        ]
    }

    /// One CSV row matching [`csv_header`] for this record's family.
    pub fn csv_row(&self) -> String {
        let mut fields: Vec<String> = self.params.values().iter().map(|&v| format_float(v)).collect();
        fields.extend(self.metric_values().iter().map(|&v| format_float(v)));
        fields.push(self.verdict.consistent.to_string());
        if self.params.family() != Family::Werner {
            fields.push(self.skipped.to_string());
        }
        fields.join(",")
    }

    /// Flat JSON object with the same field names as the CSV columns.
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        let names = StateParams::names(self.params.family());
        for (name, v) in names.iter().zip(self.params.values()) {
            obj.insert(name.to_string(), json_number(v));
        }
        let metric_names = [
            "entropy_total",
            "mutual_information",
            "classical_correlation",
            "discord",
            "concurrence",
            "exp_xx",
            "exp_yy",
            "exp_xy",
            "exp_yx",
            "gap",
        ];
        for (name, v) in metric_names.iter().zip(self.metric_values()) {
            obj.insert(name.to_string(), json_number(v));
        }
        obj.insert("consistent".to_string(), Value::Bool(self.verdict.consistent));
        if self.params.family() != Family::Werner {
            obj.insert("skipped".to_string(), Value::Bool(self.skipped));
        }
        Value::Object(obj)
    }
}

fn json_number(x: f64) -> Value {
    Value::Number(Number::from_f64(round12(x)).expect("finite metric"))
}

/// An inclusive linear range with a step count; `steps == 1` means the
/// single value `min`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamRange {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl ParamRange {
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        if steps < 1 {
            return Err(Error::Parameter("range needs steps >= 1".into()));
        }
        if min.is_nan() || max.is_nan() || min > max {
            return Err(Error::Parameter(format!(
                "range min {min} exceeds max {max}"
            )));
        }
        if steps == 1 && min != max {
            // steps==1 collapses to the single value min
            return Ok(ParamRange { min, max: min, steps: 1 });
        }
        Ok(ParamRange { min, max, steps })
    }

    pub fn single(value: f64) -> Self {
        ParamRange {
            min: value,
            max: value,
            steps: 1,
        }
    }

    /// Grid value at index `i`, with exact endpoints.
    pub fn value(&self, i: usize) -> f64 {
        if self.steps == 1 || i == 0 {
            self.min
        } else if i == self.steps - 1 {
            self.max
        } else {
            self.min + (self.max - self.min) * (i as f64) / ((self.steps - 1) as f64)
        }
    }
}

/// A full sweep specification: one range per family parameter, in the same
/// order as the family's CSV parameter columns.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub family: Family,
    pub ranges: Vec<ParamRange>,
    pub epsilon: f64,
    pub optimizer: OptimizerConfig,
}

impl SweepSpec {
    pub fn new(family: Family, ranges: Vec<ParamRange>) -> Result<Self> {
        let expected = StateParams::names(family).len();
        if ranges.len() != expected {
            return Err(Error::Parameter(format!(
                "family needs {expected} parameter ranges, got {}",
                ranges.len()
            )));
        }
        Ok(SweepSpec {
            family,
            ranges,
            epsilon: contextuality::DEFAULT_EPSILON,
            optimizer: OptimizerConfig::default(),
        })
    }

    /// Default grids: the Werner range [−1/3, 1] in 101 steps, and for the
    /// other families modest grids spanning their natural regions (cells
    /// outside the PSD region are skipped during the run).
    pub fn default_for(family: Family) -> Self {
        let ranges = match family {
            Family::Werner => vec![ParamRange { min: -1.0 / 3.0, max: 1.0, steps: 101 }],
            Family::Classical => vec![ParamRange { min: 0.0, max: 1.0, steps: 5 }; 4],
            Family::XState => {
                let mut r = vec![ParamRange { min: 0.0, max: 1.0, steps: 5 }; 4];
                r.push(ParamRange { min: -0.5, max: 0.5, steps: 5 });
                r.push(ParamRange { min: -0.5, max: 0.5, steps: 5 });
                r
            }
            Family::Counterexample => vec![
                ParamRange { min: -0.2, max: 0.2, steps: 9 },
                ParamRange { min: -0.2, max: 0.2, steps: 9 },
                ParamRange { min: 0.0, max: 0.15, steps: 7 },
            ],
        };
        SweepSpec::new(family, ranges).expect("range count matches family")
    }

    fn cell_count(&self) -> usize {
        self.ranges.iter().map(|r| r.steps).product()
    }
}

/// Totals reported on stderr after a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSummary {
    pub cells: usize,
    pub skipped: usize,
    pub max_discord: f64,
    pub max_abs_gap: f64,
}

impl std::fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "cells={} skipped={} max_discord={} max_abs_gap={}",
            self.cells,
            self.skipped,
            format_float(self.max_discord),
            format_float(self.max_abs_gap)
        )
    }
}

/// Run a sweep, returning the CSV text (header + one row per valid cell in
/// row-major parameter order) and the summary. Byte-identical across runs
/// of the same spec.
pub fn run_sweep(spec: &SweepSpec) -> Result<(String, SweepSummary)> {
    let mut csv = String::new();
    csv.push_str(&csv_header(spec.family));
    csv.push('\n');

    let mut summary = SweepSummary {
        cells: spec.cell_count(),
        skipped: 0,
        max_discord: 0.0,
        max_abs_gap: 0.0,
    };

    let n_params = spec.ranges.len();
    let mut indices = vec![0usize; n_params];
    let mut values = vec![0.0f64; n_params];
    loop {
        for (k, idx) in indices.iter().enumerate() {
            // canonicalize to the emitted decimal so analyze() reproduces rows
            values[k] = round12(spec.ranges[k].value(*idx));
        }
        let params = StateParams::from_values(spec.family, &values);
        match params.build() {
            Ok(rho) => {
                // analysis failures on a validated state are real errors
                let record = analyze_built(&params, &rho, spec.epsilon, &spec.optimizer)?;
                summary.max_discord = summary.max_discord.max(record.report.discord);
                summary.max_abs_gap = summary.max_abs_gap.max(record.verdict.gap.abs());
                csv.push_str(&record.csv_row());
                csv.push('\n');
            }
            // cells outside the validity region are skipped, not fatal
            Err(_) => {
                summary.skipped += 1;
            }
        }

        // advance the row-major odometer (last parameter fastest)
        let mut k = n_params;
        loop {
            if k == 0 {
                return Ok((csv, summary));
            }
            k -= 1;
            indices[k] += 1;
            if indices[k] < spec.ranges[k].steps {
                break;
            }
            indices[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::assert_close;

    #[test]
    fn float_formatting() {
        assert_eq!(format_float(0.0), "0");
        assert_eq!(format_float(-0.0), "0");
        assert_eq!(format_float(0.25), "0.25");
        assert_eq!(format_float(1.0), "1");
        assert_eq!(format_float(-0.5), "-0.5");
        assert_eq!(format_float(1.0 / 3.0), "0.333333333333");
        // shortest form wins; scientific for very small magnitudes
        assert_eq!(format_float(1e-7), "1e-7");
        assert_eq!(format_float(1.2345678901234e-3), "0.00123456789012");
        // round-trips to the rounded value
        let x = 0.1234567890123456;
        let s = format_float(x);
        let back: f64 = s.parse().unwrap();
        assert_eq!(back, round12(x));
    }

    #[test]
    fn param_range_values() {
        let r = ParamRange::new(-1.0 / 3.0, 1.0, 101).unwrap();
        assert_eq!(r.value(0), -1.0 / 3.0);
        assert_eq!(r.value(100), 1.0);
        assert_close(r.value(50), -1.0 / 3.0 + (4.0 / 3.0) * 0.5, 1e-15);

        let s = ParamRange::new(0.7, 0.9, 1).unwrap();
        assert_eq!(s.value(0), 0.7);

        assert!(ParamRange::new(1.0, 0.0, 5).is_err());
        assert!(ParamRange::new(0.0, 1.0, 0).is_err());
    }

    #[test]
    fn analyze_werner_record() {
        let rec = analyze(
            &StateParams::Werner { c: 0.5 },
            contextuality::DEFAULT_EPSILON,
            &OptimizerConfig::default(),
        )
        .unwrap();
        assert!(rec.report.discord > 0.0);
        assert_close(rec.verdict.gap, 0.25, 1e-14);
        assert_close(rec.report.concurrence, 0.25, 1e-9);
        assert!(!rec.verdict.consistent);
        assert!(!rec.skipped);
    }

    #[test]
    fn csv_schemas() {
        assert_eq!(
            csv_header(Family::Werner),
            "c,entropy_total,mutual_information,classical_correlation,discord,concurrence,\
exp_xx,exp_yy,exp_xy,exp_yx,gap,consistent"
        );
        assert_eq!(
            csv_header(Family::Counterexample),
            "alpha,beta,z,entropy_total,mutual_information,classical_correlation,discord,\
concurrence,exp_xx,exp_yy,exp_xy,exp_yx,gap,consistent,skipped"
        );
        let rec = analyze(
            &StateParams::Werner { c: 0.5 },
            1e-9,
            &OptimizerConfig::default(),
        )
        .unwrap();
        let row = rec.csv_row();
        assert_eq!(row.split(',').count(), 12);
        assert!(row.starts_with("0.5,"));
        assert!(row.ends_with(",false"));
    }

    #[test]
    fn json_matches_csv_columns() {
        let rec = analyze(
            &StateParams::Counterexample(CounterexampleParams { alpha: 0.2, beta: -0.2, z: 0.1 }),
            1e-9,
            &OptimizerConfig::default(),
        )
        .unwrap();
        let json = rec.to_json();
        let obj = json.as_object().unwrap();
        let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        let header = csv_header(Family::Counterexample);
        let cols: Vec<&str> = header.split(',').collect();
        assert_eq!(keys, cols);
        assert_eq!(obj["skipped"], Value::Bool(false));
        assert!(obj["gap"].as_f64().unwrap().abs() <= 1e-12);
    }

    #[test]
    fn sweep_counts_skipped_cells() {
        // alpha = ±0.3 violates alpha² + z² ≤ 1/16 regardless of z
        let spec = SweepSpec::new(
            Family::Counterexample,
            vec![
                ParamRange::new(-0.3, 0.3, 3).unwrap(),
                ParamRange::single(0.0),
                ParamRange::new(0.0, 0.1, 2).unwrap(),
            ],
        )
        .unwrap();
        let (csv, summary) = run_sweep(&spec).unwrap();
        assert_eq!(summary.cells, 6);
        assert_eq!(summary.skipped, 4);
        assert_eq!(csv.lines().count(), 1 + 2); // header + valid rows
    }

    #[test]
    fn sweep_is_deterministic() {
        let spec = SweepSpec::new(
            Family::Werner,
            vec![ParamRange::new(-0.3333, 1.0, 11).unwrap()],
        )
        .unwrap();
        let (csv1, s1) = run_sweep(&spec).unwrap();
        let (csv2, s2) = run_sweep(&spec).unwrap();
        assert_eq!(csv1, csv2);
        assert_eq!(s1, s2);
    }

    #[test]
    fn sweep_rows_reproduce_through_analyze() {
        let spec = SweepSpec::new(
            Family::Counterexample,
            vec![
                ParamRange::new(-0.2, 0.2, 3).unwrap(),
                ParamRange::new(-0.2, 0.2, 3).unwrap(),
                ParamRange::new(0.0, 0.1, 2).unwrap(),
            ],
        )
        .unwrap();
        let (csv, _) = run_sweep(&spec).unwrap();
        for line in csv.lines().skip(1) {
            let fields: Vec<f64> = line
                .split(',')
                .take(13) // numeric columns before `consistent`
                .map(|s| s.parse().unwrap())
                .collect();
            let params = StateParams::Counterexample(CounterexampleParams {
                alpha: fields[0],
                beta: fields[1],
                z: fields[2],
            });
            let rec = analyze(&params, spec.epsilon, &spec.optimizer).unwrap();
            let expected = rec.csv_row();
            assert_eq!(line, expected, "row did not reproduce");
        }
    }

    #[test]
    fn sweep_row_order_is_row_major() {
        let spec = SweepSpec::new(
            Family::Classical,
            vec![
                ParamRange::new(0.0, 0.5, 2).unwrap(),
                ParamRange::single(0.25),
                ParamRange::single(0.25),
                ParamRange::new(0.0, 0.5, 2).unwrap(),
            ],
        )
        .unwrap();
        let (csv, summary) = run_sweep(&spec).unwrap();
        // valid cells must satisfy a+0.25+0.25+d = 1, i.e. (a,d) ∈ {(0,.5),(.5,0)}
        let rows: Vec<&str> = csv.lines().skip(1).collect();
        assert_eq!(rows.len(), 2);
        assert!(rows[0].starts_with("0,0.25,0.25,0.5,"));
        assert!(rows[1].starts_with("0.5,0.25,0.25,0,"));
        assert_eq!(summary.skipped, 2);
    }
}
