// Copyright 2026 The flowopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! `flowopt` command-line tool.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use flowopt::circuit::Circuit;
use flowopt::optimizer::{flow_opt, OptimizerConfig};
use flowopt::qasm::{emit_qasm, parse_qasm};
use flowopt::random::random_circuit;
use flowopt::suite::{construct, REFERENCES};
use flowopt::verify::circuits_equal;
use rayon::prelude::*;
use serde::Serialize;

/// Causal-flow preserving ZX-calculus circuit optimiser.
#[derive(Parser, Debug)]
#[command(name = "flowopt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Optimise one OpenQASM 2.0 file.
    Optimize {
        input: PathBuf,
        #[command(flatten)]
        opt: OptArgs,
        /// Write the optimised circuit here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Optimise every `.qasm` file in a directory and report metrics.
    Bench {
        dir: PathBuf,
        #[command(flatten)]
        opt: OptArgs,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock time per circuit.
        #[arg(long)]
        timing: bool,
    },
    /// Generate a random Clifford+T circuit.
    Random {
        #[arg(long, default_value_t = 8)]
        qubits: usize,
        #[arg(long, default_value_t = 400)]
        gates: usize,
        /// Probability of a T gate at each position.
        #[arg(long, default_value_t = 0.1)]
        pt: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the built-in benchmark circuits as `<name>.qasm`.
    Suite {
        /// Target directory.
        #[arg(long, default_value = "benchmarks")]
        out: PathBuf,
    },
}

#[derive(Args, Debug, Clone)]
struct OptArgs {
    /// Largest neighbour-unfusion subset for both rule families.
    #[arg(long, default_value_t = 2)]
    smax: usize,
    #[arg(long)]
    smax_lcomp: Option<usize>,
    #[arg(long)]
    smax_pivot: Option<usize>,
    /// Break ties between equally scored rewrites pseudo-randomly.
    #[arg(long)]
    seed: Option<u64>,
    /// Check the result against the input unitary (small circuits only).
    #[arg(long)]
    verify: bool,
    /// Only run phase teleportation.
    #[arg(long)]
    teleport_only: bool,
    /// Emit line-delimited JSON records.
    #[arg(long)]
    json: bool,
}

impl OptArgs {
    fn config(&self) -> OptimizerConfig {
        OptimizerConfig {
            s_max_lcomp: self.smax_lcomp.unwrap_or(self.smax),
            s_max_pivot: self.smax_pivot.unwrap_or(self.smax),
            rng_seed: self.seed,
            teleport_only: self.teleport_only,
            ..Default::default()
        }
    }
}

enum Failure {
    Usage(String),
    Parse(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<flowopt::Error> for Failure {
    fn from(e: flowopt::Error) -> Failure {
        match e {
            flowopt::Error::Parse(p) => Failure::Parse(p.to_string()),
            flowopt::Error::InvalidArgument(m) => Failure::Usage(m),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

#[derive(Serialize, Clone, Copy, Debug)]
struct Counts {
    two_qubit: usize,
    t: usize,
    total: usize,
}

impl Counts {
    fn of(c: &Circuit) -> Counts {
        Counts {
            two_qubit: c.two_qubit_count(),
            t: c.t_count(),
            total: c.gates.len(),
        }
    }
}

#[derive(Serialize, Debug)]
struct Metrics {
    name: String,
    qubits: usize,
    original: Counts,
    optimised: Counts,
    reduction_2q: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_ms: Option<f64>,
}

#[derive(Serialize, Debug)]
struct FileError {
    name: String,
    error: String,
}

#[derive(Serialize, Debug)]
struct Aggregate {
    circuits: usize,
    failures: usize,
    mean_reduction_2q: f64,
}

/// Reduction in percent, 0 for circuits without two-qubit gates.
fn reduction(orig: usize, opt: usize) -> f64 {
    if orig == 0 {
        0.0
    } else {
        100.0 * (1.0 - opt as f64 / orig as f64)
    }
}

fn read_circuit(path: &Path) -> Result<Circuit, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    parse_qasm(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

/// `None` when the circuit is too large for the dense check.
fn verify(a: &Circuit, b: &Circuit, max_qubits: usize) -> Result<Option<bool>, Failure> {
    if a.n_qubits > max_qubits {
        return Ok(None);
    }
    Ok(Some(circuits_equal(a, b)?))
}

fn optimise(
    name: String,
    c: &Circuit,
    opt: &OptArgs,
    max_verify: usize,
    timing: bool,
) -> Result<(Circuit, Metrics), Failure> {
    let start = Instant::now();
    let out = flow_opt(c, &opt.config())?;
    let wall_ms = timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    let verified = if opt.verify {
        verify(c, &out, max_verify)?
    } else {
        None
    };
    let (original, optimised) = (Counts::of(c), Counts::of(&out));
    let metrics = Metrics {
        name,
        qubits: c.n_qubits,
        original,
        optimised,
        reduction_2q: reduction(original.two_qubit, optimised.two_qubit),
        verified,
        wall_ms,
    };
    Ok((out, metrics))
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| io_failure(p, e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Internal(e.to_string()))
        }
    }
}

fn json_line(x: &impl Serialize) -> String {
    serde_json::to_string(x).expect("metrics serialise") + "\n"
}

fn text_line(m: &Metrics) -> String {
    let mut s = format!(
        "{:<20} {:>3} {:>6} {:>6} {:>6} {:>6} {:>7.2}%",
        m.name,
        m.qubits,
        m.original.two_qubit,
        m.optimised.two_qubit,
        m.original.t,
        m.optimised.t,
        m.reduction_2q
    );
    match m.verified {
        Some(true) => s.push_str("  verified"),
        Some(false) => s.push_str("  MISMATCH"),
        None => {}
    }
    if let Some(ms) = m.wall_ms {
        s.push_str(&format!("  {ms:.1} ms"));
    }
    s + "\n"
}

fn cmd_optimize(input: &Path, opt: &OptArgs, out: Option<&Path>) -> Result<(), Failure> {
    let c = read_circuit(input)?;
    let name = input.file_stem().map_or_else(
        || input.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    );
    let (optimised, metrics) = optimise(name, &c, opt, flowopt::verify::MAX_QUBITS, false)?;
    write_or_print(out, &emit_qasm(&optimised))?;
    let report = if opt.json {
        json_line(&metrics)
    } else {
        format!(
            "{}: 2Q {} -> {}, T {} -> {}, gates {} -> {}{}\n",
            metrics.name,
            metrics.original.two_qubit,
            metrics.optimised.two_qubit,
            metrics.original.t,
            metrics.optimised.t,
            metrics.original.total,
            metrics.optimised.total,
            match metrics.verified {
                Some(true) => ", verified",
                Some(false) => ", MISMATCH",
                None => "",
            }
        )
    };
    if out.is_some() {
        print!("{report}");
    } else {
        eprint!("{report}");
    }
    if metrics.verified == Some(false) {
        return Err(Failure::Internal(
            "optimised circuit differs from the input".into(),
        ));
    }
    Ok(())
}

/// Largest circuit checked by `bench --verify`.
const BENCH_VERIFY_QUBITS: usize = 10;

fn cmd_bench(dir: &Path, opt: &OptArgs, out: Option<&Path>, timing: bool) -> Result<(), Failure> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| io_failure(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "qasm"))
        .collect();
    files.sort();
    let results: Vec<(String, Result<Metrics, Failure>)> = files
        .par_iter()
        .map(|p| {
            let name = p
                .file_stem()
                .unwrap_or_default()
                .to_string_lossy()
                .into_owned();
            let r = read_circuit(p).and_then(|c| {
                optimise(name.clone(), &c, opt, BENCH_VERIFY_QUBITS, timing).map(|x| x.1)
            });
            (name, r)
        })
        .collect();
    let mut report = String::new();
    if !opt.json {
        report.push_str(&format!(
            "{:<20} {:>3} {:>6} {:>6} {:>6} {:>6} {:>8}\n",
            "circuit", "Q", "2Q", "2Q opt", "T", "T opt", "2Q red."
        ));
    }
    let (mut sum, mut ok, mut failures, mut mismatch) = (0.0, 0, 0, false);
    for (name, r) in &results {
        match r {
            Ok(m) => {
                sum += m.reduction_2q;
                ok += 1;
                mismatch |= m.verified == Some(false);
                report.push_str(&if opt.json { json_line(m) } else { text_line(m) });
            }
            Err(e) => {
                failures += 1;
                let fe = FileError {
                    name: name.clone(),
                    error: e.message().to_string(),
                };
                report.push_str(&if opt.json {
                    json_line(&fe)
                } else {
                    format!("{name}: error: {}\n", fe.error)
                });
            }
        }
    }
    let agg = Aggregate {
        circuits: ok,
        failures,
        mean_reduction_2q: if ok == 0 { 0.0 } else { sum / ok as f64 },
    };
    report.push_str(&if opt.json {
        json_line(&agg)
    } else {
        format!(
            "mean 2Q reduction {:.2}% over {} circuits, {} failed\n",
            agg.mean_reduction_2q, ok, failures
        )
    });
    write_or_print(out, &report)?;
    if mismatch {
        return Err(Failure::Internal(
            "an optimised circuit differs from its input".into(),
        ));
    }
    Ok(())
}

fn cmd_suite(out: &Path) -> Result<(), Failure> {
    fs::create_dir_all(out).map_err(|e| io_failure(out, e))?;
    for r in &REFERENCES {
        if let Some(c) = construct(r.name) {
            let path = out.join(format!("{}.qasm", r.name));
            fs::write(&path, emit_qasm(&c)).map_err(|e| io_failure(&path, e))?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Optimize { input, opt, out } => cmd_optimize(&input, &opt, out.as_deref()),
        Command::Bench {
            dir,
            opt,
            out,
            timing,
        } => cmd_bench(&dir, &opt, out.as_deref(), timing),
        Command::Random {
            qubits,
            gates,
            pt,
            seed,
            out,
        } => {
            let c = random_circuit(qubits, gates, pt, seed)?;
            write_or_print(out.as_deref(), &emit_qasm(&c))
        }
        Command::Suite { out } => cmd_suite(&out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("flowopt: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
