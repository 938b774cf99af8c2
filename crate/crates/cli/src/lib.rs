//! Command-line front end: argument parsing, file I/O, exit codes, and the
//! fixture verification suite.

pub mod fixtures;
pub mod verify;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use sgb_core::gf::{LinearCode, Matrix};
use sgb_core::groebner::{
    buchberger_with, coset_engine_with, ideal_generators, parse_basis, to_text,
};
use sgb_core::schubert::{
    enumerate_schubert_points_by, generator_matrix_with, schubert_params_with,
};
use sgb_core::{
    gb_decode_with, index_tuples, parse_word, simulate, DecodeMode, DecodeStatus, ErrorModel,
    Limits, ReducedGroebnerBasis, SchubertFilter, SchubertSpec, SquarefreeMonomial,
};

use crate::fixtures::FixtureSet;
use crate::verify::Group;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_GUARD: u8 = 3;
pub const EXIT_MISSING_FIXTURE: u8 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] sgb_core::Error),
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("missing fixture {}", .0.display())]
    MissingFixture(PathBuf),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use sgb_core::Error as E;
        match self {
            CliError::Mismatch(_) => EXIT_MISMATCH,
            CliError::MissingFixture(_) => EXIT_MISSING_FIXTURE,
            CliError::Core(
                E::EnumerationBound { .. } | E::BuchbergerGuard { .. } | E::WordTooLong(_),
            ) => EXIT_GUARD,
            CliError::Core(_) | CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
        }
    }
}

/// Guards, optionally overridden by `SGB_MAX_N`.
pub fn limits_from_env() -> Result<Limits, CliError> {
    match std::env::var("SGB_MAX_N") {
        Err(_) => Ok(Limits::default()),
        Ok(v) => {
            let n: usize = v.trim().parse().map_err(|_| {
                CliError::Usage(format!(
                    "SGB_MAX_N must be a non-negative integer, got `{v}`"
                ))
            })?;
            Ok(Limits {
                buchberger_n: n,
                ..Limits::with_max_n(n)
            })
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "sgb",
    version,
    about = "Schubert codes, binomial Gröbner bases and decoding"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    /// Subspace dimension.
    #[arg(long, default_value_t = 2)]
    pub l: usize,
    /// Ambient dimension.
    #[arg(long, default_value_t = 5)]
    pub m: usize,
    /// Field size (prime).
    #[arg(long, default_value_t = 2)]
    pub q: u64,
    /// Strictly increasing index tuple, e.g. `1,4`.
    #[arg(long)]
    pub alpha: String,
}

impl SpecArgs {
    pub fn spec(&self) -> Result<SchubertSpec, CliError> {
        let alpha = self
            .alpha
            .split(',')
            .map(|v| {
                v.trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad alpha entry `{v}`")))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        Ok(SchubertSpec::new(self.l, self.m, self.q, alpha)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Coset,
    Buchberger,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Bounded,
    Complete,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the parameters of a Schubert code.
    Params(SpecArgs),
    /// Write the generator matrix of a Schubert code.
    Build {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the Plücker coordinates of every point, one per line.
        #[arg(long)]
        emit_points: Option<PathBuf>,
    },
    /// Compute the reduced Gröbner basis of a binary code's ideal.
    Gb {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Engine::Coset)]
        engine: Engine,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decode one received word with a basis file.
    Decode {
        #[arg(long)]
        basis: PathBuf,
        /// Binary string (`0101101`) or monomial (`x2*x5*x7`).
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Mode::Bounded)]
        mode: Mode,
    },
    /// Monte Carlo decoding run over a noisy channel.
    Simulate {
        #[arg(long)]
        matrix: PathBuf,
        /// `fixed_weight(w)` or `bsc(p)`.
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the shipped reference data against the implementation.
    VerifyPaper {
        /// Restrict to these check groups (comma separated).
        #[arg(long, value_enum, value_delimiter = ',')]
        only: Vec<Group>,
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn stdout_err(e: std::io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        message: e.to_string(),
    }
}

pub fn read_code(path: &Path) -> Result<LinearCode<u32>, CliError> {
    let m = Matrix::<u32>::from_text(&read_file(path)?)?;
    Ok(LinearCode::new(m)?)
}

pub fn compute_basis(
    code: &LinearCode<u32>,
    engine: Engine,
    limits: &Limits,
) -> Result<ReducedGroebnerBasis, CliError> {
    Ok(match engine {
        Engine::Coset => coset_engine_with(code, limits)?,
        Engine::Buchberger => buchberger_with(&ideal_generators(code)?, code.n(), limits)?.0,
    })
}

/// Text written by `build --emit-points`: a header naming the coordinate
/// order, then one comma-separated Plücker vector per point.
pub fn points_text(spec: &SchubertSpec, limits: &Limits) -> Result<String, CliError> {
    let tuples = index_tuples(spec.l(), spec.m())?;
    let names: Vec<String> = tuples.iter().map(|t| t.to_string()).collect();
    let mut out = format!("# q={} coordinates {}\n", spec.q(), names.join(" "));
    for p in enumerate_schubert_points_by::<u32>(spec, SchubertFilter::Pivot, limits)? {
        out.push_str(&p.to_csv());
        out.push('\n');
    }
    Ok(out)
}

fn word_pair(w: &sgb_core::BinaryWord) -> String {
    format!("{} ({w})", SquarefreeMonomial::from(*w))
}

pub fn run(cli: Cli, limits: &Limits, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Params(args) => {
            let spec = args.spec()?;
            let p = schubert_params_with(&spec, limits)?;
            writeln!(
                out,
                "n={} k={} d={} t={} mds={} delta={}",
                p.n_alpha,
                p.k_alpha,
                p.d,
                p.capability(),
                if p.is_mds() { "yes" } else { "no" },
                p.delta_alpha
            )
            .map_err(stdout_err)?;
        }
        Command::Build {
            spec,
            output,
            emit_points,
        } => {
            let spec = spec.spec()?;
            let text = generator_matrix_with::<u32>(&spec, limits)?.to_text();
            match output {
                Some(path) => write_file(&path, &text)?,
                None => out.write_all(text.as_bytes()).map_err(stdout_err)?,
            }
            if let Some(path) = emit_points {
                write_file(&path, &points_text(&spec, limits)?)?;
            }
        }
        Command::Gb {
            matrix,
            engine,
            output,
        } => {
            let code = read_code(&matrix)?;
            let gb = compute_basis(&code, engine, limits)?;
            let t = gb
                .capability()
                .map_or_else(|_| "undefined".to_string(), |t| t.to_string());
            let summary = format!(
                "elements={} code_binomials={} field_relations={} t={t}",
                gb.len(),
                gb.len() - gb.field_relation_count(),
                gb.field_relation_count()
            );
            match output {
                Some(path) => {
                    write_file(&path, &to_text(&gb))?;
                    writeln!(out, "{summary}").map_err(stdout_err)?;
                }
                None => {
                    out.write_all(to_text(&gb).as_bytes()).map_err(stdout_err)?;
                    eprintln!("{summary}");
                }
            }
        }
        Command::Decode { basis, word, mode } => {
            let gb = parse_basis(&read_file(&basis)?)?;
            let w = parse_word(&word, gb.n())?;
            let mode = match mode {
                Mode::Bounded => DecodeMode::Bounded,
                Mode::Complete => DecodeMode::Complete,
            };
            let o = gb_decode_with(&w, &gb, mode)?;
            let line = match (o.status, o.error, o.codeword) {
                (DecodeStatus::Decoded, Some(e), Some(c)) => format!(
                    "status=decoded canonical={} error={} codeword={}",
                    o.canonical,
                    word_pair(&e),
                    word_pair(&c)
                ),
                _ => format!(
                    "status=too_many_errors canonical={} weight={}",
                    o.canonical, o.nf_weight
                ),
            };
            writeln!(out, "{line}").map_err(stdout_err)?;
        }
        Command::Simulate {
            matrix,
            model,
            trials,
            seed,
        } => {
            let model: ErrorModel = model.parse()?;
            let code = read_code(&matrix)?;
            let gb = coset_engine_with(&code, limits)?;
            let report = simulate(&code, &gb, model, trials, seed)?;
            writeln!(out, "{report}").map_err(stdout_err)?;
        }
        Command::VerifyPaper { only, fixtures } => {
            let dir = fixtures.unwrap_or_else(fixtures::default_dir);
            let set = FixtureSet::load(&dir)?;
            let report = verify::run(&set, &only, *limits);
            out.write_all(report.render().as_bytes())
                .map_err(stdout_err)?;
            if !report.passed() {
                return Err(CliError::Mismatch(format!(
                    "{} check(s) failed",
                    report.failures().count()
                )));
            }
        }
    }
    Ok(())
}
