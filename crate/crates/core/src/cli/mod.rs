//! The `subfield` command line.
//!
//! Exit codes: 0 success, 1 usage (including unreadable files), 2 parse
//! errors, 3 infeasible requests (size caps, violated preconditions).

pub mod codefile;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use num_rational::Rational64;

use crate::bounds::{bounds_csv, bounds_table, gv_random_experiment};
use crate::codes::{self, trace_symplectic_dual, Code, SubfieldSubcode, DEFAULT_ENUMERATION_CAP};
use crate::decoding::{self, ChannelSpec, Decoder};
use crate::enumerator::{enumerator_from_code, macwilliams_transform, minimal_br_from_enumerator};
use crate::error::Error;
use crate::gf::{Field, Notation};
use crate::metric::{self, format_br_set, BRWeight, Lambda};
use crate::volume::{asymptotic_ball_exponent, ball_size, log_big, Alphabet};

pub use codefile::{AnyCode, CodeFile, CodeSpec};

#[derive(Debug, Parser)]
#[command(name = "subfield", version, about = "Computations in the lambda-subfield metric")]
pub struct Cli {
    /// Worker threads for exhaustive enumeration and simulation.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Largest number of codewords (or error vectors) an exhaustive step may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub e: u32,
    #[arg(long)]
    pub m: u32,
    /// Coefficients low to high, comma separated.
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// BR, Hamming, rank and lambda weights of a vector.
    Weight {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        lambda: String,
        vector: String,
    },
    /// Minimum lambda distance, BR minima and the Singleton-type verdict.
    Mindist {
        file: PathBuf,
        #[arg(long)]
        lambda: String,
    },
    /// Restriction of a linear code to the subfield.
    Restrict { file: PathBuf },
    /// Exact size of the lambda-ball.
    Ball {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: String,
        #[arg(long)]
        lambda: String,
    },
    /// Saddle-point exponent of balls of relative radius u.
    Exponent {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        u: f64,
    },
    /// CSV sweep of the size bounds over a range of lengths.
    Bounds {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        d: String,
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Subfield weight enumerator of a code.
    Enumerator {
        file: PathBuf,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Enumerator of the trace-symplectic dual, through the MacWilliams identity.
    Macwilliams {
        file: PathBuf,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Generators of the trace-symplectic dual, written as a code file.
    Dual {
        file: PathBuf,
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Nearest-codeword decoding of a received word.
    Decode {
        file: PathBuf,
        #[arg(long)]
        lambda: String,
        word: String,
        /// Skip the syndrome table even when it would fit.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Monte Carlo word error rate over a channel with base and roof errors.
    Simulate {
        file: PathBuf,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        p_base: f64,
        #[arg(long)]
        p_roof: f64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        exhaustive: bool,
        /// One header line and one data line instead of key-value output.
        #[arg(long)]
        csv: bool,
    },
    /// Fraction of random linear codes reaching distance d at the GV dimension.
    Gv {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: String,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Fraction of random [n,k] codes meeting the Singleton-type bound.
    Density {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Lib(e) => match e {
                Error::Parse(_)
                | Error::NonPrime(_)
                | Error::ReduciblePolynomial(_)
                | Error::InvalidModulus(_)
                | Error::InvalidElement(_)
                | Error::ExponentOutOfRange(_)
                | Error::LengthMismatch(..) => 2,
                _ => 3,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn parse_lambda(s: &str) -> CliResult<Lambda> {
    Ok(s.parse::<Lambda>()?)
}

/// `"7"` or `"9/2"`.
pub fn parse_rational(s: &str) -> crate::Result<Rational64> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let r = match s.trim().split_once('/') {
        Some((n, d)) => {
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d <= 0 {
                return Err(bad());
            }
            Rational64::new(n.trim().parse().map_err(|_| bad())?, d)
        }
        None => Rational64::from_integer(s.trim().parse().map_err(|_| bad())?),
    };
    if r < Rational64::from_integer(0) {
        return Err(bad());
    }
    Ok(r)
}

fn field_of(a: &FieldArgs) -> CliResult<Field> {
    let modulus = match &a.modulus {
        Some(s) => Some(
            s.split(',')
                .map(|c| c.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad modulus {s:?}"))))
                .collect::<crate::Result<Vec<_>>>()?,
        ),
        None => None,
    };
    Ok(Field::new(a.p, a.e, a.m, modulus)?)
}

fn read_code_file(path: &Path) -> CliResult<CodeFile> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(text.parse()?)
}

fn write_to(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// BR minima with the most base errors first.
fn minima_text(minima: &[BRWeight]) -> String {
    let mut v = minima.to_vec();
    v.reverse();
    format_br_set(&v)
}

/// Runs one parsed command, writing its report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let threads = cli.threads.max(1);
    let cap = cli.cap;
    let mut s = String::new();
    match &cli.command {
        Command::Weight { field, lambda, vector } => {
            let f = field_of(field)?;
            let lam = parse_lambda(lambda)?;
            let v = f.parse_vector(vector)?;
            let br = metric::br_weight(&f, &v);
            let _ = writeln!(s, "br = {br}");
            let _ = writeln!(s, "base = {}", br.base);
            let _ = writeln!(s, "roof = {}", br.roof);
            let _ = writeln!(s, "hamming = {}", br.hamming());
            let _ = writeln!(s, "rank = {}", metric::rank_weight(&f, &v));
            let _ = writeln!(s, "lambda_weight = {}", br.lambda_value(lam));
        }
        Command::Mindist { file, lambda } => {
            let cf = read_code_file(file)?;
            let lam = parse_lambda(lambda)?;
            let code = cf.build()?;
            let set = codes::br_distribution(&code, cap, threads)?;
            let d = set
                .min_lambda(lam)
                .ok_or_else(|| Error::ConditionViolated("the zero code has no minimum distance".into()))?;
            let _ = writeln!(s, "d_lambda = {d}; minima = {}", minima_text(&set.minima));
            let _ = writeln!(s, "hamming = {}", set.min_hamming().unwrap_or(0));
            let _ = writeln!(s, "size = {}", set.total());
            if let (Some(lin), true) = (code.as_linear(), lam.value() >= Rational64::from_integer(1)) {
                let rhs = lin.length() - lin.dimension();
                let lhs = ((d.value() - 1) / lam.value()).floor().to_integer();
                let _ = writeln!(s, "n = {}; k = {}", lin.length(), lin.dimension());
                let _ = writeln!(s, "mld = {} (floor((d-1)/lambda) = {lhs}, n-k = {rhs})", lhs == rhs as i64);
            }
        }
        Command::Restrict { file } => {
            let cf = read_code_file(file)?;
            let code = cf.build()?;
            let lin = code
                .as_linear()
                .ok_or_else(|| Error::ConditionViolated("restriction needs a linear code".into()))?;
            let sub = SubfieldSubcode::of(lin);
            let _ = writeln!(s, "dimension = {}", sub.dimension());
            match sub.min_hamming_distance(cap)? {
                Some(d) => {
                    let _ = writeln!(s, "hamming = {d}");
                }
                None => {
                    let _ = writeln!(s, "hamming = none");
                }
            }
        }
        Command::Ball { q, m, n, r, lambda } => {
            let a = Alphabet::new(*q, *m)?;
            let lam = parse_lambda(lambda)?;
            let r = parse_rational(r)?;
            let size = ball_size(*n, r, lam, a);
            let _ = writeln!(s, "{size}");
            let _ = writeln!(s, "log_qm = {:.6}", log_big(&size, a.size() as f64));
        }
        Command::Exponent { q, m, lambda, u } => {
            let a = Alphabet::new(*q, *m)?;
            let spec = asymptotic_ball_exponent(*u, parse_lambda(lambda)?, a)?;
            let _ = writeln!(s, "rho = {:.12}", spec.rho);
            let _ = writeln!(s, "sphere_exponent = {:.12}", spec.sphere_exponent);
            let _ = writeln!(s, "exponent = {:.12}", spec.exponent);
        }
        Command::Bounds { q, m, lambda, d, n_from, n_to, out: path } => {
            if n_from > n_to || *n_from == 0 {
                return Err(CliError::Usage(format!("bad length range {n_from}..{n_to}")));
            }
            let a = Alphabet::new(*q, *m)?;
            let rows = bounds_table(*n_from..=*n_to, parse_rational(d)?, parse_lambda(lambda)?, a);
            let csv = bounds_csv(&rows);
            match path {
                Some(p) => write_to(p, &csv)?,
                None => s = csv,
            }
        }
        Command::Enumerator { file, csv } => {
            let cf = read_code_file(file)?;
            let code = cf.build()?;
            let w = enumerator_from_code(&code, cap, threads)?;
            let _ = writeln!(s, "{w}");
            let _ = writeln!(s, "total = {}", w.total());
            let _ = writeln!(s, "minima = {}", minima_text(&minimal_br_from_enumerator(&w)));
            if let Some(p) = csv {
                write_to(p, &w.to_csv())?;
            }
        }
        Command::Macwilliams { file, csv } => {
            let cf = read_code_file(file)?;
            let code = cf.build()?;
            cf.field.check_pair_setup(cf.gamma_or_default())?;
            let w = enumerator_from_code(&code, cap, threads)?;
            let size: BigUint = w.total();
            let dual = macwilliams_transform(&w, &size, cf.field.q())?;
            let _ = writeln!(s, "{dual}");
            let _ = writeln!(s, "total = {}", dual.total());
            let _ = writeln!(s, "minima = {}", minima_text(&minimal_br_from_enumerator(&dual)));
            if let Some(p) = csv {
                write_to(p, &dual.to_csv())?;
            }
        }
        Command::Dual { file, gamma, out: path } => {
            let cf = read_code_file(file)?;
            let code = cf.build()?;
            let g = match gamma {
                Some(t) => cf.field.parse_element(t)?,
                None => cf.gamma_or_default(),
            };
            let dual = trace_symplectic_dual(&code, g)?;
            let text = CodeFile::additive(&cf.field, Some(g), code.length(), dual.generators().to_vec()).to_string();
            let text = format!("# trace-symplectic dual, {} generators over F_p\n{text}", dual.log_size());
            match path {
                Some(p) => write_to(p, &text)?,
                None => s = text,
            }
        }
        Command::Decode { file, lambda, word, exhaustive } => {
            let cf = read_code_file(file)?;
            let lam = parse_lambda(lambda)?;
            let code = cf.build()?;
            let y = cf.field.parse_vector(word)?;
            let r = match (code.as_linear(), exhaustive) {
                (Some(lin), false) => Decoder::for_linear(lin, lam, cap)?.decode(&y)?,
                _ => decoding::decode_nearest(&code, &y, lam, cap)?,
            };
            let _ = writeln!(s, "codeword = {}", cf.field.format_vector(&r.codeword, Notation::Power));
            let _ = writeln!(s, "distance = {}", r.distance);
            let _ = writeln!(s, "error = {}", r.error);
            let _ = writeln!(s, "ties = {}", r.ties);
            let _ = writeln!(s, "unique = {}", r.unique);
        }
        Command::Simulate {
            file,
            lambda,
            p_base,
            p_roof,
            trials,
            seed,
            exhaustive,
            csv,
        } => {
            let cf = read_code_file(file)?;
            let lam = parse_lambda(lambda)?;
            let code = cf.build()?;
            let ch = ChannelSpec::new(*p_base, *p_roof, *seed)?;
            let rep = match (code.as_linear(), exhaustive) {
                (Some(lin), false) => {
                    let dec = Decoder::for_linear(lin, lam, cap)?;
                    decoding::simulate_channel_with(lin, ch, *trials, threads, |w| dec.decode(w))?
                }
                _ => decoding::simulate_channel(&code, lam, ch, *trials, threads, cap)?,
            };
            if *csv {
                let _ = writeln!(s, "trials,failures,ties,base_errors,roof_errors,word_error_rate,wilson_low,wilson_high");
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{:.6},{:.6},{:.6}",
                    rep.trials,
                    rep.failures,
                    rep.ties,
                    rep.base_errors,
                    rep.roof_errors,
                    rep.word_error_rate,
                    rep.wilson_low,
                    rep.wilson_high
                );
            } else {
                let _ = writeln!(s, "trials = {}", rep.trials);
                let _ = writeln!(s, "failures = {}", rep.failures);
                let _ = writeln!(s, "ties = {}", rep.ties);
                let _ = writeln!(s, "base_errors = {}", rep.base_errors);
                let _ = writeln!(s, "roof_errors = {}", rep.roof_errors);
                let _ = writeln!(s, "word_error_rate = {:.6}", rep.word_error_rate);
                let _ = writeln!(s, "wilson95 = [{:.6}, {:.6}]", rep.wilson_low, rep.wilson_high);
            }
        }
        Command::Gv {
            field,
            lambda,
            n,
            d,
            eps,
            trials,
            seed,
        } => {
            let f = field_of(field)?;
            let e = gv_random_experiment(&f, parse_lambda(lambda)?, *n, parse_rational(d)?, *eps, *trials, *seed, cap)?;
            let _ = writeln!(s, "k = {}", e.k);
            let _ = writeln!(s, "successes = {} of {}", e.successes, e.trials);
            let _ = writeln!(s, "observed_fraction = {:.6}", e.observed_fraction);
            let _ = writeln!(s, "lower_bound = {:.6}", e.proven_lower_bound);
        }
        Command::Density {
            field,
            n,
            k,
            lambda,
            trials,
            seed,
        } => {
            let f = field_of(field)?;
            let r = codes::mrd_density_experiment(&f, *n, *k, parse_lambda(lambda)?, *trials, *seed, cap)?;
            let _ = writeln!(s, "optimal = {} of {}", r.optimal, r.trials);
            let _ = writeln!(s, "fraction = {:.6}", r.fraction);
        }
    }
    out.write_all(s.as_bytes())?;
    Ok(())
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
