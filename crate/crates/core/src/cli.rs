//! The `verlinde` command line.
//!
//! Exit codes: 0 on success, 1 on a domain error or a failing `verify`, 2 on
//! a usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::json;

use crate::alcove::{
    enumerate_simples, kac_walton_fuse, parse_partition, plus_simples, principal_restriction,
    AlcoveWeight,
};
use crate::error::Error;
use crate::gl::{
    count_labels, enumerate_labels, gl_class, sl_class, verma_character, GLIrrepLabel, LabelFactor,
    ObjectShape,
};
use crate::oracle::{ext_power_jordan, semisimplify, sym_power_jordan, tensor_jordan, JordanType};
use crate::prime::Prime;
use crate::ring::{cat_dim, fuse_simples};
use crate::verify::{max_p_from_env, run_all, run_suite, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "verlinde",
    version,
    about = "Fusion rules of Ver_p and Ver_p(SL_i), and irreducible labels of GL(X)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Args)]
struct Common {
    /// The characteristic.
    #[arg(long, value_parser = parse_prime)]
    p: Prime,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the result to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fusion product L_i ⊗ L_j.
    Fuse {
        #[command(flatten)]
        common: Common,
        i: usize,
        j: usize,
    },
    /// Categorical dimension of X = ⊕ n_i L_i.
    Dim {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "N1,N2,...")]
        shape: String,
    },
    /// Semisimplification of a Jordan type.
    Ssimp {
        #[command(flatten)]
        common: Common,
        /// Block sizes, comma-separated.
        #[arg(long, value_name = "S1,S2,...")]
        blocks: String,
    },
    /// Jordan type of S^n(M_a).
    Sym {
        #[command(flatten)]
        common: Common,
        a: usize,
        n: usize,
        /// Print the semisimplified class instead.
        #[arg(long)]
        semisimplify: bool,
    },
    /// Jordan type of Λ^n(M_a).
    Ext {
        #[command(flatten)]
        common: Common,
        a: usize,
        n: usize,
        #[arg(long)]
        semisimplify: bool,
    },
    /// Jordan type of M_a ⊗ M_b.
    Jordan {
        #[command(flatten)]
        common: Common,
        a: usize,
        b: usize,
        #[arg(long)]
        semisimplify: bool,
    },
    /// Simple objects of Ver_p(SL_i).
    Simples {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        i: usize,
        /// Only the plus part.
        #[arg(long)]
        plus: bool,
    },
    /// Fusion product in Ver_p(SL_i).
    Slfuse {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        i: usize,
        lambda: String,
        mu: String,
    },
    /// Principal SL_2 restriction of a simple of Ver_p(SL_i).
    Restrict {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        i: usize,
        lambda: String,
    },
    /// Class of gl(X).
    Gl {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "N1,N2,...")]
        shape: String,
    },
    /// Class of sl(X).
    Sl {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "N1,N2,...")]
        shape: String,
    },
    /// Irreducible labels of GL(X) with weight entries in [-bound, bound].
    Labels {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "N1,N2,...")]
        shape: String,
        #[arg(long, default_value_t = 0)]
        bound: u64,
    },
    /// Number of labels produced by `labels`.
    Count {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "N1,N2,...")]
        shape: String,
        #[arg(long, default_value_t = 0)]
        bound: u64,
    },
    /// Truncated Verma character of GL(n L_i).
    Verma {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "N1,N2,...")]
        shape: String,
        /// Dominant GL_n weight, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Plus-part weight for each slot; repeat once per slot.
        #[arg(long = "s", value_name = "PARTS")]
        s: Vec<String>,
        /// Degree bound on the polynomial factor.
        #[arg(long, default_value_t = 0)]
        degree: u64,
    },
    /// Run property sweeps over the primes 3..=p.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        suite: Option<Suite>,
    },
}

fn parse_prime(s: &str) -> Result<Prime, String> {
    let n: u64 = s.parse().map_err(|e| format!("{e}"))?;
    Prime::new(n).map_err(|e| e.to_string())
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, Error>
where
    T::Err: std::fmt::Display,
{
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|e| Error::InvalidLabel(format!("{t:?}: {e}")))
        })
        .collect()
}

fn weight(i: usize, p: Prime, s: &str) -> Result<AlcoveWeight, Error> {
    let parts = parse_partition(s).map_err(Error::InvalidLabel)?;
    AlcoveWeight::new(i, p, parts)
}

fn shape(p: Prime, s: &str) -> Result<ObjectShape, Error> {
    ObjectShape::parse(p, s).map_err(Error::InvalidLabel)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

enum Outcome {
    Done(String),
    Failed(String),
}

fn lines<I: IntoIterator<Item = String>>(it: I) -> String {
    let mut s = String::new();
    for line in it {
        s.push_str(&line);
        s.push('\n');
    }
    s
}

fn jordan_output(t: JordanType, ss: bool, f: Format) -> String {
    match (ss, f) {
        (true, Format::Table) => semisimplify(&t).to_string(),
        (true, Format::Json) => to_json(&semisimplify(&t)),
        (false, Format::Table) => t.to_string(),
        (false, Format::Json) => to_json(&t),
    }
}

fn execute(cmd: Command) -> Result<(Common, Outcome), Error> {
    let done = |s: String| Outcome::Done(if s.ends_with('\n') { s } else { s + "\n" });
    let (common, out) = match cmd {
        Command::Fuse { common, i, j } => {
            let c = fuse_simples(i, j, common.p)?;
            let s = match common.format {
                Format::Table => c.to_string(),
                Format::Json => to_json(&c),
            };
            (common, done(s))
        }
        Command::Dim { common, shape: s } => {
            let x = shape(common.p, &s)?;
            let d = cat_dim(&x.class());
            let s = match common.format {
                Format::Table => d.to_string(),
                Format::Json => format!(r#"{{"p":{},"dim":{}}}"#, common.p, d),
            };
            (common, done(s))
        }
        Command::Ssimp { common, blocks } => {
            let t = JordanType::new(common.p, parse_list(&blocks)?)?;
            let s = jordan_output(t, true, common.format);
            (common, done(s))
        }
        Command::Sym {
            common,
            a,
            n,
            semisimplify,
        } => {
            let t = sym_power_jordan(a, n, common.p)?;
            let s = jordan_output(t, semisimplify, common.format);
            (common, done(s))
        }
        Command::Ext {
            common,
            a,
            n,
            semisimplify,
        } => {
            let t = ext_power_jordan(a, n, common.p)?;
            let s = jordan_output(t, semisimplify, common.format);
            (common, done(s))
        }
        Command::Jordan {
            common,
            a,
            b,
            semisimplify,
        } => {
            let t = tensor_jordan(a, b, common.p)?;
            let s = jordan_output(t, semisimplify, common.format);
            (common, done(s))
        }
        Command::Simples { common, i, plus } => {
            let list = if plus {
                plus_simples(i, common.p)?
            } else {
                enumerate_simples(i, common.p)?
            };
            let s = match common.format {
                Format::Table => lines(list.iter().map(ToString::to_string)),
                Format::Json => to_json(&list),
            };
            (common, done(s))
        }
        Command::Slfuse {
            common,
            i,
            lambda,
            mu,
        } => {
            let f = kac_walton_fuse(&weight(i, common.p, &lambda)?, &weight(i, common.p, &mu)?)?;
            let s = match common.format {
                Format::Table => f.to_string(),
                Format::Json => {
                    let terms: Vec<_> = f
                        .alcove_terms()?
                        .into_iter()
                        .map(|(w, m)| json!({"weight": w, "mult": m}))
                        .collect();
                    to_json(&terms)
                }
            };
            (common, done(s))
        }
        Command::Restrict { common, i, lambda } => {
            let c = principal_restriction(&weight(i, common.p, &lambda)?);
            let s = match common.format {
                Format::Table => c.to_string(),
                Format::Json => to_json(&c),
            };
            (common, done(s))
        }
        Command::Gl { common, shape: s } => {
            let c = gl_class(&shape(common.p, &s)?)?;
            let s = match common.format {
                Format::Table => c.to_string(),
                Format::Json => to_json(&c),
            };
            (common, done(s))
        }
        Command::Sl { common, shape: s } => {
            let c = sl_class(&shape(common.p, &s)?)?;
            let s = match common.format {
                Format::Table => c.to_string(),
                Format::Json => to_json(&c),
            };
            (common, done(s))
        }
        Command::Labels {
            common,
            shape: s,
            bound,
        } => {
            let list = enumerate_labels(&shape(common.p, &s)?, bound)?;
            let s = match common.format {
                Format::Table => lines(list.iter().map(ToString::to_string)),
                Format::Json => to_json(&list),
            };
            (common, done(s))
        }
        Command::Count {
            common,
            shape: s,
            bound,
        } => {
            let n = count_labels(&shape(common.p, &s)?, bound)?;
            let s = match common.format {
                Format::Table => n.to_string(),
                Format::Json => {
                    #[derive(Serialize)]
                    struct CountOut {
                        p: Prime,
                        bound: u64,
                        #[serde(serialize_with = "crate::serde_big::serialize_one")]
                        count: BigUint,
                    }
                    let out = CountOut {
                        p: common.p,
                        bound,
                        count: n,
                    };
                    serde_json::to_string(&out).expect("count serializes")
                }
            };
            (common, done(s))
        }
        Command::Verma {
            common,
            shape: s,
            lambda,
            s: weights,
            degree,
        } => {
            let p = common.p;
            let x = shape(p, &s)?;
            let (i, _) = match crate::gl::underlying_group(&x).as_slice() {
                [] => return Err(Error::EmptyShape),
                [single] => *single,
                _ => return Err(Error::NotHomogeneous),
            };
            let lambda: Vec<i64> = parse_list(&lambda)?;
            let s = if weights.is_empty() {
                vec![AlcoveWeight::zero(i, p)?; lambda.len()]
            } else {
                weights
                    .iter()
                    .map(|w| weight(i, p, w))
                    .collect::<Result<_, _>>()?
            };
            let label = GLIrrepLabel::new(p, vec![LabelFactor { i, lambda, s }])?;
            let v = verma_character(&x, &label, degree)?;
            let s = match common.format {
                Format::Table => v.to_string(),
                Format::Json => to_json(&v),
            };
            (common, done(s))
        }
        Command::Verify { common, suite } => {
            let max = common.p.get().min(max_p_from_env());
            let checks = match suite {
                Some(s) => run_suite(s, max),
                None => run_all(max),
            };
            let mut s = match common.format {
                Format::Table => lines(checks.iter().map(ToString::to_string)),
                Format::Json => to_json(&checks),
            };
            if common.format == Format::Table {
                let failed = checks.iter().filter(|c| !c.passed).count();
                let _ = writeln!(s, "{} checks, {} failed", checks.len(), failed);
            }
            let all_passed = checks.iter().all(|c| c.passed);
            let s = if s.ends_with('\n') { s } else { s + "\n" };
            let out = if all_passed {
                Outcome::Done(s)
            } else {
                Outcome::Failed(s)
            };
            (common, out)
        }
    };
    Ok((common, out))
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (common, outcome) = match execute(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let (text, code) = match outcome {
        Outcome::Done(s) => (s, 0),
        Outcome::Failed(s) => (s, 1),
    };
    match &common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return 1;
            }
        }
    }
    code
}
