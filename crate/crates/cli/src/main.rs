//! `symjet` command-line interface.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use symjet_core::hyperstress::{
    boundary_power_flux, boundary_power_flux_midpoint, total_power, total_power_midpoint,
};
use symjet_core::io::{self, StressValue, TensorValue};
use symjet_core::jet::jet_of;
use symjet_core::scalar::{self, Scalar};
use symjet_core::symtensor::{compress, dense_pair, include, pair, symmetrize_dense};
use symjet_core::verify::{dims_table, run_suite, SuiteParams, SUITES};
use symjet_core::{BoxRegion, Point};

#[derive(Parser)]
#[command(name = "symjet", version, about = "Exact symmetric tensors, jets and hyper-stresses")]
struct Cli {
    /// Print scalar results as floats with 17 significant digits
    #[arg(long, global = true)]
    float: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Table of symmetric and dense dimensions per degree
    Dims {
        #[arg(long)]
        n: usize,
        /// Highest degree listed
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Symmetrize a dense tensor file and write it in compressed storage
    Symmetrize {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the k-jet of a polynomial field at a point
    Jet {
        field: PathBuf,
        /// Point as comma-separated rationals, e.g. "0,1/2"
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Total power of a variational stress field over a box
    Power {
        stress: PathBuf,
        field: PathBuf,
        #[command(flatten)]
        region: RegionArgs,
    },
    /// Boundary power flux of a traction stress field over a box
    Flux {
        stress: PathBuf,
        field: PathBuf,
        #[command(flatten)]
        region: RegionArgs,
        /// Expected stress order (checked against the file)
        #[arg(long)]
        k: Option<usize>,
    },
    /// Pair a covariant tensor file with a contravariant one
    Pair { covector: PathBuf, tensor: PathBuf },
    /// Run an identity suite
    Verify {
        /// One of dims, epsilon, projection, duality, adjoint, jets, cauchy, contraction, all
        suite: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        l: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Args)]
struct RegionArgs {
    /// Lower corner (defaults to the origin)
    #[arg(long, allow_hyphen_values = true)]
    lower: Option<String>,
    /// Upper corner (defaults to all ones)
    #[arg(long, allow_hyphen_values = true)]
    upper: Option<String>,
    /// Also report the midpoint-rule value with this many cells per axis
    #[arg(long)]
    subdiv: Option<usize>,
}

impl RegionArgs {
    fn region(&self, n: usize) -> Result<BoxRegion> {
        let parse = |s: &Option<String>, default: i64| -> Result<Vec<Scalar>> {
            match s {
                Some(s) => Ok(scalar::parse_list(s)?),
                None => Ok(vec![scalar::int(default); n]),
            }
        };
        let lower = parse(&self.lower, 0)?;
        let upper = parse(&self.upper, 1)?;
        if lower.len() != n || upper.len() != n {
            bail!("box corners must have {n} coordinates");
        }
        Ok(BoxRegion::new(lower, upper, self.subdiv.unwrap_or(1))?)
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn show(x: &Scalar, float: bool) -> String {
    if float {
        scalar::format_float(scalar::to_f64(x))
    } else {
        scalar::format(x)
    }
}

/// Returns `Ok(false)` when a verification suite fails.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Dims { n, k } => {
            if n == 0 {
                bail!("--n must be at least 1");
            }
            println!("l\tsymmetric\tdense\tmultiplicity_sum\tcheck");
            let mut ok = true;
            for (l, sym, dense, total) in dims_table(n, k) {
                let pass = total == dense;
                ok &= pass;
                println!("{l}\t{sym}\t{dense}\t{total}\t{}", if pass { "ok" } else { "FAIL" });
            }
            Ok(ok)
        }
        Command::Symmetrize { input, out } => {
            let TensorValue::Dense(t) = io::parse_tensor(&read(&input)?)? else {
                bail!("symmetrize expects dense storage");
            };
            let s = compress(&symmetrize_dense(&t)?)?;
            emit(&io::write_tensor(&TensorValue::Symmetric(s)), out.as_deref())?;
            Ok(true)
        }
        Command::Jet { field, x, k, out } => {
            let w = io::parse_field(&read(&field)?)?;
            let x = Point::new(scalar::parse_list(&x)?);
            let jet = jet_of(&w, &x, k)?;
            emit(&io::write_jet(&jet), out.as_deref())?;
            Ok(true)
        }
        Command::Power { stress, field, region } => {
            let StressValue::Variational(s) = io::parse_stress(&read(&stress)?)? else {
                bail!("power expects a variational stress file");
            };
            let w = io::parse_field(&read(&field)?)?;
            let r = region.region(s.n())?;
            println!("power {}", show(&total_power(&s, &w, &r)?, cli.float));
            if region.subdiv.is_some() {
                println!("midpoint {}", scalar::format_float(total_power_midpoint(&s, &w, &r)?));
            }
            Ok(true)
        }
        Command::Flux { stress, field, region, k } => {
            let StressValue::Traction(s) = io::parse_stress(&read(&stress)?)? else {
                bail!("flux expects a traction stress file");
            };
            if let Some(k) = k {
                if k != s.order() {
                    bail!("--k {k} does not match stress order {}", s.order());
                }
            }
            let w = io::parse_field(&read(&field)?)?;
            let r = region.region(s.n())?;
            println!("flux {}", show(&boundary_power_flux(&s, &w, &r)?, cli.float));
            if region.subdiv.is_some() {
                println!("midpoint {}", scalar::format_float(boundary_power_flux_midpoint(&s, &w, &r)?));
            }
            Ok(true)
        }
        Command::Pair { covector, tensor } => {
            let a = io::parse_tensor(&read(&covector)?)?;
            let b = io::parse_tensor(&read(&tensor)?)?;
            let value = match (&a, &b) {
                (TensorValue::Symmetric(x), TensorValue::Symmetric(y)) => pair(x, y)?,
                _ => {
                    let dense = |t: &TensorValue| match t {
                        TensorValue::Dense(d) => d.clone(),
                        TensorValue::Symmetric(s) => include(s),
                    };
                    dense_pair(&dense(&a), &dense(&b))?
                }
            };
            println!("pair {}", show(&value, cli.float));
            Ok(true)
        }
        Command::Verify { suite, n, l, m, k, seed, samples } => {
            let params = SuiteParams { n, l, m, k, seed, samples };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut ok = true;
            for name in names {
                let report = run_suite(name, &params)?;
                print!("{report}");
                ok &= report.passed();
            }
            println!("{}", if ok { "verify: pass" } else { "verify: FAIL" });
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
