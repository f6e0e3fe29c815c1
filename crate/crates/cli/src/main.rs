use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fourparam::formulas::{brute_phi, brute_phi_restricted, factors_for, AndrewsCheck};
use fourparam::render::{series_text, stats_line};
use fourparam::{
    bijection_f, bijection_f_inverse, bijection_g, bijection_g_inverse, decompose, expand_product,
    verify, BlockError, FormulaId, Partition, RestrictionSpec, Series4, StripRecord,
};

#[derive(Parser)]
#[command(
    name = "fourparam",
    version,
    about = "Four-parameter partition generating functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Brute,
    Theorem1,
    Corollary1,
    #[value(name = "theorem2-paper")]
    Theorem2Paper,
    #[value(name = "theorem2-derived")]
    Theorem2Derived,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    F,
    G,
}

#[derive(Subcommand)]
enum Command {
    /// Print a truncated series.
    Expand {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        spec: Option<RestrictionSpec>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare a product with its brute-force sum.
    Verify {
        #[arg(long)]
        formula: String,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        spec: Option<RestrictionSpec>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Split a partition into row-pair blocks.
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        partition: Partition,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Apply f or g, or their inverses.
    Bijection {
        #[arg(value_enum)]
        which: Which,
        #[arg(long)]
        inverse: bool,
        #[arg(long, allow_hyphen_values = true)]
        partition: Partition,
        #[arg(long, conflicts_with = "spec")]
        k: Option<u32>,
        #[arg(long)]
        spec: Option<RestrictionSpec>,
        /// Strip record for `f --inverse`, as `height:count,…`.
        #[arg(long, conflicts_with = "nu")]
        record: Option<StripRecord>,
        #[arg(long)]
        nu: Option<Partition>,
    },
    /// Print the weight statistics of a partition.
    Stats {
        #[arg(long, allow_hyphen_values = true)]
        partition: Partition,
    },
    /// Check the r, s, q identity three ways.
    Andrews {
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Mismatch(String),
    Rejected(String),
    Usage(String),
}

impl From<BlockError> for Failure {
    fn from(e: BlockError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn print_series(s: &Series4, format: Format) -> String {
    match format {
        Format::Text => series_text(s),
        Format::Json => s.to_json() + "\n",
    }
}

fn need_spec(spec: Option<RestrictionSpec>, what: &str) -> Result<RestrictionSpec, Failure> {
    spec.ok_or_else(|| Failure::Usage(format!("{what} requires --spec")))
}

fn expand(mode: Mode, n: u32, spec: Option<RestrictionSpec>, format: Format) -> Outcome {
    let series = match mode {
        Mode::Brute => match spec {
            Some(s) => brute_phi_restricted(&s, n),
            None => brute_phi(n),
        },
        _ => {
            let id = match mode {
                Mode::Theorem1 | Mode::Corollary1 if spec.is_some() => {
                    return Err(Failure::Usage("this mode does not take --spec".into()))
                }
                Mode::Theorem1 => FormulaId::Theorem1,
                Mode::Corollary1 => FormulaId::Corollary1,
                Mode::Theorem2Paper => FormulaId::Theorem2Paper(need_spec(spec, "theorem2-paper")?),
                _ => FormulaId::Theorem2Derived(need_spec(spec, "theorem2-derived")?),
            };
            let factors = factors_for(&id, n).expect("four-variable identity");
            expand_product(&factors, n)
        }
    };
    Ok(print_series(&series, format))
}

fn run_verify(name: &str, n: u32, spec: Option<RestrictionSpec>, format: Format) -> Outcome {
    let id = FormulaId::from_parts(name, spec).map_err(Failure::Usage)?;
    let report = verify(&id, n);
    let out = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    } + "\n";
    if report.pass {
        Ok(out)
    } else {
        Err(Failure::Mismatch(out))
    }
}

fn run_decompose(p: &Partition, k: u32) -> Outcome {
    match decompose(p, k) {
        Ok(d) => Ok(d.to_string()),
        Err(e @ BlockError::NotInGapClass(_)) => Err(Failure::Rejected(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn strip_record(
    record: Option<StripRecord>,
    nu: Option<Partition>,
) -> Result<StripRecord, Failure> {
    match (record, nu) {
        (Some(r), _) => Ok(r),
        (None, Some(nu)) => Ok(StripRecord::from_nu(&nu)?),
        (None, None) => Ok(StripRecord::empty()),
    }
}

fn run_f(
    p: &Partition,
    inverse: bool,
    k: Option<u32>,
    spec: Option<RestrictionSpec>,
    record: Option<StripRecord>,
    nu: Option<Partition>,
) -> Outcome {
    let k = match &spec {
        Some(s) => s.modulus(),
        None => k.unwrap_or(1),
    };
    if inverse {
        if nu.is_some() && k != 1 {
            return Err(Failure::Usage("--nu is only meaningful with k = 1".into()));
        }
        let rec = strip_record(record, nu)?;
        let lambda = bijection_f_inverse(p, &rec, k)?;
        if let Some(s) = &spec {
            if !s.contains(&lambda) {
                return Err(Failure::Usage(format!("result is not in {s}")));
            }
        }
        return Ok(format!("lambda={lambda}\n"));
    }
    if record.is_some() || nu.is_some() {
        return Err(Failure::Usage("--record and --nu need --inverse".into()));
    }
    if let Some(s) = &spec {
        if !s.contains(p) {
            return Err(Failure::Usage(format!("{p} is not in {s}")));
        }
    }
    let (mu, rec) = bijection_f(p, k)?;
    let mut out = format!("mu={mu}\n{rec}");
    if k == 1 {
        out.push_str(&format!("nu={}\n", rec.to_nu()));
    }
    Ok(out)
}

fn run_g(
    p: &Partition,
    inverse: bool,
    spec: Option<RestrictionSpec>,
    nu: Option<Partition>,
) -> Outcome {
    let spec = need_spec(spec, "bijection g")?;
    if inverse {
        let nu = nu.unwrap_or_else(Partition::empty);
        let lambda = bijection_g_inverse(p, &nu, &spec)?;
        return Ok(format!("lambda={lambda}\n"));
    }
    if nu.is_some() {
        return Err(Failure::Usage("--nu needs --inverse".into()));
    }
    let (mu, nu) = bijection_g(p, &spec)?;
    Ok(format!("mu={mu}\nnu={nu}\n"))
}

fn run_andrews(n: u32, format: Format) -> Outcome {
    let check = AndrewsCheck::run(n);
    let (pm, sm) = (
        check.product_matches_brute(),
        check.specialized_matches_brute(),
    );
    let out = match format {
        Format::Text => format!(
            "degree={n} product_matches_brute={pm} specialized_matches_brute={sm} pass={}\n",
            check.pass()
        ),
        Format::Json => format!(
            "{{\"degree\":{n},\"product_matches_brute\":{pm},\"specialized_matches_brute\":{sm},\"pass\":{}}}\n",
            check.pass()
        ),
    };
    if check.pass() {
        Ok(out)
    } else {
        Err(Failure::Mismatch(out))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Expand {
            mode,
            degree,
            spec,
            format,
        } => expand(mode, degree, spec, format),
        Command::Verify {
            formula,
            degree,
            spec,
            format,
        } => run_verify(&formula, degree, spec, format),
        Command::Decompose { partition, k } => run_decompose(&partition, k),
        Command::Bijection {
            which: Which::F,
            inverse,
            partition,
            k,
            spec,
            record,
            nu,
        } => run_f(&partition, inverse, k, spec, record, nu),
        Command::Bijection {
            which: Which::G,
            inverse,
            partition,
            k,
            spec,
            record,
            nu,
        } => {
            if k.is_some() || record.is_some() {
                return Err(Failure::Usage(
                    "bijection g takes --spec and --nu only".into(),
                ));
            }
            run_g(&partition, inverse, spec, nu)
        }
        Command::Stats { partition } => Ok(stats_line(&partition) + "\n"),
        Command::Andrews { degree, format } => run_andrews(degree, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            eprintln!(
                "{}",
                rendered
                    .lines()
                    .next()
                    .unwrap_or("error: invalid arguments")
            );
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Rejected(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
