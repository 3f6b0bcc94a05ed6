use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hilbert_chi::euler::{cross_check, evaluate, with_threads, Convention, EvalOptions, Method};
use hilbert_chi::hall_littlewood::{hl_p, jing};
use hilbert_chi::symfunc::{hl_inner, hl_inner_finite};
use hilbert_chi::verify::{self, Case};
use hilbert_chi::{parse_fexpr, Basis, BiSeries, Error, Partition};
use serde_json::{json, Value};

mod output;

const ABOUT: &str = "Exact equivariant Euler characteristics of tautological classes on Hilbert schemes of points in the plane, with Hall-Littlewood tooling.";

const LONG_ABOUT: &str = "\
Exact equivariant Euler characteristics of tautological classes on Hilbert
schemes of points in the plane, with Hall-Littlewood tooling.

Expressions: sums, differences and products of integers and basis atoms
b[parts] with b one of s p h e m P Q, e.g. \"s[2,1] + 2*s[1,1,1]\".

The Hall-Littlewood parameter prints as z in the hl subcommands. In chi it
is bound to z1, so coefficients of f that depend on it become functions of z1.

Exit status: 0 on success, 1 when a verification or agreement check fails,
2 on usage and parse errors.";

#[derive(Parser)]
#[command(name = "hilbert-chi", version, about = ABOUT, long_about = LONG_ABOUT)]
struct Cli {
    /// Worker threads for the evaluators (output does not depend on it)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of chi_n(f(U)) up to z1^d z2^d
    Chi(ChiArgs),
    /// Run an identity check and report each case
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Hall-Littlewood expansions, vertex operators and inner products
    #[command(subcommand)]
    Hl(HlCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Theorem,
    Localization,
    ConstantTerm,
    All,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
pub(crate) enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Row,
    Col,
}

#[derive(Args)]
struct ChiArgs {
    /// The class f, e.g. "s[2]" or "p[1]*p[1] - p[2]"
    #[arg(long)]
    f: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 5)]
    max_deg: usize,
    #[arg(long, value_enum, default_value = "theorem")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    /// Orientation of the fixed-point weights (localization only)
    #[arg(long, value_enum, default_value = "row")]
    convention: ConventionArg,
    /// Lift the complexity guards on n
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// The quadratic psi identity for all |mu|, |nu| <= max-size
    Lemma {
        #[arg(long, default_value_t = 4)]
        max_size: u32,
    },
    /// Orthogonality of P in n variables and in infinitely many
    Orthogonality {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_size: u32,
    },
    /// The Hall-Littlewood Cauchy kernel degree by degree
    Cauchy {
        #[arg(long, default_value_t = 4)]
        max_size: u32,
    },
    /// chi_k(O) against the product formula for k = 1..n
    Corollary {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        max_deg: usize,
    },
    /// The k-exponent closed form against its recursion
    Kprop {
        #[arg(long, default_value_t = 5)]
        max_size: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    M,
    P,
}

#[derive(Subcommand)]
enum HlCommand {
    /// P_lambda expanded in a classical basis
    Poly {
        /// Parts separated by commas, e.g. 2,1
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value = "m")]
        basis: BasisArg,
    },
    /// Jing's operator J_k applied to an expression
    Jing {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        apply: String,
    },
    /// Hall-Littlewood inner product, in n variables when --n is given
    Inner {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String, String),
    Compute(Error),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::InvalidPartition(_)
            | Error::InvalidArgument(_)
            | Error::PartitionTooLong { .. }
            | Error::DegreeBoundExceeded { .. }
            | Error::ComplexityGuard { .. } => Failure::Usage(e.code().to_string(), e.to_string()),
            other => Failure::Compute(other),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                eprint!("{e}");
                return ExitCode::from(2);
            }
            let text = e.to_string();
            let summary: Vec<&str> = text
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            eprintln!("error: usage: {}", summary.join(" ").trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    let threads = cli.threads;
    match with_threads(threads, move || run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(code, msg)) => {
            eprintln!("error: {code}: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {}: {e}", e.code());
            ExitCode::from(1)
        }
        Err(Failure::Check) => ExitCode::from(1),
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Chi(args) => chi(args),
        Command::Verify(v) => verify_cmd(v),
        Command::Hl(h) => hl(h),
    }
}

fn chi(args: ChiArgs) -> Result<(), Failure> {
    let expr = parse_fexpr(&args.f)?;
    let f = expr.elaborate()?;
    let opts = EvalOptions {
        convention: match args.convention {
            ConventionArg::Row => Convention::Row,
            ConventionArg::Col => Convention::Col,
        },
        override_guard: args.force,
    };
    let (method_name, series, agreement) = match args.method {
        MethodArg::All => {
            let methods: Vec<Method> = Method::ALL.into_iter().filter(|m| args.force || m.admits(args.n)).collect();
            let report = cross_check(&f, args.n, args.max_deg, &methods, &opts)?;
            for (m, a, b) in &report.non_integral {
                eprintln!("warning: non-integral coefficient at z1^{a} z2^{b} ({})", m.name());
            }
            if let Some(neg) = &report.negative {
                for (m, a, b) in neg {
                    eprintln!("warning: negative coefficient at z1^{a} z2^{b} ({})", m.name());
                }
            }
            for mm in &report.mismatches {
                eprintln!(
                    "warning: {} and {} differ at z1^{} z2^{}: {} vs {}",
                    mm.left.name(),
                    mm.right.name(),
                    mm.a,
                    mm.b,
                    mm.left_value,
                    mm.right_value
                );
            }
            let series = report.results[0].series.clone();
            ("all", series, Some(report.agreement()))
        }
        single => {
            let m = match single {
                MethodArg::Theorem => Method::Theorem,
                MethodArg::Localization => Method::Localization,
                MethodArg::ConstantTerm => Method::ConstantTerm,
                MethodArg::All => unreachable!(),
            };
            let r = evaluate(m, &f, args.n, args.max_deg, &opts)?;
            for ((a, b), c) in r.series.iter() {
                if !c.is_integer() {
                    eprintln!("warning: non-integral coefficient at z1^{a} z2^{b}");
                }
            }
            (m.name(), r.series, None)
        }
    };
    let table = ChiTable {
        method: method_name,
        n: args.n,
        f: expr.render(),
        max_deg: args.max_deg,
        convention: opts.convention.name(),
        series: &series,
        agreement,
    };
    print!("{}", output::render_chi(&table, args.format));
    if let (Format::Csv, Some(ok)) = (args.format, agreement) {
        eprintln!("agreement: {}", if ok { "MATCH" } else { "MISMATCH" });
    }
    if agreement == Some(false) {
        return Err(Failure::Check);
    }
    Ok(())
}

pub(crate) struct ChiTable<'a> {
    pub method: &'static str,
    pub n: usize,
    pub f: String,
    pub max_deg: usize,
    pub convention: &'static str,
    pub series: &'a BiSeries,
    pub agreement: Option<bool>,
}

impl ChiTable<'_> {
    pub fn to_json(&self) -> Value {
        let coefficients: Vec<Value> =
            self.series.table().into_iter().map(|(a, b, v)| json!([a, b, v.to_string()])).collect();
        let mut obj = json!({
            "method": self.method,
            "n": self.n,
            "f": self.f,
            "max_deg": self.max_deg,
            "convention": self.convention,
            "coefficients": coefficients,
        });
        if let Some(a) = self.agreement {
            obj["agreement"] = json!(a);
        }
        obj
    }
}

fn report(suite: &str, cases: Vec<Case>) -> Result<(), Failure> {
    let passed = cases.iter().filter(|c| c.pass).count();
    for c in &cases {
        println!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    println!("{suite}: {passed}/{} passed", cases.len());
    if passed == cases.len() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn verify_cmd(v: VerifyCommand) -> Result<(), Failure> {
    match v {
        VerifyCommand::Lemma { max_size } => report("lemma", verify::lemma_cases(max_size)?),
        VerifyCommand::Orthogonality { n, max_size } => {
            if n == 0 {
                return Err(Error::InvalidArgument("n must be at least 1".into()).into());
            }
            let mut cases = verify::orthogonality_finite_cases(n, max_size)?;
            cases.extend(verify::orthogonality_cases(max_size)?);
            report("orthogonality", cases)
        }
        VerifyCommand::Cauchy { max_size } => report("cauchy", verify::cauchy_cases(max_size)?),
        VerifyCommand::Corollary { n, max_deg } => {
            report("corollary", verify::corollary_cases(n, max_deg, &EvalOptions::default())?)
        }
        VerifyCommand::Kprop { max_size } => report("kprop", verify::kprop_cases(max_size)),
    }
}

fn parse_parts(text: &str) -> Result<Partition, Error> {
    let text = text.trim().trim_start_matches('[').trim_end_matches(']');
    if text.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let parts = text
        .split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|_| Error::InvalidPartition(format!("not a part: '{}'", s.trim()))))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts)
}

fn hl(h: HlCommand) -> Result<(), Failure> {
    let line = match h {
        HlCommand::Poly { lambda, basis } => {
            let lambda = parse_parts(&lambda)?;
            let p = hl_p(&lambda)?;
            let b = match basis {
                BasisArg::M => Basis::Monomial,
                BasisArg::P => Basis::Power,
            };
            p.convert(b)?.render("z")
        }
        HlCommand::Jing { k, apply } => {
            let f = parse_fexpr(&apply)?.elaborate()?;
            jing(k, &f)?.render("z")
        }
        HlCommand::Inner { f, g, n } => {
            let f = parse_fexpr(&f)?.elaborate()?;
            let g = parse_fexpr(&g)?.elaborate()?;
            match n {
                Some(n) => hl_inner_finite(&f, &g, n)?.render("z"),
                None => hl_inner(&f, &g)?.render("z"),
            }
        }
    };
    println!("{line}");
    Ok(())
}
