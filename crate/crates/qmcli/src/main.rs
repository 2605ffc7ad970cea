//! Command-line interface over the qmat kernel.
//!
//! Exit status contract: 0 success/pass, 1 verification failure,
//! 2 usage or parse error, 3 domain error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use qmcli::expr::{parse_element, ExprError};
use qmat::gradedideal::{Certificate, GradedIdeal};
use qmat::pbwcore::{Element, Presentation};
use qmat::qmatrix::{
    comultiply, counit, oqm_presentation, quantum_minor, quantum_minor_perm, tensor_square,
    transpose_tau, IndexSet, MinorKey,
};
use qmat::strata::{
    beta_map, enumerate_rc, hspec_count, hspec_m2_catalog, kappa_kernel_generators, kappa_map,
    krc_generators, HspecCount, StepPair,
};
use qmat::verify::{run_suite, SuiteId, SuiteOptions, SuiteReport};
use serde_json::json;
use std::process::ExitCode;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "qmcli",
    about = "Exact symbolic computation in quantum matrix algebras",
    version
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Total-degree bound for membership/generation computations
    #[arg(long, global = true, default_value_t = 2)]
    degree_bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SizeArg {
    /// Matrix size n
    #[arg(short = 'n', long = "size", value_name = "N")]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an expression in the quantum matrix algebra
    Nf {
        #[command(flatten)]
        size: SizeArg,
        expr: String,
    },
    /// Quantum minor, e.g. `[1 2|1 3]` (use --oracle for the permutation sum)
    Minor {
        #[command(flatten)]
        size: SizeArg,
        key: String,
        /// Use the independent permutation-sum evaluation
        #[arg(long)]
        oracle: bool,
    },
    /// Comultiplication of an expression
    Delta {
        #[command(flatten)]
        size: SizeArg,
        expr: String,
    },
    /// Transpose automorphism applied to an expression
    Tau {
        #[command(flatten)]
        size: SizeArg,
        expr: String,
    },
    /// Counit of an expression
    Counit {
        #[command(flatten)]
        size: SizeArg,
        expr: String,
    },
    /// Stratum machinery
    #[command(subcommand)]
    Strata(StrataCommand),
    /// Graded ideal membership of an expression
    Member {
        #[command(flatten)]
        size: SizeArg,
        /// File of newline-separated generator expressions
        #[arg(long)]
        gens: String,
        expr: String,
        /// Emit a combination certificate
        #[arg(long)]
        certificate: bool,
    },
    /// Invariant-prime counting and the 2x2 catalog
    #[command(subcommand)]
    Hspec(HspecCommand),
    /// Run a verification suite (S1..S16 or a label), or `all`
    Verify {
        /// Suite id (S1..S16), suite label, or `all`
        suite: String,
        /// Size override (defaults to the suite's bound)
        #[arg(short = 'n', long = "size", value_name = "N")]
        n: Option<usize>,
        /// Seed for the sampled confluence suite
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum StrataCommand {
    /// List all stratum index pairs of length t
    List {
        #[command(flatten)]
        size: SizeArg,
        #[arg(short = 't', long)]
        t: usize,
    },
    /// Print the generating set of a stratum ideal
    Kgens {
        #[command(flatten)]
        size: SizeArg,
        /// Pair in the form `r=(1,3);c=(2,3)`
        #[arg(long)]
        pair: String,
    },
    /// Apply the stratum map to an expression
    Beta {
        #[command(flatten)]
        size: SizeArg,
        #[arg(long)]
        pair: String,
        expr: String,
    },
}

#[derive(Subcommand)]
enum HspecCommand {
    /// The 14-entry catalog for n = 2
    M2,
    /// Count of invariant primes at stratum size t
    Count {
        #[command(flatten)]
        size: SizeArg,
        #[arg(short = 't', long)]
        t: usize,
    },
}

struct Fail {
    message: String,
    exit: u8,
}

impl Fail {
    fn usage(message: impl Into<String>) -> Self {
        Fail {
            message: message.into(),
            exit: 2,
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Fail {
            message: message.into(),
            exit: 3,
        }
    }
}

impl From<qmat::Error> for Fail {
    fn from(e: qmat::Error) -> Self {
        Fail {
            message: format!("{} [{}]", e, e.code()),
            exit: 3,
        }
    }
}

impl From<ExprError> for Fail {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Parse(pe) => Fail::usage(pe.to_string()),
            ExprError::Eval(ee) => Fail::domain(ee.to_string()),
        }
    }
}

fn check_size(n: usize) -> Result<(), Fail> {
    if n == 0 {
        return Err(Fail::usage("size must be at least 1"));
    }
    if n > 6 {
        return Err(Fail::domain("sizes above 6 are not supported"));
    }
    Ok(())
}

fn parse_minor_key(n: usize, text: &str) -> Result<MinorKey, Fail> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Fail::usage("minor key must look like `[1 2|1 3]`"))?;
    let (rows, cols) = inner
        .split_once('|')
        .ok_or_else(|| Fail::usage("minor key must contain `|`"))?;
    let side = |s: &str| -> Result<IndexSet, Fail> {
        let vals: Result<Vec<u32>, _> = s.split_whitespace().map(|v| v.parse::<u32>()).collect();
        let vals = vals.map_err(|_| Fail::usage("minor key indices must be integers"))?;
        if vals.iter().any(|v| *v < 1 || *v as usize > n) {
            return Err(Fail::domain("minor key index out of range"));
        }
        IndexSet::new(vals)
            .map_err(|_| Fail::usage("minor key indices must be strictly increasing"))
    };
    MinorKey::new(side(rows)?, side(cols)?).map_err(Fail::from)
}

fn parse_pair(n: usize, text: &str) -> Result<StepPair, Fail> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (rpart, cpart) = compact
        .split_once(';')
        .ok_or_else(|| Fail::usage("pair must look like `r=(1,3);c=(2,3)`"))?;
    let seq = |s: &str, prefix: &str| -> Result<IndexSet, Fail> {
        let body = s
            .strip_prefix(prefix)
            .and_then(|x| x.strip_prefix('('))
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Fail::usage("pair must look like `r=(1,3);c=(2,3)`"))?;
        let vals: Result<Vec<u32>, _> = if body.is_empty() {
            Ok(Vec::new())
        } else {
            body.split(',').map(|v| v.parse::<u32>()).collect()
        };
        let vals = vals.map_err(|_| Fail::usage("pair entries must be integers"))?;
        if vals.iter().any(|v| *v < 1 || *v as usize > n) {
            return Err(Fail::domain("pair entry out of range"));
        }
        IndexSet::new(vals).map_err(|_| Fail::usage("pair entries must be strictly increasing"))
    };
    StepPair::new(seq(rpart, "r=")?, seq(cpart, "c=")?).map_err(Fail::from)
}

fn print_element(format: Format, pres: &Presentation, x: &Element) {
    match format {
        Format::Text => println!("{}", pres.element_text(x)),
        Format::Json => println!(
            "{}",
            json!({ "element": pres.element_text(x) })
        ),
    }
}

fn certificate_json(pres: &Presentation, cert: &Certificate) -> serde_json::Value {
    json!({
        "denominator": cert.denominator.to_string(),
        "terms": cert.terms.iter().map(|t| json!({
            "generator": t.gen_index,
            "left": pres.monomial_text(&t.left),
            "right": pres.monomial_text(&t.right),
            "coeff": t.coeff.to_string(),
        })).collect::<Vec<_>>(),
    })
}

fn report_text(r: &SuiteReport) -> String {
    let mut out = format!(
        "{} ({}) n={}: {} cases, {} failures, {} ms — {}",
        r.suite,
        r.label,
        r.n,
        r.cases,
        r.failures.len(),
        r.elapsed_ms,
        if r.passed() { "PASS" } else { "FAIL" }
    );
    for f in &r.failures {
        out.push_str(&format!("\n  case: {}\n    lhs: {}\n    rhs: {}", f.case, f.lhs, f.rhs));
    }
    out
}

fn run(cli: Cli) -> Result<u8, Fail> {
    match cli.command {
        Command::Nf { size, expr } => {
            check_size(size.n)?;
            let p = oqm_presentation(size.n);
            let e = parse_element(&p, &expr)?;
            print_element(cli.format, &p, &e);
            Ok(0)
        }
        Command::Minor { size, key, oracle } => {
            check_size(size.n)?;
            let key = parse_minor_key(size.n, &key)?;
            let p = oqm_presentation(size.n);
            let e = if oracle {
                if key.size() > 6 {
                    return Err(Fail::domain("permutation oracle capped at size 6"));
                }
                quantum_minor_perm(size.n, &key)
            } else {
                quantum_minor(size.n, &key)
            };
            print_element(cli.format, &p, &e);
            Ok(0)
        }
        Command::Delta { size, expr } => {
            check_size(size.n)?;
            let p = oqm_presentation(size.n);
            let e = parse_element(&p, &expr)?;
            let d = comultiply(size.n, &e)?;
            print_element(cli.format, &tensor_square(size.n), &d);
            Ok(0)
        }
        Command::Tau { size, expr } => {
            check_size(size.n)?;
            let p = oqm_presentation(size.n);
            let e = parse_element(&p, &expr)?;
            let t = transpose_tau(size.n, &e)?;
            print_element(cli.format, &p, &t);
            Ok(0)
        }
        Command::Counit { size, expr } => {
            check_size(size.n)?;
            let p = oqm_presentation(size.n);
            let e = parse_element(&p, &expr)?;
            let c = counit(size.n, &e);
            match cli.format {
                Format::Text => println!("{}", c),
                Format::Json => println!("{}", json!({ "scalar": c.to_string() })),
            }
            Ok(0)
        }
        Command::Strata(cmd) => run_strata(cli.format, cli.degree_bound, cmd),
        Command::Member {
            size,
            gens,
            expr,
            certificate,
        } => {
            check_size(size.n)?;
            let p = oqm_presentation(size.n);
            let text = std::fs::read_to_string(&gens)
                .map_err(|e| Fail::usage(format!("cannot read {}: {}", gens, e)))?;
            let mut generators = Vec::new();
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                generators.push(parse_element(&p, line)?);
            }
            let ideal = GradedIdeal::new(p.clone(), generators)?;
            let f = parse_element(&p, &expr)?;
            let m = ideal.membership(&f, certificate)?;
            match cli.format {
                Format::Text => {
                    println!("{}", m.member);
                    if let Some(cert) = &m.certificate {
                        println!("{}", certificate_json(&p, cert));
                    }
                }
                Format::Json => {
                    let cert = m
                        .certificate
                        .as_ref()
                        .map(|c| certificate_json(&p, c))
                        .unwrap_or(serde_json::Value::Null);
                    println!(
                        "{}",
                        json!({ "member": m.member, "certificate": cert })
                    );
                }
            }
            Ok(0)
        }
        Command::Hspec(cmd) => run_hspec(cli.format, cli.degree_bound, cmd),
        Command::Verify { suite, n, seed } => {
            let mut opts = SuiteOptions::default();
            if let Some(s) = seed {
                opts.seed = s;
            }
            opts.degree_bound = cli.degree_bound.max(2);
            let reports: Vec<SuiteReport> = if suite.eq_ignore_ascii_case("all") {
                SuiteId::all()
                    .into_iter()
                    .map(|id| {
                        let size = n.map_or(id.default_n(), |v| v.min(id.default_n()));
                        run_suite(id, size, &opts)
                    })
                    .collect()
            } else {
                let id = SuiteId::parse(&suite)?;
                let size = n.unwrap_or(id.default_n());
                check_size(size)?;
                vec![run_suite(id, size, &opts)]
            };
            let all_pass = reports.iter().all(|r| r.passed());
            match cli.format {
                Format::Text => {
                    for r in &reports {
                        println!("{}", report_text(r));
                    }
                }
                Format::Json => {
                    let vals: Vec<serde_json::Value> = reports
                        .iter()
                        .map(|r| serde_json::to_value(r).expect("report serializes"))
                        .collect();
                    if vals.len() == 1 {
                        println!("{}", vals[0]);
                    } else {
                        println!("{}", serde_json::Value::Array(vals));
                    }
                }
            }
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn run_strata(format: Format, _degree_bound: usize, cmd: StrataCommand) -> Result<u8, Fail> {
    match cmd {
        StrataCommand::List { size, t } => {
            check_size(size.n)?;
            if t > size.n {
                return Err(Fail::domain("stratum size exceeds the matrix size"));
            }
            let pairs = enumerate_rc(size.n as u32, t);
            match format {
                Format::Text => {
                    for p in &pairs {
                        println!("{}", p);
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::Value::Array(
                        pairs.iter().map(|p| json!(p.to_string())).collect()
                    )
                ),
            }
            Ok(0)
        }
        StrataCommand::Kgens { size, pair } => {
            check_size(size.n)?;
            let pair = parse_pair(size.n, &pair)?;
            let p = oqm_presentation(size.n);
            let ideal = krc_generators(size.n as u32, &pair);
            let texts: Vec<String> = ideal
                .generators()
                .iter()
                .map(|(g, _)| p.element_text(g))
                .collect();
            match format {
                Format::Text => {
                    for t in &texts {
                        println!("{}", t);
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::Value::Array(texts.iter().map(|t| json!(t)).collect())
                ),
            }
            Ok(0)
        }
        StrataCommand::Beta { size, pair, expr } => {
            check_size(size.n)?;
            let pair = parse_pair(size.n, &pair)?;
            let p = oqm_presentation(size.n);
            let e = parse_element(&p, &expr)?;
            let beta = beta_map(size.n as u32, &pair)?;
            let image = beta.apply(&e);
            print_element(format, &beta.tensor, &image);
            Ok(0)
        }
    }
}

fn run_hspec(format: Format, degree_bound: usize, cmd: HspecCommand) -> Result<u8, Fail> {
    match cmd {
        HspecCommand::M2 => {
            let p = oqm_presentation(2);
            let catalog = hspec_m2_catalog();
            let mut entries = Vec::new();
            for spec in &catalog {
                let generators: Vec<String> = match &spec.known_generators {
                    Some(gens) => gens.iter().map(|g| p.element_text(g)).collect(),
                    None => {
                        let kappa = kappa_map(2, spec)?;
                        kappa_kernel_generators(2, &kappa, degree_bound.max(2))
                            .iter()
                            .map(|g| p.element_text(g))
                            .collect()
                    }
                };
                let fmt_kill = |kills: &[(u32, u32)], family: &str| -> Vec<String> {
                    kills
                        .iter()
                        .map(|(i, j)| format!("{}[{},{}]", family, i, j))
                        .collect()
                };
                entries.push(json!({
                    "pair": spec.pair.to_string(),
                    "qPlus": fmt_kill(&spec.q_plus_kill, "Y"),
                    "qMinus": fmt_kill(&spec.q_minus_kill, "Z"),
                    "generators": generators,
                    "stratum": spec.pair.t(),
                }));
            }
            match format {
                Format::Text => {
                    for e in &entries {
                        println!(
                            "t={} pair {} Q+={} Q-={} generators {}",
                            e["stratum"], e["pair"], e["qPlus"], e["qMinus"], e["generators"]
                        );
                    }
                }
                Format::Json => println!("{}", serde_json::Value::Array(entries)),
            }
            Ok(0)
        }
        HspecCommand::Count { size, t } => {
            check_size(size.n)?;
            if t > size.n {
                return Err(Fail::domain("stratum size exceeds the matrix size"));
            }
            match (hspec_count(size.n as u32, t), format) {
                (HspecCount::Known(k), Format::Text) => println!("{}", k),
                (HspecCount::Unknown, Format::Text) => println!("unknown"),
                (HspecCount::Known(k), Format::Json) => {
                    println!("{}", json!({ "n": size.n, "t": t, "count": k }))
                }
                (HspecCount::Unknown, Format::Json) => {
                    println!("{}", json!({ "n": size.n, "t": t, "count": "unknown" }))
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(fail) => {
            eprintln!("error: {}", fail.message);
            ExitCode::from(fail.exit)
        }
    }
}
