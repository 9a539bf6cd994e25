//! `starcore` command line: compute exact generalized inverses, check the
//! catalog statements on user-supplied matrices, generate seeded instance
//! families, and run the verification suite.
//!
//! Exit codes: 0 success / equivalence holds; 1 I/O, parse, usage or
//! dimension errors; 2 hypothesis failed; 3 VIOLATION; 4 no group inverse;
//! 5 instance generation exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::exit;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use starcore::geninv::{self, GenInvError, GenInverse};
use starcore::matrix::Matrix;
use starcore::scalar::GaussianRational;
use starcore::theorems::{
    check_corollary_3_2, check_corollary_3_3, check_corollary_4_4, check_lemma_2_1,
    check_lemma_2_2, check_lemma_2_3, check_lemma_2_4, check_lemma_4_1, check_lemma_4_2,
    check_theorem_3_1, check_theorem_4_3, generate::generate_family, run_suite, Family, GenError,
    Instance, LabError, SeededRng, SuiteConfig, TheoremId, TheoremReport, Verdict,
};

const EXIT_FAILURE: i32 = 1;
const EXIT_HYPOTHESIS: i32 = 2;
const EXIT_VIOLATION: i32 = 3;
const EXIT_NO_GROUP_INVERSE: i32 = 4;
const EXIT_GENERATION: i32 = 5;

#[derive(Parser)]
#[command(
    name = "starcore",
    version,
    about = "Exact generalized inverses over the Gaussian rationals",
    long_about = "Exact generalized inverses (group, Drazin, Moore-Penrose, (1,3), core) for \
                  matrices over the Gaussian rationals, plus seeded verification suites for the \
                  additive and block-matrix core-invertibility statements L2.1-C4.4.\n\
                  All matrix files use JSON: {\"rows\": m, \"cols\": n, \"entries\": [[\"3/4-2/5i\", ...], ...]}."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Group,
    Drazin,
    Mp,
    One3,
    Core,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a generalized inverse and write it with a certificate sidecar
    Inv {
        /// Which inverse to compute
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Input matrix JSON file
        #[arg(long = "in")]
        input: PathBuf,
        /// Output matrix JSON file; the certificate goes to <out>.cert.json
        #[arg(long)]
        out: PathBuf,
    },
    /// Check one catalog statement on supplied matrices and write a report
    ///
    /// Matrix slots per theorem: L2.1/L2.2/L2.3 take --a (the idempotent or
    /// projection p) and --b (the element); L2.4, T3.1, C3.2, C3.3 take
    /// --a, --b; L4.1 takes --a, --c, --d; L4.2 takes --a, --b, --lambda;
    /// T4.3 and C4.4 take --a, --b, --c, --d, --lambda.
    Check {
        /// Theorem id: L2.1, L2.2, L2.3, L2.4, T3.1, C3.2, C3.3, L4.1, L4.2, T4.3, C4.4
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: Option<PathBuf>,
        #[arg(long)]
        c: Option<PathBuf>,
        #[arg(long)]
        d: Option<PathBuf>,
        /// Scalar in the text grammar, e.g. "-1", "1/2", "i"
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Report JSON output path
        #[arg(long)]
        report: PathBuf,
    },
    /// Generate a seeded instance family into a directory
    Gen {
        /// Family: ep, commuting-ep-pair, triangular, block-4x4
        #[arg(long)]
        family: String,
        /// Matrix dimension (block dimension bound for block-4x4)
        #[arg(long)]
        n: usize,
        /// Rank parameter (ep and triangular families only)
        #[arg(long)]
        rank: Option<usize>,
        /// Seed; falls back to STARCORE_SEED, then 0
        #[arg(long)]
        seed: Option<u64>,
        /// Output directory (created if missing)
        #[arg(long)]
        out: PathBuf,
    },
    /// Run seeded verification suites and print per-theorem pass counts
    Suite {
        /// Theorem id or "all"
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Trials per theorem (must be at least 1)
        #[arg(long)]
        trials: usize,
        /// Dimension bound for generated instances
        #[arg(long, default_value_t = 5)]
        size: usize,
        /// Seed; falls back to STARCORE_SEED, then 0
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads; results are identical for any value
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Where to write the reproducer bundle on the first VIOLATION
        #[arg(long, default_value = "reproducer.json")]
        reproducer: PathBuf,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure::new(EXIT_FAILURE, message)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_FAILURE, e.to_string())
    }
}

impl From<LabError> for Failure {
    fn from(e: LabError) -> Self {
        Failure::new(EXIT_FAILURE, e.to_string())
    }
}

impl From<GenError> for Failure {
    fn from(e: GenError) -> Self {
        Failure::new(EXIT_GENERATION, e.to_string())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{e}");
                exit(0);
            }
            _ => {
                eprint!("{e}");
                exit(EXIT_FAILURE);
            }
        },
    };
    match run(cli) {
        Ok(code) => exit(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            exit(f.code);
        }
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Inv { kind, input, out } => cmd_inv(kind, &input, &out),
        Command::Check { theorem, a, b, c, d, lambda, report } => {
            cmd_check(&theorem, &a, b.as_deref(), c.as_deref(), d.as_deref(), lambda.as_deref(), &report)
        }
        Command::Gen { family, n, rank, seed, out } => cmd_gen(&family, n, rank, seed, &out),
        Command::Suite { theorem, trials, size, seed, jobs, reproducer } => {
            cmd_suite(&theorem, trials, size, seed, jobs, &reproducer)
        }
    }
}

fn read_matrix(path: &Path) -> Result<Matrix, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("cannot parse {}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::usage(format!("cannot serialize: {e}")))?;
    text.push('\n');
    fs::write(path, text)
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("STARCORE_SEED") {
        Ok(value) => value
            .parse()
            .map_err(|_| Failure::usage(format!("STARCORE_SEED is not a valid seed: {value:?}"))),
        Err(_) => Ok(0),
    }
}

#[derive(Serialize)]
struct CertificateDoc<'a> {
    kind: String,
    index: usize,
    certificate: &'a [String],
}

#[derive(Serialize)]
struct InvStatus {
    kind: String,
    index: usize,
    out: String,
    certificate: String,
}

fn cmd_inv(kind: KindArg, input: &Path, out: &Path) -> Result<i32, Failure> {
    let a = read_matrix(input)?;
    let computed: Result<GenInverse, GenInvError> = match kind {
        KindArg::Group => geninv::group_inverse(&a),
        KindArg::Drazin => geninv::drazin_inverse(&a),
        KindArg::Mp => Ok(geninv::moore_penrose(&a)),
        KindArg::One3 => Ok(geninv::one_three_inverse(&a)),
        KindArg::Core => geninv::core_inverse(&a),
    };
    let result = match computed {
        Ok(result) => result,
        Err(GenInvError::NoGroupInverse) => {
            return Err(Failure::new(
                EXIT_NO_GROUP_INVERSE,
                GenInvError::NoGroupInverse.to_string(),
            ));
        }
        Err(other) => return Err(Failure::usage(other.to_string())),
    };
    write_json(out, &result.inverse)?;
    let cert_path = PathBuf::from(format!("{}.cert.json", out.display()));
    write_json(
        &cert_path,
        &CertificateDoc {
            kind: result.kind.to_string(),
            index: result.index,
            certificate: &result.certificate,
        },
    )?;
    let status = InvStatus {
        kind: result.kind.to_string(),
        index: result.index,
        out: out.display().to_string(),
        certificate: cert_path.display().to_string(),
    };
    println!("{}", serde_json::to_string(&status).expect("serializable"));
    Ok(0)
}

fn parse_theorem(s: &str) -> Result<TheoremId, Failure> {
    s.parse().map_err(|e: String| Failure::usage(e))
}

fn parse_lambda(s: &str) -> Result<GaussianRational, Failure> {
    s.parse::<GaussianRational>()
        .map_err(|e| Failure::usage(format!("invalid --lambda: {e}")))
}

struct CheckArgs {
    a: Matrix,
    b: Option<Matrix>,
    c: Option<Matrix>,
    d: Option<Matrix>,
    lambda: Option<GaussianRational>,
}

impl CheckArgs {
    fn want(
        &self,
        theorem: TheoremId,
        b: bool,
        c: bool,
        d: bool,
        lambda: bool,
    ) -> Result<(), Failure> {
        let slots = [
            (b, self.b.is_some(), "--b"),
            (c, self.c.is_some(), "--c"),
            (d, self.d.is_some(), "--d"),
            (lambda, self.lambda.is_some(), "--lambda"),
        ];
        for (wanted, present, name) in slots {
            if wanted && !present {
                return Err(Failure::usage(format!("{theorem} requires {name}")));
            }
            if !wanted && present {
                return Err(Failure::usage(format!("{theorem} does not use {name}")));
            }
        }
        Ok(())
    }

    fn b(&self) -> &Matrix {
        self.b.as_ref().expect("validated")
    }

    fn c(&self) -> &Matrix {
        self.c.as_ref().expect("validated")
    }

    fn d(&self) -> &Matrix {
        self.d.as_ref().expect("validated")
    }

    fn lambda(&self) -> &GaussianRational {
        self.lambda.as_ref().expect("validated")
    }
}

#[derive(Serialize)]
struct CheckStatus {
    theorem: String,
    verdict: Verdict,
    report: String,
}

fn cmd_check(
    theorem: &str,
    a: &Path,
    b: Option<&Path>,
    c: Option<&Path>,
    d: Option<&Path>,
    lambda: Option<&str>,
    report_path: &Path,
) -> Result<i32, Failure> {
    let theorem = parse_theorem(theorem)?;
    let args = CheckArgs {
        a: read_matrix(a)?,
        b: b.map(read_matrix).transpose()?,
        c: c.map(read_matrix).transpose()?,
        d: d.map(read_matrix).transpose()?,
        lambda: lambda.map(parse_lambda).transpose()?,
    };
    let report: TheoremReport = match theorem {
        TheoremId::L21 => {
            args.want(theorem, true, false, false, false)?;
            check_lemma_2_1(&args.a, args.b())?
        }
        TheoremId::L22 => {
            args.want(theorem, true, false, false, false)?;
            check_lemma_2_2(&args.a, args.b())?
        }
        TheoremId::L23 => {
            args.want(theorem, true, false, false, false)?;
            check_lemma_2_3(&args.a, args.b())?
        }
        TheoremId::L24 => {
            args.want(theorem, true, false, false, false)?;
            check_lemma_2_4(&args.a, args.b())?
        }
        TheoremId::T31 => {
            args.want(theorem, true, false, false, false)?;
            check_theorem_3_1(&args.a, args.b())?
        }
        TheoremId::C32 => {
            args.want(theorem, true, false, false, false)?;
            check_corollary_3_2(&args.a, args.b())?
        }
        TheoremId::C33 => {
            args.want(theorem, true, false, false, false)?;
            check_corollary_3_3(&args.a, args.b())?
        }
        TheoremId::L41 => {
            args.want(theorem, false, true, true, false)?;
            check_lemma_4_1(&args.a, args.c(), args.d())?
        }
        TheoremId::L42 => {
            args.want(theorem, true, false, false, true)?;
            check_lemma_4_2(&args.a, args.b(), args.lambda())?
        }
        TheoremId::T43 => {
            args.want(theorem, true, true, true, true)?;
            check_theorem_4_3(&args.a, args.b(), args.c(), args.d(), args.lambda())?
        }
        TheoremId::C44 => {
            args.want(theorem, true, true, true, true)?;
            check_corollary_4_4(&args.a, args.b(), args.c(), args.d(), args.lambda())?
        }
    };
    write_json(report_path, &report)?;
    let status = CheckStatus {
        theorem: theorem.to_string(),
        verdict: report.verdict,
        report: report_path.display().to_string(),
    };
    println!("{}", serde_json::to_string(&status).expect("serializable"));
    Ok(match report.verdict {
        Verdict::EquivalenceHolds => 0,
        Verdict::HypothesisFailed => EXIT_HYPOTHESIS,
        Verdict::Violation => EXIT_VIOLATION,
    })
}

#[derive(Serialize)]
struct GenStatus {
    family: String,
    files: Vec<String>,
}

fn cmd_gen(
    family: &str,
    n: usize,
    rank: Option<usize>,
    seed: Option<u64>,
    out_dir: &Path,
) -> Result<i32, Failure> {
    let family: Family = family.parse().map_err(Failure::usage)?;
    if n == 0 {
        return Err(Failure::usage("--n must be at least 1"));
    }
    if let Some(r) = rank {
        if !family.uses_rank() {
            return Err(Failure::usage(format!(
                "--rank is not valid for family {}",
                family.name()
            )));
        }
        if r > n {
            return Err(Failure::usage("--rank must not exceed --n"));
        }
    }
    let seed = resolve_seed(seed)?;
    let mut rng = SeededRng::new(seed);
    let instance = generate_family(family, n, rank, &mut rng)?;
    fs::create_dir_all(out_dir)?;
    let prefix = match rank {
        Some(r) => format!("{}_n{}_r{}_s{}", family.name(), n, r, seed),
        None => format!("{}_n{}_s{}", family.name(), n, seed),
    };
    let mut files = Vec::new();
    let emit = |name: String, matrix: &Matrix, files: &mut Vec<String>| -> Result<(), Failure> {
        let path = out_dir.join(name);
        write_json(&path, matrix)?;
        files.push(path.display().to_string());
        Ok(())
    };
    match &instance {
        Instance::Single { a } => emit(format!("{prefix}.json"), a, &mut files)?,
        Instance::Pair { a, b } => {
            emit(format!("{prefix}_a.json"), a, &mut files)?;
            emit(format!("{prefix}_b.json"), b, &mut files)?;
        }
        Instance::Projected { p, x } => {
            emit(format!("{prefix}_p.json"), p, &mut files)?;
            emit(format!("{prefix}_x.json"), x, &mut files)?;
        }
        Instance::Block { a, b, c, d, lambda } => {
            emit(format!("{prefix}_a.json"), a, &mut files)?;
            emit(format!("{prefix}_b.json"), b, &mut files)?;
            emit(format!("{prefix}_c.json"), c, &mut files)?;
            emit(format!("{prefix}_d.json"), d, &mut files)?;
            let lambda_path = out_dir.join(format!("{prefix}_lambda.txt"));
            fs::write(&lambda_path, format!("{lambda}\n"))?;
            files.push(lambda_path.display().to_string());
        }
        Instance::LowerBlock { .. } | Instance::ScaledPair { .. } => {
            unreachable!("families never produce these shapes")
        }
    }
    let status = GenStatus { family: family.name().to_string(), files };
    println!("{}", serde_json::to_string(&status).expect("serializable"));
    Ok(0)
}

fn cmd_suite(
    theorem: &str,
    trials: usize,
    size: usize,
    seed: Option<u64>,
    jobs: usize,
    reproducer_path: &Path,
) -> Result<i32, Failure> {
    if trials < 1 {
        return Err(Failure::usage("--trials must be at least 1"));
    }
    if size < 1 {
        return Err(Failure::usage("--size must be at least 1"));
    }
    if jobs < 1 {
        return Err(Failure::usage("--jobs must be at least 1"));
    }
    let theorems = if theorem.eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        vec![parse_theorem(theorem)?]
    };
    let seed = resolve_seed(seed)?;
    let cfg = SuiteConfig { theorems, trials, size, seed, jobs };
    let outcome = run_suite(&cfg)?;
    let doc = outcome.report_doc(&cfg);
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    print!("{text}");
    if let Some(reproducer) = &outcome.violation {
        write_json(reproducer_path, reproducer)?;
        eprintln!(
            "error: VIOLATION in {} trial {}; reproducer written to {}",
            reproducer.theorem,
            reproducer.trial,
            reproducer_path.display()
        );
        return Ok(EXIT_VIOLATION);
    }
    Ok(0)
}
