mod cache;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nichols::braidgrp::{self, IdentityReport};
use nichols::bpair::BraidedPair;
use nichols::builtins::{self, Params};
use nichols::nichols::{hilbert_with, RelationComputation};
use nichols::quandle::{self, CrossedSet};
use nichols::rank2::{self, Bound};
use nichols::{io, Error};

#[derive(Parser)]
#[command(name = "nichols", version, about = "Nichols algebras of braided vector spaces")]
struct Cli {
    /// Worker threads for elimination.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// Built-in example name, or the expected `kind` of the file given with --file.
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
    /// Scalar parameter for built-ins, e.g. `-1` or `6:(1,1,1)`.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Graded dimensions up to a degree cutoff.
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        /// Exit with status 4 if the cutoff is reached before a zero degree.
        #[arg(long)]
        require_finite: bool,
    },
    /// New relations, either in one degree or counted up to a cutoff.
    Relations {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Rank-two diagonal analysis.
    Rank2 {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        require_finite: bool,
    },
    /// Cohomology of a crossed set with coefficients in Z/m.
    Quandle {
        which: Degree,
        #[arg(long)]
        builtin: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        modulus: u32,
    },
    /// Operator identities over the built-in diagonal suite.
    Verify {
        #[arg(default_value = "adjoint")]
        suite: String,
        /// Largest rank parameter n (identities act on n + 1 strands).
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Lists the built-in examples.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Degree {
    H1,
    H2,
}

enum Failure {
    Parse(String),
    Math(String),
    Cutoff,
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_) => Failure::Parse(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

type Run = std::result::Result<(), Failure>;

fn read(path: &PathBuf) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn scalar_opt(s: &Option<String>) -> std::result::Result<Option<nichols::Cyc>, Failure> {
    s.as_deref().map(|s| io::parse_scalar(s, 1)).transpose().map_err(Failure::from)
}

fn load_pair(input: &Input) -> std::result::Result<BraidedPair, Failure> {
    let params = Params { q: scalar_opt(&input.q)?, alpha: scalar_opt(&input.alpha)? };
    match (&input.builtin, &input.file) {
        (kind, Some(path)) => {
            let text = read(path)?;
            if let Some(kind) = kind {
                match io::pair_file_kind(&text) {
                    Some(k) if k == kind => {}
                    found => {
                        return Err(Failure::Parse(format!(
                            "{} has kind {}, expected {kind}",
                            path.display(),
                            found.unwrap_or("(none)")
                        )))
                    }
                }
            }
            Ok(io::parse_braided_pair(&text)?)
        }
        (Some(name), None) => {
            if !builtins::BRAIDED_PAIRS.iter().any(|(n, _)| n == name) {
                return Err(Failure::Parse(format!("unknown built-in `{name}`")));
            }
            Ok(builtins::braided_pair(name, &params)?)
        }
        (None, None) => Err(Failure::Parse("give --builtin or --file".into())),
    }
}

fn load_crossed_set(builtin: &Option<String>, file: &Option<PathBuf>) -> std::result::Result<CrossedSet, Failure> {
    match (builtin, file) {
        (_, Some(path)) => Ok(io::parse_crossed_set(&read(path)?)?),
        (Some(name), None) => builtins::crossed_set(name).map_err(|e| Failure::Parse(e.to_string())),
        (None, None) => Err(Failure::Parse("give --builtin or --file".into())),
    }
}

fn hilbert(input: &Input, max_degree: usize, require_finite: bool) -> Run {
    let bp = load_pair(input)?;
    let mut gc = cache::load(&bp);
    let before = gc.computed();
    let h = hilbert_with(&mut gc, max_degree);
    if gc.computed() > before {
        cache::store(&gc);
    }
    println!("{h}");
    if require_finite && !h.is_finite() {
        return Err(Failure::Cutoff);
    }
    Ok(())
}

fn relations(input: &Input, degree: Option<usize>, max_degree: usize) -> Run {
    let bp = load_pair(input)?;
    let m = bp.conductor();
    let mut rc = RelationComputation::new(&bp);
    match degree {
        Some(n) => {
            if n < 2 {
                return Err(Failure::Math("relations start in degree 2".into()));
            }
            let r = rc.degree(n, true);
            println!("degree: {n}");
            println!("relations: {}", r.count);
            for v in r.representatives.unwrap_or_default() {
                println!("{}", io::format_tensor(&v, m));
            }
            for w in &r.groebner_words {
                let w: Vec<String> = w.iter().map(|i| format!("x{i}")).collect();
                println!("groebner: {}", w.join("*"));
            }
        }
        None => {
            for (n, count, groebner) in rc.counts(max_degree) {
                println!("degree {n}: relations {count} groebner {groebner}");
            }
        }
    }
    Ok(())
}

fn rank2_cmd(input: &Input, require_finite: bool) -> Run {
    let bp = load_pair(input)?;
    let q = bp.diagonal_matrix().ok_or_else(|| Failure::Math("braiding is not diagonal".into()))?;
    if q.len() != 2 {
        return Err(Failure::Math(format!("rank2 needs a two-dimensional pair, got {}", q.len())));
    }
    let a = rank2::analyze_best(&q)?;
    println!("{a}");
    match rank2::cartan(&q) {
        Ok(c) => println!("cartan: {c}"),
        Err(_) => println!("cartan: none"),
    }
    if require_finite && matches!(a.bound, Bound::Infinite) {
        return Err(Failure::Cutoff);
    }
    Ok(())
}

fn quandle_cmd(which: Degree, builtin: &Option<String>, file: &Option<PathBuf>, modulus: u32) -> Run {
    if modulus < 2 {
        return Err(Failure::Math("modulus must be at least 2".into()));
    }
    let x = load_crossed_set(builtin, file)?;
    match which {
        Degree::H1 => {
            let (h, comps) = quandle::h1(&x, modulus);
            println!("factors: {h}");
            println!("order: {}", h.order());
            println!("components: {}", comps.len());
        }
        Degree::H2 => {
            let h = quandle::h2(&x, modulus);
            println!("factors: {h}");
            println!("order: {}", h.order());
        }
    }
    Ok(())
}

fn verify(suite: &str, max_n: usize) -> Run {
    if suite != "adjoint" {
        return Err(Failure::Parse(format!("unknown suite `{suite}`")));
    }
    if max_n == 0 {
        return Err(Failure::Math("max degree must be positive".into()));
    }
    let pairs = builtins::identity_suite();
    let mut ok = true;
    for n in 1..=max_n {
        for id in braidgrp::adjoint_identities(n) {
            match id.verify(&pairs)? {
                IdentityReport::Holds { checked } => println!("PASS {} ({checked} inputs)", id.name),
                IdentityReport::Fails { pair, input, lhs, rhs } => {
                    ok = false;
                    let m = pairs[pair].conductor();
                    println!("FAIL {} pair {pair} input {input:?}", id.name);
                    println!("  lhs: {}", io::format_tensor(&lhs, m));
                    println!("  rhs: {}", io::format_tensor(&rhs, m));
                }
            }
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn list() -> Run {
    println!("braided pairs:");
    for (n, d) in builtins::BRAIDED_PAIRS {
        println!("  {n:<12} {d}");
    }
    println!("crossed sets:");
    for (n, d) in builtins::CROSSED_SETS {
        println!("  {n:<12} {d}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = nichols::set_threads(t) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.cmd {
        Command::Hilbert { input, max_degree, require_finite } => hilbert(input, *max_degree, *require_finite),
        Command::Relations { input, degree, max_degree } => relations(input, *degree, *max_degree),
        Command::Rank2 { input, require_finite } => rank2_cmd(input, *require_finite),
        Command::Quandle { which, builtin, file, modulus } => quandle_cmd(*which, builtin, file, *modulus),
        Command::Verify { suite, max_degree } => verify(suite, *max_degree),
        Command::List => list(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Math(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Cutoff) => {
            eprintln!("cutoff reached without a verdict");
            ExitCode::from(4)
        }
        Err(Failure::Verify) => ExitCode::from(1),
    }
}
