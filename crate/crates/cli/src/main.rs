//! `intorder`: generate, recognize, realize and measure interval orders.
//!
//! Every command writes JSON to standard output. Failures are reported as
//! `{"error": code, "detail": message}` with exit code 1 for I/O, parse and
//! usage errors, 2 for domain errors and 3 for failed self-checks.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use intorder::format::{
    from_json, to_json, DimensionDoc, ErrorDoc, InstanceDoc, RealizerDoc, RecognizeDoc,
};
use intorder::instances::{self, FlagPolicy, InstanceName, RandomSpec};
use intorder::{
    classify, exact_dimension_with, is_interval_order, is_unit_interval_order, realizer_multi_length,
    realizer_unit_oc, realizer_zero_one, verify_realizer, DimensionOptions, Error, Poset, Rational, RealizerCheck,
};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "intorder", version, about = "Interval orders, small realizers and exact dimension")]
struct Cli {
    /// Output format; only JSON is implemented.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a poset with its interval representation.
    Gen(GenArgs),
    /// Interval order and unit interval order tests, with a witness.
    Recognize(Input),
    /// Properties of an interval representation.
    Classify(Input),
    /// Build a realizer from an interval representation.
    Realize {
        #[arg(long, value_enum)]
        method: Method,
        #[command(flatten)]
        input: Input,
    },
    /// Exact dimension with a realizer and a lower-bound certificate.
    Dim {
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = intorder::dimension::DEFAULT_MAX_ELEMENTS)]
        max_elements: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Check a realizer against a poset.
    Verify {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        realizer: PathBuf,
    },
    /// Write the named instances as JSON files.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Input file, `-` for standard input.
    #[arg(default_value = "-")]
    input: PathBuf,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Element count (random) or endpoint range (canonical).
    #[arg(long)]
    n: Option<usize>,
    /// Instance name for `--kind named`.
    #[arg(long)]
    name: Option<String>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    lengths: Vec<Rational>,
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<u32>>,
    /// `all_closed`, `oc` or `mixed`.
    #[arg(long, default_value = "all_closed")]
    policy: FlagPolicy,
    #[arg(long, default_value_t = 4)]
    grid: u32,
    #[arg(long)]
    span: Option<u32>,
    #[arg(long, env = "INTORDER_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    stream: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Canonical,
    Random,
    Named,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Method {
    UnitOc,
    ZeroOne,
    MultiLength,
}

enum Failure {
    Io(String),
    Usage(String),
    Domain(Error),
    /// A checked outcome that is not an error of the input, such as an
    /// invalid realizer, already rendered as JSON.
    Rejected(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Domain(err)
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn read_instance(path: &Path) -> Result<InstanceDoc, Failure> {
    Ok(from_json(&read_input(path)?)?)
}

fn gen(args: &GenArgs) -> Result<String, Failure> {
    let doc = match args.kind {
        Kind::Canonical => {
            let n = args.n.ok_or_else(|| Failure::Usage("--kind canonical needs --n".into()))?;
            let (poset, rep) = instances::canonical_interval_order(n);
            InstanceDoc::new(&poset, Some(&rep))
        }
        Kind::Random => {
            let n = args.n.ok_or_else(|| Failure::Usage("--kind random needs --n".into()))?;
            let spec = RandomSpec {
                n,
                lengths: args.lengths.clone(),
                weights: args.weights.clone(),
                policy: args.policy,
                grid: args.grid,
                span: args.span,
            };
            let rep = instances::random_representation_stream(&spec, args.seed, args.stream)?;
            InstanceDoc::new(&intorder::poset_from_representation(&rep), Some(&rep))
        }
        Kind::Named => {
            let name = args.name.as_deref().ok_or_else(|| Failure::Usage("--kind named needs --name".into()))?;
            let inst = instances::named(name)?;
            InstanceDoc::new(&inst.poset, inst.representation.as_ref())
        }
    };
    Ok(to_json(&doc))
}

fn witness(poset: &Poset, pattern: &Poset) -> Option<Vec<String>> {
    poset
        .find_embedding(pattern)
        .map(|m| m.iter().map(|&x| poset.name(x).to_owned()).collect())
}

fn recognize(input: &Input) -> Result<String, Failure> {
    let poset = read_instance(&input.input)?.to_poset()?;
    let interval_order = is_interval_order(&poset);
    let unit_interval_order = is_unit_interval_order(&poset);
    let witness = if !interval_order {
        witness(&poset, &instances::two_plus_two())
    } else if !unit_interval_order {
        witness(&poset, &instances::one_plus_three())
    } else {
        None
    };
    Ok(to_json(&RecognizeDoc { interval_order, unit_interval_order, witness }))
}

fn classify_cmd(input: &Input) -> Result<String, Failure> {
    let (_, rep) = read_instance(&input.input)?.to_represented()?;
    Ok(to_json(&classify(&rep)))
}

fn realize(method: Method, input: &Input) -> Result<String, Failure> {
    let (poset, rep) = read_instance(&input.input)?.to_represented()?;
    let realizer = match method {
        Method::UnitOc => realizer_unit_oc(&poset, &rep),
        Method::ZeroOne => realizer_zero_one(&poset, &rep),
        Method::MultiLength => realizer_multi_length(&poset, &rep),
    }?;
    match verify_realizer(&poset, &realizer) {
        Ok(RealizerCheck::Valid) => Ok(to_json(&RealizerDoc::from_realizer(&poset, &realizer))),
        Ok(RealizerCheck::Uncovered(pair)) => Err(Failure::Domain(Error::SelfCheckFailed(format!(
            "pair ({}, {}) is not reversed",
            poset.name(pair.above),
            poset.name(pair.below)
        )))),
        Err(e) => Err(Failure::Domain(Error::SelfCheckFailed(e.to_string()))),
    }
}

fn dim(limit: Option<usize>, jobs: usize, max_elements: usize, input: &Input) -> Result<String, Failure> {
    let poset = read_instance(&input.input)?.to_poset()?;
    let options = DimensionOptions { limit, max_elements, jobs: jobs.max(1) };
    let result = exact_dimension_with(&poset, &options)?;
    Ok(to_json(&DimensionDoc::new(&poset, &result)))
}

fn verify(poset_path: &Path, realizer_path: &Path) -> Result<String, Failure> {
    let poset = read_instance(poset_path)?.to_poset()?;
    let doc: RealizerDoc = from_json(&read_input(realizer_path)?)?;
    let realizer = doc.to_realizer(&poset)?;
    match verify_realizer(&poset, &realizer)? {
        RealizerCheck::Valid => Ok(to_json(&json!({ "valid": true }))),
        RealizerCheck::Uncovered(pair) => Err(Failure::Rejected(to_json(&json!({
            "valid": false,
            "uncovered": [poset.name(pair.above), poset.name(pair.below)],
        })))),
    }
}

fn fixtures(out: &Path) -> Result<String, Failure> {
    fs::create_dir_all(out).map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
    let mut written = Vec::new();
    for name in InstanceName::ALL {
        let inst = instances::instance(name);
        let path = out.join(format!("{name}.json"));
        let doc = InstanceDoc::new(&inst.poset, inst.representation.as_ref());
        fs::write(&path, to_json(&doc)).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        written.push(path.display().to_string());
    }
    Ok(to_json(&json!({ "written": written })))
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Gen(args) => gen(args),
        Command::Recognize(input) => recognize(input),
        Command::Classify(input) => classify_cmd(input),
        Command::Realize { method, input } => realize(*method, input),
        Command::Dim { limit, jobs, max_elements, input } => dim(*limit, *jobs, *max_elements, input),
        Command::Verify { poset, realizer } => verify(poset, realizer),
        Command::Fixtures { out } => fixtures(out),
    }
}

fn error_body(code: &str, detail: impl Into<String>) -> String {
    to_json(&ErrorDoc { error: code.to_owned(), detail: detail.into() })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            print!("{}", error_body("UsageError", e.to_string().trim_end()));
            return ExitCode::from(1);
        }
    };
    let (body, code) = match run(&cli) {
        Ok(body) => (body, 0),
        Err(Failure::Io(detail)) => (error_body("IoError", detail), 1),
        Err(Failure::Usage(detail)) => (error_body("UsageError", detail), 1),
        Err(Failure::Rejected(body)) => (body, 2),
        Err(Failure::Domain(err)) => {
            let code = match err {
                Error::Parse(_) => 1,
                _ if err.is_internal() => 3,
                _ => 2,
            };
            (to_json(&ErrorDoc::from(&err)), code)
        }
    };
    print!("{body}");
    ExitCode::from(code)
}
