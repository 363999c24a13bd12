use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use malcev::io::{self, AlgebraFile, ReportFile};
use malcev::{splitting, wedderburn, Algebra, Error, Side, SidedIdeal};
use serde_json::json;

mod fuzz;

#[derive(Parser)]
#[command(name = "malcev", version, about = "Wedderburn-Malcev decompositions and one-sided ideal splittings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check associativity; prints a witness triple on failure.
    Validate { algebra: PathBuf },
    /// Radical basis and nilpotency index.
    Radical { algebra: PathBuf },
    /// A complement S of the radical with its certification flags.
    Complement { algebra: PathBuf },
    /// Split a one-sided ideal and write the report.
    Split {
        algebra: PathBuf,
        /// Name of an ideal in the algebra file, or generators as `1,0,0;0,1,0`.
        #[arg(long)]
        ideal: String,
        /// Defaults to the side recorded in the file, or left for generators.
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a report against its algebra; exit 0 iff every check holds.
    Check { algebra: PathBuf, report: PathBuf },
    /// Write generated algebra files.
    Corpus {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the property suites on random instances.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: u64,
        /// Also run the exhaustive oracles over GF(2) and GF(3).
        #[arg(long)]
        tiny_oracles: bool,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.root() {
            Error::Parse { .. }
            | Error::Format(_)
            | Error::ScalarParse { .. }
            | Error::DimensionMismatch { .. }
            | Error::NotPrime(_)
            | Error::NotAssociative { .. }
            | Error::NotAnIdeal(_)
            | Error::InvalidCayleyTable(_)
            | Error::TooLarge(_) => 2,
            Error::UnsupportedCharacteristic { .. } => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CmdResult {
    fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<(AlgebraFile, Algebra), Failure> {
    let text = read(path)?;
    let file = AlgebraFile::parse(&text).map_err(|e| prefix(path, e))?;
    let algebra = file.algebra().map_err(|e| prefix(path, e))?;
    Ok((file, algebra))
}

fn prefix(path: &Path, e: Error) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("{}: {}", path.display(), f.message);
    f
}

fn print_json(value: &serde_json::Value) {
    print!("{}", io::emit_json(value));
}

fn validate(path: &Path) -> CmdResult {
    let text = read(path)?;
    let file = AlgebraFile::parse(&text).map_err(|e| prefix(path, e))?;
    let algebra = file.unvalidated_algebra().map_err(|e| prefix(path, e))?;
    match algebra.validate_associativity() {
        Ok(()) => {
            println!("associative (dim {}, field {})", algebra.dim(), algebra.field());
            Ok(())
        }
        Err(e @ Error::NotAssociative { .. }) => Err(Failure::check(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn radical_cmd(path: &Path) -> CmdResult {
    let (_, algebra) = load(path)?;
    let rad = malcev::radical::radical(&algebra).map_err(Error::at("radical"))?;
    print_json(&json!({
        "dim": algebra.dim(),
        "radical": io::subspace_rows(rad.space()),
        "radical_dim": rad.dim(),
        "nilpotency_index": rad.nilpotency_index,
    }));
    Ok(())
}

fn complement_cmd(path: &Path) -> CmdResult {
    let (_, algebra) = load(path)?;
    let rad = malcev::radical::radical(&algebra).map_err(Error::at("radical"))?;
    let c = wedderburn::complement(&algebra, &rad).map_err(Error::at("complement"))?;
    let checks = c.checks(&algebra, &rad);
    print_json(&json!({
        "radical": io::subspace_rows(rad.space()),
        "s": io::subspace_rows(&c.space),
        "lifted_basis": c.basis.iter().map(|t| io::vector_strings(t.coords())).collect::<Vec<_>>(),
        "checks": {
            "subalgebra_S": checks.subalgebra,
            "trivial_intersection": checks.trivial_intersection,
            "spans_A": checks.spans,
            "semisimple_S": checks.semisimple,
        },
    }));
    if checks.all() {
        Ok(())
    } else {
        Err(Failure::check("complement failed certification"))
    }
}

fn resolve_ideal(file: &AlgebraFile, algebra: &Algebra, spec: &str, side: Option<SideArg>) -> Result<SidedIdeal, Failure> {
    if let Some(entry) = file.ideal_entry(spec) {
        let mut entry = entry.clone();
        if let Some(s) = side {
            entry.side = s.into();
        }
        return Ok(entry.build(algebra)?);
    }
    let gens = io::parse_generator_list(algebra.field(), algebra.dim(), spec)
        .map_err(|e| Failure::usage(format!("--ideal {spec:?} is neither a named ideal nor a generator list: {e}")))?;
    let side = side.map(Side::from).unwrap_or(Side::Left);
    Ok(io::ideal_from_generators(algebra, side, &gens))
}

fn split_cmd(path: &Path, ideal: &str, side: Option<SideArg>, out: Option<&Path>) -> CmdResult {
    let (file, algebra) = load(path)?;
    let ideal = resolve_ideal(&file, &algebra, ideal, side)?;
    let report = splitting::split_ideal(&algebra, &ideal)?;
    let text = ReportFile::from_report(&algebra, &report).emit();
    match out {
        Some(p) => write(p, &text)?,
        None => print!("{text}"),
    }
    let failed = report.failed_checks();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::check(format!("checks failed: {}", failed.join(", "))))
    }
}

fn check_cmd(algebra_path: &Path, report_path: &Path) -> CmdResult {
    let (_, algebra) = load(algebra_path)?;
    let rf = ReportFile::parse(&read(report_path)?).map_err(|e| prefix(report_path, e))?;
    if rf.field != algebra.field() || rf.dim != algebra.dim() {
        return Err(Failure::check("report was written for a different field or dimension"));
    }
    let report = rf.to_report().map_err(|e| prefix(report_path, e))?;
    let mut checks = match SidedIdeal::new(&algebra, report.side, report.ideal.clone()) {
        Ok(ideal) => splitting::verify_split(&algebra, &ideal, &report),
        Err(_) => splitting::CHECK_NAMES.iter().map(|k| (k.to_string(), false)).collect(),
    };
    checks.insert("algebra_id".into(), rf.algebra_id == io::algebra_id(&algebra));
    checks.insert(
        "input_hash".into(),
        rf.input_hash == io::input_hash(&algebra, report.side, &report.ideal),
    );
    for (name, ok) in &checks {
        println!("{name}: {}", if *ok { "pass" } else { "FAIL" });
    }
    let failed = splitting::failed(&checks);
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::check(format!("falsified: {}", failed.join(", "))))
    }
}

fn corpus_cmd(spec_path: &Path, seed: u64, count: u64, out: &Path) -> CmdResult {
    let spec: malcev::corpus::CorpusSpec = serde_json::from_str(&read(spec_path)?)
        .map_err(|e| Failure::usage(format!("{}: line {}, column {}: {e}", spec_path.display(), e.line(), e.column())))?;
    fs::create_dir_all(out).map_err(|e| Failure::usage(format!("{}: {e}", out.display())))?;
    for i in 0..count {
        let kind = spec.kind.reseeded(seed.wrapping_add(i));
        let inst = malcev::corpus::build(&malcev::corpus::CorpusSpec {
            field: spec.field,
            kind: kind.clone(),
        })?;
        let a = &inst.algebra;
        let mut file = AlgebraFile::from_algebra(a);
        let ideal_seed = seed.wrapping_add(i).wrapping_mul(3);
        for (k, side) in [Side::Left, Side::Left, Side::Right].into_iter().enumerate() {
            let ideal = malcev::corpus::random_ideal(a, side, ideal_seed.wrapping_add(k as u64));
            file.ideals.push(io::IdealEntry {
                name: format!("{}{k}", if side == Side::Left { "L" } else { "R" }),
                side,
                generators: io::subspace_rows(ideal.space()),
            });
        }
        let path = out.join(format!("instance-{i:04}.json"));
        write(&path, &file.emit())?;
        println!("{} {} dim {}", path.display(), kind.describe(), a.dim());
    }
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Validate { algebra } => validate(&algebra),
        Command::Radical { algebra } => radical_cmd(&algebra),
        Command::Complement { algebra } => complement_cmd(&algebra),
        Command::Split {
            algebra,
            ideal,
            side,
            out,
        } => split_cmd(&algebra, &ideal, side, out.as_deref()),
        Command::Check { algebra, report } => check_cmd(&algebra, &report),
        Command::Corpus {
            spec,
            seed,
            count,
            out,
        } => corpus_cmd(&spec, seed, count, &out),
        Command::Fuzz {
            seed,
            count,
            tiny_oracles,
        } => fuzz::run(seed, count, tiny_oracles).map_err(|m| Failure { code: 1, message: m }),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
