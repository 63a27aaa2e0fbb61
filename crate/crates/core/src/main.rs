use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use liekit::cartan::{dynkin, recognize, render_dynkin, validate_cartan, CartanMatrix, DiagramFormat};
use liekit::exactlin::{Scalar, Subspace};
use liekit::freelie::{graded_dimension, lift, lyndon_words, parse_element, DEFAULT_TRUNCATION};
use liekit::io::{cartan_from_json, matrix_value, weights_to_json, AlgebraDocument};
use liekit::lie::{CheckMode, LieAlgebra};
use liekit::presets;
use liekit::weights::{root_spaces, WeightError};
use liekit::{Error, Status};

#[derive(Parser)]
#[command(name = "liekit", version, about = "Exact Lie algebra computations")]
struct Cli {
    /// Output file; `-` is standard output.
    #[arg(long, short, global = true, default_value = "-")]
    output: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a classical or Chevalley algebra and print its JSON.
    Construct(ConstructArgs),
    /// Check the Jacobi identity on basis triples.
    Check {
        input: String,
        #[arg(long, conflicts_with = "sampled")]
        full: bool,
        /// Sample triples with this seed.
        #[arg(long, value_name = "SEED")]
        sampled: Option<u64>,
        #[arg(long, default_value_t = 200, requires = "sampled")]
        count: usize,
    },
    /// Dimensions of the derived and lower central series.
    Series {
        input: String,
        #[arg(long)]
        derived: bool,
        #[arg(long)]
        lower: bool,
    },
    /// Solvable radical.
    Radical { input: String },
    /// Killing form and its rank.
    Killing { input: String },
    /// Dimension, centre, and structural verdicts.
    Info { input: String },
    /// Root space decomposition for a Cartan subalgebra spanned by basis vectors.
    Roots {
        input: String,
        #[arg(long, value_delimiter = ',')]
        cartan_basis: Option<Vec<usize>>,
    },
    /// Dynkin diagram of a Cartan matrix.
    Dynkin {
        #[command(flatten)]
        source: CartanSource,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Simple components of a split semisimple algebra.
    Classify {
        input: String,
        #[arg(long, value_delimiter = ',')]
        cartan_basis: Option<Vec<usize>>,
    },
    /// Lyndon basis, Witt dimensions, and evaluation of free Lie elements.
    Free(FreeArgs),
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, conflicts_with_all = ["cartan", "cartan_file"], requires = "n")]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Second block size for so-prime.
    #[arg(long, requires = "family")]
    q: Option<usize>,
    #[command(flatten)]
    source: CartanSource,
}

#[derive(Args)]
struct CartanSource {
    /// Type label such as `E8`, or a letter together with `--rank`.
    #[arg(long, conflicts_with = "cartan_file")]
    cartan: Option<String>,
    #[arg(long, requires = "cartan")]
    rank: Option<usize>,
    #[arg(long)]
    cartan_file: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Dot,
    Json,
}

#[derive(Args)]
struct FreeArgs {
    #[arg(long)]
    alphabet: usize,
    #[arg(long)]
    degree: Option<usize>,
    /// Print graded dimensions instead of the basis.
    #[arg(long, requires = "degree")]
    witt: bool,
    /// Target algebra JSON for evaluation.
    #[arg(long, requires_all = ["assign", "element"])]
    eval: Option<String>,
    /// Image of each letter: basis names or indices, comma separated.
    #[arg(long, value_delimiter = ',', requires = "eval")]
    assign: Option<Vec<String>>,
    #[arg(long, requires = "eval")]
    element: Option<String>,
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    truncation: usize,
}

fn read_input(path: &str) -> Result<String, Error> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text).map_err(|e| Error::Usage(format!("reading standard input: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Error::Usage(format!("reading {path}: {e}")))?;
    }
    Ok(text)
}

fn load(path: &str) -> Result<AlgebraDocument, Error> {
    Ok(AlgebraDocument::from_json(&read_input(path)?)?)
}

fn load_verified(path: &str) -> Result<AlgebraDocument, Error> {
    presets::verified(load(path)?)
}

fn load_cartan(source: &CartanSource) -> Result<Option<CartanMatrix>, Error> {
    match (&source.cartan, &source.cartan_file) {
        (Some(label), _) => Ok(Some(presets::cartan_from_label(label, source.rank)?)),
        (None, Some(path)) => Ok(Some(cartan_from_json(&read_input(path)?)?)),
        (None, None) => Ok(None),
    }
}

fn scalars(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn construct(args: &ConstructArgs) -> Result<String, Error> {
    if let Some(name) = &args.family {
        let n = args.n.ok_or_else(|| Error::Usage("--family needs --n".into()))?;
        return Ok(presets::construct_family(name, n, args.q)?.to_json());
    }
    match load_cartan(&args.source)? {
        Some(a) => Ok(presets::construct_cartan(&a)?.to_json()),
        None => Err(Error::Usage("construct needs --family, --cartan, or --cartan-file".into())),
    }
}

fn triple_names(alg: &LieAlgebra, t: (usize, usize, usize)) -> String {
    let n = alg.basis_names();
    format!("({}, {}, {})", n[t.0], n[t.1], n[t.2])
}

/// The report is written even when the check fails.
fn check(input: &str, full: bool, sampled: Option<u64>, count: usize) -> Result<(String, Status), Error> {
    let alg = load(input)?.algebra;
    let mode = match (full, sampled) {
        (true, _) => CheckMode::Full,
        (false, Some(seed)) => CheckMode::Sampled { seed, count },
        (false, None) => CheckMode::default_for(alg.dim()),
    };
    let report = alg.check_axioms(mode);
    let mode_text = match mode {
        CheckMode::Full => "full".to_string(),
        CheckMode::Sampled { seed, count } => format!("sampled (seed {seed}, {count} draws)"),
    };
    let mut out = format!("dim {}, {mode_text}, {} triples checked\n", alg.dim(), report.triples_checked);
    for f in &report.failures {
        let verdict = |ok: bool| if ok { "holds" } else { "fails" };
        out.push_str(&format!(
            "failing triple {:?} {}: leibniz {}, jacobi {}, lie_lie {}\n",
            f.triple,
            triple_names(&alg, f.triple),
            verdict(f.leibniz),
            verdict(f.jacobi),
            verdict(f.lie_lie),
        ));
    }
    if !report.forms_agree {
        out.push_str("warning: the three axiom forms disagree\n");
    }
    let status = if report.passed() { Status::Ok } else { Status::CheckFailed };
    out.push_str(if report.passed() { "ok" } else { "FAILED" });
    Ok((out, status))
}

fn series(input: &str, derived: bool, lower: bool) -> Result<String, Error> {
    let alg = load_verified(input)?.algebra;
    let both = !derived && !lower;
    let steps = alg.dim() + 1;
    let mut obj = serde_json::Map::new();
    if derived || both {
        obj.insert("derived".into(), json!(alg.derived_series(&alg.top(), steps)?.dims()));
    }
    if lower || both {
        obj.insert("lower_central".into(), json!(alg.lower_central_series(steps)?.dims()));
    }
    Ok(Value::Object(obj).to_string())
}

fn radical(input: &str) -> Result<String, Error> {
    let alg = load_verified(input)?.algebra;
    let r = alg.radical()?;
    let basis: Vec<Vec<String>> = r.space().basis().iter().map(|v| scalars(v)).collect();
    Ok(json!({
        "radical_basis": basis,
        "radical_dim": r.dim(),
        "semisimple": r.is_zero(),
        "solvable": r.dim() == alg.dim(),
    })
    .to_string())
}

fn killing(input: &str) -> Result<String, Error> {
    let alg = load_verified(input)?.algebra;
    let k = alg.killing_form();
    Ok(json!({"matrix": matrix_value(&k), "rank": k.rank()}).to_string())
}

fn info(input: &str) -> Result<String, Error> {
    let alg = load_verified(input)?.algebra;
    Ok(json!({
        "abelian": alg.is_abelian(),
        "center_dim": alg.center().dim(),
        "derived_dim": alg.derived_algebra().dim(),
        "dim": alg.dim(),
        "nilpotent": alg.is_nilpotent().is_some(),
        "semisimple": alg.is_semisimple()?,
        "simple": alg.is_simple()?,
        "solvable": alg.is_solvable().is_some(),
    })
    .to_string())
}

fn roots(input: &str, basis: Option<&[usize]>) -> Result<String, Error> {
    let doc = load_verified(input)?;
    let idx = presets::cartan_basis(&doc, basis)?;
    let alg = &doc.algebra;
    let h = alg.subalgebra(Subspace::coordinate(alg.dim(), &idx)?).map_err(|_| WeightError::NotSubalgebra)?;
    Ok(weights_to_json(&root_spaces(alg, &h)?))
}

fn dynkin_cmd(source: &CartanSource, format: Format) -> Result<String, Error> {
    let a = load_cartan(source)?.ok_or_else(|| Error::Usage("dynkin needs --cartan or --cartan-file".into()))?;
    let report = validate_cartan(&a);
    if let Some(e) = report.shape_errors.first() {
        return Err(Error::Cartan(liekit::cartan::CartanError::Invalid(e.clone())));
    }
    let d = dynkin(&a);
    Ok(match format {
        Format::Ascii => render_dynkin(&d, DiagramFormat::Ascii),
        Format::Dot => render_dynkin(&d, DiagramFormat::Dot).trim_end().to_string(),
        Format::Json => {
            let edges: Vec<Value> = d
                .edges
                .iter()
                .map(|e| json!({"arrow_to": e.arrow_to.map(|k| k + 1), "i": e.i + 1, "j": e.j + 1, "multiplicity": e.multiplicity}))
                .collect();
            let components: Vec<Value> = recognize(&d)
                .iter()
                .map(|r| {
                    let nodes: Vec<usize> = r.nodes().iter().map(|k| k + 1).collect();
                    match r.label() {
                        Some((ty, rank)) => json!({"nodes": nodes, "rank": rank, "type": ty.to_string()}),
                        None => json!({"nodes": nodes, "rank": nodes.len(), "type": Value::Null}),
                    }
                })
                .collect();
            json!({"components": components, "edges": edges, "nodes": d.nodes}).to_string()
        }
    })
}

fn classify_cmd(input: &str, basis: Option<&[usize]>) -> Result<String, Error> {
    let doc = load_verified(input)?;
    let idx = presets::cartan_basis(&doc, basis)?;
    let comps = presets::classify(&doc.algebra, &idx)?;
    let list: Vec<Value> = comps.iter().map(|(t, r)| json!({"rank": r, "type": t.to_string()})).collect();
    Ok(Value::Array(list).to_string())
}

fn resolve_letter(alg: &LieAlgebra, item: &str) -> Result<Vec<Scalar>, Error> {
    let item = item.trim();
    let k = match alg.basis_names().iter().position(|n| n == item) {
        Some(k) => k,
        None => item
            .parse::<usize>()
            .ok()
            .filter(|&k| k < alg.dim())
            .ok_or_else(|| Error::Usage(format!("{item:?} is neither a basis name nor a basis index")))?,
    };
    Ok(alg.basis_vector(k))
}

fn free(args: &FreeArgs) -> Result<String, Error> {
    if args.alphabet == 0 || args.alphabet > liekit::freelie::MAX_ALPHABET {
        return Err(liekit::freelie::FreeLieError::AlphabetSize(args.alphabet).into());
    }
    if let Some(target) = &args.eval {
        let alg = load_verified(target)?.algebra;
        let assign = args.assign.as_deref().unwrap_or_default();
        let images = assign.iter().map(|a| resolve_letter(&alg, a)).collect::<Result<Vec<_>, _>>()?;
        let x = parse_element(args.element.as_deref().unwrap_or_default(), args.alphabet, args.truncation)?;
        let v = lift(&images, &alg, &x)?;
        return Ok(json!({"coordinates": scalars(&v)}).to_string());
    }
    let degree = args.degree.filter(|&d| d >= 1).ok_or_else(|| Error::Usage("--degree must be at least 1".into()))?;
    if args.witt {
        let dims = (1..=degree)
            .map(|d| {
                graded_dimension(args.alphabet, d)
                    .map(|x| x.to_string())
                    .ok_or_else(|| Error::Usage(format!("dimension in degree {d} overflows")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(format!("[{}]", dims.join(",")));
    }
    let lines: Vec<String> = (1..=degree)
        .map(|d| {
            let words: Vec<String> = lyndon_words(args.alphabet, d).iter().map(|w| w.bracketing()).collect();
            format!("{d}: {}", words.join(" "))
        })
        .collect();
    Ok(lines.join("\n"))
}

fn run(cli: &Cli) -> Result<(String, Status), Error> {
    let ok = |s: String| Ok((s, Status::Ok));
    match &cli.command {
        Command::Construct(args) => ok(construct(args)?),
        Command::Check { input, full, sampled, count } => check(input, *full, *sampled, *count),
        Command::Series { input, derived, lower } => ok(series(input, *derived, *lower)?),
        Command::Radical { input } => ok(radical(input)?),
        Command::Killing { input } => ok(killing(input)?),
        Command::Info { input } => ok(info(input)?),
        Command::Roots { input, cartan_basis } => ok(roots(input, cartan_basis.as_deref())?),
        Command::Dynkin { source, format } => ok(dynkin_cmd(source, *format)?),
        Command::Classify { input, cartan_basis } => ok(classify_cmd(input, cartan_basis.as_deref())?),
        Command::Free(args) => ok(free(args)?),
    }
}

fn write_output(path: &str, text: &str) -> io::Result<()> {
    if path == "-" {
        let mut out = io::stdout().lock();
        writeln!(out, "{text}")?;
        out.flush()
    } else {
        fs::write(path, format!("{text}\n"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Status::Usage.code() } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(&cli) {
        Ok((text, status)) => {
            if let Err(e) = write_output(&cli.output, &text) {
                eprintln!("error: writing {}: {e}", cli.output);
                return ExitCode::from(Status::Usage.code() as u8);
            }
            ExitCode::from(status.code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status().code() as u8)
        }
    }
}
