use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superchord::diagrams::{ChordDiagram, DiagramSum, Kind};
use superchord::harness::{fixtures, verify_suite, Status, SuiteParams, VerifyReport, SUITES};
use superchord::kontsevich::{lg_invariant, parse_word, rt_invariant, wz_eval, z_eval, RibbonData, TangleWord, WzValue};
use superchord::liesuper::{build_gl, casimir_tensor, defining, links_gould_tensor, v_alpha, v_alpha_at, InvariantTensor, Representation};
use superchord::scalars::{AlphaScalar, HSeries, Rational, Ring};
use superchord::supergraded::Mat;
use superchord::weightsys::{ws_link, ws_tangle11};

#[derive(Parser)]
#[command(name = "superchord", about = "Chord diagram weight systems and tangle invariants over exact arithmetic")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RepName {
    Defining,
    #[value(name = "v_alpha", alias = "v-alpha")]
    VAlpha,
}

#[derive(clap::Args)]
struct Coloring {
    /// Algebra as glM_N, e.g. gl2_1.
    #[arg(long, default_value = "gl2_1")]
    algebra: String,
    #[arg(long, value_enum, default_value_t = RepName::Defining)]
    rep: RepName,
    /// Specializes α to a rational value for v_alpha.
    #[arg(long)]
    alpha: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Weight system of a diagram or diagram sum (.cd).
    Ws {
        #[command(flatten)]
        coloring: Coloring,
        #[arg(long)]
        diagram: PathBuf,
    },
    /// Truncated Kontsevich value of a word (.tw).
    Z {
        #[arg(long)]
        word: PathBuf,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// W∘Z of a word evaluated on the representation side.
    Wz {
        #[command(flatten)]
        coloring: Coloring,
        #[arg(long)]
        word: PathBuf,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// Links–Gould series of a knot word.
    Lg {
        #[arg(long)]
        word: PathBuf,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// Evaluation of a closed word with ribbon data (.ribbon).
    Rt {
        #[arg(long)]
        word: PathBuf,
        #[arg(long)]
        ribbon: PathBuf,
    },
    /// Runs a verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Writes the witness of each failing check to this directory.
        #[arg(long)]
        replay_dir: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// File contents, or a bundled fixture when no such file exists.
fn read_or_bundled(path: &Path, bundled: &[(&str, &'static str)]) -> Result<String> {
    if !path.exists() {
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default();
        if let Some((_, text)) = bundled.iter().find(|(name, _)| *name == stem) {
            return Ok(text.to_string());
        }
    }
    read(path)
}

fn read_word(path: &Path) -> Result<TangleWord> {
    parse_word(&read_or_bundled(path, fixtures::WORDS)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_json(path: &Path) -> Result<Value> {
    serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_ribbon(path: &Path) -> Result<RibbonData<Rational>> {
    let v: Value = serde_json::from_str(&read_or_bundled(path, fixtures::RIBBONS)?).with_context(|| format!("parsing {}", path.display()))?;
    Ok(RibbonData::from_json(&v)?)
}

fn parse_algebra(name: &str) -> Result<(usize, usize)> {
    let rest = name.strip_prefix("gl").context("algebra must look like glM_N")?;
    let (m, n) = rest.split_once('_').context("algebra must look like glM_N")?;
    Ok((m.parse()?, n.parse()?))
}

fn series_text<R: Ring>(s: &HSeries<R>) -> String {
    s.coeffs().iter().enumerate().map(|(k, c)| format!("h^{k}  {c}\n")).collect()
}

fn mat_json<R: Ring>(m: &Mat<R>) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.triplets().map(|(i, j, v)| json!([i, j, v.to_json()])).collect::<Vec<_>>(),
    })
}

struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn plain(json: Value, text: String) -> Self {
        Output { json, text, ok: true }
    }

    fn series<R: Ring>(s: &HSeries<R>) -> Self {
        Output::plain(s.to_json(), series_text(s))
    }

    fn scalar<R: Ring>(x: &R) -> Self {
        Output::plain(x.to_json(), format!("{x}\n"))
    }
}

fn wz_output<R: Ring>(v: WzValue<R>) -> Output {
    if let Some(s) = v.scalar_series() {
        return Output::series(&s);
    }
    let WzValue::Operator(ms) = v else { unreachable!() };
    let text = ms.iter().enumerate().map(|(k, m)| format!("h^{k}\n{m:?}\n")).collect();
    Output::plain(Value::Array(ms.iter().map(mat_json).collect()), text)
}

fn ws_sum<R: Ring>(t: &InvariantTensor<R>, v: &Representation<R>, s: &DiagramSum<Rational>) -> Result<R> {
    let mut acc = R::zero();
    for (d, c) in s.iter() {
        let w = if d.kinds() == [Kind::Interval] { ws_tangle11(t, v, d)? } else { ws_link(t, v, d)? };
        acc.add_assign(&w.mul(&R::from_rational(c)));
    }
    Ok(acc)
}

fn read_diagrams(path: &Path) -> Result<DiagramSum<Rational>> {
    let v = read_json(path)?;
    if v.is_array() {
        return Ok(DiagramSum::from_json(&v)?);
    }
    Ok(DiagramSum::single(ChordDiagram::from_json(&v)?, Rational::one()))
}

fn with_coloring<T>(
    c: &Coloring,
    rational: impl FnOnce(&InvariantTensor<Rational>, &Representation<Rational>) -> Result<T>,
    symbolic: impl FnOnce(&InvariantTensor<AlphaScalar>, &Representation<AlphaScalar>) -> Result<T>,
) -> Result<T> {
    let (m, n) = parse_algebra(&c.algebra)?;
    let g = build_gl(m, n)?;
    match (c.rep, &c.alpha) {
        (RepName::Defining, None) => rational(&casimir_tensor(&g)?, &defining(&g)),
        (RepName::Defining, Some(_)) => bail!("--alpha only applies to v_alpha"),
        (RepName::VAlpha, None) => symbolic(&links_gould_tensor(&g)?, &v_alpha(&g)?),
        (RepName::VAlpha, Some(a)) => {
            let al: Rational = a.parse()?;
            let t = links_gould_tensor(&g)?;
            let t = t.map(|x| x.eval(&al).expect("α is not a pole of the tensor"));
            rational(&t, &v_alpha_at(&g, &al)?)
        }
    }
}

fn write_replays(dir: &Path, r: &VerifyReport) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for c in r.checks.iter().filter(|c| c.status == Status::Fail) {
        let name = format!("{}-{}.json", r.suite, c.id.replace('/', "_"));
        let body = json!({"suite": r.suite, "params": r.params, "check": c.id, "witness": c.witness});
        fs::write(dir.join(&name), serde_json::to_string_pretty(&body)?).with_context(|| format!("writing {name}"))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Output> {
    Ok(match cli.cmd {
        Cmd::Ws { coloring, diagram } => {
            let s = read_diagrams(&diagram)?;
            with_coloring(
                &coloring,
                |t, v| Ok(Output::scalar(&ws_sum(t, v, &s)?)),
                |t, v| Ok(Output::scalar(&ws_sum(t, v, &s)?)),
            )?
        }
        Cmd::Z { word, order } => {
            let z = z_eval(&read_word(&word)?, order)?;
            let text = z.sum().iter().map(|(d, c)| format!("h^{}  {c}  {d:?}\n", d.degree())).collect();
            Output::plain(z.to_json(), text)
        }
        Cmd::Wz { coloring, word, order } => {
            let w = read_word(&word)?;
            with_coloring(
                &coloring,
                |t, v| Ok(wz_output(wz_eval(&w, t, v, order)?)),
                |t, v| Ok(wz_output(wz_eval(&w, t, v, order)?)),
            )?
        }
        Cmd::Lg { word, order } => Output::series(&lg_invariant(&read_word(&word)?, order)?),
        Cmd::Rt { word, ribbon } => {
            let data = read_ribbon(&ribbon)?;
            Output::scalar(&rt_invariant(&read_word(&word)?, &data)?)
        }
        Cmd::Verify { suite, degree, order, seed, samples, replay_dir } => {
            if !SUITES.contains(&suite.as_str()) {
                bail!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "));
            }
            let r = verify_suite(&suite, &SuiteParams { degree, order, seed, samples })?;
            if let Some(dir) = replay_dir {
                write_replays(&dir, &r)?;
            }
            Output { json: r.to_json(), text: r.to_string(), ok: r.passed() }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
                Format::Text => print!("{}", out.text),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
