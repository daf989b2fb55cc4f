use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use shuffly::exactalg::{ExactAlgError, Poly};
use shuffly::io::{self, IoError};
use shuffly::root_data::{mode_multisets, DynkinDiagram, RootDegreeVector};
use shuffly::shuffle::{
    rank1_independence, star, star_naive, verify_positive_relations, Flavor, PbwChoice, PsiEvaluator,
    RelationReport, ShuffleElement, ShuffleError,
};
use shuffly::shuffle_trig::verify_quantum_relations;
use shuffly::specialization::{decompose_good, is_good, is_integral, phi, PbwContext, SpecializationError};

#[derive(Parser)]
#[command(name = "shuffly", version, about = "Exact computations in type-A shuffle superalgebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Case {
    Rational,
    Trig,
}

impl From<Case> for Flavor {
    fn from(c: Case) -> Flavor {
        match c {
            Case::Rational => Flavor::Rational,
            Case::Trig => Flavor::Trig,
        }
    }
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Choice {
    #[default]
    ModeFirst,
    ModeLast,
}

impl From<Choice> for PbwChoice {
    fn from(c: Choice) -> PbwChoice {
        match c {
            Choice::ModeFirst => PbwChoice::ModeFirst,
            Choice::ModeLast => PbwChoice::ModeLast,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check that the defining relations map to zero.
    Verify {
        #[arg(long, value_enum)]
        case: Case,
        #[arg(long)]
        parities: String,
        /// Modes range over 0..=N (rational) or -N..=N (trig).
        #[arg(long, default_value_t = 2)]
        max_mode: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock timing (makes the report non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Shuffle product of two elements.
    Shuffle {
        left: PathBuf,
        right: PathBuf,
        /// Use the direct symmetrization instead of the coset kernel.
        #[arg(long)]
        naive: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Specialization φ_d of an element.
    Specialize {
        element: PathBuf,
        /// Degree vector such as `a1..2:1,a1..1:1`.
        #[arg(long)]
        d: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that every specialization carries the required power of h.
    Isgood {
        element: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check divisibility of the numerator by h^(k_1+...+k_{n-1}).
    Isintegral {
        element: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand a good element in images of ordered PBW monomials.
    Decompose {
        element: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        choice: Choice,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank of single-color products x^{r_1} * ... * x^{r_k}.
    Independence {
        /// Two-letter parity string.
        #[arg(long)]
        parities: String,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 4)]
        max_mode: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Image of a word in the generators or of an ordered PBW monomial.
    Psi {
        #[arg(long)]
        parities: String,
        #[arg(long, value_enum, default_value = "rational")]
        case: Case,
        /// Letters `color:mode`, comma separated, e.g. `1:0,2:1`.
        #[arg(long, conflicts_with = "pbw", required_unless_present = "pbw")]
        word: Option<String>,
        /// JSON list of `[root, mode]` pairs, e.g. `[["a1..2",0],["a1..1",1]]`.
        #[arg(long)]
        pbw: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        choice: Choice,
        /// Coefficient in Q[h] (or Q[v, v^-1]) multiplying the result.
        #[arg(long)]
        scale: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Bug(String),
    NotInSpan(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Bug(_) => 3,
            Failure::NotInSpan(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Bug(m) | Failure::NotInSpan(m) => m,
        }
    }
}

impl From<ShuffleError> for Failure {
    fn from(e: ShuffleError) -> Self {
        match e {
            ShuffleError::Exact(ExactAlgError::NotDivisible { .. }) => Failure::Bug(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Shuffle(s) => s.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<SpecializationError> for Failure {
    fn from(e: SpecializationError) -> Self {
        match e {
            SpecializationError::NotInSpan { .. } => Failure::NotInSpan(e.to_string()),
            SpecializationError::Shuffle(s) => s.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// What a command produced: a JSON document and whether it records failures.
struct Outcome {
    doc: Value,
    ok: bool,
}

fn diagram(s: &str) -> Result<DynkinDiagram, Failure> {
    s.parse().map_err(|e| Failure::Usage(format!("{e}")))
}

fn read_element(path: &Path) -> Result<ShuffleElement, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(io::element_from_str(&text)?)
}

fn element_doc(f: &ShuffleElement) -> Value {
    serde_json::to_value(io::element_to_json(f)).expect("element JSON serializes")
}

fn relation_doc(command: Value, rep: &RelationReport) -> Value {
    let checks: Vec<Value> = rep
        .checks
        .iter()
        .map(|c| json!({"name": c.family, "instance": c.instance, "pass": c.pass, "witness": c.witness}))
        .collect();
    let failures = rep.failures().count();
    json!({
        "command": command,
        "checks": checks,
        "summary": {"checks": rep.checks.len(), "failures": failures},
    })
}

fn parse_word(s: &str) -> Result<Vec<(usize, i64)>, Failure> {
    s.split(',')
        .map(|l| {
            let (c, r) = l.trim().split_once(':').ok_or_else(|| Failure::Usage(format!("bad letter `{l}`")))?;
            let c = c.trim().parse().map_err(|_| Failure::Usage(format!("bad color in `{l}`")))?;
            let r = r.trim().parse().map_err(|_| Failure::Usage(format!("bad mode in `{l}`")))?;
            Ok((c, r))
        })
        .collect()
}

fn run(cmd: Command) -> Result<(Outcome, Option<PathBuf>), Failure> {
    match cmd {
        Command::Verify { case, parities, max_mode, out, timing } => {
            let d = diagram(&parities)?;
            let start = Instant::now();
            let rep = match case {
                Case::Rational => verify_positive_relations(&d, max_mode)?,
                Case::Trig => verify_quantum_relations(&d, max_mode)?,
            };
            let case_name = match case {
                Case::Rational => "rational",
                Case::Trig => "trig",
            };
            let mut doc = relation_doc(
                json!({"name": "verify", "case": case_name, "parities": d.to_string(), "max_mode": max_mode}),
                &rep,
            );
            if timing {
                doc["timing_ms"] = json!(start.elapsed().as_millis() as u64);
            }
            Ok((Outcome { doc, ok: rep.all_pass() }, out))
        }
        Command::Shuffle { left, right, naive, out } => {
            let f = read_element(&left)?;
            let g = read_element(&right)?;
            let p = if naive { star_naive(&f, &g)? } else { star(&f, &g)? };
            Ok((Outcome { doc: element_doc(&p), ok: true }, out))
        }
        Command::Specialize { element, d, out } => {
            let f = read_element(&element)?;
            let d: RootDegreeVector = d.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
            let s = phi(&f, &d)?;
            Ok((Outcome { doc: io::specialization_to_json(f.diagram(), &s), ok: true }, out))
        }
        Command::Isgood { element, out } => {
            let f = read_element(&element)?;
            let rep = is_good(&f)?;
            let doc = json!({
                "command": {"name": "isgood", "parities": f.diagram().to_string(), "degree": f.degree()},
                "good": rep.good,
                "witness": rep.witness.map(|d| d.to_string()),
            });
            Ok((Outcome { doc, ok: rep.good }, out))
        }
        Command::Isintegral { element, out } => {
            let f = read_element(&element)?;
            if f.flavor() != Flavor::Rational {
                return Err(Failure::Usage("integrality is defined for rational elements only".into()));
            }
            let integral = is_integral(&f);
            let doc = json!({
                "command": {"name": "isintegral", "parities": f.diagram().to_string(), "degree": f.degree()},
                "integral": integral,
                "required_hbar_power": f.total_degree(),
                "hbar_valuation": f.numerator().hbar_valuation(),
            });
            Ok((Outcome { doc, ok: integral }, out))
        }
        Command::Decompose { element, choice, out } => {
            let f = read_element(&element)?;
            let mut ctx = PbwContext::with_choice(f.diagram(), choice.into());
            let dec = decompose_good(&mut ctx, &f)?;
            Ok((Outcome { doc: io::decomposition_to_json(&dec), ok: true }, out))
        }
        Command::Independence { parities, max_len, max_mode, out } => {
            let d = diagram(&parities)?;
            if d.rank() != 1 {
                return Err(Failure::Usage("independence expects a two-letter parity string".into()));
            }
            let lists: Vec<Vec<u32>> = (1..=max_len).flat_map(|k| mode_multisets(k, max_mode, false)).collect();
            let rep = rank1_independence([d.p(1), d.p(2)], &lists)?;
            let odd = d.is_odd(1);
            let repeated_vanish = lists.iter().all(|l| {
                let repeated = l.windows(2).any(|w| w[0] == w[1]);
                rep.zero_products.contains(l) == (odd && repeated)
            });
            let fmt = |ls: &[Vec<u32>]| ls.iter().map(|l| json!(l)).collect::<Vec<_>>();
            let doc = json!({
                "command": {"name": "independence", "parities": d.to_string(), "max_len": max_len, "max_mode": max_mode},
                "rank": rep.rank,
                "tested": rep.tested.len(),
                "full_rank": rep.full_rank,
                "zero_products": fmt(&rep.zero_products),
                "vanishing_matches_parity": repeated_vanish,
            });
            Ok((Outcome { doc, ok: rep.full_rank && repeated_vanish }, out))
        }
        Command::Psi { parities, case, word, pbw, choice, scale, out } => {
            let d = diagram(&parities)?;
            let flavor: Flavor = case.into();
            let mut f = if let Some(w) = word {
                PsiEvaluator::new(&d, flavor).word(&parse_word(&w)?)?
            } else {
                if flavor != Flavor::Rational {
                    return Err(Failure::Usage("PBW monomials are available in the rational case only".into()));
                }
                let text = pbw.expect("clap enforces --word or --pbw");
                let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("--pbw: {e}")))?;
                let h = io::monomial_from_json(&v)?;
                PbwContext::with_choice(&d, choice.into()).psi(&h)?
            };
            if let Some(c) = scale {
                let c: Poly = c.parse().map_err(|e| Failure::Usage(format!("--scale: {e}")))?;
                if c.vars().iter().any(|v| v.is_x()) {
                    return Err(Failure::Usage("--scale must not involve x-variables".into()));
                }
                f = ShuffleElement::new(d.clone(), f.degree().to_vec(), f.numerator() * &c, flavor)?;
            }
            Ok((Outcome { doc: element_doc(&f), ok: true }, out))
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("SHUFFLY_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| Failure::Usage(format!("SHUFFLY_THREADS must be a positive integer, got `{v}`")))?;
        if n == 0 {
            return Err(Failure::Usage("SHUFFLY_THREADS must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|_| run(cli.cmd));
    match result {
        Ok((outcome, out)) => {
            let mut text = serde_json::to_string_pretty(&outcome.doc).expect("report serializes");
            text.push('\n');
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
