use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use modcoalg::bialgebra::Bialgebra;
use modcoalg::coalgebra::{
    coradical, grouplikes, simple_components, wedge, wedge_filtration, Coalgebra,
};
use modcoalg::engine::{
    brute_force_radical, equivalence_report, membership, radical_compute, verify_radical_axioms,
    AxiomCheck, EquivalenceVerdict, RadicalClass, SearchOptions, Verdict,
};
use modcoalg::hopf_module::{free_hopf_module, tor1, HopfModule};
use modcoalg::linalg::{unit_vector, Subspace};
use modcoalg::module_coalgebra::{direct_sum, orbit_subcoalgebra, ModuleCoalgebra};
use modcoalg::schneider::schneider_pipeline;
use modcoalg::zoo::{self, CayleyTable};
use modcoalg::{Fp, Scalar, Q};

use crate::error::{CliError, DocError};
use crate::interchange::*;
use crate::report;

#[derive(Parser, Debug)]
#[command(
    name = "modcoalg",
    version,
    about = "Exact computations with module coalgebras over bialgebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Interchange document.
    pub file: PathBuf,

    /// Bialgebra or Hopf algebra for a module coalgebra without a nested one.
    #[arg(long)]
    pub hopf: Option<PathBuf>,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, default_value_t = 64)]
    pub trials: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Projective,
    Cocleft,
    Semisimple,
}

impl From<ClassArg> for RadicalClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Projective => RadicalClass::Projective,
            ClassArg::Cocleft => RadicalClass::Cocleft,
            ClassArg::Semisimple => RadicalClass::Semisimple,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construct {
    H4,
    Taft,
    Cyclic,
    S3,
    Comatrix,
    Grouplike,
    H4Regular,
    H4Ktriv,
    H4PlusKtriv,
    Gh4,
    TaftRegular,
    H4OverK,
    SignModule,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a document against the laws of its kind.
    Check(Input),
    /// Coradical and simple components.
    Coradical(Input),
    /// `X ∧ Y`; subspaces are basis indices `0,2`, `coradical`, or a subspace document.
    Wedge {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// `X ⊆ X∧X ⊆ ...`, from `C₀B` (or `C₀`) unless `--from` is given.
    Filtration {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        from: Option<String>,
    },
    Grouplikes(Input),
    /// Decide membership in a radical class.
    Membership {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// The radical for a class.
    Radical {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// `Tor₁ᴮ(M, k)` of a Hopf module (a module coalgebra is read as a Hopf module over itself).
    Tor1(Input),
    /// Necessary conditions for membership in ℰ over the generated family.
    Equivalence(Input),
    /// Grouplike certificates and the projectivity and cocleftness hypotheses.
    Schneider(Input),
    /// Radical by enumerating every subspace (F2, F3, dimension at most 6).
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// Check the radical axioms R1, R2, R3 and maximality.
    Axioms {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// Print a built-in structure as an interchange document.
    Construct {
        #[arg(value_enum)]
        name: Construct,
        /// `Q`, `F7` or `7`.
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Leave out the nested bialgebra of a module coalgebra.
        #[arg(long)]
        detached: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check(_) => "check",
            Command::Coradical(_) => "coradical",
            Command::Wedge { .. } => "wedge",
            Command::Filtration { .. } => "filtration",
            Command::Grouplikes(_) => "grouplikes",
            Command::Membership { .. } => "membership",
            Command::Radical { .. } => "radical",
            Command::Tor1(_) => "tor1",
            Command::Equivalence(_) => "equivalence",
            Command::Schneider(_) => "schneider",
            Command::Oracle { .. } => "oracle",
            Command::Axioms { .. } => "axioms",
            Command::Construct { .. } => "construct",
        }
    }

    fn input(&self) -> Option<&Input> {
        match self {
            Command::Check(i)
            | Command::Coradical(i)
            | Command::Grouplikes(i)
            | Command::Tor1(i)
            | Command::Equivalence(i)
            | Command::Schneider(i) => Some(i),
            Command::Wedge { input, .. }
            | Command::Filtration { input, .. }
            | Command::Membership { input, .. }
            | Command::Radical { input, .. }
            | Command::Oracle { input, .. }
            | Command::Axioms { input, .. } => Some(input),
            Command::Construct { .. } => None,
        }
    }

    fn class(&self) -> Option<RadicalClass> {
        match self {
            Command::Membership { class, .. }
            | Command::Radical { class, .. }
            | Command::Oracle { class, .. }
            | Command::Axioms { class, .. } => Some((*class).into()),
            _ => None,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Source {
    path: String,
    digest: String,
    doc: Document,
}

fn read_document(path: &Path) -> Result<Source, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| DocError::Parse {
        line: 1,
        col: 1,
        message: "input is not UTF-8".into(),
    })?;
    Ok(Source {
        path: path.display().to_string(),
        digest: report::digest(&bytes),
        doc: parse_document(&text)?,
    })
}

struct Loaded {
    main: Source,
    hopf: Option<Source>,
    extra: Vec<Source>,
}

impl Loaded {
    fn hopf_doc(&self) -> Option<&Document> {
        self.hopf.as_ref().map(|s| &s.doc)
    }

    fn sources(&self) -> impl Iterator<Item = &Source> {
        std::iter::once(&self.main)
            .chain(self.hopf.iter())
            .chain(self.extra.iter())
    }
}

macro_rules! with_field {
    ($field:expr, $S:ident => $body:expr) => {
        match $field {
            FieldSpec::Q => {
                type $S = Q;
                $body
            }
            FieldSpec::Fp { p } => match p {
                2 => {
                    type $S = Fp<2>;
                    $body
                }
                3 => {
                    type $S = Fp<3>;
                    $body
                }
                5 => {
                    type $S = Fp<5>;
                    $body
                }
                7 => {
                    type $S = Fp<7>;
                    $body
                }
                11 => {
                    type $S = Fp<11>;
                    $body
                }
                13 => {
                    type $S = Fp<13>;
                    $body
                }
                17 => {
                    type $S = Fp<17>;
                    $body
                }
                19 => {
                    type $S = Fp<19>;
                    $body
                }
                23 => {
                    type $S = Fp<23>;
                    $body
                }
                29 => {
                    type $S = Fp<29>;
                    $body
                }
                31 => {
                    type $S = Fp<31>;
                    $body
                }
                other => Err(CliError::UnsupportedPrime(other)),
            },
        }
    };
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let start = Instant::now();
    if let Command::Construct {
        name,
        field,
        n,
        detached,
    } = &cli.command
    {
        return match construct(*name, field, *n, *detached) {
            Ok(doc) => Outcome {
                stdout: emit_document(&doc) + "\n",
                stderr: String::new(),
                code: 0,
            },
            Err(e) => Outcome {
                stdout: String::new(),
                stderr: format!("{}: {e}\n", e.kind()),
                code: e.exit_code(),
            },
        };
    }
    let input = cli
        .command
        .input()
        .expect("every other command reads a file");
    let mut report = Map::new();
    report.insert("command".into(), json!(cli.command.name()));
    let mut options = Map::new();
    if let Some(class) = cli.command.class() {
        options.insert("class".into(), json!(class.name()));
    }
    options.insert("seed".into(), json!(input.seed));
    options.insert("trials".into(), json!(input.trials));
    report.insert("options".into(), Value::Object(options));

    let result = load(&cli.command, input).and_then(|loaded| {
        let inputs: Vec<Value> = loaded
            .sources()
            .map(|s| json!({ "path": s.path, "sha256": s.digest }))
            .collect();
        report.insert("inputs".into(), json!(inputs));
        report.insert("field".into(), json!(loaded.main.doc.field.name()));
        with_field!(loaded.main.doc.field, S => compute::<S>(&cli.command, &loaded))
    });
    let (code, stderr) = match result {
        Ok((body, code)) => {
            report.insert("body".into(), body);
            (code, String::new())
        }
        Err(e) => {
            report.insert(
                "error".into(),
                json!({ "kind": e.kind(), "message": e.to_string() }),
            );
            (e.exit_code(), format!("{}: {e}\n", e.kind()))
        }
    };
    report.insert("exit_code".into(), json!(code));
    let stdout = match cli.format {
        Format::Json => {
            report.insert(
                "timings".into(),
                json!({ "total_ms": start.elapsed().as_millis() as u64 }),
            );
            serde_json::to_string_pretty(&Value::Object(report)).expect("reports serialize") + "\n"
        }
        Format::Text => report::render_text(&Value::Object(report)),
    };
    Outcome {
        stdout,
        stderr,
        code,
    }
}

fn load(cmd: &Command, input: &Input) -> Result<Loaded, CliError> {
    let main = read_document(&input.file)?;
    let hopf = input.hopf.as_deref().map(read_document).transpose()?;
    let mut extra = Vec::new();
    let specs: Vec<&String> = match cmd {
        Command::Wedge { x, y, .. } => vec![x, y],
        Command::Filtration { from: Some(f), .. } => vec![f],
        _ => vec![],
    };
    for s in specs {
        if Path::new(s).is_file() {
            extra.push(read_document(Path::new(s))?);
        }
    }
    Ok(Loaded { main, hopf, extra })
}

fn coalgebra_of<S: Scalar>(l: &Loaded) -> Result<Coalgebra<S>, CliError> {
    Ok(match l.main.doc.kind {
        Kind::Coalgebra => load_coalgebra(&l.main.doc)?,
        Kind::Bialgebra | Kind::Hopf => load_bialgebra::<S>(&l.main.doc)?.0.coalgebra().clone(),
        _ => module_coalgebra_of::<S>(l)?.coalgebra().clone(),
    })
}

/// A coalgebra is read over the trivial bialgebra, a bialgebra as regular.
fn module_coalgebra_of<S: Scalar>(l: &Loaded) -> Result<ModuleCoalgebra<S>, CliError> {
    let doc = &l.main.doc;
    Ok(match doc.kind {
        Kind::Coalgebra => ModuleCoalgebra::trivial(&load_coalgebra(doc)?, &Bialgebra::trivial()),
        Kind::Bialgebra | Kind::Hopf => ModuleCoalgebra::regular(&load_bialgebra::<S>(doc)?.0),
        Kind::ModuleCoalgebra => load_module_coalgebra(doc, l.hopf_doc())?,
        Kind::HopfModule => load_hopf_module::<S>(doc, l.hopf_doc())?.over().clone(),
        Kind::Subspace => {
            return Err(CliError::Usage(
                "a subspace document carries no structure".into(),
            ))
        }
    })
}

fn hopf_module_of<S: Scalar>(l: &Loaded) -> Result<HopfModule<S>, CliError> {
    if l.main.doc.kind == Kind::HopfModule {
        return load_hopf_module(&l.main.doc, l.hopf_doc());
    }
    Ok(HopfModule::from_coalgebra(&module_coalgebra_of::<S>(l)?))
}

fn subspace_arg<S: Scalar>(
    spec: &str,
    c: &Coalgebra<S>,
    l: &Loaded,
) -> Result<Subspace<S>, CliError> {
    let n = c.dim();
    if let Some(src) = l
        .extra
        .iter()
        .find(|s| s.path == Path::new(spec).display().to_string())
    {
        if src.doc.field != l.main.doc.field {
            return Err(DocError::Field(format!("{spec} is over a different field")).into());
        }
        let s = load_subspace::<S>(&src.doc)?;
        if s.ambient_dim() != n {
            return Err(DocError::Shape {
                tensor: spec.into(),
                expected: format!("ambient {n}"),
                got: format!("ambient {}", s.ambient_dim()),
            }
            .into());
        }
        return Ok(s);
    }
    if spec == "coradical" {
        return Ok(coradical(c)?);
    }
    let mut idx = Vec::new();
    for t in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i: usize = t
            .parse()
            .map_err(|_| CliError::Usage(format!("bad subspace `{spec}`")))?;
        if i >= n {
            return Err(CliError::Usage(format!(
                "basis index {i} out of range for dimension {n}"
            )));
        }
        idx.push(i);
    }
    Ok(Subspace::coordinate(n, idx))
}

fn check_axiom(c: &AxiomCheck) -> Value {
    json!({ "holds": c.holds, "witness": c.witness })
}

fn compute<S: Scalar>(cmd: &Command, l: &Loaded) -> Result<(Value, i32), CliError> {
    let input = cmd.input().expect("file commands");
    let opts = SearchOptions {
        seed: input.seed,
        trials: input.trials,
        ..SearchOptions::default()
    };
    let doc = &l.main.doc;
    match cmd {
        Command::Check(_) => {
            let mut body = Map::new();
            body.insert("kind".into(), json!(doc.kind));
            body.insert("dims".into(), json!(doc.dims));
            let laws: &[&str] = match doc.kind {
                Kind::Coalgebra => {
                    load_coalgebra::<S>(doc)?;
                    &["coassociativity", "counit"]
                }
                Kind::Bialgebra | Kind::Hopf => {
                    let (b, hopf) = load_bialgebra::<S>(doc)?;
                    let derived = modcoalg::bialgebra::antipode(&b);
                    body.insert(
                        "antipode".into(),
                        match (&hopf, &derived) {
                            (Some(_), _) => json!("verified"),
                            (None, Some(h)) => json!({ "derived": report::map(h.antipode()) }),
                            (None, None) => json!("none"),
                        },
                    );
                    if doc.kind == Kind::Hopf {
                        &[
                            "coassociativity",
                            "counit",
                            "associativity",
                            "unit",
                            "compatibility",
                            "antipode",
                        ]
                    } else {
                        &[
                            "coassociativity",
                            "counit",
                            "associativity",
                            "unit",
                            "compatibility",
                        ]
                    }
                }
                Kind::ModuleCoalgebra => {
                    load_module_coalgebra::<S>(doc, l.hopf_doc())?;
                    &[
                        "bialgebra",
                        "coassociativity",
                        "counit",
                        "right module",
                        "Δ and ε are module maps",
                    ]
                }
                Kind::HopfModule => {
                    load_hopf_module::<S>(doc, l.hopf_doc())?;
                    &[
                        "module coalgebra",
                        "right module",
                        "comodule",
                        "Hopf module compatibility",
                    ]
                }
                Kind::Subspace => {
                    let s = load_subspace::<S>(doc)?;
                    if s.dim() != doc.dims["dim"] {
                        return Err(DocError::Shape {
                            tensor: "basis".into(),
                            expected: format!("rank {}", doc.dims["dim"]),
                            got: format!("rank {}", s.dim()),
                        }
                        .into());
                    }
                    &["rank"]
                }
            };
            body.insert("laws".into(), json!(laws));
            body.insert("valid".into(), json!(true));
            Ok((Value::Object(body), 0))
        }
        Command::Coradical(_) => {
            let c = coalgebra_of::<S>(l)?;
            let c0 = coradical(&c)?;
            let comps = simple_components(&c)?;
            Ok((
                json!({
                    "dim": c.dim(),
                    "coradical": report::subspace(&c0),
                    "simple_components": comps.iter().map(report::subspace).collect::<Vec<_>>(),
                }),
                0,
            ))
        }
        Command::Grouplikes(_) => {
            let c = coalgebra_of::<S>(l)?;
            let gs = grouplikes(&c)?;
            Ok((
                json!({
                    "count": gs.len(),
                    "grouplikes": gs.iter().map(|g| report::vector(g)).collect::<Vec<_>>(),
                }),
                0,
            ))
        }
        Command::Wedge { x, y, .. } => {
            let c = coalgebra_of::<S>(l)?;
            let (xs, ys) = (subspace_arg(x, &c, l)?, subspace_arg(y, &c, l)?);
            let w = wedge(&c, &xs, &ys)?;
            Ok((
                json!({ "x": report::subspace(&xs), "y": report::subspace(&ys), "wedge": report::subspace(&w) }),
                0,
            ))
        }
        Command::Filtration { from, .. } => {
            let m = module_coalgebra_of::<S>(l)?;
            let c = m.coalgebra();
            let start = match from {
                Some(f) => subspace_arg(f, c, l)?,
                None => orbit_subcoalgebra(&m, &coradical(c)?)?,
            };
            let chain = wedge_filtration(c, &start)?;
            let last = chain.last().expect("nonempty chain");
            Ok((
                json!({
                    "from": report::subspace(&start),
                    "chain": chain.iter().map(report::subspace).collect::<Vec<_>>(),
                    "steps": chain.len() - 1,
                    "reaches_c": last.is_full(),
                }),
                0,
            ))
        }
        Command::Membership { class, .. } => {
            let m = module_coalgebra_of::<S>(l)?;
            let v = membership(&m, (*class).into(), &opts, 0)?;
            let code = if v.verdict == Verdict::No { 1 } else { 0 };
            Ok((
                json!({ "class": RadicalClass::from(*class).name(), "membership": report::verdict(&v) }),
                code,
            ))
        }
        Command::Radical { class, .. } => {
            let m = module_coalgebra_of::<S>(l)?;
            let r = radical_compute(&m, (*class).into(), &opts)?;
            let comps: Vec<Value> = r
                .components
                .iter()
                .map(|c| {
                    json!({
                        "simple": report::subspace(&c.simple),
                        "orbit": report::subspace(&c.orbit),
                        "membership": report::verdict(&c.verdict),
                    })
                })
                .collect();
            Ok((
                json!({
                    "class": r.class.name(),
                    "radical": report::subspace(&r.radical),
                    "components": comps,
                    "seed_sum": report::subspace(&r.seed_sum),
                    "saturation_chain": r.chain.iter().map(report::subspace).collect::<Vec<_>>(),
                    "radical_membership": r.radical_verdict.name(),
                    "exact": r.exact,
                }),
                0,
            ))
        }
        Command::Tor1(_) => {
            let m = hopf_module_of::<S>(l)?;
            let t = tor1(m.module())?;
            Ok((
                json!({ "module_dim": m.dim(), "tor1_dim": t.dim(), "tor1": report::subspace(&t) }),
                0,
            ))
        }
        Command::Equivalence(_) => {
            let m = module_coalgebra_of::<S>(l)?;
            let rep = equivalence_report(&m, &opts)?;
            let members: Vec<Value> = rep
                .members
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "dim": r.dim,
                        "overline_dim": r.overline_dim,
                        "tor1": r.tor1,
                        "xi_iso": r.xi_iso,
                        "theta_iso": r.theta_iso,
                        "triangle": r.triangle,
                    })
                })
                .collect();
            let (verdict, code) = match &rep.verdict {
                EquivalenceVerdict::Refuted { member, reasons } => (
                    json!({ "type": "refuted", "member": member, "reasons": reasons }),
                    1,
                ),
                EquivalenceVerdict::Consistent { family_size } => (
                    json!({ "type": "consistent", "family_size": family_size }),
                    0,
                ),
            };
            Ok((
                json!({
                    "verdict": verdict,
                    "member_sufficient": rep.cocleft == Verdict::Yes,
                    "cocleft": rep.cocleft.name(),
                    "contradiction": rep.contradiction,
                    "family": members,
                }),
                code,
            ))
        }
        Command::Schneider(_) => {
            let m = module_coalgebra_of::<S>(l)?;
            let rep = schneider_pipeline(&m, &opts)?;
            let certs: Vec<Value> = rep
                .grouplikes
                .iter()
                .map(|g| {
                    json!({
                        "grouplike": report::vector(&g.grouplike),
                        "orbit": report::subspace(&g.orbit),
                        "phi_iso": g.phi_iso,
                        "psi": g.psi.as_ref().map(report::map),
                        "psi_bar": g.psi_bar.as_ref().map(report::map),
                        "psi_star_psi_bar_is_unit": g.inverse_verified,
                    })
                })
                .collect();
            let code = if rep.hypotheses && rep.agreement {
                0
            } else {
                1
            };
            Ok((
                json!({
                    "grouplikes": certs,
                    "g_c_h": report::subspace(&rep.g_c_h),
                    "coradical": report::subspace(&rep.coradical),
                    "coradical_in_gch": rep.coradical_in_gch,
                    "can_injective": rep.can_injective,
                    "hypotheses": rep.hypotheses,
                    "predicted": { "projective": rep.predicted_projective, "cocleft": rep.predicted_cocleft },
                    "direct": { "projective": rep.direct_projective.name(), "cocleft": rep.direct_cocleft.name() },
                    "agreement": rep.agreement,
                }),
                code,
            ))
        }
        Command::Oracle { class, .. } => {
            let m = module_coalgebra_of::<S>(l)?;
            let bf = brute_force_radical(&m, (*class).into())?;
            Ok((
                json!({
                    "class": RadicalClass::from(*class).name(),
                    "radical": report::subspace(&bf.radical),
                    "submodule_coalgebras": bf.candidates.len(),
                    "members": bf.members.iter().map(report::subspace).collect::<Vec<_>>(),
                }),
                0,
            ))
        }
        Command::Axioms { class, .. } => {
            let m = module_coalgebra_of::<S>(l)?;
            let rep = verify_radical_axioms(&l.main.path, &m, (*class).into(), &opts)?;
            let code = if rep.failures().is_empty() { 0 } else { 1 };
            Ok((
                json!({
                    "class": rep.class.name(),
                    "exhaustive": rep.exhaustive,
                    "candidates": rep.candidates,
                    "members": rep.members,
                    "R1": check_axiom(&rep.r1),
                    "R2": check_axiom(&rep.r2),
                    "R3": check_axiom(&rep.r3),
                    "maximality": check_axiom(&rep.maximal),
                    "failures": rep.failures(),
                }),
                code,
            ))
        }
        Command::Construct { .. } => unreachable!("handled before loading"),
    }
}

pub fn construct(
    name: Construct,
    field: &str,
    n: usize,
    detached: bool,
) -> Result<Document, CliError> {
    let spec: FieldSpec = field.parse().map_err(CliError::Usage)?;
    if let FieldSpec::Fp { p } = spec {
        if !is_prime(p) {
            return Err(CliError::Usage(format!("{p} is not prime")));
        }
    }
    with_field!(spec, S => construct_in::<S>(name, n, detached))
}

fn construct_in<S: Scalar>(
    name: Construct,
    n: usize,
    detached: bool,
) -> Result<Document, CliError> {
    let mc = |m: &ModuleCoalgebra<S>| emit_module_coalgebra(m, !detached);
    Ok(match name {
        Construct::H4 => emit_hopf(&zoo::sweedler_h4::<S>()?),
        Construct::Taft => emit_hopf(&zoo::taft_algebra::<S>(n)?),
        Construct::Cyclic => emit_hopf(&zoo::group_algebra::<S>(&CayleyTable::cyclic(n))?),
        Construct::S3 => emit_hopf(&zoo::group_algebra::<S>(&CayleyTable::symmetric3())?),
        Construct::Comatrix => emit_coalgebra(&zoo::comatrix_coalgebra::<S>(n)),
        Construct::Grouplike => emit_coalgebra(&Coalgebra::<S>::grouplike(n)),
        Construct::H4Regular => mc(&ModuleCoalgebra::regular(
            zoo::sweedler_h4::<S>()?.bialgebra(),
        )),
        Construct::H4Ktriv => mc(&ModuleCoalgebra::k_triv(
            zoo::sweedler_h4::<S>()?.bialgebra(),
        )),
        Construct::H4PlusKtriv => {
            let h = zoo::sweedler_h4::<S>()?;
            mc(&direct_sum(&[
                ModuleCoalgebra::regular(h.bialgebra()),
                ModuleCoalgebra::k_triv(h.bialgebra()),
            ])?)
        }
        Construct::Gh4 => {
            let h = zoo::sweedler_h4::<S>()?;
            mc(&zoo::grouplike_orbit(
                &ModuleCoalgebra::regular(h.bialgebra()),
                &unit_vector(4, 1),
            )?)
        }
        Construct::TaftRegular => mc(&ModuleCoalgebra::regular(
            zoo::taft_algebra::<S>(n)?.bialgebra(),
        )),
        Construct::H4OverK => {
            let h = zoo::sweedler_h4::<S>()?;
            mc(&ModuleCoalgebra::trivial(
                h.coalgebra(),
                &Bialgebra::trivial(),
            ))
        }
        Construct::SignModule => {
            let h = zoo::sweedler_h4::<S>()?;
            let kt = HopfModule::from_coalgebra(&ModuleCoalgebra::k_triv(h.bialgebra()));
            let (g, _) = free_hopf_module(&kt)?;
            let mut one_plus_g = unit_vector::<S>(4, 0);
            one_plus_g[1] = S::one();
            let w = Subspace::span(4, [one_plus_g, unit_vector(4, 2), unit_vector(4, 3)]);
            emit_hopf_module(&g.quotient(&w)?.0)
        }
    })
}
