//! The `quiverlab` command line.
//!
//! Exit codes: 0 success, 1 a check failed (the witness is printed) or the
//! requested quantity is undefined for the algebra, 2 usage or parse error.

use std::fs;
use std::io::{Read, Write};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::PathAlgebra;
use crate::claims::{expand_claims, mutated, run_claims, shipped_families, ClaimOutcome, Status, Subject};
use crate::error::Error;
use crate::family::{example211, nakayama_indecomposables, FamilySpec, Indecomposable};
use crate::field::Field;
use crate::homolog::{
    ext_dims, homological_profile, minimal_resolution, Direction, Gorenstein, HigherAg, DEFAULT_CAP,
};
use crate::module::Representation;
use crate::oracle::{brute_axioms, brute_torsion_submodule, enumerate_left_ideals, maranda_roundtrip};
use crate::parse::{parse_algebra_file, parse_module_file, parse_module_ref, serialize_algebra, serialize_module};
use crate::quotient::{is_closed, localize};
use crate::report::{emit_table, render_text};
use crate::theorems::{dense_topology, q_topology, topology_from_injective};
use crate::topology::{dense_primes, annihilator_criterion, GabrielTopology};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "quiverlab", version, about = "Homological and torsion-theoretic invariants of bound quiver algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Resolution cap; dimensions that reach it print as `>=cap`.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Seed for sampling elements over the rationals.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Algebra file (`-` for stdin). Without this or `--family` the algebra is read from stdin.
    #[arg(long, global = true)]
    pub algebra: Option<String>,
    /// Builtin family: `example211:N`, `cyclic:K:M`, `loop:M`, `semisimple:K`.
    #[arg(long, global = true)]
    pub family: Option<String>,
    /// Field for `--family`: `rational` or a prime `p`.
    #[arg(long, global = true, default_value = "rational")]
    pub field: String,
    /// Modules to tabulate or sweep (builtin references or module files).
    #[arg(long, global = true, value_delimiter = ',')]
    pub modules: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Homological profile with the per-indecomposable table.
    Profile,
    /// Minimal projective or injective resolution.
    Resolve {
        module: String,
        #[arg(long)]
        injective: bool,
    },
    /// `dim Ext^i(M, N)` for `i = 0..=degree`.
    Ext {
        m: String,
        n: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// Gorenstein projective dimension.
    Gpd { modules: Vec<String> },
    /// Torsion part and torsion-free quotient.
    Torsion {
        module: String,
        /// `dense` (E(Γ)), `Q`, or an injective module reference.
        #[arg(long, default_value = "dense")]
        cogenerator: String,
    },
    /// The minimal dense ideal `J0`.
    DenseIdeal {
        #[arg(long, default_value = "dense")]
        cogenerator: String,
    },
    /// Density of the primes `Ann(S(i))`.
    DensePrimes {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Single named check: `prop2.2`.
    Check {
        name: String,
        modules: Vec<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Module of quotients.
    Localize {
        module: String,
        #[arg(long, default_value = "dense")]
        cogenerator: String,
    },
    /// Closedness by Hom/Ext vanishing and by the envelope test.
    Closed {
        module: String,
        #[arg(long, default_value = "dense")]
        cogenerator: String,
    },
    /// Run claim suites; without an algebra, on every shipped family.
    Verify {
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long)]
        n: Option<usize>,
        /// Sweep all indecomposables (Nakayama algebras).
        #[arg(long)]
        all_indec: bool,
        /// Corrupt one structure constant first.
        #[arg(long)]
        mutate: bool,
    },
    /// Exhaustive checks over a finite field.
    Oracle {
        #[arg(long)]
        ideals: bool,
        #[arg(long)]
        axioms: bool,
        #[arg(long)]
        maranda: bool,
        #[arg(long)]
        torsion: Option<String>,
    },
    /// Print the algebra of the linear `A_{n+2}` quiver modulo length-2 paths.
    Example211 {
        #[arg(long)]
        n: usize,
        /// Print the profile table instead of the algebra file.
        #[arg(long)]
        table: bool,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Syntax { .. }
            | Error::BadField(_)
            | Error::MalformedRelation(_)
            | Error::VertexOutOfRange { .. }
            | Error::InvalidQuiver(_)
            | Error::InvalidRepresentation(_)
            | Error::BadParameters(_)
            | Error::Io(_) => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

struct Ctx<'a> {
    global: &'a Global,
    input: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

pub fn parse_field(text: &str) -> crate::error::Result<Field> {
    match text.trim().to_ascii_lowercase().as_str() {
        "rational" | "q" | "qq" => Ok(Field::Rational),
        other => {
            let digits = other.trim_start_matches("prime").trim_start_matches('f').trim_start_matches(':').trim();
            let p: u64 = digits.parse().map_err(|_| Error::BadParameters(format!("unknown field `{text}`")))?;
            Field::prime(p)
        }
    }
}

impl Ctx<'_> {
    fn emit(&mut self, text: &str, value: &impl Serialize) {
        match self.global.format {
            Format::Text => {
                let _ = write!(self.out, "{text}");
                if !text.ends_with('\n') {
                    let _ = writeln!(self.out);
                }
            }
            Format::Json => {
                let _ = writeln!(self.out, "{}", serde_json::to_string_pretty(value).expect("serializable"));
            }
        }
    }

    fn label(&self) -> String {
        if let Some(f) = &self.global.family {
            return f.clone();
        }
        match self.global.algebra.as_deref() {
            Some("-") | None => "stdin".into(),
            Some(path) => path.to_string(),
        }
    }

    fn algebra(&mut self) -> std::result::Result<Arc<PathAlgebra>, Failure> {
        if let Some(f) = &self.global.family {
            let spec: FamilySpec = f.parse()?;
            return Ok(Arc::new(spec.build(parse_field(&self.global.field)?)?));
        }
        let text = match self.global.algebra.as_deref() {
            Some("-") | None => {
                let mut s = String::new();
                self.input.read_to_string(&mut s).map_err(|e| Failure::Usage(e.to_string()))?;
                s
            }
            Some(path) => fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?,
        };
        if text.trim().is_empty() {
            return Err(Failure::Usage("no algebra given: use --family, --algebra or stdin".into()));
        }
        Ok(Arc::new(parse_algebra_file(&text)?))
    }

    fn sample(&self, alg: &Arc<PathAlgebra>, required: bool) -> std::result::Result<Vec<Indecomposable>, Failure> {
        if !self.global.modules.is_empty() {
            return self
                .global
                .modules
                .iter()
                .map(|m| Ok(Indecomposable { name: m.clone(), module: module_arg(alg, m)? }))
                .collect();
        }
        match nakayama_indecomposables(alg) {
            Ok(v) => Ok(v),
            Err(e) if required => Err(e.into()),
            Err(_) => Ok(Vec::new()),
        }
    }
}

fn module_arg(alg: &Arc<PathAlgebra>, text: &str) -> std::result::Result<Representation, Failure> {
    if let Some(r) = parse_module_ref(alg, text) {
        return Ok(r?);
    }
    let body = fs::read_to_string(text).map_err(|e| Failure::Usage(format!("module `{text}`: {e}")))?;
    Ok(parse_module_file(alg, &body)?.1)
}

fn topology_arg(alg: &Arc<PathAlgebra>, which: &str) -> std::result::Result<GabrielTopology, Failure> {
    Ok(match which {
        "dense" => dense_topology(alg)?,
        "Q" | "q" => q_topology(alg)?,
        other => topology_from_injective(&module_arg(alg, other)?)?,
    })
}

fn dims(m: &Representation) -> String {
    format!("{:?}", m.dims()).replace(' ', "")
}

fn higher_ag(alg: &Arc<PathAlgebra>, n: Option<usize>, cap: usize) -> std::result::Result<HigherAg, Failure> {
    let n = match n {
        Some(n) => n,
        None => homological_profile(alg, cap)
            .n_min_ag
            .map(|r| r.min)
            .ok_or_else(|| Failure::Check("algebra is not n-minimal Auslander-Gorenstein for any n".into()))?,
    };
    Ok(HigherAg::certify(alg, n, cap)?)
}

pub fn run<I, T>(args: I, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    let mut ctx = Ctx {
        global: &cli.global,
        input,
        out,
    };
    match dispatch(&mut ctx, &cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Entry point for the binary.
pub fn main_with_std() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(ctx: &mut Ctx<'_>, command: &Command) -> Outcome {
    let cap = ctx.global.cap;
    match command {
        Command::Example211 { n, table } => {
            let field = parse_field(&ctx.global.field)?;
            let alg = Arc::new(example211(*n, field)?);
            if *table {
                let sample = nakayama_indecomposables(&alg)?;
                let report = emit_table(&alg, &format!("example211:{n}"), &sample, cap)?;
                ctx.emit(&render_text(&report), &report);
            } else {
                let text = serialize_algebra(&alg);
                let _ = write!(ctx.out, "{text}");
            }
            Ok(true)
        }
        Command::Profile => {
            let alg = ctx.algebra()?;
            let sample = ctx.sample(&alg, false)?;
            let report = emit_table(&alg, &ctx.label(), &sample, cap)?;
            ctx.emit(&render_text(&report), &report);
            Ok(true)
        }
        Command::Resolve { module, injective } => {
            let alg = ctx.algebra()?;
            let m = module_arg(&alg, module)?;
            let dir = if *injective { Direction::Injective } else { Direction::Projective };
            let res = minimal_resolution(&m, dir, cap);
            let letter = if *injective { "I" } else { "P" };
            let terms: Vec<String> = res
                .labels
                .iter()
                .map(|ls| ls.iter().map(|v| format!("{letter}({})", v + 1)).collect::<Vec<_>>().join("+"))
                .collect();
            let arrow = if *injective { " -> " } else { " <- " };
            let text = format!("{module}{arrow}{}\nlength {}\n", terms.join(arrow), res.length());
            let value = json!({
                "module": module,
                "direction": if *injective { "injective" } else { "projective" },
                "terms": res.labels.iter().zip(&res.terms).map(|(l, t)| json!({
                    "labels": l.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    "dim_vector": t.dims(),
                })).collect::<Vec<_>>(),
                "terminated": res.terminated,
                "length": res.length(),
            });
            ctx.emit(&text, &value);
            Ok(true)
        }
        Command::Ext { m, n, degree } => {
            let alg = ctx.algebra()?;
            let (a, b) = (module_arg(&alg, m)?, module_arg(&alg, n)?);
            let ext = ext_dims(&a, &b, *degree)?;
            let text: String = ext
                .iter()
                .enumerate()
                .map(|(i, d)| format!("Ext^{i}({m}, {n}) = {d}\n"))
                .collect();
            ctx.emit(&text, &json!({ "m": m, "n": n, "ext": ext }));
            Ok(true)
        }
        Command::Gpd { modules } => {
            let alg = ctx.algebra()?;
            let gor = Gorenstein::certify(&alg, cap)?;
            let mut rows = Vec::new();
            let mut text = String::new();
            for name in modules {
                let g = gor.gpd(&module_arg(&alg, name)?)?;
                text.push_str(&format!("gpd {name} = {g}\n"));
                rows.push(json!({ "module": name, "gpd": g }));
            }
            ctx.emit(&text, &json!({ "ggldim": gor.ggldim(), "modules": rows }));
            Ok(true)
        }
        Command::Torsion { module, cogenerator } => {
            let alg = ctx.algebra()?;
            let t = topology_arg(&alg, cogenerator)?;
            let m = module_arg(&alg, module)?;
            let pair = t.pair();
            let seq = pair.torsion_submodule(&m)?;
            let support: Vec<usize> = pair.support().iter().map(|v| v + 1).collect();
            let text = format!(
                "V_E = {support:?}\n{module}: torsion {}, torsion-free {}\nt(M) = {}  M/t(M) = {}\n",
                pair.is_torsion(&m),
                pair.is_torsionfree(&m),
                dims(&seq.torsion),
                dims(&seq.torsionfree)
            );
            let value = json!({
                "support": support,
                "torsion": pair.is_torsion(&m),
                "torsion_free": pair.is_torsionfree(&m),
                "torsion_part": seq.torsion.dims(),
                "torsionfree_part": seq.torsionfree.dims(),
            });
            ctx.emit(&text, &value);
            Ok(true)
        }
        Command::DenseIdeal { cogenerator } => {
            let alg = ctx.algebra()?;
            let t = topology_arg(&alg, cogenerator)?;
            let j0 = t.j0();
            let idempotent = j0.product(j0) == *j0;
            let text = format!(
                "J0 = {j0}\ndim J0 = {} of {}\ntwo-sided {}  idempotent {}\nΓ/J0 = {}\n",
                j0.dim(),
                alg.dim(),
                j0.is_two_sided(),
                idempotent,
                dims(&t.quotient_by_j0())
            );
            let value = json!({
                "j0": j0.to_string(),
                "dim": j0.dim(),
                "algebra_dim": alg.dim(),
                "two_sided": j0.is_two_sided(),
                "idempotent": idempotent,
                "quotient_dims": t.quotient_by_j0().dims(),
            });
            ctx.emit(&text, &value);
            Ok(true)
        }
        Command::DensePrimes { n } => {
            let alg = ctx.algebra()?;
            let cert = higher_ag(&alg, *n, cap)?;
            let list = dense_primes(&dense_topology(&alg)?, &cert)?;
            let text: String = list
                .iter()
                .map(|d| format!("p_{}: dense {}  gpd(Γ/p) {}  consistent {}\n", d.vertex, d.dense, d.gpd, d.agrees))
                .collect();
            ctx.emit(&text, &json!({ "n": cert.n(), "primes": list }));
            Ok(list.iter().all(|d| d.agrees))
        }
        Command::Check { name, modules, n } => {
            if name != "prop2.2" {
                return Err(Failure::Usage(format!("unknown check `{name}`; known: prop2.2")));
            }
            let alg = ctx.algebra()?;
            let cert = higher_ag(&alg, *n, cap)?;
            let sample: Vec<Indecomposable> = if modules.is_empty() {
                ctx.sample(&alg, true)?
            } else {
                modules
                    .iter()
                    .map(|m| Ok(Indecomposable { name: m.clone(), module: module_arg(&alg, m)? }))
                    .collect::<std::result::Result<_, Failure>>()?
            };
            let mut text = String::new();
            let mut rows = Vec::new();
            let mut ok = true;
            for ind in &sample {
                let r = annihilator_criterion(&ind.module, &cert, ctx.global.seed)?;
                ok &= r.holds;
                text.push_str(&format!(
                    "{}: gpd {} < n+1 is {}; max gpd(Ann x) {} < n is {}; {} elements{}; {}\n",
                    ind.name,
                    r.gpd_module,
                    r.module_side,
                    r.max_annihilator_gpd,
                    r.element_side,
                    r.tested,
                    if r.exhaustive { "" } else { " (sampled)" },
                    if r.holds { "holds" } else { "FAILS" }
                ));
                rows.push(json!({ "module": ind.name, "report": r }));
            }
            ctx.emit(&text, &json!({ "n": cert.n(), "modules": rows, "holds": ok }));
            Ok(ok)
        }
        Command::Localize { module, cogenerator } => {
            let alg = ctx.algebra()?;
            let t = topology_arg(&alg, cogenerator)?;
            let m = module_arg(&alg, module)?;
            let l = localize(&t, &m)?;
            let text = format!(
                "M_G = {}\nker psi = {}  coker psi = {}\npsi injective {}  isomorphism {}\n{}",
                dims(&l.module),
                dims(&l.psi_kernel),
                dims(&l.psi_cokernel),
                l.psi.is_injective(),
                l.psi.is_isomorphism(),
                serialize_module(&format!("{module}_G"), &l.module)
            );
            let value = json!({
                "dim_vector": l.module.dims(),
                "psi_kernel": l.psi_kernel.dims(),
                "psi_cokernel": l.psi_cokernel.dims(),
                "psi_isomorphism": l.psi.is_isomorphism(),
                "module_file": serialize_module(&format!("{module}_G"), &l.module),
            });
            ctx.emit(&text, &value);
            Ok(true)
        }
        Command::Closed { module, cogenerator } => {
            let alg = ctx.algebra()?;
            let t = topology_arg(&alg, cogenerator)?;
            let r = is_closed(&t, &module_arg(&alg, module)?)?;
            let text = format!(
                "{module}: closed {}\n  Hom(Γ/J0, M) = 0: {}\n  Ext^1(Γ/J0, M) = 0: {}\n  E(M) torsion-free: {}\n  E(M)/M torsion-free: {}\n  tests agree: {}\n",
                r.closed, r.hom_vanishes, r.ext_vanishes, r.envelope_torsionfree, r.envelope_quotient_torsionfree, r.agrees
            );
            ctx.emit(&text, &r);
            Ok(r.agrees)
        }
        Command::Verify { claims, n, all_indec, mutate } => {
            let list = expand_claims(claims).map_err(Failure::Usage)?;
            let subjects = verify_subjects(ctx, *n, *all_indec)?;
            let mut outcomes: Vec<ClaimOutcome> = Vec::new();
            for mut s in subjects {
                if *mutate {
                    let bad = mutated(&s.algebra)
                        .ok_or_else(|| Failure::Usage("no structure constant to corrupt".into()))?;
                    s.algebra = Arc::new(bad);
                    s.label.push_str("+mutated");
                }
                outcomes.extend(run_claims(&s, &list));
            }
            let passed = outcomes.iter().all(|o| o.status != Status::Fail);
            let text: String = outcomes.iter().map(|o| format!("{o}\n")).collect();
            let failed = outcomes.iter().filter(|o| o.status == Status::Fail).count();
            let text = format!("{text}{} claims, {failed} failed\n", outcomes.len());
            ctx.emit(&text, &json!({ "schema": "quiverlab.verify/1", "passed": passed, "outcomes": outcomes }));
            Ok(passed)
        }
        Command::Oracle { ideals, axioms, maranda, torsion } => {
            let alg = ctx.algebra()?;
            let t = dense_topology(&alg)?;
            let mut text = String::new();
            let mut value = serde_json::Map::new();
            let mut ok = true;
            let need_lattice = *ideals || *axioms || *maranda || torsion.is_none();
            if need_lattice {
                let lattice = enumerate_left_ideals(&alg)?;
                let members: Vec<_> = lattice.ideals.iter().filter(|j| t.is_dense(j)).cloned().collect();
                if *ideals || torsion.is_none() && !*axioms && !*maranda {
                    text.push_str(&format!("{} left ideals, {} dense, J0 = {}\n", lattice.len(), members.len(), t.j0()));
                    for j in &lattice.ideals {
                        let mark = if j == t.j0() { "  <- J0" } else if t.is_dense(j) { "  dense" } else { "" };
                        text.push_str(&format!("  dim {} {j}{mark}\n", j.dim()));
                    }
                    ok &= lattice.is_consistent();
                    value.insert("ideals".into(), json!(lattice.ideals.iter().map(|j| j.to_string()).collect::<Vec<_>>()));
                    value.insert("dense".into(), json!(members.len()));
                }
                if *axioms {
                    let r = brute_axioms(&lattice, &members);
                    ok &= r.passed();
                    text.push_str(&format!("axioms on {} ideals: {}\n", r.ideals, if r.passed() { "pass" } else { "FAIL" }));
                    for v in &r.violations {
                        text.push_str(&format!("  {}: {}\n", v.axiom, v.witness));
                    }
                    value.insert("axioms".into(), json!(r));
                }
                if *maranda {
                    let r = maranda_roundtrip(&t, &lattice)?;
                    ok &= r.identity();
                    text.push_str(&format!(
                        "round trip: |G| = {}, ideals over J0 = {}, universe {}, identity {}\n",
                        r.topology_size,
                        r.overideals_of_j0,
                        r.universe,
                        r.identity()
                    ));
                    value.insert("maranda".into(), json!(r));
                }
            }
            if let Some(name) = torsion {
                let m = module_arg(&alg, name)?;
                let brute = brute_torsion_submodule(t.pair(), &m)?.0;
                let fast = t.pair().torsion_submodule(&m)?.torsion;
                let agree = brute.dims() == fast.dims();
                ok &= agree;
                text.push_str(&format!("t({name}): brute {}  fast {}  agree {agree}\n", dims(&brute), dims(&fast)));
                value.insert("torsion".into(), json!({ "brute": brute.dims(), "fast": fast.dims(), "agree": agree }));
            }
            ctx.emit(&text, &value);
            Ok(ok)
        }
    }
}

fn verify_subjects(ctx: &mut Ctx<'_>, n: Option<usize>, all_indec: bool) -> std::result::Result<Vec<Subject>, Failure> {
    let (cap, seed) = (ctx.global.cap, ctx.global.seed);
    if ctx.global.family.is_none() && ctx.global.algebra.is_none() {
        let mut out = Vec::new();
        for (spec, field) in shipped_families() {
            let mut s = Subject::from_family(spec, field, cap, seed)?;
            s.n = n;
            out.push(s);
        }
        return Ok(out);
    }
    let alg = ctx.algebra()?;
    let sample = ctx.sample(&alg, all_indec || ctx.global.modules.is_empty())?;
    let example = (1..=alg.vertex_count().saturating_sub(2))
        .rev()
        .find(|&k| alg.vertex_count() == k + 2 && example211(k, alg.field()).is_ok_and(|e| e == *alg));
    Ok(vec![Subject {
        label: ctx.label(),
        algebra: alg,
        sample,
        n,
        example211: example,
        cap,
        seed,
    }])
}
