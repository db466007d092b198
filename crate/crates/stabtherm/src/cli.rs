//! The `stabtherm` command line.
//!
//! Every subcommand prints a JSON document on stdout. Failures print
//! `{"error": {...}}` on stderr and exit with 2 (validation), 3 (claim
//! check) or 4 (resource limit). Output files are written atomically.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use stabtherm_core::coeff::{format_rational, parse_rational};
use stabtherm_core::models::{self, ModelBundle};
use stabtherm_core::parent::{
    self, assemble_orbits, energy_moments, enumerate_factorizations, find_orbit, real_bundles, translation_orbits,
};
use stabtherm_core::{mite, Coeff, Factorization, GaussRational, PauliHamiltonian, StabilizerTableau, Support, SymmetrySpec};

use crate::error::{Error, Result};
use crate::json::{to_pretty, F17};
use crate::{io, spectral, suites};

#[derive(Parser, Debug)]
#[command(name = "stabtherm", version, about = "Stabilizer eigenstates, thermal-equilibrium checks and parent Hamiltonians")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output directory for files.
    #[arg(long, global = true, env = "STABTHERM_OUT")]
    pub out: Option<PathBuf>,
    /// key = value file supplying defaults for flags of the subcommand.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Include wall-clock timings in JSON output (makes it nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide k-body, l-local or subsystem MITE.
    Mite(MiteArgs),
    /// Build a parent Hamiltonian from factorization bundles.
    Synth(SynthArgs),
    /// Check that a Hamiltonian annihilates a stabilizer state.
    Verify(VerifyArgs),
    /// Sector-resolved spectrum and gap-ratio statistics.
    Spectrum(SpectrumArgs),
    /// Few-body no-go audit of a group or a random ensemble.
    Audit(AuditArgs),
    /// Built-in models.
    #[command(subcommand)]
    Models(ModelsCommand),
    /// Seeded batch suites with JSON reports.
    Suite(SuiteArgs),
}

fn coeff_arg(s: &str) -> std::result::Result<Coeff, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Args, Debug, Clone, Default)]
pub struct Source {
    /// Built-in model: eap, g1, g2, cluster.
    #[arg(long)]
    pub model: Option<String>,
    /// Number of qubits for --model.
    #[arg(long)]
    pub n: Option<usize>,
    /// g1 coupling.
    #[arg(long, value_parser = coeff_arg)]
    pub j: Option<Coeff>,
    #[arg(long, value_parser = coeff_arg)]
    pub j1: Option<Coeff>,
    #[arg(long, value_parser = coeff_arg)]
    pub j2: Option<Coeff>,
    #[arg(long, value_parser = coeff_arg)]
    pub j3: Option<Coeff>,
    /// Tableau file instead of --model.
    #[arg(long)]
    pub tableau: Option<PathBuf>,
}

impl Source {
    fn couplings(&self) -> Vec<Coeff> {
        let one = stabtherm_core::coeff::one;
        match self.model.as_deref() {
            Some("g1") => vec![self.j.clone().unwrap_or_else(one)],
            _ => [&self.j1, &self.j2, &self.j3].iter().map(|c| (*c).clone().unwrap_or_else(one)).collect(),
        }
    }

    fn bundle(&self) -> Result<Option<ModelBundle>> {
        let Some(name) = &self.model else { return Ok(None) };
        let n = self.n.ok_or_else(|| Error::Config("--model needs --n".to_string()))?;
        Ok(Some(models::build(name, n, &self.couplings())?))
    }

    fn tableau(&self) -> Result<StabilizerTableau> {
        match (&self.tableau, self.bundle()?) {
            (Some(_), Some(_)) => Err(Error::Config("give either --model or --tableau, not both".to_string())),
            (Some(path), None) => io::parse_tableau(&io::read_to_string(path)?),
            (None, Some(b)) => Ok(b.tableau),
            (None, None) => Err(Error::Config("need --model or --tableau".to_string())),
        }
    }
}

#[derive(Args, Debug)]
pub struct MiteArgs {
    #[command(flatten)]
    pub source: Source,
    /// k-body MITE.
    #[arg(long, conflicts_with_all = ["l", "subset"])]
    pub k: Option<usize>,
    /// l-local MITE on cyclic windows.
    #[arg(long, conflicts_with = "subset")]
    pub l: Option<usize>,
    /// Explicit subsystem, 1-based comma-separated sites.
    #[arg(long)]
    pub subset: Option<String>,
}

#[derive(Args, Debug)]
pub struct SynthArgs {
    #[command(flatten)]
    pub source: Source,
    /// Body count bound for P and Q.
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    /// Use every a = ±1 factorization (one coefficient per translation
    /// orbit) instead of the model's own bundles.
    #[arg(long)]
    pub all: bool,
    /// Seed for random orbit coefficients with --all; unit coefficients
    /// otherwise.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: Source,
    /// Hamiltonian file (default: the model's Hamiltonian).
    #[arg(long)]
    pub hamiltonian: Option<PathBuf>,
    /// Include the decomposition certificate.
    #[arg(long)]
    pub certificate: bool,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub hamiltonian: Option<PathBuf>,
    /// Sector, e.g. `k=0,p=1,px=1,pz=1`, `t=1,px=1` or `all`.
    #[arg(long, default_value = "all", conflicts_with = "pool")]
    pub sector: String,
    /// Pool over k = 0..=N/2 at the given `px=..,pz=..` resolution, with
    /// inversion resolved at k = 0 and k = N/2.
    #[arg(long)]
    pub pool: Option<String>,
    #[arg(long, default_value_t = 0.5)]
    pub central_fraction: f64,
    #[arg(long, default_value_t = 20)]
    pub bins: usize,
    #[arg(long, default_value_t = spectral::DEFAULT_DIMENSION_LIMIT)]
    pub dimension_limit: usize,
}

#[derive(Args, Debug)]
pub struct AuditArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    /// Audit this many random groups on --random-n qubits instead.
    #[arg(long, requires = "random_n")]
    pub groups: Option<u64>,
    #[arg(long)]
    pub random_n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum ModelsCommand {
    /// List model names.
    List,
    /// Write tableau, graph, DOT and Hamiltonian files.
    Export(ExportArgs),
    /// Evaluate the model's claim list.
    Check(ExportArgs),
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    pub name: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = coeff_arg)]
    pub j: Option<Coeff>,
    #[arg(long, value_parser = coeff_arg)]
    pub j1: Option<Coeff>,
    #[arg(long, value_parser = coeff_arg)]
    pub j2: Option<Coeff>,
    #[arg(long, value_parser = coeff_arg)]
    pub j3: Option<Coeff>,
}

impl ExportArgs {
    fn source(&self) -> Source {
        Source {
            model: Some(self.name.clone()),
            n: Some(self.n),
            j: self.j.clone(),
            j1: self.j1.clone(),
            j2: self.j2.clone(),
            j3: self.j3.clone(),
            tableau: None,
        }
    }
}

#[derive(clap::ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    Roundtrip,
    Nogo,
    Oracle,
    Nonintegrability,
    Calibration,
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    #[arg(value_enum)]
    pub name: SuiteName,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    /// Trials, graphs or groups, depending on the suite.
    #[arg(long)]
    pub trials: Option<u64>,
    /// Qubit count (roundtrip, nonintegrability).
    #[arg(long)]
    pub n: Option<usize>,
    /// Model (roundtrip).
    #[arg(long)]
    pub model: Option<String>,
}

/// Where files go and whether timings are recorded.
pub struct Context {
    pub out: Option<PathBuf>,
    pub timing: bool,
}

impl Context {
    fn dir(&self) -> &Path {
        self.out.as_deref().unwrap_or(Path::new("."))
    }

    fn write(&self, name: &str, contents: &str) -> Result<PathBuf> {
        let path = self.dir().join(name);
        io::atomic_write(&path, contents.as_bytes())?;
        Ok(path)
    }

    /// Writes `name` only when an output directory was requested.
    fn write_if_requested(&self, name: &str, contents: &str) -> Result<()> {
        if self.out.is_some() {
            self.write(name, contents)?;
        }
        Ok(())
    }

    fn timing(&self, start: Instant) -> Value {
        if self.timing {
            json!({ "seconds": F17(start.elapsed().as_secs_f64()) })
        } else {
            Value::Null
        }
    }
}

/// Outcome of a subcommand: the stdout document and an optional failure
/// to report after printing it.
pub struct Outcome {
    pub document: String,
    pub failure: Option<Error>,
}

impl Outcome {
    fn ok(v: &impl Serialize) -> Self {
        Outcome { document: to_pretty(v), failure: None }
    }
}

fn factorization_json(f: &Factorization) -> Value {
    json!({ "g": f.g.to_string(), "p": f.p.to_string(), "q": f.q.to_string(), "a": f.a.to_string() })
}

fn gauss_json(z: &GaussRational) -> Value {
    if z.is_real() {
        json!(format_rational(&z.re))
    } else {
        json!({ "re": format_rational(&z.re), "im": format_rational(&z.im) })
    }
}

fn support_json(a: &Support) -> Value {
    json!(a.iter().map(|s| s + 1).collect::<Vec<_>>())
}

fn parse_subset(text: &str, n: usize) -> Result<Support> {
    let mut sites = Vec::new();
    for part in text.split(',') {
        let v: usize = part.trim().parse().map_err(|_| Error::Config(format!("bad site `{part}` in --subset")))?;
        if v == 0 || v > n {
            return Err(Error::Config(format!("site {v} outside 1..={n}")));
        }
        sites.push(v - 1);
    }
    Ok(Support::new(sites))
}

pub fn cmd_mite(args: &MiteArgs, ctx: &Context) -> Result<Outcome> {
    let start = Instant::now();
    let t = args.source.tableau()?;
    let n = t.n_qubits();
    let check = |v: usize, what: &str| {
        if v == 0 || v > n {
            Err(Error::Config(format!("{what} = {v} outside 1..={n}")))
        } else {
            Ok(v)
        }
    };
    let verdict = match (args.k, args.l, &args.subset) {
        (Some(k), None, None) => mite::k_body_mite(&t, check(k, "k")?),
        (None, Some(l), None) => mite::l_local_mite(&t, check(l, "l")?),
        (None, None, Some(s)) => mite::is_mite_on(&t, &parse_subset(s, n)?),
        _ => return Err(Error::Config("give exactly one of --k, --l, --subset".to_string())),
    };
    let witness = verdict.violating_witness.as_ref().map(|(a, g)| json!({ "subsystem": support_json(a), "element": g.to_string() }));
    let doc = json!({
        "property": verdict.property.to_string(),
        "holds": verdict.holds,
        "witness": witness,
        "delta_G": t.distance(),
        "timing": ctx.timing(start),
    });
    let text = to_pretty(&doc);
    ctx.write_if_requested("mite.json", &text)?;
    Ok(Outcome { document: text, failure: None })
}

pub fn cmd_synth(args: &SynthArgs, ctx: &Context) -> Result<Outcome> {
    let t = args.source.tableau()?;
    let n = t.n_qubits();
    if args.m == 0 || args.m > n {
        return Err(Error::Config(format!("m = {} outside 1..={n}", args.m)));
    }
    let fs = real_bundles(&enumerate_factorizations(&t, args.m));
    let bundle = args.source.bundle()?;
    let mut provenance = Vec::new();
    let h = match bundle.filter(|b| !args.all && !b.bundles.is_empty()) {
        Some(b) => {
            // Each model coupling multiplies one translation orbit of bundles.
            let orbits = translation_orbits(&fs);
            let mut chosen = Vec::new();
            let mut coeffs = Vec::new();
            for (f, (_, c)) in b.bundles.iter().zip(&b.couplings) {
                let k = find_orbit(&orbits, &f.p, &f.q)
                    .ok_or_else(|| Error::Config(format!("bundle {} - a {} not among factorizations", f.p, f.q)))?;
                chosen.push(orbits[k].clone());
                coeffs.push(c.clone());
            }
            for (o, c) in chosen.iter().zip(&coeffs) {
                for f in o {
                    provenance.push((f.clone(), c.clone()));
                }
            }
            assemble_orbits(n, &chosen, &coeffs)?
        }
        None => {
            if fs.is_empty() {
                return Err(Error::Config(format!("no a = ±1 factorizations with m = {}", args.m)));
            }
            let orbits = if t.is_translation_invariant() { translation_orbits(&fs) } else { fs.iter().map(|f| vec![f.clone()]).collect() };
            let mut rng = args.seed.map(|s| suites::trial_rng(s, 0));
            let coeffs: Vec<Coeff> = orbits
                .iter()
                .map(|_| match &mut rng {
                    Some(r) => suites::random_coefficient(r),
                    None => stabtherm_core::coeff::one(),
                })
                .collect();
            for (o, c) in orbits.iter().zip(&coeffs) {
                for f in o {
                    provenance.push((f.clone(), c.clone()));
                }
            }
            assemble_orbits(n, &orbits, &coeffs)?
        }
    };
    let ham_text = io::write_hamiltonian(&h);
    let doc = json!({
        "n": n,
        "m": args.m,
        "seed": args.seed,
        "bundles": provenance.iter().map(|(f, c)| {
            let mut v = factorization_json(f);
            v["coefficient"] = json!(format_rational(c));
            v
        }).collect::<Vec<_>>(),
        "hamiltonian_terms": h.len(),
        "locality": h.locality(),
        "zero_energy": parent::verify_zero_eigenstate(&h, &t)?,
    });
    let text = to_pretty(&doc);
    ctx.write("hamiltonian.txt", &ham_text)?;
    ctx.write("synth.json", &text)?;
    Ok(Outcome { document: text, failure: None })
}

fn load_hamiltonian(path: Option<&Path>, source: &Source, n: usize) -> Result<PauliHamiltonian> {
    match path {
        Some(p) => {
            let h = io::parse_hamiltonian(&io::read_to_string(p)?, Some(n))?;
            Ok(h)
        }
        None => {
            source.bundle()?.and_then(|b| b.hamiltonian).ok_or_else(|| Error::Config("need --hamiltonian (the model has none)".to_string()))
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs, ctx: &Context) -> Result<Outcome> {
    let t = args.source.tableau()?;
    let h = load_hamiltonian(args.hamiltonian.as_deref(), &args.source, t.n_qubits())?;
    let (mean, second) = energy_moments(&h, &t)?;
    let zero = mean.is_zero() && second.is_zero();
    let certificate = if args.certificate && zero {
        let cert = parent::decompose(&h, &t)?;
        let classes: Vec<Value> = cert
            .class_table
            .iter()
            .map(|(rep, e)| {
                json!({
                    "representative": rep.to_string(),
                    "n_p": e.n_p.to_string(),
                    "members": e.members.iter().map(|(p, c, a)| json!({
                        "pauli": p.to_string(), "coefficient": format_rational(c), "a": a.to_string(),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        let c_values: Vec<Value> =
            cert.c_values.iter().map(|((p, q), c)| json!({ "p": p.to_string(), "q": q.to_string(), "c": gauss_json(c) })).collect();
        let reconstructed = cert.reconstruct(&t)? == h;
        Some(json!({ "classes": classes, "c_values": c_values, "reconstructs_input": reconstructed }))
    } else {
        None
    };
    let doc = json!({
        "n": t.n_qubits(),
        "terms": h.len(),
        "zero_energy": zero,
        "mean": gauss_json(&mean),
        "second_moment": gauss_json(&second),
        "certificate": certificate,
    });
    let text = to_pretty(&doc);
    ctx.write_if_requested("verify.json", &text)?;
    let failure = (!zero).then(|| Error::ClaimFailed("the state is not a zero-energy eigenstate".to_string()));
    Ok(Outcome { document: text, failure })
}

fn sector_file_tag(s: &SymmetrySpec) -> String {
    s.to_string().replace('=', "").replace(',', "_")
}

pub fn cmd_spectrum(args: &SpectrumArgs, ctx: &Context) -> Result<Outcome> {
    let h = match (&args.hamiltonian, args.source.model.is_some() || args.source.tableau.is_some()) {
        (Some(p), _) => io::parse_hamiltonian(&io::read_to_string(p)?, args.source.n)?,
        (None, true) => load_hamiltonian(None, &args.source, 0)?,
        (None, false) => return Err(Error::Config("need --model or --hamiltonian".to_string())),
    };
    let n = h.n_qubits();
    let sectors: Vec<SymmetrySpec> = match &args.pool {
        Some(flips) => {
            let f: SymmetrySpec = flips.parse()?;
            if f.momentum.is_some() || f.inversion.is_some() {
                return Err(Error::Config("--pool takes only px/pz".to_string()));
            }
            spectral::pooling_sectors(n, f.spin_flip_x, f.spin_flip_z, true)
        }
        None => vec![args.sector.parse()?],
    };
    let mut reports = Vec::new();
    for s in &sectors {
        let basis = spectral::sector_basis(n, s)?;
        let ev = spectral::eigenvalues(&h, &basis, args.dimension_limit)?;
        ctx.write(&format!("eigenvalues_{}.csv", sector_file_tag(s)), &spectral::eigenvalues_csv(&ev))?;
        reports.push((s.to_string(), spectral::r_statistics(&ev, args.central_fraction)?));
    }
    let all_r: Vec<f64> = reports.iter().flat_map(|(_, r)| r.r()).collect();
    ctx.write("r_histogram.csv", &spectral::histogram_csv(&spectral::histogram(&all_r, args.bins.max(1))))?;
    let plain: Vec<_> = reports.iter().map(|(_, r)| r.clone()).collect();
    let doc = json!({
        "N": n,
        "sector": if args.pool.is_some() { format!("pooled {}", args.pool.as_deref().unwrap_or("")) } else { sectors[0].to_string() },
        "dimension": plain.iter().map(|r| r.sector_dimension).sum::<usize>(),
        "mean_r_tilde": F17(spectral::pooled_mean(&plain)),
        "degeneracy_count": plain.iter().map(|r| r.degeneracy_count).sum::<usize>(),
        "r_count": all_r.len(),
        "central_fraction": F17(args.central_fraction),
        "goe_reference": F17(spectral::GOE_MEAN),
        "poisson_reference": F17(spectral::poisson_mean()),
        "sectors": reports.iter().map(|(name, r)| json!({
            "sector": name,
            "dimension": r.sector_dimension,
            "mean_r_tilde": r.mean_r_tilde,
            "degeneracy_count": r.degeneracy_count,
            "r_count": r.r_values.len(),
        })).collect::<Vec<_>>(),
    });
    let text = to_pretty(&doc);
    ctx.write("spectrum.json", &text)?;
    Ok(Outcome { document: text, failure: None })
}

fn no_go_json(r: &stabtherm_core::NoGoReport) -> Value {
    json!({
        "n": r.n,
        "m": r.m,
        "delta": r.delta,
        "factorization_count": r.factorization_count,
        "mite_ceiling": r.mite_ceiling,
        "witness": r.witness.as_ref().map(factorization_json),
        "consistent": r.consistent,
    })
}

pub fn cmd_audit(args: &AuditArgs, ctx: &Context) -> Result<Outcome> {
    use rayon::prelude::*;
    let (doc, consistent) = match (args.groups, args.random_n) {
        (Some(groups), Some(n)) => {
            if args.m == 0 || args.m > n {
                return Err(Error::Config(format!("m = {} outside 1..={n}", args.m)));
            }
            let reports: Vec<_> = (0..groups)
                .into_par_iter()
                .map(|i| parent::no_go_audit(&StabilizerTableau::random(n, &mut suites::trial_rng(args.seed, i)), args.m))
                .collect();
            let consistent = reports.iter().all(|r| r.consistent);
            let doc = json!({
                "seed": args.seed,
                "n": n,
                "m": args.m,
                "groups": groups,
                "with_factorizations": reports.iter().filter(|r| r.factorization_count > 0).count(),
                "consistent": consistent,
                "reports": reports.iter().map(no_go_json).collect::<Vec<_>>(),
            });
            (doc, consistent)
        }
        (None, None) => {
            let t = args.source.tableau()?;
            if args.m == 0 || args.m > t.n_qubits() {
                return Err(Error::Config(format!("m = {} outside 1..={}", args.m, t.n_qubits())));
            }
            let r = parent::no_go_audit(&t, args.m);
            (no_go_json(&r), r.consistent)
        }
        _ => return Err(Error::Config("--random-n needs --groups".to_string())),
    };
    let text = to_pretty(&doc);
    ctx.write_if_requested("audit.json", &text)?;
    let failure = (!consistent).then(|| Error::ClaimFailed("factorizations found although δ > 2m".to_string()));
    Ok(Outcome { document: text, failure })
}

pub fn cmd_models(cmd: &ModelsCommand, ctx: &Context) -> Result<Outcome> {
    match cmd {
        ModelsCommand::List => Ok(Outcome::ok(&json!({ "models": models::MODEL_NAMES }))),
        ModelsCommand::Export(a) => {
            let b = a.source().bundle()?.expect("model given");
            let stem = format!("{}_N{}", b.name, b.n_qubits());
            let mut files = vec![ctx.write(&format!("{stem}.tableau"), &io::write_tableau(&b.tableau))?];
            if let Some(g) = &b.graph {
                files.push(ctx.write(&format!("{stem}.graph"), &io::write_graph(g))?);
                files.push(ctx.write(&format!("{stem}.dot"), &io::graph_to_dot(g, &b.name))?);
            }
            if let Some(h) = &b.hamiltonian {
                files.push(ctx.write(&format!("{stem}.ham"), &io::write_hamiltonian(h))?);
            }
            Ok(Outcome::ok(&json!({
                "model": b.name,
                "n": b.n_qubits(),
                "couplings": b.couplings.iter().map(|(k, v)| json!({ "name": k, "value": format_rational(v) })).collect::<Vec<_>>(),
                "files": files.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
            })))
        }
        ModelsCommand::Check(a) => {
            let b = a.source().bundle()?.expect("model given");
            let outcomes = b.check_claims()?;
            let failed: Vec<String> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.claim.kind.to_string()).collect();
            let doc = json!({
                "model": b.name,
                "n": b.n_qubits(),
                "claims": outcomes.iter().map(|o| json!({
                    "claim": o.claim.kind.to_string(),
                    "expected": o.claim.expected,
                    "observed": o.observed,
                    "passed": o.passed(),
                    "source": o.claim.source,
                })).collect::<Vec<_>>(),
            });
            let failure = (!failed.is_empty()).then(|| Error::ClaimFailed(failed.join("; ")));
            Ok(Outcome { document: to_pretty(&doc), failure })
        }
    }
}

pub fn cmd_suite(args: &SuiteArgs, ctx: &Context) -> Result<Outcome> {
    let seed = args.seed;
    let (name, text) = match args.name {
        SuiteName::Roundtrip => {
            let model = args.model.as_deref().unwrap_or("g1");
            let n = args.n.unwrap_or(if model == "g1" { 10 } else { 9 });
            ("roundtrip", to_pretty(&suites::round_trip(model, n, args.trials.unwrap_or(100), seed)?))
        }
        SuiteName::Nogo => ("nogo", to_pretty(&suites::no_go_suite(&[8, 10], 100, args.trials.unwrap_or(20_000), 100, seed))),
        SuiteName::Oracle => ("oracle", to_pretty(&suites::oracle_equivalence(args.trials.unwrap_or(500), 10, seed)?)),
        SuiteName::Nonintegrability => {
            let (summary, reports) = suites::nonintegrability(args.n.unwrap_or(14), 0.5)?;
            let all_r: Vec<f64> = reports.iter().flat_map(|(_, r)| r.r()).collect();
            ctx.write("nonintegrability_histogram.csv", &spectral::histogram_csv(&spectral::histogram(&all_r, 20)))?;
            ("nonintegrability", to_pretty(&summary))
        }
        SuiteName::Calibration => {
            let m = args.trials.unwrap_or(20) as usize;
            ("calibration", to_pretty(&suites::calibration(m, 1000, m, 1000, 1.0, seed)?))
        }
    };
    ctx.write(&format!("{name}.json"), &text)?;
    Ok(Outcome { document: text, failure: None })
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let ctx = Context { out: cli.out.clone(), timing: cli.timing };
    match &cli.command {
        Command::Mite(a) => cmd_mite(a, &ctx),
        Command::Synth(a) => cmd_synth(a, &ctx),
        Command::Verify(a) => cmd_verify(a, &ctx),
        Command::Spectrum(a) => cmd_spectrum(a, &ctx),
        Command::Audit(a) => cmd_audit(a, &ctx),
        Command::Models(m) => cmd_models(m, &ctx),
        Command::Suite(a) => cmd_suite(a, &ctx),
    }
}

fn with_override(cmd: clap::Command) -> clap::Command {
    let names: Vec<String> = cmd.get_subcommands().map(|s| s.get_name().to_string()).collect();
    let mut cmd = cmd.args_override_self(true);
    for name in names {
        cmd = cmd.mut_subcommand(name, with_override);
    }
    cmd
}

/// Flags from a `key = value` file, as `--key=value` tokens.
pub fn config_flags(text: &str) -> Result<Vec<String>> {
    let table: toml::Table = text.parse().map_err(|e: toml::de::Error| Error::Config(format!("config: {e}")))?;
    let mut out = Vec::new();
    for (key, value) in table {
        let flag = format!("--{}", key.replace('_', "-"));
        match value {
            toml::Value::Boolean(true) => out.push(flag),
            toml::Value::Boolean(false) => {}
            toml::Value::String(s) => out.push(format!("{flag}={s}")),
            toml::Value::Integer(i) => out.push(format!("{flag}={i}")),
            toml::Value::Float(x) => out.push(format!("{flag}={x}")),
            other => return Err(Error::Config(format!("config key `{key}`: unsupported value {other}"))),
        }
    }
    Ok(out)
}

/// Inserts config-file flags right after the subcommand path so that
/// flags given on the command line override them.
fn expand_config(args: Vec<String>) -> Result<Vec<String>> {
    let mut path = None;
    for (i, a) in args.iter().enumerate() {
        if a == "--config" {
            path = args.get(i + 1).cloned();
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        }
    }
    let Some(path) = path else { return Ok(args) };
    let flags = config_flags(&io::read_to_string(Path::new(&path))?)?;
    let root = Cli::command();
    let mut cmd = &root;
    let mut insert_at = 1;
    for (i, a) in args.iter().enumerate().skip(1) {
        if a.starts_with('-') {
            continue;
        }
        if let Some(sub) = cmd.find_subcommand(a) {
            cmd = sub;
            insert_at = i + 1;
        }
    }
    let mut out = args;
    out.splice(insert_at..insert_at, flags);
    Ok(out)
}

fn error_document(e: &Error) -> String {
    to_pretty(&json!({ "error": { "kind": e.kind(), "message": e.to_string(), "exit_code": e.exit_code() } }))
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn main_with_args(args: Vec<OsString>) -> i32 {
    let args: Vec<String> = args.into_iter().map(|a| a.to_string_lossy().into_owned()).collect();
    let args = match expand_config(args) {
        Ok(a) => a,
        Err(e) => {
            eprint!("{}", error_document(&e));
            return e.exit_code();
        }
    };
    let matches = match with_override(Cli::command()).try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            let e = Error::Config("--threads must be positive".to_string());
            eprint!("{}", error_document(&e));
            return e.exit_code();
        }
        // A second initialization only happens in tests; keep the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.document);
            match outcome.failure {
                Some(e) => {
                    eprint!("{}", error_document(&e));
                    e.exit_code()
                }
                None => 0,
            }
        }
        Err(e) => {
            eprint!("{}", error_document(&e));
            e.exit_code()
        }
    }
}
