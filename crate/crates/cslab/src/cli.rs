use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use cslab_core::abelian::FinAbGroup;
use cslab_core::cohomology::{
    coboundary, coboundary_witness, compute_cohomology, compute_h2sym_carrier, compute_z1, trivial_decomposition,
    verify_cocycle, Cochain2, CohomologyGroup, COHOMOLOGY_BOUND,
};
use cslab_core::dynamical::{
    build_dynamical_cs, build_dynamical_extension, verify_bigroupoid_product, verify_dynamical_cs,
    verify_dynamical_lcs,
};
use cslab_core::extension::build_extension;
use cslab_core::oracle;
use cslab_core::structures::{
    bigroupoid_ybe_equivalence, enumerate_cycle_sets, enumerate_lcs, verify_nondegenerate, LinearCycleSet,
    LCS_ORDER_BOUND,
};
use cslab_core::wells::{
    comparison_diagram, enumerate_aut_a_e, group_wells, orbit_bound_with, theta_difference_with, verify_theta_with,
    verify_wells, ActionTable, GroupWellsInstance, WellsInstance, WELLS_BOUND,
};
use cslab_core::Error;
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};
use crate::json::{
    elements, read_json, CochainFile, DynamicalFile, ExtensionFile, GroupFile, Kind, StructureFile,
};
use crate::report;

pub const MAX_ORDER_ENV: &str = "CSLAB_MAX_ORDER";

#[derive(Debug, Parser)]
#[command(name = "cslab", version, about = "Linear cycle sets, their central extensions and Wells sequences")]
pub struct Cli {
    /// Write the JSON report to this file instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Replace every size cap by this bound on |X|·|A| (or on the structure size).
    #[arg(long, global = true, value_name = "N")]
    pub max_order: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the axioms of a structure, optionally together with a 2-cocycle on it.
    Check {
        structure: PathBuf,
        #[arg(long, requires = "coefficients")]
        cocycle: Option<PathBuf>,
        #[arg(long, requires = "cocycle")]
        coefficients: Option<PathBuf>,
    },
    /// Z², B², H² and Z¹ of a linear cycle set.
    Cohomology {
        x: PathBuf,
        a: PathBuf,
        /// Also recompute everything by exhaustive search and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Build the central extension of a cocycle.
    Extend { x: PathBuf, a: PathBuf, cocycle: PathBuf },
    /// Read back the cocycle of an extension through a section.
    Extract {
        extension: PathBuf,
        /// JSON array `s` with `π(s(x)) = x`; defaults to the section in the file.
        #[arg(long)]
        section: Option<PathBuf>,
    },
    /// Certificate for the exact sequence of the extension of a cocycle.
    Wells { x: PathBuf, a: PathBuf, cocycle: PathBuf },
    /// Action of Aut(X) × Aut(A) on H², the Wells map and the orbit of a class.
    Act { x: PathBuf, a: PathBuf, cocycle: PathBuf },
    /// Verify a dynamical cocycle over a cycle set or linear cycle set.
    Dynamical {
        x: PathBuf,
        maps: PathBuf,
        /// Include the product table when the verdict passes.
        #[arg(long)]
        build: bool,
    },
    /// List every linear cycle set on a group, or every cycle set of a given size.
    #[command(group(ArgGroup::new("source").required(true).args(["a", "cycle_sets"])))]
    Enumerate {
        a: Option<PathBuf>,
        #[arg(long, value_name = "N")]
        cycle_sets: Option<usize>,
    },
    /// Compare the sequence of a linear cycle set with that of its additive group.
    CompareWells { x: PathBuf, a: PathBuf, cocycle: PathBuf },
    /// Brute-force recomputations diffed against the main pipeline.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Every cochain pair against Z², B² and |H²|.
    Cohomology { x: PathBuf, a: PathBuf },
    /// Every bijection of E against the lifted automorphisms.
    Aut { x: PathBuf, a: PathBuf, cocycle: PathBuf },
    /// Every map X → A against Z¹.
    Z1 { x: PathBuf, a: PathBuf },
    /// Every normalised λ against the coboundary solver.
    Coboundary { x: PathBuf, a: PathBuf, cocycle: PathBuf },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Cohomology { .. } => "cohomology",
            Command::Extend { .. } => "extend",
            Command::Extract { .. } => "extract",
            Command::Wells { .. } => "wells",
            Command::Act { .. } => "act",
            Command::Dynamical { .. } => "dynamical",
            Command::Enumerate { .. } => "enumerate",
            Command::CompareWells { .. } => "compare-wells",
            Command::Oracle { .. } => "oracle",
        }
    }
}

/// Size caps; all of them are replaced at once by `--max-order` or the environment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub cohomology: usize,
    pub wells: usize,
    pub oracle: usize,
    pub lcs_order: usize,
    pub cycle_sets: usize,
}

/// Default cap on `|X|·|A|` (or `|E|`) for brute-force comparisons.
pub const ORACLE_BOUND: usize = 8;
/// Default cap on the size for cycle set enumeration.
pub const CYCLE_SET_BOUND: usize = 4;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            cohomology: COHOMOLOGY_BOUND,
            wells: WELLS_BOUND,
            oracle: ORACLE_BOUND,
            lcs_order: LCS_ORDER_BOUND,
            cycle_sets: CYCLE_SET_BOUND,
        }
    }
}

impl Caps {
    pub fn uniform(n: usize) -> Self {
        Caps { cohomology: n, wells: n, oracle: n, lcs_order: n, cycle_sets: n }
    }
}

/// Exit code plus the JSON report.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
}

/// Parses `argv`, runs the command and writes the report. Returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let caps = match resolve_caps(cli.max_order, std::env::var(MAX_ORDER_ENV).ok().as_deref()) {
        Ok(caps) => caps,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let outcome = execute(&cli.command, &caps);
    if let Some(msg) = outcome.report.get("error").and_then(Value::as_str) {
        eprintln!("cslab {}: {msg}", cli.command.name());
    }
    let mut text = serde_json::to_string_pretty(&outcome.report).expect("reports serialise");
    text.push('\n');
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("cannot write report: {e}");
        return 2;
    }
    outcome.code
}

/// The flag wins over the environment; either one prints a warning.
pub fn resolve_caps(flag: Option<usize>, env: Option<&str>) -> CliResult<Caps> {
    let bound = match (flag, env) {
        (Some(n), _) => Some(n),
        (None, Some(v)) => Some(
            v.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Invalid(format!("{MAX_ORDER_ENV}={v} is not a non-negative integer")))?,
        ),
        (None, None) => None,
    };
    Ok(match bound {
        Some(n) => {
            eprintln!("warning: size caps overridden to {n}; large instances may take a long time");
            Caps::uniform(n)
        }
        None => Caps::default(),
    })
}

/// Runs one command. Never panics on bad input.
pub fn execute(command: &Command, caps: &Caps) -> Outcome {
    let mut body = Map::new();
    body.insert("command".into(), json!(command.name()));
    let (code, status) = match dispatch(command, caps) {
        Ok((pass, Value::Object(fields))) => {
            body.extend(fields);
            if pass { (0, "pass") } else { (1, "fail") }
        }
        Ok((pass, other)) => {
            body.insert("result".into(), other);
            if pass { (0, "pass") } else { (1, "fail") }
        }
        Err(CliError::Property(f)) => {
            body.insert("failure".into(), report::failure(&f));
            (1, "fail")
        }
        Err(e) => {
            body.insert("error".into(), json!(e.to_string()));
            (e.exit_code(), "error")
        }
    };
    body.insert("status".into(), json!(status));
    Outcome { code, report: Value::Object(body) }
}

type Step = CliResult<(bool, Value)>;

fn dispatch(command: &Command, caps: &Caps) -> Step {
    match command {
        Command::Check { structure, cocycle, coefficients } => check(structure, cocycle.as_deref(), coefficients.as_deref()),
        Command::Cohomology { x, a, oracle } => cohomology(x, a, *oracle, caps),
        Command::Extend { x, a, cocycle } => extend(x, a, cocycle),
        Command::Extract { extension, section } => extract(extension, section.as_deref()),
        Command::Wells { x, a, cocycle } => wells(x, a, cocycle, caps),
        Command::Act { x, a, cocycle } => act(x, a, cocycle, caps),
        Command::Dynamical { x, maps, build } => dynamical(x, maps, *build),
        Command::Enumerate { a, cycle_sets } => enumerate(a.as_deref(), *cycle_sets, caps),
        Command::CompareWells { x, a, cocycle } => compare_wells(x, a, cocycle, caps),
        Command::Oracle { which } => match which {
            OracleCommand::Cohomology { x, a } => oracle_cohomology(x, a, caps),
            OracleCommand::Aut { x, a, cocycle } => oracle_aut(x, a, cocycle, caps),
            OracleCommand::Z1 { x, a } => oracle_z1(x, a, caps),
            OracleCommand::Coboundary { x, a, cocycle } => oracle_coboundary(x, a, cocycle, caps),
        },
    }
}

fn load_lcs(path: &Path) -> CliResult<LinearCycleSet> {
    read_json::<StructureFile>(path)?.to_lcs()
}

fn load_group(path: &Path) -> CliResult<FinAbGroup> {
    read_json::<GroupFile>(path)?.to_group()
}

fn load_cochain(path: &Path, x: &LinearCycleSet, a: &FinAbGroup) -> CliResult<Cochain2> {
    read_json::<CochainFile>(path)?.to_cochain(x.size(), a)
}

/// Loads `(X, A, c)` and insists that `c` is a normalised cocycle.
fn load_cocycle(x: &Path, a: &Path, c: &Path) -> CliResult<(LinearCycleSet, FinAbGroup, Cochain2)> {
    let (x, a) = (load_lcs(x)?, load_group(a)?);
    let c = load_cochain(c, &x, &a)?;
    verify_cocycle(&x, &c)??;
    Ok((x, a, c))
}

fn within(size: usize, bound: usize) -> CliResult<()> {
    if size > bound {
        return Err(Error::SizeBound { size, bound }.into());
    }
    Ok(())
}

fn group_summary(g: &CohomologyGroup) -> Value {
    json!({ "order": g.order(), "invariant_factors": g.invariant_factors() })
}

fn check(path: &Path, cocycle: Option<&Path>, coefficients: Option<&Path>) -> Step {
    let s: StructureFile = read_json(path)?;
    let v = s.verify()?;
    let mut out = json!({ "kind": s.kind, "verdict": report::verdict(&v) });
    let mut pass = v.is_ok();
    match s.kind {
        Kind::Bigroupoid => {
            let (braid, conditions) = bigroupoid_ybe_equivalence(&s.to_bigroupoid()?)?;
            out["conditions"] = report::verdict(&conditions);
            out["equivalence"] = json!(braid.is_ok() == conditions.is_ok());
        }
        Kind::Cycleset if pass => {
            out["nondegenerate"] = report::verdict(&verify_nondegenerate(&s.to_cycle_set()?));
        }
        _ => {}
    }
    if let (Some(c), Some(a)) = (cocycle, coefficients) {
        if !pass {
            return Ok((false, out));
        }
        let x = s.to_lcs()?;
        let a = load_group(a)?;
        let cv = verify_cocycle(&x, &load_cochain(c, &x, &a)?)?;
        pass = cv.is_ok();
        out["cocycle"] = report::verdict(&cv);
    }
    Ok((pass, out))
}

fn cohomology(x: &Path, a: &Path, with_oracle: bool, caps: &Caps) -> Step {
    let (x, a) = (load_lcs(x)?, load_group(a)?);
    let (z2, b2, h2) = compute_cohomology(&x, &a, caps.cohomology)?;
    let z1 = compute_z1(&x, &a)?;
    let generators: Vec<CochainFile> = (0..h2.structure().rank())
        .map(|j| {
            let mut unit = vec![0; h2.structure().rank()];
            unit[j] = 1;
            h2.lift(&unit).map(|c| CochainFile::from_cochain(&c))
        })
        .collect::<Result<_, _>>()?;
    let mut out = json!({
        "x_size": x.size(),
        "a_factors": a.invariant_factors(),
        "z2": group_summary(&z2),
        "b2": group_summary(&b2),
        "h2": group_summary(&h2),
        "h2_generators": generators,
        "z1": group_summary(&z1),
    });
    if x.is_trivial() {
        let h2sym = compute_h2sym_carrier(x.carrier(), &a)?;
        let d = trivial_decomposition(&x, &h2, &h2sym)?;
        if !(d.isomorphism && d.lambda_is_projection) {
            return Err(CliError::Internal("the decomposition of H² for a trivial X does not hold".into()));
        }
        out["decomposition"] = json!({
            "h2_order": d.h2_order,
            "bilin_order": d.bilin_order,
            "bilin_factors": d.bilin_factors,
            "h2sym_order": d.h2sym_order,
            "isomorphism": d.isomorphism,
            "lambda_is_projection": d.lambda_is_projection,
        });
    }
    let mut pass = true;
    if with_oracle {
        let (agree, report) = cohomology_oracle(&x, &a, &z2, &b2, &h2, caps)?;
        out["oracle"] = report;
        pass = agree;
    }
    Ok((pass, out))
}

fn cohomology_oracle(
    x: &LinearCycleSet,
    a: &FinAbGroup,
    z2: &CohomologyGroup,
    b2: &CohomologyGroup,
    h2: &CohomologyGroup,
    caps: &Caps,
) -> CliResult<(bool, Value)> {
    within(x.size() * a.order(), caps.oracle)?;
    let o = oracle::cohomology(x, a)?;
    let n = x.size();
    let flat = |(f, g): &(Vec<usize>, Vec<usize>)| Cochain2::new(n, a.clone(), f.clone(), g.clone()).map(|c| c.to_flat());
    let mut stray = None;
    for pair in &o.cocycles {
        if !z2.contains_flat(&flat(pair)?) {
            stray = Some(pair.clone());
            break;
        }
    }
    let mut stray_boundary = None;
    for pair in &o.coboundaries {
        if !b2.contains_flat(&flat(pair)?) {
            stray_boundary = Some(pair.clone());
            break;
        }
    }
    let agree = o.cocycles.len() == z2.order()
        && o.coboundaries.len() == b2.order()
        && o.h2_order == h2.order()
        && stray.is_none()
        && stray_boundary.is_none();
    let as_file = |(f, g): (Vec<usize>, Vec<usize>)| -> CliResult<CochainFile> {
        Ok(CochainFile::from_cochain(&Cochain2::new(n, a.clone(), f, g)?))
    };
    Ok((
        agree,
        json!({
            "z2_order": o.cocycles.len(),
            "b2_order": o.coboundaries.len(),
            "h2_order": o.h2_order,
            "agree": agree,
            "cocycle_outside_z2": stray.map(as_file).transpose()?,
            "coboundary_outside_b2": stray_boundary.map(as_file).transpose()?,
        }),
    ))
}

fn extend(x: &Path, a: &Path, c: &Path) -> Step {
    let (x, a, c) = load_cocycle(x, a, c)?;
    let ext = build_extension(&x, &a, &c)?;
    Ok((true, serde_json::to_value(ExtensionFile::from_extension(&ext))?))
}

fn extract(path: &Path, section: Option<&Path>) -> Step {
    let file: ExtensionFile = read_json(path)?;
    let ext = file.to_extension()?;
    let s = match (section, &file.section) {
        (Some(p), _) => read_json::<Vec<usize>>(p)?,
        (None, Some(s)) => s.clone(),
        (None, None) => ext.section().to_vec(),
    };
    let (c, normalised) = cslab_core::extension::extract_cocycle(&ext, &s)?;
    let mut out = json!({ "section": s, "normalised": normalised, "cocycle": CochainFile::from_cochain(&c) });
    if normalised {
        out["verdict"] = report::verdict(&verify_cocycle(ext.base(), &c)?);
    }
    Ok((true, out))
}

/// The instance and the class of the cocycle in `H²`.
fn wells_input(x: &Path, a: &Path, c: &Path, caps: &Caps) -> CliResult<(WellsInstance, Cochain2, Vec<i64>)> {
    let (x, a, c) = load_cocycle(x, a, c)?;
    let inst = WellsInstance::new(&x, &a, caps.wells)?;
    let base = inst.h2.reduce(&c)?;
    Ok((inst, c, base))
}

fn wells(x: &Path, a: &Path, c: &Path, caps: &Caps) -> Step {
    let (inst, _, base) = wells_input(x, a, c, caps)?;
    let cert = verify_wells(&inst, &base)?;
    Ok((cert.is_valid(), report::wells_certificate(&cert, &inst.a)))
}

fn act(x: &Path, a: &Path, c: &Path, caps: &Caps) -> Step {
    let (inst, _, base) = wells_input(x, a, c, caps)?;
    let table = ActionTable::new(&inst)?;
    let b = inst.h2.structure().index(&base);
    let theta = table.theta(&inst, b);
    let pairs: Vec<Value> = inst
        .pairs
        .iter()
        .enumerate()
        .map(|(p, pair)| {
            json!({
                "phi": pair.phi,
                "theta": pair.theta_permutation(),
                "image": table.classes[table.act[p][b]],
                "wells": table.classes[theta[p]],
            })
        })
        .collect();
    let laws = verify_theta_with(&inst, &table, &base)?;
    let orbit = orbit_bound_with(&inst, &table, &base)?;
    let mut failing = None;
    for other in &table.classes {
        let d = theta_difference_with(&inst, &table, &base, other)?;
        if !d.holds {
            failing = Some(other.clone());
            break;
        }
    }
    let pass = laws.holds() && orbit.orbit_stabiliser && orbit.bound && failing.is_none();
    Ok((
        pass,
        json!({
            "base": base,
            "h2_factors": inst.h2.invariant_factors(),
            "pairs": pairs,
            "theta_laws": report::theta_report(&laws),
            "orbit": report::orbit_report(&orbit),
            "differences": { "holds": failing.is_none(), "first_failure": failing },
        }),
    ))
}

fn compare_wells(x: &Path, a: &Path, c: &Path, caps: &Caps) -> Step {
    let (inst, c, base) = wells_input(x, a, c, caps)?;
    let diagram = comparison_diagram(&inst, &base)?;
    let group = GroupWellsInstance::new(inst.x.carrier(), &inst.a)?;
    let cert = group_wells(&group, &c)?;
    Ok((
        diagram.commutes() && cert.is_valid(),
        json!({
            "base": base,
            "diagram": report::comparison(&diagram),
            "group_certificate": report::group_wells_certificate(&cert, &inst.a),
        }),
    ))
}

fn dynamical(x: &Path, maps: &Path, build: bool) -> Step {
    let s: StructureFile = read_json(x)?;
    let maps: DynamicalFile = read_json(maps)?;
    if let Some(beta) = maps.beta()? {
        let alpha = maps.alpha()?;
        let size = match s.kind {
            Kind::Lcs => s.to_lcs()?.size(),
            _ => s.to_cycle_set()?.size(),
        };
        if alpha.outer() != size {
            return Err(CliError::Invalid(format!("alpha is indexed by {} elements, X has {size}", alpha.outer())));
        }
        let d = verify_bigroupoid_product(&alpha, &beta)?;
        return Ok((d.verdict().is_ok(), json!({ "mode": "bigroupoid", "report": report::dynamical(&d) })));
    }
    let (d, product, mode) = match s.kind {
        Kind::Lcs => {
            let x = s.to_lcs()?;
            let pair = maps.pair()?;
            let d = verify_dynamical_lcs(&x, &pair)?;
            let product = if build && d.verdict().is_ok() {
                Some(StructureFile::from_lcs(&build_dynamical_extension(&x, &pair)?))
            } else {
                None
            };
            (d, product, "lcs")
        }
        Kind::Cycleset => {
            let x = s.to_cycle_set()?;
            let alpha = maps.alpha()?;
            let d = verify_dynamical_cs(&x, &alpha)?;
            let product = if build && d.verdict().is_ok() {
                Some(StructureFile::from_cycle_set(&build_dynamical_cs(&x, &alpha)?))
            } else {
                None
            };
            (d, product, "cycleset")
        }
        other => return Err(CliError::Invalid(format!("dynamical extensions need an lcs or cycleset, found {other:?}"))),
    };
    let mut out = json!({ "mode": mode, "report": report::dynamical(&d) });
    if let Some(p) = product {
        out["product"] = serde_json::to_value(p)?;
    }
    Ok((d.verdict().is_ok(), out))
}

fn enumerate(a: Option<&Path>, cycle_sets: Option<usize>, caps: &Caps) -> Step {
    let structures: Vec<StructureFile> = match (a, cycle_sets) {
        (Some(a), _) => enumerate_lcs(&load_group(a)?, caps.lcs_order)?.iter().map(StructureFile::from_lcs).collect(),
        (None, Some(n)) => {
            within(n, caps.cycle_sets)?;
            enumerate_cycle_sets(n).iter().map(StructureFile::from_cycle_set).collect()
        }
        (None, None) => return Err(CliError::Invalid("give a group file or --cycle-sets".into())),
    };
    Ok((true, json!({ "count": structures.len(), "structures": structures })))
}

fn oracle_cohomology(x: &Path, a: &Path, caps: &Caps) -> Step {
    let (x, a) = (load_lcs(x)?, load_group(a)?);
    within(x.size() * a.order(), caps.oracle)?;
    let (z2, b2, h2) = compute_cohomology(&x, &a, caps.cohomology.max(caps.oracle))?;
    let (agree, o) = cohomology_oracle(&x, &a, &z2, &b2, &h2, caps)?;
    Ok((
        agree,
        json!({
            "pipeline": { "z2_order": z2.order(), "b2_order": b2.order(), "h2_order": h2.order() },
            "oracle": o,
        }),
    ))
}

fn oracle_aut(x: &Path, a: &Path, c: &Path, caps: &Caps) -> Step {
    let (x, a, c) = load_cocycle(x, a, c)?;
    let size = x.size() * a.order();
    within(size, caps.oracle)?;
    let inst = WellsInstance::new(&x, &a, caps.wells.max(size))?;
    let ext = build_extension(&x, &a, &c)?;
    let mut pipeline: Vec<Vec<usize>> =
        enumerate_aut_a_e(&inst, &c, ext.total())?.iter().map(|l| l.to_permutation(&a)).collect();
    pipeline.sort();
    let mut brute = oracle::aut_a_e(ext.total(), &a, size)?;
    brute.sort();
    let only_pipeline: Vec<&Vec<usize>> = pipeline.iter().filter(|p| brute.binary_search(p).is_err()).collect();
    let only_oracle: Vec<&Vec<usize>> = brute.iter().filter(|p| pipeline.binary_search(p).is_err()).collect();
    let agree = only_pipeline.is_empty() && only_oracle.is_empty();
    Ok((
        agree,
        json!({
            "pipeline_order": pipeline.len(),
            "oracle_order": brute.len(),
            "agree": agree,
            "only_pipeline": only_pipeline,
            "only_oracle": only_oracle,
        }),
    ))
}

fn oracle_z1(x: &Path, a: &Path, caps: &Caps) -> Step {
    let (x, a) = (load_lcs(x)?, load_group(a)?);
    within(x.size() * a.order(), caps.oracle)?;
    let z1 = compute_z1(&x, &a)?;
    let mut pipeline: Vec<Vec<usize>> = z1.all_coords().iter().map(|c| z1.lift_map(c)).collect();
    pipeline.sort();
    let brute = oracle::z1(&x, &a)?;
    let agree = pipeline == brute;
    Ok((
        agree,
        json!({
            "pipeline_order": pipeline.len(),
            "oracle_order": brute.len(),
            "agree": agree,
            "maps": brute.iter().map(|l| elements(&a, l)).collect::<Vec<_>>(),
        }),
    ))
}

fn oracle_coboundary(x: &Path, a: &Path, c: &Path, caps: &Caps) -> Step {
    let (x, a) = (load_lcs(x)?, load_group(a)?);
    let c = load_cochain(c, &x, &a)?;
    within(x.size() * a.order(), caps.oracle)?;
    let pipeline = coboundary_witness(&x, &c)?;
    let mut brute: Option<Vec<usize>> = None;
    let mut failure: Option<Error> = None;
    oracle::for_each_vector(a.order(), x.size(), |lambda| {
        if brute.is_some() || failure.is_some() || lambda[x.zero()] != 0 {
            return;
        }
        match coboundary(&x, &a, lambda) {
            Ok(d) if d == c => brute = Some(lambda.to_vec()),
            Ok(_) => {}
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e.into());
    }
    let agree = pipeline.is_some() == brute.is_some();
    let show = |l: &Option<Vec<usize>>| l.as_ref().map(|l| elements(&a, l));
    Ok((
        agree,
        json!({
            "is_coboundary": brute.is_some(),
            "agree": agree,
            "pipeline_witness": show(&pipeline),
            "oracle_witness": show(&brute),
        }),
    ))
}
