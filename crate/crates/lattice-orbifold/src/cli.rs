//! Command-line front end. Every subcommand is a thin wrapper over a library
//! call; [`run`] parses arguments, prints a report and returns the exit status.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::characters::{char_report, verify_decomposition, Ambient, ModuleLabel};
use crate::codes::{e8_codes, Code, CodeKind, Z3Word};
use crate::fock::tables::check_tables;
use crate::fock::TwistedEngine;
use crate::fusion::{check_ring, fuse_labels, fuse_vl, FusionLabel, Product, Ring};
use crate::groups::ExtensionKind;
use crate::lattice::GluedLattice;
use crate::scalars::{exponent_string, QSeries, Rational};
use crate::twisted_rep::catalog;
use crate::verify::run_all;
use crate::{Error, Result};

const LABEL_HELP: &str = "\
Module labels:
  V(λ,γ)      untwisted module, λ over {0,a,b,c}, γ over {0,1,2}
  V(0,γ)[ε]   eigenspace ε ∈ {0,1,2} of a τ-stable untwisted module
  T(η,i)[ε]   τ^i-twisted module (i = 1 or 2), eigenspace ε
Words are written without separators, e.g. V(c0,12) or T(210,1)[2].
Orders are weights, integer or fractional, e.g. --order 4 or --order 13/3.
Code files: 'kind: K|Z3', 'length: N', 'generators:', then one word per line.";

#[derive(Parser, Debug)]
#[command(name = "orbifold", version, about = "Codes, glued lattices, twisted modules, characters and fusion rules", after_help = LABEL_HELP)]
pub struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inspect a code file.
    #[command(subcommand)]
    Codes(CodesCmd),
    /// Glued lattices built from a K-code and a ternary code.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Twisted representations of the central extension.
    #[command(subcommand)]
    Twisted(TwistedCmd),
    /// Fusion products.
    #[command(subcommand)]
    Fusion(FusionCmd),
    /// Characters of modules.
    #[command(subcommand)]
    Char(CharCmd),
    /// Combinatorial check suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Operator action checks in the twisted Fock spaces.
    #[command(subcommand)]
    Ops(OpsCmd),
}

#[derive(Subcommand, Debug)]
pub enum CodesCmd {
    /// Size, dual, weights, self-duality and τ-invariance.
    Check { file: PathBuf },
}

#[derive(clap::Args, Debug, Clone)]
pub struct CodeArgs {
    /// K-code file (defaults to the zero code, or the E8 pair when neither is given).
    #[arg(long = "C", alias = "c")]
    pub c: Option<PathBuf>,
    /// Ternary code file.
    #[arg(long = "D", alias = "d")]
    pub d: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum LatticeCmd {
    /// Rank, determinant, evenness and unimodularity.
    Info {
        #[command(flatten)]
        codes: CodeArgs,
    },
    /// Theta series up to the given weight.
    Theta {
        #[command(flatten)]
        codes: CodeArgs,
        #[arg(long, default_value = "3")]
        order: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum TwistedCmd {
    /// Equivalence classes of twisted modules, one per coset of D in its dual.
    Catalog {
        #[arg(long = "D", alias = "d")]
        d: PathBuf,
        /// Twist power, 1 or 2.
        #[arg(long, default_value_t = 1)]
        power: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingName {
    /// The thirty modules at length 1.
    Vl,
    /// All modules at length `--len`.
    Ll,
    /// Modules over the lattice glued by `--D`.
    D,
    /// The twenty-label subalgebra ring.
    Kernel,
    /// The six-label ring.
    Potts,
}

#[derive(Subcommand, Debug)]
pub enum FusionCmd {
    /// Product of two module labels.
    Mult {
        a: String,
        b: String,
        #[arg(long, value_enum)]
        ring: Option<RingName>,
        #[arg(long = "D", alias = "d")]
        d: Option<PathBuf>,
    },
    /// Full multiplication table and ring-axiom check.
    Table {
        #[arg(long, value_enum, default_value_t = RingName::Vl)]
        ring: RingName,
        #[arg(long, default_value_t = 2)]
        len: usize,
        #[arg(long = "D", alias = "d")]
        d: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CharCmd {
    /// Character and τ-trace of one module.
    Module {
        label: String,
        #[arg(long, default_value = "3")]
        order: String,
        #[command(flatten)]
        codes: CodeArgs,
    },
    /// Checks the twisted module over L_{0×D} against its tensor decomposition.
    Decompose {
        #[arg(long = "D", alias = "d")]
        d: PathBuf,
        #[arg(long)]
        eta: String,
        /// Defaults to ℓ/9 + 4.
        #[arg(long)]
        order: Option<String>,
        /// 1 or 2; both when omitted.
        #[arg(long)]
        power: Option<u8>,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Runs every check at lengths 2 and 4, plus `--ell`.
    All {
        #[arg(long)]
        ell: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum OpsCmd {
    /// The twelve action identities for ω, P and J, in both twisted engines.
    Tables {
        /// 1 checks every residue on one site; 3 uses the code <111>.
        #[arg(long, default_value_t = 1)]
        len: usize,
    },
}

/// What a subcommand produced.
struct Outcome {
    text: Vec<String>,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn new(text: Vec<String>, json: Value, ok: bool) -> Self {
        Outcome { text, json, ok }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    if let Some(n) = cli.jobs {
        // the global pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match execute(&cli.command) {
        Ok(o) => {
            let _ = match cli.format {
                Format::Human => writeln!(out, "{}", o.text.join("\n")),
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&o.json).unwrap_or_default()),
            };
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Codes(CodesCmd::Check { file }) => codes_check(&read_code(file)?),
        Command::Lattice(LatticeCmd::Info { codes }) => lattice_info(&lattice_from(codes)?),
        Command::Lattice(LatticeCmd::Theta { codes, order }) => lattice_theta(&lattice_from(codes)?, parse_order(order)?),
        Command::Twisted(TwistedCmd::Catalog { d, power }) => twisted_catalog(&read_code(d)?, *power),
        Command::Fusion(FusionCmd::Mult { a, b, ring, d }) => fusion_mult(a, b, *ring, d.as_deref()),
        Command::Fusion(FusionCmd::Table { ring, len, d }) => fusion_table(*ring, *len, d.as_deref()),
        Command::Char(CharCmd::Module { label, order, codes }) => char_module(label, parse_order(order)?, codes),
        Command::Char(CharCmd::Decompose { d, eta, order, power }) => {
            char_verify(&read_code(d)?, eta, order.as_deref(), *power)
        }
        Command::Verify(VerifyCmd::All { ell }) => verify_all(*ell),
        Command::Ops(OpsCmd::Tables { len }) => ops_tables(*len),
    }
}

fn read_code(path: &Path) -> Result<Code> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    Code::parse(&text).map_err(|e| match e {
        Error::Parse { line, column, message } => Error::Parse {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn expect_kind(code: &Code, kind: CodeKind, what: &str) -> Result<()> {
    if code.kind() != kind {
        return Err(Error::InvalidArgument(format!("{what} must be a {kind:?} code")));
    }
    Ok(())
}

/// The codes named by `--C`/`--D`, with a missing one replaced by the zero
/// code; the E8 pair when both are missing.
fn codes_from(args: &CodeArgs) -> Result<Option<(Code, Code)>> {
    let c = args.c.as_deref().map(read_code).transpose()?;
    let d = args.d.as_deref().map(read_code).transpose()?;
    if let Some(c) = &c {
        expect_kind(c, CodeKind::K, "--C")?;
    }
    if let Some(d) = &d {
        expect_kind(d, CodeKind::Z3, "--D")?;
    }
    Ok(match (c, d) {
        (None, None) => None,
        (Some(c), None) => {
            let n = c.length();
            Some((c, Code::zero(CodeKind::Z3, n)))
        }
        (None, Some(d)) => Some((Code::zero(CodeKind::K, d.length()), d)),
        (Some(c), Some(d)) => Some((c, d)),
    })
}

fn lattice_from(args: &CodeArgs) -> Result<GluedLattice> {
    let (c, d) = codes_from(args)?.unwrap_or_else(e8_codes);
    GluedLattice::new(c, d)
}

/// Parses a weight such as `4` or `13/3` into the exponent grid.
fn parse_order(text: &str) -> Result<i64> {
    let r: Rational = text
        .trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad order '{text}'")))?;
    QSeries::exponent_of(&r)
}

fn series_json(s: &QSeries) -> Value {
    let terms: Vec<Value> = s
        .terms()
        .map(|(e, c)| json!({"exponent": exponent_string(e), "coefficient": c.to_string()}))
        .collect();
    json!({"order": exponent_string(s.order()), "terms": terms})
}

fn series_lines(s: &QSeries) -> Vec<String> {
    s.terms().map(|(e, c)| format!("  q^{:<8} {c}", exponent_string(e))).collect()
}

fn codes_check(code: &Code) -> Result<Outcome> {
    let dual = code.dual();
    let mut weights = std::collections::BTreeMap::new();
    let words: Vec<usize> = match code.kind() {
        CodeKind::K => code.k_words().iter().map(|w| w.weight()).collect(),
        CodeKind::Z3 => code.z3_words().iter().map(|w| w.weight()).collect(),
    };
    for w in words {
        *weights.entry(w).or_insert(0u64) += 1;
    }
    let k_only = code.kind() == CodeKind::K;
    let even = k_only.then(|| code.is_even());
    let tau = k_only.then(|| code.is_tau_invariant());
    let fmt_opt = |b: Option<bool>| b.map_or("n/a".to_string(), |v| v.to_string());
    let mut text = vec![
        format!("kind            {:?}", code.kind()),
        format!("length          {}", code.length()),
        format!("size            {}", code.size()),
        format!("dual size       {}", dual.size()),
        format!("min weight      {}", code.min_weight().map_or("none".into(), |w| w.to_string())),
        format!("dual min weight {}", dual.min_weight().map_or("none".into(), |w| w.to_string())),
        format!("self-orthogonal {}", code.is_self_orthogonal()),
        format!("self-dual       {}", code.is_self_dual()),
        format!("even            {}", fmt_opt(even)),
        format!("tau-invariant   {}", fmt_opt(tau)),
        "weight distribution:".into(),
    ];
    text.extend(weights.iter().map(|(w, n)| format!("  {w:>3}: {n}")));
    let json = json!({
        "kind": format!("{:?}", code.kind()),
        "length": code.length(),
        "size": code.size(),
        "dual_size": dual.size(),
        "min_weight": code.min_weight(),
        "dual_min_weight": dual.min_weight(),
        "self_orthogonal": code.is_self_orthogonal(),
        "self_dual": code.is_self_dual(),
        "even": even,
        "tau_invariant": tau,
        "weights": weights.iter().map(|(w, n)| json!([w, n])).collect::<Vec<_>>(),
    });
    Ok(Outcome::new(text, json, true))
}

fn lattice_info(lat: &GluedLattice) -> Result<Outcome> {
    let det = lat.determinant();
    let text = vec![
        format!("rank        {}", lat.rank()),
        format!("determinant {det}"),
        format!("integral    {}", lat.is_integral()),
        format!("even        {}", lat.is_even()),
        format!("unimodular  {}", lat.is_unimodular()),
    ];
    let json = json!({
        "rank": lat.rank(),
        "determinant": det.to_string(),
        "integral": lat.is_integral(),
        "even": lat.is_even(),
        "unimodular": lat.is_unimodular(),
    });
    Ok(Outcome::new(text, json, true))
}

fn lattice_theta(lat: &GluedLattice, order: i64) -> Result<Outcome> {
    let s = lat.theta_series(order);
    let mut text = vec![format!("theta series (exponent = norm/2) to weight {}:", exponent_string(order))];
    text.extend(series_lines(&s));
    Ok(Outcome::new(text, series_json(&s), true))
}

fn twisted_catalog(d: &Code, power: i64) -> Result<Outcome> {
    expect_kind(d, CodeKind::Z3, "--D")?;
    if !matches!(power, 1 | 2) {
        return Err(Error::InvalidArgument(format!("power must be 1 or 2, got {power}")));
    }
    let entries = catalog(ExtensionKind::twisted(power), d)?;
    let want = d.z3_dual_quotient().len();
    let ok = entries.len() == want;
    let mut text: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
    text.push(format!("{} classes; |D^⊥/D| = {want}", entries.len()));
    let json = json!({
        "classes": entries.iter().map(|e| json!({
            "representative": e.representative.to_string(),
            "class_size": e.class_size,
            "dimension": e.dimension,
        })).collect::<Vec<_>>(),
        "expected": want,
    });
    Ok(Outcome::new(text, json, ok))
}

/// Length of the first word inside a label such as `V(c0,12)`.
fn label_len(text: &str) -> Result<usize> {
    let inner = text
        .split_once('(')
        .and_then(|(_, r)| r.split(',').next())
        .ok_or_else(|| Error::InvalidArgument(format!("cannot read a word from label '{text}'")))?;
    Ok(inner.trim().chars().count())
}

fn coset_ambient(d: Option<&Path>) -> Result<Ambient> {
    let path = d.ok_or_else(|| Error::InvalidArgument("--ring d needs --D <file>".into()))?;
    let d = read_code(path)?;
    expect_kind(&d, CodeKind::Z3, "--D")?;
    Ambient::glued(Code::zero(CodeKind::K, d.length()), d)
}

fn product_json(p: &Product) -> Value {
    match p.defined() {
        None => Value::Null,
        Some(v) => Value::Array(v.0.iter().map(|(l, n)| json!({"label": l.to_string(), "multiplicity": n})).collect()),
    }
}

fn fusion_mult(a: &str, b: &str, ring: Option<RingName>, d: Option<&Path>) -> Result<Outcome> {
    let len = label_len(a)?;
    let ring = ring.unwrap_or(if len == 1 { RingName::Vl } else { RingName::Ll });
    let ambient = match ring {
        RingName::Vl => Ambient::Free(1),
        RingName::Ll => Ambient::Free(len),
        RingName::D => coset_ambient(d)?,
        RingName::Kernel | RingName::Potts => {
            return Err(Error::InvalidArgument("fusion mult takes module labels; use --ring vl, ll or d".into()))
        }
    };
    let la = ModuleLabel::parse(a, ambient.clone())?;
    let lb = ModuleLabel::parse(b, ambient)?;
    let p = match ring {
        RingName::Vl => fuse_vl(&FusionLabel::Module(la.kind.clone()), &FusionLabel::Module(lb.kind.clone())),
        _ => fuse_labels(&la, &lb)?,
    };
    let text = vec![format!("{la} × {lb} = {p}")];
    let json = json!({"a": la.to_string(), "b": lb.to_string(), "product": product_json(&p)});
    Ok(Outcome::new(text, json, true))
}

fn fusion_table(ring: RingName, len: usize, d: Option<&Path>) -> Result<Outcome> {
    let ring = match ring {
        RingName::Vl => Ring::Rank2,
        RingName::Ll => Ring::Free(len),
        RingName::D => match coset_ambient(d)? {
            Ambient::Glued { d, .. } => Ring::Coset(d),
            Ambient::Free(_) => unreachable!("coset ambient is glued"),
        },
        RingName::Kernel => Ring::Kernel,
        RingName::Potts => Ring::Potts,
    };
    let all = ring.labels()?;
    let mut text = Vec::new();
    let mut rows = Vec::new();
    for (i, a) in all.iter().enumerate() {
        for b in &all[i..] {
            let p = ring.fuse(a, b)?;
            text.push(format!("{a} × {b} = {p}"));
            rows.push(json!({"a": a.to_string(), "b": b.to_string(), "product": product_json(&p)}));
        }
    }
    let report = check_ring(&ring)?;
    text.push(format!(
        "{} labels; commutativity on {} pairs, associativity on {} triples: {}",
        all.len(),
        report.pairs_checked,
        report.triples_checked,
        if report.passed() { "pass" } else { "FAIL" }
    ));
    text.extend(report.violations.iter().take(8).map(|v| format!("  violation: {v}")));
    let json = json!({
        "labels": all.len(),
        "table": rows,
        "pairs_checked": report.pairs_checked,
        "triples_checked": report.triples_checked,
        "violations": report.violations,
    });
    Ok(Outcome::new(text, json, report.passed()))
}

fn char_module(label: &str, order: i64, codes: &CodeArgs) -> Result<Outcome> {
    let ambient = match codes_from(codes)? {
        Some((c, d)) => Ambient::glued(c, d)?,
        None => Ambient::Free(label_len(label)?),
    };
    let label = ModuleLabel::parse(label, ambient)?;
    let r = char_report(&label, order)?;
    let lowest = r.lowest_exponent().map(exponent_string);
    let mut text = vec![
        format!("module        {}", r.label),
        format!("lowest weight {}", lowest.clone().unwrap_or_else(|| "none below order".into())),
        "character:".into(),
    ];
    text.extend(series_lines(&r.series));
    if let Some(t) = &r.trace_tau {
        text.push("trace of the twist:".into());
        text.extend(series_lines(t));
    }
    let json = json!({
        "label": r.label.to_string(),
        "lowest_weight": lowest,
        "character": series_json(&r.series),
        "trace_tau": r.trace_tau.as_ref().map(series_json),
    });
    Ok(Outcome::new(text, json, true))
}

fn char_verify(d: &Code, eta: &str, order: Option<&str>, power: Option<u8>) -> Result<Outcome> {
    expect_kind(d, CodeKind::Z3, "--D")?;
    let eta = Z3Word::parse(eta)?;
    let order = match order {
        Some(o) => parse_order(o)?,
        // ℓ/9 + 4 on the 1/18 grid
        None => 2 * d.length() as i64 + 72,
    };
    let powers: Vec<u8> = power.map_or(vec![1, 2], |p| vec![p]);
    let mut text = Vec::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for p in powers {
        let r = verify_decomposition(d, &eta, p, order)?;
        ok &= r.passed();
        let describe = |m: &Option<crate::characters::Mismatch>| match m {
            None => "equal".to_string(),
            Some(m) => format!("differ at q^{}: {} vs {}", exponent_string(m.exponent), m.lhs, m.rhs),
        };
        text.push(format!("τ^{p}, η = {eta}, to weight {}:", exponent_string(order)));
        text.push(format!("  whole module  {}", describe(&r.total)));
        for (e, m) in r.refined.iter().enumerate() {
            text.push(format!("  eigenspace {e}  {}", describe(m)));
        }
        rows.push(json!({
            "power": p,
            "passed": r.passed(),
            "total": describe(&r.total),
            "refined": r.refined.iter().map(describe).collect::<Vec<_>>(),
        }));
    }
    Ok(Outcome::new(text, json!({"eta": eta.to_string(), "order": exponent_string(order), "checks": rows}), ok))
}

fn verify_all(ell: Option<usize>) -> Result<Outcome> {
    let reports = run_all(ell)?;
    let ok = reports.iter().all(|r| r.passed());
    let text = reports.iter().map(|r| r.to_string()).collect();
    let json = Value::Array(
        reports
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "passed": r.passed(),
                    "instances_checked": r.instances_checked,
                    "failure_count": r.failure_count,
                    "failures": r.failures,
                    "notes": r.notes,
                })
            })
            .collect(),
    );
    Ok(Outcome::new(text, json, ok))
}

fn ops_tables(len: usize) -> Result<Outcome> {
    let configs: Vec<(GluedLattice, Vec<Z3Word>)> = match len {
        1 => vec![(GluedLattice::root_sum(1), (0..3).map(|e| Z3Word(vec![e])).collect())],
        3 => {
            let d = Code::z3_code(3, &[Z3Word::from_ints(&[1, 1, 1])])?;
            let lat = GluedLattice::new(Code::zero(CodeKind::K, 3), d)?;
            vec![(lat, vec![Z3Word::zero(3), Z3Word::from_ints(&[1, 2, 0])])]
        }
        _ => return Err(Error::InvalidArgument(format!("--len must be 1 or 3, got {len}"))),
    };
    let mut text = Vec::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for (lat, etas) in configs {
        for kind in [ExtensionKind::Twisted, ExtensionKind::TwistedSquare] {
            for eta in &etas {
                let engine = TwistedEngine::new(kind, lat.clone(), eta.clone())?;
                let checked = check_tables(&engine)?;
                let bad: Vec<String> = checked
                    .iter()
                    .filter(|r| !r.ok)
                    .map(|r| format!("{} probe {} site {} γ={} residue {}", r.generator.name(), r.probe, r.site, r.gamma, r.residue))
                    .collect();
                ok &= bad.is_empty();
                let power = kind.twist_power().unwrap_or(0);
                text.push(format!(
                    "τ^{power}, η = {eta}: {}/{} identities hold",
                    checked.len() - bad.len(),
                    checked.len()
                ));
                text.extend(bad.iter().take(8).map(|b| format!("  fails: {b}")));
                rows.push(json!({"power": power, "eta": eta.to_string(), "checked": checked.len(), "failures": bad}));
            }
        }
    }
    Ok(Outcome::new(text, Value::Array(rows), ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("orbifold").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn e8_defaults() {
        let (code, out, _) = run_str(&["lattice", "info"]);
        assert_eq!(code, 0);
        assert!(out.contains("rank        8") && out.contains("determinant 1") && out.contains("even        true"));
    }

    #[test]
    fn fusion_of_the_c_module() {
        let (code, out, _) = run_str(&["fusion", "mult", "V(c,0)", "V(c,0)", "--ring", "vl"]);
        assert_eq!(code, 0);
        assert!(out.contains("= V(0,0)[0] + V(0,0)[1] + V(0,0)[2] + 2 V(c,0)"), "{out}");
    }

    #[test]
    fn parse_errors_show_usage() {
        let (code, _, err) = run_str(&["fusion", "mult"]);
        assert_eq!(code, 2);
        assert!(err.contains("Usage"));
        let (code, _, err) = run_str(&["fusion", "mult", "V(x,0)", "V(c,0)"]);
        assert_eq!(code, 2);
        assert!(err.contains("error"));
    }

    #[test]
    fn orders_accept_fractions() {
        assert_eq!(parse_order("13/3").unwrap(), 78);
        assert!(parse_order("1/7").is_err());
        assert_eq!(label_len("T(210,1)[2]").unwrap(), 3);
    }
}
