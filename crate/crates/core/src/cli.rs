//! The `qcg` command line: every computation as a subcommand with exact,
//! deterministic JSON output.
//!
//! Exit status: 0 on success, 1 when a checked property fails, 2 on invalid
//! input. Progress for long runs goes to stderr.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::circle::{fmt_rational, parse_rational, t_polar_of_characters, UnitRational};
use crate::error::{Error, Result};
use crate::families::{
    chain_violation, necessary_report_r, necessary_report_t, parse_int_list, points_k2, points_k3, points_r2,
    verdict, DivisibleChain, FamilyKind, GapSequence,
};
use crate::padic::{compute_jm, default_level, epsilon_forms, l3_truncate, q12_set, Carrier};
use crate::polar::{hull, polar, signed_residue, CyclicSet, GridSet, ResidueSet};
use crate::real_line::{hull_r, member_hull_r, polar_r, HullMembership, RealFiniteSet};
use crate::witnesses::{check_certificate, exclusion_j3, exclusion_r2, exclusion_t3, ExclusionCertificate, SCHEMA};

/// Largest grid `N` accepted without `QCG_MAX_GRID`.
pub const DEFAULT_MAX_GRID: u64 = 1 << 20;
/// Largest cyclic order accepted without `QCG_MAX_GRID`.
pub const DEFAULT_MAX_CYCLIC: u64 = 1_594_323; // 3^13

#[derive(Parser, Debug)]
#[command(name = "qcg", version, about = "Exact polars and quasi-convex hulls")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// JSON output (the default)
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Human-readable output
    #[arg(long, global = true)]
    pub text: bool,
    /// Worker count for sweeps; runs are sequential, the flag is validated only
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Polar in Z of points of T, or polar in T of integer characters
    PolarT {
        /// Points of T as p/q
        #[arg(long, conflicts_with = "chars")]
        set: Option<String>,
        /// Integer characters
        #[arg(long)]
        chars: Option<String>,
        #[arg(long)]
        grid: Option<u64>,
    },
    /// Quasi-convex hull in T of explicit points or a family truncation
    HullT {
        #[arg(long)]
        set: Option<String>,
        #[command(flatten)]
        family: FamilyArgs,
        /// Number of family terms (default: all)
        #[arg(long)]
        n: Option<usize>,
        /// Grid modulus N; must be a multiple of every denominator
        #[arg(long)]
        grid: Option<u64>,
    },
    /// Quasi-convex hull in Z(n)
    HullZn {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        set: String,
        /// Report membership of this element
        #[arg(long)]
        target: Option<i64>,
    },
    /// Hull of L_{a,3} (or explicit integers) in Z(3^level)
    HullJ3 {
        #[arg(long, conflicts_with = "set")]
        seq: Option<GapSequence>,
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        level: Option<u32>,
    },
    /// Polar in R of a finite set of rationals
    PolarR {
        #[arg(long)]
        set: String,
    },
    /// Finite quasi-convex hull in R
    HullR {
        #[arg(long)]
        set: Option<String>,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Membership of one rational in the hull in R, with a witness when outside
    MemberR {
        #[arg(long)]
        set: String,
        #[arg(long)]
        target: String,
    },
    /// Quasi-convexity verdict for a family, or necessity report for a chain
    FamilyVerdict {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// The index set J_m on the grid (T3) or Z(3^level) (J3)
    Jm {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 1)]
        m: u64,
        /// Largest index (default a_last + 1)
        #[arg(long)]
        k_max: Option<u64>,
        #[arg(long)]
        level: Option<u32>,
    },
    /// Q1 ∩ Q2 on the carrier, compared with the epsilon forms
    Q12 {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        level: Option<u32>,
    },
    /// Exclusion certificate for an epsilon form (T3, J3) or a point (R2)
    Certify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Coefficients in {-1,0,1}, e.g. 1,0,-1
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        target: Option<String>,
    },
    /// Re-check a certificate file
    VerifyCert {
        #[arg(long)]
        cert: std::path::PathBuf,
        /// Family terms checked exactly (T3, R2) or level M (J3); default: all / a_last + 2
        #[arg(long)]
        trunc: Option<u64>,
    },
    /// Run the acceptance suite
    #[command(name = "verify-paper")]
    Acceptance {
        /// Run only these criteria, e.g. 1,3,7
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// T2, R2, T3, J3, or chain
    #[arg(long)]
    pub family: Option<String>,
    /// Sequence entries (or chain terms), e.g. 1,3,5
    #[arg(long, allow_hyphen_values = true)]
    pub seq: Option<String>,
}

enum Family {
    Kind(FamilyKind, GapSequence),
    Chain(DivisibleChain),
}

impl FamilyArgs {
    fn is_given(&self) -> bool {
        self.family.is_some() || self.seq.is_some()
    }

    fn resolve(&self) -> Result<Family> {
        let (Some(f), Some(s)) = (&self.family, &self.seq) else {
            return Err(Error::InvalidInput("need both --family and --seq".into()));
        };
        if f.eq_ignore_ascii_case("chain") {
            return Ok(Family::Chain(s.parse()?));
        }
        Ok(Family::Kind(f.parse()?, s.parse()?))
    }

    fn kind(&self, allowed: &[FamilyKind]) -> Result<(FamilyKind, GapSequence)> {
        match self.resolve()? {
            Family::Kind(k, a) if allowed.contains(&k) => Ok((k, a)),
            _ => Err(Error::InvalidInput(format!("--family must be one of {allowed:?} here"))),
        }
    }
}

/// What a subcommand produced.
struct Report {
    json: Value,
    text: String,
    /// False when a checked property failed.
    ok: bool,
}

impl Report {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Self { json, text: text.into(), ok: true }
    }
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), Value::String(SCHEMA.into()));
    }
    v
}

fn limits() -> Result<(u64, u64)> {
    match std::env::var("QCG_MAX_GRID") {
        Ok(v) => {
            let n: u64 = v.trim().parse().map_err(|_| Error::Parse(format!("QCG_MAX_GRID={v:?}")))?;
            Ok((n, n))
        }
        Err(_) => Ok((DEFAULT_MAX_GRID, DEFAULT_MAX_CYCLIC)),
    }
}

fn check_grid(n: u64) -> Result<()> {
    let (max, _) = limits()?;
    if n > max {
        return Err(Error::InvalidInput(format!("grid {n} exceeds the limit {max} (set QCG_MAX_GRID to raise it)")));
    }
    Ok(())
}

fn check_cyclic(n: u64) -> Result<()> {
    let (_, max) = limits()?;
    if n > max {
        return Err(Error::InvalidInput(format!("order {n} exceeds the limit {max} (set QCG_MAX_GRID to raise it)")));
    }
    Ok(())
}

fn parse_points(s: &str) -> Result<Vec<UnitRational>> {
    s.split(',').map(str::trim).filter(|p| !p.is_empty()).map(str::parse).collect()
}

fn parse_reals(s: &str) -> Result<RealFiniteSet> {
    let pts = s.split(',').map(str::trim).filter(|p| !p.is_empty()).map(parse_rational).collect::<Result<Vec<_>>>()?;
    Ok(RealFiniteSet::new(pts))
}

fn strs<T: ToString>(it: impl IntoIterator<Item = T>) -> Vec<String> {
    it.into_iter().map(|x| x.to_string()).collect()
}

fn grid_points(g: &GridSet, residues: &BTreeSet<u64>) -> Vec<String> {
    let mut pts: Vec<UnitRational> = residues.iter().map(|&j| g.point(j)).collect();
    pts.sort();
    strs(pts)
}

fn signed(n: u64, residues: &BTreeSet<u64>) -> Vec<i64> {
    let mut v: Vec<i64> = residues.iter().map(|&r| signed_residue(r, n)).collect();
    v.sort_unstable();
    v
}

fn regrid(g: GridSet, grid: Option<u64>) -> Result<GridSet> {
    match grid {
        Some(n) => GridSet::from_points(&g.points_t(), Some(n)),
        None => Ok(g),
    }
}

fn polar_t(set: Option<String>, chars: Option<String>, grid: Option<u64>) -> Result<Report> {
    if let Some(c) = chars {
        let ks: Vec<BigInt> = parse_int_list(&c)?.into_iter().map(BigInt::from).collect();
        let p = t_polar_of_characters(&ks);
        return Ok(Report::new(
            json!({"characters": strs(&ks), "polar": p.to_string()}),
            format!("{p}"),
        ));
    }
    let set = set.ok_or_else(|| Error::InvalidInput("need --set or --chars".into()))?;
    let g = GridSet::from_points(&parse_points(&set)?, grid)?;
    check_grid(g.modulus())?;
    let p = polar(&g)?;
    let residues: BTreeSet<u64> = p.residues.iter().copied().collect();
    let chars = signed(p.modulus, &residues);
    Ok(Report::new(
        json!({"period": p.modulus, "characters": chars}),
        format!("characters mod {}: {chars:?}", p.modulus),
    ))
}

fn hull_t(set: Option<String>, family: &FamilyArgs, n: Option<usize>, grid: Option<u64>) -> Result<Report> {
    let g = if family.is_given() {
        let (kind, a) = family.kind(&[FamilyKind::T2, FamilyKind::T3])?;
        let count = n.unwrap_or(a.len());
        let g = if kind == FamilyKind::T2 { points_k2(&a, count)? } else { points_k3(&a, count)? };
        regrid(g, grid)?
    } else {
        let set = set.ok_or_else(|| Error::InvalidInput("need --set or --family/--seq".into()))?;
        GridSet::from_points(&parse_points(&set)?, grid)?
    };
    check_grid(g.modulus())?;
    let r = hull(&g)?;
    let qc = r.is_quasi_convex();
    let h = grid_points(&g, r.hull.residues());
    Ok(Report::new(
        json!({"grid": g.modulus(), "set": grid_points(&g, g.residues()), "hull": h, "quasi_convex": qc}),
        format!("grid {}: hull {{{}}}, quasi-convex: {qc}", g.modulus(), h.join(", ")),
    ))
}

fn cyclic_report(c: &CyclicSet, target: Option<i64>, extra: Value) -> Result<Report> {
    let n = c.modulus();
    let r = hull(c)?;
    let h = signed(n, r.hull.residues());
    let qc = r.is_quasi_convex();
    let mut v = json!({"n": n, "set": c.signed_elements(), "hull": h, "quasi_convex": qc});
    let mut text = format!("Z({n}): hull {h:?}, quasi-convex: {qc}");
    if let Some(t) = target {
        let res = crate::polar::to_residue(t, n);
        let inside = r.hull.contains(res);
        v["target"] = json!(t);
        v["target_in_hull"] = json!(inside);
        match r.witnesses.get(&res) {
            Some(&k) => {
                v["witness"] = json!(signed_residue(k, n));
                text += &format!("; {t} excluded by character {}", signed_residue(k, n));
            }
            None => text += &format!("; {t} in hull"),
        }
    }
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    Ok(Report::new(v, text))
}

fn hull_zn(n: u64, set: &str, target: Option<i64>) -> Result<Report> {
    check_cyclic(n)?;
    let c = CyclicSet::new(n, parse_int_list(set)?)?;
    cyclic_report(&c, target, json!({}))
}

fn hull_j3(seq: Option<GapSequence>, set: Option<String>, level: Option<u32>) -> Result<Report> {
    let c = match (seq, set) {
        (Some(a), _) => {
            let level = level.unwrap_or_else(|| default_level(&a));
            check_cyclic(3u64.checked_pow(level).unwrap_or(u64::MAX))?;
            l3_truncate(&a, level)?
        }
        (None, Some(s)) => {
            let level = level.ok_or_else(|| Error::InvalidInput("--set needs --level".into()))?;
            let n = 3u64.checked_pow(level).unwrap_or(u64::MAX);
            check_cyclic(n)?;
            CyclicSet::new(n, parse_int_list(&s)?)?
        }
        (None, None) => return Err(Error::InvalidInput("need --seq or --set".into())),
    };
    cyclic_report(&c, None, json!({}))
}

fn polar_r_cmd(set: &str) -> Result<Report> {
    let s = parse_reals(set)?;
    let p = polar_r(&s)?;
    Ok(Report::new(
        serde_json::to_value(&p).expect("serializable"),
        format!("period {}: {}", fmt_rational(&p.period), p.one_period),
    ))
}

fn hull_r_cmd(set: Option<String>, family: &FamilyArgs, n: Option<usize>) -> Result<Report> {
    let s = if family.is_given() {
        let (_, a) = family.kind(&[FamilyKind::R2])?;
        points_r2(&a, n.unwrap_or(a.len()))?
    } else {
        parse_reals(&set.ok_or_else(|| Error::InvalidInput("need --set or --family/--seq".into()))?)?
    };
    let h = hull_r(&s)?;
    let qc = h == s;
    let pts: Vec<String> = h.points().iter().map(fmt_rational).collect();
    Ok(Report::new(
        json!({"set": s, "hull": h, "quasi_convex": qc}),
        format!("hull {{{}}}, quasi-convex: {qc}", pts.join(", ")),
    ))
}

fn member_r(set: &str, target: &str) -> Result<Report> {
    let s = parse_reals(set)?;
    let z = parse_rational(target)?;
    Ok(match member_hull_r(&s, &z)? {
        HullMembership::In => Report::new(json!({"target": fmt_rational(&z), "member": true}), "in hull"),
        HullMembership::Out { witness } => Report::new(
            json!({"target": fmt_rational(&z), "member": false, "witness": fmt_rational(&witness)}),
            format!("outside; witness character {}", fmt_rational(&witness)),
        ),
    })
}

fn family_verdict(family: &FamilyArgs) -> Result<Report> {
    match family.resolve()? {
        Family::Kind(kind, a) => {
            let v = verdict(kind, &a)?;
            let mut j = serde_json::to_value(&v).expect("serializable");
            j["family"] = json!(kind);
            j["seq"] = json!(a);
            let mut text = format!("{kind:?} {a}: {:?}", v.outcome);
            if let Some(c) = v.violated {
                text += &format!(" (violates {})", c.id());
            }
            if let Some(w) = v.witness_recipe {
                let p = w.point(kind, &a).map(|p| fmt_rational(&p)).ok();
                j["witness"] = json!(p);
                if let Some(p) = p {
                    text += &format!("; hull point {p}");
                }
            }
            Ok(Report::new(j, text))
        }
        Family::Chain(b) => {
            let t = necessary_report_t(&b);
            let r = necessary_report_r(&b);
            let point = |circle| {
                chain_violation(&b, circle).map(|v| json!({"rule": v.rule, "point": fmt_rational(&v.point)}))
            };
            Ok(Report::new(
                json!({"chain": b.terms(), "circle": t, "real_line": r,
                       "circle_violation": point(true), "real_line_violation": point(false)}),
                format!("chain {:?}: circle failures {:?}; real line ok: {}", b.terms(), t.failures(), r.all_pass()),
            ))
        }
    }
}

fn carrier_for(kind: FamilyKind, a: &GapSequence, level: Option<u32>) -> Result<Carrier> {
    Ok(match kind {
        FamilyKind::T3 => {
            let e = level.unwrap_or((a.last() + 1) as u32);
            check_grid(3u64.checked_pow(e).unwrap_or(u64::MAX))?;
            Carrier::Grid { exponent: e }
        }
        _ => {
            let l = level.unwrap_or_else(|| default_level(a));
            check_cyclic(3u64.checked_pow(l).unwrap_or(u64::MAX))?;
            Carrier::Cyclic { level: l }
        }
    })
}

fn jm(family: &FamilyArgs, m: u64, k_max: Option<u64>, level: Option<u32>) -> Result<Report> {
    let (kind, a) = family.kind(&[FamilyKind::T3, FamilyKind::J3])?;
    let carrier = carrier_for(kind, &a, level)?;
    let k_max = k_max.unwrap_or((a.last() + 1) as u64);
    let j = compute_jm(&a, m, k_max, &carrier)?;
    Ok(Report::new(
        json!({"family": kind, "seq": a, "m": m, "k_max": k_max, "carrier": carrier, "jm": j}),
        format!("J_{m} up to {k_max}: {j:?}"),
    ))
}

fn carrier_points(carrier: &Carrier, set: &BTreeSet<u64>) -> Result<Vec<String>> {
    let n = carrier.modulus()?;
    Ok(match carrier {
        Carrier::Grid { .. } => {
            let mut pts: Vec<UnitRational> =
                set.iter().map(|&j| UnitRational::new(j as i64, n as i64)).collect::<Result<_>>()?;
            pts.sort();
            strs(pts)
        }
        Carrier::Cyclic { .. } => strs(signed(n, set)),
    })
}

fn q12(family: &FamilyArgs, level: Option<u32>) -> Result<Report> {
    let (kind, a) = family.kind(&[FamilyKind::T3, FamilyKind::J3])?;
    let carrier = carrier_for(kind, &a, level)?;
    let q = q12_set(&a, &carrier)?;
    let e = epsilon_forms(&a, &carrier)?;
    let equal = q == e;
    let mut r = Report::new(
        json!({"family": kind, "seq": a, "carrier": carrier, "q12": carrier_points(&carrier, &q)?,
               "epsilon_forms": carrier_points(&carrier, &e)?, "equal": equal}),
        format!("{} points; equals the epsilon forms: {equal}", q.len()),
    );
    r.ok = equal;
    Ok(r)
}

fn parse_eps(s: &str) -> Result<Vec<i8>> {
    parse_int_list(s)?
        .into_iter()
        .map(|e| i8::try_from(e).map_err(|_| Error::InvalidInput(format!("coefficient {e} out of range"))))
        .collect()
}

fn certify(family: &FamilyArgs, eps: Option<String>, target: Option<String>) -> Result<Report> {
    let (kind, a) = family.kind(&[FamilyKind::T3, FamilyKind::J3, FamilyKind::R2])?;
    let cert = match kind {
        FamilyKind::R2 => {
            let z = target.ok_or_else(|| Error::InvalidInput("R2 certificates need --target".into()))?;
            exclusion_r2(&a, &parse_rational(&z)?)?
        }
        _ => {
            let e = parse_eps(&eps.ok_or_else(|| Error::InvalidInput("need --eps".into()))?)?;
            if kind == FamilyKind::T3 { exclusion_t3(&a, &e)? } else { exclusion_j3(&a, &e)? }
        }
    };
    let text = format!("{} excluded with value {}", cert.target, cert.evaluation);
    Ok(Report::new(serde_json::to_value(&cert).expect("serializable"), text))
}

fn verify_cert(path: &std::path::Path, trunc: Option<u64>) -> Result<Report> {
    let s = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    let cert = ExclusionCertificate::from_json(&s)?;
    let a = &cert.family.seq;
    let trunc = trunc.unwrap_or(match cert.family.kind {
        FamilyKind::J3 => default_level(a) as u64,
        _ => a.len() as u64,
    });
    let c = check_certificate(&cert, trunc)?;
    let mut r = Report::new(
        json!({"truncation": trunc, "check": c, "passed": c.passed()}),
        format!("certificate {}: {c:?}", if c.passed() { "verified" } else { "REJECTED" }),
    );
    r.ok = c.passed();
    Ok(r)
}

fn acceptance(only: Option<String>, err: &mut dyn Write) -> Result<Report> {
    let ids: Vec<u32> = match only {
        Some(s) => parse_int_list(&s)?.into_iter().map(|i| i as u32).collect(),
        None => (1..=crate::suite::criterion_count() as u32).collect(),
    };
    let mut results = Vec::new();
    for id in ids {
        let r = crate::suite::run_criterion(id).ok_or_else(|| Error::InvalidInput(format!("no criterion {id}")))?;
        let _ = writeln!(err, "[{}] {:>2} {} ({} ms)", if r.passed { "PASS" } else { "FAIL" }, r.id, r.name, r.millis);
        results.push(r);
    }
    let passed = results.iter().all(|r| r.passed);
    let text = results
        .iter()
        .map(|r| format!("[{}] {:>2} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.name, r.detail))
        .collect::<Vec<_>>()
        .join("\n");
    // timings vary run to run, so they stay out of stdout
    let criteria: Vec<Value> =
        results.iter().map(|r| json!({"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail})).collect();
    let mut rep = Report::new(json!({"criteria": criteria, "passed": passed}), text);
    rep.ok = passed;
    Ok(rep)
}

fn dispatch(cmd: Command, err: &mut dyn Write) -> Result<Report> {
    match cmd {
        Command::PolarT { set, chars, grid } => polar_t(set, chars, grid),
        Command::HullT { set, family, n, grid } => hull_t(set, &family, n, grid),
        Command::HullZn { n, set, target } => hull_zn(n, &set, target),
        Command::HullJ3 { seq, set, level } => hull_j3(seq, set, level),
        Command::PolarR { set } => polar_r_cmd(&set),
        Command::HullR { set, family, n } => hull_r_cmd(set, &family, n),
        Command::MemberR { set, target } => member_r(&set, &target),
        Command::FamilyVerdict { family } => family_verdict(&family),
        Command::Jm { family, m, k_max, level } => jm(&family, m, k_max, level),
        Command::Q12 { family, level } => q12(&family, level),
        Command::Certify { family, eps, target } => certify(&family, eps, target),
        Command::VerifyCert { cert, trunc } => verify_cert(&cert, trunc),
        Command::Acceptance { only } => acceptance(only, err),
    }
}

/// Parse arguments, run, write the report; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match dispatch(cli.command, err) {
        Ok(report) => {
            let _ = if cli.output.text {
                writeln!(out, "{}", report.text)
            } else {
                let v = with_schema(report.json);
                writeln!(out, "{}", serde_json::to_string(&v).expect("json"))
            };
            if report.ok { 0 } else { 1 }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
