//! Claim-by-claim verification report.
//!
//! Rows are grouped into tasks that run on a rayon pool; each task may emit
//! several rows sharing one expensive setup (a catalog, a resolution). Output is
//! sorted by claim id, so the JSON is stable across runs and thread counts
//! apart from the `runtime_ms` fields.

use std::collections::BTreeMap;
use std::time::Instant;

use glattice::cohom::{
    h1_aug_formula, h1_dual_fast, h_bar_capped, invariants_list, sha1_aug_fast_capped, sha2_via_sequence_capped,
    sha_capped, Path,
};
use glattice::flasque::{flasque_resolution, h1_any, is_coflasque, Verdict};
use glattice::glat::{dual, find_iso, fixture, mod_m, sign_lattice, tensor, trivial_lattice, verify_iso, wedge2};
use glattice::permgrp::{alpha_beta, even_pairs, sigma_pi, subgroups_up_to_conjugacy, sylow2_alt, PermGroup};
use glattice::seqcert::{build_named, cert_from_quotient, find_splitting, witness_from_split, NamedSeq};
use glattice::{AbelianInvariants, Caps, Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::manifest::{Expected, Manifest};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Fixtures on which the dual-fast H^1 path is cross-checked against bar.
pub const GATE_FIXTURES: [&str; 9] = ["A", "A*", "A2", "Sym2A", "Wedge2A", "U", "W", "sign", "Wedge2U"];

/// Fixtures of the flasque-class grid over `S_4`.
pub const RHO_FIXTURES: [&str; 7] = ["A", "A2", "Sym2A", "Wedge2A", "U", "W", "sign"];

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct ReportConfig {
    /// Rows on fewer points are dropped.
    pub n_min: usize,
    /// Rows on more points are dropped.
    pub n_max: usize,
    pub caps: Caps,
    /// Worker threads; `None` uses the rayon default.
    pub threads: Option<usize>,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig { n_min: 2, n_max: 9, caps: Caps::default(), threads: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportRow {
    pub claim_id: String,
    pub anchor: String,
    pub n: usize,
    pub group: String,
    pub subject: String,
    pub computed: Value,
    pub expected: Value,
    pub path: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Wall time of the row, fractional milliseconds.
    pub runtime_ms: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub rows: Vec<ReportRow>,
    /// Set when a cross-check gate failed and the claim rows were not run.
    pub aborted: bool,
    pub catalog_hashes: BTreeMap<String, String>,
    pub exit_code: i32,
    pub runtime_ms: u64,
}

impl Report {
    pub fn count(&self, s: Status) -> usize {
        self.rows.iter().filter(|r| r.status == s).count()
    }

    /// JSON with all timing fields removed.
    pub fn stable_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("runtime_ms");
        for r in v["rows"].as_array_mut().expect("rows") {
            r.as_object_mut().expect("row").remove("runtime_ms");
        }
        v
    }

    pub fn table(&self) -> String {
        let w = self.rows.iter().map(|r| r.claim_id.len()).max().unwrap_or(8).max(8);
        let mut s = format!("{:<w$}  {:<7}  {:<9}  {:>8}  computed / expected\n", "claim", "status", "path", "ms");
        for r in &self.rows {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            };
            s += &format!(
                "{:<w$}  {:<7}  {:<9}  {:>8.1}  {} / {}",
                r.claim_id, status, r.path, r.runtime_ms, r.computed, r.expected
            );
            if let Some(reason) = &r.reason {
                s += &format!("  ({reason})");
            }
            s.push('\n');
        }
        s += &format!(
            "{} pass, {} fail, {} skipped{}; exit {}\n",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped),
            if self.aborted { ", aborted by a failed gate" } else { "" },
            self.exit_code
        );
        s
    }
}

/// What a single row computed.
struct Outcome {
    computed: Value,
    /// Filled in by rule-based claims; literal claims take the manifest value.
    expected: Option<Value>,
    path: Path,
}

impl Outcome {
    fn inv(a: &AbelianInvariants, path: Path) -> Self {
        Outcome { computed: inv_json(a), expected: None, path }
    }

    fn against(self, expected: Value) -> Self {
        Outcome { expected: Some(expected), ..self }
    }

    fn verdict(v: &str, path: Path) -> Self {
        Outcome { computed: Value::String(v.into()), expected: None, path }
    }
}

fn inv_json(a: &AbelianInvariants) -> Value {
    Value::Array(invariants_list(a))
}

struct Partial {
    id: String,
    n: usize,
    group: String,
    subject: String,
    result: Result<Outcome>,
    ms: f64,
}

fn millis(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn timed(id: String, g: &PermGroup, subject: &str, f: impl FnOnce() -> Result<Outcome>) -> Partial {
    let t = Instant::now();
    let result = f();
    Partial {
        id,
        n: g.degree(),
        group: g.label(),
        subject: subject.into(),
        result,
        ms: millis(t),
    }
}

type Job = Box<dyn Fn(&Caps) -> Vec<Partial> + Send + Sync>;

struct Task {
    n: usize,
    gate: bool,
    job: Job,
}

impl Task {
    fn new(n: usize, job: impl Fn(&Caps) -> Vec<Partial> + Send + Sync + 'static) -> Self {
        Task { n, gate: false, job: Box::new(job) }
    }

    fn gate(n: usize, job: impl Fn(&Caps) -> Vec<Partial> + Send + Sync + 'static) -> Self {
        Task { n, gate: true, job: Box::new(job) }
    }
}

fn single(id: impl Into<String>, g: PermGroup, subject: &'static str, f: impl Fn(&Caps, &PermGroup) -> Result<Outcome> + Send + Sync + 'static) -> Task {
    let id = id.into();
    Task::new(g.degree(), move |caps| vec![timed(id.clone(), &g, subject, || f(caps, &g))])
}

fn catalog_rows(
    prefix: String,
    g: PermGroup,
    subject: String,
    gate: bool,
    f: impl Fn(&Caps, &PermGroup) -> Result<Outcome> + Send + Sync + 'static,
) -> Task {
    catalog_rows_upto(prefix, g, subject, gate, u128::MAX, f)
}

/// Like [`catalog_rows`], restricted to members of order at most `max_order`.
/// Row ids keep the index in the full catalog.
fn catalog_rows_upto(
    prefix: String,
    g: PermGroup,
    subject: String,
    gate: bool,
    max_order: u128,
    f: impl Fn(&Caps, &PermGroup) -> Result<Outcome> + Send + Sync + 'static,
) -> Task {
    let n = g.degree();
    let job = move |caps: &Caps| match subgroups_up_to_conjugacy(&g, caps.subgroups) {
        Ok(cat) => cat
            .members
            .par_iter()
            .enumerate()
            .filter(|(_, h)| h.order().map_or(true, |o| o <= max_order))
            .map(|(i, h)| timed(format!("{prefix}.c{i:02}"), h, &subject, || f(caps, h)))
            .collect(),
        Err(e) => vec![Partial { id: format!("{prefix}.catalog"), n: g.degree(), group: g.label(), subject: subject.clone(), result: Err(e), ms: 0.0 }],
    };
    if gate {
        Task::gate(n, job)
    } else {
        Task::new(n, job)
    }
}

fn gate_tasks() -> Vec<Task> {
    let mut tasks = Vec::new();
    let s4 = PermGroup::symmetric(4);
    for name in GATE_FIXTURES {
        let m = fixture(name, &s4).expect("fixture");
        let id = format!("gate.h1-dual-fast.{}.S4", name.replace('*', "-dual"));
        tasks.push(catalog_rows(id, s4.clone(), m.name().to_string(), true, move |caps, h| {
            let bar = h_bar_capped(1, h, &m, caps)?;
            let fast = h1_dual_fast(h, &m)?;
            Ok(Outcome::inv(&fast, Path::DualFast).against(inv_json(&bar.invariants)))
        }));
    }
    for n in [3, 5] {
        let g = PermGroup::symmetric(n);
        let a = fixture("A", &g).expect("fixture");
        tasks.push(catalog_rows(format!("gate.h1-dual-fast.A.S{n}"), g, a.name().to_string(), true, move |caps, h| {
            let bar = h_bar_capped(1, h, &a, caps)?;
            Ok(Outcome::inv(&h1_dual_fast(h, &a)?, Path::DualFast).against(inv_json(&bar.invariants)))
        }));
    }
    let sha_gate = |caps: &Caps, h: &PermGroup| -> Result<Outcome> {
        let a = fixture("A", &PermGroup::symmetric(h.degree()))?;
        let generic = sha_capped(1, h, &a, caps)?;
        Ok(Outcome::inv(&sha1_aug_fast_capped(h, caps)?, Path::Formula).against(inv_json(&generic.invariants)))
    };
    for n in [3, 4] {
        tasks.push(catalog_rows(format!("gate.sha1-fast.S{n}"), PermGroup::symmetric(n), format!("A({n})"), true, sha_gate));
    }
    let named: Vec<(&str, PermGroup)> = vec![
        ("alpha-beta.n4", alpha_beta(4, 2).expect("group")),
        ("alpha-beta.n6", alpha_beta(6, 2).expect("group")),
        ("A4", PermGroup::alternating(4)),
        ("sylow2-A4", sylow2_alt(4).expect("group")),
    ];
    for (tag, h) in named {
        let n = h.degree();
        let id = format!("gate.sha1-fast.{tag}");
        let subject = format!("A({n})");
        tasks.push(Task::gate(n, move |caps| vec![timed(id.clone(), &h, &subject, || sha_gate(caps, &h))]));
    }
    tasks
}

fn claim_tasks() -> Vec<Task> {
    let mut tasks = Vec::new();

    // H^1 of the augmentation kernel against the orbit formula.
    for n in 3..=5 {
        let g = PermGroup::symmetric(n);
        let a = fixture("A", &g).expect("fixture");
        tasks.push(catalog_rows(format!("h1-orbit-gcd.S{n}"), g, a.name().to_string(), false, move |caps, h| {
            let bar = h_bar_capped(1, h, &a, caps)?;
            Ok(Outcome::inv(&bar.invariants, Path::Bar).against(inv_json(&h1_aug_formula(h))))
        }));
    }

    for n in 2..=9 {
        let g = PermGroup::symmetric(n);
        tasks.push(single(format!("h1-transitive.n{n}"), g, "A", move |caps, g| {
            if n <= 5 {
                let a = fixture("A", g)?;
                Ok(Outcome::inv(&h_bar_capped(1, g, &a, caps)?.invariants, Path::Bar))
            } else {
                Ok(Outcome::inv(&h1_aug_formula(g), Path::Formula))
            }
        }));
    }

    let sha1_root = |caps: &Caps, h: &PermGroup| -> Result<Outcome> {
        let a = fixture("A", &PermGroup::symmetric(h.degree()))?;
        Ok(Outcome::inv(&sha_capped(1, h, &a, caps)?.invariants, Path::Bar))
    };
    for n in [4, 6, 8] {
        tasks.push(single(format!("sha1-root.alpha-beta.n{n}"), alpha_beta(n, 2).expect("group"), "A", sha1_root));
    }
    tasks.push(single("sha1-root.sigma-pi.n9", sigma_pi(3).expect("group"), "A", sha1_root));

    let fast = |caps: &Caps, h: &PermGroup| -> Result<Outcome> { Ok(Outcome::inv(&sha1_aug_fast_capped(h, caps)?, Path::Formula)) };
    tasks.push(single("sha1-alternating.fast.A4", PermGroup::alternating(4), "A", fast));
    tasks.push(single("sha1-alternating.fast.A8", PermGroup::alternating(8), "A", fast));
    tasks.push(single("sha1-alternating.fast.sylow2-A4", sylow2_alt(4).expect("group"), "A", fast));
    tasks.push(single("sha1-alternating.generic.A4", PermGroup::alternating(4), "A", sha1_root));
    tasks.push(single("sha1-alternating.generic.sylow2-A4", sylow2_alt(4).expect("group"), "A", sha1_root));

    for n in 3..=5 {
        tasks.push(single(format!("sym2-coflasque.n{n}"), PermGroup::symmetric(n), "Sym2A", |caps, g| {
            let cat = subgroups_up_to_conjugacy(g, caps.subgroups)?;
            let rep = is_coflasque(&fixture("Sym2A", g)?, &cat)?;
            let path = if rep.paths.contains(&Path::DualFast) { Path::DualFast } else { Path::Bar };
            Ok(Outcome::verdict(verdict_str(rep.verdict), path))
        }));
    }

    for n in [3, 5, 7] {
        tasks.push(single(format!("sym2-split.n{n}"), PermGroup::symmetric(n), "Sym2A", |_, g| {
            let n = g.degree();
            let s = build_named(NamedSeq::NewExact, n)?;
            let (e, u) = (s.lattice(1).expect("lattice"), s.lattice(2).expect("lattice"));
            let Some(sigma) = find_splitting(&s.maps()[1], e, u)? else {
                return Ok(Outcome::verdict("no-section", Path::Solver));
            };
            let w = witness_from_split(&s, &fixture("Sym2A", g)?, &trivial_lattice(g, 1), &sigma)?;
            w.verify()?;
            let cert = cert_from_quotient(&build_named(NamedSeq::Square, n)?, &w)?;
            cert.check()?;
            Ok(Outcome::verdict("yes", Path::Solver))
        }));
    }

    tasks.push(single("small-iso.wedge2-A2-sign", PermGroup::symmetric(3), "Wedge2A", |_, g| {
        let w = wedge2(&fixture("A", g)?);
        iso_outcome(&w, &sign_lattice(g))
    }));
    tasks.push(single("small-iso.wedge2-A3-dual-sign", PermGroup::symmetric(4), "Wedge2A", |_, g| {
        let w = wedge2(&fixture("A", g)?);
        iso_outcome(&w, &tensor(&dual(&fixture("A", g)?), &sign_lattice(g))?)
    }));

    let sha2_tensor = |caps: &Caps, h: &PermGroup| -> Result<Outcome> {
        let g = PermGroup::symmetric(h.degree());
        let s2 = sha_capped(2, h, &fixture("A2", &g)?, caps)?;
        let s1 = sha_capped(1, h, &fixture("A", &g)?, caps)?;
        Ok(Outcome::inv(&s2.invariants, Path::Bar).against(inv_json(&s1.invariants)))
    };
    let s4 = PermGroup::symmetric(4);
    tasks.push(catalog_rows_upto("sha2-tensor.S4".into(), s4.clone(), "A2(4)".into(), false, 12, sha2_tensor));
    tasks.push(single("sha2-tensor.alpha-beta.n6", alpha_beta(6, 2).expect("group"), "A2", sha2_tensor));

    for name in RHO_FIXTURES {
        let g = s4.clone();
        let prefix = format!("rho-sha2.{name}.S4");
        tasks.push(Task::new(4, move |caps| rho_rows(&prefix, &g, name, caps)));
    }

    for n in [4, 5] {
        let g = PermGroup::symmetric(n);
        tasks.push(single(format!("wedge2U.n{n}.h1"), g.clone(), "Wedge2U", |caps, g| {
            Ok(Outcome::inv(&h_bar_capped(1, g, &fixture("Wedge2U", g)?, caps)?.invariants, Path::Bar))
        }));
        tasks.push(single(format!("wedge2U.n{n}.sha1"), g.clone(), "Wedge2U", |caps, g| {
            Ok(Outcome::inv(&sha_capped(1, g, &fixture("Wedge2U", g)?, caps)?.invariants, Path::Bar))
        }));
        tasks.push(single(format!("wedge2U.n{n}.rho-h1"), g, "Wedge2U", |caps, g| {
            let cat = subgroups_up_to_conjugacy(g, caps.subgroups)?;
            let fr = flasque_resolution(&fixture("Wedge2U", g)?, &cat)?;
            let (inv, path) = h1_any(g, &fr.f, caps)?;
            Ok(Outcome::inv(&inv, path))
        }));
    }

    let h6 = even_pairs(6).expect("group");
    tasks.push(single("even-n.n6.sha1-mod2", h6.clone(), "A/2A", |caps, h| {
        let abar = mod_m(&fixture("A", &PermGroup::symmetric(6))?, 2)?;
        Ok(Outcome::inv(&sha_capped(1, h, &abar, caps)?.invariants, Path::Bar))
    }));
    tasks.push(single("even-n.n6.sha2-sym2", h6.clone(), "Sym2A", |caps, h| {
        let seq = build_named(NamedSeq::Sym2Seq, 6)?;
        let s = sha2_via_sequence_capped(h, &seq, caps)?;
        let v = if s.invariants.is_trivial() { "zero" } else { "nonzero" };
        Ok(Outcome::verdict(v, Path::Sequence))
    }));
    tasks.push(single("even-n.n6.sha2-wedge2", h6.clone(), "Wedge2A", |caps, h| {
        let w = fixture("Wedge2A", &PermGroup::symmetric(6))?;
        Ok(Outcome::inv(&sha_capped(2, h, &w, caps)?.invariants, Path::Bar))
    }));
    tasks.push(single("even-n.n6.sha2-tensor", h6.clone(), "A2", |caps, h| {
        let t = fixture("A2", &PermGroup::symmetric(6))?;
        Ok(Outcome::inv(&sha_capped(2, h, &t, caps)?.invariants, Path::Bar))
    }));
    tasks.push(single("even-n.n6.wedge-vs-tensor", h6, "Wedge2A,A2", |caps, h| {
        let g = PermGroup::symmetric(6);
        let w = sha_capped(2, h, &fixture("Wedge2A", &g)?, caps)?;
        let t = sha_capped(2, h, &fixture("A2", &g)?, caps)?;
        let v = if w.invariants != t.invariants { "not-equivalent" } else { "undecided" };
        Ok(Outcome::verdict(v, Path::Bar))
    }));

    tasks
}

fn rho_rows(prefix: &str, g: &PermGroup, name: &str, caps: &Caps) -> Vec<Partial> {
    let setup = Instant::now();
    let prepared = subgroups_up_to_conjugacy(g, caps.subgroups).and_then(|cat| {
        let m = fixture(name, g)?;
        let fr = flasque_resolution(&m, &cat)?;
        Ok((cat, m, fr))
    });
    let setup_ms = millis(setup);
    let (cat, m, fr) = match prepared {
        Ok(p) => p,
        Err(e) => {
            return vec![Partial { id: format!("{prefix}.resolution"), n: g.degree(), group: g.label(), subject: name.into(), result: Err(e), ms: setup_ms }]
        }
    };
    cat.members
        .par_iter()
        .enumerate()
        .map(|(i, h)| {
            let mut p = timed(format!("{prefix}.c{i:02}"), h, &m.name().to_string(), || {
                let (rho, path) = h1_any(h, &fr.f, caps)?;
                let direct = sha_capped(2, h, &m, caps)?;
                Ok(Outcome::inv(&rho, if path == Path::Bar { Path::Rho } else { path }).against(inv_json(&direct.invariants)))
            });
            p.ms += setup_ms;
            p
        })
        .collect()
}

fn iso_outcome(m: &glattice::glat::GLattice, n: &glattice::glat::GLattice) -> Result<Outcome> {
    let v = match find_iso(m, n)? {
        Some(f) if verify_iso(&f, m, n) => "yes",
        Some(_) => "invalid-witness",
        None => "not-found",
    };
    Ok(Outcome::verdict(v, Path::Solver))
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::Unknown => "unknown",
    }
}

fn finish(p: Partial, manifest: &Manifest) -> ReportRow {
    let claim = manifest.lookup(&p.id);
    let anchor = claim.map(|c| c.anchor.clone()).unwrap_or_default();
    let mut row = ReportRow {
        claim_id: p.id.clone(),
        anchor,
        n: p.n,
        group: p.group,
        subject: p.subject,
        computed: Value::Null,
        expected: Value::Null,
        path: String::new(),
        status: Status::Fail,
        reason: None,
        runtime_ms: p.ms,
    };
    let Some(claim) = claim else {
        row.reason = Some("claim id missing from manifest".into());
        return row;
    };
    match p.result {
        Ok(o) => {
            row.path = o.path.as_str().into();
            row.expected = match (&claim.expected, o.expected) {
                (Expected::Literal(v), _) => v.clone(),
                (Expected::Rule(_), Some(v)) => v,
                (Expected::Rule(r), None) => {
                    row.reason = Some(format!("rule {r} produced no expected value"));
                    Value::Null
                }
            };
            row.computed = o.computed;
            if row.reason.is_none() && row.computed == row.expected {
                row.status = Status::Pass;
            }
        }
        Err(e) if e.is_cap() => {
            row.status = Status::Skipped;
            row.reason = Some(e.to_string());
        }
        Err(e) => row.reason = Some(e.to_string()),
    }
    row
}

fn run_tasks(tasks: &[Task], cfg: &ReportConfig, manifest: &Manifest) -> Vec<ReportRow> {
    let mut rows: Vec<ReportRow> = tasks
        .par_iter()
        .flat_map_iter(|t| (t.job)(&cfg.caps))
        .filter(|p| p.n >= cfg.n_min && p.n <= cfg.n_max)
        .map(|p| finish(p, manifest))
        .collect();
    rows.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    rows
}

fn catalog_hashes(cfg: &ReportConfig) -> BTreeMap<String, String> {
    (3..=5)
        .filter(|n| *n >= cfg.n_min && *n <= cfg.n_max)
        .filter_map(|n| {
            let cat = subgroups_up_to_conjugacy(&PermGroup::symmetric(n), cfg.caps.subgroups).ok()?;
            Some((format!("S{n}"), cat.hash()))
        })
        .collect()
}

fn exit_code(rows: &[ReportRow], aborted: bool) -> i32 {
    if aborted || rows.iter().any(|r| r.status == Status::Fail) {
        EXIT_FAIL
    } else if rows.iter().any(|r| r.status == Status::Skipped) {
        EXIT_CAP
    } else {
        EXIT_PASS
    }
}

/// Runs the cross-check gates, then (if they all pass) every claim row.
pub fn run_report(cfg: &ReportConfig) -> Result<Report> {
    run_report_with(cfg, &Manifest::bundled()?)
}

/// [`run_report`] against a caller-supplied manifest.
pub fn run_report_with(cfg: &ReportConfig, manifest: &Manifest) -> Result<Report> {
    if cfg.n_min > cfg.n_max {
        return Err(Error::BadParams(format!("empty range n = {}..{}", cfg.n_min, cfg.n_max)));
    }
    let run = || {
        let t = Instant::now();
        let (gates, claims): (Vec<Task>, Vec<Task>) = gate_tasks().into_iter().chain(claim_tasks()).partition(|t| t.gate);
        let keep = |ts: Vec<Task>| -> Vec<Task> { ts.into_iter().filter(|t| t.n >= cfg.n_min && t.n <= cfg.n_max).collect() };
        let mut rows = run_tasks(&keep(gates), cfg, manifest);
        let aborted = rows.iter().any(|r| r.status == Status::Fail);
        if !aborted {
            rows.extend(run_tasks(&keep(claims), cfg, manifest));
            rows.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
        }
        let exit_code = exit_code(&rows, aborted);
        Report { rows, aborted, catalog_hashes: catalog_hashes(cfg), exit_code, runtime_ms: t.elapsed().as_millis() as u64 }
    };
    match cfg.threads {
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::BadParams(format!("thread pool: {e}")))?;
            Ok(pool.install(run))
        }
        None => Ok(run()),
    }
}

/// Summary object for the JSON output.
pub fn report_json(r: &Report) -> Value {
    json!({
        "summary": {
            "pass": r.count(Status::Pass),
            "fail": r.count(Status::Fail),
            "skipped": r.count(Status::Skipped),
        },
        "report": r,
    })
}
