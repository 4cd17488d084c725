use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use glattice::cohom::{cohom_json, h_bar_capped, invariants_json, sha2_via_sequence_with, sha_capped, sha_json};
use glattice::flasque::{coflasque_resolution, flasque_resolution, h1_any, is_coflasque, PredicateReport};
use glattice::glat::{find_iso, fixture, parse_fixture, split_fixture, GLattice};
use glattice::intlin::matrix_to_json;
use glattice::permgrp::{group_ref, parse_group, subgroups_up_to_conjugacy, GroupSpec, PermGroup, SubgroupCatalog};
use glattice::seqcert::{
    build_named, cert_from_quotient, cert_to_json, find_splitting, gn_middle_witness, seq_to_json, witness_from_split, NamedSeq,
};
use glattice::{Caps, Error};
use glattice_cli::report::{report_json, run_report, ReportConfig, EXIT_CAP, EXIT_CONFIG, EXIT_FAIL, EXIT_PASS};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "glattice", version, about = "Lattices, cohomology and Sha groups of permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Degree of the ambient symmetric group.
    #[arg(long)]
    n: Option<usize>,
    /// Acting group: JSON, or a name such as S4, A4, C3, alpha_beta(6,2), sylow2_alt(4).
    #[arg(long)]
    group: Option<String>,
    /// Named lattice, e.g. A(4) or Sym2A (with --n).
    #[arg(long)]
    lattice: Option<String>,
    /// Subgroup catalog: a JSON file listing groups; default enumerates all up to conjugacy.
    #[arg(long)]
    catalog: Option<PathBuf>,
    /// Caps as a JSON file or inline JSON object.
    #[arg(long)]
    caps: Option<String>,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run every claim check and print the report.
    Report {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// H^1(H, M).
    H1 {
        #[command(flatten)]
        common: Common,
    },
    /// Sha^1(H, M).
    Sha1 {
        #[command(flatten)]
        common: Common,
    },
    /// Sha^2(H, M), directly or through a named sequence ending in a permutation middle term.
    Sha2 {
        #[command(flatten)]
        common: Common,
        /// Named sequence to compute through.
        #[arg(long)]
        seq: Option<NamedSeq>,
    },
    /// Coflasque test and coflasque resolution over the catalog.
    Coflasque {
        #[command(flatten)]
        common: Common,
    },
    /// Flasque resolution; with --group also H^1 of the flasque term.
    FlasqueRes {
        #[command(flatten)]
        common: Common,
    },
    /// Certificate that the wedge and tensor squares of A are equivalent (odd n).
    Cert {
        #[command(flatten)]
        common: Common,
    },
    /// Bounded search for an equivariant isomorphism between two named lattices.
    Iso {
        #[command(flatten)]
        common: Common,
        /// Second lattice.
        #[arg(long)]
        to: String,
    },
    /// Build and verify a named exact sequence.
    Seq {
        #[command(flatten)]
        common: Common,
        /// Sequence name.
        #[arg(long)]
        name: NamedSeq,
    },
}

struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::Parse(_) | Error::BadParams(_) | Error::NotSubgroup(_) | Error::GroupMismatch => EXIT_CONFIG,
            _ => EXIT_FAIL,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn config(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_CONFIG, msg: msg.into() }
}

type Out = Result<(Value, String), Failure>;

impl Common {
    fn caps(&self) -> Result<Caps, Failure> {
        let Some(c) = &self.caps else { return Ok(Caps::default()) };
        let text = if c.trim_start().starts_with('{') {
            c.clone()
        } else {
            std::fs::read_to_string(c).map_err(|e| config(format!("reading caps {c}: {e}")))?
        };
        serde_json::from_str(&text).map_err(|e| config(format!("caps: {e}")))
    }

    fn lattice(&self) -> Result<GLattice, Failure> {
        let text = self.lattice.as_deref().ok_or_else(|| config("--lattice is required"))?;
        self.lattice_named(text)
    }

    fn lattice_named(&self, text: &str) -> Result<GLattice, Failure> {
        if text.contains('(') {
            let (_, n) = split_fixture(text)?;
            if self.n.is_some_and(|m| m != n) {
                return Err(config(format!("--n {} disagrees with {text}", self.n.unwrap())));
            }
            return Ok(parse_fixture(text)?);
        }
        let n = self.n.ok_or_else(|| config(format!("{text} needs --n or the form {text}(n)")))?;
        Ok(fixture(text, &PermGroup::symmetric(n))?)
    }

    /// Acting subgroup, defaulting to the lattice's own group.
    fn acting(&self, m: &GLattice) -> Result<PermGroup, Failure> {
        match &self.group {
            None => Ok(m.group().clone()),
            Some(s) => {
                let h = parse_group(s)?;
                h.require_subgroup_of(m.group())?;
                Ok(h)
            }
        }
    }

    fn degree(&self) -> Result<usize, Failure> {
        if let Some(n) = self.n {
            return Ok(n);
        }
        if let Some(l) = &self.lattice {
            return Ok(split_fixture(l)?.1);
        }
        Err(config("--n is required"))
    }

    fn catalog(&self, g: &PermGroup, caps: &Caps) -> Result<SubgroupCatalog, Failure> {
        let Some(path) = &self.catalog else {
            return Ok(subgroups_up_to_conjugacy(g, caps.subgroups)?);
        };
        let text = std::fs::read_to_string(path).map_err(|e| config(format!("reading {}: {e}", path.display())))?;
        let specs: Vec<Value> = serde_json::from_str(&text).map_err(|e| config(format!("catalog: {e}")))?;
        let members = specs
            .iter()
            .map(|v| match v {
                Value::String(s) => parse_group(s),
                other => serde_json::from_value::<GroupSpec>(other.clone()).map_err(Error::from)?.build(),
            })
            .collect::<glattice::Result<Vec<_>>>()?;
        Ok(SubgroupCatalog::user_supplied(g, members)?)
    }
}

fn inv_text(v: &Value) -> String {
    match v.as_array() {
        Some(a) if a.is_empty() => "0".into(),
        Some(a) => a
            .iter()
            .map(|x| if x == &json!(0) { "Z".to_string() } else { format!("Z/{}", x.as_str().map_or(x.to_string(), str::to_string)) })
            .collect::<Vec<_>>()
            .join(" + "),
        None => v.to_string(),
    }
}

fn predicate_json(p: &PredicateReport) -> Value {
    json!({
        "verdict": p.verdict,
        "failures": p.failures.iter().map(|(h, inv)| json!({"subgroup": h, "h1": glattice::cohom::invariants_list(inv)})).collect::<Vec<_>>(),
        "catalog_hash": p.catalog_hash,
        "catalog_complete": p.catalog_complete,
    })
}

fn run(cmd: Command) -> Result<(Value, String, i32, bool), Failure> {
    let (common, result): (Common, Out) = match cmd {
        Command::Report { common, n_min, n_max, threads } => {
            let (n_min, n_max) = match common.n {
                Some(n) => (n, n),
                None => (n_min, n_max),
            };
            let cfg = ReportConfig { n_min, n_max, caps: common.caps()?, threads };
            let r = run_report(&cfg)?;
            let code = r.exit_code;
            return Ok((report_json(&r), r.table(), code, common.json));
        }
        Command::H1 { common } => {
            let out = (|| {
                let caps = common.caps()?;
                let m = common.lattice()?;
                let h = common.acting(&m)?;
                match h_bar_capped(1, &h, &m, &caps) {
                    Ok(c) => {
                        let v = cohom_json(&c);
                        let t = format!("H^1({}, {}) = {}", h.label(), m.name(), inv_text(&v["invariants"]));
                        Ok((v, t))
                    }
                    Err(e) if e.is_cap() => {
                        let (inv, path) = h1_any(&h, &m, &caps)?;
                        let v = invariants_json(&h, &m.name(), 1, &inv, path);
                        let t = format!("H^1({}, {}) = {} [{}]", h.label(), m.name(), inv_text(&v["invariants"]), path.as_str());
                        Ok((v, t))
                    }
                    Err(e) => Err(e.into()),
                }
            })();
            (common, out)
        }
        Command::Sha1 { common } => {
            let out = (|| {
                let m = common.lattice()?;
                let h = common.acting(&m)?;
                let s = sha_capped(1, &h, &m, &common.caps()?)?;
                let v = sha_json(&s);
                let t = format!("Sha^1({}, {}) = {}", h.label(), m.name(), inv_text(&v["invariants"]));
                Ok((v, t))
            })();
            (common, out)
        }
        Command::Sha2 { common, seq } => {
            let out = (|| {
                let caps = common.caps()?;
                let (s, label) = match seq {
                    Some(name) => {
                        let n = common.degree()?;
                        let sq = build_named(name, n)?;
                        let h = match &common.group {
                            Some(g) => parse_group(g)?,
                            None => PermGroup::symmetric(n),
                        };
                        let witness = match name {
                            NamedSeq::Gn => Some(gn_middle_witness(&PermGroup::symmetric(n))?),
                            _ => None,
                        };
                        let s = sha2_via_sequence_with(&h, &sq, witness.as_ref().map(|(q, f)| (q, f)), &caps)?;
                        let label = s.coefficients.clone();
                        (s, label)
                    }
                    None => {
                        let m = common.lattice()?;
                        let h = common.acting(&m)?;
                        (sha_capped(2, &h, &m, &caps)?, m.name().to_string())
                    }
                };
                let v = sha_json(&s);
                let t = format!("Sha^2({}, {}) = {} [{}]", s.group.label(), label, inv_text(&v["invariants"]), s.path.as_str());
                Ok((v, t))
            })();
            (common, out)
        }
        Command::Coflasque { common } => {
            let out = (|| {
                let caps = common.caps()?;
                let m = common.lattice()?;
                let cat = common.catalog(m.group(), &caps)?;
                let pred = is_coflasque(&m, &cat)?;
                let res = coflasque_resolution(&m, &cat)?;
                let summands: Vec<String> = res.summands.iter().map(|(k, _)| k.label()).collect();
                let v = json!({
                    "lattice": m.name(),
                    "coflasque": predicate_json(&pred),
                    "resolution": {
                        "q_rank": res.q().rank(),
                        "p_rank": res.p().rank(),
                        "summands": summands,
                        "sequence": seq_to_json(&res.seq),
                    },
                });
                let t = format!(
                    "{} coflasque: {:?} ({} subgroups)\nresolution 0 -> Q (rank {}) -> P (rank {}) -> {} -> 0, P = sum of Z[G/K] for K in [{}]",
                    m.name(),
                    pred.verdict,
                    cat.len(),
                    res.q().rank(),
                    res.p().rank(),
                    m.name(),
                    summands.join(", ")
                );
                Ok((v, t))
            })();
            (common, out)
        }
        Command::FlasqueRes { common } => {
            let out = (|| {
                let caps = common.caps()?;
                let m = common.lattice()?;
                let cat = common.catalog(m.group(), &caps)?;
                let fr = flasque_resolution(&m, &cat)?;
                let mut v = json!({
                    "lattice": m.name(),
                    "p_rank": fr.p.rank(),
                    "f_rank": fr.f.rank(),
                    "flasque": predicate_json(&fr.flasque_check),
                    "catalog_hash": fr.catalog_hash,
                    "sequence": seq_to_json(&fr.seq),
                });
                let mut t = format!(
                    "0 -> {} -> P (rank {}) -> F (rank {}) -> 0, F flasque: {:?}",
                    m.name(),
                    fr.p.rank(),
                    fr.f.rank(),
                    fr.flasque_check.verdict
                );
                if common.group.is_some() {
                    let h = common.acting(&m)?;
                    let (inv, path) = h1_any(&h, &fr.f, &caps)?;
                    let j = invariants_json(&h, &fr.f.name(), 1, &inv, path);
                    t += &format!("\nH^1({}, F) = {} [{}]", h.label(), inv_text(&j["invariants"]), path.as_str());
                    v["rho_h1"] = j;
                }
                Ok((v, t))
            })();
            (common, out)
        }
        Command::Cert { common } => {
            let out = (|| {
                let n = common.degree()?;
                let g = PermGroup::symmetric(n);
                let s = build_named(NamedSeq::NewExact, n)?;
                let (e, u) = (s.lattice(1).expect("lattice"), s.lattice(2).expect("lattice"));
                let sigma = find_splitting(&s.maps()[1], e, u)?
                    .ok_or_else(|| Failure { code: EXIT_FAIL, msg: "no equivariant section found".into() })?;
                let w = witness_from_split(&s, &fixture("Sym2A", &g)?, &fixture("Z", &g)?, &sigma)?;
                w.verify()?;
                let cert = cert_from_quotient(&build_named(NamedSeq::Square, n)?, &w)?;
                cert.check()?;
                let v = json!({ "group": group_ref(&g), "certificate": cert_to_json(&cert) });
                let t = format!(
                    "{} ~ {}: two verified sequences through a middle term of rank {}",
                    cert.m.name(),
                    cert.n.name(),
                    cert.middle.rank()
                );
                Ok((v, t))
            })();
            (common, out)
        }
        Command::Iso { common, to } => {
            let out = (|| {
                let m = common.lattice()?;
                let n = common.lattice_named(&to)?;
                let v = match find_iso(&m, &n)? {
                    Some(f) => json!({ "from": m.name(), "to": n.name(), "found": true, "matrix": matrix_to_json(&f) }),
                    None => json!({ "from": m.name(), "to": n.name(), "found": false }),
                };
                let t = if v["found"] == json!(true) {
                    format!("{} ≅ {}: witness {}", m.name(), n.name(), v["matrix"]["entries"])
                } else {
                    format!("no isomorphism {} -> {} within the search bound", m.name(), n.name())
                };
                Ok((v, t))
            })();
            (common, out)
        }
        Command::Seq { common, name } => {
            let out = (|| {
                let s = build_named(name, common.degree()?)?;
                let v = seq_to_json(&s);
                let ranks: Vec<String> = s.ranks().iter().map(|r| r.to_string()).collect();
                let t = format!("{}: ranks {} verified {}", s.name, ranks.join(" -> "), s.is_verified());
                Ok((v, t))
            })();
            (common, out)
        }
    };
    let (v, t) = result?;
    Ok((v, t, EXIT_PASS, common.json))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((v, text, code, as_json)) => {
            let mut body = if as_json { serde_json::to_string_pretty(&v).expect("json") } else { text };
            if !body.ends_with('\n') {
                body.push('\n');
            }
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(code as u8)
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code as u8)
        }
    }
}
