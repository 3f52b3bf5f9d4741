//! The `wildram` command line: one subcommand per operation, reports as
//! JSON (default), CSV or plain text on stdout, diagnostics on stderr.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 usage or
//! precondition error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::asw::{oracle_detail, predicted_jumps, validate_spec, verify_deformation, TowerSpec};
use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, Rational};
use crate::psl2::{group_params, inertia_candidates, select_triple, verify_subgroup_claims, InertiaType};
use crate::ramification::{base_sigma, enumerate_admissible, genus, is_admissible, BaseSigma, JumpSequence};
use crate::suites::{self, Status, SuiteConfig};
use crate::vancycles::{infer_inertia, solve_tail_configs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Parser)]
#[command(name = "wildram", version, about = "Exact wild ramification data for one-point covers")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

fn rational(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn jumps(s: &str) -> std::result::Result<JumpSequence, String> {
    JumpSequence::parse(s).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// |PSL2(l)|, a = v_p(l^2 - 1) and m_G.
    Params {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        ell: u64,
    },
    /// The class triple with p-valuations (0, a - 1, a).
    Triple {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        ell: u64,
    },
    /// Possible inertia groups above the branch point, with a known base sequence.
    Candidates {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        ell: u64,
    },
    /// Checks conditions (a)-(d) on an upper jump sequence.
    Admissible {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
        #[arg(long = "mI")]
        m_i: u64,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, value_parser = jumps)]
        jumps: JumpSequence,
    },
    /// Lists admissible sequences with last jump at most the bound.
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m: u64,
        #[arg(long = "mI")]
        m_i: u64,
        #[arg(long, value_parser = rational)]
        bound: Rational,
    },
    /// Genus and ramification divisor degree of a one-point cover.
    Genus {
        #[arg(long)]
        order: BigInt,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        r: u32,
        /// Defaults to the value forced by the first jump.
        #[arg(long = "mI")]
        m_i: Option<u64>,
        #[arg(long, value_parser = jumps)]
        jumps: JumpSequence,
    },
    /// Upper jumps of a tower file from the degree recurrence.
    TowerPredict {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Upper jumps of a tower file from the conductor computation (r <= 2).
    TowerOracle {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Deforms a tower to a larger compatible jump sequence.
    Deform {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_parser = jumps)]
        jumps: JumpSequence,
        #[arg(long, default_value_t = 1)]
        scale: u64,
        /// Writes the deformed tower file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solutions of the vanishing-cycles equation.
    Tails {
        #[arg(long = "mG")]
        m_g: u64,
        #[arg(long)]
        n_prim: usize,
        #[arg(long, default_value_t = 0)]
        n_new_min: usize,
        #[arg(long)]
        n_new_max: Option<usize>,
        /// Invariants above 2 never occur, so the default loses nothing.
        #[arg(long, value_parser = rational, default_value = "2")]
        sigma_bound: Rational,
    },
    /// What a tail invariant allows for the inertia group.
    Infer {
        #[arg(long, value_parser = rational)]
        sigma: Rational,
        #[arg(long)]
        p: u64,
        #[arg(long = "mG")]
        m_g: u64,
    },
    /// Exhaustive subgroup verification in PSL2(l).
    VerifyGroup {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        ell: u64,
        #[arg(long, default_value_t = crate::psl2::DEFAULT_SUBGROUP_BUDGET)]
        budget: usize,
    },
    /// Runs every acceptance check.
    CheckAll {
        #[arg(long, default_value_t = crate::psl2::DEFAULT_SUBGROUP_BUDGET)]
        budget_subgroup: usize,
        /// Tower files added to the oracle comparison.
        #[arg(long)]
        fixture: Vec<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    anchor: &'static str,
    quote: &'static str,
    body: Map<String, Value>,
    /// Records for CSV and plain output; `None` means the body is one record.
    rows: Option<Vec<Value>>,
    failure: Option<String>,
}

impl Report {
    fn new(anchor: &'static str, quote: &'static str, body: impl Serialize) -> Result<Self> {
        let body = match to_value(body)? {
            Value::Object(map) => map,
            other => Map::from_iter([("value".to_string(), other)]),
        };
        Ok(Self { anchor, quote, body, rows: None, failure: None })
    }

    fn rows(mut self, rows: Vec<Value>) -> Self {
        self.rows = Some(rows);
        self
    }

    fn fail_if(mut self, failed: bool, why: impl FnOnce() -> String) -> Self {
        if failed {
            self.failure = Some(why());
        }
        self
    }
}

fn to_value(v: impl Serialize) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Invariant(format!("serialization: {e}")))
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command).and_then(|r| render(&r, cli.format).map(|s| (r, s))) {
        Ok((report, stdout)) => match report.failure {
            Some(why) => Outcome { code: 1, stdout, stderr: format!("check failed: {why}\n") },
            None => Outcome { code: 0, stdout, stderr: String::new() },
        },
        Err(e) => {
            let code = if matches!(e, Error::Invariant(_)) { 1 } else { 2 };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

fn read_spec(path: &PathBuf) -> Result<TowerSpec> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Argument(format!("cannot read {}: {e}", path.display())))?;
    TowerSpec::parse(&text)
}

const ADMISSIBLE: &str = "(a) u_i in (1/m)Z; (b) gcd(m, m*u_1) = m/m_I; (c) p does not divide m*u_1, and each u_i = p*u_(i-1) or u_i > p*u_(i-1) with p not dividing m*u_i; (d) m*u_i = m*u_1 mod m";

fn dispatch(command: Command) -> Result<Report> {
    match command {
        Command::Params { p, ell } => Report::new(
            "group-params",
            "|PSL2(l)| = l(l^2 - 1)/2, a = v_p(l^2 - 1), m_G = 2 when p divides the order",
            group_params(p, ell)?,
        ),
        Command::Triple { p, ell } => Report::new(
            "class-triple",
            "semisimple classes whose projective orders have p-valuations 0, a - 1, a",
            select_triple(p, ell)?,
        ),
        Command::Candidates { p, ell } => {
            let gp = group_params(p, ell)?;
            let mut rows = Vec::new();
            for inertia in inertia_candidates(&gp) {
                let sigma = match base_sigma(&inertia, ell) {
                    Ok(BaseSigma::Known(j)) => to_value(j)?,
                    Ok(BaseSigma::Unknown) => json!("unknown"),
                    Err(Error::Hypothesis(_)) => Value::Null,
                    Err(e) => return Err(e),
                };
                rows.push(json!({
                    "inertia": inertia.name(),
                    "p": inertia.p,
                    "r": inertia.r,
                    "m": inertia.m,
                    "m_I": inertia.m_i,
                    "base_sigma": sigma,
                }));
            }
            Ok(Report::new(
                "inertia-candidates",
                "Z/p^r and D_(p^r) for 1 <= r <= a",
                json!({"p": p, "ell": ell, "candidates": rows.clone()}),
            )?
            .rows(rows))
        }
        Command::Admissible { p, m, m_i, r, jumps } => {
            let r = r.unwrap_or(jumps.len() as u32);
            let inertia = InertiaType::new(p, r, m, m_i)?;
            let v = is_admissible(&inertia, &jumps)?;
            Report::new(
                "admissibility",
                ADMISSIBLE,
                json!({
                    "inertia": inertia.name(),
                    "jumps": jumps,
                    "admissible": v.admissible,
                    "failed": v.first_failure().map(|c| c.condition.label().to_string()),
                    "conditions": v.conditions,
                }),
            )
        }
        Command::Enumerate { p, r, m, m_i, bound } => {
            let inertia = InertiaType::new(p, r, m, m_i)?;
            let list = enumerate_admissible(&inertia, &bound);
            let rows = list.iter().map(|j| json!({"jumps": j})).collect::<Vec<_>>();
            Ok(Report::new(
                "enumerate-admissible",
                ADMISSIBLE,
                json!({"inertia": inertia.name(), "bound": bound.to_string(), "count": list.len(), "sequences": list}),
            )?
            .rows(rows))
        }
        Command::Genus { order, p, m, r, m_i, jumps } => {
            let m_i = match m_i {
                Some(v) => v,
                None => forced_action_order(m, &jumps)?,
            };
            let inertia = InertiaType::new(p, r, m, m_i)?;
            let g = genus(&order, &inertia, &jumps)?;
            let value = match g.as_integer() {
                Some(n) => int_value(&n),
                None => json!(g.value.to_string()),
            };
            Report::new(
                "genus",
                "deg R = m p^r - 1 + (p - 1) m sum p^(i-1) u_i; g = 1 - |G| + |G| deg R / (2 m p^r)",
                json!({
                    "inertia": inertia.name(),
                    "jumps": jumps,
                    "genus": value,
                    "divisor_degree": int_value(&g.divisor_degree),
                    "status": g.status,
                }),
            )
        }
        Command::TowerPredict { spec } => {
            let t = read_spec(&spec)?;
            let v = validate_spec(&t);
            if !v.valid {
                return Err(Error::Precondition(format!("invalid tower: {}", v.violations.join("; "))));
            }
            let jumps = predicted_jumps(&t)?;
            Report::new(
                "tower-recurrence",
                "u_1 = deg(x_1)/m, u_i = max(deg(x_i)/m, p u_(i-1))",
                json!({
                    "p": t.p(),
                    "m": t.m(),
                    "r": t.r(),
                    "residue_class": t.residue_class(),
                    "inertia": t.inertia()?.name(),
                    "jumps": jumps,
                    "oracle_verified": t.r() <= 2,
                    "note": if t.r() <= 2 { "covered by the conductor oracle" } else { "unverified by oracle" },
                }),
            )
        }
        Command::TowerOracle { spec } => {
            let t = read_spec(&spec)?;
            let o = oracle_detail(&t)?;
            let predicted = validate_spec(&t).valid.then(|| predicted_jumps(&t)).transpose()?;
            let agrees = predicted.as_ref().map(|p| *p == o.upper);
            Ok(Report::new(
                "tower-oracle",
                "lower jumps from Artin-Schreier-Witt reduction over k((x)), upper jumps by the Herbrand function",
                json!({
                    "lower": o.lower,
                    "upper": o.upper,
                    "predicted": predicted,
                    "agrees": agrees,
                }),
            )?
            .fail_if(agrees == Some(false), || {
                format!("oracle {} differs from recurrence {}", o.upper, predicted.expect("compared"))
            }))
        }
        Command::Deform { spec, jumps, scale, out } => {
            let t = read_spec(&spec)?;
            let v = verify_deformation(&t, &jumps, scale)?;
            if let Some(path) = out {
                std::fs::write(&path, &v.deformed)
                    .map_err(|e| Error::Argument(format!("cannot write {}: {e}", path.display())))?;
            }
            let passed = v.passed;
            let why = format!("target {} but recurrence {} / oracle {:?}", v.target, v.predicted, v.oracle);
            Ok(Report::new(
                "deformation",
                "x_i -> x_i + t x^(m u_i') when u_i' > p u_(i-1)' and u_i' > u_i; the deformed tower has jumps u'",
                v,
            )?
            .fail_if(!passed, || why))
        }
        Command::Tails { m_g, n_prim, n_new_min, n_new_max, sigma_bound } => {
            let configs = solve_tail_configs(m_g, n_prim, n_new_min..=n_new_max.unwrap_or(usize::MAX), &sigma_bound)?;
            let rows = configs.iter().map(|c| json!({"tails": c})).collect::<Vec<_>>();
            Ok(Report::new(
                "vanishing-cycles",
                "sum over new tails of (sigma_b - 1) + sum over primitive tails of sigma_b = 1",
                json!({"m_G": m_g, "count": configs.len(), "configurations": configs}),
            )?
            .rows(rows))
        }
        Command::Infer { sigma, p, m_g } => Report::new(
            "inertia-from-tail",
            "sigma_b >= p^(r-1)/m_G; non-integral sigma_b excludes abelian inertia (Hasse-Arf)",
            infer_inertia(&sigma, p, m_g)?,
        ),
        Command::VerifyGroup { p, ell, budget } => {
            let report = verify_subgroup_claims(p, ell, budget)?;
            let failed: Vec<&str> =
                report.claims.iter().filter(|c| c.status != crate::psl2::ClaimStatus::Pass).map(|c| c.id).collect();
            let all = report.all_pass();
            Ok(Report::new(
                "subgroup-claims",
                "D_p exists; nonabelian Z/p x| Z/m is D_p; the only quasi-p subgroup containing D_p is the whole group",
                report,
            )?
            .fail_if(!all, || format!("claims failed: {failed:?}")))
        }
        Command::CheckAll { budget_subgroup, fixture } => {
            let fixtures = fixture.iter().map(read_spec).collect::<Result<Vec<_>>>()?;
            let outcomes = suites::run_all(&SuiteConfig { subgroup_budget: budget_subgroup, fixtures });
            let first_fail = outcomes.iter().find(|o| o.status == Status::Fail).cloned();
            let rows = outcomes.iter().map(to_value).collect::<Result<Vec<_>>>()?;
            Ok(Report::new(
                "acceptance",
                "every acceptance criterion, in order",
                json!({"passed": first_fail.is_none(), "criteria": outcomes}),
            )?
            .rows(rows)
            .fail_if(first_fail.is_some(), || {
                let o = first_fail.expect("checked");
                format!("criterion {} ({}): {}", o.criterion, o.name, o.detail)
            }))
        }
    }
}

/// `m_I = m / gcd(m, m·u_1)`, the only value condition (b) allows.
fn forced_action_order(m: u64, jumps: &JumpSequence) -> Result<u64> {
    let mu = &jumps.jumps()[0] * Rational::from_integer(m.into());
    if !mu.is_integer() {
        return Err(Error::Precondition(format!("m*u_1 = {mu} is not an integer")));
    }
    let mu = BigInt::from(m).gcd(&mu.to_integer());
    Ok(m / u64::try_from(mu).expect("gcd divides m"))
}

/// JSON number when it fits in an i64, decimal string otherwise.
fn int_value(n: &BigInt) -> Value {
    i64::try_from(n).map_or_else(|_| json!(n.to_string()), |v| json!(v))
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn render(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut out = Map::new();
            out.insert("anchor".into(), json!(report.anchor));
            out.insert("quote".into(), json!(report.quote));
            out.extend(report.body.clone());
            let mut s = serde_json::to_string_pretty(&Value::Object(out))
                .map_err(|e| Error::Invariant(format!("serialization: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let rows = report.rows.clone().unwrap_or_else(|| vec![Value::Object(report.body.clone())]);
            let mut w = csv::Writer::from_writer(Vec::new());
            let header: Vec<String> = match rows.first() {
                Some(Value::Object(m)) => m.keys().cloned().collect(),
                _ => vec!["value".into()],
            };
            let csv_err = |e: csv::Error| Error::Invariant(format!("csv: {e}"));
            w.write_record(&header).map_err(csv_err)?;
            for row in &rows {
                let record: Vec<String> = match row {
                    Value::Object(m) => header.iter().map(|k| m.get(k).map(cell).unwrap_or_default()).collect(),
                    other => vec![cell(other)],
                };
                w.write_record(&record).map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Invariant(format!("csv: {e}")))?;
            String::from_utf8(bytes).map_err(|e| Error::Invariant(format!("csv: {e}")))
        }
        Format::Plain => {
            let mut out = String::new();
            match &report.rows {
                Some(rows) => {
                    for row in rows {
                        let line: Vec<String> = match row {
                            Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", cell(v))).collect(),
                            other => vec![cell(other)],
                        };
                        out.push_str(&line.join(" "));
                        out.push('\n');
                    }
                }
                None => {
                    for (k, v) in &report.body {
                        out.push_str(&format!("{k}: {}\n", cell(v)));
                    }
                }
            }
            Ok(out)
        }
    }
}
