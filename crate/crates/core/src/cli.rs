//! Command-line front end. Every result is one JSON line on stdout;
//! diagnostics and timings go to stderr.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::borel::{self, BorelProfile, IdealLabel};
use crate::error::{Error, ErrorClass, Result};
use crate::orbit::{self, calibration_report, corank_estimate, rs_bcd, springer_pair, springer_reconstruct};
use crate::partition::{ClassicalType, EoConvention, Partition};
use crate::selftest;
use crate::weight::{WeightValue, WeightVector};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "nilorbit", version, about = "Orbit partitions and annihilator labels of highest weight modules")]
pub struct Cli {
    /// Pin the merge-reading convention, e.g. `B:even,C:odd,D:even`.
    #[arg(long, global = true)]
    pub convention: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Default, Clone)]
pub struct Input {
    /// Payload file (`-` for stdin).
    pub file: Option<PathBuf>,
    /// Payload file, same as the positional argument.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// File holding a JSON array of payloads.
    #[arg(long)]
    pub batch: Option<PathBuf>,
}

#[derive(Debug, Args, Default, Clone)]
pub struct WeightArgs {
    #[arg(long = "type")]
    pub lie_type: Option<String>,
    /// Comma-separated values: `1`, `-1/2`, `s1`, `s2+1/2`.
    #[arg(long = "f", allow_hyphen_values = true)]
    pub f: Option<String>,
    #[command(flatten)]
    pub input: Input,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbit partition of a weight.
    Orbit(WeightArgs),
    /// Corank estimate of a weight.
    Corank(WeightArgs),
    /// Springer pair of an orbit partition.
    Springer {
        #[command(flatten)]
        weight: WeightArgs,
        /// Comma-separated parts.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Whether the annihilator of a profile is nonzero.
    Criterion(Input),
    /// Dominance and ideal-Borel test of a profile.
    Dominant(Input),
    /// Annihilator label and rank of a dominant profile.
    Label(Input),
    /// Dual label under the o/sp duality.
    Ospdual {
        #[command(flatten)]
        input: Input,
        /// `sl` applies the sl involution instead.
        #[arg(long)]
        mode: Option<String>,
    },
    /// Search the merge-reading conventions against the anchors.
    Calibrate,
    /// Randomized invariant sweep.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2000)]
        cases: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Orbit(_) => "orbit",
            Command::Corank(_) => "corank",
            Command::Springer { .. } => "springer",
            Command::Criterion(_) => "criterion",
            Command::Dominant(_) => "dominant",
            Command::Label(_) => "label",
            Command::Ospdual { .. } => "ospdual",
            Command::Calibrate => "calibrate",
            Command::Selftest { .. } => "selftest",
        }
    }
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub stdout: Vec<String>,
    pub stderr: Vec<String>,
    pub code: i32,
}

pub fn exit_code(class: ErrorClass) -> i32 {
    match class {
        ErrorClass::Schema => 2,
        ErrorClass::Domain => 3,
        ErrorClass::Invariant => 4,
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    version: &'a str,
    input_sha256: String,
    convention: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<Value>,
    warnings: Vec<String>,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn error_value(e: &Error) -> Value {
    let class = match e.class() {
        ErrorClass::Schema => "schema",
        ErrorClass::Domain => "domain",
        ErrorClass::Invariant => "invariant",
    };
    let mut v = json!({ "class": class, "message": e.to_string() });
    if let Some(state) = e.state() {
        v["state"] = state.clone();
    }
    v
}

/// Result of one payload: canonical input, result, warnings.
type Item = (Value, Result<(Value, Vec<String>)>);

fn read_source(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Error::Schema(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Schema(format!("{}: {e}", path.display())))
    }
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Schema(format!("invalid JSON: {e}")))
}

/// Raw payloads named by the input flags: one, or one per batch entry.
fn payloads(input: &Input) -> Result<Option<Vec<Value>>> {
    let single = match (&input.file, &input.json) {
        (Some(_), Some(_)) => return Err(Error::Schema("give the payload once".into())),
        (a, b) => a.as_ref().or(b.as_ref()),
    };
    match (single, &input.batch) {
        (Some(_), Some(_)) => Err(Error::Schema("--batch excludes a single payload".into())),
        (Some(p), None) => Ok(Some(vec![parse_json(&read_source(p)?)?])),
        (None, Some(p)) => match parse_json(&read_source(p)?)? {
            Value::Array(items) => Ok(Some(items)),
            _ => Err(Error::Schema("a batch file holds a JSON array".into())),
        },
        (None, None) => Ok(None),
    }
}

fn typed<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Schema(e.to_string()))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("results serialize")
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpringerInput {
    #[serde(rename = "type")]
    lie_type: ClassicalType,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    partition: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    f: Option<Vec<WeightValue>>,
}

fn weight_payloads(args: &WeightArgs) -> Result<Vec<Value>> {
    if let Some(list) = &args.f {
        let t: ClassicalType =
            args.lie_type.as_deref().ok_or_else(|| Error::Schema("--f needs --type".into()))?.parse()?;
        if payloads(&args.input)?.is_some() {
            return Err(Error::Schema("--f excludes file input".into()));
        }
        return Ok(vec![to_value(&WeightVector::parse(t, list)?)]);
    }
    payloads(&args.input)?.ok_or_else(|| Error::Schema("no weight given".into()))
}

fn profile_payloads(input: &Input) -> Result<Vec<Value>> {
    payloads(input)?.ok_or_else(|| Error::Schema("no profile given".into()))
}

fn orbit_item(raw: &Value, conv: &EoConvention) -> Item {
    match typed::<WeightVector>(raw) {
        Ok(f) => {
            let r = rs_bcd(&f, conv).map(|r| (to_value(&r), r.warnings.clone()));
            (to_value(&f), r)
        }
        Err(e) => (raw.clone(), Err(e)),
    }
}

fn corank_item(raw: &Value) -> Item {
    match typed::<WeightVector>(raw) {
        Ok(f) => {
            let r = json!({ "type": f.lie_type, "n": f.n(), "corank_estimate": corank_estimate(&f) });
            (to_value(&f), Ok((r, vec![])))
        }
        Err(e) => (raw.clone(), Err(e)),
    }
}

fn springer_item(raw: &Value, conv: &EoConvention) -> Item {
    let input = match typed::<SpringerInput>(raw) {
        Ok(i) => i,
        Err(e) => return (raw.clone(), Err(e)),
    };
    let canonical = to_value(&input);
    let t = input.lie_type;
    let res = (|| {
        let (p, warnings) = match (input.partition, input.f) {
            (Some(p), None) => (p, vec![]),
            (None, Some(f)) => {
                let r = rs_bcd(&WeightVector::new(t, f)?, conv)?;
                (r.partition, r.warnings)
            }
            _ => return Err(Error::Schema("give exactly one of partition and f".into())),
        };
        let (alpha, beta) = springer_pair(&p, t);
        let rebuilt = springer_reconstruct(&(alpha.clone(), beta.clone()), t);
        let r = json!({ "type": t, "partition": p, "alpha": alpha, "beta": beta, "reconstructed": rebuilt });
        Ok((r, warnings))
    })();
    (canonical, res)
}

fn profile_item(raw: &Value, f: impl Fn(&BorelProfile) -> Result<Value>) -> Item {
    match typed::<BorelProfile>(raw) {
        Ok(p) => (to_value(&p), f(&p).map(|v| (v, vec![]))),
        Err(e) => (raw.clone(), Err(e)),
    }
}

fn label_item(raw: &Value, sl_mode: bool) -> Item {
    match typed::<IdealLabel>(raw) {
        Ok(l) => {
            let dual = if sl_mode { borel::sl_involution(&l) } else { borel::osp_dual(&l) };
            (to_value(&l), dual.map(|d| (to_value(&d), vec![])))
        }
        Err(e) => (raw.clone(), Err(e)),
    }
}

fn resolve_convention(flag: Option<&str>) -> Result<EoConvention> {
    match flag {
        Some(s) => s.parse(),
        None => orbit::calibrate(),
    }
}

/// Runs one command and collects its output.
pub fn run(cli: &Cli) -> Outcome {
    let started = Instant::now();
    let command = cli.command.name();
    let mut out = Outcome::default();
    let conv = match resolve_convention(cli.convention.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            let env = Envelope {
                command,
                version: VERSION,
                input_sha256: sha256_hex(b"null"),
                convention: cli.convention.clone().unwrap_or_default(),
                result: None,
                error: Some(error_value(&e)),
                warnings: vec![],
            };
            out.stdout.push(serde_json::to_string(&env).expect("envelope serializes"));
            out.code = exit_code(e.class());
            return out;
        }
    };
    let fingerprint = conv.fingerprint();
    let items: Result<Vec<Item>> = (|| {
        Ok(match &cli.command {
            Command::Orbit(args) => weight_payloads(args)?.par_iter().map(|v| orbit_item(v, &conv)).collect(),
            Command::Corank(args) => weight_payloads(args)?.par_iter().map(corank_item).collect(),
            Command::Springer { weight, partition } => {
                let raws = match partition {
                    Some(list) => {
                        let t = weight
                            .lie_type
                            .as_deref()
                            .ok_or_else(|| Error::Schema("--partition needs --type".into()))?;
                        let parts = list
                            .split(',')
                            .filter(|s| !s.trim().is_empty())
                            .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Schema(format!("bad part {s:?}"))))
                            .collect::<Result<Vec<_>>>()?;
                        vec![json!({ "type": t.parse::<ClassicalType>()?, "partition": Partition::new(parts) })]
                    }
                    None => weight_payloads(weight)?,
                };
                raws.par_iter().map(|v| springer_item(v, &conv)).collect()
            }
            Command::Criterion(input) => profile_payloads(input)?
                .par_iter()
                .map(|v| profile_item(v, |p| Ok(to_value(&borel::criterion(p)))))
                .collect(),
            Command::Dominant(input) => profile_payloads(input)?
                .par_iter()
                .map(|v| {
                    profile_item(v, |p| {
                        Ok(json!({ "dominant": borel::is_dominant(p), "ideal_borel": borel::is_ideal_borel(p) }))
                    })
                })
                .collect(),
            Command::Label(input) => profile_payloads(input)?
                .par_iter()
                .map(|v| {
                    profile_item(v, |p| {
                        let label = borel::annihilator_label(p)?;
                        let rank = borel::rank(&label).ok();
                        Ok(json!({ "label": label, "rank": rank }))
                    })
                })
                .collect(),
            Command::Ospdual { input, mode } => {
                let sl = match mode.as_deref() {
                    None | Some("osp") => false,
                    Some("sl") => true,
                    Some(other) => return Err(Error::Schema(format!("unknown mode {other:?}"))),
                };
                profile_payloads(input)?.par_iter().map(|v| label_item(v, sl)).collect()
            }
            Command::Calibrate => {
                let report = calibration_report();
                out.stderr.push(report.render());
                let res = match orbit::calibrate() {
                    Ok(c) => Ok((json!({ "convention": c.fingerprint(), "report": report }), vec![])),
                    Err(e) => Err(e),
                };
                vec![(Value::Null, res)]
            }
            Command::Selftest { seed, cases } => {
                let report = selftest::run(*seed, *cases, &conv);
                let input = json!({ "seed": seed, "cases": cases });
                let res = if report.ok {
                    Ok((to_value(&report), vec![]))
                } else {
                    Err(Error::Invariant { what: "selftest found violations".into(), state: to_value(&report) })
                };
                vec![(input, res)]
            }
        })
    })();
    let items = match items {
        Ok(items) => items,
        Err(e) => vec![(Value::Null, Err(e))],
    };
    for (input, res) in &items {
        let input_sha256 = sha256_hex(serde_json::to_string(input).expect("values serialize").as_bytes());
        let env = match res {
            Ok((result, warnings)) => Envelope {
                command,
                version: VERSION,
                input_sha256,
                convention: fingerprint.clone(),
                result: Some(result.clone()),
                error: None,
                warnings: warnings.clone(),
            },
            Err(e) => {
                out.code = out.code.max(exit_code(e.class()));
                out.stderr.push(format!("{command}: {e}"));
                Envelope {
                    command,
                    version: VERSION,
                    input_sha256,
                    convention: fingerprint.clone(),
                    result: None,
                    error: Some(error_value(e)),
                    warnings: vec![],
                }
            }
        };
        out.stdout.push(serde_json::to_string(&env).expect("envelope serializes"));
    }
    out.stderr.push(format!("{command}: {} item(s) in {:.3} ms", items.len(), started.elapsed().as_secs_f64() * 1e3));
    out
}
