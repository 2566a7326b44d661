//! Command-line dispatch: verb-tree commands over the library, JSON results
//! on standard output with deterministic key ordering.
//!
//! Exit codes: 0 on success, 1 on a domain error (for example a polynomial
//! outside Delta), 2 on a parse error. The environment variable
//! `HAAL_PRECISION` overrides the root-isolation precision used when
//! building solvmanifold descriptors.

use crate::dim12::{self, BCase, Dim12Input, LatticeVerdict, NoLatticeReason, V0Status, WitnessRef};
use crate::intpoly::{self, IntPoly};
use crate::liegroup;
use crate::matrix::RatMatrix;
use crate::nilpotent::{self, CanonicalKind, Condition, JordanData, StructureKind};
use crate::numeric::Mat64;
use crate::parse;
use crate::quaternion::{self, SigmaTuple};
use crate::rational::{format_rat, parse_rat, rat_to_f64, Rat};
use crate::solv;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;

pub const SCHEMA: &str = "haal/1";

struct CliError {
    code: i32,
    message: String,
}

fn domain(message: impl Into<String>) -> CliError {
    CliError {
        code: 1,
        message: message.into(),
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

struct Args {
    positional: Vec<String>,
    flags: BTreeMap<String, String>,
    switches: Vec<String>,
}

const SWITCHES: &[&str] = &["two-step", "exact"];

fn parse_args(args: &[String]) -> Result<Args, CliError> {
    let mut positional = Vec::new();
    let mut flags = BTreeMap::new();
    let mut switches = Vec::new();
    let mut i = 0;
    while i < args.len() {
        let a = &args[i];
        if let Some(name) = a.strip_prefix("--") {
            if SWITCHES.contains(&name) {
                switches.push(name.to_string());
                i += 1;
            } else {
                let value = args
                    .get(i + 1)
                    .ok_or_else(|| usage(format!("flag --{name} needs a value")))?;
                flags.insert(name.to_string(), value.clone());
                i += 2;
            }
        } else {
            positional.push(a.clone());
            i += 1;
        }
    }
    Ok(Args {
        positional,
        flags,
        switches,
    })
}

impl Args {
    fn flag(&self, name: &str) -> Option<&str> {
        self.flags.get(name).map(|s| s.as_str())
    }

    fn require(&self, name: &str) -> Result<&str, CliError> {
        self.flag(name)
            .ok_or_else(|| usage(format!("missing required flag --{name}")))
    }

    fn has_switch(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }

    fn rat(&self, name: &str, default: Rat) -> Result<Rat, CliError> {
        match self.flag(name) {
            None => Ok(default),
            Some(s) => parse_rat(s).map_err(|e| usage(format!("--{name}: {e}"))),
        }
    }

    fn require_rat(&self, name: &str) -> Result<Rat, CliError> {
        parse_rat(self.require(name)?).map_err(|e| usage(format!("--{name}: {e}")))
    }

    fn usize(&self, name: &str) -> Result<usize, CliError> {
        self.require(name)?
            .parse()
            .map_err(|_| usage(format!("--{name} must be a nonnegative integer")))
    }

    fn f64(&self, name: &str, default: f64) -> Result<f64, CliError> {
        match self.flag(name) {
            None => Ok(default),
            Some(s) => s
                .parse()
                .map_err(|_| usage(format!("--{name} must be a number"))),
        }
    }

    fn kind(&self) -> Result<StructureKind, CliError> {
        match self.flag("kind") {
            None | Some("hypercomplex") => Ok(StructureKind::Hypercomplex),
            Some("complex") => Ok(StructureKind::Complex),
            Some(other) => Err(usage(format!(
                "--kind must be `hypercomplex` or `complex`, found `{other}`"
            ))),
        }
    }
}

fn read_matrix_file(path: &str) -> Result<RatMatrix, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read `{path}`: {e}")))?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| usage(format!("`{path}`: {e}")))?;
    parse::matrix_from_json(&value).map_err(|e| usage(format!("`{path}`: {e}")))
}

fn poly_arg(args: &Args, index: usize) -> Result<IntPoly, CliError> {
    let text = args
        .positional
        .get(index)
        .ok_or_else(|| usage("missing polynomial argument"))?;
    parse::parse_poly(text).map_err(|e| usage(e.to_string()))
}

fn sigma_json(t: &SigmaTuple) -> Value {
    json!({"r": t.r(), "m": t.m, "p": t.p, "s": t.s})
}

fn root_precision(args: &Args) -> Result<Option<f64>, CliError> {
    if let Some(p) = args.flag("precision") {
        return p
            .parse()
            .map(Some)
            .map_err(|_| usage("--precision must be a number"));
    }
    match std::env::var("HAAL_PRECISION") {
        Ok(v) => v
            .parse()
            .map(Some)
            .map_err(|_| usage("HAAL_PRECISION must be a number")),
        Err(_) => Ok(None),
    }
}

/// Run one command; returns the exit code and the JSON payload.
pub fn run(args: &[String]) -> (i32, Value) {
    match dispatch(args) {
        Ok(mut v) => {
            if let Some(obj) = v.as_object_mut() {
                obj.insert("schema".into(), json!(SCHEMA));
            }
            (0, v)
        }
        Err(e) => (e.code, json!({"schema": SCHEMA, "error": e.message})),
    }
}

fn dispatch(raw: &[String]) -> Result<Value, CliError> {
    let (group, rest) = raw
        .split_first()
        .ok_or_else(|| usage("usage: haal <quat|nilp|dim12|poly|solv|lattice|exp> ..."))?;
    match group.as_str() {
        "quat" => quat_cmd(rest),
        "nilp" => nilp_cmd(rest),
        "dim12" => dim12_cmd(rest),
        "poly" => poly_cmd(rest),
        "solv" => solv_cmd(rest),
        "lattice" => lattice_cmd(rest),
        "exp" => exp_cmd(rest),
        other => Err(usage(format!("unknown command `{other}`"))),
    }
}

fn quat_cmd(raw: &[String]) -> Result<Value, CliError> {
    let (verb, rest) = raw
        .split_first()
        .ok_or_else(|| usage("usage: haal quat jordan ..."))?;
    let args = parse_args(rest)?;
    match verb.as_str() {
        "jordan" => {
            let tuple = if let Some(path) = args.flag("real-file") {
                let m = read_matrix_file(path)?;
                quaternion::sigma_tuple_from_real(&m).map_err(|e| domain(e.to_string()))?
            } else {
                let text = match args.flag("file") {
                    Some(path) => std::fs::read_to_string(path)
                        .map_err(|e| usage(format!("cannot read `{path}`: {e}")))?,
                    None => args
                        .flag("json")
                        .ok_or_else(|| usage("provide --file, --json or --real-file"))?
                        .to_string(),
                };
                let value: Value =
                    serde_json::from_str(&text).map_err(|e| usage(e.to_string()))?;
                let q = parse::quat_matrix_from_json(&value).map_err(|e| usage(e.to_string()))?;
                quaternion::quat_jordan_nilpotent(&q).map_err(|e| domain(e.to_string()))?
            };
            Ok(sigma_json(&tuple))
        }
        other => Err(usage(format!("unknown quat verb `{other}`"))),
    }
}

fn parse_sigma(args: &Args) -> Result<SigmaTuple, CliError> {
    let list = |name: &str| -> Result<Vec<usize>, CliError> {
        match args.flag(name) {
            None | Some("") => Ok(vec![]),
            Some(s) => s
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse()
                        .map_err(|_| usage(format!("--{name}: bad entry `{x}`")))
                })
                .collect(),
        }
    };
    let m = list("m")?;
    let p = list("p")?;
    let s = args
        .flag("s")
        .unwrap_or("0")
        .parse()
        .map_err(|_| usage("--s must be a nonnegative integer"))?;
    if m.len() != p.len() {
        return Err(usage("--m and --p must have the same length"));
    }
    if !m.windows(2).all(|w| w[0] > w[1]) || m.iter().any(|&x| x < 2) || p.contains(&0) {
        return Err(usage(
            "--m must be strictly decreasing with entries >= 2 and --p positive",
        ));
    }
    Ok(SigmaTuple::new(m, p, s))
}

fn canonical_kind_json(kind: &CanonicalKind) -> Value {
    match kind {
        CanonicalKind::Abelian => json!({"kind": "abelian"}),
        CanonicalKind::N { s } => json!({"kind": "n", "s": s}),
        CanonicalKind::A { sigma, ell } => {
            json!({"kind": "a", "ell": ell, "sigma": sigma_json(sigma)})
        }
    }
}

fn nilp_cmd(raw: &[String]) -> Result<Value, CliError> {
    let (verb, rest) = raw
        .split_first()
        .ok_or_else(|| usage("usage: haal nilp <count|canon|admissible|classify> ..."))?;
    let args = parse_args(rest)?;
    match verb.as_str() {
        "count" => {
            let n = args.usize("n")?;
            if n < 2 {
                return Err(domain("count requires n >= 2"));
            }
            let kind = args.kind()?;
            let count = nilpotent::count_classes(n, kind);
            let tuples: Vec<Value> = count
                .by_tuple
                .iter()
                .map(|(t, c)| {
                    json!({"sigma": sigma_json(t), "classes": c})
                })
                .collect();
            let mut out = json!({
                "n": n,
                "total": count.total,
                "trivial_block_classes": 1,
                "tuples": tuples,
            });
            if args.has_switch("two-step") {
                out["two_step"] = json!(nilpotent::count_two_step(n, kind));
            }
            Ok(out)
        }
        "canon" => {
            let sigma = parse_sigma(&args)?;
            let ell = args.usize("ell")?;
            let kind = args.kind()?;
            let c = nilpotent::canonical_matrix(&sigma, ell, kind)
                .map_err(|e| domain(e.to_string()))?;
            Ok(json!({
                "class": canonical_kind_json(&c.kind),
                "n": c.n,
                "step": c.step(),
                "matrix": parse::matrix_to_json(&c.matrix),
                "kernel_dims": c.matrix.kernel_dim_sequence(),
            }))
        }
        "admissible" => {
            let jd = if let Some(text) = args.flag("json") {
                let v: Value = serde_json::from_str(text).map_err(|e| usage(e.to_string()))?;
                jordan_data_from_json(&v)?
            } else {
                let parts_text = args.require("parts")?;
                let mut parts = Vec::new();
                if !parts_text.is_empty() {
                    for chunk in parts_text.split(',') {
                        let (n, q) = chunk
                            .split_once(':')
                            .ok_or_else(|| usage("--parts uses `size:multiplicity,...`"))?;
                        parts.push((
                            n.trim().parse().map_err(|_| usage("bad block size"))?,
                            q.trim().parse().map_err(|_| usage("bad multiplicity"))?,
                        ));
                    }
                }
                let d = args
                    .flag("d")
                    .unwrap_or("0")
                    .parse()
                    .map_err(|_| usage("--d must be a nonnegative integer"))?;
                JordanData::new(parts, d).map_err(|e| usage(e.to_string()))?
            };
            let kind = args.kind()?;
            let v = nilpotent::admissible(&jd, kind).map_err(|e| domain(e.to_string()))?;
            let condition = v.condition.map(|c| match c {
                Condition::CondI => json!("I"),
                Condition::CondII => json!("II"),
                Condition::CondIII { t } => json!(format!("III(t={t})")),
            });
            Ok(json!({
                "dim": jd.dim(),
                "admissible": v.admissible,
                "condition": condition,
                "witness": v.witness.map(|w| parse::matrix_to_json(&w)),
            }))
        }
        "classify" => {
            let b = read_matrix_file(args.require("B")?)?;
            let h = b.rows();
            if h % 4 != 0 {
                return Err(domain("structure matrix size must be a multiple of 4"));
            }
            let n = h / 4 + 1;
            let v0 = match args.flag("v0") {
                None | Some("zero") => vec![Rat::zero(); h],
                Some(text) => parse::parse_vector(text).map_err(|e| usage(e.to_string()))?,
            };
            let mu = args.rat("mu", Rat::zero())?;
            let data = nilpotent::HcxAAData::new(n, mu, v0, b).map_err(|e| usage(e.to_string()))?;
            let c = nilpotent::identify_class(&data).map_err(|e| domain(e.to_string()))?;
            Ok(json!({
                "class": canonical_kind_json(&c.kind),
                "n": c.n,
                "step": c.step(),
                "kernel_dims": c.matrix.kernel_dim_sequence(),
                "matrix": parse::matrix_to_json(&c.matrix),
            }))
        }
        other => Err(usage(format!("unknown nilp verb `{other}`"))),
    }
}

fn jordan_data_from_json(v: &Value) -> Result<JordanData, CliError> {
    let parts = v["parts"]
        .as_array()
        .ok_or_else(|| usage("missing `parts` array"))?
        .iter()
        .map(|pair| {
            let arr = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| usage("each part is a [size, multiplicity] pair"))?;
            Ok((
                arr[0].as_u64().ok_or_else(|| usage("bad size"))? as usize,
                arr[1].as_u64().ok_or_else(|| usage("bad multiplicity"))? as usize,
            ))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let d = v["d"].as_u64().ok_or_else(|| usage("missing `d`"))? as usize;
    JordanData::new(parts, d).map_err(|e| usage(e.to_string()))
}

fn witness_ref_json(w: &WitnessRef) -> Value {
    match w {
        WitnessRef::NilmanifoldInteger => json!({"witness": "integer-structure-matrix"}),
        WitnessRef::RotationAngles { denominators } => {
            json!({"witness": "rotation-angles", "k": denominators})
        }
        WitnessRef::UnipotentRotation { denominators } => {
            json!({"witness": "unipotent-rotation", "k": denominators})
        }
        WitnessRef::HyperbolicLog { min_m } => json!({"witness": "hyperbolic-log", "min_m": min_m}),
        WitnessRef::ShearedRotation { denominators } => {
            json!({"witness": "sheared-rotation", "k": denominators})
        }
        WitnessRef::QuarticFamily { min_k } => json!({"witness": "quartic-family", "min_k": min_k}),
        WitnessRef::RotationPairAngles => json!({"witness": "rotation-angle-pairs"}),
    }
}

fn lattice_verdict_json(v: &LatticeVerdict) -> Value {
    match v {
        LatticeVerdict::Yes(ws) => json!({
            "verdict": "yes",
            "witnesses": ws.iter().map(witness_ref_json).collect::<Vec<_>>(),
        }),
        LatticeVerdict::PartialYes(ws) => json!({
            "verdict": "partial-yes",
            "witnesses": ws.iter().map(witness_ref_json).collect::<Vec<_>>(),
        }),
        LatticeVerdict::No(reason) => json!({
            "verdict": "no",
            "reason": match reason {
                NoLatticeReason::NotUnimodular => "not-unimodular",
                NoLatticeReason::ScalarPartNonzero => "scalar-part-nonzero",
                NoLatticeReason::UnitConstantTerm => "unit-constant-term",
            },
        }),
        LatticeVerdict::Unknown => json!({"verdict": "unknown"}),
    }
}

fn dim12_cmd(raw: &[String]) -> Result<Value, CliError> {
    let (verb, rest) = raw
        .split_first()
        .ok_or_else(|| usage("usage: haal dim12 classify ..."))?;
    let args = parse_args(rest)?;
    match verb.as_str() {
        "classify" => {
            let bcase = match args.require("case")? {
                "B1" | "b1" => BCase::B1,
                "B2" | "b2" => BCase::B2,
                other => return Err(usage(format!("--case must be B1 or B2, found `{other}`"))),
            };
            let v0 = match args.flag("v0").unwrap_or("zero") {
                "zero" => V0Status::Zero,
                "in-image" => V0Status::InImage,
                "not-in-image" => V0Status::NotInImage,
                other => {
                    return Err(usage(format!(
                        "--v0 must be zero|in-image|not-in-image, found `{other}`"
                    )))
                }
            };
            let input = Dim12Input {
                mu: args.rat("mu", Rat::zero())?,
                bcase,
                a: args.rat("a", Rat::zero())?,
                b: args.rat("b", Rat::zero())?,
                c: args.rat("c", Rat::zero())?,
                d: args.rat("d", Rat::zero())?,
                v0_status: v0,
            };
            let label = dim12::classify_full(&input).map_err(|e| domain(e.to_string()))?;
            let fl = label.flags.unwrap();
            let params: BTreeMap<&str, String> = label
                .params
                .iter()
                .map(|(n, v)| (*n, format_rat(v)))
                .collect();
            Ok(json!({
                "family": label.family.name(),
                "params": params,
                "flags": {
                    "unimodular": fl.unimodular,
                    "completely_solvable": fl.completely_solvable,
                    "nilpotent_step": fl.nilpotent_step,
                    "hkt": fl.hkt,
                    "hyper_kahler": fl.hyper_kahler,
                },
                "lattice": lattice_verdict_json(label.lattice.as_ref().unwrap()),
            }))
        }
        other => Err(usage(format!("unknown dim12 verb `{other}`"))),
    }
}

fn poly_cmd(raw: &[String]) -> Result<Value, CliError> {
    let (verb, rest) = raw.split_first().ok_or_else(|| {
        usage("usage: haal poly <delta-check|enumerate|reciprocal|power|resultant|product|build-prime> ...")
    })?;
    let args = parse_args(rest)?;
    match verb.as_str() {
        "delta-check" => {
            let p = poly_arg(&args, 0)?;
            let v = intpoly::delta_check(&p);
            Ok(json!({
                "poly": parse::render_poly(&p),
                "member": v.member,
                "delta_prime": v.in_delta_prime,
                "failed_condition": v.failed_condition.map(|f| format!("{f:?}")),
            }))
        }
        "enumerate" => {
            let n = args.usize("n")?;
            if n < 2 {
                return Err(domain("enumerate requires n >= 2"));
            }
            let bound = args
                .flag("bound")
                .unwrap_or("30")
                .parse()
                .map_err(|_| usage("--bound must be a positive integer"))?;
            let jobs = args
                .flag("jobs")
                .unwrap_or("1")
                .parse()
                .map_err(|_| usage("--jobs must be a positive integer"))?;
            let members = intpoly::enumerate_delta_jobs(n, bound, jobs);
            Ok(json!({
                "n": n,
                "bound": bound,
                "count": members.len(),
                "members": members.iter().map(parse::render_poly).collect::<Vec<_>>(),
            }))
        }
        "reciprocal" => {
            let p = poly_arg(&args, 0)?;
            let r = intpoly::reciprocal(&p).map_err(|e| domain(e.to_string()))?;
            Ok(json!({"poly": parse::render_poly(&r)}))
        }
        "power" => {
            let p = poly_arg(&args, 0)?;
            let k: i64 = args
                .require("k")?
                .parse()
                .map_err(|_| usage("--k must be a nonzero integer"))?;
            let r = intpoly::power_poly(&p, k).map_err(|e| domain(e.to_string()))?;
            Ok(json!({"poly": parse::render_poly(&r)}))
        }
        "resultant" => {
            let p = poly_arg(&args, 0)?;
            let q = poly_arg(&args, 1)?;
            let r = intpoly::resultant(&p, &q).map_err(|e| domain(e.to_string()))?;
            Ok(json!({"resultant": r.to_string()}))
        }
        "product" => {
            let p = poly_arg(&args, 0)?;
            let q = poly_arg(&args, 1)?;
            match intpoly::delta_product(&p, &q).map_err(|e| domain(e.to_string()))? {
                Some(prod) => Ok(json!({
                    "common_root": false,
                    "poly": parse::render_poly(&prod),
                })),
                None => Ok(json!({"common_root": true, "poly": Value::Null})),
            }
        }
        "build-prime" => {
            let n = args.usize("n")?;
            if n < 2 {
                return Err(domain("build-prime requires n >= 2"));
            }
            let p = intpoly::build_delta_prime(n);
            Ok(json!({"n": n, "poly": parse::render_poly(&p)}))
        }
        other => Err(usage(format!("unknown poly verb `{other}`"))),
    }
}

fn descriptor_json(d: &solv::SolvmanifoldDescriptor) -> Value {
    json!({
        "poly": parse::render_poly(&d.p),
        "n": d.n,
        "dim": d.dim(),
        "companion": parse::matrix_to_json(&d.companion),
        "holonomy": parse::matrix_to_json(&d.holonomy),
        "lattice_rank": d.lattice.rank,
        "xp": d.xp_numeric,
    })
}

fn solv_cmd(raw: &[String]) -> Result<Value, CliError> {
    let (verb, rest) = raw
        .split_first()
        .ok_or_else(|| usage("usage: haal solv <build|equiv|split|product> ..."))?;
    let args = parse_args(rest)?;
    match verb.as_str() {
        "build" => {
            let p = poly_arg(&args, 0)?;
            let prec = root_precision(&args)?;
            let d = solv::build_with_precision(&p, prec).map_err(|e| domain(e.to_string()))?;
            Ok(descriptor_json(&d))
        }
        "equiv" => {
            let p = poly_arg(&args, 0)?;
            let q = poly_arg(&args, 1)?;
            let eq = solv::diffeo_equiv(&p, &q).map_err(|e| domain(e.to_string()))?;
            Ok(json!({"diffeomorphic": eq}))
        }
        "split" => {
            let p = poly_arg(&args, 0)?;
            let split = solv::split_torus_factor(&p).map_err(|e| domain(e.to_string()))?;
            Ok(match split {
                Some(q) => json!({
                    "torus_factor": true,
                    "quotient": parse::render_poly(&q),
                }),
                None => json!({"torus_factor": false, "quotient": Value::Null}),
            })
        }
        "product" => {
            let p = poly_arg(&args, 0)?;
            let q = poly_arg(&args, 1)?;
            let e = solv::product_embedding(&p, &q).map_err(|e| domain(e.to_string()))?;
            Ok(json!({
                "descriptor": descriptor_json(&e.descriptor),
                "ambient_dim": e.ambient_dim,
                "submanifold_dim": e.submanifold_dim,
                "codimension": e.codimension,
            }))
        }
        other => Err(usage(format!("unknown solv verb `{other}`"))),
    }
}

fn bock_report_json(r: &liegroup::BockReport) -> Value {
    json!({
        "accepted": r.accepted(),
        "tol": r.tol,
        "char_poly_defect": r.char_poly_defect,
        "structure_ok": r.structure_ok,
        "conjugator_defect": r.conjugator_defect,
    })
}

fn lattice_cmd(raw: &[String]) -> Result<Value, CliError> {
    let (verb, rest) = raw
        .split_first()
        .ok_or_else(|| usage("usage: haal lattice <verify|necessary|witness> ..."))?;
    let args = parse_args(rest)?;
    match verb.as_str() {
        "verify" => {
            let a = read_matrix_file(args.require("A")?)?;
            let e = read_matrix_file(args.require("E")?)?;
            let t0 = args.f64("t0", f64::NAN)?;
            if t0.is_nan() {
                return Err(usage("missing required flag --t0"));
            }
            if e.det() != Rat::one() {
                return Err(domain("witness matrix must have determinant one"));
            }
            let conjugator = match args.flag("P") {
                Some(path) => Some(Mat64::from_rat(&read_matrix_file(path)?)),
                None => None,
            };
            let tol = args.f64("tol", 1e-8)?;
            let w = liegroup::LatticeWitness { t0, e, conjugator };
            Ok(bock_report_json(&liegroup::bock_verify(&a, &w, tol)))
        }
        "necessary" => {
            let mu = args.require_rat("mu")?;
            let b = read_matrix_file(args.require("B")?)?;
            Ok(json!({"possible": liegroup::lattice_necessary(&mu, &b)}))
        }
        "witness" => {
            let family = args.require("family")?;
            let param = args
                .flag("param")
                .unwrap_or("3")
                .parse::<u32>()
                .map_err(|_| usage("--param must be a positive integer"))?;
            let tol = args.f64("tol", 1e-8)?;
            let (report, t0, e) = match family {
                "hyperbolic" => {
                    if param < 3 {
                        return Err(domain("hyperbolic witnesses need --param >= 3"));
                    }
                    let (a, w) = liegroup::witness_hyperbolic(param);
                    let r = liegroup::bock_verify(&a, &w, tol);
                    (r, w.t0, w.e)
                }
                "unipotent-rotation" => {
                    if ![1, 2, 3, 4, 6].contains(&param) {
                        return Err(domain("--param must be one of 1,2,3,4,6"));
                    }
                    let (a, w) = liegroup::witness_unipotent_rotation(param);
                    let r = liegroup::bock_verify(&a, &w, tol);
                    (r, w.t0, w.e)
                }
                "sheared-rotation" => {
                    if ![1, 2, 3, 4, 6].contains(&param) {
                        return Err(domain("--param must be one of 1,2,3,4,6"));
                    }
                    let (a, w) = liegroup::witness_sheared_rotation(param);
                    let r = liegroup::bock_verify(&a, &w, tol);
                    (r, w.t0, w.e)
                }
                "quartic" => {
                    if param < 3 {
                        return Err(domain("quartic witnesses need --param >= 3"));
                    }
                    let (a, w) = liegroup::witness_quartic(param);
                    let r = liegroup::bock_verify_numeric(&a, &w, tol);
                    (r, w.t0, w.e)
                }
                other => return Err(usage(format!("unknown witness family `{other}`"))),
            };
            Ok(json!({
                "family": family,
                "param": param,
                "t0": t0,
                "E": parse::matrix_to_json(&e),
                "report": bock_report_json(&report),
            }))
        }
        other => Err(usage(format!("unknown lattice verb `{other}`"))),
    }
}

fn exp_cmd(raw: &[String]) -> Result<Value, CliError> {
    let args = parse_args(raw)?;
    let a = read_matrix_file(args.require("A")?)?;
    let v_text = args.require("v")?;
    if args.has_switch("exact") {
        let t = args.require_rat("t")?;
        let v = parse::parse_vector(v_text).map_err(|e| usage(e.to_string()))?;
        if v.len() != a.cols() {
            return Err(usage("vector length must match the matrix size"));
        }
        let (t, w) = liegroup::exp_group_exact(&t, &v, &a)
            .ok_or_else(|| domain("exact exponential requires a nilpotent matrix"))?;
        return Ok(json!({
            "t": format_rat(&t),
            "v": w.iter().map(format_rat).collect::<Vec<_>>(),
        }));
    }
    let t = args.f64("t", f64::NAN)?;
    if t.is_nan() {
        return Err(usage("missing required flag --t"));
    }
    let v: Vec<f64> = parse::parse_vector(v_text)
        .map_err(|e| usage(e.to_string()))?
        .iter()
        .map(rat_to_f64)
        .collect();
    if v.len() != a.cols() {
        return Err(usage("vector length must match the matrix size"));
    }
    let (t, w) = liegroup::exp_group(t, &v, &a);
    Ok(json!({"t": t, "v": w}))
}
