use std::io;

use num::{BigRational, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use realmodels::arith::{count_real_roots, parse_rational, ExtRational, Poly, RatLit};
use realmodels::interpolation::{positive_interpolate, positive_ratio_interpolate};
use realmodels::models::{self, BlowUpModel};
use realmodels::projective::{
    conic_through_five, line_through, validate_six_config, GaussianPoint2, Line2, P2Transfer,
    ProjPoint2,
};
use realmodels::torus::{
    build_transitivity_map, certify as certify_map, ProjPoint1, TorusMap, TorusPoint,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("certification failed: {0}")]
    Certification(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Certification(_) => 3,
        }
    }
}

impl From<realmodels::Error> for CliError {
    fn from(e: realmodels::Error) -> Self {
        match e {
            realmodels::Error::CertificationFailed { .. } => CliError::Certification(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("malformed JSON: {e}"))
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn pretty(v: &Value) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

/// A point of `P¹ × P¹`, either canonical `{"x":["a","b"],"y":["c","d"]}`
/// or an affine pair like `["3/2", "inf"]`.
#[derive(Deserialize)]
#[serde(untagged)]
enum PointIn {
    Full(TorusPoint),
    Affine([Scalar; 2]),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

fn proj1(s: &Scalar) -> CliResult<ProjPoint1> {
    match s {
        Scalar::Int(n) => Ok(ProjPoint1::from_int(*n)),
        Scalar::Text(t) if matches!(t.trim(), "inf" | "∞") => Ok(ProjPoint1::infinity()),
        Scalar::Text(t) => Ok(ProjPoint1::finite(&parse_rational(t)?)),
    }
}

impl PointIn {
    fn into_point(self) -> CliResult<TorusPoint> {
        match self {
            PointIn::Full(p) => Ok(p),
            PointIn::Affine([x, y]) => Ok(TorusPoint::new(proj1(&x)?, proj1(&y)?)),
        }
    }
}

fn points(v: Vec<PointIn>) -> CliResult<Vec<TorusPoint>> {
    v.into_iter().map(PointIn::into_point).collect()
}

pub fn parse_map(input: &str) -> CliResult<TorusMap> {
    let v: Value = serde_json::from_str(input)?;
    let map_value = v.get("map").cloned().unwrap_or(v);
    Ok(serde_json::from_value(map_value)?)
}

pub fn transit(input: &str, verbose: bool) -> CliResult<String> {
    #[derive(Deserialize)]
    struct Job {
        sources: Vec<PointIn>,
        targets: Vec<PointIn>,
    }
    let job: Job = serde_json::from_str(input)?;
    let sources = points(job.sources)?;
    let targets = points(job.targets)?;
    let map = build_transitivity_map(&sources, &targets)?;
    let cert = certify_map(&map);
    if verbose {
        eprintln!("built {} moves, certificate {}", map.len(), cert.verdict());
    }
    if !cert.valid {
        let why = cert
            .first_failure()
            .map_or(String::new(), |c| c.problems.join("; "));
        return Err(CliError::Certification(why));
    }
    let images: Vec<TorusPoint> = sources.iter().map(|p| map.apply(p)).collect();
    if images != targets {
        return Err(CliError::Certification("images differ from targets".into()));
    }
    pretty(&json!({
        "map": map,
        "certificate": cert.verdict(),
        "checks": cert.checks,
        "images": images,
    }))
}

fn random_point(rng: &mut ChaCha8Rng) -> TorusPoint {
    let coord = |rng: &mut ChaCha8Rng| {
        if rng.gen_ratio(1, 10) {
            ProjPoint1::infinity()
        } else {
            let n: i64 = rng.gen_range(-50..=50);
            let d: i64 = rng.gen_range(1..=50);
            ProjPoint1::finite(&BigRational::new(n.into(), d.into()))
        }
    };
    let x = coord(rng);
    TorusPoint::new(x, coord(rng))
}

pub fn certify(input: &str, samples: usize, seed: u64) -> CliResult<String> {
    let map = parse_map(input)?;
    let cert = certify_map(&map);
    if !cert.valid {
        let f = cert
            .first_failure()
            .expect("invalid certificate has a failing move");
        return Err(CliError::Certification(format!(
            "move {} ({}): {}",
            f.index,
            f.kind,
            f.problems.join("; ")
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inverse = map.invert();
    let failures = (0..samples)
        .map(|_| random_point(&mut rng))
        .filter(|p| inverse.apply(&map.apply(p)) != *p)
        .count();
    if failures > 0 {
        return Err(CliError::Certification(format!(
            "{failures} of {samples} inversion samples failed"
        )));
    }
    pretty(&json!({
        "certificate": cert.verdict(),
        "checks": cert.checks,
        "inversion_samples": samples,
        "seed": seed,
    }))
}

pub fn interpolate(input: &str) -> CliResult<String> {
    #[derive(Deserialize)]
    struct Job {
        nodes: Vec<RatLit>,
        values: Vec<RatLit>,
        #[serde(default)]
        den_values: Option<Vec<RatLit>>,
    }
    let job: Job = serde_json::from_str(input)?;
    let unwrap = |v: Vec<RatLit>| v.into_iter().map(|r| r.0).collect::<Vec<_>>();
    let nodes = unwrap(job.nodes);
    let values = unwrap(job.values);
    let out = match job.den_values {
        None => serde_json::to_value(positive_interpolate(&nodes, &values)?)?,
        Some(den) => {
            serde_json::to_value(positive_ratio_interpolate(&nodes, &values, &unwrap(den))?)?
        }
    };
    pretty(&out)
}

pub fn sturm(input: &str) -> CliResult<String> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Job {
        Bare(Poly),
        Full {
            poly: Poly,
            #[serde(default)]
            lo: Option<String>,
            #[serde(default)]
            hi: Option<String>,
        },
    }
    let (poly, lo, hi) = match serde_json::from_str(input)? {
        Job::Bare(p) => (p, None, None),
        Job::Full { poly, lo, hi } => (poly, lo, hi),
    };
    let bound = |s: Option<String>, default: ExtRational| -> CliResult<ExtRational> {
        s.map_or(Ok(default), |s| Ok(s.parse()?))
    };
    let lo = bound(lo, ExtRational::NegInf)?;
    let hi = bound(hi, ExtRational::PosInf)?;
    let count = count_real_roots(&poly, &lo, &hi)?;
    pretty(&json!({
        "poly": poly,
        "lo": lo.to_string(),
        "hi": hi.to_string(),
        "count": count,
    }))
}

fn parse_model(input: &str) -> CliResult<BlowUpModel> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        Ok(serde_json::from_str(trimmed)?)
    } else {
        Ok(trimmed.parse()?)
    }
}

pub fn classify(input: &str) -> CliResult<String> {
    let model = parse_model(input)?;
    let c = models::classify(&model);
    pretty(&json!({
        "model": model.to_string(),
        "real_locus": c.real_locus.to_string(),
        "canonical": c.canonical.as_ref().map(ToString::to_string),
        "reduced": c.reduced.as_ref().map(ToString::to_string),
        "trace": c.trace.map(|t| t.steps),
    }))
}

pub fn reduce(input: &str) -> CliResult<String> {
    let model = parse_model(input)?;
    let (flat, trace) = models::forest_reduce(&model)?;
    pretty(&json!({
        "model": model.to_string(),
        "reduced": flat.to_string(),
        "forest_length": models::forest_length(&model),
        "trace": trace.steps,
    }))
}

pub fn hirzebruch(input: &str) -> CliResult<String> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Job {
        Bare(u32),
        Full { d: u32 },
    }
    let d = match serde_json::from_str(input)? {
        Job::Bare(d) | Job::Full { d } => d,
    };
    let (representative, moves) = models::hirzebruch_normalize(d);
    pretty(&json!({ "d": d, "representative": representative, "moves": moves }))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PointList {
    Bare(Vec<GaussianPoint2>),
    Full { points: Vec<GaussianPoint2> },
}

impl PointList {
    fn into_vec(self) -> Vec<GaussianPoint2> {
        match self {
            PointList::Bare(v) | PointList::Full { points: v } => v,
        }
    }
}

pub fn conic(input: &str) -> CliResult<String> {
    let pts = serde_json::from_str::<PointList>(input)?.into_vec();
    let c = conic_through_five(&pts)?;
    pretty(&json!({
        "coefficients": c.coeffs(),
        "equation": c.to_string(),
        "nonsingular": c.is_nonsingular(),
    }))
}

pub fn validate_six(input: &str) -> CliResult<String> {
    let pts = serde_json::from_str::<PointList>(input)?.into_vec();
    let report = validate_six_config(&pts)?;
    pretty(&json!({ "valid": report.is_valid(), "report": report }))
}

pub fn p2_transfer(input: &str) -> CliResult<String> {
    #[derive(Deserialize)]
    struct Job {
        p1: ProjPoint2,
        p2: ProjPoint2,
        #[serde(default)]
        line: Option<Line2>,
        #[serde(default)]
        points: Vec<ProjPoint2>,
        #[serde(default)]
        torus_points: Vec<PointIn>,
    }
    let job: Job = serde_json::from_str(input)?;
    let line = match job.line {
        Some(l) => l,
        None => line_through(&job.p1, &job.p2)?,
    };
    let t = P2Transfer::new(&job.p1, &job.p2, &line)?;
    let forward = job
        .points
        .iter()
        .map(|p| {
            t.forward(p)
                .map_err(|e| CliError::Input(format!("{p}: {e}")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let inverse = points(job.torus_points)?
        .iter()
        .map(|q| {
            t.inverse(q)
                .map_err(|e| CliError::Input(format!("{q}: {e}")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let frame: Vec<Vec<String>> = t
        .frame()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect();
    pretty(&json!({
        "line": line,
        "frame": frame,
        "forward": forward,
        "inverse": inverse,
    }))
}

/// Affine coordinate as an exact string, `inf` at infinity.
pub fn coord_text(p: &ProjPoint1) -> String {
    p.affine()
        .map_or_else(|| "inf".to_string(), |v| v.to_string())
}

pub fn coord_approx(p: &ProjPoint1) -> f64 {
    let (a, b) = p.coords();
    if b.is_zero() {
        f64::INFINITY
    } else {
        let r = BigRational::new(a.clone(), b.clone());
        r.to_f64().unwrap_or(f64::NAN)
    }
}
