//! Strict configuration loading: a JSON document with exactly the documented
//! keys, descriptive field-path errors, and defaults for omitted sections.

use fenchel_nielsen::{CuffLengths, SliceParams, SurfaceKind, SurfaceSpec, Twists};
use serde_json::{Map, Value};

use crate::error::CliError;

/// Which model the renderer draws in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderModel {
    Disk,
    HalfPlane,
}

impl RenderModel {
    pub fn as_str(&self) -> &'static str {
        match self {
            RenderModel::Disk => "disk",
            RenderModel::HalfPlane => "halfplane",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "disk" => Ok(RenderModel::Disk),
            "halfplane" => Ok(RenderModel::HalfPlane),
            other => Err(CliError::validation(format!(
                "unknown model '{other}', expected disk or halfplane"
            ))),
        }
    }
}

/// Horocyclic path parameters: the anchor shear and the fan depth.
#[derive(Debug, Clone, PartialEq)]
pub struct PathConfig {
    pub s1: f64,
    pub terms: usize,
}

impl Default for PathConfig {
    fn default() -> Self {
        PathConfig { s1: 0.0, terms: 1000 }
    }
}

/// Series-analysis parameters for classification.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifyConfig {
    pub n_terms: usize,
    pub tolerance: f64,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig { n_terms: 100_000, tolerance: 0.1 }
    }
}

/// Rendering parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    pub model: RenderModel,
    pub samples_per_arc: usize,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig { model: RenderModel::Disk, samples_per_arc: 48 }
    }
}

/// A fully validated run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub surface: SurfaceSpec,
    pub path: PathConfig,
    pub classify: ClassifyConfig,
    pub render: RenderConfig,
}

fn err(path: &str, detail: impl std::fmt::Display) -> CliError {
    CliError::config(format!("{path}: {detail}"))
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, CliError> {
    v.as_object().ok_or_else(|| err(path, "expected an object"))
}

fn check_keys(obj: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<(), CliError> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(err(path, format!("unknown key '{key}'")));
        }
    }
    Ok(())
}

fn number(v: &Value, path: &str) -> Result<f64, CliError> {
    let x = v.as_f64().ok_or_else(|| err(path, "expected a number"))?;
    if !x.is_finite() {
        return Err(err(path, "number out of range"));
    }
    Ok(x)
}

fn count(v: &Value, path: &str) -> Result<usize, CliError> {
    let n = v
        .as_u64()
        .ok_or_else(|| err(path, "expected a positive integer"))?;
    if n == 0 {
        return Err(err(path, "must be positive"));
    }
    Ok(n as usize)
}

fn number_array(v: &Value, path: &str) -> Result<Vec<f64>, CliError> {
    let arr = v.as_array().ok_or_else(|| err(path, "expected an array of numbers"))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| number(x, &format!("{path}[{i}]")))
        .collect()
}

fn parse_cuff_lengths(v: &Value) -> Result<CuffLengths, CliError> {
    let path = "surface.cuff_lengths";
    let obj = as_object(v, path)?;
    if obj.len() != 1 {
        return Err(err(path, "expected exactly one of slice, log_growth, constant, explicit"));
    }
    let (key, inner) = obj.iter().next().expect("length checked");
    match key.as_str() {
        "slice" => {
            let p = format!("{path}.slice");
            let o = as_object(inner, &p)?;
            check_keys(o, &p, &["a", "b", "count"])?;
            let get = |k: &str| {
                o.get(k).ok_or_else(|| err(&p, format!("missing key '{k}'")))
            };
            Ok(CuffLengths::Slice(SliceParams {
                a: number(get("a")?, &format!("{p}.a"))?,
                b: number(get("b")?, &format!("{p}.b"))?,
                count: count(get("count")?, &format!("{p}.count"))?,
            }))
        }
        "log_growth" => {
            let p = format!("{path}.log_growth");
            let o = as_object(inner, &p)?;
            check_keys(o, &p, &["coeff", "count"])?;
            let coeff = o.get("coeff").ok_or_else(|| err(&p, "missing key 'coeff'"))?;
            let cnt = o.get("count").ok_or_else(|| err(&p, "missing key 'count'"))?;
            Ok(CuffLengths::LogGrowth {
                coeff: number(coeff, &format!("{p}.coeff"))?,
                count: count(cnt, &format!("{p}.count"))?,
            })
        }
        "constant" => {
            let p = format!("{path}.constant");
            let o = as_object(inner, &p)?;
            check_keys(o, &p, &["value", "count"])?;
            let value = o.get("value").ok_or_else(|| err(&p, "missing key 'value'"))?;
            let cnt = o.get("count").ok_or_else(|| err(&p, "missing key 'count'"))?;
            Ok(CuffLengths::Constant {
                value: number(value, &format!("{p}.value"))?,
                count: count(cnt, &format!("{p}.count"))?,
            })
        }
        "explicit" => Ok(CuffLengths::Explicit(number_array(inner, &format!("{path}.explicit"))?)),
        other => Err(err(path, format!("unknown key '{other}'"))),
    }
}

fn parse_twists(v: &Value) -> Result<Twists, CliError> {
    let path = "surface.twists";
    match v {
        Value::String(s) => match s.as_str() {
            "zero" => Ok(Twists::Zero),
            "half" => Ok(Twists::Half),
            other => Err(err(path, format!("unknown twist pattern '{other}'"))),
        },
        Value::Object(obj) => {
            check_keys(obj, path, &["explicit"])?;
            let inner = obj
                .get("explicit")
                .ok_or_else(|| err(path, "missing key 'explicit'"))?;
            Ok(Twists::Explicit(number_array(inner, &format!("{path}.explicit"))?))
        }
        _ => Err(err(path, "expected \"zero\", \"half\", or {\"explicit\": [...]}")),
    }
}

fn parse_surface(v: &Value) -> Result<SurfaceSpec, CliError> {
    let path = "surface";
    let obj = as_object(v, path)?;
    check_keys(obj, path, &["kind", "cuff_lengths", "twists", "beta_length", "gamma_length"])?;
    let kind = match obj.get("kind") {
        None => return Err(err(path, "missing key 'kind'")),
        Some(Value::String(s)) => match s.as_str() {
            "flute" => SurfaceKind::Flute,
            "end_surface" => SurfaceKind::EndSurface,
            other => return Err(err("surface.kind", format!("unknown surface kind '{other}'"))),
        },
        Some(_) => return Err(err("surface.kind", "expected a string")),
    };
    let cuff_lengths = parse_cuff_lengths(
        obj.get("cuff_lengths").ok_or_else(|| err(path, "missing key 'cuff_lengths'"))?,
    )?;
    // The slice family is defined with half twists, so they may be omitted
    // there; every other description must state its twists.
    let twists = match obj.get("twists") {
        Some(v) => parse_twists(v)?,
        None if matches!(cuff_lengths, CuffLengths::Slice(_)) => Twists::Half,
        None => return Err(err(path, "missing key 'twists'")),
    };
    let beta_length = obj
        .get("beta_length")
        .map(|v| number(v, "surface.beta_length"))
        .transpose()?;
    let gamma_length = obj
        .get("gamma_length")
        .map(|v| number(v, "surface.gamma_length"))
        .transpose()?;
    let spec = SurfaceSpec { kind, cuff_lengths, twists, beta_length, gamma_length };
    spec.validate().map_err(|e| err("surface", e))?;
    Ok(spec)
}

fn parse_path_section(v: &Value) -> Result<PathConfig, CliError> {
    let path = "path";
    let obj = as_object(v, path)?;
    check_keys(obj, path, &["s1", "terms"])?;
    let mut out = PathConfig::default();
    if let Some(v) = obj.get("s1") {
        out.s1 = number(v, "path.s1")?;
    }
    if let Some(v) = obj.get("terms") {
        out.terms = count(v, "path.terms")?;
    }
    Ok(out)
}

fn parse_classify_section(v: &Value) -> Result<ClassifyConfig, CliError> {
    let path = "classify";
    let obj = as_object(v, path)?;
    check_keys(obj, path, &["n_terms", "tolerance"])?;
    let mut out = ClassifyConfig::default();
    if let Some(v) = obj.get("n_terms") {
        out.n_terms = count(v, "classify.n_terms")?;
    }
    if let Some(v) = obj.get("tolerance") {
        out.tolerance = number(v, "classify.tolerance")?;
        if !(out.tolerance > 0.0 && out.tolerance < 1.0) {
            return Err(err("classify.tolerance", "must lie strictly between 0 and 1"));
        }
    }
    Ok(out)
}

fn parse_render_section(v: &Value) -> Result<RenderConfig, CliError> {
    let path = "render";
    let obj = as_object(v, path)?;
    check_keys(obj, path, &["model", "samples_per_arc"])?;
    let mut out = RenderConfig::default();
    if let Some(v) = obj.get("model") {
        let s = v.as_str().ok_or_else(|| err("render.model", "expected a string"))?;
        out.model = RenderModel::parse(s).map_err(|e| err("render.model", e))?;
    }
    if let Some(v) = obj.get("samples_per_arc") {
        out.samples_per_arc = count(v, "render.samples_per_arc")?;
        if out.samples_per_arc < 2 {
            return Err(err("render.samples_per_arc", "needs at least 2 points per arc"));
        }
    }
    Ok(out)
}

/// Parses and validates a configuration document.
///
/// The document is JSON with the sections `surface` (required), `path`,
/// `classify`, and `render` (optional, defaulted). Unknown keys anywhere are
/// errors, and every message names the offending field path.
pub fn load_config(text: &str) -> Result<RunConfig, CliError> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| CliError::config(format!("invalid JSON: {e}")))?;
    let obj = as_object(&root, "<root>")?;
    check_keys(obj, "<root>", &["surface", "path", "classify", "render"])?;
    let surface =
        parse_surface(obj.get("surface").ok_or_else(|| err("<root>", "missing key 'surface'"))?)?;
    let path = obj.get("path").map(parse_path_section).transpose()?.unwrap_or_default();
    let classify =
        obj.get("classify").map(parse_classify_section).transpose()?.unwrap_or_default();
    let render = obj.get("render").map(parse_render_section).transpose()?.unwrap_or_default();
    Ok(RunConfig { surface, path, classify, render })
}

fn f64_value(x: f64) -> Value {
    Value::from(x)
}

fn count_value(n: usize) -> Value {
    Value::from(n as u64)
}

/// The canonical JSON form of a configuration: every section present, every
/// default made explicit. Reloading the emitted form reproduces the config.
pub fn canonical_value(cfg: &RunConfig) -> Value {
    let mut surface = Map::new();
    let kind = match cfg.surface.kind {
        SurfaceKind::Flute => "flute",
        SurfaceKind::EndSurface => "end_surface",
    };
    surface.insert("kind".into(), Value::from(kind));
    let cuffs = match &cfg.surface.cuff_lengths {
        CuffLengths::Slice(p) => {
            let mut o = Map::new();
            o.insert("a".into(), f64_value(p.a));
            o.insert("b".into(), f64_value(p.b));
            o.insert("count".into(), count_value(p.count));
            Value::from_iter([("slice".to_string(), Value::Object(o))])
        }
        CuffLengths::LogGrowth { coeff, count } => {
            let mut o = Map::new();
            o.insert("coeff".into(), f64_value(*coeff));
            o.insert("count".into(), count_value(*count));
            Value::from_iter([("log_growth".to_string(), Value::Object(o))])
        }
        CuffLengths::Constant { value, count } => {
            let mut o = Map::new();
            o.insert("value".into(), f64_value(*value));
            o.insert("count".into(), count_value(*count));
            Value::from_iter([("constant".to_string(), Value::Object(o))])
        }
        CuffLengths::Explicit(v) => Value::from_iter([(
            "explicit".to_string(),
            Value::Array(v.iter().map(|&l| f64_value(l)).collect()),
        )]),
    };
    surface.insert("cuff_lengths".into(), cuffs);
    let twists = match &cfg.surface.twists {
        Twists::Zero => Value::from("zero"),
        Twists::Half => Value::from("half"),
        Twists::Explicit(v) => Value::from_iter([(
            "explicit".to_string(),
            Value::Array(v.iter().map(|&t| f64_value(t)).collect()),
        )]),
    };
    surface.insert("twists".into(), twists);
    if let Some(b) = cfg.surface.beta_length {
        surface.insert("beta_length".into(), f64_value(b));
    }
    if let Some(g) = cfg.surface.gamma_length {
        surface.insert("gamma_length".into(), f64_value(g));
    }

    let mut path = Map::new();
    path.insert("s1".into(), f64_value(cfg.path.s1));
    path.insert("terms".into(), count_value(cfg.path.terms));

    let mut classify = Map::new();
    classify.insert("n_terms".into(), count_value(cfg.classify.n_terms));
    classify.insert("tolerance".into(), f64_value(cfg.classify.tolerance));

    let mut render = Map::new();
    render.insert("model".into(), Value::from(cfg.render.model.as_str()));
    render.insert("samples_per_arc".into(), count_value(cfg.render.samples_per_arc));

    let mut root = Map::new();
    root.insert("surface".into(), Value::Object(surface));
    root.insert("path".into(), Value::Object(path));
    root.insert("classify".into(), Value::Object(classify));
    root.insert("render".into(), Value::Object(render));
    Value::Object(root)
}
