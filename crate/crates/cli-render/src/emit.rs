//! Deterministic output encoding: JSON with full-precision floats and a
//! human-readable report rendering.

use classifier::ClassificationReport;
use serde_json::{Map, Value};
use shear_fan::{AccumulationVerdict, PathLengthEstimate};

/// Formats a float with 17 significant digits, enough to reparse the exact
/// bit pattern. The output is a valid JSON number.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn float_value(x: f64) -> Value {
    match serde_json::Number::from_f64(x) {
        Some(n) => Value::Number(n),
        None => Value::String(format!("{x}")),
    }
}

fn write_escaped(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                out.push_str(&format!("\\u{:04x}", c as u32));
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(u) = n.as_u64() {
                out.push_str(&u.to_string());
            } else if let Some(i) = n.as_i64() {
                out.push_str(&i.to_string());
            } else {
                out.push_str(&fmt_f64(n.as_f64().expect("number is one of u64/i64/f64")));
            }
        }
        Value::String(s) => write_escaped(out, s),
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push('\n');
                out.push_str(&"  ".repeat(indent + 1));
                write_value(out, item, indent + 1);
            }
            out.push('\n');
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push('{');
            for (i, (k, item)) in map.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push('\n');
                out.push_str(&"  ".repeat(indent + 1));
                write_escaped(out, k);
                out.push_str(": ");
                write_value(out, item, indent + 1);
            }
            out.push('\n');
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
    }
}

/// Serializes a JSON value with two-space indentation and full-precision
/// floats. Object keys appear in sorted order, so the output is byte-stable.
pub fn to_json_string(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn fan_to_value(fan: &AccumulationVerdict) -> Value {
    let mut o = Map::new();
    o.insert("outcome".into(), Value::from(fan.outcome.to_string()));
    o.insert("endpoint_gap".into(), float_value(fan.endpoint_gap));
    let len = match fan.path_length {
        PathLengthEstimate::Finite(x) => float_value(x),
        PathLengthEstimate::Diverging => Value::from("diverging"),
    };
    o.insert("path_length".into(), len);
    o.insert("last_increment".into(), float_value(fan.last_increment));
    o.insert("n_geodesics".into(), Value::from(fan.n_geodesics as u64));
    Value::Object(o)
}

/// The JSON form of a classification report.
pub fn report_to_value(report: &ClassificationReport) -> Value {
    let mut root = Map::new();
    root.insert("kind_verdict".into(), Value::from(report.kind_verdict.to_string()));
    root.insert("parabolic_verdict".into(), Value::from(report.parabolic_verdict.to_string()));
    root.insert("theorem_used".into(), Value::from(report.theorem_used.clone()));

    let series: Vec<Value> = report
        .evidence
        .series
        .iter()
        .map(|ls| {
            let mut o = Map::new();
            o.insert("label".into(), Value::from(ls.label.clone()));
            o.insert("status".into(), Value::from(ls.verdict.status.to_string()));
            o.insert("exponent_estimate".into(), float_value(ls.verdict.exponent_estimate));
            o.insert("partial_sum".into(), float_value(ls.verdict.partial_sum));
            o.insert("log_partial_sum".into(), float_value(ls.verdict.log_partial_sum));
            o.insert("n_terms_used".into(), Value::from(ls.verdict.n_terms_used as u64));
            Value::Object(o)
        })
        .collect();
    let mut evidence = Map::new();
    evidence.insert("series".into(), Value::Array(series));
    evidence.insert(
        "fan".into(),
        report.evidence.fan.as_ref().map_or(Value::Null, fan_to_value),
    );
    root.insert("evidence".into(), Value::Object(evidence));
    root.insert(
        "caveats".into(),
        Value::Array(report.caveats.iter().map(|c| Value::from(c.clone())).collect()),
    );
    Value::Object(root)
}

/// A human-readable rendering of a classification report.
pub fn report_to_text(report: &ClassificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("kind verdict:      {}\n", report.kind_verdict));
    out.push_str(&format!("parabolic verdict: {}\n", report.parabolic_verdict));
    out.push_str(&format!("theorem used:      {}\n", report.theorem_used));
    if !report.evidence.series.is_empty() {
        out.push_str("series evidence:\n");
        for ls in &report.evidence.series {
            out.push_str(&format!(
                "  {}: {} (exponent estimate {:.6}, partial sum {:.6e}, {} terms)\n",
                ls.label,
                ls.verdict.status,
                ls.verdict.exponent_estimate,
                ls.verdict.partial_sum,
                ls.verdict.n_terms_used,
            ));
        }
    }
    if let Some(fan) = &report.evidence.fan {
        let len = match fan.path_length {
            PathLengthEstimate::Finite(x) => format!("{x:.6e}"),
            PathLengthEstimate::Diverging => "diverging".to_string(),
        };
        out.push_str(&format!(
            "fan evidence:      {} (endpoint gap {:.6e}, path length {}, last increment {:.6e}, {} geodesics)\n",
            fan.outcome, fan.endpoint_gap, len, fan.last_increment, fan.n_geodesics,
        ));
    }
    if !report.caveats.is_empty() {
        out.push_str("caveats:\n");
        for c in &report.caveats {
            out.push_str(&format!("  - {c}\n"));
        }
    }
    out
}
