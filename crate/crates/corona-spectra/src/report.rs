//! Deterministic JSON reports.
//!
//! The writer is deliberately small and owned by this crate so that output
//! bytes are stable across platforms and releases: object keys are emitted
//! in sorted order, floats always use 17 significant digits (enough to
//! round-trip an `f64` exactly), and exact integers are written as bare
//! literals however large they are.

use num_bigint::BigUint;

use crate::invariants::InvariantReport;
use crate::spectrum::Spectrum;

/// A JSON value. Object insertion order is irrelevant; rendering sorts keys.
#[derive(Debug, Clone, PartialEq)]
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    Big(BigUint),
    Float(f64),
    Str(String),
    Array(Vec<Json>),
    Object(Vec<(String, Json)>),
}

impl Json {
    /// Renders the value as canonical JSON (sorted keys, two-space indent,
    /// no trailing newline).
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out
    }

    fn write(&self, out: &mut String, indent: usize) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(v) => out.push_str(&v.to_string()),
            Json::Big(v) => out.push_str(&v.to_string()),
            Json::Float(v) => {
                assert!(v.is_finite(), "refusing to serialize non-finite float {v}");
                out.push_str(&format!("{v:.16e}"));
            }
            Json::Str(s) => write_escaped(out, s),
            Json::Array(items) => {
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
                    push_indent(out, indent + 1);
                    item.write(out, indent + 1);
                }
                out.push('\n');
                push_indent(out, indent);
                out.push(']');
            }
            Json::Object(pairs) => {
                if pairs.is_empty() {
                    out.push_str("{}");
                    return;
                }
                let mut order: Vec<usize> = (0..pairs.len()).collect();
                order.sort_by(|&a, &b| pairs[a].0.cmp(&pairs[b].0));
                out.push('{');
                for (i, &idx) in order.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('\n');
                    push_indent(out, indent + 1);
                    write_escaped(out, &pairs[idx].0);
                    out.push_str(": ");
                    pairs[idx].1.write(out, indent + 1);
                }
                out.push('\n');
                push_indent(out, indent);
                out.push('}');
            }
        }
    }
}

fn push_indent(out: &mut String, indent: usize) {
    for _ in 0..indent {
        out.push_str("  ");
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
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
}

fn push_float(pairs: &mut Vec<(String, Json)>, key: &str, value: Option<f64>) {
    if let Some(v) = value {
        pairs.push((key.into(), Json::Float(v)));
    }
}

/// Report for one computed spectrum: the grouped eigenvalues, which strategy
/// produced them, and (when a cross-check ran) the worst deviation from the
/// eigensolver.
pub fn spectrum_report(
    method_label: &str,
    spectrum: &Spectrum,
    max_deviation_vs_oracle: Option<f64>,
) -> Json {
    let entries: Vec<Json> = spectrum
        .entries()
        .iter()
        .map(|e| {
            Json::Object(vec![
                ("value".into(), Json::Float(e.value)),
                ("multiplicity".into(), Json::Int(e.multiplicity as i64)),
            ])
        })
        .collect();
    let mut pairs = vec![
        ("method".into(), Json::Str(method_label.into())),
        ("order".into(), Json::Int(spectrum.order() as i64)),
        ("entries".into(), Json::Array(entries)),
    ];
    push_float(&mut pairs, "max_deviation_vs_oracle", max_deviation_vs_oracle);
    Json::Object(pairs)
}

/// Report for the invariants of one graph. Routes that were not computed
/// (closed forms on irregular operands, anything spectral on a disconnected
/// graph) are simply absent.
pub fn invariant_report_json(report: &InvariantReport) -> Json {
    let mut tau = vec![("exact".into(), Json::Big(report.tau_exact.clone()))];
    push_float(&mut tau, "spectral", report.tau_spectral);
    push_float(&mut tau, "closed", report.tau_closed);

    let mut pairs = vec![
        ("n".into(), Json::Int(report.n as i64)),
        ("m".into(), Json::Int(report.m as i64)),
        ("tau".into(), Json::Object(tau)),
        ("max_rel_dev".into(), Json::Float(report.max_rel_dev)),
    ];

    if report.kf_star_spectral.is_some()
        || report.kf_star_closed.is_some()
        || report.kf_star_resistance.is_some()
    {
        let mut kf = Vec::new();
        push_float(&mut kf, "spectral", report.kf_star_spectral);
        push_float(&mut kf, "closed", report.kf_star_closed);
        push_float(&mut kf, "resistance", report.kf_star_resistance);
        pairs.push(("kf_star".into(), Json::Object(kf)));
    }
    if report.kemeny_spectral.is_some() || report.kemeny_closed.is_some() {
        let mut kemeny = Vec::new();
        push_float(&mut kemeny, "spectral", report.kemeny_spectral);
        push_float(&mut kemeny, "closed", report.kemeny_closed);
        pairs.push(("kemeny".into(), Json::Object(kemeny)));
    }
    if let Some(reason) = &report.skipped {
        pairs.push(("skipped_reason".into(), Json::Str(reason.clone())));
    }
    Json::Object(pairs)
}

/// Report for a cospectrality check between two spectra.
pub fn cospectral_report(
    a: &Spectrum,
    b: &Spectrum,
    tol: f64,
    cospectral: bool,
) -> Json {
    let deviation = match a.max_sorted_deviation(b) {
        Some(d) => Json::Float(d),
        None => Json::Null,
    };
    Json::Object(vec![
        (
            "orders".into(),
            Json::Array(vec![
                Json::Int(a.order() as i64),
                Json::Int(b.order() as i64),
            ]),
        ),
        ("tolerance".into(), Json::Float(tol)),
        ("max_sorted_deviation".into(), deviation),
        ("cospectral".into(), Json::Bool(cospectral)),
    ])
}
