use std::fmt::Write;
use std::time::Instant;

use closedgraph::{ClosednessViolation, UmbrellaViolation, VertexOrdering, ViolationKind};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Closed,
    NotClosed,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Closed => 0,
            Status::NotClosed => 1,
            Status::Error => 2,
        }
    }
}

/// Evidence attached to every verdict, checkable without trusting the tool.
#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `labeling[v - 1]` is the label given to vertex `v`.
    ClosedLabeling {
        labeling: Vec<u32>,
    },
    ProperIntervalOrdering {
        ordering: Vec<u32>,
        labeling: Vec<u32>,
    },
    UmbrellaViolation {
        ordering: Vec<u32>,
        triple: [u32; 3],
        present_edge: [u32; 2],
        missing_edge: [u32; 2],
    },
    ClosednessViolation {
        shared: &'static str,
        edge1: [u32; 2],
        edge2: [u32; 2],
        missing_edge: [u32; 2],
    },
    FailingSpair {
        pair: String,
        remainder: String,
    },
}

impl Certificate {
    pub fn labeling(sigma: &VertexOrdering) -> Certificate {
        Certificate::ClosedLabeling {
            labeling: labels(sigma),
        }
    }

    pub fn ordering(sigma: &VertexOrdering) -> Certificate {
        Certificate::ProperIntervalOrdering {
            ordering: sigma.order().to_vec(),
            labeling: labels(sigma),
        }
    }

    pub fn umbrella(ordering: &VertexOrdering, v: &UmbrellaViolation) -> Certificate {
        Certificate::UmbrellaViolation {
            ordering: ordering.order().to_vec(),
            triple: [v.u, v.v, v.w],
            present_edge: [v.present_edge.0, v.present_edge.1],
            missing_edge: [v.missing_edge.0, v.missing_edge.1],
        }
    }

    pub fn closedness(v: &ClosednessViolation) -> Certificate {
        Certificate::ClosednessViolation {
            shared: match v.kind {
                ViolationKind::SharedLower => "lower",
                ViolationKind::SharedUpper => "upper",
            },
            edge1: [v.edge1.0, v.edge1.1],
            edge2: [v.edge2.0, v.edge2.1],
            missing_edge: [v.missing_edge.0, v.missing_edge.1],
        }
    }
}

fn labels(sigma: &VertexOrdering) -> Vec<u32> {
    (1..=sigma.len() as u32).map(|v| sigma.pos(v)).collect()
}

#[derive(Debug)]
pub struct Check {
    pub check: &'static str,
    pub ok: bool,
    pub detail: String,
}

fn checks_by_name<S: Serializer>(checks: &[Check], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(checks.len()))?;
    for c in checks {
        map.serialize_entry(c.check, &json!({ "ok": c.ok, "detail": c.detail }))?;
    }
    map.end()
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(
        skip_serializing_if = "Vec::is_empty",
        serialize_with = "checks_by_name"
    )]
    pub verification: Vec<Check>,
    /// Wall time per phase, rounded to microseconds.
    pub timing_ms: Map<String, Value>,
}

impl Report {
    pub fn new(command: &'static str) -> Report {
        Report {
            command,
            status: Status::Error,
            message: None,
            certificate: None,
            result: None,
            verification: Vec::new(),
            timing_ms: Map::new(),
        }
    }

    pub fn fail(mut self, message: String) -> Report {
        self.status = Status::Error;
        self.message = Some(message);
        self
    }

    /// Runs `f`, recording its wall time under `phase`.
    pub fn timed<T>(&mut self, phase: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
        self.timing_ms.insert(phase.to_string(), json!(ms));
        out
    }

    pub fn render(&self, json: bool) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        if json {
            let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
            s.push('\n');
            s
        } else {
            let mut out = String::new();
            if let Value::Object(map) = &value {
                for (key, v) in map {
                    render_text(&mut out, key, v);
                }
            }
            out
        }
    }
}

// Text form walks the same JSON value, so both formats carry the same
// fields. Scalars and flat arrays go on one line; nested data gets a
// dotted key or indented lines.
fn render_text(out: &mut String, key: &str, v: &Value) {
    match v {
        Value::Object(map) => {
            for (k, inner) in map {
                render_text(out, &format!("{key}.{k}"), inner);
            }
        }
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            let _ = writeln!(out, "{key}: {}", parts.join(" "));
        }
        Value::Array(items)
            if items
                .iter()
                .all(|i| matches!(i, Value::Array(a) if a.iter().all(is_scalar))) =>
        {
            let _ = writeln!(out, "{key}:");
            for item in items {
                let Value::Array(row) = item else {
                    unreachable!()
                };
                let parts: Vec<String> = row.iter().map(scalar).collect();
                let _ = writeln!(out, "  {}", parts.join(" "));
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                render_text(out, &format!("{key}[{i}]"), item);
            }
        }
        Value::String(s) if s.contains('\n') => {
            let _ = writeln!(out, "{key}:");
            for line in s.lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        other => {
            let _ = writeln!(out, "{key}: {}", scalar(other));
        }
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => match n.as_f64() {
            Some(f) if !n.is_i64() && !n.is_u64() => format!("{f:.3}"),
            _ => n.to_string(),
        },
        other => other.to_string(),
    }
}
