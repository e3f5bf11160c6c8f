use serde::Serialize;
use serde_json::{Map, Value};

use curve_forge::ErrorClass;

/// Exit status for a finished command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Affirmative = 0,
    Negative = 1,
    InputError = 2,
    Inconclusive = 3,
    Contradiction = 4,
}

impl From<ErrorClass> for Status {
    fn from(c: ErrorClass) -> Self {
        match c {
            ErrorClass::Input => Status::InputError,
            ErrorClass::Negative => Status::Negative,
            ErrorClass::Inconclusive => Status::Inconclusive,
            ErrorClass::Contradiction => Status::Contradiction,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub verdict: String,
    pub payload: Map<String, Value>,
    pub diagnostics: Vec<String>,
    #[serde(skip)]
    pub status: Status,
}

impl CommandResult {
    pub fn new(command: &str, verdict: impl Into<String>, status: Status) -> Self {
        CommandResult {
            command: command.into(),
            verdict: verdict.into(),
            payload: Map::new(),
            diagnostics: Vec::new(),
            status,
        }
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.payload.insert(key.into(), value.into());
        self
    }

    pub fn note(&mut self, d: impl Into<String>) -> &mut Self {
        self.diagnostics.push(d.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// `verdict: …`, then one `key = value` line per payload entry, nested
    /// values indented, then `note: …` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!("verdict: {}\n", self.verdict);
        for (k, v) in &self.payload {
            entry(&mut out, 0, k, v);
        }
        for d in &self.diagnostics {
            out.push_str(&format!("note: {d}\n"));
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

fn entry(out: &mut String, depth: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key} = {s}\n"));
        return;
    }
    match v {
        Value::Array(items) if items.is_empty() => out.push_str(&format!("{pad}{key} = (none)\n")),
        Value::Array(items) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}  - {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}  -\n"));
                        if let Value::Object(m) = item {
                            for (k, v) in m {
                                entry(out, depth + 2, k, v);
                            }
                        }
                    }
                }
            }
        }
        Value::Object(m) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, v) in m {
                entry(out, depth + 1, k, v);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_layout() {
        let mut r = CommandResult::new("demo", "ok", Status::Affirmative);
        r.put("x", "t^2 - 1").put("points", json!([{"point": "[0:0:1]", "multiplicity": 2}]));
        r.put("empty", json!([])).note("assumed");
        assert_eq!(
            r.to_text(),
            "verdict: ok\nx = t^2 - 1\npoints:\n  -\n    point = [0:0:1]\n    multiplicity = 2\nempty = (none)\nnote: assumed\n"
        );
    }

    #[test]
    fn json_field_order_is_fixed() {
        let mut r = CommandResult::new("demo", "ok", Status::Negative);
        r.put("b", 1).put("a", 2);
        let s = r.to_json();
        assert!(s.find("\"command\"") < s.find("\"verdict\""));
        assert!(s.find("\"b\"") < s.find("\"a\""));
        assert!(!s.contains("status"));
    }
}
