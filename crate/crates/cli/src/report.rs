use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

/// Significant digits used for every float in structured output.
pub const FLOAT_DIGITS: usize = 17;

/// A float as a decimal string with its digit count made explicit.
pub fn float(v: f64) -> Value {
    json!({
        "value": format!("{:.*e}", FLOAT_DIGITS - 1, v),
        "digits": FLOAT_DIGITS,
    })
}

pub fn pq(r: &BigRational) -> Value {
    Value::String(bernoulli_kdv::exact_algebra::rational::to_pq(r))
}

/// One item of a report: structured fields plus the line shown in human mode.
pub struct Record {
    pub fields: Value,
    pub line: String,
    pub pass: Option<bool>,
}

impl Record {
    pub fn new(fields: Value, line: impl Into<String>) -> Self {
        Self {
            fields,
            line: line.into(),
            pass: None,
        }
    }

    pub fn check(fields: Value, line: impl Into<String>, pass: bool) -> Self {
        Self {
            fields,
            line: line.into(),
            pass: Some(pass),
        }
    }
}

#[derive(Serialize)]
struct Document<'a> {
    command: &'a [String],
    version: &'static str,
    tolerances: &'a BTreeMap<String, String>,
    records: Vec<Value>,
    summary: Value,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_seconds: Option<Value>,
}

pub struct RunReport {
    pub command: Vec<String>,
    pub tolerances: BTreeMap<String, String>,
    pub records: Vec<Record>,
    /// Extra top-level facts (agreement flags, counts).
    pub summary: Value,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        Self {
            command,
            tolerances: BTreeMap::new(),
            records: Vec::new(),
            summary: json!({}),
        }
    }

    pub fn tolerance(&mut self, name: &str, value: impl ToString) {
        self.tolerances.insert(name.to_string(), value.to_string());
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass != Some(false))
            && self.summary.get("agree").and_then(Value::as_bool) != Some(false)
    }

    pub fn to_json(&self, elapsed: Option<f64>) -> String {
        let mut records = Vec::with_capacity(self.records.len());
        for r in &self.records {
            let mut v = r.fields.clone();
            if let (Some(p), Some(obj)) = (r.pass, v.as_object_mut()) {
                obj.insert("pass".into(), Value::Bool(p));
            }
            records.push(v);
        }
        let doc = Document {
            command: &self.command,
            version: env!("CARGO_PKG_VERSION"),
            tolerances: &self.tolerances,
            records,
            summary: self.summary.clone(),
            passed: self.passed(),
            elapsed_seconds: elapsed.map(float),
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }

    pub fn to_text(&self, elapsed: Option<f64>) -> String {
        let mut out = String::new();
        for r in &self.records {
            let tag = match r.pass {
                Some(true) => "PASS  ",
                Some(false) => "FAIL  ",
                None => "",
            };
            out.push_str(tag);
            out.push_str(&r.line);
            out.push('\n');
        }
        let checks: Vec<bool> = self.records.iter().filter_map(|r| r.pass).collect();
        if !checks.is_empty() {
            let ok = checks.iter().filter(|&&p| p).count();
            out.push_str(&format!("{ok}/{} pass\n", checks.len()));
        }
        if let Some(agree) = self.summary.get("agree").and_then(Value::as_bool) {
            out.push_str(&format!("routes agree: {agree}\n"));
        }
        if !self.tolerances.is_empty() {
            let t: Vec<String> = self.tolerances.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("tolerances: {}\n", t.join(", ")));
        }
        if let Some(s) = elapsed {
            out.push_str(&format!("elapsed: {s:.3}s\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_carry_digit_count() {
        let v = float(1.0 / 6.0);
        assert_eq!(v["digits"], 17);
        assert_eq!(v["value"], "1.6666666666666666e-1");
    }

    #[test]
    fn failed_record_fails_report() {
        let mut r = RunReport::new(vec!["verify".into()]);
        r.push(Record::check(json!({"n": 1}), "n=1", true));
        assert!(r.passed());
        r.push(Record::check(json!({"n": 2}), "n=2", false));
        assert!(!r.passed());
        let doc: Value = serde_json::from_str(&r.to_json(None)).unwrap();
        assert_eq!(doc["records"][1]["pass"], false);
        assert!(doc.get("elapsed_seconds").is_none());
    }
}
