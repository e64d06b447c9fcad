//! Command reports: ordered `key: value` lines, or a JSON object with the
//! same keys.

use serde_json::{json, Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

struct Field {
    key: String,
    /// `None` for text-only fields.
    json: Option<Value>,
    /// Text lines replacing the default `key: value` rendering.
    text: Option<Vec<String>>,
}

pub struct Report {
    command: String,
    /// Input files as `(text, json)`, in reading order.
    inputs: Vec<(String, Value)>,
    fields: Vec<Field>,
    /// Graph or formula file emitted after the fields in text mode.
    body: Option<String>,
}

/// Default text rendering of a JSON value.
pub fn render(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::Bool(b) => if *b { "yes" } else { "no" }.into(),
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        Value::Array(xs) => xs.iter().map(render).collect::<Vec<_>>().join(" "),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", render(v)))
            .collect::<Vec<_>>()
            .join(" "),
    }
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            inputs: Vec::new(),
            fields: Vec::new(),
            body: None,
        }
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.push(Field {
            key: key.into(),
            json: Some(value.into()),
            text: None,
        });
        self
    }

    /// A field whose text form is `key: text` and JSON form is `value`.
    pub fn put_as(&mut self, key: &str, text: String, value: impl Into<Value>) -> &mut Self {
        self.put_lines(key, vec![format!("{key}: {text}")], value)
    }

    /// A field rendered as several raw text lines.
    pub fn put_lines(&mut self, key: &str, lines: Vec<String>, value: impl Into<Value>) -> &mut Self {
        self.fields.push(Field {
            key: key.into(),
            json: Some(value.into()),
            text: Some(lines),
        });
        self
    }

    /// Lines that only appear in the text form.
    pub fn text_only(&mut self, lines: Vec<String>) -> &mut Self {
        self.fields.push(Field {
            key: String::new(),
            json: None,
            text: Some(lines),
        });
        self
    }

    /// Records an input file: one `input:` line each, and an `inputs` array
    /// in JSON.
    pub fn input(&mut self, text: String, value: Value) -> &mut Self {
        self.inputs.push((text, value));
        self
    }

    pub fn set_body(&mut self, text: String) {
        self.body = Some(text);
    }

    fn text_lines(&self) -> Vec<String> {
        let mut lines = vec![format!("command: {}", self.command), format!("version: {VERSION}")];
        lines.extend(self.inputs.iter().map(|(t, _)| format!("input: {t}")));
        for f in &self.fields {
            match &f.text {
                Some(t) => lines.extend(t.iter().cloned()),
                None => lines.push(format!(
                    "{}: {}",
                    f.key,
                    render(f.json.as_ref().unwrap_or(&Value::Null))
                )),
            }
        }
        lines
    }

    /// Plain `key: value` lines. With a body the fields become `c` comment
    /// lines so the output is itself a valid input file.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match &self.body {
            None => {
                for l in self.text_lines() {
                    s.push_str(&l);
                    s.push('\n');
                }
            }
            Some(body) => {
                let mut body_lines = body.lines();
                // Keep the version line of the format first.
                if let Some(first) = body.lines().next().filter(|l| l.starts_with("c format")) {
                    s.push_str(first);
                    s.push('\n');
                    body_lines.next();
                }
                for l in self.text_lines() {
                    s.push_str("c ");
                    s.push_str(&l);
                    s.push('\n');
                }
                for l in body_lines {
                    s.push_str(l);
                    s.push('\n');
                }
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("version".into(), json!(VERSION));
        if !self.inputs.is_empty() {
            m.insert("inputs".into(), self.inputs.iter().map(|(_, v)| v.clone()).collect());
        }
        for f in &self.fields {
            if let Some(v) = &f.json {
                m.insert(f.key.clone(), v.clone());
            }
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_agree_on_keys() {
        let mut r = Report::new("classify");
        r.put("verdict", "tractable").put("witness", 0).put("free", true);
        r.put_as("layout", "1 2".into(), json!([1, 2]));
        let text = r.to_text();
        assert!(text.starts_with("command: classify\nversion: "));
        assert!(text.ends_with("verdict: tractable\nwitness: 0\nfree: yes\nlayout: 1 2\n"));
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["witness"], json!(0));
        assert_eq!(v["layout"], json!([1, 2]));
    }

    #[test]
    fn every_input_is_kept() {
        let mut r = Report::new("sfree");
        r.input("g.txt 01".into(), json!({ "path": "g.txt" }));
        r.input("f.txt 02".into(), json!({ "path": "f.txt" }));
        r.put("free", false);
        assert!(r.to_text().contains("input: g.txt 01\ninput: f.txt 02\nfree: no\n"));
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["inputs"][1]["path"], "f.txt");
    }

    #[test]
    fn body_fields_become_comments() {
        let mut r = Report::new("subdivide");
        r.put("k", 1);
        r.set_body("c format 1\np edge 1 0\n".into());
        assert_eq!(
            r.to_text(),
            format!("c format 1\nc command: subdivide\nc version: {VERSION}\nc k: 1\np edge 1 0\n")
        );
    }
}
