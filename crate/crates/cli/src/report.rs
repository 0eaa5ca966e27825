//! Structured run reports: a small JSON writer with insertion-ordered
//! keys, so `--json` output is byte-stable across runs.

use linlog_core::tv::{Count, TruthValue};

#[derive(Debug, Clone)]
pub enum Json {
    Str(String),
    Num(f64),
    UInt(u64),
    Bool(bool),
    Arr(Vec<Json>),
    Obj(Vec<(String, Json)>),
}

impl Json {
    pub fn str(s: impl Into<String>) -> Json {
        Json::Str(s.into())
    }

    pub fn obj(fields: impl IntoIterator<Item = (&'static str, Json)>) -> Json {
        Json::Obj(
            fields
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        )
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out);
        out
    }

    fn write(&self, out: &mut String) {
        match self {
            Json::Str(s) => {
                out.push('"');
                for c in s.chars() {
                    match c {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        '\t' => out.push_str("\\t"),
                        '\r' => out.push_str("\\r"),
                        c if (c as u32) < 0x20 => {
                            out.push_str(&format!("\\u{:04x}", c as u32));
                        }
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Json::Num(x) => out.push_str(&x.to_string()),
            Json::UInt(x) => out.push_str(&x.to_string()),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Arr(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write(out);
                }
                out.push(']');
            }
            Json::Obj(fields) => {
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    Json::Str(key.clone()).write(out);
                    out.push(':');
                    value.write(out);
                }
                out.push('}');
            }
        }
    }
}

pub fn truth_value_json(v: TruthValue) -> Json {
    let count = match v.count() {
        Count::Finite(n) => Json::Num(n),
        Count::Infinite => Json::str("inf"),
    };
    Json::obj([("strength", Json::Num(v.strength())), ("count", count)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_compact_ordered_json() {
        let j = Json::obj([
            ("command", Json::str("parse")),
            ("ok", Json::Bool(true)),
            ("n", Json::Num(2.0)),
            ("items", Json::Arr(vec![Json::UInt(1), Json::str("a\"b")])),
        ]);
        assert_eq!(
            j.render(),
            r#"{"command":"parse","ok":true,"n":2,"items":[1,"a\"b"]}"#
        );
    }
}
