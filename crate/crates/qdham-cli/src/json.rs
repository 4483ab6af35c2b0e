//! Hand-rolled JSON emission so output is byte-deterministic: object fields
//! keep insertion order, general floats print with exactly six decimals
//! (round half to even, via the standard formatter), and tiny magnitudes
//! (residuals, tolerances) use exponent notation instead of collapsing to
//! zero.

use std::fmt::Write;

#[derive(Debug, Clone)]
pub enum Json {
    Null,
    Bool(bool),
    UInt(u64),
    /// fixed six-decimal float (table values, spectra, margins)
    F6(f64),
    /// exponent-notation float (residuals, tolerances)
    Exp(f64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(&'static str, Json)>),
}

impl Json {
    pub fn obj() -> Vec<(&'static str, Json)> {
        Vec::new()
    }

    pub fn render(&self, pretty: bool) -> String {
        let mut out = String::new();
        self.write(&mut out, pretty, 0);
        out.push('\n');
        out
    }

    fn write(&self, out: &mut String, pretty: bool, depth: usize) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::UInt(v) => write!(out, "{v}").unwrap(),
            Json::F6(v) => write!(out, "{v:.6}").unwrap(),
            Json::Exp(v) => write!(out, "{v:e}").unwrap(),
            Json::Str(s) => write_escaped(out, s),
            Json::Arr(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    if pretty {
                        out.push('\n');
                        indent(out, depth + 1);
                    }
                    item.write(out, pretty, depth + 1);
                }
                if pretty {
                    out.push('\n');
                    indent(out, depth);
                }
                out.push(']');
            }
            Json::Obj(fields) => {
                if fields.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    if pretty {
                        out.push('\n');
                        indent(out, depth + 1);
                    }
                    write_escaped(out, key);
                    out.push(':');
                    if pretty {
                        out.push(' ');
                    }
                    value.write(out, pretty, depth + 1);
                }
                if pretty {
                    out.push('\n');
                    indent(out, depth);
                }
                out.push('}');
            }
        }
    }
}

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
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
            c if (c as u32) < 0x20 => write!(out, "\\u{:04x}", c as u32).unwrap(),
            c => out.push(c),
        }
    }
    out.push('"');
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        let doc = Json::Obj(vec![
            ("a", Json::F6(18.0)),
            ("b", Json::Exp(1e-10)),
            ("c", Json::Str("x\"y".into())),
            ("d", Json::Arr(vec![Json::UInt(2), Json::Bool(true), Json::Null])),
        ]);
        assert_eq!(
            doc.render(false),
            "{\"a\":18.000000,\"b\":1e-10,\"c\":\"x\\\"y\",\"d\":[2,true,null]}\n"
        );
        assert_eq!(Json::F6(-0.4244289).render(false), "-0.424429\n");
        assert_eq!(Json::Exp(0.0).render(false), "0e0\n");
    }
}
