//! A small structured-text report: `key: value` lines, with lists and maps
//! indented under their key.
//!
//! ```text
//! command: classify
//! structural: restrictive
//! partial-monotony:
//!   a: true
//! hits:
//!   - add-arg:z:z>a
//! ```

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Value {
    Scalar(String),
    List(Vec<String>),
    Map(Vec<(String, String)>),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn field(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        self.entries.push((key.into(), Value::Scalar(value.to_string())));
        self
    }

    pub fn list<I, T>(&mut self, key: &str, items: I) -> &mut Self
    where
        I: IntoIterator<Item = T>,
        T: fmt::Display,
    {
        let items = items.into_iter().map(|i| i.to_string()).collect();
        self.entries.push((key.into(), Value::List(items)));
        self
    }

    pub fn map<I, K, V>(&mut self, key: &str, items: I) -> &mut Self
    where
        I: IntoIterator<Item = (K, V)>,
        K: fmt::Display,
        V: fmt::Display,
    {
        let items = items
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        self.entries.push((key.into(), Value::Map(items)));
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (key, value) in &self.entries {
            match value {
                Value::Scalar(v) => writeln!(f, "{key}: {v}")?,
                Value::List(items) if items.is_empty() => writeln!(f, "{key}: []")?,
                Value::List(items) => {
                    writeln!(f, "{key}:")?;
                    for i in items {
                        writeln!(f, "  - {i}")?;
                    }
                }
                Value::Map(items) if items.is_empty() => writeln!(f, "{key}: {{}}")?,
                Value::Map(items) => {
                    writeln!(f, "{key}:")?;
                    for (k, v) in items {
                        writeln!(f, "  {k}: {v}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_all_shapes() {
        let mut r = Report::new();
        r.field("a", 1)
            .list("empty", Vec::<String>::new())
            .list("xs", ["p", "q"])
            .map("m", [("k", true)])
            .map("none", Vec::<(String, String)>::new());
        assert_eq!(
            r.to_string(),
            "a: 1\nempty: []\nxs:\n  - p\n  - q\nm:\n  k: true\nnone: {}\n"
        );
    }
}
