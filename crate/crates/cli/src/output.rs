use std::fmt::Display;

use serde::Serialize;

/// Exit 1 carries partial output; exit 2 is a usage or parse error.
pub enum Failure {
    Semantic { output: String, message: String },
    Usage(String),
}

impl Failure {
    pub fn semantic(e: impl Display) -> Self {
        Failure::Semantic {
            output: String::new(),
            message: format!("error: {e}"),
        }
    }

    pub fn usage(e: impl Display) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Eight digits after the point, trailing zeros dropped.
pub fn fmt_float(x: f64) -> String {
    let s = format!("{x:.8}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

pub fn csv<I>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = ::csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("UTF-8 fields")
}
