use serde::Serialize;
use sha2::{Digest, Sha256};

pub const SCHEMA: &str = "tfds-report/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Input {
    pub path: String,
    pub sha256: String,
}

impl Input {
    pub fn new(path: impl Into<String>, bytes: &[u8]) -> Self {
        Input { path: path.into(), sha256: sha256_hex(bytes) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument<P: Serialize> {
    pub schema: &'static str,
    pub version: &'static str,
    pub input: Input,
    pub payload: P,
    pub citations: Vec<&'static str>,
}

impl<P: Serialize> ReportDocument<P> {
    pub fn new(input: Input, payload: P, citations: Vec<&'static str>) -> Self {
        ReportDocument { schema: SCHEMA, version: env!("CARGO_PKG_VERSION"), input, payload, citations }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}
