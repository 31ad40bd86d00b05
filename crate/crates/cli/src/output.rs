use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

/// Where results go and in which format.
pub struct Sink {
    out: Option<PathBuf>,
    json: bool,
}

impl Sink {
    pub fn new(out: Option<PathBuf>, json: bool) -> Self {
        Sink { out, json }
    }

    pub fn out(&self) -> Option<&Path> {
        self.out.as_deref()
    }

    pub fn json(&self) -> bool {
        self.json
    }

    /// Writes `value` as pretty JSON under `--json`, else the text from `text`.
    pub fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> std::io::Result<()> {
        let body = if self.json {
            let mut s = serde_json::to_string_pretty(value).map_err(std::io::Error::other)?;
            s.push('\n');
            s
        } else {
            text()
        };
        match &self.out {
            Some(path) => std::fs::write(path, body),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(body.as_bytes())?;
                stdout.flush()
            }
        }
    }
}
