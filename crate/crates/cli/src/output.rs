use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::Context;
use chrono::{SecondsFormat, Utc};
use serde::Serialize;

use crate::failure::{CmdResult, Failure};

const DETERMINISTIC: &str = "none (deterministic)";

/// Provenance block written at the top of every output.
#[derive(Debug, Clone, Serialize)]
pub struct RunHeader {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub seed: Option<u64>,
    pub ensemble: Option<String>,
    pub samples: Option<u64>,
    pub generator: &'static str,
    pub timestamp: String,
}

impl RunHeader {
    fn now(command: &str) -> Self {
        Self {
            tool: "cohere",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            seed: None,
            ensemble: None,
            samples: None,
            generator: DETERMINISTIC,
            timestamp: Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true),
        }
    }

    pub fn sampled(command: &str, seed: u64, ensemble: String, samples: u64) -> Self {
        Self {
            seed: Some(seed),
            ensemble: Some(ensemble),
            samples: Some(samples),
            generator: cohere_core::GENERATOR_NAME,
            ..Self::now(command)
        }
    }

    pub fn deterministic(command: &str, input: &str, samples: u64) -> Self {
        Self {
            ensemble: Some(input.to_string()),
            samples: Some(samples),
            ..Self::now(command)
        }
    }

    /// `# key: value` lines for CSV outputs.
    pub fn comment_lines(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "none".into());
        format!(
            "# tool: {} {}\n# command: {}\n# seed: {}\n# ensemble: {}\n# samples: {}\n# generator: {}\n# timestamp: {}\n",
            self.tool,
            self.version,
            self.command,
            opt(self.seed.map(|s| s.to_string())),
            opt(self.ensemble.clone()),
            opt(self.samples.map(|s| s.to_string())),
            self.generator,
            self.timestamp,
        )
    }
}

#[derive(Serialize)]
struct WithHeader<'a, T: Serialize> {
    header: &'a RunHeader,
    #[serde(flatten)]
    body: &'a T,
}

pub fn json_document<T: Serialize>(header: &RunHeader, body: &T) -> String {
    let mut text = serde_json::to_string_pretty(&WithHeader { header, body })
        .expect("output records serialize");
    text.push('\n');
    text
}

/// Scientific notation carrying at least 12 significant digits, and more when
/// the shortest round-trip form needs them. Locale independent.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let shortest = format!("{x:e}");
    let mantissa = shortest.split('e').next().unwrap_or("");
    let digits = mantissa.chars().filter(|c| c.is_ascii_digit()).count();
    if digits >= 12 {
        shortest
    } else {
        format!("{x:.11e}")
    }
}

pub fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_num).unwrap_or_default()
}

/// Writes `text` to `path`, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, text: &str) -> CmdResult<()> {
    match path {
        Some(path) => write_file(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .context("writing to stdout")
                .map_err(Failure::io)
        }
    }
}

pub fn write_file(path: &Path, text: &str) -> CmdResult<()> {
    fs::write(path, text)
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(Failure::io)
}
