use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::args::{AuditArgs, AuditTarget, EnsembleArg};
use crate::failure::{CmdResult, EXIT_VIOLATION};
use crate::output::{emit, json_document, write_file, RunHeader};
use cohere_core::experiment::LinkTally;
use cohere_core::{appendix_a_audit, theorem_chain_audit, AuditRecord, DensityMatrix};

#[derive(Serialize)]
struct ChainOutput<'a> {
    target: &'static str,
    samples: u64,
    end_to_end_violations: u64,
    links: &'a [LinkTally],
}

#[derive(Serialize)]
struct NormBoundOutput<'a> {
    target: &'static str,
    readings: [&'a AuditRecord; 2],
}

/// Where worst-case states go: `dir/stem.tag.worst.json`.
struct StateSink {
    dir: PathBuf,
    stem: String,
}

impl StateSink {
    fn new(args: &AuditArgs, default_stem: &str) -> Option<Self> {
        let stem = args
            .out
            .as_deref()
            .and_then(Path::file_stem)
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| default_stem.to_string());
        let dir = match (&args.state_dir, &args.out) {
            (Some(dir), _) => dir.clone(),
            (None, Some(out)) => out.parent().map(Path::to_path_buf).unwrap_or_default(),
            (None, None) => return None,
        };
        Some(Self { dir, stem })
    }

    fn write(&self, tag: &str, state: &DensityMatrix) -> CmdResult<String> {
        let tag: String = tag
            .replace("<=", "-le-")
            .replace('*', "x")
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '-' })
            .collect();
        let path = self.dir.join(format!("{}.{tag}.worst.json", self.stem));
        let mut text = state.to_json();
        text.push('\n');
        write_file(&path, &text)?;
        Ok(path.display().to_string())
    }
}

pub fn run(args: &AuditArgs) -> CmdResult {
    let spec = args.ensemble.spec(EnsembleArg::Ginibre);
    let workers = args.ensemble.workers();
    let header = RunHeader::sampled("audit", spec.seed, spec.descriptor(), spec.count);
    match args.target {
        AuditTarget::Theorem1Chain => {
            let mut audit = theorem_chain_audit(&spec, workers)?;
            if let Some(sink) = StateSink::new(args, "theorem1-chain") {
                for link in &mut audit.links {
                    if let Some(state) = &link.worst_state {
                        link.worst_state_file = Some(sink.write(link.name, state)?);
                    }
                }
            }
            let violations = audit.end_to_end_violations();
            let doc = json_document(
                &header,
                &ChainOutput {
                    target: "theorem1-chain",
                    samples: audit.samples,
                    end_to_end_violations: violations,
                    links: &audit.links,
                },
            );
            emit(args.out.as_deref(), &doc)?;
            Ok(if violations == 0 { 0 } else { EXIT_VIOLATION })
        }
        AuditTarget::AppendixA => {
            let (mut a, mut b) = appendix_a_audit(&spec, workers)?;
            if let Some(sink) = StateSink::new(args, "appendix-a") {
                for (record, tag) in [(&mut a, "eq1-convention"), (&mut b, "appendix-factor2")] {
                    if let Some(worst) = &mut record.worst_case {
                        worst.state_file = Some(sink.write(tag, &worst.state)?);
                    }
                }
            }
            let doc = json_document(
                &header,
                &NormBoundOutput {
                    target: "appendix-a",
                    readings: [&a, &b],
                },
            );
            emit(args.out.as_deref(), &doc)?;
            // The bound is audited, not asserted: violations are findings.
            Ok(0)
        }
    }
}
