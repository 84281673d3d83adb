use std::fmt::Write;

use serde::Serialize;

use crate::args::{EnsembleArg, SampleArgs};
use crate::failure::{CmdResult, EXIT_VIOLATION};
use crate::output::{emit, fmt_num, json_document, write_file, RunHeader};
use cohere_core::measures::THEOREM_TOL;
use cohere_core::{fig1_scan, SampleSummary};

#[derive(Serialize)]
struct SummaryBody {
    claim: &'static str,
    tolerance: f64,
    #[serde(flatten)]
    summary: SampleSummary,
    min_margin_concurrence: f64,
    min_margin_l1_coherence: f64,
    csv: Option<String>,
}

pub fn run(args: &SampleArgs) -> CmdResult {
    let spec = args.ensemble.spec(EnsembleArg::Pure);
    let records = fig1_scan(&spec, args.ensemble.workers())?;
    let summary = SampleSummary::from_records(&records);
    let header = RunHeader::sampled("sample", spec.seed, spec.descriptor(), spec.count);

    let mut csv = header.comment_lines();
    csv.push_str("concurrence,l1_coherence\n");
    for r in &records {
        let _ = writeln!(
            csv,
            "{},{}",
            fmt_num(r.concurrence),
            fmt_num(r.l1_coherence)
        );
    }
    emit(args.out.as_deref(), &csv)?;

    let worst = &records[summary.min_margin_index as usize];
    let doc = json_document(
        &header,
        &SummaryBody {
            claim: "concurrence <= l1_coherence + tolerance",
            tolerance: THEOREM_TOL,
            summary,
            min_margin_concurrence: worst.concurrence,
            min_margin_l1_coherence: worst.l1_coherence,
            csv: args.out.as_ref().map(|p| p.display().to_string()),
        },
    );
    match (&args.summary, &args.out) {
        (Some(path), _) => write_file(path, &doc)?,
        (None, Some(_)) => emit(None, &doc)?,
        (None, None) => eprint!("{doc}"),
    }
    Ok(if summary.violations == 0 {
        0
    } else {
        EXIT_VIOLATION
    })
}
