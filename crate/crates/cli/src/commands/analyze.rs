use std::fs;

use anyhow::{anyhow, Context};
use serde::Serialize;

use crate::args::AnalyzeArgs;
use crate::failure::{CmdResult, Failure};
use crate::output::{emit, json_document, RunHeader};
use cohere_core::states::reduce_qubits;
use cohere_core::{
    induced_one_norm, l1_coherence, measure_report, theorem1_chain, DensityMatrix, MeasureReport,
    TheoremChainReport,
};

#[derive(Serialize)]
struct NormBound {
    induced_one_norm: f64,
    /// `l1 - ||rho||_1` (ordered-pair convention).
    eq1_convention_margin: f64,
    /// `2 l1 - ||rho||_1`.
    appendix_factor2_margin: f64,
}

#[derive(Serialize)]
struct PairReports {
    ab: MeasureReport,
    ac: MeasureReport,
    bc: MeasureReport,
}

#[derive(Serialize)]
struct AnalyzeOutput {
    dim: usize,
    l1_coherence: f64,
    purity: f64,
    /// Two-qubit inputs only.
    measures: Option<MeasureReport>,
    theorem1_chain: Option<TheoremChainReport>,
    norm_bound: Option<NormBound>,
    /// Three-qubit inputs only: reductions to each qubit pair.
    pairs: Option<PairReports>,
}

pub fn run(args: &AnalyzeArgs) -> CmdResult {
    let text = fs::read_to_string(&args.state_file)
        .with_context(|| format!("cannot read {}", args.state_file.display()))
        .map_err(Failure::io)?;
    let rho = DensityMatrix::from_json(&text)
        .map_err(|e| Failure::invalid_input(anyhow!("{}: {e}", args.state_file.display())))?;
    let dim = rho.dim();
    let mut output = AnalyzeOutput {
        dim,
        l1_coherence: l1_coherence(&rho),
        purity: rho.purity(),
        measures: None,
        theorem1_chain: None,
        norm_bound: None,
        pairs: None,
    };
    match dim {
        4 => {
            output.measures = Some(measure_report(&rho)?);
            output.theorem1_chain = Some(theorem1_chain(&rho)?);
            let norm = induced_one_norm(rho.matrix());
            output.norm_bound = Some(NormBound {
                induced_one_norm: norm,
                eq1_convention_margin: output.l1_coherence - norm,
                appendix_factor2_margin: 2.0 * output.l1_coherence - norm,
            });
        }
        8 => {
            output.pairs = Some(PairReports {
                ab: measure_report(&reduce_qubits(&rho, &[0, 1])?)?,
                ac: measure_report(&reduce_qubits(&rho, &[0, 2])?)?,
                bc: measure_report(&reduce_qubits(&rho, &[1, 2])?)?,
            });
        }
        _ => {}
    }
    let header = RunHeader::deterministic(
        "analyze",
        &format!("state-file({})", args.state_file.display()),
        1,
    );
    emit(args.out.as_deref(), &json_document(&header, &output))?;
    Ok(0)
}
