use anyhow::anyhow;
use serde::Serialize;

use super::{describe_state, parse_state};
use crate::args::ClassifyArgs;
use crate::failure::{CmdResult, Failure};
use crate::output::{emit, json_document, RunHeader};
use cohere_core::classifier::{
    result1_check, result2_check, Result1Record, Result2Record, WitnessRecord,
};
use cohere_core::{discriminate, parameter_witness, ClassificationReport};

#[derive(Serialize)]
struct ClassifyOutput {
    #[serde(flatten)]
    report: ClassificationReport,
    /// Present when lambda0 > 0, lambda4 > 0 and lambda0 + lambda1 < lambda4.
    result1: Option<Result1Record>,
    result2: Option<Result2Record>,
    /// Present when lambda0 > 0.
    witness: Option<WitnessRecord>,
}

pub fn run(args: &ClassifyArgs) -> CmdResult {
    let p = parse_state(&args.state)?.params;
    if !p.is_real_family() {
        return Err(Failure::invalid_input(anyhow!(
            "classification needs theta = 0, got {}",
            p.theta()
        )));
    }
    let output = ClassifyOutput {
        report: discriminate(&p)?,
        result1: result1_check(&p).ok(),
        result2: result2_check(&p).ok(),
        witness: parameter_witness(&p).ok(),
    };
    let header = RunHeader::deterministic("classify", &describe_state(&p), 1);
    emit(args.out.as_deref(), &json_document(&header, &output))?;
    Ok(0)
}
