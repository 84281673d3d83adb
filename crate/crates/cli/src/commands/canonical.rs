use std::fmt::Write;

use serde::Serialize;

use super::{describe_state, parse_state};
use crate::args::{CanonicalArgs, Format};
use crate::failure::CmdResult;
use crate::output::{emit, fmt_num, fmt_opt, json_document, RunHeader};
use cohere_core::measures::ckw_residual;
use cohere_core::states::reduce_qubits;
use cohere_core::{
    bipartition_concurrence, canonical_measures_analytic, canonical_measures_numeric,
    canonical_state, measure_report, pure_to_density, tangle_analytic, CanonicalMeasures,
    CanonicalThreeQubit, MeasureReport,
};

/// Closed-form values; all but the tangle exist only for `theta = 0`.
#[derive(Debug, Clone, Copy, Serialize)]
struct AnalyticMeasures {
    c_ab: Option<f64>,
    c_ac: Option<f64>,
    coh_ab: Option<f64>,
    coh_ac: Option<f64>,
    coh_a: Option<f64>,
    tangle: f64,
}

impl AnalyticMeasures {
    fn of(p: &CanonicalThreeQubit) -> Self {
        match canonical_measures_analytic(p) {
            Ok(m) => Self {
                c_ab: Some(m.c_ab),
                c_ac: Some(m.c_ac),
                coh_ab: Some(m.coh_ab),
                coh_ac: Some(m.coh_ac),
                coh_a: Some(m.coh_a),
                tangle: m.tangle,
            },
            Err(_) => Self {
                c_ab: None,
                c_ac: None,
                coh_ab: None,
                coh_ac: None,
                coh_a: None,
                tangle: tangle_analytic(p),
            },
        }
    }

    fn rows(&self, m: &CanonicalMeasures) -> [(&'static str, Option<f64>, f64); 6] {
        [
            ("c_ab", self.c_ab, m.c_ab),
            ("c_ac", self.c_ac, m.c_ac),
            ("coh_ab", self.coh_ab, m.coh_ab),
            ("coh_ac", self.coh_ac, m.coh_ac),
            ("coh_a", self.coh_a, m.coh_a),
            ("tangle", Some(self.tangle), m.tangle),
        ]
    }
}

#[derive(Debug, Serialize)]
struct Residuals {
    c_ab: Option<f64>,
    c_ac: Option<f64>,
    coh_ab: Option<f64>,
    coh_ac: Option<f64>,
    coh_a: Option<f64>,
    tangle: f64,
    max: f64,
}

#[derive(Debug, Serialize)]
struct Reduced {
    ab: MeasureReport,
    ac: MeasureReport,
    bc: MeasureReport,
}

#[derive(Debug, Serialize)]
struct CanonicalOutput {
    params: CanonicalThreeQubit,
    normalization_deviation: f64,
    analytic: AnalyticMeasures,
    matrix: CanonicalMeasures,
    residuals: Residuals,
    bipartition_concurrence: f64,
    ckw_residual: f64,
    reduced: Reduced,
}

pub fn run(args: &CanonicalArgs) -> CmdResult {
    let parsed = parse_state(&args.state)?;
    let p = parsed.params;
    let analytic = AnalyticMeasures::of(&p);
    let matrix = canonical_measures_numeric(&p)?;
    let psi = canonical_state(&p);
    let rho = pure_to_density(&psi);

    let rows = analytic.rows(&matrix);
    let diff = |i: usize| rows[i].1.map(|a| (a - rows[i].2).abs());
    let residuals = Residuals {
        c_ab: diff(0),
        c_ac: diff(1),
        coh_ab: diff(2),
        coh_ac: diff(3),
        coh_a: diff(4),
        tangle: (analytic.tangle - matrix.tangle).abs(),
        max: (0..6).filter_map(diff).fold(0.0, f64::max),
    };
    let output = CanonicalOutput {
        params: p,
        normalization_deviation: parsed.normalization_deviation,
        analytic,
        matrix,
        residuals,
        bipartition_concurrence: bipartition_concurrence(&psi)?,
        ckw_residual: ckw_residual(&psi)?,
        reduced: Reduced {
            ab: measure_report(&reduce_qubits(&rho, &[0, 1])?)?,
            ac: measure_report(&reduce_qubits(&rho, &[0, 2])?)?,
            bc: measure_report(&reduce_qubits(&rho, &[1, 2])?)?,
        },
    };

    let header = RunHeader::deterministic("canonical", &describe_state(&p), 1);
    let text = match args.format {
        Format::Json => json_document(&header, &output),
        Format::Csv => {
            let mut csv = header.comment_lines();
            csv.push_str("quantity,analytic,matrix,residual\n");
            for (i, (name, a, m)) in rows.iter().enumerate() {
                let _ = writeln!(
                    csv,
                    "{name},{},{},{}",
                    fmt_opt(*a),
                    fmt_num(*m),
                    fmt_opt(diff(i))
                );
            }
            let extra = [
                ("bipartition_concurrence", output.bipartition_concurrence),
                ("ckw_residual", output.ckw_residual),
            ];
            for (name, v) in extra {
                let _ = writeln!(csv, "{name},,{},", fmt_num(v));
            }
            csv
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(0)
}
