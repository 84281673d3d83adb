use std::fmt::Write;

use anyhow::anyhow;

use crate::args::SweepArgs;
use crate::failure::{CmdResult, Failure};
use crate::output::{emit, fmt_num, fmt_opt, RunHeader};
use cohere_core::classifier::{printed_product_expansion, result1_check, result2_check};
use cohere_core::{discriminate, CanonicalThreeQubit};

const COLUMNS: &str = "lambda0,lambda1,lambda2,lambda3,lambda4,\
c_ab,c_ac,coh_ab,coh_ac,coh_a,tangle,\
coherence_difference,factor_l3_minus_l2,factor_l0_plus_l1_minus_l4,case_label,\
monogamy_margin,product_minus_square,printed_expansion,\
result1_applicable,result1_margin,result2_applicable,result2_margin,\
exp_o,exp_o1,exp_o2,witness_holds";

/// All `k` in `N^5` with `sum k = r`, in lexicographic order.
pub fn compositions(r: u64) -> Vec<[u64; 5]> {
    let mut out = Vec::new();
    for a in 0..=r {
        for b in 0..=r - a {
            for c in 0..=r - a - b {
                for d in 0..=r - a - b - c {
                    out.push([a, b, c, d, r - a - b - c - d]);
                }
            }
        }
    }
    out
}

pub fn run(args: &SweepArgs) -> CmdResult {
    let r = args.resolution;
    let points: Vec<[u64; 5]> = compositions(r)
        .into_iter()
        .filter(|k| args.zeros.iter().all(|&i| k[i as usize] == 0))
        .filter(|k| args.ties.iter().all(|&(i, j)| k[i] == k[j]))
        .collect();
    if points.is_empty() {
        return Err(Failure::invalid_input(anyhow!(
            "no grid point at resolution {r} satisfies the constraints"
        )));
    }

    let descriptor = format!(
        "grid(resolution={r}, zero={:?}, tie={:?})",
        args.zeros, args.ties
    );
    let header = RunHeader::deterministic("sweep", &descriptor, points.len() as u64);
    let mut csv = header.comment_lines();
    csv.push_str(COLUMNS);
    csv.push('\n');
    for k in &points {
        let lambdas = k.map(|ki| (ki as f64 / r as f64).sqrt());
        let p = CanonicalThreeQubit::real(lambdas)?;
        let report = discriminate(&p)?;
        let m = report.measures;
        let r1 = result1_check(&p).ok();
        let r2 = result2_check(&p).ok();
        let obs = report.observables;
        let mut fields: Vec<String> = lambdas.iter().map(|&l| fmt_num(l)).collect();
        fields.extend(
            [m.c_ab, m.c_ac, m.coh_ab, m.coh_ac, m.coh_a, m.tangle]
                .into_iter()
                .chain([
                    report.coherence_difference,
                    report.factored_difference.0,
                    report.factored_difference.1,
                ])
                .map(fmt_num),
        );
        fields.push(report.case_label.to_string());
        fields.push(fmt_num(report.monogamy_margin));
        fields.push(fmt_num(m.coh_ab * m.coh_ac - m.coh_a * m.coh_a));
        fields.push(fmt_num(printed_product_expansion(&p)));
        fields.push(r1.is_some().to_string());
        fields.push(fmt_opt(r1.map(|r| r.rhs - r.lhs)));
        fields.push(r2.is_some().to_string());
        fields.push(fmt_opt(r2.map(|r| r.coh_ac - r.coh_a)));
        fields.extend([obs.exp_o, obs.exp_o1, obs.exp_o2].map(fmt_num));
        fields.push(obs.witness_holds.to_string());
        let _ = writeln!(csv, "{}", fields.join(","));
    }
    emit(args.out.as_deref(), &csv)?;
    Ok(0)
}
