//! Ensemble-level runs: the coherence-versus-concurrence scan and the
//! per-link audit of the proof chain.

use serde::Serialize;

use crate::error::Result;
use crate::measures::{concurrence, l1_coherence, theorem1_chain, CHAIN_LINKS, THEOREM_TOL};
use crate::sampling::{map_indexed, EnsembleKind, EnsembleSpec};
use crate::states::DensityMatrix;

/// One `(concurrence, l1-coherence)` point with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleRecord {
    pub index: u64,
    pub seed: u64,
    pub ensemble: EnsembleKind,
    pub concurrence: f64,
    pub l1_coherence: f64,
}

impl SampleRecord {
    /// `C_l1 - C`.
    pub fn margin(&self) -> f64 {
        self.l1_coherence - self.concurrence
    }

    /// `C_l1 + 1e-9 < C`.
    pub fn violates(&self) -> bool {
        self.l1_coherence + THEOREM_TOL < self.concurrence
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleSummary {
    pub count: u64,
    pub violations: u64,
    pub min_margin: f64,
    pub min_margin_index: u64,
}

impl SampleSummary {
    pub fn from_records(records: &[SampleRecord]) -> Self {
        let mut summary = Self {
            count: records.len() as u64,
            violations: 0,
            min_margin: f64::INFINITY,
            min_margin_index: 0,
        };
        for r in records {
            summary.violations += u64::from(r.violates());
            if r.margin() < summary.min_margin {
                summary.min_margin = r.margin();
                summary.min_margin_index = r.index;
            }
        }
        summary
    }
}

/// Evaluates concurrence and l1-coherence on every two-qubit state of the
/// ensemble, in index order.
pub fn fig1_scan(spec: &EnsembleSpec, workers: Option<usize>) -> Result<Vec<SampleRecord>> {
    spec.validate(4)?;
    map_indexed(spec.count, workers, |k| {
        let rho = spec.density_at(4, k)?;
        Ok(SampleRecord {
            index: k,
            seed: spec.seed,
            ensemble: spec.kind,
            concurrence: concurrence(&rho)?,
            l1_coherence: l1_coherence(&rho),
        })
    })
    .into_iter()
    .collect()
}

/// Violation count and worst sample for one link of the chain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinkTally {
    pub name: &'static str,
    pub violations: u64,
    /// Smallest `rhs - lhs` seen.
    pub worst_margin: f64,
    pub worst_index: u64,
    /// Path of the serialized worst violating state, if one was written.
    pub worst_state_file: Option<String>,
    #[serde(skip)]
    pub worst_state: Option<DensityMatrix>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainAudit {
    pub samples: u64,
    pub links: Vec<LinkTally>,
}

impl ChainAudit {
    pub fn link(&self, name: &str) -> Option<&LinkTally> {
        self.links.iter().find(|l| l.name == name)
    }

    /// Violations of the end-to-end claim `C <= C_l1`.
    pub fn end_to_end_violations(&self) -> u64 {
        self.links.last().map_or(0, |l| l.violations)
    }
}

/// Evaluates every link of the proof chain on every ensemble state.
pub fn theorem_chain_audit(spec: &EnsembleSpec, workers: Option<usize>) -> Result<ChainAudit> {
    spec.validate(4)?;
    let reports = map_indexed(spec.count, workers, |k| {
        let rho = spec.density_at(4, k)?;
        let report = theorem1_chain(&rho)?;
        let margins: Vec<(f64, bool)> = report.links.iter().map(|l| (l.margin, l.holds)).collect();
        Ok::<_, crate::Error>((margins, rho))
    });

    let mut links: Vec<LinkTally> = CHAIN_LINKS
        .iter()
        .map(|&name| LinkTally {
            name,
            violations: 0,
            worst_margin: f64::INFINITY,
            worst_index: 0,
            worst_state_file: None,
            worst_state: None,
        })
        .collect();
    for (k, entry) in reports.into_iter().enumerate() {
        let (margins, rho) = entry?;
        for (tally, (margin, holds)) in links.iter_mut().zip(margins) {
            if margin < tally.worst_margin {
                tally.worst_margin = margin;
                tally.worst_index = k as u64;
                if !holds {
                    tally.worst_state = Some(rho.clone());
                }
            }
            tally.violations += u64::from(!holds);
        }
    }
    Ok(ChainAudit {
        samples: spec.count,
        links,
    })
}
