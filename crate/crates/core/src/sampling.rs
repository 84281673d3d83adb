//! Seeded random states.
//!
//! Every sampler is indexed: element `k` of a stream is drawn from its own
//! ChaCha20 stream (`seed`, stream id `k`), so sharded and sequential runs
//! emit identical states regardless of scheduling.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::{Exp1, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::states::{pure_to_density, CanonicalThreeQubit, DensityMatrix, PureState};

/// Name of the generator recorded in run headers.
pub const GENERATOR_NAME: &str = "chacha20(rand_chacha 0.9; seed_from_u64(seed), stream=index)";

/// Generator for sample `index` under `seed`.
pub fn indexed_rng(seed: u64, index: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn complex_gaussian(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnsembleKind {
    /// Normalized vectors of i.i.d. complex Gaussians (unitarily invariant).
    HaarPure,
    /// `G G^dagger / Tr(G G^dagger)` with `G` a `dim x rank` complex Ginibre matrix.
    Ginibre,
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnsembleKind::HaarPure => "haar-pure",
            EnsembleKind::Ginibre => "ginibre",
        })
    }
}

impl FromStr for EnsembleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "haar-pure" | "pure" => Ok(EnsembleKind::HaarPure),
            "ginibre" => Ok(EnsembleKind::Ginibre),
            other => Err(Error::InvalidParameter {
                field: "ensemble",
                reason: format!("unknown ensemble {other:?}"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    /// Ginibre column count; ignored for pure states.
    pub rank: usize,
    pub seed: u64,
    pub count: u64,
}

impl EnsembleSpec {
    pub fn haar_pure(seed: u64, count: u64) -> Self {
        Self {
            kind: EnsembleKind::HaarPure,
            rank: 1,
            seed,
            count,
        }
    }

    pub fn ginibre(rank: usize, seed: u64, count: u64) -> Self {
        Self {
            kind: EnsembleKind::Ginibre,
            rank,
            seed,
            count,
        }
    }

    pub fn validate(&self, dim: usize) -> Result<()> {
        if self.count == 0 {
            return Err(Error::InvalidParameter {
                field: "count",
                reason: "must be at least 1".into(),
            });
        }
        if self.kind == EnsembleKind::Ginibre && (self.rank == 0 || self.rank > dim) {
            return Err(Error::RankOutOfRange {
                rank: self.rank,
                dim,
            });
        }
        Ok(())
    }

    /// Human-readable descriptor used in run headers.
    pub fn descriptor(&self) -> String {
        match self.kind {
            EnsembleKind::HaarPure => "haar-pure".to_string(),
            EnsembleKind::Ginibre => format!("ginibre(rank={})", self.rank),
        }
    }

    /// State `index` of this ensemble as a density matrix.
    pub fn density_at(&self, dim: usize, index: u64) -> Result<DensityMatrix> {
        match self.kind {
            EnsembleKind::HaarPure => Ok(pure_to_density(&sample_pure_at(self.seed, dim, index)?)),
            EnsembleKind::Ginibre => sample_density_at(self.seed, dim, self.rank, index),
        }
    }
}

/// Haar-random pure state number `index`.
pub fn sample_pure_at(seed: u64, dim: usize, index: u64) -> Result<PureState> {
    let mut rng = indexed_rng(seed, index);
    let amps = (0..dim).map(|_| complex_gaussian(&mut rng)).collect();
    PureState::normalized(amps)
}

pub fn sample_pure(spec: &EnsembleSpec, dim: usize) -> Result<impl Iterator<Item = PureState>> {
    if spec.kind != EnsembleKind::HaarPure {
        return Err(Error::InvalidParameter {
            field: "kind",
            reason: "sample_pure needs the haar-pure ensemble".into(),
        });
    }
    spec.validate(dim)?;
    sample_pure_at(spec.seed, dim, 0)?;
    let seed = spec.seed;
    Ok((0..spec.count).map(move |k| sample_pure_at(seed, dim, k).expect("dimension checked")))
}

/// Hilbert-Schmidt-type mixed state number `index` (rank-limited Ginibre).
pub fn sample_density_at(seed: u64, dim: usize, rank: usize, index: u64) -> Result<DensityMatrix> {
    if rank == 0 || rank > dim {
        return Err(Error::RankOutOfRange { rank, dim });
    }
    let mut rng = indexed_rng(seed, index);
    let g = ComplexMatrix::from_fn(dim, rank, |_, _| complex_gaussian(&mut rng));
    let ggt = g.matmul(&g.adjoint())?.hermitian_part();
    let tr = ggt.trace().re;
    DensityMatrix::new(ggt.scale_real(1.0 / tr))
}

pub fn sample_density(
    spec: &EnsembleSpec,
    dim: usize,
) -> Result<impl Iterator<Item = DensityMatrix>> {
    if spec.kind != EnsembleKind::Ginibre {
        return Err(Error::InvalidParameter {
            field: "kind",
            reason: "sample_density needs the ginibre ensemble".into(),
        });
    }
    spec.validate(dim)?;
    let EnsembleSpec {
        seed, rank, count, ..
    } = *spec;
    Ok((0..count)
        .map(move |k| sample_density_at(seed, dim, rank, k).expect("rank and dimension checked")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThetaMode {
    Zero,
    Uniform,
}

/// Canonical parameters number `index`: squared amplitudes flat-Dirichlet on
/// the 4-simplex, theta zero or uniform on `[0, pi]`.
pub fn sample_canonical_at(seed: u64, index: u64, mode: ThetaMode) -> CanonicalThreeQubit {
    let mut rng = indexed_rng(seed, index);
    let weights: [f64; 5] = std::array::from_fn(|_| rng.sample::<f64, _>(Exp1));
    let total: f64 = weights.iter().sum();
    let lambdas = weights.map(|w| (w / total).sqrt());
    let theta = match mode {
        ThetaMode::Zero => 0.0,
        ThetaMode::Uniform => rng.random_range(0.0..=std::f64::consts::PI),
    };
    CanonicalThreeQubit::new(lambdas, theta).expect("Dirichlet draw is normalized")
}

pub fn sample_canonical(
    seed: u64,
    count: u64,
    mode: ThetaMode,
) -> impl Iterator<Item = CanonicalThreeQubit> {
    (0..count).map(move |k| sample_canonical_at(seed, k, mode))
}

/// Canonical parameters number `index` restricted to the W family
/// (`lambda4 = 0`, `theta = 0`), flat-Dirichlet on the remaining four.
pub fn sample_w_class_at(seed: u64, index: u64) -> CanonicalThreeQubit {
    let mut rng = indexed_rng(seed, index);
    let weights: [f64; 4] = std::array::from_fn(|_| rng.sample::<f64, _>(Exp1));
    let total: f64 = weights.iter().sum();
    let l = weights.map(|w| (w / total).sqrt());
    CanonicalThreeQubit::real([l[0], l[1], l[2], l[3], 0.0]).expect("Dirichlet draw is normalized")
}

/// Evaluates `f` on indices `0..count`, optionally fanned out over `workers`
/// threads. Output order is index order in every case.
pub fn map_indexed<T, F>(count: u64, workers: Option<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match workers {
        Some(1) => (0..count).map(f).collect(),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("thread pool");
            pool.install(|| (0..count).into_par_iter().map(&f).collect())
        }
        None => (0..count).into_par_iter().map(&f).collect(),
    }
}
