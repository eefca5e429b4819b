//! Spectral analysis of assembled operators, routed through hermitian
//! eigensolves wherever the structure tag allows it.
//!
//! * anti-hermitian `D`: hermitian solve of `iD` (eigenvalues of `D` are
//!   `-i` times real numbers);
//! * hermitian `D`: direct hermitian solve;
//! * sigma-hermitian cores with trivial conformal weight: singular values
//!   are `|eig(S·core)|` because the row twist `S` is unitary;
//! * everything else: dense SVD below the dimension guard, fixed-seed
//!   inverse iteration above it.

use super::operator::{twist_rows, OperatorMatrix, SpinStructure, StructureTag};
use super::OperatorError;
use crate::linalg::{eigvalsh, singular_values, smallest_singular_values};
use crate::scalar::Real;
use serde::{Deserialize, Serialize};

/// How much of the spectrum to compute.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpectrumRequest {
    Full,
    SmallestSingular(usize),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectrumResult<F: Real> {
    /// eigenvalues of the operator, sorted by (re, im); empty when only
    /// singular values were requested
    pub eigenvalues: Vec<(F, F)>,
    /// singular values, ascending
    pub singular_values: Vec<F>,
    pub sector: String,
    pub solver: &'static str,
    /// structure tag of the analyzed operator
    pub structure: &'static str,
    pub kernel_tolerance: F,
    pub kernel_dim: usize,
}

const INVERSE_ITERATION_SEED: u64 = 0x00d1_5eed;

impl<F: Real> SpectrumResult<F> {
    /// Real eigenvalues of `i·D` for anti-hermitian operators (ascending).
    pub fn i_d_eigenvalues(&self) -> Vec<F> {
        let mut out: Vec<F> = self.eigenvalues.iter().map(|(_, im)| -*im).collect();
        out.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        out
    }

    /// Real eigenvalues of a hermitian operator (ascending).
    pub fn real_eigenvalues(&self) -> Vec<F> {
        let mut out: Vec<F> = self.eigenvalues.iter().map(|(re, _)| *re).collect();
        out.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        out
    }
}

/// Computes the spectrum per the structure tag. The kernel dimension is the
/// count of singular values (or `|λ|`) below `1e-6` times the operator's
/// base frequency scale.
pub fn spectrum<F: Real>(
    op: &OperatorMatrix<F>,
    request: SpectrumRequest,
) -> Result<SpectrumResult<F>, OperatorError> {
    let kernel_tolerance = F::of(1e-6) * op.meta.frequency_scale().max(F::one());
    let sector = sector_string(&op.spin);
    let structure = op.structure.as_str();

    let finish = |eigenvalues: Vec<(F, F)>, singular: Vec<F>, solver: &'static str| {
        let kernel_dim = singular.iter().filter(|s| **s < kernel_tolerance).count();
        SpectrumResult {
            eigenvalues,
            singular_values: singular,
            sector: sector.clone(),
            solver,
            structure,
            kernel_tolerance,
            kernel_dim,
        }
    };

    match (op.structure, request) {
        (StructureTag::AntiHermitian, SpectrumRequest::Full) => {
            let i = F::i();
            let h = op.matrix().map(|x| x * i);
            let mu = eigvalsh(&h)?;
            let mut eigs: Vec<(F, F)> = mu.iter().map(|&m| (F::zero(), -m)).collect();
            sort_pairs(&mut eigs);
            let mut svs: Vec<F> = mu.iter().map(|m| m.abs()).collect();
            svs.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
            Ok(finish(eigs, svs, "hermitian_eig(iD)"))
        }
        (StructureTag::Hermitian, SpectrumRequest::Full) => {
            let mu = eigvalsh(op.matrix())?;
            let mut eigs: Vec<(F, F)> = mu.iter().map(|&m| (m, F::zero())).collect();
            sort_pairs(&mut eigs);
            let mut svs: Vec<F> = mu.iter().map(|m| m.abs()).collect();
            svs.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
            Ok(finish(eigs, svs, "hermitian_eig"))
        }
        (StructureTag::SigmaHermitian, SpectrumRequest::Full) if op.is_unweighted() => {
            let twisted = twist_rows(op.core(), op.twist().expect("sigma tag has twist"));
            let mu = eigvalsh(&twisted)?;
            let mut svs: Vec<F> = mu.iter().map(|m| m.abs()).collect();
            svs.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
            Ok(finish(Vec::new(), svs, "hermitian_eig(S·D)"))
        }
        (_, SpectrumRequest::Full) => {
            let svs = singular_values(op.matrix())?;
            Ok(finish(Vec::new(), svs, "svd"))
        }
        (_, SpectrumRequest::SmallestSingular(k)) => {
            let svs = smallest_singular_values(op.matrix(), k, INVERSE_ITERATION_SEED)?;
            Ok(finish(Vec::new(), svs, "inverse_iteration"))
        }
    }
}

fn sector_string(spin: &SpinStructure) -> String {
    spin.to_string()
}

fn sort_pairs<F: Real>(eigs: &mut [(F, F)]) {
    eigs.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .expect("finite")
            .then(a.1.partial_cmp(&b.1).expect("finite"))
    });
}
