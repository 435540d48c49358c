use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};

use super::{DiscreteMeasure, SpectralDistribution};
use crate::combinatorics::catalan;
use crate::error::{invalid, Error};
use crate::Result;
use num_traits::ToPrimitive;

/// Largest path handled by [`path_spectrum`].
pub const MAX_PATH_SPECTRUM: usize = 24;
const WELL_CONDITIONED_UP_TO: usize = 12;
const RESIDUAL_TOL: f64 = 1e-9;

/// Spectral law of the path `P_n` at an endpoint: atoms at the eigenvalues
/// `2 cos(k pi / (n+1))` with weights fitted to the walk counts.
#[derive(Clone, Debug)]
pub struct PathSpectrum {
    pub n: usize,
    /// Strictly decreasing in `k`.
    pub eigenvalues: Vec<f64>,
    pub weights: Vec<f64>,
    /// Max-norm residual of the Vandermonde solve.
    pub residual: f64,
    /// 1-norm condition number of the Vandermonde matrix.
    pub condition: f64,
}

/// Solves `sum_k a_k lambda_k^m = W_m(0; P_n)` for `m = 0..n-1`, using
/// `W_m(0; P_n) = W_m(0; Z+)` for `m <= 2n`.
pub fn path_spectrum(n: usize) -> Result<PathSpectrum> {
    if !(2..=MAX_PATH_SPECTRUM).contains(&n) {
        return Err(invalid(format!(
            "path spectrum needs 2 <= n <= {MAX_PATH_SPECTRUM}, got {n}"
        )));
    }
    if n > WELL_CONDITIONED_UP_TO {
        log::warn!("Vandermonde system for P{n} is ill-conditioned; weights may lose accuracy");
    }
    let eigenvalues: Vec<f64> = (1..=n)
        .map(|k| 2.0 * (k as f64 * PI / (n as f64 + 1.0)).cos())
        .collect();
    let vandermonde = DMatrix::from_fn(n, n, |m, k| eigenvalues[k].powi(m as i32));
    let rhs = DVector::from_fn(n, |m, _| {
        if m % 2 == 1 {
            0.0
        } else {
            catalan(m as u64 / 2).to_f64().unwrap()
        }
    });

    let lu = vandermonde.clone().lu();
    let weights = lu.solve(&rhs).ok_or_else(|| Error::NumericalFailure {
        message: format!("singular Vandermonde system for P{n}"),
        estimate: None,
    })?;
    let condition = lu
        .try_inverse()
        .map(|inv| one_norm(&vandermonde) * one_norm(&inv))
        .unwrap_or(f64::INFINITY);
    let residual = (&vandermonde * &weights - &rhs).amax();
    if residual.is_nan() || residual > RESIDUAL_TOL {
        return Err(Error::NumericalFailure {
            message: format!("Vandermonde residual {residual:e} for P{n} exceeds {RESIDUAL_TOL:e}"),
            estimate: Some(condition),
        });
    }
    Ok(PathSpectrum {
        n,
        eigenvalues,
        weights: weights.iter().copied().collect(),
        residual,
        condition,
    })
}

fn one_norm(m: &DMatrix<f64>) -> f64 {
    m.column_iter()
        .map(|c| c.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

impl PathSpectrum {
    /// `sum_k a_k lambda_k^m`.
    pub fn moment(&self, m: usize) -> f64 {
        self.eigenvalues
            .iter()
            .zip(&self.weights)
            .map(|(l, a)| a * l.powi(m as i32))
            .sum()
    }

    pub fn weight_sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// The atomic measure `pi_n`.
    pub fn to_distribution(&self) -> Result<SpectralDistribution> {
        let atoms = self
            .eigenvalues
            .iter()
            .copied()
            .zip(self.weights.iter().copied())
            .collect();
        Ok(SpectralDistribution::Discrete(DiscreteMeasure::new(atoms)?))
    }
}
