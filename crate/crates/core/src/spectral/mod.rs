//! Spectra of intersection arrays.
//!
//! The distinct eigenvalues of a distance-regular graph are those of the
//! tridiagonal matrix `L` with rows `(c_i, a_i, b_i)`. Eigenvalues come from
//! Sturm-sequence bisection, so they are ordered and deterministic; the
//! multiplicity of each follows from its standard sequence.

mod tridiag;

use alloc::vec::Vec;

pub use tridiag::TridiagonalMatrix;

use crate::arrays::{DeriveError, DerivedParameters, IntersectionArray};

#[derive(Clone, Copy, Debug, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error(transparent)]
    Derive(#[from] DeriveError),
    #[error("tridiagonal matrix must be square with positive off-diagonal products")]
    InvalidMatrix,
    #[error("bisection for eigenvalue {index} stalled before reaching the tolerance")]
    NonConvergence { index: usize },
    #[error("eigenvalues {index} and its predecessor coincide within rounding")]
    CoincidentEigenvalues { index: usize },
    #[error("multiplicity of eigenvalue {index} is {value}, not an integer")]
    NonIntegralMultiplicity { index: usize, value: f64 },
    #[error("multiplicity of eigenvalue {index} is not positive")]
    NonPositiveMultiplicity { index: usize },
    #[error("multiplicities sum to {sum}, expected v = {v}")]
    MultiplicitySumMismatch { sum: u64, v: u64 },
    #[error("requires D >= 2t + 2, got D = {d}, t = {t}")]
    PreconditionViolated { d: usize, t: usize },
}

/// Numerical tolerances. All are overridable.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Relative eigenvalue accuracy, scaled by `max(1, |theta|)`.
    pub eigenvalue: f64,
    /// Absolute distance of a multiplicity from the nearest integer.
    pub multiplicity: f64,
    /// Equality verdicts use `equality * k`.
    pub equality: f64,
    /// Distance within which an eigenvalue is annotated as an integer.
    pub integer: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eigenvalue: 1e-12,
            multiplicity: 1e-6,
            equality: 1e-9,
            integer: 1e-8,
        }
    }
}

/// `Some(n)` when `x` lies within `tol` of the integer `n`. Reporting only.
pub fn integer_value(x: f64, tol: f64) -> Option<i64> {
    let r = libm::round(x);
    ((x - r).abs() <= tol).then_some(r as i64)
}

/// The standard sequence `u_0, ..., u_D` of `theta`.
#[derive(Clone, Debug, PartialEq)]
pub struct StandardSequence {
    pub theta: f64,
    pub u: Vec<f64>,
}

impl StandardSequence {
    /// `c_D u_{D-1} + a_D u_D - theta u_D`; zero exactly when `theta` is an
    /// eigenvalue.
    pub fn terminal_residual(&self, arr: &IntersectionArray) -> f64 {
        let d = arr.diameter();
        arr.c(d) as f64 * self.u[d - 1] + arr.a(d) as f64 * self.u[d] - self.theta * self.u[d]
    }

    /// `u_{t+1} = 0 > u_{t+2} > ... > u_D`, with `|u_{t+1}| <= tol`.
    pub fn zero_then_decreasing(&self, t: usize, tol: f64) -> bool {
        let d = self.u.len() - 1;
        if t + 1 > d || self.u[t + 1].abs() > tol {
            return false;
        }
        let mut prev = 0.0;
        for &x in &self.u[t + 2..] {
            if !(x < prev - tol) {
                return false;
            }
            prev = x;
        }
        true
    }
}

pub fn standard_sequence(arr: &IntersectionArray, theta: f64) -> StandardSequence {
    let d = arr.diameter();
    let mut u = Vec::with_capacity(d + 1);
    u.push(1.0);
    u.push(theta / arr.valency() as f64);
    for i in 1..d {
        let next = ((theta - arr.a(i) as f64) * u[i] - arr.c(i) as f64 * u[i - 1]) / arr.b(i) as f64;
        u.push(next);
    }
    StandardSequence { theta, u }
}

fn biggs(params: &DerivedParameters, seq: &StandardSequence) -> f64 {
    let norm: f64 = params
        .k_seq
        .iter()
        .zip(&seq.u)
        .map(|(&k, &u)| k as f64 * u * u)
        .sum();
    params.v as f64 / norm
}

/// `v / sum_i k_i u_i(theta)^2`, unrounded.
pub fn biggs_multiplicity(arr: &IntersectionArray, theta: f64) -> Result<f64, SpectralError> {
    let params = arr.derive()?;
    Ok(biggs(&params, &standard_sequence(arr, theta)))
}

/// Eigenvalues, multiplicities and the truncation maxima `mu_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    /// `theta_0 > theta_1 > ... > theta_D`.
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<u64>,
    /// Unrounded Biggs values.
    pub raw_multiplicities: Vec<f64>,
    /// `mu_i`, the largest eigenvalue of the `(i+1) x (i+1)` truncation.
    pub mu: Vec<f64>,
    pub sequences: Vec<StandardSequence>,
}

impl Spectrum {
    pub fn diameter(&self) -> usize {
        self.eigenvalues.len() - 1
    }

    pub fn theta1(&self) -> Option<f64> {
        self.eigenvalues.get(1).copied()
    }

    pub fn theta_min(&self) -> f64 {
        *self.eigenvalues.last().expect("spectrum is never empty")
    }

    /// `sum_i m_i theta_i`, zero for the trace of the adjacency matrix.
    pub fn trace(&self) -> f64 {
        self.eigenvalues
            .iter()
            .zip(&self.multiplicities)
            .map(|(&t, &m)| t * m as f64)
            .sum()
    }

    /// Indices `1 <= i <= D-1` where `mu_i > a_i + c_i` fails.
    pub fn mu_violations(&self, arr: &IntersectionArray) -> Vec<usize> {
        (1..arr.diameter())
            .filter(|&i| !(self.mu[i] > (arr.a(i) + arr.c(i) as i64) as f64))
            .collect()
    }
}

/// Full spectrum with multiplicity feasibility checks.
pub fn spectrum(arr: &IntersectionArray, tol: &Tolerances) -> Result<Spectrum, SpectralError> {
    let params = arr.derive()?;
    spectrum_with(arr, &params, tol)
}

pub fn spectrum_with(
    arr: &IntersectionArray,
    params: &DerivedParameters,
    tol: &Tolerances,
) -> Result<Spectrum, SpectralError> {
    let l = TridiagonalMatrix::from_array(arr);
    let n = l.order();
    let bounds = l.gershgorin();
    let mut eigenvalues: Vec<f64> = Vec::with_capacity(n);
    let mut sequences = Vec::with_capacity(n);
    let mut raw_multiplicities = Vec::with_capacity(n);
    let mut multiplicities = Vec::with_capacity(n);
    // Interleaved so that most infeasible arrays stop after theta_1.
    for index in 0..n {
        let theta = l.nth_largest(index, tol.eigenvalue, bounds)?;
        if index > 0 && theta >= eigenvalues[index - 1] {
            return Err(SpectralError::CoincidentEigenvalues { index });
        }
        let seq = standard_sequence(arr, theta);
        let m = biggs(params, &seq);
        let r = libm::round(m);
        if !(r >= 1.0) {
            return Err(SpectralError::NonPositiveMultiplicity { index });
        }
        if (m - r).abs() > tol.multiplicity {
            return Err(SpectralError::NonIntegralMultiplicity { index, value: m });
        }
        eigenvalues.push(theta);
        sequences.push(seq);
        raw_multiplicities.push(m);
        multiplicities.push(r as u64);
    }
    let sum = multiplicities.iter().sum::<u64>();
    if sum != params.v {
        return Err(SpectralError::MultiplicitySumMismatch { sum, v: params.v });
    }
    let mut mu = Vec::with_capacity(l.order());
    mu.push(0.0);
    for i in 1..l.order() {
        let sub = l.truncation(i).expect("index within order");
        mu.push(sub.largest_eigenvalue(tol.eigenvalue)?);
    }
    Ok(Spectrum {
        eigenvalues,
        multiplicities,
        raw_multiplicities,
        mu,
        sequences,
    })
}

/// Outcome of comparing `theta_1` with `mu_t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Theta1Verdict {
    /// `theta_1 = mu_t` within tolerance; records whether the array has the
    /// antipodal shape that equality forces.
    Equality { signature_holds: bool },
    Strict,
    /// `theta_1 < mu_t`: impossible for a graph.
    Below,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Theta1Check {
    pub t: usize,
    pub theta1: f64,
    pub mu_t: f64,
    pub verdict: Theta1Verdict,
}

/// `D = 2t + 2`, `c_D = k`, `b_{D-1} = 1` and `a_1 = a_{D-1}`.
pub fn antipodal_signature(arr: &IntersectionArray, t: usize) -> bool {
    let d = arr.diameter();
    d == 2 * t + 2
        && arr.c(d) == arr.valency()
        && arr.b(d - 1) == 1
        && arr.a(1) == arr.a(d - 1)
}

/// Compares `theta_1` of `L` with the largest eigenvalue of `L(t)`.
pub fn theta1_lower_bound_check(
    arr: &IntersectionArray,
    t: usize,
    tol: &Tolerances,
) -> Result<Theta1Check, SpectralError> {
    let d = arr.diameter();
    if d < 2 * t + 2 {
        return Err(SpectralError::PreconditionViolated { d, t });
    }
    let l = TridiagonalMatrix::from_array(arr);
    let theta1 = l.eigenvalues(tol.eigenvalue)?[1];
    let mu_t = l
        .truncation(t)
        .expect("t < D")
        .largest_eigenvalue(tol.eigenvalue)?;
    let gap = theta1 - mu_t;
    let eq = tol.equality * arr.valency() as f64;
    let verdict = if gap.abs() <= eq {
        Theta1Verdict::Equality {
            signature_holds: antipodal_signature(arr, t),
        }
    } else if gap > 0.0 {
        Theta1Verdict::Strict
    } else {
        Theta1Verdict::Below
    };
    Ok(Theta1Check {
        t,
        theta1,
        mu_t,
        verdict,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interlacing {
    pub holds: bool,
    /// First index `i` (descending order) where the nesting fails.
    pub first_violation: Option<usize>,
}

/// Checks `theta_{n-m+i}(A) <= theta_i(B) <= theta_i(A)` for a principal
/// `m x m` block `B` of the `n x n` matrix `A`.
pub fn interlacing_check(
    big: &TridiagonalMatrix,
    small: &TridiagonalMatrix,
    tol: &Tolerances,
) -> Result<Interlacing, SpectralError> {
    let a = big.eigenvalues(tol.eigenvalue)?;
    let b = small.eigenvalues(tol.eigenvalue)?;
    let (n, m) = (a.len(), b.len());
    if m > n {
        return Err(SpectralError::InvalidMatrix);
    }
    let slack = |x: f64| 4.0 * tol.eigenvalue * x.abs().max(1.0);
    let first_violation = (0..m).find(|&i| {
        let lower = a[n - m + i];
        let upper = a[i];
        b[i] < lower - slack(lower) || b[i] > upper + slack(upper)
    });
    Ok(Interlacing {
        holds: first_violation.is_none(),
        first_violation,
    })
}
