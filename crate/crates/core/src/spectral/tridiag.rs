use alloc::vec::Vec;

use super::SpectralError;
use crate::arrays::IntersectionArray;

/// A real tridiagonal matrix with positive off-diagonal products.
///
/// Row `i` reads `lower[i-1], diag[i], upper[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagonalMatrix {
    diag: Vec<f64>,
    upper: Vec<f64>,
    lower: Vec<f64>,
}

impl TridiagonalMatrix {
    pub fn new(diag: Vec<f64>, upper: Vec<f64>, lower: Vec<f64>) -> Result<Self, SpectralError> {
        let n = diag.len();
        if n == 0 || upper.len() + 1 != n || lower.len() + 1 != n {
            return Err(SpectralError::InvalidMatrix);
        }
        if upper.iter().zip(&lower).any(|(u, l)| !(u * l > 0.0)) {
            return Err(SpectralError::InvalidMatrix);
        }
        Ok(TridiagonalMatrix { diag, upper, lower })
    }

    /// The `(D+1) x (D+1)` matrix with rows `(c_i, a_i, b_i)`.
    pub fn from_array(arr: &IntersectionArray) -> Self {
        let d = arr.diameter();
        TridiagonalMatrix {
            diag: (0..=d).map(|i| arr.a(i) as f64).collect(),
            upper: (0..d).map(|i| arr.b(i) as f64).collect(),
            lower: (1..=d).map(|i| arr.c(i) as f64).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    /// Upper-left `(i+1) x (i+1)` block.
    pub fn truncation(&self, i: usize) -> Option<Self> {
        if i >= self.order() {
            return None;
        }
        Some(TridiagonalMatrix {
            diag: self.diag[..=i].to_vec(),
            upper: self.upper[..i].to_vec(),
            lower: self.lower[..i].to_vec(),
        })
    }

    pub(crate) fn gershgorin(&self) -> (f64, f64) {
        let n = self.order();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let mut r = 0.0;
            if i + 1 < n {
                r += self.upper[i].abs();
            }
            if i > 0 {
                r += self.lower[i - 1].abs();
            }
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `x`, from the Sturm sequence of
    /// the symmetrised matrix (squared off-diagonals `upper[i] * lower[i]`).
    pub fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0f64;
        for i in 0..self.order() {
            let e2 = if i == 0 {
                0.0
            } else {
                self.upper[i - 1] * self.lower[i - 1]
            };
            q = (self.diag[i] - x) - if i == 0 { 0.0 } else { e2 / q };
            if q == 0.0 {
                q = -f64::EPSILON * (1.0 + x.abs());
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// All eigenvalues in descending order, each to within
    /// `rel_tol * max(1, |theta|)`.
    pub fn eigenvalues(&self, rel_tol: f64) -> Result<Vec<f64>, SpectralError> {
        let n = self.order();
        if n == 1 {
            return Ok(self.diag.clone());
        }
        let bounds = self.gershgorin();
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let theta = self.nth_largest(j, rel_tol, bounds)?;
            if j > 0 && theta >= out[j - 1] {
                return Err(SpectralError::CoincidentEigenvalues { index: j });
            }
            out.push(theta);
        }
        Ok(out)
    }

    /// The `j`-th largest eigenvalue (from 0) by bisection inside `bounds`.
    pub(crate) fn nth_largest(
        &self,
        j: usize,
        rel_tol: f64,
        (lo0, hi0): (f64, f64),
    ) -> Result<f64, SpectralError> {
        const MAX_STEPS: usize = 256;
        let n = self.order();
        if n == 1 {
            return Ok(self.diag[0]);
        }
        // j-th largest is the (n-1-j)-th smallest.
        let target = n - j;
        let (mut lo, mut hi) = (lo0 - 1.0, hi0 + 1.0);
        for _ in 0..MAX_STEPS {
            let width = hi - lo;
            let scale = lo.abs().max(hi.abs()).max(1.0);
            if width <= rel_tol * scale {
                return Ok(lo + (hi - lo) / 2.0);
            }
            let mid = lo + width / 2.0;
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) >= target {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Err(SpectralError::NonConvergence { index: j })
    }

    pub fn largest_eigenvalue(&self, rel_tol: f64) -> Result<f64, SpectralError> {
        Ok(self.eigenvalues(rel_tol)?[0])
    }
}
