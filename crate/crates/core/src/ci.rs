//! Smooth complete intersections `Y ⊂ P^N` and the cohomology of `O_Y(a)`.
//!
//! Only numerical data is kept: the ambient dimension and the sorted
//! multidegree. Smoothness of `Y` is assumed, never checked.

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A complete intersection of multidegree `(d_1, …, d_r)` in `P^N`,
/// stored with `2 ≤ d_1 ≤ … ≤ d_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompleteIntersection {
    ambient: i64,
    degrees: Vec<i64>,
}

impl CompleteIntersection {
    /// Builds the canonical (sorted) form. Requires every degree ≥ 2 and
    /// `N − r ≥ 2`; dimension 2 is accepted in surface mode.
    pub fn new(ambient: i64, degrees: &[i64]) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyMultidegree);
        }
        if let Some(&bad) = degrees.iter().find(|&&d| d < 2) {
            return Err(Error::DegreeTooSmall(bad));
        }
        let codim = degrees.len() as i64;
        if ambient - codim < 2 {
            return Err(Error::CodimTooLarge { ambient, codim });
        }
        let mut degrees = degrees.to_vec();
        degrees.sort_unstable();
        Ok(Self { ambient, degrees })
    }

    pub fn ambient_dim(&self) -> i64 {
        self.ambient
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn codim(&self) -> i64 {
        self.degrees.len() as i64
    }

    pub fn dim(&self) -> i64 {
        self.ambient - self.codim()
    }

    /// `δ = Σ d_i`.
    pub fn degree_sum(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// `d = Π d_i`, the degree of `Y`.
    pub fn degree(&self) -> BigUint {
        self.degrees
            .iter()
            .fold(BigUint::from(1u32), |acc, &d| acc * d as u64)
    }

    /// Dimension two: the formulas still apply but `Pic(Y) = Z` is no longer
    /// automatic.
    pub fn surface_mode(&self) -> bool {
        self.dim() == 2
    }

    /// `K_Y = O_Y(δ − N − 1)`.
    pub fn canonical_twist(&self) -> i64 {
        self.degree_sum() - self.ambient - 1
    }

    /// Coefficients of `Π (1 − t^{d_i})` up to degree `bound`, grouped by
    /// degree: entry `j` is `Σ_{|S| : Σ_S d = j} (−1)^{|S|}`.
    fn relation_coefficients(&self, bound: usize) -> Vec<i64> {
        let mut coeffs = vec![0i64; bound + 1];
        coeffs[0] = 1;
        for &d in &self.degrees {
            let d = d as usize;
            for j in (d..=bound).rev() {
                coeffs[j] -= coeffs[j - d];
            }
        }
        coeffs
    }

    /// `h^0(O_Y(a))`: the Hilbert function of the homogeneous coordinate
    /// ring, `Σ_S (−1)^{|S|} C(N + a − Σ_S d, N)`. Zero for `a < 0`.
    pub fn h0(&self, a: i64) -> BigUint {
        if a < 0 {
            return BigUint::zero();
        }
        let n = self.ambient as u64;
        let coeffs = self.relation_coefficients(a as usize);
        let mut pos = BigUint::zero();
        let mut neg = BigUint::zero();
        for (j, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let top = n + a as u64 - j as u64;
            let term = binomial(BigUint::from(top), BigUint::from(n)) * c.unsigned_abs();
            if c > 0 {
                pos += term;
            } else {
                neg += term;
            }
        }
        pos - neg
    }
}

impl std::fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CI(P^{}; ", self.ambient)?;
        fmt_tuple(f, &self.degrees)?;
        write!(f, ")")
    }
}

pub(crate) fn fmt_tuple(f: &mut std::fmt::Formatter<'_>, xs: &[i64]) -> std::fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}
