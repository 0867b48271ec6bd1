//! Characteristic-number arithmetic for degrees in Heegaard Floer homology.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// `θ = c_1^2 - 2χ - 3σ`.
pub fn gompf_theta(c1_squared: i64, euler: i64, signature: i64) -> i64 {
    c1_squared - 2 * euler - 3 * signature
}

/// Degree of the contact invariant: `-θ/4 - 1/2`.
pub fn contact_degree(theta: i64) -> Ratio<i64> {
    Ratio::new(-theta, 4) - Ratio::new(1, 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingData {
    pub c1_squared: i64,
    pub euler: i64,
    pub signature: i64,
    pub theta: i64,
    pub degree: Ratio<i64>,
}

impl GradingData {
    pub fn new(c1_squared: i64, euler: i64, signature: i64) -> Self {
        let theta = gompf_theta(c1_squared, euler, signature);
        GradingData { c1_squared, euler, signature, theta, degree: contact_degree(theta) }
    }

    /// The Stein filling of `(Y_∞, ξ_0)`: `c_1 = 0`, `χ = 2`, `σ = 0`.
    pub fn xi_zero() -> Self {
        Self::new(0, 2, 0)
    }

    /// `X_n = V_∞ ∪ V_n` for the structures `η_{i,j}^n`: `χ = 3`, `σ = 0`
    /// and `c_1^2 = 0` from the pairing `S·T = 1`, `T^2 = 0`.
    pub fn eta() -> Self {
        Self::new(0, 3, 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeShift {
    pub k: i64,
    /// `<c_1(s_k), [Σ̂]> = 2k + 1`.
    pub c1_pairing: i64,
    pub c1_squared: i64,
    pub euler: i64,
    pub signature: i64,
    pub shift: i64,
}

/// Shift of the map induced by the surgery cobordism in the structure `s_k`:
/// `(c_1^2 - 2χ - 3σ)/4` with `c_1^2 = -(2k+1)^2`, `χ = 1`, `σ = -1`.
pub fn degree_shift(k: i64) -> Result<DegreeShift> {
    let c1_pairing = 2 * k + 1;
    let c1_squared = -c1_pairing * c1_pairing;
    let numer = gompf_theta(c1_squared, 1, -1);
    if numer % 4 != 0 {
        return Err(Error::Inconsistent(format!("shift {numer}/4 is not an integer")));
    }
    let shift = numer / 4;
    if shift != -k * (k + 1) || shift > 0 {
        return Err(Error::Inconsistent(format!("shift {shift} for k = {k} is not -k(k+1)")));
    }
    Ok(DegreeShift { k, c1_pairing, c1_squared, euler: 1, signature: -1, shift })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HfTarget {
    Infinity,
    Finite(i64),
}

/// `(degree, rank)` summands of the relevant Floer group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HfRankData {
    pub target: HfTarget,
    pub summands: Vec<(Ratio<i64>, usize)>,
}

impl HfRankData {
    pub fn rank_in_degree(&self, degree: Ratio<i64>) -> usize {
        self.summands.iter().filter(|(d, _)| *d == degree).map(|(_, r)| r).sum()
    }
}

/// `-Y_∞`: one summand in each of the degrees `1/2`, `3/2`; `-Y_n`: rank
/// `n - 1` in degree `1`, matching the coordinate dimension of the invariants.
pub fn hf_rank_data(target: HfTarget) -> Result<HfRankData> {
    let summands = match target {
        HfTarget::Infinity => vec![(Ratio::new(1, 2), 1), (Ratio::new(3, 2), 1)],
        HfTarget::Finite(n) => {
            if n < 2 {
                return Err(invalid(format!("n = {n} must be at least 2")));
            }
            let dim = super::coordinate_rank(n)?;
            if dim != (n - 1) as usize {
                return Err(Error::Inconsistent(format!("coordinate rank {dim} != {}", n - 1)));
            }
            vec![(Ratio::from_integer(1), dim)]
        }
    };
    Ok(HfRankData { target, summands })
}
