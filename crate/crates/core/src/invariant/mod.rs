//! Contact invariants of `η_{i,j}^n` as Laurent polynomials, the cobordism
//! maps relating them, and grading arithmetic.
//!
//! Representatives are fixed by `F_{V_n}(c(η_{0,j}^n)) = t^{j/2}`. In the
//! basis `c(η_{0,j'}^n)`, `j' = -n+2, -n+4, …, n-2`, the invariant of
//! `η_{i,j}^n` has coordinate `(-1)^{i-k} C(i,k)` at `j' = j-i+2k`, so its
//! image is `(t^{1/2} - t^{-1/2})^i t^{j/2}`. The alternating sum with signs
//! `(-1)^k` is [`binomial_sum`]; it differs by the global sign `(-1)^i`.

mod grading;
mod laurent;

pub use grading::{
    contact_degree, degree_shift, gompf_theta, hf_rank_data, DegreeShift, GradingData, HfRankData,
    HfTarget,
};
pub use laurent::HalfLaurent;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::{descriptors, ContactDescriptor};
use crate::error::{invalid, Result};
use crate::homology::{smith_normal_form, IntegerMatrix};

/// Binomial coefficients `C(i, 0..=i)`.
pub fn binomial_row(i: i64) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 1..=i {
        let next = &row[(k - 1) as usize] * BigInt::from(i - k + 1) / BigInt::from(k);
        row.push(next);
    }
    row
}

fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn checked(d: &ContactDescriptor) -> Result<ContactDescriptor> {
    ContactDescriptor::new(d.n, d.i, d.j)
}

/// `Σ_k (-1)^k C(i,k) t^{(j-i+2k)/2}`.
pub fn binomial_sum(d: &ContactDescriptor) -> Result<HalfLaurent> {
    let d = checked(d)?;
    Ok(HalfLaurent::from_terms(
        binomial_row(d.i).into_iter().enumerate().map(|(k, c)| {
            let k = k as i64;
            (d.j - d.i + 2 * k, sign(k) * c)
        }),
    ))
}

/// `(t^{1/2} - t^{-1/2})^i t^{j/2}`, by repeated multiplication.
pub fn invariant_closed_form(d: &ContactDescriptor) -> Result<HalfLaurent> {
    let d = checked(d)?;
    Ok(HalfLaurent::winf_factor().pow(d.i as u32).shift(d.j))
}

/// `c(η_{i,j}^n)` pushed forward by `F_{V_n}`.
pub fn invariant(d: &ContactDescriptor) -> Result<HalfLaurent> {
    Ok(map_f_vn(&coordinates(d)?))
}

/// A class in `HF_{+1}(-Y_n) ≅ Z^{n-1}` in the basis `c(η_{0,j'}^n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantVector {
    pub n: i64,
    /// Entry `m` is the coordinate of `j' = -n + 2 + 2m`.
    #[serde(with = "crate::bigint_serde::vec")]
    pub coords: Vec<BigInt>,
}

impl InvariantVector {
    pub fn zero(n: i64) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("n = {n} must be at least 2")));
        }
        Ok(InvariantVector { n, coords: vec![BigInt::zero(); (n - 1) as usize] })
    }

    pub fn basis(n: i64, j: i64) -> Result<Self> {
        let mut v = Self::zero(n)?;
        let slot = v.slot(j).ok_or_else(|| invalid(format!("{j} is not a basis index for n = {n}")))?;
        v.coords[slot] = BigInt::one();
        Ok(v)
    }

    pub fn basis_indices(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.coords.len() as i64).map(move |m| -self.n + 2 + 2 * m)
    }

    pub fn slot(&self, j: i64) -> Option<usize> {
        let m = j + self.n - 2;
        (m >= 0 && m % 2 == 0 && m / 2 < self.coords.len() as i64).then_some((m / 2) as usize)
    }

    pub fn get(&self, j: i64) -> BigInt {
        self.slot(j).map_or_else(BigInt::zero, |s| self.coords[s].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

pub fn coordinates(d: &ContactDescriptor) -> Result<InvariantVector> {
    let d = checked(d)?;
    let mut v = InvariantVector::zero(d.n)?;
    for (k, c) in binomial_row(d.i).into_iter().enumerate() {
        let k = k as i64;
        let slot = v.slot(d.j - d.i + 2 * k).expect("the subtriangle base lies in P_n");
        v.coords[slot] = sign(d.i - k) * c;
    }
    Ok(v)
}

/// Coordinates of every invariant of `P_n`, one row per descriptor in
/// lexicographic order.
pub fn coordinate_matrix(n: i64) -> Result<IntegerMatrix> {
    let rows: Vec<Vec<BigInt>> =
        descriptors(n)?.iter().map(|d| coordinates(d).map(|v| v.coords)).collect::<Result<_>>()?;
    Ok(IntegerMatrix::from_rows(&rows))
}

pub fn coordinate_rank(n: i64) -> Result<usize> {
    Ok(smith_normal_form(&coordinate_matrix(n)?).rank())
}

/// `F_{V_n}`: `c(η_{0,j}^n) ↦ t^{j/2}`.
pub fn map_f_vn(v: &InvariantVector) -> HalfLaurent {
    HalfLaurent::from_terms(v.basis_indices().zip(v.coords.iter().cloned()))
}

/// `F_{W_n}`: `c(η_{0,j}^n) ↦ c(η_{0,j+1}^{n+1}) - c(η_{0,j-1}^{n+1})`.
pub fn map_f_wn(v: &InvariantVector) -> InvariantVector {
    let mut out = InvariantVector::zero(v.n + 1).expect("n + 1 >= 3");
    for (j, c) in v.basis_indices().zip(&v.coords) {
        let up = out.slot(j + 1).expect("in range");
        let down = out.slot(j - 1).expect("in range");
        out.coords[up] += c;
        out.coords[down] -= c;
    }
    out
}

/// `F_{W_∞}`: multiplication by `t^{1/2} - t^{-1/2}`.
pub fn map_f_winf(p: &HalfLaurent) -> HalfLaurent {
    &HalfLaurent::winf_factor() * p
}

/// `F_{V_∞}`: conjugation.
pub fn map_f_vinf(p: &HalfLaurent) -> HalfLaurent {
    p.conjugate()
}

pub fn conjugate(p: &HalfLaurent) -> HalfLaurent {
    p.conjugate()
}

/// Which map of the square `F_{V_{n+1}} ∘ F_{W_n} = F_{W_∞} ∘ F_{V_n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CobordismMapSpec {
    Vn(i64),
    Wn(i64),
    WInf,
    VInf,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Element {
    Vector(InvariantVector),
    Laurent(HalfLaurent),
}

impl CobordismMapSpec {
    pub fn apply(&self, x: &Element) -> Result<Element> {
        match (self, x) {
            (CobordismMapSpec::Vn(n), Element::Vector(v)) if v.n == *n => Ok(Element::Laurent(map_f_vn(v))),
            (CobordismMapSpec::Wn(n), Element::Vector(v)) if v.n == *n => Ok(Element::Vector(map_f_wn(v))),
            (CobordismMapSpec::WInf, Element::Laurent(p)) => Ok(Element::Laurent(map_f_winf(p))),
            (CobordismMapSpec::VInf, Element::Laurent(p)) => Ok(Element::Laurent(map_f_vinf(p))),
            _ => Err(invalid(format!("{self:?} does not accept this element"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distinctness {
    pub n: i64,
    pub holds: bool,
    pub zero: Option<ContactDescriptor>,
    pub collision: Option<(ContactDescriptor, ContactDescriptor)>,
}

/// All invariants of `P_n` nonzero and pairwise distinct.
pub fn verify_distinctness(n: i64) -> Result<Distinctness> {
    let mut seen: HashMap<InvariantVector, ContactDescriptor> = HashMap::new();
    for d in descriptors(n)? {
        let v = coordinates(&d)?;
        if v.is_zero() {
            return Ok(Distinctness { n, holds: false, zero: Some(d), collision: None });
        }
        if let Some(prev) = seen.insert(v, d) {
            return Ok(Distinctness { n, holds: false, zero: None, collision: Some((prev, d)) });
        }
    }
    Ok(Distinctness { n, holds: true, zero: None, collision: None })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramCheck {
    pub n: i64,
    pub holds: bool,
    pub checked: usize,
    pub failure: Option<ContactDescriptor>,
}

/// `F_{V_{n+1}}(F_{W_n}(c)) = F_{W_∞}(F_{V_n}(c)) = c(η_{i+1,j}^{n+1})` under
/// `F_{V_{n+1}}`, for every invariant of `P_n`.
pub fn verify_diagram(n: i64) -> Result<DiagramCheck> {
    let ds = descriptors(n)?;
    let failure = ds
        .par_iter()
        .find_first(|d| {
            let c = coordinates(d).expect("valid");
            let lhs = map_f_vn(&map_f_wn(&c));
            let rhs = map_f_winf(&map_f_vn(&c));
            let up = ContactDescriptor { n: n + 1, i: d.i + 1, j: d.j };
            let target = invariant(&up).expect("valid");
            !(lhs == rhs && rhs == target)
        })
        .copied();
    Ok(DiagramCheck { n, holds: failure.is_none(), checked: ds.len(), failure })
}

/// One row of an invariant table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub n: i64,
    pub i: i64,
    pub j: i64,
    /// `[doubled_exponent, coefficient]`, ascending.
    #[serde(with = "crate::bigint_serde::terms")]
    pub monomials: Vec<(i64, BigInt)>,
}

impl InvariantRecord {
    pub fn polynomial(&self) -> HalfLaurent {
        HalfLaurent::from_terms(self.monomials.iter().cloned())
    }
}

pub fn invariant_table(n: i64) -> Result<Vec<InvariantRecord>> {
    descriptors(n)?
        .iter()
        .map(|d| {
            Ok(InvariantRecord { n: d.n, i: d.i, j: d.j, monomials: invariant(d)?.to_monomials() })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: i64, i: i64, j: i64) -> ContactDescriptor {
        ContactDescriptor::new(n, i, j).unwrap()
    }

    #[test]
    fn small_invariants() {
        assert_eq!(invariant(&d(5, 0, 3)).unwrap(), HalfLaurent::monomial(3, 1));
        assert_eq!(invariant(&d(3, 1, 0)).unwrap().to_string(), "-t^(-1/2) + t^(1/2)");
        assert_eq!(invariant(&d(4, 2, 0)).unwrap().to_string(), "t^-1 - 2 + t");
        assert_eq!(invariant(&d(6, 3, 1)).unwrap().to_string(), "-t^-1 + 3 - 3t + t^2");
        assert_eq!(binomial_sum(&d(3, 1, 0)).unwrap(), -invariant(&d(3, 1, 0)).unwrap());
        assert!(invariant(&d(3, 1, 0)).is_ok() && ContactDescriptor::new(3, 1, 1).is_err());
    }

    #[test]
    fn coordinates_example() {
        let v = coordinates(&d(4, 2, 0)).unwrap();
        assert_eq!(v.coords, vec![BigInt::from(1), BigInt::from(-2), BigInt::from(1)]);
        assert_eq!(coordinate_rank(6).unwrap(), 5);
    }

    #[test]
    fn maps() {
        let start = coordinates(&d(2, 0, 0)).unwrap();
        assert_eq!(map_f_vn(&map_f_wn(&start)), HalfLaurent::winf_factor());
        assert_eq!(map_f_winf(&HalfLaurent::zero()), HalfLaurent::zero());
        assert_eq!(
            map_f_winf(&HalfLaurent::monomial(3, 1)),
            HalfLaurent::monomial(4, 1) - HalfLaurent::monomial(2, 1)
        );
        let twice = map_f_wn(&map_f_wn(&coordinates(&d(4, 1, 1)).unwrap()));
        assert_eq!(map_f_vn(&twice), invariant_closed_form(&d(6, 3, 1)).unwrap());
    }

    #[test]
    fn map_spec_dispatch() {
        let v = Element::Vector(coordinates(&d(3, 0, 1)).unwrap());
        let p = CobordismMapSpec::Vn(3).apply(&v).unwrap();
        assert_eq!(p, Element::Laurent(HalfLaurent::monomial(1, 1)));
        assert!(CobordismMapSpec::Vn(4).apply(&v).is_err());
        assert!(CobordismMapSpec::WInf.apply(&v).is_err());
    }

    #[test]
    fn sweeps() {
        for n in 2..=12 {
            assert!(verify_distinctness(n).unwrap().holds);
            assert!(verify_diagram(n).unwrap().holds);
        }
    }
}
