//! Laurent polynomials in `t^{1/2}` with unbounded integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exponents are stored doubled, so `t^{1/2}` is the key `1`. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff · t^{doubled_exp/2}`.
    pub fn monomial(doubled_exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(doubled_exp, coeff.into());
        p
    }

    /// `t^{1/2} - t^{-1/2}`.
    pub fn winf_factor() -> Self {
        Self::monomial(1, 1) - Self::monomial(-1, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, doubled_exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(doubled_exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&doubled_exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, doubled_exp: i64) -> BigInt {
        self.terms.get(&doubled_exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending in the exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e, c * k)))
    }

    /// Multiplication by `t^{doubled/2}`.
    pub fn shift(&self, doubled: i64) -> Self {
        HalfLaurent { terms: self.terms.iter().map(|(&e, c)| (e + doubled, c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `t^{1/2} ↦ t^{-1/2}`.
    pub fn conjugate(&self) -> Self {
        HalfLaurent { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Invariant under `t ↦ t^{-1}`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn to_monomials(&self) -> Vec<(i64, BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c.clone())).collect()
    }
}

impl Serialize for HalfLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::bigint_serde::terms::serialize(&self.to_monomials(), s)
    }
}

impl<'de> Deserialize<'de> for HalfLaurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        crate::bigint_serde::terms::deserialize(d).map(Self::from_terms)
    }
}

impl AddAssign<&HalfLaurent> for HalfLaurent {
    fn add_assign(&mut self, rhs: &HalfLaurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Add<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for HalfLaurent {
    type Output = HalfLaurent;
    fn add(mut self, rhs: HalfLaurent) -> HalfLaurent {
        self += &rhs;
        self
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        HalfLaurent { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

impl Sub<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        self + &(-rhs)
    }
}

impl Sub for HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: HalfLaurent) -> HalfLaurent {
        &self - &rhs
    }
}

impl Mul<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: HalfLaurent) -> HalfLaurent {
        &self * &rhs
    }
}

fn fmt_power(e: i64) -> String {
    match e {
        0 => String::new(),
        2 => "t".to_string(),
        e if e % 2 == 0 => format!("t^{}", e / 2),
        e => format!("t^({e}/2)"),
    }
}

/// Ascending exponents, e.g. `-t^-1 + 3 - 3t + t^2`.
impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let power = fmt_power(e);
            if power.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{mag}{power}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        let p = HalfLaurent::from_terms([(4, 1.into()), (2, (-3).into()), (0, 3.into()), (-2, (-1).into())]);
        assert_eq!(p.to_string(), "-t^-1 + 3 - 3t + t^2");
        assert_eq!(HalfLaurent::winf_factor().to_string(), "-t^(-1/2) + t^(1/2)");
        assert_eq!(HalfLaurent::zero().to_string(), "0");
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = HalfLaurent::winf_factor();
        assert!((&p - &p).is_zero());
        assert_eq!((&p * &p).to_monomials().len(), 3);
        assert_eq!(p.pow(2), HalfLaurent::from_terms([(2, 1.into()), (0, (-2).into()), (-2, 1.into())]));
    }

    #[test]
    fn serde_round_trip() {
        let p = HalfLaurent::winf_factor().pow(3).shift(1);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<HalfLaurent>(&s).unwrap(), p);
    }
}
