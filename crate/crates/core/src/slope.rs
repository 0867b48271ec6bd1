//! Slopes on tori and the arithmetic around them.
//!
//! A curve on a torus is recorded by its class `(p, q)`; its slope is `q/p`
//! and the meridian of a solid torus is `(1, 0)`. With this convention the
//! attaching maps of the Seifert pieces of `-Σ(2,3,6n-1)` act by plain
//! matrix-vector multiplication.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, invalid, Error, Result};

/// A point of `Q ∪ {∞}` stored as a primitive curve class.
///
/// Invariant: `gcd(|p|, |q|) = 1` and either `p > 0` or `(p, q) = (0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slope {
    #[serde(with = "crate::bigint_serde")]
    p: BigInt,
    #[serde(with = "crate::bigint_serde")]
    q: BigInt,
}

impl Slope {
    /// Normalizes the class `(p, q)`; its slope is `q/p`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(invalid("slope of the zero class (0, 0)"));
        }
        if p.is_zero() {
            return Ok(Self::infinity());
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if p.is_negative() {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    /// The slope with value `numer/denom`.
    pub fn from_ratio(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        Self::new(denom, numer)
    }

    pub fn integer(m: impl Into<BigInt>) -> Self {
        Slope { p: BigInt::one(), q: m.into() }
    }

    pub fn infinity() -> Self {
        Slope { p: BigInt::zero(), q: BigInt::one() }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.p.is_zero()
    }

    /// Numerator of the slope value (`q`).
    pub fn numer(&self) -> &BigInt {
        &self.q
    }

    /// Denominator of the slope value (`p`); zero for `∞`.
    pub fn denom(&self) -> &BigInt {
        &self.p
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        self.p.is_one().then_some(&self.q)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else if self.p.is_one() {
            write!(f, "{}", self.q)
        } else {
            write!(f, "{}/{}", self.q, self.p)
        }
    }
}

/// Normalized representative of the class `(p, q)`.
pub fn normalize_slope(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Slope> {
    Slope::new(p, q)
}

/// A 2×2 integer matrix with determinant `±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnimodularMatrix {
    #[serde(with = "crate::bigint_serde")]
    pub a: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub b: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub c: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub d: BigInt,
}

impl UnimodularMatrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = UnimodularMatrix { a: a.into(), b: b.into(), c: c.into(), d: d.into() };
        if !m.det().abs().is_one() {
            return Err(invalid(format!("matrix {m} has determinant {}", m.det())));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1).unwrap()
    }

    /// Attaching map of the first singular fibre neighbourhood.
    pub fn a1() -> Self {
        Self::new(2, -1, 1, 0).unwrap()
    }

    /// Attaching map of the second singular fibre neighbourhood.
    pub fn a2() -> Self {
        Self::new(3, 1, -1, 0).unwrap()
    }

    /// Attaching map of the third singular fibre neighbourhood of `Y_n`.
    pub fn a3(n: impl Into<BigInt>) -> Self {
        let n = n.into();
        Self::new(BigInt::from(6) * &n - 1, 6, -n, -1).unwrap()
    }

    /// Monodromy of the torus bundle `Y_∞` (0-surgery on the right-handed trefoil).
    pub fn trefoil_monodromy() -> Self {
        Self::new(1, 1, -1, 0).unwrap()
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn inverse(&self) -> Self {
        let det = self.det();
        UnimodularMatrix {
            a: &self.d * &det,
            b: -&self.b * &det,
            c: -&self.c * &det,
            d: &self.a * &det,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        UnimodularMatrix {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn apply(&self, p: &BigInt, q: &BigInt) -> (BigInt, BigInt) {
        (&self.a * p + &self.b * q, &self.c * p + &self.d * q)
    }

    pub fn entries_i64(&self) -> Option<[[i64; 2]; 2]> {
        Some([
            [self.a.to_i64()?, self.b.to_i64()?],
            [self.c.to_i64()?, self.d.to_i64()?],
        ])
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Slope of the image curve `M·(p, q)`.
pub fn mobius_apply(m: &UnimodularMatrix, s: &Slope) -> Slope {
    let (p, q) = m.apply(&s.p, &s.q);
    // unimodular images of primitive vectors are primitive and nonzero
    Slope::new(p, q).expect("unimodular image of a nonzero class")
}

/// Negative continued fraction `a_0 - 1/(a_1 - 1/(… - 1/a_k))`, all `a_i ≤ -2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NcfExpansion(#[serde(with = "crate::bigint_serde::vec")] Vec<BigInt>);

impl NcfExpansion {
    pub fn new(coefficients: Vec<BigInt>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(invalid("empty continued fraction"));
        }
        if let Some(a) = coefficients.iter().find(|a| **a > BigInt::from(-2)) {
            return Err(invalid(format!("continued fraction entry {a} is not <= -2")));
        }
        Ok(NcfExpansion(coefficients))
    }

    pub fn from_i64(coefficients: &[i64]) -> Result<Self> {
        Self::new(coefficients.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Expands `numer/denom < -1` into its negative continued fraction.
pub fn neg_continued_fraction(
    numer: impl Into<BigInt>,
    denom: impl Into<BigInt>,
) -> Result<NcfExpansion> {
    let (mut num, mut den) = (numer.into(), denom.into());
    if den < BigInt::one() {
        return Err(invalid(format!("denominator {den} must be positive")));
    }
    if num >= -&den {
        return Err(domain(format!(
            "{num}/{den} has no expansion with all entries <= -2 (value must be < -1)"
        )));
    }
    let g = num.gcd(&den);
    num /= &g;
    den /= &g;
    let mut out = Vec::new();
    loop {
        let a = num.div_floor(&den);
        if (&a * &den) == num {
            out.push(a);
            break;
        }
        // x = a - 1/y with a = floor(x), so 1/y = a - x lies in (-1, 0) and y < -1
        out.push(a.clone());
        let next_den = &a * &den - &num;
        num = -den;
        den = -next_den;
    }
    NcfExpansion::new(out)
}

/// Exact value of a negative continued fraction.
pub fn eval_ncf(e: &NcfExpansion) -> Slope {
    let mut it = e.0.iter().rev();
    let last = it.next().expect("expansions are nonempty");
    let (mut num, mut den) = (last.clone(), BigInt::one());
    for a in it {
        // a - den/num
        let new_num = a * &num - &den;
        den = num;
        num = new_num;
    }
    Slope::from_ratio(num, den).expect("nonzero denominator")
}

/// Number of tight contact structures on a solid torus whose boundary has
/// slope `s = -p/q` with `p ≥ q ≥ 1` (minimal twisting, meridian slope 0
/// convention): `|(a_0+1)⋯(a_{k-1}+1)·a_k|` for the expansion `[a_0,…,a_k]`.
pub fn tight_count_solid_torus(s: &Slope) -> Result<BigInt> {
    if s.is_infinite() || !s.numer().is_negative() {
        return Err(domain(format!("slope {s} is not negative")));
    }
    if s.numer().abs() < *s.denom() {
        return Err(domain(format!("slope {s} lies in (-1, 0)")));
    }
    if let Some(m) = s.as_integer() {
        return Ok(-m);
    }
    let e = neg_continued_fraction(s.numer().clone(), s.denom().clone())?;
    let (last, init) = e.0.split_last().expect("nonempty");
    let product = init.iter().fold(last.clone(), |acc, a| acc * (a + 1));
    Ok(product.abs())
}

/// `Σ_{k=1}^{n-1}` of the solid-torus counts at slopes `-(n-k)`; checked
/// against `n(n-1)/2`.
pub fn upper_bound_count(n: i64) -> Result<BigInt> {
    if n < 2 {
        return Err(invalid(format!("n = {n} must be at least 2")));
    }
    let mut total = BigInt::zero();
    for k in 1..n {
        total += tight_count_solid_torus(&Slope::integer(-(n - k)))?;
    }
    let expected = BigInt::from(n) * (n - 1) / 2;
    if total != expected {
        return Err(Error::Inconsistent(format!(
            "count {total} differs from n(n-1)/2 = {expected}"
        )));
    }
    Ok(total)
}

/// Possible maximal twisting numbers `-6k+1`, `k = 1, …, n-1`.
pub fn max_twisting_values(n: i64) -> Result<Vec<i64>> {
    if n < 2 {
        return Err(invalid(format!("n = {n} must be at least 2")));
    }
    Ok((1..n).map(|k| -6 * k + 1).collect())
}

/// Slope seen from the complement of `V_3` for the slope `m` measured on `∂V_3`.
pub fn complement_slope_of_v3(n: i64, m: &Slope) -> Slope {
    mobius_apply(&UnimodularMatrix::a3(n), m)
}

/// Slope on `∂V_3` corresponding to a slope on the boundary of its complement.
pub fn v3_slope_of_complement(n: i64, s: &Slope) -> Slope {
    mobius_apply(&UnimodularMatrix::a3(n).inverse(), s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(num: i64, den: i64) -> Slope {
        Slope::from_ratio(num, den).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_slope(2, -6).unwrap(), Slope::new(1, -3).unwrap());
        let inf = normalize_slope(0, -5).unwrap();
        assert!(inf.is_infinite());
        assert_eq!((inf.p().clone(), inf.q().clone()), (BigInt::zero(), BigInt::one()));
        let s = normalize_slope(-7, 3).unwrap();
        assert_eq!((s.p().clone(), s.q().clone()), (BigInt::from(7), BigInt::from(-3)));
        assert!(normalize_slope(0, 0).is_err());
    }

    #[test]
    fn attaching_map_anchors() {
        // slope 1/k with k = -3 is the class (-3, 1)
        let s = Slope::new(-3, 1).unwrap();
        assert_eq!(mobius_apply(&UnimodularMatrix::a1(), &s), sl(3, 7));
        assert_eq!(mobius_apply(&UnimodularMatrix::a3(2), &Slope::integer(-2)), Slope::integer(0));
        assert!(mobius_apply(&UnimodularMatrix::a3(2), &sl(-11, 6)).is_infinite());
        assert_eq!(mobius_apply(&UnimodularMatrix::identity(), &sl(-5, 2)), sl(-5, 2));
    }

    #[test]
    fn determinants() {
        for m in [UnimodularMatrix::a1(), UnimodularMatrix::a2(), UnimodularMatrix::a3(7)] {
            assert_eq!(m.det(), BigInt::one());
        }
        assert!(UnimodularMatrix::new(2, 0, 0, 1).is_err());
    }

    #[test]
    fn ncf_examples() {
        assert_eq!(neg_continued_fraction(-2, 1).unwrap(), NcfExpansion::from_i64(&[-2]).unwrap());
        assert_eq!(
            neg_continued_fraction(-5, 2).unwrap(),
            NcfExpansion::from_i64(&[-3, -2]).unwrap()
        );
        assert_eq!(
            neg_continued_fraction(-11, 2).unwrap(),
            NcfExpansion::from_i64(&[-6, -2]).unwrap()
        );
        assert!(neg_continued_fraction(3, 2).is_err());
        assert!(neg_continued_fraction(-1, 2).is_err());
        assert!(neg_continued_fraction(-3, 0).is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_ncf(&NcfExpansion::from_i64(&[-2]).unwrap()), Slope::integer(-2));
        assert_eq!(eval_ncf(&NcfExpansion::from_i64(&[-3, -2]).unwrap()), sl(-5, 2));
        assert_eq!(eval_ncf(&NcfExpansion::from_i64(&[-2, -2, -2]).unwrap()), sl(-4, 3));
        assert!(NcfExpansion::new(vec![]).is_err());
        assert!(NcfExpansion::from_i64(&[-3, -1]).is_err());
    }

    #[test]
    fn solid_torus_counts() {
        assert_eq!(tight_count_solid_torus(&Slope::integer(-1)).unwrap(), BigInt::one());
        assert_eq!(tight_count_solid_torus(&Slope::integer(-3)).unwrap(), BigInt::from(3));
        assert_eq!(tight_count_solid_torus(&sl(-5, 2)).unwrap(), BigInt::from(4));
        assert!(tight_count_solid_torus(&Slope::integer(0)).is_err());
        assert!(tight_count_solid_torus(&Slope::infinity()).is_err());
        assert!(tight_count_solid_torus(&sl(-1, 2)).is_err());
    }

    #[test]
    fn counts_and_twisting() {
        assert_eq!(upper_bound_count(2).unwrap(), BigInt::one());
        assert_eq!(upper_bound_count(5).unwrap(), BigInt::from(10));
        assert_eq!(upper_bound_count(7).unwrap(), BigInt::from(21));
        assert!(upper_bound_count(1).is_err());
        assert_eq!(max_twisting_values(2).unwrap(), vec![-5]);
        assert_eq!(max_twisting_values(3).unwrap(), vec![-5, -11]);
        assert!(max_twisting_values(0).is_err());
    }

    #[test]
    fn edge_rounding_pair() {
        // -n+k on ∂V_3 is seen as -k/(6k-1) from the complement, -n-k as -k/(6k+1)
        for n in 2..10 {
            for k in 1..n {
                assert_eq!(complement_slope_of_v3(n, &Slope::integer(-n + k)), sl(-k, 6 * k - 1));
                assert_eq!(complement_slope_of_v3(n, &Slope::integer(-n - k)), sl(-k, 6 * k + 1));
                assert_eq!(v3_slope_of_complement(n, &sl(-k, 6 * k - 1)), Slope::integer(-n + k));
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(sl(3, 7).to_string(), "3/7");
        assert_eq!(Slope::integer(-2).to_string(), "-2");
        assert_eq!(Slope::infinity().to_string(), "inf");
    }
}
