//! Two-handle cobordisms between surgeries on links in `S^3`, and their
//! coefficient kernels `K(W) = ker(H^2(W, ∂W) → H^2(W))`.
//!
//! The incoming end is surgery on a link with linking matrix `Q0`. Each
//! handle is attached along a knot in the complement, recorded by its linking
//! numbers with the base components, its framing and its linking numbers with
//! the other handles. The outgoing end is surgery on the enlarged link, so
//!
//! ```text
//! H^1(Y0) = ker Q0,   H^1(Y1) = ker Q,   Q = [[Q0, B], [Bᵀ, Q']]
//! H^1(W)  = { φ : Q0 φ = 0, Bᵀ φ = 0 }
//! ```
//!
//! restricting by `φ ↦ φ` and `φ ↦ (φ, 0)`. Exactness of
//! `H^1(W) → H^1(∂W) → H^2(W, ∂W) → H^2(W)` identifies `K(W)` with the
//! cokernel of the restriction.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{cokernel, kernel_basis, AbelianGroupSpec, IntegerMatrix};
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Handle {
    pub name: String,
    /// Linking numbers with the base link components.
    #[serde(with = "crate::bigint_serde::vec")]
    pub class: Vec<BigInt>,
    #[serde(with = "crate::bigint_serde")]
    pub framing: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobordismPresentation {
    pub name: String,
    pub base: IntegerMatrix,
    pub handles: Vec<Handle>,
    /// Symmetric, `handles.len()` square; the diagonal is ignored.
    pub mutual: IntegerMatrix,
}

impl CobordismPresentation {
    pub fn new(
        name: &str,
        base: IntegerMatrix,
        handles: Vec<Handle>,
        mutual: IntegerMatrix,
    ) -> Result<Self> {
        let w = CobordismPresentation { name: name.to_string(), base, handles, mutual };
        w.validate()?;
        Ok(w)
    }

    /// Product cobordism on the surgery `base`.
    pub fn trivial(base: IntegerMatrix) -> Result<Self> {
        Self::new("trivial", base, Vec::new(), IntegerMatrix::zeros(0, 0))
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.base.rows();
        if !self.base.is_square() || !self.base.is_symmetric() {
            return Err(Error::Inconsistent("base linking matrix must be symmetric".into()));
        }
        if let Some(h) = self.handles.iter().find(|h| h.class.len() != n) {
            return Err(Error::Inconsistent(format!(
                "handle `{}` has {} linking numbers for {} base components",
                h.name,
                h.class.len(),
                n
            )));
        }
        let h = self.handles.len();
        if self.mutual.rows() != h || self.mutual.cols() != h || !self.mutual.is_symmetric() {
            return Err(Error::Inconsistent("mutual linking must be symmetric and match the handles".into()));
        }
        Ok(())
    }

    /// Linking matrix of the outgoing surgery.
    pub fn outgoing(&self) -> IntegerMatrix {
        let n = self.base.rows();
        let h = self.handles.len();
        let mut q = IntegerMatrix::zeros(n + h, n + h);
        for i in 0..n {
            for j in 0..n {
                q[(i, j)] = self.base[(i, j)].clone();
            }
        }
        for (a, handle) in self.handles.iter().enumerate() {
            for (i, l) in handle.class.iter().enumerate() {
                q[(i, n + a)] = l.clone();
                q[(n + a, i)] = l.clone();
            }
            for b in 0..h {
                q[(n + a, n + b)] =
                    if a == b { handle.framing.clone() } else { self.mutual[(a, b)].clone() };
            }
        }
        q
    }

    /// `[Q0; Bᵀ]`, whose kernel is `H^1(W)`.
    fn handle_constraints(&self) -> IntegerMatrix {
        let n = self.base.rows();
        let mut m = IntegerMatrix::zeros(n + self.handles.len(), n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.base[(i, j)].clone();
            }
        }
        for (a, handle) in self.handles.iter().enumerate() {
            for (j, l) in handle.class.iter().enumerate() {
                m[(n + a, j)] = l.clone();
            }
        }
        m
    }

    /// `W_∞`: a (-1)-framed unknot split from the 0-framed trefoil picture of
    /// `Y_∞`, a cobordism from `Y_∞` to itself.
    pub fn w_infinity() -> Self {
        Self::new(
            "W_inf",
            IntegerMatrix::from_i64(&[&[0]]),
            vec![handle("U", &[0], -1)],
            IntegerMatrix::zeros(1, 1),
        )
        .expect("builtin")
    }

    /// `V_n`: the handle along `F` with framing `-n`, from `Y_∞` to `Y_n`.
    pub fn v_n(n: i64) -> Self {
        Self::new(
            &format!("V_{n}"),
            IntegerMatrix::from_i64(&[&[0]]),
            vec![handle("F", &[1], -n)],
            IntegerMatrix::zeros(1, 1),
        )
        .expect("builtin")
    }

    /// `V_n` drawn on the outgoing end of [`Self::w_infinity`]: `F` passes once
    /// through the blown-up unknot, so its framing there is `-(n+1)`.
    pub fn v_n_after_w_infinity(n: i64) -> Self {
        Self::new(
            &format!("V_{n}"),
            IntegerMatrix::from_i64(&[&[0, 0], &[0, -1]]),
            vec![handle("F", &[1, 1], -(n + 1))],
            IntegerMatrix::zeros(1, 1),
        )
        .expect("builtin")
    }

    /// `W_n`: a (-1)-framed meridian of `F`, from `Y_{n+1}` to `Y_n`.
    pub fn w_n(n: i64) -> Self {
        Self::new(
            &format!("W_{n}"),
            IntegerMatrix::from_i64(&[&[0, 1], &[1, -(n + 1)]]),
            vec![handle("U", &[0, 1], -1)],
            IntegerMatrix::zeros(1, 1),
        )
        .expect("builtin")
    }

    /// `Z_n = V_{n+1} ∪ W_n = W_∞ ∪ V_n`, from `Y_∞` to `Y_n`.
    pub fn z_n(n: i64) -> Self {
        Self::new(
            &format!("Z_{n}"),
            IntegerMatrix::from_i64(&[&[0]]),
            vec![handle("F", &[1], -(n + 1)), handle("U", &[0], -1)],
            IntegerMatrix::from_i64(&[&[0, 1], &[1, 0]]),
        )
        .expect("builtin")
    }
}

fn handle(name: &str, class: &[i64], framing: i64) -> Handle {
    Handle {
        name: name.to_string(),
        class: class.iter().map(|&x| BigInt::from(x)).collect(),
        framing: BigInt::from(framing),
    }
}

/// Matrix of `H^1(W) → H^1(Y0) ⊕ H^1(Y1)` in kernel coordinates.
fn restriction(w: &CobordismPresentation) -> (IntegerMatrix, usize, usize) {
    let (_, c0) = kernel_basis(&w.base);
    let (_, c1) = kernel_basis(&w.outgoing());
    let (kw, _) = kernel_basis(&w.handle_constraints());
    let n = w.base.rows();
    let h = w.handles.len();
    let (d0, d1) = (c0.rows(), c1.rows());
    let mut m = IntegerMatrix::zeros(d0 + d1, kw.cols());
    for k in 0..kw.cols() {
        let phi = kw.column(k);
        let mut padded = phi.clone();
        padded.extend(std::iter::repeat(BigInt::zero()).take(h));
        debug_assert_eq!(padded.len(), n + h);
        for (r, x) in c0.mul_vec(&phi).into_iter().enumerate() {
            m[(r, k)] = x;
        }
        for (r, x) in c1.mul_vec(&padded).into_iter().enumerate() {
            m[(d0 + r, k)] = x;
        }
    }
    (m, d0, d1)
}

pub fn cobordism_kernel(w: &CobordismPresentation) -> Result<AbelianGroupSpec> {
    w.validate()?;
    Ok(cokernel(&restriction(w).0))
}

/// Glues `w1` onto the outgoing end of `w0`.
pub fn compose(w0: &CobordismPresentation, w1: &CobordismPresentation) -> Result<CobordismPresentation> {
    w0.validate()?;
    w1.validate()?;
    if w1.base != w0.outgoing() {
        return Err(invalid(format!(
            "`{}` does not start where `{}` ends",
            w1.name, w0.name
        )));
    }
    let n = w0.base.rows();
    let h0 = w0.handles.len();
    let h1 = w1.handles.len();
    let mut handles = w0.handles.clone();
    for h in &w1.handles {
        handles.push(Handle { name: h.name.clone(), class: h.class[..n].to_vec(), framing: h.framing.clone() });
    }
    let mut mutual = IntegerMatrix::zeros(h0 + h1, h0 + h1);
    for a in 0..h0 {
        for b in 0..h0 {
            mutual[(a, b)] = w0.mutual[(a, b)].clone();
        }
    }
    for (a, h) in w1.handles.iter().enumerate() {
        for b in 0..h0 {
            mutual[(h0 + a, b)] = h.class[n + b].clone();
            mutual[(b, h0 + a)] = h.class[n + b].clone();
        }
        for b in 0..h1 {
            if a != b {
                mutual[(h0 + a, h0 + b)] = w1.mutual[(a, b)].clone();
            }
        }
    }
    for a in 0..h0 + h1 {
        mutual[(a, a)] = BigInt::zero();
    }
    CobordismPresentation::new(&format!("{}+{}", w0.name, w1.name), w0.base.clone(), handles, mutual)
}

/// Ranks in the exact sequence for a composite `W = W0 ∪_{Y1} W1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KSequence {
    pub rank_k0: usize,
    pub rank_k1: usize,
    pub rank_h1_middle: usize,
    /// Rank of `(K(W0) ⊕ K(W1)) / H^1(Y1)`.
    pub rank_quotient: usize,
    pub rank_k: usize,
    pub delta_rank: i64,
    pub holds: bool,
}

/// Checks `rank K(W) = rank((K(W0) ⊕ K(W1)) / H^1(Y1)) - δ`.
pub fn ksequence_rank_check(
    w0: &CobordismPresentation,
    w1: &CobordismPresentation,
    delta_rank: i64,
) -> Result<KSequence> {
    let w = compose(w0, w1)?;
    let (r0, a0, b0) = restriction(w0);
    let (r1, a1, b1) = restriction(w1);
    debug_assert_eq!(b0, a1);
    // H^1(Y0) ⊕ H^1(Y1) ⊕ H^1(Y1) ⊕ H^1(Y2) modulo both restrictions and the
    // diagonal copy of H^1(Y1) read with opposite signs.
    let total = a0 + b0 + a1 + b1;
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for k in 0..r0.cols() {
        let mut v = vec![BigInt::zero(); total];
        for r in 0..a0 + b0 {
            v[r] = r0[(r, k)].clone();
        }
        gens.push(v);
    }
    for k in 0..r1.cols() {
        let mut v = vec![BigInt::zero(); total];
        for r in 0..a1 + b1 {
            v[a0 + b0 + r] = r1[(r, k)].clone();
        }
        gens.push(v);
    }
    for t in 0..b0 {
        let mut v = vec![BigInt::zero(); total];
        v[a0 + t] = BigInt::from(1);
        v[a0 + b0 + t] = BigInt::from(-1);
        gens.push(v);
    }
    let quotient = cokernel(&IntegerMatrix::from_columns(total, &gens));
    let k0 = cokernel(&r0).rank;
    let k1 = cokernel(&r1).rank;
    let k = cobordism_kernel(&w)?.rank;
    let holds = k as i64 == quotient.rank as i64 - delta_rank;
    Ok(KSequence {
        rank_k0: k0,
        rank_k1: k1,
        rank_h1_middle: b0,
        rank_quotient: quotient.rank,
        rank_k: k,
        delta_rank,
        holds,
    })
}
