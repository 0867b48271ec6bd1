//! Smith normal form over the integers.
//!
//! Pivoting picks the entry of smallest nonzero absolute value in the active
//! block (ties broken by lowest row, then lowest column), eliminates its
//! column and then its row with Euclidean quotients, and repeats until the
//! pivot divides the whole remaining block.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntegerMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Diagonal form, same shape as the input.
    pub d: IntegerMatrix,
    /// Row transform: `u · m · v = d`.
    pub u: IntegerMatrix,
    /// Column transform.
    pub v: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub v_inv: IntegerMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// First property of a Smith form of `m` that fails, if any: `U·M·V = D`,
    /// `U` and `V` unimodular with the stored inverses, `D` diagonal with a
    /// nonnegative divisibility chain.
    pub fn violation(&self, m: &IntegerMatrix) -> Option<String> {
        if self.u.mul(m).mul(&self.v) != self.d {
            return Some("U·M·V != D".into());
        }
        if !self.u.is_unimodular() || !self.v.is_unimodular() {
            return Some("transform is not unimodular".into());
        }
        if self.u.mul(&self.u_inv) != IntegerMatrix::identity(m.rows())
            || self.v.mul(&self.v_inv) != IntegerMatrix::identity(m.cols())
        {
            return Some("stored inverse is wrong".into());
        }
        for i in 0..self.d.rows() {
            for j in 0..self.d.cols() {
                if i != j && !self.d[(i, j)].is_zero() {
                    return Some(format!("D has off-diagonal entry at ({i}, {j})"));
                }
            }
        }
        let diag = self.diagonal();
        if diag.iter().any(|x| x.is_negative()) {
            return Some("negative invariant factor".into());
        }
        for w in diag.windows(2) {
            let ok = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            if !ok {
                return Some(format!("{} does not divide {}", w[0], w[1]));
            }
        }
        None
    }
}

/// Returns `(D, U, V)` packaged with the inverses of `U` and `V`.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut u_inv = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);
    let mut v_inv = IntegerMatrix::identity(cols);

    // Row op on d, mirrored on u (left) and u_inv (right, inverse op on columns).
    let row_add = |d: &mut IntegerMatrix, u: &mut IntegerMatrix, ui: &mut IntegerMatrix,
                   dst: usize, src: usize, k: &BigInt| {
        d.add_row_multiple(dst, src, k);
        u.add_row_multiple(dst, src, k);
        ui.add_col_multiple(src, dst, &-k);
    };
    let col_add = |d: &mut IntegerMatrix, v: &mut IntegerMatrix, vi: &mut IntegerMatrix,
                   dst: usize, src: usize, k: &BigInt| {
        d.add_col_multiple(dst, src, k);
        v.add_col_multiple(dst, src, k);
        vi.add_row_multiple(src, dst, &-k);
    };

    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &d[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(d, u, v, u_inv, v_inv);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &d[(t, t)]);
                row_add(&mut d, &mut u, &mut u_inv, i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &d[(t, t)]);
                col_add(&mut d, &mut v, &mut v_inv, j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = d[(t, t)].clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => row_add(&mut d, &mut u, &mut u_inv, t, i, &BigInt::one()),
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            // inverse of negating row t is negating column t on the right
            for r in 0..rows {
                let x = -&u_inv[(r, t)];
                u_inv[(r, t)] = x;
            }
        }
    }
    finish(d, u, v, u_inv, v_inv)
}

fn finish(
    d: IntegerMatrix,
    u: IntegerMatrix,
    v: IntegerMatrix,
    u_inv: IntegerMatrix,
    v_inv: IntegerMatrix,
) -> SmithForm {
    SmithForm { d, u, v, u_inv, v_inv }
}

/// A finitely generated abelian group `Z^rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_k` with
/// `t_1 | t_2 | … | t_k` and every `t_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroupSpec {
    pub rank: usize,
    #[serde(with = "crate::bigint_serde::vec")]
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupSpec {
    pub fn trivial() -> Self {
        AbelianGroupSpec { rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupSpec { rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Canonical form from arbitrary invariant factors (entries may be 0, ±1
    /// or out of order); zeros add to the rank.
    pub fn from_factors(rank: usize, factors: impl IntoIterator<Item = BigInt>) -> Self {
        let mut rank = rank;
        let mut primes: Vec<BigInt> = Vec::new();
        for f in factors {
            let f = f.abs();
            if f.is_zero() {
                rank += 1;
            } else if !f.is_one() {
                primes.push(f);
            }
        }
        // re-diagonalize to a divisibility chain
        let m = IntegerMatrix::diagonal(&primes);
        let torsion = smith_normal_form(&m)
            .diagonal()
            .into_iter()
            .filter(|x| !x.is_one())
            .collect();
        AbelianGroupSpec { rank, torsion }
    }
}

impl fmt::Display for AbelianGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Z^rows / im(M)`.
pub fn cokernel(m: &IntegerMatrix) -> AbelianGroupSpec {
    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    let rank = m.rows() - snf.rank();
    AbelianGroupSpec::from_factors(rank, diag.into_iter().filter(|x| !x.is_zero()))
}

/// A Z-basis of `ker M ⊂ Z^cols`, as the columns of the returned matrix,
/// together with a left inverse that reads off coordinates of kernel vectors.
pub fn kernel_basis(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    let cols = m.cols();
    let dim = cols - r;
    let mut basis = IntegerMatrix::zeros(cols, dim);
    let mut coords = IntegerMatrix::zeros(dim, cols);
    for k in 0..dim {
        for i in 0..cols {
            basis[(i, k)] = snf.v[(i, r + k)].clone();
            coords[(k, i)] = snf.v_inv[(r + k, i)].clone();
        }
    }
    (basis, coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.d.is_diagonal());
        assert_eq!(s.u.mul(&s.u_inv), IntegerMatrix::identity(m.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntegerMatrix::identity(m.cols()));
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]), "{} does not divide {}", w[0], w[1]);
            } else {
                assert!(w[1].is_zero());
            }
        }
        s
    }

    #[test]
    fn examples() {
        let s = check(&IntegerMatrix::from_i64(&[&[0, 1], &[-1, -1]]));
        assert_eq!(s.diagonal(), vec![BigInt::one(), BigInt::one()]);
        let s = check(&IntegerMatrix::zeros(2, 2));
        assert!(s.d.is_zero());
        let s = check(&IntegerMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::one(), BigInt::from(6)]);
    }

    #[test]
    fn rectangular() {
        check(&IntegerMatrix::from_i64(&[&[4, 6, 8], &[6, 9, 12]]));
        check(&IntegerMatrix::from_i64(&[&[3], &[6], &[-9]]));
        check(&IntegerMatrix::zeros(0, 3));
    }

    #[test]
    fn cokernels() {
        assert_eq!(cokernel(&IntegerMatrix::from_i64(&[&[0]])), AbelianGroupSpec::free(1));
        assert!(cokernel(&IntegerMatrix::from_i64(&[&[0, 1], &[-1, -1]])).is_trivial());
        assert_eq!(
            cokernel(&IntegerMatrix::from_i64(&[&[2, 0], &[0, 3]])),
            AbelianGroupSpec { rank: 0, torsion: vec![BigInt::from(6)] }
        );
        assert_eq!(cokernel(&IntegerMatrix::zeros(3, 0)), AbelianGroupSpec::free(3));
    }

    #[test]
    fn kernel() {
        let m = IntegerMatrix::from_i64(&[&[1, 2, 3]]);
        let (k, coords) = kernel_basis(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        assert_eq!(coords.mul(&k), IntegerMatrix::identity(2));
    }

    #[test]
    fn display() {
        let g = AbelianGroupSpec::from_factors(1, vec![BigInt::from(4), BigInt::from(6)]);
        assert_eq!(g.to_string(), "Z + Z/2 + Z/12");
        assert_eq!(AbelianGroupSpec::trivial().to_string(), "0");
    }
}
