//! Integer homology: Smith normal form, plumbing and surgery presentations,
//! torus bundles and the cobordism kernels `K(W)`.

mod cobordism;
mod matrix;
mod plumbing;
mod snf;

pub use cobordism::{
    cobordism_kernel, compose, ksequence_rank_check, CobordismPresentation, Handle, KSequence,
};
pub use matrix::IntegerMatrix;
pub use plumbing::{expand_rational_framings, linking_matrix, PlumbingGraph, Vertex};
pub use snf::{cokernel, kernel_basis, smith_normal_form, AbelianGroupSpec, SmithForm};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{invalid, Result};
use crate::slope::UnimodularMatrix;

/// `H_1` of the surgery described by a plumbing graph (rational framings are
/// expanded first).
pub fn h1_of_surgery(g: &PlumbingGraph) -> Result<AbelianGroupSpec> {
    let expanded = expand_rational_framings(g)?;
    Ok(cokernel(&linking_matrix(&expanded)?))
}

/// `H_1` of the torus bundle with monodromy `A`: `Z ⊕ coker(A − I)`.
pub fn h1_torus_bundle(a: &UnimodularMatrix) -> Result<AbelianGroupSpec> {
    if !a.det().is_one() {
        return Err(invalid(format!("torus bundle monodromy must have det 1, got {}", a.det())));
    }
    let m = IntegerMatrix::from_rows(&[
        vec![a.a.clone() - 1, a.b.clone()],
        vec![a.c.clone(), a.d.clone() - BigInt::one()],
    ]);
    let fiber = cokernel(&m);
    Ok(AbelianGroupSpec { rank: fiber.rank + 1, torsion: fiber.torsion })
}
