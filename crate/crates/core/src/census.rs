//! The index triangles `P_n` and the Legendrian bookkeeping behind them.
//!
//! `η_{i,j}^n` is Legendrian surgery on the knot `F` of `(Y_∞, ξ_i)`
//! stabilized `l` times positively and `r` times negatively, with
//! `n = l + r + i + 2` and `j = l - r`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Names `η_{i,j}^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ContactDescriptor {
    pub n: i64,
    pub i: i64,
    pub j: i64,
}

impl ContactDescriptor {
    pub fn new(n: i64, i: i64, j: i64) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("n = {n} must be at least 2")));
        }
        if !(0..=n - 2).contains(&i) {
            return Err(invalid(format!("i = {i} outside 0..={}", n - 2)));
        }
        if j.abs() > n - i - 2 || (j - (n - i)).rem_euclid(2) != 0 {
            return Err(invalid(format!("({i}, {j}) is not an index of P_{n}")));
        }
        Ok(ContactDescriptor { n, i, j })
    }

    pub fn is_valid(n: i64, i: i64, j: i64) -> bool {
        Self::new(n, i, j).is_ok()
    }

    /// Stabilization counts `(l, r)` of `F`.
    pub fn stabilizations(&self) -> (i64, i64) {
        let s = self.n - self.i - 2;
        ((s + self.j) / 2, (s - self.j) / 2)
    }

    pub fn legendrian(&self) -> LegendrianPresentation {
        let (l, r) = self.stabilizations();
        let mut p = LegendrianPresentation::f_in_torsion(self.i);
        for _ in 0..l {
            p = p.stabilize(StabSign::Positive);
        }
        for _ in 0..r {
            p = p.stabilize(StabSign::Negative);
        }
        p
    }

    pub fn conjugate(&self) -> Self {
        ContactDescriptor { j: -self.j, ..*self }
    }
}

impl fmt::Display for ContactDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eta^{}_({},{})", self.n, self.i, self.j)
    }
}

/// `P_n` in lexicographic `(i, j)` order.
pub fn index_set(n: i64) -> Result<Vec<(i64, i64)>> {
    if n < 2 {
        return Err(invalid(format!("n = {n} must be at least 2")));
    }
    let mut out = Vec::with_capacity((n * (n - 1) / 2) as usize);
    for i in 0..=n - 2 {
        let m = n - i - 2;
        out.extend((-m..=m).step_by(2).map(|j| (i, j)));
    }
    Ok(out)
}

pub fn descriptors(n: i64) -> Result<Vec<ContactDescriptor>> {
    Ok(index_set(n)?.into_iter().map(|(i, j)| ContactDescriptor { n, i, j }).collect())
}

/// The triangle of `P_n` hanging below `(i, j)`: all `(k, l)` with
/// `0 ≤ k ≤ i` and `|l - j| ≤ i - k`.
pub fn subtriangle(n: i64, i: i64, j: i64) -> Result<Vec<(i64, i64)>> {
    ContactDescriptor::new(n, i, j)?;
    Ok(index_set(n)?
        .into_iter()
        .filter(|&(k, l)| k <= i && (l - j).abs() <= i - k)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StabSign {
    Positive,
    Negative,
}

impl StabSign {
    pub fn as_i64(self) -> i64 {
        match self {
            StabSign::Positive => 1,
            StabSign::Negative => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LegendrianPresentation {
    /// Twisting relative to the framing of `F` coming from the fibration.
    pub twisting: i64,
    pub rotation: i64,
    pub pos_stabs: i64,
    pub neg_stabs: i64,
    pub torsion_index: i64,
}

impl LegendrianPresentation {
    /// `F` itself in `(Y_∞, ξ_i)`: twisting `-i-1`, rotation 0.
    pub fn f_in_torsion(i: i64) -> Self {
        LegendrianPresentation { twisting: -i - 1, rotation: 0, pos_stabs: 0, neg_stabs: 0, torsion_index: i }
    }

    pub fn stabilize(self, sign: StabSign) -> Self {
        let mut p = self;
        p.twisting -= 1;
        p.rotation += sign.as_i64();
        match sign {
            StabSign::Positive => p.pos_stabs += 1,
            StabSign::Negative => p.neg_stabs += 1,
        }
        p
    }

    /// Legendrian surgery coefficient, `twisting - 1`.
    pub fn surgery_coefficient(&self) -> i64 {
        self.twisting - 1
    }

    pub fn descriptor(&self) -> Result<ContactDescriptor> {
        descriptor_from_stabs(self.torsion_index, self.pos_stabs, self.neg_stabs)
    }
}

pub fn stabilize(p: LegendrianPresentation, sign: StabSign) -> LegendrianPresentation {
    p.stabilize(sign)
}

pub fn descriptor_from_stabs(i: i64, l: i64, r: i64) -> Result<ContactDescriptor> {
    if i < 0 || l < 0 || r < 0 {
        return Err(invalid(format!("negative stabilization data ({i}, {l}, {r})")));
    }
    ContactDescriptor::new(l + r + i + 2, i, l - r)
}

/// Data of `F ⊂ (Y_∞, ξ_i)` needed to reach `Y_n` by Legendrian surgery.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FSurgeryData {
    pub twisting: i64,
    pub stabilizations: i64,
    pub surgery_coefficient: i64,
}

/// `tn(F, ξ_i) = -i-1`; surgery coefficient `-n` needs `n - i - 2`
/// stabilizations.
pub fn surgery_data_for_f(i: i64, n: i64) -> Result<FSurgeryData> {
    if i < 0 {
        return Err(invalid(format!("i = {i} must be nonnegative")));
    }
    if n < i + 2 {
        return Err(invalid(format!("Y_{n} is not reached from xi_{i}")));
    }
    let twisting = -i - 1;
    let stabilizations = n - i - 2;
    Ok(FSurgeryData { twisting, stabilizations, surgery_coefficient: twisting - stabilizations - 1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stage {
    /// `(Y_∞, ξ_i)`.
    Torsion { i: i64 },
    Eta(ContactDescriptor),
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stage::Torsion { i } => write!(f, "(Y_inf, xi_{i})"),
            Stage::Eta(d) => write!(f, "(Y_{}, {d})", d.n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Route {
    pub stages: [Stage; 3],
    /// Two-handles attached in each step.
    pub handles: [usize; 2],
}

/// The two factorizations of the surgery from `(Y_∞, ξ_{i+1})` to `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryFactorization {
    pub source: Stage,
    pub through_torsion: Route,
    pub through_eta: Route,
    pub target: ContactDescriptor,
}

pub fn factorizations(d: &ContactDescriptor) -> Result<SurgeryFactorization> {
    let d = ContactDescriptor::new(d.n, d.i, d.j)?;
    let source = Stage::Torsion { i: d.i + 1 };
    let up = ContactDescriptor::new(d.n + 1, d.i + 1, d.j)?;
    Ok(SurgeryFactorization {
        source,
        through_torsion: Route {
            stages: [source, Stage::Torsion { i: d.i }, Stage::Eta(d)],
            handles: [1, 1],
        },
        through_eta: Route { stages: [source, Stage::Eta(up), Stage::Eta(d)], handles: [1, 1] },
        target: d,
    })
}

/// One line of the census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: i64,
    pub i: i64,
    pub j: i64,
    pub l: i64,
    pub r: i64,
    pub twisting: i64,
    pub rotation: i64,
}

impl From<&ContactDescriptor> for CensusRecord {
    fn from(d: &ContactDescriptor) -> Self {
        let p = d.legendrian();
        CensusRecord {
            n: d.n,
            i: d.i,
            j: d.j,
            l: p.pos_stabs,
            r: p.neg_stabs,
            twisting: p.twisting,
            rotation: p.rotation,
        }
    }
}

pub fn census(n: i64) -> Result<Vec<CensusRecord>> {
    Ok(descriptors(n)?.iter().map(CensusRecord::from).collect())
}

/// `P_n` drawn as a triangle, apex `(n-2, 0)` on top, one row per `i`.
pub fn render_triangle(n: i64) -> Result<String> {
    let set = index_set(n)?;
    let cells: Vec<String> = set.iter().map(|(i, j)| format!("({i},{j})")).collect();
    let width = cells.iter().map(String::len).max().unwrap_or(0) + 1;
    let mut out = String::new();
    for i in (0..=n - 2).rev() {
        let mut line = String::new();
        for (&(ii, j), cell) in set.iter().zip(&cells) {
            if ii != i {
                continue;
            }
            // column slot (j + n - 2) keeps the display staggered
            let col = ((j + n - 2) as usize) * width;
            while line.len() < col {
                line.push(' ');
            }
            line.push_str(&format!("{cell:<width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}
