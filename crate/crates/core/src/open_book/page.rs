//! Page surfaces: `H_1` coordinates, the intersection form, named curves and
//! properly embedded arcs.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::homology::{smith_normal_form, IntegerMatrix};

/// What a curve is, as far as rewriting is concerned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurveKind {
    /// Parallel to a boundary component; its twist is central.
    BoundaryParallel,
    /// Parallel to the meridian of the torus page; meridians are pairwise
    /// disjoint.
    Meridian,
    /// Runs once along the longitude (`F`, `L`).
    Longitude,
    /// Boundary of a Hopf band added to stabilize a knot on the page.
    Stabilization,
    Interior,
}

impl CurveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CurveKind::BoundaryParallel => "boundary",
            CurveKind::Meridian => "meridian",
            CurveKind::Longitude => "longitude",
            CurveKind::Stabilization => "stabilization",
            CurveKind::Interior => "interior",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "boundary" => CurveKind::BoundaryParallel,
            "meridian" => CurveKind::Meridian,
            "longitude" => CurveKind::Longitude,
            "stabilization" => CurveKind::Stabilization,
            "interior" => CurveKind::Interior,
            _ => return None,
        })
    }

    /// Twists along curves of this kind commute with every twist.
    pub fn is_central(self) -> bool {
        matches!(self, CurveKind::BoundaryParallel | CurveKind::Stabilization)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Curve {
    pub name: String,
    pub class: Vec<i64>,
    pub kind: CurveKind,
}

/// A properly embedded arc, recorded by its algebraic intersection with each
/// basis class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub name: String,
    pub functional: Vec<i64>,
}

impl Arc {
    pub fn eval(&self, class: &[i64]) -> i64 {
        self.functional.iter().zip(class).map(|(f, x)| f * x).sum()
    }
}

/// A compact oriented surface with boundary. `H_1` has rank
/// `2·genus + boundary_count - 1` and the intersection form is an arbitrary
/// skew matrix in the chosen coordinates; its rank is `2·genus`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageSurface {
    pub genus: usize,
    pub boundary_count: usize,
    form: Vec<Vec<i64>>,
    curves: Vec<Curve>,
    arcs: Vec<Arc>,
    disjoint: BTreeSet<(String, String)>,
}

impl PageSurface {
    /// Basis `a_1, b_1, …, a_g, b_g, ∂_1, …, ∂_{b-1}` with `<a_k, b_k> = 1`
    /// and the boundary classes in the radical.
    pub fn standard(genus: usize, boundary_count: usize) -> Result<Self> {
        if boundary_count == 0 {
            return Err(invalid("a page needs at least one boundary component"));
        }
        let d = 2 * genus + boundary_count - 1;
        let mut form = vec![vec![0; d]; d];
        for k in 0..genus {
            form[2 * k][2 * k + 1] = 1;
            form[2 * k + 1][2 * k] = -1;
        }
        Ok(PageSurface { genus, boundary_count, form, curves: Vec::new(), arcs: Vec::new(), disjoint: BTreeSet::new() })
    }

    /// Builds a page from an explicit form, reading genus and boundary count
    /// off its rank.
    pub fn from_form(form: Vec<Vec<i64>>) -> Result<Self> {
        let d = form.len();
        for (i, row) in form.iter().enumerate() {
            if row.len() != d {
                return Err(invalid("intersection form must be square"));
            }
            for (j, &v) in row.iter().enumerate() {
                if form[j][i] != -v {
                    return Err(invalid(format!("form is not skew at ({i}, {j})")));
                }
            }
        }
        let rank = form_rank(&form);
        let genus = rank / 2;
        let boundary_count = d + 1 - 2 * genus;
        Ok(PageSurface { genus, boundary_count, form, curves: Vec::new(), arcs: Vec::new(), disjoint: BTreeSet::new() })
    }

    pub fn dim(&self) -> usize {
        self.form.len()
    }

    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count as i64
    }

    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                s += xi * self.form[i][j] * yj;
            }
        }
        s
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn curve(&self, name: &str) -> Result<&Curve> {
        self.curves.iter().find(|c| c.name == name).ok_or_else(|| Error::UnknownCurve(name.to_string()))
    }

    pub fn arc(&self, name: &str) -> Result<&Arc> {
        self.arcs
            .iter()
            .find(|a| a.name == name)
            .ok_or_else(|| Error::NotApplicable(format!("no arc named `{name}`")))
    }

    pub fn has_curve(&self, name: &str) -> bool {
        self.curves.iter().any(|c| c.name == name)
    }

    /// `<a, b>` for two named curves.
    pub fn curve_pairing(&self, a: &str, b: &str) -> Result<i64> {
        Ok(self.pairing(&self.curve(a)?.class, &self.curve(b)?.class))
    }

    pub fn add_curve(&mut self, name: &str, class: Vec<i64>, kind: CurveKind) -> Result<()> {
        check_name(name)?;
        if self.has_curve(name) {
            return Err(invalid(format!("duplicate curve `{name}`")));
        }
        if class.len() != self.dim() {
            return Err(invalid(format!(
                "curve `{name}` has {} coordinates, page has {}",
                class.len(),
                self.dim()
            )));
        }
        if class.iter().all(|&x| x == 0) {
            return Err(invalid(format!("curve `{name}` is null-homologous")));
        }
        if kind == CurveKind::BoundaryParallel {
            let zero = vec![0; self.dim()];
            let isolated = (0..self.dim()).all(|k| {
                let mut e = zero.clone();
                e[k] = 1;
                self.pairing(&class, &e) == 0
            });
            if !isolated {
                return Err(invalid(format!("boundary-parallel curve `{name}` pairs nontrivially")));
            }
        }
        self.curves.push(Curve { name: name.to_string(), class, kind });
        Ok(())
    }

    pub fn add_arc(&mut self, name: &str, functional: Vec<i64>) -> Result<()> {
        check_name(name)?;
        if self.arcs.iter().any(|a| a.name == name) {
            return Err(invalid(format!("duplicate arc `{name}`")));
        }
        if functional.len() != self.dim() {
            return Err(invalid(format!("arc `{name}` has the wrong number of coordinates")));
        }
        self.arcs.push(Arc { name: name.to_string(), functional });
        Ok(())
    }

    pub fn remove_curve(&mut self, name: &str) {
        self.curves.retain(|c| c.name != name);
        self.disjoint.retain(|(a, b)| a != name && b != name);
    }

    /// Records that two curves have disjoint representatives, so their twists
    /// commute even when neither kind is central.
    pub fn declare_disjoint(&mut self, a: &str, b: &str) -> Result<()> {
        if self.curve_pairing(a, b)? != 0 {
            return Err(invalid(format!("`{a}` and `{b}` intersect algebraically")));
        }
        self.disjoint.insert(ordered(a, b));
        Ok(())
    }

    pub fn disjoint_pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.disjoint.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }

    /// Whether twists along `a` and `b` are known to commute.
    pub fn commute(&self, a: &str, b: &str) -> Result<bool> {
        let (ca, cb) = (self.curve(a)?, self.curve(b)?);
        Ok(a == b
            || ca.kind.is_central()
            || cb.kind.is_central()
            || (ca.kind == CurveKind::Meridian && cb.kind == CurveKind::Meridian)
            || self.disjoint.contains(&ordered(a, b)))
    }

    pub fn rename_curve(&mut self, old: &str, new: &str, kind: CurveKind) -> Result<()> {
        check_name(new)?;
        if old != new && self.has_curve(new) {
            return Err(invalid(format!("duplicate curve `{new}`")));
        }
        let c = self.curves.iter_mut().find(|c| c.name == old).ok_or_else(|| Error::UnknownCurve(old.into()))?;
        c.name = new.to_string();
        c.kind = kind;
        let renamed = |x: &String| if x == old { new.to_string() } else { x.clone() };
        self.disjoint = self.disjoint.iter().map(|(a, b)| ordered(&renamed(a), &renamed(b))).collect();
        Ok(())
    }

    pub fn set_kind(&mut self, name: &str, kind: CurveKind) -> Result<()> {
        let c = self.curves.iter_mut().find(|c| c.name == name).ok_or_else(|| Error::UnknownCurve(name.into()))?;
        c.kind = kind;
        Ok(())
    }

    /// Skew table of pairings between the named curves, in roster order.
    pub fn pairing_table(&self) -> Vec<Vec<i64>> {
        self.curves
            .iter()
            .map(|a| self.curves.iter().map(|b| self.pairing(&a.class, &b.class)).collect())
            .collect()
    }

    /// Appends a basis vector whose pairings with the old basis are `row`.
    /// Existing curves and arcs get a zero coordinate.
    pub(crate) fn extend_basis(&mut self, row: &[i64]) {
        let d = self.dim();
        for (k, r) in self.form.iter_mut().enumerate() {
            r.push(-row[k]);
        }
        let mut last = row.to_vec();
        last.push(0);
        self.form.push(last);
        debug_assert_eq!(self.form.len(), d + 1);
        for c in &mut self.curves {
            c.class.push(0);
        }
        for a in &mut self.arcs {
            a.functional.push(0);
        }
        self.refresh_topology();
    }

    /// Restricts to `ker f` for an arc with `f_p = ±1`, dropping coordinate
    /// `p`. Curves and arcs that do not live in the kernel are discarded.
    pub(crate) fn restrict_to_kernel(&mut self, f: &[i64], p: usize) {
        let d = self.dim();
        let fp = f[p];
        // basis of ker f: e_k - f_p f_k e_p for k != p
        let basis: Vec<Vec<i64>> = (0..d)
            .filter(|&k| k != p)
            .map(|k| {
                let mut v = vec![0; d];
                v[k] = 1;
                v[p] -= fp * f[k];
                v
            })
            .collect();
        let form: Vec<Vec<i64>> =
            basis.iter().map(|x| basis.iter().map(|y| self.pairing(x, y)).collect()).collect();
        let drop = |v: &[i64]| -> Vec<i64> {
            v.iter().enumerate().filter(|&(k, _)| k != p).map(|(_, &x)| x).collect()
        };
        let eval = |v: &[i64]| -> i64 { f.iter().zip(v).map(|(a, b)| a * b).sum() };
        self.curves.retain(|c| eval(&c.class) == 0);
        let alive: BTreeSet<String> = self.curves.iter().map(|c| c.name.clone()).collect();
        self.disjoint.retain(|(a, b)| alive.contains(a) && alive.contains(b));
        for c in &mut self.curves {
            c.class = drop(&c.class);
        }
        // arcs restrict along the inclusion of ker f
        for a in &mut self.arcs {
            a.functional = basis.iter().map(|b| a.functional.iter().zip(b).map(|(x, y)| x * y).sum()).collect();
        }
        self.form = form;
        self.refresh_topology();
    }

    pub(crate) fn remove_arc(&mut self, name: &str) {
        self.arcs.retain(|a| a.name != name);
    }

    fn refresh_topology(&mut self) {
        let rank = form_rank(&self.form);
        self.genus = rank / 2;
        self.boundary_count = self.dim() + 1 - 2 * self.genus;
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        if self.boundary_count == 0 || d != 2 * self.genus + self.boundary_count - 1 {
            return Err(Error::Inconsistent(format!(
                "H_1 of genus {} with {} boundary components cannot have rank {d}",
                self.genus, self.boundary_count
            )));
        }
        if form_rank(&self.form) != 2 * self.genus {
            return Err(Error::Inconsistent("intersection form rank does not match the genus".into()));
        }
        let mut names = BTreeMap::new();
        for c in &self.curves {
            if names.insert(c.name.as_str(), ()).is_some() || c.class.len() != d {
                return Err(Error::Inconsistent(format!("bad curve `{}`", c.name)));
            }
        }
        Ok(())
    }
}

fn ordered(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '#') {
        return Err(invalid(format!("bad name `{name}`")));
    }
    Ok(())
}

fn form_rank(form: &[Vec<i64>]) -> usize {
    if form.is_empty() {
        return 0;
    }
    smith_normal_form(&IntegerMatrix::from_rows(form)).rank()
}
