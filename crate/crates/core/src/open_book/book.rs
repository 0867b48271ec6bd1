use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::page::{CurveKind, PageSurface};
use super::word::{Sign, Twist, TwistWord};
use crate::error::{invalid, Error, Result};
use crate::homology::IntegerMatrix;

/// A contiguous stretch of the layout, e.g. one torsion block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub name: String,
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbstractOpenBook {
    pub page: PageSurface,
    pub word: TwistWord,
    /// Cyclic order in which meridians and boundary circles are met when
    /// walking once around the longitude. Empty outside the torus family.
    pub layout: Vec<String>,
    pub regions: Vec<Region>,
    /// Distinguished knot on the page (`L` in the torus family).
    pub marker: Option<String>,
}

impl AbstractOpenBook {
    pub fn new(page: PageSurface, word: TwistWord) -> Result<Self> {
        let b = AbstractOpenBook { page, word, layout: Vec::new(), regions: Vec::new(), marker: None };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        self.page.validate()?;
        for t in self.word.twists() {
            self.page.curve(&t.curve)?;
        }
        for name in &self.layout {
            self.page.curve(name)?;
        }
        for r in &self.regions {
            if r.start > r.end || r.end > self.layout.len() {
                return Err(Error::Inconsistent(format!("region `{}` leaves the layout", r.name)));
            }
        }
        if let Some(m) = &self.marker {
            self.page.curve(m)?;
        }
        Ok(())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.page.euler_characteristic()
    }

    pub fn region(&self, name: &str) -> Option<&Region> {
        self.regions.iter().find(|r| r.name == name)
    }
}

pub fn euler_characteristic(b: &AbstractOpenBook) -> i64 {
    b.euler_characteristic()
}

/// `x ↦ x + s<x, c>c` as a matrix acting on column vectors.
pub fn transvection(page: &PageSurface, class: &[i64], sign: Sign) -> IntegerMatrix {
    let d = page.dim();
    let form = page.form();
    let mut m = IntegerMatrix::identity(d);
    // <x, c> = sum_k x_k (Ωc)_k
    let omega_c: Vec<i64> = (0..d).map(|k| (0..d).map(|j| form[k][j] * class[j]).sum()).collect();
    let s = sign.value();
    for i in 0..d {
        if class[i] == 0 {
            continue;
        }
        for k in 0..d {
            if omega_c[k] != 0 {
                m[(i, k)] += BigInt::from(s * class[i] * omega_c[k]);
            }
        }
    }
    m
}

/// Action of the word on `H_1` of the page: `T_{w_k} ⋯ T_{w_1}`.
pub fn word_action(page: &PageSurface, word: &TwistWord) -> Result<IntegerMatrix> {
    let mut m = IntegerMatrix::identity(page.dim());
    for t in word.twists() {
        let c = page.curve(&t.curve)?;
        m = transvection(page, &c.class, t.sign).mul(&m);
    }
    Ok(m)
}

pub fn h1_action(b: &AbstractOpenBook) -> Result<IntegerMatrix> {
    word_action(&b.page, &b.word)
}

/// `T_a T_b T_a = T_b T_a T_b` on `H_1`. Curves meeting algebraically other
/// than once are reported as not applicable.
pub fn braid_relation_check(page: &PageSurface, a: &str, b: &str) -> Result<bool> {
    let p = page.curve_pairing(a, b)?;
    if p.abs() != 1 {
        return Err(Error::NotApplicable(format!("<{a}, {b}> = {p}, the braid relation needs ±1")));
    }
    let aba = TwistWord::from_twists([Twist::pos(a), Twist::pos(b), Twist::pos(a)]);
    let bab = TwistWord::from_twists([Twist::pos(b), Twist::pos(a), Twist::pos(b)]);
    Ok(word_action(page, &aba)? == word_action(page, &bab)?)
}

/// Every unordered pair of registered curves with pairing ±1, with the
/// braid-relation verdict.
pub fn braid_pairs(page: &PageSurface) -> Vec<(String, String, bool)> {
    let cs = page.curves();
    let mut out = Vec::new();
    for (x, a) in cs.iter().enumerate() {
        for b in &cs[x + 1..] {
            if page.pairing(&a.class, &b.class).abs() == 1 {
                let ok = braid_relation_check(page, &a.name, &b.name).unwrap_or(false);
                out.push((a.name.clone(), b.name.clone(), ok));
            }
        }
    }
    out
}

/// Swaps the twists at `pos` and `pos + 1` if they are known to commute.
pub fn commute(page: &PageSurface, word: &TwistWord, pos: usize) -> Result<TwistWord> {
    let w = word.twists();
    if pos + 1 >= w.len() {
        return Err(Error::NotApplicable(format!("no adjacent pair at {pos}")));
    }
    if !page.commute(&w[pos].curve, &w[pos + 1].curve)? {
        return Err(Error::NotApplicable(format!("{} and {} need not commute", w[pos], w[pos + 1])));
    }
    word.swapped(pos)
}

/// Moves the twist at `from` to `to` by repeated commutation.
pub fn slide(page: &PageSurface, word: &TwistWord, from: usize, to: usize) -> Result<TwistWord> {
    let mut w = word.clone();
    let mut k = from;
    while k < to {
        w = commute(page, &w, k)?;
        k += 1;
    }
    while k > to {
        w = commute(page, &w, k - 1)?;
        k -= 1;
    }
    Ok(w)
}

/// A 4-holed sphere on the page: boundary curves `∂_1..∂_4` and interior
/// curves `σ_1, σ_2, σ_3`, with `∂_1∂_2∂_3∂_4 = σ_1σ_2σ_3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LanternSite {
    pub boundary: [String; 4],
    pub interior: [String; 3],
}

impl LanternSite {
    pub fn new(boundary: [&str; 4], interior: [&str; 3]) -> Self {
        LanternSite { boundary: boundary.map(String::from), interior: interior.map(String::from) }
    }

    /// Checks the homological shadow of the planar configuration: for some
    /// orientation of the boundary classes `e_k`, `Σ e_k = 0` and, up to a
    /// cyclic relabeling, `σ_1 = ±(e_1+e_2)`, `σ_2 = ±(e_2+e_3)`,
    /// `σ_3 = ±(e_1+e_3)`.
    pub fn validate(&self, page: &PageSurface) -> Result<()> {
        let e: Vec<&[i64]> =
            self.boundary.iter().map(|n| page.curve(n).map(|c| c.class.as_slice())).collect::<Result<_>>()?;
        let s: Vec<&[i64]> =
            self.interior.iter().map(|n| page.curve(n).map(|c| c.class.as_slice())).collect::<Result<_>>()?;
        let all: Vec<&[i64]> = e.iter().chain(&s).copied().collect();
        for (x, a) in all.iter().enumerate() {
            for b in &all[x + 1..] {
                if page.pairing(a, b) != 0 {
                    return Err(invalid("lantern curves must be pairwise algebraically disjoint"));
                }
            }
        }
        let d = page.dim();
        let add = |x: &[i64], y: &[i64], sx: i64, sy: i64| -> Vec<i64> {
            (0..d).map(|k| sx * x[k] + sy * y[k]).collect()
        };
        let up_to_sign = |x: &[i64], y: &[i64]| x == y || x.iter().zip(y).all(|(a, b)| *a == -*b);
        for signs in 0..16u32 {
            let sg: Vec<i64> = (0..4).map(|k| if signs >> k & 1 == 1 { -1 } else { 1 }).collect();
            let total: Vec<i64> = (0..d).map(|k| (0..4).map(|m| sg[m] * e[m][k]).sum()).collect();
            if total.iter().any(|&x| x != 0) {
                continue;
            }
            let want = [add(e[0], e[1], sg[0], sg[1]), add(e[1], e[2], sg[1], sg[2]), add(e[0], e[2], sg[0], sg[2])];
            for rot in 0..3 {
                if (0..3).all(|k| up_to_sign(s[(k + rot) % 3], &want[k])) {
                    return Ok(());
                }
            }
        }
        Err(invalid("curves do not bound a lantern configuration"))
    }

    /// Registers the disjointness that holds inside the sphere: each boundary
    /// curve misses every other curve of the site.
    pub fn register(&self, page: &mut PageSurface) -> Result<()> {
        self.validate(page)?;
        for b in &self.boundary {
            for c in self.boundary.iter().chain(&self.interior) {
                if b != c {
                    page.declare_disjoint(b, c)?;
                }
            }
        }
        Ok(())
    }
}

/// Replaces one side of the lantern relation by the other. The boundary side
/// may appear in any order since those twists commute; the interior side
/// must appear as written.
pub fn lantern_rewrite(page: &PageSurface, word: &TwistWord, site: &LanternSite) -> Result<TwistWord> {
    site.validate(page)?;
    let w = word.twists();
    let positive = |t: &Twist| t.sign == Sign::Positive;
    for start in 0..w.len() {
        if start + 4 <= w.len() {
            let win = &w[start..start + 4];
            let mut names: Vec<&str> = win.iter().map(|t| t.curve.as_str()).collect();
            names.sort_unstable();
            let mut want: Vec<&str> = site.boundary.iter().map(String::as_str).collect();
            want.sort_unstable();
            if win.iter().all(positive) && names == want {
                let mut v = w[..start].to_vec();
                v.extend(site.interior.iter().map(|n| Twist::pos(n)));
                v.extend_from_slice(&w[start + 4..]);
                return Ok(TwistWord(v));
            }
        }
        if start + 3 <= w.len() {
            let win = &w[start..start + 3];
            if win.iter().all(positive) && win.iter().zip(&site.interior).all(|(t, n)| &t.curve == n) {
                let mut v = w[..start].to_vec();
                v.extend(site.boundary.iter().map(|n| Twist::pos(n)));
                v.extend_from_slice(&w[start + 3..]);
                return Ok(TwistWord(v));
            }
        }
    }
    Err(Error::NotApplicable("no contiguous lantern site in the word".into()))
}

/// Plumbs a positive Hopf band along `arc`. The band core `name` gets a new
/// coordinate whose pairings with the old basis are the arc's intersection
/// numbers, a positive twist along it is appended, and its cocore is
/// registered as the arc `name~` for destabilization.
pub fn hopf_stabilize(b: &AbstractOpenBook, arc: &str, name: &str) -> Result<AbstractOpenBook> {
    let f = b.page.arc(arc)?.functional.clone();
    let mut out = b.clone();
    out.page.extend_basis(&f);
    let d = out.page.dim();
    let mut class = vec![0; d];
    class[d - 1] = 1;
    // a band joining two boundary circles makes their parallels essential
    let stale: Vec<String> = out
        .page
        .curves()
        .iter()
        .filter(|c| c.kind.is_central() && out.page.pairing(&c.class, &class) != 0)
        .map(|c| c.name.clone())
        .collect();
    for n in stale {
        out.page.set_kind(&n, CurveKind::Interior)?;
    }
    out.page.add_curve(name, class.clone(), CurveKind::Interior)?;
    out.page.add_arc(&format!("{name}~"), class)?;
    out.word.push(Twist::pos(name));
    Ok(out)
}

/// Result of a destabilization: the smaller book and the curve whose band
/// was removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Destabilization {
    pub book: AbstractOpenBook,
    pub curve: String,
    /// Coordinate dropped from the old basis.
    pub dropped: usize,
}

/// Removes the Hopf band cut by `arc`: the word must contain exactly one
/// twist, positive, along a curve the arc crosses once, and every other
/// twisted curve must miss the arc.
pub fn hopf_destabilize(b: &AbstractOpenBook, arc: &str) -> Result<Destabilization> {
    let f = b.page.arc(arc)?.functional.clone();
    let a = b.page.arc(arc)?;
    let mut core: Option<(usize, &Twist)> = None;
    for (k, t) in b.word.twists().iter().enumerate() {
        let v = a.eval(&b.page.curve(&t.curve)?.class);
        match v {
            0 => {}
            1 | -1 if core.is_none() && t.sign == Sign::Positive => core = Some((k, t)),
            _ => {
                return Err(Error::NotApplicable(format!("arc `{arc}` is not a destabilizing arc for this word")))
            }
        }
    }
    let (pos, twist) = core.ok_or_else(|| Error::NotApplicable(format!("arc `{arc}` crosses no twisted curve")))?;
    let p = f.iter().position(|x| x.abs() == 1).ok_or_else(|| Error::Inconsistent("arc functional is not primitive".into()))?;
    let curve = twist.curve.clone();
    let mut out = b.clone();
    let mut v = out.word.0.clone();
    v.remove(pos);
    out.word = TwistWord(v);
    out.page.remove_arc(arc);
    out.page.restrict_to_kernel(&f, p);
    let alive = |n: &String| out.page.has_curve(n);
    let removed: Vec<usize> = (0..out.layout.len()).filter(|&k| !alive(&out.layout[k])).collect();
    let shift = |x: usize| x - removed.iter().filter(|&&k| k < x).count();
    for r in &mut out.regions {
        r.start = shift(r.start);
        r.end = shift(r.end);
    }
    out.layout.retain(|n| alive(n));
    if out.marker.as_ref().is_some_and(|m| !alive(m)) {
        out.marker = None;
    }
    out.validate()?;
    Ok(Destabilization { book: out, curve, dropped: p })
}

/// Tries every registered arc.
pub fn destabilize_any(b: &AbstractOpenBook) -> Result<Destabilization> {
    for a in b.page.arcs() {
        if let Ok(d) = hopf_destabilize(b, &a.name) {
            return Ok(d);
        }
    }
    Err(Error::NotApplicable("no destabilizing configuration found".into()))
}

/// Columns are the old coordinates of the new basis of `ker f`.
pub fn kernel_inclusion(f: &[i64], p: usize) -> IntegerMatrix {
    let d = f.len();
    let mut m = IntegerMatrix::zeros(d, d - 1);
    for (col, k) in (0..d).filter(|&k| k != p).enumerate() {
        m[(k, col)] = BigInt::from(1);
        m[(p, col)] = BigInt::from(-f[p] * f[k]);
    }
    m
}

/// Away from the band the monodromy is unchanged: the old word with the
/// core twist deleted, restricted along `ker f ⊂ H_1`, equals the new action.
pub fn destabilization_consistent(before: &AbstractOpenBook, arc: &str, after: &Destabilization) -> Result<bool> {
    let f = before.page.arc(arc)?.functional.clone();
    let mut rest = before.word.clone();
    let pos = rest.position(&Twist::pos(&after.curve)).ok_or_else(|| Error::UnknownCurve(after.curve.clone()))?;
    rest.0.remove(pos);
    let k = kernel_inclusion(&f, after.dropped);
    let lhs = word_action(&before.page, &rest)?.mul(&k);
    let rhs = k.mul(&h1_action(&after.book)?);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> PageSurface {
        let mut p = PageSurface::standard(1, 1).unwrap();
        p.add_curve("a", vec![1, 0], CurveKind::Meridian).unwrap();
        p.add_curve("b", vec![0, 1], CurveKind::Longitude).unwrap();
        p
    }

    #[test]
    fn single_twist_is_unipotent() {
        let m = word_action(&torus(), &TwistWord::parse("a+").unwrap()).unwrap();
        assert_eq!(m, IntegerMatrix::from_i64(&[&[1, -1], &[0, 1]]));
    }

    #[test]
    fn boundary_twist_is_trivial() {
        let mut p = PageSurface::standard(1, 2).unwrap();
        p.add_curve("d", vec![0, 0, 1], CurveKind::BoundaryParallel).unwrap();
        assert_eq!(word_action(&p, &TwistWord::parse("d+ d+").unwrap()).unwrap(), IntegerMatrix::identity(3));
    }

    #[test]
    fn trefoil_book() {
        let b = AbstractOpenBook::new(torus(), TwistWord::parse("a+ b+").unwrap()).unwrap();
        let m = h1_action(&b).unwrap();
        assert_eq!(m.det(), BigInt::from(1));
        assert_eq!(&m[(0, 0)] + &m[(1, 1)], BigInt::from(1));
        assert!(m.sub(&IntegerMatrix::identity(2)).is_unimodular());
    }

    #[test]
    fn braid_relation() {
        let mut p = torus();
        assert!(braid_relation_check(&p, "a", "b").unwrap());
        assert!(braid_relation_check(&p, "b", "a").unwrap());
        p.add_curve("a2", vec![1, 0], CurveKind::Meridian).unwrap();
        assert!(matches!(braid_relation_check(&p, "a", "a2"), Err(Error::NotApplicable(_))));
        assert!(braid_pairs(&p).iter().all(|x| x.2));
    }

    #[test]
    fn planar_lantern() {
        let mut p = PageSurface::standard(0, 4).unwrap();
        for (k, c) in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]].into_iter().enumerate() {
            p.add_curve(&format!("d{}", k + 1), c.to_vec(), CurveKind::BoundaryParallel).unwrap();
        }
        p.add_curve("s1", vec![1, 1, 0], CurveKind::Interior).unwrap();
        p.add_curve("s2", vec![0, 1, 1], CurveKind::Interior).unwrap();
        p.add_curve("s3", vec![1, 0, 1], CurveKind::Interior).unwrap();
        let site = LanternSite::new(["d1", "d2", "d3", "d4"], ["s1", "s2", "s3"]);
        let w = TwistWord::parse("s1+ s2+ s3+").unwrap();
        let back = lantern_rewrite(&p, &w, &site).unwrap();
        assert_eq!(back.to_string(), "d1+ d2+ d3+ d4+");
        assert_eq!(lantern_rewrite(&p, &back, &site).unwrap(), w);
        assert!(lantern_rewrite(&p, &TwistWord::parse("s1+ s3+").unwrap(), &site).is_err());
        let bad = LanternSite::new(["d1", "d2", "d3", "d4"], ["s1", "s1", "s3"]);
        assert!(bad.validate(&p).is_err());
    }

    #[test]
    fn disk_stabilizes_to_annulus() {
        let mut page = PageSurface::standard(0, 1).unwrap();
        page.add_arc("x", vec![]).unwrap();
        let disk = AbstractOpenBook::new(page, TwistWord::new()).unwrap();
        assert_eq!(disk.euler_characteristic(), 1);
        let ann = hopf_stabilize(&disk, "x", "c").unwrap();
        assert_eq!((ann.page.genus, ann.page.boundary_count), (0, 2));
        assert_eq!(ann.euler_characteristic(), 0);
        assert_eq!(ann.word.to_string(), "c+");
        let back = destabilize_any(&ann).unwrap();
        assert_eq!(back.book.page.dim(), 0);
        assert_eq!(back.book.word, disk.word);
        assert!(destabilization_consistent(&ann, "c~", &back).unwrap());
    }

    #[test]
    fn stabilizing_across_boundaries_raises_genus() {
        let mut page = PageSurface::standard(0, 2).unwrap();
        page.add_curve("d", vec![1], CurveKind::BoundaryParallel).unwrap();
        page.add_arc("across", vec![1]).unwrap();
        let b = AbstractOpenBook::new(page, TwistWord::parse("d+").unwrap()).unwrap();
        let s = hopf_stabilize(&b, "across", "g").unwrap();
        assert_eq!((s.page.genus, s.page.boundary_count), (1, 1));
        assert_eq!(s.euler_characteristic(), b.euler_characteristic() - 1);
        let d = hopf_destabilize(&s, "g~").unwrap();
        assert_eq!((d.book.page.genus, d.book.page.boundary_count), (0, 2));
        assert_eq!(d.book.word, b.word);
        assert!(destabilization_consistent(&s, "g~", &d).unwrap());
    }
}
