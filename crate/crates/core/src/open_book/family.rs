//! The genus-one family: a torus page with holes along the meridian
//! direction, negative twists on meridians and positive twists around holes,
//! optional torsion blocks and stabilization holes for the knot `L`.

use serde::{Deserialize, Serialize};

use super::book::{
    destabilization_consistent, h1_action, hopf_destabilize, lantern_rewrite, slide, AbstractOpenBook, LanternSite,
    Region,
};
use super::page::{CurveKind, PageSurface};
use super::word::{Sign, Twist, TwistWord};
use crate::error::{Error, Result};
use crate::slope::UnimodularMatrix;

/// A 2×2 integer matrix of determinant 1.
pub type Sl2Matrix = UnimodularMatrix;

/// Crossing a negatively twisted meridian.
pub fn meridian_generator() -> Sl2Matrix {
    UnimodularMatrix::new(1, -1, 0, 1).unwrap()
}

/// Crossing a boundary circle carrying a positive twist.
pub fn boundary_generator() -> Sl2Matrix {
    UnimodularMatrix::new(1, 0, 1, 1).unwrap()
}

pub const BASE_PAIRS: usize = 5;
pub const BLOCK_REPEATS: usize = 4;

/// Boundary components of the page for the given parameters.
pub fn family_boundary_count(i: usize, l: usize, r: usize) -> usize {
    BASE_PAIRS + BLOCK_REPEATS * i + l + r
}

enum Slot {
    Hole(String, CurveKind),
    Meridian(String),
}

pub fn family_book(i: usize, l: usize, r: usize, with_surgery_twist: bool) -> AbstractOpenBook {
    let mut slots = Vec::new();
    let mut regions = Vec::new();
    for k in 1..=l {
        slots.push(Slot::Hole(format!("sl{k}"), CurveKind::Stabilization));
    }
    for k in 1..=r {
        slots.push(Slot::Hole(format!("sr{k}"), CurveKind::Stabilization));
    }
    regions.push(Region { name: "stabilization".into(), start: 0, end: slots.len() });
    let start = slots.len();
    for k in 1..=BASE_PAIRS {
        slots.push(Slot::Meridian(format!("m{k}")));
        slots.push(Slot::Hole(format!("h{k}"), CurveKind::BoundaryParallel));
    }
    regions.push(Region { name: "base".into(), start, end: slots.len() });
    for t in 1..=i {
        let start = slots.len();
        for q in 1..=BLOCK_REPEATS {
            slots.push(Slot::Hole(format!("t{t}h{q}"), CurveKind::BoundaryParallel));
            slots.push(Slot::Meridian(format!("t{t}m{q}a")));
            slots.push(Slot::Meridian(format!("t{t}m{q}b")));
        }
        regions.push(Region { name: format!("torsion{t}"), start, end: slots.len() });
    }

    let holes = family_boundary_count(i, l, r);
    let mut page = PageSurface::standard(1, holes).expect("at least one hole");
    let d = page.dim();
    let hole_class = |idx: usize| -> Vec<i64> {
        let mut v = vec![0; d];
        if idx + 1 < holes {
            v[2 + idx] = 1;
        } else {
            v[2..].iter_mut().for_each(|x| *x = -1);
        }
        v
    };
    let mut word = TwistWord::new();
    let mut layout = Vec::new();
    let mut swept = vec![0i64; d];
    let mut hole_idx = 0;
    let mut left = vec![0i64; d];
    for slot in &slots {
        match slot {
            Slot::Hole(name, kind) => {
                let c = hole_class(hole_idx);
                hole_idx += 1;
                for k in 0..d {
                    swept[k] += c[k];
                }
                if name.starts_with("sl") {
                    left.iter_mut().zip(&c).for_each(|(x, y)| *x += y);
                } else if name.starts_with("sr") {
                    left.iter_mut().zip(&c).for_each(|(x, y)| *x -= y);
                }
                page.add_curve(name, c, *kind).expect("fresh hole");
                word.push(Twist::pos(name));
                layout.push(name.clone());
            }
            Slot::Meridian(name) => {
                let mut c = swept.clone();
                c[0] += 1;
                page.add_curve(name, c, CurveKind::Meridian).expect("fresh meridian");
                word.push(Twist::neg(name));
                layout.push(name.clone());
            }
        }
    }
    let mut f = vec![0; d];
    f[1] = 1;
    page.add_curve("F", f, CurveKind::Longitude).expect("fresh F");
    left[1] += 1;
    page.add_curve("L", left, CurveKind::Longitude).expect("fresh L");
    if with_surgery_twist {
        word.push(Twist::pos("L"));
    }
    AbstractOpenBook { page, word, layout, regions, marker: Some("L".into()) }
}

/// Product of the walk generators over `layout[start..end]`, left to right.
fn walk(b: &AbstractOpenBook, start: usize, end: usize) -> Result<Sl2Matrix> {
    let mut m = UnimodularMatrix::identity();
    let pow = |g: &Sl2Matrix, e: i64| -> Sl2Matrix {
        let base = if e < 0 { g.inverse() } else { g.clone() };
        (0..e.unsigned_abs()).fold(UnimodularMatrix::identity(), |acc, _| acc.mul(&base))
    };
    for name in &b.layout[start..end] {
        let c = b.page.curve(name)?;
        let e = b.word.exponent(name);
        match c.kind {
            CurveKind::Meridian => m = m.mul(&pow(&meridian_generator(), -e)),
            CurveKind::BoundaryParallel => m = m.mul(&pow(&boundary_generator(), e)),
            CurveKind::Stabilization => {}
            k => {
                return Err(Error::NotApplicable(format!("`{name}` of kind {} cannot lie on the walk", k.as_str())))
            }
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonodromyReport {
    pub product: Sl2Matrix,
    pub target: Sl2Matrix,
    /// `C` with `C · product · C⁻¹ = target`, when one was found.
    pub conjugator: Option<Sl2Matrix>,
    pub regions: Vec<(String, Sl2Matrix)>,
}

impl MonodromyReport {
    pub fn is_conjugate_to_target(&self) -> bool {
        self.conjugator.is_some()
    }
}

/// Walks once around the longitude of a torus-family book, one generator per
/// negatively twisted meridian and one per positively twisted boundary
/// circle. Stabilization holes are passed without a generator.
pub fn torus_bundle_monodromy(b: &AbstractOpenBook) -> Result<MonodromyReport> {
    if b.layout.is_empty() || b.page.genus != 1 {
        return Err(Error::NotApplicable("book is outside the torus family".into()));
    }
    for t in b.word.twists() {
        if !b.layout.contains(&t.curve) {
            return Err(Error::NotApplicable(format!("twist along `{}` is off the walk", t.curve)));
        }
    }
    let product = walk(b, 0, b.layout.len())?;
    debug_assert_eq!(product.det(), 1.into());
    let regions = b
        .regions
        .iter()
        .map(|r| walk(b, r.start, r.end).map(|m| (r.name.clone(), m)))
        .collect::<Result<Vec<_>>>()?;
    let target = UnimodularMatrix::trefoil_monodromy();
    let conjugator = find_conjugator(&product, &target, 4);
    Ok(MonodromyReport { product, target, conjugator, regions })
}

/// Smallest-entry `C ∈ SL(2,Z)` with `C·p·C⁻¹ = q`, entries bounded by `bound`.
pub fn find_conjugator(p: &Sl2Matrix, q: &Sl2Matrix, bound: i64) -> Option<Sl2Matrix> {
    if p.trace() != q.trace() {
        return None;
    }
    if p == q {
        return Some(UnimodularMatrix::identity());
    }
    for size in 0..=bound {
        for a in -size..=size {
            for b in -size..=size {
                for c in -size..=size {
                    for d in -size..=size {
                        if [a, b, c, d].iter().map(|x| x.abs()).max() != Some(size) || a * d - b * c != 1 {
                            continue;
                        }
                        let m = UnimodularMatrix::new(a, b, c, d).unwrap();
                        if &m.mul(p).mul(&m.inverse()) == q {
                            return Some(m);
                        }
                    }
                }
            }
        }
    }
    None
}

/// The twist along the marker removed, so the walk applies.
pub fn without_surgery_twist(b: &AbstractOpenBook) -> AbstractOpenBook {
    let mut out = b.clone();
    if let Some(m) = &b.marker {
        out.word.0.retain(|t| &t.curve != m);
    }
    out
}

/// Outcome of trading `m⁻ h⁺ σ⁻ h'⁺ m'⁻` for `m⁻ m⁻ h''⁺ m'⁻ m'⁻`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidMove {
    pub before: AbstractOpenBook,
    pub after: AbstractOpenBook,
    pub steps: Vec<String>,
    /// Lantern site used, on the intermediate page.
    pub site: LanternSite,
    pub lantern_preserved_action: bool,
    pub destabilization_consistent: bool,
    pub marker_class_preserved: bool,
    pub walk_preserved: bool,
}

impl BraidMove {
    pub fn holds(&self) -> bool {
        self.lantern_preserved_action
            && self.destabilization_consistent
            && self.marker_class_preserved
            && self.walk_preserved
            && self.after.euler_characteristic() == self.before.euler_characteristic() + 1
    }
}

/// Adds the two interior lantern curves for the meridian-hole-meridian-hole-
/// meridian stretch at `layout[start..start + 5]` and registers the site.
pub fn braid_site(b: &AbstractOpenBook, start: usize) -> Result<(AbstractOpenBook, LanternSite)> {
    let names: Vec<String> = b
        .layout
        .get(start..start + 5)
        .ok_or_else(|| Error::NotApplicable("stretch leaves the layout".into()))?
        .to_vec();
    let kinds: Vec<CurveKind> = names.iter().map(|n| b.page.curve(n).map(|c| c.kind)).collect::<Result<_>>()?;
    use CurveKind::{BoundaryParallel as H, Meridian as M};
    if kinds != [M, H, M, H, M] {
        return Err(Error::NotApplicable(format!("layout at {start} is not meridian/hole alternating")));
    }
    let (ml, ha, sigma, hb, mr) = (&names[0], &names[1], &names[2], &names[3], &names[4]);
    let cls = |n: &str| b.page.curve(n).map(|c| c.class.clone());
    let (ea, eb, eml) = (cls(ha)?, cls(hb)?, cls(ml)?);
    let s1: Vec<i64> = ea.iter().zip(&eb).map(|(x, y)| x + y).collect();
    let s2: Vec<i64> = eb.iter().zip(&eml).map(|(x, y)| x + y).collect();
    let mut out = b.clone();
    let (n1, n2) = (format!("{ha}{hb}"), format!("{hb}{ml}"));
    out.page.add_curve(&n1, s1, CurveKind::Interior)?;
    out.page.add_curve(&n2, s2, CurveKind::Interior)?;
    let site = LanternSite::new([ha, hb, ml, mr], [sigma, &n1, &n2]);
    site.register(&mut out.page)?;
    Ok((out, site))
}

pub fn braid_move(b: &AbstractOpenBook, start: usize) -> Result<BraidMove> {
    let (mut book, site) = braid_site(b, start)?;
    let [ha, hb, ml, mr] = site.boundary.clone();
    let [sigma, s1, s2] = site.interior.clone();
    let mut steps = Vec::new();
    let q = book
        .word
        .position(&Twist::neg(&ml))
        .ok_or_else(|| Error::NotApplicable(format!("no negative twist along `{ml}`")))?;
    let expect = [Twist::neg(&ml), Twist::pos(&ha), Twist::neg(&sigma), Twist::pos(&hb), Twist::neg(&mr)];
    if book.word.twists().get(q..q + 5) != Some(&expect[..]) {
        return Err(Error::NotApplicable("the five twists are not contiguous".into()));
    }
    let action0 = h1_action(&book)?;

    book.word = slide(&book.page, &book.word, q + 1, q + 2)?;
    steps.push(format!("commute: {}", book.word));
    book.word = book.word.insert_cancelling(q + 4, &ml, Sign::Positive)?;
    book.word = book.word.insert_cancelling(q + 5, &mr, Sign::Positive)?;
    steps.push(format!("insert cancelling pairs: {}", book.word));
    book.word = lantern_rewrite(&book.page, &book.word, &site)?;
    steps.push(format!("lantern: {}", book.word));
    let lantern_preserved_action = h1_action(&book)? == action0;
    book.word = book.word.free_reduce();
    steps.push(format!("cancel: {}", book.word));
    // m⁻ s1 s2 m'⁻ m⁻ m'⁻ → m⁻ m⁻ s1 s2 m'⁻ m'⁻
    book.word = slide(&book.page, &book.word, q + 4, q + 1)?;
    steps.push(format!("commute: {}", book.word));

    let d = book.page.dim();
    let mut f = vec![0; d];
    let hole_coord = |n: &str| -> Result<Option<usize>> {
        let c = &book.page.curve(n)?.class;
        Ok(c.iter().position(|&x| x == 1).filter(|_| c.iter().filter(|&&x| x != 0).count() == 1))
    };
    let (pa, pb) = (hole_coord(&ha)?, hole_coord(&hb)?);
    if let Some(p) = pa {
        f[p] = 1;
    }
    if let Some(p) = pb {
        f[p] = -1;
    }
    if pa.is_none() && pb.is_none() {
        return Err(Error::Inconsistent("both holes are the dependent boundary class".into()));
    }
    let arc = format!("{ha}-{hb}");
    book.page.add_arc(&arc, f)?;
    // the merged hole keeps the second hole's slot on the walk
    for n in book.layout.iter_mut().filter(|n| **n == hb) {
        *n = s1.clone();
    }
    let destab = hopf_destabilize(&book, &arc)?;
    if destab.curve != s2 {
        return Err(Error::Inconsistent(format!("destabilized `{}` instead of `{s2}`", destab.curve)));
    }
    let destabilization_consistent = destabilization_consistent(&book, &arc, &destab)?;
    let mut after = destab.book;
    after.page.rename_curve(&s1, &hb, CurveKind::BoundaryParallel)?;
    after.word.0.iter_mut().filter(|t| t.curve == s1).for_each(|t| t.curve = hb.clone());
    steps.push(format!("destabilize along {s2}: {}", after.word));

    for n in after.layout.iter_mut().filter(|n| **n == s1) {
        *n = hb.clone();
    }
    after.validate()?;

    let marker_class_preserved = match &b.marker {
        Some(m) => {
            let old: Vec<i64> = b
                .page
                .curve(m)?
                .class
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != destab.dropped)
                .map(|(_, &x)| x)
                .collect();
            after.page.curve(m).map(|c| c.class == old).unwrap_or(false)
        }
        None => true,
    };
    let walk_preserved = torus_bundle_monodromy(&without_surgery_twist(b))?.product
        == torus_bundle_monodromy(&without_surgery_twist(&after))?.product;
    Ok(BraidMove {
        before: b.clone(),
        after,
        steps,
        site,
        lantern_preserved_action,
        destabilization_consistent,
        marker_class_preserved,
        walk_preserved,
    })
}

/// Product of the walk over each torsion block.
pub fn torsion_block_products(b: &AbstractOpenBook) -> Result<Vec<Sl2Matrix>> {
    b.regions.iter().filter(|r| r.name.starts_with("torsion")).map(|r| walk(b, r.start, r.end)).collect()
}
