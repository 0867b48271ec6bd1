//! Property suites behind `tight-brieskorn verify`. Per-n sweeps run on the
//! rayon pool; results come back in index order so output is reproducible.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::census::{self, ContactDescriptor};
use crate::homology::{
    cobordism_kernel, h1_of_surgery, h1_torus_bundle, ksequence_rank_check, smith_normal_form, AbelianGroupSpec,
    CobordismPresentation, IntegerMatrix, PlumbingGraph,
};
use crate::invariant::{self as grading, HalfLaurent, InvariantVector};
use crate::invariant;
use crate::open_book::{
    braid_move, braid_pairs, braid_site, family_book, h1_action, hopf_destabilize, hopf_stabilize, lantern_rewrite,
    torsion_block_products, torus_bundle_monodromy, AbstractOpenBook, LanternSite, Twist, TwistWord, BASE_PAIRS,
};
use crate::slope::{self, Slope, UnimodularMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
pub enum Suite {
    All,
    Census,
    Invariants,
    Slopes,
    Homology,
    Openbook,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Census => "census",
            Suite::Invariants => "invariants",
            Suite::Slopes => "slopes",
            Suite::Homology => "homology",
            Suite::Openbook => "openbook",
        }
    }

    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Census, Suite::Invariants, Suite::Slopes, Suite::Homology, Suite::Openbook],
            s => vec![s],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    /// Counterexample or summary.
    pub detail: String,
}

impl Check {
    fn new(suite: Suite, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { suite: suite.name(), name: name.into(), passed, detail: detail.into() }
    }

    fn from_result(suite: Suite, name: impl Into<String>, r: Result<(), String>) -> Self {
        match r {
            Ok(()) => Check::new(suite, name, true, ""),
            Err(e) => Check::new(suite, name, false, e),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "ok  " } else { "FAIL" };
        write!(f, "{tag} {}::{}", self.suite, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn count(&self, suite: &str) -> (usize, usize) {
        let mine: Vec<&Check> = self.checks.iter().filter(|c| c.suite == suite).collect();
        (mine.iter().filter(|c| c.passed).count(), mine.len())
    }
}

pub fn run(suite: Suite, max_n: i64) -> Report {
    let max_n = max_n.max(2);
    let mut checks = Vec::new();
    for s in suite.members() {
        checks.extend(match s {
            Suite::Census => census_suite(max_n),
            Suite::Invariants => invariant_suite(max_n),
            Suite::Slopes => slope_suite(max_n),
            Suite::Homology => homology_suite(max_n),
            Suite::Openbook => openbook_suite(max_n),
            Suite::All => unreachable!(),
        });
    }
    Report { checks }
}

fn sweep<F>(lo: i64, hi: i64, f: F) -> Vec<Check>
where
    F: Fn(i64) -> Check + Sync + Send,
{
    (lo..=hi).into_par_iter().map(f).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Rows of `P_5` as drawn in the census display, top row first.
pub const CENSUS_FIVE_ROWS: [(i64, &[i64]); 4] = [(3, &[0]), (2, &[-1, 1]), (1, &[-2, 0, 2]), (0, &[-3, -1, 1, 3])];

pub fn census_rows_match(n: i64, rows: &[(i64, &[i64])]) -> Result<(), String> {
    let set = census::index_set(n).map_err(|e| e.to_string())?;
    for (i, js) in rows {
        let got: Vec<i64> = set.iter().filter(|p| p.0 == *i).map(|p| p.1).collect();
        ensure(got == *js, || format!("row i={i} is {got:?}, expected {js:?}"))?;
    }
    ensure(set.len() == rows.iter().map(|r| r.1.len()).sum::<usize>(), || "extra rows".into())
}

fn census_for(n: i64) -> Result<(), String> {
    let set = census::index_set(n).map_err(|e| e.to_string())?;
    ensure(set.len() as i64 == n * (n - 1) / 2, || format!("|P_{n}| = {}", set.len()))?;
    for &(i, j) in &set {
        let d = ContactDescriptor::new(n, i, j).map_err(|e| e.to_string())?;
        let (l, r) = d.stabilizations();
        let back = census::descriptor_from_stabs(i, l, r).map_err(|e| e.to_string())?;
        ensure(back == d, || format!("stabilizations of {d} give {back}"))?;
        ensure(d.legendrian().surgery_coefficient() == -n, || format!("{d}: surgery coefficient"))?;
        ensure(d.conjugate().conjugate() == d, || format!("{d}: conjugation is not an involution"))?;
        let tri = census::subtriangle(n, i, j).map_err(|e| e.to_string())?;
        let base: Vec<(i64, i64)> = tri.iter().filter(|p| p.0 == 0).copied().collect();
        let want: Vec<(i64, i64)> = (0..=i).map(|k| (0, j - i + 2 * k)).collect();
        ensure(base == want, || format!("{d}: sub-triangle base {base:?}"))?;
        ensure(tri.len() as i64 == (i + 1) * (i + 2) / 2, || format!("{d}: sub-triangle size {}", tri.len()))?;
        ensure(tri.iter().all(|p| set.contains(p)), || format!("{d}: sub-triangle leaves P_n"))?;
        census::factorizations(&d).map_err(|e| format!("{d}: {e}"))?;
    }
    Ok(())
}

fn census_suite(max_n: i64) -> Vec<Check> {
    let s = Suite::Census;
    let mut out = vec![Check::from_result(s, "display n=5", census_rows_match(5, &CENSUS_FIVE_ROWS))];
    out.extend(sweep(2, max_n, |n| Check::from_result(s, format!("P_{n}"), census_for(n))));
    out
}

fn invariants_for(n: i64) -> Result<(), String> {
    let e = |x: crate::Error| x.to_string();
    for d in census::descriptors(n).map_err(e)? {
        let closed = invariant::invariant_closed_form(&d).map_err(e)?;
        let sum = invariant::binomial_sum(&d).map_err(e)?;
        let sign = if d.i % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        ensure(sum.scale(&sign) == closed, || format!("{d}: binomial sum {sum} vs closed form {closed}"))?;
        ensure(invariant::invariant(&d).map_err(e)? == closed, || format!("{d}: coordinate route disagrees"))?;
        let conj = ContactDescriptor::new(n, d.i, -d.j).map_err(e)?;
        let lhs = invariant::conjugate(&closed);
        let rhs = invariant::invariant(&conj).map_err(e)?.scale(&sign);
        ensure(lhs == rhs, || format!("{d}: conjugate {lhs} vs {rhs}"))?;
        if d.i == 0 {
            let v = invariant::coordinates(&d).map_err(e)?;
            ensure(v == InvariantVector::basis(n, d.j).map_err(e)?, || format!("{d}: not a basis vector"))?;
        }
    }
    let dist = invariant::verify_distinctness(n).map_err(e)?;
    ensure(dist.holds, || format!("zero {:?}, collision {:?}", dist.zero, dist.collision))?;
    let diag = invariant::verify_diagram(n).map_err(e)?;
    ensure(diag.holds, || format!("diagram fails at {:?}", diag.failure))?;
    let apex = invariant::invariant(&ContactDescriptor::new(n, n - 2, 0).map_err(e)?).map_err(e)?;
    ensure(apex_symmetric(n, &apex), || format!("apex invariant {apex} is not symmetric"))?;
    Ok(())
}

/// `t ↦ t^{-1}` fixes the apex invariant up to the sign `(-1)^{n-2}`; for
/// even `n` it is palindromic outright.
pub fn apex_symmetric(n: i64, apex: &HalfLaurent) -> bool {
    if n % 2 == 0 {
        apex.is_palindromic()
    } else {
        invariant::conjugate(apex) == -apex.clone()
    }
}

fn gradings() -> Result<(), String> {
    ensure(grading::gompf_theta(0, 2, 0) == -4, || "theta(xi_0) != -4".into())?;
    ensure(grading::contact_degree(-4) == Ratio::new(1, 2), || "degree of theta=-4".into())?;
    ensure(grading::contact_degree(-6) == Ratio::from_integer(1), || "degree of theta=-6".into())?;
    let eta = grading::GradingData::eta();
    ensure(eta.theta == -6, || format!("theta(eta) = {}", eta.theta))?;
    for k in -5..=5 {
        let s = grading::degree_shift(k).map_err(|e| e.to_string())?;
        ensure(s.shift == -k * (k + 1) && s.shift <= 0, || format!("shift at k={k} is {}", s.shift))?;
    }
    Ok(())
}

fn invariant_suite(max_n: i64) -> Vec<Check> {
    let s = Suite::Invariants;
    let mut out = vec![Check::from_result(s, "gradings", gradings())];
    out.extend(sweep(2, max_n, |n| Check::from_result(s, format!("n={n}"), invariants_for(n))));
    out.push(Check::from_result(
        s,
        "F_Winf",
        ensure(invariant::map_f_winf(&HalfLaurent::one()) == HalfLaurent::winf_factor(), || {
            "F_Winf(1) is not t^(1/2) - t^(-1/2)".into()
        }),
    ));
    out
}

fn sl(num: i64, den: i64) -> Slope {
    Slope::from_ratio(num, den).expect("nonzero denominator")
}

pub fn slope_anchors(k_range: std::ops::RangeInclusive<i64>, n_range: std::ops::RangeInclusive<i64>) -> Result<(), String> {
    for k in k_range {
        let s = Slope::new(k, 1).map_err(|e| e.to_string())?;
        let a = slope::mobius_apply(&UnimodularMatrix::a1(), &s);
        ensure(a == sl(k, 2 * k - 1), || format!("A1(1/{k}) = {a}"))?;
        let b = slope::mobius_apply(&UnimodularMatrix::a2(), &s);
        ensure(b == sl(-k, 3 * k + 1), || format!("A2(1/{k}) = {b}"))?;
    }
    for n in n_range {
        let a3 = UnimodularMatrix::a3(n);
        let z = slope::mobius_apply(&a3, &Slope::integer(-n));
        ensure(z == Slope::integer(0), || format!("A3({n})(-{n}) = {z}"))?;
        let inf = slope::mobius_apply(&a3, &sl(-6 * n + 1, 6));
        ensure(inf.is_infinite(), || format!("A3({n})(-{n}+1/6) = {inf}"))?;
        let back = slope::v3_slope_of_complement(n, &slope::complement_slope_of_v3(n, &sl(-5, 3)));
        ensure(back == sl(-5, 3), || format!("A3({n}) inverse round trip gives {back}"))?;
    }
    Ok(())
}

fn ncf_roundtrips(max_p: i64) -> Result<(), String> {
    for p in 2..=max_p {
        for q in 1..p {
            let e = slope::neg_continued_fraction(-p, q).map_err(|e| e.to_string())?;
            ensure(e.coefficients().iter().all(|a| *a <= BigInt::from(-2)), || format!("-{p}/{q}: entry > -2"))?;
            let back = slope::eval_ncf(&e);
            ensure(back == sl(-p, q), || format!("-{p}/{q} evaluates back to {back}"))?;
        }
    }
    Ok(())
}

fn slope_suite(max_n: i64) -> Vec<Check> {
    let s = Suite::Slopes;
    let mut out = vec![
        Check::from_result(s, "anchors", slope_anchors(-50..=-1, 2..=max_n.max(20))),
        Check::from_result(s, "ncf round trip", ncf_roundtrips(40)),
        Check::from_result(
            s,
            "solid torus counts",
            (1..=30).try_for_each(|m| {
                let c = slope::tight_count_solid_torus(&Slope::integer(-m)).map_err(|e| e.to_string())?;
                ensure(c == BigInt::from(m), || format!("count at -{m} is {c}"))
            }),
        ),
    ];
    out.extend(sweep(2, max_n, |n| {
        let r = slope::upper_bound_count(n).map_err(|e| e.to_string()).and_then(|c| {
            let tw = slope::max_twisting_values(n).map_err(|e| e.to_string())?;
            ensure(tw.len() as i64 == n - 1 && tw[0] == -5, || format!("twisting values {tw:?}"))?;
            ensure(c == BigInt::from(n * (n - 1) / 2), || format!("bound {c}"))
        });
        Check::from_result(s, format!("upper bound n={n}"), r)
    }));
    out
}

/// Uniform random matrix for the Smith-form property suite.
pub fn random_matrix(rng: &mut impl Rng, max_dim: usize, bound: i64) -> IntegerMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    IntegerMatrix::from_rows(&data)
}

/// Smith form properties on `count` seeded random matrices; returns the
/// first failing matrix.
pub fn snf_property_suite(count: usize, max_dim: usize, bound: i64, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mats: Vec<IntegerMatrix> = (0..count).map(|_| random_matrix(&mut rng, max_dim, bound)).collect();
    let bad = mats.par_iter().find_first(|m| smith_normal_form(m).violation(m).is_some());
    match bad {
        None => Ok(()),
        Some(m) => Err(format!("{}\n{m}", smith_normal_form(m).violation(m).unwrap())),
    }
}

pub fn cobordism_kernels(n: i64) -> Result<(), String> {
    let e = |x: crate::Error| x.to_string();
    let k = |w: &CobordismPresentation| cobordism_kernel(w).map_err(e);
    ensure(k(&CobordismPresentation::v_n(n))? == AbelianGroupSpec::free(1), || format!("K(V_{n}) != Z"))?;
    ensure(k(&CobordismPresentation::w_n(n))?.is_trivial(), || format!("K(W_{n}) != 0"))?;
    ensure(k(&CobordismPresentation::z_n(n))? == AbelianGroupSpec::free(1), || format!("K(Z_{n}) != Z"))?;
    let a = ksequence_rank_check(&CobordismPresentation::w_infinity(), &CobordismPresentation::v_n_after_w_infinity(n), 0)
        .map_err(e)?;
    ensure(a.holds, || format!("sequence for W_inf then V_{n}: {a:?}"))?;
    let b = ksequence_rank_check(&CobordismPresentation::v_n(n + 1), &CobordismPresentation::w_n(n), 0).map_err(e)?;
    ensure(b.holds, || format!("sequence for V_{} then W_{n}: {b:?}", n + 1))
}

fn homology_suite(max_n: i64) -> Vec<Check> {
    let s = Suite::Homology;
    let mut out = vec![
        Check::from_result(
            s,
            "torus bundle",
            h1_torus_bundle(&UnimodularMatrix::trefoil_monodromy())
                .map_err(|e| e.to_string())
                .and_then(|g| ensure(g == AbelianGroupSpec::free(1), || format!("H_1 = {g}"))),
        ),
        Check::from_result(s, "smith forms", snf_property_suite(1000, 12, 9, 0x5eed)),
    ];
    out.extend(sweep(2, max_n, |n| {
        let r = PlumbingGraph::brieskorn(n)
            .and_then(|g| h1_of_surgery(&g))
            .map_err(|e| e.to_string())
            .and_then(|h| ensure(h.is_trivial(), || format!("H_1 = {h}")))
            .and_then(|_| cobordism_kernels(n));
        Check::from_result(s, format!("n={n}"), r)
    }));
    out
}

/// A random word over the page's curves with one side of the lantern
/// relation spliced in contiguously.
pub fn random_lantern_word(rng: &mut impl Rng, book: &AbstractOpenBook, site: &LanternSite) -> TwistWord {
    let names: Vec<&str> = book.page.curves().iter().map(|c| c.name.as_str()).collect();
    let len = rng.gen_range(0..12);
    let mut w: Vec<Twist> = (0..len)
        .map(|_| {
            let n = names[rng.gen_range(0..names.len())];
            if rng.gen_bool(0.5) {
                Twist::pos(n)
            } else {
                Twist::neg(n)
            }
        })
        .collect();
    let side: Vec<Twist> = if rng.gen_bool(0.5) {
        let mut b: Vec<Twist> = site.boundary.iter().map(|n| Twist::pos(n)).collect();
        b.shuffle(rng);
        b
    } else {
        site.interior.iter().map(|n| Twist::pos(n)).collect()
    };
    let at = rng.gen_range(0..=w.len());
    w.splice(at..at, side);
    TwistWord(w)
}

/// Lantern rewriting on `count` random words; returns the first word whose
/// action or Euler characteristic changes.
pub fn lantern_suite(count: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..count {
        let base = family_book(k % 3, k % 2, (k / 2) % 2, k % 5 == 0);
        let start = base.region("base").map(|r| r.start).unwrap_or(0) + 2 * (k % 3);
        let (book, site) = braid_site(&base, start).map_err(|e| e.to_string())?;
        let word = random_lantern_word(&mut rng, &book, &site);
        let before = AbstractOpenBook { word: word.clone(), ..book.clone() };
        let rewritten = lantern_rewrite(&book.page, &word, &site).map_err(|e| format!("{word}: {e}"))?;
        let after = AbstractOpenBook { word: rewritten.clone(), ..book.clone() };
        let (a, b) = (h1_action(&before).map_err(|e| e.to_string())?, h1_action(&after).map_err(|e| e.to_string())?);
        ensure(a == b, || format!("action changed: {word} -> {rewritten}"))?;
        ensure(
            (rewritten.len() as i64 - word.len() as i64).abs() == 1,
            || format!("length did not change by one: {word} -> {rewritten}"),
        )?;
        ensure(before.euler_characteristic() == after.euler_characteristic(), || "chi changed".into())?;
    }
    Ok(())
}

/// Stabilize along random arcs and destabilize along the new cocore.
pub fn hopf_roundtrip_suite(count: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..count {
        let mut book = family_book(k % 2, k % 3, 0, k % 2 == 1);
        let d = book.page.dim();
        let f: Vec<i64> = (0..d).map(|_| rng.gen_range(-1..=1)).collect();
        book.page.add_arc("probe", f.clone()).map_err(|e| e.to_string())?;
        let s = hopf_stabilize(&book, "probe", "band").map_err(|e| e.to_string())?;
        ensure(s.euler_characteristic() == book.euler_characteristic() - 1, || format!("chi after arc {f:?}"))?;
        let back = hopf_destabilize(&s, "band~").map_err(|e| format!("arc {f:?}: {e}"))?.book;
        let key = |b: &AbstractOpenBook| (b.page.genus, b.page.boundary_count, b.word.clone());
        ensure(key(&back) == key(&book), || format!("round trip changed the book for arc {f:?}"))?;
    }
    Ok(())
}

pub fn family_checks(i: usize) -> Result<(), String> {
    let e = |x: crate::Error| x.to_string();
    let book = family_book(i, 0, 0, false);
    let rep = torus_bundle_monodromy(&book).map_err(e)?;
    ensure(rep.product.det() == BigInt::from(1), || "walk product has det != 1".into())?;
    ensure(rep.conjugator.is_some(), || format!("walk product {} is not conjugate to the target", rep.product))?;
    let h = h1_torus_bundle(&rep.product).map_err(e)?;
    ensure(h == AbelianGroupSpec::free(1), || format!("H_1 of the bundle is {h}"))?;
    for m in torsion_block_products(&book).map_err(e)? {
        ensure(m == UnimodularMatrix::identity(), || format!("torsion block gives {m}"))?;
    }
    for (a, b, ok) in braid_pairs(&book.page) {
        ensure(ok, || format!("braid relation fails for {a}, {b}"))?;
    }
    for l in 0..2 {
        for r in 0..2 {
            let b = family_book(i, l, r, true);
            let base = b.region("base").map(|x| x.start).unwrap_or(0);
            for k in 0..BASE_PAIRS - 2 {
                let mv = braid_move(&b, base + 2 * k).map_err(e)?;
                ensure(mv.holds(), || format!("braid move at {} fails: {:?}", base + 2 * k, mv.steps))?;
            }
        }
    }
    Ok(())
}

fn openbook_suite(max_n: i64) -> Vec<Check> {
    let s = Suite::Openbook;
    let top = max_n.clamp(0, 6) as usize;
    let mut out: Vec<Check> = (0..=top)
        .into_par_iter()
        .map(|i| Check::from_result(s, format!("family i={i}"), family_checks(i)))
        .collect();
    out.push(Check::from_result(s, "lantern", lantern_suite(100, 0x1a47)));
    out.push(Check::from_result(s, "hopf round trip", hopf_roundtrip_suite(50, 0x40bf)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let r = run(Suite::All, 6);
        assert!(r.passed(), "{}", r.first_failure().unwrap());
        assert_eq!(r.count("census").1, 6);
    }
}
