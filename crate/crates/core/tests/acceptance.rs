//! Acceptance criteria, one line each. Runs without the test harness so the
//! verdicts are always printed.

use std::process::ExitCode;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Signed;

use tight_brieskorn::census::{self, ContactDescriptor};
use tight_brieskorn::homology::{
    cobordism_kernel, expand_rational_framings, h1_torus_bundle, ksequence_rank_check, linking_matrix,
    AbelianGroupSpec, CobordismPresentation, PlumbingGraph,
};
use tight_brieskorn::invariant::{self, HalfLaurent, InvariantVector};
use tight_brieskorn::open_book::{
    braid_pairs, family_book, torsion_block_products, torus_bundle_monodromy,
};
use tight_brieskorn::slope::{self, Slope, UnimodularMatrix};
use tight_brieskorn::verify;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn d(n: i64, i: i64, j: i64) -> ContactDescriptor {
    ContactDescriptor::new(n, i, j).unwrap()
}

fn sign(i: i64) -> BigInt {
    if i % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

fn census_count() -> Outcome {
    for n in 2..=50 {
        let k = census::index_set(n).map_err(e)?.len() as i64;
        ensure(k == n * (n - 1) / 2, || format!("|P_{n}| = {k}"))?;
    }
    let rows: [(i64, &[i64]); 4] = [(3, &[0]), (2, &[-1, 1]), (1, &[-2, 0, 2]), (0, &[-3, -1, 1, 3])];
    let set = census::index_set(5).map_err(e)?;
    for (i, js) in rows {
        let got: Vec<i64> = set.iter().filter(|p| p.0 == i).map(|p| p.1).collect();
        ensure(got == js, || format!("n=5 row {i}: {got:?}"))?;
    }
    let drawn: Vec<String> =
        census::render_triangle(5).map_err(e)?.lines().map(|l| l.split_whitespace().collect::<Vec<_>>().join(" ")).collect();
    ensure(
        drawn == ["(3,0)", "(2,-1) (2,1)", "(1,-2) (1,0) (1,2)", "(0,-3) (0,-1) (0,1) (0,3)"],
        || format!("display {drawn:?}"),
    )
}

fn closed_form() -> Outcome {
    let w = HalfLaurent::winf_factor();
    for n in 2..=40 {
        for x in census::descriptors(n).map_err(e)? {
            let want = w.pow(x.i as u32).shift(x.j).scale(&sign(x.i));
            let got = invariant::binomial_sum(&x).map_err(e)?;
            ensure(got == want, || format!("{x}: {got} != {want}"))?;
        }
    }
    Ok(())
}

fn distinct() -> Outcome {
    for n in 2..=40 {
        let r = invariant::verify_distinctness(n).map_err(e)?;
        ensure(r.holds, || format!("n={n}: zero {:?}, collision {:?}", r.zero, r.collision))?;
        for j in census::index_set(n).map_err(e)?.into_iter().filter(|p| p.0 == 0).map(|p| p.1) {
            let v = invariant::coordinates(&d(n, 0, j)).map_err(e)?;
            ensure(v == InvariantVector::basis(n, j).map_err(e)?, || format!("n={n}: (0,{j}) is not a unit vector"))?;
        }
    }
    Ok(())
}

fn diagram() -> Outcome {
    let w = HalfLaurent::winf_factor();
    for n in 2..=40 {
        let r = invariant::verify_diagram(n).map_err(e)?;
        ensure(r.holds && r.checked as i64 == n * (n - 1) / 2, || format!("n={n}: fails at {:?}", r.failure))?;
        for x in census::descriptors(n).map_err(e)? {
            let p = invariant::invariant(&x).map_err(e)?;
            ensure(invariant::map_f_winf(&p) == &p * &w, || format!("{x}: F_Winf is not multiplication"))?;
        }
        // c(η_{1,j}^{n+1}) = c(η_{0,j+1}^{n+1}) - c(η_{0,j-1}^{n+1})
        for j in (-(n - 2)..=n - 2).step_by(2) {
            let lhs = invariant::coordinates(&d(n + 1, 1, j)).map_err(e)?;
            let up = InvariantVector::basis(n + 1, j + 1).map_err(e)?;
            let down = InvariantVector::basis(n + 1, j - 1).map_err(e)?;
            let rhs: Vec<BigInt> = up.coords.iter().zip(&down.coords).map(|(a, b)| a - b).collect();
            ensure(lhs.coords == rhs, || format!("n={}: (1,{j}) is not the difference of neighbours", n + 1))?;
        }
    }
    Ok(())
}

fn slope_anchors() -> Outcome {
    let sl = |a: i64, b: i64| Slope::from_ratio(a, b).unwrap();
    for k in -50..=-1 {
        let s = sl(1, k);
        let a = slope::mobius_apply(&UnimodularMatrix::a1(), &s);
        ensure(a == sl(k, 2 * k - 1), || format!("A1: 1/{k} -> {a}"))?;
        let b = slope::mobius_apply(&UnimodularMatrix::a2(), &s);
        ensure(b == sl(-k, 3 * k + 1), || format!("A2: 1/{k} -> {b}"))?;
    }
    for n in 2..=20 {
        let a3 = UnimodularMatrix::a3(n);
        let z = slope::mobius_apply(&a3, &Slope::integer(-n));
        ensure(z == Slope::integer(0), || format!("A3({n}): -{n} -> {z}"))?;
        let inf = slope::mobius_apply(&a3, &sl(-6 * n + 1, 6));
        ensure(inf.is_infinite(), || format!("A3({n}): -{n}+1/6 -> {inf}"))?;
    }
    Ok(())
}

fn solid_torus() -> Outcome {
    for m in 1..=30 {
        let c = slope::tight_count_solid_torus(&Slope::integer(-m)).map_err(e)?;
        ensure(c == BigInt::from(m), || format!("count at -{m} is {c}"))?;
    }
    for n in 2..=50 {
        let mut total = BigInt::from(0);
        for k in 1..n {
            total += slope::tight_count_solid_torus(&Slope::integer(-(n - k))).map_err(e)?;
        }
        ensure(total == BigInt::from(n * (n - 1) / 2), || format!("n={n}: sum {total}"))?;
        slope::upper_bound_count(n).map_err(e)?;
    }
    Ok(())
}

fn homology() -> Outcome {
    for n in 2..=20 {
        let g = expand_rational_framings(&PlumbingGraph::brieskorn(n).map_err(e)?).map_err(e)?;
        let det = linking_matrix(&g).map_err(e)?.det();
        ensure(det.abs() == BigInt::from(1), || format!("n={n}: det {det}"))?;
    }
    let h = h1_torus_bundle(&UnimodularMatrix::new(1, 1, -1, 0).map_err(e)?).map_err(e)?;
    ensure(h == AbelianGroupSpec::free(1), || format!("torus bundle H_1 = {h}"))?;
    verify::snf_property_suite(1000, 12, 9, 20_240_601)
}

fn kernels() -> Outcome {
    for n in 2..=20 {
        let k = |w: CobordismPresentation| cobordism_kernel(&w).map_err(e);
        ensure(k(CobordismPresentation::v_n(n))? == AbelianGroupSpec::free(1), || format!("K(V_{n})"))?;
        ensure(k(CobordismPresentation::w_n(n))?.is_trivial(), || format!("K(W_{n})"))?;
        ensure(k(CobordismPresentation::z_n(n))? == AbelianGroupSpec::free(1), || format!("K(Z_{n})"))?;
        let s = ksequence_rank_check(&CobordismPresentation::v_n(n + 1), &CobordismPresentation::w_n(n), 0).map_err(e)?;
        ensure(s.holds && s.delta_rank == 0, || format!("sequence for V_{} then W_{n}: {s:?}", n + 1))?;
        let s = ksequence_rank_check(
            &CobordismPresentation::w_infinity(),
            &CobordismPresentation::v_n_after_w_infinity(n),
            0,
        )
        .map_err(e)?;
        ensure(s.holds, || format!("sequence for W_inf then V_{n}: {s:?}"))?;
    }
    Ok(())
}

fn gradings() -> Outcome {
    ensure(invariant::gompf_theta(0, 2, 0) == -4, || "theta(0,2,0)".into())?;
    ensure(invariant::contact_degree(-4) == Ratio::new(1, 2), || "degree(-4)".into())?;
    ensure(invariant::contact_degree(-6) == Ratio::from_integer(1), || "degree(-6)".into())?;
    for k in -5..=5 {
        let s = invariant::degree_shift(k).map_err(e)?;
        ensure(s.shift == -k * (k + 1) && s.shift <= 0, || format!("shift({k}) = {}", s.shift))?;
    }
    Ok(())
}

fn open_books() -> Outcome {
    let rep = torus_bundle_monodromy(&family_book(0, 0, 0, false)).map_err(e)?;
    let p = &rep.product;
    ensure(p.trace() == BigInt::from(1) && p.det() == BigInt::from(1), || format!("product {p}"))?;
    let c = rep.conjugator.as_ref().ok_or("no conjugator")?;
    ensure(&c.mul(p).mul(&c.inverse()) == &UnimodularMatrix::new(1, 1, -1, 0).map_err(e)?, || "conjugator".into())?;
    println!("      i=0 walk {p}, conjugator {c}");
    for i in 1..=6 {
        for m in torsion_block_products(&family_book(i, 1, 1, false)).map_err(e)? {
            ensure(m == UnimodularMatrix::identity(), || format!("i={i}: block {m}"))?;
        }
    }
    verify::lantern_suite(100, 7)?;
    for (i, l, r) in [(0, 0, 0), (1, 1, 0), (2, 0, 2), (3, 1, 1)] {
        let book = family_book(i, l, r, true);
        let pairs = braid_pairs(&book.page);
        ensure(!pairs.is_empty(), || "no pairs with pairing +-1".into())?;
        if let Some((a, b, _)) = pairs.iter().find(|x| !x.2) {
            return Err(format!("braid relation fails for {a}, {b}"));
        }
    }
    verify::hopf_roundtrip_suite(50, 11)
}

fn conjugation() -> Outcome {
    for n in 2..=40 {
        for x in census::descriptors(n).map_err(e)? {
            let lhs = invariant::conjugate(&invariant::invariant(&x).map_err(e)?);
            let rhs = invariant::invariant(&d(n, x.i, -x.j)).map_err(e)?.scale(&sign(x.i));
            ensure(lhs == rhs, || format!("{x}: {lhs} != {rhs}"))?;
        }
        let apex = invariant::invariant(&d(n, n - 2, 0)).map_err(e)?;
        ensure(verify::apex_symmetric(n, &apex), || format!("n={n}: apex {apex}"))?;
        if n % 2 == 0 {
            ensure(apex.is_palindromic(), || format!("n={n}: apex {apex} not palindromic"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("census count and n=5 display", census_count),
        ("binomial sum equals closed form, n <= 40", closed_form),
        ("invariants nonzero and distinct, i=0 unit block", distinct),
        ("diagram commutes, F_Winf, neighbour identity", diagram),
        ("slope anchors", slope_anchors),
        ("solid-torus counts and n(n-1)/2 bound", solid_torus),
        ("plumbing det, torus bundle, Smith forms", homology),
        ("cobordism kernels and exact sequence", kernels),
        ("gradings and degree shifts", gradings),
        ("open books: walk, blocks, lantern, braid, Hopf", open_books),
        ("conjugation symmetry and apex symmetry", conjugation),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("criterion {:>2} PASS  {name}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
