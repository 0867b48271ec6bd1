//! Hand-checked values for each module's public surface.

use num_bigint::BigInt;
use num_rational::Ratio;

use tight_brieskorn::census::{self, ContactDescriptor, LegendrianPresentation, StabSign};
use tight_brieskorn::homology::{
    cobordism_kernel, cokernel, expand_rational_framings, h1_of_surgery, h1_torus_bundle, ksequence_rank_check,
    linking_matrix, smith_normal_form, AbelianGroupSpec, CobordismPresentation, IntegerMatrix, PlumbingGraph,
};
use tight_brieskorn::invariant::{self, HalfLaurent, HfTarget};
use tight_brieskorn::open_book::{
    braid_move, braid_relation_check, euler_characteristic, family_book, h1_action, hopf_destabilize,
    hopf_stabilize, lantern_rewrite, parse_book, serialize_book, torus_bundle_monodromy, AbstractOpenBook, CurveKind,
    LanternSite, PageSurface, TwistWord,
};
use tight_brieskorn::slope::{self, normalize_slope, NcfExpansion, Slope, UnimodularMatrix};
use tight_brieskorn::Error;

fn d(n: i64, i: i64, j: i64) -> ContactDescriptor {
    ContactDescriptor::new(n, i, j).unwrap()
}

fn sl(a: i64, b: i64) -> Slope {
    Slope::from_ratio(a, b).unwrap()
}

fn m(rows: &[&[i64]]) -> IntegerMatrix {
    IntegerMatrix::from_i64(rows)
}

#[test]
fn slope_oracles() {
    assert_eq!(normalize_slope(2, -6).unwrap(), Slope::new(1, -3).unwrap());
    assert!(normalize_slope(0, -5).unwrap().is_infinite());
    assert_eq!(normalize_slope(-7, 3).unwrap().p(), &BigInt::from(7));
    assert_eq!(slope::mobius_apply(&UnimodularMatrix::a1(), &Slope::new(-3, 1).unwrap()), sl(3, 7));
    assert_eq!(slope::mobius_apply(&UnimodularMatrix::a3(2), &sl(-2, 1)), Slope::integer(0));
    assert!(slope::mobius_apply(&UnimodularMatrix::a3(2), &sl(-11, 6)).is_infinite());
    assert_eq!(slope::neg_continued_fraction(-11, 2).unwrap(), NcfExpansion::from_i64(&[-6, -2]).unwrap());
    assert_eq!(slope::eval_ncf(&NcfExpansion::from_i64(&[-2, -2, -2]).unwrap()), sl(-4, 3));
    assert_eq!(slope::tight_count_solid_torus(&sl(-5, 2)).unwrap(), BigInt::from(4));
    assert_eq!(slope::upper_bound_count(7).unwrap(), BigInt::from(21));
    assert_eq!(slope::max_twisting_values(3).unwrap(), vec![-5, -11]);
    // A3 sends 1/k to -(nk+1)/((6n-1)k+6)
    for n in 2..6 {
        for k in [-4, -1, 1, 3] {
            let got = slope::mobius_apply(&UnimodularMatrix::a3(n), &sl(1, k));
            assert_eq!(got, sl(-(n * k + 1), (6 * n - 1) * k + 6));
        }
    }
}

#[test]
fn homology_oracles() {
    let s = smith_normal_form(&m(&[&[2, 0], &[0, 3]]));
    assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    assert!(smith_normal_form(&m(&[&[0, 0], &[0, 0]])).d.is_zero());
    assert!(cokernel(&m(&[&[0, 1], &[-1, -1]])).is_trivial());
    assert_eq!(cokernel(&m(&[&[0]])), AbelianGroupSpec::free(1));
    assert_eq!(cokernel(&m(&[&[2, 0], &[0, 3]])).to_string(), "Z/6");

    let g = expand_rational_framings(&PlumbingGraph::brieskorn(2).unwrap()).unwrap();
    let lk = linking_matrix(&g).unwrap();
    let diag: Vec<i64> = (0..5).map(|k| i64::try_from(&lk[(k, k)]).unwrap()).collect();
    assert_eq!(diag, vec![0, 2, -3, -6, -2]);
    assert_eq!(h1_of_surgery(&PlumbingGraph::zero_surgery_unknot()).unwrap(), AbelianGroupSpec::free(1));
    let chain = PlumbingGraph::parse("vertex x -2\nvertex y -2\nedge x y\n").unwrap();
    assert_eq!(h1_of_surgery(&chain).unwrap().to_string(), "Z/3");
    let pair = PlumbingGraph::parse("vertex x 0\nvertex y -4\nedge x y\n").unwrap();
    assert_eq!(linking_matrix(&pair).unwrap(), m(&[&[0, 1], &[1, -4]]));

    let t = |a, b, c, dd| h1_torus_bundle(&UnimodularMatrix::new(a, b, c, dd).unwrap()).unwrap();
    assert_eq!(t(1, 1, -1, 0), AbelianGroupSpec::free(1));
    assert_eq!(t(1, 0, 0, 1), AbelianGroupSpec::free(3));
    assert_eq!(t(1, 1, 0, 1), AbelianGroupSpec::free(2));

    assert_eq!(cobordism_kernel(&CobordismPresentation::v_n(5)).unwrap(), AbelianGroupSpec::free(1));
    assert!(cobordism_kernel(&CobordismPresentation::w_n(5)).unwrap().is_trivial());
    assert_eq!(cobordism_kernel(&CobordismPresentation::z_n(5)).unwrap(), AbelianGroupSpec::free(1));
    let s = ksequence_rank_check(&CobordismPresentation::w_infinity(), &CobordismPresentation::v_n_after_w_infinity(5), 0)
        .unwrap();
    assert!(s.holds);
    assert_eq!((s.rank_k0 + s.rank_k1) - s.rank_h1_middle, s.rank_k);
}

#[test]
fn census_oracles() {
    assert_eq!(census::index_set(2).unwrap(), vec![(0, 0)]);
    assert_eq!(census::index_set(3).unwrap(), vec![(0, -1), (0, 1), (1, 0)]);
    assert_eq!(
        census::subtriangle(5, 2, 1).unwrap(),
        vec![(0, -1), (0, 1), (0, 3), (1, 0), (1, 2), (2, 1)]
    );
    let f = LegendrianPresentation::f_in_torsion(0);
    let p = census::stabilize(census::stabilize(census::stabilize(f, StabSign::Positive), StabSign::Positive), StabSign::Negative);
    assert_eq!((p.twisting, p.rotation), (-4, 1));
    let q = census::stabilize(census::stabilize(f, StabSign::Positive), StabSign::Negative);
    assert_eq!((q.twisting, q.rotation), (-3, 0));
    assert_eq!(census::descriptor_from_stabs(1, 2, 1).unwrap(), d(6, 1, 1));
    assert_eq!(census::surgery_data_for_f(3, 9).unwrap().twisting, -4);
    for n in 2..=20 {
        for x in census::descriptors(n).unwrap() {
            let fz = census::factorizations(&x).unwrap();
            assert_eq!(fz.target, x);
            assert!(census::index_set(n).unwrap().contains(&(x.i, -x.j)));
        }
    }
}

#[test]
fn invariant_oracles() {
    assert_eq!(invariant::invariant(&d(5, 0, 3)).unwrap(), HalfLaurent::monomial(3, 1));
    assert_eq!(invariant::invariant(&d(3, 1, 0)).unwrap().to_string(), "-t^(-1/2) + t^(1/2)");
    assert_eq!(invariant::invariant(&d(4, 2, 0)).unwrap().to_string(), "t^-1 - 2 + t");
    assert_eq!(invariant::invariant_closed_form(&d(6, 3, 1)).unwrap().to_string(), "-t^-1 + 3 - 3t + t^2");
    let c = invariant::coordinates(&d(2, 0, 0)).unwrap();
    assert_eq!(invariant::map_f_vn(&invariant::map_f_wn(&c)), invariant::invariant(&d(3, 1, 0)).unwrap());
    let c = invariant::coordinates(&d(4, 1, 1)).unwrap();
    assert_eq!(invariant::map_f_vn(&invariant::map_f_wn(&c)), invariant::invariant(&d(5, 2, 1)).unwrap());
    assert_eq!(invariant::map_f_winf(&HalfLaurent::one()), HalfLaurent::winf_factor());
    assert_eq!(invariant::map_f_winf(&HalfLaurent::zero()), HalfLaurent::zero());
    assert_eq!(invariant::conjugate(&HalfLaurent::monomial(5, 1)), HalfLaurent::monomial(-5, 1));
    assert_eq!(invariant::coordinate_rank(10).unwrap(), 9);
    assert!(invariant::verify_distinctness(5).unwrap().holds);
    let dg = invariant::verify_diagram(6).unwrap();
    assert!(dg.holds && dg.checked == 15);

    assert_eq!(invariant::gompf_theta(0, 3, 0), -6);
    assert_eq!(invariant::gompf_theta(0, 0, 0), 0);
    assert_eq!(invariant::contact_degree(-2), Ratio::from_integer(0));
    assert_eq!(invariant::degree_shift(1).unwrap().shift, -2);
    assert_eq!(invariant::degree_shift(-2).unwrap().shift, -2);
    assert_eq!(invariant::degree_shift(3).unwrap().c1_pairing, 7);
    let inf = invariant::hf_rank_data(HfTarget::Infinity).unwrap();
    assert_eq!(inf.rank_in_degree(Ratio::new(3, 2)), 1);
    assert_eq!(invariant::hf_rank_data(HfTarget::Finite(5)).unwrap().rank_in_degree(Ratio::from_integer(1)), 4);
}

#[test]
fn open_book_oracles() {
    let mut page = PageSurface::standard(1, 1).unwrap();
    page.add_curve("a", vec![1, 0], CurveKind::Meridian).unwrap();
    page.add_curve("b", vec![0, 1], CurveKind::Longitude).unwrap();
    page.add_curve("c", vec![1, 0], CurveKind::Meridian).unwrap();
    page.add_curve("nb", vec![0, -1], CurveKind::Longitude).unwrap();
    assert!(braid_relation_check(&page, "a", "b").unwrap());
    assert!(braid_relation_check(&page, "a", "nb").unwrap());
    assert!(matches!(braid_relation_check(&page, "a", "c"), Err(Error::NotApplicable(_))));
    let trefoil = AbstractOpenBook::new(page, TwistWord::parse("a+ b+").unwrap()).unwrap();
    let act = h1_action(&trefoil).unwrap();
    assert_eq!(act, m(&[&[1, -1], &[1, 0]]));

    let disk = PageSurface::standard(0, 1).unwrap();
    assert_eq!(AbstractOpenBook::new(disk, TwistWord::new()).unwrap().euler_characteristic(), 1);
    assert_eq!(PageSurface::standard(1, 4).unwrap().euler_characteristic(), -4);

    // the base book walks to the trefoil monodromy; torsion blocks change nothing
    for i in 0..4 {
        let b = family_book(i, 0, 0, false);
        let rep = torus_bundle_monodromy(&b).unwrap();
        assert_eq!(rep.product, UnimodularMatrix::trefoil_monodromy());
        assert_eq!(h1_torus_bundle(&rep.product).unwrap(), AbelianGroupSpec::free(1));
    }
    for (i, l, r) in [(0, 0, 0), (1, 2, 1), (2, 0, 3)] {
        let b = family_book(i, l, r, true);
        let x = census::descriptor_from_stabs(i as i64, l as i64, r as i64).unwrap();
        assert_eq!((x.n, x.j), ((l + r + i + 2) as i64, l as i64 - r as i64));
        assert!(b.page.has_curve("F"));
        assert_eq!(euler_characteristic(&b), -((5 + 4 * i + l + r) as i64));
    }
}

#[test]
fn braid_move_reaches_the_short_segment() {
    let b = family_book(0, 0, 0, true);
    let mv = braid_move(&b, 0).unwrap();
    assert!(mv.holds());
    assert_eq!(mv.after.word.to_string(), "m1- m1- h2+ m3- m3- h3+ m4- h4+ m5- h5+ L+");
    assert_eq!(mv.after.page.boundary_count, 4);
    assert_eq!(mv.after.page.curve("L").unwrap().class, vec![0, 1, 0, 0, 0]);
}

#[test]
fn lantern_and_hopf_on_a_planar_page() {
    let mut p = PageSurface::standard(0, 4).unwrap();
    for (k, c) in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]].into_iter().enumerate() {
        p.add_curve(&format!("d{}", k + 1), c.to_vec(), CurveKind::BoundaryParallel).unwrap();
    }
    p.add_curve("s1", vec![1, 1, 0], CurveKind::Interior).unwrap();
    p.add_curve("s2", vec![0, 1, 1], CurveKind::Interior).unwrap();
    p.add_curve("s3", vec![1, 0, 1], CurveKind::Interior).unwrap();
    let site = LanternSite::new(["d1", "d2", "d3", "d4"], ["s1", "s2", "s3"]);
    let w = TwistWord::parse("s1+ s2+ s3+").unwrap();
    assert_eq!(lantern_rewrite(&p, &w, &site).unwrap().to_string(), "d1+ d2+ d3+ d4+");
    assert!(lantern_rewrite(&p, &TwistWord::parse("s2+ s1+").unwrap(), &site).is_err());

    // the arc from d1 to d2 crosses s2 once and misses s1, so s2 is the
    // one that cancels
    p.add_arc("x", vec![1, -1, 0]).unwrap();
    let planar = AbstractOpenBook::new(p, TwistWord::parse("s1+ s2+ d3- d4-").unwrap()).unwrap();
    let b1 = hopf_destabilize(&planar, "x").unwrap();
    assert_eq!(b1.curve, "s2");
    assert_eq!(b1.book.word.to_string(), "s1+ d3- d4-");
    let mut p = PageSurface::standard(0, 4).unwrap();
    p.add_curve("s1", vec![1, 1, 0], CurveKind::Interior).unwrap();
    p.add_curve("s2", vec![0, 1, 1], CurveKind::Interior).unwrap();
    p.add_curve("d3", vec![0, 0, 1], CurveKind::BoundaryParallel).unwrap();
    p.add_curve("d4", vec![-1, -1, -1], CurveKind::BoundaryParallel).unwrap();
    p.add_arc("y", vec![1, 0, 0]).unwrap();
    let planar = AbstractOpenBook::new(p, TwistWord::parse("s1+ s2+ d3- d4-").unwrap()).unwrap();
    // y ends on the fourth boundary, which still carries a twist
    assert!(matches!(hopf_destabilize(&planar, "y"), Err(Error::NotApplicable(_))));

    let mut disk = PageSurface::standard(0, 1).unwrap();
    disk.add_arc("a", vec![]).unwrap();
    let disk = AbstractOpenBook::new(disk, TwistWord::new()).unwrap();
    let ann = hopf_stabilize(&disk, "a", "core").unwrap();
    assert_eq!((ann.page.genus, ann.page.boundary_count, ann.word.to_string()), (0, 2, "core+".to_string()));
    assert_eq!(ann.euler_characteristic(), 0);
}

#[test]
fn text_format() {
    let text = "page 1 2\n# torus with a hole\ncurve a 1 0 0\ncurve b 0 1 0\npair a b 1\ntwist a +\ntwist b -\n";
    let b = parse_book(text).unwrap();
    assert_eq!(b.word.to_string(), "a+ b-");
    assert_eq!(parse_book(&serialize_book(&b)).unwrap(), b);
    let f = family_book(1, 1, 1, true);
    assert_eq!(parse_book(&serialize_book(&f)).unwrap(), f);
}
