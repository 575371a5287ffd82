use intdiff::action::{
    analyze, apply, classify_structural, column, index, kernel_idempotent, left_regularizer, right_regularizer, solve,
    truncation,
};
use intdiff::bquot::{b1_mul, orbit_shift, parse_b1, project, B1Element};
use intdiff::centralizer::commutant_in_f;
use intdiff::exactmath::{HPoly, XPoly};
use intdiff::lang::{parse, parse_xpoly, print};
use intdiff::opcore::json::{from_json, to_json};
use intdiff::opcore::FPart;
use intdiff::par::Execution;
use intdiff::units::{det_kf, is_unit, left_inverse, regularity, right_inverse, unit_inverse};
use intdiff::{batch, Operator, Q};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Q> {
    (-5i64..=5, prop_oneof![4 => Just(1i64), 1 => 1i64..=4]).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

fn hpoly(max_deg: usize) -> impl Strategy<Value = HPoly> {
    prop::collection::vec(rational(), 1..=max_deg + 1).prop_map(HPoly::from_coeffs)
}

fn fpart() -> impl Strategy<Value = FPart> {
    prop::collection::vec((0usize..5, 0usize..5, rational()), 0..4).prop_map(|es| {
        let mut f = FPart::new();
        for (i, j, c) in es {
            f.add_entry(i, j, c);
        }
        f
    })
}

fn operator() -> impl Strategy<Value = Operator> {
    (prop::collection::vec((-2i64..=2, hpoly(2)), 0..3), fpart()).prop_map(|(gs, f)| {
        let mut a = Operator::from_fpart(f);
        for (k, b) in gs {
            a = &a + &Operator::graded_term(k, b);
        }
        a
    })
}

fn fredholm() -> impl Strategy<Value = Operator> {
    operator().prop_filter("not compact", |a| !a.is_compact())
}

fn compact() -> impl Strategy<Value = Operator> {
    fpart().prop_map(Operator::from_fpart)
}

fn kf() -> impl Strategy<Value = Operator> {
    (rational(), fpart()).prop_map(|(l, f)| &Operator::scalar(l) + &Operator::from_fpart(f))
}

fn xpoly() -> impl Strategy<Value = XPoly> {
    prop::collection::vec(rational(), 0..6).prop_map(XPoly::from_coeffs)
}

fn irreducible() -> impl Strategy<Value = HPoly> {
    prop_oneof![
        (-6i64..=6).prop_map(|c| HPoly::from_ints(&[c, 1])),
        (1i64..=5, -4i64..=4).prop_map(|(c, s)| HPoly::from_ints(&[c, 0, 1]).shift(s)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn multiplication_is_associative(a in operator(), b in operator(), c in operator()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in operator(), b in operator(), c in operator()) {
        prop_assert_eq!(a.mul(&(&b + &c)), &a.mul(&b) + &a.mul(&c));
        prop_assert_eq!((&a + &b).mul(&c), &a.mul(&c) + &b.mul(&c));
    }

    #[test]
    fn product_acts_as_composition(a in operator(), b in operator(), p in xpoly()) {
        prop_assert_eq!(apply(&a.mul(&b), &p), apply(&a, &apply(&b, &p)));
    }

    #[test]
    fn star_is_an_anti_involution(a in operator(), b in operator()) {
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!(a.mul(&b).star(), b.star().mul(&a.star()));
    }

    #[test]
    fn star_transposes_the_matrix(a in operator()) {
        let s = a.star();
        for t in 0..8 {
            for u in 0..8 {
                prop_assert_eq!(&column(&s, u, 12)[t], &column(&a, t, 12)[u]);
            }
        }
    }

    #[test]
    fn print_then_parse(a in operator()) {
        prop_assert_eq!(parse(&print(&a)).unwrap(), a);
    }

    #[test]
    fn json_round_trip(a in operator()) {
        prop_assert_eq!(from_json(&to_json(&a)).unwrap(), a);
    }

    #[test]
    fn xpoly_print_then_parse(p in xpoly()) {
        prop_assert_eq!(parse_xpoly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn index_is_additive(a in fredholm(), b in fredholm()) {
        prop_assert_eq!(index(&a.mul(&b)).unwrap(), index(&a).unwrap() + index(&b).unwrap());
    }

    #[test]
    fn compact_perturbation_keeps_index(a in fredholm(), f in compact()) {
        prop_assert_eq!(analyze(&(&a + &f)).unwrap().index, analyze(&a).unwrap().index);
    }

    #[test]
    fn classification_matches_analysis(a in fredholm()) {
        prop_assert_eq!(classify_structural(&a).unwrap(), analyze(&a).unwrap().classification());
    }

    #[test]
    fn report_is_consistent(a in fredholm()) {
        let r = analyze(&a).unwrap();
        prop_assert_eq!(r.index, r.kernel_basis.len() as i64 - r.cokernel_basis.len() as i64);
        for k in &r.kernel_basis {
            prop_assert!(apply(&a, k).is_zero());
        }
        for c in &r.cokernel_basis {
            prop_assert!(solve(&a, c).unwrap().particular.is_none());
        }
    }

    #[test]
    fn solutions_map_back(a in fredholm(), p in xpoly()) {
        let y = apply(&a, &p);
        let s = solve(&a, &y).unwrap();
        let q = s.particular.expect("image element must be solvable");
        prop_assert_eq!(apply(&a, &q), y);
    }

    #[test]
    fn kernel_idempotent_projects_onto_kernel(a in fredholm()) {
        let f = kernel_idempotent(&a).unwrap();
        prop_assert_eq!(f.mul(&f), f.clone());
        prop_assert!(a.mul(&f).is_zero());
    }

    #[test]
    fn regularizers_do_their_job(a in fredholm()) {
        let r = analyze(&a).unwrap();
        let c = left_regularizer(&a).unwrap();
        prop_assert_eq!(index(&c).unwrap(), r.cokernel_basis.len() as i64);
        let ca = analyze(&c.mul(&a)).unwrap();
        prop_assert!(ca.surjective);
        prop_assert_eq!(&ca.kernel_basis, &r.kernel_basis);
        let d = right_regularizer(&a).unwrap();
        prop_assert_eq!(index(&d).unwrap(), -(r.kernel_basis.len() as i64));
        let ad = analyze(&a.mul(&d)).unwrap();
        prop_assert!(ad.injective);
        prop_assert_eq!(ad.cokernel_basis, r.cokernel_basis);
    }

    #[test]
    fn determinant_is_multiplicative(u in kf(), v in kf()) {
        prop_assert_eq!(det_kf(&u.mul(&v)).unwrap(), det_kf(&u).unwrap() * det_kf(&v).unwrap());
        if is_unit(&u) {
            prop_assert_eq!(u.mul(&unit_inverse(&u).unwrap()), Operator::one());
        }
    }

    #[test]
    fn one_sided_duality(a in operator()) {
        let l = left_inverse(&a).unwrap();
        let r = right_inverse(&a.star()).unwrap();
        prop_assert_eq!(l.is_some(), r.is_some());
        if let (Some(l), Some(r)) = (l, r) {
            prop_assert_eq!(l.inverse.star(), r.inverse);
        }
    }

    #[test]
    fn regularity_swaps_under_star(a in operator()) {
        prop_assume!(!a.is_zero());
        let g = regularity(&a).unwrap();
        let s = regularity(&a.star()).unwrap();
        prop_assert_eq!((g.left_regular, g.right_regular), (s.right_regular, s.left_regular));
    }

    #[test]
    fn projection_is_a_homomorphism(a in operator(), b in operator()) {
        prop_assert_eq!(project(&a.mul(&b)), b1_mul(&project(&a), &project(&b)));
        prop_assert_eq!(project(&a).is_zero(), a.is_compact());
    }

    #[test]
    fn b1_print_then_parse(a in operator()) {
        let b = project(&a);
        prop_assert_eq!(parse_b1(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn b1_is_associative(a in operator(), b in operator(), c in operator()) {
        let (a, b, c) = (project(&a), project(&b), project(&c));
        prop_assert_eq!(b1_mul(&b1_mul(&a, &b), &c), b1_mul(&a, &b1_mul(&b, &c)));
    }

    #[test]
    fn orbit_shift_is_antisymmetric(f in irreducible(), g in irreducible()) {
        let fg = orbit_shift(&f, &g).unwrap();
        prop_assert_eq!(orbit_shift(&g, &f).unwrap(), fg.map(|i| -i));
        if let Some(i) = fg {
            prop_assert_eq!(f.shift(i).monic(), g.monic());
        }
    }

    #[test]
    fn commutant_is_star_symmetric(a in operator()) {
        let c = commutant_in_f(&a, 3);
        let s = commutant_in_f(&a.star(), 3);
        prop_assert_eq!(c.len(), s.len());
        for f in &c {
            prop_assert!(a.commutes(f));
            prop_assert!(a.star().commutes(&f.star()));
        }
    }

    #[test]
    fn execution_strategies_agree(ops in prop::collection::vec(operator(), 1..6)) {
        let seq = batch::truncations_with(&ops, 6, Execution::Sequential);
        let par = batch::truncations_with(&ops, 6, Execution::Parallel);
        prop_assert_eq!(seq, par);
        let fred: Vec<Operator> = ops.into_iter().filter(|a| !a.is_compact()).collect();
        let seq = batch::analyze_all_with(&fred, Execution::Sequential);
        let par = batch::analyze_all_with(&fred, Execution::Parallel);
        prop_assert_eq!(format!("{seq:?}"), format!("{par:?}"));
    }

    #[test]
    fn truncation_of_products(a in operator(), b in operator()) {
        // the product's section equals the product of sections once b's columns fit
        let cols = 6;
        let tb = truncation(&b, cols);
        let ta = truncation(&a, tb.rows);
        let prod = ta.entries.mul(&tb.entries);
        let tab = truncation(&a.mul(&b), cols);
        for t in 0..tab.rows.min(prod.rows()) {
            for s in 0..cols {
                prop_assert_eq!(tab.entries.get(t, s), prod.get(t, s));
            }
        }
    }
}

#[test]
fn unit_sample_includes_nontrivial_witnesses() {
    let a = parse("I^2 + e[0,0] + e[3,1]").unwrap();
    let w = left_inverse(&a).unwrap().unwrap();
    assert!(!w.unit_factor.fpart().is_empty());
    assert_eq!(w.inverse.mul(&a), Operator::one());
    let b = B1Element::d_pow(2);
    assert_eq!(b1_mul(&b, &B1Element::d_pow(-2)), B1Element::one());
}
