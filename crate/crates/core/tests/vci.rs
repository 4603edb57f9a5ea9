mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vci_core::*;

#[test]
fn bezout_counts() {
    assert_eq!(bezout_count((2, 1), (2, 2)), 6);
    assert_eq!(bezout_count((3, 0), (0, 2)), 6);
    assert_eq!(bezout_count((3, 0), (3, 3)), 9);
}

#[test]
fn verify_three_point_pair() {
    let (f, g) = three_point_pair();
    let x = three_points_cut();
    for mode in [VerifyMode::Fast, VerifyMode::Saturation, VerifyMode::Both] {
        assert!(verify_vci(&x, &f, &g, mode).accepted, "{mode:?}");
    }
    let cert = VciCertificate::new(f.clone(), g.clone(), "given");
    let shape = koszul_shape(&cert);
    assert_eq!(shape.middle, [(-1, -1), (-2, -1)]);
    assert_eq!(shape.end, (-3, -2));
    // With the standard reading of coordinates f = x1 y1 is 1 at ([1:1],[0:1]).
    let literal = verify_vci(&three_points(), &f, &g, VerifyMode::Both);
    assert!(!literal.accepted);
}

#[test]
fn verify_hyperbola_pair() {
    let (f, g) = hyperbola_pair();
    let v = verify_vci(&hyperbola_six(false), &f, &g, VerifyMode::Both);
    assert!(v.accepted, "{:?}", v.trace);
    assert!(!verify_vci(&hyperbola_six(true), &f, &g, VerifyMode::Fast).accepted);
}

#[test]
fn verify_rejects_common_factor() {
    let x = points(Q, &[((1, 0), (0, 1))]);
    let f = poly(Q, &[(1, [1, 0, 1, 0])]);
    let g = poly(Q, &[(1, [1, 0, 0, 1])]);
    let v = verify_vci(&x, &f, &g, VerifyMode::Fast);
    assert!(!v.accepted);
    assert!(
        v.trace.iter().any(|l| l.contains("common factor x0")),
        "{:?}",
        v.trace
    );
}

#[test]
fn koszul_twists() {
    let cert = |a: (u32, u32), b: (u32, u32)| {
        let f = BiPoly::monomial(BiMonomial([a.0, 0, a.1, 0]), Q.one());
        let g = BiPoly::monomial(BiMonomial([0, b.0, 0, b.1]), Q.one());
        VciCertificate::new(f, g, "t")
    };
    assert_eq!(koszul_shape(&cert((3, 0), (0, 2))).end, (-3, -2));
    assert_eq!(koszul_shape(&cert((2, 1), (2, 2))).end, (-4, -3));
}

#[test]
fn balanced_constructions() {
    let cert = construct_balanced_vci(&three_points()).unwrap();
    assert_eq!(cert.degrees, [(3, 0), (2, 1)]);
    let expected_f = &(&poly(Q, &[(1, [1, 0, 0, 0])]) * &poly(Q, &[(1, [0, 1, 0, 0])]))
        * &poly(Q, &[(1, [1, 0, 0, 0]), (-1, [0, 1, 0, 0])]);
    assert_eq!(cert.f.monic(), expected_f.monic());
    assert!(verify_vci(&three_points(), &cert.f, &cert.g, VerifyMode::Both).accepted);

    let square = points(
        Q,
        &[
            ((0, 1), (0, 1)),
            ((0, 1), (1, 1)),
            ((1, 1), (0, 1)),
            ((1, 1), (1, 1)),
        ],
    );
    let cert = construct_balanced_vci(&square).unwrap();
    assert_eq!(cert.degrees, [(2, 0), (1, 2)]);
    assert!(verify_vci(&square, &cert.f, &cert.g, VerifyMode::Both).accepted);
    let f = poly(Q, &[(1, [2, 0, 0, 0]), (-1, [1, 1, 0, 0])]);
    let g = poly(Q, &[(1, [0, 0, 2, 0]), (-1, [0, 0, 1, 1])]);
    assert!(verify_vci(&square, &f, &g, VerifyMode::Both).accepted);

    let rows = points(
        Q,
        &[
            ((1, 1), (0, 1)),
            ((2, 1), (0, 1)),
            ((3, 1), (0, 1)),
            ((4, 1), (1, 1)),
            ((5, 1), (1, 1)),
            ((6, 1), (1, 1)),
        ],
    );
    let cert = construct_balanced_vci(&rows).unwrap();
    assert_eq!(cert.degrees, [(6, 0), (5, 1)]);
    assert!(verify_vci(&rows, &cert.f, &cert.g, VerifyMode::Both).accepted);

    assert!(construct_balanced_vci(&staircase_six()).is_err());
}

#[test]
fn set_theoretic_staircase() {
    let x = staircase_six();
    let st = construct_set_theoretic(&x);
    // x0 (x0 - x1) (x0 - 2 x1)
    let f = &(&poly(Q, &[(1, [1, 0, 0, 0])]) * &poly(Q, &[(1, [1, 0, 0, 0]), (-1, [0, 1, 0, 0])]))
        * &poly(Q, &[(1, [1, 0, 0, 0]), (-2, [0, 1, 0, 0])]);
    assert_eq!(st.f, f);
    assert!(st.support_matches(&x));
    assert_eq!(st.multiplicities.total(), 9);
    let p = |a, b| BiProjPoint::from_ints(Q, (a, 1), (b, 1)).unwrap();
    // The short rulings are padded by repeating their last point.
    assert_eq!(st.multiplicities.get(&p(0, 0)), 3);
    assert_eq!(st.multiplicities.get(&p(1, 1)), 2);
    assert_eq!(st.multiplicities.get(&p(1, 0)), 1);
    assert_eq!(st.multiplicities.get(&p(2, 2)), 1);
}

#[test]
fn set_theoretic_balanced_and_single() {
    let x = three_points();
    let st = construct_set_theoretic(&x);
    assert!(st.multiplicities.0.values().all(|&k| k == 1));
    assert!(verify_vci(&x, &st.f, &st.g, VerifyMode::Both).accepted);
    let one = points(Q, &[((2, 1), (3, 1))]);
    let st = construct_set_theoretic(&one);
    assert_eq!(st.f.bidegree(), Some((1, 0)));
    assert_eq!(st.g.bidegree(), Some((0, 1)));
    assert_eq!(st.multiplicities.total(), 1);
}

#[test]
fn cross_refutations() {
    let l = points(Q, &[((0, 1), (0, 1)), ((1, 1), (0, 1)), ((0, 1), (1, 1))]);
    let r = refute_cross(&l).unwrap();
    assert!(r.holds());
    let square = points(
        Q,
        &[
            ((0, 1), (0, 1)),
            ((0, 1), (1, 1)),
            ((1, 1), (0, 1)),
            ((1, 1), (1, 1)),
        ],
    );
    assert!(refute_cross(&square).is_none());
    assert!(refute_cross(&hyperbola_six(false)).is_none());
}

#[test]
fn gcd_refutations() {
    let l = points(Q, &[((0, 1), (0, 1)), ((1, 1), (0, 1)), ((0, 1), (1, 1))]);
    let r = refute_gcd(&l).unwrap();
    assert!(r.holds());
    // m = 3, n = 2: gcd is 1
    let x = points(
        Q,
        &[
            ((0, 1), (0, 1)),
            ((1, 1), (0, 1)),
            ((2, 1), (0, 1)),
            ((0, 1), (1, 1)),
        ],
    );
    assert!(refute_gcd(&x).is_none());
    // m = 4, n = 2, |X| = 6
    let x = points(
        Q,
        &[
            ((0, 1), (0, 1)),
            ((1, 1), (0, 1)),
            ((2, 1), (0, 1)),
            ((3, 1), (0, 1)),
            ((0, 1), (1, 1)),
            ((4, 1), (2, 1)),
        ],
    );
    assert!(refute_gcd(&x).is_none());
}

#[test]
fn degree_candidate_examples() {
    let brute = |size: usize, m: usize, n: usize| {
        let c = (0..m).find(|c| (c * n) % m == size % m).unwrap();
        let d = (0..n).find(|d| (d * m) % n == size % n).unwrap();
        (c as u32, d as u32)
    };
    assert_eq!(degree_candidates_for(7, 3, 2).unwrap(), (2, 1));
    assert_eq!(brute(7, 3, 2), (2, 1));
    assert_eq!(degree_candidates_for(5, 3, 2).unwrap(), (1, 1));
    assert_eq!(brute(5, 3, 2), (1, 1));
    assert!(degree_candidates_for(3, 2, 2).is_err());
    for m in 1..8 {
        for n in 1..8 {
            if num_integer::gcd(m, n) != 1 {
                continue;
            }
            for size in 1..m * n {
                assert_eq!(
                    degree_candidates_for(size, m, n).unwrap(),
                    brute(size, m, n)
                );
            }
        }
    }
}

#[test]
fn number_theory_examples() {
    // one 3-point row, two 2-point columns, |X| = 5: (c,d) = (1,1), t = 2 > c
    let x = points(
        Q,
        &[
            ((0, 1), (0, 1)),
            ((1, 1), (0, 1)),
            ((2, 1), (0, 1)),
            ((0, 1), (1, 1)),
            ((1, 1), (2, 1)),
        ],
    );
    let r = refute_number_theory(&x).unwrap().unwrap();
    assert_eq!(r.criterion, Criterion::LineBudget);
    assert!(r.holds());
    // m = 3, n = 2, |X| = 4 gives (c,d) = (2,0): 0*3 + 2*2 = 4 passes the
    // degree test; s = 1 > d = 0 fires the line budget.
    let x = points(
        Q,
        &[
            ((0, 1), (0, 1)),
            ((1, 1), (0, 1)),
            ((2, 1), (0, 1)),
            ((0, 1), (1, 1)),
        ],
    );
    let r = refute_number_theory(&x).unwrap().unwrap();
    assert!(r.holds());
    assert!(refute_number_theory(&three_points()).is_err());
}

#[test]
fn ferrers_examples() {
    let rect = points(
        Q,
        &[
            ((0, 1), (0, 1)),
            ((1, 1), (0, 1)),
            ((2, 1), (0, 1)),
            ((0, 1), (1, 1)),
            ((1, 1), (1, 1)),
            ((2, 1), (1, 1)),
        ],
    );
    match classify_ferrers(&rect).unwrap() {
        VciVerdict::Vci(c) => {
            assert_eq!(c.degrees, [(3, 0), (0, 2)]);
            assert!(verify_vci(&rect, &c.f, &c.g, VerifyMode::Both).accepted);
        }
        v => panic!("{v}"),
    }
    let stair = points(Q, &[((0, 1), (0, 1)), ((1, 1), (0, 1)), ((0, 1), (1, 1))]);
    match classify_ferrers(&stair).unwrap() {
        VciVerdict::NotVci(r) => assert!(r.holds()),
        v => panic!("{v}"),
    }
    assert!(classify_ferrers(&seven_points()).is_err());
}

#[test]
fn few_rulings_examples() {
    let two_rows = points(
        Q,
        &[
            ((0, 1), (0, 1)),
            ((1, 1), (0, 1)),
            ((2, 1), (0, 1)),
            ((0, 1), (1, 1)),
            ((1, 1), (1, 1)),
            ((5, 1), (1, 1)),
        ],
    );
    match classify_few_rulings(&two_rows).unwrap() {
        VciVerdict::Vci(c) => assert!(verify_vci(&two_rows, &c.f, &c.g, VerifyMode::Both).accepted),
        v => panic!("{v}"),
    }
    let stacked = points(Q, &[((0, 1), (0, 1)), ((1, 1), (0, 1)), ((0, 1), (1, 1))]);
    match classify_few_rulings(&stacked).unwrap() {
        VciVerdict::NotVci(r) => {
            assert_eq!(r.criterion, Criterion::TwoRulings);
            assert!(r.holds());
        }
        v => panic!("{v}"),
    }
    // two 2-point rows paired column by column, plus one loose point
    let blocks = points(
        Q,
        &[
            ((0, 1), (0, 1)),
            ((1, 1), (0, 1)),
            ((0, 1), (1, 1)),
            ((1, 1), (1, 1)),
            ((2, 1), (2, 1)),
        ],
    );
    match classify_few_rulings(&blocks).unwrap() {
        VciVerdict::Vci(c) => assert!(verify_vci(&blocks, &c.f, &c.g, VerifyMode::Both).accepted),
        v => panic!("{v}"),
    }
}

#[test]
fn curve_condition() {
    // rows with 2, 2, 1 points; the column x=1 carries two of them
    let x = points(
        Q,
        &[
            ((1, 1), (1, 1)),
            ((2, 1), (1, 1)),
            ((1, 1), (2, 1)),
            ((3, 1), (2, 1)),
            ((4, 1), (3, 1)),
        ],
    );
    match classify_few_rulings(&x).unwrap() {
        VciVerdict::Vci(c) => {
            assert_eq!(c.source, "THREE_RULINGS_CURVE");
            assert!(verify_vci(&x, &c.f, &c.g, VerifyMode::Both).accepted);
        }
        v => panic!("{v}"),
    }
}

#[test]
fn analyze_examples() {
    let x = hyperbola_six(false);
    match analyze(&x) {
        VciVerdict::Vci(c) => {
            assert!(verify_vci(&x, &c.f, &c.g, VerifyMode::Both).accepted);
            let mut degs = c.degrees;
            degs.sort();
            assert_eq!(degs, [(2, 1), (2, 2)]);
        }
        v => panic!("{v}"),
    }
    match analyze(&hyperbola_six(true)) {
        VciVerdict::CoordinateDependent(trace) => {
            assert!(trace.contains("forced degrees (2,1),(2,2)"), "{trace}");
            assert!(trace.contains("kernel empty"), "{trace}");
        }
        v => panic!("{v}"),
    }
    match analyze(&seven_points()) {
        VciVerdict::NotVci(r) => assert!(r.holds()),
        v => panic!("{v}"),
    }
}

#[test]
fn analyze_random_balanced() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let x = random_balanced(FP, 3, 2, &mut rng);
        assert!(analyze(&x).is_vci());
    }
}
