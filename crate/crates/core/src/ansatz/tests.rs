use super::*;
use crate::error::Error;

fn at(f: &RationalFn, l: (i64, i64)) -> Rational {
    f.eval(&rat(l.0, l.1)).unwrap()
}

const LARGE: (i64, i64) = (13, 256);
const SMALL: (i64, i64) = (1, 64);

#[test]
fn eigen_relations_are_exact() {
    use FrameVector::*;
    let c = parametric_constants();
    let check = |x, y, expected: [Rational; 4]| {
        let got: Vec<Rational> = c.product(x, y).iter().map(|t| at(t, (5, 7))).collect();
        assert_eq!(got, expected.to_vec(), "{x}{y}");
    };
    let z = Rational::zero;
    check(E, E, [rat(2, 1), z(), z(), z()]);
    check(E, A, [z(), z(), z(), z()]);
    check(E, B, [z(), z(), rat(1, 2), z()]);
    check(C, E, [z(), z(), z(), rat(1, 16)]);
}

#[test]
fn table_at_13_256() {
    use FrameVector::*;
    let c = parametric_constants();
    assert_eq!(at(c.coeff(A, A, A), LARGE), rat(105, 128));
    let cc: Vec<Rational> = c.product(C, C).iter().map(|t| at(t, LARGE)).collect();
    assert_eq!(
        cc,
        vec![rat(243, 8192), rat(31, 32), rat(23, 32), rat(0, 1)]
    );
    assert_eq!(at(c.coeff(B, C, C), LARGE), rat(207, 1024));
}

#[test]
fn gram_values() {
    let g = parametric_gram();
    assert_eq!(at(&g[3], LARGE), rat(243, 2048));
    assert_eq!(at(&g[2], LARGE), rat(2187, 65536));
    assert_eq!(at(&g[2], SMALL), rat(0, 1));
    // closed forms for ⟨a,a⟩ and ⟨b,b⟩
    for l in [(1, 3), (2, 9), (-7, 5), SMALL, LARGE] {
        let x = rat(l.0, l.1);
        let one = Rational::one();
        let aa = rat(3, 64) * (&one - &x) * (rat(3, 1) - rat(16, 1) * &x);
        let bb =
            rat(23, 128) * (&one - &x) * (rat(64, 1) * &x - &one) / (rat(128, 1) * &x + rat(5, 1));
        assert_eq!(at(&g[1], l), aa);
        assert_eq!(at(&g[2], l), bb);
    }
}

#[test]
fn lambda_classification() {
    let set = |v: &[(i64, i64)]| v.iter().map(|&(p, q)| rat(p, q)).collect::<BTreeSet<_>>();
    assert_eq!(candidate_lambdas(), set(&[(3, 16), (1, 64), (13, 256)]));
    assert_eq!(norm_roots(), set(&[(1, 1), (1, 64), (13, 256)]));
    assert_eq!(admissible_lambdas(), set(&[(1, 64), (13, 256)]));
}

#[test]
fn norm_numerator_is_the_expected_cubic() {
    // (1 − λ)(64λ − 1)(256λ − 13), up to a scalar
    let expected = Poly::new(vec![
        rat(13, 1),
        rat(-1101, 1),
        rat(17472, 1),
        rat(-16384, 1),
    ]);
    assert_eq!(norm_constraint().num().monic(), expected.monic());
}

#[test]
fn f_norm() {
    assert!(verify_f_norm(&rat(13, 256)).unwrap());
    assert!(verify_f_norm(&rat(1, 64)).unwrap());
    assert!(!verify_f_norm(&rat(3, 16)).unwrap());
    assert!(matches!(verify_f_norm(&rat(-5, 128)), Err(Error::Pole(_))));
}

#[test]
fn built_algebras() {
    let large = build_algebra(&rat(13, 256)).unwrap();
    assert_eq!(large.algebra().dim(), 4);
    assert!(large.algebra().verify_axioms().is_ok());
    let bb = large.algebra().product(&large.b(), &large.b()).unwrap();
    assert_eq!(
        bb,
        Element::new(vec![rat(2187, 32768), rat(27, 128), rat(0, 1), rat(0, 1)])
    );
    let ac = large.algebra().product(&large.a(), &large.c()).unwrap();
    assert_eq!(ac, large.c().scale(&rat(3255, 4096)));

    let small = build_algebra(&rat(1, 64)).unwrap();
    assert_eq!(small.algebra().basis_names(), ["e", "a", "c"]);
    assert!(small.algebra().verify_axioms().is_ok());
    let alg = small.algebra();
    assert_eq!(
        alg.product(&small.a(), &small.a()).unwrap(),
        small.a().scale(&rat(33, 32))
    );
    assert_eq!(
        alg.product(&small.c(), &small.c()).unwrap(),
        Element::new(vec![rat(63, 2048), rat(31, 32), rat(0, 1)])
    );
}

#[test]
fn rejected_lambdas() {
    for l in [rat(1, 1), rat(3, 16), rat(1, 2)] {
        assert!(matches!(
            build_algebra(&l),
            Err(Error::InconsistentStructure(_))
        ));
    }
}

#[test]
fn f_is_conformal_with_the_right_norm() {
    for l in [rat(1, 64), rat(13, 256)] {
        let s = build_algebra(&l).unwrap();
        let alg = s.algebra();
        assert!(alg.is_conformal(&s.f()));
        assert!(alg.is_conformal(&s.f_tau_e()));
        assert_eq!(alg.central_charge(&s.f()).unwrap(), rat(1, 2));
        let ef: Rational = alg.inner(&s.e(), &s.f()).unwrap();
        assert_eq!(ef, &l / rat(4, 1));
    }
}

#[test]
fn ac_plus_bc() {
    for l in [rat(1, 64), rat(13, 256)] {
        let s = build_algebra(&l).unwrap();
        let ab = &s.a() + &s.b();
        let lhs = s.algebra().product(&ab, &s.c()).unwrap();
        assert_eq!(lhs, s.c().scale(&(Rational::one() - &l / rat(16, 1))));
    }
}

#[test]
fn frame_reconstructs_e() {
    for l in [rat(1, 64), rat(13, 256)] {
        let frame = derived_frame(&l).unwrap();
        let s = &frame.algebra;
        let alg = s.algebra();
        let sum = &(&(&s.f().scale(&l) + &frame.g) + &frame.h) + &frame.i;
        assert_eq!(sum, s.e());
        let f = s.f();
        assert!(alg.product(&f, &frame.g).unwrap().is_zero());
        assert_eq!(
            alg.product(&f, &frame.h).unwrap(),
            frame.h.scale(&rat(1, 2))
        );
        let cc: Rational = alg.inner(&s.c(), &s.c()).unwrap();
        let ii: Rational = alg.inner(&frame.i, &frame.i).unwrap();
        assert_eq!(cc, ii);
        assert_eq!(cc, (Rational::one() - &l) / rat(8, 1));
        let ec = alg.product(&s.e(), &s.c()).unwrap();
        let ecc: Rational = alg.inner(&ec, &s.c()).unwrap();
        assert_eq!(cc, ecc * rat(16, 1));
    }
    assert!(derived_frame(&rat(1, 64)).unwrap().h.is_zero());
}

#[test]
fn printed_ac_breaks_invariance() {
    let s = build_algebra(&rat(13, 256)).unwrap();
    let alg = s.algebra();
    let (a, c) = (alg.index_of("a").unwrap(), alg.index_of("c").unwrap());
    let broken = alg.with_structure_constant(a, c, c, rat(3185, 4096));
    let report = broken.verify_axioms();
    let triples: Vec<&[String; 3]> = report.invariance_failures().collect();
    assert!(triples.contains(&&["a".to_owned(), "c".to_owned(), "c".to_owned()]));
}

#[test]
fn recognize_recovers_lambda() {
    for l in [rat(1, 64), rat(13, 256)] {
        let s = build_algebra(&l).unwrap();
        let again = S3Algebra::recognize(s.algebra().clone()).unwrap();
        assert_eq!(again, s);
    }
}
