use super::*;
use crate::exactnum::rat;

#[test]
fn arith_examples() {
    assert_eq!(poly("(s^2 + t^2)*(s^2 - t^2)"), poly("s^4 - t^4"));
    assert_eq!(
        poly("(s^4 - t^4)^2 + 4s^4t^4"),
        poly("s^8 + 2*s^4*t^4 + t^8")
    );
    let p = poly("3s^2 - 7/2*t + 1");
    assert_eq!(&p + &Poly::zero(), p);
}

#[test]
fn display_is_canonical() {
    assert_eq!(poly("t^4 + s^4 + 2*t^2*s^2").to_string(), "s^4 + 2*s^2*t^2 + t^4");
    assert_eq!(poly("-x + 3/2").to_string(), "-x + 3/2");
    assert_eq!(Poly::zero().to_string(), "0");
    assert_eq!(ratfunc("2s^3/(s^2-t^2)").to_string(), "2*s^3/(s^2 - t^2)");
    assert_eq!(ratfunc("(s^4-t^4)/(2s^3)").to_string(), "(s^4 - t^4)/(2*s^3)");
}

#[test]
fn divide_exact_examples() {
    let q = poly("s^4 - t^4").divide_exact(&poly("s^2 + t^2")).unwrap();
    assert_eq!(q, Some(poly("s^2 - t^2")));
    assert_eq!(poly("s^2 + t^2").divide_exact(&poly("s")).unwrap(), None);
    assert!(poly("s").divide_exact(&Poly::zero()).is_err());
}

#[test]
fn sqrt_examples() {
    assert_eq!(poly("s^8 + 2s^4t^4 + t^8").sqrt(), Some(poly("s^4 + t^4")));
    assert_eq!(poly("s^2 + t^2").sqrt(), None);
    assert_eq!(poly("4s^4t^4").sqrt(), Some(poly("2s^2t^2")));
    assert_eq!(poly("(1 - 2x)^2").sqrt(), Some(poly("2x - 1")));
    assert_eq!(poly("x^2 + 1/4").sqrt(), None);
    assert_eq!(poly("9/4*(x+Y)^2").sqrt(), Some(poly("3/2*x + 3/2*Y")));
}

#[test]
fn substitute_examples() {
    let p = poly("s^2 + t^2");
    let out = p.substitute(&[(Var::s, poly("2m*n")), (Var::t, poly("m^2 - n^2"))]);
    assert_eq!(out, poly("(m^2 + n^2)^2"));
    assert_eq!(poly("t").substitute(&[(Var::t, poly("m*s"))]), poly("m*s"));
}

#[test]
fn ratfunc_examples() {
    let u = ratfunc("2s^3/(s^2-t^2)");
    let w = ratfunc("(s^2-t^2)/(2s^3)");
    assert!((&u * &w).is_one());
    assert_eq!(&u + &RatFunc::zero(), u);
    assert!(u.checked_div(&RatFunc::zero()).is_err());
}

#[test]
fn evaluate_examples() {
    let pt = [(Var::s, rat(1, 1)), (Var::t, rat(2, 1))];
    assert_eq!(poly("s^4 + t^4").evaluate(&pt).unwrap(), rat(17, 1));
    assert_eq!(ratfunc("2s^3/(s^2 - t^2)").evaluate(&pt).unwrap(), rat(-2, 3));
    let one = [(Var::s, rat(1, 1)), (Var::t, rat(1, 1))];
    assert!(matches!(
        ratfunc("1/(s^2 - t^2)").evaluate(&one),
        Err(Error::Pole(_))
    ));
    assert!(poly("s + t").evaluate(&[(Var::s, rat(1, 1))]).is_err());
}

#[test]
fn gcd_basics() {
    assert_eq!(gcd(&poly("x^2 - 1"), &poly("x^2 + 2x + 1")), poly("x + 1"));
    assert_eq!(
        gcd(&poly("(s - t)*(s + 2t)^2*(s^3 + t)"), &poly("6*(s + 2t)*(s^3 + t)*(s^2 + 1)")),
        poly("(s + 2t)*(s^3 + t)")
    );
    assert_eq!(gcd(&poly("x^2 + 1"), &poly("x + 1")), Poly::one());
    assert_eq!(gcd(&poly("2x*m"), &poly("4x^2")), poly("x"));
}

#[test]
fn square_part_basics() {
    assert_eq!(square_part(&poly("(m^2 + n^2)^2*(m - n)^5*m^3")), poly("(m^2+n^2)*(m-n)^2*m"));
    assert_eq!(square_part(&poly("s^2 + t^2")), Poly::one());
}

#[test]
fn ratfunc_normal_form() {
    let a = ratfunc("(x^2 - 1)/(2x + 2)");
    assert_eq!(a, ratfunc("(x - 1)/2"));
    assert_eq!(a.num(), &poly("x - 1"));
    assert_eq!(a.den(), &poly("2"));
    let b = ratfunc("(-x)/(-3 - x)");
    assert_eq!(b.den(), &poly("x + 3"));
}

#[test]
fn ratfunc_sqrt() {
    let r = ratfunc("(s^2 + t^2)^2/(4s^6)");
    assert_eq!(r.sqrt(), Some(ratfunc("(s^2+t^2)/(2s^3)")));
    assert_eq!(ratfunc("2/x^2").sqrt(), None);
}

mod props {
    use super::*;
    use proptest::prelude::*;

    const PV: [Var; 3] = [Var::m, Var::s, Var::t];

    fn arb_poly(max_deg: u16, max_terms: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(
            (-5i64..=5, 0..=max_deg, 0..=max_deg, 0..=max_deg),
            1..=max_terms,
        )
        .prop_map(move |ts| {
            let mut p = Poly::zero();
            for (c, a, b, d) in ts {
                let m = Monomial::one()
                    .with_exp(PV[0], a.min(max_deg))
                    .with_exp(PV[1], b.min(max_deg.saturating_sub(a)))
                    .with_exp(PV[2], d.min(max_deg.saturating_sub(a + b)));
                p.add_term(m, rat(c, 1));
            }
            p
        })
    }

    fn arb_point() -> impl Strategy<Value = Vec<(Var, Rational)>> {
        prop::collection::vec((-9i64..=9, 1i64..=5), 3).prop_map(|v| {
            PV.iter().zip(v).map(|(var, (n, d))| (*var, rat(n, d))).collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(a in arb_poly(3, 4), b in arb_poly(3, 4), c in arb_poly(3, 4)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn sqrt_of_square(p in arb_poly(4, 5)) {
            let sq = &p * &p;
            let r = sq.sqrt().expect("square has a root");
            prop_assert!(r == p || r == -&p);
            prop_assert!(r.is_zero() || r.leading_coeff() > Rational::zero());
        }

        #[test]
        fn divide_product(a in arb_poly(3, 4), b in arb_poly(3, 4)) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), Some(a));
        }

        #[test]
        fn substitute_commutes_with_evaluate(p in arb_poly(3, 4), s1 in arb_poly(2, 3), s2 in arb_poly(2, 3), pt in arb_point()) {
            let sigma = [(Var::s, s1.clone()), (Var::t, s2.clone())];
            let lhs = p.substitute(&sigma).evaluate(&pt).unwrap();
            let composed = vec![
                (Var::m, pt[0].1.clone()),
                (Var::s, s1.evaluate(&pt).unwrap()),
                (Var::t, s2.evaluate(&pt).unwrap()),
            ];
            prop_assert_eq!(lhs, p.evaluate(&composed).unwrap());
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(2, 3), b in arb_poly(2, 3), c in arb_poly(2, 3)) {
            prop_assume!(!c.is_zero() && !a.is_zero() && !b.is_zero());
            let x = &a * &c;
            let y = &b * &c;
            let g = gcd(&x, &y);
            prop_assert!(x.div_exact_opt(&g).is_some());
            prop_assert!(y.div_exact_opt(&g).is_some());
            prop_assert!(g.div_exact_opt(&c.normalized()).is_some());
        }

        #[test]
        fn ratfunc_normalization_idempotent(a in arb_poly(2, 3), b in arb_poly(2, 3)) {
            prop_assume!(!b.is_zero());
            let r = RatFunc::new(a, b).unwrap();
            let again = RatFunc::new(r.num().clone(), r.den().clone()).unwrap();
            prop_assert_eq!(again, r);
        }
    }
}
