use super::*;
use crate::exactnum::rat;
use crate::families::{canonicalize_polys, find_family, same_members, verify_family_symbolic};
use crate::multipoly::ratfunc;
use crate::quartic::euler_quartic;
use proptest::prelude::*;

fn m_sym() -> RatFunc {
    RatFunc::var(Var::m)
}

fn eq28() -> (WeierstrassModel<Rational>, ECPoint<Rational>) {
    let e = WeierstrassModel::new(rat(-27716256, 1), rat(-56159127360, 1));
    (e, ECPoint::affine(rat(-12087, 4), rat(7803, 8)))
}

#[test]
fn group_identities() {
    let (e, p) = eq28();
    assert!(e.contains(&p));
    assert_eq!(ec_add(&e, &p, &ECPoint::Identity).unwrap(), p);
    assert_eq!(ec_add(&e, &p, &e.neg(&p)).unwrap(), ECPoint::Identity);
    let p2 = e.double(&p).unwrap();
    assert!(e.contains(&p2));
    assert_eq!(e.add(&p, &p).unwrap(), p2);
    assert_eq!(e.mul(&p, 3).unwrap(), e.add(&p2, &p).unwrap());
    assert_eq!(e.mul(&p, -2).unwrap(), e.neg(&p2));
    let off = ECPoint::affine(rat(0, 1), rat(0, 1));
    assert!(matches!(ec_add(&e, &p, &off), Err(Error::Domain(_))));
}

#[test]
fn curve_coefficients() {
    let e = ecweier(&m_sym());
    assert_eq!(e.a, ratfunc("-432*(m^4 - 2*m^2 - 2)*(m^2 + 1)^2"));
    assert_eq!(e.b, ratfunc("-1728*(m^2 - 1)*(m^2 + 1)^3*(2*m^4 - 4*m^2 - 7)"));
    let e4 = specialize_model(&e, &rat(4, 1)).unwrap();
    assert_eq!(e4, eq28().0);
    assert_ne!(e4.discriminant(), rat(0, 1));
    // at m = 0: -432 * (-2) * 1 and -1728 * (-1) * 1 * (-7)
    let e0 = ecweier(&rat(0, 1));
    assert_eq!((e0.a, e0.b), (rat(864, 1), rat(-12096, 1)));
}

#[test]
fn point_p_on_curve() {
    let m = m_sym();
    let e = ecweier(&m);
    let p = point_p(&m).unwrap();
    assert!(e.contains(&p));
    assert_eq!(specialize_point(&p, &rat(4, 1)).unwrap(), eq28().1);
    let p1 = point_p(&rat(1, 1)).unwrap();
    assert_eq!(p1, ECPoint::affine(rat(72, 1), rat(864, 1)));
    assert!(ecweier(&rat(1, 1)).contains(&p1));
    assert!(matches!(point_p(&rat(0, 1)), Err(Error::Pole(_))));
}

#[test]
fn homogeneous_quartic_reduces_to_uv_quartic() {
    let (s, m) = (RatFunc::var(Var::s), m_sym());
    let uu = RatFunc::var(Var::U);
    let q = euler_quartic(&s, &(&m * &s)).unwrap();
    let lhs = q.evaluate(&(&s * &uu));
    let rhs = &uv_quartic(&m).evaluate(&uu) * &s.pow(4);
    assert_eq!(lhs, rhs);
    let want = ratfunc(
        "U^4 - 4*(m^2 + 1)*U^3 - 2*(m^2 + 1)*(2*m^4 - 2*m^2 - 3)*U^2 - 4*(m^2 + 1)^2*U + (m^2 + 1)^2",
    );
    assert_eq!(uv_quartic(&m).evaluate(&uu), want);
}

#[test]
fn dehomogenize_examples() {
    let s = RatFunc::var(Var::s);
    let t = ratfunc("m*s");
    let u = ratfunc("2*s^3/(s^2 - m^2*s^2)");
    let (m, big_u, _) = dehomogenize(&s, &t, &u, &RatFunc::zero()).unwrap();
    assert_eq!(m, m_sym());
    assert_eq!(big_u, ratfunc("2/(1 - m^2)"));
    let one = rat(1, 1);
    let (m, big_u, v) = dehomogenize(&one, &rat(3, 1), &rat(5, 7), &rat(2, 9)).unwrap();
    assert_eq!((m.clone(), big_u.clone(), v.clone()), (rat(3, 1), rat(5, 7), rat(2, 9)));
    assert_eq!(homogenize(&one, &m, &big_u, &v), (rat(3, 1), rat(5, 7), rat(2, 9)));
    assert!(dehomogenize(&rat(0, 1), &one, &one, &one).is_err());
}

#[test]
fn p_maps_to_the_first_ascent_point() {
    let m = m_sym();
    let ECPoint::Affine { x, y } = point_p(&m).unwrap() else { unreachable!() };
    let (u, v) = xy_to_quartic(&x, &y, &m).unwrap();
    assert_eq!(u, ratfunc("2/(1 - m^2)"));
    assert_eq!(v.pow(2), uv_quartic(&m).evaluate(&u));
    assert_eq!(quartic_to_xy(&u, &v, &m).unwrap(), (x, y));
}

/// Replaces `w^2` by `rel` until `p` has degree at most one in `w`.
fn reduce_mod(p: &Poly, w: Var, rel: &Poly) -> Poly {
    let cs = p.to_univariate(w);
    let wv = Poly::var(w);
    let mut out = Poly::zero();
    for (i, c) in cs.iter().enumerate() {
        let e = i as u32;
        let term = &(c * &rel.pow(e / 2)) * &wv.pow(e % 2);
        out = &out + &term;
    }
    out
}

#[test]
fn birational_maps_are_inverse_modulo_the_curves() {
    let m = m_sym();
    let (x, y) = (RatFunc::var(Var::X), RatFunc::var(Var::Y));
    let e = ecweier(&m);
    let cubic = e.rhs(&x).to_poly().unwrap();
    let (u, v) = xy_to_quartic(&x, &y, &m).unwrap();
    let (x2, y2) = quartic_to_xy(&u, &v, &m).unwrap();
    for (got, want) in [(x2, &x), (y2, &y)] {
        let diff = &got - want;
        assert!(reduce_mod(diff.num(), Var::Y, &cubic).is_zero());
    }

    let (u, v) = (RatFunc::var(Var::U), RatFunc::var(Var::V));
    let quartic = uv_quartic(&m).evaluate(&u).to_poly().unwrap();
    let (x, y) = quartic_to_xy(&u, &v, &m).unwrap();
    let (u2, v2) = xy_to_quartic(&x, &y, &m).unwrap();
    for (got, want) in [(u2, &u), (v2, &v)] {
        let diff = &got - want;
        assert!(reduce_mod(diff.num(), Var::V, &quartic).is_zero());
    }
    // the forward map lands on the curve modulo the quartic relation
    let lhs = &y.pow(2) - &e.rhs(&x);
    assert!(reduce_mod(lhs.num(), Var::V, &quartic).is_zero());
}

#[test]
fn torsion_screen() {
    let (e, p) = eq28();
    assert!(infinite_order_screen(&e, &p).unwrap());
    let e = WeierstrassModel::new(rat(-1, 1), rat(0, 1));
    assert!(!infinite_order_screen(&e, &ECPoint::affine(rat(0, 1), rat(0, 1))).unwrap());
    assert!(!infinite_order_screen(&e, &ECPoint::affine(rat(1, 1), rat(0, 1))).unwrap());
    // (2, 3) on Y^2 = X^3 + 1 has order 6
    let e = WeierstrassModel::new(rat(0, 1), rat(1, 1));
    assert!(!infinite_order_screen(&e, &ECPoint::affine(rat(2, 1), rat(3, 1))).unwrap());
    // integral but of infinite order: (3, 5) on Y^2 = X^3 - 2
    let e = WeierstrassModel::new(rat(0, 1), rat(-2, 1));
    assert!(infinite_order_screen(&e, &ECPoint::affine(rat(3, 1), rat(5, 1))).unwrap());
    let e = WeierstrassModel::new(rat(1, 2), rat(0, 1));
    assert!(infinite_order_screen(&e, &ECPoint::affine(rat(0, 1), rat(0, 1))).is_err());
}

#[test]
fn generator_first_multiple_is_first_family() {
    let fam = generate_family(1).unwrap();
    let want = find_family("parmsol1").unwrap();
    assert!(same_members(&fam.polys, &want.polys), "{:?}", fam.polys);
    assert!(generate_family(0).is_err());
}

#[test]
fn second_multiple_repeats_the_degree_twenty_family() {
    let fam = generate_family(2).unwrap();
    let want = canonicalize_polys(&find_family("parmsol3").unwrap().polys);
    assert!(same_members(&fam.polys, &want));
    assert_eq!(generate_family(3).unwrap().degree(), 40);
}

#[test]
fn generator_higher_multiples_verify() {
    for k in [2, 3] {
        let fam = generate_family(k).unwrap();
        let rep = verify_family_symbolic(&fam).unwrap();
        assert_eq!(rep.classification, fam.classification);
        assert!(fam.degree() > 8, "k = {k}");
    }
}

#[test]
fn multiples_of_p_over_function_field_stay_on_curve() {
    let m = m_sym();
    let e = ecweier(&m);
    let p = point_p(&m).unwrap();
    let p2 = e.double(&p).unwrap();
    assert!(e.contains(&p2));
    let p3 = e.add(&p2, &p).unwrap();
    assert!(e.contains(&p3));
    assert_eq!(specialize_point(&p3, &rat(4, 1)).unwrap(), eq28().0.mul(&eq28().1, 3).unwrap());
}

fn m_value() -> impl Strategy<Value = Rational> {
    (1i64..=30, 1i64..=5)
        .prop_filter("m^2 != 1", |(n, d)| n != d)
        .prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn specialized_round_trip(m in m_value(), k in 1i64..=4) {
        let e = ecweier(&m);
        let q = e.mul(&point_p(&m).unwrap(), k).unwrap();
        let (x, y) = q.coords().unwrap();
        match xy_to_quartic(x, y, &m) {
            Ok((u, v)) => {
                prop_assert_eq!(v.square(), uv_quartic(&m).evaluate(&u));
                prop_assert_eq!(quartic_to_xy(&u, &v, &m).unwrap(), (x.clone(), y.clone()));
            }
            Err(Error::Pole(_)) => {}
            Err(err) => prop_assert!(false, "{err}"),
        }
    }

    #[test]
    fn associativity(m in m_value(), i in -3i64..=3, j in -3i64..=3, k in -3i64..=3) {
        let e = ecweier(&m);
        let p = point_p(&m).unwrap();
        let (a, b, c) = (e.mul(&p, i).unwrap(), e.mul(&p, j).unwrap(), e.mul(&p, k).unwrap());
        let left = e.add(&e.add(&a, &b).unwrap(), &c).unwrap();
        let right = e.add(&a, &e.add(&b, &c).unwrap()).unwrap();
        prop_assert!(e.contains(&left));
        prop_assert_eq!(left, right);
    }
}

#[test]
fn generic_points_associate() {
    // three independent points on Y^2 = X^3 + 17
    let e = WeierstrassModel::new(rat(0, 1), rat(17, 1));
    let pts = [
        ECPoint::affine(rat(-2, 1), rat(3, 1)),
        ECPoint::affine(rat(-1, 1), rat(4, 1)),
        ECPoint::affine(rat(2, 1), rat(5, 1)),
    ];
    let (a, b, c) = (&pts[0], &pts[1], &pts[2]);
    let l = ec_add(&e, &ec_add(&e, a, b).unwrap(), c).unwrap();
    let r = ec_add(&e, a, &ec_add(&e, b, c).unwrap()).unwrap();
    assert!(e.contains(&l));
    assert_eq!(l, r);
}
