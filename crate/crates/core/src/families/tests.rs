use super::*;
use crate::exactnum::int;
use crate::multipoly::ratfunc;
use proptest::prelude::*;

fn ints(v: &[i64]) -> Vec<Integer> {
    v.iter().map(|x| int(*x)).collect()
}

fn eval(name: &str, v: &[i64]) -> Result<Triad> {
    evaluate_family(find_family(name).unwrap(), &ints(v)).map(|(t, _)| t)
}

fn triad(a: u64, b: u64, c: u64) -> Triad {
    Triad::from_u64(a, b, c).unwrap()
}

#[test]
fn registry_contents() {
    let names: Vec<&str> = registry().iter().map(|f| f.name.as_str()).collect();
    assert_eq!(
        names,
        [
            "parmsol1", "parmsol2", "parmsol3", "parmsol4", "allsq1", "allsq2", "allsq3", "allsq4",
            "gensol1", "euler1779"
        ]
    );
    assert_eq!(find_family("euler1779").unwrap().classification, Classification::AllSquares);
    assert!(matches!(find_family("nope"), Err(Error::UnknownFamily(_))));
    // the Fauquembergue display, written with t^4 s^2 for the second member
    let fq = [poly("4*s^4*t^2*(s^2 + t^2)"), poly("4*t^4*(s^2 + t^2)*s^2"), poly("(s^4 - t^4)^2")];
    assert_eq!(find_family("parmsol2").unwrap().polys, fq);
}

#[test]
fn evaluation_examples() {
    assert_eq!(eval("parmsol1", &[1, 2]).unwrap(), triad(45, 64, 180));
    assert_eq!(eval("parmsol2", &[1, 2]).unwrap(), triad(80, 225, 320));
    assert_eq!(eval("parmsol2", &[2, 1]).unwrap(), triad(80, 225, 320));
    assert_eq!(eval("gensol1", &[1, 1]).unwrap(), triad(72, 136, 153));
    assert_eq!(eval("allsq1", &[1, 2]).unwrap(), triad(11025, 19600, 82944));
    let t = eval("euler1779", &[2]).unwrap();
    assert_eq!(t, triad(5776, 36864, 263169));
    assert_eq!(
        (t.a.sqrt(), t.b.sqrt(), t.c.sqrt()),
        (int(76), int(192), int(513))
    );
    assert!(matches!(eval("parmsol1", &[1, 1]), Err(Error::Degenerate(_))));
    assert!(matches!(eval("parmsol1", &[0, 3]), Err(Error::Degenerate(_))));
    assert!(matches!(eval("parmsol1", &[1]), Err(Error::Domain(_))));
}

#[test]
fn symbolic_verification_of_registry() {
    for fam in registry() {
        let rep = verify_family_symbolic(fam).unwrap_or_else(|e| panic!("{}: {e}", fam.name));
        assert_eq!(rep.classification, fam.classification);
        if fam.classification == Classification::NoSquares {
            assert_eq!(rep.numeric_points.len(), 10);
        }
    }
    let w = verify_family_symbolic(find_family("parmsol1").unwrap()).unwrap().witnesses;
    assert_eq!(w[0], poly("s^4 + t^4"));
    let w = verify_family_symbolic(find_family("parmsol2").unwrap()).unwrap().witnesses;
    assert_eq!(w[0], poly("(s^2 + t^2)^2"));
}

#[test]
fn misclassified_family_is_rejected() {
    let mut fam = find_family("parmsol1").unwrap().clone();
    fam.classification = Classification::AllSquares;
    assert!(matches!(verify_family_symbolic(&fam), Err(Error::VerificationFailed(_))));
    let mut fam = find_family("parmsol1").unwrap().clone();
    fam.polys[0] = poly("s^2 + t^2");
    assert!(matches!(verify_family_symbolic(&fam), Err(Error::VerificationFailed(_))));
}

#[test]
fn pythagorean_substitution_gives_all_square_families() {
    for i in 1..=4 {
        let src = find_family(&format!("parmsol{i}")).unwrap();
        let target = find_family(&format!("allsq{i}")).unwrap();
        let got = pythagorean_substitute(src).unwrap();
        assert_eq!(got.polys, target.polys, "parmsol{i}");
        assert_eq!(got.classification, Classification::AllSquares);
    }
}

#[test]
fn stated_substitution_does_not_square_the_norm() {
    // s = 2mn, t = m^2 + n^2 leaves s^2 + t^2 a non-square
    let n = poly("s^2 + t^2").substitute(&[(Var::s, poly("2*m*n")), (Var::t, poly("m^2 + n^2"))]);
    assert!(n.sqrt().is_none());
}

#[test]
fn u_values_rebuild_one_square_families() {
    let cases = [
        ("parmsol1", "2*s^3/(s^2 - t^2)"),
        ("parmsol2", "(s^4 - t^4)/(2*s^3)"),
        (
            "parmsol3",
            "(s^4 - t^4)*(3*s^6 + s^4*t^2 + s^2*t^4 - t^6)/(2*s^3*(s^6 - s^4*t^2 - 5*s^2*t^4 + t^6))",
        ),
        (
            "parmsol4",
            "2*s^3*(s^6 - s^4*t^2 - 5*s^2*t^4 + t^6)/((3*s^6 + s^4*t^2 + s^2*t^4 - t^6)*(s^2 - t^2))",
        ),
    ];
    for (name, u) in cases {
        let got = family_from_u(name, &ratfunc(u)).unwrap();
        let want = canonicalize_polys(&find_family(name).unwrap().polys);
        assert!(same_members(&got.polys, &want), "{name}: {:?}", got.polys);
    }
}

#[test]
fn no_squares_chain_matches_closed_forms() {
    let ch = gensol1_chain().unwrap();
    assert_eq!(ch.x1, ratfunc("s^2*(r^2 + s^2)/r^2"));
    assert_eq!(
        ch.t,
        ratfunc("r*(r^6 - 9*r^4*s^2 - 9*r^2*s^4 - 3*s^6)/(5*r^6 + 3*r^4*s^2 + 3*r^2*s^4 + s^6)")
    );
    assert_eq!(ch.u[0], ratfunc(&format!("2*s^3*{R6}/{R8}")));
    assert_eq!(ch.x2[0], ratfunc(&format!("4*r^2*s^4*{R12}/{R8}^2")));
    let fam = gensol1_pipeline().unwrap();
    let want = canonicalize_polys(&find_family("gensol1").unwrap().polys);
    assert!(same_members(&fam.polys, &want));
    assert_eq!(fam.classification, Classification::NoSquares);
    assert_eq!(gensol1_at(&int(1), &int(1)).unwrap().0, triad(72, 136, 153));
}

#[test]
fn chain_runs_over_the_rationals() {
    let r = Rational::from_integer(int(2));
    let s = Rational::from_integer(int(3));
    let ch = no_squares_chain(&r, &s).unwrap();
    let sym = gensol1_chain().unwrap();
    let at = [(Var::r, r.clone()), (Var::s, s.clone())];
    assert_eq!(ch.t, sym.t.evaluate(&at).unwrap());
    let sym_u: Vec<Rational> = sym.u.iter().map(|u| u.evaluate(&at).unwrap()).collect();
    assert!(sym_u.contains(&ch.u[0]) && sym_u.contains(&ch.u[1]));
}

#[test]
fn second_u_family_self_certifies() {
    let fam = second_u_family().unwrap();
    assert_eq!(fam.degree(), 52);
    let rep = verify_family_symbolic(&fam).unwrap();
    assert_eq!(rep.classification, Classification::NoSquares);
    let (t, cert) = evaluate_family(&fam, &ints(&[1, 2])).unwrap();
    assert!(cert.certifies(&t));
}

fn check_point(fam: &ParametricFamily, values: &[Integer]) -> std::result::Result<(), TestCaseError> {
    match evaluate_family(fam, values) {
        Ok((t, cert)) => {
            prop_assert!(cert.certifies(&t));
            for m in t.members() {
                let w = is_sum_two_rational_squares(&Rational::from_integer(m.clone()));
                prop_assert!(w.is_some(), "{} member {m}", fam.name);
            }
        }
        Err(Error::Degenerate(_)) => {}
        Err(e) => prop_assert!(false, "{}: {e}", fam.name),
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn random_points_verify(x in 1i64..=60, y in 1i64..=60) {
        for fam in registry() {
            let values = if fam.params.len() == 1 { ints(&[x]) } else { ints(&[x, y]) };
            check_point(fam, &values)?;
        }
    }
}
