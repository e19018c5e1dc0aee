//! Closed-form parametric families, their symbolic certification, and the
//! constructions that produce them from a value of `u`.

use std::sync::OnceLock;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{square_part as int_square_part, Integer, Rational};
use crate::field::ExactField;
use crate::multipoly::{gcd, poly, square_part, Poly, RatFunc, Var};
use crate::quartic::{ascend_with_anchor, psi, second_root_vieta, Side};
use crate::triads::{
    canonicalize, check_triad, is_sum_two_rational_squares, quad_in_x, roots_quad,
    SquareCertificate, Triad,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    OneSquare,
    AllSquares,
    NoSquares,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::OneSquare => "one-square",
            Classification::AllSquares => "all-squares",
            Classification::NoSquares => "no-squares",
        }
    }

    /// From the number of members that are polynomial squares.
    pub fn infer(polys: &[Poly; 3]) -> Result<Self> {
        match polys.iter().filter(|p| p.sqrt().is_some()).count() {
            0 => Ok(Classification::NoSquares),
            1 => Ok(Classification::OneSquare),
            3 => Ok(Classification::AllSquares),
            _ => Err(Error::VerificationFailed(
                "exactly two members are squares, which no valid family allows".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParametricFamily {
    pub name: String,
    pub params: Vec<Var>,
    pub polys: [Poly; 3],
    pub witnesses: Option<[Poly; 3]>,
    /// Each of these must be nonzero at an admissible parameter point.
    pub constraints: Vec<Poly>,
    pub classification: Classification,
    /// Short citation such as `(16)`.
    pub label: String,
}

impl ParametricFamily {
    /// Highest total degree among the three members.
    pub fn degree(&self) -> u32 {
        self.polys.iter().map(Poly::total_degree).max().unwrap_or(0)
    }

    pub fn with_witnesses(mut self) -> Result<Self> {
        let report = verify_family_symbolic(&self)?;
        self.witnesses = Some(report.witnesses);
        Ok(self)
    }

    /// Provenance line in the style `Solution (16) with (s, t) = (1, 2)`.
    pub fn provenance(&self, values: &[Integer]) -> String {
        let names: Vec<&str> = self.params.iter().map(|v| v.name()).collect();
        let vals: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        if names.len() == 1 {
            format!("Solution {} with {} = {}", self.label, names[0], vals[0])
        } else {
            format!(
                "Solution {} with ({}) = ({})",
                self.label,
                names.join(", "),
                vals.join(", ")
            )
        }
    }
}

struct Entry {
    name: &'static str,
    params: &'static [Var],
    polys: [&'static str; 3],
    constraints: &'static [&'static str],
    classification: Classification,
    label: &'static str,
}

const S6: &str = "(s^6 - s^4*t^2 - 5*s^2*t^4 + t^6)";
const T6: &str = "(3*s^6 + s^4*t^2 + s^2*t^4 - t^6)";
const P12: &str =
    "(m^12 - 26*m^10*n^2 + 79*m^8*n^4 - 44*m^6*n^6 + 79*m^4*n^8 - 26*m^2*n^10 + n^12)";
const Q12: &str =
    "(m^12 - 10*m^10*n^2 + 15*m^8*n^4 - 204*m^6*n^6 + 15*m^4*n^8 - 10*m^2*n^10 + n^12)";
const R8: &str = "(r^8 + 2*r^6*s^2 - 12*r^4*s^4 - 6*r^2*s^6 - s^8)";
const R6: &str = "(5*r^6 + 3*r^4*s^2 + 3*r^2*s^4 + s^6)";
const R12: &str = "(r^12 + 6*r^10*s^2 + 87*r^8*s^4 + 108*r^6*s^6 + 55*r^4*s^8 + 14*r^2*s^10 + s^12)";

const ST: &[Var] = &[Var::s, Var::t];
const MN: &[Var] = &[Var::m, Var::n];
const RS: &[Var] = &[Var::r, Var::s];
const T: &[Var] = &[Var::t];
const ST_LOCI: &[&str] = &["s", "t", "s^2 - t^2"];
const MN_LOCI: &[&str] = &["m", "n", "m^2 - n^2"];

fn entries() -> Vec<Entry> {
    use Classification::*;
    let leak = |s: String| -> &'static str { Box::leak(s.into_boxed_str()) };
    vec![
        Entry {
            name: "parmsol1",
            params: ST,
            polys: [
                "t^2*(s^2 - t^2)^2*(s^2 + t^2)",
                "s^2*(s^2 - t^2)^2*(s^2 + t^2)",
                "4*s^4*t^4",
            ],
            constraints: ST_LOCI,
            classification: OneSquare,
            label: "(16)",
        },
        Entry {
            name: "parmsol2",
            params: ST,
            polys: ["4*s^4*t^2*(s^2 + t^2)", "4*s^2*t^4*(s^2 + t^2)", "(s^4 - t^4)^2"],
            constraints: ST_LOCI,
            classification: OneSquare,
            label: "(17)",
        },
        Entry {
            name: "parmsol3",
            params: ST,
            polys: [
                leak(format!("4*s^4*t^2*(s^2 + t^2)*{S6}^2")),
                leak(format!("(s^4 - t^4)^2*{S6}^2")),
                leak(format!("4*s^2*t^4*(s^2 + t^2)*{T6}^2")),
            ],
            constraints: ST_LOCI,
            classification: OneSquare,
            label: "(20)",
        },
        Entry {
            name: "parmsol4",
            params: ST,
            polys: [
                leak(format!("t^2*(s^2 - t^2)^2*(s^2 + t^2)*{T6}^2")),
                leak(format!("4*s^4*t^4*{T6}^2")),
                leak(format!("s^2*(s^2 - t^2)^2*(s^2 + t^2)*{S6}^2")),
            ],
            constraints: ST_LOCI,
            classification: OneSquare,
            label: "(22)",
        },
        Entry {
            name: "allsq1",
            params: MN,
            polys: [
                "(m^4 - n^4)^2*(m^4 - 6*m^2*n^2 + n^4)^2",
                "4*m^2*n^2*(m^2 + n^2)^2*(m^4 - 6*m^2*n^2 + n^4)^2",
                "64*m^4*n^4*(m^2 - n^2)^4",
            ],
            constraints: MN_LOCI,
            classification: AllSquares,
            label: "(29)",
        },
        Entry {
            name: "allsq2",
            params: MN,
            polys: [
                "64*m^4*n^4*(m^2 - n^2)^2",
                "16*m^2*n^2*(m^2 - n^2)^4",
                "(m^2 + n^2)^2*(m^4 - 6*m^2*n^2 + n^4)^2",
            ],
            constraints: MN_LOCI,
            classification: AllSquares,
            label: "(30)",
        },
        Entry {
            name: "allsq3",
            params: MN,
            polys: [
                leak(format!("64*m^4*n^4*(m^2 - n^2)^2*{P12}^2")),
                leak(format!("(m^2 + n^2)^2*(m^4 - 6*m^2*n^2 + n^4)^2*{P12}^2")),
                leak(format!("16*m^2*n^2*(m^2 - n^2)^4*{Q12}^2")),
            ],
            constraints: MN_LOCI,
            classification: AllSquares,
            label: "(31)",
        },
        Entry {
            name: "allsq4",
            params: MN,
            polys: [
                leak(format!("(m^4 - n^4)^2*(m^4 - 6*m^2*n^2 + n^4)^2*{Q12}^2")),
                leak(format!("64*m^4*n^4*(m^2 - n^2)^4*{Q12}^2")),
                leak(format!("4*m^2*n^2*(m^2 + n^2)^2*(m^4 - 6*m^2*n^2 + n^4)^2*{P12}^2")),
            ],
            constraints: MN_LOCI,
            classification: AllSquares,
            label: "(32)",
        },
        Entry {
            name: "gensol1",
            params: RS,
            polys: [
                leak(format!("r^2*(r^2 + s^2)*{R8}^2*{R12}")),
                leak(format!("s^2*(r^2 + s^2)*{R6}^2*{R8}^2")),
                leak(format!("4*r^4*s^4*{R6}^2*{R12}")),
            ],
            constraints: &["r", "s", R8],
            classification: NoSquares,
            label: "(38)",
        },
        Entry {
            name: "euler1779",
            params: T,
            polys: [
                "(t - 1)^2*(t + 1)^2*(t^2 + 5)^2*(t^4 - 10*t^2 + 5)^2",
                "256*t^4*(t - 1)^2*(t + 1)^2*(t^2 - 3)^2",
                "4*t^2*(t^2 - 3)^2*(t^4 - 10*t^2 + 5)^2",
            ],
            constraints: &["t", "t - 1", "t + 1"],
            classification: AllSquares,
            label: "1779",
        },
    ]
}

/// The ten transcribed families, parsed once.
pub fn registry() -> &'static [ParametricFamily] {
    static REG: OnceLock<Vec<ParametricFamily>> = OnceLock::new();
    REG.get_or_init(|| {
        entries()
            .into_iter()
            .map(|e| ParametricFamily {
                name: e.name.to_string(),
                params: e.params.to_vec(),
                polys: e.polys.map(poly),
                witnesses: None,
                constraints: e.constraints.iter().map(|c| poly(c)).collect(),
                classification: e.classification,
                label: e.label.to_string(),
            })
            .collect()
    })
}

pub fn find_family(name: &str) -> Result<&'static ParametricFamily> {
    registry()
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFamily(name.to_string()))
}

fn bind(fam: &ParametricFamily, values: &[Integer]) -> Result<Vec<(Var, Rational)>> {
    if values.len() != fam.params.len() {
        return Err(Error::Domain(format!(
            "family {} takes {} parameters, got {}",
            fam.name,
            fam.params.len(),
            values.len()
        )));
    }
    Ok(fam
        .params
        .iter()
        .zip(values)
        .map(|(v, x)| (*v, Rational::from_integer(x.clone())))
        .collect())
}

/// Canonical triad and certificate at an integer parameter point.
pub fn evaluate_family(
    fam: &ParametricFamily,
    values: &[Integer],
) -> Result<(Triad, SquareCertificate)> {
    let point = bind(fam, values)?;
    for c in &fam.constraints {
        if c.evaluate(&point)?.is_zero() {
            return Err(Error::Degenerate(format!("excluded locus {c} = 0")));
        }
    }
    let mut members = Vec::with_capacity(3);
    for p in &fam.polys {
        let v = p.evaluate(&point)?;
        debug_assert!(v.is_integer());
        let v = v.to_integer();
        if !v.is_positive() {
            return Err(Error::Degenerate(format!(
                "member {p} is {v} at this point, not positive"
            )));
        }
        members.push(v);
    }
    let [a, b, c]: [Integer; 3] = members.try_into().expect("three members");
    let triad = canonicalize(&Triad::new(a, b, c)?);
    let cert = check_triad(&triad).map_err(|e| {
        Error::VerificationFailed(format!(
            "{} at {:?} fails on {}",
            fam.name,
            values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            e.label()
        ))
    })?;
    Ok((triad, cert))
}

/// Outcome of a successful symbolic check.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyReport {
    pub name: String,
    pub witnesses: [Poly; 3],
    pub square_members: [bool; 3],
    pub classification: Classification,
    /// Parameter points at which members were shown to be sums of two
    /// rational squares (no-squares families only).
    pub numeric_points: Vec<Vec<Integer>>,
}

/// Square witnesses for the three symmetric functions, plus the
/// classification check.
pub fn verify_family_symbolic(fam: &ParametricFamily) -> Result<FamilyReport> {
    let [a, b, c] = &fam.polys;
    let e1 = &(a + b) + c;
    let e2 = &(&(a * b) + &(b * c)) + &(c * a);
    let e3 = &(a * b) * c;
    let mut witnesses = Vec::with_capacity(3);
    for (label, e) in [("e1", e1), ("e2", e2), ("e3", e3)] {
        let w = e.sqrt().ok_or_else(|| {
            Error::VerificationFailed(format!("{label} of {} is not a polynomial square", fam.name))
        })?;
        witnesses.push(w);
    }
    let witnesses: [Poly; 3] = witnesses.try_into().expect("three witnesses");
    let square_members = [a.sqrt().is_some(), b.sqrt().is_some(), c.sqrt().is_some()];
    let squares = square_members.iter().filter(|x| **x).count();
    let consistent = match fam.classification {
        Classification::AllSquares => squares == 3,
        Classification::OneSquare => squares == 1,
        Classification::NoSquares => squares == 0,
    };
    if !consistent {
        return Err(Error::VerificationFailed(format!(
            "{} is declared {} but has {squares} square members",
            fam.name,
            fam.classification.as_str()
        )));
    }
    let mut numeric_points = Vec::new();
    if fam.classification == Classification::NoSquares {
        for values in sample_points(fam, 10) {
            let (triad, _) = evaluate_family(fam, &values)?;
            for m in triad.members() {
                if is_sum_two_rational_squares(&Rational::from_integer(m.clone())).is_none() {
                    return Err(Error::VerificationFailed(format!(
                        "{} member {m} is not a sum of two squares",
                        fam.name
                    )));
                }
            }
            numeric_points.push(values);
        }
    }
    Ok(FamilyReport {
        name: fam.name.clone(),
        witnesses,
        square_members,
        classification: fam.classification,
        numeric_points,
    })
}

/// The first `count` admissible coprime points with small positive
/// coordinates, in a fixed order.
pub fn sample_points(fam: &ParametricFamily, count: usize) -> Vec<Vec<Integer>> {
    let mut out = Vec::new();
    let arity = fam.params.len();
    for total in 2i64.. {
        let candidates: Vec<Vec<i64>> = if arity == 1 {
            vec![vec![total]]
        } else {
            (1..total).map(|i| vec![i, total - i]).collect()
        };
        for c in candidates {
            if arity > 1 && c.iter().fold(0i64, |g, x| g.gcd(x)) != 1 {
                continue;
            }
            let values: Vec<Integer> = c.iter().map(|x| Integer::from(*x)).collect();
            if evaluate_family(fam, &values).is_ok() {
                out.push(values);
                if out.len() == count {
                    return out;
                }
            }
        }
    }
    unreachable!()
}

/// Integer polynomials with no common square factor: common square
/// polynomial factors and the largest square dividing every coefficient
/// are removed.
pub fn canonicalize_polys(polys: &[Poly; 3]) -> [Poly; 3] {
    // clear rational coefficients by a square
    let mut l = Integer::one();
    for p in polys {
        for (_, c) in p.terms() {
            l = l.lcm(c.denom());
        }
    }
    let l2 = Rational::from_integer(&l * &l);
    let mut ps = polys.clone().map(|p| p.scale(&l2));
    let g = gcd(&gcd(&ps[0], &ps[1]), &ps[2]);
    let q = square_part(&g);
    if !q.is_constant() {
        let q2 = q.pow(2);
        ps = ps.map(|p| p.divide_exact(&q2).ok().flatten().expect("square factor divides"));
    }
    let mut content = Integer::zero();
    for p in &ps {
        for (_, c) in p.terms() {
            content = content.gcd(c.numer());
        }
    }
    let r = int_square_part(&content);
    if !r.is_one() {
        let inv = Rational::new(Integer::one(), &r * &r);
        ps = ps.map(|p| p.scale(&inv));
    }
    ps
}

/// Whether two triples agree as multisets.
pub fn same_members(a: &[Poly; 3], b: &[Poly; 3]) -> bool {
    let mut used = [false; 3];
    a.iter().all(|p| {
        (0..3).any(|j| {
            if !used[j] && b[j] == *p {
                used[j] = true;
                true
            } else {
                false
            }
        })
    })
}

/// `s = 2mn`, `t = m^2 - n^2` in a one-square family, which turns
/// `s^2 + t^2` into `(m^2 + n^2)^2`.
pub fn pythagorean_substitute(src: &ParametricFamily) -> Result<ParametricFamily> {
    if src.params != ST {
        return Err(Error::Domain(format!("{} is not a family in (s, t)", src.name)));
    }
    let sub = [(Var::s, poly("2*m*n")), (Var::t, poly("m^2 - n^2"))];
    let polys = canonicalize_polys(&src.polys.clone().map(|p| p.substitute(&sub)));
    let classification = Classification::infer(&polys)?;
    Ok(ParametricFamily {
        name: format!("{}-pythagorean", src.name),
        params: MN.to_vec(),
        polys,
        witnesses: None,
        constraints: MN_LOCI.iter().map(|c| poly(c)).collect(),
        classification,
        label: format!("{} at s = 2mn, t = m^2 - n^2", src.label),
    })
}

/// The rational triad `(s^2 + t^2, x1, x2)` given `u`, where `x1, x2`
/// are the roots of the quadratic in `x`.
pub fn triad_from_u<F: ExactField>(s: &F, t: &F, u: &F) -> Result<[F; 3]> {
    let (a, b, c) = quad_in_x(s, t, u);
    let (x1, x2) = roots_quad(&a, &b, &c)?
        .ok_or_else(|| Error::Degenerate("discriminant in x is not a square".into()))?;
    Ok([s.square().plus(&t.square()), x1, x2])
}

/// Scales rational-function members by the square of the lcm of their
/// denominators and canonicalizes.
pub fn clear_denominators(members: &[RatFunc; 3]) -> [Poly; 3] {
    let mut l = Poly::one();
    for m in members {
        let g = gcd(&l, m.den());
        l = &l * &m.den().divide_exact(&g).ok().flatten().expect("gcd divides");
    }
    let l2 = RatFunc::from_poly(l.pow(2));
    let polys = members
        .clone()
        .map(|m| (&m * &l2).to_poly().expect("denominator cleared"));
    canonicalize_polys(&polys)
}

/// Family in `(s, t)` from a rational function `u(s, t)` that makes the
/// quadratic in `x` split.
pub fn family_from_u(name: &str, u: &RatFunc) -> Result<ParametricFamily> {
    let (s, t) = (RatFunc::var(Var::s), RatFunc::var(Var::t));
    let members = triad_from_u(&s, &t, u)?;
    let polys = clear_denominators(&members);
    let classification = Classification::infer(&polys)?;
    Ok(ParametricFamily {
        name: name.to_string(),
        params: ST.to_vec(),
        polys,
        witnesses: None,
        constraints: ST_LOCI.iter().map(|c| poly(c)).collect(),
        classification,
        label: format!("from u = {u}"),
    })
}

/// Every intermediate value of the no-squares construction.
#[derive(Debug, Clone, PartialEq)]
pub struct NoSquaresChain<F> {
    /// The root `s^2 (r^2 + s^2) / r^2`.
    pub x1: F,
    /// Second value of `t` making `psi` a square.
    pub t: F,
    /// The two values of `u` solving the quadratic for this `x1` and `t`,
    /// the one of lower degree first.
    pub u: [F; 2],
    /// Second root in `x` for each `u`.
    pub x2: [F; 2],
}

/// Runs the construction over any field. Over rational functions the
/// `u` roots are ordered by degree; over the rationals their order follows
/// the square-root sign convention and carries no meaning.
pub fn no_squares_chain<F: ExactField>(r: &F, s: &F) -> Result<NoSquaresChain<F>> {
    let step = |name: &'static str| move |e: Error| Error::step(name, e);
    if r.vanishes() || s.vanishes() {
        return Err(Error::Degenerate("r and s must be nonzero".into()));
    }
    let s2 = s.square();
    let r2 = r.square();
    let x1 = s2.times(&r2.plus(&s2)).checked_div(&r2).map_err(step("x1"))?;
    // psi(s, r + w, x1) as a quartic in w, anchored at its square value at w = 0
    let qa = x1.times(&s2.minus(&x1));
    let qb = s2.square().times(&x1).scaled(2);
    let qc = s2.times(&s2.square().plus(&s2.times(&x1)).plus(&x1.square())).times(&x1);
    let coeffs = [
        qa.times(&r2.square()).plus(&qb.times(&r2)).plus(&qc),
        qa.times(&r2.times(r)).scaled(4).plus(&qb.times(r).scaled(2)),
        qa.times(&r2).scaled(6).plus(&qb),
        qa.times(r).scaled(4),
        qa.clone(),
    ];
    debug_assert!(coeffs[0] == psi(s, r, &x1));
    let anchor = coeffs[0]
        .sqrt_exact()
        .ok_or_else(|| Error::Step { step: "t".into(), reason: "psi is not a square at t = r".into() })?;
    let (w, _) = ascend_with_anchor(&coeffs, Side::Constant, &anchor).map_err(step("t"))?;
    let t = r.plus(&w);
    let t2 = t.square();
    let n = s2.plus(&t2);
    // the quadratic in x, read as a quadratic in u
    let ua = t2.times(&n).minus(&s2.times(&x1));
    let ub = s.times(&n).times(&x1).scaled(2);
    let uc = t2.times(&x1.square()).minus(&s2.times(&n).times(&x1));
    let (ua1, ua2) = roots_quad(&ua, &ub, &uc)
        .map_err(step("u"))?
        .ok_or_else(|| Error::Step { step: "u".into(), reason: "discriminant in u is not a square".into() })?;
    let u = order_by_size(ua1, ua2);
    let mut x2 = Vec::with_capacity(2);
    for ui in &u {
        let (a, b, c) = quad_in_x(s, &t, ui);
        x2.push(second_root_vieta(&a, &b, &c, &x1).map_err(step("x2"))?);
    }
    let x2: [F; 2] = x2.try_into().expect("two roots");
    Ok(NoSquaresChain { x1, t, u, x2 })
}

fn order_by_size<F: ExactField>(a: F, b: F) -> [F; 2] {
    if b.complexity() < a.complexity() {
        [b, a]
    } else {
        [a, b]
    }
}

fn symbolic_chain() -> Result<&'static NoSquaresChain<RatFunc>> {
    static CHAIN: OnceLock<std::result::Result<NoSquaresChain<RatFunc>, Error>> = OnceLock::new();
    CHAIN
        .get_or_init(|| no_squares_chain(&RatFunc::var(Var::r), &RatFunc::var(Var::s)))
        .as_ref()
        .map_err(Clone::clone)
}

fn no_squares_family(which: usize, name: &str) -> Result<ParametricFamily> {
    let ch = symbolic_chain()?;
    let n = &RatFunc::var(Var::s).pow(2) + &ch.t.pow(2);
    let polys = clear_denominators(&[n, ch.x1.clone(), ch.x2[which].clone()]);
    let classification = Classification::infer(&polys)?;
    let mut constraints = vec![poly("r"), poly("s")];
    if which == 0 {
        constraints.push(poly(R8));
    }
    Ok(ParametricFamily {
        name: name.to_string(),
        params: RS.to_vec(),
        polys,
        witnesses: None,
        constraints,
        classification,
        label: if which == 0 { "(38)".into() } else { "second u".into() },
    })
}

/// The no-squares family rebuilt from scratch by the construction.
pub fn gensol1_pipeline() -> Result<ParametricFamily> {
    no_squares_family(0, "gensol1-derived")
}

/// The same construction through the other root in `u`.
pub fn second_u_family() -> Result<ParametricFamily> {
    static FAM: OnceLock<std::result::Result<ParametricFamily, Error>> = OnceLock::new();
    FAM.get_or_init(|| no_squares_family(1, "gensol2"))
        .as_ref()
        .cloned()
        .map_err(Clone::clone)
}

/// The symbolic intermediates of the no-squares construction in `(r, s)`.
pub fn gensol1_chain() -> Result<NoSquaresChain<RatFunc>> {
    symbolic_chain().cloned()
}

/// Numeric run at integer `(r, s)`: evaluates the symbolic family.
pub fn gensol1_at(r: &Integer, s: &Integer) -> Result<(Triad, SquareCertificate)> {
    let fam = symbolic_gensol1()?;
    evaluate_family(fam, &[r.clone(), s.clone()])
}

fn symbolic_gensol1() -> Result<&'static ParametricFamily> {
    static FAM: OnceLock<std::result::Result<ParametricFamily, Error>> = OnceLock::new();
    FAM.get_or_init(gensol1_pipeline).as_ref().map_err(Clone::clone)
}

#[cfg(test)]
mod tests;
