//! Triads, square certificates, the cubic whose roots are a triad, and the
//! reduction of that cubic to a quadratic in `x`.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{
    is_perfect_square, squarefree_decompose, sum_of_two_squares, Integer, Rational, TwoSquares,
};
use crate::field::ExactField;

/// Three strictly positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triad {
    #[serde(serialize_with = "int_str")]
    pub a: Integer,
    #[serde(serialize_with = "int_str")]
    pub b: Integer,
    #[serde(serialize_with = "int_str")]
    pub c: Integer,
}

fn int_str<S: serde::Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl Triad {
    pub fn new(a: Integer, b: Integer, c: Integer) -> Result<Self> {
        if !(a.is_positive() && b.is_positive() && c.is_positive()) {
            return Err(Error::Domain(format!(
                "triad members must be positive, got ({a}, {b}, {c})"
            )));
        }
        Ok(Triad { a, b, c })
    }

    pub fn from_u64(a: u64, b: u64, c: u64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into())
    }

    pub fn members(&self) -> [&Integer; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn sorted(&self) -> Triad {
        let mut v = [self.a.clone(), self.b.clone(), self.c.clone()];
        v.sort();
        let [a, b, c] = v;
        Triad { a, b, c }
    }
}

impl fmt::Display for Triad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Nonnegative `(f, g, h)` with `f^2 = a+b+c`, `g^2 = ab+bc+ca`, `h^2 = abc`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SquareCertificate {
    #[serde(serialize_with = "int_str")]
    pub f: Integer,
    #[serde(serialize_with = "int_str")]
    pub g: Integer,
    #[serde(serialize_with = "int_str")]
    pub h: Integer,
}

impl SquareCertificate {
    /// Re-checks the three identities against a triad.
    pub fn certifies(&self, t: &Triad) -> bool {
        let (e1, e2, e3) = elementary_symmetric(t);
        &self.f * &self.f == e1 && &self.g * &self.g == e2 && &self.h * &self.h == e3
    }
}

/// Which elementary symmetric function failed to be a square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetricFn {
    Sum,
    PairSum,
    Product,
}

impl SymmetricFn {
    pub fn label(self) -> &'static str {
        match self {
            SymmetricFn::Sum => "e1",
            SymmetricFn::PairSum => "e2",
            SymmetricFn::Product => "e3",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            SymmetricFn::Sum => "a+b+c",
            SymmetricFn::PairSum => "ab+bc+ca",
            SymmetricFn::Product => "abc",
        }
    }
}

pub fn elementary_symmetric(t: &Triad) -> (Integer, Integer, Integer) {
    let (a, b, c) = (&t.a, &t.b, &t.c);
    (a + b + c, a * b + b * c + c * a, a * b * c)
}

/// Certificate, or the first symmetric function that is not a square.
pub fn check_triad(t: &Triad) -> std::result::Result<SquareCertificate, SymmetricFn> {
    let (e1, e2, e3) = elementary_symmetric(t);
    let f = is_perfect_square(&e1).ok_or(SymmetricFn::Sum)?;
    let g = is_perfect_square(&e2).ok_or(SymmetricFn::PairSum)?;
    let h = is_perfect_square(&e3).ok_or(SymmetricFn::Product)?;
    Ok(SquareCertificate { f, g, h })
}

pub fn verify_triad(t: &Triad) -> Option<SquareCertificate> {
    check_triad(t).ok()
}

/// Removes the largest square dividing all three members and sorts.
pub fn canonicalize(t: &Triad) -> Triad {
    let g = t.a.gcd(&t.b).gcd(&t.c);
    let (_, root) = squarefree_decompose(&g).expect("members are positive");
    let sq = &root * &root;
    Triad {
        a: &t.a / &sq,
        b: &t.b / &sq,
        c: &t.c / &sq,
    }
    .sorted()
}

/// Scales a positive rational triple by the square of the lcm of its
/// denominators and canonicalizes. Does not verify.
pub fn rational_to_integer_triad(ra: &Rational, rb: &Rational, rc: &Rational) -> Result<Triad> {
    if !(ra.is_positive() && rb.is_positive() && rc.is_positive()) {
        return Err(Error::Domain("rational triad members must be positive".into()));
    }
    let l = ra.denom().lcm(rb.denom()).lcm(rc.denom());
    let l2 = Rational::from_integer(&l * &l);
    let scale = |x: &Rational| (x * &l2).to_integer();
    let t = Triad::new(scale(ra), scale(rb), scale(rc))?;
    Ok(canonicalize(&t))
}

/// `(f, g, h)` of the cubic `x^3 - f^2 x^2 + g^2 x - h^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicSpec {
    pub f: Rational,
    pub g: Rational,
    pub h: Rational,
}

impl From<&SquareCertificate> for CubicSpec {
    fn from(c: &SquareCertificate) -> Self {
        CubicSpec {
            f: Rational::from_integer(c.f.clone()),
            g: Rational::from_integer(c.g.clone()),
            h: Rational::from_integer(c.h.clone()),
        }
    }
}

/// All rational roots of the cubic, with multiplicity, ascending.
pub fn rational_roots_cubic(c: &CubicSpec) -> Vec<Rational> {
    let coeffs = [
        -(&c.h * &c.h),
        &c.g * &c.g,
        -(&c.f * &c.f),
        <Rational as One>::one(),
    ];
    rational_roots_of_cubic(&coeffs)
}

/// Rational roots of `c3 x^3 + c2 x^2 + c1 x + c0` (coefficients low to high,
/// `c3 != 0`).
pub fn rational_roots_of_cubic(coeffs: &[Rational; 4]) -> Vec<Rational> {
    let l = coeffs
        .iter()
        .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<Integer> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let (c0, c1, c2, c3) = (&ints[0], &ints[1], &ints[2], &ints[3]);
    assert!(!c3.is_zero(), "leading coefficient of a cubic must be nonzero");
    // y = c3 x turns the cubic monic with integer coefficients.
    let b = c2.clone();
    let cc = c1 * c3;
    let d = c0 * c3 * c3;
    let mut roots: Vec<Rational> = integer_roots_monic_cubic(&b, &cc, &d)
        .into_iter()
        .map(|y| Rational::new(y, c3.clone()))
        .collect();
    roots.sort();
    roots
}

fn eval_monic(b: &Integer, c: &Integer, d: &Integer, y: &Integer) -> Integer {
    ((y + b) * y + c) * y + d
}

/// Integer roots, with multiplicity, of `y^3 + b y^2 + c y + d`.
///
/// The integers are split into at most three runs on which the cubic is
/// monotone (delimited by the floors of the critical points) and each run
/// is bisected.
fn integer_roots_monic_cubic(b: &Integer, c: &Integer, d: &Integer) -> Vec<Integer> {
    let bound = Integer::one() + b.abs().max(c.abs()).max(d.abs());
    let lo = -bound.clone();
    let hi = bound;
    // P'(y) = 3y^2 + 2by + c; critical points (-2b +- sqrt(D)) / 6.
    let disc = Integer::from(4) * b * b - Integer::from(12) * c;
    let mut runs: Vec<(Integer, Integer, bool)> = Vec::new();
    if disc.is_positive() {
        let r = disc.sqrt();
        let w = -(Integer::from(2) * b);
        let six = Integer::from(6);
        let (f1, f2) = if &r * &r == disc {
            ((&w - &r).div_floor(&six), (&w + &r).div_floor(&six))
        } else {
            ((&w - &r - Integer::one()).div_floor(&six), (&w + &r).div_floor(&six))
        };
        runs.push((lo.clone(), f1.clone().min(hi.clone()), true));
        runs.push(((&f1 + Integer::one()).max(lo.clone()), f2.clone().min(hi.clone()), false));
        runs.push(((&f2 + Integer::one()).max(lo), hi, true));
    } else {
        runs.push((lo, hi, true));
    }
    let mut found: Vec<Integer> = Vec::new();
    for (a, z, increasing) in runs {
        if a > z {
            continue;
        }
        // first y in [a, z] with sign(P(y)) on the far side of zero
        let (mut l, mut h) = (a, z.clone());
        while l < h {
            let mid = (&l + &h).div_floor(&Integer::from(2));
            let v = eval_monic(b, c, d, &mid);
            let past = if increasing { !v.is_negative() } else { !v.is_positive() };
            if past {
                h = mid;
            } else {
                l = &mid + Integer::one();
            }
        }
        if eval_monic(b, c, d, &l).is_zero() && !found.contains(&l) {
            found.push(l);
        }
    }
    // multiplicities by synthetic division
    let mut out = Vec::new();
    let mut poly = vec![d.clone(), c.clone(), b.clone(), Integer::one()];
    for r in found {
        loop {
            let (q, rem) = synthetic_div(&poly, &r);
            if !rem.is_zero() {
                break;
            }
            out.push(r.clone());
            poly = q;
            if poly.len() == 1 {
                break;
            }
        }
    }
    out.sort();
    out
}

fn synthetic_div(p: &[Integer], r: &Integer) -> (Vec<Integer>, Integer) {
    let n = p.len() - 1;
    let mut q = vec![Integer::zero(); n];
    let mut acc = Integer::zero();
    for i in (0..=n).rev() {
        acc = &acc * r + &p[i];
        if i > 0 {
            q[i - 1] = acc.clone();
        }
    }
    (q, acc)
}

/// The parameters `p, q, m, h` that fix one root `p^2 + q^2` of the cubic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PQParameterization<F> {
    pub p: F,
    pub q: F,
    pub m: F,
    pub h: F,
}

/// `(f, g)` making `p^2 + q^2` a root of `x^3 - f^2 x^2 + g^2 x - h^2`.
pub fn fg_from_parameterization<F: ExactField>(par: &PQParameterization<F>) -> Result<(F, F)> {
    let PQParameterization { p, q, m, h } = par;
    if m.vanishes() {
        return Err(Error::ExcludedBranch);
    }
    let norm = p.square().plus(&q.square());
    if norm.vanishes() {
        return Err(Error::Degenerate("p^2 + q^2 = 0".into()));
    }
    let m2 = m.square();
    let den = m2.times(p).minus(&m.times(q).scaled(2)).minus(p);
    if den.vanishes() {
        return Err(Error::Degenerate("m^2 p - 2 m q - p = 0".into()));
    }
    let norm2 = norm.square();
    let qh = q.times(h);
    let f_num = norm2
        .minus(&qh)
        .times(&m2)
        .minus(&m.times(p).times(h).scaled(2))
        .plus(&norm2)
        .plus(&qh);
    let f = f_num.negated().checked_div(&den.times(&norm))?;
    let pq = p.square().times(q).plus(&q.powi(3));
    let g_num = pq
        .minus(h)
        .times(&m2)
        .plus(&p.powi(3).plus(&p.times(&q.square())).scaled(2).times(m))
        .minus(&pq)
        .minus(h);
    let g = g_num.checked_div(&den)?;
    Ok((f, g))
}

/// Coefficients `(A, B, C)` of `A x^2 + B x + C`, the quadratic left after
/// removing the known root `p^2 + q^2`.
pub fn quad_in_x<F: ExactField>(s: &F, t: &F, u: &F) -> (F, F, F) {
    let s2 = s.square();
    let t2 = t.square();
    let a = t2.clone();
    let inner = s
        .powi(3)
        .minus(&s2.times(u).scaled(2))
        .plus(&s.times(&t2))
        .plus(&s.times(&u.square()))
        .minus(&t2.times(u).scaled(2));
    let b = s.times(&inner).negated();
    let c = u.square().times(&t2).times(&s2.plus(&t2));
    (a, b, c)
}

/// Both roots of `A x^2 + B x + C` when the discriminant is a square;
/// the root with the negative square root comes first.
pub fn roots_quad<F: ExactField>(a: &F, b: &F, c: &F) -> Result<Option<(F, F)>> {
    if a.vanishes() {
        return Err(Error::Degenerate("leading coefficient of quadratic is zero".into()));
    }
    let disc = b.square().minus(&a.times(c).scaled(4));
    let Some(r) = disc.sqrt_exact() else {
        return Ok(None);
    };
    let two_a = a.scaled(2);
    let nb = b.negated();
    Ok(Some((
        nb.minus(&r).checked_div(&two_a)?,
        nb.plus(&r).checked_div(&two_a)?,
    )))
}

/// Witness that a positive rational is a sum of two rational squares.
pub fn is_sum_two_rational_squares(x: &Rational) -> Option<TwoSquares> {
    if !x.is_positive() {
        return None;
    }
    let d = x.denom();
    let (p, q) = sum_of_two_squares(&(x.numer() * d))?;
    let w = TwoSquares {
        p: Rational::new(p, d.clone()),
        q: Rational::new(q, d.clone()),
        value: x.clone(),
    };
    debug_assert!(w.holds());
    Some(w)
}
