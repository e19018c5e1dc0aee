//! Short Weierstrass curves over the rationals and over `Q(m)`, the maps
//! between the quartic model in `(U, V)` and the curve, and the family
//! generator driven by multiples of the point `P`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::families::{canonicalize_polys, clear_denominators, triad_from_u, Classification, ParametricFamily};
use crate::field::ExactField;
use crate::multipoly::{poly, Poly, RatFunc, Var};
use crate::quartic::QuarticModel;

/// `Y^2 = X^3 + a X + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassModel<F> {
    pub a: F,
    pub b: F,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ECPoint<F> {
    Identity,
    Affine { x: F, y: F },
}

impl<F: ExactField> ECPoint<F> {
    pub fn affine(x: F, y: F) -> Self {
        ECPoint::Affine { x, y }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, ECPoint::Identity)
    }

    pub fn coords(&self) -> Option<(&F, &F)> {
        match self {
            ECPoint::Identity => None,
            ECPoint::Affine { x, y } => Some((x, y)),
        }
    }

    pub fn map<G: ExactField>(&self, f: impl Fn(&F) -> Result<G>) -> Result<ECPoint<G>> {
        Ok(match self {
            ECPoint::Identity => ECPoint::Identity,
            ECPoint::Affine { x, y } => ECPoint::Affine { x: f(x)?, y: f(y)? },
        })
    }
}

impl<F: fmt::Display> fmt::Display for ECPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::Identity => write!(f, "O"),
            ECPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl<F: ExactField> WeierstrassModel<F> {
    pub fn new(a: F, b: F) -> Self {
        WeierstrassModel { a, b }
    }

    pub fn rhs(&self, x: &F) -> F {
        x.powi(3).plus(&self.a.times(x)).plus(&self.b)
    }

    pub fn contains(&self, p: &ECPoint<F>) -> bool {
        match p {
            ECPoint::Identity => true,
            ECPoint::Affine { x, y } => y.square() == self.rhs(x),
        }
    }

    /// `-16 (4 a^3 + 27 b^2)`.
    pub fn discriminant(&self) -> F {
        self.a
            .powi(3)
            .scaled(4)
            .plus(&self.b.square().scaled(27))
            .scaled(-16)
    }

    pub fn neg(&self, p: &ECPoint<F>) -> ECPoint<F> {
        match p {
            ECPoint::Identity => ECPoint::Identity,
            ECPoint::Affine { x, y } => ECPoint::affine(x.clone(), y.negated()),
        }
    }

    /// Chord-tangent sum, assuming both points lie on the curve.
    pub fn add(&self, p: &ECPoint<F>, q: &ECPoint<F>) -> Result<ECPoint<F>> {
        let (x1, y1, x2, y2) = match (p, q) {
            (ECPoint::Identity, _) => return Ok(q.clone()),
            (_, ECPoint::Identity) => return Ok(p.clone()),
            (ECPoint::Affine { x: x1, y: y1 }, ECPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        if x1 == x2 {
            if y1.plus(y2).vanishes() {
                return Ok(ECPoint::Identity);
            }
            return self.double(p);
        }
        let lambda = y2.minus(y1).checked_div(&x2.minus(x1))?;
        let x3 = lambda.square().minus(x1).minus(x2);
        let y3 = lambda.times(&x1.minus(&x3)).minus(y1);
        Ok(ECPoint::affine(x3, y3))
    }

    pub fn double(&self, p: &ECPoint<F>) -> Result<ECPoint<F>> {
        let ECPoint::Affine { x, y } = p else {
            return Ok(ECPoint::Identity);
        };
        if y.vanishes() {
            return Ok(ECPoint::Identity);
        }
        let lambda = x.square().scaled(3).plus(&self.a).checked_div(&y.scaled(2))?;
        let x3 = lambda.square().minus(&x.scaled(2));
        let y3 = lambda.times(&x.minus(&x3)).minus(y);
        Ok(ECPoint::affine(x3, y3))
    }

    /// `k * p` by double-and-add; negative `k` negates.
    pub fn mul(&self, p: &ECPoint<F>, k: i64) -> Result<ECPoint<F>> {
        let mut base = if k < 0 { self.neg(p) } else { p.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = ECPoint::Identity;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            n >>= 1;
            if n > 0 {
                base = self.double(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn map<G: ExactField>(&self, f: impl Fn(&F) -> Result<G>) -> Result<WeierstrassModel<G>> {
        Ok(WeierstrassModel { a: f(&self.a)?, b: f(&self.b)? })
    }
}

fn check_on<F: ExactField>(e: &WeierstrassModel<F>, p: &ECPoint<F>) -> Result<()> {
    if e.contains(p) {
        Ok(())
    } else {
        Err(Error::Domain(format!("point {p} is not on the curve")))
    }
}

/// Group sum with on-curve checks on both inputs.
pub fn ec_add<F: ExactField>(
    e: &WeierstrassModel<F>,
    p: &ECPoint<F>,
    q: &ECPoint<F>,
) -> Result<ECPoint<F>> {
    check_on(e, p)?;
    check_on(e, q)?;
    e.add(p, q)
}

pub fn ec_mul<F: ExactField>(e: &WeierstrassModel<F>, p: &ECPoint<F>, k: i64) -> Result<ECPoint<F>> {
    check_on(e, p)?;
    e.mul(p, k)
}

/// Specializes a model over `Q(m)` at a rational `m`.
pub fn specialize_model(e: &WeierstrassModel<RatFunc>, m: &Rational) -> Result<WeierstrassModel<Rational>> {
    e.map(|c| c.evaluate(&[(Var::m, m.clone())]))
}

pub fn specialize_point(p: &ECPoint<RatFunc>, m: &Rational) -> Result<ECPoint<Rational>> {
    p.map(|c| c.evaluate(&[(Var::m, m.clone())]))
}

/// The curve `Y^2 = X^3 - 432(m^4-2m^2-2)(m^2+1)^2 X - 1728(m^2-1)(m^2+1)^3(2m^4-4m^2-7)`.
pub fn ecweier<F: ExactField>(m: &F) -> WeierstrassModel<F> {
    let m2 = m.square();
    let n = m2.plus(&F::one_el());
    let a = m2
        .square()
        .minus(&m2.scaled(2))
        .minus(&F::from_i64(2))
        .times(&n.square())
        .scaled(-432);
    let b = m2
        .minus(&F::one_el())
        .times(&n.powi(3))
        .times(&m2.square().scaled(2).minus(&m2.scaled(4)).minus(&F::from_i64(7)))
        .scaled(-1728);
    WeierstrassModel { a, b }
}

/// `P = (-12(m^6 - 4m^2 - 3)/m^2, 216(m^2+1)^2/m^3)`.
pub fn point_p<F: ExactField>(m: &F) -> Result<ECPoint<F>> {
    if m.vanishes() {
        return Err(Error::Pole("P has a pole at m = 0".into()));
    }
    let m2 = m.square();
    let x = m2
        .powi(3)
        .minus(&m2.scaled(4))
        .minus(&F::from_i64(3))
        .scaled(-12)
        .checked_div(&m2)?;
    let y = m2.plus(&F::one_el()).square().scaled(216).checked_div(&m2.times(m))?;
    Ok(ECPoint::affine(x, y))
}

/// The quartic model in `(U, V)` obtained with `t = m s`.
pub fn uv_quartic<F: ExactField>(m: &F) -> QuarticModel<F> {
    let m2 = m.square();
    let n = m2.plus(&F::one_el());
    let inner = m2.square().scaled(2).minus(&m2.scaled(2)).minus(&F::from_i64(3));
    QuarticModel {
        a1: n.scaled(-4),
        a2: n.times(&inner).scaled(-2),
        a3: n.square().scaled(-4),
        a4: n.square(),
    }
}

/// Curve coordinates to quartic coordinates.
pub fn xy_to_quartic<F: ExactField>(x: &F, y: &F, m: &F) -> Result<(F, F)> {
    let m2 = m.square();
    let n = m2.plus(&F::one_el());
    let m4 = m2.square();
    let den = x
        .minus(&m4.scaled(24))
        .minus(&m2.scaled(36))
        .minus(&F::from_i64(12))
        .scaled(6);
    if den.vanishes() {
        return Err(Error::Pole("X = 24m^4 + 36m^2 + 12".into()));
    }
    let m6 = m4.times(&m2);
    let u_num = n
        .times(x)
        .scaled(6)
        .plus(&m.times(y))
        .plus(&m6.plus(&m4).minus(&m2).minus(&F::one_el()).scaled(72));
    let sextic = m6
        .scaled(8)
        .minus(&m4.scaled(15))
        .minus(&m2.scaled(21))
        .plus(&F::one_el());
    let v_num = m2
        .times(&x.powi(3))
        .scaled(2)
        .minus(&m2.times(&m2.scaled(2).plus(&F::one_el())).times(&n).times(&x.square()).scaled(36))
        .minus(&m2.times(&y.square()))
        .minus(&m2.times(m).times(&n.square()).times(y).scaled(432))
        .plus(&m2.times(&n.powi(3)).times(&sextic).scaled(1728));
    Ok((u_num.checked_div(&den)?, v_num.checked_div(&den.square())?))
}

/// Quartic coordinates to curve coordinates.
pub fn quartic_to_xy<F: ExactField>(u: &F, v: &F, m: &F) -> Result<(F, F)> {
    if m.vanishes() {
        return Err(Error::Pole("m = 0".into()));
    }
    let m2 = m.square();
    let n = m2.plus(&F::one_el());
    let c = n.times(&m2.square().scaled(2).minus(&m2.scaled(2)).minus(&F::from_i64(3)));
    let x = u
        .square()
        .scaled(3)
        .minus(&n.times(u).scaled(6))
        .plus(&v.scaled(3))
        .minus(&c)
        .scaled(6)
        .checked_div(&m2)?;
    let y = u
        .powi(3)
        .minus(&n.times(&u.square()).scaled(3))
        .plus(&u.times(v))
        .minus(&c.times(u))
        .minus(&n.times(v))
        .minus(&n.square())
        .scaled(108)
        .checked_div(&m2.times(m))?;
    Ok((x, y))
}

/// `(s, t, u, v) -> (m, U, V)` with `t = m s`, `u = s U`, `v = s^2 V`.
pub fn dehomogenize<F: ExactField>(s: &F, t: &F, u: &F, v: &F) -> Result<(F, F, F)> {
    if s.vanishes() {
        return Err(Error::Domain("s must be nonzero".into()));
    }
    Ok((t.checked_div(s)?, u.checked_div(s)?, v.checked_div(&s.square())?))
}

/// `(s, m, U, V) -> (t, u, v)`.
pub fn homogenize<F: ExactField>(s: &F, m: &F, u: &F, v: &F) -> (F, F, F) {
    (m.times(s), s.times(u), s.square().times(v))
}

/// `true` when `P` certainly has infinite order: a non-integral coordinate
/// settles it; otherwise no multiple up to 12 may be the identity.
pub fn infinite_order_screen(e: &WeierstrassModel<Rational>, p: &ECPoint<Rational>) -> Result<bool> {
    if !(e.a.is_integer() && e.b.is_integer()) {
        return Err(Error::Domain("curve coefficients must be integers".into()));
    }
    check_on(e, p)?;
    let ECPoint::Affine { x, y } = p else {
        return Ok(false);
    };
    if !(x.is_integer() && y.is_integer()) {
        return Ok(true);
    }
    let mut q = p.clone();
    for _ in 2..=12 {
        q = e.add(&q, p)?;
        if q.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Family in `(s, t)` from the multiple `k P`.
pub fn generate_family(k: u32) -> Result<ParametricFamily> {
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    let step = |what: &str| {
        let what = format!("k = {k}: {what}");
        move |e: Error| Error::step(what, e)
    };
    let m = RatFunc::var(Var::m);
    let e = ecweier(&m);
    let q = e.mul(&point_p(&m)?, i64::from(k)).map_err(step("multiple of P"))?;
    let Some((x, y)) = q.coords() else {
        return Err(Error::step(format!("k = {k}: multiple of P"), Error::Degenerate("identity".into())));
    };
    let (u, _) = xy_to_quartic(x, y, &m).map_err(step("map to quartic"))?;
    let members = triad_from_u(&RatFunc::one(), &m, &u).map_err(step("roots in x"))?;
    let in_m = clear_denominators(&members);
    let d = in_m.iter().map(|p| p.degree_in(Var::m)).max().unwrap_or(0);
    let d = d + d % 2;
    let to_t = [(Var::m, Poly::var(Var::t))];
    let polys = canonicalize_polys(&in_m.map(|p| p.homogenize(Var::m, Var::s, d).substitute(&to_t)));
    let classification = Classification::infer(&polys)?;
    Ok(ParametricFamily {
        name: format!("curve{k}"),
        params: vec![Var::s, Var::t],
        polys,
        witnesses: None,
        constraints: ["s", "t", "s^2 - t^2"].iter().map(|c| poly(c)).collect(),
        classification,
        label: format!("{k}P"),
    })
}

#[cfg(test)]
mod tests;
