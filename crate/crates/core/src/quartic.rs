//! Quartic curves `v^2 = u^4 + a1 u^3 + a2 u^2 + a3 u + a4`: the problem
//! quartic in `(s, t)`, its discriminant companions, ascent from a square
//! end coefficient, and the two-point composition law.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::ExactField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticModel<F> {
    pub a1: F,
    pub a2: F,
    pub a3: F,
    pub a4: F,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticPoint<F> {
    pub u: F,
    pub v: F,
}

impl<F: ExactField> QuarticPoint<F> {
    pub fn new(u: F, v: F) -> Self {
        QuarticPoint { u, v }
    }
}

impl<F: fmt::Display> fmt::Display for QuarticPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Anchor used when matching the quartic against a squared quadratic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Quadratic's constant term is a square root of `a4`.
    Constant,
    /// Quadratic's `u^2` coefficient is a square root of the leading coefficient.
    Leading,
}

impl<F: ExactField> QuarticModel<F> {
    pub fn new(a1: F, a2: F, a3: F, a4: F) -> Self {
        QuarticModel { a1, a2, a3, a4 }
    }

    /// Coefficients from `u^0` up to `u^4`.
    pub fn coeffs(&self) -> [F; 5] {
        [
            self.a4.clone(),
            self.a3.clone(),
            self.a2.clone(),
            self.a1.clone(),
            F::one_el(),
        ]
    }

    pub fn evaluate(&self, u: &F) -> F {
        let mut acc = F::one_el();
        for c in [&self.a1, &self.a2, &self.a3, &self.a4] {
            acc = acc.times(u).plus(c);
        }
        acc
    }

    pub fn contains(&self, p: &QuarticPoint<F>) -> bool {
        p.v.square() == self.evaluate(&p.u)
    }

    /// The point above `u` whose `v` follows the square-root sign convention.
    pub fn point_at(&self, u: F) -> Option<QuarticPoint<F>> {
        let v = self.evaluate(&u).sqrt_exact()?;
        Some(QuarticPoint { u, v })
    }

    pub fn map<G: ExactField>(&self, f: impl Fn(&F) -> Result<G>) -> Result<QuarticModel<G>> {
        Ok(QuarticModel {
            a1: f(&self.a1)?,
            a2: f(&self.a2)?,
            a3: f(&self.a3)?,
            a4: f(&self.a4)?,
        })
    }
}

/// The quartic whose squareness makes the quadratic in `x` split.
pub fn euler_quartic<F: ExactField>(s: &F, t: &F) -> Result<QuarticModel<F>> {
    if s.vanishes() {
        return Err(Error::Domain("s must be nonzero".into()));
    }
    let s2 = s.square();
    let t2 = t.square();
    let n = s2.plus(&t2);
    let a1 = n.scaled(-4).checked_div(s)?;
    let inner = s2.square().scaled(3).plus(&s2.times(&t2).scaled(2)).minus(&t2.square().scaled(2));
    let a2 = n.times(&inner).scaled(2).checked_div(&s2.square())?;
    let a3 = n.square().scaled(-4).checked_div(s)?;
    let a4 = n.square();
    Ok(QuarticModel { a1, a2, a3, a4 })
}

/// `phi(s, t, u)`, the Euler quartic evaluated at `u`.
pub fn phi<F: ExactField>(s: &F, t: &F, u: &F) -> Result<F> {
    Ok(euler_quartic(s, t)?.evaluate(u))
}

/// `psi(s, t, x) = x(s^2 - x)t^4 + 2 s^4 t^2 x + s^2 (s^4 + s^2 x + x^2) x`.
pub fn psi<F: ExactField>(s: &F, t: &F, x: &F) -> F {
    let s2 = s.square();
    let t2 = t.square();
    let a = x.times(&s2.minus(x)).times(&t2.square());
    let b = s2.square().times(&t2).times(x).scaled(2);
    let c = s2
        .times(&s2.square().plus(&s2.times(x)).plus(&x.square()))
        .times(x);
    a.plus(&b).plus(&c)
}

/// One ascent step on `c4 w^4 + c3 w^3 + c2 w^2 + c1 w + c0` (coefficients
/// low to high). `anchor` must be a square root of `c0` (constant side) or
/// of `c4` (leading side). Returns `(w, y)` with `y^2` equal to the quartic.
pub fn ascend_with_anchor<F: ExactField>(c: &[F; 5], side: Side, anchor: &F) -> Result<(F, F)> {
    if anchor.vanishes() {
        return Err(Error::NoAscent("anchor coefficient is zero".into()));
    }
    let two_anchor = anchor.scaled(2);
    match side {
        Side::Constant => {
            // (anchor + g w + d w^2)^2 agrees through w^2
            let g = c[1].checked_div(&two_anchor)?;
            let d = c[2].minus(&g.square()).checked_div(&two_anchor)?;
            let den = c[4].minus(&d.square());
            if den.vanishes() {
                return Err(Error::NoAscent("residual equation has no linear term".into()));
            }
            let w = g.times(&d).scaled(2).minus(&c[3]).checked_div(&den)?;
            if w.vanishes() {
                return Err(Error::NoAscent("ascent returns the anchor point".into()));
            }
            let y = anchor.plus(&g.times(&w)).plus(&d.times(&w.square()));
            Ok((w, y))
        }
        Side::Leading => {
            // (anchor w^2 + g w + d)^2 agrees through w^2
            let g = c[3].checked_div(&two_anchor)?;
            let d = c[2].minus(&g.square()).checked_div(&two_anchor)?;
            let den = c[1].minus(&g.times(&d).scaled(2));
            if den.vanishes() {
                return Err(Error::NoAscent("residual equation has no linear term".into()));
            }
            let w = d.square().minus(&c[0]).checked_div(&den)?;
            let y = anchor.times(&w.square()).plus(&g.times(&w)).plus(&d);
            Ok((w, y))
        }
    }
}

/// Ascent on a quartic with square end coefficient, anchored at the
/// conventional square root.
pub fn ascend_coeffs<F: ExactField>(c: &[F; 5], side: Side) -> Result<(F, F)> {
    let end = match side {
        Side::Constant => &c[0],
        Side::Leading => &c[4],
    };
    let anchor = end
        .sqrt_exact()
        .ok_or_else(|| Error::NoAscent(format!("{side:?} coefficient is not a square")))?;
    ascend_with_anchor(c, side, &anchor)
}

pub fn fermat_ascend<F: ExactField>(q: &QuarticModel<F>, side: Side) -> Result<QuarticPoint<F>> {
    let (u, v) = ascend_coeffs(&q.coeffs(), side)?;
    Ok(QuarticPoint { u, v })
}

/// Every nondegenerate ascent over both sides and both anchor signs,
/// without repeated `u` values.
pub fn fermat_ascend_all<F: ExactField>(q: &QuarticModel<F>) -> Vec<(Side, QuarticPoint<F>)> {
    let c = q.coeffs();
    let mut out: Vec<(Side, QuarticPoint<F>)> = Vec::new();
    for side in [Side::Constant, Side::Leading] {
        let end = if side == Side::Constant { &c[0] } else { &c[4] };
        let Some(root) = end.sqrt_exact() else { continue };
        for anchor in [root.clone(), root.negated()] {
            if let Ok((u, v)) = ascend_with_anchor(&c, side, &anchor) {
                if !out.iter().any(|(_, p)| p.u == u) {
                    out.push((side, QuarticPoint { u, v }));
                }
            }
        }
    }
    out
}

/// First nondegenerate ascent, constant side before leading side.
pub fn fermat_ascend_any<F: ExactField>(q: &QuarticModel<F>) -> Result<QuarticPoint<F>> {
    fermat_ascend(q, Side::Constant).or_else(|_| fermat_ascend(q, Side::Leading))
}

/// New point from two points with distinct `u`; `v` is recovered as the
/// conventional square root of the quartic.
pub fn choudhry_compose<F: ExactField>(
    q: &QuarticModel<F>,
    p1: &QuarticPoint<F>,
    p2: &QuarticPoint<F>,
) -> Result<QuarticPoint<F>> {
    let (u1, v1, u2, v2) = (&p1.u, &p1.v, &p2.u, &p2.v);
    let du = u1.minus(u2);
    if du.vanishes() {
        return Err(Error::CompositionDegenerate("points share the same u".into()));
    }
    let QuarticModel { a1, a2, a3, a4 } = q;
    let p = u1.times(u2);
    let s = u1.plus(u2);
    let num = v1
        .times(v2)
        .scaled(-2)
        .plus(&du.times(&u2.times(v1).minus(&u1.times(v2))).scaled(2))
        .plus(&a1.times(&s).times(&p))
        .plus(&a2.times(&p).scaled(2))
        .plus(&a3.times(&s))
        .plus(&a4.scaled(2))
        .plus(&u1.square().minus(&p).plus(&u2.square()).times(&p).scaled(2));
    let den = du.times(
        &v1.minus(v2)
            .scaled(2)
            .plus(&a1.times(&du))
            .plus(&u1.square().minus(&u2.square()).scaled(2)),
    );
    if den.vanishes() {
        return Err(Error::CompositionDegenerate("composition denominator vanishes".into()));
    }
    let u = num.checked_div(&den)?;
    q.point_at(u.clone()).ok_or_else(|| {
        Error::VerificationFailed(format!("quartic is not a square at composed u = {u}"))
    })
}

/// The other root of `A z^2 + B z + C` given one root.
pub fn second_root_vieta<F: ExactField>(a: &F, b: &F, c: &F, known: &F) -> Result<F> {
    if a.vanishes() {
        return Err(Error::Degenerate("leading coefficient is zero".into()));
    }
    if known.vanishes() {
        b.negated().checked_div(a).map(|r| r.minus(known))
    } else {
        c.checked_div(&a.times(known))
    }
}
