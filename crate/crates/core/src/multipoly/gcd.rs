//! Multivariate gcd by recursive content / primitive-part reduction, and the
//! square part of a polynomial via Yun's algorithm.

use super::{Poly, Var};

fn main_var(a: &Poly, b: &Poly) -> Option<Var> {
    let va = a.vars();
    let vb = b.vars();
    match (va.first(), vb.first()) {
        (Some(x), Some(y)) => Some(*x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(*x),
        (None, None) => None,
    }
}

/// Greatest common divisor, normalized to a primitive integer polynomial with
/// positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.num_terms() <= b.num_terms() {
        if b.div_exact_opt(a).is_some() {
            return a.normalized();
        }
    } else if a.div_exact_opt(b).is_some() {
        return b.normalized();
    }
    let x = main_var(a, b).expect("nonconstant input");
    if !a.contains(x) {
        return gcd(a, &content_in(b, x));
    }
    if !b.contains(x) {
        return gcd(&content_in(a, x), b);
    }
    let ca = content_in(a, x);
    let cb = content_in(b, x);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact_opt(&ca).expect("content divides");
    let pb = b.div_exact_opt(&cb).expect("content divides");
    let mut ua = pa.to_univariate(x);
    let mut ub = pb.to_univariate(x);
    if ua.len() < ub.len() {
        std::mem::swap(&mut ua, &mut ub);
    }
    let g = loop {
        let r = pseudo_rem(&ua, &ub);
        if r.is_empty() {
            break primitive_univariate(&ub);
        }
        if r.len() == 1 {
            break vec![Poly::one()];
        }
        ua = ub;
        ub = primitive_univariate(&r);
    };
    (&c * &Poly::from_univariate(&g, x)).normalized()
}

/// gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &Poly, v: Var) -> Poly {
    let coeffs = p.to_univariate(v);
    let mut acc = Poly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        if c.is_constant() {
            return Poly::one();
        }
        acc = gcd(&acc, c);
        if acc.is_constant() {
            return Poly::one();
        }
    }
    if acc.is_zero() {
        Poly::one()
    } else {
        acc
    }
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().is_some_and(Poly::is_zero) {
        v.pop();
    }
}

/// Pseudo-remainder of univariate polynomials with polynomial coefficients.
fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut r: Vec<Poly> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let t = &lr * bc;
            r[i + shift] = &r[i + shift] - &t;
        }
        debug_assert!(r[dr].is_zero());
        trim(&mut r);
    }
    r
}

fn primitive_univariate(p: &[Poly]) -> Vec<Poly> {
    let mut cont = Poly::zero();
    for c in p.iter().filter(|c| !c.is_zero()) {
        cont = gcd(&cont, c);
        if cont.is_constant() {
            break;
        }
    }
    let divided: Vec<Poly> = if cont.is_constant() || cont.is_zero() {
        p.to_vec()
    } else {
        p.iter()
            .map(|c| c.div_exact_opt(&cont).expect("content divides"))
            .collect()
    };
    let content = joint_content(&divided);
    let inv = content.recip();
    divided.iter().map(|c| c.scale(&inv)).collect()
}

/// Rational content of a list of polynomials, signed by the leading
/// coefficient of the last one.
fn joint_content(p: &[Poly]) -> crate::exactnum::Rational {
    use num_integer::Integer as _;
    use num_traits::{One, Signed, Zero};
    let mut num = crate::exactnum::Integer::zero();
    let mut den = crate::exactnum::Integer::one();
    for c in p {
        for (_, k) in c.terms() {
            num = num.gcd(k.numer());
            den = den.lcm(k.denom());
        }
    }
    let content = crate::exactnum::Rational::new(num, den);
    match p.last() {
        Some(l) if l.leading_coeff().is_negative() => -content,
        _ => content,
    }
}

/// The polynomial `q` (normalized) of largest degree with `q^2` dividing `p`.
pub fn square_part(p: &Poly) -> Poly {
    if p.is_constant() {
        return Poly::one();
    }
    let x = p.vars()[0];
    let c = content_in(p, x);
    let pp = p.div_exact_opt(&c).expect("content divides");
    let mut acc = square_part(&c);
    for (factor, mult) in yun(&pp, x) {
        if mult >= 2 {
            acc = &acc * &factor.pow(mult / 2);
        }
    }
    acc.normalized()
}

/// Squarefree decomposition in `x` of a polynomial primitive in `x`.
fn yun(f: &Poly, x: Var) -> Vec<(Poly, u32)> {
    let df = f.derivative(x);
    let a0 = gcd(f, &df);
    let mut b = f.div_exact_opt(&a0).expect("gcd divides");
    let mut c = df.div_exact_opt(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative(x);
    let mut out = Vec::new();
    let mut i = 1;
    while b.contains(x) {
        let fi = gcd(&b, &d);
        b = b.div_exact_opt(&fi).expect("gcd divides");
        c = d.div_exact_opt(&fi).expect("gcd divides");
        d = &c - &b.derivative(x);
        if fi.contains(x) {
            out.push((fi, i));
        }
        i += 1;
    }
    out
}
