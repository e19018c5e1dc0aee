//! Exact multivariate polynomials and rational functions over the rationals.
//!
//! Every polynomial lives over one global, fixed alphabet of eighteen
//! symbols. Variable sets are therefore always compatible and the canonical
//! term order (graded lexicographic, `x` ranked highest) is the same
//! everywhere, which keeps printed forms byte-stable.

mod gcd;
mod parse;
mod ratfunc;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rational_sqrt, Integer, Rational};

pub use gcd::{content_in, gcd, square_part};
pub use ratfunc::{ratfunc, RatFunc};

pub const NVARS: usize = 18;

const NAMES: [&str; NVARS] = [
    "x", "u", "v", "U", "V", "X", "Y", "f", "g", "h", "p", "q", "m", "n", "r", "s", "t", "k",
];

/// A symbol of the global alphabet. Lower index means higher rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u8);

#[allow(non_upper_case_globals)]
impl Var {
    pub const x: Var = Var(0);
    pub const u: Var = Var(1);
    pub const v: Var = Var(2);
    pub const U: Var = Var(3);
    pub const V: Var = Var(4);
    pub const X: Var = Var(5);
    pub const Y: Var = Var(6);
    pub const f: Var = Var(7);
    pub const g: Var = Var(8);
    pub const h: Var = Var(9);
    pub const p: Var = Var(10);
    pub const q: Var = Var(11);
    pub const m: Var = Var(12);
    pub const n: Var = Var(13);
    pub const r: Var = Var(14);
    pub const s: Var = Var(15);
    pub const t: Var = Var(16);
    pub const k: Var = Var(17);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }

    pub fn from_name(name: &str) -> Option<Var> {
        NAMES.iter().position(|n| *n == name).map(|i| Var(i as u8))
    }

    pub fn all() -> impl Iterator<Item = Var> {
        (0..NVARS as u8).map(Var)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over the global alphabet, ordered graded-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: [u16; NVARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { deg: 0, exps: [0; NVARS] }
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = Self::one();
        m.exps[v.index()] = e;
        m.deg = e as u32;
        m
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.exps[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    fn with_exp(mut self, v: Var, e: u16) -> Self {
        let old = self.exps[v.index()];
        self.exps[v.index()] = e;
        self.deg = self.deg + e as u32 - old as u32;
        self
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(o.exps.iter()) {
            *a += *b;
        }
        Monomial { deg: self.deg + o.deg, exps }
    }

    fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(o.exps.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial { deg: self.deg - o.deg, exps })
    }

    fn halve(&self) -> Option<Monomial> {
        let mut exps = self.exps;
        for e in exps.iter_mut() {
            if *e % 2 == 1 {
                return None;
            }
            *e /= 2;
        }
        Some(Monomial { deg: self.deg / 2, exps })
    }
}

/// A polynomial with rational coefficients; no zero coefficient is stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(Integer::from(c)))
    }

    pub fn from_integer(c: Integer) -> Self {
        Self::constant(Rational::from_integer(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// Parses the text form used throughout (`"t^2*(s^2 - t^2)^2"`).
    pub fn parse(src: &str) -> Result<Self> {
        let rf = parse::parse_ratfunc(src)?;
        rf.to_poly()
            .ok_or_else(|| Error::Parse(format!("`{src}` is not a polynomial")))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Variables that actually occur, in rank order.
    pub fn vars(&self) -> Vec<Var> {
        let mut seen = [false; NVARS];
        for m in self.terms.keys() {
            for (i, e) in m.exps.iter().enumerate() {
                if *e > 0 {
                    seen[i] = true;
                }
            }
        }
        Var::all().filter(|v| seen[v.index()]).collect()
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.deg).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.deg).min().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.total_degree();
        self.terms.keys().all(|m| m.deg == d)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `Some(q)` with `self = b*q`, `None` when `b` does not divide `self`.
    pub fn divide_exact(&self, b: &Poly) -> Result<Option<Poly>> {
        if b.is_zero() {
            return Err(Error::Domain("exact division by the zero polynomial".into()));
        }
        Ok(self.div_exact_opt(b))
    }

    pub(crate) fn div_exact_opt(&self, b: &Poly) -> Option<Poly> {
        let (bm, bc) = b.leading_term().map(|(m, c)| (*m, c.clone()))?;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if b.terms.len() == 1 {
            let inv = bc.recip();
            let mut out = BTreeMap::new();
            for (m, c) in &self.terms {
                out.insert(m.div(&bm)?, c * &inv);
            }
            return Some(Poly { terms: out });
        }
        for v in Var::all() {
            if b.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            let qm = rm.div(&bm)?;
            let qc = rc / &bc;
            rem = &rem - &b.mul_term(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Square root with positive leading coefficient, when `self` is the
    /// square of a polynomial.
    ///
    /// Terms of the root are peeled off in decreasing monomial order: each new
    /// term is the leading term of the residual divided by twice the leading
    /// term of the root, failing as soon as that division is impossible.
    pub fn sqrt(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (lm, lc) = self.leading_term()?;
        let root_m = lm.halve()?;
        let root_c = rational_sqrt(lc)?;
        let floor = self.min_degree();
        let two_lead = &root_c + &root_c;
        let mut root = Poly::term(root_c, root_m);
        let mut rem = self - &(&root * &root);
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            let tm = rm.div(&root_m)?;
            if 2 * tm.deg < floor {
                return None;
            }
            let tc = rc / &two_lead;
            let twice = root.mul_term(&tm, &(&tc + &tc));
            let sq = Poly::term(&tc * &tc, tm.mul(&tm));
            rem = &(&rem - &twice) - &sq;
            root.add_term(tm, tc);
        }
        Some(root)
    }

    pub fn derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(m.with_exp(v, e - 1), c * Rational::from_integer(Integer::from(e)));
            }
        }
        out
    }

    /// Coefficients of `self` viewed as a polynomial in `v` (index = degree).
    pub fn to_univariate(&self, v: Var) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![Poly::zero(); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            out[e].add_term(m.with_exp(v, 0), c.clone());
        }
        out
    }

    pub fn from_univariate(coeffs: &[Poly], v: Var) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, k) in &c.terms {
                out.add_term(m.with_exp(v, m.exp(v) + e as u16), k.clone());
            }
        }
        out
    }

    /// Substitutes polynomials (or constants) for variables and expands.
    pub fn substitute(&self, bindings: &[(Var, Poly)]) -> Poly {
        let mut cache: Vec<Vec<Poly>> = vec![Vec::new(); bindings.len()];
        for (i, (v, p)) in bindings.iter().enumerate() {
            let d = self.degree_in(*v) as usize;
            let mut pw = vec![Poly::one()];
            for k in 1..=d {
                let next = &pw[k - 1] * p;
                pw.push(next);
            }
            cache[i] = pw;
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut acc = Poly::one();
            for (i, (v, _)) in bindings.iter().enumerate() {
                let e = rest.exp(*v);
                if e > 0 {
                    rest = rest.with_exp(*v, 0);
                    acc = &acc * &cache[i][e as usize];
                }
            }
            out = &out + &acc.mul_term(&rest, c);
        }
        out
    }

    pub fn substitute_rational(&self, bindings: &[(Var, Rational)]) -> Poly {
        let b: Vec<(Var, Poly)> = bindings
            .iter()
            .map(|(v, r)| (*v, Poly::constant(r.clone())))
            .collect();
        self.substitute(&b)
    }

    /// Exact value at a point binding every variable that occurs.
    pub fn evaluate(&self, point: &[(Var, Rational)]) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::all() {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let val = point
                    .iter()
                    .find(|(w, _)| *w == v)
                    .map(|(_, r)| r)
                    .ok_or_else(|| Error::Domain(format!("variable {v} is unbound")))?;
                t *= num_traits::pow(val.clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// `(content, primitive)` with `self = content * primitive`, where the
    /// primitive part has coprime integer coefficients and a positive leading
    /// coefficient.
    pub fn integer_primitive(&self) -> (Rational, Poly) {
        if self.is_zero() {
            return (Rational::zero(), Poly::zero());
        }
        use num_integer::Integer as _;
        let mut num = Integer::zero();
        let mut den = Integer::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let mut content = Rational::new(num, den);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Primitive integer form with positive leading coefficient.
    pub fn normalized(&self) -> Poly {
        self.integer_primitive().1
    }

    /// Every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Substitutes `v -> 1`; used to move between homogeneous and affine forms.
    pub fn dehomogenize(&self, v: Var) -> Poly {
        self.substitute_rational(&[(v, Rational::one())])
    }

    /// `s^d * self(w / s)` for a polynomial in `w` alone.
    pub fn homogenize(&self, w: Var, s: Var, d: u16) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(w);
            assert!(e <= d, "homogenization degree too small");
            out.add_term(m.with_exp(s, m.exp(s) + d - e), c.clone());
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let (big, small) = if self.terms.len() >= o.terms.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        if self.is_zero() || o.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, o: Poly) -> Poly {
                (&self).$method(&o)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, o: &Poly) -> Poly {
                (&self).$method(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for v in Var::all() {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Shorthand used heavily by tests and the family tables.
pub fn poly(src: &str) -> Poly {
    Poly::parse(src).unwrap_or_else(|e| panic!("bad polynomial literal `{src}`: {e}"))
}

#[cfg(test)]
mod tests;
