use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{gcd, parse, Poly, Var};
use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// A quotient of polynomials in lowest terms.
///
/// Canonical form: numerator and denominator are coprime, both have integer
/// coefficients with no common integer factor, and the denominator's leading
/// coefficient is positive. Two equal rational functions therefore compare
/// equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("rational function with zero denominator".into()));
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact_opt(&g).expect("gcd divides"),
                den.div_exact_opt(&g).expect("gcd divides"),
            )
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Normalizes constants only; caller guarantees `gcd(num, den) = 1`.
    fn from_coprime(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (cn, pn) = num.integer_primitive();
        let (cd, pd) = den.integer_primitive();
        let ratio = cn / cd;
        RatFunc {
            num: pn.scale(&Rational::from_integer(ratio.numer().clone())),
            den: pd.scale(&Rational::from_integer(ratio.denom().clone())),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_coprime(p, Poly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(Poly::from_int(c))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn parse(src: &str) -> Result<Self> {
        parse::parse_ratfunc(src)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one_poly() && self.den.is_one_poly()
    }

    pub fn to_poly(&self) -> Option<Poly> {
        let c = self.den.constant_value()?;
        Some(self.num.scale(&c.recip()))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        Some(self.num.constant_value()? / self.den.constant_value()?)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v.sort();
        v.dedup();
        v
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<RatFunc> {
        if o.is_zero() {
            return Err(Error::Domain("division by the zero rational function".into()));
        }
        let inv = RatFunc::from_coprime(o.den.clone(), o.num.clone());
        Ok(self * &inv)
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc::from_coprime(self.num.pow(e), self.den.pow(e))
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        RatFunc::from_coprime(self.num.scale(c), self.den.clone())
    }

    pub fn evaluate(&self, point: &[(Var, Rational)]) -> Result<Rational> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator {} vanishes", self.den)));
        }
        Ok(self.num.evaluate(point)? / d)
    }

    pub fn substitute(&self, bindings: &[(Var, RatFunc)]) -> Result<RatFunc> {
        let n = self.num.substitute_rf(bindings)?;
        let d = self.den.substitute_rf(bindings)?;
        n.checked_div(&d)
    }

    pub fn substitute_rational(&self, bindings: &[(Var, Rational)]) -> Result<RatFunc> {
        let n = self.num.substitute_rational(bindings);
        let d = self.den.substitute_rational(bindings);
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator {} vanishes", self.den)));
        }
        RatFunc::new(n, d)
    }

    /// Square root with positive leading coefficient in numerator and
    /// denominator, when one exists.
    pub fn sqrt(&self) -> Option<RatFunc> {
        let n = self.num.sqrt()?;
        let d = self.den.sqrt()?;
        Some(RatFunc::from_coprime(n, d))
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// Substitutes rational functions for variables, clearing all
    /// denominators at once before the final normalization.
    pub fn substitute_rf(&self, bindings: &[(Var, RatFunc)]) -> Result<RatFunc> {
        let degs: Vec<u16> = bindings.iter().map(|(v, _)| self.degree_in(*v)).collect();
        let powers = |p: &Poly, d: u16| {
            let mut out = vec![Poly::one()];
            for i in 1..=d as usize {
                let next = &out[i - 1] * p;
                out.push(next);
            }
            out
        };
        let num_pw: Vec<Vec<Poly>> = bindings
            .iter()
            .zip(&degs)
            .map(|((_, r), d)| powers(r.num(), *d))
            .collect();
        let den_pw: Vec<Vec<Poly>> = bindings
            .iter()
            .zip(&degs)
            .map(|((_, r), d)| powers(r.den(), *d))
            .collect();
        let mut total = Poly::zero();
        for (m, c) in self.terms() {
            let mut rest = *m;
            let mut acc = Poly::term(c.clone(), super::Monomial::one());
            for (i, (v, _)) in bindings.iter().enumerate() {
                let e = rest.exp(*v);
                rest = rest.with_exp(*v, 0);
                acc = &acc * &num_pw[i][e as usize];
                acc = &acc * &den_pw[i][(degs[i] - e) as usize];
            }
            total = &total + &acc.mul_term(&rest, &Rational::one());
        }
        let mut den = Poly::one();
        for (i, d) in degs.iter().enumerate() {
            den = &den * &den_pw[i][*d as usize];
        }
        RatFunc::new(total, den)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone()).expect("nonzero");
        }
        let g = gcd(&self.den, &o.den);
        let bd = self.den.div_exact_opt(&g).expect("gcd divides");
        let dd = o.den.div_exact_opt(&g).expect("gcd divides");
        let num = &(&self.num * &dd) + &(&o.num * &bd);
        let den = &bd * &o.den;
        RatFunc::new(num, den).expect("nonzero")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let a = self.num.div_exact_opt(&g1).expect("gcd divides");
        let d = o.den.div_exact_opt(&g1).expect("gcd divides");
        let c = o.num.div_exact_opt(&g2).expect("gcd divides");
        let b = self.den.div_exact_opt(&g2).expect("gcd divides");
        RatFunc::from_coprime(&a * &c, &b * &d)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly, strict: bool| {
            let s = p.to_string();
            if s.contains(' ') || (strict && s.contains(['*', '/'])) {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num, false), wrap(&self.den, true))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

/// Shorthand for literals in tables and tests.
pub fn ratfunc(src: &str) -> RatFunc {
    RatFunc::parse(src).unwrap_or_else(|e| panic!("bad rational function literal `{src}`: {e}"))
}
