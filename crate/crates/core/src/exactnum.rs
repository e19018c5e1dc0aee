//! Exact integer and rational arithmetic: square detection, factorization and
//! sums of two squares.
//!
//! `Integer` and `Rational` are the arbitrary precision types from
//! `num-bigint` / `num-rational`; both are canonical by construction (no
//! negative zero, rationals reduced with a positive denominator after every
//! operation).

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(v: Integer) -> Rational {
    BigRational::from_integer(v)
}

/// Floor of the square root.
pub fn isqrt(n: &Integer) -> Result<Integer> {
    if n.is_negative() {
        return Err(Error::Domain(format!("isqrt of negative integer {n}")));
    }
    Ok(n.sqrt())
}

/// The nonnegative square root of `n` when `n` is a perfect square.
pub fn is_perfect_square(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    // Squares mod 64 occupy only 12 residues; most non-squares exit here.
    let low = (n % 64u32).to_u32().unwrap_or(0);
    if !matches!(low, 0 | 1 | 4 | 9 | 16 | 17 | 25 | 33 | 36 | 41 | 49 | 57) {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// The nonnegative square root of a rational square.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    let n = is_perfect_square(x.numer())?;
    let d = is_perfect_square(x.denom())?;
    Some(BigRational::new(n, d))
}

/// Writes `n = kernel * root^2` with `kernel` squarefree.
pub fn squarefree_decompose(n: &Integer) -> Result<(Integer, Integer)> {
    if !n.is_positive() {
        return Err(Error::Domain(format!(
            "squarefree decomposition needs n >= 1, got {n}"
        )));
    }
    let mut kernel = Integer::one();
    let mut root = Integer::one();
    for (p, e) in factorize(n)? {
        if e % 2 == 1 {
            kernel *= &p;
        }
        root *= num_traits::pow(p, (e / 2) as usize);
    }
    Ok((kernel, root))
}

/// Squarefree kernel of a machine-size integer. Used by the search, where
/// values stay far below `u64::MAX`.
pub fn squarefree_kernel_u64(mut n: u64) -> u64 {
    assert!(n > 0, "kernel of zero");
    let mut kernel = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if e % 2 == 1 {
                kernel *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    kernel * n
}

const TRIAL_LIMIT: u32 = 1_000_000;

/// Prime factorization, sorted by prime.
///
/// Trial division up to 10^6, then Miller-Rabin and Pollard-Brent rho with
/// fixed seeds. The witness set below is deterministic for n < 3.3 * 10^24,
/// which covers everything this crate factors.
pub fn factorize(n: &Integer) -> Result<Vec<(Integer, u32)>> {
    if !n.is_positive() {
        return Err(Error::Domain(format!("factorize needs n >= 1, got {n}")));
    }
    let mut out: Vec<(Integer, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut p: u32 = 2;
    while p <= TRIAL_LIMIT {
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            break;
        }
        if (&rest % p).is_zero() {
            let mut e = 0;
            while (&rest % p).is_zero() {
                rest /= p;
                e += 1;
            }
            out.push((pb, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let mut big = Vec::new();
        split_large(rest, &mut big);
        big.sort();
        for q in big {
            match out.last_mut() {
                Some((last, e)) if *last == q => *e += 1,
                _ => out.push((q, 1)),
            }
        }
    }
    Ok(out)
}

fn split_large(n: Integer, acc: &mut Vec<Integer>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        acc.push(n);
        return;
    }
    if let Some(r) = is_perfect_square(&n) {
        split_large(r.clone(), acc);
        split_large(r, acc);
        return;
    }
    let d = pollard_brent(&n);
    split_large(&n / &d, acc);
    split_large(d, acc);
}

const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

pub fn is_probable_prime(n: &Integer) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    for &b in &MR_BASES {
        if *n == BigInt::from(b) {
            return true;
        }
        if (n % b).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &b in &MR_BASES {
        let mut x = BigInt::from(b).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of an odd composite `n`.
fn pollard_brent(n: &Integer) -> Integer {
    if n.is_even() {
        return BigInt::from(2);
    }
    let one = BigInt::one();
    for c in 1u32.. {
        let c = BigInt::from(c);
        let f = |x: &Integer| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m = 64u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            g = BigInt::one();
            while g.is_one() {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
            }
        }
        if g != *n && g != one {
            return g;
        }
    }
    unreachable!()
}

/// A rational number written as `p^2 + q^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoSquares {
    #[serde(serialize_with = "crate::exactnum::rational_str")]
    pub p: Rational,
    #[serde(serialize_with = "crate::exactnum::rational_str")]
    pub q: Rational,
    #[serde(serialize_with = "crate::exactnum::rational_str")]
    pub value: Rational,
}

impl TwoSquares {
    pub fn new(p: Rational, q: Rational) -> Self {
        let value = &p * &p + &q * &q;
        TwoSquares { p, q, value }
    }

    pub fn from_ints(p: i64, q: i64) -> Self {
        Self::new(rat(p, 1), rat(q, 1))
    }

    pub fn holds(&self) -> bool {
        &self.p * &self.p + &self.q * &self.q == self.value
    }
}

/// `n = p^2 + q^2` with `0 <= p <= q`, or `None` when some prime `3 mod 4`
/// divides `n` to an odd power.
pub fn sum_of_two_squares(n: &Integer) -> Option<(Integer, Integer)> {
    if !n.is_positive() {
        return None;
    }
    let factors = factorize(n).ok()?;
    let (mut x, mut y) = (BigInt::one(), BigInt::zero());
    for (p, e) in factors {
        let rem = (&p % 4u32).to_u32().unwrap_or(0);
        if rem == 3 {
            if e % 2 == 1 {
                return None;
            }
            let scale = num_traits::pow(p, (e / 2) as usize);
            x *= &scale;
            y *= &scale;
            continue;
        }
        let (a, b) = if rem == 2 {
            (BigInt::one(), BigInt::one())
        } else {
            prime_two_squares(&p)
        };
        for _ in 0..e {
            let nx = &x * &a - &y * &b;
            let ny = &x * &b + &y * &a;
            x = nx;
            y = ny;
        }
    }
    let (x, y) = (x.abs(), y.abs());
    Some(if x <= y { (x, y) } else { (y, x) })
}

/// Representation of a prime `p = 1 mod 4` via a square root of -1 and the
/// Euclidean algorithm (Hermite-Serret).
fn prime_two_squares(p: &Integer) -> (Integer, Integer) {
    let one = BigInt::one();
    let exp = (p - &one) >> 2;
    let mut root = BigInt::zero();
    for c in 2u32.. {
        let cand = BigInt::from(c).modpow(&exp, p);
        if (&cand * &cand) % p == p - &one {
            root = cand;
            break;
        }
    }
    let limit = p.sqrt();
    let (mut a, mut b) = (p.clone(), root);
    while b > limit {
        let r = &a % &b;
        a = b;
        b = r;
    }
    let other = (p - &b * &b).sqrt();
    debug_assert_eq!(&b * &b + &other * &other, *p);
    (b, other)
}

/// Quotient of two sums of two squares: given `alpha = a1^2 + a2^2` and `beta = b1^2 + b2^2`,
/// writes `alpha / beta` as a sum of two rational squares.
pub fn ratio_two_squares(alpha: &TwoSquares, beta: &TwoSquares) -> Result<TwoSquares> {
    if alpha.value.is_zero() || beta.value.is_zero() {
        return Err(Error::Domain("ratio of two squares needs nonzero values".into()));
    }
    let norm = &beta.p * &beta.p + &beta.q * &beta.q;
    let m = (&alpha.p * &beta.p + &alpha.q * &beta.q) / &norm;
    let n = (&alpha.p * &beta.q - &alpha.q * &beta.p) / &norm;
    Ok(TwoSquares {
        p: m,
        q: n,
        value: &alpha.value / &beta.value,
    })
}

/// Largest square dividing `n` (as its root), for `n > 0`.
pub fn square_part(n: &Integer) -> Integer {
    if n.is_zero() {
        return Integer::one();
    }
    let n = n.abs();
    squarefree_decompose(&n).map(|(_, r)| r).unwrap_or_else(|_| Integer::one())
}

pub fn is_positive_integer(x: &Rational) -> bool {
    x.is_integer() && x.numer().sign() == Sign::Plus
}

pub(crate) fn rational_str<S: serde::Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
