//! Exhaustive search for triads below a bound, the regression table of known triads,
//! and the fixed corpus of historical triads.

use num_integer::Integer as _;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Integer;
use crate::families::{evaluate_family, find_family};
use crate::triads::{check_triad, SquareCertificate, Triad};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest member allowed.
    pub bound: u64,
    /// Skip triads whose members share a square factor.
    pub primitive_only: bool,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl SearchConfig {
    pub fn new(bound: u64) -> Self {
        SearchConfig { bound, primitive_only: false, workers: None }
    }

    pub fn primitive(mut self) -> Self {
        self.primitive_only = true;
        self
    }

    pub fn with_workers(mut self, w: usize) -> Self {
        self.workers = Some(w);
        self
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig::new(10_000)
    }
}

/// Squarefree kernels of `0..=n` by sieving out squares.
fn kernel_table(n: u64) -> Vec<u64> {
    let mut ker: Vec<u64> = (0..=n).collect();
    let mut i = 2u64;
    while i * i <= n {
        let sq = i * i;
        let mut j = sq;
        while j <= n {
            while ker[j as usize].is_multiple_of(sq) {
                ker[j as usize] /= sq;
            }
            j += sq;
        }
        i += 1;
    }
    ker
}

fn is_square_u64(n: u64) -> Option<u64> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// All triads `a <= b <= c <= bound` with square symmetric functions, in
/// lexicographic order. Every result is re-verified with big integers.
pub fn search_triads(cfg: &SearchConfig) -> Result<Vec<(Triad, SquareCertificate)>> {
    if cfg.bound == 0 {
        return Err(Error::Domain("bound must be at least 1".into()));
    }
    // keeps ab + bc + ca below 2^64
    if cfg.bound > 1 << 31 {
        return Err(Error::Domain("bound exceeds the supported range".into()));
    }
    let run = || search_inner(cfg);
    #[cfg(feature = "parallel")]
    let raw = match cfg.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(run),
        None => run(),
    };
    #[cfg(not(feature = "parallel"))]
    let raw = run();
    raw.into_iter()
        .map(|(a, b, c)| {
            let t = Triad::from_u64(a, b, c)?;
            let cert = check_triad(&t).map_err(|f| {
                Error::Internal(format!("search emitted {t}, which fails on {}", f.label()))
            })?;
            Ok((t, cert))
        })
        .collect()
}

fn search_inner(cfg: &SearchConfig) -> Vec<(u64, u64, u64)> {
    let n = cfg.bound;
    let ker = kernel_table(n);
    let per_a = |a: u64| {
            let ker = &ker;
            let ka = ker[a as usize];
            (a..=n).flat_map(move |b| {
                let kb = ker[b as usize];
                let g = ka.gcd(&kb);
                // kernel of a*b; c must share it for abc to be a square
                let k = (ka / g) * (kb / g);
                let mut found = Vec::new();
                if k > n {
                    return found.into_iter();
                }
                let mut j = (b / k).isqrt();
                while k * j * j < b {
                    j += 1;
                }
                loop {
                    let c = k * j * j;
                    if c > n {
                        break;
                    }
                    debug_assert!(is_square_u128(a as u128 * b as u128 * c as u128));
                    if is_square_u64(a + b + c).is_some()
                        && is_square_u64(a * b + b * c + c * a).is_some()
                        && (!cfg.primitive_only || {
                            let g = a.gcd(&b).gcd(&c);
                            ker[g as usize] == g
                        })
                    {
                        found.push((a, b, c));
                    }
                    j += 1;
                }
                found.into_iter()
            })
    };
    #[cfg(feature = "parallel")]
    let rows = (1..=n).into_par_iter().flat_map_iter(per_a);
    #[cfg(not(feature = "parallel"))]
    let rows = (1..=n).flat_map(per_a);
    let mut out: Vec<(u64, u64, u64)> = rows.collect();
    out.sort_unstable();
    out
}

fn is_square_u128(n: u128) -> bool {
    let r = n.isqrt();
    r * r == n
}

/// One row of the regression table: a family, its parameters, and the printed triad.
#[derive(Debug, Clone, Copy)]
pub struct Table1Row {
    pub family: &'static str,
    pub params: &'static [i64],
    pub printed: [u64; 3],
}

const fn row(family: &'static str, params: &'static [i64], printed: [u64; 3]) -> Table1Row {
    Table1Row { family, params, printed }
}

pub const TABLE1: [Table1Row; 21] = [
    row("parmsol1", &[1, 2], [180, 45, 64]),
    row("parmsol1", &[1, 3], [1440, 160, 81]),
    row("parmsol1", &[1, 4], [61200, 3825, 1024]),
    row("parmsol1", &[2, 3], [2925, 1300, 5184]),
    row("parmsol1", &[1, 5], [93600, 3744, 625]),
    row("parmsol1", &[2, 5], [319725, 51156, 40000]),
    row("parmsol1", &[3, 5], [54400, 19584, 50625]),
    row("parmsol1", &[4, 5], [83025, 53136, 640000]),
    row("parmsol2", &[1, 2], [80, 320, 225]),
    row("parmsol2", &[1, 3], [90, 810, 1600]),
    row("parmsol2", &[1, 4], [1088, 17408, 65025]),
    row("parmsol2", &[2, 3], [7488, 16848, 4225]),
    row("parmsol2", &[1, 5], [650, 16250, 97344]),
    row("parmsol2", &[2, 5], [46400, 290000, 370881]),
    row("parmsol2", &[1, 7], [98, 4802, 57600]),
    row("parmsol2", &[3, 5], [68850, 191250, 73984]),
    row("parmsol3", &[1, 2], [28880, 81225, 537920]),
    row("parmsol4", &[1, 2], [302580, 107584, 16245]),
    row("allsq1", &[1, 2], [11025, 19600, 82944]),
    row("allsq2", &[1, 2], [9216, 5184, 1225]),
    row("gensol1", &[1, 1], [136, 72, 153]),
];

impl Table1Row {
    pub fn expected(&self) -> Triad {
        let [a, b, c] = self.printed;
        Triad::from_u64(a, b, c).expect("printed rows are positive").sorted()
    }

    pub fn params_int(&self) -> Vec<Integer> {
        self.params.iter().map(|p| Integer::from(*p)).collect()
    }

    pub fn describe(&self) -> String {
        match find_family(self.family) {
            Ok(f) => f.provenance(&self.params_int()),
            Err(_) => self.family.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowOutcome {
    pub row: String,
    pub expected: Triad,
    pub got: Option<Triad>,
    pub error: Option<String>,
    pub matched: bool,
}

/// Evaluates every regression row from its family and compares with the
/// printed triad as a sorted multiset.
pub fn reproduce_table1() -> Vec<RowOutcome> {
    TABLE1
        .iter()
        .map(|r| {
            let expected = r.expected();
            let res = find_family(r.family).and_then(|f| evaluate_family(f, &r.params_int()));
            match res {
                Ok((got, _)) => RowOutcome {
                    row: r.describe(),
                    matched: got == expected,
                    expected,
                    got: Some(got),
                    error: None,
                },
                Err(e) => RowOutcome {
                    row: r.describe(),
                    expected,
                    got: None,
                    error: Some(e.to_string()),
                    matched: false,
                },
            }
        })
        .collect()
}

/// Historical triads checked by `verify_corpus`, besides the regression table.
pub const HISTORICAL: [(&str, [&str; 3]); 3] = [
    ("euler-1760", ["1633780814400", "252782198228", "3474741058973"]),
    ("euler-1779", ["81", "784", "186624"]),
    ("fauquembergue", ["320", "80", "225"]),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusOutcome {
    pub name: String,
    pub triad: Triad,
    pub certificate: Option<SquareCertificate>,
    /// Symmetric function that failed, when no certificate exists.
    pub failure: Option<&'static str>,
}

pub fn verify_corpus() -> Vec<CorpusOutcome> {
    let mut items: Vec<(String, Triad)> = HISTORICAL
        .iter()
        .map(|(name, ms)| {
            let p = |s: &str| s.parse::<Integer>().expect("corpus literal");
            (name.to_string(), Triad::new(p(ms[0]), p(ms[1]), p(ms[2])).expect("positive"))
        })
        .collect();
    for r in &TABLE1 {
        let [a, b, c] = r.printed;
        items.push((r.describe(), Triad::from_u64(a, b, c).expect("positive")));
    }
    items
        .into_iter()
        .map(|(name, triad)| {
            let res = check_triad(&triad);
            CorpusOutcome {
                name,
                certificate: res.as_ref().ok().cloned(),
                failure: res.err().map(|f| f.label()),
                triad,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains(found: &[(Triad, SquareCertificate)], t: [u64; 3]) -> bool {
        let t = Triad::from_u64(t[0], t[1], t[2]).unwrap();
        found.iter().any(|(x, _)| *x == t)
    }

    #[test]
    fn kernels() {
        let k = kernel_table(100);
        assert_eq!((k[1], k[12], k[72], k[97], k[100]), (1, 3, 2, 97, 1));
    }

    #[test]
    fn bound_200() {
        let found = search_triads(&SearchConfig::new(200)).unwrap();
        assert!(contains(&found, [45, 64, 180]));
        assert!(contains(&found, [72, 136, 153]));
        assert!(found.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn bound_64_has_no_table_rows() {
        let found = search_triads(&SearchConfig::new(64)).unwrap();
        for r in &TABLE1 {
            assert!(!found.iter().any(|(t, _)| *t == r.expected()));
        }
        for (t, c) in &found {
            assert!(c.certifies(t));
        }
        assert!(search_triads(&SearchConfig::new(0)).is_err());
    }

    #[test]
    fn workers_do_not_change_results() {
        let cfg = SearchConfig::new(400);
        let one = search_triads(&cfg.with_workers(1)).unwrap();
        let many = search_triads(&cfg.with_workers(4)).unwrap();
        assert_eq!(one, many);
    }

    #[test]
    fn table1_rows_match() {
        let out = reproduce_table1();
        assert_eq!(out.len(), 21);
        for r in &out {
            assert!(r.matched, "{r:?}");
        }
        assert_eq!(out[2].got.as_ref().unwrap(), &Triad::from_u64(1024, 3825, 61200).unwrap());
        assert_eq!(out[2].row, "Solution (16) with (s, t) = (1, 4)");
    }

    #[test]
    fn corpus_verifies() {
        let out = verify_corpus();
        assert_eq!(out.len(), 24);
        assert!(out.iter().all(|o| o.certificate.is_some()), "{out:?}");
    }
}
