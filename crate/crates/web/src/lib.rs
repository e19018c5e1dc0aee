//! Browser bindings. Each export takes plain strings or numbers and returns a
//! JSON string; failures come back as `{"error": "..."}`.

use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

use squaretriads::families::{evaluate_family, find_family, registry};
use squaretriads::json::TriadRecord;
use squaretriads::search::{search_triads, SearchConfig};
use squaretriads::triads::{check_triad, elementary_symmetric, Triad};
use squaretriads::Integer;

/// Largest bound accepted by [`search`]; the page runs on the main thread.
pub const MAX_SEARCH_BOUND: u32 = 3000;

fn error(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).unwrap_or_else(error)
}

fn parse_int(s: &str) -> Result<Integer, String> {
    s.trim()
        .parse::<Integer>()
        .map_err(|_| format!("not an integer: {:?}", s.trim()))
}

/// Checks a triad. On success returns the certificate, otherwise the failing
/// symmetric function and its value.
#[wasm_bindgen]
pub fn verify(a: &str, b: &str, c: &str) -> String {
    let t = match (parse_int(a), parse_int(b), parse_int(c)) {
        (Ok(a), Ok(b), Ok(c)) => match Triad::new(a, b, c) {
            Ok(t) => t,
            Err(e) => return error(e),
        },
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return error(e),
    };
    match check_triad(&t) {
        Ok(cert) => to_json(&json!({ "verified": true, "triad": TriadRecord::new(&t, &cert) })),
        Err(f) => {
            let (e1, e2, e3) = elementary_symmetric(&t);
            let value = match f.label() {
                "e1" => e1,
                "e2" => e2,
                _ => e3,
            };
            to_json(&json!({
                "verified": false,
                "failed": f.label(),
                "expression": f.describe(),
                "value": value.to_string(),
            }))
        }
    }
}

/// Names, parameters and classifications of the built-in families.
#[wasm_bindgen]
pub fn families() -> String {
    let list: Vec<_> = registry()
        .iter()
        .map(|f| {
            json!({
                "name": f.name,
                "params": f.params.iter().map(|v| v.name()).collect::<Vec<_>>(),
                "classification": f.classification.as_str(),
                "degree": f.degree(),
            })
        })
        .collect();
    to_json(&list)
}

/// Evaluates a family; `params` is a comma- or space-separated integer list.
#[wasm_bindgen]
pub fn evaluate(name: &str, params: &str) -> String {
    let fam = match find_family(name.trim()) {
        Ok(f) => f,
        Err(e) => return error(e),
    };
    let vals: Result<Vec<Integer>, String> = params
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(parse_int)
        .collect();
    let vals = match vals {
        Ok(v) => v,
        Err(e) => return error(e),
    };
    match evaluate_family(fam, &vals) {
        Ok((t, cert)) => to_json(&json!({
            "provenance": fam.provenance(&vals),
            "triad": TriadRecord::new(&t, &cert),
        })),
        Err(e) => error(e),
    }
}

/// Exhaustive search up to `bound` (at most [`MAX_SEARCH_BOUND`]).
#[wasm_bindgen]
pub fn search(bound: u32, primitive: bool) -> String {
    if bound == 0 || bound > MAX_SEARCH_BOUND {
        return error(format!("bound must be between 1 and {MAX_SEARCH_BOUND}"));
    }
    let mut cfg = SearchConfig::new(bound.into());
    cfg.primitive_only = primitive;
    match search_triads(&cfg) {
        Ok(found) => {
            let recs: Vec<TriadRecord> = found.iter().map(|(t, c)| TriadRecord::new(t, c)).collect();
            to_json(&recs)
        }
        Err(e) => error(e),
    }
}
