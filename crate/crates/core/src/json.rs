//! Wire records. Every integer travels as a decimal string so consumers never
//! lose precision.

use serde::Serialize;

use crate::exactnum::Integer;
use crate::families::{Classification, ParametricFamily};
use crate::triads::{SquareCertificate, Triad};

/// `{"a":…, "b":…, "c":…, "f":…, "g":…, "h":…}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriadRecord {
    pub a: String,
    pub b: String,
    pub c: String,
    pub f: String,
    pub g: String,
    pub h: String,
}

impl TriadRecord {
    pub fn new(t: &Triad, cert: &SquareCertificate) -> Self {
        let s = |v: &Integer| v.to_string();
        TriadRecord {
            a: s(&t.a),
            b: s(&t.b),
            c: s(&t.c),
            f: s(&cert.f),
            g: s(&cert.g),
            h: s(&cert.h),
        }
    }

    pub fn csv_header() -> &'static str {
        "a,b,c,f,g,h"
    }

    pub fn to_csv(&self) -> String {
        format!("{},{},{},{},{},{}", self.a, self.b, self.c, self.f, self.g, self.h)
    }
}

/// `{name, params, a, b, c, f, g, h, classification, paper_eq}` with
/// polynomials in canonical text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyRecord {
    pub name: String,
    pub params: Vec<String>,
    pub a: String,
    pub b: String,
    pub c: String,
    pub f: Option<String>,
    pub g: Option<String>,
    pub h: Option<String>,
    pub classification: Classification,
    pub paper_eq: String,
}

impl FamilyRecord {
    pub fn new(fam: &ParametricFamily) -> Self {
        let w = |i: usize| fam.witnesses.as_ref().map(|w| w[i].to_string());
        FamilyRecord {
            name: fam.name.clone(),
            params: fam.params.iter().map(|v| v.name().to_string()).collect(),
            a: fam.polys[0].to_string(),
            b: fam.polys[1].to_string(),
            c: fam.polys[2].to_string(),
            f: w(0),
            g: w(1),
            h: w(2),
            classification: fam.classification,
            paper_eq: fam.label.clone(),
        }
    }
}
