mod output;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use squaretriads::ecurve::generate_family;
use squaretriads::error::Error;
use squaretriads::families::{
    evaluate_family, find_family, registry, second_u_family, verify_family_symbolic,
    ParametricFamily,
};
use squaretriads::json::{FamilyRecord, TriadRecord};
use squaretriads::multipoly::RatFunc;
use squaretriads::quartic::{choudhry_compose, euler_quartic, fermat_ascend, QuarticPoint, Side};
use squaretriads::search::{reproduce_table1, search_triads, verify_corpus, SearchConfig};
use squaretriads::triads::{check_triad, elementary_symmetric, is_sum_two_rational_squares, Triad};
use squaretriads::{Integer, Rational};

use output::{Format, Out};

#[derive(Parser)]
#[command(name = "triads", version, about = "Triads of integers whose sum, pairwise-product sum and product are squares")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a triad and print its square certificate.
    #[command(allow_negative_numbers = true)]
    Verify { a: String, b: String, c: String },
    /// Evaluate a registered family at integer parameters.
    #[command(allow_negative_numbers = true)]
    Family { name: String, params: Vec<String> },
    /// List the registered families.
    FamilyList,
    /// Symbolically certify a family (registered names, or `gensol2`).
    FamilyCheck { name: String },
    /// Build the family coming from the k-th multiple of the curve point P.
    Generate {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
    /// Exhaustive search up to a bound, one result per line.
    Search {
        /// Bound (same as --bound).
        bound_pos: Option<u64>,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long)]
        primitive: bool,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Rebuild every row of the regression table from its family.
    Table1,
    /// Verify the historical triads and the regression table.
    Corpus,
    /// Write a positive rational as a sum of two rational squares.
    TwoSquares {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Ascend on the problem quartic at (s, t); both default to symbols.
    Fermat {
        #[arg(default_value = "s", allow_hyphen_values = true)]
        s: String,
        #[arg(default_value = "t", allow_hyphen_values = true)]
        t: String,
        #[arg(long, value_enum, default_value_t = SideArg::All)]
        side: SideArg,
    },
    /// Compose two points (u1, v1), (u2, v2) on the problem quartic at (s, t).
    Compose {
        #[arg(required = true, allow_hyphen_values = true, num_args = 6, value_names = ["S", "T", "U1", "V1", "U2", "V2"])]
        args: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Constant,
    Leading,
    All,
}

/// Exit status with a message for stderr.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }
    fn negative(msg: impl Into<String>) -> Self {
        Failure { code: 1, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnknownFamily(_) => Failure::usage(e.to_string()),
            Error::Internal(_) => Failure { code: 3, msg: e.to_string() },
            _ => Failure::negative(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 3, msg: e.to_string() }
    }
}

type Res = Result<(), Failure>;

fn parse_int(s: &str) -> Result<Integer, Failure> {
    s.parse::<Integer>()
        .map_err(|_| Failure::usage(format!("not an integer: {s:?}")))
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    s.parse::<Rational>()
        .map_err(|_| Failure::usage(format!("not a rational number: {s:?}")))
}

fn parse_expr(s: &str) -> Result<RatFunc, Failure> {
    RatFunc::parse(s).map_err(|e| Failure::usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = Out::new(stdout.lock(), cli.format);
    let res = run(cli.cmd, &mut out);
    let _ = out.flush();
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run<W: Write>(cmd: Cmd, out: &mut Out<W>) -> Res {
    match cmd {
        Cmd::Verify { a, b, c } => verify(out, &a, &b, &c),
        Cmd::Family { name, params } => family(out, &name, &params),
        Cmd::FamilyList => family_list(out),
        Cmd::FamilyCheck { name } => family_check(out, &name),
        Cmd::Generate { k } => generate(out, k),
        Cmd::Search { bound_pos, bound, primitive, workers } => {
            let bound = match (bound_pos, bound) {
                (Some(a), Some(b)) if a != b => {
                    return Err(Failure::usage("conflicting bounds"));
                }
                (a, b) => a.or(b).unwrap_or(10_000),
            };
            if bound == 0 {
                return Err(Failure::usage("bound must be at least 1"));
            }
            let cfg = SearchConfig { bound, primitive_only: primitive, workers };
            search(out, &cfg)
        }
        Cmd::Table1 => table1(out),
        Cmd::Corpus => corpus(out),
        Cmd::TwoSquares { x } => two_squares(out, &x),
        Cmd::Fermat { s, t, side } => fermat(out, &s, &t, side),
        Cmd::Compose { args } => compose(out, &args),
    }
}

#[derive(Serialize)]
struct VerifyFailure {
    a: String,
    b: String,
    c: String,
    verified: bool,
    failed: &'static str,
    expression: &'static str,
    value: String,
}

fn verify<W: Write>(out: &mut Out<W>, a: &str, b: &str, c: &str) -> Res {
    let t = Triad::new(parse_int(a)?, parse_int(b)?, parse_int(c)?)
        .map_err(|e| Failure::usage(e.to_string()))?;
    match check_triad(&t) {
        Ok(cert) => {
            out.triads(&[TriadRecord::new(&t, &cert)])?;
            Ok(())
        }
        Err(f) => {
            let (e1, e2, e3) = elementary_symmetric(&t);
            let value = match f.label() {
                "e1" => e1,
                "e2" => e2,
                _ => e3,
            };
            let rec = VerifyFailure {
                a: t.a.to_string(),
                b: t.b.to_string(),
                c: t.c.to_string(),
                verified: false,
                failed: f.label(),
                expression: f.describe(),
                value: value.to_string(),
            };
            out.record(&rec, &format!("{t}: {} = {value} is not a square", f.describe()))?;
            Err(Failure::negative(format!("{} ({}) is not a square", f.label(), f.describe())))
        }
    }
}

#[derive(Serialize)]
struct FamilyEval {
    family: String,
    provenance: String,
    params: Vec<(String, String)>,
    #[serde(flatten)]
    triad: TriadRecord,
}

fn family<W: Write>(out: &mut Out<W>, name: &str, params: &[String]) -> Res {
    let fam = find_family(name)?;
    let vals: Vec<Integer> = params.iter().map(|p| parse_int(p)).collect::<Result<_, _>>()?;
    if vals.len() != fam.params.len() {
        return Err(Failure::usage(format!(
            "{name} takes {} parameters ({}), got {}",
            fam.params.len(),
            fam.params.iter().map(|v| v.name()).collect::<Vec<_>>().join(", "),
            vals.len()
        )));
    }
    let (t, cert) = evaluate_family(fam, &vals)?;
    let rec = FamilyEval {
        family: fam.name.clone(),
        provenance: fam.provenance(&vals),
        params: fam
            .params
            .iter()
            .zip(&vals)
            .map(|(v, x)| (v.name().to_string(), x.to_string()))
            .collect(),
        triad: TriadRecord::new(&t, &cert),
    };
    let text = format!(
        "{}\n{} {}\nf = {}  g = {}  h = {}",
        rec.provenance, fam.name, t, rec.triad.f, rec.triad.g, rec.triad.h
    );
    out.record(&rec, &text)?;
    Ok(())
}

#[derive(Serialize)]
struct FamilySummary {
    name: String,
    params: Vec<String>,
    degree: u32,
    classification: String,
    paper_eq: String,
}

fn family_list<W: Write>(out: &mut Out<W>) -> Res {
    let rows: Vec<FamilySummary> = registry()
        .iter()
        .map(|f| FamilySummary {
            name: f.name.clone(),
            params: f.params.iter().map(|v| v.name().to_string()).collect(),
            degree: f.degree(),
            classification: f.classification.as_str().to_string(),
            paper_eq: f.label.clone(),
        })
        .collect();
    out.lines(
        &["name", "params", "degree", "classification", "paper_eq"],
        rows.iter()
            .map(|r| {
                vec![
                    r.name.clone(),
                    r.params.join(" "),
                    r.degree.to_string(),
                    r.classification.clone(),
                    r.paper_eq.clone(),
                ]
            })
            .collect(),
        &rows,
    )?;
    Ok(())
}

fn lookup_family(name: &str) -> Result<ParametricFamily, Failure> {
    if name == "gensol2" {
        return Ok(second_u_family()?);
    }
    Ok(find_family(name)?.clone())
}

#[derive(Serialize)]
struct CheckRecord {
    #[serde(flatten)]
    family: FamilyRecord,
    degree: u32,
    square_members: [bool; 3],
    numeric_points: Vec<Vec<String>>,
    verified: bool,
}

fn emit_checked<W: Write>(out: &mut Out<W>, fam: ParametricFamily) -> Res {
    let rep = verify_family_symbolic(&fam)?;
    let degree = fam.degree();
    let mut fam = fam;
    fam.witnesses = Some(rep.witnesses.clone());
    let rec = CheckRecord {
        family: FamilyRecord::new(&fam),
        degree,
        square_members: rep.square_members,
        numeric_points: rep
            .numeric_points
            .iter()
            .map(|p| p.iter().map(|x| x.to_string()).collect())
            .collect(),
        verified: true,
    };
    let f = &rec.family;
    let text = format!(
        "{} [{}] {} degree {}\na = {}\nb = {}\nc = {}\nf = {}\ng = {}\nh = {}\nverified",
        f.name,
        f.params.join(", "),
        fam.classification.as_str(),
        degree,
        f.a,
        f.b,
        f.c,
        f.f.as_deref().unwrap_or("-"),
        f.g.as_deref().unwrap_or("-"),
        f.h.as_deref().unwrap_or("-"),
    );
    out.record(&rec, &text)?;
    Ok(())
}

fn family_check<W: Write>(out: &mut Out<W>, name: &str) -> Res {
    emit_checked(out, lookup_family(name)?)
}

fn generate<W: Write>(out: &mut Out<W>, k: u32) -> Res {
    emit_checked(out, generate_family(k)?)
}

fn search<W: Write>(out: &mut Out<W>, cfg: &SearchConfig) -> Res {
    let start = Instant::now();
    let found = search_triads(cfg)?;
    let recs: Vec<TriadRecord> = found.iter().map(|(t, c)| TriadRecord::new(t, c)).collect();
    out.triads(&recs)?;
    eprintln!(
        "{} triads with members <= {}{} in {:.2?}",
        recs.len(),
        cfg.bound,
        if cfg.primitive_only { " (primitive)" } else { "" },
        start.elapsed()
    );
    Ok(())
}

#[derive(Serialize)]
struct Tally {
    matched: usize,
    total: usize,
}

fn table1<W: Write>(out: &mut Out<W>) -> Res {
    let rows = reproduce_table1();
    let matched = rows.iter().filter(|r| r.matched).count();
    let lines: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.row.clone(),
                r.expected.to_string(),
                r.got.as_ref().map(|t| t.to_string()).unwrap_or_default(),
                r.matched.to_string(),
            ]
        })
        .collect();
    out.lines(&["row", "expected", "got", "matched"], lines, &rows)?;
    out.summary(&Tally { matched, total: rows.len() }, &format!("{matched}/{} matched", rows.len()))?;
    if matched == rows.len() {
        Ok(())
    } else {
        Err(Failure::negative(format!("{} rows did not match", rows.len() - matched)))
    }
}

fn corpus<W: Write>(out: &mut Out<W>) -> Res {
    let items = verify_corpus();
    let ok = items.iter().filter(|o| o.certificate.is_some()).count();
    let lines: Vec<Vec<String>> = items
        .iter()
        .map(|o| {
            let cert = o.certificate.as_ref();
            let s = |f: fn(&squaretriads::SquareCertificate) -> &Integer| {
                cert.map(|c| f(c).to_string()).unwrap_or_default()
            };
            vec![
                o.name.clone(),
                o.triad.a.to_string(),
                o.triad.b.to_string(),
                o.triad.c.to_string(),
                s(|c| &c.f),
                s(|c| &c.g),
                s(|c| &c.h),
            ]
        })
        .collect();
    out.lines(&["name", "a", "b", "c", "f", "g", "h"], lines, &items)?;
    out.summary(&Tally { matched: ok, total: items.len() }, &format!("{ok}/{} verified", items.len()))?;
    if ok == items.len() {
        Ok(())
    } else {
        Err(Failure::negative("some corpus triads failed"))
    }
}

#[derive(Serialize)]
struct TwoSq {
    value: String,
    p: String,
    q: String,
}

fn two_squares<W: Write>(out: &mut Out<W>, x: &str) -> Res {
    let v = parse_rational(x)?;
    if v <= Rational::from_integer(0.into()) {
        return Err(Failure::usage("value must be positive"));
    }
    match is_sum_two_rational_squares(&v) {
        Some(w) => {
            let rec = TwoSq { value: w.value.to_string(), p: w.p.to_string(), q: w.q.to_string() };
            out.record(&rec, &format!("{} = ({})^2 + ({})^2", rec.value, rec.p, rec.q))?;
            Ok(())
        }
        None => Err(Failure::negative(format!("{v} is not a sum of two rational squares"))),
    }
}

#[derive(Serialize)]
struct PointRec {
    #[serde(skip_serializing_if = "Option::is_none")]
    side: Option<&'static str>,
    u: String,
    v: String,
}

fn point_rec(side: Option<&'static str>, p: &QuarticPoint<RatFunc>) -> PointRec {
    PointRec { side, u: p.u.to_string(), v: p.v.to_string() }
}

fn fermat<W: Write>(out: &mut Out<W>, s: &str, t: &str, side: SideArg) -> Res {
    let q = euler_quartic(&parse_expr(s)?, &parse_expr(t)?)?;
    let sides: &[(Side, &'static str)] = match side {
        SideArg::Constant => &[(Side::Constant, "constant")],
        SideArg::Leading => &[(Side::Leading, "leading")],
        SideArg::All => &[(Side::Constant, "constant"), (Side::Leading, "leading")],
    };
    let mut recs = Vec::new();
    let mut last_err = None;
    for (sd, name) in sides {
        match fermat_ascend(&q, *sd) {
            Ok(p) => recs.push(point_rec(Some(name), &p)),
            Err(e) => last_err = Some(e),
        }
    }
    if recs.is_empty() {
        return Err(last_err.expect("at least one side").into());
    }
    let lines = recs
        .iter()
        .map(|r| vec![r.side.unwrap_or_default().to_string(), r.u.clone(), r.v.clone()])
        .collect();
    out.lines(&["side", "u", "v"], lines, &recs)?;
    Ok(())
}

fn compose<W: Write>(out: &mut Out<W>, args: &[String]) -> Res {
    let e: Vec<RatFunc> = args.iter().map(|a| parse_expr(a)).collect::<Result<_, _>>()?;
    let q = euler_quartic(&e[0], &e[1])?;
    let p1 = QuarticPoint::new(e[2].clone(), e[3].clone());
    let p2 = QuarticPoint::new(e[4].clone(), e[5].clone());
    for (i, p) in [&p1, &p2].into_iter().enumerate() {
        if !q.contains(p) {
            return Err(Failure::negative(format!("point {} is not on the quartic", i + 1)));
        }
    }
    let r = choudhry_compose(&q, &p1, &p2)?;
    let rec = point_rec(None, &r);
    out.record(&rec, &format!("u = {}\nv = {}", rec.u, rec.v))?;
    Ok(())
}
