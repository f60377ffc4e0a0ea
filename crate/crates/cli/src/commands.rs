use std::fs;
use std::path::Path;

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use liemap_core::chevalley::AlgElement;
use liemap_core::encoding::{bundled_fixture_text, element_to_json, matrix_to_json, parse_fixture, scalars_to_json, BUNDLED_FIXTURES};
use liemap_core::freelie::{named_polynomial, NAMED_POLYNOMIALS};
use liemap_core::maps::*;
use liemap_core::matrixrep::{InvariantPair, MatrixElement};
use liemap_core::rootsystem::parse_label;
use liemap_core::scalar::{format_rational, parse_rational};
use liemap_core::*;

use crate::args::*;

const DEFAULT_BUDGET: u64 = 1 << 24;
const DEFAULT_SEARCH_BUDGET: u64 = 1000;
const DEFAULT_SAMPLES: u64 = 100_000;

#[derive(Debug)]
pub enum CliError {
    /// bad flags, unreadable input, malformed text
    Usage(String),
    /// the computation itself refused or gave up
    Failure(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BadFieldSpec(_)
            | Error::NotPrime(_)
            | Error::BadScalar(_)
            | Error::NonInvertibleDenominator { .. }
            | Error::UnsupportedType(_)
            | Error::ExcludedInChar2(_)
            | Error::NotARoot(_)
            | Error::DimensionMismatch { .. }
            | Error::Syntax { .. }
            | Error::BadEngel(_)
            | Error::ArityMismatch { .. }
            | Error::UnsupportedRealization(_)
            | Error::NotInRealization { .. }
            | Error::Invalid(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn doc(schema: &str, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), Value::String(format!("liemap/{schema}/v1")));
    if let Value::Object(b) = body {
        m.extend(b);
    }
    Value::Object(m)
}

pub fn budget(flag: Option<u64>, default: u64) -> CliResult<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("LIEMAP_BUDGET") {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Usage(format!("LIEMAP_BUDGET=`{s}` is not a nonnegative integer"))),
        Err(_) => Ok(default),
    }
}

pub fn load_poly(arg: &PolyArg) -> CliResult<LiePoly> {
    let text = match arg.poly.strip_prefix('@') {
        None => arg.poly.clone(),
        Some(path) => match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                let name = Path::new(path).file_stem().and_then(|s| s.to_str()).unwrap_or(path);
                match named_polynomial(name) {
                    Some(t) if !Path::new(path).exists() => t.to_string(),
                    _ => return Err(CliError::Usage(format!("cannot read `{path}`: {e} (bundled: {})", NAMED_POLYNOMIALS.join(", ")))),
                }
            }
        },
    };
    Ok(parse(text.trim())?)
}

fn root_system_of(a: &AlgebraArgs) -> CliResult<(RootType, usize)> {
    match (&a.algebra, &a.kind, a.rank) {
        (Some(label), _, _) => Ok(parse_label(label)?),
        (None, Some(k), Some(r)) => Ok((k.parse()?, r)),
        _ => Err(CliError::Usage("give --algebra LABEL or --type T --rank N".into())),
    }
}

fn chevalley<F: Field>(a: &AlgebraArgs, field: &F) -> CliResult<ChevalleyAlgebra<F>> {
    let (kind, rank) = root_system_of(a)?;
    Ok(build_chevalley(build_root_system(kind, rank, &field.descriptor())?, field.clone())?)
}

fn field_of(spec: &str) -> CliResult<FieldDescriptor> {
    Ok(make_field(spec)?)
}

/// Runs `$body` with `$f` bound to the concrete field named by `$desc`.
macro_rules! with_field {
    ($desc:expr, |$f:ident| $body:expr) => {
        match $desc {
            FieldDescriptor::Rationals => {
                let $f = Rationals;
                $body
            }
            FieldDescriptor::PrimeField { modulus } => {
                let $f = PrimeField::new(modulus)?;
                $body
            }
        }
    };
}

pub fn run(cmd: &Command) -> CliResult<Value> {
    match cmd {
        Command::Roots(a) => roots(a),
        Command::Algebra(c) => with_field!(field_of(&c.algebra.field)?, |f| algebra(c, &f)),
        Command::Parse(c) => parse_cmd(c),
        Command::Identity(c) => with_field!(field_of(&c.field)?, |f| identity(c, &f)),
        Command::Witness(c) => with_field!(field_of(&c.field)?, |f| witness(c, &f)),
        Command::WitnessSearch(c) => with_field!(field_of(&c.field)?, |f| witness_search(c, &f)),
        Command::EngelSolve(c) => with_field!(field_of(&c.algebra.field)?, |f| engel_solve_cmd(c, &f)),
        Command::Scan(c) => with_field!(field_of(&c.algebra.field)?, |f| scan(c, &f)),
        Command::CentralProbe(c) => with_field!(field_of(&c.algebra.field)?, |f| probe(c, &f)),
        Command::Example48(c) => with_field!(field_of(&c.field)?, |f| example48(c, &f)),
    }
}

fn roots(a: &AlgebraArgs) -> CliResult<Value> {
    let (kind, rank) = root_system_of(a)?;
    let rs = build_root_system(kind, rank, &field_of(&a.field)?)?;
    let roots: Vec<Value> = rs
        .roots()
        .iter()
        .enumerate()
        .map(|(i, b)| json!({ "index": i, "coords": b.coords, "height": b.height() }))
        .collect();
    Ok(doc(
        "roots",
        json!({
            "type": kind.to_string(),
            "rank": rank,
            "label": rs.label(),
            "cartan_matrix": rs.cartan_matrix(),
            "num_positive": rs.num_positive(),
            "roots": roots,
            "weyl_order": rs.weyl_order(),
            "nilpotency_index": rs.nilpotency_index(),
        }),
    ))
}

fn algebra<F: Field>(c: &AlgebraCmd, f: &F) -> CliResult<Value> {
    let alg = chevalley(&c.algebra, f)?;
    let dim = alg.dim();
    let mut body = json!({
        "algebra": alg.label(),
        "field": f.descriptor().to_string(),
        "dim": dim,
        "rank": alg.rank(),
        "basis": (0..dim).map(|i| alg.basis_label(i)).collect::<Vec<_>>(),
        "center_dim": alg.center().len(),
    });
    if c.print_structure {
        let mut table = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let terms = alg.bracket_basis(i, j);
                if !terms.is_empty() {
                    let terms: Vec<Value> = terms.iter().map(|(k, v)| json!([k, f.format(v)])).collect();
                    table.push(json!({ "i": i, "j": j, "terms": terms }));
                }
            }
        }
        body["structure"] = Value::Array(table);
    }
    Ok(doc("algebra", body))
}

fn parse_cmd(c: &ParseCmd) -> CliResult<Value> {
    let p = load_poly(&c.poly)?;
    let nf = p.normal_form();
    let terms: Vec<Value> = nf.terms().iter().map(|(w, q)| json!({ "word": w, "coeff": format_rational(q) })).collect();
    Ok(doc(
        "parse",
        json!({
            "polynomial": p.print(),
            "arity": p.arity,
            "is_zero": nf.is_zero(),
            "normal_form": terms,
            "normal_form_printed": if nf.is_zero() { "0".to_string() } else { nf.to_string() },
            "min_degree": nf.min_degree(),
            "max_degree": nf.max_degree(),
            "linear_part": p.linear_part().iter().map(format_rational).collect::<Vec<_>>(),
        }),
    ))
}

fn elems<F: Field>(f: &F, xs: &[AlgElement<F::Elem>]) -> Vec<Value> {
    xs.iter().map(|x| element_to_json(f, x)).collect()
}

fn identity<F: Field>(c: &IdentityCmd, f: &F) -> CliResult<Value> {
    let p = load_poly(&c.poly)?;
    let mode = match c.mode {
        IdentityModeArg::Exact => IdentityMode::ExactSymbolic,
        IdentityModeArg::Randomized => IdentityMode::Randomized { trials: c.trials, grid: c.grid },
    };
    let v = is_identity_sl2(&p, f, mode, c.seed)?;
    let mut body = json!({
        "result": v.result,
        "mode": mode.name(),
        "reason": v.reason,
        "field": f.descriptor().to_string(),
        "polynomial": p.print(),
        "degree": v.degree,
        "seed": c.seed,
    });
    if let IdentityMode::Randomized { trials, grid } = mode {
        body["trials"] = json!(trials);
        body["grid"] = json!(grid);
    }
    if let Some(b) = &v.failure_bound {
        body["failure_bound"] = json!(format_rational(b));
    }
    if let (Some(w), Some(val)) = (&v.witness, &v.value) {
        body["witness"] = Value::Array(elems(f, w));
        body["value"] = element_to_json(f, val);
    }
    Ok(doc("identity", body))
}

fn invariants_json<F: Field>(f: &F, inv: &InvariantPair<F::Elem>) -> Value {
    json!({ "f1": f.format(&inv.f1), "f2": f.format(&inv.f2), "deg_f1": inv.deg_f1, "deg_f2": inv.deg_f2 })
}

fn check_json<F: Field>(f: &F, c: &WitnessCheck<F::Elem>) -> Value {
    json!({
        "result": c.result,
        "values": c.values.iter().map(|m| matrix_to_json(f, m)).collect::<Vec<_>>(),
        "invariants": c.invariants.iter().map(|i| invariants_json(f, i)).collect::<Vec<_>>(),
        "theta": c.theta.iter().map(|(a, b)| json!([f.format(a), f.format(b)])).collect::<Vec<_>>(),
        "zero_value": c.zero_value,
    })
}

fn triple_json<F: Field>(f: &F, t: &[MatrixElement<F::Elem>]) -> Value {
    Value::Array(t.iter().map(|m| matrix_to_json(f, m)).collect())
}

fn witness<F: Field>(c: &WitnessCmd, f: &F) -> CliResult<Value> {
    let (source, text) = match (&c.fixtures, &c.file) {
        (Some(name), _) => {
            let t = bundled_fixture_text(name)
                .ok_or_else(|| CliError::Usage(format!("unknown fixture `{name}` (bundled: {})", BUNDLED_FIXTURES.join(", "))))?;
            (name.clone(), t.to_string())
        }
        (None, Some(path)) => {
            let t = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read `{}`: {e}", path.display())))?;
            (path.display().to_string(), t)
        }
        (None, None) => return Err(CliError::Usage("give --fixtures NAME or --file PATH".into())),
    };
    let fx = parse_fixture(f, &text)?;
    if let Some(r) = &c.realization {
        let want: RealizationKind = r.parse()?;
        if want != fx.realization {
            return Err(CliError::Usage(format!("fixture `{source}` is {}, not {want}", fx.realization)));
        }
    }
    let check = dominance_witness_check(f, &fx.polynomial, &fx.triple1, &fx.triple2)?;
    let mut body = check_json(f, &check);
    body["fixture"] = json!(fx.name);
    body["realization"] = json!(fx.realization.to_string());
    body["polynomial"] = json!(fx.polynomial.print());
    body["field"] = json!(f.descriptor().to_string());
    Ok(doc("witness", body))
}

fn witness_search<F: Field>(c: &WitnessSearchCmd, f: &F) -> CliResult<Value> {
    let p = load_poly(&c.poly)?;
    let kind: RealizationKind = c.realization.parse()?;
    let budget = budget(c.budget, DEFAULT_SEARCH_BUDGET)?;
    let s = dominance_witness_search(f, &p, kind, budget, c.seed)?;
    let mut body = json!({
        "result": s.result,
        "attempts": s.attempts,
        "budget": budget,
        "seed": c.seed,
        "realization": kind.to_string(),
        "polynomial": p.print(),
        "field": f.descriptor().to_string(),
    });
    if let Some([t1, t2]) = &s.triples {
        body["triples"] = json!([triple_json(f, t1), triple_json(f, t2)]);
    }
    if let Some(check) = &s.check {
        body["check"] = check_json(f, check);
    }
    Ok(doc("witness-search", body))
}

fn engel_solve_cmd<F: Field>(c: &EngelSolveCmd, f: &F) -> CliResult<Value> {
    let alg = chevalley(&c.algebra, f)?;
    let coeffs: Vec<BigRational> = match (&c.coeffs, c.m) {
        (Some(cs), _) => cs.iter().map(|s| parse_rational(s.trim())).collect::<Result<_>>()?,
        (None, Some(0)) => return Err(CliError::Usage("--m must be at least 1".into())),
        (None, Some(m)) => {
            let mut v = vec![BigRational::default(); m];
            v[m - 1] = BigRational::from_integer(1.into());
            v
        }
        (None, None) => return Err(CliError::Usage("give --m or --coeffs".into())),
    };
    let (p, spec) = make_engel(&coeffs)?;
    let target = c.target.iter().map(|s| f.parse(s.trim())).collect::<Result<Vec<_>>>()?;
    alg.check_shape(&target)?;
    let sol = engel_solve(&alg, &spec, &target)?;
    let value = p.evaluate(&alg, &[sol.x.clone(), sol.y.clone()])?;
    let verified = value == target && sol.certificate == certificate_hash(&alg, &p, &sol.x, &sol.y, &value);
    let conjugator: Vec<Value> = sol.conjugator.iter().map(|(b, t)| json!({ "root": b, "t": f.format(t) })).collect();
    Ok(doc(
        "engel-solve",
        json!({
            "result": if verified { "solved" } else { "unverified" },
            "algebra": alg.label(),
            "polynomial": p.print(),
            "coeffs": spec.coeffs.iter().map(format_rational).collect::<Vec<_>>(),
            "target": element_to_json(f, &sol.target),
            "x": element_to_json(f, &sol.x),
            "y": element_to_json(f, &sol.y),
            "value": element_to_json(f, &value),
            "avoid": scalars_to_json(f, &sol.avoid),
            "h": element_to_json(f, &sol.h),
            "conjugator": conjugator,
            "u": element_to_json(f, &sol.u),
            "certificate": sol.certificate,
        }),
    ))
}

fn hit_json<F: Field>(f: &F, h: &Hit<F::Elem>) -> Value {
    json!({ "element": element_to_json(f, &h.element), "count": h.count, "preimage": elems(f, &h.preimage) })
}

fn counts_json(c: &ClassCounts) -> Value {
    json!({ "zero": c.zero, "central_nonzero": c.central_nonzero, "noncentral": c.noncentral })
}

fn report_json<F: Field>(f: &F, r: &ImageReport<F::Elem>) -> Value {
    let mode = match r.mode {
        ScanMode::Exhaustive => json!({ "kind": "exhaustive" }),
        ScanMode::Sampled { count, seed } => json!({ "kind": "sampled", "count": count, "seed": seed }),
    };
    let attained_total = r.attained.zero + r.attained.central_nonzero + r.attained.noncentral;
    json!({
        "result": if r.contains_all_noncentral { "contains_all_noncentral" } else { "misses_noncentral" },
        "algebra": r.algebra,
        "polynomial": r.polynomial,
        "mode": mode,
        "domain_size": r.domain_size.to_string(),
        "evaluated": r.evaluated,
        "elements_total": r.elements_total,
        "central_total": r.central_total,
        "attained_total": attained_total,
        "hit_counts": counts_json(&r.hit_counts),
        "attained": counts_json(&r.attained),
        "contains_all_noncentral": r.contains_all_noncentral,
        "hits": r.hits.iter().map(|h| hit_json(f, h)).collect::<Vec<_>>(),
        "central_hits": r.central_hits.iter().map(|h| hit_json(f, h)).collect::<Vec<_>>(),
        "missed": elems(f, &r.missed),
    })
}

fn scan<F: Field>(c: &ScanCmd, f: &F) -> CliResult<Value> {
    let alg = chevalley(&c.algebra, f)?;
    let p = load_poly(&c.poly)?;
    let budget = budget(c.run.budget, DEFAULT_BUDGET)?;
    let mode = match c.mode {
        ScanModeArg::Exhaustive => ScanMode::Exhaustive,
        ScanModeArg::Sampled => {
            let count = c.count.unwrap_or(DEFAULT_SAMPLES.min(budget));
            if count > budget {
                return Err(CliError::Failure(format!("{count} samples exceed budget {budget}")));
            }
            ScanMode::Sampled { count, seed: c.seed }
        }
    };
    let r = image_scan(&alg, &p, mode, budget, c.run.workers)?;
    Ok(doc("scan", report_json(f, &r)))
}

fn probe<F: Field>(c: &ProbeCmd, f: &F) -> CliResult<Value> {
    let alg = chevalley(&c.algebra, f)?;
    let budget = budget(c.run.budget, DEFAULT_BUDGET)?;
    let r = central_image_probe(&alg, c.m_from, c.m_to, budget, c.run.workers)?;
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            let hits: Vec<Value> = row
                .central_hits
                .iter()
                .map(|h| json!({ "value": element_to_json(f, &h.value), "x": element_to_json(f, &h.x), "y": element_to_json(f, &h.y) }))
                .collect();
            json!({ "m": row.m, "central_hits": hits })
        })
        .collect();
    Ok(doc(
        "central-probe",
        json!({
            "result": if r.m0.is_some() { "stabilized" } else { "not_stabilized" },
            "algebra": r.algebra,
            "center_dim": r.center_dim,
            "m_from": r.m_from,
            "m_to": r.m_to,
            "y_count": r.y_count,
            "m0": r.m0,
            "rows": rows,
        }),
    ))
}

fn example48<F: Field>(c: &Example48Cmd, f: &F) -> CliResult<Value> {
    let check = example48_check(f)?;
    let mut body = json!({
        "result": if check.printed_mismatches == 0 { "consistent" } else { "inconsistent" },
        "field": f.descriptor().to_string(),
        "polynomial": example48_polynomial().print(),
        "tuples": check.tuples,
        "printed_mismatches": check.printed_mismatches,
        "corrected_mismatches": check.corrected_mismatches,
    });
    if let Some((abcd, printed, direct)) = &check.first_mismatch {
        body["first_mismatch"] = json!({
            "abcd": scalars_to_json(f, abcd),
            "printed": scalars_to_json(f, printed),
            "direct": scalars_to_json(f, direct),
        });
    }
    if !c.no_scan {
        let alg = build_chevalley(build_root_system(RootType::A, 1, &f.descriptor())?, f.clone())?;
        let budget = budget(c.run.budget, DEFAULT_BUDGET)?;
        let r = image_scan(&alg, &example48_polynomial(), ScanMode::Exhaustive, budget, c.run.workers)?;
        let root_line = |x: &[F::Elem]| f.is_zero(&x[0]) && (f.is_zero(&x[1]) != f.is_zero(&x[2]));
        let root_line_hits = r.hits.iter().filter(|h| root_line(&h.element)).count();
        body["scan"] = json!({
            "attained_total": r.hits.len(),
            "elements_total": r.elements_total,
            "root_line_hits": root_line_hits,
            "missed": elems(f, &r.missed),
        });
    }
    Ok(doc("example48", body))
}
