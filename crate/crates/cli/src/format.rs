//! JSON forms of polynomials, matrices, words, trajectories and reports.

use braidrep_core::geom::{Breakpoint, Event, EventClass, GeomBraid};
use braidrep_core::relcheck::Report;
use braidrep_core::{Family, GroupId, LaurentPoly, Letter, LetterKind, Matrix, Monomial, RationalMatrix, Word};
use num_bigint::BigInt;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Serialize, Deserialize)]
struct Term {
    e: [i32; 3],
    c: String,
}

pub fn poly_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Term> = p
        .terms()
        .map(|(m, c)| Term {
            e: m.0,
            c: c.to_string(),
        })
        .collect();
    serde_json::to_value(terms).expect("terms serialize")
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly, CliError> {
    let terms: Vec<Term> = serde_json::from_value(v.clone())?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let c: BigInt =
            t.c.parse()
                .map_err(|_| CliError::Format(format!("coefficient `{}` is not an integer", t.c)))?;
        out.push((Monomial(t.e), c));
    }
    Ok(LaurentPoly::from_terms(out))
}

pub fn matrix_json(m: &Matrix) -> Value {
    let rows: Vec<Vec<Value>> = m.rows().map(|r| r.iter().map(poly_json).collect()).collect();
    json!({ "dim": m.dim(), "rows": rows })
}

pub fn rational_matrix_json(m: &RationalMatrix) -> Value {
    let rows: Vec<Vec<String>> = m.rows().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    json!({ "dim": m.dim(), "rows": rows })
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct GroupJson {
    family: String,
    strands: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    flat_braid_relation: bool,
}

#[derive(Serialize, Deserialize)]
struct LetterJson {
    k: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
    p: i64,
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    group: GroupJson,
    letters: Vec<LetterJson>,
}

pub fn word_json(w: &Word) -> Value {
    let g = w.group();
    let word = WordJson {
        group: GroupJson {
            family: g.family().name().to_string(),
            strands: g.strands(),
            flat_braid_relation: g.flat_braid_relation(),
        },
        letters: w
            .letters()
            .iter()
            .map(|l| LetterJson {
                k: l.kind.symbol().to_string(),
                i: (l.kind != LetterKind::Zeta).then_some(l.index),
                p: l.power,
            })
            .collect(),
    };
    serde_json::to_value(word).expect("words serialize")
}

pub fn word_from_json(text: &str) -> Result<Word, CliError> {
    let w: WordJson = serde_json::from_str(text)?;
    let family = match w.group.family.as_str() {
        "B" => Family::B,
        "CPB" => Family::CPB,
        "VCB" => Family::VCB,
        "FVB" => Family::FVB,
        other => return Err(CliError::Format(format!("unknown family `{other}`"))),
    };
    let group = GroupId::new(family, w.group.strands)?.with_flat_braid_relation(w.group.flat_braid_relation)?;
    let mut letters = Vec::with_capacity(w.letters.len());
    for l in w.letters {
        let kind = match l.k.as_str() {
            "s" => LetterKind::Sigma,
            "t" => LetterKind::Tau,
            "p" => LetterKind::Pi,
            "z" => LetterKind::Zeta,
            other => return Err(CliError::Format(format!("unknown generator `{other}`"))),
        };
        let index = match (kind, l.i) {
            (LetterKind::Zeta, _) => 0,
            (_, Some(i)) => i,
            (_, None) => return Err(CliError::Format(format!("generator `{}` needs an index", l.k))),
        };
        letters.push(Letter {
            kind,
            index,
            power: l.p,
        });
    }
    Ok(Word::new(group, letters)?)
}

#[derive(Serialize, Deserialize)]
struct GeomJson {
    n: usize,
    pure: bool,
    strands: Vec<Vec<[f64; 3]>>,
}

pub fn geom_json(g: &GeomBraid) -> Value {
    let strands = g
        .strands()
        .iter()
        .map(|s| s.iter().map(|b| [b.t, b.z.re, b.z.im]).collect())
        .collect();
    serde_json::to_value(GeomJson {
        n: g.n(),
        pure: g.is_pure(),
        strands,
    })
    .expect("trajectories serialize")
}

pub fn geom_from_json(text: &str) -> Result<GeomBraid, CliError> {
    let g: GeomJson = serde_json::from_str(text)?;
    if g.n != g.strands.len() {
        return Err(CliError::Format(format!(
            "n = {} but {} strands given",
            g.n,
            g.strands.len()
        )));
    }
    let strands = g
        .strands
        .into_iter()
        .map(|s| {
            s.into_iter()
                .map(|[t, re, im]| Breakpoint::new(t, Complex64::new(re, im)))
                .collect()
        })
        .collect();
    Ok(GeomBraid::new(strands, g.pure)?)
}

pub fn event_class_name(c: EventClass) -> &'static str {
    match c {
        EventClass::ClassicalOver => "classicalOver",
        EventClass::ClassicalUnder => "classicalUnder",
        EventClass::Flat => "flat",
        EventClass::Virtual => "virtual",
    }
}

/// Strand numbers are 1-based, as on the command line.
pub fn event_json(e: &Event) -> Value {
    json!({
        "time": e.time,
        "pair": [e.pair.0 + 1, e.pair.1 + 1],
        "class": event_class_name(e.class),
        "neStrand": e.ne_strand + 1,
        "slotIndex": e.slot_index,
    })
}

pub fn report_json(r: &Report) -> Value {
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|f| {
            json!({
                "label": f.label,
                "left": f.left.to_string(),
                "right": f.right.to_string(),
                "leftMatrix": matrix_json(&f.left_matrix),
                "rightMatrix": matrix_json(&f.right_matrix),
            })
        })
        .collect();
    json!({ "checked": r.checked, "passed": r.passed(), "failures": failures })
}

pub fn report_text(r: &Report) -> String {
    let mut out = String::new();
    for f in &r.failures {
        out.push_str(&format!(
            "FAIL {}: {} = {}\n  left:\n{}\n  right:\n{}\n",
            f.label,
            f.left,
            f.right,
            indent(&f.left_matrix.to_string()),
            indent(&f.right_matrix.to_string())
        ));
    }
    let verdict = if r.passed() { "passed" } else { "FAILED" };
    out.push_str(&format!(
        "{} checks, {} failures: {verdict}",
        r.checked,
        r.failures.len()
    ));
    out
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}")).collect::<Vec<_>>().join("\n")
}
