//! JSON and CSV rendering of generating-function terms.

use std::fmt::Write as _;

use dyckgen::genfun::Ceiling;
use dyckgen::{ConventionTag, HalfExp, Rat, RatSeries, RatTouchSeries};
use serde::{Deserialize, Serialize};

/// An exponent: an integer, or `{"twice": n}` for odd halves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExpValue {
    Int(i64),
    Half { twice: i64 },
}

impl From<HalfExp> for ExpValue {
    fn from(h: HalfExp) -> Self {
        match h.as_int() {
            Some(n) => ExpValue::Int(n),
            None => ExpValue::Half { twice: h.twice },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coeff {
    pub num: String,
    pub den: String,
}

impl From<&Rat> for Coeff {
    fn from(r: &Rat) -> Self {
        Coeff {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub l: ExpValue,
    #[serde(rename = "A")]
    pub area: ExpValue,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<u32>,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecEcho {
    pub k: serde_json::Value,
    pub m: usize,
    pub n: usize,
    pub max_len: usize,
    pub touchdown: bool,
}

impl SpecEcho {
    pub fn new(ceiling: Ceiling, m: usize, n: usize, max_len: usize, touchdown: bool) -> Self {
        let k = match ceiling {
            Ceiling::Finite(k) => serde_json::Value::from(k),
            Ceiling::Unbounded => serde_json::Value::from("inf"),
        };
        SpecEcho {
            k,
            m,
            n,
            max_len,
            touchdown,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub spec: SpecEcho,
    pub convention: String,
    pub terms: Vec<Term>,
    pub method: String,
    pub version: String,
}

fn exp(conv: ConventionTag, internal: i64) -> ExpValue {
    conv.exponent(internal).into()
}

pub fn series_terms(s: &RatSeries, conv: ConventionTag) -> Vec<Term> {
    let mut out = Vec::new();
    for (l, c) in s.coeffs().iter().enumerate() {
        for (a, x) in c.terms() {
            out.push(Term {
                l: exp(conv, l as i64),
                area: exp(conv, a),
                s: None,
                coeff: x.into(),
            });
        }
    }
    out
}

pub fn touch_terms(s: &RatTouchSeries, conv: ConventionTag) -> Vec<Term> {
    let mut out = Vec::new();
    for (l, c) in s.coeffs().iter().enumerate() {
        let mut terms: Vec<_> = c.terms().collect();
        terms.sort_by_key(|(e, _)| (e.area, e.touch));
        for (e, x) in terms {
            out.push(Term {
                l: exp(conv, l as i64),
                area: exp(conv, e.area),
                s: Some(e.touch),
                coeff: x.into(),
            });
        }
    }
    out
}

fn exp_text(e: ExpValue) -> String {
    match e {
        ExpValue::Int(n) => n.to_string(),
        ExpValue::Half { twice } => HalfExp { twice }.to_string(),
    }
}

/// CSV with `l,A[,s],num,den`, or `l,A[,s],count` when every coefficient
/// is an integer and `counts` is set.
pub fn terms_csv(terms: &[Term], touch: bool, counts: bool) -> String {
    let mut out = String::new();
    let s_col = if touch { ",s" } else { "" };
    let tail = if counts { "count" } else { "num,den" };
    let _ = writeln!(out, "l,A{s_col},{tail}");
    for t in terms {
        let _ = write!(out, "{},{}", exp_text(t.l), exp_text(t.area));
        if touch {
            let _ = write!(out, ",{}", t.s.unwrap_or(0));
        }
        if counts {
            let _ = writeln!(out, ",{}", t.coeff.num);
        } else {
            let _ = writeln!(out, ",{},{}", t.coeff.num, t.coeff.den);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterTerm {
    pub a: usize,
    /// Exponent of q (diamonds).
    pub q: i64,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterRecord {
    pub spec: SpecEcho,
    /// Prefactor `ζ^zeta ϑ^theta` in front of the exponential.
    pub prefactor: Prefactor,
    pub terms: Vec<ClusterTerm>,
    pub version: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prefactor {
    pub zeta: usize,
    pub theta: i64,
}

pub fn cluster_csv(terms: &[ClusterTerm]) -> String {
    let mut out = String::from("a,q,num,den\n");
    for t in terms {
        let _ = writeln!(out, "{},{},{},{}", t.a, t.q, t.coeff.num, t.coeff.den);
    }
    out
}
