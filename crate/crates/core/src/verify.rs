//! Identity checks and the verification suites behind `dyckgen verify`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Exponent, LSeries, QLaurent, Series, TouchLaurent, TouchSeries};
use crate::cluster::{
    c2, c2_factorial, compositions, degree_check, log_genfun_restricted, log_genfun_unbounded, log_secular, log_series,
    PPolynomial,
};
use crate::error::Result;
use crate::genfun::{check_recursions, continued_fraction, duality_check, genfun, genfun_excursion, Ceiling, GenSpec};
use crate::guards::Guards;
use crate::oracle::{self, genfun_from_table, touch_series_from_table};
use crate::scalar::Scalar;
use crate::spectral::{
    bosonic_partition, grand_partition_exclusion, height_generating_function, secular_det_direct,
    secular_det_recursive, secular_det_tilde, PartitionMethod,
};
use crate::touchdown::{
    tilde_genfun, tilde_genfun_from_untagged, tilde_genfun_openend, tilde_genfun_openend_untagged, tilde_secular,
    tilde_secular_direct, tilde_secular_top_row,
};
use crate::Rat;

/// Outcome of comparing two sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub point: String,
    /// First ζ-order where the two sides differ, if any.
    pub first_mismatch: Option<usize>,
}

impl IdentityCheck {
    pub fn compare<E: Exponent, C: Scalar>(
        name: impl Into<String>,
        point: impl Into<String>,
        lhs: &LSeries<E, C>,
        rhs: &LSeries<E, C>,
    ) -> Self {
        IdentityCheck {
            name: name.into(),
            point: point.into(),
            first_mismatch: lhs.first_difference(rhs),
        }
    }

    pub fn from_bool(name: impl Into<String>, point: impl Into<String>, ok: bool) -> Self {
        IdentityCheck {
            name: name.into(),
            point: point.into(),
            first_mismatch: (!ok).then_some(0),
        }
    }

    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_mismatch {
            None => write!(f, "PASS {} [{}]", self.name, self.point),
            Some(l) => write!(f, "FAIL {} [{}] first mismatch at order {l}", self.name, self.point),
        }
    }
}

/// Groups of identities exercised by `dyckgen verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Determinants,
    Genfun,
    Duality,
    Recursions,
    Cluster,
    Touchdown,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Determinants,
        Suite::Genfun,
        Suite::Duality,
        Suite::Recursions,
        Suite::Cluster,
        Suite::Touchdown,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Determinants => "determinants",
            Suite::Genfun => "genfun",
            Suite::Duality => "duality",
            Suite::Recursions => "recursions",
            Suite::Cluster => "cluster",
            Suite::Touchdown => "touchdown",
        }
    }

    /// Parses a suite name; `"all"` selects every suite.
    pub fn parse_selection(s: &str) -> Option<Vec<Suite>> {
        if s == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL.iter().find(|x| x.name() == s).map(|&x| vec![x])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bounds for a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyParams {
    pub k_max: usize,
    /// Largest path length (ζ-order) compared.
    pub len_max: usize,
    pub guards: Guards,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            k_max: 5,
            len_max: 12,
            guards: Guards::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<IdentityCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds())
    }
}

type R = Rat;

fn heights(k_max: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=k_max).flat_map(|k| (0..=k).flat_map(move |m| (0..=k).map(move |n| (k, m, n))))
}

pub fn run_suite(suite: Suite, p: &VerifyParams) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Determinants => determinants(p)?,
        Suite::Genfun => genfun_suite(p)?,
        Suite::Duality => heights(p.k_max)
            .map(|(k, m, n)| duality_check::<R>(&GenSpec::finite(k, m, n, p.len_max)))
            .collect::<Result<_>>()?,
        Suite::Recursions => {
            let mut out = Vec::new();
            for (k, m, n) in heights(p.k_max) {
                out.extend(check_recursions::<R>(&GenSpec::finite(k, m, n, p.len_max))?);
            }
            out
        }
        Suite::Cluster => cluster_suite(p)?,
        Suite::Touchdown => touchdown_suite(p)?,
    };
    Ok(SuiteReport { suite, checks })
}

pub fn run_suites(suites: &[Suite], p: &VerifyParams) -> Result<Vec<SuiteReport>> {
    suites.iter().map(|&s| run_suite(s, p)).collect()
}

fn determinants(p: &VerifyParams) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    for k in 0..=p.k_max {
        let point = format!("k={k}");
        let direct = secular_det_direct::<R>(k, &p.guards)?;
        let order = direct.order();
        let rec = secular_det_recursive::<R>(k as i64, order)?;
        out.push(IdentityCheck::compare("recursive=direct", point.clone(), &rec, &direct));
        out.push(IdentityCheck::compare(
            "recursive=exclusion",
            point.clone(),
            &rec,
            &grand_partition_exclusion(k, order),
        ));
        out.push(IdentityCheck::compare(
            "recursive=down-step",
            point.clone(),
            &rec,
            &secular_det_tilde(k, &p.guards)?,
        ));
        for particles in 0..=k.div_ceil(2) {
            let reference = bosonic_partition::<R>(
                k + 1 - 2 * particles + 1,
                particles,
                PartitionMethod::QBinomial,
                &p.guards,
            )?;
            for method in PartitionMethod::ALL {
                let levels = reference.levels;
                if matches!(method, PartitionMethod::Occupation | PartitionMethod::Excitation)
                    && levels * particles > p.guards.enum_kn_max
                {
                    continue;
                }
                let z = bosonic_partition::<R>(levels, particles, method, &p.guards)?;
                out.push(IdentityCheck::from_bool(
                    format!("bosonic-{method:?}").to_lowercase(),
                    format!("levels={levels} N={particles}"),
                    z.value == reference.value,
                ));
            }
        }
    }
    let h = height_generating_function::<R>(p.k_max, p.len_max);
    for k in 0..=p.k_max {
        let f = secular_det_recursive::<R>(k as i64, p.len_max)?;
        out.push(IdentityCheck::compare(
            "height-coefficient",
            format!("k={k}"),
            h.coeff(k),
            &f,
        ));
    }
    Ok(out)
}

fn genfun_suite(p: &VerifyParams) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    for (k, m, n) in heights(p.k_max) {
        let spec = GenSpec::finite(k, m, n, p.len_max);
        let table = oracle::enumerate(k, m, n, p.len_max, &p.guards)?;
        let point = format!("k={k} m={m} n={n}");
        out.push(IdentityCheck::compare(
            "oracle",
            point,
            &genfun::<R>(&spec)?.series,
            &genfun_from_table(&table),
        ));
    }
    for k in 0..=p.k_max {
        let g = genfun_excursion::<R>(Ceiling::Finite(k), p.len_max)?.series;
        let cf = continued_fraction::<R>(Ceiling::Finite(k), p.len_max);
        out.push(IdentityCheck::compare("continued-fraction", format!("k={k}"), &g, &cf));
    }
    let unbounded = genfun_excursion::<R>(Ceiling::Unbounded, p.len_max)?.series;
    let cf = continued_fraction::<R>(Ceiling::Unbounded, p.len_max);
    out.push(IdentityCheck::compare("continued-fraction", "k=inf", &unbounded, &cf));
    let catalan = catalan_series(p.len_max);
    out.push(IdentityCheck::compare(
        "catalan",
        "k=inf q=1",
        &collapse_area(&unbounded),
        &catalan,
    ));
    Ok(out)
}

/// `Σ C_a ζ^{2a}` with the Catalan numbers `C_a`.
fn catalan_series(order: usize) -> Series<R> {
    let mut s = Series::zero(order);
    let mut c = BigInt::one();
    for a in 0..=order / 2 {
        s.set_coeff(2 * a, QLaurent::constant(R::from_integer(c.clone())));
        c = c * BigInt::from(2 * (2 * a + 1)) / BigInt::from(a + 2);
    }
    s
}

/// Sets `ϑ = 1`.
fn collapse_area(s: &Series<R>) -> Series<R> {
    s.map_coeffs(|c| {
        let total = c.terms().fold(R::zero(), |acc, (_, x)| acc + x);
        QLaurent::constant(total)
    })
}

fn cluster_suite(p: &VerifyParams) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    let a_max = p.len_max / 2;
    for a in 1..=a_max.max(1) {
        let ok = compositions(a, None).all(|c| c2(&c) == c2_factorial(&c));
        out.push(IdentityCheck::from_bool("c2-forms", format!("a={a}"), ok));
    }
    let g = genfun_excursion::<R>(Ceiling::Unbounded, p.len_max)?.series;
    let ps = log_genfun_unbounded::<R>(a_max);
    out.push(IdentityCheck::compare(
        "log-unbounded",
        "k=inf",
        &g.log()?,
        &log_series(&ps, p.len_max),
    ));
    for k in 0..=p.k_max {
        let f = secular_det_recursive::<R>(k as i64, p.len_max)?;
        let cl: Vec<_> = log_secular::<R>(k, a_max)
            .into_iter()
            .enumerate()
            .map(|(i, value)| PPolynomial { a: i + 1, value })
            .collect();
        out.push(IdentityCheck::compare(
            "log-secular",
            format!("k={k}"),
            &f.log()?,
            &log_series(&cl, p.len_max),
        ));
    }
    for (k, m, n) in heights(p.k_max) {
        let g = genfun::<R>(&GenSpec::finite(k, m, n, p.len_max))?.series;
        let log = log_genfun_restricted::<R>(Ceiling::Finite(k), m, n, a_max)?;
        out.push(IdentityCheck::compare(
            "log-restricted",
            format!("k={k} m={m} n={n}"),
            &g,
            &log.to_series(p.len_max)?,
        ));
        if m <= n && k > 0 {
            for a in 1..=a_max {
                let d = degree_check(k, m, n, a)?;
                out.push(IdentityCheck::from_bool(
                    "degree",
                    format!("k={k} m={m} n={n} a={a}"),
                    d.holds(),
                ));
            }
        }
    }
    Ok(out)
}

fn touchdown_suite(p: &VerifyParams) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    let one = R::one();
    for k in 0..=p.k_max {
        let direct = tilde_secular_direct::<R>(k, &p.guards)?;
        let order = direct.order();
        let point = format!("k={k}");
        out.push(IdentityCheck::compare(
            "tilde-recursive",
            point.clone(),
            &tilde_secular::<R>(k as i64, order)?,
            &direct,
        ));
        out.push(IdentityCheck::compare(
            "tilde-top-row",
            point.clone(),
            &tilde_secular_top_row::<R>(k as i64, order)?,
            &direct,
        ));
        let plain = secular_det_recursive::<R>(k as i64, order)?;
        out.push(IdentityCheck::compare(
            "tilde-at-t=1",
            point,
            &direct.eval_t(&one),
            &plain,
        ));
    }
    for (k, m, n) in heights(p.k_max).filter(|&(_, m, n)| m <= n) {
        let spec = GenSpec::finite(k, m, n, p.len_max);
        let point = format!("k={k} m={m} n={n}");
        let s = tilde_genfun::<R>(&spec)?.series;
        let table = oracle::enumerate(k, m, n, p.len_max, &p.guards)?;
        out.push(IdentityCheck::compare(
            "touch-oracle",
            point.clone(),
            &s,
            &touch_series_from_table(&table),
        ));
        out.push(IdentityCheck::compare(
            "touch-untagged-form",
            point.clone(),
            &s,
            &tilde_genfun_from_untagged::<R>(&spec)?.series,
        ));
        out.push(IdentityCheck::compare(
            "touch-at-t=1",
            point,
            &s.eval_t(&one),
            &genfun::<R>(&spec)?.series,
        ));
    }
    for k in 1..=p.k_max {
        let c = Ceiling::Finite(k);
        let open = tilde_genfun_openend::<R>(c, p.len_max)?.series;
        let alt = tilde_genfun_openend_untagged::<R>(c, p.len_max)?.series;
        out.push(IdentityCheck::compare("open-end", format!("k={k}"), &open, &alt));
    }
    let k1 = tilde_genfun::<R>(&GenSpec::finite(1, 0, 0, p.len_max))?.series;
    let mut closed = TouchSeries::zero(p.len_max);
    for a in 0..=p.len_max / 2 {
        closed.set_coeff(2 * a, TouchLaurent::touch_monomial(a as u32, 0, R::one()));
    }
    out.push(IdentityCheck::compare("closed-form", "k=1", &k1, &closed));
    Ok(out)
}
