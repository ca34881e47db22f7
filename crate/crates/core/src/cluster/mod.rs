//! Cluster expansion of `ln G` and `ln F_k` in powers of `z = ζ²`.
//!
//! The coefficient of `z^a` is a sum over compositions `l = (l_1, …, l_j)`
//! of `a` with weights
//!
//! ```text
//! c_2(l) = (1/l_1) ∏_{i=1}^{j−1} binom(l_i + l_{i+1} − 1, l_{i+1})
//! ```
//!
//! times powers of `q = ϑ²`. All polynomials returned here carry
//! ϑ-exponents, so they are even in ϑ.

pub mod compositions;

pub use compositions::{compositions, Composition, Compositions};

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{QLaurent, Series};
use crate::error::{Error, Result};
use crate::genfun::{Ceiling, Prefactor};
use crate::oracle;
use crate::scalar::Scalar;
use crate::spectral::SpectralFunction;

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

/// `c_2(l)` in binomial form. For a single part this is `1/l_1`.
pub fn c2(comp: &Composition) -> BigRational {
    let parts = comp.parts();
    let Some(&first) = parts.first() else {
        return BigRational::zero();
    };
    let num = parts
        .windows(2)
        .map(|w| binomial(big(w[0] + w[1] - 1), big(w[1])))
        .fold(BigUint::one(), |acc, b| acc * b);
    ratio(num, big(first))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(big).product()
}

/// `c_2(l)` as the factorial ratio
/// `∏_{i<j} (l_i + l_{i+1} − 1)! / (∏_{1<i<j} (l_i − 1)! ∏_i l_i!)`.
///
/// With one part the middle product runs from 2 to 0 and is read as the
/// reciprocal of the `i = 1` factor, which gives `1/l_1`.
pub fn c2_factorial(comp: &Composition) -> BigRational {
    let parts = comp.parts();
    let j = parts.len();
    if j == 0 {
        return BigRational::zero();
    }
    let mut num: BigUint = parts.windows(2).map(|w| factorial(w[0] + w[1] - 1)).product();
    let mut den: BigUint = parts.iter().map(|&l| factorial(l)).product();
    if j == 1 {
        num *= factorial(parts[0] - 1);
    } else {
        den *= parts[1..j - 1].iter().map(|&l| factorial(l - 1)).product::<BigUint>();
    }
    ratio(num, den)
}

fn to_scalar<C: Scalar>(r: &BigRational) -> C {
    C::from_rational(r)
}

/// `p_a`, the coefficient of `z^a` in a logarithm, as a polynomial in ϑ.
#[derive(Clone, Debug, PartialEq)]
pub struct PPolynomial<C: Scalar> {
    pub a: usize,
    pub value: QLaurent<C>,
}

impl<C: Scalar> PPolynomial<C> {
    /// Degree in `q` (diamonds).
    pub fn degree_diamonds(&self) -> Option<i64> {
        self.value.degree().map(|d| d / 2)
    }
}

/// Sum of `c_2(l) q^{Σ(i−1)l_i} Σ_{r∈range} q^{r a}` over compositions of
/// `a` with at most `max_parts` parts. `range` maps the part count `j` to
/// an inclusive range of `r`, or `None` to skip.
fn cluster_sum<C: Scalar, F>(a: usize, max_parts: Option<usize>, range: F) -> QLaurent<C>
where
    F: Fn(usize) -> Option<(usize, usize)>,
{
    let mut out = QLaurent::zero();
    for comp in compositions(a, max_parts) {
        let Some((lo, hi)) = range(comp.len()) else { continue };
        if lo > hi {
            continue;
        }
        let w = to_scalar::<C>(&c2(&comp));
        let e = comp.staircase_weight();
        for r in lo..=hi {
            out.add_term(2 * (e + r * a) as i64, w.clone());
        }
    }
    out
}

/// `p_1, …, p_{a_max}` of the unbounded excursion generating function,
/// `ln G = Σ_a z^a p_a(q)`.
pub fn log_genfun_unbounded<C: Scalar>(a_max: usize) -> Vec<PPolynomial<C>> {
    (1..=a_max)
        .map(|a| PPolynomial {
            a,
            value: cluster_sum(a, None, |_| Some((0, 0))),
        })
        .collect()
}

/// Coefficients of `z^a`, `a = 1..=a_max`, in `ln F_k`:
/// `−Σ_{j≤k} c_2(l) q^{Σ(i−1)l_i} Σ_{r=0}^{k−j} q^{ra}`.
pub fn log_secular<C: Scalar>(k: usize, a_max: usize) -> Vec<QLaurent<C>> {
    (1..=a_max)
        .map(|a| -&cluster_sum::<C, _>(a, Some(k), |j| Some((0, k - j))))
        .collect()
}

/// The same coefficients from the spectrum `s(n) = q^n` of the `k`
/// exclusion levels: `Σ_{j≤k} c_2(l) Σ_{m=0}^{k−j} ∏_i s(m+i−1)^{l_i}`
/// with the overall sign of `(−z)^a (−1)^{a−1}`.
pub fn log_secular_spectral<C: Scalar>(k: usize, a: usize) -> QLaurent<C> {
    let spectrum = SpectralFunction::new(k);
    let mut out = QLaurent::zero();
    for comp in compositions(a, Some(k)) {
        let w = QLaurent::constant(to_scalar::<C>(&c2(&comp)));
        for m in 0..=k - comp.len() {
            let term = comp.parts().iter().enumerate().fold(w.clone(), |acc, (i, &l)| {
                let s = spectrum.level::<C>(m + i);
                (0..l).fold(acc, |acc, _| &acc * &s)
            });
            out = &out - &term;
        }
    }
    out
}

/// Packs `Σ_a z^a p_a` into a ζ-series.
pub fn log_series<C: Scalar>(ps: &[PPolynomial<C>], order: usize) -> Series<C> {
    let mut s = Series::zero(order);
    for p in ps {
        if 2 * p.a <= order {
            s.set_coeff(2 * p.a, p.value.clone());
        }
    }
    s
}

/// `ln(G_{k,mn} / prefactor) = Σ_a z^a p_{k,mn;a}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RestrictedLog<C: Scalar> {
    pub ceiling: Ceiling,
    pub m: usize,
    pub n: usize,
    pub prefactor: Prefactor,
    pub p: Vec<PPolynomial<C>>,
}

impl<C: Scalar> RestrictedLog<C> {
    /// `prefactor · exp(Σ_a z^a p_a)` to ζ-order `order`.
    pub fn to_series(&self, order: usize) -> Result<Series<C>> {
        let body = log_series(&self.p, order).exp()?;
        let pre = QLaurent::q_pow(self.prefactor.theta);
        if self.prefactor.zeta > order {
            return Ok(Series::zero(order));
        }
        Ok(body
            .truncate(order - self.prefactor.zeta)
            .mul_monomial(self.prefactor.zeta, &pre)
            .truncate(order))
    }
}

/// `p_{k,mn;a}` for `a = 1..=a_max`. For `m ≤ n`,
///
/// ```text
/// p_{k,mn;a} = Σ_{j≤k} c_2(l) q^{Σ(i−1)l_i} Σ_{r=max(m−j,0)}^{min(k−j,n)} q^{ra}
/// ```
///
/// and the heights are swapped otherwise.
pub fn log_genfun_restricted<C: Scalar>(
    ceiling: Ceiling,
    m: usize,
    n: usize,
    a_max: usize,
) -> Result<RestrictedLog<C>> {
    if let Ceiling::Finite(k) = ceiling {
        if m > k || n > k {
            return Err(Error::SpecOutOfRange { k, m, n });
        }
    }
    let (lo, hi) = (m.min(n), m.max(n));
    let k = ceiling.finite();
    let p = (1..=a_max)
        .map(|a| {
            let value = cluster_sum(a, k, |j| {
                let top = match k {
                    Some(k) => (k - j).min(hi),
                    None => hi,
                };
                Some((lo.saturating_sub(j), top))
            });
            PPolynomial { a, value }
        })
        .collect();
    Ok(RestrictedLog {
        ceiling,
        m,
        n,
        prefactor: Prefactor::new(lo, hi),
        p,
    })
}

/// Predicted degree in `q` of `p_{k,mn;a}` for `m ≤ n`:
/// `a(a−1)/2 + an` while `a ≤ k−n`, then `(k−n−1)(2a−k+n)/2 + an`.
pub fn degree_formula(ceiling: Ceiling, n: usize, a: usize) -> i64 {
    let (a, n) = (a as i64, n as i64);
    match ceiling {
        Ceiling::Finite(k) if a > k as i64 - n => {
            let room = k as i64 - n;
            (room - 1) * (2 * a - room) / 2 + a * n
        }
        _ => a * (a - 1) / 2 + a * n,
    }
}

/// Degree of `p_a` against the formula and the oracle's maximal area.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub a: usize,
    pub formula: i64,
    pub computed: Option<i64>,
    /// Largest area over paths of `2a + |n−m|` steps, in plaquettes.
    pub max_area: i64,
    /// `2·formula` plus the prefactor's ϑ-exponent.
    pub predicted_area: i64,
}

impl DegreeCheck {
    pub fn holds(&self) -> bool {
        self.computed == Some(self.formula) && self.max_area == self.predicted_area
    }
}

pub fn degree_check(k: usize, m: usize, n: usize, a: usize) -> Result<DegreeCheck> {
    let log = log_genfun_restricted::<BigRational>(Ceiling::Finite(k), m, n, a)?;
    let (lo, hi) = (m.min(n), m.max(n));
    let computed = log.p.last().and_then(|p| p.degree_diamonds());
    let formula = degree_formula(Ceiling::Finite(k), hi, a);
    let max_area = oracle::max_area(k, lo, hi, 2 * a + hi - lo)?;
    let predicted_area = 2 * formula + log.prefactor.theta;
    Ok(DegreeCheck {
        k,
        m,
        n,
        a,
        formula,
        computed,
        max_area,
        predicted_area,
    })
}
