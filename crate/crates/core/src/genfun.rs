//! Length-and-area generating functions `G_{k,mn}(ζ,ϑ)` of meanders.
//!
//! For `m ≤ n`,
//!
//! ```text
//! G_{k,mn} = ζ^{n−m} ϑ^{(n−m)(n+m−1)/2} F_{m−1}(ζ,ϑ) F_{k−n−1}(ζϑ^{n+1},ϑ) / F_k(ζ,ϑ)
//! ```
//!
//! and `G_{k,mn} = G_{k,nm}` otherwise. The monomial prefactor is kept
//! apart from the ratio of determinants so intermediate exponents stay
//! non-negative.

use std::collections::BTreeMap;

use crate::algebra::{ConventionTag, QLaurent, Series};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::spectral::secular_sequence;
use crate::verify::IdentityCheck;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ceiling {
    Finite(usize),
    Unbounded,
}

impl Ceiling {
    pub fn finite(self) -> Option<usize> {
        match self {
            Ceiling::Finite(k) => Some(k),
            Ceiling::Unbounded => None,
        }
    }
}

/// Which generating function, to which order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub ceiling: Ceiling,
    pub m: usize,
    pub n: usize,
    /// Truncation order in ζ (steps).
    pub order: usize,
    pub convention: ConventionTag,
}

impl GenSpec {
    pub fn new(ceiling: Ceiling, m: usize, n: usize, order: usize) -> Self {
        GenSpec {
            ceiling,
            m,
            n,
            order,
            convention: ConventionTag::StepPlaquette,
        }
    }

    pub fn finite(k: usize, m: usize, n: usize, order: usize) -> Self {
        Self::new(Ceiling::Finite(k), m, n, order)
    }

    pub fn unbounded(m: usize, n: usize, order: usize) -> Self {
        Self::new(Ceiling::Unbounded, m, n, order)
    }

    pub fn with_convention(mut self, convention: ConventionTag) -> Self {
        self.convention = convention;
        self
    }

    /// The ceiling used for computation. A path of at most `order` steps
    /// starting at `m` never rises above `max(m,n) + order`, so that
    /// height stands in for an absent ceiling.
    pub fn effective_k(&self) -> usize {
        match self.ceiling {
            Ceiling::Finite(k) => k,
            Ceiling::Unbounded => self.m.max(self.n) + self.order,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.effective_k();
        if self.m > k || self.n > k {
            return Err(Error::SpecOutOfRange {
                k,
                m: self.m,
                n: self.n,
            });
        }
        Ok(())
    }

    /// `(low, high)` heights: the formula is evaluated with `m ≤ n`.
    pub fn ordered(&self) -> (usize, usize) {
        (self.m.min(self.n), self.m.max(self.n))
    }

    pub fn prefactor(&self) -> Prefactor {
        let (lo, hi) = self.ordered();
        Prefactor::new(lo, hi)
    }
}

/// The monomial `ζ^zeta ϑ^theta` in front of the determinant ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prefactor {
    pub zeta: usize,
    pub theta: i64,
}

impl Prefactor {
    /// Prefactor for heights `m ≤ n`.
    pub fn new(m: usize, n: usize) -> Self {
        debug_assert!(m <= n);
        let d = n - m;
        let theta = (d * (n + m)).saturating_sub(d) as i64 / 2;
        Prefactor { zeta: d, theta }
    }
}

#[derive(Clone, Debug)]
pub struct GenFun<C: Scalar> {
    pub spec: GenSpec,
    pub prefactor: Prefactor,
    /// The full expansion to `spec.order`, prefactor included.
    pub series: Series<C>,
}

impl<C: Scalar> GenFun<C> {
    /// The series with the prefactor divided out.
    pub fn reduced(&self) -> Series<C> {
        self.series
            .shift_down(self.prefactor.zeta)
            .map(|s| s.map_coeffs(|c| c.shift_area(-self.prefactor.theta)))
            .unwrap_or_else(|_| Series::zero(0))
    }
}

/// Places `ratio` (order `order − d`) behind the prefactor at order `order`.
fn attach_prefactor<C: Scalar>(ratio: &Series<C>, pre: Prefactor, order: usize) -> Series<C> {
    let mut out = Series::zero(order);
    for l in 0..=ratio.order() {
        if l + pre.zeta > order {
            break;
        }
        out.set_coeff(l + pre.zeta, ratio.coeff(l).shift_area(pre.theta));
    }
    out
}

/// `G_{k,mn}` expanded to `spec.order`.
pub fn genfun<C: Scalar>(spec: &GenSpec) -> Result<GenFun<C>> {
    spec.validate()?;
    let k = spec.effective_k();
    let (m, n) = spec.ordered();
    let pre = spec.prefactor();
    let order = spec.order;
    if pre.zeta > order {
        return Ok(GenFun {
            spec: *spec,
            prefactor: pre,
            series: Series::zero(order),
        });
    }
    let ratio_order = order - pre.zeta;
    // fs[j + 1] = F_j for j = −1..=k
    let fs = secular_sequence::<C>(k, ratio_order);
    let f = |j: i64| &fs[(j + 1) as usize];
    let upper = f(k as i64 - n as i64 - 1).substitute_scale(n as i64 + 1);
    let num = f(m as i64 - 1).mul(&upper);
    let ratio = num.div(f(k as i64))?;
    Ok(GenFun {
        spec: *spec,
        prefactor: pre,
        series: attach_prefactor(&ratio, pre, order),
    })
}

/// Excursions `G_k = F_{k−1}(ζϑ,ϑ) / F_k(ζ,ϑ)`.
pub fn genfun_excursion<C: Scalar>(ceiling: Ceiling, order: usize) -> Result<GenFun<C>> {
    let spec = GenSpec::new(ceiling, 0, 0, order);
    let k = spec.effective_k();
    let fs = secular_sequence::<C>(k, order);
    let series = fs[k].substitute_scale(1).div(&fs[k + 1])?;
    Ok(GenFun {
        spec,
        prefactor: Prefactor::new(0, 0),
        series,
    })
}

/// Excursions from the ceiling back to the ceiling: `F_{k−1}/F_k`.
pub fn genfun_ceiling_diagonal<C: Scalar>(k: usize, order: usize) -> Result<Series<C>> {
    let fs = secular_sequence::<C>(k, order);
    fs[k].div(&fs[k + 1])
}

/// Generating function with separate up-step and down-step markers.
///
/// Terms are keyed by `(up steps, down steps, area)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGenFun<C: Scalar> {
    pub spec: GenSpec,
    pub terms: BTreeMap<(usize, usize, i64), C>,
}

impl<C: Scalar> WeightedGenFun<C> {
    pub fn coeff(&self, up: usize, down: usize, area: i64) -> C {
        self.terms.get(&(up, down, area)).cloned().unwrap_or_else(C::zero)
    }

    /// Sets `ζ_u = ζ_d = ζ`.
    pub fn collapse(&self) -> Series<C> {
        let mut coeffs: Vec<QLaurent<C>> = vec![QLaurent::zero(); self.spec.order + 1];
        for (&(u, d, a), c) in &self.terms {
            coeffs[u + d].add_term(a, c.clone());
        }
        Series::from_coeffs(self.spec.order, coeffs)
    }
}

/// `G_{k,mn}(ζ_u, ζ_d; ϑ)`: a path of length `l` from `m` to `n` has
/// `(l + n − m)/2` up-steps and `(l − n + m)/2` down-steps, so each
/// coefficient is reweighted without square roots.
pub fn genfun_weighted<C: Scalar>(spec: &GenSpec) -> Result<WeightedGenFun<C>> {
    let g = genfun::<C>(spec)?;
    let rise = spec.n as i64 - spec.m as i64;
    let mut terms = BTreeMap::new();
    for (l, c) in g.series.coeffs().iter().enumerate() {
        for (a, v) in c.terms() {
            let up = (l as i64 + rise) / 2;
            let down = (l as i64 - rise) / 2;
            debug_assert!(up >= 0 && down >= 0 && (l as i64 + rise) % 2 == 0);
            terms.insert((up as usize, down as usize, a), v.clone());
        }
    }
    Ok(WeightedGenFun { spec: *spec, terms })
}

/// The substitution `(ζ, ϑ) → (ζϑ^{k−1}, ϑ^{−1})` of the reflection duality.
pub fn reflect<C: Scalar>(s: &Series<C>, k: usize) -> Series<C> {
    s.invert_q().substitute_scale(k as i64 - 1)
}

/// Reflection duality `G_{k,mn}(ζ,ϑ) = G_{k;k−m,k−n}(ζϑ^{k−1}, ϑ^{−1})`.
pub fn duality_check<C: Scalar>(spec: &GenSpec) -> Result<IdentityCheck> {
    let k = spec.ceiling.finite().ok_or(Error::SpecOutOfRange {
        k: usize::MAX,
        m: spec.m,
        n: spec.n,
    })?;
    spec.validate()?;
    let lhs = genfun::<C>(spec)?.series;
    let dual = GenSpec {
        m: k - spec.m,
        n: k - spec.n,
        ..*spec
    };
    let rhs = reflect(&genfun::<C>(&dual)?.series, k);
    Ok(IdentityCheck::compare(
        "duality",
        format!("k={k} m={} n={}", spec.m, spec.n),
        &lhs,
        &rhs,
    ))
}

pub fn check_duality<C: Scalar>(spec: &GenSpec) -> Result<bool> {
    duality_check::<C>(spec).map(|c| c.holds())
}

fn g<C: Scalar>(k: usize, m: usize, n: usize, order: usize) -> Result<Series<C>> {
    Ok(genfun::<C>(&GenSpec::finite(k, m, n, order))?.series)
}

fn gk<C: Scalar>(k: usize, order: usize) -> Result<Series<C>> {
    Ok(genfun_excursion::<C>(Ceiling::Finite(k), order)?.series)
}

fn zeta_theta<C: Scalar>(order: usize, zeta: usize, theta: i64) -> Series<C> {
    Series::monomial(order, zeta, QLaurent::q_pow(theta))
}

/// Every recursion applicable at the spec's `(k, m, n)`, each checked
/// to the spec's order.
pub fn check_recursions<C: Scalar>(spec: &GenSpec) -> Result<Vec<IdentityCheck>> {
    let k = spec.ceiling.finite().unwrap_or_else(|| spec.effective_k());
    spec.validate()?;
    let (m, n) = spec.ordered();
    let order = spec.order;
    let point = format!("k={k} m={m} n={n}");
    let lhs = g::<C>(k, m, n, order)?;
    let mut out = Vec::new();

    if m < n {
        // last passage from n−1 to n, then an excursion above n
        let rhs = zeta_theta::<C>(order, 1, n as i64 - 1)
            .mul(&g::<C>(k, m, n - 1, order)?)
            .mul(&gk::<C>(k - n, order)?.substitute_scale(n as i64));
        out.push(IdentityCheck::compare("last-passage", point.clone(), &lhs, &rhs));

        for level in m..n {
            let rhs = zeta_theta::<C>(order, 1, level as i64)
                .mul(&g::<C>(k, level + 1, n, order)?)
                .mul(&g::<C>(level, m, level, order)?);
            out.push(IdentityCheck::compare(
                "first-passage-level",
                format!("{point} level={level}"),
                &lhs,
                &rhs,
            ));
        }
    }

    if m < n && n < k {
        let rhs = &zeta_theta::<C>(order, 1, n as i64 - 1).mul(&g::<C>(k, m, n - 1, order)?)
            + &zeta_theta::<C>(order, 1, n as i64).mul(&g::<C>(k, m, n + 1, order)?);
        out.push(IdentityCheck::compare("three-term", point.clone(), &lhs, &rhs));
    }

    if k >= 1 {
        let gk_full = gk::<C>(k, order)?;
        let rhs = &Series::one(order)
            + &zeta_theta::<C>(order, 2, 0)
                .mul(&gk::<C>(k - 1, order)?.substitute_scale(1))
                .mul(&gk_full);
        out.push(IdentityCheck::compare("first-return", format!("k={k}"), &gk_full, &rhs));
    }
    Ok(out)
}

/// `G_k` as the truncated continued fraction
/// `1/(1 − z/(1 − zq/(… /(1 − zq^{k−1}))))`, `z = ζ²`, `q = ϑ²`,
/// evaluated from the innermost level outwards.
pub fn continued_fraction<C: Scalar>(ceiling: Ceiling, order: usize) -> Series<C> {
    let k = match ceiling {
        Ceiling::Finite(k) => k,
        Ceiling::Unbounded => order / 2 + 1,
    };
    let mut cur = Series::<C>::one(order);
    for j in (0..k).rev() {
        let step = zeta_theta::<C>(order, 2, 2 * j as i64).mul(&cur);
        let den = &Series::one(order) - &step;
        cur = Series::one(order).div(&den).expect("constant term is 1");
    }
    cur
}
