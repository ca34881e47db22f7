//! Generating functions that also count touchdowns.
//!
//! A touchdown is a down-step landing on height 0; the starting point never
//! counts. The marker `t` sits on the `⟨0|H|1⟩` entry of the transfer
//! matrix, and `F̃_k = det(1 − ζH̃_k)` replaces `F_k` wherever the lower
//! end of the path sees the floor.

use crate::algebra::{Laurent, Series, TouchExp, TouchLaurent, TouchSeries};
use crate::error::{Error, Result};
use crate::genfun::{genfun, genfun_excursion, Ceiling, GenSpec};
use crate::guards::Guards;
use crate::scalar::Scalar;
use crate::spectral::det::{check_direct_guard, exact_order};
use crate::spectral::{determinant, secular_sequence};

/// A ζ-series whose coefficients are polynomials in `t` and ϑ.
#[derive(Clone, Debug, PartialEq)]
pub struct TouchdownSeries<C: Scalar> {
    pub spec: GenSpec,
    pub series: TouchSeries<C>,
}

impl<C: Scalar> TouchdownSeries<C> {
    /// The series with `t = 1`.
    pub fn at_t_one(&self) -> Series<C> {
        self.series.eval_t(&C::one())
    }
}

fn t_poly<C: Scalar>() -> TouchLaurent<C> {
    TouchLaurent::touch_monomial(1, 0, C::one())
}

fn one_minus_t<C: Scalar>() -> TouchLaurent<C> {
    &TouchLaurent::one() - &t_poly()
}

/// `t + (1−t)·s` for a plain series `s`.
fn interpolate<C: Scalar>(s: &Series<C>) -> TouchSeries<C> {
    let order = s.order();
    &TouchSeries::constant(order, t_poly()) + &TouchSeries::lift(s).scale(&one_minus_t())
}

/// `F̃_k = t F_k(ζ,ϑ) + (1−t) F_{k−1}(ζϑ,ϑ)`, with `F̃_{−1} = F̃_0 = 1`.
pub fn tilde_secular<C: Scalar>(k: i64, order: usize) -> Result<TouchSeries<C>> {
    if k < -1 {
        return Err(Error::InvalidHeight(k));
    }
    if k <= 0 {
        return Ok(TouchSeries::one(order));
    }
    let k = k as usize;
    let fs = secular_sequence::<C>(k, order);
    let here = TouchSeries::lift(&fs[k + 1]).scale(&t_poly());
    let below = TouchSeries::lift(&fs[k].substitute_scale(1)).scale(&one_minus_t());
    Ok(&here + &below)
}

/// `F̃_k = F_{k−1}(ζϑ,ϑ) − t ζ² F_{k−2}(ζϑ²,ϑ)` from the top row.
pub fn tilde_secular_top_row<C: Scalar>(k: i64, order: usize) -> Result<TouchSeries<C>> {
    if k < -1 {
        return Err(Error::InvalidHeight(k));
    }
    if k <= 0 {
        return Ok(TouchSeries::one(order));
    }
    let k = k as usize;
    let fs = secular_sequence::<C>(k, order);
    let first = TouchSeries::lift(&fs[k].substitute_scale(1));
    let second = TouchSeries::lift(&fs[k - 1].substitute_scale(2)).mul_monomial(2, &-&t_poly::<C>());
    Ok(&first + &second)
}

/// `1 − ζH̃_k`: the secular matrix with `t` on the `(0,1)` hop.
pub fn tilde_secular_matrix<C: Scalar>(k: usize, order: usize) -> Vec<Vec<TouchSeries<C>>> {
    let dim = k + 1;
    let mut rows = vec![vec![TouchSeries::zero(order); dim]; dim];
    for (j, row) in rows.iter_mut().enumerate() {
        row[j] = TouchSeries::one(order);
    }
    for j in 0..k {
        let hop =
            |touch: u32| TouchSeries::monomial(order, 1, Laurent::monomial(TouchExp::new(touch, j as i64), -C::one()));
        rows[j][j + 1] = hop(u32::from(j == 0));
        rows[j + 1][j] = hop(0);
    }
    rows
}

/// `F̃_k` as a direct determinant, exact (order `k+1`).
pub fn tilde_secular_direct<C: Scalar>(k: usize, guards: &Guards) -> Result<TouchSeries<C>> {
    check_direct_guard(k, guards)?;
    let order = exact_order(k);
    Ok(determinant(&tilde_secular_matrix::<C>(k, order), order))
}

fn check_touch_spec(spec: &GenSpec) -> Result<()> {
    spec.validate()?;
    if spec.m > spec.n {
        return Err(Error::SpecOutOfRange {
            k: spec.effective_k(),
            m: spec.m,
            n: spec.n,
        });
    }
    Ok(())
}

/// `G̃_{k,mn} = ζ^{n−m} ϑ^{(n−m)(n+m−1)/2} F̃_{m−1} F_{k−n−1}(ζϑ^{n+1}) / F̃_k`
/// for `m ≤ n`.
pub fn tilde_genfun<C: Scalar>(spec: &GenSpec) -> Result<TouchdownSeries<C>> {
    check_touch_spec(spec)?;
    let (k, m, n, order) = (spec.effective_k(), spec.m, spec.n, spec.order);
    let pre = spec.prefactor();
    if pre.zeta > order {
        return Ok(TouchdownSeries {
            spec: *spec,
            series: TouchSeries::zero(order),
        });
    }
    let ratio_order = order - pre.zeta;
    let fs = secular_sequence::<C>(k, ratio_order);
    let upper = TouchSeries::lift(&fs[k - n].substitute_scale(n as i64 + 1));
    let num = tilde_secular::<C>(m as i64 - 1, ratio_order)?.mul(&upper);
    let ratio = num.div(&tilde_secular::<C>(k as i64, ratio_order)?)?;
    let series = TouchSeries::from_coeffs(
        order,
        (0..=order).map(|l| match l.checked_sub(pre.zeta) {
            Some(i) => ratio.coeff(i).shift_area(pre.theta),
            None => Laurent::zero(),
        }),
    );
    Ok(TouchdownSeries { spec: *spec, series })
}

/// `G_{m−1}` with `G_{−1} := 1`.
fn excursion_below<C: Scalar>(m: usize, order: usize) -> Result<Series<C>> {
    match m {
        0 => Ok(Series::one(order)),
        _ => Ok(genfun_excursion::<C>(Ceiling::Finite(m - 1), order)?.series),
    }
}

/// `G̃_{k,mn} = G_{k,mn} [t + (1−t)G_{m−1}] / [t + (1−t)G_k]`, built from
/// the untagged generating functions.
pub fn tilde_genfun_from_untagged<C: Scalar>(spec: &GenSpec) -> Result<TouchdownSeries<C>> {
    check_touch_spec(spec)?;
    let order = spec.order;
    let g = TouchSeries::lift(&genfun::<C>(spec)?.series);
    let gk = genfun_excursion::<C>(spec.ceiling, order)?.series;
    let num = g.mul(&interpolate(&excursion_below::<C>(spec.m, order)?));
    let series = num.div(&interpolate(&gk))?;
    Ok(TouchdownSeries { spec: *spec, series })
}

/// Excursions that do not count the final touchdown:
/// `1 + (G̃_k − 1)/t`.
pub fn tilde_genfun_openend<C: Scalar>(ceiling: Ceiling, order: usize) -> Result<TouchdownSeries<C>> {
    let spec = GenSpec::new(ceiling, 0, 0, order);
    let tilde = tilde_genfun::<C>(&spec)?.series;
    let one = TouchSeries::one(order);
    let series = &one + &(&tilde - &one).div_t()?;
    Ok(TouchdownSeries { spec, series })
}

/// The same series as `1 + (G_k − 1)/(t + (1−t)G_k)`.
pub fn tilde_genfun_openend_untagged<C: Scalar>(ceiling: Ceiling, order: usize) -> Result<TouchdownSeries<C>> {
    let spec = GenSpec::new(ceiling, 0, 0, order);
    let gk = genfun_excursion::<C>(ceiling, order)?.series;
    let one = TouchSeries::one(order);
    let series = &one + &(&TouchSeries::lift(&gk) - &one).div(&interpolate(&gk))?;
    Ok(TouchdownSeries { spec, series })
}

/// The `t^s` slice of a touchdown series.
pub fn touch_slice<C: Scalar>(s: &TouchSeries<C>, touch: u32) -> Series<C> {
    Series::from_coeffs(s.order(), s.coeffs().iter().map(|c| c.touch_part(touch)))
}
