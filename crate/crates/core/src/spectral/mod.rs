//! Secular determinants `F_k(ζ,ϑ)` and the exclusion-statistics partition
//! functions that reproduce them.
//!
//! `F_k = det(1 − ζH_k)` is computed three ways: the top-row recursion
//! `F_k = F_{k−1}(ζϑ) − ζ² F_{k−2}(ζϑ²)`, a direct determinant of the
//! secular matrix, and the grand partition function of exclusion-2
//! particles on the levels `0..k` with Boltzmann factors `ϑ^{2n}` and
//! fugacity `−ζ²`.

pub mod bosonic;
pub mod det;

pub use bosonic::{bosonic_partition, gaussian_binomial, BosonicPartition, PartitionMethod};
pub use det::{determinant, secular_det_direct, secular_det_tilde, SecularMatrix};

use crate::algebra::{QLaurent, Series};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Single-particle spectrum `s(n) = ϑ^{2n}`, `n = 0..k`, with fugacity
/// `x = −ζ²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectralFunction {
    pub levels: usize,
}

impl SpectralFunction {
    pub fn new(levels: usize) -> Self {
        SpectralFunction { levels }
    }

    /// Boltzmann factor of level `n` as a ϑ-monomial.
    pub fn level<C: Scalar>(&self, n: usize) -> QLaurent<C> {
        assert!(n < self.levels, "level {n} outside spectrum of {} levels", self.levels);
        QLaurent::q_pow(2 * n as i64)
    }

    /// Plaquette exponent of `s(n)^power`.
    pub fn exponent(&self, n: usize, power: usize) -> i64 {
        (2 * n * power) as i64
    }

    pub fn fugacity<C: Scalar>(&self, order: usize) -> Series<C> {
        Series::monomial(order, 2, QLaurent::constant(-C::one()))
    }
}

/// Maps a polynomial in `q` onto ϑ-exponents (`q = ϑ²`).
pub fn q_to_theta<C: Scalar>(p: &QLaurent<C>) -> QLaurent<C> {
    p.map_exponents(|e| 2 * e)
}

/// `F_k` by the top-row recursion, seeded with `F_{−1} = F_0 = 1`.
pub fn secular_det_recursive<C: Scalar>(k: i64, order: usize) -> Result<Series<C>> {
    if k < -1 {
        return Err(Error::InvalidHeight(k));
    }
    Ok(secular_sequence(k.max(0) as usize, order).pop().expect("nonempty"))
}

/// `[F_{−1}, F_0, …, F_k]` at the given order.
pub fn secular_sequence<C: Scalar>(k: usize, order: usize) -> Vec<Series<C>> {
    let zeta2 = QLaurent::one();
    let mut out: Vec<Series<C>> = vec![Series::one(order), Series::one(order)];
    for j in 1..=k {
        let prev = out[j].substitute_scale(1);
        let prev2 = out[j - 1].substitute_scale(2).mul_monomial(2, &zeta2);
        out.push(&prev - &prev2);
    }
    out
}

/// `F_k = Σ_N (−z)^N q^{N(N−1)} [k−N+1 choose N]_q` with `z = ζ²`, `q = ϑ²`.
pub fn grand_partition_exclusion<C: Scalar>(k: usize, order: usize) -> Series<C> {
    let mut out = Series::zero(order);
    for n in 0..=k.div_ceil(2) {
        if 2 * n > order {
            break;
        }
        let z_part = gaussian_binomial::<C>(k + 1 - n, n);
        let ground = (n * n.saturating_sub(1)) as i64;
        let mut coeff = q_to_theta(&z_part).shift_area(2 * ground);
        if n % 2 == 1 {
            coeff = -&coeff;
        }
        out.set_coeff(2 * n, coeff);
    }
    out
}

/// Coefficients `[w^k] H(w, z, q)` for `k = 0..=w_order`, each a ζ-series.
#[derive(Clone, Debug)]
pub struct HeightSeries<C: Scalar> {
    pub w_order: usize,
    pub coeffs: Vec<Series<C>>,
}

impl<C: Scalar> HeightSeries<C> {
    /// `[w^k] H`.
    pub fn coeff(&self, k: usize) -> &Series<C> {
        &self.coeffs[k]
    }
}

/// Expands `H(w,z,q) = −1/w + (1/w) Σ_N (−w²z)^N q^{N(N−1)} / (w;q)_{N+1}`.
///
/// Each `1/(w;q)_{N+1}` is the product of the geometric series
/// `1/(1 − w q^j)`, `j = 0..=N`, expanded as a power series in `w`.
pub fn height_generating_function<C: Scalar>(w_order: usize, order: usize) -> HeightSeries<C> {
    let w_top = w_order + 1;
    let mut coeffs = vec![Series::<C>::zero(order); w_order + 1];
    for n in 0..=w_top / 2 {
        let w_len = w_top - 2 * n;
        // w-series with ϑ-polynomial coefficients
        let mut poch_inv = Series::<C>::one(w_len);
        for j in 0..=n {
            let factor = Series::from_coeffs(w_len, [QLaurent::one(), QLaurent::monomial(2 * j as i64, -C::one())]);
            poch_inv = poch_inv.div(&factor).expect("unit constant term");
        }
        let ground = 2 * (n * n.saturating_sub(1)) as i64;
        for (k, slot) in coeffs.iter_mut().enumerate() {
            // [w^{k+1}] of the N-th term needs [w^{k+1−2N}] of 1/(w;q)_{N+1}
            let Some(idx) = (k + 1).checked_sub(2 * n) else {
                continue;
            };
            if idx > w_len || 2 * n > order {
                continue;
            }
            let mut c = poch_inv.coeff(idx).shift_area(ground);
            if n % 2 == 1 {
                c = -&c;
            }
            let mut cur = slot.coeff(2 * n).clone();
            cur += &c;
            slot.set_coeff(2 * n, cur);
        }
    }
    HeightSeries { w_order, coeffs }
}
