//! Bosonic partition functions on an equidistant spectrum.
//!
//! `Z^B_{k,N}(q)` is the partition function of `N` bosons in the levels
//! `0..k` with energies `0, 1, …, k−1` (in units where a level spacing
//! contributes one power of `q`). All polynomials in this module are in
//! `q`-exponents (diamonds); multiply exponents by two for plaquettes.

use crate::algebra::QLaurent;
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionMethod {
    /// Sum over occupation numbers of the `k` levels.
    Occupation,
    /// Sum over excitation numbers of the `N` particles.
    Excitation,
    /// Ratio of q-factorials.
    QBinomial,
    /// Product of `(1 − q^{j+N})/(1 − q^j)` factors.
    ProductFormula,
}

impl PartitionMethod {
    pub const ALL: [PartitionMethod; 4] = [
        PartitionMethod::Occupation,
        PartitionMethod::Excitation,
        PartitionMethod::QBinomial,
        PartitionMethod::ProductFormula,
    ];
}

#[derive(Clone, Debug, PartialEq)]
pub struct BosonicPartition<C: Scalar> {
    pub levels: usize,
    pub particles: usize,
    /// Polynomial in `q`.
    pub value: QLaurent<C>,
}

/// Gaussian binomial `[n choose r]_q`, built as the running product
/// `∏_{j=1}^{r} (1 − q^{n−r+j}) / (1 − q^j)`; every partial product is
/// itself a Gaussian binomial, so each division is exact.
pub fn gaussian_binomial<C: Scalar>(n: usize, r: usize) -> QLaurent<C> {
    if r > n {
        return QLaurent::zero();
    }
    let base = (n - r) as i64;
    let mut acc = QLaurent::one();
    for j in 1..=r as i64 {
        acc = &acc * &one_minus_q_pow(base + j);
        acc = acc
            .div_one_minus_q_pow(j)
            .expect("partial q-binomial products are polynomials");
    }
    acc
}

fn one_minus_q_pow<C: Scalar>(e: i64) -> QLaurent<C> {
    QLaurent::from_terms([(0, C::one()), (e, -C::one())])
}

/// `[n]_q = 1 + q + … + q^{n−1}`.
pub fn q_integer<C: Scalar>(n: usize) -> QLaurent<C> {
    QLaurent::from_terms((0..n as i64).map(|e| (e, C::one())))
}

/// `[n]!_q`.
pub fn q_factorial<C: Scalar>(n: usize) -> QLaurent<C> {
    (1..=n).fold(QLaurent::one(), |acc, j| &acc * &q_integer(j))
}

pub fn bosonic_partition<C: Scalar>(
    levels: usize,
    particles: usize,
    method: PartitionMethod,
    guards: &Guards,
) -> Result<BosonicPartition<C>> {
    if levels == 0 {
        return Err(Error::InvalidHeight(0));
    }
    let value = match method {
        PartitionMethod::Occupation | PartitionMethod::Excitation => {
            let size = levels.saturating_mul(particles);
            if size > guards.enum_kn_max {
                return Err(Error::GuardExceeded {
                    what: "k·N",
                    value: size,
                    max: guards.enum_kn_max,
                });
            }
            let hist = if method == PartitionMethod::Occupation {
                occupation_histogram(levels, particles)
            } else {
                excitation_histogram(levels, particles)
            };
            histogram_poly(&hist)
        }
        PartitionMethod::QBinomial => {
            let num = q_factorial::<C>(levels + particles - 1);
            let den = &q_factorial::<C>(particles) * &q_factorial::<C>(levels - 1);
            num.div_exact(&den)?
        }
        PartitionMethod::ProductFormula => {
            let mut acc = QLaurent::one();
            for j in 1..levels as i64 {
                acc = &acc * &one_minus_q_pow(j + particles as i64);
                acc = acc.div_one_minus_q_pow(j)?;
            }
            acc
        }
    };
    Ok(BosonicPartition {
        levels,
        particles,
        value,
    })
}

fn histogram_poly<C: Scalar>(hist: &[u128]) -> QLaurent<C> {
    QLaurent::from_terms(
        hist.iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(e, &c)| (e as i64, C::from_u128(c).expect("count representable"))),
    )
}

/// Counts of occupation vectors `(n_0, …, n_{k−1})`, `Σ n_i = N`, by
/// energy `Σ i·n_i`.
fn occupation_histogram(levels: usize, particles: usize) -> Vec<u128> {
    fn go(level: usize, levels: usize, left: usize, energy: usize, hist: &mut [u128]) {
        if level + 1 == levels {
            hist[energy + level * left] += 1;
            return;
        }
        for n in 0..=left {
            go(level + 1, levels, left - n, energy + level * n, hist);
        }
    }
    let mut hist = vec![0u128; particles * (levels - 1) + 1];
    go(0, levels, particles, 0, &mut hist);
    hist
}

/// Counts of excitation vectors `(m_1, …, m_N)`, `Σ m_j ≤ k−1`, by energy
/// `Σ j·m_j`.
fn excitation_histogram(levels: usize, particles: usize) -> Vec<u128> {
    fn go(j: usize, particles: usize, room: usize, energy: usize, hist: &mut [u128]) {
        if j > particles {
            hist[energy] += 1;
            return;
        }
        for m in 0..=room {
            go(j + 1, particles, room - m, energy + j * m, hist);
        }
    }
    let mut hist = vec![0u128; particles * (levels - 1) + 1];
    go(1, particles, levels - 1, 0, &mut hist);
    hist
}
