//! Brute-force path counting, the ground truth for every identity.
//!
//! A forward dynamic program walks all paths of unit up/down steps between
//! the floor 0 and the ceiling `k`, tracking the height, the accumulated
//! area and the number of touchdowns. An up-step from height `j` adds `j`
//! plaquettes of area; a down-step from `j` adds `j − 1`. A touchdown is a
//! down-step landing on height 0; the starting point never counts.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Laurent, QLaurent, Series, TouchExp, TouchSeries};
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::scalar::Scalar;

/// Exact path counts `N_{k,mn;l,A,s}` keyed by `(l, A, s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathTable {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub max_len: usize,
    counts: BTreeMap<(usize, i64, u32), BigUint>,
}

impl PathTable {
    /// An empty table for the given parameters.
    pub fn new(k: usize, m: usize, n: usize, max_len: usize) -> Self {
        PathTable {
            k,
            m,
            n,
            max_len,
            counts: BTreeMap::new(),
        }
    }

    /// Adds `count` paths at `(l, A, s)`; zero counts are not stored.
    pub fn insert(&mut self, l: usize, area: i64, touch: u32, count: BigUint) {
        if count.is_zero() {
            return;
        }
        *self.counts.entry((l, area, touch)).or_default() += count;
    }

    pub fn count(&self, l: usize, area: i64, touch: u32) -> BigUint {
        self.counts.get(&(l, area, touch)).cloned().unwrap_or_default()
    }

    /// `N_{k,mn;l,A}`, summed over touchdowns.
    pub fn count_any_touch(&self, l: usize, area: i64) -> BigUint {
        self.counts
            .range((l, area, 0)..=(l, area, u32::MAX))
            .map(|(_, c)| c)
            .sum()
    }

    /// Number of paths of length `l`, any area.
    pub fn total(&self, l: usize) -> BigUint {
        self.counts
            .range((l, i64::MIN, 0)..=(l, i64::MAX, u32::MAX))
            .map(|(_, c)| c)
            .sum()
    }

    /// Rows `(l, A, s, count)` in ascending order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, i64, u32, &BigUint)> + '_ {
        self.counts.iter().map(|(&(l, a, s), c)| (l, a, s, c))
    }

    /// Rows summed over touchdowns: `(l, A, count)`.
    pub fn rows_any_touch(&self) -> Vec<(usize, i64, BigUint)> {
        let mut agg: BTreeMap<(usize, i64), BigUint> = BTreeMap::new();
        for (&(l, a, _), c) in &self.counts {
            *agg.entry((l, a)).or_default() += c;
        }
        agg.into_iter().map(|((l, a), c)| (l, a, c)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Largest area among paths of length `l`.
    pub fn max_area_at(&self, l: usize) -> Option<i64> {
        self.counts.keys().filter(|key| key.0 == l).map(|key| key.1).max()
    }
}

fn check_heights(k: usize, m: usize, n: usize) -> Result<()> {
    if m > k || n > k {
        return Err(Error::SpecOutOfRange { k, m, n });
    }
    Ok(())
}

/// Counts every path from `m` to `n` under ceiling `k` with at most
/// `max_len` steps.
pub fn enumerate(k: usize, m: usize, n: usize, max_len: usize, guards: &Guards) -> Result<PathTable> {
    check_heights(k, m, n)?;
    if max_len > guards.oracle_len_max {
        return Err(Error::GuardExceeded {
            what: "path length",
            value: max_len,
            max: guards.oracle_len_max,
        });
    }
    let mut table = PathTable::new(k, m, n, max_len);
    let mut layer: BTreeMap<(usize, i64, u32), BigUint> = BTreeMap::new();
    layer.insert((m, 0, 0), BigUint::one());
    for l in 0..=max_len {
        for (&(j, a, s), c) in &layer {
            if j == n {
                table.insert(l, a, s, c.clone());
            }
        }
        if l == max_len {
            break;
        }
        let mut next: BTreeMap<(usize, i64, u32), BigUint> = BTreeMap::new();
        for ((j, a, s), c) in layer {
            if j < k {
                *next.entry((j + 1, a + j as i64, s)).or_default() += &c;
            }
            if j > 0 {
                let touch = s + u32::from(j == 1);
                *next.entry((j - 1, a + j as i64 - 1, touch)).or_default() += c;
            }
        }
        layer = next;
    }
    Ok(table)
}

/// Maximal area over all paths of exactly `len` steps from `m` to `n`.
pub fn max_area(k: usize, m: usize, n: usize, len: usize) -> Result<i64> {
    check_heights(k, m, n)?;
    let mut best: Vec<Option<i64>> = vec![None; k + 1];
    best[m] = Some(0);
    for _ in 0..len {
        let mut next: Vec<Option<i64>> = vec![None; k + 1];
        for (j, b) in best.iter().enumerate() {
            let Some(b) = *b else { continue };
            if j < k {
                let v = b + j as i64;
                next[j + 1] = Some(next[j + 1].map_or(v, |x| x.max(v)));
            }
            if j > 0 {
                let v = b + j as i64 - 1;
                next[j - 1] = Some(next[j - 1].map_or(v, |x| x.max(v)));
            }
        }
        best = next;
    }
    best[n].ok_or(Error::Unreachable { k, m, n, l: len })
}

fn to_scalar<C: Scalar>(c: &BigUint) -> C {
    C::from_rational(&BigRational::from_integer(BigInt::from(c.clone())))
}

/// The counts packaged as `Σ N ζ^l ϑ^A` (touchdowns summed), at order
/// `max_len`.
pub fn genfun_from_table<C: Scalar>(table: &PathTable) -> Series<C> {
    let mut coeffs: Vec<QLaurent<C>> = vec![QLaurent::zero(); table.max_len + 1];
    for (l, a, _, c) in table.rows() {
        coeffs[l].add_term(a, to_scalar(c));
    }
    Series::from_coeffs(table.max_len, coeffs)
}

/// The counts packaged as `Σ N t^s ζ^l ϑ^A`, at order `max_len`.
pub fn touch_series_from_table<C: Scalar>(table: &PathTable) -> TouchSeries<C> {
    let mut coeffs: Vec<Laurent<TouchExp, C>> = vec![Laurent::zero(); table.max_len + 1];
    for (l, a, s, c) in table.rows() {
        coeffs[l].add_term(TouchExp::new(s, a), to_scalar(c));
    }
    TouchSeries::from_coeffs(table.max_len, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn four_step_excursions() {
        let t = enumerate(3, 0, 0, 4, &Guards::default()).unwrap();
        assert_eq!(t.count_any_touch(4, 0), big(1));
        assert_eq!(t.count_any_touch(4, 2), big(1));
        assert_eq!(t.total(4), big(2));
        // UDUD touches down twice, UUDD once
        assert_eq!(t.count(4, 0, 2), big(1));
        assert_eq!(t.count(4, 2, 1), big(1));
    }

    #[test]
    fn empty_path() {
        let t = enumerate(3, 1, 1, 0, &Guards::default()).unwrap();
        assert_eq!(t.rows().count(), 1);
        assert_eq!(t.count(0, 0, 0), big(1));
        assert!(enumerate(3, 0, 1, 0, &Guards::default()).unwrap().is_empty());
    }

    #[test]
    fn long_meander_with_one_touchdown() {
        let t = enumerate(4, 1, 2, 13, &Guards::default()).unwrap();
        assert!(t.count(13, 21, 1) >= big(1));
    }

    #[test]
    fn max_area_values() {
        assert_eq!(max_area(4, 1, 2, 13).unwrap(), 35);
        for a in 0..8usize {
            let roof = (a * a.saturating_sub(1)) as i64;
            assert_eq!(max_area(2 * a + 1, 0, 0, 2 * a).unwrap(), roof);
            assert_eq!(max_area(1, 0, 0, 2 * a).unwrap(), 0);
        }
        assert_eq!(
            max_area(3, 0, 1, 4).unwrap_err(),
            Error::Unreachable { k: 3, m: 0, n: 1, l: 4 }
        );
        assert_eq!(
            max_area(2, 0, 2, 1).unwrap_err(),
            Error::Unreachable { k: 2, m: 0, n: 2, l: 1 }
        );
    }

    #[test]
    fn out_of_range_and_guard() {
        let g = Guards::default();
        assert_eq!(
            enumerate(2, 3, 0, 4, &g).unwrap_err(),
            Error::SpecOutOfRange { k: 2, m: 3, n: 0 }
        );
        assert!(matches!(enumerate(2, 0, 0, 25, &g), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn table_k2_rows() {
        let t = enumerate(2, 0, 0, 4, &Guards::default()).unwrap();
        let rows: Vec<_> = t.rows().map(|(l, a, s, c)| (l, a, s, c.clone())).collect();
        assert_eq!(
            rows,
            vec![
                (0, 0, 0, big(1)),
                (2, 0, 1, big(1)),
                (4, 0, 2, big(1)),
                (4, 2, 1, big(1))
            ]
        );
    }

    #[test]
    fn catalan_column_sums() {
        let t = enumerate(10, 0, 0, 10, &Guards::default()).unwrap();
        let got: Vec<BigUint> = (0..=5).map(|a| t.total(2 * a)).collect();
        let want: Vec<BigUint> = [1u64, 1, 2, 5, 14, 42].into_iter().map(big).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn start_end_swap_preserves_counts() {
        let g = Guards::default();
        for k in 1..=4 {
            for m in 0..=k {
                for n in 0..=k {
                    let a = enumerate(k, m, n, 10, &g).unwrap();
                    let b = enumerate(k, n, m, 10, &g).unwrap();
                    assert_eq!(a.rows_any_touch(), b.rows_any_touch(), "k={k} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn packaging_k1_zigzag() {
        use num_rational::BigRational;
        let t = enumerate(1, 0, 0, 6, &Guards::default()).unwrap();
        let s = touch_series_from_table::<BigRational>(&t);
        for a in 0..=3u32 {
            let want = Laurent::monomial(TouchExp::new(a, 0), BigRational::one());
            assert_eq!(s.coeff(2 * a as usize), &want);
        }
        assert!(s.coeff(1).is_zero());
    }
}
