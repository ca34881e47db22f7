//! Secular matrices and a division-free determinant.

use std::collections::BTreeMap;

use crate::algebra::{Exponent, LSeries, QLaurent, Series};
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::scalar::Scalar;

/// Largest matrix dimension the column bitmask can address.
const MAX_DIM: usize = 128;

/// Determinant by row-wise minor expansion, memoized on the set of
/// columns already used. Only ring operations are involved, and zero
/// entries are skipped, so banded matrices cost O(n · band²) products.
pub fn determinant<E: Exponent, C: Scalar>(rows: &[Vec<LSeries<E, C>>], order: usize) -> LSeries<E, C> {
    let n = rows.len();
    assert!(n <= MAX_DIM, "matrix dimension {n} exceeds {MAX_DIM}");
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let mut layer: BTreeMap<u128, LSeries<E, C>> = BTreeMap::new();
    layer.insert(0, LSeries::one(order));
    for row in rows {
        let mut next: BTreeMap<u128, LSeries<E, C>> = BTreeMap::new();
        for (mask, acc) in &layer {
            for (c, entry) in row.iter().enumerate() {
                let bit = 1u128 << c;
                if mask & bit != 0 || entry.is_zero() {
                    continue;
                }
                let higher = if c + 1 >= 128 {
                    0
                } else {
                    (mask >> (c + 1)).count_ones()
                };
                let mut term = acc.mul(entry);
                if higher % 2 == 1 {
                    term = -&term;
                }
                match next.get_mut(&(mask | bit)) {
                    Some(slot) => *slot = &*slot + &term,
                    None => {
                        next.insert(mask | bit, term);
                    }
                }
            }
        }
        layer = next;
    }
    layer.into_values().next().unwrap_or_else(|| LSeries::zero(order))
}

/// `D_k = 1 − ζH_k`: unit diagonal, `−ζϑ^j` joining heights `j` and `j+1`.
#[derive(Clone, Debug)]
pub struct SecularMatrix<C: Scalar> {
    k: usize,
    entries: Vec<Vec<Series<C>>>,
}

impl<C: Scalar> SecularMatrix<C> {
    pub fn new(k: usize, order: usize) -> Self {
        let dim = k + 1;
        let mut entries = vec![vec![Series::zero(order); dim]; dim];
        for (j, row) in entries.iter_mut().enumerate() {
            row[j] = Series::one(order);
        }
        for j in 0..k {
            let hop = Series::monomial(order, 1, QLaurent::monomial(j as i64, -C::one()));
            entries[j][j + 1] = hop.clone();
            entries[j + 1][j] = hop;
        }
        SecularMatrix { k, entries }
    }

    /// The similar matrix in `z = ζ²`, `q = ϑ²`: unit diagonal, `−1` above
    /// it and `−z q^j` below it at row `j+1`.
    pub fn down_step(k: usize, order: usize) -> Self {
        let dim = k + 1;
        let mut entries = vec![vec![Series::zero(order); dim]; dim];
        for (j, row) in entries.iter_mut().enumerate() {
            row[j] = Series::one(order);
        }
        for j in 0..k {
            entries[j][j + 1] = Series::constant(order, QLaurent::constant(-C::one()));
            entries[j + 1][j] = Series::monomial(order, 2, QLaurent::monomial(2 * j as i64, -C::one()));
        }
        SecularMatrix { k, entries }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entry(&self, i: usize, j: usize) -> &Series<C> {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Series<C>>] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.k + 1;
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn is_tridiagonal(&self) -> bool {
        let n = self.k + 1;
        (0..n).all(|i| (0..n).all(|j| i.abs_diff(j) <= 1 || self.entries[i][j].is_zero()))
    }

    pub fn determinant(&self) -> Series<C> {
        let order = self.entries.first().map_or(0, |r| r[0].order());
        determinant(&self.entries, order)
    }
}

/// The ζ-degree bound of `F_k`; a truncation this large is exact.
pub(crate) fn exact_order(k: usize) -> usize {
    k + 1
}

pub(crate) fn check_direct_guard(k: usize, guards: &Guards) -> Result<()> {
    let max = guards.direct_det_max_k.min(MAX_DIM - 1);
    if k > max {
        return Err(Error::HeightTooLarge { k, max });
    }
    Ok(())
}

/// `F_k = det D_k` evaluated directly, exact (order `k+1`).
pub fn secular_det_direct<C: Scalar>(k: usize, guards: &Guards) -> Result<Series<C>> {
    check_direct_guard(k, guards)?;
    Ok(SecularMatrix::new(k, exact_order(k)).determinant())
}

/// `F_k` as the determinant of the down-step matrix, exact (order `k+1`).
pub fn secular_det_tilde<C: Scalar>(k: usize, guards: &Guards) -> Result<Series<C>> {
    check_direct_guard(k, guards)?;
    Ok(SecularMatrix::down_step(k, exact_order(k)).determinant())
}

/// Scalar-matrix determinant helper used by tests of [`determinant`].
#[cfg(test)]
pub(crate) fn constant_matrix<C: Scalar>(vals: &[&[i64]], order: usize) -> Vec<Vec<Series<C>>> {
    vals.iter()
        .map(|row| {
            row.iter()
                .map(|&v| Series::constant(order, QLaurent::constant(C::from_int(v))))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type R = BigRational;

    #[test]
    fn constant_determinants() {
        let m = constant_matrix::<R>(&[&[2, 1, 0], &[1, 3, 4], &[5, 0, 6]], 0);
        // 2(18) - 1(6 - 20) + 0 = 50
        assert_eq!(
            determinant(&m, 0).coeff(0),
            &QLaurent::constant(R::from_integer(50.into()))
        );
        let p = constant_matrix::<R>(&[&[0, 1], &[1, 0]], 0);
        assert_eq!(
            determinant(&p, 0).coeff(0),
            &QLaurent::constant(R::from_integer((-1).into()))
        );
        let sing = constant_matrix::<R>(&[&[1, 2], &[2, 4]], 0);
        assert!(determinant(&sing, 0).is_zero());
    }

    #[test]
    fn secular_matrix_shape() {
        let d = SecularMatrix::<R>::new(4, 5);
        assert!(d.is_symmetric());
        assert!(d.is_tridiagonal());
        assert_eq!(
            d.entry(2, 3),
            &Series::monomial(5, 1, QLaurent::monomial(2, -R::from_integer(1.into())))
        );
        assert!(SecularMatrix::<R>::down_step(3, 4).is_tridiagonal());
        assert!(!SecularMatrix::<R>::down_step(3, 4).is_symmetric());
    }

    #[test]
    fn guard_rejects_large_heights() {
        let g = Guards {
            direct_det_max_k: 3,
            ..Guards::default()
        };
        assert_eq!(
            secular_det_direct::<R>(4, &g).unwrap_err(),
            Error::HeightTooLarge { k: 4, max: 3 }
        );
        assert!(secular_det_tilde::<R>(3, &g).is_ok());
    }
}
