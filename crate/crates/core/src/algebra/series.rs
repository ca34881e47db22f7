//! Truncated power series in the length variable ζ.
//!
//! A series of order `L` carries the coefficients of ζ⁰..ζᴸ. Binary
//! operations truncate to the smaller order of their operands and never
//! look at coefficients beyond it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::laurent::{Exponent, Laurent, TouchExp};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone)]
pub struct LSeries<E: Exponent, C: Scalar> {
    order: usize,
    coeffs: Vec<Laurent<E, C>>,
}

/// Series with ϑ-Laurent coefficients.
pub type Series<C> = LSeries<i64, C>;

/// Series whose coefficients also carry the touchdown marker `t`.
pub type TouchSeries<C> = LSeries<TouchExp, C>;

impl<E: Exponent, C: Scalar> LSeries<E, C> {
    pub fn zero(order: usize) -> Self {
        LSeries {
            order,
            coeffs: vec![Laurent::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Laurent::one())
    }

    pub fn constant(order: usize, c: Laurent<E, C>) -> Self {
        Self::monomial(order, 0, c)
    }

    /// `c · ζ^l`, or zero when `l` exceeds the order.
    pub fn monomial(order: usize, l: usize, c: Laurent<E, C>) -> Self {
        let mut s = Self::zero(order);
        if l <= order {
            s.coeffs[l] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones are dropped.
    pub fn from_coeffs<I: IntoIterator<Item = Laurent<E, C>>>(order: usize, coeffs: I) -> Self {
        let mut s = Self::zero(order);
        for (l, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[l] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of ζ^l. Panics when `l` exceeds the order.
    pub fn coeff(&self, l: usize) -> &Laurent<E, C> {
        assert!(
            l <= self.order,
            "coefficient ζ^{l} beyond truncation order {}",
            self.order
        );
        &self.coeffs[l]
    }

    pub fn coeffs(&self) -> &[Laurent<E, C>] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, l: usize, c: Laurent<E, C>) {
        assert!(l <= self.order);
        self.coeffs[l] = c;
    }

    /// Same series at a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        LSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Laurent::is_zero)
    }

    pub fn map_coeffs<F: Fn(&Laurent<E, C>) -> Laurent<E, C>>(&self, f: F) -> Self {
        LSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Multiplies every coefficient by a ζ-independent polynomial.
    pub fn scale(&self, c: &Laurent<E, C>) -> Self {
        self.map_coeffs(|x| x * c)
    }

    /// Multiplies by `c · ζ^d`, keeping the order.
    pub fn mul_monomial(&self, d: usize, c: &Laurent<E, C>) -> Self {
        let mut out = Self::zero(self.order);
        for l in 0..=self.order {
            if l + d > self.order {
                break;
            }
            out.coeffs[l + d] = &self.coeffs[l] * c;
        }
        out
    }

    /// Divides by ζ^d; the order drops by `d`. Fails if a low coefficient
    /// is nonzero.
    pub fn shift_down(&self, d: usize) -> Result<Self> {
        if d > self.order || self.coeffs[..d].iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(LSeries {
            order: self.order - d,
            coeffs: self.coeffs[d..].to_vec(),
        })
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let p = &self.coeffs[i] * &rhs.coeffs[j];
                out.coeffs[i + j] += &p;
            }
        }
        out
    }

    fn unit_constant(&self) -> Option<C> {
        self.coeffs[0].as_unit_scalar()
    }

    /// `self / rhs` up to the smaller order. The constant term of `rhs` must
    /// be a nonzero scalar.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let inv = rhs.unit_constant().ok_or(Error::NonUnitConstantTerm)?;
        let inv = C::one() / inv;
        let order = self.order.min(rhs.order);
        let mut out: Vec<Laurent<E, C>> = Vec::with_capacity(order + 1);
        for l in 0..=order {
            let mut acc = self.coeffs[l].clone();
            for i in 1..=l {
                if rhs.coeffs[i].is_zero() || out[l - i].is_zero() {
                    continue;
                }
                acc = &acc - &(&rhs.coeffs[i] * &out[l - i]);
            }
            out.push(acc.scale(&inv));
        }
        Ok(LSeries { order, coeffs: out })
    }

    /// Formal logarithm; the constant term must be exactly 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm);
        }
        // l b_l = l a_l - sum_{i=1}^{l-1} i b_i a_{l-i}
        let mut out: Vec<Laurent<E, C>> = vec![Laurent::zero()];
        for l in 1..=self.order {
            let mut acc = self.coeffs[l].scale(&C::from_int(l as i64));
            for (i, b) in out.iter().enumerate().skip(1) {
                if b.is_zero() || self.coeffs[l - i].is_zero() {
                    continue;
                }
                let p = (b * &self.coeffs[l - i]).scale(&C::from_int(i as i64));
                acc = &acc - &p;
            }
            out.push(acc.scale(&C::recip_int(l as i64)));
        }
        Ok(LSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// Formal exponential; the constant term must be exactly 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm);
        }
        // l b_l = sum_{i=1}^{l} i a_i b_{l-i}
        let mut out: Vec<Laurent<E, C>> = vec![Laurent::one()];
        for l in 1..=self.order {
            let mut acc = Laurent::zero();
            for i in 1..=l {
                if self.coeffs[i].is_zero() || out[l - i].is_zero() {
                    continue;
                }
                let p = (&self.coeffs[i] * &out[l - i]).scale(&C::from_int(i as i64));
                acc += &p;
            }
            out.push(acc.scale(&C::recip_int(l as i64)));
        }
        Ok(LSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// The substitution ζ → ζϑ^j.
    pub fn substitute_scale(&self, j: i64) -> Self {
        LSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(l, c)| c.shift_area(j * l as i64))
                .collect(),
        }
    }

    /// The substitution ϑ → ϑ⁻¹.
    pub fn invert_q(&self) -> Self {
        self.map_coeffs(Laurent::invert_q)
    }

    /// First index (up to the common order) where the two series differ.
    pub fn first_difference(&self, rhs: &Self) -> Option<usize> {
        let order = self.order.min(rhs.order);
        (0..=order).find(|&l| self.coeffs[l] != rhs.coeffs[l])
    }
}

impl<E: Exponent, C: Scalar> PartialEq for LSeries<E, C> {
    /// Equality up to the smaller truncation order.
    fn eq(&self, rhs: &Self) -> bool {
        self.first_difference(rhs).is_none()
    }
}

impl<E: Exponent, C: Scalar> fmt::Debug for LSeries<E, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        for (l, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "ζ^{l}·({c:?})")?;
        }
        write!(f, " + O(ζ^{})]", self.order + 1)
    }
}

impl<E: Exponent, C: Scalar> Add<&LSeries<E, C>> for &LSeries<E, C> {
    type Output = LSeries<E, C>;

    fn add(self, rhs: &LSeries<E, C>) -> LSeries<E, C> {
        let order = self.order.min(rhs.order);
        LSeries {
            order,
            coeffs: (0..=order).map(|l| &self.coeffs[l] + &rhs.coeffs[l]).collect(),
        }
    }
}

impl<E: Exponent, C: Scalar> Sub<&LSeries<E, C>> for &LSeries<E, C> {
    type Output = LSeries<E, C>;

    fn sub(self, rhs: &LSeries<E, C>) -> LSeries<E, C> {
        let order = self.order.min(rhs.order);
        LSeries {
            order,
            coeffs: (0..=order).map(|l| &self.coeffs[l] - &rhs.coeffs[l]).collect(),
        }
    }
}

impl<E: Exponent, C: Scalar> Mul<&LSeries<E, C>> for &LSeries<E, C> {
    type Output = LSeries<E, C>;

    fn mul(self, rhs: &LSeries<E, C>) -> LSeries<E, C> {
        LSeries::mul(self, rhs)
    }
}

impl<E: Exponent, C: Scalar> Neg for &LSeries<E, C> {
    type Output = LSeries<E, C>;

    fn neg(self) -> LSeries<E, C> {
        self.map_coeffs(|c| -c)
    }
}

impl<C: Scalar> TouchSeries<C> {
    /// Embeds a plain series as the `t⁰` part.
    pub fn lift(s: &Series<C>) -> Self {
        LSeries {
            order: s.order,
            coeffs: s.coeffs.iter().map(Laurent::lift).collect(),
        }
    }

    /// Specializes `t` to a scalar value.
    pub fn eval_t(&self, t: &C) -> Series<C> {
        LSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.eval_t(t)).collect(),
        }
    }

    /// Exact division by `t`.
    pub fn div_t(&self) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(Laurent::div_t).collect::<Result<Vec<_>>>()?;
        Ok(LSeries {
            order: self.order,
            coeffs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::QLaurent;
    use num_rational::BigRational;

    type S = Series<BigRational>;
    type P = QLaurent<BigRational>;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Series from (l, area, coefficient) triples.
    fn ser(order: usize, terms: &[(usize, i64, i64)]) -> S {
        let mut s = S::zero(order);
        for &(l, a, c) in terms {
            let mut x = s.coeff(l).clone();
            x.add_term(a, r(c, 1));
            s.set_coeff(l, x);
        }
        s
    }

    #[test]
    fn difference_of_squares() {
        let a = ser(6, &[(0, 0, 1), (1, 0, 1)]);
        let b = ser(6, &[(0, 0, 1), (1, 0, -1)]);
        assert_eq!(a.mul(&b), ser(6, &[(0, 0, 1), (2, 0, -1)]));
        assert_eq!(a.mul(&S::one(6)), a);
    }

    #[test]
    fn geometric_series_inverse() {
        let geo = S::from_coeffs(8, (0..=8).map(|_| P::one()));
        let one_minus = ser(8, &[(0, 0, 1), (1, 0, -1)]);
        assert_eq!(geo.mul(&one_minus), S::one(8));
    }

    #[test]
    fn mul_truncates_to_min_order() {
        let a = ser(3, &[(0, 0, 1), (1, 0, 1)]);
        let b = ser(7, &[(0, 0, 1), (1, 0, 1)]);
        assert_eq!(a.mul(&b).order(), 3);
    }

    #[test]
    fn division_examples() {
        let one = S::one(8);
        let den = ser(8, &[(0, 0, 1), (2, 0, -1)]);
        let expect = ser(8, &[(0, 0, 1), (2, 0, 1), (4, 0, 1), (6, 0, 1), (8, 0, 1)]);
        assert_eq!(one.div(&den).unwrap(), expect);

        // G_2 as a ratio; coefficients counted by hand from k = 2 excursions.
        let num = ser(6, &[(0, 0, 1), (2, 2, -1)]);
        let den = ser(6, &[(0, 0, 1), (2, 0, -1), (2, 2, -1)]);
        let expect = ser(
            6,
            &[
                (0, 0, 1),
                (2, 0, 1),
                (4, 0, 1),
                (4, 2, 1),
                (6, 0, 1),
                (6, 2, 2),
                (6, 4, 1),
            ],
        );
        assert_eq!(num.div(&den).unwrap(), expect);
        assert_eq!(den.div(&den).unwrap(), S::one(6));
    }

    #[test]
    fn division_requires_unit_constant() {
        let bad = ser(4, &[(0, 1, 1)]);
        assert_eq!(S::one(4).div(&bad).unwrap_err(), Error::NonUnitConstantTerm);
        let bad = ser(4, &[(1, 0, 1)]);
        assert_eq!(S::one(4).div(&bad).unwrap_err(), Error::NonUnitConstantTerm);
        // A non-unit rational constant is fine.
        let two = ser(4, &[(0, 0, 2)]);
        assert_eq!(S::one(4).div(&two).unwrap().coeff(0), &P::constant(r(1, 2)));
    }

    #[test]
    fn log_and_exp_examples() {
        assert!(S::one(5).log().unwrap().is_zero());
        let e = ser(3, &[(1, 0, 1)]).exp().unwrap();
        let expect = S::from_coeffs(3, [r(1, 1), r(1, 1), r(1, 2), r(1, 6)].into_iter().map(P::constant));
        assert_eq!(e, expect);

        // log 1/(1 - ζ²) = Σ ζ^{2a}/a
        let g = S::one(10).div(&ser(10, &[(0, 0, 1), (2, 0, -1)])).unwrap();
        let lg = g.log().unwrap();
        for l in 0..=10 {
            let want = if l > 0 && l % 2 == 0 {
                P::constant(r(2, l as i64))
            } else {
                P::zero()
            };
            assert_eq!(lg.coeff(l), &want, "ζ^{l}");
        }
        assert_eq!(ser(3, &[(0, 0, 2)]).log().unwrap_err(), Error::BadConstantTerm);
        assert_eq!(S::one(3).exp().unwrap_err(), Error::BadConstantTerm);
    }

    #[test]
    fn substitution_examples() {
        let a = ser(4, &[(0, 0, 1), (2, 0, -1)]);
        assert_eq!(a.substitute_scale(1), ser(4, &[(0, 0, 1), (2, 2, -1)]));
        assert_eq!(a.substitute_scale(0), a);
        let f1 = ser(4, &[(0, 0, 1), (2, 0, -1)]);
        // F_1(ζϑ², ϑ) = 1 - ζ²ϑ⁴
        assert_eq!(f1.substitute_scale(2), ser(4, &[(0, 0, 1), (2, 4, -1)]));
    }

    #[test]
    fn shift_down_checks_low_terms() {
        let a = ser(5, &[(2, 1, 3), (4, 0, 1)]);
        let d = a.shift_down(2).unwrap();
        assert_eq!(d.order(), 3);
        assert_eq!(d, ser(3, &[(0, 1, 3), (2, 0, 1)]));
        assert!(a.shift_down(3).is_err());
    }
}
