//! Sparse Laurent polynomials with exact coefficients.
//!
//! The exponent key is generic so the same container serves both the plain
//! area variable (`i64` exponents of ϑ) and the touchdown-marked ring
//! (a pair of a `t` exponent and an area exponent).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exponent of a monomial. Addition is the monomial product.
pub trait Exponent: Copy + Ord + fmt::Debug + Add<Output = Self> + Send + Sync + 'static {
    /// The exponent of the constant monomial.
    const ZERO: Self;

    /// The area (ϑ) component of the exponent.
    fn area(self) -> i64;

    /// Exponent with the area component replaced.
    fn with_area(self, area: i64) -> Self;

    /// An exponent carrying only an area component.
    fn from_area(area: i64) -> Self {
        Self::ZERO.with_area(area)
    }
}

impl Exponent for i64 {
    const ZERO: Self = 0;

    fn area(self) -> i64 {
        self
    }

    fn with_area(self, area: i64) -> Self {
        area
    }
}

/// Exponent pair `t^touch ϑ^area` for touchdown-marked polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TouchExp {
    pub touch: u32,
    pub area: i64,
}

impl TouchExp {
    pub const fn new(touch: u32, area: i64) -> Self {
        TouchExp { touch, area }
    }
}

impl Add for TouchExp {
    type Output = TouchExp;

    fn add(self, rhs: TouchExp) -> TouchExp {
        TouchExp::new(self.touch + rhs.touch, self.area + rhs.area)
    }
}

impl Exponent for TouchExp {
    const ZERO: Self = TouchExp { touch: 0, area: 0 };

    fn area(self) -> i64 {
        self.area
    }

    fn with_area(self, area: i64) -> Self {
        TouchExp::new(self.touch, area)
    }
}

/// A finite sum of monomials with coefficients in `C`. Never stores zeros.
#[derive(Clone, PartialEq)]
pub struct Laurent<E: Exponent, C: Scalar> {
    terms: BTreeMap<E, C>,
}

/// Laurent polynomial in the area variable ϑ.
pub type QLaurent<C> = Laurent<i64, C>;

/// Polynomial in the touchdown marker `t` with Laurent coefficients in ϑ.
pub type TouchLaurent<C> = Laurent<TouchExp, C>;

impl<E: Exponent, C: Scalar> Laurent<E, C> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(E::ZERO, c)
    }

    pub fn monomial(exp: E, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (E, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&E::ZERO).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial with exponent `e` (zero if absent).
    pub fn coeff(&self, e: E) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (E, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, e: E, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                *slot = slot.clone() + c;
                if slot.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// The scalar value when this is a nonzero constant.
    pub fn as_unit_scalar(&self) -> Option<C> {
        if self.terms.len() == 1 {
            self.terms.get(&E::ZERO).cloned()
        } else {
            None
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c.clone() * s.clone())).collect(),
        }
    }

    /// Multiplies by ϑ^d.
    pub fn shift_area(&self, d: i64) -> Self {
        if d == 0 {
            return self.clone();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.with_area(e.area() + d), c.clone()))
                .collect(),
        }
    }

    /// The substitution ϑ → ϑ⁻¹.
    pub fn invert_q(&self) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.with_area(-e.area()), c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every exponent, summing terms that collide.
    pub fn map_exponents<F: Fn(E) -> E>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (f(*e), c.clone())))
    }

    /// Smallest and largest area exponents present.
    pub fn area_range(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|e| e.area());
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), a| (lo.min(a), hi.max(a))))
    }

    pub fn max_area(&self) -> Option<i64> {
        self.area_range().map(|(_, hi)| hi)
    }
}

impl<C: Scalar> QLaurent<C> {
    /// ϑ^e.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(e, C::one())
    }

    /// Degree in ϑ, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Exact division by `1 - ϑ^j` (`j > 0`) of a polynomial with
    /// non-negative exponents.
    pub fn div_one_minus_q_pow(&self, j: i64) -> Result<Self> {
        assert!(j > 0);
        let Some(lo) = self.low_degree() else {
            return Ok(Self::zero());
        };
        if lo < 0 {
            return Err(Error::InexactDivision);
        }
        let hi = self.degree().unwrap_or(0);
        // c_i = a_i + c_{i-j}; the quotient has degree hi - j.
        let top = hi - j;
        if top < 0 {
            return Err(Error::InexactDivision);
        }
        let mut quot: Vec<C> = Vec::with_capacity((top + 1) as usize);
        for i in 0..=top {
            let mut c = self.coeff(i);
            if i >= j {
                c = c + quot[(i - j) as usize].clone();
            }
            quot.push(c);
        }
        // Remainder check: a_i + c_{i-j} must vanish above the quotient degree.
        for i in (top + 1)..=hi {
            let mut r = self.coeff(i);
            if i >= j && i - j <= top {
                r = r + quot[(i - j) as usize].clone();
            }
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
        }
        Ok(Self::from_terms(
            quot.into_iter().enumerate().map(|(i, c)| (i as i64, c)),
        ))
    }

    /// Exact polynomial long division. Both operands must have non-negative
    /// exponents; fails with [`Error::InexactDivision`] on a nonzero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (Some(dlo), Some(dhi)) = (divisor.low_degree(), divisor.degree()) else {
            return Err(Error::InexactDivision);
        };
        if dlo < 0 || self.low_degree().is_some_and(|e| e < 0) {
            return Err(Error::InexactDivision);
        }
        let lead = divisor.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dhi {
                return Err(Error::InexactDivision);
            }
            let c = rem.coeff(rd) / lead.clone();
            let shift = rd - dhi;
            quot.add_term(shift, c.clone());
            for (e, dc) in divisor.terms() {
                rem.add_term(e + shift, -(dc.clone() * c.clone()));
            }
        }
        Ok(quot)
    }
}

impl<C: Scalar> TouchLaurent<C> {
    /// t^s ϑ^a.
    pub fn touch_monomial(touch: u32, area: i64, c: C) -> Self {
        Self::monomial(TouchExp::new(touch, area), c)
    }

    /// Embeds a ϑ-polynomial as the `t⁰` part.
    pub fn lift(p: &QLaurent<C>) -> Self {
        Self::from_terms(p.terms().map(|(a, c)| (TouchExp::new(0, a), c.clone())))
    }

    /// Specializes `t` to a scalar value.
    pub fn eval_t(&self, t: &C) -> QLaurent<C> {
        let mut out = QLaurent::zero();
        for (e, c) in self.terms() {
            let mut w = c.clone();
            for _ in 0..e.touch {
                w = w * t.clone();
            }
            out.add_term(e.area, w);
        }
        out
    }

    /// Exact division by `t`; fails if a `t⁰` term is present.
    pub fn div_t(&self) -> Result<Self> {
        if self.terms().any(|(e, _)| e.touch == 0) {
            return Err(Error::InexactDivision);
        }
        Ok(Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (TouchExp::new(e.touch - 1, e.area), c.clone()))
                .collect(),
        })
    }

    /// The coefficient of `t^s`, as a ϑ-polynomial.
    pub fn touch_part(&self, s: u32) -> QLaurent<C> {
        QLaurent::from_terms(
            self.terms()
                .filter(|(e, _)| e.touch == s)
                .map(|(e, c)| (e.area, c.clone())),
        )
    }
}

impl<E: Exponent, C: Scalar> Default for Laurent<E, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<E: Exponent, C: Scalar> fmt::Debug for Laurent<E, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c:?}*{e:?}")?;
        }
        Ok(())
    }
}

impl<E: Exponent, C: Scalar> fmt::Display for Laurent<E, C>
where
    C: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·{e:?}")?;
        }
        Ok(())
    }
}

impl<E: Exponent, C: Scalar> Add<&Laurent<E, C>> for &Laurent<E, C> {
    type Output = Laurent<E, C>;

    fn add(self, rhs: &Laurent<E, C>) -> Laurent<E, C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<E: Exponent, C: Scalar> AddAssign<&Laurent<E, C>> for Laurent<E, C> {
    fn add_assign(&mut self, rhs: &Laurent<E, C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<E: Exponent, C: Scalar> Sub<&Laurent<E, C>> for &Laurent<E, C> {
    type Output = Laurent<E, C>;

    fn sub(self, rhs: &Laurent<E, C>) -> Laurent<E, C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<E: Exponent, C: Scalar> Neg for &Laurent<E, C> {
    type Output = Laurent<E, C>;

    fn neg(self) -> Laurent<E, C> {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<E: Exponent, C: Scalar> Mul<&Laurent<E, C>> for &Laurent<E, C> {
    type Output = Laurent<E, C>;

    fn mul(self, rhs: &Laurent<E, C>) -> Laurent<E, C> {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut acc: BTreeMap<E, C> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let p = ca.clone() * cb.clone();
                let slot = acc.entry(*ea + *eb).or_insert_with(C::zero);
                *slot = slot.clone() + p;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Laurent { terms: acc }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<E: Exponent, C: Scalar> $tr<Laurent<E, C>> for Laurent<E, C> {
            type Output = Laurent<E, C>;

            fn $m(self, rhs: Laurent<E, C>) -> Laurent<E, C> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<E: Exponent, C: Scalar> Zero for Laurent<E, C> {
    fn zero() -> Self {
        Laurent::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<E: Exponent, C: Scalar> One for Laurent<E, C> {
    fn one() -> Self {
        Laurent::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = QLaurent<BigRational>;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn poly(cs: &[(i64, i64)]) -> P {
        P::from_terms(cs.iter().map(|&(e, c)| (e, r(c))))
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = poly(&[(0, 1), (1, 2)]);
        let q = poly(&[(1, -2)]);
        let s = &p + &q;
        assert_eq!(s, P::one());
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn invert_q_negates_exponents() {
        assert_eq!(P::q_pow(2).invert_q(), P::q_pow(-2));
        let p = poly(&[(0, 1), (1, 1)]);
        assert_eq!(p.invert_q(), poly(&[(0, 1), (-1, 1)]));
        assert_eq!(p.invert_q().invert_q(), p);
    }

    #[test]
    fn division_by_one_minus_power() {
        // (1 - q^3)(1 + q^2) / (1 - q^3)
        let p = &poly(&[(0, 1), (3, -1)]) * &poly(&[(0, 1), (2, 1)]);
        assert_eq!(p.div_one_minus_q_pow(3).unwrap(), poly(&[(0, 1), (2, 1)]));
        assert!(poly(&[(0, 1), (1, 1)]).div_one_minus_q_pow(1).is_err());
        // 1 - q^4 = (1 - q^2)(1 + q^2)
        assert_eq!(
            poly(&[(0, 1), (4, -1)]).div_one_minus_q_pow(2).unwrap(),
            poly(&[(0, 1), (2, 1)])
        );
    }

    #[test]
    fn long_division() {
        let a = poly(&[(0, 1), (1, 1), (2, 1)]);
        let b = poly(&[(0, 2), (1, -1), (3, 5)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!(poly(&[(0, 1), (2, 1)]).div_exact(&poly(&[(0, 1), (1, 1)])).is_err());
    }

    #[test]
    fn touch_eval_and_div() {
        type T = TouchLaurent<BigRational>;
        let p = &T::touch_monomial(1, 0, r(1)) + &T::touch_monomial(2, 3, r(2));
        assert_eq!(p.eval_t(&r(1)), poly(&[(0, 1), (3, 2)]));
        assert_eq!(
            p.div_t().unwrap(),
            &T::touch_monomial(0, 0, r(1)) + &T::touch_monomial(1, 3, r(2))
        );
        assert!(T::one().div_t().is_err());
        assert_eq!(p.touch_part(2), poly(&[(3, 2)]));
    }
}
