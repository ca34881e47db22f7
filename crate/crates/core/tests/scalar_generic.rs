//! The same computations over fixed-width rationals and `f64`.

use dyckgen::genfun::{genfun, GenSpec};
use dyckgen::spectral::{grand_partition_exclusion, secular_det_recursive};
use dyckgen::{Rat, Scalar, Series};
use num_rational::Ratio;
use num_traits::ToPrimitive;

fn as_f64(s: &Series<Rat>) -> Vec<Vec<(i64, f64)>> {
    s.coeffs()
        .iter()
        .map(|c| c.terms().map(|(a, x)| (a, x.to_f64().unwrap())).collect())
        .collect()
}

fn plain<C: Scalar>(s: &Series<C>, conv: impl Fn(&C) -> f64) -> Vec<Vec<(i64, f64)>> {
    s.coeffs()
        .iter()
        .map(|c| c.terms().map(|(a, x)| (a, conv(x))).collect())
        .collect()
}

#[test]
fn fixed_width_rationals_agree_with_big_rationals() {
    for (k, m, n) in [(3, 0, 0), (4, 1, 2), (5, 2, 4)] {
        let spec = GenSpec::finite(k, m, n, 12);
        let big = genfun::<Rat>(&spec).unwrap().series;
        let small = genfun::<Ratio<i64>>(&spec).unwrap().series;
        let wide = genfun::<Ratio<i128>>(&spec).unwrap().series;
        let want = as_f64(&big);
        assert_eq!(plain(&small, |x| x.to_f64().unwrap()), want);
        assert_eq!(plain(&wide, |x| x.to_f64().unwrap()), want);
    }
}

#[test]
fn floating_point_counts_are_exact_at_small_size() {
    let spec = GenSpec::finite(4, 1, 2, 13);
    let big = genfun::<Rat>(&spec).unwrap().series;
    let float = genfun::<f64>(&spec).unwrap().series;
    assert_eq!(plain(&float, |x| *x), as_f64(&big));
    assert_eq!(
        plain(&secular_det_recursive::<f64>(6, 10).unwrap(), |x| *x),
        plain(&grand_partition_exclusion::<f64>(6, 10), |x| *x)
    );
}
