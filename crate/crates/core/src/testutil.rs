use num_traits::Zero;
use proptest::prelude::*;

use crate::bary::{BaryPoint, Triangle};
use crate::catalog::WeightTriple;
use crate::scalar::{exact, Exact};

fn rational(max: i64) -> impl Strategy<Value = Exact> {
    (1i64..=4).prop_flat_map(move |d| (-max * d..=max * d).prop_map(move |n| exact(n, d)))
}

/// Rational sides with denominators up to 4 and values up to 20.
pub fn arb_triangle() -> impl Strategy<Value = Triangle<Exact>> {
    let side = (1i64..=4).prop_flat_map(|d| (1i64..=20 * d).prop_map(move |n| exact(n, d)));
    (side.clone(), side.clone(), side).prop_filter_map("triangle inequality", |(a, b, c)| Triangle::new(a, b, c).ok())
}

/// Points with positive masses, so they stay near the triangle.
pub fn arb_point() -> impl Strategy<Value = BaryPoint<Exact>> {
    (1i64..30, 1i64..30, 1i64..30, 1i64..=3)
        .prop_map(|(u, v, w, d)| BaryPoint::new([exact(u, d), exact(v, 1), exact(w, 2)]).unwrap())
}

/// Mixed-sign weights in [−10, 10].
pub fn arb_weights() -> impl Strategy<Value = WeightTriple<Exact>> {
    (rational(10), rational(10), rational(10))
        .prop_filter("not all zero", |(x, y, z)| !(x.is_zero() && y.is_zero() && z.is_zero()))
        .prop_map(|(x, y, z)| WeightTriple::new(x, y, z))
}
