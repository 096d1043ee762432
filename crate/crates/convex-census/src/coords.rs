//! Internal coordinate scaling.
//!
//! All predicates in this crate are sign tests of polynomials that are
//! homogeneous under a common positive scaling of all coordinates, and
//! lexicographic comparisons are preserved by it too. Multiplying every
//! coordinate by the least common multiple of the denominators therefore
//! changes no predicate outcome, but lets the hot loops run on integers
//! (machine `i128` when small enough, `BigInt` otherwise) instead of
//! normalizing rationals on every operation.

use crate::geometry::Point2;
use crate::Point;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

/// Visitor over a scaled coordinate set; implemented by callers that
/// want to run generic scalar code on the fastest exact representation.
pub(crate) trait CoordVisitor<R> {
    fn visit<T: crate::Scalar>(self, points: &[Point2<T>]) -> R;
}

/// Upper bound (in bits) on the common-denominator LCM beyond which
/// scaling would bloat the integers more than rational arithmetic costs.
const MAX_LCM_BITS: u64 = 512;

/// Coordinates whose absolute value stays below 2^62 after scaling are
/// safe for i128 cross products (products < 2^125, differences < 2^63).
const MAX_I128_BITS: u64 = 62;

/// Run `visitor` on the given points in the cheapest exact
/// representation that preserves every predicate of this crate.
pub(crate) fn with_scaled_coords<R>(points: &[Point], visitor: impl CoordVisitor<R>) -> R {
    let mut lcm = BigInt::one();
    for p in points {
        lcm = lcm.lcm(p.x.denom());
        lcm = lcm.lcm(p.y.denom());
        if lcm.bits() > MAX_LCM_BITS {
            return visitor.visit(points);
        }
    }

    let scaled: Vec<Point2<BigInt>> = points
        .iter()
        .map(|p| {
            Point2::new(
                p.x.numer() * (&lcm / p.x.denom()),
                p.y.numer() * (&lcm / p.y.denom()),
            )
        })
        .collect();

    let fits_i128 = scaled
        .iter()
        .all(|p| p.x.abs().bits() <= MAX_I128_BITS && p.y.abs().bits() <= MAX_I128_BITS);
    if fits_i128 {
        let small: Vec<Point2<i128>> = scaled
            .iter()
            .map(|p| Point2::new(p.x.to_i128().unwrap(), p.y.to_i128().unwrap()))
            .collect();
        visitor.visit(&small)
    } else {
        visitor.visit(&scaled)
    }
}

/// Convert rational points to `BigInt` points by the common-denominator
/// scaling, unconditionally. Used where the caller needs an owned
/// integer embedding rather than a visit (and accepts large integers).
#[allow(dead_code)]
pub(crate) fn scale_to_integers(points: &[Point]) -> Vec<Point2<BigInt>> {
    let mut lcm = BigInt::one();
    for p in points {
        lcm = lcm.lcm(p.x.denom());
        lcm = lcm.lcm(p.y.denom());
    }
    points
        .iter()
        .map(|p| {
            Point2::new(
                p.x.numer() * (&lcm / p.x.denom()),
                p.y.numer() * (&lcm / p.y.denom()),
            )
        })
        .collect()
}
