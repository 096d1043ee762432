//! Exact machinery for counting convex polygons in planar straight-line
//! graphs, together with the extremal recurrences and certified numeric
//! inequalities that bound how many such polygons a graph can contain.
//!
//! Everything is computed over exact arithmetic: geometric predicates use
//! rational (or integer) coordinates with no floating point anywhere,
//! counts are arbitrary-precision integers, and the inequality
//! certification uses exact integer-power comparisons plus rational
//! interval arithmetic.
//!
//! The crate is organized around a handful of modules:
//!
//! - [`geometry`] — orientation/order predicates generic over an exact
//!   scalar, convex-position and convex-cycle tests,
//! - [`pslg`] — the planar straight-line graph container, its validator,
//!   triangulation/face machinery, and JSON (de)serialization,
//! - [`counting`] — the O(n⁴) dynamic program that counts and enumerates
//!   convex polygons, and the convex-chain counter between two vertices,
//! - [`oracle`] — small brute-force reference counters used as ground
//!   truth in tests,
//! - [`recurrences`] — big-integer tables for the extremal sequences
//!   P(n), C_x(n), λ_k, α_k,
//! - [`certify`] — rational interval arithmetic and exact certificates
//!   for the numeric inequality facts,
//! - [`constructions`] — extremal lower-bound constructions (parabola
//!   arcs, balanced triangulations, concatenations, convexification),
//! - [`maxsearch`] — exhaustive maximization over all triangulations of
//!   a convex polygon.

pub mod certify;
pub mod constructions;
mod coords;
pub mod counting;
pub mod geometry;
pub mod maxsearch;
pub mod oracle;
pub mod pslg;
pub mod recurrences;
mod scalar;

pub use scalar::Scalar;

/// Exact rational scalar used by all public geometry interfaces.
pub type Rat = num_rational::BigRational;

/// Arbitrary-precision unsigned count.
pub type BigCount = num_bigint::BigUint;

/// 2D point with exact rational coordinates.
pub type Point = geometry::Point2<Rat>;

/// Convenience constructor for a rational point from integer coordinates.
pub fn point_i64(x: i64, y: i64) -> Point {
    use num_bigint::BigInt;
    geometry::Point2::new(
        Rat::from_integer(BigInt::from(x)),
        Rat::from_integer(BigInt::from(y)),
    )
}
