//! Exact geometric predicates over an arbitrary exact scalar.
//!
//! Every test in this module is a polynomial sign evaluation — there is
//! no floating point, no epsilon, and no adaptive fallback. Degeneracies
//! (collinear triples, duplicate points) are reported, never "resolved".
//!
//! Lexicographic order on coordinates (x first, then y) is used as the
//! deterministic substitute for an infinitesimal clockwise rotation of
//! the plane: it totally orders distinct points, and every point
//! lexicographically greater than `p` lies in the closed right
//! half-plane of the vertical line through `p`.

use crate::scalar::Scalar;
use std::cmp::Ordering;

/// Orientation of an ordered point triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Counterclockwise (left turn).
    Ccw,
    /// Clockwise (right turn).
    Cw,
    /// All three points on one line.
    Collinear,
}

impl Orientation {
    /// The orientation obtained by reversing the traversal direction.
    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Immutable 2D point over an exact scalar.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Point2 { x, y }
    }
}

/// Sign of the cross product `(q - p) × (r - p)`.
///
/// Positive means `r` lies to the left of the directed line `p → q`.
pub fn orientation<T: Scalar>(p: &Point2<T>, q: &Point2<T>, r: &Point2<T>) -> Orientation {
    let qx = q.x.ref_sub(&p.x);
    let qy = q.y.ref_sub(&p.y);
    let rx = r.x.ref_sub(&p.x);
    let ry = r.y.ref_sub(&p.y);
    let cross = qx.ref_mul(&ry).ref_sub(&qy.ref_mul(&rx));
    match cross.cmp(&T::zero()) {
        Ordering::Greater => Orientation::Ccw,
        Ordering::Less => Orientation::Cw,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// Lexicographic comparison: by `x`, ties broken by `y`.
pub fn lex_cmp<T: Scalar>(p: &Point2<T>, q: &Point2<T>) -> Ordering {
    p.x.cmp(&q.x).then_with(|| p.y.cmp(&q.y))
}

/// Strict lexicographic order on points (`x` first, then `y`).
pub fn lex_less<T: Scalar>(p: &Point2<T>, q: &Point2<T>) -> bool {
    lex_cmp(p, q) == Ordering::Less
}

/// Membership in the open region used by the convex-polygon dynamic
/// program: `v` is lexicographically after `a`, strictly right of the
/// directed line `a → b`, and strictly right of the directed line
/// `c → b`.
pub fn in_region<T: Scalar>(
    a: &Point2<T>,
    b: &Point2<T>,
    c: &Point2<T>,
    v: &Point2<T>,
) -> bool {
    lex_less(a, v)
        && orientation(a, b, v) == Orientation::Cw
        && orientation(c, b, v) == Orientation::Cw
}

/// True iff the closed cycle through `points` (in the given order) is a
/// strictly convex polygon boundary: every cyclically consecutive triple
/// has the same non-collinear orientation.
pub fn is_convex_cycle<T: Scalar>(points: &[Point2<T>]) -> bool {
    let n = points.len();
    if n < 3 {
        return false;
    }
    let first = orientation(&points[0], &points[1], &points[2]);
    if first == Orientation::Collinear {
        return false;
    }
    (0..n).all(|i| {
        orientation(&points[i], &points[(i + 1) % n], &points[(i + 2) % n]) == first
    })
}

/// True iff every input point is a vertex of the convex hull of the
/// input (no point interior to the hull, no point interior to a hull
/// edge, no duplicates). Sets of fewer than three distinct points are
/// in convex position by convention.
pub fn is_convex_position<T: Scalar>(points: &[Point2<T>]) -> bool {
    let n = points.len();
    if n <= 1 {
        return true;
    }
    let mut sorted: Vec<&Point2<T>> = points.iter().collect();
    sorted.sort_by(|p, q| lex_cmp(p, q));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    if n == 2 {
        return true;
    }
    convex_hull_len(points) == n
}

/// Indices of the convex hull of `points`, counterclockwise, starting
/// from the lexicographically least point. Collinear boundary points are
/// not hull vertices. Requires at least three points not all collinear;
/// returns `None` otherwise (or on duplicate points).
pub fn convex_hull<T: Scalar>(points: &[Point2<T>]) -> Option<Vec<usize>> {
    let n = points.len();
    if n < 3 {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| lex_cmp(&points[i], &points[j]));
    if order
        .windows(2)
        .any(|w| points[w[0]] == points[w[1]])
    {
        return None;
    }

    // Monotone chain with strict turns: collinear middle points are
    // popped, so only true hull vertices survive.
    let mut lower: Vec<usize> = Vec::new();
    for &i in &order {
        while lower.len() >= 2
            && orientation(
                &points[lower[lower.len() - 2]],
                &points[lower[lower.len() - 1]],
                &points[i],
            ) != Orientation::Ccw
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while upper.len() >= 2
            && orientation(
                &points[upper[upper.len() - 2]],
                &points[upper[upper.len() - 1]],
                &points[i],
            ) != Orientation::Ccw
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return None; // all points collinear
    }
    Some(lower)
}

fn convex_hull_len<T: Scalar>(points: &[Point2<T>]) -> usize {
    convex_hull(points).map_or(0, |h| h.len())
}

/// True iff point `p` lies strictly inside the open segment `(a, b)`.
pub fn point_on_open_segment<T: Scalar>(p: &Point2<T>, a: &Point2<T>, b: &Point2<T>) -> bool {
    if orientation(a, b, p) != Orientation::Collinear {
        return false;
    }
    // On the supporting line, lexicographic order is monotone along the
    // segment, so strict betweenness is a lex sandwich.
    let (lo, hi) = if lex_less(a, b) { (a, b) } else { (b, a) };
    lex_less(lo, p) && lex_less(p, hi)
}

/// True iff the open segments `(p1, q1)` and `(p2, q2)` share at least
/// one point. Touching only at segment endpoints does not count.
pub fn open_segments_intersect<T: Scalar>(
    p1: &Point2<T>,
    q1: &Point2<T>,
    p2: &Point2<T>,
    q2: &Point2<T>,
) -> bool {
    let o1 = orientation(p1, q1, p2);
    let o2 = orientation(p1, q1, q2);
    let o3 = orientation(p2, q2, p1);
    let o4 = orientation(p2, q2, q1);

    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        // All four points on one line: open intervals overlap iff the
        // larger lower end is strictly before the smaller upper end.
        let (lo1, hi1) = if lex_less(p1, q1) { (p1, q1) } else { (q1, p1) };
        let (lo2, hi2) = if lex_less(p2, q2) { (p2, q2) } else { (q2, p2) };
        let lo = if lex_less(lo1, lo2) { lo2 } else { lo1 };
        let hi = if lex_less(hi1, hi2) { hi1 } else { hi2 };
        return lex_less(lo, hi);
    }

    // A proper crossing needs strict straddling on both sides; any
    // configuration with a collinear triple touches at most at a single
    // endpoint, which open segments exclude.
    o1 != Orientation::Collinear
        && o2 != Orientation::Collinear
        && o3 != Orientation::Collinear
        && o4 != Orientation::Collinear
        && o1 != o2
        && o3 != o4
}

/// Total counterclockwise angular order on nonzero direction vectors,
/// starting at the positive x-axis. Directions in the upper half-plane
/// (including the positive x-axis) sort before directions in the lower
/// half-plane (including the negative x-axis); within one half, order
/// follows the cross-product sign. Equal directions compare `Equal`.
pub fn cmp_ccw_from_positive_x<T: Scalar>(d1: &(T, T), d2: &(T, T)) -> Ordering {
    fn upper<T: Scalar>(d: &(T, T)) -> bool {
        d.1 > T::zero() || (d.1 == T::zero() && d.0 > T::zero())
    }
    let (u1, u2) = (upper(d1), upper(d2));
    if u1 != u2 {
        return if u1 { Ordering::Less } else { Ordering::Greater };
    }
    let cross = d1.0.ref_mul(&d2.1).ref_sub(&d1.1.ref_mul(&d2.0));
    match cross.cmp(&T::zero()) {
        Ordering::Greater => Ordering::Less,
        Ordering::Less => Ordering::Greater,
        Ordering::Equal => Ordering::Equal,
    }
}
