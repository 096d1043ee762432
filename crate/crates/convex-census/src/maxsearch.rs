//! Exhaustive maximization of the convex-polygon count over all
//! triangulations of a convex polygon.
//!
//! Triangulations of the convex n-gon are enumerated through their
//! bijection with binary trees: fixing the hull edge between the first and
//! last vertex, every triangulation has a unique triangle on that edge,
//! whose apex splits the polygon into two independent sub-polygons. The
//! recursion over apexes therefore lists each of the Catalan(n − 2)
//! triangulations exactly once, in a canonical order. Each one is realized
//! on the parabola arc point set and counted with the exact dynamic
//! program; the maximum over all of them is the extremal count for n
//! points in convex position.
//!
//! The product recurrence behind [`crate::recurrences::ccx_table`] bounds
//! this maximum from above. Exhaustion shows the bound is exact for
//! n ≤ 6 and strictly loose from n = 7 on (17 versus 18 at n = 7): the
//! recurrence assumes a sub-triangulation can maximize its polygon count
//! and its path count simultaneously, and from seven points up no
//! triangulation does.

use num_traits::Zero;

use crate::constructions::arc_points;
use crate::counting::count_convex_polygons;
use crate::pslg::{Pslg, Triangulation};
use crate::BigCount;

/// Smallest polygon that can be triangulated.
pub const MIN_SEARCH_VERTICES: u32 = 3;

/// Largest supported polygon; Catalan(n − 2) enumeration grows too fast
/// beyond this.
pub const MAX_SEARCH_VERTICES: u32 = 12;

/// Errors from the exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MaxSearchError {
    /// The requested polygon size is outside the supported range.
    #[error(
        "polygon size {n} is out of range: the exhaustive search supports \
         {MIN_SEARCH_VERTICES} to {MAX_SEARCH_VERTICES} vertices"
    )]
    OutOfRange {
        /// The requested number of vertices.
        n: u32,
    },
}

fn check_range(n: u32) -> Result<(), MaxSearchError> {
    if (MIN_SEARCH_VERTICES..=MAX_SEARCH_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(MaxSearchError::OutOfRange { n })
    }
}

/// Lists the diagonal sets of all triangulations of the convex `n`-gon
/// with vertices `0..n` in convex (cyclic) order, one `Vec` per
/// triangulation, in a fixed canonical order.
///
/// Each diagonal is an ordered pair `(a, b)` with `a + 2 <= b`, never the
/// closing hull edge `(0, n - 1)`; each set has exactly `n - 3` diagonals.
pub fn polygon_diagonal_sets(n: u32) -> Result<Vec<Vec<(u32, u32)>>, MaxSearchError> {
    check_range(n)?;
    Ok(diagonal_sets_between(0, n - 1))
}

/// Diagonal sets triangulating the sub-polygon on vertices `lo..=hi`,
/// rooted at the boundary edge `(lo, hi)`: for each apex `k` strictly
/// between them, the triangle `(lo, k, hi)` splits the problem into the
/// two independent sides, and the products of their solutions are
/// concatenated in ascending apex order.
fn diagonal_sets_between(lo: u32, hi: u32) -> Vec<Vec<(u32, u32)>> {
    if hi - lo < 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for apex in lo + 1..hi {
        let left = diagonal_sets_between(lo, apex);
        let right = diagonal_sets_between(apex, hi);
        for l in &left {
            for r in &right {
                let mut set = Vec::with_capacity((hi - lo - 2) as usize);
                if apex > lo + 1 {
                    set.push((lo, apex));
                }
                set.extend_from_slice(l);
                if hi > apex + 1 {
                    set.push((apex, hi));
                }
                set.extend_from_slice(r);
                out.push(set);
            }
        }
    }
    out
}

/// The edge list of the convex `n`-gon triangulation with the given
/// diagonals: the `n` hull edges followed by the diagonals.
fn polygon_edges(n: u32, diagonals: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    edges.extend_from_slice(diagonals);
    edges
}

/// Realizes every triangulation of the convex `n`-gon on the parabola arc
/// point set, in the canonical enumeration order.
pub fn convex_polygon_triangulations(n: u32) -> Result<Vec<Triangulation>, MaxSearchError> {
    let sets = polygon_diagonal_sets(n)?;
    let points = arc_points(n as usize);
    Ok(sets
        .iter()
        .map(|d| {
            let g = Pslg::new(points.clone(), polygon_edges(n, d))
                .expect("enumerated polygon edges are well-formed");
            Triangulation::new(g).expect("enumerated diagonal sets triangulate the polygon")
        })
        .collect())
}

/// Finds the maximum number of convex polygons over all triangulations of
/// `n` points in convex position, by exhaustive enumeration, returning the
/// maximum and the first maximizer in canonical order.
pub fn maxsearch(n: u32) -> Result<(BigCount, Triangulation), MaxSearchError> {
    let sets = polygon_diagonal_sets(n)?;
    let points = arc_points(n as usize);
    let mut best = BigCount::zero();
    let mut best_set = &sets[0];
    for set in &sets {
        let g = Pslg::new(points.clone(), polygon_edges(n, set))
            .expect("enumerated polygon edges are well-formed");
        let count =
            count_convex_polygons(&g).expect("enumerated triangulations are valid graphs");
        if count > best {
            best = count;
            best_set = set;
        }
    }
    let g = Pslg::new(points, polygon_edges(n, best_set))
        .expect("enumerated polygon edges are well-formed");
    let t = Triangulation::new(g).expect("enumerated diagonal sets triangulate the polygon");
    Ok((best, t))
}
