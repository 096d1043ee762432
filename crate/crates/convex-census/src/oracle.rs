//! Brute-force ground truth for the polygon and path counters.
//!
//! These counters share no algorithmic idea with the dynamic programs they
//! check: polygons are found by scanning all vertex subsets and testing the
//! hull-cycle condition directly, paths by depth-first enumeration. They
//! are deliberately naive and size-guarded; their only job is to be
//! obviously correct. They enforce the same geometric input contract as
//! the dynamic programs — on an invalid graph the scans would return
//! well-defined but meaningless numbers, so invalid inputs are rejected.

use num_traits::{One, Zero};

use crate::coords::{with_scaled_coords, CoordVisitor};
use crate::geometry::{convex_hull, orientation, Orientation, Point2};
use crate::pslg::{validate, Pslg, Violation};
use crate::{BigCount, Scalar};

/// Errors from the brute-force counters.
#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    /// The input graph violates the geometric input contract.
    #[error("invalid input graph: {0}")]
    Invalid(Violation),
    /// The instance is too large for exhaustive scanning.
    #[error("instance has {n} vertices; the brute-force {what} is limited to {max}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },
    /// A path endpoint is not a vertex of the graph.
    #[error("path endpoint {0} is out of range (n = {1})")]
    EndpointOutOfRange(u32, usize),
}

/// Subset-scan polygon counter: at most this many vertices.
pub const MAX_BRUTE_COUNT_VERTICES: usize = 22;
/// Path enumeration: at most this many vertices.
pub const MAX_BRUTE_PATH_VERTICES: usize = 18;

fn check_valid(g: &Pslg) -> Result<(), OracleError> {
    match validate(g).violations.into_iter().next() {
        Some(v) => Err(OracleError::Invalid(v)),
        None => Ok(()),
    }
}

fn check_count_size(g: &Pslg) -> Result<(), OracleError> {
    let n = g.vertex_count();
    if n > MAX_BRUTE_COUNT_VERTICES {
        return Err(OracleError::TooLarge {
            what: "polygon scan",
            n,
            max: MAX_BRUTE_COUNT_VERTICES,
        });
    }
    check_valid(g)
}

fn check_path_size(g: &Pslg, a: u32, b: u32) -> Result<(), OracleError> {
    let n = g.vertex_count();
    if n > MAX_BRUTE_PATH_VERTICES {
        return Err(OracleError::TooLarge {
            what: "path enumeration",
            n,
            max: MAX_BRUTE_PATH_VERTICES,
        });
    }
    for e in [a, b] {
        if e as usize >= n {
            return Err(OracleError::EndpointOutOfRange(e, n));
        }
    }
    check_valid(g)
}

/// If the vertex subset `mask` spans a convex polygon of `g` — every member
/// a hull vertex of the subset and every hull edge an edge of `g` — returns
/// its canonical cycle (lexicographically least vertex first, counter-
/// clockwise); otherwise `None`.
fn subset_polygon<T: Scalar>(
    points: &[Point2<T>],
    adj_mask: &[u32],
    mask: u32,
) -> Option<Vec<u32>> {
    let mut members: Vec<u32> = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros();
        members.push(v);
        rest &= rest - 1;
    }
    let subset: Vec<Point2<T>> = members
        .iter()
        .map(|&v| points[v as usize].clone())
        .collect();
    let hull = convex_hull(&subset)?;
    if hull.len() != members.len() {
        return None; // some member is interior: not in convex position
    }
    let cycle: Vec<u32> = hull.into_iter().map(|i| members[i]).collect();
    for k in 0..cycle.len() {
        let (u, v) = (cycle[k], cycle[(k + 1) % cycle.len()]);
        if adj_mask[u as usize] & (1 << v) == 0 {
            return None; // hull edge missing from the graph
        }
    }
    Some(cycle)
}

struct SubsetScanFold<R, F: FnMut(Vec<u32>, &mut R)> {
    adj_mask: Vec<u32>,
    n: usize,
    init: R,
    fold: F,
}

impl<R, F: FnMut(Vec<u32>, &mut R)> CoordVisitor<R> for SubsetScanFold<R, F> {
    fn visit<T: Scalar>(mut self, points: &[Point2<T>]) -> R {
        let mut acc = self.init;
        for mask in 0u32..(1u32 << self.n) {
            if mask.count_ones() < 3 {
                continue;
            }
            if let Some(cycle) = subset_polygon(points, &self.adj_mask, mask) {
                (self.fold)(cycle, &mut acc);
            }
        }
        acc
    }
}

fn adjacency_masks(g: &Pslg) -> Vec<u32> {
    let mut masks = vec![0u32; g.vertex_count()];
    for &(u, v) in g.edges() {
        masks[u as usize] |= 1 << v;
        masks[v as usize] |= 1 << u;
    }
    masks
}

/// Counts convex polygons by scanning all vertex subsets.
///
/// A subset spans a convex polygon exactly when it is in convex position
/// and all its hull edges are edges of the graph (a convex polygon is the
/// hull cycle of its own vertex set). Exponential in `n`; guarded by
/// [`MAX_BRUTE_COUNT_VERTICES`].
pub fn brute_count(g: &Pslg) -> Result<BigCount, OracleError> {
    check_count_size(g)?;
    let count = with_scaled_coords(
        g.vertices(),
        SubsetScanFold {
            adj_mask: adjacency_masks(g),
            n: g.vertex_count(),
            init: BigCount::zero(),
            fold: |_cycle, acc: &mut BigCount| *acc += BigCount::one(),
        },
    );
    Ok(count)
}

/// Enumerates all convex polygons as canonical cycles (lexicographically
/// least vertex first, counterclockwise), sorted. Same algorithm and size
/// guard as [`brute_count`].
pub fn brute_enumerate(g: &Pslg) -> Result<Vec<Vec<u32>>, OracleError> {
    check_count_size(g)?;
    let mut cycles = with_scaled_coords(
        g.vertices(),
        SubsetScanFold {
            adj_mask: adjacency_masks(g),
            n: g.vertex_count(),
            init: Vec::new(),
            fold: |cycle, acc: &mut Vec<Vec<u32>>| acc.push(cycle),
        },
    );
    cycles.sort();
    Ok(cycles)
}

/// How [`dfs_paths`] should treat a completed simple path ending at the
/// target.
#[derive(Clone, Copy, PartialEq, Eq)]
enum PathRule {
    /// Count every right-turning simple path (each interior vertex a strict
    /// right turn). This is the literal "uniformly right-turning chain".
    RightTurning,
    /// Count right-turning simple paths whose closure (adding the segment
    /// back from the end to the start) is a clockwise convex cycle.
    ConvexClosure,
}

struct PathScan<'g> {
    adj: &'g [Vec<u32>],
    a: u32,
    b: u32,
    rule: PathRule,
    collect: bool,
}

impl<'g> CoordVisitor<(BigCount, Vec<Vec<u32>>)> for PathScan<'g> {
    fn visit<T: Scalar>(self, points: &[Point2<T>]) -> (BigCount, Vec<Vec<u32>>) {
        let mut count = BigCount::zero();
        let mut paths = Vec::new();
        if self.a == self.b {
            return (count, paths);
        }
        let mut path = vec![self.a];
        let mut visited = vec![false; points.len()];
        visited[self.a as usize] = true;
        dfs_paths(
            points,
            self.adj,
            self.b,
            self.rule,
            self.collect,
            &mut path,
            &mut visited,
            &mut count,
            &mut paths,
        );
        (count, paths)
    }
}

/// Extends `path` by every admissible neighbor, depth-first; neighbors are
/// tried in ascending vertex order, so collected paths come out in
/// lexicographic order.
#[allow(clippy::too_many_arguments)]
fn dfs_paths<T: Scalar>(
    points: &[Point2<T>],
    adj: &[Vec<u32>],
    target: u32,
    rule: PathRule,
    collect: bool,
    path: &mut Vec<u32>,
    visited: &mut [bool],
    count: &mut BigCount,
    paths: &mut Vec<Vec<u32>>,
) {
    let cur = *path.last().unwrap();
    for &next in &adj[cur as usize] {
        if visited[next as usize] {
            continue;
        }
        // Prefix pruning: every interior vertex of a finished chain is a
        // strict right turn, under either rule.
        if path.len() >= 2 {
            let prev = path[path.len() - 2];
            if orientation(
                &points[prev as usize],
                &points[cur as usize],
                &points[next as usize],
            ) != Orientation::Cw
            {
                continue;
            }
        }
        path.push(next);
        if next == target {
            let accept = match rule {
                PathRule::RightTurning => true,
                PathRule::ConvexClosure => closure_is_cw_convex(points, path),
            };
            if accept {
                *count += BigCount::one();
                if collect {
                    paths.push(path.clone());
                }
            }
            // No simple path can leave the target and end there again.
        } else {
            visited[next as usize] = true;
            dfs_paths(
                points, adj, target, rule, collect, path, visited, count, paths,
            );
            visited[next as usize] = false;
        }
        path.pop();
    }
}

/// Whether closing the path (last vertex back to the first) yields a
/// clockwise convex cycle. Two-vertex paths close to a degenerate cycle and
/// are accepted.
fn closure_is_cw_convex<T: Scalar>(points: &[Point2<T>], path: &[u32]) -> bool {
    let m = path.len();
    if m == 2 {
        return true;
    }
    (0..m).all(|k| {
        orientation(
            &points[path[k] as usize],
            &points[path[(k + 1) % m] as usize],
            &points[path[(k + 2) % m] as usize],
        ) == Orientation::Cw
    })
}

/// Counts uniformly right-turning simple paths from `a` to `b` by
/// depth-first enumeration (prefixes that stop being right-turning are
/// pruned). A single edge counts as a path. Guarded by
/// [`MAX_BRUTE_PATH_VERTICES`].
pub fn brute_count_paths(g: &Pslg, a: u32, b: u32) -> Result<BigCount, OracleError> {
    check_path_size(g, a, b)?;
    let adj = g.adjacency();
    let (count, _) = with_scaled_coords(
        g.vertices(),
        PathScan {
            adj: &adj,
            a,
            b,
            rule: PathRule::RightTurning,
            collect: false,
        },
    );
    Ok(count)
}

/// Enumerates the paths counted by [`brute_count_paths`], in lexicographic
/// order of the vertex sequences.
pub fn brute_enumerate_paths(g: &Pslg, a: u32, b: u32) -> Result<Vec<Vec<u32>>, OracleError> {
    check_path_size(g, a, b)?;
    let adj = g.adjacency();
    let (_, paths) = with_scaled_coords(
        g.vertices(),
        PathScan {
            adj: &adj,
            a,
            b,
            rule: PathRule::RightTurning,
            collect: true,
        },
    );
    Ok(paths)
}

/// Counts simple paths from `a` to `b` whose closure (adding the segment
/// from `b` back to `a`) is a clockwise convex cycle; a single edge counts.
/// This is the subfamily of right-turning paths that stay convex when
/// closed, enumerated by the same depth-first scan plus a final closure
/// test.
pub fn brute_count_convex_chains(g: &Pslg, a: u32, b: u32) -> Result<BigCount, OracleError> {
    check_path_size(g, a, b)?;
    let adj = g.adjacency();
    let (count, _) = with_scaled_coords(
        g.vertices(),
        PathScan {
            adj: &adj,
            a,
            b,
            rule: PathRule::ConvexClosure,
            collect: false,
        },
    );
    Ok(count)
}
