//! Exact counting and enumeration of convex polygons, and convex-path
//! counting, by polynomial-time dynamic programming.
//!
//! # Polygon counting
//!
//! Every convex polygon in the graph has a unique canonical form: start at
//! its lexicographically least vertex `a` and walk counterclockwise. The
//! dynamic program builds counterclockwise convex arcs anchored at `a`,
//! layer by layer over the arc length. A state is the ordered pair
//! `(b, c)` of the arc's last two vertices (always an edge of the graph),
//! holding the number of arcs `a, ..., b, c`. An arc extends by a neighbor
//! `d` of `c` when
//!
//! * `a` stays lexicographically least (`a < d`),
//! * the fan keeps opening counterclockwise around the anchor
//!   (`orientation(a, c, d) = CCW`), and
//! * the arc turns left at `c` (`orientation(b, c, d) = CCW`).
//!
//! The anchor condition confines the polygon to the closed half-plane
//! lexicographically after `a`, so the fan angles are strictly increasing:
//! arcs never wrap past the start, are automatically simple, and close into
//! exactly the convex polygons whenever the last vertex is adjacent to `a`.
//! Work per extension is constant (two orientation tests), layers hold at
//! most one state per directed edge, and the whole run is `O(n^4)` — more
//! precisely at most `8 n^4` examined extensions, asserted in tests.
//!
//! # Path counting
//!
//! [`count_convex_paths`] counts simple paths from `a` to `b` that turn
//! right at every interior vertex *and* close convexly: appending the
//! segment from `b` back to `a` yields a clockwise convex cycle. These
//! closed-convex chains are the pieces that polygon decompositions at a
//! chord produce, and the squaring recurrence of the dyadic instances
//! counts exactly them. On points in convex position they coincide with
//! plain right-turning paths (a right-turning path there can never wrap
//! past its own closing segment); on general position sets right-turning
//! paths may spiral beyond one turn and stop being closable, which is why
//! the brute-force oracle offers both semantics separately.

use std::ops::ControlFlow;

use num_traits::Zero;

use crate::coords::{with_scaled_coords, CoordVisitor};
use crate::geometry::{in_region, lex_cmp, lex_less, orientation, Orientation, Point2};
use crate::pslg::{validate, Pslg, Violation};
use crate::{BigCount, Scalar};

/// Errors from the counting operations.
#[derive(Debug, thiserror::Error)]
pub enum CountError {
    /// The input graph violates the geometric input contract.
    #[error("invalid input graph: {0}")]
    Invalid(Violation),
    /// A path endpoint is not a vertex of the graph.
    #[error("path endpoint {0} is out of range (n = {1})")]
    EndpointOutOfRange(u32, usize),
    /// Convex paths need two distinct endpoints.
    #[error("path endpoints must differ (both are {0})")]
    EqualEndpoints(u32),
}

fn check_valid(g: &Pslg) -> Result<(), CountError> {
    let report = validate(g);
    match report.violations.into_iter().next() {
        Some(v) => Err(CountError::Invalid(v)),
        None => Ok(()),
    }
}

/// A convex polygon of a host graph in canonical form: the first index is
/// the lexicographically least vertex and the traversal is
/// counterclockwise; every consecutive pair (wrapping) is a graph edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConvexPolygon {
    cycle: Vec<u32>,
}

impl ConvexPolygon {
    /// The canonical vertex cycle.
    pub fn cycle(&self) -> &[u32] {
        &self.cycle
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    /// Never true: polygons have at least three vertices.
    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}

/// Outcome of a counting run, with diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    /// Total number of convex polygons.
    pub total: BigCount,
    /// Counts split by cycle length (ascending, only nonzero entries).
    pub by_length: Vec<(usize, BigCount)>,
    /// Number of examined arc extensions — the dynamic program's work
    /// measure, at most `8 n^4`.
    pub transitions: u64,
}

/// Adjacency lists annotated with directed-edge ids: the directed edge
/// `u -> v` of undirected edge index `e` gets id `2e` when `u < v`, else
/// `2e + 1`. Ids index the dense DP layers.
struct DirectedAdjacency {
    /// Per vertex: `(neighbor, directed edge id of vertex -> neighbor)`,
    /// ascending by neighbor.
    lists: Vec<Vec<(u32, u32)>>,
}

impl DirectedAdjacency {
    fn build(g: &Pslg) -> DirectedAdjacency {
        let mut lists: Vec<Vec<(u32, u32)>> = vec![Vec::new(); g.vertex_count()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            lists[u as usize].push((v, 2 * e as u32));
            lists[v as usize].push((u, 2 * e as u32 + 1));
        }
        for list in &mut lists {
            list.sort_unstable();
        }
        DirectedAdjacency { lists }
    }

    fn neighbors(&self, v: u32) -> &[(u32, u32)] {
        &self.lists[v as usize]
    }
}

/// One dense DP layer: a `BigCount` per directed edge, plus the list of
/// occupied slots so sparse layers stay cheap to scan and reset.
struct Layer {
    counts: Vec<BigCount>,
    occupied: Vec<u32>,
}

impl Layer {
    fn new(directed_edges: usize) -> Layer {
        Layer {
            counts: vec![BigCount::zero(); directed_edges],
            occupied: Vec::new(),
        }
    }

    fn add(&mut self, id: u32, amount: &BigCount) {
        let slot = &mut self.counts[id as usize];
        if slot.is_zero() {
            self.occupied.push(id);
        }
        *slot += amount;
    }

    fn clear(&mut self) {
        for &id in &self.occupied {
            self.counts[id as usize] = BigCount::zero();
        }
        self.occupied.clear();
    }

    fn is_empty(&self) -> bool {
        self.occupied.is_empty()
    }
}

struct PolygonCountVisitor<'g> {
    g: &'g Pslg,
    adj: &'g DirectedAdjacency,
}

impl<'g> CoordVisitor<CountReport> for PolygonCountVisitor<'g> {
    fn visit<T: Scalar>(self, points: &[Point2<T>]) -> CountReport {
        let n = points.len();
        let directed = 2 * self.g.edge_count();
        let mut total = BigCount::zero();
        let mut by_length: Vec<BigCount> = Vec::new();
        let mut transitions: u64 = 0;

        let mut cur = Layer::new(directed);
        let mut next = Layer::new(directed);

        for a in 0..n as u32 {
            let pa = &points[a as usize];
            cur.clear();

            // Arcs of length 3: a -> b -> c, counterclockwise, anchor
            // lexicographically least.
            for &(b, _) in self.adj.neighbors(a) {
                let pb = &points[b as usize];
                if !lex_less(pa, pb) {
                    continue;
                }
                for &(c, id_bc) in self.adj.neighbors(b) {
                    transitions += 1;
                    let pc = &points[c as usize];
                    if lex_less(pa, pc) && orientation(pa, pb, pc) == Orientation::Ccw {
                        let one = BigCount::from(1u32);
                        cur.add(id_bc, &one);
                        if self.g.has_edge(a, c) {
                            accumulate(&mut total, &mut by_length, 3, &one);
                        }
                    }
                }
            }

            // Extend one vertex at a time; an arc has at most n vertices.
            let mut len = 3usize;
            while !cur.is_empty() && len < n {
                next.clear();
                for &id_vb in &cur.occupied {
                    let count = &cur.counts[id_vb as usize];
                    let (v, b) = directed_endpoints(self.g, id_vb);
                    let (pv, pb) = (&points[v as usize], &points[b as usize]);
                    for &(c, id_bc) in self.adj.neighbors(b) {
                        transitions += 1;
                        let pc = &points[c as usize];
                        if lex_less(pa, pc)
                            && orientation(pa, pb, pc) == Orientation::Ccw
                            && orientation(pv, pb, pc) == Orientation::Ccw
                        {
                            // The predecessor must lie in the region that
                            // the extended triple carves out; the reduced
                            // test above is equivalent given the layer
                            // invariants.
                            debug_assert!(in_region(pa, pb, pc, pv));
                            next.add(id_bc, count);
                            if self.g.has_edge(a, c) {
                                accumulate(&mut total, &mut by_length, len + 1, count);
                            }
                        }
                    }
                }
                std::mem::swap(&mut cur, &mut next);
                len += 1;
            }
        }

        CountReport {
            total,
            by_length: by_length
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(len, c)| (len, c))
                .collect(),
            transitions,
        }
    }
}

fn accumulate(total: &mut BigCount, by_length: &mut Vec<BigCount>, len: usize, amount: &BigCount) {
    *total += amount;
    if by_length.len() <= len {
        by_length.resize(len + 1, BigCount::zero());
    }
    by_length[len] += amount;
}

/// Endpoints `(from, to)` of a directed edge id.
fn directed_endpoints(g: &Pslg, id: u32) -> (u32, u32) {
    let (u, v) = g.edges()[(id / 2) as usize];
    if id % 2 == 0 {
        (u, v)
    } else {
        (v, u)
    }
}

/// Counts the convex polygons of `g` exactly.
///
/// A convex polygon is a cycle of at least three graph edges whose vertices
/// are in strictly convex position in cycle order. The graph must pass
/// [`validate`].
pub fn count_convex_polygons(g: &Pslg) -> Result<BigCount, CountError> {
    Ok(count_convex_polygons_report(g)?.total)
}

/// [`count_convex_polygons`] with the per-length histogram and the work
/// counter.
pub fn count_convex_polygons_report(g: &Pslg) -> Result<CountReport, CountError> {
    check_valid(g)?;
    let adj = DirectedAdjacency::build(g);
    Ok(with_scaled_coords(
        g.vertices(),
        PolygonCountVisitor { g, adj: &adj },
    ))
}

struct EnumerateVisitor<'g, F: FnMut(&ConvexPolygon) -> ControlFlow<()>> {
    g: &'g Pslg,
    adj: &'g DirectedAdjacency,
    visitor: F,
}

impl<'g, F: FnMut(&ConvexPolygon) -> ControlFlow<()>> CoordVisitor<BigCount>
    for EnumerateVisitor<'g, F>
{
    fn visit<T: Scalar>(mut self, points: &[Point2<T>]) -> BigCount {
        let n = points.len();
        let mut count = BigCount::zero();
        // Anchors in lexicographic coordinate order, so the emission order
        // is reproducible: polygons sorted by their least vertex's
        // coordinates, then depth-first with neighbors ascending.
        let mut anchors: Vec<u32> = (0..n as u32).collect();
        anchors.sort_by(|&i, &j| lex_cmp(&points[i as usize], &points[j as usize]));

        let mut arc: Vec<u32> = Vec::new();
        for a in anchors {
            arc.clear();
            arc.push(a);
            if dfs_arcs(self.g, self.adj, points, &mut arc, &mut count, &mut self.visitor)
                .is_break()
            {
                break;
            }
        }
        count
    }
}

/// Depth-first extension of the counterclockwise convex arc `arc` (anchored
/// at `arc[0]`), emitting a polygon whenever the last vertex closes back to
/// the anchor.
fn dfs_arcs<T: Scalar, F: FnMut(&ConvexPolygon) -> ControlFlow<()>>(
    g: &Pslg,
    adj: &DirectedAdjacency,
    points: &[Point2<T>],
    arc: &mut Vec<u32>,
    count: &mut BigCount,
    visitor: &mut F,
) -> ControlFlow<()> {
    let a = arc[0];
    let pa = &points[a as usize];
    let b = *arc.last().unwrap();
    let pb = &points[b as usize];
    for &(c, _) in adj.neighbors(b) {
        let pc = &points[c as usize];
        if !lex_less(pa, pc) {
            continue;
        }
        let ok = if arc.len() == 1 {
            true // choosing the second vertex: any neighbor after a
        } else {
            let fan = orientation(pa, pb, pc) == Orientation::Ccw;
            let turn = if arc.len() == 2 {
                true // the turn at b is the fan condition itself
            } else {
                let v = arc[arc.len() - 2];
                orientation(&points[v as usize], pb, pc) == Orientation::Ccw
            };
            fan && turn
        };
        if !ok {
            continue;
        }
        arc.push(c);
        if arc.len() >= 3 && g.has_edge(a, c) {
            *count += BigCount::from(1u32);
            let polygon = ConvexPolygon { cycle: arc.clone() };
            if visitor(&polygon).is_break() {
                arc.pop();
                return ControlFlow::Break(());
            }
        }
        dfs_arcs(g, adj, points, arc, count, visitor)?;
        arc.pop();
    }
    ControlFlow::Continue(())
}

/// Enumerates every convex polygon of `g` exactly once, in canonical form,
/// in a reproducible order (anchors by coordinate order, then depth-first
/// with neighbors ascending). Returns the number of polygons visited.
///
/// The visitor can stop the enumeration early by returning
/// [`ControlFlow::Break`]; the returned count then only covers the visited
/// prefix.
pub fn enumerate_convex_polygons<F>(g: &Pslg, visitor: F) -> Result<BigCount, CountError>
where
    F: FnMut(&ConvexPolygon) -> ControlFlow<()>,
{
    check_valid(g)?;
    let adj = DirectedAdjacency::build(g);
    Ok(with_scaled_coords(
        g.vertices(),
        EnumerateVisitor {
            g,
            adj: &adj,
            visitor,
        },
    ))
}

struct PathCountVisitor<'g> {
    g: &'g Pslg,
    adj: &'g DirectedAdjacency,
    from: u32,
    to: u32,
}

impl<'g> CoordVisitor<BigCount> for PathCountVisitor<'g> {
    fn visit<T: Scalar>(self, points: &[Point2<T>]) -> BigCount {
        let a = self.from;
        let pa = &points[a as usize];
        let directed = 2 * self.g.edge_count();
        let mut total = BigCount::zero();

        // The chain's second vertex fixes the half-plane that keeps the fan
        // from wrapping past the closing segment; run one DP per choice.
        for &(v2, id_first) in self.adj.neighbors(a) {
            if v2 == self.to {
                total += BigCount::from(1u32); // the single-edge chain
            }
            let p2 = &points[v2 as usize];
            let mut cur = Layer::new(directed);
            let mut next = Layer::new(directed);
            cur.add(id_first, &BigCount::from(1u32));

            while !cur.is_empty() {
                next.clear();
                for &id_vb in &cur.occupied {
                    let count = &cur.counts[id_vb as usize];
                    let (v, b) = directed_endpoints(self.g, id_vb);
                    if b == self.to {
                        // A chain never leaves its endpoint: once at the
                        // target, extending cannot produce another chain
                        // that ends there (vertices never repeat).
                        continue;
                    }
                    let (pv, pb) = (&points[v as usize], &points[b as usize]);
                    for &(c, id_bc) in self.adj.neighbors(b) {
                        let pc = &points[c as usize];
                        // Right turn at b, clockwise fan around the start,
                        // and confinement to the half-plane right of the
                        // first segment: together exactly the chains whose
                        // closure is a clockwise convex cycle.
                        if orientation(pv, pb, pc) == Orientation::Cw
                            && orientation(pa, pb, pc) == Orientation::Cw
                            && (v == a || orientation(pa, p2, pc) == Orientation::Cw)
                        {
                            next.add(id_bc, count);
                            if c == self.to {
                                total += count;
                            }
                        }
                    }
                }
                std::mem::swap(&mut cur, &mut next);
            }
        }
        total
    }
}

/// Counts the convex chains from `a` to `b`: simple paths along graph edges
/// that turn right at every interior vertex and whose closure (the segment
/// from `b` back to `a`) completes a clockwise convex cycle. The single
/// edge `{a, b}`, when present, counts as one chain.
///
/// The graph must pass [`validate`] and the endpoints must be distinct.
pub fn count_convex_paths(g: &Pslg, a: u32, b: u32) -> Result<BigCount, CountError> {
    let n = g.vertex_count();
    for e in [a, b] {
        if e as usize >= n {
            return Err(CountError::EndpointOutOfRange(e, n));
        }
    }
    if a == b {
        return Err(CountError::EqualEndpoints(a));
    }
    check_valid(g)?;
    let adj = DirectedAdjacency::build(g);
    Ok(with_scaled_coords(
        g.vertices(),
        PathCountVisitor {
            g,
            adj: &adj,
            from: a,
            to: b,
        },
    ))
}
