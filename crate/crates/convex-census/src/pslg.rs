//! Planar straight-line graphs: storage, validation, faces, and JSON I/O.
//!
//! A [`Pslg`] is a set of points in the plane (exact rational coordinates)
//! together with a set of undirected straight-line edges between them. The
//! module provides
//!
//! * construction with structural checks (index bounds, no self-loops,
//!   duplicate edges collapsed),
//! * geometric validation ([`validate`]): duplicate points, collinear
//!   triples, crossing edges, vertices in the interior of edges,
//! * face extraction for connected valid graphs and a triangulation
//!   recognizer ([`Triangulation`], [`is_triangulation`]),
//! * the dual graph of a triangulation ([`dual_graph`]),
//! * a JSON interchange format ([`Pslg::from_json_str`],
//!   [`Pslg::to_json_string`], [`Pslg::load`], [`Pslg::save`]).

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coords::{with_scaled_coords, CoordVisitor};
use crate::geometry::{
    cmp_ccw_from_positive_x, lex_cmp, open_segments_intersect, orientation, point_on_open_segment,
    Orientation, Point2,
};
use crate::{Point, Rat, Scalar};

/// Errors produced while building or parsing a [`Pslg`].
#[derive(Debug, thiserror::Error)]
pub enum PslgError {
    /// An edge endpoint is not a valid vertex index.
    #[error("edge ({0}, {1}) references a vertex out of range (n = {2})")]
    EdgeOutOfRange(u32, u32, usize),
    /// An edge joins a vertex to itself.
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(u32),
    /// Too many vertices to index with `u32`.
    #[error("too many vertices ({0}); at most {max} are supported", max = u32::MAX)]
    TooManyVertices(usize),
    /// The JSON text could not be parsed at all.
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    /// The JSON was well-formed but not a valid graph description.
    #[error("invalid graph description: {0}")]
    Format(String),
    /// Reading or writing a file failed.
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

fn format_err(msg: impl Into<String>) -> PslgError {
    PslgError::Format(msg.into())
}

/// A planar straight-line graph with exact rational vertex coordinates.
///
/// Vertices are identified by their index (`u32`). Edges are undirected,
/// stored with the smaller endpoint first, deduplicated, and sorted, so two
/// graphs with the same vertices and edge set compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Pslg {
    vertices: Vec<Point>,
    edges: Vec<(u32, u32)>,
}

impl fmt::Debug for Pslg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Pslg")
            .field("vertices", &self.vertices.len())
            .field("edges", &self.edges.len())
            .finish()
    }
}

impl Pslg {
    /// Builds a graph from vertex coordinates and undirected edges.
    ///
    /// Edges are normalized (smaller index first), deduplicated, and sorted.
    /// Fails on out-of-range endpoints and self-loops. Geometric problems
    /// (duplicate points, crossings, ...) are *not* rejected here; run
    /// [`validate`] to find those.
    pub fn new(vertices: Vec<Point>, edges: Vec<(u32, u32)>) -> Result<Pslg, PslgError> {
        if vertices.len() > u32::MAX as usize {
            return Err(PslgError::TooManyVertices(vertices.len()));
        }
        let n = vertices.len();
        let mut normalized: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u as usize >= n || v as usize >= n {
                return Err(PslgError::EdgeOutOfRange(u, v, n));
            }
            if u == v {
                return Err(PslgError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Pslg {
            vertices,
            edges: normalized,
        })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of (undirected, deduplicated) edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The vertex coordinates, indexed by vertex id.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// The coordinates of vertex `v`.
    pub fn vertex(&self, v: u32) -> &Point {
        &self.vertices[v as usize]
    }

    /// The normalized edge list, sorted, each with the smaller index first.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Whether `{u, v}` is an edge (order of the arguments is irrelevant).
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// Returns a copy of the graph with one extra edge.
    pub fn with_edge(&self, u: u32, v: u32) -> Result<Pslg, PslgError> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Pslg::new(self.vertices.clone(), edges)
    }

    /// Neighbor lists indexed by vertex id, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        // Edges are sorted with the smaller endpoint first, so lists of
        // larger neighbors are already ascending; lists of smaller neighbors
        // need the sort.
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Whether the graph is connected (the empty graph and a single vertex
    /// count as connected).
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut reached = 1usize;
        while let Some(v) = stack.pop() {
            for &w in &adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// A single reason a point/edge set fails to be a valid input graph.
///
/// Vertex indices in a violation are always reported in increasing order,
/// and edges in normalized `(min, max)` form, so reports are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    /// Two vertices share the same coordinates.
    DuplicatePoints { first: u32, second: u32 },
    /// Three distinct vertices lie on a common line.
    CollinearTriple { a: u32, b: u32, c: u32 },
    /// Two edges with no shared endpoint intersect.
    EdgesCross { first: (u32, u32), second: (u32, u32) },
    /// A vertex lies in the relative interior of an edge.
    VertexOnEdge { vertex: u32, edge: (u32, u32) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicatePoints { first, second } => {
                write!(f, "vertices {first} and {second} have identical coordinates")
            }
            Violation::CollinearTriple { a, b, c } => {
                write!(f, "vertices {a}, {b}, {c} are collinear")
            }
            Violation::EdgesCross { first, second } => write!(
                f,
                "edges ({}, {}) and ({}, {}) cross",
                first.0, first.1, second.0, second.1
            ),
            Violation::VertexOnEdge { vertex, edge } => write!(
                f,
                "vertex {vertex} lies in the interior of edge ({}, {})",
                edge.0, edge.1
            ),
        }
    }
}

/// The outcome of [`validate`]: every violation found, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    /// True when no violations were found.
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

struct ValidateVisitor<'g> {
    edges: &'g [(u32, u32)],
}

impl<'g> CoordVisitor<Vec<Violation>> for ValidateVisitor<'g> {
    fn visit<T: Scalar>(self, points: &[Point2<T>]) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = points.len();

        // Duplicate points: sort indices lexicographically by coordinates,
        // then compare neighbors. Report every unordered pair within a run
        // of equal points.
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_unstable_by(|&i, &j| {
            lex_cmp(&points[i as usize], &points[j as usize]).then(i.cmp(&j))
        });
        let mut run_start = 0;
        for k in 1..=n {
            let same = k < n && points[order[k] as usize] == points[order[k - 1] as usize];
            if !same {
                if k - run_start > 1 {
                    for a in run_start..k {
                        for b in a + 1..k {
                            let (i, j) = (order[a].min(order[b]), order[a].max(order[b]));
                            out.push(Violation::DuplicatePoints { first: i, second: j });
                        }
                    }
                }
                run_start = k;
            }
        }
        let any_duplicates = !out.is_empty();

        // Collinear triples. Skipped when duplicate points exist: a repeated
        // point makes every triple containing both copies degenerate, and the
        // duplicate report already identifies the underlying problem.
        if !any_duplicates {
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        if orientation(&points[a], &points[b], &points[c])
                            == Orientation::Collinear
                        {
                            out.push(Violation::CollinearTriple {
                                a: a as u32,
                                b: b as u32,
                                c: c as u32,
                            });
                        }
                    }
                }
            }
        }

        // Crossing edges: every pair without a shared endpoint. Interiors
        // intersecting is what `open_segments_intersect` tests, so edges that
        // merely share an endpoint are never reported.
        let m = self.edges.len();
        for i in 0..m {
            let (a, b) = self.edges[i];
            for j in i + 1..m {
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                if open_segments_intersect(
                    &points[a as usize],
                    &points[b as usize],
                    &points[c as usize],
                    &points[d as usize],
                ) {
                    out.push(Violation::EdgesCross {
                        first: (a, b),
                        second: (c, d),
                    });
                }
            }
        }

        // Vertices in the interior of an edge.
        for &(a, b) in self.edges {
            for v in 0..n as u32 {
                if v == a || v == b {
                    continue;
                }
                if point_on_open_segment(
                    &points[v as usize],
                    &points[a as usize],
                    &points[b as usize],
                ) {
                    out.push(Violation::VertexOnEdge { vertex: v, edge: (a, b) });
                }
            }
        }

        out.sort();
        out.dedup();
        out
    }
}

/// Checks a graph against the geometric input contract.
///
/// A graph is *valid* when all points are distinct, no three points are
/// collinear (point sets are required to be in general position), no two
/// edges cross, and no vertex lies in the relative interior of an edge.
/// Violations are findings, not errors: the report lists all of them in a
/// deterministic order.
pub fn validate(g: &Pslg) -> ValidationReport {
    let violations = with_scaled_coords(g.vertices(), ValidateVisitor { edges: g.edges() });
    ValidationReport { violations }
}

// ---------------------------------------------------------------------------
// Faces
// ---------------------------------------------------------------------------

/// Sorted dart structure: for each vertex, its neighbors in counterclockwise
/// angular order (starting from the positive x direction).
fn ccw_neighbor_order(g: &Pslg) -> Vec<Vec<u32>> {
    struct SortVisitor<'g> {
        adj: Vec<Vec<u32>>,
        _marker: std::marker::PhantomData<&'g ()>,
    }
    impl<'g> CoordVisitor<Vec<Vec<u32>>> for SortVisitor<'g> {
        fn visit<T: Scalar>(mut self, points: &[Point2<T>]) -> Vec<Vec<u32>> {
            for (v, list) in self.adj.iter_mut().enumerate() {
                let origin = &points[v];
                list.sort_by(|&p, &q| {
                    let dp = (
                        points[p as usize].x.ref_sub(&origin.x),
                        points[p as usize].y.ref_sub(&origin.y),
                    );
                    let dq = (
                        points[q as usize].x.ref_sub(&origin.x),
                        points[q as usize].y.ref_sub(&origin.y),
                    );
                    cmp_ccw_from_positive_x(&dp, &dq).then(p.cmp(&q))
                });
            }
            self.adj
        }
    }
    with_scaled_coords(
        g.vertices(),
        SortVisitor {
            adj: g.adjacency(),
            _marker: std::marker::PhantomData,
        },
    )
}

/// All face cycles of a connected graph, as vertex sequences.
///
/// Walks the darts of the planar embedding induced by the coordinates: the
/// dart after `u -> v` is `v -> w` where `w` precedes `u` in the
/// counterclockwise neighbor order around `v`. Every bounded face comes out
/// as a counterclockwise cycle and the single unbounded face as a clockwise
/// cycle. The result is `(bounded, outer)`.
///
/// Only meaningful for a connected, geometrically valid graph with at least
/// one edge and no bridge-free assumptions violated; bridges simply appear
/// twice on one face cycle (such faces are not triangles, so triangulation
/// checks reject them).
fn face_cycles(g: &Pslg) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let ccw = ccw_neighbor_order(g);
    // Position of each neighbor in the ccw list, for O(1) successor lookup.
    let mut pos_of: Vec<std::collections::HashMap<u32, usize>> = ccw
        .iter()
        .map(|list| {
            list.iter()
                .enumerate()
                .map(|(i, &w)| (w, i))
                .collect::<std::collections::HashMap<u32, usize>>()
        })
        .collect();
    // Cheap shrink: HashMap per vertex is fine at these sizes.
    for m in &mut pos_of {
        m.shrink_to_fit();
    }

    let mut visited: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut bounded = Vec::new();
    let mut outer = Vec::new();

    struct AreaVisitor<'c> {
        cycles: &'c [Vec<u32>],
    }
    impl<'c> CoordVisitor<Vec<std::cmp::Ordering>> for AreaVisitor<'c> {
        fn visit<T: Scalar>(self, points: &[Point2<T>]) -> Vec<std::cmp::Ordering> {
            self.cycles
                .iter()
                .map(|cycle| signed_area_doubled(points, cycle).cmp(&T::zero()))
                .collect()
        }
    }

    let mut cycles = Vec::new();
    for &(a, b) in g.edges() {
        for &(u0, v0) in &[(a, b), (b, a)] {
            if visited.contains(&(u0, v0)) {
                continue;
            }
            let mut cycle = Vec::new();
            let (mut u, mut v) = (u0, v0);
            loop {
                visited.insert((u, v));
                cycle.push(u);
                let list = &ccw[v as usize];
                let idx = pos_of[v as usize][&u];
                let w = list[(idx + list.len() - 1) % list.len()];
                u = v;
                v = w;
                if (u, v) == (u0, v0) {
                    break;
                }
            }
            cycles.push(cycle);
        }
    }

    let signs = with_scaled_coords(g.vertices(), AreaVisitor { cycles: &cycles });
    for (cycle, sign) in cycles.into_iter().zip(signs) {
        if sign == std::cmp::Ordering::Greater {
            bounded.push(cycle);
        } else {
            outer.push(cycle);
        }
    }
    (bounded, outer)
}

/// Twice the signed area of the closed polyline `cycle` (counterclockwise
/// positive). Works for any walk, including ones that repeat vertices.
fn signed_area_doubled<T: Scalar>(points: &[Point2<T>], cycle: &[u32]) -> T {
    let mut acc = T::zero();
    for k in 0..cycle.len() {
        let p = &points[cycle[k] as usize];
        let q = &points[cycle[(k + 1) % cycle.len()] as usize];
        let term = p.x.ref_mul(&q.y).ref_sub(&q.x.ref_mul(&p.y));
        acc = acc.ref_add(&term);
    }
    acc
}

/// Why a graph failed to be accepted as a triangulation.
#[derive(Debug, thiserror::Error)]
pub enum TriangulationError {
    /// The underlying point/edge set violates the input contract.
    #[error("graph is not valid: {0}")]
    Invalid(Violation),
    /// Valid graph, but not a triangulation of its convex hull.
    #[error("graph is not a triangulation: {0}")]
    NotTriangulation(String),
}

/// A validated triangulation of the convex hull of its vertex set.
///
/// Construction checks everything: the graph must be valid, connected, have
/// at least one triangle, every bounded face must be a triangle, and the
/// bounded faces must tile the convex hull exactly (total area equal to the
/// hull area, which rules out holes and coverage gaps).
#[derive(Debug, Clone)]
pub struct Triangulation {
    pslg: Pslg,
    faces: Vec<[u32; 3]>,
}

impl Triangulation {
    /// Validates `pslg` as a triangulation and extracts its triangle faces.
    pub fn new(pslg: Pslg) -> Result<Triangulation, TriangulationError> {
        let report = validate(&pslg);
        if let Some(first) = report.violations.into_iter().next() {
            return Err(TriangulationError::Invalid(first));
        }
        Triangulation::build_faces(pslg)
    }

    /// Builds a triangulation for generated point sets whose geometric
    /// validity holds by construction, skipping the cubic validity scan
    /// (prohibitive for the largest generated instances) while keeping all
    /// face-structure checks. Also admits the degenerate two-point,
    /// single-edge instance produced by the dyadic generator's base case,
    /// which has no faces.
    pub(crate) fn new_presumed_valid(pslg: Pslg) -> Result<Triangulation, TriangulationError> {
        if pslg.vertex_count() == 2 && pslg.edge_count() == 1 {
            return Ok(Triangulation {
                pslg,
                faces: Vec::new(),
            });
        }
        Triangulation::build_faces(pslg)
    }

    fn build_faces(pslg: Pslg) -> Result<Triangulation, TriangulationError> {
        let n = pslg.vertex_count();
        if n < 3 {
            return Err(TriangulationError::NotTriangulation(format!(
                "{n} vertices cannot form a triangle"
            )));
        }
        if !pslg.is_connected() {
            return Err(TriangulationError::NotTriangulation(
                "graph is not connected".into(),
            ));
        }
        let (bounded, _outer) = face_cycles(&pslg);
        let mut faces = Vec::with_capacity(bounded.len());
        for cycle in &bounded {
            if cycle.len() != 3 {
                return Err(TriangulationError::NotTriangulation(format!(
                    "bounded face with {} sides",
                    cycle.len()
                )));
            }
            faces.push([cycle[0], cycle[1], cycle[2]]);
        }
        if faces.is_empty() {
            return Err(TriangulationError::NotTriangulation(
                "no bounded faces".into(),
            ));
        }

        // The bounded triangles must tile the convex hull: with a valid
        // embedding (no crossings) their interiors are disjoint, so it is
        // enough that the areas add up to the hull area.
        struct HullAreaVisitor<'f> {
            faces: &'f [[u32; 3]],
        }
        impl<'f> CoordVisitor<bool> for HullAreaVisitor<'f> {
            fn visit<T: Scalar>(self, points: &[Point2<T>]) -> bool {
                let hull: Vec<u32> = crate::geometry::convex_hull(points)
                    .expect("valid graph with n >= 3 has a hull")
                    .into_iter()
                    .map(|i| i as u32)
                    .collect();
                let hull_area = signed_area_doubled(points, &hull);
                let mut face_total = T::zero();
                for f in self.faces {
                    let a = signed_area_doubled(points, f);
                    face_total = face_total.ref_add(&a);
                }
                face_total == hull_area
            }
        }
        let tiles = with_scaled_coords(pslg.vertices(), HullAreaVisitor { faces: &faces });
        if !tiles {
            return Err(TriangulationError::NotTriangulation(
                "bounded faces do not tile the convex hull".into(),
            ));
        }

        // Every vertex must appear in some triangle: a hull tiling plus
        // general position forces this, but an isolated-in-face vertex would
        // have shown up as a validity or area failure already. Cheap check
        // for defense in depth.
        let mut used = vec![false; n];
        for f in &faces {
            for &v in f {
                used[v as usize] = true;
            }
        }
        if used.iter().any(|u| !u) {
            return Err(TriangulationError::NotTriangulation(
                "a vertex lies on no triangle".into(),
            ));
        }

        // Canonicalize: rotate each counterclockwise triple so its
        // smallest vertex leads, then order the face list.
        for f in &mut faces {
            let least = (0..3).min_by_key(|&i| f[i]).unwrap();
            f.rotate_left(least);
        }
        faces.sort_unstable();
        Ok(Triangulation { pslg, faces })
    }

    /// The underlying graph.
    pub fn pslg(&self) -> &Pslg {
        &self.pslg
    }

    /// Consumes the triangulation, returning the underlying graph.
    pub fn into_pslg(self) -> Pslg {
        self.pslg
    }

    /// The triangle faces, each counterclockwise with the smallest vertex
    /// first, sorted; indexable by face id.
    pub fn faces(&self) -> &[[u32; 3]] {
        &self.faces
    }

    /// The centroid of face `i` (exact rational coordinates).
    pub fn face_centroid(&self, i: usize) -> Point {
        let [a, b, c] = self.faces[i];
        let three = Rat::from_integer(BigInt::from(3));
        let pa = self.pslg.vertex(a);
        let pb = self.pslg.vertex(b);
        let pc = self.pslg.vertex(c);
        Point2 {
            x: (&pa.x + &pb.x + &pc.x) / &three,
            y: (&pa.y + &pb.y + &pc.y) / &three,
        }
    }
}

/// Whether the graph is a triangulation of the convex hull of its vertices.
pub fn is_triangulation(g: &Pslg) -> bool {
    Triangulation::new(g.clone()).is_ok()
}

/// The adjacency structure of a triangulation's bounded faces: two faces are
/// neighbors when they share an edge.
#[derive(Debug, Clone)]
pub struct DualGraph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl DualGraph {
    /// Number of dual nodes (= triangles).
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of dual edges (= interior edges of the triangulation).
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Face ids adjacent to face `i`, ascending.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// Whether the dual graph is a tree (connected and acyclic).
    pub fn is_tree(&self) -> bool {
        let n = self.adjacency.len();
        if n == 0 {
            return false;
        }
        if self.edge_count != n - 1 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1usize;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }
}

/// Builds the dual graph of a triangulation (faces adjacent when they share
/// an edge).
pub fn dual_graph(t: &Triangulation) -> DualGraph {
    use std::collections::HashMap;
    let mut owner: HashMap<(u32, u32), Vec<usize>> = HashMap::new();
    for (i, f) in t.faces().iter().enumerate() {
        for k in 0..3 {
            let (u, v) = (f[k], f[(k + 1) % 3]);
            owner.entry((u.min(v), u.max(v))).or_default().push(i);
        }
    }
    let mut adjacency = vec![Vec::new(); t.faces().len()];
    let mut edge_count = 0;
    let mut shared: Vec<(usize, usize)> = owner
        .into_values()
        .filter(|faces| faces.len() == 2)
        .map(|faces| (faces[0].min(faces[1]), faces[0].max(faces[1])))
        .collect();
    shared.sort_unstable();
    shared.dedup();
    for (i, j) in shared {
        adjacency[i].push(j);
        adjacency[j].push(i);
        edge_count += 1;
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    DualGraph {
        adjacency,
        edge_count,
    }
}

// ---------------------------------------------------------------------------
// JSON interchange
// ---------------------------------------------------------------------------
//
// Format:
//
// ```json
// {
//   "vertices": [[0, 0], ["1/3", "2/3"], [1.5, -2]],
//   "edges": [[0, 1], [1, 2]]
// }
// ```
//
// A coordinate is a JSON number (parsed exactly from its literal text, so
// `0.1` means exactly 1/10) or a string holding either a fraction `"p/q"` or
// a decimal literal. Unknown top-level keys are ignored on input. On output,
// integer coordinates are emitted as JSON integers and everything else as
// `"p/q"` in lowest terms; edges are sorted with the smaller endpoint first.

/// Parses a decimal literal (optional sign, digits, optional fraction,
/// optional exponent) into an exact rational.
pub(crate) fn parse_decimal(s: &str) -> Option<Rat> {
    let s = s.trim();
    let bytes = s.as_bytes();
    let mut i = 0;
    let negative = match bytes.first() {
        Some(b'-') => {
            i += 1;
            true
        }
        Some(b'+') => {
            i += 1;
            false
        }
        _ => false,
    };
    let int_start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    let int_digits = &s[int_start..i];
    let mut frac_digits = "";
    if i < bytes.len() && bytes[i] == b'.' {
        i += 1;
        let frac_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        frac_digits = &s[frac_start..i];
    }
    if int_digits.is_empty() && frac_digits.is_empty() {
        return None;
    }
    let mut exponent: i64 = 0;
    if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
        i += 1;
        let exp_start = i;
        if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
            i += 1;
        }
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        exponent = s[exp_start..i].parse().ok()?;
    }
    if i != bytes.len() {
        return None;
    }

    let mut mantissa = BigInt::zero();
    let ten = BigInt::from(10);
    for d in int_digits.bytes().chain(frac_digits.bytes()) {
        mantissa = mantissa * &ten + BigInt::from((d - b'0') as u32);
    }
    if negative {
        mantissa = -mantissa;
    }
    let net = exponent - frac_digits.len() as i64;
    let value = if net >= 0 {
        Rat::from_integer(mantissa * ten.pow(net as u32))
    } else {
        Rat::new(mantissa, ten.pow((-net) as u32))
    };
    Some(value)
}

fn parse_coordinate(value: &serde_json::Value, context: &str) -> Result<Rat, PslgError> {
    match value {
        serde_json::Value::Number(n) => parse_decimal(&n.to_string())
            .ok_or_else(|| format_err(format!("{context}: unparseable number {n}"))),
        serde_json::Value::String(s) => {
            if let Some((num, den)) = s.split_once('/') {
                let p = BigInt::from_str(num.trim()).map_err(|_| {
                    format_err(format!("{context}: invalid fraction numerator in {s:?}"))
                })?;
                let q = BigInt::from_str(den.trim()).map_err(|_| {
                    format_err(format!("{context}: invalid fraction denominator in {s:?}"))
                })?;
                if q.is_zero() {
                    return Err(format_err(format!("{context}: zero denominator in {s:?}")));
                }
                Ok(Rat::new(p, q))
            } else {
                parse_decimal(s)
                    .ok_or_else(|| format_err(format!("{context}: unparseable coordinate {s:?}")))
            }
        }
        other => Err(format_err(format!(
            "{context}: expected a number or string, found {other}"
        ))),
    }
}

fn coordinate_to_json(r: &Rat) -> serde_json::Value {
    if r.denom().is_one() {
        if let Ok(n) = serde_json::Number::from_str(&r.numer().to_string()) {
            return serde_json::Value::Number(n);
        }
    }
    serde_json::Value::String(format!("{}/{}", r.numer(), r.denom()))
}

impl Pslg {
    /// Parses a graph from its JSON representation.
    pub fn from_json_str(text: &str) -> Result<Pslg, PslgError> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let obj = value
            .as_object()
            .ok_or_else(|| format_err("top level must be a JSON object"))?;
        let vertices_value = obj
            .get("vertices")
            .ok_or_else(|| format_err("missing \"vertices\" key"))?;
        let edges_value = obj
            .get("edges")
            .ok_or_else(|| format_err("missing \"edges\" key"))?;

        let vertex_items = vertices_value
            .as_array()
            .ok_or_else(|| format_err("\"vertices\" must be an array"))?;
        let mut vertices = Vec::with_capacity(vertex_items.len());
        for (i, item) in vertex_items.iter().enumerate() {
            let pair = item
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| format_err(format!("vertex {i} must be a pair [x, y]")))?;
            let x = parse_coordinate(&pair[0], &format!("vertex {i} x"))?;
            let y = parse_coordinate(&pair[1], &format!("vertex {i} y"))?;
            vertices.push(Point2 { x, y });
        }

        let edge_items = edges_value
            .as_array()
            .ok_or_else(|| format_err("\"edges\" must be an array"))?;
        let mut edges = Vec::with_capacity(edge_items.len());
        for (i, item) in edge_items.iter().enumerate() {
            let pair = item
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| format_err(format!("edge {i} must be a pair [u, v]")))?;
            let u = pair[0]
                .as_u64()
                .and_then(|v| u32::try_from(v).ok())
                .ok_or_else(|| format_err(format!("edge {i}: endpoints must be vertex indices")))?;
            let v = pair[1]
                .as_u64()
                .and_then(|v| u32::try_from(v).ok())
                .ok_or_else(|| format_err(format!("edge {i}: endpoints must be vertex indices")))?;
            edges.push((u, v));
        }

        Pslg::new(vertices, edges)
    }

    /// Serializes the graph as compact JSON (deterministic: sorted edges,
    /// integer coordinates as numbers, others as `"p/q"`).
    pub fn to_json_string(&self) -> String {
        let vertices: Vec<serde_json::Value> = self
            .vertices
            .iter()
            .map(|p| {
                serde_json::Value::Array(vec![coordinate_to_json(&p.x), coordinate_to_json(&p.y)])
            })
            .collect();
        let edges: Vec<serde_json::Value> = self
            .edges
            .iter()
            .map(|&(u, v)| serde_json::Value::Array(vec![u.into(), v.into()]))
            .collect();
        let mut obj = serde_json::Map::new();
        obj.insert("vertices".into(), serde_json::Value::Array(vertices));
        obj.insert("edges".into(), serde_json::Value::Array(edges));
        serde_json::Value::Object(obj).to_string()
    }

    /// Reads a graph from a JSON file.
    pub fn load(path: impl AsRef<Path>) -> Result<Pslg, PslgError> {
        let text = std::fs::read_to_string(path)?;
        Pslg::from_json_str(&text)
    }

    /// Writes the graph to a JSON file (compact, with a trailing newline).
    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), PslgError> {
        let mut text = self.to_json_string();
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point_i64;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    /// Unit square with both diagonals would cross; with one diagonal it is
    /// a triangulation.
    fn square_with_diagonal() -> Pslg {
        // Perturbed square: a true square has collinear... no, a square has
        // no 3 collinear points. Corners (0,0), (2,0), (2,3), (0,2) avoid
        // even symmetric degeneracies.
        Pslg::new(
            vec![
                point_i64(0, 0),
                point_i64(2, 0),
                point_i64(2, 3),
                point_i64(0, 2),
            ],
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
        )
        .unwrap()
    }

    #[test]
    fn new_normalizes_edges() {
        let g = Pslg::new(
            vec![point_i64(0, 0), point_i64(1, 0), point_i64(0, 1)],
            vec![(2, 0), (0, 1), (1, 0), (1, 2)],
        )
        .unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert!(g.has_edge(2, 0));
        assert!(!g.has_edge(0, 0));
        assert_eq!(g.adjacency(), vec![vec![1, 2], vec![0, 2], vec![0, 1]]);
    }

    #[test]
    fn new_rejects_bad_edges() {
        let pts = vec![point_i64(0, 0), point_i64(1, 0)];
        assert!(matches!(
            Pslg::new(pts.clone(), vec![(0, 2)]),
            Err(PslgError::EdgeOutOfRange(0, 2, 2))
        ));
        assert!(matches!(
            Pslg::new(pts, vec![(1, 1)]),
            Err(PslgError::SelfLoop(1))
        ));
    }

    #[test]
    fn validate_accepts_valid_graph() {
        assert!(validate(&square_with_diagonal()).is_valid());
    }

    #[test]
    fn validate_finds_duplicates() {
        let g = Pslg::new(
            vec![point_i64(0, 0), point_i64(1, 5), point_i64(0, 0)],
            vec![],
        )
        .unwrap();
        assert_eq!(
            validate(&g).violations,
            vec![Violation::DuplicatePoints { first: 0, second: 2 }]
        );
    }

    #[test]
    fn validate_finds_collinear_triples() {
        let g = Pslg::new(
            vec![
                point_i64(0, 0),
                point_i64(1, 1),
                point_i64(3, 3),
                point_i64(5, 0),
            ],
            vec![],
        )
        .unwrap();
        assert_eq!(
            validate(&g).violations,
            vec![Violation::CollinearTriple { a: 0, b: 1, c: 2 }]
        );
    }

    #[test]
    fn validate_finds_crossings() {
        // Diagonals of a quadrilateral cross.
        let g = Pslg::new(
            vec![
                point_i64(0, 0),
                point_i64(4, 1),
                point_i64(5, 6),
                point_i64(1, 5),
            ],
            vec![(0, 2), (1, 3)],
        )
        .unwrap();
        assert_eq!(
            validate(&g).violations,
            vec![Violation::EdgesCross {
                first: (0, 2),
                second: (1, 3)
            }]
        );
    }

    #[test]
    fn validate_shared_endpoint_is_not_a_crossing() {
        let g = Pslg::new(
            vec![point_i64(0, 0), point_i64(4, 1), point_i64(1, 5)],
            vec![(0, 1), (0, 2), (1, 2)],
        )
        .unwrap();
        assert!(validate(&g).is_valid());
    }

    #[test]
    fn validate_finds_vertex_on_edge() {
        // Vertex 2 sits in the interior of edge (0, 1); the triple is also
        // collinear, so both findings appear.
        let g = Pslg::new(
            vec![
                point_i64(0, 0),
                point_i64(4, 4),
                point_i64(2, 2),
                point_i64(3, 0),
            ],
            vec![(0, 1)],
        )
        .unwrap();
        let report = validate(&g);
        assert!(report
            .violations
            .contains(&Violation::CollinearTriple { a: 0, b: 1, c: 2 }));
        assert!(report.violations.contains(&Violation::VertexOnEdge {
            vertex: 2,
            edge: (0, 1)
        }));
    }

    #[test]
    fn validate_handles_rational_coordinates() {
        // Same geometry as the collinear test, shrunk by 1/7.
        let g = Pslg::new(
            vec![
                Point2 { x: rat(0, 7), y: rat(0, 7) },
                Point2 { x: rat(1, 7), y: rat(1, 7) },
                Point2 { x: rat(3, 7), y: rat(3, 7) },
                Point2 { x: rat(5, 7), y: rat(0, 7) },
            ],
            vec![],
        )
        .unwrap();
        assert_eq!(
            validate(&g).violations,
            vec![Violation::CollinearTriple { a: 0, b: 1, c: 2 }]
        );
    }

    #[test]
    fn faces_of_square_with_diagonal() {
        let t = Triangulation::new(square_with_diagonal()).unwrap();
        assert_eq!(t.faces(), &[[0, 1, 2], [0, 2, 3]]);
        let d = dual_graph(&t);
        assert_eq!(d.node_count(), 2);
        assert_eq!(d.edge_count(), 1);
        assert!(d.is_tree());
    }

    #[test]
    fn face_extraction_satisfies_euler_formula() {
        let t = Triangulation::new(square_with_diagonal()).unwrap();
        let g = t.pslg();
        let (bounded, outer) = face_cycles(g);
        // V - E + F = 2 for connected planar graphs (F includes the outer face).
        let v = g.vertex_count() as i64;
        let e = g.edge_count() as i64;
        let f = (bounded.len() + outer.len()) as i64;
        assert_eq!(v - e + f, 2);
        assert_eq!(outer.len(), 1);
        assert_eq!(outer[0].len(), 4);
    }

    #[test]
    fn square_without_diagonal_is_not_a_triangulation() {
        let g = Pslg::new(
            vec![
                point_i64(0, 0),
                point_i64(2, 0),
                point_i64(2, 3),
                point_i64(0, 2),
            ],
            vec![(0, 1), (1, 2), (2, 3), (3, 0)],
        )
        .unwrap();
        assert!(!is_triangulation(&g));
        assert!(matches!(
            Triangulation::new(g),
            Err(TriangulationError::NotTriangulation(_))
        ));
    }

    #[test]
    fn hull_gap_is_not_a_triangulation() {
        // An interior vertex connected to only two hull corners leaves a
        // non-triangular face; also a plain triangle missing its interior
        // point's edges fails the tiling check.
        let g = Pslg::new(
            vec![
                point_i64(0, 0),
                point_i64(6, 0),
                point_i64(3, 6),
                point_i64(3, 2),
            ],
            vec![(0, 1), (1, 2), (2, 0)],
        )
        .unwrap();
        // Vertex 3 is strictly inside the triangle but unused: bounded face
        // area equals hull area, yet vertex 3 lies in no face -> rejected.
        assert!(!is_triangulation(&g));

        let g2 = Pslg::new(
            vec![
                point_i64(0, 0),
                point_i64(6, 0),
                point_i64(3, 6),
                point_i64(3, 2),
            ],
            vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)],
        )
        .unwrap();
        let t = Triangulation::new(g2).unwrap();
        assert_eq!(t.faces().len(), 3);
        // With an interior vertex the dual is a 3-cycle, not a tree.
        let d = dual_graph(&t);
        assert_eq!(d.node_count(), 3);
        assert_eq!(d.edge_count(), 3);
        assert!(!d.is_tree());
    }

    #[test]
    fn fan_triangulation_dual_is_a_path() {
        // Convex pentagon in strictly convex position, fanned from vertex 0.
        let g = Pslg::new(
            vec![
                point_i64(0, 0),
                point_i64(4, -1),
                point_i64(7, 1),
                point_i64(6, 5),
                point_i64(1, 4),
            ],
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 2),
                (0, 3),
            ],
        )
        .unwrap();
        let t = Triangulation::new(g).unwrap();
        assert_eq!(t.faces().len(), 3);
        let d = dual_graph(&t);
        assert!(d.is_tree());
        assert_eq!(d.edge_count(), 2);
        // A fan's dual is a path: max degree 2.
        assert!((0..d.node_count()).all(|i| d.neighbors(i).len() <= 2));
    }

    #[test]
    fn face_centroid_is_exact() {
        let t = Triangulation::new(square_with_diagonal()).unwrap();
        let c = t.face_centroid(0); // face [0,1,2]: (0,0), (2,0), (2,3)
        assert_eq!(c.x, rat(4, 3));
        assert_eq!(c.y, rat(1, 1));
    }

    #[test]
    fn json_round_trip_preserves_graph() {
        let g = Pslg::new(
            vec![
                point_i64(0, 0),
                Point2 { x: rat(1, 3), y: rat(-2, 3) },
                point_i64(5, 7),
            ],
            vec![(0, 1), (1, 2)],
        )
        .unwrap();
        let text = g.to_json_string();
        let back = Pslg::from_json_str(&text).unwrap();
        assert_eq!(g, back);
        // Deterministic output.
        assert_eq!(text, back.to_json_string());
    }

    #[test]
    fn json_accepts_numbers_strings_and_fractions() {
        let text = r#"{
            "vertices": [[0, 0], [1.5, "-2"], ["1/3", "0.25"], [2e3, "-1.5e-2"]],
            "edges": [[0, 1], [1, 0], [2, 3]],
            "comment": "unknown keys are ignored"
        }"#;
        let g = Pslg::from_json_str(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(g.vertex(1).x, rat(3, 2));
        assert_eq!(g.vertex(1).y, rat(-2, 1));
        assert_eq!(g.vertex(2).x, rat(1, 3));
        assert_eq!(g.vertex(2).y, rat(1, 4));
        assert_eq!(g.vertex(3).x, rat(2000, 1));
        assert_eq!(g.vertex(3).y, rat(-3, 200));
    }

    #[test]
    fn json_number_literals_parse_exactly() {
        // 0.1 is not representable in binary floating point; the literal
        // text must survive into the exact value.
        let g = Pslg::from_json_str(r#"{"vertices": [[0.1, 0]], "edges": []}"#).unwrap();
        assert_eq!(g.vertex(0).x, rat(1, 10));
    }

    #[test]
    fn json_rejects_malformed_input() {
        for text in [
            "[]",
            "{\"vertices\": []}",
            "{\"vertices\": 3, \"edges\": []}",
            "{\"vertices\": [[0]], \"edges\": []}",
            "{\"vertices\": [[0, \"x\"]], \"edges\": []}",
            "{\"vertices\": [[\"1/0\", 0]], \"edges\": []}",
            "{\"vertices\": [[0, 0]], \"edges\": [[0, 1]]}",
            "{\"vertices\": [[0, 0]], \"edges\": [[0, 0]]}",
            "{\"vertices\": [[0, 0]], \"edges\": [[0, -1]]}",
            "not json",
        ] {
            assert!(Pslg::from_json_str(text).is_err(), "accepted: {text}");
        }
    }

    #[test]
    fn save_and_load_round_trip() {
        let dir = std::env::temp_dir().join("convex-census-test-pslg");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("roundtrip.json");
        let g = square_with_diagonal();
        g.save(&path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.ends_with('\n'));
        let back = Pslg::load(&path).unwrap();
        assert_eq!(g, back);
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn parse_decimal_handles_edge_cases() {
        assert_eq!(parse_decimal("42"), Some(rat(42, 1)));
        assert_eq!(parse_decimal("-0.5"), Some(rat(-1, 2)));
        assert_eq!(parse_decimal("+.25"), Some(rat(1, 4)));
        assert_eq!(parse_decimal("3."), Some(rat(3, 1)));
        assert_eq!(parse_decimal("1e2"), Some(rat(100, 1)));
        assert_eq!(parse_decimal("12.5e-1"), Some(rat(5, 4)));
        assert_eq!(parse_decimal(""), None);
        assert_eq!(parse_decimal("."), None);
        assert_eq!(parse_decimal("1.2.3"), None);
        assert_eq!(parse_decimal("1/2"), None);
        assert_eq!(parse_decimal("abc"), None);
    }
}
