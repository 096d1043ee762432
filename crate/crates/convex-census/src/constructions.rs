//! Generators for extremal instances and the convexification map.
//!
//! * [`arc_points`] — points on a rational convex arc (the parabola),
//!   the exact stand-in for "points on a circular arc": every property
//!   that matters (convex position, arc order = lex order, general
//!   position) holds, with integer coordinates.
//! * [`balanced_triangulation`] — the dyadic triangulation `T_k` on
//!   `2^k + 1` arc points whose dual is a full binary tree; the building
//!   block of the lower-bound constructions.
//! * [`concat_construction`] — `m` copies of `T_k` chained along the arc,
//!   with the inner polygon of chords fan-triangulated from vertex 0.
//! * [`convexify`] — maps a triangulation with a marked face to a plane
//!   graph on points in convex position, injectively on the convex
//!   polygons whose interior contains the marked face.

use std::cmp::Ordering;
use std::ops::ControlFlow;

use num_traits::{One, Zero};

use crate::counting::{enumerate_convex_polygons, ConvexPolygon};
use crate::geometry::{cmp_ccw_from_positive_x, orientation, Orientation};
use crate::pslg::{Pslg, Triangulation};
use crate::{BigCount, Point, Rat};

/// Errors from the instance generators.
#[derive(Debug, thiserror::Error)]
pub enum ConstructionError {
    /// A size parameter is outside the supported range.
    #[error("{what} = {got} is outside the supported range {min}..={max}")]
    SizeGuard {
        what: &'static str,
        got: u64,
        min: u64,
        max: u64,
    },
    /// The face index does not name a bounded face.
    #[error("face {face} is out of range: the triangulation has {faces} bounded faces")]
    FaceOutOfRange { face: usize, faces: usize },
    /// Every candidate anchor inside the marked face is collinear with two
    /// vertices, so no general-position anchor exists among the
    /// deterministic choices.
    #[error(
        "every candidate anchor in face {face} is collinear with two vertices; \
         perturb the input coordinates to break the symmetry and retry"
    )]
    AnchorDegenerate { face: usize },
    /// The generated graph failed its structural self-check (a bug if it
    /// ever happens).
    #[error("generated instance failed its self-check: {0}")]
    SelfCheck(String),
}

fn guard(what: &'static str, got: u64, min: u64, max: u64) -> Result<(), ConstructionError> {
    if got < min || got > max {
        return Err(ConstructionError::SizeGuard {
            what,
            got,
            min,
            max,
        });
    }
    Ok(())
}

/// `n` points on the parabola: `(i, i^2)` for `i = 0..n-1`.
///
/// They are in strictly convex position (no three collinear, every point a
/// hull vertex), and the order along the arc equals lexicographic order.
pub fn arc_points(n: usize) -> Vec<Point> {
    (0..n as i64).map(|i| crate::point_i64(i, i * i)).collect()
}

/// The dyadic balanced triangulation `T_k` on `2^k + 1` arc points.
///
/// Every span `[lo, hi]` with `hi - lo >= 2` contributes the chord
/// `(lo, hi)` and recurses into its halves `[lo, mid]` and `[mid, hi]`,
/// `mid = (lo + hi) / 2`; consecutive points are joined by arc edges. For
/// `k >= 1` the dual graph is a full binary tree with `2^{k-1}` leaves.
///
/// `k = 0` produces the degenerate base instance: two points joined by a
/// single edge (no faces).
pub fn balanced_triangulation(k: u32) -> Result<Triangulation, ConstructionError> {
    guard("k", k as u64, 0, 20)?;
    let n = (1usize << k) + 1;
    let mut edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
    add_dyadic_chords(0, (n - 1) as u32, &mut edges);
    let pslg = Pslg::new(arc_points(n), edges)
        .map_err(|e| ConstructionError::SelfCheck(e.to_string()))?;
    Triangulation::new_presumed_valid(pslg).map_err(|e| ConstructionError::SelfCheck(e.to_string()))
}

/// Adds the chord of every dyadic span of length >= 2 inside `[lo, hi]`.
fn add_dyadic_chords(lo: u32, hi: u32, edges: &mut Vec<(u32, u32)>) {
    if hi - lo < 2 {
        return;
    }
    edges.push((lo, hi));
    let mid = lo + (hi - lo) / 2;
    add_dyadic_chords(lo, mid, edges);
    add_dyadic_chords(mid, hi, edges);
}

/// `m` copies of `T_k` concatenated along one arc, consecutive copies
/// sharing a vertex, with the inner polygon of copy-spanning chords
/// fan-triangulated from vertex 0.
///
/// The result is a triangulation on `n = m * 2^k + 1` arc points; copy `j`
/// occupies indices `[j * 2^k, (j+1) * 2^k]`. With `m = 1` it equals
/// [`balanced_triangulation`]`(k)`.
pub fn concat_construction(k: u32, m: u32) -> Result<Triangulation, ConstructionError> {
    guard("k", k as u64, 1, 20)?;
    guard("m", m as u64, 1, u64::MAX)?;
    let span = 1u64 << k;
    let n_minus_1 = (m as u64) * span;
    guard("m * 2^k + 1", n_minus_1 + 1, 2, 2000)?;
    let n = (n_minus_1 + 1) as usize;

    let mut edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
    for j in 0..m {
        let lo = j * span as u32;
        add_dyadic_chords(lo, lo + span as u32, &mut edges);
    }
    // Fan-triangulate the inner polygon on {0, 2^k, 2*2^k, ..., m*2^k}:
    // its boundary chords are already present from the copies; add the
    // diagonals from vertex 0 and the closing hull edge.
    for j in 2..=m {
        edges.push((0, j * span as u32));
    }
    let pslg = Pslg::new(arc_points(n), edges)
        .map_err(|e| ConstructionError::SelfCheck(e.to_string()))?;
    Triangulation::new_presumed_valid(pslg).map_err(|e| ConstructionError::SelfCheck(e.to_string()))
}

/// The convexification's certificate: where each vertex went and which
/// target path each source edge became — enough to transport any convex
/// polygon whose interior contains the anchor into the target graph, and
/// injectively so.
#[derive(Debug, Clone)]
pub struct PolygonMap {
    source: Pslg,
    anchor: Point,
    placement: Vec<u32>,
    /// Per source edge, oriented so the anchor sees `p` then `q`
    /// counterclockwise: the target path from `placement[p]` to
    /// `placement[q]`; sorted by the oriented pair.
    edge_images: Vec<((u32, u32), Vec<u32>)>,
}

impl PolygonMap {
    /// The source graph the map was built from.
    pub fn source(&self) -> &Pslg {
        &self.source
    }

    /// The anchor point strictly inside the marked face.
    pub fn anchor(&self) -> &Point {
        &self.anchor
    }

    /// Target vertex id of each source vertex (its rank in the
    /// counterclockwise angular order around the anchor).
    pub fn placement(&self) -> &[u32] {
        &self.placement
    }

    /// Every source edge with its target image path, keyed by the edge
    /// oriented counterclockwise as seen from the anchor.
    pub fn edge_images(&self) -> &[((u32, u32), Vec<u32>)] {
        &self.edge_images
    }

    /// The target path of the source edge `p -> q`, when that is the
    /// stored (counterclockwise from the anchor) orientation.
    pub fn edge_image(&self, p: u32, q: u32) -> Option<&[u32]> {
        self.edge_images
            .binary_search_by_key(&(p, q), |(e, _)| *e)
            .ok()
            .map(|i| self.edge_images[i].1.as_slice())
    }

    /// True when the anchor lies strictly inside the polygon.
    pub fn contains_anchor(&self, polygon: &ConvexPolygon) -> bool {
        strictly_inside(&self.anchor, polygon.cycle(), self.source.vertices())
    }

    /// The image of a convex polygon whose interior contains the anchor:
    /// the concatenation of its edges' image paths, as a canonical target
    /// cycle (least vertex first, counterclockwise). `None` when the
    /// polygon does not strictly contain the anchor — the map is only
    /// defined (and injective) there.
    pub fn polygon_image(&self, polygon: &ConvexPolygon) -> Option<Vec<u32>> {
        if !self.contains_anchor(polygon) {
            return None;
        }
        let cycle = polygon.cycle();
        let mut image = Vec::new();
        for k in 0..cycle.len() {
            let p = cycle[k];
            let q = cycle[(k + 1) % cycle.len()];
            // The anchor is inside, so it sees the counterclockwise cycle
            // counterclockwise: every traversed edge is stored as-is.
            let path = self
                .edge_image(p, q)
                .expect("anchor-containing cycles traverse edges counterclockwise");
            image.extend_from_slice(&path[..path.len() - 1]);
        }
        let least = image
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .expect("polygons are nonempty")
            .0;
        image.rotate_left(least);
        Some(image)
    }
}

/// Midpoint of two points, exactly.
fn midpoint(a: &Point, b: &Point) -> Point {
    let half = Rat::new(1.into(), 2.into());
    Point {
        x: (&a.x + &b.x) * &half,
        y: (&a.y + &b.y) * &half,
    }
}

/// True when `o` is collinear with no two of the `vertices` — the
/// extended point set is in general position.
fn in_general_position(o: &Point, vertices: &[Point]) -> bool {
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            if orientation(o, &vertices[i], &vertices[j]) == Orientation::Collinear {
                return false;
            }
        }
    }
    true
}

/// Where the ray from `o` through `p` meets the closed segment `[u, v]`:
/// the ray parameter `s > 0` (the hit is `o + s * (p - o)`, so `s >= 1`
/// puts `p` between `o` and the hit) and the hit point. `None` when they
/// miss or run parallel.
fn ray_hits_segment(o: &Point, p: &Point, u: &Point, v: &Point) -> Option<(Rat, Point)> {
    let d = (&p.x - &o.x, &p.y - &o.y);
    let e = (&v.x - &u.x, &v.y - &u.y);
    let denom = &d.0 * &e.1 - &d.1 * &e.0;
    if denom.is_zero() {
        // Parallel. Coincident lines would need the anchor collinear with
        // the segment's endpoints, which general position excludes.
        return None;
    }
    let ou = (&u.x - &o.x, &u.y - &o.y);
    let s = (&ou.0 * &e.1 - &ou.1 * &e.0) / &denom;
    let w = (&ou.0 * &d.1 - &ou.1 * &d.0) / &denom;
    if s <= Rat::zero() || w < Rat::zero() || w > Rat::one() {
        return None;
    }
    let hit = Point {
        x: &o.x + &(&s * &d.0),
        y: &o.y + &(&s * &d.1),
    };
    Some((s, hit))
}

/// True when some point of `points` lies strictly inside the
/// (nondegenerate) triangle `(o, a, b)`.
fn triangle_has_interior_vertex(o: &Point, a: &Point, b: &Point, points: &[Point]) -> bool {
    let side = orientation(o, a, b);
    debug_assert_ne!(side, Orientation::Collinear);
    points.iter().any(|x| {
        orientation(o, a, x) == side
            && orientation(a, b, x) == side
            && orientation(b, o, x) == side
    })
}

/// The convexification edge rule: `{p, q}` becomes a target edge when some
/// source edge admits an empty shadow triangle — the rays from the anchor
/// through `p` and `q` meet the edge at `a` and `b` with `p` on `[o, a]`,
/// `q` on `[o, b]`, and no vertex strictly inside the triangle `(o, a, b)`.
fn shadow_edge_exists(
    o: &Point,
    points: &[Point],
    edges: &[(u32, u32)],
    p: usize,
    q: usize,
) -> bool {
    let one = Rat::one();
    for &(eu, ev) in edges {
        let (u, v) = (&points[eu as usize], &points[ev as usize]);
        let Some((sp, a)) = ray_hits_segment(o, &points[p], u, v) else {
            continue;
        };
        if sp < one {
            continue;
        }
        let Some((sq, b)) = ray_hits_segment(o, &points[q], u, v) else {
            continue;
        };
        if sq < one {
            continue;
        }
        if !triangle_has_interior_vertex(o, &a, &b, points) {
            return true;
        }
    }
    false
}

/// True when `c` lies strictly inside the counterclockwise cycle.
fn strictly_inside(c: &Point, cycle: &[u32], points: &[Point]) -> bool {
    (0..cycle.len()).all(|k| {
        let p = &points[cycle[k] as usize];
        let q = &points[cycle[(k + 1) % cycle.len()] as usize];
        orientation(p, q, c) == Orientation::Ccw
    })
}

/// Maps a triangulation with a marked bounded face to a plane graph on the
/// same number of points in convex position, together with the
/// [`PolygonMap`] that carries every convex polygon containing the face
/// injectively to a convex cycle of the output.
///
/// The anchor is the face centroid (or, should the centroid be collinear
/// with two vertices, the first midpoint between the centroid and a face
/// vertex that is not). Vertices are placed on [`arc_points`] in their
/// angular order around the anchor. A pair becomes a target edge exactly
/// when some source edge admits an empty shadow triangle for it (see
/// `shadow_edge_exists`); the image path of a source edge routes through
/// the vertices inside its anchor triangle in angular order.
pub fn convexify(
    t: &Triangulation,
    face: usize,
) -> Result<(Pslg, PolygonMap), ConstructionError> {
    let faces = t.faces().len();
    if face >= faces {
        return Err(ConstructionError::FaceOutOfRange { face, faces });
    }
    let source = t.pslg();
    let points = source.vertices();
    let n = source.vertex_count();

    let centroid = t.face_centroid(face);
    let mut candidates = vec![centroid.clone()];
    for &v in &t.faces()[face] {
        candidates.push(midpoint(&centroid, source.vertex(v)));
    }
    let anchor = candidates
        .into_iter()
        .find(|o| in_general_position(o, points))
        .ok_or(ConstructionError::AnchorDegenerate { face })?;

    // Angular order around the anchor fixes the placement on the arc.
    let direction = |v: u32| {
        let p = &points[v as usize];
        (&p.x - &anchor.x, &p.y - &anchor.y)
    };
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_by(|&i, &j| cmp_ccw_from_positive_x(&direction(i), &direction(j)));
    let mut placement = vec![0u32; n];
    for (pos, &v) in order.iter().enumerate() {
        placement[v as usize] = pos as u32;
    }

    let mut target_edges = Vec::new();
    for p in 0..n {
        for q in (p + 1)..n {
            if shadow_edge_exists(&anchor, points, source.edges(), p, q) {
                target_edges.push((placement[p], placement[q]));
            }
        }
    }
    let target = Pslg::new(arc_points(n), target_edges)
        .map_err(|e| ConstructionError::SelfCheck(e.to_string()))?;

    let mut edge_images = Vec::with_capacity(source.edge_count());
    for &(eu, ev) in source.edges() {
        let (p, q) = match orientation(&anchor, &points[eu as usize], &points[ev as usize]) {
            Orientation::Ccw => (eu, ev),
            Orientation::Cw => (ev, eu),
            Orientation::Collinear => {
                unreachable!("the anchor is in general position with the vertices")
            }
        };
        let (pp, pq) = (&points[p as usize], &points[q as usize]);
        let mut inside: Vec<u32> = (0..n as u32)
            .filter(|&x| {
                let px = &points[x as usize];
                orientation(&anchor, pp, px) == Orientation::Ccw
                    && orientation(pp, pq, px) == Orientation::Ccw
                    && orientation(pq, &anchor, px) == Orientation::Ccw
            })
            .collect();
        // The triangle spans less than a half turn from the anchor, so
        // counterclockwise order inside it is a plain orientation test.
        inside.sort_by(|&x, &y| {
            match orientation(&anchor, &points[x as usize], &points[y as usize]) {
                Orientation::Ccw => Ordering::Less,
                Orientation::Cw => Ordering::Greater,
                Orientation::Collinear => {
                    unreachable!("the anchor is in general position with the vertices")
                }
            }
        });
        let mut path = Vec::with_capacity(inside.len() + 2);
        path.push(placement[p as usize]);
        path.extend(inside.iter().map(|&x| placement[x as usize]));
        path.push(placement[q as usize]);
        if let Some(w) = path.windows(2).find(|w| !target.has_edge(w[0], w[1])) {
            return Err(ConstructionError::SelfCheck(format!(
                "edge image step {:?} is not a target edge",
                w
            )));
        }
        edge_images.push(((p, q), path));
    }
    edge_images.sort_unstable_by_key(|(e, _)| *e);

    let map = PolygonMap {
        source: source.clone(),
        anchor,
        placement,
        edge_images,
    };
    Ok((target, map))
}

/// Largest vertex count [`count_containing_face`] accepts; the count walks
/// every convex polygon of the instance.
pub const MAX_CONTAINING_FACE_VERTICES: usize = 22;

/// Counts the convex polygons of `t` whose interior strictly contains the
/// given bounded face (equivalently, its centroid — a polygon of a
/// triangulation contains either all of a face's interior or none of it).
pub fn count_containing_face(
    t: &Triangulation,
    face: usize,
) -> Result<BigCount, ConstructionError> {
    let faces = t.faces().len();
    if face >= faces {
        return Err(ConstructionError::FaceOutOfRange { face, faces });
    }
    guard(
        "vertex count",
        t.pslg().vertex_count() as u64,
        0,
        MAX_CONTAINING_FACE_VERTICES as u64,
    )?;
    let centroid = t.face_centroid(face);
    let points = t.pslg().vertices();
    let mut count = BigCount::zero();
    enumerate_convex_polygons(t.pslg(), |poly| {
        if strictly_inside(&centroid, poly.cycle(), points) {
            count += 1u32;
        }
        ControlFlow::Continue(())
    })
    .map_err(|e| ConstructionError::SelfCheck(e.to_string()))?;
    Ok(count)
}
