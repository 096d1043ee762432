//! Shared helpers for the integration tests: deterministic, seeded
//! generators of random valid graphs and random triangulations.
//!
//! Each integration test target compiles this module independently and
//! uses its own subset of the helpers.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use convex_census::geometry::{orientation, Orientation};
use convex_census::pslg::{validate, Pslg, Triangulation};
use convex_census::{point_i64, Point};

/// A reproducible random generator for test instances.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn collinear(a: &Point, b: &Point, c: &Point) -> bool {
    orientation(a, b, c) == Orientation::Collinear
}

/// `n` random integer points in the `span x span` grid, in general
/// position (pairwise distinct, no three collinear), by rejection.
pub fn random_points(rng: &mut ChaCha8Rng, n: usize, span: i64) -> Vec<Point> {
    assert!(span >= 4, "the grid must leave room for general position");
    let mut points: Vec<Point> = Vec::with_capacity(n);
    'next_point: while points.len() < n {
        let p = point_i64(rng.gen_range(0..span), rng.gen_range(0..span));
        if points.contains(&p) {
            continue 'next_point;
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if collinear(&points[i], &points[j], &p) {
                    continue 'next_point;
                }
            }
        }
        points.push(p);
    }
    points
}

/// A random valid graph: general-position points plus a random maximal-ish
/// noncrossing subset of the candidate edges, kept only when `validate`
/// stays clean.
pub fn random_valid_pslg(rng: &mut ChaCha8Rng, n: usize, span: i64) -> Pslg {
    let points = random_points(rng, n, span);
    let mut candidates: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
        .collect();
    candidates.shuffle(rng);
    // Keep roughly two thirds of the candidates so sparse graphs appear too.
    let keep = rng.gen_range(candidates.len() * 1 / 3..=candidates.len());
    let mut chosen: Vec<(u32, u32)> = Vec::new();
    for &edge in candidates.iter().take(keep) {
        let mut attempt = chosen.clone();
        attempt.push(edge);
        let g = Pslg::new(points.clone(), attempt).expect("candidate edges are well-formed");
        if validate(&g).is_valid() {
            chosen.push(edge);
        }
    }
    Pslg::new(points, chosen).expect("validated edge set stays well-formed")
}

/// A random triangulation of `n` general-position points, built by the
/// incremental scan: points are inserted in lexicographic order, each new
/// point connected to every hull vertex it sees.
pub fn random_triangulation(rng: &mut ChaCha8Rng, n: usize, span: i64) -> Triangulation {
    assert!(n >= 3, "a triangulation needs at least three points");
    let mut points = random_points(rng, n, span);
    points.sort_by(|a, b| convex_census::geometry::lex_cmp(a, b));

    let mut edges: Vec<(u32, u32)> = vec![(0, 1), (0, 2), (1, 2)];
    // Counterclockwise hull of the first triangle.
    let mut hull: Vec<u32> = match orientation(&points[0], &points[1], &points[2]) {
        Orientation::Ccw => vec![0, 1, 2],
        _ => vec![0, 2, 1],
    };
    for (idx, p) in points.iter().enumerate().skip(3) {
        let v = idx as u32;
        let len = hull.len();
        // Hull edges (hull[i], hull[i+1]) facing the new point.
        let visible: Vec<usize> = (0..len)
            .filter(|&i| {
                let a = &points[hull[i] as usize];
                let b = &points[hull[(i + 1) % len] as usize];
                orientation(a, b, p) == Orientation::Cw
            })
            .collect();
        assert!(
            !visible.is_empty(),
            "a lexicographically new point always sees part of the hull"
        );
        let mut endpoints: Vec<u32> = Vec::new();
        for &i in &visible {
            for w in [hull[i], hull[(i + 1) % len]] {
                if !endpoints.contains(&w) {
                    endpoints.push(w);
                }
            }
        }
        for &w in &endpoints {
            edges.push((w.min(v), w.max(v)));
        }
        // Replace the visible chain with the new vertex. The chain is
        // contiguous in cyclic order; rotate it to the front to splice.
        let start = (0..len)
            .find(|&i| visible.contains(&i) && !visible.contains(&((i + len - 1) % len)))
            .expect("the visible edges form one contiguous chain");
        hull.rotate_left(start);
        hull.drain(1..visible.len());
        hull.insert(1, v);
    }

    let g = Pslg::new(points, edges).expect("incremental edges are well-formed");
    Triangulation::new(g).expect("the incremental scan builds a triangulation")
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<u32> {
    let mut perm: Vec<u32> = (0..n as u32).collect();
    perm.shuffle(rng);
    perm
}

/// The same graph with vertex `i` renamed to `perm[i]`.
pub fn relabel(g: &Pslg, perm: &[u32]) -> Pslg {
    assert_eq!(perm.len(), g.vertex_count());
    let mut vertices: Vec<Point> = vec![point_i64(0, 0); g.vertex_count()];
    for (i, p) in g.vertices().iter().enumerate() {
        vertices[perm[i] as usize] = p.clone();
    }
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
        .collect();
    Pslg::new(vertices, edges).expect("relabeling preserves well-formedness")
}
