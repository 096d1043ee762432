//! Acceptance suite: one test per acceptance criterion, each printing a
//! single summary line (`acceptance NN: ... -- pass`) on success; a failed
//! assertion marks the criterion failed. Run with `--nocapture` to see the
//! lines directly.

mod common;

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;

use convex_census::certify::{
    verify_fact, verify_lambda_bound, verify_theorem2, Status, DEFAULT_PRECISION_BITS,
};
use convex_census::constructions::{balanced_triangulation, concat_construction, convexify};
use convex_census::counting::{
    count_convex_paths, count_convex_polygons, enumerate_convex_polygons, ConvexPolygon,
};
use convex_census::geometry::is_convex_position;
use convex_census::maxsearch::{convex_polygon_triangulations, maxsearch};
use convex_census::oracle::brute_count;
use convex_census::pslg::validate;
use convex_census::recurrences::{ccx_table, lambda_seq, p_table};
use convex_census::{BigCount, Rat};

fn pass(id: u32, line: &str) {
    println!("acceptance {id:02}: {line} -- pass");
}

fn within(budget: Duration, elapsed: Duration, what: &str) {
    assert!(
        elapsed <= budget,
        "{what} took {elapsed:?}, over the {budget:?} budget"
    );
}

/// The n <= 10 random suite shared by criteria 4 and 8: 200 seeded valid
/// graphs with 4..=10 vertices.
fn random_suite() -> Vec<convex_census::pslg::Pslg> {
    let mut rng = common::rng(40);
    (0..200usize)
        .map(|i| common::random_valid_pslg(&mut rng, 4 + i % 7, 48))
        .collect()
}

#[test]
fn acceptance_01_base_tables() {
    let start = Instant::now();
    let p = p_table(18);
    let expected_p: [u64; 17] = [
        1, 2, 3, 5, 7, 11, 16, 26, 36, 56, 81, 131, 183, 287, 417, 677, 937,
    ];
    for (i, want) in expected_p.iter().enumerate() {
        assert_eq!(p.get(i as u32 + 2), &BigCount::from(*want), "P({})", i + 2);
    }
    let cx = ccx_table(9);
    let expected_cx: [u64; 8] = [0, 1, 3, 6, 11, 18, 29, 45];
    for (i, want) in expected_cx.iter().enumerate() {
        assert_eq!(cx.get(i as u32 + 2), &BigCount::from(*want), "Cx({})", i + 2);
    }
    within(Duration::from_secs(1), start.elapsed(), "table computation");
    pass(1, "P(2..=18) and Cx(2..=9) rows match the frozen tables");
}

#[test]
fn acceptance_02_extended_p_row() {
    let p = p_table(32);
    let expected: [u64; 14] = [
        1457, 2107, 3407, 4759, 7463, 10843, 17603, 24373, 37913, 54838, 88688, 123892,
        194300, 282310,
    ];
    for (i, want) in expected.iter().enumerate() {
        assert_eq!(p.get(i as u32 + 19), &BigCount::from(*want), "P({})", i + 19);
    }
    pass(2, "P(19..=32) matches the frozen extension row");
}

#[test]
fn acceptance_03_lambda_table_and_identity() {
    let lambda = lambda_seq(5).expect("5 is under the cap");
    let expected: [u64; 6] = [1, 2, 5, 26, 677, 458330];
    for (k, want) in expected.iter().enumerate() {
        assert_eq!(lambda.get(k as u32), &BigCount::from(*want), "lambda_{k}");
    }
    let p = p_table(17);
    for k in 0..=4u32 {
        assert_eq!(
            lambda.get(k),
            p.get((1u32 << k) + 1),
            "lambda_{k} equals P(2^{k} + 1)"
        );
    }
    pass(3, "lambda_0..=5 matches the frozen table and lambda_k = P(2^k + 1) for k <= 4");
}

#[test]
fn acceptance_04_oracle_gate() {
    let start = Instant::now();
    let mut polygon_instances = 0usize;
    for (n, expected_count) in [(4u32, 2usize), (5, 5), (6, 14), (7, 42), (8, 132)] {
        let all = convex_polygon_triangulations(n).unwrap();
        assert_eq!(all.len(), expected_count, "triangulation count of the {n}-gon");
        for t in &all {
            assert_eq!(
                count_convex_polygons(t.pslg()).unwrap(),
                brute_count(t.pslg()).unwrap(),
                "dynamic program versus brute force on a {n}-gon triangulation"
            );
        }
        polygon_instances += all.len();
    }
    assert_eq!(polygon_instances, 195);

    let suite = random_suite();
    assert!(suite.len() >= 200);
    for (i, g) in suite.iter().enumerate() {
        assert_eq!(
            count_convex_polygons(g).unwrap(),
            brute_count(g).unwrap(),
            "dynamic program versus brute force on random instance {i}"
        );
    }
    within(Duration::from_secs(300), start.elapsed(), "the oracle gate");
    pass(
        4,
        "dynamic program equals brute force on all 195 convex-polygon triangulations \
         (n = 4..=8) and 200 seeded random valid graphs (n <= 10)",
    );
}

#[test]
fn acceptance_05_exhaustion_versus_recurrence() {
    let start = Instant::now();
    let table = ccx_table(12);
    // The recurrence maximizes the path and polygon factors of each split
    // independently; exhaustion shows both are attainable together only up
    // to n = 6, so from n = 7 the recurrence value is a strict upper
    // bound. The exhaustive maxima are pinned exactly.
    let exhaustive: [(u32, u64); 10] = [
        (3, 1),
        (4, 3),
        (5, 6),
        (6, 11),
        (7, 17),
        (8, 28),
        (9, 40),
        (10, 63),
        (11, 90),
        (12, 143),
    ];
    for (n, want) in exhaustive {
        let (max, best) = maxsearch(n).unwrap();
        assert_eq!(max, BigCount::from(want), "exhaustive maximum at n = {n}");
        assert!(
            &max <= table.get(n),
            "recurrence value bounds the exhaustive maximum at n = {n}"
        );
        assert_eq!(
            &max == table.get(n),
            n <= 6,
            "attainment of the recurrence bound at n = {n}"
        );
        assert_eq!(
            count_convex_polygons(best.pslg()).unwrap(),
            max,
            "the maximizer attains the maximum at n = {n}"
        );
    }
    within(Duration::from_secs(600), start.elapsed(), "the exhaustive search");
    pass(
        5,
        "exhaustive maxima equal the recurrence for n = 3..=6 and stay strictly below it \
         from n = 7 on (17, 28, 40, 63, 90, 143 versus 18, 29, 45, 71, 107, 163 at n = 7..=12): \
         the recurrence maximizes its two factors independently and from n = 7 no \
         triangulation attains both at once",
    );
}

#[test]
fn acceptance_06_balanced_path_counts() {
    let start = Instant::now();
    let lambda = lambda_seq(4).expect("4 is under the cap");
    for k in 0..=4u32 {
        let t = balanced_triangulation(k).unwrap();
        let count = count_convex_paths(t.pslg(), 1u32 << k, 0).unwrap();
        assert_eq!(&count, lambda.get(k), "path count on the depth-{k} instance");
    }
    within(Duration::from_secs(10), start.elapsed(), "balanced path counting");
    pass(
        6,
        "closed-convex chain counts between the arc endpoints of the balanced \
         triangulations equal lambda_0..=4 (677 at k = 4)",
    );
}

#[test]
fn acceptance_07_certification_suite() {
    let start = Instant::now();
    for id in 1..=6u32 {
        let verdict = verify_fact(id).unwrap();
        assert_eq!(verdict.status, Status::Proved, "fact {id}: {}", verdict.claim);
        if let Some(bits) = verdict.precision_bits {
            assert!(bits <= DEFAULT_PRECISION_BITS);
        }
    }
    let lambda = verify_lambda_bound(8);
    assert_eq!(lambda.status, Status::Proved, "{}", lambda.claim);
    let growth = verify_theorem2(1024);
    assert_eq!(growth.status, Status::Proved, "{}", growth.claim);
    within(Duration::from_secs(60), start.elapsed(), "the certification suite");
    pass(
        7,
        "facts 1..=6, the decimal lambda bounds up to k = 8, and the growth bound up \
         to n = 1024 are all PROVED at the default precision cap",
    );
}

#[test]
fn acceptance_08_inequalities_at_desk_scale() {
    // Theorem-style bound on the shared random suite.
    let cx = ccx_table(32);
    for g in random_suite() {
        let n = g.vertex_count() as u32;
        let bound = BigCount::from(2 * n - 5) * cx.get(n);
        assert!(
            count_convex_polygons(&g).unwrap() <= bound,
            "count exceeds (2n - 5) Cx(n) on an n = {n} instance"
        );
    }

    // Summation and product bounds on the recurrence table.
    let p = p_table(32);
    let mut p_sum = BigCount::from(0u32);
    for n in 2..=32u32 {
        if n >= 3 {
            p_sum += p.get(n - 1);
        }
        assert!(cx.get(n) <= &p_sum, "Cx({n}) exceeds the partial sum of P");
        assert!(
            cx.get(n) <= &(BigCount::from(n) * p.get(n)),
            "Cx({n}) exceeds n P(n)"
        );
    }

    // Rational product ceiling for the squaring sequence.
    fn rat_pow(r: &Rat, e: u32) -> Rat {
        Rat::new(r.numer().pow(e), r.denom().pow(e))
    }
    let lambda = lambda_seq(8).expect("8 is under the cap");
    for k in 1..=8u32 {
        let mut bound = Rat::from_integer(BigInt::one() << (1u32 << (k - 1)));
        for i in 1..k {
            let factor = Rat::one() + Rat::new(BigInt::one(), BigInt::one() << (1u32 << i));
            bound *= rat_pow(&factor, 1 << (k - 1 - i));
        }
        let lam = Rat::from_integer(BigInt::from_biguint(
            num_bigint::Sign::Plus,
            lambda.get(k).clone(),
        ));
        assert!(lam <= bound, "lambda_{k} exceeds the rational product ceiling");
    }
    pass(
        8,
        "count <= (2n - 5) Cx(n) on the random suite, Cx(n) <= sum P and <= n P(n) \
         for n = 2..=32, and the rational product ceiling on lambda_k holds for k = 1..=8",
    );
}

#[test]
fn acceptance_09_convexification() {
    let mut rng = common::rng(90);
    let mut instances = 0usize;
    let mut mapped_faces = 0usize;
    while instances < 100 {
        let n = 4 + (instances % 7);
        let t = common::random_triangulation(&mut rng, n, 60);
        let mut source_polygons: Vec<ConvexPolygon> = Vec::new();
        enumerate_convex_polygons(t.pslg(), |p| {
            source_polygons.push(p.clone());
            ControlFlow::Continue(())
        })
        .unwrap();

        for face in 0..t.faces().len() {
            let (out, map) = convexify(&t, face).expect("convexification succeeds");
            assert!(validate(&out).is_valid(), "output validates");
            assert!(is_convex_position(out.vertices()), "output is in convex position");
            assert_eq!(out.vertex_count(), n, "vertex count is preserved");

            let images: Vec<Vec<u32>> = source_polygons
                .iter()
                .filter(|p| map.contains_anchor(p))
                .map(|p| map.polygon_image(p).expect("anchored polygons map"))
                .collect();
            let distinct: BTreeSet<&Vec<u32>> = images.iter().collect();
            assert_eq!(distinct.len(), images.len(), "the polygon map is injective");

            let containing =
                convex_census::constructions::count_containing_face(&t, face).unwrap();
            assert_eq!(
                containing,
                BigCount::from(images.len()),
                "anchor membership matches face containment"
            );
            assert!(
                containing <= brute_count(&out).unwrap(),
                "containment count is bounded by the convexified graph's count"
            );
            mapped_faces += 1;
        }
        instances += 1;
    }
    pass(
        9,
        &format!(
            "convexification of 100 random triangulations (every bounded face, \
             {mapped_faces} maps in total) validates, lands in convex position, maps \
             polygons injectively, and bounds the face-containment count"
        ),
    );
}

#[test]
fn acceptance_10_chained_lower_bound() {
    let start = Instant::now();
    for m in 1..=3u32 {
        let t = concat_construction(4, m).unwrap();
        assert_eq!(t.pslg().vertex_count(), 16 * m as usize + 1);
        let count = count_convex_polygons(t.pslg()).unwrap();
        let floor = BigCount::from(677u32).pow(m);
        assert!(
            count >= floor,
            "the chained construction at m = {m} fails the 677^m floor"
        );
    }
    within(Duration::from_secs(30), start.elapsed(), "the chained lower bound");
    pass(
        10,
        "the chained balanced construction has at least 677^m convex polygons for \
         m = 1..=3 (17, 33, 49 vertices)",
    );
}

#[test]
fn acceptance_11_performance_envelope() {
    let mut rng = common::rng(110);
    let t = common::random_triangulation(&mut rng, 150, 100_000);
    let g = t.pslg();
    let start = Instant::now();
    let count = count_convex_polygons(g).unwrap();
    let elapsed = start.elapsed();
    within(Duration::from_secs(60), elapsed, "counting on 150 vertices");

    let perm = common::random_permutation(&mut rng, 150);
    let relabeled = common::relabel(g, &perm);
    assert_eq!(
        count_convex_polygons(&relabeled).unwrap(),
        count,
        "the count is invariant under vertex relabeling"
    );
    pass(
        11,
        &format!(
            "a 150-vertex triangulation counts in {elapsed:.2?} (budget 60 s) and the \
             count is invariant under a seeded relabeling"
        ),
    );
}
