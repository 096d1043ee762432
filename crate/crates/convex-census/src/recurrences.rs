//! Exact big-integer sequences: the extremal polygon counts `P(n)` and
//! `Cx(n)`, the path counts `lambda_k`, and the exponent offsets `alpha_k`.
//!
//! * `P(2) = 1`, `P(3) = 2`, and for `n >= 4`
//!   `P(n) = max { P(n1) * P(n2) + 1 }` over all splits `n1 + n2 = n + 1`
//!   with `n1, n2 >= 2`.
//! * `Cx(2) = 0`, `Cx(3) = 1`, and for `n >= 4`
//!   `Cx(n) = max { P(n1) * P(n2) + Cx(n1) + Cx(n2) }` over the same splits.
//! * `lambda_0 = 1`, `lambda_{k+1} = lambda_k^2 + 1`.
//! * `alpha_k = 2^k + k + 1` for `k >= 1`.
//!
//! Everything is computed with arbitrary-precision integers and compared
//! exactly; ties in the maxima are collected, not broken.

use num_traits::{One, Zero};

use crate::BigCount;

/// Which sequence a [`SequenceTable`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceName {
    /// Largest number of convex polygons a triangulation can gain when two
    /// point sets are merged at a shared vertex: the product-plus-one
    /// recurrence.
    P,
    /// Product-recurrence bound on the number of convex polygons in a
    /// triangulation of points in convex position (attained for n ≤ 6;
    /// see [`ccx_table`]).
    Cx,
    /// Convex path counts of the dyadic triangulations: squaring-plus-one.
    Lambda,
    /// Exponent offsets `2^k + k + 1` used by the tail bounds.
    Alpha,
}

impl std::fmt::Display for SequenceName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SequenceName::P => "P",
            SequenceName::Cx => "Cx",
            SequenceName::Lambda => "lambda",
            SequenceName::Alpha => "alpha",
        })
    }
}

/// A prefix of one of the four sequences, indexed from the sequence's
/// natural start (`P`, `Cx` from n = 2; `lambda` from k = 0; `alpha` from
/// k = 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub name: SequenceName,
    /// The index of `values[0]`.
    pub start: u32,
    pub values: Vec<BigCount>,
}

impl SequenceTable {
    /// The value at natural index `idx` (e.g. `p.get(9)` is P(9)).
    ///
    /// Panics when `idx` is outside the computed range.
    pub fn get(&self, idx: u32) -> &BigCount {
        assert!(
            idx >= self.start && ((idx - self.start) as usize) < self.values.len(),
            "index {idx} outside computed range {}..{}",
            self.start,
            self.start + self.values.len() as u32
        );
        &self.values[(idx - self.start) as usize]
    }

    /// The largest computed index.
    pub fn max_index(&self) -> u32 {
        self.start + self.values.len() as u32 - 1
    }
}

/// All splits `n1 + n2 = n + 1` with `2 <= n1 <= n2`.
fn splits(n: u32) -> impl Iterator<Item = (u32, u32)> {
    (2..=(n + 1) / 2).map(move |n1| (n1, n + 1 - n1))
}

/// The table of `P(n)` for `2 <= n <= n_max`.
///
/// Panics when `n_max < 2`.
pub fn p_table(n_max: u32) -> SequenceTable {
    assert!(n_max >= 2, "P is defined from n = 2");
    let mut values = vec![BigCount::one()]; // P(2)
    if n_max >= 3 {
        values.push(BigCount::from(2u32)); // P(3)
    }
    for n in 4..=n_max {
        let best = splits(n)
            .map(|(n1, n2)| {
                values[(n1 - 2) as usize].clone() * &values[(n2 - 2) as usize] + BigCount::one()
            })
            .max()
            .expect("n >= 4 always has the split (2, n-1)");
        values.push(best);
    }
    SequenceTable {
        name: SequenceName::P,
        start: 2,
        values,
    }
}

/// The table of `Cx(n)` for `2 <= n <= n_max`: the product recurrence
/// `Cx(n) = max { P(n1) P(n2) + Cx(n1) + Cx(n2) }` over splits
/// `n1 + n2 = n + 1`, seeded with `Cx(2) = 0` and `Cx(3) = 1`.
///
/// The recurrence follows the ear decomposition of a convex-position
/// triangulation at a hull edge's triangle, maximizing the polygon counts
/// and the path counts of the two parts independently, so it is an upper
/// bound on the largest number of convex polygons any triangulation of
/// `n` points in convex position contains. Exhaustive search
/// ([`crate::maxsearch::maxsearch`]) confirms the bound is attained for
/// `n <= 6` but not from `n = 7` on, where no triangulation maximizes
/// both factors at once.
///
/// Panics when `n_max < 2`.
pub fn ccx_table(n_max: u32) -> SequenceTable {
    assert!(n_max >= 2, "Cx is defined from n = 2");
    let p = p_table(n_max);
    let mut values = vec![BigCount::zero()]; // Cx(2)
    if n_max >= 3 {
        values.push(BigCount::one()); // Cx(3)
    }
    for n in 4..=n_max {
        let best = splits(n)
            .map(|(n1, n2)| {
                p.get(n1) * p.get(n2)
                    + &values[(n1 - 2) as usize]
                    + &values[(n2 - 2) as usize]
            })
            .max()
            .expect("n >= 4 always has the split (2, n-1)");
        values.push(best);
    }
    SequenceTable {
        name: SequenceName::Cx,
        start: 2,
        values,
    }
}

/// Guard for [`lambda_seq`]: the values grow doubly exponentially, so the
/// default cap keeps accidental huge requests out (the cap itself is cheap
/// to compute — it guards misuse, not feasibility).
pub const DEFAULT_LAMBDA_CAP: u32 = 12;

/// The table of `lambda_k` for `0 <= k <= k_max`, capped at
/// [`DEFAULT_LAMBDA_CAP`].
pub fn lambda_seq(k_max: u32) -> Result<SequenceTable, CapExceeded> {
    lambda_seq_capped(k_max, DEFAULT_LAMBDA_CAP)
}

/// [`lambda_seq`] with an explicit cap.
pub fn lambda_seq_capped(k_max: u32, cap: u32) -> Result<SequenceTable, CapExceeded> {
    if k_max > cap {
        return Err(CapExceeded { k_max, cap });
    }
    let mut values = vec![BigCount::one()]; // lambda_0
    for _ in 0..k_max {
        let last = values.last().unwrap();
        values.push(last * last + BigCount::one());
    }
    Ok(SequenceTable {
        name: SequenceName::Lambda,
        start: 0,
        values,
    })
}

/// Requested index exceeds the configured cap.
#[derive(Debug, thiserror::Error)]
#[error("k = {k_max} exceeds the cap {cap} for the squaring sequence")]
pub struct CapExceeded {
    pub k_max: u32,
    pub cap: u32,
}

/// The table of `alpha_k = 2^k + k + 1` for `1 <= k <= k_max`.
///
/// Panics when `k_max < 1`.
pub fn alpha_seq(k_max: u32) -> SequenceTable {
    assert!(k_max >= 1, "alpha is defined from k = 1");
    let values = (1..=k_max)
        .map(|k| (BigCount::one() << k) + BigCount::from(k + 1))
        .collect();
    SequenceTable {
        name: SequenceName::Alpha,
        start: 1,
        values,
    }
}

/// All splits attaining the maximum in the `P` recurrence at `n`:
/// pairs `(n1, n2)`, `n1 + n2 = n + 1`, `2 <= n1 <= n2`, with
/// `P(n1) * P(n2) + 1 = P(n)`. Ties are all reported, in ascending order.
///
/// Panics when `n < 3` (no split exists below `n = 3`).
pub fn argmax_split(n: u32) -> Vec<(u32, u32)> {
    assert!(n >= 3, "splits need n >= 3");
    let p = p_table(n - 1);
    let candidates: Vec<(u32, u32, BigCount)> = splits(n)
        .map(|(n1, n2)| (n1, n2, p.get(n1) * p.get(n2) + BigCount::one()))
        .collect();
    let best = candidates.iter().map(|(_, _, v)| v).max().unwrap().clone();
    candidates
        .into_iter()
        .filter(|(_, _, v)| *v == best)
        .map(|(n1, n2, _)| (n1, n2))
        .collect()
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::Rat;

    /// Exact `r^e` for rationals.
    fn rat_pow(r: &Rat, e: u32) -> Rat {
        Rat::new(r.numer().pow(e), r.denom().pow(e))
    }

    /// P(2..18).
    pub(crate) const P_SMALL: [u64; 17] = [
        1, 2, 3, 5, 7, 11, 16, 26, 36, 56, 81, 131, 183, 287, 417, 677, 937,
    ];
    /// P(19..32).
    pub(crate) const P_LARGE: [u64; 14] = [
        1457, 2107, 3407, 4759, 7463, 10843, 17603, 24373, 37913, 54838, 88688, 123892, 194300,
        282310,
    ];
    /// Cx(2..9).
    const CX_SMALL: [u64; 8] = [0, 1, 3, 6, 11, 18, 29, 45];
    /// lambda_0..lambda_6.
    const LAMBDA: [u64; 7] = [1, 2, 5, 26, 677, 458330, 210066388901];

    #[test]
    fn p_reproduces_the_known_rows() {
        let p = p_table(32);
        for (i, &expect) in P_SMALL.iter().enumerate() {
            assert_eq!(p.get(i as u32 + 2), &BigCount::from(expect), "P({})", i + 2);
        }
        for (i, &expect) in P_LARGE.iter().enumerate() {
            assert_eq!(
                p.get(i as u32 + 19),
                &BigCount::from(expect),
                "P({})",
                i + 19
            );
        }
    }

    #[test]
    fn ccx_reproduces_the_known_row() {
        let cx = ccx_table(9);
        for (i, &expect) in CX_SMALL.iter().enumerate() {
            assert_eq!(
                cx.get(i as u32 + 2),
                &BigCount::from(expect),
                "Cx({})",
                i + 2
            );
        }
    }

    #[test]
    fn lambda_reproduces_the_known_values() {
        let l = lambda_seq(8).unwrap();
        for (k, &expect) in LAMBDA.iter().enumerate() {
            assert_eq!(l.get(k as u32), &BigCount::from(expect), "lambda_{k}");
        }
        // Spot-check the squaring identity at the top of the table.
        assert_eq!(l.get(8), &(l.get(7) * l.get(7) + BigCount::one()));
        assert!(lambda_seq(13).is_err());
        assert!(lambda_seq_capped(13, 13).is_ok());
    }

    #[test]
    fn alpha_is_two_to_k_plus_k_plus_one() {
        let a = alpha_seq(5);
        let expect = [4u64, 7, 12, 21, 38];
        for (k, &e) in expect.iter().enumerate() {
            assert_eq!(a.get(k as u32 + 1), &BigCount::from(e), "alpha_{}", k + 1);
        }
    }

    #[test]
    fn p_is_monotone() {
        let p = p_table(64);
        for n in 2..64 {
            assert!(p.get(n) <= p.get(n + 1), "P({n}) > P({})", n + 1);
        }
    }

    #[test]
    fn lambda_matches_p_at_powers_of_two_plus_one() {
        let p = p_table(65);
        let l = lambda_seq(6).unwrap();
        for k in 0..=4u32 {
            assert_eq!(
                l.get(k),
                p.get((1 << k) + 1),
                "lambda_{k} != P(2^{k} + 1)"
            );
        }
        // Whether the identity persists beyond k = 4 is informational, not
        // a contract; record the outcome in the test log.
        for k in 5..=6u32 {
            let same = l.get(k) == p.get((1 << k) + 1);
            println!(
                "identity lambda_k = P(2^k + 1) at k = {k}: {}",
                if same { "holds" } else { "fails" }
            );
        }
    }

    #[test]
    fn ccx_respects_the_sum_and_product_bounds() {
        let n_max = 40;
        let p = p_table(n_max);
        let cx = ccx_table(n_max);
        let mut prefix_sum = BigCount::zero();
        for n in 2..=n_max {
            // Cx(n) <= sum of P(k) for k = 2..n-1 (empty sum at n = 2).
            assert!(cx.get(n) <= &prefix_sum, "Cx({n}) vs prefix sum");
            // Cx(n) <= n * P(n).
            assert!(
                cx.get(n) <= &(BigCount::from(n) * p.get(n)),
                "Cx({n}) vs n * P(n)"
            );
            prefix_sum += p.get(n);
        }
    }

    #[test]
    fn lambda_growth_floor() {
        let l = lambda_seq(10).unwrap();
        for k in 1..=10u32 {
            let floor = BigCount::one() << (1u32 << (k - 1));
            assert!(l.get(k) >= &floor, "lambda_{k} below 2^(2^(k-1))");
        }
    }

    #[test]
    fn lambda_rational_product_ceiling() {
        // lambda_k <= 2^(2^(k-1)) * prod_{i=1}^{k-1} (1 + 2^(-2^i))^(2^(k-1-i)),
        // compared exactly over rationals.
        let l = lambda_seq(8).unwrap();
        for k in 1..=8u32 {
            let mut bound = Rat::from_integer(BigInt::one() << (1u32 << (k - 1)));
            for i in 1..k {
                let factor = Rat::one()
                    + Rat::new(BigInt::one(), BigInt::one() << (1u32 << i));
                bound *= rat_pow(&factor, 1 << (k - 1 - i));
            }
            let lam = Rat::from_integer(BigInt::from_biguint(
                num_bigint::Sign::Plus,
                l.get(k).clone(),
            ));
            assert!(lam <= bound, "lambda_{k} exceeds the rational ceiling");
        }
    }

    #[test]
    fn argmax_split_finds_the_asymmetric_maximizer() {
        assert_eq!(argmax_split(4), vec![(2, 3)]);
        assert_eq!(argmax_split(5), vec![(3, 3)]);
        let s7 = argmax_split(7);
        assert!(s7.contains(&(3, 5)));
        assert!(!s7.contains(&(4, 4)));
        // Every reported split must attain P(n).
        let p = p_table(7);
        for (n1, n2) in s7 {
            assert_eq!(
                &(p.get(n1) * p.get(n2) + BigCount::one()),
                p.get(7)
            );
        }
    }
}
