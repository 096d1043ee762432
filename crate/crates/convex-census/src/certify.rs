//! Rigorous certification of the numeric inequalities behind the extremal
//! bounds: exact big-integer power comparisons wherever a claim compares
//! an algebraic number against a decimal constant (roots cleared), and
//! outward-rounded rational interval arithmetic for the one transcendental
//! ingredient, `exp`.
//!
//! Verdicts are honest three-way results: `PROVED` and `REFUTED` only when
//! the comparison separates strictly at the working precision, `UNDECIDED`
//! when the precision cap is reached first. Precision escalates by
//! doubling from 64 bits up to the cap (default 128).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::recurrences::p_table;
use crate::{BigCount, Rat};

/// Starting working precision for interval certificates.
pub const STARTING_PRECISION_BITS: u32 = 64;

/// Default precision cap for interval certificates.
pub const DEFAULT_PRECISION_BITS: u32 = 128;

/// Largest `K` accepted by [`verify_lambda_bound`]; the comparison at `k`
/// handles integers of roughly `2^k` digits.
pub const MAX_LAMBDA_BOUND_K: u32 = 10;

/// Errors from the interval primitives.
#[derive(Debug, thiserror::Error)]
pub enum CertifyError {
    /// `iv_exp` needs at least one Taylor term.
    #[error("iv_exp needs at least one Taylor term")]
    NoTerms,
    /// `iv_exp` arguments are limited to `|x| <= 1` (larger arguments are
    /// handled by halving and squaring at the call sites that need them).
    #[error("iv_exp argument must satisfy |x| <= 1, got {0}")]
    ExpArgOutOfRange(String),
    /// `iv_root` needs a positive radicand.
    #[error("iv_root needs a positive radicand, got {0}")]
    NonpositiveRoot(String),
    /// Facts are numbered 1 through 6.
    #[error("unknown fact id {0}; facts are numbered 1..=6")]
    UnknownFact(u32),
}

/// Outcome of a certification attempt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// The claim holds; the separation was strict at the final precision.
    Proved,
    /// The claim fails; the separation was strict at the final precision.
    Refuted,
    /// The precision cap could not separate the quantities.
    Undecided,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Proved => "PROVED",
            Status::Refuted => "REFUTED",
            Status::Undecided => "UNDECIDED",
        })
    }
}

/// A certified claim with its outcome and the precision that settled it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedVerdict {
    /// Human-readable claim statement.
    pub claim: String,
    /// The three-way outcome.
    pub status: Status,
    /// Working precision in bits for interval-based claims; `None` when
    /// the whole certificate is exact integer arithmetic.
    pub precision_bits: Option<u32>,
}

/// A closed rational interval enclosing a real quantity.
///
/// Every operation returns an enclosure of the exact real result; rounding
/// happens only at explicit truncation points (the `exp` tail, root
/// bisection). Operations are inclusion-monotone: widening an input never
/// shrinks the output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rat,
    hi: Rat,
}

impl Interval {
    /// A new interval; panics if `lo > hi`.
    pub fn new(lo: Rat, hi: Rat) -> Interval {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    /// The degenerate interval `[v, v]`.
    pub fn point(v: Rat) -> Interval {
        Interval {
            lo: v.clone(),
            hi: v,
        }
    }

    /// Lower endpoint.
    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    /// Upper endpoint.
    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    /// `hi - lo`.
    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// True when `v` lies in the closed interval.
    pub fn contains(&self, v: &Rat) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    /// True when `self` is contained in `other`.
    pub fn subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Interval sum.
    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    /// Interval product (any signs).
    pub fn mul(&self, other: &Interval) -> Interval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// Scales by a rational (any sign).
    pub fn scale(&self, r: &Rat) -> Interval {
        let (a, b) = (&self.lo * r, &self.hi * r);
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    /// `e`-th power of a nonnegative interval; panics on negative `lo`.
    pub fn pow(&self, e: u32) -> Interval {
        assert!(
            !self.lo.is_negative(),
            "interval powers are defined for nonnegative intervals"
        );
        Interval {
            lo: rat_pow(&self.lo, e),
            hi: rat_pow(&self.hi, e),
        }
    }

    /// Reciprocal of a strictly positive interval; panics otherwise.
    pub fn recip(&self) -> Interval {
        assert!(
            self.lo.is_positive(),
            "interval reciprocals are defined for positive intervals"
        );
        Interval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        }
    }
}

/// Exact `r^e`.
fn rat_pow(r: &Rat, e: u32) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    Rat::new(r.numer().pow(e), r.denom().pow(e))
}

/// Exact `b^e` for big integers.
fn int_pow(b: &BigInt, e: u32) -> BigInt {
    b.pow(e)
}

/// Encloses `e^x` for `|x| <= 1`: the Taylor partial sum with `terms`
/// terms, plus a rigorous tail bound
/// `|x|^t / t! * (t+1) / (t+1 - |x|)` added outward on both sides.
pub fn iv_exp(x: &Rat, terms: u32) -> Result<Interval, CertifyError> {
    if terms < 1 {
        return Err(CertifyError::NoTerms);
    }
    let abs = x.abs();
    if abs > Rat::one() {
        return Err(CertifyError::ExpArgOutOfRange(x.to_string()));
    }

    let mut sum = Rat::one();
    let mut term = Rat::one();
    let mut abs_pow = Rat::one();
    for j in 1..terms {
        term = &term * x / BigInt::from(j);
        sum += &term;
        abs_pow = &abs_pow * &abs;
    }
    abs_pow = &abs_pow * &abs; // now |x|^terms

    let mut t_factorial = BigInt::one();
    for j in 2..=terms {
        t_factorial *= BigInt::from(j);
    }
    let t_plus_1 = Rat::from_integer(BigInt::from(terms + 1));
    let tail = abs_pow / t_factorial * &t_plus_1 / (&t_plus_1 - &abs);
    Ok(Interval::new(&sum - &tail, &sum + &tail))
}

/// Encloses `e^x` over a whole interval of arguments (`exp` is monotone),
/// handling arguments above 1 by halving and squaring.
fn iv_exp_enclosure(x: &Interval, terms: u32) -> Result<Interval, CertifyError> {
    let lo = exp_point(&x.lo, terms)?;
    let hi = exp_point(&x.hi, terms)?;
    Ok(Interval::new(lo.lo, hi.hi))
}

/// Encloses `e^x` for any `x >= -1`, halving until `|x| <= 1` and squaring
/// the enclosure back up.
fn exp_point(x: &Rat, terms: u32) -> Result<Interval, CertifyError> {
    let one = Rat::one();
    let mut halvings = 0u32;
    let mut y = x.clone();
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    while y.abs() > one {
        y = &y * &half;
        halvings += 1;
    }
    let mut enclosure = iv_exp(&y, terms)?;
    for _ in 0..halvings {
        enclosure = enclosure.mul(&enclosure);
    }
    Ok(enclosure)
}

/// Encloses `x^{1/k}` for `x > 0` by bisection with exact `k`-th-power
/// comparisons, to relative width `2^-bits` (that is,
/// `hi - lo <= hi * 2^-bits`).
pub fn iv_root(x: &Rat, k: u32, bits: u32) -> Result<Interval, CertifyError> {
    if !x.is_positive() {
        return Err(CertifyError::NonpositiveRoot(x.to_string()));
    }
    assert!(k >= 1, "roots need k >= 1");
    let one = Rat::one();
    let (mut lo, mut hi) = if *x >= one {
        (one, x.clone())
    } else {
        (x.clone(), one)
    };
    let scale = Rat::from_integer(BigInt::one() << bits as usize);
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    while (&hi - &lo) * &scale > hi {
        let mid = (&lo + &hi) * &half;
        if rat_pow(&mid, k) <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Interval::new(lo, hi))
}

/// Taylor terms that comfortably out-resolve `bits` of precision for the
/// small arguments the certificates use.
fn terms_for(bits: u32) -> u32 {
    (bits / 3).max(6)
}

/// Runs `check` at doubling precisions from 64 bits to `cap`; `check`
/// returns `Some(status)` once the comparison separates.
fn escalate(cap: u32, mut check: impl FnMut(u32) -> Status) -> (Status, u32) {
    let mut bits = STARTING_PRECISION_BITS.min(cap);
    loop {
        match check(bits) {
            Status::Undecided if bits < cap => bits = (bits * 2).min(cap),
            decided => return (decided, bits),
        }
    }
}

/// Compares an interval against a rational for a `lhs <= bound` claim.
fn le_verdict(lhs: &Interval, bound: &Rat) -> Status {
    if *lhs.hi() <= *bound {
        Status::Proved
    } else if *lhs.lo() > *bound {
        Status::Refuted
    } else {
        Status::Undecided
    }
}

/// Certifies `x^{1/k} * e^arg <= bound` by escalating interval precision.
fn certify_root_times_exp_le(
    x: u32,
    k: u32,
    arg: &Rat,
    bound: &Rat,
    cap: u32,
) -> (Status, u32) {
    escalate(cap, |bits| {
        let root = iv_root(&Rat::from_integer(BigInt::from(x)), k, bits)
            .expect("positive radicand");
        let exp = iv_exp(arg, terms_for(bits)).expect("small argument");
        le_verdict(&root.mul(&exp), bound)
    })
}

/// Exact check that `lo_digits / 10^d <= x^{1/k} < hi_digits / 10^d`,
/// with roots cleared: `lo^k <= x * 10^(d k) < hi^k`.
fn root_enclosed_by_decimals(x: u32, k: u32, lo_digits: u64, hi_digits: u64, d: u32) -> bool {
    let scaled = BigInt::from(x) * int_pow(&BigInt::from(10u32), d * k);
    int_pow(&BigInt::from(lo_digits), k) <= scaled && scaled < int_pow(&BigInt::from(hi_digits), k)
}

/// The frozen values of `P(17..=32)`, the basis of the growth bound.
const BASIS_P_17_32: [u64; 16] = [
    677, 937, 1457, 2107, 3407, 4759, 7463, 10843, 17603, 24373, 37913, 54838, 88688, 123892,
    194300, 282310,
];

fn exact_verdict(claim: String, ok: bool) -> CertifiedVerdict {
    CertifiedVerdict {
        claim,
        status: if ok { Status::Proved } else { Status::Refuted },
        precision_bits: None,
    }
}

/// Verifies one of the six numeric facts at the default precision cap.
pub fn verify_fact(id: u32) -> Result<CertifiedVerdict, CertifyError> {
    verify_fact_capped(id, DEFAULT_PRECISION_BITS)
}

/// Verifies one of the six numeric facts, escalating interval precision up
/// to `cap` bits.
///
/// * Fact 1: `sqrt(2) * exp(2^-4 + 2^-7 + 2^-11) <= 1.5180`.
/// * Fact 2: `677^(1/16) * exp(2^-20) <= 1.50284`.
/// * Fact 3: `P(n)^8 <= 26^(n-1)` on `2..=16`, equality only at `n = 9`,
///   and `1.50269 <= 26^(1/8) < 1.50270` — all exact.
/// * Fact 4: `P(n)^16 <= 677^(n-1)` on `17..=32`, equality only at
///   `n = 17`, and `1.50283 <= 677^(1/16) < 1.50284` — all exact.
/// * Fact 5: the computed `P(17..=32)` equals the frozen basis table.
/// * Fact 6: `P(n) * exp(677^((n-33)/16) / P(n)) <= 677^((n-1)/16)` for
///   every `n = 2..=16`.
pub fn verify_fact_capped(id: u32, cap: u32) -> Result<CertifiedVerdict, CertifyError> {
    match id {
        1 => {
            // 2^-4 + 2^-7 + 2^-11 = 145 / 2048.
            let arg = Rat::new(BigInt::from(145), BigInt::from(2048));
            let bound = Rat::new(BigInt::from(759), BigInt::from(500));
            let (status, bits) = certify_root_times_exp_le(2, 2, &arg, &bound, cap);
            Ok(CertifiedVerdict {
                claim: "fact-1: sqrt(2) * exp(2^-4 + 2^-7 + 2^-11) <= 1.5180".into(),
                status,
                precision_bits: Some(bits),
            })
        }
        2 => {
            let arg = Rat::new(BigInt::one(), BigInt::one() << 20);
            let bound = Rat::new(BigInt::from(37571), BigInt::from(25000));
            let (status, bits) = certify_root_times_exp_le(677, 16, &arg, &bound, cap);
            Ok(CertifiedVerdict {
                claim: "fact-2: 677^(1/16) * exp(2^-20) <= 1.50284".into(),
                status,
                precision_bits: Some(bits),
            })
        }
        3 => {
            let p = p_table(16);
            let ok = (2..=16u32).all(|n| {
                let lhs = int_pow(&BigInt::from(p.get(n).clone()), 8);
                let rhs = int_pow(&BigInt::from(26), n - 1);
                if n == 9 {
                    lhs == rhs
                } else {
                    lhs < rhs
                }
            }) && root_enclosed_by_decimals(26, 8, 150269, 150270, 5);
            Ok(exact_verdict(
                "fact-3: P(n)^8 <= 26^(n-1) on 2..=16, equality only at n = 9; \
                 1.50269 <= 26^(1/8) < 1.50270"
                    .into(),
                ok,
            ))
        }
        4 => {
            let p = p_table(32);
            let ok = (17..=32u32).all(|n| {
                let lhs = int_pow(&BigInt::from(p.get(n).clone()), 16);
                let rhs = int_pow(&BigInt::from(677), n - 1);
                if n == 17 {
                    lhs == rhs
                } else {
                    lhs < rhs
                }
            }) && root_enclosed_by_decimals(677, 16, 150283, 150284, 5);
            Ok(exact_verdict(
                "fact-4: P(n)^16 <= 677^(n-1) on 17..=32, equality only at n = 17; \
                 1.50283 <= 677^(1/16) < 1.50284"
                    .into(),
                ok,
            ))
        }
        5 => {
            let p = p_table(32);
            let ok = (17..=32u32)
                .all(|n| *p.get(n) == BigCount::from(BASIS_P_17_32[(n - 17) as usize]));
            Ok(exact_verdict(
                "fact-5: P(17..=32) matches the frozen basis table".into(),
                ok,
            ))
        }
        6 => {
            let p = p_table(16);
            let (status, bits) = escalate(cap, |bits| {
                let root =
                    iv_root(&Rat::from_integer(BigInt::from(677)), 16, bits)
                        .expect("positive radicand");
                let terms = terms_for(bits);
                let mut worst = Status::Proved;
                for n in 2..=16u32 {
                    let p_n = Rat::from_integer(BigInt::from(p.get(n).clone()));
                    // 677^((n-33)/16) / P(n), enclosed.
                    let arg = root.pow(33 - n).recip().scale(&p_n.recip());
                    let exp = match iv_exp_enclosure(&arg, terms) {
                        Ok(e) => e,
                        Err(_) => return Status::Undecided,
                    };
                    let lhs = exp.scale(&p_n);
                    let rhs = root.pow(n - 1);
                    let verdict = if lhs.hi() <= rhs.lo() {
                        Status::Proved
                    } else if lhs.lo() > rhs.hi() {
                        Status::Refuted
                    } else {
                        Status::Undecided
                    };
                    match verdict {
                        Status::Proved => {}
                        Status::Refuted => return Status::Refuted,
                        Status::Undecided => worst = Status::Undecided,
                    }
                }
                worst
            });
            Ok(CertifiedVerdict {
                claim: "fact-6: P(n) * exp(677^((n-33)/16) / P(n)) <= 677^((n-1)/16) \
                        for n = 2..=16"
                    .into(),
                status,
                precision_bits: Some(bits),
            })
        }
        other => Err(CertifyError::UnknownFact(other)),
    }
}

/// Certifies the squaring sequence's growth bounds by exact integer
/// comparison: `lambda_k * 100000^(2^k) <= 150284^(2^k)` for all `k <= K`
/// (that is, `lambda_k <= 1.50284^(2^k)`), and the matching lower anchor
/// `lambda_4 * 10000^16 >= 15028^16` (that is, `lambda_4 >= 1.5028^16`).
///
/// Panics when `K` exceeds [`MAX_LAMBDA_BOUND_K`]; the comparisons grow
/// doubly exponentially in `K`.
pub fn verify_lambda_bound(k_max: u32) -> CertifiedVerdict {
    assert!(
        k_max <= MAX_LAMBDA_BOUND_K,
        "lambda bound checks are capped at K = {MAX_LAMBDA_BOUND_K}"
    );
    let lambda = crate::recurrences::lambda_seq_capped(k_max.max(4), k_max.max(4))
        .expect("cap equals requested index");
    let upper = (0..=k_max).all(|k| {
        let e = 1u32 << k;
        let lhs = BigInt::from(lambda.get(k).clone()) * int_pow(&BigInt::from(100000), e);
        lhs <= int_pow(&BigInt::from(150284), e)
    });
    let lower = BigInt::from(lambda.get(4).clone()) * int_pow(&BigInt::from(10000), 16)
        >= int_pow(&BigInt::from(15028), 16);
    exact_verdict(
        format!(
            "lambda-bound: lambda_k * 100000^(2^k) <= 150284^(2^k) for k <= {k_max}; \
             lambda_4 * 10000^16 >= 15028^16"
        ),
        upper && lower,
    )
}

/// The dyadic correction sum `S_k = sum of 2^-alpha_i for i = 4..k`
/// (empty, hence zero, for `k <= 4`), with `alpha_i = 2^i + i + 1`.
fn correction_sum(k: u32) -> Rat {
    let mut sum = Rat::zero();
    for i in 4..k {
        let alpha = (1u64 << i) + i as u64 + 1;
        sum += Rat::new(BigInt::one(), BigInt::one() << alpha as usize);
    }
    sum
}

/// Certifies the growth theorem up to `N` at the default precision cap.
pub fn verify_theorem2(n_max: u32) -> CertifiedVerdict {
    verify_theorem2_capped(n_max, DEFAULT_PRECISION_BITS)
}

/// Certifies `P(n)^16 <= 677^(n-1) * exp(16 (n-1) S_k)` for every
/// `2 <= n <= n_max`, where `k` is the window index with
/// `2^k + 1 <= n <= 2^(k+1)` and `S_k` the dyadic correction sum. The
/// comparison uses a rigorous rational lower bound on the `exp` factor, so
/// a pass is a proof; windows with `S_k = 0` (all `n <= 32`) reduce to
/// exact power comparisons.
pub fn verify_theorem2_capped(n_max: u32, cap: u32) -> CertifiedVerdict {
    assert!(n_max >= 2, "the growth bound starts at n = 2");
    let p = p_table(n_max);
    let claim =
        format!("theorem-2: P(n)^16 <= 677^(n-1) * exp(16 (n-1) S_k) for n = 2..={n_max}");

    // 677^(n-1), incrementally.
    let base = BigInt::from(677);
    let mut pow677 = Vec::with_capacity(n_max as usize + 1);
    pow677.push(BigInt::one()); // 677^0, aligned so pow677[j] = 677^j
    for j in 1..n_max as usize {
        let next = &pow677[j - 1] * &base;
        pow677.push(next);
    }

    let mut used_intervals = false;
    let mut pending: Vec<u32> = Vec::new();
    for n in 2..=n_max {
        let k = 31 - (n - 1).leading_zeros(); // window: 2^k + 1 <= n <= 2^(k+1)
        let s_k = correction_sum(k);
        let lhs = int_pow(&BigInt::from(p.get(n).clone()), 16);
        if s_k.is_zero() {
            if lhs > pow677[(n - 1) as usize] {
                return exact_verdict(claim, false);
            }
        } else {
            pending.push(n);
            used_intervals = true;
        }
    }

    if !used_intervals {
        return exact_verdict(claim, true);
    }

    let (status, bits) = escalate(cap, |bits| {
        let terms = terms_for(bits);
        let mut worst = Status::Proved;
        for &n in &pending {
            let k = 31 - (n - 1).leading_zeros();
            let x = correction_sum(k) * Rat::from_integer(BigInt::from(16 * (n as u64 - 1)));
            let exp = match exp_point(&x, terms) {
                Ok(e) => e,
                Err(_) => return Status::Undecided,
            };
            let lhs = int_pow(&BigInt::from(p.get(n).clone()), 16);
            let rhs = &pow677[(n - 1) as usize];
            // lhs <= rhs * exp(x): prove against the lower enclosure
            // endpoint, refute against the upper.
            let proved = &lhs * exp.lo().denom() <= rhs * exp.lo().numer();
            if proved {
                continue;
            }
            let refuted = &lhs * exp.hi().denom() > rhs * exp.hi().numer();
            if refuted {
                return Status::Refuted;
            }
            worst = Status::Undecided;
        }
        worst
    });
    CertifiedVerdict {
        claim,
        status,
        precision_bits: Some(bits),
    }
}
