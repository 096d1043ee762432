#!/usr/bin/env python3
"""Generate high-precision reference values for the interval-arithmetic
soundness tests.

Writes crates/convex-census/tests/fixtures/iv_reference.json: a deterministic
set of random rationals with 120-significant-digit evaluations of exp(x) and
x^(1/k), computed with mpmath. The Rust test asserts that every interval the
library produces stays within 10^-100 of these references, which catches any
displacement or truncation bug in the enclosures.

Run from the repository root:  python3 tools/make_interval_fixtures.py
Requires: pip install mpmath
"""

import json
import pathlib
import random

import mpmath as mp

DIGITS = 120
COUNT = 1100
SEED = 20260819

mp.mp.dps = DIGITS + 15


def main() -> None:
    rng = random.Random(SEED)

    exp_cases = []
    for _ in range(COUNT):
        q = rng.randint(1, 10**6)
        p = rng.randint(0, q)  # |x| <= 1
        sign = rng.choice([1, -1])
        x = mp.mpf(sign * p) / q
        exp_cases.append(
            {"x": f"{sign * p}/{q}", "value": mp.nstr(mp.exp(x), DIGITS)}
        )

    root_cases = []
    for _ in range(COUNT):
        q = rng.randint(1, 1000)
        p = rng.randint(1, 10**6)
        k = rng.randint(1, 32)
        x = mp.mpf(p) / q
        root_cases.append(
            {
                "x": f"{p}/{q}",
                "k": k,
                "value": mp.nstr(mp.power(x, mp.mpf(1) / k), DIGITS),
            }
        )

    out = pathlib.Path(__file__).resolve().parents[1] / (
        "crates/convex-census/tests/fixtures/iv_reference.json"
    )
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w") as fh:
        json.dump(
            {"digits": DIGITS, "exp": exp_cases, "root": root_cases},
            fh,
            indent=0,
        )
        fh.write("\n")
    print(f"wrote {out} ({len(exp_cases)} exp cases, {len(root_cases)} root cases)")


if __name__ == "__main__":
    main()
