"""Independent oracles the main implementation must agree with.

The Bernoulli oracle is the Akiyama-Tanigawa triangle, structurally
unrelated to the binomial recurrence used by the package; it natively
produces the B_1 = +1/2 convention, so index 1 is flipped to match the
t/(e^t - 1) convention used everywhere else.
"""

from __future__ import annotations

from fractions import Fraction


def bernoulli_akiyama_tanigawa(n: int) -> list[Fraction]:
    """B_0..B_n via the Akiyama-Tanigawa triangle (B_1 adjusted to -1/2)."""
    row = [Fraction(0)] * (n + 1)
    out: list[Fraction] = []
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    if n >= 1:
        out[1] = -out[1]
    return out
