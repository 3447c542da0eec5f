"""Single-column perturbations of oriented matroids and their realizations.

An ``i ->eps j`` step turns on a small ``eps``-signed multiple of element i
inside element j.  On chirotopes it only ever fills in zeros, so repeated
passes make an oriented matroid uniform; the monotone steps do so without
raising the maximum sign variation of covectors.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chirotope import Chirotope, chirotope_of
from .criteria import chirotope_sequences
from .exact import ExactMatrix, Subspace, maximal_minors, row_reduce, subsets
from .signs import var

KINDS = ("cyclic-forward", "cyclic-backward", "sweep-k", "sweep-nk")

_STEP = re.compile(r"^\s*(\d+)\s*->\s*([+-])\s*(\d+)\s*$")


@dataclass(frozen=True)
class PerturbationStep:
    i: int
    j: int
    epsilon: int = 1

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon!r}")
        if self.i < 1 or self.j < 1:
            raise ValueError("step indices are 1-based")

    @classmethod
    def parse(cls, text: str) -> PerturbationStep:
        """``"1->-4"`` is the step 1 ->_- 4."""
        m = _STEP.match(text)
        if not m:
            raise ValueError(f"cannot parse perturbation step {text!r}")
        return cls(int(m.group(1)), int(m.group(3)), 1 if m.group(2) == "+" else -1)

    def __str__(self):
        return f"{self.i}->{'+' if self.epsilon > 0 else '-'}{self.j}"

    def check(self, n: int) -> None:
        if not (1 <= self.i <= n and 1 <= self.j <= n):
            raise ValueError(f"step {self} has an index outside [1, {n}]")


def parse_steps(text: str) -> list[PerturbationStep]:
    return [PerturbationStep.parse(part) for part in text.split(",") if part.strip()]


@dataclass(frozen=True)
class Schedule:
    kind: str
    n: int
    k: int
    steps: tuple[PerturbationStep, ...]
    m_parity: int | None = None

    def __len__(self):
        return len(self.steps)


def expected_length(kind: str, n: int, k: int) -> int:
    return {
        "cyclic-forward": k * (2 * n - k - 1),
        "cyclic-backward": (n - k) * (n + k - 1),
        "sweep-k": k * (2 * n - 2),
        "sweep-nk": (n - k) * (2 * n - 2),
    }[kind]


def make_schedule(kind: str, n: int, k: int, m_parity: int | None = None, start: int | None = None) -> Schedule:
    """The uniformizing step list of the given kind.

    The cyclic kinds walk around ``[n]`` and need the parity of the target
    bound m for the wrap-around step; ``start`` picks where the window of
    consecutive steps begins (the source element of its first step).
    """
    if kind not in KINDS:
        raise ValueError(f"unknown schedule kind {kind!r}; expected one of {', '.join(KINDS)}")
    if not 0 <= k <= n or n < 1:
        raise ValueError(f"no schedule for k={k}, n={n}")
    cyclic = kind.startswith("cyclic")
    if cyclic and m_parity is None:
        raise ValueError(f"schedule {kind} needs the parity of m")
    if start is not None and not cyclic:
        raise ValueError("only cyclic schedules take a start element")
    if start is not None and not 1 <= start <= n:
        raise ValueError(f"start {start} outside [1, {n}]")
    parity = None if m_parity is None else m_parity % 2
    wrap = 1 if parity in (None, 0) else -1
    length = expected_length(kind, n, k)
    steps: list[PerturbationStep] = []
    if kind == "cyclic-forward":
        a = 1 if start is None else start
        for _ in range(length):
            b = a % n + 1
            steps.append(PerturbationStep(a, b, wrap if a == n and b == 1 else 1))
            a = b
    elif kind == "cyclic-backward":
        a = (2 if n > 1 else 1) if start is None else start
        for _ in range(length):
            b = (a - 2) % n + 1
            steps.append(PerturbationStep(a, b, wrap if a == 1 and b == n else 1))
            a = a % n + 1
    else:
        up = [PerturbationStep(a, a + 1) for a in range(1, n)]
        down_from_top = [PerturbationStep(a, a - 1) for a in range(n, 1, -1)]
        if kind == "sweep-k":
            sweep, reps = up + down_from_top, k
        else:
            up_from_bottom = [PerturbationStep(a + 1, a) for a in range(1, n)]
            down = [PerturbationStep(a - 1, a) for a in range(n, 1, -1)]
            sweep, reps = up_from_bottom + down, n - k
        steps = sweep * reps
    return Schedule(kind, n, k, tuple(steps), parity)


def is_coloop(c: Chirotope, j: int) -> bool:
    return all(j in B for B in c.bases())


def perturb(c: Chirotope, step: PerturbationStep) -> Chirotope:
    step.check(c.n)
    i, j, eps = step.i, step.j, step.epsilon
    if i == j or is_coloop(c, j):
        return c
    lo, hi = min(i, j), max(i, j)
    orientation = {}
    for I, val in c.items():
        if val == 0 and j in I and i not in I:
            between = sum(1 for e in I if lo < e < hi)
            swapped = tuple(sorted((set(I) - {j}) | {i}))
            val = (-1) ** between * eps * c[swapped]
        orientation[I] = val
    return Chirotope(c.n, c.k, orientation)


def uniformize(c: Chirotope, sched: Schedule) -> Chirotope:
    if (sched.n, sched.k) != (c.n, c.k):
        raise ValueError(f"schedule built for n={sched.n}, k={sched.k} applied to n={c.n}, k={c.k}")
    for step in sched.steps:
        c = perturb(c, step)
    return c


def max_var(x: Subspace | Chirotope) -> int:
    """Exact maximum of ``var`` over the covectors, via the all-plus sweep."""
    c = chirotope_of(x) if isinstance(x, Subspace) else x
    if c.k == 0:
        return -1
    u = uniformize(c, make_schedule("sweep-k", c.n, c.k))
    return c.k - 1 + max(var(seq) for _, seq in chirotope_sequences(u))


def _dyadic_floor(r: Fraction) -> Fraction:
    """Largest power of two that is at most ``r`` (r > 0)."""
    e = r.numerator.bit_length() - r.denominator.bit_length()
    p = Fraction(2) ** e
    while p > r:
        p /= 2
    while p * 2 <= r:
        p *= 2
    return p


def realize_step(v: Subspace, step: PerturbationStep, dyadic: bool = False) -> tuple[Subspace, Fraction]:
    """Add ``alpha`` times column i to column j, with alpha of sign epsilon.

    ``alpha`` is half the largest magnitude that keeps every nonzero Plücker
    coordinate's sign, or ``epsilon`` itself when no coordinate constrains it.
    With ``dyadic`` it is rounded down to a power of two, which keeps entry
    sizes from compounding over long step sequences.
    """
    step.check(v.n)
    i, j, eps = step.i, step.j, step.epsilon
    if i == j:
        return v, Fraction(0)
    delta = maximal_minors(v)
    ratios = []
    for I in subsets(v.n, v.k):
        if j in I and i not in I and delta[I]:
            other = delta[tuple(sorted((set(I) - {j}) | {i}))]
            if other:
                ratios.append(abs(delta[I]) / abs(other))
    if not ratios:
        alpha = Fraction(eps)
    else:
        half = min(ratios) / 2
        alpha = eps * (_dyadic_floor(half) if dyadic else half)
    rows = []
    for row in v.basis.entries:
        r = list(row)
        r[j - 1] += alpha * r[i - 1]
        rows.append(r)
    return row_reduce(ExactMatrix.from_rows(rows, v.n)), alpha


def realize_steps(v: Subspace, steps: Sequence[PerturbationStep], dyadic: bool = False) -> tuple[Subspace, list[Fraction]]:
    alphas = []
    for s in steps:
        v, a = realize_step(v, s, dyadic)
        alphas.append(a)
    return v, alphas


def densify(v: Subspace) -> Subspace:
    """A generic subspace with the same maximum sign variation as ``v``."""
    if v.k == 0:
        raise ValueError("densify needs a subspace of positive dimension")
    return realize_steps(v, make_schedule("sweep-k", v.n, v.k).steps, dyadic=True)[0]
