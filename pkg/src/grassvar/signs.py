"""Sign vectors, sign variation and Gale orders.

A sign vector is a plain tuple over ``{-1, 0, 1}``.  Every function that only
looks at signs also accepts numeric vectors and takes the signs of entries.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

SignVector = tuple[int, ...]

_CHARS = {"+": 1, "-": -1, "0": 0}


def sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_vector(v: Iterable) -> SignVector:
    return tuple(sign(x) for x in v)


def parse_signs(text: str) -> SignVector:
    """``"+-0-"`` -> ``(1, -1, 0, -1)``."""
    try:
        return tuple(_CHARS[c] for c in text.strip())
    except KeyError as exc:
        raise ValueError(f"bad sign character {exc.args[0]!r} in {text!r}") from None


def format_signs(x: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in x)


def var(x: Sequence) -> int:
    """Number of sign changes ignoring zeros; the zero vector has ``var = -1``."""
    changes = -1
    last = 0
    for s in map(sign, x):
        if s:
            if s != last:
                changes += 1
            last = s
    return changes


def varbar(x: Sequence) -> int:
    """Maximum of ``var`` over all ways of filling the zeros with signs.

    Linear scan keeping, for each possible current sign, the best count so far.
    The zero vector of length n gets ``n - 1``.
    """
    signs = [sign(s) for s in x]
    if not signs:
        return -1
    neg_inf = -(10 ** 9)
    best = {1: neg_inf, -1: neg_inf}
    for t, s in enumerate(signs):
        allowed = (s,) if s else (1, -1)
        if t == 0:
            best = {c: (0 if c in allowed else neg_inf) for c in (1, -1)}
            continue
        best = {
            c: (max(best[c], best[-c] + 1) if c in allowed else neg_inf)
            for c in (1, -1)
        }
    return max(best.values())


def alt(x: Sequence) -> tuple:
    """Negate the entries in even (1-based) positions."""
    return tuple(-e if i % 2 else e for i, e in enumerate(x))


def negate(x: Sequence[int]) -> SignVector:
    return tuple(-s for s in x)


def support(x: Sequence) -> tuple[int, ...]:
    """1-based positions of the nonzero entries."""
    return tuple(i for i, s in enumerate(x, 1) if s)


def _same_length(x: Sequence, y: Sequence) -> None:
    if len(x) != len(y):
        raise ValueError(f"sign vectors of lengths {len(x)} and {len(y)}")


def compose(x: Sequence[int], *ys: Sequence[int]) -> SignVector:
    """``x ∘ y ∘ ...``: earlier vectors win wherever they are nonzero."""
    out = tuple(x)
    for y in ys:
        _same_length(out, y)
        out = tuple(a if a else b for a, b in zip(out, y))
    return out


def conformal(x: Sequence[int], y: Sequence[int]) -> bool:
    _same_length(x, y)
    return all(a * b >= 0 for a, b in zip(x, y))


def sv_leq(x: Sequence[int], y: Sequence[int]) -> bool:
    """``x <= y`` iff ``y`` agrees with ``x`` on the support of ``x``."""
    _same_length(x, y)
    return all(a == 0 or a == b for a, b in zip(x, y))


def restrict(x: Sequence, coords: Iterable[int]) -> tuple:
    """Entries of ``x`` at the 1-based positions ``coords``, in that order."""
    return tuple(x[i - 1] for i in coords)


@dataclass(frozen=True)
class GaleOrder:
    """The rotated total order ``start < start+1 < ... < n < 1 < ... < start-1`` on ``[n]``."""

    n: int
    start: int = 1

    def __post_init__(self):
        if self.n and not 1 <= self.start <= self.n:
            raise ValueError(f"start {self.start} outside [1, {self.n}]")

    def rank(self, i: int) -> int:
        return (i - self.start) % self.n

    def sort(self, subset: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(subset, key=self.rank))

    def lex_key(self, subset: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.rank(i) for i in subset))


def gale_leq(i: Iterable[int], j: Iterable[int], order: GaleOrder | None = None) -> bool:
    """Componentwise comparison of two equal-size subsets sorted by ``order``."""
    i, j = tuple(i), tuple(j)
    if len(i) != len(j):
        raise ValueError(f"subsets of sizes {len(i)} and {len(j)} are not Gale-comparable")
    if order is None:
        return all(a <= b for a, b in zip(sorted(i), sorted(j)))
    return all(a <= b for a, b in zip(order.lex_key(i), order.lex_key(j)))
