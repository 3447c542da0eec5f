"""Oriented matroids presented by chirotopes.

Chirotopes are stored on sorted k-subsets of ``[n]`` and normalized so that the
lexicographically first basis has orientation ``+1``.  Evaluation on arbitrary
tuples applies the permutation sign on demand.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .exact import Subset, Subspace, maximal_minors, subsets
from .signs import SignVector, format_signs, negate, sign, support


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 if it has a repeated entry."""
    if len(set(seq)) != len(seq):
        return 0
    s = 1
    items = list(seq)
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            if items[a] > items[b]:
                s = -s
    return s


class Chirotope:
    __slots__ = ("n", "k", "_values")

    def __init__(self, n: int, k: int, orientation: Mapping[Iterable[int], int], normalize: bool = True):
        if not 0 <= k <= n:
            raise ValueError(f"rank {k} is impossible on a ground set of size {n}")
        values = {I: 0 for I in subsets(n, k)}
        for key, val in orientation.items():
            I = tuple(key)
            if tuple(sorted(I)) != I or I not in values:
                raise ValueError(f"{key!r} is not a sorted {k}-subset of [{n}]")
            if val not in (-1, 0, 1):
                raise ValueError(f"orientation values must be -1, 0 or 1, got {val!r}")
            values[I] = val
        if k == 0:
            values[()] = 1
        first = next((v for v in values.values() if v), 0)
        if not first:
            raise ValueError("a chirotope of positive rank needs at least one basis")
        if normalize and first < 0:
            values = {I: -v for I, v in values.items()}
        self.n = n
        self.k = k
        self._values = values

    def __getitem__(self, I: Iterable[int]) -> int:
        """Orientation of a subset given in any order (sorted-subset convention)."""
        I = tuple(sorted(I))
        if len(I) != self.k:
            return 0
        return self._values.get(I, 0)

    def __call__(self, *idx: int) -> int:
        """Alternating evaluation on a tuple of elements."""
        if len(idx) != self.k:
            raise ValueError(f"expected {self.k} arguments, got {len(idx)}")
        s = permutation_sign(idx)
        return s * self._values[tuple(sorted(idx))] if s else 0

    def items(self):
        return self._values.items()

    def values(self) -> dict[Subset, int]:
        return dict(self._values)

    def bases(self) -> list[Subset]:
        return [I for I, v in self._values.items() if v]

    def is_uniform(self) -> bool:
        return all(self._values.values())

    def __eq__(self, other):
        if not isinstance(other, Chirotope):
            return NotImplemented
        return (self.n, self.k, self._values) == (other.n, other.k, other._values)

    def __hash__(self):
        return hash((self.n, self.k, tuple(self._values.values())))

    def __repr__(self):
        body = ", ".join(f"{''.join(map(str, I)) or '()'}:{format_signs((v,))}" for I, v in self._values.items())
        return f"Chirotope(n={self.n}, k={self.k}, {{{body}}})"


def chirotope_of(v: Subspace) -> Chirotope:
    return Chirotope(v.n, v.k, {I: sign(x) for I, x in maximal_minors(v).items()})


def bases(c: Chirotope) -> list[Subset]:
    return c.bases()


def is_uniform(c: Chirotope) -> bool:
    return c.is_uniform()


def _first_positive(x: SignVector) -> SignVector:
    first = next((s for s in x if s), 0)
    return negate(x) if first < 0 else x


def cocircuits_of(c: Chirotope) -> frozenset[SignVector]:
    """One cocircuit pair for every (k-1)-subset that extends to a basis.

    The cocircuit vanishing on ``I`` is ``j -> chi(i_1, ..., i_{k-1}, j)``.
    """
    if c.k == 0:
        return frozenset()
    found: set[SignVector] = set()
    for I in subsets(c.n, c.k - 1):
        x = tuple(0 if j in I else c(*I, j) for j in range(1, c.n + 1))
        if any(x):
            found.add(_first_positive(x))
    return frozenset(found | {negate(x) for x in found})


def covectors_of(cocircuits: Iterable[SignVector], n: int | None = None) -> frozenset[SignVector]:
    """All compositions of cocircuits, including the empty one (the zero vector)."""
    cs = sorted(set(cocircuits))
    if n is None:
        if not cs:
            raise ValueError("ground-set size is needed for an empty cocircuit set")
        n = len(cs[0])
    zero = (0,) * n
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            if all(x):
                continue
            for cc in cs:
                y = tuple(a if a else b for a, b in zip(x, cc))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: str | None = None
    witness: dict = field(default_factory=dict)


def check_cocircuit_axioms(vectors: Iterable[SignVector]) -> AxiomReport:
    """Check C0-C3 on a family of sign vectors; report the first violation found.

    Vectors are scanned in the order given (duplicates dropped), so the witness
    reported is deterministic for a given input sequence.
    """
    vs: list[SignVector] = []
    for x in vectors:
        x = tuple(x)
        if x not in vs:
            vs.append(x)
    present = set(vs)
    for x in vs:
        if not any(x):
            return AxiomReport(False, "C0", {"X": x})
    for x in vs:
        if negate(x) not in present:
            return AxiomReport(False, "C1", {"X": x})
    for x in vs:
        sx = set(support(x))
        for y in vs:
            if y != x and y != negate(x) and sx <= set(support(y)):
                return AxiomReport(False, "C2", {"X": x, "Y": y})
    for x in vs:
        for y in vs:
            if x == negate(y):
                continue
            for a in range(len(x)):
                if x[a] == 0 or x[a] != -y[a]:
                    continue
                if not any(
                    z[a] == 0 and all(zb == 0 or zb == xb or zb == yb for zb, xb, yb in zip(z, x, y))
                    for z in vs
                ):
                    return AxiomReport(False, "C3", {"X": x, "Y": y, "a": a + 1})
    return AxiomReport(True)


def _rank_of(c: Chirotope, s: Iterable[int]) -> int:
    s = set(s)
    return max((len(s.intersection(B)) for B in c.bases()), default=0)


def restrict(c: Chirotope, f: Iterable[int]) -> Chirotope:
    """Restriction to ``f``, relabelled ``1..|f|`` in increasing order."""
    f = sorted(set(f))
    if any(not 1 <= e <= c.n for e in f):
        raise ValueError(f"restriction set {f} not inside [{c.n}]")
    l = _rank_of(c, f)
    complement: list[int] = []
    current = l
    for e in range(1, c.n + 1):
        if e in f or current == c.k:
            continue
        r = _rank_of(c, list(f) + complement + [e])
        if r > current:
            complement.append(e)
            current = r
    orientation = {}
    for J in subsets(len(f), l):
        orientation[J] = c(*(f[j - 1] for j in J), *complement)
    return Chirotope(len(f), l, orientation)


def dual(c: Chirotope) -> Chirotope:
    """Rank ``n-k`` dual: ``chi*(J) = (-1)^(sum J) chi([n] minus J)``."""
    full = set(range(1, c.n + 1))
    orientation = {}
    for J in subsets(c.n, c.n - c.k):
        orientation[J] = (-1) ** sum(J) * c[full.difference(J)]
    return Chirotope(c.n, c.n - c.k, orientation)


def weak_leq(a: Chirotope, b: Chirotope) -> bool:
    """``a <= b`` in the weak-map order (same rank): a agrees with +b or -b on its bases."""
    if (a.n, a.k) != (b.n, b.k):
        raise ValueError("weak-map comparison needs equal ground sets and ranks")
    va, vb = a.values(), b.values()
    return any(all(x == 0 or x == s * vb[I] for I, x in va.items()) for s in (1, -1))


def covectors_of_chirotope(c: Chirotope) -> frozenset[SignVector]:
    return covectors_of(cocircuits_of(c), c.n)
