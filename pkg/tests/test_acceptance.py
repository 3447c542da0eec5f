"""The six acceptance criteria, one test each; conftest prints a PASS/FAIL line per criterion."""
import random
import time
from fractions import Fraction
from itertools import product

import pytest

from generators import random_matrix, random_subspaces, random_tnn, random_tp, random_vector
from grassvar import oracle
from grassvar.amplituhedron import (
    counterexample_subspace,
    deletion_sequences,
    extend_nonneg,
    extend_pos,
    well_defined_tnn,
    well_defined_tp,
)
from grassvar.chirotope import (
    Chirotope,
    check_cocircuit_axioms,
    chirotope_of,
    cocircuits_of,
    covectors_of_chirotope,
    dual,
)
from grassvar.criteria import chirotope_sequences, is_tnn, is_tp, var_bound_necessary, varbar_bound_iff
from grassvar.exact import (
    ExactMatrix,
    Subspace,
    alt_twist,
    image_dim,
    kernel,
    maximal_minors,
    minors,
    orthogonal_complement,
    rank,
    subsets,
    vandermonde,
)
from grassvar.perturbation import (
    KINDS,
    PerturbationStep,
    densify,
    expected_length,
    make_schedule,
    max_var,
    perturb,
    realize_step,
    uniformize,
)
from grassvar.positroid import (
    all_but_one_construction,
    alternating_sets,
    basis_test_signs,
    gale_min_of,
    matroid_of,
    necklace_from_signs,
    necklace_of,
    positroid_from_necklace,
    realized_patterns,
    schubert_from_signs,
)
from grassvar.signs import alt, parse_signs, sign_vector, var, varbar

acceptance = pytest.mark.acceptance


def sv(*texts):
    return {parse_signs(t) for t in texts}


@acceptance(1, "golden-example corpus")
def test_golden_example_corpus():
    start = time.perf_counter()

    m = ExactMatrix.from_rows([[1, 0, -2, 3], [0, 2, 1, 4]])
    delta = minors(m)
    assert [delta[I] for I in subsets(4, 2)] == [2, 1, 4, 4, -6, -11]
    v1 = Subspace.span(m.entries)
    seqs = [tuple(delta[tuple(sorted((j, i)))] for i in range(1, 5) if i != j) for j in range(1, 5)]
    assert seqs == [(2, 1, 4), (2, 4, -6), (1, 4, -11), (4, -6, -11)]
    assert var_bound_necessary(chirotope_of(v1), 2).holds

    tri = Subspace.span([[0, -1, 1], [3, 0, 2]])
    c = chirotope_of(tri)
    assert (c[1, 2], c[1, 3], c[2, 3]) == (1, -1, -1)
    assert cocircuits_of(c) == sv("0+-", "0-+", "+0+", "-0-", "++0", "--0")
    assert covectors_of_chirotope(c) == sv("000", "0+-", "0-+", "+0+", "-0-", "++0", "--0",
                                           "++-", "-+-", "+-+", "--+", "+++", "---")

    report = check_cocircuit_axioms([parse_signs(t) for t in ("0+-", "0-+", "+0+", "-0-", "+-0", "-+0")])
    assert (report.ok, report.axiom, report.witness) == (False, "C3", {"X": (0, 1, -1), "Y": (1, 0, 1), "a": 3})

    ng = Subspace.span([[1, 0, 1, 0], [0, 1, 0, 1]])
    assert [s for _, s in chirotope_sequences(chirotope_of(ng))] == [(1, 0, 1), (1, -1, 0), (0, -1, 1), (1, 0, 1)]
    assert max_var(ng) == 3

    zs = chirotope_of(Subspace.span([[1, 1, 0, 0, 0], [0, 0, 1, 0, -1], [0, 0, 0, 1, 1]]))
    assert dict(chirotope_sequences(zs))[(1, 2)] == (0, 0, 0)
    assert varbar_bound_iff(zs, 3).holds and not varbar_bound_iff(zs, 3, require_basis=False).holds

    pv = Subspace.span([[1, 0, 2, 0], [0, 3, -1, 4]])
    assert minors(ExactMatrix.from_rows([[1, 0, 2, 0], [0, 3, -1, 4]]))[(3, 4)] == 8
    step = PerturbationStep(1, 4, -1)
    w, alpha = realize_step(pv, step)
    assert alpha == -4 and -8 < alpha < 0
    assert chirotope_of(w) == perturb(chirotope_of(pv), step)

    lists = {
        ("cyclic-forward", 1): "1->2,2->3,3->1,1->2",
        ("cyclic-forward", 2): "2->3,3->1,1->2,2->3",
        ("cyclic-forward", 3): "3->1,1->2,2->3,3->1",
        ("cyclic-backward", 2): "2->1,3->2,1->3,2->1,3->2,1->3",
        ("cyclic-backward", 3): "3->2,1->3,2->1,3->2,1->3,2->1",
        ("cyclic-backward", 1): "1->3,2->1,3->2,1->3,2->1,3->2",
        ("sweep-k", None): "1->2,2->3,3->2,2->1",
        ("sweep-nk", None): "2->1,3->2,2->3,1->2,2->1,3->2,2->3,1->2",
    }
    for (kind, st), expected in lists.items():
        sched = make_schedule(kind, 3, 1, 0 if st else None, st)
        assert ",".join(f"{s.i}->{s.j}" for s in sched.steps) == expected

    z = ExactMatrix.from_rows([[2, -1, 1, 1], [1, 2, -1, 3]])
    assert [s for _, s in deletion_sequences(z)] == [(-1, -3, 5), (-5, 5, 5), (4, 5, -3), (4, -5, -1)]
    assert [well_defined_tnn(z, k).well_defined for k in range(5)] == [True, True, False, False, False]
    cex = counterexample_subspace(z, 2)
    assert cex == Subspace.span([[1, 0, 0, 0], [0, -3, -5, 0]]) and image_dim(z, cex) == 1

    b = Subspace.span([[2, 1, 0, 0, 3], [0, 0, 1, 0, 0], [0, 0, 0, 1, 1]])
    A = alternating_sets(b)
    assert A == [(1, 3, 4), (1, 3, 5), (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5)]
    assert min(matroid_of(b)) == gale_min_of(A) == schubert_from_signs(b) == (1, 3, 4)
    assert basis_test_signs(b, (1, 3, 5)) and not basis_test_signs(b, (1, 4, 5))
    for vec, J, pat in [((2, 1, -1, 0, 3), (1, 3, 5), "+-+"), ((2, 1, 1, -4, -1), (1, 3, 5), "++-"),
                        ((2, 1, -1, -4, -1), (1, 3, 5), "+--"), ((2, 1, 0, -1, 2), (1, 4, 5), "+-+"),
                        ((2, 1, 0, -4, -1), (1, 4, 5), "+--")]:
        assert b.contains(vec) and sign_vector(vec[j - 1] for j in J) == parse_signs(pat)
    assert parse_signs("++-") not in realized_patterns(b, (1, 4, 5))

    assert necklace_of(vandermonde(2, 4)).entries == ((1, 2), (2, 3), (3, 4), (1, 4))

    g = Subspace.span([[1, 0, -1, -1, 1, 0], [0, 1, 1, 2, 0, 0], [0, 0, 0, 0, 0, 1]])
    assert gale_min_of(alternating_sets(g)) is None

    assert time.perf_counter() - start < 1.0


@acceptance(2, "oracle equivalence suite")
def test_oracle_equivalence_suite():
    start = time.perf_counter()
    rng = random.Random(2)
    cases = random_subspaces(200, 300, n_max=7, rational=True)
    # structured strata that random matrices almost never hit
    cases += [random_tnn(rng) for _ in range(30)] + [random_tp(rng) for _ in range(20)]
    assert sum(1 for v in cases if v.n == 7) >= 30
    for v in cases:
        c = chirotope_of(v)
        cov = oracle.covectors_of_subspace(v)
        # statistics derived from one oracle enumeration (what max_var_brute computes)
        assert covectors_of_chirotope(c) == cov
        mv = max(var(x) for x in cov)
        mvb = max((varbar(x) for x in cov if any(x)), default=-1)
        assert max_var(c) == mv
        for m in range(v.k - 1, v.n):
            assert varbar_bound_iff(c, m).holds == (mvb <= m)
            necessary = var_bound_necessary(c, m).holds
            if mv <= m:
                assert necessary
            if c.is_uniform():
                assert necessary == (mv <= m)
        assert is_tnn(v) == (mv <= v.k - 1)
        assert is_tp(v) == (mvb <= v.k - 1)
    assert time.perf_counter() - start < 300


@acceptance(3, "perturbation suite")
def test_perturbation_suite():
    rng = random.Random(3)
    cases = [v for v in random_subspaces(300, 300, n_max=6, n_min=2) if v.k]
    assert len(cases) >= 200
    for v in cases:
        n, k = v.n, v.k
        c = chirotope_of(v)
        parity = rng.randint(0, 1)
        for kind in KINDS:
            sched = make_schedule(kind, n, k, parity if kind.startswith("cyclic") else None)
            assert len(sched) == expected_length(kind, n, k)
            assert uniformize(c, sched).is_uniform()

        mv = oracle.max_var_brute(v)
        d = densify(v)
        assert all(maximal_minors(d).values())
        assert oracle.max_var_brute(d) == mv

        wrap = (-1) ** mv
        allowed = [PerturbationStep(i + 1, i, 1) for i in range(1, n)]
        allowed += [PerturbationStep(i, i + 1, 1) for i in range(1, n)]
        allowed += [PerturbationStep(1, n, wrap), PerturbationStep(n, 1, wrap)]
        for step in rng.sample(allowed, 3):
            w, _ = realize_step(v, step)
            assert oracle.max_var_brute(w) <= mv

        for i, j, eps in product(range(1, n + 1), range(1, n + 1), (1, -1)):
            step = PerturbationStep(i, j, eps)
            p = perturb(c, step)
            assert dual(p) == perturb(dual(c), PerturbationStep(j, i, -eps))
            w, _ = realize_step(v, step)
            assert chirotope_of(w) == p


@acceptance(4, "duality identities")
def test_duality_identities():
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randint(1, 8)
        x = random_vector(rng, n)
        if any(x):
            assert var(x) + varbar(alt(x)) == n - 1

    for v in random_subspaces(400, 300, n_max=8, rational=True):
        full = set(range(1, v.n + 1))
        dv = maximal_minors(v)
        dt = maximal_minors(alt_twist(orthogonal_complement(v)))
        ratios = {dv[I] / dt[tuple(sorted(full - set(I)))] for I in dv if dv[I]}
        assert len(ratios) == 1
        assert all(dt[tuple(sorted(full - set(I)))] == 0 for I in dv if dv[I] == 0)

    for n in range(1, 8):
        every = list(product((-1, 0, 1), repeat=n))
        for k in range(n + 1):
            positive = Chirotope(n, k, {I: 1 for I in subsets(n, k)})
            expected = {x for x in every if any(x) and varbar(x) <= k - 1} | {(0,) * n}
            assert covectors_of_chirotope(positive) == expected


@acceptance(5, "positroid suite")
def test_positroid_suite():
    rng = random.Random(5)
    for _ in range(200):
        v = random_tnn(rng, n_max=7)
        assert is_tnn(v)
        bases = matroid_of(v)
        assert schubert_from_signs(v) == min(bases)
        assert necklace_from_signs(v) == necklace_of(v)
        assert positroid_from_necklace(necklace_of(v)).bases == tuple(bases)
        delta = maximal_minors(v)
        for J in subsets(v.n, v.k):
            assert basis_test_signs(v, J) == (delta[J] != 0)

    for _ in range(60):
        n = rng.randint(2, 7)
        k = rng.randint(1, n - 1)
        J = tuple(sorted(rng.sample(range(1, n + 1), k)))
        vec = [rng.choice((-2, -1, 1, 2, 3)) for _ in range(k)]
        u = all_but_one_construction(n, J, vec)
        assert sum(1 for p in realized_patterns(u, J) if all(p)) == 2 ** k - 2


@acceptance(6, "amplituhedron suite")
def test_amplituhedron_suite():
    rng = random.Random(6)
    count = 0
    while count < 100:
        n = rng.randint(1, 7)
        r = rng.randint(1, min(4, n))
        z = random_matrix(rng, r, n)
        count += 1
        ker = kernel(z)
        low_var = oracle.min_var_brute(ker)
        low_varbar = oracle.min_varbar_brute(ker)
        for k in range(n + 1):
            tnn = well_defined_tnn(z, k)
            assert tnn.well_defined == (low_var is None or low_var >= k)
            assert well_defined_tp(z, k, witness=False).well_defined == (low_varbar is None or low_varbar >= k)
            if not tnn.well_defined:
                cex = counterexample_subspace(z, k)
                assert cex.k == k and is_tnn(cex)
                assert rank(z @ cex.basis.transpose()) < k
                vec, sub = tnn.witness
                assert ker.contains(vec) and sub.contains(vec)

    for _ in range(150):
        n = rng.randint(1, 7)
        x = random_vector(rng, n)
        if not any(x):
            continue
        for k in range(1, n + 1):
            if var(x) <= k - 1:
                sub = extend_nonneg(x, k)
                assert sub.k == k and sub.contains(x) and is_tnn(sub)
            if varbar(x) <= k - 1:
                sub = extend_pos(x, k)
                assert sub.k == k and sub.contains(x) and is_tp(sub)
