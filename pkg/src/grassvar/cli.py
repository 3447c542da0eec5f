"""``grassvar``: JSON in, JSON out.

Every invocation prints one envelope ``{"command", "input_digest", "result"}``
(plus ``"oracle_agreement"`` under ``--oracle``).  Exit status is 0 on success,
1 when the command's yes/no verdict is negative, and 2 on bad input.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from itertools import product
from typing import Any

from . import oracle
from .amplituhedron import (
    counterexample_subspace,
    extend_nonneg,
    extend_pos,
    well_defined_tnn,
    well_defined_tp,
)
from .chirotope import (
    Chirotope,
    check_cocircuit_axioms,
    chirotope_of,
    cocircuits_of,
    covectors_of_chirotope,
    dual,
    restrict,
)
from .criteria import is_tnn, is_tp, var_bound_necessary, varbar_bound_iff
from .exact import (
    ExactMatrix,
    Subspace,
    image_dim,
    maximal_minors,
    minors,
    orthogonal_complement,
    rank,
    row_reduce,
    to_fraction,
)
from .perturbation import (
    KINDS,
    densify,
    make_schedule,
    max_var,
    parse_steps,
    perturb,
    realize_steps,
    uniformize,
)
from .positroid import (
    GrassmannNecklace,
    alternating_sets,
    basis_test_signs,
    matroid_of,
    necklace_from_signs,
    necklace_of,
    positroid_from_necklace,
    schubert_from_signs,
)
from .signs import alt, format_signs, parse_signs, var, varbar


class InputError(ValueError):
    pass


# ---------------------------------------------------------------- serialization

def _subset_key(I) -> str:
    return ",".join(map(str, I))


def _rat(x: Fraction) -> str:
    return str(x)


def matrix_to_json(m: ExactMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [[_rat(x) for x in row] for row in m.entries]}


def subspace_to_json(v: Subspace) -> dict:
    return matrix_to_json(v.basis)


def chirotope_to_json(c: Chirotope) -> dict:
    return {"n": c.n, "k": c.k, "orientation": {_subset_key(I): format_signs((s,)) for I, s in c.items()}}


_read_cache: dict[str, str] = {}


def _read(source: str) -> str:
    """File contents, '-' meaning stdin; each source is read at most once per run."""
    if source in _read_cache:
        return _read_cache[source]
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None


def _load_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed {what} JSON: {exc.msg} at line {exc.lineno}") from None


def _entry(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError(f"matrix entries must be integers or 'p/q' strings, got {x!r}")
    return to_fraction(x)


def matrix_from_json(obj) -> ExactMatrix:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise InputError('matrix JSON needs "rows", "cols" and "entries"')
    entries = obj["entries"]
    if not isinstance(entries, list) or any(not isinstance(r, list) for r in entries):
        raise InputError('"entries" must be a list of rows')
    rows = obj.get("rows", len(entries))
    cols = obj.get("cols", len(entries[0]) if entries else None)
    if cols is None:
        raise InputError('"cols" is required for a matrix with no rows')
    if rows != len(entries) or any(len(r) != cols for r in entries):
        raise InputError(f"declared shape {rows}x{cols} does not match the entries")
    return ExactMatrix.from_rows([[_entry(x) for x in r] for r in entries], cols)


def chirotope_from_json(obj) -> Chirotope:
    try:
        n, k, orient = obj["n"], obj["k"], obj["orientation"]
    except (KeyError, TypeError):
        raise InputError('chirotope JSON needs "n", "k" and "orientation"') from None
    values = {}
    for key, val in orient.items():
        I = tuple(int(t) for t in key.split(",") if t.strip())
        if isinstance(val, str):
            s = parse_signs(val)
            if len(s) != 1:
                raise InputError(f"orientation value {val!r} is not a single sign")
            val = s[0]
        values[I] = val
    return Chirotope(n, k, values)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _vector(args) -> tuple:
    if getattr(args, "vector", None) is not None:
        return parse_signs(args.vector)
    if getattr(args, "values", None) is not None:
        return tuple(to_fraction(t) for t in args.values.split(","))
    raise InputError("give --vector (a sign string) or --values (comma-separated rationals)")


# ---------------------------------------------------------------- helpers

def _matrix(args) -> ExactMatrix:
    if not getattr(args, "matrix", None):
        raise InputError("--matrix is required")
    return matrix_from_json(_load_json(_read(args.matrix), "matrix"))


def _subspace(args) -> Subspace:
    return row_reduce(_matrix(args))


def _chirotope_or_subspace(args) -> tuple[Chirotope, Subspace | None]:
    if getattr(args, "chirotope", None):
        return chirotope_from_json(_load_json(_read(args.chirotope), "chirotope")), None
    v = _subspace(args)
    return chirotope_of(v), v


def _subset_list(sets) -> list[list[int]]:
    return [list(I) for I in sets]


def _signs_list(vectors) -> list[str]:
    return [format_signs(x) for x in sorted(vectors, reverse=True)]


def _require_matrix_for_oracle(v):
    if v is None:
        raise InputError("--oracle needs a matrix input (abstract chirotopes have no oracle)")


class Outcome:
    def __init__(self, result: dict, ok: bool = True, agreement: bool | None = None):
        self.result, self.ok, self.agreement = result, ok, agreement


# ---------------------------------------------------------------- commands

def cmd_signvar(args) -> Outcome:
    x = _vector(args)
    if args.stat == "var":
        return Outcome({"var": var(x)})
    if args.stat == "alt":
        return Outcome({"alt": format_signs(alt([(v > 0) - (v < 0) for v in x]))})
    result = varbar(x)
    agree = None
    if args.oracle:
        zeros = [p for p, s in enumerate(x) if not s]
        best = -1
        for fill in product((1, -1), repeat=len(zeros)):
            y = [(s > 0) - (s < 0) for s in x]
            for p, f in zip(zeros, fill):
                y[p] = f
            best = max(best, var(y))
        agree = best == result
    return Outcome({"varbar": result}, agreement=agree)


def cmd_plucker(args) -> Outcome:
    m = _matrix(args)
    v = row_reduce(m)
    out = {"n": v.n, "k": v.k, "plucker": {_subset_key(I): _rat(x) for I, x in maximal_minors(v).items()}}
    if rank(m) == m.rows:
        out["matrix_minors"] = {_subset_key(I): _rat(x) for I, x in minors(m).items()}
    agree = None
    if args.oracle:
        agree = [I for I, x in maximal_minors(v).items() if x] == oracle.matroid_brute(m)
    return Outcome(out, agreement=agree)


def cmd_chirotope(args) -> Outcome:
    c = chirotope_of(_subspace(args))
    out = chirotope_to_json(c)
    out["bases"] = _subset_list(c.bases())
    out["uniform"] = c.is_uniform()
    return Outcome(out)


def cmd_om(args) -> Outcome:
    if args.action == "check-axioms":
        if args.vectors is not None:
            family = [parse_signs(t) for t in args.vectors.split(",") if t.strip()]
        else:
            c, _ = _chirotope_or_subspace(args)
            family = sorted(cocircuits_of(c), reverse=True)
        report = check_cocircuit_axioms(family)
        wit = {key: (format_signs(val) if isinstance(val, tuple) else val) for key, val in report.witness.items()}
        return Outcome({"ok": report.ok, "axiom": report.axiom, "witness": wit}, ok=report.ok)
    c, v = _chirotope_or_subspace(args)
    agree = None
    if args.action == "cocircuits":
        cc = cocircuits_of(c)
        if args.oracle:
            _require_matrix_for_oracle(v)
            cov = [x for x in oracle.covectors_of_subspace(v, _budget(args)) if any(x)]
            supports = [{i for i, s in enumerate(x) if s} for x in cov]
            minimal = {x for x, sx in zip(cov, supports) if not any(sy < sx for sy in supports)}
            agree = minimal == set(cc)
        return Outcome({"cocircuits": _signs_list(cc)}, agreement=agree)
    if args.action == "covectors":
        cov = covectors_of_chirotope(c)
        if args.oracle:
            _require_matrix_for_oracle(v)
            agree = cov == oracle.covectors_of_subspace(v, _budget(args))
        return Outcome({"count": len(cov), "covectors": _signs_list(cov)}, agreement=agree)
    if args.action == "restrict":
        if args.subset is None:
            raise InputError("restrict needs --subset")
        f = _int_list(args.subset)
        r = restrict(c, f)
        if args.oracle:
            _require_matrix_for_oracle(v)
            agree = r == chirotope_of(v.restrict(f))
        return Outcome(chirotope_to_json(r), agreement=agree)
    d = dual(c)
    if args.oracle:
        _require_matrix_for_oracle(v)
        agree = d == chirotope_of(orthogonal_complement(v))
    return Outcome(chirotope_to_json(d), agreement=agree)


def cmd_check(args) -> Outcome:
    v = _subspace(args)
    verdict = is_tnn(v) if args.property == "tnn" else is_tp(v)
    agree = None
    if args.oracle:
        if args.property == "tnn":
            agree = verdict == (oracle.max_var_brute(v, _budget(args)) <= v.k - 1)
        else:
            agree = verdict == (oracle.max_varbar_brute(v, _budget(args)) <= v.k - 1)
    return Outcome({args.property: verdict}, ok=verdict, agreement=agree)


def cmd_criterion(args) -> Outcome:
    c, v = _chirotope_or_subspace(args)
    if args.mode == "var":
        report = var_bound_necessary(c, args.m)
    else:
        report = varbar_bound_iff(c, args.m, require_basis=not args.no_skip)
    out = {
        "holds": report.holds,
        "mode": args.mode,
        "bound_checked": report.bound_checked,
        "witness": None if report.witness is None else {
            "I": list(report.witness[0]), "sequence": format_signs(report.witness[1])},
    }
    agree = None
    if args.oracle:
        _require_matrix_for_oracle(v)
        if args.mode == "varbar":
            truth = oracle.max_varbar_brute(v, _budget(args)) <= args.m
            agree = truth == report.holds if not args.no_skip else None
        else:
            truth = oracle.max_var_brute(v, _budget(args)) <= args.m
            agree = (report.holds == truth) if c.is_uniform() else (report.holds or not truth)
    return Outcome(out, ok=report.holds, agreement=agree)


def cmd_maxvar(args) -> Outcome:
    c, v = _chirotope_or_subspace(args)
    result = max_var(c)
    agree = None
    if args.oracle:
        _require_matrix_for_oracle(v)
        agree = result == oracle.max_var_brute(v, _budget(args))
    return Outcome({"max_var": result}, agreement=agree)


def cmd_perturb(args) -> Outcome:
    c, v = _chirotope_or_subspace(args)
    steps = parse_steps(args.steps)
    out_c = c
    for s in steps:
        out_c = perturb(out_c, s)
    out = chirotope_to_json(out_c)
    agree = None
    if v is not None and (args.realize or args.oracle):
        w, alphas = realize_steps(v, steps)
        if args.realize:
            out["realization"] = subspace_to_json(w)
            out["alphas"] = [_rat(a) for a in alphas]
        if args.oracle:
            agree = chirotope_of(w) == out_c
    elif args.oracle:
        _require_matrix_for_oracle(v)
    return Outcome(out, agreement=agree)


def _schedule(args, n, k):
    return make_schedule(args.kind, n, k, args.m, args.start)


def cmd_schedule(args) -> Outcome:
    sched = _schedule(args, args.n, args.k)
    return Outcome({"kind": sched.kind, "n": sched.n, "k": sched.k, "length": len(sched),
                    "steps": [str(s) for s in sched.steps]})


def cmd_uniformize(args) -> Outcome:
    c, v = _chirotope_or_subspace(args)
    sched = _schedule(args, c.n, c.k)
    u = uniformize(c, sched)
    out = chirotope_to_json(u)
    out["uniform"] = u.is_uniform()
    out["steps"] = len(sched)
    agree = None
    if args.oracle:
        _require_matrix_for_oracle(v)
        w, _ = realize_steps(v, sched.steps, dyadic=True)
        agree = chirotope_of(w) == u
    return Outcome(out, agreement=agree)


def cmd_densify(args) -> Outcome:
    v = _subspace(args)
    w = densify(v) if v.k else v
    generic = all(maximal_minors(w).values())
    before = max_var(v)
    out = {"matrix": subspace_to_json(w), "generic": generic, "max_var": max_var(w), "max_var_before": before}
    agree = None
    if args.oracle:
        agree = oracle.max_var_brute(w, _budget(args)) == oracle.max_var_brute(v, _budget(args)) == before
    return Outcome(out, ok=generic, agreement=agree)


def _trace_json(trace) -> list:
    return [{"I": list(I), "sequence": [_rat(x) if isinstance(x, Fraction) else x for x in seq], "stat": s}
            for I, seq, s in trace]


def cmd_amplituhedron(args) -> Outcome:
    z = matrix_from_json(_load_json(_read(args.z), "matrix"))
    check = well_defined_tp if args.tp else well_defined_tnn
    verdict = check(z, args.k, witness=args.witness)
    out = {
        "well_defined": verdict.well_defined,
        "k": verdict.k, "n": verdict.n, "r": verdict.r, "d": verdict.d,
        "criterion_trace": _trace_json(verdict.criterion_trace),
    }
    if verdict.witness is not None:
        vec, sub = verdict.witness
        out["witness"] = {"vector": [_rat(Fraction(x)) for x in vec], "subspace": subspace_to_json(sub),
                          "image_dim": image_dim(z, sub)}
    agree = None
    if args.oracle:
        brute = oracle.amplituhedron_tp_brute if args.tp else oracle.amplituhedron_brute
        agree = brute(z, args.k, _budget(args)) == verdict.well_defined
    return Outcome(out, ok=verdict.well_defined, agreement=agree)


def cmd_extend(args) -> Outcome:
    vec = _vector(args)
    build, test = (extend_nonneg, is_tnn) if args.kind == "nonneg" else (extend_pos, is_tp)
    sub = build(vec, args.k)
    agree = None
    if args.oracle:
        stat = oracle.max_var_brute if args.kind == "nonneg" else oracle.max_varbar_brute
        agree = sub.contains(vec) and test(sub) and stat(sub, _budget(args)) <= args.k - 1
    return Outcome({"matrix": subspace_to_json(sub), "contains": sub.contains(vec)}, agreement=agree)


def cmd_positroid(args) -> Outcome:
    agree = None
    if args.action == "from-necklace":
        obj = _load_json(_read(args.necklace), "necklace") if args.necklace else None
        if not isinstance(obj, dict) or "entries" not in obj:
            raise InputError('necklace JSON needs "entries"')
        entries = tuple(tuple(sorted(e)) for e in obj["entries"])
        n = obj.get("n", len(entries))
        k = obj.get("k", len(entries[0]) if entries else 0)
        p = positroid_from_necklace(GrassmannNecklace(n, k, entries))
        return Outcome({"n": p.n, "k": p.k, "bases": _subset_list(p.bases)})
    m = _matrix(args)
    v = row_reduce(m)
    if args.action == "matroid":
        bases = alternating_sets(v) if args.from_signs else matroid_of(v)
        if args.oracle and not args.from_signs:
            agree = bases == oracle.matroid_brute(m)
        key = "alternating_sets" if args.from_signs else "bases"
        return Outcome({key: _subset_list(bases)}, agreement=agree)
    if args.action == "schubert":
        cell = schubert_from_signs(v) if args.from_signs else min(matroid_of(v))
        if args.oracle:
            agree = tuple(cell) == min(oracle.matroid_brute(m), default=None)
        return Outcome({"schubert": list(cell)}, agreement=agree)
    if args.action == "necklace":
        neck = necklace_from_signs(v) if args.from_signs else necklace_of(v)
        if args.oracle:
            agree = positroid_from_necklace(neck).bases == tuple(oracle.matroid_brute(m))
        return Outcome({"n": neck.n, "k": neck.k, "entries": _subset_list(neck.entries)}, agreement=agree)
    if args.subset is None:
        raise InputError("basis-test needs --subset")
    J = tuple(sorted(_int_list(args.subset)))
    if args.from_signs:
        verdict = basis_test_signs(v, J)
    else:
        if len(J) != v.k:
            raise InputError(f"the basis test needs a {v.k}-subset")
        verdict = maximal_minors(v)[J] != 0
    if args.oracle:
        agree = verdict == (J in oracle.matroid_brute(m))
    return Outcome({"basis": verdict, "subset": list(J)}, ok=verdict, agreement=agree)


def cmd_oracle(args) -> Outcome:
    budget = _budget(args)
    if args.action == "amplituhedron":
        z = matrix_from_json(_load_json(_read(args.z), "matrix"))
        fn = oracle.amplituhedron_tp_brute if args.tp else oracle.amplituhedron_brute
        verdict = fn(z, args.k, budget)
        out = {"well_defined": verdict}
        agree = None
        if args.oracle:
            fast = (well_defined_tp if args.tp else well_defined_tnn)(z, args.k, witness=False)
            agree = fast.well_defined == verdict
        return Outcome(out, ok=verdict, agreement=agree)
    m = _matrix(args)
    v = row_reduce(m)
    if args.action == "covectors":
        cov = oracle.covectors_of_subspace(v, budget)
        agree = cov == covectors_of_chirotope(chirotope_of(v)) if args.oracle else None
        return Outcome({"count": len(cov), "covectors": _signs_list(cov)}, agreement=agree)
    if args.action == "maxvar":
        mv, mvb = oracle.max_var_brute(v, budget), oracle.max_varbar_brute(v, budget)
        agree = mv == max_var(v) if args.oracle else None
        return Outcome({"max_var": mv, "max_varbar": mvb}, agreement=agree)
    bases = oracle.matroid_brute(m)
    agree = bases == matroid_of(v) if args.oracle else None
    return Outcome({"bases": _subset_list(bases)}, agreement=agree)


def _budget(args) -> oracle.OracleBudget:
    return oracle.OracleBudget(getattr(args, "budget", None) or oracle.DEFAULT_BUDGET.max_n)


# ---------------------------------------------------------------- parser

def _add_matrix(p, chirotope: bool = False):
    p.add_argument("--matrix", help="matrix JSON file ('-' for stdin)")
    if chirotope:
        p.add_argument("--chirotope", help="chirotope JSON file ('-' for stdin)")


def _add_oracle(p):
    p.add_argument("--oracle", action="store_true", help="cross-check against the brute-force oracle")
    p.add_argument("--budget", type=int, help="largest ambient dimension the oracle may enumerate")


def _add_vector(p):
    p.add_argument("--vector", help='sign vector such as "+-0-"')
    p.add_argument("--values", help='rational vector such as "1,-3,-5/2,0"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grassvar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("signvar", help="var, varbar or alt of one vector")
    p.add_argument("stat", choices=["var", "varbar", "alt"])
    _add_vector(p)
    _add_oracle(p)
    p.set_defaults(func=cmd_signvar)

    p = sub.add_parser("plucker", help="canonical Plücker coordinates")
    _add_matrix(p)
    _add_oracle(p)
    p.set_defaults(func=cmd_plucker)

    p = sub.add_parser("chirotope", help="chirotope and bases of a row span")
    _add_matrix(p)
    p.set_defaults(func=cmd_chirotope)

    p = sub.add_parser("om", help="oriented-matroid operations")
    p.add_argument("action", choices=["cocircuits", "covectors", "check-axioms", "restrict", "dual"])
    _add_matrix(p, chirotope=True)
    p.add_argument("--subset", help="comma-separated ground-set elements for restrict")
    p.add_argument("--vectors", help="comma-separated sign vectors for check-axioms")
    _add_oracle(p)
    p.set_defaults(func=cmd_om)

    p = sub.add_parser("check", help="total nonnegativity / positivity")
    p.add_argument("property", choices=["tnn", "tp"])
    _add_matrix(p)
    _add_oracle(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("criterion", help="sign-variation bound from chirotope sequences")
    p.add_argument("--mode", choices=["var", "varbar"], required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--no-skip", action="store_true", help="do not skip all-zero sequences (unsound)")
    _add_matrix(p, chirotope=True)
    _add_oracle(p)
    p.set_defaults(func=cmd_criterion)

    p = sub.add_parser("maxvar", help="exact maximum sign variation")
    _add_matrix(p, chirotope=True)
    _add_oracle(p)
    p.set_defaults(func=cmd_maxvar)

    p = sub.add_parser("perturb", help="apply perturbation steps such as '1->-4,2->+3'")
    p.add_argument("--steps", required=True)
    p.add_argument("--realize", action="store_true", help="also return a realizing matrix")
    _add_matrix(p, chirotope=True)
    _add_oracle(p)
    p.set_defaults(func=cmd_perturb)

    for name, func, needs_nk in (("schedule", cmd_schedule, True), ("uniformize", cmd_uniformize, False)):
        p = sub.add_parser(name, help=f"{name} with one of the four uniformizing schedules")
        p.add_argument("--kind", choices=KINDS, required=True)
        p.add_argument("--m", type=int, help="bound m (only its parity matters; cyclic kinds)")
        p.add_argument("--start", type=int, help="first source element (cyclic kinds)")
        if needs_nk:
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--k", type=int, required=True)
        else:
            _add_matrix(p, chirotope=True)
            _add_oracle(p)
        p.set_defaults(func=func)

    p = sub.add_parser("densify", help="generic subspace with the same maximum var")
    _add_matrix(p)
    _add_oracle(p)
    p.set_defaults(func=cmd_densify)

    p = sub.add_parser("amplituhedron", help="is the induced map well-defined?")
    p.add_argument("--z", required=True, help="matrix JSON of Z")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tp", action="store_true", help="totally positive instead of nonnegative")
    p.add_argument("--witness", action="store_true", help="construct a collapsing subspace when ill-defined")
    _add_oracle(p)
    p.set_defaults(func=cmd_amplituhedron)

    p = sub.add_parser("extend", help="TNN or TP subspace containing a vector")
    p.add_argument("kind", choices=["nonneg", "pos"])
    p.add_argument("--k", type=int, required=True)
    _add_vector(p)
    _add_oracle(p)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("positroid", help="positroid data")
    p.add_argument("action", choices=["matroid", "schubert", "necklace", "from-necklace", "basis-test"])
    _add_matrix(p)
    p.add_argument("--necklace", help="necklace JSON file")
    p.add_argument("--subset", help="comma-separated k-subset for basis-test")
    p.add_argument("--from-signs", action="store_true", help="use the sign-vector characterization")
    _add_oracle(p)
    p.set_defaults(func=cmd_positroid)

    p = sub.add_parser("oracle", help="brute-force ground truth")
    p.add_argument("action", choices=["covectors", "maxvar", "matroid", "amplituhedron"])
    _add_matrix(p)
    p.add_argument("--z", help="matrix JSON of Z (amplituhedron)")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--tp", action="store_true")
    _add_oracle(p)
    p.set_defaults(func=cmd_oracle)
    return parser


_FILE_ARGS = ("matrix", "chirotope", "necklace", "z")


def input_digest(args) -> str:
    payload = {}
    for key, val in sorted(vars(args).items()):
        if key.startswith("_") or key in ("func", "oracle", "budget") or val is None or val is False:
            continue
        if key in _FILE_ARGS:
            val = args._contents.get(val, val)
        payload[key] = val
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # stdin can only be read once, so file inputs are loaded up front and the
    # same text is used for hashing and parsing
    _read_cache.clear()
    for key in _FILE_ARGS:
        src = getattr(args, key, None)
        if src and src not in _read_cache:
            try:
                _read_cache[src] = _read(src)
            except InputError as exc:
                return _fail(exc)
    args._contents = dict(_read_cache)
    try:
        outcome = args.func(args)
    except (ValueError, TypeError, KeyError, ArithmeticError) as exc:
        return _fail(exc)
    finally:
        _read_cache.clear()
    envelope: dict[str, Any] = {
        "command": args.command + (f" {_sub_action(args)}" if _sub_action(args) else ""),
        "input_digest": input_digest(args),
        "result": outcome.result,
    }
    if getattr(args, "oracle", False):
        envelope["oracle_agreement"] = outcome.agreement
    print(json.dumps(envelope, indent=2, ensure_ascii=False))
    return 0 if outcome.ok else 1


def _sub_action(args) -> str | None:
    for key in ("stat", "action", "property", "kind"):
        val = getattr(args, key, None)
        if val is not None and args.command in ("signvar", "om", "check", "extend", "positroid", "oracle"):
            return val
    return None


def _fail(exc: Exception) -> int:
    msg = exc.args[0] if exc.args else type(exc).__name__
    print(json.dumps({"error": str(msg)}), file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
