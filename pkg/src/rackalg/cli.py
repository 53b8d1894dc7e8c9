"""Command-line interface: ``rackalg <group> <command> [options]``.

Every command prints one JSON object on stdout.  Exit codes: 0 success,
1 a verification or validation failed, 2 bad input, 3 budget exhausted
(the partial result, if any, is printed).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .errors import BudgetExceeded, CapExceeded, InputError, ValidationError

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class Negative(Exception):
    """A computation finished and its check came out false."""

    def __init__(self, payload: dict):
        super().__init__("check failed")
        self.payload = payload


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if hasattr(x, "to_json"):
        return _jsonable(x.to_json())
    return x


def _emit(payload: dict, fmt: str):
    payload = _jsonable(payload)
    if fmt == "text":
        for k in sorted(payload):
            v = payload[k]
            print(f"{k}: {v if isinstance(v, (str, int, float, bool)) or v is None else json.dumps(v)}")
    else:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc


def _json_arg(text: str):
    """Inline JSON when the argument looks like a list or object, else a file."""
    if text.lstrip()[:1] in "[{":
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid inline JSON: {exc}") from exc
    return _read_json(text)


def load_rack(spec: str):
    """A rack file, or the name of a built-in rack."""
    from .racks import NAMED, Rack
    if not os.path.exists(spec) and spec in NAMED:
        v = NAMED[spec]
        return v() if callable(v) else v
    return Rack.from_dict(_read_json(spec))


def load_cocycle(X, spec: str | None):
    from .braided import cocycle_from_dict
    if spec is None:
        return cocycle_from_dict(X, {"constant_exponent": 1})
    if spec.lstrip("-").isdigit():
        return cocycle_from_dict(X, {"constant_exponent": int(spec)})
    return cocycle_from_dict(X, _read_json(spec))


def _braided(args):
    from .braided import BraidedSpace
    X = load_rack(args.rack)
    return X, BraidedSpace.rack_type(X, load_cocycle(X, args.cocycle))


# ---------------------------------------------------------------------
# rack


def cmd_rack_check(args):
    from .racks import NOT_RACK, failing_triple
    X = load_rack(args.rack)
    out = {"kind": X.kind, "size": X.size}
    if X.kind == NOT_RACK:
        out["failing_triple"] = failing_triple(X.table)
        raise Negative(out)
    return out


def cmd_rack_invariants(args):
    from collections import Counter
    from .racks import indecomposable_components, inner_group, orbits
    from .simple import is_simple
    X = load_rack(args.rack)
    phis = Counter(tuple(r) for r in X.table)
    return {
        "size": X.size,
        "kind": X.kind,
        "trivial": X.is_trivial(),
        "orbits": orbits(X),
        "components": indecomposable_components(X),
        "inner_group_order": inner_group(X).group.order(),
        "phi_fiber_sizes": sorted(phis.values()),
        "simple": is_simple(X),
    }


def cmd_rack_iso(args):
    from .racks import is_isomorphic
    f = is_isomorphic(load_rack(args.rack), load_rack(args.other))
    return {"isomorphic": f is not None, "map": f}


def cmd_rack_build(args):
    from .racks import cycle_rack, cyclic_affine, trivial
    from .simple import simple_affine_list
    if args.name:
        X = load_rack(args.name)
    elif args.cyclic:
        X = cyclic_affine(*args.cyclic)
    elif args.cycle:
        X = cycle_rack(args.cycle)
    elif args.trivial:
        X = trivial(args.trivial)
    elif args.simple_affine:
        p, t, k = args.simple_affine
        lst = simple_affine_list(p, t)
        if not 0 <= k < len(lst):
            raise InputError(f"index {k} out of range: there are {len(lst)} simple affine racks")
        X = lst[k]
    else:
        raise InputError("choose one of --name, --cyclic, --cycle, --trivial, --simple-affine")
    return X.to_dict()


# ---------------------------------------------------------------------
# extensions


def _load_ext_cocycle(X, d):
    from .extensions import ConstantCocycle, DynamicalCocycle
    if not isinstance(d, dict):
        raise InputError("cocycle JSON must be an object")
    if "beta" in d:
        return ConstantCocycle(X, d["beta"]).to_dynamical()
    if "alpha" in d and "size" in d:
        return DynamicalCocycle(X, d["size"], d["alpha"])
    raise InputError("extension cocycle JSON needs 'beta' or 'size' and 'alpha'")


def cmd_ext_build(args):
    from .extensions import extend
    X = load_rack(args.rack)
    alpha = _load_ext_cocycle(X, _read_json(args.cocycle))
    rep = alpha.validate(args.level)
    if not rep.ok:
        raise Negative({"valid": False, "report": rep.to_dict()})
    return extend(X, alpha, level=args.level, check=False).to_dict()


def cmd_ext_recognize(args):
    from .extensions import recognize_extension
    Y, X = load_rack(args.rack), load_rack(args.base)
    f = _json_arg(args.map)
    if not isinstance(f, list) or len(f) != Y.size:
        raise InputError("map must be a list with one image per element")
    alpha, fibers = recognize_extension(Y, X, f)
    return {"size": alpha.size, "alpha": alpha.alpha, "fibers": fibers}


# ---------------------------------------------------------------------
# cohomology


def cmd_coh_homology(args):
    from .cohomology import cohomology_with, rack_homology
    X = load_rack(args.rack)
    if args.cohomology:
        G = [int(g) for g in args.coefficients.split(",")]
        return cohomology_with(X, args.degree, G, quandle=args.quandle).to_dict()
    return rack_homology(X, args.degree, quandle=args.quandle).to_dict()


def cmd_coh_nonabelian(args):
    from .cohomology import nonabelian_h2
    from .permgroups import symmetric_group
    X = load_rack(args.rack)
    res = nonabelian_h2(X, symmetric_group(args.symmetric), budget=args.budget)
    return {"classes": len(res.classes), "cocycle_count": res.cocycle_count,
            "representatives": [[[g.to_json() for g in row] for row in c] for c in res.classes]}


# ---------------------------------------------------------------------
# braided


def cmd_braided_verify(args):
    from .braided import BraidedSpace, braid_equation_failure, cocycle_failure
    X = load_rack(args.rack)
    q = load_cocycle(X, args.cocycle)
    cf = cocycle_failure(X, q)
    bf = braid_equation_failure(BraidedSpace.rack_type(X, q, check=False))
    out = {"cocycle_ok": cf is None, "braid_ok": bf is None, "cocycle_witness": cf, "braid_witness": bf}
    if cf is not None or bf is not None:
        raise Negative(out)
    return out


# ---------------------------------------------------------------------
# nichols


def cmd_nichols_hilbert(args):
    from .nichols import nichols_graded
    X, B = _braided(args)
    try:
        N = nichols_graded(B, n_max=args.max_degree, max_columns=args.max_columns)
    except BudgetExceeded as exc:
        part = exc.partial
        exc.partial = None if part is None else {"dims": part.dims, "complete": False}
        raise
    out = {"dims": N.dims, "total": N.total, "top_degree": N.top_degree, "poincare_ok": N.poincare_ok(),
           "complete": N.complete}
    if not N.complete:
        raise BudgetExceeded(f"stopped at degree {args.max_degree} before B^n vanished", args.max_degree, out)
    return out


def cmd_nichols_relations(args):
    from .nichols import nichols_graded, parse_relation, presentation_check, relation_set, word_labels
    X, B = _braided(args)
    if os.path.exists(args.relations):
        texts = _read_json(args.relations)
        if not isinstance(texts, list):
            raise InputError("relations file must be a JSON list of strings")
        rels = [parse_relation(t, word_labels(X)) for t in texts]
    else:
        rels = relation_set(args.relations, X)
    N = nichols_graded(B, n_max=args.max_degree, max_columns=args.max_columns)
    Q = presentation_check(B, rels, N.top_degree + 1, max_columns=args.max_columns)
    target = N.dims + [0]
    out = {"quotient_dims": Q.dims, "nichols_dims": N.dims, "match": Q.dims[:len(target)] == target}
    if not out["match"]:
        raise Negative(out)
    return out


def cmd_nichols_integral(args):
    from .nichols import nichols_graded
    X, B = _braided(args)
    word = B.parse_word(args.word)
    chain = B.parse_word(args.chain)
    N = nichols_graded(B, n_max=max(len(word), 1), max_columns=args.max_columns)
    deg, coords = N.derivation_chain(word, chain)
    out = {"degree": deg, "coords": {str(k): v for k, v in sorted(coords.items())}}
    if deg == 0:
        out["value"] = coords.get(0, 0)
    return out


# ---------------------------------------------------------------------
# fourier


def _split_from_json(X, d):
    from .abelian import FinAbGroup
    from .extensions import XModule
    from .fourier import SplitCocycle
    try:
        A = FinAbGroup(d["A"])
        M = XModule(X, A, d["eta"], d["tau"])
        q = load_cocycle_dict(X, d.get("q", {"constant_exponent": 1}))
        return SplitCocycle(M, d["kappa"], d["chi"], d["mu"], q)
    except KeyError as exc:
        raise InputError(f"split cocycle JSON is missing {exc.args[0]!r}") from exc


def load_cocycle_dict(X, d):
    from .braided import cocycle_from_dict
    return cocycle_from_dict(X, d)


def cmd_fourier_map(args):
    from .fourier import basis_change_matrix, derived_rack_formula, fourier_transform, z3_split
    if args.example:
        q = [[-1] * 3 for _ in range(3)]
        sc = z3_split(q, tilde=(args.example == "z3-tilde"))
    else:
        if not (args.rack and args.split):
            raise InputError("give --example, or both --rack and --split")
        sc = _split_from_json(load_rack(args.rack), _read_json(args.split))
    res = fourier_transform(sc)
    S = res.solution
    N = res.braided.n
    return {
        "labels": res.labels,
        "S": [[list(S(x, y)) for y in range(N)] for x in range(N)],
        "F": res.F,
        "derived_rack": derived_rack_formula(sc),
        "basis_change": basis_change_matrix(res, sc.A),
        "conjugation_ok": True,
    }


def cmd_fourier_intertwine(args):
    from .abelian import FinAbGroup
    from .cyclotomic import CycScalar, simplify
    from .fourier import paper_intertwiners
    if args.case == "ej-uno":
        z = simplify(CycScalar.zeta(3, 1))
        kw = dict(sigma=[0, 1], omega=(1,), q=[[1, -1], [z, 1]], A=FinAbGroup([3]))
    else:
        kw = dict(q=[[-1] * 3 for _ in range(3)])
        if args.case == "ej-dos-2":
            kw["r_mode"] = args.r_mode
    res = paper_intertwiners(args.case, args.n, cap=args.cap, **kw)
    out = {"case": args.case, "n": args.n, "ok": res.ok, "failure": res.failure}
    if not res.ok:
        raise Negative(out)
    return out


# ---------------------------------------------------------------------
# simple


def cmd_simple_test(args):
    from .simple import is_simple, proper_quotient
    X = load_rack(args.rack)
    simple = is_simple(X)
    out = {"simple": simple, "trivial": X.is_trivial(), "quotient": None}
    if not simple and X.size > 1:
        pq = proper_quotient(X)
        if pq is not None:
            Y, proj = pq
            out["quotient"] = Y.to_dict()
            out["projection"] = proj
    return out


def cmd_simple_count_affine(args):
    from .simple import simple_affine_count, simple_affine_list
    out = {"p": args.p, "t": args.t, "count": simple_affine_count(args.p, args.t)}
    if args.list:
        out["racks"] = [X.to_dict() for X in simple_affine_list(args.p, args.t)]
    return out


def cmd_simple_enumerate(args):
    from .simple import enumerate_racks
    lst = enumerate_racks(args.n, args.kind, cap=args.cap, indecomposable=args.indecomposable)
    return {"n": args.n, "kind": args.kind, "count": len(lst), "racks": [X.to_dict()["table"] for X in lst]}


# ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rackalg", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--format", choices=("json", "text"), default="json")
    groups = p.add_subparsers(dest="group", required=True)

    def sub(group, name, func, help_):
        sp = group.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        return sp

    def rack_arg(sp, flag="--rack"):
        flags = (flag, "--file") if flag == "--rack" else (flag,)
        sp.add_argument(*flags, dest=flag.lstrip("-"), required=True, help="rack JSON file or built-in name")

    def cocycle_arg(sp):
        sp.add_argument("--cocycle", help="cocycle JSON file or an exponent e for constant -1^e (default -1)")

    g = groups.add_parser("rack").add_subparsers(dest="cmd", required=True)
    sp = sub(g, "check", cmd_rack_check, "structure check")
    rack_arg(sp)
    sp = sub(g, "invariants", cmd_rack_invariants, "orbits, components, inner group, simplicity")
    rack_arg(sp)
    sp = sub(g, "iso", cmd_rack_iso, "isomorphism test")
    rack_arg(sp)
    rack_arg(sp, "--other")
    sp = sub(g, "build", cmd_rack_build, "print a rack JSON")
    sp.add_argument("--name")
    sp.add_argument("--cyclic", nargs=2, type=int, metavar=("N", "Q"))
    sp.add_argument("--cycle", type=int)
    sp.add_argument("--trivial", type=int)
    sp.add_argument("--simple-affine", nargs=3, type=int, metavar=("P", "T", "K"))

    g = groups.add_parser("ext").add_subparsers(dest="cmd", required=True)
    sp = sub(g, "build", cmd_ext_build, "extension X ×_α S")
    rack_arg(sp)
    sp.add_argument("--cocycle", required=True)
    sp.add_argument("--level", choices=("Rack", "Quandle", "CrossedSet"))
    sp = sub(g, "recognize", cmd_ext_recognize, "cocycle of a morphism with equal fibers")
    rack_arg(sp)
    rack_arg(sp, "--base")
    sp.add_argument("--map", required=True, help="JSON list file or inline list")

    g = groups.add_parser("coh").add_subparsers(dest="cmd", required=True)
    sp = sub(g, "homology", cmd_coh_homology, "integral homology or cohomology")
    rack_arg(sp)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--quandle", action="store_true")
    sp.add_argument("--cohomology", action="store_true")
    sp.add_argument("--coefficients", default="0", help="cyclic orders, 0 for Z")
    sp = sub(g, "nonabelian", cmd_coh_nonabelian, "H^2 with coefficients in S_m")
    rack_arg(sp)
    sp.add_argument("--symmetric", type=int, required=True)
    sp.add_argument("--budget", type=int, default=10**6)

    g = groups.add_parser("braided").add_subparsers(dest="cmd", required=True)
    sp = sub(g, "verify", cmd_braided_verify, "cocycle law and braid equation")
    rack_arg(sp)
    cocycle_arg(sp)

    g = groups.add_parser("nichols").add_subparsers(dest="cmd", required=True)
    for name, func, help_ in (("hilbert", cmd_nichols_hilbert, "dimensions per degree"),
                              ("relations", cmd_nichols_relations, "presentation check"),
                              ("integral", cmd_nichols_integral, "evaluate a derivation chain")):
        sp = sub(g, name, func, help_)
        rack_arg(sp)
        cocycle_arg(sp)
        sp.add_argument("--max-degree", type=int, default=20)
        sp.add_argument("--max-columns", type=int, default=10**4)
        if name == "relations":
            sp.add_argument("--relations", required=True, help="stored set name or JSON list of strings")
        if name == "integral":
            sp.add_argument("--word", required=True)
            sp.add_argument("--chain", required=True)

    g = groups.add_parser("fourier").add_subparsers(dest="cmd", required=True)
    sp = sub(g, "map", cmd_fourier_map, "Fourier transform of a split cocycle")
    sp.add_argument("--rack")
    sp.add_argument("--split")
    sp.add_argument("--example", choices=("z3", "z3-tilde"))
    sp = sub(g, "intertwine", cmd_fourier_intertwine, "verify a named t-equivalence")
    sp.add_argument("--case", choices=("ej-uno", "ej-dos-1", "ej-dos-2"), required=True)
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--cap", type=int, default=5)
    sp.add_argument("--r-mode", choices=("solved", "literal"), default="solved")

    g = groups.add_parser("simple").add_subparsers(dest="cmd", required=True)
    sp = sub(g, "test", cmd_simple_test, "simplicity")
    rack_arg(sp)
    sp = sub(g, "count-affine", cmd_simple_count_affine, "number of simple affine racks of order p^t")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--list", action="store_true")
    sp = sub(g, "enumerate", cmd_simple_enumerate, "racks of order n up to isomorphism")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--kind", choices=("Rack", "Quandle", "CrossedSet"), default="Rack")
    sp.add_argument("--indecomposable", action="store_true")
    sp.add_argument("--cap", type=int, default=5)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _emit(args.func(args), args.format)
        return EXIT_OK
    except Negative as neg:
        _emit(neg.payload, args.format)
        return EXIT_NEGATIVE
    except ValidationError as exc:
        print(f"error: {exc} [{exc.condition}] witness={exc.witness}", file=sys.stderr)
        _emit({"valid": False, "condition": exc.condition, "witness": exc.witness}, args.format)
        return EXIT_NEGATIVE
    except (BudgetExceeded, CapExceeded) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        _emit({"budget_exhausted": True, "partial": getattr(exc, "partial", None)}, args.format)
        return EXIT_BUDGET
    except (InputError, ValueError, KeyError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
