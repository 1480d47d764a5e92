"""Command-line front end: read a complex from JSON, print one JSON report.

Exit codes: 0 success, 1 internal disagreement, 2 bad input, 3 resource cap.
"""

import argparse
import json
import random
import sys
from collections import Counter

from .cubical import CubicalComplex, LabelSet, closure, random_complex
from .euclid import (EuclideanComplex, box_labels, embed, enumerate_critical_routes,
                     route_cell, route_to_sequence)
from .homology import DEFAULT_MAX_SIMPLICES, homology_report, poset_betti
from .morse import critical, find_cycle
from .partitions import build_pk
from .poset import ResourceLimitError
from .wk import build_wk, critical_from_sequences, critical_inductive

COMMANDS = ("validate", "pk", "field", "critical", "routes", "betti", "report", "random")


class InputError(ValueError):
    pass


# -- input --------------------------------------------------------------------

def _label_text(a):
    if isinstance(a, tuple):
        return ":".join(map(str, a))
    return str(a)


def _parse_order(text, labels):
    """Match a comma list against the textual forms of ``labels``."""
    lookup = {_label_text(a): a for a in labels}
    names = [s.strip() for s in text.split(",") if s.strip()]
    try:
        order = [lookup[s] for s in names]
    except KeyError as exc:
        raise InputError(f"unknown label {exc.args[0]!r} in --order") from None
    if sorted(names) != sorted(lookup):
        raise InputError("--order must list every label exactly once")
    return order


def _point(p, n, what):
    if not isinstance(p, list) or len(p) != n or not all(isinstance(x, int) for x in p):
        raise InputError(f"{what} must be a list of {n} integers")
    return tuple(p)


def load(doc):
    """Parse a JSON document into a complex.

    Returns ``(complex, closed)``; ``closed`` tells whether the listed cubes
    were already face-closed.
    """
    if not isinstance(doc, dict):
        raise InputError("input must be a JSON object")
    kind = doc.get("type")
    if kind == "cubical":
        order = doc.get("order")
        words = doc.get("cubes")
        if not isinstance(order, list) or not isinstance(words, list):
            raise InputError('cubical input needs "order" and "cubes" lists')
        try:
            labels = LabelSet(order)
            cubes = [labels.parse_word(w) for w in words]
        except (ValueError, TypeError) as exc:
            raise InputError(str(exc)) from None
        full = closure(cubes)
        return CubicalComplex(labels, full), len(full) == len(set(cubes))
    if kind == "euclidean":
        k = doc.get("k")
        if not isinstance(k, list) or not all(isinstance(x, int) and x >= 0 for x in k):
            raise InputError('"k" must be a list of non-negative integers')
        n = len(k)
        if ("cubes" in doc) == ("exclude" in doc):
            raise InputError('euclidean input needs exactly one of "cubes" and "exclude"')
        key = "cubes" if "cubes" in doc else "exclude"
        items = doc[key]
        if not isinstance(items, list):
            raise InputError(f'"{key}" must be a list')
        cells = []
        for c in items:
            if not isinstance(c, dict):
                raise InputError('cells are objects {"a": [...], "b": [...]}')
            cells.append((_point(c.get("a"), n, '"a"'), _point(c.get("b"), n, '"b"')))
        try:
            if key == "exclude":
                return EuclideanComplex.box_minus(k, cells), True
            K = EuclideanComplex.from_cubes(k, cells)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        return K, len(K) == len(set(cells))
    raise InputError('"type" must be "cubical" or "euclidean"')


def as_cubical(K, order=None):
    """The cubical complex to analyse, with the label order applied."""
    if isinstance(K, EuclideanComplex):
        labels = box_labels(K.k).labels
        new = None if order is None else _parse_order(order, labels)
        try:
            return embed(K, new)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if order is not None:
        return K.with_order(_parse_order(order, K.labels.labels))
    return K


def _labels_json(C):
    return [_label_text(a) if isinstance(a, tuple) else a for a in C.labels.labels]


def _cells_json(C, buckets):
    out = []
    for d in sorted(buckets):
        for p in sorted(buckets[d]):
            out.append({"dim": d, "cell": _fmt(C, p)})
    return out


def _fmt(C, p):
    return "|".join(",".join(_label_text(a) for a in C.labels.members(b)) for b in p)


def _counts(buckets):
    return [{"dim": d, "count": len(v)} for d, v in sorted(buckets.items()) if v]


# -- commands -----------------------------------------------------------------

def cmd_validate(K, closed, args):
    if not closed:
        raise InputError("cube list is not face-closed")
    if isinstance(K, EuclideanComplex):
        f = Counter(sum(x != y for x, y in zip(*c)) for c in K.cubes)
        return {"type": "euclidean", "k": list(K.k), "cubes": len(K),
                "f_vector": [f[d] for d in range(max(f, default=-1) + 1)], "face_closed": True}
    return {"type": "cubical", "order": _labels_json(K), "cubes": len(K),
            "f_vector": K.f_vector(), "face_closed": True}


def cmd_pk(C, args):
    P = build_pk(C)
    prof = Counter(P.dim[p] for p in P.elements)
    return {"order": _labels_json(C), "size": len(P),
            "profile": [{"dim": d, "count": prof[d]} for d in sorted(prof)]}


def cmd_field(C, args):
    P, W = build_wk(C)
    cyc = find_cycle(P, W)
    out = {"order": _labels_json(C), "cells": len(P), "vectors": len(W),
           "gradient": cyc is None}
    if cyc is not None:
        out["cycle"] = [_fmt(C, c) for c in cyc]
    return out


def cmd_critical(C, args):
    P, W = build_wk(C)
    a = critical(P, W)
    b = critical_inductive(C)
    c = critical_from_sequences(C)
    norm = lambda x: {d: sorted(v) for d, v in x.items() if v}
    agree = norm(a) == norm(b) == norm(c)
    return {"order": _labels_json(C), "critical": _counts(a), "agreement": agree,
            "cells": _cells_json(C, a)}


def cmd_routes(K, args):
    if not isinstance(K, EuclideanComplex):
        raise InputError("routes need a euclidean complex")
    if args.order is not None:
        raise InputError("routes use the default order of A_k")
    C = embed(K)
    routes = sorted(enumerate_critical_routes(K), key=lambda r: (r.dim, r.a, r.b))
    out = []
    for r in routes:
        cs = route_to_sequence(r, K)
        doc = r.to_json()
        doc["certificate"] = {
            "E": [[_label_text(x) for x in C.labels.members(e)] for e in cs.E],
            "F": [[_label_text(x) for x in C.labels.members(f)] for f in cs.F],
            "cell": _fmt(C, route_cell(r, K))}
        out.append(doc)
    dims = Counter(r.dim for r in routes)
    return {"order": _labels_json(C), "count": len(routes),
            "by_dim": [{"dim": d, "count": dims[d]} for d in sorted(dims)], "routes": out}


def cmd_betti(C, args):
    top = args.dim_cap
    if top is None:
        # higher homology vanishes above the top critical cell
        top = max(critical_inductive(C), default=-1) + 1
    rep = poset_betti(build_pk(C), max_dim=max(top, 0), max_simplices=args.max_simplices)
    return {"order": _labels_json(C), **rep.to_json()}


def cmd_report(C, args):
    rep = homology_report(C, max_simplices=args.max_simplices)
    return {"order": _labels_json(C), **rep.to_json(), "notes": rep.notes}


def cmd_random(args):
    rng = random.Random(args.seed)
    text = args.order or "1,2,3,4"
    labels = [s.strip() for s in text.split(",") if s.strip()]
    labels = [int(s) if s.lstrip("-").isdigit() else s for s in labels]
    try:
        K = random_complex(labels, rng)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return {"type": "cubical", "order": list(K.labels.labels), "cubes": K.words()}


def run(args):
    if args.command == "random":
        return cmd_random(args)
    if args.input is None:
        raise InputError("--input is required")
    try:
        with open(args.input, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    K, closed = load(doc)
    if args.command == "validate":
        return cmd_validate(K, closed, args)
    if args.command == "routes":
        return cmd_routes(K, args)
    C = as_cubical(K, args.order)
    return {"pk": cmd_pk, "field": cmd_field, "critical": cmd_critical,
            "betti": cmd_betti, "report": cmd_report}[args.command](C, args)


def parser():
    p = argparse.ArgumentParser(prog="cubechains",
                                description="Morse-theoretic models of directed path spaces.")
    p.add_argument("--input", help="JSON file describing the complex")
    p.add_argument("--command", required=True, choices=COMMANDS)
    p.add_argument("--order", help="comma-separated label order (euclidean labels as i:j)")
    p.add_argument("--max-simplices", type=int, default=DEFAULT_MAX_SIMPLICES,
                   help="cap on the order complex size for homology (default %(default)s)")
    p.add_argument("--dim-cap", type=int, default=None, help="highest homology degree for betti")
    p.add_argument("--seed", type=int, default=0, help="seed for the random command")
    return p


def main(argv=None):
    args = parser().parse_args(argv)
    code = 0
    try:
        out = run(args)
        if args.command == "critical" and not out["agreement"]:
            code = 1
        if args.command == "field" and not out["gradient"]:
            code = 1
    except InputError as exc:
        out, code = {"error": str(exc)}, 2
    except ResourceLimitError as exc:
        out, code = {"error": str(exc)}, 3
    sys.stdout.write(json.dumps(out, ensure_ascii=False) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
