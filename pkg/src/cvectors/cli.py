"""Command-line interface: ``cvectors <command> ...``.

JSON goes to stdout (or ``--json PATH``), DOT to ``--dot PATH`` and a short
human-readable summary to stderr.  Errors are printed to stderr as a JSON
object ``{"error": {...}}`` with a nonzero exit status.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from . import __version__, quiverio, reps, seeds, verify
from .dynkin import ClassificationError, DynkinType
from .quiverio import QuiverFileError
from .roots import max_coefficient, positive_roots

EXIT_FAIL = 1
EXIT_USAGE = 2


class CLIError(Exception):
    def __init__(self, message: str, kind: str = "InputError"):
        super().__init__(message)
        self.kind = kind


def _emit(obj, path: str | None):
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _note(msg: str):
    print(msg, file=sys.stderr)


def _parse_type(text: str) -> DynkinType:
    try:
        return DynkinType.parse(text)
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def _parse_vector(text: str, n: int, what: str) -> tuple[int, ...]:
    try:
        v = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise CLIError(f"{what}: expected comma-separated integers, got {text!r}") from None
    if len(v) != n:
        raise CLIError(f"{what}: expected {n} entries, got {len(v)}")
    return v


def _quiver_b(args) -> tuple[np.ndarray, str | None]:
    """Exchange matrix from ``--quiver`` / positional file or ``--type``, after the file's word."""
    path = getattr(args, "quiver", None)
    tname = getattr(args, "type", None)
    if path and tname:
        raise CLIError("give either a quiver file or --type, not both")
    if tname:
        t = _parse_type(tname)
        return t.exchange_matrix(), str(t)
    if not path:
        raise CLIError("a quiver is required (--quiver FILE or --type NAME)")
    qf = quiverio.load(path)
    return qf.mutated_b(), qf.name


def _dot(nodes: list[tuple[str, str]], edges: list[tuple[str, str, int]], name: str = "exchange") -> str:
    lines = [f"graph {name} {{"]
    for node, label in nodes:
        lines.append(f'  "{node}" [label="{label}"];')
    for a, b, k in edges:
        lines.append(f'  "{a}" -- "{b}" [label="{k + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _write(path: str, text: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


# -- commands ------------------------------------------------------------------------


def cmd_roots(args) -> int:
    t = _parse_type(args.dynkin)
    if args.max:
        value, where = max_coefficient(t)
        _emit({"type": str(t), "value": value, "vertices": [i + 1 for i in where]}, args.json)
    else:
        roots = positive_roots(t)
        _emit({"type": str(t), "count": len(roots), "roots": [list(r) for r in roots]}, args.json)
        _note(f"{t}: {len(roots)} positive roots")
    return 0


def cmd_mutate(args) -> int:
    b, _ = _quiver_b(args)
    word = quiverio.parse_word(args.word, b.shape[0])
    s = seeds.mutate_word(seeds.initial_seed(b), word)
    _emit(s.to_json(), args.json)
    return 0


def cmd_seeds(args) -> int:
    b, _ = _quiver_b(args)
    en = seeds.enumerate_seeds(b, args.budget, args.threads, edges=bool(args.dot))
    _emit([s.to_json() for s in en.seeds], args.json)
    if args.dot:
        nodes = [(s.digest(), ",".join(str(k + 1) for k in s.word) or "t0") for s in en.seeds]
        edges = [(en.seeds[p].digest(), en.seeds[c].digest(), k) for p, c, k in en.edges]
        _write(args.dot, _dot(nodes, edges))
    _note(f"{len(en.seeds)} seeds, exhaustive={en.exhaustive}")
    return 0


def cmd_cvectors(args) -> int:
    b, _ = _quiver_b(args)
    allc = seeds.c_vectors(b, args.budget, args.threads)
    pos = sorted(v for v in allc.vectors if all(x >= 0 for x in v))
    _emit({"exhaustive": allc.exhaustive, "positive": [list(v) for v in pos],
           "all": [list(v) for v in sorted(allc.vectors)]}, args.json)
    _note(f"{len(pos)} positive c-vectors, {len(allc.vectors)} in total, exhaustive={allc.exhaustive}")
    return 0


def cmd_classify(args) -> int:
    b, _ = _quiver_b(args)
    try:
        res = seeds.classify(b, args.budget)
    except ClassificationError as exc:
        raise CLIError(str(exc), "ClassificationError") from None
    if isinstance(res, str):
        _emit({"type": res}, args.json)
    else:
        _emit({"type": str(res.dynkin), "word": [k + 1 for k in res.word],
               "acyclic_b": [[int(x) for x in row] for row in res.acyclic_b],
               "labels": [i + 1 for i in res.labels]}, args.json)
    return 0


def _dynkin_quiver(b) -> reps.Quiver:
    q = reps.Quiver.from_exchange_matrix(b)
    if not q.is_acyclic():
        raise CLIError("representation commands need an acyclic quiver")
    return q


def cmd_rep_indecomposables(args) -> int:
    b, _ = _quiver_b(args)
    q = _dynkin_quiver(b)
    try:
        mods = reps.indecomposables(q)
    except ClassificationError as exc:
        raise CLIError(f"not a Dynkin quiver: {exc}", "ClassificationError") from None
    _emit({"count": len(mods), "dims": [list(M.dims) for M in mods]}, args.json)
    _note(f"{len(mods)} indecomposables")
    return 0


def _module_for(q: reps.Quiver, d: tuple[int, ...], what: str) -> reps.Representation:
    if any(x < 0 for x in d) or not any(d):
        raise CLIError(f"{what}: dimension vector must be nonnegative and nonzero")
    try:
        for M in reps.indecomposables(q):
            if M.dims == d:
                return M
        raise CLIError(f"{what}: no indecomposable with dimension vector {list(d)}")
    except ClassificationError:
        M = reps.generic_rigid(q, d)
        if M is None:
            raise CLIError(f"{what}: no rigid indecomposable with dimension vector {list(d)} found") from None
        return M


def cmd_rep_hom(args) -> int:
    b, _ = _quiver_b(args)
    q = _dynkin_quiver(b)
    da = _parse_vector(args.root_a, q.n, "rootA")
    db = _parse_vector(args.root_b, q.n, "rootB")
    M, N = _module_for(q, da, "rootA"), _module_for(q, db, "rootB")
    _emit({"a": list(da), "b": list(db), "hom": reps.hom_dim(M, N), "ext": reps.ext_dim(M, N),
           "euler": reps.euler_form(q, da, db)}, args.json)
    return 0


def cmd_cat_clusters(args) -> int:
    b, _ = _quiver_b(args)
    ls = _lockstep(b)
    cat = ls.cat
    index = {ls.root.cluster.as_set(): 0}
    states = [ls.root]
    edges = []
    head = 0
    exhaustive = True
    while head < len(states):
        st = states[head]
        for k in range(ls.n):
            nxt = ls.step(st, k)
            key = nxt.cluster.as_set()
            idx = index.get(key)
            if idx is None:
                if len(states) >= args.budget:
                    exhaustive = False
                    continue
                idx = index[key] = len(states)
                states.append(nxt)
            if head < idx:
                edges.append((head, idx, k))
        head += 1
        if not exhaustive and head >= len(states):
            break
    clusters = [{"node": st.seed.digest(), "summands": [str(x) for x in st.cluster.summands],
                 "word": [k + 1 for k in st.word]} for st in states]
    _emit({"count": len(states), "exhaustive": exhaustive, "bound_limited": cat.bound_limited,
           "clusters": clusters}, args.json)
    if args.dot:
        nodes = [(st.seed.digest(), " + ".join(str(x) for x in st.cluster.summands)) for st in states]
        _write(args.dot, _dot(nodes, [(nodes[a][0], nodes[c][0], k) for a, c, k in edges], "clusters"))
    _note(f"{len(states)} clusters, exhaustive={exhaustive}")
    return 0


def _lockstep(b) -> verify.Lockstep:
    try:
        return verify.lockstep_for(b)
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def cmd_cat_cmodule(args) -> int:
    b, _ = _quiver_b(args)
    ls = _lockstep(b)
    word = quiverio.parse_word(args.word, ls.n)
    j = _parse_vector(args.j, 1, "--j")[0]
    if not 1 <= j <= ls.n:
        raise CLIError(f"--j {j} out of range 1..{ls.n}")
    j -= 1
    state = ls.walk(word)[-1]
    pos, neg = ls.c_module(state.cluster, j)
    c = state.seed.c_vector(j)
    sign = "positive" if any(pos) and not any(neg) else "negative" if any(neg) and not any(pos) else "undecided"
    expected = c if sign == "positive" else tuple(-x for x in c)
    _emit({"word": [k + 1 for k in word], "j": j + 1, "cluster": [str(x) for x in state.cluster.summands],
           "pos": list(pos), "neg": list(neg), "sign": sign, "c": list(c),
           "agrees": sign != "undecided" and (pos if sign == "positive" else neg) == expected,
           "bound_limited": ls.cat.bound_limited}, args.json)
    return 0


def cmd_verify(args) -> int:
    claim = args.claim
    workers = args.threads
    if claim == "example10":
        rep = verify.check_example10(depth=args.depth or 12)
    elif claim == "bound":
        rep = verify.check_bound(rank_cap=args.rank_cap, rng_seed=args.rng_seed, workers=workers)
    else:
        b, name = _quiver_b(args)
        if claim == "theorem2":
            rep = verify.check_theorem2(b, max_length=6 if args.depth is None else args.depth,
                                        random_walks=args.walks, walk_length=args.walk_length,
                                        rng_seed=args.rng_seed, workers=workers, name=name)
        elif claim == "theorem6":
            rep = verify.check_theorem6(b, budget=args.budget, workers=workers, rng_seed=args.rng_seed, name=name)
        else:
            rep = verify.check_remark7(b, budget=args.budget, workers=workers, name=name)
    _emit(rep.to_dict(timing=args.timing), args.json)
    _note(f"{rep.claim}: {rep.status} ({rep.timing:.2f}s)")
    return 0 if rep.passed else EXIT_FAIL


# -- parser --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(json.dumps({"error": {"type": "UsageError", "message": message}}), file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class _ListClaims(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        json.dump([{"id": k, "statement": v} for k, v in verify.CLAIMS.items()], sys.stdout, indent=2)
        sys.stdout.write("\n")
        parser.exit(0)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cvectors", description="c-vectors of quivers and their cluster-categorical models")
    p.add_argument("--version", action="version", version=f"cvectors {__version__}")
    p.add_argument("--list-claims", nargs=0, action=_ListClaims, help="list the verifiable claims and exit")
    p.add_argument("--threads", type=int, default=1, help="worker threads (output does not depend on it)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def json_opt(sp):
        sp.add_argument("--json", metavar="PATH", help="write JSON here instead of stdout")

    def quiver_opt(sp):
        sp.add_argument("--quiver", metavar="FILE", help="quiver JSON file")
        sp.add_argument("--type", metavar="NAME", help="standard Dynkin orientation, e.g. E8")

    sp = sub.add_parser("roots", help="positive roots of an ADE type")
    sp.add_argument("dynkin", metavar="TYPE")
    sp.add_argument("--max", action="store_true", help="largest coefficient and where it occurs")
    json_opt(sp)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("mutate", help="mutate the initial seed along a word")
    quiver_opt(sp)
    sp.add_argument("--word", default="", help="1-based, comma separated")
    json_opt(sp)
    sp.set_defaults(func=cmd_mutate)

    sp = sub.add_parser("seeds", help="breadth-first enumeration of seeds")
    quiver_opt(sp)
    sp.add_argument("--budget", type=int, default=100_000)
    sp.add_argument("--dot", metavar="PATH", help="write the exchange graph as DOT")
    json_opt(sp)
    sp.set_defaults(func=cmd_seeds)

    sp = sub.add_parser("cvectors", help="c-vectors over the enumerated seeds")
    quiver_opt(sp)
    sp.add_argument("--budget", type=int, default=100_000)
    json_opt(sp)
    sp.set_defaults(func=cmd_cvectors)

    sp = sub.add_parser("classify", help="finite mutation type")
    quiver_opt(sp)
    sp.add_argument("--budget", type=int, default=100_000)
    json_opt(sp)
    sp.set_defaults(func=cmd_classify)

    rep = sub.add_parser("rep", help="representations of an acyclic quiver")
    rsub = rep.add_subparsers(dest="rep_command", required=True, parser_class=_Parser)
    sp = rsub.add_parser("indecomposables")
    sp.add_argument("quiver", metavar="QUIVER_JSON")
    json_opt(sp)
    sp.set_defaults(func=cmd_rep_indecomposables)
    sp = rsub.add_parser("hom")
    sp.add_argument("quiver", metavar="QUIVER_JSON")
    sp.add_argument("root_a", metavar="ROOT_A", help="dimension vector, e.g. 1,1,0")
    sp.add_argument("root_b", metavar="ROOT_B")
    json_opt(sp)
    sp.set_defaults(func=cmd_rep_hom)

    cat = sub.add_parser("cat", help="the cluster category")
    csub = cat.add_subparsers(dest="cat_command", required=True, parser_class=_Parser)
    sp = csub.add_parser("clusters")
    sp.add_argument("quiver", metavar="QUIVER_JSON")
    sp.add_argument("--budget", type=int, default=10_000, help="cap on clusters")
    sp.add_argument("--dot", metavar="PATH")
    json_opt(sp)
    sp.set_defaults(func=cmd_cat_clusters)
    sp = csub.add_parser("cmodule")
    sp.add_argument("quiver", metavar="QUIVER_JSON")
    sp.add_argument("--word", default="")
    sp.add_argument("--j", required=True)
    json_opt(sp)
    sp.set_defaults(func=cmd_cat_cmodule)

    sp = sub.add_parser("verify", help="check a claim and print a report")
    sp.add_argument("claim", choices=list(verify.CLAIMS))
    quiver_opt(sp)
    sp.add_argument("--budget", type=int, default=100_000)
    sp.add_argument("--depth", type=int, default=None, help="walk length (theorem2) or search depth (example10)")
    sp.add_argument("--walks", type=int, default=0, help="theorem2: random walks instead of all words")
    sp.add_argument("--walk-length", type=int, default=20)
    sp.add_argument("--rank-cap", type=int, default=8)
    sp.add_argument("--rng-seed", type=int, default=0)
    sp.add_argument("--timing", action="store_true", help="include wall-clock time in the JSON")
    json_opt(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except QuiverFileError as exc:
        print(json.dumps(exc.to_json()), file=sys.stderr)
        return EXIT_USAGE
    except CLIError as exc:
        print(json.dumps({"error": {"type": exc.kind, "message": str(exc)}}), file=sys.stderr)
        return EXIT_USAGE
    except verify.LockstepError as exc:
        print(json.dumps({"error": {"type": "LockstepError", "message": str(exc),
                                    "word": [k + 1 for k in exc.word]}}), file=sys.stderr)
        return EXIT_FAIL


run = main

if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
