"""Command-line entry point: ``leapers {construct,verify,search,chords,render}``.

Exit codes: 0 success or valid, 1 invalid but well-formed, 2 usage or
classification error, 3 malformed input file, 4 unmet precondition.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from leapers.chords.figures import Figure, parse_cells
from leapers.chords.fork import Basis, ForkCertificate, fork_trace
from leapers.chords.suites import SuiteReport, chord_suite, fork_suite, quad_suite
from leapers.core.construct import free_construction, halffree_construction, phi_embed
from leapers.core.embedding import GridEmbedding, check_pair, factor, product, verify_embedding
from leapers.core.leaper import Leaper, LeaperClass
from leapers.documents import Document, MalformedDocument, load, make_meta, save
from leapers.errors import (
    BoardTooSmall,
    ForcingCounterexample,
    IterationLimit,
    OverlapError,
    PreconditionUnmet,
    RhombusViolation,
    WrongLeaperClass,
)
from leapers.extremal.search import SearchLimits, search_table
from leapers.render import format_table, picture_of_embedding, picture_of_path, to_ascii, to_svg

OK, INVALID, USAGE, MALFORMED, PRECONDITION = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def count(text: str) -> int:
    """Integers written as ``10000000``, ``10_000_000``, ``1e7`` or ``10^7``."""
    t = text.strip().replace("_", "")
    m = re.fullmatch(r"(\d+)\^(\d+)", t)
    try:
        if m:
            return int(m.group(1)) ** int(m.group(2))
        if re.fullmatch(r"\d+[eE]\d+", t):
            return int(float(t))
        return int(t)
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"not a count: {text!r}")


def vector(text: str) -> tuple[int, int]:
    try:
        x, y = text.replace("(", "").replace(")", "").split(",")
        return int(x), int(y)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y but got {text!r}") from None


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# construct

def _leaper(args) -> Leaper:
    try:
        return Leaper(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_construct(args) -> int:
    leaper = _leaper(args)
    if leaper.kind is LeaperClass.REDUCIBLE:
        d = leaper.d
        print(f"reducible leaper: use ({leaper.p // d},{leaper.q // d})", file=sys.stderr)
        return USAGE
    if leaper.kind is LeaperClass.NONSKEW:
        print(f"{leaper} is not a skew leaper", file=sys.stderr)
        return USAGE
    wanted = {"free": LeaperClass.FREE, "halffree": LeaperClass.HALFFREE, "phi": LeaperClass.HALFFREE}
    if leaper.kind is not wanted[args.variant]:
        hint = "free" if leaper.kind is LeaperClass.FREE else "halffree or phi"
        print(f"{leaper} is {leaper.describe()}: use --variant {hint}", file=sys.stderr)
        return USAGE

    if args.variant == "phi":
        if args.n is None:
            raise UsageError("--variant phi needs -n")
        try:
            pe = phi_embed(leaper, args.n)
        except BoardTooSmall as exc:
            print(exc, file=sys.stderr)
            return PRECONDITION
        doc = Document("embedding", pe.embedding,
                       make_meta(leaper, variant="phi", n=args.n, k=pe.source.k,
                                 source=[pe.source.alpha.leaper.p, pe.source.alpha.leaper.q]))
        m, n = pe.m, args.n
    else:
        build = free_construction if args.variant == "free" else halffree_construction
        c = build(leaper, args.k)
        params = dict(variant=args.variant, k=args.k, n=c.n)
        if args.embedding:
            doc = Document("embedding", c.embedding(), make_meta(leaper, **params))
        else:
            doc = Document("pair", (c.alpha, c.beta), make_meta(leaper, **params))
        m, n = c.m, c.n
    print(f"m={m} n={n}")
    if args.out:
        save(doc, args.out)
    return OK


# verify

def _print_report(rep) -> None:
    a_x, a_y, b_x, b_y = rep.sizes
    print(f"disjoint: {rep.disjoint}")
    if rep.witness_overlap is not None:
        print(f"witness_overlap: {list(rep.witness_overlap)}")
    print(f"sizes: a_X={a_x} a_Y={a_y} b_X={b_x} b_Y={b_y}")
    print(f"min_n: {rep.min_n}")
    print(f"n: {rep.n}")
    print(f"box_ok: {rep.box_ok}")
    for msg in rep.problems():
        print(msg)


def cmd_verify(args) -> int:
    doc = load(args.file)
    if doc.kind == "pair":
        alpha, beta = doc.payload
        rep = check_pair(alpha, beta, args.n)
        _print_report(rep)
        print("valid" if rep.ok else "invalid")
        return OK if rep.ok else INVALID
    if doc.kind == "embedding":
        emb: GridEmbedding = doc.payload
        direct = verify_embedding(emb, doc.leaper, args.n)
        ok = direct
        try:
            alpha, beta = factor(emb)
        except (RhombusViolation, ValueError) as exc:
            print(f"factor: {exc}")
            ok = False
        else:
            rep = check_pair(alpha, beta, args.n)
            _print_report(rep)
            ok = ok and rep.ok
        for msg in emb.violations():
            print(msg)
        print(f"direct check: {'pass' if direct else 'fail'}")
        print("valid" if ok else "invalid")
        return OK if ok else INVALID
    raise UsageError(f"verify expects a pair or embedding document, got {doc.kind}")


# search

def cmd_search(args) -> int:
    leaper = _leaper(args)
    if leaper.kind is LeaperClass.NONSKEW:
        raise UsageError(f"{leaper} is not a skew leaper")
    limits = SearchLimits(max_nodes=args.max_nodes, max_m=args.max_m, time_budget=args.time_budget)
    rows = search_table(leaper, args.n, limits)
    _write(format_table(rows), None)
    if args.out:
        save(Document("search_table", rows,
                      make_meta(leaper, n=args.n, max_nodes=args.max_nodes,
                                max_m=args.max_m, time_budget=args.time_budget)), args.out)
    if args.table:
        Path(args.table).write_text(format_table(rows))
    return OK


# chords

def _print_certificate(cert: ForkCertificate) -> None:
    print(f"basis: u={cert.basis.u} v={cert.basis.v}")
    print(f"inputs: {cert.inputs[0]} {cert.inputs[1]}")
    for i, s in enumerate(cert.steps):
        tag = {True: "regular", False: "irregular", None: "final"}[s.regular]
        g = s.pair
        print(f"step {i}: pair ({g.x},{g.y}),(-{g.z},{g.t}) realised {','.join(s.realized)} "
              f"chose {s.chosen}={s.plane_side} via {s.witness[0]}->{s.witness[1]} [{tag}]")
    c = cert.conclusion
    print(f"conclusion: {c.target}={c.vector} realised by {c.witness[0]}->{c.witness[1]} "
          f"(from {c.multiple}*{c.target})")


def _print_suite(rep: SuiteReport) -> int:
    print(rep.summary())
    for k, v in rep.stats.items():
        print(f"{k}: {v}")
    for ce in rep.counterexamples[:20]:
        print(f"counterexample: {ce}")
    return OK if rep.ok else INVALID


def cmd_chords(args) -> int:
    if args.chords_cmd == "fork-trace":
        try:
            fig = Figure(parse_cells(args.cells))
        except ValueError as exc:
            raise UsageError(f"bad --cells: {exc}") from None
        basis = Basis(args.basis_u, args.basis_v)
        try:
            cert = fork_trace(fig, basis, args.u1, args.u2)
        except (ForcingCounterexample, IterationLimit) as exc:
            print(f"counterexample: {exc}")
            return INVALID
        _print_certificate(cert)
        if args.out:
            save(Document("certificate", cert,
                          make_meta(None, u1=list(args.u1), u2=list(args.u2))), args.out)
        return OK
    if args.chords_cmd == "chord-suite":
        return _print_suite(chord_suite(args.max_cells, args.max_n))
    if args.chords_cmd == "quad-suite":
        return _print_suite(quad_suite(args.cases, args.seed))
    return _print_suite(fork_suite(args.cases, args.seed, deep=args.deep))


# render

def cmd_render(args) -> int:
    doc = load(args.file)
    if doc.kind == "path":
        pic = picture_of_path(doc.payload)
    elif doc.kind == "pair":
        try:
            pic = picture_of_embedding(product(*doc.payload))
        except OverlapError as exc:
            print(f"pair does not form an embedding: {exc}", file=sys.stderr)
            return INVALID
    elif doc.kind == "embedding":
        pic = picture_of_embedding(doc.payload)
    else:
        raise UsageError(f"render expects a path, pair or embedding document, got {doc.kind}")
    _write(to_svg(pic) if args.format == "svg" else to_ascii(pic), args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leapers", description="Grid embeddings into leaper graphs.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("construct", help="build a path pair for a free or half-free leaper")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-q", type=int, required=True)
    c.add_argument("-k", type=int, default=1)
    c.add_argument("-n", type=int, help="board size (phi variant)")
    c.add_argument("--variant", choices=("free", "halffree", "phi"), required=True)
    c.add_argument("--embedding", action="store_true", help="save the product instead of the pair")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a pair or embedding document against an n x n board")
    v.add_argument("file")
    v.add_argument("-n", type=int, required=True)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="exhaustive maximum-grid search for n = 1..N")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("-q", type=int, required=True)
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--max-nodes", type=count, default=SearchLimits.max_nodes)
    s.add_argument("--max-m", type=int, default=SearchLimits.max_m)
    s.add_argument("--time-budget", type=float, default=SearchLimits.time_budget)
    s.add_argument("--out", help="search_table JSON")
    s.add_argument("--table", help="aligned text table")
    s.set_defaults(func=cmd_search)

    ch = sub.add_parser("chords", help="forced-chord experiments")
    chs = ch.add_subparsers(dest="chords_cmd", required=True)
    f = chs.add_parser("fork-trace")
    f.add_argument("--cells", required=True, help='figure cells as "x,y;x,y;..."')
    f.add_argument("--basis-u", type=vector, default=(1, 0))
    f.add_argument("--basis-v", type=vector, default=(0, 1))
    f.add_argument("--u1", type=vector, required=True, help="coefficients a,b")
    f.add_argument("--u2", type=vector, required=True, help="coefficients c,d")
    f.add_argument("--out")
    cs = chs.add_parser("chord-suite")
    cs.add_argument("--max-cells", type=int, default=8)
    cs.add_argument("--max-n", type=int, default=4)
    for name in ("quad-suite", "fork-suite"):
        g = chs.add_parser(name)
        g.add_argument("--cases", type=count, default=10_000)
        g.add_argument("--seed", type=int, default=0)
        if name == "fork-suite":
            g.add_argument("--deep", action="store_true", help="draw inputs that need several steps")
    ch.set_defaults(func=cmd_chords)

    r = sub.add_parser("render", help="draw a path, pair or embedding")
    r.add_argument("file")
    r.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MalformedDocument as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return MALFORMED
    except PreconditionUnmet as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return PRECONDITION
    except (UsageError, WrongLeaperClass) as exc:
        print(exc, file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
