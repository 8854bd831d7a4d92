"""JSON documents for paths, pairs, embeddings, certificates, search tables and diagnostics.

Layout::

    {"schema_version": 1, "kind": "...", "meta": {...}, "payload": {...}}

Points are two-element integer arrays. ``meta["leaper"]`` is ``[p, q]``
for every kind that involves a leaper. Loading checks structure and the
invariants of the payload type (leap steps, self-avoidance, certificate
audits) and raises :class:`MalformedDocument` on failure. Whether a
well-formed pair or embedding actually fits a board is left to ``verify``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from leapers import __version__
from leapers.chords.figures import Figure
from leapers.chords.fork import Basis, Conclusion, ForkCertificate, ForkStep, GoodPair
from leapers.chords.suites import audit_certificate
from leapers.core.embedding import GridEmbedding
from leapers.core.leaper import Leaper
from leapers.core.paths import LeaperPath
from leapers.errors import LeaperError
from leapers.extremal.halffree import Case, HalfFreeDiagnostic, Multiplicity, SlopeSplit
from leapers.extremal.search import SearchResult, witness_verifies

SCHEMA_VERSION = 1
KINDS = ("path", "pair", "embedding", "certificate", "search_table", "diagnostic")


class MalformedDocument(LeaperError):
    pass


@dataclass
class Document:
    kind: str
    payload: Any
    meta: dict = field(default_factory=dict)

    @property
    def leaper(self) -> Leaper:
        p, q = self.meta["leaper"]
        return Leaper(p, q)


def make_meta(leaper: Leaper | None = None, **params) -> dict:
    meta: dict = {"tool": "leapers", "version": __version__, "params": params}
    if leaper is not None:
        meta["leaper"] = [leaper.p, leaper.q]
    return meta


def _pt(v) -> list:
    return [v[0], v[1]]


def _vec(obj) -> tuple[int, int]:
    if not isinstance(obj, list) or len(obj) != 2 or not all(
            isinstance(c, int) and not isinstance(c, bool) for c in obj):
        raise MalformedDocument(f"expected [x, y] integer pair, got {obj!r}")
    return obj[0], obj[1]


def _path_out(path: LeaperPath) -> list:
    return [_pt(v) for v in path.vertices]


def _path_in(obj, leaper: Leaper) -> LeaperPath:
    return LeaperPath(tuple(_vec(v) for v in obj), leaper)


def _pair_out(pair) -> dict:
    return {"alpha": _path_out(pair[0]), "beta": _path_out(pair[1])}


def _pair_in(obj, leaper: Leaper) -> tuple[LeaperPath, LeaperPath]:
    return _path_in(obj["alpha"], leaper), _path_in(obj["beta"], leaper)


def _step_out(s: ForkStep) -> dict:
    return {
        "pair": [s.pair.x, s.pair.y, s.pair.z, s.pair.t],
        "sides": {k: _pt(v) for k, v in s.sides.items()},
        "realized": list(s.realized),
        "chosen": s.chosen,
        "plane_side": _pt(s.plane_side),
        "witness": [_pt(s.witness[0]), _pt(s.witness[1])],
        "regular": s.regular,
    }


def _step_in(d: dict) -> ForkStep:
    return ForkStep(
        GoodPair(*d["pair"]),
        {k: _vec(v) for k, v in d["sides"].items()},
        tuple(d["realized"]),
        d["chosen"],
        _vec(d["plane_side"]),
        (_vec(d["witness"][0]), _vec(d["witness"][1])),
        d["regular"],
    )


def _cert_out(c: ForkCertificate) -> dict:
    return {
        "figure": [_pt(v) for v in sorted(c.figure)],
        "basis": [_pt(c.basis.u), _pt(c.basis.v)],
        "inputs": [_pt(c.inputs[0]), _pt(c.inputs[1])],
        "steps": [_step_out(s) for s in c.steps],
        "conclusion": {
            "target": c.conclusion.target,
            "vector": _pt(c.conclusion.vector),
            "multiple": c.conclusion.multiple,
            "witness": [_pt(c.conclusion.witness[0]), _pt(c.conclusion.witness[1])],
        },
    }


def _cert_in(d: dict) -> ForkCertificate:
    con = d["conclusion"]
    cert = ForkCertificate(
        Figure(_vec(v) for v in d["figure"]),
        Basis(_vec(d["basis"][0]), _vec(d["basis"][1])),
        (_vec(d["inputs"][0]), _vec(d["inputs"][1])),
        tuple(_step_in(s) for s in d["steps"]),
        Conclusion(con["target"], _vec(con["vector"]), con["multiple"],
                   (_vec(con["witness"][0]), _vec(con["witness"][1]))),
    )
    problems = audit_certificate(cert)
    if problems:
        raise MalformedDocument("certificate does not check out: " + "; ".join(problems))
    return cert


def _row_out(r: SearchResult) -> dict:
    return {
        "n": r.n,
        "m_star": r.m_star,
        "m_upper": r.m_upper,
        "exhausted": r.exhausted,
        "nodes": r.nodes,
        "seconds": round(r.seconds, 3),
        "witness": _pair_out(r.witness) if r.witness else None,
    }


def _row_in(d: dict, leaper: Leaper) -> SearchResult:
    w = _pair_in(d["witness"], leaper) if d["witness"] is not None else None
    r = SearchResult(leaper, d["n"], d["m_star"], d["m_upper"], d["exhausted"], w,
                     d["nodes"], d.get("seconds", 0.0))
    if w is not None and r.n > 0 and not witness_verifies(r):
        raise MalformedDocument(f"search witness for n={r.n} does not verify")
    return r


def _diag_out(g: HalfFreeDiagnostic) -> dict:
    return {
        "split": {"alpha": [_pt(v) for v in g.split.alpha], "beta": [_pt(v) for v in g.split.beta]},
        "case": g.case.value,
        "m": g.m,
        "n": g.n,
        "sizes": list(g.sizes),
        "s": g.s,
        "h": g.h,
        "realized": {
            "hI_alpha": g.realized_hI_alpha, "hII_alpha": g.realized_hII_alpha,
            "hI_beta": g.realized_hI_beta, "hII_beta": g.realized_hII_beta,
        },
        "alpha_multiplicity": g.alpha_multiplicity.as_dict() if g.alpha_multiplicity else None,
        "beta_multiplicity": g.beta_multiplicity.as_dict() if g.beta_multiplicity else None,
        "slack": str(g.slack),
    }


def _mult_in(d):
    return None if d is None else Multiplicity(*(d[k] for k in Multiplicity._fields))


def _diag_in(d: dict, leaper: Leaper) -> HalfFreeDiagnostic:
    split = SlopeSplit(leaper, tuple(_vec(v) for v in d["split"]["alpha"]),
                       tuple(_vec(v) for v in d["split"]["beta"]))
    r = d["realized"]
    g = HalfFreeDiagnostic(
        split, Case(d["case"]), d["m"], d["n"], tuple(d["sizes"]), d["s"], d["h"],
        r["hI_alpha"], r["hII_alpha"], r["hI_beta"], r["hII_beta"],
        _mult_in(d["alpha_multiplicity"]), _mult_in(d["beta_multiplicity"]),
    )
    p, q = leaper.p, leaper.q
    if g.s is not None and (g.s not in (2 * p * q, abs(p * p - q * q), p * p + q * q) or 2 * g.h != g.s):
        raise MalformedDocument(f"fundamental area {g.s} is impossible for {leaper}")
    if str(g.slack) != d["slack"] or Fraction(d["slack"]) != g.slack:
        raise MalformedDocument("recorded slack disagrees with m and n")
    return g


def to_json(doc: Document) -> dict:
    k, p = doc.kind, doc.payload
    if k == "path":
        body = {"vertices": _path_out(p)}
    elif k == "pair":
        body = _pair_out(p)
    elif k == "embedding":
        body = {"m": p.m, "points": [[_pt(v) for v in row] for row in p.points]}
    elif k == "certificate":
        body = _cert_out(p)
    elif k == "search_table":
        body = {"rows": [_row_out(r) for r in p]}
    elif k == "diagnostic":
        body = _diag_out(p)
    else:
        raise ValueError(f"unknown document kind {k!r}")
    return {"schema_version": SCHEMA_VERSION, "kind": k, "meta": doc.meta, "payload": body}


def from_json(data: Any) -> Document:
    try:
        if not isinstance(data, dict) or data.get("schema_version") != SCHEMA_VERSION:
            raise MalformedDocument("missing or unsupported schema_version")
        kind, meta, body = data["kind"], data.get("meta", {}), data["payload"]
        if kind not in KINDS:
            raise MalformedDocument(f"unknown document kind {kind!r}")
        leaper = Leaper(*meta["leaper"]) if "leaper" in meta else None
        if kind != "certificate" and leaper is None:
            raise MalformedDocument(f"{kind} document needs meta.leaper")
        if kind == "path":
            payload = _path_in(body["vertices"], leaper)
        elif kind == "pair":
            payload = _pair_in(body, leaper)
            if len(payload[0]) != len(payload[1]):
                raise MalformedDocument("pair paths differ in length")
        elif kind == "embedding":
            payload = GridEmbedding(tuple(tuple(_vec(v) for v in row) for row in body["points"]), leaper)
            if body.get("m", payload.m) != payload.m:
                raise MalformedDocument("embedding size disagrees with its points")
        elif kind == "certificate":
            payload = _cert_in(body)
        elif kind == "search_table":
            payload = [_row_in(r, leaper) for r in body["rows"]]
        else:
            payload = _diag_in(body, leaper)
    except MalformedDocument:
        raise
    except (KeyError, TypeError, ValueError, IndexError, AttributeError) as exc:
        raise MalformedDocument(f"{type(exc).__name__}: {exc}") from exc
    return Document(kind, payload, meta)


_POINT = re.compile(r"\[\s*(-?\d+),\s*(-?\d+)\s*\]")


def dumps(doc: Document) -> str:
    text = json.dumps(to_json(doc), indent=1, sort_keys=True)
    return _POINT.sub(r"[\1, \2]", text) + "\n"


def loads(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc
    return from_json(data)


def save(doc: Document, path) -> None:
    Path(path).write_text(dumps(doc))


def load(path) -> Document:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise MalformedDocument(f"cannot read {path}: {exc}") from exc
    return loads(text)
