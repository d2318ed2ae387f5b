"""JSON interchange for frames, subspaces, witnesses, and verdicts.

Rationals travel as "p/q" strings (bare integers stay integers); nothing is
ever rendered as floating point, so parse(serialize(x)) round-trips exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import List, Optional, Sequence

from .frames import Frame
from .lifting import S2Witness
from .ratlin import RatMatrix, format_rational, parse_rational
from .subspaces import MaximalityVerdict, Subspace


def _vec_out(v: Sequence[Fraction]) -> List:
    return [format_rational(Fraction(x)) for x in v]


def _vec_in(v: Sequence) -> List[Fraction]:
    return [parse_rational(x) for x in v]


def frame_to_dict(frame: Frame, meta: Optional[dict] = None) -> dict:
    out = {"n": frame.dim, "vectors": [_vec_out(v) for v in frame.vectors]}
    if meta is not None:
        out["meta"] = meta
    return out


def frame_from_dict(d: dict) -> Frame:
    return Frame.from_vectors([_vec_in(v) for v in d["vectors"]], dim=d["n"])


def subspace_to_dict(sub: Subspace, meta: Optional[dict] = None) -> dict:
    out = {
        "n": sub.ambient_dim,
        "dim": sub.dim,
        "basis": [_vec_out(row) for row in sub.basis.entries],
    }
    if meta is not None:
        out["meta"] = meta
    return out


def subspace_from_dict(d: dict) -> Subspace:
    rows = [_vec_in(r) for r in d["basis"]]
    return Subspace(d["n"], RatMatrix.from_rows(rows))


def witness_to_dict(w: S2Witness) -> dict:
    out = {"x": _vec_out(w.x), "y": _vec_out(w.y)}
    if w.differing_index is not None:
        out["differing_index"] = w.differing_index
    return out


def witness_from_dict(d: dict) -> S2Witness:
    return S2Witness(
        tuple(_vec_in(d["x"])), tuple(_vec_in(d["y"])), d.get("differing_index")
    )


def verdict_to_dict(v: MaximalityVerdict) -> dict:
    out = {"status": v.status}
    if v.reason is not None:
        out["reason"] = v.reason
    if v.witness is not None:
        out["witness"] = subspace_to_dict(v.witness)
    if v.probe_report is not None:
        out["probe_report"] = v.probe_report
    return out


def save_json(obj: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)
