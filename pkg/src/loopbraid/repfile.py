"""JSON file formats for modular-group and LB3 witnesses.

Real numbers are written with 17 significant digits, which round-trips
IEEE doubles exactly.  Complex entries are ``[re, im]`` pairs and matrices
are lists of rows.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .components import AlphaTuple
from .extend import LB3Rep, RelationReport
from .linalg import DEFAULT_TOL, LinalgError, Tolerance, as_matrix
from .reps import GammaRep, RepError, validate_gamma_rep

SCHEMA_VERSION = 1
KIND_GAMMA = "gamma_rep"
KIND_LB3 = "lb3_rep"


class MalformedFile(ValueError):
    pass


def _fmt(obj, indent: int = 0) -> str:
    # json.dumps would use repr() for floats; the format pins 17 digits
    pad = " " * indent
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError("non-finite real")
        return format(obj, ".17g")
    if isinstance(obj, dict):
        items = [f'{pad}  {json.dumps(k)}: {_fmt(v, indent + 2)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (list, tuple, dict)) for v in obj) or _is_row(obj):
            return "[" + ", ".join(_fmt(v, indent) for v in obj) + "]"
        items = [pad + "  " + _fmt(v, indent + 2) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _is_row(obj) -> bool:
    return all(isinstance(v, (list, tuple)) and len(v) == 2
               and all(isinstance(c, float) for c in v) for v in obj)


def dumps(doc: dict) -> str:
    return _fmt(doc) + "\n"


def complex_pair(c: complex) -> list[float]:
    return [float(c.real), float(c.imag)]


def matrix_to_rows(M: np.ndarray) -> list[list[list[float]]]:
    return [[complex_pair(c) for c in row] for row in as_matrix(M)]


def rows_to_matrix(rows, name: str, n: int) -> np.ndarray:
    try:
        M = np.array([[complex(float(e[0]), float(e[1])) for e in row] for row in rows],
                     dtype=np.complex128)
        if any(len(e) != 2 for row in rows for e in row):
            raise ValueError
    except (TypeError, ValueError, IndexError) as exc:
        raise MalformedFile(f"matrix {name!r} is not a list of rows of [re, im] pairs") from exc
    if M.shape != (n, n):
        raise MalformedFile(f"matrix {name!r} has shape {M.shape}, expected ({n}, {n})")
    try:
        return as_matrix(M)
    except LinalgError as exc:
        raise MalformedFile(f"matrix {name!r}: {exc}") from exc


def _gamma_fields(rep: GammaRep) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "alpha": list(rep.alpha),
        "n": rep.n,
        "seed": int(rep.seed),
        "lambda": complex_pair(rep.lam),
        "S": matrix_to_rows(rep.S),
        "T": matrix_to_rows(rep.T),
    }


def gamma_rep_to_dict(rep: GammaRep) -> dict:
    return {"kind": KIND_GAMMA, **_gamma_fields(rep)}


def lb3_rep_to_dict(rep: LB3Rep, report: RelationReport | None = None) -> dict:
    doc = {"kind": KIND_LB3, **_gamma_fields(rep.source)}
    doc["lambda"] = complex_pair(rep.lam)
    doc["sigma1"] = matrix_to_rows(rep.sigma1)
    doc["sigma2"] = matrix_to_rows(rep.sigma2)
    doc["s1"] = matrix_to_rows(rep.s1)
    doc["s2"] = matrix_to_rows(rep.s2)
    if report is not None:
        doc["residual_report"] = report.as_dict()
    return doc


def _header(doc) -> tuple[str, AlphaTuple, int, int, complex]:
    if not isinstance(doc, dict):
        raise MalformedFile("top level must be an object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise MalformedFile(f"unsupported schema_version {doc.get('schema_version')!r}")
    try:
        alpha = AlphaTuple(*(int(v) for v in doc["alpha"])).validate()
        n = int(doc["n"])
        seed = int(doc["seed"])
        lam = complex(float(doc["lambda"][0]), float(doc["lambda"][1]))
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise MalformedFile(f"bad header field: {exc}") from exc
    if alpha.n != n:
        raise MalformedFile(f"alpha {alpha} does not have dimension n = {n}")
    return doc.get("kind", KIND_GAMMA), alpha, n, seed, lam


def gamma_rep_from_dict(doc, tol: Tolerance = DEFAULT_TOL) -> GammaRep:
    """Parse and validate: ``S^2 = I``, ``T^3 = I`` and the declared multiplicities."""
    _, alpha, n, seed, lam = _header(doc)
    rep = GammaRep(rows_to_matrix(doc.get("S"), "S", n), rows_to_matrix(doc.get("T"), "T", n),
                   alpha, seed, lam)
    try:
        validate_gamma_rep(rep, tol)
    except RepError as exc:
        raise MalformedFile(f"invariant violated: {exc}") from exc
    return rep


def lb3_rep_from_dict(doc) -> LB3Rep:
    """Structural parse only; relations are left to the caller to verify."""
    _, alpha, n, seed, lam = _header(doc)
    mats = {k: rows_to_matrix(doc.get(k), k, n) for k in ("S", "T", "sigma1", "sigma2", "s1", "s2")}
    source = GammaRep(mats["S"], mats["T"], alpha, seed, lam)
    return LB3Rep(mats["sigma1"], mats["sigma2"], mats["s1"], mats["s2"], lam, source)


def read_document(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MalformedFile(f"{path}: not valid JSON ({exc})") from exc


def write_document(path, doc: dict) -> None:
    Path(path).write_text(dumps(doc))


def serialize_rep(rep: GammaRep, path) -> None:
    write_document(path, gamma_rep_to_dict(rep))


def deserialize_rep(path, tol: Tolerance = DEFAULT_TOL) -> GammaRep:
    return gamma_rep_from_dict(read_document(path), tol)


def serialize_lb3(rep: LB3Rep, path, report: RelationReport | None = None) -> None:
    write_document(path, lb3_rep_to_dict(rep, report))


def deserialize_lb3(path) -> LB3Rep:
    doc = read_document(path)
    if doc.get("kind") != KIND_LB3:
        raise MalformedFile(f"{path}: not an LB3 representation file")
    return lb3_rep_from_dict(doc)
