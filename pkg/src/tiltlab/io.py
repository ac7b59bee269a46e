"""JSON/CSV encodings. Rationals travel as "p/q" strings (integers as "n")."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable

from .curve import CurveKClass
from .kclass import KClass
from .lattice import DivisorClass, Q, SurfaceData
from .moduli import MockSheaf, PolystableObject, StableFactor, BUNDLE
from .tilt import StabilityParams
from .walls import Wall


class InputError(ValueError):
    """Malformed input file or literal."""


def rat(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rat(x: Any) -> Fraction:
    if isinstance(x, (int, str, Fraction)) and not isinstance(x, bool):
        try:
            return Q(x.strip() if isinstance(x, str) else x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational literal: {x!r}") from exc
    raise InputError(f"not a rational literal: {x!r}")


def _load_json(source: str | Path) -> Any:
    try:
        return json.loads(Path(source).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON: {exc}") from exc


# -- surfaces ---------------------------------------------------------------

def surface_from_dict(d: dict) -> SurfaceData:
    try:
        return SurfaceData(
            rank=int(d["rank"]),
            gram=[[int(x) for x in row] for row in d["gram"]],
            H=[int(x) for x in d["H"]],
            K=[int(x) for x in d["K"]],
            chiO=int(d["chiO"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad surface description: {exc}") from exc


def surface_to_dict(s: SurfaceData) -> dict:
    return {
        "rank": s.rank,
        "gram": [list(r) for r in s.gram],
        "H": [int(c) for c in s.H.coords],
        "K": [int(c) for c in s.K.coords],
        "chiO": s.chiO,
    }


def load_surface(path: str | Path) -> SurfaceData:
    return surface_from_dict(_load_json(path))


# -- classes ----------------------------------------------------------------

def kclass_to_dict(a: KClass) -> dict:
    return {"ch0": rat(a.ch0), "ch1": [rat(c) for c in a.ch1.coords], "ch2": rat(a.ch2)}


def kclass_from_dict(d: dict) -> KClass:
    try:
        return KClass(parse_rat(d["ch0"]), DivisorClass(parse_rat(c) for c in d["ch1"]), parse_rat(d["ch2"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad K-class literal {d!r}") from exc


def parse_kclass(text: str, s: SurfaceData) -> KClass:
    """Accept a file path, an inline JSON object, or "ch0,c_1,...,c_rho,ch2"."""
    text = text.strip()
    if text.startswith("{"):
        try:
            a = kclass_from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise InputError(f"bad inline class {text!r}: {exc}") from exc
    elif Path(text).is_file():
        a = kclass_from_dict(_load_json(text))
    else:
        parts = [p for p in text.replace("[", "").replace("]", "").split(",") if p.strip()]
        if len(parts) != s.rank + 2:
            raise InputError(f"class {text!r} needs {s.rank + 2} entries (ch0, ch1..., ch2)")
        vals = [parse_rat(p) for p in parts]
        a = KClass(vals[0], vals[1:-1], vals[-1])
    if len(a.ch1) != s.rank:
        raise InputError(f"class has {len(a.ch1)} ch1 coords, surface rank is {s.rank}")
    return a


def parse_divisor(text: str, s: SurfaceData) -> DivisorClass:
    text = text.strip()
    try:
        vals = json.loads(text) if text.startswith("[") else text.split(",")
    except json.JSONDecodeError as exc:
        raise InputError(f"bad divisor literal {text!r}") from exc
    d = DivisorClass(parse_rat(v) for v in vals)
    if len(d) != s.rank:
        raise InputError(f"divisor {text!r} has {len(d)} coords, surface rank is {s.rank}")
    return d


def params_to_dict(p: StabilityParams) -> dict:
    return {"alpha": rat(p.alpha), "beta": rat(p.beta), "B": [rat(c) for c in p.B.coords]}


def params_from_dict(d: dict) -> StabilityParams:
    try:
        return StabilityParams(parse_rat(d["alpha"]), parse_rat(d["beta"]), [parse_rat(c) for c in d["B"]])
    except KeyError as exc:
        raise InputError(f"missing stability parameter {exc}") from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def curve_class_to_list(c: CurveKClass) -> list[str]:
    return [rat(c.rank), rat(c.degree)]


# -- walls ------------------------------------------------------------------

def wall_to_dict(w: Wall) -> dict:
    d: dict[str, Any] = {"kind": w.kind}
    if w.beta is not None:
        d["beta"] = rat(w.beta)
    if w.center is not None:
        d["center"] = rat(w.center)
        d["radius_sq"] = rat(w.radius_sq)
    if w.witness is not None:
        d["witness"] = kclass_to_dict(w.witness)
    return d


def wall_from_dict(d: dict) -> Wall:
    opt = lambda k: parse_rat(d[k]) if k in d else None
    witness = kclass_from_dict(d["witness"]) if "witness" in d else None
    return Wall(d["kind"], beta=opt("beta"), center=opt("center"), radius_sq=opt("radius_sq"), witness=witness)


def walls_to_csv(walls: Iterable[Wall]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kind", "beta", "center", "radius_sq", "witness_ch0", "witness_ch1", "witness_ch2"])
    for w in walls:
        k = w.witness
        writer.writerow([
            w.kind,
            "" if w.beta is None else rat(w.beta),
            "" if w.center is None else rat(w.center),
            "" if w.radius_sq is None else rat(w.radius_sq),
            "" if k is None else rat(k.ch0),
            "" if k is None else " ".join(rat(c) for c in k.ch1.coords),
            "" if k is None else rat(k.ch2),
        ])
    return buf.getvalue()


# -- moduli points ----------------------------------------------------------

def mock_from_dict(d: dict) -> MockSheaf:
    try:
        dd = [StableFactor.bundle(str(f["iso_id"]), kclass_from_dict(f["cls"])) for f in d.get("double_dual", [])]
        torsion = {str(p): n for p, n in d.get("torsion", {}).items()}
        return MockSheaf(dd, torsion)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad point description: {exc}") from exc


def mock_to_dict(m: MockSheaf) -> dict:
    return {
        "double_dual": [{"iso_id": f.iso_id, "cls": kclass_to_dict(f.cls)} for f in m.double_dual],
        "torsion": dict(m.torsion_lengths),
    }


def load_mock(path: str | Path) -> MockSheaf:
    return mock_from_dict(_load_json(path))


def polystable_to_dict(x: PolystableObject) -> list[dict]:
    out = []
    for f in x.factors:
        if f.kind == BUNDLE:
            out.append({"kind": f.kind, "iso_id": f.iso_id, "cls": kclass_to_dict(f.cls)})
        else:
            out.append({"kind": f.kind, "point_id": f.point_id})
    return out


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
