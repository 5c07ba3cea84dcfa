"""JSON spec files: build tori, Lie tori, involutions and EALAs; export structure constants."""

from __future__ import annotations

import json

from .eala import AffineCocycle, Dual, EalaAlgebra, build_D, eala_build
from .errors import InputError, NotPermissible
from .involutions import chevalley, identity_map
from .jordan import HermitianMatrix, RedCliff
from .lattice import DegreeWindow
from .lie.base import atom_sort_key
from .lie.multiloop import multiloop, multiloop_sl2
from .lie.psl3 import psl3_torus
from .lie.simple import simple_lie
from .lie.sl import sl_torus
from .lie.tensor import tensor_torus
from .lie.tits import tits_B
from .lie.tkk import tkk, tkk_C
from .scalars import format_scalar, parse_scalar
from .tori import build_torus

__all__ = ["load_spec", "build_lie", "build_involution", "build_eala", "export_structure", "export_json"]


def load_spec(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from exc


def _need(spec, key):
    if key not in spec:
        raise InputError(f"spec is missing {key!r}")
    return spec[key]


def _scalar(x, cond):
    return parse_scalar(x, cond) if isinstance(x, str) else parse_scalar(str(x), cond)


def _simple(spec):
    if "table" in spec:
        return simple_lie(spec["table"], validate_table=spec.get("validate", True))
    return simple_lie(_need(spec, "type"), int(_need(spec, "rank")))


def _jordan(spec):
    kind = _need(spec, "kind")
    if kind == "Hermitian":
        return HermitianMatrix(int(_need(spec, "ell")), build_torus(_need(spec, "coordinates")))
    if kind == "RedCliff":
        return RedCliff(_need(spec, "taus"))
    raise InputError(f"unknown Jordan matrix kind {kind!r}")


def _images(rows, cond):
    """[[{"k": j, "c": s}, ...] per basis element] -> list of coefficient dicts."""
    return [{int(t["k"]): _scalar(t["c"], cond) for t in row} for row in rows]


def build_lie(spec):
    """Lie torus from ``{"construction": ..., params}``; a bare simple algebra becomes g (x) K."""
    kind = _need(spec, "construction")
    cond = spec.get("conductor", 1)
    if kind == "Simple":
        return tensor_torus(_simple(_need(spec, "g")), 0)
    if kind == "Tensor":
        return tensor_torus(_simple(_need(spec, "g")), int(_need(spec, "n")))
    if kind == "SL":
        return sl_torus(int(_need(spec, "size")), build_torus(_need(spec, "coordinates")))
    if kind == "PSL3":
        return psl3_torus(build_torus(_need(spec, "coordinates")))
    if kind == "TKK":
        return tkk(build_torus(_need(spec, "coordinates")))
    if kind == "TKK_C":
        return tkk_C(_jordan(_need(spec, "jordan")))
    if kind == "TitsB":
        return tits_B(int(_need(spec, "ell")), int(_need(spec, "m")), _need(spec, "taus"))
    if kind == "MultiLoop":
        regrade = spec.get("regrade")
        if regrade is not None:
            regrade = (regrade["Phi"], int(regrade["k"]))
        if spec.get("preset") == "sl2":
            return multiloop_sl2(regrade)
        g = _simple(_need(spec, "g"))
        sigmas = [_images(s, cond) for s in _need(spec, "sigmas")]
        hprime = [{int(t["k"]): _scalar(t["c"], cond) for t in h} for h in _need(spec, "hprime")]
        L = multiloop(g, sigmas, hprime, regrade)
        if "tau" in spec:
            L.preset_tau = _images(spec["tau"], cond)
        return L
    raise InputError(f"unknown construction {kind!r}")


def build_involution(L, spec):
    """The involution named in ``spec["involution"]`` (default: the Chevalley formula)."""
    inv = spec.get("involution") or {"kind": "chevalley"}
    kind = inv.get("kind", "chevalley")
    if kind == "identity":
        return identity_map(L)
    if kind == "chevalley":
        aux = {}
        cond = spec.get("conductor", 1)
        if "psi" in inv:
            aux["psi"] = _images(inv["psi"], cond)
        if "tau" in inv:
            aux["tau"] = _images(inv["tau"], cond)
        return chevalley(L, aux or None)
    raise InputError(f"unknown involution kind {kind!r}")


def _dual(items, cond):
    out = Dual()
    for t in items:
        out = out + Dual({tuple(t["mu"]): [_scalar(x, cond) for x in t["v"]]})
    return out


def build_cocycle(spec, cond=1):
    if spec is None or spec.get("kind", "zero") == "zero":
        return AffineCocycle.zero()
    if spec["kind"] != "table":
        raise InputError(f"unknown cocycle kind {spec['kind']!r}")
    table = {}
    for row in spec.get("entries", []):
        k1 = (tuple(row["d1"][0]), int(row["d1"][1]))
        k2 = (tuple(row["d2"][0]), int(row["d2"][1]))
        table[(k1, k2)] = _dual(row["value"], cond)
    return AffineCocycle("table", table)


def build_eala(spec, L=None, validate=True):
    """(E, L) from ``{"lie": ..., "D": ..., "kappa": ...}``.

    With ``validate=False`` the cocycle axioms are left to the caller's report.
    """
    L = L or build_lie(_need(spec, "lie"))
    D = build_D(_need(spec, "D"), L)
    kappa = build_cocycle(spec.get("kappa"), spec.get("conductor", 1))
    if not validate:
        if not D.permissible:
            raise NotPermissible("D is not permissible: ev is not injective")
        return EalaAlgebra(L, D, kappa), L
    W = spec.get("cocycle_window", 1)
    return eala_build(L, D, kappa, W), L


# export ------------------------------------------------------------------------------


def _atom_entry(L, i, a, inside):
    return {
        "id": i,
        "root": [format_scalar(x) if not isinstance(x, int) else x for x in a.root],
        "degree": list(a.deg),
        "index": a.idx,
        "label": L.atom_label(a),
        "in_window": inside,
    }


def export_structure(L, W):
    """Brackets of window atoms with a legend; atoms are ordered by (root, degree, index)."""
    W = W if isinstance(W, DegreeWindow) else DegreeWindow(W)
    atoms = L.window_atoms(W)
    ids = {a: i for i, a in enumerate(atoms)}
    rows = []
    extra = set()
    for i, a in enumerate(atoms):
        for j in range(i + 1, len(atoms)):
            terms = L.atom_bracket(a, atoms[j])
            if terms:
                extra.update(k for k in terms if k not in ids)
                rows.append((i, j, terms))
    for k in sorted(extra, key=atom_sort_key):
        ids[k] = len(ids)
    legend = [_atom_entry(L, ids[a], a, True) for a in atoms]
    legend += [_atom_entry(L, ids[k], k, False) for k in sorted(extra, key=atom_sort_key)]
    brackets = [
        {"i": i, "j": j, "terms": [{"k": ids[k], "c": format_scalar(c)} for k, c in sorted(t.items(), key=lambda kv: ids[kv[0]])]}
        for i, j, t in rows
    ]
    return {"construction": L.construction, "window": W.radius, "atoms": legend, "brackets": brackets}


def export_json(L, W):
    return json.dumps(export_structure(L, W), indent=1, sort_keys=True) + "\n"
