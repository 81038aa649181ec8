"""JSON manifests: manifolds, queries, and result serialization."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .distinguish import DistinguishReport
from .errors import GWZeroError, ManifestError
from .fourmanifold import CohoClass4, Manifold4, SphereClass, blow_up
from .gw import GWQuery, GWValue
from .lattice import BilinearLattice, Class2, parse_form
from .sixfold import Class6, CohoClass6, Stabilized6, stabilize

SUPPORTED_VERSIONS = (1,)


@dataclass
class Manifest:
    version: int = 1
    manifolds: dict[str, Manifold4] = field(default_factory=dict)
    queries: list[tuple[str, GWQuery]] = field(default_factory=list)

    def space(self, ref: str):
        if ref.endswith("xS2") and ref[:-3] in self.manifolds:
            return stabilize(self.manifolds[ref[:-3]])
        if ref in self.manifolds:
            return self.manifolds[ref]
        raise ManifestError(f"unknown space {ref!r}")

    def manifold(self, name: str) -> Manifold4:
        try:
            return self.manifolds[name]
        except KeyError:
            raise ManifestError(f"unknown manifold {name!r}") from None

    def query(self, ref: str) -> tuple[str, GWQuery]:
        for name, q in self.queries:
            if name == ref:
                return name, q
        if ref.isdigit() and int(ref) < len(self.queries):
            return self.queries[int(ref)]
        raise ManifestError(f"unknown query {ref!r}")


def _vec(v, what: str, n: int | None = None) -> tuple[int, ...]:
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise ManifestError(f"{what} must be a list of integers")
    if n is not None and len(v) != n:
        raise ManifestError(f"{what} has length {len(v)}, expected {n}")
    return tuple(v)


def _lattice(entry: dict) -> BilinearLattice:
    form = entry.get("form")
    labels = entry.get("labels")
    if isinstance(form, str):
        try:
            lat = parse_form(form)
        except (KeyError, ValueError) as exc:
            raise ManifestError(f"bad form expression {form!r}: {exc}") from None
        return BilinearLattice(lat.gram, labels) if labels else lat
    if isinstance(form, list):
        rows = [_vec(r, "gram row") for r in form]
        return BilinearLattice(rows, labels)
    raise ManifestError("form must be a named-form expression or a gram matrix")


def manifold_from_dict(entry: dict, known: dict[str, Manifold4] | None = None) -> Manifold4:
    name = entry.get("name")
    if not isinstance(name, str) or not name:
        raise ManifestError("every manifold needs a name")
    try:
        if "blow_up" in entry:
            src = entry["blow_up"]
            parent = (known or {}).get(src.get("of"))
            if parent is None:
                raise ManifestError(f"{name}: blow_up source {src.get('of')!r} not defined earlier")
            x = parent
            labels = src.get("labels", ["E"])
            for lab in labels:
                x = blow_up(x, lab)
            return Manifold4(name, x.lattice, x.c1, x.simply_connected, x.minimal,
                             x.exceptional_classes, x.sphere_classes, x.symplectic)
        lat = _lattice(entry)
        n = lat.rank
        c1 = _vec(entry.get("c1"), f"{name}.c1", n)
        exc = [Class2(_vec(e, f"{name}.exceptional_classes[]", n)) for e in entry.get("exceptional_classes", [])]
        spheres = [
            SphereClass(Class2(_vec(s["class"], f"{name}.sphere_classes[].class", n)),
                        int(s.get("genus", 0)), bool(s.get("embedded_sphere_rep", False)))
            for s in entry.get("sphere_classes", [])
        ]
        return Manifold4.create(
            name, lat, c1,
            simply_connected=bool(entry.get("simply_connected", True)),
            exceptional_classes=exc,
            sphere_classes=spheres,
            minimal=entry.get("minimal"),
            symplectic=bool(entry.get("symplectic", True)),
        )
    except ManifestError:
        raise
    except (GWZeroError, KeyError, TypeError, ValueError) as exc:
        raise ManifestError(f"{name}: {exc}") from None


def coho_from_dict(d: dict, space) -> CohoClass4 | CohoClass6:
    if not isinstance(d, dict):
        raise ManifestError("insertions must be objects")
    try:
        if isinstance(space, Stabilized6):
            n = space.base.rank
            if "pd_pushforward" in d:
                return space.pd_of_pushforward(Class2(_vec(d["pd_pushforward"], "pd_pushforward", n)))
            if "pd_sweep" in d:
                return space.pd_of_sweep(Class2(_vec(d["pd_sweep"], "pd_sweep", n)))
            if d.get("pd_fiber"):
                return space.pd_of_fiber()
            if d.get("tau"):
                return space.tau()
            deg = d["degree"]
            if deg == 2:
                return CohoClass6.deg2(_vec(d["phi"], "phi", n), int(d.get("lam", 0)))
            if deg == 4:
                return CohoClass6.deg4(int(d.get("vol", 0)), _vec(d["psi"], "psi", n))
            return CohoClass6(deg, value=int(d.get("value", 1)))
        n = space.rank
        if "pd" in d:
            return space.pd(Class2(_vec(d["pd"], "pd", n)))
        deg = d["degree"]
        if deg == 2:
            return CohoClass4(2, _vec(d["phi"], "phi", n))
        return CohoClass4(deg, value=int(d.get("value", 1)))
    except ManifestError:
        raise
    except (GWZeroError, KeyError, TypeError) as exc:
        raise ManifestError(f"bad insertion {d!r}: {exc}") from None


def query_from_dict(d: dict, m: Manifest) -> GWQuery:
    space = m.space(d.get("space", ""))
    if isinstance(space, Stabilized6):
        cls = Class6(Class2(_vec(d.get("class"), "class", space.base.rank)), int(d.get("fiber", 0)))
    else:
        cls = Class2(_vec(d.get("class"), "class", space.rank))
    ins = tuple(coho_from_dict(a, space) for a in d.get("insertions", []))
    return GWQuery(space, cls, ins)


def load_manifest(data: dict | str | Path) -> Manifest:
    if isinstance(data, (str, Path)):
        try:
            data = json.loads(Path(data).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ManifestError(f"cannot read manifest: {exc}") from None
    if not isinstance(data, dict):
        raise ManifestError("manifest must be a JSON object")
    version = data.get("version")
    if version not in SUPPORTED_VERSIONS:
        raise ManifestError(f"unsupported manifest version {version!r}")
    m = Manifest(version)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for entry in data.get("manifolds", []):
            x = manifold_from_dict(entry, m.manifolds)
            if x.name in m.manifolds:
                raise ManifestError(f"duplicate manifold name {x.name!r}")
            m.manifolds[x.name] = x
    for i, qd in enumerate(data.get("queries", [])):
        m.queries.append((qd.get("name", str(i)), query_from_dict(qd, m)))
    return m


# -- serialization -----------------------------------------------------------

def manifold_to_dict(x: Manifold4) -> dict[str, Any]:
    return {
        "name": x.name,
        "form": [list(r) for r in x.lattice.gram],
        "labels": list(x.lattice.basis_labels),
        "c1": list(x.c1),
        "simply_connected": x.simply_connected,
        "minimal": x.minimal,
        "symplectic": x.symplectic,
        "exceptional_classes": [list(e) for e in x.exceptional_classes],
        "sphere_classes": [
            {"class": list(s.cls), "genus": s.genus, "embedded_sphere_rep": s.embedded_sphere_rep}
            for s in x.sphere_classes
        ],
    }


def coho_to_dict(a) -> dict[str, Any]:
    if isinstance(a, CohoClass6):
        if a.degree == 2:
            return {"degree": 2, "phi": list(a.phi), "lam": a.lam}
        if a.degree == 4:
            return {"degree": 4, "vol": a.vol, "psi": list(a.psi)}
        return {"degree": a.degree, "value": a.value}
    if a.degree == 2:
        return {"degree": 2, "phi": list(a.phi)}
    return {"degree": a.degree, "value": a.value}


def query_to_dict(q: GWQuery) -> dict[str, Any]:
    if isinstance(q.space, Stabilized6):
        d = {"space": q.space.name, "class": list(q.cls.a), "fiber": q.cls.b}
    else:
        d = {"space": q.space.name, "class": list(q.cls)}
    d["insertions"] = [coho_to_dict(a) for a in q.insertions]
    return d


def value_to_dict(v: GWValue, with_trace: bool = False) -> dict[str, Any]:
    d: dict[str, Any] = {"value": v.value} if v.determined else {"not_determined": v.reason}
    if with_trace:
        d["trace"] = list(v.trace)
    return d


def report_to_dict(r: DistinguishReport) -> dict[str, Any]:
    inv = [
        {"rank": i.rank, "signature": list(i.signature), "parity": str(i.parity), "simply_connected": i.simply_connected}
        for i in r.invariants
    ]
    d: dict[str, Any] = {
        "x1": r.x1,
        "x2": r.x2,
        "homeomorphic": r.homeomorphic,
        "invariants": inv,
        "hypotheses": [{"name": n, "holds": ok} for n, ok in r.hypotheses],
        "verdict": str(r.verdict),
        "notes": list(r.notes),
        "witness": None,
    }
    if r.witness is not None:
        w = r.witness
        d["witness"] = {
            "nonminimal_side": w.nonminimal_side,
            "query": query_to_dict(w.query),
            "value": w.value,
            "oracle_value": w.oracle_value,
            "minimal_query": query_to_dict(w.minimal_query),
            "minimal_value": w.minimal_value,
            "minimal_sphere_sweep": list(w.minimal_sweep),
        }
    return d


def report_to_text(r: DistinguishReport) -> str:
    lines = [f"{r.x1} x S2  vs  {r.x2} x S2", f"verdict: {r.verdict}"]
    for (name, inv) in zip((r.x1, r.x2), r.invariants):
        lines.append(f"  {name}: rank {inv.rank}, signature {inv.signature}, {inv.parity}, simply connected")
    lines.append("hypotheses:")
    lines += [f"  [{'x' if ok else ' '}] {n}" for n, ok in r.hypotheses]
    if r.witness is not None:
        w = r.witness
        lines.append(f"witness ({w.nonminimal_side} non-minimal): value {w.value} (axiom oracle {w.oracle_value}); "
                     f"minimal side: {w.minimal_value}")
    lines.append("notes:")
    lines += [f"  - {n}" for n in r.notes]
    return "\n".join(lines)


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed indentation."""
    return json.dumps(obj, sort_keys=True, indent=2)
