"""Deciding whether stabilized 4-manifolds are symplectically distinct.

For homeomorphic X1, X2 with b2+ > 1, the products X1 x S2 and X2 x S2 are
diffeomorphic.  If exactly one of them is minimal, the blown-up side has a
nonzero invariant in the pushforward of an exceptional class while every
corresponding invariant on the minimal side vanishes, so the two symplectic
structures are not deformation equivalent.  If both are minimal, no
genus-zero invariant in pushforward sphere classes can tell them apart.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .fourmanifold import HomeoInvariants, Manifold4, SphereClass, homeo_invariants
from .gw import GWQuery, eval_6, reduce_via_axioms
from .lattice import Class2
from .sixfold import pushforward, stabilize

CITE_FREEDMAN = "Freedman 1982, Donaldson 1983: rank, signature and parity classify simply connected closed 4-manifolds up to homeomorphism"
CITE_WALL_JUPP = "Wall 1966/1967, Jupp 1973: X1 x S2 and X2 x S2 are diffeomorphic"
CITE_WALL_ACS = "Wall 1966, Theorem 9: the diffeomorphism preserves c1 and the homotopy class of compatible almost complex structures"
CITE_RUAN = "Ruan 1994: stabilized exceptional spheres detect non-minimality"


class Verdict(enum.Enum):
    DISTINGUISHED = "Distinguished"
    INDISTINGUISHABLE = "Indistinguishable"
    HYPOTHESES_NOT_MET = "HypothesesNotMet"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Witness:
    nonminimal_side: str
    query: GWQuery
    value: int
    oracle_value: int | None
    minimal_query: GWQuery
    minimal_value: int
    minimal_sweep: tuple[int, ...]


@dataclass(frozen=True)
class DistinguishReport:
    x1: str
    x2: str
    homeomorphic: bool
    invariants: tuple[HomeoInvariants, HomeoInvariants]
    hypotheses: tuple[tuple[str, bool], ...]
    verdict: Verdict
    witness: Witness | None = None
    notes: tuple[str, ...] = ()

    @property
    def failing(self) -> list[str]:
        return [name for name, ok in self.hypotheses if not ok]

    def witness_values(self) -> tuple[int, int] | None:
        if self.witness is None:
            return None
        return self.witness.value, self.witness.minimal_value


def check_homeomorphic(x1: Manifold4, x2: Manifold4) -> tuple[bool, HomeoInvariants, HomeoInvariants]:
    i1, i2 = homeo_invariants(x1), homeo_invariants(x2)
    return i1 == i2, i1, i2


def _transport(a: Class2, target: Manifold4) -> Manifold4:
    """``target`` with ``a`` registered as an embedded sphere class.

    The minimal side has no exceptional spheres; the vanishing statement is
    conditional on an embedded sphere representative, which is what this
    registration asserts.
    """
    if any(s.cls == a and s.embedded_sphere_rep for s in target.sphere_classes):
        return target
    return replace(target, sphere_classes=target.sphere_classes + (SphereClass(a, 0, True),))


def _witness(nonmin: Manifold4, minimal: Manifold4, side: str) -> Witness:
    e = nonmin.exceptional_classes[0]
    s1 = stabilize(nonmin)
    q1 = GWQuery(s1, pushforward(e), (s1.pd_of_pushforward(e),))
    v1 = eval_6(q1)
    o1 = reduce_via_axioms(q1)

    m = _transport(e, minimal)
    s2 = stabilize(m)
    q2 = GWQuery(s2, pushforward(e), (s2.pd_of_pushforward(e),))
    v2 = eval_6(q2)

    sweep = []
    for sc in minimal.sphere_classes:
        if sc.embedded_sphere_rep and not sc.cls.is_zero():
            q = GWQuery(s2, pushforward(sc.cls), (s2.pd_of_pushforward(sc.cls),))
            sweep.append(eval_6(q).value)
    return Witness(side, q1, v1.value, o1.value, q2, v2.value, tuple(sweep))


def distinguish_stabilized(x1: Manifold4, x2: Manifold4) -> DistinguishReport:
    homeo, i1, i2 = check_homeomorphic(x1, x2)
    hyps = (
        ("X1 and X2 homeomorphic", homeo),
        ("X1 symplectic", x1.symplectic),
        ("X2 symplectic", x2.symplectic),
        ("b2+(X1) > 1", i1.signature[0] > 1),
        ("b2+(X2) > 1", i2.signature[0] > 1),
        ("X1 minimal", x1.minimal),
        ("X2 minimal", x2.minimal),
    )
    common = all(ok for _, ok in hyps[:5])
    notes = [CITE_FREEDMAN]
    if homeo:
        notes.append(CITE_WALL_JUPP)

    if common and x1.minimal != x2.minimal:
        nonmin, minimal, side = (x2, x1, "X2") if x1.minimal else (x1, x2, "X1")
        w = _witness(nonmin, minimal, side)
        notes += [CITE_WALL_ACS, CITE_RUAN,
                  f"{side} is not minimal: its stabilization has invariant {w.value} on the pushforward "
                  "of an exceptional class, while every pushforward sphere-class invariant of the minimal "
                  "side's stabilization vanishes"]
        verdict = Verdict.DISTINGUISHED
        if not (w.value is not None and w.minimal_value is not None and w.value != w.minimal_value):
            raise AssertionError("witness values failed to separate the stabilizations")
        return DistinguishReport(x1.name, x2.name, homeo, (i1, i2), hyps, verdict, w, tuple(notes))
    if common and x1.minimal and x2.minimal:
        notes.append("both minimal: genus-zero invariants in pushforward classes of minimal-genus-zero "
                     "classes vanish on both stabilizations and cannot distinguish them")
        return DistinguishReport(x1.name, x2.name, homeo, (i1, i2), hyps, Verdict.INDISTINGUISHABLE, None, tuple(notes))
    failing = [n for n, ok in hyps[:5] if not ok]
    if common:
        failing.append("exactly one of X1, X2 minimal")
    notes.append("failing: " + ", ".join(f"{n} fails" for n in failing))
    return DistinguishReport(x1.name, x2.name, homeo, (i1, i2), hyps, Verdict.HYPOTHESES_NOT_MET, None, tuple(notes))
