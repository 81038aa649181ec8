"""Genus-zero Gromov-Witten invariants by axioms and closed forms.

Two independent routes are provided:

* :func:`eval_4` / :func:`eval_6` are decision procedures over closed-form
  product formulas for exceptional classes and vanishing results for
  embedded sphere classes on manifolds with b2+ > 1;
* :func:`reduce_via_axioms` only knows the fundamental class axiom, the
  divisor axiom and two base cases, and reduces a query step by step.

Both return a :class:`GWValue`, which is either an exact integer or an
explicit "not determined" with a reason.  Each value carries a trace of the
rules that fired.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Sequence, Union

from .errors import ZeroClassError
from .fourmanifold import CohoClass4, Manifold4, is_exceptional_class
from .lattice import Class2, is_primitive
from .sixfold import Class6, CohoClass6, Stabilized6

Space = Union[Manifold4, Stabilized6]
Insertion = Union[CohoClass4, CohoClass6]

# rule identifiers used in traces
SEMIPOSITIVE = "semipositivity (automatic in real dimension <= 6)"
CONDITION_1 = "non-multiple-cover condition on the class"
ZERO_CLASS = "zero-class convention: invariant set to 0"
FUNDAMENTAL = "fundamental class axiom: a degree-0 insertion kills the invariant"
DIVISOR = "divisor axiom: peel a degree-2 insertion, multiply by its pairing with the class"
DIMENSION = "dimension condition: total insertion degree != 2n - 6 + 2 c1(A) + 2k"
EXC_BASE = "exceptional sphere, no insertions: unique embedded curve, count 1"
EXC_PRODUCT = "exceptional sphere: product of degree-2 pairings with E"
EXC_NOT_DEG2 = "exceptional sphere: an insertion of degree != 2 forces 0"
SPHERE_VANISH = "b2+ > 1: an embedded sphere class that is not exceptional has vanishing invariants"
STAB_PRODUCT = "stabilized exceptional class: (beta . [E x S2]) times degree-2 pairings with E-bar"
STAB_SHAPE = "stabilized exceptional class: need exactly one degree-4 insertion, the rest degree 2"
STAB_BASE = "stabilized base case: moduli space is E-bar x S2, value beta . [E x S2]"
FIBER = "class has a fiber component: only pushforward classes are covered"
NOT_SC = "base is not simply connected"
OUTSIDE = "outside the hypotheses of the exceptional-class and sphere-vanishing results"
IRREDUCIBLE = "irreducible query"


@dataclass(frozen=True)
class GWQuery:
    space: Space
    cls: Union[Class2, Class6]
    insertions: tuple[Insertion, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "insertions", tuple(self.insertions))
        if isinstance(self.space, Stabilized6):
            if not isinstance(self.cls, Class6):
                object.__setattr__(self, "cls", Class6(Class2(self.cls), 0))
            if any(not isinstance(a, CohoClass6) for a in self.insertions):
                raise TypeError("insertions on X x S2 must be CohoClass6")
        else:
            object.__setattr__(self, "cls", Class2(self.cls))
            if any(not isinstance(a, CohoClass4) for a in self.insertions):
                raise TypeError("insertions on a 4-manifold must be CohoClass4")

    @property
    def k(self) -> int:
        return len(self.insertions)

    def moved_last(self, i: int) -> "GWQuery":
        """Same query with insertion ``i`` moved to the end.

        All insertions have even degree, so reordering does not change the
        invariant.
        """
        ins = list(self.insertions)
        ins.append(ins.pop(i))
        return GWQuery(self.space, self.cls, tuple(ins))

    def drop_last(self) -> "GWQuery":
        return GWQuery(self.space, self.cls, self.insertions[:-1])


@dataclass(frozen=True)
class GWValue:
    value: int | None
    reason: str | None = None
    trace: tuple[str, ...] = field(default=(), compare=False)

    @property
    def determined(self) -> bool:
        return self.value is not None

    @classmethod
    def integer(cls, value: int, trace=()) -> "GWValue":
        return cls(int(value), None, tuple(trace))

    @classmethod
    def not_determined(cls, reason: str, trace=()) -> "GWValue":
        return cls(None, reason, tuple(trace) + (f"not determined: {reason}",))

    def __str__(self) -> str:
        return str(self.value) if self.determined else f"NotDetermined({self.reason})"


def real_dim(space: Space) -> int:
    return 6 if isinstance(space, Stabilized6) else 4


def _base(space: Space) -> Manifold4:
    return space.base if isinstance(space, Stabilized6) else space


def c1_pair(space: Space, cls) -> int:
    return space.c1_pair(cls)


def _is_zero(cls) -> bool:
    return cls.is_zero()


def moduli_dim(space: Space, cls, k: int) -> int:
    return real_dim(space) - 6 + 2 * c1_pair(space, cls) + 2 * k


def dimension_condition(space: Space, cls, insertions: Sequence[Insertion]) -> bool:
    return sum(a.degree for a in insertions) == moduli_dim(space, cls, len(insertions))


def condition_1(space: Space, cls) -> bool:
    """Conservative check that ``cls`` is not a multiple of a c1-null class.

    Sphericality of divisors is not tracked, so a c1-null class passes only
    when it is primitive.
    """
    coords = cls.coords() if isinstance(cls, Class6) else tuple(cls)
    if not any(coords):
        raise ZeroClassError("condition is stated for nonzero classes")
    if c1_pair(space, cls) != 0:
        return True
    return is_primitive(coords)


def semipositive_ok(space: Space) -> bool:
    if real_dim(space) not in (4, 6):
        raise TypeError("only real dimensions 4 and 6 are modeled")
    return True


def pair_with_class(space: Space, alpha: Insertion, cls) -> int:
    if isinstance(space, Stabilized6):
        return space.pair_deg2(alpha, cls)
    return alpha.evaluate(cls)


def apply_fundamental_class(q: GWQuery) -> GWValue | None:
    if not _is_zero(q.cls) and q.k >= 1 and any(a.degree == 0 for a in q.insertions):
        return GWValue.integer(0, [FUNDAMENTAL])
    return None


def apply_divisor(q: GWQuery) -> tuple[int, GWQuery] | None:
    if _is_zero(q.cls) or q.k == 0:
        return None
    last = q.insertions[-1]
    if last.degree != 2:
        return None
    return pair_with_class(q.space, last, q.cls), q.drop_last()


def _preamble(q: GWQuery) -> list[str]:
    trace = [SEMIPOSITIVE] if semipositive_ok(q.space) else []
    if not _is_zero(q.cls) and not condition_1(q.space, q.cls):
        trace.append(f"warning: {CONDITION_1} fails (closed forms still applied)")
    return trace


def _sphere_vanishing_applies(x: Manifold4, a: Class2) -> bool:
    s = x.sphere_class(a)
    return s is not None and s.embedded_sphere_rep and x.b2_plus > 1


def eval_4(q: GWQuery) -> GWValue:
    x = q.space
    assert isinstance(x, Manifold4)
    trace = _preamble(q)
    if _is_zero(q.cls):
        return GWValue.integer(0, trace + [ZERO_CLASS])
    hit = apply_fundamental_class(q)
    if hit is not None:
        return GWValue.integer(0, trace + list(hit.trace))
    if not dimension_condition(x, q.cls, q.insertions):
        dim = moduli_dim(x, q.cls, q.k)
        return GWValue.integer(0, trace + [f"{DIMENSION} (degrees sum to "
                                           f"{sum(a.degree for a in q.insertions)}, moduli dimension {dim})"])
    if is_exceptional_class(x, q.cls):
        if not x.simply_connected:
            return GWValue.not_determined(NOT_SC, trace)
        if q.k == 0:
            return GWValue.integer(1, trace + [EXC_BASE])
        if all(a.degree == 2 for a in q.insertions):
            factors = [a.evaluate(q.cls) for a in q.insertions]
            return GWValue.integer(prod(factors), trace + [f"{EXC_PRODUCT}: {factors}"])
        return GWValue.integer(0, trace + [EXC_NOT_DEG2])
    if _sphere_vanishing_applies(x, q.cls):
        return GWValue.integer(0, trace + [SPHERE_VANISH])
    return GWValue.not_determined(OUTSIDE, trace)


def eval_6(q: GWQuery) -> GWValue:
    s = q.space
    assert isinstance(s, Stabilized6)
    x = s.base
    trace = _preamble(q)
    if _is_zero(q.cls):
        return GWValue.integer(0, trace + [ZERO_CLASS])
    if not q.cls.is_pushforward():
        return GWValue.not_determined(FIBER, trace)
    hit = apply_fundamental_class(q)
    if hit is not None:
        return GWValue.integer(0, trace + list(hit.trace))
    if not dimension_condition(s, q.cls, q.insertions):
        dim = moduli_dim(s, q.cls, q.k)
        return GWValue.integer(0, trace + [f"{DIMENSION} (degrees sum to "
                                           f"{sum(a.degree for a in q.insertions)}, moduli dimension {dim})"])
    a = q.cls.a
    if is_exceptional_class(x, a):
        if not s.simply_connected:
            return GWValue.not_determined(NOT_SC, trace)
        deg4 = [b for b in q.insertions if b.degree == 4]
        deg2 = [b for b in q.insertions if b.degree == 2]
        if len(deg4) != 1 or len(deg2) != q.k - 1:
            return GWValue.integer(0, trace + [f"{STAB_SHAPE} (got {len(deg4)} of degree 4)"])
        head = s.pair_deg4(deg4[0], s.sweep(a))
        factors = [s.pair_deg2(b, q.cls) for b in deg2]
        return GWValue.integer(head * prod(factors), trace + [f"{STAB_PRODUCT}: {head} x {factors}"])
    if _sphere_vanishing_applies(x, a):
        return GWValue.integer(0, trace + [SPHERE_VANISH])
    return GWValue.not_determined(OUTSIDE, trace)


def evaluate(q: GWQuery) -> GWValue:
    return eval_6(q) if isinstance(q.space, Stabilized6) else eval_4(q)


def reduce_via_axioms(q: GWQuery, peel_order: Sequence[int] | None = None) -> GWValue:
    """Reduce ``q`` with the two axioms down to a base case.

    ``peel_order`` lists original insertion indices; degree-2 insertions are
    peeled in that order (default: from the back).
    """
    stab = isinstance(q.space, Stabilized6)
    base = _base(q.space)
    if _is_zero(q.cls):
        return GWValue.not_determined("oracle requires a nonzero class")
    if stab and not q.cls.is_pushforward():
        return GWValue.not_determined(FIBER)
    a = q.cls.a if stab else q.cls
    if not is_exceptional_class(base, a):
        return GWValue.not_determined("oracle covers exceptional classes only")
    if not base.simply_connected:
        return GWValue.not_determined(NOT_SC)

    if peel_order is None:
        peel_order = range(q.k - 1, -1, -1)
    pending = list(peel_order)
    live = list(range(q.k))  # original indices still present in `cur`
    cur = q
    acc = 1
    trace: list[str] = []
    while True:
        hit = apply_fundamental_class(cur)
        if hit is not None:
            return GWValue.integer(0, trace + list(hit.trace))
        if not stab and cur.k == 0:
            return GWValue.integer(acc, trace + [EXC_BASE])
        if stab and cur.k == 0:
            return GWValue.integer(0, trace + [f"{DIMENSION} (k = 0, moduli dimension 2)"])
        if stab and cur.k == 1 and cur.insertions[0].degree == 4:
            v = q.space.pair_deg4(cur.insertions[0], q.space.sweep(a))
            return GWValue.integer(acc * v, trace + [f"{STAB_BASE}: {v}"])
        nxt = next((i for i in pending if i in live and q.insertions[i].degree == 2), None)
        if nxt is None:
            nxt = next((i for i in reversed(live) if q.insertions[i].degree == 2), None)
        if nxt is None:
            return GWValue.not_determined(IRREDUCIBLE, trace)
        if nxt in pending:
            pending.remove(nxt)
        pos = live.index(nxt)
        step = apply_divisor(cur.moved_last(pos))
        assert step is not None
        m, cur = step
        live.pop(pos)
        acc *= m
        trace.append(f"{DIVISOR}: insertion {nxt} contributes {m}")

