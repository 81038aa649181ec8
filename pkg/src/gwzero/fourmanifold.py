"""Closed simply connected symplectic 4-manifolds.

A :class:`Manifold4` is discrete data only: the intersection lattice, the
first Chern class as a pairing functional on the H2 basis, and explicit
registries of exceptional classes and sphere classes.  Which classes carry
embedded J-holomorphic spheres is an input, never inferred from arithmetic.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from typing import Sequence

from .errors import DegreeError, HypothesisError, LabelError, NotDeterminedError, ValidationError
from .lattice import BilinearLattice, Class2, Parity, direct_sum, is_primitive, named


@dataclass(frozen=True)
class SphereClass:
    cls: Class2
    genus: int = 0
    embedded_sphere_rep: bool = False

    def __post_init__(self):
        object.__setattr__(self, "cls", Class2(self.cls))
        if self.genus < 0:
            raise ValidationError("genus must be nonnegative")
        if self.embedded_sphere_rep and self.genus != 0:
            raise ValidationError("an embedded sphere representative forces genus 0")


@dataclass(frozen=True)
class CohoClass4:
    """Even-degree cohomology of a simply connected 4-manifold.

    Degree 2 classes are stored as integer functionals ``phi`` on the H2
    basis; degrees 0 and 4 as a single integer multiple of the generator.
    """

    degree: int
    phi: tuple[int, ...] = ()
    value: int = 0

    def __post_init__(self):
        if self.degree not in (0, 2, 4):
            raise DegreeError(f"degree {self.degree} not in (0, 2, 4)")
        object.__setattr__(self, "phi", tuple(int(x) for x in self.phi))
        if self.degree != 2 and self.phi:
            raise DegreeError("only degree-2 classes carry a functional")

    @classmethod
    def unit(cls, value: int = 1) -> "CohoClass4":
        return cls(0, value=value)

    @classmethod
    def point(cls, value: int = 1) -> "CohoClass4":
        """PD of a point, normalized to +1 on the fundamental class."""
        return cls(4, value=value)

    def evaluate(self, a: Class2) -> int:
        if self.degree != 2:
            raise DegreeError("only degree-2 classes pair with H2")
        if len(self.phi) != len(a):
            raise ValidationError("functional length does not match class rank")
        return sum(x * y for x, y in zip(self.phi, a))


@dataclass(frozen=True)
class Manifold4:
    name: str
    lattice: BilinearLattice
    c1: tuple[int, ...]
    simply_connected: bool = True
    minimal: bool = True
    exceptional_classes: tuple[Class2, ...] = ()
    sphere_classes: tuple[SphereClass, ...] = ()
    symplectic: bool = True
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        n = self.lattice.rank
        object.__setattr__(self, "c1", tuple(int(x) for x in self.c1))
        object.__setattr__(self, "exceptional_classes", tuple(Class2(e) for e in self.exceptional_classes))
        object.__setattr__(self, "sphere_classes", tuple(self.sphere_classes))
        if len(self.c1) != n:
            raise ValidationError(f"{self.name}: c1 has length {len(self.c1)}, rank is {n}")
        if not self.lattice.is_unimodular():
            raise ValidationError(f"{self.name}: intersection form is not unimodular")
        for e in self.exceptional_classes:
            if len(e) != n:
                raise ValidationError(f"{self.name}: exceptional class {e} has wrong length")
            if self.lattice.pair(e, e) != -1 or self.c1_pair(e) != 1 or not is_primitive(e):
                raise ValidationError(f"{self.name}: {e} is not arithmetically exceptional (need E.E=-1, c1.E=1, primitive)")
        if self.minimal and self.exceptional_classes:
            raise ValidationError(f"{self.name}: minimal manifold with registered exceptional classes")
        if not self.minimal and not self.exceptional_classes:
            raise ValidationError(f"{self.name}: non-minimal manifold needs at least one registered exceptional class")
        for s in self.sphere_classes:
            if len(s.cls) != n:
                raise ValidationError(f"{self.name}: sphere class {s.cls} has wrong length")
        for e in self.exceptional_classes:
            if not any(s.cls == e and s.genus == 0 for s in self.sphere_classes):
                raise ValidationError(f"{self.name}: exceptional class {e} missing from sphere classes")
        notes = tuple(self._characteristic_notes())
        object.__setattr__(self, "warnings", notes)
        for msg in notes:
            warnings.warn(msg, stacklevel=3)

    @classmethod
    def create(cls, name, lattice, c1, *, simply_connected=True, exceptional_classes=(),
               sphere_classes=(), minimal=None, symplectic=True) -> "Manifold4":
        """Convenience constructor: registers exceptional classes as embedded
        spheres and infers ``minimal`` from the registry unless given."""
        exc = tuple(Class2(e) for e in exceptional_classes)
        spheres = list(sphere_classes)
        for e in exc:
            if not any(s.cls == e for s in spheres):
                spheres.append(SphereClass(e, 0, True))
        if minimal is None:
            minimal = not exc
        return cls(name, lattice, tuple(c1), simply_connected, minimal, exc, tuple(spheres), symplectic)

    def _characteristic_notes(self):
        for i, lab in enumerate(self.lattice.basis_labels):
            if (self.c1[i] - self.lattice.gram[i][i]) % 2:
                yield (f"{self.name}: c1 fails the characteristic congruence on basis vector {lab!r} "
                       f"(c1.x={self.c1[i]}, x.x={self.lattice.gram[i][i]})")

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def pair(self, a, b) -> int:
        return self.lattice.pair(a, b)

    def c1_pair(self, a: Class2 | Sequence[int]) -> int:
        a = tuple(a)
        if len(a) != self.rank:
            raise ValidationError(f"class of length {len(a)} on rank-{self.rank} manifold")
        return sum(x * y for x, y in zip(self.c1, a))

    def c1_class(self) -> Class2:
        """c1 as an H2 class (its Poincare dual), via the unimodular form."""
        return self.lattice.dual_class(self.c1)

    def signature(self) -> tuple[int, int]:
        return self.lattice.signature()

    @property
    def b2_plus(self) -> int:
        return self.signature()[0]

    def sphere_class(self, a: Class2) -> SphereClass | None:
        return next((s for s in self.sphere_classes if s.cls == a), None)

    def pd(self, a: Class2 | Sequence[int]) -> CohoClass4:
        """Poincare dual of an H2 class as a degree-2 cohomology class."""
        return CohoClass4(2, self.lattice.functional(a))

    def exceptional_class(self, i: int = -1) -> Class2:
        return self.exceptional_classes[i]


def blow_up(y: Manifold4, label: str = "E", name: str | None = None) -> Manifold4:
    """Connected sum with a reversed-orientation CP2.

    The new class E has E.E = -1 and c1.E = 1 (c1 drops by PD[E]); it is
    registered as an exceptional class with an embedded sphere.
    """
    if label in y.lattice.basis_labels:
        raise LabelError(f"label {label!r} already used in {y.name}")
    lat = direct_sum(y.lattice, BilinearLattice(named("<-1>").gram, [label]))
    e = Class2.basis(lat.rank, lat.rank - 1)
    exc = tuple(c.extend(0) for c in y.exceptional_classes) + (e,)
    spheres = tuple(replace(s, cls=s.cls.extend(0)) for s in y.sphere_classes) + (SphereClass(e, 0, True),)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return Manifold4(
            name=name or f"{y.name}#-CP2",
            lattice=lat,
            c1=y.c1 + (1,),
            simply_connected=y.simply_connected,
            minimal=False,
            exceptional_classes=exc,
            sphere_classes=spheres,
            symplectic=y.symplectic,
        )


def blow_up_n(y: Manifold4, n: int, prefix: str = "E") -> Manifold4:
    x = y
    for i in range(n):
        x = blow_up(x, f"{prefix}{i + 1}")
    return x


def adjunction_c1(x: Manifold4, a: Class2, genus: int) -> int:
    """c1 pairing forced on an embedded genus-g symplectic surface in class a."""
    return x.pair(a, a) + 2 - 2 * genus


def is_exceptional_class(x: Manifold4, a: Class2) -> bool:
    return Class2(a) in x.exceptional_classes


def exceptional_diagnostic(x: Manifold4, a: Class2) -> str | None:
    """Explain why an arithmetically exceptional class is not treated as one."""
    a = Class2(a)
    if a.is_zero() or is_exceptional_class(x, a):
        return None
    if x.pair(a, a) == -1 and x.c1_pair(a) == 1:
        return "arithmetically exceptional but unregistered"
    return None


@dataclass(frozen=True)
class HomeoInvariants:
    rank: int
    signature: tuple[int, int]
    parity: Parity
    simply_connected: bool


def homeo_invariants(x: Manifold4) -> HomeoInvariants:
    """Rank, signature, parity and simple connectivity of the form.

    For simply connected closed smooth 4-manifolds equal tuples mean
    homeomorphic (Freedman, with Donaldson for the smooth definite case).
    """
    if not x.simply_connected:
        raise NotDeterminedError("Freedman criterion requires simple connectivity")
    return HomeoInvariants(x.rank, x.signature(), x.lattice.parity(), True)


def taubes_k(x: Manifold4, a: Class2 | SphereClass, genus: int | None = None) -> int:
    """Number of point constraints ``A.A + 1 - g`` relating Taubes' Gromov count
    to a point-constrained genus-zero invariant."""
    if isinstance(a, SphereClass):
        cls, g = a.cls, a.genus
    else:
        cls = Class2(a)
        if genus is not None:
            g = genus
        else:
            s = x.sphere_class(cls)
            if s is None:
                raise HypothesisError(f"no minimal-genus data registered for {cls}")
            g = s.genus
    if g == 1:
        raise NotDeterminedError("the Gromov/GW bridge requires minimal genus different from 1")
    return x.pair(cls, cls) + 1 - g


def sw_of_exceptional(x: Manifold4, e: Class2) -> tuple[int, Class2]:
    """Seiberg-Witten value on ``2E + c1`` for a registered exceptional class.

    Returns ``(+1, 2E + c1)``; the sign follows the convention that the
    unconstrained exceptional-sphere count is +1.
    """
    e = Class2(e)
    if not is_exceptional_class(x, e):
        raise HypothesisError(f"{e} is not a registered exceptional class of {x.name}")
    return 1, 2 * e + x.c1_class()


def standard_manifolds() -> dict[str, Manifold4]:
    """A few fixtures: a K3-type form and the CP2 # 8(-CP2) form."""
    from .lattice import parse_form

    k3 = Manifold4.create("K3", parse_form("3H+2E8-"), [0] * 22)
    cp2 = Manifold4.create("CP2", parse_form("<1>"), [3])
    return {"K3": k3, "CP2": cp2}

