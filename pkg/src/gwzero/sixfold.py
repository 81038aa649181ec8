"""The stabilization X x S^2.

Cohomology is Kunneth-graded.  With tau the generator of H^2(S^2) and
omega_X the top class of X (both normalized to 1 on the fundamental class):

* H^2 = H^2(X) + Z tau, stored as ``(phi, lam)``;
* H^4 = Z omega_X + H^2(X) tau, stored as ``(vol, psi)``.

Homology bases: H2 is spanned by pushforwards of the base H2 basis and the
fiber f = [pt x S^2]; H4 by [X x pt] and the sweeps [e_i x S^2].  Every
quantity below is a pairing against these bases.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeError, NotDeterminedError, ValidationError
from .fourmanifold import Manifold4
from .lattice import Class2


@dataclass(frozen=True)
class Class6:
    """H2 class ``a`` pushed forward plus ``b`` times the fiber."""

    a: Class2
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", Class2(self.a))
        object.__setattr__(self, "b", int(self.b))

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b == 0

    def is_pushforward(self) -> bool:
        return self.b == 0

    def __add__(self, other: "Class6") -> "Class6":
        return Class6(self.a + other.a, self.b + other.b)

    def __mul__(self, m: int) -> "Class6":
        return Class6(self.a * m, self.b * m)

    __rmul__ = __mul__

    def coords(self) -> tuple[int, ...]:
        return self.a.coords + (self.b,)


@dataclass(frozen=True)
class H4Class:
    """``pt`` times [X x pt] plus the sweep ``sweep x S^2``."""

    pt: int
    sweep: Class2

    def __post_init__(self):
        object.__setattr__(self, "sweep", Class2(self.sweep))


@dataclass(frozen=True)
class CohoClass6:
    degree: int
    phi: tuple[int, ...] = ()
    lam: int = 0
    vol: int = 0
    psi: tuple[int, ...] = ()
    value: int = 0

    def __post_init__(self):
        if self.degree not in (0, 2, 4, 6):
            raise DegreeError(f"degree {self.degree} not in (0, 2, 4, 6)")
        object.__setattr__(self, "phi", tuple(int(x) for x in self.phi))
        object.__setattr__(self, "psi", tuple(int(x) for x in self.psi))
        if self.degree != 2 and (self.phi or self.lam):
            raise DegreeError("phi/lam only describe degree-2 classes")
        if self.degree != 4 and (self.psi or self.vol):
            raise DegreeError("vol/psi only describe degree-4 classes")
        if self.degree in (2, 4) and self.value:
            raise DegreeError("value only describes degree-0/6 classes")

    @classmethod
    def deg2(cls, phi, lam: int = 0) -> "CohoClass6":
        return cls(2, phi=tuple(phi), lam=lam)

    @classmethod
    def deg4(cls, vol: int, psi) -> "CohoClass6":
        return cls(4, vol=vol, psi=tuple(psi))

    @classmethod
    def unit(cls, value: int = 1) -> "CohoClass6":
        return cls(0, value=value)

    def __add__(self, other: "CohoClass6") -> "CohoClass6":
        if self.degree != other.degree:
            raise DegreeError("cannot add classes of different degree")
        return CohoClass6(
            self.degree,
            tuple(x + y for x, y in zip(self.phi, other.phi)),
            self.lam + other.lam,
            self.vol + other.vol,
            tuple(x + y for x, y in zip(self.psi, other.psi)),
            self.value + other.value,
        )


@dataclass(frozen=True)
class Stabilized6:
    base: Manifold4

    @property
    def name(self) -> str:
        return f"{self.base.name}xS2"

    @property
    def simply_connected(self) -> bool:
        return self.base.simply_connected

    @property
    def rank_h2(self) -> int:
        return self.base.rank + 1

    @property
    def h2_labels(self) -> tuple[str, ...]:
        return tuple(f"{lab}bar" for lab in self.base.lattice.basis_labels) + ("f",)

    @property
    def h4_labels(self) -> tuple[str, ...]:
        return ("Xxpt",) + tuple(f"{lab}xS2" for lab in self.base.lattice.basis_labels)

    def _require_sc(self):
        if not self.simply_connected:
            raise NotDeterminedError("odd cohomology of a non-simply-connected base is not modeled")

    def _check(self, a: Class2) -> Class2:
        a = Class2(a)
        if len(a) != self.base.rank:
            raise ValidationError(f"class of length {len(a)} on base of rank {self.base.rank}")
        return a

    def fiber(self) -> Class6:
        return Class6(Class2.zero(self.base.rank), 1)

    def sweep(self, a: Class2) -> H4Class:
        return H4Class(0, self._check(a))

    def slice(self) -> H4Class:
        """[X x pt]."""
        return H4Class(1, Class2.zero(self.base.rank))

    def c1_pair(self, c: Class6) -> int:
        """c1(X x S^2) = c1(X) + 2 tau evaluated on ``c``."""
        return self.base.c1_pair(self._check(c.a)) + 2 * c.b

    def pd_of_pushforward(self, a: Class2) -> CohoClass6:
        self._require_sc()
        return CohoClass6.deg4(0, self.base.lattice.functional(self._check(a)))

    def pd_of_sweep(self, a: Class2) -> CohoClass6:
        self._require_sc()
        return CohoClass6.deg2(self.base.lattice.functional(self._check(a)), 0)

    def pd_of_fiber(self) -> CohoClass6:
        self._require_sc()
        return CohoClass6.deg4(1, (0,) * self.base.rank)

    def pd_of_slice(self) -> CohoClass6:
        self._require_sc()
        return self.tau()

    def pd(self, c: Class6) -> CohoClass6:
        """Degree-4 Poincare dual of an H2 class."""
        return self.pd_of_pushforward(c.a) + CohoClass6.deg4(c.b, (0,) * self.base.rank)

    def tau(self) -> CohoClass6:
        return CohoClass6.deg2((0,) * self.base.rank, 1)

    def pair_deg2(self, alpha: CohoClass6, c: Class6) -> int:
        if alpha.degree != 2:
            raise DegreeError(f"expected a degree-2 class, got degree {alpha.degree}")
        a = self._check(c.a)
        return sum(x * y for x, y in zip(alpha.phi, a)) + alpha.lam * c.b

    def pair_deg4(self, beta: CohoClass6, c4: H4Class) -> int:
        if beta.degree != 4:
            raise DegreeError(f"expected a degree-4 class, got degree {beta.degree}")
        s = self._check(c4.sweep)
        return beta.vol * c4.pt + sum(x * y for x, y in zip(beta.psi, s))

    def _q_dual(self, phi, chi) -> int:
        """Cup product of two base degree-2 classes on [X]: phi^T Q^-1 chi."""
        inv = self.base.lattice.inverse()
        n = self.base.rank
        return sum(phi[i] * inv[i][j] * chi[j] for i in range(n) if phi[i] for j in range(n))

    def cup22(self, a: CohoClass6, b: CohoClass6) -> CohoClass6:
        if a.degree != 2 or b.degree != 2:
            raise DegreeError("cup22 expects two degree-2 classes")
        vol = self._q_dual(a.phi, b.phi)
        psi = tuple(a.lam * y + b.lam * x for x, y in zip(a.phi, b.phi))
        return CohoClass6.deg4(vol, psi)

    def triple_product(self, a: CohoClass6, b: CohoClass6, c: CohoClass6) -> int:
        """<a u b u c, [X x S^2]> for degree-2 classes; uses tau^2 = 0."""
        for x in (a, b, c):
            if x.degree != 2:
                raise DegreeError("triple_product expects degree-2 classes")
        return (self._q_dual(a.phi, b.phi) * c.lam
                + self._q_dual(a.phi, c.phi) * b.lam
                + self._q_dual(b.phi, c.phi) * a.lam)


def stabilize(x: Manifold4) -> Stabilized6:
    return Stabilized6(x)


def pushforward(a: Class2) -> Class6:
    return Class6(Class2(a), 0)
