"""Random fixtures and the oracle-equivalence sweep."""

from __future__ import annotations

import os
import random
import warnings
from dataclasses import dataclass, field

from .fourmanifold import CohoClass4, Manifold4, SphereClass, blow_up
from .gw import GWQuery, evaluate, reduce_via_axioms
from .lattice import Class2, direct_sum_all, named
from .sixfold import CohoClass6, pushforward, stabilize

DEFAULT_SEED = 20131015
MAX_ENTRY = 9


def suite_seed(seed: int | None = None) -> int:
    if seed is not None:
        return seed
    env = os.environ.get("GWZERO_SEED")
    return int(env) if env else DEFAULT_SEED


def permute_manifold(x: Manifold4, perm) -> Manifold4:
    """Relabel the basis so that new basis vector i is old vector perm[i]."""
    def move(c: Class2) -> Class2:
        return Class2(c[p] for p in perm)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return Manifold4(
            x.name, x.lattice.permuted(perm), move(Class2(x.c1)), x.simply_connected, x.minimal,
            tuple(move(e) for e in x.exceptional_classes),
            tuple(SphereClass(move(s.cls), s.genus, s.embedded_sphere_rep) for s in x.sphere_classes),
            x.symplectic,
        )


def random_base(rng: random.Random, max_rank: int = 24) -> Manifold4:
    """A random blown-up manifold of rank <= max_rank with a characteristic c1."""
    while True:
        parts = (["<1>"] * rng.randint(0, 3) + ["H"] * rng.randint(0, 3)
                 + ["E8-"] * rng.choice([0, 0, 1, 2]) + ["<-1>"] * rng.randint(0, 2))
        blowups = rng.randint(1, 3)
        rank = sum(named(p).rank for p in parts)
        if 0 < rank and rank + blowups <= max_rank:
            break
    rng.shuffle(parts)
    lat = direct_sum_all(named(p) for p in parts)
    # c1.x = x.x mod 2 on basis vectors
    c1 = [2 * rng.randint(-1, 1) + (lat.gram[i][i] % 2) for i in range(lat.rank)]
    x = Manifold4.create("R", lat, c1)
    for i in range(blowups):
        x = blow_up(x, f"E{i + 1}")
    perm = list(range(x.rank))
    rng.shuffle(perm)
    return permute_manifold(x, perm)


def _vec(rng, n):
    return [rng.randint(-MAX_ENTRY, MAX_ENTRY) for _ in range(n)]


def random_query(rng: random.Random, x: Manifold4, max_k: int = 6) -> GWQuery:
    e = rng.choice(x.exceptional_classes)
    k = rng.randint(0, max_k)
    n = x.rank
    if rng.random() < 0.5:
        ins = []
        for _ in range(k):
            deg = rng.choices([2, 0, 4], weights=[12, 1, 1])[0]
            if deg == 2:
                ins.append(x.pd(Class2(_vec(rng, n))) if rng.random() < 0.3 else CohoClass4(2, _vec(rng, n)))
            else:
                ins.append(CohoClass4(deg, value=rng.randint(-MAX_ENTRY, MAX_ENTRY)))
        return GWQuery(x, e, ins)
    s = stabilize(x)
    shaped = rng.random() < 0.8
    ins = []
    for j in range(k):
        if shaped:
            deg = 4 if j == 0 else 2
        else:
            deg = rng.choice([0, 2, 2, 4, 4, 6])
        if deg == 2:
            ins.append(CohoClass6.deg2(_vec(rng, n), rng.randint(-MAX_ENTRY, MAX_ENTRY)))
        elif deg == 4:
            ins.append(CohoClass6.deg4(rng.randint(-MAX_ENTRY, MAX_ENTRY), _vec(rng, n)))
        else:
            ins.append(CohoClass6(deg, value=rng.randint(-MAX_ENTRY, MAX_ENTRY)))
    rng.shuffle(ins)
    return GWQuery(s, pushforward(e), ins)


@dataclass
class SweepResult:
    seed: int
    total: int = 0
    compared: int = 0
    nonzero: int = 0
    disagreements: list[tuple[GWQuery, object, object]] = field(default_factory=list)
    peel_checks: int = 0
    peel_failures: int = 0

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.peel_failures


def oracle_sweep(n_queries: int = 1000, seed: int | None = None, bases: int = 50) -> SweepResult:
    seed = suite_seed(seed)
    rng = random.Random(seed)
    res = SweepResult(seed)
    manifolds = [random_base(rng) for _ in range(bases)]
    for _ in range(n_queries):
        q = random_query(rng, rng.choice(manifolds))
        res.total += 1
        a, b = evaluate(q), reduce_via_axioms(q)
        if a.determined and b.determined:
            res.compared += 1
            res.nonzero += a.value != 0
            if a.value != b.value:
                res.disagreements.append((q, a, b))
            order = list(range(q.k))
            rng.shuffle(order)
            res.peel_checks += 1
            if reduce_via_axioms(q, order).value != b.value:
                res.peel_failures += 1
    return res
