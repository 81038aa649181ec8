import warnings
from pathlib import Path

import pytest
from hypothesis import settings

from gwzero import Class2, Manifold4, SphereClass, blow_up, parse_form, stabilize

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "data"

# c1 functional on 3<1> + 20<-1> whose dual class (3, 3, 1, -1, ..., -1) has square -1,
# matching c1^2 of a blown-up K3
MINIMAL_PARTNER_C1 = [3, 3, 1] + [1] * 20


@pytest.fixture(scope="session")
def k3():
    return Manifold4.create("K3", parse_form("3H+2E8-"), [0] * 22)


@pytest.fixture(scope="session")
def x(k3):
    return blow_up(k3, "E")


@pytest.fixture(scope="session")
def E(x):
    return x.exceptional_class()


@pytest.fixture(scope="session")
def s(x):
    return stabilize(x)


@pytest.fixture(scope="session")
def minimal_partner():
    return Manifold4.create("M", parse_form("3<1>+20<-1>"), MINIMAL_PARTNER_C1)


@pytest.fixture(scope="session")
def x_with_sphere(k3):
    """K3 # -CP2 with a registered non-exceptional embedded sphere class A = E + r,
    r an E8 root: A.A = -3 and c1.A = 1."""
    x = blow_up(k3, "E")
    a = Class2.basis(23, 6) + x.exceptional_class()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return Manifold4(x.name, x.lattice, x.c1, x.simply_connected, x.minimal,
                         x.exceptional_classes, x.sphere_classes + (SphereClass(a, 0, True),))


@pytest.fixture(scope="session")
def cp2_blown_up():
    """CP2 # -CP2 with the line class registered as an embedded sphere (b2+ = 1)."""
    cp2 = Manifold4.create("CP2", parse_form("<1>"), [3])
    x = blow_up(cp2, "E")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return Manifold4(x.name, x.lattice, x.c1, True, False, x.exceptional_classes,
                         x.sphere_classes + (SphereClass(Class2([1, 0]), 0, True),))


ACCEPTANCE_RESULTS: list[tuple[str, bool]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line, ok in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {line}")
