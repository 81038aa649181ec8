"""Exact genus-zero Gromov-Witten invariants of symplectic 4-manifolds and
their stabilizations X x S^2."""

__version__ = "0.1.0"

from .distinguish import DistinguishReport, Verdict, check_homeomorphic, distinguish_stabilized
from .errors import (
    DegenerateFormError,
    DegreeError,
    DimensionError,
    GWZeroError,
    HypothesisError,
    LabelError,
    ManifestError,
    NotDeterminedError,
    ValidationError,
    ZeroClassError,
)
from .fourmanifold import (
    CohoClass4,
    Manifold4,
    SphereClass,
    adjunction_c1,
    blow_up,
    blow_up_n,
    homeo_invariants,
    is_exceptional_class,
    sw_of_exceptional,
    taubes_k,
)
from .gw import (
    GWQuery,
    GWValue,
    apply_divisor,
    apply_fundamental_class,
    condition_1,
    dimension_condition,
    eval_4,
    eval_6,
    evaluate,
    moduli_dim,
    reduce_via_axioms,
    semipositive_ok,
)
from .lattice import BilinearLattice, Class2, Parity, direct_sum, is_primitive, named, parse_form
from .sixfold import Class6, CohoClass6, H4Class, Stabilized6, pushforward, stabilize
