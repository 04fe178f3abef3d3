"""Hyperelliptic periodic surface maps in exact arithmetic.

Total valencies and their powers (:mod:`.valency`), polygon models of the
three standard rotations (:mod:`.polygon`), abelian orbifold actions
(:mod:`.action`), free-group words (:mod:`.words`) and the Dehn-twist action
checks (:mod:`.twists`).
"""
from .action import (
    AbelianGroup,
    OrbifoldAction,
    classify_pair,
    element_tv,
    make_action,
    pair_case,
    quotient_signature,
    standard_model,
)
from .kernels import BACKEND
from .polygon import GluedPolygon, RotationAction, build, multiple_orbits, standard_family, tv_from_polygon
from .twists import VerificationReport, make_tables, verify_family
from .valency import (
    FamilyTag,
    TotalValency,
    Valency,
    classify_hyperelliptic,
    closed_form_tv,
    mod_inverse,
    nielsen_equal,
    parse_tv,
    tv_power,
    validate_total_valency,
)
from .words import PartialEndomorphism, Word, apply, apply_sequence, reduce, substitute

__version__ = "0.1.0"
