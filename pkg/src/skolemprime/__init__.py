"""Decide zeros of linear recurrence sequences at prime-parameterised indices."""

from .errors import (DegenerateInputError, InternalConsistencyError, InvalidArgumentError,
                     InvalidFamilyError, InvalidRootsError, NotGaloisError,
                     PartialFactorizationError, ResourceError, SkolemError)
from .lrs import (ExpPolySequence, RecurrenceSpec, associated_simple, eval_exp_poly,
                  eval_exp_poly_mod, eval_recurrence, minimal_recurrence, scale_to_integral,
                  to_exp_poly)
from .number_field import FieldElement, NumberField, ramified_candidates, splitting_data
from .skolem import (DecideConfig, DecisionReport, InertialFamily, PrimePower,
                     PrimePowerMultiple, SumFamily, admissible_multipliers, brute_force_oracle,
                     candidate_primes, congruence_gap, decide, verify_candidate)

__version__ = "0.1.0"

__all__ = [
    "DegenerateInputError",
    "InternalConsistencyError",
    "InvalidArgumentError",
    "InvalidFamilyError",
    "InvalidRootsError",
    "NotGaloisError",
    "PartialFactorizationError",
    "ResourceError",
    "SkolemError",
    "ExpPolySequence",
    "RecurrenceSpec",
    "associated_simple",
    "eval_exp_poly",
    "eval_exp_poly_mod",
    "eval_recurrence",
    "minimal_recurrence",
    "scale_to_integral",
    "to_exp_poly",
    "FieldElement",
    "NumberField",
    "ramified_candidates",
    "splitting_data",
    "DecideConfig",
    "DecisionReport",
    "InertialFamily",
    "PrimePower",
    "PrimePowerMultiple",
    "SumFamily",
    "admissible_multipliers",
    "brute_force_oracle",
    "candidate_primes",
    "congruence_gap",
    "decide",
    "verify_candidate",
]
