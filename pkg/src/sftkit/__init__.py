"""Subshifts of finite type and sofic subshifts on finitely generated groups."""

from .constructions import CANTOR, PairingScheme, disjoint_union, product, project_local_map
from .decision import (
    BallPattern,
    PeriodicWitness,
    Verdict,
    check_empty,
    contains_bounded,
    decide_empty,
    entropy_upper_bound,
    find_periodic,
    has_fixed_point,
    locally_admissible_patterns,
    pattern_count,
    pattern_in_language_bounded,
)
from .errors import DomainError, EmptyBoxError, InputError, IntegrityError, ResourceLimitError, SftError
from .groups import Free, Grid, GroupContext, group_from_descriptor
from .limits import Limits
from .presentations import (
    LocalMap,
    PatternPresentation,
    ResolvedPattern,
    SftPresentation,
    SoficPresentation,
    WangTile,
    WangTileset,
    appears,
    apply_local_map,
    full_shift,
    resolve,
    wang_to_sft,
)
from .reductions import (
    BergerWitness,
    berger_reduction,
    builtin_witness,
    invariant_gap_reduction,
    sofic_rice_reduction,
)
from .serialization import dumps, load, loads

__version__ = "0.1.0"
