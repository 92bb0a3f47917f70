"""Many-one reductions from SFT emptiness, and the catalog of Berger witness pairs.

Every reduction here is a pure presentation-to-presentation map built from
:func:`~sftkit.constructions.product` and
:func:`~sftkit.constructions.disjoint_union`.  Whether a catalog pair really
witnesses its property is argued in ``citation`` and never machine-checked.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import CANTOR, disjoint_union, mixing_patterns, product, project_local_map
from .errors import InputError
from .groups import GroupContext, Grid
from .limits import Limits
from .presentations import SftPresentation, SoficPresentation, check_same_group, full_shift
from .serialization import digest


@dataclass(frozen=True)
class BergerWitness:
    name: str
    x_plus: SftPresentation
    x_minus: SftPresentation
    property: str
    citation: str
    morphism: str = ""
    amenable_only: bool = False


def berger_reduction(pres: SftPresentation, w: BergerWitness, limits: Limits | None = None) -> SftPresentation:
    """``X_plus`` disjoint-union ``(X × X_minus)``: has the property iff the input SFT is empty."""
    check_same_group(pres, w.x_plus, w.x_minus)
    z = disjoint_union(w.x_plus, product(pres, w.x_minus, limits=limits))
    return z.with_comment(f"berger_reduction[{w.name}]({digest(pres)})")


def invariant_gap_reduction(
    pres: SftPresentation, x0: SftPresentation, y0: SftPresentation, limits: Limits | None = None
) -> SftPresentation:
    """``x0`` disjoint-union ``(y0 × X)``.

    For an invariant that does not decrease under unions and under products
    with nonempty systems, the value on the output is at most the value of x0
    when X is empty and at least the value of y0 otherwise.
    """
    check_same_group(pres, x0, y0)
    z = disjoint_union(x0, product(y0, pres, limits=limits))
    return z.with_comment(f"invariant_gap_reduction({digest(pres)}, x0={digest(x0)}, y0={digest(y0)})")


def sofic_rice_reduction(pres: SftPresentation, plus: SoficPresentation, limits: Limits | None = None) -> SoficPresentation:
    """Sofic presentation that equals ``plus``'s subshift when X is nonempty and is empty otherwise.

    The base is ``plus.base × X`` and the local map reads the first (plus)
    component of each paired symbol.
    """
    check_same_group(pres, plus.base)
    base = product(plus.base, pres, limits=limits)
    base = base.with_comment(f"sofic_rice_reduction({digest(pres)}, plus={digest(plus)})")
    mu = project_local_map(base, CANTOR, 1, plus.local_map, limits)
    return SoficPresentation(base, mu)


def singleton_sft(group: GroupContext) -> SftPresentation:
    return full_shift(group, (0,))


def two_fixed_points_sft(group: GroupContext) -> SftPresentation:
    """Alphabet {0, 1} with neighbouring cells forced equal: exactly the two constant configurations."""
    return SftPresentation(group, (0, 1), tuple(mixing_patterns(group, (0,), (1,))))


_ONE_CONFIG = "X_plus is a single configuration"
_TWO_FIXED = (
    "X_minus has two fixed points; any extension of it splits into two disjoint "
    "nonempty subsystems (the preimages of the two fixed points)"
)

CATALOG = {
    "transitivity": "topological transitivity (a configuration with dense orbit)",
    "minimality": "minimality (no proper nonempty subsystem)",
    "no-strongly-aperiodic": "having no strongly aperiodic configuration (negated aperiodic domino problem)",
    "tcpe": "topologically complete positive entropy (grid groups of dimension >= 2)",
    "conjugate-to-x": "being topologically conjugate to a fixed nonempty SFT X (amenable groups)",
    "factor-of-x": "being a factor of a fixed nonempty SFT X (amenable groups)",
    "embeds-into-x": "embedding into a fixed nonempty SFT X (amenable groups)",
}
PARAMETERIZED = ("conjugate-to-x", "factor-of-x", "embeds-into-x")


def builtin_witness(name: str, group: GroupContext, x: SftPresentation | None = None) -> BergerWitness:
    """The catalog witness pair ``name`` over ``group``.

    The ``*-x`` entries need the parameter presentation ``x``.
    """
    if name not in CATALOG:
        raise InputError(f"unknown witness {name!r}; known: {', '.join(CATALOG)}")
    prop = CATALOG[name]
    if name in ("transitivity", "minimality"):
        return BergerWitness(
            name, singleton_sft(group), two_fixed_points_sft(group), prop,
            citation=f"{_ONE_CONFIG}, which has the property; {_TWO_FIXED}, so no extension has it.",
            morphism="the constant map onto either fixed point",
        )
    if name == "no-strongly-aperiodic":
        return BergerWitness(
            name, singleton_sft(group), full_shift(group, (0, 1)), prop,
            citation=f"{_ONE_CONFIG} (a fixed point, so not strongly aperiodic); the full shift on "
            "{0, 1} contains a strongly aperiodic configuration, and so does every extension of it.",
            morphism="inclusion of the constant 0 configuration",
        )
    if name == "tcpe":
        if not isinstance(group, Grid) or group.dimension < 2:
            raise InputError(f"witness 'tcpe' needs a grid group of dimension >= 2, got {group.descriptor()}")
        full01 = full_shift(group, (0, 1))
        return BergerWitness(
            name, full01, disjoint_union(full01, full01), prop,
            citation="X_plus is the full shift on {0, 1}, which has the property; X_minus is the full "
            "shift on {0, 1} disjoint-union the full shift on {2, 3}, which factors onto the "
            "two-point system of zero entropy, as does every extension of it.",
            morphism="inclusion of X_plus as the first copy",
        )
    if x is None:
        raise InputError(f"witness {name!r} needs a parameter presentation X")
    if x.group != group:
        raise InputError(f"parameter X lives on {x.group.descriptor()}, expected {group.descriptor()}")
    return BergerWitness(
        name, x, disjoint_union(x, full_shift(group, (0, 1))), prop,
        citation="X_plus is X itself; X_minus is X disjoint-union the full shift on {0, 1}, which has "
        "positive entropy, so no SFT extending X_minus is conjugate to, a factor of, or embeds "
        "into X (entropy comparison; needs an amenable group, which is not checked).",
        morphism="inclusion of X as the first copy",
        amenable_only=True,
    )
