"""Action ideas: six body-part loci, three alleles each, 729-point space."""
from __future__ import annotations

import itertools
from enum import IntEnum


class BodyPart(IntEnum):
    """The six loci of an idea, in the fixed order used everywhere."""

    LEFT_ARM = 0
    RIGHT_ARM = 1
    LEFT_LEG = 2
    RIGHT_LEG = 3
    HEAD = 4
    TAIL = 5


# Counterpart limb for each paired locus; head and tail are unpaired.
LIMB_PAIRS: tuple[tuple[BodyPart, BodyPart], ...] = (
    (BodyPart.LEFT_ARM, BodyPart.RIGHT_ARM),
    (BodyPart.LEFT_LEG, BodyPart.RIGHT_LEG),
)

COUNTERPART: dict[BodyPart, BodyPart] = {
    BodyPart.LEFT_ARM: BodyPart.RIGHT_ARM,
    BodyPart.RIGHT_ARM: BodyPart.LEFT_ARM,
    BodyPart.LEFT_LEG: BodyPart.RIGHT_LEG,
    BodyPart.RIGHT_LEG: BodyPart.LEFT_LEG,
}

N_LOCI = 6


class Allele(IntEnum):
    """Discrete movement value of one locus. Order matches enumeration order."""

    STATIONARY = 0
    UP = 1
    DOWN = 2


# Signed fraction of maximal rotation from rest, per allele.
ALLELE_VALUES: dict[Allele, float] = {
    Allele.STATIONARY: 0.0,
    Allele.UP: 0.5,
    Allele.DOWN: -0.5,
}

ALLELE_LETTERS = {Allele.STATIONARY: "S", Allele.UP: "U", Allele.DOWN: "D"}
LETTER_ALLELES = {v: k for k, v in ALLELE_LETTERS.items()}

# An idea: one float per locus, each in [-0.5, +0.5], indexed by BodyPart.
IdeaPattern = tuple[float, ...]
# The quantized three-allele view of an idea used by mutation.
AlleleVector = tuple[Allele, ...]

REST_IDEA: IdeaPattern = (0.0,) * N_LOCI
REST_ALLELES: AlleleVector = (Allele.STATIONARY,) * N_LOCI

# Quantization thresholds: midpoints between the canonical allele values.
QUANTIZE_THRESHOLD = 0.25


def allele_value(allele: Allele) -> float:
    """Canonical signed movement magnitude of an allele."""
    return ALLELE_VALUES[allele]


def quantize(value: float) -> Allele:
    """Map a signed movement magnitude onto the nearest allele.

    Raises ValueError outside [-0.5, +0.5].
    """
    if not -0.5 <= value <= 0.5:
        raise ValueError(f"locus value {value!r} outside [-0.5, 0.5]")
    if value > QUANTIZE_THRESHOLD:
        return Allele.UP
    if value < -QUANTIZE_THRESHOLD:
        return Allele.DOWN
    return Allele.STATIONARY


def quantize_idea(idea: IdeaPattern) -> AlleleVector:
    """Per-locus quantization of an idea."""
    return tuple(quantize(v) for v in idea)


def idea_from_alleles(alleles: AlleleVector) -> IdeaPattern:
    """Idea with every locus at its allele's canonical value."""
    return tuple(ALLELE_VALUES[a] for a in alleles)


def enumerate_idea_space() -> list[AlleleVector]:
    """All 3^6 = 729 allele vectors, lexicographic by locus (S < U < D)."""
    order = (Allele.STATIONARY, Allele.UP, Allele.DOWN)
    return [vec for vec in itertools.product(order, repeat=N_LOCI)]


def alleles_to_str(alleles: AlleleVector) -> str:
    """Compact S/U/D string in locus order, e.g. 'UDUDSU'."""
    return "".join(ALLELE_LETTERS[a] for a in alleles)


def alleles_from_str(text: str) -> AlleleVector:
    """Inverse of alleles_to_str."""
    if len(text) != N_LOCI:
        raise ValueError(f"allele string must have {N_LOCI} letters: {text!r}")
    try:
        return tuple(LETTER_ALLELES[c] for c in text)
    except KeyError as exc:
        raise ValueError(f"bad allele letter in {text!r}") from exc
