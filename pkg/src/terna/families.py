"""Symbolic exceptional sets of classical diagonal forms.

An ExceptionalFamily describes a set of nonnegative integers as a union
of scaled arithmetic progressions {s^k * (m*l + r) : k, l >= 0} plus a
finite explicit set.  The three built-in families are the classically
known exceptional sets E(x^2+y^2+z^2), E(x^2+y^2+3z^2) and
E(10x^2+5y^2+2z^2); ``crosscheck`` replays any family against a fresh
sieve of its form and reports every disagreement.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .core import DiagonalForm
from .search import exceptional_set


@dataclass(frozen=True)
class ProgressionPattern:
    """{scale^k * (modulus*l + residue) : k, l >= 0}.

    scale=None disables the scaling factor (k is forced to 0), for
    components like {8k+3} that a surrounding union does not scale.
    """

    scale: int | None
    modulus: int
    residue: int

    def __post_init__(self):
        if self.scale is not None and self.scale < 2:
            raise ValueError("scale base must be >= 2")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("need 0 <= residue < modulus")

    def contains(self, n: int) -> bool:
        # Exact division only: test the residue at every scale level,
        # since s^k multiplies the whole progression.
        if n < 0:
            return False
        while True:
            if n % self.modulus == self.residue:
                return True
            if self.scale is None or n == 0 or n % self.scale:
                return False
            n //= self.scale


@dataclass(frozen=True)
class ExceptionalFamily:
    label: str
    patterns: tuple[ProgressionPattern, ...]
    extra: frozenset[int] = field(default_factory=frozenset)


def member(fam: ExceptionalFamily, n: int) -> bool:
    """True iff n lies in some pattern of fam or in its finite extra set."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n in fam.extra or any(p.contains(n) for p in fam.patterns)


GAUSS_LEGENDRE = ExceptionalFamily(
    label="x^2+y^2+z^2",
    patterns=(ProgressionPattern(4, 8, 7),),
)

DICKSON_1_1_3 = ExceptionalFamily(
    label="x^2+y^2+3z^2",
    patterns=(ProgressionPattern(9, 9, 6),),
)

DICKSON_10_5_2 = ExceptionalFamily(
    label="10x^2+5y^2+2z^2",
    patterns=(
        ProgressionPattern(None, 8, 3),
        ProgressionPattern(25, 5, 1),
        ProgressionPattern(25, 5, 4),
    ),
)

#: family -> the diagonal form whose exceptional set it describes
FAMILY_FORMS: dict[str, tuple[ExceptionalFamily, DiagonalForm]] = {
    "gauss": (GAUSS_LEGENDRE, DiagonalForm((1, 1, 1))),
    "dickson-113": (DICKSON_1_1_3, DiagonalForm((1, 1, 3))),
    "dickson-1052": (DICKSON_10_5_2, DiagonalForm((10, 5, 2))),
}


def builtin_families() -> list[ExceptionalFamily]:
    """The three built-in families, in a fixed order."""
    return [GAUSS_LEGENDRE, DICKSON_1_1_3, DICKSON_10_5_2]


@dataclass(frozen=True)
class CrosscheckReport:
    family: str
    form: str
    limit: int
    discrepancies: tuple[int, ...]
    elapsed_ms: int

    def agrees(self) -> bool:
        return not self.discrepancies


def crosscheck(fam: ExceptionalFamily, f: DiagonalForm, limit: int, workers: int = 1) -> CrosscheckReport:
    """All n <= limit where membership in fam disagrees with the sieve of f."""
    t0 = time.perf_counter()
    sieved = frozenset(exceptional_set(f, limit, workers=workers).exceptions)
    bad = tuple(n for n in range(limit + 1) if member(fam, n) != (n in sieved))
    elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return CrosscheckReport(fam.label, str(f), limit, bad, elapsed_ms)
