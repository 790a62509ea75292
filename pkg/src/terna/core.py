"""Domain model for sums of three quadratic terms x(ax+b).

A ``PolySum`` is a polynomial x(a1*x+b1) + y(a2*y+b2) + z(a3*z+b3) with
positive quadratic coefficients and nonnegative linear coefficients.
Completing the square in each variable,

    x(ax+b) = ((2ax+b)**2 - b**2) / (4a),

turns the question "is n a value of the PolySum over the integers" into
"is 4*L*n + C a value of a diagonal form with congruence-constrained
variables", where L = lcm(a1,a2,a3) and C = sum (L/ai)*bi**2.  ``reduce``
performs that rewrite, ``embed``/``lift`` move witnesses back and forth.

All arithmetic is plain Python ``int``: exact at every magnitude, so no
overflow bound applies (values such as 4*L*n + C stay exact even for
n far beyond 2**40).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class TernaError(Exception):
    """Base class for errors raised by this package."""


class PreconditionError(TernaError):
    """An operation was called outside its stated domain."""


class CongruenceViolationError(TernaError):
    """A coordinate does not lie in its required congruence class."""


class NoValidSignError(TernaError):
    """Neither w nor -w lies in the requested congruence class."""


class NotRepresentableError(TernaError):
    """The input is not a value of the required form at all."""


class ConstructionError(TernaError):
    """A constructive pipeline hit a step its invariants rule out.

    This should never trigger; an occurrence is a falsification report,
    so the failing step is kept on the exception.
    """

    def __init__(self, step: str, message: str = ""):
        self.step = step
        super().__init__(f"construction failed at step '{step}'" + (f": {message}" if message else ""))


class ResourceLimitError(TernaError):
    """A sieve request exceeds the configured memory cap."""


@dataclass(frozen=True)
class Term:
    """One summand x(ax+b) with a >= 1, b >= 0."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"quadratic coefficient must be >= 1, got {self.a}")
        if self.b < 0:
            raise ValueError(f"linear coefficient must be >= 0, got {self.b}")

    def value(self, x: int) -> int:
        return x * (self.a * x + self.b)

    def min_value(self) -> int:
        # vertex of a*x^2 + b*x is at -b/(2a); check the two nearest integers
        q = -(self.b // (2 * self.a))
        return min(self.value(q), self.value(q - 1), self.value(q + 1))

    def text(self, var: str) -> str:
        if self.b == 0 and self.a == 1:
            return f"{var}^2"
        if self.b == 0:
            return f"{self.a}{var}^2"
        inner = var if self.a == 1 else f"{self.a}{var}"
        return f"{var}({inner}+{self.b})"


@dataclass(frozen=True)
class PolySum:
    """Exactly three Terms, evaluated at an integer triple."""

    terms: tuple[Term, Term, Term]

    def __post_init__(self):
        if len(self.terms) != 3:
            raise ValueError("a PolySum has exactly three terms")

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> "PolySum":
        return cls(tuple(Term(a, b) for a, b in pairs))

    def __str__(self) -> str:
        return "+".join(t.text(v) for t, v in zip(self.terms, "xyz"))


@dataclass(frozen=True)
class DiagonalForm:
    """alpha*x^2 + beta*y^2 + gamma*z^2 with positive integer coefficients."""

    coeffs: tuple[int, int, int]

    def __post_init__(self):
        if len(self.coeffs) != 3 or any(c < 1 for c in self.coeffs):
            raise ValueError(f"need three positive coefficients, got {self.coeffs}")

    def __str__(self) -> str:
        return "+".join(f"{c}{v}^2" if c > 1 else f"{v}^2" for c, v in zip(self.coeffs, "xyz"))


@dataclass(frozen=True)
class CongruenceClass:
    """The residue class {w : w = residue (mod modulus)}."""

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(f"need 0 <= residue < modulus, got {self.residue} mod {self.modulus}")

    def contains(self, w: int) -> bool:
        return w % self.modulus == self.residue

    def min_abs(self) -> int:
        """Smallest |w| over members of the class."""
        return min(self.residue, self.modulus - self.residue) if self.residue else 0


@dataclass(frozen=True)
class ConstrainedForm:
    """A diagonal form whose i-th variable is restricted to classes[i]."""

    form: DiagonalForm
    classes: tuple[CongruenceClass, CongruenceClass, CongruenceClass]

    def __post_init__(self):
        if len(self.classes) != 3:
            raise ValueError("need one congruence class per variable")

    def __str__(self) -> str:
        parts = []
        for c, cl in zip(self.form.coeffs, self.classes):
            parts.append(f"{c}({cl.modulus}k+{cl.residue})^2")
        return "+".join(parts)


@dataclass(frozen=True)
class Witness:
    """An integer triple certifying one representation."""

    x: int
    y: int
    z: int

    def __iter__(self):
        return iter((self.x, self.y, self.z))


@dataclass(frozen=True)
class SquareRep:
    """A decomposition total = sum of coeff*value^2, validated on construction."""

    parts: tuple[tuple[int, int], ...]
    total: int

    def __post_init__(self):
        if any(c < 1 for c, _ in self.parts):
            raise ValueError("coefficients must be positive")
        s = sum(c * v * v for c, v in self.parts)
        if s != self.total:
            raise ValueError(f"parts sum to {s}, not {self.total}")

    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.parts)


@dataclass(frozen=True)
class ReductionData:
    """Output of completing the square on a PolySum.

    L is lcm of the quadratic coefficients, C = sum (L/ai)*bi^2, and the
    constrained form has coefficients L/ai with variable classes
    (bi mod 2ai).  For every integer triple,
    sum (L/ai)*(2*ai*xi+bi)^2 = 4*L*evaluate(source, triple) + C.
    """

    L: int
    C: int
    constrained: ConstrainedForm
    source: PolySum

    def __post_init__(self):
        for i, t in enumerate(self.source.terms):
            if self.constrained.form.coeffs[i] != self.L // t.a:
                raise ValueError("coefficient does not match L/a")
            cl = self.constrained.classes[i]
            if cl.modulus != 2 * t.a or cl.residue != t.b % (2 * t.a):
                raise ValueError("class does not match (b mod 2a)")


def evaluate(p: PolySum, w) -> int:
    """Value of p at the integer triple w (exact)."""
    x, y, z = w
    t1, t2, t3 = p.terms
    return t1.value(x) + t2.value(y) + t3.value(z)


def reduce(p: PolySum) -> ReductionData:
    """Complete the square in each variable of p."""
    a1, a2, a3 = (t.a for t in p.terms)
    L = a1 * a2 // gcd(a1, a2)
    L = L * a3 // gcd(L, a3)
    coeffs = tuple(L // t.a for t in p.terms)
    C = sum((L // t.a) * t.b * t.b for t in p.terms)
    classes = tuple(CongruenceClass(2 * t.a, t.b % (2 * t.a)) for t in p.terms)
    return ReductionData(L, C, ConstrainedForm(DiagonalForm(coeffs), classes), p)


def embed(rd: ReductionData, w) -> tuple[int, int, int]:
    """Forward substitution: witness (x,y,z) -> constrained triple (2*ai*xi + bi)."""
    return tuple(2 * t.a * xi + t.b for t, xi in zip(rd.source.terms, w))


def lift(rd: ReductionData, triple) -> Witness:
    """Invert the substitution: constrained triple -> witness.

    Raises CongruenceViolationError unless wi = bi (mod 2ai) for every i.
    """
    out = []
    for t, wi in zip(rd.source.terms, triple):
        m = 2 * t.a
        if wi % m != t.b % m:
            raise CongruenceViolationError(f"{wi} is not {t.b % m} (mod {m})")
        out.append((wi - t.b) // m)
    return Witness(*out)


def verify(p: PolySum, n: int, w) -> bool:
    """True iff p takes the value n at w."""
    return evaluate(p, w) == n


def normalize_sign(w: int, m: int, r: int) -> int:
    """Return s*w (s = +1 preferred, else -1) with s*w = r (mod m).

    Raises NoValidSignError when neither sign lands in the class.
    """
    if w % m == r % m:
        return w
    if (-w) % m == r % m:
        return -w
    raise NoValidSignError(f"neither {w} nor {-w} is {r} (mod {m})")
