"""Representability search and exceptional-set sieves.

Two complementary engines:

* ``represent`` / ``represent_diag`` / ``represent_constrained`` answer a
  single query "is n a value?" by an exhaustive scan of the bounded
  coordinate space, so an empty answer is a proof of non-representability.

* ``exceptional_set`` computes E(f) = {n <= N : n is not a value of f}
  for a whole range at once.  It enumerates term values level by level
  with an early cutoff at each level and accumulates the reachable-sum
  bit array; one level is folded word-parallel by OR-ing shifted copies
  of the partial bit array (a Python int used as a bitset).  Work is
  O(values enumerated) plus O(shifts * N/wordsize), far below one search
  per n.  Partitioned runs split the outermost level's values into
  chunks and merge chunk masks by bitwise OR, which is associative and
  commutative, so worker count never changes the result.

Enumeration cutoffs use math.isqrt throughout; no floating point.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import BrokenExecutor, ProcessPoolExecutor
from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Optional, Sequence, Union

from .core import (
    CongruenceClass,
    ConstrainedForm,
    DiagonalForm,
    PolySum,
    ResourceLimitError,
    Witness,
    lift,
    reduce,
)

Form = Union[PolySum, DiagonalForm, ConstrainedForm]

# 2**31 sieve bits = 256 MiB; overridable per call.
DEFAULT_MAX_BITS = 1 << 31

_UNCONSTRAINED = CongruenceClass(1, 0)


@dataclass(frozen=True)
class SieveReport:
    """Exceptional set of one form up to a limit."""

    form: str
    limit: int
    exceptions: tuple[int, ...]
    elapsed_ms: int

    def is_empty(self) -> bool:
        return not self.exceptions


@dataclass(frozen=True)
class ValueMask:
    """Attainable-value set of a form on [offset, limit], byte-packed for
    O(1) membership tests."""

    offset: int
    limit: int
    raw: bytes

    def __contains__(self, v: int) -> bool:
        k = v - self.offset
        if k < 0 or v > self.limit:
            return False
        return (self.raw[k >> 3] >> (k & 7)) & 1 == 1


def class_members(modulus: int, residue: int, bound: int) -> Iterator[int]:
    """Members w of the class residue (mod modulus) with |w| <= bound.

    Order: 0 first when it belongs to the class, then positive members
    ascending interleaved with negative members descending.
    """
    if residue == 0:
        if bound >= 0:
            yield 0
        w = modulus
        while w <= bound:
            yield w
            yield -w
            w += modulus
        return
    pos = residue
    neg = residue - modulus
    while pos <= bound or -neg <= bound:
        if pos <= bound:
            yield pos
        if -neg <= bound:
            yield neg
        pos += modulus
        neg -= modulus


def _last_coordinate(c: int, rem: int, cl: CongruenceClass) -> Optional[int]:
    # First w in coordinate order (0, +w, -w) with c*w^2 == rem and w in cl.
    if rem < 0 or rem % c:
        return None
    q = rem // c
    r = isqrt(q)
    if r * r != q:
        return None
    if r == 0:
        return 0 if cl.residue == 0 else None
    if cl.contains(r):
        return r
    if cl.contains(-r):
        return -r
    return None


def _scan(cf: ConstrainedForm, m: int) -> Optional[tuple[int, int, int]]:
    # Lexicographic scan in (w3, w2, w1): outer coordinates run through
    # class_members order, the innermost is solved by exact square root.
    c1, c2, c3 = cf.form.coeffs
    k1, k2, k3 = cf.classes
    for w3 in class_members(k3.modulus, k3.residue, isqrt(m // c3)):
        rem3 = m - c3 * w3 * w3
        for w2 in class_members(k2.modulus, k2.residue, isqrt(rem3 // c2)):
            w1 = _last_coordinate(c1, rem3 - c2 * w2 * w2, k1)
            if w1 is not None:
                return (w1, w2, w3)
    return None


def represent(p: PolySum, n: int) -> Optional[Witness]:
    """First witness of n under p in the deterministic scan order, or None.

    The scan covers every constrained triple with sum at most 4*L*n + C,
    which is exhaustive, so None is a proof that n is not represented.
    """
    if n < 0:
        return None
    rd = reduce(p)
    triple = _scan(rd.constrained, 4 * rd.L * n + rd.C)
    return None if triple is None else lift(rd, triple)


def represent_diag(f: DiagonalForm, m: int) -> Optional[tuple[int, int, int]]:
    """First unconstrained triple with sum of weighted squares m, or None."""
    if m < 0:
        return None
    return _scan(ConstrainedForm(f, (_UNCONSTRAINED,) * 3), m)


def represent_constrained(cf: ConstrainedForm, m: int) -> Optional[tuple[int, int, int]]:
    """Like represent_diag with each coordinate held to its class."""
    if m < 0:
        return None
    return _scan(cf, m)


def _scan_all(cf: ConstrainedForm, m: int):
    c1, c2, c3 = cf.form.coeffs
    k1, k2, k3 = cf.classes
    for w3 in class_members(k3.modulus, k3.residue, isqrt(m // c3)):
        rem3 = m - c3 * w3 * w3
        for w2 in class_members(k2.modulus, k2.residue, isqrt(rem3 // c2)):
            rem = rem3 - c2 * w2 * w2
            if rem % c1:
                continue
            q = rem // c1
            r = isqrt(q)
            if r * r != q:
                continue
            if r == 0:
                if k1.residue == 0:
                    yield (0, w2, w3)
                continue
            if k1.contains(r):
                yield (r, w2, w3)
            if k1.contains(-r):
                yield (-r, w2, w3)


def represent_all(p: PolySum, n: int) -> list[Witness]:
    """Every witness of n under p, in scan order."""
    if n < 0:
        return []
    rd = reduce(p)
    return [lift(rd, t) for t in _scan_all(rd.constrained, 4 * rd.L * n + rd.C)]


def represent_diag_all(f: DiagonalForm, m: int) -> list[tuple[int, int, int]]:
    """Every triple representing m under f, in scan order."""
    if m < 0:
        return []
    return list(_scan_all(ConstrainedForm(f, (_UNCONSTRAINED,) * 3), m))


def count_representations(f: DiagonalForm, m: int) -> int:
    """Number of integer triples (signs and order distinct) representing m."""
    if m < 0:
        return 0
    c1, c2, c3 = f.coeffs
    total = 0
    for w3 in range(isqrt(m // c3) + 1):
        rem3 = m - c3 * w3 * w3
        m3 = 1 if w3 == 0 else 2
        for w2 in range(isqrt(rem3 // c2) + 1):
            rem = rem3 - c2 * w2 * w2
            if rem % c1:
                continue
            q = rem // c1
            r = isqrt(q)
            if r * r != q:
                continue
            m2 = 1 if w2 == 0 else 2
            total += m3 * m2 * (1 if r == 0 else 2)
    return total


# --- value slots -----------------------------------------------------------
#
# A "slot" is the value multiset of one variable: {term(x) : x in Z} for a
# PolySum term, {c*w^2 : w in Z} for a diagonal coefficient, or the same
# restricted to a congruence class.  Slots carry their minimum so sums can
# be offset into a nonnegative bit range (a parsed term with b > a can take
# negative values).


def _poly_slot(a: int, b: int, lo: int, cap: int) -> list[int]:
    if cap < lo:
        return []
    s = isqrt(b * b + 4 * a * max(cap, 0))
    x_lo = (-b - s) // (2 * a) - 1
    x_hi = (-b + s) // (2 * a) + 1
    out = []
    for x in range(x_lo, x_hi + 1):
        v = x * (a * x + b)
        if lo <= v <= cap:
            out.append(v)
    return out


def _square_slot(c: int, cap: int, cl: CongruenceClass = _UNCONSTRAINED) -> list[int]:
    if cap < 0:
        return []
    bound = isqrt(cap // c)
    if cl.modulus == 1:
        return [c * w * w for w in range(bound + 1)]
    # |w| from either the class or its negation; duplicates are harmless
    residues = {cl.residue, (-cl.residue) % cl.modulus}
    out = []
    for r in residues:
        w = r
        while w <= bound:
            out.append(c * w * w)
            w += cl.modulus
    return out


def _slots(form: Form, limit: int) -> list[tuple[int, list[int]]]:
    """Per-variable (min value, values <= cap) with caps shrunk by the
    minima of the other slots."""
    if isinstance(form, PolySum):
        mins = [t.min_value() for t in form.terms]
        total_min = sum(mins)
        return [
            (mins[i], _poly_slot(t.a, t.b, mins[i], limit - (total_min - mins[i])))
            for i, t in enumerate(form.terms)
        ]
    if isinstance(form, DiagonalForm):
        return [(0, _square_slot(c, limit)) for c in form.coeffs]
    if isinstance(form, ConstrainedForm):
        mins = [c * cl.min_abs() ** 2 for c, cl in zip(form.form.coeffs, form.classes)]
        total_min = sum(mins)
        return [
            (mins[i], _square_slot(c, limit - (total_min - mins[i]), cl))
            for i, (c, cl) in enumerate(zip(form.form.coeffs, form.classes))
        ]
    raise TypeError(f"cannot sieve {type(form).__name__}")


def _or_shifts(base: int, shifts: Sequence[int], keep: int) -> int:
    acc = 0
    for s in shifts:
        acc |= base << s
    return acc & keep


def _chunks(seq: list[int], k: int) -> list[list[int]]:
    size = (len(seq) + k - 1) // k
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def value_mask(form: Form, limit: int, workers: int = 1, max_bits: int = DEFAULT_MAX_BITS) -> tuple[int, int]:
    """Bitset of attainable values of form in [offset, limit].

    Returns (mask, offset): value v is attained iff bit (v - offset) of
    mask is set.  offset = sum of per-slot minima (0 for square slots,
    possibly negative for polynomial terms).
    """
    slots = sorted(_slots(form, limit), key=lambda s: len(s[1]), reverse=True)
    offset = sum(m for m, _ in slots)
    width = limit - offset + 1
    if width > max_bits:
        raise ResourceLimitError(f"sieve needs {width} bits, cap is {max_bits}")
    keep = (1 << width) - 1

    m1, v1 = slots[0]
    mask = 0
    for v in v1:
        mask |= 1 << (v - m1)
    for level, (ml, vl) in enumerate(slots[1:], start=1):
        shifts = [v - ml for v in vl]
        if level == len(slots) - 1 and workers > 1 and len(shifts) >= 2 * workers:
            parts = _chunks(shifts, workers)
            try:
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    results = list(pool.map(_or_shifts, [mask] * len(parts), parts, [keep] * len(parts)))
            except (OSError, BrokenExecutor):
                # environments without working process pools fall back to the
                # same chunked computation in-process; the merge is identical
                results = [_or_shifts(mask, part, keep) for part in parts]
            acc = 0
            for r in results:
                acc |= r
            mask = acc
        else:
            mask = _or_shifts(mask, shifts, keep)
    return mask, offset


def attainable(form: Form, limit: int, workers: int = 1, max_bits: int = DEFAULT_MAX_BITS) -> ValueMask:
    """The attainable-value set of form up to limit, as a ValueMask."""
    mask, offset = value_mask(form, limit, workers=workers, max_bits=max_bits)
    width = limit - offset + 1
    return ValueMask(offset, limit, mask.to_bytes((width + 7) // 8, "little"))


def _exceptions_from(values: ValueMask) -> tuple[int, ...]:
    return tuple(n for n in range(values.limit + 1) if n not in values)


def default_workers() -> int:
    env = os.environ.get("TERNA_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def exceptional_set(
    form: Form,
    limit: int,
    workers: int = 1,
    max_bits: int = DEFAULT_MAX_BITS,
) -> SieveReport:
    """All n in [0, limit] not attained by form, as a SieveReport.

    Deterministic regardless of workers; raises ResourceLimitError when the
    bit array would exceed max_bits.
    """
    if limit < 0:
        raise ValueError("limit must be >= 0")
    t0 = time.perf_counter()
    exceptions = _exceptions_from(attainable(form, limit, workers=workers, max_bits=max_bits))
    elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return SieveReport(form=str(form), limit=limit, exceptions=exceptions, elapsed_ms=elapsed_ms)


def binary_square_mask(
    c1: int,
    c2: int,
    limit: int,
    cls1: CongruenceClass = _UNCONSTRAINED,
    cls2: CongruenceClass = _UNCONSTRAINED,
) -> int:
    """Bitset of {c1*u^2 + c2*v^2 <= limit} with optional class constraints."""
    keep = (1 << (limit + 1)) - 1
    v1 = _square_slot(c1, limit, cls1)
    v2 = _square_slot(c2, limit, cls2)
    if len(v2) > len(v1):
        v1, v2 = v2, v1
    mask = 0
    for v in v1:
        mask |= 1 << v
    return _or_shifts(mask, v2, keep)
