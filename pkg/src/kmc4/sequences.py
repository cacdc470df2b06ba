"""Degree sequences: normalization, graphicality, exhaustive enumeration.

A sequence is graphical when some simple graph realizes it; the test is
the Erdos-Gallai system of inequalities. Enumeration walks bounded
nonincreasing integer sequences grouped by degree sum, which lets the
threshold sweeps upstream terminate as early as possible.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import InputError, LimitError

# Enumeration guard: realization search downstream is superexponential in n.
DEFAULT_LENGTH_LIMIT = 12


class DegreeSequence(tuple):
    """Nonincreasing tuple of vertex degrees.

    Construction sorts the values descending, so two sequences with the
    same multiset of degrees compare equal. Everything else is plain
    tuple behaviour.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int]):
        terms = sorted(values, reverse=True)
        if not terms:
            raise InputError("degree sequence needs at least one term")
        for t in terms:
            if not isinstance(t, int):
                raise InputError(f"degree {t!r} is not an integer")
            if t < 0:
                raise InputError(f"negative degree {t}")
        return tuple.__new__(cls, terms)

    @property
    def n(self) -> int:
        return len(self)

    @classmethod
    def from_text(cls, text: str) -> "DegreeSequence":
        """Parse comma form ``5,3,3,3,3,3`` or power form ``5^1,3^5``.

        The two notations may be mixed term by term.
        """
        values: list[int] = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                raise InputError(f"empty term in {text!r}")
            base, sep, count = part.partition("^")
            try:
                value = int(base)
                reps = int(count) if sep else 1
            except ValueError:
                raise InputError(f"bad term {part!r}") from None
            if reps < 1:
                raise InputError(f"bad multiplicity in {part!r}")
            values.extend([value] * reps)
        return cls(values)

    def to_text(self, power: bool = False) -> str:
        """Render as comma-separated terms, collapsing runs when ``power``."""
        if not power:
            return ",".join(str(t) for t in self)
        parts = []
        i = 0
        while i < len(self):
            j = i
            while j < len(self) and self[j] == self[i]:
                j += 1
            parts.append(f"{self[i]}^{j - i}" if j - i > 1 else str(self[i]))
            i = j
        return ",".join(parts)


def make_sequence(values: Iterable[int]) -> DegreeSequence:
    """Build a normalized degree sequence from arbitrary integer order."""
    return DegreeSequence(values)


def degree_sum(seq: Iterable[int]) -> int:
    """Sum of the terms (twice the edge count of any realization)."""
    return sum(seq)


def is_graphical(seq: Iterable[int]) -> bool:
    """Erdos-Gallai test: does some simple graph realize the sequence?"""
    d = sorted(seq, reverse=True)
    n = len(d)
    if n == 0:
        raise InputError("degree sequence needs at least one term")
    if d[-1] < 0 or d[0] > n - 1:
        return False
    if sum(d) % 2:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        bound = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if prefix > bound:
            return False
    return True


def _bounded_nonincreasing(slots: int, total: int, bound: int) -> Iterator[tuple[int, ...]]:
    """Nonincreasing tuples of length ``slots`` with parts <= bound summing
    to ``total``, in descending lexicographic order."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    # Largest part v must leave a remainder spreadable over slots-1 parts <= v.
    lo = -(-total // slots)  # ceil
    for v in range(min(bound, total), lo - 1, -1):
        for rest in _bounded_nonincreasing(slots - 1, total - v, v):
            yield (v,) + rest


def graphical_sequences_with_sum(n: int, total: int,
                                 limit: int = DEFAULT_LENGTH_LIMIT) -> Iterator[DegreeSequence]:
    """All graphical n-term sequences with the exact degree sum given,
    descending lexicographically. Odd sums yield nothing."""
    if n < 1:
        raise InputError(f"need at least one term, got n={n}")
    if n > limit:
        raise LimitError(f"sequence enumeration limited to {limit} terms (got {n})")
    if total < 0 or total > n * (n - 1):
        raise InputError(f"degree sum {total} out of range for n={n}")
    if total % 2:
        return
    for terms in _bounded_nonincreasing(n, total, n - 1):
        if is_graphical(terms):
            yield DegreeSequence(terms)


def enumerate_graphical_sequences(n: int, min_sum: int = 0,
                                  limit: int = DEFAULT_LENGTH_LIMIT) -> Iterator[DegreeSequence]:
    """Every graphical n-term sequence with degree sum >= min_sum, once each.

    Zero terms are allowed. Order is deterministic: degree sum descending,
    then descending lexicographic within a sum level, so threshold sweeps
    can stop at the first interesting level.
    """
    if n < 1:
        raise InputError(f"need at least one term, got n={n}")
    if n > limit:
        raise LimitError(f"sequence enumeration limited to {limit} terms (got {n})")
    if min_sum < 0 or min_sum > n * (n - 1):
        raise InputError(f"min_sum {min_sum} out of range for n={n}")
    total = n * (n - 1)
    while total >= min_sum:
        yield from graphical_sequences_with_sum(n, total, limit)
        total -= 2
