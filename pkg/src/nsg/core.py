"""Construction and membership queries for numerical semigroups.

A semigroup is stored as a boolean membership array over ``[0, c + m)``
where ``c`` is the conductor and ``m`` the multiplicity.  Everything else
(minimal generators, gaps, Apery sets, ...) is derived from that array.
"""
from __future__ import annotations

import hashlib
import math
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "NumericalSemigroupError",
    "EmptySpec",
    "NonCoprime",
    "ZeroGenerator",
    "SpecParseError",
    "TrivialSemigroup",
    "GeneratorSpec",
    "NumericalSemigroup",
    "parse_spec",
    "build",
    "contains",
    "gaps",
    "small_elements",
    "next_element",
    "equals",
]


class NumericalSemigroupError(ValueError):
    """Base class for all errors raised by this package."""


class EmptySpec(NumericalSemigroupError):
    pass


class NonCoprime(NumericalSemigroupError):
    pass


class ZeroGenerator(NumericalSemigroupError):
    pass


class SpecParseError(NumericalSemigroupError):
    pass


class TrivialSemigroup(NumericalSemigroupError):
    """Raised by operations that are undefined on the full monoid N."""


@dataclass(frozen=True)
class GeneratorSpec:
    """Generators plus an optional threshold ``r``.

    With a threshold the spec denotes the smallest semigroup containing the
    generators and every integer ``>= r``.
    """

    generators: tuple[int, ...] = ()
    threshold: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(int(g) for g in self.generators))
        if self.threshold is not None:
            object.__setattr__(self, "threshold", int(self.threshold))

    def validate(self) -> None:
        if any(g < 0 for g in self.generators):
            raise NumericalSemigroupError(f"negative generator in {self.generators}")
        if any(g == 0 for g in self.generators):
            raise ZeroGenerator("generators must be positive")
        if self.threshold is not None and self.threshold < 1:
            raise NumericalSemigroupError("threshold must be a positive integer")
        if not self.generators and self.threshold is None:
            raise EmptySpec("need at least one generator or a threshold")
        if self.threshold is None and math.gcd(*self.generators) != 1:
            raise NonCoprime(
                f"gcd{self.generators} = {math.gcd(*self.generators)}; "
                "the complement would be infinite"
            )

    def __str__(self) -> str:
        text = ",".join(str(g) for g in self.generators)
        if self.threshold is not None:
            text += f";{self.threshold}"
        return text


_SPEC_RE = re.compile(r"^\s*([0-9,\s]*?)\s*(?:;\s*([0-9]+)\s*)?$")


def parse_spec(text: str) -> GeneratorSpec:
    """Parse ``g1,g2,...,gk[;r]``, e.g. ``"30,42,51;290"``."""
    match = _SPEC_RE.match(text)
    if match is None:
        raise SpecParseError(f"cannot parse semigroup spec {text!r}")
    body, threshold = match.groups()
    parts = [p.strip() for p in body.split(",")] if body.strip() else []
    if any(p == "" for p in parts):
        raise SpecParseError(f"empty generator in {text!r}")
    spec = GeneratorSpec(tuple(int(p) for p in parts), int(threshold) if threshold else None)
    spec.validate()
    return spec


def _sieve(generators: Sequence[int], size: int) -> np.ndarray:
    """Membership over [0, size) of the monoid spanned by ``generators``."""
    mem = np.zeros(size, dtype=bool)
    mem[0] = True
    for g in sorted(set(generators)):
        if g >= size or mem[g]:
            continue
        # block i only reads block i-1, which is already final for g
        for start in range(g, size, g):
            stop = min(start + g, size)
            mem[start:stop] |= mem[start - g : stop - g]
    return mem


def _conductor(mem: np.ndarray) -> int:
    missing = np.flatnonzero(~mem)
    return int(missing[-1]) + 1 if missing.size else 0


def _first_run(mem: np.ndarray, length: int) -> Optional[int]:
    """Start of the first run of ``length`` consecutive True values."""
    if length <= 0:
        return 0
    run = np.convolve(mem.astype(np.int32), np.ones(length, dtype=np.int32), mode="valid")
    hits = np.flatnonzero(run == length)
    return int(hits[0]) if hits.size else None


class NumericalSemigroup:
    """An immutable numerical semigroup.

    Equality and hashing only look at the set of elements, never at the
    presentation it was built from.
    """

    __slots__ = ("_mem", "conductor", "multiplicity", "min_generators", "spec", "_apery_m")

    def __init__(self, membership: np.ndarray, spec: Optional[GeneratorSpec] = None):
        mem = np.array(membership, dtype=bool)
        c = _conductor(mem)
        if c == 0:
            m = 1
        else:
            below = np.flatnonzero(mem[1:c])
            m = int(below[0]) + 1 if below.size else c
        size = c + m
        if mem.size < size:
            mem = np.concatenate([mem, np.ones(size - mem.size, dtype=bool)])
        mem = mem[:size].copy()
        mem.setflags(write=False)
        self._mem = mem
        self.conductor = c
        self.multiplicity = m
        self.spec = spec
        self._apery_m = self._apery_by_residue(m)
        self.min_generators = self._minimal_generators()

    # -- construction helpers -------------------------------------------------

    def _extended(self, size: int) -> np.ndarray:
        if size <= self._mem.size:
            return self._mem[:size]
        return np.concatenate([self._mem, np.ones(size - self._mem.size, dtype=bool)])

    def _apery_by_residue(self, s: int) -> tuple[int, ...]:
        c = self.conductor
        rows = -(-(c + s) // s)
        grid = self._extended(rows * s).reshape(rows, s)
        first = grid.argmax(axis=0)
        return tuple(int(first[i]) * s + i for i in range(s))

    def _minimal_generators(self) -> tuple[int, ...]:
        m = self.multiplicity
        if m == 1:
            return (1,)
        mem = self._mem
        c = self.conductor
        ap = np.array(sorted(self._apery_m[1:]), dtype=np.int64)
        gens = [m]
        for i, w in enumerate(ap):
            diffs = w - ap[:i]
            decomposable = (diffs >= c) | mem[np.minimum(diffs, c)]
            if not decomposable.any():
                gens.append(int(w))
        return tuple(sorted(gens))

    # -- queries ---------------------------------------------------------------

    @property
    def membership(self) -> np.ndarray:
        """Read-only boolean array over ``[0, c + m)``."""
        return self._mem

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def embedding_dimension(self) -> int:
        return len(self.min_generators)

    @property
    def delta(self) -> int:
        return int(np.count_nonzero(self._mem[: self.conductor]))

    @property
    def is_trivial(self) -> bool:
        return self.conductor == 0

    def __contains__(self, x) -> bool:
        x = int(x)
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return bool(self._mem[x])

    def gaps(self) -> tuple[int, ...]:
        return tuple(int(g) for g in np.flatnonzero(~self._mem[: self.conductor]))

    def small_elements(self) -> tuple[int, ...]:
        return tuple(int(s) for s in np.flatnonzero(self._mem[: self.conductor]))

    def next_element(self, s: int) -> int:
        s = int(s)
        if s + 1 >= self.conductor:
            return max(s + 1, 0)
        start = max(s + 1, 0)
        after = np.flatnonzero(self._mem[start : self.conductor + 1])
        return start + int(after[0]) if after.size else self.conductor

    def elements_upto(self, bound: int) -> np.ndarray:
        """Sorted elements of the semigroup in ``[0, bound]``."""
        return np.flatnonzero(self._extended(bound + 1))

    def digest(self) -> str:
        """Short canonical key for the element set (used for sweep dedup)."""
        h = hashlib.blake2b(digest_size=16)
        h.update(self.conductor.to_bytes(8, "little"))
        h.update(np.packbits(self._mem[: self.conductor]).tobytes())
        return h.hexdigest()

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.conductor == other.conductor and np.array_equal(
            self._mem[: self.conductor], other._mem[: other.conductor]
        )

    def __hash__(self) -> int:
        return hash((self.conductor, self._mem[: self.conductor].tobytes()))

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.min_generators)
        return f"NumericalSemigroup(<{gens}>, c={self.conductor})"


def build(spec, threshold: Optional[int] = None) -> NumericalSemigroup:
    """Build the semigroup described by ``spec``.

    ``spec`` may be a :class:`GeneratorSpec`, a string in the
    ``g1,...,gk[;r]`` grammar, or an iterable of generators (with the
    threshold passed separately).
    """
    if isinstance(spec, str):
        spec = parse_spec(spec)
    elif not isinstance(spec, GeneratorSpec):
        spec = GeneratorSpec(tuple(spec), threshold)
    spec.validate()

    gens = sorted(set(spec.generators))
    r = spec.threshold
    if r is not None:
        mem = _sieve([g for g in gens if g < r], r)
        return NumericalSemigroup(mem, spec)

    m = gens[0]
    size = 4 * gens[-1] + m
    while True:
        mem = _sieve(gens, size)
        start = _first_run(mem, m)
        if start is not None:
            return NumericalSemigroup(mem[: start + m], spec)
        size *= 2


def contains(S: NumericalSemigroup, x: int) -> bool:
    return x in S


def gaps(S: NumericalSemigroup) -> tuple[int, ...]:
    return S.gaps()


def small_elements(S: NumericalSemigroup) -> tuple[int, ...]:
    return S.small_elements()


def next_element(S: NumericalSemigroup, s: int) -> int:
    return S.next_element(s)


def equals(S1: NumericalSemigroup, S2: NumericalSemigroup) -> bool:
    return S1 == S2


def from_elements(elements: Iterable[int], conductor: int) -> NumericalSemigroup:
    """Semigroup with the given small elements and conductor (no closure check)."""
    mem = np.zeros(conductor + 1, dtype=bool)
    mem[conductor] = True
    for x in elements:
        if 0 <= x < conductor:
            mem[x] = True
    mem[0] = True
    return NumericalSemigroup(mem)
