"""Classical invariants, Apery data and the block decompositions of a semigroup."""
from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from typing import Optional

import numpy as np

from .core import NumericalSemigroup, NumericalSemigroupError, TrivialSemigroup

__all__ = [
    "BaseNotInSemigroup",
    "AperySet",
    "PartitionProfile",
    "InvariantReport",
    "CSV_COLUMNS",
    "apery",
    "delta",
    "delta_via_apery",
    "eta",
    "concentration",
    "partition_profile",
    "generator_split",
    "pseudo_frobenius",
    "semigroup_type",
    "is_symmetric",
    "is_pseudo_symmetric",
    "is_highly_dense",
    "report",
]


class BaseNotInSemigroup(NumericalSemigroupError):
    pass


def _require_nontrivial(S: NumericalSemigroup) -> None:
    if S.is_trivial:
        raise TrivialSemigroup("undefined for the full monoid N")


@dataclass(frozen=True)
class AperySet:
    """Apery set of a semigroup with respect to ``base``.

    ``w[i]`` is the least element congruent to ``i`` modulo ``base``.
    ``ordered`` lists the same elements increasingly; ``ordered[j]`` is the
    ``w_j`` of the floor-quotient formulas for delta and eta.
    """

    base: int
    w: tuple[int, ...]

    @property
    def ordered(self) -> tuple[int, ...]:
        return tuple(sorted(self.w))

    def __len__(self) -> int:
        return len(self.w)


def apery(S: NumericalSemigroup, s: Optional[int] = None) -> AperySet:
    if s is None:
        s = S.multiplicity
    s = int(s)
    if s <= 0 or s not in S:
        raise BaseNotInSemigroup(f"{s} is not a nonzero element of {S!r}")
    if s == S.multiplicity:
        return AperySet(s, S._apery_m)
    return AperySet(s, S._apery_by_residue(s))


def delta(S: NumericalSemigroup) -> int:
    """Number of elements below the conductor."""
    return S.delta


def delta_via_apery(S: NumericalSemigroup) -> int:
    _require_nontrivial(S)
    m = S.multiplicity
    w = apery(S, m).w
    rho = S.conductor - ((S.conductor - 1) // m) * m
    return m * (max(w) // m) - sum(x // m for x in w) + rho - m


def eta(S: NumericalSemigroup) -> list[int]:
    """``eta[j-1]`` = number of blocks ``[am, (a+1)m - 1]`` holding exactly j elements."""
    _require_nontrivial(S)
    m = S.multiplicity
    w = apery(S, m).ordered
    return [w[j] // m - w[j - 1] // m for j in range(1, m)]


def concentration(S: NumericalSemigroup) -> int:
    if S.is_trivial:
        return 1
    elements = S.elements_upto(S.conductor)
    elements = elements[elements >= S.multiplicity]
    if elements.size < 2:
        return 1
    return int(np.diff(elements).max())


@dataclass(frozen=True)
class PartitionProfile:
    L: int
    rho: int
    q: int
    nu: int
    eta: tuple[int, ...]
    n_alpha: tuple[int, ...]
    m: int
    conductor: int

    def sammartano_blocks(self) -> list[tuple[int, int]]:
        """Closed blocks ``I_a = [am, (a+1)m - 1]`` for ``a = 0..L``."""
        return [(a * self.m, (a + 1) * self.m - 1) for a in range(self.L + 1)]

    def eliahou_blocks(self) -> list[tuple[int, int]]:
        """Half-open blocks ``J_a = [am - nu, (a+1)m - nu)`` for ``a = 0..q``.

        ``J_0`` starts below zero; only its nonnegative part carries elements.
        The last block is ``[c, c + m)``.
        """
        return [(a * self.m - self.nu, (a + 1) * self.m - self.nu) for a in range(self.q + 1)]


def partition_profile(S: NumericalSemigroup) -> PartitionProfile:
    _require_nontrivial(S)
    m, c = S.multiplicity, S.conductor
    L = (c - 1) // m
    q = -(-c // m)
    small = np.asarray(S.small_elements(), dtype=np.int64)
    n_alpha = np.bincount(small // m, minlength=L + 1)[: L + 1]
    return PartitionProfile(
        L=L,
        rho=c - L * m,
        q=q,
        nu=q * m - c,
        eta=tuple(eta(S)),
        n_alpha=tuple(int(n) for n in n_alpha),
        m=m,
        conductor=c,
    )


def generator_split(S: NumericalSemigroup) -> tuple[int, int, int]:
    """``(e_s, e_c, |d_q|)``: generators below ``c``, generators in ``[c, c+m)``,
    and non-generators in ``[c, c+m)``."""
    _require_nontrivial(S)
    c, m = S.conductor, S.multiplicity
    e_s = sum(1 for a in S.min_generators if a < c)
    e_c = sum(1 for a in S.min_generators if c <= a < c + m)
    return e_s, e_c, m - e_c


def pseudo_frobenius(S: NumericalSemigroup) -> tuple[int, ...]:
    _require_nontrivial(S)
    g = np.asarray(S.gaps(), dtype=np.int64)
    c = S.conductor
    mem = S.membership
    keep = np.ones(g.size, dtype=bool)
    for a in S.min_generators:
        shifted = g + a
        keep &= (shifted >= c) | mem[np.minimum(shifted, c)]
    return tuple(int(x) for x in g[keep])


def semigroup_type(S: NumericalSemigroup) -> int:
    return len(pseudo_frobenius(S))


def _mirror_in(S: NumericalSemigroup, g: np.ndarray) -> np.ndarray:
    # f - g lies in [0, f) for every gap g, so the bitmap covers it
    return S.membership[S.frobenius - g]


def is_symmetric(S: NumericalSemigroup) -> bool:
    _require_nontrivial(S)
    g = np.asarray(S.gaps(), dtype=np.int64)
    return bool(_mirror_in(S, g).all())


def is_pseudo_symmetric(S: NumericalSemigroup) -> bool:
    _require_nontrivial(S)
    f = S.frobenius
    if f % 2:
        return False
    g = np.asarray(S.gaps(), dtype=np.int64)
    g = g[g != f // 2]
    return bool(_mirror_in(S, g).all())


def is_highly_dense(S: NumericalSemigroup) -> bool:
    """Concentration at most 2, or at most e/2 with embedding dimension >= 4."""
    k = concentration(S)
    e = S.embedding_dimension
    return k <= 2 or (2 * k <= e and e >= 4)


CSV_COLUMNS = (
    "generators", "threshold", "m", "c", "e", "e_s", "e_c", "delta", "q", "nu", "L",
    "rho", "concentration", "mu", "eliahou", "wilf_e", "wilf_mu", "type", "symmetric",
    "pseudo_symmetric", "highly_dense",
)


@dataclass(frozen=True)
class InvariantReport:
    generators: str
    threshold: Optional[int]
    m: int
    c: int
    f: int
    e: int
    e_s: Optional[int]
    e_c: Optional[int]
    delta: int
    q: Optional[int]
    nu: Optional[int]
    L: Optional[int]
    rho: Optional[int]
    concentration: int
    mu: int
    eliahou: Optional[int]
    wilf_e: int
    wilf_es: Optional[int]
    wilf_mu: int
    type: Optional[int]
    symmetric: Optional[bool]
    pseudo_symmetric: Optional[bool]
    highly_dense: bool
    min_generators: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        d = asdict(self)
        d["min_generators"] = list(self.min_generators)
        return d

    def csv_row(self) -> list:
        d = asdict(self)
        return ["" if d[k] is None else d[k] for k in CSV_COLUMNS]

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in fields(cls)]


def report(S: NumericalSemigroup) -> InvariantReport:
    from .wilf import eliahou, mu, wilf

    spec = S.spec
    if spec is not None:
        generators = ",".join(str(g) for g in spec.generators)
        threshold = spec.threshold
    else:
        generators = ",".join(str(g) for g in S.min_generators)
        threshold = None

    e = S.embedding_dimension
    k = concentration(S)
    mu_ = mu(S)
    common = dict(
        generators=generators,
        threshold=threshold,
        m=S.multiplicity,
        c=S.conductor,
        f=S.frobenius,
        e=e,
        delta=S.delta,
        concentration=k,
        mu=mu_,
        wilf_e=wilf(S, e),
        wilf_mu=wilf(S, mu_),
        highly_dense=is_highly_dense(S),
        min_generators=S.min_generators,
    )
    if S.is_trivial:
        return InvariantReport(
            e_s=None, e_c=None, q=None, nu=None, L=None, rho=None, eliahou=None,
            wilf_es=None, type=None, symmetric=None, pseudo_symmetric=None, **common,
        )
    profile = partition_profile(S)
    e_s, e_c, _ = generator_split(S)
    return InvariantReport(
        e_s=e_s,
        e_c=e_c,
        q=profile.q,
        nu=profile.nu,
        L=profile.L,
        rho=profile.rho,
        eliahou=eliahou(S),
        wilf_es=wilf(S, e_s),
        type=semigroup_type(S),
        symmetric=is_symmetric(S),
        pseudo_symmetric=is_pseudo_symmetric(S),
        **common,
    )
