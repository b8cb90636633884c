"""Sparse symmetric tensors in orbit storage, and the structured tensors
of a hypergraph.

An order-m tensor is stored as a diagonal vector plus a map from sorted
index tuples (the symmetric orbits) to values. This covers every tensor
handled here: adjacency, Laplacian, signless Laplacian, and arbitrary
combinatorial-symmetric tensors with one value per orbit.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import NotZTensorError
from .hypergraph import Hypergraph


def _multinomial(counts: Iterable[int]) -> int:
    counts = list(counts)
    result = math.factorial(sum(counts))
    for c in counts:
        result //= math.factorial(c)
    return result


@dataclass(frozen=True)
class GenTensor:
    """Symmetric order-m, dimension-n tensor: diagonal + off-diagonal orbits.

    Orbit keys are nondecreasing m-tuples of indices in [0, n) that are
    not constant; each key stands for the full set of index permutations
    sharing its value. Zero orbit values are dropped on construction, so
    the stored key set is exactly the nonzero off-diagonal support.
    """

    m: int
    n: int
    diag: tuple[float, ...]
    orbits: dict[tuple[int, ...], float]

    def __init__(
        self,
        m: int,
        n: int,
        diag: Sequence[float],
        orbits: Mapping[Sequence[int], float] | None = None,
    ):
        if m < 2:
            raise ValueError(f"order must be at least 2, got {m}")
        if n < 1:
            raise ValueError(f"dimension must be positive, got {n}")
        if len(diag) != n:
            raise ValueError(f"diagonal has length {len(diag)}, expected {n}")
        normalized: dict[tuple[int, ...], float] = {}
        for key, value in (orbits or {}).items():
            e = tuple(sorted(int(i) for i in key))
            if len(e) != m:
                raise ValueError(f"orbit {e} has length {len(e)}, expected {m}")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"orbit {e} has an index outside [0, {n})")
            if len(set(e)) == 1:
                raise ValueError(f"orbit {e} is diagonal; use diag instead")
            if e in normalized:
                raise ValueError(f"orbit {e} specified more than once")
            if value != 0:
                normalized[e] = float(value)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "diag", tuple(float(d) for d in diag))
        object.__setattr__(self, "orbits", normalized)

    @cached_property
    def _plan(self) -> tuple[tuple[int, float, tuple[tuple[int, int], ...]], ...]:
        """Contraction plan: (target index, coefficient, remainder powers).

        An orbit tuple e contributes to coordinate i once per occurrence
        of i in e, with the multinomial count of the remaining m-1
        indices as multiplicity; this reproduces the sum over all
        permuted index tuples without materializing them.
        """
        plan = []
        for e, value in sorted(self.orbits.items()):
            counts = Counter(e)
            for i in sorted(counts):
                rest = tuple(
                    (j, c - 1 if j == i else c)
                    for j, c in sorted(counts.items())
                    if (c - 1 if j == i else c) > 0
                )
                coeff = value * _multinomial(c for _, c in rest)
                plan.append((i, coeff, rest))
        return tuple(plan)

    def __add__(self, other: "GenTensor") -> "GenTensor":
        if not isinstance(other, GenTensor):
            return NotImplemented
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("tensor shapes differ")
        merged = dict(self.orbits)
        for e, v in other.orbits.items():
            merged[e] = merged.get(e, 0.0) + v
        diag = tuple(a + b for a, b in zip(self.diag, other.diag))
        return GenTensor(self.m, self.n, diag, merged)

    def add_diagonal(self, shift: float | Sequence[float]) -> "GenTensor":
        """Return self + D for a diagonal tensor D (scalar means c * I)."""
        if isinstance(shift, (int, float)):
            diag = tuple(d + shift for d in self.diag)
        else:
            diag = tuple(d + s for d, s in zip(self.diag, shift))
        return GenTensor(self.m, self.n, diag, self.orbits)

    def to_json_dict(self) -> dict:
        """Debug serialization (1-indexed orbit tuples)."""
        return {
            "order": self.m,
            "dim": self.n,
            "diag": list(self.diag),
            "orbits": [
                {"index": [i + 1 for i in e], "value": v}
                for e, v in sorted(self.orbits.items())
            ],
        }


@dataclass(frozen=True)
class IncidenceMatrix:
    """Multiplicity rows b_{e,j} over the nonzero sorted index tuples.

    Every row sums to the tensor order m. Diagonal tuples produce rows
    m * e_i that vanish mod m; they are excluded when dropped_zero_rows
    is set (the default in incidence()).
    """

    modulus: int
    n: int
    rows: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    dropped_zero_rows: bool

    def matrix(self) -> list[list[int]]:
        return [list(b) for _, b in self.rows]


class MKind(Enum):
    NOT_Z = "NotZ"
    Z_NOT_M = "ZNotM"
    SINGULAR_M = "SingularM"
    NONSINGULAR_M = "NonsingularM"


@dataclass(frozen=True)
class MClass:
    """Z/M-tensor classification with its certificate (s, rho(B))."""

    kind: MKind
    s: float | None
    rho: float | None


@dataclass(frozen=True)
class ZSplit:
    """Decomposition t = s * I - B with s > 0 and B >= 0 entrywise."""

    s: float
    nonneg_part: GenTensor


def structured_tensor(h: Hypergraph, kind: str) -> GenTensor:
    """Adjacency, Laplacian, or signless Laplacian tensor of a hypergraph.

    Each edge becomes one orbit with value 1/(m-1)! (adjacency and
    signless) or -1/(m-1)! (Laplacian); the diagonal carries the vertex
    degrees except for the adjacency tensor, where it is zero.
    """
    value = 1.0 / math.factorial(h.m - 1)
    if kind == "adjacency":
        return GenTensor(h.m, h.n, [0.0] * h.n, {e: value for e in h.edges})
    if kind == "laplacian":
        return GenTensor(h.m, h.n, h.degrees, {e: -value for e in h.edges})
    if kind == "signless":
        return GenTensor(h.m, h.n, h.degrees, {e: value for e in h.edges})
    raise ValueError(f"unknown tensor kind {kind!r}")


def z_tensor(s: float, b: GenTensor) -> GenTensor:
    """Build s * I - B from a shift and a nonnegative part."""
    return GenTensor(
        b.m,
        b.n,
        [s - d for d in b.diag],
        {e: -v for e, v in b.orbits.items()},
    )


def contract(t: GenTensor, x: Sequence[complex]) -> np.ndarray:
    """Apply the tensor to a vector: (t x^{m-1})_i."""
    xa = np.asarray(x)
    if xa.shape != (t.n,):
        raise ValueError(f"vector has shape {xa.shape}, expected ({t.n},)")
    dtype = np.promote_types(xa.dtype, np.float64)
    xa = xa.astype(dtype)
    out = np.asarray(t.diag, dtype=dtype) * xa ** (t.m - 1)
    for i, coeff, rest in t._plan:
        term = coeff
        for j, cnt in rest:
            term = term * xa[j] ** cnt
        out[i] += term
    return out


def residual(t: GenTensor, lam: complex, x: Sequence[complex]) -> float:
    """Scale-invariant eigenpair residual in the infinity norm.

    max_i |(t x^{m-1})_i - lam * x_i^{m-1}| / max_i |x_i|^{m-1};
    zero exactly when (lam, x) is an exact eigenpair.
    """
    xa = np.asarray(x, dtype=complex)
    if xa.shape != (t.n,):
        raise ValueError(f"vector has shape {xa.shape}, expected ({t.n},)")
    if not np.any(xa):
        raise ValueError("eigenvector must be nonzero")
    defect = contract(t, xa) - lam * xa ** (t.m - 1)
    scale = float(np.max(np.abs(xa))) ** (t.m - 1)
    return float(np.max(np.abs(defect)) / scale)


def weakly_irreducible(t: GenTensor) -> bool:
    """Strong connectivity of the index digraph of the nonzero support.

    Arc i -> j whenever some off-diagonal nonzero entry has first index
    i and j among its remaining indices; a single-index tensor counts
    as weakly irreducible.
    """
    if t.n == 1:
        return True
    forward: list[set[int]] = [set() for _ in range(t.n)]
    backward: list[set[int]] = [set() for _ in range(t.n)]
    for e in t.orbits:
        support = set(e)
        for i in support:
            for j in support:
                if i != j:
                    forward[i].add(j)
                    backward[j].add(i)

    def reaches_all(adj: list[set[int]]) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == t.n

    return reaches_all(forward) and reaches_all(backward)


def z_split(t: GenTensor) -> ZSplit:
    """Write a Z-tensor as s * I - B with B nonnegative.

    s is the largest diagonal entry (1 when the diagonal is entirely
    nonpositive), which keeps B's diagonal nonnegative and small. The
    round trip s * I - B reproduces t entrywise.
    """
    for e, v in sorted(t.orbits.items()):
        if v > 0:
            raise NotZTensorError(tuple(i + 1 for i in e), v)
    s = max(t.diag) if max(t.diag) > 0 else 1.0
    b = GenTensor(
        t.m,
        t.n,
        [s - d for d in t.diag],
        {e: -v for e, v in t.orbits.items()},
    )
    return ZSplit(s, b)


def m_classify(t: GenTensor, tol: float = 1e-8) -> MClass:
    """Classify a tensor as NotZ / ZNotM / SingularM / NonsingularM.

    Singular means s = rho(B) within the relative tolerance; the
    certificate pair (s, rho) is returned so borderline cases can be
    re-decided by the caller.
    """
    from .perron import spectral_radius

    try:
        split = z_split(t)
    except NotZTensorError:
        return MClass(MKind.NOT_Z, None, None)
    rho = spectral_radius(split.nonneg_part).rho
    scale = max(1.0, abs(split.s), abs(rho))
    if abs(split.s - rho) <= tol * scale:
        kind = MKind.SINGULAR_M
    elif split.s > rho:
        kind = MKind.NONSINGULAR_M
    else:
        kind = MKind.Z_NOT_M
    return MClass(kind, split.s, rho)


def incidence(t: GenTensor, drop_zero_rows: bool = True) -> IncidenceMatrix:
    """Incidence matrix of a combinatorial symmetric tensor.

    One row per nonzero sorted index tuple, entries the multiplicities
    of each index. Diagonal tuples (nonzero diagonal entries) give rows
    congruent to zero mod m and are dropped by default, which leaves the
    Laplacian with the same incidence matrix as the adjacency tensor.
    """
    tuples = sorted(t.orbits)
    for i, d in enumerate(t.diag):
        if d != 0:
            tuples.append((i,) * t.m)
    tuples.sort()
    rows = []
    for e in tuples:
        b = [0] * t.n
        for i in e:
            b[i] += 1
        if drop_zero_rows and all(v % t.m == 0 for v in b):
            continue
        rows.append((e, tuple(b)))
    return IncidenceMatrix(t.m, t.n, tuple(rows), drop_zero_rows)
