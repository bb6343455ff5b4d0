"""Normalized Laplacian spectra: numeric eigensolve and the blowup mapping.

Two independent routes produce the spectrum of a blown-up graph:

* eigendecompose the explicitly constructed graph (``eig_sym`` on
  ``normalized_laplacian``), or
* map the base graph's spectrum through ``spectrum_by_theorem``: eigenvalue
  0 stays with multiplicity 1; every other eigenvalue except 2 is divided
  by n - 1; 2/(n-1) enters with multiplicity E - N (one more when the base
  graph is bipartite, absorbing its eigenvalue 2); n/(n-1) enters with
  multiplicity (n-3)E + N.

``multiset_match`` compares the two on flattened value lists so clustering
can never manufacture a false match.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.linalg

from .blowup import DEFAULT_MAX_VERTICES, BlowupParams
from .errors import (
    DegreeZeroError,
    InconsistentSpectrumError,
    InternalAssertionError,
    InvalidParameterError,
    NotSymmetricError,
    SizeCapExceededError,
)
from .graphs import Graph, require_connected

DEFAULT_CLUSTER_TOL = 1e-6
DEFAULT_MATCH_TOL = 1e-7
SYMMETRY_TOL = 1e-12

Value = Fraction | float


def _normalize_value(v) -> Value:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    v = float(v)
    if not np.isfinite(v):
        raise InvalidParameterError(f"non-finite eigenvalue {v!r}")
    return v


@dataclass(frozen=True)
class SpectrumMultiset:
    """Clustered eigenvalue multiset: ascending (value, multiplicity) pairs.

    Values are floats or exact rationals; adjacent values must differ by
    more than cluster_tol. Exact values survive arithmetic unrounded, which
    is what makes the rational-mode index computations possible.
    """

    entries: tuple[tuple[Value, int], ...]
    cluster_tol: float = DEFAULT_CLUSTER_TOL

    def __post_init__(self):
        if self.cluster_tol <= 0:
            raise InvalidParameterError("cluster_tol must be positive")
        normalized = []
        for value, mult in self.entries:
            if mult < 1:
                raise InvalidParameterError(f"multiplicity must be >= 1, got {mult}")
            normalized.append((_normalize_value(value), int(mult)))
        for (a, _), (b, _) in zip(normalized, normalized[1:]):
            if not float(b) - float(a) > self.cluster_tol:
                raise InvalidParameterError(
                    "entries must be strictly increasing with gaps above cluster_tol"
                )
        object.__setattr__(self, "entries", tuple(normalized))

    @property
    def order(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, Fraction) for v, _ in self.entries)

    def flatten(self) -> list[float]:
        """Each eigenvalue repeated by multiplicity, ascending floats."""
        out: list[float] = []
        for value, mult in self.entries:
            out.extend([float(value)] * mult)
        return out

    def multiplicity_at(self, value: float) -> int:
        """Multiplicity of the entry within cluster_tol of value (0 if none)."""
        for v, m in self.entries:
            if abs(float(v) - value) <= self.cluster_tol:
                return m
        return 0

    @staticmethod
    def from_eigenvalues(
        values, cluster_tol: float = DEFAULT_CLUSTER_TOL
    ) -> "SpectrumMultiset":
        """Cluster a raw eigenvalue sequence into (value, multiplicity) pairs."""
        return SpectrumMultiset.from_entries(
            [(v, 1) for v in values], cluster_tol=cluster_tol
        )

    @staticmethod
    def from_entries(
        pairs, cluster_tol: float = DEFAULT_CLUSTER_TOL
    ) -> "SpectrumMultiset":
        """Merge (value, multiplicity) pairs whose values chain within cluster_tol.

        A merged group's representative is the multiplicity-weighted mean;
        representatives within 1e-9 below zero are snapped to 0 (eigensolver
        noise on the positive semidefinite matrices this package works with).
        """
        items = sorted(
            ((_normalize_value(v), int(m)) for v, m in pairs), key=lambda p: float(p[0])
        )
        entries: list[tuple[Value, int]] = []
        group: list[tuple[Value, int]] = []

        def close_group():
            total = sum(m for _, m in group)
            first = group[0][0]
            if all(v == first for v, _ in group):
                rep: Value = first
            else:
                rep = sum(v * m for v, m in group) / total
            if isinstance(rep, float) and -1e-9 <= rep < 0.0:
                rep = 0.0
            entries.append((rep, total))

        for value, mult in items:
            if group and float(value) - float(group[-1][0]) > cluster_tol:
                close_group()
                group = []
            group.append((value, mult))
        if group:
            close_group()
        return SpectrumMultiset(tuple(entries), cluster_tol=cluster_tol)

    def to_json(self) -> str:
        """Serialize as {"order": ..., "cluster_tol": ..., "entries": [[value, mult], ...]}.

        Values print with 17 significant digits so the document is
        byte-for-byte deterministic and round-trips doubles exactly.
        """
        entries = ",".join(f"[{float(v):.17g},{m}]" for v, m in self.entries)
        return (
            f'{{"order":{self.order},"cluster_tol":{self.cluster_tol:.17g},'
            f'"entries":[{entries}]}}'
        )

    @staticmethod
    def from_json(text: str) -> "SpectrumMultiset":
        doc = json.loads(text)
        spectrum = SpectrumMultiset(
            tuple((float(v), int(m)) for v, m in doc["entries"]),
            cluster_tol=float(doc["cluster_tol"]),
        )
        if spectrum.order != int(doc["order"]):
            raise InvalidParameterError("order field disagrees with entries")
        return spectrum


@dataclass(frozen=True)
class MatchReport:
    matched: bool
    count_a: int
    count_b: int
    first_mismatch_index: int | None = None
    value_a: float | None = None
    value_b: float | None = None

    @property
    def detail(self) -> str:
        if self.matched:
            return f"match ({self.count_a} eigenvalues)"
        if self.count_a != self.count_b:
            return f"length mismatch: {self.count_a} vs {self.count_b}"
        return (
            f"mismatch at index {self.first_mismatch_index}: "
            f"{self.value_a!r} vs {self.value_b!r}"
        )


def normalized_laplacian(g: Graph) -> np.ndarray:
    """Dense symmetric matrix with M[i,i] = 1, M[i,j] = -1/sqrt(d_i d_j) for i~j."""
    require_connected(g)
    if any(d == 0 for d in g.degrees):
        raise DegreeZeroError("normalized Laplacian needs every degree >= 1")
    inv_sqrt = 1.0 / np.sqrt(np.asarray(g.degrees, dtype=float))
    m = np.eye(g.vertex_count)
    for u, v in g.edges:
        m[u, v] = m[v, u] = -inv_sqrt[u] * inv_sqrt[v]
    return m


def eig_sym(
    matrix: np.ndarray,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    max_order: int = DEFAULT_MAX_VERTICES,
) -> SpectrumMultiset:
    """Full spectrum of a dense symmetric matrix, clustered.

    LAPACK's symmetric solver (tridiagonalize, then divide and conquer) is
    deterministic for a fixed input, which the test fixtures rely on.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidParameterError(f"expected a square matrix, got {matrix.shape}")
    if matrix.shape[0] > max_order:
        raise SizeCapExceededError(
            f"matrix order {matrix.shape[0]} exceeds cap {max_order}"
        )
    deviation = float(np.max(np.abs(matrix - matrix.T))) if matrix.size else 0.0
    if deviation > SYMMETRY_TOL:
        raise NotSymmetricError(f"asymmetry {deviation:.3e} exceeds {SYMMETRY_TOL:.0e}")
    values = scipy.linalg.eigh(matrix, eigvals_only=True)
    return SpectrumMultiset.from_eigenvalues(values, cluster_tol=cluster_tol)


def laplacian_spectrum(
    g: Graph,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    max_order: int = DEFAULT_MAX_VERTICES,
) -> SpectrumMultiset:
    """Numeric normalized Laplacian spectrum of a connected graph."""
    return eig_sym(normalized_laplacian(g), cluster_tol=cluster_tol, max_order=max_order)


def _locate(entries, target: float, tol: float) -> list[int]:
    return [i for i, (v, _) in enumerate(entries) if abs(float(v) - target) <= tol]


def spectrum_by_theorem(
    sigma_g: SpectrumMultiset,
    n0: int,
    e0: int,
    n: int,
    bipartite: bool,
) -> SpectrumMultiset:
    """Spectrum of the blowup from the base spectrum, no eigensolve.

    sigma_g must contain eigenvalue 0 with multiplicity 1, and eigenvalue 2
    with multiplicity 1 when bipartite is set. Arithmetic is exact when
    every input value is an exact rational, double precision otherwise.
    The output multiplicities must total N + (n-2)E.
    """
    if n < 3:
        raise InvalidParameterError(f"clique size n must be >= 3, got {n}")
    tol = sigma_g.cluster_tol
    entries = list(sigma_g.entries)

    zero_at = _locate(entries, 0.0, tol)
    if len(zero_at) != 1 or entries[zero_at[0]][1] != 1:
        raise InconsistentSpectrumError(
            "spectrum must contain eigenvalue 0 with multiplicity exactly 1"
        )
    excluded = {zero_at[0]}
    if bipartite:
        two_at = _locate(entries, 2.0, tol)
        if not two_at:
            raise InconsistentSpectrumError(
                "bipartite flag set but no eigenvalue near 2"
            )
        if len(two_at) > 1 or entries[two_at[0]][1] != 1:
            raise InconsistentSpectrumError(
                "several eigenvalues cluster at 2; cannot exclude exactly one"
            )
        excluded.add(two_at[0])

    mult_low = e0 - n0 + (1 if bipartite else 0)
    if mult_low < 0:
        raise InconsistentSpectrumError(
            f"multiplicity {mult_low} for 2/(n-1) is negative; "
            "inconsistent counts for a connected graph"
        )

    exact = sigma_g.is_exact
    if exact:
        scaled = [
            (v / (n - 1), m) for i, (v, m) in enumerate(entries) if i not in excluded
        ]
        out: list[tuple[Value, int]] = [(Fraction(0), 1)]
        low: Value = Fraction(2, n - 1)
        high: Value = Fraction(n, n - 1)
    else:
        scaled = [
            (float(v) / (n - 1), m)
            for i, (v, m) in enumerate(entries)
            if i not in excluded
        ]
        out = [(0.0, 1)]
        low = 2.0 / (n - 1)
        high = float(n) / (n - 1)
    out.extend(scaled)
    if mult_low > 0:
        out.append((low, mult_low))
    out.append((high, (n - 3) * e0 + n0))

    result = SpectrumMultiset.from_entries(out, cluster_tol=tol)
    expected = n0 + (n - 2) * e0
    if result.order != expected:
        raise InternalAssertionError(
            f"mapped spectrum has {result.order} eigenvalues, expected {expected}"
        )
    return result


def spectrum_iterated(
    sigma_g: SpectrumMultiset,
    n0: int,
    e0: int,
    params: BlowupParams,
    bipartite: bool,
) -> SpectrumMultiset:
    """Apply the spectrum mapping r times, tracking counts level by level.

    The bipartite flag matters only at the first level: every blowup puts a
    triangle through each edge, so deeper levels are never bipartite.
    """
    if params.r < 1:
        raise InvalidParameterError("iterated mapping needs r >= 1")
    sigma = sigma_g
    vertices, edges = n0, e0
    bip = bipartite
    for _ in range(params.r):
        sigma = spectrum_by_theorem(sigma, vertices, edges, params.n, bip)
        vertices, edges = vertices + (params.n - 2) * edges, params.n * (params.n - 1) * edges // 2
        bip = False
    return sigma


def multiset_match(
    a: SpectrumMultiset, b: SpectrumMultiset, tol: float = DEFAULT_MATCH_TOL
) -> MatchReport:
    """Elementwise comparison of flattened spectra.

    Match iff equal lengths and |a_i - b_i| <= tol * max(1, |b_i|) for all i.
    A mismatch is reported, not raised.
    """
    flat_a, flat_b = a.flatten(), b.flatten()
    if len(flat_a) != len(flat_b):
        return MatchReport(False, len(flat_a), len(flat_b))
    for i, (x, y) in enumerate(zip(flat_a, flat_b)):
        if abs(x - y) > tol * max(1.0, abs(y)):
            return MatchReport(False, len(flat_a), len(flat_b), i, x, y)
    return MatchReport(True, len(flat_a), len(flat_b))
