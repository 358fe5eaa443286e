"""Rational homotopy ranks of gauge groups, GL_n(C(X)) and Lc_n(C(X)).

All results are for the basepoint components and for degrees ``j >= 1``;
``π_0`` is never reported. A coefficient space ``Q^d`` is handled by its
dimension only.
"""

from dataclasses import dataclass

from .errors import InvalidParameterError, StabilityRangeError
from .graded import GradedDims
from .hspace import odd_sphere
from .simplicial import betti, reduced_betti


@dataclass(frozen=True)
class GaugeResult:
    group: str
    free_ranks: GradedDims
    based_ranks: GradedDims
    em_decomposition: tuple
    habelian: bool

    def to_dict(self):
        return {
            "group": self.group,
            "free_ranks": _keyed(self.free_ranks),
            "based_ranks": _keyed(self.based_ranks),
            "em_decomposition": [list(t) for t in self.em_decomposition],
            "habelian": self.habelian,
        }


def _keyed(g):
    return {str(k): v for k, v in g.items()}


def _function_space_ranks(b, G):
    # π_j = ⊕_{l>=j} H^{l-j}(X; π_l(G) ⊗ Q)
    out = {}
    for j in range(1, G.max_degree + 1):
        out[j] = sum(rank * b[l - j] for l, rank in G.homotopy_ranks.items() if l >= j)
    return GradedDims(out)


def gauge_ranks(X, G, cohomology=None):
    """Rational homotopy of ``F(X, G)o`` (free) and ``F*(X, G)o`` (based maps).

    ``cohomology`` may pass precomputed ``(betti, reduced_betti)`` for X.
    """
    b, rb = cohomology if cohomology is not None else (betti(X), reduced_betti(X))
    free = _function_space_ranks(b, G)
    based = _function_space_ranks(rb, G)
    return GaugeResult(
        group=G.name,
        free_ranks=free,
        based_ranks=based,
        em_decomposition=tuple(free.items()),
        habelian=G.finite_dim_cohomology,
    )


def _check_n(n, least=1):
    if isinstance(n, bool) or not isinstance(n, int) or n < least:
        raise InvalidParameterError(f"n must be an integer >= {least}, got {n!r}")


def gl_ranks(X, n, b=None):
    """``dim π_h(GL_n(C(X))o) ⊗ Q = Σ_{j=1..n} b_{2j-1-h}(X)`` for ``h >= 1``."""
    _check_n(n)
    b = betti(X) if b is None else b
    top = 2 * n - 1
    out = {}
    for h in range(1, top + 1):
        out[h] = sum(b[2 * j - 1 - h] for j in range(1, n + 1))
    return GradedDims(out)


def lc_ranks(X, n, b=None):
    """``dim π_k(Lc_n(C(X))o) ⊗ Q``, via ``Lc_n ≃ F(X, S^{2n-1})o`` and the gauge formula."""
    _check_n(n)
    b = betti(X) if b is None else b
    return _function_space_ranks(b, odd_sphere(2 * n - 1))


@dataclass(frozen=True)
class StabilizationReport:
    """Effect of ``GL_{n-1} -> GL_n`` on rational homotopy, per degree.

    ``rows`` holds ``(k, dim_{n-1}, dim_n, cokernel)``. The map is the inclusion
    of a direct summand, hence always injective.
    """

    n: int
    rows: tuple
    injective: bool = True

    def cokernel(self):
        return GradedDims({k: c for k, _, _, c in self.rows})

    def to_dict(self):
        return {
            "n": self.n,
            "injective": self.injective,
            "rows": [
                {"k": k, "dim_prev": a, "dim": d, "cokernel": c} for k, a, d, c in self.rows
            ],
        }


def stabilization(X, n, b=None):
    _check_n(n, least=2)
    b = betti(X) if b is None else b
    prev, cur = gl_ranks(X, n - 1, b), gl_ranks(X, n, b)
    rows = []
    for k in range(1, 2 * n):
        a, d = prev[k], cur[k]
        cok = d - a
        if cok < 0 or cok != b[2 * n - 1 - k]:
            raise AssertionError(f"stabilization cokernel mismatch in degree {k}")
        if a or d:
            rows.append((k, a, d, cok))
    return StabilizationReport(n, tuple(rows))


def stable_range_ok(n, s):
    # n > s/2 + 1, kept in integers
    return 2 * n > s + 2


def recover_cohomology(lc, n, s):
    """Rank of ``Ȟ^s(X; Q)`` read off ``π_{2n-1-s}(Lc_n) ⊗ Q``, valid for ``n > s/2 + 1``."""
    _check_n(n)
    if isinstance(s, bool) or not isinstance(s, int) or s < 0:
        raise InvalidParameterError(f"s must be an integer >= 0, got {s!r}")
    if not stable_range_ok(n, s):
        raise StabilityRangeError(s, n)
    return GradedDims(lc)[2 * n - 1 - s]
