"""Rationalized long exact sequence of ``GL_{n-1} -> GL_n -> Lc_n``.

In each degree k the sequence reads

    π_k(GL_{n-1}) --i--> π_k(GL_n) --γ--> π_k(Lc_n) --∂--> π_{k-1}(GL_{n-1})

tensored with Q. The fiber of ``GL_n -> Lc_n`` deformation retracts onto
``GL_{n-1}``, which is what the table shows. Rows stop at ``k = 1``; the
``π_0`` tail is not a sequence of vector spaces and is left out.
"""

from dataclasses import dataclass, replace

from .errors import InvalidParameterError
from .gauge import gl_ranks, lc_ranks
from .simplicial import betti

JUNCTIONS = ("GL_{n-1}->GL_n", "GL_n->Lc", "Lc->GL_{n-1}")


@dataclass(frozen=True)
class LesRow:
    k: int
    gl_prev: int
    gl: int
    lc: int
    rank_i: int
    rank_gamma: int
    rank_delta: int

    def to_dict(self):
        return {
            "k": self.k, "gl_prev": self.gl_prev, "gl": self.gl, "lc": self.lc,
            "rank_i": self.rank_i, "rank_gamma": self.rank_gamma, "rank_delta": self.rank_delta,
        }


@dataclass(frozen=True)
class Violation:
    k: int
    junction: str
    message: str

    def to_dict(self):
        return {"k": self.k, "junction": self.junction, "message": self.message}


@dataclass(frozen=True)
class LesTable:
    n: int
    rows: tuple  # descending k
    exact: bool

    def row(self, k):
        for r in self.rows:
            if r.k == k:
                return r
        raise KeyError(k)

    def with_row(self, k, **changes):
        """Copy of the table with one row edited and the verdict recomputed."""
        rows = tuple(replace(r, **changes) if r.k == k else r for r in self.rows)
        draft = LesTable(self.n, rows, exact=False)
        return replace(draft, exact=not verify_exactness(draft))

    def to_dict(self):
        return {"n": self.n, "exact": self.exact, "rows": [r.to_dict() for r in self.rows]}


def build_les(X, n, k_max=None):
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InvalidParameterError(f"the fibration sequence needs n >= 2, got {n!r}")
    if k_max is None:
        k_max = 2 * n - 1 + X.dim
    if k_max < 1:
        raise InvalidParameterError(f"k_max must be >= 1, got {k_max}")
    b = betti(X)
    prev, cur, lc = gl_ranks(X, n - 1, b), gl_ranks(X, n, b), lc_ranks(X, n, b)
    rows = []
    for k in range(k_max, 0, -1):
        # i is a summand inclusion, hence injective; ∂ then vanishes by exactness
        rank_i = prev[k]
        rows.append(LesRow(k, prev[k], cur[k], lc[k], rank_i, cur[k] - rank_i, 0))
    draft = LesTable(n, tuple(rows), exact=False)
    return replace(draft, exact=not verify_exactness(draft))


def verify_exactness(table):
    """Return every junction where the rank-sum condition fails.

    Over a field, exactness at ``V`` between ``f: U -> V`` and ``g: V -> W`` is
    ``rank f + rank g = dim V``. A junction is named after its outgoing map.
    The connecting map into the top row comes from outside the table and is
    taken to be zero.
    """
    violations = []
    rows = sorted(table.rows, key=lambda r: r.k)
    by_k = {r.k: r for r in rows}
    for r in rows:
        for field_name in ("gl_prev", "gl", "lc", "rank_i", "rank_gamma", "rank_delta"):
            value = getattr(r, field_name)
            if value < 0:
                violations.append(Violation(r.k, field_name, f"negative entry {field_name}={value}"))
        above = by_k.get(r.k + 1)
        incoming = above.rank_delta if above is not None else 0
        checks = (
            (JUNCTIONS[0], incoming, r.rank_i, r.gl_prev, "π_k(GL_{n-1})"),
            (JUNCTIONS[1], r.rank_i, r.rank_gamma, r.gl, "π_k(GL_n)"),
            (JUNCTIONS[2], r.rank_gamma, r.rank_delta, r.lc, "π_k(Lc_n)"),
        )
        for name, rin, rout, dim, space in checks:
            if rin + rout != dim:
                violations.append(Violation(
                    r.k, name,
                    f"at {space}: incoming rank {rin} + outgoing rank {rout} != dim {dim}",
                ))
    return violations


def alternating_sum(table, k_lo=None, k_hi=None):
    """``Σ (-1)^position · dim`` along the sequence, restricted to ``k_lo <= k <= k_hi``.

    The window starts at ``π_{k_hi}(GL_{n-1})`` and ends at ``π_{k_lo}(Lc_n)``.
    Both ends sit next to connecting maps; when those vanish, as on every
    table from ``build_les``, exactness makes the sum 0.
    """
    rows = [r for r in table.rows
            if (k_lo is None or r.k >= k_lo) and (k_hi is None or r.k <= k_hi)]
    total = 0
    for pos, r in enumerate(sorted(rows, key=lambda r: -r.k)):
        # three terms per row, so the row sign alternates with the row index
        total += (-1) ** pos * (r.gl_prev - r.gl + r.lc)
    return total
