"""Finitely supported graded dimensions."""

from collections.abc import Mapping


class GradedDims(Mapping):
    """Mapping ``degree -> rank`` that is zero outside a finite support.

    Only positive ranks are stored, so ``len`` and iteration see the support.
    Lookups of unsupported degrees (negative ones included) return 0.

    >>> g = GradedDims({0: 1, 2: 1, 5: 0})
    >>> g[2], g[-3], dict(g)
    (1, 0, {0: 1, 2: 1})
    """

    __slots__ = ("_ranks",)

    def __init__(self, ranks=None):
        data = {}
        items = ranks.items() if isinstance(ranks, Mapping) else (ranks or ())
        for degree, rank in items:
            if isinstance(degree, bool) or not isinstance(degree, int):
                raise TypeError(f"degree must be an int, got {degree!r}")
            if isinstance(rank, bool) or not isinstance(rank, int):
                raise TypeError(f"rank must be an int, got {rank!r}")
            if rank < 0:
                raise ValueError(f"negative rank {rank} in degree {degree}")
            if rank:
                data[degree] = data.get(degree, 0) + rank
        self._ranks = dict(sorted(data.items()))

    def __getitem__(self, degree):
        return self._ranks.get(degree, 0)

    def __contains__(self, degree):
        return degree in self._ranks

    def __iter__(self):
        return iter(self._ranks)

    def __len__(self):
        return len(self._ranks)

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return self._ranks == {k: v for k, v in other.items() if v != 0}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._ranks.items()))

    def __repr__(self):
        return f"GradedDims({self._ranks})"

    def __add__(self, other):
        out = dict(self._ranks)
        for k, v in GradedDims(other).items():
            out[k] = out.get(k, 0) + v
        return GradedDims(out)

    def __sub__(self, other):
        """Degreewise difference; raises ``ValueError`` if any degree goes negative."""
        out = dict(self._ranks)
        for k, v in GradedDims(other).items():
            out[k] = out.get(k, 0) - v
        return GradedDims(out)

    def scale(self, factor):
        if factor < 0:
            raise ValueError("scale factor must be nonnegative")
        return GradedDims({k: v * factor for k, v in self._ranks.items()})

    def shift(self, offset):
        return GradedDims({k + offset: v for k, v in self._ranks.items()})

    @property
    def max_degree(self):
        return max(self._ranks) if self._ranks else None

    @property
    def total(self):
        return sum(self._ranks.values())

    def to_dict(self):
        return dict(self._ranks)
