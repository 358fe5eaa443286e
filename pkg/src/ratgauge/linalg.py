"""Exact integer rank computations.

Both routines work over the integers with fraction-free updates, so the rank
they return is the rank over the rationals. No floating point is involved.
"""

from math import gcd


def bareiss_rank(matrix):
    """Rank of a dense integer matrix by Bareiss fraction-free elimination.

    ``matrix`` is a sequence of equal-length rows of ints. It is not modified.

    >>> bareiss_rank([[1, 2], [2, 4]])
    1
    >>> bareiss_rank([[2, 1, 0], [1, 2, 1], [0, 1, 2]])
    3
    """
    a = [list(row) for row in matrix]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        prow = a[rank]
        for r in range(rank + 1, nrows):
            row = a[r]
            f = row[col]
            for c in range(col + 1, ncols):
                # exact division: Sylvester's identity guarantees divisibility
                row[c] = (p * row[c] - f * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def sparse_rank(rows):
    """Rank of an integer matrix given as sparse rows ``{column: value}``.

    Each row is reduced against previously accepted pivot rows, keyed by their
    lowest column, until it either vanishes or takes a fresh pivot column. The
    update ``p*row - a*pivot_row`` stays in the integers and the row content
    is divided out after every step to keep entries small.
    """
    pivots = {}
    for source in rows:
        row = {c: v for c, v in source.items() if v}
        while row:
            low = min(row)
            prow = pivots.get(low)
            if prow is None:
                pivots[low] = row
                break
            p, a = prow[low], row[low]
            new = {c: p * v for c, v in row.items()}
            for c, v in prow.items():
                w = new.get(c, 0) - a * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                new = {c: v // g for c, v in new.items()}
            row = new
    return len(pivots)
