"""Finite simplicial complexes and their rational cohomology.

Cohomology is simplicial cohomology of the finite complex; on finite
complexes this coincides with Čech cohomology, which is what the rest of the
package labels ``Ȟ (finite complex)``.
"""

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import BasepointError, CapacityError, ComplexParseError, InvalidParameterError
from .graded import GradedDims
from .linalg import sparse_rank

MAX_SIMPLICES_PER_DIM = 10_000


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex presented by its maximal simplices.

    Simplices are strictly increasing vertex tuples. ``closure[k]`` lists all
    ``k``-simplices in lexicographic order and is computed on first access.
    """

    maximal_simplices: tuple
    name: str = ""
    vertices: tuple = field(init=False)

    def __post_init__(self):
        cleaned = []
        for i, simplex in enumerate(self.maximal_simplices):
            s = tuple(simplex)
            if not s:
                raise ComplexParseError(f"maximal simplex #{i} is empty")
            for v in s:
                if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                    raise ComplexParseError(
                        f"maximal simplex #{i}: vertex labels must be nonnegative integers, got {v!r}"
                    )
            if len(set(s)) != len(s):
                raise ComplexParseError(f"maximal simplex #{i}: duplicate vertex in {list(s)}")
            cleaned.append(tuple(sorted(s)))
        if not cleaned:
            raise ComplexParseError("complex has no simplices")
        # keep only simplices not contained in another one
        uniq = sorted(set(cleaned), key=lambda s: (-len(s), s))
        maximal = []
        for s in uniq:
            ss = set(s)
            if not any(ss < set(m) for m in maximal):
                maximal.append(s)
        object.__setattr__(self, "maximal_simplices", tuple(sorted(maximal)))
        object.__setattr__(self, "vertices", tuple(sorted({v for s in maximal for v in s})))

    @property
    def dim(self):
        return max(len(s) for s in self.maximal_simplices) - 1

    @cached_property
    def closure(self):
        faces = []
        for k in range(self.dim + 1):
            level = set()
            for s in self.maximal_simplices:
                if len(s) > k:
                    level.update(combinations(s, k + 1))
                    if len(level) > MAX_SIMPLICES_PER_DIM:
                        raise CapacityError(
                            f"more than {MAX_SIMPLICES_PER_DIM} simplices in dimension {k}"
                        )
            faces.append(tuple(sorted(level)))
        return tuple(faces)

    def simplices(self, k):
        if k < 0 or k > self.dim:
            return ()
        return self.closure[k]

    def f_vector(self):
        return [len(level) for level in self.closure]

    def __len__(self):
        return sum(self.f_vector())


@dataclass(frozen=True)
class CoboundaryMatrix:
    """Integer matrix of ``δ_k : C^k -> C^{k+1}``.

    Rows are indexed by ``(k+1)``-simplices, columns by ``k``-simplices, both in
    closure order. Stored as sparse rows ``{column: ±1}``; ``entries`` gives the
    dense form.
    """

    degree: int
    shape: tuple
    rows: tuple

    @property
    def entries(self):
        nrows, ncols = self.shape
        dense = [[0] * ncols for _ in range(nrows)]
        for r, row in enumerate(self.rows):
            for c, v in row.items():
                dense[r][c] = v
        return dense

    def rank(self):
        return sparse_rank(self.rows)

    def __matmul__(self, other):
        """Compose ``self ∘ other`` (apply ``other`` first)."""
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for row in self.rows:
            acc = {}
            for mid, v in row.items():
                for c, w in other.rows[mid].items():
                    acc[c] = acc.get(c, 0) + v * w
            out.append({c: v for c, v in acc.items() if v})
        return CoboundaryMatrix(other.degree, (self.shape[0], other.shape[1]), tuple(out))

    def is_zero(self):
        return all(not row for row in self.rows)


def coboundary(X, k):
    """The coboundary ``δ_k``; entry (σ, τ) is ``(-1)^i`` when τ is σ minus its i-th vertex."""
    if k < 0:
        raise InvalidParameterError(f"coboundary degree must be >= 0, got {k}")
    cols = X.simplices(k)
    targets = X.simplices(k + 1)
    index = {s: i for i, s in enumerate(cols)}
    rows = []
    for sigma in targets:
        row = {}
        for i in range(len(sigma)):
            face = sigma[:i] + sigma[i + 1:]
            row[index[face]] = -1 if i % 2 else 1
        rows.append(row)
    return CoboundaryMatrix(k, (len(targets), len(cols)), tuple(rows))


def betti(X, coeff_dim=1):
    """Rational Betti numbers ``b_k = dim C^k - rank δ_k - rank δ_{k-1}``, scaled by ``coeff_dim``."""
    if coeff_dim < 1:
        raise InvalidParameterError(f"coeff_dim must be positive, got {coeff_dim}")
    ranks = [coboundary(X, k).rank() for k in range(X.dim)]
    out = {}
    for k, faces in enumerate(X.closure):
        b = len(faces)
        if k < X.dim:
            b -= ranks[k]
        if k > 0:
            b -= ranks[k - 1]
        out[k] = b * coeff_dim
    return GradedDims(out)


def reduced_betti(X):
    b = betti(X).to_dict()
    b[0] -= 1
    return GradedDims(b)


def euler_characteristic(X):
    return sum((-1) ** k * n for k, n in enumerate(X.f_vector()))


# --- input format ---------------------------------------------------------


def _line_col(text, pos):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _element_offsets(text):
    """Offsets of each element of the top-level ``maximal_simplices`` array.

    Only called on text that already parsed as JSON.
    """
    offsets = []
    stack = []
    key = None
    expect_key = False
    inside = False
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == '"':
            if inside and len(stack) == 2:
                offsets.append(i)
            s, i = json.decoder.scanstring(text, i + 1)
            if len(stack) == 1 and expect_key:
                key = s
            continue
        if ch in "{[":
            if inside and len(stack) == 2:
                offsets.append(i)
            stack.append(ch)
            expect_key = ch == "{"
            if len(stack) == 2 and ch == "[" and key == "maximal_simplices":
                inside = True
        elif ch in "}]":
            stack.pop()
            if len(stack) < 2:
                inside = False
        elif ch == ":":
            expect_key = False
        elif ch == ",":
            if len(stack) == 1:
                expect_key = True
                key = None
        elif inside and len(stack) == 2 and not ch.isspace():
            offsets.append(i)
            while i < n and text[i] not in ",]" and not text[i].isspace():
                i += 1
            continue
        i += 1
    return offsets


def parse_complex(text):
    """Parse a complex document: ``{"maximal_simplices": [[...], ...], "name": ...}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexParseError(f"malformed document: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ComplexParseError("top level must be an object", 1, 1)
    unknown = set(doc) - {"maximal_simplices", "name"}
    if unknown:
        raise ComplexParseError(f"unknown key(s): {', '.join(sorted(unknown))}", 1, 1)
    if "maximal_simplices" not in doc:
        raise ComplexParseError("missing key 'maximal_simplices'", 1, 1)
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ComplexParseError("'name' must be a string", 1, 1)
    simplices = doc["maximal_simplices"]
    if not isinstance(simplices, list):
        raise ComplexParseError("'maximal_simplices' must be a list of lists", 1, 1)
    if not simplices:
        raise ComplexParseError("empty simplex list", *_line_col(text, text.find("maximal_simplices")))
    offsets = _element_offsets(text)

    def where(i):
        if i < len(offsets):
            return _line_col(text, offsets[i])
        return None, None

    for i, s in enumerate(simplices):
        if not isinstance(s, list):
            raise ComplexParseError(f"maximal simplex #{i} is not a list", *where(i))
        if not s:
            raise ComplexParseError(f"maximal simplex #{i} is empty", *where(i))
        for v in s:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ComplexParseError(
                    f"maximal simplex #{i}: vertex labels must be nonnegative integers, got {v!r}",
                    *where(i),
                )
        if len(set(s)) != len(s):
            raise ComplexParseError(f"maximal simplex #{i}: duplicate vertex in {s}", *where(i))
    return SimplicialComplex(tuple(tuple(s) for s in simplices), name=name)


def to_document(X):
    doc = {"maximal_simplices": [list(s) for s in X.maximal_simplices]}
    if X.name:
        doc["name"] = X.name
    return json.dumps(doc)


# --- builders ---------------------------------------------------------------


def _relabel(X, mapping, name=None):
    return SimplicialComplex(
        tuple(tuple(mapping[v] for v in s) for s in X.maximal_simplices),
        name=X.name if name is None else name,
    )


def _fresh(X, count=1):
    top = max(X.vertices) + 1
    return list(range(top, top + count))


def point():
    return SimplicialComplex(((0,),), name="point")


def simplex(m):
    if m < 0:
        raise InvalidParameterError(f"simplex dimension must be >= 0, got {m}")
    return SimplicialComplex((tuple(range(m + 1)),), name=f"simplex{m}")


def simplex_boundary(m):
    """Boundary of the ``m``-simplex, a triangulated ``(m-1)``-sphere (``m >= 1``)."""
    if m < 1:
        raise InvalidParameterError(f"simplex_boundary needs m >= 1, got {m}")
    faces = tuple(combinations(range(m + 1), m))
    return SimplicialComplex(faces, name=f"S{m - 1}")


def torus7():
    """Möbius' 7-vertex torus."""
    tris = []
    for i in range(7):
        tris.append((i, (i + 1) % 7, (i + 3) % 7))
        tris.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex(tuple(tris), name="torus7")


def rp2_6():
    """6-vertex real projective plane (hemi-icosahedron)."""
    tris = (
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
        (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
    )
    return SimplicialComplex(tris, name="rp2_6")


def klein8():
    """An 8-vertex Klein bottle (16 triangles)."""
    tris = (
        (0, 2, 5), (0, 2, 4), (0, 1, 4), (0, 1, 5), (1, 3, 4), (1, 2, 3),
        (1, 2, 6), (1, 5, 6), (2, 3, 7), (2, 4, 6), (2, 5, 7), (3, 4, 5),
        (3, 5, 6), (3, 6, 7), (4, 5, 7), (4, 6, 7),
    )
    return SimplicialComplex(tris, name="klein8")


def disjoint_union(X, Y):
    offset = max(X.vertices) + 1
    shifted = tuple(tuple(v + offset for v in s) for s in Y.maximal_simplices)
    return SimplicialComplex(X.maximal_simplices + shifted, name=f"{X.name}+{Y.name}")


def wedge(X, Y, basepoints=None):
    """Identify ``basepoints[1]`` of Y with ``basepoints[0]`` of X (default: least vertices)."""
    bx, by = basepoints if basepoints is not None else (X.vertices[0], Y.vertices[0])
    if bx not in X.vertices:
        raise BasepointError(f"basepoint {bx} is not a vertex of {X.name or 'X'}")
    if by not in Y.vertices:
        raise BasepointError(f"basepoint {by} is not a vertex of {Y.name or 'Y'}")
    others = [v for v in Y.vertices if v != by]
    mapping = dict(zip(others, _fresh(X, len(others))))
    mapping[by] = bx
    Y2 = _relabel(Y, mapping)
    return SimplicialComplex(X.maximal_simplices + Y2.maximal_simplices, name=f"{X.name}v{Y.name}")


def cone(X):
    (apex,) = _fresh(X)
    return SimplicialComplex(
        tuple(s + (apex,) for s in X.maximal_simplices), name=f"C({X.name})"
    )


def suspension(X):
    north, south = _fresh(X, 2)
    tops = tuple(s + (north,) for s in X.maximal_simplices)
    bottoms = tuple(s + (south,) for s in X.maximal_simplices)
    return SimplicialComplex(tops + bottoms, name=f"S({X.name})")


BUILTINS = {
    "point": point,
    "two_points": lambda: SimplicialComplex(((0,), (1,)), name="two_points"),
    "s1": lambda: simplex_boundary(2),
    "s2": lambda: simplex_boundary(3),
    "s3": lambda: simplex_boundary(4),
    "torus7": torus7,
    "rp2_6": rp2_6,
    "klein8": klein8,
    "wedge_s1_s2": lambda: SimplicialComplex(
        wedge(simplex_boundary(2), simplex_boundary(3)).maximal_simplices, name="wedge_s1_s2"
    ),
}


def builtin(name):
    try:
        factory = BUILTINS[name]
    except KeyError:
        raise InvalidParameterError(
            f"unknown builtin complex {name!r}; choose from {', '.join(BUILTINS)}"
        ) from None
    X = factory()
    if X.name != name:
        X = SimplicialComplex(X.maximal_simplices, name=name)
    return X
