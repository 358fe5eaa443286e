"""Rational H-space models and exterior Poincaré polynomials.

A model is recorded only through its rational homotopy ranks: rationally a
connected H-space splits as a product of Eilenberg-Mac Lane spaces
``K(π_j ⊗ Q, j)``, so these ranks determine its rational homotopy type.
"""

import re
from dataclasses import dataclass
from typing import Optional

from .errors import FactorizationError, GroupSpecError, InvalidParameterError
from .graded import GradedDims


@dataclass(frozen=True)
class RationalHSpace:
    name: str
    homotopy_ranks: GradedDims
    finite_dim_cohomology: bool

    def __post_init__(self):
        ranks = GradedDims(self.homotopy_ranks)
        object.__setattr__(self, "homotopy_ranks", ranks)
        bad = [d for d in ranks if d < 1]
        if bad:
            raise InvalidParameterError(f"{self.name}: homotopy degrees must be >= 1, got {bad}")
        if self.finite_dim_cohomology:
            even = [d for d in ranks if d % 2 == 0]
            if even:
                raise InvalidParameterError(
                    f"{self.name}: finite-dimensional rational cohomology forces odd "
                    f"generators, but degrees {even} are even"
                )

    @property
    def max_degree(self):
        return self.homotopy_ranks.max_degree or 0

    def rank(self, degree):
        return self.homotopy_ranks[degree]

    def generator_degrees(self):
        """Generator degrees with multiplicity, ascending."""
        return [d for d, r in self.homotopy_ranks.items() for _ in range(r)]


def trivial():
    return RationalHSpace("trivial", GradedDims(), True)


def unitary_group(n):
    """``U(n)``, also a model of ``GL_n(C)``: one generator in each odd degree 1..2n-1."""
    if n < 1:
        raise InvalidParameterError(f"U(n) needs n >= 1, got {n}")
    return RationalHSpace(f"U({n})", GradedDims({2 * j - 1: 1 for j in range(1, n + 1)}), True)


def special_unitary_group(n):
    if n < 1:
        raise InvalidParameterError(f"SU(n) needs n >= 1, got {n}")
    return RationalHSpace(f"SU({n})", GradedDims({2 * j - 1: 1 for j in range(2, n + 1)}), True)


def symplectic_group(n):
    if n < 1:
        raise InvalidParameterError(f"Sp(n) needs n >= 1, got {n}")
    return RationalHSpace(f"Sp({n})", GradedDims({4 * j - 1: 1 for j in range(1, n + 1)}), True)


def odd_sphere(m):
    """Rational model ``K(Q, m)`` of the odd sphere ``S^m``."""
    if m < 1:
        raise InvalidParameterError(f"sphere dimension must be >= 1, got {m}")
    if m % 2 == 0:
        raise InvalidParameterError(
            f"S({m}) is an even sphere: it has two nonzero rational homotopy groups "
            "and is not modelled as a rational H-space here"
        )
    return RationalHSpace(f"S({m})", GradedDims({m: 1}), True)


def em_product(spec, name=None):
    """Product of Eilenberg-Mac Lane spaces ``∏ K(Q^rank, degree)``.

    Repeated degrees merge by adding their ranks.
    """
    merged = {}
    for degree, rank in spec:
        if degree < 1 or rank < 1:
            raise InvalidParameterError(
                f"K factor needs degree >= 1 and rank >= 1, got ({degree}, {rank})"
            )
        merged[degree] = merged.get(degree, 0) + rank
    if name is None:
        inner = ",".join(f"{d}:{r}" for d, r in sorted(merged.items()))
        name = f"K({inner})" if merged else "trivial"
    return RationalHSpace(
        name, GradedDims(merged), all(d % 2 == 1 for d in merged)
    )


def product(G, H):
    return RationalHSpace(
        f"{G.name} x {H.name}",
        G.homotopy_ranks + H.homotopy_ranks,
        G.finite_dim_cohomology and H.finite_dim_cohomology,
    )


# --- Poincaré polynomials -------------------------------------------------


@dataclass(frozen=True)
class PoincarePoly:
    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c or c[0] != 1:
            raise FactorizationError("Poincaré polynomial must have constant term 1")
        if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in c):
            raise FactorizationError("Poincaré polynomial coefficients must be nonnegative integers")
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, t):
        return sum(c * t**k for k, c in enumerate(self.coeffs))


def exterior_poincare(degrees):
    """Expand ``∏ (1 + t^d)`` over the given generator degrees."""
    coeffs = [1]
    for d in degrees:
        if d < 1:
            raise InvalidParameterError(f"generator degree must be >= 1, got {d}")
        out = coeffs + [0] * d
        for k, c in enumerate(coeffs):
            out[k + d] += c
        coeffs = out
    return PoincarePoly(tuple(coeffs))


def poincare_polynomial(G):
    """Poincaré polynomial of ``H*(G; Q)`` when it is finite-dimensional."""
    if not G.finite_dim_cohomology:
        raise FactorizationError(f"{G.name} has infinite-dimensional rational cohomology")
    return exterior_poincare(G.generator_degrees())


def factor_poincare(p):
    """Recover generator degrees of a finite-dimensional exterior algebra.

    Repeatedly strip the lowest nonzero positive degree ``d`` by exact
    division by ``1 + t^d``.

    >>> factor_poincare(PoincarePoly((1, 1, 0, 1, 1)))
    [1, 3]
    """
    if not isinstance(p, PoincarePoly):
        p = PoincarePoly(tuple(p))
    rest = list(p.coeffs)
    degrees = []
    while len(rest) > 1:
        d = next(k for k in range(1, len(rest)) if rest[k] != 0)
        if d % 2 == 0:
            raise FactorizationError(
                f"not the Poincaré polynomial of a finite-dimensional rational H-space: "
                f"an even generator in degree {d} would be needed"
            )
        # divide by (1 + t^d): q[k] = rest[k] - q[k-d]
        q = [0] * (len(rest) - d)
        for k in range(len(q)):
            q[k] = rest[k] - (q[k - d] if k >= d else 0)
            if q[k] < 0:
                raise FactorizationError(
                    "not the Poincaré polynomial of a finite-dimensional rational H-space: "
                    f"dividing by 1 + t^{d} leaves a negative coefficient"
                )
        for k in range(len(q), len(rest)):
            if rest[k] != (q[k - d] if k >= d else 0):
                raise FactorizationError(
                    "not the Poincaré polynomial of a finite-dimensional rational H-space: "
                    f"1 + t^{d} does not divide it exactly"
                )
        degrees.append(d)
        rest = q
        while len(rest) > 1 and rest[-1] == 0:
            rest.pop()
    return degrees


# --- homotopical nilpotency ----------------------------------------------


@dataclass(frozen=True)
class HnilReport:
    group: str
    function_space: str
    hnil_group: Optional[int]
    hnil_function_space: Optional[int]
    rational_h_equivalence: Optional[bool]
    note: str

    def to_dict(self):
        return {
            "group": self.group,
            "function_space": self.function_space,
            "hnil_group": self.hnil_group,
            "hnil_function_space": self.hnil_function_space,
            "rational_h_equivalence": self.rational_h_equivalence,
            "note": self.note,
        }


def hnil_report(G, using_full_function_space=True):
    """Rational homotopical nilpotency, known only when ``H*(G; Q)`` is finite-dimensional.

    Nothing is computed from commutator maps; outside that case the answer is
    reported as unknown (``None``).
    """
    space = f"F(X,{G.name})o" if using_full_function_space else f"F*(X,{G.name})o"
    if G.finite_dim_cohomology:
        return HnilReport(
            G.name, space, 1, 1, True,
            "odd generators only: rational Samelson bracket vanishes, so the group and "
            "its gauge spaces are rationally homotopy-abelian and the Eilenberg-Mac Lane "
            "decomposition is a rational H-equivalence",
        )
    return HnilReport(
        G.name, space, None, None, None,
        "even-degree rational homotopy present: Hnil_Q is not determined by ranks alone",
    )


# --- group-spec strings -----------------------------------------------------

_FACTOR = re.compile(
    r"\s*(?:(?P<fam>U|SU|Sp|S)\(\s*(?P<n>\d+)\s*\)"
    r"|K\((?P<k>[^()]*)\)"
    r"|(?P<triv>trivial))\s*"
)
_KTERM = re.compile(r"\s*(\d+)\s*:\s*(\d+)\s*")

GROUP_SPEC_GRAMMAR = """\
spec    := factor ('*' factor)*
factor  := 'U(' n ')' | 'SU(' n ')' | 'Sp(' n ')' | 'S(' m ')' | 'K(' [term (',' term)*] ')' | 'trivial'
term    := degree ':' rank
"""


def parse_group_spec(text):
    """Parse e.g. ``U(3)``, ``S(5)``, ``K(3:1,7:2)``, ``U(2) * Sp(1)``."""
    if not text.strip():
        raise GroupSpecError("empty group spec")
    G = None
    pos = 0
    for part in text.split("*"):
        m = _FACTOR.fullmatch(part)
        if m is None:
            col = pos + len(part) - len(part.lstrip()) + 1
            raise GroupSpecError(
                f"cannot parse group factor {part.strip()!r} at column {col}; expected "
                "U(n), SU(n), Sp(n), S(m), K(d:r,...) or trivial"
            )
        if m["fam"]:
            n = int(m["n"])
            ctor = {"U": unitary_group, "SU": special_unitary_group,
                    "Sp": symplectic_group, "S": odd_sphere}[m["fam"]]
            try:
                H = ctor(n)
            except InvalidParameterError as exc:
                raise GroupSpecError(str(exc)) from None
        elif m["triv"]:
            H = trivial()
        else:
            body = m["k"]
            terms = []
            if body.strip():
                offset = pos + part.index("K(") + 2
                for term in body.split(","):
                    tm = _KTERM.fullmatch(term)
                    if tm is None:
                        raise GroupSpecError(
                            f"bad K term {term.strip()!r} at column {offset + 1}; expected degree:rank"
                        )
                    terms.append((int(tm[1]), int(tm[2])))
                    offset += len(term) + 1
            try:
                H = em_product(terms)
            except InvalidParameterError as exc:
                raise GroupSpecError(str(exc)) from None
        G = H if G is None else product(G, H)
        pos += len(part) + 1
    if "*" not in text:
        return G
    return RationalHSpace(text.strip(), G.homotopy_ranks, G.finite_dim_cohomology)
