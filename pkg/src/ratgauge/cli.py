"""Command-line front end.

Every subcommand prints a plain-text report by default, or one JSON document
with ``--output machine`` (see ``MACHINE_SCHEMA_VERSION``). Usage errors exit
with status 2, domain errors with status 1 and a line ``error[CODE]: ...`` on
stderr.
"""

import argparse
import contextlib
import json
import sys

from . import __version__
from .errors import RatGaugeError
from .gauge import gauge_ranks, gl_ranks, lc_ranks, recover_cohomology, stabilization
from .graded import GradedDims
from .hspace import (
    GROUP_SPEC_GRAMMAR,
    PoincarePoly,
    exterior_poincare,
    factor_poincare,
    hnil_report,
    parse_group_spec,
    poincare_polynomial,
)
from .les import build_les, verify_exactness
from .simplicial import (
    BUILTINS,
    betti,
    builtin,
    euler_characteristic,
    parse_complex,
    reduced_betti,
    to_document,
)

MACHINE_SCHEMA_VERSION = 1
MAX_N = 64
SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class IOFailure(RatGaugeError):
    code = "E_IO"


class UsageFailure(RatGaugeError):
    code = "E_USAGE"


def _bounded_int(lo, hi=None):
    def convert(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < lo or (hi is not None and value > hi):
            bound = f">= {lo}" if hi is None else f"in [{lo}, {hi}]"
            raise argparse.ArgumentTypeError(f"must be {bound}, got {value}")
        return value

    return convert


def load_complex(source):
    if source.startswith("builtin:"):
        return builtin(source[len("builtin:"):])
    try:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IOFailure(f"cannot read complex file {source!r}: {exc.strerror}") from None
    return parse_complex(text)


def _complex_info(X):
    return {"name": X.name, "dim": X.dim, "f_vector": X.f_vector()}


def _keyed(g):
    return {str(k): v for k, v in GradedDims(g).items()}


def _table(title, g, lo=None, hi=None, label="degree"):
    g = GradedDims(g)
    lines = [title]
    lo = min(g, default=0) if lo is None else lo
    hi = max(g, default=lo) if hi is None else hi
    for d in range(lo, hi + 1):
        lines.append(f"  {label} {d:>3}: {g[d]}")
    if hi < lo:
        lines.append("  (all zero)")
    return lines


# --- subcommands ------------------------------------------------------------


def cmd_cohomology(args):
    X = load_complex(args.complex)
    if args.reduced:
        b = reduced_betti(X).scale(args.coeff_dim)
    else:
        b = betti(X, args.coeff_dim)
    chi = euler_characteristic(X)
    doc = {
        "complex": _complex_info(X),
        "reduced": args.reduced,
        "coeff_dim": args.coeff_dim,
        "betti": _keyed(b),
        "euler_characteristic": chi,
    }
    kind = "reduced Ȟ" if args.reduced else "Ȟ"
    text = [f"complex {X.name or args.complex}: dim {X.dim}, f-vector {X.f_vector()}"]
    text += _table(f"{kind} (finite complex) with Q^{args.coeff_dim} coefficients:", b, 0, X.dim)
    text.append(f"Euler characteristic: {chi}")
    return doc, text


def cmd_gauge(args):
    X = load_complex(args.complex)
    G = parse_group_spec(args.group)
    res = gauge_ranks(X, G)
    hnil = hnil_report(G, using_full_function_space=not args.based)
    doc = {"complex": _complex_info(X), "gauge": res.to_dict(), "hnil": hnil.to_dict()}
    top = max(G.max_degree, 1)
    text = [f"G = {G.name}, X = {X.name or args.complex}"]
    text += _table("pi_j(F(X,G)o) ⊗ Q:", res.free_ranks, 1, top, "j")
    text += _table("pi_j(F*(X,G)o) ⊗ Q:", res.based_ranks, 1, top, "j")
    decomp = " x ".join(f"K(Q^{r},{j})" for j, r in res.em_decomposition) or "point"
    text.append(f"F(X,G)o ~_Q {decomp}")
    h = "unknown" if hnil.hnil_function_space is None else str(hnil.hnil_function_space)
    text.append(f"Hnil_Q({hnil.function_space}) = {h}")
    return doc, text


def cmd_gl(args):
    X = load_complex(args.complex)
    b = betti(X)
    g = gl_ranks(X, args.n, b)
    doc = {"complex": _complex_info(X), "n": args.n, "gl_ranks": _keyed(g)}
    text = _table(f"pi_h(GL_{args.n}(C(X))o) ⊗ Q, X = {X.name or args.complex}:", g, 1, 2 * args.n - 1, "h")
    if args.stabilization:
        if args.n < 2:
            raise UsageFailure("--stabilization needs --n >= 2")
        rep = stabilization(X, args.n, b)
        doc["stabilization"] = rep.to_dict()
        text.append(f"GL_{args.n - 1} -> GL_{args.n} (injective: {rep.injective}):")
        text.append("      k  dim_prev  dim  cokernel")
        for k, a, d, c in rep.rows:
            text.append(f"    {k:>3}  {a:>8}  {d:>3}  {c:>8}")
    return doc, text


def cmd_lc(args):
    X = load_complex(args.complex)
    g = lc_ranks(X, args.n)
    doc = {"complex": _complex_info(X), "n": args.n, "lc_ranks": _keyed(g)}
    text = _table(f"pi_k(Lc_{args.n}(C(X))o) ⊗ Q, X = {X.name or args.complex}:", g, 1, 2 * args.n - 1, "k")
    return doc, text


def cmd_les(args):
    X = load_complex(args.complex)
    t = build_les(X, args.n, args.k_max)
    violations = verify_exactness(t)
    doc = {"complex": _complex_info(X), "les": t.to_dict(),
           "violations": [v.to_dict() for v in violations]}
    n = args.n
    text = [f"GL_{n - 1} -> GL_{n} -> Lc_{n} over X = {X.name or args.complex}, tensored with Q"]
    text.append("    k  GL_n-1  GL_n  Lc_n  rk i  rk gamma  rk d")
    for r in t.rows:
        text.append(
            f"  {r.k:>3}  {r.gl_prev:>6}  {r.gl:>4}  {r.lc:>4}  {r.rank_i:>4}  {r.rank_gamma:>8}  {r.rank_delta:>4}"
        )
    text.append(f"exact: {str(t.exact).lower()}")
    return doc, text


def _read_lc_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise IOFailure(f"cannot read Lc data {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise IOFailure(f"Lc data {path!r} is not JSON: {exc.msg} (line {exc.lineno})") from None
    if isinstance(doc, dict) and "result" in doc:
        if doc.get("schema") != MACHINE_SCHEMA_VERSION:
            raise IOFailure(f"Lc data {path!r} has unsupported schema {doc.get('schema')!r}")
        doc = doc["result"]
    try:
        ranks = {int(k): int(v) for k, v in doc["lc_ranks"].items()}
        n = int(doc["n"])
    except (KeyError, TypeError, ValueError, AttributeError):
        raise IOFailure(f"Lc data {path!r} lacks integer fields 'n' and 'lc_ranks'") from None
    return n, GradedDims(ranks)


def cmd_recover(args):
    if (args.complex is None) == (args.lc_file is None):
        raise UsageFailure("recover needs exactly one of --complex or --lc-file")
    if args.lc_file is not None:
        n, lc = _read_lc_file(args.lc_file)
        if args.n is not None and args.n != n:
            raise UsageFailure(f"--n {args.n} disagrees with n={n} recorded in {args.lc_file}")
        source = args.lc_file
    else:
        if args.n is None:
            raise UsageFailure("recover --complex needs --n")
        n = args.n
        X = load_complex(args.complex)
        lc = lc_ranks(X, n)
        source = X.name or args.complex
    rank = recover_cohomology(lc, n, args.s)
    doc = {"source": source, "n": n, "s": args.s, "lc_degree": 2 * n - 1 - args.s, "rank": rank}
    sup = str(args.s).translate(SUPERSCRIPTS)
    text = [f"rank Ȟ{sup} = {rank}  (from pi_{2 * n - 1 - args.s}(Lc_{n}) ⊗ Q, source {source})"]
    return doc, text


def cmd_factor(args):
    if (args.coeffs is None) == (args.group is None):
        raise UsageFailure("factor needs exactly one of --coeffs or --group")
    if args.group is not None:
        p = poincare_polynomial(parse_group_spec(args.group))
    else:
        try:
            p = PoincarePoly(tuple(int(c) for c in args.coeffs.split(",")))
        except ValueError:
            raise UsageFailure(f"--coeffs must be comma-separated integers, got {args.coeffs!r}") from None
    degrees = factor_poincare(p)
    assert exterior_poincare(degrees) == p
    doc = {"coeffs": list(p.coeffs), "generator_degrees": degrees}
    poly = " + ".join(
        ("1" if k == 0 else f"{'' if c == 1 else c}t" + (f"^{k}" if k > 1 else ""))
        for k, c in enumerate(p.coeffs)
        if c
    )
    gens = ", ".join(map(str, degrees)) or "none"
    return doc, [f"P(t) = {poly}", f"exterior generators in degrees: {gens}"]


def cmd_corpus(args):
    if args.name is not None:
        X = builtin(args.name)
        doc = {"name": args.name, "document": json.loads(to_document(X))}
        return doc, [to_document(X)]
    entries = []
    text = ["builtin complexes (use as --complex builtin:NAME):"]
    for name in BUILTINS:
        X = builtin(name)
        b = betti(X)
        entries.append({"name": name, "dim": X.dim, "f_vector": X.f_vector(), "betti": _keyed(b)})
        text.append(f"  {name:<12} dim {X.dim}  f {X.f_vector()}  betti {b.to_dict()}")
    return {"complexes": entries}, text


COMMANDS = {
    "cohomology": cmd_cohomology,
    "gauge": cmd_gauge,
    "gl": cmd_gl,
    "lc": cmd_lc,
    "les": cmd_les,
    "recover": cmd_recover,
    "factor": cmd_factor,
    "corpus": cmd_corpus,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ratgauge",
        description="Rational cohomology and rational homotopy of GL_n(C(X)), Lc_n(C(X)) "
        "and gauge groups for finite simplicial complexes X.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "machine"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text, need_complex=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if need_complex:
            p.add_argument("--complex", required=True, metavar="SRC",
                           help="complex file path or builtin:NAME")
        return p

    p = add("cohomology", "rational cohomology dimensions")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--coeff-dim", type=_bounded_int(1), default=1)

    p = add("gauge", "ranks of F(X,G)o and F*(X,G)o")
    p.add_argument("--group", required=True, help="group spec:\n" + GROUP_SPEC_GRAMMAR)
    p.add_argument("--based", action="store_true", help="report Hnil for the based space")

    p = add("gl", "ranks of GL_n(C(X))o")
    p.add_argument("--n", type=_bounded_int(1, MAX_N), required=True)
    p.add_argument("--stabilization", action="store_true", help="also report GL_{n-1} -> GL_n")

    p = add("lc", "ranks of Lc_n(C(X))o")
    p.add_argument("--n", type=_bounded_int(1, MAX_N), required=True)

    p = add("les", "rational long exact sequence of GL_{n-1} -> GL_n -> Lc_n")
    p.add_argument("--n", type=_bounded_int(2, MAX_N), required=True)
    p.add_argument("--k-max", type=_bounded_int(1, 4 * MAX_N), default=None)

    p = add("recover", "recover rank of H^s(X;Q) from pi_*(Lc_n) ⊗ Q", need_complex=False)
    p.add_argument("--complex", metavar="SRC", default=None)
    p.add_argument("--lc-file", metavar="PATH", default=None,
                   help="machine output of the lc subcommand")
    p.add_argument("--n", type=_bounded_int(1, MAX_N), default=None)
    p.add_argument("--s", type=_bounded_int(0), required=True)

    p = add("factor", "generator degrees from an exterior Poincaré polynomial", need_complex=False)
    p.add_argument("--coeffs", default=None, help="e.g. 1,1,0,1,1")
    p.add_argument("--group", default=None)

    p = add("corpus", "list builtin complexes or print one", need_complex=False)
    p.add_argument("--name", choices=tuple(BUILTINS), default=None)
    return parser


def render_machine(command, doc):
    payload = {"schema": MACHINE_SCHEMA_VERSION, "command": command, "result": doc}
    return json.dumps(payload, sort_keys=True, indent=2)


def run(argv=None, stdout=None, stderr=None):
    """Execute one invocation and return its exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        doc, text = COMMANDS[args.command](args)
    except UsageFailure as exc:
        stderr.write(f"ratgauge {args.command}: error: {exc}\n")
        return 2
    except RatGaugeError as exc:
        stderr.write(f"error[{exc.code}]: {exc}\n")
        return 1
    if args.output == "machine":
        stdout.write(render_machine(args.command, doc) + "\n")
    else:
        stdout.write("\n".join(text) + "\n")
    return 0


def main():
    sys.exit(run())
