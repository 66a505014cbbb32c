"""Command-line interface.

Subcommands: wedge, lambda-j, kernel, cohomology, hilbert, betti, real-model,
verify-wedge-equivalence, nest, corpus, corpus-check.  Inputs are the JSON
schemas of :mod:`wedgeforge.serialize`; ``--complex`` and ``--lambda`` also
accept bundled corpus names (``two_points``, ``cp1``, ...).  Output is
canonical JSON (sorted keys, fixed indent) or aligned text with ``--format
text``.  Exit codes: 0 success/pass, 1 verification failure, 2 input error.

Size guards keep default runs fast: total weight d(J) <= 16 for matrix work,
ambient dimension <= 12 for cubical models, degree <= 12 for graded
dimensions.  ``--override-guards`` lifts all three.  The environment variable
WEDGEFORGE_THREADS caps the worker count used by corpus-check.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from random import Random

from . import corpus as corpus_mod
from .charmaps import (
    CharPair,
    build_lambda_J,
    build_S_J,
    derived_column_order,
    kernel_S,
    verify_kernel_J,
    verify_lambda_J,
)
from .complexes import SimplicialComplex, join, validate_complex
from .errors import (
    DegreeTooLarge,
    NonPositiveEntry,
    ParseError,
    TheoremViolation,
    WedgeforgeError,
)
from .intlin import IntMatrix, kernel_basis, smith_normal_form
from .nests import make_nest, nest_report
from .polyprod import (
    cubical_homology,
    real_model,
    subspace_difference,
    verify_subspace_equality,
)
from .rings import (
    betti_MJ,
    eliminate_unit_variables,
    hilbert_weighted,
    presentation_condensed,
    presentation_standard,
)
from .serialize import (
    canonical_dumps,
    complex_from_obj,
    complex_to_obj,
    load_json,
    matrix_from_obj,
    matrix_to_obj,
)
from .wedge import d_of, wedge_J, wedged_from_nonfaces

D_GUARD = 16
AMBIENT_GUARD = 12
DEGREE_GUARD = 12

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2


def parse_weight_vector(s: str) -> tuple[int, ...]:
    """Comma-separated positive integers.

    >>> parse_weight_vector("2,1,3")
    (2, 1, 3)
    """
    parts = [p.strip() for p in s.split(",")]
    values = []
    for p in parts:
        if not p or not (p.isdigit() or (p[0] == "-" and p[1:].isdigit())):
            raise ParseError(f"cannot parse weight entry {p!r}")
        values.append(int(p))
    for v in values:
        if v < 1:
            raise NonPositiveEntry(f"weight entries must be >= 1, got {v}")
    return tuple(values)


def _threads() -> int:
    raw = os.environ.get("WEDGEFORGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _resolve_complex(ref: str) -> SimplicialComplex:
    if Path(ref).is_file():
        return complex_from_obj(load_json(ref))
    name = ref.removesuffix(".json")
    if name in corpus_mod.COMPLEXES:
        return corpus_mod.load_complex(name)
    raise ParseError(f"no file or bundled complex named {ref!r}")


def _resolve_matrix(ref: str) -> IntMatrix:
    if Path(ref).is_file():
        return matrix_from_obj(load_json(ref))
    name = ref.removesuffix(".json")
    if name in corpus_mod.MATRICES:
        return corpus_mod.load_matrix(name)
    raise ParseError(f"no file or bundled matrix named {ref!r}")


def _check_d_guard(J, override: bool) -> None:
    if not override and d_of(J) > D_GUARD:
        raise ParseError(
            f"d(J) = {d_of(J)} exceeds the guard {D_GUARD} (use --override-guards)"
        )


def _render_generic(obj, indent="") -> str:
    lines = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            value = obj[key]
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{indent}{key}:")
                lines.append(_render_generic(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_flat(value)}")
    elif isinstance(obj, list):
        for value in obj:
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{indent}-")
                lines.append(_render_generic(value, indent + "  "))
            else:
                lines.append(f"{indent}- {_flat(value)}")
    else:
        lines.append(f"{indent}{_flat(obj)}")
    return "\n".join(lines)


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(x, (dict, list)) for x in value)
    return False


def _flat(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(str(x) for x in value) + "]"
    return str(value)


def _emit(args, obj, text_renderer=None) -> None:
    if args.format == "json":
        sys.stdout.write(canonical_dumps(obj))
    elif text_renderer is not None:
        sys.stdout.write(text_renderer(obj))
    else:
        sys.stdout.write(_render_generic(obj) + "\n")


def _presentation_obj(P) -> dict:
    return {
        "variables": [
            {"name": n, "degree": d} for n, d in zip(P.variables, P.degrees)
        ],
        "monomial_generators": [list(g) for g in P.monomial_generators],
        "linear_forms": [list(f) for f in P.linear_forms],
    }


def _report_obj(report) -> dict:
    return {
        "passed": report.passed,
        "facet_minors": [
            {"facet": list(f), "minor": v} for f, v in report.facet_minors
        ],
        "facet_failures": [list(f) for f in report.facet_failures],
        "face_failures": [
            {"face": list(f), "divisors": list(d)} for f, d in report.face_failures
        ],
    }


# -- command handlers --------------------------------------------------------


def cmd_wedge(args) -> int:
    K = _resolve_complex(args.complex)
    J = parse_weight_vector(args.J)
    _check_d_guard(J, args.override_guards)
    W = wedged_from_nonfaces(K, J) if args.oracle else wedge_J(K, J)
    out = {
        "J": list(W.J),
        "d": W.d,
        "base_vertex_count": W.base_vertex_count,
        "complex": complex_to_obj(W.complex),
    }
    code = EXIT_OK
    if args.check_order_independence:
        rng = Random(args.seed)
        m = len(K.vertices)
        base_order = [i for i in range(1, m + 1) for _ in range(J[i - 1] - 1)]
        all_equal = True
        for _ in range(args.check_order_independence):
            order = list(base_order)
            rng.shuffle(order)
            other = wedge_J(K, J, order=order, rng=rng)
            if set(other.complex.facets) != set(W.complex.facets):
                all_equal = False
        out["order_independence"] = {
            "orders_tried": args.check_order_independence,
            "all_equal": all_equal,
        }
        if not all_equal:
            code = EXIT_VERIFY_FAILED
    _emit(args, out)
    return code


def cmd_lambda_j(args) -> int:
    K = _resolve_complex(args.complex)
    lam = _resolve_matrix(args.lam)
    J = parse_weight_vector(args.J)
    _check_d_guard(J, args.override_guards)
    derived = build_lambda_J(CharPair(K, lam), J)
    out = {
        "J": list(J),
        "column_order": list(derived.column_order),
        "lambda_j": matrix_to_obj(derived.lambdaJ),
        "k_j": complex_to_obj(derived.KJ.complex),
    }
    if args.verify:
        report = verify_lambda_J(derived)  # raises TheoremViolation on failure
        out["verification"] = _report_obj(report)
    _emit(args, out)
    return EXIT_OK


def cmd_kernel(args) -> int:
    lam = _resolve_matrix(args.lam)
    J = parse_weight_vector(args.J)
    _check_d_guard(J, args.override_guards)
    out: dict = {"J": list(J)}
    code = EXIT_OK
    if args.complex:
        K = _resolve_complex(args.complex)
        pair = CharPair(K, lam)
        S = kernel_S(pair)
        SJ = build_S_J(S, J)
        derived = build_lambda_J(pair, J)
        verified = verify_kernel_J(derived, SJ)
        out["verified"] = verified
        if not verified:
            code = EXIT_VERIFY_FAILED
    else:
        S = kernel_basis(lam)
        SJ = build_S_J(S, J)
    out["S"] = matrix_to_obj(S)
    out["S_J"] = matrix_to_obj(SJ)
    out["row_order"] = list(derived_column_order(J))
    _emit(args, out)
    return code


def cmd_cohomology(args) -> int:
    K = _resolve_complex(args.complex)
    lam = _resolve_matrix(args.lam)
    J = parse_weight_vector(args.J)
    _check_d_guard(J, args.override_guards)
    if args.standard:
        P = presentation_standard(K, lam, J)
        flavor = "standard"
    else:
        P = presentation_condensed(K, lam, J)
        flavor = "condensed"
    if args.reduce:
        P = eliminate_unit_variables(P)
    out = {"J": list(J), "presentation": flavor, "reduced": bool(args.reduce)}
    out.update(_presentation_obj(P))
    _emit(args, out, _render_presentation)
    return EXIT_OK


def _render_presentation(out) -> str:
    names = [v["name"] for v in out["variables"]]
    lines = [f"Z[{', '.join(names)}] / (ideal)"]
    for g in out["monomial_generators"]:
        term = " ".join(
            f"{n}^{e}" if e > 1 else n for n, e in zip(names, g) if e
        )
        lines.append(f"  monomial: {term or '1'}")
    for f in out["linear_forms"]:
        term = " + ".join(f"{c}*{n}" for n, c in zip(names, f) if c)
        lines.append(f"  linear:   {term} = 0")
    return "\n".join(lines) + "\n"


def cmd_hilbert(args) -> int:
    K = _resolve_complex(args.complex)
    J = parse_weight_vector(args.J)
    if args.max_degree > DEGREE_GUARD and not args.override_guards:
        raise DegreeTooLarge(
            f"--max-degree {args.max_degree} exceeds guard {DEGREE_GUARD}"
        )
    series = hilbert_weighted(K, J)
    out = {
        "J": list(J),
        "numerator": list(series.numerator),
        "denominator_power": series.denominator_power,
        "coefficients": list(series.coefficients(args.max_degree)),
        "grading": "t tracks cohomological degree 2",
    }
    _emit(args, out)
    return EXIT_OK


def cmd_betti(args) -> int:
    K = _resolve_complex(args.complex)
    lam = _resolve_matrix(args.lam)
    J = parse_weight_vector(args.J)
    _check_d_guard(J, args.override_guards)
    result = betti_MJ(K, lam, J, verify=args.verify)
    out = {
        "J": list(J),
        "betti_even": list(result.even_ranks),
        "total": result.total,
        "manifold_certified": result.manifold_certified,
    }
    _emit(args, out)
    return EXIT_OK


def cmd_real_model(args) -> int:
    K = _resolve_complex(args.complex)
    powers = parse_weight_vector(args.powers)
    guard = None if args.override_guards else AMBIENT_GUARD
    model = real_model(K, powers, ambient_guard=guard)
    out = {
        "ambient_dim": model.ambient_dim,
        "powers": list(powers),
        "face_counts": list(model.face_counts()),
        "maximal_face_count": len(model.maximal_faces),
        "euler_characteristic": model.euler_characteristic(),
    }
    if args.homology:
        groups = cubical_homology(model)
        out["homology"] = [
            {"betti": g.betti, "torsion": list(g.torsion)} for g in groups
        ]
        out["total_betti"] = sum(g.betti for g in groups)
    _emit(args, out)
    return EXIT_OK


def cmd_verify_wedge_equivalence(args) -> int:
    K = _resolve_complex(args.complex)
    J = parse_weight_vector(args.J)
    guard = AMBIENT_GUARD if not args.override_guards else None
    if guard is not None and d_of(J) > guard:
        raise ParseError(
            f"ambient dimension {d_of(J)} exceeds {guard} (use --override-guards)"
        )
    equal = verify_subspace_equality(K, J)
    out = {"J": list(J), "equal": equal}
    if not equal:
        grouped_only, wedged_only = subspace_difference(K, J)
        out["first_difference"] = {
            "grouped_only": grouped_only[:1],
            "wedged_only": wedged_only[:1],
        }
    _emit(args, out)
    return EXIT_OK if equal else EXIT_VERIFY_FAILED


def cmd_nest(args) -> int:
    K = _resolve_complex(args.complex)
    lam = _resolve_matrix(args.lam)
    increments = parse_weight_vector(args.increments) if args.increments else ()
    nest = make_nest(CharPair(K, lam), increments)
    report = nest_report(nest)
    out = {
        "stages": [
            {
                "J": list(s.J),
                "d": s.d,
                "manifold_dim": s.manifold_dim,
                "betti_even": list(s.betti.even_ranks),
                "h2_rank": s.h2_rank,
            }
            for s in report.stages
        ],
        "steps": [
            {
                "from": list(st.J),
                "to": list(st.L),
                "multiplicities": list(st.multiplicities),
                "codimension": st.codimension,
                "summands": list(st.summands()),
            }
            for st in report.steps
        ],
        "checks": {
            "dims_step_by_two": report.dims_step_by_two,
            "h2_rank_constant": report.h2_rank_constant,
            "ranks_non_decreasing": report.ranks_non_decreasing,
        },
        "passed": report.passed,
    }
    _emit(args, out, _render_nest)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _render_nest(out) -> str:
    lines = ["stage  J                dim   h2  betti"]
    for s in out["stages"]:
        j = ",".join(map(str, s["J"]))
        betti = ",".join(map(str, s["betti_even"]))
        lines.append(
            f"{s['d']:>5}  {j:<15}  {s['manifold_dim']:>4}  {s['h2_rank']:>3}  ({betti})"
        )
    lines.append(f"passed: {out['passed']}")
    return "\n".join(lines) + "\n"


def cmd_corpus(args) -> int:
    if args.action == "list":
        out = {
            "complexes": list(corpus_mod.COMPLEXES),
            "matrices": list(corpus_mod.MATRICES),
            "base_pairs": dict(corpus_mod.BASE_PAIRS),
        }
        _emit(args, out)
        return EXIT_OK
    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)
    written = []
    for name in (*corpus_mod.COMPLEXES, *corpus_mod.MATRICES):
        path = dest / f"{name}.json"
        path.write_text(corpus_mod.resource_text(name), encoding="utf-8")
        written.append(str(path))
    _emit(args, {"written": written})
    return EXIT_OK


# -- corpus-check -------------------------------------------------------------


def _suite_join(rng: Random) -> tuple[int, int]:
    """Join unit and associativity over corpus and random complexes."""
    cases = failures = 0
    pool = [corpus_mod.load_complex(n) for n in corpus_mod.COMPLEXES]
    unit = SimplicialComplex((), [()])
    for K in pool:
        cases += 1
        if join(K, unit) != K:
            failures += 1
    for _ in range(10):
        parts = []
        offset = 0
        for _ in range(3):
            nv = rng.randint(1, 3)
            labels = [f"r{offset + i}" for i in range(nv)]
            nfac = rng.randint(1, 3)
            facets = [
                rng.sample(labels, rng.randint(1, nv)) for _ in range(nfac)
            ]
            parts.append(validate_complex(facets))
            offset += nv
        K1, K2, K3 = parts
        cases += 1
        left = join(join(K1, K2), K3)
        right = join(K1, join(K2, K3))
        if left != right:
            failures += 1
    return cases, failures


def _suite_snf(rng: Random) -> tuple[int, int]:
    """Certificates U @ A @ V == D on random and corpus matrices."""
    cases = failures = 0
    mats = [corpus_mod.load_matrix(n) for n in corpus_mod.MATRICES]
    for _ in range(25):
        r = rng.randint(1, 5)
        c = rng.randint(1, 5)
        mats.append(
            IntMatrix([[rng.randint(-4, 4) for _ in range(c)] for _ in range(r)])
        )
    for M in mats:
        cases += 1
        snf = smith_normal_form(M)
        ker = kernel_basis(M)
        ok = snf.verify(M) and (M @ ker).is_zero()
        if ker.cols:
            kdiv = smith_normal_form(ker).divisors
            ok = ok and all(d == 1 for d in kdiv)
        if not ok:
            failures += 1
    return cases, failures


def _suite_boundary(rng: Random) -> tuple[int, int]:
    """Boundary-of-boundary vanishes on corpus cubical models."""
    cases = failures = 0
    jobs = [
        ("two_points", (1, 1)),
        ("two_points", (2, 2)),
        ("two_points", (3, 1)),
        ("triangle", (1, 1, 1)),
        ("triangle", (2, 1, 1)),
        ("square", (1, 1, 1, 1)),
        ("square", (2, 1, 2, 1)),
    ]
    for name, powers in jobs:
        cases += 1
        K = corpus_mod.load_complex(name)
        model = real_model(K, powers)
        try:
            model.check_boundary_squares_to_zero()
        except WedgeforgeError:
            failures += 1
    return cases, failures


def _suite_order_independence(rng: Random) -> tuple[int, int]:
    cases = failures = 0
    jobs = [
        ("two_points", (3, 2)),
        ("triangle", (2, 2, 1)),
        ("square", (2, 1, 2, 1)),
        ("square", (3, 1, 1, 1)),
    ]
    for name, J in jobs:
        K = corpus_mod.load_complex(name)
        reference = wedge_J(K, J)
        m = len(K.vertices)
        base_order = [i for i in range(1, m + 1) for _ in range(J[i - 1] - 1)]
        for _ in range(5):
            cases += 1
            order = list(base_order)
            rng.shuffle(order)
            other = wedge_J(K, J, order=order, rng=rng)
            if set(other.complex.facets) != set(reference.complex.facets):
                failures += 1
    return cases, failures


def _corpus_weight_sweep(m: int, dmax: int):
    from itertools import combinations

    for d in range(m, dmax + 1):
        for cuts in combinations(range(1, d), m - 1):
            yield tuple(b - a for a, b in zip((0,) + cuts, cuts + (d,)))


def _suite_nonface_oracle(rng: Random) -> tuple[int, int]:
    """Iterated wedge equals the direct minimal non-face construction."""
    cases = failures = 0
    for name in corpus_mod.COMPLEXES:
        K = corpus_mod.load_complex(name)
        m = len(K.vertices)
        for J in _corpus_weight_sweep(m, m + 3):
            cases += 1
            if wedge_J(K, J).complex != wedged_from_nonfaces(K, J).complex:
                failures += 1
    return cases, failures


def _suite_derived_characteristic(rng: Random) -> tuple[int, int]:
    """Derived matrices stay characteristic and their kernels saturate."""
    cases = failures = 0
    for mname in corpus_mod.MATRICES:
        pair = corpus_mod.load_pair(mname)
        S = kernel_S(pair)
        for J in _corpus_weight_sweep(pair.m, pair.m + 3):
            cases += 1
            try:
                derived = build_lambda_J(pair, J)
                verify_lambda_J(derived)
                if not verify_kernel_J(derived, build_S_J(S, J)):
                    failures += 1
            except WedgeforgeError:
                failures += 1
    return cases, failures


def _suite_subspace_equality(rng: Random) -> tuple[int, int]:
    cases = failures = 0
    for name in corpus_mod.COMPLEXES:
        K = corpus_mod.load_complex(name)
        m = len(K.vertices)
        for J in _corpus_weight_sweep(m, m + 3):
            cases += 1
            if not verify_subspace_equality(K, J):
                failures += 1
    return cases, failures


def cmd_corpus_check(args) -> int:
    suites = {
        "join_unit_associativity": _suite_join,
        "snf_certificates": _suite_snf,
        "boundary_squares_to_zero": _suite_boundary,
        "wedge_order_independence": _suite_order_independence,
        "wedge_nonface_oracle": _suite_nonface_oracle,
        "derived_characteristic_kernel": _suite_derived_characteristic,
        "model_subspace_equality": _suite_subspace_equality,
    }
    results = {}
    workers = _threads()

    def run(item):
        name, fn = item
        return name, fn(Random(args.seed))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for name, payload in pool.map(run, suites.items()):
                results[name] = payload
    else:
        for name, fn in suites.items():
            results[name] = fn(Random(args.seed))

    total_failures = sum(f for _, f in results.values())
    out = {
        "seed": args.seed,
        "suites": [
            {"name": name, "cases": c, "failures": f}
            for name, (c, f) in results.items()
        ],
        "passed": total_failures == 0,
    }
    _emit(args, out)
    return EXIT_OK if total_failures == 0 else EXIT_VERIFY_FAILED


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wedgeforge",
        description="Exact computations for simplicial wedges and their toric manifolds.",
    )
    parser.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )
    parser.add_argument(
        "--override-guards",
        action="store_true",
        help="lift the size guards on d(J), ambient dimension, and degree",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        # Accepted after the subcommand as well; SUPPRESS keeps the main
        # parser's value when the flag is absent here.
        p.add_argument(
            "--format", choices=("json", "text"), default=argparse.SUPPRESS
        )
        p.add_argument(
            "--override-guards", action="store_true", default=argparse.SUPPRESS
        )

    def add_complex(p):
        p.add_argument("--complex", required=True, help="complex JSON path or corpus name")

    def add_lambda(p):
        p.add_argument(
            "--lambda", dest="lam", required=True, help="matrix JSON path or corpus name"
        )

    def add_J(p):
        p.add_argument("--J", required=True, help="comma-separated weight vector")

    p = sub.add_parser("wedge", help="build K(J)")
    add_common(p)
    add_complex(p)
    add_J(p)
    p.add_argument("--oracle", action="store_true", help="build from minimal non-faces")
    p.add_argument(
        "--check-order-independence",
        type=int,
        default=0,
        metavar="N",
        help="also try N random wedge orders",
    )
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_wedge)

    p = sub.add_parser("lambda-j", help="build the derived characteristic matrix")
    add_common(p)
    add_complex(p)
    add_lambda(p)
    add_J(p)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(fn=cmd_lambda_j)

    p = sub.add_parser("kernel", help="kernel matrices S and S(J)")
    add_common(p)
    add_lambda(p)
    add_J(p)
    p.add_argument("--complex", help="optional complex for full verification")
    p.set_defaults(fn=cmd_kernel)

    p = sub.add_parser("cohomology", help="ring presentation of the wedged manifold")
    add_common(p)
    add_complex(p)
    add_lambda(p)
    add_J(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--standard", action="store_true")
    group.add_argument("--condensed", action="store_true")
    p.add_argument("--reduce", action="store_true", help="eliminate unit variables")
    p.set_defaults(fn=cmd_cohomology)

    p = sub.add_parser("hilbert", help="weighted Stanley-Reisner Hilbert series")
    add_common(p)
    add_complex(p)
    add_J(p)
    p.add_argument("--max-degree", type=int, default=10)
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("betti", help="even Betti numbers via the h-vector")
    add_common(p)
    add_complex(p)
    add_lambda(p)
    add_J(p)
    p.add_argument("--verify", action="store_true", help="cross-check against graded dims")
    p.set_defaults(fn=cmd_betti)

    p = sub.add_parser("real-model", help="cubical model over (D^1, S^0) powers")
    add_common(p)
    add_complex(p)
    p.add_argument("--powers", required=True, help="comma-separated powers per vertex")
    p.add_argument("--homology", action="store_true")
    p.set_defaults(fn=cmd_real_model)

    p = sub.add_parser(
        "verify-wedge-equivalence",
        help="compare the grouped model of K with the model of K(J)",
    )
    add_common(p)
    add_complex(p)
    add_J(p)
    p.set_defaults(fn=cmd_verify_wedge_equivalence)

    p = sub.add_parser("nest", help="nest report for increasing weight vectors")
    add_common(p)
    add_complex(p)
    add_lambda(p)
    p.add_argument(
        "--increments",
        default="",
        help="comma-separated group indices, one per stage",
    )
    p.add_argument("--report", action="store_true", help="accepted for compatibility")
    p.set_defaults(fn=cmd_nest)

    p = sub.add_parser("corpus", help="list or export the bundled corpus")
    add_common(p)
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("--dest", default="corpus", help="target directory for export")
    p.set_defaults(fn=cmd_corpus)

    p = sub.add_parser("corpus-check", help="run the property suites")
    add_common(p)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_corpus_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except TheoremViolation as exc:
        print(f"wedgeforge: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except WedgeforgeError as exc:
        print(f"wedgeforge: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
