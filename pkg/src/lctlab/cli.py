"""Command line interface.

    lctlab lct monomial --n 2 "x0^3, x1^2"
    lctlab lct jets --n 2 --max-order 5 "x0^2 + x1^3"
    lctlab lct bracket --n 2 --degree 8 "x0^2 + x1^3 + x1^9"
    lctlab explore spectrum --n 2 --degree 3 --jobs 8

Exit status: 0 on success, 2 on bad input, 3 when a computation budget or a
desk-scale guard is exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from . import estimator, explore, limits, newton, report
from .algebra import Ideal, ParseError, is_infinite, parse_polynomial
from .groebner import Budget, BudgetExceededError

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 2, 3

GLOBAL_KEYS = {"n", "out", "format", "max-order", "degree", "max-spairs",
               "max-terms", "jobs"}


class InputError(ValueError):
    pass


def read_config(path: str) -> dict:
    """``key = value`` lines using the long flag names; ``#`` starts a comment."""
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InputError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.lstrip("-")
            if key not in GLOBAL_KEYS:
                raise InputError(f"{path}:{lineno}: unknown key {key!r}")
            out[key.replace("-", "_")] = value
    return out


def _common(config: dict) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--n", type=int, help="number of variables x0..x{n-1}")
    g.add_argument("--out", help="write output to this path instead of stdout")
    g.add_argument("--format", choices=["json", "csv"], default="json")
    g.add_argument("--max-order", type=int, default=5, help="largest jet order")
    g.add_argument("--degree", type=int, help="truncation or enumeration degree")
    g.add_argument("--max-spairs", type=int, default=Budget.max_spairs)
    g.add_argument("--max-terms", type=int, default=Budget.max_terms)
    g.add_argument("--jobs", type=int, default=1)
    g.add_argument("--config", help="file of 'key = value' defaults")
    g.add_argument("-v", "--verbose", action="store_true")
    types = {"n": int, "max_order": int, "degree": int, "max_spairs": int,
             "max_terms": int, "jobs": int}
    p.set_defaults(**{k: types.get(k, str)(v) for k, v in config.items()})
    return p


def build_parser(config: dict | None = None) -> argparse.ArgumentParser:
    common = _common(config or {})
    parser = argparse.ArgumentParser(prog="lctlab", description=__doc__.split("\n")[0])
    groups = parser.add_subparsers(dest="group", required=True)

    lct = groups.add_parser("lct", help="thresholds of a single ideal")
    lsub = lct.add_subparsers(dest="command", required=True)
    for name, help_ in [("monomial", "exact lct of a monomial ideal (Newton oracle)"),
                        ("jets", "jet-fiber dimension profile and upper bounds"),
                        ("bracket", "bracket from the truncation a + m^degree"),
                        ("estimate", "combined lower/upper bracket")]:
        sp = lsub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("ideal", help="comma-separated generators")
        if name == "estimate":
            sp.add_argument("--weights", help="weight vectors, e.g. '1,1;3,2'")

    seq = groups.add_parser("seq", help="explicit families with predicted thresholds")
    ssub = seq.add_subparsers(dest="command", required=True)
    sp = ssub.add_parser("ts-shift", parents=[common], help="f + sum y_i^b")
    sp.add_argument("ideal", metavar="polynomial")
    sp.add_argument("--c", help="lct of f as a/b (default: certified from f)")
    for name in ("t-power", "power-scale"):
        sp = ssub.add_parser(name, parents=[common])
        sp.add_argument("ideal")
        sp.add_argument("--m-max", type=int, default=6)
        sp.add_argument("--c", help="lct of the ideal (default: oracle)")
    sp = ssub.add_parser("cylinder", parents=[common], help="add an unused variable")
    sp.add_argument("ideal")
    sp = ssub.add_parser("ladder", parents=[common], help="blow-up ladder quotients")
    for flag in ("--ordF", "--kappaF", "--ordF0", "--kappaF0"):
        sp.add_argument(flag, type=int, required=True)
    sp.add_argument("--m-max", type=int, default=10)
    sp.add_argument("--eps", default="1/100")

    exp = groups.add_parser("explore", help="monomial spectra and accumulation")
    esub = exp.add_subparsers(dest="command", required=True)
    sp = esub.add_parser("spectrum", parents=[common])
    sp = esub.add_parser("accumulation", parents=[common])
    sp.add_argument("--m-max", type=int, default=6)
    return parser


def _budget(args) -> Budget:
    return Budget(max_spairs=args.max_spairs, max_terms=args.max_terms)


def _ideal(args) -> Ideal:
    if args.n is None:
        raise InputError("--n is required")
    return Ideal.parse(args.ideal, args.n)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {text!r}") from None


def _input_doc(a: Ideal) -> dict:
    return {"n": a.n, "generators": [g.to_string() for g in a.generators]}


def cmd_lct_monomial(args):
    a = _ideal(args)
    value, cert = newton.monomial_lct(a)
    doc = report.document(_input_doc(a), "newton", lct=value, exact=True,
                          certificate=cert.as_dict() if cert else None,
                          diagnostics={"verified": cert.verify() if cert else True,
                                       "note": "Newton polyhedron oracle for monomial ideals "
                                               "(Howald); not derived from jets"})
    rows = [["lct", value]]
    return doc, (["quantity", "value"], rows)


def cmd_lct_jets(args):
    a = _ideal(args)
    prof = estimator.jet_profile(a, args.max_order, _budget(args))
    best, arg = prof.best()
    running = prof.running_minimum()
    profile = [{"m": r.m, "fiber_dim": r.fiber_dim, "bound": r.bound,
                "running_min": run, "error": r.error}
               for r, run in zip(prof.records, running)]
    doc = report.document(
        _input_doc(a), "jets",
        bracket={"lower": None, "upper": best, "upper_provenance":
                 f"jet-order-{arg}" if arg is not None else "dimension-bound"},
        profile=profile,
        candidate=estimator.stable_candidate(prof),
        diagnostics={"per_order": {str(r.m): r.diagnostics for r in prof.records}})
    rows = [[r["m"], r["fiber_dim"], r["bound"], r["running_min"]] for r in profile]
    return doc, (["m", "fiber_dim", "bound", "running_min"], rows)


def _bracket_payload(b: estimator.LctBracket) -> dict:
    return {"lower": b.lower, "upper": b.upper, "width": b.width, "exact": b.exact,
            "lower_provenance": b.lower_provenance, "upper_provenance": b.upper_provenance,
            "candidate": b.candidate, "notes": list(b.notes)}


def cmd_lct_bracket(args):
    a = _ideal(args)
    d = args.degree or 8
    budget = _budget(args)
    b = limits.truncation_bracket(
        a, d, lambda t: estimator.estimate_lct(t, args.max_order, budget=budget))
    doc = report.document({**_input_doc(a), "degree": d}, "truncation",
                          bracket=_bracket_payload(b))
    return doc, (["lower", "upper", "width", "exact"], [[b.lower, b.upper, b.width, b.exact]])


def _parse_weights(text: str | None, n: int):
    if not text:
        return None
    out = []
    for chunk in text.split(";"):
        try:
            w = tuple(int(x) for x in chunk.split(","))
        except ValueError:
            raise InputError(f"bad weight vector {chunk!r}") from None
        if len(w) != n:
            raise InputError(f"weight {w} needs {n} entries")
        out.append(w)
    return out


def cmd_lct_estimate(args):
    a = _ideal(args)
    profiles: list = []
    b = estimator.estimate_lct(a, args.max_order, _parse_weights(args.weights, a.n),
                               _budget(args), profiles)
    extra = {}
    if profiles:
        extra["profile"] = [{"m": r.m, "fiber_dim": r.fiber_dim, "bound": r.bound,
                             "error": r.error} for r in profiles[0].records]
    doc = report.document(_input_doc(a), "estimate", bracket=_bracket_payload(b), **extra)
    return doc, (["lower", "upper", "exact", "lower_provenance", "upper_provenance"],
                 [[b.lower, b.upper, b.exact, b.lower_provenance, b.upper_provenance]])


def _certified(a: Ideal):
    return newton.monomial_lct(a)[0] if a.is_monomial() else None


def _sequence_output(method: str, input_: dict, rows: list, diagnostics=None):
    doc = report.document(input_, method, rows=[dict(zip(report.SEQUENCE_COLUMNS, r))
                                                for r in rows],
                          diagnostics=diagnostics or {})
    return doc, (report.SEQUENCE_COLUMNS, rows)


def cmd_seq_ts_shift(args):
    if args.n is None:
        raise InputError("--n is required")
    f = parse_polynomial(args.ideal, args.n)
    if args.c is not None:
        c = _fraction(args.c)
    else:
        c = limits.diagonal_lct(f)
        if c is None and f.is_monomial():
            c = newton.monomial_lct(Ideal(f.n, [f]))[0]
        if c is None:
            raise InputError("cannot certify lct(f); pass --c")
    g, predicted = limits.thom_sebastiani_shift(f, c)
    certified = limits.diagonal_lct(g)
    lo = hi = certified
    if certified is None:
        b = estimator.estimate_lct(Ideal(g.n, [g]), args.max_order, budget=_budget(args))
        lo, hi = b.lower, b.upper
    row = ["thom-sebastiani", c.denominator - c.numerator, predicted, certified, lo, hi]
    return _sequence_output("seq/ts-shift", {"n": f.n, "f": f.to_string(), "c": c},
                            [row], {"g": g.to_string(), "g_n": g.n,
                                    "certified_by": "diagonal" if certified is not None else None})


def cmd_seq_t_power(args):
    a = _ideal(args)
    c = _fraction(args.c) if args.c else None
    rows = []
    for m in range(1, args.m_max + 1):
        b, predicted = limits.t_power_shift(a, m, c)
        cert = _certified(b)
        rows.append(["t-power", m, predicted, cert, cert, cert])
    return _sequence_output("seq/t-power", _input_doc(a), rows)


def cmd_seq_power_scale(args):
    a = _ideal(args)
    c = _fraction(args.c) if args.c else None
    rows = []
    for m in range(1, args.m_max + 1):
        b, predicted = limits.power_scale(a, m, c)
        cert = _certified(b)
        rows.append(["power-scale", m, predicted, cert, cert, cert])
    return _sequence_output("seq/power-scale", _input_doc(a), rows)


def cmd_seq_cylinder(args):
    a = _ideal(args)
    b = limits.cylinder_extend(a)
    rows = []
    diag = {}
    if a.is_monomial():
        before, after = _certified(a), _certified(b)
        rows.append(["cylinder", a.n, before, before, before, before])
        rows.append(["cylinder", b.n, before, after, after, after])
    else:
        pa = estimator.jet_profile(a, args.max_order, _budget(args))
        pb = estimator.jet_profile(b, args.max_order, _budget(args))
        # a free variable adds m fiber dimensions at order m
        diag["jet_shift_consistent"] = all(
            rb.bound == ra.bound + Fraction(1, ra.m + 1)
            for ra, rb in zip(pa.records, pb.records) if ra.bound is not None and rb.bound is not None)
        for n, prof in ((a.n, pa), (b.n, pb)):
            best, _ = prof.best()
            rows.append(["cylinder", n, None, None, None, best])
    return _sequence_output("seq/cylinder", _input_doc(a), rows, diag)


def cmd_seq_ladder(args):
    state = limits.LadderState(args.ordF, args.kappaF, args.ordF0, args.kappaF0)
    rows = []
    start = 0 if args.ordF0 > 0 else 1
    for m in range(start, args.m_max + 1):
        rows.append(["ladder", m, limits.blowup_ladder(state.step(m)), None, None, None])
    eps = _fraction(args.eps)
    return _sequence_output(
        "seq/ladder",
        {"ordF_a": args.ordF, "kappaF": args.kappaF, "ordF0_a": args.ordF0, "kappaF0": args.kappaF0},
        rows, {"limit": limits.ladder_limit(state), "eps": eps,
               "converged_after": limits.ladder_convergence_index(state, eps)})


def _spectrum_args(args):
    if args.n is None or args.degree is None:
        raise InputError("--n and --degree are required")
    return args.n, args.degree


def cmd_explore_spectrum(args):
    n, d = _spectrum_args(args)
    spec = explore.lct_spectrum(n, d, jobs=max(1, args.jobs))
    doc = report.document({"n": n, "degree": d}, "newton-spectrum",
                          spectrum={"values": list(spec.values), "count": spec.count},
                          diagnostics={"distinct": len(spec.values)})
    return doc, (["value"], [[v] for v in spec.values])


def cmd_explore_accumulation(args):
    n, d = _spectrum_args(args)
    if n < 1:
        raise InputError("--n must be at least 1")
    spectra = [explore.lct_spectrum(k, e, jobs=max(1, args.jobs))
               for k in range(0, n + 1) for e in range(1, d + 1)]
    # one t-power family per distinct value in dimension n-1 (first ideal found)
    families = []
    if n - 1 >= 1:
        _, table = explore.lct_spectrum(n - 1, d, with_ideals=True)
        seen = set()
        for ident, value in table.items():
            if value not in seen and not is_infinite(value):
                seen.add(value)
                families.append(explore.t_power_family(Ideal.monomial(n - 1, ident), args.m_max))
    reports = explore.accumulation_scan(families, spectra)
    payload = [{"target": r.target, "direction": r.direction, "confirmed": r.confirmed,
                "verdict": r.verdict, "witness": [{"tag": t, "value": v} for t, v in r.witness]}
               for r in reports]
    doc = report.document({"n": n, "degree": d, "m_max": args.m_max}, "accumulation",
                          reports=payload)
    rows = [[r.direction, r.target, r.confirmed, r.verdict] for r in reports]
    return doc, (["direction", "target", "confirmed", "verdict"], rows)


COMMANDS = {
    ("lct", "monomial"): cmd_lct_monomial,
    ("lct", "jets"): cmd_lct_jets,
    ("lct", "bracket"): cmd_lct_bracket,
    ("lct", "estimate"): cmd_lct_estimate,
    ("seq", "ts-shift"): cmd_seq_ts_shift,
    ("seq", "t-power"): cmd_seq_t_power,
    ("seq", "power-scale"): cmd_seq_power_scale,
    ("seq", "cylinder"): cmd_seq_cylinder,
    ("seq", "ladder"): cmd_seq_ladder,
    ("explore", "spectrum"): cmd_explore_spectrum,
    ("explore", "accumulation"): cmd_explore_accumulation,
}


def _config_from_argv(argv: list[str]) -> dict:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    return read_config(known.config) if known.config else {}


def cli_main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        config = _config_from_argv(argv)
    except (OSError, InputError) as exc:
        print(f"lctlab: {exc}", file=sys.stderr)
        return EXIT_INPUT
    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        doc, (header, rows) = COMMANDS[args.group, args.command](args)
    except BudgetExceededError as exc:
        print(f"lctlab: budget exceeded: {exc} {exc.diagnostics}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, InputError, ValueError) as exc:
        print(f"lctlab: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = report.dumps(doc) if args.format == "json" else report.csv_text(header, rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
