"""Command-line front end.

Every subcommand echoes its inputs, emits canonical JSON (sorted keys,
rationals as ``p/q`` strings), and is deterministic: identical inputs
produce byte-identical output.  Exit codes: 0 success, 2 parse error,
3 hypothesis violation, 4 numeric precondition failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import braid as braid_mod
from . import cfrac as cfrac_mod
from . import legendrian, limits, surgery
from .braid import BraidError
from .cfrac import CFracError, SlopeVector
from .legendrian import HypothesisError, LegendrianError
from .limits import CoeffStream, LimitsError, SignTuple
from .surgery import SingularityError, SurgeryError

SCHEMA = 1

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3
EXIT_NUMERIC = 4


def parse_slope(text: str) -> Fraction:
    """A positive slope: ``p/q``, ``n+p/q``, or a plain integer."""
    text = text.strip()
    try:
        if "+" in text:
            whole, frac = text.split("+", 1)
            value = Fraction(int(whole)) + Fraction(frac)
        else:
            value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CFracError(f"cannot parse slope {text!r}: {exc}") from None
    if value <= 0:
        raise CFracError(
            f"slope {text!r} is not positive; only positive surgeries expand"
        )
    return value


def parse_slopes(text: str) -> SlopeVector:
    return SlopeVector(tuple(parse_slope(part) for part in text.split(",")))


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise LimitsError(f"cannot parse integer list {text!r}: {exc}") from None


def frac_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def jsonify(value):
    """Recursively rewrite values into canonical JSON form."""
    if isinstance(value, Fraction):
        return frac_str(value)
    if isinstance(value, dict):
        return {key: jsonify(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonify(item) for item in value]
    return value


def emit(data: dict, table: bool = False) -> None:
    data = jsonify(data)
    if table:
        for line in _table_lines(data, ""):
            print(line)
    else:
        print(json.dumps(data, sort_keys=True, indent=2))


def _table_lines(data, prefix: str):
    if isinstance(data, dict):
        for key in sorted(data):
            yield from _table_lines(data[key], f"{prefix}.{key}" if prefix else key)
    else:
        yield f"{prefix} = {json.dumps(data, sort_keys=True)}"


def _echo(args: argparse.Namespace, fields) -> dict:
    return {name: getattr(args, name) for name in fields}


def cmd_analyze(args) -> int:
    word = braid_mod.parse_braid(args.braid)
    parts = braid_mod.permutation(word)
    stats = braid_mod.crossing_stats(word)
    report = braid_mod.check_hypothesis(word, args.assert_hyperbolic)
    floor = {
        str(d): braid_mod.dehornoy_floor_at_least(word, d) for d in (1, 2, 3)
    }
    emit(
        {
            "schema": SCHEMA,
            "subcommand": "analyze",
            "inputs_echo": _echo(args, ["braid", "assert_hyperbolic"]),
            "braid": {
                "canonical": braid_mod.format_braid(word),
                "strands": word.strands,
                "length": len(word),
                "c_plus": word.c_plus,
                "c_minus": word.c_minus,
                "exponent_sum": word.exponent_sum,
            },
            "components": {
                "permutation": parts.permutation,
                "component_of": parts.component_of,
                "cycle_type": parts.cycle_type,
                "count": parts.num_components,
                "is_knot": parts.is_knot,
            },
            "crossing_stats": {
                "per_component": stats.per_component,
                "inter_negative": stats.inter_negative,
                "d_minus": stats.d_minus,
                "linking": stats.linking,
                "axis_linking": stats.axis_linking,
            },
            "hypothesis": {
                "is_knot": report.is_knot,
                "cond_tb": report.cond_tb,
                "cond_parity": report.cond_parity,
                "per_component_cond": report.per_component_cond,
                "hyperbolicity": report.hyperbolicity,
            },
            "dehornoy_floor_at_least": floor,
        },
        args.table,
    )
    return EXIT_OK


def cmd_cfrac(args) -> int:
    value = Fraction(args.value)
    if 0 < value < 1:
        target = Fraction(-value.denominator, value.numerator)
    elif value < -1:
        target = value
    else:
        raise CFracError(
            f"{args.value!r} is neither below -1 nor a slope in (0, 1)"
        )
    expansion = cfrac_mod.neg_cfrac(target)
    emit(
        {
            "schema": SCHEMA,
            "subcommand": "cfrac",
            "inputs_echo": _echo(args, ["value"]),
            "expanded": target,
            "coeffs": expansion.coeffs,
            "phi": cfrac_mod.phi(expansion),
            "convergents": cfrac_mod.convergents(
                expansion.coeffs, len(expansion.coeffs) - 1
            ),
        },
        args.table,
    )
    return EXIT_OK


def cmd_surgery(args) -> int:
    word = braid_mod.parse_braid(args.braid)
    slopes = parse_slopes(args.slopes)
    rational = surgery.rational_surgery(word, slopes)
    expanded = (
        surgery.expand_general(rational)
        if args.general
        else surgery.slam_dunk_expand(rational)
    )
    report = surgery.homology(expanded)
    emit(
        {
            "schema": SCHEMA,
            "subcommand": "surgery",
            "inputs_echo": _echo(args, ["braid", "slopes", "general"]),
            "rational_diagram": surgery.diagram_to_dict(rational),
            "expanded_diagram": surgery.diagram_to_dict(expanded),
            "linking_matrix": surgery.linking_matrix(expanded),
            "homology": {
                "det": report.det,
                "h1_order": report.h1_order,
                "elementary_divisors": report.elementary_divisors,
                "free_rank": report.free_rank,
                "signature": report.signature,
                "euler_char": report.euler_char,
            },
        },
        args.table,
    )
    return EXIT_OK


def cmd_enumerate(args) -> int:
    word = braid_mod.parse_braid(args.braid)
    slopes = parse_slopes(args.slopes)
    enum = legendrian.enumerate_weinstein(word, slopes)
    envelope = {
        "schema": SCHEMA,
        "subcommand": "enumerate",
        "inputs_echo": _echo(args, ["braid", "slopes", "count_only", "isom_order"]),
        "count": enum.count,
        "menu_sizes": [len(menu) for menu in enum.menus],
    }
    if args.isom_order is not None:
        envelope["non_contactomorphic_lower_bound"] = (
            legendrian.contactomorphism_lower_bound(enum.count, args.isom_order)
        )
    if args.count_only:
        emit(envelope, args.table)
        return EXIT_OK
    if args.table:
        emit(envelope, True)
    else:
        print(json.dumps(jsonify(envelope), sort_keys=True, separators=(",", ":")))
    for diagram in enum:
        if not legendrian.validate_weinstein(diagram):
            raise LegendrianError("enumeration produced an invalid diagram")
        print(
            json.dumps(
                jsonify(legendrian.weinstein_to_dict(diagram)),
                sort_keys=True,
                separators=(",", ":"),
            )
        )
    return EXIT_OK


def cmd_theta(args) -> int:
    word = braid_mod.parse_braid(args.braid)
    slopes = parse_slopes(args.slope)
    enum = legendrian.enumerate_weinstein(word, slopes)
    echo = _echo(args, ["braid", "slope", "tuple"])
    if args.tuple is not None:
        ks = parse_int_list(args.tuple)
        diagram = enum.diagram_for(ks)
        report = legendrian.theta(diagram)
        emit(
            {
                "schema": SCHEMA,
                "subcommand": "theta",
                "inputs_echo": echo,
                "rotation_tuple": diagram.rotation_tuple,
                "theta_report": _theta_dict(report),
            },
            args.table,
        )
        return EXIT_OK
    entries = []
    groups: dict[Fraction, list] = {}
    for ks in _all_tuples(enum):
        diagram = enum.diagram_for(ks)
        report = legendrian.theta(diagram)
        entries.append(
            {
                "tuple": ks,
                "rotation_tuple": diagram.rotation_tuple,
                "theta": report.theta,
                "c1_squared": report.c1_squared,
            }
        )
        groups.setdefault(report.theta, []).append(list(ks))
    emit(
        {
            "schema": SCHEMA,
            "subcommand": "theta",
            "inputs_echo": echo,
            "count": enum.count,
            "entries": entries,
            "theta_groups": [
                {"theta": value, "tuples": groups[value]}
                for value in sorted(groups)
            ],
        },
        args.table,
    )
    return EXIT_OK


def _all_tuples(enum):
    import itertools

    ranges = [range(1, len(menu) + 1) for menu in enum.menus]
    return itertools.product(*ranges)


def _theta_dict(report: legendrian.ThetaReport) -> dict:
    return {
        "c1_squared": report.c1_squared,
        "chi": report.chi,
        "sigma": report.sigma,
        "theta": report.theta,
        "h1_order": report.h1_order,
        "complete_invariant": report.complete_invariant,
    }


def cmd_limits(args) -> int:
    prefix = parse_int_list(args.coeffs) if args.coeffs else ()
    cycle = parse_int_list(args.cycle) if args.cycle else ()
    stream = CoeffStream(prefix, cycle)
    tail, pattern = _parse_tail(args.tail)
    tuple_prefix = parse_int_list(args.tuple_prefix) if args.tuple_prefix else ()
    sign_tuple = SignTuple(tuple_prefix, tail, pattern)
    n = args.levels
    blocks = limits.block_decomposition(stream, sign_tuple, n)
    data = {
        "schema": SCHEMA,
        "subcommand": "limits",
        "inputs_echo": _echo(
            args, ["coeffs", "cycle", "tuple_prefix", "tail", "levels", "braid"]
        ),
        "coeffs": stream.coeffs(n),
        "sign_tuple": limits.sign_tuple_to_dict(sign_tuple),
        "tuple": sign_tuple.values(stream, n),
        "menus": [stream.menu_size(i) for i in range(n + 1)],
        "blocks": blocks.blocks,
        "normal_form": limits.shuffle_normal_form(blocks),
        "end_slopes": [limits.end_slope(stream, i) for i in range(n + 1)],
    }
    if stream.is_infinite:
        data["sign"] = limits.sign_of(stream, sign_tuple)
    if args.braid is not None:
        word = braid_mod.parse_braid(args.braid)
        data["truncation_consistency"] = limits.truncation_consistency(
            word, stream, sign_tuple, n
        )
    emit(data, args.table)
    return EXIT_OK


def _parse_tail(text: str) -> tuple[str, tuple[int, ...]]:
    if text in (limits.TAIL_ONES, limits.TAIL_MAX):
        return text, ()
    if text.startswith("periodic:"):
        return limits.TAIL_PERIODIC, parse_int_list(text[len("periodic:") :])
    raise LimitsError(f"unknown tail {text!r}; use ones, max or periodic:<list>")


def cmd_family(args) -> int:
    echo = _echo(args, ["kind", "braid", "k", "ell", "strands"])
    if args.kind == "example420":
        if args.k is None:
            raise BraidError("example420 needs -k")
        word = braid_mod.example_braid(args.k)
        payload = {"braid": braid_mod.format_braid(word)}
    elif args.kind == "power":
        word = _family_braid(args)
        if args.k is None:
            raise BraidError("power needs -k")
        payload = {"braid": braid_mod.format_braid(braid_mod.power(word, args.k))}
    elif args.kind == "delta2l":
        word = _family_braid(args)
        if args.ell is None:
            raise BraidError("delta2l needs --ell")
        payload = {
            "braid": braid_mod.format_braid(
                braid_mod.delta_squared_times(word, args.ell)
            )
        }
    elif args.kind == "lspace":
        if args.k is None or args.ell is None:
            raise BraidError("lspace needs -k and --ell")
        word = _family_braid(args, default_tour=True)
        diagram, report, additivity = surgery.lspace_family_diagram(
            word, args.k, args.ell
        )
        _, next_report, _ = surgery.lspace_family_diagram(word, args.k, args.ell + 1)
        payload = {
            "braid": braid_mod.format_braid(word),
            "diagram": surgery.diagram_to_dict(diagram),
            "h1_orders": {
                "axis_pair": surgery.homology(
                    surgery.axis_surgery(word, [Fraction(args.k)])
                ).h1_order,
                "this_level": report.h1_order,
                "next_level": next_report.h1_order,
            },
            "additivity": additivity,
        }
    else:
        raise BraidError(f"unknown family kind {args.kind!r}")
    emit(
        {
            "schema": SCHEMA,
            "subcommand": "family",
            "inputs_echo": echo,
            **payload,
        },
        args.table,
    )
    return EXIT_OK


def _family_braid(args, default_tour: bool = False) -> braid_mod.BraidWord:
    if args.braid is not None:
        return braid_mod.parse_braid(args.braid)
    if default_tour:
        strands = args.strands or 3
        return braid_mod.BraidWord(strands, tuple(range(1, strands)))
    raise BraidError(f"{args.kind} needs --braid")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidsurgery",
        description="Braid closures, surgery diagrams, and Legendrian enumeration",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument(
            "--table", action="store_true", help="key = value lines instead of JSON"
        )

    p = sub.add_parser("analyze", help="crossing statistics and hypothesis checks")
    p.add_argument("braid")
    p.add_argument("--assert-hyperbolic", action="store_true")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cfrac", help="negative continued fraction expansion")
    p.add_argument("value", help="rational below -1, or a slope in (0, 1)")
    common(p)
    p.set_defaults(func=cmd_cfrac)

    p = sub.add_parser("surgery", help="expand a rational surgery to integral form")
    p.add_argument("braid")
    p.add_argument("--slopes", required=True, help="comma-separated positive slopes")
    p.add_argument("--general", action="store_true", help="chain form for 1/n too")
    common(p)
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("enumerate", help="count and stream decorated diagrams")
    p.add_argument("braid")
    p.add_argument("--slopes", required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--isom-order", type=int, default=None, metavar="C")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("theta", help="plane-field invariant of decorated diagrams")
    p.add_argument("braid")
    p.add_argument("--slope", required=True, help="slope, or comma list for links")
    p.add_argument("--tuple", default=None, help="comma-separated 1-based menu picks")
    common(p)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("limits", help="block model of the limiting end")
    p.add_argument("--coeffs", default=None, help="comma-separated prefix, all <= -2")
    p.add_argument("--cycle", default=None, help="periodic continuation")
    p.add_argument("--tuple-prefix", default=None)
    p.add_argument("--tail", default=limits.TAIL_ONES, help="ones | max | periodic:<list>")
    p.add_argument("-n", "--levels", type=int, default=0)
    p.add_argument("--braid", default=None)
    common(p)
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("family", help="braid and diagram generators")
    p.add_argument("kind", choices=["delta2l", "power", "example420", "lspace"])
    p.add_argument("--braid", default=None)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("-l", "--ell", type=int, default=None)
    p.add_argument("--strands", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_family)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SingularityError as exc:
        _emit_error(EXIT_NUMERIC, type(exc).__name__, str(exc))
        return EXIT_NUMERIC
    except HypothesisError as exc:
        _emit_error(EXIT_HYPOTHESIS, type(exc).__name__, str(exc))
        return EXIT_HYPOTHESIS
    except (
        BraidError,
        CFracError,
        LimitsError,
        LegendrianError,
        SurgeryError,
        ValueError,
        ZeroDivisionError,
    ) as exc:
        _emit_error(EXIT_PARSE, type(exc).__name__, str(exc))
        return EXIT_PARSE


def _emit_error(code: int, kind: str, message: str) -> None:
    print(
        json.dumps(
            {
                "schema": SCHEMA,
                "error": {"code": code, "type": kind, "message": message},
            },
            sort_keys=True,
            indent=2,
        )
    )


if __name__ == "__main__":
    sys.exit(main())
