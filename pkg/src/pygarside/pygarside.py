import argparse
import json
import logging
import math
import os
import sys

import pygarside.common
from .common import DEFAULT_CAP, GarsideError
from .conjugacy import is_conjugate, summit_invariants
from .element import (
    element_word,
    factor_names,
    from_word,
    invariants_inf_sup_len,
    is_positive,
    parse_word,
)
from .instances import build_instance, parse_instance, parse_structure
from .periodicity import (
    commensurable,
    delta_root_certificate,
    garside_element_from_central,
    gcd_periodic_exponent,
    is_central,
    is_garside_element,
    periodicity_class,
    translation_numbers,
)
from .quotient import (
    certify_cyclic,
    enumerate_type_i,
    group_type_i_by_conjugacy,
    quotient_order,
)
from .structure import validate_structure


class UsageParser(argparse.ArgumentParser):
    """Exit with status 1 on usage errors, keeping 2 for domain errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


class UsageError(Exception):
    """A subcommand is missing one of its arguments."""


def element_json(g):
    return {"inf": g.inf_power, "factors": factor_names(g), "word": element_word(g)}


def _word(table, text):
    return from_word(table, parse_word(table, text))


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            option = "--" + name.replace("_", "-")
            raise UsageError(f"{args.subcommand} needs {option}")


def run_validate(args):
    spec = parse_instance(args.instance)
    if spec.kind == "custom":
        try:
            with open(spec.path, "rb") as f:
                table = parse_structure(f.read(), label=str(spec))
        except OSError as e:
            raise GarsideError(f"Can't read structure file: {e}")
        report = validate_structure(table)
    else:
        table = build_instance(spec)
        report = validate_structure(table)
    result = {
        "instance": str(spec),
        "passed": report.passed,
        "violations": report.violations,
        "notes": report.notes,
        "simples": table.size,
        "atoms": [table.names[a] for a in table.atoms],
        "delta": table.names[table.delta],
    }
    if report.passed:
        result["garside_norm"] = table.garside_norm
        result["tau_order"] = table.tau_order
        result["central_exponent"] = table.central_exponent
    return result, 0 if report.passed else 2


def run_nf(args, table):
    _require(args, "word")
    return element_json(_word(table, args.word))


def run_invariants(args, table):
    _require(args, "word")
    inf, sup, length = invariants_inf_sup_len(_word(table, args.word))
    return {"inf": inf, "sup": sup, "len": length}


def run_summit(args, table):
    _require(args, "word")
    data = summit_invariants(_word(table, args.word))
    return {
        "infs": data.infs,
        "sups": data.sups,
        "lens": data.lens,
        "representative": element_json(data.representative),
        "conjugator": element_json(data.conjugator),
    }


def run_conjugate(args, table):
    _require(args, "left", "right")
    w = is_conjugate(_word(table, args.left), _word(table, args.right), args.cap)
    if w is None:
        return {"conjugate": False}
    return {"conjugate": True, "conjugator": element_json(w)}


def run_periodic(args, table):
    _require(args, "word")
    g = _word(table, args.word)
    data = translation_numbers(g)
    result = {
        "INF": str(data.t_inf),
        "SUP": str(data.t_sup),
        "LEN": str(data.t_len),
        "periodic": data.t_len == 0,
        "checks": "translation numbers from powers up to the norm of Δ",
    }
    report = periodicity_class(g)
    if report is not None:
        result["p"] = report.p
        result["q"] = report.q
        result["conjugator"] = element_json(report.conjugator)
    return result


def run_roots(args, table):
    _require(args, "word", "a", "b")
    g = _word(table, args.word)
    if args.gcd:
        d, w = gcd_periodic_exponent(g, args.a, args.b)
        return {
            "exponent": d,
            "conjugator": element_json(w),
            "checks": "g^a and g^b conjugate to Δ-powers implies g^gcd(a,b) is",
        }
    w = delta_root_certificate(g, args.a, args.b)
    return {
        "a": args.a,
        "b": args.b,
        "conjugator": element_json(w),
        "checks": "g^(kb) conjugate to Δ^(ka) implies g^b conjugate to Δ^a",
    }


def run_garside_element(args, table):
    _require(args, "word")
    c = _word(table, args.word)
    central = is_central(c)
    result = {
        "positive": is_positive(c),
        "central": central,
        "checks": "positive central elements with Δ as a left divisor are "
        "Garside elements",
    }
    if is_positive(c):
        result["garside_element"] = is_garside_element(c)
    if central and (c.inf_power or c.factors):
        result["from_central"] = element_json(garside_element_from_central(c))
    return result


def run_quotient_order(args, table):
    _require(args, "word")
    order = quotient_order(_word(table, args.word))
    return {
        "order": "infinite" if order == math.inf else order,
        "central_exponent": table.central_exponent,
    }


def run_enumerate_finite(args, table):
    generators = enumerate_type_i(table)
    classes = group_type_i_by_conjugacy(generators, args.cap)
    return {
        "generators": [
            {
                "u": gen.u,
                "a": table.names[gen.a],
                "q": gen.q,
                "order": gen.order,
                "element": element_json(gen.element),
            }
            for gen in generators
        ],
        "classes": classes,
        "central_exponent": table.central_exponent,
        "checks": "generators of maximal finite cyclic subgroups of G_Δ",
    }


def run_certify_cyclic(args, table):
    if not args.word:
        raise UsageError("certify-cyclic needs at least one --word")
    generators = [_word(table, w) for w in args.word]
    g, order = certify_cyclic(generators, args.cap)
    return {
        "generator": element_json(g),
        "order": order,
        "checks": "finite subgroups of G_Δ are cyclic",
    }


def run_commensurable(args, table):
    _require(args, "left", "right")
    found = commensurable(
        _word(table, args.left), _word(table, args.right), args.bound, args.cap
    )
    if found is None:
        return {"commensurable": False, "bound": args.bound}
    return {"commensurable": True, "k": found[0], "l": found[1]}


SUBCOMMANDS = {
    "validate": ("Check the Garside axioms of an instance", None),
    "nf": ("Left normal form of --word", run_nf),
    "invariants": ("inf, sup and len of --word", run_invariants),
    "summit": ("Summit invariants of --word, with a witness", run_summit),
    "conjugate": ("Decide whether --left and --right are conjugate", run_conjugate),
    "periodic": ("Translation numbers and periodicity of --word", run_periodic),
    "roots": ("Certify g^b ~ Δ^a, or with --gcd a gcd exponent", run_roots),
    "garside-element": ("Garside element checks on --word", run_garside_element),
    "quotient-order": ("Order of --word in G_Δ", run_quotient_order),
    "enumerate-finite": ("Type (i) finite subgroup generators", run_enumerate_finite),
    "certify-cyclic": ("Certify that --word's generate a cyclic group", run_certify_cyclic),
    "commensurable": ("Find k, l with left^k ~ right^l", run_commensurable),
}


def _cap(text):
    cap = int(text)
    if cap < 1:
        raise argparse.ArgumentTypeError("the cap must be positive")
    return cap


def build_parser():
    parser = UsageParser(
        prog="garside",
        description="Compute with finite Garside structures and their groups.",
    )
    parser.add_argument(
        "--debug",
        help="Print DEBUG logging",
        action="store_const",
        dest="loglevel",
        const=logging.DEBUG,
        default=logging.WARNING,
    )
    parser.add_argument(
        "--verbose",
        help="Print INFO logging",
        action="store_const",
        dest="loglevel",
        const=logging.INFO,
    )
    subparsers = parser.add_subparsers(dest="subcommand", help="Operation to run")

    shared = UsageParser(add_help=False)
    shared.add_argument(
        "--instance",
        required=True,
        help="braid:n, torus:a:b, free_abelian:l or custom:path",
    )
    shared.add_argument(
        "--cap",
        type=_cap,
        help="Largest set a closure may reach",
        default=os.environ.get("GARSIDE_CAP", DEFAULT_CAP),
    )
    output = shared.add_mutually_exclusive_group()
    output.add_argument(
        "--json",
        help="Print a JSON report (the default)",
        action="store_const",
        dest="output",
        const="json",
        default="json",
    )
    output.add_argument(
        "--text",
        help="Print one key: value line per field",
        action="store_const",
        dest="output",
        const="text",
    )

    for name, (help_text, _) in SUBCOMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text, parents=[shared])
        if name in ("conjugate", "commensurable"):
            sub.add_argument("--left", help="A word")
            sub.add_argument("--right", help="A word")
        elif name == "certify-cyclic":
            sub.add_argument("--word", action="append", help="A generator")
        elif name not in ("validate", "enumerate-finite"):
            sub.add_argument("--word", help="A word, e.g. \"s1 s2^-1 D\"")
        if name == "roots":
            sub.add_argument("--a", type=int, help="Exponent of Δ, or of g with --gcd")
            sub.add_argument("--b", type=int, help="Exponent of g")
            sub.add_argument(
                "--gcd",
                action="store_true",
                help="Certify g^gcd(a, b) from g^a and g^b",
            )
        if name == "commensurable":
            sub.add_argument(
                "--bound",
                type=int,
                help="Search exponents up to this size",
                default=10,
            )
    return parser


def format_report(report, output):
    if output == "json":
        return json.dumps(report, sort_keys=True, separators=(",", ":"))
    lines = []
    for key in sorted(report):
        value = report[key]
        if not isinstance(value, str):
            value = json.dumps(value, sort_keys=True, separators=(",", ":"))
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def run(argv):
    """
    :param argv: Arguments, without the program name
    :returns: The exit code
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.loglevel)
    # Only log cycling and closure steps when debugging, due to CPU overhead
    if args.loglevel == logging.DEBUG:
        pygarside.common.LOG_STEPS = True
    if args.subcommand is None:
        parser.print_help(sys.stderr)
        return 1

    exit_code = 0
    try:
        if args.subcommand == "validate":
            report, exit_code = run_validate(args)
        else:
            table = build_instance(parse_instance(args.instance))
            report = SUBCOMMANDS[args.subcommand][1](args, table)
    except UsageError as e:
        parser.error(str(e))
    # Don't print the full stack trace for domain errors
    except GarsideError as e:
        print(f"{args.subcommand}: {e}", file=sys.stderr)
        return 2
    print(format_report(report, args.output))
    return exit_code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
