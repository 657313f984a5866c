"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from dotenv import load_dotenv

from .. import __version__
from ..analysis import build_report, is_automorphism, satisfies_group_identities
from ..automaton import (
    apply_endo_to_subgroup,
    conjugate_subgroup,
    conjugator,
    core_and_tail,
    index,
    intersect,
    is_trivial,
    member,
)
from ..errors import ParseError, PreconditionError, StallingsError
from ..freegroup import Alphabet, EndomorphismSpec, format_word, inverse_steps, nielsen_sequence, parse_word
from ..monoid import generate_monoid, green_classes, group_H_classes, idempotent_poset
from ..utils.config_loader import config_loader
from ..utils.deterministic import ordered_json
from ..utils.logging_config import StructuredLogger, setup_logging
from .dot import to_dot
from .files import dump_automaton, load_automaton, load_endomorphism, write_output
from .wordfmt import (
    describe_element,
    format_nielsen_steps,
    parse_alphabet,
    parse_identity,
    parse_int_list,
    parse_nielsen_spec,
    parse_prime_sets,
    positive_int,
)

logger = StructuredLogger(__name__)

EXIT_OK = 0


def _yes_no(value: bool) -> str:
    return "yes" if value else "no"


def _cap(args: argparse.Namespace) -> int:
    return args.monoid_cap if args.monoid_cap is not None else config_loader.monoid_cap()


def _endomorphism(args: argparse.Namespace, alphabet: Alphabet | None) -> EndomorphismSpec:
    if args.endo:
        e = load_endomorphism(args.endo)
        if alphabet is not None and e.alphabet != alphabet:
            raise ParseError("Endomorphism file and subgroup use different alphabets")
        return e
    if args.nielsen is None:
        raise ParseError("Give either --endo FILE or --nielsen SPEC")
    if alphabet is None:
        raise ParseError("--nielsen needs --alphabet")
    return nielsen_sequence(alphabet, parse_nielsen_spec(args.nielsen, alphabet))


# --- commands ---------------------------------------------------------------


def cmd_build(args: argparse.Namespace) -> int:
    aut = load_automaton(args.input)
    write_output(dump_automaton(aut), args.out)
    return EXIT_OK


def _analyze_one(path: str, ks: list[int], pis: list[list[int]], cap: int, fmt: str) -> tuple[str | None, str, int]:
    """Runs in a worker process in batch mode: (report text, error text, exit code)."""
    try:
        report = build_report(load_automaton(path), ks=ks, pis=pis, cap=cap)
    except StallingsError as e:
        return None, f"error: {path}: {e}\n", e.exit_code
    except OSError as e:
        return None, f"error: {path}: {e}\n", ParseError.exit_code
    text = report.to_json() if fmt == "json" else report.to_text()
    if report.inconsistent:
        return text, f"error: {path}: criteria disagree\n", 5
    return text, "", EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    ks = parse_int_list(args.k, "--k") if args.k else []
    pis = parse_prime_sets(args.pi) if args.pi else []
    cap = _cap(args)
    fmt = args.format or config_loader.get().report_format
    jobs = args.jobs or config_loader.get().jobs
    tasks = [(path, ks, pis, cap, fmt) for path in args.inputs]

    if jobs > 1 and len(tasks) > 1:
        logger.info("Analyzing in worker pool", files=len(tasks), jobs=jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_analyze_one, *zip(*tasks)))
    else:
        results = [_analyze_one(*task) for task in tasks]

    outputs = {}
    for path, (text, error, _) in zip(args.inputs, results):
        sys.stderr.write(error)
        if text is not None:
            outputs[path] = text
    if len(tasks) == 1:
        if outputs:
            write_output(next(iter(outputs.values())), args.out)
    elif fmt == "json":
        write_output(ordered_json({path: json.loads(text) for path, text in outputs.items()}), args.out)
    else:
        write_output("".join(f"# {path}\n{text}" for path, text in outputs.items()), args.out)
    return max(code for _, _, code in results)


def cmd_apply(args: argparse.Namespace) -> int:
    aut = load_automaton(args.input)
    e = _endomorphism(args, aut.alphabet)
    write_output(dump_automaton(apply_endo_to_subgroup(aut, e)), args.out)
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    write_output(to_dot(load_automaton(args.input)), args.out)
    return EXIT_OK


def cmd_member(args: argparse.Namespace) -> int:
    aut = load_automaton(args.input)
    print(_yes_no(member(aut, parse_word(args.word, aut.alphabet))))
    return EXIT_OK


def cmd_index(args: argparse.Namespace) -> int:
    value = index(load_automaton(args.input))
    print("infinite" if math.isinf(value) else value)
    return EXIT_OK


def cmd_conjugate(args: argparse.Namespace) -> int:
    aut = load_automaton(args.input)
    w = parse_word(args.word, aut.alphabet)
    write_output(dump_automaton(conjugate_subgroup(aut, w)), args.out)
    return EXIT_OK


def cmd_intersect(args: argparse.Namespace) -> int:
    write_output(dump_automaton(intersect(load_automaton(args.first), load_automaton(args.second))), args.out)
    return EXIT_OK


def cmd_conjugacy_test(args: argparse.Namespace) -> int:
    h, k = load_automaton(args.first), load_automaton(args.second)
    w = conjugator(h, k)
    lines = [f"conjugate: {_yes_no(w is not None)}"]
    if w is not None:
        lines.append(f"witness: {format_word(w, h.alphabet)}")
        if not is_trivial(h):
            lines.append(f"tails: {format_word(core_and_tail(h).tail, h.alphabet)} | "
                         f"{format_word(core_and_tail(k).tail, k.alphabet)}")
    print("\n".join(lines))
    return EXIT_OK


def _monoid_text(aut, cap: int) -> str:
    m = generate_monoid(aut, cap)
    classes = green_classes(m)
    lines = [f"size: {len(m)}", "elements:"]
    lines += [f"  {i}: {describe_element(f, m)}" for i, f in enumerate(m.elements)]
    for name in ("R", "L", "H", "D"):
        rendered = " ".join("{" + ",".join(map(str, c)) + "}" for c in classes.relation(name))
        lines.append(f"{name}: {rendered}")
    lines.append("group H-classes:")
    for cls in group_H_classes(m):
        orders = ",".join(map(str, cls.orders))
        lines.append(f"  {{{','.join(map(str, cls.members))}}} identity={cls.identity} orders={orders}")
    if not is_trivial(aut):
        poset = idempotent_poset(aut, cap)
        lines.append(f"E: {' '.join(str(e) for e in poset.elements)}")
        lines.append(f"k: {poset.k}")
        covers = " ".join(f"{i}<{j}" for i, j in poset.covers())
        lines.append(f"covers: {covers}")
    return "\n".join(lines) + "\n"


def _monoid_json(aut, cap: int) -> str:
    m = generate_monoid(aut, cap)
    classes = green_classes(m)
    data = {
        "size": len(m),
        "elements": [
            {"table": list(f.table), "witness": format_word(m.witnesses[i], aut.alphabet)}
            for i, f in enumerate(m.elements)
        ],
        "green": {name: [list(c) for c in classes.relation(name)] for name in ("R", "L", "H", "D")},
        "group_h_classes": [
            {"members": list(c.members), "identity": c.identity, "orders": list(c.orders)}
            for c in group_H_classes(m)
        ],
    }
    if not is_trivial(aut):
        poset = idempotent_poset(aut, cap)
        data["idempotents"] = [list(e.table) for e in poset.elements]
        data["k"] = poset.k
    return ordered_json(data)


def cmd_monoid(args: argparse.Namespace) -> int:
    aut = load_automaton(args.input)
    fmt = args.format or config_loader.get().report_format
    render = _monoid_json if fmt == "json" else _monoid_text
    write_output(render(aut, _cap(args)), args.out)
    return EXIT_OK


def cmd_is_automorphism(args: argparse.Namespace) -> int:
    alphabet = parse_alphabet(args.alphabet) if args.alphabet else None
    lines = [_yes_no(is_automorphism(_endomorphism(args, alphabet)))]
    if not args.endo:
        steps = inverse_steps(parse_nielsen_spec(args.nielsen, alphabet))
        lines.append(f"inverse: {format_nielsen_steps(steps, alphabet) or 'identity'}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_identities(args: argparse.Namespace) -> int:
    aut = load_automaton(args.input)
    variables = parse_alphabet(args.variables)
    words = [parse_identity(text, variables) for text in args.identities]
    if math.isinf(index(aut)):
        raise PreconditionError("Group identities need a subgroup of finite index")
    m = generate_monoid(aut, _cap(args))
    for text, word in zip(args.identities, words):
        print(f"{text.strip()}: {_yes_no(satisfies_group_identities(aut, [word], variables, monoid=m))}")
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stallings",
        description="Stallings automata, transition monoids and subgroup properties of free groups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
        default=None,
        help="Override STALLINGS_LOG_LEVEL",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[argparse.Namespace], int], help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(handler=handler)
        return p

    def with_out(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", default=None, help="Output path (default stdout)")

    def with_endo(p: argparse.ArgumentParser) -> None:
        p.add_argument("--endo", default=None, help="Endomorphism file")
        p.add_argument("--nielsen", default=None, help='Nielsen steps, e.g. "beta a b; alpha c"')

    def with_cap(p: argparse.ArgumentParser) -> None:
        p.add_argument("--monoid-cap", type=positive_int, default=None, help="Element cap for transition monoids")

    p = command("build", cmd_build, "Fold a subgroup file into its Stallings automaton")
    p.add_argument("input")
    with_out(p)

    p = command("analyze", cmd_analyze, "Report subgroup properties")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--k", default=None, help="Exponents for B_k membership, e.g. 2,3,6")
    p.add_argument("--pi", default=None, help='Prime sets for G_pi membership, e.g. "2;3;2,3"')
    p.add_argument("--format", choices=("text", "json"), default=None)
    p.add_argument("--jobs", type=positive_int, default=None, help="Worker processes for several inputs")
    with_cap(p)
    with_out(p)

    p = command("apply", cmd_apply, "Apply an endomorphism to a subgroup")
    p.add_argument("input")
    with_endo(p)
    with_out(p)

    p = command("export-dot", cmd_export_dot, "Write the automaton as Graphviz DOT")
    p.add_argument("input")
    with_out(p)

    p = command("member", cmd_member, "Decide membership of a word")
    p.add_argument("input")
    p.add_argument("word")

    p = command("index", cmd_index, "Index of the subgroup")
    p.add_argument("input")

    p = command("conjugate", cmd_conjugate, "Automaton of w K w^-1")
    p.add_argument("input")
    p.add_argument("word")
    with_out(p)

    p = command("intersect", cmd_intersect, "Automaton of the intersection of two subgroups")
    p.add_argument("first")
    p.add_argument("second")
    with_out(p)

    p = command("conjugacy-test", cmd_conjugacy_test, "Decide conjugacy by comparing cores")
    p.add_argument("first")
    p.add_argument("second")

    p = command("monoid", cmd_monoid, "Transition monoid, Green's classes and idempotents")
    p.add_argument("input")
    p.add_argument("--format", choices=("text", "json"), default=None)
    with_cap(p)
    with_out(p)

    p = command("identities", cmd_identities, "Decide group identities in the transition monoid")
    p.add_argument("input")
    p.add_argument("identities", nargs="+", help='Identities over the variables, e.g. "x y = y x" or "x^2"')
    p.add_argument("--variables", default="x y", help='Variable names (default "x y")')
    with_cap(p)

    p = command("is-automorphism", cmd_is_automorphism, "Decide whether an endomorphism is invertible")
    p.add_argument("--alphabet", default=None, help='Generators for --nielsen, e.g. "a b c"')
    with_endo(p)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = config_loader.get()
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return ParseError.exit_code
    setup_logging(args.log_level or config.log_level)

    log = logger.bind(command=args.command)
    log.debug("Running command")
    try:
        return args.handler(args)
    except StallingsError as e:
        log.error("Command failed", error=str(e), exit_code=e.exit_code)
        sys.stderr.write(f"error: {e}\n")
        return e.exit_code
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return ParseError.exit_code


if __name__ == "__main__":
    sys.exit(main())
