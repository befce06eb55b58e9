"""Command line interface: ``tl <command> ...``.

JSON goes to stdout (or ``--out``), diagnostics to stderr.  Exit codes:
0 success, 1 usage error, 2 verification failure, 3 mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .builders import build_example2_space, build_wedge
from .comb import FiltrationProfile, d, multiplicity_closed, multiplicity_recursive
from .decomp import DecompositionError, decompose
from .diagram import ResourceLimitError, Word, enumerate_diagrams, eval_word
from .link_state import enumerate_states
from .space import (SpaceError, filtration, homology_rep, integral_homology, piece_name, quotient_by_Q,
                    SimplicialTLSpace, verify_space)
from .stability import (check_filtration_stability, check_ls_module, check_rank_one, standard_chain,
                        verify_fsirs)
from .std_module import direct_sum, standard_rep

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(args, payload: dict, human: str | None = None) -> None:
    text = jsonio.dumps(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.pretty and human is not None:
        print(human)
    elif not args.out:
        sys.stdout.write(text)


def _load(args) -> dict:
    if not args.input:
        raise UsageError("--in FILE is required")
    with open(args.input) as fh:
        return json.load(fh)


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_multiply(args) -> int:
    try:
        a = eval_word(Word(args.n, tuple(args.word)))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = jsonio.diagram_to_json(a)
    payload["word"] = list(args.word)
    human = f"{a!r}\nloops: {a.loop_count}\n{a.render()}"
    _emit(args, payload, human)
    return EXIT_OK


def cmd_enumerate_diagrams(args) -> int:
    diagrams = enumerate_diagrams(args.n)
    payload = {"n": args.n, "count": len(diagrams), "diagrams": [jsonio.diagram_to_json(a) for a in diagrams]}
    _emit(args, payload, "\n".join(repr(a) for a in diagrams) + f"\n{len(diagrams)} diagrams")
    return EXIT_OK


def cmd_enumerate_states(args) -> int:
    try:
        states = enumerate_states(args.n, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"n": args.n, "p": args.p, "count": len(states), "states": [jsonio.state_to_json(v) for v in states]}
    _emit(args, payload, "\n".join(v.word() for v in states) + f"\n{len(states)} states")
    return EXIT_OK


def cmd_multiplicity(args) -> int:
    try:
        profile = FiltrationProfile(args.n, args.k, tuple(args.betti))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    closed = multiplicity_closed(profile)
    rec = multiplicity_recursive(profile)
    payload = {"profile": jsonio.profile_to_json(profile), "closed": closed.to_json(),
               "recursive": rec.to_json(), "agree": closed == rec}
    payload.update(closed.to_json())
    human = f"closed form: {list(closed.mult)}\nrecursion:   {list(rec.mult)}"
    if not closed.realizable:
        human += "\nnegative entries: profile is not realizable by a TL_n-space"
    _emit(args, payload, human)
    return EXIT_OK if closed == rec else EXIT_MISMATCH


def _rep_from_args(args):
    if args.standard:
        n, *ps = args.standard
        if not ps:
            raise UsageError("--standard needs n followed by at least one p")
        try:
            return direct_sum([standard_rep(n, p) for p in ps])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return jsonio.rep_from_json(_load(args))


def cmd_decompose(args) -> int:
    rep = _rep_from_args(args)
    try:
        dec = decompose(rep, certify=args.certify)
    except DecompositionError as exc:
        _note(f"decompose: {exc}")
        return EXIT_VERIFY
    payload = dec.to_json()
    human = " + ".join(f"{m} x V_{{{rep.n},{p}}}" for p, m in enumerate(dec.mult, start=1) if m) or "0"
    _emit(args, payload, f"{human}\nconsistent: {dec.consistent}")
    return EXIT_OK if dec.consistent and dec.certified is not False else EXIT_VERIFY


def _space_from_args(args):
    if getattr(args, "example", None):
        return _example_space(args.example, args)
    return jsonio.space_from_json(_load(args))


def _example_space(name: str, args):
    if name == "ex1":
        return build_wedge(args.n or 5, [(args.p or 2, 1)], k=2)
    n = args.n or 4
    return build_example2_space(n, args.c if args.c is not None else max(d(n, 2), n - 1) + 1)


def run_pipeline(space, k: int) -> tuple[dict, int]:
    report = verify_space(space)
    result: dict = {"verify": report.to_json(lambda c: piece_name(space, c))}
    if not report.relations_ok:
        result["stage"] = "verify"
        return result, EXIT_VERIFY
    quotient = quotient_by_Q(space)
    result["quotiented"] = quotient is not space
    profile = filtration(quotient, k)
    result["profile"] = jsonio.profile_to_json(profile)
    predicted = multiplicity_closed(profile)
    result["predicted"] = predicted.to_json()
    rep = homology_rep(quotient, k)
    try:
        dec = decompose(rep)
    except DecompositionError as exc:
        result["stage"] = "decompose"
        result["error"] = str(exc)
        return result, EXIT_VERIFY
    result["decomposed"] = dec.to_json()
    result["match"] = list(dec.mult) == list(predicted.mult) and dec.consistent
    return result, EXIT_OK if result["match"] else EXIT_MISMATCH


def cmd_space(args) -> int:
    space = _space_from_args(args)
    if args.action == "verify":
        report = verify_space(space)
        payload = report.to_json(lambda c: piece_name(space, c))
        _emit(args, payload, "\n".join(f"{key}: {val}" for key, val in payload.items()))
        ok = report.relations_ok and report.nifi_ok and report.isch_ok
        return EXIT_OK if ok else EXIT_VERIFY
    k = args.k if args.k is not None else getattr(space, "k", 1)
    if args.action == "filtration":
        try:
            profile = filtration(space, k)
        except SpaceError as exc:
            _note(f"filtration: {exc}")
            return EXIT_VERIFY
        _emit(args, jsonio.profile_to_json(profile), f"betti: {list(profile.betti)}")
        return EXIT_OK
    if args.action == "homology":
        rep = homology_rep(space, k)
        payload = {"k": k, "rep": jsonio.rep_to_json(rep)}
        if isinstance(space, SimplicialTLSpace):
            payload["integral"] = integral_homology(space, k).to_json()
        _emit(args, payload, f"dim H_{k} = {rep.dim}")
        return EXIT_OK
    result, code = run_pipeline(space, k)
    human = "\n".join(f"{key}: {val}" for key, val in result.items() if key != "verify")
    _emit(args, result, human)
    return code


def cmd_stability(args) -> int:
    if args.action == "check-ls":
        if args.standard:
            p, lo, hi = args.standard
            chain = standard_chain(p, lo, hi)
        else:
            chain = jsonio.chain_from_json(_load(args))
        report = check_ls_module(chain)
        payload = report.to_json()
        if args.standard:
            payload["rank_one"] = check_rank_one(chain)
        _emit(args, payload, "\n".join(f"{key}: {val}" for key, val in payload.items()))
        return EXIT_OK if report.ok else EXIT_VERIFY
    if args.action == "check-filtration":
        data = _load(args)
        profiles = [jsonio.profile_from_json(f) for f in data["profiles"]]
        p = args.p if args.p is not None else int(data.get("p", 1))
        try:
            stable = check_filtration_stability(profiles, p)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _emit(args, {"p": p, "stable": stable}, f"{p}-filtration stable: {stable}")
        return EXIT_OK if stable else EXIT_VERIFY
    # verify-fsirs
    if args.example:
        lo, hi = args.range
        if args.example == "ex1":
            spaces = [build_wedge(n, [(2, 1)], k=2) for n in range(lo, hi + 1)]
        else:
            spaces = [build_example2_space(n, d(n, 2) + n) for n in range(lo, hi + 1)]
    else:
        data = _load(args)
        spaces = [jsonio.space_from_json(s) for s in data["spaces"]]
    p = args.p if args.p is not None else 2
    k = args.k if args.k is not None else getattr(spaces[0], "k", 1)
    report = verify_fsirs(spaces, p, k)
    payload = report.to_json()
    _emit(args, payload, "\n".join(f"{key}: {val}" for key, val in payload.items()))
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_examples(args) -> int:
    if args.which == "ex1":
        n, p = args.n or 5, args.p or 2
        space = build_wedge(n, [(p, 1)], k=2)
        result, code = run_pipeline(space, 2)
        lo = 2 * p
        chain = [build_wedge(m, [(p, 1)], k=2) for m in range(lo, max(lo, n) + 2)]
        fsirs = verify_fsirs(chain, p, 2)
        result["chain"] = fsirs.to_json()
        if not fsirs.ok:
            code = code or EXIT_VERIFY
    else:
        n = args.n or 4
        c = args.c if args.c is not None else 3
        space = build_example2_space(n, c)
        result, code = run_pipeline(space, 1)
        result["expected"] = [c - d(n, 2), 1] + [0] * (n // 2 - 2)
        if result.get("decomposed", {}).get("mult") != result["expected"]:
            code = code or EXIT_MISMATCH
    human = "\n".join(f"{key}: {val}" for key, val in result.items() if key != "verify")
    _emit(args, result, human)
    return code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    common.add_argument("--in", dest="input", metavar="FILE", help="JSON input file")
    common.add_argument("--out", metavar="FILE", help="write JSON output to FILE")

    parser = _Parser(prog="tl", description="Temperley-Lieb monoid, standard modules and TL-space tools")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("multiply", parents=[common], help="evaluate a word in the generators")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--word", type=_ints, default=[], help="comma-separated generator indices")
    s.set_defaults(func=cmd_multiply)

    s = sub.add_parser("enumerate-diagrams", parents=[common], help="list all TL_n diagrams")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_enumerate_diagrams)

    s = sub.add_parser("enumerate-states", parents=[common], help="list (n,p) link states")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.set_defaults(func=cmd_enumerate_states)

    s = sub.add_parser("multiplicity", parents=[common], help="multiplicities from a filtration profile")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--betti", type=_ints, required=True)
    s.set_defaults(func=cmd_multiplicity)

    s = sub.add_parser("decompose", parents=[common], help="decompose a representation into standards")
    s.add_argument("--standard", type=int, nargs="+", metavar="N_OR_P",
                   help="use a sum of standards: n followed by the p of each summand")
    s.add_argument("--certify", action="store_true", help="also build an explicit isomorphism")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("space", parents=[common], help="TL-space tools")
    s.add_argument("action", choices=["verify", "filtration", "homology", "pipeline"])
    s.add_argument("--k", type=int)
    s.add_argument("--example", choices=["ex1", "ex2"], help="use a built-in space instead of --in")
    s.add_argument("--n", type=int)
    s.add_argument("--p", type=int)
    s.add_argument("--c", type=int)
    s.set_defaults(func=cmd_space)

    s = sub.add_parser("stability", parents=[common], help="chain stability checks")
    s.add_argument("action", choices=["check-ls", "check-filtration", "verify-fsirs"])
    s.add_argument("--standard", type=int, nargs=3, metavar=("P", "N", "N_MAX"),
                   help="check the chain of standard modules V_{n,P}, n = N..N_MAX")
    s.add_argument("--p", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--example", choices=["ex1", "ex2"])
    s.add_argument("--range", type=int, nargs=2, default=[4, 7], metavar=("LO", "HI"))
    s.set_defaults(func=cmd_stability)

    s = sub.add_parser("examples", parents=[common], help="reproduce the worked examples")
    s.add_argument("which", choices=["ex1", "ex2"])
    s.add_argument("--n", type=int)
    s.add_argument("--p", type=int)
    s.add_argument("--c", type=int)
    s.set_defaults(func=cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        _note(f"tl: error: {exc}")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        _note(f"tl: error: {exc}")
        return EXIT_USAGE
    except (SpaceError, KeyError, json.JSONDecodeError, OSError) as exc:
        _note(f"tl: error: bad input: {exc}")
        return EXIT_USAGE
    except ValueError as exc:
        _note(f"tl: error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
