"""Command-line surface.

Every subcommand works against a presentation file (text or JSON form)
except ``verify``, whose presentations are built in.  Output is plain
text by default or deterministic JSON with ``--format json``: keys are
sorted and no timing or environment data is included, so identical
(input, seed) pairs produce byte-identical output.  Exit status: 0 on
success, 1 on a domain error (diagnostic on stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import coxeter, parabolic, retraction, suites, words
from .coxeter import enumerate_elements, format_coxeter_word, parse_coxeter_word
from .errors import DomainError
from .presentation import Presentation, parse_presentation
from .words import format_artin_word, parse_artin_word


def _load_presentation(path: str) -> Presentation:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return parse_presentation(handle.read())
    except OSError as exc:
        raise DomainError(f"cannot read presentation file: {exc}") from None


def _subset(P: Presentation, raw: str) -> tuple[int, ...]:
    names = [part for part in raw.split(",") if part]
    return P.subset(names)


def _names(P: Presentation, X: Sequence[int]) -> list[str]:
    return [P.names[x] for x in X]


def _emit(args, payload: dict, human_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in human_lines:
            print(line)


def _trace_json(P: Presentation, trace: retraction.RetractionTrace) -> list[dict]:
    out = []
    for step in trace.steps:
        out.append(
            {
                "i": step.index,
                "letter": format_artin_word(P, (step.letter,)),
                "u": format_coxeter_word(P, step.prefix.word),
                "v": format_coxeter_word(P, step.vpart.word),
                "w": format_coxeter_word(P, step.wpart.word),
                "t": format_coxeter_word(P, step.reflection.word),
                "emitted": (
                    format_artin_word(P, (step.emitted,)) if step.emitted else None
                ),
            }
        )
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", "--presentation", help="presentation file (text or JSON)")
    common.add_argument(
        "--format", choices=("human", "json"), default="human", help="output mode"
    )
    common.add_argument(
        "--closure-cap", type=int, default=None, dest="cap",
        help="braid-closure size cap override",
    )
    common.add_argument("--seed", type=int, default=0, help="random seed")

    parser = argparse.ArgumentParser(
        prog="artinpar",
        description="Coxeter/Artin word machinery: canonical forms, double cosets, retraction pipelines",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common], help="canonical form of a Coxeter word")
    p.add_argument("word")
    p = sub.add_parser("length", parents=[common], help="length of a Coxeter element")
    p.add_argument("word")
    p = sub.add_parser("descents", parents=[common], help="left and right descent sets")
    p.add_argument("word")
    p = sub.add_parser("enumerate", parents=[common], help="BFS-enumerate the Coxeter group")
    p.add_argument("--cap", type=int, default=1000, dest="cap_elements", help="element cap")
    p = sub.add_parser("decompose", parents=[common], help="left coset decomposition along X")
    p.add_argument("--x", required=True)
    p.add_argument("word")
    p = sub.add_parser("double-coset", parents=[common], help="minimal double-coset decomposition")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("word")
    p = sub.add_parser("theta", parents=[common], help="Coxeter image of an Artin word")
    p.add_argument("word")
    p = sub.add_parser("iota", parents=[common], help="positive lift of a Coxeter element")
    p.add_argument("word")
    p = sub.add_parser("retract", parents=[common], help="retract an Artin word onto X")
    p.add_argument("--x", required=True)
    p.add_argument("--trace", action="store_true")
    p.add_argument("word")
    p = sub.add_parser("transport", parents=[common], help="standardize a Coxeter conjugation")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("word")
    p = sub.add_parser("theorem", parents=[common], help="standardize a conjugated parabolic")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("word")
    p = sub.add_parser("generate", parents=[common], help="generate a pipeline instance")
    p.add_argument("--x-size", type=int, required=True)
    p.add_argument("--y-size", type=int, required=True)
    p.add_argument("--pad", type=int, required=True)
    p.add_argument("--w-search-len", type=int, default=4)
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", required=True, choices=suites.SUITE_NAMES)
    return parser


def _require_presentation(args) -> Presentation:
    if not args.presentation:
        raise DomainError("this command needs --presentation")
    return _load_presentation(args.presentation)


def _cmd_reduce(args) -> int:
    P = _require_presentation(args)
    u = coxeter.reduce(P, parse_coxeter_word(P, args.word), args.cap)
    text = format_coxeter_word(P, u.word)
    _emit(args, {"input": args.word, "canonical": text, "length": u.length}, [text])
    return 0


def _cmd_length(args) -> int:
    P = _require_presentation(args)
    u = coxeter.reduce(P, parse_coxeter_word(P, args.word), args.cap)
    _emit(args, {"word": args.word, "length": u.length}, [str(u.length)])
    return 0


def _cmd_descents(args) -> int:
    P = _require_presentation(args)
    u = coxeter.reduce(P, parse_coxeter_word(P, args.word), args.cap)
    left = _names(P, coxeter.left_descents(P, u, args.cap))
    right = _names(P, coxeter.right_descents(P, u, args.cap))
    _emit(
        args,
        {"word": args.word, "left": left, "right": right},
        [f"left: {' '.join(left)}", f"right: {' '.join(right)}"],
    )
    return 0


def _cmd_enumerate(args) -> int:
    P = _require_presentation(args)
    elements, finite = enumerate_elements(P, args.cap_elements, args.cap)
    texts = [format_coxeter_word(P, e.word) for e in elements]
    _emit(
        args,
        {"count": len(elements), "finite": finite, "elements": texts},
        [f"count: {len(elements)}", f"finite: {finite}"] + texts,
    )
    return 0


def _cmd_decompose(args) -> int:
    P = _require_presentation(args)
    X = _subset(P, args.x)
    u = coxeter.reduce(P, parse_coxeter_word(P, args.word), args.cap)
    d = parabolic.decompose_left(P, X, u, args.cap)
    v, w = format_coxeter_word(P, d.v.word), format_coxeter_word(P, d.w.word)
    _emit(args, {"v": v, "w": w}, [f"v: {v}", f"w: {w}"])
    return 0


def _cmd_double_coset(args) -> int:
    P = _require_presentation(args)
    X, Y = _subset(P, args.x), _subset(P, args.y)
    u = coxeter.reduce(P, parse_coxeter_word(P, args.word), args.cap)
    d = parabolic.double_coset_decompose(P, X, Y, u, args.cap)
    u1 = format_coxeter_word(P, d.u1.word)
    w0 = format_coxeter_word(P, d.w0.word)
    u2 = format_coxeter_word(P, d.u2.word)
    _emit(args, {"u1": u1, "w0": w0, "u2": u2}, [f"u1: {u1}", f"w0: {w0}", f"u2: {u2}"])
    return 0


def _cmd_theta(args) -> int:
    P = _require_presentation(args)
    u = words.coxeter_image(P, parse_artin_word(P, args.word), args.cap)
    text = format_coxeter_word(P, u.word)
    _emit(args, {"element": text}, [text])
    return 0


def _cmd_iota(args) -> int:
    P = _require_presentation(args)
    u = coxeter.reduce(P, parse_coxeter_word(P, args.word), args.cap)
    lifted = format_artin_word(P, words.positive_lift(u))
    _emit(args, {"word": lifted}, [lifted])
    return 0


def _cmd_retract(args) -> int:
    P = _require_presentation(args)
    X = _subset(P, args.x)
    w = parse_artin_word(P, args.word)
    out, trace = retraction.retract_word(P, X, w, args.cap)
    text = format_artin_word(P, out)
    payload: dict = {"input": args.word, "x": _names(P, X), "word": text}
    lines = [text]
    if args.trace:
        payload["trace"] = _trace_json(P, trace)
        for step in payload["trace"]:
            lines.append(
                f"  {step['i']}: letter={step['letter']} u={step['u'] or '-'} "
                f"v={step['v'] or '-'} w={step['w'] or '-'} t={step['t'] or '-'} "
                f"emitted={step['emitted'] or '-'}"
            )
    _emit(args, payload, lines)
    return 0


def _cmd_transport(args) -> int:
    P = _require_presentation(args)
    X, Y = _subset(P, args.x), _subset(P, args.y)
    w = coxeter.reduce(P, parse_coxeter_word(P, args.word), args.cap)
    moved = retraction.transport(P, X, Y, w, args.cap)
    payload = {
        "yprime": _names(P, moved.yprime),
        "f": {P.names[y]: P.names[x] for y, x in sorted(moved.mapping.items())},
        "w0": format_coxeter_word(P, moved.w0.word),
        "alpha": format_artin_word(P, moved.alpha),
    }
    _emit(
        args,
        payload,
        [
            f"yprime: {' '.join(payload['yprime'])}",
            f"w0: {payload['w0']}",
            f"alpha: {payload['alpha']}",
        ],
    )
    return 0


def _cmd_theorem(args) -> int:
    P = _require_presentation(args)
    X, Y = _subset(P, args.x), _subset(P, args.y)
    alpha = parse_artin_word(P, args.word)
    result = retraction.conjugate_into_parabolic(P, X, Y, alpha, args.cap)
    audit = result.audit
    payload = {
        "yprime": _names(P, result.yprime),
        "gamma": format_artin_word(P, result.gamma),
        "audit": {
            "w": format_coxeter_word(P, audit.w.word),
            "w0": format_coxeter_word(P, audit.w0.word),
            "beta1": format_artin_word(P, audit.beta1),
            "beta2": format_artin_word(P, audit.beta2),
            "pi_of_beta1": format_artin_word(P, audit.pi_of_beta1),
        },
    }
    _emit(
        args,
        payload,
        [
            f"yprime: {' '.join(payload['yprime'])}",
            f"gamma: {payload['gamma']}",
        ],
    )
    return 0


def _cmd_generate(args) -> int:
    P = _require_presentation(args)
    inst = retraction.generate_instance(
        P, args.seed, args.x_size, args.y_size, args.pad, args.w_search_len, args.cap
    )
    payload = {
        "x": _names(P, inst.x),
        "y": _names(P, inst.y),
        "alpha": format_artin_word(P, inst.alpha),
        "w": format_coxeter_word(P, inst.w.word),
        "seed": args.seed,
    }
    _emit(
        args,
        payload,
        [
            f"x: {' '.join(payload['x'])}",
            f"y: {' '.join(payload['y'])}",
            f"alpha: {payload['alpha']}",
        ],
    )
    return 0


def _cmd_verify(args) -> int:
    results = suites.run_suite(args.suite, args.seed)
    if args.format == "json":
        payload = [
            {
                "suite": r.name,
                "passed": r.passed,
                "failed": r.failed,
                "failures": r.failures,
            }
            for r in results
        ]
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for r in results:
            status = "ok" if r.ok else "FAILED"
            print(
                f"suite {r.name}: {r.passed} passed, {r.failed} failed "
                f"({r.elapsed:.1f}s) {status}"
            )
            for message in r.failures:
                print(f"  - {message}")
    return 0 if all(r.ok for r in results) else 1


_COMMANDS = {
    "reduce": _cmd_reduce,
    "length": _cmd_length,
    "descents": _cmd_descents,
    "enumerate": _cmd_enumerate,
    "decompose": _cmd_decompose,
    "double-coset": _cmd_double_coset,
    "theta": _cmd_theta,
    "iota": _cmd_iota,
    "retract": _cmd_retract,
    "transport": _cmd_transport,
    "theorem": _cmd_theorem,
    "generate": _cmd_generate,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Dispatch a command line; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
