#!/usr/bin/env python3
"""Walk through the retraction and the standardization pipeline by hand.

Prints the per-letter trace of retracting a conjugating word in the
3-strand braid group onto one generator, then runs the full pipeline on a
padded conjugator and on a batch of generated instances, checking each
result at every decidable level.
"""

import argparse

from artinpar import (
    catalog,
    conjugate_into_parabolic,
    format_artin_word,
    format_coxeter_word,
    generate_instance,
    parse_artin_word,
    retract_word,
    verify_conjugation,
)


def show_trace(P, X, text):
    word = parse_artin_word(P, text)
    out, trace = retract_word(P, X, word)
    print(f"retract {text!r} onto {{{', '.join(P.names[x] for x in X)}}}")
    for step in trace.steps:
        emitted = format_artin_word(P, (step.emitted,)) if step.emitted else "-"
        print(
            f"  {step.index}: letter={format_artin_word(P, (step.letter,)):>5}"
            f"  u={format_coxeter_word(P, step.prefix.word) or '-':<8}"
            f"  v={format_coxeter_word(P, step.vpart.word) or '-':<4}"
            f"  w={format_coxeter_word(P, step.wpart.word) or '-':<6}"
            f"  t={format_coxeter_word(P, step.reflection.word) or '-':<6}"
            f"  emits {emitted}"
        )
    print(f"  -> {format_artin_word(P, out) or '(empty)'}\n")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--instances", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    a2 = catalog.builtin("a2")
    show_trace(a2, (0,), "b a b^-1")
    show_trace(a2, (0,), "a b a^-1")

    alpha = parse_artin_word(a2, "a^-1 a^-1 a^-1 b a b b")
    result = conjugate_into_parabolic(a2, (0,), (1,), alpha)
    print(f"pipeline on alpha = {format_artin_word(a2, alpha)!r}, X={{a}}, Y={{b}}:")
    print(f"  yprime = {[a2.names[y] for y in result.yprime]}")
    print(f"  gamma  = {format_artin_word(a2, result.gamma) or '(empty)'}")
    check = verify_conjugation(a2, (0,), (1,), alpha, result)
    print(f"  checks: support={check.support_ok} coxeter={check.coxeter_level_ok} "
          f"artin={check.artin_level}\n")

    for name in ("a3", "raag_square", "triangle3"):
        P = catalog.builtin(name)
        n = len(P.names)
        print(f"{name}: {args.instances} generated instances")
        for k in range(args.instances):
            inst = generate_instance(P, args.seed + k, max(1, n - 1), 1, 3)
            res = conjugate_into_parabolic(P, inst.x, inst.y, inst.alpha)
            check = verify_conjugation(P, inst.x, inst.y, inst.alpha, res)
            print(
                f"  seed {args.seed + k}: |alpha|={len(inst.alpha):>2} "
                f"w={format_coxeter_word(P, inst.w.word) or '1':<10} "
                f"yprime={{{', '.join(P.names[y] for y in res.yprime)}}} "
                f"ok={check.ok}"
            )
        print()


if __name__ == "__main__":
    main()
