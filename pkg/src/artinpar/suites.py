"""Runnable verification suites behind ``verify --suite <name>``.

Each suite hammers one layer of the tower with oracle-backed or
exhaustive checks and reports pass/fail counts; the acceptance tests call
the same functions.  Suite keys are stable CLI identifiers:

- ``coxeter-oracle``: kernel canonical forms and multiplication against
  an independently built reflection-matrix table, on five finite types.
- ``lemma21``: exhaustive double-coset decomposition properties over the
  24-element type-A3 group, against brute-force coset enumeration.
- ``prop23``: the retraction fixes subgroup words letter-for-letter, is
  well-defined on group elements (fuzzed rewriting), and is a
  homomorphism on colored words.
- ``lemma22``: conjugation transport, exhaustive at the Coxeter level and
  oracle-checked at the Artin level on dihedral presentations.
- ``lemma24``: the colored conjugation identity on hypothesis-true
  instances in every decidable class.
- ``theorem11``: the end-to-end standardization pipeline on generated
  instances across six presentation classes.

Everything is deterministic for a fixed seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import catalog
from .coxeter import enumerate_elements, multiply, reduce
from .parabolic import (
    double_coset_decompose,
    enumerate_parabolic,
    is_minimal,
    member_parabolic,
)
from .presentation import Presentation
from .retraction import (
    conjugate_into_parabolic,
    check_colored_conjugation,
    generate_instance,
    retract_word,
    transport,
    verify_conjugation,
)
from .words import (
    ArtinWord,
    classify_presentation,
    colorize,
    concat,
    coxeter_image,
    equals_oracle,
    fuzz_rewrite,
    invert_word,
    member_standard_artin,
    merged_abelianization,
    positive_lift,
    restrict_word,
)

MAX_REPORTED_FAILURES = 25


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, message: str = "") -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(message)


def _subsets(n: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    for x in range(n):
        out += [s + (x,) for s in out]
    return sorted(out, key=lambda s: (len(s), s))


def _random_word(rng: random.Random, support: Sequence[int], length: int) -> ArtinWord:
    if not support:
        return ()
    return tuple((rng.choice(support), rng.choice((1, -1))) for _ in range(length))


def _random_subset(rng: random.Random, n: int, allow_empty: bool = False) -> tuple[int, ...]:
    size = rng.randint(0 if allow_empty else 1, n)
    return tuple(sorted(rng.sample(range(n), size)))


# -- coxeter-oracle ----------------------------------------------------------

_FINITE_TYPES = (("a2", 6), ("b2", 8), ("i2_5", 10), ("a1xa1", 4), ("a3", 24))


def suite_coxeter_oracle(seed: int = 0) -> SuiteResult:
    from . import oracle  # sympy import deferred to first use

    res = SuiteResult("coxeter-oracle")
    start = time.time()
    for name, expected in _FINITE_TYPES:
        P = catalog.builtin(name)
        elements, closed = enumerate_elements(P, 10 * expected)
        res.record(closed and len(elements) == expected,
                   f"{name}: BFS gave {len(elements)} elements (closed={closed})")
        table = oracle.bfs_table(P, 10 * expected)
        res.record(table.order == expected,
                   f"{name}: matrix BFS order {table.order} != {expected}")
        mapped = [reduce(P, w) for w in table.words]
        res.record(len({e.word for e in mapped}) == table.order,
                   f"{name}: canonical forms collide across distinct matrices")
        for i, elem in enumerate(mapped):
            res.record(table.index_of_word(elem.word) == i,
                       f"{name}: canonical form of element {i} maps to a different matrix")
        for i in range(table.order):
            for j in range(table.order):
                got = multiply(P, mapped[i], mapped[j])
                want = mapped[table.product(i, j)]
                if got != want:
                    res.record(False, f"{name}: product {i}*{j} disagrees with the table")
                else:
                    res.record(True)
    res.elapsed = time.time() - start
    return res


# -- lemma21: double cosets, exhaustive --------------------------------------

def suite_double_cosets(seed: int = 0) -> SuiteResult:
    res = SuiteResult("lemma21")
    start = time.time()
    P = catalog.builtin("a3")
    elements, closed = enumerate_elements(P, 50)
    res.record(closed and len(elements) == 24, "a3 enumeration failed")
    subsets = _subsets(3)
    parabolics = {S: enumerate_parabolic(P, S, 50)[0] for S in subsets}
    for X in subsets:
        WX = parabolics[X]
        for Y in subsets:
            WY = parabolics[Y]
            additivity_seen: set[tuple[int, ...]] = set()
            for u in elements:
                d = double_coset_decompose(P, X, Y, u)
                res.record(member_parabolic(P, X, d.u1), f"u1 outside W_X for {u.word} {X} {Y}")
                res.record(member_parabolic(P, Y, d.u2), f"u2 outside W_Y for {u.word} {X} {Y}")
                res.record(is_minimal(P, X, Y, d.w0), f"w0 not minimal for {u.word} {X} {Y}")
                rebuilt = multiply(P, d.u1, multiply(P, d.w0, d.u2))
                res.record(rebuilt == u, f"decomposition does not rebuild {u.word}")
                res.record(
                    d.u1.length + d.w0.length + d.u2.length == u.length,
                    f"length additivity fails for {u.word} {X} {Y}",
                )
                coset = {
                    multiply(P, a, multiply(P, u, b)) for a in WX for b in WY
                }
                min_len = min(v.length for v in coset)
                minimal = [v for v in coset if v.length == min_len]
                res.record(
                    len(minimal) == 1 and minimal[0] == d.w0,
                    f"brute-force minimum differs for {u.word} {X} {Y}",
                )
                res.record(
                    is_minimal(P, X, Y, u) == (u == d.w0),
                    f"descent minimality criterion disagrees for {u.word} {X} {Y}",
                )
                if d.w0.word not in additivity_seen:
                    additivity_seen.add(d.w0.word)
                    ok_left = all(
                        multiply(P, a, d.w0).length == a.length + d.w0.length for a in WX
                    )
                    ok_right = all(
                        multiply(P, d.w0, b).length == d.w0.length + b.length for b in WY
                    )
                    res.record(ok_left, f"left additivity fails at w0={d.w0.word} {X} {Y}")
                    res.record(ok_right, f"right additivity fails at w0={d.w0.word} {X} {Y}")
    res.elapsed = time.time() - start
    return res


# -- prop23: the retraction --------------------------------------------------

_IDENTITY_PRESENTATIONS = ("a2", "b2", "i2_5", "free3", "triangle3", "a3")

_DECIDABLE_CLASSES = (
    ("dihedral m=3", "a2"),
    ("dihedral m=4", "b2"),
    ("dihedral m=5", "i2_5"),
    ("right-angled square", "raag_square"),
    ("free rank 3", "free3"),
)


def _x_choices(P: Presentation) -> list[tuple[int, ...]]:
    n = len(P.names)
    if n == 2:
        return [(0,), (1,), (0, 1)]
    return [(0,), tuple(range(1, n)), tuple(range(n))]


def suite_retraction_identity(seed: int = 0) -> SuiteResult:
    """Words over the subset come back letter-for-letter unchanged."""
    res = SuiteResult("prop23-identity")
    start = time.time()
    rng = random.Random(seed)
    per_combo = 1008 // (len(_IDENTITY_PRESENTATIONS) * 3)
    for name in _IDENTITY_PRESENTATIONS:
        P = catalog.builtin(name)
        for X in _x_choices(P):
            for _ in range(per_combo):
                w = _random_word(rng, X, rng.randint(0, 30))
                out, _trace = retract_word(P, X, w)
                res.record(out == w, f"{name} X={X}: retraction altered a subset word")
    res.elapsed = time.time() - start
    return res


def suite_well_definedness(seed: int = 0) -> SuiteResult:
    """Rewriting the input word never changes the retracted element."""
    res = SuiteResult("prop23-well-defined")
    start = time.time()
    rng = random.Random(seed)
    for label, name in _DECIDABLE_CLASSES:
        P = catalog.builtin(name)
        n = len(P.names)
        for k in range(500):
            X = _random_subset(rng, n)
            w = _random_word(rng, range(n), rng.randint(0, 20))
            w2 = fuzz_rewrite(P, w, rng.randrange(2**30), rng.randint(0, 20))
            o1, _ = retract_word(P, X, w)
            o2, _ = retract_word(P, X, w2)
            verdict = equals_oracle(P, o1, o2)
            res.record(
                verdict.is_equal,
                f"{label} #{k}: retractions differ ({verdict.verdict.value})",
            )
    tri = catalog.builtin("triangle3")
    X = (0, 1, 2)
    for k in range(500):
        w = _random_word(rng, range(3), rng.randint(0, 20))
        w2 = fuzz_rewrite(tri, w, rng.randrange(2**30), rng.randint(0, 20))
        o1, _ = retract_word(tri, X, w)
        o2, _ = retract_word(tri, X, w2)
        sub, r1 = restrict_word(tri, X, o1)
        _, r2 = restrict_word(tri, X, o2)
        res.record(
            coxeter_image(sub, r1) == coxeter_image(sub, r2),
            f"triangle #{k}: coxeter images of retractions differ",
        )
        res.record(
            merged_abelianization(sub, r1) == merged_abelianization(sub, r2),
            f"triangle #{k}: merged abelianizations of retractions differ",
        )
    res.elapsed = time.time() - start
    return res


def suite_colored_homomorphism(seed: int = 0) -> SuiteResult:
    """On colored words the retraction multiplies."""
    res = SuiteResult("prop23-colored")
    start = time.time()
    rng = random.Random(seed)
    for label, name in _DECIDABLE_CLASSES:
        P = catalog.builtin(name)
        n = len(P.names)
        for k in range(200):
            X = _random_subset(rng, n)
            b1 = colorize(P, _random_word(rng, range(n), rng.randint(0, 20)))
            b2 = colorize(P, _random_word(rng, range(n), rng.randint(0, 20)))
            joint, _ = retract_word(P, X, concat(b1, b2))
            p1, _ = retract_word(P, X, b1)
            p2, _ = retract_word(P, X, b2)
            verdict = equals_oracle(P, joint, concat(p1, p2))
            res.record(
                verdict.is_equal,
                f"{label} #{k}: colored retraction is not multiplicative",
            )
    res.elapsed = time.time() - start
    return res


def suite_prop23(seed: int = 0) -> SuiteResult:
    res = SuiteResult("prop23")
    start = time.time()
    for part in (
        suite_retraction_identity(seed),
        suite_well_definedness(seed),
        suite_colored_homomorphism(seed),
    ):
        res.passed += part.passed
        res.failed += part.failed
        room = max(0, MAX_REPORTED_FAILURES - len(res.failures))
        res.failures += part.failures[:room]
    res.elapsed = time.time() - start
    return res


# -- lemma22: conjugation transport ------------------------------------------

def suite_transport(seed: int = 0) -> SuiteResult:
    res = SuiteResult("lemma22")
    start = time.time()
    P = catalog.builtin("a3")
    elements, _ = enumerate_elements(P, 50)
    subsets = _subsets(3)
    for X in subsets:
        for Y in subsets:
            for w in elements:
                admissible = all(
                    member_parabolic(
                        P, X, reduce(P, w.word + (y,) + w.word[::-1])
                    )
                    for y in Y
                )
                if not admissible:
                    continue
                moved = transport(P, X, Y, w)
                res.record(
                    len(moved.yprime) == len(Y),
                    f"transport not injective at w={w.word} {X} {Y}",
                )
                for y in Y:
                    conj = reduce(P, moved.w0.word + (y,) + moved.w0.word[::-1])
                    res.record(
                        conj.word == (moved.mapping[y],),
                        f"conjugate of {y} by w0 is not the single generator f(y)",
                    )
                d = double_coset_decompose(P, X, Y, w)
                res.record(
                    d.u1.length + d.w0.length + d.u2.length == w.length,
                    f"transport decomposition not length-additive at w={w.word}",
                )
    for m in (3, 4, 5):
        P = catalog.dihedral_presentation(m)
        elements, _ = enumerate_elements(P, 4 * m)
        short = [w for w in elements if w.length <= 6]
        subsets2 = _subsets(2)
        for X in subsets2:
            for Y in subsets2:
                for w in short:
                    admissible = all(
                        member_parabolic(
                            P, X, reduce(P, w.word + (y,) + w.word[::-1])
                        )
                        for y in Y
                    )
                    if not admissible:
                        continue
                    moved = transport(P, X, Y, w)
                    lift_w = positive_lift(w)
                    lift_w0 = positive_lift(moved.w0)
                    for y in Y:
                        lhs = concat(lift_w0, ((y, 1),), invert_word(lift_w0))
                        verdict = equals_oracle(P, lhs, ((moved.mapping[y], 1),))
                        res.record(
                            verdict.is_equal,
                            f"m={m}: lifted w0 fails to conjugate generator {y}",
                        )
                        conj = concat(lift_w, ((y, 1),), invert_word(lift_w))
                        h = concat(invert_word(moved.alpha), conj, moved.alpha)
                        res.record(
                            member_standard_artin(P, moved.yprime, h),
                            f"m={m}: conjugated generator {y} escapes the target subgroup",
                        )
                    for yp in moved.yprime:
                        back = concat(moved.alpha, ((yp, 1),), invert_word(moved.alpha))
                        h = concat(invert_word(lift_w), back, lift_w)
                        res.record(
                            member_standard_artin(P, Y, h),
                            f"m={m}: target generator {yp} escapes the source subgroup",
                        )
    res.elapsed = time.time() - start
    return res


# -- lemma24: colored conjugation identity ------------------------------------

def suite_colored_conjugation(seed: int = 0) -> SuiteResult:
    res = SuiteResult("lemma24")
    start = time.time()
    rng = random.Random(seed)
    for label, name in _DECIDABLE_CLASSES:
        P = catalog.builtin(name)
        n = len(P.names)
        for k in range(50):
            X = _random_subset(rng, n)
            alpha = _random_word(rng, X, rng.randint(0, 8))
            beta = colorize(P, _random_word(rng, X, rng.randint(0, 10)))
            rep = check_colored_conjugation(P, X, alpha, beta)
            res.record(rep.verdict.is_equal, f"{label} subgroup-colored #{k} not equal")
        for k in range(50):
            X = _random_subset(rng, n)
            alpha = _random_word(rng, X, rng.randint(0, 8))
            u = _random_word(rng, range(n), rng.randint(0, 6))
            beta = concat(u, invert_word(u))
            rep = check_colored_conjugation(P, X, alpha, beta)
            res.record(rep.verdict.is_equal, f"{label} freely-trivial #{k} not equal")
        made = 0
        attempt = 0
        while made < 50 and attempt < 400:
            attempt += 1
            x_size = rng.randint(1, n)
            inst = generate_instance(
                P,
                rng.randrange(2**30),
                x_size,
                rng.randint(1, x_size),
                rng.randint(0, 5),
            )
            if not inst.y:
                continue
            result = conjugate_into_parabolic(P, inst.x, inst.y, inst.alpha)
            if not result.yprime:
                continue
            yp = rng.choice(result.yprime)
            alpha24 = concat(
                result.audit.beta2,
                ((yp, rng.choice((1, -1))),),
                invert_word(result.audit.beta2),
            )
            rep = check_colored_conjugation(P, inst.x, alpha24, result.audit.beta1)
            res.record(rep.verdict.is_equal, f"{label} pipeline-derived not equal")
            made += 1
        res.record(made == 50, f"{label}: only {made} pipeline-derived instances")
    res.elapsed = time.time() - start
    return res


# -- theorem11: the pipeline ----------------------------------------------------

_PIPELINE_CLASSES = (
    ("dihedral m=3", "a2"),
    ("dihedral m=4", "b2"),
    ("right-angled square", "raag_square"),
    ("free rank 3", "free3"),
    ("label-3 triangle", "triangle3"),
    ("type A3", "a3"),
)


def suite_pipeline(seed: int = 0) -> SuiteResult:
    res = SuiteResult("theorem11")
    start = time.time()
    rng = random.Random(seed)
    for label, name in _PIPELINE_CLASSES:
        P = catalog.builtin(name)
        n = len(P.names)
        decidable = classify_presentation(P) != "general"
        for k in range(100):
            x_size = rng.randint(1, n)
            y_size = rng.randint(0, x_size)
            inst = generate_instance(
                P, rng.randrange(2**30), x_size, y_size, rng.randint(0, 6)
            )
            try:
                result = conjugate_into_parabolic(P, inst.x, inst.y, inst.alpha)
            except Exception as exc:  # any failure is a suite failure
                res.record(False, f"{label} #{k}: pipeline raised {exc!r}")
                continue
            check = verify_conjugation(P, inst.x, inst.y, inst.alpha, result)
            res.record(check.support_ok, f"{label} #{k}: gamma leaves X")
            res.record(
                check.coxeter_level_ok,
                f"{label} #{k}: coxeter-level subgroup equality fails",
            )
            if decidable:
                res.record(
                    check.artin_level == "passed",
                    f"{label} #{k}: artin-level check {check.artin_level}",
                )
            else:
                res.record(
                    check.artin_level == "skipped",
                    f"{label} #{k}: expected skip, got {check.artin_level}",
                )
    a2 = catalog.builtin("a2")
    pinned = conjugate_into_parabolic(a2, (0,), (1,), ((1, 1), (0, 1)))
    res.record(
        pinned.yprime == (0,) and pinned.gamma == (),
        "pinned dihedral instance: expected Y'={a}, gamma empty",
    )
    res.elapsed = time.time() - start
    return res


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "coxeter-oracle": suite_coxeter_oracle,
    "lemma21": suite_double_cosets,
    "prop23": suite_prop23,
    "lemma22": suite_transport,
    "lemma24": suite_colored_conjugation,
    "theorem11": suite_pipeline,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, seed: int = 0) -> list[SuiteResult]:
    if name == "all":
        return [fn(seed) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name](seed)]
