"""Word-level retraction onto a standard subgroup and conjugation transport.

``retract_word`` maps an arbitrary signed word to a word over the subset
X letter by letter: walk the Coxeter projections u_i of the prefixes,
split each as u_i = v_i w_i with v_i in W_X and w_i (X, {})-minimal, and
form the reflection t_i conjugating the current letter by w_{i-1} (for a
positive letter) or w_i (for a negative one).  A letter is emitted, with
its original sign, exactly when t_i is a generator inside X.  The
resulting map on group elements fixes every element of the standard
subgroup and restricts to a homomorphism on colored (Coxeter-trivial)
elements; the full per-letter trace is returned for auditing.

``transport`` moves a conjugation at the Coxeter level into standard
position: when w conjugates every generator of Y into W_X, the minimal
double-coset representative w0 of W_X w W_Y conjugates each s_y to a
single generator s_f(y) in X, giving a subset Y' = f(Y) of X and a
positive conjugator over X.  ``conjugate_into_parabolic`` chains the two:
given a word alpha with (trusted) alpha A_Y alpha^-1 contained in A_X, it
produces Y' and gamma in A_X with alpha A_Y alpha^-1 = gamma A_Y' gamma^-1.
Only the Coxeter-level part of the hypothesis is decidable, and it is
checked; the Artin-level part is the caller's responsibility and the
split is recorded in the audit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from . import coxeter, parabolic, words
from .coxeter import IDENTITY, CoxeterElement
from .errors import InternalAssertionError, PreconditionViolated, SearchExhausted
from .presentation import Presentation
from .words import ArtinLetter, ArtinWord


# -- the retraction ----------------------------------------------------------

@dataclass(frozen=True)
class TraceStep:
    """Per-letter audit record of the retraction walk."""

    index: int  # 1-based position of the letter
    letter: ArtinLetter
    prefix: CoxeterElement  # u_i
    vpart: CoxeterElement  # v_i
    wpart: CoxeterElement  # w_i
    reflection: CoxeterElement  # t_i
    emitted: ArtinLetter | None  # absent encodes "no letter emitted"


@dataclass(frozen=True)
class RetractionTrace:
    steps: tuple[TraceStep, ...]


def _conjugate_generator(
    P: Presentation, w: CoxeterElement, z: int, cap: int | None
) -> CoxeterElement:
    return coxeter.reduce(P, w.word + (z,) + w.word[::-1], cap)


def retract_word(
    P: Presentation,
    X: Sequence[int],
    word: Sequence[ArtinLetter],
    cap: int | None = None,
) -> tuple[ArtinWord, RetractionTrace]:
    """Retract a signed word onto the subset X, with full trace."""
    Xs = P.subset(X)
    Xset = set(Xs)
    u_prev = IDENTITY
    w_prev = IDENTITY
    out: list[ArtinLetter] = []
    steps: list[TraceStep] = []
    for i, (z, eps) in enumerate(word, 1):
        u = coxeter.reduce(P, u_prev.word + (z,), cap)
        decomp = parabolic.decompose_left(P, Xs, u, cap)
        base = w_prev if eps == 1 else decomp.w
        t = _conjugate_generator(P, base, z, cap)
        emitted = None
        if t.length == 1 and t.word[0] in Xset:
            emitted = (t.word[0], eps)
            out.append(emitted)
        steps.append(TraceStep(i, (z, eps), u, decomp.v, decomp.w, t, emitted))
        u_prev, w_prev = u, decomp.w
    return tuple(out), RetractionTrace(tuple(steps))


# -- conjugation transport ---------------------------------------------------

@dataclass
class TransportResult:
    yprime: tuple[int, ...]  # f(Y), a subset of X
    mapping: dict[int, int]  # y -> f(y)
    w0: CoxeterElement  # the (X, Y)-minimal representative
    alpha: ArtinWord  # positive word over X conjugating A_Y' into place


def transport(
    P: Presentation,
    X: Sequence[int],
    Y: Sequence[int],
    w: CoxeterElement,
    cap: int | None = None,
) -> TransportResult:
    """Standardize the conjugate w A_Y w^-1 inside A_X.

    Precondition (checked): w s_y w^-1 lies in W_X for every y in Y; this
    is exactly w W_Y w^-1 contained in W_X.  The length-one property of
    the conjugates by w0 is guaranteed by the theory, so its failure is
    reported as an internal assertion, not an input error.
    """
    Xs = P.subset(X)
    Ys = P.subset(Y)
    for y in Ys:
        conj = _conjugate_generator(P, w, y, cap)
        if not parabolic.member_parabolic(P, Xs, conj, cap):
            raise PreconditionViolated(
                f"conjugate of generator {P.names[y]!r} lands outside the X-parabolic"
            )
    decomposition = parabolic.double_coset_decompose(P, Xs, Ys, w, cap)
    w0 = decomposition.w0
    mapping: dict[int, int] = {}
    for y in Ys:
        t = _conjugate_generator(P, w0, y, cap)
        if t.length != 1 or t.word[0] not in Xs:
            raise InternalAssertionError(
                f"minimal representative fails to conjugate {P.names[y]!r} to a generator of X"
            )
        mapping[y] = t.word[0]
    yprime = tuple(sorted(set(mapping.values())))
    if len(yprime) != len(Ys):
        raise InternalAssertionError("transport map is not injective")
    return TransportResult(yprime, mapping, w0, words.positive_lift(decomposition.u1))


# -- the end-to-end pipeline -------------------------------------------------

@dataclass
class ConjugationAudit:
    w: CoxeterElement  # Coxeter image of the input conjugator
    w0: CoxeterElement
    beta1: ArtinWord  # colored part of the conjugator
    beta2: ArtinWord  # transported positive part, over X
    pi_of_beta1: ArtinWord
    trace: RetractionTrace


@dataclass
class ConjugationResult:
    yprime: tuple[int, ...]
    gamma: ArtinWord
    audit: ConjugationAudit


def conjugate_into_parabolic(
    P: Presentation,
    X: Sequence[int],
    Y: Sequence[int],
    alpha: Sequence[ArtinLetter],
    cap: int | None = None,
) -> ConjugationResult:
    """Standardize alpha A_Y alpha^-1 inside A_X as gamma A_Y' gamma^-1.

    Trusted: alpha A_Y alpha^-1 is contained in A_X (undecidable in
    general).  Checked: the Coxeter shadow of that inclusion, via
    ``transport`` on the projection of alpha.
    """
    Xs = P.subset(X)
    Ys = P.subset(Y)
    alpha = tuple(alpha)
    w = words.coxeter_image(P, alpha, cap)
    moved = transport(P, Xs, Ys, w, cap)
    beta2 = moved.alpha
    beta1 = words.concat(alpha, words.invert_word(words.positive_lift(w)))
    if not words.is_colored(P, beta1, cap):
        raise InternalAssertionError("conjugator residue is not colored")
    pi_beta1, trace = retract_word(P, Xs, beta1, cap)
    gamma = words.concat(pi_beta1, beta2)
    return ConjugationResult(
        moved.yprime,
        gamma,
        ConjugationAudit(w, moved.w0, beta1, beta2, pi_beta1, trace),
    )


# -- checking the colored conjugation identity -------------------------------

@dataclass
class IdentityCheckReport:
    verdict: words.EqualityVerdict
    lhs: ArtinWord
    rhs: ArtinWord


def check_colored_conjugation(
    P: Presentation,
    X: Sequence[int],
    alpha: Sequence[ArtinLetter],
    beta: Sequence[ArtinLetter],
    cap: int | None = None,
) -> IdentityCheckReport:
    """Compare beta alpha beta^-1 against its retracted-conjugator form.

    For colored beta and alpha over X with beta alpha beta^-1 in A_X
    (trusted), the two sides agree; the report carries both words and the
    oracle's verdict.
    """
    Xs = P.subset(X)
    alpha = tuple(alpha)
    beta = tuple(beta)
    if not words.is_colored(P, beta, cap):
        raise PreconditionViolated("beta is not colored")
    if not words.is_supported(alpha, Xs):
        raise PreconditionViolated("alpha is not supported on X")
    lhs = words.concat(beta, alpha, words.invert_word(beta))
    pi_beta, _ = retract_word(P, Xs, beta, cap)
    rhs = words.concat(pi_beta, alpha, words.invert_word(pi_beta))
    return IdentityCheckReport(words.equals_oracle(P, lhs, rhs, cap), lhs, rhs)


# -- instance generation -----------------------------------------------------

@dataclass
class GeneratedInstance:
    x: tuple[int, ...]
    y: tuple[int, ...]
    alpha: ArtinWord
    w: CoxeterElement  # the planted Coxeter conjugator, for auditing


def generate_instance(
    P: Presentation,
    seed: int,
    x_size: int,
    y_size: int,
    pad_len: int,
    w_search_len: int = 4,
    cap: int | None = None,
) -> GeneratedInstance:
    """Random instance satisfying the trusted hypothesis by construction.

    Picks X, then hunts for a Coxeter element w whose generator conjugates
    land in W_X for at least y_size generators; Y is sampled from that
    domain and alpha is (X-word) * lift(w) * (Y-word), so
    alpha A_Y alpha^-1 sits inside A_X by the transport lemma.  The word
    search starts at a seeded length and grows, wrapping to shorter
    lengths last, so small witnesses are preferred inside the sampled
    band while w = 1 does not dominate every run.  Deterministic per seed.
    """
    n = len(P.names)
    if not (0 <= x_size <= n and 0 <= y_size <= n and pad_len >= 0 and w_search_len >= 0):
        raise PreconditionViolated("instance parameters outside presentation bounds")
    rng = random.Random(seed)
    X = tuple(sorted(rng.sample(range(n), x_size)))
    start = rng.randint(0, w_search_len)
    band = list(range(start, w_search_len + 1)) + list(range(0, start))
    seen: set[tuple[int, ...]] = set()
    for length in band:
        candidates = _sample_words(rng, n, length)
        for cw in candidates:
            w = coxeter.reduce(P, cw, cap)
            if w.length != length or w.word in seen:
                continue
            seen.add(w.word)
            domain = [
                y
                for y in range(n)
                if parabolic.member_parabolic(
                    P, X, _conjugate_generator(P, w, y, cap), cap
                )
            ]
            if len(domain) >= y_size:
                Y = tuple(sorted(rng.sample(domain, y_size)))
                pad_x = tuple(
                    (rng.choice(X), rng.choice((1, -1))) for _ in range(pad_len)
                ) if X else ()
                pad_y = tuple(
                    (rng.choice(Y), rng.choice((1, -1))) for _ in range(pad_len)
                ) if Y else ()
                alpha = words.concat(pad_x, words.positive_lift(w), pad_y)
                return GeneratedInstance(X, Y, alpha, w)
    raise SearchExhausted(
        f"no admissible conjugator of length <= {w_search_len} for |Y| = {y_size}"
    )


def _sample_words(rng: random.Random, n: int, length: int, budget: int = 512):
    if n == 0:
        return [()] if length == 0 else []
    total = n ** length
    if total <= budget:
        out = []
        for k in range(total):
            word = []
            v = k
            for _ in range(length):
                word.append(v % n)
                v //= n
            out.append(tuple(word))
        rng.shuffle(out)
        return out
    return [tuple(rng.randrange(n) for _ in range(length)) for _ in range(budget)]


# -- verification of a pipeline result ---------------------------------------

@dataclass
class ConjugationVerification:
    support_ok: bool
    coxeter_level_ok: bool
    artin_level: str  # 'passed' | 'failed' | 'skipped'
    details: list[str]

    @property
    def ok(self) -> bool:
        return self.support_ok and self.coxeter_level_ok and self.artin_level != "failed"


def verify_conjugation(
    P: Presentation,
    X: Sequence[int],
    Y: Sequence[int],
    alpha: Sequence[ArtinLetter],
    result: ConjugationResult,
    cap: int | None = None,
) -> ConjugationVerification:
    """Check a pipeline result at every decidable level.

    (i) gamma is supported on X; (ii) the conjugated Coxeter parabolics
    agree, tested on generators in both directions; (iii) in presentations
    whose word problem the oracle decides, the conjugated Artin subgroups
    agree on generators via bounded membership.  Failures are report
    entries, never exceptions.
    """
    Xs = P.subset(X)
    Ys = P.subset(Y)
    alpha = tuple(alpha)
    details: list[str] = []
    gamma = result.gamma
    yprime = result.yprime

    support_ok = words.is_supported(gamma, Xs)
    if not support_ok:
        details.append("gamma uses letters outside X")

    theta_alpha = words.coxeter_image(P, alpha, cap)
    theta_gamma = words.coxeter_image(P, gamma, cap)
    # k conjugates W_Y' onto theta(alpha)^-1 theta(gamma) W_Y' ... both
    # inclusions on generators decide subgroup equality
    k = coxeter.multiply(P, coxeter.invert(P, theta_alpha, cap), theta_gamma, cap)
    k_inv = coxeter.invert(P, k, cap)
    coxeter_level_ok = True
    for yp in yprime:
        conj = coxeter.reduce(P, k.word + (yp,) + k_inv.word, cap)
        if not parabolic.member_parabolic(P, Ys, conj, cap):
            coxeter_level_ok = False
            details.append(f"coxeter level: image of {P.names[yp]!r} escapes W_Y")
    for y in Ys:
        conj = coxeter.reduce(P, k_inv.word + (y,) + k.word, cap)
        if not parabolic.member_parabolic(P, yprime, conj, cap):
            coxeter_level_ok = False
            details.append(f"coxeter level: preimage of {P.names[y]!r} escapes W_Y'")

    if words.classify_presentation(P) == "general":
        artin_level = "skipped"
    else:
        ok = True
        inv_gamma = words.invert_word(gamma)
        inv_alpha = words.invert_word(alpha)
        for y in Ys:
            h = words.concat(inv_gamma, alpha, ((y, 1),), inv_alpha, gamma)
            if not words.member_standard_artin(P, yprime, h, cap):
                ok = False
                details.append(f"artin level: conjugate of {P.names[y]!r} escapes A_Y'")
        for yp in yprime:
            h = words.concat(inv_alpha, gamma, ((yp, 1),), inv_gamma, alpha)
            if not words.member_standard_artin(P, Ys, h, cap):
                ok = False
                details.append(f"artin level: conjugate of {P.names[yp]!r} escapes A_Y")
        artin_level = "passed" if ok else "failed"

    return ConjugationVerification(support_ok, coxeter_level_ok, artin_level, details)
