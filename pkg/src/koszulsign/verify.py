"""Independent oracles and the runnable identity suite.

Three routes to the sign of a permutation are cross-checked: the bubble-sort
evaluation (``kappa``), the inversion-sum closed form (``kappa_exponent``),
and evaluation of a BFS-shortest generator word (``kappa_bruteforce_minword``).
``run_suite`` sweeps every identity the construction is supposed to satisfy
over exhaustive S_n at small n and seeded random degree vectors covering all
parity patterns.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import words
from .cohomology import (
    SIGNATURE,
    TRIVIAL,
    build_cf,
    coboundary1,
    coboundary2,
    identity_row,
    inverse_table,
    is_cocycle,
    module_from_degrees,
    mul_table,
    perm_list,
)
from .core import (
    GradedSequence,
    Permutation,
    act,
    bubble_swaps,
    is_constant_one,
    is_morphism,
    kappa,
    kappa_exponent,
    morphism_bruteforce,
)
from .errors import DomainError, ResourceError

MINWORD_BOUND = 5
SUITE_BOUND = 6
# The permutation of the worked five-symbol example: rho = [2,5,3,1,4].
EXAMPLE_RHO = Permutation((2, 5, 3, 1, 4))
# Its sign exponent as unordered position pairs: z1z4 + z2z3 + z2z4 + z2z5 + z3z4.
EXAMPLE_TERMS = frozenset({(1, 4), (2, 3), (2, 4), (2, 5), (3, 4)})


@lru_cache(maxsize=None)
def _min_words(n: int):
    """BFS over S_n from the identity: rank -> shortest generator index word."""
    gens = [Permutation.adjacent(i, n) for i in range(1, n)]
    start = Permutation.identity(n)
    found = {start: ()}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        word = found[p]
        for i, s in enumerate(gens, start=1):
            q = s * p
            if q not in found:
                # q = s_i o p, so prepend the new letter (leftmost applied last)
                found[q] = (i,) + word
                queue.append(q)
    return {p.rank(): w for p, w in found.items()}


def kappa_bruteforce_minword(sigma: Permutation, g: GradedSequence) -> int:
    """Evaluate the sign along a BFS-shortest generator word for sigma."""
    if sigma.n > MINWORD_BOUND:
        raise ResourceError(f"n={sigma.n} exceeds minimal-word bound {MINWORD_BOUND}")
    indices = _min_words(sigma.n)[sigma.rank()]
    return words.kappa_word(words.Word.from_indices(indices, sigma.n), g)


def sign_exponent_terms(sigma: Permutation):
    """The degree-product terms of the sign exponent of kappa(sigma, f).

    Tracks base positions through the bubble-sort swaps: each swap of the
    symbols originally at positions a and b contributes the term z_a*z_b.
    Returned as sorted (a, b) pairs with a < b.
    """
    order = list(range(1, sigma.n + 1))
    terms = []
    for j in bubble_swaps(sigma):
        a, b = order[j - 1], order[j]
        terms.append((min(a, b), max(a, b)))
        order[j - 1], order[j] = order[j], order[j - 1]
    return sorted(terms)


def parity_patterns(n: int):
    """All 2**n vectors in {0,1}^n."""
    return list(itertools.product((0, 1), repeat=n))


def lift_pattern(pattern, rng) -> tuple:
    """Random degrees in [-50, 50] with the given parities."""
    return tuple(rng.randrange(-25, 25) * 2 + bit for bit in pattern)


@dataclass
class CheckResult:
    """Outcome of one named identity check."""

    name: str
    population: str
    passed: int = 0
    failed: int = 0
    first_counterexample: str | None = None

    def record(self, ok: bool, count: int = 1, render=None):
        if ok:
            self.passed += count
        else:
            self.failed += count
            if self.first_counterexample is None and render is not None:
                self.first_counterexample = render()

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class SuiteReport:
    """Aggregated results of ``run_suite``, deterministic for a given seed."""

    checks: list = field(default_factory=list)
    seed: int = 0
    n_range: tuple = (2, 5)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_text(self) -> str:
        lines = [f"identity suite: n={self.n_range[0]}..{self.n_range[1]} seed={self.seed}"]
        for c in sorted(self.checks, key=lambda c: c.name):
            status = "PASS" if c.ok else "FAIL"
            lines.append(
                f"[{status}] {c.name}: {c.passed} passed, {c.failed} failed ({c.population})"
            )
            if c.first_counterexample:
                lines.append(f"       counterexample: {c.first_counterexample}")
        lines.append(f"overall: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "n_range": list(self.n_range),
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "population": c.population,
                    "passed": c.passed,
                    "failed": c.failed,
                    "first_counterexample": c.first_counterexample,
                }
                for c in sorted(self.checks, key=lambda c: c.name)
            ],
        }


def _render(n, degrees, sigma=None, extra=""):
    parts = [f"n={n}", f"degrees={tuple(degrees)}"]
    if sigma is not None:
        parts.append(f"sigma={sigma.one_line()} {sigma.cycle_string()}")
    if extra:
        parts.append(extra)
    return " ".join(parts)


def check_word_invariance(n: int, trials: int, rng, degree_vectors=None):
    """Relator, conjugated-relator, and normal-closure invariance of the word sign.

    Returns (relator_check, conjugate_check, absorption_check) CheckResults.
    Shared by the suite and by the acceptance tests.
    """
    if degree_vectors is None:
        degree_vectors = [lift_pattern(p, rng) for p in parity_patterns(n)]
    rel = CheckResult("relator-invariance", f"n={n}, all relators x {len(degree_vectors)} degree vectors")
    conj = CheckResult("conjugate-relator-invariance", f"n={n}, {trials} random conjugations")
    absorb = CheckResult("decomposition-independence", f"n={n}, {trials} random words with relator products")
    rels = words.relators(n)
    seqs = [GradedSequence.from_degrees(d) for d in degree_vectors]
    for r in rels:
        ident = words.project(r).is_identity()
        rel.record(ident, render=lambda r=r: f"relator {r} does not project to identity")
        for g in seqs:
            rel.record(
                words.kappa_word(r, g) == 1,
                render=lambda r=r, g=g: f"n={n} relator {r} degrees={g.degrees}",
            )
    for _ in range(trials):
        g = rng.choice(seqs)
        r = rng.choice(rels)
        x = words.random_word(n, rng, max_len=16)
        conj.record(
            words.kappa_word(x * r * x.inverse(), g) == 1,
            render=lambda x=x, r=r, g=g: f"n={n} x={x} r={r} degrees={g.degrees}",
        )
        # a = product of conjugated relators lies in the normal closure
        a = words.Word.empty(n)
        for _ in range(rng.randint(1, 3)):
            y = words.random_word(n, rng, max_len=8)
            a = a * (y * rng.choice(rels) * y.inverse())
        w = words.random_word(n, rng, max_len=16)
        absorb.record(
            words.kappa_word(a * w, g) == words.kappa_word(w, g),
            render=lambda a=a, w=w, g=g: f"n={n} a={a} x={w} degrees={g.degrees}",
        )
    return rel, conj, absorb


def run_suite(n_max: int = 5, degree_samples: int = 2, seed: int = 0) -> SuiteReport:
    """Run every identity check over n = 2..n_max; deterministic given seed."""
    if not 2 <= n_max <= SUITE_BOUND:
        if n_max > SUITE_BOUND:
            raise ResourceError(f"n_max={n_max} exceeds suite bound {SUITE_BOUND}")
        raise DomainError(f"n_max must be at least 2, got {n_max}")
    rng = random.Random(seed)
    report = SuiteReport(seed=seed, n_range=(2, n_max))
    ns = range(2, n_max + 1)
    ex_ns = [n for n in ns if n <= 5]
    scope = f"n={2}..{n_max}, all parity patterns, degrees in [-50,50]"

    gen_vals = CheckResult("generator-values", scope)
    cocycle = CheckResult("cocycle-identity", scope + ", exhaustive triples for n<=5")
    oracle = CheckResult("oracle-equivalence", scope)
    minword = CheckResult("minword-agreement", scope + " (n<=5)")
    inverse = CheckResult("inverse-identity", scope)
    parinv = CheckResult("parity-invariance", scope + f", {degree_samples} lifts per pattern")
    morphism = CheckResult("morphism-criterion", "n<=5, every parity pattern, brute force vs parity rule")
    constone = CheckResult("constant-one-criterion", "n<=5, every parity pattern")
    action = CheckResult("action-compatibility", scope + ", sampled pairs")
    allodd = CheckResult("all-odd-signature", "all-odd degrees, exhaustive S_n for n<=5")
    alleven = CheckResult("all-even-constant", "all-even degrees, exhaustive S_n for n<=5")
    report.checks += [
        gen_vals, cocycle, oracle, minword, inverse, parinv,
        morphism, constone, action, allodd, alleven,
    ]

    for n in ex_ns:
        perms = perm_list(n)
        mul = mul_table(n)
        inv = inverse_table(n)
        sgn = np.array([p.sign() for p in perms], dtype=np.int8)
        size = len(perms)
        for pattern in parity_patterns(n):
            degrees = lift_pattern(pattern, rng)
            f = GradedSequence.from_degrees(degrees)
            C = build_cf(f).table  # C[s, r] = kappa(perm_s, perm_r(f))

            # generator values kappa(s_i, g) = (-1)^(|g_i||g_{i+1}|) on every base point
            for i in range(1, n):
                si = Permutation.adjacent(i, n)
                row = C[si.rank(), :]
                expect = np.array(
                    [
                        -1 if (act(rho, f).degree(i) * act(rho, f).degree(i + 1)) % 2 else 1
                        for rho in perms
                    ],
                    dtype=np.int8,
                )
                gen_vals.record(
                    bool(np.array_equal(row, expect)),
                    count=size,
                    render=lambda n=n, d=degrees, i=i: _render(n, d, extra=f"s_{i} generator row"),
                )

            # kappa(st, pi(f)) == kappa(s, (t pi)(f)) * kappa(t, pi(f)), all triples
            lhs = C[mul]
            rhs = C[np.arange(size)[:, None, None], mul[None, :, :]] * C[None, :, :]
            cocycle.record(
                bool(np.array_equal(lhs, rhs)),
                count=size**3,
                render=lambda n=n, d=degrees: _render(n, d, extra="cocycle rule over all triples"),
            )

            # closed-form oracle
            E = np.array(
                [[kappa_exponent(s, act(r, f)) for r in perms] for s in perms],
                dtype=np.int8,
            )
            oracle.record(
                bool(np.array_equal(C, 1 - 2 * E)),
                count=size * size,
                render=lambda n=n, d=degrees: _render(n, d, extra="kappa vs inversion-sum exponent"),
            )

            # BFS shortest-word oracle, base point f
            for s in perms:
                minword.record(
                    kappa_bruteforce_minword(s, f) == C[s.rank(), 0],
                    render=lambda n=n, d=degrees, s=s: _render(n, d, s),
                )

            # kappa(s^{-1}, g) == kappa(s, s^{-1}(g)) on every base point
            lhs_inv = C[inv, :]
            rhs_inv = C[np.arange(size)[:, None], mul[inv, :]]
            inverse.record(
                bool(np.array_equal(lhs_inv, rhs_inv)),
                count=size * size,
                render=lambda n=n, d=degrees: _render(n, d, extra="inverse identity"),
            )

            # lifting changes nothing: compare against extra lifts on sampled sigma
            for _ in range(degree_samples):
                other = lift_pattern(pattern, rng)
                fo = GradedSequence.from_degrees(other)
                s = perms[rng.randrange(size)]
                parinv.record(
                    kappa(s, fo) == C[s.rank(), 0],
                    render=lambda n=n, d=other, s=s: _render(n, d, s, "parity lift mismatch"),
                )

            # morphism / constant-one criteria
            morphism.record(
                morphism_bruteforce(pattern) == is_morphism(degrees),
                render=lambda n=n, d=degrees: _render(n, d, extra="brute force vs parity rule"),
            )
            col = C[:, 0]
            constone.record(
                bool(np.all(col == 1)) == is_constant_one(degrees),
                render=lambda n=n, d=degrees: _render(n, d, extra="constant-one rule"),
            )
            if all(b == 1 for b in pattern):
                allodd.record(
                    bool(np.array_equal(C, sgn[:, None] * np.ones((1, size), dtype=np.int8))),
                    count=size * size,
                    render=lambda n=n, d=degrees: _render(n, d, extra="kappa != signature"),
                )
            if all(b == 0 for b in pattern):
                alleven.record(
                    bool(np.all(C == 1)),
                    count=size * size,
                    render=lambda n=n, d=degrees: _render(n, d, extra="kappa != +1"),
                )

        # action compatibility act(st, g) == act(s, act(t, g)), sampled
        f = GradedSequence.from_degrees(lift_pattern(tuple(rng.randrange(2) for _ in range(n)), rng))
        for _ in range(25):
            s = perms[rng.randrange(size)]
            t = perms[rng.randrange(size)]
            action.record(
                act(s * t, f) == act(s, act(t, f)),
                render=lambda n=n, s=s, t=t: f"n={n} sigma={s.one_line()} tau={t.one_line()}",
            )

    if n_max >= 6:
        # sampled spot checks above the exhaustive range
        n = 6
        sampled = CheckResult(
            "sampled-n6", "n=6, sampled permutation pairs per parity pattern"
        )
        report.checks.append(sampled)
        images = list(range(1, n + 1))
        for pattern in parity_patterns(n):
            degrees = lift_pattern(pattern, rng)
            f = GradedSequence.from_degrees(degrees)
            for _ in range(max(degree_samples, 1) * 5):
                rng.shuffle(images)
                s = Permutation(images)
                rng.shuffle(images)
                t = Permutation(images)
                ok = (
                    kappa(s * t, f) == kappa(s, act(t, f)) * kappa(t, f)
                    and kappa(s, f) == (-1) ** kappa_exponent(s, f)
                )
                sampled.record(
                    ok, render=lambda d=degrees, s=s, t=t: _render(n, d, s, f"tau={t.one_line()}")
                )

    # word-level invariance (free-group well-definedness)
    for n in [n for n in ns if n <= 4]:
        report.checks += list(check_word_invariance(n, trials=200, rng=rng))

    # cohomology: coboundary identity, cocycle criterion, reconstruction
    cob2 = CheckResult(
        "coboundary-identity", "n<=4, both module structures, exhaustive triples"
    )
    cocy = CheckResult("cocycle-criterion", "n<=4, every parity pattern, both structures")
    cob1 = CheckResult("coboundary1-reconstruction", "n<=4, cocycle cases")
    report.checks += [cob2, cocy, cob1]
    for n in [n for n in ns if n <= 4]:
        size = len(perm_list(n))
        for pattern in parity_patterns(n):
            degrees = lift_pattern(pattern, rng)
            f = GradedSequence.from_degrees(degrees)
            c = build_cf(f)
            u_auto = module_from_degrees(degrees)
            for u in (TRIVIAL, SIGNATURE):
                delta = coboundary2(c, u)
                uvec = u.vector(n)
                # rho-independent right-hand side u(sigma) * c(sigma, tau)
                expect = np.broadcast_to(
                    (uvec[:, None] * c.table)[:, :, None], delta.table.shape
                )
                cob2.record(
                    bool(np.array_equal(delta.table, expect)),
                    count=size**3,
                    render=lambda n=n, d=degrees, u=u: _render(n, d, extra=f"u={u.kind}"),
                )
                expected_cocycle = is_morphism(degrees) and u == u_auto
                cocy.record(
                    is_cocycle(f, u) == expected_cocycle,
                    render=lambda n=n, d=degrees, u=u: _render(n, d, extra=f"u={u.kind}"),
                )
                if expected_cocycle:
                    cob1.record(
                        coboundary1(identity_row(c), u) == c,
                        count=size * size,
                        render=lambda n=n, d=degrees, u=u: _render(n, d, extra=f"u={u.kind}"),
                    )

    # fixed witnesses with degrees (1, 1, 0)
    witness = CheckResult("fixed-witnesses", "degrees (1,1,0): diagonal sensitivity and non-symmetry")
    report.checks.append(witness)
    f = GradedSequence.from_degrees((1, 1, 0))
    fprime = GradedSequence.from_degrees((1, 0, 1), symbols=("f1", "f3", "f2"))
    s1 = Permutation.adjacent(1, 3)
    e = Permutation.identity(3)
    witness.record(kappa(s1, f) == -1, render=lambda: "kappa(s1, f) != -1")
    witness.record(kappa(s1, fprime) == 1, render=lambda: "kappa(s1, f') != +1")
    c = build_cf(f)
    witness.record(c(e, s1) == 1, render=lambda: "c_f(e, s1) != +1")
    witness.record(c(s1, e) == -1, render=lambda: "c_f(s1, e) != -1")

    if n_max >= 5:
        example = CheckResult(
            "example-reproduction",
            "rho=[2,5,3,1,4], 100 random degree vectors in [-50,50]^5",
        )
        report.checks.append(example)
        example.record(
            frozenset(sign_exponent_terms(EXAMPLE_RHO)) == EXAMPLE_TERMS,
            render=lambda: f"terms {sign_exponent_terms(EXAMPLE_RHO)}",
        )
        for _ in range(100):
            z = [rng.randint(-50, 50) for _ in range(5)]
            f5 = GradedSequence.from_degrees(z)
            zexp = sum(z[a - 1] * z[b - 1] for a, b in EXAMPLE_TERMS)
            example.record(
                kappa(EXAMPLE_RHO, f5) == (-1) ** (zexp % 2),
                render=lambda z=z: f"degrees={tuple(z)}",
            )

    return report
