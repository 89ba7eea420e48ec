"""Brute-force verification suites run against the marked basis.

These recompute, by exhaustive enumeration at bounded degree, the facts
the basis is supposed to guarantee: every monomial-map fiber holds
exactly one completely reduced monomial, every member reduces to it, and
the fiber differences all lie in the ideal the basis generates.  Slow on
purpose; the caps keep them at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .errors import InternalInvariantError, ResourceCapError
from .family import LeveledFamily, comparable
from .presentation import (
    DEFAULT_STEP_CAP,
    PsiImage,
    TMonomial,
    TPolynomial,
    _lead_index,
    apply_reduction,
    normal_form,
    psi_eval,
    reduction_options,
)

ENUMERATION_CAP = 10**7
FAILURE_CAP = 32


def _comparability_table(fam: LeveledFamily) -> dict:
    refs = fam.refs()
    table = {}
    for i, a in enumerate(refs):
        for b in refs[i + 1:]:
            table[(a, b)] = comparable(fam, a, b)
    return table


def _reduced_by_table(mono: TMonomial, table) -> bool:
    distinct = sorted(set(mono.refs))
    for i, a in enumerate(distinct):
        for b in distinct[i + 1:]:
            if not table[(a, b)]:
                return False
    return True


def count_tmonomials(fam: LeveledFamily, max_degree: int) -> int:
    """Number of T-monomials of degree 1..max_degree."""
    v = len(fam)
    return sum(comb(v + d - 1, d) for d in range(1, max_degree + 1))


def enumerate_fibers(fam: LeveledFamily, max_degree: int,
                     cap: int = ENUMERATION_CAP
                     ) -> dict[PsiImage, list[TMonomial]]:
    """Bucket all T-monomials of degree 1..max_degree by their image.

    The degree-0 monomial is excluded; its fiber is trivially itself.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    total = count_tmonomials(fam, max_degree)
    if total > cap:
        raise ResourceCapError(
            f"{total} T-monomials up to degree {max_degree},"
            f" cap is {cap}")
    refs = fam.refs()
    buckets: dict[PsiImage, list[TMonomial]] = {}
    for d in range(1, max_degree + 1):
        for combo in combinations_with_replacement(refs, d):
            mono = TMonomial(combo)
            buckets.setdefault(psi_eval(mono, fam), []).append(mono)
    return buckets


@dataclass(frozen=True)
class FiberFailure:
    image: PsiImage
    reason: str
    monomials: tuple[TMonomial, ...]


@dataclass(frozen=True)
class FiberReport:
    max_degree: int
    monomials: int
    fibers: int
    largest_fiber: int
    reductions: int
    failures: tuple[FiberFailure, ...]
    truncated: bool

    @property
    def passed(self) -> bool:
        return not self.failures and not self.truncated


def verify_unique_normal_forms(fam: LeveledFamily, basis,
                               max_degree: int,
                               cap: int = ENUMERATION_CAP) -> FiberReport:
    """Every fiber must hold exactly one completely reduced monomial and
    every member must reduce to exactly that one."""
    buckets = enumerate_fibers(fam, max_degree, cap)
    table = _comparability_table(fam)
    failures = []
    truncated = False
    reductions = 0
    largest = 0

    def record(image, reason, monos):
        nonlocal truncated
        if len(failures) < FAILURE_CAP:
            failures.append(FiberFailure(image, reason, tuple(monos)))
        else:
            truncated = True

    for image, members in buckets.items():
        largest = max(largest, len(members))
        reduced = [m for m in members if _reduced_by_table(m, table)]
        if len(reduced) != 1:
            record(image,
                   f"expected exactly one completely reduced member,"
                   f" found {len(reduced)}", reduced or members)
        rep = reduced[0] if len(reduced) == 1 else None
        for m in members:
            nf = normal_form(TPolynomial.monomial(m), basis)
            reductions += 1
            if len(nf.terms) != 1 or any(c != 1 for c in nf.terms.values()):
                record(image, f"normal form of {m} is not monic monomial"
                       f" ({nf})", (m,))
                continue
            out = next(iter(nf.terms))
            if rep is not None and out != rep:
                record(image,
                       f"normal form of {m} is {out}, not the reduced"
                       f" representative {rep}", (m, out, rep))
    return FiberReport(
        max_degree, sum(len(v) for v in buckets.values()), len(buckets),
        largest, reductions, tuple(failures), truncated)


@dataclass(frozen=True)
class KernelReport:
    max_degree: int
    fibers: int
    differences: int
    failures: tuple[FiberFailure, ...]
    truncated: bool

    @property
    def passed(self) -> bool:
        return not self.failures and not self.truncated


def verify_kernel_generation(fam: LeveledFamily, basis,
                             max_degree: int,
                             cap: int = ENUMERATION_CAP) -> KernelReport:
    """The basis must reduce every fiber difference to zero.

    The differences member - representative span the degree-bounded part
    of the kernel of the monomial map, so this certifies generation up
    to the cap degree.
    """
    buckets = enumerate_fibers(fam, max_degree, cap)
    table = _comparability_table(fam)
    failures = []
    truncated = False
    differences = 0
    for image, members in buckets.items():
        if len(members) < 2:
            continue
        reduced = [m for m in members if _reduced_by_table(m, table)]
        rep = reduced[0] if len(reduced) == 1 else members[0]
        rep_poly = TPolynomial.monomial(rep)
        for m in members:
            if m == rep:
                continue
            differences += 1
            nf = normal_form(TPolynomial.monomial(m) - rep_poly, basis)
            if not nf.is_zero():
                if len(failures) < FAILURE_CAP:
                    failures.append(FiberFailure(
                        image, f"{m} - {rep} does not reduce to zero"
                        f" (normal form {nf})", (m, rep)))
                else:
                    truncated = True
    return KernelReport(max_degree, len(buckets), differences,
                        tuple(failures), truncated)


@dataclass(frozen=True)
class MeasureReport:
    samples: int
    max_degree: int
    steps: int
    failures: tuple[TMonomial, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_measure_decrease(fam: LeveledFamily, basis, samples: int = 200,
                            max_degree: int = 5,
                            seed: int = 20260822) -> MeasureReport:
    """Reduce random T-monomials and insist the (c, e) measure drops
    strictly in lexicographic order at every single step."""
    import random

    from .measure import traced_normal_form

    rng = random.Random(seed)
    refs = fam.refs()
    steps = 0
    failures = []
    for _ in range(samples):
        mono = TMonomial(rng.choices(refs, k=rng.randint(1, max_degree)))
        trace = traced_normal_form(TPolynomial.monomial(mono), basis, fam)
        seq = trace.measures()
        steps += len(trace.steps)
        ok = all(after < before for before, after in zip(seq, seq[1:]))
        if not ok or seq[-1] != (0, 0):
            if len(failures) < FAILURE_CAP:
                failures.append(mono)
    return MeasureReport(samples, max_degree, steps, tuple(failures))


def normal_form_randomized(f: TPolynomial, basis, rng,
                           max_steps: int = DEFAULT_STEP_CAP) -> TPolynomial:
    """Reduce with uniformly random choices instead of the deterministic
    strategy.  Confluence makes the result independent of ``rng``."""
    index = _lead_index(basis)
    steps = 0
    while True:
        options = reduction_options(f, basis, _index=index)
        if not options:
            return f
        mono, rule = rng.choice(options)
        f = apply_reduction(f, mono, rule)
        steps += 1
        if steps > max_steps:
            raise InternalInvariantError(
                f"randomized reduction exceeded {max_steps} steps")
