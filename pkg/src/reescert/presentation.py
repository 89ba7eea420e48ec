"""Presentation ideal of a leveled family: marked basis and reduction.

Presentation variables T[i,j] stand for the generators u_ij.  The marked
basis holds one quadratic binomial per incomparable ref pair: the product
of the pair (the lead, always squarefree) minus the product of its
sorted or ordered rewrite (the trail).  Reduction replaces leads by
trails until no lead divides any support monomial; with the family
closed under comparability this terminates and the normal forms are the
completely reduced monomials, one per fiber of the monomial map.

Coefficients are exact rationals throughout.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    InternalInvariantError,
    MonomialParseError,
    NotClosedError,
)
from .family import GenRef, LeveledFamily, comparable, rewrite_images
from .family import is_closed_under_comparability

DEFAULT_STEP_CAP = 10**6


class TMonomial:
    """Multiset of presentation variables, kept as a sorted ref tuple."""

    __slots__ = ("refs",)

    def __init__(self, refs=()):
        object.__setattr__(
            self, "refs",
            tuple(sorted(GenRef(int(i), int(j)) for i, j in refs)))

    def __setattr__(self, name, value):
        raise AttributeError("TMonomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.refs)

    def __mul__(self, other: "TMonomial") -> "TMonomial":
        return TMonomial(self.refs + other.refs)

    def divisible_by_pair(self, a: GenRef, b: GenRef) -> bool:
        """Does the squarefree quadratic a*b (a < b) divide this?"""
        return a in self.refs and b in self.refs

    def without_pair(self, a: GenRef, b: GenRef) -> "TMonomial":
        left = list(self.refs)
        left.remove(a)
        left.remove(b)
        return TMonomial(left)

    def __eq__(self, other) -> bool:
        return isinstance(other, TMonomial) and self.refs == other.refs

    def __hash__(self) -> int:
        return hash(self.refs)

    def __lt__(self, other: "TMonomial") -> bool:
        return self.refs < other.refs

    def __le__(self, other: "TMonomial") -> bool:
        return self.refs <= other.refs

    def text(self) -> str:
        if not self.refs:
            return "1"
        parts = []
        for ref, mult in sorted(Counter(self.refs).items()):
            base = f"T[{ref.level},{ref.index}]"
            parts.append(base if mult == 1 else f"{base}^{mult}")
        return "*".join(parts)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"TMonomial({self.text()!r})"


ONE = TMonomial()


class TPolynomial:
    """Sparse polynomial in the T variables over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in (terms.items()
                                if isinstance(terms, dict) else terms):
                c = clean.get(mono, Fraction(0)) + Fraction(coeff)
                if c:
                    clean[mono] = c
                elif mono in clean:
                    del clean[mono]
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TPolynomial is immutable")

    @classmethod
    def zero(cls) -> "TPolynomial":
        return cls()

    @classmethod
    def monomial(cls, mono: TMonomial, coeff=1) -> "TPolynomial":
        return cls([(mono, Fraction(coeff))])

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> list[TMonomial]:
        """Support monomials, greatest first in factor-lex order."""
        return sorted(self.terms, reverse=True)

    def coeff(self, mono: TMonomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def __add__(self, other: "TPolynomial") -> "TPolynomial":
        merged = dict(self.terms)
        for mono, c in other.terms.items():
            s = merged.get(mono, Fraction(0)) + c
            if s:
                merged[mono] = s
            else:
                merged.pop(mono, None)
        return TPolynomial(merged)

    def __neg__(self) -> "TPolynomial":
        return TPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "TPolynomial") -> "TPolynomial":
        return self + (-other)

    def scaled(self, coeff) -> "TPolynomial":
        c = Fraction(coeff)
        if not c:
            return TPolynomial()
        return TPolynomial({m: c * k for m, k in self.terms.items()})

    def times_monomial(self, mono: TMonomial) -> "TPolynomial":
        return TPolynomial({m * mono: c for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, TPolynomial) and self.terms == other.terms

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in self.support():
            c = self.terms[mono]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono.degree == 0:
                body = str(mag)
            elif mag == 1:
                body = mono.text()
            else:
                body = f"{mag}*{mono.text()}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"TPolynomial({self.text()!r})"


@dataclass(frozen=True)
class MarkedBinomial:
    """lead - trail with the lead marked for reduction."""
    lead: TMonomial
    trail: TMonomial

    def as_polynomial(self) -> TPolynomial:
        return TPolynomial([(self.lead, Fraction(1)),
                            (self.trail, Fraction(-1))])

    def __str__(self) -> str:
        return f"{self.lead.text()} - {self.trail.text()}"


class PsiImage(NamedTuple):
    """Exponent vectors of the image monomial under the presentation map."""
    x: tuple[int, ...]
    t: tuple[int, ...]

    def text(self) -> str:
        parts = [f"x{i}" if e == 1 else f"x{i}^{e}"
                 for i, e in enumerate(self.x, start=1) if e]
        parts += [f"t{i}" if e == 1 else f"t{i}^{e}"
                  for i, e in enumerate(self.t, start=1) if e]
        return "*".join(parts) if parts else "1"


def psi_eval(mono: TMonomial, fam: LeveledFamily) -> PsiImage:
    """Image of a T-monomial: multiply the referenced generators.

    rees mode records one t_i per level-i factor (levels >= 1); fiber
    mode pads each level-i generator with the auxiliary variable
    x_{n+i} up to the embedding degree.
    """
    if fam.mode == "rees":
        xs = [0] * fam.n
        ts = [0] * fam.top_level
        for ref in mono.refs:
            for k, e in enumerate(fam.generator(ref).exps):
                xs[k] += e
            if ref.level >= 1:
                ts[ref.level - 1] += 1
        return PsiImage(tuple(xs), tuple(ts))
    s = fam.top_level
    xs = [0] * (fam.n + s)
    for ref in mono.refs:
        lv = fam.level(ref.level)
        for k, e in enumerate(fam.generator(ref).exps):
            xs[k] += e
        xs[fam.n + ref.level - 1] += fam.embedding_degree - lv.degree
    return PsiImage(tuple(xs), ())


def build_basis(fam: LeveledFamily) -> tuple[MarkedBinomial, ...]:
    """One marked binomial per incomparable ref pair, sorted by lead.

    Requires closure under comparability; otherwise some trail would
    reference monomials outside the family.
    """
    report = is_closed_under_comparability(fam)
    if not report.closed:
        raise NotClosedError(
            "family is not closed under comparability"
            f" ({len(report.witnesses)} witness pair(s))",
            report.witnesses)
    refs = fam.refs()
    out = []
    for ai in range(len(refs)):
        for bi in range(ai + 1, len(refs)):
            a, b = refs[ai], refs[bi]
            if comparable(fam, a, b):
                continue
            first, second = rewrite_images(fam, a, b)
            trail = TMonomial([
                GenRef(a.level, fam.position(a.level, first)),
                GenRef(b.level, fam.position(b.level, second)),
            ])
            out.append(MarkedBinomial(TMonomial([a, b]), trail))
    return tuple(out)


def _lead_index(basis) -> dict[tuple[GenRef, GenRef], MarkedBinomial]:
    index = {}
    for g in basis:
        key = g.lead.refs
        if len(key) != 2 or key[0] == key[1]:
            raise ValueError(f"lead {g.lead} is not squarefree quadratic")
        if key in index:
            raise ValueError(f"duplicate lead {g.lead}")
        index[key] = g
    return index


def _divisible_leads(mono: TMonomial, index):
    """Lead pairs dividing the monomial, in ascending pair order."""
    distinct = sorted(set(mono.refs))
    for ai in range(len(distinct)):
        for bi in range(ai + 1, len(distinct)):
            key = (distinct[ai], distinct[bi])
            if key in index:
                yield key


def apply_reduction(f: TPolynomial, mono: TMonomial,
                    g: MarkedBinomial) -> TPolynomial:
    """Rewrite one support monomial of f along one basis element."""
    coeff = f.coeff(mono)
    rest = mono.without_pair(*g.lead.refs)
    update = {mono: -coeff, rest * g.trail: coeff}
    return f + TPolynomial(update)


def reduction_options(f: TPolynomial, basis, _index=None
                      ) -> list[tuple[TMonomial, MarkedBinomial]]:
    """Every applicable (support monomial, rule) pair.

    Ordered by the deterministic strategy: support monomials greatest
    first, rules by ascending lead ref pair within a monomial, so the
    first entry is the step ``reduce_step`` takes.
    """
    index = _lead_index(basis) if _index is None else _index
    out = []
    for mono in f.support():
        for key in _divisible_leads(mono, index):
            out.append((mono, index[key]))
    return out


def reduce_step(f: TPolynomial, basis, _index=None) -> TPolynomial | None:
    """One deterministic reduction step, or None at a normal form.

    Strategy: rewrite the greatest reducible support monomial (factor-lex
    order); among the leads dividing it use the basis element with the
    least lead ref pair.
    """
    index = _lead_index(basis) if _index is None else _index
    for mono in f.support():
        for key in _divisible_leads(mono, index):
            return apply_reduction(f, mono, index[key])
    return None


def _reduce_fully(f, basis, max_steps):
    index = _lead_index(basis)
    steps = 0
    while True:
        nxt = reduce_step(f, basis, _index=index)
        if nxt is None:
            return f, steps
        f = nxt
        steps += 1
        if steps > max_steps:
            raise InternalInvariantError(
                f"reduction exceeded {max_steps} steps; the termination"
                " measure should forbid this")


def normal_form(f: TPolynomial, basis,
                max_steps: int = DEFAULT_STEP_CAP) -> TPolynomial:
    nf, _ = _reduce_fully(f, basis, max_steps)
    return nf


def reduction_length(f: TPolynomial, basis,
                     max_steps: int = DEFAULT_STEP_CAP) -> int:
    """Number of deterministic steps from f to its normal form."""
    _, steps = _reduce_fully(f, basis, max_steps)
    return steps


def is_completely_reduced(mono: TMonomial, fam: LeveledFamily) -> bool:
    """No incomparable pair among the factors, counting multiplicity.

    Repeated refs are fine: a pair of equal refs is trivially fixed by
    the sorting rewrite.
    """
    distinct = sorted(set(mono.refs))
    for ai in range(len(distinct)):
        for bi in range(ai + 1, len(distinct)):
            if not comparable(fam, distinct[ai], distinct[bi]):
                return False
    return True


def s_polynomial(g1: MarkedBinomial, g2: MarkedBinomial) -> TPolynomial:
    """S-polynomial on the multiset lcm of the two leads."""
    lcm_counts = Counter(g1.lead.refs) | Counter(g2.lead.refs)
    lcm = TMonomial([r for r, k in lcm_counts.items() for _ in range(k)])
    cof1 = lcm
    for r in g1.lead.refs:
        cof1 = TMonomial(_remove_one(cof1.refs, r))
    cof2 = lcm
    for r in g2.lead.refs:
        cof2 = TMonomial(_remove_one(cof2.refs, r))
    return (TPolynomial.monomial(g2.trail).times_monomial(cof2)
            - TPolynomial.monomial(g1.trail).times_monomial(cof1))


def _remove_one(refs, r):
    out = list(refs)
    out.remove(r)
    return out


@dataclass(frozen=True)
class ConfluenceReport:
    pairs_checked: int
    failures: tuple[tuple[int, int], ...]
    max_reduction_length: int

    @property
    def confluent(self) -> bool:
        return not self.failures


def confluence_check(basis, max_steps: int = DEFAULT_STEP_CAP
                     ) -> ConfluenceReport:
    """Reduce every S-polynomial of a basis pair; all must reach zero.

    Coprime-lead pairs are included on purpose: the run doubles as
    evidence, so no shortcut criteria are applied.
    """
    pairs = 0
    failures = []
    longest = 0
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            pairs += 1
            spoly = s_polynomial(basis[i], basis[j])
            nf, steps = _reduce_fully(spoly, basis, max_steps)
            longest = max(longest, steps)
            if not nf.is_zero():
                failures.append((i, j))
    return ConfluenceReport(pairs, tuple(failures), longest)


def kernel_membership(f: TPolynomial, basis) -> bool:
    """Does f reduce to zero, i.e. lie in the ideal of the basis?"""
    return normal_form(f, basis).is_zero()


# ------------------------------------------------------------- text forms

_TOKEN_RE = re.compile(r"""
    \s*(?:
      (?P<tref>T\[\s*(?P<lvl>\d+)\s*,\s*(?P<idx>\d+)\s*\])
    | (?P<num>\d+)
    | (?P<op>[-+*/^()])
    )""", re.VERBOSE)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise MonomialParseError(
                f"unexpected input {rest[:12]!r} at position {pos}")
        if m.group("tref"):
            out.append(("ref", GenRef(int(m.group("lvl")),
                                      int(m.group("idx")))))
        elif m.group("num"):
            out.append(("num", int(m.group("num"))))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    out.append(("end", None))
    return out


class _TermParser:
    """Recursive descent for  term (('+'|'-') term)*  where a term is an
    optional rational coefficient and '*'-joined T factors with optional
    integer powers."""

    def __init__(self, text: str, fam: LeveledFamily | None):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.fam = fam

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_num(self) -> int:
        kind, value = self.take()
        if kind != "num":
            raise MonomialParseError("expected a number")
        return value

    def parse(self) -> TPolynomial:
        terms = []
        sign = 1
        kind, value = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        while True:
            mono, coeff = self.term()
            terms.append((mono, sign * coeff))
            kind, value = self.peek()
            if kind == "end":
                break
            if kind == "op" and value in "+-":
                self.take()
                sign = -1 if value == "-" else 1
                continue
            raise MonomialParseError(
                f"expected '+' or '-' between terms, got {value!r}")
        return TPolynomial(terms)

    def term(self):
        coeff = Fraction(1)
        refs = []
        saw_factor = False
        while True:
            kind, value = self.peek()
            if kind == "num":
                self.take()
                num = value
                kind, value = self.peek()
                if kind == "op" and value == "/":
                    self.take()
                    den = self.expect_num()
                    if den == 0:
                        raise MonomialParseError("division by zero")
                    coeff *= Fraction(num, den)
                else:
                    coeff *= num
                saw_factor = True
            elif kind == "ref":
                self.take()
                ref = value
                power = 1
                kind2, value2 = self.peek()
                if kind2 == "op" and value2 == "^":
                    self.take()
                    power = self.expect_num()
                if self.fam is not None:
                    try:
                        self.fam.generator(ref)
                    except ValueError:
                        raise MonomialParseError(
                            f"unknown T-variable {ref}") from None
                refs.extend([ref] * power)
                saw_factor = True
            else:
                raise MonomialParseError(
                    "expected a coefficient or T[i,j] factor")
            kind, value = self.peek()
            if kind == "op" and value == "*":
                self.take()
                continue
            break
        if not saw_factor:
            raise MonomialParseError("empty term")
        return TMonomial(refs), coeff


def parse_tpolynomial(text: str, fam: LeveledFamily | None = None
                      ) -> TPolynomial:
    """Parse e.g. ``T[1,3]*T[1,4] - T[1,2]*T[1,5]`` or ``1/2*T[0,1]^2``.

    With a family given, refs are checked against it.
    """
    if not text.strip():
        raise MonomialParseError("empty expression")
    return _TermParser(text, fam).parse()


def basis_to_json(basis) -> dict:
    return {
        "count": len(basis),
        "quadratic": all(g.lead.degree == 2 and g.trail.degree == 2
                         for g in basis),
        "squarefree_leads": all(len(set(g.lead.refs)) == g.lead.degree
                                for g in basis),
        "relations": [
            {"lead": [list(r) for r in g.lead.refs],
             "trail": [list(r) for r in g.trail.refs]}
            for g in basis
        ],
    }


def basis_from_json(data: dict, fam: LeveledFamily | None = None
                    ) -> tuple[MarkedBinomial, ...]:
    try:
        relations = data["relations"]
    except (TypeError, KeyError):
        raise ValueError("expected an object with a 'relations' list")
    out = []
    for rel in relations:
        lead = TMonomial(tuple(map(tuple, rel["lead"])))
        trail = TMonomial(tuple(map(tuple, rel["trail"])))
        if fam is not None:
            for ref in lead.refs + trail.refs:
                fam.generator(ref)
        out.append(MarkedBinomial(lead, trail))
    return tuple(out)
