"""Normal forms: any signed permutation as its unique snake combination.

Two independent backends compute the coefficients of x in the snake basis
of Q<S^B_I>/M_I and are required to agree:

  * ``solve`` reduces x against the echelonized relation matrix, which
    eliminates every non-snake coordinate.  It is the authoritative route
    wherever the matrix is affordable (|I| <= 5).
  * ``rewrite`` is directed: orient blocks canonically, then repeatedly
    resolve the leftmost violation of the snake alternation by solving the
    matching H2/H4/H5 instance for the current word.  Every replacement
    word is strictly smaller in the block-sum comparison order, which is
    asserted at runtime on every step; the rewriting therefore terminates
    and, by the backend-agreement tests, is confluent in practice.

A third route lives in the oracle module (cycle solve over the hat
complex); the acceptance suite checks all three against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import (CapExceeded, IndexSet, SignedPermutation, _is_snake_word,
                   as_snake, enumerate_signed_perms, index_set, is_snake)
from .relations import (ConventionError, LinComb, _canonical_word, h2, h4, h5,
                        relation_matrix)

REWRITE_CAP = 7
SOLVE_CAP = 5

BACKENDS = ("rewrite", "solve")

Word = tuple[int, ...]

_nf_memo: dict[Word, dict[Word, Fraction]] = {}


def _word_lt(w1: Word, w2: Word) -> bool:
    """Block-sum comparison order on raw words (see core.order_lt)."""
    r = len(w1)
    s1 = tuple(w1[r - 2 * i] + w1[r - 2 * i + 1] for i in range(1, r // 2 + 1))
    s2 = tuple(w2[r - 2 * i] + w2[r - 2 * i + 1] for i in range(1, r // 2 + 1))
    if r % 2 == 0:
        s1 = tuple(-v for v in s1)
        s2 = tuple(-v for v in s2)
    return s1 < s2


def _find_rule(w: Word) -> tuple[str, int] | None:
    """First applicable resolution for a canonically oriented non-snake.

    Checks for a monotone quadruple across adjacent blocks (smallest block
    index first), then the leading-letter conditions.
    """
    r = len(w)
    for i in range(1, r // 2):
        a = w[r - (2 * i + 2)]
        b = w[r - (2 * i + 1)]
        c = w[r - 2 * i]
        d = w[r - (2 * i - 1)]
        if a < b < c < d or a > b > c > d:
            return ("h2", i)
    if r % 2 == 0 and r >= 2 and w[0] < 0:
        return ("h4", 0)
    if r % 2 == 1 and r >= 3 and w[0] < w[1]:
        return ("h5", 0)
    return None


def _replacements(w: Word) -> list[tuple[Fraction, int, Word]]:
    """Solve the applicable relation instance for w.

    Returns (coefficient, orientation sign, canonical word) triples with
    w = sum of coefficient * sign * word modulo M_I.  Raises when no rule
    applies or when a replacement fails to decrease the comparison order;
    either would be a convention bug, never silently ignored.
    """
    rule = _find_rule(w)
    if rule is None:
        raise ConventionError(f"no rewriting rule applies to non-snake {w}")
    x = SignedPermutation(w)
    name, i = rule
    inst = h2(x, i) if name == "h2" else h4(x) if name == "h4" else h5(x)
    if inst.coefficient(x) != 1:
        raise ConventionError(f"{name} instance does not lead with {x}")
    out = []
    for term, c in inst.items():
        if term == x:
            continue
        sign, cw = _canonical_word(term.word)
        if not _word_lt(cw, w):
            raise ConventionError(
                f"rewriting step {name} on {x} failed to decrease: {term}")
        out.append((-c, sign, cw))
    return out


def _nf_canonical(cw: Word) -> dict[Word, Fraction]:
    """Normal form of a canonically oriented word, memoized.

    Evaluated with an explicit stack: recursion depth equals the length of
    the longest strictly decreasing chain in the comparison order, which
    is data-dependent and can exceed the interpreter limit at r = 7.
    """
    if cw in _nf_memo:
        return _nf_memo[cw]
    pending: dict[Word, list[tuple[Fraction, int, Word]]] = {}
    stack = [cw]
    while stack:
        w = stack[-1]
        if w in _nf_memo:
            stack.pop()
            continue
        if _is_snake_word(w):
            _nf_memo[w] = {w: Fraction(1)}
            stack.pop()
            continue
        if w not in pending:
            pending[w] = _replacements(w)
        todo = [tw for (_, _, tw) in pending[w] if tw not in _nf_memo]
        if todo:
            stack.extend(todo)
            continue
        acc: dict[Word, Fraction] = {}
        for coeff, sign, tw in pending[w]:
            factor = coeff * sign
            for sw, sc in _nf_memo[tw].items():
                val = acc.get(sw, Fraction(0)) + factor * sc
                if val:
                    acc[sw] = val
                else:
                    acc.pop(sw, None)
        _nf_memo[w] = acc
        del pending[w]
        stack.pop()
    return _nf_memo[cw]


def normal_form(x: SignedPermutation, backend: str = "rewrite",
                cap: int | None = None) -> LinComb:
    """Express x in the snake basis modulo M_I."""
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; expected one of {BACKENDS}")
    r = x.r
    if backend == "rewrite":
        limit = REWRITE_CAP if cap is None else cap
        if r > limit:
            raise CapExceeded(f"r = {r} exceeds rewrite cap {limit}")
        sign, cw = _canonical_word(x.word)
        table = _nf_canonical(cw)
        return LinComb(x.support,
                       {SignedPermutation(w): sign * c for w, c in table.items()})
    limit = SOLVE_CAP if cap is None else cap
    if r > limit:
        raise CapExceeded(f"r = {r} exceeds solve cap {limit}")
    return relation_matrix(x.support, limit).reduce_to_snakes(LinComb.single(x))


def coefficient(x: SignedPermutation, alpha: SignedPermutation,
                backend: str = "rewrite") -> Fraction:
    """The alpha-coordinate of the normal form of x."""
    as_snake(alpha)
    if x.support != alpha.support:
        raise ValueError(f"supports differ: {x.support} vs {alpha.support}")
    return normal_form(x, backend).coefficient(alpha)


def normal_form_lincomb(c: LinComb, backend: str = "rewrite") -> LinComb:
    """Linear extension of normal_form to combinations."""
    out = LinComb.zero(c.support)
    for perm, coeff in c.items():
        out = out + normal_form(perm, backend).scale(coeff)
    return out


@dataclass
class CoefficientReport:
    """Observed range of snake-basis coefficients over a full support sweep.

    Whether nonzero coefficients are always +-1 is an open question; this
    is an experiment and never an assertion.
    """

    support: IndexSet
    words: int = 0
    value_counts: dict[str, int] = field(default_factory=dict)
    beyond_unit: list[dict] = field(default_factory=list)

    @property
    def all_in_unit_range(self) -> bool:
        return not self.beyond_unit

    def to_json(self) -> dict:
        return {
            "support": list(self.support),
            "words": self.words,
            "value_counts": dict(sorted(self.value_counts.items())),
            "all_in_unit_range": self.all_in_unit_range,
            "beyond_unit": list(self.beyond_unit),
        }

    def __str__(self) -> str:
        lines = [f"support {{{', '.join(map(str, self.support))}}}: "
                 f"{self.words} words scanned"]
        counts = ", ".join(f"{v}: {n}" for v, n in sorted(self.value_counts.items()))
        lines.append(f"coefficient counts: {counts}")
        if self.all_in_unit_range:
            lines.append("all coefficients in {-1,0,1}")
        else:
            lines.append(f"coefficients beyond {{-1,0,1}}: {len(self.beyond_unit)} "
                         "instances (see JSON report)")
        return "\n".join(lines)


def coefficient_range_experiment(I, backend: str = "rewrite",
                                 cap: int = SOLVE_CAP) -> CoefficientReport:
    """Scan every x on I and tabulate the nonzero snake coefficients."""
    sup = index_set(I)
    if len(sup) > cap:
        raise CapExceeded(f"|I| = {len(sup)} exceeds experiment cap {cap}")
    report = CoefficientReport(sup)
    for x in enumerate_signed_perms(sup):
        report.words += 1
        for alpha, c in normal_form(x, backend).items():
            key = str(c)
            report.value_counts[key] = report.value_counts.get(key, 0) + 1
            if c not in (1, -1):
                if len(report.beyond_unit) < 20:
                    report.beyond_unit.append(
                        {"x": str(x), "alpha": str(alpha), "coeff": str(c)})
    return report
