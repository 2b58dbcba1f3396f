"""The graded snake algebra: cup products, Betti numbers, product tables.

Basis elements are pairs (I, alpha) with alpha a B-snake on I; the degree
of the I-component is floor((|I|+1)/2).  The product of basis snakes alpha
on I1 and beta on I2 vanishes unless I1 and I2 are disjoint with
|I1| * |I2| even, and is otherwise supported on the snakes z of I1 u I2
whose length-2 blocks (apart from the leading remainder) stay inside one
factor; each such z contributes

    (-1)^kappa(z) * C(alpha, P_I1(z)) * C(beta, P_I2(z)) * z,

where C(-,-) are snake-basis coefficients from the normalform module,
P_J is the parity-corrected restriction, and kappa counts odd-position
crossings between the factors.  The unit is the empty snake at I = {}.
"""

from __future__ import annotations

import hashlib
import inspect
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from pathlib import Path
from typing import Iterable, Mapping

from .core import (EMPTY, CapExceeded, IndexSet, SignedPermutation, as_snake,
                   enumerate_snakes, index_set, restrict_p, springer)
from .normalform import coefficient
from .relations import LinComb

BETTI_CAP = 7
RING_TABLE_CAP = 4


@dataclass(frozen=True)
class RestrictionContext:
    """Disjoint index sets with even cardinality product."""

    i1: IndexSet
    i2: IndexSet

    def __post_init__(self):
        object.__setattr__(self, "i1", index_set(self.i1))
        object.__setattr__(self, "i2", index_set(self.i2))
        if set(self.i1) & set(self.i2):
            raise ValueError(f"index sets overlap: {self.i1} and {self.i2}")
        if (len(self.i1) * len(self.i2)) % 2 != 0:
            raise ValueError("both index sets have odd cardinality")

    @property
    def union(self) -> IndexSet:
        return tuple(sorted(set(self.i1) | set(self.i2)))


def is_restrictable(z: SignedPermutation, ctx: RestrictionContext) -> bool:
    """True iff every complete block of z below the leading remainder lies
    wholly inside one factor."""
    if set(z.support) != set(ctx.union):
        raise ValueError(f"support {z.support} is not {ctx.union}")
    ell = z.r
    side1, side2 = set(ctx.i1), set(ctx.i2)
    for i in range(1, (ell - 1) // 2 + 1):
        pair = {abs(z.entry(2 * i - 1)), abs(z.entry(2 * i))}
        if not (pair <= side1 or pair <= side2):
            return False
    return True


def kappa(z: SignedPermutation, ctx: RestrictionContext) -> int:
    """Crossing count of odd-position letters: pairs (z_{2i-1}, z_{2j-1})
    with the i-th in the first factor, the j-th in the second, and i > j."""
    if not is_restrictable(z, ctx):
        raise ValueError(f"{z} is not restrictable to ({ctx.i1}, {ctx.i2})")
    side1 = set(ctx.i1)
    odd_letters = [z.entry(2 * i - 1) for i in range(1, (z.r + 1) // 2 + 1)]
    count = 0
    seen_second = 0
    for v in odd_letters:  # ascending i; count earlier second-factor letters
        if abs(v) in side1:
            count += seen_second
        else:
            seen_second += 1
    return count


@lru_cache(maxsize=None)
def cup_basis(alpha: SignedPermutation, beta: SignedPermutation) -> LinComb:
    """Product of two basis snakes as a snake combination on I1 symdiff I2."""
    as_snake(alpha)
    as_snake(beta)
    s1, s2 = set(alpha.support), set(beta.support)
    target = tuple(sorted(s1 ^ s2))
    if (s1 & s2) or (len(s1) * len(s2)) % 2 != 0:
        return LinComb.zero(target)
    ctx = RestrictionContext(alpha.support, beta.support)
    terms: dict[SignedPermutation, Fraction] = {}
    for z in enumerate_snakes(target):
        if not is_restrictable(z, ctx):
            continue
        c1 = coefficient(restrict_p(z, ctx.i1), alpha)
        if not c1:
            continue
        c2 = coefficient(restrict_p(z, ctx.i2), beta)
        if not c2:
            continue
        terms[z] = (-1) ** kappa(z, ctx) * c1 * c2
    return LinComb(target, terms)


class RingElement:
    """Graded element: a snake combination for each index set inside [n]."""

    __slots__ = ("n", "components")

    def __init__(self, n: int, components: Mapping[IndexSet, LinComb] | None = None):
        self.n = n
        data: dict[IndexSet, LinComb] = {}
        for sup, comb_ in (components or {}).items():
            sup = index_set(sup)
            if sup and sup[-1] > n:
                raise ValueError(f"component {sup} outside ambient [{n}]")
            if comb_.support != sup:
                raise ValueError("component key does not match its support")
            if not comb_.all_snakes():
                raise ValueError(f"component on {sup} has non-snake terms")
            if comb_:
                data[sup] = comb_
        self.components = data

    @classmethod
    def zero(cls, n: int) -> "RingElement":
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> "RingElement":
        return cls(n, {(): LinComb.single(EMPTY)})

    @classmethod
    def basis(cls, n: int, alpha: SignedPermutation) -> "RingElement":
        as_snake(alpha)
        return cls(n, {alpha.support: LinComb.single(alpha)})

    def component(self, sup: Iterable[int]) -> LinComb:
        sup = index_set(sup)
        return self.components.get(sup, LinComb.zero(sup))

    def __bool__(self) -> bool:
        return bool(self.components)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RingElement) and self.n == other.n
                and self.components == other.components)

    def __add__(self, other: "RingElement") -> "RingElement":
        if self.n != other.n:
            raise ValueError("ambient mismatch")
        data = dict(self.components)
        for sup, comb_ in other.components.items():
            data[sup] = data.get(sup, LinComb.zero(sup)) + comb_
        return RingElement(self.n, data)

    def __neg__(self) -> "RingElement":
        return RingElement(self.n,
                           {s: -c for s, c in self.components.items()})

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def scale(self, factor) -> "RingElement":
        return RingElement(self.n,
                           {s: c.scale(factor) for s, c in self.components.items()})

    def degrees(self) -> dict[int, int]:
        """Number of stored terms per cohomological degree."""
        out: dict[int, int] = {}
        for sup, comb_ in self.components.items():
            deg = (len(sup) + 1) // 2
            out[deg] = out.get(deg, 0) + len(comb_)
        return out

    def __str__(self) -> str:
        if not self.components:
            return "0"
        parts = []
        for sup in sorted(self.components, key=lambda s: (len(s), s)):
            label = "{" + ",".join(map(str, sup)) + "}"
            parts.append(f"{label}: {self.components[sup]}")
        return "; ".join(parts)

    def to_json(self) -> dict:
        return {"n": self.n,
                "components": [self.components[s].to_json(snake_basis=True)
                               for s in sorted(self.components,
                                               key=lambda s: (len(s), s))]}


def cup(a: RingElement, b: RingElement) -> RingElement:
    """Bilinear extension of cup_basis to graded elements."""
    if a.n != b.n:
        raise ValueError("ambient mismatch")
    acc: dict[IndexSet, dict[SignedPermutation, Fraction]] = {}
    for c1 in a.components.values():
        for c2 in b.components.values():
            for alpha, x in c1.items():
                for beta, y in c2.items():
                    prod = cup_basis(alpha, beta)
                    if not prod:
                        continue
                    bucket = acc.setdefault(prod.support, {})
                    for z, c in prod.items():
                        val = bucket.get(z, Fraction(0)) + x * y * c
                        if val:
                            bucket[z] = val
                        else:
                            bucket.pop(z, None)
    return RingElement(a.n, {s: LinComb(s, t) for s, t in acc.items() if t})


def betti(n: int, k: int, cap: int = BETTI_CAP) -> int:
    """Betti number in degree k: C(n,2k) b_{2k} + C(n,2k-1) b_{2k-1}."""
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds betti cap {cap}")
    if k < 0 or k > n:
        return 0
    total = 0
    if 2 * k <= n:
        total += comb(n, 2 * k) * springer(2 * k)
    if 1 <= 2 * k - 1 <= n:
        total += comb(n, 2 * k - 1) * springer(2 * k - 1)
    return total


def betti_table(n: int, cap: int = BETTI_CAP) -> list[int]:
    """Betti numbers in degrees 0..n."""
    return [betti(n, k, cap) for k in range(n + 1)]


def graded_basis(n: int) -> list[SignedPermutation]:
    """All basis snakes over subsets of [n], supports ordered by size then
    elements, snakes in word order within a support."""
    import itertools
    out = []
    base = list(range(1, n + 1))
    for size in range(n + 1):
        for sup in itertools.combinations(base, size):
            out.extend(enumerate_snakes(sup))
    return out


def _code_version() -> str:
    from . import __version__, core, normalform, relations
    import bsnakes.ring as ring_module
    h = hashlib.sha1(__version__.encode())
    for mod in (core, relations, normalform, ring_module):
        h.update(inspect.getsource(mod).encode())
    return h.hexdigest()[:12]


def ring_table(n: int, cap: int = RING_TABLE_CAP,
               cache_dir: str | None = None) -> list[dict]:
    """All ordered products of basis snakes, serialized deterministically.

    With SNAKE_CACHE_DIR set (or cache_dir given), tables are cached on
    disk keyed by (n, code-version hash).
    """
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds ring-table cap {cap}")
    directory = cache_dir if cache_dir is not None else os.environ.get("SNAKE_CACHE_DIR")
    path = None
    if directory:
        path = Path(directory) / f"ring_table_n{n}_{_code_version()}.jsonl"
        if path.exists():
            with open(path, encoding="utf-8") as fh:
                return [json.loads(line) for line in fh if line.strip()]
    basis = graded_basis(n)
    records = []
    for left in basis:
        for right in basis:
            prod = cup_basis(left, right)
            records.append({
                "left": {"support": list(left.support), "word": list(left.word)},
                "right": {"support": list(right.support), "word": list(right.word)},
                "product": prod.to_json(snake_basis=True),
            })
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(rec) + "\n")
        tmp.replace(path)
    return records
