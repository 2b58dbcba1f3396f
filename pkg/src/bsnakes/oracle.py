"""Brute-force simplicial ground truth for the snake presentation.

Everything here is computed from first principles on nested-chain
simplicial complexes, independently of the relation/rewriting machinery,
so that the two routes can referee each other:

  * ``hat_complex(I)`` is the complex whose vertices are the odd-size
    signed subsets over +/-I and whose simplices are strictly nested
    chains; its top reduced Betti number is the Springer number.
  * ``full_subcomplex(n, J)`` is the induced subcomplex of the full
    nested-chain complex on [n] spanned by vertices with odd signed
    incidence to J; ``retract_pi`` collapses it onto the hat complex.
  * ``chain_of(x)`` realizes a signed permutation as the fundamental cycle
    of an embedded cross-polytope boundary: one simplex per choice of
    x-or-star(x) at each level, signed by the number of star choices.
  * ``solve_in_snake_cycles`` expresses any top-dimensional cycle in the
    basis of snake cycles by an exact linear solve (top dimension means
    homology equals the cycle space, so no quotient is needed).
  * ``join_image`` pushes a snake cycle through the factor retractions
    into the join of two hat complexes, the simplicial carrier of the
    cup product.
  * ``verify_suite`` sweeps the named structural facts and reports
    failures with counterexample payloads.

Orientation conventions are fixed once: simplex vertices are ordered by
cardinality (ascending), and joins put the first factor's vertices before
the second's.  All sign-sensitive golden tests pin these conventions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .core import (CapExceeded, IndexSet, SignedPermutation, SignedSubset,
                   enumerate_snakes, f_set, index_set, is_snake, restrict_p,
                   springer, star)
from .linalg import SparseEchelon
from .relations import ConventionError, LinComb, generator_instances

ORACLE_CAP = 5
FULLSUB_CAP = 3

Simplex = tuple[SignedSubset, ...]  # vertices in cardinality-ascending order


def _vkey(v: SignedSubset) -> tuple[int, tuple[int, ...]]:
    return (len(v), tuple(sorted(v)))


def _skey(sigma: Simplex) -> tuple:
    return tuple(_vkey(v) for v in sigma)


class NestedChainComplex:
    """Simplicial complex whose simplices are strictly nested vertex chains."""

    def __init__(self, vertices: Iterable[SignedSubset], description: str):
        self.description = description
        self.vertices: list[SignedSubset] = sorted(set(vertices), key=_vkey)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._supersets: list[list[int]] | None = None
        self._simplices: dict[int, list[Simplex]] = {}
        self._simplex_index: dict[int, dict[Simplex, int]] = {}
        self._matrices: dict[int, "SparseMatrix"] = {}

    def __repr__(self):
        return f"NestedChainComplex({self.description}, {len(self.vertices)} vertices)"

    def _adjacency(self) -> list[list[int]]:
        if self._supersets is None:
            verts = self.vertices
            self._supersets = [
                [j for j, w in enumerate(verts) if len(w) > len(v) and v < w]
                for v in verts
            ]
        return self._supersets

    def simplices(self, k: int) -> list[Simplex]:
        """All k-simplices; k = -1 yields the single empty simplex."""
        if k < -1:
            return []
        if k == -1:
            return [()]
        if k not in self._simplices:
            if k == 0:
                sims = [(v,) for v in self.vertices]
            else:
                adj = self._adjacency()
                prev = [tuple(self._index[v] for v in s) for s in self.simplices(k - 1)]
                sims = []
                for chain in prev:
                    for j in adj[chain[-1]]:
                        sims.append(tuple(self.vertices[i] for i in chain) +
                                    (self.vertices[j],))
            self._simplices[k] = sims
            self._simplex_index[k] = {s: i for i, s in enumerate(sims)}
        return self._simplices[k]

    def simplex_index(self, k: int) -> dict[Simplex, int]:
        self.simplices(k)
        return self._simplex_index[k] if k >= 0 else {(): 0}

    def n_simplices(self, k: int) -> int:
        return len(self.simplices(k))

    @property
    def dim(self) -> int:
        k = -1
        while self.simplices(k + 1):
            k += 1
        return k

    def has_simplex(self, sigma: Simplex) -> bool:
        return sigma in self.simplex_index(len(sigma) - 1)

    def to_json(self) -> dict:
        """Face-list export for external inspection."""
        return {
            "description": self.description,
            "vertices": [sorted(v) for v in self.vertices],
            "simplices": {
                str(k): [[self._index[v] for v in s] for s in self.simplices(k)]
                for k in range(self.dim + 1)
            },
        }


@lru_cache(maxsize=None)
def hat_complex(I: IndexSet, cap: int = ORACLE_CAP) -> NestedChainComplex:
    """Complex of odd-cardinality signed subsets over +/-I, nested chains."""
    sup = index_set(I)
    if len(sup) > cap:
        raise CapExceeded(f"|I| = {len(sup)} exceeds oracle cap {cap}")
    verts = []
    for size in range(1, len(sup) + 1, 2):
        for mags in itertools.combinations(sup, size):
            for signs in itertools.product((1, -1), repeat=size):
                verts.append(frozenset(s * m for s, m in zip(signs, mags)))
    return NestedChainComplex(verts, f"hat{sup}")


@lru_cache(maxsize=None)
def full_subcomplex(n: int, J: IndexSet, cap: int = FULLSUB_CAP) -> NestedChainComplex:
    """Induced subcomplex of the full nested-chain complex on [n] spanned by
    vertices whose signed incidence with J has odd cardinality."""
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds full-subcomplex cap {cap}")
    Jset = set(index_set(J))
    verts = []
    for signs in itertools.product((0, 1, -1), repeat=n):
        L = frozenset(s * (i + 1) for i, s in enumerate(signs) if s)
        if not L:
            continue
        if sum(1 for m in Jset if m in L or -m in L) % 2 == 1:
            verts.append(L)
    return NestedChainComplex(verts, f"fullsub(n={n}, J={tuple(sorted(Jset))})")


def retract_pi(sigma: Simplex, J: Iterable[int]) -> Simplex | None:
    """Intersect every vertex with +/-J; None marks a degenerate image."""
    pm = {m for j in index_set(J) for m in (j, -j)}
    images = [v & pm for v in sigma]
    if any(not img for img in images):
        return None
    if len(set(images)) != len(images):
        return None
    return tuple(images)


class SimplicialChain:
    """Exact rational chain keyed by nested vertex chains."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Simplex, Fraction] | None = None):
        self.terms: dict[Simplex, Fraction] = {
            s: Fraction(c) for s, c in (terms or {}).items() if c}

    def items(self) -> list[tuple[Simplex, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: _skey(kv[0]))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialChain) and self.terms == other.terms

    def __add__(self, other: "SimplicialChain") -> "SimplicialChain":
        data = dict(self.terms)
        for s, c in other.terms.items():
            data[s] = data.get(s, Fraction(0)) + c
        return SimplicialChain(data)

    def __neg__(self) -> "SimplicialChain":
        return SimplicialChain({s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "SimplicialChain") -> "SimplicialChain":
        return self + (-other)

    def scale(self, factor) -> "SimplicialChain":
        f = Fraction(factor)
        return SimplicialChain({s: f * c for s, c in self.terms.items()})

    def boundary(self) -> "SimplicialChain":
        out: dict[Simplex, Fraction] = {}
        for sigma, c in self.terms.items():
            for i in range(len(sigma)):
                face = sigma[:i] + sigma[i + 1:]
                out[face] = out.get(face, Fraction(0)) + c * (-1) ** i
        return SimplicialChain(out)


def chain_of(x: SignedPermutation) -> SimplicialChain:
    """Fundamental cycle of the cross-polytope boundary attached to x.

    One simplex per selection of x or star(x) at each nesting level i,
    taking the vertex F_i of the selected word, with sign (-1)^(number of
    star selections).  The empty word yields the empty-simplex unit chain.
    """
    k = (x.r + 1) // 2
    if k == 0:
        return SimplicialChain({(): Fraction(1)})
    sx = star(x)
    levels = [(f_set(x, i), f_set(sx, i)) for i in range(1, k + 1)]
    terms: dict[Simplex, Fraction] = {}
    for choice in itertools.product((0, 1), repeat=k):
        sigma = tuple(levels[i][choice[i]] for i in range(k))
        sign = -1 if sum(choice) % 2 else 1
        terms[sigma] = terms.get(sigma, Fraction(0)) + sign
    return SimplicialChain(terms)


def chain_of_lincomb(comb: LinComb) -> SimplicialChain:
    out = SimplicialChain()
    for perm, c in comb.items():
        out = out + chain_of(perm).scale(c)
    return out


class SparseMatrix:
    """Column-sparse integer matrix with exact rank."""

    def __init__(self, nrows: int, columns: list[dict[int, int]]):
        self.nrows = nrows
        self.columns = columns
        self._rank: int | None = None

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, len(self.columns))

    def rank(self) -> int:
        if self._rank is None:
            ech = SparseEchelon()
            for col in self.columns:
                ech.add_row(col)
            self._rank = ech.rank
        return self._rank


def boundary_matrix(c: NestedChainComplex, k: int) -> SparseMatrix:
    """Boundary from k-chains to (k-1)-chains; k = 0 is the augmentation."""
    if k in c._matrices:
        return c._matrices[k]
    rows = c.simplex_index(k - 1)
    cols = []
    for sigma in c.simplices(k):
        col: dict[int, int] = {}
        for i in range(len(sigma)):
            face = sigma[:i] + sigma[i + 1:]
            col[rows[face]] = (-1) ** i
        cols.append(col)
    mat = SparseMatrix(len(rows), cols)
    c._matrices[k] = mat
    return mat


def reduced_betti(c: NestedChainComplex, k: int) -> int:
    """Dimension of reduced homology in degree k, by exact rank computation.

    Degree -1 is meaningful: the empty complex has a single unit of reduced
    homology there, which accounts for the empty index set.
    """
    if k < -1:
        return 0
    nk = c.n_simplices(k)
    rk = boundary_matrix(c, k).rank() if k >= 0 else 0
    rk1 = boundary_matrix(c, k + 1).rank()
    return nk - rk - rk1


class _CycleSolver:
    """Expresses top-dimensional cycles of hat(I) in the snake-cycle basis.

    Snake-cycle columns are augmented with coordinate labels and kept in
    echelon form; label columns can never hold a pivot unless the snake
    cycles were dependent, which would falsify their basis property.
    """

    def __init__(self, sup: IndexSet, cap: int):
        self.support = sup
        self.complex = hat_complex(sup, cap)
        k = (len(sup) - 1) // 2 if sup else -1
        self.top_index = self.complex.simplex_index(k)
        self.n_top = len(self.complex.simplices(k))
        self.snakes = enumerate_snakes(sup)
        self.echelon = SparseEchelon()
        for j, alpha in enumerate(self.snakes):
            row = {self.top_index[s]: int(c)
                   for s, c in chain_of(alpha).terms.items()}
            row[self.n_top + j] = 1
            self.echelon.add_row(row)
        if (self.echelon.rank != len(self.snakes)
                or any(p >= self.n_top for p in self.echelon.pivots)):
            raise ConventionError(
                f"snake cycles on {sup} are not independent")

    def solve(self, chain: SimplicialChain) -> LinComb:
        vec: dict[int, Fraction] = {}
        for sigma, c in chain.terms.items():
            if sigma not in self.top_index:
                raise ValueError(f"{sigma} is not a top simplex of hat{self.support}")
            vec[self.top_index[sigma]] = c
        residue = self.echelon.reduce_vector(vec)
        coeffs: dict[SignedPermutation, Fraction] = {}
        for col, val in residue.items():
            if col < self.n_top:
                raise ConventionError(
                    f"cycle on {self.support} is outside the snake-cycle span")
            coeffs[self.snakes[col - self.n_top]] = -val
        return LinComb(self.support, coeffs)


@lru_cache(maxsize=None)
def _cycle_solver(sup: IndexSet, cap: int) -> _CycleSolver:
    return _CycleSolver(sup, cap)


def solve_in_snake_cycles(chain: SimplicialChain, I: Iterable[int],
                          cap: int = ORACLE_CAP) -> LinComb:
    """Unique coefficients with chain = sum of coeff * chain_of(snake)."""
    return _cycle_solver(index_set(I), cap).solve(chain)


# --- simplicial joins -------------------------------------------------------

JoinSimplex = tuple[Simplex, Simplex]


class JoinChain:
    """Chain in the join of two complexes, first factor's vertices first."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[JoinSimplex, Fraction] | None = None):
        self.terms: dict[JoinSimplex, Fraction] = {
            s: Fraction(c) for s, c in (terms or {}).items() if c}

    def items(self) -> list[tuple[JoinSimplex, Fraction]]:
        return sorted(self.terms.items(),
                      key=lambda kv: (_skey(kv[0][0]), _skey(kv[0][1])))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, JoinChain) and self.terms == other.terms

    def scale(self, factor) -> "JoinChain":
        f = Fraction(factor)
        return JoinChain({s: f * c for s, c in self.terms.items()})


def join_chains(c1: SimplicialChain, c2: SimplicialChain) -> JoinChain:
    """Bilinear join; the orientation is the concatenated vertex order."""
    terms: dict[JoinSimplex, Fraction] = {}
    for s1, a in c1.terms.items():
        for s2, b in c2.terms.items():
            terms[(s1, s2)] = terms.get((s1, s2), Fraction(0)) + a * b
    return JoinChain(terms)


def join_image(z: SignedPermutation, I1: Iterable[int], I2: Iterable[int]
               ) -> JoinChain:
    """Chain image of chain_of(z) in hat(I1) * hat(I2).

    Each vertex of a simplex has odd signed incidence with exactly one of
    I1, I2; it is retracted into that factor.  Moving the first factor's
    vertices in front of the second's contributes the sign of that
    permutation; degenerate retractions kill the simplex.
    """
    i1, i2 = index_set(I1), index_set(I2)
    if set(i1) & set(i2):
        raise ValueError("factors must be disjoint")
    if set(z.support) != set(i1) | set(i2):
        raise ValueError(f"support {z.support} is not the union of {i1} and {i2}")
    pm1 = {m for j in i1 for m in (j, -j)}
    pm2 = {m for j in i2 for m in (j, -j)}
    out: dict[JoinSimplex, Fraction] = {}
    for sigma, coeff in chain_of(z).terms.items():
        in_first = [len(v & pm1) % 2 == 1 for v in sigma]
        inversions = 0
        seen_second = 0
        for first in in_first:
            if first:
                inversions += seen_second
            else:
                seen_second += 1
        f1 = [v & pm1 for v, first in zip(sigma, in_first) if first]
        f2 = [v & pm2 for v, first in zip(sigma, in_first) if not first]
        if len(set(f1)) != len(f1) or len(set(f2)) != len(f2):
            continue  # degenerate retraction
        key = (tuple(f1), tuple(f2))
        sign = -1 if inversions % 2 else 1
        out[key] = out.get(key, Fraction(0)) + sign * coeff
    return JoinChain(out)


def join_closed_form(z: SignedPermutation, I1: Iterable[int], I2: Iterable[int]
                     ) -> JoinChain:
    """(-1)^kappa * chain_of(P_I1 z) * chain_of(P_I2 z) for restrictable z,
    the zero chain otherwise."""
    from .ring import RestrictionContext, is_restrictable, kappa
    ctx = RestrictionContext(index_set(I1), index_set(I2))
    if not is_restrictable(z, ctx):
        return JoinChain()
    sign = (-1) ** kappa(z, ctx)
    return join_chains(chain_of(restrict_p(z, ctx.i1)),
                       chain_of(restrict_p(z, ctx.i2))).scale(sign)


class _JoinSolver:
    """Expresses top join cycles of hat(I1) * hat(I2) in the basis of
    snake-cycle joins chain_of(alpha) * chain_of(beta)."""

    def __init__(self, i1: IndexSet, i2: IndexSet, cap: int):
        self.i1, self.i2 = i1, i2
        k1 = (len(i1) - 1) // 2 if i1 else -1
        k2 = (len(i2) - 1) // 2 if i2 else -1
        tops1 = hat_complex(i1, cap).simplices(k1)
        tops2 = hat_complex(i2, cap).simplices(k2)
        self.top_index = {(s1, s2): m
                          for m, (s1, s2) in enumerate(itertools.product(tops1, tops2))}
        self.n_top = len(self.top_index)
        self.pairs = [(a, b) for a in enumerate_snakes(i1) for b in enumerate_snakes(i2)]
        self.echelon = SparseEchelon()
        for j, (a, b) in enumerate(self.pairs):
            jc = join_chains(chain_of(a), chain_of(b))
            row = {self.top_index[s]: int(c) for s, c in jc.terms.items()}
            row[self.n_top + j] = 1
            self.echelon.add_row(row)
        if (self.echelon.rank != len(self.pairs)
                or any(p >= self.n_top for p in self.echelon.pivots)):
            raise ConventionError(f"snake-cycle joins on {i1}, {i2} are dependent")

    def solve(self, chain: JoinChain) -> dict[tuple[SignedPermutation, SignedPermutation], Fraction]:
        vec: dict[int, Fraction] = {}
        for s, c in chain.terms.items():
            if s not in self.top_index:
                raise ValueError(f"join simplex outside the top product grid: {s}")
            vec[self.top_index[s]] = c
        residue = self.echelon.reduce_vector(vec)
        coeffs = {}
        for col, val in residue.items():
            if col < self.n_top:
                raise ConventionError("join cycle outside the snake-join span")
            coeffs[self.pairs[col - self.n_top]] = -val
        return coeffs


@lru_cache(maxsize=None)
def _join_solver(i1: IndexSet, i2: IndexSet, cap: int) -> _JoinSolver:
    return _JoinSolver(i1, i2, cap)


# --- verification driver ----------------------------------------------------

@dataclass
class CheckResult:
    check: str
    instances: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, payload) -> None:
        if len(self.failures) < 20:  # enough to diagnose, bounded output
            self.failures.append(payload)
        else:
            self.failures[-1] = "... more failures suppressed"

    def to_json(self) -> dict:
        return {"check": self.check, "instances": self.instances,
                "failures": list(self.failures)}


def _subsets(n: int) -> Iterator[IndexSet]:
    base = list(range(1, n + 1))
    for size in range(n + 1):
        yield from (tuple(c) for c in itertools.combinations(base, size))


def _split_contexts(n: int) -> Iterator[tuple[IndexSet, IndexSet]]:
    """Ordered disjoint pairs (I1, I2) with |I1|*|I2| even, union inside [n]."""
    for union in _subsets(n):
        u = set(union)
        for size1 in range(len(union) + 1):
            for c1 in itertools.combinations(union, size1):
                i1 = tuple(c1)
                i2 = tuple(sorted(u - set(c1)))
                if (len(i1) * len(i2)) % 2 == 0:
                    yield i1, i2


def check_betti_identity(n: int, cap: int = ORACLE_CAP) -> CheckResult:
    """Top reduced Betti number of hat(I) is springer(|I|); all lower vanish."""
    res = CheckResult("betti-identity")
    for I in _subsets(n):
        if len(I) > cap:
            continue
        c = hat_complex(I, cap)
        top = (len(I) - 1) // 2 if I else -1
        res.instances += 1
        got = reduced_betti(c, top)
        want = springer(len(I))
        if got != want:
            res.record({"I": list(I), "dim": top, "got": got, "want": want})
        for k in range(-1 + (0 if I else 1), top):
            res.instances += 1
            low = reduced_betti(c, k)
            if low != 0:
                res.record({"I": list(I), "dim": k, "got": low, "want": 0})
    return res


def check_retraction_equivalence(n: int, cap: int = FULLSUB_CAP) -> CheckResult:
    """Reduced Betti numbers of the full subcomplex match the hat complex."""
    res = CheckResult("retraction-equivalence")
    n = min(n, cap)
    for J in _subsets(n):
        full = full_subcomplex(n, J, cap)
        hat = hat_complex(J)
        for k in range(-1, max(full.dim, hat.dim) + 1):
            res.instances += 1
            a, b = reduced_betti(full, k), reduced_betti(hat, k)
            if a != b:
                res.record({"J": list(J), "dim": k, "fullsub": a, "hat": b})
    return res


def check_relations_vanish(n: int, cap: int = ORACLE_CAP) -> CheckResult:
    """Every H1..H5 instance realizes to the zero chain (not merely to a
    boundary): the hat complex has no cells above the chains' dimension."""
    res = CheckResult("relations-vanish")
    for I in _subsets(n):
        if not I or len(I) > cap:
            continue
        for label, comb in generator_instances(I):
            res.instances += 1
            if chain_of_lincomb(comb):
                res.record({"I": list(I), "generator": label,
                            "instance": comb.to_json()})
    return res


def check_snake_cycles_independent(n: int, cap: int = ORACLE_CAP) -> CheckResult:
    """Snake cycles span the top cycle space freely."""
    res = CheckResult("snake-cycle-basis")
    for I in _subsets(n):
        if len(I) > cap:
            continue
        res.instances += 1
        try:
            _cycle_solver(I, cap)
        except ConventionError as exc:
            res.record({"I": list(I), "error": str(exc)})
    return res


def check_triple_agreement(n: int, cap: int = ORACLE_CAP) -> CheckResult:
    """normal_form via rewriting == via the relation matrix == via the
    oracle cycle solve, for every signed permutation."""
    from .core import enumerate_signed_perms
    from .normalform import normal_form
    res = CheckResult("normal-form-agreement")
    for I in _subsets(n):
        if len(I) > cap:
            continue
        for x in enumerate_signed_perms(I):
            res.instances += 1
            try:
                nf_r = normal_form(x, backend="rewrite")
                nf_s = normal_form(x, backend="solve")
                nf_o = solve_in_snake_cycles(chain_of(x), I, cap)
            except (ConventionError, ValueError) as exc:
                res.record({"I": list(I), "x": str(x), "error": str(exc)})
                continue
            if not (nf_r == nf_s == nf_o):
                res.record({"I": list(I), "x": str(x),
                            "rewrite": str(nf_r), "solve": str(nf_s),
                            "oracle": str(nf_o)})
    return res


def check_join_factorization(n: int, cap: int = ORACLE_CAP) -> CheckResult:
    """join_image matches its closed form on every snake and every valid
    split; non-restrictable snakes map to the zero chain."""
    from .ring import RestrictionContext, is_restrictable
    res = CheckResult("join-factorization")
    for i1, i2 in _split_contexts(n):
        union = tuple(sorted(set(i1) | set(i2)))
        if len(union) > cap:
            continue
        ctx = RestrictionContext(i1, i2)
        for z in enumerate_snakes(union):
            res.instances += 1
            got = join_image(z, i1, i2)
            want = join_closed_form(z, i1, i2)
            if got != want:
                res.record({"I1": list(i1), "I2": list(i2), "z": str(z),
                            "restrictable": is_restrictable(z, ctx)})
    return res


def check_cup_against_topology(n: int, cap: int = ORACLE_CAP) -> CheckResult:
    """The algebraic cup product equals the simplicial pairing: the
    coefficient of z in cup(alpha, beta) is the (alpha, beta)-coordinate of
    join_image(z) in the snake-join basis."""
    from .ring import cup_basis
    res = CheckResult("cup-topology")
    for i1, i2 in _split_contexts(n):
        union = tuple(sorted(set(i1) | set(i2)))
        if len(union) > cap:
            continue
        solver = _join_solver(i1, i2, cap)
        products = {(a, b): cup_basis(a, b)
                    for a in enumerate_snakes(i1) for b in enumerate_snakes(i2)}
        for z in enumerate_snakes(union):
            try:
                coords = solver.solve(join_image(z, i1, i2))
            except (ConventionError, ValueError) as exc:
                res.instances += 1
                res.record({"I1": list(i1), "I2": list(i2), "z": str(z),
                            "error": str(exc)})
                continue
            for (a, b), prod in products.items():
                res.instances += 1
                want = coords.get((a, b), Fraction(0))
                got = prod.coefficient(z)
                if got != want:
                    res.record({"I1": list(i1), "I2": list(i2), "z": str(z),
                                "alpha": str(a), "beta": str(b),
                                "cup": str(got), "oracle": str(want)})
    return res


CHECKS = {
    "betti-identity": check_betti_identity,
    "retraction-equivalence": check_retraction_equivalence,
    "relations-vanish": check_relations_vanish,
    "snake-cycle-basis": check_snake_cycles_independent,
    "normal-form-agreement": check_triple_agreement,
    "join-factorization": check_join_factorization,
    "cup-topology": check_cup_against_topology,
}

VERIFY_CAP = 4


def verify_suite(n: int, only: Iterable[str] | None = None,
                 cap: int = VERIFY_CAP) -> list[CheckResult]:
    """Run the named structural checks over all index sets inside [n]."""
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds verification cap {cap}")
    wanted = None if only is None else set(only)
    results = []
    for name, fn in CHECKS.items():
        if wanted is not None and name not in wanted:
            continue
        results.append(fn(n))
    return results
