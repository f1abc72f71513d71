"""Brute-force exact model of the Hecke algebra at small degree.

Everything here works with explicit basis expansions: an algebra element is
a sparse map from permutations to Laurent polynomials, multiplication is
repeated application of the generator rule, and module membership is
checked by explicit reconstruction.  Nothing is clever; that is the point.
The fast combinatorial straightening in the other modules is verified
against this model at small sizes.

A degree cap (default 8, overridable through the HECKEHOM_ORACLE_CAP
environment variable) guards against accidentally asking for a basis with
billions of elements.
"""

from __future__ import annotations

import itertools
import multiprocessing
import os
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .errors import OracleCapError, TabloidMembershipError
from .combinat import (
    Composition,
    IntoComposition,
    Multiset,
    Partition,
    Perm,
    Tableau,
    as_composition,
    column_reading_composition,
    cross_pairs,
    identity_perm,
    inversions,
    iter_multisets,
    perm_1A,
    perm_inverse,
    perm_mul,
    row_reading_composition,
    w_mu,
)
from .garnir import (
    GarnirDatum,
    LinComb,
    garnir_relation,
    iter_valid_data,
)
from .qcoeff import LaurentPoly, quantum_binomial

DEFAULT_CAP = 8
CAP_ENV_VAR = "HECKEHOM_ORACLE_CAP"

_Q = LaurentPoly.monomial(1)
_Q_MINUS_1 = LaurentPoly.parse("q - 1")


def oracle_cap() -> int:
    """The current degree cap: the environment override or the default."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from exc


def _require_within_cap(n: int) -> None:
    cap = oracle_cap()
    if n > cap:
        raise OracleCapError(
            f"degree {n} exceeds the oracle cap {cap}; "
            f"raise {CAP_ENV_VAR} to override")


# ---------------------------------------------------------------------------
# algebra elements
# ---------------------------------------------------------------------------


Coeffish = Union[LaurentPoly, int]


def _as_poly(value: Coeffish) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly.monomial(0, int(value))


class HeckeElem:
    """A sparse element of the degree-n Hecke algebra in the standard basis.

    Stored as a map from permutations (one-line tuples) to nonzero Laurent
    polynomial coefficients.
    """

    __slots__ = ("_n", "_terms")

    def __init__(self, n: int, terms: Mapping[Perm, Coeffish] = ()):
        self._n = n
        acc: dict[Perm, LaurentPoly] = {}
        for w, coeff in dict(terms).items():
            if len(w) != n or sorted(w) != list(range(1, n + 1)):
                raise ValueError(f"{w} is not a permutation of 1..{n}")
            poly = _as_poly(coeff)
            if poly:
                acc[tuple(w)] = poly
        self._terms = acc

    @classmethod
    def _raw(cls, n: int, terms: dict[Perm, LaurentPoly]) -> "HeckeElem":
        elem = object.__new__(cls)
        elem._n = n
        elem._terms = terms
        return elem

    @classmethod
    def zero(cls, n: int) -> "HeckeElem":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "HeckeElem":
        return cls._raw(n, {identity_perm(n): LaurentPoly.one()})

    @property
    def n(self) -> int:
        return self._n

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> list[tuple[Perm, LaurentPoly]]:
        """(permutation, coefficient) pairs in lexicographic order."""
        return sorted(self._terms.items())

    def coefficient(self, w: Perm) -> LaurentPoly:
        return self._terms.get(tuple(w), LaurentPoly.zero())

    def support(self) -> set[Perm]:
        return set(self._terms)

    def _check_degree(self, other: "HeckeElem") -> None:
        if self._n != other._n:
            raise ValueError(f"degree mismatch: {self._n} vs {other._n}")

    def __add__(self, other: "HeckeElem") -> "HeckeElem":
        if not isinstance(other, HeckeElem):
            return NotImplemented
        self._check_degree(other)
        acc = dict(self._terms)
        for w, poly in other._terms.items():
            total = acc.get(w)
            total = poly if total is None else total + poly
            if total:
                acc[w] = total
            else:
                acc.pop(w, None)
        return HeckeElem._raw(self._n, acc)

    def __sub__(self, other: "HeckeElem") -> "HeckeElem":
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self + other.scale(-1)

    def __neg__(self) -> "HeckeElem":
        return self.scale(-1)

    def scale(self, factor: Coeffish) -> "HeckeElem":
        poly = _as_poly(factor)
        if not poly:
            return HeckeElem.zero(self._n)
        return HeckeElem._raw(
            self._n, {w: c * poly for w, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __repr__(self) -> str:
        return f"HeckeElem(n={self._n}, {len(self._terms)} terms)"

    def mul_right_gen(self, i: int) -> "HeckeElem":
        """Right multiplication by the i-th generator, 1 <= i <= n-1.

        For a basis term indexed by w: if swapping the values i, i+1
        lengthens w, the term moves there; otherwise the quadratic relation
        contributes (q-1) times the old term plus q times the shortened one.
        """
        if not 1 <= i <= self._n - 1:
            raise ValueError(f"generator index {i} out of range 1..{self._n - 1}")
        acc: dict[Perm, LaurentPoly] = {}

        def put(w: Perm, poly: LaurentPoly) -> None:
            total = acc.get(w)
            total = poly if total is None else total + poly
            if total:
                acc[w] = total
            else:
                acc.pop(w, None)

        for w, coeff in self._terms.items():
            pos_lo = w.index(i)
            pos_hi = w.index(i + 1)
            swapped = list(w)
            swapped[pos_lo], swapped[pos_hi] = i + 1, i
            ws = tuple(swapped)
            if pos_lo < pos_hi:
                put(ws, coeff)
            else:
                put(w, coeff * _Q_MINUS_1)
                put(ws, coeff.shift(1))
        return HeckeElem._raw(self._n, acc)

    def mul_t(self, w: Perm) -> "HeckeElem":
        """Right multiplication by the standard basis element of w."""
        elem = self
        for i in reduced_word(tuple(w)):
            elem = elem.mul_right_gen(i)
        return elem

    def mul(self, other: "HeckeElem") -> "HeckeElem":
        """Full product, distributing over the right factor's basis terms."""
        self._check_degree(other)
        total = HeckeElem.zero(self._n)
        for w, coeff in other._terms.items():
            total = total + self.mul_t(w).scale(coeff)
        return total


def mul_right_gen(h: HeckeElem, i: int) -> HeckeElem:
    return h.mul_right_gen(i)


def mul(a: HeckeElem, b: HeckeElem) -> HeckeElem:
    return a.mul(b)


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """A reduced word for w, found by repeatedly stripping a right descent.

    If the value i appears after i+1 in one-line form, then w ends with the
    i-th generator; stripping it shortens w by one.  The collected letters,
    reversed, multiply out to w, and their count equals inversions(w).
    """
    letters: list[int] = []
    cur = list(w)
    n = len(cur)
    pos = [0] * (n + 1)
    for p, v in enumerate(cur):
        pos[v] = p
    while True:
        descent = next((i for i in range(1, n) if pos[i] > pos[i + 1]), None)
        if descent is None:
            break
        letters.append(descent)
        p_lo, p_hi = pos[descent], pos[descent + 1]
        cur[p_lo], cur[p_hi] = cur[p_hi], cur[p_lo]
        pos[descent], pos[descent + 1] = p_hi, p_lo
    return tuple(reversed(letters))


def t_of_perm(w: Perm) -> HeckeElem:
    """The standard basis element indexed by w."""
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation")
    return HeckeElem._raw(len(w), {w: LaurentPoly.one()})


def t_from_word(n: int, word: Iterable[int]) -> HeckeElem:
    """Product of generators in the given order, starting from the unit.

    Used to cross-check that t_of_perm is independent of the reduced word.
    """
    elem = HeckeElem.one(n)
    for i in word:
        elem = elem.mul_right_gen(i)
    return elem


# ---------------------------------------------------------------------------
# Young subgroups, coset representatives, x and y elements
# ---------------------------------------------------------------------------


def young_subgroup(comp: IntoComposition) -> tuple[Perm, ...]:
    """All permutations moving each block of consecutive values within itself."""
    comp = as_composition(comp)
    return _young_subgroup_cached(tuple(p for p in comp.parts if p))


@lru_cache(maxsize=None)
def _young_subgroup_cached(parts: tuple[int, ...]) -> tuple[Perm, ...]:
    per_block: list[list[tuple[int, ...]]] = []
    offset = 0
    for size in parts:
        per_block.append(
            [p for p in itertools.permutations(range(offset + 1, offset + size + 1))])
        offset += size
    out = []
    for combo in itertools.product(*per_block):
        out.append(tuple(itertools.chain.from_iterable(combo)))
    return tuple(out)


def is_min_coset_rep(w: Perm, comp: IntoComposition) -> bool:
    """Whether w is the shortest element of its right coset: increasing on
    each consecutive block of positions."""
    comp = as_composition(comp)
    offset = 0
    for size in comp.parts:
        for p in range(offset, offset + size - 1):
            if w[p] > w[p + 1]:
                return False
        offset += size
    return True


def _block_bounds(comp: Composition) -> list[tuple[int, int]]:
    bounds = []
    offset = 0
    for size in comp.parts:
        bounds.append((offset, offset + size))
        offset += size
    return bounds


def coset_reps(fine: IntoComposition, coarse: IntoComposition) -> tuple[Perm, ...]:
    """Minimal right coset representatives of one Young subgroup in a larger.

    The first composition must refine the second blockwise.  The result is
    every element of the larger subgroup that increases along each block of
    positions of the finer composition; passing coarse = (n,) gives the
    representatives in the whole symmetric group.
    """
    fine = as_composition(fine)
    coarse = as_composition(coarse)
    if fine.n != coarse.n:
        raise ValueError(f"sizes differ: {fine.n} vs {coarse.n}")
    return _coset_reps_cached(fine.stripped, coarse.stripped)


@lru_cache(maxsize=None)
def _coset_reps_cached(fine: tuple[int, ...],
                       coarse: tuple[int, ...]) -> tuple[Perm, ...]:
    groups: list[list[int]] = []
    fine_iter = iter(fine)
    leftovers: list[int] = []
    for target in coarse:
        group: list[int] = []
        got = 0
        while got < target:
            part = next(fine_iter, None)
            if part is None or got + part > target:
                raise ValueError(
                    f"composition {fine} does not refine {coarse} blockwise")
            group.append(part)
            got += part
        groups.append(group)
    leftovers = [p for p in fine_iter if p]
    if leftovers:
        raise ValueError(f"composition {fine} does not refine {coarse} blockwise")

    per_block: list[list[tuple[int, ...]]] = []
    offset = 0
    for target, group in zip(coarse, groups):
        sub = Composition(group)
        block_values = range(offset + 1, offset + target + 1)
        reps = [p for p in itertools.permutations(block_values)
                if is_min_coset_rep(p, sub)]
        per_block.append(reps)
        offset += target
    out = []
    for combo in itertools.product(*per_block):
        out.append(tuple(itertools.chain.from_iterable(combo)))
    return tuple(out)


def x_elem(comp: IntoComposition) -> HeckeElem:
    """Sum of the standard basis over the Young subgroup."""
    comp = as_composition(comp)
    one = LaurentPoly.one()
    return HeckeElem._raw(comp.n, {w: one for w in young_subgroup(comp)})


def y_elem(comp: IntoComposition) -> HeckeElem:
    """Alternating sum: each subgroup element weighted by (-q) to minus its
    length."""
    comp = as_composition(comp)
    terms = {}
    for w in young_subgroup(comp):
        l = inversions(w)
        terms[w] = LaurentPoly.monomial(-l, (-1) ** l)
    return HeckeElem._raw(comp.n, terms)


def _mul_x_blocks(elem: HeckeElem, comp: Composition) -> HeckeElem:
    """Right multiplication by the x element of a composition.

    Works block by block through the factorisation of the subgroup sum into
    descending generator chains, so the cost is a handful of generator
    multiplications rather than a full subgroup sum.
    """
    offset = 0
    for size in comp.parts:
        for m in range(2, size + 1):
            total = elem
            cur = elem
            for gen in range(offset + m - 1, offset, -1):
                cur = cur.mul_right_gen(gen)
                total = total + cur
            elem = total
        offset += size
    return elem


def _mul_y_blocks(elem: HeckeElem, comp: Composition) -> HeckeElem:
    """Right multiplication by the y element, by the same factorisation."""
    offset = 0
    for size in comp.parts:
        for m in range(2, size + 1):
            total = elem
            cur = elem
            sign_power = 0
            for gen in range(offset + m - 1, offset, -1):
                cur = cur.mul_right_gen(gen)
                sign_power += 1
                total = total + cur.scale(
                    LaurentPoly.monomial(-sign_power, (-1) ** sign_power))
            elem = total
        offset += size
    return elem


# ---------------------------------------------------------------------------
# homomorphism images
# ---------------------------------------------------------------------------


def image_h3(tab: Tableau) -> HeckeElem:
    """Image of the permutation-module generator under the tableau's map.

    The x element of the tableau's type, times the basis element of the
    tableau's permutation, times the sum over coset representatives of the
    row-reading refinement inside the shape's subgroup.
    """
    _require_within_cap(tab.n)
    return _image_h3_cached(tab)


@lru_cache(maxsize=None)
def _image_h3_cached(tab: Tableau) -> HeckeElem:
    type_ = tab.type()
    base = x_elem_padded(type_, tab.n).mul_t(perm_1A(tab))
    total = HeckeElem.zero(tab.n)
    for d in coset_reps(row_reading_composition(tab), tab.shape):
        total = total + base.mul_t(d)
    return total


def x_elem_padded(comp: IntoComposition, n: int) -> HeckeElem:
    """x element of a composition viewed inside degree n (size must agree)."""
    comp = as_composition(comp)
    if comp.n != n:
        raise ValueError(f"composition of {comp.n} cannot live in degree {n}")
    return x_elem(comp)


def image_h2(tab: Tableau) -> HeckeElem:
    """The same image, computed from row-rearranged fillings.

    Each row's multiset is laid out in every distinct order; each resulting
    filling contributes the type's x element times the basis element of the
    filling's permutation.  Agreement with image_h3 is a test invariant.
    """
    _require_within_cap(tab.n)
    type_len = len(tab.type().stripped)
    x = x_elem_padded(tab.type(), tab.n)
    row_orders = [sorted(set(itertools.permutations(row.elements())))
                  for row in tab.rows]
    total = HeckeElem.zero(tab.n)
    for arrangement in itertools.product(*row_orders):
        cells = [v for row in arrangement for v in row]
        total = total + x.mul_t(_filling_perm(cells, type_len))
    return total


def _filling_perm(cell_values: list[int], type_len: int) -> Perm:
    cells_by_value: list[list[int]] = [[] for _ in range(type_len)]
    for p, v in enumerate(cell_values, start=1):
        cells_by_value[v - 1].append(p)
    return tuple(itertools.chain.from_iterable(cells_by_value))


def image_h4(tab: Tableau) -> HeckeElem:
    """The same image, computed from the left-handed expansion.

    Sum over inverses of coset representatives of the column-reading
    refinement inside the type's subgroup, times the tableau's basis
    element, times the shape's x element.
    """
    _require_within_cap(tab.n)
    reps = coset_reps(column_reading_composition(tab), tab.type())
    terms = {perm_inverse(d): LaurentPoly.one() for d in reps}
    left = HeckeElem._raw(tab.n, terms)
    left = left.mul_t(perm_1A(tab))
    return _mul_x_blocks(left, tab.shape)


# ---------------------------------------------------------------------------
# tabloid coordinates and homomorphism application
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TabloidVector:
    """An element of a permutation module written in the tabloid basis.

    coords maps each minimal coset representative to its coefficient; the
    basis element at d is the composition's x element times the basis
    element of d.
    """

    composition: Composition
    coords: dict[Perm, LaurentPoly]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TabloidVector):
            return NotImplemented
        return (self.composition == other.composition
                and self.coords == other.coords)


def tabloid_coords(h: HeckeElem, comp: IntoComposition) -> TabloidVector:
    """Coordinates of an algebra element in the tabloid basis.

    Each tabloid basis element has disjoint support consisting of one full
    coset, with coefficient 1 on its minimal representative; so coordinates
    are read off the minimal representatives, and the claim that h lies in
    the module at all is then verified by exact reconstruction.
    """
    comp = as_composition(comp)
    if h.n != comp.n:
        raise ValueError(f"degree {h.n} does not match composition of {comp.n}")
    coords = {w: c for w, c in h._terms.items() if is_min_coset_rep(w, comp)}
    subgroup = young_subgroup(comp)
    recon: dict[Perm, LaurentPoly] = {}
    for d, coeff in coords.items():
        for v in subgroup:
            w = perm_mul(v, d)
            prev = recon.get(w)
            recon[w] = coeff if prev is None else prev + coeff
    recon = {w: c for w, c in recon.items() if c}
    if recon != h._terms:
        raise TabloidMembershipError(
            "element is not a combination of tabloid basis elements")
    return TabloidVector(comp, coords)


def apply_hom(vec: TabloidVector, tab: Tableau) -> HeckeElem:
    """Image of a tabloid vector under the homomorphism of a tableau whose
    shape is the vector's composition."""
    if tab.shape != vec.composition:
        raise ValueError(
            f"tableau shape {tab.shape} does not match vector over "
            f"{vec.composition}")
    base = image_h3(tab)
    total = HeckeElem.zero(base.n)
    for d, coeff in vec.coords.items():
        total = total + base.mul_t(d).scale(coeff)
    return total


def apply_lincomb(comb: LinComb, vec: TabloidVector) -> HeckeElem:
    """Image of a tabloid vector under a combination of tableau maps."""
    total = HeckeElem.zero(vec.composition.n)
    for tab, coeff in comb.items():
        total = total + apply_hom(vec, tab).scale(coeff)
    return total


# ---------------------------------------------------------------------------
# the Specht-module test
# ---------------------------------------------------------------------------


def specht_check(comb: LinComb) -> bool:
    """Whether a combination of tableau maps vanishes on the Specht module.

    The Specht module inside the shape's permutation module is generated by
    one element, so the combination vanishes exactly when the weighted sum
    of images, multiplied by the basis element of the shape's column-reading
    permutation and then by the alternating element of the conjugate shape,
    is zero.
    """
    shape = comb.shape
    if not shape.is_partition:
        raise ValueError(f"Specht modules need partition shapes, got {shape}")
    n = shape.n
    _require_within_cap(n)
    if n == 0:
        return True
    total = HeckeElem.zero(n)
    for tab, coeff in comb.items():
        total = total + image_h3(tab).scale(coeff)
    if total.is_zero:
        return True
    total = total.mul_t(w_mu(shape))
    conj = Partition(shape.stripped).conjugate()
    return _mul_y_blocks(total, conj).is_zero


# ---------------------------------------------------------------------------
# composition-identity sweeps
# ---------------------------------------------------------------------------


@dataclass
class PropsReport:
    """Outcome of a composition-identity sweep, per identity kind."""

    checked: dict[str, int] = field(default_factory=dict)
    failures: dict[str, list[str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def lines(self) -> list[str]:
        out = []
        for kind in sorted(self.checked):
            bad = self.failures.get(kind, [])
            status = "ok" if not bad else f"{len(bad)} FAILED"
            out.append(f"{kind}: {self.checked[kind]} checked, {status}")
            out.extend(f"  counterexample: {msg}" for msg in bad[:5])
        return out


PROP_KINDS = ("row_merge", "pair_merge", "row_split", "garnir_factorization")

Instance = tuple[str, tuple]


def _iter_row_merge(n_cap: int, value_cap: int) -> Iterator[Instance]:
    for m in range(1, n_cap + 1):
        for r in range(0, m + 1):
            for top in iter_multisets(r, value_cap):
                for bottom in iter_multisets(m - r, value_cap):
                    yield ("row_merge", (top.elements(), bottom.elements(), m))


def _iter_pair_merge(n_cap: int, value_cap: int) -> Iterator[Instance]:
    for n in range(1, n_cap + 1):
        for sizes in itertools.product(range(n + 1), repeat=3):
            r, u, v = sizes
            t = n - r - u - v
            if t < 0:
                continue
            pools = [iter_multisets(k, value_cap) for k in (r, u, v, t)]
            for rows in itertools.product(*pools):
                yield ("pair_merge", (tuple(row.elements() for row in rows),))


def _iter_row_split(n_cap: int, value_cap: int) -> Iterator[Instance]:
    for n in range(1, n_cap + 1):
        for r in range(n + 1):
            for w in range(n - r + 1):
                t = n - r - w
                for u in range(w + 1):
                    pools = [iter_multisets(k, value_cap) for k in (r, w, t)]
                    for rows in itertools.product(*pools):
                        yield ("row_split",
                               (tuple(row.elements() for row in rows), u))


def _iter_garnir_factorization(n_cap: int, value_cap: int) -> Iterator[Instance]:
    for datum in iter_valid_data(n_cap, value_cap):
        yield ("garnir_factorization",
               (datum.fixed_top.elements(), datum.pool.elements(),
                datum.fixed_bottom.elements(), datum.top_len))


def _constant_rows(sizes_and_values: list[tuple[int, int]]) -> list[Multiset]:
    return [Multiset([value] * size) for size, value in sizes_and_values]


def _check_row_merge(params: tuple) -> str | None:
    top_elems, bottom_elems, m = params
    top, bottom = Multiset(top_elems), Multiset(bottom_elems)
    r = top.size
    xi = Composition((r, m - r))
    tab_c = Tableau(xi, [top, bottom])
    merge_b = Tableau((m,), [Multiset([1] * r + [2] * (m - r))])
    merged = Tableau((m,), [top + bottom])
    coords = tabloid_coords(image_h3(merge_b), xi)
    lhs = apply_hom(coords, tab_c)
    scalar = LaurentPoly.one()
    for v in top.support():
        scalar = scalar * quantum_binomial(top.count(v) + bottom.count(v),
                                           top.count(v))
    scalar = scalar.shift(cross_pairs(top, bottom))
    rhs = image_h3(merged).scale(scalar)
    if lhs != rhs:
        return f"row merge failed for rows {top_elems}/{bottom_elems}, m={m}"
    return None


def _check_pair_merge(params: tuple) -> str | None:
    (rows_elems,) = params
    rows = [Multiset(e) for e in rows_elems]
    r, u, v, t = (row.size for row in rows)
    quad = Composition((r, u, v, t))
    tab_c = Tableau(quad, rows)
    merge_b = Tableau((r + u, v + t),
                      [Multiset([1] * r + [2] * u), Multiset([3] * v + [4] * t)])
    merged = Tableau((r + u, v + t), [rows[0] + rows[1], rows[2] + rows[3]])
    coords = tabloid_coords(image_h3(merge_b), quad)
    lhs = apply_hom(coords, tab_c)
    scalar = LaurentPoly.one()
    for v_ in rows[0].support():
        scalar = scalar * quantum_binomial(
            rows[0].count(v_) + rows[1].count(v_), rows[0].count(v_))
    for v_ in rows[2].support():
        scalar = scalar * quantum_binomial(
            rows[2].count(v_) + rows[3].count(v_), rows[2].count(v_))
    scalar = scalar.shift(cross_pairs(rows[0], rows[1])
                          + cross_pairs(rows[2], rows[3]))
    rhs = image_h3(merged).scale(scalar)
    if lhs != rhs:
        return f"pair merge failed for rows {rows_elems}"
    return None


def _check_row_split(params: tuple) -> str | None:
    rows_elems, u = params
    rows = [Multiset(e) for e in rows_elems]
    r, w, t = (row.size for row in rows)
    v = w - u
    quad = Composition((r, u, v, t))
    split_d = Tableau(quad, _constant_rows([(r, 1), (u, 2), (v, 2), (t, 3)]))
    wide = Composition((r, w, t))
    tab_e = Tableau(wide, rows)
    coords = tabloid_coords(image_h3(split_d), wide)
    lhs = apply_hom(coords, tab_e)
    rhs = HeckeElem.zero(sum((r, w, t)))
    for mid_top in rows[1].sub_multisets(u):
        tab = Tableau(quad, [rows[0], mid_top, rows[1] - mid_top, rows[2]])
        rhs = rhs + image_h3(tab)
    if lhs != rhs:
        return f"row split failed for rows {rows_elems}, split size {u}"
    return None


def _check_garnir_factorization(params: tuple) -> str | None:
    top_elems, pool_elems, bottom_elems, top_len = params
    datum = GarnirDatum(Multiset(top_elems), Multiset(pool_elems),
                        Multiset(bottom_elems), top_len)
    r = datum.fixed_top.size
    s = datum.pool.size
    t = datum.fixed_bottom.size
    u = datum.take_size
    v = datum.bottom_len - t
    quad = Composition((r, u, v, t))
    wide = Composition((r, s, t))
    merge_b = Tableau(datum.shape,
                      [Multiset([1] * r + [2] * u), Multiset([3] * v + [4] * t)])
    split_d = Tableau(quad, _constant_rows([(r, 1), (u, 2), (v, 2), (t, 3)]))
    tab_e = Tableau(wide, [datum.fixed_top, datum.pool, datum.fixed_bottom])
    mid = apply_hom(tabloid_coords(image_h3(merge_b), quad), split_d)
    lhs = apply_hom(tabloid_coords(mid, wide), tab_e)
    rel = garnir_relation(datum)
    rhs = HeckeElem.zero(datum.n)
    for tab, coeff in rel.items():
        rhs = rhs + image_h3(tab).scale(coeff)
    if lhs != rhs:
        return (f"relation factorisation failed for "
                f"{top_elems}|{pool_elems}|{bottom_elems}, top length {top_len}")
    return None


_CHECKERS = {
    "row_merge": _check_row_merge,
    "pair_merge": _check_pair_merge,
    "row_split": _check_row_split,
    "garnir_factorization": _check_garnir_factorization,
}

_GENERATORS = {
    "row_merge": _iter_row_merge,
    "pair_merge": _iter_pair_merge,
    "row_split": _iter_row_split,
    "garnir_factorization": _iter_garnir_factorization,
}


def _check_instance(item: Instance) -> tuple[str, str | None]:
    kind, params = item
    return kind, _CHECKERS[kind](params)


def _reservoir(stream: Iterator[Instance], k: int,
               rng: random.Random) -> list[Instance]:
    """Uniform sample of k items from a stream of unknown length."""
    sample: list[Instance] = []
    for i, item in enumerate(stream):
        if i < k:
            sample.append(item)
        else:
            j = rng.randrange(i + 1)
            if j < k:
                sample[j] = item
    return sample


def verify_composition_props(n_cap: int, value_cap: int = 4,
                             samples: int | None = None, seed: int = 0,
                             jobs: int = 1) -> PropsReport:
    """Check the four composition identities against the brute-force model.

    With samples=None every instance up to the caps is checked; otherwise a
    seeded uniform sample of that many instances per identity.  jobs > 1
    distributes the checks over worker processes.
    """
    if n_cap > DEFAULT_CAP:
        raise ValueError(f"composition sweeps support n_cap <= {DEFAULT_CAP}")
    report = PropsReport()
    work: list[Instance] = []
    for kind in PROP_KINDS:
        stream = _GENERATORS[kind](n_cap, value_cap)
        if samples is None:
            chosen = list(stream)
        else:
            chosen = _reservoir(stream, samples, random.Random(f"{seed}:{kind}"))
        report.checked[kind] = len(chosen)
        report.failures[kind] = []
        work.extend(chosen)

    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.imap_unordered(_check_instance, work, chunksize=16)
            for kind, failure in results:
                if failure is not None:
                    report.failures[kind].append(failure)
    else:
        for item in work:
            kind, failure = _check_instance(item)
            if failure is not None:
                report.failures[kind].append(failure)
    for kind in PROP_KINDS:
        report.failures[kind].sort()
    return report
