"""Rewriting a tableau homomorphism in the semistandard basis.

A tableau of partition shape indexes a homomorphism; when some column fails
to increase strictly, the two-row relation applied to an offending adjacent
pair of rows rewrites the homomorphism as a combination of tableaux that
are strictly later in a monotone weight order.  Iterating terminates with a
combination of semistandard tableaux, the canonical form.

Two knobs choose which violation to attack first; every choice yields the
same canonical form, which the test suite checks by comparing strategies.
"""

from __future__ import annotations

from .combinat import Composition, Tableau, is_semistandard
from .garnir import LinComb, two_row_straighten_step

PAIR_RULES = ("topmost", "bottommost")
COLUMN_RULES = ("leftmost", "rightmost")


def weight(tab: Tableau) -> int:
    """Sum over rows of (row index) times (sum of row entries), top row 1.

    Each rewrite pushes entry mass strictly downward, so this weight
    strictly increases; it is bounded on the finitely many tableaux of a
    given shape and content, which forces termination.
    """
    return sum(r * row.element_sum() for r, row in enumerate(tab.rows, start=1))


def _pair_violates(upper: tuple[int, ...], lower: tuple[int, ...]) -> bool:
    return any(lower[c] <= upper[c] for c in range(len(lower)))


def find_violating_window(tab: Tableau, pair_rule: str = "topmost") -> int | None:
    """1-based index of the upper row of an adjacent pair breaking
    column-strictness, or None when the tableau is semistandard."""
    if pair_rule not in PAIR_RULES:
        raise ValueError(f"unknown pair rule {pair_rule!r}")
    rows = tab.row_lists()
    hits = [l for l in range(1, tab.nrows)
            if _pair_violates(rows[l - 1], rows[l])]
    if not hits:
        return None
    return hits[0] if pair_rule == "topmost" else hits[-1]


def embed_two_row(tab: Tableau, upper_row: int, rel: LinComb) -> LinComb:
    """Substitute a two-row combination for rows upper_row, upper_row + 1.

    The combination must live on exactly the window's shape and content.
    Fixing every other row turns a two-row identity into an identity for
    the full tableau.
    """
    l = upper_row
    if not 1 <= l < tab.nrows:
        raise ValueError(f"row {l} is not the upper row of an adjacent pair")
    window_shape = Composition((tab.shape.part(l - 1), tab.shape.part(l)))
    window_type = Tableau(window_shape, [tab.rows[l - 1], tab.rows[l]]).type()
    if rel.shape != window_shape or rel.type != window_type:
        raise ValueError(
            f"combination on shape {rel.shape} type {rel.type} does not fit "
            f"window shape {window_shape} type {window_type}")
    out = LinComb.zero(tab.shape, tab.type())
    for window_tab, coeff in rel.items():
        rows = (tab.rows[: l - 1] + window_tab.rows + tab.rows[l + 1:])
        out = out.add_term(Tableau(tab.shape, rows), coeff)
    return out


def _expand_once(tab: Tableau, pair_rule: str, column_rule: str) -> LinComb | None:
    """One embedded rewrite, or None if the tableau is semistandard."""
    l = find_violating_window(tab, pair_rule)
    if l is None:
        return None
    window = Tableau(Composition((tab.shape.part(l - 1), tab.shape.part(l))),
                     [tab.rows[l - 1], tab.rows[l]])
    return embed_two_row(tab, l, two_row_straighten_step(window, column_rule))


def _straighten_into(tab: Tableau, pair_rule: str, column_rule: str,
                     memo: dict[Tableau, LinComb]) -> LinComb:
    """Full canonical form of one tableau, reusing and filling memo."""
    if tab in memo:
        return memo[tab]
    expansions: dict[Tableau, LinComb] = {}
    stack = [tab]
    while stack:
        cur = stack[-1]
        if cur in memo:
            stack.pop()
            continue
        step = expansions.get(cur)
        if step is None:
            step = _expand_once(cur, pair_rule, column_rule)
            if step is None:
                memo[cur] = LinComb.single(cur)
                stack.pop()
                continue
            for child in step.support():
                if weight(child) <= weight(cur):
                    raise RuntimeError(
                        f"rewrite failed to increase weight at {cur!r}")
            expansions[cur] = step
        pending = [child for child in step.support() if child not in memo]
        if pending:
            stack.extend(pending)
            continue
        total = LinComb.zero(tab.shape, tab.type())
        for child, coeff in step.items():
            total = total + memo[child].scale(coeff)
        memo[cur] = total
        stack.pop()
    return memo[tab]


def semistandardize(tab: Tableau, pair_rule: str = "topmost",
                    column_rule: str = "leftmost") -> LinComb:
    """Canonical form: the equal combination of semistandard tableaux.

    The input must have partition shape.  A semistandard input returns
    itself with coefficient 1.
    """
    if not tab.shape.is_partition:
        raise ValueError(f"straightening needs a partition shape, got {tab.shape}")
    if pair_rule not in PAIR_RULES:
        raise ValueError(f"unknown pair rule {pair_rule!r}")
    if column_rule not in COLUMN_RULES:
        raise ValueError(f"unknown column rule {column_rule!r}")
    return _straighten_into(tab, pair_rule, column_rule, {})


def semistandardize_lincomb(comb: LinComb, pair_rule: str = "topmost",
                            column_rule: str = "leftmost") -> LinComb:
    """Canonical form of a combination, term by term with shared caching."""
    if not comb.shape.is_partition:
        raise ValueError(f"straightening needs a partition shape, got {comb.shape}")
    memo: dict[Tableau, LinComb] = {}
    out = LinComb.zero(comb.shape, comb.type)
    for tab, coeff in comb.items():
        out = out + _straighten_into(tab, pair_rule, column_rule, memo).scale(coeff)
    return out
