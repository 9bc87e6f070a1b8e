"""Colored alphabets and colored tableaux over a heredity-equipped algebra.

A colored letter is a pair (l, x) with l in [1, n] and x a basis label from
X(i) (or Y(i)).  The total order on each alphabet: primary key the fixed
listing of X(i) (e_i first, then the remaining elements by (absorbing color
ascending, even before odd)), secondary key the letter.

A tableau of a multipartition is stored as a tuple of components, each a tuple
of rows, each row a tuple of colored letters.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .base_algebra import BasedSuperalgebra, HeredityData
from .partitions import Multipartition
from .rings import GradedSuperScalar

Letter = tuple[int, str]                      # (l, color label)
Tableau = tuple[tuple[tuple[Letter, ...], ...], ...]


@dataclass(frozen=True)
class Alphabet:
    """Ordered colored alphabet for one side (X or Y) of heredity data."""

    alg: BasedSuperalgebra
    data: HeredityData
    n: int
    side: str  # "X" or "Y"

    def _absorbing_color(self, z: str) -> int:
        """The unique j with e_j z = z (X side) or z e_j = z (Y side)."""
        for j in self.data.labels:
            ej = self.data.e[j]
            prod = self.alg.mul_basis(ej, z) if self.side == "X" else self.alg.mul_basis(z, ej)
            if prod == {z: 1}:
                return j
        raise ValueError(f"no absorbing idempotent for {z!r}")

    @cached_property
    def listings(self) -> dict[int, tuple[str, ...]]:
        side_sets = self.data.X if self.side == "X" else self.data.Y
        out = {}
        for i in self.data.labels:
            ei = self.data.e[i]
            rest = sorted(
                (z for z in side_sets[i] if z != ei),
                key=lambda z: (self._absorbing_color(z), self.alg.parity[z]),
            )
            out[i] = (ei, *rest)
        return out

    @cached_property
    def _pos(self) -> dict[str, tuple[int, int]]:
        return {
            z: (i, k)
            for i in self.data.labels
            for k, z in enumerate(self.listings[i])
        }

    def color_of(self, z: str) -> int:
        """The component i with z in X(i) (resp. Y(i))."""
        return self._pos[z][0]

    def key(self, letter: Letter):
        l, z = letter
        return (self._pos[z][1], l)

    def letters(self, i: int) -> list[Letter]:
        return sorted(
            ((l, z) for z in self.listings[i] for l in range(1, self.n + 1)),
            key=self.key,
        )

    def is_odd(self, letter: Letter) -> bool:
        return self.alg.parity[letter[1]] == 1

    def leq(self, a: Letter, b: Letter) -> bool:
        return self.key(a) <= self.key(b)


# ---------------------------------------------------------------------------
# tableaux
# ---------------------------------------------------------------------------

def shape_of(T: Tableau) -> Multipartition:
    return tuple(tuple(len(row) for row in comp) for comp in T)


def initial_tableau(bold: Multipartition, data: HeredityData) -> Tableau:
    return tuple(
        tuple(tuple((r, data.e[i]) for _ in range(width)) for r, width in enumerate(comp, start=1))
        for i, comp in enumerate(bold)
    )


def word(T: Tableau) -> tuple[Letter, ...]:
    return tuple(entry for comp in T for row in comp for entry in row)


def letter_word(T: Tableau) -> tuple[int, ...]:
    return tuple(l for (l, _z) in word(T))


def color_word(T: Tableau) -> tuple[str, ...]:
    return tuple(z for (_l, z) in word(T))


def _tab_rule_ok(T: Tableau, alphabet: Alphabet) -> bool:
    """Equal entries in a row force an even color."""
    for comp in T:
        for row in comp:
            seen: dict[Letter, bool] = {}
            for entry in row:
                if entry in seen and alphabet.is_odd(entry):
                    return False
                seen[entry] = True
    return True


def is_row_standard(T: Tableau, alphabet: Alphabet) -> bool:
    if not _tab_rule_ok(T, alphabet):
        return False
    for comp in T:
        for row in comp:
            for a, b in zip(row, row[1:]):
                if alphabet.key(a) > alphabet.key(b):
                    return False
    return True


def is_column_standard(T: Tableau, alphabet: Alphabet) -> bool:
    if not _tab_rule_ok(T, alphabet):
        return False
    for comp in T:
        for r in range(1, len(comp)):
            for c in range(len(comp[r])):
                a, b = comp[r - 1][c], comp[r][c]
                ka, kb = alphabet.key(a), alphabet.key(b)
                if ka > kb or (ka == kb and not alphabet.is_odd(a)):
                    return False
    return True


def is_standard(T: Tableau, alphabet: Alphabet) -> bool:
    return is_row_standard(T, alphabet) and is_column_standard(T, alphabet)


def row_standardize(T: Tableau, alphabet: Alphabet) -> Tableau:
    """The unique row-equivalent row-standard tableau (sort each row)."""
    return tuple(
        tuple(tuple(sorted(row, key=alphabet.key)) for row in comp) for comp in T
    )


def enumerate_tableaux(
    bold: Multipartition, alphabet: Alphabet, flavor: str = "STD"
) -> list[Tableau]:
    """All tableaux of the given shape and flavor (STD | RST | CST | ALL)."""
    if flavor not in ("STD", "RST", "CST", "ALL"):
        raise ValueError(f"unknown flavor {flavor!r}")
    row_con = flavor in ("STD", "RST")
    col_con = flavor in ("STD", "CST")

    comps: list[list[tuple[tuple[Letter, ...], ...]]] = []
    for i, comp_shape in enumerate(bold):
        letters = alphabet.letters(i)
        fills: list[tuple[tuple[Letter, ...], ...]] = []

        def backtrack(rows_done: list[tuple[Letter, ...]], cur_row: list[Letter], r: int):
            if r == len(comp_shape):
                fills.append(tuple(rows_done))
                return
            c = len(cur_row)
            if c == comp_shape[r]:
                backtrack(rows_done + [tuple(cur_row)], [], r + 1)
                return
            for cand in letters:
                if cur_row:
                    prev = cur_row[-1]
                    if row_con:
                        if alphabet.key(cand) < alphabet.key(prev):
                            continue
                    if cand == prev and alphabet.is_odd(cand):
                        continue  # repetition rule inside a row
                if col_con and r > 0 and c < len(rows_done[r - 1]):
                    above = rows_done[r - 1][c]
                    ka, kc = alphabet.key(above), alphabet.key(cand)
                    if ka > kc or (ka == kc and not alphabet.is_odd(above)):
                        continue
                cur_row.append(cand)
                backtrack(rows_done, cur_row, r)
                cur_row.pop()

        backtrack([], [], 0)
        comps.append(fills)

    out: list[Tableau] = []

    def assemble(i: int, acc: list):
        if i == len(comps):
            T = tuple(acc)
            if _tab_rule_ok(T, alphabet):
                out.append(T)
            return
        for fill in comps[i]:
            assemble(i + 1, acc + [fill])

    assemble(0, [])
    return out


# ---------------------------------------------------------------------------
# weights and degrees
# ---------------------------------------------------------------------------

def tableau_weight(T: Tableau, alphabet: Alphabet) -> tuple[tuple[int, ...], ...]:
    """The profile alpha^S (X side) or beta^T (Y side): component j, letter r
    counts of cells whose color is absorbed by e_j."""
    n = alphabet.n
    counts = {j: [0] * n for j in alphabet.data.labels}
    for (l, z) in word(T):
        counts[alphabet._absorbing_color(z)][l - 1] += 1
    return tuple(tuple(counts[j]) for j in alphabet.data.labels)


def tableau_degree(T: Tableau, alg: BasedSuperalgebra) -> GradedSuperScalar:
    m = sum(alg.degree[z] for z in color_word(T))
    eps = sum(alg.parity[z] for z in color_word(T)) % 2
    return GradedSuperScalar.term(1, m, eps)


def to_json(T: Tableau) -> list:
    return [[[{"l": l, "c": z} for (l, z) in row] for row in comp] for comp in T]


def from_json(obj: list) -> Tableau:
    return tuple(
        tuple(tuple((int(e["l"]), str(e["c"])) for e in row) for row in comp) for comp in obj
    )
