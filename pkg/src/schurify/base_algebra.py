"""Based quasi-hereditary graded superalgebras: presentations, built-in
constructors, axiom verification, standard modules, idempotent truncation.

An algebra is given by structure constants kappa over Z on a finite labelled
basis.  Heredity data attaches a poset I, sets X(i), Y(i) of basis labels and
initial idempotents e_i; the products x*y must sweep out the basis bijectively
(each x*y is required to be a single basis label with coefficient 1 - true for
every built-in and for the JSON presentation format).

The verification driver is written against a small protocol (basis, mul_basis,
degree, parity) so the same checks run on the Schur algebras built downstream,
where products are computed lazily and the change-of-basis work is blocked by
conserved weights.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Mapping, Sequence

from .rings import QQ, CoefficientRing

Elem = dict[str, int]


def elem_add(x: Mapping[str, int], y: Mapping[str, int], c: int = 1) -> Elem:
    out = dict(x)
    for b, v in y.items():
        out[b] = out.get(b, 0) + c * v
        if not out[b]:
            del out[b]
    return out


def elem_scale(x: Mapping[str, int], c) -> Elem:
    return {b: c * v for b, v in x.items()} if c else {}


class BasedSuperalgebra:
    """Finite-dimensional graded superalgebra with integral structure constants."""

    def __init__(
        self,
        basis: Sequence[str],
        kappa: Mapping[tuple[str, str], Mapping[str, int]],
        degree: Mapping[str, int],
        parity: Mapping[str, int],
        unit: Mapping[str, int] | None = None,
        validate: bool = True,
    ):
        self.basis = tuple(basis)
        self.kappa = {k: {b: int(c) for b, c in v.items() if c} for k, v in kappa.items()}
        self.kappa = {k: v for k, v in self.kappa.items() if v}
        self.degree = dict(degree)
        self.parity = {b: p % 2 for b, p in parity.items()}
        self.unit = dict(unit) if unit is not None else None
        if validate:
            self._validate()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def mul_basis(self, a: str, c: str) -> Elem:
        return self.kappa.get((a, c), {})

    def multiply(self, x: Mapping[str, int], y: Mapping[str, int]) -> Elem:
        out: Elem = {}
        for a, ca in x.items():
            for c, cc in y.items():
                for b, k in self.mul_basis(a, c).items():
                    out[b] = out.get(b, 0) + ca * cc * k
        return {b: v for b, v in out.items() if v}

    def _validate(self) -> None:
        bset = set(self.basis)
        if len(bset) != len(self.basis):
            raise ValueError("duplicate basis labels")
        for b in self.basis:
            if b not in self.degree or b not in self.parity:
                raise ValueError(f"missing degree/parity for {b!r}")
        for (a, c), out in self.kappa.items():
            if a not in bset or c not in bset or any(b not in bset for b in out):
                raise ValueError(f"kappa entry {(a, c)} mentions unknown labels")
            for b in out:
                if self.degree[b] != self.degree[a] + self.degree[c]:
                    raise ValueError(f"kappa breaks grading at {(a, c)} -> {b}")
                if self.parity[b] != (self.parity[a] + self.parity[c]) % 2:
                    raise ValueError(f"kappa breaks parity at {(a, c)} -> {b}")
        if self.dim <= 16:
            for a in self.basis:
                for b in self.basis:
                    ab = self.mul_basis(a, b)
                    for c in self.basis:
                        left = self.multiply(ab, {c: 1})
                        right = self.multiply({a: 1}, self.mul_basis(b, c))
                        if left != right:
                            raise ValueError(f"kappa not associative at ({a},{b},{c})")
        if self.unit is not None:
            for b in self.basis:
                if self.multiply(self.unit, {b: 1}) != {b: 1} or self.multiply({b: 1}, self.unit) != {b: 1}:
                    raise ValueError(f"declared unit fails on {b!r}")

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "basis": list(self.basis),
            "kappa": [
                {"a": a, "c": c, "out": dict(out)} for (a, c), out in sorted(self.kappa.items())
            ],
            "degree": dict(self.degree),
            "parity": dict(self.parity),
            **({"unit": self.unit} if self.unit is not None else {}),
        }


@dataclass(frozen=True)
class HeredityData:
    """Poset I with X(i), Y(i) and initial idempotents e_i.

    `labels` lists I in the fixed total order refining the partial order;
    `strictly_less` holds the pairs (i, j) with i < j in the partial order.
    """

    labels: tuple[int, ...]
    strictly_less: frozenset[tuple[int, int]]
    X: dict[int, tuple[str, ...]]
    Y: dict[int, tuple[str, ...]]
    e: dict[int, str]

    def lt(self, i: int, j: int) -> bool:
        return (i, j) in self.strictly_less

    def leq(self, i: int, j: int) -> bool:
        return i == j or self.lt(i, j)

    def coideal_above(self, i: int) -> frozenset[int]:
        return frozenset(j for j in self.labels if self.lt(i, j))

    def to_json(self) -> dict:
        return {
            "order": sorted(list(p) for p in self.strictly_less),
            "labels": list(self.labels),
            "X": {str(i): list(v) for i, v in self.X.items()},
            "Y": {str(i): list(v) for i, v in self.Y.items()},
            "e": {str(i): v for i, v in self.e.items()},
        }


@dataclass(frozen=True)
class AntiInvolution:
    """Homogeneous anti-involution given by its permutation of the basis."""

    image: dict[str, str]

    def apply_label(self, b: str) -> str:
        return self.image[b]

    def apply(self, x: Mapping[str, int]) -> Elem:
        return {self.image[b]: c for b, c in x.items()}

    def is_standard(self, data: HeredityData) -> bool:
        for i in data.labels:
            if self.image[data.e[i]] != data.e[i]:
                return False
            if sorted(self.image[x] for x in data.X[i]) != sorted(data.Y[i]):
                return False
        return True


def strict_pairs(alg, data: HeredityData) -> tuple[dict[str, tuple[int, str, str]], dict]:
    """The bijection basis label <-> b^i_{x,y}, requiring each x*y to be a
    single basis label with coefficient 1.  Raises if the presentation does not
    have this exact form."""
    of_label: dict[str, tuple[int, str, str]] = {}
    for i in data.labels:
        for x in data.X[i]:
            for y in data.Y[i]:
                prod = alg.mul_basis(x, y)
                if len(prod) != 1 or next(iter(prod.values())) != 1:
                    raise ValueError(f"x*y for ({i},{x},{y}) is not a single basis label: {prod}")
                b = next(iter(prod))
                if b in of_label:
                    raise ValueError(f"pair map not injective at {b!r}")
                of_label[b] = (i, x, y)
    if set(of_label) != set(alg.basis):
        missing = set(alg.basis) - set(of_label)
        raise ValueError(f"heredity pairs do not sweep the basis; missing {sorted(missing)}")
    to_label = {v: k for k, v in of_label.items()}
    return of_label, to_label


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass
class HeredityReport:
    ok: bool
    failures: list[str] = field(default_factory=list)
    checked: list[str] = field(default_factory=list)

    def fail(self, axiom: str, witness: str) -> None:
        self.ok = False
        self.failures.append(f"{axiom}: {witness}")


class _PairBasisSolver:
    """Expresses elements in the heredity pair basis {x*y}, blockwise.

    Columns are pairs (i, x, y); rows are basis labels.  Columns and rows are
    grouped by a conserved block key (degree, parity, plus anything the caller
    adds); each block is LU-factored exactly over Q.  Also reports whether the
    global change of basis is unimodular over Z.
    """

    def __init__(self, alg, data: HeredityData, row_key: Callable[[str], Hashable] | None = None):
        self.alg = alg
        self.data = data
        self.row_key = row_key or (lambda b: (alg.degree[b], alg.parity[b]))
        self.blocks: dict[Hashable, dict] = {}
        self.square = True
        self.unimodular = True
        self.singular_witness: str | None = None
        self._build()

    def _build(self) -> None:
        alg, data = self.alg, self.data
        cols: dict[Hashable, list[tuple[tuple[int, str, str], dict[str, int]]]] = {}
        rows: dict[Hashable, list[str]] = {}
        for b in alg.basis:
            rows.setdefault(self.row_key(b), []).append(b)
        for i in data.labels:
            for x in data.X[i]:
                for y in data.Y[i]:
                    v = alg.mul_basis(x, y)
                    if not v:
                        self.square = False
                        self.singular_witness = f"x*y = 0 for ({i},{x},{y})"
                        continue
                    keys = {self.row_key(b) for b in v}
                    if len(keys) != 1:
                        raise ValueError(f"pair ({i},{x},{y}) spreads across blocks {keys}")
                    cols.setdefault(keys.pop(), []).append(((i, x, y), dict(v)))
        for key in rows:
            col_list = cols.get(key, [])
            row_list = rows[key]
            if len(col_list) != len(row_list):
                self.square = False
                self.singular_witness = (
                    f"block {key}: {len(col_list)} pairs vs {len(row_list)} basis elements"
                )
                continue
            self.blocks[key] = self._factor_block(row_list, col_list)

    def _factor_block(self, row_list: list[str], col_list: list) -> dict:
        n = len(row_list)
        ridx = {b: k for k, b in enumerate(row_list)}
        mat = [[Fraction(0)] * n for _ in range(n)]
        for j, (_pair, v) in enumerate(col_list):
            for b, c in v.items():
                mat[ridx[b]][j] = Fraction(c)
        # exact LU with partial pivoting by row swaps; determinant tracked
        lu = [row[:] for row in mat]
        perm = list(range(n))
        det = Fraction(1)
        for k in range(n):
            piv = next((r for r in range(k, n) if lu[r][k] != 0), None)
            if piv is None:
                det = Fraction(0)
                break
            if piv != k:
                lu[k], lu[piv] = lu[piv], lu[k]
                perm[k], perm[piv] = perm[piv], perm[k]
                det = -det
            det *= lu[k][k]
            for r in range(k + 1, n):
                if lu[r][k]:
                    f = lu[r][k] / lu[k][k]
                    lu[r][k] = f
                    for cc in range(k + 1, n):
                        lu[r][cc] -= f * lu[k][cc]
        if det == 0:
            self.square = False
            self.singular_witness = f"singular block with rows {row_list}"
        elif abs(det) != 1:
            self.unimodular = False
        return {"rows": row_list, "ridx": ridx, "cols": [p for p, _v in col_list],
                "lu": lu, "perm": perm, "det": det, "n": n}

    def solve(self, v: Mapping[str, int]) -> dict[tuple[int, str, str], Fraction]:
        """Expand an element in the pair basis; exact."""
        out: dict[tuple[int, str, str], Fraction] = {}
        by_block: dict[Hashable, dict[str, int]] = {}
        for b, c in v.items():
            by_block.setdefault(self.row_key(b), {})[b] = c
        for key, part in by_block.items():
            blk = self.blocks.get(key)
            if blk is None or blk["det"] == 0:
                raise ValueError(f"cannot solve: singular/missing block {key}")
            n, lu, perm, ridx = blk["n"], blk["lu"], blk["perm"], blk["ridx"]
            rhs = [Fraction(0)] * n
            for b, c in part.items():
                rhs[ridx[b]] = Fraction(c)
            permuted = [rhs[perm[k]] for k in range(n)]
            y = [Fraction(0)] * n
            for k in range(n):
                acc = permuted[k]
                for j in range(k):
                    acc -= lu[k][j] * y[j]
                y[k] = acc
            x = [Fraction(0)] * n
            for k in range(n - 1, -1, -1):
                acc = y[k]
                for j in range(k + 1, n):
                    acc -= lu[k][j] * x[j]
                x[k] = acc / lu[k][k]
            for j, c in enumerate(x):
                if c:
                    out[blk["cols"][j]] = c
        return out


def verify_heredity(
    alg,
    data: HeredityData,
    *,
    row_key: Callable[[str], Hashable] | None = None,
    left_mult_pairs: Callable[[], list[tuple[str, int, str]]] | None = None,
    right_mult_pairs: Callable[[], list[tuple[str, int, str]]] | None = None,
    check_conforming: bool = True,
) -> HeredityReport:
    """Check the heredity axioms (a), (b), (c), the f table, and conformity.

    `alg` only needs basis / mul_basis / degree / parity.  `left_mult_pairs`
    may restrict the (a, i, x) triples checked for axiom (b) to those that can
    be nonzero (the caller must guarantee the rest vanish); by default all
    combinations are checked.
    """
    report = HeredityReport(ok=True)

    try:
        of_label, _to_label = strict_pairs(alg, data)
    except ValueError as exc:
        report.fail("axiom (a)", str(exc))
        return report

    solver = _PairBasisSolver(alg, data, row_key)
    if not solver.square:
        report.fail("axiom (a)", solver.singular_witness or "pair matrix singular")
        return report
    report.checked.append("axiom (a): pair basis invertible"
                          + (" (unimodular over Z)" if solver.unimodular else ""))

    # axiom (c): idempotent absorption
    for i in data.labels:
        ei = data.e[i]
        if ei not in data.X[i] or ei not in data.Y[i]:
            report.fail("axiom (c)", f"e_{i} not in X({i}) and Y({i})")
        for x in data.X[i]:
            if alg.mul_basis(x, ei) != {x: 1}:
                report.fail("axiom (c)", f"x*e_i != x for ({i},{x})")
            want = {x: 1} if x == ei else {}
            if alg.mul_basis(ei, x) != want:
                report.fail("axiom (c)", f"e_i*x wrong for ({i},{x})")
            for j in data.labels:
                p = alg.mul_basis(data.e[j], x)
                if p not in ({x: 1}, {}):
                    report.fail("axiom (c)", f"e_{j}*x not in {{x,0}} for ({i},{x})")
        for y in data.Y[i]:
            if alg.mul_basis(ei, y) != {y: 1}:
                report.fail("axiom (c)", f"e_i*y != y for ({i},{y})")
            want = {y: 1} if y == ei else {}
            if alg.mul_basis(y, ei) != want:
                report.fail("axiom (c)", f"y*e_i wrong for ({i},{y})")
            for j in data.labels:
                p = alg.mul_basis(y, data.e[j])
                if p not in ({y: 1}, {}):
                    report.fail("axiom (c)", f"y*e_{j} not in {{y,0}} for ({i},{y})")
    if report.ok:
        report.checked.append("axiom (c): idempotent absorption")

    def support_ok(expansion, i: int, side: str) -> tuple[bool, str]:
        """Support must lie in B(j) for j>i, plus pairs (i, x', e_i) [left] or
        (i, e_i, y') [right]."""
        for (j, x, y), c in expansion.items():
            if c == 0:
                continue
            if data.lt(i, j):
                continue
            if j != i:
                return False, f"component B({j}) with {i} not < {j}"
            if side == "left" and y != data.e[i]:
                return False, f"pair ({j},{x},{y}) not of the form x'*e_i"
            if side == "right" and x != data.e[i]:
                return False, f"pair ({j},{x},{y}) not of the form e_i*y'"
        return True, ""

    # axiom (b)
    if left_mult_pairs is None:
        lpairs = [(a, i, x) for a in alg.basis for i in data.labels for x in data.X[i]]
    else:
        lpairs = left_mult_pairs()
    for a, i, x in lpairs:
        prod = alg.mul_basis(a, x)
        if not prod:
            continue
        ok, why = support_ok(solver.solve(prod), i, "left")
        if not ok:
            report.fail("axiom (b)", f"a*x for ({a},{i},{x}): {why}")
    if right_mult_pairs is None:
        rpairs = [(a, i, y) for a in alg.basis for i in data.labels for y in data.Y[i]]
    else:
        rpairs = right_mult_pairs()
    for a, i, y in rpairs:
        prod = alg.mul_basis(y, a)
        if not prod:
            continue
        ok, why = support_ok(solver.solve(prod), i, "right")
        if not ok:
            report.fail("axiom (b)", f"y*a for ({a},{i},{y}): {why}")
    if report.ok:
        report.checked.append("axiom (b): X(i)/Y(i) span modulo higher ideals")

    # f table: y*x = f_i(y,x) e_i mod A^{>i}, with degree/parity constraints
    for i in data.labels:
        for x in data.X[i]:
            for y in data.Y[i]:
                prod = alg.mul_basis(y, x)
                f = Fraction(0)
                if prod:
                    for (j, xx, yy), c in solver.solve(prod).items():
                        if data.lt(i, j):
                            continue
                        if (j, xx, yy) == (i, data.e[i], data.e[i]):
                            f = c
                        elif c:
                            report.fail("f table", f"y*x for ({i},{x},{y}) has stray pair ({j},{xx},{yy})")
                if x == data.e[i] and y == data.e[i] and f != 1:
                    report.fail("f table", f"f_{i}(e,e) = {f} != 1")
                hom_trivial = (alg.degree[x] + alg.degree[y] == 0
                               and (alg.parity[x] + alg.parity[y]) % 2 == 0)
                if f != 0 and not hom_trivial:
                    report.fail("f table", f"f_{i}({y},{x}) nonzero in nonzero degree/parity")
    if report.ok:
        report.checked.append("f table: pairing shape")

    # conformity: even strata form heredity data for the even subalgebra
    if check_conforming:
        even_labels = [b for b in alg.basis
                       if alg.parity[of_label[b][1]] == 0 and alg.parity[of_label[b][2]] == 0]
        closed = True
        for a in even_labels:
            for c in even_labels:
                if any(b not in even_labels for b in alg.mul_basis(a, c)):
                    closed = False
                    report.fail("conforming", f"even subalgebra not closed at ({a},{c})")
        if closed:
            sub_idx = set(even_labels)

            class _Sub:
                basis = tuple(even_labels)
                degree = alg.degree
                parity = alg.parity

                @staticmethod
                def mul_basis(a, c):
                    out = alg.mul_basis(a, c)
                    return out if all(b in sub_idx for b in out) else {}

            sub_data = HeredityData(
                labels=data.labels,
                strictly_less=data.strictly_less,
                X={i: tuple(x for x in data.X[i] if alg.parity[x] == 0) for i in data.labels},
                Y={i: tuple(y for y in data.Y[i] if alg.parity[y] == 0) for i in data.labels},
                e=dict(data.e),
            )
            sub_report = verify_heredity(_Sub, sub_data, check_conforming=False)
            if not sub_report.ok:
                for msg in sub_report.failures:
                    report.fail("conforming", msg)
        if report.ok:
            report.checked.append("conforming: even strata are heredity data for a")

    return report


# ---------------------------------------------------------------------------
# basis strata  B = B_a | B_c | B_1
# ---------------------------------------------------------------------------

def basis_strata(alg: BasedSuperalgebra, data: HeredityData) -> tuple[set[str], set[str], set[str]]:
    """(B_a, B_c, B_odd): even*even pairs, odd*odd pairs, mixed pairs."""
    of_label, _ = strict_pairs(alg, data)
    Ba, Bc, B1 = set(), set(), set()
    for b, (_i, x, y) in of_label.items():
        px, py = alg.parity[x], alg.parity[y]
        if px == 0 and py == 0:
            Ba.add(b)
        elif px == 1 and py == 1:
            Bc.add(b)
        else:
            B1.add(b)
    return Ba, Bc, B1


# ---------------------------------------------------------------------------
# built-in algebras
# ---------------------------------------------------------------------------

def _chain(labels: Sequence[int]) -> frozenset[tuple[int, int]]:
    return frozenset((i, j) for i in labels for j in labels if i < j)


def make_extended_zigzag(ell: int) -> tuple[BasedSuperalgebra, HeredityData, AntiInvolution]:
    """Extended zigzag algebra on vertices 0..ell.

    a{i}_{j} is the arrow path from j to i (|i-j| = 1), c{j} the length-two
    cycle at j (j < ell); paths of length >= 3 vanish, non-cycle length-two
    paths vanish, the two cycles at a common vertex coincide, and the cycle at
    ell is zero.
    """
    if ell < 1:
        raise ValueError("need ell >= 1")
    labels = list(range(ell + 1))
    basis = [f"e{i}" for i in labels]
    arrows = []
    for j in range(ell):
        arrows += [(j, j + 1), (j + 1, j)]
    basis += [f"a{i}_{j}" for (i, j) in arrows]
    basis += [f"c{j}" for j in range(ell)]

    # (source, target) of each path
    st = {f"e{i}": (i, i) for i in labels}
    st.update({f"a{i}_{j}": (j, i) for (i, j) in arrows})
    st.update({f"c{j}": (j, j) for j in range(ell)})
    length = {b: (0 if b.startswith("e") else 1 if b.startswith("a") else 2) for b in basis}

    def compose(p: str, q: str) -> Elem:
        """Product p*q = path q then path p."""
        sq, tq = st[q]
        sp, tp = st[p]
        if tq != sp:
            return {}
        tot = length[p] + length[q]
        if tot > 2:
            return {}
        if length[p] == 0:
            return {q: 1}
        if length[q] == 0:
            return {p: 1}
        # two arrows: q goes sq -> tq, p goes tq -> tp
        if sq != tp:
            return {}  # non-cycle length-two path
        v = sq  # base vertex of the cycle
        return {f"c{v}": 1} if v < ell else {}

    kappa = {}
    for p in basis:
        for q in basis:
            out = compose(p, q)
            if out:
                kappa[(p, q)] = out
    alg = BasedSuperalgebra(
        basis,
        kappa,
        degree=length,
        parity={b: length[b] % 2 for b in basis},
        unit={f"e{i}": 1 for i in labels},
    )
    X = {0: ("e0",)}
    Y = {0: ("e0",)}
    for i in range(1, ell + 1):
        X[i] = (f"e{i}", f"a{i - 1}_{i}")
        Y[i] = (f"e{i}", f"a{i}_{i - 1}")
    data = HeredityData(
        labels=tuple(labels),
        strictly_less=_chain(labels),
        X=X,
        Y=Y,
        e={i: f"e{i}" for i in labels},
    )
    tau = AntiInvolution(
        image={**{f"e{i}": f"e{i}" for i in labels},
               **{f"a{i}_{j}": f"a{j}_{i}" for (i, j) in arrows},
               **{f"c{j}": f"c{j}" for j in range(ell)}}
    )
    return alg, data, tau


def make_trivial() -> tuple[BasedSuperalgebra, HeredityData, AntiInvolution]:
    """A = k: seeds the classical Schur algebra."""
    alg = BasedSuperalgebra(
        ["1"], {("1", "1"): {"1": 1}}, degree={"1": 0}, parity={"1": 0}, unit={"1": 1}
    )
    data = HeredityData(
        labels=(0,), strictly_less=frozenset(), X={0: ("1",)}, Y={0: ("1",)}, e={0: "1"}
    )
    return alg, data, AntiInvolution(image={"1": "1"})


def make_semisimple(m: int) -> tuple[BasedSuperalgebra, HeredityData, AntiInvolution]:
    """A = k^(+m): m orthogonal idempotents, discrete poset."""
    basis = [f"u{t}" for t in range(m)]
    alg = BasedSuperalgebra(
        basis,
        {(b, b): {b: 1} for b in basis},
        degree={b: 0 for b in basis},
        parity={b: 0 for b in basis},
        unit={b: 1 for b in basis},
    )
    data = HeredityData(
        labels=tuple(range(m)),
        strictly_less=frozenset(),
        X={t: (f"u{t}",) for t in range(m)},
        Y={t: (f"u{t}",) for t in range(m)},
        e={t: f"u{t}" for t in range(m)},
    )
    return alg, data, AntiInvolution(image={b: b for b in basis})


# ---------------------------------------------------------------------------
# standard modules and decomposition numbers of the base algebra
# ---------------------------------------------------------------------------

@dataclass
class StandardModuleBase:
    color: int
    x_basis: tuple[str, ...]
    y_basis: tuple[str, ...]
    # action[a][x] = dict over x' of l^x_{x'}(a)
    action: dict[str, dict[str, dict[str, Fraction]]]
    right_action: dict[str, dict[str, dict[str, Fraction]]]
    gram: list[list[Fraction]]  # gram[xi][yi] = f_i(y, x)


def standard_module_base(alg: BasedSuperalgebra, data: HeredityData, i: int) -> StandardModuleBase:
    solver = _PairBasisSolver(alg, data)
    if not solver.square:
        raise ValueError("heredity axiom (a) fails; verify first")
    Xi, Yi = data.X[i], data.Y[i]

    def project_left(prod: Mapping[str, int]) -> dict[str, Fraction]:
        out: dict[str, Fraction] = {}
        for (j, x, y), c in solver.solve(prod).items():
            if j == i and y == data.e[i]:
                out[x] = c
            elif not data.lt(i, j) and c:
                raise ValueError("axiom (b) violated; verify first")
        return out

    def project_right(prod: Mapping[str, int]) -> dict[str, Fraction]:
        out: dict[str, Fraction] = {}
        for (j, x, y), c in solver.solve(prod).items():
            if j == i and x == data.e[i]:
                out[y] = c
            elif not data.lt(i, j) and c:
                raise ValueError("axiom (b) violated; verify first")
        return out

    action = {a: {x: project_left(alg.mul_basis(a, x)) for x in Xi} for a in alg.basis}
    right_action = {a: {y: project_right(alg.mul_basis(y, a)) for y in Yi} for a in alg.basis}
    gram = []
    for x in Xi:
        row = []
        for y in Yi:
            f = Fraction(0)
            prod = alg.mul_basis(y, x)
            if prod:
                for (j, xx, yy), c in solver.solve(prod).items():
                    if (j, xx, yy) == (i, data.e[i], data.e[i]):
                        f = c
            row.append(f)
        gram.append(row)
    return StandardModuleBase(i, Xi, Yi, action, right_action, gram)


def base_decomp_numbers(alg: BasedSuperalgebra, data: HeredityData):
    """Graded decomposition matrix d_{i,j}(q, pi) for a basic algebra.

    For basic A (all simples one-dimensional, concentrated in degree 0), the
    multiplicity [Delta(i) : q^n pi^eps L(j)] is the graded dimension of
    e_j Delta(i), i.e. a sum over x in X(i) absorbed by e_j.
    """
    from .rings import GradedSuperScalar

    # basicness: the Gram pairing of each Delta(i) must have rank exactly 1,
    # concentrated on the (e_i, e_i) entry in degree 0.
    for i in data.labels:
        sm = standard_module_base(alg, data, i)
        nz = [(x, y) for xi, x in enumerate(sm.x_basis) for yi, y in enumerate(sm.y_basis)
              if sm.gram[xi][yi] != 0]
        if any(alg.degree[x] + alg.degree[y] != 0 for x, y in nz):
            raise ValueError(f"algebra not basic at i={i}: pairing not concentrated in degree 0")
    out: dict[tuple[int, int], GradedSuperScalar] = {}
    for i in data.labels:
        for j in data.labels:
            acc = GradedSuperScalar.zero()
            for x in data.X[i]:
                if alg.mul_basis(data.e[j], x) == {x: 1}:
                    acc = acc + GradedSuperScalar.term(1, alg.degree[x], alg.parity[x])
            if acc:
                out[(i, j)] = acc
    return out


# ---------------------------------------------------------------------------
# idempotent truncation
# ---------------------------------------------------------------------------

@dataclass
class Truncation:
    algebra: BasedSuperalgebra
    data: HeredityData
    kept_colors: frozenset[int]  # the e_i summed into the truncating idempotent
    adapted: bool
    strongly_adapted: bool
    I_bar: tuple[int, ...]
    I_bar_prime: tuple[int, ...]


def truncate_base(alg: BasedSuperalgebra, data: HeredityData, colors: Sequence[int]) -> Truncation:
    """Truncate by e = sum of the distinct initial idempotents e_i, i in colors."""
    colors = frozenset(colors)
    if not colors <= set(data.labels):
        raise ValueError("unknown colors in truncating idempotent")
    es = [data.e[i] for i in sorted(colors)]

    def absorb_left(b: str) -> bool:
        return any(alg.mul_basis(e, b) == {b: 1} for e in es)

    def absorb_right(b: str) -> bool:
        return any(alg.mul_basis(b, e) == {b: 1} for e in es)

    adapted = True
    for i in data.labels:
        for x in data.X[i]:
            sums = [alg.mul_basis(e, x) for e in es]
            tot: Elem = {}
            for s in sums:
                tot = elem_add(tot, s)
            if tot not in ({x: 1}, {}):
                adapted = False
        for y in data.Y[i]:
            tot = {}
            for e in es:
                tot = elem_add(tot, alg.mul_basis(y, e))
            if tot not in ({y: 1}, {}):
                adapted = False

    sub_basis = [b for b in alg.basis if absorb_left(b) and absorb_right(b)]
    keep = set(sub_basis)
    kappa = {
        (a, c): out
        for (a, c), out in alg.kappa.items()
        if a in keep and c in keep and all(b in keep for b in out)
    }
    # products of kept elements stay in the truncation automatically
    for a in sub_basis:
        for c in sub_basis:
            out = alg.mul_basis(a, c)
            if out and any(b not in keep for b in out):
                raise AssertionError("truncation not closed; adapted assumption broken")
    unit = {e: 1 for e in es}
    sub = BasedSuperalgebra(
        sub_basis, kappa,
        degree={b: alg.degree[b] for b in sub_basis},
        parity={b: alg.parity[b] for b in sub_basis},
        unit=unit,
    )
    Xb = {i: tuple(x for x in data.X[i] if absorb_left(x)) for i in data.labels}
    Yb = {i: tuple(y for y in data.Y[i] if absorb_right(y)) for i in data.labels}
    I_bar = tuple(i for i in data.labels if Xb[i] and Yb[i])
    strongly = adapted and all(i in colors for i in I_bar)
    sub_data = HeredityData(
        labels=I_bar,
        strictly_less=frozenset(p for p in data.strictly_less if p[0] in I_bar and p[1] in I_bar),
        X={i: Xb[i] for i in I_bar},
        Y={i: Yb[i] for i in I_bar},
        e={i: data.e[i] for i in I_bar if i in colors},
    )

    # surviving simples: i with y*x not in A^{>i} for some truncated pair,
    # detected through the pairing f_i over Q
    solver = _PairBasisSolver(alg, data)
    I_prime = []
    for i in I_bar:
        keep_i = False
        for x in Xb[i]:
            for y in Yb[i]:
                prod = alg.mul_basis(y, x)
                if not prod:
                    continue
                for (j, _xx, _yy), c in solver.solve(prod).items():
                    if not data.lt(i, j) and c:
                        keep_i = True
        if keep_i:
            I_prime.append(i)
    return Truncation(sub, sub_data, colors, adapted, strongly, I_bar, tuple(I_prime))


def make_zigzag_bar(ell: int) -> tuple[Truncation, AntiInvolution]:
    alg, data, tau = make_extended_zigzag(ell)
    trunc = truncate_base(alg, data, range(ell))
    sub_tau = AntiInvolution(image={b: tau.image[b] for b in trunc.algebra.basis})
    return trunc, sub_tau


# ---------------------------------------------------------------------------
# JSON presentation files
# ---------------------------------------------------------------------------

def load_presentation(obj: dict | str) -> tuple[BasedSuperalgebra, HeredityData]:
    if isinstance(obj, str):
        obj = json.loads(obj)
    alg = BasedSuperalgebra(
        obj["basis"],
        {(k["a"], k["c"]): k["out"] for k in obj["kappa"]},
        degree=obj["degree"],
        parity=obj["parity"],
        unit=obj.get("unit"),
    )
    h = obj["heredity"]
    labels = tuple(int(i) for i in h.get("labels", sorted(int(k) for k in h["e"])))
    data = HeredityData(
        labels=labels,
        strictly_less=frozenset((int(i), int(j)) for i, j in h["order"]),
        X={int(i): tuple(v) for i, v in h["X"].items()},
        Y={int(i): tuple(v) for i, v in h["Y"].items()},
        e={int(i): v for i, v in h["e"].items()},
    )
    return alg, data


def dump_presentation(alg: BasedSuperalgebra, data: HeredityData) -> dict:
    out = alg.to_json()
    out["heredity"] = data.to_json()
    return out


def make_algebra(spec: str):
    """Resolve a CLI algebra spec: zigzag:L | zigzag-bar:L | trivial | semisimple:m."""
    if spec == "trivial":
        return make_trivial()
    if spec.startswith("zigzag-bar:"):
        trunc, tau = make_zigzag_bar(int(spec.split(":", 1)[1]))
        return trunc.algebra, trunc.data, tau
    if spec.startswith("zigzag:"):
        return make_extended_zigzag(int(spec.split(":", 1)[1]))
    if spec.startswith("semisimple:"):
        return make_semisimple(int(spec.split(":", 1)[1]))
    raise ValueError(f"unknown algebra spec {spec!r}")
