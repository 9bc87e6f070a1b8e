"""The generalized Schur algebra T^A_a(n, d) on the eta-orbit basis.

Elements are sparse integer combinations of canonical triple orbits.  Products
are evaluated through the structure-constant formula: arrangements of the two
factor orbits are matched on the middle letter word, multiplied position-wise
through the base-algebra structure constants with the super sign rule, and
only contributions landing on canonical representatives are collected.  The
d-fold tensor power of M_n(A) is never materialized.

All structure constants are integral on the eta lattice; a non-integral
coefficient aborts loudly (it would signal an implementation bug).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

from .base_algebra import AntiInvolution, BasedSuperalgebra, HeredityData
from .partitions import compositions, gen_multipartitions
from .triples import TriContext, TriLetter, TriWord

Element = dict[TriWord, int]


class SchurAlgebra:
    """T^A_a(n, d): canonical orbit index plus cached multiplication."""

    def __init__(
        self,
        alg: BasedSuperalgebra,
        data: HeredityData,
        n: int,
        d: int,
        tau: AntiInvolution | None = None,
        keep_basis: frozenset[str] | None = None,
        parent: "SchurAlgebra | None" = None,
    ):
        if n < 1 or d < 0:
            raise ValueError("need n >= 1, d >= 0")
        self.alg = alg
        self.data = data
        self.n = n
        self.d = d
        self.tau = tau
        self.keep_basis = keep_basis
        self.parent = parent
        self.ctx = parent.ctx if parent is not None else TriContext(alg, data, n)
        letters = self.ctx.all_letters()
        if keep_basis is not None:
            letters = [lt for lt in letters if lt[0] in keep_basis]
        self._letters = letters
        self.orbits: list[TriWord] = list(_multisets(letters, d, self.ctx))
        self.index = {o: k for k, o in enumerate(self.orbits)}
        self._arr_cache: dict[TriWord, list[tuple[TriWord, int]]] = {}
        self._mid_cache: dict[TriWord, dict[tuple[int, ...], list[tuple[TriWord, int]]]] = {}
        self._prod_cache: dict[tuple[TriWord, TriWord], Element] = {}
        self._profile_cache: dict[TriWord, tuple] = {}
        self._family: dict[int, SchurAlgebra] = {d: self}

    # -- family of degrees (for star products and coproducts) -------------
    def family(self, d: int) -> "SchurAlgebra":
        root = self.parent or self
        if d not in root._family:
            root._family[d] = SchurAlgebra(
                self.alg, self.data, self.n, d, self.tau, self.keep_basis, parent=root
            )
        return root._family[d]

    @property
    def rank(self) -> int:
        return len(self.orbits)

    # -- helpers -----------------------------------------------------------
    def profiles(self, orbit: TriWord):
        """(alpha, beta) idempotent weight profiles of an orbit."""
        if orbit not in self._profile_cache:
            self._profile_cache[orbit] = self.ctx.weight_profiles(orbit)
        return self._profile_cache[orbit]

    def _arrangements(self, orbit: TriWord) -> list[tuple[TriWord, int]]:
        if orbit not in self._arr_cache:
            ctx = self.ctx
            out = []
            for w in set(permutations(orbit)):
                out.append((w, -1 if ctx.triple_stat(w) else 1))
            self._arr_cache[orbit] = out
        return self._arr_cache[orbit]

    def _by_middle(self, orbit: TriWord) -> dict[tuple[int, ...], list[tuple[TriWord, int]]]:
        if orbit not in self._mid_cache:
            by: dict[tuple[int, ...], list[tuple[TriWord, int]]] = {}
            for w, sgn in self._arrangements(orbit):
                by.setdefault(tuple(r for (_b, r, _s) in w), []).append((w, sgn))
            self._mid_cache[orbit] = by
        return self._mid_cache[orbit]

    def _is_canonical(self, w: TriWord) -> bool:
        ctx = self.ctx
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if ctx.key(a) > ctx.key(b):
                return False
            if a == b and ctx.is_odd(a):
                return False
        return True

    # -- multiplication ----------------------------------------------------
    def mult_orbits(self, o1: TriWord, o2: TriWord) -> Element:
        """Structure constants: eta_{o1} * eta_{o2} as an integer Element."""
        key = (o1, o2)
        if key in self._prod_cache:
            return self._prod_cache[key]
        ctx = self.ctx
        d = self.d
        res: dict[TriWord, int] = {}
        if self.profiles(o1)[1] == self.profiles(o2)[0]:
            mul = self.alg.mul_basis
            by_mid = self._by_middle(o2)
            for w1, s1 in self._arrangements(o1):
                mid = tuple(s for (_b, _r, s) in w1)
                for w2, s2 in by_mid.get(mid, []):
                    sgn = s1 * s2 * (-1 if ctx.pair_stat(
                        tuple(b for (b, _r, _s) in w1), tuple(b for (b, _r, _s) in w2)
                    ) else 1)
                    factors = []
                    ok = True
                    for k in range(d):
                        f = mul(w1[k][0], w2[k][0])
                        if not f:
                            ok = False
                            break
                        factors.append(list(f.items()))
                    if not ok:
                        continue
                    for combo in product(*factors):
                        word = tuple(
                            (combo[k][0], w1[k][1], w2[k][2]) for k in range(d)
                        )
                        if not self._is_canonical(word):
                            continue
                        coeff = sgn
                        for (_b, c) in combo:
                            coeff *= c
                        res[word] = res.get(word, 0) + coeff
        # eta normalization: eta = [.]_c * xi
        m12 = ctx.factorial(o1, "c") * ctx.factorial(o2, "c")
        out: Element = {}
        for rep, f in res.items():
            if not f:
                continue
            num = f * m12
            den = ctx.factorial(rep, "c")
            if num % den:
                raise ArithmeticError(
                    f"non-integral eta structure constant {num}/{den} at {o1} * {o2} -> {rep}"
                )
            out[rep] = num // den
        self._prod_cache[key] = out
        return out

    def mul(self, x: Element, y: Element) -> Element:
        out: Element = {}
        for o1, c1 in x.items():
            for o2, c2 in y.items():
                if self.profiles(o1)[1] != self.profiles(o2)[0]:
                    continue
                for rep, f in self.mult_orbits(o1, o2).items():
                    out[rep] = out.get(rep, 0) + c1 * c2 * f
        return {k: v for k, v in out.items() if v}

    # -- linear structure --------------------------------------------------
    @staticmethod
    def add(x: Element, y: Element, c: int = 1) -> Element:
        out = dict(x)
        for k, v in y.items():
            out[k] = out.get(k, 0) + c * v
            if not out[k]:
                del out[k]
        return out

    def eta(self, word: TriWord) -> Element:
        """The eta basis element of an arbitrary admissible word, with sign."""
        rep, sign = self.ctx.canonicalize(word)
        if rep is None:
            return {}
        if rep not in self.index:
            raise ValueError(f"orbit {rep} not in this algebra")
        return {rep: sign}

    # -- distinguished elements -------------------------------------------
    def idempotent_bold(self, bold) -> Element:
        """e_lambda for a tuple of compositions (one per color)."""
        word = []
        for pos, comp in enumerate(bold):
            i = self.data.labels[pos]
            for r, width in enumerate(comp, start=1):
                word += [(self.data.e[i], r, r)] * width
        rep, sign = self.ctx.canonicalize(tuple(word), strict=True)
        assert sign == 1
        return {rep: 1}

    def idempotent_comp(self, lam: tuple[int, ...]) -> Element:
        """xi(lambda): the sum of e_mu over color refinements of the weight lambda."""
        ell = len(self.data.labels) - 1
        if len(lam) != self.n or sum(lam) != self.d:
            raise ValueError("lambda must be a weight in Lambda(n, d)")
        out: Element = {}
        splits_per_letter = [list(compositions(lr, ell + 1)) for lr in lam]
        for choice in product(*splits_per_letter):
            # choice[r-1][i] = number of color-i entries with letter r
            bold = tuple(
                tuple(choice[r][i] for r in range(self.n)) for i in range(ell + 1)
            )
            out = self.add(out, self.idempotent_bold(bold))
        return out

    def unit(self) -> Element:
        out: Element = {}
        for lam in compositions(self.d, self.n):
            out = self.add(out, self.idempotent_comp(lam))
        return out

    # -- star product ------------------------------------------------------
    def star(self, x: Element, y: Element, other: "SchurAlgebra") -> Element:
        """eta_x (degree self.d) star eta_y (degree other.d) in degree d1+d2."""
        target = self.family(self.d + other.d)
        ctx = target.ctx
        out: Element = {}
        for o1, c1 in x.items():
            for o2, c2 in y.items():
                cat = o1 + o2
                rep, sign = ctx.canonicalize(cat)
                if rep is None:
                    continue
                num = ctx.factorial(rep, "a")
                den = ctx.factorial(o1, "a") * ctx.factorial(o2, "a")
                assert num % den == 0
                out[rep] = out.get(rep, 0) + c1 * c2 * sign * (num // den)
        return {k: v for k, v in out.items() if v}

    # -- coproduct ---------------------------------------------------------
    def coproduct(self, x: Element, d1: int) -> dict[tuple[TriWord, TriWord], int]:
        """The (d1, d - d1) component of the coproduct, as a sparse tensor."""
        if not 0 <= d1 <= self.d:
            raise ValueError("invalid split degree")
        ctx = self.ctx
        out: dict[tuple[TriWord, TriWord], int] = {}
        for orbit, c in x.items():
            mults = list(ctx.multiplicities(orbit).items())
            fac_t = ctx.factorial(orbit, "c")
            for take in _sub_multisets(mults, d1):
                w1 = tuple(lt for lt, m in zip((lt for lt, _m in mults), take) for _ in range(m))
                rest = [m - t for (_lt, m), t in zip(mults, take)]
                w2 = tuple(lt for (lt, _m), m in zip(mults, rest) for _ in range(m))
                w = w1 + w2
                sign = -1 if ctx.triple_stat(w) else 1
                ratio = fac_t // (ctx.factorial(w1, "c") * ctx.factorial(w2, "c"))
                key = (w1, w2)
                out[key] = out.get(key, 0) + c * sign * ratio
        return {k: v for k, v in out.items() if v}

    # -- anti-involution ---------------------------------------------------
    def involution(self, x: Element) -> Element:
        if self.tau is None:
            raise ValueError("no anti-involution on the base algebra")
        if not self.tau.is_standard(self.data) and self.keep_basis is None:
            raise ValueError("anti-involution is not standard")
        out: Element = {}
        for orbit, c in x.items():
            word = tuple((self.tau.image[b], s, r) for (b, r, s) in orbit)
            rep, sign = self.ctx.canonicalize(word, strict=True)
            out[rep] = out.get(rep, 0) + c * sign
        return {k: v for k, v in out.items() if v}

    # -- truncation --------------------------------------------------------
    def truncate(self, colors) -> "SchurAlgebra":
        """xi^e T xi^e for e the sum of the initial idempotents in `colors`:
        the span of orbits all of whose basis letters survive the base
        truncation."""
        colors = frozenset(colors)
        es = [self.data.e[i] for i in sorted(colors)]
        keep = frozenset(
            b for b in self.alg.basis
            if any(self.alg.mul_basis(e, b) == {b: 1} for e in es)
            and any(self.alg.mul_basis(b, e) == {b: 1} for e in es)
        )
        return SchurAlgebra(self.alg, self.data, self.n, self.d, self.tau,
                            keep_basis=keep, parent=self)

    def truncation_idempotent(self, colors) -> Element:
        colors = frozenset(colors)
        out: Element = {}
        for lam in compositions(self.d, self.n):
            ell = len(self.data.labels) - 1
            splits = [list(compositions(lr, ell + 1)) for lr in lam]
            for choice in product(*splits):
                bold = tuple(tuple(choice[r][i] for r in range(self.n)) for i in range(ell + 1))
                if all(sum(comp) == 0 for pos, comp in enumerate(bold)
                       if self.data.labels[pos] not in colors):
                    out = self.add(out, self.idempotent_bold(bold))
        return out

    # -- serialization -----------------------------------------------------
    def element_to_json(self, x: Element) -> list:
        return [
            {"orbit": TriContext.to_json(o), "coeff": str(c)}
            for o, c in sorted(x.items(), key=lambda kv: self.index[kv[0]])
        ]

    def element_from_json(self, obj: list) -> Element:
        return {TriContext.from_json(e["orbit"]): int(e["coeff"]) for e in obj}


def _multisets(letters: list[TriLetter], d: int, ctx: TriContext):
    """Admissible sorted multisets of size d over the (sorted) letter list."""

    def rec(start: int, left: int, acc: list[TriLetter]):
        if left == 0:
            yield tuple(acc)
            return
        for k in range(start, len(letters)):
            lt = letters[k]
            max_rep = 1 if ctx.is_odd(lt) else left
            for m in range(1, max_rep + 1):
                yield from rec(k + 1, left - m, acc + [lt] * m)

    yield from rec(0, d, [])


def _sub_multisets(mults: list[tuple[TriLetter, int]], size: int):
    """All ways of taking `size` elements from a multiset, as count vectors."""

    def rec(k: int, left: int, acc: list[int]):
        if k == len(mults):
            if left == 0:
                yield tuple(acc)
            return
        m = mults[k][1]
        for t in range(min(m, left), -1, -1):
            yield from rec(k + 1, left - t, acc + [t])

    yield from rec(0, size, [])


# ---------------------------------------------------------------------------
# field reductions
# ---------------------------------------------------------------------------

def reduce_element(x: Element, ring) -> dict:
    """Map an integral element into a coefficient ring."""
    out = {}
    for k, v in x.items():
        r = ring.of(v)
        if not ring.is_zero(r):
            out[k] = r
    return out


def build_schur(alg, data, n: int, d: int, tau=None) -> SchurAlgebra:
    return SchurAlgebra(alg, data, n, d, tau)
