import itertools

import pytest
from hypothesis import given, settings, strategies as st

from helpers import lr_brute, multi_lr_brute, ssyt_count
from schurify import characters as ch
from schurify.base_algebra import make_algebra
from schurify.partitions import (
    compositions,
    conjugate,
    gen_multipartitions,
    partitions_of,
)
from schurify.rings import GF, GradedSuperScalar
from schurify.schur import build_schur


def test_kostka_examples():
    assert ch.kostka((2, 1), (2, 1)) == 1
    assert ch.kostka((2, 1), (1, 1, 1)) == 2
    assert ch.kostka((1, 1), (2,)) == 0
    assert ch.kostka((3, 2, 1), (2, 2, 1, 1)) == ssyt_count((3, 2, 1), (2, 2, 1, 1))


def test_kostka_against_enumeration():
    for lam in partitions_of(5, 5):
        for mu in compositions(5, 3):
            assert ch.kostka(lam, mu) == ssyt_count(lam, mu), (lam, mu)


parts5 = st.integers(1, 5).flatmap(
    lambda k: st.sampled_from(partitions_of(k, k))
)


@settings(max_examples=40, deadline=None)
@given(parts5, st.permutations(range(4)))
def test_kostka_weight_permutation_invariance(lam, perm):
    base = tuple([sum(lam) - len(lam) + 1] + [1] * (len(lam) - 1)) if lam else ()
    mus = [mu for mu in compositions(sum(lam), 4)]
    for mu in mus[:6]:
        permuted = tuple(mu[p] for p in perm)
        assert ch.kostka(lam, mu) == ch.kostka(lam, permuted)


def test_lr_examples():
    assert ch.lr_coeff((2, 1), [(2, 1)]) == 1
    assert ch.lr_coeff((2, 1), [(2, 1), ()]) == 1
    assert ch.lr_coeff((2, 1), [(1,), (1,), (1,)]) == 2
    assert ch.lr_coeff((2, 2), [(2, 1), (1,)]) == 1
    assert ch.lr_coeff((3, 2, 1), [(2, 1), (2, 1)]) == 2
    with pytest.raises(ValueError):
        ch.lr_coeff((2, 1), [(1,)])


def test_lr_twists_conjugate():
    # an odd twist transposes the factor before composing
    assert ch.lr_coeff((1, 1), [(2,)], twists=[1]) == 1
    assert ch.lr_coeff((2,), [(2,)], twists=[1]) == 0
    assert ch.lr_coeff((2, 1), [(2,), (1,)], twists=[1, 0]) == \
        ch.lr_coeff((2, 1), [(1, 1), (1,)])


def test_lr_factor_order_symmetry():
    for lam in partitions_of(5, 5):
        for a in partitions_of(2, 2):
            for b in partitions_of(3, 3):
                assert ch.lr_coeff(lam, [a, b]) == ch.lr_coeff(lam, [b, a])


def test_lr_against_brute_force():
    for total in range(1, 6):
        for lam in partitions_of(total, total):
            for k1 in range(1, total + 1):
                for mu in partitions_of(k1, k1):
                    for nu in partitions_of(total - k1, total - k1):
                        assert ch.lr_coeff(lam, [mu, nu]) == lr_brute(lam, mu, nu), \
                            (lam, mu, nu)


def test_lr_max_rows_truncation():
    # a factor needing more than max_rows contributes zero
    assert ch.lr_coeff((1, 1, 1), [(1, 1, 1)], max_rows=2) == 0
    assert ch.lr_coeff((1, 1), [(1, 1)], max_rows=2) == 1


def test_lr_cache_roundtrip(tmp_path):
    cache = ch.LRCache(str(tmp_path / "lr.jsonl"))
    v = cache.coeff((2, 1), [(1,), (1,), (1,)])
    assert v == 2
    cache2 = ch.LRCache(str(tmp_path / "lr.jsonl"))
    assert cache2.coeff((2, 1), [(1,), (1,), (1,)]) == 2


def test_schur_char_weights():
    s = ch.schur_char((2, 1), 3)
    # dimension of the classical Weyl module (2,1) for GL_3 is 8
    total = 0
    for w, c in s.items():
        assert c[(0, 0)] >= 0
        total += c[(0, 0)]
    assert total == 8
    assert s[(2, 1, 0)] == GradedSuperScalar.one()
    assert s[(1, 1, 1)] == GradedSuperScalar.term(2)


def test_skew_char_lmac():
    """s^eps_{lam/mu} = sum_nu c^lam_{mu, nu^eps} s_nu, exactly."""
    n = 5
    for total in range(1, 6):
        for lam in partitions_of(total, total):
            subs = {()} | {
                m for k in range(1, total + 1) for m in partitions_of(k, k)
            }
            for mu in subs:
                if len(mu) > len(lam) or any(
                    m > l for m, l in zip(mu, lam)
                ):
                    continue
                for eps in (0, 1):
                    lhs = ch.skew_char(lam, mu, eps, n)
                    rhs = ch.CharacterVector()
                    rest = total - sum(mu)
                    for nu in partitions_of(rest, rest):
                        c = ch.lr_coeff(lam, [mu, nu], twists=[0, eps])
                        if c:
                            rhs = rhs + ch.schur_char(nu, n).scale(c)
                    assert lhs == rhs, (lam, mu, eps)


def test_char_standard_trivial_base():
    alg, data, tau = make_algebra("trivial")
    T = build_schur(alg, data, 3, 3, tau)
    for lam in partitions_of(3, 3):
        v = ch.char_standard(T, ((lam),) if isinstance(lam[0], tuple) else (lam,))
        expected = ch.CharacterVector(
            {(w,): c for w, c in ch.schur_char(lam, 3).items()}
        )
        assert v == expected, lam


def test_char_standard_zigzag_example(zz1):
    alg, data, tau = zz1
    T = build_schur(alg, data, 1, 1, tau)
    v = ch.char_standard(T, ((), (1,)))
    assert v[((0,), (1,))] == GradedSuperScalar.one()
    assert v[((1,), (0,))] == GradedSuperScalar.term(1, 1, 1)
    assert len(list(v.items())) == 2


def test_char_methods_agree_33(zz1):
    alg, data, tau = zz1
    T = build_schur(alg, data, 3, 3, tau)
    for lam in gen_multipartitions(3, 3, 1):
        a = ch.char_standard_tableaux(T, lam)
        b = ch.char_standard_formula(T, lam)
        assert a == b, lam


def test_char_requires_basic():
    alg, data, tau = make_algebra("semisimple:2")
    # semisimple base is basic; build a non-basic one by hand is out of scope,
    # but the zigzag-bar data is not strictly based and must be refused
    from schurify.base_algebra import make_zigzag_bar

    trunc, tau2 = make_zigzag_bar(1)
    with pytest.raises(ValueError):
        ch.DecompInput.from_base(trunc.algebra, trunc.data)


def test_ematrix_f2():
    """s_lam = sum_mu d^cl_{lam,mu} sbar_mu over F_2 at n = d = 2."""
    alg, data, tau = make_algebra("trivial")
    T = build_schur(alg, data, 2, 2, tau)
    D = ch.decomp_oracle(T, GF(2))
    # sbar comes from the oracle's irreducible characters
    sbar = {
        mu: ch.char_irreducible(T, mu, GF(2)) for mu in D.labels
    }
    for lam in D.labels:
        lhs = ch.char_standard_tableaux(T, lam)
        rhs = ch.CharacterVector()
        for mu in D.labels:
            e = D.entry(lam, mu)
            if e:
                assert e[(0, 0)] == e.coeffs.get((0, 0), 0)
                rhs = rhs + sbar[mu].scale(e)
        assert lhs == rhs, lam
