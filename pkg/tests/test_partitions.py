from hypothesis import given, strategies as st

from schurify import partitions as P


def test_compositions():
    assert list(P.compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)] or \
        sorted(P.compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(P.compositions(3, 3))) == 10
    assert list(P.compositions(0, 2)) == [(0, 0)]


def test_partitions_of():
    assert set(P.partitions_of(4, 4)) == {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}
    assert P.partitions_of(3, 1) == ((3,),)
    assert P.partitions_of(0, 2) == ((),)


def test_conjugate():
    assert P.conjugate((3, 1)) == (2, 1, 1)
    assert P.conjugate(()) == ()


parts = st.lists(st.integers(1, 5), max_size=4).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


@given(parts)
def test_conjugate_involution(lam):
    assert P.conjugate(P.conjugate(lam)) == lam
    assert P.size(P.conjugate(lam)) == P.size(lam)


def test_gen_multipartitions_counts():
    # one color: plain partitions with at most n rows
    assert len(P.gen_multipartitions(2, 2, 0)) == 2
    assert len(P.gen_multipartitions(3, 3, 0)) == 3
    # two colors, n = d = 2
    labels = P.gen_multipartitions(2, 2, 1)
    assert len(labels) == 5
    assert set(labels) == {
        ((1, 1), ()), ((2,), ()), ((1,), (1,)), ((), (1, 1)), ((), (2,)),
    }


def test_order_properties():
    labels = P.gen_multipartitions(2, 2, 1)
    for lam in labels:
        assert P.leq(lam, lam)
    # antisymmetry on this label set
    for lam in labels:
        for mu in labels:
            if lam != mu:
                assert not (P.leq(lam, mu) and P.leq(mu, lam))
    # linear_key refines the order
    for lam in labels:
        for mu in labels:
            if P.leq(lam, mu) and lam != mu:
                assert P.linear_key(lam) < P.linear_key(mu)


def test_trim_pad():
    assert P.trim((2, 1, 0, 0)) == (2, 1)
    assert P.pad((2, 1), 4) == (2, 1, 0, 0)


def test_json_roundtrip():
    bold = ((2, 1), (), (1,))
    assert P.from_json(P.to_json(bold)) == bold
