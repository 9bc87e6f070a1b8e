from schurify.partitions import gen_multipartitions
from schurify.rsk import rsk, rsk_inv
from schurify.tableaux import (
    enumerate_tableaux,
    from_json,
    is_standard,
    shape_of,
    tableau_weight,
    to_json,
)


def test_rsk_roundtrip_all_orbits(T122):
    for orbit in T122.orbits:
        bold, S, Tb = rsk(T122.ctx, orbit)
        assert shape_of(S) == bold == shape_of(Tb)
        assert is_standard(S, T122.ctx.x_alphabet)
        assert is_standard(Tb, T122.ctx.y_alphabet)
        assert rsk_inv(T122.ctx, S, Tb) == orbit


def test_rsk_counts(T122):
    """rank = sum over shapes of |Std^X| * |Std^Y|."""
    total = 0
    for bold in gen_multipartitions(2, 2, 1):
        nx = len(enumerate_tableaux(bold, T122.ctx.x_alphabet, "STD"))
        ny = len(enumerate_tableaux(bold, T122.ctx.y_alphabet, "STD"))
        total += nx * ny
    assert total == T122.rank == 202


def test_rsk_injective(T122):
    seen = set()
    for orbit in T122.orbits:
        key = rsk(T122.ctx, orbit)
        assert key not in seen
        seen.add(key)


def test_enumerate_modes(T122):
    bold = ((1, 1), ())
    std = enumerate_tableaux(bold, T122.ctx.x_alphabet, "STD")
    row = enumerate_tableaux(bold, T122.ctx.x_alphabet, "RST")
    assert set(std) <= set(row)
    for t in std:
        assert is_standard(t, T122.ctx.x_alphabet)


def test_tableau_weight(T122):
    bold = ((2,), ())
    for t in enumerate_tableaux(bold, T122.ctx.x_alphabet, "STD"):
        w = tableau_weight(t, T122.ctx.x_alphabet)
        assert sum(sum(c) for c in w) == 2


def test_tableau_json_roundtrip(T122):
    for bold in (((2,), ()), ((1,), (1,))):
        for t in enumerate_tableaux(bold, T122.ctx.x_alphabet, "STD"):
            assert from_json(to_json(t)) == t
