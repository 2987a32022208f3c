import itertools
import json

import pytest

from sudanlist import (
    Codeword,
    FieldCtx,
    ParameterError,
    RSCode,
    UniPoly,
    corrupt,
    encode,
    hamming_distance,
    list_decode_code,
    ml_decode_bruteforce,
    tau_capability,
)
from sudanlist.codec import max_list_radius
from sudanlist.errors import BudgetExceeded

from oracles import plain_eval


def test_hamming_distance():
    # differs at indices 1 and 2
    assert hamming_distance("201", "222") == 2
    assert hamming_distance("201", "221") == 1
    assert hamming_distance((1, 2, 3), (1, 2, 3)) == 0
    assert hamming_distance([0] * 5, [1] * 5) == 5
    with pytest.raises(ValueError):
        hamming_distance("12", "123")


@pytest.mark.parametrize("p, d, want", [(31, 2, 14), (7, 6, 0), (7, 1, 2)])
def test_tau_capability(p, d, want):
    assert tau_capability(RSCode(FieldCtx(p), d)) == want


def test_code_parameters():
    code = RSCode(FieldCtx(7), 2)
    assert (code.n, code.k, code.delta) == (7, 3, 5)
    assert sorted(code.eval_points) == list(range(7))
    assert json.loads(code.descriptor()) == {"p": 7, "d": 2, "generator": 3}


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 31])
def test_eval_points_permutation(p):
    for order in ("generator", "natural"):
        assert sorted(RSCode(FieldCtx(p), 1 if p > 2 else 0, order).eval_points) == list(range(p))


def test_encode_examples(gf7):
    code = RSCode(gf7, 1)
    assert encode(code, UniPoly([], gf7)).symbols == (0,) * 7
    assert encode(code, UniPoly([4], gf7)).symbols == (4,) * 7
    assert code.eval_points == (0, 3, 2, 6, 4, 5, 1)
    assert encode(code, UniPoly([0, 1], gf7)).symbols == (0, 3, 2, 6, 4, 5, 1)
    nat = RSCode(gf7, 1, "natural")
    assert encode(nat, UniPoly([3, 2], gf7)).symbols == tuple(plain_eval([3, 2], x, 7) for x in range(7))


def test_encode_degree_too_large(gf7):
    with pytest.raises(ValueError):
        encode(RSCode(gf7, 1), UniPoly([0, 0, 1], gf7))


@pytest.mark.parametrize("p, d", [(p, d) for p in (2, 3, 5, 7) for d in range(3) if d < p])
def test_encode_injective_min_distance(p, d):
    F = FieldCtx(p)
    code = RSCode(F, d)
    words = [encode(code, UniPoly(c, F)) for c in itertools.product(range(p), repeat=d + 1)]
    assert len(set(words)) == p ** (d + 1)
    if len(words) > 1:
        assert min(hamming_distance(a, b) for a, b in itertools.combinations(words, 2)) == p - d


def test_corrupt(gf7):
    cw = encode(RSCode(gf7, 1), UniPoly([3, 2], gf7))
    same, pos = corrupt(cw, 0, seed=1)
    assert same == cw and pos == frozenset()
    for e in range(8):
        bad, pos = corrupt(cw, e, seed=e)
        assert len(pos) == e
        assert {i for i in range(7) if bad[i] != cw[i]} == pos
    assert corrupt(cw, 3, seed=99) == corrupt(cw, 3, seed=99)
    with pytest.raises(ValueError):
        corrupt(cw, 8, seed=0)


def test_corrupt_binary_flips_all():
    F = FieldCtx(2)
    cw = Codeword((0, 1), F)
    assert corrupt(cw, 2, seed=5)[0].symbols == (1, 0)


def test_ml_decode(gf7):
    code = RSCode(gf7, 1)
    sent = encode(code, UniPoly([3, 2], gf7))
    assert ml_decode_bruteforce(code, sent) == sent
    bad, _ = corrupt(sent, 2, seed=4)
    assert ml_decode_bruteforce(code, bad) == sent


def test_ml_tie_break():
    F = FieldCtx(2)
    code = RSCode(F, 0, "natural")
    assert ml_decode_bruteforce(code, Codeword((0, 1), F)).symbols == (0, 0)


def test_ml_budget(gf31):
    code = RSCode(gf31, 4)
    with pytest.raises(BudgetExceeded):
        ml_decode_bruteforce(code, Codeword((0,) * 31, gf31), budget=1000)


def test_list_decode_code_tau_zero(gf7):
    code = RSCode(gf7, 1)
    sent = encode(code, UniPoly([3, 2], gf7))
    assert list_decode_code(code, sent, 0) == [sent]
    bad, _ = corrupt(sent, 1, seed=0)
    assert list_decode_code(code, bad, 0) == []


def test_list_decode_code_radius(gf7):
    code = RSCode(gf7, 1)
    assert max_list_radius(code) == 3
    with pytest.raises(ParameterError, match="largest admissible radius 3"):
        list_decode_code(code, Codeword((0,) * 7, gf7), 4)


def test_list_decode_code_beyond_bound(gf31):
    code = RSCode(gf31, 2)
    sent = encode(code, UniPoly([5, 17, 2], gf31))
    bad, _ = corrupt(sent, 20, seed=12)
    assert tau_capability(code) == 14
    found = list_decode_code(code, bad, 20)
    assert sent in found
    assert all(hamming_distance(c, bad) <= 20 for c in found)


def test_unique_radius_consistency(gf7):
    code = RSCode(gf7, 1)
    for c in itertools.product(range(7), repeat=2):
        sent = encode(code, UniPoly(c, gf7))
        for e in range(3):
            bad, _ = corrupt(sent, e, seed=hash(c) + e)
            found = list_decode_code(code, bad, e)
            assert found == [sent] == [ml_decode_bruteforce(code, bad)]


def test_codeword_text(gf7):
    cw = Codeword((3, 5, 0), gf7)
    assert cw.to_text() == "3,5,0"
    assert Codeword.from_text("3,5,0", gf7) == cw
