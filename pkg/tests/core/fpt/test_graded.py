import pytest

from src.core.errors import PreconditionError
from src.core.fpt import Block, build_remark_basis, remark_basis
from src.core.fpt.graded import blocks_met, members_mask, witness
from src.core.fpt.linalg import all_vectors


def test_blocks_of_the_smallest_case():
    basis = remark_basis(2, 2, 2, 8)
    assert basis.blocks == [Block(offset=0, width=2), Block(offset=2, width=6)]


def test_three_blocks():
    basis = remark_basis(2, 2, 3, 10)
    assert [(b.offset, b.width) for b in basis.blocks] == [(0, 2), (2, 2), (4, 6)]


def test_membership():
    basis = remark_basis(2, 2, 2, 8)
    assert basis.member([1, 1, 0, 0, 0, 0, 0, 0])
    assert basis.member([0, 0, 1, 0, 0, 0, 0, 1])
    assert basis.member([0] * 8)
    assert not basis.member([1, 0, 1, 0, 0, 0, 0, 0])
    assert not basis.member([1, 1])


def test_members_mask_matches_member():
    basis = remark_basis(3, 1, 2, 4)
    vectors = all_vectors(3, 4)
    mask = members_mask(basis, vectors)
    assert mask.tolist() == [basis.member(v.tolist()) for v in vectors]


def test_build_is_exhaustive_when_small():
    report = build_remark_basis(2, 2, 2, 8, samples=10, seed=1)
    assert report.order == 2
    assert report.exhaustive
    assert report.checked == 10 + 2**8
    assert report.witness == [1, 0, 1, 0, 0, 0, 0, 0]


def test_build_samples_when_large():
    report = build_remark_basis(2, 1, 2, 21, samples=50, seed=1)
    assert not report.exhaustive
    assert report.checked == 50


def test_witness_meets_every_block():
    basis = remark_basis(3, 2, 3, 9)
    assert blocks_met(basis, witness(basis)) == 3


@pytest.mark.parametrize(
    "p, r, h, D",
    [
        (2, 2, 2, 5),
        (4, 1, 2, 6),
        (2, 1, 1, 6),
        (2, 0, 2, 6),
    ],
)
def test_rejects_bad_parameters(p, r, h, D):
    with pytest.raises(PreconditionError):
        remark_basis(p, r, h, D)
