import numpy as np
import pytest

from sparsedigraph import RandomStream


def test_same_seed_same_sequence():
    a = RandomStream(42)
    b = RandomStream(42)
    assert [a.next_float() for _ in range(100)] == [b.next_float() for _ in range(100)]


def test_different_seeds_differ():
    a = [RandomStream(1).next_float() for _ in range(8)]
    b = [RandomStream(2).next_float() for _ in range(8)]
    assert a != b


def test_floats_in_unit_interval():
    xs = RandomStream(7).float_block(10_000)
    assert xs.min() >= 0.0
    assert xs.max() < 1.0


def test_block_and_scalar_draws_share_one_sequence():
    """Batching must not change what callers see."""
    a = RandomStream(123)
    b = RandomStream(123)
    got = [a.next_float() for _ in range(3)]
    got.extend(a.float_block(5))
    got.append(a.next_float())
    want = b.float_block(9)
    assert np.allclose(got, want, rtol=0, atol=0)


def test_block_spanning_refill_boundary():
    a = RandomStream(9)
    b = RandomStream(9)
    a.float_block(8000)
    b.float_block(8000)
    # next block crosses the internal buffer edge
    assert np.array_equal(a.float_block(500), b.float_block(500))


def test_substream_zero_is_root():
    root = RandomStream(5)
    sub = RandomStream(5).substream(0)
    assert np.array_equal(root.float_block(32), sub.float_block(32))


def test_substreams_are_distinct():
    seqs = [tuple(RandomStream(5, stream=i).float_block(16)) for i in range(4)]
    assert len(set(seqs)) == 4


def test_substream_keyed_by_seed_and_index():
    assert np.array_equal(
        RandomStream(5).substream(3).float_block(16),
        RandomStream(5, stream=3).float_block(16),
    )


def test_huge_seed_reduced_not_rejected():
    s = RandomStream(2**70 + 11)
    x = s.next_float()
    assert 0.0 <= x < 1.0


@pytest.mark.parametrize("seed", [0, 1, 2**63, -1])
def test_repr_mentions_seed(seed):
    assert str(int(seed)) in repr(RandomStream(seed))
