import itertools
import math

import pytest

import blockdet


def brute_det(a):
    n = len(a)
    total = 0
    for p in itertools.permutations(range(n)):
        inversions = sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))
        total += (-1) ** inversions * math.prod(a[i][p[i]] for i in range(n))
    return total


def brute_per(a):
    n = len(a)
    return sum(math.prod(a[i][p[i]] for i in range(n)) for p in itertools.permutations(range(n)))


BOWTIE = blockdet.family_matrix("block-graph:3;3@0.0")


def test_bowtie():
    assert blockdet.det(BOWTIE) == brute_det(BOWTIE) == -4
    assert blockdet.per(BOWTIE) == brute_per(BOWTIE) == 4
    assert blockdet.det_bpartition(BOWTIE) == -4
    assert blockdet.per_bpartition(BOWTIE) == 4
    assert blockdet.block_count(BOWTIE) == 2
    assert blockdet.cut_vertices(BOWTIE) == [0]


def test_methods_agree_on_families():
    for text in ["complete:6", "cycle:7,-1", "neg-clique:5,2,2", "mixed-star:5,4", "unicyclic:5,1;t0,0"]:
        a = blockdet.family_matrix(text)
        want = brute_det(a) if len(a) <= 7 else blockdet.det(a)
        assert blockdet.det(a) == want
        assert blockdet.det_cycle_cover(a) == want
        assert blockdet.closed_form_det(text) == want


def test_big_values_are_python_ints():
    # per K_20 = D_20 is past 2^53, so no float could carry it.
    value = blockdet.per(blockdet.family_matrix("complete:20"))
    assert isinstance(value, int)
    d = [1, 0]
    for n in range(2, 21):
        d.append((n - 1) * (d[-1] + d[-2]))
    assert value == d[20]


def test_closed_form_values():
    assert blockdet.closed_form_det("neg-mixed-complete:6") == 28
    assert blockdet.closed_form_det("neg-mixed-star:5,5") == 66
    assert blockdet.closed_form_per("mixed-complete:5") is None


def test_balance():
    assert blockdet.is_balanced(blockdet.family_matrix("cycle:6,1"))
    assert not blockdet.is_balanced(blockdet.family_matrix("cycle:6,-1"))


def test_errors():
    with pytest.raises(blockdet.ParseError):
        blockdet.family_matrix("bogus:3")
    with pytest.raises(blockdet.PreconditionError):
        blockdet.per(blockdet.family_matrix("complete:21"))
    with pytest.raises(ValueError):
        blockdet.det([[1, 2], [3]])
