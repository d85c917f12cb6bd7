import random

import pytest
import sympy

from e510.scalars import Q
from e510.linalg import Echelon, MatrixTooLargeError, kernel_basis, rank_of


def test_kernel_hand_example():
    rows = [{0: Q(1), 1: Q(2)}, {0: Q(2), 1: Q(4)}]
    ker = kernel_basis(rows, [0, 1])
    assert ker == [{0: Q(1), 1: Q(-1, 2)}]


def test_kernel_full_rank():
    rows = [{0: Q(1)}, {1: Q(3)}, {2: Q(-2)}]
    assert kernel_basis(rows, [0, 1, 2]) == []


def test_kernel_zero_map():
    ker = kernel_basis([], ["a", "b"])
    assert ker == [{"a": Q(1)}, {"b": Q(1)}]


def test_kernel_matches_sympy_on_random_matrices():
    rng = random.Random(11)
    for _ in range(30):
        m = rng.randrange(1, 7)
        n = rng.randrange(1, 7)
        dense = [[rng.randint(-3, 3) if rng.random() < 0.6 else 0
                  for _ in range(n)] for _ in range(m)]
        rows = [{j: Q(v) for j, v in enumerate(r) if v} for r in dense]
        ker = kernel_basis(rows, list(range(n)))
        sym = sympy.Matrix(dense)
        assert len(ker) == n - sym.rank()
        for vec in ker:
            img = [sum(r.get(j, Q(0)) * vec.get(j, Q(0)) for j in range(n))
                   for r in rows]
            assert all(x == 0 for x in img)
        # normalization contract: leading coordinate is 1
        for vec in ker:
            first = min(vec)
            assert vec[first] == 1


def test_kernel_deterministic():
    rng = random.Random(5)
    dense = [[rng.randint(-4, 4) for _ in range(8)] for _ in range(5)]
    rows = [{j: Q(v) for j, v in enumerate(r) if v} for r in dense]
    a = kernel_basis([dict(r) for r in rows], list(range(8)))
    b = kernel_basis([dict(r) for r in reversed(rows)], list(range(8)))
    assert a == b


def test_entry_cap():
    rows = [{j: Q(1) for j in range(10)} for _ in range(10)]
    with pytest.raises(MatrixTooLargeError):
        kernel_basis(rows, list(range(10)), entry_cap=50)


def test_rank_of():
    rows = [{0: Q(1), 1: Q(1)}, {1: Q(1), 2: Q(1)}, {0: Q(1), 2: Q(-1)}]
    assert rank_of(rows, [0, 1, 2]) == 2


def test_echelon_coords():
    ech = Echelon()
    v0 = {0: Q(1), 1: Q(1)}
    v1 = {1: Q(2)}
    assert ech.insert(v0, "a")
    assert ech.insert(v1, "b")
    assert not ech.insert({0: Q(3), 1: Q(5)}, "c")  # 3a + b
    combo = ech.coords({0: Q(3), 1: Q(5)})
    assert combo == {"a": Q(3), "b": Q(1)}
    assert ech.coords({2: Q(1)}) is None
    assert ech.contains({0: Q(-1), 1: Q(-1)})
    assert not ech.contains({0: Q(1), 2: Q(1)})


def test_echelon_coords_random():
    rng = random.Random(3)
    for _ in range(10):
        ech = Echelon()
        members = []
        for t in range(6):
            vec = {j: Q(rng.randint(-3, 3)) for j in range(5)}
            vec = {k: v for k, v in vec.items() if v}
            if vec and ech.insert(vec, t):
                members.append((t, vec))
        coeffs = {t: Q(rng.randint(-2, 2)) for t, _ in members}
        target = {}
        for t, vec in members:
            for k, v in vec.items():
                s = target.get(k, Q(0)) + coeffs[t] * v
                if s:
                    target[k] = s
                else:
                    target.pop(k, None)
        combo = ech.coords(target)
        assert combo is not None
        full = {t: combo.get(t, Q(0)) for t, _ in members}
        assert full == {t: c for t, c in coeffs.items()}
