import itertools
import subprocess
import sys
from math import gcd

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from orbibundle.linalg import AbelianGroup, smith_normal_form, subquotient
from orbibundle.linalg import f2
from orbibundle.linalg import smith as smith_mod
from orbibundle.linalg.intmat import det, matmul

small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def matrices(draw, max_dim=5):
    m = draw(st.integers(min_value=1, max_value=max_dim))
    n = draw(st.integers(min_value=1, max_value=max_dim))
    return draw(st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=m, max_size=m))


def determinantal_factors(a):
    """Invariant factors from gcds of k x k minors (sympy determinants)."""
    m, n = len(a), len(a[0])
    M = sympy.Matrix(a)
    d = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = gcd(g, int(M.extract(list(rows), list(cols)).det()))
        if g == 0:
            break
        d.append(g)
    return [d[i] // d[i - 1] for i in range(1, len(d))]


@pytest.mark.parametrize(
    "a, factors, rank",
    [
        ([[2, 0], [0, 2]], [2, 2], 2),
        ([[1, 2], [3, 4]], [1, 2], 2),
        ([[0, 0, 0], [0, 0, 0]], [], 0),
        ([[6, 4], [4, 6]], [2, 10], 2),
    ],
)
def test_snf_examples(a, factors, rank):
    s = smith_normal_form(a)
    assert s.invariant_factors == factors
    assert s.rank == rank


def _check_form(a, s):
    m, n = len(a), len(a[0])
    assert matmul(matmul(s.U, a), s.V) == s.S
    assert abs(det(s.U)) == 1 and abs(det(s.V)) == 1
    assert matmul(s.U, s.Uinv) == [[int(i == j) for j in range(m)] for i in range(m)]
    for i in range(m):
        for j in range(n):
            if i != j:
                assert s.S[i][j] == 0
    d = s.diagonal
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_snf_reconstruction_and_unimodularity(a):
    _check_form(a, smith_normal_form(a))


@settings(max_examples=150, deadline=None)
@given(matrices(max_dim=4))
def test_snf_matches_determinantal_divisors(a):
    assert smith_normal_form(a).invariant_factors == determinantal_factors(a)


@pytest.mark.skipif(smith_mod._smith_core is None, reason="compiled kernel not built")
@settings(max_examples=300, deadline=None)
@given(matrices(max_dim=6))
def test_compiled_matches_python(a):
    c = smith_normal_form(a, backend="compiled")
    p = smith_normal_form(a, backend="python")
    assert c.S == p.S
    _check_form(a, c)


@pytest.mark.skipif(smith_mod._smith_core is None, reason="compiled kernel not built")
def test_compiled_falls_back_on_overflow():
    big = [[2**70, 3], [5, 2**65]]
    s = smith_normal_form(big, backend="compiled")
    _check_form(big, s)
    assert s.invariant_factors == determinantal_factors(big)


def test_kernel_basis():
    a = [[1, 2, 3], [2, 4, 6]]
    ker = smith_normal_form(a).kernel_basis()
    assert len(ker) == 2
    for v in ker:
        assert all(sum(r[i] * v[i] for i in range(3)) == 0 for r in a)


def test_abelian_group_canonical_form():
    g = AbelianGroup.from_orders(1, [6, 4])
    assert g.invariant_factors == (2, 12)
    assert str(g) == "Z + Z/2 + Z/12"
    assert str(AbelianGroup.elementary(2, 3)) == "(Z/2)^3"
    assert str(AbelianGroup()) == "0"
    assert AbelianGroup(0, (2, 4)).rank_mod(2) == 2
    assert AbelianGroup.cokernel([[2, 0], [0, 3]], 2) == AbelianGroup(0, (6,))
    assert AbelianGroup(2, (2,)).to_dict() == {"free_rank": 2, "torsion": [2]}


def test_subquotient():
    # ker([1 1]) / <(2,-2)>  =  Z(1,-1) / 2  =  Z/2
    sq = subquotient(2, constraint=[[1, 1]], image=[[2, -2]])
    assert sq.group == AbelianGroup(0, (2,))
    # {x : x1 + x2 in 2Z} / 0 has rank 2
    sq = subquotient(2, constraint=[[1, 1]], constraint_relations=[[2]])
    assert sq.group == AbelianGroup(2)


def test_f2_routines():
    rows = [[1, 1, 0], [0, 1, 1]]
    assert f2.rank(rows, 3) == 2
    ns = f2.nullspace(rows, 3)
    assert ns == [[1, 1, 1]]
    x = f2.solve(rows, [1, 0], 3)
    assert f2.matvec(rows, x) == [1, 0]
    assert f2.solve([[1, 1], [1, 1]], [1, 0], 2) is None
    assert f2.coordinates([[1, 0, 1], [0, 1, 1]], [1, 1, 0]) == [1, 1]


def test_python_fallback_selected_without_extension():
    code = (
        "import sys; sys.modules['orbibundle.linalg._smith_core'] = None\n"
        "from orbibundle.linalg import smith, smith_normal_form\n"
        "assert smith._smith_core is None and smith.BACKEND == 'python'\n"
        "assert smith_normal_form([[6, 4], [4, 6]]).invariant_factors == [2, 10]\n"
    )
    subprocess.run([sys.executable, "-c", code], check=True)
