import pytest

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.exactlin import Field, FieldConfig, LinearSystem, Term


def _matrix(rows, K):
    return el.from_entries(
        {(i, j): K.convert(v) for i, row in enumerate(rows) for j, v in enumerate(row)},
        (len(rows), len(rows[0])),
        K,
    )


def test_field_parsing():
    assert FieldConfig.parse("rational") == FieldConfig("rational")
    assert FieldConfig.parse("prime:3") == FieldConfig("prime", 3)
    assert FieldConfig.parse("prime 5") == FieldConfig("prime", 5)
    with pytest.raises(ValueError):
        FieldConfig.parse("real")
    with pytest.raises(ValueError):
        el.prime(4)


def test_scalars_and_formatting():
    Q = el.rational()
    assert Q.format(Q.parse("-3/6")) == "-1/2"
    assert Q.characteristic == 0
    F3 = Field.from_string("prime:3")
    assert F3.characteristic == 3
    assert F3.format(F3.parse("-1")) == "2"
    assert F3.format(F3.parse("1/2")) == "2"
    with pytest.raises(ValueError):
        F3.parse("1/3")
    with pytest.raises(ValueError):
        Q.parse("x")
    assert repr(F3) == "prime 3"


def test_kernel_image_rank_nullity():
    K = el.rational().domain
    M = _matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]], K)
    data = el.kernel_image(M)
    assert data.rank == 2
    assert data.kernel.shape == (3, 1)
    assert el.is_zero(M * data.kernel)
    assert data.rank + data.kernel.shape[1] == 3


def test_nullspace_over_prime_field():
    K = el.prime(2).domain
    M = _matrix([[1, 1], [1, 1]], K)
    kernel = el.nullspace(M)
    assert kernel.shape == (2, 1)
    assert el.is_zero(M * kernel)


def test_solve_and_factorization():
    K = el.rational().domain
    A = _matrix([[1, 0], [0, 2], [1, 1]], K)
    X = _matrix([[3], [-1]], K)
    result = el.solve_factorization(A * X, A)
    assert result.exists
    assert el.equal(result.witness, X)
    assert result.freedom == 0

    inconsistent = _matrix([[1], [0], [0]], K)
    assert not el.solve_factorization(inconsistent, A).exists

    right = el.solve_factorization(X.transpose() * A.transpose(), A.transpose(), side="right")
    assert right.exists
    assert el.equal(right.witness * A.transpose(), X.transpose() * A.transpose())


def test_quotient_and_section_split():
    K = el.rational().domain
    incl = _matrix([[1], [1], [0]], K)
    q = el.quotient_and_section(incl)
    assert q.space.dim == 2
    assert el.is_zero(q.projection * incl)
    assert el.is_identity(q.projection * q.section)
    assert el.is_identity(q.retraction * incl)
    total = incl * q.retraction + q.section * q.projection
    assert el.is_identity(total)


def test_quotient_rejects_dependent_columns():
    K = el.rational().domain
    with pytest.raises(ValueError):
        el.quotient_and_section(_matrix([[1, 2], [1, 2]], K))


def test_kron_index_convention():
    K = el.rational().domain
    A = _matrix([[1, 2]], K)
    B = _matrix([[0], [1]], K)
    # (i, j) -> i * dim W + j
    assert el.equal(el.kron(A, B), _matrix([[0, 0], [1, 2]], K))


def test_permute_factors_swaps_tensor_factors():
    K = el.rational().domain
    u = _matrix([[1], [0]], K)
    v = _matrix([[0], [0], [1]], K)
    swap = el.permute_factors([2, 3], [1, 0], K)
    assert el.equal(swap * el.kron(u, v), el.kron(v, u))

    cycle = el.permute_factors([2, 2, 3], [2, 0, 1], K)
    w = _matrix([[0], [1]], K)
    assert el.equal(cycle * el.kron_all(u, w, v), el.kron_all(v, u, w))


def test_modulo_and_preimage():
    K = el.rational().domain
    target = _matrix([[1], [1], [0]], K)
    Q = el.modulo(target)
    assert Q.shape == (2, 3)
    assert el.is_zero(Q * target)
    f = _matrix([[1, 0], [1, 0], [0, 1]], K)
    pre = el.preimage(f, target)
    assert pre.shape == (2, 1)
    assert el.contains(target, f * pre)


def test_linear_system_with_right_identity_term():
    K = el.rational().domain
    d = 2
    R = el.identity(4, K)
    system = LinearSystem(K).unknown("X", 2, 2)
    system.equation([Term("X", right=R, op="right_id", d=d)], rhs=R)
    solution, freedom = system.solve()
    assert solution is not None
    assert freedom == 0
    assert el.is_identity(solution["X"])


def test_inverse_and_contains():
    K = el.rational().domain
    M = _matrix([[2, 1], [1, 1]], K)
    assert el.is_identity(M * el.inverse(M))
    with pytest.raises(ValueError):
        el.inverse(_matrix([[1, 1], [1, 1]], K))
    assert el.contains(M, _matrix([[5], [3]], K))
    assert el.same_span(M, el.identity(2, K))
    assert el.inverse(el.zeros(0, 0, K)).shape == (0, 0)
