import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wdpatch.exact import Matrix, NotNilpotent, Scalar
from wdpatch.groups import GroupRep, irreducibles, named_group, prime_index_normal_subgroups
from wdpatch.symplectic import N1, N3, classify_nilpotent, in_lie_algebra
from wdpatch.weil_deligne import (
    SL2Parameter,
    WDError,
    WDPair,
    WeightError,
    WeilModel,
    commutant,
    eigenvalue_weights,
    frobenius_semisimplify,
    graded_frobenius,
    is_indecomposable,
    local_base_change,
    monodromy_filtration,
    purity_check,
    q_half_power,
    semisimple_part,
    steinberg_parameter,
    wd_from_parameter,
)

PARTITIONS = [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1), (3,), (2, 1), (1,)]
ALPHAS = [Scalar(1), Scalar(-1), Scalar(2), Scalar.zeta(3), Scalar.zeta(4) * 3, Scalar(1) / 2]


def unramified(alphas, partition, q):
    return wd_from_parameter(SL2Parameter.unramified(alphas, list(partition), q))


def diagonal(F):
    return [F[i, i] for i in range(F.rows)]


# --- construction -----------------------------------------------------------


def test_trivial_sl2_part():
    w = unramified([2, 3], (1, 1), 5)
    assert w.N.is_zero()
    assert w.frobenius == Matrix.diag([2, 3])


def test_steinberg_on_gl4():
    q = 3
    alpha = Scalar.zeta(4)
    w = unramified([alpha], (4,), q)
    expected = [alpha * q_half_power(q, k) for k in (-3, -1, 1, 3)]
    assert diagonal(w.frobenius) == expected
    assert w.N.rank() == 3


def test_inertia_type_times_s2():
    w = steinberg_parameter("klingen_st", 3)
    assert w.N.rank() == 2
    assert in_lie_algebra(w.N)
    assert classify_nilpotent(w.N)[0].label == "N2"


def test_malformed_partition():
    with pytest.raises(WDError):
        SL2Parameter.unramified([1, 1], [2, 0], 3)
    with pytest.raises(WDError):
        SL2Parameter.unramified([1], [2, 2], 3)


def test_pair_validation():
    model = WeilModel.unramified(3)
    with pytest.raises(WDError):
        WDPair(model, Matrix.identity(2), N=Matrix.unit(2, 0, 1))
    with pytest.raises(NotNilpotent):
        WDPair(model, Matrix.identity(2), N=Matrix.identity(2))
    with pytest.raises(WDError):
        WDPair(model, Matrix.zeros(2))
    # a Frobenius that does not respect the inertia action
    C3 = named_group("Z3")
    inversion = WeilModel(C3, [C3.inv(a) for a in range(3)], 3, tame_generator=1)
    chi = GroupRep.from_linear_character(C3, {a: Scalar.zeta(3, a) for a in range(3)})
    with pytest.raises(WDError):
        WDPair(inversion, Matrix.identity(1), chi)


@settings(max_examples=40)
@given(st.sampled_from(PARTITIONS), st.sampled_from([2, 3, 5]), st.data())
def test_commutation_relation(lam, q, data):
    alphas = [data.draw(st.sampled_from(ALPHAS)) for _ in lam]
    w = unramified(alphas, lam, q)
    assert w.N @ w.frobenius == w.frobenius @ w.N * q
    assert w.N.rank() == sum(d - 1 for d in lam)


# --- semisimplification -----------------------------------------------------


def test_semisimplify_examples():
    w = unramified([2, 3], (1, 1), 5)
    assert frobenius_semisimplify(w).frobenius == w.frobenius
    model = WeilModel.unramified(7)
    u = WDPair(model, Matrix([[1, 1], [0, 1]]))
    assert frobenius_semisimplify(u).frobenius == Matrix.identity(2)


def test_semisimple_part_of_mixed_matrix():
    F = Matrix([[2, 1, 0], [0, 2, 0], [0, 0, -1]])
    S = semisimple_part(F)
    assert S == Matrix.diag([2, 2, -1])
    assert (F - S) @ (F - S) == Matrix.zeros(3)


@st.composite
def glued_pairs(draw):
    q = draw(st.sampled_from([2, 3, 5]))
    a = draw(st.sampled_from(ALPHAS))
    w = unramified([a, a], (2, 2), q)
    t = draw(st.integers(-3, 3).filter(bool))
    U = Matrix.identity(4) + Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]]) * t
    P = Matrix([[1, draw(st.integers(-2, 2)), 0, 0], [0, 1, 0, 0], [0, 0, 1, 0],
                [draw(st.integers(-2, 2)), 0, 0, 1]])
    return WDPair(w.model, w.frobenius @ U, w.inertia, w.N).conjugate(P)


@settings(max_examples=15)
@given(glued_pairs())
def test_semisimplify_properties(w):
    s = frobenius_semisimplify(w)
    s.validate()
    assert frobenius_semisimplify(s) == s
    assert s.N == w.N
    D = w.frobenius - s.frobenius
    assert not D.is_zero()
    assert (D @ D).is_zero() or (D ** 4).is_zero()
    assert D @ s.frobenius == s.frobenius @ D


def test_semisimplify_commutes_with_direct_sum():
    model = WeilModel.unramified(3)
    a = WDPair(model, Matrix([[1, 1], [0, 1]]))
    b = WDPair(model, Matrix([[2, 0], [1, 2]]))
    lhs = frobenius_semisimplify(a.direct_sum(b))
    rhs = frobenius_semisimplify(a).direct_sum(frobenius_semisimplify(b))
    assert lhs == rhs


# --- monodromy filtration and purity ------------------------------------------


def test_filtration_examples():
    assert monodromy_filtration(Matrix.zeros(4)).graded_dims() == {0: 4}
    assert monodromy_filtration(N3).graded_dims() == {-3: 1, -1: 1, 1: 1, 3: 1}
    assert monodromy_filtration(N1).graded_dims() == {-1: 1, 0: 2, 1: 1}
    with pytest.raises(NotNilpotent):
        monodromy_filtration(Matrix.identity(2))


@given(st.sampled_from(PARTITIONS + [(3, 2), (2, 2, 1), (5,)]))
def test_filtration_properties(lam):
    from wdpatch.exact import in_span, jordan_blocks

    N = jordan_blocks(lam)
    filt = monodromy_filtration(N)
    dims = filt.graded_dims()
    for k, d in dims.items():
        assert dims.get(-k) == d
        lower = filt.piece(k - 2)
        for v in filt.piece(k):
            image = N.apply(v)
            assert all(x.is_zero() for x in image) or in_span(image, lower)
    assert sum(dims.values()) == sum(lam)


def test_purity_examples():
    q = 3
    pure = unramified([q, Scalar(-q), Scalar.zeta(5) * q], (1, 1, 1), q)
    assert purity_check(pure, 2)
    assert not purity_check(pure, 0)
    st4 = steinberg_parameter("gsp4_steinberg", q, twist=q_half_power(q, 3))
    assert sorted(eigenvalue_weights(st4.frobenius, q)) == [0, 2, 4, 6]
    assert purity_check(st4, 3)
    assert set(graded_frobenius(st4)) == {-3, -1, 1, 3}
    mixed = unramified([1, q], (1, 1), q)
    assert not any(purity_check(mixed, w) for w in range(-4, 5))


def test_weight_undeterminable():
    with pytest.raises(WeightError):
        eigenvalue_weights(Matrix([[5]]), 3)
    bad = unramified([5], (1,), 3)
    with pytest.raises(WeightError):
        purity_check(bad, 0)


# --- base change, indecomposability, Steinberg ---------------------------------


def test_unramified_base_change():
    w = unramified([Scalar.zeta(3)], (1,), 5)
    bc = local_base_change(w)
    assert bc.q == 25
    assert bc.frobenius == Matrix([[Scalar.zeta(3, 2)]])
    for q in (2, 3):
        alpha = Scalar(-2)
        st_bc = local_base_change(steinberg_parameter("gsp4_steinberg", q, twist=alpha))
        target = steinberg_parameter("gsp4_steinberg", q * q, twist=alpha * alpha)
        assert st_bc.frobenius == target.frobenius and st_bc.N == target.N


@given(st.sampled_from(PARTITIONS), st.data())
def test_base_change_squares_eigenvalues(lam, data):
    alphas = [data.draw(st.sampled_from(ALPHAS)) for _ in lam]
    w = unramified(alphas, lam, 3)
    bc = local_base_change(w)
    assert diagonal(bc.frobenius) == [x * x for x in diagonal(w.frobenius)]


def test_ramified_base_change_splits_induced_type():
    from wdpatch.groups import conjugate_character, is_irreducible, linear_characters

    S3 = named_group("S3")
    A3 = next(h for h, p in prime_index_normal_subgroups(S3) if p == 2)
    model = WeilModel(S3, list(range(6)), 3)
    std = irreducibles(S3)[2]
    w = WDPair(model, Matrix.identity(2) * 2, std)
    bc = local_base_change(w, kind="ramified", subgroup=A3)
    assert not is_irreducible(bc.inertia)
    theta = next(g for g in range(6) if g not in A3.member_set)
    psi = next(c for c in linear_characters(A3) if c(A3.members[1]) != Scalar(1))
    assert bc.inertia.character == psi + conjugate_character(psi, theta)
    with pytest.raises(WDError):
        local_base_change(w, kind="ramified", subgroup=S3.whole())
    with pytest.raises(WDError):
        local_base_change(w, kind="biquadratic")


def test_indecomposability():
    assert is_indecomposable(steinberg_parameter("gsp4_steinberg", 3))
    assert not is_indecomposable(unramified([1, 2], (1, 1), 3))
    assert is_indecomposable(steinberg_parameter("klingen_st", 5))
    assert len(commutant(unramified([1, 2], (1, 1), 3))) == 2


def test_steinberg_parameters():
    st3 = steinberg_parameter("gsp4_steinberg", 3)
    assert st3.N.rank() == 3 and in_lie_algebra(st3.N)
    assert steinberg_parameter("klingen_st", 3).N.rank() == 2
    alpha = Scalar.zeta(6)
    tw = steinberg_parameter("gsp4_steinberg", 3, twist=alpha)
    assert tw.frobenius == st3.frobenius * alpha and tw.N == st3.N
    with pytest.raises(WDError):
        steinberg_parameter("siegel", 3)
    with pytest.raises(WDError):
        steinberg_parameter("gsp4_steinberg", 1)
