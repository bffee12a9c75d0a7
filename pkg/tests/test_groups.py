import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wdpatch.exact import Matrix, Scalar
from wdpatch.groups import (
    LIBRARY,
    FiniteGroup,
    GroupError,
    GroupRep,
    RepError,
    Subgroup,
    all_extensions,
    bilinear_form_type,
    conjugate_character,
    conjugate_rep,
    decompose,
    direct_sum,
    extend_invariant_irrep,
    frobenius_schur,
    induce,
    inner_product,
    intertwiner,
    irreducibles,
    is_irreducible,
    linear_characters,
    named_group,
    prime_index_normal_subgroups,
    quotient_characters,
    restrict,
)

# Brute-force counts from the multiplication tables: order, number of
# conjugacy classes, element orders, and the degrees of the irreducibles.
GROUP_FACTS = {
    "Z2": (2, 2, {1: 1, 2: 1}, [1, 1]),
    "Z3": (3, 3, {1: 1, 3: 2}, [1, 1, 1]),
    "Z4": (4, 4, {1: 1, 2: 1, 4: 2}, [1, 1, 1, 1]),
    "Z6": (6, 6, {1: 1, 2: 1, 3: 2, 6: 2}, [1] * 6),
    "V4": (4, 4, {1: 1, 2: 3}, [1, 1, 1, 1]),
    "Z4xZ2": (8, 8, {1: 1, 2: 3, 4: 4}, [1] * 8),
    "S3": (6, 3, {1: 1, 2: 3, 3: 2}, [1, 1, 2]),
    "D4": (8, 5, {1: 1, 2: 5, 4: 2}, [1, 1, 1, 1, 2]),
    "Q8": (8, 5, {1: 1, 2: 1, 4: 6}, [1, 1, 1, 1, 2]),
    "A4": (12, 4, {1: 1, 2: 3, 3: 8}, [1, 1, 1, 3]),
    "D6": (12, 6, {1: 1, 2: 7, 3: 2, 6: 2}, [1, 1, 1, 1, 2, 2]),
    "Dic12": (12, 6, {1: 1, 2: 1, 3: 2, 4: 6, 6: 2}, [1, 1, 1, 1, 2, 2]),
    "S4": (24, 5, {1: 1, 2: 9, 3: 8, 4: 6}, [1, 1, 2, 3, 3]),
}

NAMES = sorted(LIBRARY)


def _trivial_char(G):
    return GroupRep.trivial(G.whole()).character


@pytest.mark.parametrize("name", NAMES)
def test_library_matches_brute_force(name):
    G = named_group(name)
    order, classes, orders, degrees = GROUP_FACTS[name]
    assert G.order == order
    assert len(G.conjugacy_classes) == classes
    counts = {}
    for x in range(G.order):
        counts[G.element_order(x)] = counts.get(G.element_order(x), 0) + 1
    assert counts == orders
    assert sorted(r.dim for r in irreducibles(G)) == degrees


@pytest.mark.parametrize("name", NAMES)
def test_irreducibles_are_orthonormal_homomorphisms(name):
    G = named_group(name)
    irr = irreducibles(G)
    for r in irr:
        r.full_check()
    for i, a in enumerate(irr):
        for j, b in enumerate(irr):
            assert inner_product(a, b) == Scalar(int(i == j))
    assert decompose(GroupRep.regular(G), irr) == [r.dim for r in irr]


def test_table_validation():
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(GroupError):
        named_group("nope")
    S3 = named_group("S3")
    with pytest.raises(GroupError):
        Subgroup(S3, [0, 1])


def test_inner_product_examples():
    S3 = named_group("S3")
    triv, std = irreducibles(S3)[1], irreducibles(S3)[2]
    assert inner_product(triv, triv) == Scalar(1)
    assert std.dim == 2 and inner_product(std, std) == Scalar(1)
    assert inner_product(GroupRep.regular(S3), triv) == Scalar(1)
    with pytest.raises(RepError):
        inner_product(triv, irreducibles(named_group("Z2"))[0])


def test_is_irreducible_examples():
    V4 = named_group("V4")
    a, b = irreducibles(V4)[:2]
    assert is_irreducible(a)
    assert not is_irreducible(direct_sum([a, b]))
    Q8 = named_group("Q8")
    two = [r for r in irreducibles(Q8) if r.dim == 2]
    assert len(two) == 1 and is_irreducible(two[0])


def _s3_pieces():
    S3 = named_group("S3")
    A3 = next(h for h, p in prime_index_normal_subgroups(S3) if p == 2)
    chars = [c for c in linear_characters(A3) if c != GroupRep.trivial(A3).character]
    return S3, A3, chars


def test_restrict_and_induce_on_s3():
    S3, A3, chars = _s3_pieces()
    std = irreducibles(S3)[2]
    assert restrict(std, S3.whole()).character == std.character
    assert restrict(std, A3).character == chars[0] + chars[1]
    ind = induce(GroupRep.from_linear_character(A3, chars[0].as_dict()), S3.whole())
    assert ind.character == std.character
    perm = induce(GroupRep.trivial(A3), S3.whole())
    assert perm.character == irreducibles(S3)[0].character + irreducibles(S3)[1].character


def test_restriction_outside_domain_fails():
    S3, A3, _ = _s3_pieces()
    H = Subgroup(S3, [0, 2])
    lin = GroupRep.trivial(A3)
    with pytest.raises(RepError):
        restrict(lin, H)


def test_conjugation_on_s3():
    S3, A3, chars = _s3_pieces()
    tau = GroupRep.from_linear_character(A3, chars[0].as_dict())
    transposition = next(g for g in range(6) if g not in A3.member_set)
    assert conjugate_rep(tau, transposition).character == chars[1]
    assert conjugate_rep(tau, A3.members[1]).character == chars[0]
    assert conjugate_character(chars[0], transposition) == chars[1]
    with pytest.raises(RepError):
        conjugate_rep(GroupRep.trivial(Subgroup(S3, [0, 2])), 1)


def test_intertwiner_examples():
    S3 = named_group("S3")
    a, b, std = irreducibles(S3)
    assert intertwiner(a, b) is None
    A = intertwiner(std, std)
    assert A is not None
    assert A == Matrix.identity(2) * A[0, 0]
    P = Matrix([[1, 2], [1, 3]])
    moved = std.change_basis(P)
    T = intertwiner(std, moved)
    for g in range(S3.order):
        assert T @ std(g) == moved(g) @ T


def test_extension_examples():
    Z4 = named_group("Z4")
    H = Subgroup(Z4, [0, 2])
    sign = GroupRep.from_linear_character(H, {0: Scalar(1), 2: Scalar(-1)})
    ext = extend_invariant_irrep(sign, Z4.whole())
    assert restrict(ext, H).character == sign.character
    assert {ext(1)[0, 0] ** 2} == {Scalar(-1)}
    exts = all_extensions(sign, Z4.whole())
    assert len({e.character for e in exts}) == 2
    triv = extend_invariant_irrep(GroupRep.trivial(H), Z4.whole())
    assert triv.character in {e.character for e in all_extensions(GroupRep.trivial(H), Z4.whole())}


def test_extension_needs_invariance():
    S3, A3, chars = _s3_pieces()
    tau = GroupRep.from_linear_character(A3, chars[0].as_dict())
    with pytest.raises(RepError):
        extend_invariant_irrep(tau, S3.whole())


def _normal_prime_pairs():
    for name in NAMES:
        G = named_group(name)
        for H, p in prime_index_normal_subgroups(G):
            yield pytest.param(name, H, p, id=f"{name}-{'.'.join(map(str, H.members))}")


@pytest.mark.parametrize("name,H,p", list(_normal_prime_pairs()))
def test_every_invariant_irreducible_extends_in_p_ways(name, H, p):
    from wdpatch.patching import subgroup_irreducibles

    G = named_group(name)
    sigma = next(g for g in range(G.order) if g not in H.member_set)
    for tau in subgroup_irreducibles(H):
        if conjugate_rep(tau, sigma).character != tau.character:
            continue
        exts = all_extensions(tau, G.whole())
        assert len({e.character for e in exts}) == p
        for e in exts:
            assert is_irreducible(e)
            assert restrict(e, H).character == tau.character
        twists = quotient_characters(H, G.whole())
        assert len(twists) == p


def test_decompose_examples():
    S3 = named_group("S3")
    irr = irreducibles(S3)
    assert decompose(irr[2], [irr[2]]) == [1]
    assert decompose(GroupRep.regular(S3), irr) == [1, 1, 2]
    with pytest.raises(RepError):
        decompose(GroupRep.regular(S3), irr[:2])


def test_bilinear_form_types():
    assert bilinear_form_type(irreducibles(named_group("S3"))[2]) == "orthogonal"
    Q8 = named_group("Q8")
    two = next(r for r in irreducibles(Q8) if r.dim == 2)
    assert bilinear_form_type(two) == "symplectic"
    assert frobenius_schur(two) == Scalar(-1)
    Z3 = named_group("Z3")
    assert sorted(bilinear_form_type(r) for r in irreducibles(Z3)) == ["none", "none", "orthogonal"]
    with pytest.raises(RepError):
        bilinear_form_type(GroupRep.regular(Z3))


# --- properties -----------------------------------------------------------

SMALL = ["S3", "D4", "Q8", "A4", "Z4xZ2", "D6"]


@st.composite
def subgroup_pairs(draw):
    G = named_group(draw(st.sampled_from(SMALL)))
    subs = [h for h in G.subgroups() if 1 < h.order < G.order]
    return G, draw(st.sampled_from(subs))


@settings(max_examples=30)
@given(subgroup_pairs(), st.data())
def test_frobenius_reciprocity(pair, data):
    from wdpatch.patching import subgroup_irreducibles

    G, H = pair
    tau = data.draw(st.sampled_from(subgroup_irreducibles(H)))
    rho = data.draw(st.sampled_from(irreducibles(G)))
    ind = induce(tau, G.whole())
    assert ind.dim == G.order // H.order * tau.dim
    assert inner_product(ind, rho) == inner_product(tau, restrict(rho, H))


@settings(max_examples=30)
@given(subgroup_pairs(), st.data())
def test_mackey_for_normal_subgroups(pair, data):
    from wdpatch.patching import subgroup_irreducibles

    G, H = pair
    if not H.is_normal():
        return
    tau = data.draw(st.sampled_from(subgroup_irreducibles(H)))
    back = restrict(induce(tau, G.whole()), H).character
    total = None
    for g in H.left_coset_reps():
        c = conjugate_rep(tau, g).character
        total = c if total is None else total + c
    assert back == total


@settings(max_examples=20)
@given(st.sampled_from(["S3", "D4", "Q8", "D6", "Dic12", "S4"]), st.data())
def test_restriction_irreducible_iff_not_self_twist(name, data):
    G = named_group(name)
    H = next(h for h, p in prime_index_normal_subgroups(G) if p == 2)
    omega = next(e for e in quotient_characters(H, G.whole()) if e.character != _trivial_char(G))
    Pi = data.draw(st.sampled_from(irreducibles(G)))
    self_twist = Pi.twist(omega).character == Pi.character
    assert is_irreducible(restrict(Pi, H)) == (not self_twist)


@given(st.sampled_from(NAMES), st.data())
def test_character_is_class_function(name, data):
    G = named_group(name)
    r = data.draw(st.sampled_from(irreducibles(G)))
    g = data.draw(st.integers(0, G.order - 1))
    x = data.draw(st.integers(0, G.order - 1))
    assert r.character(G.conj(g, x)) == r.character(x)
