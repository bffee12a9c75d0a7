"""Acceptance criteria 1-9, each timed against its budget.

Every test records its outcome in acceptance_report, and conftest prints one
line per criterion at the end of the run.
"""

import itertools
import json
import random

import pytest

from acceptance_report import criterion
from patch_configs import configurations
from wdpatch import gsp4_tables, hodge_tate
from wdpatch.cli import _certificate_json
from wdpatch.conductors import (
    RamificationFiltration,
    artin_conductor,
    invariant_codim,
    swan_conductor,
    swan_depth_identity,
)
from wdpatch.exact import Matrix, Scalar
from wdpatch.groups import (
    GroupRep,
    Subgroup,
    conjugate_rep,
    direct_sum,
    induce,
    inner_product,
    irreducibles,
    linear_characters,
    linear_rep,
    named_group,
    prime_index_normal_subgroups,
    quotient_characters,
    restrict,
)
from wdpatch.patching import (
    SolvableTower,
    cm_family_search,
    compare_with_oracle,
    is_squarefree,
    patch,
    patch_solvable,
    quadratic_splitting,
    splitting_by_factorization,
    subgroup_irreducibles,
)
from wdpatch.serialize import to_jsonable
from wdpatch.symplectic import (
    REPRESENTATIVES,
    classify_nilpotent,
    random_conjugate,
    symplectic_partition_test,
    verify_certificate,
)
from wdpatch.weil_deligne import (
    SL2Parameter,
    WDPair,
    WeilModel,
    frobenius_semisimplify,
    is_indecomposable,
    purity_check,
    q_half_power,
    steinberg_parameter,
    wd_from_parameter,
)

PARTITIONS_OF_4 = [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

GOLDEN_TABLE = [
    ("I", "N0", (1, 2, 4, 4, 8)),
    ("IIa", "N1", (0, 1, 1, 2, 4)),
    ("IIIa", "N2", (0, 0, 2, 1, 4)),
    ("IVa", "N3", (0, 0, 0, 0, 1)),
    ("Va", "N2", (0, 0, 0, 1, 2)),
    ("VIa", "N2", (0, 0, 1, 1, 3)),
]


# --- 1 ---------------------------------------------------------------------


def test_criterion_1_table_a():
    with criterion(1, "table rows and inversion", budget=1.0):
        rows = json.loads(gsp4_tables.table_json())
        assert len(rows) == 6
        for row, (label, mono, dims) in zip(rows, GOLDEN_TABLE):
            assert row == {"type": label, "N": mono, **dict(zip(("K", "Kt", "JP", "JQ", "I"), dims))}
            assert gsp4_tables.classify_from_dims(dims) == label
        text = gsp4_tables.table_text().splitlines()
        assert text[0].split() == ["type", "N", "K", "K~", "J_P", "J_Q", "I"]
        for line, (label, mono, dims) in zip(text[1:], GOLDEN_TABLE):
            assert line.split() == [label, mono, *map(str, dims)]


# --- 2 ---------------------------------------------------------------------


def test_criterion_2_nilpotent_orbits():
    with criterion(2, "500 conjugates per orbit and partition test", budget=60.0):
        rng = random.Random(20240601)
        for label in REPRESENTATIVES:
            for _ in range(500):
                N, _h = random_conjugate(label, rng)
                orbit, g = classify_nilpotent(N)
                assert orbit.label == label
                assert verify_certificate(N, label, g)
        assert symplectic_partition_test((3, 1)) is False
        for lam in [(2, 1, 1), (2, 2), (4,), (1, 1, 1, 1)]:
            assert symplectic_partition_test(lam) is True


# --- 3 ---------------------------------------------------------------------


def _alphas(k, rng):
    pool = [Scalar(1), Scalar(-1), Scalar.zeta(3), Scalar.zeta(4), Scalar(2), Scalar.zeta(6) * 3]
    return [rng.choice(pool) for _ in range(k)]


def _random_pair(rng):
    """A pair whose Frobenius has a nontrivial unipotent part, conjugated at random."""
    q = rng.choice([2, 3, 5])
    a = rng.choice([Scalar(1), Scalar(-1), Scalar.zeta(3), Scalar(2)])
    shape = rng.randrange(3)
    if shape == 0:
        # alpha (x) S2 twice, glued by a unipotent that commutes with N
        w = wd_from_parameter(SL2Parameter.unramified([a, a], [2, 2], q))
        U = Matrix.identity(4) + Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]])
    elif shape == 1:
        # N = 0, a Jordan block in Frobenius
        w = wd_from_parameter(SL2Parameter.unramified([a, a, -a], [1, 1, 1], q))
        U = Matrix.identity(3) + Matrix.unit(3, 0, 1)
    else:
        w = wd_from_parameter(SL2Parameter.unramified([a, a, q], [1, 1, 2], q))
        U = Matrix.identity(4) + Matrix.unit(4, 0, 1) * rng.choice([1, 2, -1])
    F = w.frobenius @ U
    d = F.rows
    while True:
        P = Matrix([[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)])
        if P.is_invertible():
            break
    return WDPair(w.model, F, w.inertia, w.N).conjugate(P)


def test_criterion_3_wd_calculus():
    rng = random.Random(7)
    with criterion(3, "commutation on every partition, Steinberg, idempotence", budget=30.0):
        for q in (2, 3, 5):
            for lam in PARTITIONS_OF_4:
                w = wd_from_parameter(SL2Parameter.unramified(_alphas(len(lam), rng), list(lam), q))
                assert w.N @ w.frobenius == w.frobenius @ w.N * q
            st = steinberg_parameter("gsp4_steinberg", q, twist=q_half_power(q, 3))
            assert is_indecomposable(st)
            assert st.N.rank() == 3
            assert purity_check(st, 3)
            eig = {st.frobenius[i, i] for i in range(4)}
            assert eig == {Scalar(q ** k) for k in range(4)}
        nontrivial = 0
        for _ in range(200):
            w = _random_pair(rng)
            s1 = frobenius_semisimplify(w)
            s2 = frobenius_semisimplify(s1)
            assert s1 == s2
            nontrivial += s1.frobenius != w.frobenius
        assert nontrivial == 200


# --- 4 ---------------------------------------------------------------------


def test_criterion_4_oracle_equivalence():
    with criterion(4, "engine against brute force", budget=300.0):
        seen = 0
        ambiguous = 0
        groups = set()
        for label, fam in configurations():
            assert fam.group.order <= 24 and fam.dim <= 4
            cmp = compare_with_oracle(fam)
            assert cmp["agree"], label
            assert cmp["oracle"], label
            seen += 1
            ambiguous += not cmp["unique"]
            groups.add(label.split("/")[0])
        assert seen >= 20
        assert ambiguous > 0 and ambiguous < seen
        assert {"V4", "S3", "Z4xZ2"} <= groups


# --- 5 ---------------------------------------------------------------------


def _z4z2_tower_members(rep):
    G = named_group("Z4xZ2")
    V = Subgroup(G, [0, 1, 4, 5])
    Za = Subgroup(G, [0, 2, 4, 6])
    Zb = Subgroup(G, [0, 3, 4, 7])
    inner = [Subgroup(G, [0, 5]), Subgroup(G, [0, 4]), Subgroup(G, [0, 1])]
    members = [([V, H], restrict(rep, H)) for H in inner]
    members += [([Za], restrict(rep, Za)), ([Zb], restrict(rep, Zb))]
    return G, members


def _cert_bytes(cert):
    return json.dumps(to_jsonable(_certificate_json(cert)), sort_keys=True, indent=2).encode()


def test_criterion_5_solvable_recursion():
    with criterion(5, "height 2 on Z4xZ2 and height 1 degeneration", budget=30.0):
        G = named_group("Z4xZ2")
        chars = linear_characters(G)
        assert len(chars) == 8
        for chi in chars:
            rep = linear_rep(chi)
            G, members = _z4z2_tower_members(rep)
            tower = SolvableTower(G, members, max_height=2)
            assert tower.height == 2
            cert = patch_solvable(tower)
            # brute force over all eight characters
            matches = [c for c in chars
                       if all(c.restrict(ch[-1]) == r.character for ch, r in members)]
            assert matches == [chi]
            assert cert.rho.character == chi
            assert len(cert.layers) == 1
        for label, fam in itertools.islice(configurations(["V4", "S3", "Q8", "Z4xZ2"]), 0, None, 3):
            tower = SolvableTower(fam.ambient, [([m.subgroup], m.rep) for m in fam.members],
                                  names=[m.name for m in fam.members])
            try:
                flat = _cert_bytes(patch(fam))
            except ValueError as exc:
                with pytest.raises(type(exc)) as info:
                    patch_solvable(tower)
                assert str(info.value) == str(exc), label
                continue
            assert _cert_bytes(patch_solvable(tower)) == flat, label


# --- 6 ---------------------------------------------------------------------


def _random_chain(G, rng):
    subs = G.subgroups()
    top = rng.choice(subs)
    chain = [top]
    while chain[-1].order > 1 and rng.random() < 0.8:
        inside = [h for h in subs if h.issubset(chain[-1])]
        chain.append(rng.choice(inside))
    return RamificationFiltration(chain)


def _random_rep(G, rng, max_dim=4):
    irr = irreducibles(G)
    parts = []
    while not parts or (rng.random() < 0.5 and sum(p.dim for p in parts) < max_dim):
        r = rng.choice(irr)
        if sum(p.dim for p in parts) + r.dim <= max_dim or not parts:
            parts.append(r)
    return direct_sum(parts)


def test_criterion_6_conductors():
    rng = random.Random(11)
    names = ["Z2", "Z3", "Z4", "V4", "S3", "D4", "Q8", "A4", "Z4xZ2"]
    with criterion(6, "artin - swan = codim, additivity, worked examples", budget=30.0):
        for _ in range(200):
            G = named_group(rng.choice(names))
            filt = _random_chain(G, rng)
            r1, r2 = _random_rep(G, rng), _random_rep(G, rng)
            assert artin_conductor(r1, filt) - swan_conductor(r1, filt) == invariant_codim(r1, filt)
            s = r1.direct_sum(r2)
            assert artin_conductor(s, filt) == artin_conductor(r1, filt) + artin_conductor(r2, filt)
            assert swan_conductor(s, filt) == swan_conductor(r1, filt) + swan_conductor(r2, filt)
        Z2 = named_group("Z2")
        sign = GroupRep.from_linear_character(Z2, {0: Scalar(1), 1: Scalar(-1)})
        tame = swan_depth_identity(direct_sum([sign] * 4), RamificationFiltration([Z2.whole()], genuine=True))
        assert (tame["artin"], tame["swan"], tame["depth"], tame["consistent"]) == (4, 0, 0, True)
        Z3 = named_group("Z3")
        w, wb = [GroupRep.from_linear_character(Z3, {k: Scalar.zeta(3, e * k) for k in range(3)}) for e in (1, 2)]
        wild = swan_depth_identity(direct_sum([w, wb, w, wb]),
                                   RamificationFiltration([Z3.whole(), Z3.whole()], genuine=True))
        assert (wild["artin"], wild["swan"], wild["depth"], wild["consistent"]) == (8, 4, 1, True)


# --- 7 ---------------------------------------------------------------------


def _weight_grid():
    for mu1 in range(7):
        for mu2 in range(mu1 + 1):
            for w in range(-6, 7):
                if (mu1 + mu2 - w) % 2:
                    continue
                yield hodge_tate.WeightData(mu1, mu2, w)


@pytest.mark.xfail(strict=True, reason="the stated +b shift has the opposite sign; see the decision ledger")
def test_criterion_7_literal_plus_b():
    with criterion(7, "quadruple under the weight rule equals ht_weights + b", budget=5.0):
        for wd in _weight_grid():
            ht = hodge_tate.ht_weights(wd)
            for b in range(-3, 4):
                got = hodge_tate.clozel_weights(wd, b)
                assert got == tuple(x + b for x in ht), (wd, b, got)


def test_criterion_7_structure():
    with criterion(7, "increasing, symmetric, blattner, and ht_weights - b", budget=5.0):
        points = 0
        for wd in _weight_grid():
            ht = hodge_tate.ht_weights(wd)
            assert all(a < b for a, b in zip(ht, ht[1:]))
            assert sorted(wd.bold_w - x for x in ht) == list(ht)
            bl = hodge_tate.blattner(wd.nu1, wd.nu2)
            assert bl["consistent"]
            assert bl["k"][0] + bl["k"][1] - 3 == wd.nu1 + wd.nu2
            for b in range(-3, 4):
                assert hodge_tate.clozel_weights(wd, b) == tuple(x - b for x in ht)
                points += 1
        assert points == 7 * sum(1 for _ in _weight_grid())


# --- 8 ---------------------------------------------------------------------

INDEX_TWO = ["S3", "D4", "Q8", "Z4xZ2", "D6", "Dic12", "S4"]


def _index_two(G):
    return [H for H, p in prime_index_normal_subgroups(G) if p == 2]


def test_criterion_8_mackey():
    with criterion(8, "reciprocity, Ind Res and Res Ind on index-2 subgroups", budget=30.0):
        used = 0
        for name in INDEX_TWO:
            G = named_group(name)
            subs = _index_two(G)
            assert subs
            H = subs[0]
            used += 1
            theta = next(g for g in G.whole().members if g not in H.member_set)
            trivial = GroupRep.trivial(G.whole()).character
            omega = next(e for e in quotient_characters(H, G.whole()) if e.character != trivial)
            irr_G = irreducibles(G)
            irr_H = subgroup_irreducibles(H)
            for Pi in irr_G:
                for pi in irr_H:
                    assert inner_product(restrict(Pi, H), pi) == inner_product(Pi, induce(pi, G.whole()))
                assert induce(restrict(Pi, H), G.whole()).character == (Pi.character + Pi.twist(omega).character)
            for pi in irr_H:
                assert restrict(induce(pi, G.whole()), H).character == (pi.character + conjugate_rep(pi, theta).character)
        assert used >= 5


# --- 9 ---------------------------------------------------------------------


def test_criterion_9_splitting():
    with criterion(9, "Legendre against factorization, CM search", budget=10.0):
        primes = [p for p in range(3, 200) if all(p % f for f in range(2, int(p ** 0.5) + 1))]
        ds = [d for d in range(-50, 51) if d and is_squarefree(d)]
        for p in primes:
            for d in ds:
                assert quadratic_splitting(d, p) == splitting_by_factorization(d, p), (d, p)
        for S in ([5], [3, 7], [5, 13], [3, 5, 7], [11, 19, 23]):
            res = cm_family_search(S, 60)
            assert res["d"], S
            for d in res["d"]:
                assert d < 0 and is_squarefree(d)
                for p in S:
                    assert quadratic_splitting(d, p) == "split"
                    if p != 2:
                        assert splitting_by_factorization(d, p) == "split"
            missed = [-a for a in range(1, 61) if is_squarefree(-a) and -a not in res["d"]]
            for d in missed:
                assert any(quadratic_splitting(d, p) != "split" for p in S)
