"""The patching algorithm: from compatible Galois-invariant representations of
prime-index subgroups to a common extension to the ambient group.

Step numbering follows the usual proof. In the finite model the Zariski
closure of an image is the image itself, so the identity component is
trivial and Gamma_M is simply the kernel of rho_0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..groups import (
    GroupRep,
    Subgroup,
    conjugate_rep,
    decompose,
    direct_sum,
    extend_invariant_irrep,
    induce,
    inner_product,
    is_irreducible,
    quotient_characters,
    restrict,
)
from .family import (
    Demand,
    FamilyError,
    PatchFamily,
    check_family,
    galois_invariance_failures,
    raise_demand,
    subgroup_irreducibles,
    uncovered_elements,
)


class PatchError(ValueError):
    pass


class FamilyNotGeneral(PatchError):
    """A demand for a disjoint member could not be met."""

    def __init__(self, message: str, demand: Demand | None = None, layer=None):
        super().__init__(message)
        self.demand = demand
        self.layer = layer


class PatchAmbiguity(PatchError):
    """Several non-isomorphic representations restrict correctly to every member."""

    def __init__(self, message: str, candidates: list, certificate=None):
        super().__init__(message)
        self.candidates = candidates
        self.certificate = certificate


@dataclass
class OrbitLedger:
    base: int
    sigma: int
    q0: int
    constituents: list          # irreducibles tau of Gamma_0 occurring in rho_0
    multiplicities: list        # m_tau aligned with constituents
    fixed: list                 # indices into constituents: tau = tau^sigma
    orbits: list                # nontrivial orbits as lists of indices
    representatives: list       # one index per nontrivial orbit

    def fixed_reps(self) -> list[GroupRep]:
        return [self.constituents[i] for i in self.fixed]

    def as_dict(self) -> dict:
        key = lambda i: list(self.constituents[i].character.key())  # noqa: E731
        return {
            "base": self.base,
            "sigma": self.sigma,
            "q0": self.q0,
            "fixed": [{"character": key(i), "m": self.multiplicities[i]} for i in self.fixed],
            "orbits": [[key(i) for i in orb] for orb in self.orbits],
            "representatives": [{"character": key(i), "m": self.multiplicities[i]} for i in self.representatives],
        }


@dataclass
class PatchCertificate:
    rho: GroupRep
    ledger: OrbitLedger
    extensions: dict = field(default_factory=dict)       # fixed index -> list of (eta index, rep)
    twist_multiplicities: dict = field(default_factory=dict)  # fixed index -> {member: [m per eta]}
    base: int = 0
    reference: int | None = None
    transcript: list = field(default_factory=list)
    demands: list = field(default_factory=list)
    unique: bool = True
    layers: list = field(default_factory=list)

    def log(self, step: str, **data):
        self.transcript.append({"step": step, **data})


def _sort_key(r: GroupRep):
    return r.character.key()


def orbit_ledger(fam: PatchFamily, base: int = 0, constituents=None) -> OrbitLedger:
    m0 = fam.members[base]
    G = fam.group
    gamma0, rho0 = m0.subgroup, m0.rep
    irr = list(constituents) if constituents is not None else subgroup_irreducibles(gamma0)
    try:
        mult = decompose(rho0, irr)
    except Exception as exc:
        raise FamilyError(f"constituent list does not span the base representation: {exc}") from None
    present = [i for i, m in enumerate(mult) if m]
    cons = [irr[i] for i in present]
    mult = [mult[i] for i in present]
    sigma = next(g for g in fam.ambient.members if g not in gamma0.member_set)
    q0 = m0.prime
    keys = [c.character for c in cons]
    fixed, orbits, seen = [], [], set()
    for i, tau in enumerate(cons):
        if i in seen:
            continue
        orb = [i]
        cur = tau
        for _ in range(q0 - 1):
            cur = conjugate_rep(cur, G.inv(sigma))  # x -> tau(sigma x sigma^-1)
            try:
                j = keys.index(cur.character)
            except ValueError:
                raise FamilyError("base representation is not Galois invariant") from None
            if j == i:
                break
            orb.append(j)
        seen.update(orb)
        if len(orb) == 1:
            fixed.append(i)
        else:
            if len(orb) != q0:
                raise FamilyError("orbit length is not the prime index")  # pragma: no cover
            if len({mult[j] for j in orb}) != 1:
                raise FamilyError("conjugate constituents occur with different multiplicities")
            orbits.append(sorted(orb, key=lambda j: cons[j].character.key()))
    reps = [orb[0] for orb in orbits]
    return OrbitLedger(base, sigma, q0, cons, mult, fixed, orbits, reps)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _assemble(blocks: list[tuple[GroupRep, int]]) -> GroupRep:
    pieces = []
    for rep, m in blocks:
        pieces.extend([rep] * m)
    return direct_sum(pieces)


def verify_patch(rho: GroupRep, fam: PatchFamily) -> bool:
    chi = rho.character
    return all(chi.restrict(m.subgroup) == m.rep.character for m in fam.members)


def _restriction_failures(rho: GroupRep, fam: PatchFamily) -> list[int]:
    chi = rho.character
    return [k for k, m in enumerate(fam.members) if chi.restrict(m.subgroup) != m.rep.character]


def patch(fam: PatchFamily, base: int = 0, check_invariance: bool = True) -> PatchCertificate:
    """Construct the common extension, or explain why it is not determined."""
    report = check_family(fam)
    if not report["compatibility"]:
        raise FamilyError(f"restrictions disagree on intersections: {report['compatibility_failures']}")
    if check_invariance and report["invariance_failures"]:
        raise FamilyError(f"members are not Galois invariant: {sorted(report['invariance_failures'])}")
    if galois_invariance_failures(fam, base):
        raise FamilyError("the base member must be Galois invariant")

    ledger = orbit_ledger(fam, base)
    cert = PatchCertificate(rho=None, ledger=ledger, base=base)  # type: ignore[arg-type]
    cert.log("family", coverage=report["coverage"], uncovered=report["uncovered"])
    cert.log("ledger", **ledger.as_dict())
    gamma0 = fam.members[base].subgroup
    amb = fam.ambient

    # Step 1: extensions of invariant constituents, inductions of the others
    etas = quotient_characters(gamma0, amb)
    for i in ledger.fixed:
        tau = ledger.constituents[i]
        tilde = extend_invariant_irrep(tau, amb)
        cert.extensions[i] = [tilde.twist(eta) for eta in etas]
        cert.log("extend", constituent=list(tau.character.key()), sigma=tilde.notes.get("sigma"),
                 mu=tilde.notes.get("mu"))
    induced = []
    for i in ledger.representatives:
        ind = induce(ledger.constituents[i], amb)
        if not is_irreducible(ind):
            raise PatchError("internal error: induced constituent is reducible")  # pragma: no cover
        induced.append((ind, ledger.multiplicities[i]))
        cert.log("induce", constituent=list(ledger.constituents[i].character.key()))

    if not ledger.fixed:
        rho = _assemble(induced)
        cert.rho = rho
        cert.log("assemble", source="induction only")
        _step7(fam, cert, None)
        return cert

    # Steps 2-4: a member disjoint from the kernel of rho_0
    rho0 = fam.members[base].rep
    kernel = rho0.kernel()
    demand = raise_demand(fam, "disjoint from ker(rho_0)", kernel, skip=[base])
    cert.demands.append(demand)
    cert.log("demand", **demand.as_dict())

    if not demand.satisfied:
        return _resolve_by_enumeration(fam, cert, induced)

    ref = demand.witnesses[0]
    cert.reference = ref
    gamma1 = fam.members[ref].subgroup
    inter = gamma1.intersection(gamma0)
    image_ok = len(inter.product_set(kernel)) == gamma0.order
    cert.log("image", reference=ref, same_image=image_ok)
    if not image_ok:
        raise PatchError("internal error: disjoint member does not see the full image")  # pragma: no cover

    # Step 5: twist multiplicities as Hom dimensions, for every member
    for i in ledger.fixed:
        cert.twist_multiplicities[i] = {}
        for k, mem in enumerate(fam.members):
            counts = [int(inner_product(restrict(ext, mem.subgroup), mem.rep).to_fraction())
                      for ext in cert.extensions[i]]
            cert.twist_multiplicities[i][k] = counts
        ref_counts = cert.twist_multiplicities[i][ref]
        restricted = [restrict(ext, gamma1).character for ext in cert.extensions[i]]
        if len(set(restricted)) != len(restricted) or not all(is_irreducible(restrict(e, gamma1)) for e in cert.extensions[i]):
            raise PatchError("internal error: twists are not separated on the reference member")  # pragma: no cover
        if sum(ref_counts) != ledger.multiplicities[i]:
            raise FamilyNotGeneral("twist multiplicities on the reference member do not add up", demand)
        cert.log("twists", constituent=list(ledger.constituents[i].character.key()), reference_counts=ref_counts)

    # Step 6: assemble rho from the reference member
    blocks = list(induced)
    for i in ledger.fixed:
        for ext, m in zip(cert.extensions[i], cert.twist_multiplicities[i][ref]):
            blocks.append((ext, m))
    cert.rho = _assemble(blocks)
    cert.log("assemble", source=f"reference member {fam.members[ref].name}")
    _step7(fam, cert, kernel.intersection(gamma1))
    return cert


def _step7(fam: PatchFamily, cert: PatchCertificate, entangle: Subgroup | None):
    """Verify every member; note auxiliary members for entangled ones."""
    rho = cert.rho
    bad = _restriction_failures(rho, fam)
    for k, mem in enumerate(fam.members):
        entry = {"member": mem.name, "ok": k not in bad}
        if entangle is not None and len(mem.subgroup.product_set(entangle)) != fam.ambient.order:
            aux = raise_demand(fam, f"auxiliary for {mem.name}", entangle.intersection(mem.subgroup), skip=[k])
            entry["auxiliary"] = aux.witnesses[:1]
        cert.log("verify", **entry)
    if bad:
        names = [fam.members[k].name for k in bad]
        raise FamilyNotGeneral(f"assembled representation fails on members {names}")
    cert.unique = True


def extension_candidates(fam: PatchFamily, cert: PatchCertificate, induced) -> list[GroupRep]:
    """All extensions of rho_0 to the ambient group."""
    ledger = cert.ledger
    choices = []
    for i in ledger.fixed:
        exts = cert.extensions[i]
        choices.append([list(zip(exts, comp)) for comp in _compositions(ledger.multiplicities[i], len(exts))])
    out = []
    for combo in itertools.product(*choices):
        blocks = list(induced)
        for part in combo:
            blocks.extend(part)
        out.append(_assemble(blocks))
    return out


def _resolve_by_enumeration(fam: PatchFamily, cert: PatchCertificate, induced) -> PatchCertificate:
    cands = [r for r in extension_candidates(fam, cert, induced) if verify_patch(r, fam)]
    uniq = {}
    for r in cands:
        uniq.setdefault(r.character, r)
    cands = sorted(uniq.values(), key=_sort_key)
    cert.log("enumerate", valid=len(cands), uncovered=uncovered_elements(fam, include_excluded=True))
    if not cands:
        raise FamilyNotGeneral("no extension restricts correctly and no disjoint member exists", cert.demands[-1])
    if len(cands) == 1:
        cert.rho = cands[0]
        cert.unique = True
        cert.log("assemble", source="enumeration")
        return cert
    cert.unique = False
    cert.rho = cands[0]
    raise PatchAmbiguity(f"uniqueness unavailable: {len(cands)} non-isomorphic extensions", cands, cert)


def patch_candidates(fam: PatchFamily) -> list[GroupRep]:
    """The set of patched representations: one, several, or none."""
    try:
        return [patch(fam).rho]
    except PatchAmbiguity as amb:
        return list(amb.candidates)
    except FamilyNotGeneral:
        return []
