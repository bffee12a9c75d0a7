"""Generic Iwahori-spherical representations of GSp(4): parahoric fixed-space
dimensions, monodromy orbits, the Atkin-Lehner element and the tame lemma.

Parahoric subgroups are plain labels. Nothing here materializes points of a
p-adic group.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .exact import Matrix, Scalar
from .symplectic import J, ORBITS, omega, similitude

PARAHORICS = ("K", "Kt", "JP", "JQ", "I")
PARAHORIC_NAMES = {"K": "K", "Kt": "K~", "JP": "J_P", "JQ": "J_Q", "I": "I"}

# parahoric -> parahorics that contain it
CONTAINED_IN = {
    "I": ("JP", "JQ", "K", "Kt"),
    "JP": ("K", "Kt"),
    "JQ": ("K",),
    "K": (),
    "Kt": (),
}


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class IwahoriType:
    label: str
    dims: tuple
    monodromy: str
    discrete_series: bool
    inducing_data: str

    @property
    def rank(self) -> int:
        return ORBITS[self.monodromy].rank

    def dim(self, parahoric: str) -> int:
        return self.dims[PARAHORICS.index(parahoric)]

    def as_dict(self) -> dict:
        return {
            "type": self.label,
            "N": self.monodromy,
            "dims": dict(zip(PARAHORICS, self.dims)),
            "discrete_series": self.discrete_series,
            "inducing_data": self.inducing_data,
        }


TABLE_A = (
    IwahoriType("I", (1, 2, 4, 4, 8), "N0", False, "chi1 x chi2 | chi3"),
    IwahoriType("IIa", (0, 1, 1, 2, 4), "N1", False, "St_GL(2)(chi1) | chi2"),
    IwahoriType("IIIa", (0, 0, 2, 1, 4), "N2", False, "chi1 | St_GL(2)(chi2)"),
    IwahoriType("IVa", (0, 0, 0, 0, 1), "N3", True, "St_GSp(4)(chi)"),
    IwahoriType("Va", (0, 0, 0, 1, 2), "N2", True, "sub of St_GL(2)(nu^1/2 xi0) | nu^-1/2 chi"),
    IwahoriType("VIa", (0, 0, 1, 1, 3), "N2", False, "sub of 1 | St_GL(2)(chi)"),
)
_BY_LABEL = {row.label: row for row in TABLE_A}
LABELS = tuple(_BY_LABEL)


def table_row(label: str) -> IwahoriType:
    try:
        return _BY_LABEL[label]
    except KeyError:
        raise TableError(f"unknown Iwahori type {label!r}") from None


def classify_from_dims(dims) -> str | None:
    dims = tuple(int(d) for d in dims)
    hits = [row.label for row in TABLE_A if row.dims == dims]
    return hits[0] if hits else None


def monodromy_rank_equivalences(row) -> dict:
    """Rank of monodromy for a row together with the three characterizations.

    Each characterization is evaluated from the stored dimensions and checked
    against the rank of the stored orbit.
    """
    if isinstance(row, str):
        row = table_row(row)
    rank = row.rank
    steinberg = row.label == "IVa"
    unique_klingen_line = row.dim("JQ") == 1
    para_spherical = row.dim("Kt") >= 1 and row.dim("K") == 0
    checks = {
        "rank3_iff_steinberg": (rank == 3) == steinberg,
        "rank2_iff_unique_JQ_line": (rank == 2) == unique_klingen_line,
        "rank1_iff_para_spherical": (rank == 1) == para_spherical,
    }
    if not all(checks.values()):
        raise TableError(f"table row {row.label} contradicts the monodromy corollary")  # pragma: no cover
    unique_siegel_line = row.dim("JP") == 1
    return {
        "type": row.label,
        "orbit": row.monodromy,
        "rank": rank,
        "steinberg": steinberg,
        "unique_JQ_line": unique_klingen_line,
        "para_spherical": para_spherical,
        "checks": checks,
        "unique_JP_line": unique_siegel_line,
        # a unique Siegel-fixed line does not force rank 1
        "JP_line_implies_rank1": False,
        "JP_line_non_implication_witnessed": unique_siegel_line and rank != 1,
    }


def jp_line_non_implication() -> list[str]:
    """Rows with a unique J_P-fixed line whose monodromy rank is not 1."""
    return [r.label for r in TABLE_A if r.dim("JP") == 1 and r.rank != 1]


def atkin_lehner(varpi) -> Matrix:
    varpi = varpi if isinstance(varpi, Scalar) else Scalar(varpi)
    if varpi.is_zero():
        raise TableError("the uniformizer must be nonzero")
    eta = Matrix([
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [varpi, 0, 0, 0],
        [0, varpi, 0, 0],
    ])
    if eta @ eta != Matrix.identity(4) * varpi:
        raise TableError("internal error: eta^2 check failed")  # pragma: no cover
    if similitude(eta) != -varpi:
        raise TableError("internal error: similitude of eta")  # pragma: no cover
    return eta


@dataclass(frozen=True)
class TameInertiaShape:
    chi: Scalar
    image: Matrix
    eigenspaces: dict
    N: Matrix
    isotropic: dict

    def as_wd_pair(self, q):
        """The shape as a WD pair over a cyclic tame inertia quotient.

        Frobenius acts on tame inertia by x -> x^q, so the order of chi must
        divide q - 1; Frobenius itself is taken to be the identity.
        """
        from .groups.library import cyclic
        from .weil_deligne import WDPair, WeilModel
        from .groups import GroupRep

        m, _ = self.chi.as_root_of_unity()
        qi = int(q)
        if (qi - 1) % m:
            raise TableError(f"order {m} of chi does not divide q - 1 = {qi - 1}")
        C = cyclic(m)
        model = WeilModel(C, [(k * qi) % m for k in range(m)], q=q, tame_generator=1)
        rep = GroupRep(C, {k: Matrix.diag([1, 1, self.chi ** k, self.chi ** k]) for k in range(m)})
        return WDPair(model, Matrix.identity(4), rep, Matrix.zeros(4))


def _is_isotropic(vectors) -> bool:
    return all(omega(u, v).is_zero() for u in vectors for v in vectors)


def tame_inertia_shape(chi) -> TameInertiaShape:
    chi = chi if isinstance(chi, Scalar) else Scalar(chi)
    if chi == Scalar(1):
        raise TableError("chi must be nontrivial")
    if chi.as_root_of_unity() is None:
        raise TableError("chi must be a root of unity")
    e = [tuple(Scalar(int(i == j)) for i in range(4)) for j in range(4)]
    spaces = {"1": [e[0], e[1]], "chi": [e[2], e[3]]}
    image = Matrix.diag([1, 1, chi, chi])
    for lam, vecs in (("1", spaces["1"]), ("chi", spaces["chi"])):
        val = Scalar(1) if lam == "1" else chi
        for v in vecs:
            if image.apply(v) != tuple(x * val for x in v):
                raise TableError("internal error: eigenspace check")  # pragma: no cover
    iso = {k: _is_isotropic(v) for k, v in spaces.items()}
    if not all(iso.values()):
        raise TableError("internal error: eigenspaces not isotropic")  # pragma: no cover
    if image.transpose() @ J @ image != J * chi:
        # diag(1,1,chi,chi) is a similitude with factor chi
        raise TableError("internal error: similitude of the tame shape")  # pragma: no cover
    return TameInertiaShape(chi, image, spaces, Matrix.zeros(4), iso)


# descriptor shapes for the Klingen chi-lemma
DESCRIPTOR_SHAPES = ("principal_series", "klingen_steinberg", "siegel_steinberg", "steinberg", "supercuspidal")


def klingen_chi_test(descriptor: dict, chi) -> bool:
    """Whether the chi-eigenspace of the Klingen parahoric is nonzero.

    descriptor is {"shape": ..., "characters": [...]} where for a principal
    series the three characters are dicts {"ramified": bool, "restriction": Scalar
    or None}, the restriction being the value on a generator of the units
    of the residue field. Only principal series chi~ x (unram) x| (unram) with
    chi~ restricting to chi give a nonzero space.
    """
    chi = chi if isinstance(chi, Scalar) else Scalar(chi)
    if chi == Scalar(1):
        raise TableError("chi must be a nontrivial tame character")
    shape = descriptor.get("shape")
    if shape not in DESCRIPTOR_SHAPES:
        raise TableError(f"unknown descriptor shape {shape!r}")
    if shape != "principal_series":
        return False
    chars = descriptor.get("characters")
    if not isinstance(chars, (list, tuple)) or len(chars) != 3:
        raise TableError("a principal series descriptor needs three characters")
    first, second, third = chars
    if second.get("ramified") or third.get("ramified"):
        return False
    if not first.get("ramified"):
        return False
    res = first.get("restriction")
    if res is None:
        return False
    res = res if isinstance(res, Scalar) else Scalar.parse(str(res))
    return res == chi


def table_json() -> str:
    rows = []
    for r in TABLE_A:
        rows.append({"type": r.label, "N": r.monodromy, **dict(zip(PARAHORICS, r.dims))})
    return json.dumps(rows, sort_keys=True)


def table_text() -> str:
    head = ["type", "N"] + [PARAHORIC_NAMES[p] for p in PARAHORICS]
    body = [[r.label, r.monodromy] + [str(d) for d in r.dims] for r in TABLE_A]
    widths = [max(len(line[i]) for line in [head] + body) for i in range(len(head))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in [head] + body]
    return "\n".join(lines)
