"""JSON encodings for scalars, matrices, groups, representations, families
and Weil-Deligne pairs. Scalars are always strings, so no float ever appears.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .exact import Matrix, Scalar, format_scalar, parse_scalar
from .groups import (
    Character,
    FiniteGroup,
    GroupRep,
    Subgroup,
    direct_sum,
    group_from_permutations,
    named_group,
    restrict,
)
from .groups.group import as_subgroup


class SerializationError(ValueError):
    """Malformed JSON input."""


def _need(doc, key, where):
    if not isinstance(doc, dict) or key not in doc:
        raise SerializationError(f"{where}: missing key {key!r}")
    return doc[key]


# ---------------------------------------------------------------------------
# output


def to_jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        raise SerializationError("floating point value in output")  # pragma: no cover
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Scalar):
        return format_scalar(obj)
    if isinstance(obj, Matrix):
        return matrix_to_json(obj)
    if isinstance(obj, Character):
        return list(obj.key())
    if isinstance(obj, GroupRep):
        return rep_to_json(obj)
    if isinstance(obj, Subgroup):
        return list(obj.members)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in obj]
        return sorted(items, key=str) if isinstance(obj, (set, frozenset)) else items
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    raise SerializationError(f"cannot serialize {type(obj).__name__}")


def matrix_to_json(m: Matrix) -> list:
    return [[format_scalar(x) for x in m.row(i)] for i in range(m.rows)]


def rep_to_json(r: GroupRep) -> dict:
    return {"dim": r.dim, "images": {str(g): matrix_to_json(m) for g, m in sorted(r.images.items())}}


# ---------------------------------------------------------------------------
# input


def scalar_from_json(x, q=None) -> Scalar:
    if isinstance(x, bool) or isinstance(x, float):
        raise SerializationError(f"scalars must be strings or integers, got {x!r}")
    try:
        return parse_scalar(x if isinstance(x, (str, int)) else str(x), q=q)
    except (ValueError, TypeError) as exc:
        raise SerializationError(f"bad scalar {x!r}: {exc}") from None


def matrix_from_json(rows, q=None) -> Matrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise SerializationError("a matrix is a nonempty list of rows")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise SerializationError("matrix rows have different lengths")
    return Matrix([[scalar_from_json(x, q) for x in r] for r in rows])


def group_from_json(doc) -> FiniteGroup:
    if isinstance(doc, str):
        return named_group(doc)
    if not isinstance(doc, dict):
        raise SerializationError("a group is a library name or an object")
    if "library" in doc:
        return named_group(doc["library"])
    if "permutations" in doc:
        G, _ = group_from_permutations([tuple(p) for p in doc["permutations"]], name=doc.get("name"))
        return G
    table = _need(doc, "table", "group")
    order = doc.get("order", len(table))
    if order != len(table):
        raise SerializationError("group order does not match the table")
    labels = doc.get("labels")
    if isinstance(labels, dict):
        labels = [labels.get(str(i), str(i)) for i in range(order)]
    return FiniteGroup(table, labels=labels, name=doc.get("name"))


def subgroup_from_json(G: FiniteGroup, doc) -> Subgroup:
    if doc == "whole" or doc is None:
        return G.whole()
    if isinstance(doc, dict) and "generators" in doc:
        return G.generate([int(x) for x in doc["generators"]])
    if isinstance(doc, list):
        return Subgroup(G, [int(x) for x in doc])
    raise SerializationError("a subgroup is a list of elements or {'generators': [...]}")


def _close_generators(H: Subgroup, gens: dict) -> dict:
    G = H.parent
    d = next(iter(gens.values())).rows
    images = {G.identity: Matrix.identity(d)}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g, m in gens.items():
                y = G.mul(x, g)
                if y not in images:
                    images[y] = images[x] @ m
                    nxt.append(y)
        frontier = nxt
    if set(images) != H.member_set:
        raise SerializationError("generator images do not generate the subgroup")
    return images


def rep_from_json(H, doc, q=None) -> GroupRep:
    """Representation of the subgroup H from one of several encodings."""
    H = as_subgroup(H)
    if not isinstance(doc, dict):
        raise SerializationError("a representation is an object")
    if "trivial" in doc:
        return GroupRep.trivial(H, int(doc["trivial"]))
    if "irreducible" in doc:
        from .patching.family import subgroup_irreducibles

        irr = subgroup_irreducibles(H)
        k = int(doc["irreducible"])
        if not 0 <= k < len(irr):
            raise SerializationError(f"irreducible index {k} out of range (have {len(irr)})")
        return irr[k]
    if "sum" in doc:
        parts = [rep_from_json(H, d, q) for d in doc["sum"]]
        if not parts:
            raise SerializationError("empty direct sum")
        return direct_sum(parts)
    if "restriction" in doc:
        big = rep_from_json(H.parent.whole(), doc["restriction"], q)
        return restrict(big, H)
    if "linear" in doc:
        vals = doc["linear"]
        if isinstance(vals, dict):
            gens = {int(g): Matrix([[scalar_from_json(v, q)]]) for g, v in vals.items()}
            return GroupRep(H, _close_generators(H, gens))
        if len(vals) != H.order:
            raise SerializationError("linear character needs one value per subgroup element")
        return GroupRep.from_linear_character(H, {g: scalar_from_json(v, q) for g, v in zip(H.members, vals)})
    if "generators" in doc:
        gens = {int(g): matrix_from_json(m, q) for g, m in doc["generators"].items()}
        return GroupRep(H, _close_generators(H, gens))
    images = _need(doc, "images", "representation")
    out = {int(g): matrix_from_json(m, q) for g, m in images.items()}
    return GroupRep(H, out)


def family_from_json(doc):
    from .patching import PatchFamily, SolvableTower

    G = group_from_json(_need(doc, "group", "family"))
    members = _need(doc, "members", "family")
    excluded = doc.get("excluded", [])
    names = [m.get("name", f"E{k}") for k, m in enumerate(members)]
    if any("chain" in m for m in members):
        items = []
        for m in members:
            chain = [subgroup_from_json(G, c) for c in (m["chain"] if "chain" in m else [m["subgroup"]])]
            items.append((chain, rep_from_json(chain[-1], _need(m, "rep", "member"))))
        return SolvableTower(G, items, excluded, max_height=doc.get("max_height"), names=names)
    items = []
    for m in members:
        H = subgroup_from_json(G, _need(m, "subgroup", "member"))
        items.append((H, rep_from_json(H, _need(m, "rep", "member"))))
    return PatchFamily(G, items, excluded, names=names)


def wd_from_json(doc):
    from .weil_deligne import WDPair, WeilModel

    q = Fraction(str(_need(doc, "q", "wd pair")))
    F = matrix_from_json(_need(doc, "frobenius", "wd pair"), q)
    N = matrix_from_json(doc["N"], q) if "N" in doc else None
    inertia = doc.get("inertia", "trivial")
    if inertia == "trivial":
        return WDPair(WeilModel.unramified(q), F, None, N)
    G = group_from_json(_need(inertia, "group", "inertia"))
    I = subgroup_from_json(G, inertia.get("subgroup"))
    model = WeilModel(I, inertia.get("frobenius_action"), q, inertia.get("tame_generator"))
    rho = rep_from_json(I, _need(inertia, "rep", "inertia"), q)
    return WDPair(model, F, rho, N)


def wd_to_json(w) -> dict:
    out = {
        "q": to_jsonable(w.q),
        "dim": w.dim,
        "frobenius": matrix_to_json(w.frobenius),
        "N": matrix_to_json(w.N),
    }
    if w.model.inertia.order == 1:
        out["inertia"] = "trivial"
    else:
        G = w.model.group
        out["inertia"] = {
            "group": {"order": G.order, "table": [list(r) for r in G.table]},
            "subgroup": list(w.model.inertia.members),
            "frobenius_action": list(w.model.frobenius_action),
            "tame_generator": w.model.tame_generator,
            "rep": rep_to_json(w.inertia),
        }
    return out
