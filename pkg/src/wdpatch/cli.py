"""Command-line entry point. Every verb reads JSON or flags and prints JSON.

Exit codes: 0 success, 1 domain error, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

from . import conductors, gsp4_tables, hodge_tate, symplectic, weil_deligne
from .exact import NotNilpotent, jordan_data
from .patching import (
    FamilyNotGeneral,
    PatchAmbiguity,
    SolvableTower,
    cm_family_search,
    compare_with_oracle,
    patch,
    patch_solvable,
    quadratic_splitting,
    verify_patch,
)
from .serialize import (
    SerializationError,
    family_from_json,
    group_from_json,
    matrix_from_json,
    matrix_to_json,
    rep_from_json,
    rep_to_json,
    scalar_from_json,
    subgroup_from_json,
    to_jsonable,
    wd_from_json,
    wd_to_json,
)

VERBS = (
    "classify-nilpotent", "wd", "purity", "base-change", "table", "classify-dims", "conductor",
    "depth", "weights", "parameter", "descend", "patch", "split", "cm-family", "verify",
)


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _load(text: str):
    """A JSON document given inline or as a path (prefix @ optional)."""
    if text.startswith("@"):
        text = text[1:]
    stripped = text.lstrip()
    if not stripped.startswith(("{", "[", '"')):
        try:
            with open(text, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {text}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# verbs


def cmd_classify_nilpotent(a):
    if a.partition:
        lam = tuple(_int_list(a.partition))
        return {"partition": list(lam), "symplectic": symplectic.symplectic_partition_test(lam)}
    if not a.matrix:
        raise InputError("give --matrix or --partition")
    N = matrix_from_json(_load(a.matrix))
    orbit, g = symplectic.classify_nilpotent(N)
    return {
        "orbit": orbit.label,
        "rank": orbit.rank,
        "partition": list(jordan_data(N)[0]),
        "certificate": matrix_to_json(g),
        "similitude": symplectic.similitude(g),
    }


def _pair_report(w):
    out = {"pair": wd_to_json(w), "N_rank": w.N.rank(), "indecomposable": weil_deligne.is_indecomposable(w)}
    if w.dim == 4 and symplectic.in_lie_algebra(w.N):
        out["orbit"] = symplectic.classify_nilpotent(w.N)[0].label
    out["filtration"] = weil_deligne.monodromy_filtration(w.N).graded_dims()
    return out


def _parameter_pair(doc):
    if "steinberg" in doc:
        q = Fraction(str(doc["q"]))
        return weil_deligne.steinberg_parameter(doc["steinberg"], q, scalar_from_json(doc.get("twist", "1"), q))
    if "alphas" in doc:
        q = Fraction(str(doc["q"]))
        alphas = [scalar_from_json(x, q) for x in doc["alphas"]]
        part = doc.get("partition")
        if not isinstance(part, list):
            raise SerializationError("parameter needs a partition list")
        return weil_deligne.wd_from_parameter(weil_deligne.SL2Parameter.unramified(alphas, part, q))
    return wd_from_json(doc)


def cmd_wd(a):
    w = _parameter_pair(_load(a.parameter))
    if a.semisimplify:
        w = weil_deligne.frobenius_semisimplify(w)
    return _pair_report(w)


def cmd_purity(a):
    w = _parameter_pair(_load(a.pair))
    filt = weil_deligne.monodromy_filtration(w.N)
    graded = {k: weil_deligne.eigenvalue_weights(Fk, w.q) for k, Fk in weil_deligne.graded_frobenius(w, filt).items()}
    return {"weight": a.weight, "pure": weil_deligne.purity_check(w, a.weight), "graded_weights": graded}


def cmd_base_change(a):
    w = _parameter_pair(_load(a.pair))
    sub = None
    if a.kind == "ramified":
        if not a.subgroup:
            raise InputError("ramified base change needs --subgroup")
        sub = subgroup_from_json(w.model.group, _load(a.subgroup))
    return _pair_report(weil_deligne.local_base_change(w, a.kind, sub))


def cmd_table(a):
    if a.type:
        row = gsp4_tables.table_row(a.type)
        out = row.as_dict()
        out["dims_tuple"] = list(row.dims)
        out["corollary"] = gsp4_tables.monodromy_rank_equivalences(row)
        return out
    if a.format == "text":
        return gsp4_tables.table_text()
    return json.loads(gsp4_tables.table_json())


def cmd_classify_dims(a):
    dims = _int_list(a.dims)
    if len(dims) != 5:
        raise InputError("--dims needs five integers (K, Kt, JP, JQ, I)")
    return {"dims": dims, "type": gsp4_tables.classify_from_dims(dims)}


def cmd_conductor(a):
    doc = _load(a.rep)
    G = group_from_json(_need_key(doc, "group"))
    H = subgroup_from_json(G, doc.get("subgroup"))
    r = rep_from_json(H, _need_key(doc, "rep"))
    fdoc = _load(a.filtration)
    groups = [subgroup_from_json(G, x) for x in _need_key(fdoc, "groups")]
    filt = conductors.RamificationFiltration(groups, genuine=bool(fdoc.get("genuine", False)))
    if a.kind == "artin":
        return {"artin": conductors.artin_conductor(r, filt)}
    if a.kind == "swan":
        return {"swan": conductors.swan_conductor(r, filt)}
    rep = conductors.swan_depth_identity(r, filt)
    rep.pop("datum")
    return rep


def _need_key(doc, key):
    if not isinstance(doc, dict) or key not in doc:
        raise SerializationError(f"missing key {key!r}")
    return doc[key]


def cmd_depth(a):
    return {"f": a.f, "n": a.n, "depth": conductors.depth_from_conductor(a.f, a.n)}


def cmd_weights(a):
    wd = hodge_tate.WeightData(a.mu1, a.mu2, a.w)
    par = hodge_tate.parameter_from_weights(wd)
    out = {
        "mu": [a.mu1, a.mu2],
        "w": a.w,
        "nu": [wd.nu1, wd.nu2],
        "delta": wd.delta,
        "motivic_weight": wd.bold_w,
        "ht": list(hodge_tate.ht_weights(wd)),
        "blattner": hodge_tate.blattner(wd.nu1, wd.nu2),
        "exponents": list(par.exponents),
        "hodge_types": par.hodge_types(),
    }
    if a.b is not None:
        out["b"] = a.b
        out["clozel"] = list(hodge_tate.clozel_quadruple(a.b, wd.bold_w, wd.n, wd.n_prime))
        out["clozel_weights"] = list(hodge_tate.clozel_weights(wd, a.b))
    return out


def cmd_parameter(a):
    if a.mu0 is not None:
        if a.nu1 is None or a.nu2 is None:
            raise InputError("--mu0 needs --nu1 and --nu2")
        p = hodge_tate.archimedean_parameter(a.mu0, a.nu1, a.nu2)
        return {"mu0": p.mu0, "nu": [p.nu1, p.nu2], "exponents": list(p.exponents),
                "j_image": matrix_to_json(p.j_image), "hodge_types": p.hodge_types(),
                "minus_one": p.minus_one_sign()}
    if a.n is None:
        raise InputError("give --n (and --lam) or --mu0/--nu1/--nu2")
    p = hodge_tate.gl2_parameter(a.n, Fraction(a.lam))
    return {"n": p.n, "lam": p.lam, "norm_power": p.norm_power, "exponents": list(p.exponents),
            "j_image": matrix_to_json(p.j_image), "bounded": p.bounded, "det_norm_power": p.det_norm_power,
            "det_j": p.det_j}


def cmd_descend(a):
    return hodge_tate.descent_condition(a.n, Fraction(a.lam), a.n_prime, Fraction(a.lam_prime))


def _certificate_json(cert):
    ledger = cert.ledger.as_dict()
    return {
        "rho": rep_to_json(cert.rho),
        "character": cert.rho.character,
        "unique": cert.unique,
        "base": cert.base,
        "reference": cert.reference,
        "ledger": ledger,
        "twist_multiplicities": {str(k): {str(m): v for m, v in d.items()} for k, d in cert.twist_multiplicities.items()},
        "demands": [d.as_dict() for d in cert.demands],
        "transcript": cert.transcript,
        "layers": [{"layer": lc["layer"], "character": lc["certificate"].rho.character} for lc in cert.layers],
    }


def cmd_patch(a):
    fam = family_from_json(_load(a.family))
    is_tower = isinstance(fam, SolvableTower)
    if a.solvable or is_tower:
        if not is_tower:
            raise InputError("--solvable needs members given with chains")
        runner = lambda: patch_solvable(fam)  # noqa: E731
    else:
        runner = lambda: patch(fam)  # noqa: E731
    try:
        out = {"status": "unique", "certificate": _certificate_json(runner())}
    except PatchAmbiguity as amb:
        out = {"status": "ambiguous", "candidates": [rep_to_json(r) for r in amb.candidates],
               "characters": [r.character for r in amb.candidates]}
    if a.oracle:
        if is_tower:
            if fam.height != 1:
                raise InputError("--oracle applies to height-one families")
            fam = fam.flat_family()
        out["oracle"] = compare_with_oracle(fam)
    return out


def cmd_split(a):
    return {"d": a.d, "p": a.p, "splitting": quadratic_splitting(a.d, a.p)}


def cmd_cm_family(a):
    return cm_family_search(_int_list(a.primes) if a.primes else [], a.bound)


def cmd_verify(a):
    fam = family_from_json(_load(a.family))
    if isinstance(fam, SolvableTower):
        raise InputError("verify needs a height-one family")
    doc = _load(a.rep)
    if isinstance(doc, dict) and "certificate" in doc:
        doc = doc["certificate"]["rho"]
    elif isinstance(doc, dict) and "rho" in doc:
        doc = doc["rho"]
    rho = rep_from_json(fam.group.whole(), doc)
    return {"verified": verify_patch(rho, fam)}


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wdpatch", description="Weil-Deligne calculus, GSp(4) tables and patching.")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)

    s = sub.add_parser("classify-nilpotent")
    s.add_argument("--matrix")
    s.add_argument("--partition")
    s.set_defaults(fn=cmd_classify_nilpotent)

    s = sub.add_parser("wd")
    s.add_argument("--parameter", required=True)
    s.add_argument("--semisimplify", action="store_true")
    s.set_defaults(fn=cmd_wd)

    s = sub.add_parser("purity")
    s.add_argument("--pair", required=True)
    s.add_argument("--weight", type=int, required=True)
    s.set_defaults(fn=cmd_purity)

    s = sub.add_parser("base-change")
    s.add_argument("--pair", required=True)
    s.add_argument("--kind", choices=["unramified", "ramified"], default="unramified")
    s.add_argument("--subgroup")
    s.set_defaults(fn=cmd_base_change)

    s = sub.add_parser("table")
    s.add_argument("--type")
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.set_defaults(fn=cmd_table)

    s = sub.add_parser("classify-dims")
    s.add_argument("--dims", required=True)
    s.set_defaults(fn=cmd_classify_dims)

    s = sub.add_parser("conductor")
    s.add_argument("--rep", required=True)
    s.add_argument("--filtration", required=True)
    s.add_argument("--kind", choices=["artin", "swan", "report"], default="report")
    s.set_defaults(fn=cmd_conductor)

    s = sub.add_parser("depth")
    s.add_argument("--f", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(fn=cmd_depth)

    s = sub.add_parser("weights")
    s.add_argument("--mu1", type=int, required=True)
    s.add_argument("--mu2", type=int, required=True)
    s.add_argument("--w", type=int, required=True)
    s.add_argument("--b", type=int)
    s.set_defaults(fn=cmd_weights)

    s = sub.add_parser("parameter")
    s.add_argument("--n", type=int)
    s.add_argument("--lam", default="0")
    s.add_argument("--mu0", type=int)
    s.add_argument("--nu1", type=int)
    s.add_argument("--nu2", type=int)
    s.set_defaults(fn=cmd_parameter)

    s = sub.add_parser("descend")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--lam", required=True)
    s.add_argument("--n-prime", type=int, required=True)
    s.add_argument("--lam-prime", required=True)
    s.set_defaults(fn=cmd_descend)

    s = sub.add_parser("patch")
    s.add_argument("--family", required=True)
    s.add_argument("--solvable", action="store_true")
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(fn=cmd_patch)

    s = sub.add_parser("split")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.set_defaults(fn=cmd_split)

    s = sub.add_parser("cm-family")
    s.add_argument("--primes", default="")
    s.add_argument("--bound", type=int, required=True)
    s.set_defaults(fn=cmd_cm_family)

    s = sub.add_parser("verify")
    s.add_argument("--rep", required=True)
    s.add_argument("--family", required=True)
    s.set_defaults(fn=cmd_verify)
    return p


def schema_text(verb: str) -> str:
    return resources.files("wdpatch").joinpath("schemas", f"{verb}.json").read_text(encoding="utf-8")


def _emit_error(kind: str, message: str, stream):
    stream.write(json.dumps({"error": kind, "message": message}, sort_keys=True) + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    if "--schema" in argv:
        verb = argv[0] if argv and argv[0] in VERBS else None
        if verb is None:
            _emit_error("usage", f"--schema needs a verb, one of {', '.join(VERBS)}", stderr)
            return 2
        stdout.write(schema_text(verb))
        return 0
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb is None:
            raise InputError(f"missing verb, expected one of {', '.join(VERBS)}")
        result = args.fn(args)
    except (InputError, SerializationError) as exc:
        _emit_error("malformed_input", str(exc), stderr)
        return 2
    except weil_deligne.WeightError as exc:
        _emit_error("weight_undeterminable", str(exc), stderr)
        return 1
    except FamilyNotGeneral as exc:
        msg = str(exc)
        if getattr(exc, "layer", None):
            msg += f" (layer {exc.layer})"
        if exc.demand is not None:
            msg += f"; unmet demand: {exc.demand.label}"
        _emit_error("family_not_general", msg, stderr)
        return 1
    except (ValueError, ArithmeticError, NotNilpotent) as exc:
        _emit_error("domain_error", f"{type(exc).__name__}: {exc}", stderr)
        return 1
    if isinstance(result, str):
        stdout.write(result + "\n")
    else:
        stdout.write(json.dumps(to_jsonable(result), sort_keys=True, indent=2) + "\n")
    return 0


def main():  # pragma: no cover
    sys.exit(run())
