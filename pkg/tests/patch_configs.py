"""Families used by the oracle comparison: restrictions of representations
of small groups to some or all of their prime-index normal subgroups."""

from __future__ import annotations

import itertools

from wdpatch.groups import direct_sum, irreducibles, named_group, prime_index_normal_subgroups
from wdpatch.patching import family_from_character

GROUPS = ["V4", "Z4", "Z6", "S3", "Z4xZ2", "D4", "Q8", "A4", "D6", "Dic12", "S4"]


def _sources(G, max_dim=4, max_pairs=3):
    irr = irreducibles(G)
    out = [(f"irr{k}", r) for k, r in enumerate(irr) if r.dim <= max_dim]
    pairs = [(a, b) for a, b in itertools.combinations_with_replacement(range(len(irr)), 2)
             if irr[a].dim + irr[b].dim <= max_dim]
    # spread the chosen sums over the list instead of taking the first few
    step = max(1, len(pairs) // max_pairs)
    for a, b in pairs[::step][:max_pairs]:
        out.append((f"irr{a}+irr{b}", direct_sum([irr[a], irr[b]])))
    return out


def configurations(groups=GROUPS):
    """Yield (label, family) pairs; each group contributes full and partial families."""
    for name in groups:
        G = named_group(name)
        subs = [h for h, _ in prime_index_normal_subgroups(G)]
        choices = [("all", subs)]
        if len(subs) > 1:
            choices.append(("one", subs[:1]))
        for src_label, rep in _sources(G):
            for sub_label, chosen in choices:
                yield f"{name}/{src_label}/{sub_label}", family_from_character(G, chosen, rep)
