"""JSON-ready class reports and their delimited text rendering."""

from __future__ import annotations

import time

from .classify import IsogenyClass, admissible_groups, cross_checked
from .errors import BoundExceeded
from .lattice import Order
from .points import (
    Regime,
    default_depth,
    dual_group,
    functor_regime,
    group_from_order,
    groups_by_multiplicator,
    not_self_dual_witness,
)
from .primes import cm_type_at, singular_primes
from .weil import WeilPoly

SCHEMA_VERSION = "1.0"
ORDER_CHOICES = ("all", "maximal", "frobenius")


def _order_entry(C: IsogenyClass, S: Order, n: int, overs):
    R, O = C.R, C.O
    res = group_from_order(S, C.W, n)
    entry = {
        "key": S.key(),
        "index_in_maximal": S.index_in(O),
        "index_over_frobenius": R.index_in(S),
        "conjugation_stable": S.conjugate() == S,
        "singular_types": [[P.p, P.f, cm_type_at(S, P)] for P in singular_primes(S, O)],
        **res.to_dict(),
        "dual_group": dual_group(S, C.W, n).to_list(),
        "not_self_dual_witness": None,
    }
    if functor_regime(C.W) is not Regime.NONE and overs is not None:
        w = not_self_dual_witness(S, C.W, overs)
        if w is not None:
            entry["not_self_dual_witness"] = {"order": w.S.key(), "p": w.prime.p, "f": w.prime.f}
    return entry


def build_report(
    W: WeilPoly,
    label: str | None = None,
    n: int = 1,
    orders: str = "all",
    cap: int = 10**6,
    search_depth=None,
    timings: bool = True,
) -> dict:
    """Full classification of one squarefree class.

    search_depth: None skips the ideal search, "auto" picks the default depth,
    an integer m searches lattices between m O_K and O_K.
    """
    if orders not in ORDER_CHOICES:
        raise ValueError(f"orders must be one of {ORDER_CHOICES}")
    clock = {}
    t0 = time.perf_counter()
    C = IsogenyClass(W)
    cyc, rich, methods = cross_checked(W, C)
    clock["classify"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    overs = None
    overorder_count = None
    try:
        overs = C.overorders
        overorder_count = len(overs)
    except BoundExceeded:
        pass
    if orders == "all" and overs is not None:
        chosen = overs
    elif orders == "frobenius":
        chosen = [C.R]
    else:
        chosen = [C.O]
    per_order = [_order_entry(C, S, n, overs) for S in chosen]
    clock["orders"] = time.perf_counter() - t0

    search = None
    if search_depth is not None and overs is not None:
        t0 = time.perf_counter()
        m = default_depth(C.R, C.O, W.N) if search_depth == "auto" else int(search_depth)
        try:
            found = groups_by_multiplicator(W, m, overs, C.O, cap=cap, n=n)
            search = {
                "depth": m,
                "groups": {S.key(): sorted(G.to_list() for G in gs) for S, gs in found.items()},
            }
        except BoundExceeded as exc:
            search = {"depth": m, "error": str(exc)}
        clock["search"] = time.perf_counter() - t0

    witnesses = [e["not_self_dual_witness"] for e in per_order if e["not_self_dual_witness"]]
    rep = {
        "schema_version": SCHEMA_VERSION,
        "label": label if label is not None else W.label(),
        "q": W.q,
        "g": W.g,
        "h": list(W.h),
        "n": n,
        "N": W.N,
        "flags": {"squarefree": W.squarefree, "ordinary": W.ordinary, "has_real_roots": W.has_real_roots},
        "cyclic": {"verdict": cyc, "methods_agree": True, "methods": methods["cyclic"]},
        "rich": {"verdict": rich, "methods_agree": True, "methods": methods["rich"]},
        "admissible_groups": [G.to_list() for G in admissible_groups(W)],
        "conductor_index": C.conductor_index,
        "overorder_count": overorder_count,
        "per_order": per_order,
        "duality": {
            "self_dual_obstruction": witnesses[0] if witnesses else None,
            "dual_pairs": [
                {"order": e["key"], "group": e["group"], "dual_group": e["dual_group"]}
                for e in per_order
                if e["group"] != e["dual_group"]
            ],
        },
        "ideal_search": search,
    }
    if timings:
        rep["timings"] = {k: round(v, 4) for k, v in clock.items()}
    return rep


def _fmt_group(ds) -> str:
    return " x ".join(f"Z/{d}" for d in ds) if ds else "0"


def render_text(rep: dict, sep: str = "\t") -> str:
    """Delimited key/value lines followed by one row per order."""
    lines = [
        sep.join(["label", str(rep["label"])]),
        sep.join(["q", str(rep["q"])]),
        sep.join(["g", str(rep["g"])]),
        sep.join(["h", ",".join(map(str, rep["h"]))]),
        sep.join(["N", str(rep["N"])]),
        sep.join(["ordinary", str(rep["flags"]["ordinary"])]),
        sep.join(["cyclic", str(rep["cyclic"]["verdict"])]),
        sep.join(["rich", str(rep["rich"]["verdict"])]),
        sep.join(["conductor_index", str(rep["conductor_index"])]),
        sep.join(["overorders", str(rep["overorder_count"])]),
        sep.join(["admissible_groups", "; ".join(_fmt_group(g) for g in rep["admissible_groups"])]),
        "",
        sep.join(["order", "[O_K:S]", "[S:R]", "conj_stable", "types", "group", "dual_group", "basis", "not_self_dual"]),
    ]
    for e in rep["per_order"]:
        types = ",".join(f"{p}^{f}:{t}" for p, f, t in e["singular_types"]) or "-"
        lines.append(
            sep.join(
                [
                    e["key"],
                    str(e["index_in_maximal"]),
                    str(e["index_over_frobenius"]),
                    str(e["conjugation_stable"]),
                    types,
                    _fmt_group(e["group"]),
                    _fmt_group(e["dual_group"]),
                    e["basis_of_claim"],
                    "yes" if e["not_self_dual_witness"] else "-",
                ]
            )
        )
    s = rep.get("ideal_search")
    if s and "groups" in s:
        lines.append("")
        lines.append(sep.join(["search_depth", str(s["depth"])]))
        for key, gs in s["groups"].items():
            lines.append(sep.join([key, "; ".join(_fmt_group(g) for g in gs) or "-"]))
    return "\n".join(lines) + "\n"
