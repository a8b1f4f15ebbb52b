"""Batch command-line front end emitting deterministic JSON or text tables.

Exit codes: 0 success, 2 invalid input, 1 internal invariant violation.
The JSON schema is {"schema_version", "request", "result"} with canonical
key order; identical requests produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import os
import sys as _sys

from . import dynkin, tangent
from .repcalc import weyl_dim
from .rootsys import RootSystem, build_root_system, degree_labels
from .orbits import (
    OrbitDatum,
    closure_contains,
    enumerate_canonical_orbits,
    enumerate_general_orbits,
    face_pi_y,
    has_finitely_many_orbits,
    is_smooth_canonical,
    modality_canonical,
    weight_cone,
)

SCHEMA_VERSION = 1
PRESETS_ENV = "CEORBITS_PRESETS"


def _parse_levi(sys: RootSystem, text: str) -> frozenset:
    text = text.strip().lower()
    if text in ("", "empty", "none"):
        return frozenset()
    if text == "full":
        return frozenset(sys.nodes)
    try:
        nodes = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ValueError(f"cannot parse levi spec {text!r}") from exc
    return sys.check_nodes(nodes)


def _parse_generators(sys: RootSystem, text: str):
    weights = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        coords = [int(tok) for tok in part.split(",")]
        if len(coords) != sys.rank:
            raise ValueError(f"generator {part!r} must have {sys.rank} coordinates")
        if any(c < 0 for c in coords):
            raise ValueError(f"generator {part!r} is not dominant")
        weights.append(sys.weight(coords))
    if not weights:
        raise ValueError("no generator weights given")
    return weights


def _orbit_record(o: OrbitDatum) -> dict:
    rec = {
        "pi_y": sorted(o.pi_y) if o.pi_y is not None else None,
        "boundary": sorted(o.boundary) if o.boundary is not None else None,
        "d_g": o.d_g,
        "dim_orbit": o.dim_g_orbit,
        "dim_y": o.dim_y,
        "stab": {
            "unipotent_dim": o.stab_unipotent_dim,
            "levi_nodes": sorted(o.stab_levi_semisimple_nodes)
            if o.stab_levi_semisimple_nodes is not None
            else None,
            "torus_dim": o.stab_torus_dim,
        },
    }
    if o.face is not None:
        rec["face"] = {
            "dim": o.face.dim,
            "tight_halfspaces": sorted(o.face.tight_halfspace_indices),
            "generators": [list(g) for g in o.face.generators()],
        }
        rec["torus_saturated"] = o.torus_saturated
    return rec


def _closure_pairs(data: list[OrbitDatum]) -> list[list[int]]:
    pairs = []
    for i, a in enumerate(data):
        for j, b in enumerate(data):
            if i != j and closure_contains(a, b):
                pairs.append([i, j])
    return pairs


def _cmd_rootinfo(sys: RootSystem, args) -> dict:
    full = frozenset(sys.nodes)
    result = {
        "components": [f"{l}{n}" for l, n in sys.components],
        "rank": sys.rank,
        "cartan": [list(row) for row in sys.cartan],
        "positive_root_count": sys.num_positive_roots(),
        "fundamental_dims": {
            str(i): weyl_dim(sys, full, sys.fundamental_weight(i)) for i in sys.nodes
        },
    }
    if sys.is_simple():
        result["extreme_nodes"] = sorted(dynkin.extreme_nodes(sys))
        result["singularity"] = dynkin.singularity(sys)
        result["degree_labels"] = {
            str(i): [str(x) for x in degree_labels(sys, i)] for i in sys.nodes
        }
    return result


def _cmd_orbits(sys: RootSystem, args) -> dict:
    levi = _parse_levi(sys, args.levi)
    data = enumerate_canonical_orbits(sys, levi)
    return {
        "levi": sorted(levi),
        "orbit_count": len(data),
        "modality": modality_canonical(sys, levi),
        "finite": has_finitely_many_orbits(sys, levi),
        "orbits": [_orbit_record(o) for o in data],
        "closure_pairs": _closure_pairs(data),
        "monoid_note": "orbit poset shared with the (L x L)-orbits of the associated algebraic monoid",
    }


def _cmd_modality(sys: RootSystem, args) -> dict:
    levi = _parse_levi(sys, args.levi)
    return {"levi": sorted(levi), "modality": modality_canonical(sys, levi)}


def _cmd_finite(sys: RootSystem, args) -> dict:
    levi = _parse_levi(sys, args.levi)
    return {"levi": sorted(levi), "finite": has_finitely_many_orbits(sys, levi)}


def _cmd_smooth(sys: RootSystem, args) -> dict:
    levi = _parse_levi(sys, args.levi)
    smooth, report = is_smooth_canonical(sys, levi)
    return {
        "levi": sorted(levi),
        "smooth": smooth,
        "components": [
            {"nodes": sorted(entry["nodes"]), "role": entry["role"]} for entry in report
        ],
    }


def _cmd_tangent(sys: RootSystem, args) -> dict:
    levi = _parse_levi(sys, args.levi)
    comps = []
    total = 0
    total_ce = 0
    offset = 0
    for (letter, n), nodes in zip(sys.components, sys.component_nodes):
        local = build_root_system([(letter, n)])
        local_levi = frozenset(i - offset for i in levi & nodes)
        if local_levi == frozenset(local.nodes):
            raise ValueError(
                f"component {letter}{n} has the full Levi: its factor is the group itself "
                "and the embedding has no fixed point"
            )
        reports, comp_total = tangent.tangent_report(local, local_levi)
        comp_ce = tangent.dim_CE(local, local_levi)
        comps.append(
            {
                "component": f"{letter}{n}",
                "nodes": sorted(nodes),
                "dim_ce": comp_ce,
                "total_dim": comp_total,
                "summands": [
                    {
                        "node": r.node + offset,
                        "retained": r.retained,
                        "g_dim": r.g_dim,
                        "l_dim": r.l_dim,
                        "contribution": r.contribution,
                    }
                    for r in reports
                ],
            }
        )
        total += comp_total
        total_ce += comp_ce
        offset += n
    return {
        "levi": sorted(levi),
        "dim_ce": total_ce,
        "total_dim": total,
        "components": comps,
    }


def _cmd_general(sys: RootSystem, args) -> dict:
    levi = _parse_levi(sys, args.levi)
    gens = _parse_generators(sys, args.generators)
    data = enumerate_general_orbits(sys, levi, gens)
    full = frozenset(sys.nodes)
    summands = []
    for w in gens:
        g_dim = weyl_dim(sys, full, w)
        l_dim = weyl_dim(sys, levi, w)
        summands.append(
            {
                "weight": list(w.fundamental()),
                "g_dim": g_dim,
                "l_dim": l_dim,
                "hom_dim": g_dim * l_dim,
            }
        )
    sigma, sigma_plus = weight_cone(sys, levi, gens)
    result = {
        "levi": sorted(levi),
        "generators": [list(w.fundamental()) for w in gens],
        "ambient_summands": summands,
        "ambient_dim": sum(s["hom_dim"] for s in summands),
        "sigma": {
            "dim": sigma.dim,
            "lineality_dim": sigma.lineality_dim,
            "rays": [list(g) for g in sigma.generators],
        },
        "sigma_plus": {
            "dim": sigma_plus.dim,
            "rays": [list(g) for g in sigma_plus.generators],
        },
        "orbit_count": len(data),
        "orbits": [_orbit_record(o) for o in data],
        "closure_pairs": _closure_pairs(data),
        "monoid_note": "orbit poset shared with the (L x L)-orbits of the associated algebraic monoid",
    }
    if args.crosscheck:
        canon = enumerate_canonical_orbits(sys, levi)
        matched, detail = _crosscheck(sys, levi, data, canon)
        result["crosscheck"] = {"matches": matched, "detail": detail}
        if not matched:
            raise AssertionError(f"general/canonical cross-check failed: {detail}")
    return result


def _crosscheck(sys, levi, general_data, canonical_data):
    """Match general orbits to canonical ones via Pi_Y and compare all numbers."""
    canon_by_piy = {o.pi_y: o for o in canonical_data}
    if len(general_data) != len(canonical_data):
        return False, "orbit counts differ"
    mapping = {}
    for i, o in enumerate(general_data):
        piy = face_pi_y(sys, levi, o.face)
        if piy is None or piy not in canon_by_piy:
            return False, f"face {i} does not match an admissible Pi_Y"
        c = canon_by_piy[piy]
        if (o.d_g, o.dim_stab_g, o.dim_y) != (c.d_g, c.dim_stab_g, c.dim_y):
            return False, f"numbers differ on Pi_Y = {sorted(piy)}"
        mapping[i] = piy
    if len(set(mapping.values())) != len(canonical_data):
        return False, "face-to-orbit map is not a bijection"
    for i, a in enumerate(general_data):
        for j, b in enumerate(general_data):
            if i == j:
                continue
            if closure_contains(a, b) != (mapping[i] <= mapping[j]):
                return False, "closure order disagrees"
    return True, "poset-isomorphic with equal d_G and dimensions"


_COMMANDS = {
    "rootinfo": _cmd_rootinfo,
    "orbits": _cmd_orbits,
    "modality": _cmd_modality,
    "finite": _cmd_finite,
    "smooth": _cmd_smooth,
    "tangent": _cmd_tangent,
    "general": _cmd_general,
}


def _format_table(result: dict, indent: str = "") -> str:
    lines = []
    for key in sorted(result):
        value = result[key]
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_format_table(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                lines.append(f"{indent}{key}[{i}]:")
                lines.append(_format_table(item, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ceorbits",
        description="Orbit structure, modality, smoothness and minimal ambient modules "
        "of canonical embeddings of G/Ru(P), in exact arithmetic.",
    )
    parser.add_argument("--preset", help=f"named request from the file ${PRESETS_ENV}")
    sub = parser.add_subparsers(dest="command")
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("group", help="group spec, e.g. A3 or A3xA1 (Bourbaki numbering)")
        p.add_argument("--levi", default="empty", help="node list '1,2', or 'empty'/'full'")
        p.add_argument("--format", choices=("json", "table"), default="json")
        if name == "general":
            p.add_argument(
                "--generators",
                required=True,
                help="semicolon-separated weights in fundamental coordinates, e.g. '1,0,0;0,0,1'",
            )
            p.add_argument("--crosscheck", action="store_true")
    return parser


def _apply_preset(argv: list[str]) -> list[str]:
    if "--preset" not in argv:
        return argv
    idx = argv.index("--preset")
    name = argv[idx + 1]
    path = os.environ.get(PRESETS_ENV)
    if not path:
        raise ValueError(f"--preset given but ${PRESETS_ENV} is not set")
    with open(path, "r", encoding="utf-8") as fh:
        presets = json.load(fh)
    if name not in presets:
        raise ValueError(f"preset {name!r} not found in {path}")
    p = presets[name]
    argv = [p["command"], p["group"]]
    if "levi" in p:
        argv += ["--levi", str(p["levi"])]
    if "generators" in p:
        argv += ["--generators", str(p["generators"])]
    if "crosscheck" in p and p["crosscheck"]:
        argv += ["--crosscheck"]
    if "format" in p:
        argv += ["--format", str(p["format"])]
    return argv


def main(argv=None) -> int:
    argv = list(_sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_preset(argv)
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
        if args.command is None:
            parser.print_usage(_sys.stderr)
            return 2
        sys = build_root_system(args.group)
        result = _COMMANDS[args.command](sys, args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 2
    except Exception as exc:
        print(f"internal invariant violation: {exc}", file=_sys.stderr)
        return 1
    payload = {
        "schema_version": SCHEMA_VERSION,
        "request": {
            "command": args.command,
            "group": args.group,
            "levi": args.levi,
            "generators": getattr(args, "generators", None),
            "format": args.format,
        },
        "result": result,
    }
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(_format_table(payload))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
