"""Command-line surface: verification, construction and decomposition runs.

Every subcommand prints a single JSON report on stdout (sorted keys, so
identical inputs and seed give identical bytes apart from the timing
block) and logs human-readable progress to stderr.  Exit codes: 0 for
success, 1 when a verification fails (the report carries a witness),
2 for malformed input files.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from . import annular_bh, coho, grp, phase, rep, tube_diag

DEFAULT_MAX_EXHAUSTIVE = 24


class InputError(ValueError):
    pass


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _sha256(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError(f"{path} must hold a JSON object")
    return obj


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, phase.Phase):
        return str(x)
    if is_dataclass(x) and not isinstance(x, type):
        return _jsonable(asdict(x))
    if isinstance(x, dict):
        return {_key(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, set):
        return [_jsonable(v) for v in sorted(x, key=str)]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, complex):
        return [x.real, x.imag]
    return x


def _key(k):
    if isinstance(k, tuple):
        return ",".join(str(v) for v in k)
    return str(k)


def _check_dict(res) -> dict:
    return {"name": res.name, "status": "pass" if res.ok else "fail",
            "witness": _jsonable(res.witness), "detail": res.detail}


def _skip(name: str, why: str) -> dict:
    return {"name": name, "status": "skip", "witness": None, "detail": why}


def _load_group(path: str) -> grp.GroupTable:
    obj = _load_json(path)
    try:
        return grp.group_from_json(obj)
    except (KeyError, TypeError) as exc:
        raise InputError(f"{path}: malformed group payload: {exc}") from exc


def _load_cocycle(path: str, group: grp.GroupTable) -> phase.Cocycle3:
    obj = _load_json(path)
    try:
        return phase.cocycle_from_json(group, obj)
    except (KeyError, TypeError) as exc:
        raise InputError(f"{path}: malformed cocycle payload: {exc}") from exc


def _load_setup(path: str) -> coho.BHSetup:
    obj = _load_json(path)
    try:
        return coho.bh_setup_from_json(obj)
    except (KeyError, TypeError) as exc:
        raise InputError(f"{path}: malformed setup payload: {exc}") from exc
    except grp.GroupError as exc:
        raise InputError(f"{path}: invalid group in setup: {exc}") from exc


# -- subcommand handlers -------------------------------------------------------


def _cmd_verify_group(args) -> tuple[list, dict]:
    obj = _load_json(args.group)
    try:
        group = grp.group_from_json(obj)
    except grp.GroupError as exc:
        return ([{"name": "group-table", "status": "fail",
                  "witness": _jsonable(exc.witness), "detail": str(exc)}], {})
    except (KeyError, TypeError) as exc:
        raise InputError(f"{args.group}: malformed group payload: {exc}") from exc
    return ([{"name": "group-table", "status": "pass", "witness": None,
              "detail": f"order {group.order}"}],
            {"order": group.order})


def _cmd_verify_cocycle(args) -> tuple[list, dict]:
    group = _load_group(args.group)
    omega = _load_cocycle(args.cocycle, group)
    res = phase.cocycle3_check(omega)
    checks = [_check_dict(res)]
    if res.ok:
        checks.append({"name": "normalized", "witness": None, "detail": "",
                       "status": "pass" if phase.is_normalized(omega) else "fail"})
    return checks, {}


def _cmd_normalize(args) -> tuple[list, dict]:
    group = _load_group(args.group)
    omega = _load_cocycle(args.cocycle, group)
    res = phase.cocycle3_check(omega)
    if not res.ok:
        return [_check_dict(res)], {}
    out = phase.normalize3(omega)
    checks = [_check_dict(res),
              _check_dict(phase.cocycle3_check(out)),
              {"name": "normalized", "witness": None, "detail": "",
               "status": "pass" if phase.is_normalized(out) else "fail"}]
    return checks, {"cocycle": phase.cocycle_to_json(out)}


def _cmd_gauge_fix(args) -> tuple[list, dict]:
    setup = _load_setup(args.bh)
    try:
        omega_prime, f = coho.gauge_fix_bh(setup)
    except coho.BHSetupError as exc:
        return ([{"name": f"setup:{exc.invariant}", "status": "fail",
                  "witness": _jsonable(exc.witness), "detail": str(exc)}], {})
    G = setup.group
    checks = [_check_dict(phase.cocycle3_check(omega_prime))]
    checks.append({"name": "normalized", "witness": None, "detail": "",
                   "status": "pass" if phase.is_normalized(omega_prime) else "fail"})
    for name, sub in (("restriction-H", setup.H), ("restriction-K", setup.K)):
        w = phase.restrict_trivial_on(omega_prime, sub)
        checks.append({"name": name, "witness": _jsonable(w), "detail": "",
                       "status": "pass" if w is None else "fail"})
    checks.append(_check_dict(
        coho.gl_relations_check(G, setup.H, setup.K, omega_prime)))
    d2f = phase.coboundary2(G, f)
    coherent = all(
        (d2f[i].q + setup.omega.values[i].q - omega_prime.values[i].q) % 1 == 0
        for i in range(len(d2f)))
    checks.append({"name": "coboundary-relation", "witness": None, "detail": "",
                   "status": "pass" if coherent else "fail"})
    data = {"cocycle": phase.cocycle_to_json(omega_prime),
            "cochain": phase.table2_to_json(f)}
    return checks, data


def _cmd_tube(args) -> tuple[list, dict]:
    group = _load_group(args.group)
    omega = _load_cocycle(args.cocycle, group)
    res = phase.cocycle3_check(omega)
    if not res.ok:
        return [_check_dict(res)], {}
    alg = tube_diag.TubeAlgebra(group, omega)
    checks = [_check_dict(res)]
    data: dict = {"basis_count": len(alg.labels())}
    if args.action == "build":
        data["structure_constants"] = tube_diag.structure_constants_json(alg)
    elif args.action == "check":
        exhaustive = 0 if group.order <= args.max_exhaustive \
            else args.max_exhaustive ** 4
        for r in alg.check_all(exhaustive, seed=args.seed):
            checks.append(_check_dict(r))
        if group.order <= args.max_exhaustive:
            checks.append(_check_dict(tube_diag.verify_star_iso(group, omega)))
        else:
            checks.append(_skip("star-isomorphism",
                                f"group order {group.order} above bound"))
    elif args.action == "simples":
        counts = tube_diag.simple_count(group, omega)
        data["per_class"] = {str(k): v for k, v in counts.per_class.items()}
        data["total"] = counts.total
    return checks, data


def _cmd_bh(args) -> tuple[list, dict]:
    setup = _load_setup(args.bh)
    try:
        setup.validate()
    except coho.BHSetupError as exc:
        return ([{"name": f"setup:{exc.invariant}", "status": "fail",
                  "witness": _jsonable(exc.witness), "detail": str(exc)}], {})
    checks = [{"name": "setup", "status": "pass", "witness": None, "detail": ""}]
    alg = annular_bh.AnnularAlgebra(setup)
    data: dict = {"basis_count": len(alg.labels())}
    if args.action == "build":
        dump = []
        for left in alg.labels():
            for right in alg.labels():
                hit = alg.mult_basis(left, right)
                if hit is None:
                    continue
                ph, lab = hit
                dump.append({
                    "left": [left.h1, left.g1, left.s, left.h2, left.g2],
                    "right": [right.h1, right.g1, right.s, right.h2, right.g2],
                    "scalar": str(ph),
                    "result": [lab.h1, lab.g1, lab.s, lab.h2, lab.g2]})
        data["structure_constants"] = dump
    elif args.action == "check":
        size = len(alg.labels())
        exhaustive = 0 if size <= args.max_exhaustive ** 2 \
            else args.max_exhaustive ** 2
        for r in alg.check_all(exhaustive, seed=args.seed):
            checks.append(_check_dict(r))
        for r in annular_bh.box_checks(alg):
            checks.append(_check_dict(r))
        report = annular_bh.bh_verify_star_iso(setup)
        for conv, r in report.results.items():
            d = _check_dict(r)
            d["name"] = f"star-isomorphism[{conv}]"
            d["status"] = "pass" if r.ok else "info"
            checks.append(d)
        checks.append({"name": "star-isomorphism", "witness": None,
                       "detail": f"passing conventions: {report.passing}",
                       "status": "pass" if report.ok else "fail"})
        data["passing_conventions"] = report.passing
        bad = []
        for g in setup.group.elements():
            try:
                annular_bh.end_xg_algebra(setup, g)
            except ValueError:
                bad.append(g)
        checks.append({"name": "weight-endomorphism-twists", "detail": "",
                       "witness": _jsonable(tuple(bad)) if bad else None,
                       "status": "pass" if not bad else "fail"})
    elif args.action == "simples":
        report = annular_bh.tube_cutdown(setup, seed=args.seed)
        data["per_class"] = {str(k): v
                             for k, v in report.simple_count_full.per_class.items()}
        data["total"] = report.simple_count_full.total
        data["cutdown_total"] = report.simple_count_cutdown
        data["cutdown_weights"] = list(report.weights)
        data["corner_dims"] = {_key(k): v for k, v in report.corner_dims.items()}
        data["simple_objects"] = report.simple_objects
        checks.append({"name": "cutdown-count-agreement", "witness": None,
                       "detail": "", "status":
                       "pass" if report.counts_agree else "fail"})
    return checks, data


def _cmd_rep(args) -> tuple[list, dict]:
    if args.action == "induce":
        group = _load_group(args.group)
        omega = _load_cocycle(args.cocycle, group)
        alg = tube_diag.TubeAlgebra(group, omega)
        blocks = alg.block_algebra()
        if not 0 <= args.class_index < len(blocks.index_sets):
            raise InputError(f"class index {args.class_index} out of range")
        tw = blocks.twists[args.class_index]
        talg = rep.TwistedGroupAlgebra(group, tw.elements, tw)
        if args.rep:
            pi = rep.rep_from_json(_load_json(args.rep), list(tw.elements))
        else:
            pi = rep.regular_representation(talg)
        res = pi.check(talg)
        if not res.ok:
            return [_check_dict(res)], {}
        induced = rep.induce(alg, args.class_index, pi)
        checks = [_check_dict(res), _check_dict(induced.check(alg))]
        return checks, {"representation": rep.rep_to_json(induced)}
    if args.action == "decompose":
        if args.bh:
            setup = _load_setup(args.bh)
            alg = annular_bh.AnnularAlgebra(setup)
        else:
            group = _load_group(args.group)
            omega = _load_cocycle(args.cocycle, group)
            alg = tube_diag.TubeAlgebra(group, omega)
        blocks = rep.decompose(alg, seed=args.seed)
        data = {"blocks": [{"dimension": b.dimension,
                            "multiplicity": b.multiplicity} for b in blocks],
                "distinct": len(blocks)}
        return ([{"name": "decompose", "status": "pass", "witness": None,
                  "detail": f"{len(blocks)} distinct blocks"}], data)
    raise InputError(f"unknown rep action {args.action}")


# -- driver -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tubealg",
        description="exact annular-algebra toolbox for finite groups "
                    "with 3-cocycle data")
    env_max = int(os.environ.get("TUBEALG_MAX_EXHAUSTIVE",
                                 DEFAULT_MAX_EXHAUSTIVE))

    def common(sp):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--max-exhaustive", type=int, default=env_max)

    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify-group", help="validate a group table file")
    sp.add_argument("--group", required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_verify_group, files=lambda a: [a.group])

    sp = sub.add_parser("verify-cocycle", help="check the 3-cocycle law")
    sp.add_argument("--group", required=True)
    sp.add_argument("--cocycle", required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_verify_cocycle,
                    files=lambda a: [a.group, a.cocycle])

    sp = sub.add_parser("normalize", help="kill identity arguments by a coboundary")
    sp.add_argument("--group", required=True)
    sp.add_argument("--cocycle", required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_normalize, files=lambda a: [a.group, a.cocycle])

    sp = sub.add_parser("gauge-fix",
                        help="trivialize (g, l, l^-1) values for l in H or K")
    sp.add_argument("--bh", required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_gauge_fix, files=lambda a: [a.bh])

    for name in ("tube", "bh"):
        sp = sub.add_parser(name, help=f"{name} algebra operations")
        sp.add_argument("action", choices=["build", "check", "simples"])
        if name == "tube":
            sp.add_argument("--group", required=True)
            sp.add_argument("--cocycle", required=True)
            sp.set_defaults(handler=_cmd_tube,
                            files=lambda a: [a.group, a.cocycle])
        else:
            sp.add_argument("--bh", required=True)
            sp.set_defaults(handler=_cmd_bh, files=lambda a: [a.bh])
        common(sp)

    sp = sub.add_parser("rep", help="representation operations")
    sp.add_argument("action", choices=["induce", "decompose"])
    sp.add_argument("--group")
    sp.add_argument("--cocycle")
    sp.add_argument("--bh")
    sp.add_argument("--rep")
    sp.add_argument("--class-index", type=int, default=0)
    common(sp)
    sp.set_defaults(handler=_cmd_rep,
                    files=lambda a: [f for f in (a.group, a.cocycle, a.bh, a.rep)
                                     if f])
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.monotonic()
    report = {
        "command": ["tubealg"] + argv,
        "seed": args.seed,
        "max_exhaustive": args.max_exhaustive,
        "inputs": {},
        "checks": [],
        "data": {},
        "status": "ok",
    }
    code = 0
    try:
        for f in args.files(args):
            report["inputs"][f] = _sha256(f) if os.path.exists(f) else None
            if report["inputs"][f] is None:
                raise InputError(f"input file not found: {f}")
        checks, data = args.handler(args)
        report["checks"] = checks
        report["data"] = _jsonable(data)
        failed = [c for c in checks if c["status"] == "fail"]
        if failed:
            report["status"] = "fail"
            code = 1
            for c in failed:
                _log(f"FAIL {c['name']}: witness={c['witness']}")
        else:
            for c in checks:
                _log(f"{c['status']} {c['name']}")
    except InputError as exc:
        report["status"] = "error"
        report["error"] = str(exc)
        code = 2
        _log(f"input error: {exc}")
    except (grp.GroupError, phase.CocycleError) as exc:
        report["status"] = "error"
        report["error"] = str(exc)
        report["witness"] = _jsonable(getattr(exc, "witness", None))
        code = 2
        _log(f"input error: {exc}")
    report["timing"] = {"seconds": round(time.monotonic() - t0, 6)}
    print(json.dumps(report, sort_keys=True, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
