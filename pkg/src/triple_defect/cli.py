"""Command line interface: analyze | find-singular | verify | defect | triple-cover | dims.

Jobs are line-oriented key=value files (comments with '#'):

    field=Fp:67
    weights=1,1,1,1,2
    polynomial=x4^3 - x0^6 - x1^6 - x2^6 - x3^6
    point=1,0,0,0,0        # optional, repeatable
    homogenize=x0          # optional (triple-cover: input is affine)

Exit codes: 0 success, 1 certification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .cover import lift_points, triple_cover
from .defect import defect
from .errors import CertificationError, InputError
from .exactalg import GF, RATIONALS, FieldSpec
from .hodge import HodgeReport, dim_graded, hodge_p4, hodge_weighted
from .locus import ProjectivePoint, find_singular_points, verify_triple_point
from .poly import Polynomial, parse, ring

REPORT_KEYS = ["degree", "weights", "field", "mu", "points", "certificates_ok",
               "defect_degree", "dim_S_D", "dim_Ieq", "delta", "h11", "h12",
               "h03", "h12_smooth", "euler", "q_factorial",
               "completeness_certified", "method"]


@dataclass
class JobSpec:
    field: FieldSpec
    polynomial: str
    weights: tuple | None = None
    points: list = dc_field(default_factory=list)
    homogenize_var: str | None = None
    cross_validate: bool = False
    k_max: int = 8
    threads: int = 1


def _parse_field(text: str) -> FieldSpec:
    text = text.strip()
    if text == "Q":
        return RATIONALS
    if text.startswith("Fp:"):
        try:
            return GF(int(text[3:]))
        except ValueError as exc:
            raise InputError(f"bad field spec {text!r}") from exc
    raise InputError(f"bad field spec {text!r}: use Q or Fp:<prime>")


def _parse_scalar_token(tok: str):
    tok = tok.strip()
    if "/" in tok:
        num, den = tok.split("/", 1)
        return Fraction(int(num), int(den))
    return int(tok)


def parse_job_file(path: str) -> JobSpec:
    field = None
    polynomial = None
    weights = None
    points = []
    homogenize_var = None
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InputError(f"{path}:{lineno}: expected key=value")
            key, value = line.split("=", 1)
            key = key.strip()
            value = value.strip()
            if key == "field":
                field = _parse_field(value)
            elif key == "weights":
                weights = tuple(int(x) for x in value.split(","))
            elif key == "polynomial":
                polynomial = value
            elif key == "point":
                points.append(tuple(_parse_scalar_token(x) for x in value.split(",")))
            elif key == "homogenize":
                homogenize_var = value
            else:
                raise InputError(f"{path}:{lineno}: unknown key {key!r}")
    if field is None:
        raise InputError(f"{path}: missing field=")
    if polynomial is None:
        raise InputError(f"{path}: missing polynomial=")
    return JobSpec(field, polynomial, weights, points, homogenize_var)


def _scalar_json(field: FieldSpec, x):
    return int(x) if field.is_prime_field else str(x)


def _points_json(field, points):
    return [[_scalar_json(field, c) for c in pt.coordinates] for pt in points]


def _check_avoids_orbifold_points(F: Polynomial):
    """The weighted statement requires X to avoid Sing P(w); for pairwise
    coprime weights those are the coordinate points of the heavy variables."""
    r = F.ring
    f = r.field
    for j, w in enumerate(r.weights):
        if w > 1:
            e_j = tuple(f.one() if i == j else f.zero() for i in range(r.nvars))
            if f.is_zero(F.evaluate(e_j)):
                raise CertificationError(
                    f"hypersurface passes through the singular point of the "
                    f"weighted space at coordinate {r.names[j]}")


def _analyze_pipeline(F, ring_, job, supplied_points, completeness):
    certs = [verify_triple_point(F, pt, job.k_max) for pt in supplied_points]
    res = defect(F, certs, cross_validate=job.cross_validate)
    d = F.weighted_degree()
    if ring_.weights == (1,) * 5:
        hr = hodge_p4(d, res.mu, res.dim_Ieq)
    else:
        hr = hodge_weighted(d, ring_.weights, res.mu, res.dim_Ieq)
    return _report(hr, ring_.field, supplied_points, res, completeness)


def _report(hr: HodgeReport, field, points, res, completeness) -> dict:
    return {
        "degree": hr.d,
        "weights": list(hr.weights),
        "field": str(field),
        "mu": hr.mu,
        "points": _points_json(field, points),
        "certificates_ok": True,
        "defect_degree": res.degree_D,
        "dim_S_D": res.dim_S_D,
        "dim_Ieq": res.dim_Ieq,
        "delta": res.delta,
        "h11": hr.h11,
        "h12": hr.h12,
        "h03": hr.h03,
        "h12_smooth": hr.h12_smooth,
        "euler": hr.euler,
        "q_factorial": hr.q_factorial,
        "completeness_certified": completeness,
        "method": res.method,
    }


def _gather_points(F, ring_, job):
    """Points from the job file, or an exhaustive scan over a prime field."""
    if job.points:
        pts = [ProjectivePoint.canonical(c, ring_) for c in job.points]
        return pts, False
    if not ring_.field.is_prime_field:
        raise InputError("over Q the singular points must be supplied "
                         "(point=... lines); exhaustive search needs a finite field")
    return find_singular_points(F, workers=job.threads), True


def cmd_analyze(job: JobSpec) -> dict:
    ring_ = ring(job.field, job.weights or (1, 1, 1, 1, 1))
    if ring_.nvars != 5:
        raise InputError("analyze expects five variables / weights")
    F = parse(job.polynomial, ring_)
    if not F.is_homogeneous():
        raise InputError("polynomial must be homogeneous (weighted)")
    _check_avoids_orbifold_points(F)
    points, completeness = _gather_points(F, ring_, job)
    return _analyze_pipeline(F, ring_, job, points, completeness)


def cmd_triple_cover(job: JobSpec) -> dict:
    if job.weights not in (None, (1, 1, 1, 1)):
        raise InputError("triple-cover input lives in P^3 with unit weights")
    r3 = ring(job.field, (1, 1, 1, 1))
    g = parse(job.polynomial, r3)
    if g.is_zero():
        raise InputError("zero branch polynomial")
    if job.homogenize_var is not None:
        g = g.homogenize(g.max_degree(), r3.index_of(job.homogenize_var))
    cover = triple_cover(g)
    if job.points:
        surface_pts = [ProjectivePoint.canonical(c, r3) for c in job.points]
        completeness = False
    elif job.field.is_prime_field:
        surface_pts = find_singular_points(g, workers=job.threads)
        completeness = True
    else:
        raise InputError("over Q the surface's singular points must be supplied")
    lifted = lift_points(cover, surface_pts)
    _check_avoids_orbifold_points(cover.cover_F)
    return _analyze_pipeline(cover.cover_F, cover.cover_ring, job, lifted, completeness)


def cmd_find_singular(job: JobSpec) -> dict:
    nvars = len(job.weights) if job.weights else 5
    ring_ = ring(job.field, job.weights or (1,) * nvars)
    F = parse(job.polynomial, ring_)
    if not F.is_homogeneous():
        raise InputError("polynomial must be homogeneous (weighted)")
    pts = find_singular_points(F, workers=job.threads)
    return {"field": str(job.field), "weights": list(ring_.weights),
            "count": len(pts), "points": _points_json(job.field, pts)}


def cmd_verify(job: JobSpec) -> dict:
    ring_ = ring(job.field, job.weights or (1, 1, 1, 1, 1))
    if ring_.nvars != 5:
        raise InputError("verify expects five variables / weights")
    F = parse(job.polynomial, ring_)
    if not job.points:
        raise InputError("verify needs point=... lines")
    results = []
    ok = True
    for coords in job.points:
        pt = ProjectivePoint.canonical(coords, ring_)
        entry = {"point": [_scalar_json(job.field, c) for c in pt.coordinates]}
        try:
            cert = verify_triple_point(F, pt, job.k_max)
            entry.update(ok=True, chart_index=cert.chart.chart_index,
                         cone_status=cert.cone.status,
                         saturation_degree=cert.cone.saturation_degree,
                         q_rank=4)
        except CertificationError as exc:
            ok = False
            entry.update(ok=False, error=str(exc))
        results.append(entry)
    return {"all_ok": ok, "certificates": results}


def cmd_defect(job: JobSpec) -> dict:
    ring_ = ring(job.field, job.weights or (1, 1, 1, 1, 1))
    if ring_.nvars != 5:
        raise InputError("defect expects five variables / weights")
    F = parse(job.polynomial, ring_)
    if not F.is_homogeneous():
        raise InputError("polynomial must be homogeneous (weighted)")
    points, completeness = _gather_points(F, ring_, job)
    certs = [verify_triple_point(F, pt, job.k_max) for pt in points]
    res = defect(F, certs, cross_validate=job.cross_validate)
    return {"degree": F.weighted_degree(), "weights": list(ring_.weights),
            "field": str(job.field), "mu": res.mu,
            "points": _points_json(job.field, points),
            "defect_degree": res.degree_D, "dim_S_D": res.dim_S_D,
            "dim_Ieq": res.dim_Ieq, "delta": res.delta, "method": res.method,
            "completeness_certified": completeness}


def _human_table(report: dict) -> str:
    keys = REPORT_KEYS if set(REPORT_KEYS) <= set(report) else list(report)
    width = max(len(k) for k in keys)
    lines = []
    for k in keys:
        v = report[k]
        if k == "points":
            v = "; ".join("(" + ":".join(str(c) for c in pt) + ")" for pt in v) or "none"
        lines.append(f"{k:<{width}}  {v}")
    return "\n".join(lines)


def _emit(report: dict, json_path: str | None, as_json: bool = False):
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print(_human_table(report))
    if json_path:
        with open(json_path, "w") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
        print(f"json report written to {json_path}", file=sys.stderr)


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="triple-defect",
                                 description="Defect and Hodge numbers of threefolds "
                                             "with ordinary triple points")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("analyze", "find-singular", "verify", "defect", "triple-cover"):
        sp = sub.add_parser(name)
        sp.add_argument("--input", required=True, help="job file (key=value lines)")
        sp.add_argument("--cross-validate", action="store_true",
                        help="also run the brute-force oracle and compare")
        sp.add_argument("--kmax", type=int, default=8,
                        help="saturation bound for cone certification")
        sp.add_argument("--json", dest="json_path", default=None,
                        help="write the JSON report here")
        sp.add_argument("--threads", type=int, default=1,
                        help="worker threads for exhaustive scans")
        sp.add_argument("--homogenize", default=None, metavar="VAR",
                        help="treat the input polynomial as affine and "
                             "homogenise with VAR")
    sp = sub.add_parser("dims")
    sp.add_argument("--weights", default="1,1,1,1,1")
    sp.add_argument("--degree", type=int, required=True)
    return ap


COMMANDS = {
    "analyze": cmd_analyze,
    "find-singular": cmd_find_singular,
    "verify": cmd_verify,
    "defect": cmd_defect,
    "triple-cover": cmd_triple_cover,
}


def main(argv=None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        if args.command == "dims":
            weights = tuple(int(x) for x in args.weights.split(","))
            print(dim_graded(weights, args.degree))
            return 0
        job = parse_job_file(args.input)
        job.cross_validate = args.cross_validate
        job.k_max = args.kmax
        job.threads = max(1, args.threads)
        if args.homogenize is not None:
            job.homogenize_var = args.homogenize
        report = COMMANDS[args.command](job)
        _emit(report, args.json_path,
              as_json=args.command in ("find-singular", "verify"))
        if args.command == "verify" and not report["all_ok"]:
            return 1
        return 0
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CertificationError as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
