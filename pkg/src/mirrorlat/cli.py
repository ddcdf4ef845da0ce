"""Command-line front end.

Every command writes a document {"tool_version", "seed", "command", "result"}.
Exit codes: 0 success, 2 a verified property failed, 1 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import __version__
from .connection import (MultiplicityParam, a_form, curvature_check, flatness_conditions_check,
                         gamma_r, random_regular_point, wronskian_check)
from .errors import MirrorlatError
from .hermitian import (det_closed_form, dual_form_signature, gram, hyperbolic_xy,
                        in_hyperbolic_region, signature)
from .parallel import pmap
from .polys import ScalarPoly, format_rational, parse_rational
from .residues import boundary_spectrum, quadratic_identity_holds
from .rootsystem import build, supported_types
from .schwarz import compare_with_reference, enumerate_ball_quotients, relative_exponents, schwarz_satisfied
from .tables import table1, table1_markdown, table2, table2_markdown, table3, table3_markdown

COMMANDS = ("info", "flatness", "curvature", "wronskian", "residues", "gram", "signature",
            "hyp-region", "schwarz", "enumerate", "tables")
CURVATURE_TOL = 1e-9
WRONSKIAN_TOL = 1e-6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(token: str) -> Fraction:
    try:
        return parse_rational(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed rational: {token!r}") from None


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    rank: int | None = None
    k: Fraction | None = None
    kp: Fraction | None = None
    node: int | None = None
    format: str = "json"
    seed: int = 0
    samples: int = 5
    output_path: str | None = None
    which: int | None = None

    @property
    def kappa(self) -> MultiplicityParam:
        return MultiplicityParam(self.k or 0, self.kp or 0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mirrorlat", description="Toric mirror arrangement toolkit")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--family")
    parser.add_argument("--rank", type=int)
    parser.add_argument("--k", type=_rational)
    parser.add_argument("--kp", type=_rational)
    parser.add_argument("--node", type=int)
    parser.add_argument("--format", choices=("json", "csv", "md"), default="json")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=5)
    parser.add_argument("--output", dest="output_path")
    parser.add_argument("--which", type=int, choices=(1, 2, 3))
    return parser


_NEGATIVE = re.compile(r"-[0-9]+(/[0-9]+)?")


def _attach_negatives(argv) -> list:
    """Rewrite '--k -1/6' as '--k=-1/6' so argparse does not read the value as a flag."""
    out = []
    for token in argv:
        if out and out[-1] in ("--k", "--kp") and _NEGATIVE.fullmatch(token):
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(_attach_negatives(list(argv)))
    return RunConfig(**vars(ns))


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, ScalarPoly):
        return value.to_json() if value.degree <= 1 else str(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "to_json"):
        return _jsonable(value.to_json())
    return value


def _require_type(cfg: RunConfig):
    if cfg.family is None or cfg.rank is None:
        raise UsageError(f"{cfg.command} needs --family and --rank")
    return build(cfg.family, cfg.rank)


def _random_rational(rng: np.random.Generator) -> Fraction:
    return Fraction(int(rng.integers(-12, 13)), int(rng.integers(1, 13)))


def _sample_kappas(cfg: RunConfig, rs) -> list[MultiplicityParam]:
    if cfg.k is not None:
        return [cfg.kappa]
    rng = np.random.default_rng(cfg.seed)
    two = rs.family not in "DE"
    return [MultiplicityParam(_random_rational(rng), _random_rational(rng) if two else 0)
            for _ in range(cfg.samples)]


def cmd_info(cfg):
    rs = _require_type(cfg)
    sym = MultiplicityParam.symbolic()
    return {
        "name": rs.name, "rank": rs.rank, "ambient_dim": rs.ambient_dim,
        "positive_roots": len(rs.positive_roots), "coxeter_number": rs.coxeter_number,
        "highest_root": [int(c) for c in rs.coefficients[rs.root_index(rs.highest_root)[0]]],
        "cartan": rs.cartan.tolist(), "affine_coxeter_matrix": rs.affine_coxeter_matrix.tolist(),
        "orbit_sizes": {tag: rs.orbit_tags.count(tag) for tag in ("first", "second")},
        "a_form": str(a_form(rs, sym)), "gamma": gamma_r(rs.family, rs.rank),
    }, True


def cmd_flatness(cfg):
    rs = _require_type(cfg)
    reports = pmap(lambda kappa: (kappa, flatness_conditions_check(rs, kappa)), _sample_kappas(cfg, rs))
    result = [{"k": kappa.k, "kp": kappa.k_prime, "all_hold": report.all_hold, "conditions": report.to_json()}
              for kappa, report in reports]
    return result, all(report.all_hold for _, report in reports)


def cmd_curvature(cfg):
    rs = _require_type(cfg)
    rng = np.random.default_rng(cfg.seed)
    kappa = cfg.kappa
    residuals = [curvature_check(rs, kappa, random_regular_point(rs, rng)) for _ in range(cfg.samples)]
    worst = max(residuals)
    return {"residuals": residuals, "max": worst, "tol": CURVATURE_TOL}, worst < CURVATURE_TOL


def cmd_wronskian(cfg):
    rs = _require_type(cfg)
    rng = np.random.default_rng(cfg.seed)
    errors = []
    for _ in range(cfg.samples):
        point = random_regular_point(rs, rng)
        errors.append(wronskian_check(rs, cfg.kappa, point, rng.normal(size=rs.rank)))
    worst = max(errors)
    return {"relative_errors": errors, "max": worst, "tol": WRONSKIAN_TOL}, worst < WRONSKIAN_TOL


def cmd_residues(cfg):
    rs = _require_type(cfg)
    nodes = [cfg.node] if cfg.node is not None else list(range(1, rs.rank + 1))
    rows, ok = [], True
    for m in nodes:
        spec = boundary_spectrum(rs, m)
        holds = quadratic_identity_holds(rs, m)
        ok = ok and holds
        rows.append({"node": m, **spec.to_json(), "a_pp": str(spec.app), "quadratic_identity": holds})
    return rows, ok


def _gram_summary(rs, kappa):
    g = gram(rs, kappa)
    xy = hyperbolic_xy(rs, kappa)
    return g, {"x": xy[0], "y": xy[1]} if xy else None


def cmd_gram(cfg):
    rs = _require_type(cfg)
    g, xy = _gram_summary(rs, cfg.kappa)
    return {**g.to_json(), "xy": xy}, True


def cmd_signature(cfg):
    rs = _require_type(cfg)
    g, xy = _gram_summary(rs, cfg.kappa)
    sig = signature(g)
    dual = dual_form_signature(g) if sig[2] == 0 else None
    return {"signature": list(sig), "dual_signature": list(dual) if dual else None,
            "det_numeric": complex(np.linalg.det(g.entries)), "det_closed_form": det_closed_form(rs, cfg.kappa),
            "xy": xy, "hyperbolic": in_hyperbolic_region(rs, cfg.kappa)}, True


def cmd_hyp_region(cfg):
    rs = _require_type(cfg)
    xy = hyperbolic_xy(rs, cfg.kappa)
    return {"hyperbolic": in_hyperbolic_region(rs, cfg.kappa),
            "xy": {"x": xy[0], "y": xy[1]} if xy else None}, True


def cmd_schwarz(cfg):
    rs = _require_type(cfg)
    ok, detail = schwarz_satisfied(rs, cfg.kappa)
    return {"exponents": relative_exponents(rs, cfg.kappa).to_json(), "detail": detail,
            "satisfied": ok, "hyperbolic": in_hyperbolic_region(rs, cfg.kappa)}, True


def cmd_enumerate(cfg):
    types = [(cfg.family.upper(), cfg.rank)] if cfg.family else supported_types()
    if cfg.family and cfg.rank is None:
        raise UsageError("enumerate needs --rank together with --family")
    for fam, n in types:
        build(fam, n)
    if len(types) == 1:
        fam, n = types[0]
        return [e.to_json() for e in enumerate_ball_quotients(fam, n)], True
    cells = pmap(lambda t: (t, enumerate_ball_quotients(*t), compare_with_reference(*t)["status"]), types)
    return [{"family": f, "rank": n, "status": status, "entries": [e.to_json() for e in entries]}
            for (f, n), entries, status in cells], True


def cmd_tables(cfg):
    if cfg.which is None:
        raise UsageError("tables needs --which 1|2|3")
    return {1: table1, 2: table2, 3: table3}[cfg.which](), True


HANDLERS = {name: globals()[f"cmd_{name.replace('-', '_')}"] for name in COMMANDS}


def _to_csv(result) -> str:
    rows = result if isinstance(result, list) else [result]
    if rows and not isinstance(rows[0], dict):
        rows = [{"value": r} for r in rows]
    keys = list(dict.fromkeys(k for row in rows for k in row))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: v if isinstance(v, (str, int, float, bool)) or v is None
                         else json.dumps(v) for k, v in row.items()})
    return buf.getvalue()


def _to_markdown(cfg: RunConfig, result) -> str:
    if cfg.command == "tables":
        return {1: table1_markdown, 2: table2_markdown, 3: table3_markdown}[cfg.which](result)
    rows = result if isinstance(result, list) else [result]
    if rows and not isinstance(rows[0], dict):
        rows = [{"value": r} for r in rows]
    keys = list(dict.fromkeys(k for row in rows for k in row))
    cell = lambda v: v if isinstance(v, str) else json.dumps(v)  # noqa: E731
    lines = ["| " + " | ".join(keys) + " |", "|" + "---|" * len(keys)]
    lines += ["| " + " | ".join(cell(row.get(k, "")) for k in keys) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def render(cfg: RunConfig, result) -> str:
    payload = _jsonable(result)
    if cfg.format == "json":
        doc = {"tool_version": __version__, "seed": cfg.seed, "command": cfg.command, "result": payload}
        return json.dumps(doc, indent=2) + "\n"
    header = f"mirrorlat {__version__} seed={cfg.seed} command={cfg.command}"
    if cfg.format == "csv":
        return f"# {header}\n" + _to_csv(payload)
    return f"<!-- {header} -->\n" + _to_markdown(cfg, payload)


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute a configuration; returns (exit code, serialized document)."""
    result, ok = HANDLERS[cfg.command](cfg)
    return (0 if ok else 2), render(cfg, result)


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
        code, text = run(cfg)
    except (UsageError, MirrorlatError) as exc:
        print(f"mirrorlat: error: {exc}", file=sys.stderr)
        return 1
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code
