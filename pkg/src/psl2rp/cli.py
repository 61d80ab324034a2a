"""Command-line front end: every verification suite as a JSON report.

Exit codes: 0 when every checked claim holds, 1 when a claim fails,
2 for usage, precondition and cap errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

from . import __version__
from .genseq import (
    DEFAULT_M_BUDGET,
    GenSequence,
    aut_orbit_counts,
    max_irredundant_length,
    rp_check,
)
from .gf import FieldError, FqElem, FieldCtx, make_field
from .groups import closure
from .psl2 import CapExceeded, GroupCtx, GroupError, Mat2
from .witness import (
    BUILDERS,
    PreconditionError,
    verify_prop34,
    verify_prop35_37,
    verify_thm33,
)

SCHEMA_VERSION = "1"
CONFIG_ENV = "PSL2RP_CONFIG"
SUITES = ("prop34", "prop35_37", "thm33", "mlen", "jambor")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- configuration -------------------------------------------------------------------

@dataclass
class RunConfig:
    closure_cap: int = 3_000_000
    seeds: list[int] = field(default_factory=lambda: list(range(8)))
    m_search_budget: int = DEFAULT_M_BUDGET
    rng_seed: int = 0
    output: str = "-"
    timing: bool = True

    def __post_init__(self):
        if self.closure_cap <= 0 or self.m_search_budget <= 0:
            raise UsageError("caps and budgets must be positive")
        if not self.seeds:
            raise UsageError("seeds must be nonempty")

    @classmethod
    def from_text(cls, text: str) -> RunConfig:
        """Parse ``key = value`` lines; ``#`` starts a comment."""
        kinds = {f.name: f.type for f in fields(cls)}
        values = {}
        for n, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, raw = (part.strip() for part in line.partition("="))
            if not sep or key not in kinds:
                raise UsageError(f"config line {n}: cannot parse {line!r}")
            values[key] = _coerce(key, kinds[key], raw)
        return cls(**values)

    @classmethod
    def load(cls, path: str | None) -> RunConfig:
        path = path or os.environ.get(CONFIG_ENV)
        if not path:
            return cls()
        try:
            return cls.from_text(Path(path).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from exc


def _coerce(key: str, kind: str, raw: str):
    try:
        if "list" in kind:
            return [int(v) for v in re.split(r"[,\s]+", raw) if v]
        if kind == "bool":
            if raw.lower() not in ("true", "false", "1", "0", "yes", "no"):
                raise ValueError(raw)
            return raw.lower() in ("true", "1", "yes")
        if kind == "int":
            return int(raw)
    except ValueError as exc:
        raise UsageError(f"config key {key}: bad value {raw!r}") from exc
    return raw


# -- field and matrix parsing ----------------------------------------------------------

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(x?)")


def parse_elem(F: FieldCtx, text: str) -> FqElem:
    """Parse ``a``, ``a+bx``, ``bx`` or ``-x`` (x the field generator) into F."""
    s = text.replace(" ", "")
    if not s:
        raise UsageError("empty field element")
    a0 = a1 = 0
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise UsageError(f"cannot parse field element {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            a1 += sign * coeff
        else:
            a0 += sign * coeff
        pos = m.end()
    if a1 and F.degree == 1:
        raise UsageError(f"{text!r} is not in the prime field GF({F.p})")
    return F(a0 % F.p, a1 % F.p)


def parse_matrix(F: FieldCtx, text: str) -> Mat2:
    parts = [t for t in re.split(r"[,;]", text) if t.strip()]
    if len(parts) != 4:
        raise UsageError(f"matrix {text!r} needs four entries a,b,c,d")
    A = Mat2(*(parse_elem(F, t) for t in parts))
    if A.det() != F.one:
        raise UsageError(f"matrix {text!r} has determinant {A.det()}, not 1")
    return A


def _entries(ctx: GroupCtx, code: int) -> list[str]:
    return [str(e) for e in ctx.matrix(code).entries()]


# -- commands ----------------------------------------------------------------------------

def _group_fits(order: int, cfg: RunConfig) -> None:
    if order > cfg.closure_cap:
        raise CapExceeded(f"group order {order} above closure_cap {cfg.closure_cap}")


def cmd_witness(args, cfg: RunConfig) -> tuple[dict, bool]:
    rep = BUILDERS[args.theorem](args.p, strict=False)
    _group_fits(rep.group_order, cfg)
    body = rep.to_dict()
    body["claim"] = "every construction claim holds and (wm, wn, wr) fails the replacement property"
    return body, rep.ok


def cmd_rp(args, cfg: RunConfig) -> tuple[dict, bool]:
    F = make_field(args.p, args.degree)
    ctx = GroupCtx(F, args.kind)
    _group_fits(ctx.order, cfg)
    codes = [ctx.canonicalize(parse_matrix(F, e)).code for e in args.elements]
    ambient = closure(ctx, codes, cap=cfg.closure_cap) if args.within_span else None
    try:
        s = GenSequence.of(ctx, codes, ambient)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rep = rp_check(s)
    body = {
        "group": repr(ctx),
        "group_order": s.group_order,
        "within_span": args.within_span,
        "sequence": [_entries(ctx, c) for c in s.items],
        "claim": "the sequence is irredundant generating and satisfies the replacement property",
        **rep.to_dict(ctx),
    }
    w = body["witness"]
    if w is not None:
        A = ctx.matrix(rep.witness.element)
        w["label"] = "-1" if A == -Mat2.identity(F) else None
    return body, bool(rep.satisfies_rp)


def _suite_prop34(p, cfg):
    r = verify_prop34(p)
    return r.to_dict(), r.ok


def _suite_prop35_37(p, cfg):
    r = verify_prop35_37(p, rng_seed=cfg.rng_seed)
    return r.to_dict(), r.ok


def _suite_thm33(p, cfg):
    r = verify_thm33(p, rng_seed=cfg.rng_seed, seeds=cfg.seeds)
    return r.to_dict(), r.ok


def _suite_mlen(p, cfg):
    res = max_irredundant_length(GroupCtx(make_field(p, 1), "PSL"), budget=cfg.m_search_budget)
    body = {"suite": "mlen", "m": res.m, "exhaustive": res.exhaustive,
            "witness": list(res.witness), "nodes": res.nodes}
    return body, res.exhaustive


def _suite_jambor(p, cfg):
    c = aut_orbit_counts(p, 4, budget=cfg.m_search_budget)
    body = {"suite": "jambor", **asdict(c), "count": c.element_sets}
    return body, c.exhaustive


SUITE_RUNNERS = {
    "prop34": _suite_prop34,
    "prop35_37": _suite_prop35_37,
    "thm33": _suite_thm33,
    "mlen": _suite_mlen,
    "jambor": _suite_jambor,
}


def cmd_survey(args, cfg: RunConfig) -> tuple[dict, bool]:
    results, ok = [], True
    for p in args.p:
        for name in args.suites:
            t0 = time.perf_counter()
            entry = {"p": p, "suite": name}
            try:
                body, passed = SUITE_RUNNERS[name](p, cfg)
                entry.update(passed=passed, report=body)
            except (GroupError, FieldError, CapExceeded) as exc:
                passed = False
                entry.update(passed=False, error=f"{type(exc).__name__}: {exc}")
            if cfg.timing:
                entry["wall_time"] = round(time.perf_counter() - t0, 3)
            ok &= passed
            results.append(entry)
    return {"results": results, "claim": "every selected suite passes"}, ok


COMMANDS = {"witness": cmd_witness, "rp": cmd_rp, "survey": cmd_survey}


# -- output --------------------------------------------------------------------------------

def _scrub(obj):
    """Drop nested timing fields so reports depend only on the inputs."""
    if isinstance(obj, dict):
        return {k: _scrub(v) for k, v in obj.items() if k not in ("elapsed", "wall_time")}
    if isinstance(obj, list):
        return [_scrub(v) for v in obj]
    return obj


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS,
                        help=f"key = value config file (default: ${CONFIG_ENV})")
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="indented JSON")
    ap = argparse.ArgumentParser(prog="psl2rp", description=__doc__.splitlines()[0],
                                 parents=[common])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    sub_kw = {"parents": [common]}

    w = sub.add_parser("witness", help="build an RP-failure witness", **sub_kw)
    w.add_argument("--theorem", choices=sorted(BUILDERS), required=True)
    w.add_argument("--p", type=int, required=True)

    r = sub.add_parser("rp", help="replacement-property check of a sequence", **sub_kw)
    r.add_argument("--p", type=int, required=True)
    r.add_argument("--degree", type=int, choices=(1, 2), default=1)
    r.add_argument("--kind", choices=("SL", "PSL", "PGL"), default="PSL")
    r.add_argument("--elements", nargs="+", required=True, metavar="A,B,C,D",
                   help="matrix entries, e.g. 0,-1,1,0 or 1+x,2,0,3x")
    r.add_argument("--within-span", action="store_true",
                   help="check inside the subgroup the sequence generates")

    s = sub.add_parser("survey", help="run verification suites", **sub_kw)
    s.add_argument("--p", type=int, nargs="+", required=True)
    s.add_argument("--suites", nargs="+", choices=SUITES, default=list(SUITES))
    return ap


def run(argv=None) -> tuple[dict, int]:
    """Parse ``argv`` and return the report object with its exit code."""
    args = build_parser().parse_args(argv)
    args.config = getattr(args, "config", None)
    args.pretty = getattr(args, "pretty", False)
    t0 = time.perf_counter()
    try:
        cfg = RunConfig.load(args.config)
        body, ok = COMMANDS[args.command](args, cfg)
        code = EXIT_OK if ok else EXIT_FAIL
        report = {"status": "pass" if ok else "fail", **_scrub(body)}
    except (UsageError, PreconditionError, FieldError, CapExceeded, GroupError) as exc:
        cfg = cfg if "cfg" in locals() else None
        code = EXIT_USAGE
        report = {"status": "error", "error": type(exc).__name__, "reason": str(exc)}
    meta = {
        "schema_version": SCHEMA_VERSION,
        "tool": "psl2rp",
        "version": __version__,
        "command": args.command,
        "argv": list(argv) if argv is not None else sys.argv[1:],
        "config": asdict(cfg) if cfg is not None else None,
    }
    if cfg is None or cfg.timing:
        meta["wall_time"] = round(time.perf_counter() - t0, 3)
    return {"meta": meta, **report, "exit_code": code}, code


def main(argv=None) -> int:
    report, code = run(argv)
    pretty = "--pretty" in (sys.argv[1:] if argv is None else argv)
    text = json.dumps(report, indent=2 if pretty else None, sort_keys=True)
    out = report["meta"]["config"]["output"] if report["meta"]["config"] else "-"
    if out == "-":
        print(text)
    else:
        Path(out).write_text(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
