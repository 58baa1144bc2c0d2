"""Command-line surface: height queries, counting runs, fits, searches, and
the cross-validation check suite.

Exit codes: 0 success, 2 argument/parse problems, 3 domain errors raised by
the library (singular curve, zero input, and so on).

Counting runs are configured by flags or an INI-style config file (flat
key = value entries under [run], [schedule] and [params] sections); every
run writes its resolved config next to its output, plus a checkpoint file
keyed by family, parameters and bound so interrupted runs resume.  Bounds
in schedules are parsed as exact decimal fractions, so reruns are
reproducible bit for bit.  The STACKY_THREADS environment variable
overrides the configured thread count.
"""

from __future__ import annotations

import argparse
import configparser
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import checks
from .adelic import ExactHeight
from .classifying import PermGroup, class_of, bmun_height, malle_exponent, quadratic_height
from .counting import (
    CountReport,
    count_bmun,
    count_football222,
    count_quadratic_fields,
    count_quadratic_points,
    count_rooted3_at_0,
    fit_exponents,
    vojta_search_444,
    vojta_search_ap5,
)
from .football import RootedLine, StackDivisor, generic_height, tangent_divisor
from .sympow import QuadraticPoint, abs_height, discrepancy, stable_sym_height, sym_height
from .wps import WeightedPoint, elliptic_naive_height, height_Oj, hyperelliptic_height

SCHEMA = "stacky-heights/1"


class UsageError(ValueError):
    """Bad user input (exit code 2, as opposed to domain errors at 3)."""


# ----------------------------------------------------------------------
# small parsers


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as e:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from e


def _rational(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"expected a rational number, got {text!r}") from e


def parse_line(text: str) -> RootedLine:
    """Rooted lines as "u1,v1,m1;u2,v2,m2;..." (empty string: no roots)."""
    roots = []
    if text.strip():
        for part in text.split(";"):
            vals = _ints(part)
            if len(vals) != 3:
                raise UsageError(f"root {part!r} is not u,v,m")
            u, v, m = vals
            roots.append(((u, v), m))
    try:
        return RootedLine(tuple(roots))
    except ValueError as e:
        raise UsageError(str(e)) from e


def parse_divisor(text: str, line: RootedLine) -> StackDivisor:
    """Divisors as "d;n1,n2,..." aligned with the line's roots."""
    parts = text.split(";")
    if len(parts) == 1:
        d, stacky = parts[0], ""
    elif len(parts) == 2:
        d, stacky = parts
    else:
        raise UsageError(f"divisor {text!r} is not d;n1,n2,...")
    coeffs = _ints(stacky) if stacky.strip() else ()
    if len(coeffs) != len(line.roots):
        raise UsageError(
            f"divisor has {len(coeffs)} stacky coefficients, line has {len(line.roots)} roots"
        )
    try:
        return StackDivisor(int(d), coeffs)
    except ValueError as e:
        raise UsageError(str(e)) from e


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """One permutation in cycle notation, e.g. "(1 2 3)(4 5)", 1-based."""
    perm = list(range(degree))
    text = text.strip()
    if not text:
        return tuple(perm)
    if text.count("(") != text.count(")") or not text.startswith("("):
        raise UsageError(f"bad cycle notation {text!r}")
    for cyc in text[1:-1].split(")("):
        members = [int(x) - 1 for x in cyc.replace(",", " ").split()]
        if any(not 0 <= x < degree for x in members):
            raise UsageError(f"cycle entry out of range in {text!r}")
        if len(set(members)) != len(members):
            raise UsageError(f"repeated entry in cycle {text!r}")
        for i, x in enumerate(members):
            perm[x] = members[(i + 1) % len(members)]
    return tuple(perm)


# ----------------------------------------------------------------------
# height subcommand


def _emit(payload: dict, kind: str) -> None:
    out = {"schema": SCHEMA, "kind": kind}
    out.update(payload)
    print(json.dumps(out, indent=2))


def cmd_height(args) -> int:
    fam = args.family
    if fam == "wps":
        if args.point:
            try:
                w, c = args.point.split(":")
            except ValueError as e:
                raise UsageError("wps point must be 'a0,a1,...:M0,M1,...'") from e
            weights, coords = _ints(w), _ints(c)
        else:
            if args.weights is None or args.coords is None:
                raise UsageError("need --weights and --coords (or --point)")
            weights, coords = _ints(args.weights), _ints(args.coords)
        h = height_Oj(WeightedPoint(weights, coords), args.j)
        _emit({"height": h.to_json()}, "height")
    elif fam == "bmun":
        if args.n is None or args.x is None:
            raise UsageError("need --n and --x")
        h = bmun_height(class_of(_rational(args.x), args.n), args.j)
        _emit({"height": h.to_json()}, "height")
    elif fam == "quadratic":
        if args.d is None:
            raise UsageError("need --d (squarefree, not 0 or 1)")
        _emit({"height": quadratic_height(args.d).to_json()}, "height")
    elif fam == "football":
        if args.line is None or args.point is None:
            raise UsageError("need --line and --point")
        line = parse_line(args.line)
        pt = _ints(args.point)
        if len(pt) != 2:
            raise UsageError("football point must be a,b")
        a, b = pt
        if args.tangent:
            div = tangent_divisor(line)
        elif args.divisor:
            div = parse_divisor(args.divisor, line)
        else:
            raise UsageError("need --divisor or --tangent")
        hb = generic_height(line, div, (a, b))
        _emit({"breakdown": hb.to_json()}, "breakdown")
    elif fam == "elliptic":
        if args.A is None or args.B is None:
            raise UsageError("need --A and --B")
        _emit({"height": elliptic_naive_height(args.A, args.B).to_json()}, "height")
    elif fam == "hyperelliptic":
        if args.coeffs is None:
            raise UsageError("need --coeffs a2,a3,...")
        h = hyperelliptic_height(_ints(args.coeffs))
        _emit({"height": h.to_json()}, "height")
    elif fam == "sym2":
        if args.form is None:
            raise UsageError("need --form a,b,c")
        a, b, c = _ints(args.form)
        q = QuadraticPoint.irreducible(a, b, c)
        _emit(
            {
                "stable": stable_sym_height(q),
                "discrepancy": discrepancy(q),
                "total": sym_height(q),
                "abs_height": abs_height(q),
            },
            "sym2",
        )
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown family {fam!r}")
    return 0


def cmd_malle(args) -> int:
    gens = [parse_cycles(g, args.degree) for g in args.gens.split(";")] if args.gens else []
    try:
        G = PermGroup.from_generators(args.degree, gens)
        expo = malle_exponent(G)
    except ValueError as e:
        raise UsageError(str(e)) from e
    _emit(
        {
            "degree": args.degree,
            "order": len(G),
            "exponent": [expo.numerator, expo.denominator],
            "exponent_value": float(expo),
        },
        "malle",
    )
    return 0


# ----------------------------------------------------------------------
# counting runs


@dataclass
class RunConfig:
    family: str
    params: dict = field(default_factory=dict)
    b0: Fraction = Fraction(10)
    ratio: Fraction = Fraction(2)
    steps: int = 4
    format: str = "csv"
    threads: int = 1
    seed: int = 0
    out: Path = Path(".")

    def __post_init__(self):
        if self.steps < 1:
            raise UsageError("schedule needs at least one step")
        if self.ratio <= 1:
            raise UsageError("schedule ratio must exceed 1 (strictly increasing)")
        if self.b0 <= 0:
            raise UsageError("schedule start must be positive")
        if self.threads < 1:
            raise UsageError("thread count must be >= 1")
        if self.format not in ("csv", "json", "plot"):
            raise UsageError(f"unknown format {self.format!r}")

    def bounds(self) -> list[Fraction]:
        return [self.b0 * self.ratio**k for k in range(self.steps)]

    def canonical(self) -> str:
        params = ",".join(f"{k}={self.params[k]}" for k in sorted(self.params))
        return f"{self.family}|{params}|{self.b0}|{self.ratio}|{self.steps}"

    def run_id(self) -> str:
        digest = hashlib.sha256(self.canonical().encode()).hexdigest()[:12]
        return f"{self.family}-{digest}"

    def resolved_ini(self) -> str:
        cp = configparser.ConfigParser()
        cp["run"] = {
            "family": self.family,
            "format": self.format,
            "threads": str(self.threads),
            "seed": str(self.seed),
            "out": str(self.out),
        }
        cp["schedule"] = {
            "b0": str(self.b0),
            "ratio": str(self.ratio),
            "steps": str(self.steps),
        }
        cp["params"] = {k: str(v) for k, v in self.params.items()}
        import io

        buf = io.StringIO()
        cp.write(buf)
        return buf.getvalue()


FAMILIES = {
    "bmun": lambda cfg, B: count_bmun(int(cfg.params.get("n", 2)), B),
    "quadratic-fields": lambda cfg, B: count_quadratic_fields(B),
    "football222": lambda cfg, B: count_football222(B, threads=cfg.threads),
    "rooted3": lambda cfg, B: count_rooted3_at_0(B),
    "quadratic-points": lambda cfg, B: count_quadratic_points(B),
}


def load_config(args) -> RunConfig:
    family = args.family
    params: dict = {}
    b0, ratio, steps = args.b0, args.ratio, args.steps
    fmt, threads, seed = args.format, args.threads, args.seed
    out = args.out
    if args.config:
        cp = configparser.ConfigParser()
        read = cp.read(args.config)
        if not read:
            raise UsageError(f"cannot read config file {args.config}")
        if "run" in cp:
            run = cp["run"]
            family = family or run.get("family")
            fmt = fmt or run.get("format")
            threads = threads if threads is not None else run.getint("threads", fallback=None)
            seed = seed if seed is not None else run.getint("seed", fallback=None)
            out = out or run.get("out")
        if "schedule" in cp:
            sched = cp["schedule"]
            b0 = b0 or sched.get("b0")
            ratio = ratio or sched.get("ratio")
            steps = steps if steps is not None else sched.getint("steps", fallback=None)
        if "params" in cp:
            params.update(cp["params"])
    if args.n is not None:
        params["n"] = args.n
    if not family:
        raise UsageError("no family given (flag --family or config [run] family)")
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES))}")
    env_threads = os.environ.get("STACKY_THREADS")
    if env_threads:
        try:
            threads = int(env_threads)
        except ValueError as e:
            raise UsageError("STACKY_THREADS must be an integer") from e
    return RunConfig(
        family=family,
        params=params,
        b0=_rational(str(b0 if b0 is not None else 10)),
        ratio=_rational(str(ratio if ratio is not None else 2)),
        steps=int(steps) if steps is not None else 4,
        format=fmt or "csv",
        threads=int(threads) if threads is not None else 1,
        seed=int(seed) if seed is not None else 0,
        out=Path(out) if out else Path("."),
    )


def _load_checkpoint(path: Path) -> dict[str, int]:
    if not path.exists():
        return {}
    try:
        data = json.loads(path.read_text())
        return {str(k): int(v) for k, v in data.get("samples", {}).items()}
    except (json.JSONDecodeError, AttributeError, ValueError):
        return {}


def _save_checkpoint(path: Path, samples: dict[str, int]) -> None:
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps({"schema": SCHEMA, "samples": samples}, indent=2))
    tmp.replace(path)


def cmd_count(args) -> int:
    cfg = load_config(args)
    counter = FAMILIES[cfg.family]
    cfg.out.mkdir(parents=True, exist_ok=True)
    run_id = cfg.run_id()
    ckpt_path = cfg.out / f"{run_id}.checkpoint.json"
    done = _load_checkpoint(ckpt_path) if args.resume else {}

    samples: list[tuple[float, int]] = []
    for B in cfg.bounds():
        key = str(B)
        if key in done:
            count = done[key]
        else:
            t0 = time.perf_counter()
            count = counter(cfg, B)
            dt = time.perf_counter() - t0
            print(f"B={float(B):g}: {count}  [{dt:.2f}s]", file=sys.stderr)
            done[key] = count
            _save_checkpoint(ckpt_path, done)
        samples.append((float(B), count))

    report = CountReport(family=cfg.family, params=dict(cfg.params), samples=samples)
    try:
        report.fit = fit_exponents(report)
    except ValueError:
        report.fit = None

    (cfg.out / f"{run_id}.cfg").write_text(cfg.resolved_ini())
    (cfg.out / f"{run_id}.json").write_text(json.dumps(report.to_json(), indent=2))
    if cfg.format == "csv":
        (cfg.out / f"{run_id}.csv").write_text(report.to_csv())
    elif cfg.format == "plot":
        (cfg.out / f"{run_id}.dat").write_text(report.to_plot())
    print(json.dumps(report.to_json(), indent=2))
    return 0


def cmd_fit(args) -> int:
    path = Path(args.report)
    if not path.exists():
        raise UsageError(f"no report at {path}")
    report = CountReport.from_json(json.loads(path.read_text()))
    report.fit = fit_exponents(report)
    if args.update:
        path.write_text(json.dumps(report.to_json(), indent=2))
    a, b, c = report.fit
    _emit({"family": report.family, "fit": {"a": a, "b": b, "c": c}}, "fit")
    return 0


def cmd_search(args) -> int:
    threads = args.threads or int(os.environ.get("STACKY_THREADS", "1") or 1)
    if args.kind == "444":
        hits = vojta_search_444(args.cutoff, args.delta, threads=threads)
    else:
        hits = vojta_search_ap5(args.cutoff, args.delta, threads=threads)
    _emit(
        {
            "kind": args.kind,
            "cutoff": args.cutoff,
            "delta": args.delta,
            "count": len(hits),
            "hits": [list(h) for h in hits],
        },
        "search",
    )
    return 0


def cmd_check(args) -> int:
    results = checks.run_all(seed=args.seed, samples=args.samples)
    for r in results:
        print(r.line())
    return 0 if all(r.ok for r in results) else 1


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="stacky-heights",
        description="Exact heights on stacky curves over Q; counting and searches.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    h = sub.add_parser("height", help="evaluate one height exactly")
    h.add_argument("family", choices=["wps", "bmun", "quadratic", "football", "elliptic", "hyperelliptic", "sym2"])
    h.add_argument("--weights")
    h.add_argument("--coords")
    h.add_argument(
        "--point",
        help='point: "a,b" for football, "a0,a1,...:M0,M1,..." shorthand for wps',
    )
    h.add_argument("--j", type=int, default=1, help="bundle twist (wps/bmun)")
    h.add_argument("--n", type=int, help="power class modulus (bmun)")
    h.add_argument("--x", help="rational representative (bmun)")
    h.add_argument("--d", type=int, help="squarefree integer (quadratic)")
    h.add_argument("--line", help='roots "u1,v1,m1;..." (football)')
    h.add_argument("--divisor", help='divisor "d;n1,n2,..." (football)')
    h.add_argument("--tangent", action="store_true", help="use the tangent divisor")
    h.add_argument("--A", type=int, help="elliptic coefficient")
    h.add_argument("--B", type=int, help="elliptic coefficient")
    h.add_argument("--coeffs", help="hyperelliptic a2,a3,... coefficients")
    h.add_argument("--form", help="quadratic form a,b,c (sym2)")
    h.set_defaults(fn=cmd_height)

    m = sub.add_parser("malle", help="Malle exponent of a permutation group")
    m.add_argument("--degree", type=int, required=True)
    m.add_argument("--gens", required=True, help='generators "(1 2 3);(1 2)"')
    m.set_defaults(fn=cmd_malle)

    c = sub.add_parser("count", help="run a counting schedule")
    c.add_argument("--family", choices=sorted(FAMILIES))
    c.add_argument("--config", help="INI config file")
    c.add_argument("--b0", help="first bound (exact decimal or fraction)")
    c.add_argument("--ratio", help="schedule ratio (exact decimal or fraction)")
    c.add_argument("--steps", type=int)
    c.add_argument("--n", type=int, help="bmun modulus")
    c.add_argument("--format", choices=["csv", "json", "plot"])
    c.add_argument("--threads", type=int)
    c.add_argument("--seed", type=int)
    c.add_argument("--out", help="output directory")
    c.add_argument("--resume", action="store_true", help="reuse checkpointed samples")
    c.set_defaults(fn=cmd_count)

    f = sub.add_parser("fit", help="fit growth exponents of a saved report")
    f.add_argument("--report", required=True)
    f.add_argument("--update", action="store_true", help="write the fit back")
    f.set_defaults(fn=cmd_fit)

    s = sub.add_parser("search", help="stacky Vojta exception searches")
    s.add_argument("--kind", choices=["444", "ap5"], required=True)
    s.add_argument("--cutoff", type=int, required=True)
    s.add_argument("--delta", type=float, required=True)
    s.add_argument("--threads", type=int)
    s.set_defaults(fn=cmd_search)

    k = sub.add_parser("check", help="run the exact cross-validation suites")
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--samples", type=int, default=1000)
    k.set_defaults(fn=cmd_check)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
