"""qflab command line: run scenarios, list the catalog, regenerate and verify goldens."""

from __future__ import annotations

import argparse
import csv
import difflib
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .quadmaps import GuardExceeded
from .scenarios import CATALOG, ConfigError, Report, list_scenarios, run_scenario

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
FORMATS = ("json", "csv", "text")
CONFIG_KEYS = {"scenario", "params", "format", "out", "workers"}
CSV_COLUMNS = ["scenario", "name", "expected", "computed", "verdict", "witness", "elapsed-ms"]
DEFAULT_GOLDENS = "goldens"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on its own errors; route them through main so tests can capture them
    def error(self, message):
        raise _UsageError(message)


def load_config(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"config {path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(data) - CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys {sorted(unknown)}; accepted: {sorted(CONFIG_KEYS)}")
    if "params" in data and not isinstance(data["params"], dict):
        raise ConfigError("config 'params' must be an object")
    if "format" in data and data["format"] not in FORMATS:
        raise ConfigError(f"config 'format' must be one of {', '.join(FORMATS)}")
    if "workers" in data and (not isinstance(data["workers"], int) or data["workers"] < 1):
        raise ConfigError("config 'workers' must be a positive integer")
    scen = data.get("scenario")
    if scen is not None and not (isinstance(scen, str) or (isinstance(scen, list) and all(isinstance(s, str) for s in scen))):
        raise ConfigError("config 'scenario' must be a name or a list of names")
    return data


def _run_one(args: tuple[str, dict]) -> Report:
    name, params = args
    return run_scenario(name, params)


def run_many(names: list[str], params: dict | None = None, workers: int = 1) -> list[Report]:
    """Run scenarios, possibly in parallel; the result is ordered by scenario name."""
    names = sorted(set(names))
    for n in names:
        if n not in CATALOG:
            raise ConfigError(f"unknown scenario {n!r}; run 'qflab list' for the catalog")
    jobs = [(n, params or {}) for n in names]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(j) for j in jobs]


def _scalar(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (dict, list, tuple)):
        return json.dumps(v, sort_keys=True, default=str)
    return str(v)


def render(reports: list[Report], fmt: str, timing: bool = True) -> str:
    if fmt == "json":
        docs = [r.as_dict(timing) for r in reports]
        body = docs[0] if len(docs) == 1 else docs
        return json.dumps(body, indent=2, sort_keys=True, default=str) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in reports:
            for a in r.assertions:
                w.writerow([r.scenario, a.name, _scalar(a.expected), _scalar(a.computed), a.verdict,
                            a.witness or "", r.elapsed_ms if timing else ""])
        return buf.getvalue()
    if fmt == "text":
        lines = []
        for r in reports:
            n_fail = sum(a.verdict == "fail" for a in r.assertions)
            status = "PASS" if r.passed else f"FAIL ({n_fail} failed)"
            head = f"{r.scenario}: {status}, {len(r.assertions)} assertions"
            lines.append(head + (f", {r.elapsed_ms} ms" if timing else ""))
            for a in r.assertions:
                lines.append(f"  [{a.verdict}] {a.name}: expected {_scalar(a.expected)}, computed {_scalar(a.computed)}")
                if a.witness:
                    lines.append(f"      witness: {a.witness}")
        return "\n".join(lines) + "\n"
    raise ConfigError(f"unknown format {fmt!r}")


def golden_text(report: Report) -> str:
    """Canonical rendering used for goldens: sorted keys, no timing."""
    return json.dumps(report.as_dict(timing=False), indent=2, sort_keys=True, default=str) + "\n"


def regenerate_goldens(directory: str | Path, workers: int = 1) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    paths = []
    for r in run_many(list(CATALOG), workers=workers):
        p = d / f"{r.scenario}.json"
        p.write_text(golden_text(r))
        paths.append(p)
    return paths


def verify_goldens(directory: str | Path, workers: int = 1) -> tuple[bool, list[str]]:
    """Byte comparison of fresh canonical renderings against stored goldens; returns (ok, messages)."""
    d = Path(directory)
    ok, messages = True, []
    for r in run_many(list(CATALOG), workers=workers):
        p = d / f"{r.scenario}.json"
        fresh = golden_text(r)
        if not p.exists():
            ok = False
            messages.append(f"{r.scenario}: missing golden {p}")
            continue
        stored = p.read_text()
        if stored == fresh:
            messages.append(f"{r.scenario}: ok")
            continue
        ok = False
        messages.append(f"{r.scenario}: mismatch")
        diff = difflib.unified_diff(stored.splitlines(), fresh.splitlines(), f"golden/{p.name}", f"fresh/{p.name}", lineterm="")
        messages.extend("  " + line for line in diff)
    return ok, messages


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qflab", description="Exact experiments on relative quadratic maps and the algebra Q.")
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one or more scenarios")
    run.add_argument("names", nargs="*", help="scenario names")
    run.add_argument("--all", action="store_true", help="run the whole catalog")
    run.add_argument("--config", help="JSON file with keys scenario, params, format, out, workers")
    run.add_argument("--format", choices=FORMATS)
    run.add_argument("--out", help="write the report here instead of stdout")
    run.add_argument("--workers", type=int)

    sub.add_parser("list", help="list the scenario catalog")

    g = sub.add_parser("goldens", help="golden-file regression")
    gsub = g.add_subparsers(dest="action", required=True)
    for name in ("regen", "verify"):
        a = gsub.add_parser(name)
        a.add_argument("--dir", default=DEFAULT_GOLDENS)
        a.add_argument("--workers", type=int, default=1)
    return p


def _cmd_run(ns) -> int:
    cfg = load_config(ns.config) if ns.config else {}
    names = list(ns.names)
    if not names and cfg.get("scenario") is not None:
        names = [cfg["scenario"]] if isinstance(cfg["scenario"], str) else list(cfg["scenario"])
    if ns.all:
        if names:
            raise ConfigError("give scenario names or --all, not both")
        names = list(CATALOG)
    if not names:
        raise ConfigError("no scenario given; name one, pass --all, or set 'scenario' in the config")
    fmt = ns.format or cfg.get("format", "text")
    out = ns.out or cfg.get("out")
    workers = ns.workers if ns.workers is not None else cfg.get("workers", 1)
    if workers < 1:
        raise ConfigError("--workers must be at least 1")
    reports = run_many(names, cfg.get("params"), workers)
    text = render(reports, fmt)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        if ns.command == "list":
            width = max(len(n) for n, _ in list_scenarios())
            for n, desc in list_scenarios():
                print(f"{n:<{width}}  {desc}")
            return EXIT_PASS
        if ns.command == "run":
            return _cmd_run(ns)
        if ns.action == "regen":
            for path in regenerate_goldens(ns.dir, ns.workers):
                print(f"wrote {path}")
            return EXIT_PASS
        ok, messages = verify_goldens(ns.dir, ns.workers)
        print("\n".join(messages))
        return EXIT_PASS if ok else EXIT_FAIL
    except _UsageError as e:
        print(f"qflab: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as e:
        print(f"qflab: config error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GuardExceeded as e:
        print(f"qflab: guard exceeded: {e}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
