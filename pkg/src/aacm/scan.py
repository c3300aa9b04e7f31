"""Range scanner for the AACM / CAACM conjectures with JSONL checkpointing.

Each squarefree d is factored by a segmented numpy sieve, its unit is reduced
mod d^(k+1) by the continued-fraction kernel, and d | u decides the status.
L_p(1, chi_D) is evaluated for counterexamples and for every d with |D| <= lp_limit.
"""

from __future__ import annotations

import configparser
import json
import os
import sys
import time
from bisect import bisect_left
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from math import isqrt

import numpy as np

from . import kernels
from .arith import fundamental_discriminant, primes_upto
from .bernoulli import quadratic_character
from .errors import DomainError
from .lp import lp_one_log_sum
from .quadfield import CLASS_NUMBER_MAX_D, DEFAULT_PERIOD_BOUND, class_number_real

MODES = ("primes-1mod4", "primes-3mod4", "primes", "composites", "all")
RECORD_VERDICTS = ("holds", "counterexample", "degenerate", "error")
CHUNK = 20_000
_MAX_OMEGA = 16


@dataclass
class ScanConfig:
    start: int = 3
    stop: int = 1000
    mode: str = "composites"
    jobs: int = field(default_factory=lambda: int(os.environ.get("AACM_JOBS", "1")))
    precision: int = 1
    period_bound: int = DEFAULT_PERIOD_BOUND
    output: str | None = None
    resume: bool = False
    lp_limit: int = 20_000

    def __post_init__(self):
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}")
        if self.start > self.stop:
            raise DomainError("from must not exceed to")
        if self.jobs < 1:
            raise DomainError("jobs must be >= 1")
        if self.precision < 1:
            raise DomainError("precision must be >= 1")
        if self.stop >= 1 << 62:
            raise DomainError("d must stay below 2^62")


_KEY_ALIASES = {"from": "start", "to": "stop", "period-bound": "period_bound", "lp-limit": "lp_limit"}


def read_config_file(path: str) -> dict:
    """key = value lines (no section header) as ScanConfig keyword arguments."""
    parser = configparser.ConfigParser()
    with open(path, encoding="utf-8") as fh:
        parser.read_string("[scan]\n" + fh.read())
    types = {f.name: f.type for f in fields(ScanConfig)}
    out = {}
    for key, raw in parser["scan"].items():
        name = _KEY_ALIASES.get(key, key.replace("-", "_"))
        if name not in types:
            raise DomainError(f"unknown config key {key!r}")
        if name == "resume":
            out[name] = parser["scan"].getboolean(key)
        elif name in ("mode", "output"):
            out[name] = raw
        else:
            out[name] = int(raw)
    return out


# -- factorization of a window ----------------------------------------------


def factor_window(lo: int, hi: int) -> tuple[np.ndarray, list[tuple[int, ...]]]:
    """Squarefree d in [lo, hi) and their prime divisors (ascending)."""
    n = hi - lo
    d = np.arange(lo, hi, dtype=np.int64)
    rem = d.copy()
    squarefree = np.ones(n, dtype=bool)
    slots = np.zeros((n, _MAX_OMEGA), dtype=np.int64)
    count = np.zeros(n, dtype=np.int64)
    for q in primes_upto(isqrt(hi - 1) + 1):
        q = int(q)
        first = (-lo) % q
        idx = np.arange(first, n, q)
        if idx.size == 0:
            continue
        slots[idx, count[idx]] = q
        count[idx] += 1
        rem[idx] //= q
        squarefree[idx[rem[idx] % q == 0]] = False
    big = rem > 1
    slots[big, count[big]] = rem[big]
    count[big] += 1
    keep = np.nonzero(squarefree & (d > 1))[0]
    return d[keep], [tuple(int(x) for x in slots[i, : count[i]]) for i in keep]


def _wanted(mode: str, d: int, primes: tuple[int, ...]) -> bool:
    if d < 3:
        return False
    if mode == "all":
        return True
    if mode == "composites":
        return len(primes) > 1
    if len(primes) != 1:
        return False
    if mode == "primes":
        return True
    return d % 4 == (1 if mode == "primes-1mod4" else 3)


# -- one record -------------------------------------------------------------


def scan_one(d: int, primes: tuple[int, ...], cfg: ScanConfig) -> dict:
    t0 = time.perf_counter()
    disc = fundamental_discriminant(d)
    rec = {"d": d, "D": disc.D, "delta": disc.delta, "primes": [], "period_length": None}
    try:
        cap = cfg.precision + 1
        _, u_mod, L, _ = kernels.cf_unit_mod_checked(d, d**cap, cfg.period_bound)
        if L < 0:
            raise RuntimeError(f"period exceeds bound {cfg.period_bound}")
        rec["period_length"] = L
        counterexample = u_mod % d == 0
        with_lp = counterexample or abs(disc.D) <= cfg.lp_limit
        h = None
        entries = []
        for p in primes:
            if p == 2:
                continue
            up = u_mod % p
            v = 0
            while v < cap and u_mod % p ** (v + 1) == 0:
                v += 1
            entry = {"p": p, "u_mod_p": up, "u_valuation_capped": v, "lp_unit": None, "h_mod_p": None}
            if not with_lp:
                entry["verdict"] = "unchecked"
            else:
                unit = lp_one_log_sum(quadratic_character(disc.D), p).value != 0
                entry["lp_unit"] = unit
                if p == 3 and (d // 3) % 3 == 2:
                    entry["verdict"] = "degenerate"
                elif (up == 0) != unit:
                    entry["verdict"] = "pass"
                elif up == 0:
                    entry["verdict"] = "fail"
                elif d <= CLASS_NUMBER_MAX_D:
                    # non-unit with p not dividing u: must come from p | h
                    if h is None:
                        h = class_number_real(d)
                    entry["h_mod_p"] = h % p
                    entry["verdict"] = "pass" if h % p == 0 else "fail"
                else:
                    entry["verdict"] = "degenerate"
            entries.append(entry)
        rec["primes"] = entries
        if counterexample:
            rec["verdict"] = "counterexample"
        elif any(e["verdict"] == "degenerate" for e in entries):
            rec["verdict"] = "degenerate"
        else:
            rec["verdict"] = "holds"
    except Exception as exc:  # recorded inline, the scan goes on
        rec["verdict"] = "error"
        rec["error"] = f"{type(exc).__name__}: {exc}"
    rec["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return rec


def _slim(rec: dict) -> tuple[int, str, int]:
    return rec["d"], rec["verdict"], sum(e["verdict"] == "fail" for e in rec["primes"])


def _scan_window(args) -> tuple[list[str], list[tuple[int, str, int]]]:
    """JSON lines for one window plus (d, verdict, failed checks) for the summary."""
    lo, hi, cfg, done = args
    ds, plists = factor_window(lo, hi)
    lines, slim = [], []
    for d, primes in zip(ds.tolist(), plists):
        if d in done or not _wanted(cfg.mode, d, primes):
            continue
        rec = scan_one(d, primes, cfg)
        lines.append(json.dumps(rec, separators=(",", ":")))
        slim.append(_slim(rec))
    return lines, slim


# -- driver -----------------------------------------------------------------


def load_existing(path: str) -> list[dict]:
    """Records already in ``path``; a torn final line is cut off the file."""
    if not os.path.exists(path):
        return []
    records = []
    good = 0
    with open(path, "rb") as fh:
        data = fh.read()
    pos = 0
    while pos < len(data):
        nl = data.find(b"\n", pos)
        if nl < 0:
            break
        try:
            records.append(json.loads(data[pos:nl]))
        except json.JSONDecodeError:
            break
        pos = good = nl + 1
    if good != len(data):
        with open(path, "r+b") as fh:
            fh.truncate(good)
    return records


@dataclass
class ScanSummary:
    counts: dict
    counterexamples: list
    failed_checks: int

    def lines(self) -> list[str]:
        c = self.counts
        out = [
            f"holds={c['holds']} counterexample={c['counterexample']} "
            f"degenerate={c['degenerate']} error={c['error']}"
        ]
        if self.counterexamples:
            out.append("counterexamples: " + " ".join(map(str, self.counterexamples)))
        if self.failed_checks:
            out.append(f"per-prime check failures: {self.failed_checks}")
        return out


def summarize(records) -> ScanSummary:
    return _tally(_slim(r) for r in records)


def _tally(slim) -> ScanSummary:
    counts = dict.fromkeys(RECORD_VERDICTS, 0)
    cx = []
    failed = 0
    for d, verdict, nfail in slim:
        counts[verdict] += 1
        if verdict == "counterexample":
            cx.append(d)
        failed += nfail
    return ScanSummary(counts, sorted(cx), failed)


def _windows(cfg: ScanConfig, done: list[int]):
    lo = cfg.start
    while lo <= cfg.stop:
        hi = min(lo + CHUNK, cfg.stop + 1)
        i, j = bisect_left(done, lo), bisect_left(done, hi)
        yield lo, hi, cfg, frozenset(done[i:j])
        lo = hi


def run_scan(cfg: ScanConfig, out=None) -> ScanSummary:
    """Run the scan; records go to cfg.output (or ``out``), one writer, window order."""
    slim = []
    if cfg.output and cfg.resume:
        slim = [_slim(r) for r in load_existing(cfg.output)]
    done = sorted(d for d, _, _ in slim)
    if cfg.output:
        fh = open(cfg.output, "a" if cfg.resume else "w", encoding="utf-8", newline="\n")
    else:
        fh = out or sys.stdout
    try:
        if cfg.jobs == 1:
            results = map(_scan_window, _windows(cfg, done))
            executor = None
        else:
            executor = ProcessPoolExecutor(max_workers=cfg.jobs)
            results = executor.map(_scan_window, _windows(cfg, done))
        for lines, window_slim in results:
            fh.writelines(line + "\n" for line in lines)
            fh.flush()
            slim.extend(window_slim)
        if executor is not None:
            executor.shutdown()
    finally:
        if cfg.output:
            fh.close()
    return _tally(slim)
