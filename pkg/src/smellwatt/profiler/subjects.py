"""Calibration subjects with resource use known by construction.

``duty`` keeps one core busy for a fixed fraction of every period.
``alloc`` holds a fixed total resident set.
"""

from __future__ import annotations

import argparse
import time

import psutil

MIB = 1 << 20
PAGE = 4096


def duty_cycle(fraction: float, seconds: float, period_ms: float = 20.0) -> int:
    """Spin for ``fraction`` of each period and sleep for the rest."""
    period = period_ms / 1000.0
    busy = fraction * period
    end = time.perf_counter() + seconds
    spins = 0
    start = time.perf_counter()
    while start < end:
        while time.perf_counter() - start < busy:
            spins += 1
        rest = start + period - time.perf_counter()
        if rest > 0:
            time.sleep(rest)
        start += period
    return spins


def hold_resident(total_bytes: int, seconds: float) -> int:
    """Grow the process to ``total_bytes`` of resident memory and keep it there."""
    base = psutil.Process().memory_info().rss
    extra = max(0, total_bytes - base)
    # bytearray repetition writes every byte, so the pages are really resident
    buf = bytearray(b"\x01") * extra
    time.sleep(seconds)
    return len(buf)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="smellwatt.profiler.subjects")
    sub = p.add_subparsers(dest="subject", required=True)
    d = sub.add_parser("duty")
    d.add_argument("--fraction", type=float, default=0.5)
    d.add_argument("--seconds", type=float, default=6.0)
    d.add_argument("--period-ms", type=float, default=20.0)
    a = sub.add_parser("alloc")
    a.add_argument("--mib", type=float, default=100.0)
    a.add_argument("--seconds", type=float, default=6.0)
    sub.add_parser("noop")
    args = p.parse_args(argv)
    if args.subject == "duty":
        duty_cycle(args.fraction, args.seconds, args.period_ms)
    elif args.subject == "alloc":
        hold_resident(int(args.mib * MIB), args.seconds)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
