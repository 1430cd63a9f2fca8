"""Launch a subject process and sample its CPU and resident memory."""

from __future__ import annotations

import logging
import os
import subprocess
import sys
import time

import psutil

from ..errors import LaunchError
from .model import ResourceSample, RunSeries, RunSpec

log = logging.getLogger(__name__)

_HAS_AFFINITY = hasattr(os, "sched_setaffinity")


def _target_cpu() -> int | None:
    if not _HAS_AFFINITY:
        return None
    return max(os.sched_getaffinity(0))


def _cpu_seconds(proc: psutil.Process) -> float:
    t = proc.cpu_times()
    return t.user + t.system


def run_measurement(spec: RunSpec) -> RunSeries:
    """Run ``spec`` once in a fresh process and sample it every ``sample_interval`` ms.

    The subject is pinned to one logical CPU where the platform allows it, so
    ``cpu_pct`` is relative to a single core.  Samples younger than
    ``warmup_discard`` are dropped.  A subject still running at
    ``duration_limit`` is terminated and the series is flagged ``timed_out``.
    """
    cpu = _target_cpu()
    preexec = (lambda: os.sched_setaffinity(0, {cpu})) if cpu is not None else None
    try:
        child = subprocess.Popen(
            spec.argv,
            stdin=subprocess.DEVNULL,
            stdout=subprocess.DEVNULL,
            stderr=subprocess.DEVNULL,
            preexec_fn=preexec,
        )
    except (OSError, subprocess.SubprocessError) as exc:
        raise LaunchError(f"cannot start {spec.argv[0]!r}: {exc}") from exc
    t0 = time.perf_counter()
    series = RunSeries(spec.spec_id, pinned_cpu=cpu)
    step = spec.sample_interval / 1000.0
    try:
        proc = psutil.Process(child.pid)
        prev_wall, prev_cpu = time.perf_counter(), _cpu_seconds(proc)
        k = 1
        while child.poll() is None:
            now = time.perf_counter()
            if now - t0 >= spec.duration_limit:
                series.timed_out = True
                break
            # fixed grid of deadlines so the cadence does not drift with sampling cost
            deadline = t0 + k * step
            if deadline > now:
                time.sleep(deadline - now)
            else:
                k = int((now - t0) / step)
            k += 1
            try:
                c = _cpu_seconds(proc)
                rss = proc.memory_info().rss
            except (psutil.NoSuchProcess, psutil.ZombieProcess, psutil.AccessDenied):
                break
            if child.poll() is not None:
                # exited during this interval; a zombie reports no memory
                break
            wall = time.perf_counter()
            dt = wall - prev_wall
            if dt > 0:
                t_ms = (wall - t0) * 1000.0
                if t_ms >= spec.warmup_discard * 1000.0:
                    series.samples.append(ResourceSample(t_ms, max(0.0, 100.0 * (c - prev_cpu) / dt), rss))
            prev_wall, prev_cpu = wall, c
    except psutil.NoSuchProcess:
        pass
    finally:
        if child.poll() is None:
            child.terminate()
            try:
                child.wait(timeout=2)
            except subprocess.TimeoutExpired:
                child.kill()
        series.exit_status = child.wait()
    return series


def run_repeated(spec: RunSpec, progress=None) -> list[RunSeries]:
    """``spec.repetitions`` sequential runs, each in a new process."""
    out = []
    for i in range(spec.repetitions):
        s = run_measurement(spec)
        out.append(s)
        if progress is not None:
            progress(i + 1, spec.repetitions, s)
    return out


def python_subject(*args: str) -> list[str]:
    """argv running one of the bundled calibration subjects with this interpreter."""
    return [sys.executable, "-m", "smellwatt.profiler.subjects", *args]
