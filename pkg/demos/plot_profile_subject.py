"""
Measuring a before/after pair
=============================

Profile a busy and a lighter version of the bundled duty-cycle subject and
turn the two summaries into a per-instance impact.
"""

from smellwatt.profiler import (
    RunSpec,
    normalize_per_instance,
    python_subject,
    relative_change,
    run_repeated,
    summarize,
)


def measure(fraction):
    spec = RunSpec(python_subject("duty", "--fraction", str(fraction), "--seconds", "2.5"),
                   duration_limit=5, warmup_discard=0.5, repetitions=3)
    runs = run_repeated(spec, progress=lambda i, n, _s: print(f"  run {i}/{n}"))
    return summarize(runs)


before = measure(0.6)
after = measure(0.3)
print(f"before {before.mean_cpu_pct:.1f}% CPU, after {after.mean_cpu_pct:.1f}% CPU")

# %%
# Suppose the lighter version came from refactoring 12 smell instances.
delta = relative_change(before, after)
per = normalize_per_instance(delta, 12)
print(f"CPU down {delta.dcpu_pct:.2f}%, {per.dcpu_per_instance:.3f}% per instance")
