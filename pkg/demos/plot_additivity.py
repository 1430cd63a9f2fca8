"""
Is refactoring impact additive?
===============================

Sum the per-smell deltas of each app and compare the sum with the delta
measured when all of those smells were refactored in one batch.
"""

from smellwatt.advisor import emit_report
from smellwatt.catalog import Resource
from smellwatt.impact import BatchMode, additivity_report, batch_extremes
from smellwatt.impact.fixtures import reference_batches, reference_dataset

dataset = reference_dataset()
batches = reference_batches()
print(f"{len(list(dataset))} per-smell records over {len(dataset.apps())} apps, {len(batches)} batches")

# %%
# Only the IMPROVING and WORSENING batches are sums of measured single-smell
# runs; the ALL batches are kept apart.
report = additivity_report(dataset, [b for b in batches if b.mode is not BatchMode.ALL])
for (mode, res), s in report.aggregate.items():
    print(f"{mode.value:9} {res.value:6} mean {s.mean_deviation:5} "
          f"min {s.min_deviation} ({s.min_app})  max {s.max_deviation} ({s.max_app})")

# %%
# Worsening deltas are negative: positive always means less resource use.
row = report.row("log4j", BatchMode.WORSENING, Resource.MEMORY)
print(f"log4j memory: predicted {row.predicted_sum}, observed {row.observed_batch}, deviation {row.deviation}")

# %%
# Refactoring every smell at once.
for res in Resource:
    e = batch_extremes(batches, BatchMode.ALL, res)
    print(f"ALL {res.value}: max {e.max_value} ({e.max_app}), min {e.min_value} ({e.min_app})")

# %%
# Scatter data for a CPU-vs-memory plot, one row per (app, kind).
print(emit_report(dataset, "csv-plotdata").splitlines()[:4])
