"""
From source code to a refactoring plan
======================================

Detect smells in a small Java corpus, turn them into a feature vector and
ask the advisor which kinds to refactor under each objective.
"""

from pathlib import Path

from smellwatt.advisor import Objective, ObjectiveMode, emit_report, plan_batch
from smellwatt.detector import compute_metrics, count_by_kind, detect_smells, ingest_corpus
from smellwatt.impact.fixtures import reference_dataset
from smellwatt.predictor import build_feature_vector

corpus_dir = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "smells16"
corpus = ingest_corpus([corpus_dir])
smells = detect_smells(corpus)
for kind, n in count_by_kind(smells).items():
    print(f"{kind.value:22} {n}")

# %%
fv = build_feature_vector(compute_metrics(corpus), smells, "editor")
print(f"loc {fv.loc}, smelly loc {fv.smelly_loc}, mean WMC {fv.wmc_mean:.2f}")

# %%
# The additive estimate uses the mean per-instance impact of each kind,
# within the app's category when the reference data has that category.
dataset = reference_dataset()
for mode in ObjectiveMode:
    plan = plan_batch(smells, dataset, Objective(mode), category=fv.category)
    inc = ", ".join(k.value for k in plan.included_kinds())
    print(f"{mode.value:22} include: {inc}")

# %%
plan = plan_batch(smells, dataset, Objective(ObjectiveMode.CPU_ONLY, budget=2.0), category=fv.category)
print(emit_report(plan, "markdown"))
