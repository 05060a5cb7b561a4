"""Curve data for the mixed family, as CSV, plus a randomized campaign."""

import csv
import io

import numpy as np

from geocoherence.figures import FIGURES, figure_csv
from geocoherence.verification import run_campaign

# Each figure tabulates the exact summed coherence and its bounds over q in [0, 1].
for which in FIGURES:
    text = figure_csv(which, 6)
    print(which)
    print(text)
    rows = np.array(list(csv.reader(io.StringIO(text)))[1:], dtype=float)
    # every column starts at 0 and never decreases
    print("monotone:", bool(np.all(np.diff(rows[:, 1:], axis=0) >= 0)))

# The same data from the shell: `geocoherence figure fig2a --steps 101 --out fig2a.csv`.

# Campaigns check a relation on many random inputs. Results depend only on the seed,
# not on the number of worker threads.
a = run_campaign("t2", 3000, seed=11, workers=1)
b = run_campaign("t2", 3000, seed=11, workers=3)
print(a.as_dict())
print("same with 3 workers:", a.as_dict() == b.as_dict())
