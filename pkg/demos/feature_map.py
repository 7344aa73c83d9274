"""Feature map of a labelled path: one row per (subtree code, attribute vector)."""

import numpy as np

from oddcl import AttributedGraph, compute_feature_map, dump_features

g = AttributedGraph.from_edges(["a", "b", "a"], [(0, 1), (1, 2)],
                               np.array([[0.0], [1.0], [0.5]]), graph_id=1)

for h in (0, 1, 2):
    fm, sizes = compute_feature_map(g, h)
    print(f"h={h}: {fm.total_insertions} insertions")
    # columns: code, subtree size, frequency, attribute vector
    print(dump_features(fm, sizes), end="")
