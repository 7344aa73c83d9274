"""Write a small synthetic dataset in TU format, read it back and summarize it."""

import sys
import tempfile

from oddcl import dataset_stats, parse_tu_dataset, random_dataset, write_tu_dataset


def main(root=None):
    root = root or tempfile.mkdtemp(prefix="oddcl-demo-")
    write_tu_dataset(random_dataset(12, 10, 14, 3, seed=5, name="DEMO"), root)
    ds = parse_tu_dataset(root, "DEMO")
    stats = dataset_stats(ds)
    print(f"dataset written to {root}")
    print(f"{stats.num_graphs} graphs, {stats.avg_nodes:.1f} nodes and "
          f"{stats.avg_edges:.1f} edges on average, attributes of dimension {stats.attribute_dim}")
    g = ds[0]
    print(f"first graph: {g.num_nodes} nodes, labels {sorted(set(g.labels))}")


if __name__ == "__main__":
    main(*sys.argv[1:])
