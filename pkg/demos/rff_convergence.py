"""Error of the approximate kernel as the number of random features grows."""

import numpy as np

from oddcl import KernelConfig, compute_gram, random_dataset

ds = random_dataset(20, 15, 22, 8, seed=6, jitter=3)
exact = compute_gram(ds, KernelConfig(h=2), workers=1).values

print("     D   mean error   max error")
for D in (16, 64, 256, 1024, 4096):
    errs = [np.abs(compute_gram(ds, KernelConfig(h=2, D=D, seed=s, kernel_kind="oddcl-approx"),
                                workers=1).values - exact) for s in range(3)]
    print(f"{D:6d}   {np.mean([e.mean() for e in errs]):.5f}      {max(e.max() for e in errs):.5f}")
