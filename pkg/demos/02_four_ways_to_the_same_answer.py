"""Compute the same scores along four independent routes and diff them.

main      merge intersections over sorted higher-ordered adjacency prefixes,
          no hashing, each triangle processed exactly once
basic     hash-set edge lookups over neighbor pairs
algebraic sparse matrices: (3A - 2*binarize(T) + I) @ (T @ 1) / sum(T)
parallel  the main kernel partitioned over a worker pool with private
          buffers, merged deterministically
"""

import numpy as np

from tricent import (ParallelConfig, load_fixture, parallel_triangle_centrality,
                     run_mapreduce_tc, triangle_centrality,
                     triangle_centrality_algebraic, triangle_centrality_basic,
                     work_report)

g = load_fixture("dolphins")
main = triangle_centrality(g)

others = {
    "basic": triangle_centrality_basic(g).scores,
    "algebraic": triangle_centrality_algebraic(g).scores,
    "mapreduce": run_mapreduce_tc(g)[0].scores,
}
for workers in (1, 2, 8):
    cv, counters = parallel_triangle_centrality(g, ParallelConfig(workers=workers))
    others[f"parallel[{workers}]"] = cv.scores

print(f"dolphins: n={g.n} m={g.m} triangles={main.tri_total}\n")
for name, scores in others.items():
    diff = np.max(np.abs(scores - main.scores))
    bitwise = np.array_equal(scores, main.scores)
    print(f"  {name:<12} max|diff| = {diff:.3e}   bitwise equal: {bitwise}")

print("\nwork accounting for the parallel run:")
print(" ", work_report(counters, g))
