"""Compare triangle centrality with degree, closeness, betweenness,
eigenvector, and PageRank on the bundled networks: who is the top vertex,
how much do top-10 lists overlap, and where does triangle centrality stand
alone?
"""

from tricent import (agreement_dot_matrices, best_jaccard_competitor,
                     compute_all, load_fixture, rank_vertices, top_k_jaccard)

FIXTURES = ("borgatti", "karate", "dolphins", "hijackers")

rankings = {}
for name in FIXTURES:
    g = load_fixture(name)
    rankings[name] = {m: rank_vertices(cv) for m, cv in compute_all(g).items()}
    tops = {m: g.label_of(int(rk.order[0])) for m, rk in rankings[name].items()}
    print(f"{name:<10} top vertex per measure: {tops}")

print("\nclosest competitor to TC by top-10 Jaccard:")
for name in FIXTURES:
    competitor, j = best_jaccard_competitor("TC", rankings[name])
    print(f"  {name:<10} {competitor}  J = {j} ({float(j):.2f})")

dots = agreement_dot_matrices(rankings)
tc = dots["TC"]
print(f"\nTC agreement grid over {len(tc.graphs)} graphs x {len(tc.competitors)} measures:")
for gname, row in zip(tc.graphs, tc.cells):
    marks = " ".join("x" if hit else "." for hit in row)
    print(f"  {gname:<10} {marks}   ({', '.join(tc.competitors)})")
print(f"TC agreed with {tc.agreement_percent:.0f}% of competitor picks; "
      f"picked a unique top vertex on {tc.unique_rows} graph(s)")

kar = rankings["karate"]
print(f"\nkarate: J(TC, EV) = {top_k_jaccard(kar['TC'], kar['EV'])}, "
      f"J(DC, PR) = {top_k_jaccard(kar['DC'], kar['PR'])}")
