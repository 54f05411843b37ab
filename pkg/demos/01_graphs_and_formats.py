"""Build graphs, serialize them, and inspect structure after edge deletion."""

from preclusion import (
    EdgeSet,
    components,
    delete_edges,
    emit,
    hypercube,
    parse,
    petersen,
    random_bipartite_with_pm,
)

q3 = hypercube(3)
print(f"3-cube: {q3.n} vertices, {q3.m} edges, bit-parity sides {q3.bipartition[:4]}...")
print("vertex 5 =", format(5, "03b"), "neighbors:", q3.neighbors(5))

print("\ngraph6 line:", emit(q3, "graph6").strip())
print("edge list head:", emit(q3, "edge_list").splitlines()[:3])
round_tripped = parse("graph6", emit(q3, "graph6"))
print("graph6 round trip equals original:", round_tripped == q3)

p = petersen()
print(f"\nPetersen graph: {p.n} vertices, {p.m} edges, 3-regular:",
      all(p.degree(v) == 3 for v in range(p.n)))

rb = random_bipartite_with_pm(4, 0.3, seed=7)
print(f"\nrandom balanced bipartite (t=4, p=0.3, seed=7): {rb.m} edges")
print("planted matching present:", all(rb.has_edge(i, 4 + i) for i in range(4)))

fault = EdgeSet.from_pairs(q3, [(0, 1), (0, 2), (0, 4)])
left = delete_edges(q3, fault)
report = components(left)
print(f"\nafter deleting the star of vertex 0: {len(report.components)} components,"
      f" smallest has {report.min_size} vertex")
