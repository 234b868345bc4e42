"""The space of morphisms from a path into a triangle, and what a fold does.

Twelve maps send the path 0-1-2 into the loopless triangle. They form a
reflexive graph whose cliques collapse onto thirty cells. Folding the path
down to an edge dismantles the thirty-vertex cell graph onto the twelve
cells of the folded pair, which form a stiff subdivided hexagon.
"""

from dismantle import (clique_poset, clique_to_cell_dismantle,
                       complete_graph, enumerate_morphisms,
                       fold_induced_hom_dismantle, hom_cells, hom_face_graph,
                       hom_graph, is_stiff, path_graph, phi, psi,
                       replay_poset_certificate, verify_certificate)

p3 = path_graph(3)
k3 = complete_graph(3).relabel({0: "a", 1: "b", 2: "c"})

morphisms = enumerate_morphisms(p3, k3)
print(f"{len(morphisms)} morphisms from the path into the triangle:")
for m in morphisms:
    print("  ", m.name)

hg = hom_graph(p3, k3)
print(f"\ntheir graph has {len(hg.edges())} edges "
      f"(three 4-cliques and three bridges)")

cells = hom_cells(p3, k3)
print(f"{len(cells)} cells; the top-dimensional ones:")
for cell in cells:
    if sum(len(ws) - 1 for _, ws in cell.assignment) == 2:
        print("  ", cell.name)

square = next(c for c in cells
              if sum(len(ws) - 1 for _, ws in c.assignment) == 2)
print("\na cell and the clique of its selections:")
print("  cell:", square.name)
print("  selections:", [m.name for m in psi(p3, k3, square)])
print("  collapsing the selections recovers the cell:",
      phi(p3, k3, psi(p3, k3, square)).name == square.name)

cert = clique_to_cell_dismantle(p3, k3)
cp = clique_poset(hg)
ok, _, _, residual = replay_poset_certificate(cp, cert)
print(f"\nthe {len(cp)}-element clique poset dismantles in {len(cert)} "
      f"steps onto {len(residual)} cliques, one per cell: {ok}")

fold_cert = fold_induced_hom_dismantle(p3, k3, "source", 2, 0)
fg = hom_face_graph(p3, k3)
sub = hom_face_graph(complete_graph(2), k3)
print(f"\nfolding the path onto an edge dismantles the {len(fg)}-vertex "
      f"cell graph in {len(fold_cert)} steps: "
      f"{verify_certificate(fg, fold_cert)}")
print(f"the remaining {len(sub)}-vertex cell graph is stiff: "
      f"{is_stiff(sub)}")
