"""One reduction, three guises: posets, complexes, and graphs in a triangle.

The diamond poset is the classic example where nothing is strictly
dismantlable at the ends, yet its comparability graph folds freely: weak
domination in the poset is exactly domination in the graph. The functors
between the three categories carry certificates back and forth, and the
barycentric subdivision closes the triangle with two equal composites.
"""

from dismantle import (Poset, SimplicialComplex, bd, clique_complex,
                       clique_poset, comp, comp_cert_from_weak_poset_cert,
                       dismantlable_elements, dominated_vertices,
                       face_graph, face_poset, order_complex, poset_core,
                       star_deletion_order, strong_collapse_core,
                       verify_certificate, weakly_dismantlable_elements)

diamond = Poset("abcd", [("d", "b"), ("d", "c"), ("b", "a"), ("c", "a")])
print("diamond poset (d < b < a, d < c < a):")
print(diamond.to_text())
print("strictly dismantlable:", dismantlable_elements(diamond))
print("weakly dismantlable pairs:", weakly_dismantlable_elements(diamond))

cg = comp(diamond)
print("\nits comparability graph has edges:", cg.edges())

core, weak_cert = poset_core(diamond, mode="weak")
print("weak dismantling to a point:", weak_cert.steps)
graph_cert = comp_cert_from_weak_poset_cert(diamond, weak_cert)
print("the same steps dismantle the comparability graph:",
      verify_certificate(cg, graph_cert))

print("\nstrong collapse of a solid triangle:")
full = SimplicialComplex([("a", "b", "c")])
print("dominated vertices:", dominated_vertices(full))
core, cert = strong_collapse_core(full)
print("collapses to", core.facets, "via", cert.steps)

print("\ndeleting one dominated vertex expands, inside the face graph,")
print("into an ordered run over its star:")
for simplex, witness in star_deletion_order(full, "b", "a"):
    print(f"  delete {simplex} (dominated by {witness})")

print("\nbarycentric subdivision agrees along both routes:")
print("  graphs:   ", comp(clique_poset(cg)) == face_graph(clique_complex(cg)))
print("  posets:   ", clique_poset(comp(diamond))
      == face_poset(order_complex(diamond)))
print("  complexes:", clique_complex(face_graph(full))
      == order_complex(face_poset(full)))
print("bd(diamond) has", len(bd(diamond)), "elements, one per chain")
