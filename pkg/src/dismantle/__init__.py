"""Dismantlability of graphs, posets and simplicial complexes.

Domination and folding in graphs, beat-point deletions in posets and strong
collapses of complexes, connected by functors under which the three notions
correspond; every reduction is returned as a replayable certificate. The
morphism-graph and cell-complex machinery decides how folds on either side
transform the space of morphisms between two graphs.
"""

from .canon import label, sort_key, sorted_ids
from .certificate import DismantlingCertificate
from .complexes import (SimplicialComplex, derive_collapse_certificate,
                        dominated_vertices, replay_collapse_certificate,
                        star_deletion_order, strong_collapse_core,
                        strong_collapse_onto, verify_collapse_certificate)
from .errors import (CertificateError, DismantleError, DominationError,
                     InputError, InternalConsistencyError, ParseError,
                     PreconditionError, ResourceError, StaleCertificateError,
                     ValidationError)
from .formats import parse, parse_complex, parse_graph, parse_poset, serialize
from .functors import (atoms_graph, bd, clique_complex, clique_poset,
                       clique_poset_cert_from_graph_cert,
                       collapse_cert_from_face_graph_cert,
                       collapse_cert_from_graph_cert, comp,
                       comp_cert_from_weak_poset_cert, face_graph, face_poset,
                       face_graph_cert_from_collapse_cert,
                       graph_cert_from_collapse_cert,
                       identify_atoms_with_vertices, order_complex, rub,
                       weak_poset_cert_from_comp_cert)
from .graphs import (Graph, are_isomorphic, cliques, complete_graph,
                     cycle_graph, derive_graph_certificate, dismantle_core,
                     dismantles_onto, dominates, find_dominated, fold,
                     is_stiff, maximal_cliques, named_graph,
                     open_neighborhood, path_graph, reflexive_closure,
                     replay_certificate, same_d_homotopy_type,
                     verify_certificate)
from .homcomplex import (IndexingFunction, clique_to_cell_dismantle,
                         fold_induced_hom_dismantle, hom_cells,
                         hom_face_graph, hom_face_poset, hom_fold_embedding,
                         is_indexing_function, phi, psi)
from .homgraph import (Morphism, compose, enumerate_morphisms, hom_graph,
                       homotopic, identity_morphism, include_target,
                       is_morphism, morphisms_adjacent, precompose_fold,
                       restrict_source, retract_target, sdr_homotopy)
from .posets import (MonotoneMap, Poset, derive_poset_certificate,
                     dismantlable_elements, fixpoint_dismantle, poset_core,
                     replay_poset_certificate, verify_poset_certificate,
                     weakly_dismantlable_elements, weakly_dominates)

__version__ = "0.1.0"
