"""Abstract simplicial complexes: links, cones, strong collapses.

A vertex is dominated when its link is a simplicial cone; deleting it is an
elementary strong collapse. A single-vertex complex counts as a cone (its
vertex is the apex), the empty complex does not.
"""

from __future__ import annotations

import itertools
import threading

from .canon import digest_text, label, sort_key, sorted_ids
from .certificate import DismantlingCertificate
from .errors import (DominationError, InputError, StaleCertificateError,
                     ValidationError)


def _canon_simplex(s):
    t = sorted_ids(s)
    if len(set(t)) != len(t):
        raise InputError(f"repeated vertex in simplex: {s!r}")
    return t


class SimplicialComplex:
    """Immutable finite abstract complex stored by its facets.

    The constructor demands an antichain of nonempty facets; use
    ``from_simplices`` to build from an arbitrary family (non-maximal
    members are pruned). The full simplex set is materialized lazily and
    memoized.

    >>> k = SimplicialComplex([("a", "b", "c")])
    >>> len(k.simplices())
    7
    """

    __slots__ = ("_facets", "_vertices", "_simplices", "_lock", "_digest")

    def __init__(self, facets=()):
        fs = sorted({_canon_simplex(f) for f in facets},
                    key=lambda f: (len(f), sort_key(f)))
        for f in fs:
            if not f:
                raise ValidationError("empty facet")
        for a, b in itertools.combinations(fs, 2):
            if set(a) <= set(b) or set(b) <= set(a):
                raise ValidationError(
                    f"facets are not an antichain: {a!r} and {b!r}")
        self._facets = tuple(fs)
        self._vertices = sorted_ids({v for f in fs for v in f})
        self._simplices = None
        self._lock = threading.Lock()
        self._digest = None

    @classmethod
    def from_simplices(cls, simplices) -> "SimplicialComplex":
        """Build from any family of simplices, keeping the maximal ones."""
        simps = sorted({_canon_simplex(s) for s in simplices if tuple(s)},
                       key=len, reverse=True)
        facets = []
        for s in simps:
            if not any(set(s) <= set(f) for f in facets):
                facets.append(s)
        return cls(facets)

    @property
    def facets(self) -> tuple:
        return self._facets

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self._vertices)

    def __len__(self):
        return len(self.simplices())

    def __bool__(self):
        return bool(self._facets)

    def _require_vertex(self, x):
        if x not in set(self._vertices):
            raise InputError(f"unknown vertex: {x!r}")

    def simplices(self) -> tuple:
        """All nonempty simplices, ordered by dimension then lexicographic."""
        if self._simplices is None:
            with self._lock:
                if self._simplices is None:
                    acc = set()
                    for f in self._facets:
                        for r in range(1, len(f) + 1):
                            acc.update(itertools.combinations(f, r))
                    self._simplices = tuple(
                        sorted(acc, key=lambda s: (len(s), sort_key(s))))
        return self._simplices

    def has_simplex(self, s) -> bool:
        return _canon_simplex(s) in set(self.simplices())

    def link(self, x) -> "SimplicialComplex":
        """Simplices avoiding x whose union with {x} is a simplex."""
        self._require_vertex(x)
        faces = [tuple(v for v in f if v != x)
                 for f in self._facets if x in f]
        return SimplicialComplex.from_simplices(f for f in faces if f)

    def open_star(self, x) -> tuple:
        """Simplices containing x; a plain simplex set, not a complex."""
        self._require_vertex(x)
        return tuple(s for s in self.simplices() if x in s)

    def star(self, x) -> "SimplicialComplex":
        self._require_vertex(x)
        return SimplicialComplex(f for f in self._facets if x in f)

    def delete(self, x) -> "SimplicialComplex":
        """The complex of simplices avoiding x."""
        self._require_vertex(x)
        faces = [f if x not in f else tuple(v for v in f if v != x)
                 for f in self._facets]
        return SimplicialComplex.from_simplices(f for f in faces if f)

    def restrict(self, keep) -> "SimplicialComplex":
        keep = frozenset(keep)
        faces = [tuple(v for v in f if v in keep) for f in self._facets]
        return SimplicialComplex.from_simplices(f for f in faces if f)

    def cone_apexes(self) -> tuple:
        """Vertices contained in every facet (empty for the empty complex)."""
        if not self._facets:
            return ()
        common = set(self._facets[0])
        for f in self._facets[1:]:
            common &= set(f)
        return sorted_ids(common)

    def is_simplicial_cone(self):
        """The smallest apex when the complex is a cone, else None."""
        apexes = self.cone_apexes()
        return apexes[0] if apexes else None

    def to_text(self) -> str:
        lines = [f"f {' '.join(label(v) for v in f)}" for f in self._facets]
        return "\n".join(lines) + ("\n" if lines else "")

    def digest(self) -> str:
        if self._digest is None:
            self._digest = digest_text("complex\n" + self.to_text())
        return self._digest

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self):
        return hash(self.digest())

    def __repr__(self):
        return (f"SimplicialComplex({len(self._vertices)} vertices, "
                f"{len(self._facets)} facets)")


# ---------------------------------------------------------------------------
# domination and strong collapses

def dominated_vertices(k: SimplicialComplex):
    """All pairs (x, a) where the link of x is a cone with apex a."""
    out = []
    for x in k.vertices:
        for a in k.link(x).cone_apexes():
            out.append((x, a))
    return out


def strong_collapse_core(k: SimplicialComplex, rng=None):
    """Greedy deletion of dominated vertices down to a minimal complex."""
    steps = []
    cur = k
    while True:
        pairs = dominated_vertices(cur)
        if not pairs:
            break
        x, a = rng.choice(pairs) if rng is not None else pairs[0]
        steps.append((x, a))
        cur = cur.delete(x)
    cert = DismantlingCertificate("complex", k.digest(), tuple(steps))
    return cur, cert


def strong_collapse_onto(k: SimplicialComplex, sub: SimplicialComplex,
                         rng=None):
    """Greedy strong collapse of k onto a vertex-deletion subcomplex;
    returns a certificate or None. The target must be the subcomplex
    induced on its own vertex set (what iterated vertex deletions give)."""
    target = sub.vertex_set
    if not target <= k.vertex_set or k.restrict(target) != sub:
        raise InputError("target is not an induced vertex-deletion "
                         "subcomplex")
    steps = []
    cur = k
    while cur.vertex_set != target:
        pairs = [(x, a) for x, a in dominated_vertices(cur)
                 if x not in target]
        if not pairs:
            return None
        x, a = rng.choice(pairs) if rng is not None else pairs[0]
        steps.append((x, a))
        cur = cur.delete(x)
    return DismantlingCertificate("complex", k.digest(), tuple(steps))


def star_deletion_order(k: SimplicialComplex, x, a):
    """The order in which the simplices containing a dominated vertex x can
    be deleted, one by one, inside the face graph of k.

    Simplices avoiding the apex go first, by decreasing dimension, each
    witnessed by itself plus the apex; then the simplices containing the
    apex by increasing dimension, each witnessed by itself minus x. Returns
    (simplex, witness) pairs; replayed in the face graph they form a valid
    dismantling onto the face graph of k minus x.
    """
    k._require_vertex(x)
    if a not in [w for v, w in dominated_vertices(k) if v == x]:
        raise DominationError(f"{x!r} is not dominated by {a!r}")
    star = k.open_star(x)
    gamma_plain = sorted((s for s in star if a not in s),
                         key=lambda s: (-len(s), sort_key(s)))
    gamma_apex = sorted((s for s in star if a in s),
                        key=lambda s: (len(s), sort_key(s)))
    steps = [(s, sorted_ids(s + (a,))) for s in gamma_plain]
    steps += [(s, tuple(v for v in s if v != x)) for s in gamma_apex]
    return steps


# ---------------------------------------------------------------------------
# certificate replay

def replay_collapse_certificate(k: SimplicialComplex,
                                cert: DismantlingCertificate):
    """Replay a strong-collapse certificate. Returns (ok, failed_step,
    reason, residual)."""
    if cert.category != "complex":
        raise InputError(f"not a complex certificate: {cert.category}")
    if cert.start_digest != k.digest():
        raise StaleCertificateError(
            "certificate does not belong to this complex")
    cur = k
    for i, (x, a) in enumerate(cert.steps):
        vset = cur.vertex_set
        if x not in vset or a not in vset:
            return False, i, f"step {i}: vertex missing from residual", cur
        if a not in cur.link(x).cone_apexes():
            return (False, i,
                    f"step {i}: link of {x!r} is not a cone with apex {a!r}",
                    cur)
        cur = cur.delete(x)
    return True, None, None, cur


def verify_collapse_certificate(k: SimplicialComplex,
                                cert: DismantlingCertificate) -> bool:
    ok, _, _, _ = replay_collapse_certificate(k, cert)
    return ok


def derive_collapse_certificate(k: SimplicialComplex, deletion_order):
    """Complete a bare vertex deletion order into a collapse certificate
    (smallest apex at each step), or None when a step is illegal."""
    cur = k
    steps = []
    for x in deletion_order:
        cur._require_vertex(x)
        apexes = cur.link(x).cone_apexes()
        if not apexes:
            return None
        steps.append((x, apexes[0]))
        cur = cur.delete(x)
    return DismantlingCertificate("complex", k.digest(), tuple(steps))
