"""Verification battery: the library's known implications and identities,
run mechanically over a corpus of complexes.

Each check returns a TheoremResult with a pass/fail verdict and the
offending instances, if any.  `run_battery` runs the whole suite; checks
marked builtin-only compare against expected verdicts of the named corpus
and are skipped for user-supplied corpora.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from math import comb

from .complexes import contrastar, join, link, predicates, skeleton
from .constructions import (EarDecomposition, corpus, cross_polytope, example_2_10_i,
                            example_2_10_iii, from_facets, named, path, product,
                            simplex_boundary, stacked_sphere, torus7,
                            verify_ear_decomposition)
from .homology import (betti, betti_at, relative_betti, relative_surjectivity,
                       top_projection_surjective)
from .linalg import GF2, QQ
from .properties import (is_buchsbaum, is_buchsbaum_star, is_cohen_macaulay,
                         is_doubly_buchsbaum, is_homology_manifold,
                         is_m_buchsbaum_star, is_m_cohen_macaulay)
from .rigidity import graph_of, is_generically_d_rigid, vertex_connectivity
from .vectors import (conjecture_probe, deletion_identity_check, face_vectors,
                      h_vector, lbt_check, m_vector_check, stacked_face_counts)

DEFAULT_FIELDS = (QQ, GF2)


@dataclass
class TheoremResult:
    name: str
    passed: bool
    details: list[str] = dc_field(default_factory=list)

    def fail(self, msg: str):
        self.passed = False
        self.details.append(msg)

    def note(self, msg: str):
        self.details.append(msg)


def _buchsbaum_star_entries(entries, fields):
    for name, c in entries:
        for f in fields:
            if is_buchsbaum_star(c, f):
                yield name, c, f


# -- individual checks --------------------------------------------------


def check_counterexample_fidelity(entries, fields) -> TheoremResult:
    """The two doubly-Buchsbaum-but-not-Buchsbaum* corpus complexes."""
    r = TheoremResult("counterexample_fidelity", True)
    ex1 = example_2_10_i()
    ex3 = example_2_10_iii()
    for f in (QQ, GF2):
        t0 = time.perf_counter()
        if not is_buchsbaum(ex1, f):
            r.fail(f"example_2_10_i not Buchsbaum over {f}")
        if not is_doubly_buchsbaum(ex1, f):
            r.fail(f"example_2_10_i not doubly Buchsbaum over {f}")
        v = is_buchsbaum_star(ex1, f)
        if v or "vertex p" not in (v.witness or ""):
            r.fail(f"example_2_10_i Buchsbaum* verdict/witness wrong over {f}: {v}")
        elapsed = time.perf_counter() - t0
        if elapsed >= 1.0:
            r.fail(f"example_2_10_i checks took {elapsed:.2f}s over {f}")
        t0 = time.perf_counter()
        if betti_at(ex3, f, 1) != 1:
            r.fail(f"example_2_10_iii beta_1 != 1 over {f}")
        top_costs = [betti_at(contrastar(ex3, fc), f, 1) for fc in ex3.faces(2)]
        if max(top_costs) != 2:
            r.fail(f"example_2_10_iii facet contrastar beta_1 max {max(top_costs)} != 2")
        if not is_doubly_buchsbaum(ex3, f):
            r.fail(f"example_2_10_iii not doubly Buchsbaum over {f}")
        if is_buchsbaum_star(ex3, f):
            r.fail(f"example_2_10_iii unexpectedly Buchsbaum* over {f}")
        elapsed = time.perf_counter() - t0
        if elapsed >= 1.0:
            r.fail(f"example_2_10_iii checks took {elapsed:.2f}s over {f}")
    return r


def check_orientability_dichotomy(entries, fields) -> TheoremResult:
    """Orientable torus is Buchsbaum* over both default fields; the
    projective plane only in characteristic 2."""
    r = TheoremResult("orientability_dichotomy", True)
    t = torus7()
    rp = named("rp2_6")
    for f in (QQ, GF2):
        if not is_buchsbaum_star(t, f):
            r.fail(f"torus7 not Buchsbaum* over {f}")
    if not is_buchsbaum_star(rp, GF2):
        r.fail("rp2_6 not Buchsbaum* over gf:2")
    if is_buchsbaum_star(rp, QQ):
        r.fail("rp2_6 unexpectedly Buchsbaum* over q")
    for name, c, f in [("torus7", t, QQ), ("torus7", t, GF2), ("rp2_6", rp, QQ),
                       ("rp2_6", rp, GF2)]:
        rep = is_homology_manifold(c, f)
        if not (rep.manifold and rep.closed):
            r.fail(f"{name} not recognised as closed manifold over {f}")
    # every closed manifold of dim >= 1 in the corpus obeys the dichotomy
    for name, c in entries:
        if c.dim < 1 or not predicates(c).is_pure:
            continue
        for f in fields:
            rep = is_homology_manifold(c, f)
            if rep.manifold and rep.closed and \
                    rep.orientable != bool(is_buchsbaum_star(c, f)):
                r.fail(f"{name}: orientability and Buchsbaum* disagree over {f}")
    return r


def check_cm_collapse(entries, fields, minimum_slice=0) -> TheoremResult:
    """On Cohen-Macaulay complexes, Buchsbaum* must coincide with doubly
    Cohen-Macaulay."""
    r = TheoremResult("cm_buchsbaum_star_collapse", True)
    negatives = 0
    for f in fields:
        cm_slice = [(n, c) for n, c in entries if is_cohen_macaulay(c, f)]
        if len(cm_slice) < minimum_slice:
            r.fail(f"CM slice over {f} has only {len(cm_slice)} complexes")
        for name, c in cm_slice:
            a = bool(is_buchsbaum_star(c, f))
            b = is_m_cohen_macaulay(c, f, 2)
            if a != b:
                r.fail(f"{name} over {f}: Buchsbaum*={a} but doubly CM={b}")
            if not a:
                negatives += 1
        r.note(f"{f}: {len(cm_slice)} CM complexes, no disagreement")
    if minimum_slice and not negatives:
        r.fail("no negative instance in the CM slice")
    return r


def check_buchsbaum_star_implications(entries, fields) -> TheoremResult:
    """Buchsbaum* forces nonvanishing top homology, double Buchsbaumness,
    and doubly-CM links of all nonempty faces."""
    r = TheoremResult("buchsbaum_star_implications", True)
    count = 0
    for name, c, f in _buchsbaum_star_entries(entries, fields):
        count += 1
        if betti_at(c, f, c.dim) <= 0:
            r.fail(f"{name} over {f}: top Betti vanishes")
        if not is_doubly_buchsbaum(c, f):
            r.fail(f"{name} over {f}: not doubly Buchsbaum")
        for d in range(0, c.dim + 1):
            for face in c.faces(d):
                if not is_m_cohen_macaulay(link(c, face), f, 2):
                    r.fail(f"{name} over {f}: link of {c.describe_face(face)} "
                           f"not doubly CM")
                    break
    r.note(f"{count} Buchsbaum* instances checked")
    return r


def check_surjectivity_oracle(entries, fields) -> TheoremResult:
    """The contrastar-Betti decision agrees with the relative-homology
    surjectivity criterion over all nested face pairs.

    The pair quantification includes the degenerate smaller face (the
    contrastar of nothing is void, making that case the absolute-to-
    relative projection); without it the criterion is strictly weaker
    and already disagrees on the one-dimensional counterexample.
    """
    r = TheoremResult("contrastar_surjectivity_oracle", True)
    for name, c in entries:
        for f in fields:
            direct = bool(is_buchsbaum_star(c, f))
            if not is_buchsbaum(c, f):
                oracle = False
            else:
                oracle = True
                for d in range(0, c.dim + 1):
                    for t in c.faces(d):
                        if not top_projection_surjective(c, t, f):
                            oracle = False
                            break
                        tm = c.mask(t)
                        sub = tm
                        ok = True
                        while sub:
                            s = [v for v in t if sub >> v & 1]
                            if not relative_surjectivity(c, s, t, f):
                                ok = False
                                break
                            sub = (sub - 1) & tm
                        if not ok:
                            oracle = False
                            break
                    if not oracle:
                        break
            if direct != oracle:
                r.fail(f"{name} over {f}: direct={direct} oracle={oracle}")
    return r


def check_vector_identities(entries, fields) -> TheoremResult:
    """h'_d = top Betti, h_d = signed reduced Euler characteristic, the
    f/h round trip, and the vertex deletion identities."""
    r = TheoremResult("vector_identities", True)
    for name, c in entries:
        d = c.dim + 1
        fv = c.f_vector()
        h = h_vector(c)
        # round trip: f_{j-1} = sum_i C(d-i, d-j) h_i
        for j in range(d + 1):
            back = sum(comb(d - i, d - j) * h[i] for i in range(j + 1))
            expect = fv[j] if j < len(fv) else 0
            if back != expect:
                r.fail(f"{name}: f/h round trip fails at {j}")
        for f in fields:
            bundle = face_vectors(c, f)
            b = bundle.betti
            if bundle.h_prime[d] != b.at(d - 1):
                r.fail(f"{name} over {f}: h'_d != top Betti")
            chi = sum((-1) ** i * b.at(i) for i in range(-1, c.dim + 1))
            if bundle.h[d] != (-1) ** (d - 1) * chi:
                r.fail(f"{name} over {f}: h_d != signed Euler characteristic")
            if bundle.h_double_prime[0] != 1:
                r.fail(f"{name} over {f}: h''_0 != 1")
            if bool(is_cohen_macaulay(c, f)) and bundle.h_prime != bundle.h:
                r.fail(f"{name} over {f}: CM but h' != h")
            idrep = deletion_identity_check(c, f)
            if idrep["h_identity"] != "pass":
                r.fail(f"{name} over {f}: h deletion identity: {idrep}")
            if idrep["h_prime_identity"] not in ("pass",) and \
                    not idrep["h_prime_identity"].startswith("skipped"):
                r.fail(f"{name} over {f}: h' deletion identity: {idrep}")
    return r


def check_flag_bounds(entries, fields, expect_equality=()) -> TheoremResult:
    """Binomial lower bounds for flag Buchsbaum* complexes, with equality
    on cross-polytopes, and the Betti-weighted bound for Buchsbaum ones."""
    r = TheoremResult("flag_lower_bounds", True)
    equality_seen = set()
    for name, c in entries:
        flag = predicates(c).is_flag
        for f in fields:
            d = c.dim + 1
            bundle = face_vectors(c, f)
            if flag and is_buchsbaum_star(c, f):
                for i in range(d + 1):
                    if bundle.h_prime[i] < comb(d, i):
                        r.fail(f"{name} over {f}: h'_{i} below binomial bound")
                for i in range(d - 1):
                    if bundle.h_double_prime[i] < comb(d, i):
                        r.fail(f"{name} over {f}: h''_{i} below binomial bound")
                if all(bundle.h_prime[i] == comb(d, i) for i in range(d + 1)):
                    equality_seen.add(name)
            if is_buchsbaum(c, f):
                for i in range(d + 1):
                    if bundle.h_prime[i] < comb(d, i) * bundle.betti.at(i - 1):
                        r.fail(f"{name} over {f}: h'_{i} below Betti-weighted bound")
    for name in expect_equality:
        if name not in equality_seen:
            r.fail(f"expected binomial equality for {name}")
    return r


def check_lower_bound_theorem(entries, fields) -> TheoremResult:
    """Stacked spheres meet their face-count formula exactly; Buchsbaum*
    complexes of dimension >= 2 satisfy the stacked lower bounds."""
    r = TheoremResult("stacked_sphere_lower_bounds", True)
    for n in range(4, 11):
        built = stacked_sphere(n, 3).f_vector()[1:]
        if tuple(built) != stacked_face_counts(n, 3):
            r.fail(f"stacked_sphere({n},3) counts {built} != formula")
    for n, d in [(5, 4), (7, 4), (10, 4)]:
        built = stacked_sphere(n, d).f_vector()[1:]
        if tuple(built) != stacked_face_counts(n, d):
            r.fail(f"stacked_sphere({n},{d}) counts {built} != formula")
    seen = set()
    for name, c, f in _buchsbaum_star_entries(entries, fields):
        if c.dim + 1 < 3 or name in seen:
            continue
        seen.add(name)
        rep = lbt_check(c, f)
        if rep["bounds"] != "pass":
            r.fail(f"{name}: {rep['bounds']}")
    return r


def check_rigidity_connectivity(entries, fields, seed=0) -> TheoremResult:
    """Graph connectivity lower bounds for Buchsbaum / Buchsbaum*
    complexes and generic rigidity of Buchsbaum* graphs."""
    r = TheoremResult("rigidity_and_connectivity", True)
    octa = graph_of(cross_polytope(3))
    if vertex_connectivity(octa) != 4:
        r.fail("octahedron graph connectivity != 4")
    if not is_generically_d_rigid(octa, 3, seed=seed):
        r.fail("octahedron graph not generically 3-rigid")
    gt = graph_of(torus7())
    if vertex_connectivity(gt) < 3:
        r.fail("torus7 graph connectivity < 3")
    if not is_generically_d_rigid(gt, 3, seed=seed):
        r.fail("torus7 graph not generically 3-rigid")
    for name, c in entries:
        if len(predicates(c).components) != 1:
            continue
        g = graph_of(c)
        d = c.dim + 1
        for f in fields:
            if is_buchsbaum(c, f) and d - 1 >= 1 and g.n >= 2:
                k = vertex_connectivity(g)
                if k < d - 1 or g.n < d:
                    r.fail(f"{name} over {f}: connectivity {k} below {d - 1}")
            if is_buchsbaum_star(c, f) and g.n >= 2:
                k = vertex_connectivity(g)
                if k < d or g.n < d + 1:
                    r.fail(f"{name} over {f}: connectivity {k} below {d}")
                if d >= 3:
                    verdicts = {is_generically_d_rigid(g, d, seed=s)
                                for s in (seed, seed + 1, seed + 2)}
                    if verdicts != {True}:
                        r.fail(f"{name}: rigidity verdicts unstable or false: "
                               f"{sorted(verdicts)}")
    return r


def check_constructions(entries, fields) -> TheoremResult:
    """Products preserve Buchsbaum(*)ness, the join equivalence holds
    pointwise, and codimension-two skeleta of Buchsbaum complexes are
    Buchsbaum*."""
    r = TheoremResult("product_join_skeleton_constructions", True)
    c3 = simplex_boundary(2)
    p33 = product(c3, c3)
    if tuple(betti(p33, QQ).betti) != (0, 0, 2, 1):
        r.fail(f"cycle3 x cycle3 Betti {betti(p33, QQ).betti} != (0,0,2,1)")
    for f in (QQ, GF2):
        if not is_buchsbaum_star(p33, f):
            r.fail(f"cycle3 x cycle3 not Buchsbaum* over {f}")
    p3s = product(c3, simplex_boundary(3))
    if not is_buchsbaum_star(p3s, QQ):
        r.fail("cycle3 x simplex_boundary(3) not Buchsbaum* over q")
    bundle = face_vectors(p3s, QQ)
    if not m_vector_check(bundle.g[:3]):
        r.fail(f"cycle3 x simplex_boundary(3): (g0,g1,g2)={bundle.g[:3]} "
               f"fails the Macaulay growth test")
    # Buchsbaum products of Buchsbaum pairs
    pc = product(c3, path(3))
    ps = product(cross_polytope(1), c3)
    for f in fields:
        if not is_buchsbaum(pc, f):
            r.fail(f"cycle3 x path3 not Buchsbaum over {f}")
        if not is_buchsbaum_star(ps, f):
            r.fail(f"s0 x cycle3 not Buchsbaum* over {f}")
    # join equivalence grid
    grid = {"s0": cross_polytope(1), "cycle4": cross_polytope(2), "path3": path(3)}
    for na, a in grid.items():
        for nb, b in grid.items():
            j = join(a, b)
            for f in fields:
                x = bool(is_buchsbaum_star(j, f))
                y = is_m_cohen_macaulay(a, f, 2) and is_m_cohen_macaulay(b, f, 2)
                z = is_m_cohen_macaulay(j, f, 2)
                if not (x == y == z):
                    r.fail(f"join({na},{nb}) over {f}: equivalence broken "
                           f"({x},{y},{z})")
    # chi multiplicativity for products
    for a, b in [(c3, c3), (c3, simplex_boundary(3)), (c3, path(3))]:
        pa = product(a, b)
        chi = lambda x: sum((-1) ** i * n for i, n in enumerate(x.f_vector()[1:]))
        if chi(pa) != chi(a) * chi(b):
            r.fail("Euler characteristic not multiplicative on a product")
    # skeleta
    for name, c in entries:
        if c.dim < 1:
            continue
        for f in fields:
            if is_buchsbaum(c, f):
                skel = skeleton(c, c.dim - 1)
                if not is_buchsbaum_star(skel, f):
                    r.fail(f"{name} over {f}: codim-2 skeleton not Buchsbaum*")
    skel_cp4 = skeleton(cross_polytope(4), 2)
    for f in fields:
        if not is_m_buchsbaum_star(skel_cp4, f, 2):
            r.fail(f"2-skeleton of cross_polytope(4) not 2-Buchsbaum* over {f}")
    return r


def check_ear_verifier(entries, fields) -> TheoremResult:
    """The gluing verifier on a passing one-piece decomposition, a passing
    two-piece one, and the deliberately broken attachment."""
    r = TheoremResult("ear_gluing_verifier", True)
    t = torus7()
    rep = verify_ear_decomposition(t, EarDecomposition((t,)), QQ)
    if not (rep.union_ok and rep.base_ok and rep.hypotheses_ok
            and rep.ambient_buchsbaum_star and rep.consistent):
        r.fail(f"one-piece torus case failed: {rep.to_jsonable()}")

    ambient = example_2_10_iii()
    tri = next(fc for fc in ambient.faces(2)
               if not t.is_face(tuple(ambient.labels[v] for v in fc)))
    piece1 = from_facets([t.facets[i] for i in range(len(t.facets))])
    piece2 = from_facets([tuple(ambient.labels[v] for v in tri)])
    rep2 = verify_ear_decomposition(ambient, EarDecomposition((piece1, piece2)), QQ)
    ear = rep2.ears[0]
    if rep2.hypotheses_ok:
        r.fail("broken attachment was not detected")
    if not (rep2.union_ok and rep2.base_ok and ear["manifold_with_boundary"]
            and ear["boundary_ok"] and ear["boundary_matches_intersection"]):
        r.fail(f"wrong condition flagged: {rep2.to_jsonable()}")
    if ear["attachment_null_homologous_top"] or not ear["attachment_null_homologous_below"]:
        r.fail("expected exactly the top attachment condition to fail")
    if not ear.get("attachment_null_homologous_top_witness"):
        r.fail("no witness cycle reported")

    octa = cross_polytope(3)
    memb = next(c for n, c in corpus() if n == "octahedron_with_membrane")
    base = from_facets([tuple(memb.labels[v] for v in fc) for fc in memb.facets
                        if all(memb.labels[v] != "z" for v in fc)])
    disc = from_facets([tuple(memb.labels[v] for v in fc) for fc in memb.facets
                        if any(memb.labels[v] == "z" for v in fc)])
    rep3 = verify_ear_decomposition(memb, EarDecomposition((base, disc)), QQ)
    if not (rep3.hypotheses_ok and rep3.ambient_buchsbaum_star and rep3.consistent):
        r.fail(f"two-piece membrane case failed: {rep3.to_jsonable()}")
    return r


def check_m_hierarchy(entries, fields) -> TheoremResult:
    """On the octahedron (a CM complex), m-Buchsbaum* coincides with
    (m+1)-Cohen-Macaulay for m in 0..2, both sides evaluated directly."""
    r = TheoremResult("m_hierarchy_cross_polytope", True)
    c = cross_polytope(3)
    for f in fields:
        for m in (0, 1, 2):
            a = is_m_buchsbaum_star(c, f, m)
            b = is_m_cohen_macaulay(c, f, m + 1)
            if a != b:
                r.fail(f"m={m} over {f}: m-Buchsbaum*={a} but (m+1)-CM={b}")
    return r


def check_component_locality(entries, fields) -> TheoremResult:
    """For dimension >= 1, Buchsbaum*ness is equivalent to every connected
    component being Buchsbaum* of the same dimension."""
    r = TheoremResult("component_locality", True)
    for name, c in entries:
        if c.dim < 1:
            continue
        comps = predicates(c).components
        for f in fields:
            whole = bool(is_buchsbaum_star(c, f))
            parts = all(comp.dim == c.dim and bool(is_buchsbaum_star(comp, f))
                        for comp in comps)
            if whole != parts:
                r.fail(f"{name} over {f}: whole={whole} components={parts}")
    return r


def check_graph_characterization(entries, fields) -> TheoremResult:
    """One-dimensional complexes are Buchsbaum* iff every component is a
    2-connected graph."""
    r = TheoremResult("one_dimensional_graph_characterization", True)
    for name, c in entries:
        if c.dim != 1:
            continue
        comps = predicates(c).components
        two_connected = all(
            comp.n_vertices >= 3 and vertex_connectivity(graph_of(comp)) >= 2
            for comp in comps)
        for f in fields:
            if bool(is_buchsbaum_star(c, f)) != two_connected:
                r.fail(f"{name} over {f}: Buchsbaum* != 2-connected components")
    return r


def check_kunneth_join(entries, fields) -> TheoremResult:
    """Betti numbers of joins obey the field Kuenneth formula."""
    r = TheoremResult("join_kunneth", True)
    pairs = [(cross_polytope(1), cross_polytope(1)),
             (cross_polytope(1), simplex_boundary(2)),
             (simplex_boundary(2), simplex_boundary(2)),
             (path(3), simplex_boundary(2)),
             (example_2_10_i(), cross_polytope(1))]
    for a, b in pairs:
        j = join(a, b)
        for f in fields:
            ba, bb, bj = betti(a, f), betti(b, f), betti(j, f)
            for i in range(-1, j.dim + 1):
                expect = sum(ba.at(k) * bb.at(i - k - 1) for k in range(-1, i + 1))
                if bj.at(i) != expect:
                    r.fail(f"join Kuenneth fails in degree {i} over {f}")
    return r


def check_excision(entries, fields) -> TheoremResult:
    """For Buchsbaum complexes, the pair (complex, facet contrastar) has
    one top relative homology class and nothing below."""
    r = TheoremResult("facet_excision", True)
    for name, c in entries:
        d = c.dim
        for f in fields:
            if not is_buchsbaum(c, f):
                continue
            for fc in c.faces(d)[:4]:
                cs = contrastar(c, fc)
                if relative_betti(c, cs, f, d) != 1:
                    r.fail(f"{name} over {f}: facet pair top homology != 1")
                for i in range(0, d):
                    if relative_betti(c, cs, f, i) != 0:
                        r.fail(f"{name} over {f}: facet pair has homology in {i}")
    return r


def check_facet_shortcut_probe(entries, fields) -> TheoremResult:
    """Record (never fail) whether checking only facet contrastars would
    have sufficed for the Buchsbaum* decision on this corpus."""
    r = TheoremResult("facet_contrastar_shortcut_probe", True)
    disagreements = []
    for name, c in entries:
        for f in fields:
            if not is_buchsbaum(c, f):
                continue
            full = bool(is_buchsbaum_star(c, f))
            target = betti_at(c, f, c.dim - 1)
            facet_only = all(
                betti_at(contrastar(c, fc), f, c.dim - 1) == target
                for fc in c.faces(c.dim))
            if full != facet_only:
                disagreements.append(f"{name} over {f}")
    if disagreements:
        r.note("facet-only shortcut is NOT sound; differs on: "
               + ", ".join(disagreements))
    else:
        r.note("facet-only shortcut agreed on this corpus (still not assumed)")
    return r


def check_conjecture_probes(entries, fields) -> TheoremResult:
    """Empirical probes; also asserts the h'' palindrome on orientable
    closed manifolds in the corpus (a known consequence, not a proof)."""
    r = TheoremResult("conjecture_probes", True)
    probed = 0
    for name, c in entries:
        if not predicates(c).is_pure:
            continue
        for f in fields:
            rep = conjecture_probe(c, f)
            if rep.get("status") == "probed":
                probed += 1
            if rep.get("g2_m_vector") is False:
                # for connected Buchsbaum* complexes of dimension >= 3 this
                # is a theorem, so a failure here is a bug
                r.fail(f"{name} over {f}: (g0,g1,g2) fails the growth bound")
            man = is_homology_manifold(c, f)
            if man.manifold and man.closed and man.orientable and c.dim >= 1:
                if not rep.get("h_double_symmetric", True):
                    r.fail(f"{name} over {f}: h'' not palindromic on an "
                           f"orientable closed manifold")
    r.note(f"{probed} probe runs (empirical only)")
    return r


def check_skeleton_hierarchy(entries, fields) -> TheoremResult:
    """Skeleta gain one Buchsbaum* connectivity level per dropped
    dimension, spot-checked at small parameters."""
    r = TheoremResult("skeleton_hierarchy", True)
    octa = cross_polytope(3)
    for f in fields:
        # octahedron is 1-Buchsbaum*; its 1-skeleton should be 2-Buchsbaum*
        if not is_m_buchsbaum_star(skeleton(octa, 1), f, 2):
            r.fail(f"octahedron 1-skeleton not 2-Buchsbaum* over {f}")
        if not is_m_buchsbaum_star(skeleton(simplex_boundary(3), 1), f, 2):
            r.fail(f"sphere 1-skeleton not 2-Buchsbaum* over {f}")
    return r


BUILTIN_ONLY = {"counterexample_fidelity", "orientability_dichotomy",
                "ear_gluing_verifier", "m_hierarchy_cross_polytope",
                "skeleton_hierarchy"}

ALL_CHECKS = [
    check_counterexample_fidelity,
    check_orientability_dichotomy,
    check_cm_collapse,
    check_buchsbaum_star_implications,
    check_surjectivity_oracle,
    check_vector_identities,
    check_flag_bounds,
    check_lower_bound_theorem,
    check_rigidity_connectivity,
    check_constructions,
    check_ear_verifier,
    check_m_hierarchy,
    check_component_locality,
    check_graph_characterization,
    check_kunneth_join,
    check_excision,
    check_facet_shortcut_probe,
    check_conjecture_probes,
    check_skeleton_hierarchy,
]


def run_battery(entries=None, fields=DEFAULT_FIELDS, seed=0) -> list[TheoremResult]:
    """Run every applicable check; `entries` defaults to the built-in corpus.

    Checks that compare against expected verdicts of specific named
    complexes only run on the built-in corpus.
    """
    builtin = entries is None
    if builtin:
        entries = list(corpus())
    entries = list(entries)
    fields = tuple(fields)
    results = []
    for chk in ALL_CHECKS:
        if chk is check_cm_collapse:
            results.append(chk(entries, fields, minimum_slice=12 if builtin else 0))
        elif chk is check_flag_bounds:
            eq = ("cycle4", "cross_polytope3", "cross_polytope4") if builtin else ()
            results.append(chk(entries, fields, expect_equality=eq))
        elif chk is check_rigidity_connectivity:
            results.append(chk(entries, fields, seed=seed))
        else:
            results.append(chk(entries, fields))
    if not builtin:
        results = [res for res in results if res.name not in BUILTIN_ONLY]
    return results
