"""
Shared fixtures: small EI quivers, fields and payload files.
"""

import json

import pytest
import sympy

from src.config import settings

DATA_DIR = settings.inputs_dir


@pytest.fixture
def f2():
    from src.scalars.fields import make_field

    return make_field({"kind": "prime", "p": 2})


@pytest.fixture
def f3():
    from src.scalars.fields import make_field

    return make_field({"kind": "prime", "p": 3})


@pytest.fixture
def rationals():
    from src.scalars.fields import make_field

    return make_field({"kind": "rationals"})


@pytest.fixture
def a2_quiver():
    from src.quivers.ei_quiver import trivial_assignment
    from src.quivers.quiver import make_quiver

    return trivial_assignment(make_quiver(2, [("a", 0, 1)]))


@pytest.fixture
def a3_quiver():
    from src.quivers.ei_quiver import trivial_assignment
    from src.quivers.quiver import make_quiver

    return trivial_assignment(make_quiver(3, [("a", 0, 1), ("b", 1, 2)]))


@pytest.fixture
def kronecker_quiver():
    from src.quivers.ei_quiver import trivial_assignment
    from src.quivers.quiver import make_quiver

    return trivial_assignment(make_quiver(2, [("a", 0, 1), ("b", 0, 1)]))


@pytest.fixture
def b2_triple():
    from src.cartan.triple import validate_cartan

    return validate_cartan([[2, -1], [-2, 2]], [2, 1], [(0, 1)])


@pytest.fixture
def g12_two_triple():
    """g_12 = 2: both vertex groups and the arrow biset have order 2."""
    from src.cartan.triple import validate_cartan

    return validate_cartan([[2, -2], [-2, 2]], [2, 2], [(0, 1)])


@pytest.fixture
def b2_quiver(b2_triple):
    from src.cartan.quivers import cartan_ei_quiver

    return cartan_ei_quiver(b2_triple)


@pytest.fixture
def non_free_quiver():
    """C2 acting trivially from the left on a two-element biset."""
    from src.groups.bisets import make_biset
    from src.groups.groups import cyclic_group
    from src.quivers.ei_quiver import make_ei_quiver
    from src.quivers.quiver import make_quiver

    c2, c1 = cyclic_group(2), cyclic_group(1)
    biset = make_biset(c2, c1, [[0, 1], [0, 1]], [[0], [1]])
    return make_ei_quiver(make_quiver(2, [("a", 1, 0)]), [c2, c1], [biset])


@pytest.fixture
def b2_algebras(b2_quiver, f2):
    from src.homology.representations import quiver_algebras

    return quiver_algebras(b2_quiver, f2)


@pytest.fixture
def payload_file(tmp_path):
    """Writes a payload dictionary to a temporary JSON file."""

    def write(payload, name="job.json"):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return path

    return write


def brute_force_preprojective_dims(n_vertices, arrows, maxdeg):
    """
    Star-graded dimensions of the classical preprojective algebra of a quiver,
    from plain path enumeration and the rational rank of the ideal.

    ``arrows`` are (source, target) pairs. Paths are tuples of arrow indices
    in traversal order; index a + len(arrows) is the reverse of a.
    """
    m = len(arrows)
    doubled = list(arrows) + [(t, s) for s, t in arrows]

    def paths_of_star_degree(d):
        out = [((), v, v) for v in range(n_vertices)] if d == 0 else []
        frontier = [((a,), s, t) for a, (s, t) in enumerate(doubled)]
        while frontier:
            step = []
            for path, s, t in frontier:
                star = sum(1 for a in path if a >= m)
                if star == d:
                    out.append((path, s, t))
                if star <= d:
                    for a, (s2, t2) in enumerate(doubled):
                        if s2 == t and star + (a >= m) <= d:
                            step.append((path + (a,), s, t2))
            frontier = step
        return out

    def rho_terms():
        terms = []
        for a in range(m):
            s, t = arrows[a]
            terms.append(((a + m, a), t, t, 1))
            terms.append(((a, a + m), s, s, -1))
        return terms

    dims = []
    for d in range(maxdeg + 1):
        basis = paths_of_star_degree(d)
        index = {(p, s, t): k for k, (p, s, t) in enumerate(basis)}
        rows = []
        for d_left in range(d):
            for left, s1, t1 in paths_of_star_degree(d_left):
                for right, s2, t2 in paths_of_star_degree(d - 1 - d_left):
                    row = [0] * len(basis)
                    for middle, ms, mt, c in rho_terms():
                        if ms == t1 and mt == s2:
                            key = (left + middle + right, s1, t2)
                            if key in index:
                                row[index[key]] += c
                    if any(row):
                        rows.append(row)
        rank = sympy.Matrix(rows).rank() if rows else 0
        dims.append(len(basis) - rank)
        if dims[-1] == 0:
            break
    return dims
