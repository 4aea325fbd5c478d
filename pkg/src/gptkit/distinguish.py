"""Perfect distinguishability and capacity.

A set of states is jointly perfectly distinguishable when a single
measurement identifies each of them with certainty.  Polytopic spaces are
decided by one joint LP over the effect coefficients; quantum spaces
analytically via orthogonality of supports (pairwise orthogonality is
equivalent to joint distinguishability there); the ball via antipodality.
"""

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from . import lp
from .errors import InvalidArgument, NotAState, ScaleLimit, UnsupportedKind
from .spaces import (Effect, Measurement, coords_to_mat, contains_state,
                     mat_to_coords)

WITNESS_TOL = 1e-7
MAX_SUBSETS = 10 ** 6


@dataclass(frozen=True)
class DistinguishabilityWitness:
    measurement: Measurement
    states: np.ndarray

    def delta_error(self):
        """Max deviation from e_i(omega_j) = delta_ij."""
        vals = np.array([[e(w) for w in self.states]
                         for e in self.measurement.effects])
        n = len(self.states)
        return float(np.abs(vals[:n, :n] - np.eye(n)).max())


def perfectly_distinguishable(space, states):
    """Witness measurement for joint perfect distinguishability, or None."""
    states = np.asarray(states, dtype=float)
    for s in states:
        if not contains_state(space, s):
            raise NotAState("all inputs must be valid states")
    n = states.shape[0]
    if space.kind == "polytopic":
        return _polytopic_witness(space, states, n)
    if space.kind == "quantum":
        return _quantum_witness(space, states, n)
    if space.kind == "ball":
        return _ball_witness(space, states, n)
    raise UnsupportedKind(space.kind)


def _polytopic_witness(space, states, n):
    # variables: n blocks of effect coefficients, one per state
    k = space.ambient_dim
    verts = space.vertices
    nv = verts.shape[0]
    a_ub = np.zeros((n * nv, n * k))
    for i in range(n):
        a_ub[i * nv:(i + 1) * nv, i * k:(i + 1) * k] = verts
    b_ub = np.zeros(n * nv)

    eqs = []
    rhs = []
    # sum of effects = u
    for c in range(k):
        row = np.zeros(n * k)
        for i in range(n):
            row[i * k + c] = 1.0
        eqs.append(row)
        rhs.append(space.u[c])
    # e_i(omega_j) = delta_ij
    for i in range(n):
        for j in range(n):
            row = np.zeros(n * k)
            row[i * k:(i + 1) * k] = states[j]
            eqs.append(row)
            rhs.append(1.0 if i == j else 0.0)

    prob = lp.LpProblem(n_vars=n * k, a_eq=np.array(eqs), b_eq=np.array(rhs),
                        a_ub=a_ub, b_ub=b_ub)
    res = lp.solve(prob)
    if res.status != "optimal":
        return None
    effects = [Effect(res.x[i * k:(i + 1) * k]) for i in range(n)]
    witness = DistinguishabilityWitness(Measurement(tuple(effects)), states)
    assert witness.delta_error() <= WITNESS_TOL
    return witness


def _support_projector(rho, tol=1e-9):
    ev, vec = np.linalg.eigh(rho)
    cols = vec[:, ev > tol]
    return cols @ cols.conj().T


def _quantum_witness(space, states, n):
    rhos = [coords_to_mat(s) for s in states]
    projs = [_support_projector(r) for r in rhos]
    for i in range(n):
        for j in range(i + 1, n):
            if np.abs(projs[i] @ projs[j]).max() > 1e-8:
                return None
    dim = space.hilbert_dim
    rest = np.eye(dim) - sum(projs)
    effects = [Effect(mat_to_coords(p)) for p in projs]
    if np.abs(rest).max() > 1e-10:
        effects.append(Effect(mat_to_coords(rest)))
    witness = DistinguishabilityWitness(Measurement(tuple(effects)),
                                        np.asarray(states, dtype=float))
    assert witness.delta_error() <= WITNESS_TOL
    return witness


def _ball_witness(space, states, n):
    if n == 1:
        return DistinguishabilityWitness(
            Measurement((Effect(space.u),)), states)
    if n > 2:
        return None  # ball capacity is 2
    r1, r2 = states[0][1:], states[1][1:]
    if abs(np.linalg.norm(r1) - 1.0) > 1e-9 or np.linalg.norm(r1 + r2) > 1e-9:
        return None
    e = Effect(np.concatenate([[0.5], 0.5 * r1]))
    ebar = Effect(space.u - e.coeffs)
    witness = DistinguishabilityWitness(Measurement((e, ebar)), states)
    assert witness.delta_error() <= WITNESS_TOL
    return witness


def capacity(space, candidates=None, n_max=8):
    """Largest n <= n_max with a perfectly distinguishable n-subset.

    For polytopic spaces with no candidates given, the vertices are used
    (for polytopes, distinguishable states can be replaced by extremal
    ones, so this is exact).  For other kinds an explicit candidate list
    gives a lower bound; quantum spaces are answered analytically.
    """
    if n_max < 1:
        raise InvalidArgument("need n_max >= 1")
    if space.kind == "quantum" and candidates is None:
        return min(space.hilbert_dim, n_max)
    if candidates is None:
        if space.kind != "polytopic":
            raise InvalidArgument("candidate states required for this kind")
        candidates = space.vertices
    candidates = np.asarray(candidates, dtype=float)
    m = candidates.shape[0]
    for n in range(min(n_max, m), 0, -1):
        if comb(m, n) > MAX_SUBSETS:
            raise ScaleLimit("subset search too large")
        for idx in itertools.combinations(range(m), n):
            if perfectly_distinguishable(space, candidates[list(idx)]) is not None:
                return n
    return 0
