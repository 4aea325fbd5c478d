"""State spaces, effects, measurements, transformations.

Three kinds of state space are supported:

* polytopic -- an explicit list of extreme points (vertices) in R^K,
* quantum   -- density matrices of size N, coordinatized in a fixed
  orthonormal Hermitian basis so states are plain real vectors of
  length N^2,
* ball      -- vectors (1, r) with |r| <= 1 (the Bloch-ball form).

All membership / validity / extremality questions are decided either by
LP feasibility (polytopic) or analytically via eigenvalues (quantum,
ball).  The effect set is always the full dual interval [0, u]
(no-restriction hypothesis).
"""

import json
from dataclasses import dataclass

import numpy as np

from . import lp
from .errors import (DimensionMismatch, InvalidArgument, NotAState,
                     SingularMap, UnsupportedKind)

TOL = lp.FEASTOL


# ---------------------------------------------------------------------------
# fixed Hermitian coordinate basis for quantum spaces

def hermitian_basis(n):
    """Orthonormal basis of Hermitian n x n matrices (Hilbert-Schmidt).

    Order: the n diagonal units, then for each i<j (lexicographic) the
    pair (|i><j| + |j><i|)/sqrt2 and i(|i><j| - |j><i|)/sqrt2.
    """
    basis = []
    for i in range(n):
        m = np.zeros((n, n), dtype=complex)
        m[i, i] = 1.0
        basis.append(m)
    s = 1.0 / np.sqrt(2.0)
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[i, j] = s
            m[j, i] = s
            basis.append(m)
            m = np.zeros((n, n), dtype=complex)
            m[i, j] = 1j * s
            m[j, i] = -1j * s
            basis.append(m)
    return basis


def mat_to_coords(m):
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    return np.array([np.trace(b.conj().T @ m).real for b in hermitian_basis(n)])


def coords_to_mat(c):
    c = np.asarray(c, dtype=float)
    n = int(round(np.sqrt(c.size)))
    if n * n != c.size:
        raise DimensionMismatch("coordinate length is not a perfect square")
    basis = hermitian_basis(n)
    return sum(ci * bi for ci, bi in zip(c, basis))


# ---------------------------------------------------------------------------
# domain types

@dataclass(frozen=True)
class StateSpace:
    kind: str                      # "polytopic" | "quantum" | "ball"
    ambient_dim: int
    u: np.ndarray                  # normalization functional, dual coords
    vertices: np.ndarray = None    # polytopic only
    hilbert_dim: int = None        # quantum only
    ball_dim: int = None           # ball only

    def __post_init__(self):
        object.__setattr__(self, "u", np.asarray(self.u, dtype=float))
        if self.vertices is not None:
            object.__setattr__(self, "vertices",
                               np.asarray(self.vertices, dtype=float))
            if np.abs(self.vertices @ self.u - 1.0).max() > TOL:
                raise InvalidArgument("vertex with u(v) != 1")


@dataclass(frozen=True)
class Effect:
    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", np.asarray(self.coeffs, dtype=float))

    def __call__(self, omega):
        return float(self.coeffs @ np.asarray(omega, dtype=float))


@dataclass(frozen=True)
class Measurement:
    effects: tuple

    def __post_init__(self):
        if len(self.effects) == 0:
            raise InvalidArgument("measurement needs at least one effect")
        object.__setattr__(self, "effects", tuple(self.effects))

    def validate(self, space):
        total = sum(e.coeffs for e in self.effects)
        if np.abs(total - space.u).max() > TOL:
            raise InvalidArgument("effects do not sum to the unit functional")
        for e in self.effects:
            if not is_effect(space, e):
                raise InvalidArgument("component is not a valid effect")
        return True


@dataclass(frozen=True)
class LinearMap:
    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix",
                           np.atleast_2d(np.asarray(self.matrix, dtype=float)))

    def __call__(self, x):
        return self.matrix @ np.asarray(x, dtype=float)

    def is_invertible(self):
        sv = np.linalg.svd(self.matrix, compute_uv=False)
        return self.matrix.shape[0] == self.matrix.shape[1] and \
            sv[-1] > 0 and sv[-1] >= 1e-10 * sv[0]

    def inverse(self):
        if not self.is_invertible():
            raise SingularMap("map is singular within tolerance")
        return LinearMap(np.linalg.inv(self.matrix))


# ---------------------------------------------------------------------------
# constructors

def make_classical(n):
    """Classical N-outcome space: the probability simplex."""
    if n < 1:
        raise InvalidArgument("need n >= 1")
    return StateSpace(kind="polytopic", ambient_dim=n,
                      u=np.ones(n), vertices=np.eye(n))


def make_quantum(n):
    """Quantum N-level space in the fixed Hermitian coordinate basis."""
    if n < 1:
        raise InvalidArgument("need n >= 1")
    u = mat_to_coords(np.eye(n))
    return StateSpace(kind="quantum", ambient_dim=n * n, u=u, hilbert_dim=n)


def make_gbit():
    """The square state space with four pure states."""
    verts = np.array([[-1.0, -1.0, 1.0],
                      [-1.0, 1.0, 1.0],
                      [1.0, 1.0, 1.0],
                      [1.0, -1.0, 1.0]])
    return StateSpace(kind="polytopic", ambient_dim=3,
                      u=np.array([0.0, 0.0, 1.0]), vertices=verts)


def make_ball(d):
    """Ball space of dimension d: states (1, r) with |r| <= 1."""
    if d < 1:
        raise InvalidArgument("need d >= 1")
    u = np.zeros(d + 1)
    u[0] = 1.0
    return StateSpace(kind="ball", ambient_dim=d + 1, u=u, ball_dim=d)


def make_polytopic(vertices, u):
    return StateSpace(kind="polytopic", ambient_dim=len(u),
                      u=np.asarray(u, dtype=float),
                      vertices=np.asarray(vertices, dtype=float))


# ---------------------------------------------------------------------------
# decision procedures

def _check_dim(space, x):
    x = np.asarray(x, dtype=float)
    if x.shape != (space.ambient_dim,):
        raise DimensionMismatch(f"expected length {space.ambient_dim}, got {x.shape}")
    return x


def contains_state(space, x):
    """Is x a valid normalized state of the space?"""
    x = _check_dim(space, x)
    if space.kind == "polytopic":
        verts = space.vertices
        k = verts.shape[0]
        prob = lp.LpProblem(
            n_vars=k,
            a_eq=np.vstack([verts.T, np.ones(k)]),
            b_eq=np.concatenate([x, [1.0]]),
            bounds=[(0.0, None)] * k,
        )
        return lp.solve(prob).status == "optimal"
    if space.kind == "quantum":
        rho = coords_to_mat(x)
        if abs(np.trace(rho).real - 1.0) > TOL:
            return False
        return np.linalg.eigvalsh(rho).min() >= -TOL
    if space.kind == "ball":
        return abs(x[0] - 1.0) <= TOL and np.linalg.norm(x[1:]) <= 1.0 + TOL
    raise UnsupportedKind(space.kind)


def is_effect(space, e):
    """Is e a linear functional with range [0,1] on all states?"""
    c = _check_dim(space, e.coeffs if isinstance(e, Effect) else e)
    if space.kind == "polytopic":
        vals = space.vertices @ c
        return vals.min() >= -TOL and vals.max() <= 1.0 + TOL
    if space.kind == "quantum":
        em = coords_to_mat(c)
        ev = np.linalg.eigvalsh(em)
        return ev.min() >= -TOL and ev.max() <= 1.0 + TOL
    if space.kind == "ball":
        const, w = c[0], c[1:]
        return np.linalg.norm(w) <= min(const, 1.0 - const) + TOL
    raise UnsupportedKind(space.kind)


def is_pure(space, omega):
    """Is omega an extremal point of the state space?"""
    omega = _check_dim(space, omega)
    if not contains_state(space, omega):
        raise NotAState("argument is not a valid state")
    if space.kind == "polytopic":
        verts = space.vertices
        match = np.where(np.abs(verts - omega).max(axis=1) <= TOL)[0]
        if match.size == 0:
            return False
        others = np.delete(verts, match[0], axis=0)
        if others.shape[0] == 0:
            return True
        k = others.shape[0]
        prob = lp.LpProblem(
            n_vars=k,
            a_eq=np.vstack([others.T, np.ones(k)]),
            b_eq=np.concatenate([omega, [1.0]]),
            bounds=[(0.0, None)] * k,
        )
        return lp.solve(prob).status == "infeasible"
    if space.kind == "quantum":
        rho = coords_to_mat(omega)
        return np.linalg.eigvalsh(rho).max() >= 1.0 - TOL
    if space.kind == "ball":
        return np.linalg.norm(omega[1:]) >= 1.0 - TOL
    raise UnsupportedKind(space.kind)


def _sampled_pure_states(space, n_samples, seed):
    rng = np.random.default_rng(seed)
    out = []
    if space.kind == "quantum":
        n = space.hilbert_dim
        for _ in range(n_samples):
            psi = rng.normal(size=n) + 1j * rng.normal(size=n)
            psi /= np.linalg.norm(psi)
            out.append(mat_to_coords(np.outer(psi, psi.conj())))
    elif space.kind == "ball":
        d = space.ball_dim
        for _ in range(n_samples):
            r = rng.normal(size=d)
            r /= np.linalg.norm(r)
            out.append(np.concatenate([[1.0], r]))
    elif space.kind == "polytopic":
        out = list(space.vertices)
    return np.array(out)


def is_transformation(space, t, n_samples=1000, seed=0):
    """Does t map every normalized state to a normalized state?

    Exact for polytopic spaces (vertex images).  For quantum and ball
    spaces the check combines exact normalization preservation with
    seeded pure-state sampling (one-sided: can refute, confirms only
    probabilistically), except that ball maps without a translation part
    are certified exactly by an operator-norm bound.
    """
    m = t.matrix if isinstance(t, LinearMap) else np.asarray(t, dtype=float)
    if m.shape != (space.ambient_dim, space.ambient_dim):
        raise DimensionMismatch("transformation must be square of ambient size")
    if space.kind == "polytopic":
        return all(contains_state(space, m @ v) for v in space.vertices)
    # normalization must be preserved: u o T = u
    if np.abs(space.u @ m - space.u).max() > TOL:
        return False
    if space.kind == "ball":
        shift = m[1:, 0]
        block = m[1:, 1:]
        if np.linalg.norm(shift) <= TOL:
            return np.linalg.norm(block, 2) <= 1.0 + TOL
    for s in _sampled_pure_states(space, n_samples, seed):
        if not contains_state(space, m @ s):
            return False
    return True


def is_reversible_transformation(space, t, n_samples=1000, seed=0):
    """Is t an invertible symmetry mapping the state space onto itself?"""
    tmap = t if isinstance(t, LinearMap) else LinearMap(t)
    if tmap.matrix.shape != (space.ambient_dim, space.ambient_dim):
        raise DimensionMismatch("transformation must be square of ambient size")
    if not tmap.is_invertible():
        return False
    if space.kind == "polytopic":
        img = space.vertices @ tmap.matrix.T
        return _same_vertex_set(img, space.vertices)
    if space.kind == "ball":
        if np.abs(space.u @ tmap.matrix - space.u).max() > TOL:
            return False
        shift = tmap.matrix[1:, 0]
        block = tmap.matrix[1:, 1:]
        return (np.linalg.norm(shift) <= TOL
                and np.abs(block.T @ block - np.eye(block.shape[0])).max() <= TOL)
    inv = tmap.inverse()
    return (is_transformation(space, tmap, n_samples, seed)
            and is_transformation(space, inv, n_samples, seed))


def _same_vertex_set(a, b, tol=TOL):
    if a.shape != b.shape:
        return False
    used = set()
    for v in a:
        hit = None
        for j, w in enumerate(b):
            if j not in used and np.abs(v - w).max() <= tol:
                hit = j
                break
        if hit is None:
            return False
        used.add(hit)
    return True


def are_equivalent(space_a, space_b, l, n_samples=1000, seed=0):
    """Does the invertible map l carry Omega_A exactly onto Omega_B?

    Exact for polytopic pairs; for quantum/ball spaces the inclusion
    checks use seeded sampled pure states (refutation is sound,
    confirmation is probabilistic).
    """
    lmap = l if isinstance(l, LinearMap) else LinearMap(l)
    if lmap.matrix.shape != (space_b.ambient_dim, space_a.ambient_dim):
        raise DimensionMismatch("map shape does not match the two spaces")
    if space_a.ambient_dim != space_b.ambient_dim:
        return False
    if not lmap.is_invertible():
        raise SingularMap("equivalence requires an invertible map")
    linv = lmap.inverse()

    def states_of(space):
        if space.kind == "polytopic":
            return space.vertices
        return _sampled_pure_states(space, n_samples, seed)

    for s in states_of(space_a):
        if not contains_state(space_b, lmap(s)):
            return False
    for s in states_of(space_b):
        if not contains_state(space_a, linv(s)):
            return False
    return True


# ---------------------------------------------------------------------------
# JSON round trip

def space_to_json(space):
    doc = {"kind": space.kind, "u": space.u.tolist()}
    if space.kind == "polytopic":
        doc["vertices"] = space.vertices.tolist()
    elif space.kind == "quantum":
        doc["N"] = space.hilbert_dim
    elif space.kind == "ball":
        doc["d"] = space.ball_dim
    return json.dumps(doc)


def space_from_json(text):
    doc = json.loads(text)
    kind = doc["kind"]
    if kind == "polytopic":
        return make_polytopic(doc["vertices"], doc["u"])
    if kind == "quantum":
        return make_quantum(int(doc["N"]))
    if kind == "ball":
        return make_ball(int(doc["d"]))
    raise InvalidArgument(f"unknown state-space kind {kind!r}")
