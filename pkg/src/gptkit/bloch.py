"""Bloch-ball machinery for the qubit and the verifiable consequences of
the reconstruction: the density-matrix correspondence, the unitary to
SO(3) rotation map, group averaging, strict convexity of balls, and the
dimension laws K = N^r.
"""

import numpy as np

from .errors import InvalidArgument, NotAState, TooFewSamples
from .spaces import make_classical, make_quantum

PAULI = (np.array([[0, 1], [1, 0]], dtype=complex),
         np.array([[0, -1j], [1j, 0]], dtype=complex),
         np.array([[1, 0], [0, -1]], dtype=complex))

TOL = 1e-9


def bloch_to_density(r):
    """rho = (1 + r.sigma)/2 for a Bloch vector with |r| <= 1."""
    r = np.asarray(r, dtype=float)
    if r.shape != (3,):
        raise NotAState("Bloch vector must have 3 components")
    if np.linalg.norm(r) > 1.0 + TOL:
        raise NotAState("|r| > 1")
    return 0.5 * np.array([[1 + r[2], r[0] - 1j * r[1]],
                           [r[0] + 1j * r[1], 1 - r[2]]])


def density_to_bloch(rho):
    """Inverse map: r_i = tr(rho sigma_i)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2) or np.abs(rho - rho.conj().T).max() > TOL:
        raise NotAState("need a 2x2 Hermitian matrix")
    if abs(np.trace(rho).real - 1.0) > TOL or \
            np.linalg.eigvalsh(rho).min() < -TOL:
        raise NotAState("not a density matrix")
    return np.array([np.trace(rho @ s).real for s in PAULI])


def unitary_to_rotation(u):
    """R_ij = tr(sigma_i U sigma_j U^dag) / 2; lands in SO(3)."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2) or np.abs(u.conj().T @ u - np.eye(2)).max() > TOL:
        raise InvalidArgument("input is not unitary")
    r = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            r[i, j] = 0.5 * np.trace(PAULI[i] @ u @ PAULI[j] @ u.conj().T).real
    return r


def haar_so3(rng, n):
    """n Haar-uniform SO(3) matrices via normalized Gaussian quaternions."""
    q = rng.normal(size=(n, 4))
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    w, x, y, z = q.T
    return np.stack([
        np.stack([1 - 2 * (y ** 2 + z ** 2), 2 * (x * y - w * z), 2 * (x * z + w * y)], axis=-1),
        np.stack([2 * (x * y + w * z), 1 - 2 * (x ** 2 + z ** 2), 2 * (y * z - w * x)], axis=-1),
        np.stack([2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x ** 2 + y ** 2)], axis=-1),
    ], axis=1)


def group_average_state(samples, omega):
    """Monte-Carlo average of T omega over rotation samples.

    Converges to the invariant (maximally mixed) state, i.e. the origin,
    as the sample count grows.
    """
    samples = np.asarray(samples, dtype=float)
    if samples.ndim == 2:
        samples = samples[None]
    if samples.shape[0] < 1:
        raise TooFewSamples("need at least one sample")
    omega = np.asarray(omega, dtype=float)
    return np.mean(samples @ omega, axis=0)


def invariant_inner_product(samples, seed=0):
    """Group-averaged Gram matrix of a random seed inner product.

    By Schur's lemma the average is proportional to the identity; the
    result is normalized so pure states (unit vectors) have norm 1.
    """
    samples = np.asarray(samples, dtype=float)
    if samples.shape[0] < 10:
        raise TooFewSamples("need at least 10 samples")
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(3, 3))
    g0 = a @ a.T + 3 * np.eye(3)  # positive definite seed metric
    g = np.mean(np.swapaxes(samples, 1, 2) @ g0 @ samples, axis=0)
    # normalize so that the average norm over the coordinate axes is 1
    alpha = 3.0 / np.trace(g)
    return alpha * g


def check_strict_convexity_ball(d, trials=1000, seed=0):
    """Sampled check that proper mixtures of distinct boundary points of
    the d-ball are interior; reports the minimum gap 1 - |midpoint|."""
    if d < 1:
        raise InvalidArgument("need d >= 1")
    rng = np.random.default_rng(seed)
    if d == 1:
        # boundary is two points; the only proper mixtures are interior
        return {"dim": 1, "trials": 0, "min_gap": 1.0, "strictly_convex": True}
    min_gap = np.inf
    for _ in range(trials):
        x = rng.normal(size=d)
        y = rng.normal(size=d)
        x /= np.linalg.norm(x)
        y /= np.linalg.norm(y)
        if np.linalg.norm(x - y) < 1e-9:
            continue
        lam = rng.uniform(0.05, 0.95)
        gap = 1.0 - np.linalg.norm(lam * x + (1 - lam) * y)
        min_gap = min(min_gap, gap)
    return {"dim": d, "trials": trials, "min_gap": float(min_gap),
            "strictly_convex": bool(min_gap > 0)}


def check_dimension_law(n_max=5):
    """K = N for classical and K = N^2 for quantum, N = 1..n_max, plus
    multiplicativity of K and supermultiplicativity of capacity on
    composites of classical and of quantum factors."""
    if n_max < 2:
        raise InvalidArgument("need n_max >= 2")
    from .composites import check_supermultiplicativity, min_tensor

    report = {"classical": {}, "quantum": {}, "composites": []}
    for n in range(1, n_max + 1):
        report["classical"][n] = make_classical(n).ambient_dim
        report["quantum"][n] = make_quantum(n).ambient_dim
    ok = all(report["classical"][n] == n for n in report["classical"]) and \
        all(report["quantum"][n] == n * n for n in report["quantum"])

    for (ma, mb) in [(2, 2), (2, 3), (3, 2)]:
        ca, cb = make_classical(ma), make_classical(mb)
        comp = min_tensor(ca, cb)
        sup = check_supermultiplicativity(ca, cb, comp)
        entry = {
            "factors": ("classical", ma, mb),
            "k_law": comp.ambient_dim == ca.ambient_dim * cb.ambient_dim,
            "capacity_bound": sup["lower_bound"],
            "capacity_verified": sup["verified"],
        }
        ok = ok and entry["k_law"] and sup["verified"] and sup["lower_bound"] == ma * mb
        report["composites"].append(entry)

    for (ma, mb) in [(2, 2), (2, 3)]:
        qa, qb = make_quantum(ma), make_quantum(mb)
        k_ab = (ma * mb) ** 2
        sup = check_supermultiplicativity(qa, qb)
        entry = {
            "factors": ("quantum", ma, mb),
            "k_law": k_ab == qa.ambient_dim * qb.ambient_dim,
            "capacity_bound": sup["lower_bound"],
            "capacity_verified": sup["verified"],
        }
        ok = ok and entry["k_law"] and sup["verified"] and sup["lower_bound"] == ma * mb
        report["composites"].append(entry)

    report["all_hold"] = ok
    return report
