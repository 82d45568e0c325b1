"""Finite-dimensional Hermitian calculus: Jacobi eigensolver, f(A), positive
map families, operator means, and the matrix entropies.

The eigensolver is a cyclic-by-row complex Jacobi iteration with an explicit
2x2 Hermitian rotation at each pivot.  It operates natively on stacks of
same-sized matrices: each matrix in the stack gets its own rotation angles
while sharing the (data-independent) pivot schedule, so batching changes
throughput, not results.  Everything else is built on top of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import ConvergenceError, DomainError, ShapeError
from .functions import FunctionSpec, Interval

__all__ = [
    "HERMITIAN_TOL",
    "is_hermitian",
    "assert_hermitian",
    "hermitize",
    "assert_density",
    "eigh_stack",
    "jacobi_eigh",
    "eigvals_stack",
    "apply_function",
    "apply_function_stack",
    "spectrum_in",
    "WeightedConjugation",
    "KrausMap",
    "NormalizedTrace",
    "MapFamily",
    "apply_map_family",
    "sqrtm_psd",
    "invsqrtm_pd",
    "mat_power",
    "mat_log",
    "natural_power_mean",
    "tsallis_relative_operator_entropy",
    "relative_operator_entropy",
    "von_neumann_entropy",
    "quantum_tsallis_entropy",
    "trace_distance_l1",
    "rand_unitary",
    "rand_density",
    "rand_hermitian_spectrum_in",
    "matrix_to_json",
    "matrix_from_json",
]

HERMITIAN_TOL = 1e-12
OFF_DIAG_TARGET = 1e-14
MAX_SWEEPS = 100
EIG_FLOOR = 1e-12


def _frob(A: np.ndarray) -> float:
    return float(np.linalg.norm(A))


def is_hermitian(A: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        return False
    return _frob(A - A.conj().T) <= tol * max(1.0, _frob(A))


def assert_hermitian(A, name: str = "matrix") -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError(f"{name} must be square, got shape {A.shape}")
    if not is_hermitian(A):
        raise DomainError(
            f"{name} is not Hermitian (residual "
            f"{_frob(A - A.conj().T):.3e})"
        )
    return A


def hermitize(A: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Symmetrize (A + A*)/2, rejecting drift beyond tol."""
    A = np.asarray(A, dtype=complex)
    drift = _frob(A - A.conj().T)
    if drift > tol * max(1.0, _frob(A)):
        raise DomainError(f"matrix drifted too far from Hermitian: {drift:.3e}")
    return (A + A.conj().T) / 2.0


def assert_density(rho, name: str = "density matrix") -> np.ndarray:
    rho = assert_hermitian(rho, name)
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > 1e-10:
        raise DomainError(f"{name} must have unit trace, got {tr}")
    evals = eigvals_stack(rho[None])[0]
    if evals.min() < -1e-10:
        raise DomainError(f"{name} has a negative eigenvalue {evals.min():.3e}")
    return rho


# ---------------------------------------------------------------------------
# cyclic complex Jacobi eigensolver (stack-native)
# ---------------------------------------------------------------------------


def eigh_stack(mats: np.ndarray, max_sweeps: int = MAX_SWEEPS):
    """Eigendecompositions of a stack (k, d, d) of Hermitian matrices.

    Returns (evals, vecs) with evals (k, d) ascending and vecs (k, d, d)
    unitary columns satisfying A = V diag(w) V*.  Sweeps stop once every
    matrix has off-diagonal Frobenius mass <= 1e-14 * ||A||_F; exceeding the
    sweep cap raises ConvergenceError with the worst residual.
    """
    A = np.array(mats, dtype=complex)
    if A.ndim != 3 or A.shape[1] != A.shape[2]:
        raise ShapeError(f"expected a stack (k, d, d), got {A.shape}")
    k, d, _ = A.shape
    V = np.zeros_like(A)
    idx = np.arange(d)
    V[:, idx, idx] = 1.0
    if d == 1:
        return A[:, 0, 0].real.reshape(k, 1), V

    scale = np.maximum(np.linalg.norm(A, axis=(1, 2)), 1e-300)

    def off_mass():
        m = np.abs(A) ** 2
        m[:, idx, idx] = 0.0
        return np.sqrt(m.sum(axis=(1, 2)))

    converged = False
    for _ in range(max_sweeps):
        if np.all(off_mass() <= OFF_DIAG_TARGET * scale):
            converged = True
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = A[:, p, q]
                mag = np.abs(apq)
                live = mag > 1e-18 * scale
                if not live.any():
                    continue
                safe = np.where(live, mag, 1.0)
                phase = np.where(live, apq / safe, 1.0)
                tau = (A[:, q, q].real - A[:, p, p].real) / (2.0 * safe)
                sgn = np.where(tau >= 0.0, 1.0, -1.0)
                t = sgn / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = np.where(live, t * c, 0.0)
                c = np.where(live, c, 1.0)
                sp = s * phase

                rp = A[:, p, :].copy()
                rq = A[:, q, :].copy()
                A[:, p, :] = c[:, None] * rp - sp[:, None] * rq
                A[:, q, :] = np.conj(sp)[:, None] * rp + c[:, None] * rq
                cp = A[:, :, p].copy()
                cq = A[:, :, q].copy()
                A[:, :, p] = c[:, None] * cp - np.conj(sp)[:, None] * cq
                A[:, :, q] = sp[:, None] * cp + c[:, None] * cq
                A[:, p, q] = 0.0
                A[:, q, p] = 0.0
                A[:, p, p] = A[:, p, p].real
                A[:, q, q] = A[:, q, q].real

                vp = V[:, :, p].copy()
                vq = V[:, :, q].copy()
                V[:, :, p] = c[:, None] * vp - np.conj(sp)[:, None] * vq
                V[:, :, q] = sp[:, None] * vp + c[:, None] * vq
    if not converged and np.any(off_mass() > OFF_DIAG_TARGET * scale):
        worst = float((off_mass() / scale).max())
        raise ConvergenceError(
            f"Jacobi sweeps did not converge in {max_sweeps} sweeps", residual=worst
        )

    evals = np.diagonal(A, axis1=1, axis2=2).real.copy()
    order = np.argsort(evals, axis=1, kind="stable")
    evals = np.take_along_axis(evals, order, axis=1)
    V = np.take_along_axis(V, order[:, None, :], axis=2)
    return evals, V


def jacobi_eigh(A):
    """Eigendecomposition (evals ascending, unitary) of one Hermitian matrix."""
    A = assert_hermitian(A)
    w, V = eigh_stack(A[None])
    return w[0], V[0]


def eigvals_stack(mats: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a stack of Hermitian matrices."""
    return eigh_stack(mats)[0]


# ---------------------------------------------------------------------------
# functional calculus
# ---------------------------------------------------------------------------


def _recompose(w: np.ndarray, V: np.ndarray) -> np.ndarray:
    out = V @ (w[..., :, None] * np.swapaxes(V, -1, -2).conj())
    return (out + np.swapaxes(out, -1, -2).conj()) / 2.0


def apply_function_stack(f, mats, domain: Interval | None = None) -> np.ndarray:
    """f applied spectrally to each matrix in a stack.

    f is a FunctionSpec or a vectorized scalar callable; with a FunctionSpec
    the spectra must sit inside its domain (1e-10 slack, eigenvalues clipped
    back onto the boundary before evaluation).
    """
    mats = np.asarray(mats, dtype=complex)
    w, V = eigh_stack(mats)
    if isinstance(f, FunctionSpec):
        domain = f.domain
    if domain is not None:
        lo, hi = domain.m, domain.M
        if w.min() < lo - 1e-10 or w.max() > hi + 1e-10:
            bad = float(w.min() if w.min() < lo - 1e-10 else w.max())
            raise DomainError(
                f"eigenvalue {bad!r} outside the function domain [{lo}, {hi}]"
            )
        w = np.clip(w, lo, hi)
    fw = np.asarray(f(w), dtype=float)
    return _recompose(fw, V)


def apply_function(f, A, domain: Interval | None = None) -> np.ndarray:
    """Spectral image f(A) = U diag(f(lambda)) U* of a Hermitian matrix."""
    A = assert_hermitian(A)
    return apply_function_stack(f, A[None], domain)[0]


def spectrum_in(A, iv: Interval) -> bool:
    """True iff all eigenvalues lie in [m - 1e-10, M + 1e-10]."""
    A = assert_hermitian(A)
    w = eigvals_stack(A[None])[0]
    return bool(w.min() >= iv.m - 1e-10 and w.max() <= iv.M + 1e-10)


# ---------------------------------------------------------------------------
# positive linear map families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightedConjugation:
    """X -> weight * U* X U for a positive weight and unitary U."""

    weight: float
    unitary: np.ndarray

    def __call__(self, X: np.ndarray) -> np.ndarray:
        U = self.unitary
        return self.weight * (U.conj().T @ X @ U)

    def on_identity(self, dim: int) -> np.ndarray:
        return self.weight * np.eye(dim, dtype=complex)

    def out_dim(self, dim: int) -> int:
        return dim


@dataclass(frozen=True)
class KrausMap:
    """X -> sum_k V_k* X V_k for a list of dim_in x dim_out operators."""

    operators: tuple

    def __call__(self, X: np.ndarray) -> np.ndarray:
        return sum(V.conj().T @ X @ V for V in self.operators)

    def on_identity(self, dim: int) -> np.ndarray:
        return sum(V.conj().T @ V for V in self.operators)

    def out_dim(self, dim: int) -> int:
        return self.operators[0].shape[1]


@dataclass(frozen=True)
class NormalizedTrace:
    """X -> weight * Tr(X)/dim as a 1x1 matrix."""

    weight: float

    def __call__(self, X: np.ndarray) -> np.ndarray:
        dim = X.shape[0]
        return np.array([[self.weight * np.trace(X) / dim]], dtype=complex)

    def on_identity(self, dim: int) -> np.ndarray:
        return np.array([[self.weight]], dtype=complex)

    def out_dim(self, dim: int) -> int:
        return 1


PositiveMap = Union[WeightedConjugation, KrausMap, NormalizedTrace]


@dataclass(frozen=True)
class MapFamily:
    """A tuple of positive linear maps Phi_i with sum_i Phi_i(I) = I."""

    maps: tuple
    input_dim: int

    def __post_init__(self):
        if len(self.maps) == 0:
            raise ShapeError("MapFamily needs at least one map")
        res = self.unital_residual()
        if res > 1e-10:
            raise DomainError(f"map family is not unital-sum: residual {res:.3e}")

    @property
    def output_dim(self) -> int:
        return self.maps[0].out_dim(self.input_dim)

    def unital_residual(self) -> float:
        total = sum(m.on_identity(self.input_dim) for m in self.maps)
        eye = np.eye(self.output_dim, dtype=complex)
        return _frob(np.asarray(total) - eye)


def apply_map_family(family: MapFamily, mats: Sequence[np.ndarray]) -> np.ndarray:
    """sum_i Phi_i(A_i) for matching lists of maps and Hermitian matrices."""
    if len(mats) != len(family.maps):
        raise ShapeError(
            f"family has {len(family.maps)} maps but got {len(mats)} matrices"
        )
    out = None
    for phi, A in zip(family.maps, mats):
        A = np.asarray(A, dtype=complex)
        if A.shape != (family.input_dim, family.input_dim):
            raise ShapeError(f"matrix shape {A.shape} does not match dim {family.input_dim}")
        term = phi(A)
        out = term if out is None else out + term
    return hermitize(out)


# ---------------------------------------------------------------------------
# means and entropies
# ---------------------------------------------------------------------------


def _power_of_psd(w: np.ndarray, r: float, floor_pd: bool) -> np.ndarray:
    if floor_pd and w.min() < EIG_FLOOR:
        raise DomainError(
            f"matrix must be positive definite (eigenvalue floor {EIG_FLOOR}); "
            f"min eigenvalue {w.min():.3e}"
        )
    w = np.maximum(w, 0.0) if not floor_pd else w
    return w ** r


def sqrtm_psd(A: np.ndarray) -> np.ndarray:
    w, V = jacobi_eigh(A)
    if w.min() < -1e-10:
        raise DomainError(f"sqrtm needs a PSD matrix, min eigenvalue {w.min():.3e}")
    return _recompose(np.sqrt(np.maximum(w, 0.0)), V)

def invsqrtm_pd(A: np.ndarray) -> np.ndarray:
    w, V = jacobi_eigh(A)
    if w.min() < EIG_FLOOR:
        raise DomainError(f"invsqrtm needs eigenvalues > {EIG_FLOOR}, got {w.min():.3e}")
    return _recompose(1.0 / np.sqrt(w), V)


def mat_power(A: np.ndarray, r: float) -> np.ndarray:
    """A^r for positive definite A (any real r)."""
    w, V = jacobi_eigh(A)
    return _recompose(_power_of_psd(w, r, floor_pd=True), V)


def mat_log(A: np.ndarray) -> np.ndarray:
    w, V = jacobi_eigh(A)
    if w.min() < EIG_FLOOR:
        raise DomainError(f"log needs eigenvalues > {EIG_FLOOR}, got {w.min():.3e}")
    return _recompose(np.log(w), V)


def natural_power_mean(X: np.ndarray, Y: np.ndarray, r: float) -> np.ndarray:
    """X^(1/2) (X^(-1/2) Y X^(-1/2))^r X^(1/2) for positive definite X, Y.

    For r in [0, 1] this is the weighted geometric mean; r = 0 gives X and
    r = 1 gives Y.
    """
    X = assert_hermitian(X, "X")
    Y = assert_hermitian(Y, "Y")
    if X.shape != Y.shape:
        raise ShapeError("X and Y must share a dimension")
    xs = sqrtm_psd(X)
    xis = invsqrtm_pd(X)
    mid = hermitize(xis @ Y @ xis)
    return hermitize(xs @ mat_power(mid, r) @ xs)


def tsallis_relative_operator_entropy(X: np.ndarray, Y: np.ndarray, r: float) -> np.ndarray:
    """(X natural_r Y - X)/r, with the r -> 0 branch
    X^(1/2) log(X^(-1/2) Y X^(-1/2)) X^(1/2)."""
    if abs(r) < 1e-12:
        return relative_operator_entropy(X, Y)
    return (natural_power_mean(X, Y, r) - np.asarray(X, dtype=complex)) / r


def relative_operator_entropy(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    X = assert_hermitian(X, "X")
    Y = assert_hermitian(Y, "Y")
    xs = sqrtm_psd(X)
    xis = invsqrtm_pd(X)
    mid = hermitize(xis @ Y @ xis)
    return hermitize(xs @ mat_log(mid) @ xs)


def von_neumann_entropy(rho) -> float:
    """-Tr[rho log rho] with 0 log 0 = 0; lives in [0, log dim]."""
    rho = assert_density(rho)
    w = eigvals_stack(rho[None])[0]
    w = np.clip(w, 0.0, None)
    pos = w[w > 0.0]
    return float(-np.sum(pos * np.log(pos)))


def quantum_tsallis_entropy(rho, r: float) -> float:
    """(Tr[rho^(1-r)] - 1)/r for r in (0, 1]; nonnegative, 0 on pure states."""
    if not 0.0 < r <= 1.0:
        raise DomainError(f"quantum_tsallis_entropy needs r in (0, 1], got {r}")
    rho = assert_density(rho)
    w = eigvals_stack(rho[None])[0]
    pos = np.clip(w, 0.0, None)
    pos = pos[pos > 0.0]
    return float((np.sum(pos ** (1.0 - r)) - 1.0) / r)


def trace_distance_l1(A, B) -> float:
    """Tr|A - B| = sum of absolute eigenvalues of the difference."""
    A = assert_hermitian(A, "A")
    B = assert_hermitian(B, "B")
    if A.shape != B.shape:
        raise ShapeError("A and B must share a dimension")
    w = eigvals_stack((A - B)[None])[0]
    return float(np.abs(w).sum())


# ---------------------------------------------------------------------------
# random ensembles
# ---------------------------------------------------------------------------


def rand_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish unitary via orthonormalization of a complex Gaussian matrix."""
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    Q, R = np.linalg.qr(G)
    diag = np.diagonal(R)
    return Q * (diag / np.abs(diag))


def rand_density(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Random density matrix G G*/Tr(G G*) from a complex Gaussian G."""
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = G @ G.conj().T
    return hermitize(rho / np.trace(rho).real)


def rand_hermitian_spectrum_in(dim: int, iv: Interval, rng: np.random.Generator) -> np.ndarray:
    """U diag(uniform[m, M]) U* for a random unitary U."""
    U = rand_unitary(dim, rng)
    w = rng.uniform(iv.m, iv.M, size=dim)
    return hermitize(U @ (w[:, None] * U.conj().T))


# ---------------------------------------------------------------------------
# JSON exchange format
# ---------------------------------------------------------------------------


def matrix_to_json(A: np.ndarray) -> dict:
    """{dim, re, im} with row-major entry lists."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError(f"expected a square matrix, got {A.shape}")
    return {
        "dim": int(A.shape[0]),
        "re": [float(v) for v in A.real.ravel()],
        "im": [float(v) for v in A.imag.ravel()],
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    dim = int(obj["dim"])
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj["im"], dtype=float)
    if re.size != dim * dim or im.size != dim * dim:
        raise ShapeError(f"re/im length must be dim^2 = {dim * dim}")
    return (re + 1j * im).reshape(dim, dim)
