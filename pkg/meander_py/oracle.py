"""Exact linear-algebra oracle on the matrix realization of p(x|y).

Everything is computed over the prime field F_p with numpy int64 arrays.
The modulus must stay below 2^31 so that a product of two residues fits
in 63 bits.
"""

import logging
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple

import numpy as np

from .composition import SeaweedPair, render_pair
from .errors import (
    DegenerateTrials, InvalidModulus, OutOfRange, SingularForm,
)
from .index import IndexReport, Method

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 2_147_483_647
PRIME_LIMIT = 2 ** 31

Position = Tuple[int, int]
Functional = Dict[Position, int]


@dataclass(frozen=True)
class SeaweedShape:
    """Matrix positions (i, j), 1-based, allowed in the gl realization."""
    n: int
    allowed: FrozenSet[Position]

    @property
    def dim_gl(self) -> int:
        return len(self.allowed)

    @property
    def dim_sl(self) -> int:
        return len(self.allowed) - 1

    def positions(self) -> List[Position]:
        return sorted(self.allowed)

    def picture(self) -> str:
        """Rows of `*` (allowed) and `.` (forced zero)."""
        return "\n".join(
            " ".join("*" if (i, j) in self.allowed else "." for j in range(1, self.n + 1))
            for i in range(1, self.n + 1)
        )


def seaweed_shape(pair: SeaweedPair) -> SeaweedShape:
    """Block upper triangular for the top flag, block lower for the bottom flag."""
    n = pair.n
    top = [0] + [pair.top.block_of(v) for v in range(1, n + 1)]
    bottom = [0] + [pair.bottom.block_of(v) for v in range(1, n + 1)]
    allowed = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if top[i] <= top[j] and bottom[i] >= bottom[j]
    )
    return SeaweedShape(n, allowed)


@dataclass(frozen=True, eq=False)
class Basis:
    """Ordered basis of the seaweed as a stack of n x n integer matrices."""
    kind: str
    labels: Tuple[str, ...]
    matrices: np.ndarray

    def __len__(self) -> int:
        return len(self.labels)


def _unit(n: int, i: int, j: int) -> np.ndarray:
    unit = np.zeros((n, n), dtype=np.int64)
    unit[i - 1, j - 1] = 1
    return unit


def _stack(n: int, matrices: List[np.ndarray]) -> np.ndarray:
    if not matrices:
        return np.zeros((0, n, n), dtype=np.int64)
    return np.stack(matrices)


def gl_basis(shape: SeaweedShape) -> Basis:
    """Elementary matrices E_ij over the allowed positions."""
    positions = shape.positions()
    return Basis(
        "gl",
        tuple(f"({i},{j})" for i, j in positions),
        _stack(shape.n, [_unit(shape.n, i, j) for i, j in positions]),
    )


def sl_basis(shape: SeaweedShape) -> Basis:
    """Off-diagonal E_ij plus H_i = E_ii - E_(i+1)(i+1)."""
    n = shape.n
    off_diagonal = [p for p in shape.positions() if p[0] != p[1]]
    labels = [f"({i},{j})" for i, j in off_diagonal]
    matrices = [_unit(n, i, j) for i, j in off_diagonal]
    for i in range(1, n):
        labels.append(f"H({i})")
        matrices.append(_unit(n, i, i) - _unit(n, i + 1, i + 1))
    return Basis("sl", tuple(labels), _stack(n, matrices))


def make_basis(shape: SeaweedShape, kind: str = "gl") -> Basis:
    if kind == "gl":
        return gl_basis(shape)
    if kind == "sl":
        return sl_basis(shape)
    raise ValueError(f"unknown basis kind {kind!r}; expected 'gl' or 'sl'")


def check_prime(prime: int, n: int) -> None:
    """Reject moduli that cannot host exact int64 elimination for size n."""
    if prime >= PRIME_LIMIT:
        raise InvalidModulus(prime, "must be below 2^31")
    if prime <= 2 * n * n:
        raise InvalidModulus(prime, f"must exceed 2*n^2 = {2 * n * n}")
    if prime % 2 == 0:
        raise InvalidModulus(prime, "must be an odd prime")


def _inverse(value: int, prime: int) -> int:
    try:
        return pow(int(value), -1, prime)
    except ValueError:
        raise InvalidModulus(prime, "not prime (found a non-invertible residue)") from None


def rank_mod_p(matrix: np.ndarray, prime: int) -> int:
    """Rank of an integer matrix over F_p by Gaussian elimination."""
    work = np.array(matrix, dtype=np.int64) % prime
    if work.size == 0:
        return 0
    rows, cols = work.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nonzero = np.flatnonzero(work[rank:, col])
        if nonzero.size == 0:
            continue
        pivot = rank + int(nonzero[0])
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
        work[rank] = (work[rank] * _inverse(work[rank, col], prime)) % prime
        below = work[rank + 1:, col].copy()
        if below.any():
            work[rank + 1:] = (work[rank + 1:] - np.outer(below, work[rank])) % prime
        rank += 1
    return rank


def inverse_mod_p(matrix: np.ndarray, prime: int) -> np.ndarray:
    """Inverse over F_p by Gauss-Jordan elimination.

    Raises:
        SingularForm: if the matrix is not invertible mod p
    """
    size = matrix.shape[0]
    work = np.concatenate(
        [np.array(matrix, dtype=np.int64) % prime, np.eye(size, dtype=np.int64)], axis=1
    )
    for col in range(size):
        nonzero = np.flatnonzero(work[col:, col])
        if nonzero.size == 0:
            raise SingularForm(rank_mod_p(matrix, prime), size)
        pivot = col + int(nonzero[0])
        if pivot != col:
            work[[col, pivot]] = work[[pivot, col]]
        work[col] = (work[col] * _inverse(work[col, col], prime)) % prime
        factors = work[:, col].copy()
        factors[col] = 0
        work = (work - np.outer(factors, work[col])) % prime
    return work[:, size:]


def functional_array(n: int, functional: Functional, prime: int) -> np.ndarray:
    """The n x n coefficient matrix of F in the dual basis of E_ij."""
    values = np.zeros((n, n), dtype=np.int64)
    for (i, j), value in functional.items():
        values[i - 1, j - 1] = value % prime
    return values


def form_matrix(basis: Basis, functional: np.ndarray, prime: int) -> np.ndarray:
    """Matrix of B_F(X_u, X_v) = F([X_u, X_v]) over F_p; skew-symmetric."""
    # A[u, v] = F(X_u X_v); the bracket gives A - A^T.
    weighted = np.einsum("uac,ab->ucb", basis.matrices, functional)
    products = np.einsum("ucb,vcb->uv", weighted, basis.matrices)
    return (products - products.T) % prime


@dataclass(frozen=True, eq=False)
class KirillovForm:
    """B_F on a chosen basis for one functional F."""
    basis: Basis
    functional: Functional
    matrix: np.ndarray
    prime: int

    @property
    def rank(self) -> int:
        return rank_mod_p(self.matrix, self.prime)

    def is_nondegenerate(self) -> bool:
        return self.rank == len(self.basis)


def kirillov_form(pair: SeaweedPair, functional: Functional, prime: int = DEFAULT_PRIME,
                  basis: str = "gl") -> KirillovForm:
    shape = seaweed_shape(pair)
    check_prime(prime, shape.n)
    chosen = make_basis(shape, basis)
    matrix = form_matrix(chosen, functional_array(shape.n, functional, prime), prime)
    return KirillovForm(chosen, dict(functional), matrix, prime)


def random_functional(shape: SeaweedShape, rng: np.random.Generator, prime: int) -> Functional:
    """Uniform F over F_p on the dual basis of the allowed positions."""
    positions = shape.positions()
    values = rng.integers(0, prime, size=len(positions))
    return {position: int(value) for position, value in zip(positions, values)}


def _trial_rank(task) -> int:
    shape, basis, prime, seed = task
    functional = random_functional(shape, np.random.default_rng(seed), prime)
    matrix = form_matrix(basis, functional_array(shape.n, functional, prime), prime)
    return rank_mod_p(matrix, prime)


class OracleIndex(NamedTuple):
    index_gl: int
    index_sl: int
    rank: int
    dim: int
    basis: str
    trials: int


def oracle_index(pair: SeaweedPair, trials: int = 5, prime: int = DEFAULT_PRIME,
                 seed: int = 0, basis: str = "gl", workers: int = 1,
                 certified_rank: Optional[int] = None) -> OracleIndex:
    """Index as dim minus the generic rank of B_F, maximized over random F.

    Args:
        pair: The seaweed
        trials: Number of random functionals
        prime: Modulus of the ground field
        seed: Root seed; trial k uses the k-th spawned child sequence
        basis: "gl" (index_sl = index_gl - 1) or "sl" (traceless basis)
        workers: Processes for the trials (1 runs them inline)
        certified_rank: A rank known to be attainable; falling short of it
            raises DegenerateTrials

    Returns:
        OracleIndex with both gl and sl indices
    """
    if trials < 1:
        raise OutOfRange("trials", trials, 1)
    shape = seaweed_shape(pair)
    check_prime(prime, shape.n)
    chosen = make_basis(shape, basis)
    tasks = [(shape, chosen, prime, child)
             for child in np.random.SeedSequence(seed).spawn(trials)]
    if workers > 1:
        with Pool(workers) as pool:
            ranks = pool.map(_trial_rank, tasks)
    else:
        ranks = [_trial_rank(task) for task in tasks]

    best = max(ranks)
    logger.debug("oracle %s basis=%s dim=%d ranks=%s", render_pair(pair), basis, len(chosen), ranks)
    if certified_rank is not None and best < certified_rank:
        raise DegenerateTrials(best, certified_rank, trials)

    if basis == "gl":
        index_gl = len(chosen) - best
        index_sl = index_gl - 1
    else:
        index_sl = len(chosen) - best
        index_gl = index_sl + 1
    return OracleIndex(index_gl, index_sl, best, len(chosen), basis, trials)


def oracle_report(pair: SeaweedPair, **kwargs) -> IndexReport:
    """oracle_index wrapped as an IndexReport with method=oracle."""
    result = oracle_index(pair, **kwargs)
    return IndexReport(pair, None, None, result.index_sl, result.index_sl == 0, Method.ORACLE)


def frobenius_functional(pair: SeaweedPair, attempts: int = 20, prime: int = DEFAULT_PRIME,
                         seed: int = 0) -> Optional[Functional]:
    """Search for F with B_F nondegenerate on the traceless realization.

    Returns None when every attempt was degenerate. For a pair the meander
    certifies as Frobenius that only means the sampling was unlucky.
    """
    if attempts < 1:
        raise OutOfRange("attempts", attempts, 1)
    shape = seaweed_shape(pair)
    check_prime(prime, shape.n)
    basis = sl_basis(shape)
    for attempt, child in enumerate(np.random.SeedSequence(seed).spawn(attempts), start=1):
        functional = random_functional(shape, np.random.default_rng(child), prime)
        matrix = form_matrix(basis, functional_array(shape.n, functional, prime), prime)
        if rank_mod_p(matrix, prime) == len(basis):
            logger.debug("Frobenius functional for %s on attempt %d", render_pair(pair), attempt)
            return functional
    logger.info("no Frobenius functional for %s in %d attempts", render_pair(pair), attempts)
    return None


def format_position(position: Position) -> str:
    return f"({position[0]},{position[1]})"


def functional_to_dict(functional: Functional) -> Dict[str, int]:
    """JSON form keyed by "(i,j)"."""
    return {format_position(p): int(v) for p, v in sorted(functional.items())}


@dataclass(frozen=True, eq=False)
class RMatrix:
    """r = sum over u, v of C[u, v] x_u (x) x_v with C = M^-1 skew-symmetric."""
    pair: SeaweedPair
    basis: Basis
    coefficients: np.ndarray
    prime: int

    def is_antisymmetric(self) -> bool:
        return not ((self.coefficients + self.coefficients.T) % self.prime).any()

    def wedge_terms(self) -> Dict[Tuple[str, str], int]:
        """Nonzero coefficients with u < v: one per x_u ^ x_v."""
        labels = self.basis.labels
        return {
            (labels[u], labels[v]): int(self.coefficients[u, v])
            for u in range(len(labels))
            for v in range(u + 1, len(labels))
            if self.coefficients[u, v]
        }

    def to_dict(self) -> Dict[str, object]:
        terms: Dict[str, Dict[str, int]] = {}
        for (left, right), value in self.wedge_terms().items():
            terms.setdefault(left, {})[right] = value
        return {"pair": render_pair(self.pair), "prime": self.prime, "wedge": terms}


def build_rmatrix(pair: SeaweedPair, functional: Functional,
                  prime: int = DEFAULT_PRIME) -> RMatrix:
    """r-matrix from the inverse of the form matrix of a Frobenius functional.

    Raises:
        SingularForm: if B_F is degenerate on the traceless realization
    """
    form = kirillov_form(pair, functional, prime, basis="sl")
    coefficients = inverse_mod_p(form.matrix, prime)
    return RMatrix(pair, form.basis, coefficients, prime)


def perturb(r: RMatrix, u: int, v: int) -> RMatrix:
    """Move the (u, v) coefficient by one, keeping antisymmetry."""
    coefficients = r.coefficients.copy()
    coefficients[u, v] = (coefficients[u, v] + 1) % r.prime
    coefficients[v, u] = (coefficients[v, u] - 1) % r.prime
    return RMatrix(r.pair, r.basis, coefficients, r.prime)


def _modmatmul(left: np.ndarray, right: np.ndarray, prime: int) -> np.ndarray:
    # Split the left factor at 16 bits so every partial dot product fits in int64.
    high = left >> 16
    low = left & 0xFFFF
    return (((high @ right) % prime) * 65536 + (low @ right)) % prime


def _bracket(left: np.ndarray, right: np.ndarray, prime: int) -> np.ndarray:
    return (_modmatmul(left, right, prime) - _modmatmul(right, left, prime)) % prime


def cybe_residual(r: RMatrix, shape: SeaweedShape) -> int:
    """Number of nonzero entries of [r12,r13] + [r12,r23] + [r13,r23].

    Evaluated in End(V (x) V (x) V) for the defining representation V of
    dimension n, so the result has n^6 entries. Zero means r solves the
    classical Yang-Baxter equation.
    """
    n, p = shape.n, r.prime
    if len(r.basis) == 0:
        return 0
    matrices = r.basis.matrices
    # r acting on V (x) V: R[a, b, d, e] = sum C[u, v] X_u[a, d] X_v[b, e]
    r4 = np.einsum("uv,uad,vbe->abde", r.coefficients, matrices, matrices, optimize=True) % p
    identity = np.eye(n, dtype=np.int64)
    size = n ** 3
    r12 = np.einsum("abde,cf->abcdef", r4, identity).reshape(size, size)
    r13 = np.einsum("acdf,be->abcdef", r4, identity).reshape(size, size)
    r23 = np.einsum("bcef,ad->abcdef", r4, identity).reshape(size, size)
    total = (_bracket(r12, r13, p) + _bracket(r12, r23, p) + _bracket(r13, r23, p)) % p
    return int(np.count_nonzero(total))
