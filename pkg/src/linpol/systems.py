"""Unit-vector systems over the real or complex field and their Gram data.

The inner product convention everywhere is ``<u, v> = sum_k u_k * conj(v_k)``
(conjugation on the second slot), so ``<x, a_j>`` is linear in ``x``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, EmptySystem, InvalidParams, NotUnitNorm

REAL = "real"
COMPLEX = "complex"

#: guaranteed bound on | ||a_j|| - 1 | after construction
UNIT_ATOL = 1e-12
#: accept-and-renormalize band for constructor input
ACCEPT_ATOL = 1e-9


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class UnitVectorSystem:
    """An ordered list of m unit vectors in K^dim, K = R or C.

    ``vectors`` is an (m, dim) array whose rows all have Euclidean norm 1
    within UNIT_ATOL. m may differ from dim (e.g. planar vectors embedded
    in a larger space). Instances are immutable after construction.
    """

    field: str
    vectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    @property
    def m(self) -> int:
        return self.vectors.shape[0]

    def __repr__(self) -> str:
        return f"UnitVectorSystem(field={self.field!r}, m={self.m}, dim={self.dim})"


@dataclass(frozen=True, eq=False)
class GramSummary:
    """Pairwise inner products gram[j][k] = <a_j, a_k> and real row sums."""

    gram: np.ndarray
    row_sums: np.ndarray


def new_system(field: str, vectors) -> UnitVectorSystem:
    """Validate and build a system from an iterable of coordinate rows.

    Rows within ACCEPT_ATOL of unit norm are renormalized; anything farther
    off is rejected with NotUnitNorm. Complex coordinates are only allowed
    when field is "complex".
    """
    if field not in (REAL, COMPLEX):
        raise InvalidParams(f"unknown field {field!r}")
    rows = list(vectors)
    if len(rows) == 0:
        raise EmptySystem("a system needs at least one vector")
    lengths = {len(r) for r in rows}
    if len(lengths) != 1:
        raise DimensionMismatch(f"vector lengths differ: {sorted(lengths)}")
    dtype = np.complex128 if field == COMPLEX else np.float64
    try:
        arr = np.array(rows, dtype=dtype)
    except (TypeError, ValueError) as exc:
        raise InvalidParams(f"coordinates not representable over {field}: {exc}") from None
    if arr.ndim != 2:
        raise DimensionMismatch("vectors must be one-dimensional coordinate rows")
    norms = np.linalg.norm(arr, axis=1)
    dev = np.abs(norms - 1.0)
    worst = int(np.argmax(dev))
    if dev[worst] > ACCEPT_ATOL:
        raise NotUnitNorm(
            f"vector {worst} has norm {norms[worst]:.12g}, "
            f"deviating from 1 by more than {ACCEPT_ATOL:g}"
        )
    arr = arr / norms[:, None]
    return UnitVectorSystem(field=field, vectors=_freeze(arr))


def orthonormal(n: int) -> UnitVectorSystem:
    """The canonical basis e_1, ..., e_n of R^n."""
    if n < 1:
        raise InvalidParams("n must be at least 1")
    return UnitVectorSystem(field=REAL, vectors=_freeze(np.eye(n)))


def random_system(field: str, n: int, m: int, seed: int) -> UnitVectorSystem:
    """m vectors drawn uniformly on the unit sphere of K^n, reproducible from seed.

    Coordinates are standard Gaussians (independent real and imaginary parts
    in the complex case), normalized to the sphere.
    """
    if n < 1 or m < 1:
        raise InvalidParams("n and m must be at least 1")
    rng = np.random.default_rng(seed)
    if field == COMPLEX:
        arr = rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))
    elif field == REAL:
        arr = rng.standard_normal((m, n))
    else:
        raise InvalidParams(f"unknown field {field!r}")
    arr /= np.linalg.norm(arr, axis=1)[:, None]
    return new_system(field, arr)


def perturbed_orthonormal(n: int, delta: float, seed: int) -> UnitVectorSystem:
    """Each e_j displaced by a random vector of norm <= delta, then renormalized.

    Displacements are uniform in the delta-ball. delta = 0 reproduces
    orthonormal(n) exactly.
    """
    if n < 1:
        raise InvalidParams("n must be at least 1")
    if delta < 0:
        raise InvalidParams("delta must be nonnegative")
    rng = np.random.default_rng(seed)
    vectors = np.eye(n)
    if delta > 0:
        directions = rng.standard_normal((n, n))
        directions /= np.linalg.norm(directions, axis=1)[:, None]
        radii = delta * rng.uniform(size=n) ** (1.0 / n)
        vectors = vectors + radii[:, None] * directions
        vectors /= np.linalg.norm(vectors, axis=1)[:, None]
    return new_system(REAL, vectors)


def gram(system: UnitVectorSystem) -> GramSummary:
    """Gram matrix and unsigned row sums (all-plus signs) of a system."""
    v = system.vectors
    g = v @ v.conj().T
    row_sums = np.ascontiguousarray(g.sum(axis=1).real)
    return GramSummary(gram=_freeze(g), row_sums=_freeze(row_sums))


def system_to_json(system: UnitVectorSystem) -> dict:
    """Interchange form: complex coordinates become [re, im] pairs."""
    if system.field == COMPLEX:
        vecs = [[[float(z.real), float(z.imag)] for z in row] for row in system.vectors]
    else:
        vecs = [[float(x) for x in row] for row in system.vectors]
    return {"field": system.field, "dim": system.dim, "vectors": vecs}


def system_from_json(obj) -> UnitVectorSystem:
    """Parse the interchange form; raises InvalidParams on malformed input."""
    if not isinstance(obj, dict):
        raise InvalidParams("system JSON must be an object")
    try:
        field = obj["field"]
        dim = int(obj["dim"])
        raw = obj["vectors"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParams(f"malformed system JSON: {exc}") from None
    if field == COMPLEX:
        try:
            rows = [[complex(e[0], e[1]) for e in row] for row in raw]
        except (TypeError, IndexError) as exc:
            raise InvalidParams(f"complex entries must be [re, im] pairs: {exc}") from None
    else:
        rows = raw
    system = new_system(field, rows)
    if system.dim != dim:
        raise DimensionMismatch(f"declared dim {dim} but vectors have length {system.dim}")
    return system


def load_system(path) -> UnitVectorSystem:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidParams(f"not valid JSON: {exc}") from None
    return system_from_json(obj)


def save_system(path, system: UnitVectorSystem) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(system_to_json(system), fh)
