"""Finite verification of the surface-classification statements.

Three checks run over sampled (and, where stated, exhaustively enumerated)
representations: the support-gap lemma for sphere-quiver representations
spread over several degrees, the sphere dichotomy (cohomology supported in
[0,2] happens only for one-degree spaces and then takes the sphere's
values), and the torus Euler-characteristic cancellation.  Violations are
collected into reports, never thrown: the reports are the output.

Sampling is deterministic per (seed, index), so parallel and serial runs
of the same configuration produce identical reports.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .cellular import genus_from_euler
from .errors import ClassificationError, FormatError, RepresentationError
from .graded import GradedMap, GradedVectorSpace
from .quiver import (
    QuiverPresentation,
    Representation,
    euler_of_hom,
    floer_cohomology,
    sphere_quiver,
    torus_quiver,
)
from .rational import RationalMatrix

_MASK64 = (1 << 64) - 1


def _mix(seed: int, index: int) -> int:
    """splitmix64-style hash of (seed, index); stable across platforms."""
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    count: int = 100
    max_total_dim: int = 3
    degree_band: Tuple[int, int] = (-3, 3)
    scalar_pool: Tuple[Fraction, ...] = (-2, -1, 0, 1, 2)

    def __post_init__(self):
        if self.count < 1:
            raise FormatError("count must be at least 1")
        if self.max_total_dim < 1:
            raise FormatError("max_total_dim must be at least 1")
        lo, hi = self.degree_band
        if lo > hi:
            raise FormatError("degree_band must be a nonempty interval")
        object.__setattr__(self, "degree_band", (int(lo), int(hi)))
        pool = tuple(Fraction(x) for x in self.scalar_pool)
        if not pool:
            raise FormatError("scalar_pool must be nonempty")
        object.__setattr__(self, "scalar_pool", pool)


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    samples_checked: int
    violations: Tuple[Dict[str, object], ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_payload(self) -> Dict[str, object]:
        return {
            "theorem": self.theorem,
            "checked": self.samples_checked,
            "violations": list(self.violations),
        }


def _violation(sample: str, space: GradedVectorSpace, detail: str) -> Dict[str, object]:
    return {
        "sample": sample,
        "space": {str(k): v for k, v in space.dims.items()},
        "detail": detail,
    }


# ---------------------------------------------------------------------------
# deterministic sampling

def _rng_for(cfg: SampleConfig, index: int) -> random.Random:
    return random.Random(_mix(cfg.seed, index))


def _sample_space(rng: random.Random, cfg: SampleConfig) -> GradedVectorSpace:
    total = rng.randint(1, cfg.max_total_dim)
    lo, hi = cfg.degree_band
    dims: Dict[int, int] = {}
    for _ in range(total):
        d = rng.randint(lo, hi)
        dims[d] = dims.get(d, 0) + 1
    return GradedVectorSpace(dims)


def _sample_matrix(
    rng: random.Random, rows: int, cols: int, pool: Sequence[Fraction]
) -> RationalMatrix:
    return RationalMatrix(rows, cols, [rng.choice(pool) for _ in range(rows * cols)])


def _sample_invertible(
    rng: random.Random, n: int, pool: Sequence[Fraction]
) -> RationalMatrix:
    for _ in range(64):
        m = _sample_matrix(rng, n, n, pool)
        if m.is_invertible():
            return m
    return RationalMatrix.identity(n)


def _sample_degree_map(
    rng: random.Random, space: GradedVectorSpace, degree: int, pool: Sequence[Fraction]
) -> GradedMap:
    blocks = {}
    for i in space.degrees():
        rows = space.dim(i + degree)
        if rows:
            blocks[i] = _sample_matrix(rng, rows, space.dim(i), pool)
    return GradedMap(space, space, degree, blocks)


def sample_representation_at(
    quiver: QuiverPresentation, cfg: SampleConfig, index: int
) -> Representation:
    """Deterministic sample for one index; the unit of parallel evaluation.

    Sphere: the z-map is drawn freely (no constraint to satisfy).  Torus:
    per degree, m is drawn invertible and n either as an invertible
    polynomial in m (commutation for free) or, on every third index, as a
    member of the diagonal-pair family; h is drawn freely in degree -1.
    """
    if quiver == sphere_quiver():
        rng = _rng_for(cfg, index)
        space = _sample_space(rng, cfg)
        f = _sample_degree_map(rng, space, -1, cfg.scalar_pool)
        return Representation(quiver, space, {"z": f})
    if quiver == torus_quiver():
        rng = _rng_for(cfg, index)
        space = _sample_space(rng, cfg)
        pool = cfg.scalar_pool
        nonzero = [x for x in pool if x != 0] or [Fraction(1)]
        alpha_blocks: Dict[int, RationalMatrix] = {}
        beta_blocks: Dict[int, RationalMatrix] = {}
        diagonal_family = index % 3 == 2
        for i in space.degrees():
            d = space.dim(i)
            if diagonal_family:
                a = _diagonal(rng, d, nonzero)
                b = _diagonal(rng, d, nonzero)
            else:
                a = _sample_invertible(rng, d, pool)
                b = None
                ident = RationalMatrix.identity(d)
                for _ in range(64):
                    c0, c1, c2 = (rng.choice(pool) for _ in range(3))
                    cand = ident.scale(c0) + a.scale(c1) + (a @ a).scale(c2)
                    if cand.is_invertible():
                        b = cand
                        break
                if b is None:
                    b = a
            alpha_blocks[i] = a
            beta_blocks[i] = b
        gamma = _sample_degree_map(rng, space, -1, pool)
        return Representation(
            quiver,
            space,
            {
                "m": GradedMap(space, space, 0, alpha_blocks),
                "n": GradedMap(space, space, 0, beta_blocks),
                "h": gamma,
            },
        )
    raise RepresentationError(
        "sampling supports only the builtin sphere and torus quivers"
    )


def _diagonal(rng: random.Random, n: int, nonzero: Sequence[Fraction]) -> RationalMatrix:
    entries = [
        rng.choice(nonzero) if i == j else 0 for i in range(n) for j in range(n)
    ]
    return RationalMatrix(n, n, entries)


def sample_representations(
    quiver: QuiverPresentation, cfg: SampleConfig
) -> Iterator[Representation]:
    """cfg.count valid representations, deterministic given cfg.seed."""
    for index in range(cfg.count):
        yield sample_representation_at(quiver, cfg, index)


# ---------------------------------------------------------------------------
# exhaustive enumeration

def enumerate_spaces(
    max_total_dim: int, degree_band: Tuple[int, int]
) -> Iterator[GradedVectorSpace]:
    """All graded spaces of total dimension 1..max over the degree band."""
    lo, hi = degree_band
    for total in range(1, max_total_dim + 1):
        for combo in itertools.combinations_with_replacement(range(lo, hi + 1), total):
            dims: Dict[int, int] = {}
            for d in combo:
                dims[d] = dims.get(d, 0) + 1
            yield GradedVectorSpace(dims)


def enumerate_matrices(
    rows: int, cols: int, pool: Tuple[Fraction, ...]
) -> Iterator[RationalMatrix]:
    for entries in itertools.product(pool, repeat=rows * cols):
        yield RationalMatrix(rows, cols, entries)


@lru_cache(maxsize=None)
def commuting_invertible_pairs(
    dim: int, pool: Tuple[Fraction, ...]
) -> Tuple[Tuple[RationalMatrix, RationalMatrix], ...]:
    invertible = [m for m in enumerate_matrices(dim, dim, pool) if m.is_invertible()]
    return tuple(
        (a, b) for a in invertible for b in invertible if a @ b == b @ a
    )


def _degree_map_slots(
    space: GradedVectorSpace, degree: int
) -> List[Tuple[int, int, int]]:
    return [
        (i, space.dim(i + degree), space.dim(i))
        for i in space.degrees()
        if space.dim(i + degree) > 0
    ]


def enumerate_sphere_representations(
    max_total_dim: int = 2,
    degree_band: Tuple[int, int] = (-2, 2),
    scalar_pool: Sequence[Fraction] = (-1, 0, 1),
) -> Iterator[Representation]:
    """Every sphere-quiver representation over the given finite ranges."""
    pool = tuple(Fraction(x) for x in scalar_pool)
    quiver = sphere_quiver()
    for space in enumerate_spaces(max_total_dim, degree_band):
        slots = _degree_map_slots(space, -1)
        for choice in itertools.product(
            *[enumerate_matrices(r, c, pool) for _, r, c in slots]
        ):
            blocks = {i: m for (i, _, _), m in zip(slots, choice)}
            yield Representation(
                quiver, space, {"z": GradedMap(space, space, -1, blocks)}
            )


def enumerate_torus_representations(
    max_total_dim: int = 2,
    degree_band: Tuple[int, int] = (-1, 1),
    scalar_pool: Sequence[Fraction] = (-1, 1, 2),
) -> Iterator[Representation]:
    """Every valid torus-quiver representation over the given finite ranges."""
    pool = tuple(Fraction(x) for x in scalar_pool)
    quiver = torus_quiver()
    for space in enumerate_spaces(max_total_dim, degree_band):
        degrees = space.degrees()
        pair_families = [commuting_invertible_pairs(space.dim(i), pool) for i in degrees]
        gamma_slots = _degree_map_slots(space, -1)
        for pairs in itertools.product(*pair_families):
            alpha = {i: p[0] for i, p in zip(degrees, pairs)}
            beta = {i: p[1] for i, p in zip(degrees, pairs)}
            for gamma_choice in itertools.product(
                *[enumerate_matrices(r, c, pool) for _, r, c in gamma_slots]
            ):
                gamma = {i: m for (i, _, _), m in zip(gamma_slots, gamma_choice)}
                yield Representation(
                    quiver,
                    space,
                    {
                        "m": GradedMap(space, space, 0, alpha),
                        "n": GradedMap(space, space, 0, beta),
                        "h": GradedMap(space, space, -1, gamma),
                    },
                )


# ---------------------------------------------------------------------------
# theorem checks

def _spread(space: GradedVectorSpace) -> int:
    degs = space.degrees()
    return max(degs) - min(degs)


def check_concentrated_lemma(cfg: SampleConfig) -> TheoremReport:
    """Spread-k spaces have cohomology at degrees -k and k+2: gap 2k+2 >= 4.

    Draws cfg.count sphere-quiver samples; those concentrated in a single
    degree are outside the hypothesis and are skipped, so samples_checked
    counts only the spread >= 1 ones.
    """
    violations: List[Dict[str, object]] = []
    checked = 0
    for index in range(cfg.count):
        rep = sample_representation_at(sphere_quiver(), cfg, index)
        k = _spread(rep.space)
        if k < 1:
            continue
        checked += 1
        hf = floer_cohomology(rep, rep)
        label = f"sample:{index}"
        if hf.dim(-k) == 0:
            violations.append(
                _violation(label, rep.space, f"cohomology vanishes at degree {-k}")
            )
        if hf.dim(k + 2) == 0:
            violations.append(
                _violation(label, rep.space, f"cohomology vanishes at degree {k + 2}")
            )
        support = hf.support()
        if support and max(support) - min(support) < 4:
            violations.append(
                _violation(label, rep.space, f"support width {max(support) - min(support)} < 4")
            )
    return TheoremReport("concentrated", checked, tuple(violations))


def _sphere_violations(
    rep: Representation, label: str
) -> List[Dict[str, object]]:
    hf = floer_cohomology(rep, rep)
    space = rep.space
    k = _spread(space)
    m = space.total_dim()
    support = hf.support()
    out: List[Dict[str, object]] = []
    if not support:
        out.append(_violation(label, space, "cohomology vanished entirely"))
        return out
    if min(support) >= 0 and max(support) <= 2:
        if k != 0:
            out.append(
                _violation(
                    label, space, f"support {support} inside [0,2] but degree spread {k} >= 1"
                )
            )
        expected = {0: m * m, 2: m * m}
        if hf.dims != expected:
            out.append(
                _violation(
                    label,
                    space,
                    f"concentrated case: cohomology {hf.dims} != {expected}",
                )
            )
        if hf.dim(0) == 1 and hf.dims != {0: 1, 2: 1}:
            out.append(
                _violation(
                    label,
                    space,
                    f"rank-one endomorphisms but cohomology {hf.dims} differs from the sphere's",
                )
            )
    else:
        if k == 0:
            out.append(
                _violation(label, space, f"one-degree space with support {support} leaving [0,2]")
            )
        elif min(support) != -k or max(support) != k + 2:
            out.append(
                _violation(
                    label,
                    space,
                    f"support {support} does not span [{-k}, {k + 2}] for spread {k}",
                )
            )
    return out


def check_sphere_theorem(
    cfg: SampleConfig,
    exhaustive_max_total_dim: int = 2,
    exhaustive_degree_band: Tuple[int, int] = (-2, 2),
    exhaustive_scalar_pool: Sequence[Fraction] = (-1, 0, 1),
) -> TheoremReport:
    """Dichotomy sweep: exhaustive small cases plus cfg.count random samples.

    Each representation must either have cohomology supported in [0,2]
    (then: one-degree space, squares in degrees 0 and 2, and rank one
    forces the sphere values) or have support reaching beyond [0,2] in the
    pattern the support-gap lemma dictates.
    """
    violations: List[Dict[str, object]] = []
    checked = 0
    for j, rep in enumerate(
        enumerate_sphere_representations(
            exhaustive_max_total_dim, exhaustive_degree_band, exhaustive_scalar_pool
        )
    ):
        violations.extend(_sphere_violations(rep, f"exhaustive:{j}"))
        checked += 1
    for index in range(cfg.count):
        rep = sample_representation_at(sphere_quiver(), cfg, index)
        violations.extend(_sphere_violations(rep, f"sample:{index}"))
        checked += 1
    return TheoremReport("sphere", checked, tuple(violations))


def check_torus_theorem(
    cfg: SampleConfig,
    exhaustive_max_total_dim: int = 2,
    exhaustive_degree_band: Tuple[int, int] = (-1, 1),
    exhaustive_scalar_pool: Sequence[Fraction] = (-1, 1, 2),
) -> TheoremReport:
    """Euler characteristic of end(r) vanishes for every valid torus rep.

    Exhaustive over small total dimension plus cfg.count random
    commuting-pair samples; each must give chi = 0, the characteristic of
    a genus-1 surface.
    """
    violations: List[Dict[str, object]] = []
    checked = 0

    def examine(rep: Representation, label: str) -> None:
        chi = euler_of_hom(rep, rep)
        if chi != 0:
            violations.append(
                _violation(label, rep.space, f"euler characteristic {chi} != 0")
            )
            return
        try:
            genus = genus_from_euler(chi)
        except ClassificationError as exc:
            violations.append(_violation(label, rep.space, str(exc)))
            return
        if genus != 1:
            violations.append(
                _violation(label, rep.space, f"genus {genus} != 1 at chi = {chi}")
            )

    for j, rep in enumerate(
        enumerate_torus_representations(
            exhaustive_max_total_dim, exhaustive_degree_band, exhaustive_scalar_pool
        )
    ):
        examine(rep, f"exhaustive:{j}")
        checked += 1
    for index in range(cfg.count):
        rep = sample_representation_at(torus_quiver(), cfg, index)
        examine(rep, f"sample:{index}")
        checked += 1
    return TheoremReport("torus", checked, tuple(violations))


_CHECKS = {
    "sphere": check_sphere_theorem,
    "torus": check_torus_theorem,
    "concentrated": check_concentrated_lemma,
}


def run_check(theorem: str, cfg: SampleConfig) -> TheoremReport:
    if theorem not in _CHECKS:
        raise FormatError(f"unknown theorem {theorem!r}")
    return _CHECKS[theorem](cfg)
