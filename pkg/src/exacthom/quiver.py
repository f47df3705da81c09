"""One-object dg categories presented by quivers, and their representations.

A presentation lists loop generators with degrees, an invertibility flag,
and the differential of each generator as a formal integer combination of
words of length at most 2 (all the built-in categories need).  A
representation assigns a graded vector space with zero differential and
one graded map per generator; validity means the degree, relation, and
invertibility constraints all hold.

The morphism complex of two representations is one unshifted copy of the
graded hom space plus one copy shifted by |x|-1 per generator x.  Its
differential sends (t0, t1, ..., tn) to (0, s1, ..., sn) with
s_i = g_i t0 - (-1)^{|t0||x_i|} t0 f_i, and is only available when every
generator's differential vanishes formally; the first component of the
image being zero forces d^2 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple

from .complexes import CochainComplex, CohomologyResult
from .errors import FormatError, RepresentationError, UnsupportedDifferentialError
from .graded import (
    GradedMap,
    GradedVectorSpace,
    hom_basis,
    hom_coordinates,
    hom_space,
)
from .rational import RationalMatrix

Word = Tuple[str, ...]
Term = Tuple[int, Word]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    invertible: bool = False


@dataclass(frozen=True)
class QuiverPresentation:
    """Loop generators and their formal differentials.

    relations is a tuple of (generator name, terms); terms is a tuple of
    (integer coefficient, word) with words of length 1 or 2.  Generators
    without a listed relation have differential 0.
    """

    generators: Tuple[Generator, ...]
    relations: Tuple[Tuple[str, Tuple[Term, ...]], ...] = ()

    def __post_init__(self):
        gens = tuple(
            g if isinstance(g, Generator) else Generator(str(g[0]), int(g[1]), bool(g[2]))
            for g in self.generators
        )
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise FormatError("generator names must be unique")
        degree_of = {g.name: g.degree for g in gens}
        rels = []
        seen = set()
        for name, terms in self.relations:
            name = str(name)
            if name not in degree_of:
                raise FormatError(f"relation for unknown generator {name!r}")
            if name in seen:
                raise FormatError(f"duplicate relation for generator {name!r}")
            seen.add(name)
            clean: list = []
            for coeff, word in terms:
                coeff = int(coeff)
                if coeff == 0:
                    continue
                word = tuple(str(x) for x in word)
                if not 1 <= len(word) <= 2:
                    raise FormatError("relation words must have length 1 or 2")
                for x in word:
                    if x not in degree_of:
                        raise FormatError(f"relation word uses unknown generator {x!r}")
                if sum(degree_of[x] for x in word) != degree_of[name] + 1:
                    raise FormatError(
                        f"relation term for {name!r} must have degree {degree_of[name] + 1}"
                    )
                clean.append((coeff, word))
            rels.append((name, tuple(clean)))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", tuple(rels))

    def generator(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise FormatError(f"unknown generator {name!r}")

    def differential_of(self, name: str) -> Tuple[Term, ...]:
        self.generator(name)
        for rel_name, terms in self.relations:
            if rel_name == name:
                return terms
        return ()

    def all_differentials_vanish(self) -> bool:
        """True iff dx = 0 formally for every generator."""
        return all(not self.differential_of(g.name) for g in self.generators)


@lru_cache(maxsize=None)
def sphere_quiver() -> QuiverPresentation:
    """One generator z of degree -1 with dz = 0."""
    return QuiverPresentation((Generator("z", -1, False),), (("z", ()),))


@lru_cache(maxsize=None)
def torus_quiver() -> QuiverPresentation:
    """Invertible m, n of degree 0 and h of degree -1 with dh = mn - nm."""
    return QuiverPresentation(
        (Generator("m", 0, True), Generator("n", 0, True), Generator("h", -1, False)),
        (("m", ()), ("n", ()), ("h", ((1, ("m", "n")), (-1, ("n", "m"))))),
    )


def builtin_quiver(name: str) -> QuiverPresentation:
    if name == "sphere":
        return sphere_quiver()
    if name == "torus":
        return torus_quiver()
    raise FormatError(f"unknown builtin quiver {name!r}")


@dataclass(frozen=True, eq=True)
class Representation:
    """Graded vector space plus one graded endomorphism per generator.

    Generators missing from maps get the zero map of their degree.
    Structural shape is enforced here; the degree, relation, and
    invertibility constraints are checked by validate_representation.
    """

    quiver: QuiverPresentation
    space: GradedVectorSpace
    maps: Mapping[str, GradedMap] = field(default_factory=dict)

    def __post_init__(self):
        known = {g.name for g in self.quiver.generators}
        out: Dict[str, GradedMap] = {}
        for name, m in self.maps.items():
            if name not in known:
                raise RepresentationError(f"map for unknown generator {name!r}")
            if m.source != self.space or m.target != self.space:
                raise RepresentationError(
                    f"map for {name!r} must be an endomorphism of the representation space"
                )
            out[name] = m
        for g in self.quiver.generators:
            if g.name not in out:
                out[g.name] = GradedMap.zero(self.space, self.space, g.degree)
        object.__setattr__(self, "maps", out)

    def map_of(self, name: str) -> GradedMap:
        return self.maps[name]

    def evaluate_word(self, word: Word) -> GradedMap:
        m = self.maps[word[0]]
        for name in word[1:]:
            m = m @ self.maps[name]
        return m

    def first_violation(self) -> Optional[str]:
        """Name of the first failed constraint, or None if valid."""
        for g in self.quiver.generators:
            if self.maps[g.name].degree != g.degree:
                return f"degree:{g.name}"
        for name, terms in self.quiver.relations:
            if not terms:
                continue
            acc = None
            for coeff, word in terms:
                m = self.evaluate_word(word).scale(coeff)
                acc = m if acc is None else acc + m
            if acc is not None and not acc.is_zero():
                return f"relation:{name}"
        for g in self.quiver.generators:
            if not g.invertible:
                continue
            rho = self.maps[g.name]
            for i in self.space.degrees():
                if not rho.block(i).is_invertible():
                    return f"invertibility:{g.name}"
        return None


def validate_representation(r: Representation) -> bool:
    return r.first_violation() is None


def _require_valid_pair(v: Representation, w: Representation) -> None:
    if v.quiver != w.quiver:
        raise RepresentationError("representations live over different quivers")
    for r in (v, w):
        bad = r.first_violation()
        if bad is not None:
            raise RepresentationError(f"invalid representation: constraint {bad}")


@dataclass(frozen=True)
class HomComplexResult:
    """Morphism complex between two representations.

    summand_layout lists the summands in order: the unshifted hom space
    labelled "id", then one entry (generator name, |x|-1) per generator.
    When differential_defined is false the complex carries a zero
    differential placeholder and only its graded dimensions are meaningful.
    """

    complex: CochainComplex
    summand_layout: Tuple[Tuple[str, int], ...]
    differential_defined: bool


def _hom_summands(
    v: Representation, w: Representation
) -> Tuple[GradedVectorSpace, Tuple[Tuple[str, int], ...], GradedVectorSpace]:
    u = hom_space(v.space, w.space)
    layout = [("id", 0)]
    total = u
    for g in v.quiver.generators:
        shift = g.degree - 1
        layout.append((g.name, shift))
        total = total.direct_sum(u.shift(shift))
    return u, tuple(layout), total


def hom_complex(v: Representation, w: Representation) -> HomComplexResult:
    """Morphism complex hom(v, w) with its differential when available.

    The graded dimensions are always computed.  The differential exists
    iff every generator has formally vanishing differential (true for the
    sphere presentation, false for the torus one).
    """
    _require_valid_pair(v, w)
    quiver = v.quiver
    u, layout, total = _hom_summands(v, w)
    defined = quiver.all_differentials_vanish()
    if not defined:
        return HomComplexResult(CochainComplex.zero_differential(total), layout, False)

    shifts = [s for _, s in layout]
    blocks: Dict[int, RationalMatrix] = {}
    for p in total.degrees():
        rows_dim = total.dim(p + 1)
        cols_dim = total.dim(p)
        if rows_dim == 0:
            continue
        row_offsets = [0]
        for s in shifts:
            row_offsets.append(row_offsets[-1] + u.dim(p + 1 + s))
        grid = [[0] * cols_dim for _ in range(rows_dim)]
        for col, t0 in enumerate(hom_basis(v.space, w.space, p)):
            for gi, g in enumerate(quiver.generators):
                sign = -1 if (p * g.degree) % 2 else 1
                s_map = (w.maps[g.name] @ t0) - (t0 @ v.maps[g.name]).scale(sign)
                off = row_offsets[gi + 1]
                for k, val in enumerate(hom_coordinates(s_map)):
                    if val:
                        grid[off + k][col] = val
        blocks[p] = RationalMatrix(rows_dim, cols_dim, [x for row in grid for x in row])
    diff = GradedMap(total, total, 1, blocks)
    return HomComplexResult(CochainComplex(total, diff), layout, True)


def floer_cohomology(v: Representation, w: Representation) -> CohomologyResult:
    """Cohomology of the morphism complex; needs the differential."""
    result = hom_complex(v, w)
    if not result.differential_defined:
        raise UnsupportedDifferentialError(
            "morphism-complex differential is not defined for this quiver presentation"
        )
    return result.complex.cohomology()


def euler_of_hom(v: Representation, w: Representation) -> int:
    """Euler characteristic of the morphism complex, from dimensions alone."""
    _require_valid_pair(v, w)
    _, _, total = _hom_summands(v, w)
    return total.euler()


def zero_section_representation() -> Representation:
    """Sphere-quiver representation on one generator in degree 0; z acts by 0."""
    space = GradedVectorSpace({0: 1})
    return Representation(sphere_quiver(), space, {})


def torus_trivial_representation() -> Representation:
    """Torus-quiver representation on one generator in degree 0; m = n = 1, h = 0."""
    space = GradedVectorSpace({0: 1})
    one = GradedMap(space, space, 0, {0: RationalMatrix.identity(1)})
    return Representation(torus_quiver(), space, {"m": one, "n": one})
