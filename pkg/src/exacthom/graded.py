"""Integer-graded vector spaces and graded linear maps over the rationals.

A graded vector space is a finite family of finite-dimensional rational
vector spaces indexed by integers.  Only the dimensions are tracked; maps
carry explicit matrices per degree.  The grading is cohomological: a map
of degree d sends degree i to degree i+d, and the shift V[s] is defined by
V[s]^i = V^{i+s}.
"""

from __future__ import annotations

from typing import Dict, Iterator, Mapping, Tuple

from .errors import ShapeError
from .rational import RationalMatrix


class GradedVectorSpace:
    """Finite-dimensional integer-graded vector space, dimensions only."""

    __slots__ = ("_dims",)

    def __init__(self, dims: Mapping[int, int]):
        clean: Dict[int, int] = {}
        for k, v in dims.items():
            k, v = int(k), int(v)
            if v < 0:
                raise ShapeError(f"negative dimension {v} in degree {k}")
            if v > 0:
                clean[k] = v
        self._dims = dict(sorted(clean.items()))

    @property
    def dims(self) -> Dict[int, int]:
        """Degree to dimension, zero entries omitted, ascending degree."""
        return dict(self._dims)

    def dim(self, n: int) -> int:
        return self._dims.get(n, 0)

    def degrees(self) -> Tuple[int, ...]:
        return tuple(self._dims)

    def total_dim(self) -> int:
        return sum(self._dims.values())

    def is_zero(self) -> bool:
        return not self._dims

    def euler(self) -> int:
        """Alternating sum of dimensions."""
        return sum((-1 if n % 2 else 1) * d for n, d in self._dims.items())

    def shift(self, s: int) -> "GradedVectorSpace":
        """V[s] with V[s]^i = V^{i+s}."""
        return GradedVectorSpace({k - s: d for k, d in self._dims.items()})

    def direct_sum(self, other: "GradedVectorSpace") -> "GradedVectorSpace":
        out = dict(self._dims)
        for k, d in other._dims.items():
            out[k] = out.get(k, 0) + d
        return GradedVectorSpace(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedVectorSpace):
            return NotImplemented
        return self._dims == other._dims

    def __hash__(self) -> int:
        return hash(tuple(self._dims.items()))

    def __repr__(self) -> str:
        return f"GradedVectorSpace({self._dims})"

    def __iter__(self) -> Iterator[int]:
        return iter(self._dims)


class GradedMap:
    """Degree-d linear map between graded vector spaces.

    Stored as one matrix per source degree i, of shape
    target.dim(i+d) x source.dim(i).  Degrees where either side is zero
    carry no block; every other degree always has one (a zero matrix if
    none was supplied), so equality is plain field comparison.
    """

    __slots__ = ("source", "target", "degree", "_blocks")

    def __init__(
        self,
        source: GradedVectorSpace,
        target: GradedVectorSpace,
        degree: int,
        blocks: Mapping[int, RationalMatrix],
    ):
        self.source = source
        self.target = target
        self.degree = int(degree)
        canon: Dict[int, RationalMatrix] = {}
        for i in source.degrees():
            rows = target.dim(i + self.degree)
            cols = source.dim(i)
            if rows == 0:
                continue
            blk = blocks.get(i)
            if blk is None:
                blk = RationalMatrix.zero(rows, cols)
            elif blk.rows != rows or blk.cols != cols:
                raise ShapeError(
                    f"block at degree {i} must be {rows}x{cols}, got {blk.rows}x{blk.cols}"
                )
            canon[i] = blk
        for i, b in blocks.items():
            i = int(i)
            if i in canon:
                continue
            want_r = target.dim(i + self.degree)
            want_c = source.dim(i)
            if b.rows != want_r or b.cols != want_c:
                raise ShapeError(
                    f"block at degree {i} must be {want_r}x{want_c}, "
                    f"got {b.rows}x{b.cols}"
                )
        self._blocks = canon

    @classmethod
    def zero(
        cls, source: GradedVectorSpace, target: GradedVectorSpace, degree: int
    ) -> "GradedMap":
        return cls(source, target, degree, {})

    @classmethod
    def identity(cls, space: GradedVectorSpace) -> "GradedMap":
        return cls(
            space,
            space,
            0,
            {i: RationalMatrix.identity(space.dim(i)) for i in space.degrees()},
        )

    def block(self, i: int) -> RationalMatrix:
        """Matrix in source degree i; zero-shaped blocks are materialized."""
        blk = self._blocks.get(i)
        if blk is not None:
            return blk
        return RationalMatrix.zero(self.target.dim(i + self.degree), self.source.dim(i))

    def blocks(self) -> Dict[int, RationalMatrix]:
        return dict(self._blocks)

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self._blocks.values())

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        """Composition self after other."""
        if other.target != self.source:
            raise ShapeError("composition needs matching middle space")
        d = self.degree + other.degree
        out = {
            i: self.block(i + other.degree) @ other.block(i)
            for i in other.source.degrees()
        }
        return GradedMap(other.source, self.target, d, out)

    def __add__(self, other: "GradedMap") -> "GradedMap":
        if (
            self.source != other.source
            or self.target != other.target
            or self.degree != other.degree
        ):
            raise ShapeError("can only add maps with identical type and degree")
        out = {i: self.block(i) + other.block(i) for i in self.source.degrees()}
        return GradedMap(self.source, self.target, self.degree, out)

    def __neg__(self) -> "GradedMap":
        return self.scale(-1)

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        return self + (-other)

    def scale(self, c) -> "GradedMap":
        out = {i: b.scale(c) for i, b in self._blocks.items()}
        return GradedMap(self.source, self.target, self.degree, out)

    def __rmul__(self, c) -> "GradedMap":
        return self.scale(c)

    def shift(self, s: int) -> "GradedMap":
        """Same matrices reindexed between shifted spaces; no sign."""
        out = {i - s: b for i, b in self._blocks.items()}
        return GradedMap(self.source.shift(s), self.target.shift(s), self.degree, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.degree == other.degree
            and self._blocks == other._blocks
        )

    def __hash__(self) -> int:
        return hash(
            (self.source, self.target, self.degree, tuple(sorted(self._blocks.items(), key=lambda kv: kv[0])))
        )

    def __repr__(self) -> str:
        return (
            f"GradedMap(degree={self.degree}, "
            f"blocks={{{', '.join(f'{i}: {b.rows}x{b.cols}' for i, b in self._blocks.items())}}})"
        )


def shift_space(v: GradedVectorSpace, s: int) -> GradedVectorSpace:
    return v.shift(s)


def direct_sum_space(v: GradedVectorSpace, w: GradedVectorSpace) -> GradedVectorSpace:
    return v.direct_sum(w)


def dual_space(v: GradedVectorSpace) -> GradedVectorSpace:
    """Dual graded space: dimension at degree d equals dim of v at -d."""
    return GradedVectorSpace({-k: d for k, d in v.dims.items()})


def compose(g: GradedMap, f: GradedMap) -> GradedMap:
    """g after f; degrees add."""
    return g @ f


def scale_and_add(a, f: GradedMap, b, g: GradedMap) -> GradedMap:
    """Blockwise a*f + b*g for maps of identical type and degree."""
    return f.scale(a) + g.scale(b)


def hom_space(v: GradedVectorSpace, w: GradedVectorSpace) -> GradedVectorSpace:
    """Graded space of linear maps v -> w.

    Degree-d component collects the blocks V^i -> W^{i+d}, so its
    dimension is the sum over i of dim V^i * dim W^{i+d}.
    """
    dims: Dict[int, int] = {}
    for i in v.degrees():
        for j in w.degrees():
            d = j - i
            dims[d] = dims.get(d, 0) + v.dim(i) * w.dim(j)
    return GradedVectorSpace(dims)


def hom_block_layout(
    v: GradedVectorSpace, w: GradedVectorSpace, d: int
) -> Tuple[Tuple[int, int, int], ...]:
    """Basis order for the degree-d component of hom_space(v, w).

    Triples (i, r, c): source degree ascending, then matrix entries
    row-major.  Everything that converts between maps and coordinate
    vectors must use this one ordering.
    """
    out = []
    for i in v.degrees():
        rows = w.dim(i + d)
        cols = v.dim(i)
        for r in range(rows):
            for c in range(cols):
                out.append((i, r, c))
    return tuple(out)


def hom_basis(
    v: GradedVectorSpace, w: GradedVectorSpace, d: int
) -> Tuple[GradedMap, ...]:
    """Elementary maps realizing hom_block_layout(v, w, d)."""
    maps = []
    for i, r, c in hom_block_layout(v, w, d):
        rows = w.dim(i + d)
        cols = v.dim(i)
        m = RationalMatrix(
            rows, cols, [1 if (a, b) == (r, c) else 0 for a in range(rows) for b in range(cols)]
        )
        maps.append(GradedMap(v, w, d, {i: m}))
    return tuple(maps)


def hom_coordinates(f: GradedMap) -> Tuple:
    """Coordinates of f in the hom_block_layout basis of its component."""
    return tuple(
        f.block(i)[r, c] for i, r, c in hom_block_layout(f.source, f.target, f.degree)
    )
