"""Exchange matrices, valued quivers, and seed mutation.

The cells of a frieze are Laurent polynomials in the cells of any one
double zig-zag.  This module supplies the exact Laurent arithmetic, the
skew-symmetrizable exchange matrices that drive mutation, and the
bipartite belt that walks a straight zig-zag around the whole pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .frieze import FriezeError, FriezeGrid, ZigZag, propagate_from_zigzag
from .scalars import RATIONAL, ScalarKind

__all__ = [
    "NonLaurentQuotient",
    "NotSkewSymmetrizable",
    "NotBipartite",
    "ZeroSubstitution",
    "LaurentPolynomial",
    "LaurentKind",
    "ExchangeMatrix",
    "ValuedQuiver",
    "Seed",
    "mutate_matrix",
    "quiver_of",
    "matrix_of",
    "c2_square_aw",
    "initial_seed",
    "mutate_seed",
    "belt_step",
    "formal_frieze",
    "zigzag_quiver",
    "evaluate_frieze",
]


class NonLaurentQuotient(ArithmeticError):
    """A division that had to be exact left a remainder."""


class NotSkewSymmetrizable(ValueError):
    """No positive integer diagonal makes D*B antisymmetric."""


class NotBipartite(FriezeError):
    """The exchange graph of the seed has an odd cycle."""


class ZeroSubstitution(FriezeError):
    """A cluster evaluation point contains or produces a zero value."""


class LaurentPolynomial:
    """Integer Laurent polynomial in variables x1, .., x{nvars}.

    ``terms`` maps exponent vectors to nonzero integer coefficients.
    Instances are immutable and hashable; arithmetic returns fresh
    objects.  True division is exact and raises NonLaurentQuotient when
    the quotient does not exist over the integers.
    """

    __slots__ = ("nvars", "terms", "_key")

    def __init__(self, nvars: int, terms: Union[Dict, Iterable] = ()):
        cleaned: Dict[Tuple[int, ...], int] = {}
        for exp, coeff in dict(terms).items():
            exp = tuple(exp)
            if len(exp) != nvars or not all(isinstance(e, int) for e in exp):
                raise ValueError(f"exponent {exp!r} does not fit {nvars} variables")
            if not isinstance(coeff, int):
                raise TypeError("coefficients must be integers")
            if coeff:
                cleaned[exp] = coeff
        self.nvars = nvars
        self.terms = cleaned
        self._key = (nvars, tuple(sorted(cleaned.items())))

    @classmethod
    def constant(cls, nvars: int, value: int) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "LaurentPolynomial":
        if not 0 <= index < nvars:
            raise IndexError(f"variable {index} out of range")
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1})

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable counts differ")
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(self.nvars, other)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        other = self._coerce(other) if not isinstance(other, LaurentPolynomial) else other
        if other is NotImplemented:
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __add__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return LaurentPolynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[Tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(exp, 0) + c1 * c2
                if v:
                    out[exp] = v
                else:
                    out.pop(exp, None)
        return LaurentPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPolynomial":
        if not isinstance(power, int):
            return NotImplemented
        if power < 0:
            return LaurentPolynomial.constant(self.nvars, 1) / self ** (-power)
        out = LaurentPolynomial.constant(self.nvars, 1)
        for _ in range(power):
            out = out * self
        return out

    def __truediv__(self, other) -> "LaurentPolynomial":
        """Exact division; the quotient must again have integer terms."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            raise ZeroDivisionError("Laurent division by zero")
        if not self.terms:
            return LaurentPolynomial(self.nvars)
        n = self.nvars
        smin = [min(e[i] for e in self.terms) for i in range(n)]
        omin = [min(e[i] for e in other.terms) for i in range(n)]
        # strip the monomial content; both operands become honest polynomials
        rem = {
            tuple(a - b for a, b in zip(e, smin)): c for e, c in self.terms.items()
        }
        div = {
            tuple(a - b for a, b in zip(e, omin)): c for e, c in other.terms.items()
        }
        lead = max(div)
        lc = div[lead]
        quot: Dict[Tuple[int, ...], int] = {}
        while rem:
            top = max(rem)
            step = tuple(a - b for a, b in zip(top, lead))
            if any(v < 0 for v in step):
                raise NonLaurentQuotient("quotient is not a Laurent polynomial")
            c, r = divmod(rem[top], lc)
            if r:
                raise NonLaurentQuotient("quotient is not a Laurent polynomial")
            quot[step] = c
            for e, dc in div.items():
                tgt = tuple(a + b for a, b in zip(step, e))
                v = rem.get(tgt, 0) - c * dc
                if v:
                    rem[tgt] = v
                else:
                    rem.pop(tgt, None)
        shift = [a - b for a, b in zip(smin, omin)]
        return LaurentPolynomial(
            n, {tuple(a + b for a, b in zip(e, shift)): c for e, c in quot.items()}
        )

    def is_positive(self) -> bool:
        """Nonzero with every coefficient positive."""
        return bool(self.terms) and all(c > 0 for c in self.terms.values())

    def evaluate(self, point: Sequence, kind: ScalarKind = RATIONAL):
        """Substitute kind scalars for the variables."""
        values = [kind.coerce(v) for v in point]
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        total = kind.zero()
        for exp, coeff in sorted(self.terms.items()):
            term = kind.from_int(coeff)
            for v, e in zip(values, exp):
                if e < 0 and kind.is_zero(v):
                    raise ZeroSubstitution("zero raised to a negative power")
                for _ in range(abs(e)):
                    term = term * v if e > 0 else term / v
            total = total + term
        return total

    @staticmethod
    def _monomial(exp: Tuple[int, ...]) -> str:
        parts = []
        for i, e in enumerate(exp):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        mins = [min(e[i] for e in self.terms) for i in range(self.nvars)]
        den = tuple(-min(m, 0) for m in mins)
        num = {tuple(a + b for a, b in zip(e, den)): c for e, c in self.terms.items()}
        chunks: List[str] = []
        for exp, coeff in sorted(num.items(), reverse=True):
            mono = self._monomial(exp)
            mag = abs(coeff)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if coeff > 0 else f" - {body}")
        text = "".join(chunks)
        if not any(den):
            return text
        dmono = self._monomial(den)
        if len(num) > 1:
            text = f"({text})"
        if "*" in dmono:
            dmono = f"({dmono})"
        return f"{text}/{dmono}"

    def __repr__(self) -> str:
        return f"<laurent {self}>"


@dataclass(frozen=True)
class LaurentKind:
    """Scalar kind whose elements are integer Laurent polynomials."""

    nvars: int

    @property
    def name(self) -> str:
        return f"laurent{self.nvars}"

    @property
    def exact(self) -> bool:
        return True

    def zero(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.nvars)

    def one(self) -> LaurentPolynomial:
        return LaurentPolynomial.constant(self.nvars, 1)

    def from_int(self, n: int) -> LaurentPolynomial:
        return LaurentPolynomial.constant(self.nvars, n)

    def coerce(self, value) -> LaurentPolynomial:
        if isinstance(value, LaurentPolynomial):
            if value.nvars != self.nvars:
                raise ValueError(f"expected {self.nvars} variables, got {value.nvars}")
            return value
        if isinstance(value, int):
            return self.from_int(value)
        raise TypeError(f"cannot treat {value!r} as a Laurent polynomial")

    def is_zero(self, value) -> bool:
        return not self.coerce(value).terms

    def eq(self, a, b) -> bool:
        return self.coerce(a) == self.coerce(b)


def _find_symmetrizer(rows: Tuple[Tuple[int, ...], ...]) -> Tuple[int, ...]:
    # constructive: weights propagate along the nonzero entries, one
    # component at a time, and every cycle must agree
    m = len(rows)
    for i in range(m):
        if rows[i][i]:
            raise NotSkewSymmetrizable(f"nonzero diagonal entry at {i}")
        for j in range(i + 1, m):
            b, c = rows[i][j], rows[j][i]
            if (b == 0) != (c == 0) or b * c > 0:
                raise NotSkewSymmetrizable(f"entries ({i},{j}) break the sign condition")
    d: List[Union[Fraction, None]] = [None] * m
    for root in range(m):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        component = [root]
        queue = [root]
        while queue:
            i = queue.pop()
            for j in range(m):
                if not rows[i][j]:
                    continue
                ratio = d[i] * Fraction(abs(rows[i][j]), abs(rows[j][i]))
                if d[j] is None:
                    d[j] = ratio
                    component.append(j)
                    queue.append(j)
                elif d[j] != ratio:
                    raise NotSkewSymmetrizable("inconsistent weights around a cycle")
        scale = lcm(*(d[i].denominator for i in component))
        values = [int(d[i] * scale) for i in component]
        g = gcd(*values)
        for i, v in zip(component, values):
            d[i] = v // g
    return tuple(d)


@dataclass(frozen=True)
class ExchangeMatrix:
    """Square integer matrix admitting a positive integer symmetrizer.

    The symmetrizer is computed on construction; matrices without one
    are rejected with NotSkewSymmetrizable.
    """

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(v for v in row) for row in self.rows)
        m = len(rows)
        for row in rows:
            if len(row) != m:
                raise ValueError("matrix must be square")
            for v in row:
                if not isinstance(v, int):
                    raise TypeError("entries must be integers")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_symmetrizer", _find_symmetrizer(rows))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def symmetrizer(self) -> Tuple[int, ...]:
        """Positive diagonal d with d[i]*b[i][j] == -d[j]*b[j][i]."""
        return self._symmetrizer

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def opposite(self) -> "ExchangeMatrix":
        return ExchangeMatrix(tuple(tuple(-v for v in row) for row in self.rows))

    def __str__(self) -> str:
        body = "\n".join(" ".join(f"{v:3d}" for v in row) for row in self.rows)
        return body


def mutate_matrix(matrix: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation at vertex k (0-based)."""
    r = matrix.rows
    m = matrix.m
    if not 0 <= k < m:
        raise IndexError(f"vertex {k} out of range")
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            if i == k or j == k:
                row.append(-r[i][j])
            else:
                row.append(
                    r[i][j]
                    + max(r[i][k], 0) * max(r[k][j], 0)
                    - max(-r[i][k], 0) * max(-r[k][j], 0)
                )
        rows.append(tuple(row))
    return ExchangeMatrix(tuple(rows))


Arrow = Tuple[int, int, Tuple[int, int]]


@dataclass(frozen=True)
class ValuedQuiver:
    """Quiver with a weight pair on every arrow.

    An arrow (tail, head, (p, q)) records matrix entries p = b[tail][head]
    and q = -b[head][tail], both positive.  A pair of vertices carries at
    most one arrow, so there are no 2-cycles.
    """

    m: int
    arrows: Tuple[Arrow, ...]

    def __post_init__(self):
        seen = set()
        norm = []
        for tail, head, (p, q) in self.arrows:
            if not (0 <= tail < self.m and 0 <= head < self.m) or tail == head:
                raise ValueError(f"bad arrow ({tail},{head})")
            if p <= 0 or q <= 0:
                raise ValueError("arrow weights must be positive")
            pair = frozenset((tail, head))
            if pair in seen:
                raise ValueError(f"second arrow between {tail} and {head}")
            seen.add(pair)
            norm.append((tail, head, (p, q)))
        object.__setattr__(self, "arrows", tuple(sorted(norm)))

    def mutate(self, k: int) -> "ValuedQuiver":
        """Arrow-level mutation: compose the paths through k, then
        reverse every arrow incident with k."""
        if not 0 <= k < self.m:
            raise IndexError(f"vertex {k} out of range")
        val: Dict[Tuple[int, int], int] = {}
        for tail, head, (p, q) in self.arrows:
            val[(tail, head)] = p
            val[(head, tail)] = -q
        new = dict(val)
        into = [(t, p, q) for t, h, (p, q) in self.arrows if h == k]
        outof = [(h, p, q) for t, h, (p, q) in self.arrows if t == k]
        for i, a, b in into:
            for j, c, d in outof:
                new[(i, j)] = new.get((i, j), 0) + a * c
                new[(j, i)] = new.get((j, i), 0) - b * d
        for tail, head, _ in self.arrows:
            if k in (tail, head):
                new[(tail, head)] = -val[(tail, head)]
                new[(head, tail)] = -val[(head, tail)]
        arrows = tuple(
            (i, j, (v, -new[(j, i)])) for (i, j), v in sorted(new.items()) if v > 0
        )
        return ValuedQuiver(self.m, arrows)


def quiver_of(matrix: Union[ExchangeMatrix, Sequence[Sequence[int]]]) -> ValuedQuiver:
    """The valued quiver of a skew-symmetrizable matrix."""
    if not isinstance(matrix, ExchangeMatrix):
        matrix = ExchangeMatrix(tuple(tuple(row) for row in matrix))
    arrows = []
    for i in range(matrix.m):
        for j in range(matrix.m):
            if matrix.rows[i][j] > 0:
                arrows.append((i, j, (matrix.rows[i][j], -matrix.rows[j][i])))
    return ValuedQuiver(matrix.m, tuple(arrows))


def matrix_of(quiver: ValuedQuiver) -> ExchangeMatrix:
    """Inverse of quiver_of."""
    rows = [[0] * quiver.m for _ in range(quiver.m)]
    for tail, head, (p, q) in quiver.arrows:
        rows[tail][head] = p
        rows[head][tail] = -q
    return ExchangeMatrix(tuple(tuple(row) for row in rows))


def c2_square_aw(width: int) -> ExchangeMatrix:
    """Exchange matrix of a straight double zig-zag.

    Vertices 0..width-1 are the white cells read top to bottom and
    vertices width..2*width-1 the black cells.  Arrow directions
    alternate down each chain; every white-black pair in one row is
    joined by a weight (1,2) arrow.
    """
    if width < 1:
        raise ValueError("width must be positive")
    w = width
    g = [[0] * (2 * w) for _ in range(2 * w)]
    for i in range(w - 1):
        g[i][i + 1] = (-1) ** (i + 1)
        g[i + 1][i] = (-1) ** i
        g[w + i][w + i + 1] = (-1) ** i
        g[w + i + 1][w + i] = (-1) ** (i + 1)
    for i in range(w):
        g[i][w + i] = (-1) ** i
        g[w + i][i] = 2 * (-1) ** (i + 1)
    return ExchangeMatrix(tuple(tuple(row) for row in g))


@dataclass(frozen=True)
class Seed:
    """An ordered cluster of Laurent polynomials with its matrix."""

    cluster: Tuple[LaurentPolynomial, ...]
    matrix: ExchangeMatrix

    def __post_init__(self):
        cluster = tuple(self.cluster)
        object.__setattr__(self, "cluster", cluster)
        if len(cluster) != self.matrix.m:
            raise ValueError("cluster size does not match the matrix")
        counts = {u.nvars for u in cluster}
        if len(counts) > 1:
            raise ValueError("cluster mixes variable counts")


def initial_seed(width: int) -> Seed:
    """The cells of a straight zig-zag as their own variables."""
    nvars = 2 * width
    gens = tuple(LaurentPolynomial.variable(nvars, i) for i in range(nvars))
    return Seed(gens, c2_square_aw(width))


def mutate_seed(seed: Seed, k: int) -> Seed:
    """Exchange the k-th cluster variable and mutate the matrix.

    The new variable is (M+ + M-)/u_k with M+- the monomials read off
    column k; the division must be exact, anything else is a bug in the
    caller's seed and surfaces as NonLaurentQuotient.
    """
    matrix = seed.matrix
    if not 0 <= k < matrix.m:
        raise IndexError(f"vertex {k} out of range")
    nvars = seed.cluster[0].nvars
    pos = LaurentPolynomial.constant(nvars, 1)
    neg = LaurentPolynomial.constant(nvars, 1)
    for i, u in enumerate(seed.cluster):
        e = matrix.rows[i][k]
        if e > 0:
            pos = pos * u**e
        elif e < 0:
            neg = neg * u ** (-e)
    new = (pos + neg) / seed.cluster[k]
    cluster = seed.cluster[:k] + (new,) + seed.cluster[k + 1 :]
    return Seed(cluster, mutate_matrix(matrix, k))


def _bipartition(matrix: ExchangeMatrix) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    m = matrix.m
    colour: List[Union[int, None]] = [None] * m
    for root in range(m):
        if colour[root] is not None:
            continue
        colour[root] = 0
        queue = [root]
        while queue:
            i = queue.pop()
            for j in range(m):
                if not (matrix.rows[i][j] or matrix.rows[j][i]):
                    continue
                if colour[j] is None:
                    colour[j] = 1 - colour[i]
                    queue.append(j)
                elif colour[j] == colour[i]:
                    raise NotBipartite("seed quiver has an odd cycle")
    plus = tuple(i for i in range(m) if colour[i] == 0)
    minus = tuple(i for i in range(m) if colour[i] == 1)
    return plus, minus


def belt_step(s: Seed, sign: int) -> Seed:
    """Mutate every vertex of one colour class of the seed's quiver.

    The class containing vertex 0 is the plus class.  Vertices in one
    class are never joined by an arrow, so the order does not matter.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    plus, minus = _bipartition(s.matrix)
    for k in plus if sign == 1 else minus:
        s = mutate_seed(s, k)
    return s


def formal_frieze(width: int) -> FriezeGrid:
    """The frieze whose cells are Laurent polynomials in a straight
    zig-zag's cells, variables ordered as in initial_seed."""
    nvars = 2 * width
    gens = [LaurentPolynomial.variable(nvars, i) for i in range(nvars)]
    return propagate_from_zigzag(gens, width, LaurentKind(nvars))


def zigzag_quiver(shape: Union[ZigZag, Sequence[int]]) -> ValuedQuiver:
    """Valued quiver attached to a double zig-zag shape.

    Accepts a ZigZag or its tuple of west columns.  Straightening the
    shape westwards exchanges one zig-zag cell per step, which mutates
    the quiver at that cell's vertex; replaying the recorded mutations
    from the straight quiver yields the answer.
    """
    if isinstance(shape, ZigZag):
        cols = list(shape.shape)
    else:
        cols = [int(c) for c in shape]
    w = len(cols)
    if w < 1:
        raise ValueError("empty shape")
    for o in range(1, w):
        if abs(cols[o] - cols[o - 1]) > 1:
            raise ValueError(f"rows {o - 1} and {o} are not linked")
    target = min(cols)
    moves = []
    while max(cols) > target:
        col = max(cols)
        o = cols.index(col)
        # the west step vacates the east cell at column col + 1
        east_is_white = (col + 1 - o) % 2 != 0
        moves.append(o if east_is_white else w + o)
        cols[o] = col - 1
    base = c2_square_aw(w)
    if target % 2 == 0:
        base = base.opposite()
    for k in reversed(moves):
        base = mutate_matrix(base, k)
    return quiver_of(base)


def evaluate_frieze(point: Sequence, path: Sequence[int] = (), kind: ScalarKind = RATIONAL) -> FriezeGrid:
    """Frieze through given cell values at a mutated seed.

    `point` lists the 2w cluster values at the seed reached from the
    straight zig-zag by mutating along `path` (vertices, 0-based).  The
    values are walked back to the straight cluster and propagated.
    Positive points give positive friezes for any path.
    """
    values = [kind.coerce(z) for z in point]
    if len(values) < 2 or len(values) % 2:
        raise ValueError("need 2*width values")
    if any(kind.is_zero(v) for v in values):
        raise ZeroSubstitution("cluster values must be nonzero")
    width = len(values) // 2
    mats = [c2_square_aw(width)]
    for k in path:
        mats.append(mutate_matrix(mats[-1], k))
    for t in range(len(path) - 1, -1, -1):
        k = path[t]
        rows = mats[t + 1].rows
        pos = kind.one()
        neg = kind.one()
        for i, v in enumerate(values):
            e = rows[i][k]
            for _ in range(abs(e)):
                if e > 0:
                    pos = pos * v
                else:
                    neg = neg * v
        new = (pos + neg) / values[k]
        if kind.is_zero(new):
            raise ZeroSubstitution(f"walking back through vertex {k} produced zero")
        values[k] = new
    return propagate_from_zigzag(values, width, kind)
