"""The set-partition diagram basis of the partition algebra.

A degree-r diagram is a set partition of {1, .., r, 1', .., r'}.  Points are
encoded as ints: k > 0 is the top dot k, -k is the bottom dot k'.  The point
order is 1 < 1' < 2 < 2' < ...; blocks are stored sorted in that order and
listed by least element, so equal partitions compare byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache

from .scalars import Scalar, field, one


def point_key(pt: int):
    return (abs(pt), 0 if pt > 0 else 1)


def canonical_blocks(blocks) -> tuple:
    bb = [tuple(sorted(b, key=point_key)) for b in blocks]
    bb.sort(key=lambda b: point_key(b[0]))
    return tuple(bb)


@dataclass(frozen=True)
class Diagram:
    """A partition diagram in canonical normal form."""

    degree: int
    blocks: tuple

    @staticmethod
    def from_blocks(degree: int, blocks) -> "Diagram":
        blocks = canonical_blocks(blocks)
        seen = [pt for b in blocks for pt in b]
        expected = sorted(
            [k for k in range(1, degree + 1)] + [-k for k in range(1, degree + 1)],
            key=point_key,
        )
        if sorted(seen, key=point_key) != expected:
            raise ValueError("blocks do not partition the 2r points")
        return Diagram(degree, blocks)

    def propagating_number(self) -> int:
        return sum(
            1 for b in self.blocks if any(p > 0 for p in b) and any(p < 0 for p in b)
        )

    def flip(self) -> "Diagram":
        return Diagram(self.degree, canonical_blocks(tuple(-p for p in b) for b in self.blocks))

    def top_bottom_joined(self, i: int) -> bool:
        """True if top dot i and bottom dot i' lie in one block."""
        for b in self.blocks:
            if i in b:
                return -i in b
        return False

    def __str__(self):
        return format_diagram(self)


@cache
def identity_diagram(r: int) -> Diagram:
    return Diagram.from_blocks(r, [(i, -i) for i in range(1, r + 1)])


def generator_s(i: int, r: int) -> Diagram:
    """The transposition diagram s_i, 1 <= i <= r-1."""
    if not 1 <= i <= r - 1:
        raise ValueError(f"s_{i} needs 1 <= i <= {r - 1}")
    blocks = [(k, -k) for k in range(1, r + 1) if k not in (i, i + 1)]
    blocks += [(i, -(i + 1)), (i + 1, -i)]
    return Diagram.from_blocks(r, blocks)


def generator_a(i: int, r: int) -> Diagram:
    """The diagram A_i with column i cut, 1 <= i <= r."""
    if not 1 <= i <= r:
        raise ValueError(f"A_{i} needs 1 <= i <= {r}")
    blocks = [(k, -k) for k in range(1, r + 1) if k != i]
    blocks += [(i,), (-i,)]
    return Diagram.from_blocks(r, blocks)


def generator_aa(i: int, r: int) -> Diagram:
    """The diagram A_{i,i+1} merging columns i and i+1, 1 <= i <= r-1."""
    if not 1 <= i <= r - 1:
        raise ValueError(f"A_{{{i},{i + 1}}} needs 1 <= i <= {r - 1}")
    blocks = [(k, -k) for k in range(1, r + 1) if k not in (i, i + 1)]
    blocks += [(i, i + 1, -i, -(i + 1))]
    return Diagram.from_blocks(r, blocks)


def generator_e(l: int, r: int) -> Diagram:
    """The idempotent diagram e_l joining the first r-l columns, 1 <= l <= r."""
    if not 1 <= l <= r:
        raise ValueError(f"e_{l} needs 1 <= l <= {r}")
    blocks = [(k, -k) for k in range(r - l + 1, r + 1)]
    if l < r:
        blocks.append(tuple(range(1, r - l + 1)) + tuple(-k for k in range(1, r - l + 1)))
    return Diagram.from_blocks(r, blocks)


def concatenate(a: Diagram, b: Diagram) -> tuple[Diagram, int]:
    """The product diagram a.b and the number of deleted middle components.

    a is written on top of b; a's bottom row is identified with b's top row
    and interior components disconnected from the outer rows are deleted,
    each contributing one power of the parameter.
    """
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    r = a.degree
    # points 0..r-1: result top; r..2r-1: middle; 2r..3r-1: result bottom
    parent = list(range(3 * r))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    def a_pt(p):
        return p - 1 if p > 0 else r + (-p) - 1

    def b_pt(p):
        return r + p - 1 if p > 0 else 2 * r + (-p) - 1

    for blocks, enc in ((a.blocks, a_pt), (b.blocks, b_pt)):
        for blk in blocks:
            first = enc(blk[0])
            for p in blk[1:]:
                union(first, enc(p))

    comps: dict[int, list[int]] = {}
    for x in range(3 * r):
        comps.setdefault(find(x), []).append(x)

    blocks = []
    deleted = 0
    for members in comps.values():
        outer = []
        for x in members:
            if x < r:
                outer.append(x + 1)
            elif x >= 2 * r:
                outer.append(-(x - 2 * r + 1))
        if outer:
            blocks.append(tuple(outer))
        else:
            deleted += 1
    return Diagram.from_blocks(r, blocks), deleted


def all_diagrams(r: int):
    """All degree-r diagrams (there are Bell(2r) of them)."""
    points = [k for k in range(1, r + 1)] + [-k for k in range(1, r + 1)]
    for blocks in set_partitions(points):
        yield Diagram.from_blocks(r, blocks)


def set_partitions(items):
    """All set partitions of a list, as lists of tuples."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [(first,)] + part
        for i in range(len(part)):
            yield part[:i] + [(first,) + part[i]] + part[i + 1 :]


@cache
def bell_number(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


@cache
def stirling2(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def format_diagram(d: Diagram) -> str:
    def pt(p):
        return str(p) if p > 0 else f"{-p}'"

    return ",".join("{" + ",".join(pt(p) for p in b) + "}" for b in d.blocks)


def parse_diagram(text: str, degree: int | None = None) -> Diagram:
    """Parse the text form "{1,3,1'},{2},{2',3'}" back into a diagram."""
    text = text.strip()
    if not text:
        raise ValueError("empty diagram text")
    blocks = []
    maxdot = 0
    for chunk in text.replace("},", "}|").split("|"):
        chunk = chunk.strip()
        if not (chunk.startswith("{") and chunk.endswith("}")):
            raise ValueError(f"malformed block: {chunk!r}")
        pts = []
        for tok in chunk[1:-1].split(","):
            tok = tok.strip()
            if not tok:
                raise ValueError("empty point")
            if tok.endswith("'"):
                v = -int(tok[:-1])
            else:
                v = int(tok)
            if abs(v) < 1:
                raise ValueError(f"bad point {tok!r}")
            maxdot = max(maxdot, abs(v))
            pts.append(v)
        blocks.append(tuple(pts))
    if degree is None:
        degree = maxdot
    return Diagram.from_blocks(degree, blocks)


class AlgebraElement:
    """A sparse exact linear combination of diagrams of one degree.

    The half flag marks elements of the half-integer subalgebra, where every
    diagram in the support joins the last top and bottom dots.
    """

    __slots__ = ("degree", "half", "delta", "terms")

    def __init__(self, degree: int, delta: Scalar, terms=None, half: bool = False):
        self.degree = degree
        self.half = half
        self.delta = delta
        self.terms: dict[Diagram, Scalar] = {}
        if terms:
            for d, c in terms.items() if isinstance(terms, dict) else terms:
                self._add_term(d, c)
        if half:
            for d in self.terms:
                if not d.top_bottom_joined(degree):
                    raise ValueError("half element with unjoined last column")

    def _add_term(self, d: Diagram, c: Scalar):
        if d.degree != self.degree:
            raise ValueError("degree mismatch")
        cur = self.terms.get(d)
        new = c if cur is None else cur + c
        if new:
            self.terms[d] = new
        elif d in self.terms:
            del self.terms[d]

    @staticmethod
    def from_diagram(d: Diagram, delta: Scalar, half: bool = False) -> "AlgebraElement":
        return AlgebraElement(d.degree, delta, {d: one(delta.p)}, half)

    @staticmethod
    def e_zero(r: int, delta: Scalar) -> "AlgebraElement":
        """The idempotent e_0 = (1/delta) . (top row joined)(bottom row joined)."""
        if not delta:
            raise ZeroDivisionError("e_0 is undefined at delta = 0")
        blocks = [tuple(range(1, r + 1)), tuple(-k for k in range(1, r + 1))]
        d = Diagram.from_blocks(r, blocks)
        return AlgebraElement(r, delta, {d: delta.inv()})

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._compat(other)
        out = AlgebraElement(self.degree, self.delta, dict(self.terms), self.half and other.half)
        for d, c in other.terms.items():
            out._add_term(d, c)
        return out

    def scale(self, c: Scalar) -> "AlgebraElement":
        return AlgebraElement(
            self.degree, self.delta, {d: x * c for d, x in self.terms.items()}, self.half
        )

    def _compat(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        if self.delta != other.delta:
            raise ValueError("delta mismatch")

    def multiply(self, other: "AlgebraElement") -> "AlgebraElement":
        self._compat(other)
        out = AlgebraElement(self.degree, self.delta, half=self.half and other.half)
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                prod, exp = concatenate(d1, d2)
                coeff = c1 * c2 * self.delta**exp if exp else c1 * c2
                if coeff:
                    out._add_term(prod, coeff)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.degree == other.degree
            and self.delta == other.delta
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*[{format_diagram(d)}]" for d, c in sorted(
            self.terms.items(), key=lambda t: t[0].blocks))

    def to_json(self) -> str:
        return json.dumps(
            {
                "degree": self.degree,
                "half": self.half,
                "delta": str(self.delta.val),
                "p": self.delta.p,
                "terms": [
                    {"diagram": format_diagram(d), "coeff": str(c.val)}
                    for d, c in sorted(self.terms.items(), key=lambda t: t[0].blocks)
                ],
            }
        )

    @staticmethod
    def from_json(text: str) -> "AlgebraElement":
        data = json.loads(text)
        p = data["p"]
        delta = field(p, data["delta"])
        terms = {
            parse_diagram(t["diagram"], data["degree"]): field(p, t["coeff"])
            for t in data["terms"]
        }
        return AlgebraElement(data["degree"], delta, terms, data["half"])
