"""Up-down tableaux, JM weights, and the arrow-diagram (abacus) calculus.

Degrees d in {r, r+1/2} are encoded by twice their value, so no floats occur
in indices.  The arrow diagram of a partition at parameter delta has a vee at
position lam_i - i for every i >= 1 (an implicit cofinite tail of vees sits
below the last part) and a single wedge whose column, in above-the-line
coordinates, is delta - |lam|; each application of tau lowers it by one more.
In characteristic p the column of a position n is n mod p.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cache

from . import young
from .scalars import Scalar, field, zero


@dataclass(frozen=True)
class Degree:
    """A degree r or r+1/2, stored as twice its value."""

    twice: int

    def __post_init__(self):
        if self.twice < 1:
            raise ValueError("degree must be at least 1/2")

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    @property
    def floor(self) -> int:
        return self.twice // 2

    def down(self) -> "Degree":
        return Degree(self.twice - 1)

    def up(self) -> "Degree":
        return Degree(self.twice + 1)

    @staticmethod
    def parse(text: str) -> "Degree":
        text = text.strip().replace(" ", "")
        if text.endswith("+1/2"):
            return Degree(2 * int(text[:-4]) + 1)
        if text.endswith("/2"):
            return Degree(int(text[:-2]))
        return Degree(2 * int(text))

    def __str__(self):
        return str(self.twice // 2) if self.is_integer else f"{self.twice // 2}+1/2"


def integer_degree(r: int) -> Degree:
    return Degree(2 * r)


def half_degree(r: int) -> Degree:
    """The degree r + 1/2."""
    return Degree(2 * r + 1)


# ---------------------------------------------------------------------------
# up-down tableaux and JM weights


@cache
def enumerate_tableaux(d: Degree, lam: tuple) -> tuple:
    """All up-down tableaux (t^{1/2}, t^1, ..., t^d) ending at lam.

    Boxes are added at integer steps and removed at half-integer steps;
    staying put is always allowed.  The order is the depth-first order with
    the unchanged partition tried first and box moves sorted by partition.
    """
    lam = young.check_partition(lam)
    if young.size(lam) > d.floor:
        raise ValueError(f"|{lam}| exceeds degree floor {d.floor}")
    length = d.twice  # entries t^{1/2}, t^1, ..., t^d
    out = []

    def rec(seq):
        j = len(seq)
        if j == length:
            if seq[-1] == lam:
                out.append(tuple(seq))
            return
        cur = seq[-1]
        adds_left = sum(1 for jj in range(j, length) if jj % 2 == 1)
        removes_left = (length - j) - adds_left
        gap = young.size(lam) - young.size(cur)
        if gap > adds_left or -gap > removes_left:
            return
        succs = [cur]
        if j % 2 == 1:  # next entry is t^k with k integer: add a box
            succs += sorted(young.add_box(cur, b) for b in young.addable_boxes(cur))
        else:  # half step: remove a box
            succs += sorted(young.remove_box(cur, b) for b in young.removable_boxes(cur))
        for nxt in succs:
            seq.append(nxt)
            rec(seq)
            seq.pop()

    rec([()])
    return tuple(out)


def jm_weight(tab: tuple, delta: Scalar) -> tuple:
    """The tuple of JM eigenvalues (L_{1/2}(t), L_1(t), ..., L_d(t)).

    The leading entry L_{1/2} is always 0 since t^{1/2} is empty.  At an
    integer step the eigenvalue is the content of the added box, or
    delta - |t^k| when nothing moves; at a half-integer step it is delta
    minus the content of the removed box, or |t^k|.
    """
    p = delta.p
    entries = [zero(p)]
    for j in range(1, len(tab)):
        prev, cur = tab[j - 1], tab[j]
        if j % 2 == 1:  # integer step
            if cur == prev:
                entries.append(delta - field(p, young.size(cur)))
            else:
                entries.append(field(p, _changed_box_content(prev, cur)))
        else:  # half-integer step
            if cur == prev:
                entries.append(field(p, young.size(cur)))
            else:
                entries.append(delta - field(p, _changed_box_content(cur, prev)))
    return tuple(entries)


def _changed_box_content(smaller: tuple, larger: tuple) -> int:
    for i in range(len(larger)):
        small = smaller[i] if i < len(smaller) else 0
        if larger[i] != small:
            return larger[i] - (i + 1)
    raise ValueError("partitions do not differ by one box")


def weight_set(lam: tuple, d: Degree, delta: Scalar) -> frozenset:
    return frozenset(jm_weight(t, delta) for t in enumerate_tableaux(d, lam))


def common_jm_weight_bruteforce(lam, mu, d: Degree, delta: Scalar) -> bool:
    """Exhaustive test for a lam-tableau and a mu-tableau of equal weight."""
    if lam == mu:
        return True
    return bool(weight_set(tuple(lam), d, delta) & weight_set(tuple(mu), d, delta))


# ---------------------------------------------------------------------------
# arrow diagrams


@dataclass(frozen=True)
class ArrowDiagram:
    """Arrow diagram of a partition: vees at lam_i - i, one wedge.

    shift counts applications of tau (each moves the wedge one column down in
    above-line coordinates).  projection, when set, is the pair (mu, k) of a
    mu-projection onto a single runner of p positions.
    """

    lam: tuple
    delta: Scalar
    p: int
    shift: int = 0
    projection: tuple | None = None

    def vee_positions(self, count: int) -> list[int]:
        lam = self.lam
        return [(lam[i - 1] if i <= len(lam) else 0) - i for i in range(1, count + 1)]

    def vee_contains(self, pos: int) -> bool:
        if pos <= -(len(self.lam) + 1):
            return True
        return any(self.lam[i] - (i + 1) == pos for i in range(len(self.lam)))

    def wedge_column(self) -> Scalar:
        """Above-line column of the wedge (reduced mod p when p > 0)."""
        return self.delta - field(self.p, young.size(self.lam) + self.shift)

    def tau(self, sign: int = 1) -> "ArrowDiagram":
        if sign not in (1, -1):
            raise ValueError("sign must be +-1")
        return replace(self, shift=self.shift + sign)

    def proj_vees(self) -> tuple:
        _, k = self.projection
        return tuple(
            (self.lam[i - 1] if i <= len(self.lam) else 0) - i for i in range(1, k + 1)
        )

    def column_profile(self, r: int) -> dict:
        """Arrow counts per column, vees truncated to rows 1..r+1.

        Keys are exact column values (Fractions) in characteristic 0 and
        residues in characteristic p; the wedge contributes 1 to its column.
        """
        prof: dict = {}

        def bump(key):
            prof[key] = prof.get(key, 0) + 1

        for pos in self.vee_positions(r + 1):
            bump(Fraction(pos) if self.p == 0 else pos % self.p)
        w = self.wedge_column()
        bump(w.val if self.p == 0 else w.val % self.p)
        return prof

    def render(self) -> str:
        """ASCII picture: columns left to right in decreasing label order."""
        if self.projection is not None:
            mu, k = self.projection
            hi, lo = self.p - k - 2, -k - 1
            vees = set(self.vee_positions(k))
            wcol = _window_rep(self.wedge_column().val, lo, self.p)
        else:
            depth = len(self.lam) + 2
            top = (self.lam[0] if self.lam else 0) + 1
            w = self.wedge_column()
            wcol = None
            if self.p > 0:
                vees = {pos % self.p for pos in self.vee_positions(depth + self.p)}
                hi, lo = self.p - 1, 0
                wcol = w.val
            else:
                if w.is_integer():
                    wcol = int(w.val)
                    hi, lo = max(top, wcol + 1), min(-depth, wcol - 1)
                else:
                    hi, lo = top, -depth
                vees = set(self.vee_positions(depth))
        cols = range(hi, lo - 1, -1)
        glyph = {
            (True, True): "X",
            (True, False): "V",
            (False, True): "^",
            (False, False): "o",
        }
        labels = " ".join(f"{c:>3d}" for c in cols)
        row = " ".join(f"{glyph[(c in vees, c == wcol)]:>3}" for c in cols)
        out = labels + "\n" + row
        if self.p == 0 and wcol is None:
            out += f"\n(wedge at non-integer column {self.wedge_column().val})"
        return out


def arrow_diagram(lam, delta: Scalar, p: int) -> ArrowDiagram:
    lam = young.check_partition(lam)
    if delta.p != p:
        raise ValueError("delta lives in the wrong field")
    return ArrowDiagram(lam, delta, p)


def _window_rep(value, lo: int, p: int) -> int:
    """The representative of value mod p inside the window [lo, lo + p)."""
    return (int(value) - lo) % p + lo


def mu_projection(lam, mu, delta: Scalar, p: int) -> ArrowDiagram:
    """Single-runner projection of d(lam), defined for p > |mu| and lam <= mu."""
    lam, mu = young.check_partition(lam), young.check_partition(mu)
    if p == 0 or p <= young.size(mu):
        raise ValueError("mu-projection needs p > |mu|")
    if not young.contains(lam, mu):
        raise ValueError("mu-projection needs lam contained in mu")
    k = len(mu)
    diag = ArrowDiagram(lam, delta, p, projection=(mu, k))
    assert all(v > -k - 1 for v in diag.proj_vees())
    return diag


def same_arrow_counts(lam, theta, d: Degree, delta: Scalar, p: int) -> bool:
    """Equal per-column arrow counts of d(.) (integer d) or tau d(.) (half d)."""
    a = arrow_diagram(lam, delta, p)
    b = arrow_diagram(theta, delta, p)
    if not d.is_integer:
        a, b = a.tau(), b.tau()
    r = d.floor
    return a.column_profile(r) == b.column_profile(r)


def matches_pattern(lam, mu, d: Degree, delta: Scalar, p: int) -> bool:
    """The one-window arrow configuration equivalent to a common JM weight.

    mu must be a partition of the degree floor and lam != mu; valid for p = 0
    or p > floor(d).  In the integer case mu carries vee/wedge in columns
    c > c' with nothing in between and lam the swapped pair; in the
    half-integer case the wedges sit one column outside the moved vees, with
    the stacked vee-over-wedge column as the degenerate case.
    """
    lam, mu = young.check_partition(lam), young.check_partition(mu)
    r = d.floor
    if young.size(mu) != r:
        raise ValueError("mu must be a partition of the degree floor")
    if p != 0 and p <= r:
        raise ValueError("pattern test needs p = 0 or p > floor(d)")
    if lam == mu:
        return False
    if p == 0:
        wm = _wedge_of(mu, delta)
        if not wm.is_integer():
            return False
        wedge_lam = int(_wedge_of(lam, delta).val)
        wedge_mu = int(wm.val)
        depth = max(len(lam), len(mu)) + 1
        vl = set(ArrowDiagram(lam, delta, 0).vee_positions(depth))
        vm = set(ArrowDiagram(mu, delta, 0).vee_positions(depth))
        mu_has_vee = ArrowDiagram(mu, delta, 0).vee_contains
    else:
        if not young.contains(lam, mu):
            return False
        k = len(mu)
        lo = -k - 1
        dl = mu_projection(lam, mu, delta, p)
        dm = mu_projection(mu, mu, delta, p)
        wedge_lam = _window_rep(dl.wedge_column().val, lo, p)
        wedge_mu = _window_rep(dm.wedge_column().val, lo, p)
        vl, vm = set(dl.proj_vees()), set(dm.proj_vees())
        mu_has_vee = vm.__contains__
    gained, lost = vl - vm, vm - vl
    if len(gained) != 1 or len(lost) != 1:
        return False
    (moved_to,), (moved_from,) = gained, lost
    if d.is_integer:
        c, cp = moved_from, moved_to
        if not (c > cp and wedge_mu == cp and wedge_lam == c):
            return False
        return not any(mu_has_vee(t) for t in range(cp + 1, c))
    c, b = moved_from, moved_to
    cp = b + 1
    if not (c >= cp and wedge_mu == cp and wedge_lam == c + 1):
        return False
    return not any(mu_has_vee(t) for t in range(cp, c))


def _wedge_of(lam, delta: Scalar) -> Scalar:
    return delta - field(delta.p, young.size(lam))


def sigma(diag: ArrowDiagram) -> ArrowDiagram | None:
    """Swap the wedge with the nearest vee in a column at or above it.

    Only defined for unprojected characteristic-0 diagrams whose wedge sits
    on an integer column; returns None when no vee sits at or above the
    wedge or when the swap is the identity (stacked column).
    """
    if diag.p != 0 or diag.projection is not None or diag.shift != 0:
        raise ValueError("sigma acts on plain characteristic-0 diagrams")
    w = diag.wedge_column()
    if not w.is_integer():
        return None
    wcol = int(w.val)
    lam = diag.lam
    positions = [lam[i] - (i + 1) for i in range(len(lam))]
    candidates = [v for v in positions if v >= wcol]
    if wcol <= -(len(lam) + 1):
        return None  # the wedge sits inside the packed tail
    if not candidates:
        return None
    v = min(candidates)
    if v == wcol:
        return None
    new_positions = sorted(set(positions) - {v} | {wcol}, reverse=True)
    parts = [new_positions[i] + i + 1 for i in range(len(new_positions))]
    new_lam = tuple(x for x in parts if x > 0)
    return arrow_diagram(new_lam, diag.delta, 0)
