"""Partitions, boxes, standard tableaux and exact Specht module data.

Partitions are plain tuples of weakly decreasing positive ints; the empty
partition is ().  Rows and columns of a Young diagram are 1-based and the
content of the box in row i, column j is j - i.

Specht modules are realized inside the tabloid permutation module: the basis
consists of polytabloids of standard tableaux (ordered lexicographically by
row reading word), generator actions are obtained by expressing the permuted
polytabloid in that basis, and the bilinear form is the tabloid inner product.
All matrices are integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations
from math import factorial

SPECHT_SIZE_BOUND = 6


def check_partition(lam) -> tuple[int, ...]:
    lam = tuple(lam)
    if any(x <= 0 for x in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"not a partition: {lam}")
    return lam


def size(lam) -> int:
    return sum(lam)


def contains(lam, mu) -> bool:
    """Componentwise containment lam <= mu of Young diagrams."""
    return len(lam) <= len(mu) and all(a <= b for a, b in zip(lam, mu))


@dataclass(frozen=True)
class Box:
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


def addable_boxes(lam) -> list[Box]:
    lam = check_partition(lam)
    out = [Box(1, lam[0] + 1)] if lam else [Box(1, 1)]
    for i in range(1, len(lam)):
        if lam[i] < lam[i - 1]:
            out.append(Box(i + 1, lam[i] + 1))
    if lam:
        out.append(Box(len(lam) + 1, 1))
    return out


def removable_boxes(lam) -> list[Box]:
    lam = check_partition(lam)
    out = []
    for i, part in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < part:
            out.append(Box(i + 1, part))
    return out


def add_box(lam, box: Box) -> tuple[int, ...]:
    parts = list(lam) + [0]
    parts[box.row - 1] += 1
    return tuple(x for x in parts if x)


def remove_box(lam, box: Box) -> tuple[int, ...]:
    parts = list(lam)
    parts[box.row - 1] -= 1
    return tuple(x for x in parts if x)


def partitions_of(n: int):
    """All partitions of n, in lexicographically decreasing order."""

    def gen(n, maxpart):
        if n == 0:
            yield ()
            return
        for first in range(min(n, maxpart), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    yield from gen(n, n)


def partitions_upto(n: int):
    """All partitions of 0, 1, ..., n."""
    for m in range(n + 1):
        yield from partitions_of(m)


def is_p_regular(lam, p: int) -> bool:
    """False iff some part value repeats p or more times (always True for p = 0)."""
    if p == 0:
        return True
    lam = check_partition(lam)
    for j in range(len(lam) - p + 1):
        if lam[j] == lam[j + p - 1]:
            return False
    return True


def hook_lengths(lam) -> list[list[int]]:
    lam = check_partition(lam)
    conj = conjugate(lam)
    return [
        [lam[i] - j + conj[j - 1] - i for j in range(1, lam[i] + 1)]
        for i in range(len(lam))
    ]


def conjugate(lam) -> tuple[int, ...]:
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def syt_count(lam) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    lam = check_partition(lam)
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    return factorial(size(lam)) // prod


def standard_tableaux(lam) -> tuple:
    """All standard Young tableaux of shape lam, sorted by row reading word."""
    lam = check_partition(lam)
    n = size(lam)
    out = []

    def fill(rows, counts, value):
        if value > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if counts[i] < lam[i] and (i == 0 or counts[i] < counts[i - 1]):
                rows[i].append(value)
                counts[i] += 1
                fill(rows, counts, value + 1)
                counts[i] -= 1
                rows[i].pop()

    fill([[] for _ in lam], [0] * len(lam), 1)
    out.sort(key=lambda t: tuple(x for row in t for x in row))
    return tuple(out)


def _polytabloid(tab, tabloid_index) -> dict[int, int]:
    """e_t as a sparse vector over the tabloid basis (column antisymmetrization)."""
    ncols = len(tab[0]) if tab else 0
    cols = [[row[j] for row in tab if len(row) > j] for j in range(ncols)]
    perms_per_col = [list(permutations(c)) for c in cols]

    n = sum(len(r) for r in tab)
    base_row = [0] * n
    for i, row in enumerate(tab):
        for v in row:
            base_row[v - 1] = i

    vec: dict[int, int] = {}

    def rec(j, row_of, sign):
        if j == ncols:
            idx = tabloid_index[tuple(row_of)]
            vec[idx] = vec.get(idx, 0) + sign
            return
        col = cols[j]
        for perm in perms_per_col[j]:
            new_row = list(row_of)
            for orig, new in zip(col, perm):
                new_row[new - 1] = base_row[orig - 1]
            rec(j + 1, new_row, sign * _perm_sign(col, perm))

    rec(0, list(base_row), 1)
    return {k: v for k, v in vec.items() if v}


def _perm_sign(orig, perm) -> int:
    pos = {v: i for i, v in enumerate(orig)}
    seen = [False] * len(orig)
    sign = 1
    for i in range(len(orig)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = pos[perm[j]]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class SpechtData:
    """Integral Specht module data for the symmetric group S_{|lam|}."""

    lam: tuple[int, ...]
    basis: tuple  # standard tableaux in row-reading-word order
    action: tuple  # action[i] = integer matrix of the transposition (i+1, i+2)
    form: tuple  # integral Gram matrix of the bilinear form

    @property
    def dim(self) -> int:
        return len(self.basis)

    def permutation_matrix(self, perm: tuple[int, ...]):
        """Integer action matrix of a permutation given in one-line notation."""
        return _perm_action(self, perm)


def _mat_mul_int(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    oi[j] += x * bt[j]
    return out


@cache
def _perm_action_cached(lam, perm):
    data = specht_data(lam)
    n = size(lam)
    # decompose perm (one-line, 1-based) into adjacent transpositions
    word = []
    arr = list(perm)
    for target in range(n, 0, -1):
        pos = arr.index(target)
        while pos < target - 1:
            arr[pos], arr[pos + 1] = arr[pos + 1], arr[pos]
            word.append(pos)  # s_{pos+1} swaps positions pos, pos+1
            pos += 1
    # arr is now the identity; perm = product of the recorded s_i applied right-to-left
    dim = data.dim
    out = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for i in word:
        out = _mat_mul_int([list(r) for r in data.action[i]], out)
    return tuple(tuple(r) for r in out)


def _perm_action(data: SpechtData, perm) -> tuple:
    return _perm_action_cached(data.lam, tuple(perm))


@cache
def specht_data(lam, bound: int = SPECHT_SIZE_BOUND) -> SpechtData:
    lam = check_partition(lam)
    n = size(lam)
    if n > bound:
        raise ValueError(f"|lam| = {n} exceeds the Specht size bound {bound}")
    if n == 0:
        return SpechtData((), ((),), (), ((1,),))
    sytx = standard_tableaux(lam)
    dim = len(sytx)

    tabloids = sorted(set(_all_tabloid_keys(lam)))
    tabloid_index = {key: i for i, key in enumerate(tabloids)}

    evecs = [_polytabloid(t, tabloid_index) for t in sytx]

    # Gram matrix of the form: tabloids are orthonormal.
    form = tuple(
        tuple(sum(evecs[a].get(k, 0) * c for k, c in evecs[b].items()) for b in range(dim))
        for a in range(dim)
    )

    # Dense matrix with polytabloid columns, used to solve for coordinates.
    ntab = len(tabloids)
    emat = [[0] * dim for _ in range(ntab)]
    for j, vec in enumerate(evecs):
        for k, c in vec.items():
            emat[k][j] = c

    action = []
    for i in range(1, n):  # s_i = (i, i+1)
        cols = []
        for t in sytx:
            swapped = tuple(
                tuple(i + 1 if v == i else i if v == i + 1 else v for v in row) for row in t
            )
            target = _polytabloid(swapped, tabloid_index)
            cols.append(_solve_int(emat, target, ntab, dim))
        # cols[j] holds the coordinates of s_i . e_{t_j}; matrix acts on coordinates
        action.append(tuple(tuple(cols[j][a] for j in range(dim)) for a in range(dim)))
    return SpechtData(lam, sytx, tuple(action), form)


def _all_tabloid_keys(lam):
    """Row-index assignments of 1..n with prescribed row sizes."""
    n = size(lam)

    def rec(remaining, rows_left):
        if not rows_left:
            yield {}
            return
        row_i, count = rows_left[0]
        from itertools import combinations

        rem = sorted(remaining)
        for chosen in combinations(rem, count):
            rest = remaining - set(chosen)
            for assign in rec(rest, rows_left[1:]):
                for v in chosen:
                    assign[v] = row_i
                yield assign

    for assign in rec(set(range(1, n + 1)), list(enumerate(lam))):
        yield tuple(assign[v] for v in range(1, n + 1))


def _solve_int(emat, target: dict[int, int], nrows: int, ncols: int) -> list[int]:
    """Solve emat . x = target over Q and check the solution is integral."""
    aug = [[Fraction(emat[i][j]) for j in range(ncols)] + [Fraction(target.get(i, 0))] for i in range(nrows)]
    row = 0
    pivots = []
    for col in range(ncols):
        piv = next((i for i in range(row, nrows) if aug[i][col]), None)
        if piv is None:
            raise ArithmeticError("polytabloid basis is degenerate")
        aug[row], aug[piv] = aug[piv], aug[row]
        pivval = aug[row][col]
        aug[row] = [x / pivval for x in aug[row]]
        for i in range(nrows):
            if i != row and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    for i in range(row, nrows):
        if aug[i][ncols]:
            raise ArithmeticError("vector outside the Specht span")
    sol = [aug[r][ncols] for r in range(ncols)]
    if any(x.denominator != 1 for x in sol):
        raise ArithmeticError("non-integral straightening coefficients")
    return [int(x) for x in sol]
