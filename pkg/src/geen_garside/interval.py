"""
Divisibility intervals [1, lambda^k] in G(e,e,n) and their lattice structure.

Left divisibility a <= b means b = a*c with additive lengths; right
divisibility mirrors it.  The interval below lambda^k has a closed-form
membership test: call the nonzero entries of w that are strict left-to-right
column minima its bullets; then w divides lambda^k exactly when every
non-bullet entry is 1 or zeta_e^k.  `build_interval` enumerates the members,
computes both divisibility relations as bitsets over member ordinals, and
checks the closed-form set against honest divisor searches on the whole
group.

Meets and joins are bitset intersections followed by an extremality check.
Failures of uniqueness are data, not crashes: they are reported as
LatticeViolation values carrying the offending antichain, which turns the
lattice theorems into cheap, high-coverage oracles for the implementation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    Generator,
    GroupElement,
    GroupParams,
    atoms,
    enumerate_group,
    generator_matrix,
    inverse,
    lambda_power,
    multiply,
    transpose,
    transpose_generator,
)
from .words import length, length_decreases, reduced_expression


class TheoremViolationError(AssertionError):
    """A computation contradicted a statement that is a theorem; implementation bug."""


@dataclass(frozen=True, slots=True)
class LatticeViolation:
    """Meet or join failed to be unique: the offending pair and the antichain."""

    side: str
    operation: str
    pair: tuple[int, int]
    antichain: tuple[int, ...]


class LatticeViolationError(TheoremViolationError):
    def __init__(self, violation: LatticeViolation):
        self.violation = violation
        super().__init__(
            f"{violation.operation} on side {violation.side} not unique for pair "
            f"{violation.pair}: antichain {violation.antichain}"
        )


def bullet_rows(w: GroupElement) -> list[int]:
    """Rows (1-based) whose entry is a strict running minimum of the columns.

    Row 1 always qualifies.  These are exactly the entries with only zeros
    above and to the left, i.e. the corners of the staircase separating the
    zero region of the matrix.
    """
    out = []
    best = len(w.perm) + 1
    for i, c in enumerate(w.perm, start=1):
        if c < best:
            out.append(i)
            best = c
    return out


def in_interval(w: GroupElement, k: int) -> bool:
    """Membership of w in [1, lambda^k]: non-bullet entries must be 1 or zeta^k."""
    if not 1 <= k <= w.e - 1:
        raise ValueError(f"k must satisfy 1 <= k <= e-1, got {k}")
    best = len(w.perm) + 1
    for c, a in zip(w.perm, w.exps):
        if c < best:
            best = c
        elif a != 0 and a != k:
            return False
    return True


def left_divides(a: GroupElement, b: GroupElement) -> bool:
    """a <= b in left divisibility, by walking a minimal word of a against b.

    Each successive letter of the word must shorten the running product by
    exactly one; the walk ends at a^(-1) b, forcing the lengths to add.
    """
    if a.e != b.e or a.n != b.n:
        raise ValueError("elements live in different groups")
    cur = b
    params = GroupParams(a.e, a.n)
    for x in reduced_expression(a):
        if not length_decreases(x, cur):
            return False
        cur = multiply(generator_matrix(x, params), cur)
    return True


def right_divides(a: GroupElement, b: GroupElement) -> bool:
    """a <= b in right divisibility; the transpose swaps the two orders."""
    return left_divides(transpose(a), transpose(b))


def is_balanced(w: GroupElement, cap: int | None = None) -> bool:
    """Whether the left and right divisor sets of w coincide, by full scan."""
    params = GroupParams(w.e, w.n)
    wt = transpose(w)
    for a in enumerate_group(params, cap):
        if left_divides(a, w) != left_divides(transpose(a), wt):
            return False
    return True


def balanced_max_length(params: GroupParams) -> list[GroupElement]:
    """The balanced elements among those of maximal length: the lambda^k.

    The equality with {lambda^k : 1 <= k <= e-1} is a theorem; its failure
    is raised as a violation.
    """
    from .words import maximal_length_elements

    found = [w for w in maximal_length_elements(params) if is_balanced(w)]
    expected = {lambda_power(params, k) for k in range(1, params.e)}
    if set(found) != expected:
        raise TheoremViolationError(
            f"balanced maximal-length elements {found} differ from the "
            f"powers of lambda"
        )
    return found


class Interval:
    """The interval [1, lambda^k] with both divisibility relations tabulated.

    Members are sorted by (length, perm, exps), so ordinal order refines the
    length grading: ordinal 0 is the identity and the last ordinal is
    lambda^k.  div_*/mult_* are bitsets over ordinals: bit a of div_left[b]
    says a <= b on the left, and mult_left is its transpose.
    """

    def __init__(self, params: GroupParams, members, lengths, tables):
        self.params = params
        self.e, self.n, self.k = params.e, params.n, params.k
        self.members: tuple[GroupElement, ...] = tuple(members)
        self.lengths: tuple[int, ...] = tuple(lengths)
        self.index: dict[GroupElement, int] = {
            w: i for i, w in enumerate(self.members)
        }
        self.div_left, self.div_right, self.mult_left, self.mult_right = tables
        self.identity_ordinal = 0
        self.delta_ordinal = len(self.members) - 1
        self.atom_ordinal: dict[Generator, int] = {
            x: self.index[generator_matrix(x, params)] for x in atoms(params)
        }

    def __len__(self) -> int:
        return len(self.members)

    def element(self, ordinal: int) -> GroupElement:
        return self.members[ordinal]

    def ordinal(self, w: GroupElement) -> int:
        return self.index[w]

    def divisors(self, ordinal: int, side: str = "left") -> list[int]:
        table = self.div_left if side == "left" else self.div_right
        return _bits(table[ordinal])

    def covers(self, ordinal: int, side: str = "left") -> list[int]:
        """Ordinals covered by `ordinal` (length exactly one less)."""
        table = self.div_left if side == "left" else self.div_right
        target = self.lengths[ordinal] - 1
        return [a for a in _bits(table[ordinal]) if self.lengths[a] == target]

    def _extreme(self, common: int, tables, operation, side, pair):
        if common == 0:
            return None
        if operation == "meet":
            candidate = common.bit_length() - 1
        else:
            candidate = (common & -common).bit_length() - 1
        if common & ~tables[candidate]:
            antichain = self._antichain(common, operation, side)
            raise LatticeViolationError(
                LatticeViolation(side, operation, pair, tuple(antichain))
            )
        return candidate

    def _antichain(self, common: int, operation: str, side: str) -> list[int]:
        relation = (self.div_left if side == "left" else self.div_right)
        members = _bits(common)
        out = []
        for a in members:
            if operation == "meet":
                dominated = any(
                    b != a and (relation[b] >> a) & 1 for b in members
                )
            else:
                dominated = any(
                    b != a and (relation[a] >> b) & 1 for b in members
                )
            if not dominated:
                out.append(a)
        return out

    def meet(self, side: str, a: int, b: int) -> int:
        """Greatest common divisor of two members under the chosen order."""
        div = self.div_left if side == "left" else self.div_right
        return self._extreme(div[a] & div[b], div, "meet", side, (a, b))

    def join(self, side: str, a: int, b: int) -> int:
        """Least common multiple of two members; lambda^k always bounds it."""
        mult = self.mult_left if side == "left" else self.mult_right
        return self._extreme(mult[a] & mult[b], mult, "join", side, (a, b))

    def join_many(self, side: str, ordinals) -> int:
        out = self.identity_ordinal
        for a in ordinals:
            out = self.join(side, out, a)
        return out


@dataclass(frozen=True, slots=True)
class LatticeReport:
    meet_left: bool
    join_left: bool
    meet_right: bool
    join_right: bool
    counterexample: LatticeViolation | None = None

    @property
    def all_ok(self) -> bool:
        return self.meet_left and self.join_left and self.meet_right and self.join_right


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_interval(
    params: GroupParams, cap: int | None = None, check_divisor_theorem: bool = True
) -> Interval:
    """Construct [1, lambda^k] with all four relation tables.

    Divisibility is built length layer by length layer from covers: the
    predecessors of b on the left are the products b*x that are shorter by
    one, and on the right the products x*b.  When check_divisor_theorem is
    set, the member set is compared against brute-force divisor searches of
    lambda^k over the whole group, on both sides.
    """
    if params.k is None:
        raise ValueError("interval construction needs params.k")
    k = params.k
    group = enumerate_group(params, cap)
    members = [w for w in group if in_interval(w, k)]
    lengths = {w: length(w) for w in members}
    members.sort(key=lambda w: (lengths[w], w.perm, w.exps))
    index = {w: i for i, w in enumerate(members)}

    delta = lambda_power(params, k)
    if delta not in index or index[delta] != len(members) - 1:
        raise TheoremViolationError("lambda^k is not the top member of its interval")

    gens = [(x, generator_matrix(x, params)) for x in atoms(params)]
    gens_t = [
        (transpose_generator(x, params), generator_matrix(x, params)) for x in atoms(params)
    ]
    size = len(members)
    div_left = [0] * size
    div_right = [0] * size
    for b, w in enumerate(members):
        left_mask = 1 << b
        right_mask = 1 << b
        wt = transpose(w)
        for (xt, xmat), (x, _) in zip(gens_t, gens):
            # b*x is shorter by one exactly when x^T shortens b^T on the left.
            if length_decreases(xt, wt):
                left_mask |= div_left[index[multiply(w, xmat)]]
            if length_decreases(x, w):
                right_mask |= div_right[index[multiply(xmat, w)]]
        div_left[b] = left_mask
        div_right[b] = right_mask

    mult_left = [0] * size
    mult_right = [0] * size
    for b in range(size):
        for a in _bits(div_left[b]):
            mult_left[a] |= 1 << b
        for a in _bits(div_right[b]):
            mult_right[a] |= 1 << b

    interval = Interval(
        params, members, [lengths[w] for w in members],
        (div_left, div_right, mult_left, mult_right),
    )

    if div_left[interval.delta_ordinal] != (1 << size) - 1:
        raise TheoremViolationError("some member does not left-divide lambda^k")
    if div_right[interval.delta_ordinal] != (1 << size) - 1:
        raise TheoremViolationError("some member does not right-divide lambda^k")

    if check_divisor_theorem:
        member_set = set(members)
        delta_t = transpose(delta)
        for w in group:
            lw = left_divides(w, delta)
            rw = left_divides(transpose(w), delta_t)
            if lw != (w in member_set) or rw != (w in member_set):
                raise TheoremViolationError(
                    f"divisors of lambda^{k} disagree with the staircase "
                    f"criterion at {w}"
                )
    return interval


@lru_cache(maxsize=None)
def cached_interval(e: int, n: int, k: int) -> Interval:
    """Interval construction is deterministic; share one copy per (e, n, k)."""
    return build_interval(GroupParams(e, n, k))


def verify_lattice(interval: Interval) -> LatticeReport:
    """Run meet and join over all pairs on both sides; violations become data."""
    flags = {"meet_left": True, "join_left": True, "meet_right": True, "join_right": True}
    counterexample = None
    size = len(interval)
    for side in ("left", "right"):
        div = interval.div_left if side == "left" else interval.div_right
        mult = interval.mult_left if side == "left" else interval.mult_right
        for a in range(size):
            div_a = div[a]
            mult_a = mult[a]
            for b in range(a, size):
                common = div_a & div[b]
                candidate = common.bit_length() - 1
                if common & ~div[candidate]:
                    flags[f"meet_{side}"] = False
                    counterexample = counterexample or LatticeViolation(
                        side, "meet", (a, b),
                        tuple(interval._antichain(common, "meet", side)),
                    )
                common = mult_a & mult[b]
                candidate = (common & -common).bit_length() - 1
                if common & ~mult[candidate]:
                    flags[f"join_{side}"] = False
                    counterexample = counterexample or LatticeViolation(
                        side, "join", (a, b),
                        tuple(interval._antichain(common, "join", side)),
                    )
    return LatticeReport(counterexample=counterexample, **flags)


def atom_lcm_table(interval: Interval, check_identities: bool = True):
    """Join of every generator pair on both sides, with the closed forms.

    The five identities: t_i v t_j = t_k t_0, t_i v s_3 = s_3 t_i s_3,
    t_i v s_j = t_i s_j for j >= 4, s_i v s_{i+1} = s_i s_{i+1} s_i, and
    s_i v s_j = s_i s_j for |i-j| > 1; left and right joins agree.
    """
    params = interval.params
    k = interval.k
    gens = atoms(params)
    mats = {x: generator_matrix(x, params) for x in gens}
    table: dict[tuple[Generator, Generator], GroupElement] = {}
    for i, x in enumerate(gens):
        for y in gens[i + 1 :]:
            a = interval.atom_ordinal[x]
            b = interval.atom_ordinal[y]
            left = interval.join("left", a, b)
            right = interval.join("right", a, b)
            if check_identities and left != right:
                raise TheoremViolationError(
                    f"left and right joins of {x}, {y} differ"
                )
            value = interval.element(left)
            table[(x, y)] = value
            if not check_identities:
                continue
            if x.kind == "t" and y.kind == "t":
                expected = multiply(mats[Generator("t", k % params.e)], mats[Generator("t", 0)])
            elif x.kind == "t" and y.index == 3:
                expected = multiply(multiply(mats[y], mats[x]), mats[y])
            elif x.kind == "t":
                expected = multiply(mats[x], mats[y])
            elif abs(x.index - y.index) == 1:
                expected = multiply(multiply(mats[x], mats[y]), mats[x])
            else:
                expected = multiply(mats[x], mats[y])
            if value != expected:
                raise TheoremViolationError(
                    f"join of {x}, {y} is {value}, expected {expected}"
                )
    return table
