"""
Exact arithmetic for the complex reflection group G(e,e,n).

G(e,e,n) is the group of n x n monomial matrices whose nonzero entries are
e-th roots of unity multiplying to 1.  A matrix w is stored as the pair

    perm : tuple of length n, perm[i-1] = the column of the unique nonzero
           entry of row i (1-based values, so perm is a permutation of 1..n);
    exps : tuple of length n, exps[i-1] = a with w[i, perm[i-1]] = zeta_e^a.

Roots of unity never appear as floating point: zeta_e^a is just the integer
a mod e, which keeps every operation exact and every element hashable.  The
exponent sum is 0 mod e for every group element (determinant-of-moduli
condition), and all indices in serialized forms are 1-based like the matrices.

The distinguished generators are the reflections

    t_i  (i mod e)   : swaps rows 1,2 with entries zeta_e^{-i}, zeta_e^{i},
    s_j  (3 <= j <= n): the transposition matrix of (j-1, j),

and the diagonal element lambda = diag(zeta_e^{-(n-1)}, zeta_e, ..., zeta_e)
whose powers bound the divisibility intervals built in `interval`.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass

DEFAULT_GROUP_CAP = 10**6


class CapExceededError(RuntimeError):
    """An enumeration or search outgrew its configured cap."""


class ParameterMismatchError(ValueError):
    """Operands live in different groups G(e,e,n)."""


def group_cap() -> int:
    """Group-size cap; the GARSIDE_CAP environment variable overrides it."""
    value = os.environ.get("GARSIDE_CAP")
    return int(value) if value else DEFAULT_GROUP_CAP


@dataclass(frozen=True, slots=True)
class GroupParams:
    """Parameters (e, n) of G(e,e,n), plus the interval exponent k when fixed."""

    e: int
    n: int
    k: int | None = None

    def __post_init__(self) -> None:
        if self.e < 2:
            raise ValueError(f"e must be >= 2, got {self.e}")
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.k is not None and not 1 <= self.k <= self.e - 1:
            raise ValueError(f"k must satisfy 1 <= k <= e-1, got k={self.k}")

    def order(self) -> int:
        """Group order e^(n-1) * n!."""
        result = self.e ** (self.n - 1)
        for m in range(2, self.n + 1):
            result *= m
        return result

    def with_k(self, k: int) -> "GroupParams":
        return GroupParams(self.e, self.n, k)


@dataclass(frozen=True, slots=True, order=True)
class Generator:
    """Atom symbol: kind 't' with index mod e, or kind 's' with 3 <= index <= n."""

    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    @staticmethod
    def t(i: int, e: int) -> "Generator":
        return Generator("t", i % e)

    @staticmethod
    def s(j: int) -> "Generator":
        return Generator("s", j)


def atoms(params: GroupParams) -> list[Generator]:
    """The generating set: t_0..t_{e-1} followed by s_3..s_n (none for n=2)."""
    gens = [Generator("t", i) for i in range(params.e)]
    gens += [Generator("s", j) for j in range(3, params.n + 1)]
    return gens


def parse_word(text: str, params: GroupParams, *, allow_inverses: bool = False):
    """Parse a whitespace-separated word like "t0 s3 t1^-1".

    Returns a list of Generator when inverses are disallowed, or a list of
    (Generator, sign) pairs with sign in {+1, -1} when they are allowed.
    """
    letters = []
    for token in text.split():
        sign = 1
        if token.endswith("^-1"):
            if not allow_inverses:
                raise ValueError(f"inverse letter {token!r} not accepted here")
            sign = -1
            token = token[:-3]
        if len(token) < 2 or token[0] not in "ts":
            raise ValueError(f"bad generator token {token!r}")
        try:
            index = int(token[1:])
        except ValueError:
            raise ValueError(f"bad generator token {token!r}") from None
        gen = Generator(token[0], index)
        _check_generator(gen, params)
        letters.append((gen, sign) if allow_inverses else gen)
    return letters


def format_word(letters) -> str:
    return " ".join(str(x) for x in letters)


def _check_generator(g: Generator, params: GroupParams) -> None:
    if g.kind == "t":
        if not 0 <= g.index < params.e:
            raise ValueError(f"t-index {g.index} out of range for e={params.e}")
    elif g.kind == "s":
        if not 3 <= g.index <= params.n:
            raise ValueError(f"s-index {g.index} out of range for n={params.n}")
    else:
        raise ValueError(f"unknown generator kind {g.kind!r}")


@dataclass(frozen=True, slots=True)
class GroupElement:
    """A monomial matrix of G(e,e,n) as (permutation, exponent vector mod e)."""

    e: int
    perm: tuple[int, ...]
    exps: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def is_identity(self) -> bool:
        return all(self.perm[i] == i + 1 for i in range(len(self.perm))) and not any(
            self.exps
        )

    def inv(self) -> "GroupElement":
        return inverse(self)

    def transpose(self) -> "GroupElement":
        return transpose(self)

    def entry_of_row(self, i: int) -> tuple[int, int]:
        """(column, exponent) of the nonzero entry of row i (1-based)."""
        return self.perm[i - 1], self.exps[i - 1]

    def to_json(self) -> str:
        return json.dumps(
            {"e": self.e, "n": self.n, "perm": list(self.perm), "exps": list(self.exps)},
            sort_keys=True,
            separators=(",", ":"),
        )

    @staticmethod
    def from_json(text: str) -> "GroupElement":
        data = json.loads(text)
        w = GroupElement(int(data["e"]), tuple(data["perm"]), tuple(data["exps"]))
        _validate_element(w, int(data["n"]))
        return w


def _validate_element(w: GroupElement, n: int | None = None) -> None:
    if n is not None and len(w.perm) != n:
        raise ValueError(f"perm has length {len(w.perm)}, expected n={n}")
    if sorted(w.perm) != list(range(1, len(w.perm) + 1)):
        raise ValueError(f"perm {w.perm} is not a permutation of 1..{len(w.perm)}")
    if len(w.exps) != len(w.perm):
        raise ValueError("exps and perm have different lengths")
    if any(not 0 <= a < w.e for a in w.exps):
        raise ValueError(f"exponents {w.exps} out of range mod {w.e}")
    if sum(w.exps) % w.e != 0:
        raise ValueError(f"exponent sum of {w.exps} is not 0 mod {w.e}")


def identity(params: GroupParams) -> GroupElement:
    n = params.n
    return GroupElement(params.e, tuple(range(1, n + 1)), (0,) * n)


def generator_matrix(g: Generator, params: GroupParams) -> GroupElement:
    """Matrix of a generator: t_i swaps rows 1,2 with exponents -i, i; s_j is
    the plain transposition (j-1, j)."""
    _check_generator(g, params)
    e, n = params.e, params.n
    perm = list(range(1, n + 1))
    exps = [0] * n
    if g.kind == "t":
        perm[0], perm[1] = 2, 1
        exps[0] = (-g.index) % e
        exps[1] = g.index % e
    else:
        j = g.index
        perm[j - 2], perm[j - 1] = j, j - 1
    return GroupElement(e, tuple(perm), tuple(exps))


def multiply(u: GroupElement, v: GroupElement) -> GroupElement:
    """Matrix product u*v.

    Row i of the product is nonzero at column sigma_v(sigma_u(i)) and the
    exponents add along the composition: eps(i) = eps_u(i) + eps_v(sigma_u(i)).
    """
    if u.e != v.e or len(u.perm) != len(v.perm):
        raise ParameterMismatchError(
            f"cannot multiply elements of G({u.e},{u.e},{len(u.perm)}) "
            f"and G({v.e},{v.e},{len(v.perm)})"
        )
    e = u.e
    vperm = v.perm
    vexps = v.exps
    perm = tuple(vperm[c - 1] for c in u.perm)
    exps = tuple((a + vexps[c - 1]) % e for a, c in zip(u.exps, u.perm))
    return GroupElement(e, perm, exps)


def inverse(w: GroupElement) -> GroupElement:
    """Inverse = conjugate transpose: sigma^(-1) with negated, relabeled exponents."""
    n = len(w.perm)
    perm = [0] * n
    exps = [0] * n
    for i in range(n):
        c = w.perm[i]
        perm[c - 1] = i + 1
        exps[c - 1] = (-w.exps[i]) % w.e
    return GroupElement(w.e, tuple(perm), tuple(exps))


def transpose(w: GroupElement) -> GroupElement:
    """Plain transpose: the length-preserving antiautomorphism sending t_i to
    t_{-i} and fixing every s_j."""
    n = len(w.perm)
    perm = [0] * n
    exps = [0] * n
    for i in range(n):
        c = w.perm[i]
        perm[c - 1] = i + 1
        exps[c - 1] = w.exps[i]
    return GroupElement(w.e, tuple(perm), tuple(exps))


def transpose_generator(g: Generator, params: GroupParams) -> Generator:
    """Image of a generator under the transpose map."""
    if g.kind == "t":
        return Generator("t", (-g.index) % params.e)
    return g


def evaluate_word(letters, params: GroupParams) -> GroupElement:
    """Product in G(e,e,n) of a word over the generating set."""
    w = identity(params)
    for g in letters:
        w = multiply(w, generator_matrix(g, params))
    return w


def enumerate_group(params: GroupParams, cap: int | None = None) -> list[GroupElement]:
    """All of G(e,e,n), exactly once, in lexicographic order on (perm, exps)."""
    cap = group_cap() if cap is None else cap
    order = params.order()
    if order > cap:
        raise CapExceededError(
            f"|G({params.e},{params.e},{params.n})| = {order} exceeds cap {cap}"
        )
    e, n = params.e, params.n
    elements = []
    for perm in itertools.permutations(range(1, n + 1)):
        for exps in itertools.product(range(e), repeat=n):
            if sum(exps) % e == 0:
                elements.append(GroupElement(e, perm, exps))
    return elements


def lambda_power(params: GroupParams, k: int) -> GroupElement:
    """The diagonal element lambda^k = diag(zeta^{-k(n-1)}, zeta^k, ..., zeta^k)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    e, n = params.e, params.n
    exps = [(-k * (n - 1)) % e] + [k % e] * (n - 1)
    return GroupElement(e, tuple(range(1, n + 1)), tuple(exps))
