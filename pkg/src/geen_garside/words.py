"""
Reduced words over the generating set {t_0..t_{e-1}, s_3..s_n} of G(e,e,n).

Two independent routes produce the same minimal word for an element w:

* `reduced_expression` runs the row-reduction loop literally: working on a
  scratch copy, for i = n down to 2 it locates the nonzero entry of row i,
  clears its root of unity by right-multiplying with s_c..s_2 t_k (s_2 means
  t_0), and shifts the resulting 1 onto the diagonal with s_{c+1}..s_i,
  prepending the used letters.

* `reduced_expression_blockwise` never touches the full matrix again after
  computing the block data: deleting row i and column c and scaling the new
  first column by the removed entry yields the next block, and the word
  emitted for each block is a fixed function of (c, exponent).

Their agreement is a cross-check against transcription slips in either one.
`length` is the letter count of these words and equals the Cayley-graph
distance from the identity, for which `cayley_length_table` is the
independent BFS oracle.  `length_decreases` answers whether a single left
multiplication by a generator shortens an element, straight from the matrix
entries, without recomputing any words.
"""

from __future__ import annotations

from .core import (
    CapExceededError,
    Generator,
    GroupElement,
    GroupParams,
    atoms,
    generator_matrix,
    identity,
    multiply,
)


def _rmul_s(perm: list[int], m: int) -> None:
    """Right-multiply by s_m: swap columns m-1 and m."""
    for i, c in enumerate(perm):
        if c == m - 1:
            perm[i] = m
        elif c == m:
            perm[i] = m - 1


def _rmul_t(perm: list[int], exps: list[int], m: int, e: int) -> None:
    """Right-multiply by t_m: column 1 -> 2 gaining -m, column 2 -> 1 gaining m."""
    for i, c in enumerate(perm):
        if c == 1:
            perm[i] = 2
            exps[i] = (exps[i] - m) % e
        elif c == 2:
            perm[i] = 1
            exps[i] = (exps[i] + m) % e


def reduced_expression(w: GroupElement) -> list[Generator]:
    """Minimal word for w, by the literal row-reduction loop."""
    e, n = w.e, w.n
    perm = list(w.perm)
    exps = list(w.exps)
    word: list[Generator] = []
    for i in range(n, 1, -1):
        c = perm[i - 1]
        k = exps[i - 1]
        if k != 0:
            # Shift the entry to column 1 (via s_c..s_3, then s_2 = t_0),
            # then turn it into a 1 sitting in column 2 with t_k.
            for m in range(c, 2, -1):
                _rmul_s(perm, m)
            if c >= 2:
                _rmul_t(perm, exps, 0, e)
            _rmul_t(perm, exps, k, e)
            prefix = [Generator("t", k)]
            if c >= 2:
                prefix.append(Generator("t", 0))
            prefix += [Generator("s", m) for m in range(3, c + 1)]
            word = prefix + word
            c = 2
        # Shift the 1 from column c to the diagonal position (i, i).
        for m in range(c + 1, i + 1):
            if m >= 3:
                _rmul_s(perm, m)
            else:
                _rmul_t(perm, exps, 0, e)
        word = [
            Generator("s", m) if m >= 3 else Generator("t", 0)
            for m in range(i, c, -1)
        ] + word
    return word


def _block_steps(w: GroupElement) -> list[tuple[int, int, int]]:
    """(i, c, exponent) of the nonzero entry of row i in block i, for i = n..2.

    Block i-1 arises from block i by deleting row i and column c and scaling
    the new first column by the deleted entry.
    """
    e, n = w.e, w.n
    perm = list(w.perm)
    exps = list(w.exps)
    steps = []
    for i in range(n, 1, -1):
        c = perm[i - 1]
        k = exps[i - 1]
        steps.append((i, c, k))
        perm.pop()
        exps.pop()
        for r in range(i - 1):
            if perm[r] > c:
                perm[r] -= 1
        for r in range(i - 1):
            if perm[r] == 1:
                exps[r] = (exps[r] + k) % e
    return steps


def _block_word(i: int, c: int, k: int) -> list[Generator]:
    """Word contributed by block i, by the closed-form case split on (c, k)."""
    if k != 0:
        word = [Generator("s", m) for m in range(i, 2, -1)]
        word.append(Generator("t", k))
        if c >= 2:
            word.append(Generator("t", 0))
        word += [Generator("s", m) for m in range(3, c + 1)]
        return word
    return [
        Generator("s", m) if m >= 3 else Generator("t", 0)
        for m in range(i, c, -1)
    ]


def _block_length(i: int, c: int, k: int) -> int:
    if k != 0:
        return (i - 2) + (2 if c >= 2 else 1) + max(0, c - 2)
    return i - c


class BlockDecomposition:
    """Per-block data of an element: blocks w_n..w_2 and the word each emits."""

    def __init__(self, w: GroupElement):
        self.element = w
        self.steps = _block_steps(w)

    def block_word(self, i: int) -> list[Generator]:
        """Word contributed by block i (2 <= i <= n)."""
        step = self.steps[self.element.n - i]
        return _block_word(*step)

    def blocks(self) -> list[GroupElement]:
        """The square blocks w_n, ..., w_2, each a monomial matrix on 1..i."""
        e, n = self.element.e, self.element.n
        perm = list(self.element.perm)
        exps = list(self.element.exps)
        out = [self.element]
        for i in range(n, 2, -1):
            c = perm[i - 1]
            k = exps[i - 1]
            perm.pop()
            exps.pop()
            for r in range(i - 1):
                if perm[r] > c:
                    perm[r] -= 1
            for r in range(i - 1):
                if perm[r] == 1:
                    exps[r] = (exps[r] + k) % e
            out.append(GroupElement(e, tuple(perm), tuple(exps)))
        return out

    def word(self) -> list[Generator]:
        """Concatenation block 2, block 3, ..., block n."""
        out: list[Generator] = []
        for step in reversed(self.steps):
            out += _block_word(*step)
        return out


def reduced_expression_blockwise(w: GroupElement) -> BlockDecomposition:
    return BlockDecomposition(w)


def length(w: GroupElement) -> int:
    """Minimal word length of w over the generating set."""
    return sum(_block_length(*step) for step in _block_steps(w))


def length_decreases(x: Generator, w: GroupElement) -> bool:
    """Whether len(x*w) == len(w) - 1, read off the matrix entries of w.

    For x = s_i the answer depends on the relative position of the nonzero
    entries of rows i-1 and i and on whether the trailing entry is a root of
    unity other than 1; for x = t_m it depends on rows 1 and 2, where in the
    swapped case the exponent must cancel m exactly.
    """
    perm = w.perm
    exps = w.exps
    if x.kind == "s":
        i = x.index
        if perm[i - 2] < perm[i - 1]:
            return exps[i - 1] != 0
        return exps[i - 2] == 0
    if perm[0] < perm[1]:
        return exps[1] != 0
    return exps[0] == (-x.index) % w.e


def maximal_length_elements(params: GroupParams) -> list[GroupElement]:
    """The (e-1)^(n-1) diagonal matrices with nontrivial entries in rows 2..n.

    These are exactly the elements of maximal length n(n-1); the first
    diagonal entry is forced by the exponent-sum rule.
    """
    import itertools

    e, n = params.e, params.n
    perm = tuple(range(1, n + 1))
    out = []
    for tail in itertools.product(range(1, e), repeat=n - 1):
        head = (-sum(tail)) % e
        out.append(GroupElement(e, perm, (head,) + tail))
    out.sort(key=lambda w: w.exps)
    return out


def all_reduced_expressions(
    w: GroupElement, params: GroupParams, cap: int = 10**5
) -> list[tuple[Generator, ...]]:
    """Every minimal word for w, by descent through length-decreasing letters."""
    gens = [(x, generator_matrix(x, params)) for x in atoms(params)]
    memo: dict[GroupElement, list[tuple[Generator, ...]]] = {}
    budget = cap

    def rec(u: GroupElement) -> list[tuple[Generator, ...]]:
        nonlocal budget
        if u.is_identity():
            return [()]
        cached = memo.get(u)
        if cached is not None:
            return cached
        out: list[tuple[Generator, ...]] = []
        for x, xmat in gens:
            if length_decreases(x, u):
                for tail in rec(multiply(xmat, u)):
                    out.append((x,) + tail)
                    budget -= 1
                    if budget < 0:
                        raise CapExceededError(
                            f"more than {cap} reduced expressions"
                        )
        memo[u] = out
        return out

    return rec(w)


def cayley_length_table(
    params: GroupParams, cap: int | None = None
) -> dict[GroupElement, int]:
    """Graph distance from the identity in the Cayley graph of (G, X).

    Plain BFS using only `multiply`; deliberately independent of the
    row-reduction algorithm so it can serve as its oracle.
    """
    from .core import group_cap

    cap = group_cap() if cap is None else cap
    if params.order() > cap:
        raise CapExceededError(
            f"|G| = {params.order()} exceeds cap {cap}"
        )
    gens = [generator_matrix(x, params) for x in atoms(params)]
    start = identity(params)
    dist = {start: 0}
    frontier = [start]
    while frontier:
        next_frontier = []
        for u in frontier:
            for g in gens:
                v = multiply(g, u)
                if v not in dist:
                    dist[v] = dist[u] + 1
                    next_frontier.append(v)
        frontier = next_frontier
    return dist
