"""
The interval Garside monoid on [1, lambda^k] and its group of fractions.

Monoid elements are only ever touched through their left-greedy normal form
Delta^p f_1 ... f_m: an integer power of the Garside element Delta
(= lambda^k) followed by simples, none of them trivial or Delta, with every
adjacent pair (a, b) left-weighted: no atom can move from the head of b into
a, i.e. meet(complement(a), b) = 1.  Two words represent the same group
element exactly when their normal forms coincide, which settles the word
problem.

Inverse letters ride on the balanced structure: x^(-1) = Delta^(-1) (Delta
x^(-1)), whose second factor is a simple because every generator
right-divides Delta.  Delta powers migrate to the front through the
conjugation permutation tau(s) = Delta^(-1) s Delta of the simples.

The same file carries the presentation machinery: the defining relations of
the monoid (dual relations t_i t_{i-k} = t_j t_{j-k} plus the braid and
commutation relations), the cycle structure of the t-generators, the
gcd(e,k) = 1 criterion deciding isomorphism with the k = 1 monoid, the
one-rewriting-class property of reduced expressions, and the lcm
compatibility of the embedded Artin monoid of type B.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    CapExceededError,
    Generator,
    GroupElement,
    GroupParams,
    atoms,
    evaluate_word,
    generator_matrix,
    inverse,
    multiply,
    parse_word,
)
from .interval import (
    Interval,
    TheoremViolationError,
    cached_interval,
    verify_lattice,
)
from .words import all_reduced_expressions, length


@dataclass(frozen=True, slots=True)
class NormalForm:
    """Canonical form Delta^p f_1 ... f_m; factors are interval ordinals."""

    delta_power: int
    factors: tuple[int, ...]

    def is_monoid_element(self) -> bool:
        return self.delta_power >= 0


class GarsideStructure:
    """Tables turning an interval into a working Garside monoid.

    comp_left[s]  = ordinal of s^(-1) Delta   (right complement: s * that = Delta)
    comp_right[s] = ordinal of Delta s^(-1)   (left complement: that * s = Delta)
    tau[s]        = ordinal of Delta^(-1) s Delta, a bijection of the simples.
    """

    def __init__(self, interval: Interval):
        self.interval = interval
        self.params = interval.params
        self.delta = interval.delta_ordinal
        self.identity = interval.identity_ordinal
        members = interval.members
        delta_elem = members[self.delta]
        lengths = interval.lengths
        delta_len = lengths[self.delta]

        comp_left = []
        comp_right = []
        for s, w in enumerate(members):
            w_inv = inverse(w)
            left = interval.index.get(multiply(w_inv, delta_elem))
            right = interval.index.get(multiply(delta_elem, w_inv))
            if left is None or right is None:
                raise TheoremViolationError(
                    f"complement of simple {w} left the interval"
                )
            if lengths[s] + lengths[left] != delta_len:
                raise TheoremViolationError(
                    f"complement of {w} is not length-complementary"
                )
            comp_left.append(left)
            comp_right.append(right)
        self.comp_left = comp_left
        self.comp_right = comp_right

        # tau = complement applied twice; check bijectivity directly.
        tau = [comp_left[comp_left[s]] for s in range(len(members))]
        if sorted(tau) != list(range(len(members))):
            raise TheoremViolationError("tau is not a permutation of the simples")
        if tau[self.identity] != self.identity or tau[self.delta] != self.delta:
            raise TheoremViolationError("tau moves the identity or Delta")
        self.tau = tau
        tau_inv = [0] * len(members)
        for s, img in enumerate(tau):
            tau_inv[img] = s
        self.tau_inv = tau_inv

        self._div_left = interval.div_left
        self._atom = interval.atom_ordinal

    # -- simple arithmetic ------------------------------------------------

    def product_ordinal(self, a: int, b: int) -> int | None:
        """Ordinal of member_a * member_b, or None if the product leaves D_k."""
        members = self.interval.members
        return self.interval.index.get(multiply(members[a], members[b]))

    def tau_power(self, s: int, p: int) -> int:
        table = self.tau if p >= 0 else self.tau_inv
        for _ in range(abs(p)):
            s = table[s]
        return s

    def is_tau_identity(self) -> bool:
        return all(self.tau[s] == s for s in range(len(self.interval)))

    # -- normalization -----------------------------------------------------

    def normalize_pair(self, a: int, b: int) -> tuple[int, int]:
        """Move the head meet(complement(a), b) from b into a.

        The lattice has been verified at build time, so the meet candidate
        (top ordinal of the intersected divisor bitsets) needs no recheck.
        """
        div = self._div_left
        common = div[self.comp_left[a]] & div[b]
        t = common.bit_length() - 1
        if t == self.identity:
            return a, b
        interval = self.interval
        members = interval.members
        a2 = interval.index[multiply(members[a], members[t])]
        b2 = interval.index[multiply(inverse(members[t]), members[b])]
        return a2, b2

    def normalize_factors(self, factors: list[int]) -> NormalForm:
        """Left-greedy form of a product of simples, as repeated local moves.

        Local normalization pushes Delta factors to the front and identity
        factors to the back; sweeps run until a full pass changes nothing.
        """
        normalize_pair = self.normalize_pair
        changed = True
        while changed:
            changed = False
            for i in range(len(factors) - 1):
                a, b = factors[i], factors[i + 1]
                a2, b2 = normalize_pair(a, b)
                if a2 != a:
                    factors[i], factors[i + 1] = a2, b2
                    changed = True
        lo = 0
        hi = len(factors)
        while lo < hi and factors[lo] == self.delta:
            lo += 1
        while lo < hi and factors[hi - 1] == self.identity:
            hi -= 1
        return NormalForm(lo, tuple(factors[lo:hi]))

    def normal_form(self, word) -> NormalForm:
        """Normal form of a signed word (string or (Generator, sign) list)."""
        if isinstance(word, str):
            word = parse_word(word, self.params, allow_inverses=True)
        delta_power = 0
        factors: list[int] = []
        tau_inv = self.tau_inv
        for gen, sign in word:
            x = self._atom[gen]
            if sign > 0:
                factors.append(x)
            else:
                # x^(-1) = Delta^(-1) (Delta x^(-1)); migrate Delta^(-1) left.
                delta_power -= 1
                factors = [tau_inv[f] for f in factors]
                factors.append(self.comp_right[x])
        nf = self.normalize_factors(factors)
        return NormalForm(delta_power + nf.delta_power, nf.factors)

    def nf_product(self, a: NormalForm, b: NormalForm) -> NormalForm:
        """Product of two normal forms."""
        shifted = [self.tau_power(f, b.delta_power) for f in a.factors]
        nf = self.normalize_factors(shifted + list(b.factors))
        return NormalForm(a.delta_power + b.delta_power + nf.delta_power, nf.factors)

    def nf_of_simple(self, s: int) -> NormalForm:
        if s == self.identity:
            return NormalForm(0, ())
        if s == self.delta:
            return NormalForm(1, ())
        return NormalForm(0, (s,))

    def nf_right_quotient(self, a: NormalForm, s: int) -> NormalForm:
        """a * s^(-1); lands in the monoid iff the simple s right-divides a."""
        if s == self.identity:
            return a
        inv = NormalForm(-1, (self.comp_right[s],))
        if s == self.delta:
            inv = NormalForm(-1, ())
        return self.nf_product(a, inv)

    def evaluate_nf(self, nf: NormalForm) -> GroupElement:
        members = self.interval.members
        delta_elem = members[self.delta]
        if nf.delta_power >= 0:
            w = members[self.identity]
            for _ in range(nf.delta_power):
                w = multiply(w, delta_elem)
        else:
            delta_inv = inverse(delta_elem)
            w = members[self.identity]
            for _ in range(-nf.delta_power):
                w = multiply(w, delta_inv)
        for f in nf.factors:
            w = multiply(w, members[f])
        return w

    def is_left_greedy(self, nf: NormalForm) -> bool:
        div = self._div_left
        for a, b in zip(nf.factors, nf.factors[1:]):
            common = div[self.comp_left[a]] & div[b]
            if common.bit_length() - 1 != self.identity:
                return False
        return all(f not in (self.identity, self.delta) for f in nf.factors)

    def words_equal(self, w1, w2) -> bool:
        return self.normal_form(w1) == self.normal_form(w2)


def build_garside(interval: Interval, check_lattice: bool = True) -> GarsideStructure:
    """Garside tables over a verified interval.

    check_lattice may be disabled when the same interval was already
    verified in this process; the meet shortcut in normalize_pair relies on
    the lattice property.
    """
    if check_lattice:
        report = verify_lattice(interval)
        if not report.all_ok:
            from .interval import LatticeViolationError

            raise LatticeViolationError(report.counterexample)
    return GarsideStructure(interval)


@lru_cache(maxsize=None)
def cached_garside(e: int, n: int, k: int) -> GarsideStructure:
    return build_garside(cached_interval(e, n, k))


# -- presentations ----------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Presentation:
    generators: tuple[Generator, ...]
    relations: tuple[tuple[tuple[Generator, ...], tuple[Generator, ...]], ...]


def emit_presentation(params: GroupParams) -> Presentation:
    """Defining relations of the monoid attached to (e, n, k).

    Dual relations are emitted with the fixed right side i = 0, giving e-1
    independent instances instead of a quadratic list.
    """
    if params.k is None:
        raise ValueError("presentation needs params.k")
    e, n, k = params.e, params.n, params.k
    t = lambda i: Generator("t", i % e)
    s = lambda j: Generator("s", j)
    gens = tuple(atoms(params))
    relations = []
    for i in range(3, n):
        relations.append(((s(i), s(i + 1), s(i)), (s(i + 1), s(i), s(i + 1))))
    for i in range(3, n + 1):
        for j in range(i + 2, n + 1):
            relations.append(((s(i), s(j)), (s(j), s(i))))
    if n >= 3:
        for i in range(e):
            relations.append(((s(3), t(i), s(3)), (t(i), s(3), t(i))))
    for j in range(4, n + 1):
        for i in range(e):
            relations.append(((s(j), t(i)), (t(i), s(j))))
    for i in range(1, e):
        relations.append(((t(i), t(i - k)), (t(0), t(-k))))
    return Presentation(gens, tuple(relations))


def is_defining_relation(
    lhs: tuple[Generator, ...], rhs: tuple[Generator, ...], params: GroupParams
) -> bool:
    """Whether lhs = rhs is an instance of one of the five relation families."""
    e, n, k = params.e, params.n, params.k
    if len(lhs) != len(rhs):
        return False
    for u, v in ((lhs, rhs), (rhs, lhs)):
        if len(u) == 2:
            a, b = u
            c, d = v
            if {a.kind, b.kind} == {"t"} and {c.kind, d.kind} == {"t"}:
                if (a.index - b.index) % e == k and (c.index - d.index) % e == k:
                    return True
            if (a, b) == (d, c):
                if a.kind == "s" and b.kind == "s" and abs(a.index - b.index) > 1:
                    return True
                pair = {a.kind: a, b.kind: b}
                if set(pair) == {"s", "t"} and pair["s"].index >= 4:
                    return True
        elif len(u) == 3:
            a, b, c = u
            if v == (b, a, b) and a != b:
                if a.kind == "s" and b.kind == "s" and abs(a.index - b.index) == 1:
                    return True
                kinds = {a.kind, b.kind}
                if kinds == {"s", "t"} and (a if a.kind == "s" else b).index == 3:
                    return True
    return False


def t_cycle_components(e: int, k: int) -> int:
    """Connected components of the graph on Z/eZ with edges {i, i-k}."""
    if not 1 <= k <= e - 1:
        raise ValueError(f"k must satisfy 1 <= k <= e-1, got {k}")
    seen = [False] * e
    components = 0
    for start in range(e):
        if seen[start]:
            continue
        components += 1
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            for w in ((v - k) % e, (v + k) % e):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return components


def is_isomorphic_to_CP(
    e: int, k: int, n: int = 3
) -> tuple[bool, dict[Generator, Generator] | None]:
    """Decide isomorphism with the k = 1 monoid; produce and check a witness.

    For gcd(k, e) = 1 the witness fixes the s-generators and sends t_i to
    t_{(i+1)k}; for k = 1 the identity map is returned.  The witness is
    checked to be a bijection on generators sending every defining relation
    of the k = 1 presentation to a defining relation of the target.
    """
    if not 1 <= k <= e - 1:
        raise ValueError(f"k must satisfy 1 <= k <= e-1, got {k}")
    if math.gcd(e, k) != 1:
        return False, None
    if k == 1:
        witness = {x: x for x in atoms(GroupParams(e, n, k))}
    else:
        witness = {}
        for x in atoms(GroupParams(e, n, k)):
            if x.kind == "t":
                witness[x] = Generator("t", ((x.index + 1) * k) % e)
            else:
                witness[x] = x
    if sorted(map(str, witness.values())) != sorted(map(str, witness.keys())):
        raise TheoremViolationError("witness map is not a bijection on generators")
    source = emit_presentation(GroupParams(e, n, 1))
    target_params = GroupParams(e, n, k)
    for lhs, rhs in source.relations:
        mapped_l = tuple(witness[x] for x in lhs)
        mapped_r = tuple(witness[x] for x in rhs)
        if not is_defining_relation(mapped_l, mapped_r, target_params):
            raise TheoremViolationError(
                f"witness sends {lhs} = {rhs} to a non-relation"
            )
    return True, witness


# -- rewriting and embeddings ------------------------------------------------


def matsumoto_check(g: GarsideStructure, w: GroupElement, cap: int = 10**5) -> bool:
    """All reduced expressions of a member form one class under the relations.

    BFS over words, applying every defining relation at every position in
    both directions.  Relations preserve letter count and group image, so the
    closure can only contain reduced expressions of w; the check is that it
    contains all of them.
    """
    params = g.params
    expressions = all_reduced_expressions(w, params, cap=cap)
    target = set(expressions)
    moves = []
    for lhs, rhs in emit_presentation(params).relations:
        moves.append((lhs, rhs))
        moves.append((rhs, lhs))
    start = expressions[0]
    seen = {start}
    frontier = [start]
    while frontier:
        word = frontier.pop()
        for lhs, rhs in moves:
            width = len(lhs)
            for pos in range(len(word) - width + 1):
                if word[pos : pos + width] == lhs:
                    new = word[:pos] + rhs + word[pos + width :]
                    if new not in seen:
                        if len(seen) >= cap:
                            raise CapExceededError(
                                f"rewriting closure exceeded {cap} words"
                            )
                        seen.add(new)
                        frontier.append(new)
    return seen == target


def type_b_coxeter_matrix(rank: int) -> dict[tuple[int, int], int]:
    """Coxeter entries m(a, b) of the type-B Artin group on q_1..q_rank."""
    m = {}
    for a in range(1, rank + 1):
        for b in range(a + 1, rank + 1):
            if (a, b) == (1, 2):
                m[(a, b)] = 4
            elif b == a + 1:
                m[(a, b)] = 3
            else:
                m[(a, b)] = 2
    return m


def embedding_images(g: GarsideStructure, i: int) -> list[tuple[Generator, ...]]:
    """Images of q_1..q_{n-1}: q_1 -> t_i t_{i-k}, q_m -> s_{m+1}."""
    e, n, k = g.params.e, g.params.n, g.params.k
    images: list[tuple[Generator, ...]] = [
        (Generator("t", i % e), Generator("t", (i - k) % e))
    ]
    for m in range(2, n):
        images.append((Generator("s", m + 1),))
    return images


def embedding_lcm_check(g: GarsideStructure, i: int = 0) -> bool:
    """lcm compatibility of the type-B embedding, pair by pair.

    For each generator pair of the Artin group, the join (both sides agree)
    of the image simples must normalize to the image of the alternating
    Artin lcm word.
    """
    params = g.params
    if params.n < 3:
        raise ValueError("the embedded Artin group needs n >= 3")
    images = embedding_images(g, i)
    rank = len(images)
    interval = g.interval
    ordinals = [
        interval.index[evaluate_word(img, params)] for img in images
    ]
    coxeter = type_b_coxeter_matrix(rank)
    for (a, b), m in coxeter.items():
        word: tuple[Generator, ...] = ()
        for step in range(m):
            word += images[a - 1] if step % 2 == 0 else images[b - 1]
        expected = g.normal_form([(x, 1) for x in word])
        join_left = interval.join("left", ordinals[a - 1], ordinals[b - 1])
        join_right = interval.join("right", ordinals[a - 1], ordinals[b - 1])
        if join_left != join_right:
            return False
        if g.nf_of_simple(join_left) != expected:
            return False
    return True
