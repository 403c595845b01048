"""Brute-force oracles, independent of the closed forms.

Twisted Burnside counting
    For a finite group ``G`` permuting the markings of a product of genus-0
    configuration spaces, the number of F_q-points of the quotient is
    ``(1/|G|) sum_g #{x : Frob(x) = g.x}``.  Each twisted count is a
    polynomial in ``q`` (labelled points of P^1 by exact Frobenius degree,
    divided by ``|PGL_2(F_q)| = q^3 - q``), and the quotient's Euler
    characteristic is the average evaluated at ``q = 1``.

Stable rooted trees
    Explicit enumeration of rooted trees on labelled leaves whose vertices
    all have valence at least 3, weighted by ``prod chi(M_{0,val(v)})``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable, Iterator, Sequence

from sympy import divisors, mobius

from .algebra import Polynomial
from .errors import DomainError, VerificationError
from .moduli import chi_m0_open
from .quotients import QuotientKind, QuotientSpec

__all__ = [
    "UnsupportedFactorError",
    "MarkedPermutation",
    "PermutationGroupAction",
    "exact_degree_count",
    "twisted_count",
    "burnside_polynomial",
    "burnside_quotient_chi",
    "action_for_spec",
    "klein_action",
    "d4_action",
    "symmetric_action",
    "StableTree",
    "iter_stable_rooted_trees",
    "enumerate_stable_rooted_trees",
    "tree_weight",
    "tree_statistics",
    "tree_contribution_sum",
]

PGL2_ORDER = Polynomial([0, -1, 0, 1])  # q^3 - q


class UnsupportedFactorError(DomainError):
    """The oracle only handles products of genus-0 configuration spaces."""


# --------------------------------------------------------------------------
# Permutations and group actions
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class MarkedPermutation:
    """A permutation of markings ``1..n``; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]
    cycle_type: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {images}")
        object.__setattr__(self, "images", images)
        seen = [False] * n
        lengths = []
        for start in range(n):
            if seen[start]:
                continue
            length, i = 0, start
            while not seen[i]:
                seen[i] = True
                i = images[i] - 1
                length += 1
            lengths.append(length)
        object.__setattr__(self, "cycle_type", tuple(sorted(lengths, reverse=True)))

    @classmethod
    def identity(cls, n: int) -> MarkedPermutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> MarkedPermutation:
        images = list(range(1, n + 1))
        used: set[int] = set()
        for cyc in cycles:
            cyc = list(cyc)
            for a in cyc:
                if not 1 <= a <= n or a in used:
                    raise ValueError(f"bad cycle {cyc} for n={n}")
                used.add(a)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse_cycles(cls, n: int, text: str) -> MarkedPermutation:
        """Parse cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` is the identity."""
        text = text.strip()
        cycles = []
        for chunk in text.replace(")", ")\0").split("\0"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise ValueError(f"malformed cycle notation: {text!r}")
            body = chunk[1:-1].replace(",", " ").split()
            if body:
                cycles.append([int(x) for x in body])
        return cls.from_cycles(n, cycles)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: MarkedPermutation) -> MarkedPermutation:
        """Composition ``self o other`` (apply ``other`` first)."""
        if self.n != other.n:
            raise ValueError("permutations act on different marking sets")
        return MarkedPermutation(tuple(self.images[other.images[i] - 1] for i in range(self.n)))

    def inverse(self) -> MarkedPermutation:
        inv = [0] * self.n
        for i, a in enumerate(self.images, start=1):
            inv[a - 1] = i
        return MarkedPermutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(a == i for i, a in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


Element = tuple[MarkedPermutation, ...]


def _compose(a: Element, b: Element) -> Element:
    return tuple(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class PermutationGroupAction:
    """A finite group acting factorwise on ``M_{0,n_1} x ... x M_{0,n_k}``.

    ``elements`` lists group elements, each a tuple with one permutation per
    factor.  ``weights`` gives the number of group elements each entry stands
    for: all ones for an extensional group, conjugacy-class sizes when a
    large symmetric group is stored one representative per cycle type.
    """

    factors: tuple[int, ...]
    elements: tuple[Element, ...]
    weights: tuple[int, ...]
    label: str = ""

    @property
    def order(self) -> int:
        return sum(self.weights)

    @property
    def extensional(self) -> bool:
        return all(w == 1 for w in self.weights)

    @classmethod
    def generated(
        cls, factors: Sequence[int], generators: Iterable[Element], label: str = ""
    ) -> PermutationGroupAction:
        """Close a set of generators under composition."""
        factors = tuple(factors)
        for n in factors:
            if n < 3:
                raise DomainError(f"factor M_0,{n} is not defined (need n >= 3)")
        gens = [tuple(g) for g in generators]
        for g in gens:
            if len(g) != len(factors) or any(p.n != n for p, n in zip(g, factors)):
                raise ValueError("generator does not match the factor sizes")
        identity = tuple(MarkedPermutation.identity(n) for n in factors)
        elements = [identity]
        seen = {identity}
        frontier = [identity]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = _compose(g, x)
                    if y not in seen:
                        seen.add(y)
                        elements.append(y)
                        new.append(y)
            frontier = new
        return cls(factors, tuple(elements), (1,) * len(elements), label)

    def check_group(self) -> None:
        """Verify identity, closure and inverses (extensional groups only)."""
        if not self.extensional:
            raise ValueError("group axioms are checked on extensional groups only")
        members = set(self.elements)
        identity = tuple(MarkedPermutation.identity(n) for n in self.factors)
        if identity not in members:
            raise VerificationError("identity missing")
        for a in self.elements:
            if tuple(p.inverse() for p in a) not in members:
                raise VerificationError(f"inverse of {a} missing")
            for b in self.elements:
                if _compose(a, b) not in members:
                    raise VerificationError("not closed under composition")


def _swap(n: int, a: int, b: int) -> MarkedPermutation:
    return MarkedPermutation.from_cycles(n, [(a, b)])


def klein_action(n: int) -> PermutationGroupAction:
    """S_2 x S_2 swapping markings (n-3, n-2) and (n-1, n)."""
    if n < 4:
        raise DomainError(f"Klein action needs n >= 4, got {n}")
    return PermutationGroupAction.generated(
        (n,), [(_swap(n, n - 3, n - 2),), (_swap(n, n - 1, n),)], label=f"klein on M_0,{n}"
    )


def d4_action(n: int) -> PermutationGroupAction:
    """D_4 generated by (1 2) and (1 3)(2 4)."""
    if n < 4:
        raise DomainError(f"D4 action needs n >= 4, got {n}")
    sigma = _swap(n, 1, 2)
    tau = MarkedPermutation.from_cycles(n, [(1, 3), (2, 4)])
    return PermutationGroupAction.generated((n,), [(sigma,), (tau,)], label=f"d4 on M_0,{n}")


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _class_size(shape: tuple[int, ...]) -> int:
    j = sum(shape)
    denom = 1
    for length in set(shape):
        c = shape.count(length)
        denom *= length**c * factorial(c)
    return factorial(j) // denom


def symmetric_action(n: int, j: int) -> PermutationGroupAction:
    """S_j permuting the last ``j`` markings of M_{0,n}, one entry per cycle type."""
    if n < 3:
        raise DomainError(f"M_0,{n} is not defined (need n >= 3)")
    if not 0 <= j <= n:
        raise DomainError(f"need 0 <= j <= n, got n={n}, j={j}")
    elements, weights = [], []
    for shape in _partitions(j):
        cycles, start = [], n - j + 1
        for length in shape:
            cycles.append(list(range(start, start + length)))
            start += length
        elements.append((MarkedPermutation.from_cycles(n, cycles),))
        weights.append(_class_size(shape))
    return PermutationGroupAction((n,), tuple(elements), tuple(weights), f"S_{j} on M_0,{n}")


def action_for_spec(spec: QuotientSpec) -> PermutationGroupAction:
    """The concrete group action behind a genus-0 quotient table entry."""
    k, s = spec.kind, spec.sizes
    if not k.genus0:
        raise UnsupportedFactorError(
            f"{k.value} has an elliptic factor; point counts are not polynomial in q"
        )
    if k is QuotientKind.M0ModSj:
        return symmetric_action(s[0], spec.j)
    if k is QuotientKind.M0ModKlein:
        return klein_action(s[0])
    if k is QuotientKind.M0ModD4:
        return d4_action(s[0])
    if k in (QuotientKind.Prod2ModS2, QuotientKind.Prod2ModS3):
        n1, n2 = s
        if k is QuotientKind.Prod2ModS2:
            gens = [(_swap(n1, n1 - 1, n1), _swap(n2, n2 - 1, n2))]
        else:
            gens = [
                (_swap(n1, n1 - 1, n1), _swap(n2, n2 - 1, n2)),
                (
                    MarkedPermutation.from_cycles(n1, [(n1 - 2, n1 - 1, n1)]),
                    MarkedPermutation.from_cycles(n2, [(n2 - 2, n2 - 1, n2)]),
                ),
            ]
        return PermutationGroupAction.generated(s, gens, label=f"{k.value}{s}")
    if k is QuotientKind.Prod2ModKlein:
        n1, n2 = s
        if n2 < 4:
            raise DomainError(f"second factor needs two marked pairs, got n2={n2}")
        gens = [
            (_swap(n1, n1 - 1, n1), _swap(n2, n2 - 3, n2 - 2)),
            (MarkedPermutation.identity(n1), _swap(n2, n2 - 1, n2)),
        ]
        return PermutationGroupAction.generated(s, gens, label=f"{k.value}{s}")
    n1, n2, n3 = s
    if n3 < 4:
        raise DomainError(f"third factor needs two marked pairs, got n3={n3}")
    gens = [
        (_swap(n1, n1 - 1, n1), MarkedPermutation.identity(n2), _swap(n3, n3 - 3, n3 - 2)),
        (MarkedPermutation.identity(n1), _swap(n2, n2 - 1, n2), _swap(n3, n3 - 1, n3)),
    ]
    return PermutationGroupAction.generated(s, gens, label=f"{k.value}{s}")


# --------------------------------------------------------------------------
# Twisted point counts
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def exact_degree_count(length: int) -> Polynomial:
    """Points of P^1 over the algebraic closure with Frobenius orbit of size exactly ``length``."""
    if length < 1:
        raise DomainError(f"orbit length must be positive, got {length}")
    total = Polynomial()
    for e in divisors(length):
        mu = int(mobius(length // e))
        if mu:
            total = total + mu * (Polynomial.monomial(e) + 1)
    return total


@lru_cache(maxsize=None)
def _twisted_count_by_type(n: int, cycle_type: tuple[int, ...]) -> Polynomial:
    configs = Polynomial.constant(1)
    for length in set(cycle_type):
        m = exact_degree_count(length)
        for t in range(cycle_type.count(length)):
            # each earlier l-cycle has used up one full Frobenius orbit of size l
            configs = configs * (m - t * length)
    try:
        return configs.exact_div(PGL2_ORDER)
    except ArithmeticError as exc:
        raise VerificationError(f"twisted count for n={n}, type {cycle_type}: {exc}") from exc


def twisted_count(n: int, sigma: MarkedPermutation) -> Polynomial:
    """F_q-points of M_{0,n} twisted by ``sigma``, as a polynomial in q."""
    if n < 3:
        raise DomainError(f"M_0,{n} is not defined (need n >= 3)")
    if sigma.n != n:
        raise ValueError(f"permutation acts on {sigma.n} markings, expected {n}")
    return _twisted_count_by_type(n, sigma.cycle_type)


def burnside_polynomial(action: PermutationGroupAction) -> Polynomial:
    """Point count ``P(q)`` of the quotient, averaged over the group."""
    total = Polynomial()
    for element, weight in zip(action.elements, action.weights):
        term = Polynomial.constant(weight)
        for n, sigma in zip(action.factors, element):
            term = term * twisted_count(n, sigma)
        total = total + term
    return total * Fraction(1, action.order)


def burnside_quotient_chi(action: PermutationGroupAction) -> Fraction:
    return burnside_polynomial(action)(1)


# --------------------------------------------------------------------------
# Stable rooted trees
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class StableTree:
    """A vertex with its leaf labels and child subtrees.

    The root carries one extra unlabelled half-edge; every other vertex has
    its edge to the parent, so ``valence`` always counts one upward half-edge.
    Children are ordered by smallest leaf label.
    """

    leaves: tuple[int, ...]
    children: tuple[StableTree, ...] = ()

    @property
    def valence(self) -> int:
        return len(self.leaves) + len(self.children) + 1

    def vertices(self) -> Iterator[StableTree]:
        yield self
        for child in self.children:
            yield from child.vertices()

    def labels(self) -> list[int]:
        out = list(self.leaves)
        for child in self.children:
            out.extend(child.labels())
        return sorted(out)

    def is_stable(self) -> bool:
        return all(v.valence >= 3 for v in self.vertices())

    def __str__(self) -> str:
        parts = [str(x) for x in self.leaves] + [str(c) for c in self.children]
        return "[" + " ".join(parts) + "]"


def _set_partitions(items: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
    """Set partitions of ``items``, blocks ordered by first element."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [(first,)] + part
        for i, block in enumerate(part):
            yield part[:i] + [(first,) + block] + part[i + 1 :]


def _sort_blocks(blocks: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])


def _weighted_trees(labels: tuple[int, ...], memo: dict) -> Iterator[tuple[StableTree, int]]:
    """Trees on ``labels`` paired with their vertex-weight product."""
    for blocks in _set_partitions(labels):
        if len(blocks) < 2:
            continue
        blocks = _sort_blocks(blocks)
        leaves = tuple(b[0] for b in blocks if len(b) == 1)
        root_weight = _chi_m0_int(len(blocks) + 1)
        options = []
        for b in blocks:
            if len(b) > 1:
                if b not in memo:
                    memo[b] = tuple(_weighted_trees(b, memo))
                options.append(memo[b])
        for kids in product(*options):
            w = root_weight
            for _, kw in kids:
                w *= kw
            yield StableTree(leaves, tuple(k for k, _ in kids)), w


def _chi_m0_int(n: int) -> int:
    return int(chi_m0_open(n))


def iter_stable_rooted_trees(labels: Iterable[int]) -> Iterator[StableTree]:
    """Yield every stable rooted tree on ``labels`` exactly once."""
    labels = tuple(sorted(labels))
    if len(labels) < 2:
        raise DomainError("a stable rooted tree needs at least two leaves")
    for tree, _ in _weighted_trees(labels, {}):
        yield tree


def enumerate_stable_rooted_trees(n: int) -> list[StableTree]:
    if n < 2:
        raise DomainError(f"need n >= 2 leaves, got {n}")
    return list(iter_stable_rooted_trees(range(1, n + 1)))


def tree_weight(tree: StableTree) -> Fraction:
    """prod over vertices of chi(M_{0, valence})."""
    w = Fraction(1)
    for v in tree.vertices():
        w *= chi_m0_open(v.valence)
    return w


def tree_statistics(n: int) -> tuple[int, Fraction]:
    """Number of stable rooted trees with ``n`` leaves and the sum of their weights."""
    if n < 2:
        raise DomainError(f"need n >= 2 leaves, got {n}")
    count = total = 0
    # subtree weights are computed once and reused wherever a subtree recurs
    for _, w in _weighted_trees(tuple(range(1, n + 1)), {}):
        count += 1
        total += w
    return count, Fraction(total)


def tree_contribution_sum(n: int) -> Fraction:
    """Sum over stable rooted trees with ``n`` leaves of ``prod_v chi(M_{0,val(v)})``."""
    return tree_statistics(n)[1]
