"""Classical graph automorphisms by exhaustive backtracking.

Sized for small graphs: the search enumerates every automorphism, so
callers must stay under a hard vertex bound.  Element lists are only
exposed for very small graphs; larger ones get order and generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graphs import Graph, kneser_vertices

# Full enumeration is exponential in the worst case; refuse beyond this.
MAX_AUT_VERTICES = 16
# Element lists above this size are withheld to keep results small.
MAX_LISTED_VERTICES = 12


@dataclass(frozen=True)
class Permutation:
    """Permutation of 1..n stored in one-line notation.

    ``images[v - 1]`` is the image of v.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        if not 1 <= v <= len(self.images):
            raise ValueError(f"point {v} out of range 1..{len(self.images)}")
        return self.images[v - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Return self after other: (self.compose(other))(v) == self(other(v))."""
        if other.degree != self.degree:
            raise ValueError("cannot compose permutations of different degrees")
        return Permutation(tuple(self.images[w - 1] for w in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for v, w in enumerate(self.images, start=1):
            inv[w - 1] = v
        return Permutation(tuple(inv))

    def one_line(self) -> str:
        return " ".join(str(w) for w in self.images)


@dataclass(frozen=True)
class AutGroup:
    """Automorphism group given by order, generators and maybe elements."""

    order: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...] | None


def is_automorphism(g: Graph, perm: Permutation) -> bool:
    """Check that perm preserves adjacency of g."""
    if perm.degree != g.n:
        return False
    adj1 = g.adj1
    img = perm.images
    for u in g.vertices():
        iu = img[u - 1]
        row = adj1[u]
        irow = adj1[iu]
        for v in range(u + 1, g.n + 1):
            if row[v] != irow[img[v - 1]]:
                return False
    return True


def _invariant_classes(g: Graph) -> list[tuple]:
    """Per-vertex invariant preserved by any automorphism, 1-based."""
    degs = [0] + [g.degree(u) for u in g.vertices()]
    classes: list[tuple] = [()]
    for u in g.vertices():
        classes.append((degs[u], tuple(sorted(degs[w] for w in g.neighbors(u)))))
    return classes


def automorphism_group(g: Graph, *, bound: int = MAX_AUT_VERTICES) -> AutGroup:
    """Enumerate Aut(g) by backtracking.

    Raises ValueError when g has more than ``bound`` vertices.  Results
    are deterministic: elements are found in lexicographic order of
    their one-line form.
    """
    if g.n > bound:
        raise ValueError(
            f"automorphism search supports at most {bound} vertices, got {g.n}"
        )
    inv = _invariant_classes(g)
    candidates = [
        ()
        if u == 0
        else tuple(w for w in g.vertices() if inv[w] == inv[u])
        for u in range(g.n + 1)
    ]
    adj1 = g.adj1
    n = g.n
    img = [0] * (n + 1)
    used = [False] * (n + 1)
    found: list[Permutation] = []

    def extend(u: int):
        if u > n:
            found.append(Permutation(tuple(img[1:])))
            return
        row = adj1[u]
        for w in candidates[u]:
            if used[w]:
                continue
            wrow = adj1[w]
            if all(row[v] == wrow[img[v]] for v in range(1, u)):
                img[u] = w
                used[w] = True
                extend(u + 1)
                used[w] = False
        img[u] = 0

    extend(1)
    elements = tuple(found)
    gens = _generating_subset(elements)
    listed = elements if n <= MAX_LISTED_VERTICES else None
    return AutGroup(order=len(elements), generators=gens, elements=listed)


def _generating_subset(elements: tuple[Permutation, ...]) -> tuple[Permutation, ...]:
    """Greedy generating set: adjoin the first element not yet generated."""
    if not elements:
        return ()
    n = elements[0].degree
    ident = Permutation.identity(n)
    gens: list[Permutation] = []
    closure = {ident.images}
    for elem in elements:
        if elem.images in closure:
            continue
        gens.append(elem)
        frontier = [ident]
        closure = {ident.images}
        while frontier:
            nxt = []
            for p in frontier:
                for q in gens:
                    r = p.compose(q)
                    if r.images not in closure:
                        closure.add(r.images)
                        nxt.append(r)
            frontier = nxt
    return tuple(gens)


def induced_two_subset_map(base: Permutation) -> Permutation:
    """Map on lexicographically ordered 2-subsets of {1..5} induced by base."""
    if base.degree != 5:
        raise ValueError(f"base permutation must act on 1..5, got degree {base.degree}")
    subsets = kneser_vertices(5, 2)
    index = {s: i + 1 for i, s in enumerate(subsets)}
    images = tuple(
        index[tuple(sorted((base(a), base(b))))] for a, b in subsets
    )
    return Permutation(images)


def verify_s5_action(g: Graph) -> bool:
    """Check that permuting {1..5} accounts for every automorphism of g.

    The graph must have 10 vertices labeled by the 2-subsets of {1..5}
    in lexicographic order.  True iff all 120 base permutations induce
    pairwise distinct automorphisms and the full group has order 120,
    so the induced maps exhaust it.
    """
    if g.n != 10:
        raise ValueError(f"expected a 10-vertex graph, got n={g.n}")
    induced = [
        induced_two_subset_map(Permutation(p))
        for p in permutations(range(1, 6))
    ]
    if not all(is_automorphism(g, perm) for perm in induced):
        return False
    if len({perm.images for perm in induced}) != 120:
        return False
    return automorphism_group(g).order == 120
