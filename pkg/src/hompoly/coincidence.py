"""Coincidence graphs of a planar hom count and their determinants.

A candidate coincidence pattern among seven facet equations is a
bipartite graph on facet indices (part A) and vertex indices (part B)
with exactly seven edges.  Patterns survive four rejection rules (no
node of degree three or more on either side, no 4-cycle, no 6-cycle)
precisely when the graph is a vertex-disjoint union of paths; there are
exactly 31 such graphs up to isomorphism keeping the parts apart.

For each surviving graph the seven equations assemble into a 7 by 7
generic matrix whose determinant must not vanish identically.  A single
exact nonzero evaluation at a rational point certifies that, so the
certificate is an assignment (small primes in a documented order) plus
the determinant value there.  A symbolic determinant over the sparse
polynomial ring is provided as an independent cross-check route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations, product

from .linalg import Matrix, mat_det

Monomial = tuple[int, ...]
Poly = dict[Monomial, int]

Edge = tuple[int, int]


@dataclass(frozen=True)
class CoincidenceGraph:
    """Seven bipartite edges; nodes exist exactly where edges touch them."""

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if len(self.edges) != 7:
            raise ValueError("a coincidence graph has exactly seven edges")
        if len(set(self.edges)) != 7:
            raise ValueError("edge pairs must be pairwise distinct")

    @property
    def a_nodes(self) -> tuple[int, ...]:
        return tuple(sorted({a for a, _ in self.edges}))

    @property
    def b_nodes(self) -> tuple[int, ...]:
        return tuple(sorted({b for _, b in self.edges}))


# -- enumeration --------------------------------------------------------

# a path component is typed by its edge count and, when that count is
# even, by the part holding both endpoints; odd paths are symmetric
_FLAVOR_RANK = {None: 0, "A": 1, "B": 2}

PathType = tuple[int, str | None]


def _partitions(total: int, largest: int | None = None) -> list[tuple[int, ...]]:
    if largest is None:
        largest = total
    if total == 0:
        return [()]
    out = []
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            out.append((part,) + rest)
    return out


def _typed_multisets(total: int) -> list[tuple[PathType, ...]]:
    """All multisets of typed paths with the given total edge count."""
    results = []
    for partition in _partitions(total):
        groups: dict[int, int] = {}
        for part in partition:
            groups[part] = groups.get(part, 0) + 1
        per_value: list[list[tuple[PathType, ...]]] = []
        for value in sorted(groups, reverse=True):
            count = groups[value]
            if value % 2:
                per_value.append([((value, None),) * count])
            else:
                per_value.append(
                    [
                        tuple((value, flavor) for flavor in chosen)
                        for chosen in combinations_with_replacement(
                            ("A", "B"), count
                        )
                    ]
                )
        for chosen in product(*per_value):
            multiset = tuple(
                sorted(
                    (t for group in chosen for t in group),
                    key=lambda t: (-t[0], _FLAVOR_RANK[t[1]]),
                )
            )
            results.append(multiset)
    return results


def _materialize(multiset: tuple[PathType, ...]) -> CoincidenceGraph:
    edges: list[Edge] = []
    next_a = 0
    next_b = 0
    for length, flavor in multiset:
        start_in_a = flavor != "B"
        walk: list[tuple[str, int]] = []
        side = start_in_a
        for _ in range(length + 1):
            if side:
                walk.append(("A", next_a))
                next_a += 1
            else:
                walk.append(("B", next_b))
                next_b += 1
            side = not side
        for (part1, n1), (part2, n2) in zip(walk, walk[1:]):
            if part1 == "A":
                edges.append((n1, n2))
            else:
                edges.append((n2, n1))
    return CoincidenceGraph(tuple(edges))


def path_multiset(g: CoincidenceGraph) -> tuple[PathType, ...]:
    """Decompose an accepted graph into its typed path components.

    Raises ValueError when the graph is not a disjoint union of paths;
    use :func:`reject_reason` first.
    """
    if reject_reason(g) != "accepted":
        raise ValueError("graph is not a disjoint union of paths")
    adjacency: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for a, b in g.edges:
        adjacency.setdefault(("A", a), []).append(("B", b))
        adjacency.setdefault(("B", b), []).append(("A", a))
    seen: set[tuple[str, int]] = set()
    types: list[PathType] = []
    for node in sorted(adjacency):
        if node in seen or len(adjacency[node]) != 1:
            continue
        # walk from one endpoint to the other
        walk = [node]
        seen.add(node)
        current = node
        while True:
            nxt = next(
                (nb for nb in adjacency[current] if nb not in seen), None
            )
            if nxt is None:
                break
            walk.append(nxt)
            seen.add(nxt)
            current = nxt
        length = len(walk) - 1
        flavor = walk[0][0] if length % 2 == 0 else None
        types.append((length, flavor))
    if len(seen) != len(adjacency):
        raise ValueError("graph is not a disjoint union of paths")
    return tuple(sorted(types, key=lambda t: (-t[0], _FLAVOR_RANK[t[1]])))


def canonical_encoding(g: CoincidenceGraph) -> str:
    """Stable text form of an accepted graph: its path multiset."""
    parts = []
    for length, flavor in path_multiset(g):
        parts.append(f"{length}{flavor}" if flavor else str(length))
    return "+".join(parts)


def enumerate_graphs() -> list[CoincidenceGraph]:
    """All accepted graphs up to part-preserving isomorphism.

    Generated directly as typed path multisets, so the count (31) is an
    output of the combinatorics, not an input.
    """
    multisets = sorted(
        _typed_multisets(7),
        key=lambda ms: tuple((-e, _FLAVOR_RANK[f]) for e, f in ms),
    )
    return [_materialize(ms) for ms in multisets]


# -- rejection rules ----------------------------------------------------


def _has_cycle(g: CoincidenceGraph, half: int) -> bool:
    """Whether the graph contains a cycle of length 2*half, exhaustively."""
    a_nodes = g.a_nodes
    b_nodes = g.b_nodes
    edge_set = set(g.edges)
    for a_sel in combinations(a_nodes, half):
        for b_sel in combinations(b_nodes, half):
            # a cycle alternates a_sel and b_sel in some order; fix the
            # first a-node, try all arrangements of the rest
            for a_perm in permutations(a_sel[1:]):
                cycle_a = (a_sel[0],) + a_perm
                for b_perm in permutations(b_sel):
                    ok = True
                    for k in range(half):
                        if (cycle_a[k], b_perm[k]) not in edge_set:
                            ok = False
                            break
                        if (cycle_a[(k + 1) % half], b_perm[k]) not in edge_set:
                            ok = False
                            break
                    if ok:
                        return True
    return False


def reject_reason(g: CoincidenceGraph) -> str:
    """Classify a seven-edge graph: ``accepted`` or ``rejected(rule k)``.

    Rules in order: an A-node of degree three or more (1), a B-node of
    degree three or more (2), a 4-cycle (3), a 6-cycle (4).  Graphs
    passing all four are exactly the disjoint unions of paths.
    """
    a_degree: dict[int, int] = {}
    b_degree: dict[int, int] = {}
    for a, b in g.edges:
        a_degree[a] = a_degree.get(a, 0) + 1
        b_degree[b] = b_degree.get(b, 0) + 1
    if any(d > 2 for d in a_degree.values()):
        return "rejected(rule 1)"
    if any(d > 2 for d in b_degree.values()):
        return "rejected(rule 2)"
    if _has_cycle(g, 2):
        return "rejected(rule 3)"
    if _has_cycle(g, 3):
        return "rejected(rule 4)"
    return "accepted"


# -- generic matrix -----------------------------------------------------


@dataclass(frozen=True)
class GenericMatrix:
    """The 7x7 matrix of one graph over its shared variables.

    ``variables`` fixes the evaluation order: s and t for each B-node in
    sorted order, then u and v for each A-node.  ``entries`` holds
    sparse polynomials keyed by sorted variable-index monomials.
    """

    variables: tuple[str, ...]
    entries: tuple[tuple[tuple[tuple[Monomial, int], ...], ...], ...]

    def entry(self, row: int, col: int) -> Poly:
        return dict(self.entries[row][col])


def build_generic_matrix(g: CoincidenceGraph) -> GenericMatrix:
    """Assemble the matrix; rows share variables exactly per coincidences."""
    if reject_reason(g) != "accepted":
        raise ValueError("matrix is only defined for accepted graphs")
    names: list[str] = []
    index: dict[str, int] = {}
    for b in g.b_nodes:
        for prefix in ("s", "t"):
            name = f"{prefix}{b}"
            index[name] = len(names)
            names.append(name)
    for a in g.a_nodes:
        for prefix in ("u", "v"):
            name = f"{prefix}{a}"
            index[name] = len(names)
            names.append(name)
    rows = []
    for a, b in g.edges:
        s, t = index[f"s{b}"], index[f"t{b}"]
        u, v = index[f"u{a}"], index[f"v{a}"]
        row = (
            {tuple(sorted((u, s))): 1},
            {tuple(sorted((u, t))): 1},
            {(u,): 1},
            {tuple(sorted((v, s))): 1},
            {tuple(sorted((v, t))): 1},
            {(v,): 1},
            {(): -1},
        )
        rows.append(tuple(tuple(sorted(p.items())) for p in row))
    return GenericMatrix(variables=tuple(names), entries=tuple(rows))


# -- polynomial helpers -------------------------------------------------


def poly_add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for mono, coeff in b.items():
        new = out.get(mono, 0) + coeff
        if new:
            out[mono] = new
        else:
            out.pop(mono, None)
    return out


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for mono_a, ca in a.items():
        for mono_b, cb in b.items():
            mono = tuple(sorted(mono_a + mono_b))
            new = out.get(mono, 0) + ca * cb
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
    return out


def poly_scale(a: Poly, factor: int) -> Poly:
    if factor == 0:
        return {}
    return {mono: coeff * factor for mono, coeff in a.items()}


def poly_eval(a: Poly, values: tuple[Fraction, ...]) -> Fraction:
    total = Fraction(0)
    for mono, coeff in a.items():
        term = Fraction(coeff)
        for var in mono:
            term *= values[var]
        total += term
    return total


# -- certification ------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """A rational point where one graph's determinant is provably nonzero."""

    encoding: str
    variables: tuple[str, ...]
    point: tuple[Fraction, ...]
    det_value: Fraction
    attempts: int


MAX_CERTIFICATE_ATTEMPTS = 32


def _first_primes(count: int) -> list[int]:
    found: list[int] = []
    candidate = 2
    while len(found) < count:
        if all(candidate % p for p in found):
            found.append(candidate)
        candidate += 1
    return found


def evaluate_matrix(
    matrix: GenericMatrix, point: tuple[Fraction, ...]
) -> Matrix:
    size = len(matrix.entries)
    return tuple(
        tuple(poly_eval(matrix.entry(r, c), point) for c in range(size))
        for r in range(size)
    )


def certify_nonvanishing(g: CoincidenceGraph) -> Certificate:
    """Certify that the graph's generic determinant is not identically zero.

    The v-th variable (in the matrix's fixed order) is assigned the
    (v + attempt)-th prime, starting from 2; each attempt shifts the
    window by one.  A nonzero exact determinant at any such point is a
    proof.  Exhausting the attempts would mean the determinant vanishes
    on all those points, which no accepted graph does; it raises.
    """
    matrix = build_generic_matrix(g)
    nvars = len(matrix.variables)
    primes = _first_primes(nvars + MAX_CERTIFICATE_ATTEMPTS)
    for attempt in range(MAX_CERTIFICATE_ATTEMPTS):
        point = tuple(
            Fraction(primes[v + attempt]) for v in range(nvars)
        )
        value = mat_det(evaluate_matrix(matrix, point))
        if value != 0:
            return Certificate(
                encoding=canonical_encoding(g),
                variables=matrix.variables,
                point=point,
                det_value=value,
                attempts=attempt,
            )
    raise RuntimeError(
        "no nonzero evaluation found; the determinant appears to vanish"
        " identically"
    )


def symbolic_determinant(matrix: GenericMatrix) -> Poly:
    """Exact determinant in the polynomial ring, by column-subset recursion.

    Independent of the numeric route: expands over permutations with a
    dynamic program on used-column masks rather than eliminating.
    """
    size = len(matrix.entries)
    current: dict[int, Poly] = {0: {(): 1}}
    for row in range(size):
        nxt: dict[int, Poly] = {}
        for mask, acc in current.items():
            position = 0
            for col in range(size):
                bit = 1 << col
                if mask & bit:
                    continue
                entry = matrix.entry(row, col)
                if entry:
                    signed = entry if position % 2 == 0 else poly_scale(entry, -1)
                    term = poly_mul(acc, signed)
                    key = mask | bit
                    nxt[key] = poly_add(nxt.get(key, {}), term)
                position += 1
        current = nxt
    return current.get((1 << size) - 1, {})
