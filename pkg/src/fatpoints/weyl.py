"""The Weyl group action on the Picard lattice of a blown-up plane.

The group is generated by reflections in the fundamental roots

    E_1 - E_2, ..., E_{r-1} - E_r,  H - E_1 - E_2 - E_3,

each of self-intersection -2 and orthogonal to the canonical class.  The
difference roots permute multiplicities; the last root is the degree-two
Cremona transformation based at the first three points.  Reflections are
isometries of the lattice and preserve the effective, nef and positive
cones, which is what makes the reduction to pseudostandard form and the
orbit of the exceptional classes useful for positivity questions.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from sympy.utilities.iterables import multiset_permutations

from .lattice import (
    BlowupContext,
    DivisorClass,
    canonical_class,
    class_from_json,
    class_to_json,
    gram_matrix,
    pair,
    _require_surface,
)
from .linalg import is_negative_definite, solve_linear


@dataclass(frozen=True)
class Root:
    """A reflection root: a class with R^2 = -2 orthogonal to K."""

    divisor: DivisorClass

    def __post_init__(self) -> None:
        R = self.divisor
        _require_surface(R.ctx)
        if pair(R, R) != -2:
            raise ValueError("a root must have self-intersection -2")
        if pair(R, canonical_class(R.ctx)) != 0:
            raise ValueError("a root must be orthogonal to the canonical class")


def difference_root(ctx: BlowupContext, i: int) -> Root:
    """The root E_i - E_{i+1} (1-based i < r)."""
    if not 1 <= i <= ctx.r - 1:
        raise ValueError(f"difference root index {i} out of range 1..{ctx.r - 1}")
    m = [0] * ctx.r
    m[i - 1] = -1
    m[i] = 1
    return Root(DivisorClass(ctx, 0, m))


def cremona_root(ctx: BlowupContext) -> Root:
    """The root H - E_1 - E_2 - E_3 (requires r >= 3)."""
    if ctx.r < 3:
        raise ValueError("the Cremona root needs at least 3 points")
    m = [1, 1, 1] + [0] * (ctx.r - 3)
    return Root(DivisorClass(ctx, 1, m))


def fundamental_roots(ctx: BlowupContext) -> tuple[Root, ...]:
    """The r-1 difference roots followed by the Cremona root.

    For r < 3 there is no Cremona root and only the difference roots are
    returned (an empty tuple when r <= 1): the Weyl group degenerates to
    the permutation group of the exceptional classes.
    """
    _require_surface(ctx)
    roots = [difference_root(ctx, i) for i in range(1, ctx.r)]
    if ctx.r >= 3:
        roots.append(cremona_root(ctx))
    return tuple(roots)


def reflect(D: DivisorClass, root: Root) -> DivisorClass:
    """The reflection D + (D.R) R; an involution preserving the pairing."""
    R = root.divisor
    return D + pair(D, R) * R


class ReductionStatus(Enum):
    STANDARD = "Standard"
    PSEUDOSTANDARD_NEGATIVE_TAIL = "PseudostandardNegativeTail"
    DEGREE_WENT_NEGATIVE = "DegreeWentNegative"


@dataclass(frozen=True)
class ReductionReport:
    """Result of reducing a class to pseudostandard form.

    The trace lists the applied roots in order; re-applying them to the
    input reproduces the result exactly.
    """

    input: DivisorClass
    trace: tuple[Root, ...]
    result: DivisorClass
    status: ReductionStatus

    def replay(self) -> DivisorClass:
        D = self.input
        for root in self.trace:
            D = reflect(D, root)
        return D


def _is_pseudostandard(d: int, m: Sequence[int]) -> bool:
    top = sorted(m, reverse=True)[:3] + [0, 0, 0]
    return all(m[i] >= m[i + 1] for i in range(len(m) - 1)) and d >= sum(top[:3])


def reduce_class(D: DivisorClass) -> ReductionReport:
    """Reduce an integral surface class to pseudostandard form.

    Repeatedly sorts the multiplicities into descending order (difference
    reflections) and applies the Cremona reflection while d < m_1+m_2+m_3.
    Each Cremona step strictly decreases the degree, so the loop stops at a
    pseudostandard class or as soon as the degree becomes negative --
    the latter certifies that the input is not effective, since the Weyl
    group preserves effectivity and effective classes have d >= 0.
    """
    ctx = D.ctx
    _require_surface(ctx)
    if ctx.r < 3:
        raise ValueError("reduction needs at least 3 points (no Cremona root)")
    if not D.is_integral:
        raise ValueError("reduction is defined for integral classes; "
                         "scale rational classes first")
    d = int(D.d)
    m = [int(x) for x in D.m]
    r = ctx.r
    trace: list[Root] = []

    def sort_descending() -> None:
        # Bubble sort: every adjacent swap is a difference-root reflection,
        # so the trace stays faithful.  Stable, ties never swap.
        swapped = True
        while swapped:
            swapped = False
            for i in range(r - 1):
                if m[i] < m[i + 1]:
                    m[i], m[i + 1] = m[i + 1], m[i]
                    trace.append(difference_root(ctx, i + 1))
                    swapped = True

    cremona = cremona_root(ctx)
    status = None
    while True:
        sort_descending()
        if d >= m[0] + m[1] + m[2]:
            status = (ReductionStatus.STANDARD if m[-1] >= 0
                      else ReductionStatus.PSEUDOSTANDARD_NEGATIVE_TAIL)
            break
        s = d - (m[0] + m[1] + m[2])
        d += s
        m[0] += s
        m[1] += s
        m[2] += s
        trace.append(cremona)
        if d < 0:
            status = ReductionStatus.DEGREE_WENT_NEGATIVE
            break
    return ReductionReport(input=D, trace=tuple(trace),
                           result=DivisorClass(ctx, d, m), status=status)


def is_minus_one_class(D: DivisorClass) -> bool:
    """Whether D lies in the Weyl orbit of an exceptional class.

    Requires D^2 = D.K = -1 together with reduction to the form
    (d = 0; one multiplicity -1, the rest 0).  For r < 3 the group is just
    the permutation group, so only the E_i themselves qualify.
    """
    ctx = D.ctx
    _require_surface(ctx)
    if not D.is_integral:
        raise ValueError("expected an integral class")
    K = canonical_class(ctx)
    if pair(D, D) != -1 or pair(D, K) != -1:
        return False
    if ctx.r < 3:
        sorted_m = sorted((int(x) for x in D.m), reverse=True)
        return int(D.d) == 0 and sorted_m == [0] * (ctx.r - 1) + [-1]
    report = reduce_class(D)
    res = report.result
    return (int(res.d) == 0
            and sorted(int(x) for x in res.m) == [-1] + [0] * (ctx.r - 1))


# -- the (-1)-orbit ---------------------------------------------------------

def minus_one_orbit_representatives(ctx: BlowupContext,
                                    degree_bound: int) -> list[tuple[int, tuple[int, ...]]]:
    """Sorted-multiplicity representatives of the orbit of E_r, degree <= bound.

    Breadth-first closure of the exceptional class under Cremona
    reflections based at arbitrary point triples, with multiplicities kept
    in descending order (the difference roots act by permutation, so the
    sorted vector is a canonical representative).  Pruning at the degree
    bound loses nothing: reversing the reduction of any orbit member walks
    up from the exceptional class through degrees that never exceed the
    member's own.
    """
    _require_surface(ctx)
    if ctx.r == 0 or degree_bound < 0:
        return []
    start = (0, tuple([0] * (ctx.r - 1) + [-1]))
    seen = {start}
    queue = deque([start])
    triples = list(combinations(range(ctx.r), 3)) if ctx.r >= 3 else []
    while queue:
        d, m = queue.popleft()
        for i, j, k in triples:
            s = d - m[i] - m[j] - m[k]
            if s == 0:
                continue
            d2 = d + s
            if d2 < 0 or d2 > degree_bound:
                continue
            mm = list(m)
            mm[i] += s
            mm[j] += s
            mm[k] += s
            mm.sort(reverse=True)
            node = (d2, tuple(mm))
            if node not in seen:
                seen.add(node)
                queue.append(node)
    return sorted(seen)


def minus_one_orbit(ctx: BlowupContext, degree_bound: int) -> list[DivisorClass]:
    """The full orbit of E_r under the Weyl group, up to the degree bound.

    Expands each sorted representative over all distinct permutations of
    its multiplicities; the output order is canonical (by degree, then by
    the multiplicity vector), independent of the search order.
    """
    out: list[tuple[int, tuple[int, ...]]] = []
    for d, m in minus_one_orbit_representatives(ctx, degree_bound):
        for perm in multiset_permutations(list(m)):
            out.append((d, tuple(perm)))
    out.sort()
    return [DivisorClass(ctx, d, m) for d, m in out]


# -- orbit cache --------------------------------------------------------------

def orbit_cache_path(cache_dir: str | Path, ctx: BlowupContext, bound: int) -> Path:
    return Path(cache_dir) / f"orbit_n{ctx.n}_r{ctx.r}_b{bound}.jsonl"


def write_orbit_cache(path: str | Path, ctx: BlowupContext, bound: int,
                      classes: Iterable[DivisorClass]) -> None:
    """Write the orbit as JSON lines (header line, then one class per line).

    The file is written to a temporary sibling and atomically renamed, so
    concurrent readers never see a torn cache.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [json.dumps({"ctx": {"n": ctx.n, "r": ctx.r}, "bound": bound},
                        sort_keys=True)]
    lines.extend(json.dumps(class_to_json(c), sort_keys=True) for c in classes)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write("\n".join(lines) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_orbit_cache(path: str | Path) -> tuple[BlowupContext, int, list[DivisorClass]]:
    with open(path) as handle:
        header = json.loads(handle.readline())
        ctx = BlowupContext(int(header["ctx"]["n"]), int(header["ctx"]["r"]))
        bound = int(header["bound"])
        classes = [class_from_json(json.loads(line))
                   for line in handle if line.strip()]
    return ctx, bound, classes


def cached_minus_one_orbit(ctx: BlowupContext, bound: int,
                           cache_dir: str | Path | None) -> list[DivisorClass]:
    """Orbit lookup keyed by (n, r, bound); regenerates the file when absent."""
    if cache_dir is None:
        return minus_one_orbit(ctx, bound)
    path = orbit_cache_path(cache_dir, ctx, bound)
    if path.exists():
        cached_ctx, cached_bound, classes = read_orbit_cache(path)
        if cached_ctx == ctx and cached_bound == bound:
            return classes
    classes = minus_one_orbit(ctx, bound)
    write_orbit_cache(path, ctx, bound, classes)
    return classes


# -- classification of standard classes --------------------------------------

class StandardClassKind(Enum):
    H_MINUS_E1_MULTIPLE = "MultipleOfHminusE1"
    MINUS_K9_MULTIPLE = "MultipleOfMinusK9"
    COUNTEREXAMPLE = "Counterexample"


def standard_class_kind(D: DivisorClass) -> StandardClassKind:
    """Classify a standard class with D^2 <= 0 and D.K <= 0.

    Such a class is a positive multiple of H - E_1 or of 3H - E_1 - ... - E_9
    (the latter padded with zero multiplicities when r > 9); anything else
    is reported as a counterexample, which the exhaustive test suite shows
    never happens.  The zero class is accepted and reported as the
    degenerate zero multiple of H - E_1.

    Raises ValueError when the class is not standard (sorted, nonnegative
    multiplicities, d >= m_1 + m_2 + m_3) or fails D^2 <= 0, D.K <= 0.
    """
    ctx = D.ctx
    _require_surface(ctx)
    m = list(D.m)
    if any(m[i] < m[i + 1] for i in range(len(m) - 1)) or (m and m[-1] < 0):
        raise ValueError("not standard: multiplicities must be sorted and nonnegative")
    top = m[:3] + [Fraction(0)] * (3 - min(3, len(m)))
    if D.d < sum(top[:3]):
        raise ValueError("not standard: requires d >= m_1 + m_2 + m_3")
    if pair(D, D) > 0:
        raise ValueError("requires nonpositive self-intersection")
    if pair(D, canonical_class(ctx)) > 0:
        raise ValueError("requires nonpositive pairing with the canonical class")

    if all(x == 0 for x in m[1:]):
        if D.d == (m[0] if m else 0):
            return StandardClassKind.H_MINUS_E1_MULTIPLE
        return StandardClassKind.COUNTEREXAMPLE
    lead = m[0]
    if (lead > 0 and len(m) >= 9 and all(x == lead for x in m[:9])
            and all(x == 0 for x in m[9:]) and D.d == 3 * lead):
        return StandardClassKind.MINUS_K9_MULTIPLE
    return StandardClassKind.COUNTEREXAMPLE


# -- blocking divisors --------------------------------------------------------

def blocking_divisor(curves: Sequence[DivisorClass]) -> DivisorClass:
    """An effective combination pairing negatively with every input class.

    Given classes whose Gram matrix is negative definite (as happens for
    distinct irreducible curves orthogonal to a big nef class), solve
    Gram a = -(1, ..., 1) exactly and clear denominators; the solution has
    positive coefficients whenever the off-diagonal pairings are
    nonnegative, which holds for classes of distinct irreducible curves.
    """
    if not curves:
        raise ValueError("need at least one class")
    ctx = curves[0].ctx
    for c in curves[1:]:
        if c.ctx != ctx:
            raise ValueError("context mismatch among input classes")
    G = gram_matrix(curves)
    if not is_negative_definite(G):
        raise ValueError("Gram matrix is not negative definite")
    a = solve_linear(G, [Fraction(-1)] * len(curves))
    if any(x <= 0 for x in a):
        raise ArithmeticError(
            "solution is not positive; inputs cannot be classes of distinct "
            "irreducible curves (some off-diagonal pairing is negative)")
    lcm = 1
    for x in a:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in a]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    coeffs = [v // g for v in ints]
    E = coeffs[0] * curves[0]
    for c, C in zip(coeffs[1:], curves[1:]):
        E = E + c * C
    return E
