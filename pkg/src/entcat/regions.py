"""Catalyst search for general k via hyperplane-arrangement cells.

On the ordered catalyst simplex x_1 >= ... >= x_k >= 0, sum x = 1, the
sorted order of the products {s_i * x_j} changes only across the planes
s_i1 * x_i2 = s_j1 * x_j2 (i1 < j1, i2 > j2, for either state's
coefficients). Inside each full-dimensional cell both spectra have a fixed
order, so the majorization prefix conditions become a finite system of
affine inequalities, solved exactly by Fourier-Motzkin elimination.

Affine forms over the free variables y = (x_1, ..., x_{k-1}) are tuples
(const, a_1, ..., a_{k-1}); x_k is eliminated as 1 - sum(y). Constraints
are always written as form <= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations, pairwise

from .core import (
    CatalystCandidate,
    ClosedInterval,
    Comparison,
    SchmidtVector,
    compare,
    padded_pair,
    verify_catalyst,
)
from .errors import DegenerateSimplex, TieAtRepresentative, UnsupportedK

Form = tuple[Fraction, ...]

_MAX_FREE_VARS = 3  # exact elimination stays practical up to k = 4

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Verdict(Enum):
    """Outcome of a catalyst search."""

    ALREADY_TRANSFORMABLE = "already_transformable"
    EQUIVALENT = "equivalent"
    REVERSE_ONLY = "reverse_only"
    EXISTS = "exists"
    NOT_EXISTS = "not_exists"


@dataclass(frozen=True)
class HyperplaneSet:
    """Deduplicated order-change planes plus the simplex facet planes.

    forms are normalized so the first nonzero coefficient is +1.
    product_plane_count is the family size before dedup and zero-skipping,
    which is always 2 * C(k,2) * C(n,2).
    """

    k: int
    forms: tuple[Form, ...]
    product_plane_count: int


@dataclass(frozen=True)
class CellRepresentative:
    """A strictly interior point of one arrangement cell.

    point is the full catalyst vector (x_1, ..., x_k); signature is the
    sign of every plane form at the point (never 0) and identifies the
    cell uniquely.
    """

    point: tuple[Fraction, ...]
    signature: tuple[int, ...]


@dataclass(frozen=True)
class LinearSystem:
    """Affine inequalities (form <= 0) over the k-1 free variables.

    Tags record provenance: prefix:<l>, order:<a|b>:<l>, simplex:*.
    """

    num_vars: int
    constraints: tuple[tuple[Form, str], ...]


@dataclass(frozen=True)
class Witness:
    """A verified catalyst found in one cell.

    For k = 2 the cell's whole feasible parameter interval is attached.
    degenerate marks witnesses whose smallest coordinate is zero
    (effectively a lower-dimensional catalyst).
    """

    point: tuple[Fraction, ...]
    signature: tuple[int, ...]
    interval: ClosedInterval | None
    degenerate: bool


@dataclass(frozen=True)
class SearchStats:
    cells: int
    systems_solved: int


@dataclass(frozen=True)
class CatalystResult:
    verdict: Verdict
    witnesses: tuple[Witness, ...]
    stats: SearchStats


# ---------------------------------------------------------------------------
# affine-form helpers


def _coordinate_forms(k: int) -> list[Form]:
    """x_1 .. x_k as affine forms over the free variables."""
    forms = []
    for j in range(k - 1):
        coeffs = [_ZERO] * (k - 1)
        coeffs[j] = _ONE
        forms.append((_ZERO, *coeffs))
    forms.append((_ONE, *([-_ONE] * (k - 1))))
    return forms


def _scale(form: Form, s: Fraction) -> Form:
    return tuple(s * v for v in form)


def _add(f: Form, g: Form) -> Form:
    return tuple(a + b for a, b in zip(f, g))


def _sub(f: Form, g: Form) -> Form:
    return tuple(a - b for a, b in zip(f, g))


def _eval(form: Form, point) -> Fraction:
    total = form[0]
    for a, v in zip(form[1:], point):
        total += a * v
    return total


def _canon_plane(form: Form) -> Form:
    for v in form:
        if v != 0:
            return tuple(x / v for x in form)
    return form


def _canon_constraint(form: Form) -> Form:
    # only positive scaling preserves the <= 0 side
    for v in form:
        if v != 0:
            s = abs(v)
            return tuple(x / s for x in form)
    return form


def _dedup_planes(forms) -> tuple[Form, ...]:
    out, seen = [], set()
    for f in forms:
        cf = _canon_plane(f)
        if all(v == 0 for v in cf):
            continue
        if cf not in seen:
            seen.add(cf)
            out.append(cf)
    return tuple(out)


def _simplex_facet_forms(k: int) -> list[Form]:
    x = _coordinate_forms(k)
    facets = [_sub(x[j], x[j + 1]) for j in range(k - 1)]
    facets.append(x[k - 1])
    return facets


# ---------------------------------------------------------------------------
# hyperplane arrangement


def build_hyperplanes(
    psi1: SchmidtVector, psi2: SchmidtVector, k: int
) -> HyperplaneSet:
    """All product-equality planes of the pair, plus ordering and boundary.

    Planes whose two coefficients are both zero vanish and are skipped;
    the rest are normalized and deduplicated.
    """
    if k < 2:
        raise DegenerateSimplex(f"catalyst dimension must be >= 2, got {k}")
    a, b = padded_pair(psi1, psi2)
    n = len(a)
    x = _coordinate_forms(k)
    planes: list[Form] = []
    count = 0
    for state in (a, b):
        for i1 in range(n):
            for j1 in range(i1 + 1, n):
                for j2 in range(k):
                    for i2 in range(j2 + 1, k):
                        count += 1
                        f = _sub(_scale(x[i2], state[i1]), _scale(x[j2], state[j1]))
                        if any(v != 0 for v in f):
                            planes.append(f)
    planes.extend(_simplex_facet_forms(k))
    return HyperplaneSet(k=k, forms=_dedup_planes(planes), product_plane_count=count)


def _solve_square(forms) -> tuple[Fraction, ...] | None:
    """Unique solution of len(forms) equations form = 0, or None if singular."""
    m = len(forms)
    rows = [list(f[1:]) + [-f[0]] for f in forms]
    for col in range(m):
        piv = next((r for r in range(col, m) if rows[r][col] != 0), None)
        if piv is None:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        lead = rows[col]
        for r in range(m):
            if r != col and rows[r][col] != 0:
                fac = rows[r][col] / lead[col]
                for c2 in range(col, m + 1):
                    rows[r][c2] -= fac * lead[c2]
    return tuple(rows[i][m] / rows[i][i] for i in range(m))


def _slab_recurse(subbed, k, depth, prefix, prev, remaining, out):
    """Sweep the current free coordinate, recursing into each slab.

    subbed holds every plane restricted to the already-fixed prefix, in the
    original plane order, so base-level signatures come out aligned. The
    coordinate range is clipped to the ordered simplex: the facet planes
    are part of the arrangement, so interior cells always project inside.
    """
    vars_left = (k - 1) - depth
    lo = remaining / (k - depth)
    hi = prev if prev < remaining else remaining
    if lo >= hi:
        return
    if vars_left == 1:
        cuts = {lo, hi}
        for g in subbed:
            if g[1] != 0:
                root = -g[0] / g[1]
                if lo < root < hi:
                    cuts.add(root)
        for c1, c2 in pairwise(sorted(cuts)):
            y = (c1 + c2) / 2
            sig = []
            for g in subbed:
                value = g[0] + g[1] * y
                if value > 0:
                    sig.append(1)
                elif value < 0:
                    sig.append(-1)
                else:
                    raise RuntimeError("slab sample landed on a hyperplane")
            out.append(((*prefix, y), tuple(sig)))
        return
    active = [g for g in subbed if any(v != 0 for v in g[1:])]
    cuts = {lo, hi}
    # vertices of the restricted arrangement project onto coordinate cuts
    for subset in combinations(active, vars_left):
        sol = _solve_square(subset)
        if sol is not None and lo < sol[0] < hi:
            cuts.add(sol[0])
    for g in active:
        if g[1] != 0 and all(v == 0 for v in g[2:]):
            root = -g[0] / g[1]
            if lo < root < hi:
                cuts.add(root)
    for c1, c2 in pairwise(sorted(cuts)):
        v = (c1 + c2) / 2
        reduced = [(g[0] + g[1] * v, *g[2:]) for g in subbed]
        _slab_recurse(reduced, k, depth + 1, (*prefix, v), v, remaining - v, out)


def cell_representatives(
    planes: HyperplaneSet, k: int | None = None
) -> list[CellRepresentative]:
    """One strictly interior representative per cell inside the simplex.

    Recursive slab decomposition with exact rational midpoints; candidates
    are deduplicated by sign signature (equal signatures denote the same
    cell, since cells of an arrangement are convex).
    """
    if k is None:
        k = planes.k
    elif k != planes.k:
        raise ValueError(f"k={k} does not match the plane set (k={planes.k})")
    if k < 2:
        raise DegenerateSimplex(f"catalyst dimension must be >= 2, got {k}")
    forms = _dedup_planes([*planes.forms, *_simplex_facet_forms(k)])
    found: list[tuple[tuple[Fraction, ...], tuple[int, ...]]] = []
    _slab_recurse(list(forms), k, 0, (), _ONE, _ONE, found)
    reps: dict[tuple[int, ...], CellRepresentative] = {}
    for y, sig in found:
        if sig in reps:
            continue
        point = (*y, _ONE - sum(y))
        for left, right in pairwise(point):
            if left <= right:
                raise RuntimeError("slab sample left the ordered simplex")
        if point[-1] < 0:
            raise RuntimeError("slab sample left the ordered simplex")
        reps[sig] = CellRepresentative(point=point, signature=sig)
    return list(reps.values())


# ---------------------------------------------------------------------------
# per-cell linear systems


def _product_order(entries, point, k):
    """Nonincreasing order of {s_i * x_j} at the representative point.

    Ties are only tolerated between products that are identical as
    functions of x (equal coefficients in the same slot, or zero
    coefficients); anything else means the point sits on a plane.
    """
    items = []
    for i, s in enumerate(entries):
        for j in range(k):
            items.append((s * point[j], i, j))
    items.sort(key=lambda t: (-t[0], t[1], t[2]))
    for (v1, i1, j1), (v2, i2, j2) in pairwise(items):
        if v1 == v2:
            f1 = (entries[i1], j1 if entries[i1] else -1)
            f2 = (entries[i2], j2 if entries[i2] else -1)
            if f1 != f2:
                raise TieAtRepresentative(
                    f"products ({i1},{j1}) and ({i2},{j2}) tie at the representative"
                )
    return [(i, j) for _, i, j in items]


def cell_system(
    rep: CellRepresentative, psi1: SchmidtVector, psi2: SchmidtVector
) -> LinearSystem:
    """The cell's full inequality system: prefixes, orderings, simplex bounds."""
    a, b = padded_pair(psi1, psi2)
    k = len(rep.point)
    x = _coordinate_forms(k)
    order_a = _product_order(a.entries, rep.point, k)
    order_b = _product_order(b.entries, rep.point, k)

    constraints: list[tuple[Form, str]] = []
    for name, entries, order in (("a", a.entries, order_a), ("b", b.entries, order_b)):
        for l, ((i1, j1), (i2, j2)) in enumerate(pairwise(order), start=1):
            f = _sub(_scale(x[j2], entries[i2]), _scale(x[j1], entries[i1]))
            constraints.append((f, f"order:{name}:{l}"))
    diff: Form = (_ZERO,) * k
    for l, ((ia, ja), (ib, jb)) in enumerate(zip(order_a, order_b), start=1):
        diff = _add(diff, _scale(x[ja], a.entries[ia]))
        diff = _sub(diff, _scale(x[jb], b.entries[ib]))
        constraints.append((diff, f"prefix:{l}"))
    for j in range(k - 1):
        constraints.append((_sub(x[j + 1], x[j]), f"simplex:order:{j + 1}"))
    constraints.append((_scale(x[k - 1], -_ONE), "simplex:boundary"))
    return LinearSystem(num_vars=k - 1, constraints=tuple(constraints))


# ---------------------------------------------------------------------------
# exact feasibility


def _prepare(forms) -> list[Form] | None:
    """Canonicalize and dedup; None when a constant constraint is violated."""
    out, seen = [], set()
    for f in forms:
        cf = _canon_constraint(f)
        if all(v == 0 for v in cf[1:]):
            if cf[0] > 0:
                return None
            continue
        if cf not in seen:
            seen.add(cf)
            out.append(cf)
    return out


def _stage_chain(forms, nvars) -> list[list[Form]] | None:
    """stages[t] = constraints over y_0..y_t after eliminating higher vars."""
    current = _prepare(forms)
    if current is None:
        return None
    stages: list[list[Form]] = [[] for _ in range(nvars)]
    stages[nvars - 1] = current
    for t in range(nvars - 1, 0, -1):
        nxt = [f for f in current if f[t + 1] == 0]
        uppers = [f for f in current if f[t + 1] > 0]
        lowers = [f for f in current if f[t + 1] < 0]
        for fl in lowers:
            lt = -fl[t + 1]
            for fu in uppers:
                ut = fu[t + 1]
                nxt.append(tuple(lt * u + ut * v for u, v in zip(fu, fl)))
        current = _prepare(nxt)
        if current is None:
            return None
        stages[t - 1] = current
    return stages


def _bounds_for(forms, t, point):
    """Feasible [lo, hi] for y_t given fixed y_0..y_{t-1} (None = unbounded)."""
    lo = hi = None
    for f in forms:
        coeff = f[t + 1]
        if coeff == 0:
            continue
        value = f[0]
        for av, pv in zip(f[1:], point):
            value += av * pv
        bound = -value / coeff
        if coeff > 0:
            if hi is None or bound < hi:
                hi = bound
        else:
            if lo is None or bound > lo:
                lo = bound
    return lo, hi


def solve_feasibility(system: LinearSystem) -> tuple[Fraction, ...] | None:
    """An exact feasible point of the free variables, or None.

    Variables are eliminated from the last to the first; back-substitution
    always picks the lower endpoint of the surviving interval, so the
    witness is deterministic. Infeasibility is a normal outcome.
    """
    nvars = system.num_vars
    if nvars < 1:
        raise DegenerateSimplex("system has no free variables")
    stages = _stage_chain([f for f, _ in system.constraints], nvars)
    if stages is None:
        return None
    point: list[Fraction] = []
    for t in range(nvars):
        lo, hi = _bounds_for(stages[t], t, point)
        if lo is not None and hi is not None and lo > hi:
            return None
        if lo is not None:
            point.append(lo)
        elif hi is not None:
            point.append(hi)
        else:
            point.append(_ZERO)
    return tuple(point)


def _interval_1var(forms) -> ClosedInterval | None:
    """Feasible closed interval of a single-variable system."""
    current = _prepare(forms)
    if current is None:
        return None
    lo, hi = _bounds_for(current, 0, ())
    if lo is None or hi is None:
        raise RuntimeError("unbounded single-variable system (missing simplex bounds)")
    return ClosedInterval(lo, hi) if lo <= hi else None


# ---------------------------------------------------------------------------
# the search


def find_catalysts(
    psi1: SchmidtVector, psi2: SchmidtVector, k: int = 2
) -> CatalystResult:
    """Decide k x k catalyst existence and collect verified witnesses.

    Already-ordered pairs short-circuit without any search. Every witness
    is re-checked with verify_catalyst before being reported; for k = 2
    each witness carries its cell's whole feasible interval.
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise UnsupportedK(f"catalyst dimension must be an integer, got {k!r}")
    if k < 2:
        raise UnsupportedK(f"catalyst dimension must be >= 2, got {k}")
    if k - 1 > _MAX_FREE_VARS:
        raise UnsupportedK(
            f"exact elimination is limited to k <= {_MAX_FREE_VARS + 1}, got k={k}"
        )
    a, b = padded_pair(psi1, psi2)
    relation = compare(a, b)
    if relation is Comparison.EQUIVALENT:
        return CatalystResult(Verdict.EQUIVALENT, (), SearchStats(0, 0))
    if relation is Comparison.FORWARD_TRANSFORMABLE:
        return CatalystResult(Verdict.ALREADY_TRANSFORMABLE, (), SearchStats(0, 0))
    if relation is Comparison.BACKWARD_TRANSFORMABLE:
        return CatalystResult(Verdict.REVERSE_ONLY, (), SearchStats(0, 0))

    planes = build_hyperplanes(a, b, k)
    reps = cell_representatives(planes)
    witnesses: list[Witness] = []
    solved = 0
    for rep in reps:
        system = cell_system(rep, a, b)
        solved += 1
        y = solve_feasibility(system)
        if y is None:
            continue
        point = (*y, _ONE - sum(y))
        for form, tag in system.constraints:
            if _eval(form, y) > 0:
                raise RuntimeError(f"witness violates its own system at {tag}")
        candidate = CatalystCandidate(point)
        if not verify_catalyst(a, b, candidate):
            raise RuntimeError("witness failed direct verification")
        interval = None
        if k == 2:
            interval = _interval_1var([f for f, _ in system.constraints])
        witnesses.append(
            Witness(
                point=point,
                signature=rep.signature,
                interval=interval,
                degenerate=point[-1] == 0,
            )
        )
    verdict = Verdict.EXISTS if witnesses else Verdict.NOT_EXISTS
    return CatalystResult(
        verdict=verdict,
        witnesses=tuple(witnesses),
        stats=SearchStats(cells=len(reps), systems_solved=solved),
    )


def feasible_union_k2(result: CatalystResult) -> tuple[ClosedInterval, ...]:
    """Canonical disjoint union of the k=2 witnesses' feasible intervals."""
    from .core import merge_intervals

    return merge_intervals([w.interval for w in result.witnesses if w.interval])
