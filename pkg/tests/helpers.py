"""Independent reference implementations used as test oracles.

Nothing here shares code with the production solver paths: the front is
computed straight from the dominance definition over a full enumeration,
and determinants use exact integer (Bareiss) elimination.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from omuco.core import Instance, cost_matrix, outcome


def all_solutions(n: int, w: int | None = None):
    """Every 0/1 tuple of length n (restricted to weight w when given)."""
    for bits in product((0, 1), repeat=n):
        if w is None or sum(bits) == w:
            yield bits


def brute_front(inst: Instance):
    """Nondominated outcomes and all efficient solutions, by definition.

    Returns (sorted list of distinct nondominated outcomes, set of all
    efficient solutions).  Quadratic all-pairs check, no filtering tricks.
    """
    solutions = list(all_solutions(inst.n, inst.cardinality))
    outcomes = [outcome(inst, x) for x in solutions]

    def dominated(i: int) -> bool:
        zi = outcomes[i]
        for zj in outcomes:
            if zj != zi and all(a <= b for a, b in zip(zj, zi)):
                return True
        return False

    efficient = {solutions[i] for i in range(len(solutions)) if not dominated(i)}
    front = sorted({outcomes[i] for i in range(len(solutions)) if not dominated(i)})
    return front, efficient


def subproblem_optimum(inst: Instance, rhs) -> Fraction | None:
    """Exhaustive optimum of one equality subproblem: minimum signed real
    value over all solutions whose counting profile matches `rhs`."""
    best = None
    for bits in all_solutions(inst.n):
        z = []
        if rhs.b_tilde is not None:
            z += [inst.alpha * c for c in _counts(inst.tilde, bits)]
        if rhs.b_hat is not None:
            z += [inst.beta * c for c in _counts(inst.hat, bits)]
        if tuple(z) != rhs.signed_values():
            continue
        value = sum((inst.gamma * inst.f[i] for i, b in enumerate(bits) if b), Fraction(0)) \
            if inst.gamma != 0 else Fraction(0)
        if best is None or value < best:
            best = value
    return best


def _counts(obj, bits):
    counts = [0] * obj.num_categories
    for item, bit in enumerate(bits):
        if bit:
            for j in range(obj.assignment[item]):
                counts[j] += 1
    return counts


def det_int(matrix: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    m = [row[:] for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    assert all(len(row) == size for row in m)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[size - 1][size - 1]


def equality_matrix(inst: Instance) -> list[list[int]]:
    """Signed stacked cost matrices of the equality-form subproblems."""
    rows: list[list[int]] = []
    if inst.alpha != 0 and inst.tilde is not None:
        rows += [[inst.alpha * v for v in row] for row in cost_matrix(inst.tilde, inst.n)]
    if inst.beta != 0 and inst.hat is not None:
        rows += [[inst.beta * v for v in row] for row in cost_matrix(inst.hat, inst.n)]
    return rows


def cardinality_matrix(inst: Instance) -> list[list[int]]:
    """Equality form with the all-ones cardinality row in the middle."""
    rows: list[list[int]] = []
    if inst.alpha != 0 and inst.tilde is not None:
        rows += [[inst.alpha * v for v in row] for row in cost_matrix(inst.tilde, inst.n)]
    rows.append([1] * inst.n)
    if inst.beta != 0 and inst.hat is not None:
        rows += [[inst.beta * v for v in row] for row in cost_matrix(inst.hat, inst.n)]
    return rows


def standard_form_matrix(inst: Instance) -> list[list[int]]:
    """Inequality form in standard form: slack identity appended blockwise."""
    base = equality_matrix(inst)
    total = len(base)
    rows = []
    for i, row in enumerate(base):
        slack = [0] * total
        slack[i] = 1
        rows.append(row + slack)
    return rows
