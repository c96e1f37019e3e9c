"""Reliability evaluation: the multilinear extension and its diagonal.

With independent components working with probabilities p_1..p_n, system
reliability is the multilinear extension of the structure function: plug the
p_i straight into the simple form. Setting every p_i to the same x collapses
it to a one-variable polynomial in x, the diagonal, whose integer
coefficients summarize the system size profile.

All evaluation is type-transparent: Fraction inputs give exact rational
results, floats give floats.
"""

from __future__ import annotations

from typing import Sequence

from .core import (
    CapacityError,
    DiagonalPoly,
    MultilinearForm,
    SetFamily,
    _iter_bit_positions,
    mobius_transform,
)
from .transform import _as_antichain, _resolve_caps, table_from_paths

__all__ = [
    "evaluate_reliability",
    "evaluate_inclusion_exclusion",
    "diagonal_coefficients",
    "diagonal_from_paths",
]


def _check_probabilities(p: Sequence, n: int) -> None:
    if len(p) != n:
        raise ValueError(f"expected {n} component probabilities, got {len(p)}")
    for i, value in enumerate(p, start=1):
        if not 0 <= value <= 1:
            raise ValueError(f"p[{i}] = {value!r} outside [0, 1]")


def evaluate_reliability(form: MultilinearForm, p: Sequence):
    """System reliability: sum of coeff(A) * prod_{i in A} p_i over the form's terms.

    p is indexed by component (p[0] belongs to component 1). On 0/1 input this
    reproduces the truth table, which pins the polynomial down uniquely.
    """
    _check_probabilities(p, form.n)
    total = 0
    for mask in sorted(form.coeffs):
        term = form.coeffs[mask]
        for i in _iter_bit_positions(mask):
            term = term * p[i]
        total += term
    return total


def evaluate_inclusion_exclusion(
    paths: SetFamily,
    p: Sequence,
    *,
    max_r: "int | None" = None,
    max_n: "int | None" = None,
):
    """System reliability summed directly over nonempty path subfamilies.

    Each subfamily contributes (-1)^(size-1) * prod of p_i over its union;
    no cancellation is performed before summing, so this is an independent
    route to the same value as :func:`evaluate_reliability` on the expanded
    form. Exact in rational arithmetic.
    """
    if not paths.members:
        raise ValueError("at least one path set required")
    _check_probabilities(p, paths.n)
    r_limit, n_limit = _resolve_caps(max_r, max_n)
    if paths.r <= r_limit:
        masks = paths.masks()
        total = 0

        def walk(idx: int, union: int, size: int) -> None:
            nonlocal total
            if idx == len(masks):
                if size:
                    term = 1 if size & 1 else -1
                    for i in _iter_bit_positions(union):
                        term = term * p[i]
                    total += term
                return
            walk(idx + 1, union, size)
            walk(idx + 1, union | masks[idx], size + 1)

        walk(0, 0, 0)
        return total
    if paths.n <= n_limit:
        return evaluate_reliability(mobius_transform(table_from_paths(paths)), p)
    raise CapacityError(
        f"family size {paths.r} exceeds max_r={r_limit} and n={paths.n} exceeds max_n={n_limit}"
    )


def diagonal_coefficients(form: MultilinearForm) -> DiagonalPoly:
    """Collapse the simple form to the diagonal: d_k sums coeff(A) over |A| = k.

    The form must have no constant term (no semicoherent system does).
    """
    if form.coefficient(0) != 0:
        raise ValueError(f"constant term {form.coefficient(0)} present; diagonal has none")
    d = [0] * form.n
    for mask, coeff in form.coeffs.items():
        d[mask.bit_count() - 1] += coeff
    return DiagonalPoly(n=form.n, d=tuple(d))


def diagonal_from_paths(
    paths: SetFamily, *, max_r: "int | None" = None, max_n: "int | None" = None
) -> DiagonalPoly:
    """Diagonal coefficients straight from the path family.

    d_k is the signed count of nonempty subfamilies whose union has size k
    (odd subfamilies minus even). Applied to the minimal cut sets instead,
    this yields the dual system's diagonal. Non-minimal input is minimized
    with a warning; redundant members never change the result.
    """
    family = _as_antichain(paths, "diagonal_from_paths")
    if not family.members:
        raise ValueError("at least one path set required")
    r_limit, n_limit = _resolve_caps(max_r, max_n)
    if family.r <= r_limit:
        masks = family.masks()
        d = [0] * family.n

        def walk(idx: int, union: int, size: int) -> None:
            if idx == len(masks):
                if size:
                    d[union.bit_count() - 1] += 1 if size & 1 else -1
                return
            walk(idx + 1, union, size)
            walk(idx + 1, union | masks[idx], size + 1)

        walk(0, 0, 0)
        return DiagonalPoly(n=family.n, d=tuple(d))
    if family.n <= n_limit:
        return diagonal_coefficients(mobius_transform(table_from_paths(family)))
    raise CapacityError(
        f"family size {family.r} exceeds max_r={r_limit} and n={family.n} exceeds max_n={n_limit}"
    )
