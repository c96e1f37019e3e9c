"""Conversions among structure-function representations.

A semicoherent system can be given as a truth table, as the coefficients of
its multilinear simple form, or by its minimal path or cut families. This
module moves between all of them: building tables from families, extracting
inclusion-minimal families back out of tables or forms, dualizing, and
expanding families into simple forms by inclusion-exclusion over subfamily
unions.

Expansion routines enumerate the 2^r subfamilies of an r-member family. When
r exceeds the expansion cap they fall back to the dense table route, which is
bounded by the component cap instead; only when both caps are exceeded do
they raise :class:`~structfn.core.CapacityError`.
"""

from __future__ import annotations

import warnings
from typing import Sequence

from .core import (
    CapacityError,
    InconsistentFormError,
    MaskLike,
    MultilinearForm,
    N_MAX,
    NotSemicoherentError,
    SetFamily,
    SubsetMask,
    TruthTable,
    _component_patterns,
    _iter_bit_positions,
    _mask_bits,
    _minimal_true_bits,
    _reverse_bits,
    _subset_sort_key,
    mobius_transform,
    validate_semicoherent,
)

__all__ = [
    "R_MAX",
    "NonMinimalFamilyWarning",
    "dualize_table",
    "minimal_path_sets",
    "minimal_cut_sets",
    "table_from_paths",
    "table_from_cuts",
    "simple_form_from_paths",
    "dual_simple_form_from_cuts",
    "paths_from_simple_form",
    "cuts_from_paths",
    "formation_balance",
]

# Inclusion-exclusion expansions enumerate 2^r subfamilies.
R_MAX = 24


class NonMinimalFamilyWarning(UserWarning):
    """A family documented as minimal contained redundant supersets; they were dropped."""


def _resolve_caps(max_r: "int | None", max_n: "int | None") -> tuple[int, int]:
    return (R_MAX if max_r is None else max_r, N_MAX if max_n is None else max_n)


def _require_semicoherent(table: TruthTable) -> None:
    report = validate_semicoherent(table)
    if not report.ok:
        raise NotSemicoherentError("; ".join(report.violations))


def _as_antichain(family: SetFamily, operation: str) -> SetFamily:
    if family.is_antichain():
        return family
    warnings.warn(
        f"{operation} expects a minimal family; redundant supersets were dropped",
        NonMinimalFamilyWarning,
        stacklevel=3,
    )
    return family.minimized()


def dualize_table(table: TruthTable) -> TruthTable:
    """The dual system's table: dual(A) = 1 - phi(complement of A).

    Complementing the subset index mirrors the 2^n table entries, so the dual
    is the bit-reversed, negated table. Applying this twice gives the input
    back; paths and cuts trade places under it.
    """
    total = 1 << table.n
    full = (1 << total) - 1
    reversed_bits = _reverse_bits(table.bits, total)
    return TruthTable(n=table.n, bits=~reversed_bits & full)


def minimal_path_sets(table: TruthTable) -> SetFamily:
    """The inclusion-minimal subsets on which the system works.

    The input must be semicoherent; monotonicity reduces minimality to the n
    one-component-removed neighbours, checked table-wide per component.
    """
    _require_semicoherent(table)
    min_bits = _minimal_true_bits(table.bits, table.n)
    members = tuple(SubsetMask(bits=m, n=table.n) for m in _iter_bit_positions(min_bits))
    return SetFamily(n=table.n, members=members)


def minimal_cut_sets(table: TruthTable) -> SetFamily:
    """The inclusion-minimal subsets whose joint failure brings the system down.

    These are exactly the minimal path sets of the dual system.
    """
    return minimal_path_sets(dualize_table(table))


def table_from_paths(paths: SetFamily, *, max_n: "int | None" = None) -> TruthTable:
    """The table of the system that works iff some path set is fully working.

    Redundant (non-minimal) members are absorbed silently: a superset of
    another path changes nothing. The result is always semicoherent.
    """
    _, n_limit = _resolve_caps(None, max_n)
    if paths.n > n_limit:
        raise CapacityError(f"n={paths.n} exceeds max_n={n_limit}")
    if not paths.members:
        raise ValueError("at least one path set required")
    patterns = _component_patterns(paths.n)
    full = (1 << (1 << paths.n)) - 1
    bits = 0
    for member in paths.members:
        contains_member = full
        for i in _iter_bit_positions(member.bits):
            contains_member &= patterns[i]
        bits |= contains_member
    return TruthTable(n=paths.n, bits=bits)


def table_from_cuts(cuts: SetFamily, *, max_n: "int | None" = None) -> TruthTable:
    """The table of the system that fails iff some cut set has fully failed.

    Built as the dual of the table whose paths are the given cuts; redundant
    members are absorbed silently, as in :func:`table_from_paths`.
    """
    if not cuts.members:
        raise ValueError("at least one cut set required")
    return dualize_table(table_from_paths(cuts, max_n=max_n))


def _formation_signs(masks: Sequence[int]) -> dict[int, int]:
    """For each subset U, the signed count of nonempty subfamilies with union U.

    Odd-size subfamilies count +1 and even-size ones -1; by inclusion-exclusion
    these are exactly the multilinear coefficients of the union system.
    """
    acc: dict[int, int] = {}

    def walk(idx: int, union: int, size: int) -> None:
        if idx == len(masks):
            if size:
                acc[union] = acc.get(union, 0) + (1 if size & 1 else -1)
            return
        walk(idx + 1, union, size)
        walk(idx + 1, union | masks[idx], size + 1)

    walk(0, 0, 0)
    return acc


def simple_form_from_paths(
    paths: SetFamily, *, max_r: "int | None" = None, max_n: "int | None" = None
) -> MultilinearForm:
    """Simple form of the system with the given minimal path sets.

    Expands by inclusion-exclusion over nonempty subfamilies: each contributes
    (-1)^(size-1) to the coefficient of its union, and cancellations are
    resolved before the form is returned. Non-minimal input is minimized with
    a warning first (the result would be the same either way).
    """
    family = _as_antichain(paths, "simple_form_from_paths")
    if not family.members:
        raise ValueError("at least one path set required")
    r_limit, n_limit = _resolve_caps(max_r, max_n)
    if family.r <= r_limit:
        return MultilinearForm(n=family.n, coeffs=_formation_signs(family.masks()))
    if family.n <= n_limit:
        return mobius_transform(table_from_paths(family))
    raise CapacityError(
        f"family size {family.r} exceeds max_r={r_limit} and n={family.n} exceeds max_n={n_limit}"
    )


def dual_simple_form_from_cuts(
    cuts: SetFamily, *, max_r: "int | None" = None, max_n: "int | None" = None
) -> MultilinearForm:
    """Simple form of the dual system, expanded from the minimal cut sets.

    The cuts are the dual's minimal path sets, so the same inclusion-exclusion
    over subfamily unions applies to them verbatim.
    """
    family = _as_antichain(cuts, "dual_simple_form_from_cuts")
    if not family.members:
        raise ValueError("at least one cut set required")
    r_limit, n_limit = _resolve_caps(max_r, max_n)
    if family.r <= r_limit:
        return MultilinearForm(n=family.n, coeffs=_formation_signs(family.masks()))
    if family.n <= n_limit:
        return mobius_transform(table_from_paths(family))
    raise CapacityError(
        f"family size {family.r} exceeds max_r={r_limit} and n={family.n} exceeds max_n={n_limit}"
    )


def paths_from_simple_form(form: MultilinearForm) -> SetFamily:
    """Recover the minimal path sets as the minimal monomials of the simple form.

    For a semicoherent system the inclusion-minimal subsets with nonzero
    coefficient are precisely the minimal path sets, and each carries
    coefficient +1; anything else means the coefficients are inconsistent.
    """
    if form.coefficient(0) != 0:
        raise InconsistentFormError(
            f"constant term {form.coefficient(0)} present; no semicoherent system has one"
        )
    minimal: list[int] = []
    for mask in sorted(form.coeffs, key=_subset_sort_key):
        if any(kept & ~mask == 0 for kept in minimal):
            continue
        coeff = form.coeffs[mask]
        if coeff != 1:
            raise InconsistentFormError(
                f"minimal monomial {SubsetMask(mask, form.n)} has coefficient {coeff}, expected +1"
            )
        minimal.append(mask)
    return SetFamily(n=form.n, members=tuple(SubsetMask(m, form.n) for m in minimal))


def cuts_from_paths(paths: SetFamily, *, max_n: "int | None" = None) -> SetFamily:
    """Minimal cut sets of the system with the given minimal path sets.

    Goes through the dual simple form: dualize the path-generated table, take
    its multilinear coefficients, and read off the minimal monomials. This
    exercises the algebraic route end to end, including the check that every
    minimal dual monomial carries coefficient +1.
    """
    family = _as_antichain(paths, "cuts_from_paths")
    if not family.members:
        raise ValueError("at least one path set required")
    dual_table = dualize_table(table_from_paths(family, max_n=max_n))
    return paths_from_simple_form(mobius_transform(dual_table))


def formation_balance(
    paths: SetFamily,
    subset: MaskLike,
    *,
    max_r: "int | None" = None,
    max_n: "int | None" = None,
) -> int:
    """Signed count of subfamilies whose union is the given subset.

    Counts nonempty subfamilies of the path family with union exactly equal to
    the subset, odd sizes minus even sizes. This equals the subset's
    coefficient in the simple form.
    """
    family = _as_antichain(paths, "formation_balance")
    if not family.members:
        raise ValueError("at least one path set required")
    target = _mask_bits(subset, family.n)
    r_limit, n_limit = _resolve_caps(max_r, max_n)
    # Members not inside the target cannot appear in a formation of it.
    relevant = [m for m in family.masks() if m & ~target == 0]
    if len(relevant) <= r_limit:
        return _formation_signs(relevant).get(target, 0)
    if family.n <= n_limit:
        return mobius_transform(table_from_paths(family)).coefficient(target)
    raise CapacityError(
        f"family size {family.r} exceeds max_r={r_limit} and n={family.n} exceeds max_n={n_limit}"
    )
