"""Brute-force reference implementations working straight from definitions.

Everything here trades speed for transparency: subsets are enumerated one at
a time with itertools and checked against the defining property, with none of
the bitwise bulk operations or lattice transforms the fast routes use. The
test suite and the CLI ``verify`` command compare fast results against these.

Deliberate limits: semicoherent enumeration stops at four components and
formation censuses at sixteen family members, past which the search spaces
explode. Nothing here is meant for production-size inputs.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .core import CapacityError, MultilinearForm, SetFamily, SubsetMask, TruthTable

__all__ = [
    "ORACLE_N_MAX",
    "ORACLE_R_MAX",
    "enumerate_semicoherent",
    "oracle_dual_table",
    "oracle_minimal_path_sets",
    "oracle_minimal_cut_sets",
    "oracle_simple_form",
    "oracle_formations",
]

ORACLE_N_MAX = 4
ORACLE_R_MAX = 16


def _components_to_mask(components: tuple[int, ...]) -> int:
    mask = 0
    for c in components:
        mask |= 1 << (c - 1)
    return mask


def _proper_subsets(components: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for size in range(len(components)):
        yield from itertools.combinations(components, size)


def enumerate_semicoherent(n: int) -> Iterator[TruthTable]:
    """Every semicoherent structure function on n components, by filtration.

    Walks all 2^(2^n) candidate tables and keeps those with value 0 on the
    empty set, 1 on the full set, and value(A) <= value(B) for every subset
    pair A of B, checked pair by pair from the definition.
    """
    if not 1 <= n <= ORACLE_N_MAX:
        raise CapacityError(f"enumeration supported for 1..{ORACLE_N_MAX} components, got {n}")
    total = 1 << n
    pairs = [
        (a, b)
        for a in range(total)
        for b in range(total)
        if a != b and a & b == a
    ]
    for code in range(1 << total):
        if code & 1:
            continue
        if not code >> (total - 1) & 1:
            continue
        if all((code >> a & 1) <= (code >> b & 1) for a, b in pairs):
            yield TruthTable(n=n, bits=code)


def oracle_dual_table(table: TruthTable) -> TruthTable:
    """Dual table by pointwise definition: dual(A) = 1 - phi(complement of A)."""
    n = table.n
    everything = tuple(range(1, n + 1))
    bits = 0
    for size in range(n + 1):
        for combo in itertools.combinations(everything, size):
            rest = tuple(c for c in everything if c not in combo)
            if 1 - table.phi(_components_to_mask(rest)):
                bits |= 1 << _components_to_mask(combo)
    return TruthTable(n=n, bits=bits)


def oracle_minimal_path_sets(table: TruthTable) -> SetFamily:
    """Minimal path sets by definition: phi = 1 on the set, 0 on every proper subset."""
    n = table.n
    members = []
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(1, n + 1), size):
            if table.phi(_components_to_mask(combo)) != 1:
                continue
            if all(
                table.phi(_components_to_mask(sub)) == 0 for sub in _proper_subsets(combo)
            ):
                members.append(combo)
    return SetFamily.from_sets(members, n=n)


def oracle_minimal_cut_sets(table: TruthTable) -> SetFamily:
    """Minimal cut sets by definition: the system fails when the whole set fails,
    but survives the failure of every proper subset."""
    n = table.n
    everything = tuple(range(1, n + 1))
    members = []
    for size in range(1, n + 1):
        for combo in itertools.combinations(everything, size):
            outside = tuple(c for c in everything if c not in combo)
            if table.phi(_components_to_mask(outside)) != 0:
                continue
            if all(
                table.phi(_components_to_mask(tuple(c for c in everything if c not in sub))) == 1
                for sub in _proper_subsets(combo)
            ):
                members.append(combo)
    return SetFamily.from_sets(members, n=n)


def oracle_simple_form(table: TruthTable) -> MultilinearForm:
    """Simple form by direct expansion of the self-descriptive polynomial.

    Start from sum over subsets A of phi(A) * prod_{i in A} x_i *
    prod_{i not in A} (1 - x_i), expand every (1 - x_i) product into signed
    monomials, and collect like terms. No lattice transform involved.
    """
    n = table.n
    everything = tuple(range(1, n + 1))
    coeffs: dict[int, int] = {}
    for size in range(n + 1):
        for combo in itertools.combinations(everything, size):
            if table.phi(_components_to_mask(combo)) != 1:
                continue
            absent = tuple(c for c in everything if c not in combo)
            base = _components_to_mask(combo)
            for extra_size in range(len(absent) + 1):
                sign = 1 if extra_size % 2 == 0 else -1
                for extra in itertools.combinations(absent, extra_size):
                    key = base | _components_to_mask(extra)
                    coeffs[key] = coeffs.get(key, 0) + sign
    return MultilinearForm(n=n, coeffs=coeffs)


def oracle_formations(paths: SetFamily, subset: "SubsetMask | int") -> tuple[int, int]:
    """Counts of (odd, even)-size nonempty subfamilies whose union is the subset.

    Enumerates every nonempty subfamily of the path family, forms its union as
    a plain set of component labels, and tallies by subfamily parity. The
    difference odd - even is the subset's simple-form coefficient.
    """
    if paths.r > ORACLE_R_MAX:
        raise CapacityError(
            f"formation census supported for at most {ORACLE_R_MAX} members, got {paths.r}"
        )
    if isinstance(subset, SubsetMask):
        target = set(subset.components())
    else:
        target = {i + 1 for i in range(paths.n) if subset >> i & 1}
    member_sets = [set(m.components()) for m in paths.members]
    odd = even = 0
    for size in range(1, len(member_sets) + 1):
        for combo in itertools.combinations(member_sets, size):
            union: set[int] = set()
            for member in combo:
                union |= member
            if union == target:
                if size % 2:
                    odd += 1
                else:
                    even += 1
    return (odd, even)
