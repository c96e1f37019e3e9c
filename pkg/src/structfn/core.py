"""Domain types and subset-lattice primitives for semicoherent structure functions.

A system on components 1..n is described by its structure function phi, a 0/1
function over the 2^n component subsets. Subsets are encoded as bitmasks with
component i at bit i - 1, and a truth table packs all 2^n values of phi into a
single integer whose bit m is phi of the subset with mask m. The sparse
multilinear "simple form" maps subset masks to signed integer coefficients;
the zeta transform (sum over contained subsets) turns coefficients back into
values and the Mobius transform is its exact inverse.

Dense lattice passes run on numpy int64 arrays whenever a magnitude bound
proves int64 cannot overflow, and on Python integers otherwise, so every
result is exact.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

import numpy as np

__all__ = [
    "N_MAX",
    "CapacityError",
    "NotSemicoherentError",
    "NotStructureFunctionError",
    "InconsistentFormError",
    "InvalidSignatureError",
    "SubsetMask",
    "TruthTable",
    "MultilinearForm",
    "SetFamily",
    "DiagonalPoly",
    "SignatureVector",
    "ValidationReport",
    "validate_semicoherent",
    "zeta_transform",
    "mobius_transform",
]

# Dense operations allocate 2^n table entries; beyond 24 components nothing
# about them is interactive, so larger systems are rejected outright.
N_MAX = 24

# A zeta/Mobius pass over int64 leaves every intermediate value bounded by the
# sum of input magnitudes, so staying under this keeps int64 arithmetic exact.
_INT64_SAFE = 1 << 62


class CapacityError(ValueError):
    """A size cap was exceeded (component count n or family size r)."""


class NotSemicoherentError(ValueError):
    """The table violates monotonicity or phi(empty) = 0, phi(full) = 1."""


class NotStructureFunctionError(ValueError):
    """Coefficients whose subset sums leave {0, 1}, so they describe no 0/1 function."""


class InconsistentFormError(ValueError):
    """Coefficients that cannot come from the simple form of a semicoherent system."""


class InvalidSignatureError(ValueError):
    """A vector that is not the structural signature of any system of the given size."""


MaskLike = Union[int, "SubsetMask"]


def _iter_bit_positions(bits: int) -> Iterator[int]:
    """Yield the set bit positions of ``bits`` in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _subset_sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical subset order: by cardinality, then lexicographic components."""
    return (mask.bit_count(), tuple(_iter_bit_positions(mask)))


def _mask_bits(subset: MaskLike, n: int) -> int:
    """Coerce a subset argument to raw mask bits, checked against n components."""
    if isinstance(subset, SubsetMask):
        if subset.n != n:
            raise ValueError(f"subset is over {subset.n} components, expected {n}")
        return subset.bits
    bits = operator.index(subset)
    if not 0 <= bits < 1 << n:
        raise ValueError(f"mask {bits} out of range for {n} components")
    return bits


@lru_cache(maxsize=8)
def _component_patterns(n: int) -> tuple[int, ...]:
    """Pattern i marks every table position whose index has bit i set.

    Each pattern is a 2^n-bit integer; they let table-wide questions about one
    component be answered with a constant number of big-integer operations.
    """
    total = 1 << n
    patterns = []
    for i in range(n):
        width = 2 << i
        block = ((1 << (1 << i)) - 1) << (1 << i)
        while width < total:
            block |= block << width
            width <<= 1
        patterns.append(block)
    return tuple(patterns)


@lru_cache(maxsize=8)
def _size_patterns(n: int) -> tuple[int, ...]:
    """Pattern k marks every table position whose index has exactly k bits set.

    Built by the Pascal-triangle recursion: doubling the component count shifts
    a copy of each pattern into the half where the new component is present.
    """
    patterns = [1]
    for m in range(n):
        offset = 1 << m
        grown = [patterns[0]]
        for k in range(1, m + 1):
            grown.append(patterns[k] | (patterns[k - 1] << offset))
        grown.append(patterns[m] << offset)
        patterns = grown
    return tuple(patterns)


_REV8 = bytes(int(format(b, "08b")[::-1], 2) for b in range(256))


def _reverse_bits(bits: int, width: int) -> int:
    """Mirror the low ``width`` bits of ``bits`` (bit m moves to width-1-m)."""
    if width < 8:
        out = 0
        for m in range(width):
            if bits >> m & 1:
                out |= 1 << (width - 1 - m)
        return out
    return int.from_bytes(bits.to_bytes(width // 8, "little").translate(_REV8), "big")


def _minimal_true_bits(bits: int, n: int) -> int:
    """Positions of inclusion-minimal true entries of a monotone table.

    For monotone phi a true subset is minimal exactly when removing any single
    component flips it false, which each component pattern checks in bulk.
    """
    covered = 0
    for i, pattern in enumerate(_component_patterns(n)):
        covered |= (bits << (1 << i)) & pattern
    return bits & ~covered


def _true_count_by_size(table: "TruthTable") -> tuple[int, ...]:
    """Entry k counts the size-k subsets on which the table holds value 1."""
    patterns = _size_patterns(table.n)
    return tuple((table.bits & p).bit_count() for p in patterns)


def _unpack_values(bits: int, n: int) -> np.ndarray:
    total = 1 << n
    raw = bits.to_bytes((total + 7) // 8, "little")
    unpacked = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), count=total, bitorder="little")
    return unpacked.astype(np.int64)


def _pack_values(values01: np.ndarray) -> int:
    packed = np.packbits(values01.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _zeta_inplace(arr: np.ndarray, n: int) -> None:
    for i in range(n):
        step = 1 << i
        view = arr.reshape(-1, 2 * step)
        view[:, step:] += view[:, :step]


def _mobius_inplace(arr: np.ndarray, n: int) -> None:
    for i in range(n):
        step = 1 << i
        view = arr.reshape(-1, 2 * step)
        view[:, step:] -= view[:, :step]


def _zeta_list(values: list, n: int) -> None:
    """Pure-Python zeta pass; exact for arbitrarily large coefficients."""
    for i in range(n):
        step = 1 << i
        for base in range(0, 1 << n, 2 * step):
            for m in range(base + step, base + 2 * step):
                values[m] += values[m - step]


@dataclass(frozen=True)
class SubsetMask:
    """A subset of components 1..n packed into a bitmask (component i at bit i - 1)."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= N_MAX:
            raise CapacityError(f"component count {self.n} outside 1..{N_MAX}")
        if not 0 <= self.bits < 1 << self.n:
            raise ValueError(f"mask {self.bits} has bits above position {self.n - 1}")

    @classmethod
    def from_components(cls, components: Iterable[int], n: int) -> "SubsetMask":
        """Build a mask from 1-based component labels."""
        bits = 0
        for c in components:
            c = operator.index(c)
            if not 1 <= c <= n:
                raise ValueError(f"component {c} outside 1..{n}")
            bit = 1 << (c - 1)
            if bits & bit:
                raise ValueError(f"component {c} listed twice")
            bits |= bit
        return cls(bits=bits, n=n)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def components(self) -> tuple[int, ...]:
        """The 1-based component labels in ascending order."""
        return tuple(i + 1 for i in _iter_bit_positions(self.bits))

    def complement(self) -> "SubsetMask":
        return SubsetMask(bits=self.bits ^ ((1 << self.n) - 1), n=self.n)

    def issubset(self, other: "SubsetMask") -> bool:
        return self.n == other.n and self.bits & ~other.bits == 0

    def __str__(self) -> str:
        return "{" + ",".join(str(c) for c in self.components()) + "}"


@dataclass(frozen=True)
class TruthTable:
    """All 2^n values of a 0/1 function, packed so bit m holds phi(mask m)."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= N_MAX:
            raise CapacityError(f"component count {self.n} outside 1..{N_MAX}")
        if not 0 <= self.bits < 1 << (1 << self.n):
            raise ValueError(f"table for n={self.n} must fit in {1 << self.n} entries")

    @classmethod
    def from_values(cls, values: "str | Iterable[int]", n: "int | None" = None) -> "TruthTable":
        """Build a table from values listed in subset-mask index order.

        Accepts a '0'/'1' string or an iterable of 0/1 integers of length 2^n.
        """
        if isinstance(values, str):
            seq = []
            for pos, ch in enumerate(values):
                if ch not in "01":
                    raise ValueError(f"table character {ch!r} at position {pos} is not 0 or 1")
                seq.append(ord(ch) - ord("0"))
        else:
            seq = [operator.index(v) for v in values]
            for pos, v in enumerate(seq):
                if v not in (0, 1):
                    raise ValueError(f"table value {v} at position {pos} is not 0 or 1")
        if n is None:
            n = len(seq).bit_length() - 1
        if len(seq) != 1 << n:
            raise ValueError(f"expected {1 << n} values for n={n}, got {len(seq)}")
        bits = 0
        for m, v in enumerate(seq):
            if v:
                bits |= 1 << m
        return cls(n=n, bits=bits)

    def phi(self, subset: MaskLike) -> int:
        """Value of the function on the given subset."""
        return self.bits >> _mask_bits(subset, self.n) & 1

    def values_string(self) -> str:
        """The 2^n values as a '0'/'1' string in subset-mask index order."""
        total = 1 << self.n
        return format(self.bits, f"0{total}b")[::-1]


@dataclass(frozen=True)
class MultilinearForm:
    """Sparse signed-integer coefficients of a multilinear polynomial, keyed by mask.

    The polynomial is sum over stored subsets A of coeff(A) * prod_{i in A} x_i.
    Zero coefficients are dropped on construction.
    """

    n: int
    coeffs: Mapping[int, int]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= N_MAX:
            raise CapacityError(f"component count {self.n} outside 1..{N_MAX}")
        clean: dict[int, int] = {}
        for mask in sorted(self.coeffs):
            mask = operator.index(mask)
            if not 0 <= mask < 1 << self.n:
                raise ValueError(f"coefficient key {mask} out of range for {self.n} components")
            coeff = operator.index(self.coeffs[mask])
            if coeff:
                clean[mask] = coeff
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Iterable[int], int]], n: int) -> "MultilinearForm":
        """Build a form from (components, coefficient) pairs with 1-based labels."""
        coeffs: dict[int, int] = {}
        for components, coeff in terms:
            mask = SubsetMask.from_components(components, n).bits
            if mask in coeffs:
                raise ValueError(f"subset {SubsetMask(mask, n)} listed twice")
            coeffs[mask] = coeff
        return cls(n=n, coeffs=coeffs)

    def coefficient(self, subset: MaskLike) -> int:
        return self.coeffs.get(_mask_bits(subset, self.n), 0)

    def terms(self) -> tuple[tuple[SubsetMask, int], ...]:
        """All nonzero terms in canonical (size, components) order."""
        masks = sorted(self.coeffs, key=_subset_sort_key)
        return tuple((SubsetMask(bits=m, n=self.n), self.coeffs[m]) for m in masks)

    def total(self) -> int:
        """Sum of all coefficients; equals the function value on the full set."""
        return sum(self.coeffs.values())


@dataclass(frozen=True)
class SetFamily:
    """A family of nonempty component subsets in canonical (size, components) order."""

    n: int
    members: tuple[SubsetMask, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= N_MAX:
            raise CapacityError(f"component count {self.n} outside 1..{N_MAX}")
        seen: set[int] = set()
        checked: list[SubsetMask] = []
        for member in self.members:
            if not isinstance(member, SubsetMask):
                raise TypeError(f"family members must be SubsetMask, got {type(member).__name__}")
            if member.n != self.n:
                raise ValueError(f"member {member} is over {member.n} components, expected {self.n}")
            if member.bits == 0:
                raise ValueError("family members must be nonempty")
            if member.bits in seen:
                raise ValueError(f"duplicate member {member}")
            seen.add(member.bits)
            checked.append(member)
        checked.sort(key=lambda m: _subset_sort_key(m.bits))
        object.__setattr__(self, "members", tuple(checked))

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], n: int) -> "SetFamily":
        """Build a family from iterables of 1-based component labels."""
        return cls(n=n, members=tuple(SubsetMask.from_components(s, n) for s in sets))

    @property
    def r(self) -> int:
        return len(self.members)

    def masks(self) -> tuple[int, ...]:
        return tuple(m.bits for m in self.members)

    def is_antichain(self) -> bool:
        """True when no member contains another."""
        ms = self.masks()  # sorted by size, so containment only points forward
        for j in range(len(ms)):
            for i in range(j):
                if ms[i] & ~ms[j] == 0:
                    return False
        return True

    def minimized(self) -> "SetFamily":
        """The inclusion-minimal members, i.e. the family with supersets dropped."""
        keep: list[SubsetMask] = []
        for member in self.members:
            if not any(k.bits & ~member.bits == 0 for k in keep):
                keep.append(member)
        return SetFamily(n=self.n, members=tuple(keep))

    def size_census(self) -> tuple[int, ...]:
        """Entry k-1 counts the members of size k, for k = 1..n."""
        counts = [0] * self.n
        for member in self.members:
            counts[member.size - 1] += 1
        return tuple(counts)

    def __str__(self) -> str:
        return ", ".join(str(m) for m in self.members)


@dataclass(frozen=True)
class DiagonalPoly:
    """Coefficients d_1..d_n of sum_k d_k x^k, the multilinear extension with
    every argument set to the same x. There is never a constant term."""

    n: int
    d: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= N_MAX:
            raise CapacityError(f"component count {self.n} outside 1..{N_MAX}")
        if len(self.d) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(self.d)}")
        object.__setattr__(self, "d", tuple(operator.index(v) for v in self.d))

    def evaluate(self, x):
        """Value at x; exact for Fraction input, float for float input."""
        acc = 0
        for coeff in reversed(self.d):
            acc = acc * x + coeff
        return acc * x

    def total(self) -> int:
        """Sum of coefficients; equals the value at x = 1."""
        return sum(self.d)


@dataclass(frozen=True)
class SignatureVector:
    """Exact rational signature (s_1..s_n): entry k is the share of component
    failure orders in which the k-th failure brings the system down."""

    n: int
    s: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= N_MAX:
            raise CapacityError(f"component count {self.n} outside 1..{N_MAX}")
        if len(self.s) != self.n:
            raise InvalidSignatureError(f"expected {self.n} entries, got {len(self.s)}")
        values = tuple(Fraction(v) for v in self.s)
        for k, v in enumerate(values, start=1):
            if v < 0:
                raise InvalidSignatureError(f"entry {k} is negative: {v}")
        if sum(values) != 1:
            raise InvalidSignatureError(f"entries sum to {sum(values)}, expected 1")
        object.__setattr__(self, "s", values)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.s) + ")"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a semicoherence check; violations name the offending subsets."""

    ok: bool
    violations: tuple[str, ...]


def _set_str(mask: int) -> str:
    return "{" + ",".join(str(i + 1) for i in _iter_bit_positions(mask)) + "}"


def validate_semicoherent(table: TruthTable) -> ValidationReport:
    """Check phi(empty) = 0, phi(full) = 1, and monotonicity.

    Monotonicity is checked along each of the n single-component directions,
    which generate the whole subset order. Each reported monotonicity
    violation names the first offending pair in that direction.
    """
    n, bits = table.n, table.bits
    total = 1 << n
    violations: list[str] = []
    if bits & 1:
        violations.append("phi({}) = 1, expected 0")
    if not bits >> (total - 1) & 1:
        violations.append(f"phi({_set_str(total - 1)}) = 0, expected 1")
    full = (1 << total) - 1
    for i, pattern in enumerate(_component_patterns(n)):
        step = 1 << i
        without_i = full & ~pattern
        bad = bits & ~(bits >> step) & without_i
        if bad:
            m = (bad & -bad).bit_length() - 1
            violations.append(
                f"monotonicity violated: phi({_set_str(m)}) = 1 > 0 = phi({_set_str(m | step)})"
            )
    return ValidationReport(ok=not violations, violations=tuple(violations))


def zeta_transform(form: MultilinearForm, *, max_n: "int | None" = None) -> TruthTable:
    """Evaluate the form on every subset: value(A) = sum of coeff(B) over B inside A.

    This inverts :func:`mobius_transform`. Raises NotStructureFunctionError if
    any subset sum leaves {0, 1}, naming the first offending subset.
    """
    limit = N_MAX if max_n is None else max_n
    if form.n > limit:
        raise CapacityError(f"n={form.n} exceeds max_n={limit}")
    n = form.n
    total = 1 << n
    magnitude = sum(abs(c) for c in form.coeffs.values())
    if magnitude < _INT64_SAFE:
        arr = np.zeros(total, dtype=np.int64)
        for mask, coeff in form.coeffs.items():
            arr[mask] = coeff
        _zeta_inplace(arr, n)
        bad = (arr != 0) & (arr != 1)
        if bad.any():
            m = int(np.argmax(bad))
            raise NotStructureFunctionError(
                f"value {int(arr[m])} at subset {_set_str(m)} is not in {{0, 1}}"
            )
        bits = _pack_values(arr)
    else:
        values = [0] * total
        for mask, coeff in form.coeffs.items():
            values[mask] = coeff
        _zeta_list(values, n)
        bits = 0
        for m, v in enumerate(values):
            if v not in (0, 1):
                raise NotStructureFunctionError(
                    f"value {v} at subset {_set_str(m)} is not in {{0, 1}}"
                )
            if v:
                bits |= 1 << m
    return TruthTable(n=n, bits=bits)


def mobius_transform(table: TruthTable, *, max_n: "int | None" = None) -> MultilinearForm:
    """Coefficients of the unique multilinear polynomial matching the table.

    coeff(A) = sum over B inside A of (-1)^(|A| - |B|) * value(B). For 0/1
    input every intermediate stays far below the int64 range, so the numpy
    pass is always exact.
    """
    limit = N_MAX if max_n is None else max_n
    if table.n > limit:
        raise CapacityError(f"n={table.n} exceeds max_n={limit}")
    arr = _unpack_values(table.bits, table.n)
    _mobius_inplace(arr, table.n)
    nonzero = np.nonzero(arr)[0]
    coeffs = {int(m): int(arr[m]) for m in nonzero}
    return MultilinearForm(n=table.n, coeffs=coeffs)
