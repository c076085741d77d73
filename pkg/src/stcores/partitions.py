"""Integer partitions and their Young-diagram hook machinery.

A partition is represented as a tuple of weakly decreasing positive integers;
the empty tuple is the empty partition of 0. All functions are pure and all
values immutable, so everything here is safe to share between threads.
"""

from __future__ import annotations

from typing import Iterable

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize a part list into a partition.

    Parts are sorted into weakly decreasing order and zeros are dropped, so no
    unsorted intermediate value can escape into the rest of the library.

    Args:
        parts: any iterable of nonnegative integers.

    Returns:
        The canonical partition tuple.

    Raises:
        ValueError: if any part is negative or not an integer.
    """
    cleaned = []
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool):
            raise ValueError(f"partition parts must be integers, got {p!r}")
        if p < 0:
            raise ValueError(f"partition parts must be nonnegative, got {p}")
        if p > 0:
            cleaned.append(p)
    return tuple(sorted(cleaned, reverse=True))


def is_partition(parts: tuple[int, ...]) -> bool:
    """True if ``parts`` is already a canonical partition tuple."""
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def size(p: Partition) -> int:
    """Sum of the parts."""
    return sum(p)


def conjugate(p: Partition) -> Partition:
    """Reflect the Young diagram, exchanging rows and columns.

    An involution that preserves the size and the hook-length multiset.
    """
    if not p:
        return ()
    cols = []
    k = len(p)
    for c in range(p[0]):
        while p[k - 1] <= c:
            k -= 1
        cols.append(k)
    return tuple(cols)


def is_self_conjugate(p: Partition) -> bool:
    """True if the partition equals its conjugate."""
    return p == conjugate(p)


def first_column_hooks(p: Partition) -> frozenset[int]:
    """Beta-set of first-column hook lengths.

    Row i of a k-row partition contributes p[i] + k - 1 - i (0-indexed), giving
    a strictly decreasing set of k distinct positive integers. The beta-set
    determines the partition completely.
    """
    k = len(p)
    return frozenset(p[i] + k - 1 - i for i in range(k))


def from_first_column_hooks(beta: Iterable[int]) -> Partition:
    """Decode a beta-set back into a partition.

    Accepts padded beta-sets: a maximal initial block {0, 1, ..., m-1} of
    phantom values is stripped automatically, since row i of an N-row padding
    satisfies part = value - (N - 1 - i) and phantom rows decode to part 0.

    Args:
        beta: distinct nonnegative integers.

    Returns:
        The unique partition whose (possibly padded) first-column hooks are
        ``beta``.

    Raises:
        ValueError: on repeated or negative values.
    """
    values = sorted(beta, reverse=True)
    if len(values) != len(set(values)):
        raise ValueError("beta-set values must be distinct")
    if values and values[-1] < 0:
        raise ValueError("beta-set values must be nonnegative")
    n = len(values)
    parts = []
    for i, v in enumerate(values):
        part = v - (n - 1 - i)
        if part < 0:
            raise ValueError(f"{values} is not a valid beta-set")
        if part > 0:
            parts.append(part)
    return tuple(parts)


def hook_length_multiset(p: Partition) -> tuple[int, ...]:
    """All hook lengths of the Young diagram, sorted decreasing.

    The hook length of cell (i, j) is p[i] - j + conj[j] - i - 1 in 0-indexed
    coordinates (arm plus leg plus one). Computed from the closed formula with
    the conjugate, O(parts^2) rather than O(size).

    Returns:
        A tuple of length size(p), one entry per cell.
    """
    conj = conjugate(p)
    hooks = []
    for i, row in enumerate(p):
        for j in range(row):
            hooks.append(row - j + conj[j] - i - 1)
    return tuple(sorted(hooks, reverse=True))


def diagonal_hooks(p: Partition) -> tuple[int, ...]:
    """Hook lengths down the main diagonal, strictly decreasing.

    For cell (i, i) the hook length is p[i] + conj[i] - 2i - 1. For a
    self-conjugate partition these are distinct odd numbers 2(p[i] - i) - 1
    summing to the size.
    """
    conj = conjugate(p)
    out = []
    for i, row in enumerate(p):
        if row <= i:
            break
        out.append(row + conj[i] - 2 * i - 1)
    return tuple(out)


def from_diagonal_hooks(diag: Iterable[int]) -> Partition:
    """The unique self-conjugate partition with the given diagonal hooks.

    Args:
        diag: distinct odd positive integers in any order.

    Returns:
        Self-conjugate partition p with diagonal_hooks(p) equal to ``diag``
        sorted decreasing.

    Raises:
        ValueError: on even, repeated, or nonpositive entries.
    """
    values = sorted(diag, reverse=True)
    if len(values) != len(set(values)):
        raise ValueError("diagonal hooks must be distinct")
    if any(v <= 0 or v % 2 == 0 for v in values):
        raise ValueError("diagonal hooks must be odd and positive")
    # Diag hook d at diagonal cell i spans an arm and a leg of (d-1)/2 cells.
    rows: list[int] = []
    for i, d in enumerate(values):
        arm = (d - 1) // 2
        rows.append(arm + i + 1)
    # rows[i] is the length of row i out to the end of its arm; below the
    # diagonal the shape is forced by symmetry.
    parts = list(rows)
    for i in range(len(values)):
        for j in range(i + 1, rows[i]):
            if j >= len(parts):
                parts.append(0)
            if j > i:
                parts[j] = max(parts[j], i + 1)
    return tuple(p for p in parts if p > 0)


def is_t_core(p: Partition, t: int) -> bool:
    """True if no hook of length t exists.

    Uses the beta-set test: t is a hook length iff some beta value b >= t has
    b - t outside the beta-set. Equivalent, for this predicate, to having no
    hook length divisible by t.

    Args:
        p: a partition.
        t: integer >= 1.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    beta = first_column_hooks(p)
    return all(b < t or (b - t) in beta for b in beta)
