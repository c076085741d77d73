"""g-core/g-quotient towers for straight and bar partitions.

Straight towers use the classical abacus: spread a padded beta-set over g
runners, push beads to the bottom for the core, and read each runner as a
smaller partition for the quotient. Bar towers use paired runners on a Maya
diagram, with the two residue classes {j, g-j} merged into one charged
fermionic strip per component.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .bar_partitions import (
    BarPartition,
    bar_length_multiset,
    is_bar_partition,
    is_tbar_core,
)
from .partitions import (
    Partition,
    conjugate,
    from_first_column_hooks,
    hook_length_multiset,
    is_partition,
    is_t_core,
)


@dataclass(frozen=True)
class StraightTower:
    """A partition split into its g-core and g-quotient.

    Invariants: the core is a g-core, weight is the total quotient size, and
    the reconstructed partition has size core.size + g * weight.
    """

    g: int
    core: Partition
    quotient: tuple[Partition, ...]

    def __post_init__(self) -> None:
        if self.g < 2:
            raise ValueError("g must be >= 2")
        if len(self.quotient) != self.g:
            raise ValueError("quotient must have exactly g components")

    @property
    def weight(self) -> int:
        return sum(sum(q) for q in self.quotient)


@dataclass(frozen=True)
class BarTower:
    """A bar partition split into its g-bar-core and g-bar-quotient.

    The quotient holds (g+1)/2 components: component 0 is a bar partition,
    the rest are straight partitions.
    """

    g: int
    core: BarPartition
    quotient: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.g < 3 or self.g % 2 == 0:
            raise ValueError("g must be odd and >= 3")
        if len(self.quotient) != (self.g + 1) // 2:
            raise ValueError("quotient must have exactly (g+1)/2 components")

    @property
    def weight(self) -> int:
        return sum(sum(q) for q in self.quotient)


def _padded_beta(p: Partition, n_beads: int) -> list[int]:
    """Beta-set with exactly ``n_beads`` values, strictly decreasing."""
    k = len(p)
    values = [p[i] + n_beads - 1 - i for i in range(k)]
    values.extend(range(n_beads - 1 - k, -1, -1))
    return values


def _runner_values(beta: list[int], g: int) -> list[list[int]]:
    """Split beta values by residue, mapped onto runner positions (b - r) / g."""
    runners: list[list[int]] = [[] for _ in range(g)]
    for b in beta:
        runners[b % g].append(b // g)
    for r in runners:
        r.sort(reverse=True)
    return runners


def _partition_from_runner(values: list[int]) -> Partition:
    """Decode one runner's descending positions as a padded beta-set."""
    m = len(values)
    return tuple(
        part for i, v in enumerate(values) if (part := v - (m - 1 - i)) > 0
    )


def decompose(p: Partition, g: int) -> StraightTower:
    """Split ``p`` into its g-core and g-quotient.

    The beta-set is padded to the smallest multiple of g covering all parts;
    component i collects the beta values congruent to i mod g. Adding g more
    phantom beads shifts every runner uniformly, so the result does not depend
    on the padding choice.

    Args:
        p: any partition.
        g: integer >= 2.

    Returns:
        StraightTower with is_t_core(core, g) true and
        sum(p) = sum(core) + g * weight.
    """
    if g < 2:
        raise ValueError("g must be >= 2")
    n_beads = g * ((len(p) + g - 1) // g)
    beta = _padded_beta(p, n_beads)
    runners = _runner_values(beta, g)
    quotient = tuple(_partition_from_runner(r) for r in runners)
    core_beta = []
    for residue, r in enumerate(runners):
        core_beta.extend(residue + g * j for j in range(len(r)))
    core = from_first_column_hooks(core_beta)
    return StraightTower(g=g, core=core, quotient=quotient)


def reconstruct(tower: StraightTower) -> Partition:
    """Rebuild the unique partition with the given g-core and g-quotient.

    Inverse of :func:`decompose`.

    Raises:
        ValueError: if the tower's core is not a g-core.
    """
    g = tower.g
    if not is_t_core(tower.core, g):
        raise ValueError("tower core is not a g-core")
    depth = max((len(q) for q in tower.quotient), default=0)
    n_beads = g * (((len(tower.core) + g - 1) // g) + depth)
    core_runners = _runner_values(_padded_beta(tower.core, n_beads), g)
    beta = []
    for residue, (positions, q) in enumerate(zip(core_runners, tower.quotient)):
        m = len(positions)
        # a g-core occupies each runner from the bottom up
        padded = list(q) + [0] * (m - len(q))
        beta.extend(residue + g * (padded[i] + m - 1 - i) for i in range(m))
    return from_first_column_hooks(beta)


def hook_bijection_check(p: Partition, g: int, k: int) -> tuple[int, int]:
    """Count hooks of length k*g in ``p`` and hooks of length k in its quotient.

    The two counts agree for every partition; returning both sides keeps the
    check honest.
    """
    if g < 2 or k < 1:
        raise ValueError("need g >= 2 and k >= 1")
    in_p = sum(1 for h in hook_length_multiset(p) if h == k * g)
    tower = decompose(p, g)
    in_quot = sum(
        1 for q in tower.quotient for h in hook_length_multiset(q) if h == k
    )
    return in_p, in_quot


def is_st_core(p: Partition, s: int, t: int) -> bool:
    """True if ``p`` is simultaneously an s-core and a t-core."""
    if s <= 1 or t <= 1:
        raise ValueError("s and t must exceed 1")
    return is_t_core(p, s) and is_t_core(p, t)


def is_st_core_by_quotient(p: Partition, s: int, t: int) -> bool:
    """Quotient-side test for (s,t)-cores when gcd(s,t) > 1.

    With g = gcd(s,t): true iff every component of the g-quotient is an
    (s/g, t/g)-core. The g-core is unconstrained, since any hook divisible
    by s or t is divisible by g and therefore lives in the quotient. Used
    as a cross-check against :func:`is_st_core`.
    """
    g = gcd(s, t)
    if g <= 1:
        raise ValueError("gcd(s, t) must exceed 1")
    sp, tp = s // g, t // g
    tower = decompose(p, g)
    return all(is_t_core(q, sp) and is_t_core(q, tp) for q in tower.quotient)


def selfconjugate_tower_check(tower: StraightTower) -> bool:
    """True iff the tower reconstructs to a self-conjugate partition.

    Tested on the tower itself: the core must be self-conjugate and the
    quotient must satisfy conjugate(q[i]) == q[g-1-i].
    """
    g = tower.g
    if tower.core != conjugate(tower.core):
        return False
    return all(
        conjugate(tower.quotient[i]) == tower.quotient[g - 1 - i] for i in range(g)
    )


def _pair_class_beads(parts: tuple[int, ...], j: int, g: int) -> tuple[list[int], set[int], int]:
    """Bead data for the merged residue classes {j, g-j} of a bar partition.

    Parts j + alpha*g put beads at nonnegative positions alpha; parts
    (g-j) + m*g remove the bead at position -1-m. Returns the nonnegative bead
    positions (descending), the removed-position indices m, and the charge.
    """
    alphas = sorted((x - j) // g for x in parts if x % g == j)
    holes = {(x - (g - j)) // g for x in parts if x % g == g - j}
    charge = len(alphas) - len(holes)
    return sorted(alphas, reverse=True), holes, charge


def _component_from_beads(alphas: list[int], holes: set[int], charge: int) -> Partition:
    """Decode a charged Maya strip into a straight partition.

    Bead positions descend as q_i = part_i + charge - i (1-indexed); beads sit
    at every alpha and at -1-m for m not in holes.
    """
    depth = len(alphas) + len(holes) + abs(charge) + 2
    if holes:
        # the window must reach past the deepest removed position
        depth += max(holes) + 1
    beads = list(alphas)
    m = 0
    while len(beads) < depth + len(holes):
        if m not in holes:
            beads.append(-1 - m)
        m += 1
    parts = []
    for i, q in enumerate(beads, start=1):
        part = q - charge + i
        if part <= 0:
            break
        parts.append(part)
    return tuple(parts)


def bar_decompose(b: BarPartition, g: int) -> BarTower:
    """Split a bar partition into its g-bar-core and g-bar-quotient.

    Component 0 collects the parts divisible by g, each divided by g (a bar
    partition). Component j (1 <= j <= (g-1)/2) reads the merged residue
    classes {j, g-j} as one charged Maya strip and decodes it as a straight
    partition; the strip's charge survives into the core.

    Args:
        b: a bar partition.
        g: odd integer >= 3.
    """
    if g < 3 or g % 2 == 0:
        raise ValueError("g must be odd and >= 3")
    lam0 = tuple(sorted((x // g for x in b if x % g == 0), reverse=True))
    components: list[tuple[int, ...]] = [lam0]
    core_parts: list[int] = []
    for j in range(1, (g + 1) // 2):
        alphas, holes, charge = _pair_class_beads(b, j, g)
        components.append(_component_from_beads(alphas, holes, charge))
        if charge > 0:
            core_parts.extend(j + ell * g for ell in range(charge))
        elif charge < 0:
            core_parts.extend((g - j) + ell * g for ell in range(-charge))
    core = tuple(sorted(core_parts, reverse=True))
    return BarTower(g=g, core=core, quotient=tuple(components))


def _bar_core_charges(core: BarPartition, g: int) -> list[int]:
    """Charges of a g-bar-core's pair classes; rejects non-cores.

    A bar partition is a g-bar-core iff no part is divisible by g, each
    populated residue class forms an initial run j, j+g, ..., and classes j
    and g-j are never both populated.
    """
    by_residue: dict[int, set[int]] = {}
    for x in core:
        r = x % g
        if r == 0:
            raise ValueError("core has a part divisible by g")
        by_residue.setdefault(r, set()).add((x - r) // g)
    charges = []
    for j in range(1, (g + 1) // 2):
        pos = by_residue.get(j, set())
        neg = by_residue.get(g - j, set())
        if pos and neg:
            raise ValueError(f"core populates both residue classes {j} and {g - j}")
        run = pos or neg
        if run != set(range(len(run))):
            raise ValueError(f"core residue class {j if pos else g - j} is not an initial run")
        charges.append(len(pos) - len(neg))
    return charges


def bar_reconstruct(tower: BarTower) -> BarPartition:
    """Rebuild the bar partition with the given g-bar-core and quotient.

    Inverse of :func:`bar_decompose`.

    Raises:
        ValueError: if the core is not a g-bar-core or component 0 is not a
            bar partition.
    """
    g = tower.g
    if not is_bar_partition(tower.quotient[0]):
        raise ValueError("component 0 must have distinct parts")
    charges = _bar_core_charges(tower.core, g)
    parts = [g * x for x in tower.quotient[0]]
    for j in range(1, (g + 1) // 2):
        lam = tower.quotient[j]
        if not is_partition(lam):
            raise ValueError(f"component {j} is not a partition")
        charge = charges[j - 1]
        depth = len(lam) + abs(charge) + 2
        beads = {lam[i - 1] + charge - i if i <= len(lam) else charge - i for i in range(1, depth + 1)}
        floor = charge - depth
        for q in beads:
            if q >= 0:
                parts.append(j + q * g)
        m = 0
        while -1 - m > floor:
            if -1 - m not in beads:
                parts.append((g - j) + m * g)
            m += 1
    result = tuple(sorted(parts, reverse=True))
    if not is_bar_partition(result):
        raise ValueError("tower does not assemble into a bar partition")
    return result


def bar_bijection_check(b: BarPartition, g: int, k: int) -> tuple[int, int]:
    """Count bars of length k*g in ``b`` against length-k structures in its quotient.

    The quotient side counts bars of length k in component 0 plus hooks of
    length k in the straight components; the two counts agree.
    """
    if g < 3 or g % 2 == 0 or k < 1:
        raise ValueError("need odd g >= 3 and k >= 1")
    in_b = sum(1 for v in bar_length_multiset(b) if v == k * g)
    tower = bar_decompose(b, g)
    in_quot = sum(1 for v in bar_length_multiset(tower.quotient[0]) if v == k)
    for lam in tower.quotient[1:]:
        in_quot += sum(1 for h in hook_length_multiset(lam) if h == k)
    return in_b, in_quot


def is_stbar_core(b: BarPartition, s: int, t: int) -> bool:
    """True if ``b`` is simultaneously an s-bar-core and a t-bar-core."""
    if s <= 1 or t <= 1 or s % 2 == 0 or t % 2 == 0:
        raise ValueError("s and t must be odd and exceed 1")
    return is_tbar_core(b, s) and is_tbar_core(b, t)


def is_stbar_core_by_quotient(b: BarPartition, s: int, t: int) -> bool:
    """Quotient-side test for (s-bar, t-bar)-cores when gcd(s,t) > 1 is odd.

    Component 0 must be an (s'-bar, t'-bar)-core and every straight component
    an (s', t')-core. Cross-check for :func:`is_stbar_core`.
    """
    g = gcd(s, t)
    if g <= 1 or g % 2 == 0:
        raise ValueError("gcd(s, t) must be odd and exceed 1")
    sp, tp = s // g, t // g
    tower = bar_decompose(b, g)
    if not (is_tbar_core(tower.quotient[0], sp) and is_tbar_core(tower.quotient[0], tp)):
        return False
    return all(
        is_t_core(lam, sp) and is_t_core(lam, tp) for lam in tower.quotient[1:]
    )