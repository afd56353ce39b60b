"""
Signed permutations of the hyperoctahedral group B_n and their statistics.

A signed permutation is a bijection s on {-n,...,-1,1,...,n} with
s(-i) = -s(i).  It is stored in window (one-line) form as the tuple
(s(1), ..., s(n)); the negative half is implied by the symmetry.

The text form used everywhere (CLI, JSON exports) is a comma-separated
list of signed integers with no significant whitespace, e.g. "-2,-4,5,3,1".
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

#: Largest rank accepted by enumerate_group (2^n * n! elements).
GROUP_ENUM_BOUND = 7


@dataclass(frozen=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        n = len(self.window)
        if n < 1:
            raise ValueError("rank must be at least 1")
        if {abs(v) for v in self.window} != set(range(1, n + 1)):
            raise ValueError(
                f"window {self.window} is not a signed permutation of 1..{n}"
            )

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        """Evaluate at any i in {-n..-1, 1..n}."""
        if i == 0 or abs(i) > self.n:
            raise ValueError(f"argument {i} out of range for rank {self.n}")
        return self.window[i - 1] if i > 0 else -self.window[-i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.window)


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def generator(n: int, i: int) -> SignedPermutation:
    """The Coxeter generator s_i of B_n: s_0 negates 1, s_i swaps i, i+1."""
    if not 0 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    window = list(range(1, n + 1))
    if i == 0:
        window[0] = -1
    else:
        window[i - 1], window[i] = window[i], window[i - 1]
    return SignedPermutation(tuple(window))


def compose(sigma: SignedPermutation, tau: SignedPermutation) -> SignedPermutation:
    """Right-to-left composition: (sigma tau)(i) = sigma(tau(i))."""
    if sigma.n != tau.n:
        raise ValueError(f"rank mismatch: {sigma.n} != {tau.n}")
    return SignedPermutation(tuple(sigma(tau(i)) for i in range(1, tau.n + 1)))


def parse_window(text: str, n: int) -> SignedPermutation:
    """Parse comma-separated window text, validating against rank n."""
    tokens = [t.strip() for t in text.split(",")]
    values = []
    for tok in tokens:
        if not re.fullmatch(r"-?\d+", tok):
            raise ValueError(f"malformed token {tok!r} in window {text!r}")
        values.append(int(tok))
    if len(values) != n:
        raise ValueError(f"expected {n} entries, got {len(values)}")
    seen = set()
    for v in values:
        if not 1 <= abs(v) <= n:
            raise ValueError(f"value {v} out of range for rank {n}")
        if abs(v) in seen:
            raise ValueError(f"repeated absolute value {abs(v)}")
        seen.add(abs(v))
    return SignedPermutation(tuple(values))


def parse_cycles(text: str, n: int) -> SignedPermutation:
    """
    Parse cycle-notation text such as "(1,4,-3)(-2)" into a rank-n element.

    A cycle (a_1,...,a_k) sends |a_j| to a_{j+1} cyclically; values whose
    absolute value is not mentioned are fixed.
    """
    body = text.strip()
    if not re.fullmatch(r"(\(\s*-?\d+(\s*,\s*-?\d+)*\s*\))+", body):
        raise ValueError(f"malformed cycle notation {text!r}")
    window = list(range(1, n + 1))
    seen: set[int] = set()
    for group in re.findall(r"\(([^()]*)\)", body):
        entries = [int(t) for t in group.split(",")]
        for v in entries:
            if not 1 <= abs(v) <= n:
                raise ValueError(f"value {v} out of range for rank {n}")
            if abs(v) in seen:
                raise ValueError(f"repeated absolute value {abs(v)}")
            seen.add(abs(v))
        k = len(entries)
        for j, v in enumerate(entries):
            window[abs(v) - 1] = entries[(j + 1) % k]
    return SignedPermutation(tuple(window))


@dataclass(frozen=True)
class StatRecord:
    wex: int
    drop: int
    neg: int
    cyc: int
    fwex: int


def wex_set(sigma: SignedPermutation) -> frozenset[int]:
    return frozenset(i for i in range(1, sigma.n + 1) if sigma(i) >= i)


def basic_stats(sigma: SignedPermutation) -> StatRecord:
    n = sigma.n
    wex = sum(1 for i in range(1, n + 1) if sigma(i) >= i)
    neg = sum(1 for v in sigma.window if v < 0)
    return StatRecord(
        wex=wex,
        drop=n - wex,
        neg=neg,
        cyc=len(full_cycle_notation(sigma)),
        fwex=2 * wex + neg,
    )


def full_cycle_notation(sigma: SignedPermutation) -> tuple[tuple[int, ...], ...]:
    """
    The full cycle notation, including identity cycles (i) for fixed points.

    Canonical form: each cycle starts at the entry of smallest absolute
    value in its orbit, and cycles are sorted by that value.
    """
    n = sigma.n
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        pos = abs(sigma(start))
        while pos != start:
            orbit.append(pos)
            seen[pos] = True
            pos = abs(sigma(pos))
        # entry at orbit[t] is the image of the previous orbit position
        cycle = [sigma(orbit[-1])] + [sigma(orbit[t]) for t in range(len(orbit) - 1)]
        cycles.append(tuple(cycle))
    return tuple(cycles)


@dataclass(frozen=True)
class PathCycle:
    """
    A cycle rewritten so that every sign change inserts the pair x, -x:
    entry c is emitted as |c| and additionally -|c| when the next entry
    of the original cycle is negative.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("path cycle must be nonempty")
        k = len(self.entries)
        positions: dict[int, list[int]] = {}
        for idx, v in enumerate(self.entries):
            positions.setdefault(abs(v), []).append(idx)
        for value, idxs in positions.items():
            if len(idxs) > 2:
                raise ValueError(f"value {value} appears more than twice")
            if len(idxs) == 2:
                a, b = idxs
                adjacent = (b - a == 1) or (a == 0 and b == k - 1)
                if not adjacent:
                    raise ValueError(f"paired value {value} is not consecutive")
                lo, hi = (a, b) if b - a == 1 else (b, a)
                if not (self.entries[lo] > 0 > self.entries[hi]):
                    raise ValueError(f"pair for {value} must read x, -x")

    def __str__(self) -> str:
        return "<" + ",".join(str(v) for v in self.entries) + ">"


def cycle_to_path_cycle(cycle: Sequence[int]) -> PathCycle:
    """Rewrite one cycle: entry c becomes |c|, plus -|c| when the next entry
    is negative."""
    out: list[int] = []
    k = len(cycle)
    for x in range(k):
        out.append(abs(cycle[x]))
        if cycle[(x + 1) % k] < 0:
            out.append(-abs(cycle[x]))
    return PathCycle(tuple(out))


def path_cycles(sigma: SignedPermutation) -> tuple[PathCycle, ...]:
    """Full path cycle notation; cyc(sigma) is the number of path cycles.

    Cycles are rewritten from the canonical full cycle notation, so each
    path cycle is a fixed rotation of the (rotation-free) cyclic object.
    """
    return tuple(cycle_to_path_cycle(c) for c in full_cycle_notation(sigma))


def permutation_from_path_cycles(
    cycles: Iterable[PathCycle], n: int
) -> SignedPermutation:
    """
    Rebuild the permutation from its full path cycle notation.

    Each path cycle splits into groups: a lone positive head h, or a pair
    h, -h.  A paired head maps to minus the next head, a lone one to plus.
    """
    window = [0] * n
    for pc in cycles:
        heads: list[int] = []
        paired: list[bool] = []
        entries = pc.entries
        idx = 0
        while idx < len(entries):
            head = entries[idx]
            if head <= 0:
                raise ValueError(f"group head {head} is not positive in {pc}")
            if idx + 1 < len(entries) and entries[idx + 1] == -head:
                heads.append(head)
                paired.append(True)
                idx += 2
            else:
                heads.append(head)
                paired.append(False)
                idx += 1
        m = len(heads)
        for t, head in enumerate(heads):
            image = heads[(t + 1) % m]
            window[head - 1] = -image if paired[t] else image
    if 0 in window:
        raise ValueError("path cycles do not cover 1..n")
    return SignedPermutation(tuple(window))


@dataclass(frozen=True)
class PairSet:
    kind: str
    pairs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.pairs)

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


def alignment_sets(
    sigma: SignedPermutation,
) -> tuple[PairSet, PairSet, PairSet]:
    """The nested / EN / NE alignment pair sets, scanned clause by clause."""
    n = sigma.n
    nest, en, ne = set(), set(), set()
    for i in range(1, n + 1):
        si = sigma(i)
        for j in range(1, n + 1):
            sj = sigma(j)
            if (-i < -j < -sj < -si) or (-i < j <= sj < -si) or (i < j <= sj < si):
                nest.add((i, j))
            if (-i < 0 < -si < sj < j) or (i <= si < sj < j):
                en.add((i, j))
            if si < i < j <= sj:
                ne.add((i, j))
    return (
        PairSet("nest", frozenset(nest)),
        PairSet("EN", frozenset(en)),
        PairSet("NE", frozenset(ne)),
    )


def crossing_set(sigma: SignedPermutation) -> PairSet:
    n = sigma.n
    out = set()
    for i in range(1, n + 1):
        si = sigma(i)
        for j in range(1, n + 1):
            sj = sigma(j)
            if (i < j <= si < sj) or (-i < -j < -si < -sj) or (-i < j <= -si < sj):
                out.add((i, j))
    return PairSet("crossing", frozenset(out))


def alignment_count(sigma: SignedPermutation) -> int:
    return sum(len(s) for s in alignment_sets(sigma))


def crossing_count(sigma: SignedPermutation) -> int:
    return len(crossing_set(sigma))


def inversion_pairs(sigma: SignedPermutation) -> tuple[PairSet, PairSet]:
    """
    The two inversion pair families: {i<j, s(i)>s(j)} and {i<=j, s(-i)>s(j)}.
    They are counted separately; a pair lying in both contributes twice to
    the length.
    """
    n = sigma.n
    fam_a = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if sigma(i) > sigma(j)
    )
    fam_b = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i, n + 1)
        if -sigma(i) > sigma(j)
    )
    return PairSet("inversion-A", fam_a), PairSet("inversion-B", fam_b)


def inversion_count(sigma: SignedPermutation) -> int:
    """Coxeter length of sigma as the doubled-family inversion count."""
    a, b = inversion_pairs(sigma)
    return len(a) + len(b)


def alcr_formula_value(sigma: SignedPermutation) -> int:
    """
    The closed form for al + crs in terms of n, wex, neg:
    (n - fwex/2)(wex - 1 + neg) + neg*wex/2, always an integer.
    """
    s = basic_stats(sigma)
    doubled = (2 * sigma.n - s.fwex) * (s.wex - 1 + s.neg) + s.neg * s.wex
    if doubled % 2:
        raise ArithmeticError(f"half-integral value for {sigma}")
    return doubled // 2


def enumerate_group(
    n: int, bound: int = GROUP_ENUM_BOUND
) -> Iterator[SignedPermutation]:
    """
    Yield all 2^n * n! elements of B_n exactly once, in lexicographic
    order of windows (entries compared as integers, so -k precedes k).
    """
    if n > bound:
        raise ValueError(f"rank {n} exceeds enumeration bound {bound}")
    if n < 1:
        raise ValueError("rank must be at least 1")

    window: list[int] = []
    used = [False] * (n + 1)

    def rec() -> Iterator[SignedPermutation]:
        if len(window) == n:
            yield SignedPermutation(tuple(window))
            return
        for v in range(-n, n + 1):
            if v == 0 or used[abs(v)]:
                continue
            used[abs(v)] = True
            window.append(v)
            yield from rec()
            window.pop()
            used[abs(v)] = False

    return rec()
