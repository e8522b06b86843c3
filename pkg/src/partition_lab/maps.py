"""Combinatorial transformations on partitions.

Sylvester's hook bijection from odd to strict partitions, Glaisher's map,
the sign-reversing involution on pairs (strict partition, labeled
partition) together with its fixed-point correspondence, and the odd-gap
decomposition behind the parity-index generating function.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Partition, parity_index, partitions, runs, sol, union
from .report import VerificationReport
from .shapes import Border, alternating_index, dur2, modular2_diagram


class LabeledPartition:
    """A partition whose parts carry an X or Y label.

    Canonical order: values descending, the X-labeled copy of a value before
    its Y-labeled copies.  Validity: each X-labeled value appears X-labeled
    exactly once, and no part of value v+1 may coexist with an X-labeled v
    (equivalently, under the canonical order with an infinite sentinel in
    front, an X-labeled part is preceded by something at least 2 larger).
    """

    __slots__ = ("entries",)

    entries: tuple[tuple[int, bool], ...]  # (value, is_x)

    def __init__(self, entries=()) -> None:
        normal = []
        for value, is_x in entries:
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"part values must be positive integers, got {value!r}")
            normal.append((value, bool(is_x)))
        normal.sort(key=lambda e: (-e[0], 0 if e[1] else 1))
        self.entries = tuple(normal)
        values = {value for value, _ in self.entries}
        seen_x = set()
        for value, is_x in self.entries:
            if not is_x:
                continue
            if value in seen_x:
                raise ValueError(f"value {value} is X-labeled twice")
            seen_x.add(value)
            if value + 1 in values:
                raise ValueError(
                    f"X-labeled {value} cannot coexist with a part {value + 1}"
                )

    @property
    def size(self) -> int:
        return sum(value for value, _ in self.entries)

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def x_count(self) -> int:
        return sum(1 for _, is_x in self.entries if is_x)

    @property
    def y_count(self) -> int:
        return sum(1 for _, is_x in self.entries if not is_x)

    @property
    def sign(self) -> int:
        return -1 if self.y_count % 2 else 1

    def values(self) -> tuple[int, ...]:
        return tuple(value for value, _ in self.entries)

    def has_x(self, value: int) -> bool:
        return (value, True) in self.entries

    def smallest_y(self) -> int | None:
        smallest = None
        for value, is_x in self.entries:
            if not is_x and (smallest is None or value < smallest):
                smallest = value
        return smallest

    def add(self, value: int, is_x: bool = False) -> "LabeledPartition":
        return LabeledPartition(self.entries + ((value, is_x),))

    def remove(self, value: int, is_x: bool) -> "LabeledPartition":
        entries = list(self.entries)
        entries.remove((value, is_x))
        return LabeledPartition(entries)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LabeledPartition):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        return "+".join(
            f"{value}x" if is_x else str(value) for value, is_x in self.entries
        )

    def __repr__(self) -> str:
        return f"LabeledPartition({str(self)!r})"


def parse_labeled(text: str) -> LabeledPartition:
    """Parse a ``6x+3+3+1x`` literal; "" or "0" is empty."""
    body = text.strip()
    if body in ("", "0"):
        return LabeledPartition()
    entries = []
    for token in body.split("+"):
        token = token.strip()
        is_x = token.endswith("x")
        digits = token[:-1] if is_x else token
        if not digits.isdigit() or int(digits) < 1:
            raise ValueError(f"bad part {token!r} in labeled literal {text!r}")
        entries.append((int(digits), is_x))
    return LabeledPartition(entries)


@dataclass(frozen=True)
class SignedPair:
    """A strict partition paired with a labeled partition.

    Weight exponents: x counts X-labeled parts, y the total number of parts,
    q the total size; the sign is -1 to the number of Y-labeled parts.
    """

    lam: Partition
    eta: LabeledPartition

    def __post_init__(self) -> None:
        if not self.lam.is_strict():
            raise ValueError(f"left partition must be strict, got {self.lam}")

    @property
    def sign(self) -> int:
        return self.eta.sign

    @property
    def weight(self) -> tuple[int, int, int]:
        """(x-exponent, y-exponent, q-exponent)."""
        return (
            self.eta.x_count,
            self.lam.length + self.eta.length,
            self.lam.size + self.eta.size,
        )

    def __str__(self) -> str:
        return f"({self.lam}, {self.eta})"


def parse_pair(text: str) -> SignedPair:
    """Parse a ``<strict>|<labeled>`` pair literal."""
    from .core import parse as parse_partition

    if "|" not in text:
        raise ValueError(f"pair literal needs a '|' separator: {text!r}")
    left, right = text.split("|", 1)
    return SignedPair(parse_partition(left), parse_labeled(right))


class PhiCase(Enum):
    CASE1 = 1
    CASE2 = 2
    FIXED = 0


def classify_pair(pair: SignedPair):
    """Locate the pivots of the involution.

    ``a`` is the smallest part of the strict side whose predecessor value is
    not X-labeled on the labeled side (a part 1 always qualifies, no part 0
    exists); ``b`` is the smallest Y-labeled part.  Case 1 when a > b,
    case 2 when a <= b, fixed when neither exists (None plays infinity).
    """
    eta = pair.eta
    a = None
    for part in reversed(pair.lam.parts):  # ascending
        if not eta.has_x(part - 1):
            a = part
            break
    b = eta.smallest_y()
    if a is None and b is None:
        return PhiCase.FIXED, None, None
    if b is not None and (a is None or a > b):
        return PhiCase.CASE1, a, b
    return PhiCase.CASE2, a, b


def involution_phi(pair: SignedPair) -> SignedPair:
    """Sign-reversing, weight-preserving involution on signed pairs.

    Case 1 moves the smallest Y-labeled part across to the strict side;
    case 2 moves part ``a`` across as a new Y-labeled part.  Both moves are
    well defined: in case 1 the moved value cannot already sit in the strict
    side (that would force an X-labeled b-1 next to a part b), and in case 2
    the incoming Y-part cannot crowd an X-labeled a-1, by the choice of a.
    The pair constructors re-check both invariants at runtime.
    """
    case, a, b = classify_pair(pair)
    if case is PhiCase.FIXED:
        return pair
    if case is PhiCase.CASE1:
        return SignedPair(
            Partition(pair.lam.parts + (b,)), pair.eta.remove(b, is_x=False)
        )
    remaining = list(pair.lam.parts)
    remaining.remove(a)
    return SignedPair(Partition(remaining), pair.eta.add(a, is_x=False))


def fixed_to_strict(pair: SignedPair) -> Partition:
    """Union of both sides of a fixed pair; lands on a strict partition."""
    case, _, _ = classify_pair(pair)
    if case is not PhiCase.FIXED:
        raise ValueError(f"{pair} is not a fixed point")
    merged = union(pair.lam, Partition(pair.eta.values()))
    if not merged.is_strict():
        raise ValueError(f"fixed pair {pair} does not merge to a strict partition")
    return merged


def strict_to_fixed(t: Partition) -> SignedPair:
    """Inverse of the fixed-point correspondence.

    Within each maximal run of consecutive parts, labels alternate ending
    with X at the smallest part; X-labeled parts form the labeled side and
    the rest the strict side.
    """
    if not t.is_strict():
        raise ValueError(f"expected a strict partition, got {t}")
    lam_parts: list[int] = []
    eta_entries: list[tuple[int, bool]] = []
    for block in runs(t):
        for offset, value in enumerate(reversed(block)):  # ascending within run
            if offset % 2 == 0:
                eta_entries.append((value, True))
            else:
                lam_parts.append(value)
    return SignedPair(Partition(lam_parts), LabeledPartition(eta_entries))


def enumerate_labeled(n: int) -> list[LabeledPartition]:
    """All valid labeled partitions of total size ``n``."""
    found: list[LabeledPartition] = []
    for p in partitions(n):
        values = sorted(set(p.parts), reverse=True)
        present = set(values)
        eligible = [v for v in values if v + 1 not in present]
        for mask in range(1 << len(eligible)):
            chosen = {v for idx, v in enumerate(eligible) if mask >> idx & 1}
            entries = []
            for v in values:
                count = p.multiplicity(v)
                if v in chosen:
                    entries.append((v, True))
                    entries.extend((v, False) for _ in range(count - 1))
                else:
                    entries.extend((v, False) for _ in range(count))
            found.append(LabeledPartition(entries))
    return found


def enumerate_pairs(n: int) -> list[SignedPair]:
    """All signed pairs of total size ``n``."""
    pairs: list[SignedPair] = []
    for lam_size in range(n + 1):
        labeled = enumerate_labeled(n - lam_size)
        for lam in partitions(lam_size, distinct=True):
            for eta in labeled:
                pairs.append(SignedPair(lam, eta))
    return pairs


def _pair_sort_key(pair: SignedPair):
    lam = pair.lam
    eta_key = tuple((-value, 0 if is_x else 1) for value, is_x in pair.eta.entries)
    return (lam.length, lam.size, tuple(-part for part in lam.parts), eta_key)


def involution_table(n: int) -> str:
    """Two-column table pairing every negative pair with its image."""
    lines = ["- | +"]
    negatives = sorted(
        (p for p in enumerate_pairs(n) if p.sign < 0), key=_pair_sort_key
    )
    for pair in negatives:
        lines.append(f"{pair} | {involution_phi(pair)}")
    return "\n".join(lines)


# -- Sylvester / Glaisher -----------------------------------------------------


def _hook_lengths(p: Partition) -> list[int]:
    # raw (l1, l2, l1, l2, ...) hook readings, trailing zero kept
    diagram = modular2_diagram(p, Border.RIGHT_BORDER)
    rows = diagram.rows
    out: list[int] = []
    for i in range(1, dur2(p) + 1):
        cells = list(rows[i - 1][i - 1:])
        for lower in rows[i:]:
            if len(lower) < i:
                break
            cells.append(lower[i - 1])
        out.append(len(cells))
        out.append(sum(1 for cell in cells if cell == 2))
    return out


def sylvester(p: Partition) -> Partition:
    """Sylvester's hook bijection from odd partitions to strict partitions.

    Reads the 2-modular diagram in the right-border drawing; hook i starts
    at diagonal cell (i, i), runs right along row i and down column i.  The
    image lists each hook's cell count followed by its count of 2-cells,
    dropping a trailing zero.
    """
    if not p:
        return Partition()
    image = _hook_lengths(p)
    if image[-1] == 0:
        image.pop()
    result = Partition(image)
    assert result.is_strict() and result.size == p.size, f"hooks of {p} gave {result}"
    return result


def sylvester_stats_check(p: Partition) -> VerificationReport:
    """Check the statistics Sylvester's map transports on one odd partition.

    Size preservation, Durfee side against half the image length, the
    alternating index against the image's odd-run count, and the three
    hook-length relations tying consecutive readings to part multiplicities
    and gaps.
    """
    name = "SYLVESTER_STATS"
    params = {"partition": str(p)}
    if not p:
        return VerificationReport(name, params, True)
    image = sylvester(p)
    k = dur2(p)
    ell = _hook_lengths(p)
    problems: list[str] = []
    if image.size != p.size:
        problems.append(f"size {p.size} -> {image.size}")
    if k != (image.length + 1) // 2:
        problems.append(f"Durfee side {k} != ceil(len/2) {(image.length + 1) // 2}")
    if alternating_index(p) != sol(image):
        problems.append(
            f"alt {alternating_index(p)} != sol(image) {sol(image)}"
        )
    for i in range(1, k):
        if ell[2 * i - 2] - ell[2 * i - 1] - 1 != p.multiplicity(2 * i - 1):
            problems.append(f"l{2 * i - 1}-l{2 * i}-1 != multiplicity of {2 * i - 1}")
    if ell[2 * k - 1] != 0:
        if ell[2 * k - 2] - ell[2 * k - 1] - 1 != p.multiplicity(2 * k - 1):
            problems.append(f"l{2 * k - 1}-l{2 * k}-1 != multiplicity of {2 * k - 1}")
        if p.parts[k - 1] <= 2 * k - 1:
            problems.append(f"nonzero l{2 * k} but row {k} does not exceed the square")
    for i in range(1, k):
        gap = p.parts[i - 1] - p.parts[i]
        if ell[2 * i - 1] - ell[2 * i] - 1 != gap // 2:
            problems.append(f"l{2 * i}-l{2 * i + 1}-1 != half gap at row {i}")
    if problems:
        return VerificationReport(name, params, False, witness="; ".join(problems))
    return VerificationReport(name, params, True)


def glaisher(p: Partition) -> Partition:
    """Glaisher's merge map from odd partitions to strict partitions.

    Each odd value with multiplicity f contributes parts value * 2^e over
    the binary digits e of f.
    """
    parts: list[int] = []
    for value in set(p.parts):
        if value % 2 == 0:
            raise ValueError(f"Glaisher's map needs odd parts, got {value}")
        count = p.multiplicity(value)
        e = 0
        while count:
            if count & 1:
                parts.append(value << e)
            count >>= 1
            e += 1
    result = Partition(parts)
    assert result.is_strict() and result.size == p.size
    return result


# -- odd-gap decomposition ------------------------------------------------------


def lemma51_decompose(p: Partition) -> tuple[Partition, Partition]:
    """Strip odd gaps off a partition.

    Scanning rows bottom-up, every odd gap between consecutive rows donates
    one cell from each row above it and records the row index in the first
    component; what remains has all even parts.  The first component is
    strict with as many parts as the parity index of the reversed part list.
    """
    work = list(p.parts)
    sigma: list[int] = []
    for i in range(len(work), 0, -1):
        below = work[i] if i < len(work) else 0
        if (work[i - 1] - below) % 2:
            for j in range(i):
                work[j] -= 1
            sigma.append(i)
    tau = Partition(part for part in work if part)
    sigma_p = Partition(sigma)
    assert sigma_p.is_strict() and all(part % 2 == 0 for part in tau.parts)
    assert sigma_p.length == parity_index(p.parts[::-1])
    return sigma_p, tau


def lemma51_compose(sigma: Partition, tau: Partition) -> Partition:
    """Inverse of the odd-gap decomposition: conjugate of tau' union sigma."""
    if not sigma.is_strict():
        raise ValueError(f"first component must be strict, got {sigma}")
    if any(part % 2 for part in tau.parts):
        raise ValueError(f"second component must have even parts, got {tau}")
    return union(tau.conjugate(), sigma).conjugate()
