"""Per-vertex bit-vector labelings and the coordinatewise dominance order.

Labels are ints used as bitmasks: bit ``i`` is coordinate ``i``, which in
string form is the character at position ``i`` (leftmost = coordinate 0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import GraphError


def bits_le(a: int, b: int) -> bool:
    """Coordinatewise a <= b."""
    return a | b == b


def hamming(a: int, b: int) -> int:
    return (a ^ b).bit_count()


def label_to_str(mask: int, width: int) -> str:
    return "".join("1" if mask >> i & 1 else "0" for i in range(width))


def label_from_str(s: str) -> int:
    mask = 0
    for i, ch in enumerate(s):
        if ch == "1":
            mask |= 1 << i
        elif ch != "0":
            raise GraphError(f"bad bit character {ch!r} in label {s!r}")
    return mask


def is_downward_closed_masks(masks) -> bool:
    """True iff clearing any set bit of any member stays in the set."""
    present = set(masks)
    for m in present:
        rest = m
        while rest:
            bit = rest & -rest
            if m ^ bit not in present:
                return False
            rest ^= bit
    return True


def downward_closure(masks) -> set[int]:
    out = set(masks)
    stack = list(out)
    while stack:
        m = stack.pop()
        rest = m
        while rest:
            bit = rest & -rest
            child = m ^ bit
            if child not in out:
                out.add(child)
                stack.append(child)
            rest ^= bit
    return out


@dataclass(frozen=True)
class BinaryLabeling:
    """Distinct bit-vector labels of a fixed width, one per vertex."""

    width: int
    labels: tuple[int, ...]

    def __post_init__(self):
        top = 1 << self.width
        for m in self.labels:
            if not (0 <= m < top):
                raise GraphError(f"label {m} does not fit width {self.width}")
        if len(set(self.labels)) != len(self.labels):
            raise GraphError("labels must be pairwise distinct")

    def label(self, v: int) -> int:
        return self.labels[v]

    def vertex_of(self) -> dict[int, int]:
        return {m: v for v, m in enumerate(self.labels)}

    def le(self, u: int, v: int) -> bool:
        """Dominance order between the labels of two vertices."""
        return bits_le(self.labels[u], self.labels[v])

    def to_strings(self) -> list[str]:
        return [label_to_str(m, self.width) for m in self.labels]
