"""Word evaluation and breadth-first exploration of matrix groups."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadWord
from .linalg import Mat


def matrix_of_word(gens, word) -> Mat:
    """Product of generators for a 1-based index word; () is the identity."""
    if not gens:
        raise BadWord("no generators")
    out = Mat.identity(gens[0].field, gens[0].n)
    for i in word:
        if not (1 <= i <= len(gens)):
            raise BadWord(f"letter {i} outside 1..{len(gens)}")
        out = out * gens[i - 1]
    return out


def commutator(a: Mat, b: Mat) -> Mat:
    return a * b * a.inverse() * b.inverse()


def element_order(m: Mat, cap: int = 512) -> int | None:
    """Multiplicative order, or None if it exceeds cap."""
    acc = m
    for k in range(1, cap + 1):
        if acc.is_identity():
            return k
        acc = acc * m
    return None


@dataclass
class GroupBall:
    """Ball of a generated matrix group: element -> shortest word found."""

    elements: dict
    radius: int
    closed: bool
    capped: bool
    level_sizes: list

    def order(self) -> int | None:
        """Group order when the ball closed; None otherwise."""
        return len(self.elements) if self.closed else None

    def word_of(self, m: Mat):
        return self.elements.get(m)

    def __contains__(self, m: Mat) -> bool:
        return m in self.elements

    def __len__(self) -> int:
        return len(self.elements)


def bfs_ball(gens, radius: int = 16, cap: int = 500_000) -> GroupBall:
    """Breadth-first ball of the group generated by gens.

    Stops early (closed=True) when a whole level adds nothing, which
    enumerates a finite group completely. The cap bounds stored elements;
    hitting it marks the ball capped and stops the walk.
    """
    ident = Mat.identity(gens[0].field, gens[0].n)
    elements = {ident: ()}
    frontier = [ident]
    closed = False
    capped = False
    depth = 0
    level_sizes = [1]
    for depth in range(1, radius + 1):
        new = []
        for m in frontier:
            w = elements[m]
            for i, g in enumerate(gens, start=1):
                mg = m * g
                if mg not in elements:
                    if len(elements) >= cap:
                        capped = True
                        break
                    elements[mg] = w + (i,)
                    new.append(mg)
            if capped:
                break
        if capped:
            break
        if not new:
            closed = True
            depth -= 1
            break
        level_sizes.append(len(new))
        frontier = new
    return GroupBall(elements, depth, closed, capped, level_sizes)
