"""Exhaustive box-problem solver.

Both boundaries of B are cut into elementary pieces at the box edges, and each box
becomes a bitmask of the pieces it spans. The search branches on the uncovered piece
with the fewest remaining boxes (on the reduction's instances: a unit row, with its
two complementary boxes), which keeps unit propagation implicit.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import pairwise

from kfrechet.core.settings import get_settings
from kfrechet.curves import interval_union_covers
from kfrechet.schemas import BoxInstance, Interval

logger = logging.getLogger(__name__)


def _pieces(target: Interval, spans: Sequence[Interval], tol: float) -> list[Interval]:
    cuts = sorted(
        {target.lo, target.hi}
        | {x for span in spans for x in (span.lo, span.hi) if target.lo < x < target.hi}
    )
    return [Interval(lo=a, hi=b) for a, b in pairwise(cuts) if b - a > tol]


def _spans(piece: Interval, span: Interval, tol: float) -> bool:
    return span.lo <= piece.lo + tol and span.hi >= piece.hi - tol


@dataclass(frozen=True)
class _CoverProblem:
    masks: tuple[int, ...]
    # coverers[p]: bitmask of the boxes spanning piece p.
    coverers: tuple[int, ...]
    full: int
    axis_masks: tuple[int, int]

    @classmethod
    def of(cls, b: BoxInstance, tol: float) -> "_CoverProblem":
        x_pieces = _pieces(b.bottom, [box.x_interval for box in b.boxes], tol)
        y_pieces = _pieces(b.left, [box.y_interval for box in b.boxes], tol)
        masks = []
        for box in b.boxes:
            mask = 0
            for bit, piece in enumerate(x_pieces):
                if _spans(piece, box.x_interval, tol):
                    mask |= 1 << bit
            for bit, piece in enumerate(y_pieces, start=len(x_pieces)):
                if _spans(piece, box.y_interval, tol):
                    mask |= 1 << bit
            masks.append(mask)
        total = len(x_pieces) + len(y_pieces)
        coverers = tuple(
            sum(1 << i for i, mask in enumerate(masks) if mask >> bit & 1) for bit in range(total)
        )
        x_mask = (1 << len(x_pieces)) - 1
        full = (1 << total) - 1
        return cls(tuple(masks), coverers, full, (x_mask, full & ~x_mask))

    def _lower_bound(self, uncovered: int, allowed: int) -> int:
        """Boxes still needed: per axis, uncovered pieces over the most one box spans."""
        bound = 0
        for axis in self.axis_masks:
            missing = (uncovered & axis).bit_count()
            if not missing:
                continue
            gain = max(
                (
                    (self.masks[i] & uncovered & axis).bit_count()
                    for i in range(len(self.masks))
                    if allowed >> i & 1
                ),
                default=0,
            )
            if gain == 0:
                return len(self.masks) + 1
            bound = max(bound, -(-missing // gain))
        return bound

    def solve(self, covered: int, allowed: int, budget: int) -> int | None:
        """Bitmask of at most `budget` allowed boxes completing `covered`, or None."""
        if covered == self.full:
            return 0
        uncovered = self.full & ~covered
        if self._lower_bound(uncovered, allowed) > budget:
            return None

        branch = -1
        branch_count = len(self.masks) + 1
        for bit in range(self.full.bit_length()):
            if not uncovered >> bit & 1:
                continue
            count = (self.coverers[bit] & allowed).bit_count()
            if count < branch_count:
                branch, branch_count = bit, count
        if branch_count == 0:
            return None

        options = self.coverers[branch] & allowed
        while options:
            low = options & -options
            options ^= low
            allowed &= ~low
            rest = self.solve(covered | self.masks[low.bit_length() - 1], allowed, budget - 1)
            if rest is not None:
                return rest | low
        return None


def solve_box_bruteforce(b: BoxInstance) -> tuple[int, ...] | None:
    """Lexicographically first selection of at most k boxes covering both boundaries.

    Boxes are decided in index order: each is taken if it adds coverage and some cover
    still exists with it, which is checked with the branching search.
    """
    problem = _CoverProblem.of(b, get_settings().tol)
    everything = (1 << len(b.boxes)) - 1
    if problem.solve(0, everything, b.k) is None:
        logger.debug(f"No cover with at most {b.k} of {len(b.boxes)} boxes")
        return None

    chosen: list[int] = []
    covered = 0
    for index, mask in enumerate(problem.masks):
        if covered == problem.full:
            break
        if not mask & ~covered:
            continue
        later = everything & ~((1 << (index + 1)) - 1)
        if problem.solve(covered | mask, later, b.k - len(chosen) - 1) is not None:
            chosen.append(index)
            covered |= mask
    logger.debug(f"Box cover of size {len(chosen)} (k={b.k})")
    return tuple(chosen)


def box_selection_covers(b: BoxInstance, selection: Sequence[int]) -> bool:
    """True iff the selected boxes project onto the whole bottom and left boundaries."""
    tol = get_settings().tol
    boxes = [b.boxes[i] for i in selection]
    return interval_union_covers(
        (box.x_interval for box in boxes), b.bottom, tol
    ) and interval_union_covers((box.y_interval for box in boxes), b.left, tol)
