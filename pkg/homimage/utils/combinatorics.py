"""
Small combinatorial generators
"""
from typing import Iterator, Tuple


def set_partitions(n: int) -> Iterator[Tuple[int, ...]]:
    """
    Yield every partition of range(n) as a restricted growth string.

    labels[i] is the block of element i; blocks are numbered in order of
    first appearance, so each partition is produced exactly once.
    """
    if n == 0:
        yield ()
        return
    labels = [0] * n

    def extend(i: int, top: int) -> Iterator[Tuple[int, ...]]:
        if i == n:
            yield tuple(labels)
            return
        for block in range(top + 2):
            labels[i] = block
            yield from extend(i + 1, max(top, block))

    labels[0] = 0
    yield from extend(1, 0)
