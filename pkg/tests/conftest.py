from plantedmaps.core import CellularMap, from_np_pairs


def uni(n: int, *pairs: tuple[int, int]) -> CellularMap:
    """One-face map with n non-plant edges; pairs index the interior 1..2n."""
    return from_np_pairs((2 * n,), pairs)


def mk(interiors, *pairs: tuple[int, int]) -> CellularMap:
    """Map from interior sizes and a matching on the non-plant half-edges,
    indexed 1..2n across faces."""
    return from_np_pairs(tuple(interiors), pairs)


def double_factorial_odd(n: int) -> int:
    out = 1
    for i in range(1, 2 * n, 2):
        out *= i
    return out


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)
