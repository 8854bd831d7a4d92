"""Integer plane vectors as plain ``(x, y)`` tuples."""

from __future__ import annotations

from typing import Iterable

Vec = tuple[int, int]

ORIGIN: Vec = (0, 0)


def add(u: Vec, v: Vec) -> Vec:
    return (u[0] + v[0], u[1] + v[1])


def sub(u: Vec, v: Vec) -> Vec:
    return (u[0] - v[0], u[1] - v[1])


def neg(u: Vec) -> Vec:
    return (-u[0], -u[1])


def scale(c: int, u: Vec) -> Vec:
    return (c * u[0], c * u[1])


def cross(u: Vec, v: Vec) -> int:
    return u[0] * v[1] - u[1] * v[0]


def rot90(u: Vec) -> Vec:
    """Counterclockwise quarter turn."""
    return (-u[1], u[0])


def as_vec(obj: Iterable[int]) -> Vec:
    x, y = obj
    if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, int) or not isinstance(y, int):
        raise TypeError(f"expected integer pair, got {obj!r}")
    return (x, y)


def bounds(points: Iterable[Vec]) -> tuple[int, int, int, int]:
    """Return ``(x_min, x_max, y_min, y_max)`` of a nonempty point set."""
    it = iter(points)
    x0, y0 = next(it)
    x_min = x_max = x0
    y_min = y_max = y0
    for x, y in it:
        if x < x_min:
            x_min = x
        elif x > x_max:
            x_max = x
        if y < y_min:
            y_min = y
        elif y > y_max:
            y_max = y
    return x_min, x_max, y_min, y_max
