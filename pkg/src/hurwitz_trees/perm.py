"""Permutations of {1..n} in one-line form and transpositions.

Products compose right to left: ``compose(p, q)(i) == p(q(i))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence


class Transposition(NamedTuple):
    """The transposition swapping ``a`` and ``b``; always stored with ``a < b``."""

    a: int
    b: int

    @classmethod
    def of(cls, x: int, y: int) -> "Transposition":
        if x == y:
            raise ValueError(f"transposition needs two distinct labels, got ({x} {y})")
        if x < 1 or y < 1:
            raise ValueError(f"labels are 1-based, got ({x} {y})")
        return cls(x, y) if x < y else cls(y, x)

    @classmethod
    def parse(cls, text: str) -> "Transposition":
        parts = text.strip().split("-")
        if len(parts) != 2:
            raise ValueError(f"expected 'a-b', got {text!r}")
        return cls.of(int(parts[0]), int(parts[1]))

    def moves(self, x: int) -> bool:
        return x == self.a or x == self.b

    def other(self, x: int) -> int:
        """The endpoint that is not ``x``."""
        if x == self.a:
            return self.b
        if x == self.b:
            return self.a
        raise ValueError(f"{x} is not an endpoint of {self}")

    def to_perm(self, n: int) -> "Permutation":
        if self.b > n:
            raise ValueError(f"{self} does not act on [{n}]")
        images = list(range(1, n + 1))
        images[self.a - 1], images[self.b - 1] = self.b, self.a
        return Permutation(tuple(images))

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"

    def __repr__(self) -> str:
        return f"({self.a} {self.b})"


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of [1..{len(self.images)}]: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def long_cycle(cls, n: int) -> "Permutation":
        """The cycle 1 -> 2 -> ... -> n -> 1."""
        return cls(tuple(range(2, n + 1)) + (1,) if n else ())

    @classmethod
    def from_cycle(cls, cycle: Sequence[int], n: int) -> "Permutation":
        images = list(range(1, n + 1))
        for x, y in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
            images[x - 1] = y
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(x) for x in text.split(",")))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles including fixed points, each starting at its smallest label."""
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x - 1]
            out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def __str__(self) -> str:
        return ",".join(map(str, self.images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p * q`` acting right to left: ``q`` first, then ``p``."""
    if p.n != q.n:
        raise ValueError(f"ground sets differ: {p.n} vs {q.n}")
    return Permutation(tuple(p.images[x - 1] for x in q.images))


def multiply(factors: Sequence[Permutation | Transposition], n: int) -> Permutation:
    """Product ``f_1 * f_2 * ... * f_k``; the last factor acts first."""
    result = Permutation.identity(n)
    for f in factors:
        result = compose(result, f.to_perm(n) if isinstance(f, Transposition) else f)
    return result


def conjugate(t: Transposition, s: Permutation | Transposition) -> Transposition:
    """``t^s = s^-1 t s``, which is the transposition of ``s^-1(a)`` and ``s^-1(b)``."""
    if isinstance(s, Transposition):
        # an involution is its own inverse
        a = s.other(t.a) if s.moves(t.a) else t.a
        b = s.other(t.b) if s.moves(t.b) else t.b
        return Transposition.of(a, b)
    if t.b > s.n:
        raise ValueError(f"{t!r} does not act on [{s.n}]")
    inv = s.inverse()
    return Transposition.of(inv(t.a), inv(t.b))


def absolute_length(p: Permutation) -> int:
    """Transposition length: n minus the number of cycles (fixed points included)."""
    return p.n - len(p.cycles())


def is_nc_element(p: Permutation) -> bool:
    c = Permutation.long_cycle(p.n)
    return absolute_length(p) + absolute_length(compose(p.inverse(), c)) == absolute_length(c)


def nc_leq(p: Permutation, q: Permutation) -> bool:
    return absolute_length(p) + absolute_length(compose(p.inverse(), q)) == absolute_length(q)
