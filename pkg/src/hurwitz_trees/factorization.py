"""Words of transpositions and the set F_n of minimal factorizations of the long cycle.

F_n is the set of words ``(t_1, ..., t_{n-1})`` whose product ``t_1 * ... * t_{n-1}``
(rightmost acting first) is the cycle ``1 -> 2 -> ... -> n -> 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .perm import Permutation, Transposition, absolute_length, compose, is_nc_element, multiply, nc_leq

DEFAULT_ENUM_CAP = 8


class CapExceeded(ValueError):
    """Raised when a requested size exceeds the configured resource cap."""


def check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the resource cap {cap}")


@dataclass(frozen=True)
class Word:
    """An ordered sequence of transpositions acting on [n]."""

    letters: tuple[Transposition, ...]
    n: int

    def __post_init__(self) -> None:
        for pos, t in enumerate(self.letters, 1):
            if t.b > self.n:
                raise ValueError(f"letter {pos} ({t}) has a label outside [1..{self.n}]")

    @classmethod
    def of(cls, pairs: Sequence[tuple[int, int]], n: int | None = None) -> "Word":
        letters = tuple(Transposition.of(a, b) for a, b in pairs)
        return cls(letters, len(letters) + 1 if n is None else n)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Word":
        """Read ``"a-b,c-d,..."``; ``n`` defaults to the letter count plus one."""
        text = "".join(text.split())
        letters = []
        if text:
            for pos, chunk in enumerate(text.split(","), 1):
                try:
                    letters.append(Transposition.parse(chunk))
                except ValueError as exc:
                    raise ValueError(f"letter {pos}: {exc}") from None
        return cls(tuple(letters), len(letters) + 1 if n is None else n)

    def product(self) -> Permutation:
        return multiply(self.letters, self.n)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return ",".join(map(str, self.letters))


@dataclass(frozen=True)
class PhiResult:
    pi: Permutation
    partials: tuple[Permutation, ...]
    witness_sets: tuple[frozenset[int], ...]


def all_transpositions(n: int) -> list[Transposition]:
    return [Transposition(a, b) for a, b in combinations(range(1, n + 1), 2)]


def is_fn_word(w: Word) -> bool:
    return len(w.letters) == w.n - 1 and w.product() == Permutation.long_cycle(w.n)


def enumerate_fn(n: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Word]:
    """Yield every word of F_n once, in lexicographic order of letters.

    Depth-first over prefixes. After a prefix with product ``p`` the remaining
    target is ``r = p^-1 c``; the next letter ``t`` must lower its length by one,
    which happens exactly when both labels of ``t`` lie in one cycle of ``r``.
    """
    check_cap(n, cap)
    letters = all_transpositions(n)
    prefix: list[Transposition] = []
    # 0-based slot x holds r(x+1)
    r = list(range(2, n + 1)) + [1]

    def cycle_ids() -> list[int]:
        ids = [0] * (n + 1)
        label = 0
        for start in range(1, n + 1):
            if ids[start]:
                continue
            label += 1
            x = start
            while not ids[x]:
                ids[x] = label
                x = r[x - 1]
        return ids

    def rec() -> Iterator[Word]:
        if len(prefix) == n - 1:
            yield Word(tuple(prefix), n)
            return
        ids = cycle_ids()
        for t in letters:
            if ids[t.a] != ids[t.b]:
                continue
            # r <- t * r swaps the values a and b among r's images
            ia, ib = r.index(t.a), r.index(t.b)
            r[ia], r[ib] = t.b, t.a
            prefix.append(t)
            yield from rec()
            prefix.pop()
            r[ia], r[ib] = t.a, t.b

    yield from rec()


def partial_products(w: Word) -> list[Permutation]:
    """Suffix products ``sigma_j = t_j ... t_{n-1}`` for j = 1..n, with ``sigma_n = id``."""
    sigma = Permutation.identity(w.n)
    out = [sigma]
    for t in reversed(w.letters):
        sigma = compose(t.to_perm(w.n), sigma)
        out.append(sigma)
    out.reverse()
    if len(w.letters) != w.n - 1 or out[0] != Permutation.long_cycle(w.n):
        raise ValueError(f"word {w} is not a factorization of the {w.n}-cycle")
    return out


def phi(w: Word) -> PhiResult:
    """The permutation of [n-1] sending j to the unique i with sigma_j(i) > sigma_{j+1}(i)."""
    sigmas = partial_products(w)
    n = w.n
    sets = []
    for j in range(n - 1):
        hi, lo = sigmas[j], sigmas[j + 1]
        a_j = frozenset(i for i in range(1, n) if hi(i) > lo(i))
        if len(a_j) != 1:
            raise AssertionError(f"|A_{j + 1}| = {len(a_j)} for {w}; expected exactly one element")
        sets.append(a_j)
    pi = Permutation(tuple(next(iter(a)) for a in sets))
    return PhiResult(pi, tuple(sigmas), tuple(sets))


def word_to_chain(w: Word) -> list[Permutation]:
    """Prefix products id = p_0 < p_1 < ... < p_{n-1} = c, a maximal chain of NC(n)."""
    p = Permutation.identity(w.n)
    chain = [p]
    for pos, t in enumerate(w.letters, 1):
        q = compose(p, t.to_perm(w.n))
        if not is_nc_element(q):
            raise ValueError(f"prefix {pos} of {w} is not a non-crossing partition")
        if not (nc_leq(p, q) and absolute_length(q) == absolute_length(p) + 1):
            raise ValueError(f"prefix {pos} of {w} does not cover its predecessor")
        chain.append(q)
        p = q
    if p != Permutation.long_cycle(w.n):
        raise ValueError(f"chain of {w} does not end at the long cycle")
    return chain
