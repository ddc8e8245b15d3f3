"""Hurwitz moves on words and the constructive procedures built from them.

Positions are 1-based throughout, matching the usual R_i / L_i indexing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .factorization import Word
from .geomtree import GeometricTree, cyclic_rank, gamma
from .perm import Transposition, conjugate


def _check_pair(w: Word, i: int) -> None:
    if not 1 <= i <= len(w) - 1:
        raise IndexError(f"move index {i} out of range 1..{len(w) - 1}")


def _check_block(w: Word, i: int, j: int) -> None:
    if not 1 <= i < j <= len(w):
        raise IndexError(f"block ({i}, {j}) out of range; need 1 <= i < j <= {len(w)}")


def right_move(w: Word, i: int) -> Word:
    """R_i: (t_i, t_{i+1}) -> (t_{i+1}^{t_i}, t_i)."""
    _check_pair(w, i)
    t = list(w.letters)
    a, b = t[i - 1], t[i]
    t[i - 1], t[i] = conjugate(b, a), a
    return Word(tuple(t), w.n)


def left_move(w: Word, i: int) -> Word:
    """L_i: (t_i, t_{i+1}) -> (t_{i+1}, t_i^{t_{i+1}})."""
    _check_pair(w, i)
    t = list(w.letters)
    a, b = t[i - 1], t[i]
    t[i - 1], t[i] = b, conjugate(a, b)
    return Word(tuple(t), w.n)


def extended_left(w: Word, i: int, j: int) -> Word:
    """L_ij = L_{j-1} ... L_i: the block (t_i, U) becomes (U, t_i^U)."""
    _check_block(w, i, j)
    t = list(w.letters)
    moving = t[i - 1]
    for u in t[i:j]:
        moving = conjugate(moving, u)
    t[i - 1:j] = t[i:j] + [moving]
    return Word(tuple(t), w.n)


def extended_right(w: Word, i: int, j: int) -> Word:
    """R_ij = R_i ... R_{j-1}: the block (U, t_j) becomes (t_j^{U^-1}, U)."""
    _check_block(w, i, j)
    t = list(w.letters)
    moving = t[j - 1]
    for u in reversed(t[i - 1:j - 1]):
        moving = conjugate(moving, u)
    t[i - 1:j] = [moving] + t[i - 1:j - 1]
    return Word(tuple(t), w.n)


@dataclass(frozen=True)
class MoveRecord:
    kind: str  # "R", "L", "R_ext" or "L_ext"
    i: int
    j: int | None
    before: Word
    after: Word

    def apply(self, w: Word) -> Word:
        if self.kind == "R":
            return right_move(w, self.i)
        if self.kind == "L":
            return left_move(w, self.i)
        if self.kind == "R_ext":
            return extended_right(w, self.i, self.j)
        if self.kind == "L_ext":
            return extended_left(w, self.i, self.j)
        raise ValueError(f"unknown move kind {self.kind!r}")

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "i": self.i}
        if self.j is not None:
            out["j"] = self.j
        out["before"] = str(self.before)
        out["after"] = str(self.after)
        return out


def find_move(u: Word, v: Word, extended: bool = False) -> MoveRecord | None:
    """A single move taking ``u`` to ``v``, or None when they are not adjacent.

    With ``extended`` the search covers every R_ij / L_ij, elementary ones included.
    """
    m = len(u)
    if not extended:
        for i in range(1, m):
            if right_move(u, i) == v:
                return MoveRecord("R", i, None, u, v)
            if left_move(u, i) == v:
                return MoveRecord("L", i, None, u, v)
        return None
    for i in range(1, m):
        for j in range(i + 1, m + 1):
            if extended_right(u, i, j) == v:
                return MoveRecord("R_ext", i, j, u, v)
            if extended_left(u, i, j) == v:
                return MoveRecord("L_ext", i, j, u, v)
    return None


def push_preserving(w: Word, k: int, l: int, a: int) -> tuple[Word, int]:
    """Move the k-th letter (which moves label ``a``) to place l with elementary moves.

    Letters it passes stay or become ``a``-fixing; returns the new word and the
    number of moves, always ``|k - l|``.
    """
    if not 1 <= k <= len(w) or not 1 <= l <= len(w):
        raise IndexError(f"positions ({k}, {l}) out of range 1..{len(w)}")
    if not w.letters[k - 1].moves(a):
        raise ValueError(f"letter {k} of {w} does not move {a}")
    cur = w
    if l < k:
        for m in range(k - 1, l - 1, -1):
            cur = right_move(cur, m) if not cur.letters[m - 1].moves(a) else left_move(cur, m)
    else:
        for m in range(k, l):
            cur = left_move(cur, m) if not cur.letters[m].moves(a) else right_move(cur, m)
    return cur, abs(k - l)


def star_step(w: Word, center: int) -> tuple[Word, Transposition]:
    """One extended move that adds a new letter at ``center``.

    Takes a neighbour ``i`` of ``center`` that is not a leaf, the neighbour ``j``
    of ``i`` extremal in the cyclic order from ``center``, and pulls (i j) next
    to (center i). The pulled letter comes out as (center k) with k new.
    """
    tree = gamma(w)
    n = w.n

    def rank(x: int) -> int:
        return cyclic_rank(center, x, n)

    inner = sorted((x for x in tree.adjacency[center] if tree.degree(x) > 1), key=rank)
    if not inner:
        raise ValueError(f"{w} is already the star at {center}")
    i = inner[0]
    others = [x for x in tree.adjacency[i] if x != center]
    pos = {t: p for p, t in enumerate(w.letters, 1)}
    p = pos[Transposition.of(center, i)]
    above = [x for x in others if rank(x) > rank(i)]
    if above:
        j = max(above, key=rank)
        q = pos[Transposition.of(i, j)]
        out = extended_right(w, p, q)
        new = out.letters[p - 1]
    else:
        j = min(others, key=rank)
        q = pos[Transposition.of(i, j)]
        out = extended_left(w, q, p)
        new = out.letters[p - 1]
    if not new.moves(center) or new in pos:
        raise AssertionError(f"pulling {(i, j)} in {w} produced {new!r}, not a new letter at {center}")
    return out, new


def build_central_word(tree: GeometricTree) -> Word:
    """A word with image ``tree`` that is central in the elementary Hurwitz graph.

    Peels a leaf joined to its clockwise neighbour and puts that letter first;
    failing that, a leaf joined to its anticlockwise neighbour goes last.
    """
    if len(tree.vertices) == 1:
        return Word((), tree.n)
    leaves = tree.leaves()
    for leaf in leaves:
        if tree.adjacency[leaf][0] == tree.successor(leaf):
            head = Transposition.of(leaf, tree.successor(leaf))
            rest = build_central_word(tree.remove_leaf(leaf))
            return Word((head,) + rest.letters, tree.n)
    for leaf in leaves:
        if tree.adjacency[leaf][0] == tree.predecessor(leaf):
            tail = Transposition.of(tree.predecessor(leaf), leaf)
            rest = build_central_word(tree.remove_leaf(leaf))
            return Word(rest.letters + (tail,), tree.n)
    raise AssertionError(f"no boundary leaf in {tree}")
