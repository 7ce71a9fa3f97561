"""Type A Coxeter arithmetic: permutations, simple-transposition words, roots,
weights, Bruhat order and Demazure products.

Conventions
-----------
A word ``(q_1, ..., q_m)`` evaluates to the product ``s_{q_1} s_{q_2} ... s_{q_m}``
of functions on ``{1, ..., n+1}`` (rightmost factor applied first).  In one-line
notation this is the same as starting from the identity window and swapping
positions ``q, q+1`` for each letter, read left to right.

Permutations act on ``R^{n+1}`` by permuting coordinates, so
``w(e_i - e_j) = e_{w(i)} - e_{w(j)}``.  The reflection along ``e_i - e_j`` is
the transposition ``(i j)`` and ``s_beta * w`` multiplies on the left, i.e.
swaps the *values* ``i`` and ``j`` in the window of ``w``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

GenWord = tuple[int, ...]
WeightVector = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of ``{1, ..., len(window)}`` in one-line notation."""

    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(self.window)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise ValueError(f"not a permutation window: {window}")
        object.__setattr__(self, "window", window)

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(1, size + 1)))

    @property
    def size(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # function composition: (self * other)(i) = self(other(i))
        if self.size != other.size:
            raise ValueError("rank mismatch")
        return Permutation(tuple(self.window[v - 1] for v in other.window))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, v in enumerate(self.window, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        return length(self)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.window)) + "]"


@dataclass(frozen=True, order=True)
class Root:
    """The root ``e_i - e_j`` (``i != j``)."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("e_i - e_i is not a root")

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    def __neg__(self) -> Root:
        return Root(self.j, self.i)

    def vector(self, size: int) -> tuple[int, ...]:
        v = [0] * size
        v[self.i - 1] += 1
        v[self.j - 1] -= 1
        return tuple(v)

    def __str__(self) -> str:
        return f"e{self.i}-e{self.j}"


def simple_root(p: int) -> Root:
    return Root(p, p + 1)


def fundamental_weight(p: int, size: int) -> WeightVector:
    return tuple(1 if q <= p else 0 for q in range(1, size + 1))


def transposition(i: int, j: int, size: int) -> Permutation:
    window = list(range(1, size + 1))
    window[i - 1], window[j - 1] = window[j - 1], window[i - 1]
    return Permutation(tuple(window))


def _check_word(word: Iterable[int], size: int) -> GenWord:
    word = tuple(word)
    for p in word:
        if not 1 <= p < size:
            raise ValueError(f"generator s_{p} out of range for S_{size}")
    return word


def evaluate(word: Sequence[int], size: int) -> Permutation:
    """Product of the simple transpositions in ``word`` inside ``S_size``."""
    window = list(range(1, size + 1))
    for p in _check_word(word, size):
        window[p - 1], window[p] = window[p], window[p - 1]
    return Permutation(tuple(window))


def length(w: Permutation) -> int:
    """Number of inversions of ``w``."""
    win = w.window
    return sum(1 for a in range(len(win)) for b in range(a + 1, len(win)) if win[a] > win[b])


def is_reduced(word: Sequence[int], size: int) -> bool:
    return length(evaluate(word, size)) == len(word)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Bruhat comparison ``u <= w`` via the rank-matrix criterion."""
    if u.size != w.size:
        raise ValueError("rank mismatch")
    size = u.size
    for b in range(1, size + 1):
        cu = cw = 0
        for a in range(size):
            cu += u.window[a] >= b
            cw += w.window[a] >= b
            if cu > cw:
                return False
    return True


def reflect(beta: Root, w: Permutation) -> Permutation:
    """``s_beta * w``: swap the values ``beta.i`` and ``beta.j`` in ``w``."""
    return transposition(beta.i, beta.j, w.size) * w


def bruhat_cover_up(w: Permutation, beta: Root) -> bool:
    """Whether ``w`` is covered by ``s_beta w`` in Bruhat order."""
    if not beta.is_positive:
        raise ValueError(f"{beta} is not a positive root")
    return length(reflect(beta, w)) == length(w) + 1


def demazure_product(word: Sequence[int], size: int) -> Permutation:
    window = list(range(1, size + 1))
    for p in _check_word(word, size):
        if window[p - 1] < window[p]:
            window[p - 1], window[p] = window[p], window[p - 1]
    return Permutation(tuple(window))


def act_on_root(w: Permutation, r: Root) -> Root:
    return Root(w(r.i), w(r.j))


def act_on_weight(w: Permutation, v: Sequence[int]) -> WeightVector:
    if len(v) != w.size:
        raise ValueError("rank mismatch")
    out = [0] * w.size
    for i, x in enumerate(v, start=1):
        out[w(i) - 1] = x
    return tuple(out)


def positive_roots(size: int) -> list[Root]:
    return [Root(i, j) for i in range(1, size) for j in range(i + 1, size + 1)]
