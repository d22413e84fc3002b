"""Braid words, Markov moves, and the word problem via the Artin action on ``F_n``.

A braid word on ``n`` strands is a sequence of nonzero integers ``k`` with
``|k| <= n - 1``; ``k`` stands for ``sigma_k`` and ``-k`` for its inverse.
The automorphism of a word is the composite of its letters' automorphisms,
taken left to right: ``artin_automorphism(b1 * b2)`` is
``artin_automorphism(b1).then(artin_automorphism(b2))``.
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .freegroup import Endomorphism, FreeWord, compose

__all__ = [
    "BraidWord",
    "BraidSyntaxError",
    "StrandBoundError",
    "StrandMismatch",
    "NotDestabilizable",
    "SearchLimitExceeded",
    "Move",
    "parse",
    "conjugate",
    "stabilize",
    "destabilize",
    "apply_move",
    "artin_automorphism",
    "wada_automorphism",
    "braid_equal",
    "search_markov_path",
    "random_markov_orbit",
]


class BraidSyntaxError(ValueError):
    """Malformed braid text; ``position`` is the offset of the bad token."""

    def __init__(self, message: str, token: str, position: int):
        super().__init__(f"{message}: {token!r} at position {position}")
        self.token = token
        self.position = position


class StrandBoundError(ValueError):
    pass


class StrandMismatch(ValueError):
    pass


class NotDestabilizable(ValueError):
    pass


class SearchLimitExceeded(RuntimeError):
    """The search visited more nodes than its node budget allows."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        if self.strands < 1:
            raise StrandBoundError("a braid needs at least one strand")
        for a in self.letters:
            if a == 0 or abs(a) > self.strands - 1:
                raise StrandBoundError(f"letter {a} is not a generator of B_{self.strands}")

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> BraidWord:
        return parse(text, strands)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise StrandMismatch(f"B_{self.strands} and B_{other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))

    def free_reduce(self) -> BraidWord:
        """Cancel adjacent ``sigma_i sigma_i^-1`` pairs (same braid)."""
        out: list[int] = []
        for a in self.letters:
            if out and out[-1] == -a:
                out.pop()
            else:
                out.append(a)
        return BraidWord(self.strands, tuple(out))

    def exponent_sum(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)

    def __str__(self) -> str:
        parts = []
        i = 0
        while i < len(self.letters):
            a = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == a:
                j += 1
            run = j - i
            if run == 1:
                parts.append(str(a))
            else:
                parts.append(f"{abs(a)}^{run if a > 0 else -run}")
            i = j
        return " ".join(parts)

    def describe(self) -> str:
        return f"{self} (B_{self.strands})" if self.letters else f"(empty) (B_{self.strands})"


_TOKEN = re.compile(r"\S+")
_LETTER = re.compile(r"([+-]?\d+)(?:\^([+-]?\d+))?\Z")


def parse(text: str, strands: int | None = None) -> BraidWord:
    """Parse whitespace-separated tokens ``k`` or ``k^m`` into a braid word.

    Without ``strands`` the strand count is one more than the largest index
    used (1 for the empty word).
    """
    letters: list[int] = []
    for m in _TOKEN.finditer(text):
        tok = m.group()
        lm = _LETTER.match(tok)
        if lm is None:
            raise BraidSyntaxError("bad braid token", tok, m.start())
        k = int(lm.group(1))
        if k == 0:
            raise BraidSyntaxError("generator index must be nonzero", tok, m.start())
        e = int(lm.group(2)) if lm.group(2) is not None else 1
        letters.extend([k if e > 0 else -k] * abs(e))
        if strands is not None and abs(k) > strands - 1:
            raise StrandBoundError(
                f"token {tok!r} at position {m.start()} needs more than {strands} strands"
            )
    if strands is None:
        strands = max((abs(a) for a in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def conjugate(beta: BraidWord, gamma: BraidWord) -> BraidWord:
    """The literal word ``gamma^-1 beta gamma``."""
    if beta.strands != gamma.strands:
        raise StrandMismatch(f"B_{beta.strands} and B_{gamma.strands}")
    return gamma.inverse() * beta * gamma


def stabilize(beta: BraidWord, sign: int = 1) -> BraidWord:
    """Add a strand and append ``sigma_n^{±1}``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = beta.strands
    return BraidWord(n + 1, beta.letters + (sign * n,))


def can_destabilize(beta: BraidWord) -> bool:
    n = beta.strands
    if n < 2 or not beta.letters or abs(beta.letters[-1]) != n - 1:
        return False
    return all(abs(a) != n - 1 for a in beta.letters[:-1])


def destabilize(beta: BraidWord) -> BraidWord:
    if not can_destabilize(beta):
        raise NotDestabilizable(
            f"{beta.describe()} does not end in the only occurrence of sigma_{beta.strands - 1}^±1"
        )
    return BraidWord(beta.strands - 1, beta.letters[:-1])


# ---------------------------------------------------------------------------
# automorphisms


@lru_cache(maxsize=None)
def _artin_generator(n: int, a: int) -> Endomorphism:
    i = abs(a)
    images = [FreeWord.generator(k) for k in range(1, n + 1)]
    if a > 0:
        images[i - 1] = FreeWord((i, i + 1, -i))
        images[i] = FreeWord((i,))
    else:
        images[i - 1] = FreeWord((i + 1,))
        images[i] = FreeWord((-(i + 1), i, i + 1))
    return Endomorphism(n, tuple(images))


@lru_cache(maxsize=None)
def _wada_generator(n: int, a: int) -> Endomorphism:
    i = abs(a)
    images = [FreeWord.generator(k) for k in range(1, n + 1)]
    if a > 0:
        images[i - 1] = FreeWord((i, i, i + 1))
        images[i] = FreeWord((-(i + 1), -i, i + 1))
    else:
        # inverse of x_i -> x_i^2 x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i^-1 x_{i+1}
        images[i - 1] = FreeWord((i, -(i + 1), -i))
        images[i] = FreeWord((i, i + 1, i + 1))
    return Endomorphism(n, tuple(images))


def _word_automorphism(beta: BraidWord, generator) -> Endomorphism:
    phi = Endomorphism.identity(beta.strands)
    for a in beta.letters:
        phi = compose(phi, generator(beta.strands, a))
    return phi


def artin_automorphism(beta: BraidWord) -> Endomorphism:
    """Artin action: ``sigma_i`` sends ``x_i -> x_i x_{i+1} x_i^-1`` and ``x_{i+1} -> x_i``."""
    return _word_automorphism(beta, _artin_generator)


def wada_automorphism(beta: BraidWord) -> Endomorphism:
    """Wada action: ``sigma_i`` sends ``x_i -> x_i^2 x_{i+1}`` and ``x_{i+1} -> x_{i+1}^-1 x_i^-1 x_{i+1}``."""
    return _word_automorphism(beta, _wada_generator)


def _artin_key(beta: BraidWord) -> tuple:
    return (beta.strands, tuple(w.letters for w in artin_automorphism(beta).images))


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    """Equality in ``B_n``, decided by the faithful Artin action."""
    if b1.strands != b2.strands:
        raise StrandMismatch(f"B_{b1.strands} and B_{b2.strands}")
    return artin_automorphism(b1) == artin_automorphism(b2)


# ---------------------------------------------------------------------------
# Markov moves and search


@dataclass(frozen=True)
class Move:
    """One Markov move: ``conjugate`` by a letter, ``stabilize`` with a sign, or ``destabilize``."""

    kind: str
    arg: int = 0

    def __str__(self) -> str:
        if self.kind == "conjugate":
            return f"conjugate {self.arg}"
        if self.kind == "stabilize":
            return f"stabilize {'+' if self.arg > 0 else '-'}"
        return "destabilize"

    @classmethod
    def parse(cls, text: str) -> Move:
        parts = text.split()
        if parts[:1] == ["conjugate"] and len(parts) == 2:
            return cls("conjugate", int(parts[1]))
        if parts[:1] == ["stabilize"] and len(parts) == 2 and parts[1] in "+-":
            return cls("stabilize", 1 if parts[1] == "+" else -1)
        if parts == ["destabilize"]:
            return cls("destabilize")
        raise ValueError(f"bad move {text!r}")


def apply_move(beta: BraidWord, move: Move) -> BraidWord:
    """Apply a move; conjugation results are freely reduced."""
    if move.kind == "conjugate":
        gamma = BraidWord(beta.strands, (move.arg,))
        return conjugate(beta, gamma).free_reduce()
    if move.kind == "stabilize":
        return stabilize(beta, move.arg)
    if move.kind == "destabilize":
        return destabilize(beta)
    raise ValueError(f"unknown move kind {move.kind!r}")


def _neighbours(beta: BraidWord, max_strands: int, conjugators: Sequence[int] | None):
    n = beta.strands
    letters = conjugators if conjugators is not None else [
        s * i for i in range(1, n) for s in (1, -1)
    ]
    for a in letters:
        if 1 <= abs(a) <= n - 1:
            yield Move("conjugate", a)
    if n < max_strands:
        yield Move("stabilize", 1)
        yield Move("stabilize", -1)
    if can_destabilize(beta):
        yield Move("destabilize")


def search_markov_path(
    start: BraidWord,
    goal: BraidWord,
    max_strands: int,
    max_length: int,
    max_depth: int,
    conjugators: Sequence[int] | None = None,
    max_nodes: int = 200_000,
) -> list[Move] | None:
    """Breadth-first search for Markov moves taking ``start`` to a braid equal to ``goal``.

    Nodes are identified by strand count and Artin images, so words that
    differ only by braid relations are visited once.  Returns the list of
    moves, or ``None`` when every node within the bounds has been explored.
    Raises :class:`SearchLimitExceeded` if more than ``max_nodes`` nodes are
    reached.
    """
    if min(max_strands, max_length, max_depth) < 0:
        raise ValueError("search bounds must be nonnegative")
    goal_key = _artin_key(goal)
    start_key = _artin_key(start)
    if start_key == goal_key:
        return []
    parents: dict[tuple, tuple[tuple, Move]] = {start_key: None}
    frontier = deque([(start, start_key, 0)])
    while frontier:
        beta, key, depth = frontier.popleft()
        if depth >= max_depth:
            continue
        for move in _neighbours(beta, max_strands, conjugators):
            nxt = apply_move(beta, move)
            if len(nxt) > max_length or nxt.strands > max_strands:
                continue
            nkey = _artin_key(nxt)
            if nkey in parents:
                continue
            parents[nkey] = (key, move)
            if nkey == goal_key:
                path = []
                k = nkey
                while parents[k] is not None:
                    k, mv = parents[k]
                    path.append(mv)
                return path[::-1]
            if len(parents) > max_nodes:
                raise SearchLimitExceeded(f"more than {max_nodes} nodes within the bounds")
            frontier.append((nxt, nkey, depth + 1))
    return None


def random_markov_orbit(
    beta: BraidWord,
    depth: int,
    rng: random.Random,
    max_strands: int | None = None,
) -> list[tuple[Move, BraidWord]]:
    """A random walk of ``depth`` Markov moves starting at ``beta``.

    Each step picks uniformly among the legal moves: conjugation by a random
    ``sigma_i^{±1}``, stabilization with either sign (while below
    ``max_strands``), and destabilization when the word allows it.
    """
    if max_strands is None:
        max_strands = beta.strands + 2
    orbit: list[tuple[Move, BraidWord]] = []
    current = beta
    for _ in range(depth):
        options = []
        n = current.strands
        if n >= 2:
            i = rng.randint(1, n - 1)
            options.append(Move("conjugate", rng.choice((i, -i))))
        if n < max_strands:
            options.append(Move("stabilize", rng.choice((1, -1))))
        if can_destabilize(current):
            options.append(Move("destabilize"))
        if not options:
            break
        move = rng.choice(options)
        current = apply_move(current, move)
        orbit.append((move, current))
    return orbit


def replay(beta: BraidWord, moves: Iterable[Move]) -> BraidWord:
    for move in moves:
        beta = apply_move(beta, move)
    return beta
