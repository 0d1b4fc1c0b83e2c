"""Free-group word kernel.

A letter is a nonzero int: ``+k`` is the k-th generator (1-based) and ``-k``
is its inverse.  A word is a tuple of letters kept freely reduced, i.e. with
no adjacent cancelling pair.  All functions here are pure; words are
immutable and safe to share between concurrent enumerations.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Letter = int
Word = tuple[int, ...]

EMPTY_WORD: Word = ()


def reduce_word(letters: Iterable[Letter]) -> Word:
    """Return the freely reduced form of a letter sequence.

    >>> reduce_word((1, -1))
    ()
    >>> reduce_word(())
    ()
    >>> reduce_word((1, 2, -2, 3))
    (1, 3)
    """
    out: list[int] = []
    for y in letters:
        if y == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -y:
            out.pop()
        else:
            out.append(y)
    return tuple(out)


def invert_word(word: Iterable[Letter]) -> Word:
    """Reverse the word and invert each letter.

    >>> invert_word((2, 1))
    (-1, -2)
    >>> invert_word(())
    ()
    """
    return tuple(-y for y in reversed(tuple(word)))


def concat(*parts: Iterable[Letter]) -> Word:
    """Reduced concatenation of several words."""
    joined: list[int] = []
    for part in parts:
        joined.extend(part)
    return reduce_word(joined)


def conjugation_word(base: Letter, by: Word) -> Word:
    """The word u-bar, base, u: acting by it conjugates by ``base^by``."""
    return concat(invert_word(by), (base,), by)


def cyclic_reduce(word: Word) -> Word:
    """Strip cancelling first/last pairs.  Keeps a reduced word reduced."""
    w = list(word)
    while len(w) >= 2 and w[0] == -w[-1]:
        w.pop()
        w.pop(0)
    return tuple(w)


def rotations(word: Word) -> Iterator[Word]:
    for r in range(len(word)):
        yield word[r:] + word[:r]


def letter_key(letter: Letter, generator_count: int) -> int:
    """Rank of a letter in the order x1 < ... < xg < ~xg < ... < ~x1."""
    if letter > 0:
        return letter
    return 2 * generator_count + 1 + letter


def minimal_cyclic_representative(word: Word, generator_count: int) -> Word:
    """Smallest word equivalent to ``word`` up to rotation and inversion.

    The input must be nonempty and reduced.  The result is the shortest,
    then lexicographically least (under :func:`letter_key`), among all
    rotations of the cyclic reductions of the word and of its inverse.

    >>> minimal_cyclic_representative((1,), 2)
    (1,)
    """
    if not word:
        raise ValueError("empty word has no cyclic representative")
    core = cyclic_reduce(word)
    best: Word | None = None
    best_key: tuple[int, ...] | None = None
    for base in (core, invert_word(core)):
        for cand in rotations(base):
            key = tuple(letter_key(y, generator_count) for y in cand)
            if best_key is None or key < best_key:
                best, best_key = cand, key
    assert best is not None
    return best
