"""Generator words: programs of polytope constructors applied to the point.

A word like ``CIC.`` reads right to left: start from the point, take the
pyramid, then the prism, then the pyramid again.  The letters are C
(cone/pyramid), I (cylinder/prism) and B (bipyramid).  Words without B are
the ones the symbolic engine can evaluate directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

OPS = "ICB"


class WordParseError(ValueError):
    def __init__(self, message, column):
        super().__init__(f"{message} at column {column}")
        self.column = column


@dataclass(frozen=True, order=True)
class GeneratorWord:
    """Sequence of constructor letters, applied right to left to the point."""

    ops: str = ""

    def __post_init__(self):
        for ch in self.ops:
            if ch not in OPS:
                raise ValueError(f"bad constructor letter {ch!r}")

    @property
    def dim(self) -> int:
        return len(self.ops)

    def is_bipyramid_free(self) -> bool:
        return "B" not in self.ops

    def rightmost_first(self):
        """Constructor letters in application order."""
        return reversed(self.ops)

    def render(self) -> str:
        return self.ops + "."

    def __str__(self):
        return self.render()

    @classmethod
    def parse(cls, text: str) -> "GeneratorWord":
        ops = []
        seen_dot = False
        for col, ch in enumerate(text, start=1):
            if ch.isspace():
                continue
            if seen_dot:
                raise WordParseError(f"trailing {ch!r} after terminator", col)
            if ch in OPS:
                ops.append(ch)
            elif ch in ".·":
                seen_dot = True
            else:
                raise WordParseError(f"unknown character {ch!r}", col)
        if not ops and not seen_dot:
            raise WordParseError("empty word needs a terminator", 1)
        return cls("".join(ops))


def all_words(n: int, letters: str = "IC"):
    """Every length-n word over the given letters, lexicographic."""
    for tup in product(sorted(letters), repeat=n):
        yield GeneratorWord("".join(tup))


def words_up_to(n: int, letters: str = "IC"):
    for k in range(n + 1):
        yield from all_words(k, letters)
