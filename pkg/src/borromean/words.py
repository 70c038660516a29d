"""Free words over the generators a, b, c.

A word is a string over "abcABC" where an upper-case letter is the inverse
of the lower-case one.  Words are kept freely reduced, so they are normal
forms for elements of the free group F(a,b,c); group elements of the
orbifold groups are obtained by evaluating words through the homomorphisms
in `euclid` (exact integer isometries) or `hyperbolic` (Lorentz matrices).
"""

from __future__ import annotations

LETTERS = "abcABC"


def _reduce(letters: str) -> str:
    out: list[str] = []
    for ch in letters:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


class Word:
    """A freely reduced word over {a,b,c} and their inverses {A,B,C}."""

    __slots__ = ("letters",)

    def __init__(self, letters: str = ""):
        bad = set(letters) - set(LETTERS)
        if bad:
            raise ValueError(f"invalid letters {sorted(bad)!r}; alphabet is {LETTERS!r}")
        object.__setattr__(self, "letters", _reduce(letters))

    def __setattr__(self, *a):
        raise AttributeError("Word is immutable")

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n)

    def inverse(self) -> "Word":
        return Word(self.letters[::-1].swapcase())

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(("Word", self.letters))

    def __iter__(self):
        return iter(self.letters)

    def __repr__(self):
        return f"Word({self.letters!r})"

    def __str__(self):
        return self.letters


EMPTY = Word("")

# The three commutation relators shared by both orbifold group presentations:
# each generator commutes with the commutator-like word in the other two.
COMMUTATION_RELATORS = (
    Word("a") * Word("bCBc") * Word("A") * Word("bCBc").inverse(),
    Word("b") * Word("cACa") * Word("B") * Word("cACa").inverse(),
    Word("c") * Word("aBAb") * Word("C") * Word("aBAb").inverse(),
)

# 180-degree presentation: the generators square to the identity.
RELATORS_EUCLID = COMMUTATION_RELATORS + (Word("aa"), Word("bb"), Word("cc"))

# 90-degree presentation: the generators have order four.
RELATORS_HYPERBOLIC = COMMUTATION_RELATORS + (Word("aaaa"), Word("bbbb"), Word("cccc"))

# Translation words: images under the euclid homomorphism are translations by
# (4,0,0), (0,4,0), (0,0,4) and the lattice-centering (-2,2,2) respectively.
WORD_TX = Word("bcbC")
WORD_TY = Word("cACA")
WORD_TZ = Word("abaB")
WORD_CENTER = Word("cab")
