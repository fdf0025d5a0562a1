"""
braid: words in the braid generators, pure braids, and the algebra on them.

Everything downstream (closures, group actions, lower-central-series
sampling) is driven by one representation: a word in the adjacent
generators sigma_1 .. sigma_{n-1}, stored as a sequence of
(position, sign) letters and read top-to-bottom.  Products concatenate
left factor on top.  The generator family A_{i,j} (strand i looping once
around strand j) is an input layer that expands to the fixed word

    (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_{j-1}^-1)

raised to the requested exponent.  A positive letter s_k crosses the
strand at position k OVER the strand at position k+1.

All values are immutable after construction; every operation is a pure
function, so values can be shared freely between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DomainError, ParseError, ResourceCapError

# Guardrail against runaway cabling/commutator blowup.  Module-level and
# mutable on purpose: experiments that need bigger words can raise it.
MAX_WORD_LETTERS = 100_000

Letter = tuple[int, int]


@dataclass(frozen=True)
class SigmaWord:
    """A word over sigma-letters on a fixed number of strands.

    letters is a tuple of (position, sign) with 1 <= position < strands
    and sign in {+1, -1}.  The empty word is the identity braid.
    """

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise DomainError(f"strand count must be >= 1, got {self.strands}")
        if len(self.letters) > MAX_WORD_LETTERS:
            raise ResourceCapError(
                f"word has {len(self.letters)} letters, cap is {MAX_WORD_LETTERS}"
            )
        for pos, sign in self.letters:
            if not 1 <= pos <= self.strands - 1:
                raise DomainError(
                    f"letter position {pos} out of range for {self.strands} strands"
                )
            if sign not in (1, -1):
                raise DomainError(f"letter sign must be +-1, got {sign}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "SigmaWord") -> "SigmaWord":
        if self.strands != other.strands:
            raise DomainError(
                f"cannot multiply words on {self.strands} and {other.strands} strands"
            )
        return SigmaWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "SigmaWord":
        return SigmaWord(
            self.strands, tuple((p, -s) for p, s in reversed(self.letters))
        )


@dataclass(frozen=True)
class AGenerator:
    """The generator A_{i,j} (strand i loops once around strand j), with an exponent.

    Stored with i < j; input with i > j is normalized, since A_{i,j} and
    A_{j,i} name the same generator.
    """

    i: int
    j: int
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise DomainError(f"A generator needs two distinct strands, got ({self.i},{self.j})")
        if self.i < 1 or self.j < 1:
            raise DomainError(f"strand indices must be positive, got ({self.i},{self.j})")
        if self.exponent == 0:
            raise DomainError("A generator exponent must be nonzero")
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, "i", i)
            object.__setattr__(self, "j", j)


@dataclass(frozen=True)
class PureBraid:
    """A sigma-word whose underlying permutation is the identity."""

    word: SigmaWord

    def __post_init__(self) -> None:
        if not is_identity(permutation(self.word)):
            raise DomainError("word is not a pure braid (permutation is not the identity)")

    @property
    def strands(self) -> int:
        return self.word.strands

    @property
    def letters(self) -> tuple[Letter, ...]:
        return self.word.letters

    def __len__(self) -> int:
        return len(self.word)

    def __mul__(self, other: "PureBraid") -> "PureBraid":
        return PureBraid(self.word * other.word)

    def inverse(self) -> "PureBraid":
        return PureBraid(self.word.inverse())


def identity_braid(strands: int) -> PureBraid:
    return PureBraid(SigmaWord(strands))


# ---------------------------------------------------------------------------
# permutations


def permutation(w: SigmaWord) -> tuple[int, ...]:
    """Map top position -> bottom position, composing letters in word order.

    Returned as a tuple images with images[p-1] = destination of the strand
    entering at top position p.
    """
    images = list(range(1, w.strands + 1))
    # pos_of[s-1] = current position of the strand that entered at top s
    pos_of = list(range(1, w.strands + 1))
    at_pos = list(range(1, w.strands + 1))  # at_pos[p-1] = strand at position p
    for pos, _sign in w.letters:
        a = at_pos[pos - 1]
        b = at_pos[pos]
        at_pos[pos - 1], at_pos[pos] = b, a
        pos_of[a - 1], pos_of[b - 1] = pos_of[b - 1], pos_of[a - 1]
    for s in range(1, w.strands + 1):
        images[s - 1] = pos_of[s - 1]
    return tuple(images)


def is_identity(perm: tuple[int, ...]) -> bool:
    return all(img == p for p, img in enumerate(perm, start=1))


def is_pure(w: SigmaWord) -> bool:
    return is_identity(permutation(w))


# ---------------------------------------------------------------------------
# generators and word surgery


def expand_A_generator(g: AGenerator, strands: int) -> SigmaWord:
    """Expand A_{i,j}^e into the fixed sigma-word convention on `strands` strands."""
    if g.j > strands:
        raise DomainError(f"A({g.i},{g.j}) does not fit in {strands} strands")
    i, j, e = g.i, g.j, g.exponent
    prefix = [(k, 1) for k in range(j - 1, i, -1)]
    core = [(i, 1 if e > 0 else -1)] * (2 * abs(e))
    suffix = [(k, -1) for k in range(i + 1, j)]
    return SigmaWord(strands, tuple(prefix + core + suffix))


def a_braid(i: int, j: int, strands: int, exponent: int = 1) -> PureBraid:
    """Convenience wrapper: A_{i,j}^exponent as a PureBraid."""
    return PureBraid(expand_A_generator(AGenerator(i, j, exponent), strands))


def free_reduce(w: SigmaWord) -> SigmaWord:
    """Cancel adjacent s_k^{+1} s_k^{-1} pairs until none remain."""
    out: list[Letter] = []
    for pos, sign in w.letters:
        if out and out[-1][0] == pos and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((pos, sign))
    return SigmaWord(w.strands, tuple(out))


def include(b: PureBraid, new_strands: int) -> PureBraid:
    """Reinterpret the same word on a larger strand count."""
    if new_strands < b.strands:
        raise DomainError(
            f"cannot include a {b.strands}-strand braid into {new_strands} strands"
        )
    return PureBraid(SigmaWord(new_strands, b.letters))


def shift(b: PureBraid, offset: int) -> PureBraid:
    """Push every letter `offset` positions right; the braid now lives on the
    last b.strands strands of a (b.strands + offset)-strand group."""
    if offset < 0:
        raise DomainError(f"shift offset must be >= 0, got {offset}")
    return PureBraid(
        SigmaWord(b.strands + offset, tuple((p + offset, s) for p, s in b.letters))
    )


def tensor(b1: PureBraid, b2: PureBraid) -> PureBraid:
    """External product P_{2n+1} x P_{2m+1} -> P_{2(n+m)+1}.

    b1 keeps the first 2n+1 strands, b2 is shifted onto the last 2m+1; the
    two blocks share strand 2n+1.
    """
    if b1.strands % 2 == 0 or b2.strands % 2 == 0:
        raise DomainError("tensor is defined for odd strand counts only")
    n = (b1.strands - 1) // 2
    m = (b2.strands - 1) // 2
    total = 2 * (n + m) + 1
    left = include(b1, total)
    right = shift(b2, 2 * n)
    return PureBraid(left.word * right.word)


def commutator(a: PureBraid, b: PureBraid) -> PureBraid:
    """a b a^-1 b^-1, freely reduced.  Unequal strand counts are included up."""
    strands = max(a.strands, b.strands)
    a = include(a, strands)
    b = include(b, strands)
    word = a.word * b.word * a.word.inverse() * b.word.inverse()
    return PureBraid(free_reduce(word))


def signed_crossing_counts(w: SigmaWord) -> dict[tuple[int, int], int]:
    """Signed number of crossings per unordered strand pair (strand names, not positions)."""
    counts: dict[tuple[int, int], int] = {}
    at_pos = list(range(1, w.strands + 1))
    for pos, sign in w.letters:
        a, b = at_pos[pos - 1], at_pos[pos]
        pair = (a, b) if a < b else (b, a)
        counts[pair] = counts.get(pair, 0) + sign
        at_pos[pos - 1], at_pos[pos] = b, a
    return {p: c for p, c in counts.items() if c != 0}


def linking_numbers(b: PureBraid) -> dict[tuple[int, int], int]:
    """Pairwise strand linking numbers: half the signed crossing count per pair."""
    out = {}
    for pair, c in signed_crossing_counts(b.word).items():
        if c % 2 != 0:
            raise DomainError(f"odd signed crossing count for pair {pair} in a pure braid")
        out[pair] = c // 2
    return out


def double_strand(b: PureBraid, i: int) -> PureBraid:
    """Cable strand i into two parallel strands.

    Walks the word tracking the position of the doubled cable; crossings
    involving the cable expand to two letters, all others shift.
    """
    if not 1 <= i <= b.strands:
        raise DomainError(f"strand {i} out of range for {b.strands} strands")
    c = i  # cable occupies positions (c, c+1) in the doubled braid
    out: list[Letter] = []
    for k, sign in b.letters:
        if k <= c - 2:
            out.append((k, sign))
        elif k >= c + 1:
            out.append((k + 1, sign))
        elif k == c - 1:
            # neighbour at c-1 passes the cable
            out.append((c - 1, sign))
            out.append((c, sign))
            c -= 1
        else:  # k == c: cable passes the neighbour at c+1 (doubled: c+2)
            out.append((c + 1, sign))
            out.append((c, sign))
            c += 1
    return PureBraid(SigmaWord(b.strands + 1, tuple(out)))


def erase_strand(w: SigmaWord, s: int) -> SigmaWord:
    """Delete strand s: drop every letter whose crossing involves it, shift positions."""
    if not 1 <= s <= w.strands:
        raise DomainError(f"strand {s} out of range for {w.strands} strands")
    out: list[Letter] = []
    at_pos = list(range(1, w.strands + 1))
    for pos, sign in w.letters:
        a, b = at_pos[pos - 1], at_pos[pos]
        if a != s and b != s:
            s_pos = at_pos.index(s) + 1
            out.append((pos - 1, sign) if s_pos < pos else (pos, sign))
        at_pos[pos - 1], at_pos[pos] = b, a
    return SigmaWord(w.strands - 1, tuple(out))


# ---------------------------------------------------------------------------
# the Artin action on a free group

# A free-group word is a tuple of (generator index, sign), freely reduced.
FreeWord = tuple[tuple[int, int], ...]
# An endomorphism is a tuple of images, one per generator x_1..x_k.
FreeEndo = tuple[FreeWord, ...]


def fg_reduce(letters) -> FreeWord:
    out: list[tuple[int, int]] = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def fg_mul(*words: FreeWord) -> FreeWord:
    out: list[tuple[int, int]] = []
    for w in words:
        for g, s in w:
            if out and out[-1][0] == g and out[-1][1] == -s:
                out.pop()
            else:
                out.append((g, s))
    return tuple(out)


def fg_inv(w: FreeWord) -> FreeWord:
    return tuple((g, -s) for g, s in reversed(w))


def fg_gen(g: int, sign: int = 1) -> FreeWord:
    return ((g, sign),)


def identity_endo(k: int) -> FreeEndo:
    return tuple(fg_gen(g) for g in range(1, k + 1))


def apply_endo(endo: FreeEndo, w: FreeWord) -> FreeWord:
    parts: list[tuple[int, int]] = []
    for g, s in w:
        image = endo[g - 1]
        parts.extend(image if s == 1 else fg_inv(image))
    return fg_reduce(parts)


def _letter_endo(k: int, pos: int, sign: int) -> FreeEndo:
    # Fixed convention: s_pos sends x_pos -> x_pos x_{pos+1} x_pos^-1,
    # x_{pos+1} -> x_pos; the inverse letter uses the inverse substitution.
    images = list(identity_endo(k))
    if sign == 1:
        images[pos - 1] = fg_mul(fg_gen(pos), fg_gen(pos + 1), fg_gen(pos, -1))
        images[pos] = fg_gen(pos)
    else:
        images[pos - 1] = fg_gen(pos + 1)
        images[pos] = fg_mul(fg_gen(pos + 1, -1), fg_gen(pos), fg_gen(pos + 1))
    return tuple(images)


def artin_action(b: PureBraid) -> FreeEndo:
    """The Artin representation of b as an endomorphism of the free group F_k.

    Letters act left-to-right: the image of x_j under the word uv is the
    image under v of the image under u.
    """
    k = b.strands
    images = list(identity_endo(k))
    for pos, sign in b.letters:
        step = _letter_endo(k, pos, sign)
        images = [apply_endo(step, img) for img in images]
    return tuple(images)


# ---------------------------------------------------------------------------
# word text grammar

_SIGMA_RE = re.compile(r"^s(\d+)(\^-1)?$")
_A_RE = re.compile(r"^A\((\d+),(\d+)\)(?:\^(-?\d+))?$")


def parse_word(text: str, strands: int | None = None) -> SigmaWord:
    """Parse the braid word grammar: whitespace-separated tokens `s<k>`,
    `s<k>^-1`, `A(<i>,<j>)`, `A(<i>,<j>)^<e>`.

    If strands is None it is inferred as (max index seen) + 1, or 1 for the
    empty word.
    """
    tokens = [(m.start(), m.group(0)) for m in re.finditer(r"\S+", text)]
    parsed: list[tuple[str, tuple[int, ...]]] = []
    max_index = 0
    for offset, tok in tokens:
        m = _SIGMA_RE.match(tok)
        if m:
            k = int(m.group(1))
            if k < 1:
                raise ParseError(f"bad generator index in {tok!r}", position=offset)
            sign = -1 if m.group(2) else 1
            parsed.append(("s", (k, sign)))
            max_index = max(max_index, k)
            continue
        m = _A_RE.match(tok)
        if m:
            i, j = int(m.group(1)), int(m.group(2))
            e = int(m.group(3)) if m.group(3) else 1
            if i == j or i < 1 or j < 1:
                raise ParseError(f"bad strand pair in {tok!r}", position=offset)
            if e == 0:
                raise ParseError(f"zero exponent in {tok!r}", position=offset)
            parsed.append(("A", (i, j, e)))
            max_index = max(max_index, i, j)
            continue
        raise ParseError(f"unrecognized token {tok!r}", position=offset)

    if strands is None:
        strands = max_index + 1 if parsed else 1
    letters: list[Letter] = []
    for kind, args in parsed:
        if kind == "s":
            k, sign = args
            if k > strands - 1:
                raise ParseError(f"s{k} does not fit in {strands} strands")
            letters.append((k, sign))
        else:
            i, j, e = args
            letters.extend(expand_A_generator(AGenerator(i, j, e), strands).letters)
    return SigmaWord(strands, tuple(letters))


def format_word(w: SigmaWord) -> str:
    return " ".join(f"s{p}" if s == 1 else f"s{p}^-1" for p, s in w.letters)
