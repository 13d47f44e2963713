"""Exact word algebra in the rank-2 free group on generators u, v.

Words are kept in reduced block form: a tuple of ``(generator, exponent)``
pairs with nonzero exponents and distinct adjacent generators.  The empty
tuple is the identity.  All values are immutable and all operations are
pure, so everything here is safe to share between threads.

Text syntax (used by the CLI and the tests): ``u``, ``v``, ``U`` (= u^-1),
``V`` (= v^-1), optional ``^`` integer exponents, juxtaposition, and ``1``
for the identity.  Example: ``v^2 u^-3``.

Canonical cyclic forms order the signed letters u < u^-1 < v < v^-1; two
words are conjugate iff the canonical rotations of their cyclic cores agree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Mapping, Tuple

GENERATORS = ("u", "v")

Block = Tuple[str, int]

# Signed-letter codes, in canonical order u < u^-1 < v < v^-1.
_LETTER_CODE = {("u", 1): 0, ("u", -1): 1, ("v", 1): 2, ("v", -1): 3}
_CODE_LETTER = {code: gen_sign for gen_sign, code in _LETTER_CODE.items()}


@dataclass(frozen=True)
class Word:
    """A freely reduced word, stored as blocks ``(generator, exponent)``."""

    blocks: Tuple[Block, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for gen, exp in self.blocks:
            if gen not in GENERATORS:
                raise ValueError(f"unknown generator {gen!r}")
            if exp == 0:
                raise ValueError("zero exponent in reduced word")
            if gen == prev:
                raise ValueError("adjacent blocks share a generator")
            prev = gen

    # -- basic queries -------------------------------------------------

    @property
    def is_identity(self) -> bool:
        return not self.blocks

    def length(self) -> int:
        """Letter length: the sum of absolute exponents."""
        return sum(abs(exp) for _, exp in self.blocks)

    def exponents(self, gen: str) -> Tuple[int, ...]:
        return tuple(exp for g, exp in self.blocks if g == gen)

    def abelianization(self) -> Tuple[int, int]:
        """Exponent sums ``(u-total, v-total)``."""
        totals = {"u": 0, "v": 0}
        for gen, exp in self.blocks:
            totals[gen] += exp
        return totals["u"], totals["v"]

    def letters(self) -> Iterator[Tuple[str, int]]:
        """Yield single signed letters, e.g. v^2 u^-1 -> (v,1),(v,1),(u,-1)."""
        for gen, exp in self.blocks:
            sign = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield gen, sign

    # -- group operations ----------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        return reduce(self.blocks + other.blocks)

    def inverse(self) -> "Word":
        return Word(tuple((gen, -exp) for gen, exp in reversed(self.blocks)))

    def __invert__(self) -> "Word":
        return self.inverse()

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word()
        base = self if n > 0 else self.inverse()
        n = abs(n)
        if len(base.blocks) == 1:
            gen, exp = base.blocks[0]
            return Word(((gen, exp * n),))
        result = Word()
        square = base
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    def __str__(self) -> str:
        return format_word(self)


IDENTITY = Word()


def generator(gen: str, exp: int = 1) -> Word:
    if exp == 0:
        return IDENTITY
    return Word(((gen, exp),))


U = generator("u")
V = generator("v")


def reduce(raw: Iterable[Block]) -> Word:
    """Freely reduce a block sequence: merge runs, drop zero exponents."""
    stack: list[list] = []
    for gen, exp in raw:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return Word(tuple((g, e) for g, e in stack))


def concat(*words: Word) -> Word:
    blocks: list[Block] = []
    for w in words:
        blocks.extend(w.blocks)
    return reduce(blocks)


def invert(w: Word) -> Word:
    return w.inverse()


def cyclic_reduce(w: Word) -> Tuple[Word, Word]:
    """Split ``w = conjugator * core * conjugator^-1`` with a cyclically
    reduced core (first and last blocks cannot merge)."""
    blocks = list(w.blocks)
    conj: list[Block] = []
    while len(blocks) >= 2 and blocks[0][0] == blocks[-1][0]:
        gen, head = blocks[0]
        tail = blocks[-1][1]
        conj.append((gen, head))
        blocks = blocks[1:-1]
        if head + tail != 0:
            blocks.append((gen, head + tail))
            break
    return Word(tuple(blocks)), reduce(conj)


def cyclic_length(w: Word) -> int:
    return cyclic_reduce(w)[0].length()


def _letter_bytes(w: Word) -> bytes:
    return bytes(_LETTER_CODE[(gen, sign)] for gen, sign in w.letters())


def _word_from_codes(codes: Iterable[int]) -> Word:
    return reduce((_CODE_LETTER[c][0], _CODE_LETTER[c][1]) for c in codes)


def _min_rotation(s: bytes) -> bytes:
    if len(s) <= 1:
        return s
    doubled = s + s
    n = len(s)
    return min(doubled[i:i + n] for i in range(n))


@dataclass(frozen=True)
class CyclicWord:
    """A conjugacy class, keyed by the minimal rotation of the cyclic core."""

    representative: Word
    canonical: Word

    @classmethod
    def of(cls, w: Word) -> "CyclicWord":
        core, _ = cyclic_reduce(w)
        return cls(w, _word_from_codes(_min_rotation(_letter_bytes(core))))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)


def are_conjugate(a: Word, b: Word) -> bool:
    """True iff the cyclic cores are cyclic rotations of one another."""
    return CyclicWord.of(a) == CyclicWord.of(b)


def root(w: Word) -> Tuple[Word, int]:
    """Maximal root: ``w = r^k`` with ``k`` maximal, via period detection
    on the cyclic core, conjugated back."""
    if w.is_identity:
        raise ValueError("identity has no root decomposition")
    core, conj = cyclic_reduce(w)
    codes = _letter_bytes(core)
    n = len(codes)
    for period in range(1, n + 1):
        if n % period:
            continue
        if codes == codes[:period] * (n // period):
            r_core = _word_from_codes(codes[:period])
            r = concat(conj, r_core, conj.inverse())
            return r, n // period
    raise AssertionError("period search cannot fail")  # pragma: no cover


# -- Whitehead primitivity -------------------------------------------------


def apply_endomorphism(w: Word, images: Mapping[str, Word]) -> Word:
    """Substitute ``images[g]`` for each generator g and reduce."""
    blocks: list[Block] = []
    for gen, exp in w.blocks:
        blocks.extend((images[gen] ** exp).blocks)
    return reduce(blocks)


def _whitehead_maps() -> Tuple[Mapping[str, Word], ...]:
    # Rank-2 type-II Whitehead automorphisms: for multiplier a in
    # {u, u^-1, v, v^-1} the non-multiplier generator x maps to one of
    # x*a, a^-1*x, a^-1*x*a while a is fixed.  Twelve maps in total;
    # type-I maps (permutations/inversions) never change cyclic length
    # and are not needed for the descent.
    maps = []
    for mult_gen, fixed_gen in (("u", "v"), ("v", "u")):
        for mult_exp in (1, -1):
            a = generator(mult_gen, mult_exp)
            x = generator(fixed_gen)
            for image in (x * a, a.inverse() * x, a.inverse() * x * a):
                maps.append({mult_gen: generator(mult_gen), fixed_gen: image})
    return tuple(maps)


_WHITEHEAD_MAPS: Tuple[Mapping[str, Word], ...] = _whitehead_maps()


def whitehead_minimize(w: Word) -> Word:
    """Greedy descent: apply rank-2 Whitehead automorphisms while the
    cyclic length strictly decreases; returns a minimal cyclic core."""
    current, _ = cyclic_reduce(w)
    improved = True
    while improved and current.length() > 1:
        improved = False
        for images in _WHITEHEAD_MAPS:
            candidate, _ = cyclic_reduce(apply_endomorphism(current, images))
            if candidate.length() < current.length():
                current = candidate
                improved = True
                break
    return current


def is_primitive(w: Word) -> bool:
    """True iff w belongs to a basis of the rank-2 free group.

    Decided by Whitehead descent: w is primitive iff the minimum cyclic
    length reachable by length-decreasing Whitehead automorphisms is 1.
    """
    core, _ = cyclic_reduce(w)
    if core.is_identity:
        return False
    return whitehead_minimize(core).length() == 1


def is_power_of_primitive(w: Word) -> bool:
    """True iff ``w = r^k`` for some primitive r (and some k >= 1)."""
    if w.is_identity:
        raise ValueError("identity is excluded from the power criterion")
    r, _ = root(w)
    return is_primitive(r)


def cho_koda_criterion(w: Word) -> bool:
    """Syntactic certificate that w is NOT a power of a primitive element.

    On the cyclic core written as alternating u/v blocks, fire iff

    * both generators' exponent lists are non-constant, or
    * both generators carry some exponent of absolute value > 1.

    Either condition forces the cyclic word to contain a generator together
    with its inverse, or squares of both generators, which no power of a
    primitive can do.  Evaluated on exponent multisets so the answer is
    rotation-, conjugation- and inversion-invariant.  ``False`` is
    inconclusive.  Words in one generator (and the identity) return False.
    """
    core, _ = cyclic_reduce(w)
    u_exps = core.exponents("u")
    v_exps = core.exponents("v")
    if not u_exps or not v_exps:
        return False
    varied = len(set(u_exps)) > 1 and len(set(v_exps)) > 1
    squares = any(abs(e) > 1 for e in u_exps) and any(abs(e) > 1 for e in v_exps)
    return varied or squares


def is_primitive_abelianized(w: Word) -> bool:
    """Necessary condition: the exponent-sum vector is primitive in Z^2."""
    a, b = w.abelianization()
    return gcd(a, b) == 1


# -- text syntax ------------------------------------------------------------

_TOKEN = re.compile(r"\s*([uvUV])(?:\^(-?\d+))?\s*")


def parse_word(text: str) -> Word:
    """Parse the u/v/U/V text syntax; ``1`` denotes the identity."""
    stripped = text.strip()
    if stripped == "1" or stripped == "":
        return IDENTITY
    blocks: list[Block] = []
    pos = 0
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if not match:
            raise ValueError(f"cannot parse word at {stripped[pos:]!r}")
        letter, exp_text = match.groups()
        exp = 1 if exp_text is None else int(exp_text)
        gen = letter.lower()
        if letter.isupper():
            exp = -exp
        blocks.append((gen, exp))
        pos = match.end()
    return reduce(blocks)


def format_word(w: Word) -> str:
    """Deterministic text form, re-parseable by :func:`parse_word`."""
    if w.is_identity:
        return "1"
    parts = []
    for gen, exp in w.blocks:
        parts.append(gen if exp == 1 else f"{gen}^{exp}")
    return " ".join(parts)
