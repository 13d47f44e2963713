"""Arc calculus in the 4-punctured sphere.

An arc from the marked point on C_e to the one on C_o is classified, up to
boundary Dehn twists, by its slope r = 2*rho/(2*beta + 1); the coordinate
adds the twist integers (lambda, mu).  Lifting to the plane punctured at
the integer lattice, the reference arc of slope r becomes

* the straight segment from (eps, 0) to (2*beta + 1 - eps, 2*rho) when
  beta >= 0, and
* a clockwise half-circuit of the start puncture, then the straight segment
  from (-eps, 0) to (2*beta + 1 + eps, 2*rho), then a half-circuit of the
  end puncture, when beta < 0.

Crossings with the vertical dual arcs on integer columns (even column =
d_e, odd column = d_o) and with the horizontal duals on odd rows (s_0')
are enumerated in exact rational arithmetic; eps is never materialised
because coprimality of (2*rho, |2*beta + 1|) rules out lattice incidences.

Crossing signs.  Signs are constant per lift segment, one sign per dual
family: the straight segment of a beta >= 0 lift crosses every dual at +1;
the straight segment of a beta < 0 lift crosses d-duals at +1 and s_0' at
-1; the leading half-circuit crosses d_e at -1 and the trailing one
crosses d_o at +1.  This is the unique constant-per-segment assignment
compatible with the two closed forms below and with the first/last-entry
signs of the beta < 0 sequence, and it is what makes the negative-beta
normalisation an exact conjugation (see :mod:`hkannuli.boundary`).

Closed-form anchors used to pin the conventions:

* beta = 0:   interpolate(A-hat, x, y, z) = z^rho
* beta = -1:  interpolate(A-hat, x, y, z) = x^-1 z^-rho y
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping, Tuple

from .freegroup import IDENTITY, Word, concat

ARC_SYMBOLS = ("Ce", "Co_hat", "v_hat", "s0")


def slope_is_valid(rho: int, beta: int) -> bool:
    return rho >= 0 and gcd(2 * rho, abs(2 * beta + 1)) == 1


@dataclass(frozen=True)
class ArcCoordinate:
    """Coordinate (slope, twists): slope 2*rho/(2*beta+1), twists (lam, mu)."""

    rho: int
    beta: int
    lam: int
    mu: int

    def __post_init__(self) -> None:
        if self.rho < 0:
            raise ValueError("rho must be non-negative; the slope sign lives in 2*beta+1")
        if not slope_is_valid(self.rho, self.beta):
            raise ValueError(
                f"2*rho and 2*beta+1 must be coprime; got rho={self.rho}, beta={self.beta}")

    @property
    def slope(self) -> Fraction:
        return Fraction(2 * self.rho, 2 * self.beta + 1)


@dataclass(frozen=True)
class PairedUnitSequence:
    """+-1 sequence of length 2*tau recording the d-arc crossings."""

    tau: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.tau < 0:
            raise ValueError("tau must be non-negative")
        if len(self.entries) != 2 * self.tau:
            raise ValueError("a paired unit sequence has exactly 2*tau entries")
        if any(e not in (1, -1) for e in self.entries):
            raise ValueError("entries must be +1 or -1")


@dataclass(frozen=True)
class SequenceExtension:
    """Extension of a paired unit sequence by interpolated crossings.

    ``entries`` has length sigma >= 2*tau and ``kappa`` (1-based, strictly
    increasing) locates the base entries inside it.
    """

    base: PairedUnitSequence
    entries: Tuple[int, ...]
    kappa: Tuple[int, ...]

    def __post_init__(self) -> None:
        sigma = len(self.entries)
        if sigma < 2 * self.base.tau:
            raise ValueError("extension shorter than its base")
        if any(e not in (1, -1) for e in self.entries):
            raise ValueError("entries must be +1 or -1")
        if len(self.kappa) != 2 * self.base.tau:
            raise ValueError("kappa must place every base entry")
        if any(k2 <= k1 for k1, k2 in zip(self.kappa, self.kappa[1:])):
            raise ValueError("kappa must be strictly increasing")
        if any(not 1 <= k <= sigma for k in self.kappa):
            raise ValueError("kappa out of range")
        if any(self.entries[k - 1] != self.base.entries[i]
               for i, k in enumerate(self.kappa)):
            raise ValueError("extension disagrees with base along kappa")

    @property
    def sigma(self) -> int:
        return len(self.entries)

    def zetas(self) -> Tuple[int, ...]:
        """Interpolation exponents zeta_0..zeta_{2 tau}: sums of entries
        strictly between consecutive kappa positions (ends padded)."""
        bounds = (0,) + self.kappa + (self.sigma + 1,)
        return tuple(
            sum(self.entries[lo:hi - 1])
            for lo, hi in zip(bounds, bounds[1:])
        )


@lru_cache(maxsize=4096)
def _crossing_events(rho: int, beta: int) -> Tuple[Tuple[str, int], ...]:
    """Ordered (dual, sign) crossings of the reference-arc lift.

    Duals are "d_o"/"d_e" for integer-column crossings (odd/even column)
    and "s0p" for odd-row crossings.  The order key is the exact height at
    which the straight segment meets each dual; coprimality rules out ties
    and lattice incidences, so no epsilon is ever materialised.
    """
    if not slope_is_valid(rho, beta):
        raise ValueError(
            f"invalid slope: gcd(2*rho, |2*beta+1|) != 1 for rho={rho}, beta={beta}")

    def column(k: int) -> str:
        return "d_o" if k % 2 == 1 else "d_e"

    denominator = abs(2 * beta + 1)
    line: list[tuple[Fraction, str, int]] = []
    if beta >= 0:
        for k in range(1, 2 * beta + 1):
            line.append((Fraction(2 * rho * k, denominator), column(k), 1))
        for m in range(1, 2 * rho, 2):
            line.append((Fraction(m), "s0p", 1))
        line.sort(key=lambda ev: ev[0])
        return tuple((dual, sign) for _, dual, sign in line)
    # beta < 0: the straight segment runs between two half-circuits of the
    # end punctures, which contribute fixed leading/trailing records.
    for k in range(1, 2 * abs(beta) - 1):
        line.append((Fraction(2 * rho * k, denominator), column(k), 1))
    for m in range(1, 2 * rho, 2):
        line.append((Fraction(m), "s0p", -1))
    line.sort(key=lambda ev: ev[0])
    return (("d_e", -1),) + tuple((d, s) for _, d, s in line) + (("d_o", 1),)


def reference_crossings(rho: int, beta: int) -> Tuple[PairedUnitSequence, SequenceExtension]:
    """Crossing data of the reference arc of slope 2*rho/(2*beta+1).

    Returns the paired unit sequence A (the 2*|beta| d-crossings) and its
    extension A-hat (all 2*|beta| + rho crossings, in order along the arc).
    Rejects (rho, beta) violating the coprimality invariant.
    """
    events = _crossing_events(rho, beta)
    entries = tuple(sign for _, sign in events)
    kappa = tuple(i + 1 for i, (dual, _) in enumerate(events) if dual != "s0p")
    base = PairedUnitSequence(abs(beta), tuple(entries[k - 1] for k in kappa))
    return base, SequenceExtension(base, entries, kappa)


def crossing_duals(rho: int, beta: int) -> Tuple[str, ...]:
    """The dual arc met at each extension position, in crossing order."""
    return tuple(dual for dual, _ in _crossing_events(rho, beta))


def dual_kinds(beta: int) -> Tuple[str, ...]:
    """Closed form for the duals of the paired-sequence entries:
    alternating, first in d_o for beta > 0 and in d_e for beta < 0."""
    tau = abs(beta)
    first = "d_o" if beta > 0 else "d_e"
    second = "d_e" if beta > 0 else "d_o"
    return tuple(first if i % 2 == 0 else second for i in range(2 * tau))


def alternating(seq: PairedUnitSequence, x: Word, y: Word) -> Word:
    """x^{v_1} y^{v_2} ... x^{v_{2 tau - 1}} y^{v_{2 tau}}, freely reduced."""
    parts = []
    for i, exp in enumerate(seq.entries):
        parts.append((x if i % 2 == 0 else y) ** exp)
    return concat(*parts)


def interpolating(ext: SequenceExtension, x: Word, y: Word, z: Word) -> Word:
    """z^{zeta_0} x^{v_1} z^{zeta_1} y^{v_2} ... z^{zeta_{2 tau}}, reduced."""
    zetas = ext.zetas()
    parts = [z ** zetas[0]]
    for i, exp in enumerate(ext.base.entries):
        parts.append((x if i % 2 == 0 else y) ** exp)
        parts.append(z ** zetas[i + 1])
    return concat(*parts)


def arc_word(coord: ArcCoordinate, images: Mapping[str, Word]) -> Word:
    """Word of the arc with the given coordinate:

        Ce^lambda * Ahat_beta(Co_hat, Ce, v_hat) * Co_hat^mu * s0

    with the interpolating arguments swapped to (Ce, Co_hat, v_hat) when
    beta < 0.  ``images`` assigns a word to each of Ce, Co_hat, v_hat, s0.
    """
    missing = [s for s in ARC_SYMBOLS if s not in images]
    if missing:
        raise ValueError(f"images missing {missing}")
    _, ext = reference_crossings(coord.rho, coord.beta)
    ce, co, vh, s0 = (images[s] for s in ARC_SYMBOLS)
    if coord.beta >= 0:
        middle = interpolating(ext, co, ce, vh)
    else:
        middle = interpolating(ext, ce, co, vh)
    return concat(ce ** coord.lam, middle, co ** coord.mu, s0)


def identity_images() -> dict[str, Word]:
    return {s: IDENTITY for s in ARC_SYMBOLS}
