"""Boundary words of the twisted Moebius-band family in a type-K exterior.

A type-K handlebody-knot carries the data (p, q, delta, rho, beta, lambda,
mu): the non-separating annulus has slope pair (p/q, p*q), delta is the
algebraic intersection of the meridian d_1 with the connector arc s, and
(2*rho/(2*beta+1), lambda, mu) is the merged arc coordinate of the two
half-boundary arcs.  In the basis u = [l_2], v = [l_0] of the handlebody
group, the boundary of the n-th Moebius band is conjugate to

    Alt_beta(v^q, u) * v^(q(n+mu)+delta) * Alt_beta(u^-1, v^-q) * u^(lambda+n)

for beta >= 0, with the alternating arguments swapped to (u, v^q) /
(v^-q, u^-1) for beta < 0; the paired unit sequence is the one induced by
the reference arc of slope 2*rho/(2*beta+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Mapping, Optional, Tuple

from . import arcs
from .freegroup import IDENTITY, U, V, Word, are_conjugate, concat, generator


class ParamError(ValueError):
    """Raised with the list of violated invariants, by name."""

    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("; ".join(violations))


@dataclass(frozen=True)
class TypeKParams:
    """Validated parameter tuple of a type-K separating-annulus family."""

    p: int
    q: int
    delta: int
    rho: int
    beta: int
    lam: int
    mu: int


def params_violations(p: int, q: int, delta: int, rho: int, beta: int,
                      lam: int, mu: int) -> list[str]:
    """All violated invariants, by name; empty means valid.

    Besides the slope-pair and connector congruence constraints, the
    homology of the n = -lambda band forces |mu - lambda| <= 1 when
    beta = 0 and |mu - lambda + 4| <= 1 when beta = -1; parameter tuples
    outside those bands are not realised by any type-K handlebody-knot,
    and the finite exclusion windows below rely on them.
    """
    violations = []
    if p in (0, 1, -1):
        violations.append("slope-pair: p must avoid {0, 1, -1}")
    if q <= 0:
        violations.append("slope-pair: q must be positive")
    else:
        if not 0 <= delta < q:
            violations.append("connector: delta must satisfy 0 <= delta < q")
        elif (p * delta) % q != (-1) % q:
            violations.append("connector: p*delta must be -1 modulo q")
        if gcd(p, q) != 1:
            violations.append("slope-pair: p and q must be coprime")
        if q == 2 and delta != 1:
            violations.append("connector: q = 2 forces delta = 1")
    if rho < 0:
        violations.append("arc-slope: rho must be non-negative")
    elif not arcs.slope_is_valid(rho, beta):
        violations.append("arc-slope: 2*rho and 2*beta+1 must be coprime")
    if beta == 0 and abs(mu - lam) > 1:
        violations.append("homology-claim: beta = 0 forces |mu - lambda| <= 1")
    if beta == -1 and abs(mu - lam + 4) > 1:
        violations.append("homology-claim: beta = -1 forces |mu - lambda + 4| <= 1")
    return violations


def validate_params(p: int, q: int, delta: int, rho: int, beta: int,
                    lam: int, mu: int) -> TypeKParams:
    violations = params_violations(p, q, delta, rho, beta, lam, mu)
    if violations:
        raise ParamError(violations)
    return TypeKParams(p, q, delta, rho, beta, lam, mu)


def _default_images(params: TypeKParams, connector: Word) -> dict[str, Word]:
    # l_2 -> u, l_1-hat -> v^q, the separating-disk loop dies in the
    # handlebody group, and the connector arc contributes v^delta in total.
    return {
        "Ce": U,
        "Co_hat": V ** params.q,
        "v_hat": IDENTITY,
        "s0": connector,
    }


def k_plus_word(params: TypeKParams, lam_plus: int, mu_plus: int,
                images: Optional[Mapping[str, Word]] = None) -> Word:
    """Word of the forward half-boundary arc with split twists
    (lambda_plus, mu_plus); its connector image defaults to the identity."""
    if images is None:
        images = _default_images(params, IDENTITY)
    coord = arcs.ArcCoordinate(params.rho, params.beta, lam_plus, mu_plus)
    return arcs.arc_word(coord, images)


def k_minus_word(params: TypeKParams, lam_minus: int, mu_minus: int,
                 images: Optional[Mapping[str, Word]] = None) -> Word:
    """Word of the return half-boundary arc: the involution swapping the
    two solid tori carries it to the forward arc, which inverts every
    interpolating argument:

        s0 * Co_hat^mu_minus * Ahat_beta(Ce^-1, Co_hat^-1, v_hat^-1) * Ce^lam_minus

    (arguments swapped to (Co_hat^-1, Ce^-1) when beta < 0).  The default
    connector image is v^delta."""
    if images is None:
        images = _default_images(params, V ** params.delta)
    _, ext = arcs.reference_crossings(params.rho, params.beta)
    ce, co, vh = images["Ce"], images["Co_hat"], images["v_hat"]
    if params.beta >= 0:
        middle = arcs.interpolating(ext, ce.inverse(), co.inverse(), vh.inverse())
    else:
        middle = arcs.interpolating(ext, co.inverse(), ce.inverse(), vh.inverse())
    return concat(images["s0"], co ** mu_minus, middle, ce ** lam_minus)


@lru_cache(maxsize=4096)
def _alternating_pair(q: int, rho: int, beta: int) -> Tuple[Word, Word]:
    seq, _ = arcs.reference_crossings(rho, beta)
    vq = V ** q
    if beta >= 0:
        return (arcs.alternating(seq, vq, U),
                arcs.alternating(seq, U.inverse(), vq.inverse()))
    return (arcs.alternating(seq, U, vq),
            arcs.alternating(seq, vq.inverse(), U.inverse()))


def boundary_word(params: TypeKParams, n: int) -> Word:
    """Conjugacy representative of the n-th Moebius band boundary."""
    front, back = _alternating_pair(params.q, params.rho, params.beta)
    middle = generator("v", params.q * (n + params.mu) + params.delta)
    tail = generator("u", params.lam + n)
    return concat(front, middle, back, tail)


def normalize_negative_beta(params: TypeKParams, check_range: int = 3
                            ) -> Tuple[TypeKParams, Word]:
    """Rewrite a beta < 0 family in beta' = -beta - 1 >= 0 form.

    The first/last entries of the induced sequence peel off as u^-1 ... v^q
    and v^-q ... u^-1, absorbing into mu' = mu + 2, lambda' = lambda - 2 and
    an overall conjugation by u.  Returns the new params and the conjugator
    g with  boundary_word(params, n) = g * boundary_word(params', n) * g^-1,
    verified here for n in [-check_range, check_range].
    """
    if params.beta >= 0:
        raise ValueError("normalize_negative_beta requires beta < 0")
    normalized = validate_params(params.p, params.q, params.delta, params.rho,
                                 -params.beta - 1, params.lam - 2, params.mu + 2)
    witness = U.inverse()
    for n in range(-check_range, check_range + 1):
        before = boundary_word(params, n)
        after = boundary_word(normalized, n)
        if before != concat(witness, after, witness.inverse()):
            if not are_conjugate(before, after):  # pragma: no cover
                raise AssertionError(
                    f"normalization failed to preserve the conjugacy class at n={n}")
    return normalized, witness


def homology_class(params: TypeKParams, n: Optional[int] = None) -> Tuple[int, int]:
    """Class of the n = -lambda band boundary on the solid-torus boundary,
    as (Theta, L) with L = q*Delta + delta, Delta = mu - lambda.

    Only derived for beta = 0 (route beta < 0 through
    :func:`normalize_negative_beta` first).  Theta = p*Delta + (p*delta+1)/q
    is integral by the connector congruence, and q*Theta - p*L = 1.
    """
    if params.beta != 0:
        raise ValueError("homology_class is defined in the beta = 0 context")
    if n is not None and n != -params.lam:
        raise ValueError("the homology computation applies to n = -lambda")
    delta_twist = params.mu - params.lam
    numerator = params.p * params.delta + 1
    if numerator % params.q != 0:
        raise ArithmeticError("connector congruence violated; params invalid")
    theta = params.p * delta_twist + numerator // params.q
    ell = params.q * delta_twist + params.delta
    return theta, ell


def delta_claim_gamma(p: int, q: int, delta: int, delta_twist: int) -> int:
    """Gamma = p*(q*Delta + delta) + 1, the quantity that must avoid +-2q
    for |Delta| >= 2; its avoidance forces |mu - lambda| <= 1."""
    return p * (q * delta_twist + delta) + 1
