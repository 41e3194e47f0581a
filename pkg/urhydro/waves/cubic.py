"""
Real roots of cubic polynomials
Trigonometric / Cardano formulas on the depressed cubic, followed by a
few Newton steps on the original polynomial to recover digits lost near
multiple roots.
"""

import math
from typing import List

from urhydro.settings import IMAG_TOL, NEWTON_POLISH_ITERATIONS


def _quadratic_roots(a: float, b: float, c: float) -> List[float]:
    if a == 0.0:
        return [] if b == 0.0 else [-c / b]
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        if disc > -IMAG_TOL * b * b:
            return [-b / (2.0 * a)]
        return []
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    roots = [q / a]
    if q != 0.0:
        roots.append(c / q)
    return sorted(roots)


def polish_root(x: float, a: float, b: float, c: float, d: float,
                iterations: int = NEWTON_POLISH_ITERATIONS) -> float:
    """Newton iterations on a x^3 + b x^2 + c x + d."""
    for _ in range(iterations):
        f = ((a * x + b) * x + c) * x + d
        df = (3.0 * a * x + 2.0 * b) * x + c
        if df == 0.0 or f == 0.0:
            break
        step = f / df
        if not math.isfinite(step):
            break
        x -= step
    return x


def real_cubic_roots(a: float, b: float, c: float, d: float) -> List[float]:
    """
    Sorted real roots of a x^3 + b x^2 + c x + d = 0.

    A vanishing leading coefficient (relative to the others) falls back to
    the quadratic or linear case.
    """
    scale = max(abs(a), abs(b), abs(c), abs(d))
    if scale == 0.0:
        return []
    if abs(a) <= 1e-14 * scale:
        return [polish_root(r, a, b, c, d) for r in _quadratic_roots(b, c, d)]

    b_a = b / a
    c_a = c / a
    d_a = d / a
    b_a_3 = b_a / 3.0

    q = (3.0 * c_a - b_a * b_a) / 9.0
    r = (9.0 * b_a * c_a - 27.0 * d_a - 2.0 * b_a * b_a * b_a) / 54.0
    q3 = q * q * q
    disc = q3 + r * r

    roots: List[float]
    if disc <= IMAG_TOL * (abs(q3) + r * r):
        if q >= 0.0:
            # triple root
            roots = [-b_a_3]
        else:
            cos_arg = max(-1.0, min(1.0, r / math.sqrt(-q3)))
            theta = math.acos(cos_arg)
            sqrt_q = math.sqrt(-q)
            roots = [
                2.0 * sqrt_q * math.cos(theta / 3.0) - b_a_3,
                2.0 * sqrt_q * math.cos((theta + 2.0 * math.pi) / 3.0) - b_a_3,
                2.0 * sqrt_q * math.cos((theta + 4.0 * math.pi) / 3.0) - b_a_3,
            ]
    else:
        sqrt_disc = math.sqrt(disc)
        s = math.copysign((abs(r) + sqrt_disc) ** (1.0 / 3.0), r)
        t = -q / s if s != 0.0 else 0.0
        roots = [s + t - b_a_3]

    return sorted(polish_root(x, a, b, c, d) for x in roots)
