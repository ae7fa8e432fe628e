"""Weierstrass cubics y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6,
coordinate changes, and the classical invariants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .poly import Polynomial, Ring

AI_NAMES = ("a1", "a2", "a3", "a4", "a6")
AI_WEIGHTS = (2, 4, 6, 8, 12)


def universal_curve_ring(modulus: Optional[int] = None) -> Ring:
    return Ring(AI_NAMES, AI_WEIGHTS, modulus)


def universal_curve(modulus: Optional[int] = None) -> "WeierstrassCurve":
    r = universal_curve_ring(modulus)
    return WeierstrassCurve(*[r.gen(n) for n in AI_NAMES])


@dataclass(frozen=True)
class WeierstrassCurve:
    """Coefficients may live in any graded polynomial ring (or be constants
    of that ring); a1..a6 carry weights 2,4,6,8,12 when graded."""
    a1: Polynomial
    a2: Polynomial
    a3: Polynomial
    a4: Polynomial
    a6: Polynomial

    def __post_init__(self):
        r = self.a1.ring
        for a in (self.a2, self.a3, self.a4, self.a6):
            if not (a.ring is r or a.ring.same_as(r)):
                raise ValueError("curve coefficients in different rings")

    @property
    def ring(self) -> Ring:
        return self.a1.ring

    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @classmethod
    def from_constants(cls, coeffs, modulus: Optional[int] = None,
                       ring: Optional[Ring] = None):
        if ring is None:
            ring = Ring((), (), modulus)
        a1, a2, a3, a4, a6 = [ring.const(c) if isinstance(c, int) else c
                              for c in coeffs]
        return cls(a1, a2, a3, a4, a6)

    def __str__(self):
        return "(%s)" % ", ".join(str(a) for a in self.coefficients())


@dataclass(frozen=True)
class CoordinateChange:
    """x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.

    u must be an invertible constant of the coefficient ring; r, s, t are
    ring elements of weights 4, 2, 6.
    """
    u: int
    r: Polynomial
    s: Polynomial
    t: Polynomial

    @property
    def ring(self) -> Ring:
        return self.r.ring

    def inverse(self) -> "CoordinateChange":
        u, r, s, t = self.u, self.r, self.s, self.t
        # solve compose(self, g) = identity for g
        uinv = _unit_inverse(u, self.ring.modulus)
        return CoordinateChange(uinv, -r * (uinv ** 2), -s * uinv,
                                (-t + s * r) * (uinv ** 3))

    def compose(self, second: "CoordinateChange") -> "CoordinateChange":
        """The change equivalent to applying `self`, then `second`."""
        u1, r1, s1, t1 = self.u, self.r, self.s, self.t
        u2, r2, s2, t2 = second.u, second.r, second.s, second.t
        # x = u1^2 x' + r1, x' = u2^2 x'' + r2, etc.
        return CoordinateChange(
            u1 * u2,
            r1 + r2 * (u1 * u1),
            s1 + s2 * u1,
            t1 + t2 * (u1 ** 3) + s1 * r2 * (u1 * u1))

    def is_identity(self) -> bool:
        return (self.u == 1 and self.r.is_zero() and self.s.is_zero()
                and self.t.is_zero())


def identity_change(ring: Ring) -> CoordinateChange:
    return CoordinateChange(1, ring.zero(), ring.zero(), ring.zero())


def _unit_inverse(u: int, modulus: Optional[int]) -> int:
    if modulus is not None:
        return pow(u % modulus, -1, modulus)
    if u in (1, -1):
        return u
    raise ValueError("%d is not a unit of Z" % u)


def transform(curve: WeierstrassCurve, change: CoordinateChange
              ) -> WeierstrassCurve:
    """Coefficients of the curve in the new coordinates."""
    a1, a2, a3, a4, a6 = curve.coefficients()
    u, r, s, t = change.u, change.r, change.s, change.t
    ring = curve.ring
    if not change.ring.same_as(ring):
        if ring.extends(change.ring):
            r, s, t = r.cast(ring), s.cast(ring), t.cast(ring)
        elif change.ring.extends(ring):
            ring = change.ring
            a1, a2, a3, a4, a6 = [a.cast(ring) for a in
                                  (a1, a2, a3, a4, a6)]
        else:
            raise ValueError("curve and change live in incompatible rings")
    uinv = _unit_inverse(u, ring.modulus)
    b1 = a1 + 2 * s
    b2 = a2 - s * a1 + 3 * r - s * s
    b3 = a3 + r * a1 + 2 * t
    b4 = a4 - s * a3 + 2 * a2 * r - (t + r * s) * a1 + 3 * r * r - 2 * s * t
    b6 = (a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1)
    if u == 1:
        return WeierstrassCurve(b1, b2, b3, b4, b6)
    scale = [uinv, uinv ** 2, uinv ** 3, uinv ** 4, uinv ** 6]
    if ring.modulus:
        scale = [c % ring.modulus for c in scale]
    return WeierstrassCurve(b1 * scale[0], b2 * scale[1], b3 * scale[2],
                            b4 * scale[3], b6 * scale[4])


def invariants(curve: WeierstrassCurve) -> dict:
    """b2, b4, b6, b8, c4, c6 and the discriminant; the returned dict also
    records whether c4^3 - c6^2 = 1728 * disc held."""
    a1, a2, a3, a4, a6 = curve.coefficients()
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = (a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3
          - a4 * a4)
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2 ** 3) + 36 * b2 * b4 - 216 * b6
    disc = -(b2 * b2 * b8) - 8 * (b4 ** 3) - 27 * (b6 * b6) + 9 * b2 * b4 * b6
    identity_ok = (c4 ** 3 - c6 * c6) == (1728 * disc)
    return {"b2": b2, "b4": b4, "b6": b6, "b8": b8,
            "c4": c4, "c6": c6, "delta": disc,
            "c4_c6_delta_identity": identity_ok}


def curve_equation_rhs(curve: WeierstrassCurve, x: Polynomial) -> Polynomial:
    return x ** 3 + curve.a2 * x * x + curve.a4 * x + curve.a6
