"""Regular-sequence checking by degreewise linear algebra, and the
Landweber-criterion report for the Hasse coefficients of a curve.

All computations happen over the residue field (F_p when a prime is given,
Q otherwise).  When the sequence length matches the Krull dimension of the
ambient graded ring and the quotient ranks vanish on a trailing window wider
than every generator weight, zero-dimensionality -- hence regularity, also
p-locally by the dimension count -- is certified beyond the cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .curves import WeierstrassCurve, invariants
from .fgl import hasse_coefficients
from .intlinalg import FieldOps, RowSpace, field_kernel
from .poly import Polynomial, Ring


class GradedIdeal:
    """Weightwise reduced spans of a homogeneous ideal, over a field."""

    def __init__(self, ring: Ring, p: Optional[int], cutoff: int):
        self.ring = ring
        self.ops = FieldOps(p)
        self.cutoff = cutoff
        self.monomials = {w: ring.monomials_of_weight(w)
                          for w in range(cutoff + 1)}
        self.index = {w: {m: i for i, m in enumerate(ms)}
                      for w, ms in self.monomials.items()}
        self.spans: Dict[int, RowSpace] = {
            w: RowSpace(self.ops, len(self.monomials[w]))
            for w in range(cutoff + 1)}
        self.generators: List[Polynomial] = []

    def vector(self, poly: Polynomial, w: int):
        ops = self.ops
        vec = [ops.of_int(0)] * len(self.monomials[w])
        idx = self.index[w]
        for m, c in poly.terms.items():
            vec[idx[m]] = ops.of_int(c)
        return vec

    def add_generator(self, x: Polynomial):
        d = x.weight()
        self.generators.append(x)
        for w in range(0, self.cutoff - d + 1):
            for m in self.monomials[w]:
                prod = Polynomial(self.ring, {m: 1}) * x
                self.spans[w + d].insert(self.vector(prod, w + d))

    def quotient_rank(self, w: int) -> int:
        return len(self.monomials[w]) - self.spans[w].rank

    def contains(self, poly: Polynomial) -> bool:
        if poly.is_zero():
            return True
        w = poly.weight()
        if w > self.cutoff:
            raise ValueError("weight beyond cutoff")
        return self.spans[w].contains(self.vector(poly, w))


@dataclass
class RegularityReport:
    ring_names: tuple
    elements: list
    prime: Optional[int]
    cutoff: int
    regular_through_cutoff: bool
    certified: bool              # regular in all weights, not just the window
    failure: Optional[dict]
    quotient_ranks: List[int]
    notes: List[str] = field(default_factory=list)

    @property
    def quotient_total_rank(self) -> Optional[int]:
        if not self.certified:
            return None
        return sum(self.quotient_ranks)


def graded_regular_sequence_check(ring: Ring, elements: Sequence[Polynomial],
                                  prime: Optional[int], cutoff: int
                                  ) -> RegularityReport:
    """Check that `elements` form a regular sequence on the graded polynomial
    ring, degreewise through `cutoff`.

    The integer prime p itself may appear as the (constant) first element
    when `prime` is p: multiplication by p is injective on the free ambient
    ring, and the remaining elements are then checked on the mod-p reduction.
    """
    notes: List[str] = []
    elements = list(elements)
    if prime is not None and elements and elements[0].is_constant() \
            and not elements[0].is_zero():
        if elements[0].constant_term() != prime:
            raise ValueError("leading constant must equal the prime")
        notes.append("leading element p: injective on the free ambient "
                     "ring; remaining elements checked mod p")
        elements = elements[1:]
    ideal = GradedIdeal(ring, prime, cutoff)
    ops = ideal.ops
    failure = None
    for x in elements:
        if not x.is_homogeneous():
            raise ValueError("sequence elements must be homogeneous")
        if x.is_zero() or (prime and all(c % prime == 0
                                         for c in x.terms.values())):
            failure = {"element": x.text(), "weight": 0, "witness": "1"}
            break
        d = x.weight()
        if d == 0 or d > cutoff:
            raise ValueError("element weight out of range")
        # kernel of multiplication on the current quotient, weight by weight
        for w in range(0, cutoff - d + 1):
            monos = ideal.monomials[w]
            rows = []
            for m in monos:
                prod = Polynomial(ring, {m: 1}) * x
                rows.append(ideal.spans[w + d].reduce(
                    ideal.vector(prod, w + d)))
            width = len(ideal.monomials[w + d])
            # matrix of the multiplication map, target-indexed rows
            mat = [[rows[i][j] for i in range(len(monos))]
                   for j in range(width)]
            for kv in field_kernel(mat, len(monos), ops):
                if not ideal.spans[w].contains(kv):
                    failure = {"element": x.text(), "weight": w,
                               "witness": _vec_to_poly(kv, monos, ring).text()}
                    break
            if failure:
                break
        if failure:
            break
        ideal.add_generator(x)
    quotient_ranks = [ideal.quotient_rank(w) for w in range(cutoff + 1)]
    certified = False
    if failure is None and ring.names \
            and len(ideal.generators) == len(ring.names):
        window = max(ring.weights)
        tail = quotient_ranks[cutoff - window:]
        if len(tail) > window and all(r == 0 for r in tail):
            certified = True
            notes.append("quotient ranks vanish on a trailing window wider "
                         "than every generator weight: the quotient is "
                         "zero-dimensional and the sequence is regular by "
                         "the dimension count")
    if failure is None and not ring.names:
        certified = True  # ambient ring is Z or Z/p itself
    return RegularityReport(
        ring_names=ring.names, elements=[x.text() for x in elements],
        prime=prime, cutoff=cutoff,
        regular_through_cutoff=failure is None,
        certified=certified, failure=failure,
        quotient_ranks=quotient_ranks, notes=notes)


def _vec_to_poly(vec, monos, ring: Ring) -> Polynomial:
    from fractions import Fraction
    from math import lcm
    scale = 1
    for c in vec:
        if isinstance(c, Fraction):
            scale = lcm(scale, c.denominator)
    terms = {}
    for m, c in zip(monos, vec):
        ci = int(c * scale)
        if ci:
            terms[m] = ci
    return ring.poly(terms)


def landweber_report(curve: WeierstrassCurve, p: int, cutoff: int,
                     power_max: int = 12) -> dict:
    """Hasse coefficients v0=p, v1, v2 of the curve, regularity of the
    sequence (p, v1, v2), and the least powers of c4 and the discriminant
    lying in the ideal (p, v1, v2)."""
    ring = curve.ring
    vs = hasse_coefficients(curve, p, 2)
    v1 = vs[1].restrict(ring)
    v2 = vs[2].restrict(ring)
    seq = [ring.const(p), v1, v2]
    reg = graded_regular_sequence_check(ring, seq, p, cutoff)
    inv = invariants(curve)
    ideal = GradedIdeal(ring, p, cutoff)
    for x in (v1, v2):
        if not x.is_zero():
            ideal.add_generator(x)
    powers = {}
    for name in ("c4", "delta"):
        q = inv[name]
        found = None
        for mexp in range(1, power_max + 1):
            qm = q ** mexp
            if qm.max_weight() > cutoff:
                break
            if ideal.contains(qm):
                found = mexp
                break
        powers[name] = found
    return {"prime": p,
            "v": [x.text() for x in (seq[0], v1, v2)],
            "regularity": reg,
            "c4_power_in_ideal": powers["c4"],
            "delta_power_in_ideal": powers["delta"]}
