"""Mod-2 dual Steenrod algebra: coproduct, conjugation, subalgebra
closure, primitives, graded freeness, and the uniqueness probes.

The algebra is Z/2[xi1, xi2, ...] with |xi_i| = 2^i - 1 (single grading);
only the generators needed for a given degree cutoff are instantiated.
Linear algebra over F_2 is done on bitmasks indexed by the monomial basis
of each degree, which keeps the degree-64 verifications fast.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .poincare import poincare_series
from .poly import Polynomial, Ring


def gen_count(cutoff: int) -> int:
    k = 1
    while (2 << k) - 1 <= cutoff:   # 2^(k+1) - 1 <= cutoff
        k += 1
    return k


def xi_ring(cutoff: int) -> Ring:
    k = gen_count(cutoff)
    return Ring(tuple("xi%d" % i for i in range(1, k + 1)),
                tuple((1 << i) - 1 for i in range(1, k + 1)), 2)


def xi_tensor_ring(cutoff: int) -> Ring:
    k = gen_count(cutoff)
    names = tuple("xi%d@1" % i for i in range(1, k + 1)) \
        + tuple("xi%d@2" % i for i in range(1, k + 1))
    weights = tuple((1 << i) - 1 for i in range(1, k + 1)) * 2
    return Ring(names, weights, 2)


def coproduct(x: Polynomial, cutoff: int) -> Polynomial:
    """Delta(xi_k) = sum_i xi_{k-i}^(2^i) (x) xi_i, extended
    multiplicatively into the two-slot tensor ring."""
    if x.max_weight() > cutoff:
        raise ValueError("element degree exceeds cutoff")
    ring = x.ring
    t2 = xi_tensor_ring(cutoff)
    images = {}
    for k in range(1, len(ring.names) + 1):
        img = t2.zero()
        for i in range(k + 1):
            if i == 0:
                left = t2.gen("xi%d@1" % k)
                img = img + left
            elif i == k:
                img = img + t2.gen("xi%d@2" % k)
            else:
                img = img + (t2.gen("xi%d@1" % (k - i)) ** (1 << i)) \
                    * t2.gen("xi%d@2" % i)
        images[ring.names[k - 1]] = img
    return x.map_gens(t2, images)


def conjugate(x: Polynomial) -> Polynomial:
    """Hopf conjugation chi, from the recursion
    sum_{i=0}^k xi_{k-i}^(2^i) chi(xi_i) = 0 (k >= 1), as a ring map."""
    ring = x.ring
    images = _chi_images(ring)
    return x.map_gens(ring, images)


def _chi_images(ring: Ring) -> Dict[str, Polynomial]:
    images: Dict[str, Polynomial] = {}
    chis: List[Polynomial] = [ring.one()]          # chi(xi_0) = 1
    for k in range(1, len(ring.names) + 1):
        acc = ring.zero()
        for i in range(k):
            acc = acc + (_xi(ring, k - i) ** (1 << i)) * chis[i]
        chis.append(acc)                            # mod 2: chi(xi_k) = acc
        images["xi%d" % k] = chis[k]
    return images


def _xi(ring: Ring, i: int) -> Polynomial:
    return ring.one() if i == 0 else ring.gen("xi%d" % i)


def antipode_identity_holds(k_max: int, cutoff: Optional[int] = None
                            ) -> bool:
    """sum_i xi_{k-i}^(2^i) chi(xi_i) = 0 for 1 <= k <= k_max."""
    if cutoff is None:
        cutoff = (1 << (k_max + 1)) - 1
    ring = xi_ring(cutoff)
    images = _chi_images(ring)
    for k in range(1, k_max + 1):
        acc = ring.zero()
        for i in range(k + 1):
            chi_i = ring.one() if i == 0 else images["xi%d" % i]
            acc = acc + (_xi(ring, k - i) ** (1 << i)) * chi_i
        if not acc.is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# F_2 linear algebra on bitmasks


class BitSpan:
    """F_2 row space of bitmask vectors, echelonized by lowest set bit."""

    def __init__(self):
        self.rows: Dict[int, int] = {}   # pivot bit index -> row mask

    def reduce(self, v: int) -> int:
        while v:
            piv = v.bit_length() - 1
            row = self.rows.get(piv)
            if row is None:
                return v
            v ^= row
        return 0

    def insert(self, v: int) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        piv = v.bit_length() - 1
        for p, row in list(self.rows.items()):
            if (row >> piv) & 1:
                self.rows[p] = row ^ v
        self.rows[piv] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def rank(self) -> int:
        return len(self.rows)


class DegreeIndex:
    """Monomial index of each graded piece of a ring, with polynomial <->
    bitmask conversion."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self._monos: Dict[int, List[tuple]] = {}
        self._index: Dict[int, Dict[tuple, int]] = {}

    def monomials(self, d: int) -> List[tuple]:
        if d not in self._monos:
            ms = sorted(self.ring.monomials_of_weight(d)) if d >= 0 else []
            self._monos[d] = ms
            self._index[d] = {m: i for i, m in enumerate(ms)}
        return self._monos[d]

    def mask(self, x: Polynomial, d: int) -> int:
        self.monomials(d)
        idx = self._index[d]
        v = 0
        for m, c in x.terms.items():
            if c % 2:
                v |= 1 << idx[m]
        return v

    def poly(self, mask: int, d: int) -> Polynomial:
        ms = self.monomials(d)
        terms = {}
        i = 0
        while mask:
            if mask & 1:
                terms[ms[i]] = 1
            mask >>= 1
            i += 1
        return self.ring.poly(terms)


# ---------------------------------------------------------------------------
# subalgebra specs


@dataclass
class SubalgebraSpec:
    """Polynomial subalgebra of the dual Steenrod algebra, given by
    generator elements (with an instantiation rule already applied through
    the cutoff)."""
    name: str
    ring: Ring
    gen_names: List[str]                 # descriptive, e.g. "xibar2^4"
    gens: List[Polynomial]
    cutoff: int
    _basis: Dict[tuple, Polynomial] = field(default_factory=dict)

    def gen_degrees(self) -> List[int]:
        return [g.weight() for g in self.gens]

    def basis_exponents(self) -> List[tuple]:
        degs = self.gen_degrees()
        out: List[tuple] = []
        expo = [0] * len(degs)

        def rec(i: int, rem: int):
            if i == len(degs):
                out.append(tuple(expo))
                return
            e = 0
            while e * degs[i] <= rem:
                expo[i] = e
                rec(i + 1, rem - e * degs[i])
                e += 1
            expo[i] = 0

        rec(0, self.cutoff)
        out.sort(key=lambda t: (sum(e * d for e, d in zip(t, degs)), t))
        return out

    def basis_poly(self, expo: tuple) -> Polynomial:
        if expo not in self._basis:
            if not any(expo):
                self._basis[expo] = self.ring.one()
            else:
                i = next(k for k, e in enumerate(expo) if e)
                prev = expo[:i] + (expo[i] - 1,) + expo[i + 1:]
                self._basis[expo] = self.basis_poly(prev) * self.gens[i]
        return self._basis[expo]

    def basis_by_degree(self) -> Dict[int, List[tuple]]:
        degs = self.gen_degrees()
        out: Dict[int, List[tuple]] = {}
        for expo in self.basis_exponents():
            d = sum(e * g for e, g in zip(expo, degs))
            out.setdefault(d, []).append(expo)
        return out

    def expo_text(self, expo: tuple) -> str:
        parts = ["%s^%d" % (n, e) if e > 1 else n
                 for n, e in zip(self.gen_names, expo) if e]
        return "*".join(parts) if parts else "1"


def _conjugated_generator(ring: Ring, i: int, power: int) -> Polynomial:
    return _chi_images(ring)["xi%d" % i] ** power


def make_spec(name: str, rule: Sequence[Tuple[int, int]], cutoff: int,
              conjugated: bool = True) -> SubalgebraSpec:
    """Spec from (xi index, power) pairs; indices beyond the rule follow
    the last entry's power applied to every higher generator.  Only
    generators of degree <= cutoff are instantiated."""
    ring = xi_ring(cutoff)
    kmax = len(ring.names)
    chi = _chi_images(ring) if conjugated else None
    gens: List[Polynomial] = []
    gen_names: List[str] = []
    covered = {i for i, _ in rule}
    full: List[Tuple[int, int]] = list(rule)
    tail_power = rule[-1][1] if rule else 1
    for i in range(1, kmax + 1):
        if i not in covered and (rule and i > max(covered)):
            full.append((i, tail_power))
    for i, power in sorted(full):
        if i > kmax:
            continue
        deg = ((1 << i) - 1) * power
        if deg > cutoff:
            continue
        base = chi["xi%d" % i] if conjugated else ring.gen("xi%d" % i)
        gens.append(base ** power)
        label = ("xibar%d" % i) if conjugated else ("xi%d" % i)
        if power > 1:
            label += "^%d" % power
        gen_names.append(label)
    return SubalgebraSpec(name=name, ring=ring, gen_names=gen_names,
                          gens=gens, cutoff=cutoff)


def ko_spec(cutoff: int) -> SubalgebraSpec:
    return make_spec("H(ko)", [(1, 4), (2, 2), (3, 1)], cutoff)


def tmf_spec(cutoff: int) -> SubalgebraSpec:
    return make_spec("H(tmf)", [(1, 8), (2, 4), (3, 2), (4, 1)], cutoff)


def bp_n_homology(n: int, cutoff: int,
                  check_closure: bool = True) -> SubalgebraSpec:
    """H_*(BP<n>; Z/2) = Z/2[xibar_1^2, ..., xibar_{n+1}^2, xibar_{n+2},
    xibar_{n+3}, ...]; the closure check is run before returning."""
    if n < 0:
        raise ValueError("n must be >= 0")
    rule = [(i, 2) for i in range(1, n + 2)] + [(n + 2, 1)]
    spec = make_spec("H(BP<%d>)" % n, rule, cutoff)
    if check_closure:
        report = comodule_closure_check(spec, cutoff)
        if not report["closed"]:
            raise RuntimeError("BP<%d> spec not closed: %r"
                               % (n, report["witness"]))
    return spec


# ---------------------------------------------------------------------------
# closure, primitives, freeness


def _split_tensor_term(mono: tuple, k: int) -> Tuple[tuple, tuple]:
    return mono[:k], mono[k:]


def comodule_closure_check(spec: SubalgebraSpec, cutoff: int) -> dict:
    """Delta(x) in A (x) span(spec basis) for every basis monomial x of
    degree <= cutoff; first failure witnessed."""
    ring = spec.ring
    k = len(ring.names)
    index = DegreeIndex(ring)
    spans: Dict[int, BitSpan] = {}
    for d, expos in spec.basis_by_degree().items():
        span = BitSpan()
        for expo in expos:
            span.insert(index.mask(spec.basis_poly(expo), d))
        spans[d] = span
    checked = 0
    for expo in spec.basis_exponents():
        x = spec.basis_poly(expo)
        d = x.weight() if not x.is_constant() else 0
        if d > cutoff or d == 0:
            continue
        dx = coproduct(x, cutoff)
        # group by left leg; right legs must lie in the spec span
        by_left: Dict[tuple, Dict[int, int]] = {}
        for mono, _ in dx.terms.items():
            left, right = _split_tensor_term(mono, k)
            dr = sum(e * w for e, w in zip(right, ring.weights))
            index.monomials(dr)
            ri = index._index[dr][right]
            slot = by_left.setdefault(left, {})
            slot[dr] = slot.get(dr, 0) ^ (1 << ri)
        for left, parts in by_left.items():
            for dr, rmask in parts.items():
                if not rmask or dr == 0:
                    continue
                span = spans.get(dr)
                if span is None or not span.contains(rmask):
                    return {"closed": False, "checked": checked,
                            "witness": {
                                "element": spec.expo_text(expo),
                                "left_leg": _mono_text(ring, left),
                                "right_leg":
                                    index.poly(rmask, dr).text()}}
        checked += 1
    return {"closed": True, "checked": checked, "witness": None}


def _mono_text(ring: Ring, mono: tuple) -> str:
    p = Polynomial(ring, {mono: 1})
    return p.text()


def _ideal_rewrite(spec: SubalgebraSpec, index: DegreeIndex, d: int,
                   cache: Dict[int, BitSpan]) -> BitSpan:
    """Echelon span of (A . spec^+)_d."""
    if d in cache:
        return cache[d]
    ring = spec.ring
    span = BitSpan()
    for dc, expos in spec.basis_by_degree().items():
        if dc == 0 or dc > d:
            continue
        for expo in expos:
            c = spec.basis_poly(expo)
            for m in index.monomials(d - dc):
                prod = Polynomial(ring, {m: 1}) * c
                span.insert(index.mask(prod, d))
    cache[d] = span
    return span


def primitives(window: Sequence[int], cutoff: int,
               quotient_by: Optional[SubalgebraSpec] = None
               ) -> Dict[int, List[str]]:
    """Per degree in `window`, a basis of the primitives of A (or of the
    quotient Hopf algebra A//C when `quotient_by` is given), as
    representative polynomials."""
    ring = xi_ring(cutoff)
    k = len(ring.names)
    index = DegreeIndex(ring)
    ideal_cache: Dict[int, BitSpan] = {}

    def ideal(d: int) -> Optional[BitSpan]:
        if quotient_by is None:
            return None
        return _ideal_rewrite(quotient_by, index, d, ideal_cache)

    out: Dict[int, List[str]] = {}
    for d in window:
        if d <= 0 or d > cutoff:
            out[d] = []
            continue
        monos = index.monomials(d)
        span_d = ideal(d)
        cols: List[int] = []
        reps: List[tuple] = []
        # representatives: monomials not reducible by the ideal
        seen = BitSpan()
        if span_d:
            for piv, row in span_d.rows.items():
                seen.insert(row)
        for i, m in enumerate(monos):
            v = seen.reduce(1 << i)
            if not v or not seen.insert(v):
                continue
            reps.append(m)
        if span_d is None:
            reps = list(monos)
        # reduced-coproduct vectors, both legs reduced mod the ideal
        tindex: Dict[Tuple[int, int, int, int], int] = {}
        vecs: List[int] = []
        for m in reps:
            dx = coproduct(Polynomial(ring, {m: 1}), cutoff)
            v = 0
            for mono, _ in dx.terms.items():
                left, right = _split_tensor_term(mono, k)
                dl = sum(e * w for e, w in zip(left, ring.weights))
                dr = d - dl
                if dl == 0 or dr == 0:
                    continue
                lparts = _reduced_parts(left, dl, index, ideal(dl))
                rparts = _reduced_parts(right, dr, index, ideal(dr))
                for li in lparts:
                    for ri in rparts:
                        key = (dl, li, dr, ri)
                        if key not in tindex:
                            tindex[key] = len(tindex)
                        v ^= 1 << tindex[key]
            vecs.append(v)
        kern = _f2_kernel(vecs)
        basis = []
        for mask in kern:
            terms = {}
            i = 0
            while mask:
                if mask & 1:
                    terms[reps[i]] = 1
                mask >>= 1
                i += 1
            basis.append(ring.poly(terms).text())
        out[d] = basis
    return out


def _reduced_parts(mono: tuple, d: int, index: DegreeIndex,
                   span: Optional[BitSpan]) -> List[int]:
    """Indices of the monomials in the canonical residue of `mono` mod the
    ideal span (mono's own index when there is no ideal)."""
    index.monomials(d)
    i = index._index[d][mono]
    if span is None:
        return [i]
    v = _residue(1 << i, span)
    out = []
    b = 0
    while v:
        if v & 1:
            out.append(b)
        v >>= 1
        b += 1
    return out


def _residue(v: int, span: BitSpan) -> int:
    """Canonical residue: eliminate every pivot bit of the span from v."""
    for piv in sorted(span.rows, reverse=True):
        if (v >> piv) & 1:
            v ^= span.rows[piv]
    return v


def _f2_kernel(cols: List[int]) -> List[int]:
    """Kernel of the F_2 matrix whose columns are the given masks;
    kernel vectors returned as masks over column indices (augmented
    Gaussian elimination, echelonized by highest row bit)."""
    out: List[int] = []
    rows: Dict[int, Tuple[int, int]] = {}   # pivot -> (row-part, col-part)
    for i, v in enumerate(cols):
        cpart = 1 << i
        while v:
            piv = v.bit_length() - 1
            hit = rows.get(piv)
            if hit is None:
                rows[piv] = (v, cpart)
                break
            v ^= hit[0]
            cpart ^= hit[1]
        else:
            out.append(cpart)
    return out


def freeness_rank_check(big: SubalgebraSpec, small: SubalgebraSpec,
                        cells: Sequence[int], cutoff: int) -> dict:
    """(a) Poincare-series identity PS(big) = PS(small) * sum_d q^d over
    the cells, coefficientwise through the cutoff; (b) basis lifting:
    degreewise, cell lifts times the small basis span big (Nakayama
    surjectivity), with matching dimension, hence a free basis."""
    ps_big = poincare_series(big.gen_degrees(), cutoff)
    ps_small = poincare_series(small.gen_degrees(), cutoff)
    ps_cells = [0] * (cutoff + 1)
    for d in cells:
        if d <= cutoff:
            ps_cells[d] += 1
    conv = [sum(ps_small[i] * ps_cells[d - i] for i in range(d + 1))
            for d in range(cutoff + 1)]
    ps_ok = conv == list(ps_big)

    ring = big.ring
    index = DegreeIndex(ring)
    # small must embed in big: every small generator in big's span
    big_by_deg = big.basis_by_degree()
    small_by_deg = small.basis_by_degree()
    for g in small.gens:
        d = g.weight()
        span = BitSpan()
        for expo in big_by_deg.get(d, []):
            span.insert(index.mask(big.basis_poly(expo), d))
        if not span.contains(index.mask(g, d)):
            return {"free": False, "ps_identity": ps_ok,
                    "failure": "small generator of degree %d not in big"
                               % d, "cells": sorted(cells)}

    # cell lifts: a basis of big_d modulo (small^+ . big)_d, degreewise
    lifts: List[Tuple[int, Polynomial]] = []
    cell_multiset = sorted(cells)
    got: List[int] = []
    for d in sorted(set(big_by_deg) | {0}):
        if d > cutoff:
            continue
        span = BitSpan()
        for dc, expos in small_by_deg.items():
            if dc == 0 or dc > d:
                continue
            for se in expos:
                s = small.basis_poly(se)
                for be in big_by_deg.get(d - dc, []):
                    span.insert(index.mask(big.basis_poly(be) * s, d))
        for be in big_by_deg.get(d, []):
            if span.insert(index.mask(big.basis_poly(be), d)):
                lifts.append((d, big.basis_poly(be)))
                got.append(d)
    got.sort()
    cells_ok = got == cell_multiset

    # Nakayama: lifts times small basis span big, degree by degree
    span_by_deg: Dict[int, BitSpan] = {}
    for d, lift in lifts:
        for dc, expos in small_by_deg.items():
            for se in expos:
                dd = d + dc
                if dd > cutoff:
                    continue
                prod = lift * small.basis_poly(se)
                span_by_deg.setdefault(dd, BitSpan()).insert(
                    index.mask(prod, dd))
    surj = True
    for d, expos in big_by_deg.items():
        if d > cutoff:
            continue
        span = span_by_deg.get(d, BitSpan())
        for be in expos:
            if not span.contains(index.mask(big.basis_poly(be), d)):
                surj = False
                break
        if not surj:
            break
    rank_free = ps_ok and cells_ok and surj
    return {"free": rank_free, "ps_identity": ps_ok,
            "cells_found": got, "cells": cell_multiset,
            "cells_match": cells_ok, "lifts_generate": surj,
            "rank": len(cell_multiset)}


def a2_pattern_series(cutoff: int) -> List[int]:
    """PS(A)/PS(H(tmf)-spec): the graded dimensions of the 64-dimensional
    pattern dual to A(2), by coefficientwise power-series division."""
    ring = xi_ring(cutoff)
    ps_a = poincare_series(ring.weights, cutoff)
    spec = tmf_spec(cutoff)
    ps_s = poincare_series(spec.gen_degrees(), cutoff)
    quo = [0] * (cutoff + 1)
    for d in range(cutoff + 1):
        acc = ps_a[d] - sum(quo[i] * ps_s[d - i] for i in range(d))
        if acc % ps_s[0]:
            raise ArithmeticError("series not divisible at degree %d" % d)
        quo[d] = acc // ps_s[0]
    return quo


def uniqueness_probe(case: str, cutoff: int = 16) -> dict:
    """The forcing steps of the uniqueness arguments: the lowest-degree
    nonconstant element of a candidate subcomodule algebra with the target
    graded dimension must be primitive; the primitives of A at that degree
    force the generator.  For the tmf case, additionally the degree-12
    witness: xi1^6 xibar2^2 is not primitive modulo xi1^8."""
    if case not in ("ko", "tmf"):
        raise ValueError("case must be 'ko' or 'tmf'")
    lowest = 4 if case == "ko" else 8
    prim = primitives(range(1, max(cutoff, lowest) + 1), max(cutoff, 16))
    at_lowest = prim[lowest]
    forced = at_lowest == ["xi1^%d" % lowest]
    report = {"case": case, "lowest_degree": lowest,
              "primitives_at_lowest": at_lowest,
              "forced_generator": "xi1^%d" % lowest if forced else None,
              "all_primitives": {d: prim[d] for d in prim if prim[d]}}
    if case == "tmf":
        ring = xi_ring(16)
        k = len(ring.names)
        chi2 = _chi_images(ring)["xi2"]
        x = (ring.gen("xi1") ** 6) * (chi2 ** 2)
        dx = coproduct(x, 16)
        bad_terms = []
        for mono, _ in dx.terms.items():
            left, right = _split_tensor_term(mono, k)
            dl = sum(e * w for e, w in zip(left, ring.weights))
            dr = 12 - dl
            if dl == 0 or dr == 0:
                continue
            # membership in A (x) F2{xi1^8} requires every right leg to be
            # the monomial xi1^8
            if right != tuple(8 if i == 0 else 0 for i in range(k)):
                bad_terms.append((_mono_text(ring, left),
                                  _mono_text(ring, right)))
        report["degree12_witness"] = {
            "element": "xi1^6*xibar2^2",
            "primitive_mod_xi1^8": not bad_terms,
            "offending_terms": bad_terms[:3]}
    return report
