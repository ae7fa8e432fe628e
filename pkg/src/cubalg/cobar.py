"""Normalized cobar complex of a Hopf algebroid presentation.

Cochains in degree s live in Gamma-bar^((x)_A s) (x)_A M.  With Gamma free
over A on monomials, a basis is given by tuples

    a-monomial . (m_1 | ... | m_s) . b

with every slot entry m_i a nonconstant gamma monomial and b a comodule
basis element; the coefficient monomial acts through eta_L on the far left.
The cosimplicial faces are

    d = sum_{i=0}^{s+1} (-1)^i face_i,

where face_0 inserts a unit slot (turning the left coefficient into eta_R,
by the middle relation), face_i applies Delta to slot i, and face_{s+1}
applies the coaction to b.  Terms acquiring a constant slot are dropped
(normalization).  Delta images and coactions must be free of A-generators
-- true for every built-in presentation, and asserted -- so no coefficient
ever has to be moved across an interior slot.

Cohomology is computed over Z (Smith normal form: free rank plus torsion
orders) or over F_p; d o d = 0 is asserted on every assembled bidegree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .hopf import HopfAlgebroidPresentation
from .intlinalg import FieldOps, field_rank, homology, p_local_part
from .poly import Polynomial


@dataclass
class Comodule:
    """Graded comodule with finite listed basis; the coaction sends a basis
    element to a sum of (gamma element) (x) (basis element)."""
    name: str
    basis: List[Tuple[str, int]]                       # (label, weight)
    coaction: Dict[str, List[Tuple[Polynomial, str]]]  # label -> [(gamma, l')]


def trivial_comodule(H: HopfAlgebroidPresentation, gen_weight: int = 0,
                     name: str = "A") -> Comodule:
    return Comodule(name=name, basis=[("1", gen_weight)],
                    coaction={"1": [(H.gamma.one(), "1")]})


def sign_comodule(H: HopfAlgebroidPresentation, gen_weight: int) -> Comodule:
    """Rank-1 comodule with coaction (1 - 2d) (x) gen: the sign
    representation of the Z/2-group algebroid."""
    g = H.gamma
    gamma = g.one() - 2 * g.gen(H.gamma_names[0])
    return Comodule(name="sign", basis=[("1", gen_weight)],
                    coaction={"1": [(gamma, "1")]})


def extended_comodule(H: HopfAlgebroidPresentation, max_weight: int
                      ) -> Comodule:
    """Gamma itself (an extended comodule, coaction Delta), truncated to
    the gamma-monomial basis of weight <= max_weight."""
    basis: List[Tuple[str, int]] = []
    coaction: Dict[str, List[Tuple[Polynomial, str]]] = {}
    monos: List[tuple] = []
    for w in range(max_weight + 1):
        monos += H.gamma_monomials(w, nonconstant=(w != 0))
    for m in sorted(set(monos)):
        label = _mono_label(H, m)
        basis.append((label, _mono_weight(H, m)))
        terms = _delta_of_slot_monomial(H, m)
        coaction[label] = [
            (_gamma_poly(H, p, c), _mono_label(H, q)) for c, p, q in terms]
    basis.sort(key=lambda bw: (bw[1], bw[0]))
    return Comodule(name="Gamma", basis=basis, coaction=coaction)


def _mono_label(H, m: tuple) -> str:
    if not any(m):
        return "1"
    return "*".join("%s^%d" % (n, e) if e > 1 else n
                    for n, e in zip(H.gamma_names, m) if e)


def _mono_weight(H, m: tuple) -> int:
    return sum(e * w for e, w in zip(m, H.gamma_weights))


def _gamma_poly(H, m: tuple, c: int) -> Polynomial:
    g = H.gamma
    na = len(H.A.names)
    return g.poly({(0,) * na + tuple(m): c})


def _delta_of_slot_monomial(H, m: tuple) -> List[Tuple[int, tuple, tuple]]:
    """Delta of a pure gamma monomial, as (coefficient, left exponents,
    right exponents) triples; asserts the image is free of A-generators."""
    gm = _gamma_poly(H, m, 1)
    d = H.delta_map(gm)
    na = len(H.A.names)
    ng = len(H.gamma_names)
    out = []
    for mono, c in d.terms.items():
        if any(mono[:na]):
            raise NotImplementedError(
                "Delta image with A-coefficients: interior coefficient "
                "movement not supported")
        out.append((c, mono[na:na + ng], mono[na + ng:na + 2 * ng]))
    return out


class CobarComplex:
    """The weight-`strand` strand of the normalized cobar complex of
    (H, M), assembled through cochain degree s_max (+1 for the outgoing
    differential)."""

    def __init__(self, H: HopfAlgebroidPresentation, M: Comodule,
                 strand: int, s_max: int):
        self.H = H
        self.M = M
        self.strand = strand
        self.s_max = s_max
        self._eta_cache: Dict[tuple, Polynomial] = {}
        self._delta_cache: Dict[tuple, list] = {}
        self.bases: List[List[tuple]] = []   # per s: (amono, slots, label)
        for s in range(s_max + 2):
            self.bases.append(self._enumerate(s))
        self.matrices: List[List[List[int]]] = []
        for s in range(s_max + 1):
            self.matrices.append(self._differential(s))
        self._check_d_squared()

    # -- basis -------------------------------------------------------------

    def _slot_weight_options(self, cap: int) -> List[int]:
        opts = []
        for w in range(cap + 1):
            if self.H.gamma_monomials(w):
                opts.append(w)
        return opts

    def _enumerate(self, s: int) -> List[tuple]:
        H = self.H
        out: List[tuple] = []
        for label, wl in self.M.basis:
            rem = self.strand - wl
            if rem < 0:
                continue

            def rec(i: int, budget: int, slots: tuple):
                if i == s:
                    for amono in _a_monomials(H, budget):
                        out.append((amono, slots, label))
                    return
                for w in self._slot_weight_options(budget):
                    for m in H.gamma_monomials(w):
                        rec(i + 1, budget - w, slots + (m,))

            rec(0, rem, ())
        out.sort()
        return out

    # -- differential ------------------------------------------------------

    def _differential(self, s: int) -> List[List[int]]:
        H = self.H
        src = self.bases[s]
        dst = self.bases[s + 1]
        index = {b: i for i, b in enumerate(dst)}
        mat = [[0] * len(src) for _ in dst]
        na = len(H.A.names)
        ng = len(H.gamma_names)
        for col, (amono, slots, label) in enumerate(src):
            acc: Dict[tuple, int] = {}

            def add(target: tuple, c: int):
                if c:
                    acc[target] = acc.get(target, 0) + c

            # face 0: left coefficient through eta_R into a fresh slot
            if amono not in self._eta_cache:
                self._eta_cache[amono] = H.eta_R(H.A.poly({amono: 1}))
            for mono, c in self._eta_cache[amono].terms.items():
                delta_a, eps = mono[:na], mono[na:na + ng]
                if any(eps):
                    add((delta_a, (eps,) + slots, label), c)
            # faces 1..s: Delta on slot i
            for i, m in enumerate(slots):
                sign = -1 if (i + 1) % 2 else 1
                if m not in self._delta_cache:
                    self._delta_cache[m] = _delta_of_slot_monomial(H, m)
                for c, p, q in self._delta_cache[m]:
                    if any(p) and any(q):
                        new = slots[:i] + (p, q) + slots[i + 1:]
                        add((amono, new, label), sign * c)
            # face s+1: coaction on the comodule element
            sign = -1 if (s + 1) % 2 else 1
            for gamma, label2 in self.M.coaction[label]:
                for mono, c in gamma.terms.items():
                    if any(mono[:na]):
                        raise NotImplementedError(
                            "coaction with A-coefficients unsupported")
                    eps = mono[na:na + ng]
                    if any(eps):
                        add((amono, slots + (eps,), label2), sign * c)
            for target, c in acc.items():
                if c:
                    mat[index[target]][col] = c
        return mat

    def _check_d_squared(self):
        for s in range(self.s_max):
            a, b = self.matrices[s + 1], self.matrices[s]
            if not (a and a[0] and b and b[0]):
                continue
            for i in range(len(a)):
                row = a[i]
                for j in range(len(b[0])):
                    if sum(row[k] * b[k][j] for k in range(len(b))):
                        raise AssertionError(
                            "d^2 != 0 at cochain degree %d, strand %d"
                            % (s, self.strand))

    # -- cohomology --------------------------------------------------------

    def cohomology(self, prime: Optional[int] = None
                   ) -> List[Tuple[int, List[int]]]:
        """Per s in 0..s_max: (free rank, torsion orders) over Z, or
        (dimension, []) over F_p when `prime` is given."""
        out = []
        for s in range(self.s_max + 1):
            dout = self.matrices[s]
            din = self.matrices[s - 1] if s else []
            n = len(self.bases[s])
            if prime is None:
                has_out = bool(dout and dout[0])
                has_in = bool(din and din[0])
                if not has_out and not has_in:
                    out.append((n, []))
                else:
                    out.append(homology(dout if has_out else [],
                                        din if has_in else []))
            else:
                ops = FieldOps(prime)
                rk_out = _fp_rank(dout, ops)
                rk_in = _fp_rank(din, ops)
                out.append((n - rk_out - rk_in, []))
        return out


def _fp_rank(mat: List[List[int]], ops: FieldOps) -> int:
    if not mat or not mat[0]:
        return 0
    rows = [[ops.of_int(c) for c in row] for row in mat]
    return field_rank(rows, len(mat[0]), ops)


def _a_monomials(H, w: int) -> List[tuple]:
    if w < 0:
        return []
    if not H.A.names:
        return [()] if w == 0 else []
    return H.A.monomials_of_weight(w)


# ---------------------------------------------------------------------------
# charts


@dataclass
class BigradedChart:
    """E_2-style chart: (s, t) -> (free rank, torsion orders)."""
    s_max: int
    t_values: Tuple[int, ...]
    cells: Dict[Tuple[int, int], Tuple[int, Tuple[int, ...]]] \
        = field(default_factory=dict)
    meta: Dict[str, object] = field(default_factory=dict)

    def cell(self, s: int, t: int) -> Tuple[int, Tuple[int, ...]]:
        return self.cells.get((s, t), (0, ()))


def twist_comodule(H: HopfAlgebroidPresentation, j: int) -> Comodule:
    """The comodule whose strand-2j cobar computes H^*(omega^j): for graded
    algebroids the trivial comodule (the twist is the weight strand); for
    the Z/2-group algebroid the parity of j selects trivial or sign
    coefficients, with the generator placed in weight 2j."""
    if H.name == "z2_group":
        if j % 2:
            return sign_comodule(H, 2 * j)
        return trivial_comodule(H, 2 * j)
    return trivial_comodule(H)


def cobar_cohomology(H: HopfAlgebroidPresentation, twists: Sequence[int],
                     s_max: int, prime: Optional[int] = None,
                     p_local: Optional[int] = None,
                     comodule: Optional[Comodule] = None) -> BigradedChart:
    """Bigraded chart of cobar cohomology, one column per twist j (placed
    at internal degree t = 2j).  `prime` switches to F_p coefficients;
    `p_local` keeps Z coefficients but strips torsion prime to p."""
    chart = BigradedChart(s_max=s_max,
                          t_values=tuple(2 * j for j in twists))
    chart.meta["algebroid"] = H.name
    chart.meta["coefficients"] = ("Z" if prime is None else "F%d" % prime)
    if p_local:
        chart.meta["p_local"] = p_local
    for j in twists:
        M = comodule if comodule is not None else twist_comodule(H, j)
        cx = CobarComplex(H, M, 2 * j, s_max)
        for s, (rank, torsion) in enumerate(cx.cohomology(prime)):
            if p_local:
                rank, torsion = p_local_part(rank, list(torsion), p_local)
            if rank or torsion:
                chart.cells[(s, 2 * j)] = (rank, tuple(torsion))
    return chart
