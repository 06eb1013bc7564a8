"""Buchberger's algorithm, quotient dimensions, Milnor numbers, tame/wild split.

Local dimensions at the origin are computed by adjoining all monomials of
degree N (truncating by a power of the maximal ideal) and growing N until two
consecutive dimensions agree. Truncation stabilizes for isolated
singularities; non-stabilization within the bound is reported as an infinite
dimension by the Milnor layer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from .errors import DomainMismatch, NoStabilization
from .fields import QQ, PrimeField
from .poly import GREVLEX, Exponents, MonomialOrder, MPoly, reduce_mod_p

INFINITE = float("inf")
Dimension = Union[int, float]


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis: monic generators, sorted by leading monomial ascending."""

    generators: Tuple[MPoly, ...]
    order: MonomialOrder
    nvars: int
    domain: object

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def contains_one(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(f: MPoly, order: MonomialOrder) -> MPoly:
    _, c = f.leading(order)
    return f.scale(f.domain.inv(c))


def normal_form(f: MPoly, G, order: Optional[MonomialOrder] = None) -> MPoly:
    """Remainder of multivariate division of f by the generators of G.

    Deterministic: generators tried in stored order, leading term of the
    running polynomial cancelled first. Zero iff f lies in the ideal when G
    is a Groebner basis.
    """
    if isinstance(G, GroebnerBasis):
        gens = G.generators
        order = order or G.order
    else:
        gens = tuple(g for g in G if not g.is_zero())
        order = order or GREVLEX
    if f.is_zero() or not gens:
        return f
    dom = f.domain
    for g in gens:
        if g.nvars != f.nvars or g.domain != dom:
            raise DomainMismatch("divisor over wrong ring")
    leads = [g.leading(order) for g in gens]
    remainder = MPoly.zero(f.nvars, dom)
    work = f
    while not work.is_zero():
        le, lc = work.leading(order)
        reduced = False
        for g, (ge, gc) in zip(gens, leads):
            if _divides(ge, le):
                q = tuple(a - b for a, b in zip(le, ge))
                factor = dom.div(lc, gc)
                work = work - g.mul_monomial(q, factor)
                reduced = True
                break
        if not reduced:
            remainder = remainder + MPoly(f.nvars, dom, {le: lc})
            work = work - MPoly(f.nvars, dom, {le: lc})
    return remainder


def _s_poly(f: MPoly, g: MPoly, order: MonomialOrder) -> MPoly:
    fe, fc = f.leading(order)
    ge, gc = g.leading(order)
    lcm = _lcm(fe, ge)
    dom = f.domain
    mf = f.mul_monomial(tuple(a - b for a, b in zip(lcm, fe)), dom.inv(fc))
    mg = g.mul_monomial(tuple(a - b for a, b in zip(lcm, ge)), dom.inv(gc))
    return mf - mg


def buchberger(gens: Sequence[MPoly], order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis, normal selection strategy.

    Pairs are processed by minimal lcm total degree, ties broken by the lex
    order on pair indices; coprime leading terms are skipped (first Buchberger
    criterion).
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    nvars = gens[0].nvars
    dom = gens[0].domain
    for g in gens:
        if g.nvars != nvars or g.domain != dom:
            raise DomainMismatch("generators over different rings")
    G = [_monic(g, order) for g in gens]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}

    def pair_key(p):
        i, j = p
        lcm = _lcm(G[i].leading(order)[0], G[j].leading(order)[0])
        return (sum(lcm), p)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        fe = G[i].leading(order)[0]
        ge = G[j].leading(order)[0]
        if _lcm(fe, ge) == tuple(a + b for a, b in zip(fe, ge)):
            continue
        r = normal_form(_s_poly(G[i], G[j], order), G, order)
        if not r.is_zero():
            r = _monic(r, order)
            G.append(r)
            k = len(G) - 1
            pairs.update((i2, k) for i2 in range(k))
    # interreduce to the unique reduced basis
    changed = True
    while changed:
        changed = False
        for idx in range(len(G)):
            others = G[:idx] + G[idx + 1 :]
            if not others:
                continue
            r = normal_form(G[idx], others, order)
            if r != G[idx]:
                changed = True
                if r.is_zero():
                    G.pop(idx)
                else:
                    G[idx] = _monic(r, order)
                break
    G.sort(key=lambda g: order.key(g.leading(order)[0]))
    return GroebnerBasis(tuple(G), order, nvars, dom)


def standard_monomials(G: GroebnerBasis) -> Optional[List[Exponents]]:
    """Monomials divisible by no leading term, or None if infinitely many.

    Finite iff the staircase is bounded in every variable, i.e. some leading
    term is a pure power of each variable.
    """
    if G.contains_one():
        return []
    leads = [g.leading(G.order)[0] for g in G.generators]
    n = G.nvars
    bounds = []
    for i in range(n):
        pure = [e[i] for e in leads if all(e[j] == 0 for j in range(n) if j != i)]
        if not pure:
            return None
        bounds.append(min(pure))
    out = []
    for e in itertools.product(*(range(b) for b in bounds)):
        if not any(_divides(le, e) for le in leads):
            out.append(e)
    out.sort(key=GREVLEX.key)
    return out


def quotient_dimension(G: GroebnerBasis) -> Dimension:
    """Vector-space dimension of the quotient ring, or INFINITE."""
    sm = standard_monomials(G)
    return INFINITE if sm is None else len(sm)


def _degree_monomials(nvars: int, d: int) -> List[Exponents]:
    return [
        e
        for e in itertools.product(range(d + 1), repeat=nvars)
        if sum(e) == d
    ]


def local_dimension(
    gens: Sequence[MPoly],
    n_max: int = 20,
    order: MonomialOrder = GREVLEX,
) -> Tuple[int, int]:
    """Dimension of the local quotient at the origin via m^N truncation.

    Adjoins all monomials of degree N for N = 2, 3, ... and returns the first
    dimension repeated twice in a row, together with the N where it
    stabilized. Raises NoStabilization when n_max is reached first.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    nvars = gens[0].nvars
    dom = gens[0].domain
    prev = None
    for N in range(2, n_max + 2):
        trunc = [
            MPoly.monomial(nvars, dom, e) for e in _degree_monomials(nvars, N)
        ]
        d = quotient_dimension(buchberger(gens + trunc, order))
        if prev is not None and d == prev:
            return int(prev), N - 1
        prev = d
        if N - 1 >= n_max:
            break
    raise NoStabilization(f"no stabilization up to N = {n_max}")


def jacobian_ideal(f: MPoly) -> List[MPoly]:
    return [f.derivative(i) for i in range(f.nvars)]


def milnor_number(f: MPoly, n_max: int = 20) -> Dimension:
    """Local dimension of the Jacobian ideal quotient; INFINITE if the
    singularity is not isolated (truncated dimensions never stabilize)."""
    gens = [g for g in jacobian_ideal(f) if not g.is_zero()]
    if not gens:
        return INFINITE
    try:
        dim, _ = local_dimension(gens, n_max=n_max)
    except NoStabilization:
        return INFINITE
    return dim


def milnor_number_detailed(f: MPoly, n_max: int = 20) -> Tuple[Dimension, Optional[int]]:
    """Milnor number plus the truncation order it stabilized at."""
    gens = [g for g in jacobian_ideal(f) if not g.is_zero()]
    if not gens:
        return INFINITE, None
    try:
        dim, at = local_dimension(gens, n_max=n_max)
    except NoStabilization:
        return INFINITE, None
    return dim, at


@dataclass(frozen=True)
class MilnorReport:
    """Tame/wild vanishing-cycle split of an integer polynomial at a prime."""

    f_text: str
    p: int
    char_p_dimension: Dimension
    char_0_dimension: Dimension
    tame: Dimension
    wild: Dimension
    truncation_order: Optional[int]
    anomaly: Optional[str] = None

    def to_json(self) -> dict:
        def enc(d):
            return "infinite" if d == INFINITE else int(d)

        return {
            "f": self.f_text,
            "p": self.p,
            "char_p_dimension": enc(self.char_p_dimension),
            "char_0_dimension": enc(self.char_0_dimension),
            "tame": enc(self.tame),
            "wild": enc(self.wild),
            "truncation_order": self.truncation_order,
            "anomaly": self.anomaly,
        }


def tame_wild_split(f: MPoly, p: int, n_max: int = 20) -> MilnorReport:
    """Split the char-p Milnor dimension into tame (char-0) and wild parts.

    f must have integer coefficients so it can be read both mod p and over
    the rationals. wild = char_p - char_0; char_p < char_0 or an infinite
    char-p dimension is flagged as an anomaly instead of raising.
    """
    if f.domain != QQ:
        raise DomainMismatch("tame/wild split needs an integer polynomial over QQ")
    f_p = reduce_mod_p(f, p)
    dim_p, at_p = milnor_number_detailed(f_p, n_max=n_max)
    dim_0 = milnor_number(f, n_max=n_max)
    anomaly = None
    if dim_p == INFINITE:
        tame, wild = dim_0, INFINITE
        anomaly = "char-p dimension infinite (derivatives degenerate mod p)"
    elif dim_0 == INFINITE:
        tame, wild = INFINITE, INFINITE
        anomaly = "char-0 dimension infinite"
    else:
        tame = dim_0
        wild = dim_p - dim_0
        if wild < 0:
            anomaly = "char-p dimension smaller than char-0 dimension"
    return MilnorReport(
        f_text=f.to_str(),
        p=p,
        char_p_dimension=dim_p,
        char_0_dimension=dim_0,
        tame=tame,
        wild=wild,
        truncation_order=at_p,
        anomaly=anomaly,
    )
