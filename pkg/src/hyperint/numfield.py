"""Exact arithmetic in algebraic number fields L = Q[t]/(m(t)).

AlgNumber stores coordinates in the power basis of the field generator;
all arithmetic reduces modulo the monic irreducible minpoly.  Splitting
fields are built by iterated primitive-element adjunction with a degree
cap, and carry their automorphisms (images of the generator), which makes
Galois conjugation a coordinate-polynomial evaluation.
"""

from __future__ import annotations

from functools import lru_cache

import sympy
from sympy import QQ, Poly, Symbol
from sympy.polys.densebasic import dup_strip
from sympy.polys.densearith import dup_rem
from sympy.polys.euclidtools import dup_invert
from sympy.polys.numberfields import primitive_element
from sympy.polys.polyclasses import ANP

from .errors import DegreeCapExceeded, NotGalois
from .config import DEFAULT

_t = Symbol('t')


def _q(v):
    return QQ.convert(v)


class NumberField:
    """Q[t]/(minpoly).  degree == 1 is Q itself (minpoly t)."""

    def __init__(self, minpoly: Poly, ext=None):
        minpoly = Poly(minpoly, _t, domain=QQ).monic()
        self.minpoly = minpoly
        self.degree = minpoly.degree()
        # descending coefficient list of the minpoly, for modular reduction
        self._mod = [_q(c) for c in minpoly.all_coeffs()]
        if self.degree == 1:
            self._ext = None
            self.domain = QQ
        else:
            if ext is None:
                ext = sympy.CRootOf(minpoly.as_expr(), 0)
            self._ext = ext
            self.domain = QQ.algebraic_field(ext)
            # sanity: the domain must reduce modulo the same minpoly
            if [ _q(c) for c in self.domain.mod.to_list() ] != self._mod:
                raise ValueError("algebraic domain minpoly mismatch")
        self.automorphisms: list[AlgNumber] | None = None
        if self.degree == 1:
            self.automorphisms = [self.gen()]

    # -- constructors ------------------------------------------------------

    def new(self, coords) -> AlgNumber:
        coords = [_q(c) for c in coords]
        if len(coords) < self.degree:
            coords += [QQ.zero] * (self.degree - len(coords))
        elif len(coords) > self.degree:
            coords = self._reduce(coords)
        return AlgNumber(self, tuple(coords))

    def from_rational(self, c) -> AlgNumber:
        return self.new([c])

    def zero(self) -> AlgNumber:
        return self.from_rational(0)

    def one(self) -> AlgNumber:
        return self.from_rational(1)

    def gen(self) -> AlgNumber:
        if self.degree == 1:
            # generator of Q (root of t) is 0
            return self.zero()
        return self.new([0, 1])

    # -- internal ----------------------------------------------------------

    def _reduce(self, coords_asc):
        desc = dup_strip(list(reversed(coords_asc)))
        desc = dup_rem(desc, self._mod, QQ)
        asc = list(reversed(desc))
        asc += [QQ.zero] * (self.degree - len(asc))
        return asc

    def to_dom(self, a: AlgNumber):
        """Coefficient of this field as a sympy domain element."""
        if self.degree == 1:
            return a.coords[0]
        desc = dup_strip(list(reversed(a.coords)))
        return ANP(desc, self._mod, QQ)

    def from_dom(self, c) -> AlgNumber:
        if self.degree == 1:
            return self.new([c])
        desc = c.to_list() if hasattr(c, 'to_list') else list(c.rep)
        return self.new(list(reversed(desc)))

    # -- field structure ---------------------------------------------------

    def is_rational_field(self) -> bool:
        return self.degree == 1

    @property
    def power_sums(self):
        """Newton power sums p_0..p_{d-1} of the minpoly roots (cached)."""
        if not hasattr(self, '_psums'):
            d = self.degree
            # e_k with signs: minpoly = t^d - e1 t^{d-1} + e2 t^{d-2} - ...
            cs = self.minpoly.all_coeffs()  # descending, monic
            e = [(-1) ** k * _q(cs[k]) for k in range(d + 1)]
            p = [QQ.convert(d)]
            for k in range(1, d):
                s = (-1) ** (k - 1) * k * e[k]
                for i in range(1, k):
                    s += (-1) ** (k - 1 + i) * e[k - i] * p[i]
                p.append(s)
            self._psums = p
        return self._psums

    def __eq__(self, other):
        return isinstance(other, NumberField) and self._mod == other._mod

    def __hash__(self):
        return hash(tuple(self._mod))

    def __repr__(self):
        if self.degree == 1:
            return 'QQ'
        return f'QQ[t]/({self.minpoly.as_expr()})'


class AlgNumber:
    """Element of a NumberField in power-basis coordinates (ascending)."""

    __slots__ = ('field', 'coords')

    def __init__(self, field: NumberField, coords):
        self.field = field
        self.coords = coords

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, AlgNumber):
            if other.field == self.field:
                return other
            if other.is_rational():
                return self.field.from_rational(other.coords[0])
            if self.is_rational():
                return None  # caller retries reversed
            raise ValueError("cannot mix elements of different fields")
        if isinstance(other, (int, sympy.Rational)) or QQ.of_type(other):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.new([a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return AlgNumber(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.new([a - b for a, b in zip(self.coords, o.coords)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = self.field.degree
        prod = [QQ.zero] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(o.coords):
                if b:
                    prod[i + j] += a * b
        return self.field.new(prod)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero algebraic number")
        if self.field.degree == 1:
            return self.field.new([QQ.one / self.coords[0]])
        desc = dup_strip(list(reversed(self.coords)))
        inv = dup_invert(desc, self.field._mod, QQ)
        return self.field.new(list(reversed(inv)))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, AlgNumber):
            if other.field == self.field:
                return self.coords == other.coords
            if self.is_rational() and other.is_rational():
                return self.coords[0] == other.coords[0]
            return False
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        if self.is_rational():
            return hash(('rat', self.coords[0]))
        return hash((self.field, self.coords))

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def is_rational(self) -> bool:
        return all(not c for c in self.coords[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def eval_at(self, value: AlgNumber) -> AlgNumber:
        """Evaluate the coordinate polynomial at `value` (Horner)."""
        acc = value.field.zero()
        for c in reversed(self.coords):
            acc = acc * value + value.field.from_rational(c)
        return acc

    def sort_key(self):
        return tuple(
            (c.numerator, c.denominator) for c in self.coords)

    def to_sympy(self):
        if self.field.degree == 1:
            return sympy.Rational(self.coords[0].numerator,
                                  self.coords[0].denominator)
        ext = self.field._ext
        return sympy.Add(*[
            sympy.Rational(c.numerator, c.denominator) * ext ** k
            for k, c in enumerate(self.coords)])

    def __repr__(self):
        if self.is_rational():
            return str(self.coords[0])
        parts = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                tk = 't' if k == 1 else f't^{k}'
                parts.append(tk if c == 1 else f'{c}*{tk}')
        return '(' + ' + '.join(parts) + ')'


QQ_FIELD = NumberField(Poly(_t, _t, domain=QQ))


# ---------------------------------------------------------------------------
# minimal polynomial, trace, conjugates


def minpoly_of(a: AlgNumber) -> Poly:
    """Monic minimal polynomial of `a` over Q, via a linear-algebra kernel
    on the powers 1, a, a^2, ..."""
    d = a.field.degree
    powers = [a.field.one()]
    for _ in range(d):
        powers.append(powers[-1] * a)
    # find smallest k with 1, a, ..., a^k dependent
    from sympy.polys.matrices import DomainMatrix
    for k in range(1, d + 1):
        rows = [list(powers[j].coords) for j in range(k + 1)]
        M = DomainMatrix(rows, (k + 1, d), QQ)
        ns = M.transpose().nullspace().to_list()
        # nullspace of columns^T: a combination sum c_j a^j = 0
        if ns:
            comb = ns[0]
            # normalize so top coefficient is 1
            top = comb[k]
            if not top:
                continue
            cs = [c / top for c in comb]
            expr = sum(
                sympy.Rational(c.numerator, c.denominator) * _t ** j
                for j, c in enumerate(cs))
            return Poly(expr, _t, domain=QQ)
    raise RuntimeError("minimal polynomial not found")  # pragma: no cover


def trace(a: AlgNumber):
    """Minus the second-leading coefficient of the monic minimal polynomial
    of `a` over Q."""
    m = minpoly_of(a)
    if m.degree() == 0:
        raise ValueError("constant minimal polynomial")
    return -_q(m.all_coeffs()[1]) if m.degree() >= 1 else QQ.zero


def is_traceless(a: AlgNumber) -> bool:
    return trace(a) == QQ.zero


def field_trace(a: AlgNumber):
    """Trace of multiplication by `a` on L/Q: sum of a over all embeddings.

    Equals [L:Q]/deg(minpoly(a)) times trace(a)."""
    p = a.field.power_sums
    s = QQ.zero
    for c, pk in zip(a.coords, p):
        s += c * pk
    return s


def galois_conjugates(a: AlgNumber) -> list[AlgNumber]:
    """sigma(a) for every automorphism of a Galois field."""
    if a.field.automorphisms is None:
        _populate_automorphisms(a.field)
    return [a.eval_at(s) for s in a.field.automorphisms]


# ---------------------------------------------------------------------------
# splitting fields and composites


def _adjoin(exts, cap):
    """Field generated over Q by the algebraic sympy numbers `exts`.

    Returns (NumberField, [AlgNumber images of each ext])."""
    exts = list(exts)
    if not exts:
        return QQ_FIELD, []
    f, _, reps = primitive_element(exts, _t, ex=True, polys=True)
    if f.degree() > cap:
        raise DegreeCapExceeded(
            f"extension degree {f.degree()} exceeds cap {cap}")
    fld = NumberField(f)
    images = [fld.new(list(reversed([_q(c) for c in rep]))) for rep in reps]
    return fld, images


def splitting_field(p, cap: int | None = None):
    """Splitting field of a univariate rational polynomial, with all roots.

    Returns (NumberField L, roots: list[AlgNumber]).  L is Galois over Q and
    carries its automorphisms.  Raises DegreeCapExceeded past the cap.
    """
    cap = DEFAULT.field_cap if cap is None else cap
    p = Poly(p)
    if p.degree() < 1:
        raise ValueError("polynomial must be nonconstant")
    x = p.gens[0]
    p = Poly(p.as_expr(), x, domain=QQ).sqf_part()
    factors = [f for f, _ in p.factor_list()[1]]
    lin = [f for f in factors if f.degree() == 1]
    nonlin = [f for f in factors if f.degree() > 1]
    rat_roots = [-_q(f.all_coeffs()[1]) / _q(f.all_coeffs()[0]) for f in lin]
    if not nonlin:
        return QQ_FIELD, [QQ_FIELD.from_rational(r) for r in rat_roots]

    # iteratively adjoin roots until every nonlinear factor splits; the cap
    # is checked before each adjunction so factorial blow-up aborts early
    gens = []
    fld = QQ_FIELD
    for f in nonlin:
        idx = 0
        while True:
            fp = Poly(f.as_expr(), f.gens[0], domain=fld.domain)
            nonsplit = [g.degree() for g, _ in fp.factor_list()[1]
                        if g.degree() > 1]
            if not nonsplit:
                break
            if fld.degree * min(nonsplit) > cap:
                raise DegreeCapExceeded(
                    f"splitting field degree at least "
                    f"{fld.degree * min(nonsplit)} exceeds cap {cap}")
            if idx >= f.degree():  # pragma: no cover - defensive
                raise RuntimeError("failed to split factor")
            prev_deg = fld.degree
            cand = gens + [sympy.CRootOf(f.as_expr(), idx)]
            idx += 1
            nfld, _ = _adjoin(cand, cap)
            if nfld.degree > prev_deg:
                gens, fld = cand, nfld

    _populate_automorphisms(fld)
    roots = [fld.from_rational(r) for r in rat_roots]
    for f in nonlin:
        roots.extend(_roots_in_field(f, fld))
    return fld, roots


def _roots_in_field(f: Poly, fld: NumberField) -> list[AlgNumber]:
    """Roots of rational univariate f that lie in fld, via factorization."""
    if fld.degree == 1:
        out = []
        for g, _ in Poly(f.as_expr(), f.gens[0], domain=QQ).factor_list()[1]:
            if g.degree() == 1:
                cs = g.all_coeffs()
                out.append(QQ_FIELD.from_rational(-_q(cs[1]) / _q(cs[0])))
        return sorted(out, key=lambda a: a.sort_key())
    fp = Poly(f.as_expr(), f.gens[0], domain=fld.domain)
    out = []
    for g, _ in fp.factor_list()[1]:
        if g.degree() == 1:
            c1, c0 = g.all_coeffs()
            root = -fld.from_dom(fld.domain.convert(c0)) / \
                fld.from_dom(fld.domain.convert(c1))
            out.append(root)
    return sorted(out, key=lambda a: a.sort_key())


def _populate_automorphisms(fld: NumberField):
    if fld.degree == 1:
        return
    images = _roots_in_field(fld.minpoly, fld)
    if len(images) != fld.degree:
        raise NotGalois("splitting field construction is not Galois")
    fld.automorphisms = images


def compose_fields(f1: NumberField, f2: NumberField, cap: int | None = None):
    """Smallest common field of f1 and f2.

    Returns (L, embed1, embed2) where embed_i maps elements by evaluating
    their coordinate polynomial at the image of the old generator."""
    cap = DEFAULT.field_cap if cap is None else cap
    if f1.degree == 1:
        return f2, f2.zero(), f2.gen()
    if f2.degree == 1:
        return f1, f1.gen(), f1.zero()
    if f1 == f2:
        return f1, f1.gen(), f2.gen()
    fld, (g1, g2) = _adjoin([f1._ext, f2._ext], cap)
    return fld, g1, g2


def embed(a: AlgNumber, target: NumberField, gen_image: AlgNumber) -> AlgNumber:
    """Image of `a` in `target`, given the image of a's field generator."""
    if a.field.degree == 1:
        return target.from_rational(a.coords[0])
    return a.eval_at(gen_image)
